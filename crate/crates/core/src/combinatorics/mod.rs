//! Sequence identities, word and permutation encodings of solutions.

mod perm;
mod sequences;
mod words;

pub use perm::{
    avoids_schroder_patterns, contains_pattern, contains_pattern_in, format_word, parse_word,
    perm_decode, perm_encode, square_pattern_report, Perm, SquareEncoding, SquarePatternReport,
};
pub use sequences::{
    alpha_2row_even, alpha_2row_even_recurrence, alpha_2row_odd_conjecture, alpha_path_formula,
    beta_general_formula, beta_path_formulas, clean_column_bucket_formula, fibonacci, schroder,
    ternary_avoiding, ternary_containing, BetaPathFormulas, CheckStatus, SequenceCheck,
};
pub use words::{
    alpha_upper_bounds, check_3row_even_constraints, classify_clean_columns, three_row_word_report,
    word_encode_3rows, CleanColumnReport, ColWord, ThreeRowWordReport, UpperBoundReport,
};
