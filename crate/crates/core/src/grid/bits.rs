//! Fixed-width bitboards used by the propagation kernel.
//!
//! Cells are packed row-major from bit 0. Two widths exist: `u128` for grids
//! of at most 128 cells (the hot path of every exhaustive search) and
//! [`WideBits`] for everything up to [`MAX_CELLS`].

use std::ops::{BitAnd, BitAndAssign, BitOr, BitOrAssign, Not};

/// Hard cap on the number of cells in a grid.
pub const MAX_CELLS: usize = 1024;

const WORDS: usize = MAX_CELLS / 64;

pub trait Board:
    Copy
    + Eq
    + BitAnd<Output = Self>
    + BitAndAssign
    + BitOr<Output = Self>
    + BitOrAssign
    + Not<Output = Self>
{
    const CAPACITY: usize;

    fn empty() -> Self;
    /// Moves bit `i` to bit `i + k`; bits pushed past the top are dropped.
    fn shl(self, k: usize) -> Self;
    /// Moves bit `i` to bit `i - k`; bits pushed below zero are dropped.
    fn shr(self, k: usize) -> Self;
    fn is_empty(&self) -> bool;
    fn get(&self, i: usize) -> bool;
    fn set(&mut self, i: usize);
    fn clear(&mut self, i: usize);
    fn count(&self) -> usize;
    fn to_wide(self) -> WideBits;
    /// Narrowing conversion; bits beyond `CAPACITY` are dropped.
    fn from_wide(w: WideBits) -> Self;
}

impl Board for u128 {
    const CAPACITY: usize = 128;

    #[inline]
    fn empty() -> Self {
        0
    }
    #[inline]
    fn shl(self, k: usize) -> Self {
        if k >= 128 {
            0
        } else {
            self << k
        }
    }
    #[inline]
    fn shr(self, k: usize) -> Self {
        if k >= 128 {
            0
        } else {
            self >> k
        }
    }
    #[inline]
    fn is_empty(&self) -> bool {
        *self == 0
    }
    #[inline]
    fn get(&self, i: usize) -> bool {
        (self >> i) & 1 == 1
    }
    #[inline]
    fn set(&mut self, i: usize) {
        *self |= 1u128 << i;
    }
    #[inline]
    fn clear(&mut self, i: usize) {
        *self &= !(1u128 << i);
    }
    #[inline]
    fn count(&self) -> usize {
        self.count_ones() as usize
    }
    #[inline]
    fn to_wide(self) -> WideBits {
        WideBits::from_u128(self)
    }
    #[inline]
    fn from_wide(w: WideBits) -> Self {
        w.low_u128()
    }
}

/// A `MAX_CELLS`-bit board.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct WideBits([u64; WORDS]);

impl WideBits {
    pub fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().flat_map(|(w, &word)| {
            let mut rest = word;
            std::iter::from_fn(move || {
                if rest == 0 {
                    None
                } else {
                    let b = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    Some(w * 64 + b)
                }
            })
        })
    }

    /// Low 128 bits. Callers must know no higher bit is set.
    pub fn low_u128(&self) -> u128 {
        (self.0[0] as u128) | ((self.0[1] as u128) << 64)
    }

    pub fn from_u128(x: u128) -> Self {
        let mut w = [0u64; WORDS];
        w[0] = x as u64;
        w[1] = (x >> 64) as u64;
        WideBits(w)
    }
}

impl std::fmt::Debug for WideBits {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_set().entries(self.iter_ones()).finish()
    }
}

impl BitAnd for WideBits {
    type Output = Self;
    #[inline]
    fn bitand(mut self, rhs: Self) -> Self {
        self &= rhs;
        self
    }
}

impl BitAndAssign for WideBits {
    #[inline]
    fn bitand_assign(&mut self, rhs: Self) {
        for (a, b) in self.0.iter_mut().zip(rhs.0) {
            *a &= b;
        }
    }
}

impl BitOr for WideBits {
    type Output = Self;
    #[inline]
    fn bitor(mut self, rhs: Self) -> Self {
        self |= rhs;
        self
    }
}

impl BitOrAssign for WideBits {
    #[inline]
    fn bitor_assign(&mut self, rhs: Self) {
        for (a, b) in self.0.iter_mut().zip(rhs.0) {
            *a |= b;
        }
    }
}

impl Not for WideBits {
    type Output = Self;
    #[inline]
    fn not(mut self) -> Self {
        for a in self.0.iter_mut() {
            *a = !*a;
        }
        self
    }
}

impl Board for WideBits {
    const CAPACITY: usize = MAX_CELLS;

    fn empty() -> Self {
        WideBits([0; WORDS])
    }

    fn shl(self, k: usize) -> Self {
        if k >= MAX_CELLS {
            return Self::empty();
        }
        let (ws, bs) = (k / 64, k % 64);
        let mut out = [0u64; WORDS];
        for i in (ws..WORDS).rev() {
            let src = i - ws;
            let mut v = self.0[src] << bs;
            if bs > 0 && src > 0 {
                v |= self.0[src - 1] >> (64 - bs);
            }
            out[i] = v;
        }
        WideBits(out)
    }

    fn shr(self, k: usize) -> Self {
        if k >= MAX_CELLS {
            return Self::empty();
        }
        let (ws, bs) = (k / 64, k % 64);
        let mut out = [0u64; WORDS];
        for (i, o) in out.iter_mut().enumerate().take(WORDS - ws) {
            let src = i + ws;
            let mut v = self.0[src] >> bs;
            if bs > 0 && src + 1 < WORDS {
                v |= self.0[src + 1] << (64 - bs);
            }
            *o = v;
        }
        WideBits(out)
    }

    fn is_empty(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }

    #[inline]
    fn get(&self, i: usize) -> bool {
        (self.0[i / 64] >> (i % 64)) & 1 == 1
    }

    #[inline]
    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1u64 << (i % 64);
    }

    #[inline]
    fn clear(&mut self, i: usize) {
        self.0[i / 64] &= !(1u64 << (i % 64));
    }

    fn count(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }

    fn to_wide(self) -> WideBits {
        self
    }

    fn from_wide(w: WideBits) -> Self {
        w
    }
}
