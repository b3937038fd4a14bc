//! Machine words used as relation rows.
//!
//! A relation over `n` nodes stores one word per node; bit `v` of row `u`
//! is set iff `(u, v)` is in the relation. The word width bounds the
//! carrier, so `u8` rows handle up to 8 nodes and `u64` rows up to 64.

use std::fmt::Debug;
use std::hash::Hash;

use num_traits::PrimInt;

/// Unsigned integer usable as a bitset row.
pub trait RowWord: PrimInt + Debug + Hash + Default + Send + Sync + 'static {
    /// Number of bits, which is also the largest carrier this word supports.
    const BITS: usize;

    #[inline]
    fn bit(i: usize) -> Self {
        Self::one().unsigned_shl(i as u32)
    }

    #[inline]
    fn has(self, i: usize) -> bool {
        (self & Self::bit(i)) != Self::zero()
    }

    /// Mask with the low `n` bits set.
    #[inline]
    fn low_mask(n: usize) -> Self {
        if n >= Self::BITS {
            !Self::zero()
        } else {
            Self::bit(n) - Self::one()
        }
    }

    /// Iterate the indices of set bits in ascending order.
    #[inline]
    fn ones(self) -> Ones<Self> {
        Ones(self)
    }
}

macro_rules! row_word {
    ($($t:ty),*) => {
        $(impl RowWord for $t {
            const BITS: usize = <$t>::BITS as usize;
        })*
    };
}

row_word!(u8, u16, u32, u64);

/// Iterator over set bit positions, lowest first.
#[derive(Clone, Copy, Debug)]
pub struct Ones<W>(W);

impl<W: RowWord> Iterator for Ones<W> {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == W::zero() {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 = self.0 & (self.0 - W::one());
        Some(i)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let c = self.0.count_ones() as usize;
        (c, Some(c))
    }
}
