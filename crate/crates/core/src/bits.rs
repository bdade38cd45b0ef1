//! Subsets of a ground set `{1,...,n}` encoded as `u32` bitmasks.
//!
//! Label `v` (1-based) lives in bit `v - 1`. Numeric order on masks of a
//! fixed cardinality is the colexicographic order on the subsets, which is
//! the canonical face order used throughout the crate.

use crate::error::{Error, Result};

/// A subset of the ground set.
pub type Mask = u32;

/// Largest ground set representable by a [`Mask`].
pub const MAX_GROUND: usize = 32;

#[inline]
pub fn card(mask: Mask) -> usize {
    mask.count_ones() as usize
}

#[inline]
pub fn is_subset(a: Mask, b: Mask) -> bool {
    a & !b == 0
}

/// Mask of the full ground set `{1,...,n}`.
pub fn full(n: usize) -> Mask {
    debug_assert!(n <= MAX_GROUND);
    if n >= 32 {
        u32::MAX
    } else {
        (1u32 << n) - 1
    }
}

/// Builds a mask from 1-based labels, checking each against `n`.
pub fn from_labels<I>(labels: I, n: usize) -> Result<Mask>
where
    I: IntoIterator,
    I::Item: std::borrow::Borrow<usize>,
{
    let mut mask = 0;
    for label in labels {
        let label = *std::borrow::Borrow::<usize>::borrow(&label);
        if label == 0 || label > n || label > MAX_GROUND {
            return Err(Error::InvalidGroundSet { label, n });
        }
        mask |= 1 << (label - 1);
    }
    Ok(mask)
}

/// 1-based labels of `mask`, ascending.
pub fn labels(mask: Mask) -> Vec<usize> {
    elements(mask).map(|bit| bit + 1).collect()
}

/// 0-based bit positions of `mask`, ascending.
pub fn elements(mut mask: Mask) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            return None;
        }
        let bit = mask.trailing_zeros() as usize;
        mask &= mask - 1;
        Some(bit)
    })
}

/// All submasks of `mask`, including `0` and `mask` itself, in increasing
/// numeric order.
pub fn submasks(mask: Mask) -> impl Iterator<Item = Mask> {
    let mut next = Some(0u32);
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == mask {
            None
        } else {
            Some((cur.wrapping_sub(mask)) & mask)
        };
        Some(cur)
    })
}

/// Submasks of `mask` of cardinality exactly `k`, in increasing numeric order.
pub fn subsets_of_size(mask: Mask, k: usize) -> impl Iterator<Item = Mask> {
    submasks(mask).filter(move |s| card(*s) == k)
}

/// Formats a mask as `{1,3,4}`.
pub fn show(mask: Mask) -> String {
    let inner: Vec<String> = labels(mask).iter().map(|l| l.to_string()).collect();
    format!("{{{}}}", inner.join(","))
}

/// Keeps only inclusion-maximal masks, returned in increasing numeric order.
pub fn maximal(mut masks: Vec<Mask>) -> Vec<Mask> {
    masks.sort_unstable_by(|a, b| card(*b).cmp(&card(*a)).then(a.cmp(b)));
    masks.dedup();
    let mut kept: Vec<Mask> = Vec::with_capacity(masks.len());
    for m in masks {
        if !kept.iter().any(|k| is_subset(m, *k)) {
            kept.push(m);
        }
    }
    kept.sort_unstable();
    kept
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn submask_enumeration_is_complete_and_ordered() {
        let all: Vec<Mask> = submasks(0b1011).collect();
        assert_eq!(all, vec![0b0000, 0b0001, 0b0010, 0b0011, 0b1000, 0b1001, 0b1010, 0b1011]);
        assert_eq!(submasks(0).collect::<Vec<_>>(), vec![0]);
    }

    #[test]
    fn labels_round_trip() {
        let m = from_labels([1usize, 3, 4], 4).unwrap();
        assert_eq!(m, 0b1101);
        assert_eq!(labels(m), vec![1, 3, 4]);
        assert_eq!(show(m), "{1,3,4}");
        assert!(matches!(from_labels([5usize], 4), Err(Error::InvalidGroundSet { label: 5, n: 4 })));
        assert!(from_labels([0usize], 4).is_err());
    }

    #[test]
    fn maximal_drops_dominated_sets() {
        assert_eq!(maximal(vec![0b011, 0b110, 0b001, 0b011]), vec![0b011, 0b110]);
        assert_eq!(maximal(vec![0]), vec![0]);
    }
}
