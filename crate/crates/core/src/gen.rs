//! Seeded generators for random complexes and matroids used by the
//! property suites and the `check --random` mode.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bits::{self, Mask};
use crate::complex::SimplicialComplex;
use crate::linalg::{GfMatrix, Prime};
use crate::matroid::Matroid;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn random_subset<R: Rng>(rng: &mut R, n: usize, size: usize) -> Mask {
    let mut elems: Vec<usize> = (0..n).collect();
    for k in (1..n).rev() {
        elems.swap(k, rng.gen_range(0..=k));
    }
    elems[..size].iter().fold(0, |acc, e| acc | (1 << e))
}

/// A random complex on `{1,...,n}` of dimension at least 1.
///
/// Between one and six facets are drawn with sizes up to five; the first
/// one has at least two elements. Some ground elements may end up outside
/// every facet.
pub fn random_complex<R: Rng>(rng: &mut R, n: usize) -> SimplicialComplex {
    assert!(n >= 2, "dimension one needs two elements");
    let max_size = n.min(5);
    let count = rng.gen_range(1..=6);
    let mut facets = Vec::with_capacity(count);
    for k in 0..count {
        let lo = if k == 0 { 2 } else { 1 };
        let size = rng.gen_range(lo..=max_size);
        facets.push(random_subset(rng, n, size));
    }
    SimplicialComplex::from_masks(n, facets).expect("random facets lie in the ground set")
}

/// `count` complexes with ground sets of size `3..=max_n`.
pub fn complex_corpus(seed: u64, count: usize, max_n: usize) -> Vec<SimplicialComplex> {
    let mut rng = rng(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(3..=max_n);
            random_complex(&mut rng, n)
        })
        .collect()
}

/// A random matroid on `{1,...,n}` of rank at least 1.
///
/// Most draws are column matroids of random matrices over GF(2), GF(3) or
/// GF(5), which brings in loops, parallel classes and coloops; the rest are
/// uniform.
pub fn random_matroid<R: Rng>(rng: &mut R, n: usize) -> Matroid {
    loop {
        if rng.gen_bool(0.2) {
            let r = rng.gen_range(1..=n);
            return Matroid::uniform(r, n).expect("valid uniform parameters");
        }
        let p = [Prime::TWO, Prime::THREE, Prime::FIVE][rng.gen_range(0..3)];
        let rows = rng.gen_range(1..=n);
        let zero_bias = rng.gen_range(0.0..0.5);
        let data: Vec<u32> = (0..rows * n)
            .map(|_| if rng.gen_bool(zero_bias) { 0 } else { rng.gen_range(0..p.get()) })
            .collect();
        let matrix = GfMatrix::new(p, rows, n, data).expect("shape matches");
        let rank = matrix.rank();
        if rank == 0 {
            continue;
        }
        let bases: Vec<Mask> = bits::subsets_of_size(bits::full(n), rank)
            .filter(|&s| column_rank(&matrix, s) == rank)
            .collect();
        return Matroid::from_masks(n, bases).expect("column matroids satisfy exchange");
    }
}

fn column_rank(matrix: &GfMatrix, cols: Mask) -> usize {
    let (rows, _) = matrix.shape();
    let picked: Vec<usize> = bits::elements(cols).collect();
    let mut data = Vec::with_capacity(rows * picked.len());
    for r in 0..rows {
        for &c in &picked {
            data.push(matrix.get(r, c));
        }
    }
    GfMatrix::new(matrix.field(), rows, picked.len(), data).expect("shape matches").rank()
}

/// `count` matroids with ground sets of size `2..=max_n`.
pub fn matroid_corpus(seed: u64, count: usize, max_n: usize) -> Vec<Matroid> {
    let mut rng = rng(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(2..=max_n);
            random_matroid(&mut rng, n)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpora_are_reproducible() {
        assert_eq!(complex_corpus(7, 20, 8), complex_corpus(7, 20, 8));
        assert_eq!(matroid_corpus(7, 10, 7), matroid_corpus(7, 10, 7));
    }

    #[test]
    fn complexes_have_positive_dimension() {
        for c in complex_corpus(1, 100, 8) {
            assert!(c.dimension() >= 1);
            assert!(c.ground_size() <= 8);
        }
    }

    #[test]
    fn matroids_have_positive_rank() {
        for m in matroid_corpus(3, 50, 8) {
            assert!(m.rank() >= 1 && m.rank() <= m.n());
        }
    }
}
