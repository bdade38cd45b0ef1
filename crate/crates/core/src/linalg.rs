//! Dense linear algebra over GF(p) and reduced simplicial homology.

use std::fmt;

use crate::bits::{self, Mask};
use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};

/// Largest supported characteristic (exclusive).
pub const FIELD_BOUND: u64 = 1 << 16;

/// A prime `p < 2^16`, naming the field GF(p).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Prime(u32);

impl Prime {
    pub const TWO: Prime = Prime(2);
    pub const THREE: Prime = Prime(3);
    pub const FIVE: Prime = Prime(5);

    pub fn new(p: u64) -> Result<Self> {
        if p >= FIELD_BOUND {
            return Err(Error::UnsupportedField(p));
        }
        let composite = p < 2 || (2..).take_while(|d| d * d <= p).any(|d| p.is_multiple_of(d));
        if composite {
            return Err(Error::NotPrime(p));
        }
        Ok(Prime(p as u32))
    }

    pub fn get(self) -> u32 {
        self.0
    }

    fn inverse(self, a: u32) -> u32 {
        // Fermat: a^(p-2)
        let p = self.0 as u64;
        let (mut base, mut exp, mut acc) = (a as u64 % p, p - 2, 1u64);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % p;
            }
            base = base * base % p;
            exp >>= 1;
        }
        acc as u32
    }
}

impl fmt::Display for Prime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// A dense `rows x cols` matrix over GF(p), row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GfMatrix {
    p: Prime,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl GfMatrix {
    pub fn new(p: Prime, rows: usize, cols: usize, data: Vec<u32>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::Shape(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        let data = data.into_iter().map(|x| x % p.0).collect();
        Ok(GfMatrix { p, rows, cols, data })
    }

    /// Builds a matrix from signed integer entries, reducing them mod p.
    pub fn from_i64(p: Prime, rows: usize, cols: usize, data: &[i64]) -> Result<Self> {
        let m = p.0 as i64;
        Self::new(p, rows, cols, data.iter().map(|x| x.rem_euclid(m) as u32).collect())
    }

    pub fn zeros(p: Prime, rows: usize, cols: usize) -> Self {
        GfMatrix { p, rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(p: Prime, size: usize) -> Self {
        let mut m = Self::zeros(p, size, size);
        for i in 0..size {
            m.data[i * size + i] = 1;
        }
        m
    }

    pub fn field(&self) -> Prime {
        self.p
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn get(&self, row: usize, col: usize) -> u32 {
        self.data[row * self.cols + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: u32) {
        self.data[row * self.cols + col] = value % self.p.0;
    }

    pub fn column(&self, col: usize) -> Vec<u32> {
        (0..self.rows).map(|r| self.get(r, col)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn mul(&self, other: &GfMatrix) -> Result<GfMatrix> {
        if self.cols != other.rows || self.p != other.p {
            return Err(Error::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let p = self.p.0 as u64;
        let mut out = GfMatrix::zeros(self.p, self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k) as u64;
                if a == 0 {
                    continue;
                }
                for c in 0..other.cols {
                    let idx = r * other.cols + c;
                    out.data[idx] = ((out.data[idx] as u64 + a * other.get(k, c) as u64) % p) as u32;
                }
            }
        }
        Ok(out)
    }

    /// Rank over GF(p) by Gaussian elimination.
    pub fn rank(&self) -> usize {
        rank_in_place(self.p, self.rows, self.cols, &mut self.data.clone())
    }

    /// Permutes rows and columns: row `r` of the result is row `row_perm[r]`.
    pub fn permuted(&self, row_perm: &[usize], col_perm: &[usize]) -> GfMatrix {
        let mut out = GfMatrix::zeros(self.p, self.rows, self.cols);
        for (r, &src_r) in row_perm.iter().enumerate() {
            for (c, &src_c) in col_perm.iter().enumerate() {
                out.data[r * self.cols + c] = self.get(src_r, src_c);
            }
        }
        out
    }
}

fn rank_in_place(p: Prime, rows: usize, cols: usize, a: &mut [u32]) -> usize {
    let modulus = p.0 as u64;
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(pivot) = (rank..rows).find(|&r| a[r * cols + col] != 0) else {
            continue;
        };
        if pivot != rank {
            for c in col..cols {
                a.swap(pivot * cols + c, rank * cols + c);
            }
        }
        let inv = p.inverse(a[rank * cols + col]) as u64;
        for c in col..cols {
            a[rank * cols + c] = (a[rank * cols + c] as u64 * inv % modulus) as u32;
        }
        for r in rank + 1..rows {
            let factor = a[r * cols + col] as u64;
            if factor == 0 {
                continue;
            }
            for c in col..cols {
                let sub = factor * a[rank * cols + c] as u64 % modulus;
                let cur = a[r * cols + c] as u64;
                a[r * cols + c] = ((cur + modulus - sub) % modulus) as u32;
            }
        }
        rank += 1;
    }
    rank
}

/// Position of `elem` inside `face`, as the exponent of the boundary sign:
/// the number of elements of `face` smaller than `elem`.
#[inline]
fn sign_exponent(elem: usize, face: Mask) -> u32 {
    (face & ((1u32 << elem) - 1)).count_ones()
}

/// Boundary map between two consecutive face lists, both in colex order.
fn boundary_between(p: Prime, lower: &[Mask], upper: &[Mask]) -> GfMatrix {
    let mut m = GfMatrix::zeros(p, lower.len(), upper.len());
    let minus_one = p.0 - 1;
    for (col, &face) in upper.iter().enumerate() {
        for elem in bits::elements(face) {
            let row = lower
                .binary_search(&(face & !(1 << elem)))
                .expect("boundary face missing from the lower face list");
            let value = if sign_exponent(elem, face).is_multiple_of(2) { 1 } else { minus_one };
            m.data[row * upper.len() + col] = value;
        }
    }
    m
}

/// The boundary map `δ_i` from `i`-faces to `(i-1)`-faces of `complex`.
///
/// Columns are indexed by `i`-faces and rows by `(i-1)`-faces, both in
/// colexicographic order. Outside `-1..=dim` the map is empty with the
/// shape implied by the face counts.
pub fn boundary_matrix(complex: &SimplicialComplex, i: isize, p: u64) -> Result<GfMatrix> {
    let p = Prime::new(p)?;
    let upper = complex.faces_of_dim(i);
    let lower = complex.faces_of_dim(i - 1);
    Ok(boundary_between(p, &lower, &upper))
}

/// Dimensions of `H̃_i(Δ; GF(p))` for `i = -1, ..., dim Δ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyProfile {
    pub p: Prime,
    dims: Vec<u64>,
}

impl HomologyProfile {
    /// `dim H̃_i`; zero outside the stored range.
    pub fn get(&self, i: isize) -> u64 {
        if i < -1 {
            return 0;
        }
        self.dims.get((i + 1) as usize).copied().unwrap_or(0)
    }

    /// Entries starting at `H̃_{-1}`.
    pub fn as_slice(&self) -> &[u64] {
        &self.dims
    }

    /// Alternating sum `Σ (-1)^i dim H̃_i`.
    pub fn euler_characteristic(&self) -> i64 {
        self.dims
            .iter()
            .enumerate()
            .map(|(k, &d)| if k % 2 == 0 { -(d as i64) } else { d as i64 })
            .sum()
    }
}

/// Reduced homology ranks from faces grouped by cardinality (entry `k` holds
/// the faces with `k` elements). Entry `k` of the result is `dim H̃_{k-1}`.
pub(crate) fn homology_from_faces(p: Prime, faces: &[Vec<Mask>]) -> Vec<u64> {
    let levels = faces.len();
    // ranks[k] = rank of the boundary from cardinality k to k-1
    let mut ranks = vec![0usize; levels + 1];
    for k in 1..levels {
        ranks[k] = boundary_between(p, &faces[k - 1], &faces[k]).rank();
    }
    (0..levels)
        .map(|k| (faces[k].len() - ranks[k] - ranks[k + 1]) as u64)
        .collect()
}

/// Reduced homology of `complex` over GF(p).
pub fn reduced_homology(complex: &SimplicialComplex, p: u64) -> Result<HomologyProfile> {
    let p = Prime::new(p)?;
    Ok(HomologyProfile { p, dims: homology_from_faces(p, &complex.faces_by_dim()) })
}
