//! Closed-form passage from the Betti table of a `d`-dimensional complex to
//! the Betti table of its `(d-1)`-skeleton.
//!
//! Only the table of `k[Δ]` together with `n` and `d` is needed. The number
//! of top-dimensional faces is recovered from the table first:
//!
//! ```text
//! f_d = Σ_i (-1)^(n+d+i+1) Σ_{j >= n-d-1} C(j, n-d-1) β_{i,j}
//! ```
//!
//! and the skeleton table is then
//!
//! ```text
//! β_{i,j}(skel) = β_{i,j}                                     j <= d+i-1
//! β_{i,j}(skel) = β_{i,d+i} - β_{i-1,d+i} + C(n-d-1, i-1) δ    j  = d+i
//! β_{i,j}(skel) = 0                                           j >= d+i+1
//! ```
//!
//! with `δ = f_d` for `1 <= i <= n-d` and `δ = 0` beyond.

use crate::betti::{self, BettiTable, Convention, DepthInfo};
use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::linalg::Prime;
use crate::poly::binomial;

/// A ring-convention Betti table of a complex of known dimension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransferInput {
    table: BettiTable,
    dim: usize,
}

impl TransferInput {
    pub fn new(table: BettiTable, dim: usize) -> Result<Self> {
        let table = table.to_convention(Convention::Ring);
        if dim < 1 {
            return Err(Error::TransferPrecondition(format!("dimension {dim} must be at least 1")));
        }
        if table.n() < dim + 1 {
            return Err(Error::TransferPrecondition(format!(
                "n = {} is too small for a complex of dimension {dim}",
                table.n()
            )));
        }
        if table.get(0, 0) != 1 {
            return Err(Error::InconsistentTable { i: 0, j: 0, reason: "β_{0,0} must be 1".into() });
        }
        if let Some((i, j, _)) = table.iter().find(|&(i, j, _)| i == 0 && j != 0) {
            return Err(Error::InconsistentTable { i, j, reason: "β_{0,j} must vanish for j > 0".into() });
        }
        Ok(TransferInput { table, dim })
    }

    /// Reads the dimension off the table itself: the Hilbert numerator equals
    /// `h(t) (1-t)^(n-d-1)` with `h(1) ≠ 0`.
    pub fn with_inferred_dimension(table: BettiTable) -> Result<Self> {
        let dim = infer_dimension(&table)?;
        Self::new(table, dim)
    }

    pub fn table(&self) -> &BettiTable {
        &self.table
    }

    pub fn n(&self) -> usize {
        self.table.n()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }
}

/// Dimension of a complex recovered from its Betti table.
pub fn infer_dimension(table: &BettiTable) -> Result<usize> {
    let numerator = table.hilbert_numerator();
    let order = numerator.order_at_one().ok_or_else(|| Error::InconsistentTable {
        i: 0,
        j: 0,
        reason: "Hilbert numerator vanishes".into(),
    })?;
    let n = table.n();
    if order > n {
        return Err(Error::InconsistentTable {
            i: 0,
            j: 0,
            reason: format!("Hilbert numerator has a root of order {order} at 1 but n = {n}"),
        });
    }
    let dim = n as isize - order as isize - 1;
    if dim < 0 {
        return Err(Error::TransferPrecondition("table describes the complex {∅}".into()));
    }
    Ok(dim as usize)
}

/// Number of `d`-dimensional faces, computed from the Betti table alone.
pub fn top_face_count(input: &TransferInput) -> Result<u64> {
    let n = input.n() as i64;
    let d = input.dim as i64;
    let k = n - d - 1;
    let mut total: i128 = 0;
    for (i, j, b) in input.table.iter() {
        if (j as i64) < k {
            continue;
        }
        let sign = if (n + d + i as i64 + 1) % 2 == 0 { 1 } else { -1 };
        total += sign * binomial(j as i64, k) * b as i128;
    }
    if total < 0 {
        return Err(Error::InconsistentTable {
            i: 0,
            j: 0,
            reason: format!("reconstructed top face count {total} is negative"),
        });
    }
    Ok(total as u64)
}

/// Ring-convention Betti table of the `(d-1)`-skeleton.
pub fn transfer(input: &TransferInput) -> Result<BettiTable> {
    let n = input.n();
    let d = input.dim;
    let top = top_face_count(input)? as i128;
    let table = &input.table;
    let mut entries = vec![((0, 0), 1u64)];

    for (i, j, b) in table.iter() {
        if i >= 1 && j < d + i {
            entries.push(((i, j), b));
        }
    }
    for i in 1..=n {
        let j = d + i;
        let delta = if i <= n - d { top } else { 0 };
        let value = table.get(i, j) as i128 - table.get(i - 1, j) as i128
            + binomial((n - d - 1) as i64, i as i64 - 1) * delta;
        if value < 0 {
            return Err(Error::InconsistentTable {
                i,
                j,
                reason: format!("computed skeleton entry {value} is negative"),
            });
        }
        if value > 0 {
            entries.push(((i, j), value as u64));
        }
    }
    Ok(BettiTable::new(table.field(), Convention::Ring, n, entries))
}

/// Tables of the `(d-1)`-, ..., `(d-s)`-skeletons, each obtained from the
/// previous one. With `steps = 0` the input table is returned alone.
pub fn transfer_chain(input: &TransferInput, steps: usize) -> Result<Vec<BettiTable>> {
    if steps == 0 {
        return Ok(vec![input.table.clone()]);
    }
    if steps > input.dim {
        return Err(Error::TransferPrecondition(format!(
            "{steps} steps requested for a complex of dimension {}",
            input.dim
        )));
    }
    let mut out = Vec::with_capacity(steps);
    let mut current = input.clone();
    for step in 1..=steps {
        let wrap = |e| Error::TransferStep { step, source: Box::new(e) };
        let next = transfer(&current).map_err(wrap)?;
        out.push(next.clone());
        if step < steps {
            current = TransferInput::new(next, current.dim - 1).map_err(wrap)?;
        }
    }
    Ok(out)
}

/// Projective dimensions of a complex and its `(d-1)`-skeleton, each
/// computed directly.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SkeletonComparison {
    pub complex: DepthInfo,
    pub skeleton: DepthInfo,
}

impl SkeletonComparison {
    pub fn compute(complex: &SimplicialComplex, p: Prime) -> Result<Self> {
        let dim = complex.dimension();
        if dim < 1 {
            return Err(Error::TransferPrecondition(format!("dimension {dim} must be at least 1")));
        }
        let skeleton = complex.skeleton(dim - 1)?;
        Ok(SkeletonComparison {
            complex: betti::depth_and_cm(complex, p)?,
            skeleton: betti::depth_and_cm(&skeleton, p)?,
        })
    }

    /// `pd(k[Δ^(d-1)]) <= 1 + pd(k[Δ])`.
    pub fn pd_bound_holds(&self) -> bool {
        self.skeleton.projective_dimension <= 1 + self.complex.projective_dimension
    }

    /// Cohen-Macaulayness passes to the skeleton.
    pub fn cm_inherited(&self) -> bool {
        !self.complex.cohen_macaulay || self.skeleton.cohen_macaulay
    }
}

pub fn pd_bound_check(complex: &SimplicialComplex, p: Prime) -> Result<bool> {
    Ok(SkeletonComparison::compute(complex, p)?.pd_bound_holds())
}

pub fn cm_inheritance_check(complex: &SimplicialComplex, p: Prime) -> Result<bool> {
    Ok(SkeletonComparison::compute(complex, p)?.cm_inherited())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::betti::betti_numbers;
    use crate::fixtures;

    fn ring(c: &SimplicialComplex, p: Prime) -> BettiTable {
        betti_numbers(c, p, Convention::Ring).unwrap()
    }

    #[test]
    fn rp2_top_faces_from_table() {
        let input = TransferInput::new(ring(&fixtures::rp2(), Prime::THREE), 2).unwrap();
        // C(3,3)*10 - C(4,3)*15 + C(5,3)*6
        assert_eq!(top_face_count(&input).unwrap(), 10);
    }

    #[test]
    fn rp2_skeleton_table() {
        let input = TransferInput::new(ring(&fixtures::rp2(), Prime::THREE), 2).unwrap();
        let skel = transfer(&input).unwrap();
        let got: Vec<_> = skel.iter().collect();
        assert_eq!(got, vec![(0, 0, 1), (1, 3, 20), (2, 4, 45), (3, 5, 36), (4, 6, 10)]);
        assert_eq!(skel, ring(&fixtures::rp2().skeleton(1).unwrap(), Prime::THREE));
    }

    #[test]
    fn simplex_to_boundary() {
        let s = SimplicialComplex::simplex(3).unwrap();
        let input = TransferInput::new(ring(&s, Prime::TWO), 2).unwrap();
        assert_eq!(top_face_count(&input).unwrap(), 1);
        let got: Vec<_> = transfer(&input).unwrap().iter().collect();
        assert_eq!(got, vec![(0, 0, 1), (1, 3, 1)]);
    }

    #[test]
    fn chain_down_to_vertices() {
        let t = fixtures::rp2();
        let input = TransferInput::new(ring(&t, Prime::TWO), 2).unwrap();
        let chain = transfer_chain(&input, 2).unwrap();
        assert_eq!(chain.len(), 2);
        assert_eq!(chain[0], ring(&t.skeleton(1).unwrap(), Prime::TWO));
        assert_eq!(chain[1], ring(&t.skeleton(0).unwrap(), Prime::TWO));
        assert_eq!(transfer_chain(&input, 0).unwrap(), vec![input.table().clone()]);
        assert!(transfer_chain(&input, 3).is_err());
    }

    #[test]
    fn dimension_is_recoverable_from_the_table() {
        let t = fixtures::rp2();
        for p in [Prime::TWO, Prime::THREE] {
            assert_eq!(infer_dimension(&ring(&t, p)).unwrap(), 2);
            assert_eq!(infer_dimension(&ring(&t.skeleton(1).unwrap(), p)).unwrap(), 1);
        }
        let s = SimplicialComplex::simplex(5).unwrap();
        assert_eq!(infer_dimension(&ring(&s, Prime::TWO)).unwrap(), 4);
    }

    #[test]
    fn malformed_tables_are_rejected() {
        let p = Prime::TWO;
        let no_unit = BettiTable::new(p, Convention::Ring, 4, [((1, 2), 1)]);
        assert!(matches!(TransferInput::new(no_unit, 1), Err(Error::InconsistentTable { .. })));
        let too_small = BettiTable::new(p, Convention::Ring, 2, [((0, 0), 1)]);
        assert!(matches!(TransferInput::new(too_small, 2), Err(Error::TransferPrecondition(_))));
        // five cubic generators on four elements would need -15 edges
        let bogus = BettiTable::new(p, Convention::Ring, 4, [((0, 0), 1), ((1, 3), 5)]);
        let input = TransferInput::new(bogus, 1).unwrap();
        assert!(matches!(top_face_count(&input), Err(Error::InconsistentTable { .. })));
        assert!(matches!(transfer(&input), Err(Error::InconsistentTable { .. })));
    }

    #[test]
    fn pd_bound_and_cm_on_rp2() {
        let t = fixtures::rp2();
        let f3 = SkeletonComparison::compute(&t, Prime::THREE).unwrap();
        assert_eq!(f3.skeleton.projective_dimension, 4);
        assert!(f3.pd_bound_holds() && f3.cm_inherited());
        assert!(f3.complex.cohen_macaulay && f3.skeleton.cohen_macaulay);
        let f2 = SkeletonComparison::compute(&t, Prime::TWO).unwrap();
        assert!(!f2.complex.cohen_macaulay);
        assert!(f2.pd_bound_holds() && f2.cm_inherited());

        let s = SimplicialComplex::simplex(3).unwrap();
        let c = SkeletonComparison::compute(&s, Prime::TWO).unwrap();
        assert_eq!((c.complex.projective_dimension, c.skeleton.projective_dimension), (0, 1));
        assert!(pd_bound_check(&s, Prime::TWO).unwrap());
        assert!(cm_inheritance_check(&s, Prime::TWO).unwrap());
    }
}
