//! Graded Betti numbers of Stanley-Reisner rings via Hochster's formula,
//! Betti tables, and the invariants read off them.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt::{self, Write as _};
use std::sync::{Arc, Mutex};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bits::{self, Mask};
use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::linalg::{self, Prime};
use crate::poly::Poly;

/// Largest ground set accepted by [`hochster`].
pub const HOCHSTER_CAP: usize = 20;

/// Whether a table describes the ring `k[Δ] = S/I_Δ` or the ideal `I_Δ`.
///
/// The two differ by a shift in homological degree:
/// `β_{i,j}(S/I) = β_{i-1,j}(I)` for `i >= 1`, and the ring has the extra
/// entry `β_{0,0} = 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Convention {
    Ring,
    Ideal,
}

impl fmt::Display for Convention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Convention::Ring => "ring",
            Convention::Ideal => "ideal",
        })
    }
}

impl std::str::FromStr for Convention {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "ring" => Ok(Convention::Ring),
            "ideal" => Ok(Convention::Ideal),
            other => Err(Error::Json(format!("unknown convention {other:?}"))),
        }
    }
}

/// Multigraded Betti numbers `β_{i,σ}(k[Δ])` for squarefree degrees σ.
/// Zero entries are not stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedBetti {
    p: Prime,
    ground: Mask,
    entries: BTreeMap<(usize, Mask), u64>,
}

impl GradedBetti {
    pub fn field(&self) -> Prime {
        self.p
    }

    pub fn ground(&self) -> Mask {
        self.ground
    }

    pub fn ground_size(&self) -> usize {
        bits::card(self.ground)
    }

    pub fn get(&self, i: usize, sigma: Mask) -> u64 {
        self.entries.get(&(i, sigma)).copied().unwrap_or(0)
    }

    /// Nonzero entries ordered by `(i, σ)`.
    pub fn iter(&self) -> impl Iterator<Item = (usize, Mask, u64)> + '_ {
        self.entries.iter().map(|(&(i, s), &b)| (i, s, b))
    }

    /// Pairs `(i, σ)` with `β_{i,σ} ≠ 0` in the given convention.
    pub fn support(&self, convention: Convention) -> BTreeSet<(usize, Mask)> {
        self.entries
            .keys()
            .filter_map(|&(i, s)| match convention {
                Convention::Ring => Some((i, s)),
                Convention::Ideal => (i >= 1).then(|| (i - 1, s)),
            })
            .collect()
    }
}

/// Computes `β_{i,σ}(k[Δ]) = dim H̃_{|σ|-i-1}(Δ|_σ; GF(p))` for every σ
/// in the ground set.
///
/// Restrictions are evaluated in parallel. Cones are skipped since their
/// reduced homology vanishes, and homology is memoized on the facet list of
/// the restriction. The result does not depend on evaluation order.
pub fn hochster(complex: &SimplicialComplex, p: Prime) -> Result<GradedBetti> {
    let ground = complex.ground();
    let size = bits::card(ground);
    if size > HOCHSTER_CAP {
        return Err(Error::TooLarge { n: size, cap: HOCHSTER_CAP });
    }
    let faces = complex.faces_by_dim();
    let facets = complex.facets();
    let cache: Mutex<HashMap<Vec<Mask>, Arc<Vec<u64>>>> = Mutex::new(HashMap::new());

    let sigmas: Vec<Mask> = bits::submasks(ground).collect();
    let parts: Vec<Vec<((usize, Mask), u64)>> = sigmas
        .par_iter()
        .map(|&sigma| {
            if sigma == 0 {
                return vec![((0, 0), 1)];
            }
            let restricted = bits::maximal(facets.iter().map(|f| f & sigma).collect());
            let apex = restricted.iter().fold(sigma, |acc, f| acc & f);
            if apex != 0 {
                return Vec::new();
            }
            let cached = cache.lock().unwrap().get(&restricted).cloned();
            let homology = match cached {
                Some(h) => h,
                None => {
                    let top = restricted.iter().map(|f| bits::card(*f)).max().unwrap_or(0);
                    let local: Vec<Vec<Mask>> = faces[..=top]
                        .iter()
                        .map(|g| g.iter().copied().filter(|f| bits::is_subset(*f, sigma)).collect())
                        .collect();
                    let h = Arc::new(linalg::homology_from_faces(p, &local));
                    cache.lock().unwrap().insert(restricted, Arc::clone(&h));
                    h
                }
            };
            let card = bits::card(sigma);
            // homology[k] = dim H̃_{k-1}; it contributes to i = |σ| - k
            homology
                .iter()
                .enumerate()
                .filter(|&(k, &dim)| dim > 0 && k < card)
                .map(|(k, &dim)| ((card - k, sigma), dim))
                .collect()
        })
        .collect();

    log::info!(
        "hochster over GF({}): {} restrictions, {} distinct homology computations",
        p,
        sigmas.len(),
        cache.lock().unwrap().len()
    );
    let entries = parts.into_iter().flatten().collect();
    Ok(GradedBetti { p, ground, entries })
}

/// Coarsely graded Betti numbers `β_{i,j}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiTable {
    p: Prime,
    convention: Convention,
    n: usize,
    entries: BTreeMap<(usize, usize), u64>,
}

impl BettiTable {
    /// Builds a table from `(i, j) -> β` entries; zeros are dropped.
    pub fn new<I>(p: Prime, convention: Convention, n: usize, entries: I) -> Self
    where
        I: IntoIterator<Item = ((usize, usize), u64)>,
    {
        let mut map = BTreeMap::new();
        for (key, b) in entries {
            *map.entry(key).or_insert(0) += b;
        }
        map.retain(|_, b| *b != 0);
        BettiTable { p, convention, n, entries: map }
    }

    pub fn field(&self) -> Prime {
        self.p
    }

    pub fn convention(&self) -> Convention {
        self.convention
    }

    /// Number of variables of the polynomial ring.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    /// Nonzero entries ordered by `(i, j)`.
    pub fn iter(&self) -> impl Iterator<Item = (usize, usize, u64)> + '_ {
        self.entries.iter().map(|(&(i, j), &b)| (i, j, b))
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Positions of nonzero entries.
    pub fn support(&self) -> BTreeSet<(usize, usize)> {
        self.entries.keys().copied().collect()
    }

    /// Nonzero values, sorted ascending.
    pub fn nonzero_values(&self) -> Vec<u64> {
        let mut v: Vec<u64> = self.entries.values().copied().collect();
        v.sort_unstable();
        v
    }

    /// Re-expresses the table in another convention.
    pub fn to_convention(&self, convention: Convention) -> BettiTable {
        let entries: Vec<((usize, usize), u64)> = match (self.convention, convention) {
            (a, b) if a == b => self.entries.iter().map(|(k, v)| (*k, *v)).collect(),
            (Convention::Ring, Convention::Ideal) => self
                .entries
                .iter()
                .filter(|((i, _), _)| *i >= 1)
                .map(|(&(i, j), &b)| ((i - 1, j), b))
                .collect(),
            _ => std::iter::once(((0, 0), 1))
                .chain(self.entries.iter().map(|(&(i, j), &b)| ((i + 1, j), b)))
                .collect(),
        };
        BettiTable::new(self.p, convention, self.n, entries)
    }

    /// Projective dimension of the ring `k[Δ]`: the largest `i` with a
    /// nonzero `β_{i,j}` in the ring convention.
    pub fn projective_dimension(&self) -> usize {
        let ring = self.to_convention(Convention::Ring);
        ring.entries.keys().map(|(i, _)| *i).max().unwrap_or(0)
    }

    /// Alternating numerator `Σ_i (-1)^i Σ_j β_{i,j} t^j` of the Hilbert
    /// series of the ring.
    pub fn hilbert_numerator(&self) -> Poly {
        self.to_convention(Convention::Ring)
            .iter()
            .fold(Poly::zero(), |acc, (i, j, b)| {
                let c = if i % 2 == 0 { b as i128 } else { -(b as i128) };
                acc.add(&Poly::monomial(c, j))
            })
    }

    /// Renders the table with columns `i` and rows `j - i`. Rows outside the
    /// range of nonzero entries are omitted.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "betti table ({}, GF({}), n={})", self.convention, self.p, self.n);
        if self.entries.is_empty() {
            out.push_str("(zero)\n");
            return out;
        }
        let max_i = self.entries.keys().map(|(i, _)| *i).max().unwrap_or(0);
        let rows: Vec<usize> = self.entries.keys().map(|(i, j)| j - i).collect();
        let (lo, hi) = (*rows.iter().min().unwrap(), *rows.iter().max().unwrap());
        let width = self
            .entries
            .values()
            .map(|b| b.to_string().len())
            .chain(std::iter::once(max_i.to_string().len()))
            .max()
            .unwrap();
        let label_width = hi.to_string().len().max(1);

        let _ = write!(out, "{:>label_width$} |", "");
        for i in 0..=max_i {
            let _ = write!(out, " {i:>width$}");
        }
        out.push('\n');
        let _ = writeln!(out, "{}-+{}", "-".repeat(label_width), "-".repeat((width + 1) * (max_i + 1)));
        for row in lo..=hi {
            let _ = write!(out, "{row:>label_width$} |");
            for i in 0..=max_i {
                let _ = write!(out, " {:>width$}", self.get(i, row + i));
            }
            out.push('\n');
        }
        out
    }

    /// `i,j,beta` lines with a header, sorted by `(i, j)`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("i,j,beta\n");
        for (i, j, b) in self.iter() {
            let _ = writeln!(out, "{i},{j},{b}");
        }
        out
    }

    pub fn to_json(&self) -> String {
        let doc = TableJson {
            p: self.p.get() as u64,
            convention: self.convention,
            n: self.n,
            entries: self.iter().map(|(i, j, b)| [i as u64, j as u64, b]).collect(),
        };
        serde_json::to_string(&doc).expect("table serialization is infallible")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: TableJson = serde_json::from_str(text).map_err(|e| Error::Json(e.to_string()))?;
        let p = Prime::new(doc.p)?;
        let mut seen = BTreeSet::new();
        for [i, j, _] in &doc.entries {
            if !seen.insert((*i, *j)) {
                return Err(Error::Json(format!("duplicate entry ({i},{j})")));
            }
        }
        Ok(BettiTable::new(
            p,
            doc.convention,
            doc.n,
            doc.entries.into_iter().map(|[i, j, b]| ((i as usize, j as usize), b)),
        ))
    }
}

impl fmt::Display for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render_text())
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TableJson {
    p: u64,
    convention: Convention,
    n: usize,
    entries: Vec<[u64; 3]>,
}

/// Aggregates multigraded numbers into `β_{i,j} = Σ_{|σ|=j} β_{i,σ}`.
pub fn betti_table(graded: &GradedBetti, convention: Convention) -> BettiTable {
    let ring = BettiTable::new(
        graded.p,
        Convention::Ring,
        graded.ground_size(),
        graded.iter().map(|(i, s, b)| ((i, bits::card(s)), b)),
    );
    ring.to_convention(convention)
}

/// Hochster followed by aggregation.
pub fn betti_numbers(complex: &SimplicialComplex, p: Prime, convention: Convention) -> Result<BettiTable> {
    Ok(betti_table(&hochster(complex, p)?, convention))
}

pub fn projective_dimension(table: &BettiTable) -> usize {
    table.projective_dimension()
}

/// Depth, Krull dimension and Cohen-Macaulayness of `k[Δ]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DepthInfo {
    pub projective_dimension: usize,
    pub depth: usize,
    pub krull: usize,
    pub cohen_macaulay: bool,
}

/// Depth from Auslander-Buchsbaum (`depth = n - pd`), Krull dimension
/// `dim Δ + 1`.
pub fn depth_info(complex: &SimplicialComplex, table: &BettiTable) -> DepthInfo {
    let n = complex.ground_size();
    let pd = table.projective_dimension();
    let depth = n - pd;
    let krull = (complex.dimension() + 1) as usize;
    DepthInfo { projective_dimension: pd, depth, krull, cohen_macaulay: depth == krull }
}

pub fn depth_and_cm(complex: &SimplicialComplex, p: Prime) -> Result<DepthInfo> {
    let table = betti_numbers(complex, p, Convention::Ring)?;
    Ok(depth_info(complex, &table))
}

/// Outcome of comparing the two expressions for the Hilbert series
/// numerator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertCheck {
    /// `Σ_{i=0}^{d+1} f_{i-1} t^i (1-t)^{n-i}`
    pub from_faces: Poly,
    /// `Σ_i (-1)^i Σ_j β_{i,j} t^j`
    pub from_betti: Poly,
}

impl HilbertCheck {
    pub fn holds(&self) -> bool {
        self.from_faces == self.from_betti
    }
}

/// The face-count side of the Hilbert identity.
pub fn hilbert_from_faces(complex: &SimplicialComplex) -> Poly {
    let n = complex.ground_size();
    let f = complex.f_vector();
    let top = complex.dimension() + 1;
    (0..=top).fold(Poly::zero(), |acc, i| {
        let term = Poly::monomial(f.get(i - 1) as i128, i as usize)
            .mul(&Poly::one_minus_t_pow(n - i as usize));
        acc.add(&term)
    })
}

pub fn hilbert_identity(complex: &SimplicialComplex, table: &BettiTable) -> HilbertCheck {
    HilbertCheck { from_faces: hilbert_from_faces(complex), from_betti: table.hilbert_numerator() }
}

pub fn hilbert_identity_check(complex: &SimplicialComplex, p: Prime) -> Result<HilbertCheck> {
    let table = betti_numbers(complex, p, Convention::Ring)?;
    Ok(hilbert_identity(complex, &table))
}

/// Entries of a ring table lying in the region `j >= d + i + 2`, which
/// must be empty for a complex of dimension `d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VanishingReport {
    pub dim: isize,
    pub violations: Vec<(usize, usize, u64)>,
}

impl VanishingReport {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }
}

pub fn vanishing_check(table: &BettiTable, dim: isize) -> VanishingReport {
    let ring = table.to_convention(Convention::Ring);
    let violations = ring
        .iter()
        .filter(|&(i, j, _)| j as isize >= dim + i as isize + 2)
        .collect();
    VanishingReport { dim, violations }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn ring_table(c: &SimplicialComplex, p: Prime) -> BettiTable {
        betti_numbers(c, p, Convention::Ring).unwrap()
    }

    fn entries(t: &BettiTable) -> Vec<(usize, usize, u64)> {
        t.iter().collect()
    }

    #[test]
    fn rp2_over_gf3() {
        let t = ring_table(&fixtures::rp2(), Prime::THREE);
        // minimal nonfaces are the ten missing triangles, so generators sit in degree 3
        assert_eq!(entries(&t), vec![(0, 0, 1), (1, 3, 10), (2, 4, 15), (3, 5, 6)]);
        assert_eq!(t.projective_dimension(), 3);
    }

    #[test]
    fn rp2_over_gf2_picks_up_the_torsion_classes() {
        let t = ring_table(&fixtures::rp2(), Prime::TWO);
        assert_eq!(
            entries(&t),
            vec![(0, 0, 1), (1, 3, 10), (2, 4, 15), (3, 5, 6), (3, 6, 1), (4, 6, 1)]
        );
        assert_eq!(t.projective_dimension(), 4);
    }

    #[test]
    fn ten_generators_of_rp2_are_the_missing_triangles() {
        let t = fixtures::rp2();
        let gb = hochster(&t, Prime::THREE).unwrap();
        let gens: Vec<Mask> = gb.iter().filter(|(i, _, _)| *i == 1).map(|(_, s, _)| s).collect();
        assert_eq!(gens.len(), 10);
        for s in gens {
            assert_eq!(bits::card(s), 3);
            assert!(!t.contains(s));
            assert_eq!(gb.get(1, s), 1);
        }
    }

    #[test]
    fn simplex_has_zero_ideal() {
        let s = SimplicialComplex::simplex(4).unwrap();
        for p in [Prime::TWO, Prime::THREE] {
            let t = ring_table(&s, p);
            assert_eq!(entries(&t), vec![(0, 0, 1)]);
            assert!(t.to_convention(Convention::Ideal).is_empty());
            assert_eq!(t.projective_dimension(), 0);
        }
        let info = depth_and_cm(&s, Prime::TWO).unwrap();
        assert_eq!((info.depth, info.krull, info.cohen_macaulay), (4, 4, true));
    }

    #[test]
    fn triangle_boundary_is_one_cubic_generator() {
        let b = SimplicialComplex::simplex(3).unwrap().skeleton(1).unwrap();
        let gb = hochster(&b, Prime::FIVE).unwrap();
        let all: Vec<_> = gb.iter().collect();
        assert_eq!(all, vec![(0, 0, 1), (1, 0b111, 1)]);
    }

    #[test]
    fn non_vertex_elements_are_linear_generators() {
        let c = SimplicialComplex::new(3, [vec![1, 2]]).unwrap();
        let t = ring_table(&c, Prime::TWO);
        assert_eq!(entries(&t), vec![(0, 0, 1), (1, 1, 1)]);
    }

    #[test]
    fn depth_of_rp2() {
        let t = fixtures::rp2();
        let f3 = depth_and_cm(&t, Prime::THREE).unwrap();
        assert_eq!((f3.depth, f3.krull, f3.cohen_macaulay), (3, 3, true));
        let f2 = depth_and_cm(&t, Prime::TWO).unwrap();
        assert_eq!((f2.depth, f2.krull, f2.cohen_macaulay), (2, 3, false));
    }

    #[test]
    fn hilbert_identity_on_fixtures() {
        for p in [Prime::TWO, Prime::THREE] {
            let check = hilbert_identity_check(&fixtures::rp2(), p).unwrap();
            assert!(check.holds(), "{} vs {}", check.from_faces, check.from_betti);
            assert_eq!(check.from_betti.coeffs(), &[1, 0, 0, -10, 15, -6]);
        }
        let s = SimplicialComplex::simplex(3).unwrap();
        let check = hilbert_identity_check(&s, Prime::TWO).unwrap();
        assert!(check.holds());
        assert_eq!(check.from_faces.coeffs(), &[1]);
    }

    #[test]
    fn vanishing_region_is_empty_for_rp2_over_both_fields() {
        for p in [Prime::TWO, Prime::THREE] {
            let t = ring_table(&fixtures::rp2(), p);
            assert!(vanishing_check(&t, 2).holds());
        }
        let fake = BettiTable::new(Prime::TWO, Convention::Ring, 6, [((0, 0), 1), ((3, 7), 1)]);
        assert_eq!(vanishing_check(&fake, 2).violations, vec![(3, 7, 1)]);
    }

    #[test]
    fn convention_conversion() {
        let t = ring_table(&fixtures::rp2(), Prime::THREE);
        let ideal = t.to_convention(Convention::Ideal);
        assert_eq!(entries(&ideal), vec![(0, 3, 10), (1, 4, 15), (2, 5, 6)]);
        assert_eq!(ideal.to_convention(Convention::Ring), t);
        assert_eq!(ideal.projective_dimension(), 3);
    }

    #[test]
    fn text_rendering_uses_rows_j_minus_i() {
        let t = ring_table(&fixtures::rp2(), Prime::THREE);
        let text = t.render_text();
        let expected = "\
betti table (ring, GF(3), n=6)
  |  0  1  2  3
--+------------
0 |  1  0  0  0
1 |  0  0  0  0
2 |  0 10 15  6
";
        assert_eq!(text, expected);
    }

    #[test]
    fn csv_and_json() {
        let t = ring_table(&fixtures::rp2(), Prime::THREE);
        assert_eq!(t.to_csv(), "i,j,beta\n0,0,1\n1,3,10\n2,4,15\n3,5,6\n");
        assert_eq!(
            t.to_json(),
            r#"{"p":3,"convention":"ring","n":6,"entries":[[0,0,1],[1,3,10],[2,4,15],[3,5,6]]}"#
        );
        assert_eq!(BettiTable::from_json(&t.to_json()).unwrap(), t);
        assert!(matches!(BettiTable::from_json(r#"{"p":4,"convention":"ring","n":1,"entries":[]}"#), Err(Error::NotPrime(4))));
        assert!(BettiTable::from_json(r#"{"p":2,"convention":"ring","n":1,"entries":[[0,0,1],[0,0,1]]}"#).is_err());
        assert!(BettiTable::from_json("not json").is_err());
    }

    #[test]
    fn hochster_cap() {
        let big = SimplicialComplex::simplex(21).unwrap();
        assert_eq!(hochster(&big, Prime::TWO), Err(Error::TooLarge { n: 21, cap: 20 }));
    }
}
