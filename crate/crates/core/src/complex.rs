//! Finite simplicial complexes on `{1,...,n}`, stored by their facets.

use std::collections::BTreeSet;
use std::fmt;

use crate::bits::{self, Mask, MAX_GROUND};
use crate::error::{Error, Result};

/// A simplicial complex given by its facets.
///
/// The face family is the downward closure of the facets. Every complex
/// carries a ground set, which may contain elements that are not vertices
/// of the complex; such elements are minimal nonfaces and show up as linear
/// generators of the Stanley-Reisner ideal. A restriction keeps the original
/// labels and shrinks the ground set.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    n: usize,
    ground: Mask,
    facets: Vec<Mask>,
}

/// Face numbers `f_{-1}, f_0, ..., f_d`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FVector(Vec<u64>);

impl FVector {
    /// `f_i` for `i >= -1`; zero beyond the dimension.
    pub fn get(&self, i: isize) -> u64 {
        if i < -1 {
            return 0;
        }
        self.0.get((i + 1) as usize).copied().unwrap_or(0)
    }

    /// Entries starting at `f_{-1}`.
    pub fn as_slice(&self) -> &[u64] {
        &self.0
    }

    /// Dimension of the top entry.
    pub fn top(&self) -> isize {
        self.0.len() as isize - 2
    }

    pub fn total(&self) -> u64 {
        self.0.iter().sum()
    }
}

impl fmt::Display for FVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl SimplicialComplex {
    /// Builds a complex on `{1,...,n}` from facets given as 1-based labels.
    /// Dominated facets are dropped.
    pub fn new<F, L>(n: usize, facets: F) -> Result<Self>
    where
        F: IntoIterator<Item = L>,
        L: AsRef<[usize]>,
    {
        let masks = facets
            .into_iter()
            .map(|f| bits::from_labels(f.as_ref(), n))
            .collect::<Result<Vec<_>>>()?;
        Self::from_masks(n, masks)
    }

    /// Builds a complex on `{1,...,n}` from facet bitmasks.
    pub fn from_masks(n: usize, facets: Vec<Mask>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidGroundSet { label: 0, n });
        }
        if n > MAX_GROUND {
            return Err(Error::TooLarge { n, cap: MAX_GROUND });
        }
        Self::with_ground(n, bits::full(n), facets)
    }

    fn with_ground(n: usize, ground: Mask, facets: Vec<Mask>) -> Result<Self> {
        if facets.is_empty() {
            return Err(Error::VoidComplexRejected);
        }
        for &f in &facets {
            if !bits::is_subset(f, ground) {
                let stray = bits::labels(f & !ground)[0];
                return Err(Error::InvalidGroundSet { label: stray, n });
            }
        }
        Ok(SimplicialComplex { n, ground, facets: bits::maximal(facets) })
    }

    /// The full simplex on `{1,...,n}`.
    pub fn simplex(n: usize) -> Result<Self> {
        Self::from_masks(n, vec![bits::full(n)])
    }

    /// Largest label of the ambient ground set.
    pub fn n(&self) -> usize {
        self.n
    }

    /// The ground set as a mask; equal to `{1,...,n}` unless this complex is
    /// a restriction.
    pub fn ground(&self) -> Mask {
        self.ground
    }

    /// Number of elements of the ground set; the number of variables of the
    /// polynomial ring.
    pub fn ground_size(&self) -> usize {
        bits::card(self.ground)
    }

    /// Facets in colexicographic order.
    pub fn facets(&self) -> &[Mask] {
        &self.facets
    }

    pub fn vertices(&self) -> Mask {
        self.facets.iter().fold(0, |acc, f| acc | f)
    }

    pub fn contains(&self, face: Mask) -> bool {
        self.facets.iter().any(|f| bits::is_subset(face, *f))
    }

    /// `max |F| - 1` over facets; `-1` for `{∅}`.
    pub fn dimension(&self) -> isize {
        self.facets.iter().map(|f| bits::card(*f)).max().unwrap_or(0) as isize - 1
    }

    pub fn is_pure(&self) -> bool {
        let mut sizes = self.facets.iter().map(|f| bits::card(*f));
        let first = sizes.next();
        sizes.all(|s| Some(s) == first)
    }

    /// True when some element lies in every facet, which makes the complex
    /// contractible (all reduced homology vanishes). `{∅}` is not a cone.
    pub fn is_cone(&self) -> bool {
        self.facets.iter().fold(self.ground, |acc, f| acc & f) != 0
    }

    /// Faces grouped by dimension: entry `k` holds the faces of dimension
    /// `k - 1`, each group in colexicographic order.
    pub fn faces_by_dim(&self) -> Vec<Vec<Mask>> {
        let top = (self.dimension() + 1) as usize;
        let mut groups: Vec<BTreeSet<Mask>> = vec![BTreeSet::new(); top + 1];
        for &facet in &self.facets {
            for face in bits::submasks(facet) {
                groups[bits::card(face)].insert(face);
            }
        }
        groups.into_iter().map(|g| g.into_iter().collect()).collect()
    }

    /// Faces of dimension `dim`, in colexicographic order.
    pub fn faces_of_dim(&self, dim: isize) -> Vec<Mask> {
        if dim < -1 || dim > self.dimension() {
            return Vec::new();
        }
        let size = (dim + 1) as usize;
        let set: BTreeSet<Mask> = self
            .facets
            .iter()
            .flat_map(|f| bits::subsets_of_size(*f, size))
            .collect();
        set.into_iter().collect()
    }

    pub fn f_vector(&self) -> FVector {
        FVector(self.faces_by_dim().iter().map(|g| g.len() as u64).collect())
    }

    /// The restriction `{σ ⊆ X : σ ∈ Δ}` on the ground set `X`.
    ///
    /// Labels are kept; `x` must lie inside the current ground set.
    pub fn restriction(&self, x: Mask) -> Result<Self> {
        if !bits::is_subset(x, self.ground) {
            let stray = bits::labels(x & !self.ground)[0];
            return Err(Error::InvalidGroundSet { label: stray, n: self.n });
        }
        let facets = self.facets.iter().map(|f| f & x).collect();
        Self::with_ground(self.n, x, facets)
    }

    /// Restriction to a set given by 1-based labels.
    pub fn restriction_to(&self, labels: &[usize]) -> Result<Self> {
        self.restriction(bits::from_labels(labels, self.n)?)
    }

    /// The `i`-skeleton: all faces of dimension at most `i`.
    pub fn skeleton(&self, i: isize) -> Result<Self> {
        let dim = self.dimension();
        if i < -1 || i > dim {
            return Err(Error::SkeletonRange { index: i, dim });
        }
        let size = (i + 1) as usize;
        let mut facets = Vec::new();
        for &f in &self.facets {
            if bits::card(f) <= size {
                facets.push(f);
            } else {
                facets.extend(bits::subsets_of_size(f, size));
            }
        }
        Self::with_ground(self.n, self.ground, facets)
    }

    /// Relabels the ground set by `perm`, where `perm[v - 1]` is the new label
    /// of `v`. Only defined on full (unrestricted) complexes.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        let map = |m: Mask| -> Result<Mask> {
            bits::from_labels(bits::elements(m).map(|b| perm[b]), self.n)
        };
        let facets = self.facets.iter().map(|f| map(*f)).collect::<Result<Vec<_>>>()?;
        Self::with_ground(self.n, map(self.ground)?, facets)
    }
}

impl fmt::Display for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let facets: Vec<String> = self.facets.iter().map(|m| bits::show(*m)).collect();
        write!(f, "n={} facets=[{}]", self.n, facets.join(" "))
    }
}
