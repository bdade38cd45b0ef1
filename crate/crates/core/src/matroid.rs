//! Matroids given by their bases, with truncation, elongation and the
//! Betti numbers of their independence complexes.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::sync::RwLock;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::betti::{self, BettiTable, Convention, GradedBetti};
use crate::bits::{self, Mask};
use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::linalg::Prime;
use crate::transfer::{self, TransferInput};

/// Ground sets up to this size get an exhaustive augmentation check.
pub const EXHAUSTIVE_LIMIT: usize = 12;
/// Pairs sampled by the randomized augmentation check.
pub const SAMPLED_PAIRS: usize = 10_000;
const VALIDATION_SEED: u64 = 0x05ee_d0fb_a5e5;

/// How thoroughly the augmentation axiom is verified on construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Validation {
    /// Exhaustive up to [`EXHAUSTIVE_LIMIT`] elements, sampled above.
    #[default]
    Auto,
    /// Always exhaustive.
    Strict,
}

/// A matroid on `{1,...,n}` described by its bases.
pub struct Matroid {
    n: usize,
    rank: usize,
    bases: Vec<Mask>,
    rank_cache: RwLock<HashMap<Mask, usize>>,
}

impl Clone for Matroid {
    fn clone(&self) -> Self {
        Matroid {
            n: self.n,
            rank: self.rank,
            bases: self.bases.clone(),
            rank_cache: RwLock::new(HashMap::new()),
        }
    }
}

impl PartialEq for Matroid {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.bases == other.bases
    }
}

impl Eq for Matroid {}

impl fmt::Debug for Matroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Matroid")
            .field("n", &self.n)
            .field("rank", &self.rank)
            .field("bases", &self.bases.iter().map(|b| bits::show(*b)).collect::<Vec<_>>())
            .finish()
    }
}

/// Rank and nullity of a subset.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NullityProfile {
    pub set: Mask,
    pub rank: usize,
    pub nullity: usize,
}

impl Matroid {
    /// Builds a matroid from bases given as 1-based labels.
    pub fn from_bases<F, L>(n: usize, bases: F) -> Result<Self>
    where
        F: IntoIterator<Item = L>,
        L: AsRef<[usize]>,
    {
        Self::from_bases_with(n, bases, Validation::Auto)
    }

    pub fn from_bases_with<F, L>(n: usize, bases: F, validation: Validation) -> Result<Self>
    where
        F: IntoIterator<Item = L>,
        L: AsRef<[usize]>,
    {
        let masks = bases
            .into_iter()
            .map(|b| bits::from_labels(b.as_ref(), n))
            .collect::<Result<Vec<_>>>()?;
        Self::from_masks_with(n, masks, validation)
    }

    pub fn from_masks(n: usize, bases: Vec<Mask>) -> Result<Self> {
        Self::from_masks_with(n, bases, Validation::Auto)
    }

    pub fn from_masks_with(n: usize, mut bases: Vec<Mask>, validation: Validation) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidGroundSet { label: 0, n });
        }
        if n > bits::MAX_GROUND {
            return Err(Error::TooLarge { n, cap: bits::MAX_GROUND });
        }
        if let Some(b) = bases.iter().find(|b| !bits::is_subset(**b, bits::full(n))) {
            let stray = bits::labels(b & !bits::full(n))[0];
            return Err(Error::InvalidGroundSet { label: stray, n });
        }
        bases.sort_unstable();
        bases.dedup();
        let Some(&first) = bases.first() else {
            return Err(Error::EmptyBasisFamily);
        };
        let rank = bits::card(first);
        if let Some(b) = bases.iter().find(|b| bits::card(**b) != rank) {
            return Err(Error::NotEquicardinal(rank, bits::card(*b)));
        }
        let m = Matroid { n, rank, bases, rank_cache: RwLock::new(HashMap::new()) };
        m.check_augmentation(validation)?;
        Ok(m)
    }

    /// Builds without checking the augmentation axiom. Callers must only pass
    /// families known to be matroid bases.
    fn trusted(n: usize, mut bases: Vec<Mask>) -> Self {
        bases.sort_unstable();
        bases.dedup();
        let rank = bases.first().map(|b| bits::card(*b)).unwrap_or(0);
        Matroid { n, rank, bases, rank_cache: RwLock::new(HashMap::new()) }
    }

    /// The uniform matroid `U_{r,n}`.
    pub fn uniform(r: usize, n: usize) -> Result<Self> {
        if r > n {
            return Err(Error::TruncationRange { index: r, rank: n });
        }
        if n == 0 || n > bits::MAX_GROUND {
            return Err(Error::TooLarge { n, cap: bits::MAX_GROUND });
        }
        Ok(Self::trusted(n, bits::subsets_of_size(bits::full(n), r).collect()))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `r(M)`.
    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Bases in colexicographic order.
    pub fn bases(&self) -> &[Mask] {
        &self.bases
    }

    pub fn ground(&self) -> Mask {
        bits::full(self.n)
    }

    pub fn is_independent(&self, set: Mask) -> bool {
        self.bases.iter().any(|b| bits::is_subset(set, *b))
    }

    /// `r(σ) = max_B |B ∩ σ|`.
    pub fn rank_of(&self, set: Mask) -> usize {
        if let Some(r) = self.rank_cache.read().unwrap().get(&set) {
            return *r;
        }
        let r = self.bases.iter().map(|b| bits::card(b & set)).max().unwrap_or(0);
        self.rank_cache.write().unwrap().insert(set, r);
        r
    }

    /// `n(σ) = |σ| - r(σ)`.
    pub fn nullity_of(&self, set: Mask) -> usize {
        bits::card(set) - self.rank_of(set)
    }

    pub fn profile(&self, set: Mask) -> NullityProfile {
        let rank = self.rank_of(set);
        NullityProfile { set, rank, nullity: bits::card(set) - rank }
    }

    /// The independence complex `I(M)`.
    pub fn independence_complex(&self) -> SimplicialComplex {
        SimplicialComplex::from_masks(self.n, self.bases.clone())
            .expect("bases form a nonempty family inside the ground set")
    }

    /// Minimal dependent sets.
    pub fn circuits(&self) -> Vec<Mask> {
        self.minimal_with_nullity(1)
    }

    /// Sets that are inclusion-minimal with nullity exactly `k`.
    ///
    /// Nullity grows by at most one per added element, so minimality only
    /// needs to be tested against the one-element deletions.
    pub fn minimal_with_nullity(&self, k: usize) -> Vec<Mask> {
        bits::submasks(self.ground())
            .filter(|&s| {
                self.nullity_of(s) == k
                    && bits::elements(s).all(|e| self.nullity_of(s & !(1 << e)) < k)
            })
            .collect()
    }

    pub fn dual(&self) -> Matroid {
        let full = self.ground();
        Self::trusted(self.n, self.bases.iter().map(|b| full & !b).collect())
    }

    /// The `i`-th truncation: independent sets of size at most `r(M) - i`.
    pub fn truncation(&self, i: usize) -> Result<Matroid> {
        if i > self.rank {
            return Err(Error::TruncationRange { index: i, rank: self.rank });
        }
        if i == self.rank {
            log::warn!("truncating to rank 0 leaves only the empty basis");
        }
        let size = self.rank - i;
        let mut bases: BTreeSet<Mask> = BTreeSet::new();
        for &b in &self.bases {
            bases.extend(bits::subsets_of_size(b, size));
        }
        Ok(Self::trusted(self.n, bases.into_iter().collect()))
    }

    /// The elongation to rank `r(M) + i`: independent sets are the sets of
    /// nullity at most `i`.
    pub fn elongation(&self, i: usize) -> Result<Matroid> {
        let max = self.n - self.rank;
        if i > max {
            return Err(Error::ElongationRange { index: i, max });
        }
        let size = self.rank + i;
        let bases = bits::subsets_of_size(self.ground(), size)
            .filter(|&s| self.nullity_of(s) <= i)
            .collect();
        Ok(Self::trusted(self.n, bases))
    }

    /// Restriction to `x`, as a matroid on the same labels whose bases are the
    /// maximal independent subsets of `x`.
    pub fn restriction(&self, x: Mask) -> Result<Matroid> {
        if !bits::is_subset(x, self.ground()) {
            let stray = bits::labels(x & !self.ground())[0];
            return Err(Error::InvalidGroundSet { label: stray, n: self.n });
        }
        let r = self.rank_of(x);
        let bases: BTreeSet<Mask> = self
            .bases
            .iter()
            .map(|b| b & x)
            .filter(|b| bits::card(*b) == r)
            .collect();
        Ok(Self::trusted(self.n, bases.into_iter().collect()))
    }

    fn check_augmentation(&self, validation: Validation) -> Result<()> {
        let exhaustive = validation == Validation::Strict || self.n <= EXHAUSTIVE_LIMIT;
        if exhaustive {
            self.check_augmentation_exhaustive()
        } else {
            self.check_augmentation_sampled()
        }
    }

    fn failure(larger: Mask, smaller: Mask) -> Error {
        Error::NotAMatroid { larger: bits::labels(larger), smaller: bits::labels(smaller) }
    }

    fn augments(&self, larger: Mask, smaller: Mask) -> bool {
        bits::elements(larger & !smaller).any(|e| self.is_independent(smaller | (1 << e)))
    }

    // Augmentation for |I1| = |I2| + 1 implies the general axiom by induction.
    fn check_augmentation_exhaustive(&self) -> Result<()> {
        let mut by_size: Vec<BTreeSet<Mask>> = vec![BTreeSet::new(); self.rank + 1];
        for &b in &self.bases {
            for s in bits::submasks(b) {
                by_size[bits::card(s)].insert(s);
            }
        }
        for k in 0..self.rank {
            for &small in &by_size[k] {
                for &large in &by_size[k + 1] {
                    if !self.augments(large, small) {
                        return Err(Self::failure(large, small));
                    }
                }
            }
        }
        Ok(())
    }

    fn check_augmentation_sampled(&self) -> Result<()> {
        let mut rng = ChaCha8Rng::seed_from_u64(VALIDATION_SEED);
        let random_independent = |rng: &mut ChaCha8Rng, size: usize| -> Mask {
            let b = self.bases[rng.gen_range(0..self.bases.len())];
            let mut elems: Vec<usize> = bits::elements(b).collect();
            for k in (1..elems.len()).rev() {
                elems.swap(k, rng.gen_range(0..=k));
            }
            elems[..size].iter().fold(0, |acc, e| acc | (1 << e))
        };
        for _ in 0..SAMPLED_PAIRS {
            if self.rank == 0 {
                break;
            }
            let k = rng.gen_range(0..self.rank);
            let small = random_independent(&mut rng, k);
            let size = rng.gen_range(k + 1..=self.rank);
            let large = random_independent(&mut rng, size);
            if !self.augments(large, small) {
                return Err(Self::failure(large, small));
            }
        }
        Ok(())
    }
}

/// Ring-convention Betti table of `k[I(M)]` over GF(p).
///
/// The table is recomputed over GF(2) and GF(3) and the three results are
/// required to agree, since matroid complexes have field-independent
/// homology.
pub fn matroid_betti(m: &Matroid, p: Prime) -> Result<BettiTable> {
    let complex = m.independence_complex();
    let table = betti::betti_numbers(&complex, p, Convention::Ring)?;
    for q in [Prime::TWO, Prime::THREE] {
        if q == p {
            continue;
        }
        let other = betti::betti_numbers(&complex, q, Convention::Ring)?;
        if other.iter().ne(table.iter()) {
            return Err(Error::FieldDependenceBug(p.get(), q.get()));
        }
    }
    Ok(table)
}

/// Multigraded Betti numbers of `k[I(M)]`.
pub fn matroid_graded_betti(m: &Matroid, p: Prime) -> Result<GradedBetti> {
    betti::hochster(&m.independence_complex(), p)
}

/// `{(i, σ) : σ minimal with n(σ) = i + 1}`, which is the support of the
/// ideal-convention multigraded Betti numbers of `I_M`.
pub fn jv_support(m: &Matroid) -> Result<BTreeSet<(usize, Mask)>> {
    if m.n() > betti::HOCHSTER_CAP {
        return Err(Error::TooLarge { n: m.n(), cap: betti::HOCHSTER_CAP });
    }
    let mut out = BTreeSet::new();
    for s in bits::submasks(m.ground()) {
        let k = m.nullity_of(s);
        if k >= 1 && bits::elements(s).all(|e| m.nullity_of(s & !(1 << e)) < k) {
            out.insert((k - 1, s));
        }
    }
    Ok(out)
}

/// Betti table of the first truncation computed from the table of `M`
/// alone, with `k = r(M)`.
pub fn truncation_betti_closed_form(table: &BettiTable, rank: usize) -> Result<BettiTable> {
    if rank < 2 {
        return Err(Error::TransferPrecondition(format!(
            "rank {rank} leaves no nonempty truncation to transfer to"
        )));
    }
    let input = TransferInput::new(table.clone(), rank - 1)?;
    transfer::transfer(&input)
}

/// Compares the zero patterns of the ideal tables of `M^(l)` and
/// `M^(l+1)`: for every `i >= 1`, `β_{i,j}(M^(l)) ≠ 0` exactly when
/// `β_{i-1,j}(M^(l+1)) ≠ 0`.
pub fn elongation_shift_check(m: &Matroid, l: usize) -> Result<bool> {
    let max = m.n() - m.rank();
    if l >= max {
        return Err(Error::ElongationRange { index: l + 1, max });
    }
    let ideal = |x: &Matroid| -> Result<BTreeSet<(usize, usize)>> {
        Ok(matroid_betti(x, Prime::TWO)?.to_convention(Convention::Ideal).support())
    };
    let lower = ideal(&m.elongation(l)?)?;
    let upper = ideal(&m.elongation(l + 1)?)?;
    let shifted: BTreeSet<(usize, usize)> =
        lower.iter().filter(|(i, _)| *i >= 1).map(|&(i, j)| (i - 1, j)).collect();
    Ok(shifted == upper)
}

/// The pair of matroids whose Betti tables agree while the tables of their
/// elongations do not.
#[derive(Clone, Debug)]
pub struct CounterexampleReport {
    pub m_table: BettiTable,
    pub n_table: BettiTable,
    pub m_elongation_table: BettiTable,
    pub n_elongation_table: BettiTable,
}

impl CounterexampleReport {
    pub fn tables_equal(&self) -> bool {
        self.m_table == self.n_table
    }

    pub fn elongation_tables_differ(&self) -> bool {
        self.m_elongation_table != self.n_elongation_table
    }

    pub fn m_elongation_values(&self) -> Vec<u64> {
        self.m_elongation_table.nonzero_values()
    }

    pub fn n_elongation_values(&self) -> Vec<u64> {
        self.n_elongation_table.nonzero_values()
    }

    pub fn passed(&self) -> bool {
        self.tables_equal()
            && self.elongation_tables_differ()
            && self.m_elongation_values() == [1, 5, 5]
            && self.n_elongation_values() == [2, 3, 4]
    }

    pub fn render(&self) -> String {
        let verdict = |ok: bool| if ok { "PASS" } else { "FAIL" };
        let mut out = String::new();
        out.push_str("I_M:\n");
        out.push_str(&self.m_table.render_text());
        out.push_str("I_N:\n");
        out.push_str(&self.n_table.render_text());
        out.push_str("I_M^(1):\n");
        out.push_str(&self.m_elongation_table.render_text());
        out.push_str("I_N^(1):\n");
        out.push_str(&self.n_elongation_table.render_text());
        out.push_str(&format!("[{}] tables of I_M and I_N are equal\n", verdict(self.tables_equal())));
        out.push_str(&format!(
            "[{}] tables of the elongations differ\n",
            verdict(self.elongation_tables_differ())
        ));
        out.push_str(&format!(
            "[{}] nonzero entries of I_M^(1): {:?} (expected [1, 5, 5])\n",
            verdict(self.m_elongation_values() == [1, 5, 5]),
            self.m_elongation_values()
        ));
        out.push_str(&format!(
            "[{}] nonzero entries of I_N^(1): {:?} (expected [2, 3, 4])\n",
            verdict(self.n_elongation_values() == [2, 3, 4]),
            self.n_elongation_values()
        ));
        out.push_str(&format!("{}\n", verdict(self.passed())));
        out
    }
}

/// Evaluates the built-in pair M, N.
pub fn counterexample_report() -> Result<CounterexampleReport> {
    let m = crate::fixtures::matroid_m();
    let n = crate::fixtures::matroid_n();
    let ideal = |x: &Matroid| -> Result<BettiTable> {
        Ok(matroid_betti(x, Prime::TWO)?.to_convention(Convention::Ideal))
    };
    Ok(CounterexampleReport {
        m_table: ideal(&m)?,
        n_table: ideal(&n)?,
        m_elongation_table: ideal(&m.elongation(1)?)?,
        n_elongation_table: ideal(&n.elongation(1)?)?,
    })
}
