use std::collections::BTreeSet;

use proptest::prelude::*;
use skelbetti::betti::{self, Convention};
use skelbetti::bits::{self, Mask};
use skelbetti::linalg::{self, GfMatrix, Prime};
use skelbetti::transfer::{self, TransferInput};
use skelbetti::{gen, matroid, BettiTable, Matroid, SimplicialComplex};

fn complex_strategy(max_n: usize) -> impl Strategy<Value = SimplicialComplex> {
    (2..=max_n).prop_flat_map(|n| {
        let full = bits::full(n);
        prop::collection::vec(0..=full, 1..6).prop_map(move |facets| {
            SimplicialComplex::from_masks(n, facets).expect("masks lie in the ground set")
        })
    })
}

fn positive_dim_complex(max_n: usize) -> impl Strategy<Value = SimplicialComplex> {
    complex_strategy(max_n).prop_filter("dimension at least 1", |c| c.dimension() >= 1)
}

fn prime_strategy() -> impl Strategy<Value = Prime> {
    prop::sample::select(vec![Prime::TWO, Prime::THREE, Prime::FIVE])
}

fn matroid_strategy() -> impl Strategy<Value = Matroid> {
    (any::<u64>(), 2..=7usize).prop_map(|(seed, n)| gen::random_matroid(&mut gen::rng(seed), n))
}

fn brute_faces(c: &SimplicialComplex) -> BTreeSet<Mask> {
    bits::submasks(c.ground()).filter(|s| c.contains(*s)).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn skeleton_faces_are_the_small_faces(c in complex_strategy(9), k in -1isize..5) {
        let i = k.min(c.dimension());
        let skel = c.skeleton(i).unwrap();
        let expected: BTreeSet<Mask> =
            brute_faces(&c).into_iter().filter(|f| bits::card(*f) as isize <= i + 1).collect();
        prop_assert_eq!(brute_faces(&skel), expected);
    }

    #[test]
    fn codimension_one_skeleton_keeps_lower_face_numbers(c in positive_dim_complex(9)) {
        let d = c.dimension();
        let f = c.f_vector();
        let g = c.skeleton(d - 1).unwrap().f_vector();
        prop_assert_eq!(g.as_slice(), &f.as_slice()[..f.as_slice().len() - 1]);
    }

    #[test]
    fn restriction_commutes_with_skeleton(c in complex_strategy(8), x in any::<u32>(), k in 0isize..4) {
        let x = x & c.ground();
        let i = k.min(c.dimension());
        let left = c.skeleton(i).unwrap().restriction(x).unwrap();
        let restricted = c.restriction(x).unwrap();
        let right = restricted.skeleton(i.min(restricted.dimension())).unwrap();
        prop_assert_eq!(brute_faces(&left), brute_faces(&right));
    }

    #[test]
    fn boundary_maps_compose_to_zero(c in complex_strategy(8), p in prime_strategy()) {
        for i in 0..=c.dimension() {
            let a = linalg::boundary_matrix(&c, i, p.get() as u64).unwrap();
            let b = linalg::boundary_matrix(&c, i + 1, p.get() as u64).unwrap();
            prop_assert!(a.mul(&b).unwrap().is_zero());
        }
    }

    #[test]
    fn reduced_euler_characteristic(c in complex_strategy(8), p in prime_strategy()) {
        let h = linalg::reduced_homology(&c, p.get() as u64).unwrap();
        prop_assert_eq!(h.as_slice().len() as isize, c.dimension() + 2);
        let f = c.f_vector();
        let chi: i64 = (0..=c.dimension())
            .map(|i| if i % 2 == 0 { f.get(i) as i64 } else { -(f.get(i) as i64) })
            .sum();
        prop_assert_eq!(h.euler_characteristic(), chi - 1);
    }

    #[test]
    fn rank_ignores_row_and_column_order(
        data in prop::collection::vec(0u32..5, 12),
        rows in Just((0..3usize).collect::<Vec<_>>()).prop_shuffle(),
        cols in Just((0..4usize).collect::<Vec<_>>()).prop_shuffle(),
    ) {
        let m = GfMatrix::new(Prime::FIVE, 3, 4, data).unwrap();
        prop_assert_eq!(m.rank(), m.permuted(&rows, &cols).rank());
    }

    #[test]
    fn betti_tables_are_label_free(
        c in complex_strategy(7),
        perm in Just((1..=7usize).collect::<Vec<_>>()).prop_shuffle(),
        p in prime_strategy(),
    ) {
        let n = c.n();
        let mut perm: Vec<usize> = perm.into_iter().filter(|v| *v <= n).collect();
        perm.truncate(n);
        let relabeled = c.relabel(&perm).unwrap();
        let a = betti::hochster(&c, p).unwrap();
        let b = betti::hochster(&relabeled, p).unwrap();
        for (i, sigma, beta) in a.iter() {
            let image = bits::from_labels(bits::labels(sigma).iter().map(|v| perm[v - 1]), n).unwrap();
            prop_assert_eq!(b.get(i, image), beta);
        }
        prop_assert_eq!(
            betti::betti_table(&a, Convention::Ring),
            betti::betti_table(&b, Convention::Ring)
        );
    }

    #[test]
    fn homological_degree_is_bounded_by_the_support(c in complex_strategy(8), p in prime_strategy()) {
        let gb = betti::hochster(&c, p).unwrap();
        prop_assert_eq!(gb.get(0, 0), 1);
        for (i, sigma, _) in gb.iter() {
            prop_assert!(i <= bits::card(sigma));
            prop_assert!(i > 0 || sigma == 0);
        }
    }

    #[test]
    fn projective_dimension_lower_bound(c in complex_strategy(8), p in prime_strategy()) {
        let t = betti::betti_numbers(&c, p, Convention::Ring).unwrap();
        let n = c.ground_size() as isize;
        prop_assert!(t.projective_dimension() as isize >= n - c.dimension() - 1);
        prop_assert!(t.projective_dimension() <= c.ground_size());
    }

    #[test]
    fn hilbert_identity_always_holds(c in complex_strategy(8), p in prime_strategy()) {
        let check = betti::hilbert_identity_check(&c, p).unwrap();
        prop_assert!(check.holds(), "{} != {}", check.from_faces, check.from_betti);
    }

    #[test]
    fn vanishing_region_is_empty(c in complex_strategy(8), p in prime_strategy()) {
        let t = betti::betti_numbers(&c, p, Convention::Ring).unwrap();
        prop_assert!(betti::vanishing_check(&t, c.dimension()).holds());
    }

    #[test]
    fn transfer_agrees_with_direct_skeleton(c in positive_dim_complex(8), p in prime_strategy()) {
        let d = c.dimension();
        let table = betti::betti_numbers(&c, p, Convention::Ring).unwrap();
        let input = TransferInput::new(table.clone(), d as usize).unwrap();
        prop_assert_eq!(transfer::top_face_count(&input).unwrap(), c.f_vector().get(d));
        let skel = betti::betti_numbers(&c.skeleton(d - 1).unwrap(), p, Convention::Ring).unwrap();
        prop_assert_eq!(&transfer::transfer(&input).unwrap(), &skel);
        for (i, j, b) in table.iter().filter(|(i, j, _)| *j < d as usize + *i) {
            prop_assert_eq!(skel.get(i, j), b);
        }
        prop_assert_eq!(transfer::infer_dimension(&table).unwrap(), d as usize);
    }

    #[test]
    fn skeleton_projective_dimension_bounds(c in positive_dim_complex(8), p in prime_strategy()) {
        let cmp = transfer::SkeletonComparison::compute(&c, p).unwrap();
        prop_assert!(cmp.pd_bound_holds());
        prop_assert!(cmp.cm_inherited());
        let n = c.ground_size();
        prop_assert!(cmp.skeleton.projective_dimension + (c.dimension() as usize) >= n);
    }

    #[test]
    fn json_round_trip(c in complex_strategy(7), p in prime_strategy(), ideal in any::<bool>()) {
        let conv = if ideal { Convention::Ideal } else { Convention::Ring };
        let t = betti::betti_numbers(&c, p, conv).unwrap();
        prop_assert_eq!(BettiTable::from_json(&t.to_json()).unwrap(), t);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn rank_is_monotone_and_submodular(m in matroid_strategy()) {
        let ground = m.ground();
        for a in bits::submasks(ground) {
            prop_assert!(m.rank_of(a) <= bits::card(a).min(m.rank()));
            for e in bits::elements(ground & !a) {
                prop_assert!(m.rank_of(a | 1 << e) >= m.rank_of(a));
            }
        }
        let subsets: Vec<Mask> = bits::submasks(ground).step_by(3).collect();
        for &a in &subsets {
            for &b in &subsets {
                prop_assert!(m.rank_of(a | b) + m.rank_of(a & b) <= m.rank_of(a) + m.rank_of(b));
            }
        }
    }

    #[test]
    fn dual_is_an_involution(m in matroid_strategy()) {
        prop_assert_eq!(m.dual().dual(), m.clone());
        prop_assert_eq!(m.dual().rank(), m.n() - m.rank());
    }

    #[test]
    fn elongation_of_dual_is_dual_of_truncation(m in matroid_strategy()) {
        for i in 0..=m.rank().min(m.n() - m.rank()) {
            prop_assert_eq!(m.dual().elongation(i).unwrap(), m.truncation(i).unwrap().dual());
        }
        for i in 0..=m.n() - m.rank() {
            prop_assert_eq!(m.elongation(i).unwrap().rank(), m.rank() + i);
        }
    }

    #[test]
    fn truncation_is_a_skeleton(m in matroid_strategy()) {
        let complex = m.independence_complex();
        prop_assert!(complex.is_pure());
        prop_assert_eq!(complex.dimension(), m.rank() as isize - 1);
        for i in 0..m.rank() {
            let t = m.truncation(i).unwrap();
            let skel = complex.skeleton(m.rank() as isize - i as isize - 1).unwrap();
            prop_assert_eq!(t.independence_complex(), skel);
        }
    }

    #[test]
    fn matroid_complexes_are_cohen_macaulay_over_every_field(m in matroid_strategy()) {
        let complex = m.independence_complex();
        let base = matroid::matroid_betti(&m, Prime::FIVE).unwrap();
        for p in [Prime::TWO, Prime::THREE, Prime::FIVE] {
            let t = betti::betti_numbers(&complex, p, Convention::Ring).unwrap();
            prop_assert_eq!(&t.to_convention(Convention::Ring).iter().collect::<Vec<_>>(),
                            &base.iter().collect::<Vec<_>>());
            prop_assert!(betti::depth_info(&complex, &t).cohen_macaulay);
            if complex.dimension() >= 1 {
                prop_assert!(transfer::cm_inheritance_check(&complex, p).unwrap());
            }
        }
    }

    #[test]
    fn jv_support_matches_hochster(m in matroid_strategy()) {
        let graded = matroid::matroid_graded_betti(&m, Prime::TWO).unwrap();
        prop_assert_eq!(matroid::jv_support(&m).unwrap(), graded.support(Convention::Ideal));
    }
}

#[test]
fn parallel_and_serial_enumeration_agree() {
    let serial = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
    let wide = rayon::ThreadPoolBuilder::new().num_threads(4).build().unwrap();
    for c in gen::complex_corpus(99, 30, 9) {
        for p in [Prime::TWO, Prime::THREE] {
            let a = serial.install(|| betti::hochster(&c, p).unwrap());
            let b = wide.install(|| betti::hochster(&c, p).unwrap());
            assert_eq!(a, b);
        }
    }
}
