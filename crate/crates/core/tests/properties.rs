use num_bigint::BigInt;
use num_traits::ToPrimitive;
use proptest::prelude::*;

use alphaspec_core::exactpoly::{rat, BivarPoly, IntPoly, RatFunc, Rational, Ring};
use alphaspec_core::graph::{disjoint_union, join, Graph};
use alphaspec_core::scan::canonical_form;
use alphaspec_core::spectra::{
    charpoly_at, charpoly_exact, charpoly_exact_leverrier, eigenvalues, invariants_from_charpoly, InvariantReport,
};

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut it = bits.into_iter();
            for i in 0..n {
                for j in i + 1..n {
                    if it.next().unwrap_or(false) {
                        edges.push((i, j));
                    }
                }
            }
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

fn int_poly() -> impl Strategy<Value = IntPoly> {
    proptest::collection::vec(-20i64..=20, 0..5).prop_map(|c| IntPoly::new(c.into_iter().map(BigInt::from).collect()))
}

fn bivar() -> impl Strategy<Value = BivarPoly> {
    proptest::collection::vec(int_poly(), 0..4).prop_map(BivarPoly::from_x_rows)
}

fn samples() -> Vec<Rational> {
    vec![rat(0, 1), rat(1, 4), rat(1, 2), rat(3, 4), rat(1, 1)]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn bivariate_ring_axioms(a in bivar(), b in bivar(), c in bivar()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a - &b) + &b, a.clone());
    }

    #[test]
    fn univariate_gcd_divides(a in int_poly(), b in int_poly(), c in int_poly()) {
        let g = Ring::gcd(&a.mul(&c), &b.mul(&c));
        if !Ring::is_zero(&g) {
            prop_assert!(a.mul(&c).div_exact(&g).is_some());
            prop_assert!(b.mul(&c).div_exact(&g).is_some());
            if !Ring::is_zero(&c) {
                prop_assert!(g.div_exact(&c.primitive_part()).is_some());
            }
        }
    }

    #[test]
    fn ratfunc_normalize_idempotent(n in bivar(), d in bivar(), k in bivar()) {
        prop_assume!(!d.is_zero() && !k.is_zero());
        let f = RatFunc::new(&n * &k, &d * &k).unwrap();
        let once = f.clone().normalize();
        let twice = once.clone().normalize();
        prop_assert_eq!(twice.numerator(), once.numerator());
        prop_assert_eq!(twice.denominator(), once.denominator());
        prop_assert_eq!(once, RatFunc::new(n, d).unwrap());
    }

    #[test]
    fn exact_paths_agree(g in graph_strategy(8)) {
        let symbolic = charpoly_exact(&g).unwrap();
        for a in samples() {
            prop_assert_eq!(symbolic.eval_alpha(&a), charpoly_at(&g, &a).unwrap());
        }
    }

    #[test]
    fn elimination_matches_leverrier(g in graph_strategy(7)) {
        prop_assert_eq!(charpoly_exact(&g).unwrap(), charpoly_exact_leverrier(&g).unwrap());
    }

    #[test]
    fn trace_and_moments(g in graph_strategy(9)) {
        let n = g.order();
        let m = g.edge_count() as i64;
        let p = charpoly_exact(&g).unwrap();
        // x^{n-1} carries -tr(A_a) = -2ma
        prop_assert_eq!(p.coeff(n - 1, 1), BigInt::from(-2 * m));
        prop_assert_eq!(p.coeff(n - 1, 0), BigInt::from(0));
        for a in [rat(1, 4), rat(1, 2), rat(3, 4)] {
            let spec = eigenvalues(&g, a.to_f64().unwrap(), 1e-12).unwrap();
            let sum: f64 = spec.eigenvalues.iter().sum();
            prop_assert!((sum - 2.0 * m as f64 * a.to_f64().unwrap()).abs() < 1e-8);
            let report = invariants_from_charpoly(&charpoly_at(&g, &a).unwrap(), &a).unwrap();
            let mut direct = InvariantReport::of_graph(&g);
            direct.regular_r = None;
            let mut read = report.clone();
            read.regular_r = None;
            prop_assert_eq!(read, direct);
        }
    }

    #[test]
    fn union_multiplies(g in graph_strategy(5), h in graph_strategy(5)) {
        let u = disjoint_union(&[g.clone(), h.clone()]).unwrap();
        prop_assert_eq!(charpoly_exact(&u).unwrap(), &charpoly_exact(&g).unwrap() * &charpoly_exact(&h).unwrap());
    }

    #[test]
    fn join_is_complement_of_union(g in graph_strategy(5), h in graph_strategy(5)) {
        let u = disjoint_union(&[g.complement(), h.complement()]).unwrap();
        prop_assert_eq!(join(&g, &h).unwrap(), u.complement());
        prop_assert_eq!(g.complement().complement(), g);
    }

    #[test]
    fn regular_complement_spectrum(k in 1usize..4, len in 3usize..6) {
        // r-regular G: every eigenvalue ar + (1-a)t with t != r becomes
        // a(n-1-r) + (1-a)(-1-t) in the complement.
        let g = disjoint_union(&vec![alphaspec_core::graph::cycle(len); k]).unwrap();
        let n = g.order() as f64;
        let r = 2.0;
        for a in [0.25, 0.5, 0.75] {
            let mut base: Vec<f64> = eigenvalues(&g, 0.0, 1e-12).unwrap().eigenvalues;
            base.remove(0);
            let mut predicted: Vec<f64> = base.iter().map(|t| a * (n - 1.0 - r) + (1.0 - a) * (-1.0 - t)).collect();
            predicted.push(n - 1.0 - r);
            predicted.sort_by(|x, y| y.partial_cmp(x).unwrap());
            let got = eigenvalues(&g.complement(), a, 1e-12).unwrap().eigenvalues;
            for (p, q) in predicted.iter().zip(&got) {
                prop_assert!((p - q).abs() < 1e-8, "{:?} vs {:?}", predicted, got);
            }
        }
    }

    #[test]
    fn canonical_form_ignores_labels(g in graph_strategy(6), seed in any::<u64>()) {
        let n = g.order();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut s = seed;
        for i in (1..n).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (s >> 33) as usize % (i + 1));
        }
        prop_assert_eq!(canonical_form(&g), canonical_form(&g.relabel(&perm)));
    }

    #[test]
    fn graph6_round_trip(g in graph_strategy(20)) {
        prop_assert_eq!(Graph::parse_graph6(&g.to_graph6()).unwrap(), g);
    }
}
