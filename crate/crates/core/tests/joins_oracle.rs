use alphaspec_core::exactpoly::{rat, BivarPoly, IntPoly, RatFunc};
use alphaspec_core::graph::*;
use alphaspec_core::joins::{
    coronal, coronal_at, forge_cospectral_pair, forge_cospectral_pair_both, join_charpoly, join_charpoly_via_coronals,
};
use alphaspec_core::scan::{enumerate_graphs, is_isomorphic};
use alphaspec_core::spectra::{charpoly_exact, Mode};
use alphaspec_core::Error;

#[test]
fn regular_coronal_is_n_over_x_minus_r() {
    for n in 1..=7 {
        for g in enumerate_graphs(n).unwrap().into_iter().filter(|g| g.is_regular().is_some()) {
            let r = g.is_regular().unwrap() as i64;
            let expected =
                RatFunc::new(BivarPoly::constant(n as i64), &BivarPoly::x() - &BivarPoly::constant(r)).unwrap();
            assert_eq!(*coronal(&g).unwrap().value(), expected, "{g}");
        }
    }
}

#[test]
fn coronal_at_fixed_alpha_matches_symbolic() {
    for g in enumerate_graphs(5).unwrap() {
        let c = coronal(&g).unwrap();
        for a in [rat(0, 1), rat(2, 7), rat(1, 1)] {
            assert_eq!(coronal_at(&g, &a).unwrap(), c.value().eval_alpha(&a).unwrap(), "{g} at {a}");
        }
    }
}

#[test]
fn both_join_routes_match_determinant() {
    let small: Vec<Graph> = (1..=4).flat_map(|n| enumerate_graphs(n).unwrap()).collect();
    for (i, g1) in small.iter().enumerate().step_by(3) {
        for g2 in small.iter().skip(i % 5).step_by(4) {
            let direct = charpoly_exact(&join(g1, g2).unwrap()).unwrap();
            assert_eq!(join_charpoly(g1, g2).unwrap(), direct, "{g1} v {g2}");
            assert_eq!(join_charpoly_via_coronals(g1, g2).unwrap(), direct, "{g1} v {g2}");
        }
    }
}

#[test]
fn shift_is_a_substitution() {
    let c = coronal(&cycle(5)).unwrap();
    let shifted = c.value().shift_x(&IntPoly::monomial(num_bigint::BigInt::from(-3), 1));
    for (x0, a0) in [(rat(7, 2), rat(1, 3)), (rat(-1, 1), rat(3, 4))] {
        let lhs = shifted.eval(&x0, &a0).unwrap();
        let rhs = c.value().eval(&(&x0 - &(&a0 * rat(3, 1))), &a0).unwrap();
        assert_eq!(lhs, rhs);
    }
}

#[test]
fn forged_pairs_verify_and_reject_bad_inputs() {
    let h1 = cycle(6);
    let h2 = disjoint_union(&[cycle(3), cycle(3)]).unwrap();
    let at_one = Mode::Fixed(rat(1, 1));
    for g in [complete(1), path(3), star(4), empty(2)] {
        let cert = forge_cospectral_pair(&g, &h1, &h2, &at_one).unwrap();
        assert!(cert.verify().unwrap());
        assert!(!is_isomorphic(&cert.left, &cert.right));
        let json = cert.to_json();
        for key in ["mode", "alpha", "left_g6", "right_g6", "charpoly", "coronal_left", "coronal_right"] {
            assert!(json.get(key).is_some(), "{key}");
        }
    }
    // adjacency-cospectral with different coronals: no certificate
    let s = star(5);
    let c = disjoint_union(&[cycle(4), empty(1)]).unwrap();
    assert!(matches!(
        forge_cospectral_pair(&complete(1), &s, &c, &Mode::Fixed(rat(0, 1))),
        Err(Error::ForgePrecondition(_))
    ));
    // not cospectral at 1/2
    assert!(forge_cospectral_pair(&complete(1), &h1, &h2, &Mode::Symbolic).is_err());
    // varying both sides
    let cert = forge_cospectral_pair_both(&h1, &h2, &h1, &h2, &at_one).unwrap();
    assert!(cert.verify().unwrap());
}

#[test]
fn graph6_errors_are_reported() {
    assert!(Graph::parse_graph6("").is_err());
    assert!(Graph::parse_graph6("C").is_err());
    assert!(Graph::parse_graph6("A_x").is_err());
    assert!(Graph::parse_graph6("A\x10").is_err());
    assert_eq!(Graph::parse_graph6("A_").unwrap(), complete(2));
    let lines = parse_graph6_lines("A_\n\nBw\n").unwrap();
    assert_eq!(lines, vec![complete(2), complete(3)]);
    assert_eq!(parse_graph6_lines("A_\nzz\n").unwrap_err().0, 2);
}
