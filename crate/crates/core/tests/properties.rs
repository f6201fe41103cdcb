use std::collections::BTreeSet;

use fpp_core::fpp::{
    fpp_violations, in_dirac_ball, in_fpp, induction_certificate, rho_levi, rho_p, ParabolicType,
};
use fpp_core::infchar::{
    dominant_representative, same_infinitesimal_character, weyl_orbit, DEFAULT_ORBIT_CAP,
};
use fpp_core::rational::{frac, int};
use fpp_core::weights::weight_system;
use fpp_core::{Rational, RootDatum, Weight, WeylWord};
use num_traits::Signed;
use proptest::prelude::*;

const SMALL_TYPES: &[&str] = &[
    "A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3", "C4", "D4", "G2", "F4", "A1xA1", "A2xB2",
];
const RANK2: &[&str] = &["A2", "B2", "G2", "A1xA1"];

fn datum_strategy(types: &'static [&'static str]) -> impl Strategy<Value = RootDatum> {
    proptest::sample::select(types).prop_map(|l| RootDatum::build(l).unwrap())
}

fn rational() -> impl Strategy<Value = Rational> {
    (-12i64..=12, 1i64..=4).prop_map(|(p, q)| frac(p, q))
}

fn weight(rank: usize) -> impl Strategy<Value = Weight> {
    proptest::collection::vec(rational(), rank).prop_map(Weight::new)
}

fn word(rank: usize) -> impl Strategy<Value = WeylWord> {
    proptest::collection::vec(0..rank, 0..12).prop_map(WeylWord)
}

fn datum_with<S: Strategy>(
    types: &'static [&'static str],
    f: impl Fn(usize) -> S + Clone + 'static,
) -> impl Strategy<Value = (RootDatum, S::Value)> {
    datum_strategy(types).prop_flat_map(move |d| {
        let n = d.rank();
        (Just(d), f(n))
    })
}

/// `(a, b)` computed through the simple-root Gram matrix, independently of
/// the pairing-based formula used by the library.
fn gram_form(d: &RootDatum, a: &Weight, b: &Weight) -> Rational {
    let g = d.simple_root_gram();
    let (ra, rb) = (d.to_root_basis(a), d.to_root_basis(b));
    let mut s = int(0);
    for i in 0..d.rank() {
        for j in 0..d.rank() {
            s += ra[i] * g[i][j] * rb[j];
        }
    }
    s
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn form_is_weyl_invariant(
        (d, (w, a, b)) in datum_with(SMALL_TYPES, |n| (word(n), weight(n), weight(n)))
    ) {
        let lhs = d.invariant_form(&d.act(&w, &a).unwrap(), &d.act(&w, &b).unwrap()).unwrap();
        prop_assert_eq!(lhs, d.invariant_form(&a, &b).unwrap());
    }

    #[test]
    fn form_matches_gram_route((d, (a, b)) in datum_with(SMALL_TYPES, |n| (weight(n), weight(n)))) {
        let f = d.invariant_form(&a, &b).unwrap();
        prop_assert_eq!(f, gram_form(&d, &a, &b));
        prop_assert_eq!(f, d.invariant_form(&b, &a).unwrap());
        if a != d.zero_weight() {
            prop_assert!(d.norm_squared(&a) > int(0));
        }
    }

    #[test]
    fn form_against_simple_roots((d, a) in datum_with(SMALL_TYPES, weight)) {
        for j in 0..d.rank() {
            let alpha = d.simple_root(j).unwrap();
            let half_len = d.invariant_form(&alpha, &alpha).unwrap() / 2;
            prop_assert_eq!(d.invariant_form(&a, &alpha).unwrap(), a[j] * half_len);
        }
    }

    #[test]
    fn root_basis_round_trip((d, a) in datum_with(SMALL_TYPES, weight)) {
        prop_assert_eq!(d.from_root_basis(&d.to_root_basis(&a)), a);
    }

    #[test]
    fn word_then_inverse_is_identity((d, (w, a)) in datum_with(SMALL_TYPES, |n| (word(n), weight(n)))) {
        let moved = d.act(&w, &a).unwrap();
        prop_assert_eq!(d.act(&w.inverse(), &moved).unwrap(), a);
    }

    #[test]
    fn dominant_representative_properties((d, a) in datum_with(SMALL_TYPES, weight)) {
        let (dom, w) = dominant_representative(&d, &a).unwrap();
        prop_assert!(dom.is_dominant());
        prop_assert_eq!(&d.act(&w, &a).unwrap(), &dom);
        prop_assert_eq!(d.norm_squared(&dom), d.norm_squared(&a));
        let (again, w2) = dominant_representative(&d, &dom).unwrap();
        prop_assert_eq!(again, dom);
        prop_assert!(w2.is_empty());
    }

    #[test]
    fn same_character_matches_orbit_oracle(
        (d, (a, b, w)) in datum_with(RANK2, |n| (weight(n), weight(n), word(n)))
    ) {
        let orbit = weyl_orbit(&d, &a, DEFAULT_ORBIT_CAP).unwrap();
        prop_assert_eq!(same_infinitesimal_character(&d, &a, &b).unwrap(), orbit.contains(&b));
        let c = d.act(&w, &a).unwrap();
        prop_assert!(orbit.contains(&c));
        prop_assert!(same_infinitesimal_character(&d, &a, &c).unwrap());
    }

    #[test]
    fn fpp_and_violations_agree((d, a) in datum_with(SMALL_TYPES, weight)) {
        if a.is_dominant() {
            let v = fpp_violations(&d, &a).unwrap();
            prop_assert_eq!(v.is_empty(), in_fpp(&d, &a).unwrap());
        } else {
            prop_assert!(!in_fpp(&d, &a).unwrap());
            prop_assert!(fpp_violations(&d, &a).is_err());
        }
    }

    #[test]
    fn certificate_consistency((d, raw) in datum_with(SMALL_TYPES, weight)) {
        for delta in d.involution_candidates() {
            // symmetrize a dominant parameter so that delta fixes it
            let pos = Weight::new(raw.coords().iter().map(|c| c.abs()).collect());
            let lambda = &pos + &delta.apply(&pos);
            match induction_certificate(&d, &lambda, delta) {
                Ok(cert) => {
                    prop_assert!(cert.all_checks_pass());
                    prop_assert_eq!(delta.apply(&cert.mu), cert.mu.clone());
                    let partner = delta.image(cert.alpha);
                    if partner != cert.alpha {
                        let lowered = &lambda - &d.fundamental_weight(cert.alpha).unwrap();
                        prop_assert_eq!(lowered[partner], lambda[cert.alpha]);
                        prop_assert!(lowered[partner] > int(1));
                        prop_assert_eq!(cert.lemma_checks.len(), 2);
                    } else {
                        prop_assert_eq!(cert.lemma_checks.len(), 1);
                    }
                }
                Err(e) => prop_assert_eq!(e, fpp_core::Error::NoViolation),
            }
        }
    }
}

#[test]
fn rho_pairs_to_one_with_simple_coroots() {
    for label in [
        "A1", "A2", "A3", "A4", "A5", "A6", "B2", "B3", "B4", "B5", "B6", "C2", "C3", "C4", "C5",
        "C6", "D4", "D5", "D6", "E6", "F4", "G2",
    ] {
        let d = RootDatum::build(label).unwrap();
        assert_eq!(d.rho(), d.rho_from_roots(), "{label}");
        for j in 0..d.rank() {
            assert_eq!(d.pairing(&d.rho_from_roots(), j).unwrap(), int(1), "{label}");
        }
    }
}

/// Independent route to the positive roots: the Weyl orbits of the simple
/// roots, restricted to nonnegative coefficient vectors.
#[test]
fn positive_roots_match_weyl_closure() {
    for label in ["A3", "B3", "C3", "D4", "G2", "F4", "B2", "A2xG2", "E6"] {
        let d = RootDatum::build(label).unwrap();
        let mut oracle = BTreeSet::new();
        for i in 0..d.rank() {
            for v in weyl_orbit(&d, &d.simple_root(i).unwrap(), DEFAULT_ORBIT_CAP).unwrap() {
                let r = d.to_root_basis(&v);
                assert!(r.iter().all(|c| c.is_integer()));
                if r.iter().all(|c| *c >= int(0)) {
                    oracle.insert(r.iter().map(|c| c.to_integer()).collect::<Vec<i64>>());
                }
            }
        }
        let got: BTreeSet<Vec<i64>> = d.positive_roots().iter().cloned().collect();
        assert_eq!(got, oracle, "{label}");
        assert!(d.positive_roots().iter().flatten().all(|&c| c >= 0));
    }
}

#[test]
fn weight_system_invariants() {
    for label in ["A2", "A3", "B2", "B3", "C3", "G2", "D4"] {
        let d = RootDatum::build(label).unwrap();
        let mut highs: Vec<Weight> = (0..d.rank()).map(|i| d.fundamental_weight(i).unwrap()).collect();
        highs.push(d.rho());
        for h in highs {
            let ws = weight_system(&d, &h).unwrap();
            let top = d.norm_squared(&h);
            let orbit = weyl_orbit(&d, &h, DEFAULT_ORBIT_CAP).unwrap();
            for mu in ws.members() {
                let n = d.norm_squared(mu);
                assert!(n <= top, "{label} {h} {mu}");
                assert_eq!(n == top, orbit.contains(mu), "{label} {h} {mu}");
                let diff = d.to_root_basis(&(&h - mu));
                assert!(diff.iter().all(|c| c.is_integer()), "coset {label} {mu}");
                for i in 0..d.rank() {
                    assert!(ws.contains(&d.reflect(mu, i).unwrap()), "W-stable {label} {mu}");
                }
            }
            // dominant members all lie below the highest weight
            for mu in ws.dominant_members() {
                let diff = d.to_root_basis(&(&h - mu));
                assert!(diff.iter().all(|c| *c >= int(0)));
            }
        }
    }
}

#[test]
fn fpp_lies_in_dirac_ball() {
    use proptest::strategy::ValueTree;
    use proptest::test_runner::TestRunner;
    let mut runner = TestRunner::deterministic();
    for label in ["A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3", "C4", "D4", "G2", "F4", "A1xA1"] {
        let d = RootDatum::build(label).unwrap();
        let coord = (0i64..=24).prop_map(|p| frac(p, 24));
        let strat = proptest::collection::vec(coord, d.rank());
        for _ in 0..1000 {
            let lambda = Weight::new(strat.new_tree(&mut runner).unwrap().current());
            assert!(in_fpp(&d, &lambda).unwrap());
            assert!(in_dirac_ball(&d, &lambda).unwrap(), "{label} {lambda}");
        }
    }
}

#[test]
fn levi_and_nilradical_halves_sum_to_rho() {
    for label in ["A3", "B3", "C3", "G2", "D4", "F4"] {
        let d = RootDatum::build(label).unwrap();
        let n = d.rank();
        for mask in 0u32..(1 << n) {
            let removed = (0..n).filter(|i| mask & (1 << i) != 0);
            let p = ParabolicType::from_removed(&d, removed).unwrap();
            let sum = &rho_levi(&d, &p).unwrap() + &rho_p(&d, &p).unwrap();
            assert_eq!(sum, d.rho());
            let rp = rho_p(&d, &p).unwrap();
            for &j in p.levi_simples() {
                assert_eq!(rp[j], int(0), "rho_P is orthogonal to Levi coroots");
            }
        }
    }
}
