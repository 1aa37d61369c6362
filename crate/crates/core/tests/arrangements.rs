mod common;

use std::collections::BTreeSet;

use eqos_core::arrangement::{Arrangement, Sign, SignPair, SignVector};
use eqos_core::exact::{fm_feasible, fm_solve, parse_rational, qrank, verify_certificate, FmCertificate, QMatrix, Rational};
use rand::Rng;

fn sign_vectors(n: usize) -> impl Iterator<Item = SignVector> {
    (0..3usize.pow(n as u32)).map(move |mut code| {
        SignVector(
            (0..n)
                .map(|_| {
                    let s = [Sign::Plus, Sign::Minus, Sign::Zero][code % 3];
                    code /= 3;
                    s
                })
                .collect(),
        )
    })
}

fn subsets(n: usize, max: usize) -> impl Iterator<Item = Vec<usize>> {
    (0u32..1 << n)
        .filter(move |m| m.count_ones() as usize <= max)
        .map(move |m| (0..n).filter(|i| m >> i & 1 == 1).collect())
}

fn random_point(rng: &mut impl Rng, d: usize) -> Vec<Rational> {
    (0..d)
        .map(|_| {
            let den: i64 = rng.gen_range(1..=16);
            let num = rng.gen_range(-10 * den..=10 * den);
            parse_rational(&format!("{num}/{den}")).unwrap()
        })
        .collect()
}

#[test]
fn sampled_chambers_are_enumerated() {
    let mut rng = common::rng(1);
    for (name, a) in common::corpus() {
        let chambers: BTreeSet<SignVector> = a.chambers().unwrap().into_iter().collect();
        let mut seen = BTreeSet::new();
        for _ in 0..10_000 {
            let sv = a.sign_vector_at(&random_point(&mut rng, a.dim()));
            if sv.is_chamber() {
                seen.insert(sv);
            }
        }
        assert!(seen.is_subset(&chambers), "{name}: sampled chamber missing from enumeration");
        assert!(!seen.is_empty(), "{name}");
    }
}

#[test]
fn enumerated_faces_match_the_exhaustive_sweep() {
    for (name, a) in common::corpus() {
        let faces: BTreeSet<SignVector> = a.enumerate_faces().unwrap().into_iter().collect();
        for sv in sign_vectors(a.len()) {
            let sys = a.face_system(&sv.0);
            let cert = fm_solve(&sys).unwrap();
            assert!(verify_certificate(&sys, &cert));
            assert_eq!(cert.is_feasible(), faces.contains(&sv), "{name}: {sv}");
            if let FmCertificate::Feasible { point } = cert {
                assert_eq!(a.sign_vector_at(&point), sv, "{name}");
            }
        }
    }
}

#[test]
fn sign_regions_agree_with_chambers() {
    for (name, a) in common::corpus() {
        let chambers = a.chambers().unwrap();
        for s in subsets(a.len(), 3) {
            for signs in 0u32..1 << s.len() {
                let (plus, minus): (Vec<usize>, Vec<usize>) = s.iter().partition(|&&i| {
                    let k = s.iter().position(|&j| j == i).unwrap();
                    signs >> k & 1 == 1
                });
                let sp = SignPair::new(plus.clone(), minus.clone()).unwrap();
                let witnessed = chambers.iter().any(|c| {
                    plus.iter().all(|&i| c.0[i] == Sign::Plus) && minus.iter().all(|&i| c.0[i] == Sign::Minus)
                });
                assert_eq!(a.sign_region_empty(&sp).unwrap(), !witnessed, "{name}: {plus:?} {minus:?}");
            }
        }
    }
}

#[test]
fn reflection_through_a_common_point() {
    for (name, a) in common::corpus() {
        for s in subsets(a.len(), 3).filter(|s| !s.is_empty()) {
            if a.intersection_empty(&s) {
                continue;
            }
            for signs in 0u32..1 << s.len() {
                let plus: Vec<usize> = s.iter().enumerate().filter(|(k, _)| signs >> k & 1 == 1).map(|(_, &i)| i).collect();
                let minus: Vec<usize> = s.iter().copied().filter(|i| !plus.contains(i)).collect();
                let sp = SignPair::new(plus, minus).unwrap();
                if a.sign_region_empty(&sp).unwrap() {
                    assert!(a.sign_region_empty(&sp.reversed()).unwrap(), "{name}: {s:?}");
                }
            }
        }
    }
}

fn normal_rank(a: &Arrangement, s: &[usize]) -> usize {
    let rows: Vec<Vec<Rational>> = s.iter().map(|&i| a.forms()[i].normal.clone()).collect();
    qrank(&QMatrix::from_rows(a.dim(), &rows))
}

#[test]
fn excess_codimension_is_a_rank_drop() {
    for (name, a) in common::corpus() {
        for s in subsets(a.len(), 4) {
            if !a.intersection_empty(&s) {
                assert_eq!(a.excess_codim(&s).unwrap(), normal_rank(&a, &s) < s.len(), "{name}: {s:?}");
            }
        }
    }
}

#[test]
fn cones_are_central() {
    for (name, a) in common::corpus() {
        let c = a.cone();
        assert!(c.is_central(), "{name}");
        assert_eq!(c.len(), a.len() + 1);
        let origin = vec![Rational::from_integer(0.into()); c.dim()];
        assert!(c.sign_vector_at(&origin).0.iter().all(|&s| s == Sign::Zero));
        assert_eq!(c.chambers().unwrap().len(), 2 * a.chambers().unwrap().len(), "{name}");
    }
}

#[test]
fn trivial_chamber_counts() {
    use eqos_core::arrangement::{boolean_arrangement, AffineForm};
    let line = Arrangement::new(1, vec![AffineForm::from_ints(&[1], 0)]).unwrap();
    assert_eq!(line.chambers().unwrap().len(), 2);
    let empty = Arrangement::new(2, vec![]).unwrap();
    assert_eq!(empty.chambers().unwrap(), vec![SignVector(vec![])]);
    assert_eq!(boolean_arrangement(3).chambers().unwrap().len(), 8);
    assert!(fm_feasible(&boolean_arrangement(3).face_system(&[Sign::Zero; 3])).unwrap());
}
