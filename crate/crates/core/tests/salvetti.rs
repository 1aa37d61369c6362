mod common;

use eqos_core::arrangement::{Arrangement, PointedData, SignPair};
use eqos_core::presentations::{eq_ideal, os_ideal};
use eqos_core::salvetti::{
    build_salvetti, equivariant_cohomology_gf2, homology_gf2, parse_sign_vectors, sign_vectors_to_text, CovectorData,
};

/// Central corpus arrangements and cones of the small affine ones.
fn small_central() -> Vec<(String, Arrangement)> {
    common::corpus()
        .into_iter()
        .map(|(n, a)| if a.is_central() { (n, a) } else { (format!("cone({n})"), a.cone()) })
        .filter(|(_, a)| a.len() <= 5 && a.rank() <= 3)
        .collect()
}

#[test]
fn betti_numbers_and_euler_characteristic() {
    let targets = small_central();
    assert!(targets.len() >= 5);
    for (name, a) in targets {
        let sal = build_salvetti(&a.enumerate_faces().unwrap()).unwrap();
        let complex = sal.order_complex();
        let top = complex.dimension().unwrap();
        let betti = homology_gf2(&complex, top);
        assert_eq!(betti[0], 1, "{name}");
        let alternating: i64 = betti.iter().enumerate().map(|(k, &b)| if k % 2 == 0 { b as i64 } else { -(b as i64) }).sum();
        assert_eq!(alternating, complex.euler_characteristic(), "{name}");
        let counts = complex.counts();
        let by_faces: i64 = counts.iter().enumerate().map(|(k, &c)| if k % 2 == 0 { c as i64 } else { -(c as i64) }).sum();
        assert_eq!(by_faces, alternating, "{name}");
        let mut os = os_ideal(&a).unwrap().hilbert_function(top);
        os.resize(betti.len(), 0);
        assert_eq!(betti, os, "{name}");
    }
}

#[test]
fn involution_is_an_order_automorphism() {
    for (name, a) in small_central() {
        let sal = build_salvetti(&a.enumerate_faces().unwrap()).unwrap();
        let inv = sal.involution().unwrap();
        let n = sal.len();
        for i in 0..n {
            assert_eq!(inv[inv[i]], i, "{name}");
            for j in 0..n {
                assert_eq!(sal.leq(i, j), sal.leq(inv[i], inv[j]), "{name}: {i} {j}");
            }
        }
        assert_eq!((0..n).filter(|&i| inv[i] == i).count(), sal.chamber_count(), "{name}");
    }
}

#[test]
fn borel_dimensions_have_the_free_signature() {
    for (name, a) in small_central() {
        let d = a.rank() + 2;
        let sal = build_salvetti(&a.enumerate_faces().unwrap()).unwrap();
        let complex = sal.order_complex();
        let borel = equivariant_cohomology_gf2(&complex, &sal.involution().unwrap(), d).unwrap();
        let mut betti = homology_gf2(&complex, complex.dimension().unwrap());
        betti.resize(d, 0);
        for k in 0..d {
            let prev = if k > 0 { borel[k - 1] } else { 0 };
            assert_eq!(borel[k] - prev, betti[k], "{name}: degree {k}");
        }
        assert_eq!(borel, eq_ideal(&a).unwrap().hilbert_function(d)[..d], "{name}");
    }
}

#[test]
fn covector_input_matches_the_realized_pipeline() {
    for (name, a) in small_central() {
        let faces = a.enumerate_faces().unwrap();
        let text = sign_vectors_to_text(&faces, a.len());
        let covectors = parse_sign_vectors(&text).unwrap();
        let topes: Vec<_> = faces.iter().filter(|f| f.is_chamber()).cloned().collect();
        let data = CovectorData::with_topes(covectors, &topes).unwrap();
        assert_eq!(data.rank(), a.rank(), "{name}");
        let n = a.len();
        for m in 1u32..1 << n {
            let s: Vec<usize> = (0..n).filter(|i| m >> i & 1 == 1).collect();
            assert_eq!(data.intersection_empty(&s), a.intersection_empty(&s), "{name}: {s:?}");
            assert_eq!(data.excess_codim(&s).unwrap(), a.excess_codim(&s).unwrap(), "{name}: {s:?}");
            for signs in 0u32..1 << s.len() {
                let plus: Vec<usize> = s.iter().enumerate().filter(|(k, _)| signs >> k & 1 == 1).map(|(_, &i)| i).collect();
                let minus: Vec<usize> = s.iter().copied().filter(|i| !plus.contains(i)).collect();
                let sp = SignPair::new(plus, minus).unwrap();
                assert_eq!(data.sign_region_empty(&sp).unwrap(), a.sign_region_empty(&sp).unwrap(), "{name}");
            }
        }
        assert!(eq_ideal(&data).unwrap().same_ideal(&eq_ideal(&a).unwrap()), "{name}");
        let realized = build_salvetti(&faces).unwrap();
        let abstract_ = build_salvetti(data.poset().faces()).unwrap();
        assert_eq!(realized.elements(), abstract_.elements(), "{name}");
    }
}
