//! Invariants of graded quotient rings that can tell two presentations apart:
//! annihilator dimensions of linear forms, whole-ring fingerprints, and the
//! "annihilator generated by two linear forms" test.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{gf2_kernel_basis, Gf2Matrix};
use crate::poly::{combine_actions, Gf2Poly, QuotientRing};

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Kernel dimensions of multiplication by a linear form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnnProfile {
    pub form: Gf2Poly,
    /// Entry `k - 1` is the kernel dimension in degree `k`, for `k = 1..=D`.
    pub kernel_dims: Vec<usize>,
}

fn check_linear(ell: &Gf2Poly) -> Result<u64> {
    ell.linear_mask()
        .ok_or_else(|| Error::Precondition("annihilators need a nonzero linear form".into()))
}

fn check_horizon(q: &QuotientRing, d: usize) -> Result<()> {
    if d + 1 > q.degree_bound() {
        return Err(Error::Precondition(format!(
            "horizon {d} needs a quotient computed to degree {}, have {}",
            d + 1,
            q.degree_bound()
        )));
    }
    Ok(())
}

pub fn ann_profile(q: &QuotientRing, ell: &Gf2Poly, d: usize) -> Result<AnnProfile> {
    check_linear(ell)?;
    check_horizon(q, d)?;
    let kernel_dims = (1..=d)
        .map(|k| q.multiplication_matrix(ell, k).map(|m| m.nullity()))
        .collect::<Result<_>>()?;
    Ok(AnnProfile {
        form: ell.clone(),
        kernel_dims,
    })
}

/// Linear forms spanning the degree-1 annihilator of `ell`.
pub fn linear_annihilators(q: &QuotientRing, ell: &Gf2Poly) -> Result<Vec<Gf2Poly>> {
    check_linear(ell)?;
    let m = q.multiplication_matrix(ell, 1)?;
    Ok(gf2_kernel_basis(&m).iter().map(|v| q.from_coordinates(v, 1)).collect())
}

/// Whether the ideal generated by `gens` in `q` equals the annihilator of
/// `ell` in every degree `0..=d`.
///
/// Containment is checked directly (`ell * g = 0`); dimensions of the ideal
/// are `HF(q) - HF(q / gens)`, from a second Groebner computation.
pub fn ann_generated_by(q: &QuotientRing, ell: &Gf2Poly, gens: &[Gf2Poly], d: usize) -> Result<bool> {
    check_linear(ell)?;
    check_horizon(q, d)?;
    if gens.iter().any(|g| !q.contains(&ell.mul(g))) {
        return Ok(false);
    }
    let mut all = q.groebner().to_vec();
    all.extend(gens.iter().cloned());
    let smaller = QuotientRing::new(*q.ring(), &all, d);
    let big = q.hilbert_function(d)?;
    let small = smaller.hilbert_function(d)?;
    for k in 0..=d {
        let kernel = q.multiplication_matrix(ell, k)?.nullity();
        if big[k] - small[k] != kernel {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Multiset of annihilator profiles over all nonzero linear forms.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Fingerprint {
    pub degree: usize,
    /// Profile (kernel dimensions in degrees `1..=degree`) to multiplicity.
    pub profiles: BTreeMap<Vec<usize>, usize>,
}

impl Fingerprint {
    pub fn form_count(&self) -> usize {
        self.profiles.values().sum()
    }
}

impl fmt::Display for Fingerprint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .profiles
            .iter()
            .map(|(p, c)| format!("{c}x{p:?}"))
            .collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

pub fn fingerprint(q: &QuotientRing, d: usize) -> Result<Fingerprint> {
    check_horizon(q, d)?;
    let v = q.ring().nvars();
    let actions: Vec<Vec<Gf2Matrix>> = (1..=d).map(|k| q.variable_actions(k)).collect::<Result<_>>()?;
    let dims: Vec<(usize, usize)> = (1..=d)
        .map(|k| (q.standard_monomials(k + 1).len(), q.standard_monomials(k).len()))
        .collect();
    let profile = |mask: u64| -> Vec<usize> {
        actions
            .iter()
            .zip(&dims)
            .map(|(a, &(rows, cols))| combine_actions(a, mask, rows, cols).nullity())
            .collect()
    };
    let masks: Vec<u64> = (1u64..1 << v).collect();
    #[cfg(feature = "parallel")]
    let all: Vec<Vec<usize>> = masks.par_iter().map(|&m| profile(m)).collect();
    #[cfg(not(feature = "parallel"))]
    let all: Vec<Vec<usize>> = masks.iter().map(|&m| profile(m)).collect();
    let mut profiles = BTreeMap::new();
    for p in all {
        *profiles.entry(p).or_insert(0) += 1;
    }
    Ok(Fingerprint { degree: d, profiles })
}

/// A linear form whose annihilator is generated by two linear forms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoGenerated {
    pub form: Gf2Poly,
    pub generators: [Gf2Poly; 2],
}

/// Every nonzero linear form whose annihilator, through degree `d`, is
/// generated by exactly two linear forms.
///
/// Any two linear generators must span the whole degree-1 annihilator, and
/// all spanning pairs give the same ideal, so one basis pair per form decides
/// the question for every pair.
pub fn two_generated_annihilators(q: &QuotientRing, d: usize) -> Result<Vec<TwoGenerated>> {
    check_horizon(q, d)?;
    let mut found = Vec::new();
    for ell in q.ring().linear_forms() {
        let basis = linear_annihilators(q, &ell)?;
        if basis.len() != 2 {
            continue;
        }
        if ann_generated_by(q, &ell, &basis, d)? {
            let [a, b]: [Gf2Poly; 2] = basis.try_into().expect("two elements");
            found.push(TwoGenerated {
                form: ell,
                generators: [a, b],
            });
        }
    }
    Ok(found)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

/// An invariant on which two rings differ.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "invariant", rename_all = "snake_case")]
pub enum Certificate {
    HilbertFunction {
        degree: usize,
        left: Vec<usize>,
        right: Vec<usize>,
    },
    Fingerprint {
        profile: Vec<usize>,
        left_count: usize,
        right_count: usize,
    },
    TwoGeneratedAnnihilator {
        left_count: usize,
        right_count: usize,
        /// A form (and its two annihilator generators) from the side with
        /// more such forms, in text syntax.
        witness_side: Side,
        witness_form: String,
        witness_generators: [String; 2],
    },
}

impl Certificate {
    /// The same certificate with the two rings swapped.
    pub fn swapped(&self) -> Certificate {
        match self.clone() {
            Certificate::HilbertFunction { degree, left, right } => Certificate::HilbertFunction {
                degree,
                left: right,
                right: left,
            },
            Certificate::Fingerprint {
                profile,
                left_count,
                right_count,
            } => Certificate::Fingerprint {
                profile,
                left_count: right_count,
                right_count: left_count,
            },
            Certificate::TwoGeneratedAnnihilator {
                left_count,
                right_count,
                witness_side,
                witness_form,
                witness_generators,
            } => Certificate::TwoGeneratedAnnihilator {
                left_count: right_count,
                right_count: left_count,
                witness_side: match witness_side {
                    Side::Left => Side::Right,
                    Side::Right => Side::Left,
                },
                witness_form,
                witness_generators,
            },
        }
    }
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Certificate::HilbertFunction { degree, left, right } => {
                write!(f, "Hilbert functions differ in degree {degree}: {left:?} vs {right:?}")
            }
            Certificate::Fingerprint {
                profile,
                left_count,
                right_count,
            } => write!(
                f,
                "annihilator profile {profile:?} occurs {left_count} times vs {right_count} times"
            ),
            Certificate::TwoGeneratedAnnihilator {
                left_count,
                right_count,
                witness_side,
                witness_form,
                witness_generators,
            } => write!(
                f,
                "linear forms with annihilator generated by two linear forms: {left_count} vs {right_count}; \
                 on the {} side Ann({witness_form}) = <{}, {}>",
                match witness_side {
                    Side::Left => "left",
                    Side::Right => "right",
                },
                witness_generators[0],
                witness_generators[1]
            ),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict")]
pub enum Verdict {
    #[serde(rename = "DISTINGUISHED")]
    Distinguished { certificate: Certificate },
    #[serde(rename = "NOT-DISTINGUISHED")]
    NotDistinguished,
}

impl Verdict {
    pub fn is_distinguished(&self) -> bool {
        matches!(self, Verdict::Distinguished { .. })
    }

    pub fn label(&self) -> &'static str {
        match self {
            Verdict::Distinguished { .. } => "DISTINGUISHED",
            Verdict::NotDistinguished => "NOT-DISTINGUISHED",
        }
    }
}

pub const NOT_DISTINGUISHED_NOTE: &str = "no implemented invariant separates these rings";

fn hf_rung(q1: &QuotientRing, q2: &QuotientRing, d: usize) -> Result<Option<Certificate>> {
    let (h1, h2) = (q1.hilbert_function(d)?, q2.hilbert_function(d)?);
    Ok((0..=d).find(|&k| h1[k] != h2[k]).map(|k| Certificate::HilbertFunction {
        degree: k,
        left: h1.clone(),
        right: h2.clone(),
    }))
}

fn fingerprint_rung(q1: &QuotientRing, q2: &QuotientRing, d: usize) -> Result<Option<Certificate>> {
    let (f1, f2) = (fingerprint(q1, d)?, fingerprint(q2, d)?);
    let profile = f1
        .profiles
        .keys()
        .chain(f2.profiles.keys())
        .filter(|p| f1.profiles.get(*p) != f2.profiles.get(*p))
        .min()
        .cloned();
    Ok(profile.map(|profile| Certificate::Fingerprint {
        left_count: f1.profiles.get(&profile).copied().unwrap_or(0),
        right_count: f2.profiles.get(&profile).copied().unwrap_or(0),
        profile,
    }))
}

fn annihilator_rung(q1: &QuotientRing, q2: &QuotientRing, d: usize) -> Result<Option<Certificate>> {
    let (t1, t2) = (two_generated_annihilators(q1, d)?, two_generated_annihilators(q2, d)?);
    if t1.len() == t2.len() {
        return Ok(None);
    }
    let (side, w, ring) = if t1.len() > t2.len() {
        (Side::Left, &t1[0], q1.ring())
    } else {
        (Side::Right, &t2[0], q2.ring())
    };
    Ok(Some(Certificate::TwoGeneratedAnnihilator {
        left_count: t1.len(),
        right_count: t2.len(),
        witness_side: side,
        witness_form: w.form.display(ring).to_string(),
        witness_generators: [
            w.generators[0].display(ring).to_string(),
            w.generators[1].display(ring).to_string(),
        ],
    }))
}

type Rung = fn(&QuotientRing, &QuotientRing, usize) -> Result<Option<Certificate>>;
const LADDER: [Rung; 3] = [hf_rung, fingerprint_rung, annihilator_rung];

fn check_pair(q1: &QuotientRing, q2: &QuotientRing, d: usize) -> Result<()> {
    if q1.ring().nvars() != q2.ring().nvars() {
        return Err(Error::Precondition(format!(
            "variable counts differ: {} vs {}",
            q1.ring().nvars(),
            q2.ring().nvars()
        )));
    }
    check_horizon(q1, d)?;
    check_horizon(q2, d)
}

/// Runs the ladder Hilbert function, fingerprint, two-generated annihilators
/// through degree `d` and stops at the first invariant that differs. Both
/// quotients must reach degree `d + 1`.
pub fn distinguish(q1: &QuotientRing, q2: &QuotientRing, d: usize) -> Result<Verdict> {
    check_pair(q1, q2, d)?;
    for rung in LADDER {
        if let Some(certificate) = rung(q1, q2, d)? {
            return Ok(Verdict::Distinguished { certificate });
        }
    }
    Ok(Verdict::NotDistinguished)
}

/// Every rung of the ladder that separates the two rings, in ladder order.
pub fn separating_invariants(q1: &QuotientRing, q2: &QuotientRing, d: usize) -> Result<Vec<Certificate>> {
    check_pair(q1, q2, d)?;
    let mut out = Vec::new();
    for rung in LADDER {
        out.extend(rung(q1, q2, d)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::poly::{parse_poly, PolyRing};
    use crate::presentations::parse_ideal;

    fn cstar(d: usize) -> QuotientRing {
        let r = PolyRing::new(1, true).unwrap();
        QuotientRing::new(r, &[parse_poly("e1*(x-e1)", &r).unwrap()], d)
    }

    fn fixture(text: &str, d: usize) -> QuotientRing {
        parse_ideal(text).unwrap().quotient(d)
    }

    #[test]
    fn cstar_profiles() {
        let q = cstar(3);
        let r = *q.ring();
        assert_eq!(ann_profile(&q, &r.e(0), 2).unwrap().kernel_dims, [1, 1]);
        assert_eq!(ann_profile(&q, &r.x(), 2).unwrap().kernel_dims, [0, 0]);
        let ann = linear_annihilators(&q, &r.e(0)).unwrap();
        assert_eq!(ann, [parse_poly("x+e1", &r).unwrap()]);
        assert!(ann_profile(&q, &Gf2Poly::zero(), 2).is_err());
        assert!(ann_profile(&q, &r.x().mul(&r.x()), 2).is_err());
        assert!(ann_profile(&q, &r.x(), 3).is_err());

        let fp = fingerprint(&q, 2).unwrap();
        assert_eq!(fp.form_count(), 3);
        assert_eq!(fp.profiles, BTreeMap::from([(vec![0, 0], 1), (vec![1, 1], 2)]));
    }

    #[test]
    fn polynomial_ring_fingerprint() {
        let q = QuotientRing::new(PolyRing::new(0, true).unwrap(), &[], 5);
        let fp = fingerprint(&q, 4).unwrap();
        assert_eq!(fp.profiles, BTreeMap::from([(vec![0, 0, 0, 0], 1)]));
        assert!(ann_generated_by(&q, &q.ring().x(), &[], 4).unwrap());
    }

    #[test]
    fn vertical_annihilator() {
        let q = fixture(fixtures::VERTICAL_A, 5);
        let r = *q.ring();
        let e2 = r.e(1);
        assert_eq!(ann_profile(&q, &e2, 4).unwrap().kernel_dims[0], 2);
        let gens = [r.e(2), parse_poly("x-e2", &r).unwrap()];
        assert!(ann_generated_by(&q, &e2, &gens, 4).unwrap());
        assert!(!ann_generated_by(&q, &e2, &gens[..1], 4).unwrap());

        let flipped = fixture(fixtures::VERTICAL_A_PRIME, 5);
        assert!(two_generated_annihilators(&flipped, 4).unwrap().is_empty());
        assert!(!two_generated_annihilators(&q, 4).unwrap().is_empty());
    }

    #[test]
    fn falk_fingerprints_differ() {
        let (j, jp) = (fixture(fixtures::FALK_J, 5), fixture(fixtures::FALK_J_PRIME, 5));
        assert_eq!(j.hilbert_function(4).unwrap(), jp.hilbert_function(4).unwrap());
        assert_ne!(fingerprint(&j, 4).unwrap(), fingerprint(&jp, 4).unwrap());
        let v = distinguish(&j, &jp, 4).unwrap();
        assert!(matches!(
            v,
            Verdict::Distinguished {
                certificate: Certificate::Fingerprint { .. }
            }
        ));
    }

    #[test]
    fn distinguish_is_symmetric() {
        let q = fixture(fixtures::VERTICAL_A, 5);
        let qp = fixture(fixtures::VERTICAL_A_PRIME, 5);
        assert_eq!(distinguish(&q, &q, 4).unwrap(), Verdict::NotDistinguished);
        let (Verdict::Distinguished { certificate: c1 }, Verdict::Distinguished { certificate: c2 }) =
            (distinguish(&q, &qp, 4).unwrap(), distinguish(&qp, &q, 4).unwrap())
        else {
            panic!("vertical pair not distinguished");
        };
        assert_eq!(c1.swapped(), c2);
        let all = separating_invariants(&q, &qp, 4).unwrap();
        assert_eq!(all[0], c1);
        assert!(matches!(
            all.last(),
            Some(Certificate::TwoGeneratedAnnihilator {
                right_count: 0,
                witness_side: Side::Left,
                ..
            })
        ));
        assert!(distinguish(&q, &cstar(5), 4).is_err());
    }
}
