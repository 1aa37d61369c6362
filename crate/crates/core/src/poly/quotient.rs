use std::collections::{HashMap, HashSet};

use super::groebner::{buchberger, reduce_with_leads};
use super::monomial::Monomial;
use super::polynomial::{Gf2Poly, PolyRing};
use crate::error::{Error, Result};
use crate::exact::{BitVec, Gf2Matrix};

/// `GF(2)[vars] / J` truncated at a degree bound: the reduced Groebner basis
/// of `J` and the standard monomials of each degree up to the bound.
#[derive(Clone, Debug)]
pub struct QuotientRing {
    ring: PolyRing,
    groebner: Vec<Gf2Poly>,
    leads: Vec<Monomial>,
    degree_bound: usize,
    standard: Vec<Vec<Monomial>>,
    index: Vec<HashMap<Monomial, usize>>,
}

impl QuotientRing {
    pub fn new(ring: PolyRing, gens: &[Gf2Poly], degree_bound: usize) -> Self {
        Self::from_groebner(ring, buchberger(gens), degree_bound)
    }

    /// Uses `groebner` as is; it must already be a reduced Groebner basis.
    pub fn from_groebner(ring: PolyRing, groebner: Vec<Gf2Poly>, degree_bound: usize) -> Self {
        let leads: Vec<Monomial> = groebner.iter().map(|g| *g.leading().expect("nonzero")).collect();
        let nvars = ring.nvars();
        let irreducible = |m: &Monomial| !leads.iter().any(|l| l.divides(m));

        let mut standard: Vec<Vec<Monomial>> = Vec::with_capacity(degree_bound + 1);
        let mut current: Vec<Monomial> = if irreducible(&Monomial::ONE) {
            vec![Monomial::ONE]
        } else {
            vec![]
        };
        for _ in 0..=degree_bound {
            let mut next: HashSet<Monomial> = HashSet::new();
            for m in &current {
                for v in 0..nvars {
                    let c = m.mul(&Monomial::var(v));
                    if irreducible(&c) {
                        next.insert(c);
                    }
                }
            }
            current.sort_unstable_by(|a, b| b.cmp(a));
            standard.push(std::mem::replace(&mut current, next.into_iter().collect()));
        }
        let index = standard
            .iter()
            .map(|ms| ms.iter().enumerate().map(|(i, m)| (*m, i)).collect())
            .collect();
        QuotientRing {
            ring,
            groebner,
            leads,
            degree_bound,
            standard,
            index,
        }
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn groebner(&self) -> &[Gf2Poly] {
        &self.groebner
    }

    pub fn degree_bound(&self) -> usize {
        self.degree_bound
    }

    /// Ordered standard monomials of degree `k`.
    pub fn standard_monomials(&self, k: usize) -> &[Monomial] {
        self.standard.get(k).map_or(&[], |v| v.as_slice())
    }

    pub fn normal_form(&self, f: &Gf2Poly) -> Gf2Poly {
        reduce_with_leads(f, &self.groebner, &self.leads)
    }

    pub fn contains(&self, f: &Gf2Poly) -> bool {
        self.normal_form(f).is_zero()
    }

    /// Dimensions of the graded pieces in degrees `0..=d`.
    pub fn hilbert_function(&self, d: usize) -> Result<Vec<usize>> {
        if d > self.degree_bound {
            return Err(Error::Precondition(format!(
                "degree {d} exceeds the quotient's bound {}",
                self.degree_bound
            )));
        }
        Ok(self.standard[..=d].iter().map(|v| v.len()).collect())
    }

    /// Sum of the Hilbert function up to the degree bound.
    pub fn total_dimension(&self) -> usize {
        self.standard.iter().map(|v| v.len()).sum()
    }

    /// Coordinates of a polynomial supported on degree-`k` standard monomials.
    pub fn coordinates(&self, f: &Gf2Poly, k: usize) -> Result<BitVec> {
        let idx = &self.index[k];
        let mut v = BitVec::zeros(idx.len());
        for m in f.terms() {
            match idx.get(m) {
                Some(&i) => v.set(i, true),
                None => {
                    return Err(Error::Precondition(format!(
                        "term {m:?} is not a standard monomial of degree {k}; is the ideal homogeneous?"
                    )))
                }
            }
        }
        Ok(v)
    }

    /// Polynomial with the given coordinates in degree `k`.
    pub fn from_coordinates(&self, v: &BitVec, k: usize) -> Gf2Poly {
        Gf2Poly::from_terms(v.ones().map(|i| self.standard[k][i]).collect())
    }

    /// Matrix of `m -> normal_form(var * m)` from degree `k` to degree `k+1`,
    /// one per variable.
    pub fn variable_actions(&self, k: usize) -> Result<Vec<Gf2Matrix>> {
        self.check_step(k)?;
        let (src, dst) = (&self.standard[k], self.standard[k + 1].len());
        (0..self.ring.nvars())
            .map(|v| {
                let var = Monomial::var(v);
                let mut m = Gf2Matrix::zeros(dst, src.len());
                for (j, s) in src.iter().enumerate() {
                    let image = self.normal_form(&Gf2Poly::monomial(s.mul(&var)));
                    for i in self.coordinates(&image, k + 1)?.ones() {
                        m.set(i, j, true);
                    }
                }
                Ok(m)
            })
            .collect()
    }

    /// Matrix of multiplication by the linear form `ell` from degree `k` to
    /// degree `k+1`, in the standard-monomial bases.
    pub fn multiplication_matrix(&self, ell: &Gf2Poly, k: usize) -> Result<Gf2Matrix> {
        let mask = ell
            .linear_mask()
            .ok_or_else(|| Error::Precondition("multiplier must be a nonzero form of degree 1".into()))?;
        let actions = self.variable_actions(k)?;
        Ok(combine_actions(&actions, mask, self.standard[k + 1].len(), self.standard[k].len()))
    }

    fn check_step(&self, k: usize) -> Result<()> {
        if k + 1 > self.degree_bound {
            return Err(Error::Precondition(format!(
                "degree {} exceeds the quotient's bound {}",
                k + 1,
                self.degree_bound
            )));
        }
        Ok(())
    }
}

/// XOR of the variable matrices selected by `mask`.
pub(crate) fn combine_actions(actions: &[Gf2Matrix], mask: u64, rows: usize, cols: usize) -> Gf2Matrix {
    let mut m = Gf2Matrix::zeros(rows, cols);
    for (v, a) in actions.iter().enumerate() {
        if mask >> v & 1 == 1 {
            m.xor_assign(a);
        }
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::gf2_kernel_basis;
    use crate::poly::parse_poly;
    use proptest::prelude::*;

    fn cstar() -> QuotientRing {
        let r = PolyRing::new(1, true).unwrap();
        QuotientRing::new(r, &[parse_poly("e1*(x-e1)", &r).unwrap()], 6)
    }

    fn binom(n: usize, k: usize) -> usize {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn normal_forms() {
        let q = cstar();
        let r = *q.ring();
        assert_eq!(q.normal_form(&parse_poly("e1^2", &r).unwrap()), parse_poly("e1*x", &r).unwrap());
        assert!(q.normal_form(&Gf2Poly::zero()).is_zero());
        for k in 0..=6 {
            let xk = r.x().pow(k);
            assert_eq!(q.normal_form(&xk), xk);
        }
    }

    #[test]
    fn hilbert_examples() {
        assert_eq!(cstar().hilbert_function(4).unwrap(), vec![1, 2, 2, 2, 2]);
        let r = PolyRing::new(1, false).unwrap();
        let q = QuotientRing::new(r, &[parse_poly("e1^2", &r).unwrap()], 4);
        assert_eq!(q.hilbert_function(3).unwrap(), vec![1, 1, 0, 0]);
        let r = PolyRing::new(2, true).unwrap();
        let gens = [parse_poly("e1*(x-e1)", &r).unwrap(), parse_poly("e2*(x-e2)", &r).unwrap()];
        let q = QuotientRing::new(r, &gens, 5);
        assert_eq!(q.hilbert_function(5).unwrap(), vec![1, 3, 4, 4, 4, 4]);
        let names: Vec<String> = q.standard_monomials(2).iter().map(|m| Gf2Poly::monomial(*m).display(&r).to_string()).collect();
        assert_eq!(names, ["e1*e2", "e1*x", "e2*x", "x^2"]);
        assert!(q.hilbert_function(6).is_err());

        // polynomial ring: binomial counts
        for v in 1..5 {
            let q = QuotientRing::new(PolyRing::new(v - 1, true).unwrap(), &[], 5);
            let hf = q.hilbert_function(5).unwrap();
            for (k, h) in hf.iter().enumerate() {
                assert_eq!(*h, binom(v + k - 1, k));
            }
        }
    }

    #[test]
    fn multiplication_examples() {
        let q = cstar();
        let r = *q.ring();
        let m = q.multiplication_matrix(&r.e(0), 1).unwrap();
        assert_eq!(m.rank(), 1);
        let ker = gf2_kernel_basis(&m);
        assert_eq!(ker.len(), 1);
        assert_eq!(q.from_coordinates(&ker[0], 1), parse_poly("e1+x", &r).unwrap());
        for k in 0..5 {
            assert_eq!(q.multiplication_matrix(&r.x(), k).unwrap().nullity(), 0);
        }
        assert!(q.multiplication_matrix(&Gf2Poly::zero(), 1).is_err());
        assert!(q.multiplication_matrix(&r.e(0).mul(&r.x()), 1).is_err());
        assert!(q.multiplication_matrix(&r.x(), 6).is_err());
    }

    #[test]
    fn standard_monomials_are_squarefree_in_e() {
        let r = PolyRing::new(3, true).unwrap();
        let gens: Vec<Gf2Poly> = (0..3).map(|i| r.e(i).mul(&r.x().add(&r.e(i)))).collect();
        let q = QuotientRing::new(r, &gens, 5);
        for k in 0..=5 {
            for m in q.standard_monomials(k) {
                assert!((0..3).all(|i| m.exp(i) <= 1));
            }
        }
    }

    fn small_poly() -> impl Strategy<Value = Gf2Poly> {
        let term = proptest::collection::vec(0u8..3, 3).prop_map(|e| Monomial::from_exps(&e));
        proptest::collection::vec(term, 0..4).prop_map(Gf2Poly::from_terms)
    }

    proptest! {
        #[test]
        fn normal_form_is_multiplicative(f in small_poly(), g in small_poly()) {
            let r = PolyRing::new(2, true).unwrap();
            let gens = [parse_poly("e1*(x-e1)", &r).unwrap(), parse_poly("e2*(x-e2)", &r).unwrap(), parse_poly("e1*e2", &r).unwrap()];
            let q = QuotientRing::new(r, &gens, 4);
            let lhs = q.normal_form(&f.mul(&g));
            let rhs = q.normal_form(&q.normal_form(&f).mul(&q.normal_form(&g)));
            prop_assert_eq!(lhs, rhs);
            prop_assert_eq!(q.normal_form(&f.add(&g)), q.normal_form(&f).add(&q.normal_form(&g)));
        }
    }
}
