use std::fmt;

use super::monomial::{Monomial, MAX_VARS};
use crate::error::{Error, Result};

/// Variable layout of `GF(2)[e_1, .., e_n]` or `GF(2)[e_1, .., e_n, x]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PolyRing {
    pub n: usize,
    pub has_x: bool,
}

impl PolyRing {
    pub fn new(n: usize, has_x: bool) -> Result<Self> {
        if n + has_x as usize > MAX_VARS {
            return Err(Error::Invalid(format!(
                "{n} hyperplanes exceed the supported variable count {MAX_VARS}"
            )));
        }
        Ok(PolyRing { n, has_x })
    }

    pub fn nvars(&self) -> usize {
        self.n + self.has_x as usize
    }

    pub fn x_index(&self) -> Option<usize> {
        self.has_x.then_some(self.n)
    }

    pub fn e(&self, i: usize) -> Gf2Poly {
        assert!(i < self.n);
        Gf2Poly::var(i)
    }

    pub fn x(&self) -> Gf2Poly {
        Gf2Poly::var(self.x_index().expect("ring has no x"))
    }

    pub fn var_name(&self, i: usize) -> String {
        if Some(i) == self.x_index() {
            "x".into()
        } else {
            format!("e{}", i + 1)
        }
    }

    pub fn linear_forms(&self) -> impl Iterator<Item = Gf2Poly> + '_ {
        let v = self.nvars();
        (1u64..1 << v).map(move |mask| Gf2Poly::linear_from_mask(mask, v))
    }
}

/// Polynomial over GF(2): a set of monomials, kept sorted in decreasing
/// monomial order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Gf2Poly {
    terms: Vec<Monomial>,
}

impl Gf2Poly {
    pub fn zero() -> Self {
        Gf2Poly { terms: vec![] }
    }

    pub fn one() -> Self {
        Gf2Poly::monomial(Monomial::ONE)
    }

    pub fn monomial(m: Monomial) -> Self {
        Gf2Poly { terms: vec![m] }
    }

    pub fn var(i: usize) -> Self {
        Gf2Poly::monomial(Monomial::var(i))
    }

    /// Builds from arbitrary terms; repeated monomials cancel in pairs.
    pub fn from_terms(mut terms: Vec<Monomial>) -> Self {
        terms.sort_unstable_by(|a, b| b.cmp(a));
        let mut out: Vec<Monomial> = Vec::with_capacity(terms.len());
        for m in terms {
            if out.last() == Some(&m) {
                out.pop();
            } else {
                out.push(m);
            }
        }
        Gf2Poly { terms: out }
    }

    /// Sum of the variables whose bits are set in `mask`.
    pub fn linear_from_mask(mask: u64, nvars: usize) -> Self {
        Gf2Poly::from_terms((0..nvars).filter(|i| mask >> i & 1 == 1).map(Monomial::var).collect())
    }

    pub fn terms(&self) -> &[Monomial] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading(&self) -> Option<&Monomial> {
        self.terms.first()
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|m| m.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.iter().map(|m| m.degree());
        match degs.next() {
            Some(d) => degs.all(|e| e == d),
            None => true,
        }
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.terms.binary_search_by(|t| m.cmp(t)).is_ok()
    }

    pub fn add(&self, other: &Gf2Poly) -> Gf2Poly {
        let (a, b) = (&self.terms, &other.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Greater => {
                    out.push(a[i]);
                    i += 1;
                }
                std::cmp::Ordering::Less => {
                    out.push(b[j]);
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Gf2Poly { terms: out }
    }

    pub fn add_assign(&mut self, other: &Gf2Poly) {
        *self = self.add(other);
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Gf2Poly {
        // multiplication by a monomial preserves the order
        Gf2Poly {
            terms: self.terms.iter().map(|t| t.mul(m)).collect(),
        }
    }

    pub fn mul(&self, other: &Gf2Poly) -> Gf2Poly {
        let mut terms = Vec::with_capacity(self.terms.len() * other.terms.len());
        for a in &self.terms {
            for b in &other.terms {
                terms.push(a.mul(b));
            }
        }
        Gf2Poly::from_terms(terms)
    }

    pub fn pow(&self, k: u32) -> Gf2Poly {
        let mut acc = Gf2Poly::one();
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Simultaneous substitution of `images[i]` for variable `i`. Variables
    /// without an image are left alone.
    pub fn substitute(&self, images: &[Option<Gf2Poly>]) -> Gf2Poly {
        let mut acc: Vec<Monomial> = Vec::new();
        for m in &self.terms {
            let mut kept = Monomial::ONE;
            let mut factor = Gf2Poly::one();
            for (i, &e) in m.exps().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                match images.get(i).and_then(|o| o.as_ref()) {
                    Some(img) => factor = factor.mul(&img.pow(e as u32)),
                    None => {
                        let mut exps = [0u8; MAX_VARS];
                        exps[i] = e;
                        kept = kept.mul(&Monomial::from_exps(&exps));
                    }
                }
            }
            acc.extend(factor.terms.iter().map(|t| t.mul(&kept)));
        }
        Gf2Poly::from_terms(acc)
    }

    /// Sets variable `var` to the constant `value` (0 or 1).
    pub fn evaluate_var(&self, var: usize, value: bool) -> Gf2Poly {
        let terms = self
            .terms
            .iter()
            .filter(|m| value || m.exp(var) == 0)
            .map(|m| {
                let mut exps = *m.exps();
                exps[var] = 0;
                Monomial::from_exps(&exps)
            })
            .collect();
        Gf2Poly::from_terms(terms)
    }

    /// Exact division by variable `var`, or `None` if some term lacks it.
    pub fn div_var(&self, var: usize) -> Option<Gf2Poly> {
        let v = Monomial::var(var);
        let terms: Option<Vec<Monomial>> = self.terms.iter().map(|m| m.div(&v)).collect();
        terms.map(|terms| Gf2Poly { terms })
    }

    /// Removes variable `var`, shifting higher variables down by one. Every
    /// term must have exponent zero in `var`.
    pub fn drop_var(&self, var: usize) -> Gf2Poly {
        let terms = self
            .terms
            .iter()
            .map(|m| {
                assert_eq!(m.exp(var), 0, "dropping a variable that occurs");
                let e = m.exps();
                let mut exps = [0u8; MAX_VARS];
                exps[..var].copy_from_slice(&e[..var]);
                exps[var..MAX_VARS - 1].copy_from_slice(&e[var + 1..]);
                Monomial::from_exps(&exps)
            })
            .collect();
        Gf2Poly::from_terms(terms)
    }

    /// Degree-1 part's support as a bitmask over variables, if the polynomial
    /// is a nonzero linear form.
    pub fn linear_mask(&self) -> Option<u64> {
        if self.is_zero() || self.terms.iter().any(|m| m.degree() != 1) {
            return None;
        }
        Some(self.terms.iter().fold(0u64, |acc, m| acc | 1 << m.last_var().expect("degree 1")))
    }

    pub fn display<'a>(&'a self, ring: &'a PolyRing) -> PolyDisplay<'a> {
        PolyDisplay { poly: self, ring }
    }

    /// Highest variable index occurring, if any.
    pub fn max_var(&self) -> Option<usize> {
        self.terms.iter().filter_map(|m| m.last_var()).max()
    }
}

impl fmt::Debug for Gf2Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.terms).finish()
    }
}

pub struct PolyDisplay<'a> {
    poly: &'a Gf2Poly,
    ring: &'a PolyRing,
}

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return f.write_str("0");
        }
        for (k, m) in self.poly.terms.iter().enumerate() {
            if k > 0 {
                f.write_str("+")?;
            }
            if m.is_one() {
                f.write_str("1")?;
                continue;
            }
            let mut first = true;
            for (i, &e) in m.exps().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if !first {
                    f.write_str("*")?;
                }
                first = false;
                f.write_str(&self.ring.var_name(i))?;
                if e > 1 {
                    write!(f, "^{e}")?;
                }
            }
        }
        Ok(())
    }
}

/// Parses the polynomial text syntax: `+`-separated terms, each a
/// `*`-separated product of `e<i>`, `x`, `(x+e<i>)`, `(x-e<i>)`, `0` or `1`,
/// each optionally raised to `^k`. `-` is read as `+`.
pub fn parse_poly(text: &str, ring: &PolyRing) -> Result<Gf2Poly> {
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err(Error::Invalid("empty polynomial".into()));
    }
    let mut acc = Gf2Poly::zero();
    for term in split_top_level(&s, &['+', '-'])? {
        let mut prod = Gf2Poly::one();
        for factor in split_top_level(term, &['*'])? {
            prod = prod.mul(&parse_factor(factor, ring)?);
        }
        acc.add_assign(&prod);
    }
    Ok(acc)
}

fn split_top_level<'a>(s: &'a str, seps: &[char]) -> Result<Vec<&'a str>> {
    let mut parts = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => {
                depth -= 1;
                if depth < 0 {
                    return Err(Error::Invalid(format!("unbalanced parentheses in {s:?}")));
                }
            }
            c if depth == 0 && seps.contains(&c) => {
                parts.push(&s[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    if depth != 0 {
        return Err(Error::Invalid(format!("unbalanced parentheses in {s:?}")));
    }
    parts.push(&s[start..]);
    if parts.iter().any(|p| p.is_empty()) {
        return Err(Error::Invalid(format!("empty term or factor in {s:?}")));
    }
    Ok(parts)
}

fn parse_factor(f: &str, ring: &PolyRing) -> Result<Gf2Poly> {
    let (base, power) = match f.rsplit_once('^') {
        Some((b, p)) if !p.contains(')') => {
            let k: u32 = p.parse().map_err(|_| Error::Invalid(format!("bad exponent in {f:?}")))?;
            (b, k)
        }
        _ => (f, 1),
    };
    let base = if let Some(inner) = base.strip_prefix('(').and_then(|b| b.strip_suffix(')')) {
        parse_poly(inner, ring)?
    } else {
        parse_atom(base, ring)?
    };
    Ok(base.pow(power))
}

fn parse_atom(a: &str, ring: &PolyRing) -> Result<Gf2Poly> {
    match a {
        "0" => Ok(Gf2Poly::zero()),
        "1" => Ok(Gf2Poly::one()),
        "x" => match ring.x_index() {
            Some(i) => Ok(Gf2Poly::var(i)),
            None => Err(Error::Invalid("x used in a ring without x".into())),
        },
        _ => {
            let idx = a
                .strip_prefix('e')
                .and_then(|d| d.parse::<usize>().ok())
                .ok_or_else(|| Error::Invalid(format!("unknown factor {a:?}")))?;
            if idx == 0 || idx > ring.n {
                return Err(Error::Invalid(format!("variable {a} out of range 1..={}", ring.n)));
            }
            Ok(Gf2Poly::var(idx - 1))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ring(n: usize) -> PolyRing {
        PolyRing::new(n, true).unwrap()
    }

    #[test]
    fn parse_and_print() {
        let r = ring(5);
        let p = parse_poly("e3*e4+e3*e5+e4*e5+e4*x", &r).unwrap();
        assert_eq!(p.display(&r).to_string(), "e3*e4+e3*e5+e4*e5+e4*x");
        let q = parse_poly("e1*(x-e1)", &r).unwrap();
        assert_eq!(q.display(&r).to_string(), "e1^2+e1*x");
        assert_eq!(q, parse_poly("e1 * (x + e1)", &r).unwrap());
        let cube = parse_poly("(x+e2)^2", &r).unwrap();
        assert_eq!(cube.display(&r).to_string(), "e2^2+x^2");
        assert_eq!(parse_poly("e1+e1", &r).unwrap(), Gf2Poly::zero());
        assert_eq!(Gf2Poly::zero().display(&r).to_string(), "0");
        assert!(parse_poly("e6", &r).is_err());
        assert!(parse_poly("e0", &r).is_err());
        assert!(parse_poly("x", &PolyRing::new(2, false).unwrap()).is_err());
        assert!(parse_poly("e1*", &r).is_err());
        assert!(parse_poly("(e1", &r).is_err());
    }

    #[test]
    fn substitution() {
        let r = ring(1);
        let e = r.e(0);
        let x = r.x();
        let f = e.mul(&x.add(&e));
        // x := 0
        assert_eq!(f.evaluate_var(1, false), e.mul(&e));
        // x := 1 gives e^2 + e
        assert_eq!(f.evaluate_var(1, true), e.mul(&e).add(&e));
        // e := x + e leaves e(x+e) unchanged
        let flipped = f.substitute(&[Some(x.add(&e)), None]);
        assert_eq!(flipped, f);
        assert_eq!(x.mul(&e).div_var(1), Some(e.clone()));
        assert_eq!(e.div_var(1), None);
        assert_eq!(e.mul(&e).drop_var(1), e.mul(&e));
    }

    fn poly() -> impl Strategy<Value = Gf2Poly> {
        proptest::collection::vec(proptest::collection::vec(0u8..3, 3), 0..5)
            .prop_map(|ts| Gf2Poly::from_terms(ts.iter().map(|e| Monomial::from_exps(e)).collect()))
    }

    proptest! {
        #[test]
        fn ring_axioms(a in poly(), b in poly(), c in poly()) {
            prop_assert!(a.add(&a).is_zero());
            prop_assert_eq!(a.mul(&b), b.mul(&a));
            prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
            prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
            let r = ring(2);
            prop_assert_eq!(parse_poly(&a.display(&r).to_string(), &r).unwrap(), a);
        }
    }
}
