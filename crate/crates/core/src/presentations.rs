//! Ring presentations built from arrangement data: the Orlik-Solomon ideal,
//! the equivariant ideal over `GF(2)[x]`, and their specializations at
//! `x = 0` and `x = 1`.
//!
//! Generating sets are enumerated over all supports of size at most
//! `rank + 1`. With [`Pruning::Minimal`] only minimal supports are kept: a
//! product relation over a non-minimal sign pattern is a multiple of the one
//! over a smaller infeasible pattern, and the matching degree-lowered relation
//! lies in the ideal generated by the smaller pattern's relations.

use std::collections::HashSet;
use std::fmt;

use crate::arrangement::{Arrangement, PointedData, Sign, SignPair, SignVector};
use crate::error::{parse_err, Error, Result};
use crate::poly::{buchberger, ideal_equal, parse_poly, Gf2Poly, Monomial, PolyRing, QuotientRing};

/// Why a generator is in the ideal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Provenance {
    /// `e_i^2` (ordinary) or `e_i (x - e_i)` (equivariant).
    Square { index: usize },
    /// Product over an empty intersection (ordinary, `minus` empty) or an
    /// empty open sign region (equivariant).
    Product { pair: SignPair },
    /// Degree-lowered relation for a dependent subset (ordinary) or an empty
    /// sign region whose hyperplanes still meet (equivariant).
    Lowered { pair: SignPair },
    /// Read from an ideal file.
    Given { line: usize },
}

impl Provenance {
    pub fn family(&self) -> Option<u8> {
        match self {
            Provenance::Square { .. } => Some(1),
            Provenance::Product { .. } => Some(2),
            Provenance::Lowered { .. } => Some(3),
            Provenance::Given { .. } => None,
        }
    }
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Provenance::Square { index } => write!(f, "family 1, i={}", index + 1),
            Provenance::Product { pair } => write!(f, "family 2, {pair}"),
            Provenance::Lowered { pair } => write!(f, "family 3, {pair}"),
            Provenance::Given { line } => write!(f, "input line {line}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Pruning {
    /// Every relation from every support of size at most `rank + 1`.
    None,
    /// Only relations from minimal supports.
    Minimal,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealPresentation {
    pub ring: PolyRing,
    pub generators: Vec<Gf2Poly>,
    pub provenance: Vec<Provenance>,
}

impl IdealPresentation {
    pub fn n(&self) -> usize {
        self.ring.n
    }

    pub fn has_x(&self) -> bool {
        self.ring.has_x
    }

    fn push(&mut self, g: Gf2Poly, p: Provenance) {
        self.generators.push(g);
        self.provenance.push(p);
    }

    pub fn groebner(&self) -> Vec<Gf2Poly> {
        buchberger(&self.generators)
    }

    pub fn quotient(&self, degree_bound: usize) -> QuotientRing {
        QuotientRing::new(self.ring, &self.generators, degree_bound)
    }

    pub fn hilbert_function(&self, d: usize) -> Vec<usize> {
        self.quotient(d).hilbert_function(d).expect("within bound")
    }

    pub fn same_ideal(&self, other: &IdealPresentation) -> bool {
        self.ring == other.ring && ideal_equal(&self.generators, &other.generators)
    }

    /// Ideal file text: header `n <count> x <0|1>` and one generator per line.
    pub fn to_text(&self) -> String {
        let mut s = format!("n {} x {}\n", self.ring.n, self.ring.has_x as u8);
        for g in &self.generators {
            s.push_str(&g.display(&self.ring).to_string());
            s.push('\n');
        }
        s
    }
}

/// Parses an ideal file.
pub fn parse_ideal(text: &str) -> Result<IdealPresentation> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (hline, header) = lines.next().ok_or_else(|| parse_err(1, "missing header \"n <count> x <0|1>\""))?;
    let words: Vec<&str> = header.split_whitespace().collect();
    let ring = match words[..] {
        ["n", n, "x", flag] => {
            let n: usize = n.parse().map_err(|_| parse_err(hline, format!("bad count {n:?}")))?;
            let has_x = match flag {
                "0" => false,
                "1" => true,
                _ => return Err(parse_err(hline, "x flag must be 0 or 1")),
            };
            PolyRing::new(n, has_x).map_err(|e| parse_err(hline, e.to_string()))?
        }
        _ => return Err(parse_err(hline, "header must be \"n <count> x <0|1>\"")),
    };
    let mut p = IdealPresentation {
        ring,
        generators: vec![],
        provenance: vec![],
    };
    for (lineno, line) in lines {
        let g = parse_poly(line, &ring).map_err(|e| parse_err(lineno, e.to_string()))?;
        p.push(g, Provenance::Given { line: lineno });
    }
    Ok(p)
}

/// `∂ ∏_{i∈s} e_i = Σ_{j∈s} ∏_{i∈s, i≠j} e_i` over GF(2).
pub fn os_boundary(s: &[usize]) -> Result<Gf2Poly> {
    if s.is_empty() {
        return Err(Error::Precondition("boundary of the empty product".into()));
    }
    let terms = (0..s.len())
        .map(|skip| {
            s.iter()
                .enumerate()
                .filter(|&(k, _)| k != skip)
                .fold(Monomial::ONE, |m, (_, &i)| m.mul(&Monomial::var(i)))
        })
        .collect();
    Ok(Gf2Poly::from_terms(terms))
}

/// `∏_{i∈plus} e_i · ∏_{j∈minus} (x + e_j)`.
pub fn signed_product(ring: &PolyRing, pair: &SignPair) -> Gf2Poly {
    let x = ring.x();
    let mut p = Gf2Poly::one();
    for &i in &pair.plus {
        p = p.mul(&ring.e(i));
    }
    for &j in &pair.minus {
        p = p.mul(&x.add(&ring.e(j)));
    }
    p
}

fn subsets_up_to(n: usize, max: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for size in 1..=max.min(n) {
        let mut idx: Vec<usize> = (0..size).collect();
        loop {
            out.push(idx.clone());
            let Some(k) = (0..size).rev().find(|&k| idx[k] < n - size + k) else {
                break;
            };
            idx[k] += 1;
            for j in k + 1..size {
                idx[j] = idx[j - 1] + 1;
            }
        }
    }
    out
}

fn mask_of(s: &[usize]) -> u64 {
    s.iter().fold(0, |m, &i| m | 1 << i)
}

/// Size of the largest support used when enumerating relations.
pub fn support_bound<A: PointedData + ?Sized>(a: &A) -> usize {
    a.rank() + 1
}

/// Default Hilbert-function horizon: `rank + 2`.
pub fn default_degree<A: PointedData + ?Sized>(a: &A) -> usize {
    a.rank() + 2
}

pub fn os_ideal<A: PointedData + ?Sized>(a: &A) -> Result<IdealPresentation> {
    os_ideal_with(a, Pruning::Minimal)
}

pub fn os_ideal_with<A: PointedData + ?Sized>(a: &A, pruning: Pruning) -> Result<IdealPresentation> {
    let ring = PolyRing::new(a.size(), false)?;
    let mut p = IdealPresentation {
        ring,
        generators: vec![],
        provenance: vec![],
    };
    for i in 0..a.size() {
        p.push(ring.e(i).mul(&ring.e(i)), Provenance::Square { index: i });
    }
    // supports that are empty or dependent, as bitmasks
    let mut special: HashSet<u64> = HashSet::new();
    for s in subsets_up_to(a.size(), support_bound(a)) {
        let m = mask_of(&s);
        let minimal = !s.iter().any(|&i| special.contains(&(m & !(1 << i))));
        let pair = SignPair::new(s.clone(), vec![])?;
        if a.intersection_empty(&s) {
            special.insert(m);
            if minimal || pruning == Pruning::None {
                let prod = s.iter().fold(Gf2Poly::one(), |acc, &i| acc.mul(&ring.e(i)));
                p.push(prod, Provenance::Product { pair });
            }
        } else if a.excess_codim(&s)? {
            special.insert(m);
            if minimal || pruning == Pruning::None {
                p.push(os_boundary(&s)?, Provenance::Lowered { pair });
            }
        }
    }
    Ok(p)
}

pub fn eq_ideal<A: PointedData + ?Sized>(a: &A) -> Result<IdealPresentation> {
    eq_ideal_with(a, Pruning::Minimal)
}

pub fn eq_ideal_with<A: PointedData + ?Sized>(a: &A, pruning: Pruning) -> Result<IdealPresentation> {
    let ring = PolyRing::new(a.size(), true)?;
    let x = ring.x();
    let xi = ring.x_index().expect("has x");
    let mut p = IdealPresentation {
        ring,
        generators: vec![],
        provenance: vec![],
    };
    for i in 0..a.size() {
        p.push(ring.e(i).mul(&x.add(&ring.e(i))), Provenance::Square { index: i });
    }
    // empty sign regions as (plus mask, minus mask)
    let mut empty: HashSet<(u64, u64)> = HashSet::new();
    for s in subsets_up_to(a.size(), support_bound(a)) {
        let meets = !a.intersection_empty(&s);
        for signs in 0u64..1 << s.len() {
            let (mut plus, mut minus) = (Vec::new(), Vec::new());
            for (k, &i) in s.iter().enumerate() {
                if signs >> k & 1 == 1 {
                    minus.push(i);
                } else {
                    plus.push(i);
                }
            }
            let (pm, mm) = (mask_of(&plus), mask_of(&minus));
            let has_empty_sub = s
                .iter()
                .any(|&i| empty.contains(&(pm & !(1 << i), mm & !(1 << i))));
            let pair = SignPair::new(plus, minus)?;
            let is_empty = has_empty_sub || a.sign_region_empty(&pair)?;
            if !is_empty {
                continue;
            }
            empty.insert((pm, mm));
            if has_empty_sub && pruning == Pruning::Minimal {
                continue;
            }
            let forward = signed_product(&ring, &pair);
            if meets {
                let backward = signed_product(&ring, &pair.reversed());
                let lowered = forward.add(&backward).div_var(xi).ok_or_else(|| {
                    Error::Internal(format!("lowered relation for {pair} is not divisible by x"))
                })?;
                p.push(forward, Provenance::Product { pair: pair.clone() });
                p.push(lowered, Provenance::Lowered { pair });
            } else {
                p.push(forward, Provenance::Product { pair });
            }
        }
    }
    Ok(p)
}

/// Sets `x` to 0 or 1 and removes it from the ring.
pub fn specialize(p: &IdealPresentation, x_value: u8) -> Result<IdealPresentation> {
    let xi = p
        .ring
        .x_index()
        .ok_or_else(|| Error::Precondition("specialize needs a presentation with x".into()))?;
    if x_value > 1 {
        return Err(Error::Precondition("x can only be specialized to 0 or 1".into()));
    }
    let ring = PolyRing::new(p.ring.n, false)?;
    let generators = p
        .generators
        .iter()
        .map(|g| g.evaluate_var(xi, x_value == 1).drop_var(xi))
        .collect();
    Ok(IdealPresentation {
        ring,
        generators,
        provenance: p.provenance.clone(),
    })
}

/// Replaces `e_i` by `x - e_i` in every generator.
pub fn flip_coorientation(p: &IdealPresentation, i: usize) -> Result<IdealPresentation> {
    if !p.has_x() {
        return Err(Error::Precondition("flip_coorientation needs a presentation with x".into()));
    }
    if i >= p.n() {
        return Err(Error::Precondition(format!("index {} out of range", i + 1)));
    }
    let mut images = vec![None; p.ring.nvars()];
    images[i] = Some(p.ring.x().add(&p.ring.e(i)));
    Ok(IdealPresentation {
        ring: p.ring,
        generators: p.generators.iter().map(|g| g.substitute(&images)).collect(),
        provenance: p.provenance.clone(),
    })
}

/// The x = 0 specialization of the equivariant ideal equals the ordinary
/// Orlik-Solomon ideal.
pub fn psi_check<A: PointedData + ?Sized>(a: &A) -> Result<bool> {
    let eq = eq_ideal(a)?;
    let os = os_ideal(a)?;
    Ok(specialize(&eq, 0)?.same_ideal(&os))
}

/// Checks that first differences of an equivariant Hilbert function equal an
/// ordinary one that vanishes above `rank`.
pub fn free_signature(eq_hf: &[usize], os_hf: &[usize], rank: usize) -> bool {
    if eq_hf.len() != os_hf.len() || eq_hf.is_empty() {
        return false;
    }
    if eq_hf[0] != os_hf[0] {
        return false;
    }
    (1..eq_hf.len()).all(|k| eq_hf[k] as i64 - eq_hf[k - 1] as i64 == os_hf[k] as i64)
        && os_hf.iter().skip(rank + 1).all(|&h| h == 0)
}

pub fn freeness_check(a: &Arrangement, d: usize) -> Result<bool> {
    if d < a.rank() + 1 {
        return Err(Error::Precondition(format!("degree {d} is below rank + 1 = {}", a.rank() + 1)));
    }
    let eq = eq_ideal(a)?.hilbert_function(d);
    let os = os_ideal(a)?.hilbert_function(d);
    Ok(free_signature(&eq, &os, a.rank()))
}

/// Value of `f` at the 0/1 point where variable `i` is `point[i]`.
pub fn evaluate_01(f: &Gf2Poly, point: &[bool]) -> bool {
    f.terms()
        .iter()
        .filter(|m| m.exps().iter().enumerate().all(|(i, &e)| e == 0 || point.get(i) == Some(&true)))
        .count()
        % 2
        == 1
}

/// Heaviside point of a chamber: `e_i = 1` on the positive side of `H_i`.
pub fn heaviside(chamber: &SignVector) -> Vec<bool> {
    chamber.0.iter().map(|&s| s == Sign::Plus).collect()
}

/// Varchenko-Gel'fand presentation checked against chamber functions: every
/// generator of the x = 1 specialization vanishes on every chamber, and the
/// quotient's dimension is the number of chambers.
pub fn vg_chamber_model(a: &Arrangement) -> Result<bool> {
    let chambers = a.chambers()?;
    let vg = specialize(&eq_ideal(a)?, 1)?;
    let vanish = chambers.iter().all(|c| {
        let pt = heaviside(c);
        vg.generators.iter().all(|g| !evaluate_01(g, &pt))
    });
    Ok(vanish && vg_dimension(&vg) == chambers.len())
}

/// Total dimension of an x = 1 quotient, read off standard monomials up to
/// degree `n` (they are squarefree in the `e`'s).
pub fn vg_dimension(vg: &IdealPresentation) -> usize {
    vg.quotient(vg.ring.n).total_dimension()
}

/// Checks the coning formula `HF_{cA}(k) = HF_A(k) + HF_A(k-1)` for the
/// equivariant Hilbert functions, `k <= d`.
pub fn cone_formula_check(a: &Arrangement, d: usize) -> Result<bool> {
    let hf = eq_ideal(a)?.hilbert_function(d);
    let coned = eq_ideal(&a.cone())?.hilbert_function(d);
    Ok(cone_formula_holds(&hf, &coned))
}

pub fn cone_formula_holds(hf: &[usize], coned: &[usize]) -> bool {
    hf.len() == coned.len()
        && (0..hf.len()).all(|k| coned[k] == hf[k] + if k > 0 { hf[k - 1] } else { 0 })
}

/// Searches all `2^n` coorientations for one whose equivariant ideal equals
/// the ideal generated by `target`. Returns the mask of flipped hyperplanes.
pub fn match_coorientation(a: &Arrangement, target: &[Gf2Poly]) -> Result<Option<u64>> {
    if a.len() >= 63 {
        return Err(Error::Invalid("too many hyperplanes for a coorientation search".into()));
    }
    let want = buchberger(target);
    for mask in 0..1u64 << a.len() {
        if eq_ideal(&a.recooriented(mask))?.groebner() == want {
            return Ok(Some(mask));
        }
    }
    Ok(None)
}
