//! Feasibility of `{equalities = 0, strict inequalities > 0}` over the
//! rationals.
//!
//! Equalities are removed by Gauss-Jordan substitution, then the remaining
//! variables are eliminated one at a time by Fourier-Motzkin. Every derived
//! row carries the multipliers that produced it from the input rows, so the
//! solver always returns a certificate: a witness point, or a combination of
//! the input rows that collapses to a contradiction.
//!
//! Fourier-Motzkin is exponential in the worst case. The number of rows
//! created during one solve is capped (see [`set_max_fm_rows`]).

use std::collections::HashMap;
use std::sync::atomic::{AtomicUsize, Ordering};

use num_traits::{One, Signed, Zero};

use super::Rational;
use crate::error::{Error, Result};

pub const DEFAULT_MAX_FM_ROWS: usize = 50_000;

static MAX_FM_ROWS: AtomicUsize = AtomicUsize::new(DEFAULT_MAX_FM_ROWS);

/// Sets the process-wide cap on rows generated by one elimination.
pub fn set_max_fm_rows(limit: usize) {
    MAX_FM_ROWS.store(limit.max(1), Ordering::Relaxed);
}

pub fn max_fm_rows() -> usize {
    MAX_FM_ROWS.load(Ordering::Relaxed)
}

/// One affine row `coeffs . p + constant`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinRow {
    pub coeffs: Vec<Rational>,
    pub constant: Rational,
}

impl LinRow {
    pub fn new(coeffs: Vec<Rational>, constant: Rational) -> Self {
        LinRow { coeffs, constant }
    }

    pub fn eval(&self, p: &[Rational]) -> Rational {
        self.coeffs
            .iter()
            .zip(p)
            .fold(self.constant.clone(), |acc, (a, x)| acc + a * x)
    }

    pub fn negated(&self) -> Self {
        LinRow {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
            constant: -&self.constant,
        }
    }
}

/// `equalities[i] = 0` and `strict[j] > 0`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LinSystem {
    pub nvars: usize,
    pub equalities: Vec<LinRow>,
    pub strict: Vec<LinRow>,
}

impl LinSystem {
    pub fn new(nvars: usize) -> Self {
        LinSystem {
            nvars,
            ..Default::default()
        }
    }

    pub fn push_eq(&mut self, row: LinRow) {
        assert_eq!(row.coeffs.len(), self.nvars);
        self.equalities.push(row);
    }

    pub fn push_strict(&mut self, row: LinRow) {
        assert_eq!(row.coeffs.len(), self.nvars);
        self.strict.push(row);
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FmCertificate {
    /// A point satisfying every row exactly.
    Feasible { point: Vec<Rational> },
    /// Multipliers (`strict_weights >= 0`, `eq_weights` arbitrary) whose
    /// combination of the rows has zero coefficients and a constant that is
    /// `<= 0` while some strict weight is positive, or a nonzero constant when
    /// all strict weights vanish.
    Infeasible {
        strict_weights: Vec<Rational>,
        eq_weights: Vec<Rational>,
    },
}

impl FmCertificate {
    pub fn is_feasible(&self) -> bool {
        matches!(self, FmCertificate::Feasible { .. })
    }
}

pub fn fm_feasible(sys: &LinSystem) -> Result<bool> {
    Ok(fm_solve(sys)?.is_feasible())
}

/// Checks a certificate against the system without reusing any solver state.
pub fn verify_certificate(sys: &LinSystem, cert: &FmCertificate) -> bool {
    match cert {
        FmCertificate::Feasible { point } => {
            point.len() == sys.nvars
                && sys.equalities.iter().all(|r| r.eval(point).is_zero())
                && sys.strict.iter().all(|r| r.eval(point).is_positive())
        }
        FmCertificate::Infeasible {
            strict_weights,
            eq_weights,
        } => {
            if strict_weights.len() != sys.strict.len() || eq_weights.len() != sys.equalities.len() {
                return false;
            }
            if strict_weights.iter().any(|w| w.is_negative()) {
                return false;
            }
            let mut coeffs = vec![Rational::zero(); sys.nvars];
            let mut constant = Rational::zero();
            let rows = sys
                .strict
                .iter()
                .zip(strict_weights)
                .chain(sys.equalities.iter().zip(eq_weights));
            for (row, w) in rows {
                for (acc, a) in coeffs.iter_mut().zip(&row.coeffs) {
                    *acc += w * a;
                }
                constant += w * &row.constant;
            }
            if coeffs.iter().any(|c| !c.is_zero()) {
                return false;
            }
            if strict_weights.iter().any(|w| w.is_positive()) {
                !constant.is_positive()
            } else {
                !constant.is_zero()
            }
        }
    }
}

/// A derived row together with the multipliers that produced it.
#[derive(Clone, Debug)]
struct Tracked {
    row: LinRow,
    strict_w: Vec<Rational>,
    eq_w: Vec<Rational>,
}

impl Tracked {
    fn scale(&mut self, f: &Rational) {
        for c in &mut self.row.coeffs {
            *c *= f;
        }
        self.row.constant *= f;
        for w in self.strict_w.iter_mut().chain(self.eq_w.iter_mut()) {
            *w *= f;
        }
    }

    /// `self += f * other`
    fn add_scaled(&mut self, f: &Rational, other: &Tracked) {
        for (a, b) in self.row.coeffs.iter_mut().zip(&other.row.coeffs) {
            *a += f * b;
        }
        self.row.constant += f * &other.row.constant;
        for (a, b) in self.strict_w.iter_mut().zip(&other.strict_w) {
            *a += f * b;
        }
        for (a, b) in self.eq_w.iter_mut().zip(&other.eq_w) {
            *a += f * b;
        }
    }

    fn is_constant(&self) -> bool {
        self.row.coeffs.iter().all(|c| c.is_zero())
    }

    fn certificate(self) -> FmCertificate {
        FmCertificate::Infeasible {
            strict_weights: self.strict_w,
            eq_weights: self.eq_w,
        }
    }

    /// Scales by a positive factor so the first nonzero coefficient is +-1.
    fn normalize(&mut self) {
        if let Some(c) = self.row.coeffs.iter().find(|c| !c.is_zero()) {
            let f = c.abs().recip();
            if !f.is_one() {
                self.scale(&f);
            }
        }
    }
}

pub fn fm_solve(sys: &LinSystem) -> Result<FmCertificate> {
    let limit = max_fm_rows();
    let nvars = sys.nvars;
    let (ns, ne) = (sys.strict.len(), sys.equalities.len());
    let unit = |len: usize, i: usize| {
        let mut v = vec![Rational::zero(); len];
        v[i] = Rational::one();
        v
    };

    let mut eqs: Vec<Tracked> = sys
        .equalities
        .iter()
        .enumerate()
        .map(|(i, r)| Tracked {
            row: r.clone(),
            strict_w: vec![Rational::zero(); ns],
            eq_w: unit(ne, i),
        })
        .collect();
    let mut strict: Vec<Tracked> = sys
        .strict
        .iter()
        .enumerate()
        .map(|(i, r)| Tracked {
            row: r.clone(),
            strict_w: unit(ns, i),
            eq_w: vec![Rational::zero(); ne],
        })
        .collect();

    // Gauss-Jordan on the equalities; pivot rows end up involving only their
    // own pivot column among the pivot columns.
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    let mut used = vec![false; eqs.len()];
    for col in 0..nvars {
        let Some(p) = (0..eqs.len()).find(|&r| !used[r] && !eqs[r].row.coeffs[col].is_zero()) else {
            continue;
        };
        used[p] = true;
        let f = eqs[p].row.coeffs[col].recip();
        eqs[p].scale(&f);
        let pivot = eqs[p].clone();
        for (r, e) in eqs.iter_mut().enumerate() {
            if r != p && !e.row.coeffs[col].is_zero() {
                let f = -e.row.coeffs[col].clone();
                e.add_scaled(&f, &pivot);
            }
        }
        for s in strict.iter_mut() {
            if !s.row.coeffs[col].is_zero() {
                let f = -s.row.coeffs[col].clone();
                s.add_scaled(&f, &pivot);
            }
        }
        pivots.push((col, p));
    }
    for (r, e) in eqs.iter().enumerate() {
        if !used[r] && !e.row.constant.is_zero() {
            return Ok(e.clone().certificate());
        }
    }

    let is_pivot: Vec<bool> = {
        let mut v = vec![false; nvars];
        for &(c, _) in &pivots {
            v[c] = true;
        }
        v
    };
    let order: Vec<usize> = (0..nvars).filter(|&c| !is_pivot[c]).collect();

    let mut created = strict.len();
    let mut current = match prune(strict) {
        Ok(rows) => rows,
        Err(t) => return Ok(t.certificate()),
    };
    let mut stages: Vec<Vec<Tracked>> = Vec::with_capacity(order.len());
    for &var in &order {
        let (mut pos, mut neg, mut rest) = (Vec::new(), Vec::new(), Vec::new());
        for t in &current {
            let c = &t.row.coeffs[var];
            if c.is_positive() {
                pos.push(t);
            } else if c.is_negative() {
                neg.push(t);
            } else {
                rest.push(t.clone());
            }
        }
        created += pos.len() * neg.len();
        if created > limit {
            return Err(Error::FmBlowup { limit });
        }
        for p in &pos {
            for n in &neg {
                // |n_v| p + p_v n has zero coefficient at var
                let mut t = (*p).clone();
                t.scale(&(-n.row.coeffs[var].clone()));
                t.add_scaled(&p.row.coeffs[var], n);
                t.row.coeffs[var] = Rational::zero();
                rest.push(t);
            }
        }
        let next = match prune(rest) {
            Ok(rows) => rows,
            Err(t) => return Ok(t.certificate()),
        };
        stages.push(std::mem::replace(&mut current, next));
    }
    debug_assert!(current.is_empty());

    // Back substitution, last eliminated variable first.
    let mut point = vec![Rational::zero(); nvars];
    for (stage, &var) in stages.iter().zip(&order).rev() {
        let mut lower: Option<Rational> = None;
        let mut upper: Option<Rational> = None;
        for t in stage {
            let a = &t.row.coeffs[var];
            if a.is_zero() {
                continue;
            }
            let mut rest = t.row.constant.clone();
            for (u, c) in t.row.coeffs.iter().enumerate() {
                if u != var && !c.is_zero() {
                    rest += c * &point[u];
                }
            }
            let bound = -rest / a;
            if a.is_positive() {
                if lower.as_ref().is_none_or(|l| bound > *l) {
                    lower = Some(bound);
                }
            } else if upper.as_ref().is_none_or(|u| bound < *u) {
                upper = Some(bound);
            }
        }
        point[var] = match (lower, upper) {
            (None, None) => Rational::zero(),
            (Some(l), None) => l.floor() + Rational::one(),
            (None, Some(u)) => u.ceil() - Rational::one(),
            (Some(l), Some(u)) => {
                if l >= u {
                    return Err(Error::Internal(format!(
                        "empty interval during back substitution for variable {var}"
                    )));
                }
                (l + u) / Rational::from_integer(2.into())
            }
        };
    }
    for &(col, r) in &pivots {
        let row = &eqs[r].row;
        let mut v = row.constant.clone();
        for (u, c) in row.coeffs.iter().enumerate() {
            if u != col && !c.is_zero() {
                v += c * &point[u];
            }
        }
        point[col] = -v;
    }
    Ok(FmCertificate::Feasible { point })
}

/// Normalizes rows, keeps the tightest constant per coefficient vector and
/// drops satisfied constants. A violated constant row is returned as `Err`.
fn prune(rows: Vec<Tracked>) -> std::result::Result<Vec<Tracked>, Box<Tracked>> {
    let mut index: HashMap<Vec<Rational>, usize> = HashMap::new();
    let mut out: Vec<Tracked> = Vec::new();
    for mut t in rows {
        if t.is_constant() {
            if t.row.constant.is_positive() {
                continue;
            }
            return Err(Box::new(t));
        }
        t.normalize();
        match index.get(&t.row.coeffs) {
            Some(&i) => {
                if t.row.constant < out[i].row.constant {
                    out[i] = t;
                }
            }
            None => {
                index.insert(t.row.coeffs.clone(), out.len());
                out.push(t);
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(v: i64) -> Rational {
        Rational::from_integer(v.into())
    }

    fn row(coeffs: &[i64], c: i64) -> LinRow {
        LinRow::new(coeffs.iter().map(|&v| q(v)).collect(), q(c))
    }

    fn check(sys: &LinSystem) -> bool {
        let cert = fm_solve(sys).unwrap();
        assert!(verify_certificate(sys, &cert), "bad certificate {cert:?} for {sys:?}");
        cert.is_feasible()
    }

    #[test]
    fn examples() {
        let mut s = LinSystem::new(1);
        s.push_strict(row(&[1], 0));
        s.push_strict(row(&[-1], 0));
        assert!(!check(&s));

        let mut s = LinSystem::new(1);
        s.push_strict(row(&[1], 0));
        assert!(check(&s));

        // x + 1 < 0 and x - 1 > 0
        let mut s = LinSystem::new(1);
        s.push_strict(row(&[-1], -1));
        s.push_strict(row(&[1], -1));
        assert!(!check(&s));

        assert!(check(&LinSystem::new(3)));
    }

    #[test]
    fn equalities() {
        // x = y, x + y = 2, x > 1 is infeasible
        let mut s = LinSystem::new(2);
        s.push_eq(row(&[1, -1], 0));
        s.push_eq(row(&[1, 1], -2));
        s.push_strict(row(&[1], -1).pad(2));
        assert!(!check(&s));

        // x = 1 and x = 2
        let mut s = LinSystem::new(1);
        s.push_eq(row(&[1], -1));
        s.push_eq(row(&[1], -2));
        assert!(!check(&s));

        // y = 0, x > 0, x < 1/2 via 1 - 2x > 0
        let mut s = LinSystem::new(2);
        s.push_eq(row(&[0, 1], 0));
        s.push_strict(row(&[1, 0], 0));
        s.push_strict(row(&[-2, 0], 1));
        assert!(check(&s));
    }

    #[test]
    fn blowup_cap() {
        let mut s = LinSystem::new(2);
        for i in 0..20 {
            s.push_strict(row(&[1, i], i));
            s.push_strict(row(&[-1, i], 3 * i + 1));
        }
        set_max_fm_rows(10);
        let r = fm_solve(&s);
        set_max_fm_rows(DEFAULT_MAX_FM_ROWS);
        assert_eq!(r, Err(Error::FmBlowup { limit: 10 }));
    }

    impl LinRow {
        fn pad(mut self, n: usize) -> Self {
            self.coeffs.resize(n, q(0));
            self
        }
    }

    fn system() -> impl Strategy<Value = LinSystem> {
        (1usize..=3, 0usize..=2, 0usize..=6).prop_flat_map(|(nv, ne, ns)| {
            let r = move || (proptest::collection::vec(-3i64..=3, nv), -3i64..=3);
            (
                proptest::collection::vec(r(), ne),
                proptest::collection::vec(r(), ns.saturating_sub(ne)),
            )
                .prop_map(move |(eqs, strict)| {
                    let mut s = LinSystem::new(nv);
                    for (c, k) in eqs {
                        s.push_eq(row(&c, k));
                    }
                    for (c, k) in strict {
                        s.push_strict(row(&c, k));
                    }
                    s
                })
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(512))]
        #[test]
        fn certificates_verify(sys in system()) {
            let cert = fm_solve(&sys).unwrap();
            prop_assert!(verify_certificate(&sys, &cert));
        }
    }
}
