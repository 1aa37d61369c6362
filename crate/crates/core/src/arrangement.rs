//! Cooriented real affine arrangements with exact rational coefficients.
//!
//! Hyperplane `i` is the zero set of `omega_i(p) = a_i . p + b_i`, with
//! positive side `omega_i > 0`. Indices are 0-based in the API and printed
//! 1-based.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{parse_err, Error, Result};
use crate::exact::{fm_feasible, parse_rational, qrank, LinRow, LinSystem, QMatrix, Rational};

/// An affine form `normal . p + offset`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AffineForm {
    pub normal: Vec<Rational>,
    pub offset: Rational,
}

impl AffineForm {
    pub fn new(normal: Vec<Rational>, offset: Rational) -> Self {
        AffineForm { normal, offset }
    }

    pub fn from_ints(normal: &[i64], offset: i64) -> Self {
        AffineForm {
            normal: normal.iter().map(|&v| Rational::from_integer(v.into())).collect(),
            offset: Rational::from_integer(offset.into()),
        }
    }

    pub fn eval(&self, p: &[Rational]) -> Rational {
        self.normal
            .iter()
            .zip(p)
            .fold(self.offset.clone(), |acc, (a, x)| acc + a * x)
    }

    pub fn negated(&self) -> Self {
        AffineForm {
            normal: self.normal.iter().map(|c| -c).collect(),
            offset: -&self.offset,
        }
    }

    fn row(&self) -> LinRow {
        LinRow::new(self.normal.clone(), self.offset.clone())
    }

    /// True if the two forms cut out the same hyperplane, with either
    /// coorientation.
    fn same_hyperplane(&self, other: &AffineForm) -> bool {
        let mut a: Vec<Rational> = self.normal.clone();
        a.push(self.offset.clone());
        let mut b: Vec<Rational> = other.normal.clone();
        b.push(other.offset.clone());
        let Some(k) = a.iter().position(|c| !c.is_zero()) else {
            return false;
        };
        if b[k].is_zero() {
            return false;
        }
        let f = &b[k] / &a[k];
        a.iter().zip(&b).all(|(x, y)| &(x * &f) == y)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    Plus,
    Minus,
    Zero,
}

impl Sign {
    pub fn of(q: &Rational) -> Sign {
        if q.is_positive() {
            Sign::Plus
        } else if q.is_negative() {
            Sign::Minus
        } else {
            Sign::Zero
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
            Sign::Zero => '0',
        }
    }

    pub fn from_char(c: char) -> Option<Sign> {
        match c {
            '+' => Some(Sign::Plus),
            '-' => Some(Sign::Minus),
            '0' => Some(Sign::Zero),
            _ => None,
        }
    }
}

impl std::ops::Neg for Sign {
    type Output = Sign;

    fn neg(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
            Sign::Zero => Sign::Zero,
        }
    }
}

/// A covector: one sign per hyperplane.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SignVector(pub Vec<Sign>);

impl SignVector {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_chamber(&self) -> bool {
        self.0.iter().all(|&s| s != Sign::Zero)
    }

    pub fn zero_count(&self) -> usize {
        self.0.iter().filter(|&&s| s == Sign::Zero).count()
    }

    pub fn neg(&self) -> SignVector {
        SignVector(self.0.iter().map(|&s| -s).collect())
    }

    /// Covector composition: take `self` where nonzero, else `other`.
    pub fn compose(&self, other: &SignVector) -> SignVector {
        SignVector(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(&a, &b)| if a == Sign::Zero { b } else { a })
                .collect(),
        )
    }
}

impl fmt::Display for SignVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.0 {
            write!(f, "{}", s.as_char())?;
        }
        Ok(())
    }
}

impl fmt::Debug for SignVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

impl FromStr for SignVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .map(|c| Sign::from_char(c).ok_or_else(|| Error::Invalid(format!("bad sign {c:?} in {s:?}"))))
            .collect::<Result<Vec<_>>>()
            .map(SignVector)
    }
}

/// Disjoint index sets `plus` and `minus`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignPair {
    pub plus: Vec<usize>,
    pub minus: Vec<usize>,
}

impl SignPair {
    pub fn new(mut plus: Vec<usize>, mut minus: Vec<usize>) -> Result<Self> {
        plus.sort_unstable();
        plus.dedup();
        minus.sort_unstable();
        minus.dedup();
        if plus.iter().any(|i| minus.contains(i)) {
            return Err(Error::Invalid("sign pair sets overlap".into()));
        }
        Ok(SignPair { plus, minus })
    }

    pub fn empty() -> Self {
        SignPair {
            plus: vec![],
            minus: vec![],
        }
    }

    /// The support `plus ∪ minus`, sorted.
    pub fn support(&self) -> Vec<usize> {
        let mut s: Vec<usize> = self.plus.iter().chain(&self.minus).copied().collect();
        s.sort_unstable();
        s
    }

    pub fn reversed(&self) -> SignPair {
        SignPair {
            plus: self.minus.clone(),
            minus: self.plus.clone(),
        }
    }
}

impl fmt::Display for SignPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let one_based = |v: &[usize]| v.iter().map(|i| (i + 1).to_string()).collect::<Vec<_>>().join(",");
        write!(f, "+{{{}}} -{{{}}}", one_based(&self.plus), one_based(&self.minus))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrangement {
    dim: usize,
    forms: Vec<AffineForm>,
}

impl Arrangement {
    /// Builds an arrangement, rejecting zero normals and repeated hyperplanes.
    pub fn new(dim: usize, forms: Vec<AffineForm>) -> Result<Self> {
        Self::build(dim, forms, false)
    }

    /// Like [`Arrangement::new`] but permits two forms with the same zero set.
    pub fn new_allowing_repeats(dim: usize, forms: Vec<AffineForm>) -> Result<Self> {
        Self::build(dim, forms, true)
    }

    fn build(dim: usize, forms: Vec<AffineForm>, allow_repeated: bool) -> Result<Self> {
        for (i, f) in forms.iter().enumerate() {
            if f.normal.len() != dim {
                return Err(Error::Invalid(format!(
                    "form {} has {} coefficients, expected {dim}",
                    i + 1,
                    f.normal.len()
                )));
            }
            if f.normal.iter().all(|c| c.is_zero()) {
                return Err(Error::Invalid(format!("form {} has a zero normal vector", i + 1)));
            }
            if !allow_repeated {
                if let Some(j) = forms[..i].iter().position(|g| g.same_hyperplane(f)) {
                    return Err(Error::Invalid(format!(
                        "forms {} and {} define the same hyperplane",
                        j + 1,
                        i + 1
                    )));
                }
            }
        }
        Ok(Arrangement { dim, forms })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.forms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.forms.is_empty()
    }

    pub fn forms(&self) -> &[AffineForm] {
        &self.forms
    }

    /// Rank of the normal vectors.
    pub fn rank(&self) -> usize {
        let rows: Vec<Vec<Rational>> = self.forms.iter().map(|f| f.normal.clone()).collect();
        qrank(&QMatrix::from_rows(self.dim, &rows))
    }

    pub fn is_central(&self) -> bool {
        self.forms.iter().all(|f| f.offset.is_zero())
    }

    /// Reverses the coorientation of hyperplane `i`.
    pub fn flipped(&self, i: usize) -> Arrangement {
        let mut forms = self.forms.clone();
        forms[i] = forms[i].negated();
        Arrangement { dim: self.dim, forms }
    }

    /// Reverses the coorientation of every hyperplane whose bit is set in `mask`.
    pub fn recooriented(&self, mask: u64) -> Arrangement {
        let forms = self
            .forms
            .iter()
            .enumerate()
            .map(|(i, f)| if mask >> i & 1 == 1 { f.negated() } else { f.clone() })
            .collect();
        Arrangement { dim: self.dim, forms }
    }

    /// Homogenizes every form with a new last coordinate `z` and appends the
    /// hyperplane `z = 0`, which becomes the last index.
    pub fn cone(&self) -> Arrangement {
        let mut forms: Vec<AffineForm> = self
            .forms
            .iter()
            .map(|f| {
                let mut normal = f.normal.clone();
                normal.push(f.offset.clone());
                AffineForm::new(normal, Rational::zero())
            })
            .collect();
        let mut z = vec![Rational::zero(); self.dim + 1];
        z[self.dim] = Rational::one();
        forms.push(AffineForm::new(z, Rational::zero()));
        Arrangement {
            dim: self.dim + 1,
            forms,
        }
    }

    /// True iff the hyperplanes indexed by `s` have no common point.
    pub fn intersection_empty(&self, s: &[usize]) -> bool {
        if s.is_empty() {
            return false;
        }
        let homogeneous: Vec<Vec<Rational>> = s.iter().map(|&i| self.forms[i].normal.clone()).collect();
        let augmented: Vec<Vec<Rational>> = s
            .iter()
            .map(|&i| {
                let mut r = self.forms[i].normal.clone();
                r.push(self.forms[i].offset.clone());
                r
            })
            .collect();
        qrank(&QMatrix::from_rows(self.dim, &homogeneous)) < qrank(&QMatrix::from_rows(self.dim + 1, &augmented))
    }

    /// For a nonempty intersection, true iff its codimension is less than `|s|`.
    pub fn excess_codim(&self, s: &[usize]) -> Result<bool> {
        if self.intersection_empty(s) {
            return Err(Error::Precondition(format!(
                "excess_codim called on a subset with empty intersection {s:?}"
            )));
        }
        let rows: Vec<Vec<Rational>> = s.iter().map(|&i| self.forms[i].normal.clone()).collect();
        Ok(qrank(&QMatrix::from_rows(self.dim, &rows)) < s.len())
    }

    /// The system `omega_i > 0 (i in plus)`, `-omega_j > 0 (j in minus)`.
    pub fn sign_region_system(&self, sp: &SignPair) -> LinSystem {
        let mut sys = LinSystem::new(self.dim);
        for &i in &sp.plus {
            sys.push_strict(self.forms[i].row());
        }
        for &j in &sp.minus {
            sys.push_strict(self.forms[j].row().negated());
        }
        sys
    }

    /// True iff no point lies on the positive side of every `plus` hyperplane
    /// and the negative side of every `minus` hyperplane.
    pub fn sign_region_empty(&self, sp: &SignPair) -> Result<bool> {
        Ok(!fm_feasible(&self.sign_region_system(sp))?)
    }

    /// The system whose solutions are the points with the given (partial)
    /// sign pattern on the first `signs.len()` hyperplanes.
    pub fn face_system(&self, signs: &[Sign]) -> LinSystem {
        let mut sys = LinSystem::new(self.dim);
        for (f, &s) in self.forms.iter().zip(signs) {
            match s {
                Sign::Plus => sys.push_strict(f.row()),
                Sign::Minus => sys.push_strict(f.row().negated()),
                Sign::Zero => sys.push_eq(f.row()),
            }
        }
        sys
    }

    /// Every realizable sign vector, in depth-first order with branches
    /// `+, -, 0`.
    pub fn enumerate_faces(&self) -> Result<Vec<SignVector>> {
        let mut out = Vec::new();
        let mut prefix = Vec::with_capacity(self.len());
        self.extend_faces(&mut prefix, &mut out)?;
        Ok(out)
    }

    fn extend_faces(&self, prefix: &mut Vec<Sign>, out: &mut Vec<SignVector>) -> Result<()> {
        if prefix.len() == self.len() {
            out.push(SignVector(prefix.clone()));
            return Ok(());
        }
        for s in [Sign::Plus, Sign::Minus, Sign::Zero] {
            prefix.push(s);
            if fm_feasible(&self.face_system(prefix))? {
                self.extend_faces(prefix, out)?;
            }
            prefix.pop();
        }
        Ok(())
    }

    pub fn chambers(&self) -> Result<Vec<SignVector>> {
        Ok(self.enumerate_faces()?.into_iter().filter(|f| f.is_chamber()).collect())
    }

    pub fn sign_vector_at(&self, p: &[Rational]) -> SignVector {
        SignVector(self.forms.iter().map(|f| Sign::of(&f.eval(p))).collect())
    }

    /// Serializes in the arrangement file format.
    pub fn to_text(&self) -> String {
        let mut s = format!("{} {}\n", self.dim, self.len());
        for f in &self.forms {
            let cols: Vec<String> = f.normal.iter().chain([&f.offset]).map(|q| q.to_string()).collect();
            s.push_str(&cols.join(" "));
            s.push('\n');
        }
        s
    }
}

/// What the ring presentations are built from: which intersections are
/// empty, which have excess codimension, and which open sign regions are
/// empty. Indices are 0-based.
pub trait PointedData {
    fn size(&self) -> usize;
    fn rank(&self) -> usize;
    fn intersection_empty(&self, s: &[usize]) -> bool;
    fn excess_codim(&self, s: &[usize]) -> Result<bool>;
    fn sign_region_empty(&self, sp: &SignPair) -> Result<bool>;
}

impl PointedData for Arrangement {
    fn size(&self) -> usize {
        self.len()
    }

    fn rank(&self) -> usize {
        Arrangement::rank(self)
    }

    fn intersection_empty(&self, s: &[usize]) -> bool {
        Arrangement::intersection_empty(self, s)
    }

    fn excess_codim(&self, s: &[usize]) -> Result<bool> {
        Arrangement::excess_codim(self, s)
    }

    fn sign_region_empty(&self, sp: &SignPair) -> Result<bool> {
        Arrangement::sign_region_empty(self, sp)
    }
}

/// Parses the arrangement file format: header `d n`, then `n` lines of
/// `d + 1` rationals `a_1 .. a_d b`. Lines starting with `#` and blank lines
/// are skipped.
pub fn parse_arrangement(text: &str) -> Result<Arrangement> {
    parse_arrangement_with(text, false)
}

pub fn parse_arrangement_with(text: &str, allow_repeated: bool) -> Result<Arrangement> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (hline, header) = lines.next().ok_or_else(|| parse_err(1, "missing header \"d n\""))?;
    let nums: Vec<&str> = header.split_whitespace().collect();
    let [d, n] = nums[..] else {
        return Err(parse_err(hline, "header must be \"d n\""));
    };
    let d: usize = d.parse().map_err(|_| parse_err(hline, format!("bad dimension {d:?}")))?;
    let n: usize = n.parse().map_err(|_| parse_err(hline, format!("bad count {n:?}")))?;

    let mut forms = Vec::with_capacity(n);
    let mut last_line = hline;
    for (lineno, line) in lines {
        last_line = lineno;
        if forms.len() == n {
            return Err(parse_err(lineno, format!("more than {n} forms")));
        }
        let cols: Vec<&str> = line.split_whitespace().collect();
        if cols.len() != d + 1 {
            return Err(parse_err(
                lineno,
                format!("expected {} columns, found {}", d + 1, cols.len()),
            ));
        }
        let mut vals = Vec::with_capacity(d + 1);
        for c in cols {
            vals.push(parse_rational(c).ok_or_else(|| parse_err(lineno, format!("malformed rational {c:?}")))?);
        }
        let offset = vals.pop().expect("d + 1 >= 1 columns");
        if vals.iter().all(|v| v.is_zero()) {
            return Err(parse_err(lineno, "zero normal vector"));
        }
        forms.push(AffineForm::new(vals, offset));
    }
    if forms.len() != n {
        return Err(parse_err(last_line, format!("expected {n} forms, found {}", forms.len())));
    }
    Arrangement::build(d, forms, allow_repeated)
}

/// `n` coordinate hyperplanes `p_i = 0` in `R^n`.
pub fn boolean_arrangement(n: usize) -> Arrangement {
    let forms = (0..n)
        .map(|i| {
            let mut a = vec![0; n];
            a[i] = 1;
            AffineForm::from_ints(&a, 0)
        })
        .collect();
    Arrangement::new(n, forms).expect("coordinate hyperplanes are distinct")
}
