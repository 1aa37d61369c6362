//! Face poset, Salvetti poset and its order complex for a central arrangement
//! given by its covectors, with GF(2) homology and the cohomology of a
//! truncated Borel double complex for the complex-conjugation action.

use std::collections::HashMap;

use crate::arrangement::{PointedData, Sign, SignPair, SignVector};
use crate::error::{parse_err, Error, Result};
use crate::exact::sparse_gf2_rank;

/// `f ⪯ g` in the face poset: `g` lies in the closure of `f`.
pub fn face_leq(f: &SignVector, g: &SignVector) -> bool {
    f.0.iter().zip(&g.0).all(|(&a, &b)| match a {
        Sign::Zero => b == Sign::Zero,
        _ => b == Sign::Zero || b == a,
    })
}

fn zero_mask(v: &SignVector) -> u64 {
    v.0.iter()
        .enumerate()
        .filter(|(_, &s)| s == Sign::Zero)
        .fold(0, |m, (i, _)| m | 1 << i)
}

fn check_sign_vectors(vs: &[SignVector]) -> Result<usize> {
    let n = vs
        .first()
        .ok_or_else(|| Error::Invalid("empty face list".into()))?
        .len();
    if n > 63 {
        return Err(Error::Invalid(format!("{n} elements is too many")));
    }
    if let Some(v) = vs.iter().find(|v| v.len() != n) {
        return Err(Error::Invalid(format!("sign vector {v} does not have length {n}")));
    }
    let mut seen = std::collections::HashSet::new();
    if let Some(v) = vs.iter().find(|v| !seen.insert(*v)) {
        return Err(Error::Invalid(format!("sign vector {v} is listed twice")));
    }
    Ok(n)
}

/// Covectors of a central arrangement or an abstract oriented matroid.
#[derive(Clone, Debug)]
pub struct FacePoset {
    n: usize,
    faces: Vec<SignVector>,
    chambers: Vec<usize>,
}

impl FacePoset {
    pub fn new(faces: Vec<SignVector>) -> Result<Self> {
        let n = check_sign_vectors(&faces)?;
        let chambers = (0..faces.len()).filter(|&i| faces[i].is_chamber()).collect();
        Ok(FacePoset { n, faces, chambers })
    }

    /// Ground set size.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn faces(&self) -> &[SignVector] {
        &self.faces
    }

    pub fn chambers(&self) -> impl Iterator<Item = &SignVector> {
        self.chambers.iter().map(|&i| &self.faces[i])
    }

    pub fn chamber_count(&self) -> usize {
        self.chambers.len()
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        face_leq(&self.faces[i], &self.faces[j])
    }
}

/// Pointed oriented matroid data read off covectors: sign regions are empty
/// when no tope has the pattern, intersections are never empty, and ranks come
/// from the lattice of zero sets.
#[derive(Clone, Debug)]
pub struct CovectorData {
    poset: FacePoset,
    /// Zero set of each covector, as a mask, with its rank in the lattice.
    flats: HashMap<u64, usize>,
}

impl CovectorData {
    pub fn new(covectors: Vec<SignVector>) -> Result<Self> {
        let poset = FacePoset::new(covectors)?;
        let n = poset.n;
        if !poset.faces.iter().any(|f| f.zero_count() == n) {
            return Err(Error::Invalid("covectors must include the zero vector".into()));
        }
        if poset.chambers.is_empty() {
            return Err(Error::Invalid("covectors contain no tope".into()));
        }
        if let Some(i) = (0..n).find(|&i| poset.faces.iter().all(|f| f.0[i] == Sign::Zero)) {
            return Err(Error::Invalid(format!("element {} is zero in every covector", i + 1)));
        }
        let mut masks: Vec<u64> = poset.faces.iter().map(zero_mask).collect();
        masks.sort_by_key(|m| (m.count_ones(), *m));
        masks.dedup();
        let mut flats: HashMap<u64, usize> = HashMap::new();
        for &m in &masks {
            let r = masks
                .iter()
                .filter(|&&o| o != m && o & m == o)
                .map(|o| flats[o] + 1)
                .max()
                .unwrap_or(0);
            flats.insert(m, r);
        }
        Ok(CovectorData { poset, flats })
    }

    /// Covectors together with a tope list that must equal the covectors
    /// without zeros.
    pub fn with_topes(covectors: Vec<SignVector>, topes: &[SignVector]) -> Result<Self> {
        let data = Self::new(covectors)?;
        check_sign_vectors(topes)?;
        let mut a: Vec<&SignVector> = data.poset.chambers().collect();
        let mut b: Vec<&SignVector> = topes.iter().collect();
        if let Some(t) = b.iter().find(|t| !t.is_chamber()) {
            return Err(Error::Invalid(format!("tope {t} has a zero entry")));
        }
        a.sort();
        b.sort();
        if a != b {
            return Err(Error::Invalid("topes are not the zero-free covectors".into()));
        }
        Ok(data)
    }

    pub fn poset(&self) -> &FacePoset {
        &self.poset
    }

    fn closure(&self, s: &[usize]) -> u64 {
        let want = s.iter().fold(0u64, |m, &i| m | 1 << i);
        self.flats
            .keys()
            .filter(|&&f| f & want == want)
            .fold(u64::MAX, |acc, &f| acc & f)
    }
}

impl PointedData for CovectorData {
    fn size(&self) -> usize {
        self.poset.n
    }

    fn rank(&self) -> usize {
        self.flats.values().copied().max().unwrap_or(0)
    }

    fn intersection_empty(&self, _s: &[usize]) -> bool {
        false
    }

    fn excess_codim(&self, s: &[usize]) -> Result<bool> {
        Ok(self.flats[&self.closure(s)] < s.len())
    }

    fn sign_region_empty(&self, sp: &SignPair) -> Result<bool> {
        Ok(!self.poset.chambers().any(|t| {
            sp.plus.iter().all(|&i| t.0[i] == Sign::Plus) && sp.minus.iter().all(|&j| t.0[j] == Sign::Minus)
        }))
    }
}

/// Parses a covector or tope file: header `n <count>` giving the ground set
/// size, then one sign string over `+ - 0` per line.
pub fn parse_sign_vectors(text: &str) -> Result<Vec<SignVector>> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (hline, header) = lines.next().ok_or_else(|| parse_err(1, "missing header \"n <count>\""))?;
    let n: usize = match header.split_whitespace().collect::<Vec<_>>()[..] {
        ["n", c] => c.parse().map_err(|_| parse_err(hline, format!("bad count {c:?}")))?,
        _ => return Err(parse_err(hline, "header must be \"n <count>\"")),
    };
    lines
        .map(|(lineno, l)| {
            let v: SignVector = l.parse().map_err(|e: Error| parse_err(lineno, e.to_string()))?;
            if v.len() != n {
                return Err(parse_err(lineno, format!("expected {n} signs, found {}", v.len())));
            }
            Ok(v)
        })
        .collect()
}

pub fn sign_vectors_to_text(vs: &[SignVector], n: usize) -> String {
    let mut s = format!("n {n}\n");
    for v in vs {
        s.push_str(&v.to_string());
        s.push('\n');
    }
    s
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SalvettiElement {
    pub face: SignVector,
    pub chamber: SignVector,
}

/// Pairs `(F, C)` with `C` a chamber in the closure-star of `F`, ordered by
/// `(F', C') ⪯ (F, C)` iff `F' ⪯ F` and `C' = F' ∘ C`.
///
/// Elements are indexed in order of increasing zero count of the face, so
/// every strict relation goes from a smaller index to a larger one.
#[derive(Clone, Debug)]
pub struct SalvettiPoset {
    elements: Vec<SalvettiElement>,
    index: HashMap<SalvettiElement, usize>,
    /// Strictly larger elements.
    above: Vec<Vec<usize>>,
    chamber_count: usize,
}

pub fn build_salvetti(faces: &[SignVector]) -> Result<SalvettiPoset> {
    let poset = FacePoset::new(faces.to_vec())?;
    let chambers: Vec<&SignVector> = poset.chambers().collect();
    if chambers.is_empty() {
        return Err(Error::Invalid("face list has no chamber".into()));
    }
    let is_chamber: std::collections::HashSet<&SignVector> = chambers.iter().copied().collect();
    for f in &poset.faces {
        for c in &chambers {
            let fc = f.compose(c);
            if !is_chamber.contains(&fc) {
                return Err(Error::Invalid(format!("composition {f} o {c} = {fc} is not a chamber")));
            }
        }
    }

    let mut elements: Vec<SalvettiElement> = Vec::new();
    for f in &poset.faces {
        for c in &chambers {
            if face_leq(c, f) {
                elements.push(SalvettiElement {
                    face: f.clone(),
                    chamber: (*c).clone(),
                });
            }
        }
    }
    elements.sort_by(|a, b| a.face.zero_count().cmp(&b.face.zero_count()).then(a.cmp(b)));
    let index: HashMap<SalvettiElement, usize> =
        elements.iter().enumerate().map(|(i, e)| (e.clone(), i)).collect();

    let mut above = vec![Vec::new(); elements.len()];
    for (j, e) in elements.iter().enumerate() {
        for g in poset.faces.iter().filter(|g| *g != &e.face && face_leq(g, &e.face)) {
            let lower = SalvettiElement {
                face: g.clone(),
                chamber: g.compose(&e.chamber),
            };
            let i = index[&lower];
            above[i].push(j);
        }
    }
    for a in &mut above {
        a.sort_unstable();
    }
    Ok(SalvettiPoset {
        elements,
        index,
        above,
        chamber_count: chambers.len(),
    })
}

impl SalvettiPoset {
    pub fn elements(&self) -> &[SalvettiElement] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn chamber_count(&self) -> usize {
        self.chamber_count
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        i == j || self.above[i].binary_search(&j).is_ok()
    }

    /// `(F, C) -> (F, F ∘ (-C))`, as a permutation of element indices.
    pub fn involution(&self) -> Result<Vec<usize>> {
        self.elements
            .iter()
            .map(|e| {
                let image = SalvettiElement {
                    face: e.face.clone(),
                    chamber: e.face.compose(&e.chamber.neg()),
                };
                self.index.get(&image).copied().ok_or_else(|| {
                    Error::Invalid(format!("reflected chamber {} of face {} is missing", image.chamber, e.face))
                })
            })
            .collect()
    }

    /// All chains, by dimension; each simplex is its increasing vertex list.
    pub fn order_complex(&self) -> OrderComplex {
        let mut simplices: Vec<Vec<Vec<u32>>> = Vec::new();
        let mut chain: Vec<u32> = Vec::new();
        for v in 0..self.elements.len() {
            chain.push(v as u32);
            self.extend_chain(&mut chain, &mut simplices);
            chain.pop();
        }
        for level in &mut simplices {
            level.sort_unstable();
        }
        OrderComplex::new(self.elements.len(), simplices)
    }

    fn extend_chain(&self, chain: &mut Vec<u32>, out: &mut Vec<Vec<Vec<u32>>>) {
        let dim = chain.len() - 1;
        if out.len() <= dim {
            out.push(Vec::new());
        }
        out[dim].push(chain.clone());
        let top = *chain.last().expect("nonempty") as usize;
        for &next in &self.above[top] {
            chain.push(next as u32);
            self.extend_chain(chain, out);
            chain.pop();
        }
    }
}

/// A simplicial complex stored as sorted vertex lists per dimension.
#[derive(Clone, Debug)]
pub struct OrderComplex {
    vertex_count: usize,
    simplices: Vec<Vec<Vec<u32>>>,
    index: Vec<HashMap<Vec<u32>, u32>>,
}

impl OrderComplex {
    fn new(vertex_count: usize, simplices: Vec<Vec<Vec<u32>>>) -> Self {
        let index = simplices
            .iter()
            .map(|level| level.iter().enumerate().map(|(i, s)| (s.clone(), i as u32)).collect())
            .collect();
        OrderComplex {
            vertex_count,
            simplices,
            index,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    /// Highest simplex dimension, or `None` for the empty complex.
    pub fn dimension(&self) -> Option<usize> {
        self.simplices.len().checked_sub(1)
    }

    pub fn simplices(&self, dim: usize) -> &[Vec<u32>] {
        self.simplices.get(dim).map_or(&[], |v| v.as_slice())
    }

    pub fn counts(&self) -> Vec<usize> {
        self.simplices.iter().map(|v| v.len()).collect()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.counts()
            .iter()
            .enumerate()
            .map(|(k, &c)| if k % 2 == 0 { c as i64 } else { -(c as i64) })
            .sum()
    }

    fn facets_of(&self, dim: usize, s: &[u32]) -> Vec<u32> {
        let mut rows: Vec<u32> = (0..s.len())
            .map(|skip| {
                let f: Vec<u32> = s
                    .iter()
                    .enumerate()
                    .filter(|&(k, _)| k != skip)
                    .map(|(_, &v)| v)
                    .collect();
                self.index[dim - 1][&f]
            })
            .collect();
        rows.sort_unstable();
        rows
    }

    /// Boundary matrix columns from dimension `dim` to `dim - 1`.
    fn boundary_columns(&self, dim: usize) -> Vec<Vec<u32>> {
        if dim == 0 || dim >= self.simplices.len() {
            return Vec::new();
        }
        self.simplices[dim].iter().map(|s| self.facets_of(dim, s)).collect()
    }

    /// For each `dim`-simplex, the `(dim+1)`-simplices having it as a facet.
    fn cofacets(&self, dim: usize) -> Vec<Vec<u32>> {
        let mut out = vec![Vec::new(); self.simplices(dim).len()];
        if dim + 1 < self.simplices.len() {
            for (j, s) in self.simplices[dim + 1].iter().enumerate() {
                for r in self.facets_of(dim + 1, s) {
                    out[r as usize].push(j as u32);
                }
            }
        }
        out
    }

    /// Image of every `dim`-simplex under a vertex permutation that maps
    /// simplices to simplices.
    fn permute(&self, dim: usize, perm: &[usize]) -> Result<Vec<u32>> {
        self.simplices(dim)
            .iter()
            .map(|s| {
                let mut t: Vec<u32> = s.iter().map(|&v| perm[v as usize] as u32).collect();
                t.sort_unstable();
                self.index[dim]
                    .get(&t)
                    .copied()
                    .ok_or_else(|| Error::Invalid(format!("simplex {s:?} is not mapped to a simplex")))
            })
            .collect()
    }
}

/// GF(2) Betti numbers in dimensions `0..=top`.
pub fn homology_gf2(c: &OrderComplex, top: usize) -> Vec<usize> {
    let ranks: Vec<usize> = (0..=top + 1).map(|k| sparse_gf2_rank(c.boundary_columns(k))).collect();
    (0..=top)
        .map(|k| c.simplices(k).len() - ranks[k] - ranks[k + 1])
        .collect()
}

/// Dimensions of the cohomology of the Borel double complex
/// `C^p ⊗ (periodic resolution)`, truncated at twist degree `d`, in total
/// degrees `0..d` (the degrees the truncation does not affect).
///
/// The total differential on `C^p` in twist degree `q` is the simplicial
/// coboundary into `(p+1, q)` plus `1 + τ` into `(p, q+1)`.
pub fn equivariant_cohomology_gf2(c: &OrderComplex, involution: &[usize], d: usize) -> Result<Vec<usize>> {
    if involution.len() != c.vertex_count() {
        return Err(Error::Invalid("involution does not act on the vertices".into()));
    }
    let top = c.dimension().unwrap_or(0);
    let mut tau: Vec<Vec<u32>> = Vec::with_capacity(top + 1);
    for p in 0..=top {
        let images = c.permute(p, involution)?;
        for (i, &j) in images.iter().enumerate() {
            let s = &c.simplices(p)[i];
            if j as usize == i && s.iter().any(|&v| involution[v as usize] != v as usize) {
                return Err(Error::Invalid(format!("simplex {s:?} is fixed setwise but not pointwise")));
            }
        }
        tau.push(images);
    }
    let cofacets: Vec<Vec<Vec<u32>>> = (0..=top).map(|p| c.cofacets(p)).collect();

    // blocks of total degree n: (p, q = n - p) with 0 <= q <= d
    let blocks = |n: usize| -> Vec<usize> { (0..=top.min(n)).filter(|&p| n - p <= d).collect() };
    let offsets = |n: usize| -> HashMap<usize, u32> {
        let mut off = 0u32;
        let mut m = HashMap::new();
        for p in blocks(n) {
            m.insert(p, off);
            off += c.simplices(p).len() as u32;
        }
        m
    };
    let size = |n: usize| -> usize { blocks(n).iter().map(|&p| c.simplices(p).len()).sum() };

    let mut ranks = Vec::with_capacity(d);
    for n in 0..d {
        let next = offsets(n + 1);
        let mut columns: Vec<Vec<u32>> = Vec::with_capacity(size(n));
        for p in blocks(n) {
            let q = n - p;
            for i in 0..c.simplices(p).len() {
                let mut col: Vec<u32> = Vec::new();
                if let Some(&o) = next.get(&(p + 1)) {
                    col.extend(cofacets[p][i].iter().map(|&j| o + j));
                }
                if q < d {
                    let o = next[&p];
                    let j = tau[p][i];
                    if j as usize != i {
                        col.push(o + i as u32);
                        col.push(o + j);
                    }
                }
                col.sort_unstable();
                columns.push(col);
            }
        }
        ranks.push(sparse_gf2_rank(columns));
    }
    Ok((0..d)
        .map(|n| size(n) - ranks[n] - if n > 0 { ranks[n - 1] } else { 0 })
        .collect())
}
