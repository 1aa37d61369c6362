//! Buchberger's algorithm over GF(2) with the normal selection strategy.
//!
//! Input generators and S-pairs share one queue keyed by degree, so for
//! homogeneous input the basis grows degree by degree. Pairs are filtered
//! with the product criterion and the Gebauer-Moller update.

use std::cmp::Reverse;
use std::collections::{BTreeSet, BinaryHeap, HashSet};

use super::monomial::Monomial;
use super::polynomial::Gf2Poly;

/// Full reduction of `f` by `basis` (every term of the result is irreducible).
pub fn reduce(f: &Gf2Poly, basis: &[Gf2Poly]) -> Gf2Poly {
    let leads: Vec<Monomial> = basis.iter().map(|g| *g.leading().expect("nonzero basis")).collect();
    reduce_with_leads(f, basis, &leads)
}

pub(crate) fn reduce_with_leads(f: &Gf2Poly, basis: &[Gf2Poly], leads: &[Monomial]) -> Gf2Poly {
    let mut f = f.clone();
    let mut rem: Vec<Monomial> = Vec::new();
    while let Some(&lt) = f.leading() {
        match leads.iter().position(|l| l.divides(&lt)) {
            Some(i) => {
                let q = lt.div(&leads[i]).expect("divides");
                f.add_assign(&basis[i].mul_monomial(&q));
            }
            None => {
                rem.push(lt);
                f = Gf2Poly::from_terms(f.terms()[1..].to_vec());
            }
        }
    }
    Gf2Poly::from_terms(rem)
}

fn s_poly(f: &Gf2Poly, g: &Gf2Poly) -> Gf2Poly {
    let (lf, lg) = (f.leading().unwrap(), g.leading().unwrap());
    let l = lf.lcm(lg);
    f.mul_monomial(&l.div(lf).unwrap())
        .add(&g.mul_monomial(&l.div(lg).unwrap()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum Task {
    /// Input generator by position.
    Gen(usize),
    /// S-pair of basis elements `i < j`.
    Pair(usize, usize),
}

/// Queue key: (degree, monomial, insertion sequence). Smallest first.
type Key = Reverse<(u32, Monomial, u64, Task)>;

/// Reduced Groebner basis of the ideal generated by `gens`, sorted by
/// increasing leading monomial. Empty input (or all-zero input) gives an empty
/// basis.
pub fn buchberger(gens: &[Gf2Poly]) -> Vec<Gf2Poly> {
    let gens: Vec<Gf2Poly> = {
        let set: BTreeSet<Gf2Poly> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
        set.into_iter().collect()
    };
    let mut basis: Vec<Gf2Poly> = Vec::new();
    let mut leads: Vec<Monomial> = Vec::new();
    let mut live_pairs: HashSet<(usize, usize)> = HashSet::new();
    let mut queue: BinaryHeap<Key> = BinaryHeap::new();
    let mut seq = 0u64;

    for (i, g) in gens.iter().enumerate() {
        let lt = *g.leading().unwrap();
        queue.push(Reverse((lt.degree(), lt, seq, Task::Gen(i))));
        seq += 1;
    }

    while let Some(Reverse((_, _, _, task))) = queue.pop() {
        let candidate = match task {
            Task::Gen(i) => gens[i].clone(),
            Task::Pair(i, j) => {
                if !live_pairs.remove(&(i, j)) {
                    continue;
                }
                s_poly(&basis[i], &basis[j])
            }
        };
        let h = reduce_with_leads(&candidate, &basis, &leads);
        let Some(&t) = h.leading() else { continue };
        if t.is_one() {
            return vec![Gf2Poly::one()];
        }
        let k = basis.len();

        // Gebauer-Moller: drop old pairs whose lcm the new leading term
        // divides strictly on both sides.
        live_pairs.retain(|&(i, j)| {
            let l = leads[i].lcm(&leads[j]);
            !(t.divides(&l) && leads[i].lcm(&t) != l && leads[j].lcm(&t) != l)
        });

        let mut new_pairs: Vec<(usize, Monomial, bool)> = (0..k)
            .map(|i| (i, leads[i].lcm(&t), leads[i].coprime(&t)))
            .collect();
        // M criterion: drop (i,k) if some (j,k) has an lcm properly dividing it.
        let lcms: Vec<Monomial> = new_pairs.iter().map(|p| p.1).collect();
        new_pairs.retain(|&(_, l, _)| !lcms.iter().any(|m| m.divides(&l) && *m != l));
        // F criterion + product criterion: one pair per lcm, none if any pair
        // with that lcm is coprime.
        new_pairs.sort_by(|a, b| a.1.cmp(&b.1).then(a.0.cmp(&b.0)));
        let mut kept: Vec<(usize, Monomial)> = Vec::new();
        let mut idx = 0;
        while idx < new_pairs.len() {
            let l = new_pairs[idx].1;
            let group_end = new_pairs[idx..].iter().position(|p| p.1 != l).map_or(new_pairs.len(), |e| idx + e);
            if !new_pairs[idx..group_end].iter().any(|p| p.2) {
                kept.push((new_pairs[idx].0, l));
            }
            idx = group_end;
        }

        basis.push(h);
        leads.push(t);
        for (i, l) in kept {
            live_pairs.insert((i, k));
            queue.push(Reverse((l.degree(), l, seq, Task::Pair(i, k))));
            seq += 1;
        }
    }

    reduce_basis(basis)
}

/// Turns a Groebner basis into the reduced one: drop elements whose leading
/// term is divisible by another leading term, then tail-reduce.
pub fn reduce_basis(mut basis: Vec<Gf2Poly>) -> Vec<Gf2Poly> {
    basis.retain(|g| !g.is_zero());
    basis.sort_by(|a, b| a.leading().cmp(&b.leading()));
    basis.dedup_by(|a, b| a.leading() == b.leading());
    let mut minimal: Vec<Gf2Poly> = Vec::new();
    for g in basis {
        let lt = g.leading().unwrap();
        if !minimal.iter().any(|m| m.leading().unwrap().divides(lt)) {
            minimal.push(g);
        }
    }
    let mut reduced = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let lt = *minimal[i].leading().unwrap();
        let others: Vec<Gf2Poly> = minimal
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, g)| g.clone())
            .collect();
        let tail = Gf2Poly::from_terms(minimal[i].terms()[1..].to_vec());
        let tail = reduce(&tail, &others);
        reduced.push(Gf2Poly::monomial(lt).add(&tail));
    }
    reduced.sort_by(|a, b| a.leading().cmp(&b.leading()));
    reduced
}

/// True iff the two generating sets span the same ideal.
pub fn ideal_equal(g1: &[Gf2Poly], g2: &[Gf2Poly]) -> bool {
    buchberger(g1) == buchberger(g2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{parse_poly, PolyRing};
    use proptest::prelude::*;

    fn p(s: &str, r: &PolyRing) -> Gf2Poly {
        parse_poly(s, r).unwrap()
    }

    #[test]
    fn examples() {
        let r = PolyRing::new(1, true).unwrap();
        let gb = buchberger(&[p("e1*(x-e1)", &r)]);
        assert_eq!(gb, vec![p("e1^2+e1*x", &r)]);

        let gb = buchberger(&[p("e1^2", &r), p("x*e1", &r)]);
        assert_eq!(gb.len(), 2);
        assert!(gb.contains(&p("e1^2", &r)) && gb.contains(&p("e1*x", &r)));

        let r2 = PolyRing::new(2, false).unwrap();
        let gb = buchberger(&[p("e1+e2", &r2), p("e2^2", &r2)]);
        assert!(gb.contains(&p("e1+e2", &r2)));
        assert!(gb.contains(&p("e2^2", &r2)));
        assert!(reduce(&p("e1^2", &r2), &gb).is_zero());

        assert!(buchberger(&[]).is_empty());
        assert!(buchberger(&[Gf2Poly::zero()]).is_empty());
        assert_eq!(buchberger(&[p("e1+1", &r), p("e1", &r)]), vec![Gf2Poly::one()]);
    }

    #[test]
    fn ideal_equality_examples() {
        let r = PolyRing::new(1, true).unwrap();
        assert!(ideal_equal(&[p("e1^2+e1*x", &r)], &[p("e1*(x-e1)", &r)]));
        assert!(!ideal_equal(&[p("e1", &r)], &[p("e1^2", &r)]));
        let r2 = PolyRing::new(2, true).unwrap();
        assert!(ideal_equal(
            &[p("e1*e2", &r2), p("e1*(x-e2)", &r2)],
            &[p("e1*e2", &r2), p("e1*x", &r2)]
        ));
    }

    fn gens() -> impl Strategy<Value = Vec<Gf2Poly>> {
        let term = proptest::collection::vec(0u8..3, 3).prop_map(|e| Monomial::from_exps(&e));
        let poly = proptest::collection::vec(term, 1..4).prop_map(Gf2Poly::from_terms);
        proptest::collection::vec(poly, 1..5)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(128))]
        #[test]
        fn basis_properties(g in gens(), rot in 0usize..5) {
            let gb = buchberger(&g);
            for f in &g {
                prop_assert!(reduce(f, &gb).is_zero());
            }
            // every S-polynomial reduces to zero
            for i in 0..gb.len() {
                for j in i + 1..gb.len() {
                    prop_assert!(reduce(&s_poly(&gb[i], &gb[j]), &gb).is_zero());
                }
            }
            let mut perm = g.clone();
            let len = perm.len();
            perm.rotate_left(rot % len);
            perm.reverse();
            prop_assert_eq!(buchberger(&perm), gb);
        }
    }
}
