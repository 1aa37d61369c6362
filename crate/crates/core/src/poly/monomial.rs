use std::cmp::Ordering;
use std::fmt;

/// Maximum number of variables (the e's plus x).
pub const MAX_VARS: usize = 16;

/// Exponent vector. Variable `i < n` is `e_{i+1}`; when present, `x` is the
/// last variable of the ring.
///
/// Ordering is graded reverse lexicographic: higher total degree first, then
/// the monomial with the smaller exponent in the last differing variable is
/// larger. With `x` last this puts `x` below every `e_i`, so `e_i^2 > e_i x`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: [u8; MAX_VARS],
}

impl Monomial {
    pub const ONE: Monomial = Monomial { exps: [0; MAX_VARS] };

    pub fn var(i: usize) -> Monomial {
        let mut m = Monomial::ONE;
        m.exps[i] = 1;
        m
    }

    pub fn from_exps(exps: &[u8]) -> Monomial {
        assert!(exps.len() <= MAX_VARS, "too many variables");
        let mut m = Monomial::ONE;
        m.exps[..exps.len()].copy_from_slice(exps);
        m
    }

    pub fn exp(&self, i: usize) -> u8 {
        self.exps[i]
    }

    pub fn exps(&self) -> &[u8; MAX_VARS] {
        &self.exps
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().map(|&e| e as u32).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps == [0; MAX_VARS]
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut m = *self;
        for (a, b) in m.exps.iter_mut().zip(&other.exps) {
            *a = a.checked_add(*b).expect("exponent overflow");
        }
        m
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `self / other` if `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut m = *self;
        for (a, b) in m.exps.iter_mut().zip(&other.exps) {
            *a = a.checked_sub(*b)?;
        }
        Some(m)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut m = *self;
        for (a, b) in m.exps.iter_mut().zip(&other.exps) {
            *a = (*a).max(*b);
        }
        m
    }

    pub fn coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(&a, &b)| a == 0 || b == 0)
    }

    /// Largest variable index with a nonzero exponent.
    pub fn last_var(&self) -> Option<usize> {
        self.exps.iter().rposition(|&e| e != 0)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        match self.degree().cmp(&other.degree()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        for i in (0..MAX_VARS).rev() {
            match self.exps[i].cmp(&other.exps[i]) {
                Ordering::Equal => continue,
                ord => return ord.reverse(),
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let last = self.last_var().map_or(0, |i| i + 1);
        write!(f, "m{:?}", &self.exps[..last])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn order_puts_x_last() {
        // ring e1, x: x is variable 1
        let e2 = Monomial::from_exps(&[2, 0]);
        let ex = Monomial::from_exps(&[1, 1]);
        let x2 = Monomial::from_exps(&[0, 2]);
        assert!(e2 > ex && ex > x2);
        // e1 > e2 > x in a three-variable ring
        let (a, b, c) = (Monomial::var(0), Monomial::var(1), Monomial::var(2));
        assert!(a > b && b > c);
        assert!(Monomial::var(2).mul(&Monomial::var(2)) > a);
    }

    fn mono() -> impl Strategy<Value = Monomial> {
        proptest::collection::vec(0u8..4, 4).prop_map(|v| Monomial::from_exps(&v))
    }

    proptest! {
        #[test]
        fn order_is_multiplicative(a in mono(), b in mono(), c in mono()) {
            prop_assert_eq!(a.cmp(&b), a.mul(&c).cmp(&b.mul(&c)));
            if a.degree() > b.degree() {
                prop_assert!(a > b);
            }
            prop_assert!(a.mul(&c) >= a);
            prop_assert_eq!(a.mul(&b).div(&b), Some(a));
            prop_assert!(a.divides(&a.lcm(&b)) && b.divides(&a.lcm(&b)));
        }
    }
}
