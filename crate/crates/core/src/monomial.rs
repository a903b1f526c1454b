use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

/// Exponent vector aligned with the variables of a ring.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn from_exponents(exps: Vec<u32>) -> Self {
        Monomial(exps)
    }

    pub fn var(nvars: usize, index: usize, exp: u32) -> Self {
        let mut m = Monomial::one(nvars);
        m.0[index] = exp;
        m
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn weighted_degree(&self, weights: &[u32]) -> u32 {
        self.0.iter().zip(weights).map(|(e, w)| e * w).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        Monomial(other.0.iter().zip(&self.0).map(|(a, b)| a - b).collect())
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.min(b)).collect())
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Index of the only variable occurring, if the monomial is a pure power.
    pub fn pure_power_var(&self) -> Option<usize> {
        let mut found = None;
        for (i, &e) in self.0.iter().enumerate() {
            if e > 0 {
                if found.is_some() {
                    return None;
                }
                found = Some(i);
            }
        }
        found
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, _)| i)
    }
}

/// Monomial orders used by the Gröbner engine.
///
/// `Block(k)` compares the first `k` variables by grevlex and breaks ties by
/// grevlex on the remaining ones; it eliminates the first `k` variables.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub enum MonomialOrder {
    #[default]
    Grevlex,
    Lex,
    Block(usize),
}

fn grevlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    da.cmp(&db).then_with(|| {
        for (x, y) in a.iter().zip(b).rev() {
            match x.cmp(y) {
                Ordering::Equal => continue,
                o => return o.reverse(),
            }
        }
        Ordering::Equal
    })
}

impl MonomialOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let (a, b) = (&a.0[..], &b.0[..]);
        match *self {
            MonomialOrder::Grevlex => grevlex(a, b),
            MonomialOrder::Lex => a.cmp(b),
            MonomialOrder::Block(k) => {
                let k = k.min(a.len());
                grevlex(&a[..k], &b[..k]).then_with(|| grevlex(&a[k..], &b[k..]))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all_monomials(nvars: usize, maxdeg: u32) -> Vec<Monomial> {
        let mut out = vec![vec![]];
        for _ in 0..nvars {
            let mut next = Vec::new();
            for v in &out {
                for e in 0..=maxdeg {
                    let mut w: Vec<u32> = v.clone();
                    w.push(e);
                    if w.iter().sum::<u32>() <= maxdeg {
                        next.push(w);
                    }
                }
            }
            out = next;
        }
        out.into_iter().map(Monomial::from_exponents).collect()
    }

    #[test]
    fn orders_are_total_multiplicative_and_well_founded() {
        let mons = all_monomials(3, 4);
        let small = all_monomials(3, 2);
        let one = Monomial::one(3);
        for order in [
            MonomialOrder::Grevlex,
            MonomialOrder::Lex,
            MonomialOrder::Block(1),
            MonomialOrder::Block(2),
        ] {
            for a in &mons {
                assert_ne!(order.cmp(a, &one), Ordering::Less);
                for b in &mons {
                    let ab = order.cmp(a, b);
                    assert_eq!(ab, order.cmp(b, a).reverse());
                    assert_eq!(ab == Ordering::Equal, a == b);
                    if ab == Ordering::Less {
                        for c in &small {
                            assert_eq!(order.cmp(&a.mul(c), &b.mul(c)), Ordering::Less);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn grevlex_breaks_ties_on_last_variable() {
        let xz = Monomial::from_exponents(vec![1, 0, 1]);
        let yy = Monomial::from_exponents(vec![0, 2, 0]);
        assert_eq!(MonomialOrder::Grevlex.cmp(&yy, &xz), Ordering::Greater);
        assert_eq!(MonomialOrder::Lex.cmp(&yy, &xz), Ordering::Less);
    }

    #[test]
    fn divisibility_and_lcm() {
        let a = Monomial::from_exponents(vec![2, 1, 0]);
        let b = Monomial::from_exponents(vec![1, 3, 1]);
        assert_eq!(a.lcm(&b).exponents(), &[2, 3, 1]);
        assert!(!a.divides(&b));
        assert!(a.gcd(&b).divides(&a));
        assert_eq!(a.quotient_of(&a.lcm(&b)).exponents(), &[0, 2, 1]);
        assert_eq!(Monomial::var(3, 1, 4).pure_power_var(), Some(1));
    }
}
