//! Sparse monomials under graded reverse-lexicographic order.

use std::cmp::Ordering;
use std::fmt;

use smallvec::SmallVec;

use super::var::Var;

/// A monomial: variables in increasing [`Var`] order with positive exponents.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    factors: SmallVec<[(Var, u16); 6]>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn var(v: Var) -> Self {
        Self::var_pow(v, 1)
    }

    pub fn var_pow(v: Var, e: u16) -> Self {
        let mut m = Monomial::default();
        if e > 0 {
            m.factors.push((v, e));
        }
        m
    }

    /// Builds a monomial from arbitrary (var, exponent) pairs, merging repeats.
    pub fn from_pairs<I: IntoIterator<Item = (Var, u16)>>(pairs: I) -> Self {
        let mut f: SmallVec<[(Var, u16); 6]> = pairs.into_iter().filter(|p| p.1 > 0).collect();
        f.sort_by_key(|p| p.0);
        let mut out: SmallVec<[(Var, u16); 6]> = SmallVec::new();
        for (v, e) in f {
            match out.last_mut() {
                Some(last) if last.0 == v => last.1 += e,
                _ => out.push((v, e)),
            }
        }
        Monomial { factors: out }
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn factors(&self) -> &[(Var, u16)] {
        &self.factors
    }

    pub fn total_degree(&self) -> u32 {
        self.factors.iter().map(|p| p.1 as u32).sum()
    }

    pub fn exponent(&self, v: Var) -> u16 {
        match self.factors.binary_search_by_key(&v, |p| p.0) {
            Ok(i) => self.factors[i].1,
            Err(_) => 0,
        }
    }

    pub fn vars(&self) -> impl Iterator<Item = Var> + '_ {
        self.factors.iter().map(|p| p.0)
    }

    pub fn mul(&self, o: &Monomial) -> Monomial {
        let (a, b) = (&self.factors, &o.factors);
        let mut out: SmallVec<[(Var, u16); 6]> = SmallVec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial { factors: out }
    }

    pub fn pow(&self, e: u16) -> Monomial {
        Monomial { factors: self.factors.iter().map(|&(v, x)| (v, x * e)).collect() }
    }

    pub fn divides(&self, o: &Monomial) -> bool {
        self.factors.iter().all(|&(v, e)| o.exponent(v) >= e)
    }

    /// `o / self`, if `self` divides `o`.
    pub fn quotient_of(&self, o: &Monomial) -> Option<Monomial> {
        if !self.divides(o) {
            return None;
        }
        let pairs = o.factors.iter().filter_map(|&(v, e)| {
            let r = e - self.exponent(v);
            (r > 0).then_some((v, r))
        });
        Some(Monomial { factors: pairs.collect() })
    }

    /// Removes one power of `v` (returns the exponent it had), or `None`.
    pub fn without_one(&self, v: Var) -> Option<(Monomial, u16)> {
        let i = self.factors.binary_search_by_key(&v, |p| p.0).ok()?;
        let e = self.factors[i].1;
        let mut f = self.factors.clone();
        if e == 1 {
            f.remove(i);
        } else {
            f[i].1 -= 1;
        }
        Some((Monomial { factors: f }, e))
    }

    /// Removes `v` entirely, returning the stripped monomial and its exponent.
    pub fn strip(&self, v: Var) -> (Monomial, u16) {
        match self.factors.binary_search_by_key(&v, |p| p.0) {
            Ok(i) => {
                let mut f = self.factors.clone();
                let (_, e) = f.remove(i);
                (Monomial { factors: f }, e)
            }
            Err(_) => (self.clone(), 0),
        }
    }

    /// Applies a variable renaming. The map must be injective on the support.
    pub fn rename<F: Fn(Var) -> Var>(&self, f: F) -> Monomial {
        Monomial::from_pairs(self.factors.iter().map(|&(v, e)| (f(v), e)))
    }

    /// Graded reverse-lexicographic comparison.
    ///
    /// Higher total degree is larger; ties are broken at the smallest
    /// variable (largest packed value) where exponents differ, the monomial
    /// with the smaller exponent there being larger.
    pub fn grevlex_cmp(&self, o: &Monomial) -> Ordering {
        let d = self.total_degree().cmp(&o.total_degree());
        if d != Ordering::Equal {
            return d;
        }
        let (a, b) = (&self.factors, &o.factors);
        let (mut i, mut j) = (a.len(), b.len());
        while i > 0 && j > 0 {
            let (va, ea) = a[i - 1];
            let (vb, eb) = b[j - 1];
            match va.cmp(&vb) {
                // `a` has the smaller variable `va`, absent from `b`.
                Ordering::Greater => return Ordering::Less,
                Ordering::Less => return Ordering::Greater,
                Ordering::Equal => {
                    if ea != eb {
                        return eb.cmp(&ea);
                    }
                    i -= 1;
                    j -= 1;
                }
            }
        }
        // Equal degree and one list exhausted: both must be exhausted.
        (j).cmp(&i)
    }

    /// Pure lexicographic comparison with the fixed variable order.
    pub fn lex_cmp(&self, o: &Monomial) -> Ordering {
        let (a, b) = (&self.factors, &o.factors);
        for k in 0..a.len().min(b.len()) {
            let (va, ea) = a[k];
            let (vb, eb) = b[k];
            if va != vb {
                // the one containing the larger (smaller-valued) var wins
                return vb.cmp(&va);
            }
            if ea != eb {
                return ea.cmp(&eb);
            }
        }
        a.len().cmp(&b.len())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.grevlex_cmp(other)
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        for (k, (v, e)) in self.factors.iter().enumerate() {
            if k > 0 {
                write!(f, "*")?;
            }
            if *e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::super::var::Named;
    use super::*;

    fn xyz(a: u16, b: u16, c: u16) -> Monomial {
        Monomial::from_pairs([
            (Var::named(Named::X), a),
            (Var::named(Named::Y), b),
            (Var::named(Named::Z), c),
        ])
    }

    #[test]
    fn grevlex_basics() {
        // x > y > z; degree 2: x^2 > xy > y^2 > xz > yz > z^2
        let order = [xyz(2, 0, 0), xyz(1, 1, 0), xyz(0, 2, 0), xyz(1, 0, 1), xyz(0, 1, 1), xyz(0, 0, 2)];
        for w in order.windows(2) {
            assert_eq!(w[0].grevlex_cmp(&w[1]), Ordering::Greater, "{} vs {}", w[0], w[1]);
        }
        assert_eq!(xyz(0, 0, 1).grevlex_cmp(&xyz(1, 0, 0)), Ordering::Less);
        assert_eq!(xyz(1, 2, 0).grevlex_cmp(&xyz(1, 2, 0)), Ordering::Equal);
    }

    #[test]
    fn lex_basics() {
        assert_eq!(xyz(1, 0, 0).lex_cmp(&xyz(0, 5, 5)), Ordering::Greater);
        assert_eq!(xyz(0, 1, 0).lex_cmp(&xyz(0, 0, 9)), Ordering::Greater);
        assert_eq!(xyz(1, 1, 0).lex_cmp(&xyz(1, 0, 3)), Ordering::Greater);
    }

    #[test]
    fn mul_and_divide() {
        let a = xyz(1, 2, 0);
        let b = xyz(0, 1, 3);
        let p = a.mul(&b);
        assert_eq!(p, xyz(1, 3, 3));
        assert_eq!(a.quotient_of(&p), Some(b.clone()));
        assert!(b.quotient_of(&a).is_none());
    }
}
