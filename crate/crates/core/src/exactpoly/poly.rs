//! Sparse multivariate polynomials.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rustc_hash::FxHashMap;

use super::coeff::{self, Coeff, Domain, Modulus, Residue};
use super::monomial::Monomial;
use super::var::{Universe, Var};
use super::PolyError;

/// A polynomial: terms sorted by decreasing grevlex monomial, no zero
/// coefficients, plus the coefficient context.
#[derive(Clone)]
pub struct Poly<K: Coeff> {
    ctx: K::Ctx,
    terms: Vec<(Monomial, K)>,
}

pub type IntPoly = Poly<BigInt>;
pub type RatPoly = Poly<BigRational>;
pub type ModPoly = Poly<Residue>;

impl<K: Coeff> PartialEq for Poly<K> {
    fn eq(&self, o: &Self) -> bool {
        self.ctx == o.ctx && self.terms == o.terms
    }
}

impl<K: Coeff> fmt::Debug for Poly<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly[{}]({})", K::domain(&self.ctx), self)
    }
}

/// Outcome of a multidegree query.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Homogeneity {
    Homogeneous(Vec<u32>),
    /// Two terms with different multidegrees.
    Inhomogeneous(Monomial, Monomial),
}

/// `Z^n` degree of a monomial in the `A`/`C` universes.
pub fn monomial_multidegree(m: &Monomial, n: usize) -> Result<Vec<u32>, PolyError> {
    let mut d = vec![0u32; n];
    for &(v, e) in m.factors() {
        let s = match v.universe() {
            Universe::A | Universe::C => v.subset().unwrap(),
            _ => return Err(PolyError::Ungraded(v.to_string())),
        };
        for i in s.elements() {
            if i > n {
                return Err(PolyError::Ungraded(v.to_string()));
            }
            d[i - 1] += e as u32;
        }
    }
    Ok(d)
}

impl<K: Coeff> Poly<K> {
    pub fn zero_in(ctx: K::Ctx) -> Self {
        Poly { ctx, terms: Vec::new() }
    }

    pub fn constant_in(c: K, ctx: K::Ctx) -> Self {
        Self::from_terms_in(vec![(Monomial::one(), c)], ctx)
    }

    pub fn one_in(ctx: K::Ctx) -> Self {
        let one = K::k_one(&ctx);
        Self::constant_in(one, ctx)
    }

    pub fn var_in(v: Var, ctx: K::Ctx) -> Self {
        let one = K::k_one(&ctx);
        Poly { ctx, terms: vec![(Monomial::var(v), one)] }
    }

    pub fn monomial_in(m: Monomial, c: K, ctx: K::Ctx) -> Self {
        Self::from_terms_in(vec![(m, c)], ctx)
    }

    /// Normalizes arbitrary terms: merges duplicates, drops zeros, sorts.
    pub fn from_terms_in(terms: Vec<(Monomial, K)>, ctx: K::Ctx) -> Self {
        let mut map: FxHashMap<Monomial, K> = FxHashMap::default();
        for (m, c) in terms {
            match map.get_mut(&m) {
                Some(acc) => *acc = acc.k_add(&c, &ctx),
                None => {
                    map.insert(m, c);
                }
            }
        }
        Self::from_map(map, ctx)
    }

    fn from_map(map: FxHashMap<Monomial, K>, ctx: K::Ctx) -> Self {
        let mut terms: Vec<(Monomial, K)> = map.into_iter().filter(|(_, c)| !c.k_is_zero()).collect();
        terms.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        Poly { ctx, terms }
    }

    /// Terms already sorted strictly decreasing with nonzero coefficients.
    pub fn from_sorted_terms(terms: Vec<(Monomial, K)>, ctx: K::Ctx) -> Self {
        debug_assert!(terms.windows(2).all(|w| w[0].0 > w[1].0));
        debug_assert!(terms.iter().all(|t| !t.1.k_is_zero()));
        Poly { ctx, terms }
    }

    pub fn ctx(&self) -> &K::Ctx {
        &self.ctx
    }

    pub fn domain(&self) -> Domain {
        K::domain(&self.ctx)
    }

    pub fn terms(&self) -> &[(Monomial, K)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, K)> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|t| t.0.is_one())
    }

    pub fn leading(&self) -> Option<&(Monomial, K)> {
        self.terms.first()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.0.total_degree()).max()
    }

    pub fn coefficient(&self, m: &Monomial) -> K {
        match self.terms.binary_search_by(|t| m.cmp(&t.0)) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => K::k_zero(&self.ctx),
        }
    }

    /// Variables occurring in the polynomial, increasing.
    pub fn variables(&self) -> BTreeSet<Var> {
        self.terms.iter().flat_map(|t| t.0.vars()).collect()
    }

    fn check_ctx(&self, o: &Self) -> Result<(), PolyError> {
        if self.ctx == o.ctx {
            Ok(())
        } else {
            Err(PolyError::DomainMismatch(self.domain(), o.domain()))
        }
    }

    pub fn checked_add(&self, o: &Self) -> Result<Self, PolyError> {
        self.check_ctx(o)?;
        Ok(self.merge(o, false))
    }

    pub fn checked_sub(&self, o: &Self) -> Result<Self, PolyError> {
        self.check_ctx(o)?;
        Ok(self.merge(o, true))
    }

    fn merge(&self, o: &Self, negate: bool) -> Self {
        let ctx = &self.ctx;
        let (a, b) = (&self.terms, &o.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        let conv = |c: &K| if negate { c.k_neg(ctx) } else { c.clone() };
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Less => {
                    out.push((b[j].0.clone(), conv(&b[j].1)));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = if negate { a[i].1.k_sub(&b[j].1, ctx) } else { a[i].1.k_add(&b[j].1, ctx) };
                    if !c.k_is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(|t| (t.0.clone(), conv(&t.1))));
        Poly { ctx: self.ctx.clone(), terms: out }
    }

    pub fn neg(&self) -> Self {
        Poly { ctx: self.ctx.clone(), terms: self.terms.iter().map(|(m, c)| (m.clone(), c.k_neg(&self.ctx))).collect() }
    }

    pub fn checked_mul(&self, o: &Self) -> Result<Self, PolyError> {
        self.check_ctx(o)?;
        Ok(self.mul_unchecked(o))
    }

    fn mul_unchecked(&self, o: &Self) -> Self {
        let ctx = &self.ctx;
        if self.is_zero() || o.is_zero() {
            return Self::zero_in(ctx.clone());
        }
        if o.terms.len() == 1 {
            return self.mul_term(&o.terms[0].0, &o.terms[0].1);
        }
        if self.terms.len() == 1 {
            return o.mul_term(&self.terms[0].0, &self.terms[0].1);
        }
        let mut map: FxHashMap<Monomial, K> =
            FxHashMap::with_capacity_and_hasher(self.terms.len().max(o.terms.len()) * 4, Default::default());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &o.terms {
                let m = ma.mul(mb);
                let c = ca.k_mul(cb, ctx);
                match map.get_mut(&m) {
                    Some(acc) => *acc = acc.k_add(&c, ctx),
                    None => {
                        map.insert(m, c);
                    }
                }
            }
        }
        Self::from_map(map, ctx.clone())
    }

    /// Multiplies by a single term; order is preserved.
    pub fn mul_term(&self, m: &Monomial, c: &K) -> Self {
        let ctx = &self.ctx;
        let terms = self
            .terms
            .iter()
            .filter_map(|(mm, cc)| {
                let x = cc.k_mul(c, ctx);
                (!x.k_is_zero()).then(|| (mm.mul(m), x))
            })
            .collect();
        Poly { ctx: ctx.clone(), terms }
    }

    pub fn scale(&self, c: &K) -> Self {
        self.mul_term(&Monomial::one(), c)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one_in(self.ctx.clone());
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_unchecked(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_unchecked(&base);
            }
        }
        acc
    }

    /// Power with a signed exponent: negative exponents are rejected.
    pub fn checked_pow(&self, e: i64) -> Result<Self, PolyError> {
        if e < 0 {
            return Err(PolyError::NegativeExponent(e));
        }
        Ok(self.pow(e as u32))
    }

    /// Partial derivative with respect to `v`.
    pub fn derivative(&self, v: Var) -> Self {
        let ctx = &self.ctx;
        let mut terms = Vec::new();
        for (m, c) in &self.terms {
            if let Some((rest, e)) = m.without_one(v) {
                let x = c.k_mul(&K::k_from_i64(e as i64, ctx), ctx);
                if !x.k_is_zero() {
                    terms.push((rest, x));
                }
            }
        }
        Self::from_terms_in(terms, ctx.clone())
    }

    /// Renames variables through an injective map.
    pub fn rename<F: Fn(Var) -> Var>(&self, f: F) -> Self {
        let terms = self.terms.iter().map(|(m, c)| (m.rename(&f), c.clone())).collect();
        Self::from_terms_in(terms, self.ctx.clone())
    }

    /// Maps coefficients into another domain.
    pub fn map_coeffs<L: Coeff, F: Fn(&K) -> L>(&self, ctx: L::Ctx, f: F) -> Poly<L> {
        let terms = self.terms.iter().map(|(m, c)| (m.clone(), f(c))).filter(|t| !t.1.k_is_zero()).collect();
        Poly { ctx, terms }
    }

    /// Homogeneity in the `Z^n` grading of the `A`/`C` universes.
    pub fn multidegree_of(&self, n: usize) -> Result<Homogeneity, PolyError> {
        let mut first: Option<(Vec<u32>, &Monomial)> = None;
        for (m, _) in &self.terms {
            let d = monomial_multidegree(m, n)?;
            match &first {
                None => first = Some((d, m)),
                Some((d0, m0)) => {
                    if *d0 != d {
                        return Ok(Homogeneity::Inhomogeneous((*m0).clone(), m.clone()));
                    }
                }
            }
        }
        Ok(Homogeneity::Homogeneous(first.map(|f| f.0).unwrap_or_else(|| vec![0; n])))
    }

    /// Substitutes a polynomial for every variable.
    ///
    /// Terms are grouped by the exponent of one variable at a time and
    /// powers of each image are cached, so a shared prefix of monomials is
    /// expanded once.
    pub fn substitute(&self, assignment: &BTreeMap<Var, Poly<K>>) -> Result<Poly<K>, PolyError> {
        let vars: Vec<Var> = self.variables().into_iter().collect();
        for v in &vars {
            match assignment.get(v) {
                None => return Err(PolyError::Unassigned(v.to_string())),
                Some(img) => self.check_ctx(img)?,
            }
        }
        let mut cache: FxHashMap<(Var, u16), Poly<K>> = FxHashMap::default();
        Ok(self.subst_rec(self.terms.clone(), &vars, assignment, &mut cache))
    }

    /// Substitutes only the variables present in `assignment`.
    pub fn substitute_partial(&self, assignment: &BTreeMap<Var, Poly<K>>) -> Result<Poly<K>, PolyError> {
        let mut full = assignment.clone();
        for v in self.variables() {
            full.entry(v).or_insert_with(|| Poly::var_in(v, self.ctx.clone()));
        }
        self.substitute(&full)
    }

    fn subst_rec(
        &self,
        terms: Vec<(Monomial, K)>,
        vars: &[Var],
        assignment: &BTreeMap<Var, Poly<K>>,
        cache: &mut FxHashMap<(Var, u16), Poly<K>>,
    ) -> Poly<K> {
        let ctx = &self.ctx;
        if terms.is_empty() {
            return Self::zero_in(ctx.clone());
        }
        if vars.is_empty() {
            let c = terms.into_iter().fold(K::k_zero(ctx), |a, t| a.k_add(&t.1, ctx));
            return Self::constant_in(c, ctx.clone());
        }
        let v = vars[0];
        let mut groups: BTreeMap<u16, Vec<(Monomial, K)>> = BTreeMap::new();
        for (m, c) in terms {
            let (rest, e) = m.strip(v);
            groups.entry(e).or_default().push((rest, c));
        }
        let mut acc = Self::zero_in(ctx.clone());
        for (e, g) in groups {
            let inner = self.subst_rec(g, &vars[1..], assignment, cache);
            if inner.is_zero() {
                continue;
            }
            let piece = if e == 0 {
                inner
            } else {
                let pw = cache.entry((v, e)).or_insert_with(|| assignment[&v].pow(e as u32)).clone();
                inner.mul_unchecked(&pw)
            };
            acc = acc.merge(&piece, false);
        }
        acc
    }

    /// Evaluates at a point given for every variable.
    pub fn evaluate(&self, point: &BTreeMap<Var, K>) -> Result<K, PolyError> {
        let ctx = &self.ctx;
        let mut acc = K::k_zero(ctx);
        for (m, c) in &self.terms {
            let mut x = c.clone();
            for &(v, e) in m.factors() {
                let val = point.get(&v).ok_or_else(|| PolyError::Unassigned(v.to_string()))?;
                for _ in 0..e {
                    x = x.k_mul(val, ctx);
                }
            }
            acc = acc.k_add(&x, ctx);
        }
        Ok(acc)
    }

    /// Evaluates into a ring `T` that receives this polynomial's
    /// coefficients through `embed`.
    pub fn evaluate_in<T: coeff::Ring, F: Fn(&K) -> T>(&self, point: &BTreeMap<Var, T>, embed: F) -> Result<T, PolyError> {
        let mut powers: FxHashMap<(Var, u16), T> = FxHashMap::default();
        let mut acc = T::zero();
        for (m, c) in &self.terms {
            let mut x = embed(c);
            for &(v, e) in m.factors() {
                let val = point.get(&v).ok_or_else(|| PolyError::Unassigned(v.to_string()))?;
                let pw = powers.entry((v, e)).or_insert_with(|| val.power(e as u32));
                x = x.times(pw);
            }
            acc = acc.plus(&x);
        }
        Ok(acc)
    }
}

impl<K: Coeff<Ctx = ()>> Poly<K> {
    pub fn zero() -> Self {
        Self::zero_in(())
    }

    pub fn one() -> Self {
        Self::one_in(())
    }

    pub fn constant(c: K) -> Self {
        Self::constant_in(c, ())
    }

    pub fn var(v: Var) -> Self {
        Self::var_in(v, ())
    }

    pub fn from_terms(terms: Vec<(Monomial, K)>) -> Self {
        Self::from_terms_in(terms, ())
    }

    pub fn from_i64(n: i64) -> Self {
        Self::constant(K::k_from_i64(n, &()))
    }
}

impl IntPoly {
    /// Gcd of the coefficients (nonnegative); zero for the zero polynomial.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for (_, c) in &self.terms {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Content 1 and positive leading coefficient.
    pub fn normalized(&self) -> (IntPoly, BigInt) {
        if self.is_zero() {
            return (self.clone(), BigInt::one());
        }
        let mut g = self.content();
        if self.terms[0].1.is_negative() {
            g = -g;
        }
        let terms = self.terms.iter().map(|(m, c)| (m.clone(), c / &g)).collect();
        (Poly { ctx: (), terms }, g)
    }

    pub fn to_rational(&self) -> RatPoly {
        self.map_coeffs((), |c| BigRational::from_integer(c.clone()))
    }

    pub fn reduce_mod(&self, p: u64) -> ModPoly {
        let ctx = Modulus(p);
        self.map_coeffs(ctx, |c| Residue::k_from_bigint(c, &ctx))
    }

    /// Coefficients stored as `i64` when they fit.
    pub fn max_abs_coeff(&self) -> BigInt {
        self.terms.iter().map(|t| t.1.abs()).max().unwrap_or_default()
    }
}

impl RatPoly {
    /// Scales to a primitive integer polynomial with positive leading
    /// coefficient.
    pub fn to_primitive_integer(&self) -> IntPoly {
        let mut l = BigInt::one();
        for (_, c) in &self.terms {
            l = l.lcm(c.denom());
        }
        let lq = BigRational::from_integer(l);
        let ip: IntPoly = self.map_coeffs((), |c| (c * &lq).to_integer());
        ip.normalized().0
    }

    /// Exact conversion when all coefficients are integers.
    pub fn to_integer(&self) -> Option<IntPoly> {
        if self.terms.iter().all(|t| t.1.is_integer()) {
            Some(self.map_coeffs((), |c| c.to_integer()))
        } else {
            None
        }
    }
}

impl<K: Coeff<Ctx = ()>> Zero for Poly<K> {
    fn zero() -> Self {
        Poly::zero_in(())
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<K: Coeff<Ctx = ()>> One for Poly<K> {
    fn one() -> Self {
        Poly::one_in(())
    }
}

impl<K: Coeff<Ctx = ()>> coeff::Ring for Poly<K> {
    fn plus(&self, o: &Self) -> Self {
        self.merge(o, false)
    }
    fn minus(&self, o: &Self) -> Self {
        self.merge(o, true)
    }
    fn times(&self, o: &Self) -> Self {
        self.mul_unchecked(o)
    }
    fn negated(&self) -> Self {
        Poly::neg(self)
    }
    fn from_i64(n: i64) -> Self {
        Poly::constant_in(<K as Coeff>::k_from_i64(n, &()), ())
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $checked:ident) => {
        impl<'a, K: Coeff> ops::$tr<&'a Poly<K>> for &'a Poly<K> {
            type Output = Poly<K>;
            fn $m(self, o: &'a Poly<K>) -> Poly<K> {
                self.$checked(o).expect("polynomial domain mismatch")
            }
        }
        impl<K: Coeff> ops::$tr<Poly<K>> for Poly<K> {
            type Output = Poly<K>;
            fn $m(self, o: Poly<K>) -> Poly<K> {
                self.$checked(&o).expect("polynomial domain mismatch")
            }
        }
    };
}

binop!(Add, add, checked_add);
binop!(Sub, sub, checked_sub);
binop!(Mul, mul, checked_mul);

impl<K: Coeff> ops::Neg for &Poly<K> {
    type Output = Poly<K>;
    fn neg(self) -> Poly<K> {
        Poly::neg(self)
    }
}

impl<K: Coeff> ops::Neg for Poly<K> {
    type Output = Poly<K>;
    fn neg(self) -> Poly<K> {
        Poly::neg(&self)
    }
}

impl<K: Coeff> fmt::Display for Poly<K> {
    /// Canonical text: terms in decreasing order joined by `" + "` / `" - "`,
    /// unit coefficients omitted except on constants.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.k_is_negative();
            let abs = if neg { c.k_neg(&self.ctx) } else { c.clone() };
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let unit = abs == K::k_one(&self.ctx);
            if m.is_one() {
                write!(f, "{}", abs.render())?;
            } else if unit {
                write!(f, "{m}")?;
            } else {
                write!(f, "{}*{m}", abs.render())?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::super::var::{avar, Named};
    use super::*;

    fn v(s: &str) -> IntPoly {
        IntPoly::var(avar(s))
    }

    #[test]
    fn difference_of_squares() {
        let a1 = v("1");
        let a2 = v("2");
        let lhs = (&a1 + &a2) * (&a1 - &a2);
        let rhs = &(&a1 * &a1) - &(&a2 * &a2);
        assert_eq!(lhs, rhs);
        assert_eq!(lhs.to_string(), "A_{1}^2 - A_{2}^2");
    }

    #[test]
    fn additive_identity() {
        let f = &v("12") + &IntPoly::from_i64(3);
        assert_eq!(&f + &IntPoly::zero(), f);
    }

    #[test]
    fn monomial_power() {
        let m = IntPoly::var(Var::x(1, 2)) * IntPoly::var(Var::x(2, 1));
        let p = m.pow(3);
        assert_eq!(p.len(), 1);
        assert_eq!(p.to_string(), "x_{12}^3*x_{21}^3");
    }

    #[test]
    fn negative_exponent_rejected() {
        assert!(matches!(v("1").checked_pow(-1), Err(PolyError::NegativeExponent(-1))));
    }

    #[test]
    fn modular_domain_mismatch() {
        let f = v("1").reduce_mod(7);
        let g = v("1").reduce_mod(11);
        assert!(matches!(f.checked_add(&g), Err(PolyError::DomainMismatch(_, _))));
    }

    #[test]
    fn substitute_single() {
        let c12 = IntPoly::var(super::super::var::cvar("12"));
        let f = &c12 + &IntPoly::one();
        let mut asg = BTreeMap::new();
        asg.insert(super::super::var::cvar("12"), &(&v("1") * &v("2")) - &v("12"));
        let g = f.substitute(&asg).unwrap();
        assert_eq!(g.to_string(), "A_{1}*A_{2} - A_{12} + 1");
    }

    #[test]
    fn substitute_unassigned_names_variable() {
        let f = &v("1") + &v("2");
        let mut asg = BTreeMap::new();
        asg.insert(avar("1"), IntPoly::one());
        match f.substitute(&asg) {
            Err(PolyError::Unassigned(name)) => assert_eq!(name, "A_{2}"),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn evaluate_example() {
        let f = &(&v("1") * &v("2")) - &v("12");
        let mut pt = BTreeMap::new();
        pt.insert(avar("1"), BigInt::from(1));
        pt.insert(avar("2"), BigInt::from(4));
        pt.insert(avar("12"), BigInt::from(-2));
        assert_eq!(f.evaluate(&pt).unwrap(), BigInt::from(6));
        assert_eq!(IntPoly::zero().evaluate(&BTreeMap::new()).unwrap(), BigInt::from(0));
    }

    #[test]
    fn multidegree_examples() {
        let p = &(&(&v("1") * &v("2")) * &v("3")) * &v("4");
        assert_eq!(p.multidegree_of(4).unwrap(), Homogeneity::Homogeneous(vec![1, 1, 1, 1]));
        assert_eq!(v("1234").multidegree_of(4).unwrap(), Homogeneity::Homogeneous(vec![1, 1, 1, 1]));
        assert!(matches!((&v("1") + &v("2")).multidegree_of(4).unwrap(), Homogeneity::Inhomogeneous(_, _)));
        let x = IntPoly::var(Var::x(1, 1));
        assert!(matches!(x.multidegree_of(4), Err(PolyError::Ungraded(_))));
    }

    #[test]
    fn derivative_basic() {
        let x = IntPoly::var(Var::named(Named::X));
        let f = x.pow(3);
        assert_eq!(f.derivative(Var::named(Named::X)), x.pow(2).scale(&BigInt::from(3)));
    }
}
