//! Exact sparse polynomials over the integers, the rationals and prime
//! fields, their canonical text format, and dense modular linear algebra.

pub mod coeff;
pub mod modular;
pub mod monomial;
pub mod poly;
pub mod var;

use std::collections::BTreeMap;

use thiserror::Error;

pub use coeff::{Coeff, Domain, Field, Modulus, QuadExt, Residue, Ring};
pub use modular::{KernelResult, ModularMatrix};
pub use monomial::Monomial;
pub use poly::{monomial_multidegree, Homogeneity, IntPoly, ModPoly, Poly, RatPoly};
pub use var::{avar, cvar, Named, Universe, Var};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum PolyError {
    #[error("coefficient domain mismatch: {0} vs {1}")]
    DomainMismatch(Domain, Domain),
    #[error("negative exponent {0}")]
    NegativeExponent(i64),
    #[error("unassigned variable {0}")]
    Unassigned(String),
    #[error("variable {0} is not graded")]
    Ungraded(String),
    #[error("matrix is not square ({rows}x{cols})")]
    NonSquare { rows: usize, cols: usize },
    #[error("matrix of size {0} exceeds the supported bound")]
    TooLarge(usize),
    #[error("rational lift failed: {0}")]
    Lift(String),
    #[error("parse error at column {col}: {msg}")]
    Parse { col: usize, msg: String },
}

/// Determinant by Laplace expansion along rows, memoized over the set of
/// columns still available (`2^k` states instead of `k!` permutations).
pub fn det_polymatrix<K: Coeff>(m: &[Vec<Poly<K>>], ctx: K::Ctx) -> Result<Poly<K>, PolyError> {
    let k = m.len();
    for row in m {
        if row.len() != k {
            return Err(PolyError::NonSquare { rows: k, cols: row.len() });
        }
    }
    if k > 8 {
        return Err(PolyError::TooLarge(k));
    }
    if k == 0 {
        return Ok(Poly::one_in(ctx));
    }
    // dp[mask] = det of rows (k - |mask|)..k restricted to the columns in mask.
    let full = (1usize << k) - 1;
    let mut dp: Vec<Option<Poly<K>>> = vec![None; 1 << k];
    dp[0] = Some(Poly::one_in(ctx.clone()));
    let mut masks: Vec<usize> = (1..=full).collect();
    masks.sort_by_key(|x| x.count_ones());
    for mask in masks {
        let r = k - mask.count_ones() as usize;
        let mut acc = Poly::zero_in(ctx.clone());
        let mut sign_pos = 0usize;
        for c in 0..k {
            if mask & (1 << c) == 0 {
                continue;
            }
            let entry = &m[r][c];
            let rest = dp[mask & !(1 << c)].as_ref().unwrap();
            if !entry.is_zero() && !rest.is_zero() {
                let t = entry.checked_mul(rest)?;
                acc = if sign_pos % 2 == 0 { acc.checked_add(&t)? } else { acc.checked_sub(&t)? };
            }
            sign_pos += 1;
        }
        dp[mask] = Some(acc);
    }
    Ok(dp[full].take().unwrap())
}

/// Naive Leibniz sum; used as a reference for small matrices.
pub fn det_leibniz<K: Coeff>(m: &[Vec<Poly<K>>], ctx: K::Ctx) -> Result<Poly<K>, PolyError> {
    let k = m.len();
    for row in m {
        if row.len() != k {
            return Err(PolyError::NonSquare { rows: k, cols: row.len() });
        }
    }
    let mut acc = Poly::zero_in(ctx.clone());
    let mut perm: Vec<usize> = (0..k).collect();
    loop {
        let mut inv = 0;
        for i in 0..k {
            for j in i + 1..k {
                if perm[i] > perm[j] {
                    inv += 1;
                }
            }
        }
        let mut t = Poly::one_in(ctx.clone());
        for (i, &p) in perm.iter().enumerate() {
            t = t.checked_mul(&m[i][p])?;
        }
        acc = if inv % 2 == 0 { acc.checked_add(&t)? } else { acc.checked_sub(&t)? };
        if !next_permutation(&mut perm) {
            break;
        }
    }
    Ok(acc)
}

pub(crate) fn next_permutation(p: &mut [usize]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Parses the polynomial text format in any term order and spacing.
///
/// Terms are `coef*Var^e*...` joined by `+` or `-` (the Unicode minus is
/// accepted too); a coefficient factor may appear anywhere in the product.
pub fn parse_poly<K: Coeff>(text: &str, ctx: K::Ctx) -> Result<Poly<K>, PolyError> {
    // Keep the original column of every retained character.
    let chars: Vec<(usize, char)> = text
        .chars()
        .enumerate()
        .filter(|(_, c)| !c.is_whitespace())
        .map(|(i, c)| (i + 1, if c == '\u{2212}' { '-' } else { c }))
        .collect();
    let err = |col: usize, msg: &str| PolyError::Parse { col, msg: msg.to_string() };
    if chars.is_empty() {
        return Err(err(1, "empty input"));
    }
    let mut terms: Vec<(Monomial, K)> = Vec::new();
    let mut pos = 0;
    let mut first = true;
    while pos < chars.len() {
        let mut negative = false;
        match chars[pos].1 {
            '+' | '-' => {
                negative = chars[pos].1 == '-';
                pos += 1;
            }
            _ if !first => return Err(err(chars[pos].0, "expected + or -")),
            _ => {}
        }
        first = false;
        let start = pos;
        let mut depth = 0i32;
        while pos < chars.len() {
            let c = chars[pos].1;
            match c {
                '{' | '(' => depth += 1,
                '}' | ')' => depth -= 1,
                '+' | '-' if depth == 0 => break,
                _ => {}
            }
            pos += 1;
        }
        if start == pos {
            return Err(err(chars.get(start).map_or(text.chars().count() + 1, |c| c.0), "empty term"));
        }
        let term = &chars[start..pos];
        let mut coef = K::k_one(&ctx);
        let mut pairs = Vec::new();
        for factor in term.split(|c| c.1 == '*') {
            if factor.is_empty() {
                return Err(err(term[0].0, "empty factor"));
            }
            let col = factor[0].0;
            let s: String = factor.iter().map(|c| c.1).collect();
            if s.starts_with(|c: char| c.is_ascii_digit()) {
                let c = K::parse(&s, &ctx).ok_or_else(|| err(col, &format!("bad coefficient {s}")))?;
                coef = coef.k_mul(&c, &ctx);
                continue;
            }
            let (name, exp) = match s.rfind('^') {
                Some(i) if !s[i..].contains('}') => {
                    let e: u16 = s[i + 1..].parse().map_err(|_| err(col, &format!("bad exponent in {s}")))?;
                    (&s[..i], e)
                }
                _ => (s.as_str(), 1),
            };
            let v = Var::parse(name).ok_or_else(|| err(col, &format!("unknown variable {name}")))?;
            pairs.push((v, exp));
        }
        if negative {
            coef = coef.k_neg(&ctx);
        }
        terms.push((Monomial::from_pairs(pairs), coef));
    }
    Ok(Poly::from_terms_in(terms, ctx))
}

/// Parses over the integers.
pub fn parse_int(text: &str) -> Result<IntPoly, PolyError> {
    parse_poly(text, ())
}

/// The identity assignment on the variables of `f`.
pub fn identity_assignment<K: Coeff>(f: &Poly<K>) -> BTreeMap<Var, Poly<K>> {
    f.variables().into_iter().map(|v| (v, Poly::var_in(v, f.ctx().clone()))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use proptest::prelude::*;

    fn xm(k: usize) -> Vec<Vec<IntPoly>> {
        (1..=k).map(|i| (1..=k).map(|j| IntPoly::var(Var::x(i, j))).collect()).collect()
    }

    #[test]
    fn det_2x2() {
        assert_eq!(det_polymatrix(&xm(2), ()).unwrap(), parse_int("x_{11}*x_{22} - x_{12}*x_{21}").unwrap());
    }

    #[test]
    fn det_generic_4x4_terms() {
        assert_eq!(det_polymatrix(&xm(4), ()).unwrap().len(), 24);
    }

    #[test]
    fn det_nonsquare() {
        let m = vec![vec![IntPoly::one(), IntPoly::one()]];
        assert!(matches!(det_polymatrix(&m, ()), Err(PolyError::NonSquare { .. })));
    }

    #[test]
    fn parse_roundtrip_and_unicode_minus() {
        let f = parse_int("3*A_{12}^2*A_{3} \u{2212} A_{1} + 7").unwrap();
        assert_eq!(f.to_string(), "3*A_{3}*A_{12}^2 - A_{1} + 7");
        assert_eq!(parse_int(&f.to_string()).unwrap(), f);
        let g = parse_int("  7 - A_{1}+A_{12}^2*3*A_{3}").unwrap();
        assert_eq!(f, g);
        assert_eq!(parse_int("0").unwrap(), IntPoly::zero());
    }

    #[test]
    fn parse_rational_and_errors() {
        let f: RatPoly = parse_poly("1/2*x - 3/4", ()).unwrap();
        assert_eq!(f.to_string(), "1/2*x - 3/4");
        assert!(matches!(parse_int("A_{19}"), Err(PolyError::Parse { col: 1, .. })));
        assert!(parse_int("A_{1} +").is_err());
        assert!(parse_int("").is_err());
    }

    fn small_poly() -> impl Strategy<Value = IntPoly> {
        let vars = [avar("1"), avar("2"), avar("12"), avar("34")];
        proptest::collection::vec((-5i64..=5, proptest::collection::vec((0usize..4, 0u16..3), 0..3)), 0..5).prop_map(
            move |ts| {
                IntPoly::from_terms(
                    ts.into_iter()
                        .map(|(c, fs)| (Monomial::from_pairs(fs.into_iter().map(|(i, e)| (vars[i], e))), BigInt::from(c)))
                        .collect(),
                )
            },
        )
    }

    fn small_matrix(k: usize) -> impl Strategy<Value = Vec<Vec<IntPoly>>> {
        proptest::collection::vec(proptest::collection::vec(small_poly(), k), k)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]
        #[test]
        fn ring_axioms(a in small_poly(), b in small_poly(), c in small_poly()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&a * &b, &b * &a);
        }

        #[test]
        fn parse_print_roundtrip(a in small_poly()) {
            prop_assert_eq!(parse_int(&a.to_string()).unwrap(), a);
        }

        #[test]
        fn identity_substitution(a in small_poly()) {
            prop_assert_eq!(a.substitute(&identity_assignment(&a)).unwrap(), a);
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(60))]
        #[test]
        fn det_matches_leibniz(k in 1usize..=4, m in small_matrix(4)) {
            let sub: Vec<Vec<IntPoly>> = m.into_iter().take(k).map(|r| r.into_iter().take(k).collect()).collect();
            prop_assert_eq!(det_polymatrix(&sub, ()).unwrap(), det_leibniz(&sub, ()).unwrap());
        }

        #[test]
        fn multidegree_additive(i in 0usize..4, j in 0usize..4, e in 1u16..3) {
            let names = ["1", "12", "234", "1234"];
            let f = &IntPoly::var(avar(names[i])) + &IntPoly::var(cvar(names[i])).pow(1);
            let g = IntPoly::var(avar(names[j])).pow(e as u32);
            let (Homogeneity::Homogeneous(df), Homogeneity::Homogeneous(dg), Homogeneity::Homogeneous(dfg)) =
                (f.multidegree_of(4).unwrap(), g.multidegree_of(4).unwrap(), (&f * &g).multidegree_of(4).unwrap())
            else { panic!("expected homogeneous") };
            let sum: Vec<u32> = df.iter().zip(&dg).map(|(a, b)| a + b).collect();
            prop_assert_eq!(dfg, sum);
        }
    }
}
