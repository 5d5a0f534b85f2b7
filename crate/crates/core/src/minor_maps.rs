//! Principal minors, cycle-sums, and the transforms between them.
//!
//! For a matrix `X` the principal minors `P_I` and the cycle-sums `C_I`
//! determine each other through sums over set partitions `I = I_1 ⊔ … ⊔ I_k`:
//!
//! ```text
//! P_I = Σ (-1)^(k+|I|)          C_{I_1} ⋯ C_{I_k}
//! C_I = Σ (-1)^(k+|I|) (k-1)!   P_{I_1} ⋯ P_{I_k}
//! ```

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::cycle_decomp::{all_cycles, cycles_on};
use crate::exactpoly::{parse_poly, Field, IntPoly, PolyError, QuadExt, Ring, Universe, Var};
use crate::subset::SubsetIndex;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum MinorError {
    #[error("matrix is not square")]
    NonSquare,
    #[error("matrix sizes differ: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("size {0} exceeds the supported bound {1}")]
    TooLarge(usize, usize),
    #[error("affine vector must have entry 1 at the empty set")]
    NotAffine,
    #[error("vector length {0} is not 2^n")]
    BadLength(usize),
    #[error("generator set not loaded")]
    GeneratorsMissing,
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error(transparent)]
    Poly(#[from] PolyError),
}

pub type Matrix<T> = Vec<Vec<T>>;

/// A vector indexed by the subsets of `[n]`, in canonical subset order.
#[derive(Clone, PartialEq)]
pub struct MinorVector<T> {
    n: usize,
    values: Vec<T>,
}

fn position_table(n: usize) -> Vec<usize> {
    let mut pos = vec![usize::MAX; 1 << n];
    for (k, s) in SubsetIndex::all(n).into_iter().enumerate() {
        pos[s.mask() as usize] = k;
    }
    pos
}

impl<T: Clone> MinorVector<T> {
    /// Values listed in canonical subset order.
    pub fn from_values(n: usize, values: Vec<T>) -> Result<Self, MinorError> {
        if values.len() != 1 << n || n > 8 {
            return Err(MinorError::BadLength(values.len()));
        }
        Ok(MinorVector { n, values })
    }

    pub fn from_fn<F: FnMut(SubsetIndex) -> T>(n: usize, f: F) -> Self {
        MinorVector { n, values: SubsetIndex::all(n).into_iter().map(f).collect() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn values(&self) -> &[T] {
        &self.values
    }

    pub fn get(&self, s: SubsetIndex) -> &T {
        &self.values[Self::index_of(self.n, s)]
    }

    pub fn set(&mut self, s: SubsetIndex, v: T) {
        let i = Self::index_of(self.n, s);
        self.values[i] = v;
    }

    fn index_of(n: usize, s: SubsetIndex) -> usize {
        assert!((s.mask() as usize) < (1 << n), "subset {s} outside [{n}]");
        // canonical order: by size, then lexicographic. Tables are small.
        position_table(n)[s.mask() as usize]
    }

    pub fn iter(&self) -> impl Iterator<Item = (SubsetIndex, &T)> {
        SubsetIndex::all(self.n).into_iter().zip(self.values.iter())
    }

    pub fn map<U: Clone, F: Fn(&T) -> U>(&self, f: F) -> MinorVector<U> {
        MinorVector { n: self.n, values: self.values.iter().map(f).collect() }
    }

    /// Mask-indexed copy, for hot loops.
    pub fn by_mask(&self) -> Vec<T> {
        let mut out: Vec<Option<T>> = vec![None; 1 << self.n];
        for (s, v) in self.iter() {
            out[s.mask() as usize] = Some(v.clone());
        }
        out.into_iter().map(|x| x.unwrap()).collect()
    }
}

impl<T: fmt::Display + Clone> MinorVector<T> {
    /// One line per subset, `I<tab>value`, in canonical order.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (s, v) in self.iter() {
            out.push_str(&format!("{}\t{}\n", s, v));
        }
        out
    }
}

impl<T: fmt::Debug + Clone> fmt::Debug for MinorVector<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.iter()).finish()
    }
}

fn parse_lines<T: Clone, F: Fn(&str) -> Option<T>>(text: &str, parse: F) -> Result<MinorVector<T>, MinorError> {
    let mut entries: BTreeMap<SubsetIndex, T> = BTreeMap::new();
    let mut max_el = 0;
    for (ln, line) in text.lines().enumerate() {
        let line = line.trim_end();
        if line.trim().is_empty() || line.starts_with('#') {
            continue;
        }
        let err = |msg: &str| MinorError::Parse { line: ln + 1, msg: msg.to_string() };
        let (k, v) = line.split_once('\t').ok_or_else(|| err("expected I<tab>value"))?;
        let k = k.trim();
        let s = SubsetIndex::parse_digits(if k == "{}" { "" } else { k }).ok_or_else(|| err("bad subset"))?;
        let val = parse(v.trim()).ok_or_else(|| err("bad value"))?;
        max_el = max_el.max(s.elements().into_iter().max().unwrap_or(0));
        if entries.insert(s, val).is_some() {
            return Err(err("duplicate subset"));
        }
    }
    let n = max_el;
    if entries.len() != 1 << n {
        return Err(MinorError::BadLength(entries.len()));
    }
    let vals: Vec<T> = SubsetIndex::all(n).into_iter().map(|s| entries[&s].clone()).collect();
    MinorVector::from_values(n, vals)
}

impl MinorVector<BigRational> {
    pub fn parse_text(text: &str) -> Result<Self, MinorError> {
        parse_lines(text, |v| v.parse::<BigRational>().ok())
    }
}

impl MinorVector<IntPoly> {
    pub fn parse_text(text: &str) -> Result<Self, MinorError> {
        parse_lines(text, |v| parse_poly(v, ()).ok())
    }

    /// The vector of variables `A_I` (or `C_I`), with 1 at the empty set.
    pub fn symbolic(n: usize, universe: Universe) -> Self {
        MinorVector::from_fn(n, |s| {
            if s.is_empty() {
                IntPoly::one()
            } else if universe == Universe::C {
                IntPoly::var(Var::c(s))
            } else {
                IntPoly::var(Var::a(s))
            }
        })
    }
}

/// A set partition of a subset into nonempty blocks, sorted by minimum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SetPartition {
    pub blocks: Vec<SubsetIndex>,
}

/// All set partitions of `s`. The first element's block is chosen first,
/// then the remainder is partitioned recursively.
pub fn set_partitions(s: SubsetIndex) -> Vec<SetPartition> {
    if s.is_empty() {
        return vec![SetPartition { blocks: vec![] }];
    }
    let m = s.min_element().unwrap();
    let rest = s.remove(m);
    let mut out = Vec::new();
    for sub in rest.subsets() {
        let block = sub.insert(m);
        for mut p in set_partitions(rest.difference(sub)) {
            p.blocks.insert(0, block);
            out.push(p);
        }
    }
    out
}

fn factorial(k: usize) -> i64 {
    (1..=k as i64).product()
}

fn check_affine<T: Ring>(u: &MinorVector<T>) -> Result<(), MinorError> {
    if !u.get(SubsetIndex::from_elements([])).is_one() {
        return Err(MinorError::NotAffine);
    }
    Ok(())
}

/// Sum over set partitions with weight `w(k)` and sign `(-1)^(k+|I|)`.
fn partition_transform<T: Ring>(u: &MinorVector<T>, weight: fn(usize) -> i64) -> Result<MinorVector<T>, MinorError> {
    check_affine(u)?;
    let by_mask = u.by_mask();
    Ok(MinorVector::from_fn(u.n(), |s| {
        if s.is_empty() {
            return T::one();
        }
        let d = s.len();
        let mut acc = T::zero();
        for p in set_partitions(s) {
            let k = p.blocks.len();
            let mut t = T::from_i64(weight(k));
            for b in &p.blocks {
                t = t.times(&by_mask[b.mask() as usize]);
                if t.is_zero() {
                    break;
                }
            }
            acc = if (k + d) % 2 == 0 { acc.plus(&t) } else { acc.minus(&t) };
        }
        acc
    }))
}

/// `ψ`: principal minors to cycle-sums.
pub fn minors_to_cyclesums<T: Ring>(u: &MinorVector<T>) -> Result<MinorVector<T>, MinorError> {
    partition_transform(u, |k| factorial(k - 1))
}

/// Cycle-sums to principal minors, the inverse of [`minors_to_cyclesums`].
pub fn cyclesums_to_minors<T: Ring>(v: &MinorVector<T>) -> Result<MinorVector<T>, MinorError> {
    partition_transform(v, |_| 1)
}

/// `C_I` as a polynomial in the variables `A_J`.
pub fn cycle_sum_in_minors(s: SubsetIndex) -> IntPoly {
    let n = s.elements().last().copied().unwrap_or(0);
    let u = MinorVector::<IntPoly>::symbolic(n, Universe::A);
    minors_to_cyclesums(&u).unwrap().get(s).clone()
}

/// `P_I` as a polynomial in the variables `C_J`.
pub fn minor_in_cyclesums(s: SubsetIndex) -> IntPoly {
    let n = s.elements().last().copied().unwrap_or(0);
    let v = MinorVector::<IntPoly>::symbolic(n, Universe::C);
    cyclesums_to_minors(&v).unwrap().get(s).clone()
}

/// Division-free determinant by expansion over column subsets.
pub fn det<T: Ring>(m: &[Vec<T>]) -> Result<T, MinorError> {
    let k = m.len();
    if m.iter().any(|r| r.len() != k) {
        return Err(MinorError::NonSquare);
    }
    if k == 0 {
        return Ok(T::one());
    }
    let full = (1usize << k) - 1;
    let mut dp: Vec<T> = vec![T::zero(); 1 << k];
    dp[0] = T::one();
    let mut masks: Vec<usize> = (1..=full).collect();
    masks.sort_by_key(|x| x.count_ones());
    for mask in masks {
        let r = k - mask.count_ones() as usize;
        let mut acc = T::zero();
        let mut pos = 0;
        for c in 0..k {
            if mask & (1 << c) == 0 {
                continue;
            }
            if !m[r][c].is_zero() {
                let t = m[r][c].times(&dp[mask & !(1 << c)]);
                acc = if pos % 2 == 0 { acc.plus(&t) } else { acc.minus(&t) };
            }
            pos += 1;
        }
        dp[mask] = acc;
    }
    Ok(dp.swap_remove(full))
}

fn check_square<T>(a: &[Vec<T>], bound: usize) -> Result<usize, MinorError> {
    let n = a.len();
    if a.iter().any(|r| r.len() != n) {
        return Err(MinorError::NonSquare);
    }
    if n > bound {
        return Err(MinorError::TooLarge(n, bound));
    }
    Ok(n)
}

/// All principal minors `A_I = det A[I, I]`, with `A_∅ = 1`.
pub fn principal_minors<T: Ring>(a: &[Vec<T>]) -> Result<MinorVector<T>, MinorError> {
    let n = check_square(a, 8)?;
    Ok(MinorVector::from_fn(n, |s| {
        let idx: Vec<usize> = s.elements().into_iter().map(|i| i - 1).collect();
        let sub: Vec<Vec<T>> = idx.iter().map(|&i| idx.iter().map(|&j| a[i][j].clone()).collect()).collect();
        det(&sub).unwrap()
    }))
}

/// The generic `n × n` matrix of variables `x_ij`.
pub fn generic_matrix(n: usize) -> Matrix<IntPoly> {
    (1..=n).map(|i| (1..=n).map(|j| IntPoly::var(Var::x(i, j))).collect()).collect()
}

/// Symbolic principal minors `P_I(X)` of the generic matrix.
pub fn symbolic_principal_minors(n: usize) -> Result<MinorVector<IntPoly>, MinorError> {
    if n > 6 {
        return Err(MinorError::TooLarge(n, 6));
    }
    principal_minors(&generic_matrix(n))
}

/// Entry at `I`: the determinant of the matrix whose column `j` comes from
/// `A` when `j ∈ I` and from `B` otherwise.
pub fn projective_minor_map<T: Ring>(a: &[Vec<T>], b: &[Vec<T>]) -> Result<MinorVector<T>, MinorError> {
    let n = check_square(a, 8)?;
    let nb = check_square(b, 8)?;
    if n != nb {
        return Err(MinorError::SizeMismatch(n, nb));
    }
    Ok(MinorVector::from_fn(n, |s| {
        let m: Vec<Vec<T>> =
            (0..n).map(|i| (0..n).map(|j| if s.contains(j + 1) { a[i][j].clone() } else { b[i][j].clone() }).collect()).collect();
        det(&m).unwrap()
    }))
}

/// `C_I` as a polynomial in the matrix entries: the sum of the cycle
/// monomials with support `I`; `C_∅ = 1` and `C_i = x_ii`.
pub fn cycle_sum_poly(s: SubsetIndex) -> IntPoly {
    match s.len() {
        0 => IntPoly::one(),
        1 => {
            let i = s.min_element().unwrap();
            IntPoly::var(Var::x(i, i))
        }
        _ => {
            let terms = cycles_on(s).into_iter().map(|c| (c.monomial(), BigInt::one())).collect();
            IntPoly::from_terms(terms)
        }
    }
}

/// Cycle-sums `C_I(A)` evaluated directly from the matrix.
pub fn cycle_sums_of_matrix<T: Ring>(a: &[Vec<T>]) -> Result<MinorVector<T>, MinorError> {
    let n = check_square(a, 8)?;
    Ok(MinorVector::from_fn(n, |s| match s.len() {
        0 => T::one(),
        1 => {
            let i = s.min_element().unwrap() - 1;
            a[i][i].clone()
        }
        _ => cycles_on(s).iter().fold(T::zero(), |acc, c| acc.plus(&cycle_value(a, c.word()))),
    }))
}

fn cycle_value<T: Ring>(a: &[Vec<T>], word: &[u8]) -> T {
    let k = word.len();
    (0..k).fold(T::one(), |acc, t| acc.times(&a[word[t] as usize - 1][word[(t + 1) % k] as usize - 1]))
}

/// `γ`: the values of all cycle monomials of length at least 2, in
/// canonical cycle order.
pub fn cycle_monomial_map<T: Ring>(a: &[Vec<T>]) -> Result<Vec<T>, MinorError> {
    let n = check_square(a, 6)?;
    Ok(all_cycles(n).iter().map(|c| cycle_value(a, c.word())).collect())
}

fn q(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

fn rational_sqrt(x: &BigRational) -> Option<BigRational> {
    if x.is_negative() {
        return None;
    }
    let (n, d) = (x.numer(), x.denom());
    let (rn, rd) = (n.sqrt(), d.sqrt());
    (&rn * &rn == *n && &rd * &rd == *d).then(|| BigRational::new(rn, rd))
}

/// A `3 × 3` matrix with prescribed principal minors `u` (`u_∅ = 1`).
///
/// With `γ = ψ(u)`, the diagonal is `(u_1, u_2, u_3)` and the off-diagonal
/// products `a_ij a_ji` are the 2-cycle values `γ_ij`. When all three are
/// nonzero, the two 3-cycle monomials are the roots of
/// `z² - γ_123 z + γ_12 γ_13 γ_23`; entries then lie in `Q(√Δ)`. Every root
/// gives one matrix. When some `γ_ij` vanishes, the first such pair
/// (in the order 12, 13, 23) carries `a_ji = 0, a_ij = γ_123`, and a single
/// rational matrix is returned.
pub fn realize_3(u: &MinorVector<BigRational>) -> Result<Vec<Matrix<QuadExt>>, MinorError> {
    if u.n() != 3 {
        return Err(MinorError::SizeMismatch(u.n(), 3));
    }
    let g = minors_to_cyclesums(u)?;
    let at = |d: &str| g.get(SubsetIndex::parse_digits(d).unwrap()).clone();
    let (g12, g13, g23, s) = (at("12"), at("13"), at("23"), at("123"));
    let qe = |x: BigRational| QuadExt::rational(x);
    let mut base: Matrix<QuadExt> = vec![vec![QuadExt::zero(); 3]; 3];
    for i in 0..3 {
        base[i][i] = qe(u.get(SubsetIndex::singleton(i + 1)).clone());
    }
    let pairs = [((0, 1), g12.clone()), ((0, 2), g13.clone()), ((1, 2), g23.clone())];
    if let Some(((i, j), _)) = pairs.iter().find(|(_, v)| v.is_zero()) {
        let (i, j) = (*i, *j);
        let k = 3 - i - j;
        let mut m = base;
        m[i][j] = qe(s.clone());
        // edges j→k and k→i carry 1; partners carry the 2-cycle values
        let gamma = |a: usize, b: usize| pairs.iter().find(|p| p.0 == (a.min(b), a.max(b))).unwrap().1.clone();
        let set = |m: &mut Matrix<QuadExt>, a: usize, b: usize| {
            let gv = gamma(a, b);
            if s.is_zero() && gv.is_zero() {
                m[a][b] = QuadExt::zero();
                m[b][a] = QuadExt::zero();
            } else {
                m[a][b] = QuadExt::one();
                m[b][a] = qe(gv);
            }
        };
        set(&mut m, j, k);
        set(&mut m, k, i);
        return Ok(vec![m]);
    }
    let prod = &g12 * &g13 * &g23;
    let disc = &s * &s - q(4) * &prod;
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    let roots: Vec<QuadExt> = match rational_sqrt(&disc) {
        Some(r) => {
            let a = (&s + &r) * &half;
            let b = (&s - &r) * &half;
            if r.is_zero() {
                vec![qe(a)]
            } else {
                vec![qe(a), qe(b)]
            }
        }
        None => {
            let z = QuadExt::new(&s * &half, half.clone(), disc.clone());
            vec![z.clone(), z.conjugate()]
        }
    };
    let mut out = Vec::new();
    for z in roots {
        let mut m = base.clone();
        m[0][1] = QuadExt::one();
        m[1][0] = qe(g12.clone());
        m[1][2] = QuadExt::one();
        m[2][1] = qe(g23.clone());
        m[2][0] = z.clone();
        m[0][2] = qe(g13.clone()).div(&z).expect("nonzero root of a quadratic with nonzero constant term");
        out.push(m);
    }
    Ok(out)
}

/// Result of a realizability test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Realizability {
    pub realizable: bool,
    /// Indices of the generators that do not vanish.
    pub nonvanishing: Vec<usize>,
}

/// Tests `u` (with `n = 4`, `u_∅ = 1`) against a generator set. Variables
/// `A_I` take the value `u_I`; variables `C_I` take `ψ(u)_I`.
pub fn is_realizable_4(u: &MinorVector<BigRational>, generators: &[IntPoly]) -> Result<Realizability, MinorError> {
    if generators.is_empty() {
        return Err(MinorError::GeneratorsMissing);
    }
    if u.n() != 4 {
        return Err(MinorError::SizeMismatch(u.n(), 4));
    }
    let c = minors_to_cyclesums(u)?;
    let mut point: BTreeMap<Var, BigRational> = BTreeMap::new();
    for (s, v) in u.iter() {
        point.insert(Var::a(s), v.clone());
    }
    for (s, v) in c.iter() {
        point.insert(Var::c(s), v.clone());
    }
    let mut nonvanishing = Vec::new();
    for (k, g) in generators.iter().enumerate() {
        let val = g.evaluate_in(&point, |x| BigRational::from_integer(x.clone()))?;
        if !val.is_zero() {
            nonvanishing.push(k);
        }
    }
    Ok(Realizability { realizable: nonvanishing.is_empty(), nonvanishing })
}

/// Embeds a rational matrix.
pub fn to_quad(m: &[Vec<BigRational>]) -> Matrix<QuadExt> {
    m.iter().map(|r| r.iter().map(|x| QuadExt::rational(x.clone())).collect()).collect()
}

/// Converts an integer matrix.
pub fn rational_matrix(m: &[Vec<i64>]) -> Matrix<BigRational> {
    m.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::{avar, parse_int};
    use proptest::prelude::*;

    fn s(d: &str) -> SubsetIndex {
        SubsetIndex::parse_digits(d).unwrap()
    }

    #[test]
    fn two_by_two_minors() {
        let a = rational_matrix(&[vec![1, 2], vec![3, 4]]);
        let p = principal_minors(&a).unwrap();
        assert_eq!(p.values(), &[q(1), q(1), q(4), q(-2)]);
        let one = principal_minors(&rational_matrix(&[vec![7]])).unwrap();
        assert_eq!(one.values(), &[q(1), q(7)]);
    }

    #[test]
    fn symbolic_three_minor_terms() {
        let p = symbolic_principal_minors(3).unwrap();
        assert_eq!(p.get(s("123")).len(), 6);
    }

    #[test]
    fn cycle_sum_examples() {
        assert_eq!(cycle_sum_poly(s("12")), parse_int("x_{12}*x_{21}").unwrap());
        assert_eq!(cycle_sum_poly(s("123")), parse_int("x_{12}*x_{23}*x_{31} + x_{13}*x_{32}*x_{21}").unwrap());
        assert_eq!(cycle_sum_poly(s("1234")).len(), 6);
    }

    #[test]
    fn psi_examples() {
        assert_eq!(cycle_sum_in_minors(s("12")), parse_int("A_{1}*A_{2} - A_{12}").unwrap());
        assert_eq!(
            cycle_sum_in_minors(s("123")),
            parse_int("2*A_{1}*A_{2}*A_{3} - A_{12}*A_{3} - A_{13}*A_{2} - A_{23}*A_{1} + A_{123}").unwrap()
        );
        assert_eq!(cycle_sum_in_minors(s("1")), IntPoly::var(avar("1")));
        assert_eq!(minor_in_cyclesums(s("12")), parse_int("C_{1}*C_{2} - C_{12}").unwrap());
    }

    #[test]
    fn partitions_counted_by_bell_numbers() {
        let bell = [1, 1, 2, 5, 15, 52];
        for n in 0..=5 {
            assert_eq!(set_partitions(SubsetIndex::full(n)).len(), bell[n]);
        }
    }

    #[test]
    fn symbolic_round_trip_n4() {
        let a = MinorVector::<IntPoly>::symbolic(4, Universe::A);
        let back = cyclesums_to_minors(&minors_to_cyclesums(&a).unwrap()).unwrap();
        assert_eq!(back, a);
    }

    #[test]
    fn symbolic_cycle_sums_n3() {
        let p = symbolic_principal_minors(3).unwrap();
        let c = minors_to_cyclesums(&p).unwrap();
        for sub in SubsetIndex::all(3) {
            assert_eq!(c.get(sub), &cycle_sum_poly(sub), "{sub}");
        }
    }

    #[test]
    fn not_affine_rejected() {
        let u = MinorVector::from_values(1, vec![q(2), q(1)]).unwrap();
        assert_eq!(minors_to_cyclesums(&u), Err(MinorError::NotAffine));
    }

    #[test]
    fn gamma_length_and_zero_on_diagonal() {
        let d = rational_matrix(&[vec![1, 0, 0, 0], vec![0, 2, 0, 0], vec![0, 0, 3, 0], vec![0, 0, 0, 4]]);
        let g = cycle_monomial_map(&d).unwrap();
        assert_eq!(g.len(), 20);
        assert!(g.iter().all(|x| x.is_zero()));
    }

    #[test]
    fn realize_diagonal_when_no_cycles() {
        let u = MinorVector::from_fn(3, |t| q(t.elements().iter().map(|&i| i as i64 + 1).product::<i64>()));
        let ms = realize_3(&u).unwrap();
        assert_eq!(ms.len(), 1);
        for i in 0..3 {
            for j in 0..3 {
                if i != j {
                    assert!(ms[0][i][j].is_zero());
                }
            }
        }
    }

    #[test]
    fn realize_irrational_example() {
        let a = rational_matrix(&[vec![1, 2, 3], vec![4, 5, 6], vec![7, 8, 10]]);
        let u = principal_minors(&a).unwrap();
        let ms = realize_3(&u).unwrap();
        assert_eq!(ms.len(), 2);
        for m in ms {
            assert_eq!(principal_minors(&m).unwrap(), u.map(|x| QuadExt::rational(x.clone())));
        }
    }

    #[test]
    fn text_round_trip() {
        let a = rational_matrix(&[vec![1, 2], vec![3, 4]]);
        let p = principal_minors(&a).unwrap();
        let t = p.to_text();
        assert_eq!(t, "{}\t1\n1\t1\n2\t4\n12\t-2\n");
        assert_eq!(MinorVector::<BigRational>::parse_text(&t).unwrap(), p);
        let sym = MinorVector::<IntPoly>::symbolic(2, Universe::C);
        assert_eq!(MinorVector::<IntPoly>::parse_text(&sym.to_text()).unwrap(), sym);
    }

    fn small_matrix(n: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
        proptest::collection::vec(proptest::collection::vec(-4i64..=4, n), n)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]
        #[test]
        fn psi_matches_direct_cycle_sums(n in 1usize..=5, m in small_matrix(5)) {
            let a: Vec<Vec<i64>> = m.into_iter().take(n).map(|r| r.into_iter().take(n).collect()).collect();
            let a = rational_matrix(&a);
            let p = principal_minors(&a).unwrap();
            prop_assert_eq!(minors_to_cyclesums(&p).unwrap(), cycle_sums_of_matrix(&a).unwrap());
        }

        #[test]
        fn realize_round_trip(m in small_matrix(3)) {
            let u = principal_minors(&rational_matrix(&m)).unwrap();
            for r in realize_3(&u).unwrap() {
                prop_assert_eq!(principal_minors(&r).unwrap(), u.map(|x| QuadExt::rational(x.clone())));
            }
        }

        #[test]
        fn projective_with_identity(m in small_matrix(4)) {
            let a = rational_matrix(&m);
            let id: Vec<Vec<BigRational>> = (0..4).map(|i| (0..4).map(|j| q((i == j) as i64)).collect()).collect();
            prop_assert_eq!(projective_minor_map(&a, &id).unwrap(), principal_minors(&a).unwrap());
        }
    }
}
