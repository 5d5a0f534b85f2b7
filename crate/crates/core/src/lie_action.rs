//! The action of `gl_2^4` by differential operators on polynomials in the
//! 16 principal minors, the `S4` relabelling action, highest-weight
//! detection and closure of modules under both.
//!
//! The factor-`i` copy of `[[w, x], [y, z]]` acts as
//! `Σ_{I ∌ i} (w A_I ∂_I + x A_{I∪i} ∂_I + y A_I ∂_{I∪i} + z A_{I∪i} ∂_{I∪i})`.
//! Raising operators (strictly upper triangular) move weight up in
//! coordinate `i`.
//!
//! Module closures run modulo primes on packed degree-12 polynomials, one
//! echelon basis per `Z^4` weight.

use std::collections::{BTreeMap, VecDeque};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;
use rustc_hash::FxHashMap;
use serde::Serialize;
use thiserror::Error;

use crate::exactpoly::modular::{add_mod, inv_mod, mul_mod, reduce_bigint, sub_mod, DEFAULT_PRIME, SECOND_PRIME, SPARE_PRIMES};
use crate::exactpoly::{Homogeneity, IntPoly, Monomial, PolyError, RatPoly, Universe, Var};
use crate::subset::SubsetIndex;

#[derive(Debug, Error)]
pub enum LieError {
    #[error("polynomial has a variable outside the minor universe: {0}")]
    WrongUniverse(String),
    #[error("polynomial is not homogeneous")]
    Inhomogeneous,
    #[error("expected total degree {expected}, found {found}")]
    WrongDegree { expected: u32, found: u32 },
    #[error("module dimension {0} disagrees across primes ({1})")]
    PrimeDisagreement(usize, usize),
    #[error("summand dimensions sum to {found}, span has dimension {expected}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("closure exceeded {0} basis vectors")]
    Budget(usize),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// Relabels `[4]` by `sigma` (`sigma[i-1] = σ(i)`) in every indexed
/// variable, minors and cycle-sums alike.
pub fn apply_s4(f: &IntPoly, sigma: &[usize; 4]) -> IntPoly {
    f.rename(|v| match v.subset() {
        Some(s) if v == Var::a(s) => Var::a(s.permute(sigma)),
        Some(s) if v == Var::c(s) => Var::c(s.permute(sigma)),
        _ => v,
    })
}

/// One `2 × 2` rational matrix per tensor factor.
#[derive(Clone, Debug, PartialEq)]
pub struct LieElement {
    pub factors: [[[BigRational; 2]; 2]; 4],
}

impl LieElement {
    pub fn zero() -> Self {
        let z = || BigRational::zero();
        LieElement { factors: std::array::from_fn(|_| [[z(), z()], [z(), z()]]) }
    }

    /// `[[w, x], [y, z]]` at factor `i` (1-based), zero elsewhere.
    pub fn single(i: usize, w: i64, x: i64, y: i64, z: i64) -> Self {
        let mut h = Self::zero();
        let q = |n: i64| BigRational::from_integer(BigInt::from(n));
        h.factors[i - 1] = [[q(w), q(x)], [q(y), q(z)]];
        h
    }

    pub fn raising(i: usize) -> Self {
        Self::single(i, 0, 1, 0, 0)
    }

    pub fn lowering(i: usize) -> Self {
        Self::single(i, 0, 0, 1, 0)
    }

    pub fn is_raising(&self) -> bool {
        self.factors.iter().all(|m| m[0][0].is_zero() && m[1][0].is_zero() && m[1][1].is_zero())
    }

    pub fn is_lowering(&self) -> bool {
        self.factors.iter().all(|m| m[0][0].is_zero() && m[0][1].is_zero() && m[1][1].is_zero())
    }
}

fn check_minor_universe<K: crate::exactpoly::Coeff>(f: &crate::exactpoly::Poly<K>) -> Result<(), LieError> {
    match f.variables().into_iter().find(|v| v.universe() != Universe::A) {
        Some(v) => Err(LieError::WrongUniverse(v.to_string())),
        None => Ok(()),
    }
}

/// Image of `f` under `h`, by linearity over factors.
pub fn apply_lie(h: &LieElement, f: &RatPoly) -> Result<RatPoly, LieError> {
    check_minor_universe(f)?;
    let mut out = RatPoly::zero();
    for (k, m) in h.factors.iter().enumerate() {
        let i = k + 1;
        let [[w, x], [y, z]] = m;
        for s in SubsetIndex::all(4).into_iter().filter(|s| !s.contains(i)) {
            let (lo, hi) = (Var::a(s), Var::a(s.insert(i)));
            let d_lo = f.derivative(lo);
            let d_hi = f.derivative(hi);
            for (coef, var, d) in [(w, lo, &d_lo), (x, hi, &d_lo), (y, lo, &d_hi), (z, hi, &d_hi)] {
                if !coef.is_zero() && !d.is_zero() {
                    out = &out + &d.mul_term(&Monomial::var(var), coef);
                }
            }
        }
    }
    Ok(out)
}

/// Integer form of an elementary raising (`up = true`) or lowering
/// operator at factor `i`.
pub fn elementary(i: usize, up: bool, f: &IntPoly) -> Result<IntPoly, LieError> {
    check_minor_universe(f)?;
    let mut out = IntPoly::zero();
    for s in SubsetIndex::all(4).into_iter().filter(|s| !s.contains(i)) {
        let (lo, hi) = (Var::a(s), Var::a(s.insert(i)));
        let (from, to) = if up { (lo, hi) } else { (hi, lo) };
        let d = f.derivative(from);
        if !d.is_zero() {
            out = &out + &d.mul_term(&Monomial::var(to), &BigInt::one());
        }
    }
    Ok(out)
}

/// Whether all four elementary raising operators annihilate `f`.
pub fn is_highest_weight(f: &IntPoly) -> Result<bool, LieError> {
    check_minor_universe(f)?;
    if let Homogeneity::Inhomogeneous(..) = f.multidegree_of(4)? {
        return Err(LieError::Inhomogeneous);
    }
    for i in 1..=4 {
        if !elementary(i, true, f)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Sparse polynomial modulo `p` over packed monomials: exponent of `A_I` in
/// bits `4·mask(I) .. 4·mask(I)+4`. Terms sorted by decreasing key.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PackedPoly {
    pub terms: Vec<(u64, u64)>,
}

#[inline]
fn exponent(m: u64, mask: usize) -> u64 {
    (m >> (4 * mask)) & 0xf
}

impl PackedPoly {
    fn from_unsorted(mut terms: Vec<(u64, u64)>, p: u64) -> Self {
        terms.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        let mut out: Vec<(u64, u64)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some(last) if last.0 == m => last.1 = add_mod(last.1, c, p),
                _ => out.push((m, c)),
            }
        }
        out.retain(|t| t.1 != 0);
        PackedPoly { terms: out }
    }

    /// Packs a polynomial in the 16 minors; every exponent must be below 16.
    pub fn pack(f: &IntPoly, p: u64) -> Result<Self, LieError> {
        check_minor_universe(f)?;
        let terms = f
            .terms()
            .iter()
            .map(|(m, c)| {
                let key = m.factors().iter().fold(0u64, |k, &(v, e)| {
                    let mask = v.subset().expect("minor variable").mask() as usize;
                    assert!(e < 16, "exponent too large to pack");
                    k | ((e as u64) << (4 * mask))
                });
                (key, reduce_bigint(c, p))
            })
            .collect();
        Ok(Self::from_unsorted(terms, p))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// `Z^4` weight of the leading term.
    pub fn weight(&self) -> Option<[u32; 4]> {
        self.terms.first().map(|&(m, _)| packed_weight(m))
    }

    fn coefficient(&self, m: u64) -> u64 {
        match self.terms.binary_search_by(|t| m.cmp(&t.0)) {
            Ok(i) => self.terms[i].1,
            Err(_) => 0,
        }
    }

    /// `self - c · o`.
    fn sub_scaled(&self, c: u64, o: &PackedPoly, p: u64) -> PackedPoly {
        let (a, b) = (&self.terms, &o.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() || j < b.len() {
            if j == b.len() || (i < a.len() && a[i].0 > b[j].0) {
                out.push(a[i]);
                i += 1;
            } else if i == a.len() || b[j].0 > a[i].0 {
                out.push((b[j].0, sub_mod(0, mul_mod(c, b[j].1, p), p)));
                j += 1;
            } else {
                let v = sub_mod(a[i].1, mul_mod(c, b[j].1, p), p);
                if v != 0 {
                    out.push((a[i].0, v));
                }
                i += 1;
                j += 1;
            }
        }
        PackedPoly { terms: out }
    }

    fn scale(&self, c: u64, p: u64) -> PackedPoly {
        PackedPoly { terms: self.terms.iter().map(|&(m, x)| (m, mul_mod(x, c, p))).collect() }
    }

    /// Elementary raising or lowering operator at factor `i`.
    pub fn elementary(&self, i: usize, up: bool, p: u64) -> PackedPoly {
        let bit = 1usize << (i - 1);
        let mut out = Vec::with_capacity(self.terms.len() * 4);
        for &(m, c) in &self.terms {
            for lo in (0..16usize).filter(|s| s & bit == 0) {
                let hi = lo | bit;
                let (from, to) = if up { (lo, hi) } else { (hi, lo) };
                let e = exponent(m, from);
                if e > 0 {
                    let nm = m - (1u64 << (4 * from)) + (1u64 << (4 * to));
                    out.push((nm, mul_mod(c, e, p)));
                }
            }
        }
        Self::from_unsorted(out, p)
    }

    /// Relabelling by a permutation of `[4]`.
    pub fn permute(&self, sigma: &[usize; 4], p: u64) -> PackedPoly {
        let map: Vec<usize> = (0..16u8).map(|s| SubsetIndex(s).permute(sigma).mask() as usize).collect();
        let terms = self
            .terms
            .iter()
            .map(|&(m, c)| ((0..16).fold(0u64, |k, s| k | (exponent(m, s) << (4 * map[s]))), c))
            .collect();
        Self::from_unsorted(terms, p)
    }
}

fn packed_weight(m: u64) -> [u32; 4] {
    let mut w = [0u32; 4];
    for s in 1..16usize {
        let e = exponent(m, s) as u32;
        if e > 0 {
            for (i, wi) in w.iter_mut().enumerate() {
                if s & (1 << i) != 0 {
                    *wi += e;
                }
            }
        }
    }
    w
}

/// Reduced echelon form of sparse vectors, pivoting on the leading key.
#[derive(Clone, Debug, Default)]
pub struct SparseEchelon {
    rows: Vec<PackedPoly>,
}

impl SparseEchelon {
    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn reduce(&self, v: &PackedPoly, p: u64) -> PackedPoly {
        let mut v = v.clone();
        for r in &self.rows {
            let c = v.coefficient(r.terms[0].0);
            if c != 0 {
                v = v.sub_scaled(c, r, p);
            }
        }
        v
    }

    /// Inserts `v`; returns the normalized reduced vector if it was new.
    pub fn insert(&mut self, v: &PackedPoly, p: u64) -> Option<PackedPoly> {
        let v = self.reduce(v, p);
        let lead = v.terms.first()?.1;
        let v = v.scale(inv_mod(lead, p).unwrap(), p);
        let pm = v.terms[0].0;
        for r in self.rows.iter_mut() {
            let c = r.coefficient(pm);
            if c != 0 {
                *r = r.sub_scaled(c, &v, p);
            }
        }
        self.rows.push(v.clone());
        Some(v)
    }

    pub fn rows(&self) -> &[PackedPoly] {
        &self.rows
    }
}

/// A span of weight vectors modulo one prime, one echelon basis per weight.
#[derive(Clone, Debug)]
pub struct WeightSpan {
    pub prime: u64,
    /// Total degree of every member.
    pub degree: u32,
    pub blocks: BTreeMap<[u32; 4], SparseEchelon>,
}

impl WeightSpan {
    pub fn new(prime: u64, degree: u32) -> Self {
        WeightSpan { prime, degree, blocks: BTreeMap::new() }
    }

    pub fn dimension(&self) -> usize {
        self.blocks.values().map(|b| b.rank()).sum()
    }

    /// Splits `v` into weight components and inserts each; returns the new
    /// normalized vectors.
    pub fn insert(&mut self, v: &PackedPoly) -> Vec<PackedPoly> {
        let p = self.prime;
        let mut parts: FxHashMap<[u32; 4], Vec<(u64, u64)>> = FxHashMap::default();
        for &t in &v.terms {
            parts.entry(packed_weight(t.0)).or_default().push(t);
        }
        let mut keys: Vec<[u32; 4]> = parts.keys().copied().collect();
        keys.sort();
        keys.into_iter()
            .filter_map(|w| {
                let part = PackedPoly { terms: parts.remove(&w).unwrap() };
                self.blocks.entry(w).or_default().insert(&part, p)
            })
            .collect()
    }

    /// Whether `v` lies in the span.
    pub fn contains(&self, v: &PackedPoly) -> bool {
        let mut parts: FxHashMap<[u32; 4], Vec<(u64, u64)>> = FxHashMap::default();
        for &t in &v.terms {
            parts.entry(packed_weight(t.0)).or_default().push(t);
        }
        parts.into_iter().all(|(w, terms)| match self.blocks.get(&w) {
            Some(b) => b.reduce(&PackedPoly { terms }, self.prime).is_zero(),
            None => false,
        })
    }

    /// Rank of the union with `other` (same prime).
    pub fn joint_rank(&self, other: &WeightSpan) -> usize {
        let mut s = self.clone();
        for b in other.blocks.values() {
            for r in b.rows() {
                s.insert(r);
            }
        }
        s.dimension()
    }
}

/// Transpositions `(12)`, `(23)`, `(34)`.
pub const TRANSPOSITIONS: [[usize; 4]; 3] = [[2, 1, 3, 4], [1, 3, 2, 4], [1, 2, 4, 3]];

/// Closes the span of `seeds` under the eight elementary operators and the
/// adjacent transpositions, modulo `p`.
pub fn close_module(seeds: &[PackedPoly], degree: u32, p: u64, budget: usize) -> Result<WeightSpan, LieError> {
    let mut span = WeightSpan::new(p, degree);
    let mut queue: VecDeque<PackedPoly> = VecDeque::new();
    for s in seeds {
        queue.extend(span.insert(s));
    }
    while let Some(v) = queue.pop_front() {
        let images: Vec<PackedPoly> = (0..11usize)
            .into_par_iter()
            .map(|k| match k {
                0..=7 => v.elementary(k / 2 + 1, k % 2 == 0, p),
                _ => v.permute(&TRANSPOSITIONS[k - 8], p),
            })
            .collect();
        for img in images {
            if !img.is_zero() {
                queue.extend(span.insert(&img));
            }
        }
        if span.dimension() > budget {
            return Err(LieError::Budget(budget));
        }
    }
    Ok(span)
}

/// Module spans modulo two primes.
#[derive(Clone, Debug)]
pub struct SpanBasis {
    pub spans: Vec<WeightSpan>,
}

impl SpanBasis {
    pub fn dimension(&self) -> usize {
        self.spans[0].dimension()
    }
}

/// Default ceiling on closure dimension.
pub const CLOSURE_BUDGET: usize = 5000;

/// Checks that `f` is a homogeneous polynomial of the given total degree
/// in the minors.
pub fn check_degree(f: &IntPoly, degree: u32) -> Result<(), LieError> {
    check_minor_universe(f)?;
    for (m, _) in f.terms() {
        if m.total_degree() != degree {
            return Err(LieError::WrongDegree { expected: degree, found: m.total_degree() });
        }
    }
    Ok(())
}

/// Dimension of the module generated by degree-12 `seeds`, agreed by two
/// primes.
pub fn module_closure(seeds: &[IntPoly]) -> Result<SpanBasis, LieError> {
    module_closure_in_degree(seeds, 12)
}

/// [`module_closure`] in any degree. If the two primes disagree the spare
/// primes are tried.
pub fn module_closure_in_degree(seeds: &[IntPoly], degree: u32) -> Result<SpanBasis, LieError> {
    for f in seeds {
        check_degree(f, degree)?;
    }
    let primes = [DEFAULT_PRIME, SECOND_PRIME, SPARE_PRIMES[0], SPARE_PRIMES[1]];
    let close = |p: u64| -> Result<WeightSpan, LieError> {
        let packed: Vec<PackedPoly> = seeds.iter().map(|f| PackedPoly::pack(f, p)).collect::<Result<_, _>>()?;
        close_module(&packed, degree, p, CLOSURE_BUDGET)
    };
    let (a, b) = rayon::join(|| close(primes[0]), || close(primes[1]));
    let (a, b) = (a?, b?);
    if a.dimension() == b.dimension() {
        return Ok(SpanBasis { spans: vec![a, b] });
    }
    let c = close(primes[2])?;
    let d = close(primes[3])?;
    if c.dimension() == d.dimension() {
        return Ok(SpanBasis { spans: vec![c, d] });
    }
    Err(LieError::PrimeDisagreement(a.dimension(), b.dimension()))
}

/// One irreducible summand `S_{label}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Summand {
    /// Weight of the summand's lowest vector, that is `d - m` in degree
    /// `d` for the weight `m` of the vector killed by raising.
    pub weight: [u32; 4],
    pub dim: usize,
}

/// `Π (d + 1 - 2 λ_i)`; in degree 12 this is `Π (13 - 2 λ_i)`.
pub fn summand_dimension(label: &[u32; 4], degree: u32) -> usize {
    label.iter().map(|&l| (degree as usize + 1).saturating_sub(2 * l as usize)).product()
}

/// Decomposes a closed span by counting, in each weight, the vectors
/// killed by all four raising operators.
pub fn decompose_span(span: &WeightSpan) -> Result<Vec<Summand>, LieError> {
    let p = span.prime;
    let mut out = Vec::new();
    for (w, block) in &span.blocks {
        // images under the four raising operators have disjoint weights,
        // so their sum determines each
        let mut img = SparseEchelon::default();
        for r in block.rows() {
            let mut sum = PackedPoly { terms: Vec::new() };
            for i in 1..=4 {
                let e = r.elementary(i, true, p);
                let mut t = sum.terms;
                t.extend(e.terms);
                sum = PackedPoly::from_unsorted(t, p);
            }
            img.insert(&sum, p);
        }
        let kernel = block.rank() - img.rank();
        let d = span.degree;
        let label = [d - w[0], d - w[1], d - w[2], d - w[3]];
        for _ in 0..kernel {
            out.push(Summand { weight: label, dim: summand_dimension(&label, d) });
        }
    }
    out.sort_by_key(|s| s.weight);
    let total: usize = out.iter().map(|s| s.dim).sum();
    if total != span.dimension() {
        return Err(LieError::DimensionMismatch { expected: span.dimension(), found: total });
    }
    Ok(out)
}

/// Decomposition agreed by both primes.
pub fn decompose_module(basis: &SpanBasis) -> Result<Vec<Summand>, LieError> {
    let a = decompose_span(&basis.spans[0])?;
    for s in &basis.spans[1..] {
        if decompose_span(s)? != a {
            return Err(LieError::PrimeDisagreement(basis.spans[0].dimension(), s.dimension()));
        }
    }
    Ok(a)
}

/// Serializable module summary.
#[derive(Clone, Debug, Serialize)]
pub struct ModuleReport {
    pub seed_id: u32,
    pub dimension: usize,
    pub summands: Vec<Summand>,
}

impl ModuleReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

/// Closes and decomposes the module of one seed.
pub fn module_report(seed_id: u32, seed: &IntPoly) -> Result<(ModuleReport, SpanBasis), LieError> {
    let basis = module_closure(std::slice::from_ref(seed))?;
    let summands = decompose_module(&basis)?;
    Ok((ModuleReport { seed_id, dimension: basis.dimension(), summands }, basis))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::parse_int;
    use proptest::prelude::*;

    fn a(d: &str) -> IntPoly {
        parse_int(&format!("A_{{{d}}}")).unwrap()
    }

    #[test]
    fn raising_empty_set() {
        let f = a("").to_rational();
        let g = apply_lie(&LieElement::raising(1), &f).unwrap();
        assert_eq!(g, a("1").to_rational());
    }

    #[test]
    fn diagonal_is_degree() {
        let f = parse_int("A_{}^3*A_{12}^5*A_{3}^4 - 7*A_{1234}^12").unwrap().to_rational();
        for i in 1..=4 {
            let g = apply_lie(&LieElement::single(i, 1, 0, 0, 1), &f).unwrap();
            assert_eq!(g, f.scale(&BigRational::from_integer(12.into())));
        }
    }

    #[test]
    fn commutator_on_a1() {
        let f = a("1");
        let lowered = elementary(1, false, &f).unwrap();
        assert_eq!(lowered, a(""));
        assert_eq!(elementary(1, true, &lowered).unwrap(), f);
    }

    #[test]
    fn s4_examples() {
        assert_eq!(apply_s4(&a("134"), &[2, 1, 3, 4]), a("234"));
        for s in crate::relation_miner::s4() {
            assert_eq!(apply_s4(&a(""), &s), a(""));
            assert_eq!(apply_s4(&a("1234"), &s), a("1234"));
        }
    }

    #[test]
    fn highest_weight_examples() {
        assert!(!is_highest_weight(&a("").pow(12)).unwrap());
        assert!(is_highest_weight(&IntPoly::from_i64(5)).unwrap());
        assert!(is_highest_weight(&a("1234").pow(3)).unwrap());
        assert!(is_highest_weight(&parse_int("A_{1} + A_{12}").unwrap()).is_err());
    }

    #[test]
    fn wrong_universe() {
        let f = parse_int("C_{12}").unwrap();
        assert!(elementary(1, true, &f).is_err());
    }

    #[test]
    fn packed_matches_exact() {
        let f = parse_int("3*A_{}^2*A_{13}*A_{4} - A_{1}*A_{23}*A_{124}*A_{}").unwrap();
        let p = DEFAULT_PRIME;
        for i in 1..=4 {
            for up in [true, false] {
                let exact = PackedPoly::pack(&elementary(i, up, &f).unwrap(), p).unwrap();
                assert_eq!(PackedPoly::pack(&f, p).unwrap().elementary(i, up, p), exact);
            }
        }
        let s = [3, 1, 4, 2];
        assert_eq!(PackedPoly::pack(&f, p).unwrap().permute(&s, p), PackedPoly::pack(&apply_s4(&f, &s), p).unwrap());
    }

    #[test]
    fn power_of_empty_generates_symmetric_power() {
        let basis = module_closure_in_degree(&[a("").pow(3)], 3).unwrap();
        assert_eq!(basis.dimension(), 4usize.pow(4));
        let d = decompose_module(&basis).unwrap();
        assert_eq!(d, vec![Summand { weight: [0, 0, 0, 0], dim: 256 }]);
        assert!(module_closure(&[a("").pow(3)]).is_err());
    }

    #[test]
    fn quadrics_decompose() {
        // degree 2: Sym^2 of (C^2)^{⊗4} splits by the parity of the number of
        // antisymmetric factors
        let basis = module_closure_in_degree(&[a("").pow(2), &a("") * &a("1234") - &a("1") * &a("234")], 2).unwrap();
        let d = decompose_module(&basis).unwrap();
        let total: usize = d.iter().map(|s| s.dim).sum();
        assert_eq!(total, basis.dimension());
        assert_eq!(basis.dimension(), 136);
    }

    fn small_poly() -> impl Strategy<Value = IntPoly> {
        proptest::collection::vec((0u8..16, 0u8..16, -3i64..=3), 1..4).prop_map(|ts| {
            IntPoly::from_terms(
                ts.into_iter()
                    .map(|(s, t, c)| {
                        let m = Monomial::var(Var::a(SubsetIndex(s))).mul(&Monomial::var(Var::a(SubsetIndex(t))));
                        (m, BigInt::from(c))
                    })
                    .collect(),
            )
        })
    }

    proptest! {
        #[test]
        fn lie_is_derivation(f in small_poly(), g in small_poly(), i in 1usize..=4, k in 0usize..4) {
            let h = match k { 0 => LieElement::raising(i), 1 => LieElement::lowering(i), 2 => LieElement::single(i, 1, 0, 0, 0), _ => LieElement::single(i, 2, -1, 3, 1) };
            let (fr, gr) = (f.to_rational(), g.to_rational());
            let lhs = apply_lie(&h, &(&fr * &gr)).unwrap();
            let rhs = &(&apply_lie(&h, &fr).unwrap() * &gr) + &(&fr * &apply_lie(&h, &gr).unwrap());
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn raising_shifts_weight(s in 0u8..16, t in 0u8..16, i in 1usize..=4) {
            let m = Monomial::var(Var::a(SubsetIndex(s))).mul(&Monomial::var(Var::a(SubsetIndex(t))));
            let f = IntPoly::from_terms(vec![(m, BigInt::one())]);
            let w = match f.multidegree_of(4).unwrap() { Homogeneity::Homogeneous(w) => w, _ => unreachable!() };
            for (up, delta) in [(true, 1i64), (false, -1)] {
                let g = elementary(i, up, &f).unwrap();
                if let Ok(Homogeneity::Homogeneous(v)) = g.multidegree_of(4) {
                    if !g.is_zero() {
                        for k in 0..4 {
                            let expect = w[k] as i64 + if k + 1 == i { delta } else { 0 };
                            prop_assert_eq!(v[k] as i64, expect);
                        }
                    }
                }
            }
        }
    }
}
