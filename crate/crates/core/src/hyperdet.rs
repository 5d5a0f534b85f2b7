//! Node singularities of the multilinear form `det(c + diag(x, y, z, w))`.
//!
//! Contains a small lexicographic Buchberger engine, the ideal of `3 × 3`
//! minors of the shifted matrix, an exact two-point check over `Q(√Δ)`,
//! and Schläfli's expansion of the `2×2×2×2` hyperdeterminant.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use rustc_hash::FxHashMap;
use serde::Serialize;
use thiserror::Error;

use crate::exactpoly::coeff::Ring;
use crate::exactpoly::{IntPoly, Monomial, Named, PolyError, QuadExt, RatPoly, Var};
use crate::minor_maps::{det, principal_minors, rational_matrix, MinorError};
use crate::subset::SubsetIndex;

#[derive(Debug, Error)]
pub enum HyperdetError {
    #[error("Buchberger exceeded {0} S-pair reductions")]
    IterationCap(usize),
    #[error("at most {max} variables supported, got {got}")]
    TooManyVariables { max: usize, got: usize },
    #[error("polynomial uses variable {0} outside the ring")]
    ForeignVariable(String),
    #[error("coefficient overflow during expansion")]
    Overflow,
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Minor(#[from] MinorError),
}

/// Maximum number of ring variables.
pub const MAX_VARS: usize = 5;
/// Default cap on S-pair reductions.
pub const ITERATION_CAP: usize = 5000;

type Exps = [u16; MAX_VARS];

/// Polynomial in lex order, terms sorted by decreasing exponent array.
#[derive(Clone, Debug, PartialEq)]
struct LexPoly {
    terms: Vec<(Exps, BigRational)>,
    sugar: u32,
}

fn deg(e: &Exps) -> u32 {
    e.iter().map(|&x| x as u32).sum()
}

fn divides(a: &Exps, b: &Exps) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn lcm(a: &Exps, b: &Exps) -> Exps {
    std::array::from_fn(|i| a[i].max(b[i]))
}

fn sub_exps(a: &Exps, b: &Exps) -> Exps {
    std::array::from_fn(|i| a[i] - b[i])
}

impl LexPoly {
    fn from_map(map: BTreeMap<Exps, BigRational>, sugar: u32) -> Self {
        let terms = map.into_iter().rev().filter(|(_, c)| !c.is_zero()).collect();
        LexPoly { terms, sugar }
    }

    fn lead(&self) -> Option<&(Exps, BigRational)> {
        self.terms.first()
    }

    fn monic(mut self) -> Self {
        if let Some((_, c)) = self.terms.first() {
            let inv = c.recip();
            for t in self.terms.iter_mut() {
                t.1 = &t.1 * &inv;
            }
        }
        self
    }

    /// `self - c · x^m · g`.
    fn sub_shifted(&self, c: &BigRational, m: &Exps, g: &LexPoly) -> LexPoly {
        let mut map: BTreeMap<Exps, BigRational> = self.terms.iter().cloned().collect();
        for (e, gc) in &g.terms {
            let k: Exps = std::array::from_fn(|i| e[i] + m[i]);
            let v = map.entry(k).or_insert_with(BigRational::zero);
            *v -= c * gc;
        }
        LexPoly::from_map(map, self.sugar.max(g.sugar + deg(m)))
    }

    /// Full reduction modulo `basis`.
    fn normal_form(&self, basis: &[LexPoly]) -> LexPoly {
        let mut f = self.clone();
        let mut done: Vec<(Exps, BigRational)> = Vec::new();
        while let Some((e, c)) = f.terms.first().cloned() {
            match basis.iter().find(|g| divides(&g.lead().unwrap().0, &e)) {
                Some(g) => {
                    let (ge, gc) = g.lead().unwrap();
                    f = f.sub_shifted(&(&c / gc), &sub_exps(&e, ge), g);
                }
                None => {
                    done.push((e, c));
                    f.terms.remove(0);
                }
            }
        }
        LexPoly { terms: done, sugar: f.sugar }
    }

    fn s_poly(&self, o: &LexPoly) -> LexPoly {
        let (a, ac) = self.lead().unwrap();
        let (b, bc) = o.lead().unwrap();
        let l = lcm(a, b);
        let left = LexPoly { terms: Vec::new(), sugar: 0 }.sub_shifted(&-(ac.recip()), &sub_exps(&l, a), self);
        left.sub_shifted(&bc.recip(), &sub_exps(&l, b), o)
    }
}

/// A reduced lex Gröbner basis.
#[derive(Clone, Debug)]
pub struct GbIdeal {
    /// Ring variables from largest to smallest.
    pub vars: Vec<Var>,
    basis: Vec<LexPoly>,
    /// S-pair reductions performed.
    pub reductions: usize,
}

fn to_lex(f: &RatPoly, vars: &[Var]) -> Result<LexPoly, HyperdetError> {
    let mut map = BTreeMap::new();
    for (m, c) in f.terms() {
        let mut e = [0u16; MAX_VARS];
        for &(v, x) in m.factors() {
            let k = vars.iter().position(|&u| u == v).ok_or_else(|| HyperdetError::ForeignVariable(v.to_string()))?;
            e[k] = x;
        }
        map.insert(e, c.clone());
    }
    let sugar = map.keys().map(deg).max().unwrap_or(0);
    Ok(LexPoly::from_map(map, sugar))
}

fn exps_monomial(e: &Exps, vars: &[Var]) -> Monomial {
    Monomial::from_pairs(vars.iter().zip(e).filter(|(_, &x)| x > 0).map(|(&v, &x)| (v, x)))
}

fn from_lex(f: &LexPoly, vars: &[Var]) -> RatPoly {
    RatPoly::from_terms(f.terms.iter().map(|(e, c)| (exps_monomial(e, vars), c.clone())).collect())
}

/// Reduced Gröbner basis in lex order with `vars[0] > vars[1] > ...`,
/// pairs chosen by lowest sugar.
pub fn buchberger_lex(gens: &[RatPoly], vars: &[Var]) -> Result<GbIdeal, HyperdetError> {
    buchberger_lex_capped(gens, vars, ITERATION_CAP)
}

pub fn buchberger_lex_capped(gens: &[RatPoly], vars: &[Var], cap: usize) -> Result<GbIdeal, HyperdetError> {
    if vars.len() > MAX_VARS {
        return Err(HyperdetError::TooManyVariables { max: MAX_VARS, got: vars.len() });
    }
    let mut g: Vec<LexPoly> = Vec::new();
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    let add = |g: &mut Vec<LexPoly>, pairs: &mut Vec<(usize, usize)>, f: LexPoly| {
        let k = g.len();
        for i in 0..k {
            pairs.push((i, k));
        }
        g.push(f.monic());
    };
    for f in gens {
        let f = to_lex(f, vars)?.normal_form(&g);
        if !f.terms.is_empty() {
            add(&mut g, &mut pairs, f);
        }
    }
    let mut reductions = 0;
    while !pairs.is_empty() {
        let pair_key = |&(i, j): &(usize, usize)| {
            let (a, b) = (&g[i].lead().unwrap().0, &g[j].lead().unwrap().0);
            let l = lcm(a, b);
            let s = (g[i].sugar + deg(&l) - deg(a)).max(g[j].sugar + deg(&l) - deg(b));
            (s, std::cmp::Reverse(l))
        };
        let best = (0..pairs.len()).min_by_key(|&k| pair_key(&pairs[k])).unwrap();
        let (i, j) = pairs.swap_remove(best);
        let (a, b) = (g[i].lead().unwrap().0, g[j].lead().unwrap().0);
        // coprime leading monomials: the S-polynomial reduces to zero
        if a.iter().zip(&b).all(|(x, y)| *x == 0 || *y == 0) {
            continue;
        }
        reductions += 1;
        if reductions > cap {
            return Err(HyperdetError::IterationCap(cap));
        }
        let s = g[i].s_poly(&g[j]).normal_form(&g);
        if !s.terms.is_empty() {
            add(&mut g, &mut pairs, s);
        }
    }
    // minimize and interreduce
    let mut minimal: Vec<LexPoly> = Vec::new();
    for (k, f) in g.iter().enumerate() {
        let e = f.lead().unwrap().0;
        let redundant = g.iter().enumerate().any(|(l, h)| {
            let he = h.lead().unwrap().0;
            l != k && divides(&he, &e) && (he != e || l < k)
        });
        if !redundant {
            minimal.push(f.clone());
        }
    }
    let mut reduced = Vec::new();
    for k in 0..minimal.len() {
        let others: Vec<LexPoly> = minimal.iter().enumerate().filter(|(l, _)| *l != k).map(|(_, h)| h.clone()).collect();
        let (e, c) = minimal[k].lead().unwrap().clone();
        let tail = LexPoly { terms: minimal[k].terms[1..].to_vec(), sugar: minimal[k].sugar }.normal_form(&others);
        let mut terms = vec![(e, c)];
        terms.extend(tail.terms);
        reduced.push(LexPoly { terms, sugar: minimal[k].sugar }.monic());
    }
    reduced.sort_by(|x, y| y.lead().unwrap().0.cmp(&x.lead().unwrap().0));
    Ok(GbIdeal { vars: vars.to_vec(), basis: reduced, reductions })
}

impl GbIdeal {
    pub fn basis(&self) -> Vec<RatPoly> {
        self.basis.iter().map(|f| from_lex(f, &self.vars)).collect()
    }

    /// Leading monomials of the reduced basis, largest first.
    pub fn initial_ideal(&self) -> Vec<Monomial> {
        self.basis.iter().map(|f| exps_monomial(&f.lead().unwrap().0, &self.vars)).collect()
    }

    pub fn normal_form(&self, f: &RatPoly) -> Result<RatPoly, HyperdetError> {
        Ok(from_lex(&to_lex(f, &self.vars)?.normal_form(&self.basis), &self.vars))
    }

    /// Every S-polynomial reduces to zero.
    pub fn is_groebner(&self) -> bool {
        (0..self.basis.len()).all(|i| {
            (i + 1..self.basis.len()).all(|j| self.basis[i].s_poly(&self.basis[j]).normal_form(&self.basis).terms.is_empty())
        })
    }
}

/// `x, y, z, w`.
pub fn node_vars() -> [Var; 4] {
    [Var::named(Named::X), Var::named(Named::Y), Var::named(Named::Z), Var::named(Named::W)]
}

/// `c + diag(x, y, z, w)`.
pub fn shifted_matrix(c: &[Vec<BigRational>]) -> Vec<Vec<RatPoly>> {
    let v = node_vars();
    (0..4)
        .map(|i| {
            (0..4)
                .map(|j| {
                    let k = RatPoly::constant(c[i][j].clone());
                    if i == j {
                        &k + &RatPoly::var(v[i])
                    } else {
                        k
                    }
                })
                .collect()
        })
        .collect()
}

/// All sixteen `3 × 3` minors of the shifted matrix.
pub fn shifted_matrix_ideal(c: &[Vec<BigRational>]) -> Result<Vec<RatPoly>, HyperdetError> {
    let m = shifted_matrix(c);
    let mut out = Vec::new();
    for skip_r in 0..4 {
        for skip_c in 0..4 {
            let sub: Vec<Vec<RatPoly>> = (0..4)
                .filter(|&i| i != skip_r)
                .map(|i| (0..4).filter(|&j| j != skip_c).map(|j| m[i][j].clone()).collect())
                .collect();
            out.push(det(&sub)?);
        }
    }
    Ok(out)
}

/// `F = det(c + diag(x, y, z, w))`.
pub fn multilinear_form(c: &[Vec<BigRational>]) -> Result<RatPoly, HyperdetError> {
    Ok(det(&shifted_matrix(c))?)
}

/// Whether the coefficient of `Π_{i ∈ S} t_i` in `F` is the principal minor
/// of `c` on the complement of `S`, for every `S`.
pub fn coefficients_are_minors(c: &[Vec<BigRational>]) -> Result<bool, HyperdetError> {
    let f = multilinear_form(c)?;
    let minors = principal_minors(c)?;
    let v = node_vars();
    let full = SubsetIndex::full(4);
    Ok(SubsetIndex::all(4).into_iter().all(|s| {
        let m = Monomial::from_pairs(s.elements().into_iter().map(|i| (v[i - 1], 1)));
        f.coefficient(&m) == *minors.get(full.difference(s))
    }) && f.len() <= 16)
}

fn rational_sqrt(q: &BigRational) -> Option<BigRational> {
    if q.is_negative() {
        return None;
    }
    let (n, d) = (q.numer().sqrt(), q.denom().sqrt());
    (&n * &n == *q.numer() && &d * &d == *q.denom()).then(|| BigRational::new(n, d))
}

/// Outcome of one node check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum NodeStatus {
    #[serde(rename = "pass")]
    Pass,
    #[serde(rename = "nongeneric sample")]
    Nongeneric,
    #[serde(rename = "fail")]
    Fail,
}

#[derive(Clone, Debug, Serialize)]
pub struct NodeReport {
    pub matrix: Vec<Vec<String>>,
    pub status: NodeStatus,
    pub initial_ideal: Vec<String>,
    pub eliminant: String,
    pub discriminant: String,
    pub points: Vec<Vec<String>>,
    pub checks: BTreeMap<String, bool>,
}

impl NodeReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

/// Gröbner basis, eliminant and exact verification that the two singular
/// points of `F` exist and differ in every coordinate.
pub fn node_membership_check(c: &[Vec<BigRational>]) -> Result<NodeReport, HyperdetError> {
    let vars = node_vars();
    let gb = buchberger_lex(&shifted_matrix_ideal(c)?, &vars)?;
    let basis = gb.basis();
    let init: Vec<Monomial> = gb.initial_ideal();
    let expected: Vec<Monomial> = vec![
        Monomial::var(vars[0]),
        Monomial::var(vars[1]),
        Monomial::var(vars[2]),
        Monomial::var_pow(vars[3], 2),
    ];
    let mut report = NodeReport {
        matrix: c.iter().map(|r| r.iter().map(|x| x.to_string()).collect()).collect(),
        status: NodeStatus::Nongeneric,
        initial_ideal: init.iter().map(|m| m.to_string()).collect(),
        eliminant: String::new(),
        discriminant: String::new(),
        points: Vec::new(),
        checks: BTreeMap::new(),
    };
    report.checks.insert("groebner".into(), gb.is_groebner());
    report.checks.insert("coefficients_are_minors".into(), coefficients_are_minors(c)?);
    if init != expected {
        return Ok(report);
    }
    let q = &basis[3];
    report.eliminant = q.to_string();
    let coef = |e: u16| q.coefficient(&Monomial::var_pow(vars[3], e));
    let (a, b, cc) = (coef(2), coef(1), q.coefficient(&Monomial::one()));
    let disc = &b * &b - BigRational::from_integer(4.into()) * &a * &cc;
    report.discriminant = disc.to_string();
    if disc.is_zero() {
        return Ok(report);
    }
    report.checks.insert("squarefree_eliminant".into(), true);
    let two_a = &a * BigRational::from_integer(2.into());
    let roots: [QuadExt; 2] = match rational_sqrt(&disc) {
        Some(r) => [QuadExt::rational((-&b + &r) / &two_a), QuadExt::rational((-&b - &r) / &two_a)],
        None => {
            let s = QuadExt::sqrt_of(disc.clone());
            let base = QuadExt::rational(-&b / &two_a);
            let shift = s.times(&QuadExt::rational(two_a.recip()));
            [base.plus(&shift), base.minus(&shift)]
        }
    };
    let embed = |x: &BigRational| QuadExt::rational(x.clone());
    let mut points = Vec::new();
    for w in &roots {
        let mut pt: BTreeMap<Var, QuadExt> = BTreeMap::new();
        pt.insert(vars[3], w.clone());
        let mut coords = Vec::new();
        for k in 0..3 {
            // basis[k] = vars[k] - f_k(w)
            let tail = &basis[k] - &RatPoly::var(vars[k]);
            coords.push(tail.evaluate_in(&pt, embed)?.negated());
        }
        for (k, v) in coords.into_iter().enumerate() {
            pt.insert(vars[k], v);
        }
        points.push(pt);
    }
    let f = multilinear_form(c)?;
    let mut eqs = vec![("F".to_string(), f.clone())];
    for (k, v) in vars.iter().enumerate() {
        eqs.push((format!("dF/d{}", ["x", "y", "z", "w"][k]), f.derivative(*v)));
    }
    let mut all = true;
    for (k, pt) in points.iter().enumerate() {
        for (name, e) in &eqs {
            let ok = e.evaluate_in(pt, embed)?.is_zero();
            report.checks.insert(format!("point{} {}", k + 1, name), ok);
            all &= ok;
        }
        for g in &basis {
            all &= g.evaluate_in(pt, embed)?.is_zero();
        }
    }
    let differ = vars.iter().all(|v| points[0][v] != points[1][v]);
    report.checks.insert("points_differ_everywhere".into(), differ);
    report.points = points.iter().map(|pt| vars.iter().map(|v| pt[v].to_string()).collect()).collect();
    let passed = all && differ && report.checks.values().all(|&b| b);
    report.status = if passed { NodeStatus::Pass } else { NodeStatus::Fail };
    Ok(report)
}

/// Random integer matrix with entries in `[-10, 10]`.
pub fn random_integer_matrix(rng: &mut impl Rng) -> Vec<Vec<BigRational>> {
    let m: Vec<Vec<i64>> = (0..4).map(|_| (0..4).map(|_| rng.gen_range(-10..=10)).collect()).collect();
    rational_matrix(&m)
}

/// Reports for a batch of random samples.
#[derive(Clone, Debug, Serialize)]
pub struct NodeBatch {
    /// One report per slot, the last draw for that slot.
    pub reports: Vec<NodeReport>,
    /// Nongeneric draws that were replaced.
    pub redraws: Vec<NodeReport>,
}

impl NodeBatch {
    pub fn passed(&self) -> usize {
        self.reports.iter().filter(|r| r.status == NodeStatus::Pass).count()
    }
}

/// Maximum re-draws per slot.
pub const MAX_REDRAWS: usize = 5;

/// Runs [`node_membership_check`] on `samples` seeded random matrices,
/// re-drawing nongeneric ones.
pub fn node_check_batch(samples: usize, seed: u64) -> Result<NodeBatch, HyperdetError> {
    let slots: Vec<Result<(NodeReport, Vec<NodeReport>), HyperdetError>> = (0..samples)
        .into_par_iter()
        .map(|k| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_mul(0x9e37_79b9_7f4a_7c15).wrapping_add(k as u64));
            let mut redraws = Vec::new();
            loop {
                let r = node_membership_check(&random_integer_matrix(&mut rng))?;
                if r.status != NodeStatus::Nongeneric || redraws.len() == MAX_REDRAWS {
                    return Ok((r, redraws));
                }
                redraws.push(r);
            }
        })
        .collect();
    let mut batch = NodeBatch { reports: Vec::new(), redraws: Vec::new() };
    for s in slots {
        let (r, d) = s?;
        batch.reports.push(r);
        batch.redraws.extend(d);
    }
    Ok(batch)
}

/// Sparse integer polynomial over packed monomials for large expansions:
/// 5 bits per slot, 17 slots (16 variables and a pencil parameter).
#[derive(Clone, Debug, Default, PartialEq)]
pub struct WidePoly {
    pub terms: FxHashMap<u128, i128>,
}

const SLOT_BITS: u32 = 5;
/// Slot holding the pencil parameter `t`.
pub const PENCIL_SLOT: u32 = 16;

impl WidePoly {
    pub fn constant(c: i128) -> Self {
        let mut terms = FxHashMap::default();
        if c != 0 {
            terms.insert(0, c);
        }
        WidePoly { terms }
    }

    pub fn var(slot: u32) -> Self {
        let mut terms = FxHashMap::default();
        terms.insert(1u128 << (SLOT_BITS * slot), 1);
        WidePoly { terms }
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, o: &WidePoly, scale: i128) -> Result<WidePoly, HyperdetError> {
        let mut out = self.clone();
        for (&m, &c) in &o.terms {
            let d = c.checked_mul(scale).ok_or(HyperdetError::Overflow)?;
            let e = out.terms.entry(m).or_insert(0);
            *e = e.checked_add(d).ok_or(HyperdetError::Overflow)?;
            if *e == 0 {
                out.terms.remove(&m);
            }
        }
        Ok(out)
    }

    pub fn mul(&self, o: &WidePoly) -> Result<WidePoly, HyperdetError> {
        let (small, big) = if self.len() <= o.len() { (self, o) } else { (o, self) };
        let small: Vec<(u128, i128)> = small.terms.iter().map(|(&m, &c)| (m, c)).collect();
        let big: Vec<(u128, i128)> = big.terms.iter().map(|(&m, &c)| (m, c)).collect();
        let chunk = (small.len() / rayon::current_num_threads().max(1)).max(1);
        let parts: Vec<Result<FxHashMap<u128, i128>, HyperdetError>> = small
            .par_chunks(chunk)
            .map(|ch| {
                let mut acc: FxHashMap<u128, i128> = FxHashMap::default();
                for &(m1, c1) in ch {
                    for &(m2, c2) in &big {
                        let e = acc.entry(m1 + m2).or_insert(0);
                        *e = e.checked_add(c1.checked_mul(c2).ok_or(HyperdetError::Overflow)?).ok_or(HyperdetError::Overflow)?;
                    }
                }
                Ok(acc)
            })
            .collect();
        let mut out: FxHashMap<u128, i128> = FxHashMap::default();
        for p in parts {
            for (m, c) in p? {
                let e = out.entry(m).or_insert(0);
                *e = e.checked_add(c).ok_or(HyperdetError::Overflow)?;
            }
        }
        out.retain(|_, c| *c != 0);
        Ok(WidePoly { terms: out })
    }

    /// Coefficient of `t^k` as a polynomial in the other slots.
    pub fn pencil_coefficient(&self, k: u32) -> WidePoly {
        let shift = SLOT_BITS * PENCIL_SLOT;
        let mask = 0x1fu128 << shift;
        let terms = self
            .terms
            .iter()
            .filter(|(&m, _)| ((m & mask) >> shift) as u32 == k)
            .map(|(&m, &c)| (m & !mask, c))
            .collect();
        WidePoly { terms }
    }

    /// Converts to a polynomial, naming slot `s` by `name(s)`.
    pub fn to_int_poly(&self, name: impl Fn(u32) -> Var) -> IntPoly {
        let terms = self
            .terms
            .iter()
            .map(|(&m, &c)| {
                let pairs = (0..=PENCIL_SLOT).filter_map(|s| {
                    let e = ((m >> (SLOT_BITS * s)) & 0x1f) as u16;
                    (e > 0).then(|| (name(s), e))
                });
                (Monomial::from_pairs(pairs), BigInt::from(c))
            })
            .collect();
        IntPoly::from_terms(terms)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|&m| (0..=PENCIL_SLOT).map(|s| ((m >> (SLOT_BITS * s)) & 0x1f) as u32).sum()).max()
    }
}

/// Cayley's hyperdeterminant of a `2×2×2` array indexed by `4i + 2j + k`.
pub fn cayley_222(b: &[WidePoly; 8]) -> Result<WidePoly, HyperdetError> {
    let p = |x: &[usize]| -> Result<WidePoly, HyperdetError> {
        let mut acc = WidePoly::constant(1);
        for &k in x {
            acc = acc.mul(&b[k])?;
        }
        Ok(acc)
    };
    let terms: [(&[usize], i128); 12] = [
        (&[0, 0, 7, 7], 1),
        (&[1, 1, 6, 6], 1),
        (&[2, 2, 5, 5], 1),
        (&[4, 4, 3, 3], 1),
        (&[0, 1, 6, 7], -2),
        (&[0, 2, 5, 7], -2),
        (&[0, 4, 3, 7], -2),
        (&[1, 2, 5, 6], -2),
        (&[1, 4, 3, 6], -2),
        (&[2, 4, 3, 5], -2),
        (&[0, 3, 5, 6], 4),
        (&[1, 2, 4, 7], 4),
    ];
    let mut out = WidePoly::default();
    for (idx, c) in terms {
        out = out.add(&p(idx)?, c)?;
    }
    Ok(out)
}

/// Discriminant of `q0 t^4 + q1 t^3 + q2 t^2 + q3 t + q4`.
pub fn quartic_discriminant(q: &[WidePoly; 5]) -> Result<WidePoly, HyperdetError> {
    // (exponents of q0..q4, coefficient)
    let terms: [([u32; 5], i128); 16] = [
        ([3, 0, 0, 0, 3], 256),
        ([2, 1, 0, 1, 2], -192),
        ([2, 0, 2, 0, 2], -128),
        ([2, 0, 1, 2, 1], 144),
        ([2, 0, 0, 4, 0], -27),
        ([1, 2, 1, 0, 2], 144),
        ([1, 2, 0, 2, 1], -6),
        ([1, 1, 2, 1, 1], -80),
        ([1, 1, 1, 3, 0], 18),
        ([1, 0, 4, 0, 1], 16),
        ([1, 0, 3, 2, 0], -4),
        ([0, 4, 0, 0, 2], -27),
        ([0, 3, 1, 1, 1], 18),
        ([0, 3, 0, 3, 0], -4),
        ([0, 2, 3, 0, 1], -4),
        ([0, 2, 2, 2, 0], 1),
    ];
    let mut powers: BTreeMap<(usize, u32), WidePoly> = BTreeMap::new();
    for k in 0..5 {
        let mut acc = WidePoly::constant(1);
        powers.insert((k, 0), acc.clone());
        for e in 1..=4 {
            acc = acc.mul(&q[k])?;
            powers.insert((k, e), acc.clone());
        }
    }
    let parts: Vec<Result<WidePoly, HyperdetError>> = terms
        .par_iter()
        .map(|(ex, c)| {
            let mut factors: Vec<&WidePoly> = (0..5).filter(|&k| ex[k] > 0).map(|k| &powers[&(k, ex[k])]).collect();
            factors.sort_by_key(|f| f.len());
            let mut acc = WidePoly::constant(*c);
            for f in factors {
                acc = acc.mul(f)?;
            }
            Ok(acc)
        })
        .collect();
    let mut out = WidePoly::default();
    for p in parts {
        out = out.add(&p?, 1)?;
    }
    Ok(out)
}

/// Schläfli's construction from a table of 16 entries indexed by binary
/// value `8i + 4j + 2k + l`: contract `l` against `(1, t)`, take Cayley's
/// hyperdeterminant (a binary quartic in `t` with coefficients of
/// degree 4) and return its discriminant.
pub fn schlafli_from_table(a: &[WidePoly; 16]) -> Result<WidePoly, HyperdetError> {
    let t = WidePoly::var(PENCIL_SLOT);
    let b: [WidePoly; 8] = std::array::from_fn(|ijk| a[2 * ijk].add(&a[2 * ijk + 1].mul(&t).expect("small"), 1).expect("small"));
    let quartic = cayley_222(&b)?;
    let q: [WidePoly; 5] = std::array::from_fn(|k| quartic.pencil_coefficient(k as u32));
    quartic_discriminant(&q)
}

/// The `2×2×2×2` hyperdeterminant in the 16 table variables `a_ijkl`
/// (slot = binary value), degree 24.
pub fn schlafli_expand() -> Result<WidePoly, HyperdetError> {
    let a: [WidePoly; 16] = std::array::from_fn(|s| WidePoly::var(s as u32));
    schlafli_from_table(&a)
}

/// The same construction with `a_S = A_{[4]∖S}` written in cycle-sums
/// (`A_∅ = 1`); slot `mask(I)` holds `C_I`.
pub fn schlafli_in_cycle_sums() -> Result<WidePoly, HyperdetError> {
    let full = SubsetIndex::full(4);
    let a: [WidePoly; 16] = std::array::from_fn(|bits| {
        // bit 3 of the table index is the first factor
        let s = SubsetIndex::from_elements((1..=4).filter(|&i| bits & (1 << (4 - i)) != 0));
        wide_from_cycle_poly(&crate::minor_maps::minor_in_cyclesums(full.difference(s)))
    });
    schlafli_from_table(&a)
}

fn wide_from_cycle_poly(f: &IntPoly) -> WidePoly {
    let mut terms = FxHashMap::default();
    for (m, c) in f.terms() {
        let key = m.factors().iter().fold(0u128, |k, &(v, e)| {
            k | ((e as u128) << (SLOT_BITS * v.subset().expect("cycle-sum variable").mask() as u32))
        });
        let c: i128 = c.try_into().expect("small coefficient");
        terms.insert(key, c);
    }
    WidePoly { terms }
}

/// Names slots of [`schlafli_expand`] output.
pub fn table_var(slot: u32) -> Var {
    Var::t(slot as u8)
}

/// Evaluates a table polynomial at a 16-entry table.
pub fn evaluate_table(f: &WidePoly, table: &[BigInt; 16]) -> BigInt {
    f.terms
        .par_iter()
        .map(|(&m, &c)| {
            let mut x = BigInt::from(c);
            for s in 0..16u32 {
                let e = ((m >> (SLOT_BITS * s)) & 0x1f) as u32;
                if e > 0 {
                    x *= table[s as usize].pow(e);
                }
            }
            x
        })
        .reduce(BigInt::zero, |a, b| a + b)
}

/// Table of principal minors of `m`: entry `8i + 4j + 2k + l` is the minor
/// on the complement of `{1^i, 2^j, 3^k, 4^l}`.
pub fn minor_table(m: &[Vec<BigInt>]) -> Result<[BigInt; 16], HyperdetError> {
    let pm = principal_minors(m)?;
    let full = SubsetIndex::full(4);
    Ok(std::array::from_fn(|bits| {
        let s = SubsetIndex::from_elements((1..=4).filter(|&i| bits & (1 << (4 - i)) != 0));
        pm.get(full.difference(s)).clone()
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::parse_poly;

    fn rp(s: &str) -> RatPoly {
        parse_poly(s, ()).unwrap()
    }

    fn xyzw() -> Vec<Var> {
        node_vars().to_vec()
    }

    #[test]
    fn trivial_bases() {
        let gb = buchberger_lex(&[rp("x^2 - 1"), rp("y - x")], &xyzw()).unwrap();
        assert_eq!(gb.basis(), vec![rp("x - y"), rp("y^2 - 1")]);
        assert_eq!(gb.initial_ideal(), vec![Monomial::var(xyzw()[0]), Monomial::var_pow(xyzw()[1], 2)]);
        let gb = buchberger_lex(&[rp("x"), rp("y")], &xyzw()).unwrap();
        assert_eq!(gb.basis(), vec![rp("x"), rp("y")]);
        assert!(gb.is_groebner());
    }

    #[test]
    fn cyclic_three() {
        let gens = [rp("x + y + z"), rp("x*y + y*z + z*x"), rp("x*y*z - 1")];
        let gb = buchberger_lex(&gens, &xyzw()[..3]).unwrap();
        assert!(gb.is_groebner());
        let b = gb.basis();
        assert_eq!(b.last().unwrap(), &rp("z^3 - 1"));
        for g in &gens {
            assert!(gb.normal_form(g).unwrap().is_zero());
        }
    }

    #[test]
    fn iteration_cap() {
        let gens = [rp("x^2 + y"), rp("x*y - 1")];
        assert!(matches!(buchberger_lex_capped(&gens, &xyzw()[..2], 0), Err(HyperdetError::IterationCap(0))));
        assert!(buchberger_lex(&gens, &xyzw()[..2]).unwrap().is_groebner());
    }

    #[test]
    fn zero_matrix_ideal() {
        let c = rational_matrix(&vec![vec![0; 4]; 4]);
        let ideal = shifted_matrix_ideal(&c).unwrap();
        let nonzero: Vec<_> = ideal.into_iter().filter(|f| !f.is_zero()).collect();
        assert_eq!(nonzero.len(), 4);
        assert!(nonzero.contains(&rp("x*y*z")));
    }

    #[test]
    fn node_check_random() {
        let batch = node_check_batch(4, 11).unwrap();
        for r in batch.reports {
            assert_eq!(r.status, NodeStatus::Pass, "{}", r.to_json());
            assert_eq!(r.initial_ideal, vec!["x", "y", "z", "w^2"]);
        }
    }

    #[test]
    fn degenerate_is_reported() {
        let c = rational_matrix(&vec![vec![0; 4]; 4]);
        let r = node_membership_check(&c).unwrap();
        assert_eq!(r.status, NodeStatus::Nongeneric);
        let c = rational_matrix(&[vec![-2, 10, -5, -6], vec![0, 3, -5, 5], vec![-5, 0, 0, 3], vec![-9, 0, -10, -1]]);
        let r = node_membership_check(&c).unwrap();
        assert_eq!(r.status, NodeStatus::Nongeneric);
        assert_eq!(r.initial_ideal, vec!["x", "y", "z", "w"]);
    }

    #[test]
    fn cayley_of_identity_tensor() {
        // b_000 = b_111 = 1, others 0 has hyperdeterminant 1
        let b: [WidePoly; 8] = std::array::from_fn(|k| WidePoly::constant(if k == 0 || k == 7 { 1 } else { 0 }));
        assert_eq!(cayley_222(&b).unwrap(), WidePoly::constant(1));
    }

    #[test]
    fn discriminant_of_known_quartic() {
        // (t - 1)(t - 2)(t - 3)(t - 4)
        let c = [1i128, -10, 35, -50, 24];
        let q: [WidePoly; 5] = std::array::from_fn(|k| WidePoly::constant(c[k]));
        // product of squared root differences: (1*2*3*1*2*1)^2 = 144
        assert_eq!(quartic_discriminant(&q).unwrap(), WidePoly::constant(144));
    }
}

#[cfg(test)]
mod reference_basis {
    use super::*;
    use crate::exactpoly::parse_poly;

    #[test]
    fn matches_reference_basis() {
        // basis computed independently for this matrix
        let c = rational_matrix(&[vec![-6, 8, -8, -2], vec![-7, 5, 4, 5], vec![10, 2, -4, -7], vec![5, -10, 2, 3]]);
        let gb = buchberger_lex(&shifted_matrix_ideal(&c).unwrap(), &node_vars()).unwrap();
        let expected = ["52*w + 65*x - 240", "-13*w + 20*y - 59", "52*w + 85*z + 890", "26*w^2 + 543*w + 2475"];
        let basis = gb.basis();
        assert_eq!(basis.len(), 4);
        for (g, e) in basis.iter().zip(expected) {
            let e: RatPoly = parse_poly(e, ()).unwrap();
            let lead = e.coefficient(&g.leading().unwrap().0);
            assert_eq!(&e.scale(&lead.recip()), g);
        }
        let r = node_membership_check(&c).unwrap();
        assert_eq!(r.status, NodeStatus::Pass);
    }
}
