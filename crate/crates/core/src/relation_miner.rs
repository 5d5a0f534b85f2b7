//! Mining minimal generators of the relation ideal one `Z^4`-graded
//! component at a time.
//!
//! A component is the span of monomials of a fixed multidegree. Its part of
//! the ideal is the kernel of the evaluation map at sample points of the
//! variety, computed modulo a prime. Products of lower-degree generators
//! with monomials span the non-minimal part; a complement of that span in
//! the kernel gives the minimal generators, which are then lifted to
//! integers by Chinese remaindering and rational reconstruction and checked
//! exactly.
//!
//! Two coordinate systems are supported. [`Coords::Minors`] uses the 15
//! principal minors `A_I`, `I ≠ ∅`. [`Coords::CycleSums`] uses the 11
//! cycle-sums `C_I` with `|I| ≥ 2`; the diagonal cycle-sums are
//! algebraically free on the variety, so minimal generators in these
//! coordinates are minimal generators of the whole ideal in cycle-sum
//! coordinates.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use rustc_hash::FxHashMap;
use serde::Serialize;
use thiserror::Error;

use crate::cycle_decomp::cycles_on;
use crate::exactpoly::modular::{
    add_mod, inv_mod, mul_mod, primitive_integer_vector, rational_lift, reduce_bigint, sub_mod, EchelonBasis,
    ModularMatrix, DEFAULT_PRIME, SECOND_PRIME, SPARE_PRIMES,
};
use crate::exactpoly::{IntPoly, Monomial, PolyError, RatPoly, Var};
use crate::lie_action::apply_s4;
use crate::minor_maps::{cycle_sums_of_matrix, principal_minors};
use crate::nanson::{to_minor_coordinates, GeneratorRecord, NansonError};
use crate::subset::SubsetIndex;

/// Default ceiling on the number of monomials in one component.
pub const DEFAULT_BUDGET: usize = 50_000;

#[derive(Debug, Error)]
pub enum MinerError {
    #[error("component {multidegree:?} has {monomials} monomials, above the budget of {budget}; use the heavy tier")]
    BudgetExceeded { multidegree: [u32; 4], monomials: usize, budget: usize },
    #[error("kernel dimensions disagree across primes at {0:?}")]
    PrimeDisagreement([u32; 4]),
    #[error("pivot structure differs across primes at {0:?}")]
    PivotMismatch([u32; 4]),
    #[error("relation at {0:?} does not vanish at exact points")]
    VerificationFailed([u32; 4]),
    #[error("could not lift relation at {0:?} with the available primes")]
    LiftFailed([u32; 4]),
    #[error("polynomial is not a relation in {0} coordinates")]
    WrongCoordinates(Coords),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Record(#[from] NansonError),
}

/// Which generators of the coordinate ring are used as variables.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Coords {
    Minors,
    CycleSums,
}

impl fmt::Display for Coords {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Coords::Minors => "minor",
            Coords::CycleSums => "cycle-sum",
        })
    }
}

impl Coords {
    /// Index sets of the variables, in canonical subset order.
    pub fn subsets(self) -> Vec<SubsetIndex> {
        let min = match self {
            Coords::Minors => 1,
            Coords::CycleSums => 2,
        };
        SubsetIndex::all(4).into_iter().filter(|s| s.len() >= min).collect()
    }

    pub fn var(self, s: SubsetIndex) -> Var {
        match self {
            Coords::Minors => Var::a(s),
            Coords::CycleSums => Var::c(s),
        }
    }
}

/// Exponent vectors over the variables of a coordinate system.
pub type Exponents = Vec<u8>;

/// The monomials of one multidegree, sorted in descending canonical order.
#[derive(Clone, Debug)]
pub struct ComponentSpec {
    pub multidegree: [u32; 4],
    pub coords: Coords,
    pub subsets: Vec<SubsetIndex>,
    pub exponents: Vec<Exponents>,
    index: FxHashMap<Exponents, usize>,
}

impl ComponentSpec {
    pub fn len(&self) -> usize {
        self.exponents.len()
    }

    pub fn is_empty(&self) -> bool {
        self.exponents.is_empty()
    }

    pub fn position(&self, e: &[u8]) -> Option<usize> {
        self.index.get(e).copied()
    }

    pub fn monomial(&self, k: usize) -> Monomial {
        exponents_to_monomial(self.coords, &self.subsets, &self.exponents[k])
    }

    /// The polynomial with coefficient `v[k]` on monomial `k`.
    pub fn poly_from_vector(&self, v: &[BigInt]) -> IntPoly {
        IntPoly::from_terms(
            v.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(k, c)| (self.monomial(k), c.clone())).collect(),
        )
    }

    /// Coefficient vector of `f`, or `None` if `f` has a term outside the
    /// component.
    pub fn vector_of(&self, f: &IntPoly) -> Option<Vec<BigInt>> {
        let mut v = vec![BigInt::zero(); self.len()];
        for (m, c) in f.terms() {
            let e = monomial_to_exponents(self.coords, &self.subsets, m)?;
            v[self.position(&e)?] = c.clone();
        }
        Some(v)
    }
}

fn exponents_to_monomial(coords: Coords, subsets: &[SubsetIndex], e: &[u8]) -> Monomial {
    Monomial::from_pairs(subsets.iter().zip(e).filter(|(_, &x)| x > 0).map(|(&s, &x)| (coords.var(s), x as u16)))
}

fn monomial_to_exponents(coords: Coords, subsets: &[SubsetIndex], m: &Monomial) -> Option<Exponents> {
    let mut e = vec![0u8; subsets.len()];
    for &(v, x) in m.factors() {
        let s = v.subset()?;
        if coords.var(s) != v {
            return None;
        }
        let k = subsets.iter().position(|&t| t == s)?;
        e[k] = u8::try_from(x).ok()?;
    }
    Some(e)
}

/// All monomials of multidegree `d`.
pub fn enumerate_monomials(d: &[u32; 4], coords: Coords) -> ComponentSpec {
    let subsets = coords.subsets();
    let mut out = Vec::new();
    let mut cur = vec![0u8; subsets.len()];
    let mut rem = *d;
    fill(&subsets, 0, &mut rem, &mut cur, &mut out);
    let mut keyed: Vec<(Monomial, Exponents)> =
        out.into_iter().map(|e| (exponents_to_monomial(coords, &subsets, &e), e)).collect();
    keyed.sort_by(|a, b| b.0.cmp(&a.0));
    let exponents: Vec<Exponents> = keyed.into_iter().map(|x| x.1).collect();
    let index = exponents.iter().enumerate().map(|(k, e)| (e.clone(), k)).collect();
    ComponentSpec { multidegree: *d, coords, subsets, exponents, index }
}

fn fill(subsets: &[SubsetIndex], k: usize, rem: &mut [u32; 4], cur: &mut Exponents, out: &mut Vec<Exponents>) {
    if k == subsets.len() {
        if rem.iter().all(|&r| r == 0) {
            out.push(cur.clone());
        }
        return;
    }
    let s = subsets[k];
    // remaining variables must still cover each coordinate
    let max = s.elements().iter().map(|&i| rem[i - 1]).min().unwrap_or(0);
    for x in (0..=max).rev() {
        for &i in &s.elements() {
            rem[i - 1] -= x;
        }
        cur[k] = x as u8;
        if feasible(subsets, k + 1, rem) {
            fill(subsets, k + 1, rem, cur, out);
        }
        for &i in &s.elements() {
            rem[i - 1] += x;
        }
    }
    cur[k] = 0;
}

fn feasible(subsets: &[SubsetIndex], k: usize, rem: &[u32; 4]) -> bool {
    (1..=4).all(|i| rem[i - 1] == 0 || subsets[k..].iter().any(|s| s.contains(i)))
}

/// Number of monomials of multidegree `d`, by a generating-function count.
pub fn count_monomials(d: &[u32; 4], coords: Coords) -> u64 {
    let dims: Vec<usize> = d.iter().map(|&x| x as usize + 1).collect();
    let size: usize = dims.iter().product();
    let stride = [dims[1] * dims[2] * dims[3], dims[2] * dims[3], dims[3], 1];
    let mut arr = vec![0u64; size];
    arr[0] = 1;
    for s in coords.subsets() {
        let off: usize = s.elements().iter().map(|&i| stride[i - 1]).sum();
        for idx in 0..size {
            let mut coords_ok = true;
            let mut rest = idx;
            for (i, st) in stride.iter().enumerate() {
                let c = rest / st;
                rest %= st;
                if s.contains(i + 1) && c == 0 {
                    coords_ok = false;
                }
            }
            if coords_ok {
                arr[idx] += arr[idx - off];
            }
        }
    }
    arr[size - 1]
}

/// Values of the coordinate variables at random points of the variety,
/// computed modulo `p` from random `4 × 4` matrices.
pub fn sample_points(coords: Coords, count: usize, p: u64, seed: u64) -> Vec<Vec<u64>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ p.rotate_left(17));
    let subsets = coords.subsets();
    let cycles: Vec<Vec<Vec<(u8, u8)>>> =
        subsets.iter().map(|&s| cycles_on(s).iter().map(|c| c.edges()).collect()).collect();
    (0..count)
        .map(|_| {
            let a: Vec<Vec<u64>> = (0..4).map(|_| (0..4).map(|_| rng.gen_range(0..p)).collect()).collect();
            match coords {
                Coords::Minors => subsets.iter().map(|&s| det_mod(&a, s, p)).collect(),
                Coords::CycleSums => cycles
                    .iter()
                    .map(|cs| {
                        cs.iter().fold(0, |acc, edges| {
                            let t = edges.iter().fold(1, |t, &(i, j)| mul_mod(t, a[i as usize - 1][j as usize - 1], p));
                            add_mod(acc, t, p)
                        })
                    })
                    .collect(),
            }
        })
        .collect()
}

fn det_mod(a: &[Vec<u64>], s: SubsetIndex, p: u64) -> u64 {
    let idx: Vec<usize> = s.elements().into_iter().map(|i| i - 1).collect();
    let mut m: Vec<Vec<u64>> = idx.iter().map(|&i| idx.iter().map(|&j| a[i][j]).collect()).collect();
    let n = m.len();
    let mut det = 1u64;
    for c in 0..n {
        let Some(r) = (c..n).find(|&r| m[r][c] != 0) else {
            return 0;
        };
        if r != c {
            m.swap(r, c);
            det = sub_mod(0, det, p);
        }
        det = mul_mod(det, m[c][c], p);
        let inv = inv_mod(m[c][c], p).unwrap();
        for r in c + 1..n {
            let f = mul_mod(m[r][c], inv, p);
            if f != 0 {
                for j in c..n {
                    m[r][j] = sub_mod(m[r][j], mul_mod(f, m[c][j], p), p);
                }
            }
        }
    }
    det
}

/// Evaluation matrix: one row per point, one column per monomial.
pub fn evaluation_matrix(spec: &ComponentSpec, points: &[Vec<u64>], p: u64) -> ModularMatrix {
    let maxe = spec.multidegree.iter().copied().max().unwrap_or(0) as usize;
    let mut m = ModularMatrix::zeros(points.len(), spec.len(), p);
    for (r, pt) in points.iter().enumerate() {
        let pows: Vec<Vec<u64>> = pt
            .iter()
            .map(|&x| {
                let mut v = vec![1u64; maxe + 1];
                for e in 1..=maxe {
                    v[e] = mul_mod(v[e - 1], x, p);
                }
                v
            })
            .collect();
        let row = m.row_mut(r);
        for (k, e) in spec.exponents.iter().enumerate() {
            row[k] = e.iter().enumerate().fold(1, |acc, (v, &x)| if x == 0 { acc } else { mul_mod(acc, pows[v][x as usize], p) });
        }
    }
    m
}

/// The ideal's part of one component modulo one prime.
#[derive(Clone, Debug)]
pub struct ComponentKernel {
    pub multidegree: [u32; 4],
    pub prime: u64,
    pub monomials: usize,
    /// Canonical kernel basis: `basis[k]` has a 1 at the `k`-th free
    /// column of the evaluation matrix and 0 at the others.
    pub basis: Vec<Vec<u64>>,
}

impl ComponentKernel {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

/// Kernel of the evaluation map on one component, sampling
/// `#monomials + oversample` points.
pub fn component_kernel(
    spec: &ComponentSpec,
    p: u64,
    seed: u64,
    oversample: usize,
    budget: usize,
) -> Result<ComponentKernel, MinerError> {
    if spec.len() > budget {
        return Err(MinerError::BudgetExceeded { multidegree: spec.multidegree, monomials: spec.len(), budget });
    }
    let mut basis = Vec::new();
    if !spec.is_empty() {
        let seed = seed ^ component_seed(&spec.multidegree);
        let pts = sample_points(spec.coords, spec.len() + oversample, p, seed);
        basis = evaluation_matrix(spec, &pts, p).kernel().basis;
    }
    Ok(ComponentKernel { multidegree: spec.multidegree, prime: p, monomials: spec.len(), basis })
}

fn component_seed(d: &[u32; 4]) -> u64 {
    d.iter().fold(0x9e37_79b9_7f4a_7c15u64, |h, &x| (h ^ x as u64).wrapping_mul(0x1000_0000_01b3))
}

/// Moves a kernel of component `d` to component `σ(d)`, where
/// `sigma[i-1] = σ(i)`.
pub fn permute_kernel(kernel: &ComponentKernel, from: &ComponentSpec, to: &ComponentSpec, sigma: &[usize; 4]) -> ComponentKernel {
    let map = permutation_map(from, to, sigma);
    let basis = kernel
        .basis
        .iter()
        .map(|v| {
            let mut w = vec![0u64; to.len()];
            for (k, &x) in v.iter().enumerate() {
                w[map[k]] = x;
            }
            w
        })
        .collect();
    ComponentKernel { multidegree: to.multidegree, prime: kernel.prime, monomials: to.len(), basis }
}

fn permutation_map(from: &ComponentSpec, to: &ComponentSpec, sigma: &[usize; 4]) -> Vec<usize> {
    let var_map: Vec<usize> = from
        .subsets
        .iter()
        .map(|s| {
            let t = s.permute(sigma);
            to.subsets.iter().position(|&u| u == t).unwrap()
        })
        .collect();
    from.exponents
        .iter()
        .map(|e| {
            let mut f = vec![0u8; e.len()];
            for (v, &x) in e.iter().enumerate() {
                f[var_map[v]] = x;
            }
            to.position(&f).expect("permuted monomial lies in the permuted component")
        })
        .collect()
}

/// `σ(d)` with `σ(d)_{σ(i)} = d_i`.
pub fn permute_degree(d: &[u32; 4], sigma: &[usize; 4]) -> [u32; 4] {
    let mut out = [0; 4];
    for i in 0..4 {
        out[sigma[i] - 1] = d[i];
    }
    out
}

/// All 24 permutations of `[4]`, lexicographically.
pub fn s4() -> Vec<[usize; 4]> {
    let mut out = Vec::new();
    let mut p = [1, 2, 3, 4];
    loop {
        out.push(p);
        if !crate::exactpoly::next_permutation(&mut p) {
            return out;
        }
    }
}

/// A minimal generator in sparse exponent form.
#[derive(Clone, Debug)]
pub struct Relation {
    pub multidegree: [u32; 4],
    pub poly: IntPoly,
    terms: Vec<(Exponents, BigInt)>,
    minor_form: OnceLock<IntPoly>,
}

impl Relation {
    /// Wraps a homogeneous relation. In cycle-sum coordinates `poly` may
    /// involve the diagonal cycle-sums; terms containing them are dropped
    /// from the sparse form used for spans, which is `poly` at `C_i = 0`.
    pub fn new(coords: Coords, poly: IntPoly) -> Result<Self, MinerError> {
        let subsets = coords.subsets();
        let md = match poly.multidegree_of(4)? {
            crate::exactpoly::Homogeneity::Homogeneous(d) => [d[0], d[1], d[2], d[3]],
            _ => return Err(MinerError::WrongCoordinates(coords)),
        };
        let mut terms = Vec::with_capacity(poly.len());
        for (m, c) in poly.terms() {
            let diagonal = coords == Coords::CycleSums
                && m.factors().iter().any(|(v, _)| v.subset().is_some_and(|s| s.len() == 1 && *v == Var::c(s)));
            if diagonal {
                continue;
            }
            let e = monomial_to_exponents(coords, &subsets, m).ok_or(MinerError::WrongCoordinates(coords))?;
            terms.push((e, c.clone()));
        }
        if terms.is_empty() && !poly.is_zero() {
            return Err(MinerError::WrongCoordinates(coords));
        }
        Ok(Relation { multidegree: md, poly, terms, minor_form: OnceLock::new() })
    }

    /// The relation in minor coordinates (cached). Cycle-sum variables are
    /// substituted; minor variables are left alone.
    pub fn minor_form(&self) -> &IntPoly {
        self.minor_form.get_or_init(|| to_minor_coordinates(&self.poly).expect("cycle-sum substitution"))
    }

    /// The coefficient vector of `m · self` in `spec`, modulo `p`.
    fn shifted_vector(&self, shift: &[u8], spec: &ComponentSpec, p: u64) -> Vec<u64> {
        let mut v = vec![0u64; spec.len()];
        let mut e = vec![0u8; shift.len()];
        for (te, c) in &self.terms {
            for k in 0..e.len() {
                e[k] = te[k] + shift[k];
            }
            let pos = spec.position(&e).expect("shifted monomial lies in the component");
            v[pos] = reduce_bigint(c, p);
        }
        v
    }
}

/// Echelon basis of the span of `m · g` over known generators `g` of degree
/// strictly below `spec.multidegree`. Stops early once `cap` is reached.
pub fn lower_span(spec: &ComponentSpec, known: &[Relation], p: u64, cap: usize) -> EchelonBasis {
    let mut eb = EchelonBasis::new(spec.len(), p);
    let d = spec.multidegree;
    let mut shifts: FxHashMap<[u32; 4], Vec<Exponents>> = FxHashMap::default();
    for g in known {
        if eb.rank() >= cap {
            break;
        }
        let e = g.multidegree;
        if e == d || (0..4).any(|i| e[i] > d[i]) {
            continue;
        }
        let q = [d[0] - e[0], d[1] - e[1], d[2] - e[2], d[3] - e[3]];
        let ms = shifts.entry(q).or_insert_with(|| enumerate_monomials(&q, spec.coords).exponents);
        for m in ms.iter() {
            if eb.rank() >= cap {
                break;
            }
            eb.insert(g.shifted_vector(m, spec, p));
        }
    }
    eb
}

/// Canonical complement of `lower` in `kernel`: the reduced row echelon
/// form of the kernel's normal forms modulo `lower`.
pub fn minimal_part(kernel: &ComponentKernel, lower: &EchelonBasis) -> Vec<Vec<u64>> {
    let mut out = EchelonBasis::new(kernel.monomials, kernel.prime);
    for v in &kernel.basis {
        let mut w = v.clone();
        if !lower.reduce(&mut w) {
            out.insert(w);
        }
    }
    out.rref_rows().into_iter().map(|(_, r)| r).collect()
}

/// Exact points of the variety, from random integer matrices with entries
/// in `[-5, 5]`, keyed by coordinate variable.
pub fn exact_points(coords: Coords, count: usize, seed: u64) -> Vec<BTreeMap<Var, BigInt>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let a: Vec<Vec<BigInt>> =
                (0..4).map(|_| (0..4).map(|_| BigInt::from(rng.gen_range(-5i64..=5))).collect()).collect();
            let vals = match coords {
                Coords::Minors => principal_minors(&a).expect("square"),
                Coords::CycleSums => cycle_sums_of_matrix(&a).expect("square"),
            };
            coords.subsets().into_iter().map(|s| (coords.var(s), vals.get(s).clone())).collect()
        })
        .collect()
}

/// Whether `f` vanishes at every point.
pub fn vanishes_at(f: &IntPoly, points: &[BTreeMap<Var, BigInt>]) -> bool {
    points.iter().all(|pt| f.evaluate(pt).map(|x| x.is_zero()).unwrap_or(false))
}

/// Mining parameters.
#[derive(Clone, Debug)]
pub struct MinerConfig {
    /// Primes used for kernels and lifting; the first two are always used,
    /// later ones only when lifting needs them.
    pub primes: Vec<u64>,
    pub seed: u64,
    pub oversample: usize,
    pub budget: usize,
    pub verify_points: usize,
    /// Rewrite cycle-sum generators as normal forms in minor coordinates
    /// with respect to this order.
    pub minor_order: Option<MinorOrder>,
}

impl Default for MinerConfig {
    fn default() -> Self {
        let mut primes = vec![DEFAULT_PRIME, SECOND_PRIME];
        primes.extend(SPARE_PRIMES);
        MinerConfig { primes, seed: 1, oversample: 20, budget: DEFAULT_BUDGET, verify_points: 10, minor_order: Some(MinorOrder::descending_cardinality()) }
    }
}

/// Counts for one component.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComponentSummary {
    pub multidegree: [u32; 4],
    pub monomials: usize,
    pub kernel_dim: usize,
    pub lower_rank: usize,
    pub minimal: usize,
}

/// Minimal generators of one component, given all known generators of
/// lower degree. The kernel may be supplied per prime (for example a
/// permuted one); otherwise it is computed.
pub fn mine_component(
    spec: &ComponentSpec,
    known: &[Relation],
    kernels: Option<Vec<ComponentKernel>>,
    config: &MinerConfig,
) -> Result<(ComponentSummary, Vec<Relation>), MinerError> {
    let d = spec.multidegree;
    let kernel_at = |i: usize| -> Result<ComponentKernel, MinerError> {
        match &kernels {
            Some(ks) if i < ks.len() => Ok(ks[i].clone()),
            _ => component_kernel(spec, config.primes[i], config.seed, config.oversample, config.budget),
        }
    };
    let k0 = kernel_at(0)?;
    let lower0 = lower_span(spec, known, k0.prime, k0.dim());
    let minimal = k0.dim() - lower0.rank();
    let summary =
        ComponentSummary { multidegree: d, monomials: spec.len(), kernel_dim: k0.dim(), lower_rank: lower0.rank(), minimal };
    if minimal == 0 {
        return Ok((summary, Vec::new()));
    }
    let mut reps = vec![minimal_part(&k0, &lower0)];
    let mut used = vec![k0.prime];
    let points = exact_points(spec.coords, config.verify_points, config.seed ^ component_seed(&d).rotate_left(7));
    for i in 1..config.primes.len() {
        let k = kernel_at(i)?;
        if k.dim() != k0.dim() {
            return Err(MinerError::PrimeDisagreement(d));
        }
        let lower = lower_span(spec, known, k.prime, k.dim());
        let rep = minimal_part(&k, &lower);
        if pivots(&rep) != pivots(&reps[0]) {
            return Err(MinerError::PivotMismatch(d));
        }
        reps.push(rep);
        used.push(k.prime);
        match lift_all(spec, &reps, &used, &points) {
            Ok(rels) if config.minor_order.is_some() && spec.coords == Coords::CycleSums => {
                let polys: Vec<IntPoly> = rels.into_iter().map(|r| r.poly).collect();
                let nf = minor_normal_forms(&d, &polys, known, config.minor_order.as_ref().unwrap())?;
                return Ok((summary, nf.into_iter().map(|f| Relation::new(spec.coords, f)).collect::<Result<_, _>>()?));
            }
            Ok(rels) => return Ok((summary, rels)),
            Err(MinerError::LiftFailed(_)) if i + 1 < config.primes.len() => continue,
            Err(e) => return Err(e),
        }
    }
    Err(MinerError::LiftFailed(d))
}

fn pivots(rows: &[Vec<u64>]) -> Vec<usize> {
    rows.iter().map(|r| r.iter().position(|&x| x != 0).unwrap_or(usize::MAX)).collect()
}

fn lift_all(
    spec: &ComponentSpec,
    reps: &[Vec<Vec<u64>>],
    primes: &[u64],
    points: &[BTreeMap<Var, BigInt>],
) -> Result<Vec<Relation>, MinerError> {
    let d = spec.multidegree;
    let mut out = Vec::new();
    for r in 0..reps[0].len() {
        let vecs: Vec<Vec<u64>> = reps.iter().map(|rep| rep[r].clone()).collect();
        let lifted = rational_lift(&vecs, primes, |q| {
            let ints = primitive_integer_vector(q);
            vanishes_at(&spec.poly_from_vector(&ints), points)
        })
        .map_err(|_| MinerError::LiftFailed(d))?;
        let mut ints = primitive_integer_vector(&lifted);
        if ints.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative()) {
            ints.iter_mut().for_each(|x| *x = -x.clone());
        }
        let poly = spec.poly_from_vector(&ints);
        if !vanishes_at(&poly, points) {
            return Err(MinerError::VerificationFailed(d));
        }
        out.push(Relation::new(spec.coords, poly)?);
    }
    Ok(out)
}

/// Row echelon form over `Q` on pairs `(minor form, cycle-sum form)`,
/// pivoting on the leading monomial of the minor form.
struct PairEchelon {
    rows: Vec<(RatPoly, RatPoly)>,
}

impl PairEchelon {
    fn reduce(&self, mut a: RatPoly, mut c: RatPoly) -> (RatPoly, RatPoly) {
        for (ra, rc) in &self.rows {
            let pm = &ra.leading().expect("nonzero row").0;
            let f = a.coefficient(pm);
            if !f.is_zero() {
                a = &a - &ra.scale(&f);
                c = &c - &rc.scale(&f);
            }
        }
        (a, c)
    }

    fn insert(&mut self, a: RatPoly, c: RatPoly) -> bool {
        let (a, c) = self.reduce(a, c);
        let Some((pm, lc)) = a.leading().cloned() else {
            return false;
        };
        let inv = lc.recip();
        let (a, c) = (a.scale(&inv), c.scale(&inv));
        for (ra, rc) in self.rows.iter_mut() {
            let f = ra.coefficient(&pm);
            if !f.is_zero() {
                *ra = &*ra - &a.scale(&f);
                *rc = &*rc - &c.scale(&f);
            }
        }
        self.rows.push((a, c));
        true
    }
}

/// A graded reverse lexicographic order on the 16 minors, `A_∅` included,
/// given by listing the variables from largest to smallest. Minor forms
/// are homogenized with `A_∅` before comparison.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinorOrder {
    pub ranking: Vec<SubsetIndex>,
}

impl MinorOrder {
    /// `A_∅` first, then the others by cardinality and lexicographically.
    pub fn standard() -> Self {
        MinorOrder { ranking: SubsetIndex::all(4) }
    }

    /// Largest subsets first, lexicographically within a cardinality,
    /// `A_∅` last. This is the default order and reproduces the published
    /// representatives.
    pub fn descending_cardinality() -> Self {
        let mut v = SubsetIndex::all(4);
        v.sort_by_key(|s| std::cmp::Reverse(s.len()));
        MinorOrder { ranking: v }
    }

    /// Subsets of `[4]` by binary value, bit `i-1` for element `i`.
    pub fn binary() -> Self {
        MinorOrder { ranking: (0..16u8).map(SubsetIndex).collect() }
    }

    /// Reverses the list: first variable smallest.
    pub fn reversed(&self) -> Self {
        MinorOrder { ranking: self.ranking.iter().rev().copied().collect() }
    }

    fn key_var(&self, s: SubsetIndex) -> Var {
        let k = self.ranking.iter().position(|&t| t == s).expect("ranking covers all subsets");
        Var::x(k / 8 + 1, k % 8 + 1)
    }

    /// `f` homogenized to degree `deg` and renamed so that the built-in
    /// order on the result is this order.
    fn keyed(&self, f: &IntPoly, deg: u32) -> RatPoly {
        let empty = SubsetIndex(0);
        let terms = f
            .terms()
            .iter()
            .map(|(m, c)| {
                let pad = deg - m.total_degree();
                let mut pairs: Vec<(Var, u16)> =
                    m.factors().iter().map(|&(v, e)| (self.key_var(v.subset().expect("minor variable")), e)).collect();
                if pad > 0 {
                    pairs.push((self.key_var(empty), pad as u16));
                }
                (Monomial::from_pairs(pairs), num_rational::BigRational::from_integer(c.clone()))
            })
            .collect();
        RatPoly::from_terms(terms)
    }
}

/// Rewrites minimal cycle-sum generators of multidegree `d` as the reduced
/// echelon form, in minor coordinates ordered by `order`, of their normal
/// forms modulo all products `m · g` with `g` in `known` and `m` any
/// monomial in the 15 cycle-sums.
pub fn minor_normal_forms(
    d: &[u32; 4],
    reps: &[IntPoly],
    known: &[Relation],
    order: &MinorOrder,
) -> Result<Vec<IntPoly>, MinerError> {
    let minor_of_c: BTreeMap<SubsetIndex, IntPoly> =
        Coords::Minors.subsets().into_iter().map(|s| (s, crate::minor_maps::cycle_sum_in_minors(s))).collect();
    let mut lower_pairs = Vec::new();
    for g in known {
        let e = g.multidegree;
        if e == *d || (0..4).any(|i| e[i] > d[i]) {
            continue;
        }
        let q = [d[0] - e[0], d[1] - e[1], d[2] - e[2], d[3] - e[3]];
        let shifts = enumerate_monomials(&q, Coords::Minors);
        for ex in &shifts.exponents {
            let mut ma = IntPoly::one();
            let mut mc = IntPoly::one();
            for (s, &x) in shifts.subsets.iter().zip(ex) {
                if x > 0 {
                    ma = &ma * &minor_of_c[s].pow(x as u32);
                    mc = &mc * &IntPoly::var(Var::c(*s)).pow(x as u32);
                }
            }
            lower_pairs.push((&ma * g.minor_form(), &mc * &g.poly));
        }
    }
    let rep_pairs: Vec<(IntPoly, IntPoly)> =
        reps.iter().map(|f| Ok((to_minor_coordinates(f)?, f.clone()))).collect::<Result<_, MinerError>>()?;
    let deg = lower_pairs.iter().chain(&rep_pairs).filter_map(|(a, _)| a.total_degree()).max().unwrap_or(0);
    let mut lower = PairEchelon { rows: Vec::new() };
    for (a, c) in &lower_pairs {
        lower.insert(order.keyed(a, deg), c.to_rational());
    }
    let mut minimal = PairEchelon { rows: Vec::new() };
    for (a, c) in &rep_pairs {
        let (a, c) = lower.reduce(order.keyed(a, deg), c.to_rational());
        minimal.insert(a, c);
    }
    let mut rows = minimal.rows;
    rows.sort_by(|x, y| y.0.leading().unwrap().0.cmp(&x.0.leading().unwrap().0));
    Ok(rows.into_iter().map(|(_, c)| c.to_primitive_integer().normalized().0).collect())
}

/// How census components are computed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum CensusMode {
    /// Kernels of sorted representatives are permuted to the rest of the
    /// `S4` orbit.
    Orbit,
    /// Every component gets its own evaluation kernel.
    Independent,
}

/// Result of a census over `[0, max]^4`.
#[derive(Clone, Debug)]
pub struct Census {
    pub coords: Coords,
    pub components: Vec<ComponentSummary>,
    /// Minimal generators with table ids assigned.
    pub generators: Vec<(Option<u32>, Relation)>,
}

/// Multidegrees in `[0, max]^4` grouped by total degree, each group
/// sorted lexicographically.
pub fn degree_layers(max: u32) -> Vec<Vec<[u32; 4]>> {
    let mut layers = vec![Vec::new(); 4 * max as usize + 1];
    for a in 0..=max {
        for b in 0..=max {
            for c in 0..=max {
                for d in 0..=max {
                    layers[(a + b + c + d) as usize].push([a, b, c, d]);
                }
            }
        }
    }
    layers
}

/// Computes minimal generators of every component in `[0, max]^4`.
pub fn census(coords: Coords, max: u32, mode: CensusMode, config: &MinerConfig) -> Result<Census, MinerError> {
    census_in(coords, degree_layers(max), mode, config)
}

/// Census of every component `e ≤ upper` (componentwise), each mined with
/// its own kernel.
pub fn census_box(coords: Coords, upper: &[u32; 4], config: &MinerConfig) -> Result<Census, MinerError> {
    let max = *upper.iter().max().unwrap_or(&0);
    let layers = degree_layers(max)
        .into_iter()
        .map(|l| l.into_iter().filter(|d| d.iter().zip(upper).all(|(a, b)| a <= b)).collect())
        .collect();
    census_in(coords, layers, CensusMode::Independent, config)
}

fn census_in(coords: Coords, layers: Vec<Vec<[u32; 4]>>, mode: CensusMode, config: &MinerConfig) -> Result<Census, MinerError> {
    let mut known: Vec<Relation> = Vec::new();
    let mut components = Vec::new();
    let perms = s4();
    for layer in layers {
        let results: Vec<Result<Vec<(ComponentSummary, Vec<Relation>)>, MinerError>> = match mode {
            CensusMode::Independent => layer
                .par_iter()
                .map(|d| mine_component(&enumerate_monomials(d, coords), &known, None, config).map(|r| vec![r]))
                .collect(),
            CensusMode::Orbit => {
                let reps: Vec<[u32; 4]> = layer.iter().copied().filter(|d| d.windows(2).all(|w| w[0] <= w[1])).collect();
                reps.par_iter().map(|rep| mine_orbit(rep, coords, &perms, &known, config)).collect()
            }
        };
        let mut found = Vec::new();
        for r in results {
            for (s, rels) in r? {
                components.push(s);
                found.extend(rels);
            }
        }
        known.extend(found);
    }
    components.sort_by_key(|c| c.multidegree);
    known.sort_by_key(|r| r.multidegree);
    let generators = assign_ids(known);
    Ok(Census { coords, components, generators })
}

fn mine_orbit(
    rep: &[u32; 4],
    coords: Coords,
    perms: &[[usize; 4]],
    known: &[Relation],
    config: &MinerConfig,
) -> Result<Vec<(ComponentSummary, Vec<Relation>)>, MinerError> {
    let rep_spec = enumerate_monomials(rep, coords);
    let rep_kernel = component_kernel(&rep_spec, config.primes[0], config.seed, config.oversample, config.budget)?;
    let mut members: Vec<([u32; 4], [usize; 4])> = Vec::new();
    for s in perms {
        let d = permute_degree(rep, s);
        if !members.iter().any(|m| m.0 == d) {
            members.push((d, *s));
        }
    }
    members.sort();
    let lower0 = lower_span(&rep_spec, known, rep_kernel.prime, rep_kernel.dim());
    let minimal = rep_kernel.dim() - lower0.rank();
    let mut out = Vec::new();
    if minimal == 0 {
        for (d, _) in members {
            let monomials = if d == *rep { rep_spec.len() } else { count_monomials(&d, coords) as usize };
            out.push((
                ComponentSummary { multidegree: d, monomials, kernel_dim: rep_kernel.dim(), lower_rank: lower0.rank(), minimal },
                Vec::new(),
            ));
        }
        return Ok(out);
    }
    let mut kernels_rep = vec![rep_kernel];
    for &p in &config.primes[1..] {
        kernels_rep.push(component_kernel(&rep_spec, p, config.seed, config.oversample, config.budget)?);
    }
    for (d, s) in members {
        let spec = enumerate_monomials(&d, coords);
        let ks: Vec<ComponentKernel> = kernels_rep.iter().map(|k| permute_kernel(k, &rep_spec, &spec, &s)).collect();
        out.push(mine_component(&spec, known, Some(ks), config)?);
    }
    Ok(out)
}

/// One row of the published generator table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub id: u32,
    pub size_c: usize,
    pub deg_c: u32,
    pub size_a: usize,
    pub multidegree: [u32; 4],
}

fn perms_lex(base: [u32; 4]) -> Vec<[u32; 4]> {
    let mut v: Vec<[u32; 4]> = s4().iter().map(|s| permute_degree(&base, s)).collect();
    v.sort();
    v.dedup();
    v
}

/// The 65 minimal generators as published: term counts in cycle-sum and
/// minor coordinates, cycle-sum degree and multidegree.
pub fn reference_table() -> Vec<TableRow> {
    let groups: Vec<(usize, u32, usize, Vec<[u32; 4]>)> = vec![
        (32, 8, 5234, perms_lex([4, 5, 5, 5])),
        (42, 9, 4912, perms_lex([4, 4, 6, 6])),
        (80, 9, 5126, perms_lex([4, 5, 5, 6])),
        (116, 9, 5656, vec![[5, 5, 5, 5]; 3]),
        (91, 10, 6088, perms_lex([3, 6, 6, 6])),
        (834, 11, 5779, perms_lex([5, 5, 5, 7])),
        (163, 10, 5234, perms_lex([4, 5, 5, 7])),
        (254, 10, 5558, vec![[4, 5, 6, 6], [4, 6, 5, 6], [4, 6, 6, 5]]),
        (214, 10, 6716, vec![[5, 4, 6, 6], [5, 6, 4, 6], [5, 6, 6, 4]]),
        (254, 10, 5558, vec![[6, 4, 5, 6], [6, 4, 6, 5], [6, 5, 4, 6], [6, 5, 6, 4], [6, 6, 4, 5], [6, 6, 5, 4]]),
        (354, 10, 5993, vec![[5, 5, 5, 6], [5, 5, 6, 5], [5, 6, 5, 5]]),
        (364, 10, 8224, vec![[6, 5, 5, 5]]),
        (685, 11, 5915, vec![[4, 6, 6, 6], [6, 4, 6, 6], [6, 6, 4, 6], [6, 6, 6, 4]]),
    ];
    let mut out = Vec::new();
    for (size_c, deg_c, size_a, degs) in groups {
        for multidegree in degs {
            out.push(TableRow { id: out.len() as u32 + 1, size_c, deg_c, size_a, multidegree });
        }
    }
    out
}

/// Assigns table ids by multidegree, in order of appearance within each
/// multidegree.
fn assign_ids(rels: Vec<Relation>) -> Vec<(Option<u32>, Relation)> {
    let table = reference_table();
    let mut used = vec![false; table.len()];
    rels.into_iter()
        .map(|r| {
            let id = table.iter().position(|t| t.multidegree == r.multidegree).and_then(|start| {
                (start..table.len()).find(|&k| table[k].multidegree == r.multidegree && !used[k])
            });
            if let Some(k) = id {
                used[k] = true;
            }
            (id.map(|k| k as u32 + 1), r)
        })
        .collect()
}

/// One comparison line against the reference table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableComparison {
    pub id: u32,
    pub multidegree: [u32; 4],
    pub expected: (usize, u32, usize),
    pub found: Option<(usize, u32, usize)>,
}

impl TableComparison {
    pub fn matches(&self) -> bool {
        self.found == Some(self.expected)
    }
}

impl Census {
    pub fn total_minimal(&self) -> usize {
        self.components.iter().map(|c| c.minimal).sum()
    }

    /// Multidegrees with minimal generators and their counts.
    pub fn generator_degrees(&self) -> BTreeMap<[u32; 4], usize> {
        let mut m = BTreeMap::new();
        for c in self.components.iter().filter(|c| c.minimal > 0) {
            m.insert(c.multidegree, c.minimal);
        }
        m
    }

    /// Full records (with minor-coordinate forms) for every generator.
    /// Only meaningful in cycle-sum coordinates.
    pub fn records(&self) -> Result<Vec<GeneratorRecord>, MinerError> {
        self.generators
            .par_iter()
            .map(|(id, r)| {
                Ok(GeneratorRecord {
                    id: *id,
                    multidegree: r.multidegree.to_vec(),
                    poly_c: r.poly.clone(),
                    poly_a: r.minor_form().clone(),
                })
            })
            .collect()
    }

    /// Compares records with the reference table; rows at a multidegree
    /// with several generators are compared as multisets.
    pub fn compare(records: &[GeneratorRecord]) -> Vec<TableComparison> {
        let table = reference_table();
        let mut out = Vec::new();
        let mut by_degree: BTreeMap<Vec<u32>, Vec<(usize, u32, usize)>> = BTreeMap::new();
        for r in records {
            by_degree.entry(r.multidegree.clone()).or_default().push((r.size_c(), r.deg_c(), r.size_a()));
        }
        for row in &table {
            let pool = by_degree.entry(row.multidegree.to_vec()).or_default();
            let expected = (row.size_c, row.deg_c, row.size_a);
            let found = match pool.iter().position(|x| *x == expected) {
                Some(k) => Some(pool.remove(k)),
                None if !pool.is_empty() => Some(pool.remove(0)),
                None => None,
            };
            out.push(TableComparison { id: row.id, multidegree: row.multidegree, expected, found });
        }
        out
    }
}

/// Human-readable census table.
pub fn format_comparison(rows: &[TableComparison]) -> String {
    let mut s = String::from("id  multidegree   expected(C,degC,A)   found(C,degC,A)    status\n");
    for r in rows {
        let f = r.found.map_or("-".to_string(), |x| format!("{:?}", x));
        s.push_str(&format!(
            "{:<3} {:<13} {:<20} {:<18} {}\n",
            r.id,
            format!("{:?}", r.multidegree),
            format!("{:?}", r.expected),
            f,
            if r.matches() { "ok" } else { "MISMATCH" }
        ));
    }
    s
}

/// Lowest-degree relation of the cycle-sum variety outside its generators:
/// whether `f` lies in the ideal, tested modulo `p` by vanishing at random
/// points.
pub fn vanishes_mod_p(f: &IntPoly, coords: Coords, p: u64, seed: u64, count: usize) -> bool {
    let subsets = coords.subsets();
    let pts = sample_points(coords, count, p, seed);
    let fm: Vec<(Exponents, u64)> = f
        .terms()
        .iter()
        .filter_map(|(m, c)| monomial_to_exponents(coords, &subsets, m).map(|e| (e, reduce_bigint(c, p))))
        .collect();
    if fm.len() != f.len() {
        return false;
    }
    pts.iter().all(|pt| {
        fm.iter().fold(0u64, |acc, (e, c)| {
            let t = e.iter().enumerate().fold(*c, |t, (v, &x)| {
                (0..x).fold(t, |t, _| mul_mod(t, pt[v], p))
            });
            add_mod(acc, t, p)
        }) == 0
    })
}

/// Applies a permutation of `[4]` to a relation.
pub fn permute_relation(r: &Relation, coords: Coords, sigma: &[usize; 4]) -> Result<Relation, MinerError> {
    Relation::new(coords, apply_s4(&r.poly, sigma).normalized().0)
}

impl Relation {
    pub fn leading_is_one(&self) -> bool {
        self.poly.leading().is_some_and(|(_, c)| c.is_one())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::nanson::{nanson_minor, quotient_generator_g};

    #[test]
    fn enumeration_matches_count() {
        for d in [[1, 1, 1, 1], [2, 1, 3, 0], [4, 5, 5, 5], [3, 3, 2, 4]] {
            for coords in [Coords::Minors, Coords::CycleSums] {
                let spec = enumerate_monomials(&d, coords);
                assert_eq!(spec.len() as u64, count_monomials(&d, coords), "{d:?} {coords}");
                let mut sorted = spec.exponents.clone();
                sorted.sort();
                sorted.dedup();
                assert_eq!(sorted.len(), spec.len());
            }
        }
        assert_eq!(count_monomials(&[4, 5, 5, 5], Coords::CycleSums), 224);
        assert_eq!(count_monomials(&[7, 7, 7, 7], Coords::CycleSums), 1385);
    }

    #[test]
    fn monomials_descend() {
        let spec = enumerate_monomials(&[2, 2, 2, 2], Coords::CycleSums);
        for k in 1..spec.len() {
            assert!(spec.monomial(k - 1) > spec.monomial(k));
        }
    }

    #[test]
    fn nanson_minor_in_kernel() {
        let f = nanson_minor(1).unwrap();
        assert!(vanishes_mod_p(&f, Coords::CycleSums, DEFAULT_PRIME, 3, 5));
        assert!(!vanishes_mod_p(&quotient_generator_g(), Coords::CycleSums, DEFAULT_PRIME, 3, 5));
    }

    #[test]
    fn low_components_are_empty() {
        let cfg = MinerConfig::default();
        for d in [[3, 5, 5, 5], [4, 4, 5, 5], [2, 6, 6, 6]] {
            let spec = enumerate_monomials(&d, Coords::CycleSums);
            let k = component_kernel(&spec, DEFAULT_PRIME, cfg.seed, cfg.oversample, cfg.budget).unwrap();
            assert_eq!(k.dim(), 0, "{d:?}");
        }
    }

    #[test]
    fn first_generator_is_nanson_minor() {
        let cfg = MinerConfig::default();
        let spec = enumerate_monomials(&[4, 5, 5, 5], Coords::CycleSums);
        let (s, rels) = mine_component(&spec, &[], None, &cfg).unwrap();
        assert_eq!((s.kernel_dim, s.minimal), (1, 1));
        assert_eq!(rels[0].poly, nanson_minor(1).unwrap());
    }

    #[test]
    fn permuted_kernel_agrees() {
        let cfg = MinerConfig::default();
        let a = enumerate_monomials(&[3, 6, 6, 6], Coords::CycleSums);
        let sigma = [2, 3, 1, 4];
        let bd = permute_degree(&a.multidegree, &sigma);
        let b = enumerate_monomials(&bd, Coords::CycleSums);
        let ka = component_kernel(&a, DEFAULT_PRIME, 5, 20, cfg.budget).unwrap();
        let kb = component_kernel(&b, DEFAULT_PRIME, 5, 20, cfg.budget).unwrap();
        let moved = permute_kernel(&ka, &a, &b, &sigma);
        assert_eq!(moved.dim(), kb.dim());
        let mut eb = EchelonBasis::new(b.len(), DEFAULT_PRIME);
        for v in kb.basis {
            eb.insert(v);
        }
        for mut v in moved.basis {
            assert!(eb.reduce(&mut v));
        }
    }

    #[test]
    fn reference_table_shape() {
        let t = reference_table();
        assert_eq!(t.len(), 65);
        assert_eq!(t[0].multidegree, [4, 5, 5, 5]);
        assert_eq!(t[3].multidegree, [5, 5, 5, 4]);
        assert_eq!(t[29].multidegree, [5, 5, 5, 7]);
        assert_eq!(t[32].multidegree, [7, 5, 5, 5]);
        assert_eq!(t[60].size_a, 8224);
    }

    #[test]
    fn exact_points_lie_on_variety() {
        let pts = exact_points(Coords::CycleSums, 3, 9);
        assert!(vanishes_at(&nanson_minor(2).unwrap(), &pts));
    }
}
