//! Cycles of a permutation as directed graphs, and decompositions of
//! unions of cycles into shorter cycles.
//!
//! A product of cycle monomials `c_π = Π x_{i π(i)}` is encoded by the
//! multiset of its directed edges, so writing a product of long cycles as a
//! product of shorter ones is an edge-multiset decomposition.

use std::collections::{BTreeMap, HashSet};
use std::fmt;

use num_bigint::BigInt;
use thiserror::Error;

use crate::exactpoly::{IntPoly, Monomial, Var};
use crate::subset::SubsetIndex;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CycleError {
    #[error("invalid cycle word {0:?}")]
    InvalidCycle(Vec<u8>),
    #[error("key claim hypotheses not met")]
    KeyClaimHypotheses,
    #[error("paper case analysis violated")]
    CaseAnalysisViolated,
    #[error("expected 2 or 3 cycles, got {0}")]
    BadArity(usize),
    #[error("cycles must be distinct, of equal length at least 3, with equal support")]
    NotEligible,
    #[error("edge multiset is unbalanced at vertex {0}")]
    Unbalanced(u8),
    #[error("edge multiset has {0} edges, above the search limit {1}")]
    TooManyEdges(u32, u32),
    #[error("edge multiset not conserved by decomposition")]
    EdgesNotConserved,
    #[error("degree {d} out of range 1..={max}")]
    DegreeOutOfRange { d: usize, max: usize },
    #[error("support must have at least 3 elements")]
    SupportTooSmall,
}

/// A cyclic permutation, stored rotated so that the word starts at its
/// minimum vertex. Vertices are 1-based.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cycle {
    word: Vec<u8>,
}

impl Cycle {
    pub fn new<I: IntoIterator<Item = u8>>(word: I) -> Result<Self, CycleError> {
        let word: Vec<u8> = word.into_iter().collect();
        let distinct: HashSet<u8> = word.iter().copied().collect();
        if word.len() < 2 || distinct.len() != word.len() || word.iter().any(|&v| v == 0 || v > 8) {
            return Err(CycleError::InvalidCycle(word));
        }
        let m = word.iter().enumerate().min_by_key(|(_, &v)| v).unwrap().0;
        let mut w = word[m..].to_vec();
        w.extend_from_slice(&word[..m]);
        Ok(Cycle { word: w })
    }

    /// Parses `(1 2 3)` or `(123)`.
    pub fn parse(s: &str) -> Result<Self, CycleError> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
        let digits: Vec<u8> = inner.chars().filter_map(|c| c.to_digit(10).map(|d| d as u8)).collect();
        Cycle::new(digits)
    }

    pub fn word(&self) -> &[u8] {
        &self.word
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn support(&self) -> SubsetIndex {
        SubsetIndex::from_elements(self.word.iter().map(|&v| v as usize))
    }

    pub fn successor(&self, v: u8) -> Option<u8> {
        let i = self.word.iter().position(|&x| x == v)?;
        Some(self.word[(i + 1) % self.word.len()])
    }

    pub fn edges(&self) -> Vec<(u8, u8)> {
        (0..self.word.len()).map(|i| (self.word[i], self.word[(i + 1) % self.word.len()])).collect()
    }

    /// The cycle monomial `Π x_{i π(i)}`.
    pub fn monomial(&self) -> Monomial {
        Monomial::from_pairs(self.edges().into_iter().map(|(i, j)| (Var::x(i as usize, j as usize), 1)))
    }

    pub fn poly(&self) -> IntPoly {
        IntPoly::monomial_in(self.monomial(), BigInt::from(1), ())
    }

    /// Applies a vertex map given as `map[v]` for 1-based `v`.
    fn relabel(&self, map: &[u8; 9]) -> Cycle {
        Cycle::new(self.word.iter().map(|&v| map[v as usize])).expect("relabel of a valid cycle")
    }

    /// Canonical order: support in subset order, then word.
    pub fn canonical_cmp(&self, o: &Cycle) -> std::cmp::Ordering {
        self.support().cmp(&o.support()).then_with(|| self.word.cmp(&o.word))
    }
}

impl fmt::Display for Cycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.word.iter().map(|v| v.to_string()).collect();
        write!(f, "({})", parts.join(" "))
    }
}

impl fmt::Debug for Cycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// All cycles with exactly the given support, lexicographic by word.
pub fn cycles_on(support: SubsetIndex) -> Vec<Cycle> {
    let el: Vec<u8> = support.elements().into_iter().map(|v| v as u8).collect();
    if el.len() < 2 {
        return Vec::new();
    }
    let mut rest: Vec<u8> = el[1..].to_vec();
    let mut out = Vec::new();
    let mut perm: Vec<usize> = (0..rest.len()).collect();
    loop {
        let mut w = vec![el[0]];
        w.extend(perm.iter().map(|&i| rest[i]));
        out.push(Cycle { word: w });
        if !crate::exactpoly::next_permutation(&mut perm) {
            break;
        }
    }
    rest.clear();
    out
}

/// All cycles of length at least 2 on `[n]` in canonical order.
pub fn all_cycles(n: usize) -> Vec<Cycle> {
    SubsetIndex::all(n).into_iter().flat_map(cycles_on).collect()
}

/// Certificate text: `(1 2 3)(1 2 4)(3 4)`.
pub fn format_cycles(cs: &[Cycle]) -> String {
    cs.iter().map(|c| c.to_string()).collect()
}

/// A directed multigraph on at most 8 vertices without loops.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct CycleGraph {
    mult: [[u8; 9]; 9],
}

impl CycleGraph {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_cycles<'a, I: IntoIterator<Item = &'a Cycle>>(cycles: I) -> Self {
        let mut g = CycleGraph::new();
        for c in cycles {
            g.add_cycle(c);
        }
        g
    }

    pub fn add_edge(&mut self, i: u8, j: u8) {
        assert!(i != j && (1..=8).contains(&i) && (1..=8).contains(&j));
        self.mult[i as usize][j as usize] += 1;
    }

    pub fn add_cycle(&mut self, c: &Cycle) {
        for (i, j) in c.edges() {
            self.add_edge(i, j);
        }
    }

    fn remove_cycle(&mut self, c: &Cycle) {
        for (i, j) in c.edges() {
            self.mult[i as usize][j as usize] -= 1;
        }
    }

    fn contains_cycle(&self, c: &Cycle) -> bool {
        let mut need = [[0u8; 9]; 9];
        for (i, j) in c.edges() {
            need[i as usize][j as usize] += 1;
        }
        (1..9).all(|i| (1..9).all(|j| need[i][j] <= self.mult[i][j]))
    }

    pub fn multiplicity(&self, i: u8, j: u8) -> u8 {
        self.mult[i as usize][j as usize]
    }

    pub fn edge_count(&self) -> u32 {
        self.mult.iter().flatten().map(|&m| m as u32).sum()
    }

    /// Edges with multiplicity, sorted.
    pub fn edges(&self) -> BTreeMap<(u8, u8), u8> {
        let mut out = BTreeMap::new();
        for i in 1..9u8 {
            for j in 1..9u8 {
                let m = self.mult[i as usize][j as usize];
                if m > 0 {
                    out.insert((i, j), m);
                }
            }
        }
        out
    }

    pub fn check_balanced(&self) -> Result<(), CycleError> {
        for v in 1..9 {
            let outd: u32 = (1..9).map(|j| self.mult[v][j] as u32).sum();
            let ind: u32 = (1..9).map(|i| self.mult[i][v] as u32).sum();
            if outd != ind {
                return Err(CycleError::Unbalanced(v as u8));
            }
        }
        Ok(())
    }

    fn vertices(&self) -> SubsetIndex {
        let mut s = SubsetIndex::from_elements([]);
        for i in 1..9 {
            for j in 1..9 {
                if self.mult[i][j] > 0 {
                    s = s.insert(i).insert(j);
                }
            }
        }
        s
    }

    /// The monomial `Π x_ij^{mult}`.
    pub fn monomial(&self) -> Monomial {
        Monomial::from_pairs(self.edges().into_iter().map(|((i, j), m)| (Var::x(i as usize, j as usize), m as u16)))
    }
}

impl fmt::Debug for CycleGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.edges()).finish()
    }
}

fn check_conserved(input: &[&Cycle], output: &[Cycle]) -> Result<(), CycleError> {
    if CycleGraph::from_cycles(input.iter().copied()) != CycleGraph::from_cycles(output) {
        return Err(CycleError::EdgesNotConserved);
    }
    Ok(())
}

/// The key-claim algorithm in normalized labels: `g1 = (1 2 … k)` and
/// `g2 = (1 s …)`. Returns the cycles `C_1, C_2, …`.
fn key_claim_normalized(k: u8, g2: &Cycle) -> Vec<Cycle> {
    let s = g2.successor(1).unwrap();
    let mut out = Vec::new();
    let mut c1 = vec![1u8];
    c1.extend(s..=k);
    out.push(Cycle::new(c1).unwrap());
    let mut v = s;
    loop {
        // blue path from v until a vertex below v
        let mut path = vec![v];
        let mut cur = g2.successor(v).unwrap();
        while cur >= v {
            path.push(cur);
            cur = g2.successor(cur).unwrap();
        }
        let next = cur;
        // red path next -> next+1 -> ... -> v, closing the cycle
        path.extend(next..v);
        out.push(Cycle::new(path).unwrap());
        if next == 1 {
            break;
        }
        v = next;
    }
    out
}

/// Decomposes the union of a `k`-cycle `g1` and a cycle `g2` on a subset of
/// its support, by relabeling so that `g1 = (1 2 … k)` and applying the
/// key-claim algorithm. Rotations of `g1` are tried in order.
pub fn union_decompose(g1: &Cycle, g2: &Cycle) -> Result<Vec<Cycle>, CycleError> {
    let k = g1.len();
    if k < 3 || g2.len() > k || !g2.support().is_subset_of(g1.support()) || g1 == g2 {
        return Err(CycleError::KeyClaimHypotheses);
    }
    for r in 0..k {
        let mut fwd = [0u8; 9];
        let mut back = [0u8; 9];
        for t in 0..k {
            let old = g1.word[(r + t) % k];
            fwd[old as usize] = t as u8 + 1;
            back[t + 1] = old;
        }
        let h2 = g2.relabel(&fwd);
        if h2.word[0] != 1 {
            continue;
        }
        let s = h2.word[1];
        if s == 2 {
            continue;
        }
        let excluded: Vec<u8> = std::iter::once(1).chain(s..=k as u8).collect();
        if h2.word == excluded {
            continue;
        }
        let pieces = key_claim_normalized(k as u8, &h2);
        let out: Vec<Cycle> = pieces.iter().map(|c| c.relabel(&back)).collect();
        check_conserved(&[g1, g2], &out)?;
        if out.iter().any(|c| c.len() >= k) {
            return Err(CycleError::CaseAnalysisViolated);
        }
        return Ok(out);
    }
    Err(CycleError::KeyClaimHypotheses)
}

/// Writes a product of 2 or 3 distinct `k`-cycles with equal support as a
/// product of strictly shorter cycles.
pub fn product_decompose(cycles: &[Cycle]) -> Result<Vec<Cycle>, CycleError> {
    let m = cycles.len();
    if !(2..=3).contains(&m) {
        return Err(CycleError::BadArity(m));
    }
    let k = cycles[0].len();
    let sup = cycles[0].support();
    let distinct: HashSet<&Cycle> = cycles.iter().collect();
    if k < 3 || distinct.len() != m || cycles.iter().any(|c| c.len() != k || c.support() != sup) {
        return Err(CycleError::NotEligible);
    }
    let first = union_decompose(&cycles[0], &cycles[1]).map_err(|e| match e {
        CycleError::KeyClaimHypotheses => CycleError::CaseAnalysisViolated,
        e => e,
    })?;
    if m == 2 {
        return Ok(first);
    }
    let g3 = &cycles[2];
    for (i, ci) in first.iter().enumerate() {
        if let Ok(rep) = union_decompose(g3, ci) {
            let mut out: Vec<Cycle> = first.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, c)| c.clone()).collect();
            out.extend(rep);
            let inputs: Vec<&Cycle> = cycles.iter().collect();
            check_conserved(&inputs, &out)?;
            return Ok(out);
        }
    }
    Err(CycleError::CaseAnalysisViolated)
}

/// Maximum number of edges accepted by [`brute_force_decompose`].
pub const BRUTE_FORCE_EDGE_LIMIT: u32 = 24;

/// Exhaustive search for a decomposition of a balanced edge multiset into
/// cycles of length at most `maxlen`. The smallest remaining edge is always
/// covered first and candidate cycles are tried shortest-first, then
/// lexicographically, so the result is deterministic.
pub fn brute_force_decompose(g: &CycleGraph, maxlen: usize) -> Result<Option<Vec<Cycle>>, CycleError> {
    g.check_balanced()?;
    let e = g.edge_count();
    if e > BRUTE_FORCE_EDGE_LIMIT {
        return Err(CycleError::TooManyEdges(e, BRUTE_FORCE_EDGE_LIMIT));
    }
    let verts = g.vertices();
    let mut candidates: Vec<Cycle> = verts
        .subsets()
        .into_iter()
        .filter(|s| s.len() >= 2 && s.len() <= maxlen)
        .flat_map(cycles_on)
        .filter(|c| g.contains_cycle(c))
        .collect();
    candidates.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.word.cmp(&b.word)));
    let mut failed: HashSet<CycleGraph> = HashSet::new();
    let mut acc = Vec::new();
    let mut work = g.clone();
    if search(&mut work, &candidates, &mut acc, &mut failed) {
        Ok(Some(acc))
    } else {
        Ok(None)
    }
}

fn search(g: &mut CycleGraph, cands: &[Cycle], acc: &mut Vec<Cycle>, failed: &mut HashSet<CycleGraph>) -> bool {
    let Some((&(i, j), _)) = g.edges().iter().next() else {
        return true;
    };
    if failed.contains(g) {
        return false;
    }
    for c in cands {
        if c.edges().contains(&(i, j)) && g.contains_cycle(c) {
            g.remove_cycle(c);
            acc.push(c.clone());
            if search(g, cands, acc, failed) {
                return true;
            }
            acc.pop();
            g.add_cycle(c);
        }
    }
    failed.insert(g.clone());
    false
}

/// Certificate attached to an integrality coefficient.
#[derive(Clone, Debug, PartialEq)]
pub enum Certificate {
    /// `α_1 = -C_I`, with `C_I` written in principal-minor variables.
    CycleSumFormula(IntPoly),
    /// For every monomial of `α_d`: the cycles it is a product of, and a
    /// product of strictly shorter cycles with the same edges.
    Decompositions(Vec<(Vec<Cycle>, Vec<Cycle>)>),
}

/// `α_d = (-1)^d Σ c_{π_1} ⋯ c_{π_d}` over `d`-subsets of the cycles with
/// support `I`, the coefficients of `Π (z - c_π)`.
pub fn integrality_coefficients(i: SubsetIndex, d: usize) -> Result<(IntPoly, Certificate), CycleError> {
    let k = i.len();
    if k < 3 {
        return Err(CycleError::SupportTooSmall);
    }
    let cyc = cycles_on(i);
    let n = cyc.len();
    if d == 0 || d > n {
        return Err(CycleError::DegreeOutOfRange { d, max: n });
    }
    let sign = if d % 2 == 0 { 1 } else { -1 };
    let mut alpha = IntPoly::zero();
    let mut certs = Vec::new();
    let mut seen = HashSet::new();
    for combo in combinations(n, d) {
        let chosen: Vec<Cycle> = combo.iter().map(|&t| cyc[t].clone()).collect();
        let g = CycleGraph::from_cycles(&chosen);
        let mono = g.monomial();
        alpha = &alpha + &IntPoly::monomial_in(mono.clone(), BigInt::from(sign), ());
        if d == 1 || !seen.insert(mono) {
            continue;
        }
        let dec = if d <= 3 {
            product_decompose(&chosen)?
        } else {
            brute_force_decompose(&g, k - 1)?.ok_or(CycleError::CaseAnalysisViolated)?
        };
        let inputs: Vec<&Cycle> = chosen.iter().collect();
        check_conserved(&inputs, &dec)?;
        certs.push((chosen, dec));
    }
    if d == 1 {
        let f = crate::minor_maps::cycle_sum_in_minors(i);
        return Ok((alpha, Certificate::CycleSumFormula(f.neg())));
    }
    Ok((alpha, Certificate::Decompositions(certs)))
}

/// `d`-element subsets of `0..n` in lexicographic order.
pub(crate) fn combinations(n: usize, d: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(d);
    fn rec(start: usize, n: usize, d: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == d {
            out.push(cur.clone());
            return;
        }
        for t in start..n {
            if n - t < d - cur.len() {
                break;
            }
            cur.push(t);
            rec(t + 1, n, d, cur, out);
            cur.pop();
        }
    }
    rec(0, n, d, &mut cur, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(s: &str) -> Cycle {
        Cycle::parse(s).unwrap()
    }

    fn sorted(mut v: Vec<Cycle>) -> Vec<Cycle> {
        v.sort();
        v
    }

    #[test]
    fn canonical_rotation() {
        assert_eq!(c("(3 1 2)").word(), &[1, 2, 3]);
        assert_eq!(c("(2 1)").to_string(), "(1 2)");
        assert!(Cycle::new([1, 1]).is_err());
    }

    #[test]
    fn three_cycle_pair() {
        let out = union_decompose(&c("(123)"), &c("(132)")).unwrap();
        assert_eq!(sorted(out), sorted(vec![c("(12)"), c("(23)"), c("(13)")]));
    }

    #[test]
    fn four_cycle_pair_example() {
        let out = union_decompose(&c("(1234)"), &c("(1243)")).unwrap();
        assert_eq!(sorted(out), sorted(vec![c("(123)"), c("(124)"), c("(34)")]));
    }

    #[test]
    fn equal_cycles_rejected() {
        assert_eq!(union_decompose(&c("(123)"), &c("(123)")), Err(CycleError::KeyClaimHypotheses));
    }

    #[test]
    fn cycle_counts() {
        assert_eq!(cycles_on(SubsetIndex::full(4)).len(), 6);
        assert_eq!(all_cycles(4).len(), 20);
    }

    #[test]
    fn brute_force_examples() {
        let g = CycleGraph::from_cycles(&[c("(123)"), c("(132)")]);
        assert!(brute_force_decompose(&g, 2).unwrap().is_some());
        let g = CycleGraph::from_cycles(&[c("(1234)")]);
        assert_eq!(brute_force_decompose(&g, 3).unwrap(), None);
        let g = CycleGraph::from_cycles(&[c("(123)"), c("(124)")]);
        assert_eq!(brute_force_decompose(&g, 2).unwrap(), None);
        let mut u = CycleGraph::new();
        u.add_edge(1, 2);
        assert_eq!(brute_force_decompose(&u, 2), Err(CycleError::Unbalanced(1)));
    }

    #[test]
    fn alpha_small() {
        let (a2, cert) = integrality_coefficients(SubsetIndex::full(3), 2).unwrap();
        assert_eq!(a2, &c("(123)").poly() * &c("(132)").poly());
        match cert {
            Certificate::Decompositions(v) => {
                assert_eq!(v.len(), 1);
                assert_eq!(sorted(v[0].1.clone()), sorted(vec![c("(12)"), c("(23)"), c("(13)")]));
            }
            _ => panic!(),
        }
        assert!(integrality_coefficients(SubsetIndex::full(3), 3).is_err());
    }

    #[test]
    fn format_certificate() {
        assert_eq!(format_cycles(&[c("(123)"), c("(34)")]), "(1 2 3)(3 4)");
    }
}
