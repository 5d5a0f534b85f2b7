//! The Nanson relations: maximal minors of a 5 × 4 matrix of cycle-sums,
//! the quotient element `g`, and homogenization with respect to `A_∅`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exactpoly::{det_polymatrix, parse_int, Homogeneity, IntPoly, Monomial, PolyError, Universe, Var};
use crate::minor_maps::cycle_sum_in_minors;
use crate::subset::SubsetIndex;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum NansonError {
    #[error("total degree {0} exceeds homogenization target {1}")]
    DegreeExceedsTarget(u32, u32),
    #[error("polynomial is not homogeneous")]
    Inhomogeneous,
    #[error("row {0} out of range 1..=5")]
    BadRow(usize),
    #[error("bad record: {0}")]
    BadRecord(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

fn c(digits: &str) -> IntPoly {
    IntPoly::var(Var::c(SubsetIndex::parse_digits(digits).unwrap()))
}

fn pair(i: usize, j: usize) -> IntPoly {
    IntPoly::var(Var::c(SubsetIndex::from_elements([i, j])))
}

fn triple_without(i: usize) -> IntPoly {
    IntPoly::var(Var::c(SubsetIndex::full(4).remove(i)))
}

/// The 5 × 4 matrix in cycle-sum variables. Row `i ≤ 4` pairs
/// each 3-subset cycle-sum with a 2-subset one through vertex `i`; the last
/// column is `2 C_{[4]∖i} Π_{j≠i} C_ij + Π_{T∋i} C_T`.
pub fn nanson_matrix() -> Vec<Vec<IntPoly>> {
    // (3-set, partner of i) for the three columns
    let layout: [[(&str, usize); 3]; 4] = [
        [("123", 4), ("124", 3), ("134", 2)],
        [("124", 3), ("123", 4), ("234", 1)],
        [("134", 2), ("234", 1), ("123", 4)],
        [("234", 1), ("134", 2), ("124", 3)],
    ];
    let mut m = Vec::new();
    for (r, row) in layout.iter().enumerate() {
        let i = r + 1;
        let mut out: Vec<IntPoly> = row.iter().map(|&(t, j)| &c(t) * &pair(i, j)).collect();
        let others: Vec<usize> = (1..=4).filter(|&j| j != i).collect();
        let mut prod2 = triple_without(i).scale(&BigInt::from(2));
        for &j in &others {
            prod2 = &prod2 * &pair(i, j);
        }
        let mut prod3 = IntPoly::one();
        for &j in others.iter().rev() {
            prod3 = &prod3 * &triple_without(j);
        }
        out.push(&prod2 + &prod3);
        m.push(out);
    }
    m.push(vec![IntPoly::one(), IntPoly::one(), IntPoly::one(), c("1234")]);
    m
}

/// The 4 × 4 minor omitting row `row` (1-based), with content 1 and
/// positive leading coefficient.
pub fn nanson_minor(row: usize) -> Result<IntPoly, NansonError> {
    if !(1..=5).contains(&row) {
        return Err(NansonError::BadRow(row));
    }
    let m = nanson_matrix();
    let sub: Vec<Vec<IntPoly>> = m.into_iter().enumerate().filter(|(r, _)| *r + 1 != row).map(|(_, r)| r).collect();
    Ok(det_polymatrix(&sub, ())?.normalized().0)
}

/// `g`: the determinant of the first three rows and columns.
pub fn quotient_generator_g() -> IntPoly {
    let m = nanson_matrix();
    let sub: Vec<Vec<IntPoly>> = m.iter().take(3).map(|r| r[..3].to_vec()).collect();
    det_polymatrix(&sub, ()).unwrap().normalized().0
}

/// `C_I ↦` its expression in principal minors, for all `I ⊆ [4]`.
pub fn cycle_sum_assignment() -> BTreeMap<Var, IntPoly> {
    SubsetIndex::all(4).into_iter().filter(|s| !s.is_empty()).map(|s| (Var::c(s), cycle_sum_in_minors(s))).collect()
}

/// Rewrites a polynomial in cycle-sums in terms of principal minors.
pub fn to_minor_coordinates(f: &IntPoly) -> Result<IntPoly, NansonError> {
    Ok(f.substitute_partial(&cycle_sum_assignment())?)
}

/// One row of the generator census.
#[derive(Clone, Debug, PartialEq)]
pub struct GeneratorRecord {
    pub id: Option<u32>,
    pub multidegree: Vec<u32>,
    pub poly_c: IntPoly,
    pub poly_a: IntPoly,
}

#[derive(Serialize, Deserialize)]
struct RecordJson {
    id: Option<u32>,
    multidegree: Vec<u32>,
    #[serde(rename = "size_C")]
    size_c: usize,
    #[serde(rename = "deg_C")]
    deg_c: u32,
    #[serde(rename = "size_A")]
    size_a: usize,
    #[serde(rename = "poly_C")]
    poly_c: String,
    #[serde(rename = "poly_A")]
    poly_a: String,
}

impl GeneratorRecord {
    /// Builds a record from a cycle-sum polynomial; the minor form is
    /// derived by substitution.
    pub fn from_cycle_poly(id: Option<u32>, poly_c: IntPoly) -> Result<Self, NansonError> {
        let poly_c = poly_c.normalized().0;
        let multidegree = match poly_c.multidegree_of(4)? {
            Homogeneity::Homogeneous(d) => d,
            Homogeneity::Inhomogeneous(..) => return Err(NansonError::Inhomogeneous),
        };
        let poly_a = to_minor_coordinates(&poly_c)?;
        Ok(GeneratorRecord { id, multidegree, poly_c, poly_a })
    }

    pub fn size_c(&self) -> usize {
        self.poly_c.len()
    }

    pub fn deg_c(&self) -> u32 {
        self.poly_c.total_degree().unwrap_or(0)
    }

    pub fn size_a(&self) -> usize {
        self.poly_a.len()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&RecordJson {
            id: self.id,
            multidegree: self.multidegree.clone(),
            size_c: self.size_c(),
            deg_c: self.deg_c(),
            size_a: self.size_a(),
            poly_c: self.poly_c.to_string(),
            poly_a: self.poly_a.to_string(),
        })
        .expect("record serializes")
    }

    /// Parses a JSON line and checks the stored sizes against the
    /// polynomials.
    pub fn from_json(line: &str) -> Result<Self, NansonError> {
        let r: RecordJson = serde_json::from_str(line).map_err(|e| NansonError::BadRecord(e.to_string()))?;
        let rec = GeneratorRecord {
            id: r.id,
            multidegree: r.multidegree,
            poly_c: parse_int(&r.poly_c)?,
            poly_a: parse_int(&r.poly_a)?,
        };
        if rec.size_c() != r.size_c || rec.size_a() != r.size_a || rec.deg_c() != r.deg_c {
            return Err(NansonError::BadRecord("size fields disagree with polynomials".into()));
        }
        Ok(rec)
    }
}

/// The five maximal minors as records; the minor omitting row `r ≤ 4` has
/// id `r`, the one omitting the last row has no id.
pub fn nanson_minors() -> Result<Vec<GeneratorRecord>, NansonError> {
    (1..=5usize)
        .into_par_iter()
        .map(|row| {
            let f = nanson_minor(row)?;
            GeneratorRecord::from_cycle_poly((row <= 4).then_some(row as u32), f)
        })
        .collect()
}

/// Multiplies each term by `A_∅^(target - degree)`.
pub fn homogenize(f: &IntPoly, target: u32) -> Result<IntPoly, NansonError> {
    let empty = Var::a(SubsetIndex::from_elements([]));
    let mut terms = Vec::with_capacity(f.len());
    for (m, c) in f.terms() {
        let d = m.total_degree();
        if d > target {
            return Err(NansonError::DegreeExceedsTarget(d, target));
        }
        terms.push((m.mul(&Monomial::var_pow(empty, (target - d) as u16)), c.clone()));
    }
    Ok(IntPoly::from_terms(terms))
}

/// Sets `A_∅ = 1`.
pub fn dehomogenize(f: &IntPoly) -> IntPoly {
    let empty = Var::a(SubsetIndex::from_elements([]));
    IntPoly::from_terms(f.terms().iter().map(|(m, c)| (m.strip(empty).0, c.clone())).collect())
}

/// Whether every variable of `f` lies in `universe`.
pub fn in_universe(f: &IntPoly, universe: Universe) -> bool {
    f.variables().iter().all(|v| v.universe() == universe)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matrix_entries() {
        let m = nanson_matrix();
        assert_eq!(m[0][0], parse_int("C_{123}*C_{14}").unwrap());
        assert_eq!(m[3][3], parse_int("2*C_{123}*C_{14}*C_{24}*C_{34} + C_{234}*C_{134}*C_{124}").unwrap());
        assert_eq!(m[4][3], c("1234"));
        assert_eq!(m[4][0], IntPoly::one());
    }

    #[test]
    fn first_minor_shape() {
        let f = nanson_minor(1).unwrap();
        assert_eq!(f.len(), 32);
        assert_eq!(f.total_degree(), Some(8));
        assert_eq!(f.multidegree_of(4).unwrap(), Homogeneity::Homogeneous(vec![4, 5, 5, 5]));
    }

    #[test]
    fn last_minor_degree() {
        let f = nanson_minor(5).unwrap();
        assert_eq!(f.multidegree_of(4).unwrap(), Homogeneity::Homogeneous(vec![6, 6, 6, 6]));
    }

    #[test]
    fn minor_coordinates_sizes() {
        let recs = nanson_minors().unwrap();
        let sizes: Vec<(usize, usize)> = recs.iter().map(|r| (r.size_c(), r.size_a())).collect();
        assert_eq!(&sizes[..4], &[(32, 5234); 4]);
        assert_eq!(recs[0].multidegree, vec![4, 5, 5, 5]);
        assert_eq!(recs[0].poly_a.multidegree_of(4).unwrap(), Homogeneity::Homogeneous(vec![4, 5, 5, 5]));
    }

    #[test]
    fn g_degree() {
        assert_eq!(quotient_generator_g().multidegree_of(4).unwrap(), Homogeneity::Homogeneous(vec![4, 4, 4, 3]));
    }

    #[test]
    fn homogenize_example() {
        let f = parse_int("A_{1}*A_{2} - A_{12}").unwrap();
        let h = homogenize(&f, 2).unwrap();
        assert_eq!(h, parse_int("A_{1}*A_{2} - A_{}*A_{12}").unwrap());
        assert_eq!(dehomogenize(&h), f);
        assert!(homogenize(&f, 1).is_err());
    }

    #[test]
    fn record_json_round_trip() {
        let rec = GeneratorRecord::from_cycle_poly(Some(7), parse_int("C_{12}*C_{34} - C_{13}*C_{24}").unwrap()).unwrap();
        let back = GeneratorRecord::from_json(&rec.to_json()).unwrap();
        assert_eq!(back, rec);
    }
}
