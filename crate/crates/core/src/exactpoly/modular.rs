//! Prime-field arithmetic, dense modular elimination and rational lifting.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::PolyError;

/// Default 62-bit prime, `2^62 - 57`.
pub const DEFAULT_PRIME: u64 = 4_611_686_018_427_387_847;
/// Second default prime, `2^62 - 87`.
pub const SECOND_PRIME: u64 = 4_611_686_018_427_387_817;
/// Further primes for retries, `2^62 - 117` and `2^62 - 143`.
pub const SPARE_PRIMES: [u64; 2] = [4_611_686_018_427_387_787, 4_611_686_018_427_387_761];

#[inline]
pub fn add_mod(a: u64, b: u64, p: u64) -> u64 {
    let s = a + b;
    if s >= p {
        s - p
    } else {
        s
    }
}

#[inline]
pub fn sub_mod(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + p - b
    }
}

#[inline]
pub fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    r
}

/// Inverse of `a` modulo the prime `p`; `None` for `a ≡ 0`.
pub fn inv_mod(a: u64, p: u64) -> Option<u64> {
    let a = a % p;
    if a == 0 {
        return None;
    }
    let (mut t, mut new_t) = (0i128, 1i128);
    let (mut r, mut new_r) = (p as i128, a as i128);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    if t < 0 {
        t += p as i128;
    }
    Some(t as u64)
}

pub fn reduce_i128(n: i128, p: u64) -> u64 {
    let r = n.rem_euclid(p as i128);
    r as u64
}

pub fn reduce_bigint(n: &BigInt, p: u64) -> u64 {
    let r = n.mod_floor(&BigInt::from(p));
    r.to_u64().expect("residue fits in u64")
}

/// Reduces a rational modulo `p`; `None` if `p` divides the denominator.
pub fn reduce_rational(q: &BigRational, p: u64) -> Option<u64> {
    let n = reduce_bigint(q.numer(), p);
    let d = reduce_bigint(q.denom(), p);
    inv_mod(d, p).map(|di| mul_mod(n, di, p))
}

/// Multiplication by a fixed factor using a precomputed quotient
/// (Shoup's trick). Requires `p < 2^63`.
#[derive(Clone, Copy)]
struct FixedMul {
    w: u64,
    w_shoup: u64,
    p: u64,
}

impl FixedMul {
    #[inline]
    fn new(w: u64, p: u64) -> Self {
        let w_shoup = (((w as u128) << 64) / p as u128) as u64;
        FixedMul { w, w_shoup, p }
    }

    #[inline]
    fn mul(&self, x: u64) -> u64 {
        let q = ((self.w_shoup as u128 * x as u128) >> 64) as u64;
        let r = self.w.wrapping_mul(x).wrapping_sub(q.wrapping_mul(self.p));
        if r >= self.p {
            r - self.p
        } else {
            r
        }
    }
}

/// Dense row-major matrix over `GF(p)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModularMatrix {
    rows: usize,
    cols: usize,
    p: u64,
    data: Vec<u64>,
}

/// Result of [`ModularMatrix::kernel`].
#[derive(Clone, Debug)]
pub struct KernelResult {
    pub rank: usize,
    /// Pivot columns of the row-reduced matrix, increasing.
    pub pivots: Vec<usize>,
    /// One basis vector per free column; vector `k` has a 1 at the `k`-th
    /// free column and 0 at every other free column.
    pub basis: Vec<Vec<u64>>,
}

impl ModularMatrix {
    pub fn zeros(rows: usize, cols: usize, p: u64) -> Self {
        assert!(p > 2 && p < (1u64 << 63), "modulus must be an odd prime below 2^63");
        ModularMatrix { rows, cols, p, data: vec![0; rows * cols] }
    }

    /// Builds from rows of residues (each reduced mod `p`).
    pub fn from_rows(rows: &[Vec<u64>], cols: usize, p: u64) -> Self {
        let mut m = Self::zeros(rows.len(), cols, p);
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.len(), cols);
            for (j, &x) in r.iter().enumerate() {
                m.data[i * cols + j] = x % p;
            }
        }
        m
    }

    pub fn from_i64_rows(rows: &[Vec<i64>], p: u64) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let red: Vec<Vec<u64>> =
            rows.iter().map(|r| r.iter().map(|&x| reduce_i128(x as i128, p)).collect()).collect();
        Self::from_rows(&red, cols, p)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: u64) {
        self.data[i * self.cols + j] = v % self.p;
    }

    pub fn row(&self, i: usize) -> &[u64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_mut(&mut self, i: usize) -> &mut [u64] {
        let c = self.cols;
        &mut self.data[i * c..(i + 1) * c]
    }

    /// `M · v` over `GF(p)`.
    pub fn mul_vec(&self, v: &[u64]) -> Vec<u64> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                self.row(i).iter().zip(v).fold(0u64, |acc, (&a, &b)| add_mod(acc, mul_mod(a, b, self.p), self.p))
            })
            .collect()
    }

    /// In-place reduced row echelon form. Pivots are chosen column by
    /// column, left to right, taking the lowest-index row with a nonzero
    /// entry. Returns the pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let (rows, cols, p) = (self.rows, self.cols, self.p);
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(pr) = (r..rows).find(|&i| self.data[i * cols + c] != 0) else {
                continue;
            };
            if pr != r {
                for j in c..cols {
                    self.data.swap(pr * cols + j, r * cols + j);
                }
            }
            let inv = inv_mod(self.data[r * cols + c], p).unwrap();
            let fm = FixedMul::new(inv, p);
            for x in &mut self.data[r * cols + c..(r + 1) * cols] {
                *x = fm.mul(*x);
            }
            let (before, rest) = self.data.split_at_mut(r * cols);
            let (prow, after) = rest.split_at_mut(cols);
            let prow = &prow[c..];
            let eliminate = |row: &mut [u64]| {
                let f = row[c];
                if f == 0 {
                    return;
                }
                let fm = FixedMul::new(p - f, p);
                for (x, &y) in row[c..].iter_mut().zip(prow) {
                    if y != 0 {
                        *x = add_mod(*x, fm.mul(y), p);
                    }
                }
            };
            for row in before.chunks_exact_mut(cols) {
                eliminate(row);
            }
            for row in after.chunks_exact_mut(cols) {
                eliminate(row);
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().rref().len()
    }

    /// Nullspace basis of `M` (right kernel) and rank.
    pub fn kernel(&self) -> KernelResult {
        let mut m = self.clone();
        let pivots = m.rref();
        let p = self.p;
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        let mut basis = Vec::new();
        for f in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![0u64; self.cols];
            v[f] = 1;
            for (r, &pc) in pivots.iter().enumerate() {
                let x = m.get(r, f);
                v[pc] = if x == 0 { 0 } else { p - x };
            }
            basis.push(v);
        }
        KernelResult { rank: pivots.len(), pivots, basis }
    }
}

/// Echelon basis maintained incrementally over `GF(p)`, for dense vectors.
#[derive(Clone, Debug)]
pub struct EchelonBasis {
    p: u64,
    dim: usize,
    /// Rows in reduced form, each with a 1 at its pivot.
    rows: Vec<(usize, Vec<u64>)>,
}

impl EchelonBasis {
    pub fn new(dim: usize, p: u64) -> Self {
        EchelonBasis { p, dim, rows: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the basis in place; returns whether it became zero.
    pub fn reduce(&self, v: &mut [u64]) -> bool {
        let p = self.p;
        for (pc, row) in &self.rows {
            let f = v[*pc];
            if f != 0 {
                let fm = FixedMul::new(p - f, p);
                for (x, &y) in v.iter_mut().zip(row) {
                    if y != 0 {
                        *x = add_mod(*x, fm.mul(y), p);
                    }
                }
            }
        }
        v.iter().all(|&x| x == 0)
    }

    /// Inserts `v` if independent; returns true when the rank grew.
    pub fn insert(&mut self, mut v: Vec<u64>) -> bool {
        assert_eq!(v.len(), self.dim);
        if self.reduce(&mut v) {
            return false;
        }
        let p = self.p;
        let pc = v.iter().position(|&x| x != 0).unwrap();
        let fm = FixedMul::new(inv_mod(v[pc], p).unwrap(), p);
        for x in v.iter_mut() {
            *x = fm.mul(*x);
        }
        for (_, row) in self.rows.iter_mut() {
            let f = row[pc];
            if f != 0 {
                let fm = FixedMul::new(p - f, p);
                for (x, &y) in row.iter_mut().zip(&v) {
                    if y != 0 {
                        *x = add_mod(*x, fm.mul(y), p);
                    }
                }
            }
        }
        self.rows.push((pc, v));
        true
    }

    /// Basis rows sorted by pivot (a reduced row echelon form).
    pub fn rref_rows(&self) -> Vec<(usize, Vec<u64>)> {
        let mut r = self.rows.clone();
        r.sort_by_key(|x| x.0);
        r
    }
}

/// Chinese remaindering of residues modulo pairwise coprime moduli.
pub fn crt(residues: &[u64], moduli: &[u64]) -> (BigInt, BigInt) {
    assert_eq!(residues.len(), moduli.len());
    let mut x = BigInt::zero();
    let mut m = BigInt::one();
    for (&r, &p) in residues.iter().zip(moduli) {
        let pb = BigInt::from(p);
        // x + m * t ≡ r (mod p)
        let xm = reduce_bigint(&x, p);
        let mm = reduce_bigint(&m, p);
        let t = mul_mod(sub_mod(r % p, xm, p), inv_mod(mm, p).expect("moduli coprime"), p);
        x += &m * BigInt::from(t);
        m *= pb;
    }
    (x, m)
}

/// Rational number reconstruction: finds `n/d` with `|n|, d <= sqrt(m/2)`
/// and `n ≡ a d (mod m)`.
pub fn rational_reconstruct(a: &BigInt, m: &BigInt) -> Option<BigRational> {
    let bound = (m / BigInt::from(2)).sqrt();
    let (mut r0, mut r1) = (m.clone(), a.mod_floor(m));
    let (mut t0, mut t1) = (BigInt::zero(), BigInt::one());
    while r1 > bound {
        let q = &r0 / &r1;
        let r2 = &r0 - &q * &r1;
        let t2 = &t0 - &q * &t1;
        r0 = std::mem::replace(&mut r1, r2);
        t0 = std::mem::replace(&mut t1, t2);
    }
    if t1.is_zero() || t1.abs() > bound {
        return None;
    }
    if r1.gcd(&t1) != BigInt::one() {
        return None;
    }
    let (n, d) = if t1.sign() == Sign::Minus { (-r1, -t1) } else { (r1, t1) };
    Some(BigRational::new(n, d))
}

/// Lifts vectors known modulo several primes to exact rationals.
///
/// Every input vector must be normalized identically (for example with a
/// 1 at the same pivot coordinate). The lifted vector is accepted only if
/// `verify` returns true; otherwise, or if reconstruction fails, an error is
/// returned so the caller can add primes.
pub fn rational_lift<F>(vectors: &[Vec<u64>], primes: &[u64], verify: F) -> Result<Vec<BigRational>, PolyError>
where
    F: Fn(&[BigRational]) -> bool,
{
    if vectors.len() < 2 || vectors.len() != primes.len() {
        return Err(PolyError::Lift("need one vector per prime and at least two primes".into()));
    }
    let len = vectors[0].len();
    if vectors.iter().any(|v| v.len() != len) {
        return Err(PolyError::Lift("vectors of unequal length".into()));
    }
    let mut out = Vec::with_capacity(len);
    for k in 0..len {
        let res: Vec<u64> = vectors.iter().map(|v| v[k]).collect();
        let (x, m) = crt(&res, primes);
        let q = rational_reconstruct(&x, &m)
            .ok_or_else(|| PolyError::Lift(format!("reconstruction failed at coordinate {k}")))?;
        out.push(q);
    }
    if !verify(&out) {
        return Err(PolyError::Lift("lifted vector failed verification".into()));
    }
    Ok(out)
}

/// Clears denominators and divides by the content, returning integers.
pub fn primitive_integer_vector(v: &[BigRational]) -> Vec<BigInt> {
    let mut l = BigInt::one();
    for q in v {
        l = l.lcm(q.denom());
    }
    let ints: Vec<BigInt> = v.iter().map(|q| (q * BigRational::from_integer(l.clone())).to_integer()).collect();
    let mut g = BigInt::zero();
    for x in &ints {
        g = g.gcd(x);
    }
    if g.is_zero() {
        return ints;
    }
    ints.into_iter().map(|x| x / &g).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    const P: u64 = DEFAULT_PRIME;

    #[test]
    fn fixed_mul_matches_u128() {
        let vals = [0, 1, 2, P - 1, P / 2, 123_456_789_012_345];
        for &w in &vals {
            let fm = FixedMul::new(w, P);
            for &x in &vals {
                assert_eq!(fm.mul(x), mul_mod(w, x, P));
            }
        }
    }

    #[test]
    fn identity_has_trivial_kernel() {
        let m = ModularMatrix::from_i64_rows(&[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]], P);
        let k = m.kernel();
        assert_eq!(k.rank, 3);
        assert!(k.basis.is_empty());
    }

    #[test]
    fn rank_one_kernel() {
        let m = ModularMatrix::from_i64_rows(&[vec![1, 1], vec![2, 2]], P);
        let k = m.kernel();
        assert_eq!(k.rank, 1);
        assert_eq!(k.basis, vec![vec![P - 1, 1]]);
        // normalized to a leading 1 this is (1, p - 1)
        let v = &k.basis[0];
        let inv = inv_mod(v[0], P).unwrap();
        assert_eq!([mul_mod(v[0], inv, P), mul_mod(v[1], inv, P)], [1, P - 1]);
    }

    #[test]
    fn lift_sign_pattern() {
        let primes = [DEFAULT_PRIME, SECOND_PRIME];
        let vs: Vec<Vec<u64>> = primes.iter().map(|&p| vec![1, p - 1]).collect();
        let lifted = rational_lift(&vs, &primes, |_| true).unwrap();
        assert_eq!(lifted, vec![BigRational::from_integer(1.into()), BigRational::from_integer((-1).into())]);
    }

    #[test]
    fn lift_fraction() {
        let primes = [DEFAULT_PRIME, SECOND_PRIME];
        let q = BigRational::new(BigInt::from(-22), BigInt::from(7));
        let vs: Vec<Vec<u64>> = primes.iter().map(|&p| vec![reduce_rational(&q, p).unwrap()]).collect();
        let lifted = rational_lift(&vs, &primes, |_| true).unwrap();
        assert_eq!(lifted[0], q);
    }

    #[test]
    fn echelon_insert() {
        let mut e = EchelonBasis::new(3, 101);
        assert!(e.insert(vec![1, 2, 3]));
        assert!(e.insert(vec![2, 4, 7]));
        assert!(!e.insert(vec![3, 6, 10]));
        assert_eq!(e.rank(), 2);
    }
}
