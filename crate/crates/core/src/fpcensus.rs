//! Finite-field laboratory: exhaustive statistics over `Mat_n(F_p)`.
//!
//! Fiber counts of characteristic polynomials, the index-tail distribution,
//! Gaussian binomials, centralizer orders, and brute-force Fourier analysis
//! of subspace-restriction selectors. Everything within the guards is an
//! exhaustive enumeration; the only floating point is in the Fourier
//! coefficients themselves, whose true values are rationals with
//! denominator `p^(n^2)`, far above the zero-detection threshold.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::Ratio;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::exactalg::{
    factor_mod_p, inv_mod_u64, is_prime_u64, mul_mod_u64, squarefree_parts, ExactError, FpPoly,
};

/// Exhaustive-loop guards, in numbers of enumerated objects.
pub const MATRIX_ENUM_GUARD: u128 = 100_000_000;
pub const POLY_ENUM_GUARD: u128 = 10_000_000;
pub const DFT_POINT_GUARD: u128 = 1_000_000;

/// Relative threshold under which a Fourier coefficient counts as an exact
/// zero; true coefficients are multiples of `p^(-n^2)`, orders of magnitude
/// above it.
pub const DFT_ZERO_THRESHOLD: f64 = 1e-9;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FpCensusError {
    #[error("enumeration of {size} objects exceeds the guard {guard}")]
    GuardExceeded { size: u128, guard: u128 },
    #[error("expected a monic polynomial of degree {expected}, got degree {got}")]
    DegreeMismatch { expected: usize, got: usize },
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error(transparent)]
    Exact(#[from] ExactError),
}

pub type Result<T> = std::result::Result<T, FpCensusError>;

/// A square matrix over `F_p`, entries in `[0, p)`, row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FpMatrix {
    n: usize,
    p: u64,
    entries: Vec<u64>,
}

impl FpMatrix {
    pub fn new(n: usize, p: u64, entries: Vec<u64>) -> Result<Self> {
        if !is_prime_u64(p) {
            return Err(FpCensusError::Exact(ExactError::CompositeModulus(p)));
        }
        if entries.len() != n * n {
            return Err(FpCensusError::Dimension(format!(
                "expected {} entries, got {}",
                n * n,
                entries.len()
            )));
        }
        Ok(FpMatrix {
            n,
            p,
            entries: entries.into_iter().map(|e| e % p).collect(),
        })
    }

    pub fn zero(n: usize, p: u64) -> Self {
        FpMatrix {
            n,
            p,
            entries: vec![0; n * n],
        }
    }

    /// Decodes a matrix from its base-p index in the row-major enumeration.
    pub fn from_index(n: usize, p: u64, mut index: u128) -> Self {
        let mut entries = vec![0u64; n * n];
        for e in entries.iter_mut() {
            *e = (index % p as u128) as u64;
            index /= p as u128;
        }
        FpMatrix { n, p, entries }
    }

    pub fn index(&self) -> u128 {
        let mut acc = 0u128;
        for &e in self.entries.iter().rev() {
            acc = acc * self.p as u128 + e as u128;
        }
        acc
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn at(&self, i: usize, j: usize) -> u64 {
        self.entries[i * self.n + j]
    }

    pub fn entries(&self) -> &[u64] {
        &self.entries
    }

    /// Characteristic polynomial via principal minors: the coefficient of
    /// `x^(n-k)` is `(-1)^k` times the sum of the k-by-k principal minors.
    /// Division-free, so it works for every prime including p <= n.
    pub fn char_poly(&self) -> FpPoly {
        let n = self.n;
        let p = self.p;
        let mut coeffs = vec![0u64; n + 1];
        coeffs[n] = 1;
        for k in 1..=n {
            let mut sum = 0u64;
            let mut subset: Vec<usize> = (0..k).collect();
            loop {
                sum = (sum + self.principal_minor(&subset)) % p;
                // next k-subset of 0..n
                let mut i = k;
                loop {
                    if i == 0 {
                        subset.clear();
                        break;
                    }
                    i -= 1;
                    if subset[i] + (k - i) < n {
                        subset[i] += 1;
                        for j in (i + 1)..k {
                            subset[j] = subset[j - 1] + 1;
                        }
                        break;
                    }
                }
                if subset.is_empty() {
                    break;
                }
            }
            // (-1)^k e_k contributes to the x^(n-k) coefficient.
            coeffs[n - k] = if k % 2 == 1 { (p - sum) % p } else { sum };
        }
        FpPoly::new_unchecked_pub(p, coeffs)
    }

    fn principal_minor(&self, rows: &[usize]) -> u64 {
        let k = rows.len();
        let p = self.p;
        let mut m = vec![0u64; k * k];
        for (a, &i) in rows.iter().enumerate() {
            for (b, &j) in rows.iter().enumerate() {
                m[a * k + b] = self.at(i, j);
            }
        }
        det_mod_p(&mut m, k, p)
    }

    pub fn rank(&self) -> usize {
        let mut m = self.entries.clone();
        rank_mod_p(&mut m, self.n, self.n, self.p)
    }

    /// Trace of the product `self * other`, the pairing used by the Fourier
    /// analysis.
    pub fn trace_pairing(&self, other: &FpMatrix) -> u64 {
        debug_assert_eq!(self.n, other.n);
        let n = self.n;
        let p = self.p;
        let mut acc = 0u64;
        for i in 0..n {
            for k in 0..n {
                acc = (acc + mul_mod_u64(self.at(i, k), other.at(k, i), p)) % p;
            }
        }
        acc
    }

    pub fn mul(&self, other: &FpMatrix) -> FpMatrix {
        let n = self.n;
        let p = self.p;
        let mut out = FpMatrix::zero(n, p);
        for i in 0..n {
            for k in 0..n {
                let a = self.at(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    let idx = i * n + j;
                    out.entries[idx] = (out.entries[idx] + mul_mod_u64(a, other.at(k, j), p)) % p;
                }
            }
        }
        out
    }
}

fn det_mod_p(m: &mut [u64], k: usize, p: u64) -> u64 {
    let mut det = 1u64;
    for c in 0..k {
        let pivot = (c..k).find(|&r| m[r * k + c] != 0);
        let Some(pr) = pivot else { return 0 };
        if pr != c {
            for j in 0..k {
                m.swap(pr * k + j, c * k + j);
            }
            det = (p - det) % p;
        }
        let inv = inv_mod_u64(m[c * k + c], p);
        det = mul_mod_u64(det, m[c * k + c], p);
        for r in (c + 1)..k {
            if m[r * k + c] == 0 {
                continue;
            }
            let f = mul_mod_u64(m[r * k + c], inv, p);
            for j in c..k {
                let sub = mul_mod_u64(f, m[c * k + j], p);
                m[r * k + j] = (m[r * k + j] + p - sub) % p;
            }
        }
    }
    det
}

fn rank_mod_p(m: &mut [u64], rows: usize, cols: usize, p: u64) -> usize {
    let mut rank = 0usize;
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let pivot = (rank..rows).find(|&r| m[r * cols + c] != 0);
        let Some(pr) = pivot else { continue };
        if pr != rank {
            for j in 0..cols {
                m.swap(pr * cols + j, rank * cols + j);
            }
        }
        let inv = inv_mod_u64(m[rank * cols + c], p);
        for r in 0..rows {
            if r == rank || m[r * cols + c] == 0 {
                continue;
            }
            let f = mul_mod_u64(m[r * cols + c], inv, p);
            for j in 0..cols {
                let sub = mul_mod_u64(f, m[rank * cols + j], p);
                m[r * cols + j] = (m[r * cols + j] + p - sub) % p;
            }
        }
        rank += 1;
    }
    rank
}

fn checked_pow(base: u64, exp: u32, guard: u128) -> Result<u128> {
    let mut acc: u128 = 1;
    for _ in 0..exp {
        acc = acc.saturating_mul(base as u128);
        if acc > guard {
            return Err(FpCensusError::GuardExceeded {
                size: acc,
                guard,
            });
        }
    }
    Ok(acc)
}

/// Encodes a monic polynomial of degree n by its non-leading coefficients in
/// base p.
fn encode_monic(f: &FpPoly, n: usize) -> usize {
    let p = f.modulus();
    let mut acc = 0usize;
    for i in (0..n).rev() {
        acc = acc * p as usize + f.coeff(i) as usize;
    }
    acc
}

/// Histogram of characteristic polynomials over all of `Mat_n(F_p)`:
/// entry `e` counts the matrices whose monic characteristic polynomial has
/// coefficient encoding `e`.
pub fn charpoly_histogram(p: u64, n: usize) -> Result<Vec<u64>> {
    if !is_prime_u64(p) {
        return Err(FpCensusError::Exact(ExactError::CompositeModulus(p)));
    }
    let total = checked_pow(p, (n * n) as u32, MATRIX_ENUM_GUARD)?;
    let fibers = checked_pow(p, n as u32, POLY_ENUM_GUARD)?;
    let mut hist = vec![0u64; fibers as usize];
    let mut m = FpMatrix::zero(n, p);
    for idx in 0..total {
        if idx > 0 {
            // Incremental odometer on the entries.
            for e in m.entries.iter_mut() {
                *e += 1;
                if *e == p {
                    *e = 0;
                } else {
                    break;
                }
            }
        }
        let chi = m.char_poly();
        hist[encode_monic(&chi, n)] += 1;
    }
    Ok(hist)
}

/// Exact number of matrices in `Mat_n(F_p)` with the given monic
/// characteristic polynomial.
pub fn count_charpoly_fiber_fp(f: &FpPoly, n: usize) -> Result<u64> {
    if f.degree() != Some(n) || !f.is_monic() {
        return Err(FpCensusError::DegreeMismatch {
            expected: n,
            got: f.deg(),
        });
    }
    let hist = charpoly_histogram(f.modulus(), n)?;
    Ok(hist[encode_monic(f, n)])
}

/// One fiber row of the Reiner verification report.
#[derive(Debug, Clone, Serialize)]
pub struct FiberRow {
    pub poly: String,
    pub count: u64,
    /// count/q^(n^2-n) - 1 as an exact rational (numerator, denominator).
    pub deviation_num: String,
    pub deviation_den: String,
}

/// Exhaustive verification of the fiber-count equidistribution: every monic
/// degree-n polynomial over `F_q` is the characteristic polynomial of
/// `q^(n^2-n) (1 + O(1/q))` matrices.
#[derive(Debug, Clone, Serialize)]
pub struct ReinerReport {
    pub n: usize,
    pub q: u64,
    pub expected: String,
    /// max over f of |count/q^(n^2-n) - 1|, exact.
    pub max_deviation_num: String,
    pub max_deviation_den: String,
    pub fibers: Vec<FiberRow>,
}

impl ReinerReport {
    pub fn max_deviation(&self) -> Ratio<BigInt> {
        Ratio::new(
            self.max_deviation_num.parse().unwrap(),
            self.max_deviation_den.parse().unwrap(),
        )
    }
}

pub fn reiner_report(n: usize, q: u64) -> Result<ReinerReport> {
    let hist = charpoly_histogram(q, n)?;
    let expected = BigInt::from(q).pow((n * n - n) as u32);
    let mut max_dev: Ratio<BigInt> = Ratio::zero();
    let mut fibers = Vec::with_capacity(hist.len());
    for (e, &count) in hist.iter().enumerate() {
        let poly = decode_monic(q, n, e);
        let dev = (Ratio::from(BigInt::from(count)) / Ratio::from(expected.clone())
            - Ratio::one())
        .abs();
        if dev > max_dev {
            max_dev = dev.clone();
        }
        fibers.push(FiberRow {
            poly: poly.lift().to_string(),
            count,
            deviation_num: dev.numer().to_string(),
            deviation_den: dev.denom().to_string(),
        });
    }
    Ok(ReinerReport {
        n,
        q,
        expected: expected.to_string(),
        max_deviation_num: max_dev.numer().to_string(),
        max_deviation_den: max_dev.denom().to_string(),
        fibers,
    })
}

fn decode_monic(p: u64, n: usize, mut e: usize) -> FpPoly {
    let mut coeffs = vec![0u64; n + 1];
    for c in coeffs.iter_mut().take(n) {
        *c = (e % p as usize) as u64;
        e /= p as usize;
    }
    coeffs[n] = 1;
    FpPoly::new_unchecked_pub(p, coeffs)
}

/// Exact fraction of monic degree-n polynomials over `F_p` with index at
/// least `k`.
pub fn index_tail_fraction(p: u64, n: usize, k: usize) -> Result<Ratio<BigInt>> {
    if !is_prime_u64(p) {
        return Err(FpCensusError::Exact(ExactError::CompositeModulus(p)));
    }
    let total = checked_pow(p, n as u32, POLY_ENUM_GUARD)?;
    if k == 0 {
        return Ok(Ratio::one());
    }
    let mut hits = 0u64;
    for e in 0..total {
        let f = decode_monic(p, n, e as usize);
        // index = n - deg(radical); the squarefree parts are coprime.
        let rad_deg: usize = squarefree_parts(&f).iter().map(|(g, _)| g.deg()).sum();
        if n - rad_deg >= k {
            hits += 1;
        }
    }
    Ok(Ratio::new(BigInt::from(hits), BigInt::from(total)))
}

/// Number of k-dimensional subspaces of `F_q^n`, by the exact product
/// formula.
pub fn gaussian_binomial(n: usize, k: usize, q: u64) -> BigInt {
    assert!(k <= n, "gaussian binomial needs k <= n");
    let q = BigInt::from(q);
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..k {
        num *= q.pow((n - i) as u32) - 1;
        den *= q.pow((i + 1) as u32) - 1;
    }
    let (quot, rem) = num_integer::Integer::div_rem(&num, &den);
    debug_assert!(rem.is_zero());
    quot
}

/// Order of `(F_p[X]/g(X))^x` for squarefree monic `g`: the product of
/// `p^(deg f_i) - 1` over the irreducible factors.
pub fn unit_group_order(g: &FpPoly) -> Result<BigInt> {
    let fac = factor_mod_p(g)?;
    if !fac.is_squarefree() {
        return Err(FpCensusError::Exact(ExactError::NotSquarefree));
    }
    let p = BigInt::from(g.modulus());
    let mut acc = BigInt::one();
    for (f, _) in &fac.factors {
        acc *= p.pow(f.deg() as u32) - 1;
    }
    Ok(acc)
}

/// `|GL_k(F_p)| = prod_{i<k} (p^k - p^i)`.
pub fn gl_order(k: usize, p: u64) -> BigInt {
    let p = BigInt::from(p);
    let pk = p.pow(k as u32);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= &pk - p.pow(i as u32);
    }
    acc
}

/// A k-dimensional subspace of `F_p^n` in canonical reduced-row-echelon
/// form, one unique representative per subspace.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FpSubspace {
    p: u64,
    n: usize,
    /// k rows of length n in RREF.
    basis: Vec<Vec<u64>>,
}

impl FpSubspace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn ambient(&self) -> usize {
        self.n
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn basis(&self) -> &[Vec<u64>] {
        &self.basis
    }

    /// Membership of a vector.
    pub fn contains(&self, v: &[u64]) -> bool {
        let p = self.p;
        let mut v = v.to_vec();
        for row in &self.basis {
            let pivot = row.iter().position(|&x| x == 1).unwrap();
            // rows are RREF: pivot entry is the first nonzero and equals 1
            let c = v[pivot] % p;
            if c != 0 {
                for (x, r) in v.iter_mut().zip(row) {
                    *x = (*x + p - mul_mod_u64(c, *r, p)) % p;
                }
            }
        }
        v.iter().all(|&x| x % p == 0)
    }
}

/// Enumerates every k-dimensional subspace of `F_p^n` exactly once via
/// canonical RREF matrices: choose pivot columns, then fill the free
/// entries.
pub fn enumerate_subspaces(p: u64, n: usize, k: usize) -> Vec<FpSubspace> {
    assert!(k <= n);
    let mut out = Vec::new();
    let mut pivots: Vec<usize> = (0..k).collect();
    loop {
        // Free positions: row i, column j where j > pivots[i] and j is not a
        // pivot column.
        let free: Vec<(usize, usize)> = (0..k)
            .flat_map(|i| {
                let pivots = pivots.clone();
                (0..n).filter_map(move |j| {
                    if j > pivots[i] && !pivots.contains(&j) {
                        Some((i, j))
                    } else {
                        None
                    }
                })
            })
            .collect();
        let count = (p as u128).pow(free.len() as u32);
        for mut fill in 0..count {
            let mut basis = vec![vec![0u64; n]; k];
            for (i, &pc) in pivots.iter().enumerate() {
                basis[i][pc] = 1;
            }
            for &(i, j) in &free {
                basis[i][j] = (fill % p as u128) as u64;
                fill /= p as u128;
            }
            out.push(FpSubspace {
                p,
                n,
                basis,
            });
        }
        // Next pivot combination.
        let mut i = k;
        let mut advanced = false;
        while i > 0 {
            i -= 1;
            if pivots[i] + (k - i) < n {
                pivots[i] += 1;
                for j in (i + 1)..k {
                    pivots[j] = pivots[j - 1] + 1;
                }
                advanced = true;
                break;
            }
        }
        if !advanced {
            break;
        }
    }
    out
}

/// A selector: the 0/1 function on `Mat_n(F_p)` testing whether a matrix
/// restricts to the prescribed operator `C` on the prescribed subspace.
#[derive(Debug, Clone)]
pub struct SelectorSpec {
    pub lambda: FpSubspace,
    /// k-by-k action on the subspace basis: `A b_j = sum_i C_ij b_i`.
    pub c: FpMatrix,
}

impl SelectorSpec {
    pub fn new(lambda: FpSubspace, c: FpMatrix) -> Result<Self> {
        if c.dim() != lambda.dim() || c.modulus() != lambda.modulus() {
            return Err(FpCensusError::Dimension(
                "restriction matrix must be k x k over the same field".into(),
            ));
        }
        Ok(SelectorSpec { lambda, c })
    }

    /// Whether `a` restricts to `c` on the subspace.
    pub fn selects(&self, a: &FpMatrix) -> bool {
        let p = self.lambda.p;
        let n = self.lambda.n;
        let k = self.lambda.dim();
        for j in 0..k {
            // a * b_j must equal sum_i c[i][j] b_i
            let bj = &self.lambda.basis[j];
            for row in 0..n {
                let mut lhs = 0u64;
                for t in 0..n {
                    lhs = (lhs + mul_mod_u64(a.at(row, t), bj[t], p)) % p;
                }
                let mut rhs = 0u64;
                for i in 0..k {
                    rhs = (rhs + mul_mod_u64(self.c.at(i, j), self.lambda.basis[i][row], p)) % p;
                }
                if lhs != rhs {
                    return false;
                }
            }
        }
        true
    }

    /// All matrices in the support, enumerated as `[B^T C | Y] P^-1` where
    /// the columns of `P` extend the subspace basis to a basis of `F_p^n`
    /// and `Y` ranges over all n-by-(n-k) fillings.
    pub fn support(&self) -> Result<Vec<FpMatrix>> {
        let p = self.lambda.p;
        let n = self.lambda.n;
        let k = self.lambda.dim();
        let size = checked_pow(p, (n * (n - k)) as u32, MATRIX_ENUM_GUARD)?;
        // P columns: basis vectors then unit vectors on non-pivot coords.
        let mut cols: Vec<Vec<u64>> = self.lambda.basis.clone();
        let pivots: Vec<usize> = self
            .lambda
            .basis
            .iter()
            .map(|row| row.iter().position(|&x| x != 0).unwrap())
            .collect();
        for j in 0..n {
            if !pivots.contains(&j) {
                let mut e = vec![0u64; n];
                e[j] = 1;
                cols.push(e);
            }
        }
        let p_mat = {
            let mut entries = vec![0u64; n * n];
            for (cidx, col) in cols.iter().enumerate() {
                for r in 0..n {
                    entries[r * n + cidx] = col[r];
                }
            }
            FpMatrix { n, p, entries }
        };
        let p_inv = invert_mod_p(&p_mat).expect("basis completion is invertible");
        // Left block: B^T C (n x k).
        let mut left = vec![0u64; n * k];
        for r in 0..n {
            for j in 0..k {
                let mut acc = 0u64;
                for i in 0..k {
                    acc = (acc + mul_mod_u64(self.lambda.basis[i][r], self.c.at(i, j), p)) % p;
                }
                left[r * k + j] = acc;
            }
        }
        let mut out = Vec::with_capacity(size as usize);
        for mut fill in 0..size {
            let mut m = vec![0u64; n * n];
            for r in 0..n {
                for j in 0..k {
                    m[r * n + j] = left[r * k + j];
                }
            }
            for j in k..n {
                for r in 0..n {
                    m[r * n + j] = (fill % p as u128) as u64;
                    fill /= p as u128;
                }
            }
            let a = FpMatrix { n, p, entries: m }.mul(&p_inv);
            debug_assert!(self.selects(&a));
            out.push(a);
        }
        Ok(out)
    }
}

fn invert_mod_p(m: &FpMatrix) -> Option<FpMatrix> {
    let n = m.n;
    let p = m.p;
    let mut aug = vec![0u64; n * 2 * n];
    for i in 0..n {
        for j in 0..n {
            aug[i * 2 * n + j] = m.at(i, j);
        }
        aug[i * 2 * n + n + i] = 1;
    }
    for c in 0..n {
        let pr = (c..n).find(|&r| aug[r * 2 * n + c] != 0)?;
        if pr != c {
            for j in 0..2 * n {
                aug.swap(pr * 2 * n + j, c * 2 * n + j);
            }
        }
        let inv = inv_mod_u64(aug[c * 2 * n + c], p);
        for j in 0..2 * n {
            aug[c * 2 * n + j] = mul_mod_u64(aug[c * 2 * n + j], inv, p);
        }
        for r in 0..n {
            if r == c || aug[r * 2 * n + c] == 0 {
                continue;
            }
            let f = aug[r * 2 * n + c];
            for j in 0..2 * n {
                let sub = mul_mod_u64(f, aug[c * 2 * n + j], p);
                aug[r * 2 * n + j] = (aug[r * 2 * n + j] + p - sub) % p;
            }
        }
    }
    let mut entries = vec![0u64; n * n];
    for i in 0..n {
        for j in 0..n {
            entries[i * n + j] = aug[i * 2 * n + n + j];
        }
    }
    Some(FpMatrix { n, p, entries })
}

/// The averaged discrete Fourier transform of a function on `Mat_n(F_p)`:
/// `F(B) = p^(-n^2) sum_A f(A) e(tr(AB)/p)`, indexed by the base-p matrix
/// encoding.
#[derive(Debug, Clone)]
pub struct DftResult {
    pub p: u64,
    pub n: usize,
    pub values: Vec<Complex64>,
    /// Exact value at the zero frequency (a rational: support mass / p^(n^2)).
    pub zero_value: Ratio<BigInt>,
}

impl DftResult {
    pub fn max_abs(&self) -> f64 {
        self.values.iter().map(|v| v.norm()).fold(0.0, f64::max)
    }

    pub fn zero_threshold(&self) -> f64 {
        DFT_ZERO_THRESHOLD * self.max_abs()
    }

    pub fn at(&self, b: &FpMatrix) -> Complex64 {
        self.values[b.index() as usize]
    }

    /// Pointwise inverse transform: `f(A) = sum_B F(B) e(-tr(AB)/p)`.
    pub fn inverse_at(&self, a: &FpMatrix) -> Complex64 {
        let p = self.p;
        let total = self.values.len();
        let mut acc = Complex64::new(0.0, 0.0);
        for idx in 0..total {
            let b = FpMatrix::from_index(self.n, p, idx as u128);
            let phase = (p - a.trace_pairing(&b) % p) % p;
            acc += self.values[idx] * root_of_unity(p, phase);
        }
        acc
    }
}

fn root_of_unity(p: u64, k: u64) -> Complex64 {
    let theta = 2.0 * std::f64::consts::PI * (k as f64) / (p as f64);
    Complex64::new(theta.cos(), theta.sin())
}

/// Full DFT of a single selector.
pub fn selector_dft(spec: &SelectorSpec) -> Result<DftResult> {
    let p = spec.lambda.p;
    let n = spec.lambda.n;
    let points = checked_pow(p, (n * n) as u32, DFT_POINT_GUARD)?;
    let support = spec.support()?;
    dft_of_support(p, n, points, &[(&support, 1)])
}

/// DFT from explicit support lists with integer weights: the transform of
/// `sum_i weight_i * indicator(support_i)`.
fn dft_of_support(
    p: u64,
    n: usize,
    points: u128,
    supports: &[(&Vec<FpMatrix>, u64)],
) -> Result<DftResult> {
    let total_mass: u64 = supports.iter().map(|(s, w)| s.len() as u64 * w).sum();
    let work = points.saturating_mul(
        supports
            .iter()
            .map(|(s, _)| s.len() as u128)
            .sum::<u128>()
            .max(1),
    );
    if work > MATRIX_ENUM_GUARD {
        return Err(FpCensusError::GuardExceeded {
            size: work,
            guard: MATRIX_ENUM_GUARD,
        });
    }
    let norm = 1.0 / (points as f64);
    let mut values = Vec::with_capacity(points as usize);
    let mut phase_counts = vec![0u64; p as usize];
    for idx in 0..points {
        let b = FpMatrix::from_index(n, p, idx);
        phase_counts.iter_mut().for_each(|c| *c = 0);
        for (support, w) in supports {
            for a in support.iter() {
                phase_counts[a.trace_pairing(&b) as usize] += w;
            }
        }
        let mut acc = Complex64::new(0.0, 0.0);
        for (k, &cnt) in phase_counts.iter().enumerate() {
            if cnt > 0 {
                acc += root_of_unity(p, k as u64) * (cnt as f64);
            }
        }
        values.push(acc * norm);
    }
    let zero_value = Ratio::new(BigInt::from(total_mass), BigInt::from(points));
    Ok(DftResult {
        p,
        n,
        values,
        zero_value,
    })
}

/// Verification report for the summed selector of a squarefree polynomial
/// `g`: the sum over all (subspace, restriction) pairs with characteristic
/// polynomial `g` of the single-pair selectors.
#[derive(Debug, Clone, Serialize)]
pub struct RankSupportReport {
    pub p: u64,
    pub n: usize,
    pub k: usize,
    pub g: String,
    /// max |F(B)| over frequencies B of each rank r = 0..=n.
    pub max_abs_by_rank: Vec<f64>,
    pub zero_threshold: f64,
    /// Exact vanishing at every frequency of rank above k.
    pub vanishing_beyond_k: bool,
    /// Psi_g(A) >= 1 whenever g divides the characteristic polynomial of A
    /// (checked exhaustively).
    pub lower_bound_ok: bool,
    pub pair_count: u64,
    /// gaussian_binomial(n,k,p) * |GL_k| / unit_group_order(g).
    pub expected_pair_count: String,
    /// Exact zero-frequency value of the summed transform.
    pub zero_value_num: String,
    pub zero_value_den: String,
}

/// Assembles the summed selector of `g`, transforms it, and reports the
/// maximal coefficient magnitude per frequency rank. The support of the
/// transform is confined to frequencies of rank at most `deg g`.
pub fn selector_g_rank_support(g: &FpPoly, n: usize) -> Result<RankSupportReport> {
    let p = g.modulus();
    let k = g.deg();
    if k > n {
        return Err(FpCensusError::DegreeMismatch {
            expected: n,
            got: k,
        });
    }
    let fac = factor_mod_p(g)?;
    if !fac.is_squarefree() {
        return Err(FpCensusError::Exact(ExactError::NotSquarefree));
    }
    let points = checked_pow(p, (n * n) as u32, DFT_POINT_GUARD)?;

    // Enumerate (subspace, C) pairs with char_poly(C) = g.
    let mut pair_supports: Vec<Vec<FpMatrix>> = Vec::new();
    let k_mats = checked_pow(p, (k * k) as u32, MATRIX_ENUM_GUARD)?;
    for lambda in enumerate_subspaces(p, n, k) {
        for idx in 0..k_mats {
            let c = FpMatrix::from_index(k, p, idx);
            if &c.char_poly() == g {
                let spec = SelectorSpec::new(lambda.clone(), c)?;
                pair_supports.push(spec.support()?);
            }
        }
    }
    let pair_count = pair_supports.len() as u64;
    let expected_pair_count = gaussian_binomial(n, k, p) * gl_order(k, p)
        / unit_group_order(g)?;

    let supports: Vec<(&Vec<FpMatrix>, u64)> =
        pair_supports.iter().map(|s| (s, 1u64)).collect();
    let dft = dft_of_support(p, n, points, &supports)?;

    // Psi_g values for the lower-bound check.
    let mut psi = vec![0u64; points as usize];
    for s in &pair_supports {
        for a in s {
            psi[a.index() as usize] += 1;
        }
    }
    let mut lower_bound_ok = true;
    for idx in 0..points {
        let a = FpMatrix::from_index(n, p, idx);
        let chi = a.char_poly();
        let divides = chi.div_rem(g).1.is_zero();
        if divides && psi[idx as usize] < 1 {
            lower_bound_ok = false;
            break;
        }
    }

    let threshold = dft.zero_threshold();
    let mut max_abs_by_rank = vec![0.0f64; n + 1];
    for idx in 0..points {
        let b = FpMatrix::from_index(n, p, idx);
        let r = b.rank();
        let mag = dft.values[idx as usize].norm();
        if mag > max_abs_by_rank[r] {
            max_abs_by_rank[r] = mag;
        }
    }
    let vanishing_beyond_k = max_abs_by_rank
        .iter()
        .enumerate()
        .filter(|(r, _)| *r > k)
        .all(|(_, &m)| m <= threshold);

    Ok(RankSupportReport {
        p,
        n,
        k,
        g: g.lift().to_string(),
        max_abs_by_rank,
        zero_threshold: threshold,
        vanishing_beyond_k,
        lower_bound_ok,
        pair_count,
        expected_pair_count: expected_pair_count.to_string(),
        zero_value_num: dft.zero_value.numer().to_string(),
        zero_value_den: dft.zero_value.denom().to_string(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fp(p: u64, cs: &[u64]) -> FpPoly {
        FpPoly::new(p, cs.to_vec()).unwrap()
    }

    #[test]
    fn charpoly_matches_trace_det_2x2() {
        let p = 7;
        for idx in 0..(p as u128).pow(4) {
            let m = FpMatrix::from_index(2, p, idx);
            let chi = m.char_poly();
            let tr = (m.at(0, 0) + m.at(1, 1)) % p;
            let det = (mul_mod_u64(m.at(0, 0), m.at(1, 1), p) + p * p
                - mul_mod_u64(m.at(0, 1), m.at(1, 0), p))
                % p;
            assert_eq!(chi.coeff(1), (p - tr) % p);
            assert_eq!(chi.coeff(0), det % p);
            assert_eq!(chi.coeff(2), 1);
        }
    }

    #[test]
    fn fiber_counts_n1() {
        // n = 1: each x - a has exactly one matrix.
        for a in 0..5u64 {
            let f = fp(5, &[(5 - a) % 5, 1]);
            assert_eq!(count_charpoly_fiber_fp(&f, 1).unwrap(), 1);
        }
    }

    #[test]
    fn fiber_counts_n2_q3() {
        // Exhaustive oracle over 81 matrices: irreducible fibers have
        // q^2 - q = 6, split-distinct q^2 + q = 12, double-root q^2 = 9.
        let q = 3u64;
        // x^2 + 1 is irreducible mod 3.
        assert_eq!(count_charpoly_fiber_fp(&fp(q, &[1, 0, 1]), 2).unwrap(), 6);
        // (x - 1)(x - 2) = x^2 - 3x + 2 = x^2 + 2 mod 3... expand exactly:
        // x^2 - 3x + 2 mod 3 = x^2 + 0x + 2.
        assert_eq!(count_charpoly_fiber_fp(&fp(q, &[2, 0, 1]), 2).unwrap(), 12);
        // (x - 1)^2 = x^2 - 2x + 1 = x^2 + x + 1 mod 3.
        assert_eq!(count_charpoly_fiber_fp(&fp(q, &[1, 1, 1]), 2).unwrap(), 9);
    }

    #[test]
    fn histogram_partitions_all_matrices() {
        for q in [2u64, 3, 5] {
            let hist = charpoly_histogram(q, 2).unwrap();
            let total: u64 = hist.iter().sum();
            assert_eq!(total, q.pow(4));
            // Average over monic f of the fiber count is q^(n^2-n).
            assert_eq!(total / (q * q), q.pow(2));
        }
    }

    #[test]
    fn reiner_deviation_n2_exact() {
        for q in [2u64, 3, 5, 7] {
            let rep = reiner_report(2, q).unwrap();
            let dev = rep.max_deviation();
            assert_eq!(
                dev,
                Ratio::new(BigInt::from(1), BigInt::from(q)),
                "n=2 q={q} deviation"
            );
        }
    }

    #[test]
    fn index_tail_fractions() {
        // k = 0 is the whole space.
        assert_eq!(index_tail_fraction(5, 3, 0).unwrap(), Ratio::one());
        // n = 2, k = 1: exactly 1/p.
        for p in [3u64, 5, 7, 11] {
            assert_eq!(
                index_tail_fraction(p, 2, 1).unwrap(),
                Ratio::new(BigInt::one(), BigInt::from(p))
            );
        }
        // A quadratic has index at most 1.
        assert_eq!(index_tail_fraction(5, 2, 2).unwrap(), Ratio::zero());
    }

    #[test]
    fn gaussian_binomials() {
        assert_eq!(gaussian_binomial(4, 0, 7), BigInt::one());
        assert_eq!(gaussian_binomial(2, 1, 11), BigInt::from(12));
        assert_eq!(gaussian_binomial(4, 2, 2), BigInt::from(35));
        // Column symmetry.
        assert_eq!(gaussian_binomial(5, 2, 3), gaussian_binomial(5, 3, 3));
    }

    #[test]
    fn subspace_enumeration_counts() {
        for (n, k, p) in [(2, 1, 3u64), (3, 1, 2), (3, 2, 3), (4, 2, 2)] {
            let subs = enumerate_subspaces(p, n, k);
            let expect = gaussian_binomial(n, k, p);
            assert_eq!(BigInt::from(subs.len()), expect, "n={n} k={k} p={p}");
            // All distinct.
            let set: std::collections::HashSet<_> = subs.iter().cloned().collect();
            assert_eq!(set.len(), subs.len());
        }
    }

    #[test]
    fn unit_group_orders() {
        // g = x: p - 1.
        assert_eq!(unit_group_order(&fp(7, &[0, 1])).unwrap(), BigInt::from(6));
        // g = x^2 + 1 mod 3: F_9 multiplicative group.
        assert_eq!(unit_group_order(&fp(3, &[1, 0, 1])).unwrap(), BigInt::from(8));
        // g = x^2 + 1 mod 5 splits: (F_5^x)^2.
        assert_eq!(unit_group_order(&fp(5, &[1, 0, 1])).unwrap(), BigInt::from(16));
        // Non-squarefree rejected.
        assert!(unit_group_order(&fp(5, &[0, 0, 1])).is_err());
    }

    #[test]
    fn selector_support_size_and_membership() {
        let p = 3u64;
        let subs = enumerate_subspaces(p, 2, 1);
        for lambda in subs {
            for c0 in 0..p {
                let c = FpMatrix::new(1, p, vec![c0]).unwrap();
                let spec = SelectorSpec::new(lambda.clone(), c).unwrap();
                let support = spec.support().unwrap();
                assert_eq!(support.len(), 9); // p^(n(n-k)) = 3^2
                for a in &support {
                    assert!(spec.selects(a));
                }
                // Count agrees with a brute-force scan.
                let brute = (0..81u128)
                    .filter(|&i| spec.selects(&FpMatrix::from_index(2, p, i)))
                    .count();
                assert_eq!(brute, 9);
            }
        }
    }

    #[test]
    fn selector_dft_zero_value_and_parseval() {
        let p = 3u64;
        let lambda = enumerate_subspaces(p, 2, 1).into_iter().next().unwrap();
        let c = FpMatrix::new(1, p, vec![2]).unwrap();
        let spec = SelectorSpec::new(lambda, c).unwrap();
        let dft = selector_dft(&spec).unwrap();
        // Zero frequency: exactly p^(-kn) = 1/9.
        assert_eq!(
            dft.zero_value,
            Ratio::new(BigInt::from(1), BigInt::from(9))
        );
        // Parseval: sum |F|^2 = density of the support = 1/9.
        let sum_sq: f64 = dft.values.iter().map(|v| v.norm_sqr()).sum();
        assert!((sum_sq - 1.0 / 9.0).abs() < 1e-12, "parseval {sum_sq}");
        // Support size: exactly p^(kn) = 9 nonzero coefficients.
        let thr = dft.zero_threshold();
        let nonzero = dft.values.iter().filter(|v| v.norm() > thr).count();
        assert_eq!(nonzero, 9);
    }

    #[test]
    fn selector_dft_support_is_column_space_orientation() {
        // The support must be {B : column space of B inside Lambda}; the
        // row-space orientation must fail for some frequency.
        let p = 3u64;
        // An asymmetric subspace: span{(1,2)}.
        let lambda = enumerate_subspaces(p, 2, 1)
            .into_iter()
            .find(|s| s.basis()[0] == vec![1, 2])
            .unwrap();
        let c = FpMatrix::new(1, p, vec![1]).unwrap();
        let spec = SelectorSpec::new(lambda.clone(), c).unwrap();
        let dft = selector_dft(&spec).unwrap();
        let thr = dft.zero_threshold();
        let mut row_orientation_holds = true;
        for idx in 0..81u128 {
            let b = FpMatrix::from_index(2, p, idx);
            let mag = dft.values[idx as usize].norm();
            if mag > thr {
                // Columns of B lie in Lambda.
                for j in 0..2 {
                    let col: Vec<u64> = (0..2).map(|i| b.at(i, j)).collect();
                    assert!(
                        lambda.contains(&col),
                        "column {j} of frequency {idx} outside the subspace"
                    );
                }
                // Row orientation: rows of B in Lambda; falsified somewhere.
                for i in 0..2 {
                    let row: Vec<u64> = (0..2).map(|j| b.at(i, j)).collect();
                    if !lambda.contains(&row) {
                        row_orientation_holds = false;
                    }
                }
            }
        }
        assert!(
            !row_orientation_holds,
            "row orientation unexpectedly matched the support"
        );
    }

    #[test]
    fn selector_dft_inversion() {
        let p = 3u64;
        let lambda = enumerate_subspaces(p, 2, 1).into_iter().next().unwrap();
        let c = FpMatrix::new(1, p, vec![0]).unwrap();
        let spec = SelectorSpec::new(lambda, c).unwrap();
        let dft = selector_dft(&spec).unwrap();
        for idx in 0..81u128 {
            let a = FpMatrix::from_index(2, p, idx);
            let expect = if spec.selects(&a) { 1.0 } else { 0.0 };
            let got = dft.inverse_at(&a);
            assert!(
                (got.re - expect).abs() < 1e-9 && got.im.abs() < 1e-9,
                "inversion failed at {idx}: {got}"
            );
        }
    }

    #[test]
    fn rank_support_of_linear_selector() {
        // p = 3, n = 2, k = 1, g = x - 1: vanishing at all rank-2 freqs.
        let g = fp(3, &[2, 1]);
        let rep = selector_g_rank_support(&g, 2).unwrap();
        assert!(rep.vanishing_beyond_k, "rank-2 frequencies must vanish");
        assert!(rep.lower_bound_ok);
        assert_eq!(rep.pair_count.to_string(), rep.expected_pair_count);
        assert!(rep.max_abs_by_rank[0] > 0.0);
    }

    #[test]
    fn guards_fire() {
        assert!(matches!(
            charpoly_histogram(101, 4),
            Err(FpCensusError::GuardExceeded { .. })
        ));
        assert!(matches!(
            index_tail_fraction(127, 4, 1),
            Err(FpCensusError::GuardExceeded { .. })
        ));
    }
}
