//! The double discriminant of an integer matrix and its divisibility
//! certificates.
//!
//! For the diagonal shift `S = Diag(1, 2, ..., n)`, the double discriminant
//! is `DD(A) = disc_t disc_x det(xI - tS - A)`: an integer polynomial in the
//! entries of `A`, invariant under translation by multiples of `S`. The
//! inner discriminant is a polynomial in `t` of degree exactly `n^2 - n`
//! whose leading coefficient is `disc chi_S`, so it never degenerates; the
//! outer discriminant is taken at the true degree.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::exactalg::{
    char_poly, discriminant, is_prime_u64, poly_index_mod_p, resultant_coeffs, FpPoly, IntMatrix,
    IntPoly,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DdError {
    #[error("prime {p} is below the dimension {n}; the shift spectrum collides mod p")]
    PrimeTooSmall { p: u64, n: usize },
    #[error("dimension {0} not supported by the scan")]
    UnsupportedDimension(usize),
    #[error(transparent)]
    Exact(#[from] crate::exactalg::ExactError),
}

pub type Result<T> = std::result::Result<T, DdError>;

/// `det(xI - tS - A)` as a polynomial in `x` whose coefficients are
/// polynomials in `t`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BivarPoly {
    /// `coeff_x[i]` is the coefficient of `x^i`, an element of `Z[t]`.
    pub coeff_x: Vec<IntPoly>,
}

impl BivarPoly {
    pub fn deg_x(&self) -> usize {
        self.coeff_x.len().saturating_sub(1)
    }

    /// Specialization at an integer value of `t`.
    pub fn eval_t(&self, t: &BigInt) -> IntPoly {
        IntPoly::new(self.coeff_x.iter().map(|c| c.eval(t)).collect())
    }

    /// The total-degree-n homogeneous part as a polynomial in (x, t):
    /// returns the coefficient of `x^i t^(n-i)` for i = 0..=n.
    pub fn top_homogeneous(&self) -> Vec<BigInt> {
        let n = self.deg_x();
        (0..=n).map(|i| self.coeff_x[i].coeff(n - i)).collect()
    }
}

/// The shift matrix `Diag(1, 2, ..., n)`.
pub fn shift_matrix(n: usize) -> IntMatrix {
    let diag: Vec<BigInt> = (1..=n as i64).map(BigInt::from).collect();
    IntMatrix::diagonal(&diag)
}

/// `disc chi_S = prod_{i<j} (i-j)^2`: 1, 4, 144 for n = 2, 3, 4.
pub fn disc_chi_s(n: usize) -> BigInt {
    let mut acc = BigInt::one();
    for i in 1..=n as i64 {
        for j in (i + 1)..=n as i64 {
            let d = BigInt::from(i - j);
            acc *= &d * &d;
        }
    }
    acc
}

/// `det(xI - tS - A)`, exact, via cofactor expansion with memoization over
/// row subsets. The top homogeneous part in (x, t) always equals
/// `(x - t)(x - 2t)...(x - nt)`, which is asserted.
pub fn bivariate_charpoly(a: &IntMatrix) -> BivarPoly {
    let n = a.dim();
    // Entries of xI - tS - A live in Z[x][t]; represent each as coeff_x.
    let entry = |i: usize, j: usize| -> BivarPoly {
        if i == j {
            // x - (i+1) t - a_ii
            BivarPoly {
                coeff_x: vec![
                    IntPoly::new(vec![-a.at(i, j).clone(), BigInt::from(-((i as i64) + 1))]),
                    IntPoly::one(),
                ],
            }
        } else {
            BivarPoly {
                coeff_x: vec![IntPoly::constant(-a.at(i, j).clone())],
            }
        }
    };
    // dp[mask] = determinant of the submatrix with the rows in `mask` and the
    // first popcount(mask) columns.
    let mut dp: Vec<Option<BivarPoly>> = vec![None; 1 << n];
    dp[0] = Some(BivarPoly {
        coeff_x: vec![IntPoly::one()],
    });
    for mask in 1usize..(1 << n) {
        let col = (mask as u32).count_ones() as usize - 1;
        let mut acc = BivarPoly {
            coeff_x: Vec::new(),
        };
        let mut row_pos = 0usize;
        for row in 0..n {
            if mask & (1 << row) == 0 {
                continue;
            }
            let sub = dp[mask ^ (1 << row)].as_ref().unwrap();
            let term = bivar_mul(&entry(row, col), sub);
            if (row_pos + col) % 2 == 0 {
                acc = bivar_add(&acc, &term);
            } else {
                acc = bivar_sub(&acc, &term);
            }
            row_pos += 1;
        }
        dp[mask] = Some(acc);
    }
    let det = dp[(1 << n) - 1].take().unwrap();
    debug_assert_eq!(
        det.top_homogeneous(),
        shift_charpoly_homogeneous(n),
        "top homogeneous part must be prod (x - i t)"
    );
    det
}

/// Coefficients of `prod_{i=1..n} (x - i t)` as `[t^n, x t^(n-1), ..., x^n]`.
pub fn shift_charpoly_homogeneous(n: usize) -> Vec<BigInt> {
    // Expand in the variable x with t tracked by homogeneity: the product is
    // the characteristic polynomial of Diag(1..n) with x -> x/t scaled, i.e.
    // elementary symmetric functions of 1..n with alternating signs.
    let mut coeffs = vec![BigInt::one()];
    for i in 1..=n as i64 {
        let mut next = vec![BigInt::zero(); coeffs.len() + 1];
        for (k, c) in coeffs.iter().enumerate() {
            next[k + 1] += c;
            next[k] -= c * BigInt::from(i);
        }
        coeffs = next;
    }
    coeffs
}

fn bivar_add(a: &BivarPoly, b: &BivarPoly) -> BivarPoly {
    let len = a.coeff_x.len().max(b.coeff_x.len());
    let coeff_x = (0..len)
        .map(|i| {
            let x = a.coeff_x.get(i).cloned().unwrap_or_else(IntPoly::zero);
            let y = b.coeff_x.get(i).cloned().unwrap_or_else(IntPoly::zero);
            x.add(&y)
        })
        .collect();
    BivarPoly { coeff_x: trim(coeff_x) }
}

fn bivar_sub(a: &BivarPoly, b: &BivarPoly) -> BivarPoly {
    let len = a.coeff_x.len().max(b.coeff_x.len());
    let coeff_x = (0..len)
        .map(|i| {
            let x = a.coeff_x.get(i).cloned().unwrap_or_else(IntPoly::zero);
            let y = b.coeff_x.get(i).cloned().unwrap_or_else(IntPoly::zero);
            x.sub(&y)
        })
        .collect();
    BivarPoly { coeff_x: trim(coeff_x) }
}

fn bivar_mul(a: &BivarPoly, b: &BivarPoly) -> BivarPoly {
    if a.coeff_x.is_empty() || b.coeff_x.is_empty() {
        return BivarPoly { coeff_x: vec![] };
    }
    let mut out = vec![IntPoly::zero(); a.coeff_x.len() + b.coeff_x.len() - 1];
    for (i, p) in a.coeff_x.iter().enumerate() {
        if p.is_zero() {
            continue;
        }
        for (j, q) in b.coeff_x.iter().enumerate() {
            out[i + j] = out[i + j].add(&p.mul(q));
        }
    }
    BivarPoly { coeff_x: trim(out) }
}

fn trim(mut v: Vec<IntPoly>) -> Vec<IntPoly> {
    while v.last().map_or(false, |c| c.is_zero()) {
        v.pop();
    }
    v
}

/// `disc_x` of the bivariate characteristic polynomial: a polynomial in `t`
/// of degree exactly `n^2 - n` with leading coefficient `disc chi_S`.
pub fn disc_x(f: &BivarPoly) -> IntPoly {
    let n = f.deg_x();
    assert!(n >= 1, "disc_x of a constant");
    if n == 1 {
        return IntPoly::one();
    }
    // d/dx: coefficient of x^i is (i+1) * coeff_x[i+1].
    let df: Vec<IntPoly> = (1..=n)
        .map(|i| f.coeff_x[i].mul_scalar(&BigInt::from(i as u64)))
        .collect();
    let res: IntPoly = resultant_coeffs(&f.coeff_x, &df);
    // f is monic in x, so disc = (-1)^(n(n-1)/2) Res(f, f_x).
    if (n * (n - 1) / 2) % 2 == 1 {
        res.neg()
    } else {
        res
    }
}

/// The double discriminant `DD(A) = disc_t disc_x det(xI - tS - A)`.
/// May be zero; total on square matrices of dimension >= 2.
pub fn double_discriminant(a: &IntMatrix) -> BigInt {
    let n = a.dim();
    assert!(n >= 2, "double discriminant needs n >= 2");
    let d = disc_x(&bivariate_charpoly(a));
    debug_assert_eq!(d.deg(), n * n - n);
    debug_assert_eq!(d.leading_coeff().unwrap(), &disc_chi_s(n));
    if d.is_zero() || d.is_constant() {
        return BigInt::zero();
    }
    if d.deg() == 1 {
        // Degree-one polynomials have discriminant 1 (no root pairs); the
        // shape is unreachable for n >= 2 but kept total.
        return BigInt::one();
    }
    discriminant(&d).expect("non-constant polynomial")
}

/// Outcome of the mod-p divisibility certificate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum DivisibilityOutcome {
    /// Index below 2: the claim does not apply.
    Vacuous,
    /// Index at least 2 and p divides DD(A).
    Holds,
    /// Index at least 2 and p does not divide DD(A); falsifies the claim.
    Violated,
}

/// Checks the claim that an index >= 2 of the characteristic polynomial mod
/// p forces p to divide DD(A). Requires p >= n so the shift spectrum stays
/// separable mod p.
pub fn dd_divisibility_certificate(a: &IntMatrix, p: u64) -> Result<DivisibilityOutcome> {
    let n = a.dim();
    if !is_prime_u64(p) {
        return Err(DdError::Exact(crate::exactalg::ExactError::CompositeModulus(p)));
    }
    if (p as usize) < n {
        return Err(DdError::PrimeTooSmall { p, n });
    }
    let chi = char_poly(a);
    let chi_p = FpPoly::from_intpoly(&chi, p)?;
    let index = poly_index_mod_p(&chi_p)?;
    if index < 2 {
        return Ok(DivisibilityOutcome::Vacuous);
    }
    let dd = double_discriminant(a);
    if dd.mod_floor(&BigInt::from(p)).is_zero() {
        Ok(DivisibilityOutcome::Holds)
    } else {
        Ok(DivisibilityOutcome::Violated)
    }
}

/// Canonical representative modulo `Z S`: writes `A = A0 + t S` with the
/// first diagonal entry of `A0` zero (`S_11 = 1` makes `t = a_11` exact).
pub fn canonical_rep_mod_s(a: &IntMatrix) -> (IntMatrix, BigInt) {
    let t = a.at(0, 0).clone();
    let s = shift_matrix(a.dim());
    let a0 = a.sub(&s.mul_scalar(&t));
    (a0, t)
}

/// Report of a scan for matrices with nonvanishing double discriminant.
#[derive(Debug, Clone, Serialize)]
pub struct NonvanishingScan {
    pub n: usize,
    pub bound: i64,
    pub scanned: u64,
    pub zero_count: u64,
    /// First matrix found with DD != 0, as its display form.
    pub witness: Option<String>,
    /// True when the scan was a seeded random sample rather than exhaustive.
    pub sampled: bool,
}

/// Scans matrices with entries in `[-bound, bound]` for one with a nonzero
/// double discriminant and reports the fraction with DD = 0. Exhaustive for
/// n = 2; seeded random sampling above that (the full box is out of reach).
///
/// Diagonal matrices always have DD = 0: the eigenvalues of `A + tS` are
/// then linear in t, so `disc_x` is a perfect square in `Z[t]` and its own
/// discriminant vanishes. The scan therefore covers general matrices.
pub fn dd_nonvanishing_scan(n: usize, bound: i64, samples: u64) -> Result<NonvanishingScan> {
    if !(2..=4).contains(&n) {
        return Err(DdError::UnsupportedDimension(n));
    }
    let mut scanned = 0u64;
    let mut zero_count = 0u64;
    let mut witness: Option<String> = None;
    let width = (2 * bound + 1) as u64;
    let cells = n * n;
    let exhaustive_size = width.checked_pow(cells as u32);
    let exhaustive = n == 2 && exhaustive_size.map_or(false, |s| s <= 100_000);
    if exhaustive {
        let total = exhaustive_size.unwrap();
        for idx in 0..total {
            let mut rem = idx;
            let mut entries = Vec::with_capacity(cells);
            for _ in 0..cells {
                entries.push((rem % width) as i64 - bound);
                rem /= width;
            }
            let a = IntMatrix::from_i64(n, &entries).unwrap();
            scanned += 1;
            let dd = double_discriminant(&a);
            if dd.is_zero() {
                zero_count += 1;
            } else if witness.is_none() {
                witness = Some(a.to_string());
            }
        }
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(0xdd5ca5);
        for _ in 0..samples {
            let entries: Vec<i64> = (0..cells).map(|_| rng.gen_range(-bound..=bound)).collect();
            let a = IntMatrix::from_i64(n, &entries).unwrap();
            scanned += 1;
            let dd = double_discriminant(&a);
            if dd.is_zero() {
                zero_count += 1;
            } else if witness.is_none() {
                witness = Some(a.to_string());
            }
        }
    }
    Ok(NonvanishingScan {
        n,
        bound,
        scanned,
        zero_count,
        witness,
        sampled: !exhaustive,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bi(v: i64) -> BigInt {
        BigInt::from(v)
    }

    /// Independent full symbolic oracle for n = 2: DD([[a,b],[c,d]]) = -16bc.
    fn dd2_oracle(a: i64, b: i64, c: i64, d: i64) -> BigInt {
        let _ = (a, d);
        bi(-16) * bi(b) * bi(c)
    }

    #[test]
    fn bivariate_of_zero_matrix() {
        // (x - t)(x - 2t) = x^2 - 3tx + 2t^2
        let f = bivariate_charpoly(&IntMatrix::zero(2));
        assert_eq!(f.coeff_x.len(), 3);
        assert_eq!(f.coeff_x[2], IntPoly::one());
        assert_eq!(f.coeff_x[1], IntPoly::from_i64(&[0, -3]));
        assert_eq!(f.coeff_x[0], IntPoly::from_i64(&[0, 0, 2]));
    }

    #[test]
    fn bivariate_matches_symbolic_2x2() {
        // (x - t - a)(x - 2t - d) - bc at (a,b,c,d) = (1,2,3,4).
        let a = IntMatrix::from_i64(2, &[1, 2, 3, 4]).unwrap();
        let f = bivariate_charpoly(&a);
        // Expand: x^2 - (3t + 5)x + (t+1)(2t+4) - 6
        assert_eq!(f.coeff_x[2], IntPoly::one());
        assert_eq!(f.coeff_x[1], IntPoly::from_i64(&[-5, -3]));
        assert_eq!(f.coeff_x[0], IntPoly::from_i64(&[-2, 6, 2]));
    }

    #[test]
    fn bivariate_specializes_to_charpoly() {
        let a = IntMatrix::from_i64(3, &[2, -1, 0, 4, 3, -2, 1, 1, 5]).unwrap();
        let f = bivariate_charpoly(&a);
        assert_eq!(f.eval_t(&bi(0)), char_poly(&a));
        // And at t = m it is the characteristic polynomial of A + mS.
        for m in -2..=2i64 {
            let shifted = a.add(&shift_matrix(3).mul_scalar(&bi(m)));
            assert_eq!(f.eval_t(&bi(m)), char_poly(&shifted));
        }
    }

    #[test]
    fn dd_closed_form_n2() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..25 {
            let e: Vec<i64> = (0..4).map(|_| rng.gen_range(-9..=9)).collect();
            let a = IntMatrix::from_i64(2, &e).unwrap();
            assert_eq!(
                double_discriminant(&a),
                dd2_oracle(e[0], e[1], e[2], e[3]),
                "DD mismatch at {a}"
            );
        }
    }

    #[test]
    fn dd_of_zero_matrix_is_zero() {
        assert_eq!(double_discriminant(&IntMatrix::zero(2)), bi(0));
        assert_eq!(double_discriminant(&IntMatrix::zero(3)), bi(0));
    }

    #[test]
    fn dd_translation_invariance() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..10 {
            let e: Vec<i64> = (0..9).map(|_| rng.gen_range(-5..=5)).collect();
            let a = IntMatrix::from_i64(3, &e).unwrap();
            let dd = double_discriminant(&a);
            for m in -3..=3i64 {
                let shifted = a.add(&shift_matrix(3).mul_scalar(&bi(m)));
                assert_eq!(double_discriminant(&shifted), dd);
            }
        }
    }

    #[test]
    fn disc_x_leading_coefficient() {
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        for n in 2..=4usize {
            let expect = disc_chi_s(n);
            for _ in 0..5 {
                let e: Vec<i64> = (0..n * n).map(|_| rng.gen_range(-5..=5)).collect();
                let a = IntMatrix::from_i64(n, &e).unwrap();
                let d = disc_x(&bivariate_charpoly(&a));
                assert_eq!(d.deg(), n * n - n);
                assert_eq!(d.leading_coeff().unwrap(), &expect);
            }
        }
        assert_eq!(disc_chi_s(2), bi(1));
        assert_eq!(disc_chi_s(3), bi(4));
        assert_eq!(disc_chi_s(4), bi(144));
    }

    #[test]
    fn disc_x_specialization_consistency() {
        let a = IntMatrix::from_i64(3, &[1, 2, 0, -1, 0, 3, 2, 2, -2]).unwrap();
        let d = disc_x(&bivariate_charpoly(&a));
        for t in -3..=3i64 {
            let shifted = a.add(&shift_matrix(3).mul_scalar(&bi(t)));
            let by_spec = discriminant(&char_poly(&shifted)).unwrap();
            assert_eq!(d.eval(&bi(t)), by_spec);
        }
    }

    #[test]
    fn divisibility_certificate_examples() {
        // chi = x^3 + 5x + 5 is x^3 mod 5: index 2, so 5 | DD.
        let f = IntPoly::from_i64(&[5, 5, 0, 1]);
        let a = IntMatrix::companion(&f).unwrap();
        assert_eq!(
            dd_divisibility_certificate(&a, 5).unwrap(),
            DivisibilityOutcome::Holds
        );
        // A generic matrix with squarefree chi mod 7: vacuous.
        let b = IntMatrix::from_i64(2, &[0, 2, 1, 0]).unwrap();
        assert_eq!(
            dd_divisibility_certificate(&b, 7).unwrap(),
            DivisibilityOutcome::Vacuous
        );
        // p below n rejected.
        assert!(matches!(
            dd_divisibility_certificate(&a, 2),
            Err(DdError::PrimeTooSmall { .. })
        ));
    }

    #[test]
    fn canonical_rep_properties() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for _ in 0..10 {
            let e: Vec<i64> = (0..9).map(|_| rng.gen_range(-9..=9)).collect();
            let a = IntMatrix::from_i64(3, &e).unwrap();
            let (a0, t) = canonical_rep_mod_s(&a);
            assert!(a0.at(0, 0).is_zero());
            // Left inverse of (A0, t) -> A0 + tS.
            let back = a0.add(&shift_matrix(3).mul_scalar(&t));
            assert_eq!(back, a);
            // Idempotent.
            let (a00, t0) = canonical_rep_mod_s(&a0);
            assert_eq!(a00, a0);
            assert!(t0.is_zero());
            // DD agrees (translation invariance).
            assert_eq!(double_discriminant(&a0), double_discriminant(&a));
            // The diagonal linear combinations (k+1) a_11 - a_(k+1)(k+1) match.
            for k in 1..3usize {
                let lhs = a.at(0, 0) * BigInt::from((k + 1) as u64) - a.at(k, k);
                let rhs = a0.at(0, 0) * BigInt::from((k + 1) as u64) - a0.at(k, k);
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn nonvanishing_scan_n2() {
        let scan = dd_nonvanishing_scan(2, 2, 0).unwrap();
        assert!(!scan.sampled);
        assert_eq!(scan.scanned, 625);
        // DD = -16bc: zero exactly when b or c is zero: 25*(9+8... count:
        // pairs (b,c) with bc = 0: 2*5-1 = 9 of 25; times 25 (a,d) free.
        assert_eq!(scan.zero_count, 9 * 25);
        assert!(scan.witness.is_some());
    }

    #[test]
    fn nonvanishing_scan_n3_finds_witness() {
        let scan = dd_nonvanishing_scan(3, 2, 200).unwrap();
        assert!(scan.sampled);
        assert!(
            scan.witness.is_some(),
            "no 3x3 witness with DD != 0 in 200 samples"
        );
        assert!(scan.zero_count < scan.scanned);
    }

    #[test]
    fn diagonal_matrices_have_zero_dd() {
        // The eigenvalues of Diag + tS are linear in t, so disc_x is a
        // perfect square and DD vanishes; diag(0,1,3) included.
        let d = IntMatrix::diagonal(&[bi(0), bi(1), bi(3)]);
        assert_eq!(double_discriminant(&d), bi(0));
        let d2 = IntMatrix::diagonal(&[bi(2), bi(-5), bi(7), bi(11)]);
        assert_eq!(double_discriminant(&d2), bi(0));
    }
}
