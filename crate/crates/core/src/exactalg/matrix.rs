//! Square integer matrices and their characteristic polynomials.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::poly::IntPoly;
use super::{ExactError, Result};

/// A square matrix of arbitrary-precision integers, row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    n: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn new(n: usize, entries: Vec<BigInt>) -> Result<Self> {
        if n == 0 || entries.len() != n * n {
            return Err(ExactError::Dimension(format!(
                "expected {n}x{n} = {} entries, got {}",
                n * n,
                entries.len()
            )));
        }
        Ok(IntMatrix { n, entries })
    }

    pub fn from_i64(n: usize, entries: &[i64]) -> Result<Self> {
        IntMatrix::new(n, entries.iter().map(|&v| BigInt::from(v)).collect())
    }

    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(ExactError::Dimension("matrix must be square".into()));
        }
        IntMatrix::new(n, rows.into_iter().flatten().collect())
    }

    pub fn zero(n: usize) -> Self {
        IntMatrix {
            n,
            entries: vec![BigInt::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zero(n);
        for i in 0..n {
            m.entries[i * n + i] = BigInt::from(1);
        }
        m
    }

    /// Diagonal matrix from the given entries.
    pub fn diagonal(diag: &[BigInt]) -> Self {
        let n = diag.len();
        let mut m = IntMatrix::zero(n);
        for (i, d) in diag.iter().enumerate() {
            m.entries[i * n + i] = d.clone();
        }
        m
    }

    /// Companion matrix of a monic polynomial of degree >= 1.
    pub fn companion(f: &IntPoly) -> Result<Self> {
        if !f.is_monic() {
            return Err(ExactError::NotMonic);
        }
        let n = f.degree().unwrap();
        if n == 0 {
            return Err(ExactError::ConstantPolynomial);
        }
        let mut m = IntMatrix::zero(n);
        for i in 1..n {
            m.entries[i * n + (i - 1)] = BigInt::from(1);
        }
        for i in 0..n {
            m.entries[i * n + (n - 1)] = -f.coeff(i);
        }
        Ok(m)
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn at(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.entries[i * self.n + j] = v;
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.entries
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.entries[i * self.n..(i + 1) * self.n]
    }

    pub fn rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.n).map(|i| self.row(i).to_vec()).collect()
    }

    /// The infinity norm: the maximum absolute entry.
    pub fn norm(&self) -> BigInt {
        self.entries
            .iter()
            .map(|e| e.abs())
            .max()
            .unwrap_or_else(BigInt::zero)
    }

    pub fn transpose(&self) -> IntMatrix {
        let n = self.n;
        let mut out = IntMatrix::zero(n);
        for i in 0..n {
            for j in 0..n {
                out.entries[j * n + i] = self.entries[i * n + j].clone();
            }
        }
        out
    }

    pub fn add(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.n, other.n);
        IntMatrix {
            n: self.n,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.n, other.n);
        IntMatrix {
            n: self.n,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        let n = self.n;
        assert_eq!(n, other.n);
        let mut out = IntMatrix::zero(n);
        for i in 0..n {
            for k in 0..n {
                let a = &self.entries[i * n + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let t = a * &other.entries[k * n + j];
                    out.entries[i * n + j] += t;
                }
            }
        }
        out
    }

    pub fn mul_scalar(&self, c: &BigInt) -> IntMatrix {
        IntMatrix {
            n: self.n,
            entries: self.entries.iter().map(|e| e * c).collect(),
        }
    }

    /// Matrix-vector product `A v`.
    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        let n = self.n;
        assert_eq!(v.len(), n);
        (0..n)
            .map(|i| (0..n).map(|j| &self.entries[i * n + j] * &v[j]).sum())
            .collect()
    }

    pub fn trace(&self) -> BigInt {
        (0..self.n).map(|i| self.entries[i * self.n + i].clone()).sum()
    }

    /// Evaluates a polynomial at the matrix (Horner).
    pub fn poly_eval(&self, f: &IntPoly) -> IntMatrix {
        let n = self.n;
        let mut acc = IntMatrix::zero(n);
        for c in f.coeffs().iter().rev() {
            acc = acc.mul(self);
            for i in 0..n {
                acc.entries[i * n + i] += c;
            }
        }
        acc
    }

    pub fn det(&self) -> BigInt {
        super::linalg::bareiss_det(self.rows())
    }
}

/// Characteristic polynomial `det(xI - A)` by the Faddeev–LeVerrier
/// recurrence: every division by k is exact over `Z`.
pub fn char_poly(a: &IntMatrix) -> IntPoly {
    let n = a.dim();
    let mut coeffs = vec![BigInt::zero(); n + 1];
    coeffs[n] = BigInt::from(1);
    let mut m = IntMatrix::identity(n);
    let mut am = a.mul(&m);
    for k in 1..=n {
        if k > 1 {
            m = am.clone();
            let c = coeffs[n - k + 1].clone();
            for i in 0..n {
                let idx = i * n + i;
                m.entries[idx] += &c;
            }
            am = a.mul(&m);
        }
        let t = am.trace();
        let (q, r) = num_integer::Integer::div_rem(&-t, &BigInt::from(k as u64));
        debug_assert!(r.is_zero(), "Faddeev-LeVerrier division must be exact");
        coeffs[n - k] = q;
    }
    IntPoly::new(coeffs)
}

impl fmt::Display for IntMatrix {
    /// Row-major decimal array form, e.g. `[[1,2],[3,4]]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.n {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "[")?;
            for j in 0..self.n {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", self.at(i, j))?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

impl FromStr for IntMatrix {
    type Err = ExactError;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let inner = t
            .strip_prefix('[')
            .and_then(|v| v.strip_suffix(']'))
            .ok_or_else(|| ExactError::Parse(format!("expected [[..],[..]], got {s:?}")))?;
        let mut rows: Vec<Vec<BigInt>> = Vec::new();
        let mut rest = inner.trim();
        while !rest.is_empty() {
            rest = rest.strip_prefix(',').unwrap_or(rest).trim_start();
            let open = rest
                .strip_prefix('[')
                .ok_or_else(|| ExactError::Parse("expected row start '['".into()))?;
            let end = open
                .find(']')
                .ok_or_else(|| ExactError::Parse("unterminated row".into()))?;
            let row = open[..end]
                .split(',')
                .filter(|p| !p.trim().is_empty())
                .map(|p| {
                    p.trim()
                        .parse::<BigInt>()
                        .map_err(|e| ExactError::Parse(format!("bad entry {p:?}: {e}")))
                })
                .collect::<Result<Vec<_>>>()?;
            rows.push(row);
            rest = open[end + 1..].trim_start();
        }
        IntMatrix::from_rows(rows)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::linalg::bareiss_det;
    use num_traits::One;

    #[test]
    fn char_poly_of_zero_matrix() {
        for n in 1..=4 {
            let p = char_poly(&IntMatrix::zero(n));
            assert_eq!(p, IntPoly::monomial(BigInt::one(), n));
        }
    }

    #[test]
    fn char_poly_of_companion_matrix() {
        // companion of x^3 - 2x + 5
        let f = IntPoly::from_i64(&[5, -2, 0, 1]);
        let c = IntMatrix::companion(&f).unwrap();
        assert_eq!(char_poly(&c), f);
    }

    #[test]
    fn char_poly_two_by_two() {
        // Independent 2x2 cofactor-expansion oracle:
        // det(xI - A) = x^2 - (a+d) x + (ad - bc) = x^2 - 5x - 2.
        let a = IntMatrix::from_i64(2, &[1, 2, 3, 4]).unwrap();
        assert_eq!(char_poly(&a), IntPoly::from_i64(&[-2, -5, 1]));
    }

    #[test]
    fn char_poly_matches_sylvester_oracle() {
        // Cross-check Faddeev-LeVerrier against a fraction-free determinant
        // of xI - A with polynomial entries.
        let a = IntMatrix::from_i64(3, &[2, -1, 0, 4, 3, -2, 1, 1, 5]).unwrap();
        let n = a.dim();
        let rows: Vec<Vec<IntPoly>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        if i == j {
                            IntPoly::new(vec![-a.at(i, j).clone(), BigInt::one()])
                        } else {
                            IntPoly::constant(-a.at(i, j).clone())
                        }
                    })
                    .collect()
            })
            .collect();
        let det = bareiss_det(rows);
        assert_eq!(char_poly(&a), det);
    }

    #[test]
    fn norm_is_max_abs_entry() {
        let a = IntMatrix::from_i64(2, &[1, -7, 3, 4]).unwrap();
        assert_eq!(a.norm(), BigInt::from(7));
    }

    #[test]
    fn display_parse_round_trip() {
        let a = IntMatrix::from_i64(2, &[1, -2, 3, 4]).unwrap();
        assert_eq!(a.to_string(), "[[1,-2],[3,4]]");
        assert_eq!("[[1,-2],[3,4]]".parse::<IntMatrix>().unwrap(), a);
        assert!("[[1,2],[3]]".parse::<IntMatrix>().is_err());
    }

    #[test]
    fn poly_eval_annihilates_char_poly() {
        // Cayley-Hamilton as a smoke test of poly_eval.
        let a = IntMatrix::from_i64(3, &[1, 2, 0, -1, 3, 4, 2, 2, -5]).unwrap();
        let chi = char_poly(&a);
        assert_eq!(a.poly_eval(&chi), IntMatrix::zero(3));
    }
}
