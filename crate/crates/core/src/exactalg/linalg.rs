//! Exact linear algebra over `Z` (and other integral domains where noted):
//! fraction-free determinants, integer kernels, Smith normal form, and
//! rational solves. Matrices at this layer are small and rectangular, stored
//! as row vectors.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::poly::IntPoly;

/// An integral domain with exact division, enough for Bareiss elimination.
/// The by-reference operations avoid the clones the `std::ops` bounds on
/// `Zero`/`One` would force.
pub trait Domain: Clone + PartialEq + Zero + One {
    fn radd(&self, other: &Self) -> Self;
    fn rsub(&self, other: &Self) -> Self;
    fn rmul(&self, other: &Self) -> Self;
    /// Division known to be exact; panics on failure.
    fn exact_div(&self, other: &Self) -> Self;
    fn rneg(&self) -> Self;
}

impl Domain for BigInt {
    fn radd(&self, other: &Self) -> Self {
        self + other
    }
    fn rsub(&self, other: &Self) -> Self {
        self - other
    }
    fn rmul(&self, other: &Self) -> Self {
        self * other
    }
    fn exact_div(&self, other: &Self) -> Self {
        let (q, r) = self.div_rem(other);
        debug_assert!(r.is_zero(), "inexact division in Bareiss elimination");
        q
    }
    fn rneg(&self) -> Self {
        -self
    }
}

impl Domain for IntPoly {
    fn radd(&self, other: &Self) -> Self {
        IntPoly::add(self, other)
    }
    fn rsub(&self, other: &Self) -> Self {
        IntPoly::sub(self, other)
    }
    fn rmul(&self, other: &Self) -> Self {
        IntPoly::mul(self, other)
    }
    fn exact_div(&self, other: &Self) -> Self {
        self.try_exact_div(other)
            .expect("inexact polynomial division in Bareiss elimination")
    }
    fn rneg(&self) -> Self {
        IntPoly::neg(self)
    }
}

/// Determinant of a square matrix by Bareiss fraction-free elimination.
pub fn bareiss_det<T: Domain>(mut m: Vec<Vec<T>>) -> T {
    let n = m.len();
    if n == 0 {
        return T::one();
    }
    debug_assert!(m.iter().all(|r| r.len() == n));
    let mut sign_flip = false;
    let mut prev = T::one();
    for k in 0..n {
        // Pivot search down column k.
        let pivot_row = (k..n).find(|&i| !m[i][k].is_zero());
        let pr = match pivot_row {
            Some(pr) => pr,
            None => return T::zero(),
        };
        if pr != k {
            m.swap(pr, k);
            sign_flip = !sign_flip;
        }
        for i in (k + 1)..n {
            for j in (k + 1)..n {
                let num = m[k][k].rmul(&m[i][j]).rsub(&m[i][k].rmul(&m[k][j]));
                m[i][j] = num.exact_div(&prev);
            }
            m[i][k] = T::zero();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if sign_flip {
        det.rneg()
    } else {
        det
    }
}

/// Rank of an integer matrix (fraction-free elimination).
pub fn rank(m: &[Vec<BigInt>]) -> usize {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut a: Vec<Vec<BigInt>> = m.to_vec();
    let mut r = 0usize;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let pivot = (r..rows).find(|&i| !a[i][c].is_zero());
        let Some(p) = pivot else { continue };
        a.swap(r, p);
        for i in (r + 1)..rows {
            if a[i][c].is_zero() {
                continue;
            }
            let g = a[r][c].gcd(&a[i][c]);
            let fr = &a[i][c] / &g;
            let fi = &a[r][c] / &g;
            for j in c..cols {
                a[i][j] = &a[i][j] * &fi - &a[r][j] * &fr;
            }
        }
        r += 1;
    }
    r
}

/// Basis of the right kernel `{x in Z^cols : M x = 0}` as rows. The result
/// is a basis of the full kernel lattice, which is saturated in `Z^cols` by
/// construction.
pub fn right_kernel(m: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    if cols == 0 {
        return Vec::new();
    }
    // Column-style elimination on M, applying the same column operations to
    // an identity block V. Columns of V over zeroed columns of M span the
    // kernel.
    let mut a: Vec<Vec<BigInt>> = m.to_vec();
    let mut v: Vec<Vec<BigInt>> = (0..cols)
        .map(|i| {
            (0..cols)
                .map(|j| if i == j { BigInt::one() } else { BigInt::zero() })
                .collect()
        })
        .collect(); // v[i] = column i of the transform, as a vector

    let mut pivot_cols: Vec<usize> = Vec::new();
    let mut row = 0usize;
    while row < rows {
        // Clear row `row` to a single nonzero entry among the columns not yet
        // used as pivots; combining only those columns preserves the zeros
        // already produced in earlier rows.
        let mut active: Vec<usize> = (0..cols).filter(|&c| !pivot_cols.contains(&c)).collect();
        active.retain(|&c| !a[row][c].is_zero());
        if active.is_empty() {
            row += 1;
            continue;
        }
        // Repeatedly combine columns to shrink entries in this row until one
        // nonzero remains among the active columns.
        loop {
            active.sort_by(|&c1, &c2| a[row][c1].abs().cmp(&a[row][c2].abs()));
            active.retain(|&c| !a[row][c].is_zero());
            if active.len() <= 1 {
                break;
            }
            let c0 = active[0];
            for &c in &active[1..] {
                let q = &a[row][c] / &a[row][c0]; // truncated quotient shrinks
                if !q.is_zero() {
                    for i in 0..rows {
                        let t = &a[i][c0] * &q;
                        a[i][c] -= t;
                    }
                    for i in 0..cols {
                        let t = &v[i][c0] * &q;
                        v[i][c] -= t;
                    }
                }
            }
        }
        if let Some(&c0) = active.first() {
            pivot_cols.push(c0);
        }
        row += 1;
    }

    let mut kernel = Vec::new();
    for c in 0..cols {
        if pivot_cols.contains(&c) {
            continue;
        }
        if (0..rows).all(|i| a[i][c].is_zero()) {
            let vec_c: Vec<BigInt> = (0..cols).map(|i| v[i][c].clone()).collect();
            if vec_c.iter().any(|x| !x.is_zero()) {
                kernel.push(vec_c);
            }
        }
    }
    kernel
}

/// Saturation of the row span: a basis of `(Q-span of rows) ∩ Z^n`.
pub fn saturate_rows(rows: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    if rows.is_empty() {
        return Vec::new();
    }
    let k = right_kernel(rows);
    if k.is_empty() {
        // Full column space; the standard basis saturates it.
        let n = rows[0].len();
        return (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| if i == j { BigInt::one() } else { BigInt::zero() })
                    .collect()
            })
            .collect();
    }
    right_kernel(&k)
}

/// Invariant factors (diagonal of the Smith normal form), nonnegative,
/// ordered by divisibility.
pub fn smith_invariant_factors(m: &[Vec<BigInt>]) -> Vec<BigInt> {
    let rows = m.len();
    if rows == 0 {
        return Vec::new();
    }
    let cols = m[0].len();
    let mut a: Vec<Vec<BigInt>> = m.to_vec();
    let mut out = Vec::new();
    let mut top = 0usize;
    let mut left = 0usize;
    while top < rows && left < cols {
        // Locate the entry of minimal nonzero absolute value.
        let mut best: Option<(usize, usize)> = None;
        for i in top..rows {
            for j in left..cols {
                if !a[i][j].is_zero()
                    && best.map_or(true, |(bi, bj)| a[i][j].abs() < a[bi][bj].abs())
                {
                    best = Some((i, j));
                }
            }
        }
        let Some((bi, bj)) = best else { break };
        a.swap(top, bi);
        for row in a.iter_mut() {
            row.swap(left, bj);
        }
        // Reduce row and column against the pivot; repeat until clean.
        let mut dirty = true;
        while dirty {
            dirty = false;
            for i in (top + 1)..rows {
                if a[i][left].is_zero() {
                    continue;
                }
                let q = div_round(&a[i][left], &a[top][left]);
                for j in left..cols {
                    let t = &a[top][j] * &q;
                    a[i][j] -= t;
                }
                if !a[i][left].is_zero() {
                    a.swap(top, i);
                    dirty = true;
                }
            }
            for j in (left + 1)..cols {
                if a[top][j].is_zero() {
                    continue;
                }
                let q = div_round(&a[top][j], &a[top][left]);
                for row in a.iter_mut().skip(top) {
                    let t = &row[left] * &q;
                    row[j] -= t;
                }
                if !a[top][j].is_zero() {
                    for row in a.iter_mut() {
                        row.swap(left, j);
                    }
                    dirty = true;
                }
            }
        }
        out.push(a[top][left].abs());
        top += 1;
        left += 1;
    }
    // Enforce the divisibility chain d1 | d2 | ... by gcd propagation.
    for i in 0..out.len() {
        for j in (i + 1)..out.len() {
            if (&out[j] % &out[i]).is_zero() {
                continue;
            }
            let g = out[i].gcd(&out[j]);
            let l = (&out[i] * &out[j]) / &g;
            out[i] = g;
            out[j] = l;
        }
    }
    out
}

fn div_round(a: &BigInt, b: &BigInt) -> BigInt {
    // Round-to-nearest quotient keeps SNF pivots shrinking.
    let (q, r) = a.div_rem(b);
    let two_r = BigInt::from(2) * r.abs();
    if two_r > b.abs() {
        if (a.sign() == b.sign()) || a.is_zero() {
            q + 1
        } else {
            q - 1
        }
    } else {
        q
    }
}

/// Gram matrix `B B^T` of a row basis.
pub fn gram_matrix(basis: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let k = basis.len();
    let mut g = vec![vec![BigInt::zero(); k]; k];
    for i in 0..k {
        for j in 0..k {
            g[i][j] = dot(&basis[i], &basis[j]);
        }
    }
    g
}

pub fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Solves `A x = b` over the rationals. Returns `None` when inconsistent;
/// when the solution space is positive-dimensional an arbitrary solution is
/// returned (free variables set to zero).
pub fn solve_rational(a: &[Vec<BigInt>], b: &[BigInt]) -> Option<Vec<BigRational>> {
    let rows = a.len();
    assert_eq!(rows, b.len());
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let mut m: Vec<Vec<BigRational>> = a
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            row.iter()
                .map(|x| BigRational::from(x.clone()))
                .chain(std::iter::once(BigRational::from(bi.clone())))
                .collect()
        })
        .collect();
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    let mut r = 0usize;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].clone();
        for j in c..=cols {
            m[r][j] = &m[r][j] / &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in c..=cols {
                    let t = &m[r][j] * &f;
                    m[i][j] -= t;
                }
            }
        }
        pivots.push((r, c));
        r += 1;
    }
    for i in r..rows {
        if !m[i][cols].is_zero() {
            return None;
        }
    }
    let mut x = vec![BigRational::zero(); cols];
    for (pr, pc) in pivots {
        x[pc] = m[pr][cols].clone();
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bi(v: i64) -> BigInt {
        BigInt::from(v)
    }

    fn mat(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter()
            .map(|r| r.iter().map(|&v| bi(v)).collect())
            .collect()
    }

    #[test]
    fn bareiss_matches_small_determinants() {
        assert_eq!(bareiss_det(mat(&[&[3]])), bi(3));
        assert_eq!(bareiss_det(mat(&[&[1, 2], &[3, 4]])), bi(-2));
        assert_eq!(
            bareiss_det(mat(&[&[2, 0, 1], &[1, 3, -1], &[0, 5, 4]])),
            bi(2 * (12 + 5) - 0 + (5 - 0))
        );
        assert_eq!(bareiss_det(mat(&[&[0, 1], &[1, 0]])), bi(-1));
        assert_eq!(bareiss_det(mat(&[&[0, 0], &[0, 1]])), bi(0));
    }

    #[test]
    fn kernel_of_rank_one() {
        let m = mat(&[&[1, 2, 3]]);
        let k = right_kernel(&m);
        assert_eq!(k.len(), 2);
        for v in &k {
            assert!(dot(&m[0], v).is_zero());
        }
        // Kernel basis is saturated: invariant factors all 1.
        let inv = smith_invariant_factors(&k);
        assert!(inv.iter().all(|d| d.is_one()));
    }

    #[test]
    fn kernel_of_full_rank_is_empty() {
        let m = mat(&[&[2, 1], &[1, 1]]);
        assert!(right_kernel(&m).is_empty());
    }

    #[test]
    fn saturation_divides_out_index() {
        // Row (2, 4) spans the same line as (1, 2); saturation recovers it.
        let s = saturate_rows(&mat(&[&[2, 4]]));
        assert_eq!(s.len(), 1);
        let v = &s[0];
        assert!(v == &[bi(1), bi(2)] || v == &[bi(-1), bi(-2)]);
    }

    #[test]
    fn smith_form_diag() {
        let m = mat(&[&[2, 4, 4], &[-6, 6, 12], &[10, 4, 16]]);
        let inv = smith_invariant_factors(&m);
        assert_eq!(inv, vec![bi(2), bi(2), bi(156)]);
    }

    #[test]
    fn rank_counts_independent_rows() {
        assert_eq!(rank(&mat(&[&[1, 2], &[2, 4]])), 1);
        assert_eq!(rank(&mat(&[&[1, 2], &[2, 5]])), 2);
        assert_eq!(rank(&mat(&[&[0, 0], &[0, 0]])), 0);
    }

    #[test]
    fn solve_rational_consistent() {
        let a = mat(&[&[2, 1], &[1, -1]]);
        let b = vec![bi(5), bi(1)];
        let x = solve_rational(&a, &b).unwrap();
        assert_eq!(x[0], BigRational::from(bi(2)));
        assert_eq!(x[1], BigRational::from(bi(1)));
        let b_bad = vec![bi(5)];
        let a_bad = mat(&[&[1, 1]]);
        assert!(solve_rational(&a_bad, &b_bad).is_some());
        // Inconsistent system.
        let a2 = mat(&[&[1, 1], &[2, 2]]);
        let b2 = vec![bi(1), bi(3)];
        assert!(solve_rational(&a2, &b2).is_none());
    }
}
