//! Invariant-lattice machinery: kernel lattices of matrix polynomials,
//! saturation certificates through Smith normal form, exact-arithmetic LLL
//! reduction, pinch-point analysis of restriction matrices, and orthogonal
//! complements. All length comparisons happen on exact squared Euclidean
//! lengths; no floating point enters any decision.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::exactalg::linalg::{
    bareiss_det, dot, gram_matrix, rank, right_kernel, smith_invariant_factors, solve_rational,
};
use crate::exactalg::{char_poly, factor_over_z, IntMatrix, IntPoly};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LatticeError {
    #[error("basis rows are not independent")]
    DependentBasis,
    #[error("basis does not span a saturated lattice (invariant factors {0:?})")]
    NotSaturated(String),
    #[error("polynomial does not divide the characteristic polynomial")]
    NotADivisor,
    #[error("factor must be irreducible over Z")]
    ReducibleFactor,
    #[error("kernel rank {got} differs from the factor degree {expected}")]
    RankMismatch { expected: usize, got: usize },
    #[error("matrix does not preserve the lattice")]
    NotPreserved,
    #[error("lengths must be sorted nondecreasing")]
    LengthsNotSorted,
    #[error("pinch set violates the staircase shape")]
    StaircaseViolation,
    #[error("requires k <= n/2 (got k = {k}, n = {n})")]
    RankTooLarge { k: usize, n: usize },
    #[error("exponent bound {got} exceeds kn - n + 1 = {limit}")]
    BoundViolated { got: usize, limit: usize },
    #[error(transparent)]
    Exact(#[from] crate::exactalg::ExactError),
}

pub type Result<T> = std::result::Result<T, LatticeError>;

/// A primitive (saturated) sublattice of `Z^n`: the rational span intersected
/// with `Z^n` equals the lattice itself, certified by the Smith normal form
/// of the basis having all invariant factors 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimLattice {
    n: usize,
    basis: Vec<Vec<BigInt>>,
    gram_det: BigInt,
}

impl PrimLattice {
    /// Wraps an existing basis, verifying independence and saturation.
    pub fn new(n: usize, basis: Vec<Vec<BigInt>>) -> Result<Self> {
        if basis.is_empty() || basis.iter().any(|r| r.len() != n) {
            return Err(LatticeError::DependentBasis);
        }
        if rank(&basis) != basis.len() {
            return Err(LatticeError::DependentBasis);
        }
        let inv = smith_invariant_factors(&basis);
        if !inv.iter().all(|d| d.is_one()) {
            return Err(LatticeError::NotSaturated(format!("{inv:?}")));
        }
        let gram_det = bareiss_det(gram_matrix(&basis));
        Ok(PrimLattice { n, basis, gram_det })
    }

    /// The saturation of the row span of arbitrary (independent) vectors.
    pub fn saturate(n: usize, spanning: &[Vec<BigInt>]) -> Result<Self> {
        let sat = crate::exactalg::linalg::saturate_rows(spanning);
        if sat.len() != spanning.len() {
            return Err(LatticeError::DependentBasis);
        }
        PrimLattice::new(n, sat)
    }

    /// `<e_1, ..., e_k>` inside `Z^n`.
    pub fn coordinate(n: usize, k: usize) -> Self {
        let basis = (0..k)
            .map(|i| {
                (0..n)
                    .map(|j| if i == j { BigInt::one() } else { BigInt::zero() })
                    .collect()
            })
            .collect();
        PrimLattice::new(n, basis).expect("coordinate lattice is saturated")
    }

    pub fn ambient_dim(&self) -> usize {
        self.n
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<BigInt>] {
        &self.basis
    }

    /// Squared covolume `det(B B^T)`.
    pub fn gram_det(&self) -> &BigInt {
        &self.gram_det
    }

    /// Exact membership test for an integer vector.
    pub fn contains(&self, v: &[BigInt]) -> bool {
        // Solve y B = v over Q and demand integrality; saturation makes the
        // rational solution integral automatically, but check anyway.
        let bt: Vec<Vec<BigInt>> = transpose(&self.basis);
        match solve_rational(&bt, v) {
            None => false,
            Some(y) => {
                // Verify: y must reproduce v exactly (solve_rational returns an
                // arbitrary solution of a consistent system; here the system is
                // full column rank so it is unique).
                if !y.iter().all(|c| c.is_integer()) {
                    return false;
                }
                let yint: Vec<BigInt> = y.iter().map(|c| c.to_integer()).collect();
                let repro = combine(&yint, &self.basis);
                repro == v
            }
        }
    }
}

fn transpose(rows: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    if rows.is_empty() {
        return Vec::new();
    }
    let n = rows[0].len();
    (0..n)
        .map(|j| rows.iter().map(|r| r[j].clone()).collect())
        .collect()
}

fn combine(coeffs: &[BigInt], rows: &[Vec<BigInt>]) -> Vec<BigInt> {
    let n = rows[0].len();
    let mut out = vec![BigInt::zero(); n];
    for (c, row) in coeffs.iter().zip(rows) {
        for (o, r) in out.iter_mut().zip(row) {
            *o += c * r;
        }
    }
    out
}

/// The saturated kernel lattice `ker g(A) ∩ Z^n` for an irreducible monic
/// `g` dividing the characteristic polynomial of `A`. The lattice has rank
/// `deg g` and is carried into itself by `A`.
pub fn invariant_kernel_lattice(a: &IntMatrix, g: &IntPoly) -> Result<PrimLattice> {
    let chi = char_poly(a);
    if g.degree().is_none() || !g.is_monic() {
        return Err(LatticeError::Exact(crate::exactalg::ExactError::NotMonic));
    }
    if chi.try_exact_div(g).is_none() {
        return Err(LatticeError::NotADivisor);
    }
    let factors = factor_over_z(g)?;
    if factors.len() > 1 || factors[0].1 > 1 {
        return Err(LatticeError::ReducibleFactor);
    }
    let m = a.poly_eval(g);
    let kernel = right_kernel(&m.rows());
    if kernel.len() != g.deg() {
        return Err(LatticeError::RankMismatch {
            expected: g.deg(),
            got: kernel.len(),
        });
    }
    let lattice = PrimLattice::new(a.dim(), kernel)?;
    // A maps the lattice into itself: automatic for a saturated kernel of a
    // polynomial in A, asserted here as a cheap sanity check.
    debug_assert!(lattice
        .basis()
        .iter()
        .all(|v| lattice.contains(&a.mul_vec(v))));
    Ok(lattice)
}

/// An LLL-reduced basis (delta = 3/4) sorted by nondecreasing length, with
/// exact squared lengths and the unimodular transform from the input basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReducedBasis {
    pub vectors: Vec<Vec<BigInt>>,
    /// Exact squared Euclidean lengths, nondecreasing.
    pub norms_sq: Vec<BigInt>,
    /// `vectors = transform * original_basis` (rows).
    pub transform: Vec<Vec<BigInt>>,
}

/// Exact-integer LLL with rational Gram–Schmidt, followed by a length sort.
pub fn reduce_basis(lattice: &PrimLattice) -> ReducedBasis {
    lll_reduce(lattice.basis())
}

pub(crate) fn lll_reduce(basis: &[Vec<BigInt>]) -> ReducedBasis {
    let k = basis.len();
    let mut b: Vec<Vec<BigInt>> = basis.to_vec();
    let mut u: Vec<Vec<BigInt>> = (0..k)
        .map(|i| {
            (0..k)
                .map(|j| if i == j { BigInt::one() } else { BigInt::zero() })
                .collect()
        })
        .collect();
    // delta = 3/4. The basis sizes here are tiny (k <= 6), so the
    // Gram-Schmidt data is recomputed from scratch after each change.
    let delta = BigRational::new(BigInt::from(3), BigInt::from(4));
    let mut i = 1usize;
    while i < k {
        // Size-reduce b[i] against b[j], j < i.
        for j in (0..i).rev() {
            let (mu, _) = gram_schmidt(&b);
            let r = round_rational(&mu[i][j]);
            if !r.is_zero() {
                for t in 0..b[i].len() {
                    let d = &r * &b[j][t];
                    b[i][t] -= d;
                }
                for t in 0..k {
                    let d = &r * &u[j][t];
                    u[i][t] -= d;
                }
            }
        }
        let (mu, bstar) = gram_schmidt(&b);
        let lhs = &bstar[i];
        let musq = &mu[i][i - 1] * &mu[i][i - 1];
        let rhs = (&delta - &musq) * &bstar[i - 1];
        if lhs >= &rhs {
            i += 1;
        } else {
            b.swap(i, i - 1);
            u.swap(i, i - 1);
            i = i.max(2) - 1;
        }
    }
    // Sort by exact squared length, carrying the transform along.
    let mut order: Vec<usize> = (0..k).collect();
    let norms: Vec<BigInt> = b.iter().map(|v| dot(v, v)).collect();
    order.sort_by(|&x, &y| norms[x].cmp(&norms[y]));
    let vectors: Vec<Vec<BigInt>> = order.iter().map(|&x| b[x].clone()).collect();
    let transform: Vec<Vec<BigInt>> = order.iter().map(|&x| u[x].clone()).collect();
    let norms_sq: Vec<BigInt> = order.iter().map(|&x| norms[x].clone()).collect();
    ReducedBasis {
        vectors,
        norms_sq,
        transform,
    }
}

/// Rational Gram–Schmidt data: mu coefficients and squared lengths of the
/// orthogonalized vectors.
fn gram_schmidt(b: &[Vec<BigInt>]) -> (Vec<Vec<BigRational>>, Vec<BigRational>) {
    let k = b.len();
    let n = b[0].len();
    let mut mu = vec![vec![BigRational::zero(); k]; k];
    let mut star: Vec<Vec<BigRational>> = Vec::with_capacity(k);
    let mut norms = vec![BigRational::zero(); k];
    for i in 0..k {
        let mut v: Vec<BigRational> = b[i]
            .iter()
            .map(|x| BigRational::from(x.clone()))
            .collect();
        for j in 0..i {
            let num: BigRational = (0..n)
                .map(|t| BigRational::from(b[i][t].clone()) * &star[j][t])
                .sum();
            let m = if norms[j].is_zero() {
                BigRational::zero()
            } else {
                num / &norms[j]
            };
            mu[i][j] = m.clone();
            for t in 0..n {
                let d = &m * &star[j][t];
                v[t] -= d;
            }
        }
        norms[i] = v.iter().map(|x| x * x).sum();
        star.push(v);
    }
    (mu, norms)
}

fn round_rational(x: &BigRational) -> BigInt {
    // Nearest integer, ties toward +infinity; any tie rule works for LLL.
    let two = BigInt::from(2);
    let num = x.numer() * &two + x.denom();
    let den = x.denom() * &two;
    num_integer::Integer::div_floor(&num, &den)
}

/// Pinch analysis of a reduced length profile at height `T` with implied
/// constant `c`: position `(i, j)` (1-indexed, i > j) is pinched when
/// `c^2 T^2 l_j^2 < l_i^2`, i.e. the entry bound forces `g_ij = 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PinchReport {
    /// 1-indexed pinch positions, lexicographic.
    pub pinch: Vec<(usize, usize)>,
    /// `p_i`: number of pinch points in row i (1-indexed; entry 0 is row 1).
    pub row_counts: Vec<usize>,
    /// `k^2 + sum_i p_i (p_i + 1) / 2`.
    pub exponent: usize,
    /// The constant used in the comparisons.
    pub c: BigInt,
    /// True when some (i+1, i) is pinched, contradicting irreducibility of
    /// the restriction's characteristic polynomial.
    pub has_adjacent_pinch: bool,
}

pub fn pinch_points(lengths_sq: &[BigInt], t: &BigInt, c: &BigInt) -> Result<PinchReport> {
    let k = lengths_sq.len();
    for w in lengths_sq.windows(2) {
        if w[0] > w[1] {
            return Err(LatticeError::LengthsNotSorted);
        }
    }
    let scale = c * c * t * t;
    let mut pinch = Vec::new();
    let mut row_counts = vec![0usize; k];
    let mut has_adjacent_pinch = false;
    for i in 1..=k {
        for j in 1..=k {
            if j >= i {
                continue;
            }
            if &scale * &lengths_sq[j - 1] < lengths_sq[i - 1] {
                pinch.push((i, j));
                row_counts[i - 1] += 1;
                if i == j + 1 {
                    has_adjacent_pinch = true;
                }
            }
        }
    }
    // Staircase: (i,j) pinched, i' >= i, j' <= j implies (i',j') pinched.
    // Automatic for sorted lengths; verified because the invariant is load-
    // bearing for the row-count formula.
    for &(i, j) in &pinch {
        for i2 in i..=k {
            for j2 in 1..=j {
                if !pinch.contains(&(i2, j2)) {
                    return Err(LatticeError::StaircaseViolation);
                }
            }
        }
    }
    let exponent = k * k
        + row_counts
            .iter()
            .map(|&p| p * (p + 1) / 2)
            .sum::<usize>();
    Ok(PinchReport {
        pinch,
        row_counts,
        exponent,
        c: c.clone(),
        has_adjacent_pinch,
    })
}

/// Exponent bound on the number of restriction matrices G for a rank-k
/// lattice in dimension n with the given pinch report: the staircase bound
/// from the report when the pinch set is small, the entry-count bound
/// `kn - |P|` when it is large. When no (i+1, i) position is pinched the
/// result is checked against the `kn - n + 1` ceiling.
pub fn g_count_bound(n: usize, k: usize, report: &PinchReport) -> Result<usize> {
    if 2 * k > n {
        return Err(LatticeError::RankTooLarge { k, n });
    }
    // Reject reports whose pinch set is not a lower-left staircase.
    for &(i, j) in &report.pinch {
        if j >= i {
            return Err(LatticeError::StaircaseViolation);
        }
        for i2 in i..=report.row_counts.len() {
            for j2 in 1..=j {
                if !report.pinch.contains(&(i2, j2)) {
                    return Err(LatticeError::StaircaseViolation);
                }
            }
        }
    }
    let p = report.pinch.len();
    if p >= n - 1 {
        return Ok(k * n - p);
    }
    let r = report.exponent;
    if !report.has_adjacent_pinch {
        let limit = k * n - n + 1;
        if r > limit {
            return Err(LatticeError::BoundViolated { got: r, limit });
        }
    }
    Ok(r)
}

/// The saturated orthogonal complement: all integer vectors annihilated by
/// the basis, of rank `n - k`, with the same squared covolume (primitive
/// lattice duality).
pub fn orthogonal_complement(lattice: &PrimLattice) -> PrimLattice {
    let n = lattice.ambient_dim();
    let kernel = right_kernel(lattice.basis());
    let comp = PrimLattice::new(n, kernel).expect("kernel lattice is saturated");
    debug_assert_eq!(
        comp.gram_det(),
        lattice.gram_det(),
        "primitive lattice and its complement share the squared covolume"
    );
    comp
}

/// Dimension of the space of matrices `M` with `M Λ ⊆ Λ ⊗ Q`, computed by
/// exact rank. Always `n^2 - k(n-k)`.
pub fn invariant_space_dim(lattice: &PrimLattice) -> usize {
    let n = lattice.ambient_dim();
    let k = lattice.rank();
    let comp = orthogonal_complement(lattice);
    // Constraint per (w in complement basis, v in lattice basis):
    //   sum_{a,b} w_a M_{ab} v_b = 0.
    let mut constraints: Vec<Vec<BigInt>> = Vec::with_capacity(k * (n - k));
    for w in comp.basis() {
        for v in lattice.basis() {
            let mut row = Vec::with_capacity(n * n);
            for a in 0..n {
                for b in 0..n {
                    row.push(&w[a] * &v[b]);
                }
            }
            constraints.push(row);
        }
    }
    let dim = n * n - rank(&constraints);
    debug_assert_eq!(dim, n * n - k * (n - k));
    dim
}

/// The matrix `G = [g_ij]` of the action of `A` on the span of the given
/// basis vectors: `A v_j = sum_i g_ij v_i`, exact and integral. Errors when
/// `A` does not preserve the lattice spanned by the basis.
pub fn restriction_matrix(a: &IntMatrix, basis: &[Vec<BigInt>]) -> Result<Vec<Vec<BigInt>>> {
    let k = basis.len();
    let bt = transpose(basis);
    let mut g = vec![vec![BigInt::zero(); k]; k];
    for j in 0..k {
        let image = a.mul_vec(&basis[j]);
        let y = solve_rational(&bt, &image).ok_or(LatticeError::NotPreserved)?;
        if !y.iter().all(|c| c.is_integer()) {
            return Err(LatticeError::NotPreserved);
        }
        let yint: Vec<BigInt> = y.iter().map(|c| c.to_integer()).collect();
        // The rational solve only used a maximal independent subsystem; the
        // whole image must be reproduced.
        if combine(&yint, basis) != image {
            return Err(LatticeError::NotPreserved);
        }
        for i in 0..k {
            g[i][j] = yint[i].clone();
        }
    }
    Ok(g)
}

/// The rank-3 lattice in dimension 6 whose basis lengths grow like
/// `1, T, T^2`, producing a pinch point at (3,1) and exponent bound 10.
pub fn example_n6k3_lattice(t: i64) -> PrimLattice {
    let t = BigInt::from(t);
    let z = BigInt::zero;
    let one = BigInt::one;
    let basis = vec![
        vec![one(), z(), z(), z(), z(), z()],
        vec![z(), one(), t.clone(), z(), z(), z()],
        vec![z(), z(), z(), one(), t.clone(), &t * &t],
    ];
    PrimLattice::new(6, basis).expect("example basis is saturated")
}

/// Exponent of the covolume bound for kernel lattices built from matrices of
/// height T: `gram_det <= const * T^(2 (k^2 (n-k) + k(k-1)/2))`.
pub fn covolume_bound_exponent(n: usize, k: usize) -> usize {
    2 * (k * k * (n - k) + k * (k - 1) / 2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn bi(v: i64) -> BigInt {
        BigInt::from(v)
    }

    fn vecs(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter()
            .map(|r| r.iter().map(|&v| bi(v)).collect())
            .collect()
    }

    #[test]
    fn coordinate_lattice_roundtrip() {
        let l = PrimLattice::coordinate(4, 2);
        assert_eq!(l.rank(), 2);
        assert_eq!(l.gram_det(), &bi(1));
        assert!(l.contains(&[bi(3), bi(-1), bi(0), bi(0)]));
        assert!(!l.contains(&[bi(0), bi(0), bi(1), bi(0)]));
    }

    #[test]
    fn non_saturated_basis_rejected() {
        let err = PrimLattice::new(2, vecs(&[&[2, 0]]));
        assert!(matches!(err, Err(LatticeError::NotSaturated(_))));
        let sat = PrimLattice::saturate(2, &vecs(&[&[2, 0]])).unwrap();
        assert_eq!(sat.gram_det(), &bi(1));
    }

    #[test]
    fn kernel_lattice_of_block_matrix() {
        // diag-block(C_g, C_h) with g = x^2 - 2, h = x^2 - 3: kernel of g(A)
        // in split coordinates is <e1, e2>.
        let g = IntPoly::from_i64(&[-2, 0, 1]);
        let h = IntPoly::from_i64(&[-3, 0, 1]);
        let cg = IntMatrix::companion(&g).unwrap();
        let ch = IntMatrix::companion(&h).unwrap();
        let mut a = IntMatrix::zero(4);
        for i in 0..2 {
            for j in 0..2 {
                a.set(i, j, cg.at(i, j).clone());
                a.set(i + 2, j + 2, ch.at(i, j).clone());
            }
        }
        let l = invariant_kernel_lattice(&a, &g).unwrap();
        assert_eq!(l.rank(), 2);
        assert!(l.contains(&[bi(1), bi(0), bi(0), bi(0)]));
        assert!(l.contains(&[bi(0), bi(1), bi(0), bi(0)]));
        assert_eq!(l.gram_det(), &bi(1));
    }

    #[test]
    fn kernel_lattice_rejects_non_divisor() {
        let a = IntMatrix::identity(2);
        let g = IntPoly::from_i64(&[-2, 0, 1]);
        assert_eq!(
            invariant_kernel_lattice(&a, &g),
            Err(LatticeError::NotADivisor)
        );
    }

    #[test]
    fn kernel_lattice_rejects_reducible_factor() {
        // chi = (x-1)(x+1), g = chi reducible.
        let a = IntMatrix::from_i64(2, &[0, 1, 1, 0]).unwrap();
        let g = IntPoly::from_i64(&[-1, 0, 1]);
        assert_eq!(
            invariant_kernel_lattice(&a, &g),
            Err(LatticeError::ReducibleFactor)
        );
    }

    #[test]
    fn lll_keeps_orthogonal_basis() {
        let l = PrimLattice::new(3, vecs(&[&[1, 0, 0], &[0, 1, 0]])).unwrap();
        let red = reduce_basis(&l);
        assert_eq!(red.norms_sq, vec![bi(1), bi(1)]);
    }

    #[test]
    fn lll_shortens_skewed_basis() {
        // Spec example: all reduced vectors have squared length <= 3.
        let l = PrimLattice::saturate(3, &vecs(&[&[1, 1, 1], &[-1, 0, 2], &[3, 5, 6]])).unwrap();
        let red = reduce_basis(&l);
        for nsq in &red.norms_sq {
            assert!(nsq <= &bi(3), "squared length {nsq} > 3");
        }
        for w in red.norms_sq.windows(2) {
            assert!(w[0] <= w[1]);
        }
    }

    #[test]
    fn lll_transform_is_unimodular_and_exact() {
        let basis = vecs(&[&[12, 1, 0], &[13, 1, 1], &[25, 3, 2]]);
        let l = PrimLattice::saturate(3, &basis).unwrap();
        let red = reduce_basis(&l);
        let det = bareiss_det(red.transform.clone());
        assert!(det == bi(1) || det == bi(-1));
        // vectors = transform * basis
        for (i, v) in red.vectors.iter().enumerate() {
            let mut acc = vec![bi(0), bi(0), bi(0)];
            for (c, row) in red.transform[i].iter().zip(l.basis()) {
                for t in 0..3 {
                    acc[t] += c * &row[t];
                }
            }
            assert_eq!(&acc, v);
        }
    }

    #[test]
    fn pinch_profile_of_example() {
        // lengths (1, T, T^2) squared, c = 1, matching the displayed lattice.
        let t = bi(100);
        let lengths = vec![bi(1), &t * &t, (&t * &t) * (&t * &t)];
        let report = pinch_points(&lengths, &t, &bi(1)).unwrap();
        assert_eq!(report.pinch, vec![(3, 1)]);
        assert_eq!(report.exponent, 10);
        assert!(!report.has_adjacent_pinch);
        assert_eq!(g_count_bound(6, 3, &report).unwrap(), 10);
    }

    #[test]
    fn pinch_empty_for_equal_lengths() {
        let lengths = vec![bi(4), bi(4), bi(4)];
        let report = pinch_points(&lengths, &bi(10), &bi(1)).unwrap();
        assert!(report.pinch.is_empty());
        assert_eq!(report.exponent, 9);
        assert_eq!(g_count_bound(6, 3, &report).unwrap(), 9);
    }

    #[test]
    fn pinch_rejects_unsorted() {
        let lengths = vec![bi(4), bi(1)];
        assert_eq!(
            pinch_points(&lengths, &bi(2), &bi(1)),
            Err(LatticeError::LengthsNotSorted)
        );
    }

    #[test]
    fn complement_of_coordinate_lattice() {
        let l = PrimLattice::coordinate(4, 2);
        let c = orthogonal_complement(&l);
        assert_eq!(c.rank(), 2);
        assert!(c.contains(&[bi(0), bi(0), bi(1), bi(0)]));
        assert!(c.contains(&[bi(0), bi(0), bi(0), bi(1)]));
    }

    #[test]
    fn complement_shares_gram_det() {
        let l = PrimLattice::new(2, vecs(&[&[1, 1]])).unwrap();
        assert_eq!(l.gram_det(), &bi(2));
        let c = orthogonal_complement(&l);
        assert_eq!(c.gram_det(), &bi(2));
        assert!(c.contains(&[bi(1), bi(-1)]));
    }

    #[test]
    fn invariant_dim_small_cases() {
        assert_eq!(invariant_space_dim(&PrimLattice::coordinate(2, 1)), 3);
        assert_eq!(invariant_space_dim(&PrimLattice::coordinate(4, 2)), 12);
        assert_eq!(invariant_space_dim(&example_n6k3_lattice(100)), 27);
    }

    #[test]
    fn restriction_of_coordinate_lattice_is_upper_left_block() {
        let a = IntMatrix::from_i64(3, &[1, 2, 3, 0, 4, 5, 0, 0, 6]).unwrap();
        let l = PrimLattice::coordinate(3, 2);
        let g = restriction_matrix(&a, l.basis()).unwrap();
        // Coordinate basis rows are e1, e2: A e1 = (1,0,0)^T, A e2 = (2,4,0)^T.
        assert_eq!(g, vecs(&[&[1, 2], &[0, 4]]));
    }

    #[test]
    fn restriction_charpoly_divides() {
        let g = IntPoly::from_i64(&[-2, 0, 1]);
        let h = IntPoly::from_i64(&[-3, 0, 1]);
        let cg = IntMatrix::companion(&g).unwrap();
        let ch = IntMatrix::companion(&h).unwrap();
        let mut a = IntMatrix::zero(4);
        for i in 0..2 {
            for j in 0..2 {
                a.set(i, j, cg.at(i, j).clone());
                a.set(i + 2, j + 2, ch.at(i, j).clone());
            }
        }
        let l = invariant_kernel_lattice(&a, &g).unwrap();
        let red = reduce_basis(&l);
        let gm = restriction_matrix(&a, &red.vectors).unwrap();
        let gmat = IntMatrix::from_rows(gm).unwrap();
        let chi_g = char_poly(&gmat);
        let chi_a = char_poly(&a);
        assert!(chi_a.try_exact_div(&chi_g).is_some());
    }

    #[test]
    fn restriction_rejects_non_invariant() {
        let a = IntMatrix::from_i64(2, &[0, 1, 1, 0]).unwrap();
        let l = PrimLattice::coordinate(2, 1);
        assert_eq!(
            restriction_matrix(&a, l.basis()),
            Err(LatticeError::NotPreserved)
        );
    }
}
