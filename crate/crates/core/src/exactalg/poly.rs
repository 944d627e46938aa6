//! Dense univariate polynomials over `Z`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::linalg::{bareiss_det, Domain};
use super::{ExactError, Result};

/// A polynomial with arbitrary-precision integer coefficients, stored densely
/// with the constant term first. The zero polynomial has no coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    /// Builds a polynomial from `coeffs[i]` = coefficient of `x^i`,
    /// trimming trailing zeros.
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        IntPoly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPoly::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        IntPoly::new(vec![c])
    }

    /// The monomial `c x^k`.
    pub fn monomial(c: BigInt, k: usize) -> Self {
        if c.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c;
        IntPoly { coeffs }
    }

    /// `x - r`.
    pub fn linear_root(r: &BigInt) -> Self {
        IntPoly::new(vec![-r.clone(), BigInt::one()])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    /// Degree with deg 0 for the zero polynomial; convenient in loops.
    pub fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff().map_or(false, |c| c.is_one())
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn derivative(&self) -> IntPoly {
        if self.coeffs.len() <= 1 {
            return IntPoly::zero();
        }
        IntPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    pub fn neg(&self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn add(&self, other: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) + other.coeff(i));
        }
        IntPoly::new(out)
    }

    pub fn sub(&self, other: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) - other.coeff(i));
        }
        IntPoly::new(out)
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() || other.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }

    pub fn mul_scalar(&self, c: &BigInt) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Substitutes `x -> x + a`.
    pub fn shift(&self, a: &BigInt) -> IntPoly {
        // Horner on the coefficient list: f(x+a) built from the top down.
        let mut acc = IntPoly::zero();
        let xa = IntPoly::new(vec![a.clone(), BigInt::one()]);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(&xa).add(&IntPoly::constant(c.clone()));
        }
        acc
    }

    /// Quotient and remainder by a divisor whose leading coefficient is a
    /// unit; panics otherwise.
    pub fn div_rem_monic(&self, divisor: &IntPoly) -> (IntPoly, IntPoly) {
        let lc = divisor
            .leading_coeff()
            .expect("division by zero polynomial");
        assert!(
            lc.is_one() || (-lc).is_one(),
            "div_rem_monic requires a unit leading coefficient"
        );
        let d = divisor.coeffs.len() - 1;
        if self.coeffs.len() <= d {
            return (IntPoly::zero(), self.clone());
        }
        let neg = !lc.is_one();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); rem.len() - d];
        for i in (d..rem.len()).rev() {
            let mut q = rem[i].clone();
            if q.is_zero() {
                continue;
            }
            if neg {
                q = -q;
            }
            rem[i] = BigInt::zero();
            for j in 0..d {
                rem[i - d + j] -= &q * &divisor.coeffs[j];
            }
            quot[i - d] = q;
        }
        (IntPoly::new(quot), IntPoly::new(rem))
    }

    /// Exact division over `Z`: returns `Some(q)` with `self = q * divisor`
    /// when such an integer quotient exists.
    pub fn try_exact_div(&self, divisor: &IntPoly) -> Option<IntPoly> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(IntPoly::zero());
        }
        if self.coeffs.len() < divisor.coeffs.len() {
            return None;
        }
        let d = divisor.coeffs.len() - 1;
        let lc = divisor.leading_coeff().unwrap();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); rem.len() - d];
        for i in (d..rem.len()).rev() {
            if rem[i].is_zero() {
                continue;
            }
            let (q, r) = rem[i].div_rem(lc);
            if !r.is_zero() {
                return None;
            }
            rem[i] = BigInt::zero();
            for j in 0..d {
                rem[i - d + j] -= &q * &divisor.coeffs[j];
            }
            quot[i - d] = q;
        }
        if rem.iter().all(|c| c.is_zero()) {
            Some(IntPoly::new(quot))
        } else {
            None
        }
    }

    pub fn divides(&self, other: &IntPoly) -> bool {
        other.try_exact_div(self).is_some()
    }

    /// Content: the gcd of the coefficients, nonnegative.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
        }
        g
    }

    /// Primitive part with positive leading coefficient.
    pub fn primitive_part(&self) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut c = self.content();
        if self.leading_coeff().unwrap().is_negative() {
            c = -c;
        }
        IntPoly::new(self.coeffs.iter().map(|a| a / &c).collect())
    }

    /// Polynomial gcd over `Z` via the primitive pseudo-remainder sequence.
    /// The result is primitive with positive leading coefficient, scaled by
    /// the gcd of the contents.
    pub fn gcd(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() {
            return other.primitive_part().mul_scalar(&other.content());
        }
        if other.is_zero() {
            return self.primitive_part().mul_scalar(&self.content());
        }
        let cont = self.content().gcd(&other.content());
        let mut a = self.primitive_part();
        let mut b = other.primitive_part();
        if a.deg() < b.deg() {
            std::mem::swap(&mut a, &mut b);
        }
        loop {
            let r = a.pseudo_rem(&b);
            if r.is_zero() {
                return b.mul_scalar(&cont);
            }
            a = b;
            b = r.primitive_part();
        }
    }

    /// Pseudo-remainder: the remainder of `lc(b)^(deg a - deg b + 1) * a`
    /// divided by `b`.
    fn pseudo_rem(&self, b: &IntPoly) -> IntPoly {
        let db = b.degree().expect("pseudo_rem by zero");
        let lcb = b.leading_coeff().unwrap().clone();
        let mut r = self.clone();
        while let Some(dr) = r.degree() {
            if dr < db {
                break;
            }
            let lead = r.leading_coeff().unwrap().clone();
            r = r.mul_scalar(&lcb);
            let shift = dr - db;
            let mut sub = vec![BigInt::zero(); shift];
            sub.extend(b.coeffs.iter().map(|c| c * &lead));
            r = r.sub(&IntPoly::new(sub));
            debug_assert!(r.deg() < dr || r.is_zero());
        }
        r
    }

    /// Squarefree part: `self / gcd(self, self')`, primitive.
    pub fn radical(&self) -> IntPoly {
        if self.is_constant() {
            return self.clone();
        }
        let g = self.gcd(&self.derivative());
        if g.is_constant() {
            return self.primitive_part();
        }
        self.try_exact_div(&g)
            .map(|q| q.primitive_part())
            .unwrap_or_else(|| self.primitive_part())
    }

    /// Yun squarefree decomposition of a primitive polynomial with positive
    /// leading coefficient: returns pairs `(a_i, i)` with `self = prod a_i^i`
    /// up to sign, each `a_i` squarefree, pairwise coprime.
    pub fn squarefree_decomposition(&self) -> Vec<(IntPoly, u32)> {
        let f = self.primitive_part();
        if f.is_constant() {
            return Vec::new();
        }
        let df = f.derivative();
        let g = f.gcd(&df);
        if g.is_constant() {
            return vec![(f, 1)];
        }
        let mut out = Vec::new();
        let mut w = f.try_exact_div(&g).unwrap();
        let mut y = df.try_exact_div(&g).unwrap();
        let mut z = y.sub(&w.derivative());
        let mut i = 1u32;
        while !w.is_constant() {
            let a = w.gcd(&z).primitive_part();
            if !a.is_constant() {
                out.push((a.clone(), i));
            }
            w = w.try_exact_div(&a).unwrap();
            y = z.try_exact_div(&a).unwrap();
            z = y.sub(&w.derivative());
            i += 1;
        }
        out
    }

    /// Maximum absolute coefficient.
    pub fn height(&self) -> BigInt {
        self.coeffs
            .iter()
            .map(|c| c.abs())
            .max()
            .unwrap_or_else(BigInt::zero)
    }
}

/// Resultant of two nonzero polynomials: the determinant of their Sylvester
/// matrix, computed fraction-free.
pub fn resultant(f: &IntPoly, g: &IntPoly) -> Result<BigInt> {
    if f.is_zero() || g.is_zero() {
        return Err(ExactError::ZeroPolynomial);
    }
    Ok(resultant_coeffs(f.coeffs(), g.coeffs()))
}

/// Resultant over any exact domain, given trimmed nonempty coefficient
/// slices with the constant term first.
pub(crate) fn resultant_coeffs<T: Domain>(fc: &[T], gc: &[T]) -> T {
    let m = fc.len() - 1;
    let n = gc.len() - 1;
    if m == 0 && n == 0 {
        return T::one();
    }
    if m == 0 {
        return pow_domain(&fc[0], n);
    }
    if n == 0 {
        return pow_domain(&gc[0], m);
    }
    // Sylvester matrix: n rows of f's coefficients, m rows of g's, descending.
    let size = m + n;
    let mut rows: Vec<Vec<T>> = Vec::with_capacity(size);
    for i in 0..n {
        let mut row = vec![T::zero(); size];
        for j in 0..=m {
            row[i + j] = fc[m - j].clone();
        }
        rows.push(row);
    }
    for i in 0..m {
        let mut row = vec![T::zero(); size];
        for j in 0..=n {
            row[i + j] = gc[n - j].clone();
        }
        rows.push(row);
    }
    bareiss_det(rows)
}

fn pow_domain<T: Domain>(base: &T, e: usize) -> T {
    let mut acc = T::one();
    for _ in 0..e {
        acc = acc.rmul(base);
    }
    acc
}

/// Discriminant `(-1)^(d(d-1)/2) Res(f, f') / lc(f)` of a non-constant
/// polynomial.
pub fn discriminant(f: &IntPoly) -> Result<BigInt> {
    let d = f.degree().ok_or(ExactError::ZeroPolynomial)?;
    if d == 0 {
        return Err(ExactError::ConstantPolynomial);
    }
    if d == 1 {
        return Ok(BigInt::one());
    }
    let res = resultant(f, &f.derivative())?;
    let lc = f.leading_coeff().unwrap();
    let (q, r) = res.div_rem(lc);
    debug_assert!(r.is_zero(), "resultant not divisible by leading coeff");
    let sign = if (d * (d - 1) / 2) % 2 == 0 { 1 } else { -1 };
    Ok(q * BigInt::from(sign))
}

/// All integer roots of a nonzero polynomial, with multiplicity, found by
/// root lifting modulo a prime power. When `bound` is given, only roots with
/// `|r| <= bound` are returned.
pub fn rational_integer_roots(f: &IntPoly, bound: Option<&BigInt>) -> Result<Vec<(BigInt, u32)>> {
    if f.is_zero() {
        return Err(ExactError::ZeroPolynomial);
    }
    let mut out: Vec<(BigInt, u32)> = Vec::new();
    let mut g = f.clone();
    // Strip powers of x.
    let mut zero_mult = 0u32;
    while !g.is_zero() && g.coeff(0).is_zero() && g.deg() > 0 {
        g = g.try_exact_div(&IntPoly::monomial(BigInt::one(), 1)).unwrap();
        zero_mult += 1;
    }
    if zero_mult > 0 {
        out.push((BigInt::zero(), zero_mult));
    }
    if g.is_constant() {
        return Ok(filter_bound(out, bound));
    }

    let rad = g.radical();
    // Cauchy bound for the absolute value of any root.
    let lc = rad.leading_coeff().unwrap().abs();
    let mut cauchy = BigInt::zero();
    for c in rad.coeffs() {
        let q = (c.abs() + &lc - 1) / &lc; // ceil(|c|/|lc|)
        if q > cauchy {
            cauchy = q;
        }
    }
    cauchy += 1;

    for r in lifted_root_candidates(&rad, &cauchy) {
        if g.eval(&r).is_zero() {
            let mut mult = 0u32;
            let lin = IntPoly::linear_root(&r);
            let mut h = g.clone();
            while let Some(q) = h.try_exact_div(&lin) {
                mult += 1;
                h = q;
            }
            out.push((r, mult));
        }
    }
    out.sort();
    Ok(filter_bound(out, bound))
}

fn filter_bound(roots: Vec<(BigInt, u32)>, bound: Option<&BigInt>) -> Vec<(BigInt, u32)> {
    match bound {
        None => roots,
        Some(b) => roots.into_iter().filter(|(r, _)| &r.abs() <= b).collect(),
    }
}

/// Candidate integer roots of a squarefree polynomial: simple roots mod a
/// good prime, Newton-lifted past twice the Cauchy bound and mapped to the
/// symmetric range.
fn lifted_root_candidates(rad: &IntPoly, cauchy: &BigInt) -> Vec<BigInt> {
    use super::fppoly::is_prime_u64;
    let mut p = 2u64;
    let p = loop {
        if is_prime_u64(p) && good_prime_for_roots(rad, p) {
            break p;
        }
        p += 1;
        assert!(p < 100_000, "no good prime found for root lifting");
    };

    let mut candidates = Vec::new();
    let pk_target = BigInt::from(2) * cauchy + 1;
    for r0 in 0..p {
        let fr = rad.eval(&BigInt::from(r0));
        if fr.mod_floor(&BigInt::from(p)).is_zero() {
            if let Some(r) = newton_lift(rad, r0, p, &pk_target) {
                candidates.push(r);
            }
        }
    }
    candidates
}

/// `p` does not divide the leading coefficient and the reduction stays
/// squarefree.
fn good_prime_for_roots(rad: &IntPoly, p: u64) -> bool {
    use super::fppoly::FpPoly;
    let lc = rad.leading_coeff().unwrap();
    if lc.mod_floor(&BigInt::from(p)).is_zero() {
        return false;
    }
    let fp = FpPoly::from_intpoly(rad, p).expect("prime checked");
    if fp.degree() != rad.degree() {
        return false;
    }
    fp.gcd(&fp.derivative()).deg() == 0
}

fn newton_lift(f: &IntPoly, r0: u64, p: u64, target: &BigInt) -> Option<BigInt> {
    let mut modulus = BigInt::from(p);
    let mut r = BigInt::from(r0);
    // f'(r) is a unit mod p because the root is simple.
    while &modulus < target {
        modulus = &modulus * &modulus;
        let fr = f.eval(&r).mod_floor(&modulus);
        let dfr = f.derivative().eval(&r).mod_floor(&modulus);
        let inv = mod_inverse(&dfr, &modulus)?;
        r = (&r - fr * inv).mod_floor(&modulus);
    }
    // Symmetric representative.
    let half = &modulus / 2;
    if r > half {
        r -= &modulus;
    }
    Some(r)
}

pub(crate) fn mod_inverse(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let e = a.extended_gcd(m);
    if e.gcd.is_one() {
        Some(e.x.mod_floor(m))
    } else {
        None
    }
}

// Operator impls so IntPoly satisfies the num-traits Zero/One bounds used by
// the generic elimination code.
impl std::ops::Add for IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: IntPoly) -> IntPoly {
        IntPoly::add(&self, &rhs)
    }
}

impl std::ops::Mul for IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: IntPoly) -> IntPoly {
        IntPoly::mul(&self, &rhs)
    }
}

impl Zero for IntPoly {
    fn zero() -> Self {
        IntPoly::zero()
    }
    fn is_zero(&self) -> bool {
        IntPoly::is_zero(self)
    }
}

impl One for IntPoly {
    fn one() -> Self {
        IntPoly::one()
    }
}

impl fmt::Display for IntPoly {
    /// Serializes as a coefficient list, constant term first: `[-2,0,1]`
    /// for `x^2 - 2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

impl FromStr for IntPoly {
    type Err = ExactError;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let inner = t
            .strip_prefix('[')
            .and_then(|v| v.strip_suffix(']'))
            .ok_or_else(|| ExactError::Parse(format!("expected [c0,c1,...], got {s:?}")))?;
        if inner.trim().is_empty() {
            return Ok(IntPoly::zero());
        }
        let coeffs = inner
            .split(',')
            .map(|part| {
                part.trim()
                    .parse::<BigInt>()
                    .map_err(|e| ExactError::Parse(format!("bad coefficient {part:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(IntPoly::new(coeffs))
    }
}
