//! Polynomials over prime fields `F_p` and their complete factorization:
//! squarefree decomposition, distinct-degree splitting, then equal-degree
//! splitting by Cantor–Zassenhaus with a fixed-seed generator so identical
//! inputs factor identically.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::poly::IntPoly;
use super::{ExactError, Result};

/// Deterministic Miller–Rabin. The witness set is sound for every `u64`.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod_u64(a % n, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod_u64(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

#[inline]
pub(crate) fn mul_mod_u64(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub(crate) fn pow_mod_u64(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod_u64(acc, base, m);
        }
        base = mul_mod_u64(base, base, m);
        exp >>= 1;
    }
    acc
}

pub(crate) fn inv_mod_u64(a: u64, p: u64) -> u64 {
    // p prime, a not divisible by p.
    pow_mod_u64(a, p - 2, p)
}

/// A dense polynomial over `F_p`, coefficients reduced to `[0, p)`,
/// constant term first. The modulus is checked prime on construction.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FpPoly {
    coeffs: Vec<u64>,
    p: u64,
}

impl FpPoly {
    pub fn new(p: u64, coeffs: Vec<u64>) -> Result<Self> {
        if !is_prime_u64(p) {
            return Err(ExactError::CompositeModulus(p));
        }
        Ok(Self::new_unchecked(p, coeffs))
    }

    pub(crate) fn new_unchecked(p: u64, mut coeffs: Vec<u64>) -> Self {
        for c in coeffs.iter_mut() {
            *c %= p;
        }
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        FpPoly { coeffs, p }
    }

    /// Reduction of an integer polynomial modulo `p`.
    pub fn from_intpoly(f: &IntPoly, p: u64) -> Result<Self> {
        if !is_prime_u64(p) {
            return Err(ExactError::CompositeModulus(p));
        }
        let pb = BigInt::from(p);
        let coeffs = f
            .coeffs()
            .iter()
            .map(|c| c.mod_floor(&pb).to_u64().unwrap())
            .collect();
        Ok(FpPoly::new_unchecked(p, coeffs))
    }

    /// Lift to `Z[x]` with coefficients in `[0, p)`.
    pub fn lift(&self) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero(p: u64) -> Self {
        FpPoly { coeffs: vec![], p }
    }

    pub fn one(p: u64) -> Self {
        FpPoly::new_unchecked(p, vec![1])
    }

    pub fn x(p: u64) -> Self {
        FpPoly::new_unchecked(p, vec![0, 1])
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> u64 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn leading_coeff(&self) -> u64 {
        *self.coeffs.last().unwrap_or(&0)
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff() == 1
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    pub fn eval(&self, x: u64) -> u64 {
        let mut acc = 0u64;
        for &c in self.coeffs.iter().rev() {
            acc = (mul_mod_u64(acc, x % self.p, self.p) + c) % self.p;
        }
        acc
    }

    pub fn add(&self, other: &FpPoly) -> FpPoly {
        debug_assert_eq!(self.p, other.p);
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| (self.coeff(i) + other.coeff(i)) % self.p)
            .collect();
        FpPoly::new_unchecked(self.p, coeffs)
    }

    pub fn sub(&self, other: &FpPoly) -> FpPoly {
        debug_assert_eq!(self.p, other.p);
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| (self.coeff(i) + self.p - other.coeff(i)) % self.p)
            .collect();
        FpPoly::new_unchecked(self.p, coeffs)
    }

    pub fn mul(&self, other: &FpPoly) -> FpPoly {
        debug_assert_eq!(self.p, other.p);
        if self.is_zero() || other.is_zero() {
            return FpPoly::zero(self.p);
        }
        let mut out = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = (out[i + j] + mul_mod_u64(a, b, self.p)) % self.p;
            }
        }
        FpPoly::new_unchecked(self.p, out)
    }

    pub fn mul_scalar(&self, c: u64) -> FpPoly {
        let coeffs = self
            .coeffs
            .iter()
            .map(|&a| mul_mod_u64(a, c % self.p, self.p))
            .collect();
        FpPoly::new_unchecked(self.p, coeffs)
    }

    pub fn make_monic(&self) -> FpPoly {
        if self.is_zero() || self.is_monic() {
            return self.clone();
        }
        self.mul_scalar(inv_mod_u64(self.leading_coeff(), self.p))
    }

    pub fn div_rem(&self, divisor: &FpPoly) -> (FpPoly, FpPoly) {
        debug_assert_eq!(self.p, divisor.p);
        let d = divisor.degree().expect("division by zero polynomial");
        if self.deg() < d || self.is_zero() {
            return (FpPoly::zero(self.p), self.clone());
        }
        let p = self.p;
        let inv_lc = inv_mod_u64(divisor.leading_coeff(), p);
        let mut rem = self.coeffs.clone();
        let mut quot = vec![0u64; rem.len() - d];
        for i in (d..rem.len()).rev() {
            if rem[i] == 0 {
                continue;
            }
            let q = mul_mod_u64(rem[i], inv_lc, p);
            quot[i - d] = q;
            for j in 0..=d {
                let t = mul_mod_u64(q, divisor.coeffs[j], p);
                rem[i - d + j] = (rem[i - d + j] + p - t) % p;
            }
        }
        (
            FpPoly::new_unchecked(p, quot),
            FpPoly::new_unchecked(p, rem),
        )
    }

    pub fn rem(&self, divisor: &FpPoly) -> FpPoly {
        self.div_rem(divisor).1
    }

    /// Monic gcd.
    pub fn gcd(&self, other: &FpPoly) -> FpPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.make_monic()
    }

    pub fn derivative(&self) -> FpPoly {
        if self.coeffs.len() <= 1 {
            return FpPoly::zero(self.p);
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| mul_mod_u64(c, (i as u64) % self.p, self.p))
            .collect();
        FpPoly::new_unchecked(self.p, coeffs)
    }

    /// `self^exp mod modulus`, square-and-multiply on big exponents.
    pub fn pow_mod(&self, exp: &num_bigint::BigUint, modulus: &FpPoly) -> FpPoly {
        let mut acc = FpPoly::one(self.p);
        let mut base = self.rem(modulus);
        for i in 0..exp.bits() {
            if exp.bit(i) {
                acc = acc.mul(&base).rem(modulus);
            }
            base = base.mul(&base).rem(modulus);
        }
        acc
    }

    /// p-th root of a polynomial in `x^p` (Frobenius is the identity on
    /// `F_p`, so coefficients transfer unchanged).
    fn pth_root(&self) -> FpPoly {
        let p = self.p as usize;
        let coeffs = self
            .coeffs
            .iter()
            .step_by(p)
            .copied()
            .collect();
        FpPoly::new_unchecked(self.p, coeffs)
    }
}

/// A complete factorization over `F_p`: pairwise-distinct monic irreducible
/// factors with multiplicities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FpFactorization {
    pub p: u64,
    pub factors: Vec<(FpPoly, u32)>,
}

impl FpFactorization {
    /// Multiplies the factorization back out.
    pub fn product(&self) -> FpPoly {
        let mut acc = FpPoly::one(self.p);
        for (f, e) in &self.factors {
            for _ in 0..*e {
                acc = acc.mul(f);
            }
        }
        acc
    }

    /// Multiset of factor degrees, with multiplicity, ascending.
    pub fn degree_pattern(&self) -> Vec<usize> {
        let mut out: Vec<usize> = Vec::new();
        for (f, e) in &self.factors {
            for _ in 0..*e {
                out.push(f.deg());
            }
        }
        out.sort_unstable();
        out
    }

    pub fn is_squarefree(&self) -> bool {
        self.factors.iter().all(|(_, e)| *e == 1)
    }
}

const FACTOR_SEED: u64 = 0x5eed_cafe_f00d_0001;

/// Complete factorization of a nonzero polynomial over `F_p`. Non-monic
/// input is normalized by its unit leading coefficient (the unit is not
/// reported). Deterministic: the equal-degree splitting draws from a
/// fixed-seed generator.
pub fn factor_mod_p(f: &FpPoly) -> Result<FpFactorization> {
    if f.is_zero() {
        return Err(ExactError::ZeroPolynomial);
    }
    let p = f.modulus();
    let monic = f.make_monic();
    let mut rng = ChaCha8Rng::seed_from_u64(FACTOR_SEED);
    let mut factors: Vec<(FpPoly, u32)> = Vec::new();
    for (part, mult) in squarefree_parts(&monic) {
        for (prod, d) in distinct_degree_split(&part) {
            for irr in equal_degree_split(&prod, d, &mut rng) {
                factors.push((irr, mult));
            }
        }
    }
    factors.sort_by(|a, b| {
        (a.0.deg(), a.0.coeffs(), a.1).cmp(&(b.0.deg(), b.0.coeffs(), b.1))
    });
    let out = FpFactorization { p, factors };
    debug_assert_eq!(out.product(), monic);
    Ok(out)
}

/// The index of a monic polynomial modulo p: `n - sum deg(distinct
/// irreducible factors)`; zero exactly when the polynomial is squarefree.
pub fn poly_index_mod_p(f: &FpPoly) -> Result<usize> {
    if f.is_zero() {
        return Err(ExactError::ZeroPolynomial);
    }
    if !f.is_monic() {
        return Err(ExactError::NotMonic);
    }
    let n = f.deg();
    // The radical's degree is all we need; squarefree parts are coprime.
    let rad_deg: usize = squarefree_parts(f).iter().map(|(g, _)| g.deg()).sum();
    Ok(n - rad_deg)
}

/// Squarefree decomposition in characteristic p: returns coprime squarefree
/// monic `(g_i, e_i)` with `f = prod g_i^{e_i}`.
pub(crate) fn squarefree_parts(f: &FpPoly) -> Vec<(FpPoly, u32)> {
    let p = f.modulus();
    let mut out = Vec::new();
    let mut f = f.make_monic();
    let mut outer = 1u32;
    loop {
        if f.deg() == 0 {
            return out;
        }
        let df = f.derivative();
        if df.is_zero() {
            f = f.pth_root();
            outer *= p as u32;
            continue;
        }
        let mut c = f.gcd(&df);
        let mut w = f.div_rem(&c).0;
        let mut i = 1u32;
        while !w.is_one() {
            let y = w.gcd(&c);
            let z = w.div_rem(&y).0;
            if z.deg() > 0 {
                out.push((z, outer * i));
            }
            w = y;
            c = c.div_rem(&w).0;
            i += 1;
        }
        if c.is_one() {
            return out;
        }
        // Remaining factors all have multiplicity divisible by p.
        f = c.pth_root();
        outer *= p as u32;
    }
}

/// Distinct-degree factorization of a squarefree monic polynomial:
/// returns `(product of all irreducible factors of degree d, d)`.
fn distinct_degree_split(f: &FpPoly) -> Vec<(FpPoly, usize)> {
    let p = f.modulus();
    let mut out = Vec::new();
    let mut g = f.clone();
    let mut h = FpPoly::x(p).rem(&g);
    let mut d = 0usize;
    let p_big = num_bigint::BigUint::from(p);
    while g.deg() >= 2 * (d + 1) {
        d += 1;
        h = h.pow_mod(&p_big, &g);
        let diff = h.sub(&FpPoly::x(p));
        let gd = g.gcd(&diff);
        if gd.deg() > 0 {
            out.push((gd.clone(), d));
            g = g.div_rem(&gd).0;
            h = h.rem(&g);
        }
    }
    if g.deg() > 0 {
        let dg = g.deg();
        out.push((g, dg));
    }
    out
}

/// Equal-degree splitting (Cantor–Zassenhaus) of a squarefree monic product
/// of irreducibles all of degree `d`.
fn equal_degree_split(f: &FpPoly, d: usize, rng: &mut ChaCha8Rng) -> Vec<FpPoly> {
    if f.deg() == d {
        return vec![f.clone()];
    }
    let p = f.modulus();
    let split = loop {
        let a = random_poly(p, f.deg(), rng);
        if a.deg() == 0 {
            continue;
        }
        let g0 = f.gcd(&a);
        if g0.deg() > 0 && g0.deg() < f.deg() {
            break g0;
        }
        let t = if p == 2 {
            // Trace map over F_2: a + a^2 + a^4 + ... (d terms).
            let mut acc = FpPoly::zero(p);
            let mut cur = a.rem(f);
            for _ in 0..d {
                acc = acc.add(&cur);
                cur = cur.mul(&cur).rem(f);
            }
            acc
        } else {
            let exp = (num_bigint::BigUint::from(p).pow(d as u32) - 1u32) / 2u32;
            a.pow_mod(&exp, f).sub(&FpPoly::one(p))
        };
        let g = f.gcd(&t);
        if g.deg() > 0 && g.deg() < f.deg() {
            break g;
        }
    };
    let rest = f.div_rem(&split).0;
    let mut out = equal_degree_split(&split, d, rng);
    out.extend(equal_degree_split(&rest, d, rng));
    out
}

fn random_poly(p: u64, max_deg: usize, rng: &mut ChaCha8Rng) -> FpPoly {
    let deg = rng.gen_range(1..=max_deg.max(1));
    let coeffs = (0..=deg).map(|_| rng.gen_range(0..p)).collect();
    FpPoly::new_unchecked(p, coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fp(p: u64, cs: &[u64]) -> FpPoly {
        FpPoly::new(p, cs.to_vec()).unwrap()
    }

    #[test]
    fn primality_small_values() {
        let primes: Vec<u64> = (0..60).filter(|&n| is_prime_u64(n)).collect();
        assert_eq!(
            primes,
            vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59]
        );
        assert!(is_prime_u64(1_000_000_007));
        assert!(!is_prime_u64(1_000_000_007u64 * 3));
    }

    #[test]
    fn composite_modulus_rejected() {
        assert_eq!(
            FpPoly::new(6, vec![1, 1]),
            Err(ExactError::CompositeModulus(6))
        );
    }

    #[test]
    fn factor_frobenius_square_mod_2() {
        // x^2 + 1 = (x + 1)^2 over F_2
        let f = fp(2, &[1, 0, 1]);
        let fac = factor_mod_p(&f).unwrap();
        assert_eq!(fac.factors, vec![(fp(2, &[1, 1]), 2)]);
    }

    #[test]
    fn factor_split_mod_5() {
        // x^2 + 1 = (x + 2)(x + 3) over F_5 since 2^2 = 3^2 = -1
        let f = fp(5, &[1, 0, 1]);
        let fac = factor_mod_p(&f).unwrap();
        assert_eq!(fac.factors, vec![(fp(5, &[2, 1]), 1), (fp(5, &[3, 1]), 1)]);
    }

    #[test]
    fn factor_irreducible_mod_3() {
        // x^2 + 1 has no root among {0,1,2} mod 3, hence irreducible.
        let f = fp(3, &[1, 0, 1]);
        let fac = factor_mod_p(&f).unwrap();
        assert_eq!(fac.factors, vec![(f, 1)]);
    }

    #[test]
    fn factor_normalizes_unit() {
        let f = fp(7, &[3, 0, 3]); // 3(x^2 + 1); x^2+1 irreducible mod 7? -1 QR mod 7: 7 = 3 mod 4, no.
        let fac = factor_mod_p(&f).unwrap();
        assert_eq!(fac.product(), f.make_monic());
    }

    #[test]
    fn factor_rejects_zero() {
        assert!(factor_mod_p(&FpPoly::zero(5)).is_err());
    }

    #[test]
    fn index_of_squarefree_is_zero() {
        let f = fp(7, &[6, 0, 1]); // x^2 - 1 = (x-1)(x+1)
        assert_eq!(poly_index_mod_p(&f).unwrap(), 0);
    }

    #[test]
    fn index_of_pure_power() {
        // x^n has one irreducible factor x, so index n - 1.
        for n in 1..=6usize {
            let mut cs = vec![0u64; n + 1];
            cs[n] = 1;
            let f = fp(5, &cs);
            assert_eq!(poly_index_mod_p(&f).unwrap(), n - 1);
        }
    }

    #[test]
    fn index_of_double_double() {
        // (x^2+1)^2 = (x+2)^2 (x+3)^2 mod 5: index (2-1) + (2-1) = 2.
        let g = fp(5, &[1, 0, 1]);
        let f = g.mul(&g);
        assert_eq!(poly_index_mod_p(&f).unwrap(), 2);
        let fac = factor_mod_p(&f).unwrap();
        assert_eq!(fac.factors, vec![(fp(5, &[2, 1]), 2), (fp(5, &[3, 1]), 2)]);
    }

    #[test]
    fn index_zero_iff_coprime_with_derivative() {
        // Exercised over every monic cubic mod 3.
        let p = 3u64;
        for a in 0..p {
            for b in 0..p {
                for c in 0..p {
                    let f = fp(p, &[c, b, a, 1]);
                    let idx = poly_index_mod_p(&f).unwrap();
                    let coprime = f.gcd(&f.derivative()).is_one();
                    assert_eq!(idx == 0, coprime, "f = {:?}", f);
                }
            }
        }
    }

    #[test]
    fn random_factorizations_recombine() {
        // 1000 random (f, p) pairs with p <= 97, deg <= 8.
        use rand::Rng;
        let primes = [2u64, 3, 5, 7, 11, 13, 31, 61, 97];
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        for _ in 0..1000 {
            let p = primes[rng.gen_range(0..primes.len())];
            let deg = rng.gen_range(1..=8usize);
            let mut cs: Vec<u64> = (0..deg).map(|_| rng.gen_range(0..p)).collect();
            cs.push(1);
            let f = FpPoly::new_unchecked(p, cs);
            if f.is_zero() {
                continue;
            }
            let fac = factor_mod_p(&f).unwrap();
            assert_eq!(fac.product(), f, "recombination failed mod {p}");
            for (g, _) in &fac.factors {
                assert!(g.is_monic());
                assert!(g.deg() >= 1);
            }
        }
    }

    #[test]
    fn factorization_is_deterministic() {
        let f = fp(31, &[7, 3, 0, 11, 1, 0, 0, 0, 1]);
        let a = factor_mod_p(&f).unwrap();
        let b = factor_mod_p(&f).unwrap();
        assert_eq!(a, b);
    }
}
