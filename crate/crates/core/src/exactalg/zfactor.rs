//! Factorization over `Z`: Zassenhaus. Factor modulo one good prime, Hensel
//! lift past twice the Mignotte coefficient bound, then recombine subsets of
//! the lifted factors by trial division. At the supported degrees the
//! recombination stage is trivial.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::fppoly::{is_prime_u64, FpPoly};
use super::poly::IntPoly;
use super::{ExactError, Result};

/// Largest degree accepted by [`factor_over_z`]; the census never needs more.
pub const MAX_FACTOR_DEGREE: usize = 8;

/// Factorization of a monic integer polynomial into monic irreducibles over
/// `Z`, sorted by degree and then lexicographically by coefficient list.
pub fn factor_over_z(f: &IntPoly) -> Result<Vec<(IntPoly, u32)>> {
    let deg = f.degree().ok_or(ExactError::ZeroPolynomial)?;
    if !f.is_monic() {
        return Err(ExactError::NotMonic);
    }
    if deg > MAX_FACTOR_DEGREE {
        return Err(ExactError::UnsupportedDegree {
            max: MAX_FACTOR_DEGREE,
            got: deg,
        });
    }
    Ok(factor_monic_unbounded(f))
}

/// Same as [`factor_over_z`] without the degree cap; internal callers
/// (resolvent analysis) know what they are doing.
pub(crate) fn factor_monic_unbounded(f: &IntPoly) -> Vec<(IntPoly, u32)> {
    let mut out: Vec<(IntPoly, u32)> = Vec::new();
    for (part, mult) in f.squarefree_decomposition() {
        for irr in factor_squarefree_monic(&part) {
            out.push((irr, mult));
        }
    }
    out.sort_by(|a, b| (a.0.deg(), &a.0).cmp(&(b.0.deg(), &b.0)));
    out
}

/// True iff the squarefree monic polynomial has a monic divisor of the given
/// degree over `Z`. Decides exactly: a divisor reduces to a sub-product of
/// the modular factors, so exhausting the degree-constrained subsets of the
/// Hensel-lifted factorization is a complete search.
pub fn has_monic_divisor_of_degree(f: &IntPoly, d: usize) -> Result<bool> {
    let deg = f.degree().ok_or(ExactError::ZeroPolynomial)?;
    if !f.is_monic() {
        return Err(ExactError::NotMonic);
    }
    if d == 0 || d == deg {
        return Ok(true);
    }
    if d > deg {
        return Ok(false);
    }
    // Degree-multiset screening across a few good primes: a sub-multiset of
    // the modular factor degrees must sum to d.
    let mut screen_primes = Vec::new();
    let mut p = 2u64;
    while screen_primes.len() < 4 {
        if is_prime_u64(p) && reduction_is_squarefree(f, p) {
            screen_primes.push(p);
        }
        p += 1;
        if p > 10_000 {
            break;
        }
    }
    let mut best: Option<(u64, Vec<FpPoly>)> = None;
    for &p in &screen_primes {
        let fp = FpPoly::from_intpoly(f, p).unwrap();
        let fac = super::fppoly::factor_mod_p(&fp).unwrap();
        let degs: Vec<usize> = fac.factors.iter().map(|(g, _)| g.deg()).collect();
        if !subset_sum_feasible(&degs, d) {
            return Ok(false);
        }
        let factors: Vec<FpPoly> = fac.factors.into_iter().map(|(g, _)| g).collect();
        if best.as_ref().map_or(true, |(_, b)| factors.len() < b.len()) {
            best = Some((p, factors));
        }
    }
    let (p, factors) = best.expect("no good prime below 10000 for a squarefree polynomial");
    let bound = mignotte_bound(f);
    let target = BigInt::from(2) * &bound + 1;
    let lifted = hensel_lift_tree(f, &factors, p, &target);
    let modulus = lifted.modulus;
    // Search subsets whose degrees sum to d, smallest cardinality first.
    let degs: Vec<usize> = lifted.factors.iter().map(|g| g.deg()).collect();
    let mut found = false;
    for_each_subset_with_degree_sum(&degs, d, &mut |subset| {
        if found {
            return;
        }
        let candidate = product_mod(&lifted.factors, subset, &modulus);
        let candidate = symmetric_lift(&candidate, &modulus);
        if candidate.divides(f) {
            found = true;
        }
    });
    Ok(found)
}

fn reduction_is_squarefree(f: &IntPoly, p: u64) -> bool {
    if f
        .leading_coeff()
        .map_or(true, |lc| lc.mod_floor(&BigInt::from(p)).is_zero())
    {
        return false;
    }
    match FpPoly::from_intpoly(f, p) {
        Ok(fp) => fp.degree() == f.degree() && fp.gcd(&fp.derivative()).is_one(),
        Err(_) => false,
    }
}

fn subset_sum_feasible(degs: &[usize], d: usize) -> bool {
    let mut reachable = vec![false; d + 1];
    reachable[0] = true;
    for &g in degs {
        for t in (g..=d).rev() {
            if reachable[t - g] {
                reachable[t] = true;
            }
        }
    }
    reachable[d]
}

fn for_each_subset_with_degree_sum(
    degs: &[usize],
    target: usize,
    visit: &mut impl FnMut(&[usize]),
) {
    fn rec(
        degs: &[usize],
        start: usize,
        remaining: usize,
        chosen: &mut Vec<usize>,
        visit: &mut impl FnMut(&[usize]),
    ) {
        if remaining == 0 {
            visit(chosen);
            return;
        }
        for i in start..degs.len() {
            if degs[i] <= remaining {
                chosen.push(i);
                rec(degs, i + 1, remaining - degs[i], chosen, visit);
                chosen.pop();
            }
        }
    }
    let mut chosen = Vec::new();
    rec(degs, 0, target, &mut chosen, visit);
}

/// Mignotte-style bound: the height of any monic divisor of a monic `f` is
/// at most `2^deg(f) * (l2norm(f) + 1)`.
fn mignotte_bound(f: &IntPoly) -> BigInt {
    let sumsq: BigInt = f.coeffs().iter().map(|c| c * c).sum();
    let l2 = sumsq.sqrt() + 1;
    (BigInt::one() << f.deg()) * l2
}

/// Zassenhaus on a squarefree monic polynomial.
fn factor_squarefree_monic(f: &IntPoly) -> Vec<IntPoly> {
    let deg = match f.degree() {
        None | Some(0) => return Vec::new(),
        Some(1) => return vec![f.clone()],
        Some(d) => d,
    };
    let _ = deg;
    // Pick the good prime with the fewest modular factors among the first few.
    let mut best: Option<(u64, Vec<FpPoly>)> = None;
    let mut tried = 0;
    let mut p = 3u64;
    while tried < 4 {
        if is_prime_u64(p) && reduction_is_squarefree(f, p) {
            let fp = FpPoly::from_intpoly(f, p).unwrap();
            let fac = super::fppoly::factor_mod_p(&fp).unwrap();
            let factors: Vec<FpPoly> = fac.factors.into_iter().map(|(g, _)| g).collect();
            if best.as_ref().map_or(true, |(_, b)| factors.len() < b.len()) {
                best = Some((p, factors));
            }
            tried += 1;
        }
        p += 2;
        assert!(p < 100_000, "no good prime for squarefree factorization");
    }
    let (p, factors) = best.unwrap();
    if factors.len() == 1 {
        return vec![f.clone()];
    }
    let bound = mignotte_bound(f);
    let target = BigInt::from(2) * &bound + 1;
    let lifted = hensel_lift_tree(f, &factors, p, &target);
    recombine(f, lifted)
}

fn recombine(f: &IntPoly, lifted: LiftedFactors) -> Vec<IntPoly> {
    let modulus = lifted.modulus;
    let mut avail: Vec<IntPoly> = lifted.factors;
    let mut remaining = f.clone();
    let mut out = Vec::new();
    let mut size = 1usize;
    while 2 * size <= avail.len() {
        let mut advanced = false;
        let indices: Vec<usize> = (0..avail.len()).collect();
        let mut combo = Combinations::new(indices.len(), size);
        while let Some(subset) = combo.next() {
            let idx: Vec<usize> = subset.iter().map(|&i| indices[i]).collect();
            let candidate = product_mod(&avail, &idx, &modulus);
            let candidate = symmetric_lift(&candidate, &modulus);
            if let Some(quotient) = remaining.try_exact_div(&candidate) {
                out.push(candidate);
                remaining = quotient;
                // Drop the used factors and restart at this cardinality.
                let mut keep = Vec::new();
                for (i, g) in avail.into_iter().enumerate() {
                    if !idx.contains(&i) {
                        keep.push(g);
                    }
                }
                avail = keep;
                advanced = true;
                break;
            }
        }
        if !advanced {
            size += 1;
        }
    }
    if remaining.deg() > 0 {
        out.push(remaining);
    }
    out.sort_by(|a, b| (a.deg(), a).cmp(&(b.deg(), b)));
    out
}

/// Product of the selected factors with coefficients reduced mod `m`.
fn product_mod(factors: &[IntPoly], idx: &[usize], m: &BigInt) -> IntPoly {
    let mut acc = IntPoly::one();
    for &i in idx {
        acc = reduce_mod(&acc.mul(&factors[i]), m);
    }
    acc
}

fn reduce_mod(f: &IntPoly, m: &BigInt) -> IntPoly {
    IntPoly::new(f.coeffs().iter().map(|c| c.mod_floor(m)).collect())
}

/// Coefficients mapped to the symmetric range `(-m/2, m/2]`.
fn symmetric_lift(f: &IntPoly, m: &BigInt) -> IntPoly {
    let half = m / 2;
    IntPoly::new(
        f.coeffs()
            .iter()
            .map(|c| {
                let r = c.mod_floor(m);
                if r > half {
                    r - m
                } else {
                    r
                }
            })
            .collect(),
    )
}

struct LiftedFactors {
    modulus: BigInt,
    factors: Vec<IntPoly>,
}

/// Lifts the mod-p factorization of a monic squarefree `f` to a prime power
/// at least `target`, by a recursive two-way split with quadratic Hensel
/// steps.
fn hensel_lift_tree(f: &IntPoly, factors: &[FpPoly], p: u64, target: &BigInt) -> LiftedFactors {
    let mut modulus = BigInt::from(p);
    while &modulus < target {
        modulus = &modulus * &modulus;
    }
    let lifted = lift_split(&reduce_mod(f, &modulus), factors, p, &modulus);
    LiftedFactors {
        modulus,
        factors: lifted,
    }
}

fn lift_split(f: &IntPoly, factors: &[FpPoly], p: u64, modulus: &BigInt) -> Vec<IntPoly> {
    if factors.len() == 1 {
        // A single factor lifts to f itself.
        return vec![reduce_mod(f, modulus)];
    }
    let mid = factors.len() / 2;
    let (left, right) = factors.split_at(mid);
    let g0 = left.iter().fold(FpPoly::one(p), |acc, x| acc.mul(x));
    let h0 = right.iter().fold(FpPoly::one(p), |acc, x| acc.mul(x));
    let (s0, t0) = fp_bezout(&g0, &h0);
    let (g, h) = hensel_pair(f, &g0, &h0, &s0, &t0, p, modulus);
    let mut out = lift_split(&g, left, p, modulus);
    out.extend(lift_split(&h, right, p, modulus));
    out
}

/// Bezout pair: s g + t h = 1 in F_p[x] for coprime g, h.
fn fp_bezout(g: &FpPoly, h: &FpPoly) -> (FpPoly, FpPoly) {
    let p = g.modulus();
    let (mut r0, mut r1) = (g.clone(), h.clone());
    let (mut s0, mut s1) = (FpPoly::one(p), FpPoly::zero(p));
    let (mut t0, mut t1) = (FpPoly::zero(p), FpPoly::one(p));
    while !r1.is_zero() {
        let (q, r) = r0.div_rem(&r1);
        let s = s0.sub(&q.mul(&s1));
        let t = t0.sub(&q.mul(&t1));
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s;
        t0 = t1;
        t1 = t;
    }
    // r0 is a nonzero constant; normalize it to 1.
    debug_assert_eq!(r0.deg(), 0);
    let inv = super::fppoly::inv_mod_u64(r0.leading_coeff(), p);
    (s0.mul_scalar(inv), t0.mul_scalar(inv))
}

/// Iterated quadratic Hensel steps: from f = g h (mod p) to (mod `modulus`),
/// where `modulus` is p^(2^k).
fn hensel_pair(
    f: &IntPoly,
    g0: &FpPoly,
    h0: &FpPoly,
    s0: &FpPoly,
    t0: &FpPoly,
    p: u64,
    modulus: &BigInt,
) -> (IntPoly, IntPoly) {
    let mut m = BigInt::from(p);
    let mut g = g0.lift();
    let mut h = h0.lift();
    let mut s = s0.lift();
    let mut t = t0.lift();
    while &m < modulus {
        let m2 = &m * &m;
        let fm = reduce_mod(f, &m2);
        // e = f - g h  (mod m^2)
        let e = reduce_mod(&fm.sub(&g.mul(&h)), &m2);
        // q, r = (s e) / h with h monic, coefficients mod m^2
        let (q, r) = div_rem_mod_monic(&reduce_mod(&s.mul(&e), &m2), &h, &m2);
        let g_new = reduce_mod(&g.add(&t.mul(&e)).add(&q.mul(&g)), &m2);
        let h_new = reduce_mod(&h.add(&r), &m2);
        // b = s g* + t h* - 1 (mod m^2)
        let b = reduce_mod(
            &s.mul(&g_new).add(&t.mul(&h_new)).sub(&IntPoly::one()),
            &m2,
        );
        let (c, d) = div_rem_mod_monic(&reduce_mod(&s.mul(&b), &m2), &h_new, &m2);
        let s_new = reduce_mod(&s.sub(&d), &m2);
        let t_new = reduce_mod(&t.sub(&t.mul(&b)).sub(&c.mul(&g_new)), &m2);
        g = g_new;
        h = h_new;
        s = s_new;
        t = t_new;
        m = m2;
    }
    debug_assert_eq!(&m, modulus);
    (g, h)
}

/// Division with remainder by a monic divisor, coefficients reduced mod m.
fn div_rem_mod_monic(f: &IntPoly, divisor: &IntPoly, m: &BigInt) -> (IntPoly, IntPoly) {
    debug_assert!(divisor.is_monic());
    let d = divisor.deg();
    if f.deg() < d || f.is_zero() {
        return (IntPoly::zero(), f.clone());
    }
    let mut rem: Vec<BigInt> = f.coeffs().to_vec();
    let mut quot = vec![BigInt::zero(); rem.len() - d];
    for i in (d..rem.len()).rev() {
        let q = rem[i].mod_floor(m);
        if q.is_zero() {
            rem[i] = BigInt::zero();
            continue;
        }
        rem[i] = BigInt::zero();
        for j in 0..d {
            rem[i - d + j] = (&rem[i - d + j] - &q * &divisor.coeffs()[j]).mod_floor(m);
        }
        quot[i - d] = q;
    }
    (
        IntPoly::new(quot.into_iter().map(|c| c.mod_floor(m)).collect()),
        IntPoly::new(rem.into_iter().map(|c| c.mod_floor(m)).collect()),
    )
}

/// Plain lexicographic k-subset iterator over `0..n`.
struct Combinations {
    n: usize,
    k: usize,
    state: Option<Vec<usize>>,
}

impl Combinations {
    fn new(n: usize, k: usize) -> Self {
        let state = if k <= n { Some((0..k).collect()) } else { None };
        Combinations { n, k, state }
    }

    fn next(&mut self) -> Option<Vec<usize>> {
        let current = self.state.clone()?;
        // Advance.
        let mut next = current.clone();
        let mut i = self.k;
        loop {
            if i == 0 {
                self.state = None;
                break;
            }
            i -= 1;
            if next[i] + (self.k - i) < self.n {
                next[i] += 1;
                for j in (i + 1)..self.k {
                    next[j] = next[j - 1] + 1;
                }
                self.state = Some(next);
                break;
            }
        }
        Some(current)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(cs: &[i64]) -> IntPoly {
        IntPoly::from_i64(cs)
    }

    #[test]
    fn factor_difference_of_squares() {
        let f = poly(&[-1, 0, 1]);
        let fac = factor_over_z(&f).unwrap();
        assert_eq!(fac, vec![(poly(&[-1, 1]), 1), (poly(&[1, 1]), 1)]);
    }

    #[test]
    fn factor_x4_plus_1_irreducible() {
        let f = poly(&[1, 0, 0, 0, 1]);
        let fac = factor_over_z(&f).unwrap();
        assert_eq!(fac, vec![(f, 1)]);
    }

    #[test]
    fn factor_sqrt2_plus_sqrt3_min_poly_irreducible() {
        let f = poly(&[1, 0, -10, 0, 1]);
        let fac = factor_over_z(&f).unwrap();
        assert_eq!(fac, vec![(f, 1)]);
    }

    #[test]
    fn factor_with_multiplicities() {
        // (x-1)^2 (x^2+1)
        let f = poly(&[-1, 1]).mul(&poly(&[-1, 1])).mul(&poly(&[1, 0, 1]));
        let fac = factor_over_z(&f).unwrap();
        assert_eq!(fac, vec![(poly(&[-1, 1]), 2), (poly(&[1, 0, 1]), 1)]);
    }

    #[test]
    fn factor_degree_guard() {
        let mut cs = vec![0i64; 10];
        cs[9] = 1;
        cs[0] = 1;
        assert!(matches!(
            factor_over_z(&poly(&cs)),
            Err(ExactError::UnsupportedDegree { max: 8, got: 9 })
        ));
    }

    #[test]
    fn factor_rejects_non_monic() {
        assert!(matches!(
            factor_over_z(&poly(&[1, 0, 2])),
            Err(ExactError::NotMonic)
        ));
    }

    #[test]
    fn factor_products_of_quadratics() {
        // (x^2-2)(x^2-3): irreducible quadratic pair with close arithmetic.
        let f = poly(&[-2, 0, 1]).mul(&poly(&[-3, 0, 1]));
        let fac = factor_over_z(&f).unwrap();
        assert_eq!(fac, vec![(poly(&[-3, 0, 1]), 1), (poly(&[-2, 0, 1]), 1)]);
    }

    #[test]
    fn factor_cyclotomic_like_products() {
        // x^6 - 1 = (x-1)(x+1)(x^2+x+1)(x^2-x+1)
        let f = poly(&[-1, 0, 0, 0, 0, 0, 1]);
        let fac = factor_over_z(&f).unwrap();
        let expect = vec![
            (poly(&[-1, 1]), 1),
            (poly(&[1, 1]), 1),
            (poly(&[1, -1, 1]), 1),
            (poly(&[1, 1, 1]), 1),
        ];
        assert_eq!(fac, expect);
    }

    #[test]
    fn divisor_of_degree_search() {
        // (x^2+1)(x^3-2): divisors of degrees 0,2,3,5 only.
        let f = poly(&[1, 0, 1]).mul(&poly(&[-2, 0, 0, 1]));
        assert!(has_monic_divisor_of_degree(&f, 2).unwrap());
        assert!(has_monic_divisor_of_degree(&f, 3).unwrap());
        assert!(!has_monic_divisor_of_degree(&f, 1).unwrap());
        assert!(!has_monic_divisor_of_degree(&f, 4).unwrap());
        assert!(has_monic_divisor_of_degree(&f, 0).unwrap());
        assert!(has_monic_divisor_of_degree(&f, 5).unwrap());
    }

    #[test]
    fn mod_p_refinement_of_z_factorization() {
        // factor_over_Z output reduced mod p refines into factor_mod_p output
        // for p not dividing disc(f).
        use crate::exactalg::{discriminant, factor_mod_p};
        let f = poly(&[-1, 0, 0, 0, 0, 0, 1]); // x^6 - 1
        let disc = discriminant(&f).unwrap();
        let fac_z = factor_over_z(&f).unwrap();
        for p in [5u64, 7, 11, 13, 17, 19, 23, 29, 31] {
            if disc.mod_floor(&BigInt::from(p)).is_zero() {
                continue;
            }
            let fac_p = factor_mod_p(&FpPoly::from_intpoly(&f, p).unwrap()).unwrap();
            // Every Z-factor reduced mod p must be a product of mod-p factors.
            for (g, _) in &fac_z {
                let gp = FpPoly::from_intpoly(g, p).unwrap();
                let mut rem = gp.clone();
                for (h, _) in &fac_p.factors {
                    while rem.deg() >= h.deg() && rem.rem(h).is_zero() {
                        rem = rem.div_rem(h).0;
                    }
                }
                assert_eq!(rem.deg(), 0, "mod-{p} refinement failed");
            }
        }
    }
}
