//! Dense univariate polynomials over the rationals, Sturm sequences, and
//! exact real root isolation for monic integer polynomials.
//!
//! Nothing in this module uses floating point. Root isolation returns
//! rational roots exactly and encloses each irrational root in a rational
//! interval whose endpoints are not roots, which is what makes later
//! sign-based comparisons terminate.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;

/// Polynomial with rational coefficients, stored in ascending degree order
/// with no trailing zero coefficients. The zero polynomial has an empty
/// coefficient vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatPoly {
    coeffs: Vec<BigRational>,
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl RatPoly {
    pub fn zero() -> Self {
        RatPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: BigRational) -> Self {
        Self::from_rationals(vec![c])
    }

    pub fn from_rationals(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        RatPoly { coeffs }
    }

    pub fn from_bigints(coeffs: &[BigInt]) -> Self {
        Self::from_rationals(
            coeffs
                .iter()
                .map(|c| BigRational::from_integer(c.clone()))
                .collect(),
        )
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::from_rationals(coeffs.iter().map(|&c| rat(c)).collect())
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

    pub fn leading(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    pub fn coeff(&self, i: usize) -> BigRational {
        self.coeffs.get(i).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Integer-coefficient copy scaled by a positive constant (the lcm of
    /// the denominators): same roots, same sign everywhere, and much
    /// cheaper to evaluate repeatedly. Returns the coefficients and the
    /// scale s, so self = ints / s.
    pub fn to_scaled_ints(&self) -> (Vec<BigInt>, BigInt) {
        let mut l = BigInt::one();
        for c in &self.coeffs {
            let d = c.denom();
            l = &l / big_gcd(&l, d) * d;
        }
        let ints = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&l / c.denom()))
            .collect();
        (ints, l)
    }

    /// Interval extension of `eval`: returns rational bounds that enclose
    /// p(t) for every t in [lo, hi].
    pub fn eval_interval(&self, lo: &BigRational, hi: &BigRational) -> (BigRational, BigRational) {
        debug_assert!(lo <= hi);
        let mut alo = BigRational::zero();
        let mut ahi = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            let p1 = &alo * lo;
            let p2 = &alo * hi;
            let p3 = &ahi * lo;
            let p4 = &ahi * hi;
            let mut new_lo = p1.clone();
            let mut new_hi = p1;
            for p in [p2, p3, p4] {
                if p < new_lo {
                    new_lo = p.clone();
                }
                if p > new_hi {
                    new_hi = p;
                }
            }
            alo = new_lo + c;
            ahi = new_hi + c;
        }
        (alo, ahi)
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * rat(i as i64))
            .collect();
        Self::from_rationals(coeffs)
    }

    pub fn neg(&self) -> Self {
        RatPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) + other.coeff(i)).collect();
        Self::from_rationals(coeffs)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Self::from_rationals(coeffs)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self::from_rationals(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Multiplication by x (shift all coefficients up one degree).
    pub fn mul_x(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(BigRational::zero());
        coeffs.extend(self.coeffs.iter().cloned());
        RatPoly { coeffs }
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some(lc) => self.scale(&lc.recip()),
        }
    }

    /// Euclidean division: returns (quotient, remainder) with
    /// deg(remainder) < deg(divisor).
    pub fn divrem(&self, divisor: &Self) -> (Self, Self) {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        let dd = divisor.degree().unwrap();
        if self.degree().map_or(true, |d| d < dd) {
            return (Self::zero(), self.clone());
        }
        let lc = divisor.leading().unwrap().clone();
        let mut rem = self.coeffs.clone();
        let mut quo = vec![BigRational::zero(); rem.len() - dd];
        for k in (dd..rem.len()).rev() {
            let q = &rem[k] / &lc;
            if !q.is_zero() {
                for j in 0..dd {
                    let t = &q * &divisor.coeffs[j];
                    rem[k - dd + j] -= t;
                }
            }
            quo[k - dd] = q;
            rem[k] = BigRational::zero();
        }
        (Self::from_rationals(quo), Self::from_rationals(rem))
    }

    pub fn rem(&self, divisor: &Self) -> Self {
        self.divrem(divisor).1
    }

    /// Monic greatest common divisor via the Euclidean algorithm.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Inverse of `self` in the quotient ring Q[x]/(m), when it exists.
    pub fn inverse_mod(&self, m: &Self) -> Option<Self> {
        let mut r0 = m.clone();
        let mut r1 = self.rem(m);
        let mut t0 = Self::zero();
        let mut t1 = Self::constant(BigRational::one());
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1);
            let t = t0.sub(&q.mul(&t1));
            r0 = r1;
            r1 = r;
            t0 = t1;
            t1 = t;
        }
        if r0.degree() != Some(0) {
            return None;
        }
        Some(t0.scale(&r0.coeffs[0].recip()))
    }
}

/// Trace of the "multiply by g" operator on Q[x]/(f), for monic f. Equals
/// the sum of g evaluated at all complex roots of f (each root once when f
/// is square-free).
pub fn trace_of_mul(g: &RatPoly, f: &RatPoly) -> BigRational {
    let deg = f.degree().expect("modulus must be nonzero");
    assert!(deg >= 1, "modulus must have positive degree");
    let mut total = BigRational::zero();
    let mut col = g.rem(f);
    for j in 0..deg {
        total += col.coeff(j);
        if j + 1 < deg {
            col = col.mul_x().rem(f);
        }
    }
    total
}

/// Sturm sequence of a polynomial. Each element is rescaled to have leading
/// coefficient of absolute value 1, which keeps the numbers small without
/// changing any signs.
pub struct SturmChain {
    seq: Vec<RatPoly>,
    /// Integer rescalings of `seq`, used for all sign evaluations.
    seq_int: Vec<Vec<BigInt>>,
}

fn unit_leading(p: RatPoly) -> RatPoly {
    match p.leading() {
        None => p,
        Some(lc) => {
            let s = lc.abs().recip();
            p.scale(&s)
        }
    }
}

impl SturmChain {
    pub fn new(f: &RatPoly) -> Self {
        let mut seq = vec![unit_leading(f.clone())];
        let fd = f.derivative();
        if !fd.is_zero() {
            seq.push(unit_leading(fd));
            loop {
                let n = seq.len();
                let r = seq[n - 2].rem(&seq[n - 1]);
                if r.is_zero() {
                    break;
                }
                seq.push(unit_leading(r.neg()));
            }
        }
        let seq_int = seq.iter().map(|p| p.to_scaled_ints().0).collect();
        SturmChain { seq, seq_int }
    }

    fn variations_at(&self, x: &BigRational) -> usize {
        let mut count = 0;
        let mut prev: i8 = 0;
        for p in &self.seq_int {
            let s = sign_at_rational(p, x.numer(), x.denom());
            if s != 0 {
                if prev != 0 && s != prev {
                    count += 1;
                }
                prev = s;
            }
        }
        count
    }

    /// Number of distinct real roots of f in the open interval (lo, hi).
    /// Both endpoints must be non-roots of f.
    pub fn count_roots(&self, lo: &BigRational, hi: &BigRational) -> usize {
        debug_assert!(lo < hi);
        debug_assert!(!self.seq[0].eval(lo).is_zero());
        debug_assert!(!self.seq[0].eval(hi).is_zero());
        let vlo = self.variations_at(lo);
        let vhi = self.variations_at(hi);
        assert!(vlo >= vhi, "sign variations must not increase left to right");
        vlo - vhi
    }
}

/// Location of one real root found by [`isolate_real_roots`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RootLoc {
    Rational(BigRational),
    /// Open interval (lo, hi) containing exactly one root of the returned
    /// remainder polynomial; neither endpoint is a root.
    Bracket { lo: BigRational, hi: BigRational },
}

pub struct IsolatedRoots {
    /// All real roots in ascending order.
    pub roots: Vec<RootLoc>,
    /// What is left of the input after dividing out every rational root.
    /// Monic with integer coefficients and no rational roots; every
    /// `Bracket` isolates exactly one of its roots.
    pub remainder: Vec<BigInt>,
}

fn eval_int(f: &[BigInt], x: &BigInt) -> BigInt {
    let mut acc = BigInt::zero();
    for c in f.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

pub(crate) fn big_gcd(a: &BigInt, b: &BigInt) -> BigInt {
    let mut a = a.abs();
    let mut b = b.abs();
    while !b.is_zero() {
        let r = &a % &b;
        a = b;
        b = r;
    }
    a
}

fn trim_int(v: &mut Vec<BigInt>) {
    while v.last().map_or(false, |c| c.is_zero()) {
        v.pop();
    }
}

/// Pseudo-remainder of a by b: the top coefficient is cancelled with an
/// extra factor of lc(b) each round, so everything stays integral.
fn prem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let db = b.len() - 1;
    let lb = &b[db];
    let mut r = a.to_vec();
    trim_int(&mut r);
    while r.len() > db {
        let lead = r.pop().unwrap();
        let dr = r.len();
        for x in r.iter_mut() {
            *x *= lb;
        }
        for (i, bc) in b[..db].iter().enumerate() {
            r[dr - db + i] -= &lead * bc;
        }
        trim_int(&mut r);
    }
    r
}

/// Gcd of two integer polynomials, up to a constant factor. Works over a
/// primitive pseudo-remainder sequence, dividing the content back out after
/// every step so the coefficients stay small.
pub(crate) fn int_poly_gcd(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut a = a.to_vec();
    trim_int(&mut a);
    let mut b = b.to_vec();
    trim_int(&mut b);
    while !b.is_empty() {
        let mut r = prem(&a, &b);
        let content = r.iter().fold(BigInt::zero(), |acc, c| big_gcd(&acc, c));
        if content > BigInt::one() {
            for x in r.iter_mut() {
                *x /= &content;
            }
        }
        a = b;
        b = r;
    }
    a
}

/// Sign of f at the rational point a/d without leaving the integers:
/// evaluates f(a/d) * d^deg(f) by a scaled Horner pass. Requires d > 0.
pub fn sign_at_rational(f: &[BigInt], a: &BigInt, d: &BigInt) -> i8 {
    debug_assert!(d.is_positive());
    let Some((last, rest)) = f.split_last() else {
        return 0;
    };
    let mut acc = last.clone();
    let mut dpow = BigInt::one();
    for c in rest.iter().rev() {
        dpow *= d;
        acc = acc * a + c * &dpow;
    }
    match acc.sign() {
        num_bigint::Sign::Plus => 1,
        num_bigint::Sign::Minus => -1,
        num_bigint::Sign::NoSign => 0,
    }
}

/// Interval Horner over the integers: bounds for f on [a/d, b/d], scaled by
/// d^deg(f). Returns (lo, hi, d^deg) with f([a/d, b/d]) inside
/// [lo, hi] / d^deg. Requires a <= b and d > 0.
pub fn interval_at_rational(
    f: &[BigInt],
    a: &BigInt,
    b: &BigInt,
    d: &BigInt,
) -> (BigInt, BigInt, BigInt) {
    debug_assert!(a <= b && d.is_positive());
    // Multiplying the accumulator range by [a, b] instead of [a/d, b/d]
    // rescales it from d^j to d^(j+1) each step; the coefficient added at
    // step j needs the matching power.
    let mut lo = BigInt::zero();
    let mut hi = BigInt::zero();
    let mut dpow = BigInt::one();
    for c in f.iter().rev() {
        let p1 = &lo * a;
        let p2 = &lo * b;
        let p3 = &hi * a;
        let p4 = &hi * b;
        let mut new_lo = p1.clone();
        let mut new_hi = p1;
        for p in [p2, p3, p4] {
            if p < new_lo {
                new_lo = p.clone();
            }
            if p > new_hi {
                new_hi = p;
            }
        }
        let scaled_c = c * &dpow;
        lo = new_lo + &scaled_c;
        hi = new_hi + scaled_c;
        dpow *= d;
    }
    // the loop leaves dpow one power high for the constant-term step
    let dpow = if f.is_empty() { dpow } else { dpow / d };
    (lo, hi, dpow)
}

/// Divide a monic integer polynomial by (x - r). Panics if r is not a root.
fn deflate(f: &[BigInt], r: &BigInt) -> Vec<BigInt> {
    let n = f.len();
    assert!(n >= 2);
    let mut q = vec![BigInt::zero(); n - 1];
    q[n - 2] = f[n - 1].clone();
    for i in (0..n - 2).rev() {
        q[i] = &f[i + 1] + r * &q[i + 1];
    }
    let rem = &f[0] + r * &q[0];
    assert!(rem.is_zero(), "deflation by a non-root");
    q
}

/// Isolate every real root of a monic square-free integer polynomial.
///
/// Requires all real roots to lie strictly inside (lo, hi); in particular
/// neither bound may be a root. Rational roots are returned exactly
/// (for a monic integer polynomial they are integers), irrational roots as
/// disjoint brackets that contain no rational root of the input. The
/// brackets are also arranged to contain none of the rational roots, so the
/// combined list has a well-defined ascending order.
pub fn isolate_real_roots(f: &[BigInt], lo: &BigRational, hi: &BigRational) -> IsolatedRoots {
    assert!(f.last().map_or(false, |c| c.is_one()), "input must be monic");
    let mut rationals: Vec<BigRational> = Vec::new();
    let mut cur: Vec<BigInt> = f.to_vec();

    // Bisect until every interval holds one root. Landing exactly on a root
    // mid-bisection reveals a rational root: divide it out and start over
    // with the smaller polynomial, so endpoint evaluations stay nonzero.
    let mut brackets: Vec<(BigRational, BigRational)> = 'restart: loop {
        if cur.len() <= 1 {
            break Vec::new();
        }
        let frat = RatPoly::from_bigints(&cur);
        assert!(
            sign_at_rational(&cur, lo.numer(), lo.denom()) != 0
                && sign_at_rational(&cur, hi.numer(), hi.denom()) != 0
        );
        let chain = SturmChain::new(&frat);
        let mut found = Vec::new();
        let mut stack = vec![(lo.clone(), hi.clone())];
        while let Some((a, b)) = stack.pop() {
            let count = chain.count_roots(&a, &b);
            if count == 0 {
                continue;
            }
            if count == 1 {
                found.push((a, b));
                continue;
            }
            let mid = (&a + &b) / rat(2);
            if sign_at_rational(&cur, mid.numer(), mid.denom()) == 0 {
                let r = mid.clone();
                assert!(r.is_integer(), "rational root of a monic integer polynomial");
                cur = deflate(&cur, &r.to_integer());
                rationals.push(mid);
                continue 'restart;
            }
            stack.push((a, mid.clone()));
            stack.push((mid, b));
        }
        break found;
    };

    brackets.sort_by(|x, y| x.0.cmp(&y.0));

    // Narrow each bracket until at most one integer fits inside, then test
    // that integer. A rational root of a monic integer polynomial must be an
    // integer, so a failed test proves the bracketed root irrational.
    let mut algebraic: Vec<(BigRational, BigRational)> = Vec::new();
    for (mut a, mut b) in brackets {
        let sa = sign_at_rational(&cur, a.numer(), a.denom());
        assert!(sa != 0);
        loop {
            if &b - &a < rat(1) {
                let m_min = a.ceil().to_integer();
                if BigRational::from_integer(m_min.clone()) > b {
                    algebraic.push((a, b));
                    break;
                }
                if eval_int(&cur, &m_min).is_zero() {
                    cur = deflate(&cur, &m_min);
                    rationals.push(BigRational::from_integer(m_min));
                    break;
                }
                algebraic.push((a, b));
                break;
            }
            let mid = (&a + &b) / rat(2);
            let sm = sign_at_rational(&cur, mid.numer(), mid.denom());
            if sm == 0 {
                let r = mid.clone();
                assert!(r.is_integer());
                cur = deflate(&cur, &r.to_integer());
                rationals.push(mid);
                break;
            }
            if sm == sa {
                a = mid;
            } else {
                b = mid;
            }
        }
    }

    // Push any rational root that sits inside an algebraic bracket out to an
    // endpoint, so roots of different kinds never interleave ambiguously.
    let mut final_brackets = Vec::new();
    for (mut a, mut b) in algebraic {
        let mut sa = sign_at_rational(&cur, a.numer(), a.denom());
        assert!(sa != 0, "bracket endpoint must not be a root of the remainder");
        for r in &rationals {
            if *r > a && *r < b {
                let sr = sign_at_rational(&cur, r.numer(), r.denom());
                assert!(sr != 0);
                if sr == sa {
                    a = r.clone();
                    sa = sr;
                } else {
                    b = r.clone();
                }
            }
        }
        final_brackets.push((a, b));
    }

    rationals.sort();
    let mut roots: Vec<RootLoc> = rationals.into_iter().map(RootLoc::Rational).collect();
    roots.extend(
        final_brackets
            .into_iter()
            .map(|(lo, hi)| RootLoc::Bracket { lo, hi }),
    );
    roots.sort_by(|x, y| root_loc_cmp(x, y));

    debug_assert_eq!(
        cur.len().saturating_sub(1),
        roots
            .iter()
            .filter(|r| matches!(r, RootLoc::Bracket { .. }))
            .count(),
        "remainder degree must match the number of brackets when all roots are real"
    );
    IsolatedRoots { roots, remainder: cur }
}

fn root_loc_cmp(x: &RootLoc, y: &RootLoc) -> Ordering {
    match (x, y) {
        (RootLoc::Rational(a), RootLoc::Rational(b)) => a.cmp(b),
        (RootLoc::Rational(r), RootLoc::Bracket { lo, .. }) => {
            if r <= lo {
                Ordering::Less
            } else {
                Ordering::Greater
            }
        }
        (RootLoc::Bracket { lo, .. }, RootLoc::Rational(r)) => {
            if r <= lo {
                Ordering::Greater
            } else {
                Ordering::Less
            }
        }
        (RootLoc::Bracket { lo: a, .. }, RootLoc::Bracket { lo: b, .. }) => a.cmp(b),
    }
}

/// Render a polynomial with integer coefficients the way it would be written
/// by hand, highest degree first: "x^2-5", "x^3+2x-1".
pub fn int_poly_string(coeffs: &[BigInt]) -> String {
    let mut out = String::new();
    let deg = coeffs.len().saturating_sub(1);
    for i in (0..coeffs.len()).rev() {
        let c = &coeffs[i];
        if c.is_zero() && !(deg == 0 && i == 0) {
            continue;
        }
        let neg = c.is_negative();
        let mag = c.abs();
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push(if neg { '-' } else { '+' });
        }
        let show_coeff = i == 0 || !mag.is_one();
        if show_coeff {
            out.push_str(&mag.to_string());
        }
        if i >= 1 {
            out.push('x');
            if i >= 2 {
                out.push_str(&format!("^{}", i));
            }
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Fixed-point decimal rendering of a rational, rounded toward minus
/// infinity (`floor`) or plus infinity (`ceil`) at the given number of
/// fractional digits.
pub fn decimal_string(x: &BigRational, digits: u32, round_up: bool) -> String {
    let scale = BigInt::from(10u32).pow(digits);
    let scaled = x * BigRational::from_integer(scale.clone());
    let scaled_int = if round_up {
        scaled.ceil().to_integer()
    } else {
        scaled.floor().to_integer()
    };
    let neg = scaled_int.is_negative();
    let mag = scaled_int.abs().to_string();
    let mag = if mag.len() <= digits as usize {
        format!("{}{}", "0".repeat(digits as usize + 1 - mag.len()), mag)
    } else {
        mag
    };
    let split = mag.len() - digits as usize;
    let (int_part, frac_part) = mag.split_at(split);
    let body = if digits == 0 {
        int_part.to_string()
    } else {
        format!("{}.{}", int_part, frac_part)
    };
    if neg {
        format!("-{}", body)
    } else {
        body
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64) -> BigRational {
        rat(n)
    }

    fn rq(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn divrem_recovers_factors() {
        // (x-1)(x+2) = x^2 + x - 2
        let p = RatPoly::from_ints(&[-2, 1, 1]);
        let d = RatPoly::from_ints(&[-1, 1]);
        let (q, rem) = p.divrem(&d);
        assert_eq!(q, RatPoly::from_ints(&[2, 1]));
        assert!(rem.is_zero());
    }

    #[test]
    fn gcd_extracts_common_factor() {
        // gcd((x-1)(x-2), (x-2)(x-3)) = x - 2
        let a = RatPoly::from_ints(&[2, -3, 1]);
        let b = RatPoly::from_ints(&[6, -5, 1]);
        assert_eq!(a.gcd(&b), RatPoly::from_ints(&[-2, 1]));
    }

    #[test]
    fn inverse_mod_works() {
        // 1/x modulo x^2 - 5 is x/5
        let x = RatPoly::from_ints(&[0, 1]);
        let m = RatPoly::from_ints(&[-5, 0, 1]);
        let inv = x.inverse_mod(&m).unwrap();
        assert_eq!(inv, RatPoly::from_rationals(vec![r(0), rq(1, 5)]));
        assert_eq!(x.mul(&inv).rem(&m), RatPoly::from_ints(&[1]));
    }

    #[test]
    fn trace_of_mul_matches_root_sums() {
        // On Q[x]/(x^2-5): trace(x) = sqrt5 - sqrt5 = 0, trace(x^2) = 10.
        let f = RatPoly::from_ints(&[-5, 0, 1]);
        assert_eq!(trace_of_mul(&RatPoly::from_ints(&[0, 1]), &f), r(0));
        assert_eq!(trace_of_mul(&RatPoly::from_ints(&[0, 0, 1]), &f), r(10));
        // On Q[x]/(x^3 - 2x^2 - 5x + 6) = (x-1)(x-3)(x+2): trace(x) = 2.
        let g = RatPoly::from_ints(&[6, -5, -2, 1]);
        assert_eq!(trace_of_mul(&RatPoly::from_ints(&[0, 1]), &g), r(2));
    }

    #[test]
    fn sturm_counts_roots_of_quadratic() {
        let f = RatPoly::from_ints(&[-2, 0, 1]);
        let chain = SturmChain::new(&f);
        assert_eq!(chain.count_roots(&r(-2), &r(2)), 2);
        assert_eq!(chain.count_roots(&r(0), &r(2)), 1);
        assert_eq!(chain.count_roots(&r(2), &r(3)), 0);
    }

    #[test]
    fn isolates_all_integer_roots() {
        // (x-1)(x-2)(x-3)
        let f: Vec<BigInt> = [-6i64, 11, -6, 1].iter().map(|&c| BigInt::from(c)).collect();
        let out = isolate_real_roots(&f, &r(-10), &r(10));
        let expected: Vec<RootLoc> = [1, 2, 3]
            .iter()
            .map(|&v| RootLoc::Rational(r(v)))
            .collect();
        assert_eq!(out.roots, expected);
        assert_eq!(out.remainder, vec![BigInt::from(1)]);
    }

    #[test]
    fn isolates_mixed_rational_and_irrational_roots() {
        // (x^2 - 5)(x - 1): roots -sqrt5 < 1 < sqrt5
        let f: Vec<BigInt> = [5i64, -5, -1, 1].iter().map(|&c| BigInt::from(c)).collect();
        let out = isolate_real_roots(&f, &r(-4), &r(4));
        assert_eq!(out.roots.len(), 3);
        match &out.roots[0] {
            RootLoc::Bracket { lo, hi } => {
                assert!(*lo < rq(-2236, 1000) && rq(-2237, 1000) < *hi);
            }
            other => panic!("expected bracket, got {:?}", other),
        }
        assert_eq!(out.roots[1], RootLoc::Rational(r(1)));
        assert!(matches!(&out.roots[2], RootLoc::Bracket { .. }));
        let rem: Vec<BigInt> = [-5i64, 0, 1].iter().map(|&c| BigInt::from(c)).collect();
        assert_eq!(out.remainder, rem);
    }

    #[test]
    fn interval_eval_encloses_true_values() {
        let f = RatPoly::from_ints(&[1, -3, 0, 2]);
        let lo = rq(-7, 4);
        let hi = rq(5, 3);
        let (elo, ehi) = f.eval_interval(&lo, &hi);
        for t in [lo.clone(), hi.clone(), (&lo + &hi) / r(2)] {
            let v = f.eval(&t);
            assert!(elo <= v && v <= ehi);
        }
    }

    #[test]
    fn renders_integer_polynomials() {
        let c = |v: &[i64]| -> Vec<BigInt> { v.iter().map(|&x| BigInt::from(x)).collect() };
        assert_eq!(int_poly_string(&c(&[-5, 0, 1])), "x^2-5");
        assert_eq!(int_poly_string(&c(&[-1, -2, 0, 1])), "x^3-2x-1");
        assert_eq!(int_poly_string(&c(&[0, 1])), "x");
        assert_eq!(int_poly_string(&c(&[7])), "7");
    }

    #[test]
    fn renders_decimals_with_directed_rounding() {
        assert_eq!(decimal_string(&rq(7, 2), 3, false), "3.500");
        assert_eq!(decimal_string(&rq(1, 3), 4, false), "0.3333");
        assert_eq!(decimal_string(&rq(1, 3), 4, true), "0.3334");
        assert_eq!(decimal_string(&rq(-1, 3), 2, false), "-0.34");
        assert_eq!(decimal_string(&rq(-1, 3), 2, true), "-0.33");
        assert_eq!(decimal_string(&r(8), 0, false), "8");
    }
}
