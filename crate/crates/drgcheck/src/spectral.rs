//! Exact spectra of intersection matrices.
//!
//! The intersection matrix of an array is tridiagonal with nonnegative
//! off-diagonal products, so all its eigenvalues are real and simple. They
//! are computed here exactly: rational eigenvalues as rationals, the rest as
//! algebraic numbers carrying their defining polynomial and an isolating
//! interval. Multiplicities come from the standard sum formula over the
//! cosine sequence and are also exact.

use crate::array::{DerivedParameters, IntersectionArray};
use crate::poly::{
    interval_at_rational, isolate_real_roots, int_poly_string, sign_at_rational, RatPoly, RootLoc,
    SturmChain,
};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::cmp::Ordering;
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SpectralDefect {
    #[error("characteristic polynomial has a repeated root")]
    RepeatedRoot,
    #[error("expected {expected} distinct real eigenvalues, found {found}")]
    RootCount { expected: usize, found: usize },
    #[error("spectrum invariant broken: {0}")]
    InvariantBroken(&'static str),
}

/// The tridiagonal intersection matrix L_1: subdiagonal c_1..c_d, diagonal
/// a_0..a_d, superdiagonal b_0..b_{d-1}. Every row sums to b_0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TridiagonalMatrix {
    sub: Vec<u32>,
    diag: Vec<i64>,
    sup: Vec<u32>,
}

impl TridiagonalMatrix {
    pub fn order(&self) -> usize {
        self.diag.len()
    }

    pub fn sub(&self) -> &[u32] {
        &self.sub
    }

    pub fn diag(&self) -> &[i64] {
        &self.diag
    }

    pub fn sup(&self) -> &[u32] {
        &self.sup
    }

    pub fn entry(&self, i: usize, j: usize) -> i64 {
        if j + 1 == i {
            self.sub[j] as i64
        } else if j == i {
            self.diag[i]
        } else if j == i + 1 {
            self.sup[i] as i64
        } else {
            0
        }
    }

    /// Monic characteristic polynomial det(xI - L), ascending coefficients.
    /// Built by the principal-minor recurrence
    /// q_k = (x - a_{k-1}) q_{k-1} - b_{k-2} c_{k-1} q_{k-2}.
    pub fn char_poly(&self) -> Vec<BigInt> {
        let n = self.order();
        let mut prev: Vec<BigInt> = vec![BigInt::one()];
        let mut cur: Vec<BigInt> = vec![BigInt::from(-self.diag[0]), BigInt::one()];
        for k in 1..n {
            let w = BigInt::from(self.sup[k - 1]) * BigInt::from(self.sub[k - 1]);
            let mut next = vec![BigInt::zero(); cur.len() + 1];
            for (i, c) in cur.iter().enumerate() {
                next[i + 1] += c;
                next[i] -= BigInt::from(self.diag[k]) * c;
            }
            for (i, c) in prev.iter().enumerate() {
                next[i] -= &w * c;
            }
            prev = cur;
            cur = next;
        }
        cur
    }
}

pub fn intersection_matrix(
    arr: &IntersectionArray,
    dp: &DerivedParameters,
) -> TridiagonalMatrix {
    TridiagonalMatrix {
        sub: arr.c().to_vec(),
        diag: dp.a().to_vec(),
        sup: arr.b().to_vec(),
    }
}

/// A monic integer polynomial with no rational roots, shared by all the
/// algebraic eigenvalues it defines.
#[derive(Debug)]
pub struct DefiningPoly {
    coeffs: Vec<BigInt>,
    rat: RatPoly,
}

impl DefiningPoly {
    fn new(coeffs: Vec<BigInt>) -> Self {
        let rat = RatPoly::from_bigints(&coeffs);
        DefiningPoly { coeffs, rat }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn as_rat_poly(&self) -> &RatPoly {
        &self.rat
    }

    pub fn display_string(&self) -> String {
        int_poly_string(&self.coeffs)
    }
}

/// A real algebraic number, represented by a defining polynomial together
/// with an isolating interval (lo, hi). The interval contains exactly one
/// root of the polynomial and neither endpoint is a root; since the defining
/// polynomial has no rational roots, the number itself is irrational and
/// every comparison against a rational resolves in one sign evaluation.
///
/// Values are immutable: refinement returns a new, narrower value.
#[derive(Clone, Debug)]
pub struct AlgebraicReal {
    defining: Arc<DefiningPoly>,
    lo: BigRational,
    hi: BigRational,
    lo_sign: i8,
}

impl AlgebraicReal {
    fn new(defining: Arc<DefiningPoly>, lo: BigRational, hi: BigRational) -> Self {
        let lo_sign = sign_at_rational(&defining.coeffs, lo.numer(), lo.denom());
        assert!(lo_sign != 0, "isolating interval endpoint is a root");
        debug_assert!(sign_at_rational(&defining.coeffs, hi.numer(), hi.denom()) != 0);
        AlgebraicReal {
            defining,
            lo,
            hi,
            lo_sign,
        }
    }

    pub fn defining_poly(&self) -> &Arc<DefiningPoly> {
        &self.defining
    }

    pub fn interval(&self) -> (&BigRational, &BigRational) {
        (&self.lo, &self.hi)
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    /// One bisection step. The midpoint of a rational interval is rational
    /// and the defining polynomial has no rational roots, so the sign test
    /// always resolves.
    pub fn bisect(&self) -> Self {
        let mid = (&self.lo + &self.hi) / BigRational::from_integer(BigInt::from(2));
        let ms = sign_at_rational(&self.defining.coeffs, mid.numer(), mid.denom());
        assert!(ms != 0, "defining polynomial must have no rational roots");
        if ms == self.lo_sign {
            AlgebraicReal {
                defining: self.defining.clone(),
                lo: mid,
                hi: self.hi.clone(),
                lo_sign: self.lo_sign,
            }
        } else {
            AlgebraicReal {
                defining: self.defining.clone(),
                lo: self.lo.clone(),
                hi: mid,
                lo_sign: self.lo_sign,
            }
        }
    }

    pub fn refined_to(&self, width: &BigRational) -> Self {
        let mut cur = self.clone();
        while &cur.width() > width {
            cur = cur.bisect();
        }
        cur
    }

    /// Narrow the interval so the rational q lies strictly outside of it,
    /// endpoints included. Callers map the endpoints through functions
    /// with a pole at q, so q must not survive even as an endpoint.
    pub fn refined_excluding(&self, q: &BigRational) -> Self {
        let mut cur = if q <= &self.lo || q >= &self.hi {
            self.clone()
        } else {
            let qs = sign_at_rational(&self.defining.coeffs, q.numer(), q.denom());
            assert!(qs != 0);
            if qs == self.lo_sign {
                AlgebraicReal {
                    defining: self.defining.clone(),
                    lo: q.clone(),
                    hi: self.hi.clone(),
                    lo_sign: self.lo_sign,
                }
            } else {
                AlgebraicReal {
                    defining: self.defining.clone(),
                    lo: self.lo.clone(),
                    hi: q.clone(),
                    lo_sign: self.lo_sign,
                }
            }
        };
        // The number itself differs from q, so once the interval is small
        // enough a bisection drops the offending endpoint.
        while &cur.lo == q || &cur.hi == q {
            cur = cur.bisect();
        }
        cur
    }

    pub fn cmp_rational(&self, q: &BigRational) -> Ordering {
        if q <= &self.lo {
            return Ordering::Greater;
        }
        if q >= &self.hi {
            return Ordering::Less;
        }
        let excluded = self.refined_excluding(q);
        if q <= &excluded.lo {
            Ordering::Greater
        } else {
            Ordering::Less
        }
    }

    /// Exact sign of p evaluated at this number: 0 when p vanishes here,
    /// otherwise the sign obtained by interval refinement.
    pub fn sign_of(&self, p: &RatPoly) -> i8 {
        if p.is_zero() {
            return 0;
        }
        let g = self.defining.rat.gcd(p);
        if g.degree().map_or(false, |d| d >= 1) {
            let chain = SturmChain::new(&g);
            if chain.count_roots(&self.lo, &self.hi) > 0 {
                return 0;
            }
        }
        let mut cur = self.clone();
        for _ in 0..4096 {
            let (vlo, vhi) = p.eval_interval(&cur.lo, &cur.hi);
            if vlo.is_positive() {
                return 1;
            }
            if vhi.is_negative() {
                return -1;
            }
            cur = cur.bisect();
        }
        unreachable!("sign refinement did not converge");
    }

    /// Approximate value for display purposes only.
    pub fn to_f64(&self) -> f64 {
        let tight = self.refined_to(&BigRational::new(BigInt::one(), BigInt::from(1u64 << 40)));
        let mid = (&tight.lo + &tight.hi) / BigRational::from_integer(BigInt::from(2));
        mid.to_f64().unwrap()
    }
}

/// An eigenvalue known exactly: either rational, or algebraic with a
/// defining polynomial and isolating interval.
#[derive(Clone, Debug)]
pub enum ExactEigenvalue {
    Rational(BigRational),
    Algebraic(AlgebraicReal),
}

impl ExactEigenvalue {
    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            ExactEigenvalue::Rational(r) => Some(r),
            ExactEigenvalue::Algebraic(_) => None,
        }
    }

    pub fn as_algebraic(&self) -> Option<&AlgebraicReal> {
        match self {
            ExactEigenvalue::Rational(_) => None,
            ExactEigenvalue::Algebraic(a) => Some(a),
        }
    }

    pub fn cmp_rational(&self, q: &BigRational) -> Ordering {
        match self {
            ExactEigenvalue::Rational(r) => r.cmp(q),
            ExactEigenvalue::Algebraic(a) => a.cmp_rational(q),
        }
    }

    /// Rational bounds enclosing the eigenvalue, at most `width` apart.
    pub fn enclosure(&self, width: &BigRational) -> (BigRational, BigRational) {
        match self {
            ExactEigenvalue::Rational(r) => (r.clone(), r.clone()),
            ExactEigenvalue::Algebraic(a) => {
                let t = a.refined_to(width);
                (t.lo.clone(), t.hi.clone())
            }
        }
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            ExactEigenvalue::Rational(r) => r.to_f64().unwrap(),
            ExactEigenvalue::Algebraic(a) => a.to_f64(),
        }
    }
}

/// All eigenvalues of the intersection matrix, in strictly descending order.
/// Errors if the characteristic polynomial has a repeated root or a
/// non-real root, either of which disqualifies the matrix.
pub fn eigenvalues(m: &TridiagonalMatrix) -> Result<Vec<ExactEigenvalue>, SpectralDefect> {
    let chi = m.char_poly();
    let frat = RatPoly::from_bigints(&chi);
    if frat.gcd(&frat.derivative()).degree() != Some(0) {
        return Err(SpectralDefect::RepeatedRoot);
    }

    // Gershgorin: row i sums to b_0, so every eigenvalue lies in
    // [a_i - (b_0 - a_i), b_0]. Pad by 1 to keep the bounds off the roots.
    let b0 = m.sup[0] as i64;
    let min_a = *m.diag.iter().min().unwrap();
    let lo = BigRational::from_integer(BigInt::from(2 * min_a - b0 - 1));
    let hi = BigRational::from_integer(BigInt::from(b0 + 1));

    let isolated = isolate_real_roots(&chi, &lo, &hi);
    if isolated.roots.len() != m.order() {
        return Err(SpectralDefect::RootCount {
            expected: m.order(),
            found: isolated.roots.len(),
        });
    }

    let defining = if isolated.remainder.len() > 1 {
        Some(Arc::new(DefiningPoly::new(isolated.remainder)))
    } else {
        None
    };

    let mut eigs: Vec<ExactEigenvalue> = isolated
        .roots
        .into_iter()
        .map(|loc| match loc {
            RootLoc::Rational(r) => ExactEigenvalue::Rational(r),
            RootLoc::Bracket { lo, hi } => {
                let def = defining.as_ref().expect("brackets imply a remainder").clone();
                ExactEigenvalue::Algebraic(AlgebraicReal::new(def, lo, hi))
            }
        })
        .collect();
    eigs.reverse();
    Ok(eigs)
}

/// Multiplicity of an eigenvalue: either an exact rational (an integer for
/// every realizable array) or a proof that it is not an integer, in the form
/// of a rational interval around it that contains no integer.
#[derive(Clone, Debug, PartialEq)]
pub enum Multiplicity {
    Exact(BigRational),
    NonIntegral { lo: BigRational, hi: BigRational },
}

impl Multiplicity {
    pub fn exact(&self) -> Option<&BigRational> {
        match self {
            Multiplicity::Exact(r) => Some(r),
            Multiplicity::NonIntegral { .. } => None,
        }
    }

    pub fn is_positive_integer(&self) -> bool {
        match self {
            Multiplicity::Exact(r) => r.is_integer() && r.is_positive(),
            Multiplicity::NonIntegral { .. } => false,
        }
    }
}

/// The cosine-sequence polynomials u_0(x), ..., u_d(x):
/// u_0 = 1, u_1 = x / b_0, and b_i u_{i+1} = (x - a_i) u_i - c_i u_{i-1}.
fn cosine_polys(arr: &IntersectionArray, dp: &DerivedParameters) -> Vec<RatPoly> {
    let d = arr.d();
    let b = arr.b();
    let c = arr.c();
    let a = dp.a();
    let x = RatPoly::from_ints(&[0, 1]);
    let mut u = Vec::with_capacity(d + 1);
    u.push(RatPoly::from_ints(&[1]));
    u.push(x.scale(&BigRational::new(BigInt::one(), BigInt::from(b[0]))));
    for i in 1..d {
        let shifted = x.sub(&RatPoly::from_ints(&[a[i]]));
        let t = shifted.mul(&u[i]).sub(
            &u[i - 1].scale(&BigRational::from_integer(BigInt::from(c[i - 1]))),
        );
        u.push(t.scale(&BigRational::new(BigInt::one(), BigInt::from(b[i]))));
    }
    u
}

/// D(x) = sum_i k_i u_i(x)^2. For an eigenvalue theta the multiplicity is
/// n / D(theta), and D is strictly positive at every eigenvalue.
fn weighted_norm_poly(arr: &IntersectionArray, dp: &DerivedParameters) -> RatPoly {
    let u = cosine_polys(arr, dp);
    let mut dpoly = RatPoly::zero();
    for (i, ui) in u.iter().enumerate() {
        dpoly = dpoly.add(&ui.mul(ui).scale(&dp.k()[i]));
    }
    dpoly
}

/// D reduced modulo one defining polynomial and cleared of denominators:
/// dints / dscale agrees with D at every root of f, and the reduced form is
/// cheaper to evaluate repeatedly.
struct ReducedNorm {
    dints: Vec<BigInt>,
    dscale: BigInt,
}

impl ReducedNorm {
    fn new(dpoly: &RatPoly, f: &RatPoly) -> Self {
        let (dints, dscale) = dpoly.rem(f).to_scaled_ints();
        ReducedNorm { dints, dscale }
    }
}

fn algebraic_multiplicity(
    n: &BigRational,
    rn: &ReducedNorm,
    theta: &AlgebraicReal,
) -> Multiplicity {
    let f_ints = theta.defining_poly().coeffs();
    // The loop below stays in integer arithmetic: with the interval bounds
    // scaled to [qlo, qhi] / s the multiplicity window is
    // [pn*s/(qn*qhi), pn*s/(qn*qlo)], and every test on it clears
    // denominators instead of building reduced fractions each pass.
    let pn = n.numer();
    let qn = n.denom();
    let million = BigInt::from(1_000_000u64);
    let mut root = theta.clone();
    let mut rejected: Option<BigInt> = None;
    for _ in 0..4096 {
        let (lo, hi) = root.interval();
        let dd = lo.denom() / crate::poly::big_gcd(lo.denom(), hi.denom()) * hi.denom();
        let a = lo.numer() * (&dd / lo.denom());
        let b = hi.numer() * (&dd / hi.denom());
        let (qlo, qhi, dpow) = interval_at_rational(&rn.dints, &a, &b, &dd);
        if qlo.is_positive() {
            let ns = pn * &rn.dscale * &dpow;
            let spread = &ns * (&qhi - &qlo);
            let prod = qn * &qlo * &qhi;
            // window < 1, i.e. mhi - mlo = ns*(qhi-qlo)/(qn*qlo*qhi) < 1
            if spread < prod {
                let quot = &ns / (qn * &qhi);
                let cand = if &quot * qn * &qhi == ns {
                    quot
                } else {
                    quot + BigInt::one()
                };
                if &cand * qn * &qlo > ns {
                    // No integer can fit; tighten the window for reporting.
                    if &spread * &million <= prod {
                        return Multiplicity::NonIntegral {
                            lo: BigRational::new(ns.clone(), qn * qhi),
                            hi: BigRational::new(ns, qn * qlo),
                        };
                    }
                } else if rejected.as_ref() != Some(&cand) {
                    // Exact test: the multiplicity equals cand iff theta is a
                    // root of n - cand * D(x), i.e. iff gcd(f, n - cand*D)
                    // still vanishes inside the isolating interval. Clearing
                    // the denominators qn and dscale leaves the roots alone.
                    let neg = -(&cand * qn);
                    let mut e_ints: Vec<BigInt> =
                        rn.dints.iter().map(|c| c * &neg).collect();
                    if e_ints.is_empty() {
                        e_ints.push(BigInt::zero());
                    }
                    e_ints[0] += pn * &rn.dscale;
                    let g = crate::poly::int_poly_gcd(f_ints, &e_ints);
                    if g.len() >= 2 {
                        let chain = SturmChain::new(&RatPoly::from_bigints(&g));
                        if chain.count_roots(lo, hi) == 1 {
                            return Multiplicity::Exact(BigRational::from_integer(cand));
                        }
                    }
                    rejected = Some(cand);
                }
            }
        }
        root = root.bisect();
    }
    unreachable!("multiplicity refinement did not converge");
}

pub fn multiplicities(
    arr: &IntersectionArray,
    dp: &DerivedParameters,
    eigs: &[ExactEigenvalue],
) -> Vec<Multiplicity> {
    let dpoly = weighted_norm_poly(arr, dp);
    let n = dp.n();
    // Conjugate eigenvalues share a defining polynomial, and with it the
    // reduction of D; compute each reduction once.
    let mut cache: Vec<(*const DefiningPoly, ReducedNorm)> = Vec::new();
    eigs.iter()
        .map(|eig| match eig {
            ExactEigenvalue::Rational(r) => {
                let dv = dpoly.eval(r);
                assert!(dv.is_positive(), "weighted norm must be positive at an eigenvalue");
                Multiplicity::Exact(n / dv)
            }
            ExactEigenvalue::Algebraic(a) => {
                let key = Arc::as_ptr(a.defining_poly());
                let pos = cache.iter().position(|(p, _)| *p == key).unwrap_or_else(|| {
                    let rn = ReducedNorm::new(&dpoly, a.defining_poly().as_rat_poly());
                    cache.push((key, rn));
                    cache.len() - 1
                });
                algebraic_multiplicity(n, &cache[pos].1, a)
            }
        })
        .collect()
}

/// Eigenvalues (descending) paired with their multiplicities.
#[derive(Debug)]
pub struct Spectrum {
    eigenvalues: Vec<ExactEigenvalue>,
    multiplicities: Vec<Multiplicity>,
}

impl Spectrum {
    pub fn eigenvalues(&self) -> &[ExactEigenvalue] {
        &self.eigenvalues
    }

    pub fn multiplicities(&self) -> &[Multiplicity] {
        &self.multiplicities
    }

    /// The smallest eigenvalue theta_d.
    pub fn theta_min(&self) -> &ExactEigenvalue {
        self.eigenvalues.last().unwrap()
    }
}

pub fn spectrum(
    arr: &IntersectionArray,
    dp: &DerivedParameters,
) -> Result<Spectrum, SpectralDefect> {
    let m = intersection_matrix(arr, dp);
    let eigs = eigenvalues(&m)?;

    // theta_0 = b_0 with multiplicity 1: the all-ones vector is a left
    // eigenvector, and everything else is strictly smaller.
    let b0 = BigRational::from_integer(BigInt::from(arr.b0()));
    match &eigs[0] {
        ExactEigenvalue::Rational(r) if *r == b0 => {}
        _ => return Err(SpectralDefect::InvariantBroken("theta_0 != b_0")),
    }

    let mults = multiplicities(arr, dp, &eigs);
    if mults[0] != Multiplicity::Exact(BigRational::one()) {
        return Err(SpectralDefect::InvariantBroken("m(b_0) != 1"));
    }
    Ok(Spectrum {
        eigenvalues: eigs,
        multiplicities: mults,
    })
}

/// Exact verification of the three power-sum identities
/// sum m = n, sum m*theta = 0, sum m*theta^2 = n*b_0.
///
/// The multiplicities are recomputed symbolically (sum over the algebraic
/// eigenvalues via the trace form on Q[x]/(f)), so this is an independent
/// cross-check of `multiplicities`, and it works even when some multiplicity
/// is not an integer.
pub fn verify_trace_identities(
    arr: &IntersectionArray,
    dp: &DerivedParameters,
    eigs: &[ExactEigenvalue],
) -> bool {
    let dpoly = weighted_norm_poly(arr, dp);
    let n = dp.n();
    let mut sums = [
        BigRational::zero(),
        BigRational::zero(),
        BigRational::zero(),
    ];

    for eig in eigs {
        if let ExactEigenvalue::Rational(r) = eig {
            let m = n / dpoly.eval(r);
            sums[0] += &m;
            sums[1] += &m * r;
            sums[2] += &m * r * r;
        }
    }

    let algebraic: Vec<&AlgebraicReal> =
        eigs.iter().filter_map(|e| e.as_algebraic()).collect();
    if let Some(first) = algebraic.first() {
        let f = first.defining_poly().as_rat_poly().clone();
        debug_assert!(algebraic
            .iter()
            .all(|a| Arc::ptr_eq(a.defining_poly(), first.defining_poly())));
        // m(theta) = n / D(theta) for every root theta of f at once:
        // reduce n * D^{-1} modulo f and take traces of x^s times it.
        let dinv = dpoly
            .rem(&f)
            .inverse_mod(&f)
            .expect("D shares no root with the defining polynomial");
        let mut g = dinv.scale(n).rem(&f);
        for sum in sums.iter_mut() {
            *sum += crate::poly::trace_of_mul(&g, &f);
            g = g.mul_x().rem(&f);
        }
    }

    let b0 = BigRational::from_integer(BigInt::from(arr.b0()));
    sums[0] == *n && sums[1].is_zero() && sums[2] == n * b0
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::array::derive_parameters;

    fn arr(b: &[u32], c: &[u32]) -> IntersectionArray {
        IntersectionArray::new(b.to_vec(), c.to_vec()).unwrap()
    }

    fn rat(v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }

    fn rational_eigs(eigs: &[ExactEigenvalue]) -> Vec<BigRational> {
        eigs.iter()
            .map(|e| e.as_rational().expect("expected a rational eigenvalue").clone())
            .collect()
    }

    fn exact_mults(m: &[Multiplicity]) -> Vec<BigRational> {
        m.iter()
            .map(|v| v.exact().expect("expected an exact multiplicity").clone())
            .collect()
    }

    #[test]
    fn excluding_a_rational_never_leaves_it_as_an_endpoint() {
        // sqrt2 isolated by an interval that contains -1. Excluding -1 used
        // to leave it behind as the new lower endpoint, which breaks any
        // later endpoint map with a pole there.
        let def = Arc::new(DefiningPoly::new(vec![
            BigInt::from(-2),
            BigInt::from(0),
            BigInt::from(1),
        ]));
        let root = AlgebraicReal::new(
            def,
            BigRational::new(BigInt::from(-6), BigInt::from(5)),
            rat(3),
        );
        let minus_one = rat(-1);
        let t = root.refined_excluding(&minus_one);
        let (lo, hi) = t.interval();
        assert!(lo != &minus_one && hi != &minus_one);
        assert!(lo > &minus_one || hi < &minus_one);
        // the root is still inside
        assert_eq!(t.cmp_rational(&rat(1)), std::cmp::Ordering::Greater);
        assert_eq!(t.cmp_rational(&rat(2)), std::cmp::Ordering::Less);
    }

    #[test]
    fn intersection_matrix_entries() {
        let a = arr(&[55, 36, 11], &[1, 4, 45]);
        let dp = derive_parameters(&a);
        let m = intersection_matrix(&a, &dp);
        let expected = [
            [0, 55, 0, 0],
            [1, 18, 36, 0],
            [0, 4, 40, 11],
            [0, 0, 45, 10],
        ];
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(m.entry(i, j), expected[i][j], "entry ({i}, {j})");
            }
        }
        // rows sum to b_0
        for i in 0..4 {
            let s: i64 = (0..4).map(|j| m.entry(i, j)).sum();
            assert_eq!(s, 55);
        }
    }

    #[test]
    fn char_poly_of_complete_graph_array() {
        // {k;1}: x^2 - (k-1)x - k = (x - k)(x + 1)
        let a = arr(&[6], &[1]);
        let dp = derive_parameters(&a);
        let m = intersection_matrix(&a, &dp);
        let chi: Vec<i64> = m.char_poly().iter().map(|c| c.to_i64().unwrap()).collect();
        assert_eq!(chi, vec![-6, -5, 1]);
    }

    #[test]
    fn petersen_spectrum() {
        let a = arr(&[3, 2], &[1, 1]);
        let dp = derive_parameters(&a);
        let sp = spectrum(&a, &dp).unwrap();
        assert_eq!(rational_eigs(sp.eigenvalues()), vec![rat(3), rat(1), rat(-2)]);
        assert_eq!(exact_mults(sp.multiplicities()), vec![rat(1), rat(5), rat(4)]);
    }

    #[test]
    fn spectrum_of_55_36_11() {
        let a = arr(&[55, 36, 11], &[1, 4, 45]);
        let dp = derive_parameters(&a);
        let sp = spectrum(&a, &dp).unwrap();
        assert_eq!(
            rational_eigs(sp.eigenvalues()),
            vec![rat(55), rat(19), rat(-1), rat(-5)]
        );
        assert_eq!(
            exact_mults(sp.multiplicities()),
            vec![rat(1), rat(77), rat(363), rat(231)]
        );
    }

    #[test]
    fn icosahedron_spectrum_has_algebraic_pair() {
        // {5,2,1;1,2,5}: eigenvalues 5, sqrt5, -1, -sqrt5 with
        // multiplicities 1, 3, 5, 3; char poly (x-5)(x+1)(x^2-5).
        let a = arr(&[5, 2, 1], &[1, 2, 5]);
        let dp = derive_parameters(&a);
        let m = intersection_matrix(&a, &dp);
        let product = RatPoly::from_ints(&[-5, 1])
            .mul(&RatPoly::from_ints(&[1, 1]))
            .mul(&RatPoly::from_ints(&[-5, 0, 1]));
        assert_eq!(RatPoly::from_bigints(&m.char_poly()), product);

        let sp = spectrum(&a, &dp).unwrap();
        let eigs = sp.eigenvalues();
        assert_eq!(eigs[0].as_rational(), Some(&rat(5)));
        assert_eq!(eigs[2].as_rational(), Some(&rat(-1)));
        let sqrt5 = eigs[1].as_algebraic().expect("theta_1 = sqrt5");
        assert_eq!(sqrt5.defining_poly().display_string(), "x^2-5");
        assert_eq!(sqrt5.cmp_rational(&rat(2)), Ordering::Greater);
        assert_eq!(sqrt5.cmp_rational(&rat(3)), Ordering::Less);
        let neg = eigs[3].as_algebraic().expect("theta_3 = -sqrt5");
        assert_eq!(neg.cmp_rational(&rat(-3)), Ordering::Greater);
        assert_eq!(neg.cmp_rational(&rat(-2)), Ordering::Less);

        let mults = sp.multiplicities();
        assert_eq!(mults[0], Multiplicity::Exact(rat(1)));
        assert_eq!(mults[1], Multiplicity::Exact(rat(3)));
        assert_eq!(mults[2], Multiplicity::Exact(rat(5)));
        assert_eq!(mults[3], Multiplicity::Exact(rat(3)));
    }

    #[test]
    fn heptagon_spectrum_is_mostly_algebraic() {
        // C_7 = {2,1,1;1,1,1}: besides 2, the eigenvalues are the roots of
        // x^3 + x^2 - 2x - 1, each with multiplicity 2.
        let a = arr(&[2, 1, 1], &[1, 1, 1]);
        let dp = derive_parameters(&a);
        let sp = spectrum(&a, &dp).unwrap();
        let eigs = sp.eigenvalues();
        assert_eq!(eigs[0].as_rational(), Some(&rat(2)));
        for e in &eigs[1..] {
            let alg = e.as_algebraic().expect("cubic conjugate");
            assert_eq!(alg.defining_poly().display_string(), "x^3+x^2-2x-1");
        }
        for m in &sp.multiplicities()[1..] {
            assert_eq!(*m, Multiplicity::Exact(rat(2)));
        }
    }

    #[test]
    fn nonintegral_multiplicity_is_detected() {
        // {3,2;1,2} has n = 7 and eigenvalues 3, -1 + sqrt2, -1 - sqrt2;
        // the multiplicities of the algebraic pair are 3 +- 3*sqrt2/4,
        // which are not integers.
        let a = arr(&[3, 2], &[1, 2]);
        let dp = derive_parameters(&a);
        let sp = spectrum(&a, &dp).unwrap();
        let nonintegral: Vec<_> = sp
            .multiplicities()
            .iter()
            .filter(|m| matches!(m, Multiplicity::NonIntegral { .. }))
            .collect();
        assert_eq!(nonintegral.len(), 2);
        for m in nonintegral {
            if let Multiplicity::NonIntegral { lo, hi } = m {
                assert!(lo < hi);
                // the reported window really excludes every integer
                assert!(lo.ceil() > *hi);
            }
        }
    }

    #[test]
    fn trace_identities_hold_for_catalog_like_arrays() {
        let cases: Vec<IntersectionArray> = vec![
            arr(&[55, 36, 11], &[1, 4, 45]),
            arr(&[3, 2], &[1, 1]),
            arr(&[5, 2, 1], &[1, 2, 5]),
            arr(&[2, 1, 1], &[1, 1, 1]),
            arr(&[3, 2, 2], &[1, 1, 3]),
            arr(&[6], &[1]),
            arr(&[3, 2], &[1, 2]),
        ];
        for a in cases {
            let dp = derive_parameters(&a);
            let sp = spectrum(&a, &dp).unwrap();
            assert!(
                verify_trace_identities(&a, &dp, sp.eigenvalues()),
                "trace identities failed for {a}"
            );
        }
    }

    #[test]
    fn heawood_eigenvalues_are_plus_minus_sqrt2() {
        let a = arr(&[3, 2, 2], &[1, 1, 3]);
        let dp = derive_parameters(&a);
        let sp = spectrum(&a, &dp).unwrap();
        let eigs = sp.eigenvalues();
        assert_eq!(eigs[0].as_rational(), Some(&rat(3)));
        assert_eq!(eigs[3].as_rational(), Some(&rat(-3)));
        assert_eq!(
            eigs[1].as_algebraic().unwrap().defining_poly().display_string(),
            "x^2-2"
        );
        assert_eq!(
            exact_mults(&sp.multiplicities()[1..3]),
            vec![rat(6), rat(6)]
        );
    }
}
