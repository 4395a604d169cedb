//! Feasibility conditions for intersection arrays and the chained
//! nonexistence argument, with a proof trace for every decision.
//!
//! The chain runs in a fixed order: the four basic counting conditions, the
//! Terwilliger eigenvalue bound on the local graph, the connectivity
//! conclusion it supports, the coclique guarantee (Brooks-type bound), and
//! finally the Koolen-Park inequality at every guaranteed coclique size.
//! Each step is recorded whether it passes, is violated, or does not apply.

use crate::array::{derive_parameters, DerivedParameters, IntersectionArray};
use crate::poly::{decimal_string, RatPoly};
use crate::spectral::{spectrum, AlgebraicReal, ExactEigenvalue, Spectrum};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::cmp::Ordering;
use std::collections::BTreeMap;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Condition {
    BasicIntegrality,
    BasicMonotonicity,
    BasicHandshake,
    MultiplicityIntegrality,
    TerwilligerBound,
    LocalConnectivity,
    CocliqueGuarantee,
    KoolenPark,
}

impl Condition {
    pub fn tag(&self) -> &'static str {
        match self {
            Condition::BasicIntegrality => "basic-integrality",
            Condition::BasicMonotonicity => "basic-monotonicity",
            Condition::BasicHandshake => "basic-handshake",
            Condition::MultiplicityIntegrality => "multiplicity-integrality",
            Condition::TerwilligerBound => "terwilliger-bound",
            Condition::LocalConnectivity => "local-connectivity",
            Condition::CocliqueGuarantee => "coclique-guarantee",
            Condition::KoolenPark => "koolen-park",
        }
    }

    pub fn from_tag(tag: &str) -> Option<Condition> {
        let all = [
            Condition::BasicIntegrality,
            Condition::BasicMonotonicity,
            Condition::BasicHandshake,
            Condition::MultiplicityIntegrality,
            Condition::TerwilligerBound,
            Condition::LocalConnectivity,
            Condition::CocliqueGuarantee,
            Condition::KoolenPark,
        ];
        all.into_iter().find(|c| c.tag() == tag)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Violated,
    Inapplicable,
}

impl Outcome {
    pub fn tag(&self) -> &'static str {
        match self {
            Outcome::Pass => "pass",
            Outcome::Violated => "violated",
            Outcome::Inapplicable => "inapplicable",
        }
    }
}

/// One evaluated condition: what was checked, the values that went into the
/// check, and what came out.
#[derive(Clone, Debug)]
pub struct ProofStep {
    pub condition: Condition,
    pub inputs: BTreeMap<String, String>,
    pub outcome: Outcome,
    pub detail: String,
}

impl ProofStep {
    fn new(
        condition: Condition,
        outcome: Outcome,
        inputs: BTreeMap<String, String>,
        detail: String,
    ) -> Self {
        ProofStep {
            condition,
            inputs,
            outcome,
            detail,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Infeasible,
    Inconclusive,
}

impl Status {
    pub fn tag(&self) -> &'static str {
        match self {
            Status::Infeasible => "infeasible",
            Status::Inconclusive => "inconclusive",
        }
    }
}

/// Result of the full chain. `killer` indexes the first violated step in
/// `trace`; it is present exactly when the status is infeasible.
#[derive(Clone, Debug)]
pub struct Verdict {
    pub array: IntersectionArray,
    pub status: Status,
    pub trace: Vec<ProofStep>,
    pub killer: Option<usize>,
}

impl Verdict {
    fn from_trace(array: IntersectionArray, trace: Vec<ProofStep>) -> Self {
        let killer = trace.iter().position(|s| s.outcome == Outcome::Violated);
        let status = if killer.is_some() {
            Status::Infeasible
        } else {
            Status::Inconclusive
        };
        Verdict {
            array,
            status,
            trace,
            killer,
        }
    }

    pub fn killer_step(&self) -> Option<&ProofStep> {
        self.killer.map(|i| &self.trace[i])
    }
}

fn rat(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

fn join<T: ToString>(vals: &[T]) -> String {
    vals.iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(", ")
}

fn is_even(r: &BigRational) -> bool {
    r.is_integer() && (r.to_integer() % 2i32).is_zero()
}

/// The four counting conditions every distance-regular graph satisfies:
/// integral valencies, monotone parameter sequences with a nonnegative
/// a-sequence, even degree sums, and integral eigenvalue multiplicities.
pub fn check_basic(
    arr: &IntersectionArray,
    dp: &DerivedParameters,
    sp: &Spectrum,
) -> Vec<ProofStep> {
    let mut steps = Vec::with_capacity(4);

    // valency integrality
    {
        let mut inputs = BTreeMap::new();
        inputs.insert("k".to_string(), join(dp.k()));
        inputs.insert("n".to_string(), dp.n().to_string());
        let offenders: Vec<String> = dp
            .k()
            .iter()
            .enumerate()
            .filter(|(_, k)| !k.is_integer())
            .map(|(i, k)| format!("k_{} = {}", i, k))
            .collect();
        let (outcome, detail) = if offenders.is_empty() {
            (
                Outcome::Pass,
                format!("valencies {} are positive integers", join(dp.k())),
            )
        } else {
            (
                Outcome::Violated,
                format!("{} not an integer", offenders.join("; ")),
            )
        };
        steps.push(ProofStep::new(
            Condition::BasicIntegrality,
            outcome,
            inputs,
            detail,
        ));
    }

    // monotonicity and sign constraints
    {
        let b = arr.b();
        let c = arr.c();
        let a = dp.a();
        let mut inputs = BTreeMap::new();
        inputs.insert("a".to_string(), join(a));
        inputs.insert("b".to_string(), join(b));
        inputs.insert("c".to_string(), join(c));
        let mut offenses: Vec<String> = Vec::new();
        for i in 1..b.len() {
            if b[i] > b[i - 1] {
                offenses.push(format!("b_{} = {} > b_{} = {}", i, b[i], i - 1, b[i - 1]));
            }
        }
        for i in 1..c.len() {
            if c[i] < c[i - 1] {
                offenses.push(format!("c_{} = {} < c_{} = {}", i + 1, c[i], i, c[i - 1]));
            }
        }
        if c[c.len() - 1] > b[0] {
            offenses.push(format!("c_{} = {} > b_0 = {}", c.len(), c[c.len() - 1], b[0]));
        }
        for (i, &ai) in a.iter().enumerate() {
            if ai < 0 {
                offenses.push(format!("a_{} = {} < 0", i, ai));
            }
        }
        let (outcome, detail) = if offenses.is_empty() {
            (
                Outcome::Pass,
                "b non-increasing, c non-decreasing, c_d <= b_0, a_i >= 0".to_string(),
            )
        } else {
            (Outcome::Violated, offenses.join("; "))
        };
        steps.push(ProofStep::new(
            Condition::BasicMonotonicity,
            outcome,
            inputs,
            detail,
        ));
    }

    // handshake parities
    {
        let nb0 = dp.n() * rat(arr.b0() as i64);
        let mut inputs = BTreeMap::new();
        inputs.insert("n*b0".to_string(), nb0.to_string());
        let mut offenses: Vec<String> = Vec::new();
        if !is_even(&nb0) {
            offenses.push(format!("n*b_0 = {} is odd", nb0));
        }
        for (i, (k, &ai)) in dp.k().iter().zip(dp.a().iter()).enumerate() {
            let prod = k * rat(ai);
            if !is_even(&prod) {
                offenses.push(format!("k_{}*a_{} = {} is odd", i, i, prod));
            }
        }
        let (outcome, detail) = if offenses.is_empty() {
            (
                Outcome::Pass,
                format!("n*b_0 = {} and all k_i*a_i are even", nb0),
            )
        } else {
            (Outcome::Violated, offenses.join("; "))
        };
        steps.push(ProofStep::new(
            Condition::BasicHandshake,
            outcome,
            inputs,
            detail,
        ));
    }

    // multiplicity integrality
    {
        let rendered: Vec<String> = sp
            .multiplicities()
            .iter()
            .map(|m| match m {
                crate::spectral::Multiplicity::Exact(v) => v.to_string(),
                crate::spectral::Multiplicity::NonIntegral { lo, hi } => format!(
                    "({}, {})",
                    decimal_string(lo, 6, false),
                    decimal_string(hi, 6, true)
                ),
            })
            .collect();
        let mut inputs = BTreeMap::new();
        inputs.insert("m".to_string(), rendered.join(", "));
        let mut offenses: Vec<String> = Vec::new();
        for (i, m) in sp.multiplicities().iter().enumerate() {
            if !m.is_positive_integer() {
                match m {
                    crate::spectral::Multiplicity::Exact(v) => {
                        offenses.push(format!("m(theta_{}) = {} is not an integer", i, v))
                    }
                    crate::spectral::Multiplicity::NonIntegral { lo, hi } => {
                        offenses.push(format!(
                            "m(theta_{}) in ({}, {}) is not an integer",
                            i,
                            decimal_string(lo, 6, false),
                            decimal_string(hi, 6, true)
                        ))
                    }
                }
            }
        }
        let (outcome, detail) = if offenses.is_empty() {
            (
                Outcome::Pass,
                format!("multiplicities {} are positive integers", rendered.join(", ")),
            )
        } else {
            (Outcome::Violated, offenses.join("; "))
        };
        steps.push(ProofStep::new(
            Condition::MultiplicityIntegrality,
            outcome,
            inputs,
            detail,
        ));
    }

    steps
}

/// The Terwilliger bound B = -b_1/(theta_d + 1) - 1 on the second largest
/// eigenvalue of every local graph. Kept exact: for an irrational theta_d
/// the bound is the image of an algebraic number under a Moebius map, and
/// comparisons go through sign evaluations instead of approximation.
#[derive(Clone, Debug)]
pub enum TerwilligerBound {
    Rational(BigRational),
    Irrational { theta_d: AlgebraicReal, b1: u32 },
}

impl TerwilligerBound {
    /// Exact comparison of the bound against an integer.
    pub fn cmp_i64(&self, v: i64) -> Ordering {
        match self {
            TerwilligerBound::Rational(b) => b.cmp(&rat(v)),
            TerwilligerBound::Irrational { theta_d, b1 } => {
                // B - v = -(b1 + (v+1)(theta+1)) / (theta+1); take signs of
                // numerator and denominator separately.
                let num = RatPoly::from_rationals(vec![
                    rat(-(v + 1) - *b1 as i64),
                    rat(-(v + 1)),
                ]);
                let s_num = theta_d.sign_of(&num);
                assert!(s_num != 0, "a linear rational polynomial cannot vanish at an irrational");
                let s_den = match theta_d.cmp_rational(&rat(-1)) {
                    Ordering::Greater => 1i8,
                    Ordering::Less => -1i8,
                    Ordering::Equal => unreachable!("irrational theta_d cannot equal -1"),
                };
                match s_num * s_den {
                    1 => Ordering::Greater,
                    -1 => Ordering::Less,
                    _ => unreachable!(),
                }
            }
        }
    }

    /// Rational bounds enclosing B, at most `width` apart.
    pub fn enclosure(&self, width: &BigRational) -> (BigRational, BigRational) {
        match self {
            TerwilligerBound::Rational(b) => (b.clone(), b.clone()),
            TerwilligerBound::Irrational { theta_d, b1 } => {
                let b1r = rat(*b1 as i64);
                let minus_one = rat(-1);
                let mut t = theta_d.refined_excluding(&minus_one);
                loop {
                    // g(x) = -b1/(x+1) - 1 is increasing away from x = -1,
                    // so the interval maps endpoint to endpoint.
                    let (lo, hi) = t.interval();
                    let glo = -&b1r / (lo + BigRational::one()) - BigRational::one();
                    let ghi = -&b1r / (hi + BigRational::one()) - BigRational::one();
                    debug_assert!(glo <= ghi);
                    if &ghi - &glo <= *width {
                        return (glo, ghi);
                    }
                    t = t.bisect();
                }
            }
        }
    }

    pub fn display_string(&self) -> String {
        match self {
            TerwilligerBound::Rational(b) => b.to_string(),
            TerwilligerBound::Irrational { .. } => {
                let width = BigRational::new(BigInt::one(), BigInt::from(1_000_000u64));
                let (lo, _) = self.enclosure(&width);
                format!("~{}", decimal_string(&lo, 6, false))
            }
        }
    }
}

/// Compute the Terwilliger bound, or `None` when it does not apply:
/// d = 1 leaves no b_1, and theta_d = -1 puts a zero in the denominator.
pub fn terwilliger_bound(
    arr: &IntersectionArray,
    _dp: &DerivedParameters,
    sp: &Spectrum,
) -> Option<TerwilligerBound> {
    if arr.d() < 2 {
        return None;
    }
    let b1 = arr.b()[1];
    match sp.theta_min() {
        ExactEigenvalue::Rational(r) => {
            if *r == rat(-1) {
                None
            } else {
                let denom = r + BigRational::one();
                Some(TerwilligerBound::Rational(
                    -rat(b1 as i64) / denom - BigRational::one(),
                ))
            }
        }
        ExactEigenvalue::Algebraic(a) => Some(TerwilligerBound::Irrational {
            theta_d: a.clone(),
            b1,
        }),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConnStatus {
    Connected,
    Unknown,
    Inapplicable,
}

/// Whether the Terwilliger bound forces every local graph to be connected:
/// the local graph is a1-regular, so B < a1 pins its largest eigenvalue's
/// multiplicity to one component. At B = a1 nothing follows.
pub fn local_connectivity(bound: &TerwilligerBound, a1: i64) -> ConnStatus {
    if a1 <= 0 {
        return ConnStatus::Inapplicable;
    }
    match bound.cmp_i64(a1) {
        Ordering::Less => ConnStatus::Connected,
        _ => ConnStatus::Unknown,
    }
}

/// Largest coclique size guaranteed inside every local graph, if any.
pub fn guaranteed_coclique_size(
    arr: &IntersectionArray,
    dp: &DerivedParameters,
    conn: ConnStatus,
) -> Option<u64> {
    let b0 = arr.b0() as u64;
    let a1 = dp.a1();
    if a1 == 0 {
        // the local graph has no edges at all
        return Some(b0);
    }
    if a1 < 0 {
        return None;
    }
    if a1 as u64 == b0 - 1 {
        // the local graph is complete; only trivial cocliques exist
        return None;
    }
    match conn {
        ConnStatus::Connected => {
            if a1 == 2 && b0 % 2 == 1 {
                // connected 2-regular on an odd number of vertices: an odd
                // cycle, whose independence number is exactly floor(b0/2)
                Some(b0 / 2)
            } else {
                Some((b0 + a1 as u64 - 1) / a1 as u64)
            }
        }
        _ => None,
    }
}

fn koolen_park_rhs(b0: u32, a1: i64, c: u64) -> BigRational {
    let num = BigInt::from(c) * BigInt::from(a1 + 1) - BigInt::from(b0);
    let den = BigInt::from(c) * BigInt::from(c - 1) / BigInt::from(2);
    BigRational::new(num, den)
}

/// One Koolen-Park test: a coclique of size c in the local graph forces
/// c_2 - 1 >= (c(a_1 + 1) - b_0) / C(c, 2).
pub fn koolen_park_test(arr: &IntersectionArray, dp: &DerivedParameters, c: u64) -> ProofStep {
    assert!(c >= 2, "the inequality needs a coclique of at least two vertices");
    let c2 = arr.c2().expect("koolen-park needs diameter at least 2");
    let a1 = dp.a1();
    let b0 = arr.b0();
    let lhs = rat(c2 as i64 - 1);
    let rhs = koolen_park_rhs(b0, a1, c);

    let mut inputs = BTreeMap::new();
    inputs.insert("a1".to_string(), a1.to_string());
    inputs.insert("b0".to_string(), b0.to_string());
    inputs.insert("c".to_string(), c.to_string());
    inputs.insert("c2".to_string(), c2.to_string());
    inputs.insert("lhs".to_string(), lhs.to_string());
    inputs.insert("rhs".to_string(), rhs.to_string());

    if lhs >= rhs {
        ProofStep::new(
            Condition::KoolenPark,
            Outcome::Pass,
            inputs,
            format!("at c={}: {} >= {} holds", c, lhs, rhs),
        )
    } else {
        ProofStep::new(
            Condition::KoolenPark,
            Outcome::Violated,
            inputs,
            format!("at c={}: {} >= {} FAILS", c, lhs, rhs),
        )
    }
}

/// Coclique sizes worth testing in 2..=c_star. For small ranges that is all
/// of them. The right-hand side r(c) = (c(a1+1) - b0)/C(c,2) has a single
/// interior maximum at c = (b0 + sqrt(b0(b0 - a1 - 1)))/(a1 + 1), so for a
/// huge range the integer maximizer sits next to that point or at an end,
/// and testing those few candidates decides the whole range.
fn koolen_park_candidates(b0: u32, a1: i64, c_star: u64) -> Vec<u64> {
    if c_star <= 64 {
        return (2..=c_star).collect();
    }
    let mut cands = vec![2u64, c_star];
    let a = a1 + 1;
    if a > 0 {
        let bb = BigInt::from(b0);
        let inner = &bb * (&bb - BigInt::from(a));
        if !inner.is_negative() {
            let c0 = ((&bb + inner.sqrt()) / BigInt::from(a))
                .to_u64()
                .unwrap_or(c_star);
            for t in [c0.saturating_sub(1), c0, c0.saturating_add(1)] {
                if (2..=c_star).contains(&t) {
                    cands.push(t);
                }
            }
        }
    }
    cands.sort_unstable();
    cands.dedup();
    cands
}

fn koolen_park_step(
    arr: &IntersectionArray,
    dp: &DerivedParameters,
    c_star: Option<u64>,
) -> ProofStep {
    if arr.d() < 2 {
        return ProofStep::new(
            Condition::KoolenPark,
            Outcome::Inapplicable,
            BTreeMap::new(),
            "inapplicable: d = 1 leaves no c_2 to bound".to_string(),
        );
    }
    let c_star = match c_star {
        Some(c) if c >= 2 => c,
        _ => {
            return ProofStep::new(
                Condition::KoolenPark,
                Outcome::Inapplicable,
                BTreeMap::new(),
                "inapplicable: no coclique of size >= 2 is guaranteed".to_string(),
            );
        }
    };

    // Report the binding case: the smallest candidate with the largest
    // right-hand side. If even that one holds, every c in range holds.
    let mut binding: Option<(u64, BigRational)> = None;
    for c in koolen_park_candidates(arr.b0(), dp.a1(), c_star) {
        let rhs = koolen_park_rhs(arr.b0(), dp.a1(), c);
        if binding.as_ref().map_or(true, |(_, best)| rhs > *best) {
            binding = Some((c, rhs));
        }
    }
    let (binding, _) = binding.expect("candidate list is never empty");
    let mut step = koolen_park_test(arr, dp, binding);
    step.inputs.insert("c_star".to_string(), c_star.to_string());
    step
}

/// Full analysis of one intersection array.
#[derive(Debug)]
pub struct ArrayReport {
    pub array: IntersectionArray,
    pub derived: DerivedParameters,
    pub spectrum: Spectrum,
    pub verdict: Verdict,
}

pub fn analyze(arr: &IntersectionArray) -> ArrayReport {
    let dp = derive_parameters(arr);
    let sp = spectrum(arr, &dp)
        .expect("intersection matrices always have full simple real spectra");

    let mut trace = check_basic(arr, &dp, &sp);

    let bound = terwilliger_bound(arr, &dp, &sp);
    trace.push(match &bound {
        Some(b) => {
            let mut inputs = BTreeMap::new();
            inputs.insert("b1".to_string(), arr.b()[1].to_string());
            inputs.insert("theta_d".to_string(), render_eigenvalue(sp.theta_min()));
            inputs.insert("B".to_string(), b.display_string());
            ProofStep::new(
                Condition::TerwilligerBound,
                Outcome::Pass,
                inputs,
                format!("B = -b_1/(theta_d + 1) - 1 = {}", b.display_string()),
            )
        }
        None => {
            let reason = if arr.d() < 2 {
                "inapplicable: d = 1 leaves no b_1"
            } else {
                "inapplicable: theta_d = -1"
            };
            ProofStep::new(
                Condition::TerwilligerBound,
                Outcome::Inapplicable,
                BTreeMap::new(),
                reason.to_string(),
            )
        }
    });

    let conn = match &bound {
        Some(b) => local_connectivity(b, dp.a1()),
        None => ConnStatus::Inapplicable,
    };
    trace.push({
        let mut inputs = BTreeMap::new();
        inputs.insert("a1".to_string(), dp.a1().to_string());
        if let Some(b) = &bound {
            inputs.insert("B".to_string(), b.display_string());
        }
        match conn {
            ConnStatus::Connected => {
                let b = bound.as_ref().unwrap();
                ProofStep::new(
                    Condition::LocalConnectivity,
                    Outcome::Pass,
                    inputs,
                    format!(
                        "{} < a1 = {} => local graph connected",
                        b.display_string(),
                        dp.a1()
                    ),
                )
            }
            ConnStatus::Unknown => {
                let b = bound.as_ref().unwrap();
                ProofStep::new(
                    Condition::LocalConnectivity,
                    Outcome::Pass,
                    inputs,
                    format!(
                        "{} >= a1 = {} => connectivity unknown",
                        b.display_string(),
                        dp.a1()
                    ),
                )
            }
            ConnStatus::Inapplicable => {
                let reason = if bound.is_none() {
                    "inapplicable: no terwilliger bound".to_string()
                } else {
                    format!("inapplicable: a1 = {} leaves nothing to connect", dp.a1())
                };
                ProofStep::new(
                    Condition::LocalConnectivity,
                    Outcome::Inapplicable,
                    inputs,
                    reason,
                )
            }
        }
    });

    let c_star = guaranteed_coclique_size(arr, &dp, conn);
    trace.push({
        let b0 = arr.b0() as u64;
        let a1 = dp.a1();
        let mut inputs = BTreeMap::new();
        inputs.insert("a1".to_string(), a1.to_string());
        inputs.insert("b0".to_string(), b0.to_string());
        match c_star {
            Some(size) => {
                inputs.insert("size".to_string(), size.to_string());
                let detail = if a1 == 0 {
                    format!("local graph has no edges: coclique of size b_0 = {}", size)
                } else if a1 == 2 && b0 % 2 == 1 {
                    format!(
                        "connected 2-regular local graph on odd b_0 is an odd cycle: floor({}/2) = {}",
                        b0, size
                    )
                } else {
                    format!("ceil(b_0/a_1) = ceil({}/{}) = {}", b0, a1, size)
                };
                ProofStep::new(Condition::CocliqueGuarantee, Outcome::Pass, inputs, detail)
            }
            None => {
                let reason = if a1 > 0 && a1 as u64 == b0 - 1 {
                    "none: local graph is complete".to_string()
                } else if a1 < 0 {
                    format!("none: a1 = {} is negative", a1)
                } else {
                    "none: local graph connectivity unknown".to_string()
                };
                ProofStep::new(
                    Condition::CocliqueGuarantee,
                    Outcome::Inapplicable,
                    inputs,
                    reason,
                )
            }
        }
    });

    trace.push(koolen_park_step(arr, &dp, c_star));

    let verdict = Verdict::from_trace(arr.clone(), trace);
    ArrayReport {
        array: arr.clone(),
        derived: dp,
        spectrum: sp,
        verdict,
    }
}

/// Run the chain and return only the verdict.
pub fn run_nonexistence_chain(arr: &IntersectionArray) -> Verdict {
    analyze(arr).verdict
}

pub fn render_eigenvalue(eig: &ExactEigenvalue) -> String {
    match eig {
        ExactEigenvalue::Rational(r) => r.to_string(),
        ExactEigenvalue::Algebraic(a) => {
            let width = BigRational::new(BigInt::one(), BigInt::from(1_000_000u64));
            let t = a.refined_to(&width);
            let (lo, _) = t.interval();
            format!(
                "~{} (root of {})",
                decimal_string(lo, 6, false),
                a.defining_poly().display_string()
            )
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn arr(b: &[u32], c: &[u32]) -> IntersectionArray {
        IntersectionArray::new(b.to_vec(), c.to_vec()).unwrap()
    }

    fn step<'a>(v: &'a Verdict, cond: Condition) -> &'a ProofStep {
        v.trace
            .iter()
            .find(|s| s.condition == cond)
            .expect("step present")
    }

    #[test]
    fn chain_rules_out_55_36_11() {
        let a = arr(&[55, 36, 11], &[1, 4, 45]);
        let report = analyze(&a);
        let v = &report.verdict;
        assert_eq!(v.status, Status::Infeasible);

        for cond in [
            Condition::BasicIntegrality,
            Condition::BasicMonotonicity,
            Condition::BasicHandshake,
            Condition::MultiplicityIntegrality,
        ] {
            assert_eq!(step(v, cond).outcome, Outcome::Pass);
        }

        let tw = step(v, Condition::TerwilligerBound);
        assert_eq!(tw.outcome, Outcome::Pass);
        assert_eq!(tw.inputs["B"], "8");

        let conn = step(v, Condition::LocalConnectivity);
        assert_eq!(conn.outcome, Outcome::Pass);
        assert_eq!(conn.detail, "8 < a1 = 18 => local graph connected");

        let coc = step(v, Condition::CocliqueGuarantee);
        assert_eq!(coc.outcome, Outcome::Pass);
        assert_eq!(coc.inputs["size"], "4");

        let kp = step(v, Condition::KoolenPark);
        assert_eq!(kp.outcome, Outcome::Violated);
        assert_eq!(kp.inputs["c"], "4");
        assert_eq!(kp.detail, "at c=4: 3 >= 7/2 FAILS");

        assert_eq!(v.killer_step().unwrap().condition, Condition::KoolenPark);
        assert_eq!(v.killer, Some(7));
    }

    #[test]
    fn handshake_violation_is_the_killer() {
        // {3,2;1,2}: n = 7, n*b_0 = 21 odd
        let a = arr(&[3, 2], &[1, 2]);
        let v = run_nonexistence_chain(&a);
        assert_eq!(v.status, Status::Infeasible);
        assert_eq!(
            v.killer_step().unwrap().condition,
            Condition::BasicHandshake
        );
        let hs = step(&v, Condition::BasicHandshake);
        assert!(hs.detail.contains("n*b_0 = 21 is odd"));
    }

    #[test]
    fn johnson_5_2_survives_with_tight_koolen_park() {
        // {6,2;1,4}: B = 1 < a1 = 3, coclique guarantee ceil(6/3) = 2,
        // KP at c=2: 3 >= 2 holds.
        let a = arr(&[6, 2], &[1, 4]);
        let v = run_nonexistence_chain(&a);
        assert_eq!(v.status, Status::Inconclusive);
        assert_eq!(v.killer, None);
        let tw = step(&v, Condition::TerwilligerBound);
        assert_eq!(tw.inputs["B"], "1");
        let conn = step(&v, Condition::LocalConnectivity);
        assert!(conn.detail.contains("local graph connected"));
        let coc = step(&v, Condition::CocliqueGuarantee);
        assert_eq!(coc.inputs["size"], "2");
        let kp = step(&v, Condition::KoolenPark);
        assert_eq!(kp.outcome, Outcome::Pass);
        assert_eq!(kp.detail, "at c=2: 3 >= 2 holds");
    }

    #[test]
    fn hamming_2_3_hits_the_equality_boundary() {
        // {4,2;1,2} (the 3x3 rook graph): B = 1 = a1, so connectivity stays
        // unknown and no coclique is guaranteed.
        let a = arr(&[4, 2], &[1, 2]);
        let v = run_nonexistence_chain(&a);
        assert_eq!(v.status, Status::Inconclusive);
        let conn = step(&v, Condition::LocalConnectivity);
        assert!(conn.detail.contains("connectivity unknown"));
        let coc = step(&v, Condition::CocliqueGuarantee);
        assert_eq!(coc.outcome, Outcome::Inapplicable);
        let kp = step(&v, Condition::KoolenPark);
        assert_eq!(kp.outcome, Outcome::Inapplicable);
    }

    #[test]
    fn icosahedron_takes_the_odd_cycle_branch() {
        // {5,2,1;1,2,5}: theta_d = -sqrt5, B = (sqrt5 - 1)/2 < 2 = a1, and
        // the local graph is a pentagon: coclique guarantee floor(5/2) = 2.
        let a = arr(&[5, 2, 1], &[1, 2, 5]);
        let v = run_nonexistence_chain(&a);
        assert_eq!(v.status, Status::Inconclusive);
        let conn = step(&v, Condition::LocalConnectivity);
        assert_eq!(conn.outcome, Outcome::Pass);
        assert!(conn.detail.contains("local graph connected"));
        let coc = step(&v, Condition::CocliqueGuarantee);
        assert_eq!(coc.inputs["size"], "2");
        assert!(coc.detail.contains("odd cycle"));
        // KP at c=2: c2-1 = 1 >= (2*3-5)/1 = 1, tight but holding
        let kp = step(&v, Condition::KoolenPark);
        assert_eq!(kp.outcome, Outcome::Pass);
        assert_eq!(kp.detail, "at c=2: 1 >= 1 holds");
    }

    #[test]
    fn petersen_guarantee_comes_from_empty_local_graph() {
        // {3,2;1,1}: a1 = 0, so every local graph is a 3-vertex coclique.
        let a = arr(&[3, 2], &[1, 1]);
        let v = run_nonexistence_chain(&a);
        assert_eq!(v.status, Status::Inconclusive);
        let conn = step(&v, Condition::LocalConnectivity);
        assert_eq!(conn.outcome, Outcome::Inapplicable);
        let coc = step(&v, Condition::CocliqueGuarantee);
        assert_eq!(coc.inputs["size"], "3");
        // KP at the binding size: rhs never exceeds c2 - 1 = 0
        let kp = step(&v, Condition::KoolenPark);
        assert_eq!(kp.outcome, Outcome::Pass);
    }

    #[test]
    fn complete_graph_array_mostly_inapplicable() {
        let a = arr(&[6], &[1]);
        let v = run_nonexistence_chain(&a);
        assert_eq!(v.status, Status::Inconclusive);
        assert_eq!(
            step(&v, Condition::TerwilligerBound).outcome,
            Outcome::Inapplicable
        );
        assert_eq!(
            step(&v, Condition::CocliqueGuarantee).outcome,
            Outcome::Inapplicable
        );
        assert_eq!(step(&v, Condition::KoolenPark).outcome, Outcome::Inapplicable);
    }

    #[test]
    fn k2_guarantee_is_trivial_but_present() {
        // {1;1} = K_2: a1 = 0, so the "local graph" is a single vertex and
        // the guarantee is b_0 = 1; too small for Koolen-Park.
        let a = arr(&[1], &[1]);
        let v = run_nonexistence_chain(&a);
        assert_eq!(v.status, Status::Inconclusive);
        let coc = step(&v, Condition::CocliqueGuarantee);
        assert_eq!(coc.inputs["size"], "1");
        assert_eq!(step(&v, Condition::KoolenPark).outcome, Outcome::Inapplicable);
    }

    #[test]
    fn heawood_bound_is_zero_and_coclique_is_tight() {
        // {3,2,2;1,1,3}: theta_d = -3 gives B = -2/(-3+1) - 1 = 0, and
        // a1 = 0 makes connectivity inapplicable; the guarantee comes from
        // the edgeless local graph instead.
        let a = arr(&[3, 2, 2], &[1, 1, 3]);
        let v = run_nonexistence_chain(&a);
        assert_eq!(v.status, Status::Inconclusive);
        let tw = step(&v, Condition::TerwilligerBound);
        assert_eq!(tw.inputs["B"], "0");
        let coc = step(&v, Condition::CocliqueGuarantee);
        assert_eq!(coc.inputs["size"], "3");
        let kp = step(&v, Condition::KoolenPark);
        assert_eq!(kp.outcome, Outcome::Pass);
    }

    #[test]
    fn terwilliger_comparison_is_exact_for_irrational_bounds() {
        // icosahedron: B = (sqrt5-1)/2 = 0.618..., strictly between 0 and 1
        let a = arr(&[5, 2, 1], &[1, 2, 5]);
        let dp = derive_parameters(&a);
        let sp = spectrum(&a, &dp).unwrap();
        let b = terwilliger_bound(&a, &dp, &sp).unwrap();
        assert_eq!(b.cmp_i64(0), Ordering::Greater);
        assert_eq!(b.cmp_i64(1), Ordering::Less);
        let width = BigRational::new(BigInt::from(1), BigInt::from(1_000_000_000u64));
        let (lo, hi) = b.enclosure(&width);
        // (sqrt5 - 1)/2 = 0.6180339887...
        let target = BigRational::new(BigInt::from(6180339887u64), BigInt::from(10_000_000_000u64));
        assert!(lo <= target && target <= hi + width);
    }

    #[test]
    fn large_coclique_ranges_are_decided_by_the_candidate_set() {
        // A made-up array with a1 = 0 and a large b_0: the guarantee is all
        // of b_0, and the inequality still holds everywhere.
        let a = arr(&[300, 299], &[1, 1]);
        let dp = derive_parameters(&a);
        let c_star = guaranteed_coclique_size(&a, &dp, ConnStatus::Inapplicable).unwrap();
        assert_eq!(c_star, 300);
        let kp = koolen_park_step(&a, &dp, Some(c_star));
        assert_eq!(kp.outcome, Outcome::Pass);
        // brute-force cross-check over the whole range
        for c in 2..=c_star {
            assert_eq!(koolen_park_test(&a, &dp, c).outcome, Outcome::Pass);
        }
    }
}
