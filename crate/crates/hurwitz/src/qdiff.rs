//! Pillowcase-style strata of quadratic differentials with odd zero orders.
//!
//! A partition `ν = (d_1, .., d_l)` of `4g - 4` into odd parts labels a
//! stratum. Covers of the pillowcase realizing it have ramification
//! `(d_1 + 2, .., d_l + 2, 2, .., 2)` over one corner and `(2, .., 2)` over
//! the other three, for any feasible even degree. Degree scans through such
//! profiles produce the class counts `N_{d,ν}`, the boundary sums `δ_{d,ν}`,
//! slopes, and the finite-degree Siegel–Veech estimates `δ_{d,ν} / (6 N_{d,ν})`
//! (one factor 3 for the three collision directions, one factor 2 for the
//! pillowcase double cover). The constant
//!
//! ```text
//! κ_ν = (1/24) Σ d_i (d_i + 4) / (d_i + 2)
//! ```
//!
//! ties them together: every computed row satisfies the exact identity
//! `slope = 12 c / (κ_ν + c)` with `c` the Siegel–Veech estimate.

use num_bigint::BigUint;
use num_traits::One;

use crate::braid::orbit_decompose;
use crate::covers::{enumerate_covers_with, EnumerationOptions, RamificationProfile};
use crate::error::{Error, Result};
use crate::invariants::{space_slope_from_orbits, summarize_orbit};
use crate::perm::CycleType;
use crate::rational::{integer, ratio, zero, Rational};

/// A partition of `4g - 4` into odd parts, labelling a stratum.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OddPartition {
    /// Weakly decreasing odd parts.
    parts: Vec<usize>,
}

impl OddPartition {
    pub fn new(parts: Vec<usize>) -> Result<OddPartition> {
        if parts.is_empty() {
            return Err(Error::InvalidOddPartition("no parts".into()));
        }
        if let Some(&bad) = parts.iter().find(|&&p| p == 0 || p % 2 == 0) {
            return Err(Error::InvalidOddPartition(format!(
                "part {bad} is not a positive odd number"
            )));
        }
        let sum: usize = parts.iter().sum();
        if !sum.is_multiple_of(4) {
            return Err(Error::InvalidOddPartition(format!(
                "parts sum to {sum}, which is not 0 mod 4"
            )));
        }
        if !parts.len().is_multiple_of(2) {
            return Err(Error::InvalidOddPartition(
                "the number of parts must be even".into(),
            ));
        }
        let mut parts = parts;
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(OddPartition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Genus from `Σ d_i = 4g - 4`.
    pub fn genus(&self) -> usize {
        (self.parts.iter().sum::<usize>() + 4) / 4
    }

    /// Smallest feasible cover degree: `Σ (d_i + 2)`, always even.
    pub fn min_degree(&self) -> usize {
        self.parts.iter().map(|&p| p + 2).sum()
    }

    /// The pillowcase ramification profile of degree `d`: zeros of order
    /// `d_i` become `(d_i + 2)`-fold branching over the first corner, padded
    /// with double points; the other corners are simple square folds.
    pub fn stratum_profile(&self, degree: usize) -> Result<RamificationProfile> {
        let min = self.min_degree();
        if !degree.is_multiple_of(2) || degree < min {
            return Err(Error::InfeasibleDegree { degree, min });
        }
        let mut first: Vec<usize> = self.parts.iter().map(|&p| p + 2).collect();
        first.extend(std::iter::repeat_n(2, (degree - min) / 2));
        let doubles = CycleType::new(vec![2; degree / 2])?;
        let profile = RamificationProfile::new([
            CycleType::new(first)?,
            doubles.clone(),
            doubles.clone(),
            doubles,
        ])?;
        let genus = profile.genus()?;
        if genus != self.genus() as i64 {
            return Err(Error::Internal(format!(
                "stratum profile genus {genus} differs from partition genus {}",
                self.genus()
            )));
        }
        Ok(profile)
    }

    /// `κ_ν = (1/24) Σ d_i (d_i + 4) / (d_i + 2)`.
    pub fn kappa(&self) -> Rational {
        let mut sum = zero();
        for &p in &self.parts {
            let p = p as i64;
            sum += ratio(p * (p + 4), p + 2);
        }
        sum * ratio(1, 24)
    }

    /// The limit slope under a unit Siegel–Veech constant:
    /// `12 / (1 + κ_ν) = 288 / (24 + Σ d_i (d_i + 4) / (d_i + 2))`.
    pub fn asymptotic_bound(&self) -> Rational {
        integer(12) / (integer(1) + self.kappa())
    }
}

#[derive(Clone, Debug)]
pub struct ScanOptions {
    /// Skip rows whose candidate-pair estimate exceeds this.
    pub pair_budget: u64,
    pub parallel: bool,
}

impl Default for ScanOptions {
    fn default() -> Self {
        ScanOptions {
            pair_budget: 10_000_000,
            parallel: false,
        }
    }
}

/// Fully computed data of one scan degree.
#[derive(Clone, Debug)]
pub struct StratumData {
    /// `N_{d,ν}`: number of classes.
    pub count: usize,
    pub orbit_count: usize,
    /// `δ_{d,ν}`: boundary sum over all orbits.
    pub delta: Rational,
    pub delta_prime: Rational,
    pub slope: Rational,
    /// `δ_{d,ν} / (6 N_{d,ν})`.
    pub sv_estimate: Rational,
    /// Difference to the previous computed row's estimate, for eyeballing
    /// stabilization; no limit is ever extrapolated.
    pub sv_first_difference: Option<Rational>,
    /// No degeneration anywhere in the row lost a node to a rational tail.
    pub tail_free: bool,
    /// The slope identity `slope = 12 / (1 + 6 κ_ν N / δ)` holds exactly.
    pub slope_identity_ok: bool,
}

#[derive(Clone, Debug)]
pub enum ScanOutcome {
    Computed(Box<StratumData>),
    Skipped { reason: String },
    Failed { error: String },
}

#[derive(Clone, Debug)]
pub struct StratumScanRow {
    pub degree: usize,
    pub outcome: ScanOutcome,
}

/// Run the full pipeline for each requested degree. Rows that exceed the
/// budget are skipped, rows that fail are reported, and the scan continues
/// either way.
pub fn stratum_scan(
    nu: &OddPartition,
    degrees: &[usize],
    options: &ScanOptions,
) -> Vec<StratumScanRow> {
    let mut rows = Vec::with_capacity(degrees.len());
    let mut previous_sv: Option<Rational> = None;
    for &degree in degrees {
        let outcome = match scan_degree(nu, degree, options, &previous_sv) {
            Ok(ScanStep::Computed(data)) => {
                previous_sv = Some(data.sv_estimate.clone());
                ScanOutcome::Computed(data)
            }
            Ok(ScanStep::Skipped(reason)) => ScanOutcome::Skipped { reason },
            Err(e) => ScanOutcome::Failed {
                error: e.to_string(),
            },
        };
        rows.push(StratumScanRow { degree, outcome });
    }
    rows
}

enum ScanStep {
    Computed(Box<StratumData>),
    Skipped(String),
}

fn scan_degree(
    nu: &OddPartition,
    degree: usize,
    options: &ScanOptions,
    previous_sv: &Option<Rational>,
) -> Result<ScanStep> {
    let profile = nu.stratum_profile(degree)?;
    let pairs = profile.class(1).class_size() * profile.class(2).class_size();
    if pairs > BigUint::from(options.pair_budget) {
        return Ok(ScanStep::Skipped(format!(
            "estimated {pairs} candidate pairs exceeds budget {}",
            options.pair_budget
        )));
    }
    let covers = enumerate_covers_with(
        &profile,
        &EnumerationOptions {
            parallel: options.parallel,
            pair_budget: None,
        },
    )?;
    if covers.is_empty() {
        return Err(Error::EmptyCoverSet);
    }
    let orbits = orbit_decompose(&covers)?;
    let mut tail_free = true;
    for orbit in &orbits {
        let summary = summarize_orbit(orbit)?;
        tail_free &= summary.tail_free;
        if summary.delta != summary.delta_prime {
            return Err(Error::Internal(
                "delta and delta' differ on a tail-free stratum orbit".into(),
            ));
        }
    }
    let report = space_slope_from_orbits(&profile, &orbits)?;
    if !tail_free {
        return Err(Error::Internal(
            "a stratum degeneration produced a rational tail".into(),
        ));
    }
    let count = covers.count();
    let sv_estimate = report.delta.clone() / integer(6 * count as i64);
    // slope = 12 / (1 + 6 κ N / δ), equivalent to the defect identity
    // defect = 6 κ_ν for pillowcase profiles.
    let identity_rhs = integer(12)
        / (integer(1) + integer(6) * nu.kappa() * integer(count as i64) / report.delta.clone());
    let data = StratumData {
        count,
        orbit_count: orbits.len(),
        delta: report.delta.clone(),
        delta_prime: report.delta_prime.clone(),
        slope: report.slope.clone(),
        sv_estimate: sv_estimate.clone(),
        sv_first_difference: previous_sv
            .as_ref()
            .map(|prev| sv_estimate.clone() - prev.clone()),
        tail_free,
        slope_identity_ok: report.slope == identity_rhs,
    };
    Ok(ScanStep::Computed(Box::new(data)))
}

/// The finite-degree form of the slope / Siegel–Veech / Lyapunov relation.
#[derive(Clone, Debug)]
pub struct SvRelation {
    pub kappa: Rational,
    /// The finite-degree stand-in for the Siegel–Veech constant.
    pub sv_estimate: Rational,
    /// `κ_ν + c`, the finite-degree stand-in for the Lyapunov sum.
    pub lyapunov_estimate: Rational,
    pub slope: Rational,
    /// `slope == 12 c / (κ_ν + c)`, exactly.
    pub identity_holds: bool,
}

pub fn sv_lyapunov_relation(nu: &OddPartition, data: &StratumData) -> SvRelation {
    let kappa = nu.kappa();
    let c = data.sv_estimate.clone();
    let lyapunov_estimate = kappa.clone() + c.clone();
    let identity_holds = data.slope.clone() * lyapunov_estimate.clone() == integer(12) * c.clone();
    SvRelation {
        kappa,
        sv_estimate: c,
        lyapunov_estimate,
        slope: data.slope.clone(),
        identity_holds,
    }
}

/// Virtual count of quadratic differentials on a general genus-`g` curve
/// with prescribed zero multiplicities: the coefficient of `Π t_i^{h_i}` in
/// `(1 + Σ a_i² t_i)^g`, which is
/// `g! / (h_1! .. h_m! (g - Σ h_i)!) · Π a_i^{2 h_i}`.
pub fn de_jonquieres_count(genus: usize, zeros: &[usize]) -> Result<BigUint> {
    if zeros.is_empty() || zeros.contains(&0) {
        return Err(Error::InvalidZeroProfile(
            "zero orders must be positive".into(),
        ));
    }
    let total: usize = zeros.iter().sum();
    if genus < 2 || total != 4 * genus - 4 {
        return Err(Error::InvalidZeroProfile(format!(
            "zero orders sum to {total}, expected 4g - 4 = {}",
            4 * genus as i64 - 4
        )));
    }
    let mut sorted = zeros.to_vec();
    sorted.sort_unstable();
    let mut distinct: Vec<(usize, usize)> = Vec::new();
    for z in sorted {
        match distinct.last_mut() {
            Some((v, h)) if *v == z => *h += 1,
            _ => distinct.push((z, 1)),
        }
    }
    let zero_count: usize = distinct.iter().map(|&(_, h)| h).sum();
    if zero_count > genus {
        return Err(Error::InvalidZeroProfile(format!(
            "{zero_count} zeros exceed the genus {genus}"
        )));
    }
    let mut result = factorial(genus);
    for &(_, h) in &distinct {
        result /= factorial(h);
    }
    result /= factorial(genus - zero_count);
    for &(a, h) in &distinct {
        for _ in 0..2 * h {
            result *= BigUint::from(a);
        }
    }
    Ok(result)
}

fn factorial(n: usize) -> BigUint {
    let mut f = BigUint::one();
    for k in 2..=n {
        f *= BigUint::from(k);
    }
    f
}
