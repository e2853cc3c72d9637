//! Orbit-level invariants: δ/δ′ sums over all members and degeneration
//! directions, the boundary and Hodge-bundle degrees, and the slope.
//!
//! For an orbit `O` with profile `c`,
//!
//! ```text
//! deg δ = δ_O,   deg λ = (δ'_O + (d - Σ 1/a_{i,j}) · |O|) / 12,
//! slope = deg δ / deg λ = 12 δ_O / (δ'_O + defect · |O|)
//! ```
//!
//! where the sums run over every member and all three collision directions.
//! The same formulas aggregate over a whole cover set with `|O|` replaced by
//! `N_d(c)`.

use num_traits::Zero;

use crate::braid::{orbit_decompose, Orbit};
use crate::covers::{enumerate_covers_with, EnumerationOptions, RamificationProfile};
use crate::degen::{degenerate, Direction};
use crate::error::{Error, Result};
use crate::rational::{integer, ratio, zero, Rational};

/// Aggregated degeneration data of one orbit.
#[derive(Clone, Debug)]
pub struct OrbitSummary {
    pub delta: Rational,
    pub delta_prime: Rational,
    /// Per-direction sums over the members, indexed by direction 1, 2, 3.
    pub delta_by_direction: [(Rational, Rational); 3],
    /// No node was lost to a rational tail anywhere in the orbit.
    pub tail_free: bool,
    pub genus_below_two: bool,
    pub bridge_chain: bool,
}

/// Walk every member of the orbit through all three degenerations.
pub fn summarize_orbit(orbit: &Orbit) -> Result<OrbitSummary> {
    let mut by_direction = [(zero(), zero()), (zero(), zero()), (zero(), zero())];
    let mut tail_free = true;
    let mut genus_below_two = false;
    let mut bridge_chain = false;
    let expected_genus = orbit.profile().genus()?;
    for member in orbit.members() {
        for direction in Direction::ALL {
            let report = degenerate(member, direction)?;
            if report.arithmetic_genus != expected_genus {
                return Err(Error::Internal(format!(
                    "degeneration genus {} differs from profile genus {}",
                    report.arithmetic_genus, expected_genus
                )));
            }
            tail_free &= report.nodes.iter().all(|n| n.survives);
            genus_below_two |= report.warnings.genus_below_two;
            bridge_chain |= report.warnings.bridge_chain;
            let slot = &mut by_direction[direction.index() - 1];
            slot.0 += report.delta;
            slot.1 += report.delta_prime;
        }
    }
    let delta = by_direction.iter().map(|(d, _)| d.clone()).sum();
    let delta_prime = by_direction.iter().map(|(_, d)| d.clone()).sum();
    Ok(OrbitSummary {
        delta,
        delta_prime,
        delta_by_direction: by_direction,
        tail_free,
        genus_below_two,
        bridge_chain,
    })
}

/// `(δ_O, δ'_O)` for one orbit.
pub fn delta_sums(orbit: &Orbit) -> Result<(Rational, Rational)> {
    let summary = summarize_orbit(orbit)?;
    Ok((summary.delta, summary.delta_prime))
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SlopeWarnings {
    pub genus_below_two: bool,
    pub bridge_chain: bool,
}

/// Exact slope data for one orbit or a whole cover set.
#[derive(Clone, Debug)]
pub struct SlopeReport {
    pub profile: RamificationProfile,
    /// `|O|` for an orbit, `N_d(c)` for a whole space.
    pub orbit_size: usize,
    pub delta: Rational,
    pub delta_prime: Rational,
    pub deg_delta: Rational,
    pub deg_lambda: Rational,
    pub ramification_defect: Rational,
    pub slope: Rational,
    pub warnings: SlopeWarnings,
}

fn slope_from_sums(
    profile: &RamificationProfile,
    size: usize,
    delta: Rational,
    delta_prime: Rational,
    warnings: SlopeWarnings,
) -> Result<SlopeReport> {
    let defect = profile.ramification_defect();
    let deg_delta = delta.clone();
    let deg_lambda = (delta_prime.clone() + defect.clone() * integer(size as i64)) * ratio(1, 12);
    if deg_lambda.is_zero() {
        return Err(Error::ZeroDenominator);
    }
    let slope = deg_delta.clone() / deg_lambda.clone();
    Ok(SlopeReport {
        profile: profile.clone(),
        orbit_size: size,
        delta,
        delta_prime,
        deg_delta,
        deg_lambda,
        ramification_defect: defect,
        slope,
        warnings,
    })
}

/// Slope of the component corresponding to one orbit.
pub fn orbit_slope(orbit: &Orbit) -> Result<SlopeReport> {
    // The defect comes from the profile; every member must realize it.
    for member in orbit.members() {
        if !member.matches_profile(orbit.profile()) {
            return Err(Error::Internal(
                "orbit member does not match the orbit profile".into(),
            ));
        }
    }
    let summary = summarize_orbit(orbit)?;
    slope_from_sums(
        orbit.profile(),
        orbit.size(),
        summary.delta,
        summary.delta_prime,
        SlopeWarnings {
            genus_below_two: summary.genus_below_two,
            bridge_chain: summary.bridge_chain,
        },
    )
}

/// Slope of the whole space, aggregating the given orbits.
pub fn space_slope_from_orbits(
    profile: &RamificationProfile,
    orbits: &[Orbit],
) -> Result<SlopeReport> {
    if orbits.is_empty() {
        return Err(Error::EmptyCoverSet);
    }
    let mut delta = zero();
    let mut delta_prime = zero();
    let mut size = 0usize;
    let mut warnings = SlopeWarnings::default();
    for orbit in orbits {
        let summary = summarize_orbit(orbit)?;
        delta += summary.delta;
        delta_prime += summary.delta_prime;
        size += orbit.size();
        warnings.genus_below_two |= summary.genus_below_two;
        warnings.bridge_chain |= summary.bridge_chain;
    }
    slope_from_sums(profile, size, delta, delta_prime, warnings)
}

/// Enumerate, decompose and aggregate a profile in one call.
pub fn space_slope(profile: &RamificationProfile) -> Result<SlopeReport> {
    space_slope_with(profile, &EnumerationOptions::default())
}

pub fn space_slope_with(
    profile: &RamificationProfile,
    options: &EnumerationOptions,
) -> Result<SlopeReport> {
    let covers = enumerate_covers_with(profile, options)?;
    if covers.is_empty() {
        return Err(Error::EmptyCoverSet);
    }
    let orbits = orbit_decompose(&covers)?;
    space_slope_from_orbits(profile, &orbits)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::orbit_of;
    use crate::rational::format_rational;
    use crate::text::{parse_monodromy_tuple, parse_profile};

    #[test]
    fn degree_four_orbit_slope() {
        let seed = parse_monodromy_tuple("(1 2 3 4);(1 4 3 2);(1 2 3);(1 3 2)", 4).unwrap();
        let orbit = orbit_of(&seed).unwrap();
        let (delta, delta_prime) = delta_sums(&orbit).unwrap();
        assert_eq!(delta, integer(23));
        assert_eq!(delta_prime, integer(25));
        let report = orbit_slope(&orbit).unwrap();
        assert_eq!(report.ramification_defect, ratio(5, 6));
        assert_eq!(report.deg_lambda, ratio(5, 2));
        assert_eq!(report.deg_delta, integer(23));
        assert_eq!(format_rational(&report.slope), "46/5");
    }

    #[test]
    fn odd_degree_inverse_pair_slope_family() {
        for d in [3i64, 5, 7] {
            let gamma: Vec<usize> = (1..=d as usize).collect();
            let g = crate::perm::Permutation::from_cycles(d as usize, &[gamma]).unwrap();
            let r = crate::covers::MonodromyTuple::new([
                g.clone(),
                g.inverse(),
                g.clone(),
                g.inverse(),
            ])
            .unwrap();
            let orbit = orbit_of(&r).unwrap();
            assert_eq!(orbit.size(), 1);
            let (delta, delta_prime) = delta_sums(&orbit).unwrap();
            assert_eq!(delta, ratio(2 * d * d + 1, d));
            assert_eq!(delta_prime, ratio(2 * d * d + 1, d));
            let report = orbit_slope(&orbit).unwrap();
            assert_eq!(report.slope, ratio(8 * d * d + 4, d * d - 1));
        }
    }

    #[test]
    fn elliptic_double_cover_slope_is_twelve() {
        let profile = parse_profile("2|2|2|2", 2).unwrap();
        let report = space_slope(&profile).unwrap();
        assert_eq!(report.orbit_size, 1);
        assert_eq!(report.delta, integer(6));
        assert_eq!(report.delta_prime, integer(6));
        assert!(report.ramification_defect.is_zero());
        assert_eq!(report.slope, integer(12));
        assert!(report.warnings.genus_below_two);
        // A single-orbit space aggregates to exactly the orbit report.
        let seed = parse_monodromy_tuple("(1 2);(1 2);(1 2);(1 2)", 2).unwrap();
        let orbit = orbit_of(&seed).unwrap();
        let orbit_report = orbit_slope(&orbit).unwrap();
        assert_eq!(orbit_report.slope, report.slope);
        assert_eq!(orbit_report.deg_lambda, report.deg_lambda);
        assert_eq!(orbit_report.orbit_size, report.orbit_size);
    }

    #[test]
    fn defect_is_nonnegative_for_positive_genus() {
        for (text, degree) in [
            ("4|4|3,1|3,1", 4usize),
            ("3|3|3|3", 3),
            ("2|2|2|2", 2),
            ("5|5|5|5", 5),
        ] {
            let profile = parse_profile(text, degree).unwrap();
            assert!(profile.genus().unwrap() >= 1);
            assert!(!std::matches!(
                profile.ramification_defect().numer().sign(),
                num_bigint::Sign::Minus
            ));
        }
    }

    #[test]
    fn slope_bounded_by_twelve_when_no_tails() {
        let seed = parse_monodromy_tuple("(1 2 3);(1 3 2);(1 2 3);(1 3 2)", 3).unwrap();
        let report = orbit_slope(&orbit_of(&seed).unwrap()).unwrap();
        assert_eq!(report.delta, report.delta_prime);
        assert!(report.slope <= integer(12));
        assert!(report.slope > zero());
    }
}
