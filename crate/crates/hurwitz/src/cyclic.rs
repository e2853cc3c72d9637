//! Cyclic covers `y^d = (x - z1)^{a1} (x - z2)^{a2} (x - z3)^{a3} (x - z4)^{a4}`.
//!
//! The monodromy tuple is `(γ^{a1}, γ^{a2}, γ^{a3}, γ^{a4})` for a fixed
//! `d`-cycle `γ`; the exponent conditions `Σ a_i ≡ 0 (mod d)` and
//! `gcd(a_1, .., a_4, d) = 1` make the product the identity and the cover
//! connected. All invariants have closed forms in the gcd data
//!
//! ```text
//! d_i = gcd(a_i, d),    s_ij = gcd(a_i + a_j, d),
//! slope = 12 (s12² + s23² + s13²) / (s12² + s23² + s13² + d² - Σ d_i²),
//! L     = d/6 - (Σ d_i²)/(6d) + (s12² + s13² + s23²)/(6d),
//! g     = d + 1 - (Σ d_i)/2.
//! ```
//!
//! The closed forms are computed from the exponents alone, while the generic
//! pipeline works on the permutations; [`CyclicCoverSpec::cross_check`] keeps
//! the two routes honest against each other.

use num_integer::Integer;

use crate::braid::orbit_of;
use crate::covers::MonodromyTuple;
use crate::error::{Error, Result};
use crate::invariants::{orbit_slope, summarize_orbit};
use crate::perm::Permutation;
use crate::rational::{format_rational, integer, ratio, Rational};

/// Degree and exponents of a cyclic cover branched at four points.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct CyclicCoverSpec {
    degree: usize,
    exponents: [usize; 4],
}

impl CyclicCoverSpec {
    pub fn new(degree: usize, exponents: [usize; 4]) -> Result<CyclicCoverSpec> {
        if !(2..=crate::perm::DEGREE_CAP).contains(&degree) {
            return Err(Error::InvalidCyclicSpec(format!(
                "degree {degree} out of range"
            )));
        }
        for &a in &exponents {
            if a == 0 || a >= degree {
                return Err(Error::InvalidCyclicSpec(format!(
                    "exponent {a} outside 1..={}",
                    degree - 1
                )));
            }
        }
        if exponents.iter().sum::<usize>() % degree != 0 {
            return Err(Error::InvalidCyclicSpec(
                "exponent sum is not divisible by the degree".into(),
            ));
        }
        let mut g = degree;
        for &a in &exponents {
            g = g.gcd(&a);
        }
        if g != 1 {
            return Err(Error::InvalidCyclicSpec(
                "exponents and degree share a common factor (cover disconnects)".into(),
            ));
        }
        Ok(CyclicCoverSpec { degree, exponents })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn exponents(&self) -> [usize; 4] {
        self.exponents
    }

    fn gcd_with_degree(&self, i: usize) -> usize {
        self.exponents[i].gcd(&self.degree)
    }

    /// `s_ij = gcd(a_i + a_j, d)`, 0-based indices.
    pub fn pair_gcd(&self, i: usize, j: usize) -> usize {
        (self.exponents[i] + self.exponents[j]).gcd(&self.degree)
    }

    /// The tuple `(γ^{a1}, γ^{a2}, γ^{a3}, γ^{a4})` for the canonical
    /// `d`-cycle `γ`.
    pub fn monodromy_tuple(&self) -> MonodromyTuple {
        let d = self.degree;
        let entries: Vec<Permutation> = self
            .exponents
            .iter()
            .map(|&a| {
                let images: Vec<usize> = (0..d).map(|i| (i + a) % d + 1).collect();
                Permutation::from_images(images).expect("rotation is a bijection")
            })
            .collect();
        let entries: [Permutation; 4] = entries.try_into().expect("four exponents");
        MonodromyTuple::new(entries).expect("spec invariants make the tuple valid")
    }

    /// Slope of the (one-class) Hurwitz component, in closed form.
    pub fn slope(&self) -> Result<Rational> {
        let s_sq = integer(self.squares_of_pair_gcds());
        let d = self.degree as i64;
        let d_sq: i64 = (0..4)
            .map(|i| (self.gcd_with_degree(i) as i64).pow(2))
            .sum();
        let denominator = s_sq.clone() + integer(d * d - d_sq);
        if denominator == integer(0) {
            return Err(Error::ZeroDenominator);
        }
        Ok(integer(12) * s_sq / denominator)
    }

    /// Sum of the non-negative Lyapunov exponents of the Hodge bundle over
    /// the corresponding Teichmüller curve, in closed form.
    pub fn lyapunov_sum(&self) -> Rational {
        let d = self.degree as i64;
        let d_sq: i64 = (0..4)
            .map(|i| (self.gcd_with_degree(i) as i64).pow(2))
            .sum();
        ratio(d, 6) - ratio(d_sq, 6 * d) + ratio(self.squares_of_pair_gcds(), 6 * d)
    }

    /// `s12² + s13² + s23²`.
    fn squares_of_pair_gcds(&self) -> i64 {
        let s12 = self.pair_gcd(0, 1) as i64;
        let s13 = self.pair_gcd(0, 2) as i64;
        let s23 = self.pair_gcd(1, 2) as i64;
        s12 * s12 + s13 * s13 + s23 * s23
    }

    /// Genus `d + 1 - (Σ gcd(a_i, d)) / 2`.
    pub fn genus(&self) -> i64 {
        let gcd_sum: usize = (0..4).map(|i| self.gcd_with_degree(i)).sum();
        debug_assert_eq!(gcd_sum % 2, 0, "gcd sum is even for valid specs");
        self.degree as i64 + 1 - (gcd_sum as i64) / 2
    }

    /// Run the generic pipeline on this spec's tuple and compare every
    /// quantity against the closed forms.
    pub fn cross_check(&self) -> Result<CyclicCrossCheck> {
        let d = self.degree as i64;
        let tuple = self.monodromy_tuple();
        let orbit = orbit_of(&tuple)?;
        let summary = summarize_orbit(&orbit)?;
        let report = orbit_slope(&orbit)?;
        let closed_slope = self.slope()?;
        let closed_lyapunov = self.lyapunov_sum();
        let pipeline_lyapunov = integer(2) * report.deg_lambda.clone();
        // Collisions with p1, p2, p3 see the node permutations γ^{a2+a3},
        // γ^{a2+a4} and γ^{a3+a4}; with Σ a_i ≡ 0 the cycle counts are
        // s23, s13 and s12.
        let expected_delta = [
            ratio((self.pair_gcd(1, 2) as i64).pow(2), d),
            ratio((self.pair_gcd(0, 2) as i64).pow(2), d),
            ratio((self.pair_gcd(0, 1) as i64).pow(2), d),
        ];

        let mut failures = Vec::new();
        if orbit.size() != 1 {
            failures.push(format!("orbit has {} classes instead of 1", orbit.size()));
        }
        if !summary.tail_free {
            failures.push("a degeneration contains a rational tail".into());
        }
        for (k, expected) in expected_delta.iter().enumerate() {
            let (ref delta, ref delta_prime) = summary.delta_by_direction[k];
            if delta != expected || delta_prime != expected {
                failures.push(format!(
                    "direction {}: delta {} / delta' {} differ from {}",
                    k + 1,
                    format_rational(delta),
                    format_rational(delta_prime),
                    format_rational(expected)
                ));
            }
        }
        if report.slope != closed_slope {
            failures.push(format!(
                "pipeline slope {} differs from closed form {}",
                format_rational(&report.slope),
                format_rational(&closed_slope)
            ));
        }
        if pipeline_lyapunov != closed_lyapunov {
            failures.push(format!(
                "2 deg λ = {} differs from closed form {}",
                format_rational(&pipeline_lyapunov),
                format_rational(&closed_lyapunov)
            ));
        }
        if self.genus() != orbit.profile().genus()? {
            failures.push("gcd genus differs from profile genus".into());
        }

        Ok(CyclicCrossCheck {
            spec: *self,
            orbit_size: orbit.size(),
            delta_by_direction: summary.delta_by_direction,
            expected_delta,
            tail_free: summary.tail_free,
            pipeline_slope: report.slope,
            closed_form_slope: closed_slope,
            pipeline_lyapunov,
            closed_form_lyapunov: closed_lyapunov,
            failures,
        })
    }

    /// Every valid spec of a given degree.
    pub fn all_of_degree(degree: usize) -> Vec<CyclicCoverSpec> {
        let mut out = Vec::new();
        if degree < 2 {
            return out;
        }
        for a1 in 1..degree {
            for a2 in 1..degree {
                for a3 in 1..degree {
                    for a4 in 1..degree {
                        if let Ok(spec) = CyclicCoverSpec::new(degree, [a1, a2, a3, a4]) {
                            out.push(spec);
                        }
                    }
                }
            }
        }
        out
    }
}

/// Outcome of playing the closed forms against the generic pipeline.
#[derive(Clone, Debug)]
pub struct CyclicCrossCheck {
    pub spec: CyclicCoverSpec,
    pub orbit_size: usize,
    pub delta_by_direction: [(Rational, Rational); 3],
    pub expected_delta: [Rational; 3],
    pub tail_free: bool,
    pub pipeline_slope: Rational,
    pub closed_form_slope: Rational,
    pub pipeline_lyapunov: Rational,
    pub closed_form_lyapunov: Rational,
    pub failures: Vec<String>,
}

impl CyclicCrossCheck {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Whether a (genus, degree) pair satisfies the bound `d <= 12 (g - 1)`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum DegreeBound {
    Satisfied,
    Violated,
    /// The bound only speaks about genus at least 2.
    NotApplicable,
}

pub fn degree_bound_check(genus: i64, degree: usize) -> DegreeBound {
    if genus < 2 {
        return DegreeBound::NotApplicable;
    }
    if (degree as i64) <= 12 * (genus - 1) {
        DegreeBound::Satisfied
    } else {
        DegreeBound::Violated
    }
}
