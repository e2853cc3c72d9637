//! Serializable report shapes. Every rational is a string `p/q` in lowest
//! terms (`n` when integral); letters and points are 1-based.

use hurwitz::degen::{DegenerationReport, Side};
use hurwitz::invariants::SlopeReport;
use hurwitz::qdiff::{ScanOutcome, StratumScanRow, SvRelation};
use hurwitz::rational::format_rational;
use hurwitz::text::{format_profile, format_tuple};
use hurwitz::Orbit;
use serde::Serialize;

#[derive(Serialize)]
pub struct EnumerateOut {
    pub degree: usize,
    pub profile: String,
    pub genus: Option<i64>,
    pub count: usize,
    pub representatives: Vec<String>,
}

#[derive(Serialize)]
pub struct OrbitOut {
    pub size: usize,
    pub members: Vec<String>,
}

impl OrbitOut {
    pub fn from_orbit(orbit: &Orbit) -> OrbitOut {
        OrbitOut {
            size: orbit.size(),
            members: orbit.members().iter().map(format_tuple).collect(),
        }
    }
}

#[derive(Serialize)]
pub struct OrbitsOut {
    pub degree: usize,
    pub profile: String,
    pub count: Option<usize>,
    pub orbit_count: usize,
    pub orbits: Vec<OrbitOut>,
}

#[derive(Serialize)]
pub struct SlopeOut {
    pub degree: usize,
    pub profile: String,
    pub orbit_size: usize,
    pub delta: String,
    pub delta_prime: String,
    pub deg_delta: String,
    pub deg_lambda: String,
    pub ramification_defect: String,
    pub slope: String,
    pub warnings: Vec<String>,
}

impl SlopeOut {
    pub fn from_report(report: &SlopeReport) -> SlopeOut {
        let mut warnings = Vec::new();
        if report.warnings.genus_below_two {
            warnings.push("genus_below_two".to_string());
        }
        if report.warnings.bridge_chain {
            warnings.push("bridge_chain".to_string());
        }
        SlopeOut {
            degree: report.profile.degree(),
            profile: format_profile(&report.profile),
            orbit_size: report.orbit_size,
            delta: format_rational(&report.delta),
            delta_prime: format_rational(&report.delta_prime),
            deg_delta: format_rational(&report.deg_delta),
            deg_lambda: format_rational(&report.deg_lambda),
            ramification_defect: format_rational(&report.ramification_defect),
            slope: format_rational(&report.slope),
            warnings,
        }
    }
}

#[derive(Serialize)]
pub struct NodeOut {
    pub support: Vec<usize>,
    pub multiplicity: usize,
    pub weight: String,
    pub survives: bool,
}

#[derive(Serialize)]
pub struct ComponentOut {
    pub side: String,
    pub letters: Vec<usize>,
    pub genus: i64,
    pub node_count: usize,
}

#[derive(Serialize)]
pub struct DegenerateOut {
    pub degree: usize,
    pub tuple: String,
    pub direction: usize,
    pub node_permutation: String,
    pub nodes: Vec<NodeOut>,
    pub components: Vec<ComponentOut>,
    pub delta: String,
    pub delta_prime: String,
    pub arithmetic_genus: i64,
    pub warnings: Vec<String>,
}

impl DegenerateOut {
    pub fn from_report(report: &DegenerationReport) -> DegenerateOut {
        let mut warnings = Vec::new();
        if report.warnings.genus_below_two {
            warnings.push("genus_below_two".to_string());
        }
        if report.warnings.bridge_chain {
            warnings.push("bridge_chain".to_string());
        }
        DegenerateOut {
            degree: report.tuple.degree(),
            tuple: format_tuple(&report.tuple),
            direction: report.direction.index(),
            node_permutation: report.node_permutation.to_string(),
            nodes: report
                .nodes
                .iter()
                .map(|n| NodeOut {
                    support: n.support.clone(),
                    multiplicity: n.multiplicity,
                    weight: format_rational(&n.weight()),
                    survives: n.survives,
                })
                .collect(),
            components: report
                .components
                .iter()
                .map(|c| ComponentOut {
                    side: match c.side {
                        Side::A => "A".to_string(),
                        Side::B => "B".to_string(),
                    },
                    letters: c.letters.clone(),
                    genus: c.genus,
                    node_count: c.node_count,
                })
                .collect(),
            delta: format_rational(&report.delta),
            delta_prime: format_rational(&report.delta_prime),
            arithmetic_genus: report.arithmetic_genus,
            warnings,
        }
    }
}

#[derive(Serialize)]
pub struct CyclicCrossCheckOut {
    pub passed: bool,
    pub orbit_size: usize,
    pub delta_by_direction: Vec<(String, String)>,
    pub expected_delta: Vec<String>,
    pub tail_free: bool,
    pub pipeline_slope: String,
    pub closed_form_slope: String,
    pub pipeline_lyapunov_sum: String,
    pub closed_form_lyapunov_sum: String,
    pub failures: Vec<String>,
}

#[derive(Serialize)]
pub struct CyclicOut {
    pub degree: usize,
    pub exponents: [usize; 4],
    pub genus: i64,
    pub slope: String,
    pub lyapunov_sum: String,
    pub degree_bound: String,
    pub cross_check: Option<CyclicCrossCheckOut>,
}

#[derive(Serialize)]
pub struct StratumRowOut {
    pub d: usize,
    pub status: String,
    pub count: Option<usize>,
    pub orbit_count: Option<usize>,
    pub delta: Option<String>,
    pub delta_prime: Option<String>,
    pub slope: Option<String>,
    pub sv_estimate: Option<String>,
    pub sv_first_difference: Option<String>,
    pub lyapunov_estimate: Option<String>,
    pub identity_holds: Option<bool>,
    pub reason: Option<String>,
}

impl StratumRowOut {
    pub fn from_row(row: &StratumScanRow, relation: Option<&SvRelation>) -> StratumRowOut {
        match &row.outcome {
            ScanOutcome::Computed(data) => StratumRowOut {
                d: row.degree,
                status: "computed".to_string(),
                count: Some(data.count),
                orbit_count: Some(data.orbit_count),
                delta: Some(format_rational(&data.delta)),
                delta_prime: Some(format_rational(&data.delta_prime)),
                slope: Some(format_rational(&data.slope)),
                sv_estimate: Some(format_rational(&data.sv_estimate)),
                sv_first_difference: data.sv_first_difference.as_ref().map(format_rational),
                lyapunov_estimate: relation.map(|r| format_rational(&r.lyapunov_estimate)),
                identity_holds: relation.map(|r| r.identity_holds),
                reason: None,
            },
            ScanOutcome::Skipped { reason } => StratumRowOut {
                d: row.degree,
                status: "skipped".to_string(),
                count: None,
                orbit_count: None,
                delta: None,
                delta_prime: None,
                slope: None,
                sv_estimate: None,
                sv_first_difference: None,
                lyapunov_estimate: None,
                identity_holds: None,
                reason: Some(reason.clone()),
            },
            ScanOutcome::Failed { error } => StratumRowOut {
                d: row.degree,
                status: "failed".to_string(),
                count: None,
                orbit_count: None,
                delta: None,
                delta_prime: None,
                slope: None,
                sv_estimate: None,
                sv_first_difference: None,
                lyapunov_estimate: None,
                identity_holds: None,
                reason: Some(error.clone()),
            },
        }
    }

    pub fn csv_line(&self) -> String {
        format!(
            "{},{},{},{},{},{},{}",
            self.d,
            self.count.map(|c| c.to_string()).unwrap_or_default(),
            self.delta.clone().unwrap_or_default(),
            self.slope.clone().unwrap_or_default(),
            self.sv_estimate.clone().unwrap_or_default(),
            self.orbit_count.map(|c| c.to_string()).unwrap_or_default(),
            self.reason.clone().unwrap_or_default().replace(',', ";"),
        )
    }
}

#[derive(Serialize)]
pub struct StratumOut {
    pub nu: Vec<usize>,
    pub genus: usize,
    pub kappa: String,
    pub asymptotic_bound: String,
    pub rows: Vec<StratumRowOut>,
}

#[derive(Serialize)]
pub struct DejonquieresOut {
    pub genus: usize,
    pub zeros: Vec<usize>,
    pub count: String,
}
