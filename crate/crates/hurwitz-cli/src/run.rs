use hurwitz::cyclic::DegreeBound;
use hurwitz::qdiff::{ScanOptions, ScanOutcome};
use hurwitz::rational::format_rational;
use hurwitz::text::{format_profile, format_tuple, parse_monodromy_tuple, parse_profile};
use hurwitz::{
    de_jonquieres_count, degenerate, enumerate_covers_with, orbit_decompose, orbit_of, orbit_slope,
    space_slope_from_orbits, stratum_scan, sv_lyapunov_relation, CyclicCoverSpec, Direction,
    EnumerationOptions, OddPartition,
};

use crate::output::*;
use crate::{Command, OutputFormat};

pub enum CliError {
    /// Invalid mathematical input or a computation refused by the library.
    Domain(String),
    /// The command line itself is inconsistent.
    Usage(String),
}

impl From<hurwitz::Error> for CliError {
    fn from(e: hurwitz::Error) -> CliError {
        CliError::Domain(e.to_string())
    }
}

type CliResult = Result<String, CliError>;

pub fn run(command: Command) -> CliResult {
    match command {
        Command::Enumerate {
            degree,
            profile,
            output,
            parallel,
            budget,
        } => with_pool(parallel, || {
            enumerate_cmd(degree, &profile, output, parallel.is_some(), budget)
        }),
        Command::Orbits {
            degree,
            profile,
            seed,
            output,
            parallel,
            budget,
        } => with_pool(parallel, || {
            orbits_cmd(
                degree,
                &profile,
                seed.as_deref(),
                output,
                parallel.is_some(),
                budget,
            )
        }),
        Command::Slope {
            degree,
            profile,
            tuple,
            output,
            parallel,
            budget,
        } => with_pool(parallel, || {
            slope_cmd(
                degree,
                &profile,
                tuple.as_deref(),
                output,
                parallel.is_some(),
                budget,
            )
        }),
        Command::Degenerate {
            degree,
            tuple,
            direction,
            output,
        } => degenerate_cmd(degree, &tuple, direction, output),
        Command::Cyclic {
            d,
            exponents,
            cross_check,
            output,
        } => cyclic_cmd(d, &exponents, cross_check, output),
        Command::Stratum {
            nu,
            d_values,
            budget,
            parallel,
            output,
        } => with_pool(parallel, || {
            stratum_cmd(&nu, &d_values, budget, parallel.is_some(), output)
        }),
        Command::Dejonquieres {
            genus,
            zeros,
            output,
        } => dejonquieres_cmd(genus, &zeros, output),
    }
}

/// Run inside a rayon pool of the requested width, so `--parallel N` bounds
/// the thread count; without the flag everything stays sequential.
fn with_pool(parallel: Option<usize>, body: impl FnOnce() -> CliResult + Send) -> CliResult {
    match parallel {
        None => body(),
        Some(0) => Err(CliError::Usage(
            "--parallel needs at least one thread".into(),
        )),
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| CliError::Domain(e.to_string()))?
            .install(body),
    }
}

fn to_json<T: serde::Serialize>(value: &T) -> CliResult {
    serde_json::to_string_pretty(value).map_err(|e| CliError::Domain(e.to_string()))
}

fn reject_csv(output: OutputFormat, command: &str) -> Result<(), CliError> {
    if output == OutputFormat::Csv {
        return Err(CliError::Usage(format!(
            "csv output is only available for `stratum`, not `{command}`"
        )));
    }
    Ok(())
}

fn parse_usize_list(input: &str, what: &str) -> Result<Vec<usize>, CliError> {
    input
        .split(',')
        .map(|piece| {
            piece
                .trim()
                .parse::<usize>()
                .map_err(|_| CliError::Domain(format!("invalid {what} entry `{piece}`")))
        })
        .collect()
}

fn enumerate_cmd(
    degree: usize,
    profile_text: &str,
    output: OutputFormat,
    parallel: bool,
    budget: Option<u64>,
) -> CliResult {
    reject_csv(output, "enumerate")?;
    let profile = parse_profile(profile_text, degree)?;
    let covers = enumerate_covers_with(
        &profile,
        &EnumerationOptions {
            parallel,
            pair_budget: budget,
        },
    )?;
    let out = EnumerateOut {
        degree,
        profile: format_profile(&profile),
        genus: profile.genus().ok(),
        count: covers.count(),
        representatives: covers.representatives().iter().map(format_tuple).collect(),
    };
    match output {
        OutputFormat::Json => to_json(&out),
        _ => {
            let mut text = format!("N_{}({}) = {}\n", out.degree, out.profile, out.count);
            for rep in &out.representatives {
                text.push_str(rep);
                text.push('\n');
            }
            Ok(text.trim_end().to_string())
        }
    }
}

fn orbits_cmd(
    degree: usize,
    profile_text: &str,
    seed: Option<&str>,
    output: OutputFormat,
    parallel: bool,
    budget: Option<u64>,
) -> CliResult {
    reject_csv(output, "orbits")?;
    let profile = parse_profile(profile_text, degree)?;
    let (count, orbits) = match seed {
        Some(seed_text) => {
            let tuple = parse_monodromy_tuple(seed_text, degree)?;
            if !tuple.matches_profile(&profile) {
                return Err(CliError::Domain(
                    "seed tuple does not realize the given profile".into(),
                ));
            }
            (None, vec![orbit_of(&tuple)?])
        }
        None => {
            let covers = enumerate_covers_with(
                &profile,
                &EnumerationOptions {
                    parallel,
                    pair_budget: budget,
                },
            )?;
            let orbits = orbit_decompose(&covers)?;
            (Some(covers.count()), orbits)
        }
    };
    let out = OrbitsOut {
        degree,
        profile: format_profile(&profile),
        count,
        orbit_count: orbits.len(),
        orbits: orbits.iter().map(OrbitOut::from_orbit).collect(),
    };
    match output {
        OutputFormat::Json => to_json(&out),
        _ => {
            let mut text = format!("{} orbit(s)\n", out.orbit_count);
            for (i, orbit) in out.orbits.iter().enumerate() {
                text.push_str(&format!("orbit {} (size {}):\n", i + 1, orbit.size));
                for member in &orbit.members {
                    text.push_str(&format!("  {member}\n"));
                }
            }
            Ok(text.trim_end().to_string())
        }
    }
}

fn slope_cmd(
    degree: usize,
    profile_text: &str,
    tuple: Option<&str>,
    output: OutputFormat,
    parallel: bool,
    budget: Option<u64>,
) -> CliResult {
    reject_csv(output, "slope")?;
    let profile = parse_profile(profile_text, degree)?;
    let report = match tuple {
        Some(tuple_text) => {
            let tuple = parse_monodromy_tuple(tuple_text, degree)?;
            if !tuple.matches_profile(&profile) {
                return Err(CliError::Domain(
                    "tuple does not realize the given profile".into(),
                ));
            }
            orbit_slope(&orbit_of(&tuple)?)?
        }
        None => {
            let covers = enumerate_covers_with(
                &profile,
                &EnumerationOptions {
                    parallel,
                    pair_budget: budget,
                },
            )?;
            if covers.is_empty() {
                return Err(CliError::Domain("cover set is empty".into()));
            }
            let orbits = orbit_decompose(&covers)?;
            space_slope_from_orbits(&profile, &orbits)?
        }
    };
    let out = SlopeOut::from_report(&report);
    match output {
        OutputFormat::Json => to_json(&out),
        _ => Ok(format!(
            "orbit_size {}\ndelta {}\ndelta' {}\ndeg_delta {}\ndeg_lambda {}\nslope {}",
            out.orbit_size, out.delta, out.delta_prime, out.deg_delta, out.deg_lambda, out.slope
        )),
    }
}

fn degenerate_cmd(
    degree: usize,
    tuple_text: &str,
    direction: u8,
    output: OutputFormat,
) -> CliResult {
    reject_csv(output, "degenerate")?;
    let tuple = parse_monodromy_tuple(tuple_text, degree)?;
    let direction = Direction::from_index(direction as usize)?;
    let report = degenerate(&tuple, direction)?;
    let out = DegenerateOut::from_report(&report);
    match output {
        OutputFormat::Json => to_json(&out),
        _ => {
            let mut text = format!(
                "direction {} node_permutation {}\n",
                out.direction, out.node_permutation
            );
            for node in &out.nodes {
                text.push_str(&format!(
                    "node {:?} multiplicity {} weight {} survives {}\n",
                    node.support, node.multiplicity, node.weight, node.survives
                ));
            }
            for comp in &out.components {
                text.push_str(&format!(
                    "component {} {:?} genus {} nodes {}\n",
                    comp.side, comp.letters, comp.genus, comp.node_count
                ));
            }
            text.push_str(&format!(
                "delta {} delta' {} arithmetic_genus {}",
                out.delta, out.delta_prime, out.arithmetic_genus
            ));
            Ok(text)
        }
    }
}

fn cyclic_cmd(
    d: usize,
    exponents_text: &str,
    cross_check: bool,
    output: OutputFormat,
) -> CliResult {
    reject_csv(output, "cyclic")?;
    let exponents = parse_usize_list(exponents_text, "exponent")?;
    let exponents: [usize; 4] = exponents
        .try_into()
        .map_err(|_| CliError::Domain("expected exactly four exponents".into()))?;
    let spec = CyclicCoverSpec::new(d, exponents)?;
    let check = if cross_check {
        Some(spec.cross_check()?)
    } else {
        None
    };
    let genus = spec.genus();
    let out = CyclicOut {
        degree: d,
        exponents,
        genus,
        slope: format_rational(&spec.slope()?),
        lyapunov_sum: format_rational(&spec.lyapunov_sum()),
        degree_bound: match hurwitz::degree_bound_check(genus, d) {
            DegreeBound::Satisfied => "satisfied".to_string(),
            DegreeBound::Violated => "violated".to_string(),
            DegreeBound::NotApplicable => "not_applicable".to_string(),
        },
        cross_check: check.map(|c| CyclicCrossCheckOut {
            passed: c.passed(),
            orbit_size: c.orbit_size,
            delta_by_direction: c
                .delta_by_direction
                .iter()
                .map(|(a, b)| (format_rational(a), format_rational(b)))
                .collect(),
            expected_delta: c.expected_delta.iter().map(format_rational).collect(),
            tail_free: c.tail_free,
            pipeline_slope: format_rational(&c.pipeline_slope),
            closed_form_slope: format_rational(&c.closed_form_slope),
            pipeline_lyapunov_sum: format_rational(&c.pipeline_lyapunov),
            closed_form_lyapunov_sum: format_rational(&c.closed_form_lyapunov),
            failures: c.failures,
        }),
    };
    match output {
        OutputFormat::Json => to_json(&out),
        _ => Ok(format!(
            "genus {}\nslope {}\nlyapunov_sum {}\ndegree_bound {}{}",
            out.genus,
            out.slope,
            out.lyapunov_sum,
            out.degree_bound,
            match &out.cross_check {
                Some(c) if c.passed => "\ncross_check pass".to_string(),
                Some(c) => format!("\ncross_check FAIL: {:?}", c.failures),
                None => String::new(),
            }
        )),
    }
}

fn stratum_cmd(
    nu_text: &str,
    d_values_text: &str,
    budget: Option<u64>,
    parallel: bool,
    output: OutputFormat,
) -> CliResult {
    let nu = OddPartition::new(parse_usize_list(nu_text, "partition")?)?;
    let degrees = parse_usize_list(d_values_text, "degree")?;
    let mut options = ScanOptions {
        parallel,
        ..ScanOptions::default()
    };
    if let Some(b) = budget {
        options.pair_budget = b;
    }
    let rows = stratum_scan(&nu, &degrees, &options);
    let row_outs: Vec<StratumRowOut> = rows
        .iter()
        .map(|row| {
            let relation = match &row.outcome {
                ScanOutcome::Computed(data) => Some(sv_lyapunov_relation(&nu, data)),
                _ => None,
            };
            StratumRowOut::from_row(row, relation.as_ref())
        })
        .collect();
    let out = StratumOut {
        nu: nu.parts().to_vec(),
        genus: nu.genus(),
        kappa: format_rational(&nu.kappa()),
        asymptotic_bound: format_rational(&nu.asymptotic_bound()),
        rows: row_outs,
    };
    match output {
        OutputFormat::Json => to_json(&out),
        OutputFormat::Csv => {
            let mut text = String::from("d,N,delta,slope,sv_estimate,orbit_count,skipped_reason\n");
            for row in &out.rows {
                text.push_str(&row.csv_line());
                text.push('\n');
            }
            Ok(text.trim_end().to_string())
        }
        OutputFormat::Text => {
            let mut text = format!(
                "nu {:?} genus {} kappa {} asymptotic_bound {}\n",
                out.nu, out.genus, out.kappa, out.asymptotic_bound
            );
            for row in &out.rows {
                match row.status.as_str() {
                    "computed" => text.push_str(&format!(
                        "d={} N={} delta={} slope={} sv={} orbits={}\n",
                        row.d,
                        row.count.unwrap_or_default(),
                        row.delta.clone().unwrap_or_default(),
                        row.slope.clone().unwrap_or_default(),
                        row.sv_estimate.clone().unwrap_or_default(),
                        row.orbit_count.unwrap_or_default(),
                    )),
                    status => text.push_str(&format!(
                        "d={} {status}: {}\n",
                        row.d,
                        row.reason.clone().unwrap_or_default()
                    )),
                }
            }
            Ok(text.trim_end().to_string())
        }
    }
}

fn dejonquieres_cmd(genus: usize, zeros_text: &str, output: OutputFormat) -> CliResult {
    reject_csv(output, "dejonquieres")?;
    let zeros = parse_usize_list(zeros_text, "zero order")?;
    let count = de_jonquieres_count(genus, &zeros)?;
    let out = DejonquieresOut {
        genus,
        zeros,
        count: count.to_string(),
    };
    match output {
        OutputFormat::Json => to_json(&out),
        _ => Ok(out.count),
    }
}
