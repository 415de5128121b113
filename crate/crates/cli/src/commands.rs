use clap::ValueEnum;
use serde::{Deserialize, Serialize};

use rdp_core::dickson::{
    derivative_sequence, eval_fast, eval_functional, explicit_coefficients, explicit_to_poly,
    sequence,
};
use rdp_core::permcheck::{analyze as analyze_map, rdp_map, AnalyzeOptions};
use rdp_core::{Kind, PermReport, RdpSpec, Residue, ResidueRing};

use crate::args::{AnalyzeArgs, EvalArgs, PointArg, Route, Suite, TableArgs, VerifyArgs};
use crate::envelope::{params, ReportEnvelope};
use crate::suites::{self, SuiteReport};
use crate::{CliError, Outcome, Status};

fn ring(m: u64) -> Result<ResidueRing, CliError> {
    Ok(ResidueRing::new(m)?)
}

/// Normalizes `num/den` into `Z_m`; negative inputs wrap around.
pub fn point(ring: &ResidueRing, p: PointArg) -> Result<Residue, CliError> {
    let den = ring.inv(ring.reduce(p.den))?;
    Ok(ring.mul(ring.reduce(p.num), den))
}

fn join(values: impl IntoIterator<Item = Residue>) -> String {
    values
        .into_iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn kind_label(kind: Kind) -> String {
    match kind.k() {
        0 => "D".into(),
        1 => "E".into(),
        k => k.to_string(),
    }
}

pub fn eval(args: &EvalArgs) -> Result<Outcome, CliError> {
    let ring = ring(args.modulus)?;
    let a = point(&ring, args.a)?;
    let spec = RdpSpec::new(args.n, args.kind.0, ring.clone()).with_a(a);
    let xs: Vec<Residue> = match args.x {
        Some(x) => vec![point(&ring, x)?],
        None => ring.elements().collect(),
    };
    let values: Vec<Residue> = match args.route {
        Route::Recurrence => xs.iter().map(|&x| eval_fast(&spec, x)).collect(),
        Route::Explicit => {
            let poly = explicit_to_poly(
                &explicit_coefficients(args.n, args.kind.0),
                args.n,
                a,
                &ring,
            );
            xs.iter().map(|&x| poly.eval(x)).collect()
        }
        Route::Functional => xs
            .iter()
            .map(|&x| eval_functional(&spec, x))
            .collect::<rdp_core::Result<_>>()?,
    };
    Ok(Outcome {
        stdout: format!("{}\n", join(values)),
        status: Status::Pass,
    })
}

/// Values (or derivatives) for every `x` and `n` in range, one row per `x`.
pub fn grid(
    kind: Kind,
    a: Residue,
    ring: &ResidueRing,
    lo: u64,
    hi: u64,
    derivative: bool,
) -> Vec<Vec<Residue>> {
    ring.elements()
        .map(|x| {
            let row = if derivative {
                derivative_sequence(kind, a, x, ring, hi)
            } else {
                sequence(kind, a, x, ring, hi)
            };
            row[lo as usize..].to_vec()
        })
        .collect()
}

/// CSV with a header of indices and a leading `x` column.
pub fn grid_csv(rows: &[Vec<Residue>], lo: u64, hi: u64) -> String {
    let mut out = format!("x,{}\n", join(lo..=hi));
    for (x, row) in rows.iter().enumerate() {
        out.push_str(&format!("{x},{}\n", join(row.iter().copied())));
    }
    out
}

pub fn table(args: &TableArgs) -> Result<Outcome, CliError> {
    let ring = ring(args.modulus)?;
    let a = point(&ring, args.a)?;
    let (lo, hi) = (args.n.lo, args.n.hi);
    let stdout = match args.x {
        Some(x) => {
            let x = point(&ring, x)?;
            let row = if args.derivative {
                derivative_sequence(args.kind.0, a, x, &ring, hi)
            } else {
                sequence(args.kind.0, a, x, &ring, hi)
            };
            format!("{}\n", join(row[lo as usize..].iter().copied()))
        }
        None => grid_csv(
            &grid(args.kind.0, a, &ring, lo, hi, args.derivative),
            lo,
            hi,
        ),
    };
    Ok(Outcome {
        stdout,
        status: Status::Pass,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalyzeResult {
    pub report: PermReport,
    /// Cycle lengths with multiplicity, longest first.
    pub cycle_lengths: Option<Vec<u64>>,
}

pub fn analyze(args: &AnalyzeArgs) -> Result<Outcome, CliError> {
    let ring = ring(args.modulus)?;
    let a = point(&ring, args.a)?;
    let spec = RdpSpec::new(args.n, args.kind.0, ring).with_a(a);
    let opts = AnalyzeOptions {
        cpp: args.cpp,
        fixed_points: args.fixed_points,
        cycle_type: args.cycle_type,
    };
    let report = analyze_map(&rdp_map(&spec), opts);
    let cycle_lengths = if args.cycle_type {
        report.cycle_type.as_ref().map(|c| c.lengths())
    } else {
        None
    };
    let envelope = ReportEnvelope::new(
        "analyze",
        params([
            ("kind", kind_label(args.kind.0)),
            ("n", args.n.to_string()),
            ("a", a.to_string()),
            ("mod", args.modulus.to_string()),
        ]),
        AnalyzeResult {
            report,
            cycle_lengths,
        },
    );
    Ok(Outcome {
        stdout: envelope.to_json()?,
        status: Status::Pass,
    })
}

fn suite_name(suite: Suite) -> String {
    suite
        .to_possible_value()
        .map_or_else(|| format!("{suite:?}"), |v| v.get_name().to_string())
}

pub fn verify(args: &VerifyArgs) -> Result<Outcome, CliError> {
    if args.prime_cap < 3 {
        return Err(CliError::Usage("--prime-cap must be at least 3".into()));
    }
    let report: SuiteReport = suites::run(args.suite, args.prime_cap)?;
    let status = if report.passed {
        Status::Pass
    } else {
        Status::Violation
    };
    let envelope = ReportEnvelope::new(
        "verify",
        params([
            ("suite", suite_name(args.suite)),
            ("prime_cap", args.prime_cap.to_string()),
        ]),
        report,
    );
    Ok(Outcome {
        stdout: envelope.to_json()?,
        status,
    })
}
