use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rdp_core::Kind;

#[derive(Debug, Parser)]
#[command(name = "rdp", version, about = "Reversed Dickson polynomials over Z_m")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate D_{n,k}(a, x) at one point or at every x.
    Eval(EvalArgs),
    /// Print values as CSV with x down and n across.
    Table(TableArgs),
    /// Permutation analysis of x -> D_{n,k}(a, x) as JSON.
    Analyze(AnalyzeArgs),
    /// Run a verification suite; exit 1 on a theorem violation.
    Verify(VerifyArgs),
}

/// `D`, `E`, or the number `k` of the (k+1)-th kind.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct KindArg(pub Kind);

impl FromStr for KindArg {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "D" | "d" => Ok(KindArg(Kind::FIRST)),
            "E" | "e" => Ok(KindArg(Kind::SECOND)),
            _ => s
                .parse::<u32>()
                .map(|k| KindArg(Kind(k)))
                .map_err(|_| format!("expected D, E or a non-negative integer, got {s:?}")),
        }
    }
}

/// An element of `Z_m` written as an integer or a fraction `p/q`, with
/// either part negative.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PointArg {
    pub num: i64,
    pub den: i64,
}

impl FromStr for PointArg {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || format!("expected an integer or a fraction p/q, got {s:?}");
        let (num, den) = match s.split_once('/') {
            Some((a, b)) => (
                a.trim().parse().map_err(|_| bad())?,
                b.trim().parse().map_err(|_| bad())?,
            ),
            None => (s.trim().parse().map_err(|_| bad())?, 1),
        };
        if den == 0 {
            return Err("zero denominator".into());
        }
        Ok(PointArg { num, den })
    }
}

/// Inclusive index range `lo..hi`, or a single index.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RangeArg {
    pub lo: u64,
    pub hi: u64,
}

impl FromStr for RangeArg {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || format!("expected lo..hi, got {s:?}");
        let (lo, hi) = match s.split_once("..") {
            Some((a, b)) => {
                let b = b.strip_prefix('=').unwrap_or(b);
                (a.parse().map_err(|_| bad())?, b.parse().map_err(|_| bad())?)
            }
            None => {
                let n = s.parse().map_err(|_| bad())?;
                (n, n)
            }
        };
        if lo > hi {
            return Err(format!("empty range {s:?}"));
        }
        Ok(RangeArg { lo, hi })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Route {
    Recurrence,
    Explicit,
    Functional,
}

#[derive(Debug, Args)]
pub struct EvalArgs {
    #[arg(long)]
    pub kind: KindArg,
    #[arg(long)]
    pub n: u64,
    #[arg(long, default_value = "1", allow_hyphen_values = true)]
    pub a: PointArg,
    #[arg(long = "mod")]
    pub modulus: u64,
    #[arg(
        long,
        allow_hyphen_values = true,
        conflicts_with = "all_x",
        required_unless_present = "all_x"
    )]
    pub x: Option<PointArg>,
    #[arg(long)]
    pub all_x: bool,
    #[arg(long, value_enum, default_value = "recurrence")]
    pub route: Route,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    #[arg(long)]
    pub kind: KindArg,
    #[arg(long = "mod")]
    pub modulus: u64,
    #[arg(long)]
    pub n: RangeArg,
    #[arg(long, default_value = "1", allow_hyphen_values = true)]
    pub a: PointArg,
    /// Print only the row for this x, without headers.
    #[arg(long, allow_hyphen_values = true)]
    pub x: Option<PointArg>,
    /// Tabulate the derivative in x instead of the values.
    #[arg(long)]
    pub derivative: bool,
}

#[derive(Debug, Args)]
pub struct AnalyzeArgs {
    #[arg(long)]
    pub kind: KindArg,
    #[arg(long)]
    pub n: u64,
    #[arg(long, default_value = "1", allow_hyphen_values = true)]
    pub a: PointArg,
    #[arg(long = "mod")]
    pub modulus: u64,
    #[arg(long)]
    pub cpp: bool,
    #[arg(long)]
    pub fixed_points: bool,
    #[arg(long)]
    pub cycle_type: bool,
}

#[derive(
    Debug,
    Clone,
    Copy,
    PartialEq,
    Eq,
    PartialOrd,
    Ord,
    ValueEnum,
    serde::Serialize,
    serde::Deserialize,
)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    T5,
    T7,
    Ring2,
    Ring3,
    FixedPoints,
    CycleTypes,
    Periods,
    Conjectures,
    GoldenAppendix,
    All,
    /// Always reports a violation; exercises the exit-status contract.
    #[value(hide = true)]
    SyntheticFailure,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum)]
    pub suite: Suite,
    /// Largest prime visited by the prime-indexed suites.
    #[arg(long, default_value_t = 31)]
    pub prime_cap: u64,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_points() {
        assert_eq!(
            "-1".parse::<PointArg>().unwrap(),
            PointArg { num: -1, den: 1 }
        );
        assert_eq!(
            "1/4".parse::<PointArg>().unwrap(),
            PointArg { num: 1, den: 4 }
        );
        assert!("1/0".parse::<PointArg>().is_err());
        assert!("x".parse::<PointArg>().is_err());
    }

    #[test]
    fn parses_ranges_and_kinds() {
        assert_eq!(
            "0..23".parse::<RangeArg>().unwrap(),
            RangeArg { lo: 0, hi: 23 }
        );
        assert_eq!(
            "0..=7".parse::<RangeArg>().unwrap(),
            RangeArg { lo: 0, hi: 7 }
        );
        assert_eq!("5".parse::<RangeArg>().unwrap(), RangeArg { lo: 5, hi: 5 });
        assert!("9..2".parse::<RangeArg>().is_err());
        assert_eq!("E".parse::<KindArg>().unwrap().0, Kind::SECOND);
        assert_eq!("3".parse::<KindArg>().unwrap().0, Kind(3));
        assert!("F".parse::<KindArg>().is_err());
    }

    #[test]
    fn negative_x_is_accepted() {
        let cli = Cli::try_parse_from([
            "rdp", "eval", "--kind", "D", "--n", "2", "--mod", "5", "--x", "-2",
        ])
        .unwrap();
        match cli.command {
            Command::Eval(e) => assert_eq!(e.x, Some(PointArg { num: -2, den: 1 })),
            _ => unreachable!(),
        }
    }
}
