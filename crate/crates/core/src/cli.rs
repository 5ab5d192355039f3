//! Command-line front end.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use malachite_base::num::basic::traits::Zero;
use serde::Serialize;

use crate::antiderivative::{self, IntegralCase};
use crate::bourbaki::{self as core, approx_eval, closed_form_value, FamilyParam, FunctionCase};
use crate::error::{Error, Result};
use crate::geometry::{arc_lengths, box_count, dimension_estimate, interval_mass};
use crate::numeric::rational::{
    display, format_fixed, parse_decimal, parse_rational, render, BigRational,
};
use crate::table::PlanePoint;
use crate::verify::{run_suite, Suite};

pub const EXIT_INPUT: i32 = 1;
pub const EXIT_VERIFY: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "bourbaki",
    version,
    about = "Exact evaluation and analysis of Bourbaki's nowhere-differentiable function"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Target {
    #[value(name = "f")]
    Function,
    #[value(name = "F")]
    Integral,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum PlotFormat {
    Csv,
    Svg,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ReportFormat {
    Table,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Exact f(x), or f_a(x) with --a
    #[command(name = "eval-f")]
    EvalF {
        x: String,
        #[arg(long)]
        a: Option<String>,
    },
    /// Exact F(x), the integral of f over [0, x]
    #[command(name = "eval-F")]
    EvalIntegral { x: String },
    /// Enclosure of f at a decimal argument
    #[command(name = "approx-f")]
    ApproxF {
        x: String,
        #[arg(long)]
        tol: String,
    },
    /// Closed-form values of f (cases i..vi) or F (cases i..iv)
    #[command(name = "closed-form")]
    ClosedForm {
        #[arg(long, value_enum)]
        target: Target,
        #[arg(long)]
        case: String,
        #[arg(long = "i")]
        i: u32,
        #[arg(long = "j")]
        j: Option<u32>,
    },
    /// Write the breakpoints of an iterate f_i or F_i
    Iterate {
        #[arg(long, value_enum)]
        target: Target,
        #[arg(long)]
        level: u32,
        #[arg(long)]
        a: Option<String>,
        #[arg(long, value_enum)]
        format: PlotFormat,
        #[arg(long)]
        out: std::path::PathBuf,
    },
    /// Box counts and dimension estimates for levels 0..=max
    Boxdim {
        #[arg(long = "max-level")]
        max_level: u32,
        #[arg(long, value_enum, default_value = "table")]
        format: ReportFormat,
    },
    /// Arc lengths of the graphs of F_0..F_max
    Arclength {
        #[arg(long = "max-level")]
        max_level: u32,
    },
    /// Natural mass of the cover piece with the given address
    Measure {
        #[arg(long, allow_hyphen_values = true)]
        digits: String,
    },
    /// Run seeded identity suites and print a JSON report
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 1000)]
        cases: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Record elapsed wall-clock time (makes the output nondeterministic)
        #[arg(long)]
        timing: bool,
    },
}

/// Parses `argv` (including the program name), runs the command and returns
/// the process exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { 0 };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_INPUT
        }
    }
}

fn family(a: Option<&str>) -> Result<FamilyParam> {
    match a {
        Some(text) => FamilyParam::new(parse_rational(text)?),
        None => Ok(FamilyParam::classical()),
    }
}

fn emit(out: &mut dyn Write, text: &str) -> Result<()> {
    out.write_all(text.as_bytes())
        .map_err(|e| Error::Parameter(format!("cannot write output: {e}")))
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<i32> {
    match command {
        Command::EvalF { x, a } => {
            let value = core::eval_exact(&parse_rational(&x)?, &family(a.as_deref())?)?;
            emit(out, &format!("{}\n", display(&value)))?;
        }
        Command::EvalIntegral { x } => {
            let value = antiderivative::eval_exact(&parse_rational(&x)?)?;
            emit(out, &format!("{}\n", display(&value)))?;
        }
        Command::ApproxF { x, tol } => {
            let (lo, hi) = approx_eval(&x, &parse_decimal(&tol)?)?;
            emit(
                out,
                &format!("lower {}\nupper {}\n", display(&lo), display(&hi)),
            )?;
        }
        Command::ClosedForm { target, case, i, j } => {
            let (x, value, name) = match target {
                Target::Function => {
                    let (x, v) = closed_form_value(case.parse::<FunctionCase>()?, i, j)?;
                    (x, v, "f(x)")
                }
                Target::Integral => {
                    if j.is_some() {
                        return Err(Error::Parameter(
                            "--j applies only to f cases v and vi".into(),
                        ));
                    }
                    let (x, v) =
                        antiderivative::integral_closed_form(case.parse::<IntegralCase>()?, i)?;
                    (x, v, "F(x)")
                }
            };
            emit(
                out,
                &format!("x = {}\n{name} = {}\n", display(&x), display(&value)),
            )?;
        }
        Command::Iterate {
            target,
            level,
            a,
            format,
            out: path,
        } => {
            let points: Vec<PlanePoint> = match target {
                Target::Function => core::build_iterate(level, &family(a.as_deref())?)?
                    .breakpoints()
                    .to_vec(),
                Target::Integral => {
                    if a.is_some() {
                        return Err(Error::Parameter("--a applies only to --target f".into()));
                    }
                    antiderivative::build_iterate(level)?.breakpoints().to_vec()
                }
            };
            let text = match format {
                PlotFormat::Csv => to_csv(&points),
                PlotFormat::Svg => to_svg(&points),
            };
            std::fs::write(&path, text)
                .map_err(|e| Error::Parameter(format!("cannot write {}: {e}", path.display())))?;
            emit(
                out,
                &format!("wrote {} breakpoints to {}\n", points.len(), path.display()),
            )?;
        }
        Command::Boxdim { max_level, format } => emit(out, &boxdim(max_level, format)?)?,
        Command::Arclength { max_level } => {
            let mut text = String::new();
            for r in arc_lengths(max_level)? {
                writeln!(text, "L_{} = {}", r.level, r.decimal(15)).unwrap();
            }
            emit(out, &text)?;
        }
        Command::Measure { digits } => {
            let path = digits
                .chars()
                .map(|ch| match ch {
                    '0'..='2' => Ok(ch as u8 - b'0'),
                    _ => Err(Error::Parse(format!("digit {ch:?} is not 0, 1 or 2"))),
                })
                .collect::<Result<Vec<u8>>>()?;
            emit(out, &format!("{}\n", display(&interval_mass(&path)?)))?;
        }
        Command::Verify {
            suite,
            cases,
            seed,
            timing,
        } => {
            let report = run_suite(suite.parse::<Suite>()?, cases, seed, timing);
            emit(out, &format!("{}\n", report.to_json()))?;
            if !report.passed() {
                return Ok(EXIT_VERIFY);
            }
        }
    }
    Ok(0)
}

/// Header `x_num,x_den,y_num,y_den`, one row per breakpoint, every line
/// terminated by LF.
pub fn to_csv(points: &[PlanePoint]) -> String {
    let mut text = String::from("x_num,x_den,y_num,y_den\n");
    for p in points {
        let (xn, xd) = p.x.numerator_and_denominator_ref();
        let (yn, yd) = p.y.numerator_and_denominator_ref();
        let (xs, ys) = (sign(&p.x), sign(&p.y));
        writeln!(text, "{xs}{xn},{xd},{ys}{yn},{yd}").unwrap();
    }
    text
}

fn sign(x: &BigRational) -> &'static str {
    if *x < BigRational::ZERO {
        "-"
    } else {
        ""
    }
}

const VIEW: i64 = 900;
const MARGIN: i64 = 2;

/// One polyline in a 900 by 900 view box, y pointing up, 2-unit margin.
pub fn to_svg(points: &[PlanePoint]) -> String {
    let span = BigRational::from(VIEW - 2 * MARGIN);
    let margin = BigRational::from(MARGIN);
    let top = BigRational::from(VIEW - MARGIN);
    let x_lo = points
        .iter()
        .map(|p| &p.x)
        .min()
        .cloned()
        .unwrap_or_default();
    let x_hi = points
        .iter()
        .map(|p| &p.x)
        .max()
        .cloned()
        .unwrap_or_default();
    let y_lo = points
        .iter()
        .map(|p| &p.y)
        .min()
        .cloned()
        .unwrap_or_default();
    let y_hi = points
        .iter()
        .map(|p| &p.y)
        .max()
        .cloned()
        .unwrap_or_default();
    let unit = |lo: &BigRational, hi: &BigRational, v: &BigRational| {
        if hi > lo {
            (v - lo) / (hi - lo)
        } else {
            BigRational::from_signeds(1, 2)
        }
    };
    let coords: Vec<String> = points
        .iter()
        .map(|p| {
            let px = &margin + &span * unit(&x_lo, &x_hi, &p.x);
            let py = &top - &span * unit(&y_lo, &y_hi, &p.y);
            format!("{},{}", format_fixed(&px, 6), format_fixed(&py, 6))
        })
        .collect();
    format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 {VIEW} {VIEW}\" width=\"{VIEW}\" height=\"{VIEW}\">\n\
         <polyline fill=\"none\" stroke=\"black\" stroke-width=\"1\" points=\"{}\"/>\n\
         </svg>\n",
        coords.join(" ")
    )
}

#[derive(Serialize)]
struct BoxRow {
    level: u32,
    delta: String,
    count: u64,
    estimate: Option<f64>,
}

fn boxdim(max_level: u32, format: ReportFormat) -> Result<String> {
    let mut rows = Vec::new();
    for level in 0..=max_level {
        let report = box_count(level)?;
        let estimate = if level == 0 {
            None
        } else {
            Some(dimension_estimate(std::slice::from_ref(&report))?)
        };
        rows.push(BoxRow {
            level,
            delta: render(&report.delta),
            count: u64::try_from(&report.count).expect("counts below the level cap fit"),
            estimate,
        });
    }
    Ok(match format {
        ReportFormat::Json => format!(
            "{}\n",
            serde_json::to_string_pretty(&rows).expect("rows serialize")
        ),
        ReportFormat::Table => {
            let mut text = format!(
                "{:>5}  {:>12}  {:>12}  {}\n",
                "level", "delta", "count", "estimate"
            );
            for r in &rows {
                let estimate = r.estimate.map_or("-".to_string(), |e| format!("{e:.12}"));
                writeln!(
                    text,
                    "{:>5}  {:>12}  {:>12}  {}",
                    r.level, r.delta, r.count, estimate
                )
                .unwrap();
            }
            text
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("bourbaki").chain(args.iter().copied());
        let code = run(argv, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn evaluations() {
        assert_eq!(
            run_args(&["eval-f", "1/2"]),
            (0, "1/2 (0.500000000000)\n".into(), String::new())
        );
        assert_eq!(run_args(&["eval-F", "1"]).1, "1/2 (0.500000000000)\n");
        assert_eq!(run_args(&["eval-f", "1/7"]).1, "8/23 (0.347826086957)\n");
        assert_eq!(
            run_args(&["eval-f", "1/3", "--a", "1/4"]).1,
            "1/4 (0.250000000000)\n"
        );
    }

    #[test]
    fn input_errors_exit_one() {
        assert_eq!(run_args(&["eval-f", "3/2"]).0, EXIT_INPUT);
        assert_eq!(run_args(&["eval-f", "abc"]).0, EXIT_INPUT);
        assert_eq!(run_args(&["eval-f", "1/2", "--a", "1"]).0, EXIT_INPUT);
        assert_eq!(run_args(&["measure", "--digits", "013"]).0, EXIT_INPUT);
        assert_eq!(
            run_args(&["closed-form", "--target", "F", "--case", "v", "--i", "1"]).0,
            EXIT_INPUT
        );
        assert_eq!(run_args(&["nonsense"]).0, EXIT_INPUT);
        assert_eq!(run_args(&["verify", "--suite", "everything"]).0, EXIT_INPUT);
    }

    #[test]
    fn closed_forms_and_measure() {
        let (code, text, _) = run_args(&[
            "closed-form",
            "--target",
            "f",
            "--case",
            "v",
            "--i",
            "1",
            "--j",
            "2",
        ]);
        assert_eq!(code, 0);
        assert_eq!(
            text,
            "x = 1/12 (0.0833333333333)\nf(x) = 4/15 (0.266666666667)\n"
        );
        let text = run_args(&["closed-form", "--target", "F", "--case", "i", "--i", "1"]).1;
        assert_eq!(
            text,
            "x = 1/4 (0.250000000000)\nF(x) = 1/14 (0.0714285714286)\n"
        );
        assert_eq!(
            run_args(&["measure", "--digits", "00"]).1,
            "4/25 (0.160000000000)\n"
        );
        assert_eq!(
            run_args(&["measure", "--digits", ""]).1,
            "1/1 (1.00000000000)\n"
        );
    }

    #[test]
    fn csv_rows() {
        let points = core::build_iterate(1, &FamilyParam::classical())
            .unwrap()
            .breakpoints()
            .to_vec();
        assert_eq!(
            to_csv(&points),
            "x_num,x_den,y_num,y_den\n0,1,0,1\n1,3,2,3\n2,3,1,3\n1,1,1,1\n"
        );
    }

    #[test]
    fn svg_polyline() {
        let points = core::build_iterate(1, &FamilyParam::classical())
            .unwrap()
            .breakpoints()
            .to_vec();
        let svg = to_svg(&points);
        assert!(svg.contains("viewBox=\"0 0 900 900\""));
        assert!(svg.contains("stroke-width=\"1\""));
        assert!(svg.contains("points=\"2.000000,898.000000 300.666667,300.666667 599.333333,599.333333 898.000000,2.000000\""));
        assert_eq!(svg.matches("<polyline").count(), 1);
    }

    #[test]
    fn boxdim_json_keys_in_order() {
        let (code, text, _) = run_args(&["boxdim", "--max-level", "1", "--format", "json"]);
        assert_eq!(code, 0);
        let level = text.find("\"level\"").unwrap();
        let delta = text.find("\"delta\"").unwrap();
        let count = text.find("\"count\"").unwrap();
        let estimate = text.find("\"estimate\"").unwrap();
        assert!(level < delta && delta < count && count < estimate);
        assert!(text.contains("\"count\": 5"));
    }
}
