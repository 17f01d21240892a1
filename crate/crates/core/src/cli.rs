//! The `vknot` command line.
//!
//! Exit codes: 0 success, 1 computation or verification failure, 2 usage.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::alexander::{invariant_report, InvariantReport};
use crate::diagram::{format_gauss, Diagram};
use crate::laurent::LaurentPoly;
use crate::twist::{self, SymmetryOp, TwistSpec};
use crate::verify::{self, BatchSummary, CheckResult};

#[derive(Debug, Parser)]
#[command(name = "vknot", version, about = "Alexander polynomial of virtual knots and twist knots")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Invariants of a Gauss code or a twist knot spec
    Compute(ComputeArgs),
    /// Print the Gauss code generated for a twist knot spec
    Twist {
        /// e.g. "VT[a](7,4,3,5,9)"
        #[arg(allow_hyphen_values = true, value_parser = parse_spec)]
        spec: TwistSpec,
    },
    /// Run the twist knot grid checks or a batch file
    Verify(VerifyArgs),
    /// Run the regression fixtures and lemma suites
    Selftest {
        /// print every check, not only failures
        #[arg(long)]
        verbose: bool,
    },
    /// Check the odd writhe conjecture for each Gauss code in a file
    Batch {
        file: PathBuf,
        #[arg(long)]
        machine: bool,
    },
}

#[derive(Debug, Args)]
#[command(group(clap::ArgGroup::new("input").required(true).args(["gauss", "spec"])))]
pub struct ComputeArgs {
    /// signed Gauss code, components separated by ';'
    #[arg(long, allow_hyphen_values = true)]
    pub gauss: Option<String>,
    /// twist knot spec such as "VT[a](7,4,3,5,9)"
    #[arg(long, allow_hyphen_values = true, value_parser = parse_spec)]
    pub spec: Option<TwistSpec>,
    /// skip normalization
    #[arg(long)]
    pub raw: bool,
    /// print only the reduced polynomial
    #[arg(long)]
    pub quiet: bool,
    /// key=value lines
    #[arg(long)]
    pub machine: bool,
}

#[derive(Debug, Args)]
#[command(group(clap::ArgGroup::new("source").args(["n", "file"])))]
pub struct VerifyArgs {
    /// maximal number of blocks
    #[arg(long)]
    pub n: Option<usize>,
    /// inclusive block range `lo..hi`
    #[arg(long, allow_hyphen_values = true, default_value = "-4..4", value_parser = parse_range)]
    pub range: (i64, i64),
    /// batch file of Gauss codes
    #[arg(long)]
    pub file: Option<PathBuf>,
    #[arg(long)]
    pub machine: bool,
}

fn parse_spec(s: &str) -> Result<TwistSpec, String> {
    s.parse().map_err(|e: twist::TwistError| e.to_string())
}

/// `lo..hi` or `lo..=hi`, both inclusive.
pub fn parse_range(s: &str) -> Result<(i64, i64), String> {
    let (lo, hi) = s.split_once("..").ok_or_else(|| format!("expected lo..hi, got {s:?}"))?;
    let hi = hi.strip_prefix('=').unwrap_or(hi);
    let lo: i64 = lo.trim().parse().map_err(|_| format!("bad lower bound in {s:?}"))?;
    let hi: i64 = hi.trim().parse().map_err(|_| format!("bad upper bound in {s:?}"))?;
    if lo > hi {
        return Err(format!("empty range {s:?}"));
    }
    Ok((lo, hi))
}

pub fn run() -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}

/// Parses `args` (program name first) and runs the command.
pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            let _ = if code == 0 { write!(out, "{text}") } else { write!(err, "{text}") };
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(msg) => {
            let _ = writeln!(err, "error: {msg}");
            1
        }
    }
}

type CmdResult = Result<i32, String>;

fn execute(cmd: Command, out: &mut dyn Write) -> CmdResult {
    match cmd {
        Command::Compute(a) => compute(&a, out),
        Command::Twist { spec } => twist_cmd(&spec, out),
        Command::Verify(a) => verify_cmd(&a, out),
        Command::Selftest { verbose } => selftest(verbose, out),
        Command::Batch { file, machine } => batch(&file, machine, out),
    }
}

fn io(e: std::io::Error) -> String {
    e.to_string()
}

/// Diagram for a spec: the generated code of its clasp representative,
/// mirrored when the representative is related by `p ↦ −p(v,u)`.
fn spec_diagram(spec: &TwistSpec) -> Result<Diagram, String> {
    let (eq, op) = twist::clasp_identity(spec);
    let d = twist::generate_twist(&eq).map_err(|e| e.to_string())?;
    Ok(match op {
        SymmetryOp::Identity => d,
        SymmetryOp::SwapNegate => d.mirror_all(),
    })
}

fn compute(a: &ComputeArgs, out: &mut dyn Write) -> CmdResult {
    let (d, recursive) = match (&a.gauss, &a.spec) {
        (Some(g), _) => (g.parse::<Diagram>().map_err(|e| e.to_string())?, None),
        (None, Some(spec)) => {
            let r = twist::evaluate_recursive(spec).map_err(|e| e.to_string())?;
            (spec_diagram(spec)?, Some(r))
        }
        (None, None) => unreachable!("clap requires one input"),
    };
    let rep = invariant_report(&d).map_err(|e| e.to_string())?;
    if let Some(r) = &recursive {
        if r.normalized() != rep.delta_bar_normalized {
            return Err(format!(
                "recursion {} disagrees with determinant {}",
                r.normalized(),
                rep.delta_bar_normalized
            ));
        }
    }
    if a.quiet {
        let p = if a.raw { &rep.delta_bar } else { &rep.delta_bar_normalized };
        writeln!(out, "{p}").map_err(io)?;
        return Ok(0);
    }
    let lines = report_lines(&rep, a.raw, recursive.as_ref());
    for (key, label, value) in lines {
        if a.machine {
            writeln!(out, "{key}={value}").map_err(io)?;
        } else {
            writeln!(out, "{label:<24} {value}").map_err(io)?;
        }
    }
    Ok(0)
}

fn report_lines(
    rep: &InvariantReport,
    raw: bool,
    recursive: Option<&LaurentPoly>,
) -> Vec<(&'static str, &'static str, String)> {
    let mut v = vec![
        ("components", "components", rep.components.to_string()),
        ("crossings", "crossings", rep.crossings.to_string()),
        ("delta0", "Delta0", rep.delta0.to_string()),
    ];
    if !raw {
        v.push(("delta0_normalized", "Delta0 normalized", rep.delta0_normalized.to_string()));
    }
    v.push(("delta_bar", "Delta0bar", rep.delta_bar.to_string()));
    if !raw {
        v.push(("delta_bar_normalized", "Delta0bar normalized", rep.delta_bar_normalized.to_string()));
    }
    if let Some(r) = recursive {
        let r = if raw { r.clone() } else { r.normalized() };
        v.push(("delta_bar_recursive", "Delta0bar by recursion", r.to_string()));
    }
    v.push(("delta_bar_at_minus_one", "Delta0bar(-1,-1)", rep.delta_bar_at_minus_one.to_string()));
    if let (Some(ow), Some(h)) = (rep.odd_writhe, rep.conjecture_holds) {
        v.push(("odd_writhe", "odd writhe", ow.to_string()));
        v.push(("conjecture", "2|Delta0bar(-1,-1)|=|OW|", if h { "holds" } else { "fails" }.to_string()));
    }
    v
}

fn twist_cmd(spec: &TwistSpec, out: &mut dyn Write) -> CmdResult {
    let (eq, op) = twist::clasp_identity(spec);
    let (d, labeling) = twist::generate_twist_labeled(&eq).map_err(|e| e.to_string())?;
    let m = eq.twist_crossings();
    writeln!(out, "# {spec}").map_err(io)?;
    if eq != *spec {
        let how = match op {
            SymmetryOp::Identity => "same knot as",
            SymmetryOp::SwapNegate => "mirror of",
        };
        writeln!(out, "# {how} {eq}").map_err(io)?;
    }
    let clasp = match eq.clasp {
        twist::Clasp::AB => format!("clasp crossings 1 and {}", m + 2),
        _ => "clasp crossing 1".to_string(),
    };
    let twists = if m == 0 { "no twist crossings".to_string() } else { format!("twist crossings 2..{}", m + 1) };
    writeln!(out, "# {clasp}, {twists}").map_err(io)?;
    for i in 1..=eq.n() {
        if let Ok(c) = eq.first_crossing_of_block(i) {
            writeln!(out, "# block {i} starts at crossing {c}").map_err(io)?;
        }
    }
    let cols: Vec<String> = labeling.order().iter().map(|a| a.to_string()).collect();
    writeln!(out, "# matrix columns (arcs numbered after each passage): {}", cols.join(",")).map_err(io)?;
    let d = match op {
        SymmetryOp::Identity => d,
        SymmetryOp::SwapNegate => d.mirror_all(),
    };
    writeln!(out, "{}", format_gauss(&d)).map_err(io)?;
    Ok(0)
}

fn verify_cmd(a: &VerifyArgs, out: &mut dyn Write) -> CmdResult {
    if let Some(path) = &a.file {
        return batch(path, a.machine, out);
    }
    let specs = match a.n {
        Some(n) => verify::grid_specs(n, a.range.0, a.range.1),
        None => verify::standard_grid(),
    };
    let results = verify::with_pool(|| verify::run_grid(&specs)).map_err(|e| e.to_string())?;
    let mut failed = 0;
    let mut rest = results.as_slice();
    for blocks in &specs {
        let spec = TwistSpec::a(blocks);
        let name = spec.to_string();
        let k = rest.iter().take_while(|c| c.subject == name).count();
        let (checks, tail) = rest.split_at(k);
        rest = tail;
        let ok = checks.iter().all(|c| c.pass);
        if !ok {
            failed += 1;
        }
        let dbar =
            twist::evaluate_recursive(&spec).map(|p| p.normalized().to_string()).unwrap_or_else(|e| e.to_string());
        if a.machine {
            writeln!(out, "spec={spec}, dbar={dbar}, pass={ok}").map_err(io)?;
        } else {
            writeln!(out, "{} {spec}: dbar = {dbar}", if ok { "ok  " } else { "FAIL" }).map_err(io)?;
        }
        for c in checks.iter().filter(|c| !c.pass) {
            writeln!(out, "  {c}").map_err(io)?;
        }
    }
    if failed == 0 {
        writeln!(out, "all {} specs passed", specs.len()).map_err(io)?;
        Ok(0)
    } else {
        writeln!(out, "{failed} of {} specs failed", specs.len()).map_err(io)?;
        Ok(1)
    }
}

fn selftest(verbose: bool, out: &mut dyn Write) -> CmdResult {
    let results: Vec<CheckResult> = verify::with_pool(verify::selftest).map_err(|e| e.to_string())?;
    let failed = results.iter().filter(|c| !c.pass).count();
    for c in results.iter().filter(|c| verbose || !c.pass) {
        writeln!(out, "{c}").map_err(io)?;
    }
    if failed == 0 {
        writeln!(out, "selftest: all {} checks passed", results.len()).map_err(io)?;
        Ok(0)
    } else {
        writeln!(out, "selftest: {failed} of {} checks failed", results.len()).map_err(io)?;
        Ok(1)
    }
}

fn batch(path: &std::path::Path, machine: bool, out: &mut dyn Write) -> CmdResult {
    let s: BatchSummary =
        verify::with_pool(|| verify::batch_check(path)).map_err(|e| e.to_string())?.map_err(|e| e.to_string())?;
    let mut lines: Vec<(usize, String)> = s
        .verdicts
        .iter()
        .map(|(n, v)| {
            let text = if machine {
                format!("line={n}, {}", v.machine_line())
            } else {
                let status = if v.holds { "holds" } else { "FAILS" };
                format!("line {n}: {status} ow={} dbar(-1,-1)={} {}", v.odd_writhe, v.delta_bar_at_minus1, v.knot)
            };
            (*n, text)
        })
        .collect();
    lines.extend(s.errors.iter().map(|(n, e)| {
        let text = if machine { format!("line={n}, error={e}") } else { format!("line {n}: error: {e}") };
        (*n, text)
    }));
    lines.sort_by_key(|(n, _)| *n);
    for (_, l) in lines {
        writeln!(out, "{l}").map_err(io)?;
    }
    writeln!(out, "{} of {} knots satisfy the conjecture, {} errors", s.held(), s.verdicts.len(), s.errors.len())
        .map_err(io)?;
    Ok(if s.success() { 0 } else { 1 })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("vknot").chain(args.iter().copied());
        let code = run_with(argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn ranges() {
        assert_eq!(parse_range("-3..3"), Ok((-3, 3)));
        assert_eq!(parse_range("0..=10"), Ok((0, 10)));
        assert!(parse_range("3..1").is_err());
        assert!(parse_range("3").is_err());
    }

    #[test]
    fn quiet_spec() {
        let (code, out, _) = run(&["compute", "--spec", "VT[a](7,4,3,5,9)", "--quiet"]);
        assert_eq!(code, 0);
        let got: LaurentPoly = out.trim().parse().unwrap();
        assert_eq!(got, "2 + 5*u*v - u^2*v^3 + 2*u^2*v^2 + 4*u^3*v^3".parse().unwrap());
    }

    #[test]
    fn usage_errors_exit_two() {
        assert_eq!(run(&["compute"]).0, 2);
        assert_eq!(run(&["compute", "--gauss", "O1+U1+", "--spec", "VT(1)"]).0, 2);
        assert_eq!(run(&["frobnicate"]).0, 2);
        assert_eq!(run(&["verify", "--n", "1", "--range", "x"]).0, 2);
    }

    #[test]
    fn bad_input_exit_codes() {
        let (code, _, err) = run(&["compute", "--gauss", "O1+U2+"]);
        assert_eq!(code, 1);
        assert!(err.starts_with("error:"));
        assert_eq!(run(&["twist", "VT[q](1)"]).0, 2);
    }

    #[test]
    fn machine_keys() {
        let (code, out, _) = run(&["compute", "--gauss", "O1+U2+U1+O2+", "--machine"]);
        assert_eq!(code, 0);
        assert!(out.contains("delta_bar_normalized=1\n"));
        assert!(out.contains("odd_writhe=2\n"));
        assert!(out.contains("conjecture=holds\n"));
    }

    #[test]
    fn raw_hides_normalized_lines() {
        let (_, out, _) = run(&["compute", "--gauss", "O1-;U1-", "--raw", "--machine"]);
        assert!(!out.contains("normalized"));
        assert!(!out.contains("odd_writhe"));
    }
}
