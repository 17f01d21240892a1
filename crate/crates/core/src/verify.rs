//! Cross-checks between independent computations.
//!
//! Every check compares two values obtained by different routes (closed form
//! against determinant, recursion against determinant, one diagram against a
//! transformed one) and records both sides.

use std::fmt;
use std::path::Path;

use num_bigint::BigInt;
use num_traits::Signed;
use rayon::prelude::*;
use thiserror::Error;

use crate::alexander::{delta0_diagram, delta0_labeled, delta_bar, trivial_factor, AlexanderError};
use crate::diagram::{ArcLabeling, BigonKind, Diagram, DiagramError, KinkKind};
use crate::laurent::LaurentPoly;
use crate::twist::{self, Clasp, TwistError, TwistSpec};

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error(transparent)]
    Alexander(#[from] AlexanderError),
    #[error(transparent)]
    Twist(#[from] TwistError),
    #[error("invalid thread count in VA_THREADS: {0:?}")]
    Threads(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckResult {
    pub subject: String,
    pub check: String,
    pub pass: bool,
    pub lhs: String,
    pub rhs: String,
    pub detail: Option<String>,
}

impl CheckResult {
    fn compare<T: PartialEq + fmt::Display>(subject: &str, check: &str, lhs: T, rhs: T) -> Self {
        CheckResult {
            subject: subject.to_string(),
            check: check.to_string(),
            pass: lhs == rhs,
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
            detail: None,
        }
    }

    fn failed(subject: &str, check: &str, detail: String) -> Self {
        CheckResult {
            subject: subject.to_string(),
            check: check.to_string(),
            pass: false,
            lhs: String::new(),
            rhs: String::new(),
            detail: Some(detail),
        }
    }
}

impl fmt::Display for CheckResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.pass { "ok  " } else { "FAIL" };
        write!(f, "{status} {} [{}]", self.subject, self.check)?;
        if !self.pass {
            write!(f, ": {} != {}", self.lhs, self.rhs)?;
        }
        if let Some(d) = &self.detail {
            write!(f, " ({d})")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjectureVerdict {
    pub knot: String,
    pub delta_bar_at_minus1: BigInt,
    pub odd_writhe: i64,
    pub holds: bool,
}

impl ConjectureVerdict {
    /// `knot=…, ow=…, dbar=…, holds=…`
    pub fn machine_line(&self) -> String {
        format!("knot={}, ow={}, dbar={}, holds={}", self.knot, self.odd_writhe, self.delta_bar_at_minus1, self.holds)
    }
}

/// `2·|Δ̄₀(−1,−1)| = |OW|` for a knot diagram.
pub fn check_conjecture(name: &str, d: &Diagram) -> Result<ConjectureVerdict, VerifyError> {
    let ow = d.odd_writhe()?;
    let dbar = delta_bar(&delta0_diagram(d), true).map_err(AlexanderError::from)?;
    Ok(verdict(name, &dbar.normalized(), ow))
}

/// Conjecture check for a generated twist knot.
pub fn check_conjecture_spec(spec: &TwistSpec) -> Result<ConjectureVerdict, VerifyError> {
    check_conjecture(&spec.to_string(), &twist::generate_twist(spec)?)
}

fn verdict(name: &str, dbar_norm: &LaurentPoly, ow: i64) -> ConjectureVerdict {
    let at = dbar_norm.eval_minus_one();
    let holds = BigInt::from(2) * at.abs() == BigInt::from(ow).abs();
    ConjectureVerdict { knot: name.to_string(), delta_bar_at_minus1: at, odd_writhe: ow, holds }
}

/// All block sequences of length `1..=max_n` with entries in `lo..=hi`.
pub fn grid_specs(max_n: usize, lo: i64, hi: i64) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    let mut layer: Vec<Vec<i64>> = vec![Vec::new()];
    for _ in 0..max_n {
        layer = layer.iter().flat_map(|b| (lo..=hi).map(move |a| [b.as_slice(), &[a]].concat())).collect();
        out.extend(layer.iter().cloned());
    }
    out
}

/// `{n ≤ 3, aᵢ ∈ [−4,4]} ∪ {n = 4, aᵢ ∈ [0,2]}`
pub fn standard_grid() -> Vec<Vec<i64>> {
    let mut specs = grid_specs(3, -4, 4);
    specs.extend(grid_specs(4, 0, 2).into_iter().filter(|b| b.len() == 4));
    specs
}

/// Runs `f` on a pool sized by `VA_THREADS` when set.
pub fn with_pool<T: Send>(f: impl FnOnce() -> T + Send) -> Result<T, VerifyError> {
    match std::env::var("VA_THREADS") {
        Ok(v) => {
            let n: usize = v.trim().parse().map_err(|_| VerifyError::Threads(v.clone()))?;
            let pool =
                rayon::ThreadPoolBuilder::new().num_threads(n).build().map_err(|_| VerifyError::Threads(v.clone()))?;
            Ok(pool.install(f))
        }
        Err(_) => Ok(f()),
    }
}

/// Check names used by [`run_grid`].
pub mod checks {
    pub const RECURSION: &str = "recursion = determinant";
    pub const SIGNED_OW: &str = "2 dbar(-1,-1) = sign * OW";
    pub const CONJECTURE: &str = "2 |dbar(-1,-1)| = |OW|";
    pub const DIVISIBILITY: &str = "knot factor divides";
    pub const IMPLICATION: &str = "signed identity implies conjecture";
}

/// Per spec, in input order: recursion against determinant, the signed
/// odd-writhe identity, the conjecture, divisibility, and that the signed
/// identity implies the conjecture.
pub fn run_grid(specs: &[Vec<i64>]) -> Vec<CheckResult> {
    specs.par_iter().flat_map_iter(|b| grid_checks(b)).collect()
}

fn grid_checks(blocks: &[i64]) -> Vec<CheckResult> {
    let spec = TwistSpec::a(blocks);
    let name = spec.to_string();
    let d = match twist::generate_twist(&spec) {
        Ok(d) => d,
        Err(e) => return vec![CheckResult::failed(&name, "generate", e.to_string())],
    };
    let delta0 = delta0_diagram(&d);
    let dbar = match delta_bar(&delta0, true) {
        Ok(q) => q,
        Err(e) => return vec![CheckResult::failed(&name, checks::DIVISIBILITY, e.to_string())],
    };
    let mut out = vec![CheckResult {
        subject: name.clone(),
        check: checks::DIVISIBILITY.into(),
        pass: true,
        lhs: dbar.to_string(),
        rhs: "exact quotient".into(),
        detail: None,
    }];
    let dbar_norm = dbar.normalized();
    match twist::evaluate_recursive(&spec) {
        Ok(r) => out.push(CheckResult::compare(&name, checks::RECURSION, r.normalized(), dbar_norm.clone())),
        Err(e) => out.push(CheckResult::failed(&name, checks::RECURSION, e.to_string())),
    }
    let ow = d.odd_writhe().expect("twist knots are knots");
    let ctx = twist::parity_context(&spec);
    let sign = ctx.sign() * if spec.half_twists() % 2 == 0 { 1 } else { -1 };
    let signed = CheckResult::compare(
        &name,
        checks::SIGNED_OW,
        BigInt::from(2) * dbar.eval_minus_one(),
        BigInt::from(sign * ow),
    );
    let conj = verdict(&name, &dbar_norm, ow);
    let conj_check = CheckResult {
        subject: name.clone(),
        check: checks::CONJECTURE.into(),
        pass: conj.holds,
        lhs: format!("2*|{}|", conj.delta_bar_at_minus1),
        rhs: format!("|{ow}|"),
        detail: None,
    };
    out.push(CheckResult {
        subject: name.clone(),
        check: checks::IMPLICATION.into(),
        pass: !signed.pass || conj_check.pass,
        lhs: signed.pass.to_string(),
        rhs: conj_check.pass.to_string(),
        detail: None,
    });
    out.push(signed);
    out.push(conj_check);
    out
}

/// Named diagrams used by the lemma suite and the self test.
pub fn builtin_corpus() -> Vec<(String, Diagram)> {
    let mut out: Vec<(String, Diagram)> = [
        ("VHL+", "O1+;U1+"),
        ("VHL-", "O1-;U1-"),
        ("virtual trefoil", "O1+U2+U1+O2+"),
        ("trefoil", TREFOIL),
        ("figure-eight", FIGURE_EIGHT),
    ]
    .into_iter()
    .map(|(n, c)| (n.to_string(), c.parse().expect("builtin code")))
    .collect();
    for blocks in base_family_blocks(4) {
        let spec = TwistSpec::a(&blocks);
        out.push((spec.to_string(), twist::generate_twist(&spec).expect("VT_a")));
    }
    out
}

pub const TREFOIL: &str = "O1+U2+O3+U1+O2+U3+";
pub const FIGURE_EIGHT: &str = "O1-U2+O4+U1-O3-U4+O2+U3-";

/// Blocks of the four base families for `m = 1..=max_m`.
pub fn base_family_blocks(max_m: usize) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    for m in 1..=max_m {
        let ones = vec![1; m];
        out.push(ones.clone());
        out.push([vec![0], ones.clone()].concat());
        out.push([ones.clone(), vec![0]].concat());
        out.push([vec![0], ones, vec![0]].concat());
    }
    out
}

pub mod lemma {
    pub const KINK: &str = "kink factor";
    pub const KINK_NORMALIZED: &str = "kink keeps normalized dbar";
    pub const BIGON: &str = "bigon factor -uv";
    pub const SKEIN: &str = "skein identity";
    pub const DIVISIBILITY: &str = "trivial factor divides";
    pub const MIRROR: &str = "mirror: D#(u,v) ~ -D(v,u)";
    pub const REVERSE: &str = "reverse: -D(u,v) ~ -D(1/u,1/v)";
}

/// Kink factors, bigon factors, skein identity at every crossing, divisibility, and the
/// mirror and reversal symmetries, for each diagram of the corpus.
pub fn run_lemma_suite(corpus: &[(String, Diagram)]) -> Vec<CheckResult> {
    corpus.par_iter().flat_map_iter(|(name, d)| lemma_checks(name, d)).collect()
}

/// Factor a kink of the given kind contributes under traversal labeling.
pub fn kink_factor(kind: KinkKind) -> LaurentPoly {
    match kind {
        KinkKind::Ia | KinkKind::Ib => LaurentPoly::uv_pow(1),
        KinkKind::Ic | KinkKind::Id => LaurentPoly::constant(-1),
    }
}

fn lemma_checks(name: &str, d: &Diagram) -> Vec<CheckResult> {
    let mut out = Vec::new();
    let knot = d.is_knot();
    let base = delta0_diagram(d);
    let dbar = match delta_bar(&base, knot) {
        Ok(q) => {
            out.push(CheckResult::compare(name, lemma::DIVISIBILITY, base.clone(), &trivial_factor(knot) * &q));
            Some(q)
        }
        Err(e) => {
            out.push(CheckResult::failed(name, lemma::DIVISIBILITY, e.to_string()));
            None
        }
    };

    for arc in 1..=d.arc_count() {
        for kind in KinkKind::ALL {
            let k = d.add_kink(arc, kind).expect("arc in range");
            let subject = format!("{name} arc {arc} {kind:?}");
            let dk = delta0_diagram(&k);
            out.push(CheckResult::compare(&subject, lemma::KINK, dk.clone(), &kink_factor(kind) * &base));
            if let (Some(q), Ok(qk)) = (&dbar, delta_bar(&dk, knot)) {
                out.push(CheckResult::compare(&subject, lemma::KINK_NORMALIZED, qk.normalized(), q.normalized()));
            }
        }
    }

    let minus_uv = -LaurentPoly::uv_pow(1);
    for over in 1..=d.arc_count() {
        for under in (1..=d.arc_count()).filter(|&a| a != over) {
            for kind in BigonKind::ALL {
                let m = d.bigon_move(over, under, kind).expect("distinct arcs in range");
                let subject = format!("{name} arcs {over}/{under} {kind:?}");
                let before = delta0_labeled(d, &m.before_labeling);
                let after = delta0_labeled(&m.after, &m.after_labeling);
                out.push(CheckResult::compare(&subject, lemma::BIGON, after, &minus_uv * &before));
            }
        }
    }

    let uv_minus_one = LaurentPoly::uv_pow(1) - LaurentPoly::one();
    for id in d.crossings() {
        let subject = format!("{name} crossing {id}");
        let t = match d.skein_triple(id) {
            Ok(t) => t,
            Err(DiagramError::EmptyComponent) => {
                // The smoothing leaves a loop without crossings. Kinking that loop
                // splits off a classical unknot block, so the smoothed Δ₀ is 0.
                let lhs = delta0_diagram(d)
                    - delta0_labeled(
                        &d.switch_crossing(id).expect("crossing exists"),
                        &ArcLabeling::traversal(d.arc_count()),
                    );
                let mut c = CheckResult::compare(&subject, lemma::SKEIN, lhs, LaurentPoly::zero());
                c.detail = Some("crossing-free smoothing".into());
                out.push(c);
                continue;
            }
            Err(e) => {
                out.push(CheckResult::failed(&subject, lemma::SKEIN, e.to_string()));
                continue;
            }
        };
        let lhs = delta0_labeled(&t.plus, &t.plus_labeling) - delta0_labeled(&t.minus, &t.plus_labeling);
        let rhs = &uv_minus_one * &delta0_labeled(&t.zero, &t.zero_labeling);
        out.push(CheckResult::compare(&subject, lemma::SKEIN, lhs, rhs));
    }

    let mirrored = delta0_diagram(&d.mirror_all());
    out.push(CheckResult::compare(name, lemma::MIRROR, mirrored.normalized(), (-base.swap_uv()).normalized()));
    let reversed = delta0_diagram(&d.reverse_orientation());
    out.push(CheckResult::compare(name, lemma::REVERSE, reversed.normalized(), (-base.invert_vars()).normalized()));
    out
}

/// Outcome of a batch file.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct BatchSummary {
    /// `(line number, verdict)`
    pub verdicts: Vec<(usize, ConjectureVerdict)>,
    /// `(line number, message)` for lines that could not be evaluated
    pub errors: Vec<(usize, String)>,
    /// blank and comment lines
    pub ignored: usize,
}

impl BatchSummary {
    pub fn held(&self) -> usize {
        self.verdicts.iter().filter(|(_, v)| v.holds).count()
    }

    pub fn success(&self) -> bool {
        self.errors.is_empty() && self.held() == self.verdicts.len()
    }
}

/// One Gauss code per line; blank lines and `#` comments are skipped.
pub fn batch_check_str(text: &str) -> BatchSummary {
    let lines: Vec<(usize, &str)> = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).collect();
    let ignored = lines.iter().filter(|(_, l)| l.is_empty() || l.starts_with('#')).count();
    let results: Vec<(usize, Result<ConjectureVerdict, String>)> = lines
        .par_iter()
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
        .map(|&(n, l)| {
            let r = l
                .parse::<Diagram>()
                .map_err(VerifyError::from)
                .and_then(|d| check_conjecture(l, &d))
                .map_err(|e| e.to_string());
            (n, r)
        })
        .collect();
    let mut summary = BatchSummary { ignored, ..Default::default() };
    for (n, r) in results {
        match r {
            Ok(v) => summary.verdicts.push((n, v)),
            Err(e) => summary.errors.push((n, e)),
        }
    }
    summary
}

pub fn batch_check(path: &Path) -> Result<BatchSummary, VerifyError> {
    let text =
        std::fs::read_to_string(path).map_err(|source| VerifyError::Io { path: path.display().to_string(), source })?;
    Ok(batch_check_str(&text))
}

/// Regression fixtures plus the lemma suite on the builtin corpus.
pub fn selftest() -> Vec<CheckResult> {
    let mut out = fixture_checks();
    out.extend(run_lemma_suite(&builtin_corpus()));
    out
}

fn fixture_checks() -> Vec<CheckResult> {
    let mut out = Vec::new();
    let poly = |s: &str| s.parse::<LaurentPoly>().expect("fixture");
    let worked = [
        (vec![7, 4, 3, 5, 9], "2 + 5*u*v - u^2*v^3 + 2*u^2*v^2 + 4*u^3*v^3"),
        (vec![-7, 3, -5, -2, 3], "1 + u*v - u^2*v^2 + u^3*v^2 + 4*u^3*v^3"),
    ];
    for (blocks, expected) in worked {
        let spec = TwistSpec::a(&blocks);
        let name = spec.to_string();
        match twist::evaluate_recursive(&spec) {
            Ok(r) => out.push(CheckResult::compare(&name, "worked example", r.normalized(), poly(expected))),
            Err(e) => out.push(CheckResult::failed(&name, "worked example", e.to_string())),
        }
    }
    for blocks in base_family_blocks(8) {
        let spec = TwistSpec::a(&blocks);
        let name = spec.to_string();
        match (twist::generate_twist(&spec), twist::base_closed_form(&spec)) {
            (Ok(d), Ok(f)) => out.push(CheckResult::compare(&name, "base family", delta0_diagram(&d), f)),
            (Err(e), _) | (_, Err(e)) => out.push(CheckResult::failed(&name, "base family", e.to_string())),
        }
    }
    let hopf: Diagram = "O1+;U1+".parse().expect("VHL+");
    out.push(CheckResult::compare("VHL+", "delta0", delta0_diagram(&hopf), trivial_factor(false)));
    out.push(CheckResult::compare(
        "VHL-",
        "delta0",
        delta0_diagram(&"O1-;U1-".parse().expect("VHL-")),
        -trivial_factor(false),
    ));
    for k in 0..=10 {
        let spec = TwistSpec::a(&[k]);
        out.push(table_check(&spec, twist::one_block_value(k), "one-block table"));
    }
    for a in 0..=5 {
        for b in 0..=5 {
            out.push(table_check(&TwistSpec::a(&[a, b]), twist::two_block_value(a, b), "two-block table"));
        }
    }
    for x in 0..=4 {
        for y in 0..=4 {
            out.push(table_check(
                &TwistSpec::new(vec![x, y], Clasp::AB).expect("blocks"),
                LaurentPoly::one(),
                "VT_a^b table",
            ));
        }
    }
    for (name, code) in [("trefoil", TREFOIL), ("figure-eight", FIGURE_EIGHT)] {
        let d: Diagram = code.parse().expect("classical code");
        out.push(CheckResult::compare(name, "classical delta0", delta0_diagram(&d), LaurentPoly::zero()));
    }
    out
}

/// Normalized Δ̄₀ from the determinant of the generated diagram against a table value.
pub fn table_check(spec: &TwistSpec, expected: LaurentPoly, check: &str) -> CheckResult {
    let name = spec.to_string();
    match twist::generate_twist(spec) {
        Ok(d) => match delta_bar(&delta0_diagram(&d), true) {
            Ok(q) => CheckResult::compare(&name, check, q.normalized(), expected),
            Err(e) => CheckResult::failed(&name, check, e.to_string()),
        },
        Err(e) => CheckResult::failed(&name, check, e.to_string()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_sizes() {
        assert_eq!(grid_specs(2, 0, 3).len(), 4 + 16);
        assert_eq!(standard_grid().len(), 9 + 81 + 729 + 81);
    }

    #[test]
    fn small_grid_passes() {
        let results = run_grid(&grid_specs(2, 0, 3));
        assert_eq!(results.len(), 20 * 5);
        for r in &results {
            assert!(r.pass, "{r}");
        }
    }

    #[test]
    fn conjecture_examples() {
        let v = check_conjecture_spec(&TwistSpec::a(&[7, 4, 3, 5, 9])).unwrap();
        assert_eq!((v.delta_bar_at_minus1.clone(), v.odd_writhe, v.holds), (BigInt::from(14), 28, true));
        let t = check_conjecture("trefoil", &TREFOIL.parse().unwrap()).unwrap();
        assert_eq!((t.odd_writhe, t.holds), (0, true));
        let m = check_conjecture_spec(&TwistSpec::a(&[-1])).unwrap();
        assert_eq!((m.odd_writhe, m.holds), (0, true));
        assert!(matches!(
            check_conjecture("hopf", &"O1+;U1+".parse().unwrap()),
            Err(VerifyError::Diagram(DiagramError::NotAKnot(2)))
        ));
        assert_eq!(v.machine_line(), "knot=VT[a](7,4,3,5,9), ow=28, dbar=14, holds=true");
    }

    #[test]
    fn batch_examples() {
        let s = batch_check_str("O1+U2+O3+U1+O2+U3+\nO1+U2+U1+O2+\n");
        assert_eq!((s.verdicts.len(), s.held()), (2, 2));
        assert!(s.success());
        let s = batch_check_str("# comment\n\nO1+U2+U1+O2+\n");
        assert_eq!((s.ignored, s.verdicts.len()), (2, 1));
        let s = batch_check_str("");
        assert_eq!((s.verdicts.len(), s.errors.len()), (0, 0));
        assert!(s.success());
        let s = batch_check_str("O1+U2+U1+O2+\nO1+U1\nO1+;U1+\n");
        assert_eq!(s.errors.iter().map(|e| e.0).collect::<Vec<_>>(), vec![2, 3]);
        assert!(!s.success());
    }

    #[test]
    fn lemma_suite_on_small_corpus() {
        let corpus: Vec<(String, Diagram)> = [("VHL+", "O1+;U1+"), ("virtual trefoil", "O1+U2+U1+O2+")]
            .into_iter()
            .map(|(n, c)| (n.to_string(), c.parse().unwrap()))
            .collect();
        let results = run_lemma_suite(&corpus);
        for r in &results {
            assert!(r.pass, "{r}");
        }
        assert!(results.iter().any(|r| r.check == lemma::SKEIN));
        assert!(results.iter().any(|r| r.check == lemma::KINK && r.subject.starts_with("VHL+")));
    }

    #[test]
    fn reruns_are_identical() {
        let specs = grid_specs(2, -1, 1);
        assert_eq!(run_grid(&specs), run_grid(&specs));
    }
}
