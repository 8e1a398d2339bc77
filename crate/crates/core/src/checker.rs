//! Executable checks of the structural results, a suite runner over
//! catalogue and generated instances, and replayable failure artifacts.
//!
//! Report lines have the form `<instance-id> <check> PASS|FAIL|SKIP <detail>`
//! followed by a footer with counts. Results are ordered by instance id, so
//! a report depends only on the configuration.

use std::fmt;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::sync::Arc;

use crate::algebra::LeibnizAlgebra;
use crate::bimodule::{Bimodule, Irreducible, SpinConfig};
use crate::catalogue;
use crate::constructions::generate::{generate, Instance, Rng};
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::io;
use crate::par;
use crate::subnormal::{residual_ideal_check, residual_right_ideal_check, subnormal_chain, HypothesisMode};
use crate::subspace::Subspace;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CheckName {
    Lemma1,
    Theorem1,
    Lemma2,
    Corollary,
    Theorem2,
}

impl CheckName {
    pub const ALL: [CheckName; 5] = [
        CheckName::Lemma1,
        CheckName::Theorem1,
        CheckName::Lemma2,
        CheckName::Corollary,
        CheckName::Theorem2,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            CheckName::Lemma1 => "lemma1",
            CheckName::Theorem1 => "theorem1",
            CheckName::Lemma2 => "lemma2",
            CheckName::Corollary => "corollary",
            CheckName::Theorem2 => "theorem2",
        }
    }
}

impl fmt::Display for CheckName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CheckName {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        CheckName::ALL
            .into_iter()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| format!("unknown check {s:?}"))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Outcome {
    Pass,
    Fail,
    Skip,
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Outcome::Pass => "PASS",
            Outcome::Fail => "FAIL",
            Outcome::Skip => "SKIP",
        })
    }
}

/// Outcome of one check. Runs with a dropped hypothesis are reported as
/// `Skip` with `report_only_violation` set when an inclusion failed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub outcome: Outcome,
    pub detail: String,
    pub report_only_violation: bool,
}

impl Verdict {
    fn new(ok: bool, detail: impl Into<String>) -> Self {
        Verdict {
            outcome: if ok { Outcome::Pass } else { Outcome::Fail },
            detail: detail.into(),
            report_only_violation: false,
        }
    }

    fn skip(detail: impl Into<String>) -> Self {
        Verdict {
            outcome: Outcome::Skip,
            detail: detail.into(),
            report_only_violation: false,
        }
    }

    fn report_only(holds: bool, detail: impl fmt::Display) -> Self {
        Verdict {
            outcome: Outcome::Skip,
            detail: format!("report-only {} {detail}", if holds { "holds" } else { "violated" }),
            report_only_violation: !holds,
        }
    }
}

/// Which branch of the dichotomy an irreducible satisfies.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Lemma1Branch {
    /// All induced actions vanish, so both branches hold vacuously.
    Degenerate,
    RightZero,
    Antisymmetric,
    Neither,
}

/// `L/C_L(V)` is Lie, and the induced right actions are all zero or all
/// the negatives of the left actions.
pub fn lemma1_branch(v: &Irreducible) -> Result<(bool, Lemma1Branch)> {
    let m = v.module();
    let centraliser = m.centraliser();
    let induced = m.induced_on_quotient(&centraliser)?;
    let lie = induced.algebra().is_lie();
    let right_zero = induced.right_actions().iter().all(|r| r.is_zero());
    let antisymmetric = induced
        .left_actions()
        .iter()
        .zip(induced.right_actions())
        .all(|(l, r)| r == &l.neg());
    let branch = match (right_zero, antisymmetric) {
        (true, true) => Lemma1Branch::Degenerate,
        (true, false) => Lemma1Branch::RightZero,
        (false, true) => Lemma1Branch::Antisymmetric,
        (false, false) => Lemma1Branch::Neither,
    };
    Ok((lie, branch))
}

pub fn verify_lemma1(v: &Irreducible) -> Verdict {
    match lemma1_branch(v) {
        Ok((lie, branch)) => {
            let name = match branch {
                Lemma1Branch::Degenerate => "degenerate",
                Lemma1Branch::RightZero => "right-zero",
                Lemma1Branch::Antisymmetric => "antisymmetric",
                Lemma1Branch::Neither => "neither",
            };
            Verdict::new(
                lie && branch != Lemma1Branch::Neither,
                format!("dim {} quotient-lie {lie} branch {name}", v.dim()),
            )
        }
        Err(e) => Verdict::new(false, format!("error {e}")),
    }
}

/// Composition factors of `V` restricted to `U` fall into one class.
pub fn verify_theorem1(
    u: &Subspace,
    v: &Irreducible,
    mode: HypothesisMode,
    spin: &SpinConfig,
) -> Verdict {
    let alg = v.module().algebra();
    let run = || -> Result<(bool, String)> {
        let sub = alg.subalgebra(u)?;
        let restricted = v.module().restrict(&sub)?;
        if restricted.dim() == 0 {
            return Ok((true, "factors [] classes 0".into()));
        }
        let report = restricted.composition_series(spin)?;
        Ok((
            report.iso_classes.len() == 1,
            format!(
                "factors {:?} classes {}",
                report.factor_dims(),
                report.iso_classes.len()
            ),
        ))
    };
    let subnormal = match subnormal_chain(alg, u) {
        Ok(chain) => chain.subnormal,
        Err(e) => return Verdict::skip(format!("hypothesis {e}")),
    };
    if !subnormal && mode == HypothesisMode::Enforce {
        return Verdict::skip("hypothesis not subnormal");
    }
    match run() {
        Ok((ok, detail)) if subnormal => Verdict::new(ok, detail),
        Ok((ok, detail)) => Verdict::report_only(ok, detail),
        Err(e @ (Error::EnumerationBudget { .. } | Error::UnsupportedEnumeration(_))) => {
            Verdict::skip(format!("certification unavailable: {e}"))
        }
        Err(e) => Verdict::new(false, format!("error {e}")),
    }
}

/// `U^k V ⊆ λ_U^k V` for `1 ≤ k ≤ k_max` and each `V`.
pub fn verify_lemma2(alg: &LeibnizAlgebra, u: &Subspace, vs: &[Subspace], k_max: usize) -> Verdict {
    let run = || -> Result<Vec<(usize, usize)>> {
        let series = alg.lower_central_series(u)?;
        let mut failures = Vec::new();
        for (i, v) in vs.iter().enumerate() {
            let mut lambda = v.clone();
            for k in 1..=k_max {
                lambda = alg.product(u, &lambda)?;
                let power = alg.product(series.term(k), v)?;
                if !lambda.contains(&power)? {
                    failures.push((i, k));
                }
            }
        }
        Ok(failures)
    };
    match run() {
        Ok(f) if f.is_empty() => Verdict::new(true, format!("spaces {} k<={k_max}", vs.len())),
        Ok(f) => Verdict::new(false, format!("fails at (space,k) {f:?}")),
        Err(Error::NotSubalgebra) => Verdict::skip("hypothesis not a subalgebra"),
        Err(e) => Verdict::new(false, format!("error {e}")),
    }
}

fn residual_verdict(
    alg: &LeibnizAlgebra,
    u: &Subspace,
    mode: HypothesisMode,
    two_sided: bool,
) -> Verdict {
    let report = if two_sided {
        residual_ideal_check(alg, u, mode)
    } else {
        residual_right_ideal_check(alg, u, mode)
    };
    let report = match report {
        Ok(r) => r,
        Err(e @ (Error::NotSubnormal | Error::NotSubalgebra)) => {
            return Verdict::skip(format!("hypothesis {e}"))
        }
        Err(e) => return Verdict::new(false, format!("error {e}")),
    };
    let mut detail = format!(
        "r={} s={} dimR={}",
        report.chain_length,
        report.stabilized_at,
        report.residual.dim()
    );
    let mut broken = Vec::new();
    if !report.power_in_lambda {
        broken.push("U^(r+s)L<=lambda".to_string());
    }
    if !report.lambda_in_residual {
        broken.push("lambda<=R".to_string());
    }
    if !report.right_ideal {
        broken.push("RL<=R".to_string());
    }
    if report.left_ideal == Some(false) {
        broken.push("LR<=R".to_string());
    }
    if !report.invariant_failures.is_empty() {
        broken.push(format!("invariant-t{:?}", report.invariant_failures));
    }
    if !broken.is_empty() {
        write!(detail, " broken {}", broken.join(",")).expect("writing to a string");
    }
    if report.subnormal {
        Verdict::new(broken.is_empty(), detail)
    } else {
        Verdict::report_only(broken.is_empty(), detail)
    }
}

/// `RL ⊆ R` for the residual `R` of a subnormal subalgebra.
pub fn verify_corollary(alg: &LeibnizAlgebra, u: &Subspace, mode: HypothesisMode) -> Verdict {
    residual_verdict(alg, u, mode, false)
}

/// `LR ⊆ R` and the invariant `LR ⊆ λ_U^t L + R` for `t ≤ r + s`.
pub fn verify_theorem2(alg: &LeibnizAlgebra, u: &Subspace, mode: HypothesisMode) -> Verdict {
    residual_verdict(alg, u, mode, true)
}

/// Everything needed to re-run one check.
#[derive(Clone, Debug)]
pub struct Case {
    pub instance: String,
    pub check: CheckName,
    pub algebra: Arc<LeibnizAlgebra>,
    pub sub: Option<Subspace>,
    /// Lemma 2 test spaces.
    pub spaces: Vec<Subspace>,
    pub bimodule: Option<Bimodule>,
    pub mode: HypothesisMode,
    pub k_max: usize,
}

impl Case {
    pub fn run(&self, spin: &SpinConfig) -> Verdict {
        let alg = &self.algebra;
        let sub = || self.sub.clone().unwrap_or_else(|| alg.full());
        let certified = || -> std::result::Result<Irreducible, Verdict> {
            let m = self
                .bimodule
                .clone()
                .ok_or_else(|| Verdict::new(false, "error case has no bimodule"))?;
            match Irreducible::certify(m, spin) {
                Ok(Some(irr)) => Ok(irr),
                Ok(None) => Err(Verdict::skip("hypothesis not irreducible")),
                Err(e) => Err(Verdict::skip(format!("certification unavailable: {e}"))),
            }
        };
        match self.check {
            CheckName::Lemma1 => certified().map_or_else(|v| v, |irr| verify_lemma1(&irr)),
            CheckName::Theorem1 => certified()
                .map_or_else(|v| v, |irr| verify_theorem1(&sub(), &irr, self.mode, spin)),
            CheckName::Lemma2 => verify_lemma2(alg, &sub(), &self.spaces, self.k_max),
            CheckName::Corollary => verify_corollary(alg, &sub(), self.mode),
            CheckName::Theorem2 => verify_theorem2(alg, &sub(), self.mode),
        }
    }

    /// Self-contained text form; see [`Case::parse`].
    pub fn serialize(&self) -> String {
        let mut out = format!("case {} {}\n", self.instance, self.check);
        let mode = match self.mode {
            HypothesisMode::Enforce => "enforce",
            HypothesisMode::ReportOnly => "report-only",
        };
        writeln!(out, "mode {mode}").expect("writing to a string");
        writeln!(out, "k-max {}", self.k_max).expect("writing to a string");
        if let Some(s) = &self.sub {
            writeln!(out, "sub {}", io::format_rows(s)).expect("writing to a string");
        }
        for v in &self.spaces {
            writeln!(out, "space {}", io::format_rows(v)).expect("writing to a string");
        }
        out.push_str("begin-algebra\n");
        out.push_str(&io::write_algebra(&self.algebra));
        out.push_str("end\n");
        if let Some(m) = &self.bimodule {
            out.push_str("begin-bimodule\n");
            out.push_str(&io::write_bimodule(m));
            out.push_str("end\n");
        }
        out
    }

    pub fn parse(text: &str) -> Result<Case> {
        let lines: Vec<&str> = text.lines().collect();
        let mut i = 0;
        let mut header = None;
        let mut mode = HypothesisMode::Enforce;
        let mut k_max = 8;
        let mut sub_text = None;
        let mut space_texts = Vec::new();
        let mut algebra_block: Option<(usize, String)> = None;
        let mut bimodule_block: Option<(usize, String)> = None;
        while i < lines.len() {
            let line_no = i + 1;
            let l = lines[i].trim();
            i += 1;
            if l.is_empty() || l.starts_with('#') {
                continue;
            }
            let (kw, rest) = l.split_once(' ').unwrap_or((l, ""));
            match kw {
                "case" => {
                    let mut t = rest.split_whitespace();
                    let (Some(id), Some(check), None) = (t.next(), t.next(), t.next()) else {
                        return Err(Error::parse(line_no, "expected `case <id> <check>`"));
                    };
                    let check = check.parse().map_err(|m: String| Error::parse(line_no, m))?;
                    header = Some((id.to_string(), check));
                }
                "mode" => {
                    mode = match rest.trim() {
                        "enforce" => HypothesisMode::Enforce,
                        "report-only" => HypothesisMode::ReportOnly,
                        other => return Err(Error::parse(line_no, format!("unknown mode {other:?}"))),
                    }
                }
                "k-max" => {
                    k_max = rest
                        .trim()
                        .parse()
                        .map_err(|_| Error::parse(line_no, "invalid k-max"))?;
                }
                "sub" => sub_text = Some((line_no, rest.to_string())),
                "space" => space_texts.push((line_no, rest.to_string())),
                "begin-algebra" | "begin-bimodule" => {
                    let start = i;
                    let mut body = String::new();
                    loop {
                        let Some(l) = lines.get(i) else {
                            return Err(Error::parse(line_no, format!("unterminated {kw}")));
                        };
                        i += 1;
                        if l.trim() == "end" {
                            break;
                        }
                        body.push_str(l);
                        body.push('\n');
                    }
                    if kw == "begin-algebra" {
                        algebra_block = Some((start, body));
                    } else {
                        bimodule_block = Some((start, body));
                    }
                }
                _ => return Err(Error::parse(line_no, format!("unknown directive {kw:?}"))),
            }
        }
        let (instance, check) = header.ok_or_else(|| Error::parse(1, "missing `case` line"))?;
        let shift = |offset: usize, e: Error| match e {
            Error::Parse { line, message } => Error::parse(line + offset, message),
            other => other,
        };
        let (offset, body) = algebra_block.ok_or_else(|| Error::parse(lines.len(), "missing algebra block"))?;
        let algebra = Arc::new(io::parse_algebra(&body).map_err(|e| shift(offset, e))?);
        let rows = |(line, text): (usize, String)| {
            io::parse_rows(algebra.field(), algebra.dim(), &text).map_err(|e| match e {
                Error::Parse { message, .. } => Error::parse(line, message),
                other => other,
            })
        };
        let sub = sub_text.map(rows).transpose()?;
        let spaces = space_texts.into_iter().map(rows).collect::<Result<Vec<_>>>()?;
        let bimodule = bimodule_block
            .map(|(offset, body)| io::parse_bimodule(&body, &algebra).map_err(|e| shift(offset, e)))
            .transpose()?;
        Ok(Case {
            instance,
            check,
            algebra,
            sub,
            spaces,
            bimodule,
            mode,
            k_max,
        })
    }
}

#[derive(Clone, Debug)]
pub struct CheckResult {
    pub instance: String,
    pub check: CheckName,
    pub verdict: Verdict,
    /// Kept for failures and report-only violations.
    pub case: Option<Case>,
}

impl CheckResult {
    pub fn line(&self) -> String {
        format!(
            "{} {} {} {}",
            self.instance, self.check, self.verdict.outcome, self.verdict.detail
        )
    }
}

#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub fields: Vec<FieldSpec>,
    pub max_dim: usize,
    pub budget: usize,
    pub seed: u64,
    pub include_catalogue: bool,
    /// Also run the residual and composition checks on non-subnormal
    /// subalgebras, reporting instead of judging.
    pub report_only: bool,
    pub k_max: usize,
    pub spin: SpinConfig,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            fields: vec![FieldSpec::prime(2).expect("2 is prime")],
            max_dim: 5,
            budget: 50,
            seed: 0,
            include_catalogue: true,
            report_only: false,
            k_max: 8,
            spin: SpinConfig::default(),
        }
    }
}

#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub results: Vec<CheckResult>,
    pub report_only: bool,
}

impl SuiteReport {
    pub fn count(&self, outcome: Outcome) -> usize {
        self.results
            .iter()
            .filter(|r| r.verdict.outcome == outcome)
            .count()
    }

    pub fn report_only_violations(&self) -> usize {
        self.results
            .iter()
            .filter(|r| r.verdict.report_only_violation)
            .count()
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.results.iter().filter(|r| r.verdict.outcome == Outcome::Fail)
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for r in &self.results {
            out.push_str(&r.line());
            out.push('\n');
        }
        for outcome in [Outcome::Pass, Outcome::Fail, Outcome::Skip] {
            writeln!(out, "{outcome} {}", self.count(outcome)).expect("writing to a string");
        }
        if self.report_only {
            writeln!(out, "REPORT-ONLY-VIOLATIONS {}", self.report_only_violations())
                .expect("writing to a string");
        }
        out
    }

    /// Writes one `.case` file per failure and report-only violation.
    pub fn write_artifacts(&self, dir: &Path) -> Result<Vec<PathBuf>> {
        std::fs::create_dir_all(dir)?;
        let mut paths = Vec::new();
        for r in &self.results {
            if let Some(case) = &r.case {
                let stem: String = r
                    .instance
                    .chars()
                    .map(|c| if c.is_ascii_alphanumeric() || c == '-' { c } else { '_' })
                    .collect();
                let path = dir.join(format!("{stem}.{}.case", r.check));
                std::fs::write(&path, case.serialize())?;
                paths.push(path);
            }
        }
        Ok(paths)
    }
}

struct Task<'a> {
    instance: &'a Instance,
    cfg: &'a SuiteConfig,
    out: Vec<CheckResult>,
}

impl Task<'_> {
    fn push(&mut self, id: String, case: Case, verdict: Verdict) {
        let keep = verdict.outcome == Outcome::Fail || verdict.report_only_violation;
        self.out.push(CheckResult {
            instance: id,
            check: case.check,
            verdict,
            case: keep.then_some(case),
        });
    }

    /// Non-subnormal specimens are skipped with a reason unless the suite
    /// drops hypotheses.
    fn mode(&self) -> HypothesisMode {
        if self.cfg.report_only {
            HypothesisMode::ReportOnly
        } else {
            HypothesisMode::Enforce
        }
    }

    fn case(&self, id: &str, check: CheckName) -> Case {
        Case {
            instance: id.to_string(),
            check,
            algebra: self.instance.algebra.clone(),
            sub: None,
            spaces: Vec::new(),
            bimodule: None,
            mode: HypothesisMode::Enforce,
            k_max: self.cfg.k_max,
        }
    }

    fn run(mut self) -> Vec<CheckResult> {
        let inst = self.instance;
        let alg = &inst.algebra;
        let mut spaces = vec![alg.full()];
        spaces.extend(inst.specimens.iter().map(|s| s.space.clone()));
        spaces.dedup();

        for (j, s) in inst.specimens.iter().enumerate() {
            let id = format!("{}:u{j}", inst.id);
            let mut case = self.case(&id, CheckName::Lemma2);
            case.sub = Some(s.space.clone());
            case.spaces = spaces.clone();
            let verdict = case.run(&self.cfg.spin);
            self.push(id.clone(), case, verdict);

            let mode = self.mode();
            for check in [CheckName::Corollary, CheckName::Theorem2] {
                let mut case = self.case(&id, check);
                case.sub = Some(s.space.clone());
                case.mode = mode;
                let verdict = case.run(&self.cfg.spin);
                self.push(id.clone(), case, verdict);
            }
        }

        for (i, b) in inst.bimodules.iter().enumerate() {
            let id = format!("{}:m{i}", inst.id);
            let report = match b.composition_series(&self.cfg.spin) {
                Ok(r) => r,
                Err(e) => {
                    let mut case = self.case(&id, CheckName::Lemma1);
                    case.bimodule = Some(b.clone());
                    self.push(id, case, Verdict::skip(format!("certification unavailable: {e}")));
                    continue;
                }
            };
            for (c, class) in report.iso_classes.iter().enumerate() {
                let factor = &report.factors[class[0]];
                let fid = format!("{id}c{c}");
                let mut case = self.case(&fid, CheckName::Lemma1);
                case.bimodule = Some(factor.module().clone());
                self.push(fid.clone(), case, verify_lemma1(factor));

                for (j, s) in inst.specimens.iter().enumerate() {
                    let mode = self.mode();
                    let tid = format!("{}:u{j}:m{i}c{c}", inst.id);
                    let mut case = self.case(&tid, CheckName::Theorem1);
                    case.sub = Some(s.space.clone());
                    case.bimodule = Some(factor.module().clone());
                    case.mode = mode;
                    let verdict = verify_theorem1(&s.space, factor, mode, &self.cfg.spin);
                    self.push(tid, case, verdict);
                }
            }
        }
        self.out
    }
}

/// Catalogue instances (when enabled) followed by generated ones, per field.
pub fn suite_instances(cfg: &SuiteConfig) -> Vec<Instance> {
    let mut out = Vec::new();
    for &field in &cfg.fields {
        if cfg.include_catalogue {
            let mut rng = Rng::new(cfg.seed);
            for e in catalogue::catalogue(field) {
                if e.algebra.dim() > cfg.max_dim.max(1) {
                    continue;
                }
                let id = format!("cat-f{}-{}", field.token(), e.name());
                out.push(Instance::from_algebra(id, e.algebra, &mut rng));
            }
        }
        out.extend(generate(cfg.seed, field, cfg.max_dim, cfg.budget));
    }
    out
}

pub fn run_suite(cfg: &SuiteConfig) -> SuiteReport {
    run_instances(cfg, &suite_instances(cfg))
}

/// All checks on the given instances, in instance-id order.
pub fn run_instances(cfg: &SuiteConfig, instances: &[Instance]) -> SuiteReport {
    let per_instance = par::map(cfg.spin.strategy, instances, |instance| {
        Task {
            instance,
            cfg,
            out: Vec::new(),
        }
        .run()
    });
    let mut results: Vec<CheckResult> = per_instance.into_iter().flatten().collect();
    results.sort_by(|a, b| a.instance.cmp(&b.instance));
    SuiteReport {
        results,
        report_only: cfg.report_only,
    }
}
