//! Subnormality via the canonical ideal-closure chain, and the two
//! ideality properties of the nilpotent residual of a subnormal subalgebra.
//!
//! For a subalgebra `U ≤ L` the chain `W_0 = L`, `W_{i+1}` = the ideal closure
//! of `U` in `W_i`, descends fastest among all chains of successive ideals
//! through `U`: if `L = U_0 ▷ U_1 ▷ … ▷ U_r = U` then `W_i ⊆ U_i` by induction.
//! So `U` is subnormal iff the canonical chain reaches `U`, and the number of
//! steps it takes is the minimal defect.

use crate::algebra::LeibnizAlgebra;
use crate::error::{Error, Result};
use crate::subspace::Subspace;

/// `L = W_0 ⊋ W_1 ⊋ … ⊋ W_t`, the strictly descending canonical chain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainReport {
    pub chain: Vec<Subspace>,
    /// Whether the chain ends at the subalgebra itself.
    pub subnormal: bool,
    /// `t`, when subnormal.
    pub defect: Option<usize>,
}

impl ChainReport {
    pub fn dims(&self) -> Vec<usize> {
        self.chain.iter().map(Subspace::dim).collect()
    }

    /// Number of strict steps taken by the chain (the defect when subnormal).
    pub fn steps(&self) -> usize {
        self.chain.len() - 1
    }
}

/// Whether a residual check should refuse non-subnormal input or just report.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum HypothesisMode {
    #[default]
    Enforce,
    ReportOnly,
}

/// Least `I` with `U ⊆ I ⊆ W`, `W·I ⊆ I` and `I·W ⊆ I`.
pub fn ideal_closure(alg: &LeibnizAlgebra, u: &Subspace, w: &Subspace) -> Result<Subspace> {
    alg.check_subspace(u)?;
    if !w.contains(u)? {
        return Err(Error::NotContained);
    }
    let mut cur = u.clone();
    for _ in 0..=alg.dim() {
        let next = cur
            .sum(&alg.product(w, &cur)?)?
            .sum(&alg.product(&cur, w)?)?;
        if next == cur {
            return Ok(cur);
        }
        cur = next;
    }
    panic!("ideal closure failed to stabilise within dim + 1 steps");
}

pub fn subnormal_chain(alg: &LeibnizAlgebra, u: &Subspace) -> Result<ChainReport> {
    if !alg.is_subalgebra(u)? {
        return Err(Error::NotSubalgebra);
    }
    let mut chain = vec![alg.full()];
    for _ in 0..=alg.dim() {
        let last = chain.last().expect("chain is nonempty");
        let next = ideal_closure(alg, u, last)?;
        if &next == last {
            let subnormal = &next == u;
            let defect = subnormal.then(|| chain.len() - 1);
            return Ok(ChainReport {
                chain,
                subnormal,
                defect,
            });
        }
        chain.push(next);
    }
    panic!("subnormal chain failed to stabilise within dim + 1 steps");
}

/// Witnesses for the residual ideality checks of a subalgebra `U` with
/// defect `r` and lower central series stabilising at `U^s = R`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResidualReport {
    pub subnormal: bool,
    /// `r`: the defect, or the length of the canonical chain when `U` is not
    /// subnormal (report-only mode).
    pub chain_length: usize,
    pub stabilized_at: usize,
    pub residual: Subspace,
    /// `λ_U^{r+s} L`.
    pub lambda_term: Subspace,
    /// `U^{r+s}L ⊆ λ_U^{r+s}L`.
    pub power_in_lambda: bool,
    /// `λ_U^{r+s}L ⊆ U^s`.
    pub lambda_in_residual: bool,
    /// `RL ⊆ R`.
    pub right_ideal: bool,
    /// `LR ⊆ R`; `None` for the right-ideal check alone.
    pub left_ideal: Option<bool>,
    /// Values of `t ≤ r+s` at which `LR ⊆ λ_U^t L + R` fails.
    pub invariant_failures: Vec<usize>,
}

impl ResidualReport {
    /// Whether every inclusion computed for this report holds.
    pub fn holds(&self) -> bool {
        self.power_in_lambda
            && self.lambda_in_residual
            && self.right_ideal
            && self.left_ideal.unwrap_or(true)
            && self.invariant_failures.is_empty()
    }
}

fn hypothesis(
    alg: &LeibnizAlgebra,
    u: &Subspace,
    mode: HypothesisMode,
) -> Result<ChainReport> {
    let chain = subnormal_chain(alg, u)?;
    if !chain.subnormal && mode == HypothesisMode::Enforce {
        return Err(Error::NotSubnormal);
    }
    Ok(chain)
}

/// `RL ⊆ R` through `RL = U^{r+s}L ⊆ λ_U^{r+s}L ⊆ U^s = R`.
pub fn residual_right_ideal_check(
    alg: &LeibnizAlgebra,
    u: &Subspace,
    mode: HypothesisMode,
) -> Result<ResidualReport> {
    let chain = hypothesis(alg, u, mode)?;
    right_ideal_report(alg, u, &chain)
}

fn right_ideal_report(
    alg: &LeibnizAlgebra,
    u: &Subspace,
    chain: &ChainReport,
) -> Result<ResidualReport> {
    let series = alg.lower_central_series(u)?;
    let r = chain.steps();
    let s = series.stabilized_at;
    let l = alg.full();
    let lambda_term = alg.lambda_power(u, &l, r + s)?;
    let power_l = alg.product(series.term(r + s), &l)?;
    let residual = series.residual.clone();
    Ok(ResidualReport {
        subnormal: chain.subnormal,
        chain_length: r,
        stabilized_at: s,
        power_in_lambda: lambda_term.contains(&power_l)?,
        lambda_in_residual: series.term(s).contains(&lambda_term)?,
        right_ideal: residual.contains(&alg.product(&residual, &l)?)?,
        left_ideal: None,
        invariant_failures: Vec::new(),
        residual,
        lambda_term,
    })
}

/// Both `RL ⊆ R` and `LR ⊆ R`, plus the inductive invariant
/// `LR ⊆ λ_U^t L + R` for every `0 ≤ t ≤ r+s`.
pub fn residual_ideal_check(
    alg: &LeibnizAlgebra,
    u: &Subspace,
    mode: HypothesisMode,
) -> Result<ResidualReport> {
    let chain = hypothesis(alg, u, mode)?;
    let mut report = right_ideal_report(alg, u, &chain)?;
    let l = alg.full();
    let lr = alg.product(&l, &report.residual)?;
    report.left_ideal = Some(report.residual.contains(&lr)?);
    let mut lambda = l.clone();
    for t in 0..=report.chain_length + report.stabilized_at {
        if t > 0 {
            lambda = alg.product(u, &lambda)?;
        }
        if !lambda.sum(&report.residual)?.contains(&lr)? {
            report.invariant_failures.push(t);
        }
    }
    Ok(report)
}
