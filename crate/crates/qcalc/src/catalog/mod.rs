//! Declarative registry of q-integral identities.
//!
//! Each [`IdentityRecord`] names one identity, declares its parameter
//! domains, and wires a builder that produces closed-form evaluators for the
//! integrand and its q-antiderivative. [`run_suite`] samples parameters
//! uniformly inside the declared domains (with a guard band at the
//! boundaries), runs the dual-route residual check on every draw, and
//! assembles a deterministic report.

mod aux2phi1;
mod bessel;
mod poly;
mod struve;
pub(crate) mod util;

pub mod aux;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use std::sync::OnceLock;

use crate::lagrangian::{check_indefinite, default_depth, IdentityInstance};
use crate::qcore::{QContext, QError, QResult};

/// Domain descriptor for one record parameter.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Domain {
    /// Real interval; sampling keeps a guard band of 0.05 from each end.
    Real { lo: f64, hi: f64 },
    /// Integer range, inclusive.
    Int { lo: i64, hi: i64 },
    /// Fixed value (encoded example instances).
    Pinned(f64),
}

#[derive(Debug, Clone, Copy)]
pub struct ParamSpec {
    pub name: &'static str,
    pub domain: Domain,
}

/// A concrete parameter assignment, by name.
#[derive(Debug, Clone, Default)]
pub struct Params(Vec<(String, f64)>);

impl Params {
    pub fn new() -> Self {
        Params(Vec::new())
    }

    pub fn set(mut self, name: &str, value: f64) -> Self {
        self.0.retain(|(n, _)| n != name);
        self.0.push((name.to_string(), value));
        self
    }

    pub fn get(&self, name: &str) -> QResult<f64> {
        self.0
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, v)| *v)
            .ok_or_else(|| QError::Domain(format!("missing parameter `{name}`")))
    }

    pub fn get_usize(&self, name: &str) -> QResult<usize> {
        let v = self.get(name)?;
        if v < 0.0 || v.fract() != 0.0 {
            return Err(QError::Domain(format!(
                "parameter `{name}` must be a non-negative integer, got {v}"
            )));
        }
        Ok(v as usize)
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.0.iter().map(|(n, _)| n.as_str())
    }
}

/// How a record is verified.
#[derive(Clone, Copy)]
pub enum Check {
    /// Standard dual-route indefinite check: build the instance, anchor the
    /// check at an `x` drawn from `x_range`, and require both residuals
    /// below the record tolerance.
    Indefinite {
        build: fn(&Params, &QContext) -> QResult<IdentityInstance>,
        x_range: fn(&Params, &QContext) -> (f64, f64),
    },
    /// Custom definite/summation check returning a single residual.
    Custom(fn(&Params, &QContext) -> QResult<f64>),
}

/// One identity in the registry.
pub struct IdentityRecord {
    /// Stable slug, unique across the registry.
    pub id: &'static str,
    /// Statement of the identity in plain ASCII math.
    pub anchor: &'static str,
    pub params: &'static [ParamSpec],
    /// Residual tolerance for the suite verdict.
    pub tolerance: f64,
    /// Check strategies exercised for this record.
    pub strategies: &'static [&'static str],
    /// `q` values outside this closed interval are skipped for this record.
    pub q_domain: (f64, f64),
    pub check: Check,
}

impl IdentityRecord {
    /// Validate a parameter assignment against the declared domains.
    pub fn validate(&self, p: &Params) -> QResult<()> {
        for spec in self.params {
            let v = p.get(spec.name)?;
            match spec.domain {
                Domain::Real { lo, hi } => {
                    if v < lo || v > hi {
                        return Err(QError::Domain(format!(
                            "violates {} in [{lo}, {hi}] (got {v})",
                            spec.name
                        )));
                    }
                }
                Domain::Int { lo, hi } => {
                    if v.fract() != 0.0 || v < lo as f64 || v > hi as f64 {
                        return Err(QError::Domain(format!(
                            "violates {} integer in [{lo}, {hi}] (got {v})",
                            spec.name
                        )));
                    }
                }
                Domain::Pinned(want) => {
                    if (v - want).abs() > 1e-12 {
                        return Err(QError::Domain(format!(
                            "violates {} pinned to {want} (got {v})",
                            spec.name
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// Default parameter assignment: midpoints of real domains, the middle
    /// of integer domains, pinned values as pinned.
    pub fn default_params(&self) -> Params {
        let mut p = Params::new();
        for spec in self.params {
            let v = match spec.domain {
                Domain::Real { lo, hi } => 0.5 * (lo + hi),
                Domain::Int { lo, hi } => ((lo + hi) / 2) as f64,
                Domain::Pinned(v) => v,
            };
            p = p.set(spec.name, v);
        }
        p
    }
}

/// The full registry, in catalog order.
pub fn registry() -> &'static [IdentityRecord] {
    static REG: OnceLock<Vec<IdentityRecord>> = OnceLock::new();
    REG.get_or_init(|| {
        let mut v = Vec::new();
        bessel::register(&mut v);
        aux2phi1::register(&mut v);
        poly::register(&mut v);
        struve::register(&mut v);
        debug_assert!(unique_ids(&v), "duplicate record ids");
        v
    })
}

fn unique_ids(v: &[IdentityRecord]) -> bool {
    let mut ids: Vec<&str> = v.iter().map(|r| r.id).collect();
    ids.sort_unstable();
    ids.windows(2).all(|w| w[0] != w[1])
}

/// Look up a record by id.
pub fn find(id: &str) -> QResult<&'static IdentityRecord> {
    registry()
        .iter()
        .find(|r| r.id == id)
        .ok_or_else(|| QError::UnknownIdentity(id.to_string()))
}

/// Deterministic listing of (id, anchor, parameter names).
pub fn list_identities() -> Vec<(&'static str, &'static str, Vec<&'static str>)> {
    registry()
        .iter()
        .map(|r| (r.id, r.anchor, r.params.iter().map(|p| p.name).collect()))
        .collect()
}

/// Build a fully wired instance for an indefinite record; custom records
/// have no instance representation.
pub fn build(id: &str, params: &Params, ctx: &QContext) -> QResult<IdentityInstance> {
    let rec = find(id)?;
    rec.validate(params)?;
    match rec.check {
        Check::Indefinite { build, .. } => build(params, ctx),
        Check::Custom(_) => Err(QError::Domain(format!(
            "record {id} uses a custom definite check and has no indefinite instance"
        ))),
    }
}

/// Run the full check for one record at one parameter assignment, returning
/// the worst residual over the active strategies.
pub fn check_record(
    rec: &IdentityRecord,
    params: &Params,
    x: Option<f64>,
    ctx: &QContext,
) -> QResult<f64> {
    rec.validate(params)?;
    match rec.check {
        Check::Indefinite { build, x_range } => {
            let inst = build(params, ctx)?;
            let x = match x {
                Some(x) => x,
                None => {
                    let (lo, hi) = x_range(params, ctx);
                    0.5 * (lo + hi)
                }
            };
            let res = check_indefinite(&inst, x, default_depth(x, ctx), ctx)?;
            Ok(res.worst())
        }
        Check::Custom(f) => f(params, ctx),
    }
}

/// Suite configuration.
#[derive(Debug, Clone)]
pub struct SuiteConfig {
    /// Parameter draws per record and per q value.
    pub draws: usize,
    pub seed: u64,
    /// q lattice; the default spans the supported range away from both ends.
    pub q_values: Vec<f64>,
    /// Glob over record ids (`*` wildcards).
    pub filter: String,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig { draws: 5, seed: 7, q_values: vec![0.2, 0.5, 0.8], filter: "*".into() }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
    Skipped,
}

impl Verdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Skipped => "skipped",
        }
    }
}

/// Per-record outcome of a suite run.
#[derive(Debug, Clone)]
pub struct RecordReport {
    pub id: &'static str,
    pub anchor: &'static str,
    pub draws: usize,
    pub worst_residual: f64,
    pub tolerance: f64,
    pub verdict: Verdict,
    /// Diagnostic for the first failure, if any.
    pub note: Option<String>,
}

/// Whole-suite outcome, in registry order.
#[derive(Debug, Clone)]
pub struct CheckReport {
    pub entries: Vec<RecordReport>,
}

impl CheckReport {
    pub fn all_pass(&self) -> bool {
        self.entries.iter().all(|e| e.verdict != Verdict::Fail)
    }

    pub fn failures(&self) -> usize {
        self.entries.iter().filter(|e| e.verdict == Verdict::Fail).count()
    }
}

/// Simple `*`-glob match over record ids.
pub fn glob_match(pattern: &str, id: &str) -> bool {
    fn inner(p: &[u8], s: &[u8]) -> bool {
        match (p.first(), s.first()) {
            (None, None) => true,
            (Some(b'*'), _) => inner(&p[1..], s) || (!s.is_empty() && inner(p, &s[1..])),
            (Some(pc), Some(sc)) if pc == sc => inner(&p[1..], &s[1..]),
            _ => false,
        }
    }
    inner(pattern.as_bytes(), id.as_bytes())
}

fn sample_domain(domain: Domain, rng: &mut ChaCha8Rng) -> f64 {
    match domain {
        Domain::Real { lo, hi } => {
            let width = hi - lo;
            let band = (0.05f64).min(0.25 * width);
            rng.gen_range((lo + band)..=(hi - band))
        }
        Domain::Int { lo, hi } => rng.gen_range(lo..=hi) as f64,
        Domain::Pinned(v) => v,
    }
}

fn run_record(rec: &IdentityRecord, index: usize, cfg: &SuiteConfig) -> RecordReport {
    let mut rng = ChaCha8Rng::seed_from_u64(
        cfg.seed ^ (0x9e37_79b9_7f4a_7c15u64.wrapping_mul(index as u64 + 1)),
    );
    let mut worst = 0.0f64;
    let mut draws_run = 0usize;
    let mut note = None;
    for &q in &cfg.q_values {
        if q < rec.q_domain.0 || q > rec.q_domain.1 {
            continue;
        }
        let ctx = match QContext::new(q) {
            Ok(c) => c,
            Err(e) => {
                note.get_or_insert(format!("q = {q}: {e}"));
                continue;
            }
        };
        for _ in 0..cfg.draws {
            let mut params = Params::new();
            for spec in rec.params {
                params = params.set(spec.name, sample_domain(spec.domain, &mut rng));
            }
            let outcome = match rec.check {
                Check::Indefinite { build, x_range } => {
                    let (lo, hi) = x_range(&params, &ctx);
                    let x = rng.gen_range(lo..hi);
                    build(&params, &ctx).and_then(|inst| {
                        check_indefinite(&inst, x, default_depth(x, &ctx), &ctx).map(|r| r.worst())
                    })
                }
                Check::Custom(f) => f(&params, &ctx),
            };
            match outcome {
                Ok(residual) => {
                    draws_run += 1;
                    if residual > worst {
                        worst = residual;
                    }
                    if residual > rec.tolerance && note.is_none() {
                        note = Some(format!("residual {residual:.3e} at q = {q}"));
                    }
                }
                Err(e) => {
                    draws_run += 1;
                    worst = f64::INFINITY;
                    note.get_or_insert(format!("q = {q}: {e}"));
                }
            }
        }
    }
    let verdict = if draws_run == 0 {
        Verdict::Skipped
    } else if worst <= rec.tolerance {
        Verdict::Pass
    } else {
        Verdict::Fail
    };
    RecordReport {
        id: rec.id,
        anchor: rec.anchor,
        draws: draws_run,
        worst_residual: worst,
        tolerance: rec.tolerance,
        verdict,
        note,
    }
}

/// Run every record matching the filter; deterministic given the seed, and
/// reported in registry order regardless of worker scheduling.
pub fn run_suite(cfg: &SuiteConfig) -> CheckReport {
    let selected: Vec<(usize, &IdentityRecord)> = registry()
        .iter()
        .enumerate()
        .filter(|(_, r)| glob_match(&cfg.filter, r.id))
        .collect();
    let entries: Vec<RecordReport> = selected
        .par_iter()
        .map(|(index, rec)| run_record(rec, *index, cfg))
        .collect();
    CheckReport { entries }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn glob_matching() {
        assert!(glob_match("*", "anything"));
        assert!(glob_match("thm3.1-*", "thm3.1-eq-jo"));
        assert!(!glob_match("thm3.1-*", "thm3.3-eq-x"));
        assert!(glob_match("*sw*", "cor-sw-sum"));
        assert!(glob_match("abc", "abc"));
        assert!(!glob_match("abc", "abcd"));
    }

    #[test]
    fn registry_ids_unique_and_lookup_fails_cleanly() {
        assert!(unique_ids(registry()));
        assert!(find("no-such-id").is_err());
    }

    #[test]
    fn registry_contains_pinned_ids() {
        for id in [
            "thm3.1-eq-ghabg",
            "thm3.1-eq-jo",
            "thm4.3-eq-2145gg",
            "cor-sw-sum",
            "prop-legendre-product",
            "thm3.5-example-zero",
        ] {
            assert!(find(id).is_ok(), "missing {id}");
        }
    }

    #[test]
    fn registry_is_large_enough() {
        assert!(registry().len() >= 38, "only {} records", registry().len());
    }

    #[test]
    fn empty_filter_matches_nothing() {
        let cfg = SuiteConfig { filter: "no-such-*".into(), draws: 1, ..Default::default() };
        let report = run_suite(&cfg);
        assert!(report.entries.is_empty());
        assert!(report.all_pass());
    }

    #[test]
    fn zero_draws_reports_skipped() {
        let cfg =
            SuiteConfig { filter: "thm3.1-eq-ghabg".into(), draws: 0, ..Default::default() };
        let report = run_suite(&cfg);
        assert_eq!(report.entries.len(), 1);
        assert_eq!(report.entries[0].verdict, Verdict::Skipped);
    }
}
