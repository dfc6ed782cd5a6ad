//! Instance assembly and report documents for the command-line front end.

use std::sync::Arc;

use serde::Serialize;

use crate::cohopf::big_category_seeds;
use crate::error::{Error, Result};
use crate::format::{to_pretty_json, AlgebraFile, MapFile};
use crate::functors::Adjunction;
use crate::hopf::{drinfeld_double, verify_all, HopfAlgebra, HopfMap};
use crate::repcat::{GeneratorSet, HModule};
use crate::report::Report;
use crate::theorems::{has_failure, has_theorem_violation, run_all, Instance, Suite};

/// Largest cyclic submodule kept as a seed of the big category.
pub const BIG_SEED_MAX_DIM: usize = 2;
/// Number of cyclic submodules kept as seeds of the big category.
pub const BIG_SEED_LIMIT: usize = 3;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Debug)]
pub enum MapChoice {
    DoubleInclusion,
    Identity,
    File(MapFile),
}

#[derive(Clone, Debug)]
pub struct RunOptions {
    pub map: MapChoice,
    /// Seed names to keep; `None` keeps the file's designated seeds.
    pub seeds: Option<Vec<String>>,
    pub depth: usize,
    pub normalize_form: bool,
}

impl Default for RunOptions {
    fn default() -> Self {
        Self { map: MapChoice::DoubleInclusion, seeds: None, depth: 2, normalize_form: true }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Descriptor {
    pub algebra: String,
    pub target: String,
    pub map: String,
    pub seeds: Vec<String>,
    pub target_seeds: Vec<String>,
    pub depth: usize,
    pub normalize_form: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TheoremReport {
    pub version: String,
    pub instance: Descriptor,
    pub suites: Vec<Suite>,
}

impl TheoremReport {
    pub fn to_json(&self) -> String {
        to_pretty_json(self)
    }

    pub fn suite(&self, name: &str) -> Option<&Suite> {
        self.suites.iter().find(|s| s.name == name)
    }

    /// Exit status: 0 clean, 1 check failure, 3 theorem violation.
    pub fn exit_code(&self) -> i32 {
        if has_theorem_violation(&self.suites) {
            3
        } else if has_failure(&self.suites) {
            1
        } else {
            0
        }
    }
}

/// Report of the Hopf-axiom run on a single algebra.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HopfReport {
    pub version: String,
    pub algebra: String,
    pub checks: Report,
}

impl HopfReport {
    pub fn new(h: &HopfAlgebra) -> Self {
        Self { version: VERSION.into(), algebra: h.name.clone(), checks: verify_all(h) }
    }

    pub fn to_json(&self) -> String {
        to_pretty_json(self)
    }

    pub fn exit_code(&self) -> i32 {
        i32::from(self.checks.any_failed())
    }
}

/// Exit status for an error raised before or during a run.
pub fn error_exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse(_)
        | Error::Precondition(_)
        | Error::UnsupportedExtension(_)
        | Error::AlgebraMismatch(_)
        | Error::Coverage(_) => 2,
        Error::TheoremViolation(_) => 3,
        _ => 3,
    }
}

fn select_seeds(all: Vec<HModule>, names: Option<&[String]>) -> Result<Vec<HModule>> {
    let Some(names) = names else { return Ok(all) };
    names
        .iter()
        .map(|n| {
            all.iter().find(|m| m.name() == n).cloned().ok_or_else(|| {
                let known: Vec<&str> = all.iter().map(|m| m.name()).collect();
                Error::Parse(format!("unknown seed `{n}`; available: {}", known.join(", ")))
            })
        })
        .collect()
}

fn require_verified(h: &HopfAlgebra) -> Result<()> {
    match verify_all(h).failures().next() {
        Some(c) => Err(Error::Precondition(format!("{} fails {}", h.name, c.id))),
        None => Ok(()),
    }
}

/// Builds the adjunction and both generator sets.
pub fn build_instance(file: &AlgebraFile, opts: &RunOptions) -> Result<(Instance, Descriptor)> {
    let small = Arc::new(file.to_hopf()?);
    require_verified(&small)?;
    let seeds = select_seeds(file.seed_modules(&small)?, opts.seeds.as_deref())?;
    let d_gen = GeneratorSet::new(&small, &seeds, opts.depth)?;
    let (big, map, target_seed_list): (Arc<HopfAlgebra>, HopfMap, Option<Vec<HModule>>) = match &opts.map {
        MapChoice::Identity => (small.clone(), HopfMap::identity(&small), Some(seeds.clone())),
        MapChoice::DoubleInclusion => {
            (Arc::new(drinfeld_double(&small)?), HopfMap::double_inclusion(&small), None)
        }
        MapChoice::File(mf) => {
            let (target, map) = mf.to_map(small.dim())?;
            let target = Arc::new(target);
            require_verified(&target)?;
            let tseeds = mf.target.seed_modules(&target)?;
            (target, map, Some(tseeds))
        }
    };
    let adj = Adjunction::new(small.clone(), big.clone(), map.clone())?;
    let target_seeds = match target_seed_list {
        Some(s) => s,
        None => big_category_seeds(&adj, &d_gen, BIG_SEED_MAX_DIM, BIG_SEED_LIMIT)?,
    };
    let c_gen = GeneratorSet::new(&big, &target_seeds, opts.depth)?;
    let descriptor = Descriptor {
        algebra: small.name.clone(),
        target: big.name.clone(),
        map: map.name.clone(),
        seeds: seeds.iter().map(|m| m.name().to_string()).collect(),
        target_seeds: target_seeds.iter().map(|m| m.name().to_string()).collect(),
        depth: opts.depth,
        normalize_form: opts.normalize_form,
    };
    Ok((Instance { adj, d_gen, c_gen }, descriptor))
}

/// Builds the instance and runs every suite.
pub fn run_theorems(file: &AlgebraFile, opts: &RunOptions) -> Result<TheoremReport> {
    let (inst, instance) = build_instance(file, opts)?;
    let suites = run_all(&inst, opts.normalize_form)?;
    Ok(TheoremReport { version: VERSION.into(), instance, suites })
}

/// Runs `f` on a dedicated pool with `threads` workers.
pub fn with_threads<T: Send>(threads: usize, f: impl FnOnce() -> T + Send) -> Result<T> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| Error::Construction(format!("thread pool: {e}")))?;
    Ok(pool.install(f))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::report::Status;

    #[test]
    fn trivial_identity_passes_everything() {
        let file = catalog::load("trivial").unwrap();
        let opts = RunOptions { map: MapChoice::Identity, ..RunOptions::default() };
        let report = run_theorems(&file, &opts).unwrap();
        assert_eq!(report.exit_code(), 0, "{}", report.to_json());
        let fails: Vec<_> =
            report.suites.iter().flat_map(|s| &s.checks).filter(|c| c.status == Status::Fail).collect();
        assert!(fails.is_empty());
    }

    #[test]
    fn c2_double_inclusion_outcomes() {
        let file = catalog::load("c2").unwrap();
        let report = run_theorems(&file, &RunOptions::default()).unwrap();
        assert_eq!(report.exit_code(), 0, "{}", report.to_json());
        let pivotal = report.suite("pivotal").unwrap();
        assert_eq!(pivotal.get("theorem.pivotal").unwrap().status, Status::Pass);
        assert_eq!(report.suite("ribbon").unwrap().checks[0].status, Status::Skipped);
        assert_eq!(report.suite("separability").unwrap().get("theorem.separable").unwrap().status, Status::Pass);
    }

    #[test]
    fn unknown_seed_is_an_input_error() {
        let file = catalog::load("c2").unwrap();
        let opts = RunOptions { seeds: Some(vec!["nope".into()]), ..RunOptions::default() };
        let err = run_theorems(&file, &opts).unwrap_err();
        assert_eq!(error_exit_code(&err), 2);
    }
}
