//! Fault-injection fixtures. Each one perturbs a single piece of data and
//! reports which checks it flags compared with an unperturbed baseline.

use std::collections::BTreeSet;
use std::sync::Arc;

use serde::Serialize;

use crate::catalog;
use crate::cohopf::construct_frobenius_on_right_adjoint;
use crate::error::{Error, Result};
use crate::format::AlgebraFile;
use crate::frobenius::{normalize, solve_frobenius_form, verify_frobenius, FormOutcome, FrobeniusAlgebra};
use crate::functors::Adjunction;
use crate::hopf::{drinfeld_double, HopfMap};
use crate::linalg::Matrix;
use crate::pipeline::{run_theorems, MapChoice, RunOptions, TheoremReport};
use crate::rational::Rational;
use crate::repcat::HModule;
use crate::report::{Report, Status};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FixtureOutcome {
    pub name: String,
    pub targets: BTreeSet<String>,
    /// `suite/check` ids that failed under the fault.
    pub flagged: BTreeSet<String>,
    /// The baseline had no failures.
    pub baseline_clean: bool,
    /// Every flagged check carries a witness.
    pub witnessed: bool,
    /// Biconditionals whose two sides changed together, by id.
    pub flipped_together: Vec<String>,
    /// Free-form observations, e.g. a construction that refused the input.
    pub notes: Vec<String>,
}

impl FixtureOutcome {
    pub fn exact(&self) -> bool {
        self.baseline_clean && self.witnessed && self.flagged == self.targets
    }
}

fn set(ids: &[&str]) -> BTreeSet<String> {
    ids.iter().map(|s| s.to_string()).collect()
}

fn flagged_in_report(prefix: &str, r: &Report) -> (BTreeSet<String>, bool) {
    let fails: Vec<_> = r.failures().collect();
    let witnessed = fails.iter().all(|c| c.witness.is_some());
    (fails.iter().map(|c| format!("{prefix}{}", c.id)).collect(), witnessed)
}

fn flagged_in_theorems(r: &TheoremReport) -> (BTreeSet<String>, bool) {
    let mut out = BTreeSet::new();
    let mut witnessed = true;
    for s in &r.suites {
        let (f, w) = flagged_in_report(&format!("{}/", s.name), &s.report());
        out.extend(f);
        witnessed &= w;
    }
    (out, witnessed)
}

/// Biconditional checks that pass in both reports while both recorded
/// sides changed value.
fn flipped_together(base: &TheoremReport, fault: &TheoremReport) -> Vec<String> {
    let mut out = Vec::new();
    for s in &base.suites {
        for c in &s.checks {
            if !c.id.starts_with("theorem.") || c.scalars.len() < 2 {
                continue;
            }
            let Some(f) = fault.suite(&s.name).and_then(|fs| fs.get(&c.id)) else { continue };
            if c.status == Status::Pass
                && f.status == Status::Pass
                && c.scalars.iter().all(|(k, v)| f.scalars.get(k).is_some_and(|w| w != v))
            {
                out.push(format!("{}/{}", s.name, c.id));
            }
        }
    }
    out
}

fn compare_runs(name: &str, targets: &[&str], base: &TheoremReport, fault: &TheoremReport) -> FixtureOutcome {
    let (base_flagged, _) = flagged_in_theorems(base);
    let (flagged, witnessed) = flagged_in_theorems(fault);
    FixtureOutcome {
        name: name.into(),
        targets: set(targets),
        flagged,
        baseline_clean: base_flagged.is_empty(),
        witnessed,
        flipped_together: flipped_together(base, fault),
        notes: Vec::new(),
    }
}

/// The normalized solved form on `R(𝟙)` for the double of `ℚC₂`.
fn c2_double_form() -> Result<(Adjunction, FrobeniusAlgebra)> {
    let h = Arc::new(catalog::load("c2")?.to_hopf()?);
    let d = Arc::new(drinfeld_double(&h)?);
    let adj = Adjunction::new(h.clone(), d, HopfMap::double_inclusion(&h))?;
    let unit = HModule::trivial(&h);
    let r1 = adj.model.object(&unit)?;
    let m = adj.model.kelly_r2(&unit, &unit)?;
    match solve_frobenius_form(&r1, &m, &adj.model.kelly_r0())? {
        FormOutcome::Found { algebra, .. } => Ok((adj, normalize(&algebra))),
        FormOutcome::NotFound { .. } => Err(Error::Construction("no form on R(𝟙) for the double of C2".into())),
    }
}

fn form_fixture(name: &str, targets: &[&str], corrupt: impl FnOnce(&FrobeniusAlgebra) -> FrobeniusAlgebra) -> Result<FixtureOutcome> {
    let (adj, form) = c2_double_form()?;
    let (base_flagged, _) = flagged_in_report("frobenius_form/", &verify_frobenius(&form)?);
    let bad = corrupt(&form);
    let (flagged, witnessed) = flagged_in_report("frobenius_form/", &verify_frobenius(&bad)?);
    let mut notes = Vec::new();
    match construct_frobenius_on_right_adjoint(&adj, &bad) {
        Err(Error::Precondition(msg)) => notes.push(format!("construction refused: {msg}")),
        Err(e) => return Err(e),
        Ok(_) => notes.push("construction accepted the corrupted form".into()),
    }
    Ok(FixtureOutcome {
        name: name.into(),
        targets: set(targets),
        flagged,
        baseline_clean: base_flagged.is_empty(),
        witnessed,
        flipped_together: Vec::new(),
        notes,
    })
}

/// `ν ↦ 2ν` with `Δ` unchanged breaks exactly the two counit laws.
pub fn scaled_nu() -> Result<FixtureOutcome> {
    form_fixture("scaled_nu", &["frobenius_form/frobenius.counit_left", "frobenius_form/frobenius.counit_right"], |f| {
        let mut g = f.clone();
        g.nu = f.nu.scale(&Rational::from_integer(2));
        g
    })
}

/// `Δ ↦ Δ + (k⊗k)ν` with `ν(k) = 0` keeps both counit laws and breaks the
/// Frobenius law.
pub fn corrupted_delta() -> Result<FixtureOutcome> {
    form_fixture("corrupted_delta", &["frobenius_form/frobenius.law"], |f| {
        let k = Matrix::column(&f.nu.kernel_basis()[0]);
        let mut g = f.clone();
        g.delta = &f.delta + &(&k.kron(&k) * &f.nu);
        g
    })
}

fn diagonal_run(source: &AlgebraFile, target_pivot: Option<Vec<Rational>>) -> Result<TheoremReport> {
    let mut map = catalog::diagonal_map();
    if target_pivot.is_some() {
        map.target.pivot = target_pivot;
    }
    run_theorems(source, &RunOptions { map: MapChoice::File(map), ..RunOptions::default() })
}

fn basis_vector(n: usize, i: usize) -> Vec<Rational> {
    (0..n).map(|j| Rational::from_integer((i == j) as i64)).collect()
}

/// `ℚC₂` with the trivial R-matrix `1⊗1` mapped diagonally into the
/// bicharacter-braided `ℚC₂×C₂`: restriction is no longer braided.
pub fn mismatched_rmatrix() -> Result<FixtureOutcome> {
    let base = diagonal_run(&catalog::load("c2_super")?, None)?;
    let mut c2 = catalog::load("c2")?;
    c2.name = "C2_trivial_braiding".into();
    c2.rmatrix = Some(basis_vector(4, 0));
    c2.ribbon = Some(basis_vector(2, 0));
    let fault = diagonal_run(&c2, None)?;
    Ok(compare_runs(
        "mismatched_rmatrix",
        &["braided/braided.precondition.restriction", "ribbon/braided.precondition.restriction"],
        &base,
        &fault,
    ))
}

/// The bicharacter-braided `ℚC₂×C₂` with pivot `a` instead of `1`: twists
/// change, restriction and `R` stop being pivotal, `R` stays cobraided.
pub fn broken_twist() -> Result<FixtureOutcome> {
    let source = catalog::load("c2_super")?;
    let base = diagonal_run(&source, None)?;
    let fault = diagonal_run(&source, Some(basis_vector(4, 1)))?;
    Ok(compare_runs(
        "broken_twist",
        &["pivotal/pivotal.precondition.restriction", "ribbon/ribbon.functor_side", "ribbon/ribbon.pivotal"],
        &base,
        &fault,
    ))
}

pub fn all() -> Result<Vec<FixtureOutcome>> {
    Ok(vec![scaled_nu()?, corrupted_delta()?, mismatched_rmatrix()?, broken_twist()?])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_fixture_flags_exactly_its_targets() {
        for f in all().unwrap() {
            assert!(f.exact(), "{f:?}");
        }
    }

    #[test]
    fn broken_twist_flips_both_sides_and_pinpoints_pivotality() {
        let f = broken_twist().unwrap();
        assert!(f.flipped_together.contains(&"ribbon/theorem.ribbon".to_string()), "{f:?}");
        assert!(!f.flagged.contains("ribbon/ribbon.cobraided"));
    }

    #[test]
    fn corrupted_forms_are_refused_by_the_construction() {
        for f in [scaled_nu().unwrap(), corrupted_delta().unwrap()] {
            assert!(f.notes.iter().any(|n| n.starts_with("construction refused")), "{f:?}");
        }
    }
}
