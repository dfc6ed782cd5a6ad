//! Theorem suites over a built adjunction instance.
//!
//! Each biconditional is evaluated from two independent sides: the algebra
//! side through [`crate::frobenius`], the functor side through
//! [`crate::functors`]. Checks whose ids start with `theorem.` assert a
//! conclusion that must hold whenever the suite's hypotheses do; a failure
//! there is a bug, not a property of the input.

use std::sync::Arc;

use serde::Serialize;

use crate::cohopf::{
    check_condition_main, check_hl_unit_invertible, check_operator_relations, construct_frobenius_on_right_adjoint,
    half_braiding_fn, half_braiding_on_r1, hl_unit_transformation, kappa, tensor_endofunctor, FrobeniusOnRightAdjoint,
    OperatorFault,
};
use crate::error::{Error, Result};
use crate::frobenius::{
    classify, normalize, push_through_functor, solve_frobenius_form, symmetric_alternate_check, verify_frobenius,
    FormOutcome, FrobeniusAlgebra,
};
use crate::functors::{
    check_frobenius_functor_equations, check_functoriality, check_monoidal, check_natural, check_ribbon_category,
    check_zeta, is_braided_functor, is_cobraided_functor, is_pivotal_functor, is_ribbon_functor, Adjunction, Functor,
};
use crate::rational::Rational;
use crate::repcat::{check_half_braiding, pivotal_iso, GeneratorSet, HModule};
use crate::report::{Check, Report, Status, Witness};

/// A restriction/coinduction adjunction with generator sets on both sides.
#[derive(Clone)]
pub struct Instance {
    pub adj: Adjunction,
    /// Generators of the small category, where `R` is defined.
    pub d_gen: GeneratorSet,
    /// Generators of the big category, where `U` is defined.
    pub c_gen: GeneratorSet,
}

/// Named group of checks in a theorem report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Suite {
    pub name: String,
    pub checks: Vec<Check>,
}

impl Suite {
    fn new(name: &str, report: Report) -> Self {
        Self { name: name.into(), checks: report.checks }
    }

    pub fn report(&self) -> Report {
        Report { checks: self.checks.clone() }
    }

    pub fn get(&self, id: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.id == id)
    }

    /// A suite consisting of one skipped record.
    fn skipped(name: &str, reason: impl Into<String>) -> Self {
        Self { name: name.into(), checks: vec![Check::skipped(format!("{name}.suite"), "hypotheses of the suite", reason)] }
    }
}

fn flag(b: bool) -> Rational {
    Rational::from_integer(b as i64)
}

fn theorem(mut c: Check) -> Check {
    c.id = format!("theorem.{}", c.id);
    c
}

fn renamed(mut c: Check, id: &str) -> Check {
    c.id = id.into();
    c
}

/// `lhs ⟺ rhs`, with both sides recorded as 0/1 scalars.
fn biconditional(id: &str, anchor: &str, lhs_name: &str, lhs: bool, rhs_name: &str, rhs: bool) -> Check {
    let failure = (lhs != rhs).then(|| Witness::at(vec![]).detail(format!("{lhs_name} = {lhs}, {rhs_name} = {rhs}")));
    Check::from_outcome(id, anchor, 1, failure).with_scalar(lhs_name, flag(lhs)).with_scalar(rhs_name, flag(rhs))
}

fn unit_of(adj: &Adjunction) -> HModule {
    HModule::trivial(&adj.model.small)
}

fn has_pivots(adj: &Adjunction) -> Option<String> {
    [&adj.model.small, &adj.model.big]
        .into_iter()
        .find(|h| h.pivot.is_none())
        .map(|h| format!("{} has no pivot", h.name))
}

fn has_braidings(adj: &Adjunction) -> Option<String> {
    [&adj.model.small, &adj.model.big]
        .into_iter()
        .find(|h| h.rmatrix.is_none())
        .map(|h| format!("{} has no R-matrix", h.name))
}

fn has_ribbons(adj: &Adjunction) -> Option<String> {
    has_braidings(adj).or_else(|| has_pivots(adj)).or_else(|| {
        [&adj.model.small, &adj.model.big]
            .into_iter()
            .find(|h| h.ribbon.is_none())
            .map(|h| format!("{} has no ribbon element", h.name))
    })
}

// ---------------------------------------------------------------------------
// Adjunction and standing hypotheses

pub fn adjunction_suite(inst: &Instance) -> Result<Suite> {
    let adj = &inst.adj;
    let mut report = adj.check_snakes(&inst.d_gen, &inst.c_gen)?;
    report.extend(check_natural(&adj.unit_transformation(), &inst.c_gen, true)?);
    report.extend(check_natural(&adj.counit_transformation(), &inst.d_gen, true)?);
    report.extend(check_functoriality(&adj.right, &inst.d_gen)?);
    report.extend(check_monoidal(&adj.right, &inst.d_gen)?);
    report.push(renamed(check_zeta(&adj.left, &inst.c_gen)?, "zeta.inverse.restriction"));
    Ok(Suite::new("adjunction", report))
}

pub fn condition_suite(inst: &Instance) -> Result<Suite> {
    Ok(Suite::new("condition", check_condition_main(&inst.adj, &inst.d_gen, &inst.c_gen)?))
}

/// Operator identities on small-category triples and the half-braiding on
/// `R(𝟙)` they induce.
pub fn operators_suite(inst: &Instance) -> Result<Suite> {
    let mut report = Report::new();
    for c in check_operator_relations(&inst.adj, &inst.d_gen, &OperatorFault::default())?.checks {
        report.push(theorem(c));
    }
    let hb = half_braiding_on_r1(&inst.adj, &inst.c_gen)?;
    for c in check_half_braiding(&hb, &inst.c_gen)?.checks {
        report.push(theorem(c));
    }
    Ok(Suite::new("operators", report))
}

// ---------------------------------------------------------------------------
// Frobenius form on R(𝟙) and the construction

/// The form chosen for the construction and, when normalization changed it,
/// the raw solver output.
#[derive(Clone, Debug)]
pub struct ChosenForm {
    pub algebra: FrobeniusAlgebra,
    pub raw: Option<FrobeniusAlgebra>,
}

/// Runs the form sweep. `None` means no form was found; the suite records why.
pub fn form_suite(inst: &Instance, normalize_form: bool) -> Result<(Suite, Option<ChosenForm>)> {
    let model = &inst.adj.model;
    let unit = unit_of(&inst.adj);
    let r1 = model.object(&unit)?;
    let m = model.kelly_r2(&unit, &unit)?;
    let mut report = Report::new();
    match solve_frobenius_form(&r1, &m, &model.kelly_r0())? {
        FormOutcome::Found { algebra, coefficients } => {
            let mut found = Check::pass("form.found", "Frobenius form on R(𝟙) from the invariant-functional sweep", 1);
            for (i, c) in coefficients.iter().enumerate() {
                found = found.with_scalar(format!("coefficient_{i}"), c.clone());
            }
            report.push(found);
            let chosen = if normalize_form {
                let n = normalize(&algebra);
                let raw = (n.nu != algebra.nu).then_some(algebra);
                ChosenForm { algebra: n, raw }
            } else {
                ChosenForm { algebra, raw: None }
            };
            report.extend(verify_frobenius(&chosen.algebra)?);
            let class = classify(&chosen.algebra)?;
            let mut summary = Check::pass("form.classification", "separable, special and symmetric data of R(𝟙)", 1);
            if let Some(b) = &class.separable {
                summary = summary.with_scalar("beta", b.clone());
            }
            if let Some(b) = &class.special {
                summary = summary.with_scalar("beta0", b.clone());
            }
            if let Some(s) = class.symmetric {
                summary = summary.with_scalar("symmetric", flag(s));
            }
            report.push(summary);
            if class.symmetric.is_some() {
                report.extend(symmetric_alternate_check(&chosen.algebra)?);
            }
            Ok((Suite::new("frobenius_form", report), Some(chosen)))
        }
        FormOutcome::NotFound { space_dim, tested, proof } => {
            let reason = if proof {
                format!("hypothesis unavailable: Hom(R(𝟙), 𝟙) has dimension {space_dim}, no nondegenerate form")
            } else {
                format!("hypothesis unavailable: none of {} candidate forms is nondegenerate", tested.len())
            };
            report.push(Check::skipped("form.found", "Frobenius form on R(𝟙) from the invariant-functional sweep", reason));
            Ok((Suite::new("frobenius_form", report), None))
        }
    }
}

/// The constructed Frobenius structure on `R` together with its audit.
pub struct Constructed {
    pub data: Arc<FrobeniusOnRightAdjoint>,
    pub functor: Functor,
    pub separable: Option<Rational>,
    pub special: Option<Rational>,
}

pub fn construct(inst: &Instance, form: &FrobeniusAlgebra) -> Result<(Report, Constructed)> {
    let data = construct_frobenius_on_right_adjoint(&inst.adj, form)?;
    let functor = data.functor();
    let mut report = Report::new();
    for c in data.check_adjunction_data(&inst.d_gen, &inst.c_gen)?.checks {
        report.push(theorem(c));
    }
    let audit = check_frobenius_functor_equations(&functor, &inst.d_gen)?;
    for c in audit.report.checks {
        report.push(theorem(c));
    }
    let unit = unit_of(&inst.adj);
    let pushed = push_through_functor(&FrobeniusAlgebra::trivial(&unit), &functor)?;
    let mut failure = None;
    for (name, lhs, rhs) in [
        ("m", &pushed.m, &form.m),
        ("u", &pushed.u, &form.u),
        ("Δ", &pushed.delta, &form.delta),
        ("ν", &pushed.nu, &form.nu),
    ] {
        if lhs != rhs {
            failure = Some(Witness::mismatch(vec![name.into()], lhs, rhs));
            break;
        }
    }
    report.push(Check::from_outcome(
        "theorem.construction.push_unit",
        "R applied to the trivial Frobenius algebra 𝟙 returns the structure on R(𝟙)",
        4,
        failure,
    ));
    let separable = audit.separable;
    let special = audit.special;
    Ok((report, Constructed { data, functor, separable, special }))
}

// ---------------------------------------------------------------------------
// Separability

fn separability_checks(report: &mut Report, suffix: &str, form: &FrobeniusAlgebra, c: &Constructed) -> Result<()> {
    let class = classify(form)?;
    let anchor = "R(𝟙) separable ⟺ R separable, with the same scalar";
    let failure = (class.separable != c.separable).then(|| {
        Witness::at(vec![]).detail(format!("algebra side {:?}, functor side {:?}", class.separable, c.separable))
    });
    let mut check = Check::from_outcome(format!("theorem.separable{suffix}"), anchor, 1, failure)
        .with_scalar("algebra_side", flag(class.separable.is_some()))
        .with_scalar("functor_side", flag(c.separable.is_some()));
    if let Some(b) = &c.separable {
        check = check.with_scalar("beta", b.clone());
    }
    report.push(check);
    let failure = (class.special != c.special).then(|| {
        Witness::at(vec![]).detail(format!("algebra side {:?}, functor side {:?}", class.special, c.special))
    });
    let mut check = Check::from_outcome(
        format!("theorem.special{suffix}"),
        "R(𝟙) special ⟺ R special, with the same scalars",
        1,
        failure,
    )
    .with_scalar("algebra_side", flag(class.special.is_some()))
    .with_scalar("functor_side", flag(c.special.is_some()));
    if let Some(b) = &c.special {
        check = check.with_scalar("beta0", b.clone());
    }
    report.push(check);
    Ok(())
}

/// Separable/special flags from both sides; with a normalized form also
/// `R₂R² = Id`. A raw form that normalization changed is run as well.
pub fn separability_suite(inst: &Instance, form: &ChosenForm, c: &Constructed, normalized: bool) -> Result<Suite> {
    let mut report = Report::new();
    separability_checks(&mut report, "", &form.algebra, c)?;
    if normalized && classify(&form.algebra)?.separable.is_some() {
        let failure = (c.separable != Some(Rational::one()))
            .then(|| Witness::at(vec![]).detail(format!("R₂R² scalar is {:?}", c.separable)));
        report.push(Check::from_outcome(
            "theorem.separable.normalized_identity",
            "R₂(X,Y)R²(X,Y) = Id_{R(X⊗Y)} for the normalized form",
            1,
            failure,
        ));
    }
    if let Some(raw) = &form.raw {
        let (_, raw_c) = construct(inst, raw)?;
        separability_checks(&mut report, ".unnormalized", raw, &raw_c)?;
    }
    Ok(Suite::new("separability", report))
}

// ---------------------------------------------------------------------------
// Pivotality

/// Symmetric `R(𝟙)` ⟺ pivotal `R`, the natural isomorphism
/// `h^l_{𝟙,-} : R(𝟙)⊗- ⇒ RU`, and `κ_A` for `A = R(𝟙)`.
pub fn pivotal_suite(inst: &Instance, form: &FrobeniusAlgebra, c: &Constructed) -> Result<Suite> {
    const NAME: &str = "pivotal";
    if let Some(reason) = has_pivots(&inst.adj) {
        return Ok(Suite::skipped(NAME, reason));
    }
    let mut report = Report::new();
    let hyp = hypothesis_generators(inst)?;
    let pre = renamed(is_pivotal_functor(&inst.adj.left, &hyp)?, "pivotal.precondition.restriction");
    let pre_ok = pre.passed();
    report.push(pre);
    if !pre_ok {
        report.push(Check::skipped("pivotal.theorem", "pivotal biconditional", "U is not pivotal"));
        return Ok(Suite::new(NAME, report));
    }
    let symmetric = classify(form)?.symmetric.ok_or_else(|| Error::MissingData("pivot".into()))?;
    let pivotal_check = is_pivotal_functor(&c.functor, &inst.d_gen)?;
    let pivotal = pivotal_check.passed();
    report.push(biconditional(
        "theorem.pivotal",
        "R(𝟙) symmetric Frobenius ⟺ R pivotal Frobenius functor",
        "symmetric",
        symmetric,
        "pivotal",
        pivotal,
    ));
    report.push(renamed(pivotal_check, "pivotal.functor_side"));

    let a_tensor = tensor_endofunctor(form, half_braiding_fn(&inst.adj));
    let nat = hl_unit_transformation(&inst.adj, &a_tensor, &c.functor);
    for check in check_natural(&nat, &inst.c_gen, true)?.checks {
        report.push(theorem(check));
    }
    report.push(theorem(check_hl_unit_invertible(&inst.adj, &inst.c_gen)?));
    let (kappa_a, split) = kappa(&a_tensor, &inst.c_gen)?;
    report.push(theorem(split));
    let anchor = "κ_A = 𝔭_A for symmetric A";
    if symmetric {
        let p = pivotal_iso(&form.carrier)?;
        let failure = (kappa_a != p).then(|| Witness::mismatch(vec![form.carrier.name().into()], &kappa_a, &p));
        report.push(Check::from_outcome("theorem.tensor_functor.kappa", anchor, 1, failure));
    } else {
        report.push(Check::skipped("theorem.tensor_functor.kappa", anchor, "R(𝟙) is not symmetric"));
    }
    Ok(Suite::new(NAME, report))
}

/// Generators for hypotheses on `U`: the big category's seeds together with
/// `R(X)` for every small atom, since the conclusions are evaluated there.
pub fn hypothesis_generators(inst: &Instance) -> Result<GeneratorSet> {
    let mut seeds = inst.c_gen.seeds.clone();
    for x in inst.d_gen.atoms.iter().filter(|x| !x.is_unit()) {
        let rx = inst.adj.model.object(x)?;
        if !seeds.contains(&rx) {
            seeds.push(rx);
        }
    }
    seeds.push(inst.adj.model.object(inst.d_gen.unit())?);
    GeneratorSet::new(&inst.adj.model.big, &seeds, 1)
}

// ---------------------------------------------------------------------------
// Braiding and ribbon structure

/// Gate shared by the braided and ribbon suites: `U` braided on the big
/// category's generators.
fn braided_precondition(inst: &Instance) -> Result<Check> {
    Ok(renamed(is_braided_functor(&inst.adj.left, &hypothesis_generators(inst)?)?, "braided.precondition.restriction"))
}

/// `R` with Kelly's structure is braided; with the constructed comonoidal
/// structure it is cobraided.
pub fn braided_suite(inst: &Instance, c: &Constructed) -> Result<Suite> {
    const NAME: &str = "braided";
    if let Some(reason) = has_braidings(&inst.adj) {
        return Ok(Suite::skipped(NAME, reason));
    }
    let mut report = Report::new();
    let pre = braided_precondition(inst)?;
    let pre_ok = pre.passed();
    report.push(pre);
    if !pre_ok {
        report.push(Check::skipped("braided.theorem", "braided right adjoint", "U is not braided"));
        return Ok(Suite::new(NAME, report));
    }
    report.push(renamed(is_braided_functor(&inst.adj.right, &inst.d_gen)?, "theorem.braided.kelly"));
    report.push(renamed(is_cobraided_functor(&c.functor, &inst.d_gen)?, "theorem.cobraided.constructed"));
    Ok(Suite::new(NAME, report))
}

/// Symmetric `R(𝟙)` ⟺ ribbon `R`, cross-checked by "pivotal and cobraided".
pub fn ribbon_suite(inst: &Instance, form: &FrobeniusAlgebra, c: &Constructed) -> Result<Suite> {
    const NAME: &str = "ribbon";
    if let Some(reason) = has_ribbons(&inst.adj) {
        return Ok(Suite::skipped(NAME, reason));
    }
    let mut report = Report::new();
    let pre_big = renamed(check_ribbon_category(&hypothesis_generators(inst)?)?, "ribbon.precondition.big_category");
    let pre_small = renamed(check_ribbon_category(&inst.d_gen)?, "ribbon.precondition.small_category");
    let pre_u = braided_precondition(inst)?;
    let pre_ok = pre_big.passed() && pre_small.passed() && pre_u.passed();
    report.push(pre_big);
    report.push(pre_small);
    report.push(pre_u);
    if !pre_ok {
        report.push(Check::skipped("theorem.ribbon", "ribbon biconditional", "hypotheses of the suite fail"));
        return Ok(Suite::new(NAME, report));
    }
    let ribbon_check = renamed(is_ribbon_functor(&c.functor, &inst.d_gen)?, "ribbon.functor_side");
    let pivotal_check = renamed(is_pivotal_functor(&c.functor, &inst.d_gen)?, "ribbon.pivotal");
    let cobraided_check = renamed(is_cobraided_functor(&c.functor, &inst.d_gen)?, "ribbon.cobraided");
    let (ribbon, pivotal, cobraided) = (ribbon_check.passed(), pivotal_check.passed(), cobraided_check.passed());
    let symmetric = classify(form)?.symmetric.ok_or_else(|| Error::MissingData("pivot".into()))?;
    report.push(biconditional(
        "theorem.ribbon",
        "R(𝟙) symmetric Frobenius ⟺ R ribbon Frobenius functor",
        "symmetric",
        symmetric,
        "ribbon",
        ribbon,
    ));
    report.push(
        biconditional(
            "theorem.ribbon.cross_check",
            "R ribbon ⟺ R pivotal and cobraided",
            "ribbon",
            ribbon,
            "pivotal_and_cobraided",
            pivotal && cobraided,
        )
        .with_scalar("pivotal", flag(pivotal))
        .with_scalar("cobraided", flag(cobraided)),
    );
    report.push(ribbon_check);
    report.push(pivotal_check);
    report.push(cobraided_check);
    Ok(Suite::new(NAME, report))
}

// ---------------------------------------------------------------------------
// Orchestration

/// Suites that need a Frobenius form, skipped together when there is none.
fn frobenius_suites(inst: &Instance, form: Option<&ChosenForm>, normalize_form: bool) -> Result<Vec<Suite>> {
    let Some(form) = form else {
        return Ok(["construction", "separability", "pivotal", "braided", "ribbon"]
            .into_iter()
            .map(|n| Suite::skipped(n, "hypothesis unavailable: no Frobenius form on R(𝟙)"))
            .collect());
    };
    let (report, c) = construct(inst, &form.algebra)?;
    let ((sep, piv), (br, rib)) = rayon::join(
        || rayon::join(|| separability_suite(inst, form, &c, normalize_form), || pivotal_suite(inst, &form.algebra, &c)),
        || rayon::join(|| braided_suite(inst, &c), || ribbon_suite(inst, &form.algebra, &c)),
    );
    Ok(vec![Suite::new("construction", report), sep?, piv?, br?, rib?])
}

/// Every suite for `inst`, in a fixed order. Independent suites run on the
/// rayon pool; output order does not depend on scheduling.
pub fn run_all(inst: &Instance, normalize_form: bool) -> Result<Vec<Suite>> {
    let (form_suite, form) = form_suite(inst, normalize_form)?;
    let ((adj, cond), (ops, rest)) = rayon::join(
        || rayon::join(|| adjunction_suite(inst), || condition_suite(inst)),
        || rayon::join(|| operators_suite(inst), || frobenius_suites(inst, form.as_ref(), normalize_form)),
    );
    let mut out = vec![adj?, cond?, ops?, form_suite];
    out.extend(rest?);
    Ok(out)
}

/// True when some `theorem.*` check failed.
pub fn has_theorem_violation(suites: &[Suite]) -> bool {
    suites.iter().flat_map(|s| &s.checks).any(|c| c.status == Status::Fail && c.id.starts_with("theorem."))
}

pub fn has_failure(suites: &[Suite]) -> bool {
    suites.iter().flat_map(|s| &s.checks).any(|c| c.status == Status::Fail)
}
