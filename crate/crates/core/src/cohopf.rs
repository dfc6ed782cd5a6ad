//! coHopf operators of a restriction/coinduction adjunction `U ⊣ R`, and the
//! Frobenius monoidal structure they induce on `R`.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use crate::error::{Error, Result};
use crate::frobenius::{verify_frobenius, FrobeniusAlgebra};
use crate::functors::{Adjunction, Comonoidal, Functor, HalfBraidingFn, NaturalTransformation, TensorBy};
use crate::linalg::{solve_against_epi, Matrix};
use crate::rational::Rational;
use crate::repcat::{cyclic_submodules, intertwiner_basis, is_intertwiner, tensor, GeneratorSet, HModule, HalfBraiding};
use crate::report::{Check, Report, Witness};

fn id(n: usize) -> Matrix {
    Matrix::identity(n)
}

fn names(ms: &[&HModule]) -> Vec<String> {
    ms.iter().map(|m| m.name().to_string()).collect()
}

fn compare(tuple: &[&HModule], lhs: &Matrix, rhs: &Matrix) -> Option<Witness> {
    (lhs != rhs).then(|| Witness::mismatch(names(tuple), lhs, rhs))
}

/// `ε` as a left factor: solves `x · a = b` for square invertible `a`.
fn solve_right(b: &Matrix, a: &Matrix) -> Result<Matrix> {
    Ok(a.transpose().solve(&b.transpose())?.transpose())
}

/// `h^l_{X,Y}` and `h^r_{Y,X}` for `X` over the small algebra, `Y` over the
/// big one, with inverses when they exist.
#[derive(Clone, Debug)]
pub struct CoHopfEntry {
    pub hl: Matrix,
    pub hl_inv: Option<Matrix>,
    pub hr: Matrix,
    pub hr_inv: Option<Matrix>,
}

pub fn cohopf_operators(adj: &Adjunction, x: &HModule, y: &HModule) -> Result<CoHopfEntry> {
    let hl = adj.model.hl(x, y)?;
    let hr = adj.model.hr(y, x)?;
    let hl_inv = hl.inverse().ok();
    let hr_inv = hr.inverse().ok();
    Ok(CoHopfEntry { hl, hl_inv, hr, hr_inv })
}

/// Generator seeds for the big category: small cyclic submodules of `R(𝟙)`
/// and of `R(Y)` for the seeds `Y` of `d_gen`, at most `limit` of them.
pub fn big_category_seeds(adj: &Adjunction, d_gen: &GeneratorSet, max_dim: usize, limit: usize) -> Result<Vec<HModule>> {
    let mut out: Vec<HModule> = Vec::new();
    for y in std::iter::once(d_gen.unit()).chain(&d_gen.seeds) {
        let ry = adj.model.object(y)?;
        for (sub, _) in cyclic_submodules(&ry)? {
            if out.len() < limit && !sub.is_unit() && sub.dim() <= max_dim && !out.contains(&sub) {
                out.push(sub);
            }
        }
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Standing hypotheses

/// Invertibility of the coHopf operators on atom pairs, exactness of `R`,
/// and faithfulness of `R` both as surjectivity of `ε^r` and directly.
pub fn check_condition_main(adj: &Adjunction, d_gen: &GeneratorSet, c_gen: &GeneratorSet) -> Result<Report> {
    let mut report = Report::new();
    let model = &adj.model;

    let mut count = 0;
    let mut failure = None;
    'pairs: for x in &d_gen.atoms {
        for y in &c_gen.atoms {
            count += 1;
            let e = cohopf_operators(adj, x, y)?;
            if e.hl_inv.is_none() {
                failure = Some(Witness::at(names(&[x, y])).detail("h^l is singular"));
                break 'pairs;
            }
            if e.hr_inv.is_none() {
                failure = Some(Witness::at(names(&[y, x])).detail("h^r is singular"));
                break 'pairs;
            }
        }
    }
    report.push(Check::from_outcome("condition.cohopf", "h^l and h^r are invertible", count, failure));

    // R acts on morphisms as id_r ⊗ f, so kernels and cokernels scale by r.
    let r = model.rank();
    let mut count = 0;
    let mut failure = None;
    'exact: for (x, y) in d_gen.atom_pairs() {
        for f in intertwiner_basis(&x, &y)? {
            count += 1;
            let rf = model.morphism(&f);
            if rf.rank() != r * f.rank() {
                failure = Some(Witness::at(names(&[&x, &y])).detail("rank of R(f) is not r·rank(f)"));
                break 'exact;
            }
        }
    }
    report.push(
        Check::from_outcome("condition.exact", "R is exact (linear functor, spot-checked on ranks)", count, failure)
            .with_scalar("rank", Rational::from_integer(r as i64)),
    );

    let mut failure = None;
    for y in &d_gen.words {
        let eps = model.counit(y)?;
        if eps.rank() != y.dim() {
            failure = Some(Witness::at(names(&[y])).detail(format!("rank of ε^r is {} < {}", eps.rank(), y.dim())));
            break;
        }
    }
    let epic = failure.is_none();
    report.push(Check::from_outcome("condition.faithful", "ε^r_X is epic for every X", d_gen.words.len(), failure));

    let mut failure = None;
    'faithful: for (x, y) in d_gen.atom_pairs() {
        let basis = intertwiner_basis(&x, &y)?;
        if basis.is_empty() {
            continue;
        }
        let images: Vec<Vec<Rational>> = basis.iter().map(|f| model.morphism(f).entries().to_vec()).collect();
        let m = Matrix::from_fn(images[0].len(), images.len(), |i, j| images[j][i].clone());
        if m.rank() != basis.len() {
            failure = Some(Witness::at(names(&[&x, &y])).detail("R identifies distinct morphisms"));
            break 'faithful;
        }
    }
    let faithful = failure.is_none();
    report.push(Check::from_outcome("condition.faithful_direct", "R is injective on Hom spaces", d_gen.atoms.len(), failure));
    report.push(Check::from_outcome(
        "condition.faithful_criterion",
        "ε^r epic for all X ⟺ R faithful",
        1,
        (epic != faithful).then(|| Witness::at(vec![]).detail(format!("epic {epic}, faithful {faithful}"))),
    ));
    Ok(report)
}

// ---------------------------------------------------------------------------
// Frobenius structure on the right adjoint

/// The comonoidal structure `(R², R⁰)` built from a Frobenius structure on
/// `R(𝟙)` together with the left adjunction data `(η^l, ε^l)` of `R ⊣ U`.
pub struct FrobeniusOnRightAdjoint {
    pub adj: Adjunction,
    pub frob: FrobeniusAlgebra,
    eta_l: Mutex<HashMap<HModule, Matrix>>,
    r2c: Mutex<HashMap<(HModule, HModule), Matrix>>,
}

impl std::fmt::Debug for FrobeniusOnRightAdjoint {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("FrobeniusOnRightAdjoint").field("carrier", &self.frob.carrier).finish()
    }
}

/// Validates `frob` against Kelly's algebra structure on `R(𝟙)`.
pub fn construct_frobenius_on_right_adjoint(
    adj: &Adjunction,
    frob: &FrobeniusAlgebra,
) -> Result<Arc<FrobeniusOnRightAdjoint>> {
    let model = &adj.model;
    let unit = HModule::trivial(&model.small);
    let r1 = model.object(&unit)?;
    if frob.carrier != r1 {
        return Err(Error::Precondition(format!("Frobenius carrier {} is not R(𝟙)", frob.carrier.name())));
    }
    if frob.m != model.kelly_r2(&unit, &unit)? || frob.u != model.kelly_r0() {
        return Err(Error::Precondition("algebra structure differs from the one induced on R(𝟙)".into()));
    }
    if let Some(bad) = verify_frobenius(frob)?.failures().next() {
        return Err(Error::Precondition(format!("structure on R(𝟙) is not Frobenius: {}", bad.id)));
    }
    for y in std::iter::once(&unit) {
        if model.counit(y)?.rank() != y.dim() {
            return Err(Error::Precondition("ε^r is not epic, R is not faithful".into()));
        }
    }
    Ok(Arc::new(FrobeniusOnRightAdjoint {
        adj: adj.clone(),
        frob: frob.clone(),
        eta_l: Mutex::new(HashMap::new()),
        r2c: Mutex::new(HashMap::new()),
    }))
}

impl FrobeniusOnRightAdjoint {
    /// `R` with `(R₂, R₀)` from Kelly and `(R², R⁰)` from this structure.
    pub fn functor(self: &Arc<Self>) -> Functor {
        self.adj.right.with_comonoidal(self.clone()).expect("right adjoint is a coinduction functor")
    }

    /// `ε^l_X = (ν ⊗ Id_X)(h^l_{𝟙,X})⁻¹ : RU(X) -> X`.
    pub fn eps_l(&self, x: &HModule) -> Result<Matrix> {
        let unit = HModule::trivial(&self.adj.model.small);
        let hl = self.adj.model.hl(&unit, x)?;
        solve_right(&self.frob.nu.kron(&id(x.dim())), &hl)
    }

    /// The right-hand side of the defining equation of `η^l_Y`, a map
    /// `UR(Y) -> UR(Y)`.
    pub fn eta_l_composite(&self, y: &HModule) -> Result<Matrix> {
        let model = &self.adj.model;
        let unit = HModule::trivial(&model.small);
        let r = model.rank();
        let ry = model.object(y)?;
        let ury = model.restrict(&ry)?;
        let rury = model.object(&ury)?;
        let urury = model.restrict(&rury)?;
        let du = &self.frob.delta * &self.frob.u;
        let step = du.kron(&id(ry.dim()));
        let step = Matrix::apply_middle(r, &model.hl(&unit, &ry)?, 1, &step);
        let step = &model.hl(&unit, &rury)? * &step;
        let step = &model.counit(&urury)? * &step;
        Ok(&model.morphism(&model.counit(y)?) * &step)
    }

    /// `η^l_Y : Y -> UR(Y)`, the unique solution of `η^l_Y ∘ ε^r_Y = M`.
    pub fn eta_l(&self, y: &HModule) -> Result<Matrix> {
        if let Some(m) = self.eta_l.lock().expect("cache lock").get(y) {
            return Ok(m.clone());
        }
        let m = self.eta_l_composite(y)?;
        let eps = self.adj.model.counit(y)?;
        let eta = solve_against_epi(&m, &eps).map_err(|e| match e {
            Error::Inconsistent(msg) => Error::TheoremViolation(format!("η^l at {}: {msg}", y.name())),
            other => other,
        })?;
        Ok(self.eta_l.lock().expect("cache lock").entry(y.clone()).or_insert(eta).clone())
    }

    /// `R²(X,Y) = (h^l_{X,R(Y)})⁻¹ ∘ R(Id_X ⊗ η^l_Y)`.
    pub fn r2c(&self, x: &HModule, y: &HModule) -> Result<Matrix> {
        let key = (x.clone(), y.clone());
        if let Some(m) = self.r2c.lock().expect("cache lock").get(&key) {
            return Ok(m.clone());
        }
        let model = &self.adj.model;
        let ry = model.object(y)?;
        let hl = model.hl(x, &ry)?;
        let rhs = model.morphism(&id(x.dim()).kron(&self.eta_l(y)?));
        let m = hl.solve(&rhs).map_err(|e| match e {
            Error::Rank(msg) => Error::Precondition(format!("h^l at ({}, R({})) is singular: {msg}", x.name(), y.name())),
            other => other,
        })?;
        Ok(self.r2c.lock().expect("cache lock").entry(key).or_insert(m).clone())
    }

    /// Defining equation of `η^l`, and the snake equations of `R ⊣ U` with
    /// `(η^l, ε^l)`.
    pub fn check_adjunction_data(&self, d_gen: &GeneratorSet, c_gen: &GeneratorSet) -> Result<Report> {
        let model = &self.adj.model;
        let mut report = Report::new();
        let mut failure = None;
        for y in &d_gen.words {
            let lhs = &self.eta_l(y)? * &model.counit(y)?;
            let rhs = self.eta_l_composite(y)?;
            let ury = model.restrict(&model.object(y)?)?;
            if let Some(w) = compare(&[y], &lhs, &rhs) {
                failure = Some(w);
                break;
            }
            if !is_intertwiner(&self.eta_l(y)?, y, &ury) {
                failure = Some(Witness::at(names(&[y])).detail("η^l is not a morphism"));
                break;
            }
        }
        report.push(Check::from_outcome(
            "construction.eta_l",
            "η^l ∘ ε^r equals the defining composite",
            d_gen.words.len(),
            failure,
        ));
        let mut failure = None;
        for y in &d_gen.words {
            let ry = model.object(y)?;
            let lhs = &self.eps_l(&ry)? * &model.morphism(&self.eta_l(y)?);
            if let Some(w) = compare(&[y], &lhs, &id(ry.dim())) {
                failure = Some(w);
                break;
            }
        }
        report.push(Check::from_outcome(
            "construction.snake_right",
            "ε^l_{R(Y)} ∘ R(η^l_Y) = Id_{R(Y)}",
            d_gen.words.len(),
            failure,
        ));
        let mut failure = None;
        for x in &c_gen.words {
            let ux = model.restrict(x)?;
            let lhs = &self.eps_l(x)? * &self.eta_l(&ux)?;
            if let Some(w) = compare(&[x], &lhs, &id(x.dim())) {
                failure = Some(w);
                break;
            }
            let rux = model.object(&ux)?;
            if !is_intertwiner(&self.eps_l(x)?, &rux, x) {
                failure = Some(Witness::at(names(&[x])).detail("ε^l is not a morphism"));
                break;
            }
        }
        report.push(Check::from_outcome(
            "construction.snake_left",
            "U(ε^l_X) ∘ η^l_{U(X)} = Id_{U(X)}",
            c_gen.words.len(),
            failure,
        ));
        Ok(report)
    }
}

impl Comonoidal for FrobeniusOnRightAdjoint {
    fn fc2(&self, x: &HModule, y: &HModule) -> Result<Matrix> {
        self.r2c(x, y)
    }

    fn fc0(&self) -> Result<Matrix> {
        Ok(self.frob.nu.clone())
    }
}

// ---------------------------------------------------------------------------
// Operator identities

/// Optional scaling of `h^l`, for fault injection.
#[derive(Clone, Debug, Default)]
pub struct OperatorFault {
    pub hl_scale: Option<Rational>,
}

/// The three operator identities at `(x, y, z)`; (b) and (c) use `(x, y)`.
pub fn verify_operator_relations(
    adj: &Adjunction,
    x: &HModule,
    y: &HModule,
    z: &HModule,
    fault: &OperatorFault,
) -> Result<Report> {
    let model = &adj.model;
    let hl = |a: &HModule, b: &HModule| -> Result<Matrix> {
        let m = model.hl(a, b)?;
        Ok(match &fault.hl_scale {
            Some(l) => m.scale(l),
            None => m,
        })
    };
    let (rx, ry, rz) = (model.object(x)?, model.object(y)?, model.object(z)?);
    let urz = model.restrict(&rz)?;
    let mut report = Report::new();

    let y_urz = tensor(y, &urz)?;
    let lhs = Matrix::right_apply_middle(&model.kelly_r2(x, &y_urz)?, rx.dim(), &hl(y, &rz)?, 1);
    let rhs = Matrix::right_apply_middle(&hl(&tensor(x, y)?, &rz)?, 1, &model.kelly_r2(x, y)?, rz.dim());
    report.push(Check::from_outcome(
        "operators.relation_a",
        "R₂(X,Y⊗UR(Z))(Id⊗h^l_{Y,R(Z)}) = h^l_{X⊗Y,R(Z)}(R₂(X,Y)⊗Id)",
        1,
        compare(&[x, y, z], &lhs, &rhs),
    ));

    let ury = model.restrict(&ry)?;
    let lhs = &model.counit(&tensor(x, &ury)?)? * &hl(x, &ry)?;
    let rhs = model.counit(x)?.kron(&id(ry.dim()));
    report.push(Check::from_outcome(
        "operators.relation_b",
        "ε^r_{X⊗UR(Y)} U(h^l_{X,R(Y)}) = (ε^r_X⊗Id)U₂⁻¹(R(X),R(Y))",
        1,
        compare(&[x, y], &lhs, &rhs),
    ));

    let lhs = &model.morphism(&id(x.dim()).kron(&model.counit(y)?)) * &hl(x, &ry)?;
    let rhs = model.kelly_r2(x, y)?;
    report.push(Check::from_outcome(
        "operators.relation_c",
        "R(Id_X⊗ε^r_Y) h^l_{X,R(Y)} = R₂(X,Y)",
        1,
        compare(&[x, y], &lhs, &rhs),
    ));
    Ok(report)
}

/// Folds per-triple reports into one check per identity.
pub fn check_operator_relations(adj: &Adjunction, d_gen: &GeneratorSet, fault: &OperatorFault) -> Result<Report> {
    let mut merged: Vec<Check> = Vec::new();
    for (x, y, z) in d_gen.atom_triples() {
        for check in verify_operator_relations(adj, &x, &y, &z, fault)?.checks {
            match merged.iter_mut().find(|c| c.id == check.id) {
                Some(c) => {
                    c.instances += 1;
                    if c.passed() && !check.passed() {
                        let instances = c.instances;
                        *c = Check { instances, ..check };
                    }
                }
                None => merged.push(check),
            }
        }
    }
    Ok(Report { checks: merged })
}

// ---------------------------------------------------------------------------
// Half-braiding on R(𝟙) and the functor R(𝟙) ⊗ -

/// `σ_X = (h^l_{𝟙,X})⁻¹ h^r_{X,𝟙} : X ⊗ R(𝟙) -> R(𝟙) ⊗ X`.
pub fn half_braiding_component(adj: &Adjunction, x: &HModule) -> Result<Matrix> {
    let unit = HModule::trivial(&adj.model.small);
    let hl = adj.model.hl(&unit, x)?;
    let hr = adj.model.hr(x, &unit)?;
    hl.solve(&hr).map_err(|e| match e {
        Error::Rank(msg) => Error::Precondition(format!("h^l at (𝟙, {}) is singular: {msg}", x.name())),
        other => other,
    })
}

pub fn half_braiding_fn(adj: &Adjunction) -> HalfBraidingFn {
    let adj = adj.clone();
    Arc::new(move |x: &HModule| half_braiding_component(&adj, x))
}

pub fn half_braiding_on_r1(adj: &Adjunction, c_gen: &GeneratorSet) -> Result<HalfBraiding> {
    let carrier = adj.model.object(&HModule::trivial(&adj.model.small))?;
    let mut family = HashMap::new();
    for x in &c_gen.words {
        family.insert(x.clone(), half_braiding_component(adj, x)?);
    }
    Ok(HalfBraiding { carrier, family })
}

/// `A ⊗ -` with the structure maps built from `A`'s Frobenius data and `σ`.
pub fn tensor_endofunctor(a: &FrobeniusAlgebra, sigma: HalfBraidingFn) -> Functor {
    Functor::TensorBy(Arc::new(TensorBy { algebra: a.clone(), sigma }))
}

/// `κ_A`, read off as `ξ^{A⊗-}_𝟙`, and the check `ξ^{A⊗-}_X = κ_A ⊗ Id`.
pub fn kappa(f: &Functor, gen: &GeneratorSet) -> Result<(Matrix, Check)> {
    let kappa = crate::functors::xi(f, gen.unit())?;
    let mut failure = None;
    for x in &gen.words {
        let lhs = crate::functors::xi(f, x)?;
        let rhs = kappa.kron(&id(x.dim()));
        if let Some(w) = compare(&[x], &lhs, &rhs) {
            failure = Some(w);
            break;
        }
    }
    Ok((kappa, Check::from_outcome("tensor_functor.xi_split", "ξ^{A⊗-}_X = κ_A ⊗ Id", gen.words.len(), failure)))
}

/// `h^l_{𝟙,-} : R(𝟙) ⊗ - ⇒ RU` as a natural transformation.
pub fn hl_unit_transformation(adj: &Adjunction, tensor_functor: &Functor, r: &Functor) -> NaturalTransformation {
    let model = adj.model.clone();
    let unit = HModule::trivial(&model.small);
    NaturalTransformation {
        name: "hl_unit".into(),
        source: tensor_functor.clone(),
        target: Functor::compose(r, &adj.left),
        family: Arc::new(move |x| model.hl(&unit, x)),
    }
}

/// `h^l_{𝟙,X}` is invertible at every word.
pub fn check_hl_unit_invertible(adj: &Adjunction, gen: &GeneratorSet) -> Result<Check> {
    let unit = HModule::trivial(&adj.model.small);
    let mut failure = None;
    for x in &gen.words {
        if !adj.model.hl(&unit, x)?.is_invertible() {
            failure = Some(Witness::at(names(&[x])).detail("h^l_{𝟙,X} is singular"));
            break;
        }
    }
    Ok(Check::from_outcome("hl_unit.invertible", "h^l_{𝟙,X} is invertible", gen.words.len(), failure))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::frobenius::{normalize, solve_frobenius_form, FormOutcome};
    use crate::functors::check_frobenius_functor_equations;
    use crate::hopf::{drinfeld_double, HopfMap};
    use crate::repcat::check_half_braiding;

    struct Instance {
        adj: Adjunction,
        d_gen: GeneratorSet,
        c_gen: GeneratorSet,
    }

    fn double_instance(name: &str) -> Instance {
        let file = catalog::load(name).unwrap();
        let h = Arc::new(file.to_hopf().unwrap());
        let d = Arc::new(drinfeld_double(&h).unwrap());
        let adj = Adjunction::new(h.clone(), d.clone(), HopfMap::double_inclusion(&h)).unwrap();
        let d_gen = GeneratorSet::new(&h, &file.seed_modules(&h).unwrap(), 2).unwrap();
        let seeds = big_category_seeds(&adj, &d_gen, 2, 3).unwrap();
        let c_gen = GeneratorSet::new(&d, &seeds, 2).unwrap();
        Instance { adj, d_gen, c_gen }
    }

    fn solved_form(adj: &Adjunction) -> FrobeniusAlgebra {
        let unit = HModule::trivial(&adj.model.small);
        let r1 = adj.model.object(&unit).unwrap();
        let m = adj.model.kelly_r2(&unit, &unit).unwrap();
        match solve_frobenius_form(&r1, &m, &adj.model.kelly_r0()).unwrap() {
            FormOutcome::Found { algebra, .. } => normalize(&algebra),
            FormOutcome::NotFound { .. } => panic!("no form"),
        }
    }

    #[test]
    fn condition_holds_for_c2_double() {
        let inst = double_instance("c2");
        let report = check_condition_main(&inst.adj, &inst.d_gen, &inst.c_gen).unwrap();
        assert!(report.all_passed(), "{report:?}");
        let unit = HModule::trivial(&inst.adj.model.small);
        let r1 = inst.adj.model.object(&unit).unwrap();
        let e = cohopf_operators(&inst.adj, &unit, &r1).unwrap();
        assert_eq!(e.hl.shape(), (4, 4));
        assert!(e.hl_inv.is_some());
    }

    #[test]
    fn identity_adjunction_operators_are_identities() {
        let file = catalog::load("s3").unwrap();
        let h = Arc::new(file.to_hopf().unwrap());
        let adj = Adjunction::identity(h.clone()).unwrap();
        let seeds = file.seed_modules(&h).unwrap();
        for x in &seeds {
            for y in &seeds {
                let e = cohopf_operators(&adj, x, y).unwrap();
                assert!(e.hl.is_identity() && e.hr.is_identity());
            }
        }
        let frob = FrobeniusAlgebra::trivial(&HModule::trivial(&h));
        let cons = construct_frobenius_on_right_adjoint(&adj, &frob).unwrap();
        for y in &seeds {
            assert!(cons.eta_l(y).unwrap().is_identity());
            assert!(cons.eps_l(y).unwrap().is_identity());
            assert!(cons.r2c(y, y).unwrap().is_identity());
        }
    }

    #[test]
    fn construction_on_c2_double_is_frobenius() {
        let inst = double_instance("c2");
        let frob = solved_form(&inst.adj);
        let cons = construct_frobenius_on_right_adjoint(&inst.adj, &frob).unwrap();
        assert!(cons.check_adjunction_data(&inst.d_gen, &inst.c_gen).unwrap().all_passed());
        let r = cons.functor();
        let audit = check_frobenius_functor_equations(&r, &inst.d_gen).unwrap();
        assert!(audit.report.all_passed(), "{:?}", audit.report);
        let unit = HModule::trivial(&inst.adj.model.small);
        assert_eq!(cons.r2c(&unit, &unit).unwrap(), frob.delta);
        let pushed = crate::frobenius::push_through_functor(&FrobeniusAlgebra::trivial(&unit), &r).unwrap();
        assert_eq!((pushed.m, pushed.u, pushed.delta, pushed.nu), (frob.m, frob.u, frob.delta, frob.nu));
        assert_eq!(audit.separable, Some(Rational::one()));
    }

    #[test]
    fn operator_relations_and_fault() {
        let inst = double_instance("c2");
        assert!(check_operator_relations(&inst.adj, &inst.d_gen, &OperatorFault::default()).unwrap().all_passed());
        let fault = OperatorFault { hl_scale: Some(Rational::from_integer(2)) };
        let report = check_operator_relations(&inst.adj, &inst.d_gen, &fault).unwrap();
        let c = report.get("operators.relation_c").unwrap();
        assert!(!c.passed() && c.witness.is_some());
    }

    #[test]
    fn pivotality_matches_symmetry_on_group_doubles() {
        use crate::frobenius::classify;
        use crate::functors::{check_natural, is_pivotal_functor};
        use crate::repcat::pivotal_iso;
        for name in ["c2", "s3"] {
            let inst = double_instance(name);
            let frob = solved_form(&inst.adj);
            let symmetric = classify(&frob).unwrap().symmetric.unwrap();
            let cons = construct_frobenius_on_right_adjoint(&inst.adj, &frob).unwrap();
            let r = cons.functor();
            let pivotal = is_pivotal_functor(&r, &inst.d_gen).unwrap().passed();
            assert_eq!(symmetric, pivotal, "{name}");
            let a_tensor = tensor_endofunctor(&frob, half_braiding_fn(&inst.adj));
            let nat = hl_unit_transformation(&inst.adj, &a_tensor, &r);
            let report = check_natural(&nat, &inst.c_gen, true).unwrap();
            assert!(report.all_passed(), "{name}: {report:?}");
            assert!(check_hl_unit_invertible(&inst.adj, &inst.c_gen).unwrap().passed());
            let (kappa_a, split) = kappa(&a_tensor, &inst.c_gen).unwrap();
            assert!(split.passed(), "{name}: {split:?}");
            if symmetric {
                assert_eq!(kappa_a, pivotal_iso(&frob.carrier).unwrap(), "{name}");
            }
        }
    }

    #[test]
    fn half_braiding_on_r1_is_valid() {
        let inst = double_instance("c2");
        let hb = half_braiding_on_r1(&inst.adj, &inst.c_gen).unwrap();
        assert!(check_half_braiding(&hb, &inst.c_gen).unwrap().all_passed());
    }
}
