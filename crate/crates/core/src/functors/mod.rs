//! Algorithmic functors between module categories, their monoidal and
//! comonoidal structure maps, duality transforms, and structure checkers.
//!
//! Every functor here acts on morphisms as `f ↦ id_k ⊗ f` for a fixed `k`
//! (`k = 1` for restriction), so morphism images need no endpoint data.

pub mod coinduction;

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

pub use coinduction::{restrict, Coinduced, Coinduction};

use crate::error::{Error, Result};
use crate::frobenius::FrobeniusAlgebra;
use crate::hopf::{verify_hopf_map, HopfAlgebra, HopfMap};
use crate::linalg::Matrix;
use crate::rational::Rational;
use crate::repcat::{
    braiding, coev_matrix, ev_matrix, first_non_intertwining, intertwiner_basis, left_dual, pivotal_iso, tensor,
    twists, GeneratorSet, HModule,
};
use crate::report::{Check, Report, Witness};

/// Comonoidal structure supplied from outside, e.g. by a construction on a
/// right adjoint.
pub trait Comonoidal: Send + Sync {
    /// `F²(X, Y) : F(X ⊗ Y) -> F(X) ⊗ F(Y)`
    fn fc2(&self, x: &HModule, y: &HModule) -> Result<Matrix>;
    /// `F⁰ : F(𝟙) -> 𝟙`
    fn fc0(&self) -> Result<Matrix>;
}

/// Per-object family `X ↦ σ_X : X ⊗ A -> A ⊗ X`.
pub type HalfBraidingFn = Arc<dyn Fn(&HModule) -> Result<Matrix> + Send + Sync>;

pub struct Restriction {
    pub map: HopfMap,
    /// Algebra whose modules are restricted.
    pub big: Arc<HopfAlgebra>,
    pub small: Arc<HopfAlgebra>,
    cache: Mutex<HashMap<HModule, HModule>>,
}

/// `A ⊗ -` for a Frobenius algebra `A` with a half-braiding.
pub struct TensorBy {
    pub algebra: FrobeniusAlgebra,
    pub sigma: HalfBraidingFn,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Fault {
    /// `F₂ ↦ λ F₂`
    ScaleMonoidal(Rational),
    /// `F⁰ ↦ λ F⁰`
    ScaleCounit(Rational),
    /// `ξ ↦ λ ξ`
    ScaleXi(Rational),
}

#[derive(Clone)]
pub enum Functor {
    Identity(Arc<HopfAlgebra>),
    Restriction(Arc<Restriction>),
    Coinduction { model: Arc<Coinduction>, comonoidal: Option<Arc<dyn Comonoidal>> },
    TensorBy(Arc<TensorBy>),
    /// `outer ∘ inner`
    Composite(Arc<Functor>, Arc<Functor>),
    Faulty(Arc<Functor>, Fault),
}

impl std::fmt::Debug for Functor {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.name())
    }
}

fn missing(what: &str, functor: &Functor) -> Error {
    Error::MissingStructure(format!("{what} of {}", functor.name()))
}

fn id(n: usize) -> Matrix {
    Matrix::identity(n)
}

pub fn restriction_functor(small: Arc<HopfAlgebra>, big: Arc<HopfAlgebra>, map: HopfMap) -> Result<Functor> {
    let report = verify_hopf_map(&small, &big, &map)?;
    if let Some(bad) = report.failures().next() {
        return Err(Error::Precondition(format!("{} is not a Hopf algebra map: {}", map.name, bad.id)));
    }
    Ok(Functor::Restriction(Arc::new(Restriction { map, big, small, cache: Mutex::new(HashMap::new()) })))
}

impl Functor {
    pub fn coinduction(model: Arc<Coinduction>) -> Self {
        Functor::Coinduction { model, comonoidal: None }
    }

    pub fn compose(outer: &Functor, inner: &Functor) -> Self {
        Functor::Composite(Arc::new(outer.clone()), Arc::new(inner.clone()))
    }

    pub fn with_fault(&self, fault: Fault) -> Self {
        Functor::Faulty(Arc::new(self.clone()), fault)
    }

    /// Attaches comonoidal data to a coinduction functor.
    pub fn with_comonoidal(&self, data: Arc<dyn Comonoidal>) -> Result<Self> {
        match self {
            Functor::Coinduction { model, .. } => {
                Ok(Functor::Coinduction { model: model.clone(), comonoidal: Some(data) })
            }
            other => Err(Error::Precondition(format!("{} does not take external comonoidal data", other.name()))),
        }
    }

    pub fn name(&self) -> String {
        match self {
            Functor::Identity(h) => format!("Id[{}]", h.name),
            Functor::Restriction(r) => format!("Res[{}]", r.map.name),
            Functor::Coinduction { model, .. } => format!("CoInd[{}]", model.map.name),
            Functor::TensorBy(t) => format!("{}⊗-", t.algebra.carrier.name()),
            Functor::Composite(g, f) => format!("{}∘{}", g.name(), f.name()),
            Functor::Faulty(f, fault) => format!("{}{{{fault:?}}}", f.name()),
        }
    }

    pub fn source(&self) -> &Arc<HopfAlgebra> {
        match self {
            Functor::Identity(h) => h,
            Functor::Restriction(r) => &r.big,
            Functor::Coinduction { model, .. } => &model.small,
            Functor::TensorBy(t) => t.algebra.carrier.algebra(),
            Functor::Composite(_, f) => f.source(),
            Functor::Faulty(f, _) => f.source(),
        }
    }

    pub fn target(&self) -> &Arc<HopfAlgebra> {
        match self {
            Functor::Identity(h) => h,
            Functor::Restriction(r) => &r.small,
            Functor::Coinduction { model, .. } => &model.big,
            Functor::TensorBy(t) => t.algebra.carrier.algebra(),
            Functor::Composite(g, _) => g.target(),
            Functor::Faulty(f, _) => f.target(),
        }
    }

    /// Strong monoidal functors carry `F² = F₂⁻¹`, `F⁰ = F₀⁻¹` implicitly.
    pub fn is_strict(&self) -> bool {
        match self {
            Functor::Identity(_) | Functor::Restriction(_) => true,
            Functor::Composite(g, f) => g.is_strict() && f.is_strict(),
            _ => false,
        }
    }

    pub fn object(&self, x: &HModule) -> Result<HModule> {
        if x.algebra() != self.source() {
            return Err(Error::AlgebraMismatch(format!(
                "{} is not an object of the source of {}",
                x.name(),
                self.name()
            )));
        }
        match self {
            Functor::Identity(_) => Ok(x.clone()),
            Functor::Restriction(r) => {
                if let Some(m) = r.cache.lock().expect("cache lock").get(x) {
                    return Ok(m.clone());
                }
                let m = restrict(&r.map, &r.small, x)?;
                Ok(r.cache.lock().expect("cache lock").entry(x.clone()).or_insert(m).clone())
            }
            Functor::Coinduction { model, .. } => model.object(x),
            Functor::TensorBy(t) => tensor(&t.algebra.carrier, x),
            Functor::Composite(g, f) => g.object(&f.object(x)?),
            Functor::Faulty(f, _) => f.object(x),
        }
    }

    /// Image of a morphism `f : X -> Y` of the source category.
    pub fn morphism(&self, f: &Matrix) -> Matrix {
        match self {
            Functor::Identity(_) | Functor::Restriction(_) => f.clone(),
            Functor::Coinduction { model, .. } => model.morphism(f),
            Functor::TensorBy(t) => id(t.algebra.dim()).kron(f),
            Functor::Composite(g, inner) => g.morphism(&inner.morphism(f)),
            Functor::Faulty(inner, _) => inner.morphism(f),
        }
    }

    /// `F₂(X, Y) : F(X) ⊗ F(Y) -> F(X ⊗ Y)`
    pub fn f2(&self, x: &HModule, y: &HModule) -> Result<Matrix> {
        match self {
            Functor::Identity(_) => Ok(id(x.dim() * y.dim())),
            Functor::Restriction(_) => Ok(id(x.dim() * y.dim())),
            Functor::Coinduction { model, .. } => model.kelly_r2(x, y),
            Functor::TensorBy(t) => {
                let (a, dx, dy) = (t.algebra.dim(), x.dim(), y.dim());
                let sigma = (t.sigma)(x)?;
                Ok(&t.algebra.m.kron(&id(dx * dy)) * &id(a).kron(&sigma).kron(&id(dy)))
            }
            Functor::Composite(g, f) => {
                let (fx, fy) = (f.object(x)?, f.object(y)?);
                Ok(&g.morphism(&f.f2(x, y)?) * &g.f2(&fx, &fy)?)
            }
            Functor::Faulty(f, Fault::ScaleMonoidal(l)) => Ok(f.f2(x, y)?.scale(l)),
            Functor::Faulty(f, _) => f.f2(x, y),
        }
    }

    /// `F₀ : 𝟙 -> F(𝟙)`
    pub fn f0(&self) -> Result<Matrix> {
        match self {
            Functor::Identity(_) | Functor::Restriction(_) => Ok(id(1)),
            Functor::Coinduction { model, .. } => Ok(model.kelly_r0()),
            Functor::TensorBy(t) => Ok(t.algebra.u.clone()),
            Functor::Composite(g, f) => Ok(&g.morphism(&f.f0()?) * &g.f0()?),
            Functor::Faulty(f, _) => f.f0(),
        }
    }

    /// `F²(X, Y) : F(X ⊗ Y) -> F(X) ⊗ F(Y)`
    pub fn fc2(&self, x: &HModule, y: &HModule) -> Result<Matrix> {
        match self {
            Functor::Identity(_) | Functor::Restriction(_) => Ok(id(x.dim() * y.dim())),
            Functor::Coinduction { comonoidal: Some(c), .. } => c.fc2(x, y),
            Functor::Coinduction { comonoidal: None, .. } => Err(missing("comonoidal structure", self)),
            Functor::TensorBy(t) => {
                let (a, dx, dy) = (t.algebra.dim(), x.dim(), y.dim());
                let sigma_inv = (t.sigma)(x)?
                    .inverse()
                    .map_err(|_| Error::Construction(format!("half-braiding at {} is not invertible", x.name())))?;
                Ok(&id(a).kron(&sigma_inv).kron(&id(dy)) * &t.algebra.delta.kron(&id(dx * dy)))
            }
            Functor::Composite(g, f) => {
                let (fx, fy) = (f.object(x)?, f.object(y)?);
                Ok(&g.fc2(&fx, &fy)? * &g.morphism(&f.fc2(x, y)?))
            }
            Functor::Faulty(f, _) => f.fc2(x, y),
        }
    }

    /// `F⁰ : F(𝟙) -> 𝟙`
    pub fn fc0(&self) -> Result<Matrix> {
        match self {
            Functor::Identity(_) | Functor::Restriction(_) => Ok(id(1)),
            Functor::Coinduction { comonoidal: Some(c), .. } => c.fc0(),
            Functor::Coinduction { comonoidal: None, .. } => Err(missing("comonoidal counit", self)),
            Functor::TensorBy(t) => Ok(t.algebra.nu.clone()),
            Functor::Composite(g, f) => Ok(&g.fc0()? * &g.morphism(&f.fc0()?)),
            Functor::Faulty(f, Fault::ScaleCounit(l)) => Ok(f.fc0()?.scale(l)),
            Functor::Faulty(f, _) => f.fc0(),
        }
    }

    fn xi_scale(&self) -> Option<&Rational> {
        match self {
            Functor::Faulty(_, Fault::ScaleXi(l)) => Some(l),
            _ => None,
        }
    }
}

fn names(ms: &[&HModule]) -> Vec<String> {
    ms.iter().map(|m| m.name().to_string()).collect()
}

/// Runs `test` over `items` and stops at the first witness. Missing data
/// turns the check into `unavailable`.
fn run_check<T>(
    check_id: &str,
    anchor: &str,
    items: impl IntoIterator<Item = T>,
    mut test: impl FnMut(T) -> Result<Option<Witness>>,
) -> Result<Check> {
    let mut count = 0;
    for item in items {
        count += 1;
        match test(item) {
            Ok(None) => {}
            Ok(Some(w)) => return Ok(Check::from_outcome(check_id, anchor, count, Some(w))),
            Err(Error::MissingData(m) | Error::MissingStructure(m)) => {
                return Ok(Check::unavailable(check_id, anchor, m));
            }
            Err(e) => return Err(e),
        }
    }
    Ok(Check::pass(check_id, anchor, count))
}

fn compare(tuple: &[&HModule], lhs: &Matrix, rhs: &Matrix) -> Option<Witness> {
    (lhs != rhs).then(|| Witness::mismatch(names(tuple), lhs, rhs))
}

// ---------------------------------------------------------------------------
// Functoriality and (co)monoidal coherence

/// Identities map to identities and intertwiner spans between atoms map to
/// intertwiners.
pub fn check_functoriality(f: &Functor, gen: &GeneratorSet) -> Result<Report> {
    let mut report = Report::new();
    report.push(run_check("functor.identities", "functor preserves identities", &gen.words, |x| {
        let fx = f.object(x)?;
        let img = f.morphism(&id(x.dim()));
        Ok(compare(&[x], &img, &id(fx.dim())))
    })?);
    report.push(run_check("functor.intertwiners", "functor maps intertwiners to intertwiners", gen.atom_pairs(), |(x, y)| {
        let (fx, fy) = (f.object(&x)?, f.object(&y)?);
        for (k, g) in intertwiner_basis(&x, &y)?.iter().enumerate() {
            if first_non_intertwining(&f.morphism(g), &fx, &fy).is_some() {
                return Ok(Some(Witness::at(names(&[&x, &y])).detail(format!("image of span element {k}"))));
            }
        }
        Ok(None)
    })?);
    report.push(run_check("functor.composition", "functor preserves composition", gen.atom_triples(), |(x, y, z)| {
        let hxy = intertwiner_basis(&x, &y)?;
        let hyz = intertwiner_basis(&y, &z)?;
        for a in &hxy {
            for b in &hyz {
                let lhs = f.morphism(&(b * a));
                let rhs = &f.morphism(b) * &f.morphism(a);
                if let Some(w) = compare(&[&x, &y, &z], &lhs, &rhs) {
                    return Ok(Some(w));
                }
            }
        }
        Ok(None)
    })?);
    Ok(report)
}

/// Intertwining of `F₂`, `F₀`, associativity and unitality.
pub fn check_monoidal(f: &Functor, gen: &GeneratorSet) -> Result<Report> {
    let mut report = Report::new();
    let unit = gen.unit().clone();
    let target_unit = HModule::trivial(f.target());
    report.push(run_check("monoidal.intertwiners", "structure maps are morphisms", gen.atom_pairs(), |(x, y)| {
        let (fx, fy, fxy) = (f.object(&x)?, f.object(&y)?, f.object(&tensor(&x, &y)?)?);
        let m = f.f2(&x, &y)?;
        Ok(first_non_intertwining(&m, &tensor(&fx, &fy)?, &fxy)
            .map(|i| Witness::at(names(&[&x, &y])).detail(format!("F₂ fails to commute with basis element {i}"))))
    })?);
    report.push(run_check("monoidal.unit_intertwiner", "structure maps are morphisms", [()], |_| {
        Ok(first_non_intertwining(&f.f0()?, &target_unit, &f.object(&unit)?)
            .map(|i| Witness::at(vec!["𝟙".into()]).detail(format!("F₀ fails to commute with basis element {i}"))))
    })?);
    report.push(run_check(
        "monoidal.associativity",
        "F₂(X,Y⊗Z)(Id⊗F₂(Y,Z)) = F₂(X⊗Y,Z)(F₂(X,Y)⊗Id)",
        gen.atom_triples(),
        |(x, y, z)| {
            let (fx, fz) = (f.object(&x)?, f.object(&z)?);
            let (xy, yz) = (tensor(&x, &y)?, tensor(&y, &z)?);
            let lhs = &f.f2(&x, &yz)? * &id(fx.dim()).kron(&f.f2(&y, &z)?);
            let rhs = &f.f2(&xy, &z)? * &f.f2(&x, &y)?.kron(&id(fz.dim()));
            Ok(compare(&[&x, &y, &z], &lhs, &rhs))
        },
    )?);
    report.push(run_check("monoidal.unitality", "F₂(𝟙,X)(F₀⊗Id) = Id = F₂(X,𝟙)(Id⊗F₀)", &gen.atoms, |x| {
        let fx = f.object(x)?;
        let f0 = f.f0()?;
        let left = &f.f2(&unit, x)? * &f0.kron(&id(fx.dim()));
        let right = &f.f2(x, &unit)? * &id(fx.dim()).kron(&f0);
        Ok(compare(&[x], &left, &id(fx.dim())).or_else(|| compare(&[x], &right, &id(fx.dim()))))
    })?);
    Ok(report)
}

/// Coassociativity and counitality of `F²`, `F⁰`.
pub fn check_comonoidal(f: &Functor, gen: &GeneratorSet) -> Result<Report> {
    let mut report = Report::new();
    let unit = gen.unit().clone();
    report.push(run_check(
        "comonoidal.coassociativity",
        "(F²(X,Y)⊗Id)F²(X⊗Y,Z) = (Id⊗F²(Y,Z))F²(X,Y⊗Z)",
        gen.atom_triples(),
        |(x, y, z)| {
            let (fx, fz) = (f.object(&x)?, f.object(&z)?);
            let (xy, yz) = (tensor(&x, &y)?, tensor(&y, &z)?);
            let lhs = &f.fc2(&x, &y)?.kron(&id(fz.dim())) * &f.fc2(&xy, &z)?;
            let rhs = &id(fx.dim()).kron(&f.fc2(&y, &z)?) * &f.fc2(&x, &yz)?;
            Ok(compare(&[&x, &y, &z], &lhs, &rhs))
        },
    )?);
    report.push(run_check("comonoidal.counitality", "(F⁰⊗Id)F²(𝟙,X) = Id = (Id⊗F⁰)F²(X,𝟙)", &gen.atoms, |x| {
        let fx = f.object(x)?;
        let f0 = f.fc0()?;
        let left = &f0.kron(&id(fx.dim())) * &f.fc2(&unit, x)?;
        let right = &id(fx.dim()).kron(&f0) * &f.fc2(x, &unit)?;
        Ok(compare(&[x], &left, &id(fx.dim())).or_else(|| compare(&[x], &right, &id(fx.dim()))))
    })?);
    Ok(report)
}

/// Outcome of [`check_frobenius_functor_equations`].
#[derive(Clone, Debug)]
pub struct FrobeniusFunctorAudit {
    pub report: Report,
    /// Common `β₂` with `F₂F² = β₂·Id` on every atom pair.
    pub separable: Option<Rational>,
    /// `β₀ = F⁰F₀` when separable and nonzero.
    pub special: Option<Rational>,
}

/// Both Frobenius compatibility equations on atom triples, comonoidal
/// coherence, and extraction of the separability scalars.
pub fn check_frobenius_functor_equations(f: &Functor, gen: &GeneratorSet) -> Result<FrobeniusFunctorAudit> {
    let mut report = check_comonoidal(f, gen)?;
    report.push(run_check(
        "frobenius_functor.left",
        "(Id⊗F₂(Y,Z))(F²(X,Y)⊗Id) = F²(X,Y⊗Z)F₂(X⊗Y,Z)",
        gen.atom_triples(),
        |(x, y, z)| {
            let (fx, fz) = (f.object(&x)?, f.object(&z)?);
            let (xy, yz) = (tensor(&x, &y)?, tensor(&y, &z)?);
            let lhs = &id(fx.dim()).kron(&f.f2(&y, &z)?) * &f.fc2(&x, &y)?.kron(&id(fz.dim()));
            let rhs = &f.fc2(&x, &yz)? * &f.f2(&xy, &z)?;
            Ok(compare(&[&x, &y, &z], &lhs, &rhs))
        },
    )?);
    report.push(run_check(
        "frobenius_functor.right",
        "(F₂(X,Y)⊗Id)(Id⊗F²(Y,Z)) = F²(X⊗Y,Z)F₂(X,Y⊗Z)",
        gen.atom_triples(),
        |(x, y, z)| {
            let (fx, fz) = (f.object(&x)?, f.object(&z)?);
            let (xy, yz) = (tensor(&x, &y)?, tensor(&y, &z)?);
            let lhs = &f.f2(&x, &y)?.kron(&id(fz.dim())) * &id(fx.dim()).kron(&f.fc2(&y, &z)?);
            let rhs = &f.fc2(&xy, &z)? * &f.f2(&x, &yz)?;
            Ok(compare(&[&x, &y, &z], &lhs, &rhs))
        },
    )?);
    let mut beta: Option<Rational> = None;
    let mut separable = true;
    for (x, y) in gen.atom_pairs() {
        let prod = &f.f2(&x, &y)? * &f.fc2(&x, &y)?;
        match (prod.as_scalar().filter(|b| !b.is_zero()), &beta) {
            (Some(b), None) => beta = Some(b),
            (Some(b), Some(prev)) if &b == prev => {}
            _ => {
                separable = false;
                break;
            }
        }
    }
    let separable = if separable { beta } else { None };
    let beta0 = (&f.fc0()? * &f.f0()?).get(0, 0).clone();
    let special = separable.as_ref().and_then(|_| (!beta0.is_zero()).then_some(beta0));
    Ok(FrobeniusFunctorAudit { report, separable, special })
}

// ---------------------------------------------------------------------------
// Duality transforms

/// `ζ_X : F(∨X) -> ∨F(X)` and its inverse.
pub fn zeta(f: &Functor, x: &HModule) -> Result<(Matrix, Matrix)> {
    let dx = left_dual(x)?.module;
    let fx = f.object(x)?;
    let fdx = f.object(&dx)?;
    let (a, b, d) = (fdx.dim(), fx.dim(), x.dim());
    let ev_bar = &(&f.fc0()? * &f.morphism(&ev_matrix(d))) * &f.f2(&dx, x)?;
    let zeta = &ev_bar.kron(&id(b)) * &id(a).kron(&coev_matrix(b));
    let coev_bar = &(&f.fc2(x, &dx)? * &f.morphism(&coev_matrix(d))) * &f.f0()?;
    let zeta_inv = &ev_matrix(b).kron(&id(a)) * &id(b).kron(&coev_bar);
    Ok((zeta, zeta_inv))
}

/// `ξ_X = ∨((ζ_X)⁻¹) ∘ ζ_{∨X} : F(∨∨X) -> ∨∨F(X)`.
pub fn xi(f: &Functor, x: &HModule) -> Result<Matrix> {
    let dx = left_dual(x)?.module;
    let (_, zeta_inv) = zeta(f, x)?;
    let (zeta_dual, _) = zeta(f, &dx)?;
    let out = &zeta_inv.transpose() * &zeta_dual;
    Ok(match f.xi_scale() {
        Some(l) => out.scale(l),
        None => out,
    })
}

/// `ζζ⁻¹ = id` and `ζ⁻¹ζ = id` at every word.
pub fn check_zeta(f: &Functor, gen: &GeneratorSet) -> Result<Check> {
    run_check("zeta.inverse", "ζ and its inverse compose to identities", &gen.words, |x| {
        let (z, zi) = zeta(f, x)?;
        let n = z.rows();
        Ok(compare(&[x], &(&z * &zi), &id(n)).or_else(|| compare(&[x], &(&zi * &z), &id(z.cols()))))
    })
}

/// `ζ^{GF}_X = ζ^G_{F(X)} ∘ G(ζ^F_X)` and the same law for `ξ`.
pub fn check_duality_composition(g: &Functor, f: &Functor, gen: &GeneratorSet) -> Result<Report> {
    let gf = Functor::compose(g, f);
    let mut report = Report::new();
    report.push(run_check("zeta.composition", "ζ^{GF}_X = ζ^G_{F(X)} ∘ G(ζ^F_X)", &gen.words, |x| {
        let lhs = zeta(&gf, x)?.0;
        let rhs = &zeta(g, &f.object(x)?)?.0 * &g.morphism(&zeta(f, x)?.0);
        Ok(compare(&[x], &lhs, &rhs))
    })?);
    report.push(run_check("xi.composition", "ξ^{GF}_X = ξ^G_{F(X)} ∘ G(ξ^F_X)", &gen.words, |x| {
        let lhs = xi(&gf, x)?;
        let rhs = &xi(g, &f.object(x)?)? * &g.morphism(&xi(f, x)?);
        Ok(compare(&[x], &lhs, &rhs))
    })?);
    report.push(run_check("xi.invertible", "ξ is invertible", &gen.words, |x| {
        let m = xi(f, x)?;
        Ok((!m.is_invertible()).then(|| Witness::at(names(&[x])).detail("ξ is singular")))
    })?);
    Ok(report)
}

// ---------------------------------------------------------------------------
// Pivotal, braided and ribbon functors

/// `𝔭_{F(X)} = ξ_X ∘ F(𝔭_X)` at every word.
pub fn is_pivotal_functor(f: &Functor, gen: &GeneratorSet) -> Result<Check> {
    run_check("functor.pivotal", "𝔭_{F(X)} = ξ_X ∘ F(𝔭_X)", &gen.words, |x| {
        let lhs = pivotal_iso(&f.object(x)?)?;
        let rhs = &xi(f, x)? * &f.morphism(&pivotal_iso(x)?);
        Ok(compare(&[x], &lhs, &rhs))
    })
}

/// `F₂(Y,X) d_{F(X),F(Y)} = F(c_{X,Y}) F₂(X,Y)` on atom pairs.
pub fn is_braided_functor(f: &Functor, gen: &GeneratorSet) -> Result<Check> {
    run_check("functor.braided", "F₂(Y,X)∘d_{F(X),F(Y)} = F(c_{X,Y})∘F₂(X,Y)", gen.atom_pairs(), |(x, y)| {
        let (fx, fy) = (f.object(&x)?, f.object(&y)?);
        let lhs = &f.f2(&y, &x)? * &braiding(&fx, &fy)?;
        let rhs = &f.morphism(&braiding(&x, &y)?) * &f.f2(&x, &y)?;
        Ok(compare(&[&x, &y], &lhs, &rhs))
    })
}

/// `F²(Y,X) F(c_{X,Y}) = d_{F(X),F(Y)} F²(X,Y)` on atom pairs.
pub fn is_cobraided_functor(f: &Functor, gen: &GeneratorSet) -> Result<Check> {
    run_check("functor.cobraided", "F²(Y,X)∘F(c_{X,Y}) = d_{F(X),F(Y)}∘F²(X,Y)", gen.atom_pairs(), |(x, y)| {
        let (fx, fy) = (f.object(&x)?, f.object(&y)?);
        let lhs = &f.fc2(&y, &x)? * &f.morphism(&braiding(&x, &y)?);
        let rhs = &braiding(&fx, &fy)? * &f.fc2(&x, &y)?;
        Ok(compare(&[&x, &y], &lhs, &rhs))
    })
}

/// `F(θ_X) = θ_{F(X)}` for both twists at every word.
pub fn is_ribbon_functor(f: &Functor, gen: &GeneratorSet) -> Result<Check> {
    run_check("functor.ribbon", "F(θ_X) = θ_{F(X)}", &gen.words, |x| {
        let src = twists(x)?;
        let tgt = twists(&f.object(x)?)?;
        Ok(compare(&[x], &f.morphism(&src.left), &tgt.left)
            .or_else(|| compare(&[x], &f.morphism(&src.right), &tgt.right)))
    })
}

/// Left and right twists agree at every word of the category.
pub fn check_ribbon_category(gen: &GeneratorSet) -> Result<Check> {
    run_check("category.ribbon", "θ^l = θ^r", &gen.words, |x| {
        let t = twists(x)?;
        Ok(compare(&[x], &t.left, &t.right))
    })
}

// ---------------------------------------------------------------------------
// Natural transformations

/// A family `α_X : F(X) -> G(X)`.
#[derive(Clone)]
pub struct NaturalTransformation {
    pub name: String,
    pub source: Functor,
    pub target: Functor,
    pub family: Arc<dyn Fn(&HModule) -> Result<Matrix> + Send + Sync>,
}

/// Naturality against intertwiner spans between atoms; with `monoidal`,
/// also `G₂(X,Y)(α_X⊗α_Y) = α_{X⊗Y}F₂(X,Y)` and `α_𝟙F₀ = G₀`.
pub fn check_natural(alpha: &NaturalTransformation, gen: &GeneratorSet, monoidal: bool) -> Result<Report> {
    let (f, g) = (&alpha.source, &alpha.target);
    let prefix = &alpha.name;
    let mut report = Report::new();
    report.push(run_check(&format!("{prefix}.components"), "components are morphisms", &gen.words, |x| {
        let a = (alpha.family)(x)?;
        Ok(first_non_intertwining(&a, &f.object(x)?, &g.object(x)?)
            .map(|i| Witness::at(names(&[x])).detail(format!("component fails at basis element {i}"))))
    })?);
    report.push(run_check(&format!("{prefix}.naturality"), "α_Y F(f) = G(f) α_X", gen.atom_pairs(), |(x, y)| {
        let (ax, ay) = ((alpha.family)(&x)?, (alpha.family)(&y)?);
        for h in intertwiner_basis(&x, &y)? {
            let lhs = &ay * &f.morphism(&h);
            let rhs = &g.morphism(&h) * &ax;
            if let Some(w) = compare(&[&x, &y], &lhs, &rhs) {
                return Ok(Some(w));
            }
        }
        Ok(None)
    })?);
    if monoidal {
        report.push(run_check(
            &format!("{prefix}.monoidal"),
            "G₂(X,Y)(α_X⊗α_Y) = α_{X⊗Y}F₂(X,Y)",
            gen.atom_pairs(),
            |(x, y)| {
                let lhs = &g.f2(&x, &y)? * &(alpha.family)(&x)?.kron(&(alpha.family)(&y)?);
                let rhs = &(alpha.family)(&tensor(&x, &y)?)? * &f.f2(&x, &y)?;
                Ok(compare(&[&x, &y], &lhs, &rhs))
            },
        )?);
        let unit = gen.unit().clone();
        report.push(run_check(&format!("{prefix}.monoidal_unit"), "α_𝟙 F₀ = G₀", [()], |_| {
            let lhs = &(alpha.family)(&unit)? * &f.f0()?;
            Ok(compare(&[&unit], &lhs, &g.f0()?))
        })?);
    }
    Ok(report)
}

// ---------------------------------------------------------------------------
// Adjunctions

/// Restriction `U ⊣ R` coinduction along a Hopf map, with the unit
/// `η^r : Id → RU` and counit `ε^r : UR → Id`.
#[derive(Clone)]
pub struct Adjunction {
    pub model: Arc<Coinduction>,
    pub left: Functor,
    pub right: Functor,
}

impl Adjunction {
    pub fn new(small: Arc<HopfAlgebra>, big: Arc<HopfAlgebra>, map: HopfMap) -> Result<Self> {
        let model = Arc::new(Coinduction::new(small.clone(), big.clone(), map.clone())?);
        let left = restriction_functor(small, big, map)?;
        let right = Functor::coinduction(model.clone());
        Ok(Self { model, left, right })
    }

    pub fn identity(h: Arc<HopfAlgebra>) -> Result<Self> {
        let map = HopfMap::identity(&h);
        Self::new(h.clone(), h, map)
    }

    pub fn unit(&self, x: &HModule) -> Result<Matrix> {
        self.model.unit(x)
    }

    pub fn counit(&self, y: &HModule) -> Result<Matrix> {
        self.model.counit(y)
    }

    /// `R(ε_Y) η_{R(Y)} = Id` on `D`-words and `ε_{U(X)} U(η_X) = Id` on
    /// `C`-words.
    pub fn check_snakes(&self, d_gen: &GeneratorSet, c_gen: &GeneratorSet) -> Result<Report> {
        let mut report = Report::new();
        report.push(run_check("adjunction.snake_right", "R(ε_Y) η_{R(Y)} = Id_{R(Y)}", &d_gen.words, |y| {
            let ry = self.model.object(y)?;
            let lhs = &self.model.morphism(&self.counit(y)?) * &self.unit(&ry)?;
            Ok(compare(&[y], &lhs, &id(ry.dim())))
        })?);
        report.push(run_check("adjunction.snake_left", "ε_{U(X)} U(η_X) = Id_{U(X)}", &c_gen.words, |x| {
            let ux = self.model.restrict(x)?;
            let lhs = &self.counit(&ux)? * &self.unit(x)?;
            Ok(compare(&[x], &lhs, &id(x.dim())))
        })?);
        Ok(report)
    }

    /// `η^r : Id_C ⇒ RU` as a monoidal natural transformation.
    pub fn unit_transformation(&self) -> NaturalTransformation {
        let this = self.clone();
        NaturalTransformation {
            name: "unit".into(),
            source: Functor::Identity(self.model.big.clone()),
            target: Functor::compose(&self.right, &self.left),
            family: Arc::new(move |x| this.unit(x)),
        }
    }

    /// `ε^r : UR ⇒ Id_D` as a monoidal natural transformation.
    pub fn counit_transformation(&self) -> NaturalTransformation {
        let this = self.clone();
        NaturalTransformation {
            name: "counit".into(),
            source: Functor::compose(&self.left, &self.right),
            target: Functor::Identity(self.model.small.clone()),
            family: Arc::new(move |y| this.counit(y)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::hopf::drinfeld_double;

    fn setup(name: &str) -> (Adjunction, GeneratorSet, GeneratorSet) {
        let file = catalog::load(name).unwrap();
        let h = Arc::new(file.to_hopf().unwrap());
        let d = Arc::new(drinfeld_double(&h).unwrap());
        let adj = Adjunction::new(h.clone(), d.clone(), HopfMap::double_inclusion(&h)).unwrap();
        let seeds = file.seed_modules(&h).unwrap();
        let d_gen = GeneratorSet::new(&h, &seeds, 2).unwrap();
        let r1 = adj.model.object(&HModule::trivial(&h)).unwrap();
        let c_gen = GeneratorSet::new(&d, &[r1], 1).unwrap();
        (adj, d_gen, c_gen)
    }

    #[test]
    fn identity_functor_is_everything() {
        let file = catalog::load("c2_super").unwrap();
        let h = Arc::new(file.to_hopf().unwrap());
        let gen = GeneratorSet::new(&h, &file.seed_modules(&h).unwrap(), 2).unwrap();
        let f = Functor::Identity(h.clone());
        assert!(check_functoriality(&f, &gen).unwrap().all_passed());
        assert!(check_monoidal(&f, &gen).unwrap().all_passed());
        let audit = check_frobenius_functor_equations(&f, &gen).unwrap();
        assert!(audit.report.all_passed());
        assert_eq!(audit.separable, Some(Rational::one()));
        assert_eq!(audit.special, Some(Rational::one()));
        assert!(check_zeta(&f, &gen).unwrap().passed());
        for x in &gen.words {
            let (z, zi) = zeta(&f, x).unwrap();
            assert!(z.is_identity() && zi.is_identity());
        }
        assert!(is_pivotal_functor(&f, &gen).unwrap().passed());
        assert!(is_braided_functor(&f, &gen).unwrap().passed());
        assert!(is_cobraided_functor(&f, &gen).unwrap().passed());
        assert!(is_ribbon_functor(&f, &gen).unwrap().passed());
    }

    #[test]
    fn double_inclusion_adjunction_is_monoidal() {
        let (adj, d_gen, c_gen) = setup("c2");
        assert!(adj.check_snakes(&d_gen, &c_gen).unwrap().all_passed());
        assert!(check_monoidal(&adj.right, &d_gen).unwrap().all_passed());
        assert!(check_monoidal(&adj.left, &c_gen).unwrap().all_passed());
        assert!(check_functoriality(&adj.right, &d_gen).unwrap().all_passed());
        assert!(check_natural(&adj.unit_transformation(), &c_gen, true).unwrap().all_passed());
        assert!(check_natural(&adj.counit_transformation(), &d_gen, true).unwrap().all_passed());
    }

    #[test]
    fn restriction_is_pivotal_and_strong() {
        let (adj, _, c_gen) = setup("s3");
        assert!(is_pivotal_functor(&adj.left, &c_gen).unwrap().passed());
        let audit = check_frobenius_functor_equations(&adj.left, &c_gen).unwrap();
        assert!(audit.report.all_passed());
        assert_eq!(audit.separable, Some(Rational::one()));
    }

    #[test]
    fn restriction_is_braided_and_cobraided_when_r_matrices_match() {
        let map = catalog::diagonal_map();
        let source = Arc::new(catalog::load("c2_super").unwrap().to_hopf().unwrap());
        let (target, phi) = map.to_map(source.dim()).unwrap();
        let target = Arc::new(target);
        let seeds = map.target.seed_modules(&target).unwrap();
        let gen = GeneratorSet::new(&target, &seeds, 1).unwrap();
        let u = restriction_functor(source.clone(), target.clone(), phi.clone()).unwrap();
        assert!(is_braided_functor(&u, &gen).unwrap().passed());
        assert!(is_cobraided_functor(&u, &gen).unwrap().passed());

        let plain = Arc::new(catalog::load("c2").unwrap().to_hopf().unwrap());
        let trivial_r = {
            let mut r = vec![Rational::zero(); 4];
            r[0] = Rational::one();
            Arc::new((*plain).clone().with_rmatrix(r).unwrap())
        };
        let bad = restriction_functor(trivial_r, target, phi).unwrap();
        let check = is_braided_functor(&bad, &gen).unwrap();
        assert!(!check.passed());
        assert!(check.witness.is_some());
    }

    #[test]
    fn composite_duality_transforms_compose() {
        let (adj, d_gen, c_gen) = setup("c2");
        let report = check_duality_composition(&adj.left, &adj.right, &d_gen).unwrap();
        // RU needs a comonoidal structure on R, which is only available
        // after the Frobenius construction, so ζ is unavailable here.
        assert!(report.checks.iter().all(|c| c.status != crate::report::Status::Fail));
        let report = check_duality_composition(&adj.left, &Functor::Identity(adj.model.big.clone()), &c_gen).unwrap();
        assert!(report.all_passed(), "{report:?}");
    }

    #[test]
    fn scaled_xi_breaks_pivotality() {
        let (adj, _, c_gen) = setup("c2");
        let f = adj.left.with_fault(Fault::ScaleXi(Rational::from_integer(2)));
        let check = is_pivotal_functor(&f, &c_gen).unwrap();
        assert!(!check.passed());
        assert!(check.witness.is_some());
    }

    #[test]
    fn memoization_is_transparent() {
        let (adj, d_gen, _) = setup("s3");
        let cold = Coinduction::new(adj.model.small.clone(), adj.model.big.clone(), adj.model.map.clone()).unwrap();
        for x in &d_gen.atoms {
            for y in &d_gen.atoms {
                let warm_first = adj.model.kelly_r2(x, y).unwrap();
                assert_eq!(warm_first, cold.kelly_r2(x, y).unwrap());
                assert_eq!(warm_first, adj.model.kelly_r2(x, y).unwrap());
            }
        }
    }
}
