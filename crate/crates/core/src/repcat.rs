//! The strict monoidal category `Rep(H)` of finite-dimensional modules.
//!
//! Morphisms are plain matrices; [`HMorphism`] pairs one with its endpoints
//! when the endpoints matter. Unitors and associators are identities, and the
//! double dual `∨∨V` is `V` as a vector space with action `ρ(S²(-))`.

use std::collections::HashMap;
use std::fmt;
use std::hash::{DefaultHasher, Hash, Hasher};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::hopf::HopfAlgebra;
use crate::linalg::Matrix;
use crate::rational::Rational;
use crate::report::{Check, Report, Witness};

struct ModuleData {
    name: String,
    algebra: Arc<HopfAlgebra>,
    dim: usize,
    action: Vec<Matrix>,
    fingerprint: u64,
}

/// A finite-dimensional module, cheap to clone.
#[derive(Clone)]
pub struct HModule(Arc<ModuleData>);

impl HModule {
    /// Builds a module from one action matrix per basis element. Shapes are
    /// checked here; the module axioms are checked by [`HModule::verify`].
    pub fn new(name: impl Into<String>, algebra: Arc<HopfAlgebra>, action: Vec<Matrix>) -> Result<Self> {
        if action.len() != algebra.dim() {
            return Err(Error::Shape(format!(
                "{} action matrices for an algebra of dimension {}",
                action.len(),
                algebra.dim()
            )));
        }
        let dim = action.first().map_or(0, Matrix::rows);
        if let Some(bad) = action.iter().find(|m| m.shape() != (dim, dim)) {
            return Err(Error::Shape(format!("action matrix {:?} in a module of dim {dim}", bad.shape())));
        }
        let mut hasher = DefaultHasher::new();
        dim.hash(&mut hasher);
        action.hash(&mut hasher);
        let fingerprint = hasher.finish();
        Ok(Self(Arc::new(ModuleData { name: name.into(), algebra, dim, action, fingerprint })))
    }

    pub fn trivial(algebra: &Arc<HopfAlgebra>) -> Self {
        let action = algebra.counit.iter().map(|c| Matrix::scalar(c.clone())).collect();
        Self::new("𝟙", algebra.clone(), action).expect("trivial module is well-shaped")
    }

    pub fn regular(algebra: &Arc<HopfAlgebra>) -> Self {
        let action = (0..algebra.dim()).map(|i| algebra.left_mul_matrix(&algebra.basis_elem(i))).collect();
        Self::new("H", algebra.clone(), action).expect("regular module is well-shaped")
    }

    pub fn name(&self) -> &str {
        &self.0.name
    }

    pub fn with_name(&self, name: impl Into<String>) -> Self {
        let d = &self.0;
        Self(Arc::new(ModuleData {
            name: name.into(),
            algebra: d.algebra.clone(),
            dim: d.dim,
            action: d.action.clone(),
            fingerprint: d.fingerprint,
        }))
    }

    pub fn algebra(&self) -> &Arc<HopfAlgebra> {
        &self.0.algebra
    }

    pub fn dim(&self) -> usize {
        self.0.dim
    }

    pub fn action(&self) -> &[Matrix] {
        &self.0.action
    }

    pub fn rho(&self, i: usize) -> &Matrix {
        &self.0.action[i]
    }

    /// Action of an arbitrary element.
    pub fn act(&self, x: &[Rational]) -> Matrix {
        let mut m = Matrix::zeros(self.dim(), self.dim());
        for (i, c) in x.iter().enumerate() {
            if !c.is_zero() {
                m.add_block(0, 0, self.rho(i), c);
            }
        }
        m
    }

    pub fn is_unit(&self) -> bool {
        self.dim() == 1 && self.0.action.iter().zip(&self.0.algebra.counit).all(|(m, c)| m.get(0, 0) == c)
    }

    pub fn same_algebra(&self, other: &HModule) -> bool {
        Arc::ptr_eq(self.algebra(), other.algebra()) || self.algebra() == other.algebra()
    }

    /// `ρ(1) = I` and `ρ(e_i)ρ(e_j) = Σ_k mul[i][j][k] ρ(e_k)`.
    pub fn verify(&self) -> Result<()> {
        let h = self.algebra();
        if !self.act(&h.unit).is_identity() {
            return Err(Error::Construction(format!("{}: unit does not act as the identity", self.name())));
        }
        for i in 0..h.dim() {
            for j in 0..h.dim() {
                let lhs = self.rho(i) * self.rho(j);
                let mut rhs = Matrix::zeros(self.dim(), self.dim());
                for (k, c) in h.mul_basis(i, j) {
                    rhs.add_block(0, 0, self.rho(*k), c);
                }
                if lhs != rhs {
                    return Err(Error::Construction(format!(
                        "{}: action is not multiplicative at ({}, {})",
                        self.name(),
                        h.label(i),
                        h.label(j)
                    )));
                }
            }
        }
        Ok(())
    }
}

impl PartialEq for HModule {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.fingerprint == other.0.fingerprint
                && self.dim() == other.dim()
                && self.same_algebra(other)
                && self.0.action == other.0.action)
    }
}

impl Eq for HModule {}

impl Hash for HModule {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.0.fingerprint.hash(state);
    }
}

impl fmt::Debug for HModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HModule({}, dim {} over {})", self.name(), self.dim(), self.algebra().name)
    }
}

#[derive(Clone, Debug)]
pub struct HMorphism {
    pub source: HModule,
    pub target: HModule,
    pub matrix: Matrix,
}

impl HMorphism {
    pub fn new(source: HModule, target: HModule, matrix: Matrix) -> Result<Self> {
        if matrix.shape() != (target.dim(), source.dim()) {
            return Err(Error::Shape(format!(
                "morphism {:?} between modules of dims {} -> {}",
                matrix.shape(),
                source.dim(),
                target.dim()
            )));
        }
        Ok(Self { source, target, matrix })
    }

    pub fn is_intertwiner(&self) -> bool {
        is_intertwiner(&self.matrix, &self.source, &self.target)
    }
}

pub fn is_intertwiner(f: &Matrix, v: &HModule, w: &HModule) -> bool {
    first_non_intertwining(f, v, w).is_none()
}

/// Index of the first basis element that `f` fails to commute with.
pub fn first_non_intertwining(f: &Matrix, v: &HModule, w: &HModule) -> Option<usize> {
    if f.shape() != (w.dim(), v.dim()) {
        return Some(usize::MAX);
    }
    (0..v.algebra().dim()).find(|&i| &(f * v.rho(i)) != &(w.rho(i) * f))
}

fn tensor_name(v: &HModule, w: &HModule) -> String {
    if v.is_unit() {
        w.name().to_string()
    } else if w.is_unit() {
        v.name().to_string()
    } else {
        format!("{}⊗{}", v.name(), w.name())
    }
}

pub fn tensor(v: &HModule, w: &HModule) -> Result<HModule> {
    if !v.same_algebra(w) {
        return Err(Error::AlgebraMismatch(format!("{} and {} live over different algebras", v.name(), w.name())));
    }
    let h = v.algebra();
    let d = v.dim() * w.dim();
    let action = (0..h.dim())
        .map(|i| {
            let mut m = Matrix::zeros(d, d);
            for (j, k, c) in &h.comul[i] {
                m.add_block(0, 0, &v.rho(*j).kron(w.rho(*k)), c);
            }
            m
        })
        .collect();
    HModule::new(tensor_name(v, w), h.clone(), action)
}

/// Left-to-right tensor product of a word; the empty word is `𝟙`.
pub fn tensor_all(algebra: &Arc<HopfAlgebra>, word: &[HModule]) -> Result<HModule> {
    let mut acc = HModule::trivial(algebra);
    for m in word {
        acc = tensor(&acc, m)?;
    }
    Ok(acc)
}

#[derive(Clone, Debug)]
pub struct LeftDual {
    pub module: HModule,
    /// `∨V ⊗ V -> 𝟙`
    pub ev: Matrix,
    /// `𝟙 -> V ⊗ ∨V`
    pub coev: Matrix,
}

/// Row vector pairing `e^a ⊗ e_b` to `δ_ab`.
pub fn ev_matrix(d: usize) -> Matrix {
    let mut m = Matrix::zeros(1, d * d);
    for a in 0..d {
        m.set(0, a * d + a, Rational::one());
    }
    m
}

/// Column vector `Σ_a e_a ⊗ e^a`.
pub fn coev_matrix(d: usize) -> Matrix {
    ev_matrix(d).transpose()
}

fn dual_name(v: &HModule) -> String {
    if v.is_unit() {
        "𝟙".into()
    } else if v.name().contains('⊗') {
        format!("∨({})", v.name())
    } else {
        format!("∨{}", v.name())
    }
}

pub fn left_dual(v: &HModule) -> Result<LeftDual> {
    let h = v.algebra();
    let action = (0..h.dim()).map(|i| v.act(&h.antipode.col(i)).transpose()).collect();
    let module = HModule::new(dual_name(v), h.clone(), action)?;
    Ok(LeftDual { module, ev: ev_matrix(v.dim()), coev: coev_matrix(v.dim()) })
}

/// `∨f = fᵀ : ∨W -> ∨V` for `f : V -> W`.
pub fn dual_morphism(f: &Matrix) -> Matrix {
    f.transpose()
}

/// `𝔭_V = ρ_V(g) : V -> ∨∨V`.
pub fn pivotal_iso(v: &HModule) -> Result<Matrix> {
    let g = v
        .algebra()
        .pivot
        .as_ref()
        .ok_or_else(|| Error::MissingData(format!("{} has no pivot", v.algebra().name)))?;
    Ok(v.act(g))
}

/// `c_{V,W} = flip ∘ (ρ_V ⊗ ρ_W)(R) : V ⊗ W -> W ⊗ V`.
pub fn braiding(v: &HModule, w: &HModule) -> Result<Matrix> {
    if !v.same_algebra(w) {
        return Err(Error::AlgebraMismatch(format!("{} and {} live over different algebras", v.name(), w.name())));
    }
    let h = v.algebra();
    let r = h.rmatrix.as_ref().ok_or_else(|| Error::MissingData(format!("{} has no R-matrix", h.name)))?;
    let n = h.dim();
    let d = v.dim() * w.dim();
    let mut m = Matrix::zeros(d, d);
    for (idx, c) in r.iter().enumerate() {
        if !c.is_zero() {
            m.add_block(0, 0, &v.rho(idx / n).kron(w.rho(idx % n)), c);
        }
    }
    Ok(&Matrix::flip(v.dim(), w.dim()) * &m)
}

#[derive(Clone, Debug)]
pub struct Twists {
    pub left: Matrix,
    pub right: Matrix,
}

/// `θ^l = (ev ⊗ id)(id ⊗ c)(c̃oev ⊗ id)` and `θ^r = (id ⊗ ẽv)(c ⊗ id)(id ⊗ coev)`,
/// with the pivotal right duality `c̃oev = (id ⊗ 𝔭⁻¹)coev_{∨X}`,
/// `ẽv = ev_{∨X}(𝔭 ⊗ id)`.
pub fn twists(v: &HModule) -> Result<Twists> {
    let d = v.dim();
    let c = braiding(v, v)?;
    let p = pivotal_iso(v)?;
    let p_inv = p.inverse().map_err(|_| Error::Construction("pivot does not act invertibly".into()))?;
    let id = Matrix::identity(d);
    let coev_tilde = &Matrix::identity(d).kron(&p_inv) * &coev_matrix(d);
    let ev_tilde = &ev_matrix(d) * &p.kron(&id);
    let left = &(&ev_matrix(d).kron(&id) * &id.kron(&c)) * &coev_tilde.kron(&id);
    let right = &(&id.kron(&ev_tilde) * &c.kron(&id)) * &id.kron(&coev_matrix(d));
    Ok(Twists { left, right })
}

/// Basis of `Hom_H(V, W)` from the kernel of the stacked intertwining
/// constraints, refined one basis element at a time.
pub fn intertwiner_basis(v: &HModule, w: &HModule) -> Result<Vec<Matrix>> {
    if !v.same_algebra(w) {
        return Err(Error::AlgebraMismatch(format!("{} and {} live over different algebras", v.name(), w.name())));
    }
    let (dv, dw) = (v.dim(), w.dim());
    let mut span = Matrix::identity(dv * dw);
    for i in 0..v.algebra().dim() {
        if span.cols() == 0 {
            break;
        }
        // vec_row(F ρ_V - ρ_W F) = (I ⊗ ρ_Vᵀ - ρ_W ⊗ I) vec_row(F)
        let constraint = &Matrix::identity(dw).kron(&v.rho(i).transpose()) - &w.rho(i).kron(&Matrix::identity(dv));
        let restricted = &constraint * &span;
        if restricted.is_zero() {
            continue;
        }
        span = &span * &restricted.kernel_matrix();
    }
    let canonical = span.transpose().rref();
    Ok((0..canonical.pivots.len())
        .map(|k| Matrix::from_vec(dw, dv, canonical.matrix.row(k).to_vec()).expect("shape"))
        .collect())
}

/// A half-braiding stored extensionally over a generator set.
/// Cyclic submodules `H·e_i` generated by coordinate vectors, one per
/// distinct subspace, in order of `i`. Each comes with its inclusion matrix.
pub fn cyclic_submodules(m: &HModule) -> Result<Vec<(HModule, Matrix)>> {
    let (d, n) = (m.dim(), m.algebra().dim());
    let mut seen: Vec<Matrix> = Vec::new();
    let mut out = Vec::new();
    for i in 0..d {
        let span = Matrix::from_fn(n, d, |j, a| m.rho(j).get(a, i).clone());
        let rr = span.rref();
        let k = rr.pivots.len();
        let rows = rr.matrix.block(0, 0, k, d);
        if seen.contains(&rows) {
            continue;
        }
        let inclusion = rows.transpose();
        // Reduced rows carry an identity at the pivot columns, so the pivot
        // rows of `ρ(b)·P` are the coordinates in the submodule basis.
        let action = (0..n)
            .map(|j| (m.rho(j) * &inclusion).select_rows(&rr.pivots))
            .collect();
        let sub = HModule::new(format!("{}⟨{i}⟩", m.name()), m.algebra().clone(), action)?;
        seen.push(rows);
        out.push((sub, inclusion));
    }
    Ok(out)
}

#[derive(Clone, Debug)]
pub struct HalfBraiding {
    pub carrier: HModule,
    /// `σ_X : X ⊗ A -> A ⊗ X`
    pub family: HashMap<HModule, Matrix>,
}

/// Atoms and bounded-length tensor words over them.
#[derive(Clone, Debug)]
pub struct GeneratorSet {
    pub algebra: Arc<HopfAlgebra>,
    pub seeds: Vec<HModule>,
    pub depth: usize,
    /// `𝟙`, the seeds and their left duals, deduplicated, in that order.
    pub atoms: Vec<HModule>,
    /// Every word of length `1..=depth` over the non-unit atoms, plus `𝟙`.
    pub words: Vec<HModule>,
}

impl GeneratorSet {
    pub fn new(algebra: &Arc<HopfAlgebra>, seeds: &[HModule], depth: usize) -> Result<Self> {
        let mut atoms = vec![HModule::trivial(algebra)];
        let push = |atoms: &mut Vec<HModule>, m: HModule| {
            if !atoms.contains(&m) {
                atoms.push(m);
            }
        };
        for s in seeds {
            if !Arc::ptr_eq(s.algebra(), algebra) && s.algebra() != algebra {
                return Err(Error::AlgebraMismatch(format!("seed {} is over another algebra", s.name())));
            }
            push(&mut atoms, s.clone());
        }
        for s in seeds {
            push(&mut atoms, left_dual(s)?.module);
        }
        let proper: Vec<HModule> = atoms.iter().filter(|a| !a.is_unit()).cloned().collect();
        let mut words = vec![atoms[0].clone()];
        let mut layer: Vec<HModule> = vec![atoms[0].clone()];
        for _ in 0..depth {
            let mut next = Vec::new();
            for w in &layer {
                for a in &proper {
                    next.push(tensor(w, a)?);
                }
            }
            for m in &next {
                if !words.contains(m) {
                    words.push(m.clone());
                }
            }
            layer = next;
        }
        Ok(Self { algebra: algebra.clone(), seeds: seeds.to_vec(), depth, atoms, words })
    }

    pub fn unit(&self) -> &HModule {
        &self.atoms[0]
    }

    pub fn atom_pairs(&self) -> Vec<(HModule, HModule)> {
        let mut out = Vec::new();
        for a in &self.atoms {
            for b in &self.atoms {
                out.push((a.clone(), b.clone()));
            }
        }
        out
    }

    pub fn atom_triples(&self) -> Vec<(HModule, HModule, HModule)> {
        let mut out = Vec::new();
        for a in &self.atoms {
            for b in &self.atoms {
                for c in &self.atoms {
                    out.push((a.clone(), b.clone(), c.clone()));
                }
            }
        }
        out
    }
}

fn labels(ms: &[&HModule]) -> Vec<String> {
    ms.iter().map(|m| m.name().to_string()).collect()
}

/// Naturality against intertwiner spans between words, invertibility, and
/// multiplicativity `σ_{X⊗Y} = (σ_X ⊗ id_Y)(id_X ⊗ σ_Y)` on word pairs whose
/// product is again a word.
pub fn check_half_braiding(hb: &HalfBraiding, gen: &GeneratorSet) -> Result<Report> {
    let a = &hb.carrier;
    let get = |x: &HModule| -> Result<&Matrix> {
        hb.family
            .get(x)
            .ok_or_else(|| Error::Coverage(format!("half-braiding has no component at {}", x.name())))
    };
    for x in &gen.words {
        get(x)?;
    }
    let mut report = Report::new();
    let da = a.dim();

    let mut failure = None;
    let mut count = 0;
    for x in &gen.words {
        let s = get(x)?;
        count += 1;
        let xa = tensor(x, a)?;
        let ax = tensor(a, x)?;
        if let Some(i) = first_non_intertwining(s, &xa, &ax) {
            failure = Some(Witness::at(labels(&[x])).detail(format!("σ does not commute with basis element {i}")));
            break;
        }
        if !s.is_invertible() {
            failure = Some(Witness::at(labels(&[x])).detail("σ is not invertible"));
            break;
        }
    }
    report.push(Check::from_outcome("half_braiding.iso", "half-braiding components are isomorphisms", count, failure));

    let mut failure = None;
    let mut count = 0;
    'nat: for x in &gen.atoms {
        for y in &gen.atoms {
            for f in intertwiner_basis(x, y)? {
                count += 1;
                let lhs = &Matrix::identity(da).kron(&f) * get(x)?;
                let rhs = get(y)? * &f.kron(&Matrix::identity(da));
                if lhs != rhs {
                    failure = Some(Witness::mismatch(labels(&[x, y]), &lhs, &rhs));
                    break 'nat;
                }
            }
        }
    }
    report.push(Check::from_outcome("half_braiding.natural", "half-braiding is natural", count, failure));

    let mut failure = None;
    let mut count = 0;
    'mult: for x in &gen.atoms {
        for y in &gen.atoms {
            let xy = tensor(x, y)?;
            let Some(sxy) = hb.family.get(&xy) else { continue };
            count += 1;
            let rhs = &get(x)?.kron(&Matrix::identity(y.dim())) * &Matrix::identity(x.dim()).kron(get(y)?);
            if *sxy != rhs {
                failure = Some(Witness::mismatch(labels(&[x, y]), sxy, &rhs));
                break 'mult;
            }
        }
    }
    report.push(Check::from_outcome("half_braiding.multiplicative", "σ_{X⊗Y} = (σ_X⊗id)(id⊗σ_Y)", count, failure));
    Ok(report)
}
