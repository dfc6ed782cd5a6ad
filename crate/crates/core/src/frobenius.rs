//! Frobenius algebras in `Rep(H)`: verification, classification and a
//! deterministic solver for Frobenius forms.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::rational::Rational;
use crate::repcat::{coev_matrix, ev_matrix, first_non_intertwining, intertwiner_basis, pivotal_iso, tensor, twists, braiding, HModule};
use crate::report::{Check, Report, Witness};

#[derive(Clone, Debug)]
pub struct FrobeniusAlgebra {
    pub carrier: HModule,
    /// `A ⊗ A -> A`
    pub m: Matrix,
    /// `𝟙 -> A`
    pub u: Matrix,
    /// `A -> A ⊗ A`
    pub delta: Matrix,
    /// `A -> 𝟙`
    pub nu: Matrix,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    /// `β₂` with `mΔ = β₂·id`, when `mΔ` is a nonzero scalar.
    pub separable: Option<Rational>,
    /// `β₀` with `νu = β₀`, present only for separable algebras with `νu ≠ 0`.
    pub special: Option<Rational>,
    /// `None` when the category has no pivot.
    pub symmetric: Option<bool>,
    /// `None` when the category has no braiding.
    pub commutative: Option<bool>,
    /// `None` when the twist is unavailable or not two-sided at `A`.
    pub framed: Option<bool>,
}

impl Classification {
    pub fn is_separable(&self) -> bool {
        self.separable.is_some()
    }

    pub fn is_special(&self) -> bool {
        self.special.is_some()
    }

    /// Separable with `β₂ = 1`.
    pub fn is_separable_normalized(&self) -> bool {
        self.separable.as_ref().is_some_and(Rational::is_one)
    }

    /// Special with `β₂ = 1`; `β₀` is free.
    pub fn is_special_normalized(&self) -> bool {
        self.is_separable_normalized() && self.is_special()
    }
}

fn id(n: usize) -> Matrix {
    Matrix::identity(n)
}

impl FrobeniusAlgebra {
    pub fn dim(&self) -> usize {
        self.carrier.dim()
    }

    fn check_shapes(&self) -> Result<()> {
        let d = self.dim();
        let expect = [
            ("m", &self.m, (d, d * d)),
            ("u", &self.u, (d, 1)),
            ("delta", &self.delta, (d * d, d)),
            ("nu", &self.nu, (1, d)),
        ];
        for (name, m, shape) in expect {
            if m.shape() != shape {
                return Err(Error::Shape(format!("{name} is {:?}, expected {shape:?}", m.shape())));
            }
        }
        Ok(())
    }

    /// The pairing `ν m` as a `d x d` matrix, entry `(a, b) = ν(e_a e_b)`.
    pub fn pairing(&self) -> Matrix {
        let d = self.dim();
        Matrix::from_vec(d, d, (&self.nu * &self.m).entries().to_vec()).expect("shape")
    }

    /// Coproduct `(id ⊗ m)(κ ⊗ id)` induced by the current form, or `None`
    /// when the pairing is degenerate.
    pub fn induced_delta(&self) -> Option<Matrix> {
        induced_delta(&self.m, &self.nu, self.dim())
    }

    /// Replaces `ν` by `λν` and rescales `Δ` so the structure stays Frobenius.
    pub fn scale_form(&self, lambda: &Rational) -> Self {
        let inv = lambda.recip().expect("nonzero scale");
        Self { nu: self.nu.scale(lambda), delta: self.delta.scale(&inv), ..self.clone() }
    }

    pub fn trivial(unit: &HModule) -> Self {
        Self { carrier: unit.clone(), m: id(1), u: id(1), delta: id(1), nu: id(1) }
    }
}

fn induced_delta(m: &Matrix, nu: &Matrix, d: usize) -> Option<Matrix> {
    let p = Matrix::from_vec(d, d, (nu * m).entries().to_vec()).expect("shape");
    let kappa = p.inverse().ok()?;
    let kappa = Matrix::from_vec(d * d, 1, kappa.entries().to_vec()).expect("shape");
    Some(&id(d).kron(m) * &kappa.kron(&id(d)))
}

fn label(a: &HModule) -> Vec<String> {
    vec![a.name().to_string()]
}

fn equation(id_: &str, anchor: &str, a: &HModule, lhs: &Matrix, rhs: &Matrix) -> Check {
    Check::from_outcome(id_, anchor, 1, (lhs != rhs).then(|| Witness::mismatch(label(a), lhs, rhs)))
}

/// The seven Frobenius-algebra identities plus intertwining of the maps.
pub fn verify_frobenius(f: &FrobeniusAlgebra) -> Result<Report> {
    f.check_shapes()?;
    let a = &f.carrier;
    let d = f.dim();
    let unit = HModule::trivial(a.algebra());
    let aa = tensor(a, a)?;
    let mut report = Report::new();

    let maps = [("m", &f.m, &aa, a), ("u", &f.u, &unit, a), ("delta", &f.delta, a, &aa), ("nu", &f.nu, a, &unit)];
    let bad = maps
        .iter()
        .find_map(|(name, m, s, t)| first_non_intertwining(m, s, t).map(|i| (name, i)));
    report.push(Check::from_outcome(
        "frobenius.intertwiners",
        "structure maps are module maps",
        4,
        bad.map(|(name, i)| Witness::at(label(a)).detail(format!("{name} fails to commute with basis element {i}"))),
    ));

    let (m, u, delta, nu) = (&f.m, &f.u, &f.delta, &f.nu);
    report.push(equation("frobenius.associativity", "associativity", a, &(m * &m.kron(&id(d))), &(m * &id(d).kron(m))));
    report.push(equation("frobenius.unit_left", "left unitality", a, &(m * &u.kron(&id(d))), &id(d)));
    report.push(equation("frobenius.unit_right", "right unitality", a, &(m * &id(d).kron(u)), &id(d)));
    report.push(equation(
        "frobenius.coassociativity",
        "coassociativity",
        a,
        &(&delta.kron(&id(d)) * delta),
        &(&id(d).kron(delta) * delta),
    ));
    report.push(equation("frobenius.counit_left", "left counitality", a, &(&nu.kron(&id(d)) * delta), &id(d)));
    report.push(equation("frobenius.counit_right", "right counitality", a, &(&id(d).kron(nu) * delta), &id(d)));
    let left = &m.kron(&id(d)) * &id(d).kron(delta);
    let middle = delta * m;
    let right = &id(d).kron(m) * &delta.kron(&id(d));
    let law = if left != middle {
        Some(Witness::mismatch(label(a), &left, &middle).detail("(m⊗id)(id⊗Δ) ≠ Δm"))
    } else if middle != right {
        Some(Witness::mismatch(label(a), &middle, &right).detail("Δm ≠ (id⊗m)(Δ⊗id)"))
    } else {
        None
    };
    report.push(Check::from_outcome("frobenius.law", "Frobenius law", 2, law));
    Ok(report)
}

/// Both sides of the symmetry identity, maps `A -> ∨A`.
pub fn symmetry_sides(f: &FrobeniusAlgebra) -> Result<(Matrix, Matrix)> {
    let d = f.dim();
    let p_inv = pivotal_iso(&f.carrier)?
        .inverse()
        .map_err(|_| Error::Construction("pivot does not act invertibly".into()))?;
    let num = &f.nu * &f.m;
    let lhs = &num.kron(&id(d)) * &id(d).kron(&coev_matrix(d));
    let rhs = &(&id(d).kron(&num) * &id(d).kron(&p_inv).kron(&id(d))) * &coev_matrix(d).kron(&id(d));
    Ok((lhs, rhs))
}

/// Both sides of the alternate symmetry identity, maps `∨A -> A`.
pub fn alternate_symmetry_sides(f: &FrobeniusAlgebra) -> Result<(Matrix, Matrix)> {
    let d = f.dim();
    let p = pivotal_iso(&f.carrier)?;
    let du = &f.delta * &f.u;
    let lhs = &ev_matrix(d).kron(&id(d)) * &id(d).kron(&du);
    let rhs = &(&id(d).kron(&ev_matrix(d)) * &id(d).kron(&p).kron(&id(d))) * &du.kron(&id(d));
    Ok((lhs, rhs))
}

pub fn classify(f: &FrobeniusAlgebra) -> Result<Classification> {
    f.check_shapes()?;
    let md = &f.m * &f.delta;
    let separable = md.as_scalar().filter(|b| !b.is_zero());
    let nu_u = (&f.nu * &f.u).get(0, 0).clone();
    let special = separable.as_ref().and_then(|_| (!nu_u.is_zero()).then_some(nu_u));
    let symmetric = match symmetry_sides(f) {
        Ok((l, r)) => Some(l == r),
        Err(Error::MissingData(_)) => None,
        Err(e) => return Err(e),
    };
    let a = &f.carrier;
    let commutative = match braiding(a, a) {
        Ok(c) => Some(&f.m * &c == f.m),
        Err(Error::MissingData(_)) => None,
        Err(e) => return Err(e),
    };
    let framed = match (commutative, twists(a)) {
        (Some(comm), Ok(t)) if t.left == t.right => Some(comm && t.left.is_identity()),
        (_, Err(e)) if !matches!(e, Error::MissingData(_)) => return Err(e),
        _ => None,
    };
    Ok(Classification { separable, special, symmetric, commutative, framed })
}

/// Evaluates the alternate identity and compares its verdict with the
/// defining one.
pub fn symmetric_alternate_check(f: &FrobeniusAlgebra) -> Result<Report> {
    let (l1, r1) = symmetry_sides(f)?;
    let (l2, r2) = alternate_symmetry_sides(f)?;
    let mut report = Report::new();
    let a = &f.carrier;
    let defining = l1 == r1;
    let alternate = l2 == r2;
    let inverse = &l2 * &l1 == id(f.dim()) && &r2 * &r1 == id(f.dim());
    report.push(Check::from_outcome(
        "symmetric.alternate_inverse",
        "alternate sides invert the defining sides",
        2,
        (!inverse).then(|| Witness::at(label(a)).detail("alternate sides are not inverse to the defining sides")),
    ));
    report.push(Check::from_outcome(
        "symmetric.criteria_agree",
        "alternate symmetry criterion agrees with the definition",
        1,
        (defining != alternate).then(|| {
            Witness::at(label(a)).detail(format!("defining criterion {defining}, alternate criterion {alternate}"))
        }),
    ));
    Ok(report)
}

/// Result of the Frobenius-form sweep.
#[derive(Clone, Debug)]
pub enum FormOutcome {
    Found {
        algebra: FrobeniusAlgebra,
        /// Coordinates of `ν` in the invariant-functional basis.
        coefficients: Vec<Rational>,
    },
    NotFound {
        /// Dimension of `Hom_H(A, 𝟙)`.
        space_dim: usize,
        /// Every candidate tested, in coordinates of the functional basis.
        tested: Vec<Vec<Rational>>,
        /// True when the sweep is exhaustive (space of dimension ≤ 1).
        proof: bool,
    },
}

/// Deterministic candidate list: each basis functional, then
/// `Σ_i kⁱ ν_i` for `k = 1..=dim`.
fn candidates(k: usize) -> Vec<Vec<Rational>> {
    let mut out = Vec::new();
    for i in 0..k {
        let mut c = vec![Rational::zero(); k];
        c[i] = Rational::one();
        out.push(c);
    }
    if k > 1 {
        for base in 1..=k as i64 {
            let mut pw = Rational::one();
            let mut c = Vec::with_capacity(k);
            for _ in 0..k {
                c.push(pw.clone());
                pw = &pw * &Rational::from_integer(base);
            }
            if !out.contains(&c) {
                out.push(c);
            }
        }
    }
    out
}

/// Searches `Hom_H(A, 𝟙)` for a form with nondegenerate pairing and builds
/// the induced Frobenius structure.
pub fn solve_frobenius_form(a: &HModule, m: &Matrix, u: &Matrix) -> Result<FormOutcome> {
    let d = a.dim();
    if m.shape() != (d, d * d) || u.shape() != (d, 1) {
        return Err(Error::Shape("algebra maps have the wrong shape".into()));
    }
    let unit = HModule::trivial(a.algebra());
    let aa = tensor(a, a)?;
    let is_algebra = first_non_intertwining(m, &aa, a).is_none()
        && first_non_intertwining(u, &unit, a).is_none()
        && m * &m.kron(&id(d)) == m * &id(d).kron(m)
        && (m * &u.kron(&id(d))).is_identity()
        && (m * &id(d).kron(u)).is_identity();
    if !is_algebra {
        return Err(Error::Precondition(format!("{} with the given maps is not an algebra", a.name())));
    }
    let basis = intertwiner_basis(a, &unit)?;
    let k = basis.len();
    let mut tested = Vec::new();
    for coeffs in candidates(k) {
        let mut nu = Matrix::zeros(1, d);
        for (c, b) in coeffs.iter().zip(&basis) {
            nu.add_block(0, 0, b, c);
        }
        if let Some(delta) = induced_delta(m, &nu, d) {
            let algebra = FrobeniusAlgebra { carrier: a.clone(), m: m.clone(), u: u.clone(), delta, nu };
            let report = verify_frobenius(&algebra)?;
            if !report.all_passed() {
                return Err(Error::TheoremViolation(format!(
                    "form-induced structure on {} is not Frobenius: {:?}",
                    a.name(),
                    report.failures().next()
                )));
            }
            return Ok(FormOutcome::Found { algebra, coefficients: coeffs });
        }
        tested.push(coeffs);
    }
    Ok(FormOutcome::NotFound { space_dim: k, tested, proof: k <= 1 })
}

/// Rescales `ν` so that `mΔ = id` when `mΔ` is a nonzero scalar.
pub fn normalize(f: &FrobeniusAlgebra) -> FrobeniusAlgebra {
    match (&f.m * &f.delta).as_scalar() {
        Some(beta) if !beta.is_zero() && !beta.is_one() => f.scale_form(&beta),
        _ => f.clone(),
    }
}

/// Image of a Frobenius algebra under a Frobenius monoidal functor:
/// `m' = F(m)F₂`, `u' = F(u)F₀`, `Δ' = F²F(Δ)`, `ν' = F⁰F(ν)`.
pub fn push_through_functor(f: &FrobeniusAlgebra, functor: &crate::functors::Functor) -> Result<FrobeniusAlgebra> {
    let a = &f.carrier;
    let carrier = functor.object(a)?;
    Ok(FrobeniusAlgebra {
        m: &functor.morphism(&f.m) * &functor.f2(a, a)?,
        u: &functor.morphism(&f.u) * &functor.f0()?,
        delta: &functor.fc2(a, a)? * &functor.morphism(&f.delta),
        nu: &functor.fc0()? * &functor.morphism(&f.nu),
        carrier,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::HopfAlgebra;
    use std::sync::Arc;

    fn vec_algebra() -> Arc<HopfAlgebra> {
        Arc::new(HopfAlgebra::group_algebra("k", &["1"], &[vec![0]]).unwrap())
    }

    fn carrier(d: usize) -> HModule {
        HModule::new("A", vec_algebra(), vec![id(d)]).unwrap()
    }

    fn r(n: i64) -> Rational {
        Rational::from_integer(n)
    }

    /// ℚ[x]/(x² − c) on the basis 1, x.
    fn quadratic(c: i64) -> (HModule, Matrix, Matrix) {
        let m = Matrix::from_i64_rows(&[&[1, 0, 0, c], &[0, 1, 1, 0]]);
        (carrier(2), m, Matrix::from_i64_rows(&[&[1], &[0]]))
    }

    fn group_c2_frobenius() -> FrobeniusAlgebra {
        let (a, m, u) = quadratic(1);
        let delta = Matrix::from_i64_rows(&[&[1, 0], &[0, 1], &[0, 1], &[1, 0]]);
        FrobeniusAlgebra { carrier: a, m, u, delta, nu: Matrix::from_i64_rows(&[&[1, 0]]) }
    }

    #[test]
    fn unit_object_is_special_symmetric() {
        let unit = HModule::trivial(&vec_algebra());
        let f = FrobeniusAlgebra::trivial(&unit);
        assert!(verify_frobenius(&f).unwrap().all_passed());
        let c = classify(&f).unwrap();
        assert_eq!(c.separable, Some(r(1)));
        assert_eq!(c.special, Some(r(1)));
        assert_eq!(c.symmetric, Some(true));
    }

    #[test]
    fn group_algebra_of_c2() {
        let f = group_c2_frobenius();
        assert!(verify_frobenius(&f).unwrap().all_passed());
        let c = classify(&f).unwrap();
        assert_eq!(c.separable, Some(r(2)));
        assert_eq!(c.special, Some(r(1)));
        assert_eq!(c.symmetric, Some(true));
        assert!(symmetric_alternate_check(&f).unwrap().all_passed());
        assert_eq!(f.induced_delta().unwrap(), f.delta);
        let n = normalize(&f);
        assert!(classify(&n).unwrap().is_separable_normalized());
        assert!(verify_frobenius(&n).unwrap().all_passed());
    }

    #[test]
    fn corrupted_coproduct_breaks_frobenius_law() {
        let mut f = group_c2_frobenius();
        f.delta = Matrix::from_i64_rows(&[&[1, 0], &[0, 0], &[0, 0], &[1, 1]]);
        let report = verify_frobenius(&f).unwrap();
        assert!(!report.get("frobenius.law").unwrap().passed());
    }

    #[test]
    fn matrix_algebra_with_twisted_trace_is_not_symmetric() {
        // Basis E11, E12, E21, E22 (index 2i + j).
        let d = 4;
        let mut m = Matrix::zeros(d, d * d);
        for (i, j) in (0..2).flat_map(|i| (0..2).map(move |j| (i, j))) {
            for l in 0..2 {
                m.set(2 * i + l, (2 * i + j) * d + (2 * j + l), r(1));
            }
        }
        let u = Matrix::from_i64_rows(&[&[1], &[0], &[0], &[1]]);
        let nu = Matrix::from_i64_rows(&[&[1, 0, 0, 2]]);
        let delta = induced_delta(&m, &nu, d).unwrap();
        let f = FrobeniusAlgebra { carrier: carrier(4), m, u, delta, nu };
        assert!(verify_frobenius(&f).unwrap().all_passed());
        assert_eq!(classify(&f).unwrap().symmetric, Some(false));
        assert!(symmetric_alternate_check(&f).unwrap().all_passed());
    }

    #[test]
    fn solver_avoids_degenerate_candidate() {
        // ℚ[x]/(x²): ν(a + bx) = a is degenerate, ν(a + bx) = b is not.
        let (a, m, u) = quadratic(0);
        match solve_frobenius_form(&a, &m, &u).unwrap() {
            FormOutcome::Found { algebra, .. } => {
                assert_eq!(algebra.nu, Matrix::from_i64_rows(&[&[0, 1]]));
            }
            other => panic!("no form found: {other:?}"),
        }
        assert_eq!(candidates(2)[0], vec![r(1), r(0)]);
    }

    #[test]
    fn solver_rejects_non_algebras() {
        let (a, mut m, u) = quadratic(1);
        m.set(0, 0, r(2));
        assert!(matches!(solve_frobenius_form(&a, &m, &u), Err(Error::Precondition(_))));
    }
}
