//! Randomized invariants over the C₂ and S₃ doubles and the diagonal instance.

use std::sync::{Arc, OnceLock};

use cohopf::catalog;
use cohopf::cohopf::{construct_frobenius_on_right_adjoint, half_braiding_component};
use cohopf::frobenius::{classify, FrobeniusAlgebra};
use cohopf::functors::check_frobenius_functor_equations;
use cohopf::linalg::Matrix;
use cohopf::pipeline::{build_instance, MapChoice, RunOptions};
use cohopf::rational::Rational;
use cohopf::repcat::{intertwiner_basis, is_intertwiner, HModule};
use cohopf::theorems::{form_suite, Instance};
use proptest::prelude::*;

fn c2_double() -> &'static (Instance, FrobeniusAlgebra) {
    static CELL: OnceLock<(Instance, FrobeniusAlgebra)> = OnceLock::new();
    CELL.get_or_init(|| {
        let (inst, _) = build_instance(&catalog::load("c2").unwrap(), &RunOptions::default()).unwrap();
        let form = form_suite(&inst, true).unwrap().1.unwrap().algebra;
        (inst, form)
    })
}

fn s3_identity() -> &'static Instance {
    static CELL: OnceLock<Instance> = OnceLock::new();
    CELL.get_or_init(|| {
        let opts = RunOptions { map: MapChoice::Identity, ..RunOptions::default() };
        build_instance(&catalog::load("s3").unwrap(), &opts).unwrap().0
    })
}

fn nonzero_rational() -> impl Strategy<Value = Rational> {
    (1i64..7, 1i64..7, any::<bool>()).prop_map(|(p, q, neg)| Rational::new(if neg { -p } else { p }, q))
}

/// A random combination of an intertwiner basis.
fn combination(basis: &[Matrix], coeffs: &[i64], rows: usize, cols: usize) -> Matrix {
    let mut out = Matrix::zeros(rows, cols);
    for (b, c) in basis.iter().zip(coeffs) {
        out.add_block(0, 0, b, &Rational::from_integer(*c));
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    /// Rescaling the form rescales both separability scalars identically.
    #[test]
    fn separability_scalar_tracks_form_rescaling(lambda in nonzero_rational()) {
        let (inst, form) = c2_double();
        let scaled = form.scale_form(&lambda);
        let algebra_side = classify(&scaled).unwrap();
        let data = construct_frobenius_on_right_adjoint(&inst.adj, &scaled).unwrap();
        let audit = check_frobenius_functor_equations(&data.functor(), &inst.d_gen).unwrap();
        prop_assert!(audit.report.all_passed());
        prop_assert_eq!(&audit.separable, &algebra_side.separable);
        prop_assert_eq!(&audit.special, &algebra_side.special);
        prop_assert_eq!(audit.separable, Some(lambda.recip().unwrap()));
    }

    /// `R(g∘f) = R(g)R(f)` and `R(f)` is a morphism for random intertwiners.
    #[test]
    fn coinduction_is_functorial_on_random_morphisms(
        i in 0usize..16, j in 0usize..16, k in 0usize..16,
        cf in proptest::collection::vec(-3i64..4, 8),
        cg in proptest::collection::vec(-3i64..4, 8),
    ) {
        let (inst, _) = c2_double();
        let words = &inst.d_gen.words;
        let (x, y, z) = (&words[i % words.len()], &words[j % words.len()], &words[k % words.len()]);
        let f = combination(&intertwiner_basis(x, y).unwrap(), &cf, y.dim(), x.dim());
        let g = combination(&intertwiner_basis(y, z).unwrap(), &cg, z.dim(), y.dim());
        let model = &inst.adj.model;
        prop_assert_eq!(model.morphism(&(&g * &f)), &model.morphism(&g) * &model.morphism(&f));
        prop_assert!(is_intertwiner(&model.morphism(&f), &model.object(x).unwrap(), &model.object(y).unwrap()));
    }

    /// `h^l_{𝟙,-}` and the half-braiding are natural in the big category.
    #[test]
    fn half_braiding_is_natural(i in 0usize..64, j in 0usize..64, c in proptest::collection::vec(-3i64..4, 8)) {
        let (inst, _) = c2_double();
        let words = &inst.c_gen.words;
        let (x, y) = (&words[i % words.len()], &words[j % words.len()]);
        let h = combination(&intertwiner_basis(x, y).unwrap(), &c, y.dim(), x.dim());
        let a = inst.adj.model.object(&HModule::trivial(&inst.adj.model.small)).unwrap();
        let sx = half_braiding_component(&inst.adj, x).unwrap();
        let sy = half_braiding_component(&inst.adj, y).unwrap();
        let lhs = &sy * &h.kron(&Matrix::identity(a.dim()));
        let rhs = &Matrix::identity(a.dim()).kron(&h) * &sx;
        prop_assert_eq!(lhs, rhs);
    }

    /// Operators of the identity adjunction are identities on random words.
    #[test]
    fn identity_adjunction_operators_are_trivial(i in 0usize..64, j in 0usize..64) {
        let inst = s3_identity();
        let words = &inst.d_gen.words;
        let (x, y) = (&words[i % words.len()], &words[j % words.len()]);
        prop_assert!(inst.adj.model.hl(x, y).unwrap().is_identity());
        prop_assert!(inst.adj.model.hr(x, y).unwrap().is_identity());
        prop_assert!(inst.adj.model.kelly_r2(x, y).unwrap().is_identity());
    }
}

#[test]
fn seeds_of_the_big_category_are_modules() {
    let (inst, _) = c2_double();
    for m in &inst.c_gen.seeds {
        m.verify().unwrap();
        assert!(Arc::ptr_eq(m.algebra(), &inst.adj.model.big));
    }
}
