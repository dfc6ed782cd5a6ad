//! Finite-dimensional Hopf algebras given by structure constants.
//!
//! Conventions: `e_i e_j = Σ_k mul[i][j][k] e_k`, `Δ(e_i) = Σ comul[i][j][k]
//! e_j ⊗ e_k`, and the antipode matrix acts on coordinate columns, so
//! `S(e_j) = Σ_i antipode[i][j] e_i`. Elements of `H^{⊗k}` are sparse maps
//! from index tuples to coefficients.
//!
//! The Drinfeld double is `D(H) = H*^cop ⋈ H` on the basis `e^a ⊗ e_b`
//! (flattened to `a * n + b`) with multiplication
//! `(f ⊗ a)(g ⊗ b) = f · g(S⁻¹(a₃) ? a₁) ⊗ a₂ b` and R-matrix
//! `Σ_i (ε ⊗ e_i) ⊗ (e^i ⊗ 1)`.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::rational::Rational;
use crate::report::{Check, Report, Witness};

pub type Elem = Vec<Rational>;
pub type Tensor = BTreeMap<Vec<usize>, Rational>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfAlgebra {
    pub name: String,
    pub basis: Vec<String>,
    /// `mul[i * n + j]` lists the nonzero `(k, c)` of `e_i e_j`.
    pub mul: Vec<Vec<(usize, Rational)>>,
    pub unit: Elem,
    /// `comul[i]` lists the nonzero `(j, k, c)` of `Δ(e_i)`.
    pub comul: Vec<Vec<(usize, usize, Rational)>>,
    pub counit: Elem,
    pub antipode: Matrix,
    pub pivot: Option<Elem>,
    /// Element of `H ⊗ H`, coordinate of `e_i ⊗ e_j` at `i * n + j`.
    pub rmatrix: Option<Elem>,
    pub ribbon: Option<Elem>,
}

fn add_term(t: &mut Tensor, key: Vec<usize>, c: Rational) {
    if c.is_zero() {
        return;
    }
    use std::collections::btree_map::Entry;
    match t.entry(key) {
        Entry::Vacant(v) => {
            v.insert(c);
        }
        Entry::Occupied(mut o) => {
            *o.get_mut() += &c;
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

fn check_len(what: &str, v: &[Rational], n: usize) -> Result<()> {
    if v.len() != n {
        return Err(Error::Shape(format!("{what} has length {}, expected {n}", v.len())));
    }
    Ok(())
}

impl HopfAlgebra {
    /// Builds and shape-checks an algebra from sparse structure constants.
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        name: impl Into<String>,
        basis: Vec<String>,
        mul: &[(usize, usize, usize, Rational)],
        unit: Elem,
        comul: &[(usize, usize, usize, Rational)],
        counit: Elem,
        antipode: Matrix,
    ) -> Result<Self> {
        let n = basis.len();
        let mut m = vec![Vec::new(); n * n];
        let mut dense = BTreeMap::new();
        for (i, j, k, c) in mul {
            if *i >= n || *j >= n || *k >= n {
                return Err(Error::Shape(format!("mul index ({i}, {j}, {k}) out of range for dim {n}")));
            }
            add_term(&mut dense, vec![*i, *j, *k], c.clone());
        }
        for (key, c) in dense {
            m[key[0] * n + key[1]].push((key[2], c));
        }
        let mut d = vec![Vec::new(); n];
        let mut dense = BTreeMap::new();
        for (i, j, k, c) in comul {
            if *i >= n || *j >= n || *k >= n {
                return Err(Error::Shape(format!("comul index ({i}, {j}, {k}) out of range for dim {n}")));
            }
            add_term(&mut dense, vec![*i, *j, *k], c.clone());
        }
        for (key, c) in dense {
            d[key[0]].push((key[1], key[2], c));
        }
        check_len("unit", &unit, n)?;
        check_len("counit", &counit, n)?;
        if antipode.shape() != (n, n) {
            return Err(Error::Shape(format!("antipode is {:?}, expected {n}x{n}", antipode.shape())));
        }
        Ok(Self {
            name: name.into(),
            basis,
            mul: m,
            unit,
            comul: d,
            counit,
            antipode,
            pivot: None,
            rmatrix: None,
            ribbon: None,
        })
    }

    pub fn with_pivot(mut self, g: Elem) -> Result<Self> {
        check_len("pivot", &g, self.dim())?;
        self.pivot = Some(g);
        Ok(self)
    }

    pub fn with_rmatrix(mut self, r: Elem) -> Result<Self> {
        check_len("rmatrix", &r, self.dim() * self.dim())?;
        self.rmatrix = Some(r);
        Ok(self)
    }

    pub fn with_ribbon(mut self, t: Elem) -> Result<Self> {
        check_len("ribbon", &t, self.dim())?;
        self.ribbon = Some(t);
        Ok(self)
    }

    /// Group algebra from a multiplication table `table[a][b] = a·b`.
    pub fn group_algebra(name: impl Into<String>, labels: &[&str], table: &[Vec<usize>]) -> Result<Self> {
        let n = labels.len();
        if table.len() != n || table.iter().any(|r| r.len() != n) {
            return Err(Error::Shape("group table must be n x n".into()));
        }
        let e = (0..n)
            .find(|&e| (0..n).all(|x| table[e][x] == x && table[x][e] == x))
            .ok_or_else(|| Error::Construction("group table has no identity".into()))?;
        let one = Rational::one();
        let mut mul = Vec::new();
        let mut antipode = Matrix::zeros(n, n);
        for a in 0..n {
            for b in 0..n {
                mul.push((a, b, table[a][b], one.clone()));
                if table[a][b] == e {
                    antipode.set(b, a, one.clone());
                }
            }
        }
        let comul: Vec<_> = (0..n).map(|a| (a, a, a, one.clone())).collect();
        let mut unit = vec![Rational::zero(); n];
        unit[e] = one.clone();
        let h = Self::new(
            name,
            labels.iter().map(|s| s.to_string()).collect(),
            &mul,
            unit.clone(),
            &comul,
            vec![one; n],
            antipode,
        )?;
        h.with_pivot(unit)
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis_elem(&self, i: usize) -> Elem {
        let mut v = vec![Rational::zero(); self.dim()];
        v[i] = Rational::one();
        v
    }

    pub fn mul_basis(&self, i: usize, j: usize) -> &[(usize, Rational)] {
        &self.mul[i * self.dim() + j]
    }

    pub fn mul_elems(&self, a: &[Rational], b: &[Rational]) -> Elem {
        let n = self.dim();
        let mut out = vec![Rational::zero(); n];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let xy = x * y;
                for (k, c) in self.mul_basis(i, j) {
                    out[*k].add_mul(&xy, c);
                }
            }
        }
        out
    }

    /// Matrix of `y ↦ x y`.
    pub fn left_mul_matrix(&self, x: &[Rational]) -> Matrix {
        let n = self.dim();
        let mut m = Matrix::zeros(n, n);
        for j in 0..n {
            let col = self.mul_elems(x, &self.basis_elem(j));
            for (i, v) in col.into_iter().enumerate() {
                m.set(i, j, v);
            }
        }
        m
    }

    /// Matrix of `y ↦ y x`.
    pub fn right_mul_matrix(&self, x: &[Rational]) -> Matrix {
        let n = self.dim();
        let mut m = Matrix::zeros(n, n);
        for j in 0..n {
            let col = self.mul_elems(&self.basis_elem(j), x);
            for (i, v) in col.into_iter().enumerate() {
                m.set(i, j, v);
            }
        }
        m
    }

    pub fn apply(&self, m: &Matrix, x: &[Rational]) -> Elem {
        (&*m * &Matrix::column(x)).col(0)
    }

    pub fn antipode_elem(&self, x: &[Rational]) -> Elem {
        self.apply(&self.antipode, x)
    }

    pub fn counit_elem(&self, x: &[Rational]) -> Rational {
        let mut s = Rational::zero();
        for (a, b) in x.iter().zip(&self.counit) {
            s.add_mul(a, b);
        }
        s
    }

    pub fn antipode_inverse(&self) -> Result<Matrix> {
        self.antipode
            .inverse()
            .map_err(|_| Error::Construction(format!("antipode of {} is not invertible", self.name)))
    }

    pub fn label(&self, i: usize) -> String {
        self.basis[i].clone()
    }

    pub fn fmt_elem(&self, x: &[Rational]) -> String {
        let terms: Vec<String> = x
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| if c.is_one() { self.basis[i].clone() } else { format!("({c})*{}", self.basis[i]) })
            .collect();
        if terms.is_empty() { "0".into() } else { terms.join(" + ") }
    }

    pub fn fmt_tensor(&self, t: &Tensor) -> String {
        let terms: Vec<String> = t
            .iter()
            .map(|(k, c)| {
                let legs: Vec<&str> = k.iter().map(|&i| self.basis[i].as_str()).collect();
                format!("({c})*{}", legs.join("⊗"))
            })
            .collect();
        if terms.is_empty() { "0".into() } else { terms.join(" + ") }
    }

    // ---- tensor calculus on H^{⊗k} ----

    pub fn elem_tensor(&self, x: &[Rational]) -> Tensor {
        let mut t = Tensor::new();
        for (i, c) in x.iter().enumerate() {
            add_term(&mut t, vec![i], c.clone());
        }
        t
    }

    /// Two-leg tensor from a flattened `n²` coordinate vector.
    pub fn pair_tensor(&self, x: &[Rational]) -> Tensor {
        let n = self.dim();
        let mut t = Tensor::new();
        for (idx, c) in x.iter().enumerate() {
            add_term(&mut t, vec![idx / n, idx % n], c.clone());
        }
        t
    }

    pub fn pair_coords(&self, t: &Tensor) -> Elem {
        let n = self.dim();
        let mut v = vec![Rational::zero(); n * n];
        for (k, c) in t {
            v[k[0] * n + k[1]] += c;
        }
        v
    }

    pub fn tensor_product(a: &Tensor, b: &Tensor) -> Tensor {
        let mut t = Tensor::new();
        for (ka, ca) in a {
            for (kb, cb) in b {
                let mut key = ka.clone();
                key.extend_from_slice(kb);
                add_term(&mut t, key, ca * cb);
            }
        }
        t
    }

    /// Legwise product in `H^{⊗k}`.
    pub fn tensor_mul(&self, a: &Tensor, b: &Tensor) -> Tensor {
        let mut t = Tensor::new();
        for (ka, ca) in a {
            for (kb, cb) in b {
                let c0 = ca * cb;
                let mut partial: Vec<(Vec<usize>, Rational)> = vec![(Vec::new(), c0)];
                for (i, j) in ka.iter().zip(kb) {
                    let mut next = Vec::new();
                    for (key, c) in &partial {
                        for (k, m) in self.mul_basis(*i, *j) {
                            let mut key2 = key.clone();
                            key2.push(*k);
                            next.push((key2, c * m));
                        }
                    }
                    partial = next;
                }
                for (key, c) in partial {
                    add_term(&mut t, key, c);
                }
            }
        }
        t
    }

    pub fn comul_leg(&self, t: &Tensor, leg: usize) -> Tensor {
        let mut out = Tensor::new();
        for (k, c) in t {
            for (j1, j2, d) in &self.comul[k[leg]] {
                let mut key = k[..leg].to_vec();
                key.push(*j1);
                key.push(*j2);
                key.extend_from_slice(&k[leg + 1..]);
                add_term(&mut out, key, c * d);
            }
        }
        out
    }

    pub fn counit_leg(&self, t: &Tensor, leg: usize) -> Tensor {
        let mut out = Tensor::new();
        for (k, c) in t {
            let e = &self.counit[k[leg]];
            if e.is_zero() {
                continue;
            }
            let mut key = k.clone();
            key.remove(leg);
            add_term(&mut out, key, c * e);
        }
        out
    }

    /// Applies a linear map (column convention) to one leg.
    pub fn map_leg(&self, t: &Tensor, leg: usize, m: &Matrix) -> Tensor {
        let mut out = Tensor::new();
        for (k, c) in t {
            for i in 0..m.rows() {
                let v = m.get(i, k[leg]);
                if v.is_zero() {
                    continue;
                }
                let mut key = k.clone();
                key[leg] = i;
                add_term(&mut out, key, c * v);
            }
        }
        out
    }

    /// Multiplies the legs `leg` and `leg + 1` together.
    pub fn mul_legs(&self, t: &Tensor, leg: usize) -> Tensor {
        let mut out = Tensor::new();
        for (k, c) in t {
            for (m, d) in self.mul_basis(k[leg], k[leg + 1]) {
                let mut key = k[..leg].to_vec();
                key.push(*m);
                key.extend_from_slice(&k[leg + 2..]);
                add_term(&mut out, key, c * d);
            }
        }
        out
    }

    /// Reorders legs: new leg `p` is old leg `perm[p]`.
    pub fn permute(t: &Tensor, perm: &[usize]) -> Tensor {
        t.iter().map(|(k, c)| (perm.iter().map(|&p| k[p]).collect(), c.clone())).collect()
    }

    /// Inserts a leg carrying the unit at position `pos`.
    pub fn insert_unit(&self, t: &Tensor, pos: usize) -> Tensor {
        let mut out = Tensor::new();
        for (k, c) in t {
            for (i, u) in self.unit.iter().enumerate() {
                if u.is_zero() {
                    continue;
                }
                let mut key = k.clone();
                key.insert(pos, i);
                add_term(&mut out, key, c * u);
            }
        }
        out
    }

    pub fn unit_tensor(&self, legs: usize) -> Tensor {
        let mut t = Tensor::new();
        t.insert(Vec::new(), Rational::one());
        for _ in 0..legs {
            t = self.insert_unit(&t, 0);
        }
        t
    }

    pub fn comul_elem(&self, x: &[Rational]) -> Tensor {
        self.comul_leg(&self.elem_tensor(x), 0)
    }

    pub fn rmatrix_tensor(&self) -> Option<Tensor> {
        self.rmatrix.as_ref().map(|r| self.pair_tensor(r))
    }

    /// The two-leg tensor `t` placed on legs `(a, b)` of `H^{⊗3}`.
    pub fn embed3(&self, t: &Tensor, a: usize, b: usize) -> Tensor {
        let third = 3 - a - b;
        let ext = self.insert_unit(t, 2);
        // ext has legs (t0, t1, unit); send them to positions (a, b, third).
        let mut perm = [0usize; 3];
        perm[a] = 0;
        perm[b] = 1;
        perm[third] = 2;
        Self::permute(&ext, &perm)
    }
}

fn tensor_witness(h: &HopfAlgebra, tuple: Vec<String>, lhs: &Tensor, rhs: &Tensor) -> Witness {
    Witness::at(tuple).detail(format!("lhs = {}; rhs = {}", h.fmt_tensor(lhs), h.fmt_tensor(rhs)))
}

fn elem_witness(h: &HopfAlgebra, tuple: Vec<String>, lhs: &[Rational], rhs: &[Rational]) -> Witness {
    Witness::at(tuple).detail(format!("lhs = {}; rhs = {}", h.fmt_elem(lhs), h.fmt_elem(rhs)))
}

/// Checks every Hopf axiom basis-wise, reporting the first violating tuple.
pub fn verify_hopf_axioms(h: &HopfAlgebra) -> Report {
    let n = h.dim();
    let mut report = Report::new();
    let e = |i| h.basis_elem(i);
    let l = |i| h.label(i);

    let mut fail = None;
    'assoc: for i in 0..n {
        for j in 0..n {
            let ij = h.mul_elems(&e(i), &e(j));
            for k in 0..n {
                let lhs = h.mul_elems(&ij, &e(k));
                let rhs = h.mul_elems(&e(i), &h.mul_elems(&e(j), &e(k)));
                if lhs != rhs {
                    fail = Some(elem_witness(h, vec![l(i), l(j), l(k)], &lhs, &rhs));
                    break 'assoc;
                }
            }
        }
    }
    report.push(Check::from_outcome("hopf.associativity", "associativity of multiplication", n * n * n, fail));

    let fail = (0..n).find_map(|i| {
        let x = e(i);
        let left = h.mul_elems(&h.unit, &x);
        let right = h.mul_elems(&x, &h.unit);
        if left != x {
            Some(elem_witness(h, vec![l(i)], &left, &x).detail(format!("1·{} ≠ {}", l(i), l(i))))
        } else if right != x {
            Some(elem_witness(h, vec![l(i)], &right, &x).detail(format!("{}·1 ≠ {}", l(i), l(i))))
        } else {
            None
        }
    });
    report.push(Check::from_outcome("hopf.unitality", "unitality of multiplication", n, fail));

    let fail = (0..n).find_map(|i| {
        let d = h.comul_elem(&e(i));
        let lhs = h.comul_leg(&d, 0);
        let rhs = h.comul_leg(&d, 1);
        (lhs != rhs).then(|| tensor_witness(h, vec![l(i)], &lhs, &rhs))
    });
    report.push(Check::from_outcome("hopf.coassociativity", "coassociativity of comultiplication", n, fail));

    let fail = (0..n).find_map(|i| {
        let d = h.comul_elem(&e(i));
        let x = h.elem_tensor(&e(i));
        let left = h.counit_leg(&d, 0);
        let right = h.counit_leg(&d, 1);
        if left != x {
            Some(tensor_witness(h, vec![l(i)], &left, &x).detail("(ε⊗id)Δ ≠ id".to_string()))
        } else if right != x {
            Some(tensor_witness(h, vec![l(i)], &right, &x).detail("(id⊗ε)Δ ≠ id".to_string()))
        } else {
            None
        }
    });
    report.push(Check::from_outcome("hopf.counitality", "counitality of comultiplication", n, fail));

    let mut fail = None;
    let d1 = h.comul_elem(&h.unit);
    let one_one = h.unit_tensor(2);
    if d1 != one_one {
        fail = Some(tensor_witness(h, vec!["1".into()], &d1, &one_one).detail("Δ(1) ≠ 1⊗1".to_string()));
    }
    let deltas: Vec<Tensor> = (0..n).map(|i| h.comul_elem(&e(i))).collect();
    'dmul: for i in 0..n {
        for j in 0..n {
            if fail.is_some() {
                break 'dmul;
            }
            let lhs = h.comul_elem(&h.mul_elems(&e(i), &e(j)));
            let rhs = h.tensor_mul(&deltas[i], &deltas[j]);
            if lhs != rhs {
                fail = Some(tensor_witness(h, vec![l(i), l(j)], &lhs, &rhs));
            }
        }
    }
    report.push(Check::from_outcome("hopf.comul_algebra_map", "Δ is an algebra map", n * n + 1, fail));

    let mut fail = None;
    if !h.counit_elem(&h.unit).is_one() {
        fail = Some(Witness::at(vec!["1".into()]).detail(format!("ε(1) = {}", h.counit_elem(&h.unit))));
    }
    'emul: for i in 0..n {
        for j in 0..n {
            if fail.is_some() {
                break 'emul;
            }
            let lhs = h.counit_elem(&h.mul_elems(&e(i), &e(j)));
            let rhs = &h.counit[i] * &h.counit[j];
            if lhs != rhs {
                fail = Some(Witness::at(vec![l(i), l(j)]).detail(format!("ε(xy) = {lhs}, ε(x)ε(y) = {rhs}")));
            }
        }
    }
    report.push(Check::from_outcome("hopf.counit_algebra_map", "ε is an algebra map", n * n + 1, fail));

    let fail = (0..n).find_map(|i| {
        let expected: Elem = h.unit.iter().map(|u| u * &h.counit[i]).collect();
        let left = h.mul_legs(&h.map_leg(&deltas[i], 0, &h.antipode), 0);
        let right = h.mul_legs(&h.map_leg(&deltas[i], 1, &h.antipode), 0);
        let exp = h.elem_tensor(&expected);
        if left != exp {
            Some(tensor_witness(h, vec![l(i)], &left, &exp).detail("m(S⊗id)Δ ≠ uε".to_string()))
        } else if right != exp {
            Some(tensor_witness(h, vec![l(i)], &right, &exp).detail("m(id⊗S)Δ ≠ uε".to_string()))
        } else {
            None
        }
    });
    report.push(Check::from_outcome("hopf.antipode", "antipode axioms", n, fail));

    if let Some(g) = &h.pivot {
        report.push(verify_pivot(h, g));
    }
    report
}

fn verify_pivot(h: &HopfAlgebra, g: &[Rational]) -> Check {
    let id = "hopf.pivot";
    let anchor = "pivotal grouplike";
    let n = h.dim();
    let dg = h.comul_elem(g);
    let gg = outer(h, g, g);
    if dg != gg {
        return Check::fail(id, anchor, tensor_witness(h, vec!["g".into()], &dg, &gg).detail("Δ(g) ≠ g⊗g".to_string()));
    }
    if !h.counit_elem(g).is_one() {
        return Check::fail(id, anchor, Witness::at(vec!["g".into()]).detail("ε(g) ≠ 1".to_string()));
    }
    let ginv = h.antipode_elem(g);
    if h.mul_elems(g, &ginv) != h.unit || h.mul_elems(&ginv, g) != h.unit {
        return Check::fail(id, anchor, Witness::at(vec!["g".into()]).detail("g is not invertible".to_string()));
    }
    let s2 = &h.antipode * &h.antipode;
    for i in 0..n {
        let x = h.basis_elem(i);
        let lhs = h.apply(&s2, &x);
        let rhs = h.mul_elems(&h.mul_elems(g, &x), &ginv);
        if lhs != rhs {
            return Check::fail(id, anchor, elem_witness(h, vec![h.label(i)], &lhs, &rhs).detail("S²(x) ≠ g x g⁻¹".to_string()));
        }
    }
    Check::pass(id, anchor, n + 3)
}

fn outer(h: &HopfAlgebra, a: &[Rational], b: &[Rational]) -> Tensor {
    HopfAlgebra::tensor_product(&h.elem_tensor(a), &h.elem_tensor(b))
}

/// Invertibility, intertwining, both hexagons and the Yang–Baxter equation.
pub fn verify_quasitriangular(h: &HopfAlgebra) -> Result<Report> {
    let r = h.rmatrix_tensor().ok_or_else(|| Error::MissingData(format!("{} has no R-matrix", h.name)))?;
    let n = h.dim();
    let mut report = Report::new();
    let one2 = h.unit_tensor(2);

    let candidate = h.map_leg(&r, 0, &h.antipode);
    let inverse_ok = h.tensor_mul(&r, &candidate) == one2 && h.tensor_mul(&candidate, &r) == one2;
    let invertible = inverse_ok || {
        let m = left_mul_matrix2(h, &r);
        n * n <= 256 && m.is_invertible()
    };
    report.push(Check::from_outcome(
        "qt.invertible",
        "R-matrix invertible",
        1,
        (!invertible).then(|| Witness::at(vec!["R".into()]).detail("(S⊗id)(R) is not an inverse of R")),
    ));

    let fail = (0..n).find_map(|i| {
        let d = h.comul_elem(&h.basis_elem(i));
        let dop = HopfAlgebra::permute(&d, &[1, 0]);
        let lhs = h.tensor_mul(&dop, &r);
        let rhs = h.tensor_mul(&r, &d);
        (lhs != rhs).then(|| tensor_witness(h, vec![h.label(i)], &lhs, &rhs))
    });
    report.push(Check::from_outcome("qt.intertwining", "Δ^op(h)·R = R·Δ(h)", n, fail));

    let r13 = h.embed3(&r, 0, 2);
    let r23 = h.embed3(&r, 1, 2);
    let r12 = h.embed3(&r, 0, 1);
    let lhs = h.comul_leg(&r, 0);
    let rhs = h.tensor_mul(&r13, &r23);
    report.push(Check::from_outcome(
        "qt.hexagon_left",
        "(Δ⊗id)(R) = R₁₃R₂₃",
        1,
        (lhs != rhs).then(|| tensor_witness(h, vec!["R".into()], &lhs, &rhs)),
    ));
    let lhs = h.comul_leg(&r, 1);
    let rhs = h.tensor_mul(&r13, &r12);
    report.push(Check::from_outcome(
        "qt.hexagon_right",
        "(id⊗Δ)(R) = R₁₃R₁₂",
        1,
        (lhs != rhs).then(|| tensor_witness(h, vec!["R".into()], &lhs, &rhs)),
    ));
    let lhs = h.tensor_mul(&h.tensor_mul(&r12, &r13), &r23);
    let rhs = h.tensor_mul(&h.tensor_mul(&r23, &r13), &r12);
    report.push(Check::from_outcome(
        "qt.yang_baxter",
        "R₁₂R₁₃R₂₃ = R₂₃R₁₃R₁₂",
        1,
        (lhs != rhs).then(|| tensor_witness(h, vec!["R".into()], &lhs, &rhs)),
    ));
    Ok(report)
}

fn left_mul_matrix2(h: &HopfAlgebra, r: &Tensor) -> Matrix {
    let n = h.dim();
    let mut m = Matrix::zeros(n * n, n * n);
    for a in 0..n {
        for b in 0..n {
            let mut basis = Tensor::new();
            basis.insert(vec![a, b], Rational::one());
            for (k, c) in h.tensor_mul(r, &basis) {
                m.set(k[0] * n + k[1], a * n + b, c);
            }
        }
    }
    m
}

/// Centrality, `S(θ) = θ`, `ε(θ) = 1` and `R₂₁R·Δ(θ) = θ⊗θ`.
pub fn verify_ribbon_element(h: &HopfAlgebra) -> Result<Report> {
    let r = h.rmatrix_tensor().ok_or_else(|| Error::MissingData(format!("{} has no R-matrix", h.name)))?;
    let theta = h.ribbon.clone().ok_or_else(|| Error::MissingData(format!("{} has no ribbon element", h.name)))?;
    let n = h.dim();
    let mut report = Report::new();
    let fail = (0..n).find_map(|i| {
        let x = h.basis_elem(i);
        let lhs = h.mul_elems(&theta, &x);
        let rhs = h.mul_elems(&x, &theta);
        (lhs != rhs).then(|| elem_witness(h, vec![h.label(i)], &lhs, &rhs))
    });
    report.push(Check::from_outcome("ribbon.central", "ribbon element is central", n, fail));
    let st = h.antipode_elem(&theta);
    report.push(Check::from_outcome(
        "ribbon.antipode",
        "S(θ) = θ",
        1,
        (st != theta).then(|| elem_witness(h, vec!["θ".into()], &st, &theta)),
    ));
    let et = h.counit_elem(&theta);
    report.push(Check::from_outcome(
        "ribbon.counit",
        "ε(θ) = 1",
        1,
        (!et.is_one()).then(|| Witness::at(vec!["θ".into()]).detail(format!("ε(θ) = {et}"))),
    ));
    let r21 = HopfAlgebra::permute(&r, &[1, 0]);
    let lhs = h.tensor_mul(&h.tensor_mul(&r21, &r), &h.comul_elem(&theta));
    let rhs = outer(h, &theta, &theta);
    report.push(Check::from_outcome(
        "ribbon.comul",
        "Δ(θ) = (R₂₁R)⁻¹(θ⊗θ)",
        1,
        (lhs != rhs).then(|| tensor_witness(h, vec!["θ".into()], &lhs, &rhs)),
    ));
    Ok(report)
}

/// Verifies the axioms plus every optional structure that is present.
pub fn verify_all(h: &HopfAlgebra) -> Report {
    let mut report = verify_hopf_axioms(h);
    if h.rmatrix.is_some() {
        report.extend(verify_quasitriangular(h).expect("rmatrix present"));
        if h.ribbon.is_some() {
            report.extend(verify_ribbon_element(h).expect("ribbon present"));
        }
    }
    report
}

/// The dual Hopf algebra on the dual basis `e^i`.
pub fn dual_hopf(h: &HopfAlgebra) -> HopfAlgebra {
    let n = h.dim();
    let mut mul = Vec::new();
    for (k, terms) in h.comul.iter().enumerate() {
        for (i, j, c) in terms {
            mul.push((*i, *j, k, c.clone()));
        }
    }
    let mut comul = Vec::new();
    for j in 0..n {
        for k in 0..n {
            for (i, c) in h.mul_basis(j, k) {
                comul.push((*i, j, k, c.clone()));
            }
        }
    }
    let basis = h.basis.iter().map(|b| format!("{b}*")).collect();
    let mut d = HopfAlgebra::new(
        format!("{}*", h.name),
        basis,
        &mul,
        h.counit.clone(),
        &comul,
        h.unit.clone(),
        h.antipode.transpose(),
    )
    .expect("dual of a well-shaped algebra is well-shaped");
    if (&d.antipode * &d.antipode).is_identity() {
        d.pivot = Some(d.unit.clone());
    }
    d
}

/// `D(H) = H*^cop ⋈ H` with its canonical R-matrix and, when one exists
/// among the obvious candidates, a pivot.
pub fn drinfeld_double(h: &HopfAlgebra) -> Result<HopfAlgebra> {
    let n = h.dim();
    let s_inv = h.antipode_inverse()?;
    let dual = dual_hopf(h);

    // tw[r * n + p] is the matrix of y ↦ S⁻¹(e_r) e_y e_p.
    let mut tw = Vec::with_capacity(n * n);
    for r in 0..n {
        let left = h.left_mul_matrix(&s_inv.col(r));
        for p in 0..n {
            tw.push(&left * &h.right_mul_matrix(&h.basis_elem(p)));
        }
    }
    let delta2: Vec<Tensor> = (0..n).map(|b| h.comul_leg(&h.comul_elem(&h.basis_elem(b)), 0)).collect();

    let big = n * n;
    let mut mul = Vec::new();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                for d in 0..n {
                    let mut acc: BTreeMap<usize, Rational> = BTreeMap::new();
                    for (key, coef) in &delta2[b] {
                        let (p, q, r) = (key[0], key[1], key[2]);
                        let t = &tw[r * n + p];
                        // g'(e_y) = e^c(S⁻¹(e_r) e_y e_p)
                        let g: Elem = t.row(c).to_vec();
                        let fg = dual.mul_elems(&dual.basis_elem(a), &g);
                        let qd = h.mul_basis(q, d);
                        for (z, fz) in fg.iter().enumerate() {
                            if fz.is_zero() {
                                continue;
                            }
                            for (w, m) in qd {
                                let v = &(coef * fz) * m;
                                acc.entry(z * n + w).or_insert_with(Rational::zero).add_mul(&Rational::one(), &v);
                            }
                        }
                    }
                    for (k, v) in acc {
                        if !v.is_zero() {
                            mul.push((a * n + b, c * n + d, k, v));
                        }
                    }
                }
            }
        }
    }

    // Δ(e^a ⊗ e_b) = Σ mul[j][k][a] comul[b][p][q] (e^k ⊗ e_p) ⊗ (e^j ⊗ e_q)
    let mut comul = Vec::new();
    for j in 0..n {
        for k in 0..n {
            for (a, m) in h.mul_basis(j, k) {
                for b in 0..n {
                    for (p, q, c) in &h.comul[b] {
                        comul.push((a * n + b, k * n + p, j * n + q, m * c));
                    }
                }
            }
        }
    }

    let mut unit = vec![Rational::zero(); big];
    let mut counit = vec![Rational::zero(); big];
    for a in 0..n {
        for b in 0..n {
            unit[a * n + b] = &h.counit[a] * &h.unit[b];
            counit[a * n + b] = &h.unit[a] * &h.counit[b];
        }
    }
    let basis: Vec<String> = (0..n)
        .flat_map(|a| (0..n).map(move |b| (a, b)))
        .map(|(a, b)| format!("{}*⊗{}", h.basis[a], h.basis[b]))
        .collect();
    let placeholder = Matrix::identity(big);
    let mut d = HopfAlgebra::new(format!("D({})", h.name), basis, &mul, unit, &comul, counit, placeholder)?;

    // S_D(e^a ⊗ e_b) = (ε ⊗ S(e_b)) · ((S*)⁻¹(e^a) ⊗ 1)
    let dual_s_inv = s_inv.transpose();
    let embed_h = |x: &[Rational]| -> Elem {
        let mut v = vec![Rational::zero(); big];
        for a in 0..n {
            for (b, xb) in x.iter().enumerate() {
                v[a * n + b] = &h.counit[a] * xb;
            }
        }
        v
    };
    let embed_dual = |f: &[Rational]| -> Elem {
        let mut v = vec![Rational::zero(); big];
        for (a, fa) in f.iter().enumerate() {
            for b in 0..n {
                v[a * n + b] = fa * &h.unit[b];
            }
        }
        v
    };
    let mut antipode = Matrix::zeros(big, big);
    for a in 0..n {
        let fa = embed_dual(&dual_s_inv.col(a));
        for b in 0..n {
            let sb = embed_h(&h.antipode.col(b));
            let v = d.mul_elems(&sb, &fa);
            for (i, x) in v.into_iter().enumerate() {
                antipode.set(i, a * n + b, x);
            }
        }
    }
    d.antipode = antipode;

    let mut r = vec![Rational::zero(); big * big];
    for i in 0..n {
        for a in 0..n {
            for b in 0..n {
                let c = &h.counit[a] * &h.unit[b];
                if !c.is_zero() {
                    r[(a * n + i) * big + (i * n + b)] = c;
                }
            }
        }
    }
    d.rmatrix = Some(r);

    let mut candidates = Vec::new();
    if let Some(g) = &h.pivot {
        candidates.push(embed_h(g));
        candidates.push(embed_h(&h.antipode_elem(g)));
    }
    candidates.push(d.unit.clone());
    d.pivot = candidates.into_iter().find(|g| verify_pivot(&d, g).passed());
    Ok(d)
}

/// A linear map between Hopf algebras, as a `dim target x dim source` matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfMap {
    pub name: String,
    pub matrix: Matrix,
}

impl HopfMap {
    pub fn identity(h: &HopfAlgebra) -> Self {
        Self { name: "identity".into(), matrix: Matrix::identity(h.dim()) }
    }

    /// The inclusion `h ↦ ε ⊗ h` of `H` into its double.
    pub fn double_inclusion(h: &HopfAlgebra) -> Self {
        let n = h.dim();
        let mut m = Matrix::zeros(n * n, n);
        for a in 0..n {
            for b in 0..n {
                m.set(a * n + b, b, h.counit[a].clone());
            }
        }
        Self { name: "double-inclusion".into(), matrix: m }
    }

    pub fn image(&self, x: &[Rational]) -> Elem {
        (&self.matrix * &Matrix::column(x)).col(0)
    }
}

/// Checks that `phi: source -> target` is a morphism of Hopf algebras.
pub fn verify_hopf_map(source: &HopfAlgebra, target: &HopfAlgebra, phi: &HopfMap) -> Result<Report> {
    let (n, big) = (source.dim(), target.dim());
    if phi.matrix.shape() != (big, n) {
        return Err(Error::Shape(format!(
            "map {} is {:?}, expected {big}x{n}",
            phi.name,
            phi.matrix.shape()
        )));
    }
    let mut report = Report::new();
    let img: Vec<Elem> = (0..n).map(|i| phi.matrix.col(i)).collect();
    let lbl = |i: usize| source.label(i);

    let mut fail = None;
    let u = phi.image(&source.unit);
    if u != target.unit {
        fail = Some(elem_witness(target, vec!["1".into()], &u, &target.unit));
    }
    'm: for i in 0..n {
        for j in 0..n {
            if fail.is_some() {
                break 'm;
            }
            let lhs = phi.image(&source.mul_elems(&source.basis_elem(i), &source.basis_elem(j)));
            let rhs = target.mul_elems(&img[i], &img[j]);
            if lhs != rhs {
                fail = Some(elem_witness(target, vec![lbl(i), lbl(j)], &lhs, &rhs));
            }
        }
    }
    report.push(Check::from_outcome("map.algebra", "map is an algebra morphism", n * n + 1, fail));

    let fail = (0..n).find_map(|i| {
        let d = source.comul_elem(&source.basis_elem(i));
        let lhs = target.map_leg(&target.map_leg(&d, 0, &phi.matrix), 1, &phi.matrix);
        let rhs = target.comul_elem(&img[i]);
        if lhs != rhs {
            return Some(tensor_witness(target, vec![lbl(i)], &lhs, &rhs));
        }
        let e = target.counit_elem(&img[i]);
        (e != source.counit[i]).then(|| Witness::at(vec![lbl(i)]).detail("ε ∘ φ ≠ ε".to_string()))
    });
    report.push(Check::from_outcome("map.coalgebra", "map is a coalgebra morphism", n, fail));

    let lhs = &phi.matrix * &source.antipode;
    let rhs = &target.antipode * &phi.matrix;
    report.push(Check::from_outcome(
        "map.antipode",
        "map commutes with antipodes",
        1,
        (lhs != rhs).then(|| Witness::mismatch(vec![phi.name.clone()], &lhs, &rhs)),
    ));
    Ok(report)
}
