//! Restriction and coinduction along a Hopf algebra map `φ: S -> B`.
//!
//! `R(V) = Hom_S(B, V)` with `B` acting by right translation. A function in
//! `R(V)` is fixed by its values on a free left `S`-basis `q_1..q_r` of `B`,
//! so `R(V) = V^r` with coordinate `t·dim V + v` for the value `f(q_t)_v`.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use crate::error::{Error, Result};
use crate::hopf::{verify_hopf_map, Elem, HopfAlgebra, HopfMap};
use crate::linalg::Matrix;
use crate::rational::Rational;
use crate::repcat::HModule;

/// `R(V)` together with the evaluation maps `E_V[j] : R(V) -> V`, `f ↦ f(b_j)`.
#[derive(Clone, Debug)]
pub struct Coinduced {
    pub module: HModule,
    pub evals: Arc<Vec<Matrix>>,
}

pub struct Coinduction {
    pub small: Arc<HopfAlgebra>,
    pub big: Arc<HopfAlgebra>,
    pub map: HopfMap,
    /// Free generators of `B` as a left `S`-module.
    pub generators: Vec<Elem>,
    /// Row `t·n + i`, column `j`: coefficient of `φ(s_i) q_t` in `b_j`.
    decomposition: Matrix,
    /// `translation[j]` has entry `(s, t·n + i)`: the coefficient of
    /// `ρ_V(s_i)` in block `(s, t)` of `ρ_{R(V)}(b_j)`.
    translation: Vec<Matrix>,
    /// Sparse `Δ(q_s)` as `(j, k, c)` triples.
    comul_q: Vec<Vec<(usize, usize, Rational)>>,
    counit_q: Vec<Rational>,
    cache: Mutex<HashMap<HModule, Coinduced>>,
}

impl std::fmt::Debug for Coinduction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Coinduction")
            .field("small", &self.small.name)
            .field("big", &self.big.name)
            .field("map", &self.map.name)
            .field("rank", &self.rank())
            .finish()
    }
}

/// Restricts a `B`-module along `φ`; the name is kept.
pub fn restrict(map: &HopfMap, small: &Arc<HopfAlgebra>, m: &HModule) -> Result<HModule> {
    let action = (0..small.dim()).map(|i| m.act(&map.matrix.col(i))).collect();
    HModule::new(m.name(), small.clone(), action)
}

impl Coinduction {
    /// Verifies `φ` and picks the free basis greedily among the basis
    /// elements of `B`.
    pub fn new(small: Arc<HopfAlgebra>, big: Arc<HopfAlgebra>, map: HopfMap) -> Result<Self> {
        let report = verify_hopf_map(&small, &big, &map)?;
        if let Some(bad) = report.failures().next() {
            return Err(Error::Precondition(format!("{} is not a Hopf algebra map: {}", map.name, bad.id)));
        }
        let (n, big_n) = (small.dim(), big.dim());
        if big_n % n != 0 {
            return Err(Error::UnsupportedExtension(format!(
                "dim {} = {big_n} is not a multiple of dim {} = {n}",
                big.name, small.name
            )));
        }
        let images: Vec<Matrix> = (0..n).map(|i| big.left_mul_matrix(&map.matrix.col(i))).collect();
        let mut generators = Vec::new();
        let mut columns: Vec<Vec<Rational>> = Vec::new();
        let mut rank = 0;
        for j in 0..big_n {
            if rank == big_n {
                break;
            }
            let q = big.basis_elem(j);
            let block: Vec<Vec<Rational>> = images.iter().map(|l| l.col(j)).collect();
            let mut trial = columns.clone();
            trial.extend(block.iter().cloned());
            let m = Matrix::from_fn(big_n, trial.len(), |a, b| trial[b][a].clone());
            let r = m.rank();
            if r == rank + n {
                columns = trial;
                rank = r;
                generators.push(q);
            }
        }
        if rank != big_n {
            return Err(Error::UnsupportedExtension(format!(
                "no free {}-basis of {} among its basis elements",
                small.name, big.name
            )));
        }
        let r = generators.len();
        let m = Matrix::from_fn(big_n, big_n, |a, b| columns[b][a].clone());
        let decomposition = m.inverse()?;
        let translation = (0..big_n)
            .map(|j| {
                let mut w = Matrix::zeros(r, r * n);
                for (s, q) in generators.iter().enumerate() {
                    let prod = big.mul_elems(q, &big.basis_elem(j));
                    let coords = &decomposition * &Matrix::column(&prod);
                    for c in 0..r * n {
                        w.set(s, c, coords.get(c, 0).clone());
                    }
                }
                w
            })
            .collect();
        let comul_q = generators
            .iter()
            .map(|q| big.comul_elem(q).into_iter().map(|(k, c)| (k[0], k[1], c)).collect())
            .collect();
        let counit_q = generators.iter().map(|q| big.counit_elem(q)).collect();
        Ok(Self {
            small,
            big,
            map,
            generators,
            decomposition,
            translation,
            comul_q,
            counit_q,
            cache: Mutex::new(HashMap::new()),
        })
    }

    /// Number of free generators, `dim B / dim S`.
    pub fn rank(&self) -> usize {
        self.generators.len()
    }

    pub fn restrict(&self, m: &HModule) -> Result<HModule> {
        restrict(&self.map, &self.small, m)
    }

    fn check_small(&self, v: &HModule) -> Result<()> {
        if v.algebra() != &self.small {
            return Err(Error::AlgebraMismatch(format!("{} is not a {}-module", v.name(), self.small.name)));
        }
        Ok(())
    }

    fn check_big(&self, v: &HModule) -> Result<()> {
        if v.algebra() != &self.big {
            return Err(Error::AlgebraMismatch(format!("{} is not a {}-module", v.name(), self.big.name)));
        }
        Ok(())
    }

    /// `R(V)` with its evaluation maps, memoized by module.
    pub fn coinduce(&self, v: &HModule) -> Result<Coinduced> {
        self.check_small(v)?;
        if let Some(c) = self.cache.lock().expect("cache lock").get(v) {
            return Ok(c.clone());
        }
        let built = self.build(v)?;
        let mut cache = self.cache.lock().expect("cache lock");
        Ok(cache.entry(v.clone()).or_insert(built).clone())
    }

    fn build(&self, v: &HModule) -> Result<Coinduced> {
        let (n, big_n, r, d) = (self.small.dim(), self.big.dim(), self.rank(), v.dim());
        let evals = (0..big_n)
            .map(|j| {
                let mut e = Matrix::zeros(d, r * d);
                for t in 0..r {
                    for i in 0..n {
                        let c = self.decomposition.get(t * n + i, j);
                        if !c.is_zero() {
                            e.add_block(0, t * d, v.rho(i), c);
                        }
                    }
                }
                e
            })
            .collect();
        let action = self
            .translation
            .iter()
            .map(|w| {
                let mut m = Matrix::zeros(r * d, r * d);
                for s in 0..r {
                    for t in 0..r {
                        for i in 0..n {
                            let c = w.get(s, t * n + i);
                            if !c.is_zero() {
                                m.add_block(s * d, t * d, v.rho(i), c);
                            }
                        }
                    }
                }
                m
            })
            .collect();
        let name = if v.is_unit() { "R(𝟙)".to_string() } else { format!("R({})", v.name()) };
        let module = HModule::new(name, self.big.clone(), action)?;
        Ok(Coinduced { module, evals: Arc::new(evals) })
    }

    pub fn object(&self, v: &HModule) -> Result<HModule> {
        Ok(self.coinduce(v)?.module)
    }

    /// `R(g) = id_r ⊗ g`.
    pub fn morphism(&self, g: &Matrix) -> Matrix {
        Matrix::identity(self.rank()).kron(g)
    }

    /// Evaluation at an arbitrary element of `B`, without building `R(V)`.
    pub fn eval_at(&self, v: &HModule, x: &[Rational]) -> Result<Matrix> {
        self.check_small(v)?;
        let (n, r, d) = (self.small.dim(), self.rank(), v.dim());
        let mut e = Matrix::zeros(d, r * d);
        for t in 0..r {
            for i in 0..n {
                let mut c = Rational::zero();
                for (j, xj) in x.iter().enumerate() {
                    if !xj.is_zero() {
                        c += &(self.decomposition.get(t * n + i, j) * xj);
                    }
                }
                if !c.is_zero() {
                    e.add_block(0, t * d, v.rho(i), &c);
                }
            }
        }
        Ok(e)
    }

    /// `ε^r_V : UR(V) -> V`, evaluation at `1`.
    pub fn counit(&self, v: &HModule) -> Result<Matrix> {
        self.eval_at(v, &self.big.unit)
    }

    /// `η^r_M : M -> RU(M)`, `m ↦ (b ↦ b·m)`.
    pub fn unit(&self, m: &HModule) -> Result<Matrix> {
        self.check_big(m)?;
        let d = m.dim();
        let mut out = Matrix::zeros(self.rank() * d, d);
        for (t, q) in self.generators.iter().enumerate() {
            out.set_block(t * d, 0, &m.act(q));
        }
        Ok(out)
    }

    /// Kelly's `R₂(Y, Y') : R(Y) ⊗ R(Y') -> R(Y ⊗ Y')`, evaluated blockwise as
    /// `Σ Δ(q_s) · (E_Y ⊗ E_{Y'})`.
    pub fn kelly_r2(&self, y: &HModule, y2: &HModule) -> Result<Matrix> {
        let (ey, ey2) = (self.coinduce(y)?.evals, self.coinduce(y2)?.evals);
        self.blockwise(y.dim() * y2.dim(), |j, k| ey[j].kron(&ey2[k]))
    }

    /// Kelly's `R₀ = η^r_𝟙 : 𝟙 -> R(𝟙)`.
    pub fn kelly_r0(&self) -> Matrix {
        Matrix::from_fn(self.rank(), 1, |t, _| self.counit_q[t].clone())
    }

    /// `h^l_{X,Y} : R(X) ⊗ Y -> R(X ⊗ U(Y))` for `X` over `S`, `Y` over `B`.
    pub fn hl(&self, x: &HModule, y: &HModule) -> Result<Matrix> {
        self.check_big(y)?;
        let ex = self.coinduce(x)?.evals;
        self.blockwise(x.dim() * y.dim(), |j, k| ex[j].kron(y.rho(k)))
    }

    /// `h^r_{X,Y} : X ⊗ R(Y) -> R(U(X) ⊗ Y)` for `X` over `B`, `Y` over `S`.
    pub fn hr(&self, x: &HModule, y: &HModule) -> Result<Matrix> {
        self.check_big(x)?;
        let ey = self.coinduce(y)?.evals;
        self.blockwise(x.dim() * y.dim(), |j, k| x.rho(j).kron(&ey[k]))
    }

    /// Stacks the blocks `Σ_{(j,k,c) ∈ Δ(q_s)} c · term(j, k)` over `s`.
    fn blockwise(&self, block_rows: usize, term: impl Fn(usize, usize) -> Matrix) -> Result<Matrix> {
        let mut blocks = Vec::with_capacity(self.rank());
        for terms in &self.comul_q {
            let mut acc: Option<Matrix> = None;
            for (j, k, c) in terms {
                let t = term(*j, *k);
                match &mut acc {
                    None => acc = Some(t.scale(c)),
                    Some(a) => a.add_block(0, 0, &t, c),
                }
            }
            blocks.push(acc.ok_or_else(|| Error::Construction("generator with zero coproduct".into()))?);
        }
        if blocks.iter().any(|b| b.rows() != block_rows) {
            return Err(Error::Shape("coHopf block has the wrong height".into()));
        }
        let refs: Vec<&Matrix> = blocks.iter().collect();
        Matrix::vstack(&refs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::hopf::drinfeld_double;
    use crate::repcat::{intertwiner_basis, is_intertwiner, tensor, GeneratorSet};

    fn double_of(name: &str) -> (Arc<HopfAlgebra>, Coinduction, Vec<HModule>) {
        let file = catalog::load(name).unwrap();
        let h = Arc::new(file.to_hopf().unwrap());
        let d = Arc::new(drinfeld_double(&h).unwrap());
        let seeds = file.seed_modules(&h).unwrap();
        let c = Coinduction::new(h.clone(), d, HopfMap::double_inclusion(&h)).unwrap();
        (h, c, seeds)
    }

    /// `R(V)` literally: `S`-linear functions `B -> V`, as a kernel.
    fn kernel_dimension(c: &Coinduction, v: &HModule) -> usize {
        let (n, big_n, d) = (c.small.dim(), c.big.dim(), v.dim());
        let mut rows: Vec<Vec<Rational>> = Vec::new();
        for i in 0..n {
            let left = c.big.left_mul_matrix(&c.map.matrix.col(i));
            for j in 0..big_n {
                for a in 0..d {
                    // f(φ(s_i) b_j)_a - Σ_b ρ(s_i)_{ab} f(b_j)_b = 0
                    let mut row = vec![Rational::zero(); big_n * d];
                    for k in 0..big_n {
                        row[k * d + a] += left.get(k, j);
                    }
                    for b in 0..d {
                        row[j * d + b] -= v.rho(i).get(a, b);
                    }
                    rows.push(row);
                }
            }
        }
        let m = Matrix::from_fn(rows.len(), big_n * d, |i, j| rows[i][j].clone());
        m.kernel_basis().len()
    }

    #[test]
    fn double_of_c2_has_two_dimensional_r_of_unit() {
        let (h, c, _) = double_of("c2");
        assert_eq!(c.rank(), 2);
        let r1 = c.object(&HModule::trivial(&h)).unwrap();
        assert_eq!(r1.dim(), 2);
        r1.verify().unwrap();
    }

    #[test]
    fn coinduced_functions_are_s_linear_and_translate() {
        for name in ["c2", "s3", "sweedler"] {
            let (h, c, seeds) = double_of(name);
            let gen = GeneratorSet::new(&h, &seeds, 1).unwrap();
            for v in &gen.words {
                let co = c.coinduce(v).unwrap();
                co.module.verify().unwrap();
                assert_eq!(co.module.dim(), kernel_dimension(&c, v), "{name}: {}", v.name());
                for i in 0..h.dim() {
                    let phi_s = c.map.matrix.col(i);
                    for j in 0..c.big.dim() {
                        let prod = c.big.mul_elems(&phi_s, &c.big.basis_elem(j));
                        let lhs = c.eval_at(v, &prod).unwrap();
                        assert_eq!(lhs, v.rho(i) * &co.evals[j]);
                    }
                }
                for j in 0..c.big.dim() {
                    for k in 0..c.big.dim() {
                        let prod = c.big.mul_elems(&c.big.basis_elem(j), &c.big.basis_elem(k));
                        assert_eq!(&co.evals[j] * co.module.rho(k), c.eval_at(v, &prod).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn unit_and_counit_are_intertwiners_and_satisfy_snakes() {
        let (h, c, seeds) = double_of("s3");
        let unit = HModule::trivial(&h);
        for v in std::iter::once(&unit).chain(&seeds) {
            let rv = c.object(v).unwrap();
            let eps = c.counit(v).unwrap();
            assert!(is_intertwiner(&eps, &c.restrict(&rv).unwrap(), v));
            let eta = c.unit(&rv).unwrap();
            assert_eq!(&c.morphism(&eps) * &eta, Matrix::identity(rv.dim()));
        }
    }

    #[test]
    fn fused_operators_match_literal_composites() {
        let (h, c, seeds) = double_of("c2");
        let unit = HModule::trivial(&h);
        let atoms: Vec<HModule> = std::iter::once(unit.clone()).chain(seeds).collect();
        let r1 = c.object(&unit).unwrap();
        for x in &atoms {
            for y in &atoms {
                let (rx, ry) = (c.object(x).unwrap(), c.object(y).unwrap());
                let rxy = tensor(&rx, &ry).unwrap();
                let literal = &c.morphism(&c.counit(x).unwrap().kron(&c.counit(y).unwrap())) * &c.unit(&rxy).unwrap();
                assert_eq!(c.kelly_r2(x, y).unwrap(), literal);
                let big_y = &r1;
                let uy = c.restrict(big_y).unwrap();
                let hl = &c.kelly_r2(x, &uy).unwrap() * &Matrix::identity(rx.dim()).kron(&c.unit(big_y).unwrap());
                assert_eq!(c.hl(x, big_y).unwrap(), hl);
                let hr = &c.kelly_r2(&uy, y).unwrap() * &c.unit(big_y).unwrap().kron(&Matrix::identity(ry.dim()));
                assert_eq!(c.hr(big_y, y).unwrap(), hr);
            }
        }
    }

    #[test]
    fn identity_map_coinduces_to_identity() {
        let file = catalog::load("s3").unwrap();
        let h = Arc::new(file.to_hopf().unwrap());
        let c = Coinduction::new(h.clone(), h.clone(), HopfMap::identity(&h)).unwrap();
        assert_eq!(c.rank(), 1);
        for v in file.seed_modules(&h).unwrap() {
            assert_eq!(c.object(&v).unwrap().action(), v.action());
            assert!(c.counit(&v).unwrap().is_identity());
            assert!(c.unit(&v).unwrap().is_identity());
            assert!(c.kelly_r2(&v, &v).unwrap().is_identity());
        }
        assert_eq!(c.kelly_r0(), Matrix::identity(1));
    }

    #[test]
    fn kelly_unit_is_the_algebra_unit_of_r1() {
        let (h, c, _) = double_of("c2");
        let unit = HModule::trivial(&h);
        let r1 = c.object(&unit).unwrap();
        let m = c.kelly_r2(&unit, &unit).unwrap();
        let u = c.kelly_r0();
        assert!(is_intertwiner(&u, &HModule::trivial(&c.big), &r1));
        assert!((&m * &u.kron(&Matrix::identity(2))).is_identity());
        let hom = intertwiner_basis(&tensor(&r1, &r1).unwrap(), &r1).unwrap();
        assert!(!hom.is_empty());
    }

    #[test]
    fn non_hopf_map_is_rejected() {
        let file = catalog::load("c2").unwrap();
        let h = Arc::new(file.to_hopf().unwrap());
        let mut bad = HopfMap::identity(&h);
        bad.matrix.set(1, 1, Rational::from_integer(2));
        assert!(matches!(Coinduction::new(h.clone(), h, bad), Err(Error::Precondition(_))));
    }
}
