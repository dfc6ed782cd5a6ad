//! Built-in example algebras, shipped as JSON data and cross-checked against
//! the constructors in this module.

use crate::error::{Error, Result};
use crate::format::{AlgebraFile, MapFile};
use crate::hopf::HopfAlgebra;
use crate::linalg::Matrix;
use crate::rational::Rational;
use crate::repcat::HModule;
use std::sync::Arc;

pub const NAMES: &[&str] = &["trivial", "c2", "c2xc2", "c2xc2_bichar", "c2_super", "s3", "sweedler"];

const FILES: &[(&str, &str)] = &[
    ("trivial", include_str!("../catalog/trivial.json")),
    ("c2", include_str!("../catalog/c2.json")),
    ("c2xc2", include_str!("../catalog/c2xc2.json")),
    ("c2xc2_bichar", include_str!("../catalog/c2xc2_bichar.json")),
    ("c2_super", include_str!("../catalog/c2_super.json")),
    ("s3", include_str!("../catalog/s3.json")),
    ("sweedler", include_str!("../catalog/sweedler.json")),
];

const DIAGONAL_MAP: &str = include_str!("../catalog/c2_diagonal_map.json");

/// The shipped JSON text of a catalog entry.
pub fn text(name: &str) -> Result<&'static str> {
    FILES
        .iter()
        .find(|(n, _)| *n == name.trim_end_matches(".json"))
        .map(|(_, t)| *t)
        .ok_or_else(|| Error::Parse(format!("unknown catalog entry `{name}`")))
}

pub fn load(name: &str) -> Result<AlgebraFile> {
    AlgebraFile::parse(text(name)?)
}

/// `C₂ -> C₂×C₂`, `x ↦ ab`, targeting the bicharacter-braided algebra.
pub fn diagonal_map_text() -> &'static str {
    DIAGONAL_MAP
}

pub fn diagonal_map() -> MapFile {
    MapFile::parse(DIAGONAL_MAP).expect("shipped map file parses")
}

fn q(n: i64) -> Rational {
    Rational::from_integer(n)
}

fn half(n: i64) -> Rational {
    Rational::new(n, 2)
}

fn character(h: &Arc<HopfAlgebra>, name: &str, values: &[i64]) -> HModule {
    HModule::new(name, h.clone(), values.iter().map(|&v| Matrix::scalar(q(v))).collect()).expect("character")
}

fn klein() -> HopfAlgebra {
    let table = vec![vec![0, 1, 2, 3], vec![1, 0, 3, 2], vec![2, 3, 0, 1], vec![3, 2, 1, 0]];
    HopfAlgebra::group_algebra("C2xC2", &["1", "a", "b", "ab"], &table).expect("group table")
}

fn c2_group() -> HopfAlgebra {
    HopfAlgebra::group_algebra("C2", &["1", "x"], &[vec![0, 1], vec![1, 0]]).expect("group table")
}

/// `½(1⊗1 + 1⊗z + z⊗1 − z⊗z)` for a central grouplike involution `z` at index `z`.
fn bicharacter_rmatrix(n: usize, z: usize) -> Vec<Rational> {
    let mut r = vec![q(0); n * n];
    r[0] = half(1);
    r[z] = half(1);
    r[z * n] = half(1);
    r[z * n + z] = half(-1);
    r
}

fn unit_vector(n: usize, i: usize) -> Vec<Rational> {
    let mut v = vec![q(0); n];
    v[i] = q(1);
    v
}

fn with_seeds(h: HopfAlgebra, seeds: impl FnOnce(&Arc<HopfAlgebra>) -> Vec<HModule>) -> AlgebraFile {
    let h = Arc::new(h);
    let s = seeds(&h);
    AlgebraFile::from_hopf(&h, &s)
}

/// Reference constructor for a catalog entry.
pub fn build(name: &str) -> Result<AlgebraFile> {
    Ok(match name {
        "trivial" => {
            let h = HopfAlgebra::group_algebra("trivial", &["1"], &[vec![0]])?;
            with_seeds(h, |_| vec![])
        }
        "c2" => with_seeds(c2_group(), |h| vec![character(h, "sign", &[1, -1])]),
        "c2xc2" => with_seeds(klein(), klein_seeds),
        "c2xc2_bichar" => {
            let h = klein().with_rmatrix(bicharacter_rmatrix(4, 3))?.with_ribbon(unit_vector(4, 3))?;
            let mut h = h;
            h.name = "C2xC2_bichar".into();
            with_seeds(h, klein_seeds)
        }
        "c2_super" => {
            let mut h = c2_group().with_rmatrix(bicharacter_rmatrix(2, 1))?.with_ribbon(unit_vector(2, 1))?;
            h.name = "C2_super".into();
            with_seeds(h, |h| vec![character(h, "sign", &[1, -1])])
        }
        "s3" => s3(),
        "sweedler" => sweedler()?,
        other => return Err(Error::Parse(format!("unknown catalog entry `{other}`"))),
    })
}

fn klein_seeds(h: &Arc<HopfAlgebra>) -> Vec<HModule> {
    vec![
        character(h, "chi_a", &[1, -1, 1, -1]),
        character(h, "chi_b", &[1, 1, -1, -1]),
        character(h, "chi_ab", &[1, -1, -1, 1]),
    ]
}

/// Permutations of {0,1,2} as images `[σ(0), σ(1), σ(2)]`.
const S3_ELEMENTS: [[usize; 3]; 6] = [[0, 1, 2], [1, 0, 2], [0, 2, 1], [2, 1, 0], [1, 2, 0], [2, 0, 1]];
const S3_LABELS: [&str; 6] = ["e", "(12)", "(23)", "(13)", "(123)", "(132)"];

fn s3() -> AlgebraFile {
    let compose = |s: &[usize; 3], t: &[usize; 3]| -> [usize; 3] { [s[t[0]], s[t[1]], s[t[2]]] };
    let index = |p: [usize; 3]| S3_ELEMENTS.iter().position(|e| *e == p).expect("closed");
    let table: Vec<Vec<usize>> = S3_ELEMENTS
        .iter()
        .map(|s| S3_ELEMENTS.iter().map(|t| index(compose(s, t))).collect())
        .collect();
    let h = HopfAlgebra::group_algebra("S3", &S3_LABELS, &table).expect("group table");
    with_seeds(h, |h| {
        let sign: Vec<i64> = vec![1, -1, -1, -1, 1, 1];
        // Standard representation on {x : Σx = 0} in the basis e₀−e₁, e₁−e₂.
        let standard: Vec<Matrix> = S3_ELEMENTS
            .iter()
            .map(|s| {
                let image = |v: [i64; 3]| -> [i64; 3] {
                    let mut w = [0; 3];
                    for i in 0..3 {
                        w[s[i]] += v[i];
                    }
                    w
                };
                // Coordinates of w = α(e₀−e₁) + β(e₁−e₂): α = w₀, β = w₀ + w₁.
                let coords = |w: [i64; 3]| [w[0], w[0] + w[1]];
                let c1 = coords(image([1, -1, 0]));
                let c2 = coords(image([0, 1, -1]));
                Matrix::from_i64_rows(&[&[c1[0], c2[0]], &[c1[1], c2[1]]])
            })
            .collect();
        vec![
            character(h, "sign", &sign),
            HModule::new("std", h.clone(), standard).expect("standard representation"),
        ]
    })
}

fn sweedler() -> Result<AlgebraFile> {
    // basis 1, g, x, gx
    let one = q(1);
    let m1 = q(-1);
    let mul = vec![
        (0, 0, 0, one.clone()),
        (0, 1, 1, one.clone()),
        (0, 2, 2, one.clone()),
        (0, 3, 3, one.clone()),
        (1, 0, 1, one.clone()),
        (1, 1, 0, one.clone()),
        (1, 2, 3, one.clone()),
        (1, 3, 2, one.clone()),
        (2, 0, 2, one.clone()),
        (2, 1, 3, m1.clone()),
        (3, 0, 3, one.clone()),
        (3, 1, 2, m1.clone()),
    ];
    let comul = vec![
        (0, 0, 0, one.clone()),
        (1, 1, 1, one.clone()),
        (2, 2, 0, one.clone()),
        (2, 1, 2, one.clone()),
        (3, 3, 1, one.clone()),
        (3, 0, 3, one.clone()),
    ];
    let antipode = Matrix::from_i64_rows(&[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 0, 1], &[0, 0, -1, 0]]);
    let h = HopfAlgebra::new(
        "Sweedler",
        ["1", "g", "x", "gx"].iter().map(|s| s.to_string()).collect(),
        &mul,
        unit_vector(4, 0),
        &comul,
        vec![q(1), q(1), q(0), q(0)],
        antipode,
    )?
    .with_pivot(unit_vector(4, 1))?;
    Ok(with_seeds(h, |h| {
        let g = Matrix::from_i64_rows(&[&[1, 0], &[0, -1]]);
        let x = Matrix::from_i64_rows(&[&[0, 0], &[1, 0]]);
        let gx = &g * &x;
        vec![
            character(h, "sign", &[1, -1, 0, 0]),
            HModule::new("P", h.clone(), vec![Matrix::identity(2), g, x, gx]).expect("two-dimensional module"),
        ]
    }))
}

/// Reference constructor for the diagonal map file.
pub fn build_diagonal_map() -> Result<MapFile> {
    let target = build("c2xc2_bichar")?;
    let mut matrix = vec![q(0); 8];
    matrix[0] = q(1); // 1 ↦ 1
    matrix[3 * 2 + 1] = q(1); // x ↦ ab
    Ok(MapFile { name: "diagonal".into(), target, matrix })
}
