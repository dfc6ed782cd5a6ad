//! JSON interchange format for Hopf algebras, seed modules and algebra maps.
//!
//! Rationals are strings (`"3"`, `"-1/2"`); structure constants are sparse
//! `[i, j, k, "c"]` quadruples with 0-based indices; matrices are dense and
//! row-major. The antipode matrix acts on coordinate columns.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hopf::{HopfAlgebra, HopfMap};
use crate::linalg::Matrix;
use crate::rational::Rational;
use crate::repcat::HModule;

pub type Quad = (usize, usize, usize, Rational);

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub name: String,
    pub dim: usize,
    pub basis: Vec<String>,
    pub mul: Vec<Quad>,
    pub unit: Vec<Rational>,
    pub comul: Vec<Quad>,
    pub counit: Vec<Rational>,
    pub antipode: Vec<Rational>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pivot: Option<Vec<Rational>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rmatrix: Option<Vec<Rational>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ribbon: Option<Vec<Rational>>,
    /// Designated seed modules for generator sets.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub seeds: Vec<SeedModule>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SeedModule {
    pub name: String,
    pub dim: usize,
    /// One dense row-major `dim x dim` matrix per algebra basis element.
    pub action: Vec<Vec<Rational>>,
}

/// A Hopf algebra map out of the algebra it is used with.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MapFile {
    pub name: String,
    pub target: AlgebraFile,
    /// Dense row-major `target.dim x source.dim` matrix.
    pub matrix: Vec<Rational>,
}

fn parse_json<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T> {
    serde_json::from_str(text)
        .map_err(|e| Error::Parse(format!("line {}, column {}: {e}", e.line(), e.column())))
}

fn check_len(field: &str, len: usize, expected: usize) -> Result<()> {
    if len != expected {
        return Err(Error::Parse(format!("field `{field}`: {len} entries, expected {expected}")));
    }
    Ok(())
}

fn check_quads(field: &str, quads: &[Quad], n: usize) -> Result<()> {
    for (pos, (i, j, k, _)) in quads.iter().enumerate() {
        if *i >= n || *j >= n || *k >= n {
            return Err(Error::Parse(format!("field `{field}[{pos}]`: index out of range for dim {n}")));
        }
    }
    Ok(())
}

/// Indented JSON in which arrays of scalars stay on one line.
pub fn to_pretty_json<T: Serialize>(value: &T) -> String {
    let value = serde_json::to_value(value).expect("serializable");
    let mut out = String::new();
    write_value(&value, 0, &mut out);
    out.push('\n');
    out
}

fn write_value(v: &serde_json::Value, indent: usize, out: &mut String) {
    use serde_json::Value;
    let pad = |n: usize| "  ".repeat(n);
    match v {
        Value::Array(items) if items.iter().all(|x| !x.is_array() && !x.is_object()) => {
            out.push_str(&serde_json::to_string(v).expect("scalar array"));
        }
        Value::Array(items) => {
            out.push_str("[\n");
            for (k, x) in items.iter().enumerate() {
                out.push_str(&pad(indent + 1));
                write_value(x, indent + 1, out);
                out.push_str(if k + 1 < items.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(indent));
            out.push(']');
        }
        Value::Object(map) if !map.is_empty() => {
            out.push_str("{\n");
            for (k, (key, x)) in map.iter().enumerate() {
                out.push_str(&pad(indent + 1));
                out.push_str(&serde_json::to_string(key).expect("key"));
                out.push_str(": ");
                write_value(x, indent + 1, out);
                out.push_str(if k + 1 < map.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(indent));
            out.push('}');
        }
        _ => out.push_str(&serde_json::to_string(v).expect("scalar")),
    }
}

impl AlgebraFile {
    pub fn parse(text: &str) -> Result<Self> {
        let file: Self = parse_json(text)?;
        file.validate()?;
        Ok(file)
    }

    fn validate(&self) -> Result<()> {
        let n = self.dim;
        check_len("basis", self.basis.len(), n)?;
        check_len("unit", self.unit.len(), n)?;
        check_len("counit", self.counit.len(), n)?;
        check_len("antipode", self.antipode.len(), n * n)?;
        check_quads("mul", &self.mul, n)?;
        check_quads("comul", &self.comul, n)?;
        if let Some(p) = &self.pivot {
            check_len("pivot", p.len(), n)?;
        }
        if let Some(r) = &self.rmatrix {
            check_len("rmatrix", r.len(), n * n)?;
        }
        if let Some(t) = &self.ribbon {
            check_len("ribbon", t.len(), n)?;
        }
        for (s, seed) in self.seeds.iter().enumerate() {
            check_len(&format!("seeds[{s}].action"), seed.action.len(), n)?;
            for (i, m) in seed.action.iter().enumerate() {
                check_len(&format!("seeds[{s}].action[{i}]"), m.len(), seed.dim * seed.dim)?;
            }
        }
        Ok(())
    }

    pub fn to_hopf(&self) -> Result<HopfAlgebra> {
        self.validate()?;
        let n = self.dim;
        let antipode = Matrix::from_vec(n, n, self.antipode.clone())?;
        let mut h = HopfAlgebra::new(
            self.name.clone(),
            self.basis.clone(),
            &self.mul,
            self.unit.clone(),
            &self.comul,
            self.counit.clone(),
            antipode,
        )?;
        h.pivot = self.pivot.clone();
        h.rmatrix = self.rmatrix.clone();
        h.ribbon = self.ribbon.clone();
        Ok(h)
    }

    pub fn from_hopf(h: &HopfAlgebra, seeds: &[HModule]) -> Self {
        let n = h.dim();
        let mut mul = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for (k, c) in h.mul_basis(i, j) {
                    mul.push((i, j, *k, c.clone()));
                }
            }
        }
        let mut comul = Vec::new();
        for (i, terms) in h.comul.iter().enumerate() {
            for (j, k, c) in terms {
                comul.push((i, *j, *k, c.clone()));
            }
        }
        Self {
            name: h.name.clone(),
            dim: n,
            basis: h.basis.clone(),
            mul,
            unit: h.unit.clone(),
            comul,
            counit: h.counit.clone(),
            antipode: h.antipode.entries().to_vec(),
            pivot: h.pivot.clone(),
            rmatrix: h.rmatrix.clone(),
            ribbon: h.ribbon.clone(),
            seeds: seeds
                .iter()
                .map(|m| SeedModule {
                    name: m.name().to_string(),
                    dim: m.dim(),
                    action: m.action().iter().map(|a| a.entries().to_vec()).collect(),
                })
                .collect(),
        }
    }

    /// Seed modules over `algebra`, which must be this file's algebra.
    pub fn seed_modules(&self, algebra: &Arc<HopfAlgebra>) -> Result<Vec<HModule>> {
        self.seeds
            .iter()
            .map(|s| {
                let action = s
                    .action
                    .iter()
                    .map(|m| Matrix::from_vec(s.dim, s.dim, m.clone()))
                    .collect::<Result<Vec<_>>>()?;
                let module = HModule::new(s.name.clone(), algebra.clone(), action)?;
                module
                    .verify()
                    .map_err(|e| Error::Parse(format!("seed `{}` is not a module: {e}", s.name)))?;
                Ok(module)
            })
            .collect()
    }

    pub fn to_json(&self) -> String {
        to_pretty_json(self)
    }
}

impl MapFile {
    pub fn parse(text: &str) -> Result<Self> {
        let file: Self = parse_json(text)?;
        file.target.validate()?;
        Ok(file)
    }

    pub fn to_map(&self, source_dim: usize) -> Result<(HopfAlgebra, HopfMap)> {
        let target = self.target.to_hopf()?;
        check_len("matrix", self.matrix.len(), target.dim() * source_dim)?;
        let matrix = Matrix::from_vec(target.dim(), source_dim, self.matrix.clone())?;
        Ok((target, HopfMap { name: self.name.clone(), matrix }))
    }

    pub fn to_json(&self) -> String {
        to_pretty_json(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::verify_hopf_axioms;

    #[test]
    fn round_trip_group_algebra() {
        let h = HopfAlgebra::group_algebra("C2", &["1", "x"], &[vec![0, 1], vec![1, 0]]).unwrap();
        let file = AlgebraFile::from_hopf(&h, &[]);
        let text = file.to_json();
        let back = AlgebraFile::parse(&text).unwrap();
        assert_eq!(back, file);
        let h2 = back.to_hopf().unwrap();
        assert_eq!(h2, h);
        assert!(verify_hopf_axioms(&h2).all_passed());
    }

    #[test]
    fn truncated_input_reports_location() {
        let h = HopfAlgebra::group_algebra("C2", &["1", "x"], &[vec![0, 1], vec![1, 0]]).unwrap();
        let text = AlgebraFile::from_hopf(&h, &[]).to_json();
        let err = AlgebraFile::parse(&text[..text.len() / 2]).unwrap_err();
        assert!(matches!(&err, Error::Parse(m) if m.contains("line")), "{err}");
    }

    #[test]
    fn noncanonical_rational_is_rejected() {
        let text = r#"{"name":"k","dim":1,"basis":["1"],"mul":[[0,0,0,"2/2"]],"unit":["1"],
            "comul":[[0,0,0,"1"]],"counit":["1"],"antipode":["1"]}"#;
        assert!(matches!(AlgebraFile::parse(text), Err(Error::Parse(_))));
    }

    #[test]
    fn out_of_range_index_is_rejected() {
        let text = r#"{"name":"k","dim":1,"basis":["1"],"mul":[[0,1,0,"1"]],"unit":["1"],
            "comul":[[0,0,0,"1"]],"counit":["1"],"antipode":["1"]}"#;
        let err = AlgebraFile::parse(text).unwrap_err();
        assert!(matches!(&err, Error::Parse(m) if m.contains("mul[0]")), "{err}");
    }
}
