//! Check records shared by every verification routine.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::linalg::Matrix;
use crate::rational::Rational;

/// Matrices with more entries than this are summarized by shape only.
const MATRIX_DUMP_LIMIT: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Unavailable,
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NamedMatrix {
    pub name: String,
    pub rows: usize,
    pub cols: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub entries: Option<Vec<Vec<Rational>>>,
}

impl NamedMatrix {
    pub fn new(name: impl Into<String>, m: &Matrix) -> Self {
        let entries = (m.rows() * m.cols() <= MATRIX_DUMP_LIMIT)
            .then(|| (0..m.rows()).map(|i| m.row(i).to_vec()).collect());
        Self { name: name.into(), rows: m.rows(), cols: m.cols(), entries }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    /// Labels of the objects or basis elements at which the check failed.
    pub tuple: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub entry: Option<(usize, usize)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub matrices: Vec<NamedMatrix>,
}

impl Witness {
    pub fn at(tuple: Vec<String>) -> Self {
        Self { tuple, ..Self::default() }
    }

    pub fn detail(mut self, d: impl Into<String>) -> Self {
        self.detail = Some(d.into());
        self
    }

    /// Witness for `lhs != rhs`: the first differing entry plus both sides.
    pub fn mismatch(tuple: Vec<String>, lhs: &Matrix, rhs: &Matrix) -> Self {
        let entry = lhs.first_difference(rhs);
        Self {
            tuple,
            entry: entry.filter(|e| e.0 != usize::MAX),
            detail: (lhs.shape() != rhs.shape()).then(|| {
                format!("shapes differ: {:?} vs {:?}", lhs.shape(), rhs.shape())
            }),
            matrices: vec![NamedMatrix::new("lhs", lhs), NamedMatrix::new("rhs", rhs)],
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub id: String,
    pub anchor: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    /// Name of the missing datum for `unavailable`, reason for `skipped`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub missing: Option<String>,
    #[serde(skip_serializing_if = "BTreeMap::is_empty", default)]
    pub scalars: BTreeMap<String, Rational>,
    /// Number of instances (objects, pairs, basis tuples) examined.
    pub instances: usize,
}

impl Check {
    pub fn pass(id: impl Into<String>, anchor: impl Into<String>, instances: usize) -> Self {
        Self {
            id: id.into(),
            anchor: anchor.into(),
            status: Status::Pass,
            witness: None,
            missing: None,
            scalars: BTreeMap::new(),
            instances,
        }
    }

    pub fn fail(id: impl Into<String>, anchor: impl Into<String>, witness: Witness) -> Self {
        Self { status: Status::Fail, witness: Some(witness), ..Self::pass(id, anchor, 0) }
    }

    pub fn unavailable(id: impl Into<String>, anchor: impl Into<String>, missing: impl Into<String>) -> Self {
        Self { status: Status::Unavailable, missing: Some(missing.into()), ..Self::pass(id, anchor, 0) }
    }

    pub fn skipped(id: impl Into<String>, anchor: impl Into<String>, reason: impl Into<String>) -> Self {
        Self { status: Status::Skipped, missing: Some(reason.into()), ..Self::pass(id, anchor, 0) }
    }

    /// Pass when `failure` is `None`, fail with its witness otherwise.
    pub fn from_outcome(
        id: impl Into<String>,
        anchor: impl Into<String>,
        instances: usize,
        failure: Option<Witness>,
    ) -> Self {
        match failure {
            None => Self::pass(id, anchor, instances),
            Some(w) => Self { instances, ..Self::fail(id, anchor, w) },
        }
    }

    pub fn with_scalar(mut self, name: impl Into<String>, value: Rational) -> Self {
        self.scalars.insert(name.into(), value);
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }

    pub fn get(&self, id: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.id == id)
    }

    pub fn status(&self, id: &str) -> Option<Status> {
        self.get(id).map(|c| c.status)
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn any_failed(&self) -> bool {
        self.checks.iter().any(|c| c.status == Status::Fail)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }
}
