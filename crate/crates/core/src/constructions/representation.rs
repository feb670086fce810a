use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{BiUniformParams, ConstructionError};
use crate::fields::{Element, FieldDesc};
use crate::linalg::Matrix;

/// Which construction produced a matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    D2,
    Ext,
    Prime,
    Uniform,
    EvalCode,
    Dual,
}

impl Method {
    pub fn as_str(&self) -> &'static str {
        match self {
            Method::D2 => "d2",
            Method::Ext => "ext",
            Method::Prime => "prime",
            Method::Uniform => "uniform",
            Method::EvalCode => "evalcode",
            Method::Dual => "dual",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Provenance {
    pub method: Method,
    /// Construction inputs (points, field parameters, ...), method specific.
    pub spec: serde_json::Value,
    /// Set once the matrix passed the exhaustive check.
    #[serde(default)]
    pub verified: bool,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl Provenance {
    pub fn new(method: Method, spec: serde_json::Value) -> Self {
        Provenance { method, spec, verified: false, notes: Vec::new() }
    }
}

/// A `k × (n1 + n2)` matrix over a finite field; columns `0..n1` are `E1`.
#[derive(Debug, Clone, PartialEq)]
pub struct Representation {
    field: FieldDesc,
    params: BiUniformParams,
    matrix: Matrix,
    provenance: Provenance,
}

impl Representation {
    pub fn new(
        field: FieldDesc,
        params: BiUniformParams,
        matrix: Matrix,
        provenance: Provenance,
    ) -> Result<Self, ConstructionError> {
        if matrix.rows() != params.k() || matrix.cols() != params.n() {
            return Err(ConstructionError::Malformed(format!(
                "matrix is {}x{}, parameters need {}x{}",
                matrix.rows(),
                matrix.cols(),
                params.k(),
                params.n()
            )));
        }
        if let Some(bad) = matrix.entries().iter().find(|e| !field.contains(e)) {
            return Err(ConstructionError::Malformed(format!("entry {bad:?} is not an element of {field}")));
        }
        Ok(Representation { field, params, matrix, provenance })
    }

    pub fn field(&self) -> &FieldDesc {
        &self.field
    }

    pub fn params(&self) -> &BiUniformParams {
        &self.params
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }

    pub fn provenance_mut(&mut self) -> &mut Provenance {
        &mut self.provenance
    }

    /// Number of `E1` columns.
    pub fn split(&self) -> usize {
        self.params.n1()
    }

    pub fn e1_columns(&self) -> std::ops::Range<usize> {
        0..self.params.n1()
    }

    pub fn e2_columns(&self) -> std::ops::Range<usize> {
        self.params.n1()..self.params.n()
    }

    pub fn is_verified(&self) -> bool {
        self.provenance.verified
    }

    pub fn set_verified(&mut self, verified: bool) {
        self.provenance.verified = verified;
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("representation serializes")
    }

    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }
}

#[derive(Serialize)]
struct WireOut<'a> {
    field: &'a FieldDesc,
    params: &'a BiUniformParams,
    split: usize,
    matrix: &'a Matrix,
    provenance: &'a Provenance,
}

#[derive(Deserialize)]
struct WireIn {
    field: FieldDesc,
    params: BiUniformParams,
    split: usize,
    matrix: Vec<Vec<Element>>,
    provenance: Provenance,
}

impl Serialize for Representation {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        WireOut {
            field: &self.field,
            params: &self.params,
            split: self.split(),
            matrix: &self.matrix,
            provenance: &self.provenance,
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Representation {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let w = WireIn::deserialize(deserializer)?;
        if w.split != w.params.n1() {
            return Err(D::Error::custom(format!("split {} differs from n1 = {}", w.split, w.params.n1())));
        }
        let matrix = Matrix::from_rows(w.params.n(), w.matrix).map_err(D::Error::custom)?;
        Representation::new(w.field, w.params, matrix, w.provenance).map_err(D::Error::custom)
    }
}
