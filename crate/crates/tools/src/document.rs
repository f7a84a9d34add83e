//! The algebra-description format.
//!
//! A document is a JSON object. Rationals are strings `"p/q"`, basis indices
//! are 1-based, a binary structure constant `[e_i, e_j] = ... + c e_k + ...`
//! is the entry `[i, j, k, "c"]` and a ternary one is `[i, j, l, k, "c"]`.
//!
//! ```json
//! {
//!   "format": 1,
//!   "space": {"dim": 2, "parities": [0, 0]},
//!   "binary": [
//!     [1, 2, 2, "1/1"]
//!   ],
//!   "maps": {
//!     "tau": {"parity": 0, "row": ["1/1", "0/1"]}
//!   }
//! }
//! ```
//!
//! Missing `alpha` or `beta` means the identity.

use std::collections::BTreeMap;
use std::fmt;

use bihom_core::{
    BiHomLieSuperalgebra, GradedMap, LinearForm, Matrix, Parity, Scalar, StructureTensor, StructureTensor2,
    StructureTensor3, SuperSpace, ThreeBiHomLieSuperalgebra,
};
use serde::Deserialize;

pub const FORMAT_VERSION: u32 = 1;

/// A parse or validation failure, located by field path or by line and column.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DocError {
    pub path: String,
    pub line: Option<usize>,
    pub column: Option<usize>,
    pub message: String,
}

impl DocError {
    pub fn at(path: impl Into<String>, message: impl Into<String>) -> Self {
        DocError { path: path.into(), line: None, column: None, message: message.into() }
    }
}

impl fmt::Display for DocError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let (Some(l), Some(c)) = (self.line, self.column) {
            write!(f, "line {l}, column {c}: ")?;
        }
        if !self.path.is_empty() && self.path != "." {
            write!(f, "{}: ", self.path)?;
        }
        f.write_str(&self.message)
    }
}

impl std::error::Error for DocError {}

/// A named entry of the `maps` section.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NamedMap {
    Matrix(GradedMap),
    /// A linear form, written as a single row.
    Row(LinearForm),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraDocument {
    pub space: SuperSpace,
    pub binary: Option<StructureTensor2>,
    pub ternary: Option<StructureTensor3>,
    pub maps: BTreeMap<String, NamedMap>,
    pub scalars: BTreeMap<String, Scalar>,
    /// Extra ternary tensors such as deformation cochains.
    pub cochains: BTreeMap<String, StructureTensor3>,
    pub metadata: Option<String>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDocument {
    format: u32,
    space: RawSpace,
    binary: Option<Vec<(usize, usize, usize, String)>>,
    ternary: Option<Vec<(usize, usize, usize, usize, String)>>,
    #[serde(default)]
    maps: BTreeMap<String, RawMap>,
    #[serde(default)]
    scalars: BTreeMap<String, String>,
    #[serde(default)]
    cochains: BTreeMap<String, Vec<(usize, usize, usize, usize, String)>>,
    metadata: Option<String>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSpace {
    dim: usize,
    parities: Vec<u8>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawMap {
    parity: u8,
    rows: Option<Vec<Vec<String>>>,
    row: Option<Vec<String>>,
}

fn scalar_at(path: &str, text: &str) -> Result<Scalar, DocError> {
    text.parse::<Scalar>().map_err(|e| DocError::at(path, format!("bad rational {text:?}: {e}")))
}

fn index_at(path: &str, i: usize, dim: usize) -> Result<usize, DocError> {
    if i == 0 || i > dim {
        return Err(DocError::at(path, format!("basis index {i} outside 1..={dim}")));
    }
    Ok(i - 1)
}

fn parity_at(path: &str, bit: u8) -> Result<Parity, DocError> {
    Parity::from_bit(bit).ok_or_else(|| DocError::at(path, format!("parity must be 0 or 1, got {bit}")))
}

fn tensor_at<const N: usize>(
    section: &str,
    space: &SuperSpace,
    rows: impl Iterator<Item = ([usize; N], usize, String)>,
) -> Result<StructureTensor<N>, DocError> {
    let mut seen = BTreeMap::new();
    let mut entries = Vec::new();
    for (n, (inputs, output, c)) in rows.enumerate() {
        let path = format!("{section}[{n}]");
        let mut idx = [0; N];
        for (slot, &i) in inputs.iter().enumerate() {
            idx[slot] = index_at(&path, i, space.dim())?;
        }
        let out = index_at(&path, output, space.dim())?;
        let c = scalar_at(&format!("{path}[{}]", N + 1), &c)?;
        if let Some(first) = seen.insert((idx, out), n) {
            return Err(DocError::at(path, format!("duplicate of {section}[{first}]")));
        }
        let total: Parity = idx.iter().map(|&i| space.parity(i)).sum();
        if !c.is_zero() && total != space.parity(out) {
            return Err(DocError::at(path, "parity mismatch: output parity must be the sum of the input parities"));
        }
        entries.push((idx, out, c));
    }
    StructureTensor::from_entries(space, entries).map_err(|e| DocError::at(section, e.to_string()))
}

fn map_at(name: &str, space: &SuperSpace, raw: RawMap) -> Result<NamedMap, DocError> {
    let path = format!("maps.{name}");
    let parity = parity_at(&format!("{path}.parity"), raw.parity)?;
    let n = space.dim();
    match (raw.rows, raw.row) {
        (Some(rows), None) => {
            if rows.len() != n {
                return Err(DocError::at(format!("{path}.rows"), format!("expected {n} rows, found {}", rows.len())));
            }
            let mut m = Matrix::zeros(n, n);
            for (i, row) in rows.iter().enumerate() {
                if row.len() != n {
                    return Err(DocError::at(format!("{path}.rows[{i}]"), format!("expected {n} entries, found {}", row.len())));
                }
                for (j, c) in row.iter().enumerate() {
                    m[(i, j)] = scalar_at(&format!("{path}.rows[{i}][{j}]"), c)?;
                }
            }
            GradedMap::new(space.clone(), m, parity).map(NamedMap::Matrix).map_err(|e| match e {
                bihom_core::Error::MapParity { row, col, .. } => {
                    DocError::at(format!("{path}.rows[{row}][{col}]"), e.to_string())
                }
                other => DocError::at(path, other.to_string()),
            })
        }
        (None, Some(row)) => {
            if parity != Parity::Even {
                return Err(DocError::at(format!("{path}.parity"), "a row is a linear form and must be even"));
            }
            if row.len() != n {
                return Err(DocError::at(format!("{path}.row"), format!("expected {n} entries, found {}", row.len())));
            }
            let coeffs =
                row.iter().enumerate().map(|(j, c)| scalar_at(&format!("{path}.row[{j}]"), c)).collect::<Result<Vec<_>, _>>()?;
            LinearForm::new(space.clone(), coeffs).map(NamedMap::Row).map_err(|e| match e {
                bihom_core::Error::OddFormCoefficient { index } => DocError::at(format!("{path}.row[{index}]"), e.to_string()),
                other => DocError::at(path, other.to_string()),
            })
        }
        _ => Err(DocError::at(path, "exactly one of `rows` and `row` is required")),
    }
}

/// Parse and validate a document.
pub fn parse_document(text: &str) -> Result<AlgebraDocument, DocError> {
    let de = &mut serde_json::Deserializer::from_str(text);
    let raw: RawDocument = serde_path_to_error::deserialize(de).map_err(|e| {
        let path = e.path().to_string();
        let inner = e.into_inner();
        DocError { path, line: Some(inner.line()), column: Some(inner.column()), message: inner.to_string() }
    })?;
    if raw.format != FORMAT_VERSION {
        return Err(DocError::at("format", format!("unsupported format version {}", raw.format)));
    }
    if raw.space.parities.len() != raw.space.dim {
        return Err(DocError::at(
            "space.parities",
            format!("dim is {} but {} parities are given", raw.space.dim, raw.space.parities.len()),
        ));
    }
    if raw.space.dim == 0 {
        return Err(DocError::at("space.dim", "dimension must be at least 1"));
    }
    let parities = raw
        .space
        .parities
        .iter()
        .enumerate()
        .map(|(i, &b)| parity_at(&format!("space.parities[{i}]"), b))
        .collect::<Result<Vec<_>, _>>()?;
    let space = SuperSpace::new(parities).map_err(|e| DocError::at("space", e.to_string()))?;

    let binary = raw
        .binary
        .map(|rows| tensor_at::<2>("binary", &space, rows.into_iter().map(|(i, j, k, c)| ([i, j], k, c))))
        .transpose()?;
    let ternary = raw
        .ternary
        .map(|rows| tensor_at::<3>("ternary", &space, rows.into_iter().map(|(i, j, l, k, c)| ([i, j, l], k, c))))
        .transpose()?;
    let mut maps = BTreeMap::new();
    for (name, m) in raw.maps {
        let parsed = map_at(&name, &space, m)?;
        maps.insert(name, parsed);
    }
    for twist in ["alpha", "beta"] {
        match maps.get(twist) {
            Some(NamedMap::Matrix(m)) if !m.is_even() => {
                return Err(DocError::at(format!("maps.{twist}.parity"), "twisting maps must be even"))
            }
            Some(NamedMap::Row(_)) => return Err(DocError::at(format!("maps.{twist}"), "twisting maps must be matrices")),
            _ => {}
        }
    }
    let mut scalars = BTreeMap::new();
    for (name, text) in raw.scalars {
        let c = scalar_at(&format!("scalars.{name}"), &text)?;
        scalars.insert(name, c);
    }
    let mut cochains = BTreeMap::new();
    for (name, rows) in raw.cochains {
        let section = format!("cochains.{name}");
        let t = tensor_at::<3>(&section, &space, rows.into_iter().map(|(i, j, l, k, c)| ([i, j, l], k, c)))?;
        cochains.insert(name, t);
    }
    Ok(AlgebraDocument { space, binary, ternary, maps, scalars, cochains, metadata: raw.metadata })
}

fn json_string(s: &str) -> String {
    serde_json::to_string(s).expect("strings serialize")
}

fn scalar_json(c: &Scalar) -> String {
    json_string(&c.to_string())
}

fn tensor_lines<const N: usize>(out: &mut String, t: &StructureTensor<N>) {
    let lines: Vec<String> = t
        .entries()
        .map(|(inputs, k, c)| {
            let idx: Vec<String> = inputs.iter().map(|i| (i + 1).to_string()).collect();
            format!("[{}, {}, {}]", idx.join(", "), k + 1, scalar_json(c))
        })
        .collect();
    if lines.is_empty() {
        out.push_str("[]");
    } else {
        out.push_str("[\n    ");
        out.push_str(&lines.join(",\n    "));
        out.push_str("\n  ]");
    }
}

fn scalar_row(row: impl Iterator<Item = Scalar>) -> String {
    let cells: Vec<String> = row.map(|c| scalar_json(&c)).collect();
    format!("[{}]", cells.join(", "))
}

impl AlgebraDocument {
    pub fn new(space: SuperSpace) -> Self {
        AlgebraDocument {
            space,
            binary: None,
            ternary: None,
            maps: BTreeMap::new(),
            scalars: BTreeMap::new(),
            cochains: BTreeMap::new(),
            metadata: None,
        }
    }

    pub fn from_binary(a: &BiHomLieSuperalgebra) -> Self {
        let mut doc = AlgebraDocument::new(a.space().clone());
        doc.binary = Some(a.bracket().clone());
        doc.set_twists(a.alpha(), a.beta());
        doc
    }

    pub fn from_ternary(a: &ThreeBiHomLieSuperalgebra) -> Self {
        let mut doc = AlgebraDocument::new(a.space().clone());
        doc.ternary = Some(a.bracket().clone());
        doc.set_twists(a.alpha(), a.beta());
        doc
    }

    pub fn set_twists(&mut self, alpha: &GradedMap, beta: &GradedMap) {
        self.maps.insert("alpha".into(), NamedMap::Matrix(alpha.clone()));
        self.maps.insert("beta".into(), NamedMap::Matrix(beta.clone()));
    }

    pub fn with_map(mut self, name: &str, m: GradedMap) -> Self {
        self.maps.insert(name.into(), NamedMap::Matrix(m));
        self
    }

    pub fn with_form(mut self, name: &str, f: LinearForm) -> Self {
        self.maps.insert(name.into(), NamedMap::Row(f));
        self
    }

    pub fn with_scalar(mut self, name: &str, c: Scalar) -> Self {
        self.scalars.insert(name.into(), c);
        self
    }

    /// A matrix from the `maps` section.
    pub fn map(&self, name: &str) -> Result<&GradedMap, DocError> {
        match self.maps.get(name) {
            Some(NamedMap::Matrix(m)) => Ok(m),
            Some(NamedMap::Row(_)) => Err(DocError::at(format!("maps.{name}"), "expected a matrix, found a row")),
            None => Err(DocError::at(format!("maps.{name}"), "no such map")),
        }
    }

    /// A linear form from the `maps` section.
    pub fn form(&self, name: &str) -> Result<&LinearForm, DocError> {
        match self.maps.get(name) {
            Some(NamedMap::Row(f)) => Ok(f),
            Some(NamedMap::Matrix(_)) => Err(DocError::at(format!("maps.{name}"), "expected a row, found a matrix")),
            None => Err(DocError::at(format!("maps.{name}"), "no such map")),
        }
    }

    pub fn scalar(&self, name: &str) -> Result<&Scalar, DocError> {
        self.scalars.get(name).ok_or_else(|| DocError::at(format!("scalars.{name}"), "no such scalar"))
    }

    pub fn cochain(&self, name: &str) -> Result<&StructureTensor3, DocError> {
        self.cochains.get(name).ok_or_else(|| DocError::at(format!("cochains.{name}"), "no such cochain"))
    }

    fn twist(&self, name: &str) -> GradedMap {
        match self.maps.get(name) {
            Some(NamedMap::Matrix(m)) => m.clone(),
            _ => GradedMap::identity(&self.space),
        }
    }

    pub fn alpha(&self) -> GradedMap {
        self.twist("alpha")
    }

    pub fn beta(&self) -> GradedMap {
        self.twist("beta")
    }

    pub fn binary_algebra(&self) -> Result<BiHomLieSuperalgebra, DocError> {
        let t = self.binary.clone().ok_or_else(|| DocError::at("binary", "this command needs a binary tensor"))?;
        BiHomLieSuperalgebra::new(t, self.alpha(), self.beta()).map_err(|e| DocError::at("maps", e.to_string()))
    }

    pub fn ternary_algebra(&self) -> Result<ThreeBiHomLieSuperalgebra, DocError> {
        let t = self.ternary.clone().ok_or_else(|| DocError::at("ternary", "this command needs a ternary tensor"))?;
        ThreeBiHomLieSuperalgebra::new(t, self.alpha(), self.beta()).map_err(|e| DocError::at("maps", e.to_string()))
    }

    /// Canonical text: fixed key order, sorted entries, reduced `"p/q"` rationals,
    /// zero structure constants dropped, empty optional sections omitted.
    pub fn to_canonical_string(&self) -> String {
        let mut out = String::from("{\n");
        out.push_str(&format!("  \"format\": {FORMAT_VERSION},\n"));
        let bits: Vec<String> = self.space.parities().iter().map(|p| p.bit().to_string()).collect();
        out.push_str(&format!("  \"space\": {{\"dim\": {}, \"parities\": [{}]}}", self.space.dim(), bits.join(", ")));
        if let Some(t) = &self.binary {
            out.push_str(",\n  \"binary\": ");
            tensor_lines(&mut out, t);
        }
        if let Some(t) = &self.ternary {
            out.push_str(",\n  \"ternary\": ");
            tensor_lines(&mut out, t);
        }
        if !self.maps.is_empty() {
            out.push_str(",\n  \"maps\": {\n");
            let entries: Vec<String> = self
                .maps
                .iter()
                .map(|(name, m)| match m {
                    NamedMap::Matrix(g) => {
                        let n = g.space().dim();
                        let rows: Vec<String> = (0..n).map(|i| scalar_row(g.matrix().row(i).iter().cloned())).collect();
                        format!(
                            "    {}: {{\"parity\": {}, \"rows\": [{}]}}",
                            json_string(name),
                            g.parity().bit(),
                            rows.join(", ")
                        )
                    }
                    NamedMap::Row(f) => format!(
                        "    {}: {{\"parity\": 0, \"row\": {}}}",
                        json_string(name),
                        scalar_row(f.coefficients().iter().cloned())
                    ),
                })
                .collect();
            out.push_str(&entries.join(",\n"));
            out.push_str("\n  }");
        }
        if !self.scalars.is_empty() {
            let entries: Vec<String> =
                self.scalars.iter().map(|(name, c)| format!("{}: {}", json_string(name), scalar_json(c))).collect();
            out.push_str(&format!(",\n  \"scalars\": {{{}}}", entries.join(", ")));
        }
        if !self.cochains.is_empty() {
            out.push_str(",\n  \"cochains\": {");
            let mut first = true;
            for (name, t) in &self.cochains {
                out.push_str(if first { "\n    " } else { ",\n    " });
                first = false;
                out.push_str(&format!("{}: ", json_string(name)));
                let mut body = String::new();
                tensor_lines(&mut body, t);
                out.push_str(&body.replace("\n", "\n  "));
            }
            out.push_str("\n  }");
        }
        if let Some(m) = &self.metadata {
            out.push_str(&format!(",\n  \"metadata\": {}", json_string(m)));
        }
        out.push_str("\n}\n");
        out
    }
}
