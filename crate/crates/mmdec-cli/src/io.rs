//! JSON interchange for decompositions, symmetry elements and groups.
//!
//! Scalars are never JSON numbers: rationals are strings "p/q" or "p",
//! cyclotomic elements are 4-arrays of rational strings. Term order is
//! preserved on save; loading a canonical document and saving it again is
//! byte-identical.

use std::fmt;
use std::fs;
use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use mmdec::catalog::AnyDecomposition;
use mmdec::scalar::{Cyclotomic12, Field, FieldKind, Rational};
use mmdec::symmetry::{DihedralElement, FiniteSymmetryGroup, LinearTriple, SymmetryElement};
use mmdec::tensor::{Decomposition, Mat, RankOneTerm};

pub const SCHEMA: &str = "mmdec-v1";

/// Errors with one diagnostic per failure class; all map to exit status 2.
#[derive(Debug)]
pub enum IoError {
    Read(String),
    MalformedJson(String),
    WrongSchema(String),
    WrongKind { expected: &'static str, got: String },
    UnknownFieldTag(String),
    NonSquareMatrix(String),
    UnparseableScalar(String),
    BadDocument(String),
    Core(mmdec::Error),
}

impl fmt::Display for IoError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IoError::Read(m) => write!(f, "cannot read file: {m}"),
            IoError::MalformedJson(m) => write!(f, "malformed JSON: {m}"),
            IoError::WrongSchema(m) => write!(f, "unsupported schema version `{m}` (expected {SCHEMA})"),
            IoError::WrongKind { expected, got } => {
                write!(f, "wrong document kind `{got}` (expected `{expected}`)")
            }
            IoError::UnknownFieldTag(m) => write!(f, "unknown field tag `{m}`"),
            IoError::NonSquareMatrix(m) => write!(f, "non-square matrix: {m}"),
            IoError::UnparseableScalar(m) => write!(f, "unparseable scalar: {m}"),
            IoError::BadDocument(m) => write!(f, "invalid document: {m}"),
            IoError::Core(e) => write!(f, "{e}"),
        }
    }
}

impl From<mmdec::Error> for IoError {
    fn from(e: mmdec::Error) -> Self {
        IoError::Core(e)
    }
}

// --- document shapes -------------------------------------------------------

#[derive(Serialize, Deserialize)]
struct DecompositionDoc {
    schema: String,
    kind: String,
    n: usize,
    field: String,
    terms: Vec<TermDoc>,
}

#[derive(Serialize, Deserialize)]
struct TermDoc {
    coeff: Value,
    #[serde(rename = "A")]
    a: Vec<Vec<Value>>,
    #[serde(rename = "B")]
    b: Vec<Vec<Value>>,
    #[serde(rename = "C")]
    c: Vec<Vec<Value>>,
}

#[derive(Serialize, Deserialize)]
struct SymmetryDoc {
    schema: String,
    kind: String,
    n: usize,
    field: String,
    #[serde(flatten)]
    element: ElementDoc,
}

#[derive(Serialize, Deserialize)]
struct ElementDoc {
    linear: LinearDoc,
    rotation: u8,
    reflected: bool,
}

#[derive(Serialize, Deserialize)]
struct LinearDoc {
    #[serde(rename = "gU")]
    g_u: Vec<Vec<Value>>,
    #[serde(rename = "gV")]
    g_v: Vec<Vec<Value>>,
    #[serde(rename = "gW")]
    g_w: Vec<Vec<Value>>,
}

#[derive(Serialize, Deserialize)]
struct GroupDoc {
    schema: String,
    kind: String,
    n: usize,
    field: String,
    elements: Vec<ElementDoc>,
}

// --- scalar conversions ----------------------------------------------------

fn rational_from_str(s: &str) -> Result<Rational, IoError> {
    Rational::from_str(s.trim()).map_err(|e| IoError::UnparseableScalar(format!("`{s}`: {e}")))
}

/// The JSON encoding of one field's scalars.
pub trait JsonScalar: Field {
    fn from_value(v: &Value) -> Result<Self, IoError>;
    fn to_value(&self) -> Value;
}

impl JsonScalar for Rational {
    fn from_value(v: &Value) -> Result<Self, IoError> {
        match v {
            Value::String(s) => rational_from_str(s),
            other => Err(IoError::UnparseableScalar(format!(
                "expected a rational string, got {other}"
            ))),
        }
    }

    fn to_value(&self) -> Value {
        Value::String(self.to_string())
    }
}

impl JsonScalar for Cyclotomic12 {
    fn from_value(v: &Value) -> Result<Self, IoError> {
        let Value::Array(items) = v else {
            return Err(IoError::UnparseableScalar(format!(
                "expected a 4-array of rational strings, got {v}"
            )));
        };
        if items.len() != 4 {
            return Err(IoError::BadDocument(format!(
                "cyclotomic coefficient array must have 4 entries, got {}",
                items.len()
            )));
        }
        let mut coeffs = Vec::with_capacity(4);
        for item in items {
            let Value::String(s) = item else {
                return Err(IoError::UnparseableScalar(format!(
                    "expected a rational string inside the coefficient array, got {item}"
                )));
            };
            coeffs.push(rational_from_str(s)?);
        }
        Ok(Cyclotomic12::new([
            coeffs[0].clone(),
            coeffs[1].clone(),
            coeffs[2].clone(),
            coeffs[3].clone(),
        ]))
    }

    fn to_value(&self) -> Value {
        Value::Array(
            self.coeffs()
                .iter()
                .map(|c| Value::String(c.to_string()))
                .collect(),
        )
    }
}

fn scalar_to_value_rational(value: &Rational) -> Value {
    value.to_value()
}

fn scalar_to_value_cyclotomic(value: &Cyclotomic12) -> Value {
    value.to_value()
}

// --- matrix conversions ----------------------------------------------------

fn mat_from_values<K: JsonScalar>(rows: &[Vec<Value>], what: &str) -> Result<Mat<K>, IoError> {
    let n = rows.len();
    if n == 0 || rows.iter().any(|r| r.len() != n) {
        return Err(IoError::NonSquareMatrix(format!(
            "{what}: expected n x n rows, got {:?}",
            rows.iter().map(Vec::len).collect::<Vec<_>>()
        )));
    }
    let mut converted = Vec::with_capacity(n);
    for row in rows {
        let mut out = Vec::with_capacity(n);
        for v in row {
            out.push(K::from_value(v)?);
        }
        converted.push(out);
    }
    Ok(Mat::from_rows(converted)?)
}

fn mat_to_values_rational(m: &Mat<Rational>) -> Vec<Vec<Value>> {
    (0..m.n())
        .map(|r| (0..m.n()).map(|c| scalar_to_value_rational(m.get(r, c))).collect())
        .collect()
}

fn mat_to_values_cyclotomic(m: &Mat<Cyclotomic12>) -> Vec<Vec<Value>> {
    (0..m.n())
        .map(|r| {
            (0..m.n())
                .map(|c| scalar_to_value_cyclotomic(m.get(r, c)))
                .collect()
        })
        .collect()
}

// --- decomposition load/save ------------------------------------------------

fn decomposition_from_doc<K: JsonScalar>(doc: &DecompositionDoc) -> Result<Decomposition<K>, IoError> {
    let mut terms = Vec::with_capacity(doc.terms.len());
    for (i, t) in doc.terms.iter().enumerate() {
        let coeff = K::from_value(&t.coeff)?;
        let a = mat_from_values::<K>(&t.a, &format!("term {i} matrix A"))?;
        let b = mat_from_values::<K>(&t.b, &format!("term {i} matrix B"))?;
        let c = mat_from_values::<K>(&t.c, &format!("term {i} matrix C"))?;
        if a.n() != doc.n {
            return Err(IoError::BadDocument(format!(
                "term {i} has size {} but the document declares n = {}",
                a.n(),
                doc.n
            )));
        }
        terms.push(RankOneTerm::new(coeff, a, b, c)?);
    }
    Ok(Decomposition::new(doc.n, terms)?)
}

pub fn parse_decomposition(text: &str) -> Result<AnyDecomposition, IoError> {
    let doc: DecompositionDoc =
        serde_json::from_str(text).map_err(|e| IoError::MalformedJson(e.to_string()))?;
    if doc.schema != SCHEMA {
        return Err(IoError::WrongSchema(doc.schema));
    }
    if doc.kind != "decomposition" {
        return Err(IoError::WrongKind {
            expected: "decomposition",
            got: doc.kind,
        });
    }
    match doc.field.as_str() {
        "rational" => Ok(AnyDecomposition::Rational(decomposition_from_doc(&doc)?)),
        "cyclotomic12" => Ok(AnyDecomposition::Cyclotomic(decomposition_from_doc(&doc)?)),
        other => Err(IoError::UnknownFieldTag(other.to_string())),
    }
}

pub fn render_decomposition(dec: &AnyDecomposition) -> String {
    let doc = match dec {
        AnyDecomposition::Rational(d) => DecompositionDoc {
            schema: SCHEMA.to_string(),
            kind: "decomposition".to_string(),
            n: d.n(),
            field: FieldKind::Rational.to_string(),
            terms: d
                .terms()
                .iter()
                .map(|t| TermDoc {
                    coeff: scalar_to_value_rational(&t.coeff),
                    a: mat_to_values_rational(&t.a),
                    b: mat_to_values_rational(&t.b),
                    c: mat_to_values_rational(&t.c),
                })
                .collect(),
        },
        AnyDecomposition::Cyclotomic(d) => DecompositionDoc {
            schema: SCHEMA.to_string(),
            kind: "decomposition".to_string(),
            n: d.n(),
            field: FieldKind::Cyclotomic12.to_string(),
            terms: d
                .terms()
                .iter()
                .map(|t| TermDoc {
                    coeff: scalar_to_value_cyclotomic(&t.coeff),
                    a: mat_to_values_cyclotomic(&t.a),
                    b: mat_to_values_cyclotomic(&t.b),
                    c: mat_to_values_cyclotomic(&t.c),
                })
                .collect(),
        },
    };
    let mut out = serde_json::to_string_pretty(&doc).expect("documents serialize");
    out.push('\n');
    out
}

pub fn load_decomposition(path: &Path) -> Result<AnyDecomposition, IoError> {
    let text = fs::read_to_string(path).map_err(|e| IoError::Read(format!("{}: {e}", path.display())))?;
    parse_decomposition(&text)
}

pub fn save_decomposition(dec: &AnyDecomposition, path: &Path) -> Result<(), IoError> {
    fs::write(path, render_decomposition(dec))
        .map_err(|e| IoError::Read(format!("{}: {e}", path.display())))
}

// --- symmetry elements & groups ----------------------------------------------

/// Runtime-tagged symmetry element.
pub enum AnyElement {
    Rational(SymmetryElement<Rational>),
    Cyclotomic(SymmetryElement<Cyclotomic12>),
}

/// Runtime-tagged group.
pub enum AnyGroup {
    Rational(FiniteSymmetryGroup<Rational>),
    Cyclotomic(FiniteSymmetryGroup<Cyclotomic12>),
}

fn element_from_doc<K: JsonScalar>(doc: &ElementDoc, n: usize) -> Result<SymmetryElement<K>, IoError> {
    let g_u = mat_from_values::<K>(&doc.linear.g_u, "gU")?;
    let g_v = mat_from_values::<K>(&doc.linear.g_v, "gV")?;
    let g_w = mat_from_values::<K>(&doc.linear.g_w, "gW")?;
    if g_u.n() != n {
        return Err(IoError::BadDocument(format!(
            "element has size {} but the document declares n = {n}",
            g_u.n()
        )));
    }
    if doc.rotation > 2 {
        return Err(IoError::BadDocument(format!(
            "rotation must be 0, 1 or 2, got {}",
            doc.rotation
        )));
    }
    Ok(SymmetryElement::new(
        LinearTriple::new(g_u, g_v, g_w)?,
        DihedralElement {
            rotation: doc.rotation,
            reflected: doc.reflected,
        },
    ))
}

fn element_to_doc_rational(e: &SymmetryElement<Rational>) -> ElementDoc {
    ElementDoc {
        linear: LinearDoc {
            g_u: mat_to_values_rational(&e.linear.g_u),
            g_v: mat_to_values_rational(&e.linear.g_v),
            g_w: mat_to_values_rational(&e.linear.g_w),
        },
        rotation: e.dihedral.rotation,
        reflected: e.dihedral.reflected,
    }
}

fn element_to_doc_cyclotomic(e: &SymmetryElement<Cyclotomic12>) -> ElementDoc {
    ElementDoc {
        linear: LinearDoc {
            g_u: mat_to_values_cyclotomic(&e.linear.g_u),
            g_v: mat_to_values_cyclotomic(&e.linear.g_v),
            g_w: mat_to_values_cyclotomic(&e.linear.g_w),
        },
        rotation: e.dihedral.rotation,
        reflected: e.dihedral.reflected,
    }
}

pub fn parse_element(text: &str) -> Result<AnyElement, IoError> {
    let doc: SymmetryDoc =
        serde_json::from_str(text).map_err(|e| IoError::MalformedJson(e.to_string()))?;
    if doc.schema != SCHEMA {
        return Err(IoError::WrongSchema(doc.schema));
    }
    if doc.kind != "symmetry" {
        return Err(IoError::WrongKind {
            expected: "symmetry",
            got: doc.kind,
        });
    }
    match doc.field.as_str() {
        "rational" => Ok(AnyElement::Rational(element_from_doc(&doc.element, doc.n)?)),
        "cyclotomic12" => Ok(AnyElement::Cyclotomic(element_from_doc(&doc.element, doc.n)?)),
        other => Err(IoError::UnknownFieldTag(other.to_string())),
    }
}

pub fn render_element(e: &AnyElement) -> String {
    let doc = match e {
        AnyElement::Rational(e) => SymmetryDoc {
            schema: SCHEMA.to_string(),
            kind: "symmetry".to_string(),
            n: e.n(),
            field: FieldKind::Rational.to_string(),
            element: element_to_doc_rational(e),
        },
        AnyElement::Cyclotomic(e) => SymmetryDoc {
            schema: SCHEMA.to_string(),
            kind: "symmetry".to_string(),
            n: e.n(),
            field: FieldKind::Cyclotomic12.to_string(),
            element: element_to_doc_cyclotomic(e),
        },
    };
    let mut out = serde_json::to_string_pretty(&doc).expect("documents serialize");
    out.push('\n');
    out
}

pub fn load_element(path: &Path) -> Result<AnyElement, IoError> {
    let text = fs::read_to_string(path).map_err(|e| IoError::Read(format!("{}: {e}", path.display())))?;
    parse_element(&text)
}

pub fn parse_group(text: &str) -> Result<AnyGroup, IoError> {
    let doc: GroupDoc =
        serde_json::from_str(text).map_err(|e| IoError::MalformedJson(e.to_string()))?;
    if doc.schema != SCHEMA {
        return Err(IoError::WrongSchema(doc.schema));
    }
    if doc.kind != "group" {
        return Err(IoError::WrongKind {
            expected: "group",
            got: doc.kind,
        });
    }
    match doc.field.as_str() {
        "rational" => {
            let elements = doc
                .elements
                .iter()
                .map(|e| element_from_doc::<Rational>(e, doc.n))
                .collect::<Result<Vec<_>, _>>()?;
            Ok(AnyGroup::Rational(FiniteSymmetryGroup::from_elements(elements)?))
        }
        "cyclotomic12" => {
            let elements = doc
                .elements
                .iter()
                .map(|e| element_from_doc::<Cyclotomic12>(e, doc.n))
                .collect::<Result<Vec<_>, _>>()?;
            Ok(AnyGroup::Cyclotomic(FiniteSymmetryGroup::from_elements(elements)?))
        }
        other => Err(IoError::UnknownFieldTag(other.to_string())),
    }
}

pub fn render_group(group: &AnyGroup) -> String {
    let doc = match group {
        AnyGroup::Rational(g) => GroupDoc {
            schema: SCHEMA.to_string(),
            kind: "group".to_string(),
            n: g.n(),
            field: FieldKind::Rational.to_string(),
            elements: g.elements().iter().map(element_to_doc_rational).collect(),
        },
        AnyGroup::Cyclotomic(g) => GroupDoc {
            schema: SCHEMA.to_string(),
            kind: "group".to_string(),
            n: g.n(),
            field: FieldKind::Cyclotomic12.to_string(),
            elements: g.elements().iter().map(element_to_doc_cyclotomic).collect(),
        },
    };
    let mut out = serde_json::to_string_pretty(&doc).expect("documents serialize");
    out.push('\n');
    out
}

pub fn load_group(path: &Path) -> Result<AnyGroup, IoError> {
    let text = fs::read_to_string(path).map_err(|e| IoError::Read(format!("{}: {e}", path.display())))?;
    parse_group(&text)
}
