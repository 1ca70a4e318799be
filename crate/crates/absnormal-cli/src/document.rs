//! JSON interchange format for abs-normal forms.
//!
//! A document is an object with integer fields `n`, `m`, `s`, number
//! arrays `c` (length `s`) and `b` (length `m`), and row-major nested
//! arrays `Z` (`s x n`), `L` (`s x s`), `J` (`m x n`), `Y` (`m x s`).
//! The declared dimensions are authoritative; every array is checked
//! against them, `L` must be strictly lower triangular, and all entries
//! must be finite. Serialization is deterministic, so a parsed document
//! round-trips to identical bytes.

use std::fmt;
use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use absnormal::anf::AnfError;
use absnormal::{AbsNormalForm, Matrix, Vector};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AnfDocument {
    pub n: usize,
    pub m: usize,
    pub s: usize,
    pub c: Vec<f64>,
    pub b: Vec<f64>,
    #[serde(rename = "Z")]
    pub z: Vec<Vec<f64>>,
    #[serde(rename = "L")]
    pub l: Vec<Vec<f64>>,
    #[serde(rename = "J")]
    pub j: Vec<Vec<f64>>,
    #[serde(rename = "Y")]
    pub y: Vec<Vec<f64>>,
}

#[derive(Debug)]
pub enum DocumentError {
    Io(std::io::Error),
    Parse(serde_json::Error),
    Shape(String),
    Form(AnfError),
}

impl fmt::Display for DocumentError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DocumentError::Io(e) => write!(f, "io error: {e}"),
            DocumentError::Parse(e) => write!(f, "malformed JSON: {e}"),
            DocumentError::Shape(msg) => write!(f, "inconsistent document: {msg}"),
            DocumentError::Form(e) => write!(f, "invalid abs-normal form: {e}"),
        }
    }
}

impl std::error::Error for DocumentError {}

impl From<std::io::Error> for DocumentError {
    fn from(e: std::io::Error) -> Self {
        DocumentError::Io(e)
    }
}

impl From<serde_json::Error> for DocumentError {
    fn from(e: serde_json::Error) -> Self {
        DocumentError::Parse(e)
    }
}

fn matrix_to_rows(m: &Matrix) -> Vec<Vec<f64>> {
    (0..m.rows()).map(|i| m.row(i).to_vec()).collect()
}

fn rows_to_matrix(
    name: &str,
    rows: &[Vec<f64>],
    want_rows: usize,
    want_cols: usize,
) -> Result<Matrix, DocumentError> {
    if rows.len() != want_rows {
        return Err(DocumentError::Shape(format!(
            "{name} must have {want_rows} rows, got {}",
            rows.len()
        )));
    }
    let mut data = Vec::with_capacity(want_rows * want_cols);
    for (i, row) in rows.iter().enumerate() {
        if row.len() != want_cols {
            return Err(DocumentError::Shape(format!(
                "{name} row {i} must have {want_cols} entries, got {}",
                row.len()
            )));
        }
        data.extend_from_slice(row);
    }
    Ok(Matrix::from_vec(want_rows, want_cols, data))
}

impl AnfDocument {
    pub fn from_form(form: &AbsNormalForm) -> AnfDocument {
        AnfDocument {
            n: form.input_dim(),
            m: form.output_dim(),
            s: form.switching_dim(),
            c: form.c().as_slice().to_vec(),
            b: form.b().as_slice().to_vec(),
            z: matrix_to_rows(form.z_mat()),
            l: matrix_to_rows(form.l_mat()),
            j: matrix_to_rows(form.j_mat()),
            y: matrix_to_rows(form.y_mat()),
        }
    }

    pub fn to_form(&self) -> Result<AbsNormalForm, DocumentError> {
        if self.c.len() != self.s {
            return Err(DocumentError::Shape(format!(
                "c must have length s = {}, got {}",
                self.s,
                self.c.len()
            )));
        }
        if self.b.len() != self.m {
            return Err(DocumentError::Shape(format!(
                "b must have length m = {}, got {}",
                self.m,
                self.b.len()
            )));
        }
        let z = rows_to_matrix("Z", &self.z, self.s, self.n)?;
        let l = rows_to_matrix("L", &self.l, self.s, self.s)?;
        let j = rows_to_matrix("J", &self.j, self.m, self.n)?;
        let y = rows_to_matrix("Y", &self.y, self.m, self.s)?;
        AbsNormalForm::new(
            Vector::from_slice(&self.c),
            Vector::from_slice(&self.b),
            z,
            l,
            j,
            y,
        )
        .map_err(DocumentError::Form)
    }

    /// Deterministic pretty-printed JSON with a trailing newline.
    pub fn to_json_string(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("document serializes");
        text.push('\n');
        text
    }

    pub fn from_json_str(text: &str) -> Result<AnfDocument, DocumentError> {
        Ok(serde_json::from_str(text)?)
    }
}

pub fn load_document(path: &Path) -> Result<AnfDocument, DocumentError> {
    let text = fs::read_to_string(path)?;
    AnfDocument::from_json_str(&text)
}

pub fn load_form(path: &Path) -> Result<AbsNormalForm, DocumentError> {
    load_document(path)?.to_form()
}

pub fn save_document(path: &Path, doc: &AnfDocument) -> Result<(), DocumentError> {
    fs::write(path, doc.to_json_string())?;
    Ok(())
}
