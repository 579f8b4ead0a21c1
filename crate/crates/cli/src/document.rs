//! The JSON input format for algebras and actions.
//!
//! An algebra document lists its basis, the nonzero structure constants as
//! sparse entries and the twist as a dense matrix whose columns are the images
//! of the basis vectors:
//!
//! ```json
//! {
//!   "field": "Q",
//!   "kind": "hom-leibniz",
//!   "dim": 2,
//!   "basis": ["e1", "e2"],
//!   "bracket": [{"left": "e2", "right": "e2", "value": {"e1": "1"}}],
//!   "alpha": [["1", "1"], ["0", "1"]]
//! }
//! ```
//!
//! An action document has `actor_ref` and `target_ref` (a path relative to the
//! document, or an inline algebra document) and sparse `left` entries
//! `{left: actor, right: target}` for `ˣm` and `right` entries
//! `{left: target, right: actor}` for `mˣ`.

use std::collections::BTreeMap;
use std::fmt;
use std::path::{Path, PathBuf};

use homleib::actions::HomAction;
use homleib::homassoc::HomAssociativeAlgebra;
use homleib::{FieldSpec, HomLeibnizAlgebra, LinearMap, Scalar};
use serde::{Deserialize, Serialize};
use serde_json::Value;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DocumentError {
    /// Malformed JSON or a document of the wrong shape.
    Parse { source: String, line: usize, column: usize, message: String },
    /// Well-formed, but meaningless: unknown label, bad scalar, bad modulus.
    Semantic { source: String, field: String, message: String },
    Io { path: String, message: String },
}

impl fmt::Display for DocumentError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DocumentError::Parse { source, line, column, message } => {
                write!(f, "ParseError: {source}:{line}:{column}: {message}")
            }
            DocumentError::Semantic { source, field, message } => write!(f, "SemanticError: {source}: at {field}: {message}"),
            DocumentError::Io { path, message } => write!(f, "IoError: {path}: {message}"),
        }
    }
}

impl std::error::Error for DocumentError {}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Kind {
    #[serde(rename = "hom-leibniz")]
    HomLeibniz,
    #[serde(rename = "hom-associative")]
    HomAssociative,
    #[serde(rename = "leibniz")]
    Leibniz,
}

#[allow(clippy::large_enum_variant)]
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AlgebraDocument {
    /// Kinds `hom-leibniz` and `leibniz` (the latter with identity twist).
    Leibniz(HomLeibnizAlgebra),
    Associative(HomAssociativeAlgebra),
}

impl AlgebraDocument {
    pub fn field(&self) -> FieldSpec {
        match self {
            AlgebraDocument::Leibniz(l) => l.field(),
            AlgebraDocument::Associative(a) => a.field(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ActionDocument {
    pub action: HomAction,
}

#[allow(clippy::large_enum_variant)]
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Document {
    Algebra(AlgebraDocument),
    Action(ActionDocument),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
enum RawField {
    Named(String),
    Prime {
        #[serde(rename = "Fp")]
        p: u64,
    },
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawEntry {
    left: String,
    right: String,
    value: BTreeMap<String, String>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawAlgebra {
    field: RawField,
    kind: Kind,
    dim: usize,
    basis: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    bracket: Option<Vec<RawEntry>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    product: Option<Vec<RawEntry>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    alpha: Option<Vec<Vec<String>>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawAction {
    actor_ref: Value,
    target_ref: Value,
    #[serde(default)]
    left: Vec<RawEntry>,
    #[serde(default)]
    right: Vec<RawEntry>,
}

struct Ctx<'a> {
    source: &'a str,
}

impl Ctx<'_> {
    fn semantic(&self, field: impl Into<String>, message: impl Into<String>) -> DocumentError {
        DocumentError::Semantic { source: self.source.to_string(), field: field.into(), message: message.into() }
    }

    fn parse_err(&self, e: serde_json::Error) -> DocumentError {
        DocumentError::Parse { source: self.source.to_string(), line: e.line(), column: e.column(), message: e.to_string() }
    }
}

/// Reads and parses a document file; relative references resolve against its directory.
pub fn read_document(path: &Path) -> Result<Document, DocumentError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| DocumentError::Io { path: path.display().to_string(), message: e.to_string() })?;
    parse_document(&text, &path.display().to_string(), path.parent())
}

/// Parses document text. `source` names it in diagnostics and `base` anchors relative references.
pub fn parse_document(text: &str, source: &str, base: Option<&Path>) -> Result<Document, DocumentError> {
    let ctx = Ctx { source };
    let value: Value = serde_json::from_str(text).map_err(|e| ctx.parse_err(e))?;
    let is_action = value.as_object().is_some_and(|o| o.contains_key("actor_ref"));
    if is_action {
        let raw: RawAction = serde_json::from_str(text).map_err(|e| ctx.parse_err(e))?;
        action_from_raw(&ctx, raw, base).map(Document::Action)
    } else {
        let raw: RawAlgebra = serde_json::from_str(text).map_err(|e| ctx.parse_err(e))?;
        algebra_from_raw(&ctx, raw, "").map(Document::Algebra)
    }
}

fn field_from_raw(ctx: &Ctx, raw: &RawField, at: &str) -> Result<FieldSpec, DocumentError> {
    match raw {
        RawField::Named(n) if n == "Q" => Ok(FieldSpec::Rationals),
        RawField::Named(n) => Err(ctx.semantic(format!("{at}field"), format!("unknown field {n:?}; use \"Q\" or {{\"Fp\": p}}"))),
        RawField::Prime { p } => FieldSpec::prime(*p).map_err(|e| ctx.semantic(format!("{at}field.Fp"), e.to_string())),
    }
}

fn scalar(ctx: &Ctx, field: FieldSpec, text: &str, at: impl Fn() -> String) -> Result<Scalar, DocumentError> {
    field.parse(text).map_err(|e| ctx.semantic(at(), e.to_string()))
}

fn index_of(labels: &[String]) -> BTreeMap<&str, usize> {
    labels.iter().enumerate().map(|(i, l)| (l.as_str(), i)).collect()
}

/// Fills a `rows × cols × out` tensor from sparse entries.
fn fill_tensor(
    ctx: &Ctx,
    field: FieldSpec,
    entries: &[RawEntry],
    at: &str,
    rows: &[String],
    cols: &[String],
    out: &[String],
) -> Result<Vec<Scalar>, DocumentError> {
    let (ri, ci, oi) = (index_of(rows), index_of(cols), index_of(out));
    let d = out.len();
    let mut tensor = vec![field.zero(); rows.len() * cols.len() * d];
    let mut seen = std::collections::BTreeSet::new();
    for (n, e) in entries.iter().enumerate() {
        let here = format!("{at}[{n}]");
        let i = *ri.get(e.left.as_str()).ok_or_else(|| ctx.semantic(format!("{here}.left"), format!("unknown label {:?}", e.left)))?;
        let j = *ci.get(e.right.as_str()).ok_or_else(|| ctx.semantic(format!("{here}.right"), format!("unknown label {:?}", e.right)))?;
        if !seen.insert((i, j)) {
            return Err(ctx.semantic(here, format!("duplicate entry for ({}, {})", e.left, e.right)));
        }
        for (label, text) in &e.value {
            let k = *oi.get(label.as_str()).ok_or_else(|| ctx.semantic(format!("{here}.value"), format!("unknown label {label:?}")))?;
            tensor[(i * cols.len() + j) * d + k] = scalar(ctx, field, text, || format!("{here}.value.{label}"))?;
        }
    }
    Ok(tensor)
}

fn alpha_from_raw(ctx: &Ctx, field: FieldSpec, rows: &[Vec<String>], d: usize, at: &str) -> Result<LinearMap, DocumentError> {
    if rows.len() != d {
        return Err(ctx.semantic(format!("{at}alpha"), format!("expected {d} rows, found {}", rows.len())));
    }
    let mut entries = vec![vec![field.zero(); d]; d];
    for (i, row) in rows.iter().enumerate() {
        if row.len() != d {
            return Err(ctx.semantic(format!("{at}alpha[{i}]"), format!("expected {d} entries, found {}", row.len())));
        }
        for (j, text) in row.iter().enumerate() {
            entries[i][j] = scalar(ctx, field, text, || format!("{at}alpha[{i}][{j}]"))?;
        }
    }
    Ok(LinearMap::from_fn(field, d, d, |j| (0..d).map(|i| entries[i][j].clone()).collect()))
}

fn algebra_from_raw(ctx: &Ctx, raw: RawAlgebra, at: &str) -> Result<AlgebraDocument, DocumentError> {
    let field = field_from_raw(ctx, &raw.field, at)?;
    let d = raw.basis.len();
    if raw.dim != d {
        return Err(ctx.semantic(format!("{at}dim"), format!("dim is {} but the basis has {d} labels", raw.dim)));
    }
    let mut seen = std::collections::BTreeSet::new();
    if let Some(l) = raw.basis.iter().find(|l| !seen.insert(l.as_str())) {
        return Err(ctx.semantic(format!("{at}basis"), format!("duplicate label {l:?}")));
    }
    let (entries, key) = match raw.kind {
        Kind::HomAssociative => {
            if raw.bracket.is_some() {
                return Err(ctx.semantic(format!("{at}bracket"), "a hom-associative document lists a product"));
            }
            (raw.product.unwrap_or_default(), "product")
        }
        _ => {
            if raw.product.is_some() {
                return Err(ctx.semantic(format!("{at}product"), "a Leibniz-type document lists a bracket"));
            }
            (raw.bracket.unwrap_or_default(), "bracket")
        }
    };
    let tensor = fill_tensor(ctx, field, &entries, &format!("{at}{key}"), &raw.basis, &raw.basis, &raw.basis)?;
    let alpha = match (&raw.alpha, raw.kind) {
        (Some(rows), _) => alpha_from_raw(ctx, field, rows, d, at)?,
        (None, Kind::Leibniz) => LinearMap::identity(field, d),
        (None, _) => return Err(ctx.semantic(format!("{at}alpha"), "missing twist matrix")),
    };
    if raw.kind == Kind::Leibniz && alpha != LinearMap::identity(field, d) {
        return Err(ctx.semantic(format!("{at}alpha"), "a leibniz document must have the identity twist"));
    }
    let structural = |e: homleib::Error| ctx.semantic(format!("{at}{key}"), e.to_string());
    Ok(match raw.kind {
        Kind::HomAssociative => {
            AlgebraDocument::Associative(HomAssociativeAlgebra::from_parts(field, raw.basis, tensor, alpha).map_err(structural)?)
        }
        _ => AlgebraDocument::Leibniz(HomLeibnizAlgebra::from_parts(field, raw.basis, tensor, alpha).map_err(structural)?),
    })
}

fn resolve_ref(ctx: &Ctx, value: &Value, at: &str, base: Option<&Path>) -> Result<HomLeibnizAlgebra, DocumentError> {
    let doc = match value {
        Value::String(p) => {
            let path: PathBuf = base.map(|b| b.join(p)).unwrap_or_else(|| PathBuf::from(p));
            match read_document(&path)? {
                Document::Algebra(a) => a,
                Document::Action(_) => return Err(ctx.semantic(at, "reference points to an action document")),
            }
        }
        Value::Object(_) => {
            let raw: RawAlgebra =
                serde_json::from_value(value.clone()).map_err(|e| ctx.semantic(at, format!("inline document: {e}")))?;
            algebra_from_raw(ctx, raw, &format!("{at}."))?
        }
        _ => return Err(ctx.semantic(at, "expected a path or an inline algebra document")),
    };
    match doc {
        AlgebraDocument::Leibniz(l) => Ok(l),
        AlgebraDocument::Associative(_) => Err(ctx.semantic(at, "actions need Hom-Leibniz algebras")),
    }
}

fn action_from_raw(ctx: &Ctx, raw: RawAction, base: Option<&Path>) -> Result<ActionDocument, DocumentError> {
    let actor = resolve_ref(ctx, &raw.actor_ref, "actor_ref", base)?;
    let target = resolve_ref(ctx, &raw.target_ref, "target_ref", base)?;
    if actor.field() != target.field() {
        return Err(ctx.semantic("target_ref.field", "actor and target are over different fields"));
    }
    let f = actor.field();
    let left = fill_tensor(ctx, f, &raw.left, "left", actor.labels(), target.labels(), target.labels())?;
    let right = fill_tensor(ctx, f, &raw.right, "right", target.labels(), actor.labels(), target.labels())?;
    let action = HomAction::from_parts(actor, target, left, right).map_err(|e| ctx.semantic("left", e.to_string()))?;
    Ok(ActionDocument { action })
}

fn raw_field(f: FieldSpec) -> RawField {
    match f {
        FieldSpec::Rationals => RawField::Named("Q".into()),
        FieldSpec::Prime(p) => RawField::Prime { p },
    }
}

fn sparse(tensor: &[Scalar], rows: &[String], cols: &[String], out: &[String]) -> Vec<RawEntry> {
    let d = out.len();
    let mut entries = Vec::new();
    for (i, l) in rows.iter().enumerate() {
        for (j, r) in cols.iter().enumerate() {
            let cell = &tensor[(i * cols.len() + j) * d..][..d];
            let value: BTreeMap<String, String> =
                cell.iter().zip(out).filter(|(x, _)| !x.is_zero()).map(|(x, k)| (k.clone(), x.to_string())).collect();
            if !value.is_empty() {
                entries.push(RawEntry { left: l.clone(), right: r.clone(), value });
            }
        }
    }
    entries
}

fn dense(alpha: &LinearMap) -> Vec<Vec<String>> {
    let d = alpha.codomain_dim();
    let cols: Vec<Vec<Scalar>> = (0..alpha.domain_dim()).map(|j| alpha.column(j)).collect();
    (0..d).map(|i| cols.iter().map(|c| c[i].to_string()).collect()).collect()
}

fn raw_leibniz(l: &HomLeibnizAlgebra) -> RawAlgebra {
    RawAlgebra {
        field: raw_field(l.field()),
        kind: Kind::HomLeibniz,
        dim: l.dim(),
        basis: l.labels().to_vec(),
        bracket: Some(sparse(l.structure(), l.labels(), l.labels(), l.labels())),
        product: None,
        alpha: Some(dense(l.alpha())),
    }
}

fn pretty<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("documents serialize");
    s.push('\n');
    s
}

/// Serializes a Hom-Leibniz algebra as a `hom-leibniz` document.
pub fn leibniz_to_document(l: &HomLeibnizAlgebra) -> String {
    pretty(&raw_leibniz(l))
}

pub fn associative_to_document(a: &HomAssociativeAlgebra) -> String {
    pretty(&RawAlgebra {
        field: raw_field(a.field()),
        kind: Kind::HomAssociative,
        dim: a.dim(),
        basis: a.labels().to_vec(),
        bracket: None,
        product: Some(sparse(a.product_tensor(), a.labels(), a.labels(), a.labels())),
        alpha: Some(dense(a.alpha())),
    })
}

/// Serializes an action with both algebras inlined.
pub fn action_to_document(a: &HomAction) -> String {
    let (x, m) = (a.actor(), a.target());
    pretty(&RawAction {
        actor_ref: serde_json::to_value(raw_leibniz(x)).expect("documents serialize"),
        target_ref: serde_json::to_value(raw_leibniz(m)).expect("documents serialize"),
        left: sparse(a.left_tensor(), x.labels(), m.labels(), m.labels()),
        right: sparse(a.right_tensor(), m.labels(), x.labels(), m.labels()),
    })
}

pub fn algebra_to_document(doc: &AlgebraDocument) -> String {
    match doc {
        AlgebraDocument::Leibniz(l) => leibniz_to_document(l),
        AlgebraDocument::Associative(a) => associative_to_document(a),
    }
}

/// Parses a dense `d × d` matrix of scalar strings (columns are images of the basis).
pub fn parse_matrix(text: &str, field: FieldSpec, d: usize, source: &str) -> Result<LinearMap, DocumentError> {
    let ctx = Ctx { source };
    let rows: Vec<Vec<String>> = serde_json::from_str(text).map_err(|e| ctx.parse_err(e))?;
    alpha_from_raw(&ctx, field, &rows, d, "")
}

fn set_fields(value: &mut Value, p: u64) {
    match value {
        Value::Object(map) => {
            for (k, v) in map.iter_mut() {
                if k == "field" {
                    *v = serde_json::json!({ "Fp": p });
                } else {
                    set_fields(v, p);
                }
            }
        }
        Value::Array(items) => items.iter_mut().for_each(|v| set_fields(v, p)),
        _ => {}
    }
}

/// The same document over GF(p). Fails when a denominator vanishes mod `p`
/// or the input is already over a prime field.
pub fn reduce_mod(doc: &Document, p: u64) -> Result<Document, String> {
    let text = match doc {
        Document::Algebra(a) if a.field() == FieldSpec::Rationals => algebra_to_document(a),
        Document::Action(a) if a.action.field() == FieldSpec::Rationals => action_to_document(&a.action),
        _ => return Err("input is already over a prime field".into()),
    };
    let mut value: Value = serde_json::from_str(&text).map_err(|e| e.to_string())?;
    set_fields(&mut value, p);
    parse_document(&value.to_string(), "reduced input", None).map_err(|e| e.to_string())
}
