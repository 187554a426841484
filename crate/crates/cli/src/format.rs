//! Definition-file format.
//!
//! Every input to the CLI is a plain-text TOML file with a mandatory
//! `format_version` key (currently `1`) and a `kind` key naming the payload:
//!
//! * `algebra` — a structure-constant algebra with its twist under an
//!   `[algebra]` table;
//! * `action` — the two action tensors of one algebra on another, as sparse
//!   `[[left]]` / `[[right]]` coefficient entries;
//! * `split_extension` — three embedded algebra tables (`kernel`, `middle`,
//!   `quotient`) plus the three structure maps `i`, `pi`, `s`;
//! * `cover` — `source` and `base` algebra tables plus the covering map `f`;
//! * `map` — a bare matrix, used for automorphisms and derivations.
//!
//! Scalars are written as exact integer-fraction strings (`"-3/2"`); the
//! serializer always emits them in lowest terms. Matrices are arrays of rows
//! acting on column vectors: `m[r][c]` has one row per codomain basis vector
//! and one column per domain basis vector. Bracket and action entries omitted
//! from a file are zero.
//!
//! Parsing is strict (unknown keys are rejected, indices are range-checked)
//! and `parse → serialize → parse` is the identity on every shipped corpus
//! file. See `docs/file-format.md` for the full schema.

use anyhow::{anyhow, bail, Context, Result};
use homleib::{Field, HomAlgebra, HomMorphism, Matrix, Scalar, SplitExtension};
use serde::Deserialize;

pub const FORMAT_VERSION: u32 = 1;

// ---------------------------------------------------------------------------
// File model
// ---------------------------------------------------------------------------

/// An algebra description, used both as the payload of `kind = "algebra"`
/// files and embedded in extension and cover files.
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraTable {
    pub name: String,
    /// `"Q"` for the rationals or `"GF(p)"` for a prime field.
    pub field: String,
    pub dim: usize,
    /// Basis labels; defaults to `b0..b{dim-1}` when omitted.
    #[serde(default)]
    pub labels: Option<Vec<String>>,
    /// Dense `dim × dim` twist matrix.
    pub alpha: Vec<Vec<String>>,
    /// Sparse bracket table; entries not listed are zero.
    #[serde(default)]
    pub bracket: Vec<BracketEntry>,
}

/// One bracket value `[b_left, b_right] = Σ coeffs[k] · b_k`.
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BracketEntry {
    pub left: usize,
    pub right: usize,
    pub coeffs: Vec<String>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub format_version: u32,
    pub kind: String,
    pub algebra: AlgebraTable,
}

/// One action value: `left` entries give `b_actor · b_target`, `right`
/// entries give `b_target · b_actor`; both land in the target.
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ActionEntry {
    pub actor: usize,
    pub target: usize,
    pub coeffs: Vec<String>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ActionFile {
    pub format_version: u32,
    pub kind: String,
    pub name: String,
    pub field: String,
    pub actor_dim: usize,
    pub target_dim: usize,
    #[serde(default)]
    pub left: Vec<ActionEntry>,
    #[serde(default)]
    pub right: Vec<ActionEntry>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SplitExtensionFile {
    pub format_version: u32,
    pub kind: String,
    pub name: String,
    /// kernel → middle.
    pub i: Vec<Vec<String>>,
    /// middle → quotient.
    pub pi: Vec<Vec<String>>,
    /// quotient → middle splitting, `pi ∘ s = id`.
    pub s: Vec<Vec<String>>,
    pub kernel: AlgebraTable,
    pub middle: AlgebraTable,
    pub quotient: AlgebraTable,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CoverFile {
    pub format_version: u32,
    pub kind: String,
    pub name: String,
    /// source → base.
    pub f: Vec<Vec<String>>,
    pub source: AlgebraTable,
    pub base: AlgebraTable,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MapFile {
    pub format_version: u32,
    pub kind: String,
    pub name: String,
    pub matrix: Vec<Vec<String>>,
}

/// Any parsed definition file.
#[derive(Debug, Clone)]
pub enum DefFile {
    Algebra(AlgebraFile),
    Action(ActionFile),
    SplitExtension(SplitExtensionFile),
    Cover(CoverFile),
    Map(MapFile),
}

impl DefFile {
    pub fn kind(&self) -> &'static str {
        match self {
            DefFile::Algebra(_) => "algebra",
            DefFile::Action(_) => "action",
            DefFile::SplitExtension(_) => "split_extension",
            DefFile::Cover(_) => "cover",
            DefFile::Map(_) => "map",
        }
    }
}

// ---------------------------------------------------------------------------
// Parsing
// ---------------------------------------------------------------------------

#[derive(Deserialize)]
struct Header {
    format_version: u32,
    kind: String,
}

/// Parses the text of a definition file. Errors carry the TOML parser's
/// line/column rendering for syntax problems and a named reason otherwise.
pub fn parse_str(text: &str) -> Result<DefFile> {
    let header: Header = toml::from_str(text).map_err(|e| anyhow!("{e}"))?;
    if header.format_version != FORMAT_VERSION {
        bail!(
            "unsupported format_version {} (this build reads version {FORMAT_VERSION})",
            header.format_version
        );
    }
    let parsed = match header.kind.as_str() {
        "algebra" => DefFile::Algebra(toml::from_str(text).map_err(|e| anyhow!("{e}"))?),
        "action" => DefFile::Action(toml::from_str(text).map_err(|e| anyhow!("{e}"))?),
        "split_extension" => {
            DefFile::SplitExtension(toml::from_str(text).map_err(|e| anyhow!("{e}"))?)
        }
        "cover" => DefFile::Cover(toml::from_str(text).map_err(|e| anyhow!("{e}"))?),
        "map" => DefFile::Map(toml::from_str(text).map_err(|e| anyhow!("{e}"))?),
        other => bail!(
            "unknown kind {other:?} (expected algebra, action, split_extension, cover, or map)"
        ),
    };
    Ok(parsed)
}

/// Reads and parses one definition file.
pub fn parse_file(path: &std::path::Path) -> Result<DefFile> {
    let text =
        std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    parse_str(&text).with_context(|| format!("in {}", path.display()))
}

pub fn parse_field_tag(tag: &str) -> Result<Field> {
    if tag == "Q" {
        return Ok(Field::Rationals);
    }
    if let Some(inner) = tag.strip_prefix("GF(").and_then(|r| r.strip_suffix(')')) {
        let p: u64 = inner
            .parse()
            .map_err(|_| anyhow!("bad prime {inner:?} in field tag {tag:?}"))?;
        return Field::prime(p).map_err(|e| anyhow!("{e}"));
    }
    bail!("unknown field tag {tag:?} (expected \"Q\" or \"GF(p)\")")
}

fn parse_scalar(field: Field, s: &str, what: &str) -> Result<Scalar> {
    field
        .parse(s)
        .map_err(|e| anyhow!("bad scalar {s:?} in {what}: {e}"))
}

/// Parses a dense matrix given as rows of fraction strings.
pub fn parse_matrix(
    field: Field,
    rows: &[Vec<String>],
    expect_rows: usize,
    expect_cols: usize,
    what: &str,
) -> Result<Matrix> {
    if rows.len() != expect_rows || rows.iter().any(|r| r.len() != expect_cols) {
        bail!(
            "{what} must be a {expect_rows}x{expect_cols} matrix, got {} row(s) of length(s) {:?}",
            rows.len(),
            rows.iter().map(|r| r.len()).collect::<Vec<_>>()
        );
    }
    let mut out = Vec::with_capacity(expect_rows);
    for row in rows {
        let mut r = Vec::with_capacity(expect_cols);
        for entry in row {
            r.push(parse_scalar(field, entry, what)?);
        }
        out.push(r);
    }
    Matrix::from_rows(field, out).map_err(|e| anyhow!("{what}: {e}"))
}

impl AlgebraTable {
    /// Validates the table and builds the algebra it describes.
    pub fn to_algebra(&self) -> Result<HomAlgebra> {
        let field = parse_field_tag(&self.field)?;
        let n = self.dim;
        if let Some(labels) = &self.labels {
            if labels.len() != n {
                bail!(
                    "algebra {:?} declares dim {n} but lists {} label(s)",
                    self.name,
                    labels.len()
                );
            }
        }
        let zero_row = vec![field.zero(); n];
        let mut c = vec![vec![zero_row; n]; n];
        let mut seen = std::collections::BTreeSet::new();
        for entry in &self.bracket {
            let what = format!(
                "bracket entry ({}, {}) of algebra {:?}",
                entry.left, entry.right, self.name
            );
            if entry.left >= n || entry.right >= n {
                bail!("{what}: index out of range for dim {n}");
            }
            if !seen.insert((entry.left, entry.right)) {
                bail!("{what}: duplicate entry");
            }
            if entry.coeffs.len() != n {
                bail!(
                    "{what}: expected {n} coefficients, got {}",
                    entry.coeffs.len()
                );
            }
            let mut coeffs = Vec::with_capacity(n);
            for s in &entry.coeffs {
                coeffs.push(parse_scalar(field, s, &what)?);
            }
            c[entry.left][entry.right] = coeffs;
        }
        let alpha = parse_matrix(
            field,
            &self.alpha,
            n,
            n,
            &format!("alpha of algebra {:?}", self.name),
        )?;
        HomAlgebra::new(field, c, alpha).map_err(|e| anyhow!("algebra {:?}: {e}", self.name))
    }

    /// Effective basis labels (declared or generated).
    pub fn labels(&self) -> Vec<String> {
        match &self.labels {
            Some(l) => l.clone(),
            None => (0..self.dim).map(|i| format!("b{i}")).collect(),
        }
    }

    /// Captures an algebra back into table form with the given name; bracket
    /// entries are listed in lexicographic index order, scalars in lowest
    /// terms.
    pub fn from_algebra(name: &str, labels: Option<Vec<String>>, alg: &HomAlgebra) -> AlgebraTable {
        let n = alg.dim();
        let mut bracket = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let coeffs = alg.basis_bracket(i, j);
                if coeffs.iter().all(|c| c.is_zero()) {
                    continue;
                }
                bracket.push(BracketEntry {
                    left: i,
                    right: j,
                    coeffs: coeffs.iter().map(|c| c.to_string()).collect(),
                });
            }
        }
        AlgebraTable {
            name: name.to_string(),
            field: alg.field().to_string(),
            dim: n,
            labels,
            alpha: matrix_strings(alg.alpha()),
            bracket,
        }
    }
}

impl ActionFile {
    /// Builds the λ/ρ tensors; the caller supplies the actor/target algebras.
    pub fn to_tensors(&self) -> Result<(Field, Vec<Vec<Vec<Scalar>>>, Vec<Vec<Vec<Scalar>>>)> {
        let field = parse_field_tag(&self.field)?;
        let (l, m) = (self.actor_dim, self.target_dim);
        let zero = vec![field.zero(); m];
        let mut lambda = vec![vec![zero.clone(); m]; l];
        let mut rho = vec![vec![zero; l]; m];
        let mut seen_l = std::collections::BTreeSet::new();
        let mut seen_r = std::collections::BTreeSet::new();
        for entry in &self.left {
            let what = format!(
                "left entry ({}, {}) of action {:?}",
                entry.actor, entry.target, self.name
            );
            if entry.actor >= l || entry.target >= m {
                bail!("{what}: index out of range for dims {l}/{m}");
            }
            if !seen_l.insert((entry.actor, entry.target)) {
                bail!("{what}: duplicate entry");
            }
            if entry.coeffs.len() != m {
                bail!(
                    "{what}: expected {m} coefficients, got {}",
                    entry.coeffs.len()
                );
            }
            for (k, s) in entry.coeffs.iter().enumerate() {
                lambda[entry.actor][entry.target][k] = parse_scalar(field, s, &what)?;
            }
        }
        for entry in &self.right {
            let what = format!(
                "right entry ({}, {}) of action {:?}",
                entry.target, entry.actor, self.name
            );
            if entry.actor >= l || entry.target >= m {
                bail!("{what}: index out of range for dims {l}/{m}");
            }
            if !seen_r.insert((entry.target, entry.actor)) {
                bail!("{what}: duplicate entry");
            }
            if entry.coeffs.len() != m {
                bail!(
                    "{what}: expected {m} coefficients, got {}",
                    entry.coeffs.len()
                );
            }
            for (k, s) in entry.coeffs.iter().enumerate() {
                rho[entry.target][entry.actor][k] = parse_scalar(field, s, &what)?;
            }
        }
        Ok((field, lambda, rho))
    }
}

impl CoverFile {
    /// Builds the covering morphism `f: source → base`.
    pub fn to_morphism(&self) -> Result<HomMorphism> {
        let source = self.source.to_algebra()?;
        let base = self.base.to_algebra()?;
        let f = parse_matrix(
            source.field(),
            &self.f,
            base.dim(),
            source.dim(),
            &format!("map f of {:?}", self.name),
        )?;
        HomMorphism::new(source, base, f).map_err(|e| anyhow!("cover {:?}: {e}", self.name))
    }
}

impl MapFile {
    /// Builds the matrix over the given field (map files carry no field tag;
    /// the object they apply to fixes it).
    pub fn to_matrix(&self, field: Field, rows: usize, cols: usize) -> Result<Matrix> {
        parse_matrix(
            field,
            &self.matrix,
            rows,
            cols,
            &format!("map {:?}", self.name),
        )
    }
}

// ---------------------------------------------------------------------------
// Serialization
// ---------------------------------------------------------------------------

/// Renders a matrix as rows of lowest-terms fraction strings.
pub fn matrix_strings(m: &Matrix) -> Vec<Vec<String>> {
    (0..m.rows())
        .map(|r| (0..m.cols()).map(|c| m.get(r, c).to_string()).collect())
        .collect()
}

fn toml_string(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for ch in s.chars() {
        match ch {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            _ => out.push(ch),
        }
    }
    out.push('"');
    out
}

fn string_array(items: &[String]) -> String {
    let quoted: Vec<String> = items.iter().map(|s| toml_string(s)).collect();
    format!("[{}]", quoted.join(", "))
}

fn push_matrix(out: &mut String, key: &str, rows: &[Vec<String>]) {
    out.push_str(key);
    out.push_str(" = [\n");
    for row in rows {
        out.push_str("  ");
        out.push_str(&string_array(row));
        out.push_str(",\n");
    }
    out.push_str("]\n");
}

fn push_algebra_table(out: &mut String, path: &str, table: &AlgebraTable) {
    out.push_str(&format!("[{path}]\n"));
    out.push_str(&format!("name = {}\n", toml_string(&table.name)));
    out.push_str(&format!("field = {}\n", toml_string(&table.field)));
    out.push_str(&format!("dim = {}\n", table.dim));
    out.push_str(&format!("labels = {}\n", string_array(&table.labels())));
    push_matrix(out, "alpha", &table.alpha);
    for entry in &table.bracket {
        out.push('\n');
        out.push_str(&format!("[[{path}.bracket]]\n"));
        out.push_str(&format!("left = {}\n", entry.left));
        out.push_str(&format!("right = {}\n", entry.right));
        out.push_str(&format!("coeffs = {}\n", string_array(&entry.coeffs)));
    }
}

fn header(out: &mut String, version: u32, kind: &str) {
    out.push_str(&format!("format_version = {version}\n"));
    out.push_str(&format!("kind = {}\n", toml_string(kind)));
}

/// Deterministic serializer: field order, entry order, indentation, and
/// scalar rendering are all fixed, so equal inputs produce byte-equal files.
pub fn serialize(file: &DefFile) -> String {
    let mut out = String::new();
    match file {
        DefFile::Algebra(f) => {
            header(&mut out, f.format_version, &f.kind);
            out.push('\n');
            push_algebra_table(&mut out, "algebra", &f.algebra);
        }
        DefFile::Action(f) => {
            header(&mut out, f.format_version, &f.kind);
            out.push_str(&format!("name = {}\n", toml_string(&f.name)));
            out.push_str(&format!("field = {}\n", toml_string(&f.field)));
            out.push_str(&format!("actor_dim = {}\n", f.actor_dim));
            out.push_str(&format!("target_dim = {}\n", f.target_dim));
            for entry in &f.left {
                out.push_str("\n[[left]]\n");
                out.push_str(&format!("actor = {}\n", entry.actor));
                out.push_str(&format!("target = {}\n", entry.target));
                out.push_str(&format!("coeffs = {}\n", string_array(&entry.coeffs)));
            }
            for entry in &f.right {
                out.push_str("\n[[right]]\n");
                out.push_str(&format!("actor = {}\n", entry.actor));
                out.push_str(&format!("target = {}\n", entry.target));
                out.push_str(&format!("coeffs = {}\n", string_array(&entry.coeffs)));
            }
        }
        DefFile::SplitExtension(f) => {
            header(&mut out, f.format_version, &f.kind);
            out.push_str(&format!("name = {}\n", toml_string(&f.name)));
            push_matrix(&mut out, "i", &f.i);
            push_matrix(&mut out, "pi", &f.pi);
            push_matrix(&mut out, "s", &f.s);
            out.push('\n');
            push_algebra_table(&mut out, "kernel", &f.kernel);
            out.push('\n');
            push_algebra_table(&mut out, "middle", &f.middle);
            out.push('\n');
            push_algebra_table(&mut out, "quotient", &f.quotient);
        }
        DefFile::Cover(f) => {
            header(&mut out, f.format_version, &f.kind);
            out.push_str(&format!("name = {}\n", toml_string(&f.name)));
            push_matrix(&mut out, "f", &f.f);
            out.push('\n');
            push_algebra_table(&mut out, "source", &f.source);
            out.push('\n');
            push_algebra_table(&mut out, "base", &f.base);
        }
        DefFile::Map(f) => {
            header(&mut out, f.format_version, &f.kind);
            out.push_str(&format!("name = {}\n", toml_string(&f.name)));
            push_matrix(&mut out, "matrix", &f.matrix);
        }
    }
    out
}

// ---------------------------------------------------------------------------
// Builders used by corpus emission
// ---------------------------------------------------------------------------

pub fn algebra_file(name: &str, labels: Option<Vec<String>>, alg: &HomAlgebra) -> DefFile {
    DefFile::Algebra(AlgebraFile {
        format_version: FORMAT_VERSION,
        kind: "algebra".into(),
        algebra: AlgebraTable::from_algebra(name, labels, alg),
    })
}

pub fn action_file(name: &str, action: &homleib::HomAction) -> DefFile {
    let (l, m) = (action.actor().dim(), action.target().dim());
    let mut left = Vec::new();
    let mut right = Vec::new();
    for i in 0..l {
        for j in 0..m {
            let coeffs = &action.lambda()[i][j];
            if coeffs.iter().any(|c| !c.is_zero()) {
                left.push(ActionEntry {
                    actor: i,
                    target: j,
                    coeffs: coeffs.iter().map(|c| c.to_string()).collect(),
                });
            }
        }
    }
    for j in 0..m {
        for i in 0..l {
            let coeffs = &action.rho()[j][i];
            if coeffs.iter().any(|c| !c.is_zero()) {
                right.push(ActionEntry {
                    actor: i,
                    target: j,
                    coeffs: coeffs.iter().map(|c| c.to_string()).collect(),
                });
            }
        }
    }
    DefFile::Action(ActionFile {
        format_version: FORMAT_VERSION,
        kind: "action".into(),
        name: name.into(),
        field: action.actor().field().to_string(),
        actor_dim: l,
        target_dim: m,
        left,
        right,
    })
}

pub fn split_extension_file(name: &str, se: &SplitExtension) -> DefFile {
    DefFile::SplitExtension(SplitExtensionFile {
        format_version: FORMAT_VERSION,
        kind: "split_extension".into(),
        name: name.into(),
        i: matrix_strings(&se.i.matrix),
        pi: matrix_strings(&se.pi.matrix),
        s: matrix_strings(&se.s.matrix),
        kernel: AlgebraTable::from_algebra(&format!("{name}-kernel"), None, se.kernel_alg()),
        middle: AlgebraTable::from_algebra(&format!("{name}-middle"), None, se.middle()),
        quotient: AlgebraTable::from_algebra(&format!("{name}-quotient"), None, se.quotient()),
    })
}

pub fn cover_file(name: &str, f: &HomMorphism) -> DefFile {
    DefFile::Cover(CoverFile {
        format_version: FORMAT_VERSION,
        kind: "cover".into(),
        name: name.into(),
        f: matrix_strings(&f.matrix),
        source: AlgebraTable::from_algebra(&format!("{name}-source"), None, &f.src),
        base: AlgebraTable::from_algebra(&format!("{name}-base"), None, &f.dst),
    })
}

pub fn map_file(name: &str, m: &Matrix) -> DefFile {
    DefFile::Map(MapFile {
        format_version: FORMAT_VERSION,
        kind: "map".into(),
        name: name.into(),
        matrix: matrix_strings(m),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use homleib::corpus;

    #[test]
    fn algebra_round_trip_is_identity() {
        let file = algebra_file(
            "sl2",
            Some(vec!["e".into(), "f".into(), "h".into()]),
            &corpus::sl2(),
        );
        let text = serialize(&file);
        let reparsed = parse_str(&text).unwrap();
        assert_eq!(serialize(&reparsed), text);
        match reparsed {
            DefFile::Algebra(a) => {
                let alg = a.algebra.to_algebra().unwrap();
                assert_eq!(
                    alg.structure_constants(),
                    corpus::sl2().structure_constants()
                );
                assert_eq!(alg.alpha(), corpus::sl2().alpha());
            }
            other => panic!("expected algebra, got {}", other.kind()),
        }
    }

    #[test]
    fn split_extension_round_trip_rebuilds_the_same_maps() {
        let sd = corpus::sd1();
        let se = sd.split_extension().unwrap();
        let file = split_extension_file("sd1", &se);
        let text = serialize(&file);
        let reparsed = parse_str(&text).unwrap();
        assert_eq!(serialize(&reparsed), text);
        match reparsed {
            DefFile::SplitExtension(f) => {
                assert_eq!(f.i, matrix_strings(&se.i.matrix));
                assert_eq!(f.pi, matrix_strings(&se.pi.matrix));
                assert_eq!(f.s, matrix_strings(&se.s.matrix));
                assert_eq!(f.kernel.to_algebra().unwrap(), *se.kernel_alg());
            }
            other => panic!("expected split_extension, got {}", other.kind()),
        }
    }

    #[test]
    fn scalars_serialize_in_lowest_terms() {
        let q = Field::Rationals;
        let m = Matrix::from_rows(
            q,
            vec![vec![q.parse("4/6").unwrap(), q.parse("-10/4").unwrap()]],
        )
        .unwrap();
        let file = map_file("frac", &m);
        let text = serialize(&file);
        assert!(text.contains("\"2/3\""));
        assert!(text.contains("\"-5/2\""));
    }

    #[test]
    fn bad_inputs_are_rejected_with_named_reasons() {
        // Syntax error: the TOML parser reports line/column.
        let err = parse_str("format_version = 1\nkind = \"algebra\"\n[algebra\n").unwrap_err();
        assert!(err.to_string().contains("line 3"), "{err}");

        // Wrong version.
        let err = parse_str("format_version = 99\nkind = \"map\"\n").unwrap_err();
        assert!(err.to_string().contains("unsupported format_version"));

        // Unknown kind.
        let err = parse_str("format_version = 1\nkind = \"polytope\"\n").unwrap_err();
        assert!(err.to_string().contains("unknown kind"));

        // Out-of-range bracket index.
        let text = r#"
format_version = 1
kind = "algebra"
[algebra]
name = "bad"
field = "Q"
dim = 2
alpha = [["1", "0"], ["0", "1"]]
[[algebra.bracket]]
left = 5
right = 0
coeffs = ["0", "0"]
"#;
        let parsed = parse_str(text).unwrap();
        match parsed {
            DefFile::Algebra(a) => {
                let err = a.algebra.to_algebra().unwrap_err();
                assert!(err.to_string().contains("out of range"), "{err}");
            }
            _ => unreachable!(),
        }

        // Unknown key.
        let err =
            parse_str("format_version = 1\nkind = \"map\"\nname = \"x\"\nmatrix = []\nbogus = 3\n");
        assert!(err.is_err());
    }

    #[test]
    fn field_tags_parse_and_reject() {
        assert_eq!(parse_field_tag("Q").unwrap(), Field::Rationals);
        assert_eq!(parse_field_tag("GF(7)").unwrap(), Field::prime(7).unwrap());
        assert!(parse_field_tag("GF(6)").is_err());
        assert!(parse_field_tag("R").is_err());
    }
}
