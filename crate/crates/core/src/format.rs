//! Line-oriented text formats for groups, triples, hypergroups, and
//! morphism files, plus canonical emitters.
//!
//! All three document formats share the same lexical rules: UTF-8, one
//! record per line, `#` starts a comment, blank lines are ignored. Wherever
//! a file refers to an element, either its name or its numeric index is
//! accepted, names winning ties; for that reason emitters always write
//! names, which are unique and therefore round-trip exactly even when they
//! look like (different) indices. Parsing validates everything — a
//! syntactically well-formed file with unlawful tables is a validation
//! error carrying the full report, not a document.

use std::fmt::Write as _;

use thiserror::Error;

use crate::group::{FiniteGroup, GroupError, Subgroup, SubgroupError};
use crate::hypergroup::{Hypergroup, HypergroupError, RawHypergroup};
use crate::triple::{GroupTriple, TripleError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("line {line}: {detail}")]
    Syntax { line: usize, detail: String },
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Subgroup(#[from] SubgroupError),
    #[error(transparent)]
    Triple(#[from] TripleError),
    #[error(transparent)]
    Hypergroup(#[from] HypergroupError),
}

/// A parsed and fully validated document of any of the three kinds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Document {
    Group(FiniteGroup),
    Triple(GroupTriple),
    Hypergroup(Hypergroup),
}

impl Document {
    pub fn kind(&self) -> &'static str {
        match self {
            Document::Group(_) => "group",
            Document::Triple(_) => "triple",
            Document::Hypergroup(_) => "hypergroup",
        }
    }

    pub fn name(&self) -> &str {
        match self {
            Document::Group(g) => g.name(),
            Document::Triple(t) => t.name(),
            Document::Hypergroup(k) => k.name(),
        }
    }
}

/// Tokenized input: `(line number, tokens)` for every non-empty line, with
/// comments stripped.
struct Cursor {
    lines: Vec<(usize, Vec<String>)>,
    pos: usize,
}

impl Cursor {
    fn new(text: &str) -> Cursor {
        let lines = text
            .lines()
            .enumerate()
            .filter_map(|(i, raw)| {
                let uncommented = raw.split('#').next().unwrap_or("");
                let tokens: Vec<String> =
                    uncommented.split_whitespace().map(str::to_string).collect();
                if tokens.is_empty() {
                    None
                } else {
                    Some((i + 1, tokens))
                }
            })
            .collect();
        Cursor { lines, pos: 0 }
    }

    fn syntax(&self, line: usize, detail: impl Into<String>) -> FormatError {
        FormatError::Syntax {
            line,
            detail: detail.into(),
        }
    }

    /// Line number to blame when input ends too early.
    fn eof_line(&self) -> usize {
        self.lines.last().map(|(n, _)| n + 1).unwrap_or(1)
    }

    fn peek_keyword(&self) -> Option<&str> {
        self.lines.get(self.pos).map(|(_, t)| t[0].as_str())
    }

    fn next_line(&mut self, expecting: &str) -> Result<(usize, &[String]), FormatError> {
        match self.lines.get(self.pos) {
            Some((n, tokens)) => {
                self.pos += 1;
                Ok((*n, tokens))
            }
            None => Err(self.syntax(
                self.eof_line(),
                format!("unexpected end of file, expecting {expecting}"),
            )),
        }
    }

    /// Consumes a line whose first token must be `keyword`; returns the line
    /// number and the remaining tokens.
    fn expect(&mut self, keyword: &str) -> Result<(usize, Vec<String>), FormatError> {
        let (n, tokens) = self.next_line(&format!("`{keyword}`"))?;
        if tokens[0] != keyword {
            let found = tokens[0].clone();
            return Err(self.syntax(n, format!("expected `{keyword}`, found `{found}`")));
        }
        Ok((n, tokens[1..].to_vec()))
    }

    fn finished(&self) -> Result<(), FormatError> {
        match self.lines.get(self.pos) {
            None => Ok(()),
            Some((n, tokens)) => Err(self.syntax(
                *n,
                format!("unexpected content after document end: `{}`", tokens[0]),
            )),
        }
    }
}

fn parse_count(cursor: &Cursor, line: usize, token: &str, what: &str) -> Result<usize, FormatError> {
    token
        .parse::<usize>()
        .map_err(|_| cursor.syntax(line, format!("{what} must be a number, found `{token}`")))
}

/// `tokens` must hold exactly `n` entries; used for fixed-width lines.
fn exactly<'a>(
    cursor: &Cursor,
    line: usize,
    tokens: &'a [String],
    n: usize,
    what: &str,
) -> Result<&'a [String], FormatError> {
    if tokens.len() != n {
        return Err(cursor.syntax(
            line,
            format!("expected {n} {what}, found {}", tokens.len()),
        ));
    }
    Ok(tokens)
}

fn parse_group_block(cursor: &mut Cursor) -> Result<FiniteGroup, FormatError> {
    let (line, rest) = cursor.expect("group")?;
    let name = exactly(cursor, line, &rest, 1, "group name")?[0].clone();
    let (line, rest) = cursor.expect("order")?;
    let n = parse_count(cursor, line, exactly(cursor, line, &rest, 1, "order")?[0].as_str(), "order")?;
    let (line, rest) = cursor.expect("elements")?;
    let elements = exactly(cursor, line, &rest, n, "element names")?.to_vec();
    cursor.expect("table")?;
    let mut rows = Vec::with_capacity(n);
    for _ in 0..n {
        let (line, tokens) = cursor.next_line("a table row")?;
        let tokens = tokens.to_vec();
        let mut row = Vec::with_capacity(n);
        for token in exactly(cursor, line, &tokens, n, "table entries")? {
            // Table cells may use element names too.
            match elements.iter().position(|e| e == token) {
                Some(i) => row.push(i),
                None => row.push(parse_count(cursor, line, token, "table entry")?),
            }
        }
        rows.push(row);
    }
    cursor.expect("end")?;
    Ok(FiniteGroup::from_table(name, elements, rows)?)
}

/// Resolves a list of element tokens against a group, names first.
fn resolve_all(
    cursor: &Cursor,
    line: usize,
    group: &FiniteGroup,
    tokens: &[String],
    what: &str,
) -> Result<Vec<usize>, FormatError> {
    tokens
        .iter()
        .map(|token| {
            group.resolve(token).ok_or_else(|| {
                cursor.syntax(line, format!("unknown {what} `{token}` in group {}", group.name()))
            })
        })
        .collect()
}

fn parse_triple_block(cursor: &mut Cursor) -> Result<GroupTriple, FormatError> {
    let (line, rest) = cursor.expect("triple")?;
    let name = exactly(cursor, line, &rest, 1, "triple name")?[0].clone();
    let group = parse_group_block(cursor)?;
    let (line, rest) = cursor.expect("subgroup")?;
    let members = resolve_all(cursor, line, &group, &rest, "subgroup element")?;
    let (line, rest) = cursor.expect("transversal")?;
    let transversal = resolve_all(cursor, line, &group, &rest, "transversal element")?;
    cursor.expect("end")?;
    let subgroup = Subgroup::new(&group, members)?;
    Ok(GroupTriple::new(name, subgroup, transversal)?)
}

/// Reads `m` rows of `width` entries, resolving each token through
/// `resolve` (names first, indices otherwise).
fn parse_table_block(
    cursor: &mut Cursor,
    keyword: &str,
    m: usize,
    width: usize,
    resolve: impl Fn(&str) -> Option<usize>,
    what: &str,
) -> Result<Vec<Vec<usize>>, FormatError> {
    cursor.expect(keyword)?;
    let mut rows = Vec::with_capacity(m);
    for _ in 0..m {
        let (line, tokens) = cursor.next_line(&format!("a {keyword} row"))?;
        let tokens = tokens.to_vec();
        let mut row = Vec::with_capacity(width);
        for token in exactly(cursor, line, &tokens, width, &format!("{keyword} entries"))? {
            match resolve(token) {
                Some(i) => row.push(i),
                None => {
                    return Err(cursor.syntax(line, format!("unknown {what} `{token}`")));
                }
            }
        }
        rows.push(row);
    }
    Ok(rows)
}

fn parse_hypergroup_block(cursor: &mut Cursor) -> Result<Hypergroup, FormatError> {
    let (line, rest) = cursor.expect("hypergroup")?;
    let name = exactly(cursor, line, &rest, 1, "hypergroup name")?[0].clone();
    let (line, rest) = cursor.expect("base")?;
    if rest.is_empty() {
        return Err(cursor.syntax(line, "base line needs a size and that many names".to_string()));
    }
    let m = parse_count(cursor, line, &rest[0], "base size")?;
    let base_names = exactly(cursor, line, &rest[1..], m, "base names")?.to_vec();
    let h = parse_group_block(cursor)?;
    let hn = h.order();

    let base_resolve = |token: &str| {
        base_names
            .iter()
            .position(|n| n == token)
            .or_else(|| token.parse::<usize>().ok().filter(|&i| i < m))
    };
    let h_resolve = |token: &str| h.resolve(token);

    let phi = parse_table_block(cursor, "phi", m, hn, base_resolve, "base element")?;
    let psi = parse_table_block(cursor, "psi", m, hn, h_resolve, "H element")?;
    let xi = parse_table_block(cursor, "xi", m, m, base_resolve, "base element")?;
    let lam = parse_table_block(cursor, "lambda", m, m, h_resolve, "H element")?;
    cursor.expect("end")?;

    let raw = RawHypergroup {
        name,
        base_names,
        h,
        phi,
        psi,
        xi,
        lam,
    };
    Ok(Hypergroup::validate(raw)?)
}

/// Parses one complete document. Everything structural is validated before
/// this returns: group axioms, the transversal property, or the hypergroup
/// axiom sweep, depending on the kind.
pub fn parse_document(text: &str) -> Result<Document, FormatError> {
    let mut cursor = Cursor::new(text);
    let doc = match cursor.peek_keyword() {
        Some("group") => Document::Group(parse_group_block(&mut cursor)?),
        Some("triple") => Document::Triple(parse_triple_block(&mut cursor)?),
        Some("hypergroup") => Document::Hypergroup(parse_hypergroup_block(&mut cursor)?),
        Some(other) => {
            let other = other.to_string();
            let line = cursor.lines[cursor.pos].0;
            return Err(cursor.syntax(
                line,
                format!("expected `group`, `triple`, or `hypergroup`, found `{other}`"),
            ));
        }
        None => {
            return Err(cursor.syntax(1, "empty document".to_string()));
        }
    };
    cursor.finished()?;
    Ok(doc)
}

fn emit_group_block(g: &FiniteGroup, out: &mut String) {
    writeln!(out, "group {}", g.name()).unwrap();
    writeln!(out, "order {}", g.order()).unwrap();
    writeln!(out, "elements {}", g.elements().join(" ")).unwrap();
    writeln!(out, "table").unwrap();
    for i in 0..g.order() {
        let row: Vec<&str> = g.row(i).iter().map(|&j| g.element_name(j)).collect();
        writeln!(out, "{}", row.join(" ")).unwrap();
    }
    writeln!(out, "end").unwrap();
}

fn emit_rows<'a>(rows: &[Vec<usize>], name: impl Fn(usize) -> &'a str, out: &mut String) {
    for row in rows {
        let cells: Vec<&str> = row.iter().map(|&cell| name(cell)).collect();
        writeln!(out, "{}", cells.join(" ")).unwrap();
    }
}

/// Canonical text for a document: single spaces, element names for all
/// element references, every line newline-terminated. Emission is
/// deterministic, and `parse(emit(d))` reproduces `d` exactly. Names, not
/// indices, are the canonical form because resolution is name-first: an
/// element may be *named* like some other element's index, and only names
/// are guaranteed collision-free.
pub fn emit_document(doc: &Document) -> String {
    let mut out = String::new();
    match doc {
        Document::Group(g) => emit_group_block(g, &mut out),
        Document::Triple(t) => {
            writeln!(out, "triple {}", t.name()).unwrap();
            emit_group_block(t.group(), &mut out);
            let name = |i: usize| t.group().element_name(i);
            let members: Vec<&str> =
                t.subgroup().members().iter().map(|&i| name(i)).collect();
            writeln!(out, "subgroup {}", members.join(" ")).unwrap();
            let transversal: Vec<&str> =
                t.transversal().iter().map(|&i| name(i)).collect();
            writeln!(out, "transversal {}", transversal.join(" ")).unwrap();
            writeln!(out, "end").unwrap();
        }
        Document::Hypergroup(k) => {
            let raw = k.to_raw();
            writeln!(out, "hypergroup {}", raw.name).unwrap();
            writeln!(out, "base {} {}", raw.base_names.len(), raw.base_names.join(" ")).unwrap();
            emit_group_block(&raw.h, &mut out);
            let base = |i: usize| raw.base_names[i].as_str();
            let in_h = |i: usize| raw.h.element_name(i);
            writeln!(out, "phi").unwrap();
            emit_rows(&raw.phi, base, &mut out);
            writeln!(out, "psi").unwrap();
            emit_rows(&raw.psi, in_h, &mut out);
            writeln!(out, "xi").unwrap();
            emit_rows(&raw.xi, base, &mut out);
            writeln!(out, "lambda").unwrap();
            emit_rows(&raw.lam, in_h, &mut out);
            writeln!(out, "end").unwrap();
        }
    }
    out
}

/// The two component maps of a morphism file, still as unresolved tokens:
/// resolution needs the endpoint documents, which the caller loads.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MorphismData {
    /// A triple morphism: one token per source group element.
    Triple { g: Vec<String> },
    /// A hypergroup morphism: tokens for `H` and for the base set.
    Hypergroup { f0: Vec<String>, f1: Vec<String> },
}

/// A parsed morphism file. The endpoints are references (paths or
/// `builtin:` names), not inline documents.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MorphismFile {
    pub name: String,
    pub source_ref: String,
    pub target_ref: String,
    pub data: MorphismData,
}

/// Parses a morphism file:
///
/// ```text
/// morphism <name>
/// source <path-or-builtin>
/// target <path-or-builtin>
/// g <one token per source group element>
/// end
/// ```
///
/// with `f0 <H tokens>` and `f1 <base tokens>` lines replacing `g` for
/// hypergroup morphisms.
pub fn parse_morphism(text: &str) -> Result<MorphismFile, FormatError> {
    let mut cursor = Cursor::new(text);
    let (line, rest) = cursor.expect("morphism")?;
    let name = exactly(&cursor, line, &rest, 1, "morphism name")?[0].clone();
    let (line, rest) = cursor.expect("source")?;
    let source_ref = exactly(&cursor, line, &rest, 1, "source reference")?[0].clone();
    let (line, rest) = cursor.expect("target")?;
    let target_ref = exactly(&cursor, line, &rest, 1, "target reference")?[0].clone();
    let data = match cursor.peek_keyword() {
        Some("g") => {
            let (_, g) = cursor.expect("g")?;
            MorphismData::Triple { g }
        }
        Some("f0") => {
            let (_, f0) = cursor.expect("f0")?;
            let (_, f1) = cursor.expect("f1")?;
            MorphismData::Hypergroup { f0, f1 }
        }
        _ => {
            let (n, tokens) = cursor.next_line("`g` or `f0`")?;
            let found = tokens[0].clone();
            return Err(cursor.syntax(n, format!("expected `g` or `f0`, found `{found}`")));
        }
    };
    cursor.expect("end")?;
    cursor.finished()?;
    Ok(MorphismFile {
        name,
        source_ref,
        target_ref,
        data,
    })
}
