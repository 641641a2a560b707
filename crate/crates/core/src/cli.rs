//! The `hg` command set.
//!
//! Exit-code contract, used by every command:
//! - `0`: everything requested passed;
//! - `1`: a check or validation reported `FAIL`;
//! - `2`: the request itself was unusable (bad flags, unreadable file,
//!   unknown builtin, syntax error, wrong document kind).
//!
//! Human-readable results go to stdout; witnesses and error detail go to
//! stderr. Inputs are file paths or `builtin:<name>` references.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};

use crate::catalog::{builtin, builtin_listing, default_catalog};
use crate::equivalence::{counit_iso, equivalence_suite, exact_product, standard_construction, unit_iso};
use crate::format::{
    emit_document, parse_document, parse_morphism, Document, FormatError, MorphismData,
};
use crate::group::{GroupHom, Subgroup};
use crate::hypergroup::{Hypergroup, HypergroupError, HypergroupMorphism};
use crate::triple::{TransversalIter, TripleMorphism};

const EXIT_PASS: i32 = 0;
const EXIT_FAIL: i32 = 1;
const EXIT_USAGE: i32 = 2;

#[derive(Parser)]
#[command(
    name = "hg",
    version,
    about = "Group triples, hypergroups over a group, and their exact products"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Parse a document and run its full validation.
    Validate {
        /// File path or builtin:<name>.
        input: String,
    },
    /// Derive the four structural tables of a triple, yielding a hypergroup.
    Derive {
        /// File path or builtin:<name> of a triple.
        input: String,
        /// Write the hypergroup document here instead of stdout.
        #[arg(short, long, value_name = "FILE")]
        output: Option<PathBuf>,
    },
    /// Build the exact product group of a hypergroup.
    Product {
        /// File path or builtin:<name> of a hypergroup.
        input: String,
        /// Write the group document here instead of stdout.
        #[arg(short, long, value_name = "FILE")]
        output: Option<PathBuf>,
    },
    /// Check the round-trip isomorphism: counit for a triple (derive, then
    /// take the exact product, landing back on the original group), unit
    /// for a hypergroup (exact product, then derive).
    Roundtrip {
        /// File path or builtin:<name> of a triple or hypergroup.
        input: String,
    },
    /// Count or list the right transversals of a subgroup.
    Transversals {
        /// File path or builtin:<name> of a group.
        input: String,
        /// Comma-separated subgroup elements (names or indices).
        #[arg(long, value_name = "ELEMENTS")]
        subgroup: String,
        /// Print only the total count (the default).
        #[arg(long, conflicts_with = "list")]
        count: bool,
        /// Print the transversals themselves, one per line.
        #[arg(long)]
        list: bool,
        /// Cap the number of listed transversals.
        #[arg(long, value_name = "N", requires = "list")]
        limit: Option<usize>,
    },
    /// List the built-in documents, or print one by name.
    Catalog {
        /// Builtin name; omit to list everything.
        name: Option<String>,
    },
    /// Verify a morphism file against its source and target documents.
    CheckMorphism {
        /// The morphism file.
        file: PathBuf,
    },
    /// Run every equivalence check over a catalog, one line per check.
    Suite {
        /// Catalog to run (only `default` is built in).
        #[arg(long, default_value = "default")]
        catalog: String,
    },
}

/// A command that could not complete: carries the exit code and a message
/// for stderr.
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Failure {
        Failure {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }

    fn fail(message: impl Into<String>) -> Failure {
        Failure {
            code: EXIT_FAIL,
            message: message.into(),
        }
    }
}

type CmdResult = Result<(), Failure>;

/// Parses `args` and runs the command, writing to the given handles.
/// Returns the process exit code.
pub fn run(
    args: impl IntoIterator<Item = String>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            let _ = write!(out, "{e}");
            return EXIT_PASS;
        }
        Err(e) => {
            let _ = write!(err, "{e}");
            return EXIT_USAGE;
        }
    };
    let outcome = match cli.cmd {
        Cmd::Validate { input } => cmd_validate(&input, out, err),
        Cmd::Derive { input, output } => cmd_derive(&input, output.as_deref(), out),
        Cmd::Product { input, output } => cmd_product(&input, output.as_deref(), out),
        Cmd::Roundtrip { input } => cmd_roundtrip(&input, out),
        Cmd::Transversals {
            input,
            subgroup,
            count: _,
            list,
            limit,
        } => cmd_transversals(&input, &subgroup, list, limit, out),
        Cmd::Catalog { name } => cmd_catalog(name.as_deref(), out),
        Cmd::CheckMorphism { file } => cmd_check_morphism(&file, out),
        Cmd::Suite { catalog } => cmd_suite(&catalog, out, err),
    };
    match outcome {
        Ok(()) => EXIT_PASS,
        Err(failure) => {
            let _ = writeln!(err, "{}", failure.message);
            failure.code
        }
    }
}

/// Raw input: either an already-validated builtin or file text still to be
/// parsed (so `validate` can report parse-time findings itself).
enum Input {
    Builtin(Document),
    File { text: String, display: String },
}

fn fetch(reference: &str) -> Result<Input, Failure> {
    if let Some(name) = reference.strip_prefix("builtin:") {
        return builtin(name)
            .map(Input::Builtin)
            .ok_or_else(|| Failure::usage(format!("unknown builtin `{name}`")));
    }
    let text = std::fs::read_to_string(reference)
        .map_err(|e| Failure::usage(format!("cannot read {reference}: {e}")))?;
    Ok(Input::File {
        text,
        display: reference.to_string(),
    })
}

/// Syntax errors are malformed requests (exit 2); anything else the parser
/// reports is a validation failure (exit 1).
fn classify(display: &str, e: FormatError) -> Failure {
    match e {
        FormatError::Syntax { .. } => Failure::usage(format!("{display}: {e}")),
        validation => Failure::fail(format!("{display}: {validation}")),
    }
}

fn load_document(reference: &str) -> Result<Document, Failure> {
    match fetch(reference)? {
        Input::Builtin(doc) => Ok(doc),
        Input::File { text, display } => {
            parse_document(&text).map_err(|e| classify(&display, e))
        }
    }
}

fn write_output(doc: &Document, output: Option<&Path>, out: &mut dyn Write) -> CmdResult {
    let text = emit_document(doc);
    match output {
        Some(path) => {
            std::fs::write(path, &text)
                .map_err(|e| Failure::usage(format!("cannot write {}: {e}", path.display())))?;
            let _ = writeln!(out, "wrote {} {} to {}", doc.kind(), doc.name(), path.display());
            Ok(())
        }
        None => {
            let _ = write!(out, "{text}");
            Ok(())
        }
    }
}

/// Per-axiom report lines for a hypergroup; group and triple documents get
/// a single PASS line since their whole validation ran at construction.
fn report_valid(doc: &Document, out: &mut dyn Write) {
    if let Document::Hypergroup(k) = doc {
        let (_, report) = Hypergroup::validate_with_report(k.to_raw())
            .expect("a constructed hypergroup revalidates");
        for check in report.checks() {
            let _ = writeln!(out, "{} {check}", k.name());
        }
    }
    let _ = writeln!(out, "{} {} PASS", doc.name(), doc.kind());
}

fn cmd_validate(reference: &str, out: &mut dyn Write, err: &mut dyn Write) -> CmdResult {
    match fetch(reference)? {
        Input::Builtin(doc) => {
            report_valid(&doc, out);
            Ok(())
        }
        Input::File { text, display } => match parse_document(&text) {
            Ok(doc) => {
                report_valid(&doc, out);
                Ok(())
            }
            Err(FormatError::Hypergroup(HypergroupError::Axioms(report))) => {
                for check in report.checks() {
                    let _ = writeln!(out, "{display} {check}");
                    for violation in &check.violations {
                        let _ = writeln!(err, "{display}: {violation}");
                    }
                }
                let _ = writeln!(out, "{display} hypergroup FAIL");
                Err(Failure::fail(format!("{display}: axiom validation failed")))
            }
            Err(e @ FormatError::Syntax { .. }) => Err(classify(&display, e)),
            Err(e) => {
                let _ = writeln!(out, "{display} FAIL");
                Err(Failure::fail(format!("{display}: {e}")))
            }
        },
    }
}

fn cmd_derive(reference: &str, output: Option<&Path>, out: &mut dyn Write) -> CmdResult {
    let Document::Triple(t) = load_document(reference)? else {
        return Err(Failure::usage(format!("derive needs a triple, got a {}", load_kind(reference))));
    };
    let k = standard_construction(&t)
        .map_err(|e| Failure::fail(format!("derivation of {} failed: {e}", t.name())))?;
    write_output(&Document::Hypergroup(k), output, out)
}

fn cmd_product(reference: &str, output: Option<&Path>, out: &mut dyn Write) -> CmdResult {
    let Document::Hypergroup(k) = load_document(reference)? else {
        return Err(Failure::usage(format!(
            "product needs a hypergroup, got a {}",
            load_kind(reference)
        )));
    };
    let ep = exact_product(&k)
        .map_err(|e| Failure::fail(format!("exact product of {} failed: {e}", k.name())))?;
    write_output(&Document::Group(ep.group().clone()), output, out)
}

/// Kind of an already-loadable document, for error messages only.
fn load_kind(reference: &str) -> String {
    load_document(reference)
        .map(|d| d.kind().to_string())
        .unwrap_or_else(|_| "non-document".to_string())
}

fn cmd_roundtrip(reference: &str, out: &mut dyn Write) -> CmdResult {
    match load_document(reference)? {
        Document::Triple(t) => match counit_iso(&t) {
            Ok(_) => {
                let _ = writeln!(out, "{} counit PASS", t.name());
                Ok(())
            }
            Err(e) => {
                let _ = writeln!(out, "{} counit FAIL", t.name());
                Err(Failure::fail(format!("{}: {e}", t.name())))
            }
        },
        Document::Hypergroup(k) => match unit_iso(&k) {
            Ok(_) => {
                let _ = writeln!(out, "{} unit PASS", k.name());
                Ok(())
            }
            Err(e) => {
                let _ = writeln!(out, "{} unit FAIL", k.name());
                Err(Failure::fail(format!("{}: {e}", k.name())))
            }
        },
        Document::Group(g) => Err(Failure::usage(format!(
            "roundtrip needs a triple or a hypergroup; {} is a plain group",
            g.name()
        ))),
    }
}

fn cmd_transversals(
    reference: &str,
    subgroup_spec: &str,
    list: bool,
    limit: Option<usize>,
    out: &mut dyn Write,
) -> CmdResult {
    let Document::Group(g) = load_document(reference)? else {
        return Err(Failure::usage(format!(
            "transversals needs a group, got a {}",
            load_kind(reference)
        )));
    };
    let members: Vec<usize> = subgroup_spec
        .split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|token| {
            g.resolve(token)
                .ok_or_else(|| Failure::usage(format!("unknown element `{token}` in {}", g.name())))
        })
        .collect::<Result<_, _>>()?;
    let subgroup = Subgroup::new(&g, members)
        .map_err(|e| Failure::fail(format!("--subgroup is not a subgroup of {}: {e}", g.name())))?;
    if list {
        let cap = limit.unwrap_or(usize::MAX);
        for transversal in TransversalIter::new(&g, &subgroup).take(cap) {
            let cells: Vec<String> = transversal.iter().map(usize::to_string).collect();
            let _ = writeln!(out, "{}", cells.join(" "));
        }
    } else {
        match TransversalIter::count_total(&g, &subgroup) {
            Some(total) => {
                let _ = writeln!(out, "{total}");
            }
            None => {
                let _ = writeln!(out, "overflow");
            }
        }
    }
    Ok(())
}

fn cmd_catalog(name: Option<&str>, out: &mut dyn Write) -> CmdResult {
    match name {
        None => {
            for (kind, name) in builtin_listing() {
                let _ = writeln!(out, "{kind} {name}");
            }
            Ok(())
        }
        Some(name) => {
            let doc = builtin(name)
                .ok_or_else(|| Failure::usage(format!("unknown builtin `{name}`")))?;
            let _ = write!(out, "{}", emit_document(&doc));
            Ok(())
        }
    }
}

/// Resolves base-set tokens against a hypergroup's base names, indices as
/// fallback — the same rule element tokens follow everywhere else.
fn resolve_base(k: &Hypergroup, token: &str) -> Option<usize> {
    k.base_names()
        .iter()
        .position(|n| n == token)
        .or_else(|| token.parse::<usize>().ok().filter(|&i| i < k.base_size()))
}

fn cmd_check_morphism(path: &Path, out: &mut dyn Write) -> CmdResult {
    let display = path.display().to_string();
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::usage(format!("cannot read {display}: {e}")))?;
    let file = parse_morphism(&text).map_err(|e| classify(&display, e))?;
    let source = load_document(&file.source_ref)?;
    let target = load_document(&file.target_ref)?;
    match (source, target, file.data) {
        (Document::Triple(s), Document::Triple(t), MorphismData::Triple { g }) => {
            let mapping = resolve_tokens(&g, |token| t.group().resolve(token), "target group")?;
            let outcome = GroupHom::verified(s.group(), t.group(), mapping)
                .map_err(|e| e.to_string())
                .and_then(|hom| {
                    TripleMorphism::new(&s, &t, hom).map_err(|e| e.to_string())
                });
            conclude(&file.name, "triple-morphism", outcome.map(|_| ()), out)
        }
        (Document::Hypergroup(s), Document::Hypergroup(t), MorphismData::Hypergroup { f0, f1 }) => {
            let f0 = resolve_tokens(&f0, |token| t.h().resolve(token), "target H")?;
            let f1 = resolve_tokens(&f1, |token| resolve_base(&t, token), "target base")?;
            let outcome = GroupHom::new(s.h(), t.h(), f0)
                .map_err(|e| e.to_string())
                .and_then(|f0| {
                    HypergroupMorphism::verified(&s, &t, f0, f1).map_err(|e| e.to_string())
                });
            conclude(&file.name, "hypergroup-morphism", outcome.map(|_| ()), out)
        }
        (s, t, data) => {
            let shape = match data {
                MorphismData::Triple { .. } => "a `g` line needs two triples",
                MorphismData::Hypergroup { .. } => "`f0`/`f1` lines need two hypergroups",
            };
            Err(Failure::usage(format!(
                "endpoint kinds {} and {} do not fit the mapping: {shape}",
                s.kind(),
                t.kind()
            )))
        }
    }
}

fn resolve_tokens(
    tokens: &[String],
    resolve: impl Fn(&str) -> Option<usize>,
    what: &str,
) -> Result<Vec<usize>, Failure> {
    tokens
        .iter()
        .map(|token| {
            resolve(token)
                .ok_or_else(|| Failure::usage(format!("unknown {what} element `{token}`")))
        })
        .collect()
}

fn conclude(name: &str, kind: &str, outcome: Result<(), String>, out: &mut dyn Write) -> CmdResult {
    match outcome {
        Ok(()) => {
            let _ = writeln!(out, "{name} {kind} PASS");
            Ok(())
        }
        Err(witness) => {
            let _ = writeln!(out, "{name} {kind} FAIL");
            Err(Failure::fail(format!("{name}: {witness}")))
        }
    }
}

fn cmd_suite(catalog: &str, out: &mut dyn Write, err: &mut dyn Write) -> CmdResult {
    if catalog != "default" {
        return Err(Failure::usage(format!(
            "unknown catalog `{catalog}`; only `default` is built in"
        )));
    }
    let report = equivalence_suite(&default_catalog());
    let mut check_ids: Vec<&'static str> = Vec::new();
    for line in report.lines() {
        let _ = writeln!(
            out,
            "{} {} {}",
            line.item,
            line.check,
            if line.pass { "PASS" } else { "FAIL" }
        );
        if let Some(witness) = &line.witness {
            let _ = writeln!(err, "{} {}: {}", line.item, line.check, witness.replace('\n', "; "));
        }
        if !check_ids.contains(&line.check) {
            check_ids.push(line.check);
        }
    }
    for id in check_ids {
        let pass = report.lines().iter().filter(|l| l.check == id && l.pass).count();
        let fail = report.lines().iter().filter(|l| l.check == id && !l.pass).count();
        let _ = writeln!(out, "summary {id} pass={pass} fail={fail}");
    }
    let (pass, fail) = report.totals();
    let _ = writeln!(out, "summary total pass={pass} fail={fail}");
    if fail == 0 {
        Ok(())
    } else {
        Err(Failure::fail(format!("{fail} checks failed")))
    }
}

/// Runs the CLI against in-memory buffers.
#[cfg(test)]
fn run_to_strings(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run(
        args.iter().map(|s| s.to_string()),
        &mut out,
        &mut err,
    );
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}
