//! Hypergroups over a group: a base set `M`, a group `H`, and four
//! structural mappings given as lookup tables.
//!
//! Notation used throughout the crate (row = first argument, column =
//! second):
//!
//! * `phi[a][α] = a^α` — a right action of `H` on `M`;
//! * `psi[a][α] = ^aα` — an `H`-valued companion of the action;
//! * `xi[a][b] = [a, b]` — a binary operation on `M` with left division;
//! * `lam[a][b] = (a, b)` — an `H`-valued pairing.
//!
//! [`Hypergroup::validate`] sweeps the defining axioms exhaustively: the
//! left-division and left-neutral conditions on `xi` (P1), the action laws
//! for `phi` (P2), surjectivity of `α ↦ ^oα` (P3), and the five coherence
//! identities A1–A5 tying the four tables together. Every violation is
//! reported with the offending argument tuple and both evaluated sides; see
//! [`axioms`] for the sweep itself and for the derived identities A6–A11
//! that provably follow.

pub mod axioms;
mod builders;
mod morphism;

pub use axioms::{verify_derived, AxiomCheck, AxiomId, AxiomReport, Violation};
pub use builders::{from_field, from_group, from_vector_space, with_profile, Profile};
pub use morphism::{HypMorphismError, HypergroupMorphism, MorphCondition, MorphismViolation};

use thiserror::Error;

use crate::group::FiniteGroup;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HypergroupError {
    #[error("table shape mismatch: {detail}")]
    ShapeMismatch { detail: String },
    #[error("{table} entry at ({row}, {col}) = {value} is out of range (bound {bound})")]
    IndexOutOfRange {
        table: &'static str,
        row: usize,
        col: usize,
        value: usize,
        bound: usize,
    },
    #[error("duplicate base element name {name:?}")]
    DuplicateBaseName { name: String },
    #[error("base element name {name:?} is not a valid token")]
    BadBaseName { name: String },
    #[error("axiom check failed:\n{0}")]
    Axioms(AxiomReport),
}

/// Unvalidated structural tables, row-per-first-argument.
///
/// This is the exchange format between parsers, builders, and
/// [`Hypergroup::validate`]; nothing about it is trusted until validation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawHypergroup {
    pub name: String,
    pub base_names: Vec<String>,
    pub h: FiniteGroup,
    pub phi: Vec<Vec<usize>>,
    pub psi: Vec<Vec<usize>>,
    pub xi: Vec<Vec<usize>>,
    pub lam: Vec<Vec<usize>>,
}

impl RawHypergroup {
    /// Dimensions and ranges only; no axiom content.
    fn check_shape(&self) -> Result<(), HypergroupError> {
        let m = self.base_names.len();
        let hn = self.h.order();
        if m == 0 {
            return Err(HypergroupError::ShapeMismatch {
                detail: "base set is empty".into(),
            });
        }
        for name in &self.base_names {
            if !crate::group::valid_token(name) {
                return Err(HypergroupError::BadBaseName { name: name.clone() });
            }
        }
        for (k, name) in self.base_names.iter().enumerate() {
            if self.base_names[..k].contains(name) {
                return Err(HypergroupError::DuplicateBaseName { name: name.clone() });
            }
        }
        let tables: [(&'static str, &Vec<Vec<usize>>, usize, usize); 4] = [
            ("phi", &self.phi, hn, m),
            ("psi", &self.psi, hn, hn),
            ("xi", &self.xi, m, m),
            ("lambda", &self.lam, m, hn),
        ];
        for (label, table, width, bound) in tables {
            if table.len() != m {
                return Err(HypergroupError::ShapeMismatch {
                    detail: format!("{label} has {} rows, expected {m}", table.len()),
                });
            }
            for (row, cells) in table.iter().enumerate() {
                if cells.len() != width {
                    return Err(HypergroupError::ShapeMismatch {
                        detail: format!(
                            "{label} row {row} has {} columns, expected {width}",
                            cells.len()
                        ),
                    });
                }
                for (col, &value) in cells.iter().enumerate() {
                    if value >= bound {
                        return Err(HypergroupError::IndexOutOfRange {
                            table: label,
                            row,
                            col,
                            value,
                            bound,
                        });
                    }
                }
            }
        }
        Ok(())
    }

    /// Full axiom sweep (P1–P3 and A1–A5). Shape problems are hard errors;
    /// the report otherwise covers every axiom, pass or fail.
    pub fn axiom_report(&self) -> Result<AxiomReport, HypergroupError> {
        self.check_shape()?;
        Ok(axioms::check_core(self))
    }
}

/// The distinguished constants of a validated hypergroup.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Distinguished {
    /// Left neutral of `xi`: the unique `o` with `[o, a] = a` for all `a`.
    pub o: usize,
    /// Identity of `H`.
    pub epsilon: usize,
    /// `θ`, the inverse in `H` of `(o, o)`.
    pub theta: usize,
}

/// A validated hypergroup over the group `H`.
///
/// Tables are stored flat (row-major) and the distinguished elements `o`
/// and `θ` are cached at validation time. All accessors are total on
/// in-range indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hypergroup {
    name: String,
    base_names: Vec<String>,
    h: FiniteGroup,
    phi: Vec<usize>,
    psi: Vec<usize>,
    xi: Vec<usize>,
    lam: Vec<usize>,
    o: usize,
    theta: usize,
}

impl Hypergroup {
    /// Validates raw tables and constructs the hypergroup, returning the
    /// all-pass axiom report alongside it. An axiom failure returns
    /// [`HypergroupError::Axioms`] carrying the complete report (all axioms
    /// evaluated, each with witnesses).
    pub fn validate_with_report(
        raw: RawHypergroup,
    ) -> Result<(Hypergroup, AxiomReport), HypergroupError> {
        let report = raw.axiom_report()?;
        if !report.passed() {
            return Err(HypergroupError::Axioms(report));
        }
        let m = raw.base_names.len();
        let flatten = |rows: &[Vec<usize>]| -> Vec<usize> {
            rows.iter().flat_map(|r| r.iter().copied()).collect()
        };
        let xi = flatten(&raw.xi);
        let o = (0..m)
            .find(|&x| (0..m).all(|a| xi[x * m + a] == a))
            .expect("P1(ii) passed, so a left neutral exists");
        let theta = raw.h.inverse(raw.lam[o][o]);
        Ok((
            Hypergroup {
                name: raw.name,
                base_names: raw.base_names,
                h: raw.h,
                phi: flatten(&raw.phi),
                psi: flatten(&raw.psi),
                xi,
                lam: flatten(&raw.lam),
                o,
                theta,
            },
            report,
        ))
    }

    /// [`Hypergroup::validate_with_report`] without the report.
    pub fn validate(raw: RawHypergroup) -> Result<Hypergroup, HypergroupError> {
        Self::validate_with_report(raw).map(|(k, _)| k)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    /// `m`, the size of the base set.
    pub fn base_size(&self) -> usize {
        self.base_names.len()
    }

    pub fn base_names(&self) -> &[String] {
        &self.base_names
    }

    pub fn base_name(&self, a: usize) -> &str {
        &self.base_names[a]
    }

    /// Base element by name, falling back to a numeric index.
    pub fn resolve_base(&self, token: &str) -> Option<usize> {
        if let Some(i) = self.base_names.iter().position(|n| n == token) {
            return Some(i);
        }
        token.parse::<usize>().ok().filter(|&i| i < self.base_size())
    }

    pub fn h(&self) -> &FiniteGroup {
        &self.h
    }

    /// `a^α`.
    pub fn phi(&self, a: usize, alpha: usize) -> usize {
        self.phi[a * self.h.order() + alpha]
    }

    /// `^aα`.
    pub fn psi(&self, a: usize, alpha: usize) -> usize {
        self.psi[a * self.h.order() + alpha]
    }

    /// `[a, b]`.
    pub fn xi(&self, a: usize, b: usize) -> usize {
        self.xi[a * self.base_size() + b]
    }

    /// `(a, b)`.
    pub fn lam(&self, a: usize, b: usize) -> usize {
        self.lam[a * self.base_size() + b]
    }

    /// The left neutral of `xi`.
    pub fn o(&self) -> usize {
        self.o
    }

    /// Identity of `H`.
    pub fn epsilon(&self) -> usize {
        self.h.identity()
    }

    /// `θ = (o, o)^{-1}` in `H`.
    pub fn theta(&self) -> usize {
        self.theta
    }

    pub fn distinguished(&self) -> Distinguished {
        Distinguished {
            o: self.o,
            epsilon: self.epsilon(),
            theta: self.theta,
        }
    }

    /// `b / a`: the unique `x` with `[x, a] = b`, found by scanning the
    /// column (P1(i) guarantees existence and uniqueness).
    pub fn left_divide(&self, b: usize, a: usize) -> usize {
        let m = self.base_size();
        (0..m)
            .find(|&x| self.xi[x * m + a] == b)
            .expect("P1(i) validated: every column of xi is a permutation")
    }

    /// Tables compare equal (all names ignored).
    pub fn same_tables(&self, other: &Hypergroup) -> bool {
        self.base_size() == other.base_size()
            && self.h.same_table(&other.h)
            && self.phi == other.phi
            && self.psi == other.psi
            && self.xi == other.xi
            && self.lam == other.lam
    }

    /// Back to row form, e.g. for emission.
    pub fn to_raw(&self) -> RawHypergroup {
        let m = self.base_size();
        let hn = self.h.order();
        let rows = |flat: &[usize], width: usize| -> Vec<Vec<usize>> {
            flat.chunks(width).map(|c| c.to_vec()).collect()
        };
        RawHypergroup {
            name: self.name.clone(),
            base_names: self.base_names.clone(),
            h: self.h.clone(),
            phi: rows(&self.phi, hn),
            psi: rows(&self.psi, hn),
            xi: rows(&self.xi, m),
            lam: rows(&self.lam, m),
        }
    }
}
