//! Finite groups as validated Cayley tables.
//!
//! A group lives entirely in index space: elements are `0..n`, the product of
//! `i` and `j` is `table[i * n + j]`, and a parallel name list is kept only
//! for I/O. Construction goes through [`FiniteGroup::from_table`], which
//! checks every group axiom and reports the first violation with a witness.

mod builtin;
mod morphism;
mod subgroup;

pub use builtin::{
    builtin_group, cyclic, dihedral, direct_product, klein_four, quaternion8, symmetric,
    BuiltinKind,
};
pub use morphism::{GroupHom, HomViolation, MorphismError};
pub use subgroup::{enumerate_subgroups, right_cosets, Subgroup, SubgroupError};

use thiserror::Error;

/// Errors raised while building or validating a Cayley table.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("table shape mismatch: {detail}")]
    ShapeMismatch { detail: String },
    #[error("duplicate element name {name:?}")]
    DuplicateElement { name: String },
    #[error("element name {name:?} is not a valid token (empty, whitespace, or '#')")]
    BadElementName { name: String },
    #[error("not closed: table[{row}][{col}] = {value} is out of range for order {order}")]
    NotClosed {
        row: usize,
        col: usize,
        value: usize,
        order: usize,
    },
    #[error("no two-sided identity element")]
    NoIdentity,
    #[error("not associative at ({i}, {j}, {k}): ({i}*{j})*{k} = {lhs} but {i}*({j}*{k}) = {rhs}")]
    NotAssociative {
        i: usize,
        j: usize,
        k: usize,
        lhs: usize,
        rhs: usize,
    },
    #[error("element {index} has no two-sided inverse")]
    NoInverse { index: usize },
    #[error("unsupported parameter: {detail}")]
    UnsupportedParameter { detail: String },
}

/// A finite group given by its full multiplication table.
///
/// Invariants (established at construction, relied on everywhere else):
/// closure, associativity, a two-sided identity, and a two-sided inverse for
/// every element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    name: String,
    elements: Vec<String>,
    /// Row-major: `table[i * n + j]` is the index of `e_i * e_j`.
    table: Vec<usize>,
    identity: usize,
    inverses: Vec<usize>,
}

pub(crate) fn valid_token(name: &str) -> bool {
    !name.is_empty() && !name.contains(char::is_whitespace) && !name.contains('#')
}

impl FiniteGroup {
    /// Builds a validated group from element names and a square table of
    /// product indices (`rows[i][j]` = index of `e_i * e_j`).
    ///
    /// The identity and inverses are located by search; the table may list
    /// elements in any order. The first violated axiom is reported with a
    /// witness tuple.
    pub fn from_table(
        name: impl Into<String>,
        elements: Vec<String>,
        rows: Vec<Vec<usize>>,
    ) -> Result<Self, GroupError> {
        let n = elements.len();
        if n == 0 {
            return Err(GroupError::ShapeMismatch {
                detail: "a group needs at least one element".into(),
            });
        }
        for name in &elements {
            if !valid_token(name) {
                return Err(GroupError::BadElementName { name: name.clone() });
            }
        }
        for (i, name) in elements.iter().enumerate() {
            if elements[..i].contains(name) {
                return Err(GroupError::DuplicateElement { name: name.clone() });
            }
        }
        if rows.len() != n {
            return Err(GroupError::ShapeMismatch {
                detail: format!("expected {n} table rows, found {}", rows.len()),
            });
        }
        let mut table = Vec::with_capacity(n * n);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(GroupError::ShapeMismatch {
                    detail: format!("row {i} has {} entries, expected {n}", row.len()),
                });
            }
            table.extend_from_slice(row);
        }
        // Closure.
        for i in 0..n {
            for j in 0..n {
                let v = table[i * n + j];
                if v >= n {
                    return Err(GroupError::NotClosed {
                        row: i,
                        col: j,
                        value: v,
                        order: n,
                    });
                }
            }
        }
        // Two-sided identity, located by search.
        let identity = (0..n)
            .find(|&e| (0..n).all(|i| table[e * n + i] == i && table[i * n + e] == i))
            .ok_or(GroupError::NoIdentity)?;
        // Associativity.
        for i in 0..n {
            for j in 0..n {
                let ij = table[i * n + j];
                for k in 0..n {
                    let lhs = table[ij * n + k];
                    let rhs = table[i * n + table[j * n + k]];
                    if lhs != rhs {
                        return Err(GroupError::NotAssociative { i, j, k, lhs, rhs });
                    }
                }
            }
        }
        // Two-sided inverses.
        let mut inverses = Vec::with_capacity(n);
        for i in 0..n {
            let inv = (0..n)
                .find(|&j| table[i * n + j] == identity && table[j * n + i] == identity)
                .ok_or(GroupError::NoInverse { index: i })?;
            inverses.push(inv);
        }
        Ok(FiniteGroup {
            name: name.into(),
            elements,
            table,
            identity,
            inverses,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// Returns a copy with a different display name; the structure is shared.
    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[String] {
        &self.elements
    }

    pub fn element_name(&self, i: usize) -> &str {
        &self.elements[i]
    }

    /// Index of the product `e_i * e_j`.
    pub fn mul(&self, i: usize, j: usize) -> usize {
        self.table[i * self.order() + j]
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn inverse(&self, i: usize) -> usize {
        self.inverses[i]
    }

    pub fn inverses(&self) -> &[usize] {
        &self.inverses
    }

    /// Row `i` of the table (products `e_i * e_j` for all `j`).
    pub fn row(&self, i: usize) -> &[usize] {
        let n = self.order();
        &self.table[i * n..(i + 1) * n]
    }

    /// Resolves a token to an element index: exact name match wins, otherwise
    /// the token is read as a numeric index.
    pub fn resolve(&self, token: &str) -> Option<usize> {
        if let Some(i) = self.elements.iter().position(|e| e == token) {
            return Some(i);
        }
        token.parse::<usize>().ok().filter(|&i| i < self.order())
    }

    /// True when the two groups have the same element names and table,
    /// ignoring the display name.
    pub fn same_structure(&self, other: &FiniteGroup) -> bool {
        self.elements == other.elements && self.table == other.table
    }

    /// True when the two groups have the same Cayley table; all names are
    /// ignored. This is the right notion for composing positional maps.
    pub fn same_table(&self, other: &FiniteGroup) -> bool {
        self.table == other.table
    }

    /// Multiplicative order of element `i`.
    pub fn element_order(&self, i: usize) -> usize {
        let mut x = i;
        let mut k = 1;
        while x != self.identity {
            x = self.mul(x, i);
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|i| (i..n).all(|j| self.mul(i, j) == self.mul(j, i)))
    }

    /// Number of elements of each order, as `(order, count)` pairs sorted by
    /// order. Two isomorphic groups always have the same census.
    pub fn order_census(&self) -> Vec<(usize, usize)> {
        let mut counts = std::collections::BTreeMap::new();
        for i in 0..self.order() {
            *counts.entry(self.element_order(i)).or_insert(0usize) += 1;
        }
        counts.into_iter().collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z4_rows() -> Vec<Vec<usize>> {
        (0..4).map(|i| (0..4).map(|j| (i + j) % 4).collect()).collect()
    }

    fn names(n: usize) -> Vec<String> {
        (0..n).map(|i| i.to_string()).collect()
    }

    #[test]
    fn trivial_group() {
        let g = FiniteGroup::from_table("e", vec!["e".into()], vec![vec![0]]).unwrap();
        assert_eq!(g.order(), 1);
        assert_eq!(g.identity(), 0);
    }

    #[test]
    fn z4_addition_table() {
        let g = FiniteGroup::from_table("z4", names(4), z4_rows()).unwrap();
        assert_eq!(g.identity(), 0);
        assert_eq!(g.inverses(), &[0, 3, 2, 1]);
    }

    #[test]
    fn constant_table_has_no_identity() {
        let err = FiniteGroup::from_table("bad", names(2), vec![vec![0, 0], vec![0, 0]]);
        assert_eq!(err.unwrap_err(), GroupError::NoIdentity);
    }

    #[test]
    fn out_of_range_entry_is_not_closed() {
        let err = FiniteGroup::from_table("bad", names(2), vec![vec![0, 1], vec![1, 2]]);
        assert!(matches!(err.unwrap_err(), GroupError::NotClosed { row: 1, col: 1, value: 2, .. }));
    }

    #[test]
    fn non_associative_table_rejected() {
        // Identity at 0, but (1*1)*2 != 1*(1*2) below.
        let rows = vec![
            vec![0, 1, 2],
            vec![1, 0, 2],
            vec![2, 2, 0],
        ];
        let err = FiniteGroup::from_table("bad", names(3), rows);
        assert!(matches!(err.unwrap_err(), GroupError::NotAssociative { .. }));
    }

    #[test]
    fn missing_inverse_rejected() {
        // A commutative monoid with absorbing element 1: associative, identity
        // at 0, but 1 has no inverse.
        let rows = vec![vec![0, 1], vec![1, 1]];
        let err = FiniteGroup::from_table("bad", names(2), rows);
        assert_eq!(err.unwrap_err(), GroupError::NoInverse { index: 1 });
    }

    #[test]
    fn ragged_table_rejected() {
        let err = FiniteGroup::from_table("bad", names(2), vec![vec![0, 1], vec![1]]);
        assert!(matches!(err.unwrap_err(), GroupError::ShapeMismatch { .. }));
    }

    #[test]
    fn resolve_prefers_names() {
        let g = FiniteGroup::from_table("z4", names(4), z4_rows()).unwrap();
        assert_eq!(g.resolve("3"), Some(3));
        assert_eq!(g.resolve("7"), None);
        assert_eq!(g.resolve("x"), None);
    }

    #[test]
    fn element_orders_in_z4() {
        let g = FiniteGroup::from_table("z4", names(4), z4_rows()).unwrap();
        assert_eq!(g.element_order(0), 1);
        assert_eq!(g.element_order(1), 4);
        assert_eq!(g.element_order(2), 2);
        assert_eq!(g.order_census(), vec![(1, 1), (2, 1), (4, 2)]);
    }
}
