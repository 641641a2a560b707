//! Subgroups, right cosets, and exhaustive subgroup enumeration.

use thiserror::Error;

use super::FiniteGroup;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SubgroupError {
    #[error("member index {index} out of range for group of order {order}")]
    OutOfRange { index: usize, order: usize },
    #[error("duplicate member index {index}")]
    DuplicateMember { index: usize },
    #[error("identity element {identity} is not a member")]
    MissingIdentity { identity: usize },
    #[error("not closed under multiplication: {i} * {j} = {product} is not a member")]
    NotClosedUnderProduct { i: usize, j: usize, product: usize },
    #[error("not closed under inversion: inverse of {i} is {inverse}, not a member")]
    NotClosedUnderInverse { i: usize, inverse: usize },
}

/// A verified subgroup of a parent group.
///
/// Keeps the member list in the order given, plus a standalone [`FiniteGroup`]
/// on those members (`local`) whose index `p` corresponds to parent element
/// `members[p]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subgroup {
    parent: FiniteGroup,
    members: Vec<usize>,
    local: FiniteGroup,
}

impl Subgroup {
    /// Validates `members` as a subgroup of `parent` and derives the local
    /// Cayley table.
    pub fn new(parent: &FiniteGroup, members: Vec<usize>) -> Result<Self, SubgroupError> {
        let n = parent.order();
        for &m in &members {
            if m >= n {
                return Err(SubgroupError::OutOfRange { index: m, order: n });
            }
        }
        for (k, &m) in members.iter().enumerate() {
            if members[..k].contains(&m) {
                return Err(SubgroupError::DuplicateMember { index: m });
            }
        }
        if !members.contains(&parent.identity()) {
            return Err(SubgroupError::MissingIdentity {
                identity: parent.identity(),
            });
        }
        let position = |x: usize| members.iter().position(|&m| m == x);
        for &i in &members {
            for &j in &members {
                if position(parent.mul(i, j)).is_none() {
                    return Err(SubgroupError::NotClosedUnderProduct {
                        i,
                        j,
                        product: parent.mul(i, j),
                    });
                }
            }
        }
        for &i in &members {
            let inv = parent.inverse(i);
            if position(inv).is_none() {
                return Err(SubgroupError::NotClosedUnderInverse { i, inverse: inv });
            }
        }
        let names: Vec<String> = members
            .iter()
            .map(|&m| parent.element_name(m).to_string())
            .collect();
        let rows: Vec<Vec<usize>> = members
            .iter()
            .map(|&i| {
                members
                    .iter()
                    .map(|&j| position(parent.mul(i, j)).expect("closure just checked"))
                    .collect()
            })
            .collect();
        let local = FiniteGroup::from_table(format!("{}.sub{}", parent.name(), members.len()), names, rows)
            .expect("restriction of a group table to a closed subset is a group");
        Ok(Subgroup {
            parent: parent.clone(),
            members,
            local,
        })
    }

    pub fn parent(&self) -> &FiniteGroup {
        &self.parent
    }

    /// Parent indices of the members, in list order.
    pub fn members(&self) -> &[usize] {
        &self.members
    }

    /// The subgroup as a standalone group; index `p` is parent element
    /// `members()[p]`.
    pub fn local(&self) -> &FiniteGroup {
        &self.local
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, parent_index: usize) -> bool {
        self.members.contains(&parent_index)
    }

    /// Position of a parent element within the member list.
    pub fn position_of(&self, parent_index: usize) -> Option<usize> {
        self.members.iter().position(|&m| m == parent_index)
    }
}

/// The right cosets `Ha` as disjoint sets of parent indices covering the
/// group, ordered by minimal member, members ascending.
pub fn right_cosets(group: &FiniteGroup, subgroup: &Subgroup) -> Vec<Vec<usize>> {
    let n = group.order();
    let mut seen = vec![false; n];
    let mut cosets = Vec::new();
    for a in 0..n {
        if seen[a] {
            continue;
        }
        let mut coset: Vec<usize> = subgroup.members().iter().map(|&h| group.mul(h, a)).collect();
        coset.sort_unstable();
        for &x in &coset {
            seen[x] = true;
        }
        cosets.push(coset);
    }
    cosets
}

/// Every subgroup of `group`, as sorted member lists, ordered by
/// (order, members).
pub fn enumerate_subgroups(group: &FiniteGroup) -> Vec<Vec<usize>> {
    use std::collections::BTreeSet;
    let n = group.order();
    let trivial = vec![group.identity()];
    let mut found: BTreeSet<Vec<usize>> = BTreeSet::new();
    found.insert(trivial.clone());
    let mut queue = vec![trivial];
    while let Some(current) = queue.pop() {
        for g in 0..n {
            if current.contains(&g) {
                continue;
            }
            let mut extended = current.clone();
            extended.push(g);
            let closed = closure(group, &extended);
            if found.insert(closed.clone()) {
                queue.push(closed);
            }
        }
    }
    let mut out: Vec<Vec<usize>> = found.into_iter().collect();
    out.sort_by_key(|s| (s.len(), s.clone()));
    out
}

/// Smallest subgroup containing `seed`, as a sorted member list.
fn closure(group: &FiniteGroup, seed: &[usize]) -> Vec<usize> {
    let n = group.order();
    let mut member = vec![false; n];
    member[group.identity()] = true;
    let mut stack: Vec<usize> = Vec::new();
    for &s in seed {
        if !member[s] {
            member[s] = true;
            stack.push(s);
        }
    }
    // Add products with every current member until stable.
    let mut members: Vec<usize> = (0..n).filter(|&i| member[i]).collect();
    let mut changed = true;
    while changed {
        changed = false;
        let snapshot = members.clone();
        for &a in &snapshot {
            for &b in &snapshot {
                let p = group.mul(a, b);
                if !member[p] {
                    member[p] = true;
                    members.push(p);
                    changed = true;
                }
            }
            let inv = group.inverse(a);
            if !member[inv] {
                member[inv] = true;
                members.push(inv);
                changed = true;
            }
        }
    }
    members.sort_unstable();
    members
}

#[cfg(test)]
mod tests {
    use super::super::builtin::{cyclic, klein_four, quaternion8, symmetric};
    use super::*;

    #[test]
    fn z4_even_subgroup() {
        let g = cyclic(4).unwrap();
        let h = Subgroup::new(&g, vec![0, 2]).unwrap();
        assert_eq!(h.local().order(), 2);
        assert_eq!(h.local().element_name(1), "2");
        assert_eq!(right_cosets(&g, &h), vec![vec![0, 2], vec![1, 3]]);
    }

    #[test]
    fn whole_group_is_one_coset() {
        let g = cyclic(5).unwrap();
        let h = Subgroup::new(&g, (0..5).collect()).unwrap();
        assert_eq!(right_cosets(&g, &h), vec![vec![0, 1, 2, 3, 4]]);
    }

    #[test]
    fn s3_transposition_cosets() {
        let g = symmetric(3).unwrap();
        let t = g.resolve("102").unwrap(); // the transposition (01)
        let h = Subgroup::new(&g, vec![g.identity(), t]).unwrap();
        let cosets = right_cosets(&g, &h);
        assert_eq!(cosets.len(), 3);
        assert!(cosets.iter().all(|c| c.len() == 2));
    }

    #[test]
    fn rejects_non_closed_subset() {
        let g = cyclic(4).unwrap();
        let err = Subgroup::new(&g, vec![0, 1]).unwrap_err();
        assert!(matches!(err, SubgroupError::NotClosedUnderProduct { .. }));
    }

    #[test]
    fn rejects_missing_identity() {
        let g = cyclic(4).unwrap();
        let err = Subgroup::new(&g, vec![1, 3]).unwrap_err();
        assert!(matches!(err, SubgroupError::MissingIdentity { .. }));
    }

    #[test]
    fn subgroup_counts() {
        // Known subgroup counts: Z12 has one per divisor of 12.
        assert_eq!(enumerate_subgroups(&cyclic(12).unwrap()).len(), 6);
        assert_eq!(enumerate_subgroups(&klein_four()).len(), 5);
        assert_eq!(enumerate_subgroups(&quaternion8()).len(), 6);
        assert_eq!(enumerate_subgroups(&symmetric(3).unwrap()).len(), 6);
        assert_eq!(enumerate_subgroups(&symmetric(4).unwrap()).len(), 30);
    }

    #[test]
    fn enumerated_subgroups_all_validate() {
        let g = symmetric(3).unwrap();
        for members in enumerate_subgroups(&g) {
            Subgroup::new(&g, members).unwrap();
        }
    }
}
