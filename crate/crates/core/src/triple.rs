//! Group triples `(G, H, M)`: a finite group, a subgroup, and a right
//! transversal of its right cosets.
//!
//! "Right transversal" is used here in the combinatorial sense: `M` picks
//! exactly one element from each right coset `Ha`. An equivalent formulation
//! is that every `x` in `G` factors uniquely as `x = alpha * a` with `alpha`
//! in `H` and `a` in `M`; [`GroupTriple::new`] verifies both formulations and
//! that they agree, then caches the factorization of every group element.

use thiserror::Error;

use crate::group::{right_cosets, FiniteGroup, GroupHom, Subgroup};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TripleError {
    #[error("transversal element {index} out of range for group of order {order}")]
    OutOfRange { index: usize, order: usize },
    #[error("transversal lists element {index} twice")]
    DuplicateElement { index: usize },
    #[error("transversal has {got} elements but there are {expected} right cosets")]
    WrongSize { expected: usize, got: usize },
    #[error("right coset of {coset_witness} contains {hits} transversal elements")]
    CosetMissed { coset_witness: usize, hits: usize },
    #[error("group element {element} has {count} factorizations as alpha * a")]
    FactorizationNotUnique { element: usize, count: usize },
}

/// A verified group triple. Construction checks the transversal property in
/// both formulations and precomputes every factorization.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupTriple {
    name: String,
    group: FiniteGroup,
    subgroup: Subgroup,
    transversal: Vec<usize>,
    /// `factorization[x] = (alpha, a)`, both parent indices, with
    /// `x = alpha * a`, `alpha` in `H`, `a` in the transversal.
    factorization: Vec<(usize, usize)>,
}

impl GroupTriple {
    pub fn new(
        name: impl Into<String>,
        subgroup: Subgroup,
        transversal: Vec<usize>,
    ) -> Result<Self, TripleError> {
        let group = subgroup.parent().clone();
        let n = group.order();
        for &a in &transversal {
            if a >= n {
                return Err(TripleError::OutOfRange { index: a, order: n });
            }
        }
        for (k, &a) in transversal.iter().enumerate() {
            if transversal[..k].contains(&a) {
                return Err(TripleError::DuplicateElement { index: a });
            }
        }

        // Formulation one: each right coset Ha meets the transversal once.
        let cosets = right_cosets(&group, &subgroup);
        if transversal.len() != cosets.len() {
            return Err(TripleError::WrongSize {
                expected: cosets.len(),
                got: transversal.len(),
            });
        }
        for coset in &cosets {
            let hits = coset.iter().filter(|x| transversal.contains(x)).count();
            if hits != 1 {
                return Err(TripleError::CosetMissed {
                    coset_witness: coset[0],
                    hits,
                });
            }
        }

        // Formulation two: unique factorization x = alpha * a. The two
        // formulations are equivalent, so any disagreement after the coset
        // check passed would mean the checker itself is broken.
        let mut factorization = vec![None; n];
        for &alpha in subgroup.members() {
            for &a in &transversal {
                let x = group.mul(alpha, a);
                if let Some(previous) = factorization[x] {
                    let _: (usize, usize) = previous;
                    return Err(TripleError::FactorizationNotUnique { element: x, count: 2 });
                }
                factorization[x] = Some((alpha, a));
            }
        }
        let factorization: Vec<(usize, usize)> = factorization
            .into_iter()
            .enumerate()
            .map(|(x, slot)| match slot {
                Some(pair) => pair,
                None => unreachable!("element {x} missed by H * M despite coset check"),
            })
            .collect();

        Ok(GroupTriple {
            name: name.into(),
            group,
            subgroup,
            transversal,
            factorization,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn subgroup(&self) -> &Subgroup {
        &self.subgroup
    }

    /// Transversal elements as parent indices, in list order.
    pub fn transversal(&self) -> &[usize] {
        &self.transversal
    }

    /// The unique `(alpha, a)` with `x = alpha * a`, as parent indices.
    pub fn factorize(&self, x: usize) -> (usize, usize) {
        self.factorization[x]
    }

    /// Position of a parent element within the transversal list.
    pub fn transversal_position(&self, parent_index: usize) -> Option<usize> {
        self.transversal.iter().position(|&a| a == parent_index)
    }
}

/// Checks whether `candidate` picks exactly one element from each right coset
/// of `subgroup`, returning the first offending coset on failure.
pub fn is_right_transversal(subgroup: &Subgroup, candidate: &[usize]) -> Result<(), TripleError> {
    GroupTriple::new("candidate", subgroup.clone(), candidate.to_vec()).map(|_| ())
}

/// Iterates over every right transversal of a subgroup, yielding element
/// lists in coset order (cosets ordered by minimal member).
///
/// Enumeration is Cartesian: the choice in the last coset varies fastest,
/// and within each coset members are tried in ascending order.
pub struct TransversalIter {
    cosets: Vec<Vec<usize>>,
    /// Current choice per coset, or `None` once exhausted.
    cursor: Option<Vec<usize>>,
}

impl TransversalIter {
    pub fn new(group: &FiniteGroup, subgroup: &Subgroup) -> Self {
        let cosets = right_cosets(group, subgroup);
        let cursor = Some(vec![0; cosets.len()]);
        TransversalIter { cosets, cursor }
    }

    /// Total number of transversals, `|H| ^ #cosets`, without enumerating.
    /// `None` if the count overflows `u128`.
    pub fn count_total(group: &FiniteGroup, subgroup: &Subgroup) -> Option<u128> {
        let mut total: u128 = 1;
        for coset in right_cosets(group, subgroup) {
            total = total.checked_mul(coset.len() as u128)?;
        }
        Some(total)
    }
}

impl Iterator for TransversalIter {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Self::Item> {
        let cursor = self.cursor.as_mut()?;
        let item: Vec<usize> = cursor
            .iter()
            .zip(&self.cosets)
            .map(|(&pick, coset)| coset[pick])
            .collect();
        // Advance like an odometer, last position fastest.
        let mut pos = self.cosets.len();
        loop {
            if pos == 0 {
                self.cursor = None;
                break;
            }
            pos -= 1;
            cursor[pos] += 1;
            if cursor[pos] < self.cosets[pos].len() {
                break;
            }
            cursor[pos] = 0;
        }
        Some(item)
    }
}

/// Why a group homomorphism fails to be a morphism of triples.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TripleMorphismError {
    #[error("subgroup element {element} maps to {image}, outside the target subgroup")]
    SubgroupNotPreserved { element: usize, image: usize },
    #[error("transversal element {element} maps to {image}, outside the target transversal")]
    TransversalNotPreserved { element: usize, image: usize },
}

/// A morphism of group triples: a homomorphism of the ambient groups carrying
/// subgroup into subgroup and transversal into transversal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TripleMorphism {
    source: GroupTriple,
    target: GroupTriple,
    hom: GroupHom,
}

impl TripleMorphism {
    /// Wraps a verified group homomorphism after checking both containment
    /// conditions.
    pub fn new(
        source: &GroupTriple,
        target: &GroupTriple,
        hom: GroupHom,
    ) -> Result<Self, TripleMorphismError> {
        check_containment(
            source.subgroup.members(),
            hom.mapping(),
            |image| target.subgroup.contains(image),
            TripleMorphismKind::Subgroup,
        )?;
        check_containment(
            &source.transversal,
            hom.mapping(),
            |image| target.transversal.contains(&image),
            TripleMorphismKind::Transversal,
        )?;
        Ok(TripleMorphism {
            source: source.clone(),
            target: target.clone(),
            hom,
        })
    }

    pub fn source(&self) -> &GroupTriple {
        &self.source
    }

    pub fn target(&self) -> &GroupTriple {
        &self.target
    }

    pub fn hom(&self) -> &GroupHom {
        &self.hom
    }
}

enum TripleMorphismKind {
    Subgroup,
    Transversal,
}

/// Shared containment check: every element of `part` must map under
/// `mapping` into the predicate's accepted set.
fn check_containment(
    part: &[usize],
    mapping: &[usize],
    accepted: impl Fn(usize) -> bool,
    kind: TripleMorphismKind,
) -> Result<(), TripleMorphismError> {
    for &element in part {
        let image = mapping[element];
        if !accepted(image) {
            return Err(match kind {
                TripleMorphismKind::Subgroup => {
                    TripleMorphismError::SubgroupNotPreserved { element, image }
                }
                TripleMorphismKind::Transversal => {
                    TripleMorphismError::TransversalNotPreserved { element, image }
                }
            });
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{builtin_group, cyclic, symmetric, BuiltinKind};

    fn z4_even() -> Subgroup {
        let z4 = cyclic(4).unwrap();
        Subgroup::new(&z4, vec![0, 2]).unwrap()
    }

    #[test]
    fn z4_canonical_triple() {
        let t = GroupTriple::new("t", z4_even(), vec![0, 1]).unwrap();
        assert_eq!(t.factorize(0), (0, 0));
        assert_eq!(t.factorize(1), (0, 1));
        assert_eq!(t.factorize(2), (2, 0));
        assert_eq!(t.factorize(3), (2, 1));
    }

    #[test]
    fn z4_alternate_transversal() {
        // Transversal {2, 1} in that order: element 0 = 2 * 2, so factorize
        // picks alpha = 2 from H = {0, 2}.
        let t = GroupTriple::new("t", z4_even(), vec![2, 1]).unwrap();
        assert_eq!(t.factorize(0), (2, 2));
        assert_eq!(t.factorize(3), (2, 1));
    }

    #[test]
    fn rejects_two_elements_of_one_coset() {
        let err = GroupTriple::new("t", z4_even(), vec![0, 2]).unwrap_err();
        assert!(matches!(err, TripleError::CosetMissed { hits: 2, .. }));
    }

    #[test]
    fn rejects_wrong_size() {
        let err = GroupTriple::new("t", z4_even(), vec![0]).unwrap_err();
        assert_eq!(err, TripleError::WrongSize { expected: 2, got: 1 });
    }

    #[test]
    fn enumerates_all_transversals_in_order() {
        let z4 = cyclic(4).unwrap();
        let h = z4_even();
        let all: Vec<Vec<usize>> = TransversalIter::new(&z4, &h).collect();
        assert_eq!(all, vec![vec![0, 1], vec![0, 3], vec![2, 1], vec![2, 3]]);
        assert_eq!(TransversalIter::count_total(&z4, &h), Some(4));
        for t in all {
            GroupTriple::new("t", h.clone(), t).unwrap();
        }
    }

    #[test]
    fn s3_transversal_count() {
        let s3 = symmetric(3).unwrap();
        let t = s3.resolve("102").unwrap();
        let h = Subgroup::new(&s3, vec![s3.identity(), t]).unwrap();
        assert_eq!(TransversalIter::count_total(&s3, &h), Some(8));
        assert_eq!(TransversalIter::new(&s3, &h).count(), 8);
    }

    #[test]
    fn factorization_is_total_on_s3() {
        let s3 = symmetric(3).unwrap();
        let t = s3.resolve("102").unwrap();
        let h = Subgroup::new(&s3, vec![s3.identity(), t]).unwrap();
        for transversal in TransversalIter::new(&s3, &h) {
            let triple = GroupTriple::new("t", h.clone(), transversal).unwrap();
            for x in 0..s3.order() {
                let (alpha, a) = triple.factorize(x);
                assert!(triple.subgroup().contains(alpha));
                assert!(triple.transversal().contains(&a));
                assert_eq!(s3.mul(alpha, a), x);
            }
        }
    }

    #[test]
    fn morphism_preserving_both_parts() {
        // Doubling Z4 -> Z8 sends H = {0,2} into {0,4} and M = {0,1} into
        // {0,2}.
        let z4 = cyclic(4).unwrap();
        let z8 = cyclic(8).unwrap();
        let src = GroupTriple::new("src", z4_even(), vec![0, 1]).unwrap();
        let h8 = Subgroup::new(&z8, vec![0, 4]).unwrap();
        let dst = GroupTriple::new("dst", h8, vec![0, 2, 1, 3]).unwrap();
        let f = GroupHom::verified(&z4, &z8, vec![0, 2, 4, 6]).unwrap();
        TripleMorphism::new(&src, &dst, f).unwrap();
    }

    #[test]
    fn morphism_missing_transversal_containment() {
        // Same doubling map, but the target transversal avoids 2, so the
        // image of transversal element 1 lands outside it.
        let z4 = cyclic(4).unwrap();
        let z8 = cyclic(8).unwrap();
        let src = GroupTriple::new("src", z4_even(), vec![0, 1]).unwrap();
        let h8 = Subgroup::new(&z8, vec![0, 4]).unwrap();
        let dst = GroupTriple::new("dst", h8, vec![0, 6, 1, 3]).unwrap();
        let f = GroupHom::verified(&z4, &z8, vec![0, 2, 4, 6]).unwrap();
        let err = TripleMorphism::new(&src, &dst, f).unwrap_err();
        assert_eq!(
            err,
            TripleMorphismError::TransversalNotPreserved { element: 1, image: 2 }
        );
    }

    #[test]
    fn containment_helper_flags_first_witness() {
        // Raw-set check, independent of triple validity: inclusion of {0,1}
        // into a set missing 1.
        let err = check_containment(
            &[0, 1],
            &[0, 1, 2, 3],
            |image| image == 0,
            TripleMorphismKind::Transversal,
        )
        .unwrap_err();
        assert_eq!(
            err,
            TripleMorphismError::TransversalNotPreserved { element: 1, image: 1 }
        );
    }

    #[test]
    fn whole_group_as_subgroup_has_single_transversal_choice_per_coset() {
        let q8 = builtin_group(&BuiltinKind::Quaternion8).unwrap();
        let h = Subgroup::new(&q8, (0..8).collect()).unwrap();
        let all: Vec<Vec<usize>> = TransversalIter::new(&q8, &h).collect();
        assert_eq!(all.len(), 8);
        for t in all {
            assert_eq!(t.len(), 1);
        }
    }
}
