//! The equivalence between group triples and hypergroups over a group.
//!
//! One direction reads structural tables off a triple
//! ([`standard_construction`]); the other multiplies formal words over a
//! hypergroup back into a group ([`exact_product`]). Round trips land on
//! canonically isomorphic objects: [`unit_iso`] compares a hypergroup with
//! the tables derived from its own word group, and [`counit_iso`] compares a
//! group with the word group over its derived tables. Both functors act on
//! morphisms too ([`functor_h_on_morphism`], [`functor_t_on_morphism`]), and
//! the isomorphisms are natural — [`check_unit_naturality`] and
//! [`check_counit_naturality`] evaluate the commuting squares pointwise.
//!
//! Nothing in this module trusts the theory: every derived table is
//! re-validated axiom by axiom, every claimed homomorphism is re-checked
//! pair by pair, and every isomorphism is tested for bijectivity. The
//! theorems say these checks cannot fail on lawful inputs; the checks say
//! the tables actually implement the theorems.

mod exact;
mod suite;

pub use exact::{exact_product, functor_t_on_morphism, functor_t_on_object, ExactProduct};
pub use suite::{equivalence_suite, SuiteCatalog, SuiteLine, SuiteReport};

use thiserror::Error;

use crate::group::{GroupError, GroupHom, MorphismError, SubgroupError};
use crate::hypergroup::{
    HypMorphismError, Hypergroup, HypergroupError, HypergroupMorphism, RawHypergroup,
};
use crate::triple::{GroupTriple, TripleError, TripleMorphism, TripleMorphismError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EquivalenceError {
    #[error("tables derived from triple {triple} fail hypergroup validation: {source}")]
    DerivedTables {
        triple: String,
        #[source]
        source: HypergroupError,
    },
    #[error("word products over {hypergroup} do not form a group: {source}")]
    ProductNotGroup {
        hypergroup: String,
        #[source]
        source: GroupError,
    },
    #[error("word group identity is {found}, expected the word theta*o = {expected}")]
    IdentityMismatch { expected: usize, found: usize },
    #[error("the words (alpha*theta)o do not form a subgroup: {source}")]
    BadEmbeddedSubgroup {
        #[source]
        source: SubgroupError,
    },
    #[error("alpha -> (alpha*theta)o is not an isomorphism onto the embedded subgroup: {source}")]
    BadEmbedding {
        #[source]
        source: MorphismError,
    },
    #[error("the words epsilon*a are not a right transversal of the embedded subgroup: {source}")]
    BadEmbeddedTransversal {
        #[source]
        source: TripleError,
    },
    #[error("word equality broke at ({xi}, {x}): embedded product gives word {lhs}, direct encoding {rhs}")]
    WordEquality {
        xi: usize,
        x: usize,
        lhs: usize,
        rhs: usize,
    },
    #[error(transparent)]
    Morphism(#[from] HypMorphismError),
    #[error(transparent)]
    GroupMorphism(#[from] MorphismError),
    #[error(transparent)]
    TripleMorphism(#[from] TripleMorphismError),
    #[error("{context} is not bijective")]
    NotBijective { context: String },
    #[error("{square} naturality square broke at {part}[{element}]: one path gives {lhs}, the other {rhs}")]
    Naturality {
        square: &'static str,
        part: &'static str,
        element: usize,
        lhs: usize,
        rhs: usize,
    },
}

/// Derives a hypergroup from a triple by factorizing products.
///
/// With `a`, `b` ranging over the transversal and `α` over the subgroup,
/// the factorizations
///
/// ```text
/// a·α = ^aα · a^α        a·b = (a, b) · [a, b]
/// ```
/// fill the four tables; positions are local (transversal order for the base
/// set, member order for `H`). The result is validated in full — by the
/// theory that can never fail, and a failure would expose a bug here or in
/// the factorization, reported as [`EquivalenceError::DerivedTables`].
pub fn standard_construction(t: &GroupTriple) -> Result<Hypergroup, EquivalenceError> {
    let g = t.group();
    let sub = t.subgroup();
    let tr = t.transversal();
    let m = tr.len();
    let hn = sub.order();
    let hpos = |parent: usize| {
        sub.position_of(parent)
            .expect("factorization H-part lies in the subgroup")
    };
    let mpos = |parent: usize| {
        t.transversal_position(parent)
            .expect("factorization M-part lies in the transversal")
    };

    let mut phi = vec![vec![0; hn]; m];
    let mut psi = vec![vec![0; hn]; m];
    for i in 0..m {
        for u in 0..hn {
            let (hp, mp) = t.factorize(g.mul(tr[i], sub.members()[u]));
            psi[i][u] = hpos(hp);
            phi[i][u] = mpos(mp);
        }
    }
    let mut xi = vec![vec![0; m]; m];
    let mut lam = vec![vec![0; m]; m];
    for i in 0..m {
        for j in 0..m {
            let (hp, mp) = t.factorize(g.mul(tr[i], tr[j]));
            lam[i][j] = hpos(hp);
            xi[i][j] = mpos(mp);
        }
    }
    let raw = RawHypergroup {
        name: format!("{}-std", t.name()),
        base_names: tr.iter().map(|&a| g.element_name(a).to_string()).collect(),
        h: sub.local().clone(),
        phi,
        psi,
        xi,
        lam,
    };
    Hypergroup::validate(raw).map_err(|source| EquivalenceError::DerivedTables {
        triple: t.name().to_string(),
        source,
    })
}

/// Left division in the base set computed straight from the parent group,
/// bypassing the derived tables: `[x, a] = b` holds exactly when `x·a` lies
/// in the right coset of `b`, so the oracle scans for the unique transversal
/// position `x` with `tr[x]·tr[a]·tr[b]⁻¹` in the subgroup.
///
/// Panics if the solution is not unique — the transversal property rules
/// that out.
pub fn division_oracle(t: &GroupTriple, b: usize, a: usize) -> usize {
    let g = t.group();
    let tr = t.transversal();
    let mut found = None;
    for x in 0..tr.len() {
        let probe = g.mul(g.mul(tr[x], tr[a]), g.inverse(tr[b]));
        if t.subgroup().contains(probe) {
            assert!(
                found.is_none(),
                "division of {b} by {a} has two solutions in the transversal"
            );
            found = Some(x);
        }
    }
    found.expect("every right coset meets the transversal")
}

/// Applies the triple-to-hypergroup functor to a morphism: both components
/// are position-level restrictions of the underlying group homomorphism,
/// and the result is fully re-verified between the two standard
/// constructions.
pub fn functor_h_on_morphism(g: &TripleMorphism) -> Result<HypergroupMorphism, EquivalenceError> {
    let std_src = standard_construction(g.source())?;
    let std_tgt = standard_construction(g.target())?;
    let tgt_sub = g.target().subgroup();
    let f0_map: Vec<usize> = g
        .source()
        .subgroup()
        .members()
        .iter()
        .map(|&alpha| {
            tgt_sub
                .position_of(g.hom().apply(alpha))
                .expect("triple morphism carries the subgroup into the subgroup")
        })
        .collect();
    let f0 = GroupHom::verified(std_src.h(), std_tgt.h(), f0_map)?;
    let f1: Vec<usize> = g
        .source()
        .transversal()
        .iter()
        .map(|&a| {
            g.target()
                .transversal_position(g.hom().apply(a))
                .expect("triple morphism carries the transversal into the transversal")
        })
        .collect();
    Ok(HypergroupMorphism::verified(&std_src, &std_tgt, f0, f1)?)
}

/// The canonical isomorphism from a hypergroup to the standard construction
/// over its own word group.
///
/// The embedded subgroup lists `(αθ)o` in `α` order and the embedded
/// transversal lists `εa` in `a` order, so both components of the unit are
/// identity mappings on positions — the derived tables must literally equal
/// the originals, which the morphism verification checks entry by entry.
/// Before that, the word equality `ξ̄·x̄ = ξx` is swept over all pairs.
pub fn unit_iso(k: &Hypergroup) -> Result<HypergroupMorphism, EquivalenceError> {
    let ep = exact_product(k)?;
    for xi in 0..k.h().order() {
        for x in 0..k.base_size() {
            let lhs = ep.group().mul(ep.h_bar()[xi], ep.m_bar()[x]);
            let rhs = ep.word(xi, x);
            if lhs != rhs {
                return Err(EquivalenceError::WordEquality { xi, x, lhs, rhs });
            }
        }
    }
    let std = standard_construction(ep.triple())?;
    let f0 = GroupHom::verified(k.h(), std.h(), (0..k.h().order()).collect())?;
    let unit = HypergroupMorphism::verified(k, &std, f0, (0..k.base_size()).collect())?;
    if !unit.is_bijective() {
        return Err(EquivalenceError::NotBijective {
            context: format!("unit of {}", k.name()),
        });
    }
    Ok(unit)
}

/// The canonical isomorphism from a triple's group to the word group over
/// its derived tables: `x = α·a` maps to the word `αa` (in positions). The
/// map is verified as a bijective homomorphism and as a morphism of triples.
pub fn counit_iso(t: &GroupTriple) -> Result<TripleMorphism, EquivalenceError> {
    let k = standard_construction(t)?;
    let ep = exact_product(&k)?;
    let sub = t.subgroup();
    let mapping: Vec<usize> = (0..t.group().order())
        .map(|x| {
            let (alpha_p, a_p) = t.factorize(x);
            let u = sub
                .position_of(alpha_p)
                .expect("factorization H-part lies in the subgroup");
            let i = t
                .transversal_position(a_p)
                .expect("factorization M-part lies in the transversal");
            ep.word(u, i)
        })
        .collect();
    let hom = GroupHom::verified(t.group(), ep.group(), mapping)?;
    if !hom.is_bijective() {
        return Err(EquivalenceError::NotBijective {
            context: format!("counit of {}", t.name()),
        });
    }
    Ok(TripleMorphism::new(t, ep.triple(), hom)?)
}

/// Naturality of the unit: for a hypergroup morphism `f`, following `f` and
/// then the target's unit must equal following the source's unit and then
/// the image of `f` under the round-trip functor. Both composites are
/// compared component by component.
pub fn check_unit_naturality(f: &HypergroupMorphism) -> Result<(), EquivalenceError> {
    let unit_src = unit_iso(f.source())?;
    let unit_tgt = unit_iso(f.target())?;
    let tf = functor_t_on_morphism(f)?;
    let htf = functor_h_on_morphism(&tf)?;
    let left = f.then(&unit_tgt)?;
    let right = unit_src.then(&htf)?;
    for (element, (&l, &r)) in left
        .f0()
        .mapping()
        .iter()
        .zip(right.f0().mapping())
        .enumerate()
    {
        if l != r {
            return Err(EquivalenceError::Naturality {
                square: "unit",
                part: "f0",
                element,
                lhs: l,
                rhs: r,
            });
        }
    }
    for (element, (&l, &r)) in left.f1().iter().zip(right.f1()).enumerate() {
        if l != r {
            return Err(EquivalenceError::Naturality {
                square: "unit",
                part: "f1",
                element,
                lhs: l,
                rhs: r,
            });
        }
    }
    Ok(())
}

/// Naturality of the counit: for a triple morphism `g`, following `g` and
/// then the target's counit must equal following the source's counit and
/// then the round-trip image of `g`, evaluated on every group element.
pub fn check_counit_naturality(g: &TripleMorphism) -> Result<(), EquivalenceError> {
    let counit_src = counit_iso(g.source())?;
    let counit_tgt = counit_iso(g.target())?;
    let hg = functor_h_on_morphism(g)?;
    let g_tilde = functor_t_on_morphism(&hg)?;
    let left = g.hom().then(counit_tgt.hom())?;
    let right = counit_src.hom().then(g_tilde.hom())?;
    for (element, (&l, &r)) in left.mapping().iter().zip(right.mapping()).enumerate() {
        if l != r {
            return Err(EquivalenceError::Naturality {
                square: "counit",
                part: "group",
                element,
                lhs: l,
                rhs: r,
            });
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{cyclic, symmetric, Subgroup};
    use crate::hypergroup::{verify_derived, with_profile, Profile};

    fn z4_triple() -> GroupTriple {
        let z4 = cyclic(4).unwrap();
        let sub = Subgroup::new(&z4, vec![0, 2]).unwrap();
        GroupTriple::new("z4-triple", sub, vec![0, 1]).unwrap()
    }

    fn z4_triple_alt() -> GroupTriple {
        let z4 = cyclic(4).unwrap();
        let sub = Subgroup::new(&z4, vec![0, 2]).unwrap();
        GroupTriple::new("z4-triple-alt", sub, vec![2, 1]).unwrap()
    }

    fn s3_triple() -> GroupTriple {
        // S3 with H = the rotation subgroup A3 and the transversal
        // {identity, the transposition fixing 2}.
        let s3 = symmetric(3).unwrap();
        let e = s3.resolve("012").unwrap();
        let r = s3.resolve("120").unwrap();
        let r2 = s3.resolve("201").unwrap();
        let t = s3.resolve("102").unwrap();
        let sub = Subgroup::new(&s3, vec![e, r, r2]).unwrap();
        GroupTriple::new("s3-triple", sub, vec![e, t]).unwrap()
    }

    fn inversion_semidirect() -> Hypergroup {
        with_profile(
            &cyclic(3).unwrap(),
            &cyclic(2).unwrap(),
            Profile::Semidirect {
                psi: vec![vec![0, 1, 2], vec![0, 2, 1]],
            },
        )
        .unwrap()
    }

    #[test]
    fn z4_standard_tables_frozen() {
        let k = standard_construction(&z4_triple()).unwrap();
        let raw = k.to_raw();
        assert_eq!(raw.name, "z4-triple-std");
        assert_eq!(raw.base_names, ["0", "1"]);
        assert_eq!(raw.phi, [[0, 0], [1, 1]]);
        assert_eq!(raw.psi, [[0, 1], [0, 1]]);
        assert_eq!(raw.xi, [[0, 1], [1, 0]]);
        assert_eq!(raw.lam, [[0, 0], [0, 1]]);
        assert_eq!((k.o(), k.theta()), (0, 0));
    }

    #[test]
    fn alt_transversal_shifts_the_constants() {
        let k = standard_construction(&z4_triple_alt()).unwrap();
        let raw = k.to_raw();
        assert_eq!(raw.base_names, ["2", "1"]);
        assert_eq!(raw.phi, [[0, 0], [1, 1]]);
        assert_eq!(raw.psi, [[0, 1], [0, 1]]);
        assert_eq!(raw.xi, [[0, 1], [1, 0]]);
        assert_eq!(raw.lam, [[1, 1], [1, 0]]);
        assert_eq!(k.o(), 0);
        assert_eq!(k.base_name(k.o()), "2");
        assert_eq!(k.theta(), 1);
        assert!(verify_derived(&k).passed());
    }

    #[test]
    fn s3_standard_construction_is_the_inversion_action() {
        let k = standard_construction(&s3_triple()).unwrap();
        let raw = k.to_raw();
        // The transversal {e, t} is a subgroup, so lam is trivial, and
        // conjugating the rotation by the transposition inverts it.
        assert_eq!(raw.lam, [[0, 0], [0, 0]]);
        assert_eq!(raw.psi, [[0, 1, 2], [0, 2, 1]]);
        assert_eq!(raw.phi, [[0, 0, 0], [1, 1, 1]]);
        assert!(k.same_tables(&inversion_semidirect()));
    }

    #[test]
    fn division_oracle_agrees_with_left_divide() {
        for t in [z4_triple(), z4_triple_alt(), s3_triple()] {
            let k = standard_construction(&t).unwrap();
            for b in 0..k.base_size() {
                for a in 0..k.base_size() {
                    assert_eq!(division_oracle(&t, b, a), k.left_divide(b, a));
                }
            }
        }
    }

    #[test]
    fn counit_recovers_z4() {
        let t = z4_triple();
        let counit = counit_iso(&t).unwrap();
        assert!(counit.hom().is_bijective());
        // 3 = 2 + 1 factorizes into subgroup position 1 and transversal
        // position 1, i.e. the word 1·2 + 1 = 3.
        assert_eq!(counit.hom().apply(3), 3);
        // The rebuilt group is cyclic: some element has order 4.
        let ep_group = counit.target().group();
        assert!((0..4).any(|w| ep_group.element_order(w) == 4));
    }

    #[test]
    fn counit_recovers_s3_census() {
        let counit = counit_iso(&s3_triple()).unwrap();
        let g = counit.target().group();
        assert_eq!(g.order_census(), vec![(1, 1), (2, 3), (3, 2)]);
        assert!(!g.is_abelian());
    }

    #[test]
    fn unit_is_the_identity_relabeling() {
        for k in [
            standard_construction(&z4_triple_alt()).unwrap(),
            inversion_semidirect(),
            crate::hypergroup::from_field(5, 1).unwrap(),
        ] {
            let unit = unit_iso(&k).unwrap();
            assert!(unit.is_bijective());
            let hn = k.h().order();
            assert_eq!(unit.f0().mapping(), (0..hn).collect::<Vec<_>>());
            assert_eq!(unit.f1(), (0..k.base_size()).collect::<Vec<_>>());
            assert!(k.same_tables(unit.target()));
        }
    }

    #[test]
    fn functor_on_identity_morphism_is_identity() {
        let t = z4_triple();
        let id = TripleMorphism::new(&t, &t, GroupHom::identity(t.group())).unwrap();
        let image = functor_h_on_morphism(&id).unwrap();
        assert_eq!(image.f0().mapping(), [0, 1]);
        assert_eq!(image.f1(), [0, 1]);
    }

    #[test]
    fn both_naturality_squares_commute_for_the_mod2_morphism() {
        let t_src = z4_triple();
        let z2 = cyclic(2).unwrap();
        let sub = Subgroup::new(&z2, vec![0]).unwrap();
        let t_tgt = GroupTriple::new("z2-triple", sub, vec![0, 1]).unwrap();
        let hom = GroupHom::verified(t_src.group(), t_tgt.group(), vec![0, 1, 0, 1]).unwrap();
        let g = TripleMorphism::new(&t_src, &t_tgt, hom).unwrap();

        check_counit_naturality(&g).unwrap();
        let f = functor_h_on_morphism(&g).unwrap();
        check_unit_naturality(&f).unwrap();
    }

    #[test]
    fn word_product_agrees_with_both_association_expansions() {
        // The two ways of expanding a triple product through the tables,
        // checked term for term on a non-abelian word group.
        let k = inversion_semidirect();
        let ep = exact_product(&k).unwrap();
        let g = ep.group();
        let h = k.h();
        assert!(!g.is_abelian());
        assert_eq!(g.order_census(), vec![(1, 1), (2, 3), (3, 2)]);
        let n = g.order();
        for w1 in 0..n {
            for w2 in 0..n {
                for w3 in 0..n {
                    let (alpha, a) = ep.split(w1);
                    let (beta, b) = ep.split(w2);
                    let (gamma, c) = ep.split(w3);
                    // Multiply the first two words, then the third.
                    let ab = k.phi(a, beta);
                    let u1 = h.mul(h.mul(alpha, k.psi(a, beta)), k.lam(ab, b));
                    let m1 = k.xi(ab, b);
                    let m1c = k.phi(m1, gamma);
                    let left = ep.word(
                        h.mul(h.mul(u1, k.psi(m1, gamma)), k.lam(m1c, c)),
                        k.xi(m1c, c),
                    );
                    // Multiply the last two words, then prepend the first.
                    let bc = k.phi(b, gamma);
                    let v = h.mul(h.mul(beta, k.psi(b, gamma)), k.lam(bc, c));
                    let m2 = k.xi(bc, c);
                    let av = k.phi(a, v);
                    let right = ep.word(
                        h.mul(h.mul(alpha, k.psi(a, v)), k.lam(av, m2)),
                        k.xi(av, m2),
                    );
                    assert_eq!(left, right, "association orders disagree at ({w1}, {w2}, {w3})");
                    assert_eq!(left, g.mul(g.mul(w1, w2), w3));
                }
            }
        }
    }
}
