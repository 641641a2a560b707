//! The built-in catalog: the named groups, triples, hypergroups, and
//! morphisms behind `builtin:` references and the default verification
//! suite.
//!
//! Everything here is hand-authored and lawful, so constructors `unwrap`:
//! a failure is a bug in the catalog itself and the tests would catch it.

use crate::equivalence::{standard_construction, SuiteCatalog};
use crate::format::Document;
use crate::group::{
    cyclic, dihedral, enumerate_subgroups, klein_four, quaternion8, right_cosets, symmetric,
    FiniteGroup, GroupHom, Subgroup,
};
use crate::hypergroup::{
    from_field, from_group, from_vector_space, with_profile, Hypergroup, HypergroupMorphism,
    Profile,
};
use crate::triple::{GroupTriple, TripleMorphism};

/// The groups whose subgroup lattices feed the enumerated triples (and
/// which all appear as one-point-stabilizer hypergroups). `s5` is kept out:
/// its lattice would swamp the suite without exercising anything new.
pub fn catalog_groups() -> Vec<FiniteGroup> {
    let mut groups: Vec<FiniteGroup> = (1..=12).map(|n| cyclic(n).unwrap()).collect();
    groups.extend((3..=6).map(|n| dihedral(n).unwrap()));
    groups.push(symmetric(3).unwrap());
    groups.push(symmetric(4).unwrap());
    groups.push(quaternion8());
    groups.push(klein_four());
    groups
}

/// Groups reachable as `builtin:` documents: the catalog groups plus `s5`.
pub fn builtin_groups() -> Vec<FiniteGroup> {
    let mut groups = catalog_groups();
    groups.push(symmetric(5).unwrap());
    groups
}

/// Up to three transversals for one subgroup: smallest member of each
/// coset (contains the identity), largest member (avoids it whenever the
/// subgroup is nontrivial), and a rotating pick that varies with the coset
/// index. Coinciding picks are deduplicated.
fn transversal_variants(cosets: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let picks: [&dyn Fn(usize, &[usize]) -> usize; 3] = [
        &|_, coset| coset[0],
        &|_, coset| *coset.last().unwrap(),
        &|i, coset| coset[i % coset.len()],
    ];
    let mut variants: Vec<Vec<usize>> = Vec::new();
    for pick in picks {
        let transversal: Vec<usize> = cosets
            .iter()
            .enumerate()
            .map(|(i, coset)| pick(i, coset))
            .collect();
        if !variants.contains(&transversal) {
            variants.push(transversal);
        }
    }
    variants
}

/// Every subgroup of every catalog group, crossed with the transversal
/// variants; names follow `{group}-s{subgroup index}-t{variant index}`.
pub fn catalog_triples() -> Vec<GroupTriple> {
    let mut triples = Vec::new();
    for group in catalog_groups() {
        for (si, members) in enumerate_subgroups(&group).into_iter().enumerate() {
            let subgroup = Subgroup::new(&group, members).unwrap();
            let cosets = right_cosets(&group, &subgroup);
            for (ti, transversal) in transversal_variants(&cosets).into_iter().enumerate() {
                let name = format!("{}-s{si}-t{ti}", group.name());
                triples.push(GroupTriple::new(name, subgroup.clone(), transversal).unwrap());
            }
        }
    }
    triples
}

fn trivial_triple() -> GroupTriple {
    let z1 = cyclic(1).unwrap();
    let sub = Subgroup::new(&z1, vec![0]).unwrap();
    GroupTriple::new("trivial-triple", sub, vec![0]).unwrap()
}

fn z2_triple() -> GroupTriple {
    let z2 = cyclic(2).unwrap();
    let sub = Subgroup::new(&z2, vec![0]).unwrap();
    GroupTriple::new("z2-triple", sub, vec![0, 1]).unwrap()
}

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

fn z4_full() -> GroupTriple {
    let z4 = cyclic(4).unwrap();
    let sub = Subgroup::new(&z4, vec![0]).unwrap();
    GroupTriple::new("z4-full", sub, vec![0, 1, 2, 3]).unwrap()
}

fn z8_triple() -> GroupTriple {
    let z8 = cyclic(8).unwrap();
    let sub = Subgroup::new(&z8, vec![0, 4]).unwrap();
    GroupTriple::new("z8-triple", sub, vec![0, 1, 2, 3]).unwrap()
}

fn s3_triple() -> GroupTriple {
    let s3 = symmetric(3).unwrap();
    let rotations: Vec<usize> = ["012", "120", "201"]
        .iter()
        .map(|w| s3.resolve(w).unwrap())
        .collect();
    let sub = Subgroup::new(&s3, rotations).unwrap();
    let transversal = vec![s3.resolve("012").unwrap(), s3.resolve("102").unwrap()];
    GroupTriple::new("s3-triple", sub, transversal).unwrap()
}

/// `(s4, <4-cycle>, stab(3))`: the subgroup is generated by the cycle
/// `1230`, the transversal is the copy of `s3` fixing the last letter.
/// Both factors are subgroups meeting only in the identity, so the derived
/// tables carry two genuinely twisted actions with `lambda` trivial.
fn s4_knit_triple() -> GroupTriple {
    let s4 = symmetric(4).unwrap();
    let cycle = s4.resolve("1230").unwrap();
    let mut members = vec![s4.identity()];
    let mut power = cycle;
    while power != s4.identity() {
        members.push(power);
        power = s4.mul(power, cycle);
    }
    members.sort_unstable();
    let sub = Subgroup::new(&s4, members).unwrap();
    let stabilizer: Vec<usize> = (0..s4.order())
        .filter(|&w| s4.element_name(w).ends_with('3'))
        .collect();
    GroupTriple::new("s4-knit-triple", sub, stabilizer).unwrap()
}

/// The triples reachable by name as `builtin:` documents; these also serve
/// as the endpoints of the catalog morphisms.
pub fn named_triples() -> Vec<GroupTriple> {
    vec![
        trivial_triple(),
        z2_triple(),
        z4_triple(),
        z4_triple_alt(),
        z4_full(),
        z8_triple(),
        s3_triple(),
        s4_knit_triple(),
    ]
}

fn direct_product_hypergroup() -> Hypergroup {
    let z2 = cyclic(2).unwrap();
    with_profile(&z2, &z2, Profile::TrivialAll).unwrap()
}

fn inversion_semidirect() -> Hypergroup {
    let h = cyclic(3).unwrap();
    let m = cyclic(2).unwrap();
    let psi = vec![vec![0, 1, 2], vec![0, 2, 1]];
    with_profile(&h, &m, Profile::Semidirect { psi }).unwrap()
}

/// Rebuilds a derived-table hypergroup through the general profile: take a
/// triple whose transversal is itself a subgroup (so `lambda` comes out
/// trivial), read off `phi`/`psi`, and feed them back in over the group
/// `(base, xi)`.
fn knit_from_triple(triple: &GroupTriple, name: &str) -> Hypergroup {
    let raw = standard_construction(triple).unwrap().to_raw();
    let mgroup =
        FiniteGroup::from_table(format!("{name}-base"), raw.base_names.clone(), raw.xi.clone())
            .unwrap();
    let profile = Profile::General {
        phi: raw.phi,
        psi: raw.psi,
    };
    with_profile(&raw.h, &mgroup, profile).unwrap().with_name(name)
}

/// Every built-in hypergroup: one-point stabilizers of all catalog groups
/// plus `s5`, the field and vector-space families, the three product
/// profiles, and three derived-table constructions kept under stable names.
pub fn catalog_hypergroups() -> Vec<Hypergroup> {
    let mut out: Vec<Hypergroup> = catalog_groups().iter().map(from_group).collect();
    out.push(from_group(&symmetric(5).unwrap()));
    for (p, k) in [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2)] {
        out.push(from_field(p, k).unwrap());
    }
    out.push(from_vector_space(3, 2).unwrap());
    out.push(from_vector_space(5, 1).unwrap());
    out.push(direct_product_hypergroup());
    out.push(inversion_semidirect());
    out.push(knit_from_triple(&s3_triple(), "knit-z3-z2"));
    out.push(knit_from_triple(&s4_knit_triple(), "knit-s4"));
    out.push(standard_construction(&z4_triple()).unwrap().with_name("z4-std"));
    out.push(
        standard_construction(&z4_triple_alt())
            .unwrap()
            .with_name("z4-std-alt"),
    );
    out.push(standard_construction(&s3_triple()).unwrap().with_name("s3-std"));
    out
}

fn triple_hom(source: &GroupTriple, target: &GroupTriple, mapping: Vec<usize>) -> TripleMorphism {
    let hom = GroupHom::verified(source.group(), target.group(), mapping).unwrap();
    TripleMorphism::new(source, target, hom).unwrap()
}

/// The catalog's triple morphisms. Several endpoints repeat so that the
/// suite's composability scan finds pairs to run the functor laws on.
pub fn catalog_triple_morphisms() -> Vec<(String, TripleMorphism)> {
    let trivial = trivial_triple();
    let z2t = z2_triple();
    let z4t = z4_triple();
    let z4f = z4_full();
    let z8t = z8_triple();
    let s3t = s3_triple();
    let identity = TripleMorphism::new(&z4t, &z4t, GroupHom::identity(z4t.group())).unwrap();
    vec![
        ("id-z4t".into(), identity),
        ("mod2-z4t-z2t".into(), triple_hom(&z4t, &z2t, vec![0, 1, 0, 1])),
        // s3 elements in lexicographic word order; image is the parity.
        ("sign-s3t-z2t".into(), triple_hom(&s3t, &z2t, vec![0, 1, 1, 0, 0, 1])),
        ("mod4-z8t-z4t".into(), triple_hom(&z8t, &z4f, vec![0, 1, 2, 3, 0, 1, 2, 3])),
        ("mod2-z4full-z2t".into(), triple_hom(&z4f, &z2t, vec![0, 1, 0, 1])),
        ("mod2-z8t-z2t".into(), triple_hom(&z8t, &z2t, vec![0, 1, 0, 1, 0, 1, 0, 1])),
        ("collapse-z4t".into(), triple_hom(&z4t, &trivial, vec![0, 0, 0, 0])),
    ]
}

fn hyp_hom(
    source: &Hypergroup,
    target: &Hypergroup,
    f0: Vec<usize>,
    f1: Vec<usize>,
) -> HypergroupMorphism {
    let f0 = GroupHom::verified(source.h(), target.h(), f0).unwrap();
    HypergroupMorphism::verified(source, target, f0, f1).unwrap()
}

/// The catalog's hypergroup morphisms, again with repeating endpoints for
/// the composability scan.
pub fn catalog_hyp_morphisms() -> Vec<(String, HypergroupMorphism)> {
    let gf5 = from_field(5, 1).unwrap();
    let z2h = from_group(&cyclic(2).unwrap());
    let z4h = from_group(&cyclic(4).unwrap());
    let z8h = from_group(&cyclic(8).unwrap());
    let sd = inversion_semidirect();
    vec![
        ("id-gf5".into(), HypergroupMorphism::identity(&gf5)),
        ("mod2-z4h-z2h".into(), hyp_hom(&z4h, &z2h, vec![0], vec![0, 1, 0, 1])),
        ("mod4-z8h-z4h".into(), hyp_hom(&z8h, &z4h, vec![0], vec![0, 1, 2, 3, 0, 1, 2, 3])),
        ("mod2-z8h-z2h".into(), hyp_hom(&z8h, &z2h, vec![0], vec![0, 1, 0, 1, 0, 1, 0, 1])),
        ("id-sd".into(), HypergroupMorphism::identity(&sd)),
    ]
}

/// The full default suite: the named triples, every enumerated triple,
/// every built-in hypergroup (as raw tables, so validation is itself a
/// suite line), and all catalog morphisms.
pub fn default_catalog() -> SuiteCatalog {
    let mut triples = named_triples();
    triples.extend(catalog_triples());
    SuiteCatalog {
        triples,
        hypergroups: catalog_hypergroups().iter().map(Hypergroup::to_raw).collect(),
        triple_morphisms: catalog_triple_morphisms(),
        hyp_morphisms: catalog_hyp_morphisms(),
    }
}

/// `(kind, name)` for every document reachable through [`builtin`], in
/// listing order.
pub fn builtin_listing() -> Vec<(&'static str, String)> {
    let mut listing: Vec<(&'static str, String)> = builtin_groups()
        .iter()
        .map(|g| ("group", g.name().to_string()))
        .collect();
    listing.extend(named_triples().iter().map(|t| ("triple", t.name().to_string())));
    listing.extend(
        catalog_hypergroups()
            .iter()
            .map(|k| ("hypergroup", k.name().to_string())),
    );
    listing
}

/// Looks a document up by built-in name, searching groups, then triples,
/// then hypergroups.
pub fn builtin(name: &str) -> Option<Document> {
    if let Some(g) = builtin_groups().into_iter().find(|g| g.name() == name) {
        return Some(Document::Group(g));
    }
    if let Some(t) = named_triples().into_iter().find(|t| t.name() == name) {
        return Some(Document::Triple(t));
    }
    catalog_hypergroups()
        .into_iter()
        .find(|k| k.name() == name)
        .map(Document::Hypergroup)
}
