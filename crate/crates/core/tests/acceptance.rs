//! End-to-end acceptance checks over the full built-in catalog. Each test
//! covers one criterion and prints a single `criterion N PASS/FAIL` line
//! (visible with `cargo test --test acceptance -- --nocapture`).

use std::panic::catch_unwind;
use std::sync::OnceLock;
use std::time::Instant;

use hyperg::catalog::{catalog_hypergroups, catalog_triples, default_catalog};
use hyperg::equivalence::{
    check_counit_naturality, check_unit_naturality, counit_iso, division_oracle, exact_product,
    standard_construction, unit_iso, SuiteCatalog,
};
use hyperg::group::{cyclic, direct_product, right_cosets, symmetric, Subgroup};
use hyperg::hypergroup::{verify_derived, AxiomId, Hypergroup, HypergroupMorphism, RawHypergroup};
use hyperg::triple::{is_right_transversal, GroupTriple, TransversalIter, TripleMorphism};
use hyperg::{FiniteGroup, HypergroupError};

static CATALOG: OnceLock<SuiteCatalog> = OnceLock::new();
static VALIDATED: OnceLock<Vec<Hypergroup>> = OnceLock::new();

fn catalog() -> &'static SuiteCatalog {
    CATALOG.get_or_init(default_catalog)
}

/// Every catalog hypergroup, validated once. Criterion 2 checks the raw
/// tables itself; the rest start from these.
fn hypergroups() -> &'static [Hypergroup] {
    VALIDATED.get_or_init(catalog_hypergroups)
}

fn criterion(n: usize, label: &str, body: impl FnOnce() + std::panic::UnwindSafe) {
    let outcome = catch_unwind(body);
    println!(
        "criterion {n:2} {} {label}",
        if outcome.is_ok() { "PASS" } else { "FAIL" }
    );
    if let Err(cause) = outcome {
        std::panic::resume_unwind(cause);
    }
}

#[test]
fn criterion_01_derived_tables_from_every_triple_are_lawful() {
    criterion(1, "every catalog triple derives a lawful hypergroup", || {
        let started = Instant::now();
        let triples = &catalog().triples;
        assert!(triples.len() >= 60, "catalog has only {} triples", triples.len());

        // Parent-group coverage: all cyclic orders up to 12, four dihedral
        // groups, two symmetric groups, the quaternion group, Klein four.
        for family in [
            "z1-", "z2-", "z3-", "z4-", "z5-", "z6-", "z7-", "z8-", "z9-", "z10-", "z11-",
            "z12-", "d3-", "d4-", "d5-", "d6-", "s3-", "s4-", "q8-", "klein-",
        ] {
            assert!(
                triples.iter().any(|t| t.name().starts_with(family)),
                "no triples for parent {family}"
            );
        }

        // Transversal coverage per subgroup: whenever more than one
        // transversal exists the catalog carries an identity-free one, and
        // proper subgroups of order >= 2 come in >= 3 variants.
        let enumerated = catalog_triples();
        let mut by_subgroup: Vec<(String, Vec<&GroupTriple>)> = Vec::new();
        for t in &enumerated {
            let stem = t.name().rsplit_once("-t").expect("variant suffix").0.to_string();
            match by_subgroup.iter_mut().find(|(s, _)| *s == stem) {
                Some((_, list)) => list.push(t),
                None => by_subgroup.push((stem, vec![t])),
            }
        }
        for (stem, variants) in &by_subgroup {
            let first = variants[0];
            let order = first.subgroup().order();
            let full = first.group().order();
            if order >= 2 && order < full {
                assert!(variants.len() >= 3, "{stem}: only {} transversals", variants.len());
            }
            if order >= 2 {
                let identity = first.group().identity();
                assert!(
                    variants.iter().any(|t| !t.transversal().contains(&identity)),
                    "{stem}: no identity-free transversal"
                );
            }
        }

        for t in triples {
            standard_construction(t)
                .unwrap_or_else(|e| panic!("{} does not derive: {e}", t.name()));
        }
        let elapsed = started.elapsed();
        assert!(elapsed.as_secs() < 60, "derivation sweep took {elapsed:?}");
    });
}

#[test]
fn criterion_02_consequence_properties_hold_for_every_hypergroup() {
    criterion(2, "A6-A11 hold on every catalog hypergroup", || {
        let raws = &catalog().hypergroups;
        // Family coverage: group-induced, field, vector-space, and all
        // three product profiles.
        for name in [
            "z12-hyp", "klein-hyp", "s5-hyp", "gf2", "gf3", "gf4", "gf5", "gf7", "gf8", "gf9",
            "vs3-2", "vs5-1", "dp-z2-z2", "sd-z3-z2", "knit-z3-z2", "knit-s4", "z4-std",
            "z4-std-alt", "s3-std",
        ] {
            assert!(raws.iter().any(|raw| raw.name == name), "missing {name}");
        }
        for raw in raws {
            let k = Hypergroup::validate(raw.clone())
                .unwrap_or_else(|e| panic!("{} invalid: {e}", raw.name));
            let report = verify_derived(&k);
            assert!(
                report.passed(),
                "{}: {:?}",
                k.name(),
                report.first_violation()
            );
        }
    });
}

#[test]
fn criterion_03_word_products_form_groups_with_closed_form_division() {
    criterion(3, "every word table is a group; division in closed form", || {
        for k in hypergroups() {
            let ep = exact_product(k).unwrap_or_else(|e| panic!("{}: {e}", k.name()));
            let g = ep.group();
            assert_eq!(
                g.identity(),
                ep.identity_word(),
                "{}: identity is not theta-o",
                k.name()
            );
            for target in 0..g.order() {
                for right in 0..g.order() {
                    let scan: Vec<usize> =
                        (0..g.order()).filter(|&x| g.mul(x, right) == target).collect();
                    assert_eq!(
                        scan,
                        [ep.left_divide_word(target, right)],
                        "{}: division mismatch at ({target}, {right})",
                        k.name()
                    );
                }
            }
        }
    });
}

#[test]
fn criterion_04_every_triple_comes_back_from_its_word_group() {
    criterion(4, "counit: derive-then-multiply recovers each group", || {
        for t in &catalog().triples {
            let morphism = counit_iso(t).unwrap_or_else(|e| panic!("{}: {e}", t.name()));
            assert!(morphism.hom().is_bijective(), "{}", t.name());
        }
        // Spot censuses: the rebuilt groups have the right element orders.
        let z4 = counit_iso(&z4_triple()).unwrap();
        assert_eq!(z4.target().group().order_census(), [(1, 1), (2, 1), (4, 2)]);
        let s3 = counit_iso(&s3_triple()).unwrap();
        assert_eq!(s3.target().group().order_census(), [(1, 1), (2, 3), (3, 2)]);
        assert!(!s3.target().group().is_abelian());
    });
}

#[test]
fn criterion_05_every_hypergroup_comes_back_from_its_word_group() {
    criterion(5, "unit: multiply-then-derive recovers each hypergroup", || {
        for k in hypergroups() {
            let morphism = unit_iso(k).unwrap_or_else(|e| panic!("{}: {e}", k.name()));
            assert!(morphism.is_bijective(), "{}", k.name());
            // The generating word identity behind it, checked directly:
            // every two-letter word is the product of its letter images.
            let ep = exact_product(k).unwrap();
            let g = ep.group();
            for alpha in 0..k.h().order() {
                for a in 0..k.base_size() {
                    assert_eq!(
                        g.mul(ep.h_bar()[alpha], ep.m_bar()[a]),
                        ep.word(alpha, a),
                        "{}: word ({alpha}, {a}) does not factor",
                        k.name()
                    );
                }
            }
        }
    });
}

#[test]
fn criterion_06_naturality_squares_commute_for_all_morphisms() {
    criterion(6, "both naturality squares, morphism catalog with composites", || {
        let catalog = catalog();
        let mut triple_morphisms: Vec<(String, TripleMorphism)> =
            catalog.triple_morphisms.clone();
        let mut hyp_morphisms: Vec<(String, HypergroupMorphism)> = catalog.hyp_morphisms.clone();

        // Close the catalogs under one round of composition.
        let base = triple_morphisms.clone();
        for (n1, g1) in &base {
            for (n2, g2) in &base {
                if g1.target() == g2.source() {
                    let hom = g1.hom().then(g2.hom()).unwrap();
                    let composed = TripleMorphism::new(g1.source(), g2.target(), hom).unwrap();
                    triple_morphisms.push((format!("{n1}>{n2}"), composed));
                }
            }
        }
        let base = hyp_morphisms.clone();
        for (n1, f1) in &base {
            for (n2, f2) in &base {
                if f1.target() == f2.source() {
                    hyp_morphisms.push((format!("{n1}>{n2}"), f1.then(f2).unwrap()));
                }
            }
        }
        assert!(triple_morphisms.len() + hyp_morphisms.len() >= 10);
        let has = |needle: &str| {
            triple_morphisms.iter().any(|(n, _)| n == needle)
                || hyp_morphisms.iter().any(|(n, _)| n == needle)
        };
        for needle in ["id-z4t", "id-gf5", "mod2-z4t-z2t", "mod2-z4h-z2h", "sign-s3t-z2t"] {
            assert!(has(needle), "missing {needle}");
        }
        assert!(
            triple_morphisms.len() > catalog.triple_morphisms.len(),
            "no triple composites"
        );
        assert!(hyp_morphisms.len() > catalog.hyp_morphisms.len(), "no hyp composites");

        for (name, g) in &triple_morphisms {
            check_counit_naturality(g).unwrap_or_else(|e| panic!("{name}: {e}"));
        }
        for (name, f) in &hyp_morphisms {
            check_unit_naturality(f).unwrap_or_else(|e| panic!("{name}: {e}"));
        }
    });
}

#[test]
fn criterion_07_product_profiles_match_independent_constructions() {
    criterion(7, "direct/semidirect/knit products against hand-built tables", || {
        let by_name = |name: &str| {
            hypergroups()
                .iter()
                .find(|k| k.name() == name)
                .unwrap_or_else(|| panic!("{name} missing"))
        };

        // Trivial profile: the word table is the direct-product table,
        // cell for cell under the shared pair indexing.
        let dp = exact_product(by_name("dp-z2-z2")).unwrap();
        let z2 = cyclic(2).unwrap();
        let reference = direct_product(&z2, &z2).unwrap();
        assert!(dp.group().same_table(&reference), "dp table differs");

        // Action-only profile: rebuild the semidirect table from nothing
        // but the two cyclic groups and the inversion action.
        let sd = exact_product(by_name("sd-z3-z2")).unwrap();
        let h = cyclic(3).unwrap();
        let m = cyclic(2).unwrap();
        let action = [[0, 1, 2], [0, 2, 1]]; // psi(a, beta): how M twists H
        let rows: Vec<Vec<usize>> = (0..6)
            .map(|x| {
                let (alpha, a) = (x / 2, x % 2);
                (0..6)
                    .map(|y| {
                        let (beta, b) = (y / 2, y % 2);
                        h.mul(alpha, action[a][beta]) * 2 + m.mul(a, b)
                    })
                    .collect()
            })
            .collect();
        for x in 0..6 {
            assert_eq!(sd.group().row(x), rows[x], "sd row {x} differs");
        }

        // Every lambda-trivial instance is an internal product: the base
        // with xi is a group, and the two embedded copies intersect only
        // in the identity while their products exhaust the word group.
        let mut lambda_trivial = 0;
        for k in hypergroups() {
            let m = k.base_size();
            let trivial = (0..m).all(|a| (0..m).all(|b| k.lam(a, b) == k.epsilon()));
            if !trivial {
                continue;
            }
            lambda_trivial += 1;
            let xi_rows: Vec<Vec<usize>> = (0..m)
                .map(|a| (0..m).map(|b| k.xi(a, b)).collect())
                .collect();
            let base_group = FiniteGroup::from_table(
                format!("{}-base", k.name()),
                (0..m).map(|a| k.base_name(a).to_string()).collect(),
                xi_rows,
            )
            .unwrap_or_else(|e| panic!("{}: (M, xi) is not a group: {e}", k.name()));
            assert_eq!(base_group.identity(), k.o());

            let ep = exact_product(k).unwrap();
            let g = ep.group();
            let shared: Vec<usize> = ep
                .h_bar()
                .iter()
                .filter(|w| ep.m_bar().contains(w))
                .copied()
                .collect();
            assert_eq!(shared, [g.identity()], "{}: embeddings overlap", k.name());
            let mut covered = vec![false; g.order()];
            for &hw in ep.h_bar() {
                for &mw in ep.m_bar() {
                    covered[g.mul(hw, mw)] = true;
                }
            }
            assert!(covered.iter().all(|&c| c), "{}: H-bar * M-bar misses words", k.name());
        }
        assert!(lambda_trivial >= 4, "only {lambda_trivial} lambda-trivial instances");
        assert!(by_name("knit-s4").base_size() == 6);
    });
}

#[test]
fn criterion_08_division_oracle_agrees_with_the_derived_tables() {
    criterion(8, "coset division oracle equals left division everywhere", || {
        for t in &catalog().triples {
            let k = standard_construction(t).unwrap();
            let m = k.base_size();
            for b in 0..m {
                for a in 0..m {
                    assert_eq!(
                        division_oracle(t, b, a),
                        k.left_divide(b, a),
                        "{} at ({b}, {a})",
                        t.name()
                    );
                }
            }
        }
    });
}

#[test]
fn criterion_09_transversal_counts_match_the_formula() {
    criterion(9, "transversal enumeration: |H|^(number of cosets), all valid", || {
        // Formula check across every subgroup of every catalog group.
        for t in &catalog().triples {
            let g = t.group();
            let sub = t.subgroup();
            let cosets = right_cosets(g, sub).len();
            let expected = (sub.order() as u128).pow(cosets as u32);
            assert_eq!(
                TransversalIter::count_total(g, sub),
                Some(expected),
                "{}",
                t.name()
            );
        }

        // Exhaustive enumeration on the small named cases, each candidate
        // re-validated from scratch.
        let z4 = cyclic(4).unwrap();
        let even = Subgroup::new(&z4, vec![0, 2]).unwrap();
        let all: Vec<Vec<usize>> = TransversalIter::new(&z4, &even).collect();
        assert_eq!(all.len(), 4);
        for candidate in &all {
            is_right_transversal(&even, candidate).unwrap();
        }

        let s3 = symmetric(3).unwrap();
        let flip = Subgroup::new(&s3, vec![0, s3.resolve("102").unwrap()]).unwrap();
        let all: Vec<Vec<usize>> = TransversalIter::new(&s3, &flip).collect();
        assert_eq!(all.len(), 8);
        let mut distinct = all.clone();
        distinct.sort();
        distinct.dedup();
        assert_eq!(distinct.len(), 8);
        for candidate in &all {
            is_right_transversal(&flip, candidate).unwrap();
        }
    });
}

/// Single-cell edits of a raw hypergroup, each yielding a fresh raw.
fn single_cell_edits(raw: &RawHypergroup) -> Vec<RawHypergroup> {
    let m = raw.base_names.len();
    let hn = raw.h.order();
    let mut edits = Vec::new();
    let tables: [(&str, usize); 4] = [("phi", m), ("psi", hn), ("xi", m), ("lam", hn)];
    for (table, range) in tables {
        let rows = match table {
            "phi" => &raw.phi,
            "psi" => &raw.psi,
            "xi" => &raw.xi,
            _ => &raw.lam,
        };
        for (i, row) in rows.iter().enumerate() {
            for (j, &cell) in row.iter().enumerate() {
                for value in 0..range {
                    if value == cell {
                        continue;
                    }
                    let mut edited = raw.clone();
                    match table {
                        "phi" => edited.phi[i][j] = value,
                        "psi" => edited.psi[i][j] = value,
                        "xi" => edited.xi[i][j] = value,
                        _ => edited.lam[i][j] = value,
                    }
                    edits.push(edited);
                }
            }
        }
    }
    edits
}

#[test]
fn criterion_10_negative_controls_and_exit_codes() {
    criterion(10, "single-cell corruptions fail each axiom; CLI exit codes", || {
        // For each core axiom, some one-cell edit of some catalog
        // hypergroup makes exactly that check report violations, and
        // validation rejects the edit.
        let pool: Vec<&Hypergroup> = ["sd-z3-z2", "gf5", "z4-std-alt", "knit-s4"]
            .into_iter()
            .map(|name| {
                hypergroups()
                    .iter()
                    .find(|k| k.name() == name)
                    .unwrap_or_else(|| panic!("{name} missing"))
            })
            .collect();
        for axiom in [AxiomId::A1, AxiomId::A2, AxiomId::A3, AxiomId::A4, AxiomId::A5] {
            let mut witness = None;
            'search: for k in &pool {
                for edited in single_cell_edits(&k.to_raw()) {
                    let report = edited.axiom_report().unwrap();
                    if !report.check(axiom).unwrap().passed() {
                        assert!(
                            matches!(
                                Hypergroup::validate(edited.clone()),
                                Err(HypergroupError::Axioms(_))
                            ),
                            "{}: edit fails {axiom} but validates",
                            k.name()
                        );
                        witness = Some(k.name().to_string());
                        break 'search;
                    }
                }
            }
            assert!(witness.is_some(), "no single-cell edit breaks {axiom}");
        }

        // Exit-code contract: all-pass 0, reported FAIL 1, unusable 2.
        let run = |args: &[&str]| -> (i32, String, String) {
            let mut out = Vec::new();
            let mut err = Vec::new();
            let code = hyperg::cli::run(
                args.iter().map(|s| s.to_string()),
                &mut out,
                &mut err,
            );
            (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
        };

        let (code, out, _) = run(&["hg", "validate", "builtin:z4-std"]);
        assert_eq!(code, 0, "{out}");
        assert!(out.contains("PASS"));

        let dir = tempfile::tempdir().unwrap();
        let corrupted = dir.path().join("broken.hyp");
        let mut raw = hypergroups()
            .iter()
            .find(|k| k.name() == "sd-z3-z2")
            .unwrap()
            .to_raw();
        raw.psi[1][1] = 1; // single cell: the inversion action loses a value
        std::fs::write(&corrupted, emit_raw(&raw)).unwrap();
        let (code, out, err) = run(&["hg", "validate", corrupted.to_str().unwrap()]);
        assert_eq!(code, 1, "stdout: {out}\nstderr: {err}");
        assert!(out.contains("FAIL"), "no FAIL line in: {out}");

        let (code, _, _) = run(&["hg", "validate", "/no/such/file.grp"]);
        assert_eq!(code, 2);
        let (code, _, _) = run(&["hg", "frobnicate"]);
        assert_eq!(code, 2);
    });
}

/// Raw tables as document text, bypassing validation (the document layer
/// only emits lawful hypergroups, and these are deliberately broken).
fn emit_raw(raw: &RawHypergroup) -> String {
    use std::fmt::Write;
    let mut out = String::new();
    writeln!(out, "hypergroup {}", raw.name).unwrap();
    writeln!(out, "base {} {}", raw.base_names.len(), raw.base_names.join(" ")).unwrap();
    writeln!(out, "group {}", raw.h.name()).unwrap();
    writeln!(out, "order {}", raw.h.order()).unwrap();
    writeln!(out, "elements {}", raw.h.elements().join(" ")).unwrap();
    writeln!(out, "table").unwrap();
    for i in 0..raw.h.order() {
        let row: Vec<String> = raw.h.row(i).iter().map(usize::to_string).collect();
        writeln!(out, "{}", row.join(" ")).unwrap();
    }
    writeln!(out, "end").unwrap();
    for (keyword, rows) in [("phi", &raw.phi), ("psi", &raw.psi), ("xi", &raw.xi), ("lambda", &raw.lam)] {
        writeln!(out, "{keyword}").unwrap();
        for row in rows {
            let cells: Vec<String> = row.iter().map(usize::to_string).collect();
            writeln!(out, "{}", cells.join(" ")).unwrap();
        }
    }
    writeln!(out, "end").unwrap();
    out
}

fn z4_triple() -> GroupTriple {
    let z4 = cyclic(4).unwrap();
    let sub = Subgroup::new(&z4, vec![0, 2]).unwrap();
    GroupTriple::new("z4-triple", sub, vec![0, 1]).unwrap()
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
