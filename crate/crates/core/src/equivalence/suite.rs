//! Whole-catalog verification: every construction, isomorphism, naturality
//! square, and functor law, reported line by line without ever aborting.

use std::fmt;

use crate::hypergroup::{verify_derived, Hypergroup, HypergroupMorphism, RawHypergroup};
use crate::triple::{GroupTriple, TripleMorphism};

use super::{
    check_counit_naturality, check_unit_naturality, counit_iso, division_oracle, exact_product,
    functor_h_on_morphism, functor_t_on_morphism, standard_construction, unit_iso, ExactProduct,
};

/// Everything [`equivalence_suite`] runs over.
///
/// Hypergroups are carried as raw tables: validating them is itself one of
/// the suite's checks, so a corrupted entry fails its `validate` line (and
/// skips that item's downstream checks) instead of preventing the catalog
/// from being built at all.
#[derive(Debug, Clone, Default)]
pub struct SuiteCatalog {
    pub triples: Vec<GroupTriple>,
    pub hypergroups: Vec<RawHypergroup>,
    pub triple_morphisms: Vec<(String, TripleMorphism)>,
    pub hyp_morphisms: Vec<(String, HypergroupMorphism)>,
}

/// One `<item> <check>` outcome.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteLine {
    pub item: String,
    pub check: &'static str,
    pub pass: bool,
    pub witness: Option<String>,
}

impl fmt::Display for SuiteLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {} {}",
            self.item,
            self.check,
            if self.pass { "PASS" } else { "FAIL" }
        )?;
        if let Some(witness) = &self.witness {
            // Witnesses may quote multi-line reports; the suite output stays
            // one line per check.
            write!(f, " {}", witness.replace('\n', "; "))?;
        }
        Ok(())
    }
}

/// Line-oriented results plus per-check and total summaries.
#[derive(Debug, Clone, Default)]
pub struct SuiteReport {
    lines: Vec<SuiteLine>,
}

impl SuiteReport {
    fn record(&mut self, item: &str, check: &'static str, outcome: Result<(), String>) {
        self.lines.push(SuiteLine {
            item: item.to_string(),
            check,
            pass: outcome.is_ok(),
            witness: outcome.err(),
        });
    }

    pub fn lines(&self) -> &[SuiteLine] {
        &self.lines
    }

    pub fn passed(&self) -> bool {
        self.lines.iter().all(|line| line.pass)
    }

    /// `(pass, fail)` counts over all lines.
    pub fn totals(&self) -> (usize, usize) {
        let pass = self.lines.iter().filter(|line| line.pass).count();
        (pass, self.lines.len() - pass)
    }

    /// Check identifiers in first-appearance order.
    fn check_ids(&self) -> Vec<&'static str> {
        let mut ids = Vec::new();
        for line in &self.lines {
            if !ids.contains(&line.check) {
                ids.push(line.check);
            }
        }
        ids
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for line in &self.lines {
            writeln!(f, "{line}")?;
        }
        for id in self.check_ids() {
            let pass = self
                .lines
                .iter()
                .filter(|l| l.check == id && l.pass)
                .count();
            let fail = self
                .lines
                .iter()
                .filter(|l| l.check == id && !l.pass)
                .count();
            writeln!(f, "summary {id} pass={pass} fail={fail}")?;
        }
        let (pass, fail) = self.totals();
        writeln!(f, "summary total pass={pass} fail={fail}")
    }
}

/// Runs every check on every catalog item. Items are independent; a failure
/// is recorded and the suite moves on. For a hypergroup whose tables fail
/// validation only the `validate` line is emitted, since nothing downstream
/// is defined for it.
pub fn equivalence_suite(catalog: &SuiteCatalog) -> SuiteReport {
    let mut report = SuiteReport::default();

    for t in &catalog.triples {
        let item = t.name().to_string();
        match standard_construction(t) {
            Ok(k) => {
                report.record(&item, "std-construction", Ok(()));
                report.record(&item, "derived-props", derived_outcome(&k));
                report.record(&item, "division-oracle", division_outcome(t, &k));
                report.record(
                    &item,
                    "counit",
                    counit_iso(t).map(|_| ()).map_err(|e| e.to_string()),
                );
            }
            Err(e) => report.record(&item, "std-construction", Err(e.to_string())),
        }
    }

    for raw in &catalog.hypergroups {
        let item = raw.name.clone();
        let k = match Hypergroup::validate(raw.clone()) {
            Ok(k) => {
                report.record(&item, "validate", Ok(()));
                k
            }
            Err(e) => {
                report.record(&item, "validate", Err(e.to_string()));
                continue;
            }
        };
        match exact_product(&k) {
            Ok(ep) => {
                report.record(&item, "exact-product", Ok(()));
                report.record(&item, "word-division", word_division_outcome(&ep));
            }
            Err(e) => report.record(&item, "exact-product", Err(e.to_string())),
        }
        report.record(
            &item,
            "unit",
            unit_iso(&k).map(|_| ()).map_err(|e| e.to_string()),
        );
        report.record(&item, "derived-props", derived_outcome(&k));
    }

    for (name, g) in &catalog.triple_morphisms {
        report.record(
            name,
            "functor-h",
            functor_h_on_morphism(g).map(|_| ()).map_err(|e| e.to_string()),
        );
        report.record(
            name,
            "counit-naturality",
            check_counit_naturality(g).map_err(|e| e.to_string()),
        );
    }

    for (name, f) in &catalog.hyp_morphisms {
        report.record(
            name,
            "functor-t",
            functor_t_on_morphism(f).map(|_| ()).map_err(|e| e.to_string()),
        );
        report.record(
            name,
            "unit-naturality",
            check_unit_naturality(f).map_err(|e| e.to_string()),
        );
    }

    for (ni, gi) in &catalog.triple_morphisms {
        for (nj, gj) in &catalog.triple_morphisms {
            if gi.target() == gj.source() {
                let item = format!("{ni}>{nj}");
                report.record(&item, "functor-compose", triple_compose_outcome(gi, gj));
            }
        }
    }
    for (ni, fi) in &catalog.hyp_morphisms {
        for (nj, fj) in &catalog.hyp_morphisms {
            if fi.target() == fj.source() {
                let item = format!("{ni}>{nj}");
                report.record(&item, "functor-compose", hyp_compose_outcome(fi, fj));
            }
        }
    }

    report
}

fn derived_outcome(k: &Hypergroup) -> Result<(), String> {
    let report = verify_derived(k);
    if report.passed() {
        Ok(())
    } else {
        Err(report
            .first_violation()
            .map(|v| v.to_string())
            .unwrap_or_else(|| "derived sweep failed without a witness".into()))
    }
}

fn division_outcome(t: &GroupTriple, k: &Hypergroup) -> Result<(), String> {
    for b in 0..k.base_size() {
        for a in 0..k.base_size() {
            let oracle = division_oracle(t, b, a);
            let table = k.left_divide(b, a);
            if oracle != table {
                return Err(format!(
                    "at (b, a) = ({b}, {a}): coset oracle {oracle}, table division {table}"
                ));
            }
        }
    }
    Ok(())
}

fn word_division_outcome(ep: &ExactProduct) -> Result<(), String> {
    let n = ep.group().order();
    for target in 0..n {
        for right in 0..n {
            let closed = ep.left_divide_word(target, right);
            let scan: Vec<usize> = (0..n)
                .filter(|&w| ep.group().mul(w, right) == target)
                .collect();
            if scan != [closed] {
                return Err(format!(
                    "dividing word {target} by {right}: closed form {closed}, scan {scan:?}"
                ));
            }
        }
    }
    Ok(())
}

/// Functor law on a composable pair: `H(g1 then g2)` must equal
/// `H(g1) then H(g2)` in both components.
fn triple_compose_outcome(g1: &TripleMorphism, g2: &TripleMorphism) -> Result<(), String> {
    let err = |e: &dyn fmt::Display| e.to_string();
    let hom = g1.hom().then(g2.hom()).map_err(|e| err(&e))?;
    let composite = TripleMorphism::new(g1.source(), g2.target(), hom).map_err(|e| err(&e))?;
    let image_of_composite = functor_h_on_morphism(&composite).map_err(|e| err(&e))?;
    let h1 = functor_h_on_morphism(g1).map_err(|e| err(&e))?;
    let h2 = functor_h_on_morphism(g2).map_err(|e| err(&e))?;
    let composed_images = h1.then(&h2).map_err(|e| err(&e))?;
    if image_of_composite.f0().mapping() != composed_images.f0().mapping() {
        return Err("H of the composite differs from the composite of images on f0".into());
    }
    if image_of_composite.f1() != composed_images.f1() {
        return Err("H of the composite differs from the composite of images on f1".into());
    }
    Ok(())
}

/// Functor law on a composable pair: `T(f1 then f2)` must equal
/// `T(f1) then T(f2)` on every word.
fn hyp_compose_outcome(f1: &HypergroupMorphism, f2: &HypergroupMorphism) -> Result<(), String> {
    let err = |e: &dyn fmt::Display| e.to_string();
    let composite = f1.then(f2).map_err(|e| err(&e))?;
    let image_of_composite = functor_t_on_morphism(&composite).map_err(|e| err(&e))?;
    let t1 = functor_t_on_morphism(f1).map_err(|e| err(&e))?;
    let t2 = functor_t_on_morphism(f2).map_err(|e| err(&e))?;
    let composed_images = t1.hom().then(t2.hom()).map_err(|e| err(&e))?;
    if image_of_composite.hom().mapping() != composed_images.mapping() {
        return Err("T of the composite differs from the composite of images".into());
    }
    Ok(())
}
