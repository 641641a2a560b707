//! Exhaustive axiom sweeps with full violation reporting.
//!
//! Two sweeps exist: [`check_core`] covers the defining conditions (P1–P3
//! and the coherence identities A1–A5), and [`verify_derived`] covers the
//! six identities A6–A11 that are consequences of the defining ones — on a
//! validated hypergroup they must all pass, and checking them anyway is a
//! useful tripwire.
//!
//! Every axiom is evaluated over every argument tuple even after failures,
//! so perturbation tests can assert that exactly the intended axiom broke.
//! Failures carry the argument tuple and both evaluated sides; per axiom,
//! the first few violations are kept verbatim and the rest only counted.

use std::fmt;

use super::{Hypergroup, RawHypergroup};

/// How many violations per axiom are kept with full detail.
const WITNESS_CAP: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AxiomId {
    /// Left division: for all `a, b` the equation `[x, a] = b` has exactly
    /// one solution (every column of `xi` is a permutation).
    P1i,
    /// A left neutral `o` with `[o, a] = a` exists (unique by P1(i)).
    P1ii,
    /// `(a^α)^β = a^{αβ}`.
    P2i,
    /// `a^ε = a`.
    P2ii,
    /// `α ↦ ^oα` is onto `H`.
    P3,
    /// `^a(αβ) = ^aα · ^{a^α}β`.
    A1,
    /// `[a, b]^α = [a^{^bα}, b^α]`.
    A2,
    /// `(a, b) · ^{[a,b]}α = ^a(^bα) · (a^{^bα}, b^α)`.
    A3,
    /// `[[a, b], c] = [a^{(b,c)}, [b, c]]`.
    A4,
    /// `(a, b) · ([a, b], c) = ^a(b, c) · (a^{(b,c)}, [b, c])`.
    A5,
    /// `^aε = ε`.
    A6,
    /// `o^α = o`.
    A7,
    /// `^oα = θ^{-1} · α · θ`.
    A8,
    /// `(o, a) = θ^{-1}`.
    A9,
    /// `[a, o] = a^{θ^{-1}}`.
    A10,
    /// `(a, o) = ^a(θ^{-1})`.
    A11,
}

impl AxiomId {
    pub const CORE: [AxiomId; 10] = [
        AxiomId::P1i,
        AxiomId::P1ii,
        AxiomId::P2i,
        AxiomId::P2ii,
        AxiomId::P3,
        AxiomId::A1,
        AxiomId::A2,
        AxiomId::A3,
        AxiomId::A4,
        AxiomId::A5,
    ];

    pub const DERIVED: [AxiomId; 6] = [
        AxiomId::A6,
        AxiomId::A7,
        AxiomId::A8,
        AxiomId::A9,
        AxiomId::A10,
        AxiomId::A11,
    ];

    pub fn code(self) -> &'static str {
        match self {
            AxiomId::P1i => "P1(i)",
            AxiomId::P1ii => "P1(ii)",
            AxiomId::P2i => "P2(i)",
            AxiomId::P2ii => "P2(ii)",
            AxiomId::P3 => "P3",
            AxiomId::A1 => "A1",
            AxiomId::A2 => "A2",
            AxiomId::A3 => "A3",
            AxiomId::A4 => "A4",
            AxiomId::A5 => "A5",
            AxiomId::A6 => "A6",
            AxiomId::A7 => "A7",
            AxiomId::A8 => "A8",
            AxiomId::A9 => "A9",
            AxiomId::A10 => "A10",
            AxiomId::A11 => "A11",
        }
    }
}

impl fmt::Display for AxiomId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

/// One failed tuple: the arguments and the two sides that should agree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub axiom: AxiomId,
    pub args: Vec<usize>,
    pub lhs: usize,
    pub rhs: usize,
    /// Extra context when the plain sides would be cryptic.
    pub note: Option<&'static str>,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.axiom)?;
        if !self.args.is_empty() {
            let args: Vec<String> = self.args.iter().map(|a| a.to_string()).collect();
            write!(f, " at ({})", args.join(", "))?;
        }
        write!(f, ": left {}, right {}", self.lhs, self.rhs)?;
        if let Some(note) = self.note {
            write!(f, " ({note})")?;
        }
        Ok(())
    }
}

/// Outcome of sweeping one axiom over all of its argument tuples.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomCheck {
    pub axiom: AxiomId,
    /// Number of argument tuples evaluated.
    pub tuples: usize,
    /// First few violations, in tuple order.
    pub violations: Vec<Violation>,
    /// True violation count (may exceed `violations.len()`).
    pub total_violations: usize,
}

impl AxiomCheck {
    pub fn passed(&self) -> bool {
        self.total_violations == 0
    }
}

impl fmt::Display for AxiomCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            write!(f, "{}: pass ({} tuples)", self.axiom, self.tuples)
        } else {
            write!(
                f,
                "{}: FAIL ({}/{} tuples; first: {})",
                self.axiom, self.total_violations, self.tuples, self.violations[0]
            )
        }
    }
}

/// Per-axiom results of a sweep; answers "all pass?" and keeps witnesses.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomReport {
    checks: Vec<AxiomCheck>,
}

impl AxiomReport {
    pub fn checks(&self) -> &[AxiomCheck] {
        &self.checks
    }

    pub fn check(&self, id: AxiomId) -> Option<&AxiomCheck> {
        self.checks.iter().find(|c| c.axiom == id)
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(AxiomCheck::passed)
    }

    pub fn first_violation(&self) -> Option<&Violation> {
        self.checks.iter().flat_map(|c| c.violations.first()).next()
    }

    /// Concatenates two reports (e.g. core + derived).
    pub fn extend(&mut self, other: AxiomReport) {
        self.checks.extend(other.checks);
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, check) in self.checks.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{check}")?;
        }
        Ok(())
    }
}

/// Accumulates one axiom's sweep.
struct Sweep {
    axiom: AxiomId,
    tuples: usize,
    violations: Vec<Violation>,
    total: usize,
}

impl Sweep {
    fn new(axiom: AxiomId) -> Self {
        Sweep {
            axiom,
            tuples: 0,
            violations: Vec::new(),
            total: 0,
        }
    }

    /// Evaluates one tuple: the two sides must be equal.
    fn observe(&mut self, args: Vec<usize>, lhs: usize, rhs: usize) {
        self.observe_noted(args, lhs, rhs, None);
    }

    fn observe_noted(&mut self, args: Vec<usize>, lhs: usize, rhs: usize, note: Option<&'static str>) {
        self.tuples += 1;
        if lhs != rhs {
            self.violation(args, lhs, rhs, note);
        }
    }

    /// Records a failure without counting an extra tuple (for sweeps whose
    /// tuple count is set explicitly).
    fn violation(&mut self, args: Vec<usize>, lhs: usize, rhs: usize, note: Option<&'static str>) {
        self.total += 1;
        if self.violations.len() < WITNESS_CAP {
            self.violations.push(Violation {
                axiom: self.axiom,
                args,
                lhs,
                rhs,
                note,
            });
        }
    }

    fn finish(self) -> AxiomCheck {
        AxiomCheck {
            axiom: self.axiom,
            tuples: self.tuples,
            violations: self.violations,
            total_violations: self.total,
        }
    }
}

/// Sweeps P1–P3 and A1–A5 over shape-checked raw tables. Every axiom is
/// evaluated in full regardless of earlier failures.
pub(crate) fn check_core(raw: &RawHypergroup) -> AxiomReport {
    let m = raw.base_names.len();
    let hn = raw.h.order();
    let h = &raw.h;
    let eps = h.identity();
    let (phi, psi, xi, lam) = (&raw.phi, &raw.psi, &raw.xi, &raw.lam);

    // P1(i): solution count of [x, a] = b for every (a, b).
    let mut p1i = Sweep::new(AxiomId::P1i);
    for a in 0..m {
        for b in 0..m {
            let solutions = (0..m).filter(|&x| xi[x][a] == b).count();
            p1i.observe_noted(vec![a, b], solutions, 1, Some("solutions of [x, a] = b"));
        }
    }

    // P1(ii): count of left-neutral candidates; records the unique o when
    // it exists so P3 can use it.
    let mut p1ii = Sweep::new(AxiomId::P1ii);
    let neutrals: Vec<usize> = (0..m)
        .filter(|&x| (0..m).all(|a| xi[x][a] == a))
        .collect();
    p1ii.tuples = m;
    if neutrals.len() != 1 {
        p1ii.violation(vec![], neutrals.len(), 1, Some("left-neutral candidates"));
    }
    let o = (neutrals.len() == 1).then(|| neutrals[0]);

    let mut p2i = Sweep::new(AxiomId::P2i);
    let mut p2ii = Sweep::new(AxiomId::P2ii);
    for a in 0..m {
        for alpha in 0..hn {
            for beta in 0..hn {
                p2i.observe(
                    vec![a, alpha, beta],
                    phi[phi[a][alpha]][beta],
                    phi[a][h.mul(alpha, beta)],
                );
            }
        }
        p2ii.observe(vec![a], phi[a][eps], a);
    }

    // P3: is α ↦ ^oα onto H?
    let mut p3 = Sweep::new(AxiomId::P3);
    match o {
        Some(o) => {
            let mut hit = vec![false; hn];
            for alpha in 0..hn {
                hit[psi[o][alpha]] = true;
            }
            p3.tuples = hn;
            for (alpha, &was_hit) in hit.iter().enumerate() {
                if !was_hit {
                    p3.violation(vec![alpha], 0, 1, Some("times hit by α ↦ ^oα"));
                }
            }
        }
        None => p3.observe_noted(vec![], 0, 1, Some("not evaluable: no unique left neutral")),
    }

    let mut a1 = Sweep::new(AxiomId::A1);
    for a in 0..m {
        for alpha in 0..hn {
            for beta in 0..hn {
                let lhs = psi[a][h.mul(alpha, beta)];
                let rhs = h.mul(psi[a][alpha], psi[phi[a][alpha]][beta]);
                a1.observe(vec![a, alpha, beta], lhs, rhs);
            }
        }
    }

    let mut a2 = Sweep::new(AxiomId::A2);
    let mut a3 = Sweep::new(AxiomId::A3);
    for a in 0..m {
        for b in 0..m {
            for alpha in 0..hn {
                let lhs2 = phi[xi[a][b]][alpha];
                let rhs2 = xi[phi[a][psi[b][alpha]]][phi[b][alpha]];
                a2.observe(vec![a, b, alpha], lhs2, rhs2);

                let lhs3 = h.mul(lam[a][b], psi[xi[a][b]][alpha]);
                let rhs3 = h.mul(
                    psi[a][psi[b][alpha]],
                    lam[phi[a][psi[b][alpha]]][phi[b][alpha]],
                );
                a3.observe(vec![a, b, alpha], lhs3, rhs3);
            }
        }
    }

    let mut a4 = Sweep::new(AxiomId::A4);
    let mut a5 = Sweep::new(AxiomId::A5);
    for a in 0..m {
        for b in 0..m {
            for c in 0..m {
                let lhs4 = xi[xi[a][b]][c];
                let rhs4 = xi[phi[a][lam[b][c]]][xi[b][c]];
                a4.observe(vec![a, b, c], lhs4, rhs4);

                let lhs5 = h.mul(lam[a][b], lam[xi[a][b]][c]);
                let rhs5 = h.mul(psi[a][lam[b][c]], lam[phi[a][lam[b][c]]][xi[b][c]]);
                a5.observe(vec![a, b, c], lhs5, rhs5);
            }
        }
    }

    AxiomReport {
        checks: vec![
            p1i.finish(),
            p1ii.finish(),
            p2i.finish(),
            p2ii.finish(),
            p3.finish(),
            a1.finish(),
            a2.finish(),
            a3.finish(),
            a4.finish(),
            a5.finish(),
        ],
    }
}

/// Sweeps the derived identities A6–A11 on a validated hypergroup. These
/// follow from the defining axioms, so any violation indicates a bug.
pub fn verify_derived(k: &Hypergroup) -> AxiomReport {
    let m = k.base_size();
    let hn = k.h().order();
    let h = k.h();
    let eps = k.epsilon();
    let o = k.o();
    let theta = k.theta();
    let theta_inv = h.inverse(theta);

    let mut a6 = Sweep::new(AxiomId::A6);
    let mut a9 = Sweep::new(AxiomId::A9);
    let mut a10 = Sweep::new(AxiomId::A10);
    let mut a11 = Sweep::new(AxiomId::A11);
    for a in 0..m {
        a6.observe(vec![a], k.psi(a, eps), eps);
        a9.observe(vec![a], k.lam(o, a), theta_inv);
        a10.observe(vec![a], k.xi(a, o), k.phi(a, theta_inv));
        a11.observe(vec![a], k.lam(a, o), k.psi(a, theta_inv));
    }

    let mut a7 = Sweep::new(AxiomId::A7);
    let mut a8 = Sweep::new(AxiomId::A8);
    for alpha in 0..hn {
        a7.observe(vec![alpha], k.phi(o, alpha), o);
        a8.observe(
            vec![alpha],
            k.psi(o, alpha),
            h.mul(h.mul(theta_inv, alpha), theta),
        );
    }

    AxiomReport {
        checks: vec![
            a6.finish(),
            a7.finish(),
            a8.finish(),
            a9.finish(),
            a10.finish(),
            a11.finish(),
        ],
    }
}
