//! Morphisms of hypergroups: a pair `(f0, f1)` with `f0` a homomorphism of
//! the underlying groups and `f1` a map of base sets, jointly preserving
//! all four structural mappings.

use std::fmt;

use thiserror::Error;

use crate::group::{GroupHom, HomViolation};

use super::Hypergroup;

/// The four preservation conditions, plus two consequences that are
/// asserted as tripwires on accepted morphisms.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MorphCondition {
    /// `f1(a^α) = f1(a)^{f0(α)}`.
    MPhi,
    /// `f0(^aα) = ^{f1(a)}f0(α)`.
    MPsi,
    /// `f1([a, b]) = [f1(a), f1(b)]`.
    MXi,
    /// `f0((a, b)) = (f1(a), f1(b))`.
    MLam,
    /// `f1(o) = o'` — forced once the four conditions hold.
    Neutral,
    /// `f0(θ) = θ'` — likewise forced.
    Theta,
}

impl fmt::Display for MorphCondition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MorphCondition::MPhi => "MΦ",
            MorphCondition::MPsi => "MΨ",
            MorphCondition::MXi => "MΞ",
            MorphCondition::MLam => "MΛ",
            MorphCondition::Neutral => "f1(o) = o'",
            MorphCondition::Theta => "f0(θ) = θ'",
        })
    }
}

/// First failed condition with its argument tuple and both sides.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{condition} violated at ({}): left {lhs}, right {rhs}", args.iter().map(|a| a.to_string()).collect::<Vec<_>>().join(", "))]
pub struct MorphismViolation {
    pub condition: MorphCondition,
    pub args: Vec<usize>,
    pub lhs: usize,
    pub rhs: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HypMorphismError {
    #[error("f0 connects the wrong groups (expected the source and target H)")]
    F0Mismatch,
    #[error("f0 is not a homomorphism: {0}")]
    F0NotHom(#[from] HomViolation),
    #[error("f1 has {got} entries for a base of size {expected}")]
    WrongLength { expected: usize, got: usize },
    #[error("f1 sends {index} to {image}, outside the target base of size {size}")]
    ImageOutOfRange { index: usize, image: usize, size: usize },
    #[error("cannot compose: intermediate hypergroups differ ({left} vs {right})")]
    SourceTargetMismatch { left: String, right: String },
    #[error(transparent)]
    Violated(#[from] MorphismViolation),
}

/// A shape-checked morphism candidate; [`HypergroupMorphism::check`] does the
/// actual preservation sweep.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HypergroupMorphism {
    source: Hypergroup,
    target: Hypergroup,
    f0: GroupHom,
    f1: Vec<usize>,
}

impl HypergroupMorphism {
    pub fn new(
        source: &Hypergroup,
        target: &Hypergroup,
        f0: GroupHom,
        f1: Vec<usize>,
    ) -> Result<Self, HypMorphismError> {
        if !f0.source().same_table(source.h()) || !f0.target().same_table(target.h()) {
            return Err(HypMorphismError::F0Mismatch);
        }
        f0.check()?;
        if f1.len() != source.base_size() {
            return Err(HypMorphismError::WrongLength {
                expected: source.base_size(),
                got: f1.len(),
            });
        }
        for (index, &image) in f1.iter().enumerate() {
            if image >= target.base_size() {
                return Err(HypMorphismError::ImageOutOfRange {
                    index,
                    image,
                    size: target.base_size(),
                });
            }
        }
        Ok(HypergroupMorphism {
            source: source.clone(),
            target: target.clone(),
            f0,
            f1,
        })
    }

    /// Builds and runs the preservation sweep in one step.
    pub fn verified(
        source: &Hypergroup,
        target: &Hypergroup,
        f0: GroupHom,
        f1: Vec<usize>,
    ) -> Result<Self, HypMorphismError> {
        let morphism = Self::new(source, target, f0, f1)?;
        morphism.check()?;
        Ok(morphism)
    }

    /// Verifies all four preservation conditions over every argument tuple,
    /// then the two forced consequences (`f1(o) = o'`, `f0(θ) = θ'`).
    pub fn check(&self) -> Result<(), MorphismViolation> {
        let (src, tgt) = (&self.source, &self.target);
        let m = src.base_size();
        let hn = src.h().order();
        let fail = |condition, args: Vec<usize>, lhs, rhs| {
            Err(MorphismViolation {
                condition,
                args,
                lhs,
                rhs,
            })
        };
        for a in 0..m {
            for alpha in 0..hn {
                let lhs = self.f1[src.phi(a, alpha)];
                let rhs = tgt.phi(self.f1[a], self.f0.apply(alpha));
                if lhs != rhs {
                    return fail(MorphCondition::MPhi, vec![a, alpha], lhs, rhs);
                }
                let lhs = self.f0.apply(src.psi(a, alpha));
                let rhs = tgt.psi(self.f1[a], self.f0.apply(alpha));
                if lhs != rhs {
                    return fail(MorphCondition::MPsi, vec![a, alpha], lhs, rhs);
                }
            }
        }
        for a in 0..m {
            for b in 0..m {
                let lhs = self.f1[src.xi(a, b)];
                let rhs = tgt.xi(self.f1[a], self.f1[b]);
                if lhs != rhs {
                    return fail(MorphCondition::MXi, vec![a, b], lhs, rhs);
                }
                let lhs = self.f0.apply(src.lam(a, b));
                let rhs = tgt.lam(self.f1[a], self.f1[b]);
                if lhs != rhs {
                    return fail(MorphCondition::MLam, vec![a, b], lhs, rhs);
                }
            }
        }
        // Consequences of the above; a failure here means the library itself
        // is inconsistent, not the input.
        let (lhs, rhs) = (self.f1[src.o()], tgt.o());
        if lhs != rhs {
            return fail(MorphCondition::Neutral, vec![], lhs, rhs);
        }
        let (lhs, rhs) = (self.f0.apply(src.theta()), tgt.theta());
        if lhs != rhs {
            return fail(MorphCondition::Theta, vec![], lhs, rhs);
        }
        Ok(())
    }

    pub fn source(&self) -> &Hypergroup {
        &self.source
    }

    pub fn target(&self) -> &Hypergroup {
        &self.target
    }

    pub fn f0(&self) -> &GroupHom {
        &self.f0
    }

    pub fn f1(&self) -> &[usize] {
        &self.f1
    }

    pub fn apply_base(&self, a: usize) -> usize {
        self.f1[a]
    }

    pub fn identity(k: &Hypergroup) -> Self {
        HypergroupMorphism {
            source: k.clone(),
            target: k.clone(),
            f0: GroupHom::identity(k.h()),
            f1: (0..k.base_size()).collect(),
        }
    }

    /// Composition `self` then `next` (left-to-right).
    pub fn then(&self, next: &HypergroupMorphism) -> Result<HypergroupMorphism, HypMorphismError> {
        if !self.target.same_tables(&next.source) {
            return Err(HypMorphismError::SourceTargetMismatch {
                left: self.target.name().to_string(),
                right: next.source.name().to_string(),
            });
        }
        let f0 = self
            .f0
            .then(&next.f0)
            .expect("same_tables implies compatible H groups");
        Ok(HypergroupMorphism {
            source: self.source.clone(),
            target: next.target.clone(),
            f0,
            f1: self.f1.iter().map(|&a| next.f1[a]).collect(),
        })
    }

    pub fn is_bijective(&self) -> bool {
        if !self.f0.is_bijective() || self.source.base_size() != self.target.base_size() {
            return false;
        }
        let mut hit = vec![false; self.target.base_size()];
        for &image in &self.f1 {
            if hit[image] {
                return false;
            }
            hit[image] = true;
        }
        true
    }
}
