//! The exact product: multiplying a hypergroup's formal words `αa` back
//! into a group.

use crate::group::{FiniteGroup, GroupHom, Subgroup};
use crate::hypergroup::{Hypergroup, HypergroupMorphism};
use crate::triple::{GroupTriple, TripleMorphism};

use super::EquivalenceError;

/// The group of two-letter words over a hypergroup, with the embedded
/// copies of `H` and the base set and the triple they form.
///
/// A word `αa` is encoded as the index `α·m + a`, where `m` is the base
/// size, and multiplies by
///
/// ```text
/// αa · βb = (α · ^aβ · (a^β, b)) [a^β, b]
/// ```
#[derive(Debug, Clone)]
pub struct ExactProduct {
    base: Hypergroup,
    group: FiniteGroup,
    triple: GroupTriple,
    h_bar: Vec<usize>,
    m_bar: Vec<usize>,
}

/// Multiplies out the word table and validates the whole construction: the
/// table must be a group, its identity must be the word `θo`, the words
/// `(αθ)o` must form a subgroup isomorphic to `H` via `α ↦ (αθ)o`, and the
/// words `εa` must be a right transversal of it.
pub fn exact_product(k: &Hypergroup) -> Result<ExactProduct, EquivalenceError> {
    let m = k.base_size();
    let hn = k.h().order();
    let h = k.h();
    let word = |alpha: usize, a: usize| alpha * m + a;

    let mut names = Vec::with_capacity(hn * m);
    let mut rows = Vec::with_capacity(hn * m);
    for alpha in 0..hn {
        for a in 0..m {
            names.push(format!("{}|{}", h.element_name(alpha), k.base_name(a)));
            let mut row = Vec::with_capacity(hn * m);
            for beta in 0..hn {
                for b in 0..m {
                    let ab = k.phi(a, beta);
                    let hpart = h.mul(h.mul(alpha, k.psi(a, beta)), k.lam(ab, b));
                    row.push(word(hpart, k.xi(ab, b)));
                }
            }
            rows.push(row);
        }
    }
    let group = FiniteGroup::from_table(format!("{}-ex", k.name()), names, rows).map_err(
        |source| EquivalenceError::ProductNotGroup {
            hypergroup: k.name().to_string(),
            source,
        },
    )?;

    let expected = word(k.theta(), k.o());
    if group.identity() != expected {
        return Err(EquivalenceError::IdentityMismatch {
            expected,
            found: group.identity(),
        });
    }

    let h_bar: Vec<usize> = (0..hn)
        .map(|alpha| word(h.mul(alpha, k.theta()), k.o()))
        .collect();
    let m_bar: Vec<usize> = (0..m).map(|a| word(h.identity(), a)).collect();

    let sub = Subgroup::new(&group, h_bar.clone())
        .map_err(|source| EquivalenceError::BadEmbeddedSubgroup { source })?;
    // With members listed in α order, the embedding is the identity on
    // positions; verifying it as a homomorphism pins the local table to H's.
    GroupHom::verified(k.h(), sub.local(), (0..hn).collect())
        .map_err(|source| EquivalenceError::BadEmbedding { source })?;
    let triple = GroupTriple::new(format!("{}-extriple", k.name()), sub, m_bar.clone())
        .map_err(|source| EquivalenceError::BadEmbeddedTransversal { source })?;

    Ok(ExactProduct {
        base: k.clone(),
        group,
        triple,
        h_bar,
        m_bar,
    })
}

impl ExactProduct {
    pub fn base(&self) -> &Hypergroup {
        &self.base
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    /// The triple `(word group, embedded H, embedded base)`.
    pub fn triple(&self) -> &GroupTriple {
        &self.triple
    }

    /// Encodes `αa`.
    pub fn word(&self, alpha: usize, a: usize) -> usize {
        alpha * self.base.base_size() + a
    }

    /// Decodes a word into `(α, a)`.
    pub fn split(&self, w: usize) -> (usize, usize) {
        (w / self.base.base_size(), w % self.base.base_size())
    }

    /// `ᾱ = (αθ)o` for each `α`, as word indices.
    pub fn h_bar(&self) -> &[usize] {
        &self.h_bar
    }

    /// `ā = εa` for each `a`, as word indices.
    pub fn m_bar(&self) -> &[usize] {
        &self.m_bar
    }

    /// The word `θo`.
    pub fn identity_word(&self) -> usize {
        self.group.identity()
    }

    /// Solves `ξx · αa = βb` in closed form: the base part is
    /// `x = (b/a)^(α⁻¹)` and the `H` part divides off what the product
    /// formula accumulates, `ξ = β · (^xα · (b/a, a))⁻¹`.
    pub fn left_divide_word(&self, target: usize, right: usize) -> usize {
        let (beta, b) = self.split(target);
        let (alpha, a) = self.split(right);
        let k = &self.base;
        let h = k.h();
        let q = k.left_divide(b, a);
        let x = k.phi(q, h.inverse(alpha));
        let xi = h.mul(beta, h.inverse(h.mul(k.psi(x, alpha), k.lam(q, a))));
        self.word(xi, x)
    }
}

/// The hypergroup-to-triple functor on objects.
pub fn functor_t_on_object(k: &Hypergroup) -> Result<GroupTriple, EquivalenceError> {
    exact_product(k).map(|ep| ep.triple)
}

/// The hypergroup-to-triple functor on morphisms: `αa ↦ f0(α)f1(a)` on
/// words, re-verified as a homomorphism and as a morphism of triples.
pub fn functor_t_on_morphism(f: &HypergroupMorphism) -> Result<TripleMorphism, EquivalenceError> {
    let src = exact_product(f.source())?;
    let tgt = exact_product(f.target())?;
    let mapping: Vec<usize> = (0..src.group.order())
        .map(|w| {
            let (alpha, a) = src.split(w);
            tgt.word(f.f0().apply(alpha), f.apply_base(a))
        })
        .collect();
    let hom = GroupHom::verified(&src.group, &tgt.group, mapping)?;
    Ok(TripleMorphism::new(&src.triple, &tgt.triple, hom)?)
}
