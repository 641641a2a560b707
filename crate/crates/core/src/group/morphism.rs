//! Group homomorphisms as explicit element maps.

use thiserror::Error;

use super::FiniteGroup;

/// Witness that a claimed map fails to be a homomorphism: the pair whose
/// product is not preserved.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("map does not preserve products: f({i} * {j}) = f({product}) = {mapped_product}, but f({i}) * f({j}) = {product_of_images}")]
pub struct HomViolation {
    pub i: usize,
    pub j: usize,
    pub product: usize,
    pub mapped_product: usize,
    pub product_of_images: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MorphismError {
    #[error("mapping has {got} entries for a source of order {expected}")]
    WrongLength { expected: usize, got: usize },
    #[error("mapping sends {index} to {image}, outside the target of order {order}")]
    ImageOutOfRange { index: usize, image: usize, order: usize },
    #[error("cannot compose: intermediate groups differ ({left} vs {right})")]
    SourceTargetMismatch { left: String, right: String },
    #[error(transparent)]
    NotAHomomorphism(#[from] HomViolation),
}

/// A group homomorphism, stored as the full image table `mapping[i] = f(i)`.
///
/// [`GroupHom::new`] only checks shape; call [`GroupHom::check`] to verify the
/// homomorphism law, or use [`GroupHom::verified`] to do both at once.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupHom {
    source: FiniteGroup,
    target: FiniteGroup,
    mapping: Vec<usize>,
}

impl GroupHom {
    pub fn new(
        source: &FiniteGroup,
        target: &FiniteGroup,
        mapping: Vec<usize>,
    ) -> Result<Self, MorphismError> {
        if mapping.len() != source.order() {
            return Err(MorphismError::WrongLength {
                expected: source.order(),
                got: mapping.len(),
            });
        }
        for (index, &image) in mapping.iter().enumerate() {
            if image >= target.order() {
                return Err(MorphismError::ImageOutOfRange {
                    index,
                    image,
                    order: target.order(),
                });
            }
        }
        Ok(GroupHom {
            source: source.clone(),
            target: target.clone(),
            mapping,
        })
    }

    /// Builds and checks in one step.
    pub fn verified(
        source: &FiniteGroup,
        target: &FiniteGroup,
        mapping: Vec<usize>,
    ) -> Result<Self, MorphismError> {
        let hom = Self::new(source, target, mapping)?;
        hom.check()?;
        Ok(hom)
    }

    /// Verifies `f(i * j) = f(i) * f(j)` over all pairs.
    ///
    /// For a total map between groups this also forces `f` to preserve the
    /// identity and inverses, so nothing further needs checking.
    pub fn check(&self) -> Result<(), HomViolation> {
        for i in 0..self.source.order() {
            for j in 0..self.source.order() {
                let product = self.source.mul(i, j);
                let mapped_product = self.mapping[product];
                let product_of_images = self.target.mul(self.mapping[i], self.mapping[j]);
                if mapped_product != product_of_images {
                    return Err(HomViolation {
                        i,
                        j,
                        product,
                        mapped_product,
                        product_of_images,
                    });
                }
            }
        }
        Ok(())
    }

    pub fn source(&self) -> &FiniteGroup {
        &self.source
    }

    pub fn target(&self) -> &FiniteGroup {
        &self.target
    }

    pub fn apply(&self, i: usize) -> usize {
        self.mapping[i]
    }

    pub fn mapping(&self) -> &[usize] {
        &self.mapping
    }

    pub fn identity(group: &FiniteGroup) -> Self {
        GroupHom {
            source: group.clone(),
            target: group.clone(),
            mapping: (0..group.order()).collect(),
        }
    }

    /// Composition `self` then `next` (left-to-right). The middle groups
    /// must share a Cayley table; display names may differ.
    pub fn then(&self, next: &GroupHom) -> Result<GroupHom, MorphismError> {
        if !self.target.same_table(&next.source) {
            return Err(MorphismError::SourceTargetMismatch {
                left: self.target.name().to_string(),
                right: next.source.name().to_string(),
            });
        }
        Ok(GroupHom {
            source: self.source.clone(),
            target: next.target.clone(),
            mapping: self.mapping.iter().map(|&x| next.mapping[x]).collect(),
        })
    }

    pub fn is_bijective(&self) -> bool {
        if self.source.order() != self.target.order() {
            return false;
        }
        let mut hit = vec![false; self.target.order()];
        for &image in &self.mapping {
            if hit[image] {
                return false;
            }
            hit[image] = true;
        }
        true
    }
}
