//! Homomorphisms between finite commutative monoids.

use std::collections::HashMap;

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::monoid::FiniteCommMonoid;

/// A checked homomorphism, stored as the image of every source element.
#[derive(Clone, PartialEq, Eq)]
pub struct MonoidHom {
    source: FiniteCommMonoid,
    target: FiniteCommMonoid,
    image: Vec<usize>,
}

/// Validates `image` as a homomorphism `source → target`.
pub fn hom_check(
    source: &FiniteCommMonoid,
    target: &FiniteCommMonoid,
    image: &[usize],
) -> Result<MonoidHom> {
    MonoidHom::new(source, target, image.to_vec())
}

impl MonoidHom {
    pub fn new(source: &FiniteCommMonoid, target: &FiniteCommMonoid, image: Vec<usize>) -> Result<Self> {
        if image.len() != source.size() {
            return Err(Error::ImageLength {
                expected: source.size(),
                got: image.len(),
            });
        }
        for &y in &image {
            target.check_element(y)?;
        }
        if image[0] != 0 {
            return Err(Error::IdentityNotPreserved);
        }
        for a in source.elements() {
            for b in a..source.size() {
                if image[source.add(a, b)] != target.add(image[a], image[b]) {
                    return Err(Error::NotAdditive(a, b));
                }
            }
        }
        Ok(Self::new_unchecked(source, target, image))
    }

    pub(crate) fn new_unchecked(
        source: &FiniteCommMonoid,
        target: &FiniteCommMonoid,
        image: Vec<usize>,
    ) -> Self {
        MonoidHom {
            source: source.clone(),
            target: target.clone(),
            image,
        }
    }

    pub fn identity(m: &FiniteCommMonoid) -> Self {
        Self::new_unchecked(m, m, m.elements().collect())
    }

    pub fn zero(source: &FiniteCommMonoid, target: &FiniteCommMonoid) -> Self {
        Self::new_unchecked(source, target, vec![0; source.size()])
    }

    /// `k·(-)` on a monoid; always a homomorphism of commutative monoids.
    pub fn scalar_multiplication(m: &FiniteCommMonoid, k: u64) -> Self {
        Self::new_unchecked(m, m, m.elements().map(|x| m.scalar(k, x)).collect())
    }

    pub fn source(&self) -> &FiniteCommMonoid {
        &self.source
    }

    pub fn target(&self) -> &FiniteCommMonoid {
        &self.target
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    #[inline]
    pub fn apply(&self, m: usize) -> usize {
        self.image[m]
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &MonoidHom) -> Result<MonoidHom> {
        if self.target != other.source {
            return Err(Error::Mismatch("composition: target of first is not source of second"));
        }
        Ok(Self::new_unchecked(
            &self.source,
            &other.target,
            self.image.iter().map(|&y| other.apply(y)).collect(),
        ))
    }

    /// Pointwise sum, the monoid structure on `Hom(M, N)`.
    pub fn pointwise_add(&self, other: &MonoidHom) -> Result<MonoidHom> {
        if self.source != other.source || self.target != other.target {
            return Err(Error::Mismatch("pointwise sum of homs with different types"));
        }
        Ok(Self::new_unchecked(
            &self.source,
            &self.target,
            self.image
                .iter()
                .zip(&other.image)
                .map(|(&a, &b)| self.target.add(a, b))
                .collect(),
        ))
    }

    pub fn is_injective(&self) -> bool {
        let mut hit = vec![false; self.target.size()];
        self.image.iter().all(|&y| !std::mem::replace(&mut hit[y], true))
    }

    pub fn is_surjective(&self) -> bool {
        let mut hit = vec![false; self.target.size()];
        for &y in &self.image {
            hit[y] = true;
        }
        hit.into_iter().all(|h| h)
    }

    pub fn is_isomorphism(&self) -> bool {
        self.is_injective() && self.is_surjective()
    }

    /// The inverse of a bijective hom.
    pub fn inverse(&self) -> Option<MonoidHom> {
        if !self.is_isomorphism() {
            return None;
        }
        let mut inv = vec![0; self.target.size()];
        for (x, &y) in self.image.iter().enumerate() {
            inv[y] = x;
        }
        Some(Self::new_unchecked(&self.target, &self.source, inv))
    }
}

impl std::fmt::Debug for MonoidHom {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "MonoidHom({} -> {}: {:?})",
            self.source.size(),
            self.target.size(),
            self.image
        )
    }
}

/// All homomorphisms `source → target`, in lexicographic order of image tables.
///
/// Backtracks element by element and prunes as soon as an additivity
/// constraint among assigned elements fails. Every candidate value tried
/// costs one unit of `budget`.
pub fn enumerate_homs(
    source: &FiniteCommMonoid,
    target: &FiniteCommMonoid,
    budget: &mut Budget,
) -> Result<Vec<MonoidHom>> {
    let mut found = Vec::new();
    let mut image = vec![0usize; source.size()];
    extend(source, target, 1, &mut image, budget, &mut |img| {
        found.push(MonoidHom::new_unchecked(source, target, img.to_vec()))
    })?;
    Ok(found)
}

fn extend(
    source: &FiniteCommMonoid,
    target: &FiniteCommMonoid,
    k: usize,
    image: &mut Vec<usize>,
    budget: &mut Budget,
    emit: &mut dyn FnMut(&[usize]),
) -> Result<()> {
    if k == source.size() {
        emit(image);
        return Ok(());
    }
    for y in target.elements() {
        budget.charge(1)?;
        image[k] = y;
        if consistent_at(source, target, image, k) {
            extend(source, target, k + 1, image, budget, emit)?;
        }
    }
    Ok(())
}

// Checks f(a+b) = f(a)+f(b) for every pair whose operands and sum are assigned.
fn consistent_at(source: &FiniteCommMonoid, target: &FiniteCommMonoid, image: &[usize], k: usize) -> bool {
    (0..=k).all(|a| {
        (a..=k).all(|b| {
            let s = source.add(a, b);
            s > k || image[s] == target.add(image[a], image[b])
        })
    })
}

/// `Hom(M, N)` as a finite commutative monoid under pointwise addition.
///
/// Element `i` of the returned monoid is `homs[i]`; the zero map is first
/// because enumeration is lexicographic.
#[derive(Debug, Clone)]
pub struct HomMonoid {
    pub monoid: FiniteCommMonoid,
    pub homs: Vec<MonoidHom>,
    index: HashMap<Vec<usize>, usize>,
}

impl HomMonoid {
    pub fn new(source: &FiniteCommMonoid, target: &FiniteCommMonoid, budget: &mut Budget) -> Result<Self> {
        let homs = enumerate_homs(source, target, budget)?;
        let index: HashMap<Vec<usize>, usize> = homs
            .iter()
            .enumerate()
            .map(|(i, h)| (h.image().to_vec(), i))
            .collect();
        let mut table = vec![vec![0; homs.len()]; homs.len()];
        for (i, f) in homs.iter().enumerate() {
            for (j, g) in homs.iter().enumerate() {
                let sum = f.pointwise_add(g)?;
                table[i][j] = *index
                    .get(sum.image())
                    .expect("Hom(M, N) is closed under pointwise addition");
            }
        }
        let monoid = FiniteCommMonoid::from_table(table)?;
        Ok(HomMonoid { monoid, homs, index })
    }

    pub fn index_of(&self, image: &[usize]) -> Option<usize> {
        self.index.get(image).copied()
    }
}
