//! Associativity, symmetry and hom-tensor adjunction for computed tensor
//! products, each built from universal factorizations and then checked.

use serde::Serialize;

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::hom::{enumerate_homs, HomMonoid, MonoidHom};
use crate::monoid::FiniteCommMonoid;
use crate::tensor::{induced_map, tensor_product_with, tensor_product_with_limit, BilinearTable, TensorProduct};

/// `α: (M ⊗ N) ⊗ P → M ⊗ (N ⊗ P)` with its inverse.
#[derive(Debug, Clone)]
pub struct AssociativityIso {
    pub mn: TensorProduct,
    pub np: TensorProduct,
    /// `(M ⊗ N) ⊗ P`
    pub left: TensorProduct,
    /// `M ⊗ (N ⊗ P)`
    pub right: TensorProduct,
    pub alpha: MonoidHom,
    pub inverse: MonoidHom,
}

fn table(rows: usize, cols: usize, f: impl Fn(usize, usize) -> usize) -> BilinearTable {
    (0..rows).map(|x| (0..cols).map(|y| f(x, y)).collect()).collect()
}

pub fn associativity_iso(
    m: &FiniteCommMonoid,
    n: &FiniteCommMonoid,
    p: &FiniteCommMonoid,
    box_limit: u64,
) -> Result<AssociativityIso> {
    let mn = tensor_product_with_limit(m, n, box_limit)?;
    let np = tensor_product_with_limit(n, p, box_limit)?;
    let left = tensor_product_with_limit(&mn.monoid, p, box_limit)?;
    let right = tensor_product_with_limit(m, &np.monoid, box_limit)?;

    // β_z: M ⊗ N → M ⊗ (N ⊗ P), m ⊗ n ↦ m ⊗ (n ⊗ z); then t ⊗ z ↦ β_z(t).
    let betas = p
        .elements()
        .map(|z| {
            let f = table(m.size(), n.size(), |x, y| right.tensor(x, np.tensor(y, z)));
            mn.universal_factorization(&right.monoid, &f)
        })
        .collect::<Result<Vec<_>>>()?;
    let outer = table(mn.monoid.size(), p.size(), |t, z| betas[z].apply(t));
    let alpha = left.universal_factorization(&right.monoid, &outer)?;

    // γ_x: N ⊗ P → (M ⊗ N) ⊗ P, n ⊗ z ↦ (x ⊗ n) ⊗ z; then x ⊗ s ↦ γ_x(s).
    let gammas = m
        .elements()
        .map(|x| {
            let f = table(n.size(), p.size(), |y, z| left.tensor(mn.tensor(x, y), z));
            np.universal_factorization(&left.monoid, &f)
        })
        .collect::<Result<Vec<_>>>()?;
    let outer = table(m.size(), np.monoid.size(), |x, s| gammas[x].apply(s));
    let inverse = right.universal_factorization(&left.monoid, &outer)?;

    Ok(AssociativityIso {
        mn,
        np,
        left,
        right,
        alpha,
        inverse,
    })
}

impl AssociativityIso {
    /// `α` and its inverse compose to identities, and
    /// `α((m ⊗ n) ⊗ p) = m ⊗ (n ⊗ p)` on all decomposables.
    pub fn verify(&self) -> bool {
        let round_trips = self.alpha.then(&self.inverse).ok() == Some(MonoidHom::identity(&self.left.monoid))
            && self.inverse.then(&self.alpha).ok() == Some(MonoidHom::identity(&self.right.monoid));
        let (m, n, p) = (&self.mn.left, &self.mn.right, &self.np.right);
        let on_decomposables = m.elements().all(|x| {
            n.elements().all(|y| {
                p.elements().all(|z| {
                    self.alpha.apply(self.left.tensor(self.mn.tensor(x, y), z))
                        == self.right.tensor(x, self.np.tensor(y, z))
                })
            })
        });
        round_trips && on_decomposables && self.alpha.is_isomorphism()
    }
}

/// Checks Mac Lane's pentagon for `M, N, P, Q`: both composites
/// `((M⊗N)⊗P)⊗Q → M⊗(N⊗(P⊗Q))` agree.
pub fn pentagon_check(
    m: &FiniteCommMonoid,
    n: &FiniteCommMonoid,
    p: &FiniteCommMonoid,
    q: &FiniteCommMonoid,
    box_limit: u64,
) -> Result<bool> {
    let a_mn_p_q = associativity_iso(&tensor_product_with_limit(m, n, box_limit)?.monoid, p, q, box_limit)?;
    let a_m_n_pq = associativity_iso(m, n, &tensor_product_with_limit(p, q, box_limit)?.monoid, box_limit)?;
    let top = a_mn_p_q.alpha.then(&a_m_n_pq.alpha)?;

    let a_m_n_p = associativity_iso(m, n, p, box_limit)?;
    let a_m_np_q = associativity_iso(m, &a_m_n_p.np.monoid, q, box_limit)?;
    let a_n_p_q = associativity_iso(n, p, q, box_limit)?;
    // α_{M,N,P} ⊗ Q
    let first = induced_map(
        &a_m_n_p.alpha,
        &MonoidHom::identity(q),
        &tensor_product_with_limit(&a_m_n_p.left.monoid, q, box_limit)?,
        &a_m_np_q.left,
    )?;
    // M ⊗ α_{N,P,Q}
    let last = induced_map(
        &MonoidHom::identity(m),
        &a_n_p_q.alpha,
        &tensor_product_with_limit(m, &a_n_p_q.left.monoid, box_limit)?,
        &a_m_n_pq.right,
    )?;
    let bottom = first.then(&a_m_np_q.alpha)?.then(&last)?;
    Ok(top == bottom)
}

/// The triangle law with the free rank-one factor: under `M ⊗ ℕ₀ ≅ M` and
/// `ℕ₀ ⊗ N ≅ N` both sides send `(m ⊗ k) ⊗ n` to `(k·m) ⊗ n` and `m ⊗ (k·n)`.
pub fn triangle_check(t: &TensorProduct) -> bool {
    let (m, n) = (&t.left, &t.right);
    let k_max = m
        .elements()
        .map(|x| m.orbit(x).bound())
        .chain(n.elements().map(|y| n.orbit(y).bound()))
        .max()
        .unwrap_or(1);
    (0..=k_max).all(|k| {
        m.elements()
            .all(|x| n.elements().all(|y| t.tensor(m.scalar(k, x), y) == t.tensor(x, n.scalar(k, y))))
    })
}

/// `τ: M ⊗ N → N ⊗ M` and `τ': N ⊗ M → M ⊗ N`.
#[derive(Debug, Clone)]
pub struct SymmetryIso {
    pub mn: TensorProduct,
    pub nm: TensorProduct,
    pub tau: MonoidHom,
    pub tau_back: MonoidHom,
}

pub fn symmetry_iso(m: &FiniteCommMonoid, n: &FiniteCommMonoid, box_limit: u64) -> Result<SymmetryIso> {
    let mn = tensor_product_with_limit(m, n, box_limit)?;
    let nm = tensor_product_with_limit(n, m, box_limit)?;
    let tau = mn.universal_factorization(&nm.monoid, &table(m.size(), n.size(), |x, y| nm.tensor(y, x)))?;
    let tau_back = nm.universal_factorization(&mn.monoid, &table(n.size(), m.size(), |y, x| mn.tensor(x, y)))?;
    Ok(SymmetryIso { mn, nm, tau, tau_back })
}

impl SymmetryIso {
    /// `τ' ∘ τ = id` and `τ ∘ τ' = id`.
    pub fn verify(&self) -> bool {
        self.tau.then(&self.tau_back).ok() == Some(MonoidHom::identity(&self.mn.monoid))
            && self.tau_back.then(&self.tau).ok() == Some(MonoidHom::identity(&self.nm.monoid))
    }

    /// `τ_{M',N'} ∘ (f ⊗ g) = (g ⊗ f) ∘ τ_{M,N}` for `f: M → M'`, `g: N → N'`.
    pub fn natural_along(&self, f: &MonoidHom, g: &MonoidHom, target: &SymmetryIso) -> Result<bool> {
        let fg = induced_map(f, g, &self.mn, &target.mn)?;
        let gf = induced_map(g, f, &self.nm, &target.nm)?;
        Ok(fg.then(&target.tau)? == self.tau.then(&gf)?)
    }
}

/// Result of comparing `Hom(P ⊗ M, N)` with `Hom(P, Hom(M, N))`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct AdjunctionReport {
    pub left_count: usize,
    pub right_count: usize,
    pub round_trips: bool,
    pub additive: bool,
}

impl AdjunctionReport {
    pub fn passed(&self) -> bool {
        self.left_count == self.right_count && self.round_trips && self.additive
    }
}

/// Builds `φ(f)(p)(m) = f(p ⊗ m)` and its inverse `ψ` (by universal
/// factorization) and checks they are mutually inverse and additive.
pub fn hom_adjunction_check(
    p: &FiniteCommMonoid,
    m: &FiniteCommMonoid,
    n: &FiniteCommMonoid,
    box_limit: u64,
    budget: &mut Budget,
) -> Result<AdjunctionReport> {
    let pm = tensor_product_with_limit(p, m, box_limit)?;
    let hom_mn = HomMonoid::new(m, n, budget)?;
    let left = HomMonoid::new(&pm.monoid, n, budget)?;
    let right = HomMonoid::new(p, &hom_mn.monoid, budget)?;

    let phi = |f: &MonoidHom| -> Result<MonoidHom> {
        let image = p
            .elements()
            .map(|z| {
                let row: Vec<usize> = m.elements().map(|x| f.apply(pm.tensor(z, x))).collect();
                hom_mn
                    .index_of(&row)
                    .ok_or(Error::Mismatch("f(p ⊗ -) is not a hom"))
            })
            .collect::<Result<Vec<_>>>()?;
        MonoidHom::new(p, &hom_mn.monoid, image)
    };
    let psi = |h: &MonoidHom| -> Result<MonoidHom> {
        let f = table(p.size(), m.size(), |z, x| hom_mn.homs[h.apply(z)].apply(x));
        pm.universal_factorization(n, &f)
    };

    let phis = left.homs.iter().map(phi).collect::<Result<Vec<_>>>()?;
    let mut round_trips = true;
    for (f, image) in left.homs.iter().zip(&phis) {
        round_trips &= psi(image)? == *f;
    }
    for h in &right.homs {
        round_trips &= phi(&psi(h)?)? == *h;
    }
    let mut additive = true;
    for (i, f) in left.homs.iter().enumerate() {
        for (j, g) in left.homs.iter().enumerate().skip(i) {
            let lhs = phi(&f.pointwise_add(g)?)?;
            additive &= lhs == phis[i].pointwise_add(&phis[j])?;
        }
    }
    Ok(AdjunctionReport {
        left_count: left.homs.len(),
        right_count: right.homs.len(),
        round_trips,
        additive,
    })
}

/// Recomputes `M ⊗ N` with the generator order reversed and checks that
/// exactly one hom between the two results commutes with `⊗`, and that it
/// is an isomorphism.
pub fn uniqueness_up_to_iso(m: &FiniteCommMonoid, n: &FiniteCommMonoid, box_limit: u64, budget: &mut Budget) -> Result<bool> {
    let t = tensor_product_with_limit(m, n, box_limit)?;
    let mut reversed = t.generators().to_vec();
    reversed.reverse();
    let t2 = tensor_product_with(m, n, &reversed, box_limit)?;
    let h = t.universal_factorization(&t2.monoid, &t2.bilinear)?;
    let commuting = enumerate_homs(&t.monoid, &t2.monoid, budget)?
        .into_iter()
        .filter(|k| {
            m.elements()
                .all(|x| n.elements().all(|y| k.apply(t.tensor(x, y)) == t2.tensor(x, y)))
        })
        .count();
    Ok(commuting == 1 && h.is_isomorphism())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{cyclic_group, saturating};
    use crate::tensor::DEFAULT_BOX_LIMIT;

    #[test]
    fn associativity_examples() {
        let z2 = cyclic_group(2);
        let a = associativity_iso(&z2, &z2, &z2, DEFAULT_BOX_LIMIT).unwrap();
        assert!(a.verify());
        assert_eq!(a.left.monoid, z2);
        let t = FiniteCommMonoid::trivial();
        let a = associativity_iso(&t, &z2, &saturating(3), DEFAULT_BOX_LIMIT).unwrap();
        assert!(a.verify() && a.left.monoid.is_trivial());
    }

    #[test]
    fn pentagon_and_triangle() {
        let z2 = cyclic_group(2);
        let s2 = saturating(2);
        assert!(pentagon_check(&z2, &s2, &z2, &s2, DEFAULT_BOX_LIMIT).unwrap());
        assert!(triangle_check(&crate::tensor::tensor_product(&saturating(3), &z2).unwrap()));
    }

    #[test]
    fn symmetry_examples() {
        let z2 = cyclic_group(2);
        let z3 = cyclic_group(3);
        let s = symmetry_iso(&z2, &z2, DEFAULT_BOX_LIMIT).unwrap();
        assert!(s.verify());
        assert_eq!(s.tau.then(&s.tau).unwrap(), MonoidHom::identity(&s.mn.monoid));
        let s = symmetry_iso(&z2, &z3, DEFAULT_BOX_LIMIT).unwrap();
        assert!(s.verify() && s.mn.monoid.is_trivial());
        let sat = saturating(3);
        let s = symmetry_iso(&sat, &z2, DEFAULT_BOX_LIMIT).unwrap();
        let f = MonoidHom::new(&sat, &sat, vec![0, 2, 2]).unwrap();
        assert!(s.natural_along(&f, &MonoidHom::identity(&z2), &s).unwrap());
    }

    #[test]
    fn adjunction_examples() {
        let z2 = cyclic_group(2);
        let mut b = Budget::default();
        let r = hom_adjunction_check(&FiniteCommMonoid::trivial(), &z2, &z2, DEFAULT_BOX_LIMIT, &mut b).unwrap();
        assert_eq!((r.left_count, r.right_count), (1, 1));
        let r = hom_adjunction_check(&z2, &z2, &z2, DEFAULT_BOX_LIMIT, &mut b).unwrap();
        assert!(r.passed());
        assert_eq!(r.left_count, 2);
    }

    #[test]
    fn reordered_generators_give_the_same_tensor() {
        let mut b = Budget::default();
        assert!(uniqueness_up_to_iso(&saturating(3), &cyclic_group(3), DEFAULT_BOX_LIMIT, &mut b).unwrap());
    }
}
