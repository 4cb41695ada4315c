//! Tensor products `M ⊗ N` of finite commutative monoids.
//!
//! `M ⊗ N` is presented by generators `e_(m,n)` for nonzero `m`, `n` and the
//! biadditivity relations. Each generator gets one reduction rule, taken
//! from the orbit of `m` in `M` or of `n` in `N`, whichever is shorter:
//! `(i + p)·(m ⊗ n) = ((i + p)·m) ⊗ n = (i·m) ⊗ n`.

use serde::Serialize;

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::hom::{enumerate_homs, HomMonoid, MonoidHom};
use crate::monoid::{FiniteCommMonoid, Orbit};
use crate::presented::{Counts, PresentedCommMonoid, PresentedQuotient};
use crate::product::Biproduct;

pub use crate::presented::DEFAULT_BOX_LIMIT;

/// A map `M × N → A` given as a table `f[m][n]`.
pub type BilinearTable = Vec<Vec<usize>>;

#[derive(Debug, Clone)]
pub struct TensorProduct {
    pub left: FiniteCommMonoid,
    pub right: FiniteCommMonoid,
    pub monoid: FiniteCommMonoid,
    /// `bilinear[m][n]` is the element `m ⊗ n`.
    pub bilinear: BilinearTable,
    generators: Vec<(usize, usize)>,
    presentation: PresentedCommMonoid,
    quotient: PresentedQuotient,
}

/// Generators in the default order: lexicographic in `(m, n)`.
pub fn default_generators(m: &FiniteCommMonoid, n: &FiniteCommMonoid) -> Vec<(usize, usize)> {
    (1..m.size())
        .flat_map(|a| (1..n.size()).map(move |b| (a, b)))
        .collect()
}

pub fn tensor_product(m: &FiniteCommMonoid, n: &FiniteCommMonoid) -> Result<TensorProduct> {
    tensor_product_with(m, n, &default_generators(m, n), DEFAULT_BOX_LIMIT)
}

pub fn tensor_product_with_limit(
    m: &FiniteCommMonoid,
    n: &FiniteCommMonoid,
    box_limit: u64,
) -> Result<TensorProduct> {
    tensor_product_with(m, n, &default_generators(m, n), box_limit)
}

/// The tensor product with the generators listed in a chosen order (which
/// must be a permutation of [`default_generators`]).
pub fn tensor_product_with(
    m: &FiniteCommMonoid,
    n: &FiniteCommMonoid,
    generators: &[(usize, usize)],
    box_limit: u64,
) -> Result<TensorProduct> {
    let mut sorted = generators.to_vec();
    sorted.sort_unstable();
    if sorted != default_generators(m, n) {
        return Err(Error::Input("generator order is not a permutation of (M∖0)×(N∖0)".into()));
    }
    let position = |a: usize, b: usize| generators.iter().position(|&g| g == (a, b));
    let k = generators.len();
    let rules: Vec<Orbit> = generators
        .iter()
        .map(|&(a, b)| {
            let (om, on) = (m.orbit(a), n.orbit(b));
            if on.bound() < om.bound() {
                on
            } else {
                om
            }
        })
        .collect();

    let unit = |g: Option<usize>| {
        let mut v = vec![0u64; k];
        if let Some(g) = g {
            v[g] += 1;
        }
        v
    };
    let mut relations = Vec::new();
    // e_(a,b) + e_(a',b) ∼ e_(a+a',b), and the same on the right
    for b in 1..n.size() {
        for a in 1..m.size() {
            for a2 in a..m.size() {
                let mut lhs = unit(position(a, b));
                lhs[position(a2, b).expect("generator")] += 1;
                let s = m.add(a, a2);
                let rhs = unit(if s == 0 { None } else { position(s, b) });
                relations.push((lhs, rhs));
            }
        }
    }
    for a in 1..m.size() {
        for b in 1..n.size() {
            for b2 in b..n.size() {
                let mut lhs = unit(position(a, b));
                lhs[position(a, b2).expect("generator")] += 1;
                let s = n.add(b, b2);
                let rhs = unit(if s == 0 { None } else { position(a, s) });
                relations.push((lhs, rhs));
            }
        }
    }

    let presentation = PresentedCommMonoid::new(rules, relations)?;
    let quotient = presentation.saturate(box_limit)?;
    let mut bilinear = vec![vec![0; n.size()]; m.size()];
    for (g, &(a, b)) in generators.iter().enumerate() {
        let v = unit(Some(g));
        bilinear[a][b] = quotient.class_of[presentation.encode(&presentation.reduce(&v))];
    }
    Ok(TensorProduct {
        left: m.clone(),
        right: n.clone(),
        monoid: quotient.monoid.clone(),
        bilinear,
        generators: generators.to_vec(),
        presentation,
        quotient,
    })
}

/// Which balanced-map axiom failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum BalanceViolation {
    /// `f(m + m', n) ≠ f(m, n) + f(m', n)`
    LeftAdditive { m: usize, m2: usize, n: usize },
    /// `f(m, n + n') ≠ f(m, n) + f(m, n')`
    RightAdditive { m: usize, n: usize, n2: usize },
    /// `f(r·m, n) ≠ f(m, r·n)`
    Scalar { m: usize, n: usize, r: u64 },
    /// `f(0, n)` or `f(m, 0)` is nonzero.
    Zero { m: usize, n: usize },
}

/// Checks the balanced-map axioms exhaustively; the scalar axiom is checked
/// for every `r` below the largest orbit bound, which covers all of ℕ₀.
pub fn balanced_check(
    m: &FiniteCommMonoid,
    n: &FiniteCommMonoid,
    a: &FiniteCommMonoid,
    f: &BilinearTable,
) -> Result<Option<BalanceViolation>> {
    if f.len() != m.size() || f.iter().any(|row| row.len() != n.size()) {
        return Err(Error::Shape);
    }
    for row in f {
        for &y in row {
            a.check_element(y)?;
        }
    }
    for x in m.elements() {
        if f[x][0] != 0 {
            return Ok(Some(BalanceViolation::Zero { m: x, n: 0 }));
        }
    }
    for y in n.elements() {
        if f[0][y] != 0 {
            return Ok(Some(BalanceViolation::Zero { m: 0, n: y }));
        }
    }
    for y in n.elements() {
        for x in m.elements() {
            for x2 in x..m.size() {
                if f[m.add(x, x2)][y] != a.add(f[x][y], f[x2][y]) {
                    return Ok(Some(BalanceViolation::LeftAdditive { m: x, m2: x2, n: y }));
                }
            }
        }
    }
    for x in m.elements() {
        for y in n.elements() {
            for y2 in y..n.size() {
                if f[x][n.add(y, y2)] != a.add(f[x][y], f[x][y2]) {
                    return Ok(Some(BalanceViolation::RightAdditive { m: x, n: y, n2: y2 }));
                }
            }
        }
    }
    let r_max = m
        .elements()
        .map(|x| m.orbit(x).bound())
        .chain(n.elements().map(|y| n.orbit(y).bound()))
        .max()
        .unwrap_or(1);
    for x in m.elements() {
        for y in n.elements() {
            for r in 0..=r_max {
                if f[m.scalar(r, x)][y] != f[x][n.scalar(r, y)] {
                    return Ok(Some(BalanceViolation::Scalar { m: x, n: y, r }));
                }
            }
        }
    }
    Ok(None)
}

/// Every balanced map `M × N → A`, as tables. A balanced map is the same
/// thing as a hom `M → Hom(N, A)`.
pub fn balanced_maps(
    m: &FiniteCommMonoid,
    n: &FiniteCommMonoid,
    a: &FiniteCommMonoid,
    budget: &mut Budget,
) -> Result<Vec<BilinearTable>> {
    let hom_na = HomMonoid::new(n, a, budget)?;
    Ok(enumerate_homs(m, &hom_na.monoid, budget)?
        .into_iter()
        .map(|h| {
            m.elements()
                .map(|x| hom_na.homs[h.apply(x)].image().to_vec())
                .collect()
        })
        .collect())
}

impl TensorProduct {
    pub fn generators(&self) -> &[(usize, usize)] {
        &self.generators
    }

    pub fn presentation(&self) -> &PresentedCommMonoid {
        &self.presentation
    }

    /// The least reduced count vector of each class.
    pub fn representatives(&self) -> &[Counts] {
        &self.quotient.representatives
    }

    /// `m ⊗ n`.
    pub fn tensor(&self, m: usize, n: usize) -> usize {
        self.bilinear[m][n]
    }

    fn evaluate(&self, a: &FiniteCommMonoid, f: &BilinearTable, v: &[u64]) -> usize {
        self.generators
            .iter()
            .zip(v)
            .fold(0, |acc, (&(x, y), &k)| a.add(acc, a.scalar(k, f[x][y])))
    }

    /// The unique hom `g: M ⊗ N → A` with `g(m ⊗ n) = f(m, n)`.
    ///
    /// `g` sends a class to `Σ v_g · f(m_g, n_g)` for its representative `v`.
    /// The value is checked to be the same on every vector of the box.
    pub fn universal_factorization(&self, a: &FiniteCommMonoid, f: &BilinearTable) -> Result<MonoidHom> {
        if let Some(v) = balanced_check(&self.left, &self.right, a, f)? {
            return Err(Error::NotBalanced(format!("{v:?}")));
        }
        let image: Vec<usize> = self
            .quotient
            .representatives
            .iter()
            .map(|v| self.evaluate(a, f, v))
            .collect();
        for (x, &class) in self.quotient.class_of.iter().enumerate() {
            let v = self.presentation.decode(x);
            if self.evaluate(a, f, &v) != image[class] {
                return Err(Error::WellDefinednessFailure { class });
            }
        }
        let g = MonoidHom::new(&self.monoid, a, image)?;
        for x in self.left.elements() {
            for y in self.right.elements() {
                if g.apply(self.bilinear[x][y]) != f[x][y] {
                    return Err(Error::WellDefinednessFailure {
                        class: self.bilinear[x][y],
                    });
                }
            }
        }
        Ok(g)
    }

    /// Number of homs `h: M ⊗ N → A` with `h(m ⊗ n) = f(m, n)`, by enumeration.
    pub fn factorization_count(&self, a: &FiniteCommMonoid, f: &BilinearTable, budget: &mut Budget) -> Result<usize> {
        Ok(enumerate_homs(&self.monoid, a, budget)?
            .iter()
            .filter(|h| {
                self.left
                    .elements()
                    .all(|x| self.right.elements().all(|y| h.apply(self.bilinear[x][y]) == f[x][y]))
            })
            .count())
    }

    /// Whether sums of decomposables `m ⊗ n` reach every element.
    pub fn generated_by_decomposables(&self) -> bool {
        let t = &self.monoid;
        let mut reached = vec![false; t.size()];
        reached[0] = true;
        let mut frontier = vec![0];
        while let Some(x) = frontier.pop() {
            for row in &self.bilinear {
                for &d in row {
                    let s = t.add(x, d);
                    if !reached[s] {
                        reached[s] = true;
                        frontier.push(s);
                    }
                }
            }
        }
        reached.into_iter().all(|r| r)
    }

    /// Probes the universal property against every balanced map into each
    /// target: each must factor, uniquely.
    pub fn probe_universal_property(&self, targets: &[FiniteCommMonoid], budget: &mut Budget) -> Result<UniversalProbe> {
        let mut report = UniversalProbe::default();
        for a in targets {
            let maps = balanced_maps(&self.left, &self.right, a, budget)?;
            report.targets += 1;
            report.balanced_maps += maps.len();
            let homs = enumerate_homs(&self.monoid, a, budget)?;
            // Precomposition with ⊗ must be a bijection Hom(M ⊗ N, A) → Bal(M × N, A).
            if homs.len() != maps.len() {
                report.failures += 1;
            }
            for f in &maps {
                let unique = self.factorization_count(a, f, budget)? == 1;
                let factors = self.universal_factorization(a, f).is_ok();
                if !(unique && factors) {
                    report.failures += 1;
                }
            }
        }
        Ok(report)
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct UniversalProbe {
    pub targets: usize,
    pub balanced_maps: usize,
    pub failures: usize,
}

impl UniversalProbe {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

/// `f ⊗ g: M ⊗ N → M' ⊗ N'`, determined by `m ⊗ n ↦ f(m) ⊗ g(n)`.
pub fn induced_map(f: &MonoidHom, g: &MonoidHom, t: &TensorProduct, t2: &TensorProduct) -> Result<MonoidHom> {
    if f.source() != &t.left || g.source() != &t.right || f.target() != &t2.left || g.target() != &t2.right {
        return Err(Error::Mismatch("induced map: factors do not match the tensor products"));
    }
    let table: BilinearTable = t
        .left
        .elements()
        .map(|x| t.right.elements().map(|y| t2.bilinear[f.apply(x)][g.apply(y)]).collect())
        .collect();
    t.universal_factorization(&t2.monoid, &table)
}

/// `M ⊗ ℕ₀X` for `|X| = rank`, realised as the `rank`-fold biproduct of `M`;
/// `m ⊗ x` is the `x`-th injection of `m`.
#[derive(Debug, Clone)]
pub struct FreeTensor {
    pub product: Biproduct,
    pub rank: usize,
}

pub fn tensor_with_free(m: &FiniteCommMonoid, rank: usize) -> FreeTensor {
    FreeTensor {
        product: Biproduct::new(&vec![m.clone(); rank]),
        rank,
    }
}

impl FreeTensor {
    /// `m ⊗ x`.
    pub fn elementary(&self, m: usize, x: usize) -> usize {
        self.product.injections[x].apply(m)
    }

    /// Every element is `Σ m_x ⊗ x` for exactly one family `(m_x)`.
    pub fn representations_are_unique(&self) -> bool {
        let factor = match self.product.factors.first() {
            Some(f) => f.clone(),
            None => return self.product.monoid.is_trivial(),
        };
        let total = self.product.monoid.size();
        let mut hits = vec![0usize; total];
        let mut family = vec![0usize; self.rank];
        loop {
            let u = self
                .product
                .monoid
                .sum(family.iter().enumerate().map(|(x, &m)| self.elementary(m, x)));
            hits[u] += 1;
            // next family in mixed radix
            let mut i = 0;
            loop {
                if i == self.rank {
                    return hits.iter().all(|&h| h == 1);
                }
                family[i] += 1;
                if family[i] < factor.size() {
                    break;
                }
                family[i] = 0;
                i += 1;
            }
        }
    }
}
