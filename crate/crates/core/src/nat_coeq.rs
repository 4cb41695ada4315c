//! Congruences and coequalizers on ℕ₀.
//!
//! Every congruence on ℕ₀ generated by finitely many nontrivial pairs has
//! quotient `C(i, p)`. The answer is computed as a candidate and then
//! certified twice:
//!
//! * certificate A: `n ↦ n` for `n < i`, `i + (n − i) mod p` otherwise,
//!   sends both sides of every seed pair to the same element, so it is a
//!   coequalizing hom onto `C(i, p)`;
//! * certificate B: an explicit chain of translated seed instances joining
//!   `i` and `i + p`.
//!
//! Both can be re-checked from the returned value alone.

use num_integer::Integer;
use serde::Serialize;

use crate::catalog::cyclic;
use crate::error::{Error, Result};
use crate::monoid::FiniteCommMonoid;
use crate::semiideal::Semiideal;
use crate::union_find::{ProofUnionFind, UnionFind};

pub const DEFAULT_BOUND_CAP: u64 = 1_000_000;

/// `C(i, p) = ℕ₀/(i ∼ i + p)` on `{0, …, i + p − 1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct CyclicMonoid {
    pub index: u64,
    pub period: u64,
}

impl CyclicMonoid {
    pub fn new(index: u64, period: u64) -> Self {
        assert!(period > 0);
        CyclicMonoid { index, period }
    }

    pub fn size(&self) -> u64 {
        self.index + self.period
    }

    /// The class of `n ∈ ℕ₀`.
    pub fn reduce(&self, n: u64) -> u64 {
        if n < self.index {
            n
        } else {
            self.index + (n - self.index) % self.period
        }
    }

    pub fn add(&self, x: u64, y: u64) -> u64 {
        self.reduce(x + y)
    }

    pub fn table(&self) -> Vec<Vec<u64>> {
        (0..self.size())
            .map(|x| (0..self.size()).map(|y| self.add(x, y)).collect())
            .collect()
    }

    pub fn to_monoid(&self) -> FiniteCommMonoid {
        cyclic(self.index as usize, self.period as usize)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum NatQuotientShape {
    /// The congruence is equality; the quotient is ℕ₀ itself.
    SymbolicNat,
    Cyclic(CyclicMonoid),
}

/// One relation instance `(a + k, b + k)` used in a merge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ChainStep {
    pub from: u64,
    pub to: u64,
    pub seed: (u64, u64),
    pub shift: u64,
}

impl ChainStep {
    /// The step is the translate of its seed by `shift`, in either direction.
    pub fn is_instance(&self) -> bool {
        let (a, b) = (self.seed.0 + self.shift, self.seed.1 + self.shift);
        (self.from, self.to) == (a, b) || (self.from, self.to) == (b, a)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NatQuotient {
    pub shape: NatQuotientShape,
    /// Nontrivial generating pairs, each as `(smaller, larger)`.
    pub seeds: Vec<(u64, u64)>,
    /// Pairs certificate A was checked on: the seeds plus any extra pairs.
    pub cert_a_pairs: Vec<(u64, u64)>,
    pub cert_a: bool,
    pub cert_b: Vec<ChainStep>,
    pub bound_used: u64,
}

/// `n ↦ n` below `i`, `i + (n − i) mod p` from `i` on.
pub fn candidate_map(c: CyclicMonoid, n: u64) -> u64 {
    c.reduce(n)
}

impl NatQuotient {
    pub fn cyclic(&self) -> Option<CyclicMonoid> {
        match self.shape {
            NatQuotientShape::Cyclic(c) => Some(c),
            NatQuotientShape::SymbolicNat => None,
        }
    }

    /// Re-checks certificate A from scratch.
    pub fn check_certificate_a(&self) -> bool {
        match self.shape {
            NatQuotientShape::SymbolicNat => self.seeds.is_empty(),
            NatQuotientShape::Cyclic(c) => self
                .cert_a_pairs
                .iter()
                .all(|&(a, b)| candidate_map(c, a) == candidate_map(c, b)),
        }
    }

    /// Replays certificate B: consecutive steps must join `i` to `i + p`
    /// and each must be a translate of a seed pair.
    pub fn check_certificate_b(&self) -> bool {
        let c = match self.shape {
            NatQuotientShape::SymbolicNat => return self.cert_b.is_empty(),
            NatQuotientShape::Cyclic(c) => c,
        };
        let mut at = c.index;
        for step in &self.cert_b {
            if step.from != at || !step.is_instance() || !self.seeds.contains(&step.seed) {
                return false;
            }
            at = step.to;
        }
        at == c.index + c.period && !self.cert_b.is_empty()
    }

    pub fn verify(&self) -> bool {
        self.cert_a && self.check_certificate_a() && self.check_certificate_b()
    }
}

fn normalize(pairs: &[(u64, u64)]) -> Vec<(u64, u64)> {
    let mut seeds: Vec<(u64, u64)> = pairs
        .iter()
        .filter(|(a, b)| a != b)
        .map(|&(a, b)| (a.min(b), a.max(b)))
        .collect();
    seeds.sort_unstable();
    seeds.dedup();
    seeds
}

/// The candidate shape `C(min a, gcd(b − a))`, or `None` when every pair is trivial.
pub fn candidate(pairs: &[(u64, u64)]) -> Option<CyclicMonoid> {
    let seeds = normalize(pairs);
    let index = seeds.iter().map(|p| p.0).min()?;
    let period = seeds.iter().fold(0, |g, &(a, b)| g.gcd(&(b - a)));
    Some(CyclicMonoid::new(index, period))
}

/// The quotient of ℕ₀ by the congruence generated by `pairs`.
///
/// Saturates translated seed instances over `{0, …, B}`, doubling `B` from
/// `2·(max b + i + p)` until the chain `i ∼ i + p` appears or `B` would pass
/// `bound_cap`.
pub fn nat_congruence_quotient(pairs: &[(u64, u64)], bound_cap: u64) -> Result<NatQuotient> {
    certify(normalize(pairs), Vec::new(), bound_cap)
}

fn certify(seeds: Vec<(u64, u64)>, extra: Vec<(u64, u64)>, bound_cap: u64) -> Result<NatQuotient> {
    let mut cert_a_pairs = seeds.clone();
    cert_a_pairs.extend(extra);
    let Some(c) = candidate(&seeds) else {
        return Ok(NatQuotient {
            shape: NatQuotientShape::SymbolicNat,
            seeds,
            cert_a_pairs,
            cert_a: true,
            cert_b: Vec::new(),
            bound_used: 0,
        });
    };
    let cert_a = cert_a_pairs
        .iter()
        .all(|&(a, b)| candidate_map(c, a) == candidate_map(c, b));
    let max_b = seeds.iter().map(|p| p.1).max().expect("nonempty");
    let mut bound = 2 * (max_b + c.index + c.period);
    loop {
        if bound > bound_cap {
            return Err(Error::BoundCapExceeded {
                cap: bound_cap,
                index: c.index,
                period: c.period,
            });
        }
        if let Some(chain) = merge_chain(&seeds, bound, c.index, c.index + c.period) {
            return Ok(NatQuotient {
                shape: NatQuotientShape::Cyclic(c),
                seeds,
                cert_a_pairs,
                cert_a,
                cert_b: chain,
                bound_used: bound,
            });
        }
        bound = bound.saturating_mul(2);
    }
}

fn merge_chain(seeds: &[(u64, u64)], bound: u64, from: u64, to: u64) -> Option<Vec<ChainStep>> {
    let mut uf: ProofUnionFind<((u64, u64), u64)> = ProofUnionFind::new(bound as usize + 1);
    for &(a, b) in seeds {
        for k in 0..=bound.saturating_sub(b) {
            uf.union((a + k) as usize, (b + k) as usize, ((a, b), k));
        }
    }
    let steps = uf.explain(from as usize, to as usize)?;
    Some(
        steps
            .into_iter()
            .map(|s| ChainStep {
                from: s.from as u64,
                to: s.to as u64,
                seed: s.reason.0,
                shift: s.reason.1,
            })
            .collect(),
    )
}

/// Class representatives (smallest member) of `{0, …, bound}` under the
/// translated seed instances that fit below `bound`.
pub fn saturated_classes(pairs: &[(u64, u64)], bound: u64) -> Vec<u64> {
    let mut uf = UnionFind::new(bound as usize + 1);
    for (a, b) in normalize(pairs) {
        for k in 0..=bound.saturating_sub(b) {
            uf.union((a + k) as usize, (b + k) as usize);
        }
    }
    uf.min_representatives().into_iter().map(|r| r as u64).collect()
}

/// The coequalizer of `a·, b·: ℕ₀ → ℕ₀`, seeded by `(a, b)`; certificate A
/// is also checked on `(an, bn)` for `n ≤ 10`.
pub fn coequalizer_nat(a: u64, b: u64, bound_cap: u64) -> Result<NatQuotient> {
    let seeds = normalize(&[(a, b)]);
    let extra = if seeds.is_empty() {
        Vec::new()
    } else {
        (2..=10).map(|n| (a * n, b * n)).collect()
    };
    certify(seeds, extra, bound_cap)
}

/// Classes of the naive relation `m ∼ m' ⟺ ∃ n, n': m + an + bn' = m' + an' + bn`
/// on `{0, …, limit}`, with witnesses searched among `n, n' ≤ limit`.
pub fn naive_nat_classes(a: u64, b: u64, limit: u64) -> Result<Vec<Vec<u64>>> {
    if a == b {
        return Err(Error::PreconditionFailed("naive relation needs a ≠ b".into()));
    }
    let mut uf = UnionFind::new(limit as usize + 1);
    for m in 0..=limit {
        for m2 in m + 1..=limit {
            let found = (0..=limit)
                .any(|n| (0..=limit).any(|n2| m + a * n + b * n2 == m2 + a * n2 + b * n));
            if found {
                uf.union(m as usize, m2 as usize);
            }
        }
    }
    let reps = uf.min_representatives();
    let mut classes: Vec<Vec<u64>> = Vec::new();
    for (x, &r) in reps.iter().enumerate() {
        if r == x {
            classes.push(vec![x as u64]);
        } else {
            let slot = classes.iter_mut().find(|c| c[0] == r as u64).expect("rep seen first");
            slot.push(x as u64);
        }
    }
    Ok(classes)
}

/// `ℕ₀/M ≅ ℤ/d` for a semiideal `M` with period `d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BourneNatQuotient {
    pub ideal: Semiideal,
    pub quotient: CyclicMonoid,
}

pub fn bourne_nat_quotient(generators: &[u64]) -> Result<BourneNatQuotient> {
    let ideal = Semiideal::new(generators)?;
    let d = ideal.period();
    Ok(BourneNatQuotient {
        ideal,
        quotient: CyclicMonoid::new(0, d),
    })
}

impl BourneNatQuotient {
    pub fn is_trivial(&self) -> bool {
        self.quotient.period == 1
    }

    /// The iso `ℕ₀/M → ℤ/d` sends the class of `n` to `n mod d`.
    pub fn class_of(&self, n: u64) -> u64 {
        n % self.quotient.period
    }

    /// Members `(a, b)` with `n + a = (n mod d) + b`: take `a = c` and
    /// `b = c + (n − n mod d)`, both in the periodic core.
    pub fn witness(&self, n: u64) -> (u64, u64) {
        let c = self.ideal.footing();
        (c, c + n - self.class_of(n))
    }

    /// Members `a` and `a + 1`, present exactly when the quotient is trivial.
    pub fn adjacent_members(&self) -> Option<(u64, u64)> {
        self.is_trivial().then(|| {
            let c = self.ideal.footing();
            (c, c + 1)
        })
    }

    /// Checks the witnesses for `n ≤ window`, and that related members of the
    /// window differ by a multiple of `d` (so the map is well defined and
    /// injective).
    pub fn verify(&self, window: u64) -> bool {
        let d = self.quotient.period;
        let witnesses_ok = (0..=window).all(|n| {
            let (a, b) = self.witness(n);
            self.ideal.contains(a) && self.ideal.contains(b) && n + a == self.class_of(n) + b
        });
        let members = self.ideal.members_up_to(window);
        let divisible = members.iter().all(|&m| m % d == 0);
        witnesses_ok && divisible
    }
}
