//! Finitely presented commutative monoids whose generators have bounded
//! multiples.
//!
//! Each generator `g` carries a rule `(i + p)·g ∼ i·g`, so every element has
//! a representative in the box `∏ {0, …, i_g + p_g − 1}`. The remaining
//! relations are saturated over the box with a union-find.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::monoid::{FiniteCommMonoid, Orbit};
use crate::union_find::UnionFind;

pub const DEFAULT_BOX_LIMIT: u64 = 1_000_000;

/// A vector of generator counts.
pub type Counts = Vec<u64>;

#[derive(Debug, Clone)]
pub struct PresentedCommMonoid {
    rules: Vec<Orbit>,
    relations: Vec<(Counts, Counts)>,
}

impl PresentedCommMonoid {
    /// `rules[g]` is the reduction rule of generator `g`; each relation is a
    /// pair of count vectors of length `rules.len()`.
    pub fn new(rules: Vec<Orbit>, relations: Vec<(Counts, Counts)>) -> Result<Self> {
        for (l, r) in &relations {
            if l.len() != rules.len() || r.len() != rules.len() {
                return Err(Error::Shape);
            }
        }
        Ok(PresentedCommMonoid { rules, relations })
    }

    pub fn num_generators(&self) -> usize {
        self.rules.len()
    }

    pub fn rules(&self) -> &[Orbit] {
        &self.rules
    }

    pub fn relations(&self) -> &[(Counts, Counts)] {
        &self.relations
    }

    /// Per-coordinate sizes `i_g + p_g`.
    pub fn box_bounds(&self) -> Vec<u64> {
        self.rules.iter().map(|r| r.bound()).collect()
    }

    pub fn box_volume(&self) -> u128 {
        self.rules.iter().map(|r| r.bound() as u128).product()
    }

    /// Applies every generator's rule to its own coordinate.
    pub fn reduce(&self, v: &[u64]) -> Counts {
        v.iter()
            .zip(&self.rules)
            .map(|(&k, r)| if k == 0 { 0 } else { r.reduce(k) })
            .collect()
    }

    /// Mixed-radix index of a reduced vector; generator 0 is most significant,
    /// so index order is lexicographic order.
    pub fn encode(&self, v: &[u64]) -> usize {
        v.iter()
            .zip(&self.rules)
            .fold(0u64, |acc, (&k, r)| acc * r.bound() + k) as usize
    }

    pub fn decode(&self, mut x: usize) -> Counts {
        let mut v = vec![0; self.rules.len()];
        for (slot, r) in v.iter_mut().zip(&self.rules).rev() {
            let b = r.bound() as usize;
            *slot = (x % b) as u64;
            x /= b;
        }
        v
    }

    /// Computes the quotient of the box by the congruence generated by the
    /// relations. Refuses boxes larger than `box_limit`.
    pub fn saturate(&self, box_limit: u64) -> Result<PresentedQuotient> {
        let volume = self.box_volume();
        if volume > box_limit as u128 {
            return Err(Error::BoxTooLarge {
                volume,
                limit: box_limit,
            });
        }
        let volume = volume as usize;
        let k = self.num_generators();
        let bounds = self.box_bounds();
        let strides: Vec<usize> = (0..k)
            .map(|g| bounds[g + 1..].iter().product::<u64>() as usize)
            .collect();
        // adding e_g to a box index
        let step = |x: usize, g: usize| -> usize {
            let digit = (x / strides[g]) % bounds[g] as usize;
            let next = self.rules[g].reduce(digit as u64 + 1) as usize;
            x - digit * strides[g] + next * strides[g]
        };

        let mut uf = UnionFind::new(volume);
        let mut queue: VecDeque<(usize, usize)> = self
            .relations
            .iter()
            .map(|(l, r)| (self.encode(&self.reduce(l)), self.encode(&self.reduce(r))))
            .collect();
        while let Some((u, v)) = queue.pop_front() {
            if uf.union(u, v) {
                for g in 0..k {
                    queue.push_back((step(u, g), step(v, g)));
                }
            }
        }

        let reps_of = uf.min_representatives();
        let reps: Vec<usize> = (0..volume).filter(|&x| reps_of[x] == x).collect();
        let class_of_rep = |r: usize| reps.binary_search(&r).expect("class minimum");
        let class_of: Vec<usize> = reps_of.iter().map(|&r| class_of_rep(r)).collect();

        let add_vec = |a: &[u64], b: &[u64]| -> Counts {
            self.reduce(&a.iter().zip(b).map(|(x, y)| x + y).collect::<Vec<_>>())
        };
        let rep_vecs: Vec<Counts> = reps.iter().map(|&r| self.decode(r)).collect();
        let table = rep_vecs
            .iter()
            .map(|a| {
                rep_vecs
                    .iter()
                    .map(|b| class_of[self.encode(&add_vec(a, b))])
                    .collect()
            })
            .collect();
        let monoid = FiniteCommMonoid::from_table(table).expect("quotient of the box by a congruence");
        Ok(PresentedQuotient {
            monoid,
            class_of,
            representatives: rep_vecs,
        })
    }
}

/// The saturated quotient of a presented monoid.
#[derive(Debug, Clone)]
pub struct PresentedQuotient {
    pub monoid: FiniteCommMonoid,
    /// Class of each box index.
    pub class_of: Vec<usize>,
    /// Lexicographically least reduced vector of each class.
    pub representatives: Vec<Counts>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::cyclic;

    fn orbit(index: u64, period: u64) -> Orbit {
        Orbit { index, period }
    }

    #[test]
    fn one_generator_with_a_rule_is_cyclic() {
        let p = PresentedCommMonoid::new(vec![orbit(4, 2)], vec![]).unwrap();
        let q = p.saturate(DEFAULT_BOX_LIMIT).unwrap();
        assert_eq!(q.monoid, cyclic(4, 2));
    }

    #[test]
    fn relations_are_saturated() {
        // ⟨x | 6x = 4x⟩ with the extra relation 2x = 0 collapses to ℤ/2
        let p = PresentedCommMonoid::new(vec![orbit(4, 2)], vec![(vec![2], vec![0])]).unwrap();
        let q = p.saturate(DEFAULT_BOX_LIMIT).unwrap();
        assert_eq!(q.monoid, crate::catalog::cyclic_group(2));
        assert_eq!(q.representatives, vec![vec![0], vec![1]]);
    }

    #[test]
    fn encoding_is_lexicographic() {
        let p = PresentedCommMonoid::new(vec![orbit(1, 2), orbit(2, 2)], vec![]).unwrap();
        let all: Vec<Counts> = (0..p.box_volume() as usize).map(|x| p.decode(x)).collect();
        let mut sorted = all.clone();
        sorted.sort();
        assert_eq!(all, sorted);
        for (x, v) in all.iter().enumerate() {
            assert_eq!(p.encode(v), x);
        }
    }

    #[test]
    fn large_boxes_are_refused() {
        let p = PresentedCommMonoid::new(vec![orbit(1, 99); 4], vec![]).unwrap();
        assert!(matches!(p.saturate(1000), Err(Error::BoxTooLarge { volume: 100_000_000, limit: 1000 })));
    }
}
