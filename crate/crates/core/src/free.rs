//! Free ℕ₀-semimodules over finite label sets.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::monoid::FiniteCommMonoid;

/// A finitely supported vector `X → ℕ₀`. Only positive entries are stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NatVec<L: Ord> {
    coords: BTreeMap<L, u64>,
}

impl<L: Ord + Clone> NatVec<L> {
    pub fn zero() -> Self {
        NatVec {
            coords: BTreeMap::new(),
        }
    }

    /// The basis vector `ι(x)`.
    pub fn basis(x: L) -> Self {
        Self::from_pairs([(x, 1)])
    }

    pub fn from_pairs<I: IntoIterator<Item = (L, u64)>>(pairs: I) -> Self {
        let mut v = Self::zero();
        for (x, k) in pairs {
            v.add_at(x, k);
        }
        v
    }

    pub fn get(&self, x: &L) -> u64 {
        self.coords.get(x).copied().unwrap_or(0)
    }

    pub fn add_at(&mut self, x: L, k: u64) {
        if k > 0 {
            *self.coords.entry(x).or_insert(0) += k;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&L, u64)> {
        self.coords.iter().map(|(x, &k)| (x, k))
    }

    pub fn support(&self) -> impl Iterator<Item = &L> {
        self.coords.keys()
    }

    pub fn plus(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (x, k) in other.iter() {
            out.add_at(x.clone(), k);
        }
        out
    }

    pub fn scaled(&self, r: u64) -> Self {
        if r == 0 {
            return Self::zero();
        }
        NatVec {
            coords: self.coords.iter().map(|(x, &k)| (x.clone(), k * r)).collect(),
        }
    }
}

/// The unique hom `ℕ₀X → M` extending a map `f: X → M`, i.e.
/// `g(α) = Σ α(x)·f(x)`.
#[derive(Debug, Clone)]
pub struct FreeMap<L: Ord> {
    target: FiniteCommMonoid,
    values: BTreeMap<L, usize>,
}

pub fn free_universal_map<L: Ord + Clone>(
    labels: &[L],
    f: impl Fn(&L) -> usize,
    target: &FiniteCommMonoid,
) -> Result<FreeMap<L>> {
    let mut values = BTreeMap::new();
    for x in labels {
        let m = f(x);
        target.check_element(m)?;
        values.insert(x.clone(), m);
    }
    Ok(FreeMap {
        target: target.clone(),
        values,
    })
}

impl<L: Ord + Clone> FreeMap<L> {
    pub fn eval(&self, v: &NatVec<L>) -> Result<usize> {
        let mut acc = 0;
        for (x, k) in v.iter() {
            let m = *self
                .values
                .get(x)
                .ok_or_else(|| Error::Input("vector has a label outside the generating set".into()))?;
            acc = self.target.add(acc, self.target.scalar(k, m));
        }
        Ok(acc)
    }
}
