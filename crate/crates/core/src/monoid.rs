//! Finite commutative monoids given by addition tables.
//!
//! Element `0` is always the identity. Every monoid is treated as an
//! ℕ₀-semimodule through repeated addition, so the scalar action is derived
//! from the table rather than stored.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Where the sequence `m, 2m, 3m, …` starts to cycle.
///
/// The sequence is indexed from `1·m`, so `(index + period)·m = index·m`
/// with `index ≥ 1`. The identity has orbit `(1, 1)` and a group element of
/// order `n` has orbit `(1, n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Orbit {
    pub index: u64,
    pub period: u64,
}

impl Orbit {
    /// `index + period`, the first multiple that repeats an earlier one.
    pub fn bound(&self) -> u64 {
        self.index + self.period
    }

    /// Folds a multiplier `k ≥ 1` into `[1, index + period)` without changing `k·m`.
    pub fn reduce(&self, k: u64) -> u64 {
        if k < self.bound() {
            k
        } else {
            self.index + (k - self.index) % self.period
        }
    }
}

#[derive(Debug)]
struct Inner {
    size: usize,
    add: Vec<usize>,
    labels: Option<Vec<String>>,
    orbits: Vec<Orbit>,
    // multiples[m][k-1] = k·m for 1 ≤ k < index + period
    multiples: Vec<Vec<usize>>,
}

/// A validated finite commutative monoid. Cloning is cheap.
#[derive(Clone)]
pub struct FiniteCommMonoid {
    inner: Arc<Inner>,
}

/// The JSON interchange format: `{"size": n, "add": [[…]], "labels": [...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonoidJson {
    pub size: usize,
    pub add: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

/// Checks the monoid axioms and returns the first violation with a witness.
pub fn validate_monoid(table: &[Vec<usize>]) -> Result<FiniteCommMonoid> {
    FiniteCommMonoid::from_table(table.to_vec())
}

impl FiniteCommMonoid {
    pub fn from_table(table: Vec<Vec<usize>>) -> Result<Self> {
        Self::build(table, None)
    }

    pub fn with_labels(table: Vec<Vec<usize>>, labels: Vec<String>) -> Result<Self> {
        if labels.len() != table.len() {
            return Err(Error::Input(format!(
                "{} labels for {} elements",
                labels.len(),
                table.len()
            )));
        }
        Self::build(table, Some(labels))
    }

    fn build(table: Vec<Vec<usize>>, labels: Option<Vec<String>>) -> Result<Self> {
        let n = table.len();
        if n == 0 || table.iter().any(|row| row.len() != n) {
            return Err(Error::Shape);
        }
        for (row, entries) in table.iter().enumerate() {
            for (col, &value) in entries.iter().enumerate() {
                if value >= n {
                    return Err(Error::OutOfRange {
                        row,
                        col,
                        value,
                        size: n,
                    });
                }
            }
        }
        for m in 0..n {
            if table[0][m] != m || table[m][0] != m {
                return Err(Error::NotIdentity(m));
            }
        }
        for a in 0..n {
            for b in a + 1..n {
                if table[a][b] != table[b][a] {
                    return Err(Error::NotCommutative(a, b));
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                let ab = table[a][b];
                for c in 0..n {
                    if table[ab][c] != table[a][table[b][c]] {
                        return Err(Error::NotAssociative(a, b, c));
                    }
                }
            }
        }
        let add: Vec<usize> = table.into_iter().flatten().collect();
        let (orbits, multiples) = (0..n).map(|m| tabulate_orbit(&add, n, m)).unzip();
        Ok(FiniteCommMonoid {
            inner: Arc::new(Inner {
                size: n,
                add,
                labels,
                orbits,
                multiples,
            }),
        })
    }

    pub fn from_json(json: &MonoidJson) -> Result<Self> {
        if json.size != json.add.len() {
            return Err(Error::Input(format!(
                "size {} does not match {} table rows",
                json.size,
                json.add.len()
            )));
        }
        match &json.labels {
            Some(labels) => Self::with_labels(json.add.clone(), labels.clone()),
            None => Self::from_table(json.add.clone()),
        }
    }

    pub fn from_json_str(text: &str) -> Result<Self> {
        let json: MonoidJson =
            serde_json::from_str(text).map_err(|e| Error::Input(e.to_string()))?;
        Self::from_json(&json)
    }

    pub fn to_json(&self) -> MonoidJson {
        MonoidJson {
            size: self.size(),
            add: self.table(),
            labels: self.inner.labels.clone(),
        }
    }

    pub fn trivial() -> Self {
        Self::from_table(vec![vec![0]]).expect("trivial monoid")
    }

    pub fn size(&self) -> usize {
        self.inner.size
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.inner.size
    }

    pub fn is_trivial(&self) -> bool {
        self.inner.size == 1
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.inner.add[a * self.inner.size + b]
    }

    pub fn sum<I: IntoIterator<Item = usize>>(&self, items: I) -> usize {
        items.into_iter().fold(0, |acc, x| self.add(acc, x))
    }

    pub fn table(&self) -> Vec<Vec<usize>> {
        self.inner
            .add
            .chunks(self.inner.size)
            .map(|row| row.to_vec())
            .collect()
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.inner.labels.as_deref()
    }

    pub fn label(&self, m: usize) -> String {
        match &self.inner.labels {
            Some(labels) => labels[m].clone(),
            None => m.to_string(),
        }
    }

    pub fn check_element(&self, m: usize) -> Result<()> {
        if m < self.size() {
            Ok(())
        } else {
            Err(Error::ElementOutOfRange {
                element: m,
                size: self.size(),
            })
        }
    }

    pub fn orbit(&self, m: usize) -> Orbit {
        self.inner.orbits[m]
    }

    /// `k·m = m + … + m`, looked up in the cached orbit of `m`.
    pub fn scalar(&self, k: u64, m: usize) -> usize {
        if k == 0 {
            return 0;
        }
        let k = self.orbit(m).reduce(k);
        self.inner.multiples[m][(k - 1) as usize]
    }

    /// Same table, labels dropped; used where labels would be misleading.
    pub fn unlabeled(&self) -> Self {
        if self.inner.labels.is_none() {
            return self.clone();
        }
        Self::from_table(self.table()).expect("already validated")
    }

    /// Whether `subset` contains 0 and is closed under addition.
    pub fn is_submonoid(&self, subset: &[usize]) -> bool {
        let mut member = vec![false; self.size()];
        for &s in subset {
            if s >= self.size() {
                return false;
            }
            member[s] = true;
        }
        member[0]
            && subset
                .iter()
                .all(|&a| subset.iter().all(|&b| member[self.add(a, b)]))
    }

    /// Whether `perm` (a bijection fixing 0) is an isomorphism onto `other`.
    pub fn is_isomorphism(&self, other: &FiniteCommMonoid, perm: &[usize]) -> bool {
        self.size() == other.size()
            && perm.len() == self.size()
            && perm[0] == 0
            && self.elements().all(|a| {
                self.elements()
                    .all(|b| perm[self.add(a, b)] == other.add(perm[a], perm[b]))
            })
    }
}

fn tabulate_orbit(add: &[usize], n: usize, m: usize) -> (Orbit, Vec<usize>) {
    // first_seen[x] = k such that k·m = x was first reached
    let mut first_seen = vec![0u64; n];
    let mut multiples = Vec::new();
    let mut x = m;
    let mut k = 1u64;
    loop {
        if first_seen[x] != 0 {
            let index = first_seen[x];
            return (
                Orbit {
                    index,
                    period: k - index,
                },
                multiples,
            );
        }
        first_seen[x] = k;
        multiples.push(x);
        x = add[x * n + m];
        k += 1;
    }
}

impl PartialEq for FiniteCommMonoid {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
            || (self.inner.size == other.inner.size && self.inner.add == other.inner.add)
    }
}

impl Eq for FiniteCommMonoid {}

impl fmt::Debug for FiniteCommMonoid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteCommMonoid")
            .field("size", &self.size())
            .field("add", &self.table())
            .finish()
    }
}
