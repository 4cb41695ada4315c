//! Finitely generated semiideals of ℕ₀ (submonoids of `(ℕ₀, +)`).
//!
//! Membership is decided once, at construction, up to the footing; beyond
//! it a number is a member exactly when the period divides it. Values are
//! therefore immutable and can be shared freely between threads.

use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Semiideal {
    generators: Vec<u64>,
    period: u64,
    // footing divided by the period
    scaled_footing: u64,
    // membership of k·period for k < scaled_footing
    scaled_members: Vec<bool>,
}

/// JSON summary used by the CLI.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SemiidealSummary {
    pub generators: Vec<u64>,
    pub period: u64,
    pub footing: u64,
    pub minimal_generators: Vec<u64>,
    pub cyclic: bool,
}

impl Semiideal {
    /// `⟨generators⟩`. Zeros and repeats are ignored; an ideal with no
    /// positive generator is `{0}` and is rejected.
    pub fn new(generators: &[u64]) -> Result<Self> {
        let mut gens: Vec<u64> = generators.iter().copied().filter(|&g| g > 0).collect();
        gens.sort_unstable();
        gens.dedup();
        if gens.is_empty() {
            return Err(Error::EmptyIdeal);
        }
        let period = gens.iter().fold(0, |acc, &g| acc.gcd(&g));
        let scaled: Vec<usize> = gens.iter().map(|&g| (g / period) as usize).collect();
        let run_needed = scaled[0];

        // DP over k·period; stop after the first run of `run_needed`
        // consecutive members, which then continues forever.
        let mut member = vec![true];
        let mut run = 0usize;
        let mut k = 0usize;
        let run_start = loop {
            k += 1;
            let is_member = scaled.iter().any(|&g| g <= k && member[k - g]);
            member.push(is_member);
            if is_member {
                run += 1;
                if run == run_needed {
                    break k + 1 - run_needed;
                }
            } else {
                run = 0;
            }
        };
        member.truncate(run_start);
        Ok(Semiideal {
            generators: gens,
            period,
            scaled_footing: run_start as u64,
            scaled_members: member,
        })
    }

    /// The generators as given (sorted, positive, distinct).
    pub fn generators(&self) -> &[u64] {
        &self.generators
    }

    pub fn contains(&self, n: u64) -> bool {
        if n % self.period != 0 {
            return false;
        }
        let k = n / self.period;
        k >= self.scaled_footing || self.scaled_members[k as usize]
    }

    /// The period `d`: the gcd of all members, equal to their minimal difference.
    pub fn period(&self) -> u64 {
        self.period
    }

    /// The footing `c`: the least nonzero `c` with `{c' ∈ M | c' ≥ c} = {c + nd}`.
    pub fn footing(&self) -> u64 {
        self.scaled_footing * self.period
    }

    /// The periodic core `{c + nd} ∪ {0}` as `(c, d)`.
    pub fn perc(&self) -> (u64, u64) {
        (self.footing(), self.period)
    }

    /// Members in `[0, limit]`, ascending.
    pub fn members_up_to(&self, limit: u64) -> Vec<u64> {
        (0..=limit / self.period)
            .map(|k| k * self.period)
            .filter(|&n| self.contains(n))
            .collect()
    }

    /// Smallest nonzero member.
    pub fn smallest(&self) -> u64 {
        self.generators[0]
    }

    /// The canonical generating system: each generator is kept unless it is
    /// already generated by the smaller ones kept before it.
    pub fn minimal_generators(&self) -> Vec<u64> {
        let mut kept: Vec<u64> = Vec::new();
        for &g in &self.generators {
            let generated = !kept.is_empty()
                && Semiideal::new(&kept).expect("nonempty").contains(g);
            if !generated {
                kept.push(g);
            }
        }
        assert!(
            kept.len() as u64 <= self.smallest() / self.period,
            "canonical generating system larger than e/d"
        );
        kept
    }

    pub fn is_cyclic(&self) -> bool {
        self.minimal_generators().len() == 1
    }

    /// The first pair `(a, a + d)` of members with `a ≠ 0` and minimal
    /// difference, found by scanning members up to `window`.
    pub fn minimal_difference_in_window(&self, window: u64) -> Option<(u64, u64)> {
        let members: Vec<u64> = self.members_up_to(window).into_iter().filter(|&x| x > 0).collect();
        let mut best: Option<(u64, u64)> = None;
        for (i, &a) in members.iter().enumerate() {
            for &b in &members[i + 1..] {
                if best.map_or(true, |(x, y)| b - a < y - x) {
                    best = Some((a, b));
                }
            }
        }
        best
    }

    /// Given members `a ≠ 0` and `a + d`, returns `c = d·a·(a+d)` and checks
    /// `c + nd ∈ M` for `n ≤ window`.
    pub fn difference_witness_core(&self, a: u64, d: u64, window: u64) -> Result<u64> {
        if a == 0 || d == 0 || !self.contains(a) || !self.contains(a + d) {
            return Err(Error::PreconditionFailed(format!(
                "need nonzero members {a} and {a} + {d}"
            )));
        }
        let c = d * a * (a + d);
        if let Some(n) = (0..=window).find(|&n| !self.contains(c + n * d)) {
            return Err(Error::PreconditionFailed(format!("{c} + {n}·{d} is not a member")));
        }
        Ok(c)
    }

    pub fn summary(&self) -> SemiidealSummary {
        let minimal = self.minimal_generators();
        SemiidealSummary {
            generators: self.generators.clone(),
            period: self.period,
            footing: self.footing(),
            cyclic: minimal.len() == 1,
            minimal_generators: minimal,
        }
    }
}

/// Closed form for the footing of `⟨a, b⟩`: `d(a/d − 1)(b/d − 1)` with
/// `d = gcd(a, b)`. When one generator divides the other the ideal is
/// cyclic and the footing is `d`.
pub fn footing_two_generators(a: u64, b: u64) -> u64 {
    assert!(a > 0 && b > 0);
    let d = a.gcd(&b);
    let (a1, b1) = (a / d, b / d);
    if a1 == 1 || b1 == 1 {
        d
    } else {
        d * (a1 - 1) * (b1 - 1)
    }
}

/// Nonnegative `(r, s)` with `(a − 1)(b − 1) = ra + sb`, which exists iff
/// `gcd(a, b) = 1`.
///
/// Writes `1 = ua − vb` with `0 ≤ v < a` and returns `(u − 1, a − v − 1)`.
pub fn bezout_nonneg(a: u64, b: u64) -> Option<(u64, u64)> {
    assert!(a > 0 && b > 0);
    if a.gcd(&b) != 1 {
        return None;
    }
    let (a_, b_) = (a as i128, b as i128);
    // v ≡ −b⁻¹ (mod a)
    let inv_b = i128::extended_gcd(&b_.rem_euclid(a_), &a_).x.rem_euclid(a_);
    let v = (-inv_b).rem_euclid(a_);
    let u = (1 + v * b_) / a_;
    debug_assert_eq!(u * a_ - v * b_, 1);
    Some(((u - 1) as u64, (a_ - v - 1) as u64))
}

/// Nonnegative `(r, s)` with `d(a/d − 1)(b/d − 1) = ra + sb`, which exists
/// iff `gcd(a, b) = d`.
pub fn bezout_nonneg_scaled(a: u64, b: u64, d: u64) -> Result<Option<(u64, u64)>> {
    if d == 0 || a % d != 0 || b % d != 0 {
        return Err(Error::NotDivisible { a, b, divisor: d });
    }
    if a.gcd(&b) != d {
        return Ok(None);
    }
    Ok(bezout_nonneg(a / d, b / d))
}
