//! Self-check suites run by `semimod verify`.

use std::str::FromStr;

use num_integer::Integer;
use serde::Serialize;

use crate::budget::Budget;
use crate::catalog::{corpus, paper_four_element, paper_three_element};
use crate::coherence::{associativity_iso, hom_adjunction_check, symmetry_iso};
use crate::congruence::{congruence_closure, enumerate_congruences};
use crate::error::{Error, Result};
use crate::nat_coeq::{coequalizer_nat, naive_nat_classes, DEFAULT_BOUND_CAP};
use crate::product::{direct_summand_analysis, internal_direct_sum_check};
use crate::semiideal::{bezout_nonneg, footing_two_generators, Semiideal};
use crate::tensor::DEFAULT_BOX_LIMIT;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    PaperTables,
    Oracles,
    Coherence,
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "paper-tables" => Ok(Suite::PaperTables),
            "oracles" => Ok(Suite::Oracles),
            "coherence" => Ok(Suite::Coherence),
            other => Err(Error::Input(format!(
                "unknown suite {other:?} (expected paper-tables, oracles or coherence)"
            ))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

fn check(name: &str, passed: bool, detail: impl Into<String>) -> Check {
    Check {
        name: name.to_string(),
        passed,
        detail: detail.into(),
    }
}

pub fn run_suite(suite: Suite, budget: u64) -> Result<Vec<Check>> {
    match suite {
        Suite::PaperTables => paper_tables(budget),
        Suite::Oracles => oracles(budget),
        Suite::Coherence => coherence(budget),
    }
}

/// The addition table of the coequalizer of `4·, 6·`, row by row.
pub const COEQ_4_6_TABLE: [[u64; 6]; 6] = [
    [0, 1, 2, 3, 4, 5],
    [1, 2, 3, 4, 5, 4],
    [2, 3, 4, 5, 4, 5],
    [3, 4, 5, 4, 5, 4],
    [4, 5, 4, 5, 4, 5],
    [5, 4, 5, 4, 5, 4],
];

fn paper_tables(budget: u64) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    let q = coequalizer_nat(4, 6, DEFAULT_BOUND_CAP)?;
    let table = q.cyclic().map(|c| c.table()).unwrap_or_default();
    let expected: Vec<Vec<u64>> = COEQ_4_6_TABLE.iter().map(|r| r.to_vec()).collect();
    out.push(check(
        "coequalizer of 4· and 6· is the printed 6×6 table",
        table == expected && q.verify(),
        format!("{} classes", table.len()),
    ));

    let m = paper_four_element();
    let v = internal_direct_sum_check(&m, &[vec![0, 1], vec![0, 2, 3]])?;
    let clash_ok = v
        .clash
        .as_ref()
        .map(|c| c.left == vec![1, 2] && c.right == vec![0, 3] && c.sum == 3)
        .unwrap_or(false);
    out.push(check(
        "four-element monoid: weak conditions hold, decompositions are not unique",
        v.sums_to_whole && v.trivial_intersections && v.zero_sum_trivial && !v.unique_decompositions && clash_ok,
        "1_A + 1_B = 0 + 2_B",
    ));

    let n = paper_three_element();
    let a = direct_summand_analysis(&n, &[0, 1], &mut Budget::new(budget))?;
    let retraction_ok = a.retraction.as_ref().map(|p| p.image() == [0, 1, 1]).unwrap_or(false);
    out.push(check(
        "three-element monoid: retraction and idempotent but no complement",
        retraction_ok && a.idempotent.is_some() && a.complement.is_none(),
        "p(1) = p(2) = 1",
    ));
    Ok(out)
}

// Footing of ⟨a, b⟩ by sieving members up to a bound past the Frobenius number.
fn sieve_footing(a: u64, b: u64) -> u64 {
    let d = a.gcd(&b);
    let limit = (a * b + a + b) as usize;
    let mut member = vec![false; limit + 1];
    member[0] = true;
    for x in 1..=limit {
        member[x] = (x >= a as usize && member[x - a as usize]) || (x >= b as usize && member[x - b as usize]);
    }
    // least nonzero multiple c of d with every multiple of d from c on a member
    let mut c = limit as u64 / d * d;
    while c >= 2 * d && member[(c - d) as usize] {
        c -= d;
    }
    c
}

fn oracles(budget: u64) -> Result<Vec<Check>> {
    let mut out = Vec::new();

    let mut bad = Vec::new();
    for a in 2..=60u64 {
        for b in 2..=60u64 {
            if a != b {
                let dp = Semiideal::new(&[a, b])?.footing();
                if footing_two_generators(a, b) != dp || sieve_footing(a, b) != dp {
                    bad.push((a, b));
                }
            }
        }
    }
    out.push(check("footing formula agrees with the membership DP", bad.is_empty(), format!("{} mismatches", bad.len())));

    let mut bad = 0;
    for a in 2..=40u64 {
        for b in 2..=40u64 {
            let target = (a - 1) * (b - 1);
            let verified = matches!(bezout_nonneg(a, b), Some((r, s)) if r * a + s * b == target);
            let searched = (0..=target / a).any(|r| (target - r * a) % b == 0);
            if verified != (a.gcd(&b) == 1) || searched != (a.gcd(&b) == 1) {
                bad += 1;
            }
        }
    }
    out.push(check("nonnegative Bézout solution exists iff gcd = 1", bad == 0, format!("{bad} mismatches")));

    let mut b = Budget::new(budget);
    let mut cases = 0;
    let mut bad = 0;
    for m in corpus(4) {
        let all = enumerate_congruences(&m, &mut b)?;
        let pairs: Vec<(usize, usize)> = m.elements().flat_map(|x| (x + 1..m.size()).map(move |y| (x, y))).collect();
        let mut seed_sets: Vec<Vec<(usize, usize)>> = vec![vec![]];
        for (i, &p) in pairs.iter().enumerate() {
            seed_sets.push(vec![p]);
            for &q in &pairs[i + 1..] {
                seed_sets.push(vec![p, q]);
            }
        }
        for seeds in seed_sets {
            cases += 1;
            let closure = congruence_closure(&m, &seeds)?;
            let meet = all
                .iter()
                .filter(|c| seeds.iter().all(|&(x, y)| c.related(x, y)))
                .try_fold(None::<crate::congruence::Congruence>, |acc, c| -> Result<_> {
                    Ok(Some(match acc {
                        None => c.clone(),
                        Some(a) => a.intersection(c)?,
                    }))
                })?;
            if meet.as_ref() != Some(&closure) {
                bad += 1;
            }
        }
    }
    out.push(check(
        "congruence closure is the meet of all congruences containing the seeds",
        bad == 0,
        format!("{cases} seed sets, {bad} mismatches"),
    ));

    let naive = naive_nat_classes(4, 6, 20)?;
    let coeq = coequalizer_nat(4, 6, DEFAULT_BOUND_CAP)?;
    out.push(check(
        "naive relation has 2 classes, the coequalizer 6",
        naive.len() == 2 && coeq.cyclic().map(|c| c.size()) == Some(6),
        format!("{} vs {}", naive.len(), coeq.cyclic().map(|c| c.size()).unwrap_or(0)),
    ));
    out.push(check("coequalizer certificates replay", coeq.verify(), format!("{} chain steps", coeq.cert_b.len())));
    Ok(out)
}

fn coherence(budget: u64) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    let monoids = corpus(3);
    let box_limit = budget.min(DEFAULT_BOX_LIMIT);

    let mut count = 0;
    let mut bad = 0;
    for m in &monoids {
        for n in &monoids {
            for p in &monoids {
                count += 1;
                if !associativity_iso(m, n, p, box_limit)?.verify() {
                    bad += 1;
                }
            }
        }
    }
    out.push(check("associativity isomorphisms on the size-3 corpus", bad == 0, format!("{count} triples, {bad} failures")));

    let mut count = 0;
    let mut bad = 0;
    for m in &monoids {
        for n in &monoids {
            count += 1;
            if !symmetry_iso(m, n, box_limit)?.verify() {
                bad += 1;
            }
        }
    }
    out.push(check("symmetry isomorphisms on the size-3 corpus", bad == 0, format!("{count} pairs, {bad} failures")));

    let mut b = Budget::new(budget);
    let mut count = 0;
    let mut bad = 0;
    for p in &monoids {
        for m in &monoids {
            for n in &monoids {
                count += 1;
                if !hom_adjunction_check(p, m, n, box_limit, &mut b)?.passed() {
                    bad += 1;
                }
            }
        }
    }
    out.push(check("hom-tensor adjunction on the size-3 corpus", bad == 0, format!("{count} triples, {bad} failures")));
    Ok(out)
}
