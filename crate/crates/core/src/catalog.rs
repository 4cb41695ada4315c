//! Named small monoids and exhaustive enumeration of tiny ones.

use crate::monoid::FiniteCommMonoid;

/// ℤ/n.
pub fn cyclic_group(n: usize) -> FiniteCommMonoid {
    assert!(n > 0);
    let table = (0..n)
        .map(|a| (0..n).map(|b| (a + b) % n).collect())
        .collect();
    FiniteCommMonoid::from_table(table).expect("cyclic group")
}

/// `{0, 1, …, n-1}` under `max`: 0 is the identity, `n-1` absorbs.
pub fn saturating(n: usize) -> FiniteCommMonoid {
    assert!(n > 0);
    let table = (0..n)
        .map(|a| (0..n).map(|b| a.max(b)).collect())
        .collect();
    FiniteCommMonoid::from_table(table).expect("saturating monoid")
}

/// The cyclic monoid `C(i, p) = ℕ₀/(i ∼ i+p)` on `{0, …, i+p-1}`.
pub fn cyclic(index: usize, period: usize) -> FiniteCommMonoid {
    assert!(period > 0);
    let n = index + period;
    let reduce = |s: usize| {
        if s < n {
            s
        } else {
            index + (s - index) % period
        }
    };
    let table = (0..n)
        .map(|a| (0..n).map(|b| reduce(a + b)).collect())
        .collect();
    FiniteCommMonoid::from_table(table).expect("cyclic monoid")
}

/// `{0, 1_A, 1_B, 2_B}` whose summands `{0,1_A}` and `{0,1_B,2_B}` do not
/// form an internal direct sum.
pub fn paper_four_element() -> FiniteCommMonoid {
    FiniteCommMonoid::with_labels(
        vec![
            vec![0, 1, 2, 3],
            vec![1, 1, 3, 3],
            vec![2, 3, 3, 3],
            vec![3, 3, 3, 3],
        ],
        ["0", "1_A", "1_B", "2_B"].map(String::from).to_vec(),
    )
    .expect("four-element table")
}

/// `{0, 1, 2}` with `1+1 = 1` and `2` absorbing.
pub fn paper_three_element() -> FiniteCommMonoid {
    saturating(3)
}

/// Every commutative monoid on `{0, …, n-1}` with identity 0, labelled
/// (isomorphic copies included). Feasible for `n ≤ 4`.
pub fn all_tables(n: usize) -> Vec<FiniteCommMonoid> {
    assert!((1..=5).contains(&n), "table enumeration only for 1 ≤ n ≤ 5");
    // free cells: unordered pairs (a, b) with 1 ≤ a ≤ b < n
    let cells: Vec<(usize, usize)> = (1..n)
        .flat_map(|a| (a..n).map(move |b| (a, b)))
        .collect();
    let mut out = Vec::new();
    let mut table: Vec<Vec<usize>> = (0..n)
        .map(|a| (0..n).map(|b| if a == 0 { b } else if b == 0 { a } else { 0 }).collect())
        .collect();
    fill(&cells, 0, n, &mut table, &mut out);
    out
}

fn fill(
    cells: &[(usize, usize)],
    pos: usize,
    n: usize,
    table: &mut Vec<Vec<usize>>,
    out: &mut Vec<FiniteCommMonoid>,
) {
    if pos == cells.len() {
        if let Ok(m) = FiniteCommMonoid::from_table(table.clone()) {
            out.push(m);
        }
        return;
    }
    let (a, b) = cells[pos];
    for v in 0..n {
        table[a][b] = v;
        table[b][a] = v;
        if partial_associative(table, cells, pos, n) {
            fill(cells, pos + 1, n, table, out);
        }
    }
}

// Checks associativity on triples whose entries are all already assigned.
fn partial_associative(
    table: &[Vec<usize>],
    cells: &[(usize, usize)],
    pos: usize,
    n: usize,
) -> bool {
    let assigned = |a: usize, b: usize| {
        if a == 0 || b == 0 {
            return true;
        }
        let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
        cells[..=pos].contains(&(lo, hi))
    };
    for a in 1..n {
        for b in 1..n {
            if !assigned(a, b) {
                continue;
            }
            for c in 1..n {
                if !assigned(b, c) {
                    continue;
                }
                let ab = table[a][b];
                let bc = table[b][c];
                if assigned(ab, c) && assigned(a, bc) && table[ab][c] != table[a][bc] {
                    return false;
                }
            }
        }
    }
    true
}

/// One representative per isomorphism class of commutative monoids of size `n`.
pub fn all_monoids(n: usize) -> Vec<FiniteCommMonoid> {
    let perms = permutations_fixing_zero(n);
    let mut seen = std::collections::BTreeSet::new();
    let mut out = Vec::new();
    for m in all_tables(n) {
        let canon = perms
            .iter()
            .map(|p| relabelled(&m, p))
            .min()
            .expect("at least the identity permutation");
        if seen.insert(canon.clone()) {
            out.push(FiniteCommMonoid::from_table(canon).expect("relabelling preserves axioms"));
        }
    }
    out
}

/// All monoids up to isomorphism with at most `max_size` elements, smallest first.
pub fn corpus(max_size: usize) -> Vec<FiniteCommMonoid> {
    (1..=max_size).flat_map(all_monoids).collect()
}

/// Bijections of `{0, …, n-1}` that fix 0.
pub fn permutations_fixing_zero(n: usize) -> Vec<Vec<usize>> {
    let mut rest: Vec<usize> = (1..n).collect();
    let mut out = Vec::new();
    permute(&mut rest, 0, &mut out);
    out.into_iter()
        .map(|tail| std::iter::once(0).chain(tail).collect())
        .collect()
}

fn permute(items: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
    if k == items.len() {
        out.push(items.clone());
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permute(items, k + 1, out);
        items.swap(k, i);
    }
}

// Table of `m` transported along `perm` (element x becomes perm[x]).
fn relabelled(m: &FiniteCommMonoid, perm: &[usize]) -> Vec<Vec<usize>> {
    let n = m.size();
    let mut table = vec![vec![0; n]; n];
    for a in 0..n {
        for b in 0..n {
            table[perm[a]][perm[b]] = perm[m.add(a, b)];
        }
    }
    table
}

/// Finds an isomorphism `a → b` (as an image table) if one exists.
pub fn find_isomorphism(a: &FiniteCommMonoid, b: &FiniteCommMonoid) -> Option<Vec<usize>> {
    if a.size() != b.size() {
        return None;
    }
    permutations_fixing_zero(a.size())
        .into_iter()
        .find(|p| a.is_isomorphism(b, p))
}
