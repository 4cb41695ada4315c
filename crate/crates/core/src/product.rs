//! Finite biproducts, submonoids, internal direct sums and direct summands.

use serde::Serialize;

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::hom::{enumerate_homs, MonoidHom};
use crate::monoid::FiniteCommMonoid;

/// `M_1 × … × M_k` with componentwise addition, which is both the product
/// and the coproduct of the factors.
///
/// Tuples are encoded in mixed radix with the first factor most
/// significant, so the zero tuple is element 0.
#[derive(Debug, Clone)]
pub struct Biproduct {
    pub monoid: FiniteCommMonoid,
    pub factors: Vec<FiniteCommMonoid>,
    pub injections: Vec<MonoidHom>,
    pub projections: Vec<MonoidHom>,
    strides: Vec<usize>,
}

pub fn biproduct(m: &FiniteCommMonoid, n: &FiniteCommMonoid) -> Biproduct {
    Biproduct::new(&[m.clone(), n.clone()])
}

impl Biproduct {
    pub fn new(factors: &[FiniteCommMonoid]) -> Self {
        let mut strides = vec![1usize; factors.len()];
        for j in (0..factors.len().saturating_sub(1)).rev() {
            strides[j] = strides[j + 1] * factors[j + 1].size();
        }
        let total: usize = factors.iter().map(|f| f.size()).product();
        let decode = |x: usize| -> Vec<usize> {
            factors
                .iter()
                .zip(&strides)
                .map(|(f, &s)| (x / s) % f.size())
                .collect()
        };
        let encode = |coords: &[usize]| -> usize { coords.iter().zip(&strides).map(|(c, s)| c * s).sum() };
        let table: Vec<Vec<usize>> = (0..total)
            .map(|x| {
                let cx = decode(x);
                (0..total)
                    .map(|y| {
                        let cy = decode(y);
                        let sum: Vec<usize> = factors
                            .iter()
                            .enumerate()
                            .map(|(j, f)| f.add(cx[j], cy[j]))
                            .collect();
                        encode(&sum)
                    })
                    .collect()
            })
            .collect();
        let monoid = FiniteCommMonoid::from_table(table).expect("componentwise addition is a monoid");
        let injections = factors
            .iter()
            .enumerate()
            .map(|(j, f)| {
                MonoidHom::new_unchecked(f, &monoid, f.elements().map(|m| m * strides[j]).collect())
            })
            .collect();
        let projections = factors
            .iter()
            .enumerate()
            .map(|(j, f)| {
                MonoidHom::new_unchecked(&monoid, f, (0..total).map(|x| (x / strides[j]) % f.size()).collect())
            })
            .collect();
        Biproduct {
            monoid,
            factors: factors.to_vec(),
            injections,
            projections,
            strides,
        }
    }

    pub fn encode(&self, coords: &[usize]) -> usize {
        coords.iter().zip(&self.strides).map(|(c, s)| c * s).sum()
    }

    pub fn decode(&self, x: usize) -> Vec<usize> {
        self.factors
            .iter()
            .zip(&self.strides)
            .map(|(f, &s)| (x / s) % f.size())
            .collect()
    }

    /// The pairing `P → ∏ M_j` of a family of homs `P → M_j`.
    pub fn pairing(&self, maps: &[MonoidHom]) -> Result<MonoidHom> {
        self.check_family(maps, true)?;
        let source = maps[0].source();
        let image = source
            .elements()
            .map(|p| self.encode(&maps.iter().map(|f| f.apply(p)).collect::<Vec<_>>()))
            .collect();
        Ok(MonoidHom::new_unchecked(source, &self.monoid, image))
    }

    /// The copairing `∐ M_j → P` of a family of homs `M_j → P`.
    pub fn copairing(&self, maps: &[MonoidHom]) -> Result<MonoidHom> {
        self.check_family(maps, false)?;
        let target = maps[0].target();
        let image = self
            .monoid
            .elements()
            .map(|x| {
                let coords = self.decode(x);
                target.sum(maps.iter().zip(coords).map(|(f, c)| f.apply(c)))
            })
            .collect();
        Ok(MonoidHom::new_unchecked(&self.monoid, target, image))
    }

    fn check_family(&self, maps: &[MonoidHom], into_factors: bool) -> Result<()> {
        if maps.len() != self.factors.len() || maps.is_empty() {
            return Err(Error::Mismatch("family length differs from number of factors"));
        }
        for (f, factor) in maps.iter().zip(&self.factors) {
            let (own, shared) = if into_factors {
                (f.target(), f.source())
            } else {
                (f.source(), f.target())
            };
            let reference = if into_factors { maps[0].source() } else { maps[0].target() };
            if own != factor || shared != reference {
                return Err(Error::Mismatch("family does not fit the biproduct"));
            }
        }
        Ok(())
    }

    /// Exhaustively checks the product property against a probe monoid `p`:
    /// every family of homs `p → M_j` has exactly one mediating hom.
    pub fn verify_product_property(&self, p: &FiniteCommMonoid, budget: &mut Budget) -> Result<bool> {
        let into_total = enumerate_homs(p, &self.monoid, budget)?;
        let families = hom_families(p, &self.factors, true, budget)?;
        for family in families {
            let count = into_total
                .iter()
                .filter(|f| {
                    self.projections
                        .iter()
                        .zip(&family)
                        .all(|(pj, fj)| f.then(pj).map(|c| c.image() == fj.image()).unwrap_or(false))
                })
                .count();
            if count != 1 {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Exhaustively checks the coproduct property against a probe monoid `p`.
    pub fn verify_coproduct_property(&self, p: &FiniteCommMonoid, budget: &mut Budget) -> Result<bool> {
        let out_of_total = enumerate_homs(&self.monoid, p, budget)?;
        let families = hom_families(p, &self.factors, false, budget)?;
        for family in families {
            let count = out_of_total
                .iter()
                .filter(|f| {
                    self.injections
                        .iter()
                        .zip(&family)
                        .all(|(ij, fj)| ij.then(f).map(|c| c.image() == fj.image()).unwrap_or(false))
                })
                .count();
            if count != 1 {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

// All families (f_j) with f_j: p → M_j (or M_j → p).
fn hom_families(
    p: &FiniteCommMonoid,
    factors: &[FiniteCommMonoid],
    from_p: bool,
    budget: &mut Budget,
) -> Result<Vec<Vec<MonoidHom>>> {
    let mut families: Vec<Vec<MonoidHom>> = vec![Vec::new()];
    for factor in factors {
        let homs = if from_p {
            enumerate_homs(p, factor, budget)?
        } else {
            enumerate_homs(factor, p, budget)?
        };
        let mut next = Vec::with_capacity(families.len() * homs.len());
        for fam in &families {
            for h in &homs {
                let mut f = fam.clone();
                f.push(h.clone());
                next.push(f);
            }
        }
        budget.charge(next.len() as u64)?;
        families = next;
    }
    Ok(families)
}

/// The closure of `subset ∪ {0}` under addition, sorted.
pub fn submonoid_generated(m: &FiniteCommMonoid, subset: &[usize]) -> Result<Vec<usize>> {
    let mut member = vec![false; m.size()];
    member[0] = true;
    let mut worklist = Vec::new();
    for &s in subset {
        m.check_element(s)?;
        if !member[s] {
            member[s] = true;
            worklist.push(s);
        }
    }
    let mut members: Vec<usize> = (0..m.size()).filter(|&x| member[x]).collect();
    while let Some(x) = worklist.pop() {
        for y in members.clone() {
            let s = m.add(x, y);
            if !member[s] {
                member[s] = true;
                members.push(s);
                worklist.push(s);
            }
        }
    }
    members.sort_unstable();
    Ok(members)
}

/// A submonoid as a monoid in its own right, with its inclusion.
///
/// Element `i` of the result is `subset[i]` (sorted, so 0 stays first).
pub fn restrict(m: &FiniteCommMonoid, subset: &[usize]) -> Result<(FiniteCommMonoid, MonoidHom)> {
    let mut elems = subset.to_vec();
    elems.sort_unstable();
    elems.dedup();
    if !m.is_submonoid(&elems) {
        return Err(Error::NotASubmonoid(0));
    }
    let pos = |x: usize| elems.binary_search(&x).expect("closed under addition");
    let table = elems
        .iter()
        .map(|&a| elems.iter().map(|&b| pos(m.add(a, b))).collect())
        .collect();
    let sub = match m.labels() {
        Some(labels) => FiniteCommMonoid::with_labels(table, elems.iter().map(|&e| labels[e].clone()).collect())?,
        None => FiniteCommMonoid::from_table(table)?,
    };
    let inclusion = MonoidHom::new_unchecked(&sub, m, elems);
    Ok((sub, inclusion))
}

/// Every submonoid of `m`, each sorted, in order of their bitmasks.
pub fn all_submonoids(m: &FiniteCommMonoid, budget: &mut Budget) -> Result<Vec<Vec<usize>>> {
    let n = m.size();
    if n > 24 {
        return Err(Error::BudgetExceeded { limit: budget.limit() });
    }
    let mut out = Vec::new();
    for mask in 0u32..(1 << (n - 1)) {
        budget.charge(1)?;
        let subset: Vec<usize> = std::iter::once(0)
            .chain((1..n).filter(|&x| mask & (1 << (x - 1)) != 0))
            .collect();
        if m.is_submonoid(&subset) {
            out.push(subset);
        }
    }
    Ok(out)
}

/// Two tuples of summands with the same sum.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DecompositionClash {
    pub left: Vec<usize>,
    pub right: Vec<usize>,
    pub sum: usize,
}

/// Outcome of checking whether `M` is the internal direct sum of submonoids.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DirectSumVerdict {
    /// (a) `M = Σ S_i`.
    pub sums_to_whole: bool,
    /// `S_i ∩ Σ_{j≠i} S_j = {0}` for every `i`.
    pub trivial_intersections: bool,
    /// `Σ s_i = 0` forces every `s_i = 0`.
    pub zero_sum_trivial: bool,
    /// (c) every element has at most one decomposition.
    pub unique_decompositions: bool,
    pub clash: Option<DecompositionClash>,
}

impl DirectSumVerdict {
    /// (b): the two weaker conditions together.
    pub fn weak_conditions(&self) -> bool {
        self.trivial_intersections && self.zero_sum_trivial
    }

    pub fn is_internal_direct_sum(&self) -> bool {
        self.sums_to_whole && self.unique_decompositions
    }
}

pub fn internal_direct_sum_check(m: &FiniteCommMonoid, subsets: &[Vec<usize>]) -> Result<DirectSumVerdict> {
    for (i, s) in subsets.iter().enumerate() {
        if !m.is_submonoid(s) {
            return Err(Error::NotASubmonoid(i));
        }
    }
    let sets: Vec<Vec<usize>> = subsets
        .iter()
        .map(|s| {
            let mut v = s.clone();
            v.sort_unstable();
            v.dedup();
            v
        })
        .collect();

    // tuples in lexicographic order, summed
    let mut first_tuple_for: Vec<Option<Vec<usize>>> = vec![None; m.size()];
    let mut clash = None;
    let mut zero_sum_trivial = true;
    let mut tuple = vec![0usize; sets.len()];
    loop {
        let elems: Vec<usize> = tuple.iter().zip(&sets).map(|(&i, s)| s[i]).collect();
        let sum = m.sum(elems.iter().copied());
        if sum == 0 && elems.iter().any(|&e| e != 0) {
            zero_sum_trivial = false;
        }
        match &first_tuple_for[sum] {
            None => first_tuple_for[sum] = Some(elems),
            Some(earlier) => {
                if clash.is_none() {
                    clash = Some(DecompositionClash {
                        left: elems,
                        right: earlier.clone(),
                        sum,
                    });
                }
            }
        }
        if !advance(&mut tuple, &sets) {
            break;
        }
    }
    let sums_to_whole = first_tuple_for.iter().all(|t| t.is_some());

    let trivial_intersections = (0..sets.len()).all(|i| {
        let others: Vec<usize> = sets
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .flat_map(|(_, s)| s.iter().copied())
            .collect();
        let rest = submonoid_generated(m, &others).expect("elements in range");
        sets[i].iter().all(|x| *x == 0 || rest.binary_search(x).is_err())
    });

    Ok(DirectSumVerdict {
        sums_to_whole,
        trivial_intersections,
        zero_sum_trivial,
        unique_decompositions: clash.is_none(),
        clash,
    })
}

fn advance(tuple: &mut [usize], sets: &[Vec<usize>]) -> bool {
    for j in (0..tuple.len()).rev() {
        tuple[j] += 1;
        if tuple[j] < sets[j].len() {
            return true;
        }
        tuple[j] = 0;
    }
    false
}

/// The summation map `S_1 × … × S_k → M` for submonoids `S_i`.
pub fn summation_map(m: &FiniteCommMonoid, subsets: &[Vec<usize>]) -> Result<(Biproduct, MonoidHom)> {
    let mut inclusions = Vec::new();
    let mut factors = Vec::new();
    for (i, s) in subsets.iter().enumerate() {
        let (sub, inc) = restrict(m, s).map_err(|_| Error::NotASubmonoid(i))?;
        factors.push(sub);
        inclusions.push(inc);
    }
    let bp = Biproduct::new(&factors);
    let sum = bp.copairing(&inclusions)?;
    Ok((bp, sum))
}

/// What the three direct-summand conditions look like for `M ⊆ N`.
#[derive(Debug, Clone)]
pub struct SummandAnalysis {
    pub complement: Option<Vec<usize>>,
    /// `p: N → M` with `p ∘ ι = id_M`, targeting the restricted submonoid.
    pub retraction: Option<MonoidHom>,
    /// `f: N → N` with `f² = f` and `f(N) = M`.
    pub idempotent: Option<MonoidHom>,
}

pub fn direct_summand_analysis(
    n: &FiniteCommMonoid,
    m: &[usize],
    budget: &mut Budget,
) -> Result<SummandAnalysis> {
    if !n.is_submonoid(m) {
        return Err(Error::NotASubmonoid(0));
    }
    let (sub, inclusion) = restrict(n, m)?;
    let mut wanted: Vec<usize> = m.to_vec();
    wanted.sort_unstable();
    wanted.dedup();

    let mut complement = None;
    for candidate in all_submonoids(n, budget)? {
        budget.charge(1)?;
        let verdict = internal_direct_sum_check(n, &[wanted.clone(), candidate.clone()])?;
        if verdict.is_internal_direct_sum() {
            complement = Some(candidate);
            break;
        }
    }

    let retraction = enumerate_homs(n, &sub, budget)?
        .into_iter()
        .find(|p| inclusion.then(p).map(|c| c.image() == MonoidHom::identity(&sub).image()).unwrap_or(false));

    let idempotent = enumerate_homs(n, n, budget)?.into_iter().find(|f| {
        let mut img: Vec<usize> = f.image().to_vec();
        img.sort_unstable();
        img.dedup();
        img == wanted && f.then(f).map(|ff| ff == *f).unwrap_or(false)
    });

    Ok(SummandAnalysis {
        complement,
        retraction,
        idempotent,
    })
}
