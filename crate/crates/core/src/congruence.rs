//! Congruence relations on finite commutative monoids.
//!
//! A congruence is stored as a canonical labelling: every element points at
//! the smallest element of its class. Quotients number their classes by
//! these representatives, so the class of 0 is always element 0.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::hom::{enumerate_homs, MonoidHom};
use crate::monoid::FiniteCommMonoid;
use crate::product::{restrict, Biproduct};
use crate::union_find::UnionFind;

#[derive(Clone)]
pub struct Congruence {
    carrier: FiniteCommMonoid,
    rep: Vec<usize>,
    generators: Vec<(usize, usize)>,
}

/// JSON form: `{"classes": [[indices]]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CongruenceJson {
    pub classes: Vec<Vec<usize>>,
}

impl Congruence {
    /// The equality relation.
    pub fn identity(m: &FiniteCommMonoid) -> Self {
        Congruence {
            carrier: m.clone(),
            rep: m.elements().collect(),
            generators: Vec::new(),
        }
    }

    /// The relation with a single class.
    pub fn total(m: &FiniteCommMonoid) -> Self {
        Congruence {
            carrier: m.clone(),
            rep: vec![0; m.size()],
            generators: Vec::new(),
        }
    }

    /// Builds a congruence from any labelling whose fibres are the classes,
    /// rejecting partitions that are not translation-closed.
    pub fn from_labels(m: &FiniteCommMonoid, labels: &[usize]) -> Result<Self> {
        if labels.len() != m.size() {
            return Err(Error::ImageLength {
                expected: m.size(),
                got: labels.len(),
            });
        }
        let mut first: std::collections::HashMap<usize, usize> = Default::default();
        let rep = labels
            .iter()
            .enumerate()
            .map(|(x, l)| *first.entry(*l).or_insert(x))
            .collect();
        let c = Congruence {
            carrier: m.clone(),
            rep,
            generators: Vec::new(),
        };
        match c.translation_witness() {
            Some((a, b, w)) => Err(Error::NotACongruence(a, b, w)),
            None => Ok(c),
        }
    }

    pub fn from_json(m: &FiniteCommMonoid, json: &CongruenceJson) -> Result<Self> {
        let mut labels = vec![usize::MAX; m.size()];
        for (i, class) in json.classes.iter().enumerate() {
            for &x in class {
                m.check_element(x)?;
                if labels[x] != usize::MAX {
                    return Err(Error::Input(format!("element {x} appears in two classes")));
                }
                labels[x] = i;
            }
        }
        if let Some(x) = labels.iter().position(|&l| l == usize::MAX) {
            return Err(Error::Input(format!("element {x} is in no class")));
        }
        Self::from_labels(m, &labels)
    }

    pub fn to_json(&self) -> CongruenceJson {
        CongruenceJson {
            classes: self.classes(),
        }
    }

    pub fn carrier(&self) -> &FiniteCommMonoid {
        &self.carrier
    }

    /// The seed pairs this congruence was generated from, if any.
    pub fn generators(&self) -> &[(usize, usize)] {
        &self.generators
    }

    /// Smallest element of the class of `m`.
    pub fn representative(&self, m: usize) -> usize {
        self.rep[m]
    }

    pub fn related(&self, a: usize, b: usize) -> bool {
        self.rep[a] == self.rep[b]
    }

    /// Classes sorted by their smallest element; each class sorted.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let reps = self.representatives();
        reps.iter()
            .map(|&r| self.carrier.elements().filter(|&x| self.rep[x] == r).collect())
            .collect()
    }

    pub fn representatives(&self) -> Vec<usize> {
        self.carrier.elements().filter(|&x| self.rep[x] == x).collect()
    }

    pub fn num_classes(&self) -> usize {
        self.carrier.elements().filter(|&x| self.rep[x] == x).count()
    }

    /// Index of the class of `m` in [`Congruence::classes`] order.
    pub fn class_index(&self, m: usize) -> usize {
        self.representatives()
            .binary_search(&self.rep[m])
            .expect("representative is a class minimum")
    }

    /// `self ⊆ other` as relations.
    pub fn is_finer_than(&self, other: &Congruence) -> bool {
        self.carrier
            .elements()
            .all(|x| other.related(x, self.rep[x]))
    }

    pub fn intersection(&self, other: &Congruence) -> Result<Congruence> {
        if self.carrier != other.carrier {
            return Err(Error::Mismatch("congruences on different monoids"));
        }
        let n = self.carrier.size();
        let labels: Vec<usize> = (0..n).map(|x| self.rep[x] * n + other.rep[x]).collect();
        Congruence::from_labels(&self.carrier, &labels)
    }

    /// A triple `(a, b, w)` with `a ∼ b` but `a + w ≁ b + w`, if any.
    pub fn translation_witness(&self) -> Option<(usize, usize, usize)> {
        let m = &self.carrier;
        for a in m.elements() {
            let b = self.rep[a];
            if a == b {
                continue;
            }
            for w in m.elements() {
                if !self.related(m.add(a, w), m.add(b, w)) {
                    return Some((b, a, w));
                }
            }
        }
        None
    }

    /// Checks `k·a ∼ k·b` for related pairs and `k ≤ max_k`.
    pub fn scalar_closed_up_to(&self, max_k: u64) -> bool {
        let m = &self.carrier;
        m.elements().all(|a| {
            (0..=max_k).all(|k| self.related(m.scalar(k, a), m.scalar(k, self.rep[a])))
        })
    }

    /// The class of 0, a submonoid.
    pub fn zero_class(&self) -> Vec<usize> {
        self.carrier.elements().filter(|&x| self.rep[x] == 0).collect()
    }
}

// Equality is equality of relations; generators are not compared.
impl PartialEq for Congruence {
    fn eq(&self, other: &Self) -> bool {
        self.carrier == other.carrier && self.rep == other.rep
    }
}

impl Eq for Congruence {}

impl std::fmt::Debug for Congruence {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Congruence{:?}", self.classes())
    }
}

/// The class of 0 of a congruence.
pub fn zero_class(c: &Congruence) -> Vec<usize> {
    c.zero_class()
}

/// The smallest congruence containing `pairs`.
///
/// Union-find plus a worklist: whenever two classes merge because of a pair
/// `(u, v)`, every translate `(u + w, v + w)` is queued.
pub fn congruence_closure(m: &FiniteCommMonoid, pairs: &[(usize, usize)]) -> Result<Congruence> {
    for &(a, b) in pairs {
        m.check_element(a)?;
        m.check_element(b)?;
    }
    let mut uf = UnionFind::new(m.size());
    let mut queue: VecDeque<(usize, usize)> = pairs.iter().copied().collect();
    while let Some((u, v)) = queue.pop_front() {
        if uf.union(u, v) {
            for w in m.elements() {
                queue.push_back((m.add(u, w), m.add(v, w)));
            }
        }
    }
    Ok(Congruence {
        carrier: m.clone(),
        rep: uf.min_representatives(),
        generators: pairs.to_vec(),
    })
}

/// `M/∼` together with the projection `ν`.
#[derive(Debug, Clone)]
pub struct Quotient {
    pub monoid: FiniteCommMonoid,
    pub projection: MonoidHom,
}

pub fn quotient(c: &Congruence) -> Quotient {
    let m = &c.carrier;
    let reps = c.representatives();
    let index_of = |x: usize| reps.binary_search(&c.rep[x]).expect("class minimum");
    let table = reps
        .iter()
        .map(|&a| reps.iter().map(|&b| index_of(m.add(a, b))).collect())
        .collect();
    let monoid = FiniteCommMonoid::from_table(table).expect("quotient by a congruence is a monoid");
    let projection = MonoidHom::new_unchecked(m, &monoid, m.elements().map(index_of).collect());
    Quotient { monoid, projection }
}

/// `m ∼_f m' ⟺ f(m) = f(m')`.
pub fn kernel_congruence(f: &MonoidHom) -> Congruence {
    Congruence::from_labels(f.source(), f.image()).expect("fibres of a hom form a congruence")
}

/// The unique `f'` with `f' ∘ ν = f`, provided `f` is constant on classes.
pub fn factor_through(f: &MonoidHom, c: &Congruence) -> Result<MonoidHom> {
    if f.source() != c.carrier() {
        return Err(Error::Mismatch("hom source is not the congruence carrier"));
    }
    for x in c.carrier.elements() {
        let r = c.rep[x];
        if f.apply(x) != f.apply(r) {
            return Err(Error::HypothesisFails(r, x));
        }
    }
    let q = quotient(c);
    let image = c.representatives().into_iter().map(|r| f.apply(r)).collect();
    Ok(MonoidHom::new_unchecked(&q.monoid, f.target(), image))
}

fn check_parallel(f: &MonoidHom, g: &MonoidHom) -> Result<()> {
    if f.source() != g.source() || f.target() != g.target() {
        return Err(Error::Mismatch("f and g must share source and target"));
    }
    Ok(())
}

/// The chain relation `∼_(f,g)`: the congruence generated by `f(n) ∼ g(n)`.
pub fn chain_congruence(f: &MonoidHom, g: &MonoidHom) -> Result<Congruence> {
    check_parallel(f, g)?;
    let seeds: Vec<(usize, usize)> = f
        .source()
        .elements()
        .map(|n| (f.apply(n), g.apply(n)))
        .filter(|(a, b)| a != b)
        .collect();
    congruence_closure(f.target(), &seeds)
}

/// The coequalizer of `f, g: N → M`, as the quotient by the chain relation.
pub fn coequalizer_finite(f: &MonoidHom, g: &MonoidHom) -> Result<Quotient> {
    Ok(quotient(&chain_congruence(f, g)?))
}

/// Coverage of a finite universal-property probe. This samples targets; it
/// is evidence, not a proof.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ProbeReport {
    pub targets: usize,
    pub maps_checked: usize,
    pub failures: usize,
}

impl ProbeReport {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

/// For every target `P` and every `h: M → P` with `h∘f = h∘g`, counts the
/// homs `h'` out of the coequalizer with `h'∘ν = h`; each count must be 1.
pub fn probe_coequalizer(
    f: &MonoidHom,
    g: &MonoidHom,
    coeq: &Quotient,
    targets: &[FiniteCommMonoid],
    budget: &mut Budget,
) -> Result<ProbeReport> {
    check_parallel(f, g)?;
    let mut report = ProbeReport {
        targets: targets.len(),
        ..Default::default()
    };
    for p in targets {
        let out_of_q = enumerate_homs(&coeq.monoid, p, budget)?;
        for h in enumerate_homs(f.target(), p, budget)? {
            if f.then(&h)? != g.then(&h)? {
                continue;
            }
            report.maps_checked += 1;
            let count = out_of_q
                .iter()
                .filter(|hq| coeq.projection.then(hq).map(|c| c == h).unwrap_or(false))
                .count();
            if count != 1 {
                report.failures += 1;
            }
        }
    }
    Ok(report)
}

/// The relation `m ∼_[f,g] m' ⟺ ∃ n, n': m + f(n) + g(n') = m' + f(n') + g(n)`,
/// computed by exhaustive enumeration of `(n, n')`.
pub fn naive_congruence(f: &MonoidHom, g: &MonoidHom) -> Result<Congruence> {
    check_parallel(f, g)?;
    let m = f.target();
    let src = f.source();
    // offsets (f(n) + g(n'), f(n') + g(n)) over all n, n'
    let mut offsets: Vec<(usize, usize)> = Vec::new();
    for n in src.elements() {
        for n2 in src.elements() {
            offsets.push((m.add(f.apply(n), g.apply(n2)), m.add(f.apply(n2), g.apply(n))));
        }
    }
    offsets.sort_unstable();
    offsets.dedup();
    let related = |a: usize, b: usize| offsets.iter().any(|&(x, y)| m.add(a, x) == m.add(b, y));
    congruence_from_relation(m, related)
}

/// The Bourne relation `m ∼_K m' ⟺ ∃ a, b ∈ K: m + a = m' + b`.
pub fn bourne_congruence(m: &FiniteCommMonoid, k: &[usize]) -> Result<Congruence> {
    if !m.is_submonoid(k) {
        return Err(Error::NotASubmonoid(0));
    }
    let related = |x: usize, y: usize| k.iter().any(|&a| k.iter().any(|&b| m.add(x, a) == m.add(y, b)));
    congruence_from_relation(m, related)
}

// Materializes a relation that is known to be a congruence, verifying it is
// an equivalence relation closed under translation.
fn congruence_from_relation(m: &FiniteCommMonoid, related: impl Fn(usize, usize) -> bool) -> Result<Congruence> {
    let labels: Vec<usize> = m
        .elements()
        .map(|x| m.elements().find(|&y| related(x, y)).unwrap_or(x))
        .collect();
    for a in m.elements() {
        for b in m.elements() {
            if related(a, b) != (labels[a] == labels[b]) {
                return Err(Error::PreconditionFailed(format!(
                    "relation is not an equivalence at ({a}, {b})"
                )));
            }
        }
    }
    Congruence::from_labels(m, &labels)
}

/// `Rel_∼ ⊆ M × M` with its two projections.
#[derive(Debug, Clone)]
pub struct KernelPair {
    pub rel: FiniteCommMonoid,
    /// Element `i` of `rel` is the pair `pairs[i]`.
    pub pairs: Vec<(usize, usize)>,
    pub inclusion: MonoidHom,
    pub p1: MonoidHom,
    pub p2: MonoidHom,
    square: Biproduct,
}

/// The kernel pair of `f`, built from `Rel_{∼_f}`.
pub fn kernel_pair(f: &MonoidHom) -> KernelPair {
    kernel_pair_of(&kernel_congruence(f))
}

/// `Rel_∼` for an arbitrary congruence.
pub fn kernel_pair_of(c: &Congruence) -> KernelPair {
    let m = c.carrier();
    let square = Biproduct::new(&[m.clone(), m.clone()]);
    let members: Vec<usize> = square
        .monoid
        .elements()
        .filter(|&x| {
            let p = square.decode(x);
            c.related(p[0], p[1])
        })
        .collect();
    let (rel, inclusion) = restrict(&square.monoid, &members).expect("Rel of a congruence is a submonoid");
    let pairs: Vec<(usize, usize)> = members
        .iter()
        .map(|&x| {
            let p = square.decode(x);
            (p[0], p[1])
        })
        .collect();
    let p1 = MonoidHom::new_unchecked(&rel, m, pairs.iter().map(|p| p.0).collect());
    let p2 = MonoidHom::new_unchecked(&rel, m, pairs.iter().map(|p| p.1).collect());
    KernelPair {
        rel,
        pairs,
        inclusion,
        p1,
        p2,
        square,
    }
}

impl KernelPair {
    /// The unique `h: P → Rel` with `p1 ∘ h = g` and `p2 ∘ h = k`, which
    /// exists when `g(x)` and `k(x)` are related for every `x`.
    pub fn pairing(&self, g: &MonoidHom, k: &MonoidHom) -> Result<MonoidHom> {
        check_parallel(g, k)?;
        if g.target() != self.p1.target() {
            return Err(Error::Mismatch("maps do not land in the kernel pair's monoid"));
        }
        let image = g
            .source()
            .elements()
            .map(|x| {
                let pair = (g.apply(x), k.apply(x));
                self.pairs
                    .binary_search_by_key(&self.square.encode(&[pair.0, pair.1]), |&(a, b)| {
                        self.square.encode(&[a, b])
                    })
                    .map_err(|_| Error::HypothesisFails(pair.0, pair.1))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(MonoidHom::new_unchecked(g.source(), &self.rel, image))
    }
}

/// Every congruence on `m` (translation-closed set partitions). Capped at six
/// elements.
pub fn enumerate_congruences(m: &FiniteCommMonoid, budget: &mut Budget) -> Result<Vec<Congruence>> {
    if m.size() > 6 {
        return Err(Error::BudgetExceeded { limit: budget.limit() });
    }
    let n = m.size();
    let mut out = Vec::new();
    // restricted growth strings: labels[0] = 0, labels[i] ≤ 1 + max(labels[..i])
    let mut labels = vec![0usize; n];
    loop {
        budget.charge(1)?;
        if let Ok(c) = Congruence::from_labels(m, &labels) {
            out.push(c);
        }
        if !next_partition(&mut labels) {
            break;
        }
    }
    Ok(out)
}

fn next_partition(labels: &mut [usize]) -> bool {
    for i in (1..labels.len()).rev() {
        let max_before = labels[..i].iter().copied().max().unwrap_or(0);
        if labels[i] <= max_before {
            labels[i] += 1;
            for l in labels[i + 1..].iter_mut() {
                *l = 0;
            }
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{cyclic, cyclic_group, saturating};

    #[test]
    fn closure_examples() {
        let c42 = cyclic(4, 2);
        assert_eq!(congruence_closure(&c42, &[]).unwrap(), Congruence::identity(&c42));
        let c = congruence_closure(&c42, &[(4, 5)]).unwrap();
        assert_eq!(c.num_classes(), 5);
        assert_eq!(c.classes(), vec![vec![0], vec![1], vec![2], vec![3], vec![4, 5]]);
        assert!(congruence_closure(&c42, &[(0, 9)]).is_err());
    }

    #[test]
    fn quotient_examples() {
        let m = crate::catalog::paper_four_element();
        let q = quotient(&Congruence::identity(&m));
        assert_eq!(q.monoid, m);
        assert_eq!(q.projection, MonoidHom::identity(&m));
        assert!(quotient(&Congruence::total(&m)).monoid.is_trivial());
    }

    #[test]
    fn kernel_congruence_examples() {
        let z4 = cyclic_group(4);
        let z2 = cyclic_group(2);
        assert_eq!(kernel_congruence(&MonoidHom::identity(&z4)), Congruence::identity(&z4));
        assert_eq!(kernel_congruence(&MonoidHom::zero(&z4, &z2)), Congruence::total(&z4));
        // C(4,2) → Z/2 by parity of the representative
        let c42 = cyclic(4, 2);
        let parity = MonoidHom::new(&c42, &z2, (0..6).map(|x| x % 2).collect()).unwrap();
        assert_eq!(kernel_congruence(&parity).num_classes(), 2);
    }

    #[test]
    fn factor_through_examples() {
        let c42 = cyclic(4, 2);
        let z2 = cyclic_group(2);
        let parity = MonoidHom::new(&c42, &z2, (0..6).map(|x| x % 2).collect()).unwrap();
        let id = Congruence::identity(&c42);
        assert_eq!(factor_through(&parity, &id).unwrap().image(), parity.image());
        let ker = kernel_congruence(&parity);
        assert!(factor_through(&parity, &ker).unwrap().is_injective());
        assert_eq!(
            factor_through(&parity, &Congruence::total(&c42)).unwrap_err(),
            Error::HypothesisFails(0, 1)
        );
    }

    #[test]
    fn coequalizer_examples() {
        let z2 = cyclic_group(2);
        let id = MonoidHom::identity(&z2);
        let q = coequalizer_finite(&id, &id).unwrap();
        assert_eq!(q.monoid, z2);
        let q = coequalizer_finite(&id, &MonoidHom::zero(&z2, &z2)).unwrap();
        assert!(q.monoid.is_trivial());
    }

    #[test]
    fn naive_relation_on_saturating_monoid_is_total() {
        let sat = saturating(3);
        let id = MonoidHom::identity(&sat);
        let c = naive_congruence(&id, &id).unwrap();
        assert_eq!(c, Congruence::total(&sat));
    }

    #[test]
    fn naive_relation_with_four_and_six_splits_by_parity() {
        // Truncation of ℕ₀ that keeps parity: C(40, 2) with f = 4·, g = 6·.
        let m = cyclic(40, 2);
        let f = MonoidHom::scalar_multiplication(&m, 4);
        let g = MonoidHom::scalar_multiplication(&m, 6);
        let naive = naive_congruence(&f, &g).unwrap();
        assert_eq!(naive.num_classes(), 2);
        assert!(naive.related(0, 2) && naive.related(1, 39) && !naive.related(0, 1));
        for n in m.elements() {
            assert!(naive.related(f.apply(n), g.apply(n)));
        }
        let chain = chain_congruence(&f, &g).unwrap();
        assert!(chain.is_finer_than(&naive));
        // The chain relation reproduces C(4,2): 0..3 alone, then two tails.
        assert_eq!(chain.num_classes(), 6);
        assert_eq!(quotient(&chain).monoid, cyclic(4, 2));
    }

    #[test]
    fn bourne_examples() {
        let m = crate::catalog::paper_four_element();
        assert_eq!(bourne_congruence(&m, &[0]).unwrap(), Congruence::identity(&m));
        assert_eq!(bourne_congruence(&m, &[0, 1, 2, 3]).unwrap(), Congruence::total(&m));
        assert_eq!(bourne_congruence(&m, &[0, 2]).unwrap_err(), Error::NotASubmonoid(0));
    }

    #[test]
    fn kernel_pair_examples() {
        let z3 = cyclic_group(3);
        let kp = kernel_pair(&MonoidHom::identity(&z3));
        assert_eq!(kp.pairs, vec![(0, 0), (1, 1), (2, 2)]);
        let kp = kernel_pair(&MonoidHom::zero(&z3, &z3));
        assert_eq!(kp.rel.size(), 9);
        for (i, &(a, b)) in kp.pairs.iter().enumerate() {
            assert_eq!((kp.p1.apply(i), kp.p2.apply(i)), (a, b));
        }
    }

    #[test]
    fn enumeration_counts() {
        let mut b = Budget::default();
        assert_eq!(enumerate_congruences(&FiniteCommMonoid::trivial(), &mut b).unwrap().len(), 1);
        assert_eq!(enumerate_congruences(&cyclic_group(2), &mut b).unwrap().len(), 2);
        assert_eq!(enumerate_congruences(&cyclic_group(4), &mut b).unwrap().len(), 3);
        assert!(enumerate_congruences(&cyclic_group(7), &mut b).is_err());
    }

    #[test]
    fn json_round_trip() {
        let c = congruence_closure(&cyclic(4, 2), &[(4, 5)]).unwrap();
        let json = c.to_json();
        let text = serde_json::to_string(&json).unwrap();
        let back: CongruenceJson = serde_json::from_str(&text).unwrap();
        assert_eq!(Congruence::from_json(c.carrier(), &back).unwrap(), c);
        let bad = CongruenceJson { classes: vec![vec![0, 1], vec![2, 3, 4, 5]] };
        assert!(matches!(Congruence::from_json(c.carrier(), &bad), Err(Error::NotACongruence(..))));
    }
}
