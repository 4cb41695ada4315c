//! Union-find over dense indices, optionally recording why each union happened.
//!
//! Every successful union adds one edge to a proof forest. Because edges are
//! only added between distinct classes, the forest stays acyclic and the path
//! between two related elements is unique; [`ProofUnionFind::explain`]
//! returns that path as a list of reasons.

use std::collections::VecDeque;

/// Plain union-find with path halving and union by size.
#[derive(Debug, Clone)]
pub struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
            size: vec![1; n],
        }
    }

    pub fn len(&self) -> usize {
        self.parent.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parent.is_empty()
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns `true` if the two classes were distinct.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
        true
    }

    pub fn same(&mut self, a: usize, b: usize) -> bool {
        self.find(a) == self.find(b)
    }

    /// Canonical labelling: each element mapped to the smallest index of its class.
    pub fn min_representatives(&mut self) -> Vec<usize> {
        let n = self.len();
        let mut min_of_root = vec![usize::MAX; n];
        for x in 0..n {
            let r = self.find(x);
            if min_of_root[r] == usize::MAX {
                min_of_root[r] = x;
            }
        }
        (0..n).map(|x| min_of_root[self.find(x)]).collect()
    }
}

/// One edge of the proof forest.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProofStep<R> {
    pub from: usize,
    pub to: usize,
    pub reason: R,
}

/// Union-find that remembers the reason for every merge.
#[derive(Debug, Clone)]
pub struct ProofUnionFind<R> {
    classes: UnionFind,
    edges: Vec<Vec<(usize, usize)>>,
    reasons: Vec<R>,
}

impl<R: Clone> ProofUnionFind<R> {
    pub fn new(n: usize) -> Self {
        ProofUnionFind {
            classes: UnionFind::new(n),
            edges: vec![Vec::new(); n],
            reasons: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn find(&mut self, x: usize) -> usize {
        self.classes.find(x)
    }

    pub fn same(&mut self, a: usize, b: usize) -> bool {
        self.classes.same(a, b)
    }

    pub fn union(&mut self, a: usize, b: usize, reason: R) -> bool {
        if !self.classes.union(a, b) {
            return false;
        }
        let id = self.reasons.len();
        self.reasons.push(reason);
        self.edges[a].push((b, id));
        self.edges[b].push((a, id));
        true
    }

    /// The chain of merges connecting `a` to `b`, or `None` if they are unrelated.
    pub fn explain(&mut self, a: usize, b: usize) -> Option<Vec<ProofStep<R>>> {
        if !self.same(a, b) {
            return None;
        }
        let n = self.len();
        let mut prev: Vec<Option<(usize, usize)>> = vec![None; n];
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([a]);
        seen[a] = true;
        while let Some(x) = queue.pop_front() {
            if x == b {
                break;
            }
            for &(y, id) in &self.edges[x] {
                if !seen[y] {
                    seen[y] = true;
                    prev[y] = Some((x, id));
                    queue.push_back(y);
                }
            }
        }
        let mut steps = Vec::new();
        let mut cur = b;
        while cur != a {
            let (p, id) = prev[cur].expect("proof forest disconnected from union-find");
            steps.push(ProofStep {
                from: p,
                to: cur,
                reason: self.reasons[id].clone(),
            });
            cur = p;
        }
        steps.reverse();
        Some(steps)
    }
}
