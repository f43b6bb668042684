//! Hypergraphs on the vertex set `[n] = {1, ..., n}`.
//!
//! A hypergraph is a set of nonempty hyperedges that contains every
//! singleton `{i}` (no ghost vertices). The module provides the minor
//! operations (restriction, contraction), connectivity and rank, disjoint
//! union, splitting along a flag of subsets, and a brute-force canonical
//! form for working with isomorphism classes.

use std::cmp::Ordering;
use std::collections::BTreeSet;

use itertools::Itertools;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::flags::SetComposition;

/// Largest vertex count for which exhaustive relabeling (`n!` candidates)
/// is attempted by [`Hypergraph::canonical_form`].
pub const CANONICAL_GUARD: usize = 9;

/// A hyperedge: a nonempty subset of `[n]`, stored strictly increasing.
///
/// Edges order by size first and lexicographically within a size, which
/// fixes the canonical edge order used everywhere (equality, serialization,
/// canonical forms).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct Edge(Vec<usize>);

impl Edge {
    fn from_sorted(vertices: Vec<usize>) -> Self {
        debug_assert!(!vertices.is_empty());
        debug_assert!(vertices.windows(2).all(|w| w[0] < w[1]));
        Edge(vertices)
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false // edges are nonempty by construction
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }
}

impl Ord for Edge {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Edge {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A hypergraph on `[n]` containing all singletons.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Hypergraph {
    n: usize,
    edges: BTreeSet<Edge>,
}

/// The partition of `[n]` into connected components of a hypergraph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexPartition {
    blocks: Vec<Vec<usize>>,
}

impl VertexPartition {
    /// Blocks sorted by their least vertex, each block sorted increasingly.
    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }
}

impl Hypergraph {
    /// Builds a hypergraph on `[n]` from raw edge lists.
    ///
    /// Edges are deduplicated as sets. With `add_singletons` every singleton
    /// is inserted; otherwise a missing singleton is an error, since
    /// hypergraphs carry no ghost vertices.
    pub fn new(n: usize, raw_edges: &[Vec<usize>], add_singletons: bool) -> Result<Self> {
        let mut edges = BTreeSet::new();
        for raw in raw_edges {
            if raw.is_empty() {
                return Err(Error::EmptyEdge);
            }
            let mut vs = raw.clone();
            vs.sort_unstable();
            vs.dedup();
            for &v in &vs {
                if v == 0 || v > n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
            }
            edges.insert(Edge::from_sorted(vs));
        }
        if add_singletons {
            for v in 1..=n {
                edges.insert(Edge::from_sorted(vec![v]));
            }
        } else {
            for v in 1..=n {
                if !edges.contains(&Edge(vec![v])) {
                    return Err(Error::MissingSingleton { vertex: v });
                }
            }
        }
        Ok(Hypergraph { n, edges })
    }

    fn from_parts(n: usize, edges: BTreeSet<Edge>) -> Self {
        Hypergraph { n, edges }
    }

    /// The empty hypergraph `H_∅` on zero vertices (the Hopf algebra unit).
    pub fn empty() -> Self {
        Hypergraph {
            n: 0,
            edges: BTreeSet::new(),
        }
    }

    /// The discrete hypergraph: singletons only.
    pub fn discrete(n: usize) -> Self {
        let edges = (1..=n).map(|v| Edge::from_sorted(vec![v])).collect();
        Hypergraph { n, edges }
    }

    /// The one-vertex hypergraph.
    pub fn point() -> Self {
        Self::discrete(1)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges in canonical order (size, then lexicographic).
    pub fn edges(&self) -> impl Iterator<Item = &Edge> {
        self.edges.iter()
    }

    /// Edges as plain vertex lists, in canonical order.
    pub fn edge_sets(&self) -> Vec<Vec<usize>> {
        self.edges.iter().map(|e| e.0.clone()).collect()
    }

    pub fn has_edge(&self, vertices: &[usize]) -> bool {
        let mut vs = vertices.to_vec();
        vs.sort_unstable();
        vs.dedup();
        self.edges.contains(&Edge(vs))
    }

    pub fn is_discrete(&self) -> bool {
        self.edges.iter().all(|e| e.len() == 1)
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() == 1
    }

    /// Checks that `subset` lies in `[n]`, returning it sorted and
    /// deduplicated.
    fn checked_subset(&self, subset: &[usize]) -> Result<Vec<usize>> {
        let mut s = subset.to_vec();
        s.sort_unstable();
        s.dedup();
        for &v in &s {
            if v == 0 || v > self.n {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    n: self.n,
                });
            }
        }
        Ok(s)
    }

    /// The restriction `H|_S = {H ∈ 𝐇 : H ⊆ S}`, relabeled
    /// order-preservingly onto `[|S|]`.
    pub fn restrict(&self, subset: &[usize]) -> Result<Hypergraph> {
        let s = self.checked_subset(subset)?;
        let mut position = vec![0usize; self.n + 1];
        for (i, &v) in s.iter().enumerate() {
            position[v] = i + 1;
        }
        let edges = self
            .edges
            .iter()
            .filter(|e| e.vertices().iter().all(|&v| position[v] != 0))
            .map(|e| Edge::from_sorted(e.vertices().iter().map(|&v| position[v]).collect()))
            .collect();
        Ok(Hypergraph::from_parts(s.len(), edges))
    }

    /// The contraction `H/S = {H \ S : H ∈ 𝐇, H \ S ≠ ∅}`, relabeled
    /// order-preservingly onto `[n − |S|]`.
    ///
    /// Empty differences are dropped and duplicates collapse; singletons of
    /// the surviving vertices remain, so the result is again a hypergraph.
    pub fn contract(&self, subset: &[usize]) -> Result<Hypergraph> {
        let s = self.checked_subset(subset)?;
        let mut position = vec![0usize; self.n + 1];
        let mut kept = 0;
        for (v, slot) in position.iter_mut().enumerate().skip(1) {
            if s.binary_search(&v).is_err() {
                kept += 1;
                *slot = kept;
            }
        }
        let mut edges = BTreeSet::new();
        for e in &self.edges {
            let image: Vec<usize> = e
                .vertices()
                .iter()
                .filter_map(|&v| (position[v] != 0).then_some(position[v]))
                .collect();
            if !image.is_empty() {
                edges.insert(Edge::from_sorted(image));
            }
        }
        Ok(Hypergraph::from_parts(kept, edges))
    }

    /// The disjoint union `H_1 ⊔ H_2` on `n_1 + n_2` vertices, with the
    /// right operand's vertices shifted by `n_1`.
    pub fn disjoint_union(&self, other: &Hypergraph) -> Hypergraph {
        let mut edges = self.edges.clone();
        for e in &other.edges {
            edges.insert(Edge::from_sorted(
                e.vertices().iter().map(|&v| v + self.n).collect(),
            ));
        }
        Hypergraph::from_parts(self.n + other.n, edges)
    }

    /// Finest partition of `[n]` such that every edge lies inside one block.
    pub fn connected_components(&self) -> VertexPartition {
        let mut uf = UnionFind::new(self.n);
        for e in &self.edges {
            let vs = e.vertices();
            for w in vs.windows(2) {
                uf.union(w[0] - 1, w[1] - 1);
            }
        }
        let mut blocks_by_root: std::collections::BTreeMap<usize, Vec<usize>> =
            std::collections::BTreeMap::new();
        for v in 0..self.n {
            blocks_by_root.entry(uf.find(v)).or_default().push(v + 1);
        }
        let mut blocks: Vec<Vec<usize>> = blocks_by_root.into_values().collect();
        blocks.sort_by_key(|b| b[0]);
        VertexPartition { blocks }
    }

    /// `c(H)`, the number of connected components.
    pub fn component_count(&self) -> usize {
        let mut uf = UnionFind::new(self.n);
        for e in &self.edges {
            let vs = e.vertices();
            for w in vs.windows(2) {
                uf.union(w[0] - 1, w[1] - 1);
            }
        }
        uf.count
    }

    /// `rk(H) = n − c(H)`, the dimension of the hypergraphic polytope.
    pub fn rank(&self) -> usize {
        self.n - self.component_count()
    }

    /// The stage minors `H|_{F_i} / F_{i−1}` of a flag, each relabeled onto
    /// its block `[|C_i|]`.
    ///
    /// Every edge lands in exactly one stage: the first prefix `F_j` that
    /// contains it, where it survives as its intersection with the block
    /// `C_j = F_j \ F_{j−1}`.
    fn split_stages(&self, flag: &SetComposition) -> Result<Vec<Hypergraph>> {
        if flag.n() != self.n {
            return Err(Error::GroundSetMismatch {
                flag_n: flag.n(),
                n: self.n,
            });
        }
        let blocks = flag.blocks();
        // block index and within-block position of every vertex
        let mut block_of = vec![0usize; self.n + 1];
        let mut position = vec![0usize; self.n + 1];
        for (j, block) in blocks.iter().enumerate() {
            for (i, &v) in block.iter().enumerate() {
                block_of[v] = j;
                position[v] = i + 1;
            }
        }
        let mut stages: Vec<BTreeSet<Edge>> = vec![BTreeSet::new(); blocks.len()];
        for e in &self.edges {
            let j = e.vertices().iter().map(|&v| block_of[v]).max().unwrap();
            let image: Vec<usize> = e
                .vertices()
                .iter()
                .filter_map(|&v| (block_of[v] == j).then_some(position[v]))
                .collect();
            stages[j].insert(Edge::from_sorted(image));
        }
        Ok(stages
            .into_iter()
            .enumerate()
            .map(|(j, edges)| Hypergraph::from_parts(blocks[j].len(), edges))
            .collect())
    }

    /// The splitting hypergraph `H/𝓕 = ⊔_i H|_{F_i} / F_{i−1}` on `[n]`.
    pub fn split_by_flag(&self, flag: &SetComposition) -> Result<Hypergraph> {
        let stages = self.split_stages(flag)?;
        Ok(stages
            .into_iter()
            .fold(Hypergraph::empty(), |acc, stage| acc.disjoint_union(&stage)))
    }

    /// `rk(H/𝓕) = n − Σ_i c(H|_{F_i}/F_{i−1})`, computed by one union-find
    /// pass without materializing the stage minors.
    ///
    /// Always equals `rank(split_by_flag(H, 𝓕))`; this is the hot path of
    /// the flag sums behind Ψ_q.
    pub fn split_rank(&self, flag: &SetComposition) -> Result<usize> {
        if flag.n() != self.n {
            return Err(Error::GroundSetMismatch {
                flag_n: flag.n(),
                n: self.n,
            });
        }
        let mut block_of = vec![0usize; self.n + 1];
        for (j, block) in flag.blocks().iter().enumerate() {
            for &v in block {
                block_of[v] = j;
            }
        }
        let mut uf = UnionFind::new(self.n);
        for e in &self.edges {
            let vs = e.vertices();
            let j = vs.iter().map(|&v| block_of[v]).max().unwrap();
            let mut prev: Option<usize> = None;
            for &v in vs {
                if block_of[v] == j {
                    if let Some(p) = prev {
                        uf.union(p - 1, v - 1);
                    }
                    prev = Some(v);
                }
            }
        }
        Ok(self.n - uf.count)
    }

    /// Applies a vertex relabeling: vertex `i` becomes `perm[i − 1]`.
    ///
    /// # Panics
    /// If `perm` is not a permutation of `[n]`.
    pub fn relabel(&self, perm: &[usize]) -> Hypergraph {
        assert_eq!(perm.len(), self.n, "relabeling must cover all vertices");
        let mut seen = vec![false; self.n];
        for &v in perm {
            assert!(
                v >= 1 && v <= self.n && !std::mem::replace(&mut seen[v - 1], true),
                "relabeling must be a permutation of [n]"
            );
        }
        let edges = self
            .edges
            .iter()
            .map(|e| {
                let mut image: Vec<usize> = e.vertices().iter().map(|&v| perm[v - 1]).collect();
                image.sort_unstable();
                Edge::from_sorted(image)
            })
            .collect();
        Hypergraph::from_parts(self.n, edges)
    }

    /// The representative of the isomorphism class `[H]`: the minimal edge
    /// set (in the canonical edge order) over all `n!` relabelings.
    ///
    /// Two hypergraphs are isomorphic iff their canonical forms are equal.
    pub fn canonical_form(&self) -> Result<Hypergraph> {
        if self.n > CANONICAL_GUARD {
            return Err(Error::GuardExceeded {
                operation: "canonical form",
                n: self.n,
                guard: CANONICAL_GUARD,
            });
        }
        if self.is_discrete() || self.n <= 1 {
            return Ok(self.clone());
        }
        let mut best: Option<Hypergraph> = None;
        for perm in (1..=self.n).permutations(self.n) {
            let candidate = self.relabel(&perm);
            if best.as_ref().is_none_or(|b| candidate < *b) {
                best = Some(candidate);
            }
        }
        Ok(best.expect("at least the identity relabeling exists"))
    }
}

/// Union-find with path halving, tracking the live component count.
struct UnionFind {
    parent: Vec<usize>,
    count: usize,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
            count: n,
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let ra = self.find(a);
        let rb = self.find(b);
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
            self.count -= 1;
        }
    }
}
