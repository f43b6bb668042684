//! Integer compositions and set compositions (flags of subsets) of `[n]`.
//!
//! A set composition `C_1 | C_2 | ... | C_k` of `[n]` is an ordered partition
//! into nonempty blocks. It is the same datum as a flag of subsets
//! `∅ = F_0 ⊂ F_1 ⊂ ... ⊂ F_k = [n]` via the prefix unions
//! `F_i = C_1 ∪ ... ∪ C_i`; set compositions index the faces of the standard
//! permutohedron. The stored form is the block list; flags are recovered on
//! demand.

use serde::Serialize;

use crate::error::{Error, Result};

/// An ordered partition of `[n]` into nonempty, disjoint blocks covering `[n]`.
///
/// Vertices are 1-based. Blocks keep their vertices sorted increasingly.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct SetComposition {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

impl SetComposition {
    /// Builds a set composition of `[n]`, validating that the blocks are
    /// nonempty, disjoint, in range, and cover all of `[n]`.
    pub fn new(n: usize, blocks: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen = vec![false; n];
        let mut blocks = blocks;
        let mut total = 0;
        for block in &mut blocks {
            if block.is_empty() {
                return Err(Error::InvalidSetComposition {
                    reason: "blocks must be nonempty".into(),
                });
            }
            block.sort_unstable();
            for &v in block.iter() {
                if v == 0 || v > n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
                if seen[v - 1] {
                    return Err(Error::InvalidSetComposition {
                        reason: format!("vertex {v} appears in more than one block"),
                    });
                }
                seen[v - 1] = true;
                total += 1;
            }
        }
        if total != n {
            return Err(Error::InvalidSetComposition {
                reason: format!("blocks cover {total} of {n} vertices"),
            });
        }
        Ok(SetComposition { n, blocks })
    }

    /// Internal constructor for enumeration, where the invariants hold by
    /// construction.
    fn new_unchecked(n: usize, blocks: Vec<Vec<usize>>) -> Self {
        SetComposition { n, blocks }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of blocks (the length `k` of the flag).
    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    /// `type(F) = (|C_1|, |C_2|, ..., |C_k|)`, the integer composition of
    /// block sizes.
    pub fn composition_type(&self) -> Vec<usize> {
        self.blocks.iter().map(Vec::len).collect()
    }

    /// The weight vector `ω` with `ω_i = j` for `i` in the `j`-th block
    /// (1-based).
    ///
    /// Its coordinates are constant on blocks and increase with the block
    /// index, so `ω` lies in the open normal cone of the permutohedron face
    /// labeled by this set composition; maximizing `⟨ω, ·⟩` over a
    /// generalized permutohedron selects the face this flag maps to.
    pub fn canonical_weight(&self) -> Vec<i64> {
        let mut weight = vec![0; self.n];
        for (j, block) in self.blocks.iter().enumerate() {
            for &v in block {
                weight[v - 1] = (j + 1) as i64;
            }
        }
        weight
    }
}

impl std::fmt::Display for SetComposition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let rendered: Vec<String> = self
            .blocks
            .iter()
            .map(|block| {
                let verts: Vec<String> = block.iter().map(usize::to_string).collect();
                format!("{{{}}}", verts.join(","))
            })
            .collect();
        write!(f, "{}", rendered.join("|"))
    }
}

/// Visits every set composition of `[n]` exactly once, ordered by block
/// count and then lexicographically by the block-assignment word
/// `(block of 1, block of 2, ..., block of n)`.
///
/// The total number of visits is the ordered Bell number of `n`.
pub fn for_each_set_composition<F>(n: usize, mut visit: F) -> Result<()>
where
    F: FnMut(&SetComposition),
{
    if n == 0 {
        return Err(Error::EmptyGroundSet {
            operation: "set composition enumeration",
        });
    }
    let mut assignment = vec![0usize; n];
    for k in 1..=n {
        assign_block(n, k, 0, 0, &mut assignment, &mut visit);
    }
    Ok(())
}

/// Extends a partial block-assignment word to all surjections onto `[k]`.
///
/// `used_mask` records the blocks already hit; branches that cannot reach
/// all `k` blocks with the remaining positions are pruned.
fn assign_block<F>(
    n: usize,
    k: usize,
    pos: usize,
    used_mask: u32,
    assignment: &mut Vec<usize>,
    visit: &mut F,
) where
    F: FnMut(&SetComposition),
{
    let used = used_mask.count_ones() as usize;
    if k - used > n - pos {
        return; // too few positions left to hit every block
    }
    if pos == n {
        let mut blocks = vec![Vec::new(); k];
        for (vertex_index, &b) in assignment.iter().enumerate() {
            blocks[b - 1].push(vertex_index + 1);
        }
        visit(&SetComposition::new_unchecked(n, blocks));
        return;
    }
    for b in 1..=k {
        assignment[pos] = b;
        assign_block(n, k, pos + 1, used_mask | (1 << (b - 1)), assignment, visit);
    }
}

/// Collects [`for_each_set_composition`] into a vector.
pub fn set_compositions(n: usize) -> Result<Vec<SetComposition>> {
    let mut out = Vec::new();
    for_each_set_composition(n, |sc| out.push(sc.clone()))?;
    Ok(out)
}

/// All `2^(n-1)` integer compositions of `n`, ordered by length and then
/// lexicographically; `compositions_of(0)` is the single empty composition.
pub fn compositions_of(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut all = Vec::new();
    let mut current = Vec::new();
    fill_compositions(n, &mut current, &mut all);
    all.sort_by(|a, b| (a.len(), a).cmp(&(b.len(), b)));
    all
}

fn fill_compositions(remaining: usize, current: &mut Vec<usize>, all: &mut Vec<Vec<usize>>) {
    if remaining == 0 {
        all.push(current.clone());
        return;
    }
    for part in 1..=remaining {
        current.push(part);
        fill_compositions(remaining - part, current, all);
        current.pop();
    }
}

/// The ordered Bell number (number of set compositions of `[n]`), by the
/// recursion `a(n) = Σ_{k=1}^{n} C(n,k) a(n−k)`, `a(0) = 1`.
pub fn ordered_bell(n: usize) -> u64 {
    let mut binom = vec![vec![0u64; n + 1]; n + 1];
    for i in 0..=n {
        binom[i][0] = 1;
        for j in 1..=i {
            binom[i][j] = binom[i - 1][j - 1] + if j < i { binom[i - 1][j] } else { 0 };
        }
    }
    let mut a = vec![0u64; n + 1];
    a[0] = 1;
    for m in 1..=n {
        a[m] = (1..=m).map(|k| binom[m][k] * a[m - k]).sum();
    }
    a[n]
}
