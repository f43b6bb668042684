//! The geometric oracle: exact vertex and face computation for the
//! hypergraphic polytope `P_H = Σ_{H ∈ 𝐇} Δ_H` (a Minkowski sum of
//! coordinate simplices).
//!
//! Everything here is integer arithmetic on the V-description. Vertices
//! come from a sweep over permutation weights (every vertex of a Minkowski
//! sum of simplices is selected by a generic linear functional, and the
//! permutations of `(1..n)` realize every generic ordering). Faces are
//! argmax sets of the canonical flag weights, and dimensions come from
//! fraction-free integer elimination. No convex-hull machinery, no floating
//! point, and no use of the algebraic pipeline under test.

use std::collections::BTreeMap;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::flags::{SetComposition, for_each_set_composition};
use crate::hypergraph::Hypergraph;
use crate::qpoly::QPoly;

/// Default vertex-count bound for the oracle (`n!` permutations and
/// ordered-Bell-many flags).
pub const DEFAULT_ORACLE_GUARD: usize = 7;

/// A face of `P_H`, recorded as the set of polytope vertices it contains
/// plus its affine dimension.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct FaceRecord {
    /// Sorted indices into the polytope's vertex list.
    pub vertex_ids: Vec<usize>,
    /// Affine dimension of those vertices.
    pub dim: usize,
}

/// The hypergraphic polytope of a hypergraph on `[n]`, held by its exact
/// integer vertex list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HypergraphicPolytope {
    n: usize,
    vertices: Vec<Vec<i64>>,
}

impl HypergraphicPolytope {
    /// Builds the polytope with the default guard. See
    /// [`HypergraphicPolytope::from_hypergraph_guarded`].
    pub fn from_hypergraph(h: &Hypergraph) -> Result<Self> {
        Self::from_hypergraph_guarded(h, DEFAULT_ORACLE_GUARD)
    }

    /// Enumerates the vertices of `P_H = Σ_H Δ_H`: for every permutation
    /// weight `ω` of `(1..n)`, each simplex `Δ_H` contributes the basis
    /// vector of its unique `ω`-maximal vertex; the sum is a vertex of the
    /// Minkowski sum, and every vertex arises this way. The list is
    /// deduplicated and sorted.
    pub fn from_hypergraph_guarded(h: &Hypergraph, guard: usize) -> Result<Self> {
        let n = h.n();
        if n == 0 {
            return Err(Error::EmptyGroundSet {
                operation: "the polytope oracle",
            });
        }
        if n > guard {
            return Err(Error::GuardExceeded {
                operation: "polytope oracle",
                n,
                guard,
            });
        }
        let mut points = std::collections::BTreeSet::new();
        for omega in (1..=n as i64).permutations(n) {
            let mut point = vec![0i64; n];
            for edge in h.edges() {
                let &best = edge
                    .vertices()
                    .iter()
                    .max_by_key(|&&v| omega[v - 1])
                    .expect("edges are nonempty");
                point[best - 1] += 1;
            }
            points.insert(point);
        }
        Ok(HypergraphicPolytope {
            n,
            vertices: points.into_iter().collect(),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Vertices in sorted order; coordinates are nonnegative and each sums
    /// to the number of hyperedges.
    pub fn vertices(&self) -> &[Vec<i64>] {
        &self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    /// The face `π_{P_H}(𝓕)`: the set of vertices maximizing the canonical
    /// weight `⟨ω_𝓕, ·⟩`, with its affine dimension. Ties in the argmax are
    /// exactly face membership; no tie-breaking happens.
    pub fn face_of_flag(&self, flag: &SetComposition) -> Result<FaceRecord> {
        if flag.n() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: flag.n(),
            });
        }
        let omega = flag.canonical_weight();
        let ids = self.argmax_ids(&omega);
        let points: Vec<Vec<i64>> = ids.iter().map(|&i| self.vertices[i].clone()).collect();
        let dim = affine_dim(&points)?;
        Ok(FaceRecord {
            vertex_ids: ids,
            dim,
        })
    }

    fn argmax_ids(&self, omega: &[i64]) -> Vec<usize> {
        let mut best = i64::MIN;
        let mut ids = Vec::new();
        for (i, v) in self.vertices.iter().enumerate() {
            let dot: i64 = v.iter().zip(omega).map(|(a, b)| a * b).sum();
            match dot.cmp(&best) {
                std::cmp::Ordering::Greater => {
                    best = dot;
                    ids.clear();
                    ids.push(i);
                }
                std::cmp::Ordering::Equal => ids.push(i),
                std::cmp::Ordering::Less => {}
            }
        }
        ids
    }

    /// `rk_H(𝓕) = dim π_{P_H}(𝓕)`, computed geometrically — the left-hand
    /// side of the rank equality, independent of any flag splitting.
    pub fn geometric_rank(&self, flag: &SetComposition) -> Result<usize> {
        Ok(self.face_of_flag(flag)?.dim)
    }

    /// Every face of the polytope: the images of all flags under
    /// [`HypergraphicPolytope::face_of_flag`], deduplicated by vertex set
    /// (the flag-to-face map is onto the nonempty faces). Sorted by
    /// dimension, then vertex ids.
    pub fn faces(&self) -> Result<Vec<FaceRecord>> {
        let mut by_ids: BTreeMap<Vec<usize>, ()> = BTreeMap::new();
        for_each_set_composition(self.n, |flag| {
            let omega = flag.canonical_weight();
            by_ids.entry(self.argmax_ids(&omega)).or_insert(());
        })?;
        let mut faces = Vec::with_capacity(by_ids.len());
        for (ids, ()) in by_ids {
            let points: Vec<Vec<i64>> = ids.iter().map(|&i| self.vertices[i].clone()).collect();
            faces.push(FaceRecord {
                dim: affine_dim(&points)?,
                vertex_ids: ids,
            });
        }
        faces.sort_by(|a, b| (a.dim, &a.vertex_ids).cmp(&(b.dim, &b.vertex_ids)));
        Ok(faces)
    }

    /// The f-polynomial `Σ_faces q^{dim}`: the coefficient of `q^d` counts
    /// the d-dimensional faces.
    pub fn f_polynomial(&self) -> Result<QPoly> {
        let mut counts = vec![0i64; self.n];
        for face in self.faces()? {
            counts[face.dim] += 1;
        }
        Ok(QPoly::from_coeffs(counts))
    }
}

/// The affine dimension of a set of integer points: the rank of the matrix
/// of differences `p_i − p_0`, by fraction-free (Bareiss) elimination in
/// `i128`. Exact; never divides inexactly.
pub fn affine_dim(points: &[Vec<i64>]) -> Result<usize> {
    let Some((first, rest)) = points.split_first() else {
        return Err(Error::EmptyPointList);
    };
    let cols = first.len();
    let mut rows: Vec<Vec<i128>> = rest
        .iter()
        .map(|p| {
            p.iter()
                .zip(first)
                .map(|(&a, &b)| (a - b) as i128)
                .collect()
        })
        .collect();
    let mut rank = 0;
    let mut prev: i128 = 1;
    for col in 0..cols {
        let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(rank, pivot);
        let (pivot_row, below) = {
            let (head, tail) = rows.split_at_mut(rank + 1);
            (&head[rank], tail)
        };
        for row in below.iter_mut() {
            for j in (col + 1)..cols {
                row[j] = (pivot_row[col] * row[j] - row[col] * pivot_row[j]) / prev;
            }
            row[col] = 0;
        }
        prev = rows[rank][col];
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    Ok(rank)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h(n: usize, edges: &[&[usize]]) -> Hypergraph {
        let raw: Vec<Vec<usize>> = edges.iter().map(|e| e.to_vec()).collect();
        Hypergraph::new(n, &raw, true).unwrap()
    }

    fn complete3() -> Hypergraph {
        h(3, &[&[1, 2], &[1, 3], &[2, 3], &[1, 2, 3]])
    }

    fn flag(n: usize, blocks: &[&[usize]]) -> SetComposition {
        SetComposition::new(n, blocks.iter().map(|b| b.to_vec()).collect()).unwrap()
    }

    #[test]
    fn segment_vertices() {
        let p = HypergraphicPolytope::from_hypergraph(&h(2, &[&[1, 2]])).unwrap();
        assert_eq!(p.vertices(), &[vec![1, 2], vec![2, 1]]);
    }

    #[test]
    fn permutohedron_vertices() {
        let p = HypergraphicPolytope::from_hypergraph(&complete3()).unwrap();
        assert_eq!(p.vertex_count(), 6);
        for v in p.vertices() {
            let mut sorted = v.clone();
            sorted.sort_unstable();
            assert_eq!(sorted, vec![1, 2, 4]);
            assert_eq!(v.iter().sum::<i64>(), 7); // one basis vector per edge
        }
    }

    #[test]
    fn discrete_polytope_is_a_point() {
        let p = HypergraphicPolytope::from_hypergraph(&Hypergraph::discrete(4)).unwrap();
        assert_eq!(p.vertices(), &[vec![1, 1, 1, 1]]);
        assert_eq!(p.f_polynomial().unwrap(), QPoly::one());
    }

    #[test]
    fn face_selection_on_the_hexagon() {
        let p = HypergraphicPolytope::from_hypergraph(&complete3()).unwrap();

        let edge_face = p.face_of_flag(&flag(3, &[&[3], &[1, 2]])).unwrap();
        assert_eq!(edge_face.vertex_ids.len(), 2);
        assert_eq!(edge_face.dim, 1);
        assert_eq!(p.geometric_rank(&flag(3, &[&[3], &[1, 2]])).unwrap(), 1);

        let whole = p.face_of_flag(&flag(3, &[&[1, 2, 3]])).unwrap();
        assert_eq!(whole.vertex_ids.len(), 6);
        assert_eq!(whole.dim, 2);

        let vertex = p.face_of_flag(&flag(3, &[&[1], &[2], &[3]])).unwrap();
        assert_eq!(vertex.vertex_ids.len(), 1);
        assert_eq!(vertex.dim, 0);

        assert_eq!(
            p.face_of_flag(&flag(2, &[&[1, 2]])),
            Err(Error::DimensionMismatch {
                expected: 3,
                found: 2
            })
        );
    }

    #[test]
    fn face_enumeration_counts() {
        let segment = HypergraphicPolytope::from_hypergraph(&h(2, &[&[1, 2]])).unwrap();
        let faces = segment.faces().unwrap();
        assert_eq!(faces.len(), 3);
        assert_eq!(
            segment.f_polynomial().unwrap(),
            QPoly::from_coeffs(vec![2, 1])
        );

        let hexagon = HypergraphicPolytope::from_hypergraph(&complete3()).unwrap();
        assert_eq!(hexagon.faces().unwrap().len(), 13);
        assert_eq!(
            hexagon.f_polynomial().unwrap(),
            QPoly::from_coeffs(vec![6, 6, 1])
        );
    }

    #[test]
    fn graphic_zonotope_of_the_complete_graph() {
        let u42 = h(4, &[&[1, 2], &[1, 3], &[1, 4], &[2, 3], &[2, 4], &[3, 4]]);
        let p = HypergraphicPolytope::from_hypergraph(&u42).unwrap();
        assert_eq!(
            p.f_polynomial().unwrap(),
            QPoly::from_coeffs(vec![24, 36, 14, 1])
        );
    }

    #[test]
    fn f_polynomial_shape_invariants() {
        for hg in [
            h(3, &[&[1, 2]]),
            h(4, &[&[1, 2, 3]]),
            h(4, &[&[1, 2], &[3, 4]]),
            complete3(),
        ] {
            let p = HypergraphicPolytope::from_hypergraph(&hg).unwrap();
            let f = p.f_polynomial().unwrap();
            assert_eq!(f.coeff(0), p.vertex_count() as i64);
            assert_eq!(f.degree(), Some(hg.rank()));
            assert_eq!(f.coeff(hg.rank()), 1);
        }
    }

    #[test]
    fn product_polytope_multiplies_f_polynomials() {
        let a = h(2, &[&[1, 2]]);
        let b = complete3();
        let union = a.disjoint_union(&b);
        let fa = HypergraphicPolytope::from_hypergraph(&a)
            .unwrap()
            .f_polynomial()
            .unwrap();
        let fb = HypergraphicPolytope::from_hypergraph(&b)
            .unwrap()
            .f_polynomial()
            .unwrap();
        let fu = HypergraphicPolytope::from_hypergraph(&union)
            .unwrap()
            .f_polynomial()
            .unwrap();
        assert_eq!(fu, &fa * &fb);
    }

    #[test]
    fn affine_dimension() {
        assert_eq!(affine_dim(&[vec![3, 1, 4]]).unwrap(), 0);
        assert_eq!(affine_dim(&[vec![2, 1], vec![1, 2]]).unwrap(), 1);
        assert_eq!(affine_dim(&[]), Err(Error::EmptyPointList));

        let hexagon = HypergraphicPolytope::from_hypergraph(&complete3()).unwrap();
        assert_eq!(affine_dim(hexagon.vertices()).unwrap(), 2);

        // collinear integer points need exact arithmetic to stay rank 1
        assert_eq!(
            affine_dim(&[vec![0, 0], vec![3, 6], vec![5, 10]]).unwrap(),
            1
        );
    }

    #[test]
    fn oracle_guards() {
        assert!(matches!(
            HypergraphicPolytope::from_hypergraph(&Hypergraph::empty()),
            Err(Error::EmptyGroundSet { .. })
        ));
        assert!(matches!(
            HypergraphicPolytope::from_hypergraph(&Hypergraph::discrete(8)),
            Err(Error::GuardExceeded {
                operation: "polytope oracle",
                n: 8,
                guard: 7,
            })
        ));
        assert!(HypergraphicPolytope::from_hypergraph_guarded(&Hypergraph::discrete(8), 8).is_ok());
    }
}
