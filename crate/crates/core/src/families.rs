//! Named hypergraph families (complete, uniform, Pitman–Stanley, graphs,
//! simplicial complexes) together with the closed-form enumerative
//! invariants known for them. The builders produce ordinary
//! [`Hypergraph`] values; the formula functions are independent of both
//! the algebraic and the geometric pipeline, which is what makes them
//! usable as cross-checks.

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::qpoly::QPoly;
use crate::qsym::QSymM;

/// Size bound for the counting formulas in this module; factorials and
/// surjection counts up to this size stay comfortably inside `i64`.
pub const FAMILY_GUARD: usize = 16;

fn check_family_size(operation: &'static str, n: usize) -> Result<()> {
    if n > FAMILY_GUARD {
        return Err(Error::GuardExceeded {
            operation,
            n,
            guard: FAMILY_GUARD,
        });
    }
    Ok(())
}

/// The complete hypergraph on `[n]`: every nonempty subset is an edge.
pub fn complete(n: usize) -> Result<Hypergraph> {
    if n == 0 {
        return Err(Error::InvalidFamily {
            reason: "the complete hypergraph needs at least one vertex".into(),
        });
    }
    check_family_size("complete hypergraph family", n)?;
    let mut edges = Vec::with_capacity((1usize << n) - 1);
    for mask in 1u32..(1 << n) {
        edges.push(subset_of_mask(mask, n));
    }
    Hypergraph::new(n, &edges, false)
}

/// The k-uniform hypergraph on `[n]`: all k-element subsets, plus the
/// singletons that every hypergraph here carries. Requires `1 < k ≤ n`.
pub fn uniform(n: usize, k: usize) -> Result<Hypergraph> {
    if k <= 1 || k > n {
        return Err(Error::InvalidFamily {
            reason: format!("uniformity {k} must satisfy 1 < k <= n = {n}"),
        });
    }
    check_family_size("uniform hypergraph family", n)?;
    let mut edges = Vec::new();
    for mask in 1u32..(1 << n) {
        if mask.count_ones() as usize == k {
            edges.push(subset_of_mask(mask, n));
        }
    }
    Hypergraph::new(n, &edges, true)
}

/// The Pitman–Stanley hypergraph on `m` vertices: the initial segments
/// `{1}, {1,2}, …, {1,…,m}` plus all singletons. Its polytope is the
/// Pitman–Stanley polytope, combinatorially an `(m−1)`-cube.
pub fn pitman_stanley(m: usize) -> Result<Hypergraph> {
    if m == 0 {
        return Err(Error::InvalidFamily {
            reason: "the Pitman-Stanley hypergraph needs at least one vertex".into(),
        });
    }
    check_family_size("Pitman-Stanley hypergraph family", m)?;
    let edges: Vec<Vec<usize>> = (1..=m).map(|i| (1..=i).collect()).collect();
    Hypergraph::new(m, &edges, true)
}

/// A simple graph on `[n]` as a hypergraph: the given pairs plus all
/// singletons. Loops are rejected; vertex-range errors are reported the
/// same way as for arbitrary edge lists.
pub fn from_graph(n: usize, pairs: &[(usize, usize)]) -> Result<Hypergraph> {
    let mut edges = Vec::with_capacity(pairs.len());
    for &(a, b) in pairs {
        if a == b {
            return Err(Error::InvalidFamily {
                reason: format!("graph edge ({a}, {b}) must join two distinct vertices"),
            });
        }
        edges.push(vec![a, b]);
    }
    Hypergraph::new(n, &edges, true)
}

/// The hypergraph of a simplicial complex on `[n]`, given by generating
/// faces: every nonempty subset of every given face becomes an edge
/// (downward closure), and all singletons are present.
pub fn simplicial_complex(n: usize, facets: &[Vec<usize>]) -> Result<Hypergraph> {
    let mut edges = Vec::new();
    for facet in facets {
        if facet.is_empty() {
            return Err(Error::EmptyEdge);
        }
        let mut support: Vec<usize> = facet.clone();
        support.sort_unstable();
        support.dedup();
        let k = support.len();
        for mask in 1u32..(1 << k) {
            edges.push(
                (0..k)
                    .filter(|&i| mask & (1 << i) != 0)
                    .map(|i| support[i])
                    .collect(),
            );
        }
    }
    Hypergraph::new(n, &edges, true)
}

/// The 1-skeleton of a hypergraph: keep only the edges with at most two
/// vertices. The invariant `Ψ_q` of a simplicial complex depends only on
/// this skeleton, which is what makes the operation worth naming.
pub fn one_skeleton(h: &Hypergraph) -> Hypergraph {
    let edges: Vec<Vec<usize>> = h
        .edges()
        .filter(|e| e.len() <= 2)
        .map(|e| e.vertices().to_vec())
        .collect();
    Hypergraph::new(h.n(), &edges, true).expect("edges of a valid hypergraph remain valid")
}

/// The f-polynomial of the permutohedron on `m` vertices (dimension
/// `m − 1`): its d-dimensional faces are the ordered set partitions of
/// `[m]` into `m − d` blocks, counted by `(m−d)!·S(m, m−d)`. By
/// convention `m = 0` gives 1, the f-polynomial of a point — the value
/// the uniform-family formula needs for its boundary term.
pub fn permutohedron_f(m: usize) -> Result<QPoly> {
    check_family_size("permutohedron f-polynomial", m)?;
    if m == 0 {
        return Ok(QPoly::one());
    }
    // stirling[j] = S(i, j) for the current row i
    let mut stirling = vec![0i64; m + 1];
    stirling[0] = 1;
    for i in 1..=m {
        for j in (1..=i).rev() {
            stirling[j] = (j as i64) * stirling[j] + stirling[j - 1];
        }
        stirling[0] = 0;
    }
    let mut factorial = 1i64;
    let mut coeffs = vec![0i64; m];
    for k in 1..=m {
        factorial *= k as i64;
        coeffs[m - k] = factorial * stirling[k];
    }
    Ok(QPoly::from_coeffs(coeffs))
}

fn multinomial3(n: usize, a: usize, b: usize, c: usize) -> i64 {
    debug_assert_eq!(a + b + c, n);
    let fact = |k: usize| -> i128 { (1..=k as i128).product::<i128>().max(1) };
    i64::try_from(fact(n) / (fact(a) * fact(b) * fact(c))).expect("multinomial fits i64")
}

/// The closed formula for the f-polynomial of the k-uniform hypergraphic
/// polytope on `[n]`, `1 < k < n`: flags are split by whether they ever
/// select a full k-subset, and each family contributes a multinomial-
/// weighted permutohedron term.
pub fn uniform_f_formula(n: usize, k: usize) -> Result<QPoly> {
    if k <= 1 || k >= n {
        return Err(Error::InvalidFamily {
            reason: format!("the uniform formula needs 1 < k < n, got k = {k}, n = {n}"),
        });
    }
    check_family_size("uniform f-polynomial formula", n)?;
    let mut f = QPoly::zero();
    let tail = permutohedron_f(n - k)?;
    for i in 1..=k {
        let weight = multinomial3(n, k - i, i, n - k);
        f += &(&QPoly::monomial(weight, i - 1) * &tail);
    }
    for a in 0..k {
        for b in 0..(n - k) {
            let weight = multinomial3(n, a, b, n - a - b);
            f += &(&QPoly::monomial(weight, n - a - b - 1) * &permutohedron_f(b)?);
        }
    }
    Ok(f)
}

/// Degree bound for the Pitman–Stanley enumerator recursion (the result
/// in dimension `d` is homogeneous of degree `d + 1`).
pub const ENUMERATOR_GUARD: usize = 11;

/// The quasisymmetric enumerator of the `d`-dimensional Pitman–Stanley
/// polytope, built by the recursion
/// `F(d) = F(d−1)·M_(1) + (q−1)·F(d−1)_{+1}` with `F(0) = M_(1)`,
/// which tracks where the flag places the last vertex. This never touches
/// a hypergraph, so it can certify the flag-sum pipeline from outside.
pub fn pitman_stanley_enumerator(d: usize) -> Result<QSymM> {
    if d > ENUMERATOR_GUARD {
        return Err(Error::GuardExceeded {
            operation: "Pitman-Stanley enumerator",
            n: d,
            guard: ENUMERATOR_GUARD,
        });
    }
    let m1 = QSymM::monomial(&[1])?;
    let q_minus_one = QPoly::from_coeffs(vec![-1, 1]);
    let mut f = m1.clone();
    for _ in 0..d {
        f = f
            .quasi_shuffle(&m1)
            .add(&f.plus_one()?.scale(&q_minus_one))?;
    }
    Ok(f)
}

fn subset_of_mask(mask: u32, n: usize) -> Vec<usize> {
    (1..=n).filter(|&v| mask & (1 << (v - 1)) != 0).collect()
}
