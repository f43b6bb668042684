//! Machine verification: the central rank equality (face dimension =
//! splitting rank, which is what makes the invariant compute face counts),
//! the Hopf-algebra axioms, and the structural facts about the invariant,
//! each phrased as a check on a single instance so that sweeps (exhaustive
//! or randomized) can be assembled on top.
//!
//! The two f-polynomial pipelines compared here are genuinely independent:
//! [`f_via_invariant`] never sees a coordinate, and [`f_via_oracle`] never
//! sees a flag splitting.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::flags::{SetComposition, for_each_set_composition};
use crate::hopf::{HopfElement, psi_q};
use crate::hypergraph::Hypergraph;
use crate::polytope::HypergraphicPolytope;
use crate::qpoly::QPoly;

/// Bound for [`all_hypergraphs_on`]: at `n = 4` there are already
/// `2^11 = 2048` labeled hypergraphs, and the count doubles with every
/// further subset.
pub const EXHAUSTIVE_GUARD: usize = 4;

/// Every labeled hypergraph on `[n]`: the singletons are always present,
/// so the free choices are the subsets with at least two elements.
pub fn all_hypergraphs_on(n: usize) -> Result<Vec<Hypergraph>> {
    all_hypergraphs_on_guarded(n, EXHAUSTIVE_GUARD)
}

/// [`all_hypergraphs_on`] with an explicit bound, for callers that accept
/// the doubly exponential cost knowingly.
pub fn all_hypergraphs_on_guarded(n: usize, guard: usize) -> Result<Vec<Hypergraph>> {
    if n == 0 {
        return Err(Error::EmptyGroundSet {
            operation: "exhaustive hypergraph enumeration",
        });
    }
    if n > guard {
        return Err(Error::GuardExceeded {
            operation: "exhaustive hypergraph enumeration",
            n,
            guard,
        });
    }
    let candidates: Vec<Vec<usize>> = (1u32..(1 << n))
        .filter(|mask| mask.count_ones() >= 2)
        .map(|mask| (1..=n).filter(|&v| mask & (1 << (v - 1)) != 0).collect())
        .collect();
    let mut out = Vec::with_capacity(1 << candidates.len());
    for choice in 0u32..(1 << candidates.len()) {
        let edges: Vec<Vec<usize>> = candidates
            .iter()
            .enumerate()
            .filter(|&(i, _)| choice & (1 << i) != 0)
            .map(|(_, e)| e.clone())
            .collect();
        out.push(Hypergraph::new(n, &edges, true)?);
    }
    Ok(out)
}

/// The algebraic pipeline: f-polynomial from the flag-sum invariant by
/// principal specialization.
pub fn f_via_invariant(h: &Hypergraph) -> Result<QPoly> {
    Ok(psi_q(h)?.f_polynomial())
}

/// The geometric pipeline: f-polynomial from the vertex description of
/// the polytope by face enumeration.
pub fn f_via_oracle(h: &Hypergraph) -> Result<QPoly> {
    HypergraphicPolytope::from_hypergraph(h)?.f_polynomial()
}

/// A flag on which the two rank computations disagreed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankMismatch {
    pub flag: SetComposition,
    pub geometric: usize,
    pub split: usize,
}

/// Outcome of sweeping every flag of one hypergraph.
#[derive(Clone, Debug, Default)]
pub struct RankReport {
    pub flags_checked: usize,
    pub mismatches: Vec<RankMismatch>,
}

impl RankReport {
    pub fn is_clean(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Compares, on every flag `𝓕` of `[n]`, the dimension of the face
/// `π_{P_H}(𝓕)` (geometric) with the rank of the flag splitting of `H`
/// (combinatorial). These always agree — that equality is the fact the
/// whole pipeline rests on, and the one `verify-theorem` sweeps.
pub fn check_rank_equality(h: &Hypergraph) -> Result<RankReport> {
    check_rank_equality_guarded(h, crate::polytope::DEFAULT_ORACLE_GUARD)
}

/// [`check_rank_equality`] with an explicit oracle size bound.
pub fn check_rank_equality_guarded(h: &Hypergraph, oracle_guard: usize) -> Result<RankReport> {
    let polytope = HypergraphicPolytope::from_hypergraph_guarded(h, oracle_guard)?;
    let mut report = RankReport::default();
    let mut failure = None;
    for_each_set_composition(h.n(), |flag| {
        if failure.is_some() {
            return;
        }
        let outcome = polytope
            .geometric_rank(flag)
            .and_then(|geometric| Ok((geometric, h.split_rank(flag)?)));
        match outcome {
            Ok((geometric, split)) => {
                report.flags_checked += 1;
                if geometric != split {
                    report.mismatches.push(RankMismatch {
                        flag: flag.clone(),
                        geometric,
                        split,
                    });
                }
            }
            Err(e) => failure = Some(e),
        }
    })?;
    match failure {
        Some(e) => Err(e),
        None => Ok(report),
    }
}

fn accumulate_triple(
    map: &mut BTreeMap<(Hypergraph, Hypergraph, Hypergraph), QPoly>,
    key: (Hypergraph, Hypergraph, Hypergraph),
    coeff: &QPoly,
) {
    use std::collections::btree_map::Entry;
    match map.entry(key) {
        Entry::Vacant(v) => {
            if !coeff.is_zero() {
                v.insert(coeff.clone());
            }
        }
        Entry::Occupied(mut o) => {
            *o.get_mut() += coeff;
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

/// Checks `(Δ ⊗ id)Δ = (id ⊗ Δ)Δ` on the basis element `[H]` by expanding
/// both triple tensors over canonical representatives.
pub fn check_coassociativity(h: &Hypergraph) -> Result<bool> {
    let cop = HopfElement::basis(h)?.coproduct()?;
    let mut lhs = BTreeMap::new();
    let mut rhs = BTreeMap::new();
    for ((a, b), coeff) in cop.terms() {
        for ((a1, a2), inner) in HopfElement::basis(a)?.coproduct()?.terms() {
            accumulate_triple(
                &mut lhs,
                (a1.clone(), a2.clone(), b.clone()),
                &(inner * coeff),
            );
        }
        for ((b1, b2), inner) in HopfElement::basis(b)?.coproduct()?.terms() {
            accumulate_triple(
                &mut rhs,
                (a.clone(), b1.clone(), b2.clone()),
                &(inner * coeff),
            );
        }
    }
    Ok(lhs == rhs)
}

/// Checks `(ε ⊗ id)Δ = id = (id ⊗ ε)Δ` on the basis element `[H]`.
pub fn check_counit(h: &Hypergraph) -> Result<bool> {
    let elt = HopfElement::basis(h)?;
    let mut left = HopfElement::zero();
    let mut right = HopfElement::zero();
    for ((a, b), coeff) in elt.coproduct()?.terms() {
        if a.n() == 0 {
            left = left.add(&HopfElement::basis(b)?.scale(coeff));
        }
        if b.n() == 0 {
            right = right.add(&HopfElement::basis(a)?.scale(coeff));
        }
    }
    Ok(left == elt && right == elt)
}

/// Checks both antipode convolution identities
/// `m(S ⊗ id)Δ = u∘ε = m(id ⊗ S)Δ` on the basis element `[H]`.
pub fn check_antipode_convolutions(h: &Hypergraph) -> Result<bool> {
    let elt = HopfElement::basis(h)?;
    let mut left = HopfElement::zero();
    let mut right = HopfElement::zero();
    for ((a, b), coeff) in elt.coproduct()?.terms() {
        let ea = HopfElement::basis(a)?;
        let eb = HopfElement::basis(b)?;
        left = left.add(&ea.antipode()?.product(&eb)?.scale(coeff));
        right = right.add(&ea.product(&eb.antipode()?)?.scale(coeff));
    }
    let expected = if h.n() == 0 {
        HopfElement::unit()
    } else {
        HopfElement::zero()
    };
    Ok(left == expected && right == expected)
}

/// Checks that the invariant turns disjoint union into the quasi-shuffle
/// product: `Ψ_q([H ⊔ K]) = Ψ_q([H])·Ψ_q([K])`.
pub fn check_psi_multiplicative(a: &Hypergraph, b: &Hypergraph) -> Result<bool> {
    let product = psi_q(a)?.quasi_shuffle(&psi_q(b)?);
    Ok(product == psi_q(&a.disjoint_union(b))?)
}

/// Structural facts about `Ψ_q([H])` for `H` on `[n]`, checkable without
/// any reference value:
///
/// * the coefficient of `M_(1,…,1)` is `n!` (one term per linear order,
///   each of rank zero);
/// * the coefficient of `M_(n)` is `q^{rk H}` (the one-block flag);
/// * at `q = 1` the principal specialization counts lattice points of the
///   dilated polytope, so it evaluates to `m^n` for small `m`.
pub fn check_psi_structure(h: &Hypergraph) -> Result<bool> {
    let psi = psi_q(h)?;
    let n = h.n();
    let factorial: i64 = (1..=n as i64).product();
    if psi.coefficient(&vec![1; n]) != QPoly::constant(factorial) {
        return Ok(false);
    }
    if psi.coefficient(&[n]) != QPoly::monomial(1, h.rank()) {
        return Ok(false);
    }
    for m in 1..=4i64 {
        if psi.ps_eval(m).eval(1) != m.pow(n as u32) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h(n: usize, edges: &[&[usize]]) -> Hypergraph {
        let raw: Vec<Vec<usize>> = edges.iter().map(|e| e.to_vec()).collect();
        Hypergraph::new(n, &raw, true).unwrap()
    }

    #[test]
    fn exhaustive_enumeration() {
        assert_eq!(all_hypergraphs_on(1).unwrap().len(), 1);
        assert_eq!(all_hypergraphs_on(2).unwrap().len(), 2);
        assert_eq!(all_hypergraphs_on(3).unwrap().len(), 16);
        assert_eq!(all_hypergraphs_on(4).unwrap().len(), 2048);
        assert!(matches!(
            all_hypergraphs_on(5),
            Err(Error::GuardExceeded { .. })
        ));
        assert!(matches!(
            all_hypergraphs_on(0),
            Err(Error::EmptyGroundSet { .. })
        ));
        // every enumerated hypergraph is distinct
        let all = all_hypergraphs_on(3).unwrap();
        let dedup: std::collections::BTreeSet<_> = all.iter().cloned().collect();
        assert_eq!(dedup.len(), all.len());
    }

    #[test]
    fn pipelines_agree_on_small_examples() {
        for hg in [
            h(1, &[]),
            h(2, &[&[1, 2]]),
            h(3, &[&[1, 2], &[2, 3]]),
            h(3, &[&[1, 2, 3]]),
            h(4, &[&[1, 2], &[1, 3], &[1, 4], &[2, 3], &[2, 4], &[3, 4]]),
        ] {
            assert_eq!(
                f_via_invariant(&hg).unwrap(),
                f_via_oracle(&hg).unwrap(),
                "pipelines disagree on {hg:?}"
            );
        }
    }

    #[test]
    fn rank_equality_sweeps() {
        let report = check_rank_equality(&h(3, &[&[1, 2], &[2, 3]])).unwrap();
        assert_eq!(report.flags_checked, 13);
        assert!(report.is_clean());

        let report = check_rank_equality(&h(4, &[&[1, 2, 3, 4], &[2, 4]])).unwrap();
        assert_eq!(report.flags_checked, 75);
        assert!(report.is_clean());
    }

    #[test]
    fn hopf_axioms_on_small_instances() {
        for hg in [
            Hypergraph::empty(),
            Hypergraph::point(),
            h(2, &[&[1, 2]]),
            h(3, &[&[1, 2], &[1, 2, 3]]),
        ] {
            assert!(check_coassociativity(&hg).unwrap(), "coassoc on {hg:?}");
            assert!(check_counit(&hg).unwrap(), "counit on {hg:?}");
            assert!(
                check_antipode_convolutions(&hg).unwrap(),
                "antipode on {hg:?}"
            );
        }
    }

    #[test]
    fn invariant_multiplicativity_and_structure() {
        let a = h(2, &[&[1, 2]]);
        let b = h(3, &[&[1, 2, 3]]);
        assert!(check_psi_multiplicative(&a, &b).unwrap());
        assert!(check_psi_structure(&a).unwrap());
        assert!(check_psi_structure(&b).unwrap());
        assert!(check_psi_structure(&h(4, &[&[1, 2], &[3, 4]])).unwrap());
    }
}
