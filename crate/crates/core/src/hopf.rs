//! The combinatorial Hopf algebra of hypergraphs.
//!
//! Elements are formal `QPoly`-linear combinations of isomorphism classes
//! (canonical forms) of hypergraphs. The product is disjoint union, the
//! coproduct sums restriction ⊗ contraction over all vertex subsets, the
//! counit projects onto degree zero, and the antipode is Takeuchi's
//! alternating sum over chains — which here is a signed sum of splitting
//! hypergraphs over set compositions. The universal morphism to
//! quasisymmetric functions induced by the rank character `ζ_q` is `Ψ_q`.

use std::collections::{BTreeMap, HashMap};

use crate::error::{Error, Result};
use crate::flags::for_each_set_composition;
use crate::hypergraph::Hypergraph;
use crate::qpoly::QPoly;
use crate::qsym::QSymM;

/// Default vertex-count bound for the flag sum behind [`psi_q`]
/// (ordered-Bell-many terms).
pub const DEFAULT_PSI_GUARD: usize = 8;

/// Default vertex-count bound for the Takeuchi antipode sum.
pub const DEFAULT_ANTIPODE_GUARD: usize = 7;

/// A formal linear combination of isomorphism classes of hypergraphs with
/// `QPoly` coefficients. Keys are canonical forms; mixed degrees are
/// permitted (the Hopf algebra is the direct sum over all n).
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct HopfElement {
    terms: BTreeMap<Hypergraph, QPoly>,
}

/// A formal linear combination of ordered pairs of isomorphism classes:
/// the target of the coproduct.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TensorElement {
    terms: BTreeMap<(Hypergraph, Hypergraph), QPoly>,
}

impl HopfElement {
    pub fn zero() -> Self {
        HopfElement::default()
    }

    /// The unit `η(1) = [H_∅]`.
    pub fn unit() -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(Hypergraph::empty(), QPoly::one());
        HopfElement { terms }
    }

    /// The basis element `[H]`, canonicalizing the representative.
    pub fn basis(h: &Hypergraph) -> Result<Self> {
        let mut terms = BTreeMap::new();
        terms.insert(h.canonical_form()?, QPoly::one());
        Ok(HopfElement { terms })
    }

    fn accumulate(&mut self, class: Hypergraph, coeff: &QPoly) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(class) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get() + coeff;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Terms in canonical (hypergraph) order.
    pub fn terms(&self) -> impl Iterator<Item = (&Hypergraph, &QPoly)> {
        self.terms.iter()
    }

    /// The coefficient of the class of `h` (zero if absent).
    pub fn coefficient(&self, h: &Hypergraph) -> Result<QPoly> {
        let class = h.canonical_form()?;
        Ok(self.terms.get(&class).cloned().unwrap_or_else(QPoly::zero))
    }

    pub fn add(&self, other: &HopfElement) -> HopfElement {
        let mut out = self.clone();
        for (class, coeff) in &other.terms {
            out.accumulate(class.clone(), coeff);
        }
        out
    }

    pub fn scale(&self, scalar: &QPoly) -> HopfElement {
        let mut out = HopfElement::zero();
        for (class, coeff) in &self.terms {
            out.accumulate(class.clone(), &(coeff * scalar));
        }
        out
    }

    /// The bilinear product, `[H_1]·[H_2] = [H_1 ⊔ H_2]`.
    pub fn product(&self, other: &HopfElement) -> Result<HopfElement> {
        let mut out = HopfElement::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let union = a.disjoint_union(b).canonical_form()?;
                out.accumulate(union, &(ca * cb));
            }
        }
        Ok(out)
    }

    /// The coproduct `Δ([H]) = Σ_{S ⊆ [n]} [H|_S] ⊗ [H/S]`, over all `2^n`
    /// subsets including `∅` and `[n]` (the counit axiom needs both
    /// extremes), extended linearly.
    pub fn coproduct(&self) -> Result<TensorElement> {
        let mut out = TensorElement::zero();
        for (h, coeff) in &self.terms {
            let n = h.n();
            let mut subset = Vec::with_capacity(n);
            for mask in 0u64..(1u64 << n) {
                subset.clear();
                subset.extend((1..=n).filter(|v| mask >> (v - 1) & 1 == 1));
                let left = h.restrict(&subset)?.canonical_form()?;
                let right = h.contract(&subset)?.canonical_form()?;
                out.accumulate((left, right), coeff);
            }
        }
        Ok(out)
    }

    /// The counit: the coefficient of `[H_∅]`.
    pub fn counit(&self) -> QPoly {
        self.terms
            .get(&Hypergraph::empty())
            .cloned()
            .unwrap_or_else(QPoly::zero)
    }

    /// The antipode with the default guard. See [`HopfElement::antipode_guarded`].
    pub fn antipode(&self) -> Result<HopfElement> {
        self.antipode_guarded(DEFAULT_ANTIPODE_GUARD)
    }

    /// Takeuchi's formula: `S([H]) = Σ_𝓕 (−1)^{|𝓕|} [H/𝓕]` over all set
    /// compositions 𝓕 of `[n]` (strict chains of subsets), reusing the
    /// flag-splitting of the Ψ_q machinery; `S([H_∅]) = [H_∅]`. Extended
    /// linearly.
    pub fn antipode_guarded(&self, guard: usize) -> Result<HopfElement> {
        let mut out = HopfElement::zero();
        for (h, coeff) in &self.terms {
            let n = h.n();
            if n == 0 {
                out.accumulate(Hypergraph::empty(), coeff);
                continue;
            }
            if n > guard {
                return Err(Error::GuardExceeded {
                    operation: "antipode",
                    n,
                    guard,
                });
            }
            // The same labeled splitting recurs across many flags; cache its
            // canonical form.
            let mut canonical: HashMap<Hypergraph, Hypergraph> = HashMap::new();
            let mut failure = None;
            for_each_set_composition(n, |flag| {
                if failure.is_some() {
                    return;
                }
                let split = match h.split_by_flag(flag) {
                    Ok(s) => s,
                    Err(e) => {
                        failure = Some(e);
                        return;
                    }
                };
                let class = match canonical.entry(split) {
                    std::collections::hash_map::Entry::Occupied(o) => o.get().clone(),
                    std::collections::hash_map::Entry::Vacant(v) => {
                        match v.key().canonical_form() {
                            Ok(c) => {
                                v.insert(c.clone());
                                c
                            }
                            Err(e) => {
                                failure = Some(e);
                                return;
                            }
                        }
                    }
                };
                let sign = if flag.len() % 2 == 0 { 1 } else { -1 };
                out.accumulate(class, &coeff.scale(sign));
            })?;
            if let Some(e) = failure {
                return Err(e);
            }
        }
        Ok(out)
    }

    /// The character `ζ`: 1 on discrete classes, 0 otherwise, extended
    /// linearly. Equals `ζ_q` at `q = 0` on basis elements.
    pub fn zeta(&self) -> QPoly {
        let mut out = QPoly::zero();
        for (h, coeff) in &self.terms {
            if h.is_discrete() {
                out += coeff;
            }
        }
        out
    }

    /// The rank character `ζ_q([H]) = q^{rk(H)} = q^{n − c(H)}`, extended
    /// linearly.
    pub fn zeta_q(&self) -> QPoly {
        let mut out = QPoly::zero();
        for (h, coeff) in &self.terms {
            out += &(coeff * &QPoly::monomial(1, h.rank()));
        }
        out
    }
}

impl TensorElement {
    pub fn zero() -> Self {
        TensorElement::default()
    }

    pub(crate) fn accumulate(&mut self, classes: (Hypergraph, Hypergraph), coeff: &QPoly) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(classes) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get() + coeff;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Hypergraph, Hypergraph), &QPoly)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, left: &Hypergraph, right: &Hypergraph) -> Result<QPoly> {
        let key = (left.canonical_form()?, right.canonical_form()?);
        Ok(self.terms.get(&key).cloned().unwrap_or_else(QPoly::zero))
    }
}

/// `(ζ_q)_α([H])`: the coefficient of `M_α` in `Ψ_q([H])`, i.e. the sum of
/// `q^{rk(H/𝓕)}` over all flags 𝓕 of type `α`.
pub fn zeta_q_alpha(h: &Hypergraph, alpha: &[usize]) -> Result<QPoly> {
    let n = h.n();
    if alpha.contains(&0) || alpha.iter().sum::<usize>() != n {
        return Err(Error::CompositionDegreeMismatch {
            composition: alpha.to_vec(),
            degree: n,
        });
    }
    let mut counts = vec![0i64; n.max(1)];
    let mut failure = None;
    for_each_set_composition(n, |flag| {
        if failure.is_some() || flag.composition_type() != alpha {
            return;
        }
        match h.split_rank(flag) {
            Ok(rk) => counts[rk] += 1,
            Err(e) => failure = Some(e),
        }
    })?;
    if let Some(e) = failure {
        return Err(e);
    }
    Ok(QPoly::from_coeffs(counts))
}

/// `Ψ_q([H])` with the default guard. See [`psi_q_guarded`].
pub fn psi_q(h: &Hypergraph) -> Result<QSymM> {
    psi_q_guarded(h, DEFAULT_PSI_GUARD)
}

/// The universal quasisymmetric invariant
/// `Ψ_q([H]) = Σ_𝓕 q^{rk(H/𝓕)} M_{type(𝓕)}`, folded over all set
/// compositions of `[n]`.
pub fn psi_q_guarded(h: &Hypergraph, guard: usize) -> Result<QSymM> {
    let n = h.n();
    if n == 0 {
        return Err(Error::EmptyGroundSet {
            operation: "the flag sum behind psi",
        });
    }
    if n > guard {
        return Err(Error::GuardExceeded {
            operation: "psi flag sum",
            n,
            guard,
        });
    }
    let mut acc: BTreeMap<Vec<usize>, Vec<i64>> = BTreeMap::new();
    let mut failure = None;
    for_each_set_composition(n, |flag| {
        if failure.is_some() {
            return;
        }
        match h.split_rank(flag) {
            Ok(rk) => {
                acc.entry(flag.composition_type())
                    .or_insert_with(|| vec![0; n])[rk] += 1
            }
            Err(e) => failure = Some(e),
        }
    })?;
    if let Some(e) = failure {
        return Err(e);
    }
    QSymM::from_terms(
        n,
        acc.into_iter()
            .map(|(alpha, c)| (alpha, QPoly::from_coeffs(c))),
    )
}
