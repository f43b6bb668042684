//! Homogeneous quasisymmetric functions in the monomial basis, with
//! polynomial-in-`q` coefficients.
//!
//! An element of degree `n` is a finite sum `Σ_α c_α(q) M_α` over integer
//! compositions `α ⊨ n`. The infinite `x`-variable expansions are never
//! materialized; the basis coefficients stand for them. Degree mixing is an
//! error rather than a silent graded sum — every formula in this crate is
//! homogeneous, so a mix indicates a caller bug.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::qpoly::QPoly;

/// A homogeneous quasisymmetric function of a fixed degree in the monomial
/// basis `M_α`, with `QPoly` coefficients.
///
/// The degree-0 space is spanned by `M_()` (the empty composition), which is
/// the multiplicative unit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QSymM {
    degree: usize,
    terms: BTreeMap<Vec<usize>, QPoly>,
}

impl QSymM {
    /// The zero element of the given degree.
    pub fn zero(degree: usize) -> Self {
        QSymM {
            degree,
            terms: BTreeMap::new(),
        }
    }

    /// `M_()`, the unit of the quasi-shuffle (and concatenation) product.
    pub fn unit() -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(Vec::new(), QPoly::one());
        QSymM { degree: 0, terms }
    }

    /// The basis element `M_α`. Parts must be positive; the empty
    /// composition gives the unit.
    pub fn monomial(alpha: &[usize]) -> Result<Self> {
        validate_composition(alpha, alpha.iter().sum())?;
        let mut terms = BTreeMap::new();
        terms.insert(alpha.to_vec(), QPoly::one());
        Ok(QSymM {
            degree: alpha.iter().sum(),
            terms,
        })
    }

    /// Builds `Σ c_α M_α` of the stated degree, validating every key.
    pub fn from_terms<I>(degree: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<usize>, QPoly)>,
    {
        let mut out = QSymM::zero(degree);
        for (alpha, coeff) in terms {
            validate_composition(&alpha, degree)?;
            out.accumulate(alpha, &coeff);
        }
        Ok(out)
    }

    fn accumulate(&mut self, alpha: Vec<usize>, coeff: &QPoly) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(alpha);
        match entry {
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

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// The coefficient of `M_α` (zero if absent).
    pub fn coefficient(&self, alpha: &[usize]) -> QPoly {
        self.terms.get(alpha).cloned().unwrap_or_else(QPoly::zero)
    }

    /// Terms in lexicographic composition order.
    pub fn terms(&self) -> impl Iterator<Item = (&Vec<usize>, &QPoly)> {
        self.terms.iter()
    }

    pub fn add(&self, other: &QSymM) -> Result<QSymM> {
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch {
                left: self.degree,
                right: other.degree,
            });
        }
        let mut out = self.clone();
        for (alpha, coeff) in &other.terms {
            out.accumulate(alpha.clone(), coeff);
        }
        Ok(out)
    }

    pub fn scale(&self, scalar: &QPoly) -> QSymM {
        let mut out = QSymM::zero(self.degree);
        for (alpha, coeff) in &self.terms {
            out.accumulate(alpha.clone(), &(coeff * scalar));
        }
        out
    }

    /// `Σ_i scalar_i · F_i`; all operands must share one degree.
    pub fn linear_combine(pairs: &[(QPoly, QSymM)]) -> Result<QSymM> {
        let Some((_, first)) = pairs.first() else {
            return Err(Error::EmptyCombination);
        };
        let mut out = QSymM::zero(first.degree());
        for (scalar, f) in pairs {
            if f.degree() != out.degree() {
                return Err(Error::DegreeMismatch {
                    left: out.degree(),
                    right: f.degree(),
                });
            }
            for (alpha, coeff) in &f.terms {
                out.accumulate(alpha.clone(), &(coeff * scalar));
            }
        }
        Ok(out)
    }

    /// Applies a map to every coefficient (e.g. `q → −q`, or evaluation at a
    /// fixed `q`), dropping terms that become zero.
    pub fn map_coeffs<F>(&self, f: F) -> QSymM
    where
        F: Fn(&QPoly) -> QPoly,
    {
        let mut out = QSymM::zero(self.degree);
        for (alpha, coeff) in &self.terms {
            out.accumulate(alpha.clone(), &f(coeff));
        }
        out
    }

    /// The quasi-shuffle (overlapping shuffle) product: on basis elements,
    /// `M_α · M_β` sums `M_γ` over all interleavings of `α` and `β` in which
    /// a part of `α` may merge additively with a part of `β`. This is the
    /// product of QSym in the monomial basis; degrees add.
    pub fn quasi_shuffle(&self, other: &QSymM) -> QSymM {
        let mut out = QSymM::zero(self.degree + other.degree);
        for (alpha, ca) in &self.terms {
            for (beta, cb) in &other.terms {
                let coeff = ca * cb;
                let mut prefix = Vec::with_capacity(alpha.len() + beta.len());
                let mut shuffles = BTreeMap::new();
                quasi_shuffle_words(alpha, beta, &mut prefix, &mut shuffles);
                for (gamma, mult) in shuffles {
                    out.accumulate(gamma, &coeff.scale(mult));
                }
            }
        }
        out
    }

    /// The concatenation product `M_α ∘ M_β = M_{α·β}`, extended bilinearly;
    /// degrees add.
    pub fn concat(&self, other: &QSymM) -> QSymM {
        let mut out = QSymM::zero(self.degree + other.degree);
        for (alpha, ca) in &self.terms {
            for (beta, cb) in &other.terms {
                let mut gamma = alpha.clone();
                gamma.extend_from_slice(beta);
                out.accumulate(gamma, &(ca * cb));
            }
        }
        out
    }

    /// The `+1` operator: `(M_{(i_1,…,i_k)})_{+1} = M_{(i_1,…,i_k + 1)}`,
    /// incrementing the last part; extended linearly, raising the degree
    /// by one. The unit term `M_()` has no last part and is rejected.
    pub fn plus_one(&self) -> Result<QSymM> {
        let mut out = QSymM::zero(self.degree + 1);
        for (alpha, coeff) in &self.terms {
            let mut raised = alpha.clone();
            match raised.last_mut() {
                Some(last) => *last += 1,
                None => return Err(Error::UnitTermInPlusOne),
            }
            out.accumulate(raised, coeff);
        }
        Ok(out)
    }

    /// The principal specialization `ps(F)(m)`: evaluate at
    /// `x_1 = … = x_m = 1` and `x_i = 0` for `i > m`. On the basis,
    /// `ps(M_α)(m) = C(m, ℓ(α))`, extended polynomially to negative `m`
    /// (in particular `C(−1, k) = (−1)^k`).
    pub fn ps_eval(&self, m: i64) -> QPoly {
        let mut out = QPoly::zero();
        for (alpha, coeff) in &self.terms {
            out += &coeff.scale(binomial_extended(m, alpha.len()));
        }
        out
    }

    /// The f-polynomial of the polytope whose weighted integer-points
    /// enumerator this element is: `f(q) = (−1)^n ps(F_{−q})(−1)` where `n`
    /// is the degree.
    ///
    /// The result has nonnegative coefficients whenever the input is a
    /// valid enumerator; this is not checked here.
    pub fn f_polynomial(&self) -> QPoly {
        let sign = if self.degree.is_multiple_of(2) { 1 } else { -1 };
        self.map_coeffs(QPoly::substitute_neg_q)
            .ps_eval(-1)
            .scale(sign)
    }
}

fn validate_composition(alpha: &[usize], degree: usize) -> Result<()> {
    if alpha.contains(&0) || alpha.iter().sum::<usize>() != degree {
        return Err(Error::CompositionDegreeMismatch {
            composition: alpha.to_vec(),
            degree,
        });
    }
    Ok(())
}

/// Accumulates every quasi-shuffle of the composition words `a` and `b`
/// into `out` with multiplicity.
fn quasi_shuffle_words(
    a: &[usize],
    b: &[usize],
    prefix: &mut Vec<usize>,
    out: &mut BTreeMap<Vec<usize>, i64>,
) {
    if a.is_empty() || b.is_empty() {
        let mut word = prefix.clone();
        word.extend_from_slice(a);
        word.extend_from_slice(b);
        *out.entry(word).or_insert(0) += 1;
        return;
    }
    prefix.push(a[0]);
    quasi_shuffle_words(&a[1..], b, prefix, out);
    prefix.pop();

    prefix.push(b[0]);
    quasi_shuffle_words(a, &b[1..], prefix, out);
    prefix.pop();

    prefix.push(a[0] + b[0]);
    quasi_shuffle_words(&a[1..], &b[1..], prefix, out);
    prefix.pop();
}

/// The binomial coefficient `C(m, k) = m(m−1)…(m−k+1)/k!` as a polynomial
/// in `m` evaluated at an integer (possibly negative) argument.
fn binomial_extended(m: i64, k: usize) -> i64 {
    let mut numerator: i128 = 1;
    for j in 0..k as i64 {
        numerator *= (m - j) as i128;
    }
    let mut denominator: i128 = 1;
    for j in 1..=k as i128 {
        denominator *= j;
    }
    (numerator / denominator) as i64
}

impl fmt::Display for QSymM {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (alpha, coeff) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let parts: Vec<String> = alpha.iter().map(usize::to_string).collect();
            write!(f, "({coeff})M_({})", parts.join(","))?;
        }
        Ok(())
    }
}
