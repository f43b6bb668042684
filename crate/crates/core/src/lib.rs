//! Exact combinatorics of hypergraphic polytopes.
//!
//! A hypergraph `H` on `[n]` (singletons always present) determines a
//! polytope `P_H`, the Minkowski sum of the coordinate simplices of its
//! edges. This crate computes, entirely in integer arithmetic:
//!
//! * the quasisymmetric invariant `Ψ_q([H])` — a sum over ordered set
//!   partitions (flags) weighted by the rank of the induced splitting of
//!   `H` — via the Hopf algebra of hypergraphs ([`hopf`], [`qsym`]);
//! * the f-polynomial of `P_H`, either by principal specialization of
//!   `Ψ_q` or directly from the vertex description of `P_H` ([`polytope`]);
//! * verification that the two routes agree, flag by flag and face by
//!   face, together with the Hopf-algebra axioms themselves ([`verify`]).
//!
//! The geometric side never consults the algebraic side, so each is an
//! oracle for the other. [`families`] supplies named instances (complete,
//! uniform, Pitman–Stanley, graphs, simplicial complexes) with their known
//! closed-form answers.

pub mod error;
pub mod families;
pub mod flags;
pub mod hopf;
pub mod hypergraph;
pub mod polytope;
pub mod qpoly;
pub mod qsym;
pub mod verify;

pub use error::{Error, Result};
pub use flags::SetComposition;
pub use hopf::{HopfElement, TensorElement, psi_q, psi_q_guarded, zeta_q_alpha};
pub use hypergraph::Hypergraph;
pub use polytope::{FaceRecord, HypergraphicPolytope, affine_dim};
pub use qpoly::QPoly;
pub use qsym::QSymM;
