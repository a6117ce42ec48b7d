//! Exact all-genus equivariant Gromov-Witten invariants of algebraic GKM
//! manifolds, computed as finite sums over decorated graphs.
//!
//! The target is described purely combinatorially by its GKM graph (fixed
//! points, invariant curves, tangent weights). Invariants are assembled from
//! edge Euler-class factors and per-vertex Hodge-integral brackets, with all
//! arithmetic exact over Q(u_1,...,u_m).

pub mod algebra;
pub mod eval;
pub mod gkm;
pub mod hodge;
pub mod localization;
