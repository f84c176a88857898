//! Exact computation of the orbifold cohomology ring of a symplectic
//! quotient singularity `[V/G]` from a finite matrix group `G` in `Sp(V)`.
//!
//! The pipeline: close a generator list into a full matrix group over a
//! cyclotomic field ([`group`]), compute eigenvalue ages and the fixed-space
//! filtration with exact linear algebra ([`linalg`], [`orbifold`]), take the
//! associated graded of the center of the group algebra to obtain the ring
//! ([`orbifold::OrbifoldAnalysis::gr_center_ring`]), and test the finite
//! identities behind the construction exhaustively: the age-codimension
//! identity, transversality against age additivity, associativity of the
//! graded product, multiplicativity of the filtration, and the agreement of
//! the two Betti-number gradings. [`families`] supplies the standard
//! examples, including the symmetric groups whose Betti numbers match the
//! Hilbert scheme of points in the plane.
//!
//! All arithmetic is exact: scalars live in `Q(zeta_m)` with canonical
//! coordinates modulo the m-th cyclotomic polynomial.
//!
//! ```
//! use mckay_core::{families, Caps, OrbifoldAnalysis, Rational};
//!
//! // S_3 acting diagonally on C^3 + C^3
//! let group = families::symmetric_group_action(3, &Caps::default())?;
//! let analysis = OrbifoldAnalysis::new(group)?;
//!
//! // three classes in degrees 0, 2, 4; the degree-2 class sum squares to
//! // three times the degree-4 class sum
//! let ring = analysis.gr_center_ring()?;
//! assert_eq!(ring.basis, vec![(0, 0), (1, 2), (2, 4)]);
//! assert_eq!(ring.constant(1, 1, 2), Rational::from_integer(3.into()));
//!
//! // and the Betti numbers match the Hilbert scheme of three points
//! assert_eq!(analysis.orbifold_betti().dims, families::hilbert_betti(3));
//! # Ok::<(), mckay_core::Error>(())
//! ```

pub mod cyclotomic;
pub mod error;
pub mod families;
pub mod group;
pub mod linalg;
pub mod orbifold;

pub use cyclotomic::{CycNum, Rational};
pub use error::{Error, Result};
pub use families::{FamilySpec, InnerFamily};
pub use group::{close_generators, Caps, ConjugacyClass, FiniteMatrixGroup};
pub use linalg::{CycMatrix, Subspace};
pub use orbifold::{
    AgeData, AssocMode, CheckOutcome, GradedRing, OrbifoldAnalysis, OrbifoldBetti,
};
