//! Exact computation of Floer cohomology for the Chiang Lagrangian with
//! higher-rank local systems over the two-element field.
//!
//! The crate is organised around five pieces:
//!
//! * [`gf2`] — dense bit-packed linear algebra over F2;
//! * [`gamma`] — the binary dihedral group of order 12 in normal form;
//! * [`su2`] — a floating-point oracle that recomputes parallel-transport
//!   group elements by lifting loops to the unit quaternions;
//! * [`reps`] — F2 representations of the group: the six indecomposables,
//!   named composites, the obstruction section and the Krull–Schmidt
//!   classifier;
//! * [`pearl`] — assembly of the pearl-complex differentials, the central
//!   and monodromy subcomplexes, and cohomology rank extraction.
//!
//! [`table`] holds the reference data (transport tables, the two 16×16
//! differential matrices, closed-form rank predictions) that the
//! verification suite checks against.

pub mod gamma;
pub mod gf2;
pub mod pearl;
pub mod reps;
pub mod su2;
pub mod table;

pub use gamma::GammaElement;
pub use gf2::BitMatrix;
pub use pearl::{FloerOutcome, PearlComplex, Selector};
pub use reps::{GammaRep, Multiplicities};
