//! Exact computations with squarefree modules over `S = k[x_1, ..., x_n]`.
//!
//! Free complexes, the dualities `D` and `A`, minimal free models, the
//! invariant tables `B`, `H`, `C` and their rotation under `AD = A ∘ D`,
//! and the Betti-number systems attached to degree triplets of pure
//! complexes. All arithmetic is over the rationals, exactly.

pub mod complex;
pub mod degree;
pub mod error;
pub mod exact;
pub mod functors;
pub mod io;
pub mod matrix;
pub mod module;
pub mod table;
pub mod tensor;
pub mod triplet;
pub mod verify;

pub use complex::{FreeSqComplex, Generator, Invariants, SinglyGradedProfile, Violation};
pub use degree::SqDegree;
pub use error::{Error, Result};
pub use exact::{binom, primitive_vector, transition_matrix, IntVector, Rat};
pub use functors::{ad, ad_betti_shortcut, alexander_termwise, resolve_complex, resolve_module, SqModuleComplex};
pub use matrix::RatMatrix;
pub use module::{alexander_dual_module, ell_complex, squarefree_part_dim, standard_module, tor_betti, SqMap, SqModule};
pub use table::BettiTable;
pub use tensor::{construction_betti, pinching_weights, term_rank, PinchingWeights};
pub use triplet::{
    derive_params, enumerate_balanced, full_system, herzog_kuhl, is_balanced, reduce,
    reduced_system, render_triangle, solve_betti, BettiSolution, DegreeTriplet, TripletParams,
};
