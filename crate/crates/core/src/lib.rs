//! Exact combinatorics of the caterpillar toric degeneration of the Cox ring
//! of quasi-parabolic `SL_m` bundles on the projective line.
//!
//! The crate is organised bottom-up:
//!
//! * [`weights`]: dominant `SL_m` / `GL_m` weights and duality.
//! * [`pieri`]: interlacing patterns, the classical Pieri rule and the
//!   generator decomposition of a pattern.
//! * [`kpieri`]: the level grading and the K-Pieri rule.
//! * [`chains`]: the fiber-product semigroups `Q(a,b)` and `P(a,b)`, their
//!   generator tuples and swap relations.
//! * [`enumerate`]: dimensions of graded pieces by dynamic programming over
//!   boundary weights.
//! * [`verify`]: Markov-connectivity and Gorenstein checks plus the
//!   independent oracles used to validate the rest.

pub mod chains;
pub mod enumerate;
pub mod error;
pub mod guard;
pub mod kpieri;
pub mod pieri;
pub mod verify;
pub mod weights;

pub use chains::{
    enumerate_x, enumerate_y, glue, swap_relations, weyl_tuple, zero_split, ChainElement, ChainShape, GeneratorTuple,
    SwapRelation, WeightData, WeylInvariant,
};
pub use enumerate::{dim_conformal_blocks, dim_invariants, hilbert_level, labellings, LabellingCount};
pub use error::{Error, Result};
pub use guard::Limits;
pub use kpieri::{k_generators, kpieri_dim, kpieri_dual_dim, level, FactorKind, LeveledPattern};
pub use pieri::{
    build_dual_pattern, build_pattern, decompose, dual_pieri_dim, pieri_dim, recompose, GeneratorMultiset,
    InterlacingPattern, Orientation, PieriGenerator,
};
pub use verify::{gorenstein_check, lr_strip_oracle, markov_check, sl2_fusion_oracle, FiberReport, GorensteinReport};
pub use weights::{dual, gl_lift, sl_reduce, GlWeight, SlWeight};
