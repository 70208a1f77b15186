//! Desk-scale checks of the structural claims: Markov connectivity of the
//! swap moves, the Gorenstein witness condition, and independent oracles for
//! the Pieri rule and `sl₂` fusion.

mod gorenstein;
mod markov;
mod oracles;

pub use gorenstein::{gorenstein_check, BoundaryComparison, FactorSum, GorensteinReport};
pub use markov::{markov_check, FiberReport};
pub use oracles::{lr_strip_oracle, sl2_fusion_oracle};

use crate::chains::{enumerate_x, enumerate_y, GeneratorTuple};
use crate::error::Result;
use crate::guard::Limits;

/// Level-one generators: `X_{a,b}` for `P(a,b)`, `Y_{a,b}` for `Q(a,b)`.
fn generators(m: usize, a: usize, b: usize, leveled: bool, limits: &Limits) -> Result<Vec<GeneratorTuple>> {
    if leveled {
        enumerate_x(m, a, b, limits)
    } else {
        enumerate_y(m, a, b, limits)
    }
}

/// Integer coordinates of a generator's chain element.
fn generator_coords(t: &GeneratorTuple, leveled: bool) -> Vec<i64> {
    t.chain(leveled.then_some(1)).coords().into_iter().map(|v| v as i64).collect()
}
