//! Tame automorphisms, the pair certifier, and impossibility sweeps.

pub mod affine;
pub mod auto;
pub mod certify;
pub mod linalg;
pub mod sweep;

pub use affine::affine_decompose;
pub use auto::{apply_auto, invert_auto, random_tame, AutoGen, AutoWord, TameLimits};
pub use certify::{certify_pair, in_scope};
pub use sweep::{
    delta_balance_check, impossibility_sweep, CellStatus, SweepBounds, SweepCell, SweepPattern, SweepReport,
};
