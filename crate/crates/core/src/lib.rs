//! Deciding the Jordan-Hölder property for torsion-free classes of type-A
//! quiver representations.
//!
//! Two independent roads lead to every verdict: symmetric-group combinatorics
//! (inversions, c-sortable elements, reflection sequences) and a brute-force
//! filtration oracle over explicit matrix representations.  The `verify`
//! module cross-validates them at desk scale.

pub mod error;
pub mod filt_oracle;
pub mod fp;
pub mod quiver_rep;
pub mod reflect;
pub mod semibrick;
pub mod symgroup;
pub mod torsion;
pub mod verify;

pub use error::{Error, Result};
