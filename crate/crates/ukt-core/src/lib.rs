//! Exact computational-algebra engine for the universal Kummer threefold
//! verification suite: sparse polynomial arithmetic, symplectic 𝔽₂⁶
//! combinatorics, the E₇ reflection arrangement, Göpel/Coble/Satake
//! constructions, arbitrary-precision theta numerics, and tropical checks.

pub mod e7;
pub mod error;
pub mod gf2;
pub mod gopel;
pub mod kummer2;
pub mod linalg;
pub mod perm;
pub mod poly;
pub mod ring;
pub mod satake;

pub use error::UktError;
