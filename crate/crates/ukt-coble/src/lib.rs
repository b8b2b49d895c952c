//! The theta-constant side of the universal Coble quartic: the fifteen
//! degree-28 coefficient polynomials in the second-order theta constants,
//! the bidegree-(28,4) universal Coble polynomial and the Morley invariant,
//! the explicit bidegree-(16,4) Kummer-ideal generator with 1168 terms, and
//! the Sp₆(F₂) substitution orbit of that generator.

pub mod coeffs;
pub mod lemma;
pub mod numeric;
pub mod orbit;
pub mod upoly;

pub use ukt_core::UktError;
