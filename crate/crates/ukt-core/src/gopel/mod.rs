//! The Göpel variety toolchain: the degree-7 parametrization γ of ℙ⁶ ⇢ ℙ¹⁴,
//! the 135 Göpel products of seven linear forms, the 63×135 incidence
//! matrix and its toric relations, the 135×15 transformation matrix, the
//! 63 restriction cubics, and Hilbert-function verification by evaluation
//! rank.

pub mod gamma;
pub mod ideal;
pub mod products;
pub mod transform;
