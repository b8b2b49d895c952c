//! Arbitrary-precision numerical evaluation of Riemann theta functions in
//! genus 1–4 (plain, with characteristics, and second order), sampling of
//! the universal Kummer threefold through second-order theta constants, and
//! numerical verification of the transcendental identities that link the
//! exact polynomial side of the suite to the analytic one.

pub mod check;
pub mod sample;
pub mod theta;

pub use ukt_core::UktError;
