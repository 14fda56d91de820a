//! Exact machinery for the G2(1) perfect crystals `B_l`, their limit `B_∞`,
//! the ultra-discretization of the D4(3) geometric crystal on `ℤ⁶`, and the
//! isomorphism between the two.

pub mod cartan;
pub mod cli;
pub mod crystal;
pub mod geom;
pub mod omega;
pub mod perfect;
pub mod trop;
pub mod ud;
