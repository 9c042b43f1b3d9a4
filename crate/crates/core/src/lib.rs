//! Exact computations over the mod 2 Steenrod algebra.
//!
//! * [`f2linalg`]: packed linear algebra over F2.
//! * [`steenrod`]: the algebra A in the admissible basis, its Hopf structure and A(1).
//! * [`gradmod`]: finite graded modules over A or A(1).
//! * [`spda`]: presented unstable algebras, Poincaré duality and characteristic classes.
//! * [`ext`]: minimal resolutions over A(1) and Ext charts.
//! * [`models`]: the Joker, J⁸, BSO(3) and friends, plus the verification suite.
//! * [`cli`]: the command line front end used by the `sqpd` binary.

pub mod f2linalg;
pub mod parse;
pub mod steenrod;
pub mod gradmod;
pub mod spda;
pub mod ext;
pub mod models;
pub mod cli;
