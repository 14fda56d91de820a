//! Subtraction-free expressions, their ultra-discretization to max-plus
//! form, redundancy removal, and an exact valuation oracle.

pub mod expr;
pub mod simplify;
pub mod tropical;
pub mod valuation;

pub use expr::{parse, parse_named, ExprError, PosExpr};
pub use simplify::{simplify, simplify_poly};
pub use tropical::{equal_on_grid, ud, TropPoly, TropRat, TropTerm};
pub use valuation::{deg_inf, oracle_check, substitute_monomial, OracleReport, UniPoly, UniRat};
