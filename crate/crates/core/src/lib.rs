//! Exact evaluation of angular-momentum recoupling symbols.
//!
//! Every value is computed in closed form as `coefficient · √radicand` with
//! an arbitrary-precision rational coefficient and a square-free rational
//! radicand; no floating point enters the evaluation path. Factorial
//! radicands are assembled as prime-exponent maps, so taking the square root
//! is exponent bookkeeping rather than big-integer factoring, and momenta in
//! the tens stay cheap.
//!
//! Supported symbols: 3jm, 6-j, 9-j, the 12-j symbols of the first and
//! second kinds, all five kinds of 15-j symbols and the cyclic 18-j symbols
//! of the first and second kinds, following the standard factorizations into
//! sums over products of 6-j (and 9-j) symbols.
//!
//! ```
//! use wigner_exact::{evaluate, HalfInt, SymbolKind, SymbolSpec};
//!
//! let args = [0, 1, 1, 1, 1, 1, 0, 1, 1, 1, 1, 1]
//!     .map(HalfInt::from_int)
//!     .to_vec();
//! let spec = SymbolSpec::new(SymbolKind::TwelveJFirst, args).unwrap();
//! let value = evaluate(&spec).unwrap();
//! assert_eq!(value.format_exact(), "1/54");
//! assert_eq!(value.to_decimal(12), "0.0185185185185");
//! ```

mod error;
mod factored;
mod halfint;
mod surd;
mod symbols;

pub use error::WignerError;
pub use factored::{factorial_factored, factorial_int, FactoredPositive};
pub use halfint::HalfInt;
pub use surd::{ratio_string, Surd, SurdVec};
pub use symbols::{
    chain_3nj_first, chain_3nj_second, delta, evaluate, field_escalations,
    reset_field_escalations, sixj_memo_len, triangle_ok, wigner_12j_first, wigner_12j_second,
    wigner_15j_fifth, wigner_15j_fourth, wigner_15j_third, wigner_3jm, wigner_6j, wigner_9j,
    SymbolKind, SymbolSpec,
};
