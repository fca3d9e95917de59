//! Exact computations with VV modules `(J ∩ I^t) / (J I^{t-1})` of monomial pairs.
//!
//! The crate is organised bottom-up:
//!
//! * [`monomial`] and [`ideal`]: exponent vectors and monomial ideals kept in
//!   canonical minimal form, with a naive [`oracle`] path for cross-checks;
//! * [`vv`]: graded components, vanishing and bounded Artin-Rees / reduction checks;
//! * [`graph`] and [`clutter`]: edge and facet ideals with their combinatorial
//!   vanishing criteria;
//! * [`jacobian`]: Jacobian matrices, exact minors and the Jacobian ideal;
//! * [`rees`]: relation families and fiber-graph certificates for Rees-algebra
//!   presentations.

pub mod clutter;
pub mod combinat;
pub mod error;
pub mod graph;
pub mod ideal;
pub mod io;
pub mod jacobian;
pub mod monomial;
pub mod oracle;
pub mod rees;
pub mod vv;

pub use error::{Error, Result};
pub use ideal::{IdealArithmetic, Interreduced, MonomialIdeal};
pub use monomial::{Monomial, RingContext};
