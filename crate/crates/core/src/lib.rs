//! Closed-form machinery for the exponentially inhomogeneous recurrence
//!
//! ```text
//! G(n) = a G(n-1) + b G(n-2) + c d^n
//! ```
//!
//! with real coefficients and initial values `G(0)`, `G(1)`: characteristic
//! roots and the explicit solution, partial sums, product-difference
//! identities, rectangular and arched spiral geometry, and the complex
//! continuation `G(t)` for real `t`.
//!
//! Every closed form is checked in the test suite against literal iteration
//! of the recurrence.
//!
//! ```
//! use exponacci::{Params, Sequence};
//!
//! let fib = Sequence::new(Params::FIBONACCI).unwrap();
//! assert!((fib.g(10).unwrap() - 55.0).abs() < 1e-12);
//! ```

pub mod classify;
pub mod continuation;
pub mod error;
pub mod identities;
pub mod matrix;
pub mod params;
pub mod recurrence;
pub mod sampling;
pub mod spiral;
pub mod sums;
mod trig;

pub use classify::{Classification, Winding};
pub use continuation::{ComplexSample, CurveClass, CurveKind};
pub use error::{Error, Result};
pub use params::Params;
pub use recurrence::{
    characteristic_roots, g_iterative, g_negative_recursion, iterate, solve_closed_form,
    ClosedForm, Sequence,
};
pub use spiral::{ArcPoint, ArcSpec, CornerPoint, IntersectionResult, Point, SpiralPoint3};
pub use sums::{GammaValue, SumForm};
