//! Exact intersection theory on projective space: Segre, Fulton,
//! Chern-Schwartz-MacPherson and Milnor classes of possibly singular
//! hypersurfaces and global complete intersections in `P^n`.
//!
//! All arithmetic happens in `Q[H]/(H^{n+1})` with arbitrary-precision
//! rationals. Segre classes of singular schemes are inputs; the crate also
//! runs the Milnor class formula backwards to recover them.
//!
//! ```
//! use chowcalc::{classes, AmbientSpace, ChowClass};
//!
//! let p4 = AmbientSpace::projective(4);
//! let line = classes::segre_linear_subspace(1, 4).unwrap();
//! // quadric cone ∩ hyperplane, singular along a line
//! let m = classes::milnor_signed(&[1], 2, &line, &p4).unwrap();
//! assert_eq!(m, ChowClass::hyperplane_power(4, 3));
//! ```

pub mod calculus;
pub mod chow;
pub mod classes;
pub mod cli;
pub mod error;
pub mod render;
pub mod report;
pub mod scenario;
pub mod verify;

pub use calculus::{LineBundle, SplitBundle};
pub use chow::{AmbientSpace, ChowClass, Rational};
pub use error::{Error, Result};
pub use report::{ClassReport, Command, Format, ReportValue};
pub use scenario::{parse_scenario, Scenario, ScenarioKind, SingularSchemeSegre};
