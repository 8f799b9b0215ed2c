//! Matroid perspectives `(M, M′)`, their compatible sets, and the trivariate
//! Tutte polynomial.
//!
//! Subsets of the ground set `{1, …, n}` (`n ≤ 30`) are bitsets; the total
//! order used by activities and lexicographic minima lives in a
//! [`setcore::GroundSet`].
//!
//! ```
//! use matroid_perspective::input::InputDocument;
//! use matroid_perspective::tutte::{tutte, Method};
//!
//! let doc = InputDocument::parse(
//!     "elements: 5\n\
//!      graph G edges: 1=a-b 2=b-c 3=c-a 4=c-d 5=d-a\n\
//!      identify: a=b\n",
//! )?;
//! let p = doc.perspective()?;
//! let t = tutte(&p, Method::Compatible)?;
//! assert_eq!(t.coefficient((1, 0, 1)), 2);
//! // one term per set independent in M and spanning in M′
//! assert_eq!(t.evaluate(1, 1, 1)?, 13);
//! # Ok::<(), matroid_perspective::error::Error>(())
//! ```

pub mod activities;
pub mod bijection;
pub mod check;
pub mod commands;
pub mod compatible;
pub mod error;
pub mod graphic;
pub mod input;
pub mod matroid;
pub mod perspective;
pub mod polynomial;
pub mod setcore;
pub mod tutte;
