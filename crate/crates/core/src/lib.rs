//! Reversed Dickson polynomials of the first, second and higher kinds over
//! residue rings `Z_m`.
//!
//! * [`ring`]: modular arithmetic, Legendre symbols, orders and `F_{p^2}`.
//! * [`dickson`]: evaluation routes, coefficient polynomials, derivatives.
//! * [`permcheck`]: permutation, complete-permutation, fixed-point and
//!   cycle-type analysis of polynomial maps.
//! * [`classify`]: exhaustive index scans and theorem/conjecture reports.

pub mod classify;
pub mod dickson;
pub mod error;
pub mod permcheck;
pub mod ring;

pub use dickson::{CoefPoly, Kind, RdpSpec};
pub use error::{Error, Result};
pub use permcheck::{CycleType, PermMap, PermReport};
pub use ring::{QuadExt, QuadExtElem, Residue, ResidueRing};
