//! Exact arithmetic on monomial ideals: ordinary, symbolic and Frobenius
//! powers, colon ideals, decompositions, F-purity style criteria and
//! containment checks between symbolic and ordinary powers.

pub mod containment;
pub mod decomposition;
pub mod determinantal;
pub mod error;
pub mod format;
pub mod frobenius;
pub mod ideal;
pub mod monomial;
pub mod symbolic;

pub use containment::{
    bound, contains_symbolic_in_power, harbourne_sweep, star_configuration, star_sharpness_check,
    BoundQuery, ContainmentReport,
};
pub use decomposition::{
    irreducible_decomposition, minimal_primes, PrimeDecomposition, PrimeSupport,
};
pub use determinantal::{sharp_containment, DetContainmentReport, SizeVector};
pub use error::{Error, Result};
pub use frobenius::{fedder_check, glassbrenner_check, CriterionReport, InclusionReport};
pub use ideal::MonomialIdeal;
pub use monomial::{Monomial, RingContext};
pub use symbolic::{symbolic_membership, symbolic_power, SquarefreeIdeal};
