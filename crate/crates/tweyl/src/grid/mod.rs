//! The twisted-cylinder lattice: configurations, paths, and components.

mod components;
mod config;
mod fivevertex;
mod paths;
mod sample;
mod site;

pub use components::{components, Area, ComponentKind, ComponentReport, WindingWitness};
pub use config::{ConfigReport, LatticeConfig};
pub use fivevertex::{is_five_vertex, FiveVertexBundle};
pub use paths::{
    crossing_counts, decompose_paths, path_order, FacePath, PeriodicPath, Step,
};
pub use sample::sample_config;
pub use site::{Period, Site, SiteKind};

use crate::qpoly::Rat;
use serde::{Deserialize, Serialize};

/// Errors from lattice-level operations.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GridError {
    /// Period components must be coprime and not both zero.
    #[error("invalid period ({m},{n}): components must be coprime and not both zero")]
    BadPeriod { m: u32, n: u32 },
    /// A labeled site is not an edge midpoint.
    #[error("site {site} is not an edge midpoint")]
    ParityError { site: Site },
    /// In-degree and out-degree differ at a vertex.
    #[error("ice rule violated at vertex {vertex}")]
    IceRuleViolation { vertex: Site },
    /// Labels must be positive.
    #[error("label at {site} must be positive")]
    InvalidLabel { site: Site },
    /// The same edge orbit was listed twice.
    #[error("edge orbit {site} listed more than once")]
    DuplicateEdge { site: Site },
    /// The step parameters do not annihilate the period direction.
    #[error("step parameters do not satisfy m*a1 + n*a2 = 0 for period ({m},{n})")]
    AlphaPeriodMismatch { m: u32, n: u32 },
    /// Internal invariant failure.
    #[error("internal invariant failure: {0}")]
    Internal(String),
}

/// Step parameters `(a1, a2)` attached to the two lattice directions.
/// The weight of a face at doubled position `(x, y)` is
/// `(x/2) a1 + (y/2) a2`; for an `(m, n)`-periodic configuration the
/// parameters must satisfy `m a1 + n a2 = 0` so that weights descend to
/// orbits.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Alpha {
    pub a1: Rat,
    pub a2: Rat,
}

impl Alpha {
    pub fn new(a1: Rat, a2: Rat) -> Self {
        Alpha { a1, a2 }
    }

    /// The default choice `(-n, m)` for a given period.
    pub fn default_for(period: &Period) -> Self {
        Alpha {
            a1: -Rat::from_int(period.n() as i64),
            a2: Rat::from_int(period.m() as i64),
        }
    }

    /// Check `m a1 + n a2 = 0` with `(a1, a2) != (0, 0)`.
    pub fn compatible_with(&self, period: &Period) -> bool {
        if self.a1.is_zero() && self.a2.is_zero() {
            return false;
        }
        let m = Rat::from_int(period.m() as i64);
        let n = Rat::from_int(period.n() as i64);
        (&m * &self.a1 + &n * &self.a2).is_zero()
    }

    pub fn require_compatible(&self, period: &Period) -> Result<(), GridError> {
        if self.compatible_with(period) {
            Ok(())
        } else {
            Err(GridError::AlphaPeriodMismatch {
                m: period.m(),
                n: period.n(),
            })
        }
    }

    /// Positive generator of the value lattice `Z a1 + Z a2`.
    pub fn gamma(&self) -> Rat {
        Rat::gcd(&self.a1, &self.a2)
    }

    /// Value of a doubled-coordinate site: `(x a1 + y a2) / 2`.
    pub fn value_of(&self, site: &Site) -> Rat {
        (Rat::from_int(site.x) * &self.a1 + Rat::from_int(site.y) * &self.a2)
            / Rat::from_int(2)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_alpha_is_compatible() {
        for (m, n) in [(2u32, 1u32), (1, 0), (0, 1), (5, 3)] {
            let p = Period::new(m, n).unwrap();
            let a = Alpha::default_for(&p);
            assert!(a.compatible_with(&p));
        }
    }

    #[test]
    fn compatibility_rejects_wrong_direction() {
        let p = Period::new(2, 1).unwrap();
        let a = Alpha::new("1".parse().unwrap(), "1".parse().unwrap());
        assert!(!a.compatible_with(&p));
        let zero = Alpha::new(Rat::zero(), Rat::zero());
        assert!(!zero.compatible_with(&p));
        // Any scalar multiple of the default works.
        let scaled = Alpha::new("-1/2".parse().unwrap(), "1".parse().unwrap());
        assert!(scaled.compatible_with(&p));
    }

    #[test]
    fn values_and_gamma() {
        let p = Period::new(2, 1).unwrap();
        let a = Alpha::default_for(&p);
        assert_eq!(a.gamma(), Rat::one());
        // Face (0, 2): one vertical face step has value a2 = 2.
        assert_eq!(a.value_of(&Site::new(0, 2)), Rat::from_int(2));
        // The period translation has value 0.
        assert_eq!(a.value_of(&Site::new(4, 2)), a.value_of(&Site::new(0, 0)));
        let half = Alpha::new("-1/2".parse().unwrap(), "1".parse().unwrap());
        assert_eq!(half.gamma(), "1/2".parse().unwrap());
    }
}
