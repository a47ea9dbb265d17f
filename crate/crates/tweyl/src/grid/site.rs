//! Doubled integer coordinates on the twisted cylinder.
//!
//! The lattice is held in doubled coordinates so that faces, vertices,
//! and the two edge families all live on one integer grid:
//!
//! * faces at (even, even),
//! * vertices at (odd, odd),
//! * vertical-edge midpoints at (odd, even),
//! * horizontal-edge midpoints at (even, odd).
//!
//! A step of one face unit is `+2` in a doubled coordinate.  The cylinder
//! is the quotient by the glide translation `(2m, 2n)`; a `Site` is a
//! plane position, and orbit representatives are normalized through
//! [`Site::canonical`].

use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use super::GridError;

/// Periodicity `(m, n)` of configurations on the cylinder: `m` horizontal
/// and `n` vertical face steps per period, coprime, not both zero.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Period {
    m: u32,
    n: u32,
}

impl Period {
    pub fn new(m: u32, n: u32) -> Result<Self, GridError> {
        if (m == 0 && n == 0) || m.gcd(&n) != 1 {
            return Err(GridError::BadPeriod { m, n });
        }
        Ok(Period { m, n })
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// Doubled translation vector `(2m, 2n)`.
    pub fn step(&self) -> (i64, i64) {
        (2 * self.m as i64, 2 * self.n as i64)
    }

    /// True when one of the directions is absent (period `(1,0)` or `(0,1)`).
    pub fn is_degenerate(&self) -> bool {
        self.m == 0 || self.n == 0
    }

    pub fn transposed(&self) -> Period {
        Period {
            m: self.n,
            n: self.m,
        }
    }

    /// `m + n`, the number of face steps in one path period.
    pub fn length(&self) -> usize {
        (self.m + self.n) as usize
    }

    /// `2(m^2 + n^2)`, the width of the canonical strip window.
    fn strip_span(&self) -> i64 {
        2 * (self.m as i64 * self.m as i64 + self.n as i64 * self.n as i64)
    }
}

impl fmt::Display for Period {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.m, self.n)
    }
}

/// What a doubled-coordinate point is.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum SiteKind {
    Face,
    Vertex,
    /// Midpoint of a vertical edge (the first edge family).
    VEdge,
    /// Midpoint of a horizontal edge (the second edge family).
    HEdge,
}

/// A point of the doubled lattice in the plane.  Serializes as `[x, y]`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "(i64, i64)", into = "(i64, i64)")]
pub struct Site {
    pub x: i64,
    pub y: i64,
}

impl From<(i64, i64)> for Site {
    fn from((x, y): (i64, i64)) -> Site {
        Site { x, y }
    }
}

impl From<Site> for (i64, i64) {
    fn from(s: Site) -> (i64, i64) {
        (s.x, s.y)
    }
}

impl Site {
    pub fn new(x: i64, y: i64) -> Site {
        Site { x, y }
    }

    pub fn kind(&self) -> SiteKind {
        match (self.x.rem_euclid(2), self.y.rem_euclid(2)) {
            (0, 0) => SiteKind::Face,
            (1, 1) => SiteKind::Vertex,
            (1, 0) => SiteKind::VEdge,
            (0, 1) => SiteKind::HEdge,
            _ => unreachable!(),
        }
    }

    pub fn shifted(&self, dx: i64, dy: i64) -> Site {
        Site {
            x: self.x + dx,
            y: self.y + dy,
        }
    }

    /// Band coordinate `-n*x + m*y`, constant along the period direction.
    pub fn band(&self, p: &Period) -> i64 {
        -(p.n as i64) * self.x + p.m as i64 * self.y
    }

    /// Strip coordinate `m*x + n*y`, advancing by `2(m^2+n^2)` per period.
    pub fn strip(&self, p: &Period) -> i64 {
        p.m as i64 * self.x + p.n as i64 * self.y
    }

    /// Canonical orbit representative: the translate whose strip
    /// coordinate lies in `[0, 2(m^2+n^2))`.
    pub fn canonical(&self, p: &Period) -> Site {
        let span = p.strip_span();
        let k = self.strip(p).div_euclid(span);
        let (dm, dn) = p.step();
        Site {
            x: self.x - k * dm,
            y: self.y - k * dn,
        }
    }

    /// True if the two sites lie in the same orbit.
    pub fn same_orbit(&self, other: &Site, p: &Period) -> bool {
        self.canonical(p) == other.canonical(p)
    }
}

impl fmt::Display for Site {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

impl fmt::Debug for Site {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn period_validation() {
        assert!(Period::new(2, 1).is_ok());
        assert!(Period::new(1, 0).is_ok());
        assert!(Period::new(0, 1).is_ok());
        assert!(Period::new(0, 0).is_err());
        assert!(Period::new(2, 4).is_err());
        assert!(Period::new(3, 3).is_err());
    }

    #[test]
    fn site_kinds_by_parity() {
        assert_eq!(Site::new(0, 0).kind(), SiteKind::Face);
        assert_eq!(Site::new(-2, 4).kind(), SiteKind::Face);
        assert_eq!(Site::new(1, -1).kind(), SiteKind::Vertex);
        assert_eq!(Site::new(1, 0).kind(), SiteKind::VEdge);
        assert_eq!(Site::new(0, -3).kind(), SiteKind::HEdge);
    }

    #[test]
    fn canonical_is_idempotent_and_orbit_invariant() {
        let p = Period::new(2, 1).unwrap();
        let (dm, dn) = p.step();
        for site in [
            Site::new(0, 0),
            Site::new(-1, 0),
            Site::new(5, -3),
            Site::new(100, 99),
        ] {
            let c = site.canonical(&p);
            assert_eq!(c.canonical(&p), c);
            let span = 2 * (p.m() as i64 * p.m() as i64 + p.n() as i64 * p.n() as i64);
            assert!((0..span).contains(&c.strip(&p)));
            for k in [-3i64, -1, 1, 7] {
                let moved = site.shifted(k * dm, k * dn);
                assert_eq!(moved.canonical(&p), c);
                assert!(moved.same_orbit(&site, &p));
            }
            assert_eq!(site.band(&p), c.band(&p));
            assert_eq!(site.kind(), c.kind());
        }
    }

    #[test]
    fn band_separates_orbits_transversally() {
        let p = Period::new(3, 2).unwrap();
        let s = Site::new(0, 0);
        assert_eq!(s.band(&p), 0);
        assert_eq!(s.shifted(0, 2).band(&p), 6);
        assert_eq!(s.shifted(2, 0).band(&p), -4);
        let (dm, dn) = p.step();
        assert_eq!(s.shifted(dm, dn).band(&p), 0);
    }

    #[test]
    fn degenerate_period_canonicalization() {
        let p = Period::new(1, 0).unwrap();
        let c = Site::new(7, 3).canonical(&p);
        assert_eq!(c, Site::new(1, 3));
        let c = Site::new(-4, 0).canonical(&p);
        assert_eq!(c, Site::new(0, 0));
    }

    #[test]
    fn site_serde_is_a_pair() {
        let s = Site::new(-1, 2);
        assert_eq!(serde_json::to_string(&s).unwrap(), "[-1,2]");
        assert_eq!(serde_json::from_str::<Site>("[-1,2]").unwrap(), s);
    }
}
