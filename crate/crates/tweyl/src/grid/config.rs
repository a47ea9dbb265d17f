//! Periodic edge-label configurations and their validation.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::site::{Period, Site, SiteKind};
use super::GridError;

/// An `(m, n)`-periodic assignment of positive integer labels to lattice
/// edges, satisfying the ice rule at every vertex.
///
/// Keys are canonical orbit representatives of edge midpoints; only
/// nonzero labels are stored.  Construction validates parity, the ice
/// rule, and the degree identities, so a value of this type is always a
/// valid configuration.
#[derive(Clone, PartialEq, Eq)]
pub struct LatticeConfig {
    period: Period,
    labels: BTreeMap<Site, u64>,
}

/// Summary statistics of a valid configuration.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConfigReport {
    /// Periodicity `(m, n)`.
    pub period: (u32, u32),
    /// Number of paths through a fundamental domain.
    pub path_count: u64,
    /// Distinct labeled edge orbits.
    pub edge_orbits: usize,
    /// Sum of labels over vertical-edge orbits (equals `n * path_count`).
    pub vertical_degree: u64,
    /// Sum of labels over horizontal-edge orbits (equals `m * path_count`).
    pub horizontal_degree: u64,
    /// Range of band coordinates of labeled edges, when nonempty.
    pub band: Option<(i64, i64)>,
}

impl LatticeConfig {
    /// Build from distinct edge orbits.  Labels must be positive and
    /// orbits must not repeat; the ice rule is checked at every vertex.
    pub fn new(
        period: Period,
        edges: impl IntoIterator<Item = (Site, u64)>,
    ) -> Result<Self, GridError> {
        let mut labels = BTreeMap::new();
        for (site, label) in edges {
            if label == 0 {
                return Err(GridError::InvalidLabel { site });
            }
            let rep = site.canonical(&period);
            if labels.insert(rep, label).is_some() {
                return Err(GridError::DuplicateEdge { site: rep });
            }
        }
        let cfg = LatticeConfig { period, labels };
        cfg.validate()?;
        Ok(cfg)
    }

    /// Build by superposing, summing labels on repeated orbits and
    /// dropping zeros.  Used when stacking paths.
    pub fn superpose(
        period: Period,
        edges: impl IntoIterator<Item = (Site, u64)>,
    ) -> Result<Self, GridError> {
        let mut labels: BTreeMap<Site, u64> = BTreeMap::new();
        for (site, label) in edges {
            if label == 0 {
                continue;
            }
            *labels.entry(site.canonical(&period)).or_insert(0) += label;
        }
        let cfg = LatticeConfig { period, labels };
        cfg.validate()?;
        Ok(cfg)
    }

    /// The empty configuration (no labeled edges).
    pub fn empty(period: Period) -> Self {
        LatticeConfig {
            period,
            labels: BTreeMap::new(),
        }
    }

    fn validate(&self) -> Result<(), GridError> {
        for site in self.labels.keys() {
            if !matches!(site.kind(), SiteKind::VEdge | SiteKind::HEdge) {
                return Err(GridError::ParityError { site: *site });
            }
        }
        for v in self.vertex_orbits() {
            let left = self.label(&v.shifted(-1, 0));
            let bottom = self.label(&v.shifted(0, -1));
            let right = self.label(&v.shifted(1, 0));
            let top = self.label(&v.shifted(0, 1));
            if left + bottom != right + top {
                return Err(GridError::IceRuleViolation { vertex: v });
            }
        }
        // Degree identities follow from the ice rule plus finite periodic
        // support; a failure here is a bug, not bad input.
        let (m, n) = (self.period.m() as u64, self.period.n() as u64);
        let sv = self.vertical_degree();
        let sh = self.horizontal_degree();
        let consistent = match (n, m) {
            (0, _) => sv == 0,
            (_, 0) => sh == 0,
            _ => sv % n == 0 && sh % m == 0 && sv / n == sh / m,
        };
        if !consistent {
            return Err(GridError::Internal(format!(
                "degree identity violated: vertical sum {sv}, horizontal sum {sh}, period {}",
                self.period
            )));
        }
        Ok(())
    }

    // ---- Inspection ----

    pub fn period(&self) -> &Period {
        &self.period
    }

    /// Label of the edge orbit through `site` (zero when unlabeled).
    /// The site may be any translate of the orbit.
    pub fn label(&self, site: &Site) -> u64 {
        self.labels
            .get(&site.canonical(&self.period))
            .copied()
            .unwrap_or(0)
    }

    /// Labeled edge orbits (canonical representatives) in sorted order.
    pub fn edges(&self) -> impl Iterator<Item = (&Site, u64)> {
        self.labels.iter().map(|(s, &l)| (s, l))
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn vertical_degree(&self) -> u64 {
        self.labels
            .iter()
            .filter(|(s, _)| s.kind() == SiteKind::VEdge)
            .map(|(_, &l)| l)
            .sum()
    }

    pub fn horizontal_degree(&self) -> u64 {
        self.labels
            .iter()
            .filter(|(s, _)| s.kind() == SiteKind::HEdge)
            .map(|(_, &l)| l)
            .sum()
    }

    /// Number of paths through a fundamental domain.
    pub fn path_count(&self) -> u64 {
        let (m, n) = (self.period.m() as u64, self.period.n() as u64);
        if n > 0 {
            self.vertical_degree() / n
        } else {
            self.horizontal_degree() / m
        }
    }

    /// Vertex orbits incident to at least one labeled edge, canonical and
    /// sorted.
    pub fn vertex_orbits(&self) -> BTreeSet<Site> {
        let mut out = BTreeSet::new();
        for site in self.labels.keys() {
            let (a, b) = match site.kind() {
                SiteKind::VEdge => (site.shifted(0, -1), site.shifted(0, 1)),
                SiteKind::HEdge => (site.shifted(-1, 0), site.shifted(1, 0)),
                _ => continue,
            };
            out.insert(a.canonical(&self.period));
            out.insert(b.canonical(&self.period));
        }
        out
    }

    /// Order of a vertex: the horizontal-label difference
    /// `L2(right) - L2(left)`, which by the ice rule equals the vertical
    /// difference `L1(below) - L1(above)`.  Panics on a non-vertex site.
    pub fn vertex_order(&self, v: &Site) -> i64 {
        assert_eq!(v.kind(), SiteKind::Vertex, "vertex order at {v}");
        let horiz = self.label(&v.shifted(1, 0)) as i64 - self.label(&v.shifted(-1, 0)) as i64;
        debug_assert_eq!(
            horiz,
            self.label(&v.shifted(0, -1)) as i64 - self.label(&v.shifted(0, 1)) as i64,
            "ice rule broken at {v}"
        );
        horiz
    }

    /// Vertex orbits with nonzero order, with their orders, sorted by
    /// site.
    pub fn corners(&self) -> Vec<(Site, i64)> {
        self.vertex_orbits()
            .into_iter()
            .filter_map(|v| {
                let o = self.vertex_order(&v);
                (o != 0).then_some((v, o))
            })
            .collect()
    }

    /// Band coordinate range of labeled edges.
    pub fn band_range(&self) -> Option<(i64, i64)> {
        let mut it = self.labels.keys().map(|s| s.band(&self.period));
        let first = it.next()?;
        let (mut lo, mut hi) = (first, first);
        for b in it {
            lo = lo.min(b);
            hi = hi.max(b);
        }
        Some((lo, hi))
    }

    pub fn report(&self) -> ConfigReport {
        ConfigReport {
            period: (self.period.m(), self.period.n()),
            path_count: self.path_count(),
            edge_orbits: self.labels.len(),
            vertical_degree: self.vertical_degree(),
            horizontal_degree: self.horizontal_degree(),
            band: self.band_range(),
        }
    }

    // ---- Symmetries ----

    /// Shift the support by `(dx, dy)` face units.
    pub fn translated(&self, dx: i64, dy: i64) -> LatticeConfig {
        let labels = self
            .labels
            .iter()
            .map(|(s, &l)| (s.shifted(2 * dx, 2 * dy).canonical(&self.period), l))
            .collect();
        LatticeConfig {
            period: self.period,
            labels,
        }
    }

    /// Reflect through the diagonal, swapping the two edge families and
    /// the two period components.
    pub fn transposed(&self) -> LatticeConfig {
        let period = self.period.transposed();
        let labels = self
            .labels
            .iter()
            .map(|(s, &l)| (Site::new(s.y, s.x).canonical(&period), l))
            .collect();
        LatticeConfig { period, labels }
    }
}

impl fmt::Debug for LatticeConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LatticeConfig{} ", self.period)?;
        f.debug_map().entries(self.labels.iter()).finish()
    }
}

// ---- File format ----

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ConfigFile {
    period: (u32, u32),
    edges: Vec<EdgeEntry>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct EdgeEntry {
    pos: Site,
    label: u64,
}

impl Serialize for LatticeConfig {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        ConfigFile {
            period: (self.period.m(), self.period.n()),
            edges: self
                .labels
                .iter()
                .map(|(&pos, &label)| EdgeEntry { pos, label })
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for LatticeConfig {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let file = ConfigFile::deserialize(deserializer)?;
        let period = Period::new(file.period.0, file.period.1).map_err(D::Error::custom)?;
        LatticeConfig::new(period, file.edges.into_iter().map(|e| (e.pos, e.label)))
            .map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Single path of periodicity (2,1): up, right, right.
    pub(crate) fn single_21() -> LatticeConfig {
        let p = Period::new(2, 1).unwrap();
        LatticeConfig::new(
            p,
            [
                (Site::new(-1, 0), 1),
                (Site::new(0, 1), 1),
                (Site::new(2, 1), 1),
            ],
        )
        .unwrap()
    }

    #[test]
    fn valid_single_path() {
        let cfg = single_21();
        let r = cfg.report();
        assert_eq!(r.path_count, 1);
        assert_eq!(r.vertical_degree, 1);
        assert_eq!(r.horizontal_degree, 2);
        assert_eq!(r.edge_orbits, 3);
        assert_eq!(cfg.label(&Site::new(-1, 0)), 1);
        // Any translate of the orbit resolves to the same label.
        assert_eq!(cfg.label(&Site::new(3, 2)), 1);
        assert_eq!(cfg.label(&Site::new(1, 0)), 0);
    }

    #[test]
    fn ice_rule_rejection() {
        let p = Period::new(2, 1).unwrap();
        let err = LatticeConfig::new(p, [(Site::new(-1, 0), 1)]).unwrap_err();
        assert!(matches!(err, GridError::IceRuleViolation { .. }));
    }

    #[test]
    fn parity_label_and_duplicate_rejection() {
        let p = Period::new(2, 1).unwrap();
        assert!(matches!(
            LatticeConfig::new(p, [(Site::new(0, 0), 1)]),
            Err(GridError::ParityError { .. })
        ));
        assert!(matches!(
            LatticeConfig::new(p, [(Site::new(-1, 0), 0)]),
            Err(GridError::InvalidLabel { .. })
        ));
        // (-1, 0) and (3, 2) are the same orbit.
        assert!(matches!(
            LatticeConfig::new(p, [(Site::new(-1, 0), 1), (Site::new(3, 2), 1)]),
            Err(GridError::DuplicateEdge { .. })
        ));
    }

    #[test]
    fn corners_of_single_path() {
        let cfg = single_21();
        let corners = cfg.corners();
        let p = cfg.period();
        let plus = Site::new(-1, 1).canonical(p);
        let minus = Site::new(3, 1).canonical(p);
        assert_eq!(corners, {
            let mut v = vec![(plus, 1), (minus, -1)];
            v.sort();
            v
        });
        assert_eq!(cfg.vertex_order(&Site::new(1, 1)), 0);
    }

    #[test]
    fn superpose_doubles_labels() {
        let cfg = single_21();
        let doubled =
            LatticeConfig::superpose(*cfg.period(), cfg.edges().map(|(s, l)| (*s, 2 * l)))
                .unwrap();
        assert_eq!(doubled.path_count(), 2);
        assert_eq!(doubled.vertex_order(&Site::new(-1, 1)), 2);
    }

    #[test]
    fn translation_and_transposition_preserve_validity() {
        let cfg = single_21();
        let t = cfg.translated(3, -2);
        assert_eq!(t.path_count(), 1);
        assert_eq!(t.corners().len(), 2);
        let tr = cfg.transposed();
        assert_eq!(tr.period(), &Period::new(1, 2).unwrap());
        assert_eq!(tr.vertical_degree(), 2);
        assert_eq!(tr.horizontal_degree(), 1);
        assert_eq!(tr.transposed(), cfg);
    }

    #[test]
    fn json_round_trip_and_strictness() {
        let cfg = single_21();
        let json = serde_json::to_string(&cfg).unwrap();
        let back: LatticeConfig = serde_json::from_str(&json).unwrap();
        assert_eq!(back, cfg);

        let bad = r#"{"period":[2,1],"edges":[],"extra":0}"#;
        assert!(serde_json::from_str::<LatticeConfig>(bad).is_err());
        let bad = r#"{"period":[2,2],"edges":[]}"#;
        assert!(serde_json::from_str::<LatticeConfig>(bad).is_err());
        let bad = r#"{"period":[2,1],"edges":[{"pos":[-1,0],"label":1,"color":"red"}]}"#;
        assert!(serde_json::from_str::<LatticeConfig>(bad).is_err());
        let bad = r#"{"period":[2,1],"edges":[{"pos":[-1,0],"label":1}]}"#;
        assert!(serde_json::from_str::<LatticeConfig>(bad).is_err());
    }

    #[test]
    fn empty_configuration() {
        let cfg = LatticeConfig::empty(Period::new(3, 1).unwrap());
        assert_eq!(cfg.path_count(), 0);
        assert!(cfg.corners().is_empty());
        assert_eq!(cfg.band_range(), None);
    }
}
