//! Monotone paths: orders, crossings, and peeling configurations into
//! paths.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;

use super::config::LatticeConfig;
use super::site::{Period, Site, SiteKind};
use super::GridError;

/// One face step of a monotone path.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Step {
    /// `+e1`: one face to the right.
    Right,
    /// `+e2`: one face up.
    Up,
}

impl Step {
    /// Doubled-coordinate displacement.
    pub fn delta(&self) -> (i64, i64) {
        match self {
            Step::Right => (2, 0),
            Step::Up => (0, 2),
        }
    }
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Step::Right => "1",
            Step::Up => "2",
        })
    }
}

/// A finite monotone path on faces, given by a base face and steps.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct FacePath {
    pub base: Site,
    pub steps: Vec<Step>,
}

impl FacePath {
    pub fn new(base: Site, steps: Vec<Step>) -> Self {
        assert_eq!(base.kind(), SiteKind::Face, "face path base at {base}");
        FacePath { base, steps }
    }

    /// Faces visited, including both endpoints.
    pub fn faces(&self) -> Vec<Site> {
        let mut out = Vec::with_capacity(self.steps.len() + 1);
        let mut cur = self.base;
        out.push(cur);
        for s in &self.steps {
            let (dx, dy) = s.delta();
            cur = cur.shifted(dx, dy);
            out.push(cur);
        }
        out
    }
}

/// One period of a monotone path on edges, closing up to the glide
/// translation: from the base vertex, `m` right steps and `n` up steps
/// ending at `base + (2m, 2n)`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct PeriodicPath {
    pub base: Site,
    pub steps: Vec<Step>,
}

impl PeriodicPath {
    pub fn new(period: &Period, base: Site, steps: Vec<Step>) -> Result<Self, GridError> {
        if base.kind() != SiteKind::Vertex {
            return Err(GridError::ParityError { site: base });
        }
        let rights = steps.iter().filter(|s| **s == Step::Right).count();
        let ups = steps.len() - rights;
        if rights != period.m() as usize || ups != period.n() as usize {
            return Err(GridError::Internal(format!(
                "path step counts ({rights},{ups}) do not match period {period}"
            )));
        }
        Ok(PeriodicPath { base, steps })
    }

    /// Edge midpoints traversed in one period, in step order, as plane
    /// sites.
    pub fn edge_sites(&self) -> Vec<(Site, Step)> {
        let mut out = Vec::with_capacity(self.steps.len());
        let mut v = self.base;
        for s in &self.steps {
            let mid = match s {
                Step::Right => v.shifted(1, 0),
                Step::Up => v.shifted(0, 1),
            };
            out.push((mid, *s));
            let (dx, dy) = s.delta();
            v = v.shifted(dx, dy);
        }
        out
    }

    /// Vertices visited in one period, in order, starting at the base.
    pub fn vertices(&self) -> Vec<Site> {
        let mut out = Vec::with_capacity(self.steps.len());
        let mut v = self.base;
        for s in &self.steps {
            out.push(v);
            let (dx, dy) = s.delta();
            v = v.shifted(dx, dy);
        }
        out
    }

    /// The canonical representative among all rotations and translations
    /// of this path: minimal `(base, steps)` with the base canonicalized.
    pub fn canonicalized(&self, period: &Period) -> PeriodicPath {
        let len = self.steps.len();
        let vertices = self.vertices();
        let mut best: Option<PeriodicPath> = None;
        for r in 0..len {
            let base = vertices[r].canonical(period);
            let steps: Vec<Step> = (0..len).map(|i| self.steps[(r + i) % len]).collect();
            let cand = PeriodicPath { base, steps };
            if best.as_ref().is_none_or(|b| cand < *b) {
                best = Some(cand);
            }
        }
        best.expect("nonempty path")
    }

    /// Edge multiset of `count` copies of this path, for superposition.
    pub fn edge_multiset(&self, count: u64) -> Vec<(Site, u64)> {
        self.edge_sites()
            .into_iter()
            .map(|(s, _)| (s, count))
            .collect()
    }
}

/// Order of a monotone face path at its location: the sum of vertex
/// orders over all distinct lattice vertices lying strictly northwest of
/// the path, that is, strictly above some right step or strictly to the
/// left of some up step.  Each vertex is counted once even when it
/// witnesses both relations.
pub fn path_order(cfg: &LatticeConfig, path: &FacePath) -> i64 {
    let corners = cfg.corners();
    if corners.is_empty() || cfg.period().is_degenerate() {
        return 0;
    }
    let period = cfg.period();
    let (dm, dn) = period.step();

    // Column of vertices above each right step, row of vertices left of
    // each up step.  Monotonicity gives at most one step per column/row.
    let mut col_height: HashMap<i64, i64> = HashMap::new();
    let mut row_reach: HashMap<i64, i64> = HashMap::new();
    let mut cur = path.base;
    for s in &path.steps {
        match s {
            Step::Right => {
                let prev = col_height.insert(cur.x + 1, cur.y);
                debug_assert!(prev.is_none(), "non-monotone path");
            }
            Step::Up => {
                let prev = row_reach.insert(cur.y + 1, cur.x);
                debug_assert!(prev.is_none(), "non-monotone path");
            }
        }
        let (dx, dy) = s.delta();
        cur = cur.shifted(dx, dy);
    }

    let mut counted: HashSet<Site> = HashSet::new();
    let mut total = 0i64;
    let mut visit = |site: Site, order: i64| {
        if counted.insert(site) {
            total += order;
        }
    };
    for (corner, order) in &corners {
        for (&cx, &h) in &col_height {
            let diff = cx - corner.x;
            if diff % dm != 0 {
                continue;
            }
            let k = diff / dm;
            let lift = corner.shifted(k * dm, k * dn);
            if lift.y > h {
                visit(lift, *order);
            }
        }
        for (&ry, &reach) in &row_reach {
            let diff = ry - corner.y;
            if diff % dn != 0 {
                continue;
            }
            let k = diff / dn;
            let lift = corner.shifted(k * dm, k * dn);
            if lift.x < reach {
                visit(lift, *order);
            }
        }
    }
    total
}

/// Labels crossed by a monotone face path: the sum over right steps of
/// the vertical-edge label crossed, and over up steps of the horizontal
/// label crossed.
pub fn crossing_counts(cfg: &LatticeConfig, path: &FacePath) -> (u64, u64) {
    let mut vertical = 0;
    let mut horizontal = 0;
    let mut cur = path.base;
    for s in &path.steps {
        match s {
            Step::Right => vertical += cfg.label(&cur.shifted(1, 0)),
            Step::Up => horizontal += cfg.label(&cur.shifted(0, 1)),
        }
        let (dx, dy) = s.delta();
        cur = cur.shifted(dx, dy);
    }
    (vertical, horizontal)
}

/// Peel a configuration into periodic paths with multiplicities.
///
/// The successor rule is osculating: a path arriving at a vertex from
/// below leaves to the right when possible, and one arriving from the
/// left leaves upward when possible.  This resolves every four-valent
/// vertex into two touching corners, so the returned paths are pairwise
/// non-crossing, mutually edge-disjoint, and superpose back to the
/// configuration exactly.
pub fn decompose_paths(cfg: &LatticeConfig) -> Vec<(PeriodicPath, u64)> {
    let period = *cfg.period();
    let mut work: BTreeMap<Site, u64> = cfg.edges().map(|(s, l)| (*s, l)).collect();
    let mut result: BTreeMap<PeriodicPath, u64> = BTreeMap::new();

    let successor = |edge: &Site, work: &BTreeMap<Site, u64>| -> Result<Site, GridError> {
        let (head, prefer_right) = match edge.kind() {
            SiteKind::VEdge => (edge.shifted(0, 1), true),
            SiteKind::HEdge => (edge.shifted(1, 0), false),
            _ => unreachable!("edge sites only"),
        };
        let up = head.shifted(0, 1);
        let right = head.shifted(1, 0);
        let labeled = |s: &Site| work.get(&s.canonical(&period)).copied().unwrap_or(0) > 0;
        let order = if prefer_right { [right, up] } else { [up, right] };
        order
            .into_iter()
            .find(labeled)
            .ok_or_else(|| GridError::Internal(format!("peeling stalled leaving edge {edge}")))
    };

    while let Some((&start, _)) = work.iter().next() {
        // Walk forward until a canonical edge repeats; the walk is a
        // rho shape whose cycle is one path period.
        let mut chain: Vec<Site> = Vec::new();
        let mut seen: HashMap<Site, usize> = HashMap::new();
        let mut cur = start;
        let cycle_start = loop {
            if let Some(&i) = seen.get(&cur) {
                break i;
            }
            seen.insert(cur, chain.len());
            chain.push(cur);
            cur = successor(&cur, &work)
                .expect("ice rule guarantees a successor")
                .canonical(&period);
        };
        let cycle = &chain[cycle_start..];
        let rights = cycle
            .iter()
            .filter(|s| s.kind() == SiteKind::HEdge)
            .count();
        let ups = cycle.len() - rights;
        assert_eq!(
            (rights, ups),
            (period.m() as usize, period.n() as usize),
            "peeled cycle winds other than once"
        );

        let peel = cycle
            .iter()
            .map(|e| work[e])
            .min()
            .expect("nonempty cycle");
        for e in cycle {
            let l = work.get_mut(e).expect("cycle edge labeled");
            *l -= peel;
            if *l == 0 {
                work.remove(e);
            }
        }

        // Rebuild the path from the cycle's step kinds; the base is the
        // tail vertex of the first cycle edge.
        let first = cycle[0];
        let base = match first.kind() {
            SiteKind::VEdge => first.shifted(0, -1),
            SiteKind::HEdge => first.shifted(-1, 0),
            _ => unreachable!(),
        };
        let steps: Vec<Step> = cycle
            .iter()
            .map(|e| match e.kind() {
                SiteKind::VEdge => Step::Up,
                SiteKind::HEdge => Step::Right,
                _ => unreachable!(),
            })
            .collect();
        let path = PeriodicPath { base, steps }.canonicalized(&period);
        *result.entry(path).or_insert(0) += peel;
    }

    result.into_iter().collect()
}

/// Whether two periodic paths cross transversally: at some shared vertex
/// orbit one runs straight up through it while the other runs straight
/// right.  Touching at a corner is not a crossing.
pub fn paths_cross(a: &PeriodicPath, b: &PeriodicPath, period: &Period) -> bool {
    let profile = |p: &PeriodicPath| -> HashMap<Site, (Step, Step)> {
        let mut out = HashMap::new();
        let n = p.steps.len();
        let verts = p.vertices();
        for (i, v) in verts.iter().enumerate() {
            let incoming = p.steps[(i + n - 1) % n];
            let outgoing = p.steps[i];
            out.insert(v.canonical(period), (incoming, outgoing));
        }
        out
    };
    let pa = profile(a);
    let pb = profile(b);
    for (v, &(ain, aout)) in &pa {
        let Some(&(bin, bout)) = pb.get(v) else {
            continue;
        };
        let a_straight_up = ain == Step::Up && aout == Step::Up;
        let a_straight_right = ain == Step::Right && aout == Step::Right;
        let b_straight_up = bin == Step::Up && bout == Step::Up;
        let b_straight_right = bin == Step::Right && bout == Step::Right;
        if (a_straight_up && b_straight_right) || (a_straight_right && b_straight_up) {
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn steps(s: &str) -> Vec<Step> {
        s.chars()
            .map(|c| match c {
                '1' => Step::Right,
                '2' => Step::Up,
                _ => panic!("bad step char {c}"),
            })
            .collect()
    }

    #[test]
    fn single_path_round_trip() {
        let cfg = fixtures::single_21();
        let paths = decompose_paths(&cfg);
        assert_eq!(paths.len(), 1);
        let (path, mult) = &paths[0];
        assert_eq!(*mult, 1);
        let back = LatticeConfig::superpose(*cfg.period(), path.edge_multiset(*mult)).unwrap();
        assert_eq!(back, cfg);
    }

    #[test]
    fn doubled_path_multiplicity() {
        let cfg = fixtures::single_21();
        let doubled =
            LatticeConfig::superpose(*cfg.period(), cfg.edges().map(|(s, l)| (*s, 2 * l)))
                .unwrap();
        let paths = decompose_paths(&doubled);
        assert_eq!(paths.len(), 1);
        assert_eq!(paths[0].1, 2);
    }

    #[test]
    fn parallel_pair_round_trip() {
        let cfg = fixtures::pair_21();
        let paths = decompose_paths(&cfg);
        assert_eq!(paths.len(), 2);
        let mut acc: Vec<(Site, u64)> = Vec::new();
        for (p, c) in &paths {
            acc.extend(p.edge_multiset(*c));
            assert_eq!(*c, 1);
        }
        assert_eq!(LatticeConfig::superpose(*cfg.period(), acc).unwrap(), cfg);
        assert!(!paths_cross(&paths[0].0, &paths[1].0, cfg.period()));
    }

    #[test]
    fn order_seven_peel_is_non_crossing() {
        let cfg = fixtures::order7();
        let paths = decompose_paths(&cfg);
        let total: u64 = paths.iter().map(|(_, c)| c).sum();
        assert_eq!(total, cfg.path_count());
        let mut acc: Vec<(Site, u64)> = Vec::new();
        for (p, c) in &paths {
            acc.extend(p.edge_multiset(*c));
        }
        assert_eq!(LatticeConfig::superpose(*cfg.period(), acc).unwrap(), cfg);
        for i in 0..paths.len() {
            for j in i + 1..paths.len() {
                assert!(
                    !paths_cross(&paths[i].0, &paths[j].0, cfg.period()),
                    "paths {i} and {j} cross"
                );
            }
        }
    }

    #[test]
    fn degenerate_horizontal_configuration() {
        let p = Period::new(1, 0).unwrap();
        let cfg = LatticeConfig::new(p, [(Site::new(0, 1), 2)]).unwrap();
        let paths = decompose_paths(&cfg);
        assert_eq!(paths.len(), 1);
        assert_eq!(paths[0].1, 2);
        assert_eq!(paths[0].0.steps, steps("1"));
    }

    #[test]
    fn path_order_matches_max_of_crossings() {
        // The defining identity of orders for monotone paths, spot
        // checked on the order-seven example with assorted paths.
        let cfg = fixtures::order7();
        for (bx, by, s) in [
            (0i64, 0i64, "12"),
            (0, 0, "21"),
            (0, 0, "1122"),
            (2, 2, "21"),
            (0, 2, "112"),
            (-2, 4, "2211"),
            (4, 0, "22"),
            (0, 0, "2212121211"),
        ] {
            let path = FacePath::new(Site::new(bx, by), steps(s));
            let (v, h) = crossing_counts(&cfg, &path);
            assert_eq!(
                path_order(&cfg, &path),
                v.max(h) as i64,
                "path {s} at ({bx},{by})"
            );
        }
    }

    #[test]
    fn canonicalized_path_is_rotation_invariant() {
        let p = Period::new(2, 1).unwrap();
        let a = PeriodicPath::new(&p, Site::new(-1, -1), steps("211")).unwrap();
        let b = PeriodicPath::new(&p, Site::new(-1, 1), steps("112")).unwrap();
        // b starts one step later along the same underlying path.
        assert_eq!(a.canonicalized(&p), b.canonicalized(&p));
        // A genuinely different path differs.
        let c = PeriodicPath::new(&p, Site::new(-1, -1), steps("121")).unwrap();
        assert_ne!(a.canonicalized(&p), c.canonicalized(&p));
    }

    #[test]
    fn empty_configuration_has_no_paths() {
        let cfg = LatticeConfig::empty(Period::new(2, 1).unwrap());
        assert!(decompose_paths(&cfg).is_empty());
    }
}
