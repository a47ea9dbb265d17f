//! Worked example configurations used by the test suite and the
//! `verify-examples` subcommand.
//!
//! Each builder returns a validated configuration (or path family) in
//! doubled coordinates.  The expected invariants (orders, component
//! dimensions, polynomial degrees, center formulas) live next to the
//! checks that consume them.

use crate::grid::{LatticeConfig, Period, PeriodicPath, Site, Step};

fn steps(code: &str) -> Vec<Step> {
    code.chars()
        .map(|c| match c {
            '1' => Step::Right,
            '2' => Step::Up,
            _ => panic!("bad step character {c:?}"),
        })
        .collect()
}

fn path(period: &Period, x: i64, y: i64, code: &str) -> PeriodicPath {
    PeriodicPath::new(period, Site::new(x, y), steps(code)).expect("fixture path")
}

fn superpose(period: Period, paths: &[PeriodicPath]) -> LatticeConfig {
    let mut edges = Vec::new();
    for p in paths {
        edges.extend(p.edge_multiset(1));
    }
    LatticeConfig::superpose(period, edges).expect("fixture configuration")
}

/// Single path of periodicity `(2,1)`: up, right, right.  The smallest
/// example with a nontrivial exchange relation; its polynomial pair is
/// `p1 = u - 1/2`, `p2 = (u - 1) u` under the default step parameters.
pub fn single_21() -> LatticeConfig {
    let p = Period::new(2, 1).unwrap();
    superpose(p, &[path(&p, -1, -1, "211")])
}

/// Two parallel copies of the `(2,1)` path one face apart, enclosing a
/// finite two-face component with weights `{2, 1}`.
pub fn pair_21() -> LatticeConfig {
    let p = Period::new(2, 1).unwrap();
    superpose(p, &[path(&p, -1, -1, "211"), path(&p, -1, 1, "211")])
}

/// Periodicity `(1,1)` configuration with vertex orders up to three and
/// a path of order seven; labels reach three.
pub fn order7() -> LatticeConfig {
    let p = Period::new(1, 1).unwrap();
    LatticeConfig::new(
        p,
        [
            // Vertical edges.
            (Site::new(1, 6), 3),
            (Site::new(5, 2), 3),
            (Site::new(1, 4), 2),
            (Site::new(3, 2), 2),
            (Site::new(3, 4), 1),
            // Horizontal edges.
            (Site::new(0, 5), 3),
            (Site::new(4, 1), 3),
            (Site::new(2, 5), 2),
            (Site::new(4, 3), 2),
            (Site::new(2, 3), 1),
        ],
    )
    .expect("order-seven fixture")
}

/// Three-path `(5,3)` configuration whose simple weight modules have
/// dimensions 1, 2, and 10.
pub fn triple_53() -> LatticeConfig {
    let p = Period::new(5, 3).unwrap();
    superpose(p, &triple_53_paths())
}

/// The drawn path family for [`triple_53`].
pub fn triple_53_paths() -> Vec<PeriodicPath> {
    let p = Period::new(5, 3).unwrap();
    vec![
        path(&p, -1, -1, "21211211"),
        path(&p, -1, -1, "22121111"),
        path(&p, -1, 5, "21112211"),
    ]
}

/// Three-path `(5,3)` configuration decorated with ten nonzero vertex
/// orders in its drawing window.
pub fn ordered_53() -> LatticeConfig {
    let p = Period::new(5, 3).unwrap();
    superpose(p, &ordered_53_paths())
}

/// The drawn path family for [`ordered_53`].
pub fn ordered_53_paths() -> Vec<PeriodicPath> {
    let p = Period::new(5, 3).unwrap();
    vec![
        path(&p, -3, -1, "12122111"),
        path(&p, -3, -1, "12212111"),
        path(&p, -3, 5, "12111221"),
    ]
}

/// Expected nonzero vertex orders of [`ordered_53`], keyed by doubled
/// vertex position in the drawing window.
pub fn ordered_53_orders() -> Vec<(Site, i64)> {
    [
        ((0, 0), -2),
        ((0, 1), 1),
        ((0, 2), 1),
        ((0, 3), -1),
        ((0, 4), 1),
        ((1, 1), -1),
        ((1, 2), -1),
        ((1, 3), 2),
        ((3, 4), -1),
        ((3, 6), 1),
    ]
    .into_iter()
    .map(|((x, y), o)| (Site::new(2 * x - 1, 2 * y - 1), o))
    .collect()
}

/// Vertex-disjoint three-path `(4,3)` configuration satisfying every
/// five-vertex condition.
pub fn disjoint_43() -> LatticeConfig {
    let p = Period::new(4, 3).unwrap();
    superpose(p, &disjoint_43_paths())
}

/// The drawn path family for [`disjoint_43`].
pub fn disjoint_43_paths() -> Vec<PeriodicPath> {
    let p = Period::new(4, 3).unwrap();
    vec![
        path(&p, -1, -1, "1112122"),
        path(&p, -1, 1, "2112211"),
        path(&p, -1, 5, "2121121"),
    ]
}

/// Two osculating `(1,1)` staircase paths; polynomial pair
/// `p1 = p2 = (u - 1/2)(u + 1/2)` under the default step parameters.
pub fn touching_11() -> LatticeConfig {
    let p = Period::new(1, 1).unwrap();
    superpose(p, &[path(&p, -1, -1, "21"), path(&p, 1, -1, "21")])
}

/// Two `(1,1)` staircase paths `d` faces apart, enclosing an annular
/// component of `d` faces; polynomial pair
/// `p1 = p2 = (u - 1/2)(u - 1/2 - d)`.
pub fn annulus_11(d: u32) -> LatticeConfig {
    assert!(d >= 1, "separation must be positive");
    let p = Period::new(1, 1).unwrap();
    superpose(
        p,
        &[path(&p, -1, -1, "21"), path(&p, -1, 2 * d as i64 - 1, "21")],
    )
}
