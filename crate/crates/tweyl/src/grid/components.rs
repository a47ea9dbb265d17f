//! Connected components of the unlabeled face graph.
//!
//! Faces are adjacent when the edge between them carries label zero.  On
//! the cylinder the resulting components classify simple weight modules:
//! finite contractible islands, finite annuli winding around the
//! cylinder, and (for a nonempty configuration) exactly two infinite
//! components above and below the band of labeled edges.
//!
//! Each band level `t = -n x + m y` (even) carries exactly one face
//! orbit, so components are computed by flood fill over band levels in a
//! window extending a safety margin beyond the labeled band.  Plane lifts
//! are tracked during the fill; revisiting an orbit through a lift offset
//! `k (2m, 2n)` certifies that the component winds around the cylinder.

use std::collections::{BTreeMap, HashMap, VecDeque};

use num_integer::Integer;
use serde::Serialize;

use super::config::LatticeConfig;
use super::site::{Period, Site};
use super::{Alpha, GridError};
use crate::qpoly::Rat;

/// How a component sits on the cylinder.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum ComponentKind {
    /// Finite and null-homotopic; hosts a one-parameter-free simple
    /// module only at twist zero.
    Contractible,
    /// Finite but winding around the cylinder (an annulus).
    FiniteIncontractible,
    /// One of the two unbounded components beyond the labeled band.
    InfiniteIncontractible,
}

/// Number of faces in a component.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum Area {
    Finite(u64),
    Infinite,
}

/// Evidence that a component winds: flooding reached `at + delta` while
/// `at` was already assigned, with `delta` a nonzero multiple of the
/// period translation.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct WindingWitness {
    pub at: Site,
    pub delta: (i64, i64),
}

/// One face component.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct ComponentReport {
    pub kind: ComponentKind,
    /// Canonical face orbits, sorted by band level.  For an infinite
    /// component this is the in-window sample.
    pub faces: Vec<Site>,
    pub area: Area,
    /// Face weights under the supplied step parameters, ascending.
    /// Empty for infinite components.
    pub support: Vec<Rat>,
    pub witness: Option<WindingWitness>,
}

/// Component decomposition of a configuration, with enough indexing to
/// answer membership queries for any band level.
#[derive(Clone, Debug)]
pub struct Components {
    period: Period,
    /// Window of band levels examined (inclusive); empty config uses a
    /// minimal window.
    window: (i64, i64),
    level_to_comp: BTreeMap<i64, usize>,
    top_id: Option<usize>,
    bottom_id: Option<usize>,
    pub reports: Vec<ComponentReport>,
}

impl Components {
    /// Component id of the face orbit at band level `t` (levels are the
    /// even integers).  Levels beyond the window belong to the infinite
    /// components.
    pub fn component_of_level(&self, t: i64) -> Option<usize> {
        if t.rem_euclid(2) != 0 {
            return None;
        }
        if let Some(&id) = self.level_to_comp.get(&t) {
            return Some(id);
        }
        if t > self.window.1 {
            self.top_id
        } else {
            self.bottom_id
        }
    }

    /// Component id containing the face `site`.
    pub fn component_of_face(&self, site: &Site) -> Option<usize> {
        self.component_of_level(site.band(&self.period))
    }

    pub fn period(&self) -> &Period {
        &self.period
    }
}

/// Face orbit representative at band level `t` (which must be even).
pub(crate) fn face_at_level(period: &Period, t: i64) -> Site {
    debug_assert_eq!(t.rem_euclid(2), 0, "face levels are even");
    let h = t / 2;
    let m = period.m() as i64;
    let n = period.n() as i64;
    let eg = m.extended_gcd(&n);
    debug_assert_eq!(eg.gcd, 1);
    // m*x + n*y = 1 gives -n*(-y) + m*x = 1.
    Site::new(-2 * eg.y * h, 2 * eg.x * h).canonical(period)
}

/// Decompose the face graph into components.  The step parameters are
/// used only to attach weight supports and must be compatible with the
/// period.
pub fn components(cfg: &LatticeConfig, alpha: &Alpha) -> Result<Components, GridError> {
    let period = *cfg.period();
    alpha.require_compatible(&period)?;

    let Some((s0, s1)) = cfg.band_range() else {
        return Ok(empty_components(&period));
    };
    let step_span = 2 * (period.m() as i64).max(period.n() as i64);
    let margin = step_span + 6;
    let window = (even_down(s0 - margin), even_up(s1 + margin));

    let mut level_to_comp: BTreeMap<i64, usize> = BTreeMap::new();
    let mut raw: Vec<RawComponent> = Vec::new();

    let mut t = window.0;
    while t <= window.1 {
        if !level_to_comp.contains_key(&t) {
            let id = raw.len();
            raw.push(flood(cfg, &period, t, id, window, &mut level_to_comp));
        }
        t += 2;
    }

    // Sort by lowest band level for a deterministic order, then finish
    // the reports.
    let mut order: Vec<usize> = (0..raw.len()).collect();
    order.sort_by_key(|&i| raw[i].levels[0]);
    let mut remap = vec![0usize; raw.len()];
    for (new_id, &old_id) in order.iter().enumerate() {
        remap[old_id] = new_id;
    }
    for id in level_to_comp.values_mut() {
        *id = remap[*id];
    }
    let mut sorted: Vec<RawComponent> = Vec::with_capacity(raw.len());
    for &old_id in &order {
        sorted.push(raw[old_id].clone());
    }

    let mut top_id = None;
    let mut bottom_id = None;
    let mut reports = Vec::with_capacity(sorted.len());
    for (id, rc) in sorted.iter().enumerate() {
        let infinite = rc.touches_top || rc.touches_bottom;
        if rc.touches_top {
            assert!(top_id.is_none(), "two components touch the top window edge");
            top_id = Some(id);
        }
        if rc.touches_bottom {
            assert!(
                bottom_id.is_none(),
                "two components touch the bottom window edge"
            );
            bottom_id = Some(id);
        }
        assert!(
            !(rc.touches_top && rc.touches_bottom),
            "a component spans the whole window"
        );
        let kind = if infinite {
            assert!(
                rc.witness.is_some(),
                "infinite component without a winding witness"
            );
            ComponentKind::InfiniteIncontractible
        } else if rc.witness.is_some() {
            ComponentKind::FiniteIncontractible
        } else {
            ComponentKind::Contractible
        };
        let faces: Vec<Site> = rc
            .levels
            .iter()
            .map(|&t| face_at_level(&period, t))
            .collect();
        let mut support: Vec<Rat> = if infinite {
            Vec::new()
        } else {
            faces.iter().map(|f| alpha.value_of(f)).collect()
        };
        support.sort();
        reports.push(ComponentReport {
            kind,
            area: if infinite {
                Area::Infinite
            } else {
                Area::Finite(faces.len() as u64)
            },
            faces,
            support,
            witness: rc.witness.clone(),
        });
    }
    assert_eq!(
        (top_id.is_some(), bottom_id.is_some()),
        (true, true),
        "nonempty configuration must have both infinite components"
    );

    Ok(Components {
        period,
        window,
        level_to_comp,
        top_id,
        bottom_id,
        reports,
    })
}

#[derive(Clone)]
struct RawComponent {
    levels: Vec<i64>,
    touches_top: bool,
    touches_bottom: bool,
    witness: Option<WindingWitness>,
}

fn flood(
    cfg: &LatticeConfig,
    period: &Period,
    start_level: i64,
    id: usize,
    window: (i64, i64),
    level_to_comp: &mut BTreeMap<i64, usize>,
) -> RawComponent {
    let (dm, dn) = period.step();
    let mut rc = RawComponent {
        levels: Vec::new(),
        touches_top: false,
        touches_bottom: false,
        witness: None,
    };
    // Assigned plane lift per visited band level of this component.
    let mut lift: HashMap<i64, Site> = HashMap::new();
    let start = face_at_level(period, start_level);
    let mut queue = VecDeque::new();
    level_to_comp.insert(start_level, id);
    lift.insert(start_level, start);
    rc.levels.push(start_level);
    queue.push_back(start);

    while let Some(f) = queue.pop_front() {
        for (ex, ey, fx, fy) in [(1, 0, 2, 0), (-1, 0, -2, 0), (0, 1, 0, 2), (0, -1, 0, -2)] {
            if cfg.label(&f.shifted(ex, ey)) != 0 {
                continue;
            }
            let g = f.shifted(fx, fy);
            let t = g.band(period);
            if t < window.0 {
                rc.touches_bottom = true;
                continue;
            }
            if t > window.1 {
                rc.touches_top = true;
                continue;
            }
            match lift.get(&t) {
                Some(assigned) => {
                    debug_assert_eq!(level_to_comp.get(&t), Some(&id));
                    let delta = (g.x - assigned.x, g.y - assigned.y);
                    if delta != (0, 0) && rc.witness.is_none() {
                        let k = if dm != 0 { delta.0 / dm } else { delta.1 / dn };
                        assert_eq!(
                            (k * dm, k * dn),
                            delta,
                            "lift mismatch is not a period multiple"
                        );
                        assert_ne!(k, 0);
                        rc.witness = Some(WindingWitness {
                            at: assigned.canonical(period),
                            delta,
                        });
                    }
                }
                None => {
                    level_to_comp.insert(t, id);
                    lift.insert(t, g);
                    rc.levels.push(t);
                    queue.push_back(g);
                }
            }
        }
    }
    rc.levels.sort_unstable();
    rc
}

fn empty_components(period: &Period) -> Components {
    let (dm, dn) = period.step();
    let face = face_at_level(period, 0);
    let report = ComponentReport {
        kind: ComponentKind::InfiniteIncontractible,
        faces: vec![face],
        area: Area::Infinite,
        support: Vec::new(),
        witness: Some(WindingWitness {
            at: face,
            delta: (dm, dn),
        }),
    };
    Components {
        period: *period,
        window: (0, -2),
        level_to_comp: BTreeMap::new(),
        top_id: Some(0),
        bottom_id: Some(0),
        reports: vec![report],
    }
}

fn even_down(v: i64) -> i64 {
    if v.rem_euclid(2) == 0 {
        v
    } else {
        v - 1
    }
}

fn even_up(v: i64) -> i64 {
    if v.rem_euclid(2) == 0 {
        v
    } else {
        v + 1
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn r(s: &str) -> Rat {
        s.parse().unwrap()
    }

    fn analyze(cfg: &LatticeConfig) -> Components {
        let alpha = Alpha::default_for(cfg.period());
        components(cfg, &alpha).unwrap()
    }

    #[test]
    fn pair_21_encloses_two_faces() {
        let comps = analyze(&fixtures::pair_21());
        let finite: Vec<&ComponentReport> = comps
            .reports
            .iter()
            .filter(|c| c.area != Area::Infinite)
            .collect();
        assert_eq!(finite.len(), 1);
        let c = finite[0];
        assert_eq!(c.kind, ComponentKind::Contractible);
        assert_eq!(c.area, Area::Finite(2));
        assert_eq!(c.support, vec![r("1"), r("2")]);
        assert!(c.witness.is_none());
        let infinite = comps.reports.len() - finite.len();
        assert_eq!(infinite, 2);
    }

    #[test]
    fn single_path_has_only_infinite_components() {
        let comps = analyze(&fixtures::single_21());
        assert_eq!(comps.reports.len(), 2);
        for c in &comps.reports {
            assert_eq!(c.kind, ComponentKind::InfiniteIncontractible);
            assert_eq!(c.area, Area::Infinite);
            assert!(c.support.is_empty());
            assert!(c.witness.is_some());
        }
    }

    #[test]
    fn annulus_is_finite_incontractible() {
        for d in 1..=3u32 {
            let comps = analyze(&fixtures::annulus_11(d));
            let finite: Vec<&ComponentReport> = comps
                .reports
                .iter()
                .filter(|c| c.area != Area::Infinite)
                .collect();
            assert_eq!(finite.len(), 1, "d = {d}");
            let c = finite[0];
            assert_eq!(c.kind, ComponentKind::FiniteIncontractible);
            assert_eq!(c.area, Area::Finite(d as u64));
            let expected: Vec<Rat> = (1..=d as i64).map(Rat::from_int).collect();
            assert_eq!(c.support, expected);
            let w = c.witness.as_ref().unwrap();
            assert_eq!(w.delta.0.abs(), 2);
            assert_eq!(w.delta, (w.delta.0, w.delta.0));
        }
    }

    #[test]
    fn empty_configuration_is_one_free_cylinder() {
        let cfg = LatticeConfig::empty(Period::new(2, 1).unwrap());
        let comps = analyze(&cfg);
        assert_eq!(comps.reports.len(), 1);
        assert_eq!(comps.reports[0].kind, ComponentKind::InfiniteIncontractible);
        assert_eq!(comps.component_of_level(0), Some(0));
        assert_eq!(comps.component_of_level(1_000_000), Some(0));
    }

    #[test]
    fn membership_queries_cover_all_levels() {
        let comps = analyze(&fixtures::pair_21());
        // Far levels belong to the two infinite components.
        let top = comps.component_of_level(1_000_000).unwrap();
        let bottom = comps.component_of_level(-1_000_000).unwrap();
        assert_ne!(top, bottom);
        assert_eq!(comps.reports[top].kind, ComponentKind::InfiniteIncontractible);
        // Odd levels are not face levels.
        assert_eq!(comps.component_of_level(1), None);
        // The enclosed faces sit in the finite component.
        let finite_id = comps
            .reports
            .iter()
            .position(|c| c.area != Area::Infinite)
            .unwrap();
        for f in &comps.reports[finite_id].faces {
            assert_eq!(comps.component_of_face(f), Some(finite_id));
        }
    }

    #[test]
    fn degenerate_period_rows_wind() {
        // Two horizontal lines with a two-row gap on a (1,0) cylinder.
        let p = Period::new(1, 0).unwrap();
        let cfg = LatticeConfig::new(p, [(Site::new(0, 1), 1), (Site::new(0, 7), 1)]).unwrap();
        let comps = analyze(&cfg);
        let finite: Vec<&ComponentReport> = comps
            .reports
            .iter()
            .filter(|c| c.area != Area::Infinite)
            .collect();
        assert_eq!(finite.len(), 1);
        assert_eq!(finite[0].kind, ComponentKind::FiniteIncontractible);
        assert_eq!(finite[0].area, Area::Finite(3));
        assert_eq!(finite[0].support, vec![r("1"), r("2"), r("3")]);
    }

    #[test]
    fn triple_53_component_sizes() {
        let comps = analyze(&fixtures::triple_53());
        let mut finite_areas: Vec<u64> = comps
            .reports
            .iter()
            .filter_map(|c| match c.area {
                Area::Finite(a) => Some(a),
                Area::Infinite => None,
            })
            .collect();
        finite_areas.sort_unstable();
        assert_eq!(finite_areas, vec![1, 2, 10]);
    }
}
