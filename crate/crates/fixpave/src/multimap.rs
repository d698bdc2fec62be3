//! Multivalued maps and the candidate filter.
//!
//! A multivalued map assigns each point a (possibly empty) set of values; a
//! fixed point is an `x` with `x ∈ F(x)`. The filter `(∪_{y∈Y} F(y)) ∩ Y`
//! drives every pruning decision: when it is provably empty, `Y` contains no
//! fixed point. The module provides the filter in two forms — exact on
//! finite relations, and as a sound box-level test over an image oracle —
//! plus two built-in oracle families: a disjoint-segments map whose only
//! fixed point is the accumulation point 0, and single-valued maps defined
//! by expressions.

use std::collections::BTreeSet;

use crate::expr::{EvalError, Expr};
use crate::interval::round::{add_down, add_up, div_down, div_up, sub_up};
use crate::interval::{BoxN, Interval, IntervalError};

/// Errors raised by map construction and image evaluation.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum MapError {
    #[error(transparent)]
    Interval(#[from] IntervalError),
    #[error(transparent)]
    Eval(#[from] EvalError),
    #[error("element {element:?} is not in the ground set")]
    ElementNotInGround { element: String },
    #[error("duplicate ground element {element:?}")]
    DuplicateElement { element: String },
    #[error("ground set of {size} exceeds the supported maximum {max}")]
    GroundTooLarge { size: usize, max: usize },
    #[error("invalid segments: {0}")]
    InvalidSegments(String),
    #[error("map is {map}-dimensional, box is {got}-dimensional")]
    DimensionMismatch { map: usize, got: usize },
}

// ---------------------------------------------------------------------------
// Finite relations
// ---------------------------------------------------------------------------

/// A multivalued map on a finite labeled ground set, stored as one bitmask
/// per element (bit `j` of `rows[i]` set means element `j` is a value of
/// element `i`). Ground sets are capped at 64 elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteRelation {
    ground: Vec<String>,
    rows: Vec<u64>,
}

impl FiniteRelation {
    pub const MAX_GROUND: usize = 64;

    /// Builds a relation from labels and `(x, y)` pairs meaning `y ∈ F(x)`.
    pub fn new<S: AsRef<str>>(ground: Vec<String>, pairs: &[(S, S)]) -> Result<Self, MapError> {
        if ground.len() > Self::MAX_GROUND {
            return Err(MapError::GroundTooLarge {
                size: ground.len(),
                max: Self::MAX_GROUND,
            });
        }
        for (k, g) in ground.iter().enumerate() {
            if ground[..k].contains(g) {
                return Err(MapError::DuplicateElement { element: g.clone() });
            }
        }
        let mut rows = vec![0u64; ground.len()];
        let index = |label: &str| -> Result<usize, MapError> {
            ground
                .iter()
                .position(|g| g == label)
                .ok_or_else(|| MapError::ElementNotInGround {
                    element: label.to_owned(),
                })
        };
        for (x, y) in pairs {
            rows[index(x.as_ref())?] |= 1u64 << index(y.as_ref())?;
        }
        Ok(FiniteRelation { ground, rows })
    }

    /// Positional constructor: element `i` is labeled `e{i}` and maps to the
    /// set encoded in `rows[i]`.
    pub fn from_rows(rows: Vec<u64>) -> Result<Self, MapError> {
        let n = rows.len();
        if n > Self::MAX_GROUND {
            return Err(MapError::GroundTooLarge {
                size: n,
                max: Self::MAX_GROUND,
            });
        }
        let universe = mask_of_n(n);
        if rows.iter().any(|r| r & !universe != 0) {
            return Err(MapError::ElementNotInGround {
                element: "<bit outside ground>".to_owned(),
            });
        }
        let ground = (0..n).map(|i| format!("e{i}")).collect();
        Ok(FiniteRelation { ground, rows })
    }

    pub fn ground(&self) -> &[String] {
        &self.ground
    }

    pub fn len(&self) -> usize {
        self.ground.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ground.is_empty()
    }

    pub fn universe_mask(&self) -> u64 {
        mask_of_n(self.ground.len())
    }

    /// `(∪_{y∈subset} F(y)) ∩ subset` on bitmask subsets.
    pub fn fhat_mask(&self, subset: u64) -> u64 {
        let subset = subset & self.universe_mask();
        let mut union = 0u64;
        let mut rest = subset;
        while rest != 0 {
            let i = rest.trailing_zeros() as usize;
            union |= self.rows[i];
            rest &= rest - 1;
        }
        union & subset
    }

    /// Bitmask of self-related elements.
    pub fn fix_mask(&self) -> u64 {
        let mut fix = 0u64;
        for (i, row) in self.rows.iter().enumerate() {
            if row >> i & 1 == 1 {
                fix |= 1u64 << i;
            }
        }
        fix
    }

    /// `(∪_{y∈subset} F(y)) ∩ subset` on labeled subsets.
    pub fn fhat(&self, subset: &BTreeSet<String>) -> Result<BTreeSet<String>, MapError> {
        Ok(self.mask_to_set(self.fhat_mask(self.set_to_mask(subset)?)))
    }

    /// The fixed points: elements related to themselves.
    pub fn fix(&self) -> BTreeSet<String> {
        self.mask_to_set(self.fix_mask())
    }

    fn set_to_mask(&self, subset: &BTreeSet<String>) -> Result<u64, MapError> {
        let mut mask = 0u64;
        for label in subset {
            let i = self
                .ground
                .iter()
                .position(|g| g == label)
                .ok_or_else(|| MapError::ElementNotInGround {
                    element: label.clone(),
                })?;
            mask |= 1u64 << i;
        }
        Ok(mask)
    }

    fn mask_to_set(&self, mask: u64) -> BTreeSet<String> {
        self.ground
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, g)| g.clone())
            .collect()
    }
}

fn mask_of_n(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

// ---------------------------------------------------------------------------
// Box-level filter
// ---------------------------------------------------------------------------

/// Verdict of the box-level candidate filter.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FhatStatus {
    /// The image union is disjoint from the box: no fixed point inside.
    ProvedEmpty,
    /// The filter could not rule the box out.
    Candidate,
}

/// A sound image oracle for a multivalued map on a box domain: `image(Y)`
/// returns finitely many boxes whose union contains every value the map
/// takes on points of `Y`. Over-approximation is safe; it can only turn
/// prunable boxes into candidates.
pub trait ImageEnclosure: Sync {
    fn domain(&self) -> &BoxN;
    fn image(&self, y: &BoxN) -> Result<Vec<BoxN>, MapError>;
}

/// Pointwise residual oracle: an upper bound on the distance from `x` to
/// its value set, infinite when nothing finite can be certified. Zero at
/// the map's known fixed points.
pub trait PointResidualOracle: Sync {
    fn residual(&self, x: &[f64]) -> f64;
}

/// The box-level candidate filter: prunes `y` exactly when the images
/// provably miss it.
pub fn fhat_status<M: ImageEnclosure + ?Sized>(
    map: &M,
    y: &BoxN,
) -> Result<FhatStatus, MapError> {
    for g in map.image(y)? {
        if y.intersect(&g)?.is_some() {
            return Ok(FhatStatus::Candidate);
        }
    }
    Ok(FhatStatus::ProvedEmpty)
}

// ---------------------------------------------------------------------------
// Segment map
// ---------------------------------------------------------------------------

/// Index cutoff for the built-in family: segments beyond it are covered
/// collectively by a tail box at 0.
pub const FAMILY_CUTOFF: u64 = 1 << 25;

/// Largest explicit index window per image call; wider windows fall back to
/// one covering box.
const WINDOW_LIMIT: u64 = 4096;

#[derive(Debug, Clone)]
enum SegmentSource {
    /// The infinite family `[1/(2i+1), 1/(2i)]`, `i ≥ 1`, accumulating at 0;
    /// indices above `cutoff` are represented by a covering tail box, and
    /// the graph closure adds the fixed point `(0, 0)`.
    Family { cutoff: u64 },
    /// Finitely many disjoint segments, held in decreasing order. No
    /// closure point: the far-endpoint map on finitely many segments has
    /// no fixed points.
    Explicit(Vec<(f64, f64)>),
}

/// The far-endpoint map: on each segment `[a, b]`, a point maps to the
/// endpoint farthest from it (both endpoints at the midpoint); between
/// segments the value set is empty.
#[derive(Debug, Clone)]
pub struct SegmentMap {
    source: SegmentSource,
    domain: BoxN,
}

/// Enclosures of the family segment endpoints `(1/(2i+1), 1/(2i))`.
pub fn harmonic_segment(i: u64) -> (Interval, Interval) {
    let lo = Interval::new(div_down(1.0, (2 * i + 1) as f64), div_up(1.0, (2 * i + 1) as f64))
        .expect("family endpoint");
    let hi = Interval::new(div_down(1.0, (2 * i) as f64), div_up(1.0, (2 * i) as f64))
        .expect("family endpoint");
    (lo, hi)
}

impl SegmentMap {
    /// The built-in family with the default cutoff.
    pub fn harmonic_family() -> SegmentMap {
        SegmentMap::harmonic_family_with_cutoff(FAMILY_CUTOFF)
            .expect("default cutoff is positive")
    }

    pub fn harmonic_family_with_cutoff(cutoff: u64) -> Result<SegmentMap, MapError> {
        if cutoff == 0 || cutoff > FAMILY_CUTOFF {
            return Err(MapError::InvalidSegments(format!(
                "cutoff must be in 1..={FAMILY_CUTOFF}, got {cutoff}"
            )));
        }
        Ok(SegmentMap {
            source: SegmentSource::Family { cutoff },
            domain: unit_domain(),
        })
    }

    /// A map on an explicit finite list of disjoint positive-length
    /// segments inside `[0, 1]`.
    pub fn explicit(segments: &[(f64, f64)]) -> Result<SegmentMap, MapError> {
        if segments.is_empty() {
            return Err(MapError::InvalidSegments("no segments given".to_owned()));
        }
        let mut sorted = segments.to_vec();
        for &(a, b) in &sorted {
            if !a.is_finite() || !b.is_finite() || !(0.0 <= a && a < b && b <= 1.0) {
                return Err(MapError::InvalidSegments(format!(
                    "segment [{a}, {b}] must satisfy 0 ≤ a < b ≤ 1"
                )));
            }
        }
        sorted.sort_by(|x, y| y.0.partial_cmp(&x.0).expect("finite endpoints"));
        for w in sorted.windows(2) {
            let (upper, lower) = (w[0], w[1]);
            if lower.1 >= upper.0 {
                return Err(MapError::InvalidSegments(format!(
                    "segments [{}, {}] and [{}, {}] are not disjoint",
                    lower.0, lower.1, upper.0, upper.1
                )));
            }
        }
        Ok(SegmentMap {
            source: SegmentSource::Explicit(sorted),
            domain: unit_domain(),
        })
    }

    fn family_image(&self, cutoff: u64, y: Interval, out: &mut Vec<BoxN>) -> Result<(), MapError> {
        if y.contains(0.0) {
            out.push(point_box(0.0, 0.0)?);
        }
        let c = y.lo().max(0.0);
        let d = y.hi().min(0.5);
        if c > d || d <= 0.0 {
            return Ok(());
        }

        let tail_sup = div_up(1.0, (2 * (cutoff + 1)) as f64);
        if c <= tail_sup {
            out.push(point_box(0.0, tail_sup)?);
        }

        let i_hi = if c > 0.0 {
            let f = 1.0 / (2.0 * c);
            if f >= cutoff as f64 {
                cutoff
            } else {
                (f as u64).saturating_add(2).min(cutoff)
            }
        } else {
            cutoff
        };
        let f = (1.0 / d - 1.0) / 2.0;
        let i_lo = if f <= 1.0 { 1 } else { (f as u64).saturating_sub(2).max(1) };
        if i_lo > i_hi {
            return Ok(());
        }

        if i_hi - i_lo + 1 > WINDOW_LIMIT {
            let (a_far, _) = family_bounds(i_hi);
            let (_, b_near) = family_bounds(i_lo);
            out.push(point_box(a_far.0, b_near.1)?);
            return Ok(());
        }
        for i in i_lo..=i_hi {
            let (a, b) = family_bounds(i);
            push_segment_values(a, b, c, d, out)?;
        }
        Ok(())
    }

    fn explicit_image(
        &self,
        segments: &[(f64, f64)],
        y: Interval,
        out: &mut Vec<BoxN>,
    ) -> Result<(), MapError> {
        for &(a, b) in segments {
            push_segment_values((a, a), (b, b), y.lo(), y.hi(), out)?;
        }
        Ok(())
    }
}

fn unit_domain() -> BoxN {
    BoxN::from_pairs(&[[0.0, 1.0]]).expect("unit interval")
}

fn point_box(lo: f64, hi: f64) -> Result<BoxN, MapError> {
    Ok(BoxN::new(vec![Interval::new(lo, hi)?])?)
}

/// Outward bounds `(lo, hi)` of the family endpoints for index `i`.
fn family_bounds(i: u64) -> ((f64, f64), (f64, f64)) {
    let a = (div_down(1.0, (2 * i + 1) as f64), div_up(1.0, (2 * i + 1) as f64));
    let b = (div_down(1.0, (2 * i) as f64), div_up(1.0, (2 * i) as f64));
    (a, b)
}

/// Adds the far-endpoint values one segment contributes over the query
/// window `[c, d]`. Endpoint bounds are outward; uncertain midpoint
/// comparisons include the value.
fn push_segment_values(
    a: (f64, f64),
    b: (f64, f64),
    c: f64,
    d: f64,
    out: &mut Vec<BoxN>,
) -> Result<(), MapError> {
    if a.0 > d || b.1 < c {
        return Ok(());
    }
    let m_lo = add_down(a.0, b.0) * 0.5;
    let m_hi = add_up(a.1, b.1) * 0.5;
    if c.max(a.0) <= m_hi {
        out.push(point_box(b.0, b.1)?);
    }
    if d.min(b.1) >= m_lo {
        out.push(point_box(a.0, a.1)?);
    }
    Ok(())
}

impl ImageEnclosure for SegmentMap {
    fn domain(&self) -> &BoxN {
        &self.domain
    }

    fn image(&self, y: &BoxN) -> Result<Vec<BoxN>, MapError> {
        if y.dim() != 1 {
            return Err(MapError::DimensionMismatch { map: 1, got: y.dim() });
        }
        let yd = y.dims()[0];
        let mut out = Vec::new();
        match &self.source {
            SegmentSource::Family { cutoff } => self.family_image(*cutoff, yd, &mut out)?,
            SegmentSource::Explicit(segments) => self.explicit_image(segments, yd, &mut out)?,
        }
        Ok(out)
    }
}

/// Mantissa-exponent split of a positive finite `f64`: `x = m · 2^e`.
fn decompose(x: f64) -> (u64, i32) {
    let bits = x.to_bits();
    let exp_field = ((bits >> 52) & 0x7ff) as i32;
    let frac = bits & ((1u64 << 52) - 1);
    if exp_field == 0 {
        (frac, -1074)
    } else {
        (frac | (1u64 << 52), exp_field - 1075)
    }
}

/// Exact comparison of `x·k` with 1 for positive `x < 1`; `None` when `x`
/// is below the 128-bit comparison window (then `x·k < 1` for every family
/// index).
fn cmp_scaled(x: f64, k: u64) -> Option<std::cmp::Ordering> {
    let (m, e) = decompose(x);
    debug_assert!(e < 0);
    let shift = (-e) as u32;
    if shift > 127 {
        return None;
    }
    Some(((m as u128) * (k as u128)).cmp(&(1u128 << shift)))
}

/// Exact membership of `x` in family segment `i`:
/// `1/(2i+1) ≤ x ≤ 1/(2i)` ⟺ `x·(2i+1) ≥ 1 ∧ x·2i ≤ 1`.
fn in_family_segment(x: f64, i: u64) -> bool {
    let (Some(lower), Some(upper)) = (cmp_scaled(x, 2 * i + 1), cmp_scaled(x, 2 * i)) else {
        return false;
    };
    lower != std::cmp::Ordering::Less && upper != std::cmp::Ordering::Greater
}

impl PointResidualOracle for SegmentMap {
    fn residual(&self, x: &[f64]) -> f64 {
        let [x] = x else { return f64::INFINITY };
        let x = *x;
        if !x.is_finite() || x < 0.0 || x > 1.0 {
            return f64::INFINITY;
        }
        match &self.source {
            SegmentSource::Family { cutoff } => {
                if x == 0.0 {
                    return 0.0;
                }
                if x > 0.5 {
                    return f64::INFINITY;
                }
                let guess = (1.0 / (2.0 * x)) as u64;
                for i in guess.saturating_sub(1)..=guess.saturating_add(1) {
                    if i >= 1 && i <= *cutoff && in_family_segment(x, i) {
                        let (a, b) = family_bounds(i);
                        return sub_up(x, a.0).max(sub_up(b.1, x)).max(0.0);
                    }
                }
                f64::INFINITY
            }
            SegmentSource::Explicit(segments) => {
                for &(a, b) in segments {
                    if a <= x && x <= b {
                        return sub_up(x, a).max(sub_up(b, x)).max(0.0);
                    }
                }
                f64::INFINITY
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Point maps
// ---------------------------------------------------------------------------

/// A single-valued map given per-component expressions over the domain
/// variables, optionally restricted to a support box (empty value set
/// outside it).
#[derive(Debug, Clone)]
pub struct PointMap {
    components: Vec<Expr>,
    domain: BoxN,
    support: Option<BoxN>,
}

impl PointMap {
    pub fn new(components: Vec<Expr>, domain: BoxN) -> Result<PointMap, MapError> {
        if components.len() != domain.dim() {
            return Err(MapError::DimensionMismatch {
                map: components.len(),
                got: domain.dim(),
            });
        }
        for e in &components {
            if e.vars().len() != domain.dim() {
                return Err(MapError::DimensionMismatch {
                    map: e.vars().len(),
                    got: domain.dim(),
                });
            }
        }
        Ok(PointMap {
            components,
            domain,
            support: None,
        })
    }

    /// Restricts the map: points outside `support` have an empty value set.
    pub fn with_support(mut self, support: BoxN) -> Result<PointMap, MapError> {
        if support.dim() != self.domain.dim() {
            return Err(MapError::DimensionMismatch {
                map: self.domain.dim(),
                got: support.dim(),
            });
        }
        self.support = Some(support);
        Ok(self)
    }

    pub fn components(&self) -> &[Expr] {
        &self.components
    }
}

impl ImageEnclosure for PointMap {
    fn domain(&self) -> &BoxN {
        &self.domain
    }

    fn image(&self, y: &BoxN) -> Result<Vec<BoxN>, MapError> {
        let Some(q) = y.intersect(&self.domain)? else {
            return Ok(vec![]);
        };
        let q = match &self.support {
            Some(s) => match q.intersect(s)? {
                Some(q) => q,
                None => return Ok(vec![]),
            },
            None => q,
        };
        let dims = self
            .components
            .iter()
            .map(|e| e.eval_box(&q))
            .collect::<Result<Vec<Interval>, EvalError>>()?;
        Ok(vec![BoxN::new(dims)?])
    }
}

impl PointResidualOracle for PointMap {
    fn residual(&self, x: &[f64]) -> f64 {
        if x.len() != self.domain.dim()
            || !self.domain.contains_point(x)
            || self.support.as_ref().is_some_and(|s| !s.contains_point(x))
        {
            return f64::INFINITY;
        }
        let Ok(point) = x
            .iter()
            .map(|&v| Interval::point(v))
            .collect::<Result<Vec<Interval>, IntervalError>>()
        else {
            return f64::INFINITY;
        };
        let Ok(point) = BoxN::new(point) else {
            return f64::INFINITY;
        };
        let mut worst: f64 = 0.0;
        for (e, &xi) in self.components.iter().zip(x) {
            let Ok(f) = e.eval_box(&point) else {
                return f64::INFINITY;
            };
            worst = worst.max(sub_up(xi, f.lo()).max(sub_up(f.hi(), xi)).max(0.0));
        }
        worst
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::parse;

    fn labels(names: &[&str]) -> Vec<String> {
        names.iter().map(|s| (*s).to_owned()).collect()
    }

    fn set(names: &[&str]) -> BTreeSet<String> {
        names.iter().map(|s| (*s).to_owned()).collect()
    }

    #[test]
    fn filter_on_finite_relations_follows_the_definition() {
        let r = FiniteRelation::new(labels(&["a", "b"]), &[("a", "a"), ("b", "a")]).unwrap();
        assert_eq!(r.fhat(&set(&["a", "b"])).unwrap(), set(&["a"]));
        assert_eq!(r.fhat(&set(&[])).unwrap(), set(&[]));
        assert_eq!(r.fix(), set(&["a"]));

        let empty = FiniteRelation::new(labels(&["a", "b"]), &[] as &[(&str, &str)]).unwrap();
        assert_eq!(empty.fhat(&set(&["a", "b"])).unwrap(), set(&[]));
        assert_eq!(empty.fix(), set(&[]));

        assert!(matches!(
            r.fhat(&set(&["z"])),
            Err(MapError::ElementNotInGround { .. })
        ));
        assert!(matches!(
            FiniteRelation::new(labels(&["a"]), &[("a", "q")]),
            Err(MapError::ElementNotInGround { .. })
        ));
    }

    #[test]
    fn fixed_points_match_the_union_of_singleton_filters() {
        let r = FiniteRelation::from_rows(vec![0b1010, 0b0010, 0b1100, 0b0001]).unwrap();
        let mut union = 0u64;
        for i in 0..r.len() {
            union |= r.fhat_mask(1 << i);
        }
        assert_eq!(union, r.fix_mask());
    }

    #[test]
    fn box_filter_on_the_family_matches_case_analysis() {
        let map = SegmentMap::harmonic_family();

        // [0.3, 0.4]: only the far endpoint 1/2 is a value, and it is
        // outside the box.
        let y = BoxN::from_pairs(&[[0.3, 0.4]]).unwrap();
        assert_eq!(fhat_status(&map, &y).unwrap(), FhatStatus::ProvedEmpty);

        // [0.3, 0.55] holds the whole first segment, so both its endpoints
        // are values inside the box.
        let y = BoxN::from_pairs(&[[0.3, 0.55]]).unwrap();
        assert_eq!(fhat_status(&map, &y).unwrap(), FhatStatus::Candidate);

        // The identity has every box as a candidate.
        let id = PointMap::new(
            vec![parse("x", &["x"]).unwrap()],
            BoxN::from_pairs(&[[0.0, 1.0]]).unwrap(),
        )
        .unwrap();
        let y = BoxN::from_pairs(&[[0.125, 0.25]]).unwrap();
        assert_eq!(fhat_status(&id, &y).unwrap(), FhatStatus::Candidate);
    }

    #[test]
    fn family_image_matches_the_far_endpoint_analysis() {
        let map = SegmentMap::harmonic_family();

        // [0.45, 0.55] covers only the upper half of [1/3, 1/2]; every such
        // point maps to 1/3.
        let y = BoxN::from_pairs(&[[0.45, 0.55]]).unwrap();
        let image = map.image(&y).unwrap();
        assert_eq!(image.len(), 1);
        let b = image[0].dims()[0];
        assert!(b.contains(1.0 / 3.0) && b.width() < 1e-15);

        // A box reaching to 0 picks up the closure point and the tail.
        let y = BoxN::from_pairs(&[[0.0, 0.01]]).unwrap();
        let image = map.image(&y).unwrap();
        assert!(image
            .iter()
            .any(|g| g.dims()[0].contains(0.0)));
        let hull = image
            .iter()
            .skip(1)
            .fold(image[0].clone(), |h, g| h.hull(g).unwrap());
        assert!(hull.dims()[0].hi() >= 0.0099);
        assert_eq!(fhat_status(&map, &y).unwrap(), FhatStatus::Candidate);
    }

    #[test]
    fn family_residual_is_the_distance_to_the_far_endpoint() {
        let map = SegmentMap::harmonic_family();
        assert_eq!(map.residual(&[0.0]), 0.0);
        assert_eq!(map.residual(&[0.29]), f64::INFINITY);
        assert_eq!(map.residual(&[0.7]), f64::INFINITY);

        // A point barely inside segment i sits near the left endpoint, so
        // its residual is close to the segment width 1/(2i(2i+1)).
        for i in [1u64, 7, 100, 20000] {
            let x = div_up(1.0, (2 * i + 1) as f64);
            let width = 1.0 / ((2 * i) as f64 * (2 * i + 1) as f64);
            let r = map.residual(&[x]);
            assert!(
                (r - width).abs() <= width * 1e-9 + 1e-18,
                "i={i}: residual {r} vs width {width}"
            );
        }

        // 0.5 is the right endpoint of [1/3, 1/2] and maps to 1/3.
        let r = map.residual(&[0.5]);
        assert!((r - 1.0 / 6.0).abs() < 1e-15);
    }

    #[test]
    fn explicit_segments_validate_and_act_like_the_family() {
        assert!(matches!(
            SegmentMap::explicit(&[(0.2, 0.2)]),
            Err(MapError::InvalidSegments(_))
        ));
        assert!(matches!(
            SegmentMap::explicit(&[(0.1, 0.3), (0.25, 0.5)]),
            Err(MapError::InvalidSegments(_))
        ));
        assert!(matches!(
            SegmentMap::explicit(&[(0.1, 0.3), (0.3, 0.5)]),
            Err(MapError::InvalidSegments(_))
        ));

        let map = SegmentMap::explicit(&[(0.6, 0.8), (0.1, 0.2)]).unwrap();
        // Residual at a midpoint is half the width.
        assert!((map.residual(&[0.7]) - 0.1).abs() < 1e-15);
        assert_eq!(map.residual(&[0.4]), f64::INFINITY);

        // Querying the lower half of [0.6, 0.8] yields the far endpoint 0.8.
        let y = BoxN::from_pairs(&[[0.6, 0.65]]).unwrap();
        let image = map.image(&y).unwrap();
        assert_eq!(image.len(), 1);
        assert!(image[0].dims()[0].contains(0.8));
        assert_eq!(fhat_status(&map, &y).unwrap(), FhatStatus::ProvedEmpty);

        // No closure point: nothing accumulates at 0.
        let y = BoxN::from_pairs(&[[0.0, 0.05]]).unwrap();
        assert!(map.image(&y).unwrap().is_empty());
    }

    #[test]
    fn point_maps_evaluate_componentwise() {
        let dom = BoxN::from_pairs(&[[0.0, 1.0]]).unwrap();
        let half = PointMap::new(vec![parse("x / 2", &["x"]).unwrap()], dom.clone()).unwrap();
        let y = BoxN::from_pairs(&[[0.5, 1.0]]).unwrap();
        let image = half.image(&y).unwrap();
        assert_eq!(image.len(), 1);
        let g = image[0].dims()[0];
        assert!(g.contains(0.25) && g.contains(0.5) && g.width() < 0.25 + 1e-12);

        let id = PointMap::new(vec![parse("x", &["x"]).unwrap()], dom.clone()).unwrap();
        assert_eq!(id.residual(&[0.37]), 0.0);

        let cosmap = PointMap::new(vec![parse("cos(x)", &["x"]).unwrap()], dom).unwrap();
        assert!(cosmap.residual(&[0.7390851332151607]) <= 1e-6);
    }

    #[test]
    fn support_restriction_empties_the_image_off_support() {
        let dom = BoxN::from_pairs(&[[0.0, 1.0]]).unwrap();
        let partial = PointMap::new(vec![parse("x / 2", &["x"]).unwrap()], dom)
            .unwrap()
            .with_support(BoxN::from_pairs(&[[0.2, 1.0]]).unwrap())
            .unwrap();

        let y = BoxN::from_pairs(&[[0.0, 0.19]]).unwrap();
        assert!(partial.image(&y).unwrap().is_empty());
        assert_eq!(fhat_status(&partial, &y).unwrap(), FhatStatus::ProvedEmpty);

        assert_eq!(partial.residual(&[0.1]), f64::INFINITY);
        assert!((partial.residual(&[0.2]) - 0.1).abs() < 1e-15);
        assert!((partial.residual(&[0.8]) - 0.4).abs() < 1e-15);
    }
}
