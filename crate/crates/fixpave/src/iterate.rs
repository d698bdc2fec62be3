//! Fixed points by iteration: single-valued maps on boxes, and monotone
//! maps on finite posets.
//!
//! On a box, repeated application of a map converges when the step size
//! collapses and the residual at the limit is small; both are checked, so a
//! reported limit is always a point whose distance to its own image is at
//! most the requested tolerance.
//!
//! On a finite poset, every directed subset contains its own maximum, so
//! monotone maps are automatically continuous and the Kleene chain from the
//! bottom element stabilizes at the least fixed point in at most `n` steps.
//! The constructors validate the order axioms rather than trust the caller,
//! and the continuity check verifies the directed-supremum property
//! exhaustively on small posets instead of assuming it.

use crate::expr::{EvalError, Expr};
use crate::interval::linf_distance;
use serde::Serialize;

/// Largest poset size for which directed subsets are enumerated exhaustively.
pub const DIRECTED_CHECK_LIMIT: usize = 12;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum IterateError {
    #[error(transparent)]
    Eval(#[from] EvalError),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("element {name:?} is not in the poset")]
    UnknownElement { name: String },
    #[error("elements {x:?} and {y:?} sit below each other; not a partial order")]
    NotAPartialOrder { x: String, y: String },
    #[error("bottom {bottom:?} does not lie below {above:?}")]
    BottomNotLeast { bottom: String, above: String },
    #[error("poset has {size} elements; exhaustive continuity checks stop at {limit}")]
    PosetTooLarge { size: usize, limit: usize },
    #[error("iteration still changing after {steps} steps; the map has no stable chain here")]
    NonStabilizing { steps: usize },
    #[error("map is not extensive: {x:?} does not lie below its image")]
    NotExtensive { x: String },
}

/// Result of iterating a point map to a limit.
#[derive(Debug, Clone, Serialize)]
pub struct IterResult {
    pub limit: Vec<f64>,
    pub iterations: usize,
    /// Distance from the limit to its own image.
    pub residual: f64,
    pub converged: bool,
}

/// Iterate `x -> f(x)` from `x0` until both the step size drops to `tol/2`
/// and the residual at the new point is at most `tol`, or `max_iter`
/// applications have been spent.
pub fn iterate_to_limit(
    fs: &[Expr],
    x0: &[f64],
    tol: f64,
    max_iter: usize,
) -> Result<IterResult, IterateError> {
    if fs.is_empty() || fs.len() != x0.len() {
        return Err(IterateError::InvalidInput(format!(
            "need one component per coordinate, got {} components for {} coordinates",
            fs.len(),
            x0.len()
        )));
    }
    for f in fs {
        if f.vars().len() != x0.len() {
            return Err(IterateError::InvalidInput(format!(
                "component over {} variables used with {} coordinates",
                f.vars().len(),
                x0.len()
            )));
        }
    }
    if !(tol > 0.0 && tol.is_finite()) {
        return Err(IterateError::InvalidInput(format!(
            "tolerance must be positive and finite, got {tol}"
        )));
    }
    if max_iter == 0 {
        return Err(IterateError::InvalidInput(
            "max_iter must be at least 1".into(),
        ));
    }

    let apply = |x: &[f64]| -> Result<Vec<f64>, IterateError> {
        fs.iter().map(|f| Ok(f.eval_point(x)?)).collect()
    };

    let mut x = x0.to_vec();
    for n in 1..=max_iter {
        let next = apply(&x)?;
        let step = linf_distance(&next, &x);
        x = next;
        if step <= tol / 2.0 {
            let image = apply(&x)?;
            let residual = linf_distance(&image, &x);
            if residual <= tol {
                return Ok(IterResult {
                    limit: x,
                    iterations: n,
                    residual,
                    converged: true,
                });
            }
        }
    }
    let image = apply(&x)?;
    let residual = linf_distance(&image, &x);
    Ok(IterResult {
        limit: x,
        iterations: max_iter,
        residual,
        converged: false,
    })
}

/// A finite partially ordered set with a least element.
///
/// Construction closes the given relation reflexively and transitively,
/// then rejects cycles and bottoms that are not least. For posets of at
/// most [`DIRECTED_CHECK_LIMIT`] elements it also verifies exhaustively
/// that every directed subset contains its supremum.
#[derive(Debug, Clone)]
pub struct FinitePoset {
    elements: Vec<String>,
    leq: Vec<Vec<bool>>,
    bottom: usize,
    suprema_checked: bool,
}

impl FinitePoset {
    pub fn new<S: AsRef<str>>(
        elements: Vec<String>,
        leq_pairs: &[(S, S)],
        bottom: &str,
    ) -> Result<FinitePoset, IterateError> {
        let n = elements.len();
        if n == 0 {
            return Err(IterateError::InvalidInput(
                "poset needs at least one element".into(),
            ));
        }
        let mut index = std::collections::HashMap::new();
        for (i, e) in elements.iter().enumerate() {
            if index.insert(e.as_str(), i).is_some() {
                return Err(IterateError::InvalidInput(format!(
                    "duplicate element {e:?}"
                )));
            }
        }
        let look = |name: &str| -> Result<usize, IterateError> {
            index
                .get(name)
                .copied()
                .ok_or_else(|| IterateError::UnknownElement { name: name.into() })
        };

        let mut leq = vec![vec![false; n]; n];
        for (i, row) in leq.iter_mut().enumerate() {
            row[i] = true;
        }
        for (a, b) in leq_pairs {
            leq[look(a.as_ref())?][look(b.as_ref())?] = true;
        }
        for k in 0..n {
            for i in 0..n {
                if leq[i][k] {
                    for j in 0..n {
                        if leq[k][j] {
                            leq[i][j] = true;
                        }
                    }
                }
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                if leq[i][j] && leq[j][i] {
                    return Err(IterateError::NotAPartialOrder {
                        x: elements[i].clone(),
                        y: elements[j].clone(),
                    });
                }
            }
        }
        let bottom = look(bottom)?;
        for j in 0..n {
            if !leq[bottom][j] {
                return Err(IterateError::BottomNotLeast {
                    bottom: elements[bottom].clone(),
                    above: elements[j].clone(),
                });
            }
        }

        let mut poset = FinitePoset {
            elements,
            leq,
            bottom,
            suprema_checked: false,
        };
        if n <= DIRECTED_CHECK_LIMIT {
            poset.verify_directed_suprema();
            poset.suprema_checked = true;
        }
        Ok(poset)
    }

    /// The powerset of `{1, ..., n}` ordered by inclusion, with elements
    /// named `{}`, `{1}`, `{1,3}`, ... in binary counting order.
    pub fn powerset(n: u32) -> Result<FinitePoset, IterateError> {
        if n > 10 {
            return Err(IterateError::InvalidInput(format!(
                "powerset of {n} ground elements would have {} members",
                (1u64 << n.min(63))
            )));
        }
        let size = 1usize << n;
        let elements: Vec<String> = (0..size).map(|m| subset_label(m as u32)).collect();
        let mut leq = vec![vec![false; size]; size];
        for (a, row) in leq.iter_mut().enumerate() {
            for (b, cell) in row.iter_mut().enumerate() {
                *cell = a & !b == 0;
            }
        }
        let mut poset = FinitePoset {
            elements,
            leq,
            bottom: 0,
            suprema_checked: false,
        };
        if size <= DIRECTED_CHECK_LIMIT {
            poset.verify_directed_suprema();
            poset.suprema_checked = true;
        }
        Ok(poset)
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn elements(&self) -> &[String] {
        &self.elements
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    /// Whether the directed-supremum property was verified exhaustively.
    pub fn suprema_checked(&self) -> bool {
        self.suprema_checked
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.elements.iter().position(|e| e == name)
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a][b]
    }

    /// Every nonempty directed subset of a finite poset must contain its own
    /// maximum; anything else means the order matrix is corrupt.
    fn verify_directed_suprema(&self) {
        let n = self.elements.len();
        'subsets: for mask in 1u32..(1u32 << n) {
            let members: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
            for &a in &members {
                for &b in &members {
                    if !members.iter().any(|&c| self.leq[a][c] && self.leq[b][c]) {
                        continue 'subsets;
                    }
                }
            }
            let has_max = members
                .iter()
                .any(|&m| members.iter().all(|&a| self.leq[a][m]));
            assert!(
                has_max,
                "directed subset without a maximum in a finite poset"
            );
        }
    }

    fn validate_map(&self, map: &[usize]) -> Result<(), IterateError> {
        let n = self.elements.len();
        if map.len() != n {
            return Err(IterateError::InvalidInput(format!(
                "map has {} values for {} elements",
                map.len(),
                n
            )));
        }
        if let Some(&bad) = map.iter().find(|&&v| v >= n) {
            return Err(IterateError::InvalidInput(format!(
                "map value {bad} is out of range for {n} elements"
            )));
        }
        Ok(())
    }
}

fn subset_label(mask: u32) -> String {
    let mut out = String::from("{");
    let mut first = true;
    for v in 0..32 {
        if mask >> v & 1 == 1 {
            if !first {
                out.push(',');
            }
            out.push_str(&(v + 1).to_string());
            first = false;
        }
    }
    out.push('}');
    out
}

/// The map `S -> seeds ∪ successors(S)` on the powerset of `{1, .., n}`,
/// as one image index per subset in binary counting order. Its least fixed
/// point is the set of vertices reachable from the seeds.
pub fn reachability_map(
    n: u32,
    seeds: &[u32],
    edges: &[(u32, u32)],
) -> Result<Vec<usize>, IterateError> {
    if n > 10 {
        return Err(IterateError::InvalidInput(format!(
            "reachability maps stop at 10 vertices, got {n}"
        )));
    }
    let check = |v: u32| -> Result<u32, IterateError> {
        if (1..=n).contains(&v) {
            Ok(v - 1)
        } else {
            Err(IterateError::InvalidInput(format!(
                "vertex {v} is outside 1..={n}"
            )))
        }
    };
    let mut seed_mask = 0u32;
    for &s in seeds {
        seed_mask |= 1 << check(s)?;
    }
    let edges: Vec<(u32, u32)> = edges
        .iter()
        .map(|&(a, b)| Ok((check(a)?, check(b)?)))
        .collect::<Result<_, IterateError>>()?;
    let size = 1usize << n;
    let mut map = Vec::with_capacity(size);
    for mask in 0..size as u32 {
        let mut image = seed_mask;
        for &(a, b) in &edges {
            if mask >> a & 1 == 1 {
                image |= 1 << b;
            }
        }
        map.push(image as usize);
    }
    Ok(map)
}

/// Verdict of a monotonicity check.
#[derive(Debug, Clone, PartialEq)]
pub enum MonotoneReport {
    Monotone,
    Violation { x: String, y: String },
}

/// Verdict of a continuity check on a finite poset.
///
/// A monotone map on a finite poset sends the maximum of a directed subset
/// to the maximum of the image, so monotonicity with an exhaustive
/// directed-subset confirmation is exactly continuity here.
#[derive(Debug, Clone, PartialEq)]
pub enum ContinuityReport {
    Continuous { directed_sets_checked: usize },
    NotMonotone { x: String, y: String },
}

/// Check `x ⪯ y  ⟹  f(x) ⪯ f(y)` over all pairs; works at any size.
pub fn check_monotone(poset: &FinitePoset, map: &[usize]) -> Result<MonotoneReport, IterateError> {
    poset.validate_map(map)?;
    let n = poset.len();
    for x in 0..n {
        for y in 0..n {
            if poset.leq(x, y) && !poset.leq(map[x], map[y]) {
                return Ok(MonotoneReport::Violation {
                    x: poset.elements[x].clone(),
                    y: poset.elements[y].clone(),
                });
            }
        }
    }
    Ok(MonotoneReport::Monotone)
}

/// Check Scott continuity by exhausting directed subsets; only available up
/// to [`DIRECTED_CHECK_LIMIT`] elements — fall back to [`check_monotone`]
/// beyond that.
pub fn check_scott_continuity(
    poset: &FinitePoset,
    map: &[usize],
) -> Result<ContinuityReport, IterateError> {
    poset.validate_map(map)?;
    let n = poset.len();
    if n > DIRECTED_CHECK_LIMIT {
        return Err(IterateError::PosetTooLarge {
            size: n,
            limit: DIRECTED_CHECK_LIMIT,
        });
    }
    if let MonotoneReport::Violation { x, y } = check_monotone(poset, map)? {
        return Ok(ContinuityReport::NotMonotone { x, y });
    }
    let mut checked = 0usize;
    'subsets: for mask in 1u32..(1u32 << n) {
        let members: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
        let mut max = members[0];
        for &a in &members {
            for &b in &members {
                if !members.iter().any(|&c| poset.leq(a, c) && poset.leq(b, c)) {
                    continue 'subsets;
                }
            }
            if poset.leq(max, a) {
                max = a;
            }
        }
        checked += 1;
        let image_of_max = map[max];
        let preserved = members.iter().all(|&a| poset.leq(map[a], image_of_max));
        assert!(
            preserved,
            "monotone map failed to preserve a directed supremum"
        );
    }
    Ok(ContinuityReport::Continuous {
        directed_sets_checked: checked,
    })
}

/// A stabilized iteration chain on a poset.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PosetLimit {
    pub element: String,
    pub index: usize,
    /// Applications of the map before the chain repeated.
    pub steps: usize,
}

fn stabilize(
    poset: &FinitePoset,
    map: &[usize],
    start: usize,
) -> Result<PosetLimit, IterateError> {
    let n = poset.len();
    let mut x = start;
    for steps in 0..=n {
        let next = map[x];
        if next == x {
            return Ok(PosetLimit {
                element: poset.elements[x].clone(),
                index: x,
                steps,
            });
        }
        x = next;
    }
    Err(IterateError::NonStabilizing { steps: n + 1 })
}

/// Iterate from the bottom element until the chain stabilizes.
///
/// For a monotone map the result is the least fixed point; the chain must
/// stabilize within `n` applications, so a longer run reports
/// [`IterateError::NonStabilizing`].
pub fn kleene_lfp(poset: &FinitePoset, map: &[usize]) -> Result<PosetLimit, IterateError> {
    poset.validate_map(map)?;
    stabilize(poset, map, poset.bottom())
}

/// Iterate an extensive map (`x ⪯ f(x)` everywhere) from any start; the
/// chain climbs, so it stabilizes at a fixed point above the start.
pub fn climb_extensive(
    poset: &FinitePoset,
    map: &[usize],
    start: &str,
) -> Result<PosetLimit, IterateError> {
    poset.validate_map(map)?;
    for x in 0..poset.len() {
        if !poset.leq(x, map[x]) {
            return Err(IterateError::NotExtensive {
                x: poset.elements[x].clone(),
            });
        }
    }
    let start = poset
        .index_of(start)
        .ok_or_else(|| IterateError::UnknownElement { name: start.into() })?;
    stabilize(poset, map, start)
}

/// All fixed points, found by filtering the points sitting below their
/// image down to the ones whose image also sits below them.
pub fn fixpoints_via_prefixed(
    poset: &FinitePoset,
    map: &[usize],
) -> Result<Vec<String>, IterateError> {
    poset.validate_map(map)?;
    Ok((0..poset.len())
        .filter(|&x| poset.leq(x, map[x]))
        .filter(|&x| poset.leq(map[x], x))
        .map(|x| poset.elements[x].clone())
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::parse;

    fn chain(n: usize) -> FinitePoset {
        let elements: Vec<String> = (0..n).map(|i| i.to_string()).collect();
        let pairs: Vec<(String, String)> = (1..n)
            .map(|i| ((i - 1).to_string(), i.to_string()))
            .collect();
        FinitePoset::new(elements, &pairs, "0").unwrap()
    }

    fn cos_fixed_point_by_bisection() -> f64 {
        let g = |x: f64| x.cos() - x;
        let (mut lo, mut hi) = (0.7f64, 0.75f64);
        assert!(g(lo) > 0.0 && g(hi) < 0.0);
        for _ in 0..60 {
            let mid = 0.5 * (lo + hi);
            if g(mid) > 0.0 {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        0.5 * (lo + hi)
    }

    #[test]
    fn cosine_iteration_reaches_the_known_limit() {
        let f = parse("cos(u)", &["u"]).unwrap();
        let r = iterate_to_limit(&[f], &[0.0], 1e-6, 1000).unwrap();
        assert!(r.converged);
        assert!(r.residual <= 1e-6);
        assert!(r.iterations < 200);
        let oracle = cos_fixed_point_by_bisection();
        assert!((r.limit[0] - oracle).abs() <= 1e-5);
    }

    #[test]
    fn identity_converges_in_one_application() {
        let f = parse("u", &["u"]).unwrap();
        let r = iterate_to_limit(&[f], &[0.3], 1e-9, 10).unwrap();
        assert!(r.converged);
        assert_eq!(r.iterations, 1);
        assert_eq!(r.limit, vec![0.3]);
        assert_eq!(r.residual, 0.0);
    }

    #[test]
    fn coupled_contraction_converges_to_the_joint_fixed_point() {
        let fu = parse("v / 2 + 0.25", &["u", "v"]).unwrap();
        let fv = parse("u / 2 + 0.25", &["u", "v"]).unwrap();
        let r = iterate_to_limit(&[fu, fv], &[0.0, 1.0], 1e-8, 1000).unwrap();
        assert!(r.converged);
        assert!((r.limit[0] - 0.5).abs() <= 1e-6);
        assert!((r.limit[1] - 0.5).abs() <= 1e-6);
    }

    #[test]
    fn expanding_map_never_converges() {
        let f = parse("2 * u + 1", &["u"]).unwrap();
        let r = iterate_to_limit(&[f], &[1.0], 1e-6, 50).unwrap();
        assert!(!r.converged);
        assert_eq!(r.iterations, 50);
        assert!(r.residual > 1.0);
    }

    #[test]
    fn oscillation_is_not_convergence() {
        let f = parse("1 - u", &["u"]).unwrap();
        let r = iterate_to_limit(&[f], &[0.0], 1e-6, 40).unwrap();
        assert!(!r.converged);
        assert_eq!(r.residual, 1.0);
    }

    #[test]
    fn blow_up_surfaces_as_an_error() {
        let f = parse("exp(u)", &["u"]).unwrap();
        let err = iterate_to_limit(&[f], &[2.0], 1e-6, 10).unwrap_err();
        assert!(matches!(err, IterateError::Eval(_)));
    }

    #[test]
    fn iteration_inputs_are_validated() {
        let f = parse("u", &["u"]).unwrap();
        let g = parse("u + v", &["u", "v"]).unwrap();
        assert!(matches!(
            iterate_to_limit(&[], &[], 1e-6, 10),
            Err(IterateError::InvalidInput(_))
        ));
        assert!(matches!(
            iterate_to_limit(&[g], &[0.0], 1e-6, 10),
            Err(IterateError::InvalidInput(_))
        ));
        assert!(matches!(
            iterate_to_limit(&[f.clone()], &[0.0], 0.0, 10),
            Err(IterateError::InvalidInput(_))
        ));
        assert!(matches!(
            iterate_to_limit(&[f], &[0.0], 1e-6, 0),
            Err(IterateError::InvalidInput(_))
        ));
    }

    #[test]
    fn chain_poset_orders_and_iterates() {
        let p = chain(3);
        assert!(p.suprema_checked());
        assert!(p.leq(0, 2) && !p.leq(2, 0));
        let shift_up = vec![1, 2, 2];
        assert_eq!(
            check_monotone(&p, &shift_up).unwrap(),
            MonotoneReport::Monotone
        );
        let r = kleene_lfp(&p, &shift_up).unwrap();
        assert_eq!(r.element, "2");
        assert_eq!(r.steps, 2);
        let identity = vec![0, 1, 2];
        assert_eq!(kleene_lfp(&p, &identity).unwrap().steps, 0);
    }

    #[test]
    fn order_axioms_are_enforced() {
        let two = vec!["a".to_string(), "b".to_string()];
        let err = FinitePoset::new(two.clone(), &[("a", "b"), ("b", "a")], "a").unwrap_err();
        assert!(matches!(err, IterateError::NotAPartialOrder { .. }));

        let err = FinitePoset::new(two.clone(), &[("a", "b")], "b").unwrap_err();
        assert!(matches!(
            err,
            IterateError::BottomNotLeast { ref bottom, ref above }
                if bottom == "b" && above == "a"
        ));

        let err = FinitePoset::new(two.clone(), &[("a", "c")], "a").unwrap_err();
        assert!(matches!(err, IterateError::UnknownElement { ref name } if name == "c"));

        let dup = vec!["a".to_string(), "a".to_string()];
        let none: &[(&str, &str)] = &[];
        assert!(matches!(
            FinitePoset::new(dup, none, "a"),
            Err(IterateError::InvalidInput(_))
        ));
        assert!(matches!(
            FinitePoset::new(Vec::new(), none, "a"),
            Err(IterateError::InvalidInput(_))
        ));
        let _ = FinitePoset::new(two, &[("a", "b")], "a").unwrap();
    }

    #[test]
    fn powerset_is_ordered_by_inclusion() {
        let p = FinitePoset::powerset(3).unwrap();
        assert_eq!(p.len(), 8);
        assert_eq!(p.elements()[0], "{}");
        assert_eq!(p.elements()[5], "{1,3}");
        assert_eq!(p.elements()[7], "{1,2,3}");
        let i = p.index_of("{1}").unwrap();
        let j = p.index_of("{1,3}").unwrap();
        let k = p.index_of("{2}").unwrap();
        assert!(p.leq(i, j) && !p.leq(j, i) && !p.leq(i, k));
        assert_eq!(p.bottom(), 0);
        assert!(p.suprema_checked());
        assert!(FinitePoset::powerset(11).is_err());
    }

    #[test]
    fn reachability_least_fixed_point_is_the_reachable_set() {
        let p = FinitePoset::powerset(3).unwrap();
        let f = reachability_map(3, &[1], &[(1, 2), (2, 3)]).unwrap();
        let directed_subsets: usize = (0..p.len())
            .map(|m| 1usize << ((0..p.len()).filter(|&x| p.leq(x, m)).count() - 1))
            .sum();
        assert_eq!(
            check_scott_continuity(&p, &f).unwrap(),
            ContinuityReport::Continuous {
                directed_sets_checked: directed_subsets
            }
        );
        let r = kleene_lfp(&p, &f).unwrap();
        assert_eq!(r.element, "{1,2,3}");
        assert_eq!(r.steps, 3);

        let g = reachability_map(3, &[2], &[(1, 2)]).unwrap();
        assert_eq!(kleene_lfp(&p, &g).unwrap().element, "{2}");

        assert!(reachability_map(3, &[4], &[]).is_err());
        assert!(reachability_map(3, &[1], &[(0, 1)]).is_err());
    }

    #[test]
    fn non_monotone_maps_are_reported_with_a_witness() {
        let p = chain(3);
        let f = vec![2, 0, 2];
        let report = check_monotone(&p, &f).unwrap();
        let MonotoneReport::Violation { x, y } = report else {
            panic!("map lowers 0 below 1, must be flagged");
        };
        assert!(p.leq(
            p.index_of(&x).unwrap(),
            p.index_of(&y).unwrap()
        ));
        assert!(matches!(
            check_scott_continuity(&p, &f).unwrap(),
            ContinuityReport::NotMonotone { .. }
        ));
    }

    #[test]
    fn continuity_check_refuses_large_posets_but_monotone_check_works() {
        let p = FinitePoset::powerset(4).unwrap();
        assert!(!p.suprema_checked());
        let f: Vec<usize> = (0..16).collect();
        assert!(matches!(
            check_scott_continuity(&p, &f),
            Err(IterateError::PosetTooLarge { size: 16, limit: 12 })
        ));
        assert_eq!(check_monotone(&p, &f).unwrap(), MonotoneReport::Monotone);
    }

    #[test]
    fn swapping_map_never_stabilizes() {
        let p = chain(2);
        let err = kleene_lfp(&p, &[1, 0]).unwrap_err();
        assert!(matches!(err, IterateError::NonStabilizing { steps: 3 }));
    }

    #[test]
    fn map_shapes_are_validated() {
        let p = chain(3);
        assert!(matches!(
            kleene_lfp(&p, &[0, 1]),
            Err(IterateError::InvalidInput(_))
        ));
        assert!(matches!(
            kleene_lfp(&p, &[0, 1, 7]),
            Err(IterateError::InvalidInput(_))
        ));
    }

    #[test]
    fn prefixed_filter_finds_exactly_the_fixed_points() {
        let elements: Vec<String> = ["bot", "a", "b", "c", "top"]
            .iter()
            .map(|s| s.to_string())
            .collect();
        let diamond = FinitePoset::new(
            elements,
            &[
                ("bot", "a"),
                ("bot", "b"),
                ("bot", "c"),
                ("a", "top"),
                ("b", "top"),
                ("c", "top"),
            ],
            "bot",
        )
        .unwrap();
        let top = diamond.index_of("top").unwrap();
        let a = diamond.index_of("a").unwrap();
        let mut to_top: Vec<usize> = vec![top; 5];
        to_top[diamond.index_of("bot").unwrap()] = diamond.index_of("bot").unwrap();
        assert_eq!(fixpoints_via_prefixed(&diamond, &to_top).unwrap(), [
            "bot", "top"
        ]);
        let lfp = kleene_lfp(&diamond, &to_top).unwrap();
        assert_eq!(lfp.element, "bot");

        let constant_a = vec![a; 5];
        assert_eq!(fixpoints_via_prefixed(&diamond, &constant_a).unwrap(), ["a"]);
        assert_eq!(kleene_lfp(&diamond, &constant_a).unwrap().element, "a");
    }

    #[test]
    fn extensive_maps_climb_to_a_fixed_point_above_the_start() {
        let p = FinitePoset::powerset(3).unwrap();
        let reach = reachability_map(3, &[1], &[(1, 2)]).unwrap();
        let closure: Vec<usize> = reach
            .iter()
            .enumerate()
            .map(|(mask, &img)| mask | img)
            .collect();
        for start in p.elements() {
            let r = climb_extensive(&p, &closure, start).unwrap();
            let s = p.index_of(start).unwrap();
            assert!(p.leq(s, r.index));
            assert_eq!(closure[r.index], r.index);
        }
        let from_3 = climb_extensive(&p, &closure, "{3}").unwrap();
        assert_eq!(from_3.element, "{1,2,3}");

        let err = climb_extensive(&p, &reach, "{}").unwrap_err();
        assert!(matches!(err, IterateError::NotExtensive { .. }));
    }
}
