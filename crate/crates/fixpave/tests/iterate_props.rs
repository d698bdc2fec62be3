use fixpave::iterate::{
    check_monotone, check_scott_continuity, climb_extensive, fixpoints_via_prefixed, kleene_lfp,
    ContinuityReport, FinitePoset, MonotoneReport,
};
use proptest::prelude::*;

fn chain(n: usize) -> FinitePoset {
    let elements: Vec<String> = (0..n).map(|i| i.to_string()).collect();
    let pairs: Vec<(String, String)> = (1..n)
        .map(|i| ((i - 1).to_string(), i.to_string()))
        .collect();
    FinitePoset::new(elements, &pairs, "0").unwrap()
}

fn chain_product(rows: usize, cols: usize) -> FinitePoset {
    let label = |i: usize, j: usize| format!("{i},{j}");
    let mut elements = Vec::new();
    let mut pairs = Vec::new();
    for i in 0..rows {
        for j in 0..cols {
            elements.push(label(i, j));
            if i + 1 < rows {
                pairs.push((label(i, j), label(i + 1, j)));
            }
            if j + 1 < cols {
                pairs.push((label(i, j), label(i, j + 1)));
            }
        }
    }
    FinitePoset::new(elements, &pairs, "0,0").unwrap()
}

fn diamond_m3() -> FinitePoset {
    let elements = ["bot", "a", "b", "c", "top"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    FinitePoset::new(
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
    .unwrap()
}

fn pentagon_n5() -> FinitePoset {
    let elements = ["bot", "a", "c", "b", "top"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    FinitePoset::new(
        elements,
        &[("bot", "a"), ("a", "c"), ("c", "top"), ("bot", "b"), ("b", "top")],
        "bot",
    )
    .unwrap()
}

fn lattice_pool() -> impl Strategy<Value = FinitePoset> {
    (0usize..8).prop_map(|k| match k {
        0 => chain(2),
        1 => chain(4),
        2 => chain(6),
        3 => chain_product(2, 3),
        4 => chain_product(3, 4),
        5 => FinitePoset::powerset(3).unwrap(),
        6 => diamond_m3(),
        7 => pentagon_n5(),
        _ => unreachable!(),
    })
}

fn lattice_and_raw_map() -> impl Strategy<Value = (FinitePoset, Vec<usize>)> {
    lattice_pool().prop_flat_map(|p| {
        let n = p.len();
        (Just(p), prop::collection::vec(0..n, n))
    })
}

fn join(p: &FinitePoset, a: usize, b: usize) -> usize {
    let ups: Vec<usize> = (0..p.len())
        .filter(|&c| p.leq(a, c) && p.leq(b, c))
        .collect();
    *ups.iter()
        .find(|&&m| ups.iter().all(|&c| p.leq(m, c)))
        .expect("every pool member is a lattice")
}

/// Turn an arbitrary self-map into a monotone one by joining the raw images
/// over the whole down-set of each point.
fn monotonize(p: &FinitePoset, raw: &[usize]) -> Vec<usize> {
    (0..p.len())
        .map(|x| {
            (0..p.len())
                .filter(|&y| p.leq(y, x))
                .map(|y| raw[y])
                .reduce(|a, b| join(p, a, b))
                .expect("down-sets are never empty")
        })
        .collect()
}

fn brute_fixed_indices(f: &[usize]) -> Vec<usize> {
    (0..f.len()).filter(|&x| f[x] == x).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn prefixed_filter_agrees_with_direct_comparison((p, raw) in lattice_and_raw_map()) {
        let f = monotonize(&p, &raw);
        let by_filter = fixpoints_via_prefixed(&p, &f).unwrap();
        let direct: Vec<String> = brute_fixed_indices(&f)
            .into_iter()
            .map(|x| p.elements()[x].clone())
            .collect();
        prop_assert_eq!(by_filter, direct);
    }

    #[test]
    fn kleene_limit_is_the_least_fixed_point((p, raw) in lattice_and_raw_map()) {
        let f = monotonize(&p, &raw);
        let lfp = kleene_lfp(&p, &f).unwrap();
        prop_assert_eq!(f[lfp.index], lfp.index);
        for x in brute_fixed_indices(&f) {
            prop_assert!(
                p.leq(lfp.index, x),
                "{} is a fixed point below the reported least one", x
            );
        }
    }

    #[test]
    fn monotonized_maps_are_continuous((p, raw) in lattice_and_raw_map()) {
        let f = monotonize(&p, &raw);
        let report = check_scott_continuity(&p, &f).unwrap();
        let continuous = matches!(report, ContinuityReport::Continuous { .. });
        prop_assert!(continuous, "expected a continuous verdict, got {:?}", report);
    }

    #[test]
    fn extensive_climbs_stabilize_above_every_start((p, raw) in lattice_and_raw_map()) {
        let f = monotonize(&p, &raw);
        let h: Vec<usize> = (0..p.len()).map(|x| join(&p, x, f[x])).collect();
        for start in 0..p.len() {
            let r = climb_extensive(&p, &h, p.elements()[start].as_str()).unwrap();
            prop_assert!(p.leq(start, r.index));
            prop_assert_eq!(h[r.index], r.index);
            if h[start] == start {
                prop_assert_eq!(r.index, start);
                prop_assert_eq!(r.steps, 0);
            }
        }
    }

    #[test]
    fn monotonicity_witnesses_are_genuine((p, raw) in lattice_and_raw_map()) {
        match check_monotone(&p, &raw).unwrap() {
            MonotoneReport::Monotone => {
                for x in 0..p.len() {
                    for y in 0..p.len() {
                        if p.leq(x, y) {
                            prop_assert!(p.leq(raw[x], raw[y]));
                        }
                    }
                }
            }
            MonotoneReport::Violation { x, y } => {
                let xi = p.index_of(&x).unwrap();
                let yi = p.index_of(&y).unwrap();
                prop_assert!(p.leq(xi, yi));
                prop_assert!(!p.leq(raw[xi], raw[yi]));
            }
        }
    }
}
