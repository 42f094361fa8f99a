//! Cross-module agreements: independent routes to the same answer must
//! coincide.

use std::sync::Arc;

use amc::colouring::CustomColouring;
use amc::geometry::extreme::{in_convex_hull, in_hull_bounded_denominators, is_extreme_point};
use amc::geometry::point::{PatternPair, Point};
use amc::rational::{rat, rat_to_i64};
use amc::search::{
    is_am_under, search_am_homothet, search_mono_homothet, SearchOptions, Window, WitnessKind,
};
use amc::{ramsey, Colouring};

/// Wraps a 12-periodic table as a total colouring of Z.
fn periodic_oracle(mask: u16) -> Colouring {
    Colouring::custom(CustomColouring {
        label: format!("periodic12-{mask}"),
        palette: 2,
        rule: Arc::new(move |p: &Point| {
            let v = rat_to_i64(p.x()).expect("integer points");
            Ok(((mask >> ((v - 1).rem_euclid(12)) as u16) & 1) as u32)
        }),
    })
}

#[test]
fn hales_jewett_route_agrees_with_brute_force_over_all_periodic_colourings() {
    // Exhaustive over all 4096 two-colourings of [1,12], extended with
    // period 12: the embedding route (N = 4) and the direct homothet scan
    // must agree on existence, and every embedding ratio obeys the N n^N
    // bound.
    let s = [
        Point::from_ints(&[0]).unwrap(),
        Point::from_ints(&[1]).unwrap(),
        Point::from_ints(&[2]).unwrap(),
    ];
    let window = Window::z_interval(1, 12).unwrap();
    let bound = 4 * 3u64.pow(4);
    for mask in 0u16..4096 {
        let oracle = periodic_oracle(mask);
        let direct = search_mono_homothet(&oracle, &s, &window, 5, SearchOptions::default())
            .unwrap();
        let via_hj = ramsey::gallai_via_hj(&oracle, &s, 4).unwrap();
        assert_eq!(
            direct.kind == WitnessKind::MonoHomothet,
            via_hj.kind == WitnessKind::MonoHomothet,
            "mask {mask}: direct {:?} vs embedding {:?}",
            direct.kind,
            via_hj.kind
        );
        if via_hj.kind == WitnessKind::MonoHomothet {
            via_hj.revalidate(&oracle).unwrap();
            let lam = amc::rational::parse_rat(&via_hj.transform.as_ref().unwrap().scale)
                .unwrap();
            let lam = rat_to_i64(&lam).expect("integer ratio") as u64;
            assert!(lam >= 1 && lam <= bound, "mask {mask}: ratio {lam}");
        }
    }
}

#[test]
fn every_rational_line_builtin_yields_an_am_triple() {
    // Non-monochromatic colourings of Q sampled at denominators <= 6 on
    // [-20, 20] all contain an AM positive homothet of ({0,1,2}, 0).
    let pattern = PatternPair::from_ints_1d(&[0, 1, 2], 0).unwrap();
    let window = Window::q_interval(-20, 20, 6).unwrap();
    let lemma_pattern = PatternPair::from_ints_1d(&[1, 2, 3, 5], 3).unwrap();
    let lemma_pattern2 = PatternPair::from_ints_1d(&[1, 2, 3, 5], 2).unwrap();
    let oracles = vec![
        Colouring::dyadic(),
        Colouring::block(10),
        Colouring::block(3),
        Colouring::half_line(),
        Colouring::lemma_extension_for_pattern(&lemma_pattern).unwrap(),
        Colouring::lemma_extension_for_pattern(&lemma_pattern2).unwrap(),
    ];
    for oracle in oracles {
        let witness =
            search_am_homothet(&oracle, &pattern, &window, &rat(10), SearchOptions::default())
                .unwrap();
        assert_eq!(
            witness.kind,
            WitnessKind::AmCopy,
            "no AM triple for {}",
            oracle.name()
        );
        witness.revalidate(&oracle).unwrap();
    }
}

#[test]
fn extreme_point_test_agrees_with_bounded_denominator_enumeration() {
    // Deterministic set of small integer fixtures in 1-D and 2-D; the
    // simplex route and the brute-force convex-combination search must
    // agree (denominators up to 64 cover these instances).
    let fixtures: Vec<(Vec<Vec<i64>>, usize)> = vec![
        (vec![vec![0], vec![1], vec![2]], 0),
        (vec![vec![0], vec![1], vec![2]], 1),
        (vec![vec![0], vec![3], vec![7], vec![2]], 3),
        (vec![vec![0, 0], vec![1, 0], vec![0, 1]], 0),
        (vec![vec![0, 1], vec![1, 1], vec![1, 0]], 1),
        (vec![vec![0, 0], vec![4, 0], vec![0, 4], vec![1, 1]], 3),
        (vec![vec![0, 0], vec![2, 2], vec![1, 1], vec![5, 0]], 2),
        (vec![vec![-3, 1], vec![2, -2], vec![0, 0], vec![4, 4]], 2),
    ];
    for (coords, origin) in fixtures {
        let points: Vec<Point> = coords
            .iter()
            .map(|c| Point::from_ints(c).unwrap())
            .collect();
        let pair = PatternPair::new(points.clone(), origin).unwrap();
        let fast = is_extreme_point(&pair);
        let others: Vec<&Point> = points
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != origin)
            .map(|(_, p)| p)
            .collect();
        let lp = in_convex_hull(&points[origin], &others);
        let brute = in_hull_bounded_denominators(&points[origin], &others, 64).unwrap();
        assert_eq!(fast, !lp);
        assert_eq!(
            lp, brute,
            "simplex and enumeration disagree on {coords:?} @ {origin}"
        );
    }
}

#[test]
fn planted_am_copies_are_recognised() {
    // is_am_under is the primitive the witnesses lean on; pin its
    // behaviour on both polarities.
    let oracle = Colouring::dyadic();
    let pts = |vals: &[i64]| -> Vec<Point> {
        vals.iter().map(|&v| Point::from_ints(&[v]).unwrap()).collect()
    };
    assert!(is_am_under(&oracle, &pts(&[2, 3, 4]), 0).unwrap());
    // {1, 3, 5}: all odd, monochromatic, not AM.
    assert!(!is_am_under(&oracle, &pts(&[1, 3, 5]), 0).unwrap());
    // {2, 3, 5}: 3 and 5 red, 2 blue: AM with distinguished 2, not with 3.
    assert!(is_am_under(&oracle, &pts(&[2, 3, 5]), 0).unwrap());
    assert!(!is_am_under(&oracle, &pts(&[2, 3, 5]), 1).unwrap());
}

#[test]
fn rotated_corner_search_reports_its_rotation_grid() {
    // Axis-aligned homothets of the corner pattern never produce an AM
    // copy of the nested-square colouring; rotated similar copies are
    // outside that guarantee, and the certificate records which grid was
    // scanned either way.
    let oracle = Colouring::mondrian();
    let pattern = PatternPair::new(
        vec![
            Point::from_ints(&[0, 1]).unwrap(),
            Point::from_ints(&[1, 1]).unwrap(),
            Point::from_ints(&[1, 0]).unwrap(),
        ],
        1,
    )
    .unwrap();
    let window = Window::z_box(
        Point::from_ints(&[-64, -64]).unwrap(),
        Point::from_ints(&[64, 64]).unwrap(),
    )
    .unwrap();
    let witness = amc::search::search_am_similar_2d(
        &oracle,
        &pattern,
        &window,
        &rat(8),
        3,
        SearchOptions::default(),
    )
    .unwrap();
    assert_eq!(witness.enumeration.rotation_count, Some(4));
    match witness.kind {
        WitnessKind::AmCopy => witness.revalidate(&oracle).unwrap(),
        WitnessKind::Exhausted => {}
        other => panic!("unexpected kind {other:?}"),
    }
}

#[test]
fn forcing_window_hosts_a_monochromatic_triple() {
    // Extend a longest progression-free 2-colouring of [1,8] by one point:
    // at window size 9 a monochromatic homothet of {0,1,2} is forced.
    let (outcome, _) = ramsey::vdw_number(2, 3, 16).unwrap();
    let ramsey::VdwOutcome::Exact { witness, .. } = outcome else {
        panic!("expected exact");
    };
    for extension in 0..2u32 {
        let mut table = witness.clone();
        table.push(extension);
        let oracle = ramsey::table_oracle(1, &table);
        let s = [
            Point::from_ints(&[0]).unwrap(),
            Point::from_ints(&[1]).unwrap(),
            Point::from_ints(&[2]).unwrap(),
        ];
        let window = Window::z_interval(1, 9).unwrap();
        let hit =
            search_mono_homothet(&oracle, &s, &window, 4, SearchOptions::default()).unwrap();
        assert_eq!(hit.kind, WitnessKind::MonoHomothet, "extension {extension}");
        hit.revalidate(&oracle).unwrap();
    }
}

#[test]
fn vdw_engine_verified_by_exhaustive_enumeration() {
    // The backtracking result at (2,3) and the brute-force census agree:
    // AP-free colourings of [1,8] exist, none of [1,9].
    let (outcome, _) = ramsey::vdw_number(2, 3, 16).unwrap();
    let ramsey::VdwOutcome::Exact { value, witness } = outcome else {
        panic!("expected exact value");
    };
    assert_eq!(value, 9);
    assert!(ramsey::is_ap_free(&witness, 3));
    let free8 = ramsey::brute_force_ap_free(2, 3, 8);
    assert!(free8.contains(&witness.to_vec()));
    assert!(ramsey::brute_force_ap_free(2, 3, 9).is_empty());
}
