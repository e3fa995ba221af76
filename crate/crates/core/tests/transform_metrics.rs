mod support;

use rotdraw_core::gen::perturb;
use rotdraw_core::*;
use support::*;

/// Edges `v_i v_j`, `j < i`, whose crossings with `K_{i-1}` come in a
/// different order than in the target.
fn mismatched(d: &GoodDrawing, target: &CrossingData, i: usize) -> Vec<usize> {
    let here = d.crossing_data_of().unwrap().restrict(i);
    let there = target.restrict(i);
    (1..i).filter(|&j| here.list(e(j, i)) != there.list(e(j, i))).collect()
}

#[test]
fn mismatched_routes_never_increase_within_a_stage() {
    let mut checked = 0;
    for (kind, n, base) in bases(6..=8) {
        for seed in 0..25 {
            let d1 = perturb(&base, 30, seed).unwrap().drawing;
            let d2 = perturb(&base, 30, seed + 1000).unwrap().drawing;
            let target = d2.crossing_data_of().unwrap();
            let report = transform_with_report(&d1, &d2).unwrap();
            let mut cur = d1.clone();
            let mut at = 0;
            let mut last: Option<(usize, usize)> = None;
            for stage in &report.stages {
                let before = mismatched(&cur, &target, stage.i);
                cur = apply_sequence(&cur, &report.moves[at..at + stage.moves]).unwrap();
                at += stage.moves;
                let after = mismatched(&cur, &target, stage.i);
                assert!(
                    after.len() <= before.len() && !after.contains(&stage.j),
                    "{kind} n={n} seed={seed} stage {stage:?}: {before:?} -> {after:?}"
                );
                if let Some((i, j)) = last {
                    assert!(i < stage.i || (i == stage.i && j < stage.j));
                }
                last = Some((stage.i, stage.j));
                checked += 1;
            }
            assert_eq!(at, report.moves.len());
            assert!(drawings_equivalent(&cur, &d2));
        }
    }
    assert!(checked > 0);
}
