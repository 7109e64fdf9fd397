//! Acceptance gate: one test per criterion, each printing a single
//! pass/fail line (visible with `--nocapture`) and asserting it.

use std::time::{Duration, Instant};

use ywall::cartan::{level_one_dominant, AffineType, Weight};
use ywall::column::{class_by_label, psi, psi_inverse, signature, ColumnState};
use ywall::crystal::is_isomorphic;
use ywall::energy::{closed_form_table, fixture_table, ground_pair, solve_energy};
use ywall::exec::Parallelism;
use ywall::path_model::PathModel;
use ywall::perfect::{build, verify_perfect};
use ywall::verify;
use ywall::wall::{WallModel, YoungWall};

fn gate(criterion: &str, passed: bool, detail: String) {
    let status = if passed { "PASS" } else { "FAIL" };
    println!("acceptance {criterion}: {status} ({detail})");
    assert!(passed, "acceptance {criterion} failed: {detail}");
}

fn m_ground(p: &ywall::PerfectCrystal) -> ywall::column::ColumnClass {
    psi_inverse(p.minimal_by_weight()[0].1)
}

fn within(budget: Duration, start: Instant, label: &str) -> (bool, String) {
    let took = start.elapsed();
    (
        took <= budget,
        format!("{label}, {took:.2?} of {budget:.2?} budget"),
    )
}

#[test]
fn criterion_1_energy_tables() {
    let start = Instant::now();
    let mut entries = 0;
    let mut agree = true;
    for ty in AffineType::ALL {
        let p = build(ty);
        let solved = solve_energy(&p, ground_pair(&p)).expect("recurrence solvable");
        entries += solved.size() * solved.size();
        agree &= solved.diff(&fixture_table(ty)).is_empty();
        agree &= solved.diff(&closed_form_table(ty)).is_empty();
    }
    let (in_time, timing) = within(Duration::from_secs(1), start, "64 + 225 entries");
    gate(
        "1 (energy tables, three routes)",
        agree && entries == 64 + 225 && in_time,
        timing,
    );
}

#[test]
fn criterion_2_perfect_conditions() {
    let start = Instant::now();
    let mut ok = true;
    for ty in AffineType::ALL {
        ok &= verify_perfect(&build(ty)).passed();
    }
    let (in_time, timing) = within(Duration::from_secs(1), start, "conditions (2)-(5)");
    gate("2 (perfect crystal conditions)", ok && in_time, timing);
}

#[test]
fn criterion_3_r_matrix() {
    let start = Instant::now();
    let report = verify::rmatrix_suite(3, Parallelism::default());
    let (in_time, timing) = within(Duration::from_secs(10), start, "all pairs, |m|,|n| <= 3");
    gate(
        "3 (R-matrix and affine energy)",
        report.passed() && in_time,
        timing,
    );
}

#[test]
fn criterion_4_class_identification() {
    // the class graphs, rebuilt from the fixture edge lists under the class
    // naming, are isomorphic to the perfect crystals from the ground seed
    let mut ok = true;
    for ty in AffineType::ALL {
        let p = build(ty);
        let labels: Vec<String> = p
            .graph()
            .elements()
            .map(|b| ywall::column::class_label(&p, psi_inverse(b)))
            .collect();
        let mut class_graph =
            ywall::CrystalGraph::new(ty, labels).expect("class labels are unique");
        for (src, color, dst) in ywall::fixtures::edge_list(ty) {
            let s = p.graph().element_by_label(&src).expect("fixture label");
            let d = p.graph().element_by_label(&dst).expect("fixture label");
            class_graph.add_edge(s.0, color, d.0).expect("fixture edge");
        }
        let ground = psi(m_ground(&p));
        ok &= is_isomorphic(&class_graph, p.graph(), &[(ground, ground)]);
    }

    // all 24 recorded signature entries for the d4_3 classes
    let recorded: [(&str, [(i64, i64); 3]); 8] = [
        ("cphi", [(1, 1), (0, 0), (0, 0)]),
        ("c1", [(2, 0), (0, 1), (0, 0)]),
        ("c2", [(1, 0), (1, 0), (0, 1)]),
        ("c3", [(1, 0), (0, 2), (1, 0)]),
        ("c0", [(0, 0), (1, 1), (0, 0)]),
        ("c3b", [(0, 1), (2, 0), (0, 1)]),
        ("c2b", [(0, 1), (0, 1), (1, 0)]),
        ("c1b", [(0, 2), (1, 0), (0, 0)]),
    ];
    let p = build(AffineType::D4_3);
    let mut matched = 0;
    for (label, signs) in recorded {
        let c = class_by_label(&p, label).expect("known class");
        for (i, &expected) in signs.iter().enumerate() {
            matched += usize::from(signature(&p, c, i) == expected);
        }
    }
    gate(
        "4 (class identification and signatures)",
        ok && matched == 24,
        format!("{matched}/24 signature entries"),
    );
}

#[test]
fn criterion_5_reduced_adjacency() {
    let mut ok = true;
    let mut detail = Vec::new();
    for ty in AffineType::ALL {
        let m = WallModel::new(ty, Weight::fundamental(0)).expect("Lambda_0");
        let pairs = m.enumerate_reduced_adjacent_pairs();
        let expected = m.perfect_crystal().graph().len().pow(2);
        ok &= pairs.len() == expected;
        detail.push(format!("{ty}: {} pairs", pairs.len()));
        for &(l, r, h) in &pairs {
            // the forced two-column wall is reduced and nonnegative offsets
            // suffice to place it above the ground tail
            let base = m.energy_table().get(psi(m.ground_class()), psi(l));
            let wall = YoungWall {
                cols: vec![
                    ColumnState { class: l, n: base },
                    ColumnState {
                        class: r,
                        n: base + h,
                    },
                ],
            };
            ok &= m.is_reduced(&wall);
            if let Some(ledger) = m.block_ledger() {
                ok &= ledger.adjacency_delta_blocks(m.energy_table(), l, r) >= 0;
            }
        }
    }
    gate("5 (reduced adjacent pairs)", ok, detail.join(", "));
}

#[test]
fn criterion_6_wall_crystal_properties() {
    let start = Instant::now();
    let report = verify::walls_suite(10, Parallelism::default());
    let (in_time, timing) = within(Duration::from_secs(60), start, "depth 10, three crystals");
    gate(
        "6 (wall crystal properties)",
        report.passed() && in_time,
        timing,
    );
}

#[test]
fn criterion_7_wall_path_isomorphism() {
    let mut ok = true;
    let mut sizes = Vec::new();
    for ty in AffineType::ALL {
        for lam in level_one_dominant(ty) {
            let m = WallModel::new(ty, lam).expect("level-1 dominant");
            let walls = m.generate(8, Parallelism::default());
            let paths = PathModel::new(ty, lam)
                .expect("level-1 dominant")
                .generate(8, Parallelism::default());
            let seed = [(
                walls.index_of(&m.ground_wall()).expect("ground present"),
                ywall::ElementId(0),
            )];
            ok &= is_isomorphic(&walls.graph, &paths.graph, &seed);
            sizes.push(format!("{ty}@{lam}: {}", walls.graph.len()));
        }
    }
    gate("7 (wall vs path model, depth 8)", ok, sizes.join(", "));
}

#[test]
fn criterion_8_spot_values() {
    let m = WallModel::new(AffineType::D4_3, Weight::fundamental(0)).expect("Lambda_0");
    let col = |label: &str, n: i64| ColumnState {
        class: class_by_label(m.perfect_crystal(), label).expect("class"),
        n,
    };

    let first = m.f(&m.ground_wall(), 0).expect("f_0 of the ground wall");
    let mut ok = first.cols == vec![col("c1", 1)];
    let a0 = ywall::cartan::simple_root_as_weight(AffineType::D4_3, 0);
    ok &= m.weight(&first) == Weight::fundamental(0) - a0;

    let wc = m.generate(6, Parallelism::default());
    let mut by_depth = vec![0usize; 7];
    for w in &wc.walls {
        by_depth[m.depth(w)] += 1;
    }
    // note: depth 5 holds two walls, not one. The depth-4 wall has weight
    // Lambda_0 - delta, so phi_0 = eps_0 + <h_0, wt> = 1 and f_0 is forced
    // to act there (seminormality); both implementations agree.
    ok &= by_depth == [1, 1, 1, 1, 1, 2, 2];
    let sixes: Vec<&YoungWall> = wc.walls.iter().filter(|w| m.depth(w) == 6).collect();
    ok &= sixes.len() == 2;
    ok &= sixes
        .iter()
        .any(|w| w.cols == vec![col("c1", 1), col("c3b", 1)]);
    ok &= sixes.iter().any(|w| w.cols == vec![col("c2b", 1)]);
    gate(
        "8 (hand-derived spot values)",
        ok,
        format!("depth profile {by_depth:?}"),
    );
}
