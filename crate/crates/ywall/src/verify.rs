//! The verification suites behind `ywall verify`: each returns a Report of
//! labelled pass/fail checks and is also what the acceptance tests drive.

use crate::cartan::{level_one_dominant, simple_root_as_weight, AffineType, RANK};
use crate::crystal::is_isomorphic;
use crate::energy::{
    closed_form_table, fixture_table, ground_pair, solve_energy, verify_r_matrix_with,
};
use crate::exec::Parallelism;
use crate::path_model::PathModel;
use crate::perfect::{build, verify_perfect};
use crate::report::Report;
use crate::wall::WallModel;

/// (type, level-1 dominant weight) pairs with a wall model.
pub fn wall_cases() -> Vec<WallModel> {
    AffineType::ALL
        .into_iter()
        .flat_map(|ty| {
            level_one_dominant(ty)
                .into_iter()
                .map(move |lam| WallModel::new(ty, lam).expect("level-1 dominant"))
        })
        .collect()
}

/// Three independent energy tables must agree entrywise for both types.
pub fn energy_suite() -> Report {
    let mut report = Report::new("energy");
    for ty in AffineType::ALL {
        let p = build(ty);
        let solved = match solve_energy(&p, ground_pair(&p)) {
            Ok(t) => t,
            Err(e) => {
                report.add(format!("{ty}: recurrence solvable"), false, e.to_string());
                continue;
            }
        };
        let entries = solved.size() * solved.size();
        for (name, other) in [
            ("golden table", fixture_table(ty)),
            ("closed-form sets", closed_form_table(ty)),
        ] {
            let diff = solved.diff(&other);
            report.add(
                format!("{ty}: recurrence vs {name}"),
                diff.is_empty(),
                if diff.is_empty() {
                    format!("{entries} entries agree")
                } else {
                    format!("{} disagreements", diff.len())
                },
            );
        }
    }
    report
}

pub fn perfect_suite() -> Report {
    let mut report = Report::new("perfect");
    for ty in AffineType::ALL {
        report.merge(verify_perfect(&build(ty)));
    }
    report
}

pub fn rmatrix_suite(index_bound: i64, mode: Parallelism) -> Report {
    let mut report = Report::new("rmatrix");
    for ty in AffineType::ALL {
        report.merge(verify_r_matrix_with(ty, index_bound, mode));
    }
    report
}

/// Crystal properties of the generated wall sets plus the adjacency data.
pub fn walls_suite(depth: usize, mode: Parallelism) -> Report {
    let mut report = Report::new("walls");
    for m in wall_cases() {
        let ty = m.affine_type();
        let lam = m.highest_weight();
        let case = format!("{ty} at {lam}");
        let wc = m.generate(depth, mode);

        let all_reduced = wc.walls.iter().all(|w| m.is_reduced(w));
        report.add(
            format!("{case}: all {} walls reduced", wc.walls.len()),
            all_reduced,
            "",
        );

        let mut inverse_ok = true;
        let mut weight_ok = true;
        for w in &wc.walls {
            let wt = m.weight(w);
            for i in 0..RANK {
                weight_ok &= m.phi(w, i) - m.epsilon(w, i) == wt.pair_coroot(i);
                if let Some(fw) = m.f(w, i) {
                    inverse_ok &= m.e(&fw, i).as_ref() == Some(w);
                    weight_ok &= m.weight(&fw) == wt - simple_root_as_weight(ty, i);
                }
                if let Some(ew) = m.e(w, i) {
                    inverse_ok &= m.f(&ew, i).as_ref() == Some(w);
                }
            }
        }
        report.add(format!("{case}: e/f mutually inverse"), inverse_ok, "");
        report.add(
            format!("{case}: phi - eps pairs with the weight and f steps by -alpha_i"),
            weight_ok,
            "",
        );

        let tops = wc
            .walls
            .iter()
            .filter(|w| (0..RANK).all(|i| m.epsilon(w, i) == 0))
            .count();
        report.add(
            format!("{case}: unique highest weight wall"),
            tops == 1 && m.weight(&m.ground_wall()) == lam,
            format!("{tops} raising-closed walls"),
        );
    }

    for ty in AffineType::ALL {
        let m = WallModel::new(ty, crate::cartan::Weight::fundamental(0)).expect("Lambda_0");
        let pairs = m.enumerate_reduced_adjacent_pairs();
        let expected = m.perfect_crystal().graph().len().pow(2);
        report.add(
            format!("{ty}: reduced adjacent pair count"),
            pairs.len() == expected,
            format!("{} of {expected}", pairs.len()),
        );
        if let Some(ledger) = m.block_ledger() {
            let nonneg = pairs
                .iter()
                .all(|&(l, r, _)| ledger.adjacency_delta_blocks(m.energy_table(), l, r) >= 0);
            report.add(
                format!("{ty}: adjacent block growth nonnegative"),
                nonneg,
                "",
            );
        }
    }
    report
}

/// Wall crystal vs truncated path crystal: colored-graph isomorphism seeded
/// at the two highest weight elements.
pub fn paths_suite(depth: usize, mode: Parallelism) -> Report {
    let mut report = Report::new("paths");
    for m in wall_cases() {
        let ty = m.affine_type();
        let lam = m.highest_weight();
        let walls = m.generate(depth, mode);
        let paths = PathModel::new(ty, lam)
            .expect("level-1 dominant")
            .generate(depth, mode);
        let seed = [(
            walls
                .index_of(&m.ground_wall())
                .expect("ground wall present"),
            crate::crystal::ElementId(0),
        )];
        let iso = is_isomorphic(&walls.graph, &paths.graph, &seed);
        report.add(
            format!("{ty} at {lam}: wall and path crystals isomorphic to depth {depth}"),
            iso,
            format!("{} elements", walls.graph.len()),
        );
    }
    report
}

/// Everything, at the depths/bounds used by `ywall verify all`.
pub fn full_suite(mode: Parallelism) -> Report {
    let mut report = Report::new("all");
    report.merge(energy_suite());
    report.merge(perfect_suite());
    report.merge(rmatrix_suite(3, mode));
    report.merge(walls_suite(8, mode));
    report.merge(paths_suite(8, mode));
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_suites_pass() {
        let mode = Parallelism::default();
        for report in [
            energy_suite(),
            perfect_suite(),
            rmatrix_suite(2, mode),
            walls_suite(6, mode),
            paths_suite(6, mode),
        ] {
            assert!(report.passed(), "{report}");
        }
    }
}
