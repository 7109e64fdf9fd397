//! Randomized property tests: tensor statistics, affine identities, and
//! random operator words on walls vs the path model.

use proptest::prelude::*;

use ywall::cartan::{level_one_dominant, simple_root_as_weight, AffineType, RANK};
use ywall::energy::{
    affine_tensor_e, affine_tensor_f, ground_pair, h_aff, r_matrix, solve_energy, AffineElement,
};
use ywall::path_model::PathModel;
use ywall::perfect::build;
use ywall::wall::WallModel;
use ywall::ElementId;

fn arb_type() -> impl Strategy<Value = AffineType> {
    prop_oneof![Just(AffineType::D4_3), Just(AffineType::G2_1)]
}

proptest! {
    #[test]
    fn tensor_statistics_max_formulas(
        ty in arb_type(),
        a in 0usize..15,
        b in 0usize..15,
        i in 0usize..RANK,
    ) {
        let p = build(ty);
        let g = p.graph();
        let (a, b) = (ElementId(a % g.len()), ElementId(b % g.len()));
        let t = g.tensor(g).unwrap();
        let ab = g.tensor_index(g.len(), a, b);
        let wa = g.weight_of(a).pair_coroot(i);
        let wb = g.weight_of(b).pair_coroot(i);
        prop_assert_eq!(t.epsilon(ab, i), g.epsilon(a, i).max(g.epsilon(b, i) - wa));
        prop_assert_eq!(t.phi(ab, i), g.phi(b, i).max(g.phi(a, i) + wb));
    }

    #[test]
    fn r_matrix_random_states(
        ty in arb_type(),
        x in 0usize..15,
        y in 0usize..15,
        m in -5i64..=5,
        n in -5i64..=5,
        i in 0usize..RANK,
    ) {
        let p = build(ty);
        let table = solve_energy(&p, ground_pair(&p)).unwrap();
        let len = p.graph().len();
        let x = AffineElement::new(ElementId(x % len), m);
        let y = AffineElement::new(ElementId(y % len), n);
        let (rx, ry) = r_matrix(&table, x, y);

        // an involution that negates the affine energy
        prop_assert_eq!(r_matrix(&table, rx, ry), (x, y));
        prop_assert_eq!(h_aff(&table, rx, ry), -h_aff(&table, x, y));

        // commutes with the Kashiwara operators
        let lhs = affine_tensor_f(&p, x, y, i).map(|(a, b)| r_matrix(&table, a, b));
        prop_assert_eq!(lhs, affine_tensor_f(&p, rx, ry, i));
        let lhs = affine_tensor_e(&p, x, y, i).map(|(a, b)| r_matrix(&table, a, b));
        prop_assert_eq!(lhs, affine_tensor_e(&p, rx, ry, i));
    }

    #[test]
    fn random_operator_words_agree_across_models(
        ty in arb_type(),
        which in 0usize..2,
        word in proptest::collection::vec((0usize..RANK, any::<bool>()), 0..25),
    ) {
        let lams = level_one_dominant(ty);
        let lam = lams[which % lams.len()];
        let walls = WallModel::new(ty, lam).unwrap();
        let paths = PathModel::new(ty, lam).unwrap();

        let mut w = walls.ground_wall();
        let mut p = paths.ground_word();
        for (i, lower) in word {
            let (nw, np) = if lower {
                (walls.f(&w, i), paths.f(&p, i))
            } else {
                (walls.e(&w, i), paths.e(&p, i))
            };
            // defined on one model iff defined on the other
            prop_assert_eq!(nw.is_some(), np.is_some());
            let (Some(nw), Some(np)) = (nw, np) else { break };

            // step invariants on the wall side
            prop_assert!(walls.is_reduced(&nw));
            let step = simple_root_as_weight(ty, i);
            let expect = if lower {
                walls.weight(&w) - step
            } else {
                walls.weight(&w) + step
            };
            prop_assert_eq!(walls.weight(&nw), expect);

            // the wall's element sequence is the path word
            prop_assert_eq!(&walls.to_path(&nw), &np);

            w = nw;
            p = np;
        }

        // shared statistics at wherever the walk ended
        for i in 0..RANK {
            prop_assert_eq!(walls.epsilon(&w, i), paths.epsilon(&p, i));
            prop_assert_eq!(walls.phi(&w, i), paths.phi(&p, i));
        }
    }
}
