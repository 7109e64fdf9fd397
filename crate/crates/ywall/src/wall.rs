//! Reduced Young walls and the crystal structure on them: signature
//! cancellation, Kashiwara operators, weights, and breadth-first generation
//! of the highest weight crystal.
//!
//! A wall is stored as its explicit columns left to right; an infinite tail
//! of ground columns (the repeating element of the ground-state path, with
//! no added 0-blocks) is implicit on the left. Walls are kept canonical:
//! explicit leading ground columns with n = 0 are stripped.

use std::collections::HashMap;

use crate::cartan::{
    classical_root_coordinates, null_root, simple_root_as_weight, AffineType, Weight, RANK,
};
use crate::column::{psi, psi_inverse, signature, BlockLedgerD4, ColumnClass, ColumnState};
use crate::crystal::{CrystalGraph, ElementId};
use crate::energy::{ground_pair, solve_energy, EnergyTable};
use crate::exec::{map_collect, Parallelism};
use crate::perfect::{build, ground_state_path, PerfectCrystal, PerfectError};

/// A reduced wall in canonical form; columns run left to right away from
/// the implicit ground tail.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct YoungWall {
    pub cols: Vec<ColumnState>,
}

/// Everything needed to run the wall crystal of one highest weight:
/// the perfect crystal, the solved energy table, and the ground column.
#[derive(Debug, Clone)]
pub struct WallModel {
    lambda: Weight,
    crystal: PerfectCrystal,
    energy: EnergyTable,
    ground_class: ColumnClass,
    ledger: Option<BlockLedgerD4>,
}

/// A finite truncation of the wall crystal: all walls reachable from the
/// ground wall by at most `depth` lowering operators, with the induced
/// edges among them.
#[derive(Debug)]
pub struct WallCrystal {
    pub graph: CrystalGraph,
    pub walls: Vec<YoungWall>,
    pub depth: usize,
}

impl WallModel {
    pub fn new(ty: AffineType, lambda: Weight) -> Result<WallModel, PerfectError> {
        let crystal = build(ty);
        let ground = ground_state_path(&crystal, &lambda)?;
        let energy = solve_energy(&crystal, ground_pair(&crystal)).expect("energy recurrence");
        let ledger = (ty == AffineType::D4_3).then(|| BlockLedgerD4::new(&crystal));
        Ok(WallModel {
            lambda,
            crystal,
            energy,
            ground_class: psi_inverse(ground),
            ledger,
        })
    }

    pub fn affine_type(&self) -> AffineType {
        self.crystal.graph().affine_type()
    }

    pub fn highest_weight(&self) -> Weight {
        self.lambda
    }

    pub fn perfect_crystal(&self) -> &PerfectCrystal {
        &self.crystal
    }

    pub fn energy_table(&self) -> &EnergyTable {
        &self.energy
    }

    pub fn ground_class(&self) -> ColumnClass {
        self.ground_class
    }

    pub fn block_ledger(&self) -> Option<&BlockLedgerD4> {
        self.ledger.as_ref()
    }

    pub fn ground_wall(&self) -> YoungWall {
        YoungWall { cols: Vec::new() }
    }

    fn is_ground(&self, c: ColumnState) -> bool {
        c.class == self.ground_class && c.n == 0
    }

    fn canonicalize(&self, mut w: YoungWall) -> YoungWall {
        let strip = w.cols.iter().take_while(|&&c| self.is_ground(c)).count();
        w.cols.drain(..strip);
        w
    }

    /// The defining condition: each column carries exactly
    /// `n_left + H(left (x) right)` added 0-blocks, starting from the
    /// ground tail at n = 0.
    pub fn is_reduced(&self, w: &YoungWall) -> bool {
        let mut prev = ColumnState {
            class: self.ground_class,
            n: 0,
        };
        for &col in &w.cols {
            if col.n != prev.n + self.energy.get(psi(prev.class), psi(col.class)) {
                return false;
            }
            prev = col;
        }
        true
    }

    /// Signature word of the wall: tail pluses (phi of the infinite ground
    /// tail telescopes to lambda(h_i)), then per explicit column its minuses
    /// followed by its pluses. Owner None marks tail tokens.
    fn signature_tokens(&self, w: &YoungWall, i: usize) -> Vec<(bool, Option<usize>)> {
        let mut toks = Vec::new();
        for _ in 0..self.lambda.pair_coroot(i) {
            toks.push((true, None));
        }
        for (k, col) in w.cols.iter().enumerate() {
            let (eps, phi) = signature(&self.crystal, col.class, i);
            for _ in 0..eps {
                toks.push((false, Some(k)));
            }
            for _ in 0..phi {
                toks.push((true, Some(k)));
            }
        }
        toks
    }

    /// Cancel +- pairs left to right; what survives is -...-+...+.
    fn surviving(&self, toks: &[(bool, Option<usize>)]) -> Vec<(bool, Option<usize>)> {
        let mut stack: Vec<(bool, Option<usize>)> = Vec::new();
        for &t in toks {
            if !t.0 && matches!(stack.last(), Some(&(true, _))) {
                stack.pop();
            } else {
                stack.push(t);
            }
        }
        stack
    }

    pub fn epsilon(&self, w: &YoungWall, i: usize) -> i64 {
        self.surviving(&self.signature_tokens(w, i))
            .iter()
            .filter(|t| !t.0)
            .count() as i64
    }

    pub fn phi(&self, w: &YoungWall, i: usize) -> i64 {
        self.surviving(&self.signature_tokens(w, i))
            .iter()
            .filter(|t| t.0)
            .count() as i64
    }

    /// Lowering operator: act on the owner of the leftmost surviving plus.
    /// A tail-owned plus means a new column starts; materialize one ground
    /// column and re-run, which moves the plus onto it.
    pub fn f(&self, w: &YoungWall, i: usize) -> Option<YoungWall> {
        let mut w = w.clone();
        for _attempt in 0..2 {
            let surv = self.surviving(&self.signature_tokens(&w, i));
            match surv.iter().find(|t| t.0) {
                None => return None,
                Some(&(_, Some(k))) => {
                    let col = w.cols[k];
                    let fc = self
                        .crystal
                        .graph()
                        .f(psi(col.class), i)
                        .expect("a surviving plus forces an i-edge on the class");
                    w.cols[k] = ColumnState {
                        class: psi_inverse(fc),
                        n: col.n + i64::from(i == 0),
                    };
                    let out = self.canonicalize(w);
                    assert!(self.is_reduced(&out), "f_{i} left the reduced set");
                    return Some(out);
                }
                Some(&(_, None)) => {
                    w.cols.insert(
                        0,
                        ColumnState {
                            class: self.ground_class,
                            n: 0,
                        },
                    );
                }
            }
        }
        unreachable!("a materialized ground column owns the acting plus")
    }

    /// Raising operator: act on the owner of the rightmost surviving minus.
    /// The tail owns no minus tokens, so the owner is always explicit.
    pub fn e(&self, w: &YoungWall, i: usize) -> Option<YoungWall> {
        let surv = self.surviving(&self.signature_tokens(w, i));
        let &(_, owner) = surv.iter().rev().find(|t| !t.0)?;
        let k = owner.expect("the ground tail has no minus tokens");
        let mut w = w.clone();
        let col = w.cols[k];
        let ec = self
            .crystal
            .graph()
            .e(psi(col.class), i)
            .expect("a surviving minus forces a reverse i-edge on the class");
        w.cols[k] = ColumnState {
            class: psi_inverse(ec),
            n: col.n - i64::from(i == 0),
        };
        let out = self.canonicalize(w);
        assert!(self.is_reduced(&out), "e_{i} left the reduced set");
        assert!(
            out.cols.iter().all(|c| c.n >= 0),
            "e_{i} produced a negative 0-block count"
        );
        Some(out)
    }

    /// How many alpha_i were subtracted from lambda: k_0 is the total
    /// 0-block count, and k_1, k_2 follow from the classical weight of the
    /// columns because cl(alpha_0) = -(d_1 cl(alpha_1) + d_2 cl(alpha_2)).
    pub fn root_content(&self, w: &YoungWall) -> [i64; RANK] {
        let (k, _) = self.root_content_and_sum(w);
        k
    }

    fn root_content_and_sum(&self, w: &YoungWall) -> ([i64; RANK], Weight) {
        let ty = self.affine_type();
        let k0: i64 = w.cols.iter().map(|c| c.n).sum();
        let mut s = Weight::ZERO;
        for c in &w.cols {
            s = s + self.crystal.graph().weight_of(psi(c.class));
        }
        let (a, b) =
            classical_root_coordinates(ty, &s).expect("column weights lie in the root lattice");
        let d = null_root(ty).coeffs;
        ([k0, k0 * d[1] - a, k0 * d[2] - b], s)
    }

    /// wt = lambda - sum k_i alpha_i; the delta degree is -k_0. The
    /// classical part is cross-checked against the direct column sum.
    pub fn weight(&self, w: &YoungWall) -> Weight {
        let ty = self.affine_type();
        let (k, s) = self.root_content_and_sum(w);
        let mut out = self.lambda;
        for (i, &ki) in k.iter().enumerate() {
            out = out - simple_root_as_weight(ty, i).scaled(ki);
        }
        assert_eq!(
            out.classical(),
            (self.lambda + s).classical(),
            "root-content weight disagrees with the column weight sum"
        );
        assert_eq!(out.delta_degree, -k[0]);
        out
    }

    /// Total number of blocks below lambda, i.e. lowering operators applied.
    pub fn depth(&self, w: &YoungWall) -> usize {
        self.root_content(w).iter().sum::<i64>() as usize
    }

    pub fn render(&self, w: &YoungWall) -> String {
        let mut parts = vec!["...".to_string()];
        for c in &w.cols {
            parts.push(format!(
                "{}({})",
                crate::column::class_label(&self.crystal, c.class),
                c.n
            ));
        }
        format!("({})", parts.join(","))
    }

    /// The underlying element sequence, left to right, tail omitted.
    pub fn to_path(&self, w: &YoungWall) -> Vec<ElementId> {
        w.cols.iter().map(|c| psi(c.class)).collect()
    }

    /// The unique reduced wall over an element sequence: 0-block counts are
    /// forced by the reduced condition.
    pub fn from_path(&self, classes: &[ElementId]) -> YoungWall {
        let mut cols = Vec::with_capacity(classes.len());
        let mut prev = (psi(self.ground_class), 0i64);
        for &b in classes {
            let n = prev.1 + self.energy.get(prev.0, b);
            cols.push(ColumnState {
                class: psi_inverse(b),
                n,
            });
            prev = (b, n);
        }
        self.canonicalize(YoungWall { cols })
    }

    /// Every ordered class pair with the 0-block offset its reduced
    /// adjacency forces.
    pub fn enumerate_reduced_adjacent_pairs(&self) -> Vec<(ColumnClass, ColumnClass, i64)> {
        let mut out = Vec::new();
        for l in self.crystal.graph().elements() {
            for r in self.crystal.graph().elements() {
                out.push((psi_inverse(l), psi_inverse(r), self.energy.get(l, r)));
            }
        }
        out
    }

    /// Breadth-first generation from the ground wall, level by level; each
    /// level's new walls are sorted before numbering so the output is
    /// deterministic in either execution mode.
    pub fn generate(&self, depth: usize, mode: Parallelism) -> WallCrystal {
        let ground = self.ground_wall();
        let mut walls = vec![ground.clone()];
        let mut index: HashMap<YoungWall, usize> = HashMap::from([(ground.clone(), 0)]);
        let mut frontier = vec![ground];

        for _ in 0..depth {
            let images = map_collect(mode, frontier, |w| {
                (0..RANK)
                    .filter_map(|i| self.f(&w, i))
                    .collect::<Vec<YoungWall>>()
            });
            let mut next: Vec<YoungWall> = images
                .into_iter()
                .flatten()
                .filter(|w| !index.contains_key(w))
                .collect();
            next.sort();
            next.dedup();
            for w in &next {
                index.insert(w.clone(), walls.len());
                walls.push(w.clone());
            }
            frontier = next;
            if frontier.is_empty() {
                break;
            }
        }

        let labels = walls.iter().map(|w| self.render(w)).collect();
        let mut graph =
            CrystalGraph::new(self.affine_type(), labels).expect("wall renderings are unique");
        let edge_rows = map_collect(mode, walls.clone(), |w| {
            let src = index[&w];
            (0..RANK)
                .filter_map(|i| {
                    self.f(&w, i)
                        .and_then(|fw| index.get(&fw).map(|&dst| (src, i, dst)))
                })
                .collect::<Vec<_>>()
        });
        for (src, i, dst) in edge_rows.into_iter().flatten() {
            graph.add_edge(src, i, dst).expect("lowering is injective");
        }
        WallCrystal {
            graph,
            walls,
            depth,
        }
    }
}

impl WallCrystal {
    pub fn wall(&self, id: ElementId) -> &YoungWall {
        &self.walls[id.0]
    }

    pub fn index_of(&self, w: &YoungWall) -> Option<ElementId> {
        self.walls.iter().position(|x| x == w).map(ElementId)
    }

    /// (depth, weight, multiplicity) rows sorted by depth then weight.
    pub fn multiplicities(&self, model: &WallModel) -> Vec<(usize, Weight, usize)> {
        let mut counts: HashMap<(usize, [i64; RANK], i64), usize> = HashMap::new();
        for w in &self.walls {
            let wt = model.weight(w);
            *counts
                .entry((model.depth(w), wt.lambda_coeffs, wt.delta_degree))
                .or_default() += 1;
        }
        let mut out: Vec<_> = counts.into_iter().collect();
        out.sort();
        out.into_iter()
            .map(|((depth, lambda_coeffs, delta_degree), m)| {
                (
                    depth,
                    Weight {
                        lambda_coeffs,
                        delta_degree,
                    },
                    m,
                )
            })
            .collect()
    }

    /// DOT with the true wall weights (the truncated edge set cannot
    /// reproduce them as string statistics).
    pub fn export_dot(&self, model: &WallModel) -> String {
        self.graph
            .export_dot_weighted(|b| model.weight(&self.walls[b.0]))
    }

    pub fn export_json(&self, model: &WallModel) -> String {
        self.graph
            .export_json_weighted(|b| model.weight(&self.walls[b.0]))
    }
}
