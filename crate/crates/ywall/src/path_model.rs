//! Independent realization of the same highest weight crystal as truncated
//! ground-state paths: finite element words with a virtual head standing in
//! for the infinite repeating tail.
//!
//! Operators are computed by recursive two-factor splitting (prefix, last)
//! using the tensor max-formulas, not by signature cancellation, so this
//! module is a genuinely separate oracle for the wall construction.

use std::collections::HashMap;

use crate::cartan::{AffineType, Weight, RANK};
use crate::crystal::{CrystalGraph, ElementId};
use crate::exec::{map_collect, Parallelism};
use crate::perfect::{build, ground_state_path, PerfectCrystal, PerfectError};

/// A truncated path: elements left to right after the virtual head. The
/// head carries eps = 0, phi_i = lambda(h_i), wt = lambda. Words are kept
/// canonical: leading ground elements are absorbed into the head.
pub type PathWord = Vec<ElementId>;

#[derive(Debug, Clone)]
pub struct PathModel {
    lambda: Weight,
    crystal: PerfectCrystal,
    ground: ElementId,
}

impl PathModel {
    pub fn new(ty: AffineType, lambda: Weight) -> Result<PathModel, PerfectError> {
        let crystal = build(ty);
        let ground = ground_state_path(&crystal, &lambda)?;
        Ok(PathModel {
            lambda,
            crystal,
            ground,
        })
    }

    pub fn highest_weight(&self) -> Weight {
        self.lambda
    }

    pub fn ground_word(&self) -> PathWord {
        Vec::new()
    }

    /// `<h_i, wt(head (x) word)>`
    pub fn pairing(&self, word: &[ElementId], i: usize) -> i64 {
        self.lambda.pair_coroot(i)
            + word
                .iter()
                .map(|&x| self.crystal.graph().weight_of(x).pair_coroot(i))
                .sum::<i64>()
    }

    /// phi by left-to-right folding of phi(l (x) r) = max(phi r, phi l + <h_i, wt r>).
    pub fn phi(&self, word: &[ElementId], i: usize) -> i64 {
        let mut phi = self.lambda.pair_coroot(i);
        for &x in word {
            let g = self.crystal.graph();
            phi = g.phi(x, i).max(phi + g.weight_of(x).pair_coroot(i));
        }
        phi
    }

    /// eps by folding eps(l (x) r) = max(eps l, eps r - <h_i, wt l>).
    pub fn epsilon(&self, word: &[ElementId], i: usize) -> i64 {
        let mut eps = 0;
        let mut wt = self.lambda.pair_coroot(i);
        for &x in word {
            let g = self.crystal.graph();
            eps = eps.max(g.epsilon(x, i) - wt);
            wt += g.weight_of(x).pair_coroot(i);
        }
        eps
    }

    fn canonicalize(&self, mut word: PathWord) -> PathWord {
        let strip = word.iter().take_while(|&&x| x == self.ground).count();
        word.drain(..strip);
        word
    }

    /// Act with f_i inside word[..len]; false means the bare head was
    /// selected and a tail element must be materialized first.
    fn f_rec(&self, word: &mut PathWord, len: usize, i: usize) -> bool {
        if len == 0 {
            return false;
        }
        let last = word[len - 1];
        if self.phi(&word[..len - 1], i) > self.crystal.graph().epsilon(last, i) {
            self.f_rec(word, len - 1, i)
        } else {
            word[len - 1] = self
                .crystal
                .graph()
                .f(last, i)
                .expect("the selected factor has phi > 0");
            true
        }
    }

    fn e_rec(&self, word: &mut PathWord, len: usize, i: usize) {
        assert!(len > 0, "the head has eps = 0 and can never be raised");
        let last = word[len - 1];
        if self.phi(&word[..len - 1], i) >= self.crystal.graph().epsilon(last, i) {
            self.e_rec(word, len - 1, i)
        } else {
            word[len - 1] = self
                .crystal
                .graph()
                .e(last, i)
                .expect("the selected factor has eps > 0");
        }
    }

    pub fn f(&self, word: &[ElementId], i: usize) -> Option<PathWord> {
        if self.phi(word, i) == 0 {
            return None;
        }
        let mut w = word.to_vec();
        let len = w.len();
        if !self.f_rec(&mut w, len, i) {
            // the head absorbed the action: one explicit tail element
            // carries it instead
            w.insert(0, self.ground);
            let len = w.len();
            let acted = self.f_rec(&mut w, len, i);
            assert!(acted, "materialized tail element must carry the action");
        }
        Some(self.canonicalize(w))
    }

    pub fn e(&self, word: &[ElementId], i: usize) -> Option<PathWord> {
        if self.epsilon(word, i) == 0 {
            return None;
        }
        let mut w = word.to_vec();
        let len = w.len();
        self.e_rec(&mut w, len, i);
        Some(self.canonicalize(w))
    }

    pub fn render(&self, word: &[ElementId]) -> String {
        let mut parts = vec!["...".to_string()];
        for &x in word {
            parts.push(self.crystal.graph().label(x).to_string());
        }
        format!("({})", parts.join(","))
    }

    /// Same breadth-first generation scheme as the wall crystal.
    pub fn generate(&self, depth: usize, mode: Parallelism) -> PathCrystal {
        let ground = self.ground_word();
        let mut words = vec![ground.clone()];
        let mut index: HashMap<PathWord, usize> = HashMap::from([(ground.clone(), 0)]);
        let mut frontier = vec![ground];

        for _ in 0..depth {
            let images = map_collect(mode, frontier, |w| {
                (0..RANK)
                    .filter_map(|i| self.f(&w, i))
                    .collect::<Vec<PathWord>>()
            });
            let mut next: Vec<PathWord> = images
                .into_iter()
                .flatten()
                .filter(|w| !index.contains_key(w))
                .collect();
            next.sort();
            next.dedup();
            for w in &next {
                index.insert(w.clone(), words.len());
                words.push(w.clone());
            }
            frontier = next;
            if frontier.is_empty() {
                break;
            }
        }

        let labels = words.iter().map(|w| self.render(w)).collect();
        let mut graph =
            CrystalGraph::new(self.crystal.graph().affine_type(), labels).expect("unique words");
        for w in &words {
            let src = index[w];
            for i in 0..RANK {
                if let Some(fw) = self.f(w, i) {
                    if let Some(&dst) = index.get(&fw) {
                        graph.add_edge(src, i, dst).expect("lowering is injective");
                    }
                }
            }
        }
        PathCrystal {
            graph,
            words,
            depth,
        }
    }
}

#[derive(Debug)]
pub struct PathCrystal {
    pub graph: CrystalGraph,
    pub words: Vec<PathWord>,
    pub depth: usize,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn model(ty: AffineType, i: usize) -> PathModel {
        PathModel::new(ty, Weight::fundamental(i)).unwrap()
    }

    #[test]
    fn ground_word_statistics() {
        let m = model(AffineType::G2_1, 2);
        let g = m.ground_word();
        for i in 0..RANK {
            assert_eq!(m.epsilon(&g, i), 0);
            assert_eq!(m.phi(&g, i), i64::from(i == 2));
            assert_eq!(m.e(&g, i), None);
        }
    }

    #[test]
    fn first_lowering_materializes_one_element() {
        let m = model(AffineType::D4_3, 0);
        let g = m.ground_word();
        let u1 = m.crystal.graph().element_by_label("u1").unwrap();
        assert_eq!(m.f(&g, 0), Some(vec![u1]));
        assert_eq!(m.f(&g, 1), None);
        assert_eq!(m.e(&[u1], 0), Some(vec![]));
    }

    #[test]
    fn operators_are_mutually_inverse() {
        for (ty, hw) in [
            (AffineType::D4_3, 0),
            (AffineType::G2_1, 0),
            (AffineType::G2_1, 2),
        ] {
            let m = model(ty, hw);
            let pc = m.generate(5, Parallelism::Sequential);
            for w in &pc.words {
                for i in 0..RANK {
                    if let Some(fw) = m.f(w, i) {
                        assert_eq!(m.e(&fw, i).as_ref(), Some(w));
                    }
                    if let Some(ew) = m.e(w, i) {
                        assert_eq!(m.f(&ew, i).as_ref(), Some(w));
                    }
                    assert_eq!(m.phi(w, i) - m.epsilon(w, i), m.pairing(w, i));
                }
            }
        }
    }

    #[test]
    fn generation_is_mode_independent() {
        let m = model(AffineType::G2_1, 0);
        let seq = m.generate(5, Parallelism::Sequential);
        for &mode in Parallelism::ALL {
            let other = m.generate(5, mode);
            assert_eq!(other.words, seq.words);
            assert_eq!(other.graph.edges(), seq.graph.edges());
        }
    }
}
