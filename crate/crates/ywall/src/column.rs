//! Young-column combinatorics: the finite class sets identified with the
//! perfect-crystal elements, signatures, the d4_3 class chain, and the
//! d4_3 half-block ledger used for the block-count bookkeeping.
//!
//! g2_1 columns are handled abstractly (class + signature + 0-block count);
//! the block ledger exists for d4_3 only.

use crate::cartan::AffineType;
use crate::crystal::ElementId;
use crate::energy::EnergyTable;
use crate::perfect::PerfectCrystal;

/// One of the finitely many Young-column equivalence classes, identified
/// with an element of the perfect crystal in canonical order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ColumnClass(pub usize);

/// The index-preserving identification of column classes with crystal
/// elements.
pub fn psi(c: ColumnClass) -> ElementId {
    ElementId(c.0)
}

pub fn psi_inverse(b: ElementId) -> ColumnClass {
    ColumnClass(b.0)
}

/// Display label: "c" + the element label with its u/v prefix dropped,
/// primed for g2_1.
pub fn class_label(p: &PerfectCrystal, c: ColumnClass) -> String {
    let elem = p.graph().label(psi(c));
    match p.graph().affine_type() {
        AffineType::D4_3 => format!("c{}", &elem[1..]),
        AffineType::G2_1 => format!("c'{}", &elem[1..]),
    }
}

pub fn class_by_label(p: &PerfectCrystal, label: &str) -> Option<ColumnClass> {
    p.graph()
        .elements()
        .find(|&b| class_label(p, psi_inverse(b)) == label)
        .map(psi_inverse)
}

/// A column class together with its count of added 0-blocks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ColumnState {
    pub class: ColumnClass,
    pub n: i64,
}

/// i-signature of a class: (removable + second removable, admissible +
/// second admissible) counts, which equal the string statistics of the
/// identified element.
pub fn signature(p: &PerfectCrystal, c: ColumnClass, i: usize) -> (i64, i64) {
    let b = psi(c);
    (p.graph().epsilon(b, i), p.graph().phi(b, i))
}

#[derive(Debug, thiserror::Error)]
pub enum ColumnError {
    #[error("operation supported for d4_3 only")]
    UnsupportedType,
    #[error("no column of class index {0} exists with n = {1} above the ground wall")]
    BelowBase(usize, i64),
}

/// The cyclic chain of d4_3 classes: each step adds a single block, and the
/// step colors read off the column pattern bottom-up.
pub struct ClassChain {
    pub classes: Vec<ColumnClass>,
    /// colors[k] is the block color added going from classes[k] to
    /// classes[(k+1) % 8]
    pub step_colors: Vec<usize>,
}

pub fn chain_of_classes(p: &PerfectCrystal) -> Result<ClassChain, ColumnError> {
    if p.graph().affine_type() != AffineType::D4_3 {
        // the g2_1 column graph branches, there is no single chain
        return Err(ColumnError::UnsupportedType);
    }
    let order = ["cphi", "c1", "c2", "c3", "c0", "c3b", "c2b", "c1b"];
    let classes: Vec<ColumnClass> = order
        .iter()
        .map(|l| class_by_label(p, l).expect("known class label"))
        .collect();
    let step_colors = LEDGER_PATTERN.to_vec();
    // each step must coincide with an f-edge of the crystal under psi
    for (k, &i) in step_colors.iter().enumerate() {
        let src = psi(classes[k]);
        let dst = psi(classes[(k + 1) % classes.len()]);
        assert_eq!(
            p.graph().f(src, i),
            Some(dst),
            "chain step {k} is not an f_{i} edge"
        );
    }
    Ok(ClassChain {
        classes,
        step_colors,
    })
}

/// Bottom-up colors of one period of the d4_3 column pattern above the
/// ground column; one period carries two copies of the null root as
/// half-block counts.
pub const LEDGER_PATTERN: [usize; 8] = [0, 1, 2, 1, 1, 2, 1, 0];

/// Block bookkeeping for d4_3 columns: blocks and 0-blocks added above the
/// ground column, per class, at the base occurrence and per full period.
#[derive(Debug, Clone)]
pub struct BlockLedgerD4 {
    base_blocks: [i64; 8],
    base_n: [i64; 8],
}

impl BlockLedgerD4 {
    pub fn new(p: &PerfectCrystal) -> BlockLedgerD4 {
        let chain = chain_of_classes(p).expect("d4_3 chain");
        let mut base_blocks = [0i64; 8];
        let mut base_n = [0i64; 8];
        let mut blocks = 0;
        let mut zeros = 0;
        for (k, &c) in chain.classes.iter().enumerate() {
            base_blocks[c.0] = blocks;
            base_n[c.0] = zeros;
            if k < chain.step_colors.len() {
                blocks += 1;
                if chain.step_colors[k] == 0 {
                    zeros += 1;
                }
            }
        }
        BlockLedgerD4 {
            base_blocks,
            base_n,
        }
    }

    pub fn base_blocks(&self, c: ColumnClass) -> i64 {
        self.base_blocks[c.0]
    }

    pub fn base_n(&self, c: ColumnClass) -> i64 {
        self.base_n[c.0]
    }

    /// |y| for the column (class, n): the base count plus 4 blocks per
    /// extra period (each period adds one 0-block and 1+2+1 blocks total).
    pub fn blocks_added(&self, c: ColumnState) -> Result<i64, ColumnError> {
        let base_n = self.base_n(c.class);
        if c.n < base_n {
            return Err(ColumnError::BelowBase(c.class.0, c.n));
        }
        Ok(self.base_blocks(c.class) + 4 * (c.n - base_n))
    }

    /// |right| - |left| across a reduced adjacency, which forces
    /// n_right - n_left = H(left (x) right). Independent of the
    /// representative n.
    pub fn adjacency_delta_blocks(
        &self,
        table: &EnergyTable,
        left: ColumnClass,
        right: ColumnClass,
    ) -> i64 {
        let h = table.get(psi(left), psi(right));
        self.base_blocks(right) - self.base_blocks(left)
            + 4 * (h - self.base_n(right) + self.base_n(left))
    }
}
