//! Energy functions on B(x)B, derived three independent ways (defining
//! recurrence, golden table fixture, closed-form set description), plus
//! affinization, the affine energy function, and the combinatorial R-matrix.

use std::collections::{HashMap, VecDeque};
use std::fmt::Write as _;

use crate::cartan::{AffineType, RANK};
use crate::crystal::ElementId;
use crate::exec::{map_collect, Parallelism};
use crate::fixtures;
use crate::perfect::{build, PerfectCrystal};
use crate::report::Report;

/// Integer energy values on ordered element pairs, indexed in the canonical
/// element order of the crystal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnergyTable {
    ty: AffineType,
    values: Vec<Vec<i64>>,
    /// the pair pinned to zero
    normalization: (ElementId, ElementId),
}

impl EnergyTable {
    pub fn affine_type(&self) -> AffineType {
        self.ty
    }

    pub fn size(&self) -> usize {
        self.values.len()
    }

    pub fn get(&self, x: ElementId, y: ElementId) -> i64 {
        self.values[x.0][y.0]
    }

    pub fn normalization(&self) -> (ElementId, ElementId) {
        self.normalization
    }

    /// Row/column rendering in the canonical element order.
    pub fn render(&self, p: &PerfectCrystal) -> String {
        let mut out = String::new();
        write!(out, "{:>6}", "").unwrap();
        for j in p.graph().elements() {
            write!(out, "{:>6}", p.graph().label(j)).unwrap();
        }
        out.push('\n');
        for i in p.graph().elements() {
            write!(out, "{:>6}", p.graph().label(i)).unwrap();
            for j in p.graph().elements() {
                write!(out, "{:>6}", self.get(i, j)).unwrap();
            }
            out.push('\n');
        }
        out
    }

    pub fn diff(&self, other: &EnergyTable) -> Vec<(ElementId, ElementId, i64, i64)> {
        let mut out = Vec::new();
        for i in 0..self.size() {
            for j in 0..self.size() {
                if self.values[i][j] != other.values[i][j] {
                    out.push((
                        ElementId(i),
                        ElementId(j),
                        self.values[i][j],
                        other.values[i][j],
                    ));
                }
            }
        }
        out
    }
}

#[derive(Debug, thiserror::Error)]
pub enum EnergyError {
    #[error("energy recurrence is inconsistent at pair ({0}, {1}): {2} vs {3}")]
    Inconsistent(String, String, i64, i64),
    #[error("B(x)B is not connected; {0} pairs unreached")]
    Disconnected(usize),
}

/// Which factor an operator acts on under the two-factor tensor rule.
fn f_moves_left(p: &PerfectCrystal, a: ElementId, b: ElementId, i: usize) -> bool {
    p.graph().phi(a, i) > p.graph().epsilon(b, i)
}

fn e_moves_left(p: &PerfectCrystal, a: ElementId, b: ElementId, i: usize) -> bool {
    p.graph().phi(a, i) >= p.graph().epsilon(b, i)
}

/// f_i on the pair (a, b); also reports whether the left factor moved.
fn tensor_f(
    p: &PerfectCrystal,
    a: ElementId,
    b: ElementId,
    i: usize,
) -> Option<(ElementId, ElementId, bool)> {
    if f_moves_left(p, a, b, i) {
        p.graph().f(a, i).map(|fa| (fa, b, true))
    } else {
        p.graph().f(b, i).map(|fb| (a, fb, false))
    }
}

fn tensor_e(
    p: &PerfectCrystal,
    a: ElementId,
    b: ElementId,
    i: usize,
) -> Option<(ElementId, ElementId, bool)> {
    if e_moves_left(p, a, b, i) {
        p.graph().e(a, i).map(|ea| (ea, b, true))
    } else {
        p.graph().e(b, i).map(|eb| (a, eb, false))
    }
}

/// Propagate the defining recurrence over all of B(x)B by breadth-first
/// traversal along both f and e edges, starting from the normalization pair
/// pinned to zero. Any inconsistency signals a wrong edge list.
pub fn solve_energy(
    p: &PerfectCrystal,
    normalization: (ElementId, ElementId),
) -> Result<EnergyTable, EnergyError> {
    let n = p.graph().len();
    let mut values: HashMap<(usize, usize), i64> = HashMap::new();
    values.insert((normalization.0 .0, normalization.1 .0), 0);
    let mut queue = VecDeque::from([normalization]);

    let record = |values: &mut HashMap<(usize, usize), i64>,
                  queue: &mut VecDeque<(ElementId, ElementId)>,
                  a: ElementId,
                  b: ElementId,
                  h: i64|
     -> Result<(), EnergyError> {
        match values.get(&(a.0, b.0)) {
            Some(&known) if known != h => Err(EnergyError::Inconsistent(
                p.graph().label(a).to_string(),
                p.graph().label(b).to_string(),
                known,
                h,
            )),
            Some(_) => Ok(()),
            None => {
                values.insert((a.0, b.0), h);
                queue.push_back((a, b));
                Ok(())
            }
        }
    };

    while let Some((a, b)) = queue.pop_front() {
        let h = values[&(a.0, b.0)];
        for i in 0..RANK {
            if let Some((fa, fb, left)) = tensor_f(p, a, b, i) {
                // H is constant along i != 0 edges; f_0 on the left factor
                // lowers it, on the right factor raises it
                let dh = if i != 0 {
                    0
                } else if left {
                    -1
                } else {
                    1
                };
                record(&mut values, &mut queue, fa, fb, h + dh)?;
            }
            if let Some((ea, eb, left)) = tensor_e(p, a, b, i) {
                let dh = if i != 0 {
                    0
                } else if left {
                    1
                } else {
                    -1
                };
                record(&mut values, &mut queue, ea, eb, h + dh)?;
            }
        }
    }

    if values.len() != n * n {
        return Err(EnergyError::Disconnected(n * n - values.len()));
    }
    let mut table = vec![vec![0; n]; n];
    for ((a, b), h) in values {
        table[a][b] = h;
    }
    Ok(EnergyTable {
        ty: p.graph().affine_type(),
        values: table,
        normalization,
    })
}

/// The ground pair of the type: the minimal element for Lambda_0.
pub fn ground_pair(p: &PerfectCrystal) -> (ElementId, ElementId) {
    let b = p.minimal_by_weight()[0].1;
    (b, b)
}

/// The golden energy table fixture.
pub fn fixture_table(ty: AffineType) -> EnergyTable {
    let values = fixtures::energy_table(ty);
    let p = build(ty);
    assert_eq!(values.len(), p.graph().len(), "table size mismatch");
    EnergyTable {
        ty,
        values,
        normalization: ground_pair(&p),
    }
}

/// Closed-form set description of the energy values: 0 on the first family,
/// 2 on the second, 1 otherwise. Element indices refer to the canonical
/// order. For g2_1, two of the traditionally quoted index sets do not reproduce the
/// golden table (or the recurrence); the corrected sets below do and are
/// what this oracle uses.
pub fn closed_form_table(ty: AffineType) -> EnergyTable {
    let p = build(ty);
    let n = p.graph().len();
    let (zeros, twos) = match ty {
        AffineType::D4_3 => d4_3_sets(),
        AffineType::G2_1 => g2_1_sets(),
    };
    let mut values = vec![vec![1; n]; n];
    for (x, y) in zeros {
        values[x][y] = 0;
    }
    for (x, y) in twos {
        values[x][y] = 2;
    }
    EnergyTable {
        ty,
        values,
        normalization: ground_pair(&p),
    }
}

/// Index pairs receiving a common energy value.
type PairSet = Vec<(usize, usize)>;

fn cross(a: &[usize], b: &[usize]) -> PairSet {
    a.iter()
        .flat_map(|&x| b.iter().map(move |&y| (x, y)))
        .collect()
}

// canonical d4_3 indices: 0 phi, 1..3 = c1..c3, 4 = c0, 5 = c3b, 6 = c2b,
// 7 = c1b
fn d4_3_sets() -> (PairSet, PairSet) {
    let a0 = [4, 1, 2, 3];
    let a0_bar = [4, 7, 6, 5];
    let a1: Vec<usize> = (1..8).collect();
    let a2 = [2, 3, 4, 5, 6];
    let a3 = [3, 4, 5];
    let mut zeros = vec![(0, 0), (2, 6)];
    zeros.extend(cross(&a0, &[7]));
    zeros.extend(cross(&[1], &a0_bar));

    let mut twos = Vec::new();
    for (set, i, i_bar) in [(a1.as_slice(), 1, 7), (&a2, 2, 6), (&a3, 3, 5)] {
        twos.extend(cross(set, &[i]));
        twos.extend(cross(&[i_bar], set));
    }
    (zeros, twos)
}

// canonical g2_1 indices: 0..7 = c'0..c'7, 8 = c'7b, 9 = c'6b, 10 = c'5b,
// 11 = c'4b, 12 = c'3b, 13 = c'2b, 14 = c'1b
fn g2_1_sets() -> (PairSet, PairSet) {
    let d0 = [1, 2, 3, 4, 5, 8];
    let d0_bar = [14, 13, 12, 11, 10, 8];
    // corrected from the commonly quoted {5, 7, 3b} / {3, 7, 5b}: the 3/3b entries
    // are already covered by d0 x d0_bar, while the 6b/6 entries are
    // required by both the recurrence and the golden table
    let d0_prime = [5, 7, 9];
    let d0_prime_bar = [6, 7, 10];
    let d1: Vec<usize> = (1..15).collect();
    let d2: Vec<usize> = (2..14).collect();
    let d3 = [10, 6, 7, 9, 11, 12];
    let d3_bar = [9, 5, 7, 6, 4, 3];
    let d4 = [10, 6, 7, 9, 11];
    let d4_bar = [9, 5, 7, 6, 4];
    let d5 = [9];
    let d5_bar = [6];
    let d6 = [6, 7, 9];

    let mut zeros = vec![(0, 0)];
    zeros.extend(cross(&d0, &d0_bar));
    zeros.extend(cross(&[1], &d0_prime));
    zeros.extend(cross(&d0_prime_bar, &[14]));

    let families: [(&[usize], usize, usize, &[usize]); 6] = [
        (&d1, 1, 14, &d1),
        (&d2, 2, 13, &d2),
        (&d3, 3, 12, &d3_bar),
        (&d4, 4, 11, &d4_bar),
        (&d5, 5, 10, &d5_bar),
        (&d6, 6, 9, &d6),
    ];
    let mut twos = Vec::new();
    for (di, i, i_bar, di_bar) in families {
        twos.extend(cross(di, &[i]));
        twos.extend(cross(&[i_bar], di_bar));
    }
    (zeros, twos)
}

/// Element of the affinization: an underlying crystal element with an
/// integer affine index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct AffineElement {
    pub element: ElementId,
    pub n: i64,
}

impl AffineElement {
    pub fn new(element: ElementId, n: i64) -> AffineElement {
        AffineElement { element, n }
    }

    pub fn shift(self, k: i64) -> AffineElement {
        AffineElement {
            element: self.element,
            n: self.n + k,
        }
    }
}

/// H_aff(x(m) (x) y(n)) = H(x (x) y) + m - n.
pub fn h_aff(table: &EnergyTable, x: AffineElement, y: AffineElement) -> i64 {
    table.get(x.element, y.element) + x.n - y.n
}

/// f_i on the affinization; the index moves by +1 only for color 0.
pub fn affine_f(p: &PerfectCrystal, x: AffineElement, i: usize) -> Option<AffineElement> {
    p.graph()
        .f(x.element, i)
        .map(|b| AffineElement::new(b, x.n + i64::from(i == 0)))
}

pub fn affine_e(p: &PerfectCrystal, x: AffineElement, i: usize) -> Option<AffineElement> {
    p.graph()
        .e(x.element, i)
        .map(|b| AffineElement::new(b, x.n - i64::from(i == 0)))
}

/// R(x(m) (x) y(n)) = x(n - H) (x) y(m + H).
pub fn r_matrix(
    table: &EnergyTable,
    x: AffineElement,
    y: AffineElement,
) -> (AffineElement, AffineElement) {
    let h = table.get(x.element, y.element);
    (
        AffineElement::new(x.element, y.n - h),
        AffineElement::new(y.element, x.n + h),
    )
}

/// f_i on a tensor of affine elements; the factor is chosen by the
/// underlying statistics (the affinization does not change eps/phi).
pub fn affine_tensor_f(
    p: &PerfectCrystal,
    x: AffineElement,
    y: AffineElement,
    i: usize,
) -> Option<(AffineElement, AffineElement)> {
    if f_moves_left(p, x.element, y.element, i) {
        affine_f(p, x, i).map(|fx| (fx, y))
    } else {
        affine_f(p, y, i).map(|fy| (x, fy))
    }
}

pub fn affine_tensor_e(
    p: &PerfectCrystal,
    x: AffineElement,
    y: AffineElement,
    i: usize,
) -> Option<(AffineElement, AffineElement)> {
    if e_moves_left(p, x.element, y.element, i) {
        affine_e(p, x, i).map(|ex| (ex, y))
    } else {
        affine_e(p, y, i).map(|ey| (x, ey))
    }
}

/// Exhaustive check of the R-matrix identities and the invariance of the
/// affine energy under Kashiwara operators, over all element pairs and all
/// affine indices |m|, |n| <= `index_bound`.
pub fn verify_r_matrix(ty: AffineType, index_bound: i64) -> Report {
    verify_r_matrix_with(ty, index_bound, Parallelism::default())
}

pub fn verify_r_matrix_with(ty: AffineType, index_bound: i64, mode: Parallelism) -> Report {
    let p = build(ty);
    let table = solve_energy(&p, ground_pair(&p)).expect("energy solve");
    let mut states = Vec::new();
    for x in p.graph().elements() {
        for y in p.graph().elements() {
            for m in -index_bound..=index_bound {
                for n in -index_bound..=index_bound {
                    states.push((AffineElement::new(x, m), AffineElement::new(y, n)));
                }
            }
        }
    }
    let total = states.len();

    let failures: Vec<String> = map_collect(mode, states, |(x, y)| {
        let mut local = Vec::new();
        let describe = |a: AffineElement, b: AffineElement| {
            format!(
                "{}({}) (x) {}({})",
                p.graph().label(a.element),
                a.n,
                p.graph().label(b.element),
                b.n
            )
        };

        // both shift relations
        let (rx, ry) = r_matrix(&table, x, y);
        if r_matrix(&table, x, y.shift(1)) != (rx.shift(1), ry) {
            local.push(format!("(T(x)id).R != R.(id(x)T) at {}", describe(x, y)));
        }
        if r_matrix(&table, x.shift(1), y) != (rx, ry.shift(1)) {
            local.push(format!("(id(x)T).R != R.(T(x)id) at {}", describe(x, y)));
        }

        for i in 0..RANK {
            // R commutes with f_i and e_i
            let lhs_f = affine_tensor_f(&p, x, y, i).map(|(a, b)| r_matrix(&table, a, b));
            let rhs_f = affine_tensor_f(&p, rx, ry, i);
            if lhs_f != rhs_f {
                local.push(format!("R.f_{i} != f_{i}.R at {}", describe(x, y)));
            }
            let lhs_e = affine_tensor_e(&p, x, y, i).map(|(a, b)| r_matrix(&table, a, b));
            let rhs_e = affine_tensor_e(&p, rx, ry, i);
            if lhs_e != rhs_e {
                local.push(format!("R.e_{i} != e_{i}.R at {}", describe(x, y)));
            }

            // affine energy constant along every Kashiwara edge
            let h = h_aff(&table, x, y);
            if let Some((a, b)) = affine_tensor_f(&p, x, y, i) {
                if h_aff(&table, a, b) != h {
                    local.push(format!("H_aff moved along f_{i} at {}", describe(x, y)));
                }
            }
            if let Some((a, b)) = affine_tensor_e(&p, x, y, i) {
                if h_aff(&table, a, b) != h {
                    local.push(format!("H_aff moved along e_{i} at {}", describe(x, y)));
                }
            }
        }
        local
    })
    .into_iter()
    .flatten()
    .collect();

    let mut report = Report::new(format!("rmatrix({ty})"));
    report.add(
        format!("R-matrix identities over {total} affine states"),
        failures.is_empty(),
        failures.first().cloned().unwrap_or_default(),
    );
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perfect::{build_b1, build_b1_prime};

    fn ids(p: &PerfectCrystal, label: &str) -> ElementId {
        p.graph().element_by_label(label).unwrap()
    }

    #[test]
    fn solver_matches_fixture_and_closed_form_d4_3() {
        let p = build_b1();
        let solved = solve_energy(&p, ground_pair(&p)).unwrap();
        assert_eq!(solved.diff(&fixture_table(AffineType::D4_3)), vec![]);
        assert_eq!(solved.diff(&closed_form_table(AffineType::D4_3)), vec![]);
        assert_eq!(solved.get(ids(&p, "u1"), ids(&p, "u0")), 0);
        assert_eq!(solved.get(ids(&p, "u1b"), ids(&p, "u1b")), 2);
        assert_eq!(solved.get(ids(&p, "uphi"), ids(&p, "uphi")), 0);
        assert_eq!(solved.get(ids(&p, "uphi"), ids(&p, "u1")), 1);
    }

    #[test]
    fn solver_matches_fixture_and_closed_form_g2_1() {
        let p = build_b1_prime();
        let solved = solve_energy(&p, ground_pair(&p)).unwrap();
        assert_eq!(solved.diff(&fixture_table(AffineType::G2_1)), vec![]);
        assert_eq!(solved.diff(&closed_form_table(AffineType::G2_1)), vec![]);
        assert_eq!(solved.get(ids(&p, "v6"), ids(&p, "v1b")), 0);
        assert_eq!(solved.get(ids(&p, "v7b"), ids(&p, "v7b")), 0);
        assert_eq!(solved.get(ids(&p, "v6b"), ids(&p, "v6b")), 2);
    }

    #[test]
    fn values_stay_in_expected_range() {
        for ty in AffineType::ALL {
            let p = build(ty);
            let t = solve_energy(&p, ground_pair(&p)).unwrap();
            for x in p.graph().elements() {
                for y in p.graph().elements() {
                    assert!((0..=2).contains(&t.get(x, y)));
                }
            }
        }
    }

    #[test]
    fn affine_operators() {
        let p = build_b1();
        let t = solve_energy(&p, ground_pair(&p)).unwrap();
        let uphi = ids(&p, "uphi");
        let u1 = ids(&p, "u1");
        let u2 = ids(&p, "u2");
        let u0 = ids(&p, "u0");
        let u1b = ids(&p, "u1b");

        assert_eq!(
            h_aff(&t, AffineElement::new(uphi, 0), AffineElement::new(uphi, 0)),
            0
        );
        assert_eq!(
            h_aff(&t, AffineElement::new(uphi, 0), AffineElement::new(u1, 1)),
            0
        );
        assert_eq!(
            h_aff(&t, AffineElement::new(u1b, 2), AffineElement::new(u1b, 0)),
            4
        );

        assert_eq!(
            affine_f(&p, AffineElement::new(uphi, 0), 0),
            Some(AffineElement::new(u1, 1))
        );
        assert_eq!(
            affine_f(&p, AffineElement::new(u1, 5), 1),
            Some(AffineElement::new(u2, 5))
        );
        assert_eq!(
            affine_e(&p, AffineElement::new(u1, 1), 0),
            Some(AffineElement::new(uphi, 0))
        );

        assert_eq!(
            r_matrix(&t, AffineElement::new(uphi, 0), AffineElement::new(uphi, 0)),
            (AffineElement::new(uphi, 0), AffineElement::new(uphi, 0))
        );
        assert_eq!(
            r_matrix(&t, AffineElement::new(u1, 0), AffineElement::new(u0, 3)),
            (AffineElement::new(u1, 3), AffineElement::new(u0, 0))
        );
        assert_eq!(
            r_matrix(&t, AffineElement::new(u1b, 1), AffineElement::new(u1b, 2)),
            (AffineElement::new(u1b, 0), AffineElement::new(u1b, 3))
        );
    }

    #[test]
    fn r_matrix_identities_hold() {
        for ty in AffineType::ALL {
            for &mode in Parallelism::ALL {
                let report = verify_r_matrix_with(ty, 2, mode);
                assert!(report.passed(), "{report}");
            }
        }
    }

    #[test]
    fn corrupted_table_is_detected() {
        let p = build_b1();
        let mut t = solve_energy(&p, ground_pair(&p)).unwrap();
        t.values[3][4] += 1;
        // the corrupted value breaks H_aff invariance somewhere
        let x = AffineElement::new(ElementId(3), 0);
        let y = AffineElement::new(ElementId(4), 0);
        let h = h_aff(&t, x, y);
        let mut violated = false;
        for i in 0..RANK {
            if let Some((a, b)) = affine_tensor_f(&p, x, y, i) {
                violated |= h_aff(&t, a, b) != h;
            }
            if let Some((a, b)) = affine_tensor_e(&p, x, y, i) {
                violated |= h_aff(&t, a, b) != h;
            }
        }
        assert!(violated);
    }
}
