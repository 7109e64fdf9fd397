//! Affine Cartan data for the two supported types and the weight-lattice
//! arithmetic everything else is built on.
//!
//! Weights are stored in the basis of fundamental weights together with an
//! explicit integer degree in the null root; every weight occurring in the
//! library has the form `lambda - sum k_i alpha_i` with integer `k_i`.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde::{Deserialize, Serialize};

/// Index set of the rank-3 affine types handled here.
pub const RANK: usize = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum AffineType {
    D4_3,
    G2_1,
}

impl AffineType {
    pub const ALL: [AffineType; 2] = [AffineType::D4_3, AffineType::G2_1];

    pub fn name(self) -> &'static str {
        match self {
            AffineType::D4_3 => "d4_3",
            AffineType::G2_1 => "g2_1",
        }
    }
}

impl fmt::Display for AffineType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CartanMatrix {
    pub entries: [[i64; RANK]; RANK],
}

impl CartanMatrix {
    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.entries[i][j]
    }

    /// A * v
    pub fn apply(&self, v: [i64; RANK]) -> [i64; RANK] {
        let mut out = [0; RANK];
        for (i, row) in self.entries.iter().enumerate() {
            out[i] = row.iter().zip(v.iter()).map(|(a, x)| a * x).sum();
        }
        out
    }

    /// A^T * v
    pub fn apply_transpose(&self, v: [i64; RANK]) -> [i64; RANK] {
        std::array::from_fn(|j| (0..RANK).map(|i| self.entries[i][j] * v[i]).sum())
    }
}

/// An integral classical/affine weight: coefficients over the fundamental
/// weights plus a delta degree. The pairing with coroots ignores delta.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct Weight {
    pub lambda_coeffs: [i64; RANK],
    pub delta_degree: i64,
}

impl Weight {
    pub const ZERO: Weight = Weight {
        lambda_coeffs: [0; RANK],
        delta_degree: 0,
    };

    pub fn fundamental(i: usize) -> Weight {
        let mut c = [0; RANK];
        c[i] = 1;
        Weight {
            lambda_coeffs: c,
            delta_degree: 0,
        }
    }

    pub fn delta() -> Weight {
        Weight {
            lambda_coeffs: [0; RANK],
            delta_degree: 1,
        }
    }

    /// `<h_i, w>`; the delta part pairs to zero with every coroot.
    pub fn pair_coroot(&self, i: usize) -> i64 {
        self.lambda_coeffs[i]
    }

    /// The classical part (delta degree dropped).
    pub fn classical(&self) -> Weight {
        Weight {
            lambda_coeffs: self.lambda_coeffs,
            delta_degree: 0,
        }
    }

    pub fn scaled(&self, k: i64) -> Weight {
        Weight {
            lambda_coeffs: [
                k * self.lambda_coeffs[0],
                k * self.lambda_coeffs[1],
                k * self.lambda_coeffs[2],
            ],
            delta_degree: k * self.delta_degree,
        }
    }
}

impl Add for Weight {
    type Output = Weight;
    fn add(self, rhs: Weight) -> Weight {
        Weight {
            lambda_coeffs: [
                self.lambda_coeffs[0] + rhs.lambda_coeffs[0],
                self.lambda_coeffs[1] + rhs.lambda_coeffs[1],
                self.lambda_coeffs[2] + rhs.lambda_coeffs[2],
            ],
            delta_degree: self.delta_degree + rhs.delta_degree,
        }
    }
}

impl Sub for Weight {
    type Output = Weight;
    fn sub(self, rhs: Weight) -> Weight {
        self + (-rhs)
    }
}

impl Neg for Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        self.scaled(-1)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{},{},{};{}d]",
            self.lambda_coeffs[0], self.lambda_coeffs[1], self.lambda_coeffs[2], self.delta_degree
        )
    }
}

/// Integer vector over the simple roots.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RootVector {
    pub coeffs: [i64; RANK],
}

pub fn cartan_matrix(ty: AffineType) -> CartanMatrix {
    let entries = match ty {
        AffineType::D4_3 => [[2, -1, 0], [-1, 2, -3], [0, -1, 2]],
        AffineType::G2_1 => [[2, -1, 0], [-1, 2, -1], [0, -3, 2]],
    };
    CartanMatrix { entries }
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// Primitive integer kernel vector of a rank-2 integer 3x3 matrix, normalized
/// so the first coefficient is positive. Rows are the linear forms that must
/// vanish on the result.
fn primitive_kernel(rows: [[i64; RANK]; RANK]) -> Result<[i64; RANK], String> {
    let cross = |a: [i64; 3], b: [i64; 3]| {
        [
            a[1] * b[2] - a[2] * b[1],
            a[2] * b[0] - a[0] * b[2],
            a[0] * b[1] - a[1] * b[0],
        ]
    };
    let mut candidate = None;
    for (i, j) in [(0, 1), (0, 2), (1, 2)] {
        let v = cross(rows[i], rows[j]);
        if v != [0, 0, 0] {
            candidate = Some(v);
            break;
        }
    }
    let mut v = candidate.ok_or("matrix has rank <= 1, kernel is not one-dimensional")?;
    // check it actually kills every row
    for row in rows {
        let dot: i64 = row.iter().zip(v.iter()).map(|(a, x)| a * x).sum();
        if dot != 0 {
            return Err("matrix is nonsingular, kernel is trivial".into());
        }
    }
    let g = gcd(gcd(v[0], v[1]), v[2]);
    v = [v[0] / g, v[1] / g, v[2] / g];
    if v[0] < 0 {
        v = [-v[0], -v[1], -v[2]];
    }
    if v.iter().any(|&x| x <= 0) {
        return Err(format!("kernel generator {v:?} is not positive"));
    }
    Ok(v)
}

/// Coefficients of the null root over the simple roots, computed as the
/// kernel generator of the Cartan matrix and asserted against the known
/// values for both types.
pub fn null_root(ty: AffineType) -> RootVector {
    let a = cartan_matrix(ty);
    let coeffs = primitive_kernel(a.entries).expect("corrupt Cartan matrix data");
    let expected = match ty {
        AffineType::D4_3 => [1, 2, 1],
        AffineType::G2_1 => [1, 2, 3],
    };
    assert_eq!(coeffs, expected, "null root disagrees with known value");
    RootVector { coeffs }
}

/// Coefficients of the canonical central element over the coroots, from the
/// transposed Cartan matrix.
pub fn central_element(ty: AffineType) -> [i64; RANK] {
    let a = cartan_matrix(ty);
    let t: [[i64; RANK]; RANK] = std::array::from_fn(|i| std::array::from_fn(|j| a.entries[j][i]));
    let coeffs = primitive_kernel(t).expect("corrupt Cartan matrix data");
    let expected = match ty {
        AffineType::D4_3 => [1, 2, 3],
        AffineType::G2_1 => [1, 2, 1],
    };
    assert_eq!(
        coeffs, expected,
        "central element disagrees with known value"
    );
    coeffs
}

/// alpha_i written in the weight lattice: column i of the Cartan matrix over
/// the fundamental weights, plus delta when i = 0.
pub fn simple_root_as_weight(ty: AffineType, i: usize) -> Weight {
    assert!(i < RANK, "simple root index {i} out of range");
    let a = cartan_matrix(ty);
    let lambda_coeffs = std::array::from_fn(|j| a.entries[j][i]);
    Weight {
        lambda_coeffs,
        delta_degree: i64::from(i == 0),
    }
}

/// Pairing of a weight with the canonical central element.
pub fn level(ty: AffineType, w: &Weight) -> i64 {
    let c = central_element(ty);
    c.iter()
        .zip(w.lambda_coeffs.iter())
        .map(|(ci, mi)| ci * mi)
        .sum()
}

/// The level-1 dominant integral weights of the given type.
pub fn level_one_dominant(ty: AffineType) -> Vec<Weight> {
    (0..RANK)
        .map(Weight::fundamental)
        .filter(|w| level(ty, w) == 1)
        .collect()
}

/// Solve `target = a*cl(alpha_1) + b*cl(alpha_2)` for integers (a, b).
/// The three fundamental-weight coordinates are an overdetermined system;
/// inconsistency or a non-integral solution is an error.
pub fn classical_root_coordinates(ty: AffineType, target: &Weight) -> Result<(i64, i64), String> {
    let a1 = simple_root_as_weight(ty, 1).classical();
    let a2 = simple_root_as_weight(ty, 2).classical();
    // Use two coordinates with a nonzero 2x2 determinant, then verify all.
    for r in 0..RANK {
        for s in (r + 1)..RANK {
            let det = a1.lambda_coeffs[r] * a2.lambda_coeffs[s]
                - a1.lambda_coeffs[s] * a2.lambda_coeffs[r];
            if det == 0 {
                continue;
            }
            let num_a = target.lambda_coeffs[r] * a2.lambda_coeffs[s]
                - target.lambda_coeffs[s] * a2.lambda_coeffs[r];
            let num_b = a1.lambda_coeffs[r] * target.lambda_coeffs[s]
                - a1.lambda_coeffs[s] * target.lambda_coeffs[r];
            if num_a % det != 0 || num_b % det != 0 {
                return Err(format!("{target} is not an integral root combination"));
            }
            let (a, b) = (num_a / det, num_b / det);
            let combo = a1.scaled(a) + a2.scaled(b);
            if combo.lambda_coeffs != target.lambda_coeffs {
                return Err(format!("{target} lies outside the classical root lattice"));
            }
            return Ok((a, b));
        }
    }
    Err("degenerate simple root data".into())
}
