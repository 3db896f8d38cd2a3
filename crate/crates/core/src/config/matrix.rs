use std::fmt;
use std::ops::Mul;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::Configuration;

/// Dense square matrix over the integers, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    dim: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(dim: usize) -> Self {
        IntMatrix {
            dim,
            entries: vec![BigInt::zero(); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m.entries[i * dim + i] = BigInt::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Self {
        let dim = rows.len();
        assert!(rows.iter().all(|r| r.len() == dim), "matrix must be square");
        IntMatrix {
            dim,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Entry `(i, j)`, 0-based.
    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.dim + j]
    }

    fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.entries[i * self.dim + j] = v;
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.entries[i * self.dim..(i + 1) * self.dim]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[BigInt]> {
        self.entries.chunks(self.dim.max(1)).take(self.dim)
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(v.len(), self.dim);
        self.rows()
            .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    /// `Mᵀ v`.
    pub fn transpose_mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(v.len(), self.dim);
        let mut out = vec![BigInt::zero(); self.dim];
        for (row, x) in self.rows().zip(v) {
            for (o, a) in out.iter_mut().zip(row) {
                *o += a * x;
            }
        }
        out
    }

    pub fn is_identity(&self) -> bool {
        (0..self.dim).all(|i| {
            (0..self.dim).all(|j| {
                let e = self.get(i, j);
                if i == j {
                    e.is_one()
                } else {
                    e.is_zero()
                }
            })
        })
    }

    pub fn is_unit_lower_triangular(&self) -> bool {
        (0..self.dim).all(|i| {
            self.get(i, i).is_one() && (i + 1..self.dim).all(|j| self.get(i, j).is_zero())
        })
    }
}

impl Mul for &IntMatrix {
    type Output = IntMatrix;

    fn mul(self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.dim, rhs.dim);
        let n = self.dim;
        let mut out = IntMatrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let v = out.get(i, j) + a * rhs.get(k, j);
                    out.set(i, j, v);
                }
            }
        }
        out
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.entries.iter().map(ToString::to_string).collect();
        let width = cells.iter().map(String::len).max().unwrap_or(1);
        for i in 0..self.dim {
            let row: Vec<String> = (0..self.dim)
                .map(|j| format!("{:>width$}", cells[i * self.dim + j]))
                .collect();
            writeln!(f, "[{}]", row.join(" "))?;
        }
        Ok(())
    }
}

/// The proximity matrix `P` of a configuration together with `P⁻¹`.
///
/// `P` has ones on the diagonal and `-1` at `(i, j)` exactly when point
/// `i + 1` is proximate to point `j + 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProximityMatrix {
    entries: IntMatrix,
    inverse: IntMatrix,
}

impl ProximityMatrix {
    pub fn new(config: &Configuration) -> Self {
        let n = config.len();
        let mut entries = IntMatrix::identity(n);
        for p in config.points() {
            for &t in p.proximities() {
                entries.set(p.id() - 1, t - 1, -BigInt::one());
            }
        }
        // Forward substitution on P X = I. Row i reads
        // X_i - sum_{i -> j} X_j = e_i, and every such j is smaller than i.
        let mut inverse = IntMatrix::identity(n);
        for p in config.points() {
            let i = p.id() - 1;
            for &t in p.proximities() {
                for j in 0..n {
                    let v = inverse.get(i, j) + inverse.get(t - 1, j);
                    inverse.set(i, j, v);
                }
            }
        }
        ProximityMatrix { entries, inverse }
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.entries
    }

    pub fn inverse(&self) -> &IntMatrix {
        &self.inverse
    }

    pub fn dim(&self) -> usize {
        self.entries.dim()
    }

    /// `P⁻¹ v`.
    pub fn solve(&self, v: &[BigInt]) -> Vec<BigInt> {
        self.inverse.mul_vec(v)
    }
}

/// Vector of multiplicities: `1` at ends and, elsewhere, the sum over the
/// points proximate to the given one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiplicityVector {
    values: Vec<BigInt>,
}

impl MultiplicityVector {
    pub fn new(config: &Configuration) -> Self {
        let n = config.len();
        let mut values = vec![BigInt::zero(); n];
        for id in (1..=n).rev() {
            let from = config.proximate_to(id);
            values[id - 1] = if from.is_empty() {
                BigInt::one()
            } else {
                from.iter().map(|&j| &values[j - 1]).sum()
            };
        }
        MultiplicityVector { values }
    }

    pub fn values(&self) -> &[BigInt] {
        &self.values
    }

    /// Multiplicity at point `id` (1-based).
    pub fn get(&self, id: usize) -> Option<&BigInt> {
        id.checked_sub(1).and_then(|i| self.values.get(i))
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}
