//! Point configurations and their pairwise distances.

use nalgebra::DMatrix;

use crate::error::{MdsError, Result};
use crate::pairs::{pair_count, pair_indices};

/// n points in p-dimensional Euclidean space, stored as an n-by-p matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct Configuration {
    coords: DMatrix<f64>,
}

impl Configuration {
    pub fn new(coords: DMatrix<f64>) -> Result<Self> {
        if coords.ncols() == 0 {
            return Err(MdsError::ZeroDimension);
        }
        for i in 0..coords.nrows() {
            for k in 0..coords.ncols() {
                let v = coords[(i, k)];
                if !v.is_finite() {
                    return Err(MdsError::InvalidCoordinate {
                        i: i + 1,
                        k: k + 1,
                        value: v,
                    });
                }
            }
        }
        Ok(Self { coords })
    }

    /// Convenience constructor from row-major coordinates.
    pub fn from_rows(n: usize, p: usize, coords: &[f64]) -> Result<Self> {
        Self::new(DMatrix::from_row_slice(n, p, coords))
    }

    pub fn n(&self) -> usize {
        self.coords.nrows()
    }

    pub fn p(&self) -> usize {
        self.coords.ncols()
    }

    pub fn coords(&self) -> &DMatrix<f64> {
        &self.coords
    }

    /// Euclidean distance of every pair, in canonical pair order.
    pub fn pair_distances(&self) -> Vec<f64> {
        let n = self.n();
        let mut out = Vec::with_capacity(pair_count(n));
        for (i, j) in pair_indices(n) {
            let mut s = 0.0;
            for k in 0..self.p() {
                let t = self.coords[(i, k)] - self.coords[(j, k)];
                s += t * t;
            }
            out.push(s.sqrt());
        }
        out
    }

    /// Remove the column means (translate the centroid to the origin).
    pub fn center(&mut self) {
        let n = self.coords.nrows();
        for k in 0..self.coords.ncols() {
            let mean = self.coords.column(k).sum() / n as f64;
            for i in 0..n {
                self.coords[(i, k)] -= mean;
            }
        }
    }

    pub fn centered(mut self) -> Self {
        self.center();
        self
    }

    /// Multiply all coordinates by a scalar.
    pub fn scaled(mut self, c: f64) -> Self {
        self.coords *= c;
        self
    }
}
