use std::sync::Arc;

use crate::error::{Error, Result};

use super::{PolyRing, Polynomial, Scalar};

/// Generation degrees of the source and target bases of a homogeneous map.
///
/// Entry `(i, j)` is zero or homogeneous of degree `source[j] - target[i]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Grading {
    pub source: Vec<i64>,
    pub target: Vec<i64>,
}

/// Matrix over the polynomial ring. Columns are images of source basis
/// vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    ring: Arc<PolyRing>,
    rows: usize,
    cols: usize,
    entries: Vec<Polynomial>,
    grading: Option<Grading>,
}

impl PolyMatrix {
    pub fn zeros(ring: &Arc<PolyRing>, rows: usize, cols: usize) -> Self {
        PolyMatrix {
            ring: ring.clone(),
            rows,
            cols,
            entries: vec![Polynomial::zero(ring); rows * cols],
            grading: None,
        }
    }

    pub fn identity(ring: &Arc<PolyRing>, n: usize) -> Self {
        let mut m = Self::zeros(ring, n, n);
        for i in 0..n {
            m.set(i, i, Polynomial::one(ring));
        }
        m
    }

    pub fn from_rows(ring: &Arc<PolyRing>, rows: Vec<Vec<Polynomial>>, cols: usize) -> Result<Self> {
        let nrows = rows.len();
        let mut entries = Vec::with_capacity(nrows * cols);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != cols {
                return Err(Error::dims(format!(
                    "row {i} has {} entries, expected {cols}",
                    row.len()
                )));
            }
            entries.extend(row);
        }
        Ok(PolyMatrix {
            ring: ring.clone(),
            rows: nrows,
            cols,
            entries,
            grading: None,
        })
    }

    pub fn from_columns(ring: &Arc<PolyRing>, rows: usize, columns: &[Vec<Polynomial>]) -> Result<Self> {
        let mut m = Self::zeros(ring, rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            if col.len() != rows {
                return Err(Error::dims(format!(
                    "column {j} has {} entries, expected {rows}",
                    col.len()
                )));
            }
            for (i, e) in col.iter().enumerate() {
                m.set(i, j, e.clone());
            }
        }
        Ok(m)
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Polynomial {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Polynomial) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Polynomial)> {
        self.entries
            .iter()
            .enumerate()
            .map(move |(k, e)| (k / self.cols.max(1), k % self.cols.max(1), e))
    }

    pub fn column(&self, j: usize) -> Vec<Polynomial> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<Polynomial>> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn row(&self, i: usize) -> Vec<Polynomial> {
        (0..self.cols).map(|j| self.get(i, j).clone()).collect()
    }

    pub fn grading(&self) -> Option<&Grading> {
        self.grading.as_ref()
    }

    /// Attaches a homogeneity certificate after checking every entry.
    pub fn with_grading(mut self, source: Vec<i64>, target: Vec<i64>) -> Result<Self> {
        if source.len() != self.cols || target.len() != self.rows {
            return Err(Error::dims("grading length does not match the matrix shape"));
        }
        let g = Grading { source, target };
        if let Some((i, j)) = first_inhomogeneous(&self, &g) {
            return Err(Error::Validation(format!(
                "entry ({i},{j}) is not homogeneous of the expected degree"
            )));
        }
        self.grading = Some(g);
        Ok(self)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Polynomial::is_zero)
    }

    pub fn mul(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        if self.cols != other.rows {
            return Err(Error::dims(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = PolyMatrix::zeros(&self.ring, self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = Polynomial::zero(&self.ring);
                for k in 0..self.cols {
                    let (a, b) = (self.get(i, k), other.get(k, j));
                    if !a.is_zero() && !b.is_zero() {
                        acc = &acc + &(a * b);
                    }
                }
                out.set(i, j, acc);
            }
        }
        if let (Some(a), Some(b)) = (&self.grading, &other.grading) {
            if a.source == b.target {
                out.grading = Some(Grading {
                    source: b.source.clone(),
                    target: a.target.clone(),
                });
            }
        }
        Ok(out)
    }

    pub fn apply(&self, v: &[Polynomial]) -> Result<Vec<Polynomial>> {
        if v.len() != self.cols {
            return Err(Error::dims(format!(
                "vector of length {} for {} columns",
                v.len(),
                self.cols
            )));
        }
        Ok((0..self.rows)
            .map(|i| {
                let mut acc = Polynomial::zero(&self.ring);
                for (k, x) in v.iter().enumerate() {
                    let a = self.get(i, k);
                    if !a.is_zero() && !x.is_zero() {
                        acc = &acc + &(a * x);
                    }
                }
                acc
            })
            .collect())
    }

    pub fn transpose(&self) -> PolyMatrix {
        let mut out = PolyMatrix::zeros(&self.ring, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    pub fn add(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::dims("matrix sum of different shapes"));
        }
        let mut out = self.clone();
        for (k, e) in out.entries.iter_mut().enumerate() {
            *e = &*e + &other.entries[k];
        }
        if self.grading != other.grading {
            out.grading = None;
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Scalar) -> PolyMatrix {
        let mut out = self.clone();
        for e in out.entries.iter_mut() {
            *e = e.scale(c);
        }
        out
    }

    pub fn negate_if(&self, odd: bool) -> PolyMatrix {
        if odd {
            self.scale(&-&self.ring.field().one())
        } else {
            self.clone()
        }
    }

    /// Assembles a block matrix from a grid. Every block in a block row has
    /// the same row count and every block in a block column the same column
    /// count. The homogeneity certificate survives when all blocks carry one
    /// and the twists line up.
    pub fn block(grid: &[Vec<PolyMatrix>]) -> Result<PolyMatrix> {
        let ring = grid
            .first()
            .and_then(|r| r.first())
            .ok_or_else(|| Error::dims("empty block grid"))?
            .ring
            .clone();
        let ncols_blocks = grid[0].len();
        if grid.iter().any(|r| r.len() != ncols_blocks) {
            return Err(Error::dims("ragged block grid"));
        }
        let row_heights: Vec<usize> = grid.iter().map(|r| r[0].rows).collect();
        let col_widths: Vec<usize> = grid[0].iter().map(|b| b.cols).collect();
        for (bi, r) in grid.iter().enumerate() {
            for (bj, b) in r.iter().enumerate() {
                if b.rows != row_heights[bi] || b.cols != col_widths[bj] {
                    return Err(Error::dims(format!("block ({bi},{bj}) has the wrong shape")));
                }
            }
        }
        let rows = row_heights.iter().sum();
        let cols = col_widths.iter().sum();
        let mut out = PolyMatrix::zeros(&ring, rows, cols);
        let mut r0 = 0;
        for (bi, r) in grid.iter().enumerate() {
            let mut c0 = 0;
            for (bj, b) in r.iter().enumerate() {
                for i in 0..b.rows {
                    for j in 0..b.cols {
                        out.set(r0 + i, c0 + j, b.get(i, j).clone());
                    }
                }
                c0 += col_widths[bj];
            }
            r0 += row_heights[bi];
        }
        out.grading = block_grading(grid);
        Ok(out)
    }

    /// Kronecker product `self ⊗ other`: row index `i*other.rows + k`,
    /// column index `j*other.cols + l`.
    pub fn kron(&self, other: &PolyMatrix) -> PolyMatrix {
        let mut out = PolyMatrix::zeros(&self.ring, self.rows * other.rows, self.cols * other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        let b = other.get(k, l);
                        if !b.is_zero() {
                            out.set(i * other.rows + k, j * other.cols + l, a * b);
                        }
                    }
                }
            }
        }
        out
    }

    pub fn select_columns(&self, cols: &[usize]) -> PolyMatrix {
        let mut out = PolyMatrix::zeros(&self.ring, self.rows, cols.len());
        for (jj, &j) in cols.iter().enumerate() {
            for i in 0..self.rows {
                out.set(i, jj, self.get(i, j).clone());
            }
        }
        out.grading = self.grading.as_ref().map(|g| Grading {
            source: cols.iter().map(|&j| g.source[j]).collect(),
            target: g.target.clone(),
        });
        out
    }

    pub fn select_rows(&self, rows: &[usize]) -> PolyMatrix {
        let mut out = PolyMatrix::zeros(&self.ring, rows.len(), self.cols);
        for (ii, &i) in rows.iter().enumerate() {
            for j in 0..self.cols {
                out.set(ii, j, self.get(i, j).clone());
            }
        }
        out.grading = self.grading.as_ref().map(|g| Grading {
            source: g.source.clone(),
            target: rows.iter().map(|&i| g.target[i]).collect(),
        });
        out
    }

    /// First entry that is neither zero nor homogeneous of degree
    /// `source[j] - target[i]`.
    pub fn first_inhomogeneous(&self, source: &[i64], target: &[i64]) -> Option<(usize, usize)> {
        first_inhomogeneous(
            self,
            &Grading {
                source: source.to_vec(),
                target: target.to_vec(),
            },
        )
    }
}

fn first_inhomogeneous(m: &PolyMatrix, g: &Grading) -> Option<(usize, usize)> {
    for i in 0..m.rows {
        for j in 0..m.cols {
            if !m.get(i, j).is_homogeneous_of(g.source[j] - g.target[i]) {
                return Some((i, j));
            }
        }
    }
    None
}

fn block_grading(grid: &[Vec<PolyMatrix>]) -> Option<Grading> {
    let mut target = Vec::new();
    for r in grid {
        let t = &r[0].grading.as_ref()?.target;
        if r.iter().any(|b| b.grading.as_ref().map(|g| &g.target) != Some(t)) {
            return None;
        }
        target.extend_from_slice(t);
    }
    let mut source = Vec::new();
    for bj in 0..grid[0].len() {
        let s = &grid[0][bj].grading.as_ref()?.source;
        if grid
            .iter()
            .any(|r| r[bj].grading.as_ref().map(|g| &g.source) != Some(s))
        {
            return None;
        }
        source.extend_from_slice(s);
    }
    Some(Grading { source, target })
}
