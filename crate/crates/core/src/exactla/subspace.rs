use num_traits::{One, Zero};

use super::{Mat, Rat};
use crate::error::{Error, Result};

/// A linear subspace of `Q^n`, stored by its reduced row-echelon basis so that
/// equal subspaces are structurally equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: Mat,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Mat::zeros(0, ambient),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Mat::identity(ambient),
        }
    }

    /// Span of the coordinate axes listed in `axes`.
    pub fn axes(ambient: usize, axes: impl IntoIterator<Item = usize>) -> Self {
        let vectors: Vec<Vec<Rat>> = axes
            .into_iter()
            .map(|i| {
                let mut v = vec![Rat::zero(); ambient];
                v[i] = Rat::one();
                v
            })
            .collect();
        Subspace::from_vectors(ambient, &vectors).expect("axis vectors have ambient length")
    }

    /// Span of arbitrary vectors.
    pub fn from_vectors(ambient: usize, vectors: &[Vec<Rat>]) -> Result<Self> {
        if let Some(bad) = vectors.iter().find(|v| v.len() != ambient) {
            return Err(Error::DimensionMismatch {
                expected: ambient,
                found: bad.len(),
            });
        }
        if vectors.is_empty() {
            return Ok(Subspace::zero(ambient));
        }
        let m = Mat::from_rows(vectors.to_vec())?;
        Ok(Subspace::from_row_space(&m))
    }

    /// Row space of `m`.
    pub fn from_row_space(m: &Mat) -> Self {
        let (r, pivots) = m.rref_with_pivots();
        let rank = pivots.len();
        let data = r.entries()[..rank * m.cols()].to_vec();
        Subspace {
            ambient: m.cols(),
            basis: Mat::from_vec(rank, m.cols(), data).expect("rank rows"),
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    /// Basis in reduced row-echelon form, one vector per row.
    pub fn basis(&self) -> &Mat {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vec<Rat>> {
        self.basis.row_vecs()
    }

    /// Pivot column of each basis row.
    pub fn pivots(&self) -> Vec<usize> {
        (0..self.dim())
            .map(|i| {
                self.basis
                    .row(i)
                    .iter()
                    .position(|v| !v.is_zero())
                    .expect("basis rows are nonzero")
            })
            .collect()
    }

    /// Rows spanning the annihilator: `v` lies in the subspace iff
    /// `constraints() * v = 0`.
    pub fn constraints(&self) -> Mat {
        let comp = self.basis.kernel_basis();
        comp.basis.clone()
    }

    fn check_ambient(&self, n: usize) -> Result<()> {
        if self.ambient == n {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                expected: self.ambient,
                found: n,
            })
        }
    }

    pub fn contains(&self, v: &[Rat]) -> Result<bool> {
        self.check_ambient(v.len())?;
        // Reduce v against the rref basis; pivots make this exact.
        let mut w = v.to_vec();
        for (row, p) in self.pivots().into_iter().enumerate() {
            if w[p].is_zero() {
                continue;
            }
            let f = w[p].clone();
            for (j, b) in self.basis.row(row).iter().enumerate() {
                if !b.is_zero() {
                    w[j] -= &f * b;
                }
            }
        }
        Ok(w.iter().all(Zero::is_zero))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other.ambient)?;
        Ok(Subspace::from_row_space(&self.basis.vstack(&other.basis)?))
    }

    /// Intersection, as the kernel of the stacked constraint systems.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other.ambient)?;
        let stacked = self.constraints().vstack(&other.constraints())?;
        Ok(stacked.kernel_basis())
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> Result<bool> {
        self.check_ambient(other.ambient)?;
        for v in self.basis_vectors() {
            if !other.contains(&v)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `{x : map * x ∈ self}` for a square `map` on the ambient space.
    pub fn preimage(&self, map: &Mat) -> Result<Subspace> {
        self.check_ambient(map.rows())?;
        let c = self.constraints();
        if c.rows() == 0 {
            return Ok(Subspace::full(map.cols()));
        }
        Ok(c.mul(map)?.kernel_basis())
    }
}
