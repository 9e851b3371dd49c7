//! Evolution algebras over the rationals.
//!
//! An evolution algebra has a natural basis `e_1, ..., e_n` with `e_i e_j = 0`
//! for `i != j`; all structure lives in the squares
//! `e_i^2 = sum_j w[j][i] e_j`. The structure matrix is stored so that column
//! `i` holds the coordinates of `e_i^2`.

use std::collections::{BTreeSet, HashSet};
use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactla::{Mat, Rat, Subspace};
use crate::graph::{DiGraph, VertexSet};

/// Coordinates of an element over the natural basis.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Element {
    coords: Vec<Rat>,
}

impl Element {
    pub fn new(coords: Vec<Rat>) -> Self {
        Element { coords }
    }

    pub fn zero(n: usize) -> Self {
        Element {
            coords: vec![Rat::zero(); n],
        }
    }

    /// The basis vector `e_i` (zero-based).
    pub fn basis(n: usize, i: usize) -> Self {
        let mut e = Element::zero(n);
        e.coords[i] = Rat::one();
        e
    }

    pub fn from_ints(xs: &[i64]) -> Self {
        Element::new(xs.iter().map(|&x| Rat::from_integer(x.into())).collect())
    }

    pub fn coords(&self) -> &[Rat] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<Rat> {
        self.coords
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    /// Indices with a nonzero coordinate.
    pub fn support(&self) -> VertexSet {
        self.coords
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, _)| i)
            .collect()
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// A basic ideal: the span of the basis vectors indexed by a hereditary set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasicIdeal {
    pub vertices: VertexSet,
    pub space: Subspace,
}

/// Upper annihilating series `Ann^(1) ⊆ Ann^(2) ⊆ ...` up to its stabilizing
/// index `asi`, the least `k >= 0` with `Ann^(k) = Ann^(k+1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnnSeries {
    /// `levels[k]` is `Ann^(k+1)`.
    pub levels: Vec<Subspace>,
    pub asi: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EvolutionAlgebra {
    labels: Vec<String>,
    matrix: Mat,
}

impl EvolutionAlgebra {
    /// `matrix[(j, i)]` is the coefficient of `e_j` in `e_i^2`.
    pub fn new(labels: Vec<String>, matrix: Mat) -> Result<Self> {
        if !matrix.is_square() {
            return Err(Error::NotSquare {
                rows: matrix.rows(),
                cols: matrix.cols(),
            });
        }
        if labels.len() != matrix.rows() {
            return Err(Error::DimensionMismatch {
                expected: matrix.rows(),
                found: labels.len(),
            });
        }
        let mut seen = HashSet::new();
        if let Some(dup) = labels.iter().find(|l| !seen.insert(l.as_str())) {
            return Err(Error::Precondition(format!("duplicate basis label {dup:?}")));
        }
        Ok(EvolutionAlgebra { labels, matrix })
    }

    /// Labels `e1, ..., en`.
    pub fn with_default_labels(matrix: Mat) -> Result<Self> {
        let labels = (1..=matrix.rows()).map(|i| format!("e{i}")).collect();
        EvolutionAlgebra::new(labels, matrix)
    }

    /// Integer structure matrix with default labels.
    ///
    /// # Panics
    /// Panics if `rows` is not square.
    pub fn from_ints<R: AsRef<[i64]>>(rows: &[R]) -> Self {
        EvolutionAlgebra::with_default_labels(Mat::from_ints(rows)).expect("square integer matrix")
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn structure_matrix(&self) -> &Mat {
        &self.matrix
    }

    /// Coordinates of `e_i^2`.
    pub fn square_of_basis(&self, i: usize) -> Element {
        Element::new(self.matrix.column(i))
    }

    fn check_len(&self, x: &Element) -> Result<()> {
        if x.len() == self.dim() {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: x.len(),
            })
        }
    }

    /// `xy = sum_i x_i y_i e_i^2`.
    pub fn multiply(&self, x: &Element, y: &Element) -> Result<Element> {
        self.check_len(x)?;
        self.check_len(y)?;
        let n = self.dim();
        let mut out = vec![Rat::zero(); n];
        for i in 0..n {
            if x.coords[i].is_zero() || y.coords[i].is_zero() {
                continue;
            }
            let c = &x.coords[i] * &y.coords[i];
            for (k, slot) in out.iter_mut().enumerate() {
                let w = &self.matrix[(k, i)];
                if !w.is_zero() {
                    *slot += &c * w;
                }
            }
        }
        Ok(Element::new(out))
    }

    /// Matrix of `L_x`: `M * diag(x)`, so that `L_x(y) = N y`.
    pub fn left_mult_matrix(&self, x: &Element) -> Result<Mat> {
        self.check_len(x)?;
        let n = self.dim();
        let mut m = Mat::zeros(n, n);
        for i in 0..n {
            if x.coords[i].is_zero() {
                continue;
            }
            for k in 0..n {
                let w = &self.matrix[(k, i)];
                if !w.is_zero() {
                    m[(k, i)] = &x.coords[i] * w;
                }
            }
        }
        Ok(m)
    }

    /// `Ann(A)`: span of the basis vectors whose square vanishes.
    pub fn annihilator(&self) -> Subspace {
        let n = self.dim();
        Subspace::axes(n, (0..n).filter(|&i| self.is_null_square(i)))
    }

    pub(crate) fn is_null_square(&self, i: usize) -> bool {
        (0..self.dim()).all(|k| self.matrix[(k, i)].is_zero())
    }

    /// `A = A^2`, i.e. the structure matrix is invertible.
    pub fn is_perfect(&self) -> bool {
        !self.matrix.det().expect("structure matrix is square").is_zero()
    }

    /// Whether `s` is closed under multiplication by every basis element.
    pub fn is_ideal(&self, s: &Subspace) -> Result<bool> {
        if s.ambient_dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: s.ambient_dim(),
            });
        }
        for v in s.basis_vectors() {
            let v = Element::new(v);
            for i in v.support() {
                // v * e_i = v_i e_i^2
                if !s.contains(self.square_of_basis(i).coords())? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Span of all products `uv` with `u ∈ s`, `v ∈ t`.
    pub fn product_space(&self, s: &Subspace, t: &Subspace) -> Result<Subspace> {
        let mut prods = Vec::new();
        for u in s.basis_vectors() {
            let u = Element::new(u);
            for v in t.basis_vectors() {
                let p = self.multiply(&u, &Element::new(v))?;
                if !p.is_zero() {
                    prods.push(p.into_coords());
                }
            }
        }
        Subspace::from_vectors(self.dim(), &prods)
    }

    /// The ideal generated by `x`: `Kx + span{e_j^2 : j reachable from supp x}`.
    /// Closure under multiplication is re-checked before returning.
    pub fn ideal_generated_by(&self, x: &Element) -> Result<Subspace> {
        self.check_len(x)?;
        let graph = DiGraph::from_algebra(self);
        let reach = graph.reach(&x.support());
        let mut gens = Vec::with_capacity(reach.len() + 1);
        if !x.is_zero() {
            gens.push(x.coords.clone());
        }
        for j in reach {
            gens.push(self.matrix.column(j));
        }
        let ideal = Subspace::from_vectors(self.dim(), &gens)?;
        if !self.is_ideal(&ideal)? {
            return Err(Error::Invariant(format!(
                "generated subspace for {x:?} is not multiplication-closed"
            )));
        }
        Ok(ideal)
    }

    fn require_hereditary(&self, h: &VertexSet) -> Result<()> {
        if let Some(&bad) = h.iter().find(|&&v| v >= self.dim()) {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: bad + 1,
            });
        }
        if DiGraph::from_algebra(self).is_hereditary(h) {
            Ok(())
        } else {
            Err(Error::NotHereditary(h.iter().copied().collect()))
        }
    }

    /// `I_H = ⊕_{i ∈ H} K e_i` for a hereditary `H`.
    pub fn basic_ideal(&self, h: &VertexSet) -> Result<BasicIdeal> {
        self.require_hereditary(h)?;
        Ok(BasicIdeal {
            vertices: h.clone(),
            space: Subspace::axes(self.dim(), h.iter().copied()),
        })
    }

    /// `A / I_H`: the structure matrix with the rows and columns of `H`
    /// deleted, on the surviving labels.
    pub fn quotient_by_basic(&self, h: &VertexSet) -> Result<EvolutionAlgebra> {
        self.require_hereditary(h)?;
        let keep: Vec<usize> = (0..self.dim()).filter(|i| !h.contains(i)).collect();
        Ok(self.restrict_unchecked(&keep))
    }

    /// Principal block on `keep`. Only meaningful when the complement of
    /// `keep` is hereditary, or when `keep` is a union of components.
    pub(crate) fn restrict_unchecked(&self, keep: &[usize]) -> EvolutionAlgebra {
        EvolutionAlgebra {
            labels: keep.iter().map(|&i| self.labels[i].clone()).collect(),
            matrix: self.matrix.principal_submatrix(keep),
        }
    }

    /// Upper annihilating series, computed as iterated preimages:
    /// `Ann^(k+1) = {x : x e_j ∈ Ann^(k) for all j}` with `Ann^(0) = 0`.
    pub fn ann_series(&self) -> AnnSeries {
        let n = self.dim();
        let mults: Vec<Mat> = (0..n)
            .map(|j| {
                self.left_mult_matrix(&Element::basis(n, j))
                    .expect("basis element has algebra dimension")
            })
            .collect();
        let step = |s: &Subspace| -> Subspace {
            mults.iter().fold(Subspace::full(n), |acc, m| {
                let pre = s.preimage(m).expect("square multiplication matrix");
                acc.intersect(&pre).expect("same ambient")
            })
        };
        let mut levels: Vec<Subspace> = Vec::new();
        let mut prev = Subspace::zero(n);
        loop {
            let next = step(&prev);
            if next == prev {
                break;
            }
            levels.push(next.clone());
            prev = next;
        }
        let asi = levels.len();
        AnnSeries { levels, asi }
    }

    /// Axis indices of a subspace spanned by coordinate axes, if it is one.
    pub fn axis_support(s: &Subspace) -> Option<VertexSet> {
        let pivots = s.pivots();
        let set: BTreeSet<usize> = pivots.iter().copied().collect();
        (Subspace::axes(s.ambient_dim(), pivots) == *s).then_some(set)
    }
}
