use num_traits::Zero;

use super::is_zero_annihilator;
use crate::algebra::{Element, EvolutionAlgebra};
use crate::error::{Error, Result};
use crate::exactla::{Mat, Rat, Subspace};
use crate::graph::DiGraph;

/// Largest dimension accepted by [`centroid`]; the system has `n^2` unknowns.
pub const CENTROID_BOUND: usize = 16;

/// A basis of the centroid: linear maps `T` with `T(xy) = x T(y)`. Column `j`
/// of each matrix holds the coordinates of `T(e_j)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CentroidBasis {
    pub dim: usize,
    pub basis_mats: Vec<Mat>,
}

impl CentroidBasis {
    /// Checks `T(e_i e_j) = e_i T(e_j)` for all basis pairs.
    pub fn is_centralizer(a: &EvolutionAlgebra, t: &Mat) -> Result<bool> {
        let n = a.dim();
        let image = |v: &Element| Element::new(t.mul_vec(v.coords()).expect("square"));
        for i in 0..n {
            let ei = Element::basis(n, i);
            for j in 0..n {
                let ej = Element::basis(n, j);
                let lhs = image(&a.multiply(&ei, &ej)?);
                let rhs = a.multiply(&ei, &image(&ej))?;
                if lhs != rhs {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

/// Solves `w[k][i] t[i][j] = 0` (`i != j`) and
/// `w[k][i] t[i][i] - sum_j t[k][j] w[j][i] = 0` in the unknowns `t[i][j]`.
pub fn centroid(a: &EvolutionAlgebra) -> Result<CentroidBasis> {
    let n = a.dim();
    if n > CENTROID_BOUND {
        return Err(Error::BoundExceeded {
            what: "centroid dimension",
            limit: CENTROID_BOUND,
            actual: n,
        });
    }
    if n == 0 {
        return Ok(CentroidBasis {
            dim: 0,
            basis_mats: Vec::new(),
        });
    }
    let m = a.structure_matrix();
    let u = |i: usize, j: usize| i * n + j;
    let mut rows: Vec<Vec<Rat>> = Vec::new();
    for i in 0..n {
        if a.is_null_square(i) {
            continue;
        }
        // some w[k][i] != 0, so every off-diagonal t[i][j] vanishes
        for j in (0..n).filter(|&j| j != i) {
            let mut row = vec![Rat::zero(); n * n];
            row[u(i, j)] = Rat::from_integer(1.into());
            rows.push(row);
        }
    }
    for i in 0..n {
        for k in 0..n {
            let mut row = vec![Rat::zero(); n * n];
            row[u(i, i)] += &m[(k, i)];
            for j in 0..n {
                row[u(k, j)] -= &m[(j, i)];
            }
            if row.iter().any(|v| !v.is_zero()) {
                rows.push(row);
            }
        }
    }
    let kernel = if rows.is_empty() {
        Subspace::full(n * n)
    } else {
        Mat::from_rows(rows)?.kernel_basis()
    };
    let basis_mats: Vec<Mat> = kernel
        .basis_vectors()
        .into_iter()
        .map(|v| Mat::from_vec(n, n, v).expect("n*n entries"))
        .collect();
    for t in &basis_mats {
        if !CentroidBasis::is_centralizer(a, t)? {
            return Err(Error::Invariant(format!(
                "centroid kernel vector {t:?} is not a centralizer"
            )));
        }
    }
    Ok(CentroidBasis {
        dim: basis_mats.len(),
        basis_mats,
    })
}

/// Splits a zero-annihilator algebra into one summand per graph component.
pub fn decompose(a: &EvolutionAlgebra) -> Result<Vec<EvolutionAlgebra>> {
    if !is_zero_annihilator(a) {
        return Err(Error::Precondition(
            "decomposition requires zero annihilator".to_string(),
        ));
    }
    let mut out = Vec::new();
    for comp in DiGraph::from_algebra(a).components() {
        let keep: Vec<usize> = comp.into_iter().collect();
        let summand = a.restrict_unchecked(&keep);
        let c = centroid(&summand)?;
        if c.dim != 1 {
            return Err(Error::Invariant(format!(
                "summand on {keep:?} has centroid dimension {}",
                c.dim
            )));
        }
        out.push(summand);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_component_identity_only() {
        let a = EvolutionAlgebra::from_ints(&[[1, -1], [1, -1]]);
        let c = centroid(&a).unwrap();
        assert_eq!(c.dim, 1);
        assert_eq!(c.basis_mats[0], Mat::identity(2));
    }

    #[test]
    fn two_loops() {
        let c = centroid(&EvolutionAlgebra::from_ints(&[[1, 0], [0, 1]])).unwrap();
        assert_eq!(c.dim, 2);
        assert_eq!(
            c.basis_mats,
            vec![Mat::from_ints(&[[1, 0], [0, 0]]), Mat::from_ints(&[[0, 0], [0, 1]])]
        );
    }

    #[test]
    fn nonzero_annihilator_centroid_is_checked_by_axioms() {
        let a = EvolutionAlgebra::from_ints(&[[1, 0], [0, 0]]);
        let c = centroid(&a).unwrap();
        for t in &c.basis_mats {
            assert!(CentroidBasis::is_centralizer(&a, t).unwrap());
        }
        // T(e1) = a e1, T(e2) = c e2
        assert_eq!(c.dim, 2);
    }

    #[test]
    fn zero_algebra_centroid_is_everything() {
        let c = centroid(&EvolutionAlgebra::from_ints(&[[0, 0], [0, 0]])).unwrap();
        assert_eq!(c.dim, 4);
    }

    #[test]
    fn decompositions() {
        let parts = decompose(&EvolutionAlgebra::from_ints(&[[1, 0], [0, 1]])).unwrap();
        assert_eq!(parts.len(), 2);
        assert!(parts.iter().all(|p| p.dim() == 1));
        let one = EvolutionAlgebra::from_ints(&[[1, -1], [1, -1]]);
        assert_eq!(decompose(&one).unwrap(), vec![one.clone()]);
        assert!(decompose(&EvolutionAlgebra::from_ints(&[[1, 0], [0, 0]])).is_err());
    }
}
