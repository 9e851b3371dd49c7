//! Multivariate polynomials over the rationals and a small Groebner engine.

mod groebner;
mod monomial;
mod mpoly;
mod points;

pub use groebner::{
    groebner, is_zero_dimensional, normal_form, radical_contains, radical_variables, variety_is_only_origin,
    GroebnerConfig, MonomialOrder, PolyIdeal,
};
pub use monomial::Monomial;
pub use mpoly::MPoly;
pub use points::{find_nonzero_point, primitive, PointSearch, PointSearchConfig};

use crate::algebra::EvolutionAlgebra;

/// Entries of `N(x)^2` with `N(x) = M diag(x)`, row-major, as polynomials in
/// `x_1, ..., x_n`: entry `(k, j)` is `sum_i w[k][i] x_i w[i][j] x_j`.
pub fn n2_entries(a: &EvolutionAlgebra) -> Vec<MPoly> {
    let n = a.dim();
    let m = a.structure_matrix();
    let mut out = Vec::with_capacity(n * n);
    for k in 0..n {
        for j in 0..n {
            let terms = (0..n).map(|i| {
                let mut e = vec![0u16; n];
                e[i] += 1;
                e[j] += 1;
                (Monomial::new(e), &m[(k, i)] * &m[(i, j)])
            });
            out.push(MPoly::from_terms(n, terms));
        }
    }
    out
}

/// The ideal generated by the entries of `N(x)^2`.
pub fn n2_ideal(a: &EvolutionAlgebra) -> PolyIdeal {
    PolyIdeal::new(a.dim(), n2_entries(a))
}
