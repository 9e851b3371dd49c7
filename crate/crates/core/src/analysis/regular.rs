use crate::algebra::{Element, EvolutionAlgebra};
use crate::error::{Error, Result};
use crate::graph::DiGraph;

/// A `y` with `(xy)x = x`, found by solving `(M diag(x))^2 y = x`.
pub fn vn_element(a: &EvolutionAlgebra, x: &Element) -> Result<Option<Element>> {
    let n_x = a.left_mult_matrix(x)?;
    let sq = n_x.mul(&n_x)?;
    let Some(y) = sq.solve(x.coords())? else {
        return Ok(None);
    };
    let y = Element::new(y);
    if a.multiply(&a.multiply(x, &y)?, x)? != *x {
        return Err(Error::Invariant(format!("{y:?} solves the system but (xy)x != x")));
    }
    Ok(Some(y))
}

/// Every element is von Neumann regular iff the graph is a disjoint union of
/// loops.
pub fn vn_algebra(a: &EvolutionAlgebra) -> bool {
    DiGraph::from_algebra(a).is_isolated_loops()
}
