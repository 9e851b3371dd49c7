use num_traits::Zero;
use rayon::prelude::*;

use super::{check_support_bound, supports, AnalysisConfig, DegeneracyEngine, Verdict3, Witness};
use crate::algebra::{Element, EvolutionAlgebra};
use crate::error::{Error, Result};
use crate::exactla::{Mat, Rat};
use crate::graph::DiGraph;
use crate::poly::{find_nonzero_point, n2_ideal, primitive, variety_is_only_origin, PointSearch};

/// `(x e_i) x = 0` for every basis element, i.e. `L_x^2 = 0`.
pub fn is_absolute_zero_divisor(a: &EvolutionAlgebra, x: &Element) -> Result<bool> {
    for i in x.support() {
        let xe = a.multiply(x, &Element::basis(a.dim(), i))?;
        if !a.multiply(&xe, x)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Whether `A` has a nonzero absolute zero divisor (`Yes` = degenerate).
pub fn degeneracy(a: &EvolutionAlgebra, cfg: &AnalysisConfig) -> Result<Verdict3> {
    match cfg.engine {
        DegeneracyEngine::Linear => degeneracy_linear(a, cfg),
        DegeneracyEngine::Groebner => degeneracy_groebner(a, cfg),
    }
}

/// For a support `g`, the coefficient matrix of
/// `sum_{q in g} w[q][i] x_q e_q^2 = 0` for all `i in g`.
fn support_system(m: &Mat, g: &[usize]) -> Mat {
    let n = m.rows();
    let mut rows = Vec::with_capacity(g.len() * n);
    for &i in g {
        for k in 0..n {
            let row: Vec<Rat> = g.iter().map(|&q| &m[(q, i)] * &m[(k, q)]).collect();
            if row.iter().any(|v| !v.is_zero()) {
                rows.push(row);
            }
        }
    }
    if rows.is_empty() {
        return Mat::zeros(0, g.len());
    }
    Mat::from_rows(rows).expect("rows have support length")
}

fn embed(n: usize, g: &[usize], local: &[Rat]) -> Element {
    let mut coords = vec![Rat::zero(); n];
    for (&q, v) in g.iter().zip(local) {
        coords[q] = v.clone();
    }
    Element::new(primitive(&coords))
}

fn degeneracy_linear(a: &EvolutionAlgebra, cfg: &AnalysisConfig) -> Result<Verdict3> {
    check_support_bound(a, cfg)?;
    let n = a.dim();
    let m = a.structure_matrix();
    let found = supports(n).par_iter().find_map_first(|g| {
        let kernel = support_system(m, g).kernel_basis();
        (!kernel.is_zero()).then(|| embed(n, g, kernel.basis().row(0)))
    });
    match found {
        Some(x) => {
            if !is_absolute_zero_divisor(a, &x)? {
                return Err(Error::Invariant(format!(
                    "support witness {x:?} is not an absolute zero divisor"
                )));
            }
            Ok(Verdict3::yes("support-kernel").with_witness(Witness::Element(x)))
        }
        None => Ok(Verdict3::no("no-support-kernel")),
    }
}

fn degeneracy_groebner(a: &EvolutionAlgebra, cfg: &AnalysisConfig) -> Result<Verdict3> {
    let ideal = n2_ideal(a);
    let only_origin = match variety_is_only_origin(&ideal, &cfg.points.groebner) {
        Ok(b) => b,
        Err(Error::EngineLimit(msg)) => return Ok(Verdict3::undetermined("n2-variety", msg)),
        Err(e) => return Err(e),
    };
    if only_origin {
        return Ok(Verdict3::no("n2-variety-origin"));
    }
    let verdict = Verdict3::yes("n2-variety-nonzero");
    match find_nonzero_point(a.dim(), ideal.generators(), &cfg.points) {
        Ok(PointSearch::Found(x)) => {
            let x = Element::new(x);
            if !is_absolute_zero_divisor(a, &x)? {
                return Err(Error::Invariant(format!(
                    "variety point {x:?} is not an absolute zero divisor"
                )));
            }
            Ok(verdict.with_witness(Witness::Element(x)))
        }
        Ok(PointSearch::OnlyOrigin) => Err(Error::Invariant(
            "point search contradicts the radical computation".to_string(),
        )),
        Ok(PointSearch::Exhausted { .. }) | Err(Error::EngineLimit(_)) => Ok(verdict),
        Err(e) => Err(e),
    }
}

/// For perfect `A`: no nonempty principal pattern of the structure matrix is
/// zero, which happens exactly when every vertex carries a loop.
pub fn nondegenerate_perfect_check(a: &EvolutionAlgebra) -> Result<bool> {
    if !a.is_perfect() {
        return Err(Error::Precondition("algebra is not perfect".to_string()));
    }
    let g = DiGraph::from_algebra(a);
    Ok((0..a.dim()).all(|v| g.has_edge(v, v)))
}
