use std::sync::Mutex;

use num_traits::Zero;
use rayon::prelude::*;

use super::{check_support_bound, supports, AnalysisConfig, Verdict3, Witness};
use crate::algebra::{Element, EvolutionAlgebra};
use crate::error::{Error, Result};
use crate::exactla::{Mat, Rat, Subspace};
use crate::graph::{DiGraph, VertexSet};
use crate::poly::{find_nonzero_point, primitive, MPoly, Monomial, PointSearch};

/// A support whose reach has pairwise-annihilating squares and on which the
/// linear conditions `x e_j^2 = 0` (`j` reachable) have nonzero solutions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemiprimeCandidate {
    pub support: Vec<usize>,
    pub reach: VertexSet,
    /// Solutions of the linear conditions, as a subspace of the algebra.
    pub kernel: Subspace,
}

struct Context<'a> {
    a: &'a EvolutionAlgebra,
    graph: DiGraph,
    /// `squares_annihilate[j][k]` iff `e_j^2 e_k^2 = 0`.
    squares_annihilate: Vec<Vec<bool>>,
}

impl<'a> Context<'a> {
    fn new(a: &'a EvolutionAlgebra) -> Self {
        let n = a.dim();
        let squares: Vec<Element> = (0..n).map(|i| a.square_of_basis(i)).collect();
        let squares_annihilate = (0..n)
            .map(|j| {
                (0..n)
                    .map(|k| a.multiply(&squares[j], &squares[k]).expect("same dimension").is_zero())
                    .collect()
            })
            .collect();
        Context {
            a,
            graph: DiGraph::from_algebra(a),
            squares_annihilate,
        }
    }

    fn candidate(&self, g: &[usize]) -> Option<SemiprimeCandidate> {
        let n = self.a.dim();
        let m = self.a.structure_matrix();
        let reach = self.graph.reach(&g.iter().copied().collect());
        let closed = reach
            .iter()
            .all(|&j| reach.iter().all(|&k| self.squares_annihilate[j][k]));
        if !closed {
            return None;
        }
        // x e_j^2 = sum_{i in g} x_i w[i][j] e_i^2 = 0 for every reachable j
        let mut rows = Vec::new();
        for &j in &reach {
            for k in 0..n {
                let row: Vec<Rat> = g.iter().map(|&i| &m[(i, j)] * &m[(k, i)]).collect();
                if row.iter().any(|v| !v.is_zero()) {
                    rows.push(row);
                }
            }
        }
        let local = if rows.is_empty() {
            Subspace::full(g.len())
        } else {
            Mat::from_rows(rows).expect("rows have support length").kernel_basis()
        };
        if local.is_zero() {
            return None;
        }
        let vectors: Vec<Vec<Rat>> = local
            .basis_vectors()
            .into_iter()
            .map(|v| {
                let mut x = vec![Rat::zero(); n];
                for (&i, c) in g.iter().zip(v) {
                    x[i] = c;
                }
                x
            })
            .collect();
        Some(SemiprimeCandidate {
            support: g.to_vec(),
            reach,
            kernel: Subspace::from_vectors(n, &vectors).expect("ambient vectors"),
        })
    }
}

/// Coordinates of `x^2 = sum_i x_i^2 e_i^2` as quadratic forms.
fn square_forms(a: &EvolutionAlgebra) -> Vec<MPoly> {
    let n = a.dim();
    let m = a.structure_matrix();
    (0..n)
        .map(|k| {
            MPoly::from_terms(
                n,
                (0..n).map(|i| {
                    let mut e = vec![0u16; n];
                    e[i] = 2;
                    (Monomial::new(e), m[(k, i)].clone())
                }),
            )
        })
        .collect()
}

/// All surviving supports, in subset order.
pub fn semiprime_candidates(a: &EvolutionAlgebra, cfg: &AnalysisConfig) -> Result<Vec<SemiprimeCandidate>> {
    check_support_bound(a, cfg)?;
    let ctx = Context::new(a);
    Ok(supports(a.dim()).par_iter().filter_map(|g| ctx.candidate(g)).collect())
}

enum Outcome {
    Witness(Element),
    Unknown(String),
}

fn search(forms: &[MPoly], c: &SemiprimeCandidate, cfg: &AnalysisConfig) -> Option<Outcome> {
    let sub = c.kernel.basis().transpose();
    let polys: Vec<MPoly> = forms.iter().map(|p| p.substitute_linear(&sub)).collect();
    let label = format!("support {:?}", c.support);
    match find_nonzero_point(sub.cols(), &polys, &cfg.points) {
        Ok(PointSearch::Found(s)) => {
            let x = sub.mul_vec(&s).expect("parameter arity");
            Some(Outcome::Witness(Element::new(primitive(&x))))
        }
        Ok(PointSearch::OnlyOrigin) => None,
        Ok(PointSearch::Exhausted { height, visited }) => Some(Outcome::Unknown(format!(
            "{label}: closure solutions exist but no rational one up to height {height} ({visited} candidates)"
        ))),
        Err(e) => Some(Outcome::Unknown(format!("{label}: {e}"))),
    }
}

/// Whether every ideal with zero square is zero (`No` carries one that is not).
pub fn semiprime(a: &EvolutionAlgebra, cfg: &AnalysisConfig) -> Result<Verdict3> {
    check_support_bound(a, cfg)?;
    let n = a.dim();
    let ctx = Context::new(a);
    let forms = square_forms(a);
    let all = supports(n);
    let unknown: Mutex<Vec<(usize, String)>> = Mutex::new(Vec::new());
    let found = all.par_iter().enumerate().find_map_first(|(idx, g)| {
        let c = ctx.candidate(g)?;
        match search(&forms, &c, cfg)? {
            Outcome::Witness(x) => Some(x),
            Outcome::Unknown(reason) => {
                unknown.lock().expect("unpoisoned").push((idx, reason));
                None
            }
        }
    });
    if let Some(x) = found {
        let ideal = a.ideal_generated_by(&x)?;
        if ideal.is_zero() || !a.product_space(&ideal, &ideal)?.is_zero() {
            return Err(Error::Invariant(format!(
                "ideal generated by {x:?} does not square to zero"
            )));
        }
        return Ok(Verdict3::no("zero-square-ideal").with_witness(Witness::Ideal(ideal)));
    }
    let mut unknown = unknown.into_inner().expect("unpoisoned");
    if unknown.is_empty() {
        return Ok(Verdict3::yes("closure-variety-origin"));
    }
    unknown.sort();
    let reason = unknown.into_iter().map(|(_, r)| r).collect::<Vec<_>>().join("; ");
    Ok(Verdict3::undetermined("no-rational-witness", reason))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::State;
    use crate::exactla::rat;

    fn cfg() -> AnalysisConfig {
        AnalysisConfig::default()
    }

    #[test]
    fn counterexample_not_semiprime() {
        let a = EvolutionAlgebra::from_ints(&[[1, -1], [1, -1]]);
        let v = semiprime(&a, &cfg()).unwrap();
        assert_eq!(v.state, State::No);
        let w = Subspace::from_vectors(2, &[vec![rat(1, 1), rat(1, 1)]]).unwrap();
        assert_eq!(v.witness_ideal(), Some(&w));
    }

    #[test]
    fn second_example_unique_witness() {
        let a = EvolutionAlgebra::from_ints(&[[1, -1, 0, 1], [-1, 1, 1, 2], [0, 0, 1, 0], [0, 0, 0, 1]]);
        let v = semiprime(&a, &cfg()).unwrap();
        assert!(v.is_no());
        let w = Subspace::from_vectors(4, &[vec![rat(1, 1), rat(-1, 1), rat(0, 1), rat(0, 1)]]).unwrap();
        assert_eq!(v.witness_ideal(), Some(&w));
        let union = semiprime_candidates(&a, &cfg())
            .unwrap()
            .into_iter()
            .fold(Subspace::zero(4), |acc, c| acc.sum(&c.kernel).unwrap());
        assert_eq!(union, w);
    }

    #[test]
    fn four_dim_example_semiprime() {
        let a = EvolutionAlgebra::from_ints(&[[0, 0, 1, -1], [0, 0, 1, -1], [1, -2, 0, 0], [1, -2, 0, 0]]);
        assert_eq!(semiprime(&a, &cfg()).unwrap().state, State::Yes);
    }

    #[test]
    fn perfect_is_semiprime() {
        let a = EvolutionAlgebra::from_ints(&[[1, 2], [3, 4]]);
        assert!(semiprime(&a, &cfg()).unwrap().is_yes());
        assert!(semiprime_candidates(&a, &cfg()).unwrap().is_empty());
    }

    #[test]
    fn annihilator_breaks_semiprimeness() {
        let a = EvolutionAlgebra::from_ints(&[[1, 0], [0, 0]]);
        let v = semiprime(&a, &cfg()).unwrap();
        assert_eq!(v.witness_ideal(), Some(&Subspace::axes(2, [1])));
    }

    #[test]
    fn prime_not_perfect_is_semiprime() {
        let a = EvolutionAlgebra::from_ints(&[[1, 1], [0, 0]]);
        assert!(semiprime(&a, &cfg()).unwrap().is_yes());
    }

    #[test]
    fn null_square_spans_witness() {
        let a = EvolutionAlgebra::from_ints(&[[0, 0, 0], [0, 0, 0], [1, -2, 0]]);
        let v = semiprime(&a, &cfg()).unwrap();
        assert_eq!(v.witness_ideal(), Some(&Subspace::axes(3, [2])));
    }
}
