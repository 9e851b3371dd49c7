use super::{semiprime, AnalysisConfig, State, Verdict3};
use crate::algebra::{BasicIdeal, EvolutionAlgebra};
use crate::error::Result;
use crate::graph::{DiGraph, VertexSet};

/// Whether every pair of nonzero ideals has nonzero product.
pub fn prime(a: &EvolutionAlgebra, cfg: &AnalysisConfig) -> Result<Verdict3> {
    let g = DiGraph::from_algebra(a);
    if !g.is_downward_directed() {
        return Ok(Verdict3::no("not-downward-directed"));
    }
    if a.is_perfect() {
        return Ok(Verdict3::yes("perfect-downward-directed"));
    }
    let s = semiprime(a, cfg)?;
    Ok(match s.state {
        State::Yes => Verdict3::yes("semiprime-downward-directed"),
        State::No => {
            let mut v = Verdict3::no("not-semiprime");
            v.witness = s.witness;
            v
        }
        State::Undetermined => Verdict3::undetermined("semiprime-undetermined", s.reason.unwrap_or_default()),
    })
}

/// Why a hereditary set does or does not give a prime ideal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum QuotientOutcome {
    Prime,
    NotDownwardDirected,
    NotSemiprime,
    Undetermined(String),
}

/// Prime ideals of `A` together with every proper hereditary set examined.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeIdeals {
    pub ideals: Vec<BasicIdeal>,
    /// Every proper hereditary set in enumeration order with its outcome.
    pub examined: Vec<(VertexSet, QuotientOutcome)>,
}

impl PrimeIdeals {
    /// Hereditary sets whose quotient could not be classified.
    pub fn undetermined(&self) -> impl Iterator<Item = (&VertexSet, &str)> {
        self.examined.iter().filter_map(|(h, o)| match o {
            QuotientOutcome::Undetermined(r) => Some((h, r.as_str())),
            _ => None,
        })
    }

    pub fn outcome(&self, h: &VertexSet) -> Option<&QuotientOutcome> {
        self.examined.iter().find(|(k, _)| k == h).map(|(_, o)| o)
    }
}

/// The basic ideals `I_H`, `H` proper hereditary, whose quotient graph is
/// downward directed and whose quotient algebra is semiprime.
pub fn prime_ideals(a: &EvolutionAlgebra, cfg: &AnalysisConfig) -> Result<PrimeIdeals> {
    let g = DiGraph::from_algebra(a);
    let n = a.dim();
    let mut ideals = Vec::new();
    let mut examined = Vec::new();
    for h in g.hereditary_subsets(cfg.hereditary_bound)? {
        if h.len() == n {
            continue;
        }
        let outcome = if !g.quotient(&h).is_downward_directed() {
            QuotientOutcome::NotDownwardDirected
        } else {
            let q = a.quotient_by_basic(&h)?;
            let s = semiprime(&q, cfg)?;
            match s.state {
                State::Yes => QuotientOutcome::Prime,
                State::No => QuotientOutcome::NotSemiprime,
                State::Undetermined => QuotientOutcome::Undetermined(s.reason.unwrap_or_default()),
            }
        };
        if outcome == QuotientOutcome::Prime {
            ideals.push(a.basic_ideal(&h)?);
        }
        examined.push((h, outcome));
    }
    Ok(PrimeIdeals { ideals, examined })
}
