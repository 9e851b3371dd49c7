//! Verdict engines tying the graph of an algebra to its multiplication.

mod absorption;
mod centroid;
mod degeneracy;
mod prime;
mod regular;
mod semiprime;

use std::fmt;

use serde::Serialize;

pub use absorption::{absorption, has_absorption, Absorption};
pub use centroid::{centroid, decompose, CentroidBasis};
pub use degeneracy::{degeneracy, is_absolute_zero_divisor, nondegenerate_perfect_check};
pub use prime::{prime, prime_ideals, PrimeIdeals, QuotientOutcome};
pub use regular::{vn_algebra, vn_element};
pub use semiprime::{semiprime, semiprime_candidates, SemiprimeCandidate};

use crate::algebra::{Element, EvolutionAlgebra};
use crate::error::{Error, Result};
use crate::exactla::Subspace;
use crate::graph::{DiGraph, DEFAULT_HEREDITARY_BOUND};
use crate::poly::PointSearchConfig;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum State {
    Yes,
    No,
    Undetermined,
}

impl fmt::Display for State {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            State::Yes => "yes",
            State::No => "no",
            State::Undetermined => "undetermined",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    Element(Element),
    Ideal(Subspace),
}

/// Three-valued answer with the rule that produced it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict3 {
    pub state: State,
    pub witness: Option<Witness>,
    /// Short tag naming the rule used.
    pub certificate: &'static str,
    /// Why the answer is undetermined, when it is.
    pub reason: Option<String>,
}

impl Verdict3 {
    fn yes(certificate: &'static str) -> Self {
        Verdict3 {
            state: State::Yes,
            witness: None,
            certificate,
            reason: None,
        }
    }

    fn no(certificate: &'static str) -> Self {
        Verdict3 {
            state: State::No,
            witness: None,
            certificate,
            reason: None,
        }
    }

    fn undetermined(certificate: &'static str, reason: String) -> Self {
        Verdict3 {
            state: State::Undetermined,
            witness: None,
            certificate,
            reason: Some(reason),
        }
    }

    fn with_witness(mut self, w: Witness) -> Self {
        self.witness = Some(w);
        self
    }

    pub fn is_yes(&self) -> bool {
        self.state == State::Yes
    }

    pub fn is_no(&self) -> bool {
        self.state == State::No
    }

    pub fn witness_element(&self) -> Option<&Element> {
        match &self.witness {
            Some(Witness::Element(e)) => Some(e),
            _ => None,
        }
    }

    pub fn witness_ideal(&self) -> Option<&Subspace> {
        match &self.witness {
            Some(Witness::Ideal(s)) => Some(s),
            _ => None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum DegeneracyEngine {
    /// Per-support linear systems.
    #[default]
    Linear,
    /// Variety of the entries of `N(x)^2`.
    Groebner,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AnalysisConfig {
    /// Largest dimension for which supports are enumerated.
    pub support_bound: usize,
    /// Largest dimension for which hereditary subsets are enumerated.
    pub hereditary_bound: usize,
    pub engine: DegeneracyEngine,
    pub points: PointSearchConfig,
}

impl Default for AnalysisConfig {
    fn default() -> Self {
        AnalysisConfig {
            support_bound: 16,
            hereditary_bound: DEFAULT_HEREDITARY_BOUND,
            engine: DegeneracyEngine::Linear,
            points: PointSearchConfig::default(),
        }
    }
}

/// `Ann(A) = 0`, equivalently the graph has no sinks.
pub fn is_zero_annihilator(a: &EvolutionAlgebra) -> bool {
    let sinkless = DiGraph::from_algebra(a).is_sinkless();
    let algebraic = a.annihilator().is_zero();
    assert_eq!(sinkless, algebraic, "sink set and annihilator disagree");
    sinkless
}

fn check_support_bound(a: &EvolutionAlgebra, cfg: &AnalysisConfig) -> Result<()> {
    if a.dim() > cfg.support_bound {
        return Err(Error::BoundExceeded {
            what: "support enumeration dimension",
            limit: cfg.support_bound,
            actual: a.dim(),
        });
    }
    Ok(())
}

/// Nonempty subsets of `0..n` ordered by size, then lexicographically.
pub(crate) fn supports(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::with_capacity((1usize << n) - 1);
    for k in 1..=n {
        let mut idx: Vec<usize> = (0..k).collect();
        loop {
            out.push(idx.clone());
            // next k-combination in lexicographic order
            let mut i = k;
            while i > 0 && idx[i - 1] == n - k + i - 1 {
                i -= 1;
            }
            if i == 0 {
                break;
            }
            idx[i - 1] += 1;
            for j in i..k {
                idx[j] = idx[j - 1] + 1;
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn support_order() {
        let s = supports(3);
        let expect: Vec<Vec<usize>> = vec![
            vec![0],
            vec![1],
            vec![2],
            vec![0, 1],
            vec![0, 2],
            vec![1, 2],
            vec![0, 1, 2],
        ];
        assert_eq!(s, expect);
        assert_eq!(supports(5).len(), 31);
    }

    #[test]
    fn zero_annihilator_examples() {
        let four = EvolutionAlgebra::from_ints(&[[0, 0, 1, -1], [0, 0, 1, -1], [1, -2, 0, 0], [1, -2, 0, 0]]);
        assert!(is_zero_annihilator(&four));
        assert!(!is_zero_annihilator(&EvolutionAlgebra::from_ints(&[[1, 0], [0, 0]])));
        assert!(is_zero_annihilator(&EvolutionAlgebra::from_ints(&[[1, -1], [1, -1]])));
    }
}
