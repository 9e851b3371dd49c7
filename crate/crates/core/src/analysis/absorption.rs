use crate::algebra::EvolutionAlgebra;
use crate::error::{Error, Result};
use crate::exactla::Subspace;
use crate::graph::{DiGraph, SinkStrata, VertexSet};

/// The absorption radical with the data that certifies it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Absorption {
    pub radical: Subspace,
    pub vertices: VertexSet,
    /// Stabilizing index of the upper annihilating series.
    pub asi: usize,
    pub strata: SinkStrata,
}

/// Radical as the span of all sink strata; checked against the upper
/// annihilating series level by level.
pub fn absorption(a: &EvolutionAlgebra) -> Result<Absorption> {
    let n = a.dim();
    let strata = DiGraph::from_algebra(a).sink_strata();
    let series = a.ann_series();
    if series.asi != strata.strata.len() {
        return Err(Error::Invariant(format!(
            "annihilating series stabilizes at {} but there are {} sink strata",
            series.asi,
            strata.strata.len()
        )));
    }
    for (k, level) in series.levels.iter().enumerate() {
        if *level != Subspace::axes(n, strata.union_up_to(k + 1)) {
            return Err(Error::Invariant(format!(
                "Ann^({}) differs from the span of the first {} strata",
                k + 1,
                k + 1
            )));
        }
    }
    let vertices = strata.stratified();
    Ok(Absorption {
        radical: Subspace::axes(n, vertices.iter().copied()),
        vertices,
        asi: series.asi,
        strata,
    })
}

/// Whether `A / I_H` has zero annihilator, i.e. `E / H` is sinkless.
pub fn has_absorption(a: &EvolutionAlgebra, h: &VertexSet) -> Result<bool> {
    let g = DiGraph::from_algebra(a);
    if h.iter().any(|&v| v >= a.dim()) || !g.is_hereditary(h) {
        return Err(Error::NotHereditary(h.iter().copied().collect()));
    }
    Ok(g.quotient(h).is_sinkless())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vs(xs: &[usize]) -> VertexSet {
        xs.iter().copied().collect()
    }

    fn eight_vertex() -> EvolutionAlgebra {
        let edges = [
            (0, 0),
            (0, 1),
            (0, 2),
            (1, 1),
            (2, 2),
            (2, 1),
            (2, 3),
            (2, 4),
            (3, 6),
            (3, 7),
            (4, 5),
            (5, 3),
        ];
        let mut m = vec![vec![0i64; 8]; 8];
        for (s, t) in edges {
            m[t][s] = 1;
        }
        EvolutionAlgebra::from_ints(&m)
    }

    #[test]
    fn eight_vertex_radical() {
        let r = absorption(&eight_vertex()).unwrap();
        assert_eq!(r.vertices, vs(&[3, 4, 5, 6, 7]));
        assert_eq!(r.asi, 4);
        assert_eq!(r.radical, Subspace::axes(8, [3, 4, 5, 6, 7]));
    }

    #[test]
    fn sinkless_has_zero_radical() {
        let r = absorption(&EvolutionAlgebra::from_ints(&[[1, -1], [1, -1]])).unwrap();
        assert!(r.radical.is_zero());
        assert_eq!(r.asi, 0);
    }

    #[test]
    fn absorption_of_basic_ideals() {
        let a = EvolutionAlgebra::from_ints(&[
            [1, 0, 1, 0, 0],
            [0, 1, 1, 0, 0],
            [0, 0, 1, 0, 0],
            [0, 0, 1, 1, -1],
            [0, 0, 0, 1, -1],
        ]);
        assert!(has_absorption(&a, &vs(&[3, 4])).unwrap());
        assert!(has_absorption(&a, &vs(&[])).unwrap());
        assert_eq!(has_absorption(&a, &vs(&[2])), Err(Error::NotHereditary(vec![2])));
    }
}
