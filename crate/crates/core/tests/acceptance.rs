//! Acceptance suite: one line per criterion, non-zero exit if any fails.
//!
//! Run with `cargo test --test acceptance`.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use evolalg::analysis::{
    absorption, centroid, degeneracy, is_absolute_zero_divisor, is_zero_annihilator, nondegenerate_perfect_check,
    prime, prime_ideals, semiprime, semiprime_candidates, vn_element, AnalysisConfig, DegeneracyEngine,
    QuotientOutcome, State,
};
use evolalg::cli::{analyze, format_combination, random_algebra, to_json};
use evolalg::exactla::{format_rat, rat, Rat, Subspace};
use evolalg::graph::{DiGraph, VertexSet};
use evolalg::poly::{n2_entries, n2_ideal, radical_variables, variety_is_only_origin, GroebnerConfig};
use evolalg::{Element, EvolutionAlgebra};
use num_traits::Zero;

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn cfg() -> AnalysisConfig {
    AnalysisConfig::default()
}

fn groebner_cfg() -> AnalysisConfig {
    AnalysisConfig {
        engine: DegeneracyEngine::Groebner,
        ..AnalysisConfig::default()
    }
}

fn span(n: usize, vs: &[&[i64]]) -> Subspace {
    let vs: Vec<Vec<Rat>> = vs.iter().map(|v| v.iter().map(|&x| rat(x, 1)).collect()).collect();
    Subspace::from_vectors(n, &vs).unwrap()
}

fn vs(xs: &[usize]) -> VertexSet {
    xs.iter().copied().collect()
}

fn counterexample() -> EvolutionAlgebra {
    EvolutionAlgebra::from_ints(&[[1, -1], [1, -1]])
}

fn degenerate4() -> EvolutionAlgebra {
    EvolutionAlgebra::from_ints(&[[1, 0, 1, -1], [0, 1, 1, 1], [1, 1, 2, 0], [1, 1, 2, 0]])
}

fn zero_square4() -> EvolutionAlgebra {
    EvolutionAlgebra::from_ints(&[[1, -1, 0, 1], [-1, 1, 1, 2], [0, 0, 1, 0], [0, 0, 0, 1]])
}

fn degenerate5() -> EvolutionAlgebra {
    EvolutionAlgebra::from_ints(&[
        [1, -1, 0, 0, 1],
        [1, -1, 0, 0, 1],
        [0, 0, 1, -1, 1],
        [0, 0, 0, 0, 1],
        [0, 0, 0, 0, 1],
    ])
}

fn nonprime5() -> EvolutionAlgebra {
    EvolutionAlgebra::from_ints(&[
        [1, 0, 1, 0, 0],
        [0, 1, 1, 0, 0],
        [0, 0, 1, 0, 0],
        [0, 0, 1, 1, -1],
        [0, 0, 0, 1, -1],
    ])
}

fn strata8() -> EvolutionAlgebra {
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

/// The seeded property suite: dims 2..=6 and densities {0.3, 0.6, 0.9}
/// cycled over 1000 seeds.
fn suite() -> Vec<(u64, EvolutionAlgebra)> {
    const DENSITIES: [f64; 3] = [0.3, 0.6, 0.9];
    (0..1000u64)
        .map(|seed| {
            let dim = 2 + (seed % 5) as usize;
            let density = DENSITIES[((seed / 5) % 3) as usize];
            (seed, random_algebra(dim, density, seed).unwrap())
        })
        .collect()
}

fn subspace_in_azd_locus(a: &EvolutionAlgebra, s: &Subspace) -> bool {
    // every element of s is an absolute zero divisor iff N(x)^2 vanishes
    // identically on s
    let sub = s.basis().transpose();
    n2_entries(a).iter().all(|p| p.substitute_linear(&sub).is_zero())
}

fn zero_square_ideal(a: &EvolutionAlgebra, s: &Subspace) -> bool {
    !s.is_zero() && a.is_ideal(s).unwrap() && a.product_space(s, s).unwrap().is_zero()
}

fn criterion_1() -> Outcome {
    let a = counterexample();
    let d = degeneracy(&a, &cfg()).map_err(|e| e.to_string())?;
    ensure!(d.is_yes(), "degeneracy {:?}", d.state);
    let w = d.witness_element().ok_or("no witness")?;
    ensure!(
        span(2, &[&[1, 1]]).contains(w.coords()).unwrap() && !w.is_zero(),
        "witness {w:?} not on the line (1,1)"
    );
    let s = semiprime(&a, &cfg()).map_err(|e| e.to_string())?;
    ensure!(s.is_no(), "semiprime {:?}", s.state);
    ensure!(
        s.witness_ideal() == Some(&span(2, &[&[1, 1]])),
        "witness ideal {:?}",
        s.witness_ideal()
    );
    ensure!(!a.is_perfect(), "perfect");
    ensure!(is_zero_annihilator(&a), "nonzero annihilator");
    let comps = DiGraph::from_algebra(&a).components().len();
    ensure!(comps == 1, "{comps} components");
    let c = centroid(&a).map_err(|e| e.to_string())?;
    ensure!(c.dim == 1, "centroid dim {}", c.dim);
    Ok("degenerate via e1+e2, zero-square ideal span{e1+e2}, centroid dim 1".into())
}

fn criterion_2() -> Outcome {
    let a = degenerate4();
    let d = degeneracy(&a, &cfg()).map_err(|e| e.to_string())?;
    ensure!(d.is_yes(), "degeneracy {:?}", d.state);
    let e4 = Element::from_ints(&[0, 0, 0, 1]);
    ensure!(d.witness_element() == Some(&e4), "witness {:?}", d.witness_element());
    ensure!(is_absolute_zero_divisor(&a, &e4).unwrap(), "e4 fails L^2 = 0");
    let g = degeneracy(&a, &groebner_cfg()).map_err(|e| e.to_string())?;
    ensure!(g.is_yes(), "groebner engine says {:?}", g.state);
    let ideal = n2_ideal(&a);
    let gcfg = GroebnerConfig::default();
    let rad = radical_variables(&ideal, &gcfg).map_err(|e| e.to_string())?;
    ensure!(rad == vec![0, 1, 2], "variables in the radical: {rad:?}");
    ensure!(
        !variety_is_only_origin(&ideal, &gcfg).unwrap(),
        "variety is only the origin"
    );
    Ok("witness (0,0,0,1); x, y, z in the radical, t free".into())
}

fn criterion_3() -> Outcome {
    let a = zero_square4();
    let s = semiprime(&a, &cfg()).map_err(|e| e.to_string())?;
    let line = span(4, &[&[1, -1, 0, 0]]);
    ensure!(s.is_no(), "semiprime {:?}", s.state);
    ensure!(s.witness_ideal() == Some(&line), "witness {:?}", s.witness_ideal());
    ensure!(zero_square_ideal(&a, &line), "Q(e1-e2) is not a zero-square ideal");
    // Uniqueness: every candidate support's linear solutions lie on the line,
    // so any zero-square ideal, being spanned by such solutions, is the line.
    let union = semiprime_candidates(&a, &cfg())
        .map_err(|e| e.to_string())?
        .iter()
        .fold(Subspace::zero(4), |acc, c| acc.sum(&c.kernel).unwrap());
    ensure!(union == line, "candidate solutions span {union:?}");
    Ok("unique zero-square ideal Q(e1-e2)".into())
}

fn criterion_4() -> Outcome {
    let a = degenerate5();
    let mut notes = Vec::new();
    let d = degeneracy(&a, &cfg()).map_err(|e| e.to_string())?;
    ensure!(d.is_yes(), "degeneracy {:?}", d.state);
    let e4 = span(5, &[&[0, 0, 0, 1, 0]]);
    let plane = span(5, &[&[1, 1, 0, 0, 0], &[0, 0, 0, 1, 0]]);
    for (name, s) in [("Qe4", &e4), ("Q(e1+e2)+Qe4", &plane)] {
        ensure!(
            subspace_in_azd_locus(&a, s),
            "{name} is not inside the zero-divisor locus"
        );
        ensure!(!a.is_ideal(s).unwrap(), "{name} is an ideal");
    }
    notes.push("Qe4 and Q(e1+e2)+Qe4 lie in the locus and are not ideals".to_string());
    let s = semiprime(&a, &cfg()).map_err(|e| e.to_string())?;
    if s.state != State::Yes {
        let w = s.witness_ideal().cloned().unwrap_or_else(|| Subspace::zero(5));
        return Err(format!(
            "{}; expected semiprime = yes, engine says {} with zero-square ideal span{{{}}} (re-verified: {})",
            notes.join("; "),
            s.state,
            w.basis_vectors()
                .iter()
                .map(|v| format_combination(a.labels(), &v.iter().map(format_rat).collect::<Vec<_>>()))
                .collect::<Vec<_>>()
                .join(", "),
            zero_square_ideal(&a, &w)
        ));
    }
    Ok("semiprime and degenerate".into())
}

fn criterion_5() -> Outcome {
    let a = nonprime5();
    let p = prime_ideals(&a, &cfg()).map_err(|e| e.to_string())?;
    let got: BTreeSet<VertexSet> = p.ideals.iter().map(|i| i.vertices.clone()).collect();
    let want: BTreeSet<VertexSet> = [vs(&[0, 3, 4]), vs(&[1, 3, 4]), vs(&[0, 1, 3, 4])].into();
    ensure!(got == want, "prime ideals {got:?}");
    ensure!(p.ideals.len() == 3, "{} ideals", p.ideals.len());
    ensure!(
        p.outcome(&vs(&[0, 1])) == Some(&QuotientOutcome::NotSemiprime),
        "H1 outcome {:?}",
        p.outcome(&vs(&[0, 1]))
    );
    ensure!(p.undetermined().count() == 0, "undetermined quotients");
    Ok("exactly three prime ideals; {e1,e2} rejected as not semiprime".into())
}

fn criterion_6() -> Outcome {
    let a = strata8();
    let g = DiGraph::from_algebra(&a);
    let st = g.sink_strata();
    let want = vec![vs(&[6, 7]), vs(&[3]), vs(&[5]), vs(&[4])];
    ensure!(st.strata == want, "strata {:?}", st.strata);
    let r = absorption(&a).map_err(|e| e.to_string())?;
    ensure!(
        r.radical == Subspace::axes(8, [3, 4, 5, 6, 7]),
        "radical {:?}",
        r.vertices
    );
    ensure!(r.asi == 4, "asi {}", r.asi);
    let series = a.ann_series();
    for k in 1..=4 {
        let expect = Subspace::axes(8, st.union_up_to(k));
        ensure!(series.levels[k - 1] == expect, "Ann^({k}) mismatch");
    }
    Ok("strata {e7,e8},{e4},{e6},{e5}; radical span{e4..e8}; asi 4".into())
}

fn all_loops(a: &EvolutionAlgebra) -> bool {
    let g = DiGraph::from_algebra(a);
    (0..a.dim()).all(|v| g.has_edge(v, v))
}

fn criterion_7() -> Outcome {
    let mut violations: Vec<String> = Vec::new();
    let mut undetermined = 0usize;
    let mut counts = [0usize; 3];
    for (seed, a) in suite() {
        let mut bad = |what: &str| violations.push(format!("seed {seed}: {what}"));
        let g = DiGraph::from_algebra(&a);
        // (a)
        if a.annihilator().is_zero() != g.is_sinkless() {
            bad("zero annihilator vs sinkless");
        }
        let sp = semiprime(&a, &cfg()).map_err(|e| e.to_string())?;
        if sp.state == State::Undetermined {
            undetermined += 1;
        }
        let lin = degeneracy(&a, &cfg()).map_err(|e| e.to_string())?;
        // (b), (c)
        if a.is_perfect() {
            counts[0] += 1;
            if !sp.is_yes() {
                bad("perfect but not semiprime yes");
            }
            let check = nondegenerate_perfect_check(&a).map_err(|e| e.to_string())?;
            if check != all_loops(&a) || check != lin.is_no() {
                bad("perfect-case nondegeneracy criteria disagree");
            }
        }
        // (d)
        if !g.is_downward_directed() && prime(&a, &cfg()).map_err(|e| e.to_string())?.state != State::No {
            bad("not downward directed but prime is not no");
        }
        // (e)
        if is_zero_annihilator(&a) {
            counts[1] += 1;
            let c = centroid(&a).map_err(|e| e.to_string())?;
            let comps = g.components();
            if c.dim != comps.len() {
                bad("centroid dim differs from component count");
            }
            for t in &c.basis_mats {
                let diagonal_constant = (0..a.dim()).all(|i| (0..a.dim()).all(|j| i == j || t[(i, j)].is_zero()))
                    && comps.iter().all(|comp| {
                        let first = comp.iter().next().unwrap();
                        comp.iter().all(|&v| t[(v, v)] == t[(*first, *first)])
                    });
                if !diagonal_constant {
                    bad("centralizer not diagonal and constant on components");
                }
            }
        }
        // (f)
        if a.dim() <= 5 {
            counts[2] += 1;
            let gr = degeneracy(&a, &groebner_cfg()).map_err(|e| e.to_string())?;
            if gr.state != lin.state {
                bad("linear and groebner degeneracy engines disagree");
            }
        }
    }
    ensure!(
        violations.is_empty(),
        "{} violations, first: {}",
        violations.len(),
        violations[0]
    );
    Ok(format!(
        "1000 algebras, {} perfect, {} zero-annihilator, {} engine comparisons, {} undetermined semiprime verdicts",
        counts[0], counts[1], counts[2], undetermined
    ))
}

fn check_witnesses(a: &EvolutionAlgebra, label: &str, seed: u64) -> Result<usize, String> {
    let mut checked = 0;
    let d = degeneracy(a, &cfg()).map_err(|e| e.to_string())?;
    if let Some(x) = d.witness_element() {
        ensure!(
            is_absolute_zero_divisor(a, x).unwrap(),
            "{label}: bad zero divisor {x:?}"
        );
        checked += 1;
    }
    let s = semiprime(a, &cfg()).map_err(|e| e.to_string())?;
    if let Some(i) = s.witness_ideal() {
        ensure!(zero_square_ideal(a, i), "{label}: bad zero-square ideal");
        checked += 1;
    }
    // a deterministic element with every coordinate nonzero
    let n = a.dim();
    let x = Element::new((0..n).map(|i| rat(((seed as i64 + i as i64) % 3) + 1, 1)).collect());
    if let Some(y) = vn_element(a, &x).map_err(|e| e.to_string())? {
        let back = a.multiply(&a.multiply(&x, &y).unwrap(), &x).unwrap();
        ensure!(back == x, "{label}: bad von Neumann inverse");
        checked += 1;
    }
    Ok(checked)
}

fn criterion_8() -> Outcome {
    let mut checked = 0;
    let named = [
        ("counterexample", counterexample()),
        ("degenerate4", degenerate4()),
        ("zero_square4", zero_square4()),
        ("degenerate5", degenerate5()),
        ("nonprime5", nonprime5()),
        ("strata8", strata8()),
        ("loops2", EvolutionAlgebra::from_ints(&[[1, 0], [0, 1]])),
        ("scaled", EvolutionAlgebra::from_ints(&[[2]])),
    ];
    for (label, a) in &named {
        checked += check_witnesses(a, label, 0)?;
    }
    for (seed, a) in suite() {
        checked += check_witnesses(&a, &format!("seed {seed}"), seed)?;
    }
    Ok(format!("{checked} witnesses re-verified by direct multiplication"))
}

fn reports() -> String {
    let mut out = String::new();
    for (_, a) in suite() {
        out.push_str(&to_json(&analyze(&a, None, &cfg())));
    }
    out
}

fn criterion_9() -> Outcome {
    let first = reports();
    let second = reports();
    ensure!(first == second, "reports differ between runs");
    Ok(format!("{} bytes of JSON identical across two runs", first.len()))
}

type Criterion = (u32, Duration, fn() -> Outcome);

fn main() {
    let criteria: [Criterion; 9] = [
        (1, Duration::from_secs(1), criterion_1),
        (2, Duration::from_secs(5), criterion_2),
        (3, Duration::from_secs(5), criterion_3),
        (4, Duration::from_secs(10), criterion_4),
        (5, Duration::from_secs(10), criterion_5),
        (6, Duration::from_secs(1), criterion_6),
        (7, Duration::from_secs(300), criterion_7),
        (8, Duration::from_secs(300), criterion_8),
        (9, Duration::from_secs(600), criterion_9),
    ];
    let mut failed = 0;
    for (id, limit, run) in criteria {
        let start = Instant::now();
        let outcome = run();
        let took = start.elapsed();
        let outcome = match outcome {
            Ok(msg) if took > limit => Err(format!("{msg}; took {took:.2?}, limit {limit:?}")),
            other => other,
        };
        match outcome {
            Ok(msg) => println!("criterion {id}: PASS ({took:.2?}) {msg}"),
            Err(msg) => {
                failed += 1;
                println!("criterion {id}: FAIL ({took:.2?}) {msg}");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
