//! Reports: one serializable structure, rendered either as JSON or as text.

use std::fmt::Write as _;

use num_traits::{One, Zero};
use serde::Serialize;

use super::file::AlgebraJson;
use crate::algebra::EvolutionAlgebra;
use crate::analysis::{self, AnalysisConfig, DegeneracyEngine, QuotientOutcome, State, Verdict3, Witness};
use crate::error::{Error, Result};
use crate::exactla::{format_rat, Mat, Rat};
use crate::graph::{DiGraph, VertexSet};

/// A report field that either holds a value or the error that prevented it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Section<T> {
    Value(T),
    Failed { error: String },
}

impl<T> Section<T> {
    fn from_result(r: Result<T>, limits: &mut Vec<String>) -> Self {
        match r {
            Ok(v) => Section::Value(v),
            Err(e) => {
                let msg = e.to_string();
                if matches!(e, Error::BoundExceeded { .. } | Error::EngineLimit(_)) {
                    limits.push(msg.clone());
                }
                Section::Failed { error: msg }
            }
        }
    }

    pub fn value(&self) -> Option<&T> {
        match self {
            Section::Value(v) => Some(v),
            Section::Failed { .. } => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum WitnessJson {
    Element(Vec<String>),
    /// Basis of the witness ideal.
    Ideal(Vec<Vec<String>>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerdictJson {
    pub state: State,
    pub certificate: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
}

fn strings(v: &[Rat]) -> Vec<String> {
    v.iter().map(format_rat).collect()
}

fn mat_strings(m: &Mat) -> Vec<Vec<String>> {
    (0..m.rows()).map(|r| strings(m.row(r))).collect()
}

impl From<&Verdict3> for VerdictJson {
    fn from(v: &Verdict3) -> Self {
        VerdictJson {
            state: v.state,
            certificate: v.certificate.to_string(),
            witness: v.witness.as_ref().map(|w| match w {
                Witness::Element(e) => WitnessJson::Element(strings(e.coords())),
                Witness::Ideal(s) => WitnessJson::Ideal(mat_strings(s.basis())),
            }),
            reason: v.reason.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RejectedJson {
    pub hereditary: Vec<String>,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PrimeIdealsJson {
    /// Each prime ideal as the labels spanning it.
    pub ideals: Vec<Vec<String>>,
    pub rejected: Vec<RejectedJson>,
    pub undetermined: Vec<RejectedJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AbsorptionJson {
    pub radical: Vec<String>,
    pub asi: usize,
    pub strata: Vec<Vec<String>>,
    /// `Ann^(1), ..., Ann^(asi)` as spanning labels.
    pub ann_series: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CentroidJson {
    pub dim: usize,
    pub basis: Vec<Vec<Vec<String>>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DecompositionJson {
    pub summands: Vec<AlgebraJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EngineJson {
    pub degeneracy_engine: DegeneracyEngine,
    pub support_bound: usize,
    pub hereditary_bound: usize,
    pub height_cap: u32,
    pub search_budget: u64,
    pub groebner_max_vars: usize,
    pub groebner_max_pairs: usize,
    /// Bounds and engine limits hit while building the report.
    pub limits: Vec<String>,
    pub undetermined: bool,
}

impl EngineJson {
    fn new(cfg: &AnalysisConfig) -> Self {
        EngineJson {
            degeneracy_engine: cfg.engine,
            support_bound: cfg.support_bound,
            hereditary_bound: cfg.hereditary_bound,
            height_cap: cfg.points.height_cap,
            search_budget: cfg.points.budget,
            groebner_max_vars: cfg.points.groebner.max_vars,
            groebner_max_pairs: cfg.points.groebner.max_pairs,
            limits: Vec::new(),
            undetermined: false,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub input: AlgebraJson,
    pub dimension: usize,
    pub zero_annihilator: bool,
    pub perfect: bool,
    pub degeneracy: Section<VerdictJson>,
    pub semiprime: Section<VerdictJson>,
    pub prime: Section<VerdictJson>,
    pub prime_ideals: Section<PrimeIdealsJson>,
    pub absorption: Section<AbsorptionJson>,
    pub von_neumann: bool,
    pub centroid: Section<CentroidJson>,
    pub components: Vec<Vec<String>>,
    pub decomposition: Section<DecompositionJson>,
    pub engine: EngineJson,
}

fn labels_of(a: &EvolutionAlgebra, s: &VertexSet) -> Vec<String> {
    s.iter().map(|&i| a.labels()[i].clone()).collect()
}

pub fn prime_ideals_section(a: &EvolutionAlgebra, cfg: &AnalysisConfig) -> Result<PrimeIdealsJson> {
    let p = analysis::prime_ideals(a, cfg)?;
    let mut out = PrimeIdealsJson {
        ideals: p.ideals.iter().map(|i| labels_of(a, &i.vertices)).collect(),
        rejected: Vec::new(),
        undetermined: Vec::new(),
    };
    for (h, o) in &p.examined {
        let entry = |reason: &str| RejectedJson {
            hereditary: labels_of(a, h),
            reason: reason.to_string(),
        };
        match o {
            QuotientOutcome::Prime => {}
            QuotientOutcome::NotDownwardDirected => out.rejected.push(entry("quotient graph not downward directed")),
            QuotientOutcome::NotSemiprime => out.rejected.push(entry("quotient not semiprime")),
            QuotientOutcome::Undetermined(r) => out.undetermined.push(entry(r)),
        }
    }
    Ok(out)
}

pub fn absorption_section(a: &EvolutionAlgebra) -> Result<AbsorptionJson> {
    let r = analysis::absorption(a)?;
    let ann_series = (1..=r.asi).map(|k| labels_of(a, &r.strata.union_up_to(k))).collect();
    Ok(AbsorptionJson {
        radical: labels_of(a, &r.vertices),
        asi: r.asi,
        strata: r.strata.strata.iter().map(|s| labels_of(a, s)).collect(),
        ann_series,
    })
}

pub fn centroid_section(a: &EvolutionAlgebra) -> Result<CentroidJson> {
    let c = analysis::centroid(a)?;
    Ok(CentroidJson {
        dim: c.dim,
        basis: c.basis_mats.iter().map(mat_strings).collect(),
    })
}

pub fn decomposition_section(a: &EvolutionAlgebra) -> Result<DecompositionJson> {
    Ok(DecompositionJson {
        summands: analysis::decompose(a)?
            .iter()
            .map(|s| AlgebraJson::new(s, None))
            .collect(),
    })
}

fn verdict_section(r: Result<Verdict3>, engine: &mut EngineJson) -> Section<VerdictJson> {
    if let Ok(v) = &r {
        if v.state == State::Undetermined {
            engine.undetermined = true;
        }
    }
    Section::from_result(r.map(|v| VerdictJson::from(&v)), &mut engine.limits)
}

/// Runs every engine; bound violations are recorded in-band.
pub fn analyze(a: &EvolutionAlgebra, description: Option<&str>, cfg: &AnalysisConfig) -> Report {
    let mut engine = EngineJson::new(cfg);
    let graph = DiGraph::from_algebra(a);
    let degeneracy = verdict_section(analysis::degeneracy(a, cfg), &mut engine);
    let semiprime = verdict_section(analysis::semiprime(a, cfg), &mut engine);
    let prime = verdict_section(analysis::prime(a, cfg), &mut engine);
    let prime_ideals = Section::from_result(prime_ideals_section(a, cfg), &mut engine.limits);
    if prime_ideals.value().is_some_and(|p| !p.undetermined.is_empty()) {
        engine.undetermined = true;
    }
    let absorption = Section::from_result(absorption_section(a), &mut engine.limits);
    let centroid = Section::from_result(centroid_section(a), &mut engine.limits);
    let decomposition = Section::from_result(decomposition_section(a), &mut engine.limits);
    if !engine.limits.is_empty() {
        engine.undetermined = true;
    }
    Report {
        input: AlgebraJson::new(a, description.map(str::to_string)),
        dimension: a.dim(),
        zero_annihilator: analysis::is_zero_annihilator(a),
        perfect: a.is_perfect(),
        degeneracy,
        semiprime,
        prime,
        prime_ideals,
        absorption,
        von_neumann: analysis::vn_algebra(a),
        centroid,
        components: graph.components().iter().map(|c| labels_of(a, c)).collect(),
        decomposition,
        engine,
    }
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("plain data serializes");
    s.push('\n');
    s
}

// Text rendering.

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn braces(labels: &[String]) -> String {
    format!("{{{}}}", labels.join(", "))
}

/// `e1 - 1/2 e3`, or `0`.
pub fn format_combination(labels: &[String], coords: &[String]) -> String {
    let mut out = String::new();
    for (label, c) in labels.iter().zip(coords) {
        let r = crate::exactla::parse_rat(c).expect("report coordinates are rationals");
        if r.is_zero() {
            continue;
        }
        let neg = r < Rat::zero();
        let abs = if neg { -r } else { r };
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if !abs.is_one() {
            let _ = write!(out, "{abs} ");
        }
        out.push_str(label);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn render_verdict(out: &mut String, name: &str, labels: &[String], s: &Section<VerdictJson>) {
    match s {
        Section::Failed { error } => {
            let _ = writeln!(out, "{name}: error: {error}");
        }
        Section::Value(v) => {
            let _ = write!(out, "{name}: {} [{}]", v.state, v.certificate);
            match &v.witness {
                Some(WitnessJson::Element(c)) => {
                    let _ = write!(out, "; witness {}", format_combination(labels, c));
                }
                Some(WitnessJson::Ideal(rows)) => {
                    let span: Vec<String> = rows.iter().map(|r| format_combination(labels, r)).collect();
                    let _ = write!(out, "; witness ideal span{}", braces(&span));
                }
                None => {}
            }
            if let Some(r) = &v.reason {
                let _ = write!(out, "; {r}");
            }
            out.push('\n');
        }
    }
}

pub fn render_prime_ideals(out: &mut String, s: &Section<PrimeIdealsJson>) {
    match s {
        Section::Failed { error } => {
            let _ = writeln!(out, "prime ideals: error: {error}");
        }
        Section::Value(p) => {
            let _ = writeln!(out, "prime ideals: {}", p.ideals.len());
            for i in &p.ideals {
                let _ = writeln!(out, "  span{}", braces(i));
            }
            for r in &p.rejected {
                let _ = writeln!(out, "  rejected {}: {}", braces(&r.hereditary), r.reason);
            }
            for r in &p.undetermined {
                let _ = writeln!(out, "  undetermined {}: {}", braces(&r.hereditary), r.reason);
            }
        }
    }
}

pub fn render_absorption(out: &mut String, s: &Section<AbsorptionJson>) {
    match s {
        Section::Failed { error } => {
            let _ = writeln!(out, "absorption radical: error: {error}");
        }
        Section::Value(a) => {
            let _ = writeln!(out, "absorption radical: span{}", braces(&a.radical));
            let _ = writeln!(out, "annihilator stabilizing index: {}", a.asi);
            for (k, (s, level)) in a.strata.iter().zip(&a.ann_series).enumerate() {
                let _ = writeln!(
                    out,
                    "  stratum {}: {}; Ann^({}) = span{}",
                    k + 1,
                    braces(s),
                    k + 1,
                    braces(level)
                );
            }
        }
    }
}

fn render_matrix(out: &mut String, m: &[Vec<String>], indent: &str) {
    for row in m {
        let _ = writeln!(out, "{indent}[{}]", row.join(", "));
    }
}

pub fn render_centroid(out: &mut String, s: &Section<CentroidJson>) {
    match s {
        Section::Failed { error } => {
            let _ = writeln!(out, "centroid: error: {error}");
        }
        Section::Value(c) => {
            let _ = writeln!(out, "centroid dimension: {}", c.dim);
            for (k, m) in c.basis.iter().enumerate() {
                let _ = writeln!(out, "  T{}:", k + 1);
                render_matrix(out, m, "    ");
            }
        }
    }
}

pub fn render_decomposition(out: &mut String, s: &Section<DecompositionJson>) {
    match s {
        Section::Failed { error } => {
            let _ = writeln!(out, "decomposition: {error}");
        }
        Section::Value(d) => {
            let _ = writeln!(out, "decomposition: {} summand(s)", d.summands.len());
            for a in &d.summands {
                let _ = writeln!(out, "  summand on {}:", braces(&a.basis));
                render_matrix(out, &a.matrix, "    ");
            }
        }
    }
}

pub fn render_human(r: &Report) -> String {
    let labels = &r.input.basis;
    let mut out = String::new();
    let _ = writeln!(out, "algebra: dimension {}, basis {}", r.dimension, braces(labels));
    if let Some(d) = &r.input.description {
        let _ = writeln!(out, "description: {d}");
    }
    let _ = writeln!(out, "zero annihilator: {}", yes_no(r.zero_annihilator));
    let _ = writeln!(out, "perfect: {}", yes_no(r.perfect));
    render_verdict(&mut out, "degenerate", labels, &r.degeneracy);
    render_verdict(&mut out, "semiprime", labels, &r.semiprime);
    render_verdict(&mut out, "prime", labels, &r.prime);
    render_prime_ideals(&mut out, &r.prime_ideals);
    render_absorption(&mut out, &r.absorption);
    let _ = writeln!(out, "von Neumann regular: {}", yes_no(r.von_neumann));
    render_centroid(&mut out, &r.centroid);
    let comps: Vec<String> = r.components.iter().map(|c| braces(c)).collect();
    let _ = writeln!(out, "components: {}", comps.join(" "));
    render_decomposition(&mut out, &r.decomposition);
    let e = &r.engine;
    let _ = writeln!(
        out,
        "engine: degeneracy={}, support bound {}, hereditary bound {}, height cap {}",
        match e.degeneracy_engine {
            DegeneracyEngine::Linear => "linear",
            DegeneracyEngine::Groebner => "groebner",
        },
        e.support_bound,
        e.hereditary_bound,
        e.height_cap
    );
    for l in &e.limits {
        let _ = writeln!(out, "limit hit: {l}");
    }
    if e.undetermined {
        let _ = writeln!(out, "some verdicts are undetermined");
    }
    out
}
