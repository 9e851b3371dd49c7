use num_traits::One;

use super::{MPoly, Monomial};
use crate::error::{Error, Result};
use crate::exactla::Rat;

/// Monomial order tag. Only graded reverse lexicographic is supported.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum MonomialOrder {
    #[default]
    GrevLex,
}

/// An ideal given by generators in a fixed number of variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyIdeal {
    nvars: usize,
    generators: Vec<MPoly>,
    order: MonomialOrder,
}

impl PolyIdeal {
    /// Zero generators are dropped.
    pub fn new(nvars: usize, generators: impl IntoIterator<Item = MPoly>) -> Self {
        let generators: Vec<MPoly> = generators
            .into_iter()
            .inspect(|g| assert_eq!(g.nvars(), nvars, "generator arity mismatch"))
            .filter(|g| !g.is_zero())
            .collect();
        PolyIdeal {
            nvars,
            generators,
            order: MonomialOrder::GrevLex,
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn generators(&self) -> &[MPoly] {
        &self.generators
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.generators.is_empty()
    }

    /// True when some generator is a nonzero constant.
    pub fn is_unit(&self) -> bool {
        self.generators.iter().any(MPoly::is_constant)
    }
}

/// Hard caps for the Buchberger loop.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GroebnerConfig {
    pub max_vars: usize,
    pub max_pairs: usize,
}

impl Default for GroebnerConfig {
    fn default() -> Self {
        GroebnerConfig {
            max_vars: 8,
            max_pairs: 20_000,
        }
    }
}

/// Reduced Groebner basis under grevlex, monic and sorted by leading monomial.
pub fn groebner(ideal: &PolyIdeal, cfg: &GroebnerConfig) -> Result<PolyIdeal> {
    if ideal.nvars > cfg.max_vars {
        return Err(Error::BoundExceeded {
            what: "groebner variable count",
            limit: cfg.max_vars,
            actual: ideal.nvars,
        });
    }
    buchberger(ideal, cfg.max_pairs)
}

/// Remainder of `p` under multivariate division by `basis`.
pub fn normal_form(p: &MPoly, basis: &PolyIdeal) -> MPoly {
    reduce(p, &basis.generators)
}

fn reduce(p: &MPoly, divisors: &[MPoly]) -> MPoly {
    let n = p.nvars();
    let mut rest = p.clone();
    let mut remainder: Vec<(Monomial, Rat)> = Vec::new();
    while let Some((lm, lc)) = rest.leading().map(|(m, c)| (m.clone(), c.clone())) {
        match divisors
            .iter()
            .find(|g| g.leading_monomial().is_some_and(|gm| gm.divides(&lm)))
        {
            Some(g) => {
                let (gm, gc) = g.leading().expect("nonzero divisor");
                let factor = gm.quotient_of(&lm);
                rest = rest.sub_scaled(&(&lc / gc), &factor, g);
            }
            None => {
                remainder.push((lm, lc));
                rest = MPoly::from_terms(n, rest.terms()[..rest.terms().len() - 1].to_vec());
            }
        }
    }
    MPoly::from_terms(n, remainder)
}

fn s_poly(f: &MPoly, g: &MPoly) -> MPoly {
    let (fm, fc) = f.leading().expect("nonzero");
    let (gm, gc) = g.leading().expect("nonzero");
    let l = fm.lcm(gm);
    let a = f.mul_term(&fm.quotient_of(&l), &fc.recip());
    a.sub_scaled(&gc.recip(), &gm.quotient_of(&l), g)
}

fn buchberger(ideal: &PolyIdeal, max_pairs: usize) -> Result<PolyIdeal> {
    let n = ideal.nvars;
    let unit = || PolyIdeal::new(n, [MPoly::constant(n, Rat::one())]);
    if ideal.is_unit() {
        return Ok(unit());
    }
    let mut basis: Vec<MPoly> = Vec::new();
    for g in &ideal.generators {
        let r = reduce(g, &basis);
        if !r.is_zero() {
            if r.is_constant() {
                return Ok(unit());
            }
            basis.push(r.monic());
        }
    }
    let mut pending: Vec<(usize, usize)> = Vec::new();
    for j in 0..basis.len() {
        for i in 0..j {
            pending.push((i, j));
        }
    }
    let mut processed = 0usize;
    while !pending.is_empty() {
        // Normal selection: smallest lcm first, ties by index.
        let pick = (0..pending.len())
            .min_by(|&a, &b| {
                let la = pair_lcm(&basis, pending[a]);
                let lb = pair_lcm(&basis, pending[b]);
                la.cmp(&lb).then(pending[a].cmp(&pending[b]))
            })
            .expect("nonempty");
        let (i, j) = pending.swap_remove(pick);
        let (mi, mj) = (lm(&basis[i]), lm(&basis[j]));
        if mi.is_coprime(mj) {
            continue;
        }
        let l = mi.lcm(mj);
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && lm(&basis[k]).divides(&l)
                && !pending.contains(&ordered(i, k))
                && !pending.contains(&ordered(j, k))
        });
        if chain {
            continue;
        }
        processed += 1;
        if processed > max_pairs {
            return Err(Error::EngineLimit(format!(
                "groebner basis needs more than {max_pairs} S-pair reductions"
            )));
        }
        let r = reduce(&s_poly(&basis[i], &basis[j]), &basis);
        if r.is_zero() {
            continue;
        }
        if r.is_constant() {
            return Ok(unit());
        }
        let k = basis.len();
        basis.push(r.monic());
        for i in 0..k {
            pending.push((i, k));
        }
    }
    Ok(PolyIdeal::new(n, interreduce(basis)))
}

fn lm(p: &MPoly) -> &Monomial {
    p.leading_monomial().expect("basis elements are nonzero")
}

fn pair_lcm(basis: &[MPoly], (i, j): (usize, usize)) -> Monomial {
    lm(&basis[i]).lcm(lm(&basis[j]))
}

fn ordered(a: usize, b: usize) -> (usize, usize) {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

fn interreduce(basis: Vec<MPoly>) -> Vec<MPoly> {
    // Minimal basis: drop elements whose leading monomial is divisible by
    // another's (the earlier one wins on equal leading monomials).
    let mut minimal: Vec<MPoly> = Vec::new();
    for (idx, g) in basis.iter().enumerate() {
        let redundant = basis
            .iter()
            .enumerate()
            .any(|(k, h)| k != idx && lm(h).divides(lm(g)) && (lm(h) != lm(g) || k < idx));
        if !redundant {
            minimal.push(g.clone());
        }
    }
    let mut reduced: Vec<MPoly> = (0..minimal.len())
        .map(|idx| {
            let others: Vec<MPoly> = minimal
                .iter()
                .enumerate()
                .filter(|&(k, _)| k != idx)
                .map(|(_, h)| h.clone())
                .collect();
            reduce(&minimal[idx], &others).monic()
        })
        .collect();
    reduced.sort_by(|a, b| lm(a).cmp(lm(b)));
    reduced
}

/// Rabinowitsch test: `p` lies in the radical of `ideal` iff
/// `ideal + (1 - y p)` is the unit ideal, with `y` a fresh variable.
pub fn radical_contains(ideal: &PolyIdeal, p: &MPoly, cfg: &GroebnerConfig) -> Result<bool> {
    if ideal.nvars > cfg.max_vars {
        return Err(Error::BoundExceeded {
            what: "groebner variable count",
            limit: cfg.max_vars,
            actual: ideal.nvars,
        });
    }
    if p.is_zero() {
        return Ok(true);
    }
    let n = ideal.nvars;
    let lift = |q: &MPoly| {
        MPoly::from_terms(
            n + 1,
            q.terms().iter().map(|(m, c)| {
                let mut e = m.exps().to_vec();
                e.push(0);
                (Monomial::new(e), c.clone())
            }),
        )
    };
    let y = MPoly::var(n + 1, n);
    let aux = &MPoly::constant(n + 1, Rat::one()) - &(&y * &lift(p));
    let gens = ideal.generators.iter().map(lift).chain(std::iter::once(aux));
    let g = buchberger(&PolyIdeal::new(n + 1, gens), cfg.max_pairs)?;
    Ok(g.is_unit())
}

/// Indices of the variables lying in the radical of `ideal`.
pub fn radical_variables(ideal: &PolyIdeal, cfg: &GroebnerConfig) -> Result<Vec<usize>> {
    let basis = groebner(ideal, cfg)?;
    if basis.is_unit() {
        return Ok((0..ideal.nvars).collect());
    }
    let mut out = Vec::new();
    for k in 0..ideal.nvars {
        // A basis element that is a single pure power of x_k settles it.
        let direct = basis
            .generators
            .iter()
            .any(|g| g.terms().len() == 1 && lm(g).pure_power_var() == Some(k));
        if direct || radical_contains(&basis, &MPoly::var(ideal.nvars, k), cfg)? {
            out.push(k);
        }
    }
    Ok(out)
}

/// True iff every variable lies in the radical, i.e. the only common zero
/// over the algebraic closure is the origin.
pub fn variety_is_only_origin(ideal: &PolyIdeal, cfg: &GroebnerConfig) -> Result<bool> {
    Ok(radical_variables(ideal, cfg)?.len() == ideal.nvars)
}

/// True iff the quotient ring is finite dimensional: every variable has a
/// pure power among the leading monomials of a Groebner basis.
pub fn is_zero_dimensional(basis: &PolyIdeal) -> bool {
    (0..basis.nvars).all(|k| {
        basis
            .generators
            .iter()
            .any(|g| lm(g).is_one() || lm(g).pure_power_var() == Some(k))
    })
}
