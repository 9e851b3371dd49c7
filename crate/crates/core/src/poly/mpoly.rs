use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::Monomial;
use crate::exactla::{Mat, Rat};

/// Sparse multivariate polynomial over the rationals.
///
/// Terms are kept sorted ascending in grevlex order (so the leading term is
/// last) with no zero coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MPoly {
    nvars: usize,
    terms: Vec<(Monomial, Rat)>,
}

impl MPoly {
    pub fn zero(nvars: usize) -> Self {
        MPoly {
            nvars,
            terms: Vec::new(),
        }
    }

    pub fn constant(nvars: usize, c: Rat) -> Self {
        MPoly::from_terms(nvars, [(Monomial::one(nvars), c)])
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        MPoly {
            nvars,
            terms: vec![(Monomial::var(nvars, i), Rat::one())],
        }
    }

    /// Collects terms, merging equal monomials and dropping zeros.
    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Monomial, Rat)>) -> Self {
        let mut ts: Vec<(Monomial, Rat)> = terms.into_iter().collect();
        assert!(ts.iter().all(|(m, _)| m.nvars() == nvars), "monomial arity mismatch");
        ts.sort_by(|a, b| a.0.cmp(&b.0));
        let mut out: Vec<(Monomial, Rat)> = Vec::with_capacity(ts.len());
        for (m, c) in ts {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc += c,
                _ => out.push((m, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        MPoly { nvars, terms: out }
    }

    /// Linear form `sum_i coeffs[i] x_i`.
    pub fn linear(coeffs: &[Rat]) -> Self {
        let n = coeffs.len();
        MPoly::from_terms(
            n,
            coeffs.iter().enumerate().map(|(i, c)| (Monomial::var(n, i), c.clone())),
        )
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Terms in ascending grevlex order.
    pub fn terms(&self) -> &[(Monomial, Rat)] {
        &self.terms
    }

    pub fn coefficient(&self, m: &Monomial) -> Rat {
        self.terms
            .binary_search_by(|(t, _)| t.cmp(m))
            .map(|i| self.terms[i].1.clone())
            .unwrap_or_else(|_| Rat::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    pub fn leading(&self) -> Option<(&Monomial, &Rat)> {
        self.terms.last().map(|(m, c)| (m, c))
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.last().map(|(m, _)| m)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.terms.windows(2).all(|w| w[0].0.degree() == w[1].0.degree())
    }

    pub fn scale(&self, c: &Rat) -> MPoly {
        if c.is_zero() {
            return MPoly::zero(self.nvars);
        }
        MPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self) -> MPoly {
        match self.leading() {
            Some((_, c)) => self.scale(&c.recip()),
            None => self.clone(),
        }
    }

    pub fn mul_term(&self, m: &Monomial, c: &Rat) -> MPoly {
        if c.is_zero() {
            return MPoly::zero(self.nvars);
        }
        // Multiplying by a monomial preserves the order.
        MPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(t, a)| (t.mul(m), a * c)).collect(),
        }
    }

    /// `self - c * m * g`, by a single merge pass.
    pub(crate) fn sub_scaled(&self, c: &Rat, m: &Monomial, g: &MPoly) -> MPoly {
        let mut out = Vec::with_capacity(self.terms.len() + g.terms.len());
        let mut a = self.terms.iter().peekable();
        let mut b = g.terms.iter().map(|(t, v)| (t.mul(m), v * c)).peekable();
        loop {
            let ord = match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some(_), None) => Ordering::Less,
                (None, Some(_)) => Ordering::Greater,
                (Some((ma, _)), Some((mb, _))) => ma.cmp(mb),
            };
            match ord {
                Ordering::Less => out.push(a.next().expect("peeked").clone()),
                Ordering::Greater => {
                    let (t, v) = b.next().expect("peeked");
                    out.push((t, -v));
                }
                Ordering::Equal => {
                    let (t, va) = a.next().expect("peeked");
                    let (_, vb) = b.next().expect("peeked");
                    let v = va - vb;
                    if !v.is_zero() {
                        out.push((t.clone(), v));
                    }
                }
            }
        }
        MPoly {
            nvars: self.nvars,
            terms: out,
        }
    }

    pub fn eval(&self, point: &[Rat]) -> Rat {
        assert_eq!(point.len(), self.nvars, "point arity mismatch");
        let mut acc = Rat::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(m.exps()) {
                if e > 0 {
                    if x.is_zero() {
                        t = Rat::zero();
                        break;
                    }
                    t *= num_traits::pow(x.clone(), e as usize);
                }
            }
            acc += t;
        }
        acc
    }

    pub fn pow(&self, e: u32) -> MPoly {
        (0..e).fold(MPoly::constant(self.nvars, Rat::one()), |acc, _| &acc * self)
    }

    /// Substitutes `x = P s`, where `P` has one row per variable of `self`;
    /// the result lives in `P.cols()` variables.
    pub fn substitute_linear(&self, p: &Mat) -> MPoly {
        assert_eq!(p.rows(), self.nvars, "substitution arity mismatch");
        let k = p.cols();
        let images: Vec<MPoly> = (0..self.nvars).map(|i| MPoly::linear(p.row(i))).collect();
        let mut acc = MPoly::zero(k);
        for (m, c) in &self.terms {
            let mut t = MPoly::constant(k, c.clone());
            for (img, &e) in images.iter().zip(m.exps()) {
                if e > 0 {
                    t = &t * &img.pow(u32::from(e));
                }
            }
            acc = &acc + &t;
        }
        acc
    }

    /// Coefficients of a homogeneous linear polynomial, or `None` otherwise.
    pub fn as_linear_form(&self) -> Option<Vec<Rat>> {
        if self.is_zero() || self.terms.iter().any(|(m, _)| m.degree() != 1) {
            return None;
        }
        let mut v = vec![Rat::zero(); self.nvars];
        for (m, c) in &self.terms {
            v[m.pure_power_var().expect("degree one")] = c.clone();
        }
        Some(v)
    }

    /// Renders with the given variable names.
    pub fn display_with(&self, names: &[&str]) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (idx, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = *c < Rat::zero();
            let abs = if neg { -c.clone() } else { c.clone() };
            if idx == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono: Vec<String> = m
                .exps()
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| {
                    let name = names.get(i).map_or_else(|| format!("x{}", i + 1), |s| s.to_string());
                    if e == 1 {
                        name
                    } else {
                        format!("{name}^{e}")
                    }
                })
                .collect();
            if mono.is_empty() {
                out.push_str(&abs.to_string());
            } else {
                if !abs.is_one() {
                    out.push_str(&abs.to_string());
                    out.push('*');
                }
                out.push_str(&mono.join("*"));
            }
        }
        out
    }
}

impl fmt::Debug for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with(&[]))
    }
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with(&[]))
    }
}

impl Add for &MPoly {
    type Output = MPoly;

    fn add(self, rhs: &MPoly) -> MPoly {
        assert_eq!(self.nvars, rhs.nvars);
        self.sub_scaled(&-Rat::one(), &Monomial::one(self.nvars), rhs)
    }
}

impl Sub for &MPoly {
    type Output = MPoly;

    fn sub(self, rhs: &MPoly) -> MPoly {
        assert_eq!(self.nvars, rhs.nvars);
        self.sub_scaled(&Rat::one(), &Monomial::one(self.nvars), rhs)
    }
}

impl Neg for &MPoly {
    type Output = MPoly;

    fn neg(self) -> MPoly {
        self.scale(&-Rat::one())
    }
}

impl Mul for &MPoly {
    type Output = MPoly;

    fn mul(self, rhs: &MPoly) -> MPoly {
        assert_eq!(self.nvars, rhs.nvars);
        let terms = self
            .terms
            .iter()
            .flat_map(|(ma, ca)| rhs.terms.iter().map(move |(mb, cb)| (ma.mul(mb), ca * cb)));
        MPoly::from_terms(self.nvars, terms)
    }
}
