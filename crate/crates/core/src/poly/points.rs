//! Bounded search for nonzero rational common zeros of homogeneous systems.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{radical_variables, GroebnerConfig, MPoly, PolyIdeal};
use crate::error::Result;
use crate::exactla::{Mat, Rat};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PointSearchConfig {
    /// Largest max-norm of the integer parameter vectors tried.
    pub height_cap: u32,
    /// Maximum number of candidate vectors visited.
    pub budget: u64,
    pub groebner: GroebnerConfig,
}

impl Default for PointSearchConfig {
    fn default() -> Self {
        PointSearchConfig {
            height_cap: 50,
            budget: 200_000,
            groebner: GroebnerConfig::default(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PointSearch {
    /// A nonzero primitive integer common zero.
    Found(Vec<Rat>),
    /// The only common zero over the algebraic closure is the origin.
    OnlyOrigin,
    /// Common zeros exist over the closure but none was found within the
    /// height cap and budget.
    Exhausted { height: u32, visited: u64 },
}

/// Searches for a nonzero rational zero of homogeneous polynomials.
///
/// Linear consequences (degree-one basis elements and variables in the
/// radical) are eliminated first by reparametrizing `x = P s`; the remaining
/// parameters are enumerated as primitive integer vectors by increasing
/// max-norm.
pub fn find_nonzero_point(nvars: usize, polys: &[MPoly], cfg: &PointSearchConfig) -> Result<PointSearch> {
    let n = nvars;
    assert!(polys.iter().all(|p| p.nvars() == n), "polynomial arity mismatch");
    debug_assert!(polys.iter().all(MPoly::is_homogeneous));
    let mut param = Mat::identity(n);
    let mut current: Vec<MPoly> = polys.to_vec();
    loop {
        let s = param.cols();
        if s == 0 {
            return Ok(PointSearch::OnlyOrigin);
        }
        if current.iter().all(MPoly::is_zero) {
            return Ok(PointSearch::Found(primitive(&param.column(0))));
        }
        let ideal = PolyIdeal::new(s, current.iter().cloned());
        let basis = super::groebner(&ideal, &cfg.groebner)?;
        let mut constraints: Vec<Vec<Rat>> = basis.generators().iter().filter_map(MPoly::as_linear_form).collect();
        for k in radical_variables(&basis, &cfg.groebner)? {
            let mut row = vec![Rat::zero(); s];
            row[k] = Rat::one();
            constraints.push(row);
        }
        let c = if constraints.is_empty() {
            None
        } else {
            Some(Mat::from_rows(constraints)?)
        };
        match c {
            Some(c) if c.rank() > 0 => {
                let kernel = c.kernel_basis();
                let sub = kernel.basis().transpose();
                param = param.mul(&sub)?;
                current = current.iter().map(|p| p.substitute_linear(&sub)).collect();
            }
            _ => return Ok(enumerate(&current, &param, cfg)),
        }
    }
}

fn enumerate(polys: &[MPoly], param: &Mat, cfg: &PointSearchConfig) -> PointSearch {
    let s = param.cols();
    let mut visited = 0u64;
    for h in 1..=cfg.height_cap as i64 {
        let mut v = vec![-h; s];
        loop {
            if v.iter().any(|x| x.abs() == h) && is_canonical(&v) {
                visited += 1;
                if visited > cfg.budget {
                    return PointSearch::Exhausted {
                        height: h as u32 - 1,
                        visited: visited - 1,
                    };
                }
                let point: Vec<Rat> = v.iter().map(|&x| Rat::from_integer(x.into())).collect();
                if polys.iter().all(|p| p.eval(&point).is_zero()) {
                    let x = param.mul_vec(&point).expect("parameter arity");
                    return PointSearch::Found(primitive(&x));
                }
            }
            if !odometer(&mut v, h) {
                break;
            }
        }
    }
    PointSearch::Exhausted {
        height: cfg.height_cap,
        visited,
    }
}

/// First nonzero entry positive and entries coprime.
fn is_canonical(v: &[i64]) -> bool {
    match v.iter().find(|&&x| x != 0) {
        Some(&first) if first > 0 => v.iter().fold(0i64, |g, &x| g.gcd(&x)) == 1,
        _ => false,
    }
}

fn odometer(v: &mut [i64], h: i64) -> bool {
    for x in v.iter_mut().rev() {
        if *x < h {
            *x += 1;
            return true;
        }
        *x = -h;
    }
    false
}

/// Scales a rational vector to a primitive integer vector whose first
/// nonzero entry is positive. The zero vector is returned unchanged.
pub fn primitive(v: &[Rat]) -> Vec<Rat> {
    let den = v.iter().fold(BigInt::one(), |l, x| l.lcm(x.denom()));
    let ints: Vec<BigInt> = v
        .iter()
        .map(|x| (x * Rat::from_integer(den.clone())).to_integer())
        .collect();
    let g = ints.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if g.is_zero() {
        return v.to_vec();
    }
    let sign = if ints.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative()) {
        -BigInt::one()
    } else {
        BigInt::one()
    };
    ints.into_iter().map(|x| Rat::from_integer(x / &g * &sign)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::rat;

    fn v(n: usize, i: usize) -> MPoly {
        MPoly::var(n, i)
    }

    #[test]
    fn primitive_scaling() {
        assert_eq!(
            primitive(&[rat(-1, 2), rat(3, 4), rat(0, 1)]),
            vec![rat(2, 1), rat(-3, 1), rat(0, 1)]
        );
        assert_eq!(primitive(&[rat(0, 1)]), vec![rat(0, 1)]);
    }

    #[test]
    fn free_direction_found_without_search() {
        // x = y = 0, z free
        let polys = vec![v(3, 0), &v(3, 1) * &v(3, 1)];
        let got = find_nonzero_point(polys[0].nvars(), &polys, &PointSearchConfig::default()).unwrap();
        assert_eq!(got, PointSearch::Found(vec![rat(0, 1), rat(0, 1), rat(1, 1)]));
    }

    #[test]
    fn conic_point_found_by_enumeration() {
        // x^2 + y^2 - z^2 has the rational point (3, 4, 5) up to scaling
        let (x, y, z) = (v(3, 0), v(3, 1), v(3, 2));
        let p = &(&(&x * &x) + &(&y * &y)) - &(&z * &z);
        match find_nonzero_point(3, std::slice::from_ref(&p), &PointSearchConfig::default()).unwrap() {
            PointSearch::Found(pt) => {
                assert!(p.eval(&pt).is_zero());
                assert!(pt.iter().any(|c| !c.is_zero()));
            }
            other => panic!("expected a point, got {other:?}"),
        }
    }

    #[test]
    fn empty_system_has_every_point() {
        let got = find_nonzero_point(2, &[], &PointSearchConfig::default()).unwrap();
        assert_eq!(got, PointSearch::Found(vec![rat(1, 1), rat(0, 1)]));
        assert_eq!(
            find_nonzero_point(0, &[], &PointSearchConfig::default()).unwrap(),
            PointSearch::OnlyOrigin
        );
    }

    #[test]
    fn only_origin_detected() {
        let (x, y) = (v(2, 0), v(2, 1));
        let polys = vec![&x * &x, &(&x * &y) + &(&y * &y)];
        assert_eq!(
            find_nonzero_point(polys[0].nvars(), &polys, &PointSearchConfig::default()).unwrap(),
            PointSearch::OnlyOrigin
        );
    }

    #[test]
    fn irrational_lines_exhaust() {
        // x^2 - 2 y^2 has closure zeros but no nonzero rational ones
        let (x, y) = (v(2, 0), v(2, 1));
        let p = &(&x * &x) - &(&y * &y).scale(&rat(2, 1));
        let cfg = PointSearchConfig {
            height_cap: 10,
            ..PointSearchConfig::default()
        };
        assert!(matches!(
            find_nonzero_point(2, &[p], &cfg).unwrap(),
            PointSearch::Exhausted { height: 10, .. }
        ));
    }
}
