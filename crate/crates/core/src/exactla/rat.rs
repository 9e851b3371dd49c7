use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

/// Arbitrary-precision rational. `num-rational` keeps it normalized
/// (coprime parts, positive denominator, zero as 0/1).
pub type Rat = BigRational;

/// Shorthand for `num/den` with small integer parts.
pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

/// Parses an integer literal or a `p/q` literal. Surrounding whitespace is
/// ignored; a zero denominator is rejected.
pub fn parse_rat(s: &str) -> Option<Rat> {
    let s = s.trim();
    match s.split_once('/') {
        Some((p, q)) => {
            let p = BigInt::from_str(p.trim()).ok()?;
            let q = BigInt::from_str(q.trim()).ok()?;
            if q.is_zero() {
                None
            } else {
                Some(Rat::new(p, q))
            }
        }
        None => BigInt::from_str(s).ok().map(Rat::from_integer),
    }
}

/// Canonical text form: `p` for integers, `p/q` otherwise.
pub fn format_rat(r: &Rat) -> String {
    r.to_string()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_forms() {
        assert_eq!(parse_rat("1/2"), Some(rat(1, 2)));
        assert_eq!(parse_rat(" -4/6 "), Some(rat(-2, 3)));
        assert_eq!(parse_rat("7"), Some(rat(7, 1)));
        assert_eq!(parse_rat("3/-6"), Some(rat(-1, 2)));
        assert_eq!(parse_rat("1/0"), None);
        assert_eq!(parse_rat("x"), None);
        assert_eq!(parse_rat("1.5"), None);
    }

    #[test]
    fn zero_is_canonical() {
        let z = parse_rat("0/5").unwrap();
        assert_eq!(format_rat(&z), "0");
        assert_eq!(*z.denom(), BigInt::from(1));
    }

    #[test]
    fn format_round_trips() {
        for r in [rat(-3, 7), rat(0, 1), rat(12, 4)] {
            assert_eq!(parse_rat(&format_rat(&r)), Some(r));
        }
    }
}
