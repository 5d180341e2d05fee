//! Text renderings of classes.
//!
//! The pretty form labels by dimension, `2[P^2] - 4[P^1]`; the machine form
//! is the comma-separated coefficient vector by codimension, `0,0,2,-4,0`.

use num_traits::{Signed, Zero};

use crate::chow::{format_rational, parse_rational, ChowClass};
use crate::error::Result;

/// `a[P^j] ± b[P^k] …`, highest dimension first; `"0"` for the zero class.
pub fn pretty(class: &ChowClass) -> String {
    let n = class.dim();
    let mut out = String::new();
    for (i, c) in class.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let mag = format_rational(&c.abs());
        let term = format!("{mag}[P^{}]", n - i);
        if out.is_empty() {
            if c.is_negative() {
                out.push('-');
            }
        } else {
            out.push_str(if c.is_negative() { " - " } else { " + " });
        }
        out.push_str(&term);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Canonical rational strings by codimension, comma-separated.
pub fn machine(class: &ChowClass) -> String {
    class
        .coeffs()
        .iter()
        .map(format_rational)
        .collect::<Vec<_>>()
        .join(",")
}

/// Inverse of [`machine`]; shorter lists are zero-padded.
pub fn parse_coefficients(csv: &str, dim: usize) -> Result<ChowClass> {
    let coeffs = csv
        .split(',')
        .map(parse_rational)
        .collect::<Result<Vec<_>>>()?;
    ChowClass::new(dim, coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chow::{ratio, Rational};
    use proptest::prelude::*;

    #[test]
    fn pretty_forms() {
        let c = ChowClass::from_ints(4, &[0, 0, 2, -4, 10]).unwrap();
        assert_eq!(pretty(&c), "2[P^2] - 4[P^1] + 10[P^0]");
        assert_eq!(pretty(&ChowClass::hyperplane_power(4, 3)), "1[P^1]");
        assert_eq!(pretty(&ChowClass::zero(3)), "0");
        let c = ChowClass::new(2, vec![ratio(-1, 2), Rational::zero(), ratio(3, 4)]).unwrap();
        assert_eq!(pretty(&c), "-1/2[P^2] + 3/4[P^0]");
        assert_eq!(machine(&c), "-1/2,0,3/4");
    }

    #[test]
    fn parse_errors() {
        assert!(parse_coefficients("1,2,3,4", 2).is_err());
        assert!(parse_coefficients("1,,2", 3).is_err());
        assert_eq!(
            parse_coefficients("0, 0, 2, -4", 4).unwrap(),
            ChowClass::from_ints(4, &[0, 0, 2, -4, 0]).unwrap()
        );
    }

    proptest! {
        #[test]
        fn machine_round_trip(
            coeffs in (0usize..=8).prop_flat_map(|n| proptest::collection::vec((-50i64..=50, 1i64..=9), n + 1))
        ) {
            let n = coeffs.len() - 1;
            let c = ChowClass::new(n, coeffs.into_iter().map(|(p, q)| ratio(p, q)).collect()).unwrap();
            prop_assert_eq!(parse_coefficients(&machine(&c), n).unwrap(), c);
        }
    }
}
