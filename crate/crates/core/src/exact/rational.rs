use num_bigint::BigInt;
use num_traits::Signed;

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator.
pub type Rational = num_rational::BigRational;

/// Parses `integer` or `integer/positive-integer`.
pub fn parse_rational(text: &str) -> Option<Rational> {
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (text, None),
    };
    let num = parse_integer(num)?;
    let den = match den {
        Some(d) => {
            if d.starts_with(['+', '-']) {
                return None;
            }
            let d = parse_integer(d)?;
            if !d.is_positive() {
                return None;
            }
            d
        }
        None => BigInt::from(1),
    };
    Some(Rational::new(num, den))
}

fn parse_integer(text: &str) -> Option<BigInt> {
    let digits = text.strip_prefix(['+', '-']).unwrap_or(text);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    text.parse().ok()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grammar() {
        assert_eq!(parse_rational("3"), Some(Rational::from_integer(3.into())));
        assert_eq!(
            parse_rational("-6/4"),
            Some(Rational::new((-3).into(), 2.into()))
        );
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(parse_rational("1/-2"), None);
        assert_eq!(parse_rational("1.5"), None);
        assert_eq!(parse_rational(""), None);
        assert_eq!(parse_rational("-"), None);
        assert_eq!(parse_rational("2/"), None);
    }

    #[test]
    fn lowest_terms() {
        let q = parse_rational("10/-5");
        assert_eq!(q, None);
        let q = parse_rational("-10/4").unwrap();
        assert_eq!(q.denom(), &BigInt::from(2));
        assert_eq!(q.numer(), &BigInt::from(-5));
    }
}
