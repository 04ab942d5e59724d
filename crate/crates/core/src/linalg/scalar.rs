use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

/// Exact rational scalar. `BigRational` keeps numerator and denominator
/// reduced with a positive denominator after every operation.
pub type Scalar = BigRational;

pub fn int(n: i64) -> Scalar {
    BigRational::from_integer(BigInt::from(n))
}

/// `p/q`, panicking on a zero denominator.
pub fn ratio(p: i64, q: i64) -> Scalar {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

/// Parses `[+-]?digits` or `[+-]?digits/digits` with no whitespace.
pub fn parse_scalar(s: &str) -> Option<Scalar> {
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (s, None),
    };
    let numerator = parse_signed(num)?;
    let denominator = match den {
        Some(d) => {
            if !d.bytes().all(|b| b.is_ascii_digit()) || d.is_empty() {
                return None;
            }
            d.parse::<BigInt>().ok()?
        }
        None => BigInt::from(1),
    };
    if denominator.is_zero() {
        return None;
    }
    Some(BigRational::new(numerator, denominator))
}

fn parse_signed(s: &str) -> Option<BigInt> {
    let digits = s.strip_prefix(['+', '-']).unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    let value: BigInt = digits.parse().ok()?;
    Some(if s.starts_with('-') { -value } else { value })
}

/// `[a, b, c]` with canonical rational entries.
pub fn fmt_vector(v: &[Scalar]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("[{}]", parts.join(", "))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Signed;

    #[test]
    fn parses_rational_strings() {
        assert_eq!(parse_scalar("3"), Some(int(3)));
        assert_eq!(parse_scalar("-4/6"), Some(ratio(-2, 3)));
        assert_eq!(parse_scalar("+1/2"), Some(ratio(1, 2)));
        assert_eq!(parse_scalar("1/0"), None);
        assert_eq!(parse_scalar(" 1"), None);
        assert_eq!(parse_scalar("1.5"), None);
        assert_eq!(parse_scalar("1/-2"), None);
        assert_eq!(parse_scalar(""), None);
        assert_eq!(parse_scalar("-"), None);
    }

    #[test]
    fn arithmetic_stays_canonical() {
        let a = ratio(6, -4);
        assert_eq!(a.numer(), &BigInt::from(-3));
        assert_eq!(a.denom(), &BigInt::from(2));
        let b = &a * &ratio(2, 9) + ratio(1, 3);
        assert!(b.denom().is_positive());
        assert_eq!(b, int(0));
        assert_eq!((ratio(1, 6) / ratio(-1, 4)).to_string(), "-2/3");
    }
}
