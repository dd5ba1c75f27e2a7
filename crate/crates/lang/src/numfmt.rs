//! Canonical float spelling shared by the printer, the emitters and the
//! runtime preludes: shortest round-trip digits, positional notation for
//! decimal exponents in `[-4, 16)`, scientific otherwise (`1e+16`, `2.5e-05`),
//! and always a `.0` on integral positional values.

pub fn format_float(value: f64) -> String {
    if value.is_nan() {
        return "nan".into();
    }
    if value.is_infinite() {
        return if value > 0.0 { "inf".into() } else { "-inf".into() };
    }
    let sign = if value.is_sign_negative() { "-" } else { "" };
    // `{:e}` yields the shortest round-trip digits as `d.ddde<exp>`
    let sci = format!("{:e}", value.abs());
    let (mantissa, exponent) = sci.split_once('e').expect("scientific form");
    let exponent: i32 = exponent.parse().expect("integral exponent");
    let digits: String = mantissa.chars().filter(|c| *c != '.').collect();
    format!("{sign}{}", layout(&digits, exponent))
}

/// Lays out significant `digits` (no leading zeros) with decimal exponent
/// `exponent` of the first digit.
fn layout(digits: &str, exponent: i32) -> String {
    if digits == "0" {
        return "0.0".into();
    }
    if (-4..16).contains(&exponent) {
        if exponent < 0 {
            return format!("0.{}{digits}", "0".repeat((-exponent - 1) as usize));
        }
        let int_len = exponent as usize + 1;
        if digits.len() <= int_len {
            return format!("{digits}{}.0", "0".repeat(int_len - digits.len()));
        }
        return format!("{}.{}", &digits[..int_len], &digits[int_len..]);
    }
    let mantissa = if digits.len() > 1 { format!("{}.{}", &digits[..1], &digits[1..]) } else { digits.to_string() };
    let sign = if exponent < 0 { '-' } else { '+' };
    format!("{mantissa}e{sign}{:02}", exponent.abs())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn matches_python_repr_on_known_values() {
        // reference spellings from CPython's repr(float)
        let cases = [
            (0.0, "0.0"),
            (-0.0, "-0.0"),
            (1.0, "1.0"),
            (2.5, "2.5"),
            (0.1 + 0.2, "0.30000000000000004"),
            (100.0, "100.0"),
            (1e15, "1000000000000000.0"),
            (1e16, "1e+16"),
            (1.5e16, "1.5e+16"),
            (0.0001, "0.0001"),
            (0.00001, "1e-05"),
            (2.5e-5, "2.5e-05"),
            (123456.789, "123456.789"),
            (1e100, "1e+100"),
            (-3.25, "-3.25"),
            (f64::MAX, "1.7976931348623157e+308"),
            (5e-324, "5e-324"),
        ];
        for (value, expected) in cases {
            assert_eq!(format_float(value), expected, "{value:?}");
        }
    }

    proptest! {
        #[test]
        fn round_trips(bits in any::<u64>()) {
            let value = f64::from_bits(bits);
            prop_assume!(value.is_finite());
            let text = format_float(value);
            prop_assert_eq!(text.parse::<f64>().unwrap().to_bits(), value.to_bits());
        }
    }
}
