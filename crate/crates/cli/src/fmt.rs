//! Locale-independent number formatting with 12 significant digits and
//! trailing zeros trimmed, in the style of printf's %g.

const SIG_DIGITS: usize = 12;

/// Formats a value with 12 significant digits, plain decimal for moderate
/// exponents and compact scientific notation otherwise.
pub fn g12(v: f64) -> String {
    if v.is_nan() {
        return "nan".to_string();
    }
    if v.is_infinite() {
        return if v > 0.0 { "inf".to_string() } else { "-inf".to_string() };
    }
    if v == 0.0 {
        return "0".to_string();
    }

    // round-trip through scientific notation so rounding to 12 digits
    // (including exponent bumps like 9.99…e-1 -> 1e0) is handled for us
    let formatted = format!("{:.*e}", SIG_DIGITS - 1, v);
    let (mantissa, exp) = formatted.split_once('e').expect("e-notation always has an exponent");
    let exp: i32 = exp.parse().expect("exponent is an integer");
    let negative = mantissa.starts_with('-');
    let digits: String = mantissa.chars().filter(|c| c.is_ascii_digit()).collect();
    debug_assert_eq!(digits.len(), SIG_DIGITS);

    let body = if exp >= -4 && (exp as i64) < SIG_DIGITS as i64 {
        plain_decimal(&digits, exp)
    } else {
        scientific(&digits, exp)
    };
    if negative && body != "0" {
        format!("-{body}")
    } else {
        body
    }
}

fn plain_decimal(digits: &str, exp: i32) -> String {
    if exp >= 0 {
        let split = exp as usize + 1;
        let int_part = &digits[..split];
        let frac = digits[split..].trim_end_matches('0');
        if frac.is_empty() {
            int_part.to_string()
        } else {
            format!("{int_part}.{frac}")
        }
    } else {
        let zeros = "0".repeat((-exp - 1) as usize);
        let frac = format!("{zeros}{digits}");
        let frac = frac.trim_end_matches('0');
        if frac.is_empty() {
            "0".to_string()
        } else {
            format!("0.{frac}")
        }
    }
}

fn scientific(digits: &str, exp: i32) -> String {
    let head = &digits[..1];
    let tail = digits[1..].trim_end_matches('0');
    if tail.is_empty() {
        format!("{head}e{exp}")
    } else {
        format!("{head}.{tail}e{exp}")
    }
}
