//! Random-access analysis for linearly coded storage pools: given a full-rank
//! generator matrix over a finite field whose columns are drawn uniformly at
//! random with repetition, compute, bound, and simulate the expected number
//! of draws until a chosen information strand can be decoded.

pub mod asym;
pub mod codes;
pub mod construct;
pub mod error;
pub mod exact;
pub mod figures;
pub mod gf;
pub mod sim;

pub use error::{Error, Result};

/// Formats a float with 15 significant digits, plain `.` decimal separator,
/// trimming trailing zeros so CSV output is byte-stable across runs.
pub fn fmt_sig(v: f64) -> String {
    if v == 0.0 {
        return "0".to_string();
    }
    if !v.is_finite() {
        return format!("{v}");
    }
    let s = format!("{v:.14e}");
    // split "d.ddddde<exp>" back into positional notation
    let (mantissa, exp) = s.split_once('e').expect("exponential format");
    let exp: i32 = exp.parse().expect("exponent");
    if (-4..15).contains(&exp) {
        let decimals = (14 - exp).max(0) as usize;
        let mut out = format!("{v:.decimals$}");
        if out.contains('.') {
            while out.ends_with('0') {
                out.pop();
            }
            if out.ends_with('.') {
                out.pop();
            }
        }
        out
    } else {
        let mantissa = mantissa.trim_end_matches('0').trim_end_matches('.');
        format!("{mantissa}e{exp}")
    }
}

#[cfg(test)]
mod tests {
    use super::fmt_sig;

    #[test]
    fn significant_digit_formatting() {
        assert_eq!(fmt_sig(0.0), "0");
        assert_eq!(fmt_sig(2.0), "2");
        assert_eq!(fmt_sig(23.0 / 12.0), "1.91666666666667");
        assert_eq!(fmt_sig(0.863813858004242_8), "0.863813858004243");
        assert_eq!(fmt_sig(-1.5), "-1.5");
        assert_eq!(fmt_sig(1e-7), "1e-7");
        assert_eq!(fmt_sig(1.25e20), "1.25e20");
    }
}
