//! Amplitude dump for golden-file debugging: one `index,real,imag` line
//! per basis state, ascending, numbers printed like C's `%.17g`.

use super::StateVector;
use crate::scalar::Scalar;
use std::io::{self, Write};

impl<T: Scalar> StateVector<T> {
    pub fn write_csv<W: Write>(&self, mut out: W) -> io::Result<()> {
        writeln!(out, "index,real,imag")?;
        for (i, a) in self.amplitudes().iter().enumerate() {
            writeln!(out, "{i},{},{}", format_g17(a.re.as_f64()), format_g17(a.im.as_f64()))?;
        }
        Ok(())
    }
}

/// Formats `value` the way `printf("%.17g", value)` does.
pub fn format_g17(value: f64) -> String {
    const PRECISION: i32 = 17;
    if value.is_nan() {
        return "nan".into();
    }
    if value.is_infinite() {
        return if value > 0.0 { "inf".into() } else { "-inf".into() };
    }
    if value == 0.0 {
        return if value.is_sign_negative() {
            "-0".into()
        } else {
            "0".into()
        };
    }
    // exponent after rounding to 17 significant digits
    let sci = format!("{:.*e}", (PRECISION - 1) as usize, value);
    let (mantissa, exp) = sci.split_once('e').expect("scientific format has an exponent");
    let exp: i32 = exp.parse().expect("integer exponent");
    if !(-4..PRECISION).contains(&exp) {
        let mantissa = strip_zeros(mantissa);
        let sign = if exp < 0 { '-' } else { '+' };
        format!("{mantissa}e{sign}{:02}", exp.abs())
    } else {
        let decimals = (PRECISION - 1 - exp) as usize;
        strip_zeros(&format!("{value:.decimals$}")).to_string()
    }
}

fn strip_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}
