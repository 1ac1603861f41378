//! Locale-independent number rendering for machine output.

/// How numbers are printed in documents and CSV.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NumberFormat {
    /// Round to this many significant digits.
    Significant(usize),
    /// Round to this many digits after the decimal point.
    Decimals(usize),
}

impl Default for NumberFormat {
    fn default() -> Self {
        NumberFormat::Significant(12)
    }
}

impl NumberFormat {
    pub fn from_round(round: Option<usize>) -> Self {
        round.map_or_else(NumberFormat::default, NumberFormat::Decimals)
    }

    /// Renders `x` as a JSON-compatible number with trailing zeros removed.
    /// Non-finite values render as `null`.
    pub fn render(&self, x: f64) -> String {
        if !x.is_finite() {
            return "null".into();
        }
        let s = match *self {
            NumberFormat::Decimals(d) => format!("{x:.d$}"),
            NumberFormat::Significant(digits) => significant(x, digits.max(1)),
        };
        let s = trim_zeros(s);
        if s == "-0" {
            "0".into()
        } else {
            s
        }
    }

    /// The value a reader of [`render`](Self::render)'s output would see.
    pub fn snap(&self, x: f64) -> f64 {
        self.render(x).parse().unwrap_or(x)
    }
}

fn significant(x: f64, digits: usize) -> String {
    if x == 0.0 {
        return "0".into();
    }
    let sci = format!("{:.*e}", digits - 1, x);
    let (mantissa, exp) = sci.split_once('e').expect("exponent marker");
    let exp: i32 = exp.parse().expect("exponent");
    if !(-6..12).contains(&exp) {
        let m = trim_zeros(mantissa.to_string());
        return format!("{m}e{exp}");
    }
    let decimals = (digits as i32 - 1 - exp).max(0) as usize;
    format!("{x:.decimals$}")
}

fn trim_zeros(s: String) -> String {
    if !s.contains('.') || s.contains('e') {
        return s;
    }
    let t = s.trim_end_matches('0').trim_end_matches('.');
    t.to_string()
}
