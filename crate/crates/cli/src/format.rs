//! JSON and text renderings shared by every subcommand.

use mzv_hopf::genfunc::ISeries;
use mzv_hopf::numeric::{NumericPoly, RegularizedZeta, TwoFloat};
use mzv_hopf::poly::format_rational;
use mzv_hopf::{Combination, Index, PolyScalar};
use serde_json::{json, Value};

/// Rounds to 12 significant digits; non-finite values become `null`.
pub fn sig12(x: f64) -> Value {
    if !x.is_finite() {
        return Value::Null;
    }
    let rounded: f64 = format!("{x:.11e}").parse().expect("formatted float parses");
    json!(rounded)
}

/// Text form of [`sig12`].
pub fn sig12_text(x: f64) -> String {
    match sig12(x) {
        Value::Number(n) => n.to_string(),
        _ => format!("{x}"),
    }
}

pub fn index_json(k: &Index) -> Value {
    json!(k.parts())
}

pub fn poly_json(p: &PolyScalar) -> Value {
    Value::Array(
        p.terms()
            .map(|(m, q)| json!({"monomial": m.key(), "value": format_rational(q)}))
            .collect(),
    )
}

/// `[{"index": [...], "coeff": [{"monomial": "x0y0A0B0", "value": "p/q"}]}]`.
pub fn combination_json(u: &Combination) -> Value {
    Value::Array(
        u.terms()
            .map(|(k, p)| json!({"index": index_json(k), "coeff": poly_json(p)}))
            .collect(),
    )
}

pub fn series_json(f: &ISeries) -> Value {
    json!({
        "order": f.order(),
        "coefficients": f.coeffs().iter().map(combination_json).collect::<Vec<_>>(),
    })
}

pub fn series_text(f: &ISeries) -> String {
    let mut out = String::new();
    for (n, c) in f.coeffs().iter().enumerate() {
        out.push_str(&format!("W^{n}: {c}\n"));
    }
    out
}

pub fn regularized_json(r: &RegularizedZeta) -> Value {
    Value::Array(
        r.terms()
            .map(|((d, k), q)| json!({"t_degree": d, "index": index_json(k), "coeff": format_rational(q)}))
            .collect(),
    )
}

fn real(c: TwoFloat) -> f64 {
    c.hi() + c.lo()
}

/// Coefficients of `T^0, T^1, ...` at 12 significant digits.
pub fn numeric_poly_json(p: &NumericPoly) -> Value {
    Value::Array(p.coeffs().iter().map(|&c| sig12(real(c))).collect())
}

/// Highest power first, e.g. `1.64493406685*T - 2.40411380632`.
pub fn numeric_poly_text(p: &NumericPoly) -> String {
    let mut out = String::new();
    for (d, &c) in p.coeffs().iter().enumerate().rev() {
        let v = real(c);
        if v == 0.0 {
            continue;
        }
        if out.is_empty() {
            if v < 0.0 {
                out.push('-');
            }
        } else {
            out.push_str(if v < 0.0 { " - " } else { " + " });
        }
        let mag = v.abs();
        if d == 0 || mag != 1.0 {
            out.push_str(&sig12_text(mag));
            if d > 0 {
                out.push('*');
            }
        }
        match d {
            0 => {}
            1 => out.push('T'),
            _ => out.push_str(&format!("T^{d}")),
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn twelve_digits() {
        assert_eq!(sig12(std::f64::consts::PI).to_string(), "3.14159265359");
        assert_eq!(sig12(1e-30).to_string(), "1e-30");
        assert_eq!(sig12(f64::NAN), Value::Null);
        assert_eq!(sig12_text(0.5), "0.5");
    }

    #[test]
    fn poly_text() {
        let p = NumericPoly::from_coeffs(vec![TwoFloat::from(-2.5), TwoFloat::from(1.0)]);
        assert_eq!(numeric_poly_text(&p), "T - 2.5");
        assert_eq!(numeric_poly_text(&NumericPoly::zero()), "0");
        assert_eq!(numeric_poly_json(&p).to_string(), "[-2.5,1.0]");
    }
}
