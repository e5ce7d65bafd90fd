//! The `eval` subcommand: numeric values as polynomials in `T`.

use mzv_hopf::algebra::star;
use mzv_hopf::numeric::Evaluator;
use mzv_hopf::poly::{parse_rational, Assignment};
use mzv_hopf::{Combination, Var};
use serde_json::json;

use crate::expand::{antihook_args, index_arg};
use crate::format::{index_json, numeric_poly_json, numeric_poly_text, sig12, sig12_text};
use crate::verify::ReportFormat;
use crate::CliError;

#[derive(Debug, Default)]
pub struct EvalArgs {
    pub index: Option<String>,
    pub star: bool,
    pub xy: Option<String>,
    pub tol: f64,
    pub k: Option<String>,
    pub l: Option<String>,
    pub a: Option<u32>,
}

fn xy_point(text: &str) -> Result<Assignment, CliError> {
    let parts: Vec<&str> = text.split(',').collect();
    let [x, y] = parts.as_slice() else {
        return Err(CliError::Config(format!("--xy expects \"x,y\", got {text:?}")));
    };
    let q = |s: &str| parse_rational(s).map_err(|e| CliError::Config(format!("--xy: {e}")));
    Ok(Assignment::new().with(Var::X, q(x)?).with(Var::Y, q(y)?))
}

pub fn run_eval(args: &EvalArgs, format: ReportFormat) -> Result<String, CliError> {
    if !(args.tol > 0.0) {
        return Err(CliError::Config("--tol must be positive".into()));
    }
    let mut ev = Evaluator::new(args.tol);
    let (u, input) = match (&args.index, args.a) {
        (Some(_), Some(_)) => return Err(CliError::Config("give either --index or --a, not both".into())),
        (Some(text), None) => {
            let k = index_arg(text, "index")?;
            let u = if args.star { star(&k) } else { Combination::index(k.clone()) };
            (u, json!({"index": index_json(&k), "star": args.star}))
        }
        (None, Some(_)) => {
            let h = antihook_args(&args.k, &args.l, args.a)?;
            let input = json!({"k": index_json(&h.column), "l": index_json(&h.row), "a": h.corner});
            (ev.alg.expand_antihook(&h), input)
        }
        (None, None) => return Err(CliError::Config("eval needs --index or --k/--l/--a".into())),
    };
    let (u, point) = match &args.xy {
        Some(text) => (ev.alg.lift_xy_linear(&u), xy_point(text)?),
        None => (u, Assignment::new()),
    };
    let result = ev.eval_z_bounded(&u, &point).map_err(|e| CliError::Runtime(e.to_string()))?;
    Ok(match format {
        ReportFormat::Text => format!(
            "{}\nerror_bound: {}",
            numeric_poly_text(&result.value),
            sig12_text(result.error_bound)
        ),
        ReportFormat::Json => json!({
            "input": input,
            "xy": args.xy,
            "tol": sig12(args.tol),
            "t_coefficients": numeric_poly_json(&result.value),
            "text": numeric_poly_text(&result.value),
            "error_bound": sig12(result.error_bound),
        })
        .to_string(),
    })
}
