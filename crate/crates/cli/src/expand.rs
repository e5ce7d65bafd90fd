//! The `expand` subcommand: exact symbolic objects.

use clap::ValueEnum;
use mzv_hopf::algebra::star;
use mzv_hopf::genfunc::{build_f_i, gamma1_i, gamma1_i_inverse};
use mzv_hopf::index::parse_index;
use mzv_hopf::numeric::Regularizer;
use mzv_hopf::{AntiHook, Combination, Index, IndexAlgebra};
use serde_json::{json, Value};

use crate::format::{combination_json, index_json, regularized_json, series_json, series_text};
use crate::verify::ReportFormat;
use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Target {
    Gamma1,
    Gamma1Inverse,
    #[value(name = "F")]
    F,
    Antihook,
    Harmonic,
    Star,
    LiftXy,
    Regularize,
}

#[derive(Debug, Default)]
pub struct ExpandArgs {
    pub order: Option<usize>,
    pub k: Option<String>,
    pub l: Option<String>,
    pub a: Option<u32>,
    pub index: Option<String>,
    pub indices: Option<String>,
    pub star: bool,
}

pub fn index_arg(text: &str, flag: &str) -> Result<Index, CliError> {
    parse_index(text).map_err(|e| CliError::Config(format!("--{flag}: {e}")))
}

fn required<'a>(v: &'a Option<String>, flag: &str, target: &str) -> Result<&'a str, CliError> {
    v.as_deref().ok_or_else(|| CliError::Config(format!("expand {target} needs --{flag}")))
}

/// `(k_row, l_row, a)` from `--k`, `--l` and `--a`; missing rows are empty.
pub fn antihook_args(k: &Option<String>, l: &Option<String>, a: Option<u32>) -> Result<AntiHook, CliError> {
    let column = index_arg(k.as_deref().unwrap_or(""), "k")?;
    let row = index_arg(l.as_deref().unwrap_or(""), "l")?;
    let corner = a.ok_or_else(|| CliError::Config("anti-hook needs --a".into()))?;
    if corner == 0 {
        return Err(CliError::Config("--a must be positive".into()));
    }
    Ok(AntiHook::new(column, row, corner))
}

fn combination_output(u: &Combination, format: ReportFormat, extra: Value) -> String {
    match format {
        ReportFormat::Text => u.to_string(),
        ReportFormat::Json => {
            let mut v = extra;
            match &mut v {
                Value::Object(m) => {
                    m.insert("expansion".into(), combination_json(u));
                }
                _ => v = combination_json(u),
            }
            v.to_string()
        }
    }
}

pub fn run_expand(target: Target, args: &ExpandArgs, format: ReportFormat) -> Result<String, CliError> {
    let mut alg = IndexAlgebra::new();
    let order = args.order.unwrap_or(6);
    let series = |f| match format {
        ReportFormat::Text => series_text(&f).trim_end().to_string(),
        ReportFormat::Json => series_json(&f).to_string(),
    };
    Ok(match target {
        Target::Gamma1 => series(gamma1_i(&mut alg, order)),
        Target::Gamma1Inverse => series(gamma1_i_inverse(&mut alg, order)),
        Target::F => series(build_f_i(&mut alg, order)),
        Target::Antihook => {
            let h = antihook_args(&args.k, &args.l, args.a)?;
            let u = alg.expand_antihook(&h);
            let extra = json!({"k": index_json(&h.column), "l": index_json(&h.row), "a": h.corner});
            combination_output(&u, format, extra)
        }
        Target::Harmonic => {
            let text = required(&args.indices, "indices", "harmonic")?;
            let mut product = Combination::unit();
            for (i, piece) in text.split(';').enumerate() {
                let k = index_arg(piece, "indices")?;
                product = if i == 0 { Combination::index(k) } else { alg.mul(&product, &Combination::index(k)) };
            }
            combination_output(&product, format, Value::Null)
        }
        Target::Star => {
            let k = index_arg(required(&args.index, "index", "star")?, "index")?;
            combination_output(&star(&k), format, Value::Null)
        }
        Target::LiftXy => {
            let k = index_arg(required(&args.index, "index", "lift-xy")?, "index")?;
            let u = if args.star { alg.lift_xy_star(&k) } else { alg.lift_xy(&k) };
            combination_output(&u, format, Value::Null)
        }
        Target::Regularize => {
            let k = index_arg(required(&args.index, "index", "regularize")?, "index")?;
            let r = Regularizer::new().regularize(&mut alg, &k);
            match format {
                ReportFormat::Text => r.to_string(),
                ReportFormat::Json => json!({"index": index_json(&k), "terms": regularized_json(&r)}).to_string(),
            }
        }
    })
}
