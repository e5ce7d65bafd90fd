//! Admissible multiple zeta values.
//!
//! `ζ(k_1, ..., k_r) = ∑_{m_1 < ... < m_r} m_1^{-k_1} ... m_r^{-k_r}` is
//! written as an iterated integral over `[0, 1]` and the path is split at
//! `1/2`. Both halves are multiple polylogarithms at `1/2`, whose series
//! converge like `2^{-n}`.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use twofloat::TwoFloat;

use crate::error::{Error, Result};
use crate::index::Index;

/// Error bound achieved by [`eval_admissible`] for indices of moderate
/// weight; smaller tolerances are rejected.
pub const WORKING_ERROR: f64 = 1e-28;
/// Largest number of series terms [`eval_admissible`] will sum.
pub const MAX_TERMS: usize = 4000;

const UNIT_ROUNDOFF: f64 = 1.0 / 20282409603651670423947251286016.0;
const TRUNCATION_TARGET: f64 = 1e-31;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MzvValue {
    pub value: TwoFloat,
    /// Rigorous bound on truncation plus an estimate of rounding error.
    pub error: f64,
}

impl MzvValue {
    pub fn to_f64(self) -> f64 {
        self.value.hi() + self.value.lo()
    }
}

/// The word in `x0 = dt/t`, `x1 = dt/(1−t)` (outermost letter first).
fn word(k: &Index) -> Vec<u8> {
    let mut out = Vec::with_capacity(k.weight() as usize);
    for &s in k.parts().iter().rev() {
        out.extend(core::iter::repeat(0).take(s as usize - 1));
        out.push(1);
    }
    out
}

/// Exponents `s_1, ..., s_d` of the polylogarithm whose integral from 0 is
/// the given word. The word must be empty or end in `x1`.
fn polylog_exponents(word: &[u8]) -> Vec<u32> {
    let mut out = Vec::new();
    let mut run = 1;
    for &letter in word {
        if letter == 1 {
            out.push(run);
            run = 1;
        } else {
            run += 1;
        }
    }
    out
}

/// `Li_{s_1,...,s_d}(1/2) = ∑_{n_1 > ... > n_d ≥ 1} 2^{-n_1} n_1^{-s_1} ... n_d^{-s_d}`
/// summed over `n_1 ≤ terms`.
fn polylog_half(s: &[u32], reciprocals: &[TwoFloat], terms: usize) -> TwoFloat {
    let d = s.len();
    if d == 0 {
        return TwoFloat::from(1.0);
    }
    // partial[i] = ∑_{m < n} t_i(m) for levels below the outermost.
    let mut partial = vec![TwoFloat::from(0.0); d];
    let mut current = vec![TwoFloat::from(0.0); d];
    let mut total = TwoFloat::from(0.0);
    for n in 1..=terms {
        let inv = reciprocals[n];
        for i in 0..d {
            let inner = if i + 1 < d { partial[i + 1] } else { TwoFloat::from(1.0) };
            current[i] = inv.powi(s[i] as i32) * inner;
        }
        for i in 0..d {
            partial[i] += current[i];
        }
        total += current[0] * TwoFloat::from(libm::ldexp(1.0, -(n as i32)));
    }
    total
}

/// Bound on the omitted terms `n_1 > terms` of a depth-`d` polylogarithm at
/// `1/2`; valid once `terms ≥ 3d`.
fn polylog_tail(d: usize, terms: usize) -> f64 {
    if d == 0 {
        return 0.0;
    }
    let m = (terms + 1) as f64;
    4.0 * libm::ldexp(1.0, -((terms + 1) as i32)) * libm::pow(1.0 + libm::log(m), (d - 1) as f64)
}

fn total_tail(w: usize, terms: usize) -> f64 {
    let t = polylog_tail(w, terms);
    (w + 1) as f64 * (2.0 * t + t * t)
}

/// `ζ(k)` for admissible `k`, within `tol`.
pub fn eval_admissible(k: &Index, tol: f64) -> Result<MzvValue> {
    if !k.is_admissible() {
        return Err(Error::NotAdmissible(alloc::format!("{k}")));
    }
    if !(tol > 0.0) {
        return Err(Error::InvalidParameter(alloc::format!("tolerance {tol} must be positive")));
    }
    if k.is_empty() {
        return Ok(MzvValue { value: TwoFloat::from(1.0), error: 0.0 });
    }
    let w = k.weight() as usize;
    let mut terms = 3 * w + 8;
    while total_tail(w, terms) > TRUNCATION_TARGET {
        terms += 8;
        if terms > MAX_TERMS {
            return Err(Error::ToleranceUnreachable { requested: tol, achievable: total_tail(w, MAX_TERMS) });
        }
    }
    let rounding = 8.0 * UNIT_ROUNDOFF * ((w + 1) * w * terms) as f64;
    let error = total_tail(w, terms) + rounding.max(WORKING_ERROR);
    if tol < error {
        return Err(Error::ToleranceUnreachable { requested: tol, achievable: error });
    }
    let reciprocals: Vec<TwoFloat> = (0..=terms)
        .map(|n| if n == 0 { TwoFloat::from(0.0) } else { TwoFloat::from(1.0) / (n as f64) })
        .collect();
    let letters = word(k);
    let mut value = TwoFloat::from(0.0);
    for j in 0..=w {
        let head: Vec<u8> = letters[..j].iter().rev().map(|&b| 1 - b).collect();
        let left = polylog_half(&polylog_exponents(&head), &reciprocals, terms);
        let right = polylog_half(&polylog_exponents(&letters[j..]), &reciprocals, terms);
        value += left * right;
    }
    Ok(MzvValue { value, error })
}

/// Direct nested summation of `ζ(k)` over `m_r ≤ M`, with a rigorous bound
/// on the omitted tail. The partial sum never exceeds the true value.
pub fn brute_force_mzv(k: &Index, m: u64) -> Result<(f64, f64)> {
    let a = match k.last() {
        None => return Ok((1.0, 0.0)),
        Some(a) if a >= 2 => a,
        Some(_) => return Err(Error::NotAdmissible(alloc::format!("{k}"))),
    };
    let parts = k.parts();
    let r = parts.len();
    let mut partial = vec![TwoFloat::from(0.0); r];
    let mut current = vec![TwoFloat::from(0.0); r];
    for n in 1..=m {
        let inv = TwoFloat::from(1.0) / (n as f64);
        for i in 0..r {
            let inner = if i == 0 { TwoFloat::from(1.0) } else { partial[i - 1] };
            current[i] = inv.powi(parts[i] as i32) * inner;
        }
        for i in 0..r {
            partial[i] += current[i];
        }
    }
    let value = partial[r - 1];
    Ok((value.hi() + value.lo(), brute_tail(r - 1, a, m)))
}

/// `∑_{n > M} L(n)^j n^{-a} / j!` with `L(t) = 1 + ln t` bounding the inner
/// harmonic sums. Terms are summed explicitly until the summand is
/// decreasing, then bounded by the integral.
fn brute_tail(j: usize, a: u32, m: u64) -> f64 {
    let af = a as f64;
    let big_l = |t: f64| 1.0 + libm::log(t);
    let mut start = m.max(1);
    let mut explicit = 0.0;
    while big_l(start as f64) * af < j as f64 {
        start += 1;
        explicit += libm::pow(big_l(start as f64), j as f64) * libm::pow(start as f64, -af);
    }
    let mf = start as f64;
    let lm = big_l(mf);
    let base = libm::pow(mf, 1.0 - af) / (af - 1.0);
    let mut integral = base;
    for i in 1..=j {
        integral = libm::pow(lm, i as f64) * base + (i as f64 / (af - 1.0)) * integral;
    }
    let mut factorial = 1.0;
    for i in 2..=j {
        factorial *= i as f64;
    }
    (explicit + integral) / factorial
}

/// Memoized admissible values. Every stored entry has an error bound no
/// larger than the tolerance it was requested with.
#[derive(Clone, Debug, Default)]
pub struct MzvCache {
    entries: BTreeMap<Index, MzvValue>,
}

impl MzvCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, k: &Index, tol: f64) -> Option<MzvValue> {
        self.entries.get(k).copied().filter(|v| v.error <= tol)
    }

    pub fn eval(&mut self, k: &Index, tol: f64) -> Result<MzvValue> {
        if let Some(v) = self.get(k, tol) {
            return Ok(v);
        }
        let v = eval_admissible(k, tol)?;
        self.entries.insert(k.clone(), v);
        Ok(v)
    }

    /// Inserts an externally obtained value, keeping the more accurate one.
    pub fn insert(&mut self, k: Index, v: MzvValue) {
        match self.entries.get(&k) {
            Some(old) if old.error <= v.error => {}
            _ => {
                self.entries.insert(k, v);
            }
        }
    }

    pub fn merge(&mut self, other: &MzvCache) {
        for (k, v) in &other.entries {
            self.insert(k.clone(), *v);
        }
    }

    pub fn entries(&self) -> impl Iterator<Item = (&Index, &MzvValue)> {
        self.entries.iter()
    }
}
