//! Harmonic regularization with `ζ(1) = T`.

use alloc::collections::BTreeMap;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::algebra::{Combination, IndexAlgebra};
use crate::error::Result;
use crate::index::Index;
use crate::poly::{Assignment, PolyScalar};
use crate::Rational;

/// `∑ q · ζ(k) T^d` over admissible `k`, keyed by `(d, k)`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RegularizedZeta {
    terms: BTreeMap<(u32, Index), Rational>,
}

impl RegularizedZeta {
    pub fn zero() -> Self {
        Self::default()
    }

    /// `ζ(k)` for admissible `k`.
    pub fn admissible(k: Index) -> Self {
        debug_assert!(k.is_admissible());
        let mut terms = BTreeMap::new();
        terms.insert((0, k), Rational::one());
        RegularizedZeta { terms }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, Index), &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, degree: u32, k: &Index) -> Rational {
        self.terms.get(&(degree, k.clone())).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn t_degree(&self) -> Option<u32> {
        self.terms.keys().map(|(d, _)| *d).max()
    }

    pub fn add_scaled(&mut self, other: &RegularizedZeta, q: &Rational) {
        for (key, c) in &other.terms {
            let entry = self.terms.entry(key.clone()).or_insert_with(Rational::zero);
            *entry += c * q;
            if entry.is_zero() {
                self.terms.remove(key);
            }
        }
    }

    /// Multiplies by `T`.
    pub fn times_t(&self) -> RegularizedZeta {
        let terms = self.terms.iter().map(|((d, k), c)| ((d + 1, k.clone()), c.clone())).collect();
        RegularizedZeta { terms }
    }

    pub fn scale(&self, q: &Rational) -> RegularizedZeta {
        let mut out = RegularizedZeta::zero();
        out.add_scaled(self, q);
        out
    }
}

fn write_term(f: &mut fmt::Formatter<'_>, first: bool, degree: u32, k: &Index, c: &Rational) -> fmt::Result {
    let negative = c.is_negative();
    if negative {
        f.write_str("−")?;
    } else if !first {
        f.write_str("+")?;
    }
    let mag = c.abs();
    let bare = k.is_empty() && degree == 0;
    if !mag.is_one() || bare {
        if mag.is_integer() {
            write!(f, "{}", mag.numer())?;
        } else {
            write!(f, "({}/{})", mag.numer(), mag.denom())?;
        }
    }
    if !k.is_empty() {
        write!(f, "ζ({k})")?;
    }
    match degree {
        0 => Ok(()),
        1 => f.write_str("T"),
        d => write!(f, "T^{d}"),
    }
}

impl fmt::Display for RegularizedZeta {
    /// Highest `T`-degree first, e.g. `ζ(2)T−ζ(1,2)−ζ(3)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        let mut degrees: alloc::vec::Vec<u32> = self.terms.keys().map(|(d, _)| *d).collect();
        degrees.dedup();
        for &d in degrees.iter().rev() {
            for ((_, k), c) in self.terms.range((d, Index::empty())..).take_while(|((e, _), _)| *e == d) {
                write_term(f, first, d, k, c)?;
                first = false;
            }
        }
        Ok(())
    }
}

/// Like [`RegularizedZeta`] with polynomial coefficients in `x, y, A, B`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RegularizedCombination {
    terms: BTreeMap<(u32, Index), PolyScalar>,
}

impl RegularizedCombination {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, Index), &PolyScalar)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_scaled(&mut self, r: &RegularizedZeta, p: &PolyScalar) {
        for (key, q) in r.terms() {
            let entry = self.terms.entry(key.clone()).or_insert_with(PolyScalar::zero);
            entry.add_scaled(p, q);
            if entry.is_zero() {
                self.terms.remove(key);
            }
        }
    }

    /// Evaluates every coefficient at `point`.
    pub fn evaluate(&self, point: &Assignment) -> Result<RegularizedZeta> {
        let mut out = RegularizedZeta::zero();
        for (key, p) in &self.terms {
            let q = p.evaluate(point)?;
            if !q.is_zero() {
                out.terms.insert(key.clone(), q);
            }
        }
        Ok(out)
    }
}

/// Memoized regularization. For `k = (v, 1)` with `t` trailing ones,
/// `[v] * [1] = t [k] + q` where every index in `q` has fewer than `t`
/// trailing ones, so `reg(k) = (reg(v) T − reg(q)) / t` terminates on
/// (trailing ones, weight).
#[derive(Clone, Debug, Default)]
pub struct Regularizer {
    memo: BTreeMap<Index, RegularizedZeta>,
}

impl Regularizer {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn memo_len(&self) -> usize {
        self.memo.len()
    }

    pub fn regularize(&mut self, alg: &mut IndexAlgebra, k: &Index) -> RegularizedZeta {
        if k.is_admissible() {
            return RegularizedZeta::admissible(k.clone());
        }
        if let Some(r) = self.memo.get(k) {
            return r.clone();
        }
        let t = k.trailing_ones();
        let (v, _) = k.split_last().expect("non-admissible index is nonempty");
        let product = alg.harmonic(&v, &Index::single(1));
        let mut out = self.regularize(alg, &v).times_t();
        for (m, c) in product.terms() {
            let q = c.as_constant().expect("integer structure constants");
            if m == k {
                assert_eq!(q, Rational::from_integer(BigInt::from(t)));
                continue;
            }
            assert!(m.trailing_ones() < t, "regularization must lower the trailing-one count");
            let sub = self.regularize(alg, m);
            out.add_scaled(&sub, &-q);
        }
        let out = out.scale(&Rational::new(BigInt::one(), BigInt::from(t)));
        self.memo.insert(k.clone(), out.clone());
        out
    }

    pub fn regularize_combination(&mut self, alg: &mut IndexAlgebra, u: &Combination) -> RegularizedCombination {
        let mut out = RegularizedCombination::zero();
        for (k, p) in u.terms() {
            let r = self.regularize(alg, k);
            out.add_scaled(&r, p);
        }
        out
    }
}
