//! Anti-hook Schur symbols `[k; l; a]` and the identities they satisfy.
//!
//! `k` is the column read top to bottom, `l` the row read left to right and
//! `a` the corner entry.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::algebra::{antipode_tilde, star, Combination, IndexAlgebra};
use crate::error::{Error, Result};
use crate::hopf::{pairs_up_to, SuiteReport, Tally};
use crate::index::{enumerate_triples, enumerate_up_to, Index};
use crate::poly::Monomial;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AntiHook {
    pub column: Index,
    pub row: Index,
    pub corner: u32,
}

impl AntiHook {
    pub fn new(column: Index, row: Index, corner: u32) -> Self {
        assert!(corner >= 1, "corner must be positive");
        AntiHook { column, row, corner }
    }

    pub fn weight(&self) -> u32 {
        self.column.weight() + self.row.weight() + self.corner
    }

    /// The anti-hook with column and row exchanged.
    pub fn transposed(&self) -> AntiHook {
        AntiHook::new(self.row.clone(), self.column.clone(), self.corner)
    }
}

impl fmt::Display for AntiHook {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{};{};{}]", self.column, self.row, self.corner)
    }
}

fn sign(n: usize) -> i64 {
    if n % 2 == 0 {
        1
    } else {
        -1
    }
}

impl IndexAlgebra {
    /// Expands `[k; l; a]` by peeling the last row entry:
    /// `[k; l; a] = [k, a] * [l]^★ − [(k, a); l_{s−1}; l_s]`.
    pub fn expand_antihook(&mut self, h: &AntiHook) -> Combination {
        let key = (h.column.clone(), h.row.clone(), h.corner);
        if let Some(c) = self.antihooks.get(&key) {
            return c.clone();
        }
        let ka = h.column.pushed(h.corner);
        let value = match h.row.split_last() {
            None => Combination::index(ka),
            Some((rest, last)) => {
                let product = self.mul(&Combination::index(ka.clone()), &star(&h.row));
                let peeled = self.expand_antihook(&AntiHook::new(ka, rest, last));
                &product - &peeled
            }
        };
        self.antihooks.insert(key, value.clone());
        value
    }

    /// The alternating closed form
    /// `∑_j (−1)^j [k, a, m_j] * [←(m^j)]^★` with `m = ←row`.
    pub fn expand_antihook_closed(&mut self, h: &AntiHook) -> Combination {
        let m = h.row.reversed();
        let base = h.column.pushed(h.corner);
        let mut out = Combination::zero();
        for j in 0..=m.depth() {
            let left = Combination::index(base.concat(&m.prefix(j)));
            let right = star(&m.suffix(j).reversed());
            out += &self.mul(&left, &right).scale_int(sign(j));
        }
        out
    }

    /// Whether `[K_{r−1}; L; k_r] + [K; L_{s−1}; l_s] = [K] * [L]^★` holds,
    /// with both anti-hooks expanded by the closed form.
    pub fn compatibility_check(&mut self, big_k: &Index, big_l: &Index) -> bool {
        let (k_rest, k_last) = match big_k.split_last() {
            Some(v) => v,
            None => return false,
        };
        let (l_rest, l_last) = match big_l.split_last() {
            Some(v) => v,
            None => return false,
        };
        let first = self.expand_antihook_closed(&AntiHook::new(k_rest, big_l.clone(), k_last));
        let second = self.expand_antihook_closed(&AntiHook::new(big_k.clone(), l_rest, l_last));
        let rhs = self.mul(&Combination::index(big_k.clone()), &star(big_l));
        &first + &second == rhs
    }

    /// The overdetermined system fixing the anti-hooks built from one index
    /// `k` of depth `n`: `n` unknowns, `n + 1` equations. Returns whether
    /// each equation holds when the unknowns come from the closed form.
    pub fn definition_chain(&mut self, k: &Index) -> Vec<bool> {
        let n = k.depth();
        if n == 0 {
            return Vec::new();
        }
        let parts = k.parts();
        let unknowns: Vec<Combination> = (0..n)
            .map(|j| {
                let column = k.prefix(n - 1 - j);
                let row = k.suffix(n - j).reversed();
                self.expand_antihook_closed(&AntiHook::new(column, row, parts[n - 1 - j]))
            })
            .collect();
        let mut results = Vec::with_capacity(n + 1);
        results.push(unknowns[0] == Combination::index(k.clone()));
        for j in 1..n {
            let lhs = &unknowns[j - 1] + &unknowns[j];
            let column = Combination::index(k.prefix(n - j));
            let row = star(&k.suffix(n - j).reversed());
            results.push(lhs == self.mul(&column, &row));
        }
        results.push(unknowns[n - 1] == star(&k.reversed()));
        results
    }

    /// `(S̃([k; l; a]), (−1)^{r+s+1} [l; k; a])`.
    pub fn antihook_antipode(&mut self, h: &AntiHook) -> (Combination, Combination) {
        let lhs = antipode_tilde(&self.expand_antihook(h));
        let swapped = self.expand_antihook(&h.transposed());
        let rhs = swapped.scale_int(-sign(h.column.depth() + h.row.depth()));
        (lhs, rhs)
    }

    /// Both sides of a named lemma at `(k, a, l)`.
    pub fn lemma_sides(&mut self, name: LemmaName, k: &Index, a: u32, l: &Index) -> (Combination, Combination) {
        match name {
            LemmaName::Alternating2 => self.alternating2(k, a, l),
            LemmaName::Alternating3 => self.alternating3(k, a, l),
            LemmaName::Key => self.key(k, a, l, false),
            LemmaName::KeyStar => self.key(k, a, l, true),
        }
    }

    fn alternating2(&mut self, k: &Index, a: u32, l: &Index) -> (Combination, Combination) {
        let base = k.pushed(a);
        let mut lhs = Combination::zero();
        for j in 0..=l.depth() {
            let left = Combination::index(base.concat(&l.prefix(j)));
            let right = star(&l.suffix(j).reversed());
            lhs += &self.mul(&left, &right).scale_int(sign(j));
        }
        let rhs = self.expand_antihook(&AntiHook::new(k.clone(), l.reversed(), a));
        (lhs, rhs)
    }

    fn alternating3(&mut self, k: &Index, a: u32, l: &Index) -> (Combination, Combination) {
        let mut lhs = Combination::zero();
        for j in 0..=l.depth() {
            let h = self.expand_antihook(&AntiHook::new(k.clone(), l.prefix(j).reversed(), a));
            let tail = Combination::index(l.suffix(j));
            lhs += &self.mul(&h, &tail).scale_int(sign(j));
        }
        (lhs, Combination::index(k.pushed(a).concat(l)))
    }

    fn key(&mut self, k: &Index, a: u32, l: &Index, starred: bool) -> (Combination, Combination) {
        let joined = k.pushed(a).concat(l);
        let lhs = if starred { self.lift_xy_star(&joined) } else { self.lift_xy(&joined) };
        let r = k.depth();
        let rl = l.reversed();
        let mut rhs = Combination::zero();
        for i in 0..=r {
            let tail = k.suffix(i);
            let h = if starred {
                AntiHook::new(tail.clone(), rl.clone(), a)
            } else {
                AntiHook::new(rl.clone(), tail.clone(), a)
            };
            let y = (tail.weight() + a + l.weight()) as u16;
            let schur = self.expand_antihook(&h).mul_monomial(&Monomial::new(0, y, 0, 0));
            let head = k.prefix(i);
            let lift = if starred { self.lift_xy_star(&head) } else { self.lift_xy(&head) };
            rhs += &self.mul(&schur, &lift).scale_int(sign(r - i));
        }
        for j in 0..=l.depth() {
            let lj = l.prefix(j);
            let h = if starred {
                AntiHook::new(lj.reversed(), k.clone(), a)
            } else {
                AntiHook::new(k.clone(), lj.reversed(), a)
            };
            let x = (k.weight() + a + lj.weight()) as u16;
            let schur = self.expand_antihook(&h).mul_monomial(&Monomial::new(x, 0, 0, 0));
            let tail = l.suffix(j);
            let lift = if starred { self.lift_xy_star(&tail) } else { self.lift_xy(&tail) };
            rhs += &self.mul(&schur, &lift).scale_int(sign(j));
        }
        (lhs, rhs)
    }
}

/// The lemmas [`IndexAlgebra::lemma_sides`] can build.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LemmaName {
    Alternating2,
    Alternating3,
    Key,
    KeyStar,
}

impl LemmaName {
    pub const ALL: [LemmaName; 4] =
        [LemmaName::Alternating2, LemmaName::Alternating3, LemmaName::Key, LemmaName::KeyStar];

    pub fn as_str(self) -> &'static str {
        match self {
            LemmaName::Alternating2 => "alternating2",
            LemmaName::Alternating3 => "alternating3",
            LemmaName::Key => "key",
            LemmaName::KeyStar => "key_star",
        }
    }
}

impl fmt::Display for LemmaName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for LemmaName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        LemmaName::ALL
            .into_iter()
            .find(|n| n.as_str() == s)
            .ok_or_else(|| Error::UnknownName(String::from(s)))
    }
}

/// The names of every check in [`run_schur_suite`], in run order.
pub const SCHUR_CHECKS: [&str; 8] = [
    "recursion_closed_form",
    "compatibility",
    "definition_chain",
    "antipode",
    "alternating2",
    "alternating3",
    "key",
    "key_star",
];

/// Every anti-hook `[k; l; a]` with `a ≥ 1` and total weight at most `max_weight`.
pub fn antihooks_up_to(max_weight: u32) -> Vec<AntiHook> {
    (1..=max_weight)
        .flat_map(|w| enumerate_triples(w, 1))
        .map(|t| AntiHook::new(t.k, t.l, t.a))
        .collect()
}

/// Runs a single named check over every case of weight at most
/// `max_weight`. Unknown names return `None`.
pub fn run_schur_check(alg: &mut IndexAlgebra, check: &str, max_weight: u32) -> Option<SuiteReport> {
    let name = *SCHUR_CHECKS.iter().find(|&&c| c == check)?;
    let mut t = Tally::new(name, max_weight);
    match name {
        "recursion_closed_form" => {
            for h in antihooks_up_to(max_weight) {
                let ok = alg.expand_antihook(&h) == alg.expand_antihook_closed(&h);
                t.record(ok, || format!("{h}"));
            }
        }
        "compatibility" => {
            for (k, l) in pairs_up_to(max_weight) {
                if k.is_empty() || l.is_empty() {
                    continue;
                }
                t.record(alg.compatibility_check(&k, &l), || format!("K=({k}), L=({l})"));
            }
        }
        "definition_chain" => {
            for k in enumerate_up_to(max_weight).into_iter().filter(|k| !k.is_empty()) {
                let chain = alg.definition_chain(&k);
                let bad = chain.iter().position(|&ok| !ok);
                t.record(bad.is_none(), || format!("({k}) equation {}", bad.unwrap_or(0)));
            }
        }
        "antipode" => {
            for h in antihooks_up_to(max_weight) {
                let (lhs, rhs) = alg.antihook_antipode(&h);
                t.record(lhs == rhs, || format!("{h}"));
            }
        }
        _ => {
            let lemma: LemmaName = name.parse().expect("lemma check");
            for w in 1..=max_weight {
                for tr in enumerate_triples(w, 1) {
                    let (lhs, rhs) = alg.lemma_sides(lemma, &tr.k, tr.a, &tr.l);
                    t.record(lhs == rhs, || format!("k=({}), a={}, l=({})", tr.k, tr.a, tr.l));
                }
            }
        }
    }
    Some(t.finish())
}

/// Every check in [`SCHUR_CHECKS`] at the same weight bound.
pub fn run_schur_suite(alg: &mut IndexAlgebra, max_weight: u32) -> Vec<SuiteReport> {
    SCHUR_CHECKS
        .iter()
        .map(|c| run_schur_check(alg, c, max_weight).expect("known check"))
        .collect()
}
