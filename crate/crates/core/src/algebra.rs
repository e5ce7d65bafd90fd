//! The index Hopf algebra over polynomial scalars.

use alloc::collections::btree_map::{BTreeMap, Entry};
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, AddAssign, Neg, Sub, SubAssign};

use num_traits::{One, Signed};

use crate::index::Index;
use crate::poly::{Assignment, Monomial, PolyScalar, Substitution, Var};
use crate::Rational;

/// A finite linear combination of index symbols with [`PolyScalar`]
/// coefficients. Zero coefficients are pruned.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct Combination {
    terms: BTreeMap<Index, PolyScalar>,
}

impl Combination {
    pub fn zero() -> Self {
        Self::default()
    }

    /// `[∅]`, the unit of the harmonic product.
    pub fn unit() -> Self {
        Self::index(Index::empty())
    }

    pub fn index(k: Index) -> Self {
        Self::term(k, PolyScalar::one())
    }

    pub fn term(k: Index, c: PolyScalar) -> Self {
        let mut out = Self::zero();
        out.add_term(k, &c);
        out
    }

    pub fn from_terms(pairs: impl IntoIterator<Item = (Index, PolyScalar)>) -> Self {
        let mut out = Self::zero();
        for (k, c) in pairs {
            out.add_term(k, &c);
        }
        out
    }

    /// Builds a combination with integer coefficients.
    pub fn from_integer_terms(pairs: impl IntoIterator<Item = (Index, i64)>) -> Self {
        let mut out = Self::zero();
        for (k, n) in pairs {
            out.add_int(k, n);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Index, &PolyScalar)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (Index, PolyScalar)> {
        self.terms.into_iter()
    }

    pub fn coefficient(&self, k: &Index) -> PolyScalar {
        self.terms.get(k).cloned().unwrap_or_default()
    }

    /// The coefficient of `[∅]`.
    pub fn counit(&self) -> PolyScalar {
        self.coefficient(&Index::empty())
    }

    /// `Some(c)` if this is `c[∅]`.
    pub fn as_scalar(&self) -> Option<PolyScalar> {
        match self.terms.len() {
            0 => Some(PolyScalar::zero()),
            1 => self.terms.get(&Index::empty()).cloned(),
            _ => None,
        }
    }

    pub fn add_term(&mut self, k: Index, c: &PolyScalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(k) {
            Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// `self += n * c * [k]`.
    pub fn add_scaled_term(&mut self, k: Index, c: &PolyScalar, n: i64) {
        if n == 0 || c.is_zero() {
            return;
        }
        match self.terms.entry(k) {
            Entry::Vacant(e) => {
                e.insert(c.scale_int(n));
            }
            Entry::Occupied(mut e) => {
                e.get_mut().add_scaled_int(c, n);
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// `self += n * [k]`.
    pub fn add_int(&mut self, k: Index, n: i64) {
        self.add_scaled_term(k, &PolyScalar::one(), n);
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, other: &Combination, c: &PolyScalar) {
        if c.is_zero() {
            return;
        }
        if c.is_one() {
            *self += other;
            return;
        }
        for (k, p) in &other.terms {
            self.add_term(k.clone(), &(p * c));
        }
    }

    pub fn scale(&self, c: &PolyScalar) -> Combination {
        let mut out = Combination::zero();
        out.add_scaled(self, c);
        out
    }

    pub fn scale_rational(&self, q: &Rational) -> Combination {
        self.map_scalars(|p| p.scale(q))
    }

    pub fn scale_int(&self, n: i64) -> Combination {
        self.map_scalars(|p| p.scale_int(n))
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Combination {
        self.map_scalars(|p| p.mul_monomial(m))
    }

    /// Applies `f` to every coefficient, pruning zeros.
    pub fn map_scalars(&self, mut f: impl FnMut(&PolyScalar) -> PolyScalar) -> Combination {
        let mut out = Combination::zero();
        for (k, p) in &self.terms {
            let image = f(p);
            if !image.is_zero() {
                out.terms.insert(k.clone(), image);
            }
        }
        out
    }

    /// The linear extension of `f` on basis symbols.
    pub fn map_linear(&self, mut f: impl FnMut(&Index) -> Combination) -> Combination {
        let mut out = Combination::zero();
        for (k, p) in &self.terms {
            out.add_scaled(&f(k), p);
        }
        out
    }

    pub fn substitute(&self, images: &Substitution) -> Combination {
        self.map_scalars(|p| p.substitute(images))
    }

    pub fn specialize(&self, point: &Assignment) -> Combination {
        self.map_scalars(|p| p.specialize(point))
    }

    /// The largest weight among the indices present.
    pub fn max_weight(&self) -> u32 {
        self.terms.keys().map(Index::weight).max().unwrap_or(0)
    }

    /// Coefficients with numerator and denominator in integers, for
    /// pure-rational combinations.
    pub fn rational_terms(&self) -> Option<Vec<(Index, Rational)>> {
        self.terms.iter().map(|(k, p)| Some((k.clone(), p.as_constant()?))).collect()
    }
}

impl fmt::Debug for Combination {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

fn fmt_symbol(f: &mut fmt::Formatter<'_>, k: &Index) -> fmt::Result {
    if k.is_empty() {
        f.write_str("[\u{2205}]")
    } else {
        write!(f, "[{k}]")
    }
}

impl fmt::Display for Combination {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (k, p)) in self.terms.iter().enumerate() {
            match p.as_constant() {
                Some(q) => {
                    if q.is_negative() {
                        f.write_str("\u{2212}")?;
                    } else if i > 0 {
                        f.write_str("+")?;
                    }
                    let magnitude = q.abs();
                    if !magnitude.is_one() {
                        write!(f, "{magnitude}")?;
                    }
                }
                None => {
                    if i > 0 {
                        f.write_str("+")?;
                    }
                    write!(f, "({p})")?;
                }
            }
            fmt_symbol(f, k)?;
        }
        Ok(())
    }
}

impl AddAssign<&Combination> for Combination {
    fn add_assign(&mut self, rhs: &Combination) {
        for (k, p) in &rhs.terms {
            self.add_term(k.clone(), p);
        }
    }
}

impl SubAssign<&Combination> for Combination {
    fn sub_assign(&mut self, rhs: &Combination) {
        for (k, p) in &rhs.terms {
            self.add_scaled_term(k.clone(), p, -1);
        }
    }
}

impl Add for &Combination {
    type Output = Combination;
    fn add(self, rhs: &Combination) -> Combination {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &Combination {
    type Output = Combination;
    fn sub(self, rhs: &Combination) -> Combination {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Neg for &Combination {
    type Output = Combination;
    fn neg(self) -> Combination {
        self.scale_int(-1)
    }
}

impl Neg for Combination {
    type Output = Combination;
    fn neg(self) -> Combination {
        -&self
    }
}

/// Harmonic product of two index symbols as integer multiplicities, sorted
/// by index.
pub type Product = Arc<Vec<(Index, i64)>>;

/// Evaluation context for the algebra: owns the product and anti-hook
/// memo tables. Each worker thread should own its own instance.
#[derive(Default)]
pub struct IndexAlgebra {
    products: BTreeMap<(Index, Index), Product>,
    pub(crate) antihooks: BTreeMap<(Index, Index, u32), Combination>,
}

impl IndexAlgebra {
    pub fn new() -> Self {
        Self::default()
    }

    /// Number of memoized index pairs.
    pub fn memo_len(&self) -> usize {
        self.products.len()
    }

    /// `[k] * [l]`.
    pub fn product_indices(&mut self, k: &Index, l: &Index) -> Product {
        if k.is_empty() {
            return Arc::new(vec![(l.clone(), 1)]);
        }
        if l.is_empty() {
            return Arc::new(vec![(k.clone(), 1)]);
        }
        let key = if k <= l { (k.clone(), l.clone()) } else { (l.clone(), k.clone()) };
        if let Some(p) = self.products.get(&key) {
            return p.clone();
        }
        let p = Arc::new(stuffle(key.0.parts(), key.1.parts()));
        self.products.insert(key, p.clone());
        p
    }

    pub fn mul(&mut self, u: &Combination, v: &Combination) -> Combination {
        if u.is_zero() || v.is_zero() {
            return Combination::zero();
        }
        if let Some(c) = u.as_scalar() {
            return v.scale(&c);
        }
        if let Some(c) = v.as_scalar() {
            return u.scale(&c);
        }
        let mut out = Combination::zero();
        for (k, p) in u.terms() {
            for (l, q) in v.terms() {
                let c = p * q;
                for (m, n) in self.product_indices(k, l).iter() {
                    out.add_scaled_term(m.clone(), &c, *n);
                }
            }
        }
        out
    }

    /// `[k] * [l]` as a combination.
    pub fn harmonic(&mut self, k: &Index, l: &Index) -> Combination {
        Combination::from_integer_terms(self.product_indices(k, l).iter().cloned())
    }

    /// Product in `𝓘 ⊗ 𝓘`, componentwise.
    pub fn mul_tensor(&mut self, s: &Tensor, t: &Tensor) -> Tensor {
        let mut out = Tensor::zero();
        for ((k1, k2), p) in s.terms() {
            for ((l1, l2), q) in t.terms() {
                let c = p * q;
                let left = self.product_indices(k1, l1);
                let right = self.product_indices(k2, l2);
                for (m1, n1) in left.iter() {
                    for (m2, n2) in right.iter() {
                        out.add_scaled((m1.clone(), m2.clone()), &c, n1 * n2);
                    }
                }
            }
        }
        out
    }

    /// `∑_i (−1)^{r−i} [k_i] * [←(k^i)]^★`.
    pub fn telescoping_sum(&mut self, k: &Index) -> Combination {
        let r = k.depth();
        let mut out = Combination::zero();
        for i in 0..=r {
            let left = Combination::index(k.prefix(i));
            let right = star(&k.suffix(i).reversed());
            let sign = if (r - i) % 2 == 0 { 1 } else { -1 };
            out += &self.mul(&left, &right).scale_int(sign);
        }
        out
    }

    /// `[k]_{x,y} = ∑_i [k_i] * [←(k^i)] x^{|k_i|} y^{|k^i|}`.
    pub fn lift_xy(&mut self, k: &Index) -> Combination {
        self.lift_with(k, false)
    }

    /// `[k]^★_{x,y}`, star on both factors.
    pub fn lift_xy_star(&mut self, k: &Index) -> Combination {
        self.lift_with(k, true)
    }

    fn lift_with(&mut self, k: &Index, starred: bool) -> Combination {
        let mut out = Combination::zero();
        for i in 0..=k.depth() {
            let head = k.prefix(i);
            let tail = k.suffix(i);
            let monomial = Monomial::new(head.weight() as u16, tail.weight() as u16, 0, 0);
            let tail = tail.reversed();
            let product = if starred {
                self.mul(&star(&head), &star(&tail))
            } else {
                self.harmonic(&head, &tail)
            };
            out += &product.mul_monomial(&monomial);
        }
        out
    }

    /// Linear extension of [`IndexAlgebra::lift_xy`].
    pub fn lift_xy_linear(&mut self, u: &Combination) -> Combination {
        u.map_linear(|k| self.lift_xy(k))
    }
}

/// Stuffle of two index part sequences by dynamic programming over
/// prefixes.
fn stuffle(k: &[u32], l: &[u32]) -> Vec<(Index, i64)> {
    let (r, s) = (k.len(), l.len());
    let mut table: Vec<Vec<BTreeMap<Vec<u32>, i64>>> = vec![vec![BTreeMap::new(); s + 1]; r + 1];
    for i in 0..=r {
        table[i][0].insert(k[..i].to_vec(), 1);
    }
    for j in 1..=s {
        table[0][j].insert(l[..j].to_vec(), 1);
    }
    for i in 1..=r {
        for j in 1..=s {
            let mut cell = BTreeMap::new();
            let sources = [(i, j - 1, l[j - 1]), (i - 1, j, k[i - 1]), (i - 1, j - 1, k[i - 1] + l[j - 1])];
            for (a, b, last) in sources {
                for (word, n) in &table[a][b] {
                    let mut w = word.clone();
                    w.push(last);
                    *cell.entry(w).or_insert(0) += n;
                }
            }
            table[i][j] = cell;
        }
    }
    core::mem::take(&mut table[r][s])
        .into_iter()
        .map(|(w, n)| (Index::from_parts(w), n))
        .collect()
}

/// `[k]^★`: every separator replaced by `+` or `,`.
pub fn star(k: &Index) -> Combination {
    let parts = k.parts();
    if parts.len() <= 1 {
        return Combination::index(k.clone());
    }
    let separators = parts.len() - 1;
    let mut out = Combination::zero();
    for mask in 0u64..(1u64 << separators) {
        let mut merged = Vec::with_capacity(parts.len());
        let mut current = parts[0];
        for (bit, &p) in parts[1..].iter().enumerate() {
            if mask >> bit & 1 == 1 {
                current += p;
            } else {
                merged.push(current);
                current = p;
            }
        }
        merged.push(current);
        out.add_int(Index::from_parts(merged), 1);
    }
    out
}

/// Linear extension of [`star`].
pub fn star_linear(u: &Combination) -> Combination {
    u.map_linear(star)
}

fn sign(depth: usize) -> i64 {
    if depth % 2 == 0 {
        1
    } else {
        -1
    }
}

/// `S([k]) = (−1)^r [←k]^★`, extended linearly.
pub fn antipode(u: &Combination) -> Combination {
    u.map_linear(|k| star(&k.reversed()).scale_int(sign(k.depth())))
}

/// `S̃([k]) = (−1)^r [k]^★`, extended linearly.
pub fn antipode_tilde(u: &Combination) -> Combination {
    u.map_linear(|k| star(k).scale_int(sign(k.depth())))
}

/// An element of `𝓘 ⊗ 𝓘`.
#[derive(Clone, Default, PartialEq, Eq, Debug)]
pub struct Tensor {
    terms: BTreeMap<(Index, Index), PolyScalar>,
}

impl Tensor {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Index, Index), &PolyScalar)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, k: &Index, l: &Index) -> PolyScalar {
        self.terms.get(&(k.clone(), l.clone())).cloned().unwrap_or_default()
    }

    pub fn add_scaled(&mut self, key: (Index, Index), c: &PolyScalar, n: i64) {
        if n == 0 || c.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            Entry::Vacant(e) => {
                e.insert(c.scale_int(n));
            }
            Entry::Occupied(mut e) => {
                e.get_mut().add_scaled_int(c, n);
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// Applies linear maps on each side.
    pub fn map_sides(
        &self,
        mut left: impl FnMut(&Index) -> Combination,
        mut right: impl FnMut(&Index) -> Combination,
    ) -> Tensor {
        let mut out = Tensor::zero();
        for ((k, l), p) in &self.terms {
            let lk = left(k);
            let rl = right(l);
            for (m1, c1) in lk.terms() {
                for (m2, c2) in rl.terms() {
                    out.add_scaled((m1.clone(), m2.clone()), &(&(p * c1) * c2), 1);
                }
            }
        }
        out
    }

    /// `m(u ⊗ v) = u * v`.
    pub fn multiply(&self, alg: &mut IndexAlgebra) -> Combination {
        let mut out = Combination::zero();
        for ((k, l), p) in &self.terms {
            for (m, n) in alg.product_indices(k, l).iter() {
                out.add_scaled_term(m.clone(), p, *n);
            }
        }
        out
    }
}

/// Deconcatenation `[k] ↦ ∑_i [k_i] ⊗ [k^i]`, extended linearly.
pub fn coproduct(u: &Combination) -> Tensor {
    let mut out = Tensor::zero();
    for (k, p) in u.terms() {
        for i in 0..=k.depth() {
            out.add_scaled((k.prefix(i), k.suffix(i)), p, 1);
        }
    }
    out
}

/// `(Δ ⊗ id)Δ` and `(id ⊗ Δ)Δ` agree; both are returned as maps on
/// index triples for comparison.
pub fn coassociativity_sides(
    u: &Combination,
) -> (BTreeMap<(Index, Index, Index), PolyScalar>, BTreeMap<(Index, Index, Index), PolyScalar>) {
    let mut left = BTreeMap::new();
    let mut right = BTreeMap::new();
    let insert = |map: &mut BTreeMap<(Index, Index, Index), PolyScalar>, key, p: &PolyScalar| {
        let slot: &mut PolyScalar = map.entry(key).or_default();
        *slot += p;
    };
    for ((a, b), p) in coproduct(u).terms() {
        for i in 0..=a.depth() {
            insert(&mut left, (a.prefix(i), a.suffix(i), b.clone()), p);
        }
        for j in 0..=b.depth() {
            insert(&mut right, (a.clone(), b.prefix(j), b.suffix(j)), p);
        }
    }
    left.retain(|_, p| !p.is_zero());
    right.retain(|_, p| !p.is_zero());
    (left, right)
}

/// Free-standing harmonic product using a throwaway context.
pub fn harmonic_product(u: &Combination, v: &Combination) -> Combination {
    IndexAlgebra::new().mul(u, v)
}

/// The `(x, y) ↦ (1, 0)` specialization helper.
pub fn at_one_zero() -> Assignment {
    Assignment::new()
        .with(Var::X, Rational::one())
        .with(Var::Y, Rational::from_integer(0.into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::index::{enumerate_indices, enumerate_up_to};
    use alloc::string::ToString;
    use proptest::prelude::*;

    fn idx(parts: &[u32]) -> Index {
        Index::new(parts.to_vec()).unwrap()
    }

    fn ints(pairs: &[(&[u32], i64)]) -> Combination {
        Combination::from_integer_terms(pairs.iter().map(|(p, n)| (idx(p), *n)))
    }

    /// Independent oracle: the recursive rule applied literally.
    fn stuffle_rule(k: &[u32], l: &[u32]) -> BTreeMap<Vec<u32>, i64> {
        let mut out = BTreeMap::new();
        if k.is_empty() || l.is_empty() {
            out.insert([k, l].concat(), 1);
            return out;
        }
        let (kk, kl) = (&k[..k.len() - 1], k[k.len() - 1]);
        let (lk, ll) = (&l[..l.len() - 1], l[l.len() - 1]);
        for (sub, last) in [(stuffle_rule(k, lk), ll), (stuffle_rule(kk, l), kl), (stuffle_rule(kk, lk), kl + ll)] {
            for (mut w, n) in sub {
                w.push(last);
                *out.entry(w).or_insert(0) += n;
            }
        }
        out
    }

    #[test]
    fn harmonic_examples() {
        let mut alg = IndexAlgebra::new();
        let p = alg.harmonic(&idx(&[2]), &idx(&[3]));
        assert_eq!(p, ints(&[(&[2, 3], 1), (&[3, 2], 1), (&[5], 1)]));
        assert_eq!(p.to_string(), "[2,3]+[3,2]+[5]");
        let k = idx(&[2, 1, 3]);
        assert_eq!(alg.harmonic(&k, &Index::empty()), Combination::index(k.clone()));
        assert_eq!(alg.harmonic(&idx(&[1]), &idx(&[1])), ints(&[(&[1, 1], 2), (&[2], 1)]));
    }

    #[test]
    fn stuffle_matches_rule() {
        for k in enumerate_up_to(5) {
            for l in enumerate_up_to(4) {
                let dp: BTreeMap<Vec<u32>, i64> =
                    stuffle(k.parts(), l.parts()).into_iter().map(|(i, n)| (i.parts().to_vec(), n)).collect();
                assert_eq!(dp, stuffle_rule(k.parts(), l.parts()), "{k:?} * {l:?}");
            }
        }
    }

    #[test]
    fn star_examples() {
        assert_eq!(star(&idx(&[4, 7])), ints(&[(&[4, 7], 1), (&[11], 1)]));
        assert_eq!(star(&Index::empty()), Combination::unit());
        assert_eq!(
            star(&idx(&[1, 1, 1])),
            ints(&[(&[1, 1, 1], 1), (&[2, 1], 1), (&[1, 2], 1), (&[3], 1)])
        );
        for w in 1..=8 {
            for k in enumerate_indices(w) {
                assert_eq!(star(&k).len(), 1 << (k.depth() - 1));
            }
        }
    }

    #[test]
    fn coproduct_examples() {
        let d = coproduct(&Combination::index(idx(&[2, 3])));
        assert_eq!(d.len(), 3);
        assert!(d.coefficient(&Index::empty(), &idx(&[2, 3])).is_one());
        assert!(d.coefficient(&idx(&[2]), &idx(&[3])).is_one());
        assert!(d.coefficient(&idx(&[2, 3]), &Index::empty()).is_one());
        let e = coproduct(&Combination::unit());
        assert_eq!(e.len(), 1);
        assert!(e.coefficient(&Index::empty(), &Index::empty()).is_one());

        let mut alg = IndexAlgebra::new();
        let one = Combination::index(idx(&[1]));
        let lhs = coproduct(&alg.mul(&one, &one));
        let d1 = coproduct(&one);
        assert_eq!(lhs, alg.mul_tensor(&d1, &d1));
    }

    #[test]
    fn antipode_examples() {
        assert_eq!(antipode(&Combination::unit()), Combination::unit());
        assert_eq!(antipode_tilde(&Combination::unit()), Combination::unit());
        for k in 1..6 {
            let single = Combination::index(Index::single(k));
            assert_eq!(antipode(&single), -&single);
            assert_eq!(antipode_tilde(&single), -&single);
        }
        let k = Combination::index(idx(&[2, 3]));
        assert_eq!(antipode(&k), ints(&[(&[3, 2], 1), (&[5], 1)]));
        assert_eq!(antipode_tilde(&k), ints(&[(&[2, 3], 1), (&[5], 1)]));
    }

    #[test]
    fn telescoping_examples() {
        let mut alg = IndexAlgebra::new();
        assert_eq!(alg.telescoping_sum(&Index::empty()), Combination::unit());
        assert!(alg.telescoping_sum(&idx(&[2])).is_zero());
        assert!(alg.telescoping_sum(&idx(&[1, 2])).is_zero());
    }

    #[test]
    fn lift_examples() {
        let mut alg = IndexAlgebra::new();
        let x = PolyScalar::var(Var::X);
        let y = PolyScalar::var(Var::Y);
        for k in 1..5u32 {
            let expected = Combination::term(Index::single(k), &x.pow(k) + &y.pow(k));
            assert_eq!(alg.lift_xy(&Index::single(k)), expected);
        }
        assert_eq!(alg.lift_xy(&Index::empty()), Combination::unit());

        let (k1, k2) = (2u32, 5u32);
        let mut expected = Combination::zero();
        expected.add_term(idx(&[k2, k1]), &y.pow(k1 + k2));
        let mixed = &x.pow(k1) * &y.pow(k2);
        for parts in [vec![k1, k2], vec![k2, k1], vec![k1 + k2]] {
            expected.add_term(Index::new(parts).unwrap(), &mixed);
        }
        expected.add_term(idx(&[k1, k2]), &x.pow(k1 + k2));
        assert_eq!(alg.lift_xy(&idx(&[k1, k2])), expected);
    }

    #[test]
    fn display_forms() {
        let mut u = ints(&[(&[], 1), (&[2], -3)]);
        assert_eq!(u.to_string(), "[\u{2205}]\u{2212}3[2]");
        u.add_term(idx(&[4]), &PolyScalar::var(Var::A));
        assert_eq!(u.to_string(), "[\u{2205}]\u{2212}3[2]+(A)[4]");
        assert_eq!(Combination::zero().to_string(), "0");
    }

    fn small_index() -> impl Strategy<Value = Index> {
        proptest::collection::vec(1u32..4, 0..4).prop_map(|p| Index::new(p).unwrap())
    }

    proptest! {
        #[test]
        fn product_commutes(k in small_index(), l in small_index()) {
            let mut alg = IndexAlgebra::new();
            prop_assert_eq!(alg.harmonic(&k, &l), alg.harmonic(&l, &k));
            let total: i64 = alg.product_indices(&k, &l).iter().map(|(_, n)| n).sum();
            prop_assert!(total >= 1);
        }

        #[test]
        fn product_preserves_weight(k in small_index(), l in small_index()) {
            let mut alg = IndexAlgebra::new();
            let w = k.weight() + l.weight();
            prop_assert!(alg.harmonic(&k, &l).terms().all(|(m, _)| m.weight() == w));
        }

        #[test]
        fn tilde_is_involution(k in small_index()) {
            let u = Combination::index(k);
            prop_assert_eq!(antipode_tilde(&antipode_tilde(&u)), u.clone());
            prop_assert_eq!(antipode(&antipode(&u)), u);
        }

        #[test]
        fn lift_specializes(k in small_index()) {
            let mut alg = IndexAlgebra::new();
            let point = at_one_zero();
            prop_assert_eq!(alg.lift_xy(&k).specialize(&point), Combination::index(k.clone()));
            prop_assert_eq!(alg.lift_xy_star(&k).specialize(&point), star(&k));
        }
    }
}
