//! Generators, free-algebra words, and exact linear combinations.
//!
//! `osp(1|2n)` has odd generators `s(a)` for `1 <= a <= 2n` and even
//! generators `s(a,b) = s(b,a)`. An [`Element`] is a finitely supported
//! map from words to rationals over a fixed `n`; no relations are applied
//! here — that is the job of the rewrite engine.
//!
//! Index convention: indices are 1-based and the conjugate of `a <= n` is
//! `a + n` (written `ā`).

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use crate::error::AlgebraError;
use crate::scalar::{int, rat, Rat};

/// A single Cartan–Weyl generator.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Generator {
    /// Fermionic `s(a)`, `1 <= a <= 2n`.
    Odd(u32),
    /// Bosonic `s(a,b)` stored with `a <= b`.
    Even(u32, u32),
}

impl Generator {
    pub fn odd(a: u32) -> Self {
        Generator::Odd(a)
    }

    /// Builds `s(a,b)`, canonicalizing the index order (`s(b,a)` is the
    /// same generator).
    pub fn even(a: u32, b: u32) -> Self {
        Generator::Even(a.min(b), a.max(b))
    }

    pub fn parity(self) -> u8 {
        match self {
            Generator::Odd(_) => 1,
            Generator::Even(_, _) => 0,
        }
    }

    pub fn is_odd(self) -> bool {
        matches!(self, Generator::Odd(_))
    }

    pub fn validate(self, n: u32) -> Result<(), AlgebraError> {
        let max = 2 * n;
        let bad = |index| AlgebraError::IndexOutOfRange { index, n, max };
        match self {
            Generator::Odd(a) => {
                if a == 0 || a > max {
                    return Err(bad(a));
                }
            }
            Generator::Even(a, b) => {
                if a == 0 || a > max {
                    return Err(bad(a));
                }
                if b == 0 || b > max {
                    return Err(bad(b));
                }
            }
        }
        Ok(())
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::Odd(a) => write!(f, "s({a})"),
            Generator::Even(a, b) => write!(f, "s({a},{b})"),
        }
    }
}

/// The symplectic metric `g_{ab}` of the block form `[[0, -I_n], [I_n, 0]]`.
pub fn metric(n: u32, a: u32, b: u32) -> Result<Rat, AlgebraError> {
    let max = 2 * n;
    for index in [a, b] {
        if index == 0 || index > max {
            return Err(AlgebraError::IndexOutOfRange { index, n, max });
        }
    }
    Ok(int(metric_sign(n, a, b)))
}

/// `g_{ab}` as a machine integer for validated indices.
pub(crate) fn metric_sign(n: u32, a: u32, b: u32) -> i64 {
    debug_assert!(a >= 1 && a <= 2 * n && b >= 1 && b <= 2 * n);
    if a <= n && b == a + n {
        -1
    } else if b <= n && a == b + n {
        1
    } else {
        0
    }
}

/// An ordered product of generators; the empty word is the unit.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Word(pub Vec<Generator>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn single(g: Generator) -> Self {
        Word(vec![g])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn parity(&self) -> u8 {
        (self.0.iter().map(|g| g.parity() as u32).sum::<u32>() % 2) as u8
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// Number of odd letters.
    pub fn odd_degree(&self) -> usize {
        self.0.iter().filter(|g| g.is_odd()).count()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.0.iter().map(|g| g.to_string()).collect();
        write!(f, "{}", parts.join("*"))
    }
}

/// A finitely supported rational linear combination of words over a fixed
/// `n`. Zero coefficients are never stored, so structural equality is
/// algebra equality of free elements.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Element {
    n: u32,
    terms: BTreeMap<Word, Rat>,
}

impl Element {
    pub fn zero(n: u32) -> Self {
        Element {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn unit(n: u32) -> Self {
        Element::scalar(n, int(1))
    }

    pub fn scalar(n: u32, c: Rat) -> Self {
        let mut e = Element::zero(n);
        e.add_term(Word::empty(), c);
        e
    }

    pub fn generator(n: u32, g: Generator) -> Result<Self, AlgebraError> {
        g.validate(n)?;
        let mut e = Element::zero(n);
        e.add_term(Word::single(g), int(1));
        Ok(e)
    }

    pub fn from_word(n: u32, gens: Vec<Generator>) -> Result<Self, AlgebraError> {
        for g in &gens {
            g.validate(n)?;
        }
        let mut e = Element::zero(n);
        e.add_term(Word(gens), int(1));
        Ok(e)
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Rat)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, w: &Word) -> Rat {
        self.terms.get(w).cloned().unwrap_or_else(Rat::zero)
    }

    /// Adds `c * w`, dropping the entry if the total cancels to zero.
    pub fn add_term(&mut self, w: Word, c: Rat) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(w);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add_assign(&mut self, other: &Element) {
        assert_eq!(self.n, other.n, "mismatched n: {} vs {}", self.n, other.n);
        for (w, c) in &other.terms {
            self.add_term(w.clone(), c.clone());
        }
    }

    pub fn scale(&self, c: &Rat) -> Element {
        if c.is_zero() {
            return Element::zero(self.n);
        }
        let mut out = Element::zero(self.n);
        for (w, x) in &self.terms {
            out.terms.insert(w.clone(), x * c);
        }
        out
    }

    /// `Some(parity)` if every word has the same parity (zero counts as
    /// even), `None` for genuinely mixed elements.
    pub fn parity(&self) -> Option<u8> {
        let mut it = self.terms.keys();
        let first = match it.next() {
            None => return Some(0),
            Some(w) => w.parity(),
        };
        for w in it {
            if w.parity() != first {
                return None;
            }
        }
        Some(first)
    }

    pub fn even_part(&self) -> Element {
        self.parity_part(0)
    }

    pub fn odd_part(&self) -> Element {
        self.parity_part(1)
    }

    fn parity_part(&self, p: u8) -> Element {
        let mut out = Element::zero(self.n);
        for (w, c) in &self.terms {
            if w.parity() == p {
                out.terms.insert(w.clone(), c.clone());
            }
        }
        out
    }

    /// Largest odd-letter count over the support (0 for scalars and zero).
    pub fn max_odd_degree(&self) -> usize {
        self.terms.keys().map(|w| w.odd_degree()).max().unwrap_or(0)
    }

    /// `Some(c)` if the element is the scalar `c` (possibly zero).
    pub fn as_scalar(&self) -> Option<Rat> {
        match self.terms.len() {
            0 => Some(Rat::zero()),
            1 => {
                let (w, c) = self.terms.iter().next().unwrap();
                if w.is_empty() {
                    Some(c.clone())
                } else {
                    None
                }
            }
            _ => None,
        }
    }

    pub fn pow(&self, k: u32) -> Element {
        let mut acc = Element::unit(self.n);
        for _ in 0..k {
            acc = multiply(&acc, self);
        }
        acc
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (w, c) in &self.terms {
            let (sign, mag) = if crate::scalar::is_negative(c) {
                ("-", -c.clone())
            } else {
                ("+", c.clone())
            };
            if first {
                if sign == "-" {
                    // A leading negative coefficient is printed as an
                    // explicit rational factor so the output reparses.
                    write!(f, "{}", -mag.clone())?;
                    if !w.is_empty() {
                        write!(f, " * {w}")?;
                    }
                    first = false;
                    continue;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            if w.is_empty() {
                write!(f, "{mag}")?;
            } else if mag == int(1) {
                write!(f, "{w}")?;
            } else {
                write!(f, "{mag} * {w}")?;
            }
            first = false;
        }
        Ok(())
    }
}

impl std::ops::Add for &Element {
    type Output = Element;
    fn add(self, rhs: &Element) -> Element {
        let mut out = self.clone();
        out.add_assign(rhs);
        out
    }
}

impl std::ops::Sub for &Element {
    type Output = Element;
    fn sub(self, rhs: &Element) -> Element {
        let mut out = self.clone();
        out.add_assign(&rhs.scale(&int(-1)));
        out
    }
}

impl std::ops::Neg for &Element {
    type Output = Element;
    fn neg(self) -> Element {
        self.scale(&int(-1))
    }
}

impl std::ops::Mul for &Element {
    type Output = Element;
    fn mul(self, rhs: &Element) -> Element {
        multiply(self, rhs)
    }
}

/// Free-algebra product: bilinear extension of word concatenation. No
/// relations are applied.
pub fn multiply(x: &Element, y: &Element) -> Element {
    assert_eq!(x.n, y.n, "mismatched n: {} vs {}", x.n, y.n);
    let mut out = Element::zero(x.n);
    for (wx, cx) in &x.terms {
        for (wy, cy) in &y.terms {
            out.add_term(wx.concat(wy), cx * cy);
        }
    }
    out
}

/// `x*y - (-1)^(p(x)p(y)) y*x` as an unreduced element. Both arguments
/// must be parity-homogeneous.
pub fn graded_commutator(x: &Element, y: &Element) -> Result<Element, AlgebraError> {
    let px = x.parity().ok_or(AlgebraError::NonHomogeneous)?;
    let py = y.parity().ok_or(AlgebraError::NonHomogeneous)?;
    let sign = if px == 1 && py == 1 { int(1) } else { int(-1) };
    let xy = multiply(x, y);
    let yx = multiply(y, x);
    Ok(&xy + &yx.scale(&sign))
}

/// Convenience: `s(a)` as an element (panics on bad index).
pub fn gen_odd(n: u32, a: u32) -> Element {
    Element::generator(n, Generator::odd(a)).unwrap()
}

/// Convenience: `s(a,b)` as an element (panics on bad index).
pub fn gen_even(n: u32, a: u32, b: u32) -> Element {
    Element::generator(n, Generator::even(a, b)).unwrap()
}

/// All generators of `osp(1|2n)`: `2n` odd and `n(2n+1)` even ones.
pub fn all_generators(n: u32) -> Vec<Generator> {
    let mut out = Vec::new();
    for a in 1..=2 * n {
        for b in a..=2 * n {
            out.push(Generator::even(a, b));
        }
    }
    for a in 1..=2 * n {
        out.push(Generator::odd(a));
    }
    out
}

/// Convenience constructor used in tests: `c * w` with `c = p/q`.
pub fn term(n: u32, p: i64, q: i64, gens: &[Generator]) -> Element {
    let mut e = Element::zero(n);
    for g in gens {
        g.validate(n).unwrap();
    }
    e.add_term(Word(gens.to_vec()), rat(p, q));
    e
}
