//! The bosonic-oscillator quotient: a second normal-form engine in which
//! the odd generators become Weyl-algebra variables.
//!
//! The quotient imposes `[s(a), s(b)] = -g_ab/2` on top of the defining
//! relations. Combined with `{s(a),s(b)} = s(a,b)` this eliminates every
//! even generator (`s(a,b) = 2 s(a)s(b) + g_ab/2`) and sorts odd letters
//! with `s(b)s(a) = s(a)s(b) + g_ab/2` for `a < b`. With the metric of
//! this crate, `-g_ab/2` is the unique commutator sign under which the
//! closed-form values of the pair aggregates and the vanishing of the
//! Scasimir hold.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use crate::algebra::{metric_sign, Element, Generator};
use crate::error::AlgebraError;
use crate::omega::omega_expand;
use crate::report::Report;
use crate::scalar::{fact, int, pow2, rat, Rat};
use crate::scasimir::{a_poly, coeffs, scasimir_pbw};

/// Element of the oscillator quotient: a combination of weakly increasing
/// odd-generator words (repetitions survive — this is a Weyl algebra, not
/// an exterior one).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WeylElement {
    n: u32,
    terms: BTreeMap<Vec<u32>, Rat>,
}

impl WeylElement {
    pub fn zero(n: u32) -> Self {
        WeylElement {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn scalar(n: u32, c: Rat) -> Self {
        let mut e = WeylElement::zero(n);
        e.add_term(Vec::new(), c);
        e
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Rat)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, word: &[u32]) -> Rat {
        self.terms.get(word).cloned().unwrap_or_else(Rat::zero)
    }

    /// `Some(c)` when the element is the constant `c`.
    pub fn as_scalar(&self) -> Option<Rat> {
        match self.terms.len() {
            0 => Some(Rat::zero()),
            1 => {
                let (w, c) = self.terms.iter().next().unwrap();
                w.is_empty().then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn add_term(&mut self, word: Vec<u32>, c: Rat) {
        debug_assert!(word.windows(2).all(|p| p[0] <= p[1]), "unsorted Weyl word");
        if c.is_zero() {
            return;
        }
        match self.terms.entry(word) {
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

    pub fn add_assign(&mut self, other: &WeylElement) {
        assert_eq!(self.n, other.n, "mismatched n");
        for (w, c) in &other.terms {
            self.add_term(w.clone(), c.clone());
        }
    }

    pub fn scale(&self, c: &Rat) -> WeylElement {
        if c.is_zero() {
            return WeylElement::zero(self.n);
        }
        let mut out = WeylElement::zero(self.n);
        for (w, x) in &self.terms {
            out.terms.insert(w.clone(), x * c);
        }
        out
    }
}

impl std::ops::Sub for &WeylElement {
    type Output = WeylElement;
    fn sub(self, rhs: &WeylElement) -> WeylElement {
        let mut out = self.clone();
        out.add_assign(&rhs.scale(&int(-1)));
        out
    }
}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rendered = crate::scalar::join_signed_terms(self.terms.iter().map(|(w, c)| {
            let word: Vec<String> = w.iter().map(|a| format!("s({a})")).collect();
            (c, word.join("*"))
        }));
        write!(f, "{rendered}")
    }
}

/// Sorts an unreduced odd word into the quotient's normal form:
/// adjacent `s(b)s(a)` with `b > a` becomes `s(a)s(b) + (g_ab/2)·rest`.
fn sort_odd_word(n: u32, word: &[u32], coeff: &Rat, out: &mut WeylElement) {
    let mut stack: Vec<(Rat, Vec<u32>)> = vec![(coeff.clone(), word.to_vec())];
    while let Some((c, w)) = stack.pop() {
        match w.windows(2).position(|p| p[0] > p[1]) {
            None => out.add_term(w, c),
            Some(i) => {
                let (b, a) = (w[i], w[i + 1]);
                let mut swapped = w.clone();
                swapped.swap(i, i + 1);
                stack.push((c.clone(), swapped));
                let g = metric_sign(n, a, b);
                if g != 0 {
                    let mut shorter = w.clone();
                    shorter.drain(i..i + 2);
                    stack.push((c * rat(g, 2), shorter));
                }
            }
        }
    }
}

/// Product of two reduced Weyl elements.
pub fn weyl_multiply(x: &WeylElement, y: &WeylElement) -> WeylElement {
    assert_eq!(x.n(), y.n(), "mismatched n");
    let mut out = WeylElement::zero(x.n());
    for (wx, cx) in x.terms() {
        for (wy, cy) in y.terms() {
            let mut concat = wx.clone();
            concat.extend_from_slice(wy);
            sort_odd_word(x.n(), &concat, &(cx * cy), &mut out);
        }
    }
    out
}

/// Algebra map onto the oscillator quotient: every even generator is
/// replaced by `2 s(a)s(b) + g_ab/2` and odd letters are sorted weakly
/// ascending under the quotient commutator. Multiplicative:
/// `weyl_reduce(xy) = weyl_reduce(x)·weyl_reduce(y)`.
pub fn weyl_reduce(x: &Element) -> WeylElement {
    let n = x.n();
    let mut out = WeylElement::zero(n);
    for (word, c) in x.terms() {
        let mut acc = WeylElement::scalar(n, c.clone());
        for g in &word.0 {
            let letter = match *g {
                Generator::Odd(a) => {
                    let mut e = WeylElement::zero(n);
                    e.add_term(vec![a], int(1));
                    e
                }
                Generator::Even(a, b) => {
                    let mut e = WeylElement::zero(n);
                    sort_odd_word(n, &[a, b], &int(2), &mut e);
                    e.add_term(Vec::new(), rat(metric_sign(n, a, b), 2));
                    e
                }
            };
            acc = weyl_multiply(&acc, &letter);
        }
        out.add_assign(&acc);
    }
    out
}

/// Closed-form value of the pair aggregate `A_(2k)` (k conjugate pairs
/// kept) in the quotient; must equal `2^(-k) n!/(n-k)!`.
pub fn a_value(n: u32, k: u32) -> Result<Rat, AlgebraError> {
    if k > n {
        return Err(AlgebraError::CoeffIndexOutOfRange { k, n });
    }
    // a_poly counts deleted pairs, so k pairs kept = n - k deleted.
    let aggregate = a_poly(n, n - k)?;
    let reduced = weyl_reduce(&omega_expand(&aggregate));
    match reduced.as_scalar() {
        Some(c) => Ok(c),
        None => panic!("pair aggregate did not reduce to a constant: {reduced}"),
    }
}

/// `weyl_reduce(Sc) = 0` exactly.
pub fn verify_vanishing(n: u32) -> Report {
    Report::run(&format!("oscillator vanishing n={n}"), |c| {
        let reduced = weyl_reduce(&scasimir_pbw(n));
        c.check(reduced.is_zero(), || {
            format!("Scasimir image in the oscillator quotient is {reduced}")
        });
    })
}

/// Full oscillator sweep: the quotient respects the defining relations,
/// the pair aggregates take their closed-form values, the Scasimir image
/// vanishes, and that vanishing agrees with the coefficient sum rule.
pub fn verify_oscillator(n: u32) -> Report {
    Report::run(&format!("oscillator n={n}"), |c| {
        // The images of the generators satisfy the original relations.
        let odd: Vec<u32> = (1..=2 * n).collect();
        for &a in &odd {
            for &b in &odd {
                let sa = crate::algebra::gen_odd(n, a);
                let sb = crate::algebra::gen_odd(n, b);
                let sab = crate::algebra::gen_even(n, a, b);
                let anti = &crate::algebra::multiply(&sa, &sb) + &crate::algebra::multiply(&sb, &sa);
                let lhs = weyl_reduce(&anti);
                let rhs = weyl_reduce(&sab);
                c.check(lhs == rhs, || {
                    format!("quotient breaks {{s({a}),s({b})}} = s({a},{b})")
                });
                for cc in 1..=2 * n {
                    let sbc = crate::algebra::gen_even(n, b, cc);
                    let comm = &crate::algebra::multiply(&sa, &sbc)
                        - &crate::algebra::multiply(&sbc, &sa);
                    let mut rhs = crate::algebra::Element::zero(n);
                    rhs.add_assign(
                        &crate::algebra::gen_odd(n, cc).scale(&int(-metric_sign(n, a, b))),
                    );
                    rhs.add_assign(
                        &crate::algebra::gen_odd(n, b).scale(&int(-metric_sign(n, a, cc))),
                    );
                    c.check(weyl_reduce(&comm) == weyl_reduce(&rhs), || {
                        format!("quotient breaks [s({a}), s({b},{cc})]")
                    });
                }
            }
        }
        let evens: Vec<(u32, u32)> = {
            let mut v = Vec::new();
            for a in 1..=2 * n {
                for b in a..=2 * n {
                    v.push((a, b));
                }
            }
            v
        };
        for &(a, b) in &evens {
            for &(d, e) in &evens {
                let sab = crate::algebra::gen_even(n, a, b);
                let sde = crate::algebra::gen_even(n, d, e);
                let comm =
                    &crate::algebra::multiply(&sab, &sde) - &crate::algebra::multiply(&sde, &sab);
                let mut rhs = crate::algebra::Element::zero(n);
                for (p, q, r, s) in [(a, d, b, e), (a, e, b, d), (b, d, a, e), (b, e, a, d)] {
                    rhs.add_assign(
                        &crate::algebra::gen_even(n, r, s).scale(&int(-metric_sign(n, p, q))),
                    );
                }
                c.check(weyl_reduce(&comm) == weyl_reduce(&rhs), || {
                    format!("quotient breaks [s({a},{b}), s({d},{e})]")
                });
            }
        }

        // Closed-form A-values.
        for k in 0..=n {
            let got = a_value(n, k).unwrap();
            let expected =
                pow2(-i64::from(k)) * Rat::new(fact(u64::from(n)), fact(u64::from(n - k)));
            c.check(got == expected, || {
                format!("A_{} reduces to {got}, expected {expected}", 2 * k)
            });
        }

        // Vanishing, and its identity with the sum rule.
        let reduced = weyl_reduce(&scasimir_pbw(n));
        c.check(reduced.is_zero(), || {
            format!("Scasimir image is {reduced}")
        });
        let table = coeffs(n);
        let mut by_values = Rat::zero();
        for k in 0..=n {
            by_values += &table.x[k as usize] * a_value(n, n - k).unwrap();
        }
        let direct = reduced.as_scalar().unwrap_or_else(Rat::zero);
        c.check(by_values == direct, || {
            format!("Σ x_k·A-value = {by_values} but the reduction gives {direct}")
        });
    })
}
