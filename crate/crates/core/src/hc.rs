//! Harish-Chandra machinery: the Borel-ordered projection onto Cartan
//! polynomials, the shift automorphism γ, and the two identities pinning
//! the Scasimir's image.
//!
//! In a Borel-ordered PBW basis every word either contains only Cartan
//! letters or starts with a negative-root letter / ends with a
//! positive-root letter. The projection `h` keeps the Cartan-only part
//! and identifies `H_α` with `s(α, ᾱ)`; the shift is
//! `γ: H_α ↦ H_α - (n - α + 1/2)`.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use crate::algebra::{Element, Generator};
use crate::pbw::{classify_root, normal_order, GeneratorOrder, RootClass};
use crate::report::Report;
use crate::scalar::{int, rat, Rat};
use crate::scasimir::{scasimir_pbw, scasimir_square};

/// Polynomial with rational coefficients in the commuting Cartan
/// variables `H_1..H_n`, stored as dense exponent vectors.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CartanPolynomial {
    n: u32,
    terms: BTreeMap<Vec<u32>, Rat>,
}

impl CartanPolynomial {
    pub fn zero(n: u32) -> Self {
        CartanPolynomial {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(n: u32, c: Rat) -> Self {
        let mut p = CartanPolynomial::zero(n);
        p.add_term(vec![0; n as usize], c);
        p
    }

    /// The variable `H_α` (1-based).
    pub fn var(n: u32, alpha: u32) -> Self {
        assert!(alpha >= 1 && alpha <= n, "Cartan index out of range");
        let mut exps = vec![0; n as usize];
        exps[(alpha - 1) as usize] = 1;
        let mut p = CartanPolynomial::zero(n);
        p.add_term(exps, int(1));
        p
    }

    /// `H_1 · H_2 ·..· H_n`.
    pub fn product_of_vars(n: u32) -> Self {
        let mut p = CartanPolynomial::constant(n, int(1));
        for alpha in 1..=n {
            p = p.mul(&CartanPolynomial::var(n, alpha));
        }
        p
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

    pub fn add_term(&mut self, exps: Vec<u32>, c: Rat) {
        assert_eq!(exps.len(), self.n as usize);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
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

    pub fn add_assign(&mut self, other: &CartanPolynomial) {
        assert_eq!(self.n, other.n, "mismatched n");
        for (e, c) in &other.terms {
            self.add_term(e.clone(), c.clone());
        }
    }

    pub fn scale(&self, c: &Rat) -> CartanPolynomial {
        if c.is_zero() {
            return CartanPolynomial::zero(self.n);
        }
        let mut out = CartanPolynomial::zero(self.n);
        for (e, x) in &self.terms {
            out.terms.insert(e.clone(), x * c);
        }
        out
    }

    pub fn mul(&self, other: &CartanPolynomial) -> CartanPolynomial {
        assert_eq!(self.n, other.n, "mismatched n");
        let mut out = CartanPolynomial::zero(self.n);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let exps: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out.add_term(exps, ca * cb);
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> CartanPolynomial {
        let mut acc = CartanPolynomial::constant(self.n, int(1));
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Applies the variable permutation `H_α ↦ H_perm(α)` (0-based perm).
    pub fn permute_vars(&self, perm: &[usize]) -> CartanPolynomial {
        assert_eq!(perm.len(), self.n as usize);
        let mut out = CartanPolynomial::zero(self.n);
        for (e, c) in &self.terms {
            let mut exps = vec![0; self.n as usize];
            for (i, &x) in e.iter().enumerate() {
                exps[perm[i]] = x;
            }
            out.add_term(exps, c.clone());
        }
        out
    }

    /// Substitutes `H_α ↦ H_α + shift(α)` with exact binomial expansion.
    pub fn substitute_shifts(&self, shift: impl Fn(u32) -> Rat) -> CartanPolynomial {
        let n = self.n;
        let mut out = CartanPolynomial::zero(n);
        for (exps, c) in &self.terms {
            let mut acc = CartanPolynomial::constant(n, c.clone());
            for (i, &e) in exps.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let alpha = i as u32 + 1;
                let mut base = CartanPolynomial::var(n, alpha);
                base.add_term(vec![0; n as usize], shift(alpha));
                acc = acc.mul(&base.pow(e));
            }
            out.add_assign(&acc);
        }
        out
    }
}

impl fmt::Display for CartanPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rendered = crate::scalar::join_signed_terms(self.terms.iter().map(|(exps, c)| {
            let vars: Vec<String> = exps
                .iter()
                .enumerate()
                .filter(|(_, e)| **e > 0)
                .map(|(i, e)| {
                    if *e == 1 {
                        format!("H{}", i + 1)
                    } else {
                        format!("H{}^{}", i + 1, e)
                    }
                })
                .collect();
            (c, vars.join("*"))
        }));
        write!(f, "{rendered}")
    }
}

/// Direction of the shift automorphism.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ShiftDirection {
    /// `H_α ↦ H_α - (n - α + 1/2)`
    Forward,
    /// `H_α ↦ H_α + (n - α + 1/2)`
    Inverse,
}

/// The automorphism γ (or its inverse) of the Cartan polynomial ring.
pub fn gamma_shift(p: &CartanPolynomial, direction: ShiftDirection) -> CartanPolynomial {
    let n = p.n();
    let sign = match direction {
        ShiftDirection::Forward => int(-1),
        ShiftDirection::Inverse => int(1),
    };
    p.substitute_shifts(|alpha| sign.clone() * (int(i64::from(n) - i64::from(alpha)) + rat(1, 2)))
}

/// Harish-Chandra projection `h`: Borel-order `x`, drop every word that
/// contains a non-Cartan letter, and read the survivors as monomials in
/// `H_α = s(α, ᾱ)`.
pub fn hc_project(x: &Element) -> CartanPolynomial {
    hc_project_with_order(x, GeneratorOrder::Borel)
}

/// [`hc_project`] parametrized by the Borel-order flavour; the result
/// must not depend on the internal ordering choice.
pub fn hc_project_with_order(x: &Element, order: GeneratorOrder) -> CartanPolynomial {
    assert!(
        matches!(order, GeneratorOrder::Borel | GeneratorOrder::BorelAlt),
        "Harish-Chandra projection requires a Borel-type order"
    );
    let n = x.n();
    let nf = normal_order(x, order);
    let mut out = CartanPolynomial::zero(n);
    'words: for (w, c) in nf.terms() {
        let mut exps = vec![0u32; n as usize];
        for g in &w.0 {
            if classify_root(n, *g) != RootClass::Cartan {
                continue 'words;
            }
            match g {
                Generator::Even(a, _) => exps[(*a - 1) as usize] += 1,
                Generator::Odd(_) => unreachable!("odd generators are never Cartan"),
            }
        }
        out.add_term(exps, c.clone());
    }
    out
}

/// Checks the monic identity `γ⁻¹(h(Sc)) = H_1·..·H_n` exactly; on
/// failure the report carries both polynomials.
///
/// The check passes at `n = 1`. The computed image is in fact
/// `((2n)!/2^n) · H_1·..·H_n` — a pure monomial, but monic only for
/// `n = 1`: the constant term of `h(Sc)` is pinned to `x_n` (rewriting
/// never creates or destroys scalars), which fixes the normalization.
/// See [`hc_scasimir_image`] for the computed polynomial itself.
pub fn verify_hc_scasimir(n: u32) -> Report {
    Report::run(&format!("harish-chandra Sc n={n}"), |c| {
        let image = hc_scasimir_image(n);
        let expected = CartanPolynomial::product_of_vars(n);
        c.check(image == expected, || {
            format!("γ⁻¹∘h(Sc) = {image}, expected {expected}")
        });
    })
}

/// Checks `γ⁻¹(h(Sc²)) = H_1²·..·H_n²` exactly; on failure the report
/// carries both polynomials. Same normalization caveat as
/// [`verify_hc_scasimir`], squared.
pub fn verify_hc_square(n: u32) -> Report {
    Report::run(&format!("harish-chandra Sc² n={n}"), |c| {
        let image = hc_square_image(n);
        let expected = CartanPolynomial::product_of_vars(n).pow(2);
        c.check(image == expected, || {
            format!("γ⁻¹∘h(Sc²) = {image}, expected {expected}")
        });
    })
}

/// `γ⁻¹∘h(Sc)` as computed.
pub fn hc_scasimir_image(n: u32) -> CartanPolynomial {
    gamma_shift(&hc_project(&scasimir_pbw(n)), ShiftDirection::Inverse)
}

/// `γ⁻¹∘h(Sc²)` as computed.
pub fn hc_square_image(n: u32) -> CartanPolynomial {
    gamma_shift(&hc_project(&scasimir_square(n)), ShiftDirection::Inverse)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{multiply, term};
    use crate::sample::{random_element, rng_from_seed};
    use rand::Rng;

    fn o(a: u32) -> Generator {
        Generator::odd(a)
    }

    #[test]
    fn hc_project_scasimir_n1() {
        // Borel form of Sc⁽¹⁾ is s(1,2) - 2 s(2)s(1) - 1/2; h drops the
        // mixed word.
        let p = hc_project(&scasimir_pbw(1));
        let mut expected = CartanPolynomial::var(1, 1);
        expected.add_term(vec![0], rat(-1, 2));
        assert_eq!(p, expected);
    }

    #[test]
    fn hc_project_drops_non_cartan_words() {
        // s(2)s(1) has no Cartan-only monomial (n = 1).
        let x = term(1, 1, 1, &[o(2), o(1)]);
        assert!(hc_project(&x).is_zero());

        // Scalars are fixed.
        let x = Element::scalar(2, rat(-7, 3));
        assert_eq!(hc_project(&x), CartanPolynomial::constant(2, rat(-7, 3)));
    }

    #[test]
    fn gamma_shift_examples() {
        // n = 1: H1 ↦ H1 - 1/2.
        let p = CartanPolynomial::var(1, 1);
        let shifted = gamma_shift(&p, ShiftDirection::Forward);
        let mut expected = CartanPolynomial::var(1, 1);
        expected.add_term(vec![0], rat(-1, 2));
        assert_eq!(shifted, expected);

        // n = 2: H1 ↦ H1 - 3/2, H2 ↦ H2 - 1/2.
        let p = CartanPolynomial::var(2, 1).mul(&CartanPolynomial::var(2, 2));
        let shifted = gamma_shift(&p, ShiftDirection::Forward);
        let mut h1 = CartanPolynomial::var(2, 1);
        h1.add_term(vec![0, 0], rat(-3, 2));
        let mut h2 = CartanPolynomial::var(2, 2);
        h2.add_term(vec![0, 0], rat(-1, 2));
        assert_eq!(shifted, h1.mul(&h2));
    }

    #[test]
    fn gamma_inverse_of_forward_is_identity() {
        let mut rng = rng_from_seed(37);
        for n in [1u32, 2, 3] {
            for _ in 0..10 {
                let mut p = CartanPolynomial::zero(n);
                for _ in 0..4 {
                    let exps: Vec<u32> = (0..n).map(|_| rng.gen_range(0..3)).collect();
                    p.add_term(exps, rat(rng.gen_range(-5..=5), rng.gen_range(1..=3)));
                }
                let roundtrip = gamma_shift(
                    &gamma_shift(&p, ShiftDirection::Forward),
                    ShiftDirection::Inverse,
                );
                assert_eq!(roundtrip, p);
            }
        }
    }

    #[test]
    fn hc_scasimir_identity_monic_at_n1() {
        assert!(verify_hc_scasimir(1).is_pass());
    }

    #[test]
    fn hc_square_identity_monic_at_n1() {
        assert!(verify_hc_square(1).is_pass());
    }

    #[test]
    fn hc_identity_fails_at_n2_with_both_polynomials() {
        // At n = 2 the image is 6·H1H2, not H1H2; the report must say so.
        let report = verify_hc_scasimir(2);
        assert!(!report.is_pass());
        assert!(report.details[0].contains("6 * H1*H2"));
        assert!(report.details[0].contains("H1*H2"));
        let report = verify_hc_square(2);
        assert!(!report.is_pass());
        assert!(report.details[0].contains("36 * H1^2*H2^2"));
    }

    #[test]
    fn hc_images_are_normalized_cartan_monomials() {
        // γ⁻¹∘h(Sc) = (2n)!/2^n · H_1..H_n exactly: a pure monomial with
        // every affine term cancelled by the shift.
        for n in 1..=3u32 {
            let factor = Rat::new(crate::scalar::fact(2 * u64::from(n)), 1.into())
                / crate::scalar::pow2(i64::from(n));
            let expected = CartanPolynomial::product_of_vars(n).scale(&factor);
            assert_eq!(hc_scasimir_image(n), expected, "n={n}");
        }
        for n in 1..=2u32 {
            let factor = Rat::new(crate::scalar::fact(2 * u64::from(n)), 1.into())
                / crate::scalar::pow2(i64::from(n));
            let expected = CartanPolynomial::product_of_vars(n)
                .pow(2)
                .scale(&(&factor * &factor));
            assert_eq!(hc_square_image(n), expected, "n={n}");
        }
    }

    #[test]
    fn hc_square_equals_square_of_hc() {
        // Cross terms vanish under h; verified, not assumed.
        for n in [1u32, 2] {
            assert_eq!(hc_square_image(n), hc_scasimir_image(n).pow(2));
        }
    }

    #[test]
    fn projection_kills_n_minus_u_plus_u_n_plus() {
        let mut rng = rng_from_seed(41);
        let n = 2;
        let positive = [Generator::odd(1), Generator::even(1, 2), Generator::even(1, 4)];
        let negative = [Generator::odd(3), Generator::even(3, 4), Generator::even(2, 3)];
        for _ in 0..10 {
            let y = random_element(&mut rng, n, 3, 3);
            for g in positive {
                let ge = Element::generator(n, g).unwrap();
                assert!(
                    hc_project(&multiply(&y, &ge)).is_zero(),
                    "h(y·{g}) != 0"
                );
            }
            for g in negative {
                let ge = Element::generator(n, g).unwrap();
                assert!(
                    hc_project(&multiply(&ge, &y)).is_zero(),
                    "h({g}·y) != 0"
                );
            }
        }
    }

    #[test]
    fn images_are_weyl_invariant() {
        // γ⁻¹∘h on {1, Sc, Sc²} is symmetric in the H variables.
        let n = 2;
        let swap = vec![1usize, 0];
        for x in [
            Element::unit(n),
            scasimir_pbw(n),
            scasimir_square(n),
        ] {
            let image = gamma_shift(&hc_project(&x), ShiftDirection::Inverse);
            assert_eq!(image.permute_vars(&swap), image);
        }
    }

    #[test]
    fn independent_of_borel_internal_order() {
        for n in [1u32, 2] {
            for x in [scasimir_pbw(n), scasimir_square(n)] {
                let a = hc_project_with_order(&x, GeneratorOrder::Borel);
                let b = hc_project_with_order(&x, GeneratorOrder::BorelAlt);
                assert_eq!(a, b, "n={n}");
            }
            let mut rng = rng_from_seed(43);
            for _ in 0..10 {
                let x = random_element(&mut rng, n, 3, 4);
                let a = hc_project_with_order(&x, GeneratorOrder::Borel);
                let b = hc_project_with_order(&x, GeneratorOrder::BorelAlt);
                assert_eq!(a, b, "n={n}");
            }
        }
    }
}
