//! The standard adjoint action and the nonstandard triangle action.
//!
//! The triangle action `g ▷ x` keeps the commutator for even generators
//! but flips the bracket choice for odd ones:
//!
//! ```text
//!   s(a,b) ▷ x      = [s(a,b), x]
//!   s(a)   ▷ x_even = {s(a), x_even}
//!   s(a)   ▷ x_odd  = [s(a), x_odd]
//! ```
//!
//! Both actions are defined on parity-homogeneous elements and extended
//! linearly over the even/odd decomposition. Results are returned as
//! unreduced free elements; callers normal-order when they need canonical
//! representatives.

use crate::algebra::{multiply, Element, Generator};
use crate::pbw::{normal_order, GeneratorOrder};
use crate::report::{Checker, Report};
use crate::sample::{random_element, rng_from_seed};
use crate::scalar::int;

fn commutator(g: &Element, x: &Element) -> Element {
    &multiply(g, x) - &multiply(x, g)
}

fn anticommutator(g: &Element, x: &Element) -> Element {
    &multiply(g, x) + &multiply(x, g)
}

/// Standard adjoint action: `[g, x]` for even `g`, the graded bracket
/// `[g, x]±` for odd `g`.
pub fn adjoint(g: Generator, x: &Element) -> Element {
    let ge = Element::generator(x.n(), g).expect("generator out of range for this n");
    match g {
        Generator::Even(_, _) => commutator(&ge, x),
        Generator::Odd(_) => {
            // Graded bracket: commutator against the even part,
            // anticommutator against the odd part.
            let even = commutator(&ge, &x.even_part());
            let odd = anticommutator(&ge, &x.odd_part());
            &even + &odd
        }
    }
}

/// Triangle action `g ▷ x`.
pub fn triangle(g: Generator, x: &Element) -> Element {
    let ge = Element::generator(x.n(), g).expect("generator out of range for this n");
    match g {
        Generator::Even(_, _) => commutator(&ge, x),
        Generator::Odd(_) => {
            let even = anticommutator(&ge, &x.even_part());
            let odd = commutator(&ge, &x.odd_part());
            &even + &odd
        }
    }
}

/// Extends the triangle action linearly to an element `a` that is a
/// linear combination of single generators (the shape every bracket of
/// the defining relations reduces to). Panics on longer words.
pub fn triangle_element(a: &Element, x: &Element) -> Element {
    let mut out = Element::zero(x.n());
    for (w, c) in a.terms() {
        assert_eq!(
            w.len(),
            1,
            "triangle action is defined for generators, got word {w}"
        );
        out.add_assign(&triangle(w.0[0], x).scale(c));
    }
    out
}

/// Checks the module identities of the triangle action on `samples`
/// random elements, for every generator pair:
///
/// ```text
///   {s(a),s(b)} ▷ x    = s(a)▷(s(b)▷x) + s(b)▷(s(a)▷x)
///   [s(a),s(b,c)] ▷ x  = s(a)▷(s(b,c)▷x) - s(b,c)▷(s(a)▷x)
///   [s(a,b),s(c,d)] ▷ x = s(a,b)▷(s(c,d)▷x) - s(c,d)▷(s(a,b)▷x)
/// ```
pub fn verify_module_axioms(n: u32, samples: usize, seed: u64) -> Report {
    Report::run(&format!("module-axioms n={n}"), |c| {
        let mut rng = rng_from_seed(seed);
        for s in 0..samples {
            let x = random_element(&mut rng, n, 3, 4);
            let label = format!("sample {s}");
            check_ferm_axioms_on(c, n, &x, &label);
            check_bos_axioms_on(c, n, &x, &label);
            if c.failures() > 0 {
                return; // first counterexample is enough
            }
        }
    })
}

fn even_generators(n: u32) -> Vec<Generator> {
    let mut v = Vec::new();
    for a in 1..=2 * n {
        for b in a..=2 * n {
            v.push(Generator::even(a, b));
        }
    }
    v
}

/// The two identities involving an odd generator, for every pair.
pub(crate) fn check_ferm_axioms_on(c: &mut Checker, n: u32, x: &Element, label: &str) {
    let nf = |e: &Element| normal_order(e, GeneratorOrder::Standard);
    let odd: Vec<u32> = (1..=2 * n).collect();

    // {s(a), s(b)} ▷ x = s(a)▷(s(b)▷x) + s(b)▷(s(a)▷x)
    for &a in &odd {
        for &b in &odd {
            let (ga, gb) = (Generator::odd(a), Generator::odd(b));
            let lhs = triangle(Generator::even(a, b), x);
            let rhs = &triangle(ga, &triangle(gb, x)) + &triangle(gb, &triangle(ga, x));
            c.check(nf(&lhs) == nf(&rhs), || {
                format!("odd-odd axiom failed for a={a}, b={b} on {label}: x = {x}")
            });
        }
    }

    // [s(a), s(b,c)] ▷ x = s(a)▷(s(b,c)▷x) - s(b,c)▷(s(a)▷x)
    for &a in &odd {
        let ga = Generator::odd(a);
        for &gbc in &even_generators(n) {
            let bracket = bracket_of(n, ga, gbc);
            let lhs = triangle_element(&bracket, x);
            let rhs = &triangle(ga, &triangle(gbc, x)) - &triangle(gbc, &triangle(ga, x));
            c.check(nf(&lhs) == nf(&rhs), || {
                format!("odd-even axiom failed for {ga}, {gbc} on {label}: x = {x}")
            });
        }
    }
}

/// The sp(2n) identity `[s(a,b),s(c,d)] ▷ x = s(a,b)▷(s(c,d)▷x) - s(c,d)▷(s(a,b)▷x)`.
pub(crate) fn check_bos_axioms_on(c: &mut Checker, n: u32, x: &Element, label: &str) {
    let nf = |e: &Element| normal_order(e, GeneratorOrder::Standard);
    let even = even_generators(n);
    for &g1 in &even {
        for &g2 in &even {
            let bracket = bracket_of(n, g1, g2);
            let lhs = triangle_element(&bracket, x);
            let rhs = &triangle(g1, &triangle(g2, x)) - &triangle(g2, &triangle(g1, x));
            c.check(nf(&lhs) == nf(&rhs), || {
                format!("even-even axiom failed for {g1}, {g2} on {label}: x = {x}")
            });
        }
    }
}

/// The defining-relation value of the bracket of two generators, as a
/// linear combination of single generators.
fn bracket_of(n: u32, x: Generator, y: Generator) -> Element {
    use crate::algebra::metric;
    match (x, y) {
        (Generator::Odd(a), Generator::Odd(b)) => {
            Element::generator(n, Generator::even(a, b)).unwrap()
        }
        (Generator::Odd(a), Generator::Even(b, c)) => {
            let mut out = Element::zero(n);
            let gab = metric(n, a, b).unwrap();
            let gac = metric(n, a, c).unwrap();
            out.add_assign(&Element::generator(n, Generator::odd(c)).unwrap().scale(&-gab));
            out.add_assign(&Element::generator(n, Generator::odd(b)).unwrap().scale(&-gac));
            out
        }
        (Generator::Even(_, _), Generator::Odd(_)) => bracket_of(n, y, x).scale(&int(-1)),
        (Generator::Even(a, b), Generator::Even(c, d)) => {
            let mut out = Element::zero(n);
            for (p, q, r, s) in [(a, c, b, d), (a, d, b, c), (b, c, a, d), (b, d, a, c)] {
                let g = metric(n, p, q).unwrap();
                out.add_assign(
                    &Element::generator(n, Generator::even(r, s))
                        .unwrap()
                        .scale(&-g),
                );
            }
            out
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{gen_odd, term, Word};
    use crate::scalar::rat;

    fn o(a: u32) -> Generator {
        Generator::odd(a)
    }

    fn e(a: u32, b: u32) -> Generator {
        Generator::even(a, b)
    }

    fn nf(x: &Element) -> Element {
        normal_order(x, GeneratorOrder::Standard)
    }

    #[test]
    fn adjoint_examples() {
        // [s(1,2), s(1)] normal-orders to -s(1)  (n = 1).
        let r = adjoint(e(1, 2), &gen_odd(1, 1));
        assert_eq!(nf(&r), term(1, -1, 1, &[o(1)]));

        // The unit is killed by every adjoint action.
        assert!(adjoint(o(1), &Element::unit(1)).is_zero());

        // ad_{s(1)} s(1) = {s(1), s(1)} = 2 s(1)s(1) -> s(1,1).
        let r = adjoint(o(1), &gen_odd(1, 1));
        assert_eq!(r, term(1, 2, 1, &[o(1), o(1)]));
        assert_eq!(nf(&r), term(1, 1, 1, &[e(1, 1)]));
    }

    #[test]
    fn triangle_examples() {
        // s(1) ▷ s(2) = [s(1), s(2)]  (odd argument).
        let r = triangle(o(1), &gen_odd(1, 2));
        let expected = &term(1, 1, 1, &[o(1), o(2)]) - &term(1, 1, 1, &[o(2), o(1)]);
        assert_eq!(r, expected);

        // s(1) ▷ 1 = 2 s(1)  (even argument, anticommutator).
        let r = triangle(o(1), &Element::unit(1));
        assert_eq!(r, term(1, 2, 1, &[o(1)]));

        // Even generators act as in the adjoint.
        let r = triangle(e(1, 2), &gen_odd(1, 1));
        assert_eq!(nf(&r), term(1, -1, 1, &[o(1)]));
    }

    #[test]
    fn even_generator_triangle_matches_adjoint_everywhere() {
        let mut rng = rng_from_seed(3);
        for _ in 0..20 {
            let x = random_element(&mut rng, 2, 3, 3);
            for a in 1..=4 {
                for b in a..=4 {
                    let g = e(a, b);
                    assert_eq!(triangle(g, &x), adjoint(g, &x));
                }
            }
        }
    }

    #[test]
    fn triangle_is_linear() {
        let mut rng = rng_from_seed(5);
        for _ in 0..20 {
            let x = random_element(&mut rng, 2, 3, 3);
            let y = random_element(&mut rng, 2, 3, 3);
            for g in [o(1), o(3), e(1, 2), e(2, 4)] {
                let lhs = triangle(g, &(&x + &y));
                let rhs = &triangle(g, &x) + &triangle(g, &y);
                assert_eq!(lhs, rhs);
            }
            let scaled = x.scale(&rat(3, 7));
            for g in [o(2), e(1, 3)] {
                assert_eq!(triangle(g, &scaled), triangle(g, &x).scale(&rat(3, 7)));
            }
        }
    }

    #[test]
    fn odd_square_axiom_explicitly() {
        // {s(1),s(1)} ▷ x = 2 s(1)▷(s(1)▷x) for arbitrary x (n = 1).
        let mut rng = rng_from_seed(9);
        for _ in 0..25 {
            let x = random_element(&mut rng, 1, 3, 4);
            let lhs = triangle(e(1, 1), &x);
            let rhs = triangle(o(1), &triangle(o(1), &x)).scale(&rat(2, 1));
            assert_eq!(nf(&lhs), nf(&rhs));
        }
    }

    #[test]
    fn module_axioms_random_sweeps() {
        assert!(verify_module_axioms(1, 50, 42).is_pass());
        assert!(verify_module_axioms(2, 50, 42).is_pass());
    }

    #[test]
    fn module_axioms_exhaustive_short_words() {
        // All PBW words of length <= 3 for n in {1, 2}, all generator pairs.
        for n in [1u32, 2] {
            let mut words: Vec<Word> = vec![Word::empty()];
            let gens = crate::algebra::all_generators(n);
            let mut frontier: Vec<Word> = vec![Word::empty()];
            for _ in 0..3 {
                let mut next = Vec::new();
                for w in &frontier {
                    for g in &gens {
                        let mut v = w.0.clone();
                        v.push(*g);
                        let cand = Word(v);
                        // keep only words already in normal form
                        let el = Element::from_word(n, cand.0.clone()).unwrap();
                        if crate::pbw::is_normal_form(&el, GeneratorOrder::Standard) {
                            next.push(cand);
                        }
                    }
                }
                words.extend(next.iter().cloned());
                frontier = next;
            }
            let report = Report::run("exhaustive", |c| {
                for w in &words {
                    let x = Element::from_word(n, w.0.clone()).unwrap();
                    check_ferm_axioms_on(c, n, &x, &format!("word {w}"));
                }
            });
            assert!(report.is_pass(), "{report}");
        }
    }
}
