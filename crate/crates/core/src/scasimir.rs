//! The Scasimir operator `Sc`: an even element of Ω that anticommutes
//! with every odd generator and commutes with every even one, making its
//! square a central element.
//!
//! `Sc = Σ_k x_k A_(2n-2k)` where `A_(2n-2k)` sums the brackets obtained
//! by deleting `k` conjugate index pairs from `[1 1̄ .. n n̄]`. The
//! coefficients `x_k` are computed by three independent routes — two
//! recursions and a generating function — which must agree exactly.

use std::cell::RefCell;
use std::collections::HashMap;
use std::fmt;

use num_traits::Zero;

use crate::algebra::{all_generators, multiply, Element, Generator};
use crate::error::AlgebraError;
use crate::omega::{omega_expand, sp_action, Bracket, OmegaElement};
use crate::pbw::{normal_order, GeneratorOrder};
use crate::report::Report;
use crate::scalar::{binom, fact, int, pow2, Rat};
use crate::series::u_over_sinh;

/// Which engine produced a coefficient table.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Route {
    RecursionA,
    RecursionB,
    Series,
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Route::RecursionA => "recursion_a",
            Route::RecursionB => "recursion_b",
            Route::Series => "series",
        };
        write!(f, "{s}")
    }
}

/// The Scasimir coefficients `x_0..x_n` together with their rescaled
/// companions `y_k = (2k+2)!(2n-2k)! / (2^k k! (2n+1)!) · x_k`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CoeffTable {
    pub n: u32,
    pub route: Route,
    pub x: Vec<Rat>,
    pub y: Vec<Rat>,
}

/// `y_k / x_k` conversion factor.
fn xy_factor(n: u32, k: u32) -> Rat {
    let num = fact(2 * u64::from(k) + 2) * fact(2 * u64::from(n) - 2 * u64::from(k));
    let den = fact(u64::from(k)) * fact(2 * u64::from(n) + 1);
    Rat::new(num, den) / pow2(i64::from(k))
}

fn table_from_y(n: u32, route: Route, y: Vec<Rat>) -> CoeffTable {
    let x = y
        .iter()
        .enumerate()
        .map(|(k, yk)| yk / xy_factor(n, k as u32))
        .collect();
    CoeffTable { n, route, x, y }
}

fn table_from_x(n: u32, route: Route, x: Vec<Rat>) -> CoeffTable {
    let y = x
        .iter()
        .enumerate()
        .map(|(k, xk)| xk * xy_factor(n, k as u32))
        .collect();
    CoeffTable { n, route, x, y }
}

/// First recursion: `y_0 = 2/(2n+1)` and
/// `y_k = -(1/k) Σ_p y_p · ((2k+2)!/4) / ((2p+2)!(2k-2p+1)!)
///        · ((2k-2p-1)(2n-2p+1) + 2p(2k-2p+1))`.
pub fn coeffs_recursion_a(n: u32) -> CoeffTable {
    let mut y: Vec<Rat> = Vec::with_capacity(n as usize + 1);
    y.push(Rat::new(2.into(), (2 * u64::from(n) + 1).into()));
    for k in 1..=u64::from(n) {
        let mut s = Rat::zero();
        for p in 0..k {
            let factor = Rat::new(
                fact(2 * k + 2),
                fact(2 * p + 2) * fact(2 * k - 2 * p + 1) * num_bigint::BigInt::from(4),
            );
            let weight = (2 * k - 2 * p - 1) * (2 * u64::from(n) - 2 * p + 1)
                + 2 * p * (2 * k - 2 * p + 1);
            s += &y[p as usize] * factor * Rat::from_integer(weight.into());
        }
        y.push(-s / Rat::from_integer(k.into()));
    }
    table_from_y(n, Route::RecursionA, y)
}

/// Second recursion: `y_0 = 2/(2n+1)` and
/// `y_k = -(1/k) Σ_p y_p · (2k+2)! / ((2p+2)!(2k-2p+2)!)
///        · ((k-p)(2n-2p+1) + p(2k-2p+2))`.
pub fn coeffs_recursion_b(n: u32) -> CoeffTable {
    let mut y: Vec<Rat> = Vec::with_capacity(n as usize + 1);
    y.push(Rat::new(2.into(), (2 * u64::from(n) + 1).into()));
    for k in 1..=u64::from(n) {
        let mut s = Rat::zero();
        for p in 0..k {
            let factor = Rat::new(fact(2 * k + 2), fact(2 * p + 2) * fact(2 * k - 2 * p + 2));
            let weight =
                (k - p) * (2 * u64::from(n) - 2 * p + 1) + p * (2 * k - 2 * p + 2);
            s += &y[p as usize] * factor * Rat::from_integer(weight.into());
        }
        y.push(-s / Rat::from_integer(k.into()));
    }
    table_from_y(n, Route::RecursionB, y)
}

/// Generating-function route:
/// `x_k = 2^(-k) k! C(2n,2k) (2k)! [u^(2k)] (u/sinh u)^(2n+1)`.
///
/// `u/sinh u` is even, so the computation runs over the variable
/// `t = u²`: the `t^m` coefficient is the `u^(2m)` one.
pub fn coeffs_series(n: u32) -> CoeffTable {
    let series = u_over_sinh_in_u_squared(n as usize).pow(2 * n + 1);
    let x: Vec<Rat> = (0..=u64::from(n))
        .map(|k| {
            let comb = Rat::from_integer(fact(k) * binom(2 * u64::from(n), 2 * k) * fact(2 * k));
            pow2(-(k as i64)) * comb * series.coeff(k as usize)
        })
        .collect();
    table_from_x(n, Route::Series, x)
}

/// `u/sinh u` with the `u^(2m)` coefficient stored at degree `m`:
/// the reciprocal of `Σ_m t^m / (2m+1)!`.
fn u_over_sinh_in_u_squared(order: usize) -> crate::series::PowerSeries {
    let coeff: Vec<Rat> = (0..=order)
        .map(|m| Rat::new(1.into(), fact(2 * m as u64 + 1)))
        .collect();
    crate::series::PowerSeries::from_coeffs(order, coeff).recip()
}

thread_local! {
    static COEFF_CACHE: RefCell<HashMap<u32, CoeffTable>> = RefCell::new(HashMap::new());
}

/// Cached series-route coefficients (the cheapest engine); the recursions
/// are cross-checked lazily by [`verify_routes`].
pub fn coeffs(n: u32) -> CoeffTable {
    COEFF_CACHE.with(|c| {
        c.borrow_mut()
            .entry(n)
            .or_insert_with(|| coeffs_series(n))
            .clone()
    })
}

/// `A_(2n-2k)`: the sum over all `C(n,k)` ways of deleting `k` conjugate
/// pairs from `[1 1̄ 2 2̄ .. n n̄]`, expressed over sorted brackets (the
/// interleaved writing differs from the sorted one by
/// `(-1)^(m(m-1)/2)`, `m = n-k` pairs kept).
pub fn a_poly(n: u32, k: u32) -> Result<OmegaElement, AlgebraError> {
    if k > n {
        return Err(AlgebraError::CoeffIndexOutOfRange { k, n });
    }
    let keep = (n - k) as usize;
    let mut out = OmegaElement::zero(n);
    let m = keep as i64;
    let sign = if (m * (m - 1) / 2) % 2 == 0 { 1 } else { -1 };
    for subset in combinations(n, keep) {
        let mut idx: Vec<u32> = subset.clone();
        idx.extend(subset.iter().map(|&a| a + n));
        idx.sort_unstable();
        let bracket = Bracket::new(n, idx).unwrap();
        out.add_term(bracket, int(sign));
    }
    Ok(out)
}

/// All `size`-element subsets of `{1..n}` in lexicographic order.
fn combinations(n: u32, size: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(size);
    fn go(start: u32, n: u32, size: usize, current: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if current.len() == size {
            out.push(current.clone());
            return;
        }
        for a in start..=n {
            current.push(a);
            go(a + 1, n, size, current, out);
            current.pop();
        }
    }
    go(1, n, size, &mut current, &mut out);
    out
}

/// The Scasimir in Ω coordinates: `Σ_k x_k A_(2n-2k)`.
pub fn scasimir(n: u32) -> OmegaElement {
    let table = coeffs(n);
    let mut out = OmegaElement::zero(n);
    for k in 0..=n {
        out.add_assign(&a_poly(n, k).unwrap().scale(&table.x[k as usize]));
    }
    out
}

/// The Scasimir expanded into standard PBW form.
pub fn scasimir_pbw(n: u32) -> Element {
    omega_expand(&scasimir(n))
}

/// `Σ_k 2^(k-n) (n!/k!) x_k`; vanishes for every `n`.
pub fn sum_rule(n: u32) -> Rat {
    let table = coeffs(n);
    let mut s = Rat::zero();
    for k in 0..=u64::from(n) {
        let weight = pow2(k as i64 - i64::from(n)) * Rat::new(fact(u64::from(n)), fact(k));
        s += weight * &table.x[k as usize];
    }
    s
}

/// Normal-ordered `Sc²`.
pub fn scasimir_square(n: u32) -> Element {
    let sc = scasimir_pbw(n);
    normal_order(&multiply(&sc, &sc), GeneratorOrder::Standard)
}

/// Ghost property: `s(a)·Sc + Sc·s(a) = 0` for every odd generator and
/// `s(a,b)·Sc - Sc·s(a,b) = 0` for every even one, checked exactly in
/// PBW form.
pub fn verify_ghost(n: u32) -> Report {
    Report::run(&format!("ghost n={n}"), |c| {
        let sc = scasimir_pbw(n);
        for g in all_generators(n) {
            let ge = Element::generator(n, g).unwrap();
            let residual = match g {
                Generator::Odd(_) => &multiply(&ge, &sc) + &multiply(&sc, &ge),
                Generator::Even(_, _) => &multiply(&ge, &sc) - &multiply(&sc, &ge),
            };
            let nf = normal_order(&residual, GeneratorOrder::Standard);
            c.check(nf.is_zero(), || {
                let kind = if g.is_odd() { "anticommutator" } else { "commutator" };
                format!("{kind} with {g} leaves residual {nf}")
            });
        }
    })
}

/// `sum_rule(k) = 0` for all `1 <= k <= max_n`.
pub fn verify_sum_rule(max_n: u32) -> Report {
    Report::run(&format!("sum-rule n<={max_n}"), |c| {
        for k in 1..=max_n {
            let s = sum_rule(k);
            c.check(s.is_zero(), || format!("sum rule at n={k} gives {s}"));
        }
    })
}

/// The three coefficient routes agree exactly for all `1 <= k <= max_n`,
/// with `x_0 = 1` and `y_0 = 2/(2k+1)`.
pub fn verify_routes(max_n: u32) -> Report {
    Report::run(&format!("coefficient routes n<={max_n}"), |c| {
        for k in 1..=max_n {
            let a = coeffs_recursion_a(k);
            let b = coeffs_recursion_b(k);
            let s = coeffs_series(k);
            c.check(a.x == s.x && a.y == s.y, || {
                format!("recursion A disagrees with the series route at n={k}")
            });
            c.check(b.x == s.x && b.y == s.y, || {
                format!("recursion B disagrees with the series route at n={k}")
            });
            c.check(s.x[0] == int(1), || format!("x_0 != 1 at n={k}"));
            let y0 = Rat::new(2.into(), (2 * u64::from(k) + 1).into());
            c.check(s.y[0] == y0, || format!("y_0 != 2/(2n+1) at n={k}"));
        }
    })
}

/// `Sc²` commutes (plain commutator) with every generator.
pub fn verify_square_central(n: u32) -> Report {
    Report::run(&format!("square centrality n={n}"), |c| {
        let sq = scasimir_square(n);
        c.check(sq.parity() == Some(0), || "Sc² is not parity-even".into());
        for g in all_generators(n) {
            let ge = Element::generator(n, g).unwrap();
            let residual = &multiply(&ge, &sq) - &multiply(&sq, &ge);
            let nf = normal_order(&residual, GeneratorOrder::Standard);
            c.check(nf.is_zero(), || {
                format!("[{g}, Sc²] leaves residual {nf}")
            });
        }
    })
}

/// Ghost property restated inside Ω: `s(a) ▷ Sc = 0` for every odd `a`
/// (Sc is even, so the triangle action is the anticommutator), and every
/// Cartan generator annihilates it (zero weight).
pub fn verify_ghost_in_omega(n: u32) -> Report {
    Report::run(&format!("ghost in-omega n={n}"), |c| {
        let sc = scasimir(n);
        for a in 1..=2 * n {
            match crate::omega::triangle_on_omega(Generator::odd(a), &sc) {
                Err(e) => c.fail(format!("s({a}) ▷ Sc: {e}")),
                Ok(r) => c.check(r.is_zero(), || format!("s({a}) ▷ Sc = {r}")),
            }
        }
        for alpha in 1..=n {
            let cartan = Generator::even(alpha, alpha + n);
            let r = sp_action(cartan, &sc);
            c.check(r.is_zero(), || {
                format!("Cartan s({alpha},{}) does not annihilate Sc: {r}", alpha + n)
            });
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    fn br(n: u32, idx: &[u32]) -> Bracket {
        Bracket::new(n, idx.to_vec()).unwrap()
    }

    #[test]
    fn a_poly_examples() {
        // A_0 = 1 for every n.
        for n in 1..=3 {
            assert_eq!(a_poly(n, n).unwrap(), OmegaElement::scalar(n, int(1)));
        }

        // n=2, one pair deleted: [1 1̄] + [2 2̄].
        let got = a_poly(2, 1).unwrap();
        let mut expected = OmegaElement::single(2, br(2, &[1, 3]));
        expected.add_term(br(2, &[2, 4]), int(1));
        assert_eq!(got, expected);

        // n=2, full bracket: [1 1̄ 2 2̄] = -[1 2 1̄ 2̄] in sorted order.
        let got = a_poly(2, 0).unwrap();
        assert_eq!(got, OmegaElement::single(2, br(2, &[1, 2, 3, 4])).scale(&int(-1)));

        assert!(a_poly(2, 3).is_err());
    }

    #[test]
    fn a_poly_n3_term_counts() {
        // A_4 at n=3 has C(3,1) = 3 brackets, A_2 has 3, A_6 has 1.
        assert_eq!(a_poly(3, 0).unwrap().num_terms(), 1);
        assert_eq!(a_poly(3, 1).unwrap().num_terms(), 3);
        assert_eq!(a_poly(3, 2).unwrap().num_terms(), 3);
    }

    #[test]
    fn recursion_a_tables() {
        // y_1 = -1 independently of n.
        for n in 1..=6 {
            assert_eq!(coeffs_recursion_a(n).y[1], int(-1));
        }
        assert_eq!(coeffs_recursion_a(1).x, vec![int(1), rat(-1, 2)]);
        assert_eq!(
            coeffs_recursion_a(3).x,
            vec![int(1), rat(-35, 2), rat(259, 2), rat(-675, 4)]
        );
    }

    #[test]
    fn recursion_b_tables() {
        // x_1 = -(2n+1)(2n)(2n-1)/12, cross-checked against every table.
        for n in 1..=5u32 {
            let m = i64::from(n);
            let expected = rat(-(2 * m + 1) * (2 * m) * (2 * m - 1), 12);
            assert_eq!(coeffs_recursion_b(n).x[1], expected);
        }
        assert_eq!(
            coeffs_recursion_b(4).x,
            vec![int(1), int(-42), int(987), int(-9687), rat(33075, 2)]
        );
        assert_eq!(
            coeffs_recursion_b(5).x,
            vec![
                int(1),
                rat(-165, 2),
                int(4389),
                rat(-259215, 2),
                rat(3171663, 2),
                rat(-13395375, 4)
            ]
        );
    }

    #[test]
    fn series_tables() {
        assert_eq!(coeffs_series(1).x, vec![int(1), rat(-1, 2)]);
        assert_eq!(coeffs_series(2).x, vec![int(1), int(-5), rat(9, 2)]);
    }

    #[test]
    fn routes_agree_to_30() {
        assert!(verify_routes(30).is_pass());
    }

    #[test]
    fn scasimir_tables() {
        // n = 1: [1 1̄] - 1/2.
        let mut expected = OmegaElement::single(1, br(1, &[1, 2]));
        expected.add_term(Bracket::empty(), rat(-1, 2));
        assert_eq!(scasimir(1), expected);

        // n = 2: [1 1̄ 2 2̄] - 5([1 1̄] + [2 2̄]) + 9/2, over sorted brackets.
        let mut expected = OmegaElement::single(2, br(2, &[1, 2, 3, 4])).scale(&int(-1));
        expected.add_term(br(2, &[1, 3]), int(-5));
        expected.add_term(br(2, &[2, 4]), int(-5));
        expected.add_term(Bracket::empty(), rat(9, 2));
        assert_eq!(scasimir(2), expected);

        // n = 3 coefficients, read back per pair count.
        let sc3 = scasimir(3);
        assert_eq!(sc3.coeff(&Bracket::empty()), rat(-675, 4));
        assert_eq!(sc3.coeff(&br(3, &[1, 4])), rat(259, 2));
        // two pairs kept: interleaved sign is -1.
        assert_eq!(sc3.coeff(&br(3, &[1, 2, 4, 5])), rat(35, 2));
        // all three pairs: sign (-1)^3 = -1.
        assert_eq!(sc3.coeff(&br(3, &[1, 2, 3, 4, 5, 6])), int(-1));
    }

    #[test]
    fn scasimir_equals_trivial_hwv() {
        for n in [1u32, 2] {
            let hwvs = crate::omega::highest_weight_vectors(n);
            assert_eq!(hwvs[0].1, scasimir(n), "n={n}");
        }
    }

    #[test]
    fn ghost_small_n() {
        assert!(verify_ghost(1).is_pass());
        assert!(verify_ghost(2).is_pass());
    }

    #[test]
    fn ghost_in_omega_small_n() {
        assert!(verify_ghost_in_omega(1).is_pass());
        assert!(verify_ghost_in_omega(2).is_pass());
    }

    #[test]
    fn sum_rule_examples() {
        // n=1: 1/2 - 1/2; n=2: 1/2 - 5 + 9/2.
        assert!(sum_rule(1).is_zero());
        assert!(sum_rule(2).is_zero());
        assert!(sum_rule(50).is_zero());
    }

    #[test]
    fn square_is_central_n1() {
        assert!(verify_square_central(1).is_pass());
    }

    #[test]
    fn square_is_central_n2() {
        assert!(verify_square_central(2).is_pass());
    }

    #[test]
    fn naive_oracle_agrees_on_scasimir_product() {
        // Differential test on a real workload: Sc⁽²⁾ · s(3).
        let sc = scasimir_pbw(2);
        let x = multiply(&sc, &crate::algebra::gen_odd(2, 3));
        let fast = normal_order(&x, GeneratorOrder::Standard);
        let slow = crate::pbw::naive_normal_order(&x, GeneratorOrder::Standard);
        assert_eq!(fast, slow);
    }
}
