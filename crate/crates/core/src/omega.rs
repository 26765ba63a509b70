//! The bracket space Ω: completely antisymmetrized products of odd
//! generators, the closed-form `sp(2n)` action on them, projection of
//! arbitrary elements onto `U(sp(2n)) ⊗ Ω` coordinates, weights, highest
//! weight vectors, and the `osp(1|2)` filtration dimension check.
//!
//! A bracket `[a_1 .. a_p]` is the signed sum over all permutations of
//! `s(a_1) .. s(a_p)`; it vanishes when two indices coincide, and the
//! empty bracket is the unit. Ω is the span of the `4^n` brackets with
//! strictly increasing index lists.

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_traits::Zero;

use crate::action::triangle;
use crate::algebra::{metric_sign, multiply, Element, Generator, Word};
use crate::error::AlgebraError;
use crate::linalg::{RatMatrix, RowSpace};
use crate::pbw::{normal_order, GeneratorOrder};
use crate::report::Report;
use crate::scalar::{binom, fact, int, Rat};

/// A basis vector of Ω: a strictly increasing list of odd-generator
/// indices. The empty list is the unit bracket.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Bracket(Vec<u32>);

impl Bracket {
    pub fn empty() -> Self {
        Bracket(Vec::new())
    }

    /// Validates strict monotonicity and the index range.
    pub fn new(n: u32, indices: Vec<u32>) -> Result<Self, AlgebraError> {
        for pair in indices.windows(2) {
            if pair[0] >= pair[1] {
                return Err(AlgebraError::InvalidBracket(indices.clone()));
            }
        }
        for &i in &indices {
            if i == 0 || i > 2 * n {
                return Err(AlgebraError::IndexOutOfRange {
                    index: i,
                    n,
                    max: 2 * n,
                });
            }
        }
        Ok(Bracket(indices))
    }

    /// Sorts an arbitrary index list into a canonical bracket, returning
    /// the antisymmetric sign, or `None` when an index repeats (the
    /// bracket vanishes).
    pub fn from_unsorted(indices: &[u32]) -> Option<(Bracket, i64)> {
        let mut v = indices.to_vec();
        let mut sign = 1i64;
        // insertion sort, counting transpositions
        for i in 1..v.len() {
            let mut j = i;
            while j > 0 && v[j - 1] > v[j] {
                v.swap(j - 1, j);
                sign = -sign;
                j -= 1;
            }
        }
        if v.windows(2).any(|p| p[0] == p[1]) {
            return None;
        }
        Some((Bracket(v), sign))
    }

    pub fn indices(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, idx: u32) -> bool {
        self.0.binary_search(&idx).is_ok()
    }
}

impl fmt::Display for Bracket {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|i| i.to_string()).collect();
        write!(f, "[{}]", parts.join(" "))
    }
}

/// Rational linear combination of brackets over a fixed `n`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OmegaElement {
    n: u32,
    terms: BTreeMap<Bracket, Rat>,
}

impl OmegaElement {
    pub fn zero(n: u32) -> Self {
        OmegaElement {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn scalar(n: u32, c: Rat) -> Self {
        let mut e = OmegaElement::zero(n);
        e.add_term(Bracket::empty(), c);
        e
    }

    pub fn single(n: u32, b: Bracket) -> Self {
        let mut e = OmegaElement::zero(n);
        e.add_term(b, int(1));
        e
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Bracket, &Rat)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, b: &Bracket) -> Rat {
        self.terms.get(b).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn add_term(&mut self, b: Bracket, c: Rat) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(b) {
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

    pub fn add_assign(&mut self, other: &OmegaElement) {
        assert_eq!(self.n, other.n, "mismatched n");
        for (b, c) in &other.terms {
            self.add_term(b.clone(), c.clone());
        }
    }

    pub fn scale(&self, c: &Rat) -> OmegaElement {
        if c.is_zero() {
            return OmegaElement::zero(self.n);
        }
        let mut out = OmegaElement::zero(self.n);
        for (b, x) in &self.terms {
            out.terms.insert(b.clone(), x * c);
        }
        out
    }

    /// Longest bracket in the support, if there is a unique one.
    pub fn unique_leading_bracket(&self) -> Option<&Bracket> {
        let max_len = self.terms.keys().map(|b| b.len()).max()?;
        let mut leading = self.terms.keys().filter(|b| b.len() == max_len);
        let first = leading.next()?;
        if leading.next().is_some() {
            None
        } else {
            Some(first)
        }
    }
}

impl std::ops::Add for &OmegaElement {
    type Output = OmegaElement;
    fn add(self, rhs: &OmegaElement) -> OmegaElement {
        let mut out = self.clone();
        out.add_assign(rhs);
        out
    }
}

impl std::ops::Sub for &OmegaElement {
    type Output = OmegaElement;
    fn sub(self, rhs: &OmegaElement) -> OmegaElement {
        let mut out = self.clone();
        out.add_assign(&rhs.scale(&int(-1)));
        out
    }
}

impl fmt::Display for OmegaElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rendered = crate::scalar::join_signed_terms(self.terms.iter().map(|(b, c)| {
            let body = if b.is_empty() {
                String::new()
            } else {
                b.to_string()
            };
            (c, body)
        }));
        write!(f, "{rendered}")
    }
}

/// Coordinates of an element in `U(sp(2n)) ⊗ Ω`: a map from brackets to
/// purely even elements.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TensorElement {
    n: u32,
    terms: BTreeMap<Bracket, Element>,
}

impl TensorElement {
    pub fn zero(n: u32) -> Self {
        TensorElement {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Bracket, &Element)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, b: &Bracket) -> Element {
        self.terms
            .get(b)
            .cloned()
            .unwrap_or_else(|| Element::zero(self.n))
    }

    pub fn add_term(&mut self, b: Bracket, e: &Element) {
        debug_assert_eq!(e.max_odd_degree(), 0, "tensor coefficient must be even");
        if e.is_zero() {
            return;
        }
        match self.terms.entry(b) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(e.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                o.get_mut().add_assign(e);
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }
}

thread_local! {
    static EXPAND_CACHE: RefCell<HashMap<(u32, Vec<u32>), Element>> = RefCell::new(HashMap::new());
}

/// PBW normal form of the bracket `[a_1 .. a_p]`, via the first-position
/// expansion `[a_1..a_p] = Σ_i (-1)^(i-1) s(a_i) [.. without a_i ..]`
/// memoized over index subsets (2^p subproblems instead of p! terms).
pub fn bracket_expand(n: u32, b: &Bracket) -> Element {
    expand_indices(n, b.indices())
}

fn expand_indices(n: u32, indices: &[u32]) -> Element {
    if indices.is_empty() {
        return Element::unit(n);
    }
    let key = (n, indices.to_vec());
    if let Some(hit) = EXPAND_CACHE.with(|c| c.borrow().get(&key).cloned()) {
        return hit;
    }
    let mut acc = Element::zero(n);
    for (i, &a) in indices.iter().enumerate() {
        let mut rest = indices.to_vec();
        rest.remove(i);
        let sub = expand_indices(n, &rest);
        let head = Element::generator(n, Generator::odd(a)).unwrap();
        let term = normal_order(&multiply(&head, &sub), GeneratorOrder::Standard);
        let sign = if i % 2 == 0 { int(1) } else { int(-1) };
        acc.add_assign(&term.scale(&sign));
    }
    EXPAND_CACHE.with(|c| {
        c.borrow_mut().insert(key, acc.clone());
    });
    acc
}

/// Expands a whole Ω element into PBW form.
pub fn omega_expand(w: &OmegaElement) -> Element {
    let mut out = Element::zero(w.n());
    for (b, c) in w.terms() {
        out.add_assign(&bracket_expand(w.n(), b).scale(c));
    }
    out
}

/// Closed form of `s(b,c) ▷ [a_1 .. a_p]`: each `a_i` is replaced in
/// turn, weighted by `-g_{b a_i}` resp. `-g_{c a_i}`; brackets with
/// repeated indices drop out and the rest are re-sorted with
/// antisymmetric signs.
pub fn sp_action_on_bracket(n: u32, g: Generator, b: &Bracket) -> OmegaElement {
    let (gb, gc) = match g {
        Generator::Even(x, y) => (x, y),
        Generator::Odd(_) => panic!("sp_action_on_bracket requires an even generator"),
    };
    let mut out = OmegaElement::zero(n);
    for (probe, replacement) in [(gb, gc), (gc, gb)] {
        for (i, &ai) in b.indices().iter().enumerate() {
            let gval = metric_sign(n, probe, ai);
            if gval == 0 {
                continue;
            }
            let mut idx = b.indices().to_vec();
            idx[i] = replacement;
            if let Some((sorted, sign)) = Bracket::from_unsorted(&idx) {
                out.add_term(sorted, int(-gval * sign));
            }
        }
    }
    out
}

/// Linear extension of [`sp_action_on_bracket`] to Ω elements.
pub fn sp_action(g: Generator, w: &OmegaElement) -> OmegaElement {
    let mut out = OmegaElement::zero(w.n());
    for (b, c) in w.terms() {
        out.add_assign(&sp_action_on_bracket(w.n(), g, b).scale(c));
    }
    out
}

/// Coordinates of `x` in `U(sp(2n)) ⊗ Ω`, by peeling from the top odd
/// degree down: the top-degree words with odd tail `w` contribute their
/// even prefix over `p!` at `Bracket(w)`, the matching expansion is
/// subtracted, and the odd degree strictly drops.
pub fn project_to_tensor(x: &Element) -> TensorElement {
    let n = x.n();
    let mut rest = normal_order(x, GeneratorOrder::Standard);
    let mut out = TensorElement::zero(n);
    while !rest.is_zero() {
        let p = rest.max_odd_degree();
        if p == 0 {
            out.add_term(Bracket::empty(), &rest);
            break;
        }
        let mut groups: BTreeMap<Vec<u32>, Element> = BTreeMap::new();
        for (w, c) in rest.terms() {
            if w.odd_degree() != p {
                continue;
            }
            let (prefix, tail) = split_normal_word(w);
            let entry = groups.entry(tail).or_insert_with(|| Element::zero(n));
            entry.add_term(Word(prefix), c.clone());
        }
        let inv_fact = Rat::new(1.into(), fact(p as u64));
        for (tail, even_coeff) in groups {
            let coeff = even_coeff.scale(&inv_fact);
            let bracket =
                Bracket::new(n, tail).expect("normal-form odd tail is strictly increasing");
            let expansion = bracket_expand(n, &bracket);
            let subtract = normal_order(&multiply(&coeff, &expansion), GeneratorOrder::Standard);
            rest = &rest - &subtract;
            out.add_term(bracket, &coeff);
        }
        debug_assert!(rest.is_zero() || rest.max_odd_degree() < p);
    }
    out
}

fn split_normal_word(w: &Word) -> (Vec<Generator>, Vec<u32>) {
    let first_odd = w.0.iter().position(|g| g.is_odd()).unwrap_or(w.0.len());
    let prefix = w.0[..first_odd].to_vec();
    let tail: Vec<u32> = w.0[first_odd..]
        .iter()
        .map(|g| match g {
            Generator::Odd(a) => *a,
            Generator::Even(_, _) => panic!("word not in standard normal form: {w}"),
        })
        .collect();
    (prefix, tail)
}

/// Reconstructs the element a tensor decomposition came from.
pub fn tensor_reconstruct(t: &TensorElement) -> Element {
    let mut out = Element::zero(t.n());
    for (b, coeff) in t.terms() {
        let expansion = bracket_expand(t.n(), b);
        out.add_assign(&normal_order(
            &multiply(coeff, &expansion),
            GeneratorOrder::Standard,
        ));
    }
    out
}

/// `g ▷ w` computed semantically (expand, act, re-project). All tensor
/// coordinates must come out scalar — anything else would falsify the
/// stability of Ω and is escalated as [`AlgebraError::NonScalarResidual`].
pub fn triangle_on_omega(g: Generator, w: &OmegaElement) -> Result<OmegaElement, AlgebraError> {
    let n = w.n();
    let x = omega_expand(w);
    let acted = triangle(g, &x);
    let tensor = project_to_tensor(&acted);
    let mut out = OmegaElement::zero(n);
    for (b, coeff) in tensor.terms() {
        match coeff.as_scalar() {
            Some(c) => out.add_term(b.clone(), c),
            None => {
                return Err(AlgebraError::NonScalarResidual {
                    bracket: b.to_string(),
                    residual: coeff.to_string(),
                })
            }
        }
    }
    Ok(out)
}

/// Global sign relating raw Cartan eigenvalues to reported weights, fixed
/// once by requiring weight([1]) = (1, 0, .., 0).
pub const WEIGHT_SIGN: i64 = -1;

/// The `n` Cartan eigenvalues of `w` (times [`WEIGHT_SIGN`]), or an error
/// if `w` is not a simultaneous eigenvector of the `s(α, ᾱ)` actions.
pub fn weight_vector(w: &OmegaElement) -> Result<Vec<Rat>, AlgebraError> {
    let n = w.n();
    if w.is_zero() {
        return Err(AlgebraError::NotAWeightVector("zero vector".into()));
    }
    let mut weight = Vec::with_capacity(n as usize);
    for alpha in 1..=n {
        let cartan = Generator::even(alpha, alpha + n);
        let acted = sp_action(cartan, w);
        let (b0, c0) = w.terms().next().unwrap();
        let lambda = acted.coeff(b0) / c0.clone();
        if acted != w.scale(&lambda) {
            return Err(AlgebraError::NotAWeightVector(format!(
                "{w} is not an eigenvector of s({alpha},{})",
                alpha + n
            )));
        }
        weight.push(lambda * int(WEIGHT_SIGN));
    }
    Ok(weight)
}

/// All `4^n` basis brackets, ordered by (length, lexicographic indices).
pub fn all_brackets(n: u32) -> Vec<Bracket> {
    let m = 2 * n;
    let mut out: Vec<Bracket> = (0u64..(1 << m))
        .map(|mask| {
            let idx: Vec<u32> = (1..=m).filter(|i| mask & (1 << (i - 1)) != 0).collect();
            Bracket(idx)
        })
        .collect();
    out.sort_by(|a, b| (a.len(), &a.0).cmp(&(b.len(), &b.0)));
    out
}

/// The simple positive root generators `{s(1, 2̄), .., s(n-1, n̄), s(n)}`.
pub fn simple_positive_roots(n: u32) -> Vec<Generator> {
    let mut roots = Vec::new();
    for alpha in 1..n {
        roots.push(Generator::even(alpha, alpha + 1 + n));
    }
    roots.push(Generator::odd(n));
    roots
}

/// Raw Cartan eigenvalue tuple of a basis bracket (before the global
/// sign); the `s(α, ᾱ)` action is diagonal on brackets.
fn raw_weight(n: u32, b: &Bracket) -> Vec<i64> {
    (1..=n)
        .map(|alpha| {
            let mut e = 0i64;
            if b.contains(alpha + n) {
                e += 1;
            }
            if b.contains(alpha) {
                e -= 1;
            }
            e
        })
        .collect()
}

/// Sorted index list and paper-order sign of the leading bracket of the
/// `j`-th highest weight vector: indices `{1..n} ∪ {n+j+1..2n}`. The
/// paired part is conventionally written interleaved
/// (`j+1 (j+1)‾ .. n n̄`), which differs from the sorted list by
/// `(-1)^(m(m-1)/2)` with `m = n - j`.
pub fn hwv_leading_bracket(n: u32, j: u32) -> (Bracket, i64) {
    let mut idx: Vec<u32> = (1..=n).collect();
    idx.extend(n + j + 1..=2 * n);
    let m = i64::from(n - j);
    let sign = if (m * (m - 1) / 2) % 2 == 0 { 1 } else { -1 };
    (Bracket(idx), sign)
}

/// Basis of the joint kernel of the simple positive root actions on Ω,
/// computed by exact Gaussian elimination: one vector per highest weight
/// `(1,..,1,0,..,0)`, each normalized so its leading bracket carries
/// coefficient 1 in the interleaved-order convention. Sorted by the
/// number of 1s in the weight.
pub fn highest_weight_vectors(n: u32) -> Vec<(Vec<Rat>, OmegaElement)> {
    let basis = all_brackets(n);
    let dim = basis.len();
    let index: HashMap<&Bracket, usize> = basis.iter().zip(0..).collect();
    let roots = simple_positive_roots(n);

    let mut stacked = RatMatrix::zero(roots.len() * dim, dim);
    for (r, &g) in roots.iter().enumerate() {
        for (j, b) in basis.iter().enumerate() {
            let image = match g {
                Generator::Even(_, _) => sp_action_on_bracket(n, g, b),
                Generator::Odd(_) => triangle_on_omega(g, &OmegaElement::single(n, b.clone()))
                    .expect("Ω is stable under the triangle action"),
            };
            for (bb, c) in image.terms() {
                stacked.set(r * dim + index[bb], j, c.clone());
            }
        }
    }

    let kernel = stacked.kernel_basis();

    // Split each kernel vector into weight-homogeneous components; the
    // root actions shift weights, so every component is itself in the
    // kernel. Distinct highest weights have one-dimensional slices.
    let mut slices: BTreeMap<Vec<i64>, RowSpace> = BTreeMap::new();
    let mut representative: BTreeMap<Vec<i64>, Vec<Rat>> = BTreeMap::new();
    for v in &kernel {
        let mut components: BTreeMap<Vec<i64>, Vec<Rat>> = BTreeMap::new();
        for (j, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let wt = raw_weight(n, &basis[j]);
            components.entry(wt).or_insert_with(|| vec![Rat::zero(); dim])[j] = c.clone();
        }
        for (wt, comp) in components {
            for (r, row) in (0..stacked.rows()).map(|r| (r, stacked.row(r))) {
                let dot: Rat = row.iter().zip(&comp).map(|(a, b)| a * b).sum();
                assert!(dot.is_zero(), "weight slice escaped the kernel at row {r}");
            }
            representative.entry(wt.clone()).or_insert_with(|| comp.clone());
            slices
                .entry(wt)
                .or_insert_with(|| RowSpace::new(dim))
                .insert(comp);
        }
    }
    for (raw, space) in &slices {
        assert_eq!(
            space.rank(),
            1,
            "expected a one-dimensional kernel slice at raw weight {raw:?}"
        );
    }

    let mut result = Vec::new();
    for coords in representative.values() {
        let mut w = OmegaElement::zero(n);
        for (j, c) in coords.iter().enumerate() {
            w.add_term(basis[j].clone(), c.clone());
        }
        let weight = weight_vector(&w).expect("kernel slice must be a weight vector");
        let ones = weight.iter().filter(|x| **x == int(1)).count() as u32;
        let (leading, paper_sign) = hwv_leading_bracket(n, ones);
        let lead = w
            .unique_leading_bracket()
            .expect("highest weight vector has a unique top bracket")
            .clone();
        assert_eq!(lead, leading, "unexpected leading bracket for j={ones}");
        let norm = int(paper_sign) / w.coeff(&lead);
        result.push((weight, w.scale(&norm)));
    }

    result.sort_by_key(|(weight, _)| weight.iter().filter(|x| **x == int(1)).count());
    result
}

/// Dimension of the submodule generated by `v` under the triangle action
/// of all generators, computed by exact rank closure.
pub fn submodule_dimension(v: &OmegaElement) -> usize {
    let n = v.n();
    let basis = all_brackets(n);
    let index: HashMap<&Bracket, usize> = basis.iter().zip(0..).collect();
    let dim = basis.len();
    let to_coords = |w: &OmegaElement| {
        let mut coords = vec![Rat::zero(); dim];
        for (b, c) in w.terms() {
            coords[index[b]] = c.clone();
        }
        coords
    };

    let mut space = RowSpace::new(dim);
    let mut queue = vec![v.clone()];
    let gens = crate::algebra::all_generators(n);
    while let Some(u) = queue.pop() {
        if !space.insert(to_coords(&u)) {
            continue;
        }
        for &g in &gens {
            let image = match g {
                Generator::Even(_, _) => sp_action(g, &u),
                Generator::Odd(_) => {
                    triangle_on_omega(g, &u).expect("Ω is stable under the triangle action")
                }
            };
            if !image.is_zero() {
                queue.push(image);
            }
        }
    }
    space.rank()
}

/// Dimension identity of the `osp(1|2)` filtration split:
/// `4·C(d+3,3) = (2d+2)^2 + 4·C(d+1,3)`, i.e. `U_d ⊗ Ω` decomposes into
/// the ladder `R_(d+1/2) ⊕ .. ⊕ R_0` (dims `4j+1`) plus `C·U_(d-2) ⊗ Ω`.
pub fn check_osp12_filtration(d: u32) -> bool {
    let lhs = binom(u64::from(d) + 3, 3) * 4;
    let ladder: num_bigint::BigInt = (2 * u64::from(d) + 2).pow(2).into();
    let rhs = ladder + binom(u64::from(d) + 1, 3) * 4;
    lhs == rhs
}

/// Stability sweep: every (generator, bracket) pair must act inside Ω,
/// and even generators must match the closed-form substitution action.
pub fn verify_stability(n: u32) -> Report {
    Report::run(&format!("stability n={n}"), |c| {
        let brackets = all_brackets(n);
        for g in crate::algebra::all_generators(n) {
            for b in &brackets {
                let w = OmegaElement::single(n, b.clone());
                match triangle_on_omega(g, &w) {
                    Err(e) => c.fail(format!("{g} ▷ {b}: {e}")),
                    Ok(result) => {
                        if let Generator::Even(_, _) = g {
                            let closed = sp_action_on_bracket(n, g, b);
                            c.check(result == closed, || {
                                format!(
                                    "{g} ▷ {b}: semantic action {result} != closed form {closed}"
                                )
                            });
                        }
                    }
                }
            }
        }
    })
}

/// Highest-weight sweep: `n + 1` vectors, the advertised weights and
/// leading brackets, lower terms obtained by deleting conjugate pairs,
/// and submodule dimensions `C(2n+1, j)` summing to `4^n`.
pub fn verify_hwv(n: u32) -> Report {
    Report::run(&format!("hwv n={n}"), |c| {
        let hwvs = highest_weight_vectors(n);
        c.check(hwvs.len() == n as usize + 1, || {
            format!("expected {} vectors, got {}", n + 1, hwvs.len())
        });
        let mut total = num_bigint::BigInt::from(0);
        for (j, (weight, v)) in hwvs.iter().enumerate() {
            let expected_weight: Vec<Rat> = (0..n as usize)
                .map(|i| if i < j { int(1) } else { int(0) })
                .collect();
            c.check(weight == &expected_weight, || {
                format!("vector {j} has weight {weight:?}, expected {expected_weight:?}")
            });
            let (leading, sign) = hwv_leading_bracket(n, j as u32);
            c.check(v.coeff(&leading) == int(sign), || {
                format!("vector {j} is not normalized to its leading bracket")
            });
            for (b, _) in v.terms() {
                c.check(bracket_is_pair_deletion(n, j as u32, b), || {
                    format!("vector {j} contains unexpected bracket {b}")
                });
            }
            let dim = submodule_dimension(v);
            let expected_dim = binom(2 * u64::from(n) + 1, j as u64);
            c.check(num_bigint::BigInt::from(dim) == expected_dim, || {
                format!("submodule of vector {j} has dim {dim}, expected {expected_dim}")
            });
            total += num_bigint::BigInt::from(dim);
        }
        let full = num_bigint::BigInt::from(4u32).pow(n);
        c.check(total == full, || {
            format!("submodule dimensions sum to {total}, expected {full}")
        });
    })
}

/// True if `b` equals the leading bracket of `v_j` with some conjugate
/// pairs `α, ᾱ` (for `α > j`) removed.
fn bracket_is_pair_deletion(n: u32, j: u32, b: &Bracket) -> bool {
    for alpha in 1..=j {
        if !b.contains(alpha) {
            return false;
        }
    }
    for &i in b.indices() {
        let alpha = if i > n { i - n } else { i };
        if alpha <= j {
            if i > n {
                return false; // barred partners of the singles never appear
            }
            continue;
        }
        if !(b.contains(alpha) && b.contains(alpha + n)) {
            return false;
        }
    }
    true
}

/// Checks the filtration dimension identity for all degrees up to `d_max`.
pub fn verify_filtration(d_max: u32) -> Report {
    Report::run(&format!("filtration d<={d_max}"), |c| {
        for d in 0..=d_max {
            c.check(check_osp12_filtration(d), || {
                format!("dimension identity fails at degree {d}")
            });
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::term;
    use crate::sample::rng_from_seed;
    use crate::scalar::rat;
    use rand::Rng;

    fn o(a: u32) -> Generator {
        Generator::odd(a)
    }

    fn e(a: u32, b: u32) -> Generator {
        Generator::even(a, b)
    }

    fn br(n: u32, idx: &[u32]) -> Bracket {
        Bracket::new(n, idx.to_vec()).unwrap()
    }

    #[test]
    fn bracket_construction() {
        assert!(Bracket::new(1, vec![1, 2]).is_ok());
        assert!(Bracket::new(1, vec![2, 1]).is_err());
        assert!(Bracket::new(1, vec![1, 1]).is_err());
        assert!(Bracket::new(1, vec![3]).is_err());
        assert_eq!(
            Bracket::from_unsorted(&[3, 1, 2]),
            Some((Bracket(vec![1, 2, 3]), 1))
        );
        assert_eq!(
            Bracket::from_unsorted(&[2, 1]),
            Some((Bracket(vec![1, 2]), -1))
        );
        assert_eq!(Bracket::from_unsorted(&[1, 2, 1]), None);
    }

    #[test]
    fn expand_unit_and_singleton() {
        assert_eq!(bracket_expand(1, &Bracket::empty()), Element::unit(1));
        assert_eq!(bracket_expand(1, &br(1, &[1])), term(1, 1, 1, &[o(1)]));
    }

    #[test]
    fn expand_conjugate_pair() {
        // [1 1̄] = s(1)s(2) - s(2)s(1) -> 2 s(1)s(2) - s(1,2)  (n = 1)
        let got = bracket_expand(1, &br(1, &[1, 2]));
        let expected = &term(1, 2, 1, &[o(1), o(2)]) - &term(1, 1, 1, &[e(1, 2)]);
        assert_eq!(got, expected);
    }

    #[test]
    fn expand_unbarred_pair() {
        // n = 2: [1 2] -> 2 s(1)s(2) - s(1,2)
        let got = bracket_expand(2, &br(2, &[1, 2]));
        let expected = &term(2, 2, 1, &[o(1), o(2)]) - &term(2, 1, 1, &[e(1, 2)]);
        assert_eq!(got, expected);
    }

    #[test]
    fn expand_leading_coefficient_is_factorial() {
        // The top odd word a_1 < .. < a_p carries coefficient p!.
        for (n, idx) in [(2u32, vec![1, 2, 3]), (2, vec![1, 2, 3, 4])] {
            let b = br(n, &idx);
            let expansion = bracket_expand(n, &b);
            let top = Word(idx.iter().map(|&a| Generator::odd(a)).collect());
            assert_eq!(
                expansion.coeff(&top),
                Rat::new(fact(idx.len() as u64), 1.into())
            );
        }
    }

    #[test]
    fn project_examples() {
        // 2 s(1)s(2) - s(1,2) has coordinate 1 at [1 1̄]  (n = 1).
        let x = &term(1, 2, 1, &[o(1), o(2)]) - &term(1, 1, 1, &[e(1, 2)]);
        let t = project_to_tensor(&x);
        assert_eq!(t.coeff(&br(1, &[1, 2])), Element::unit(1));
        assert_eq!(t.num_terms(), 1);

        // A purely even element sits at the empty bracket.
        let x = term(1, 1, 1, &[e(1, 2)]);
        let t = project_to_tensor(&x);
        assert_eq!(t.coeff(&Bracket::empty()), x);
        assert_eq!(t.num_terms(), 1);

        // A single odd generator is its own bracket.
        let x = term(1, 1, 1, &[o(1)]);
        let t = project_to_tensor(&x);
        assert_eq!(t.coeff(&br(1, &[1])), Element::unit(1));
        assert_eq!(t.num_terms(), 1);
    }

    #[test]
    fn project_reconstruct_roundtrip() {
        let mut rng = rng_from_seed(23);
        for n in [1u32, 2] {
            for _ in 0..10 {
                let x = crate::sample::random_element(&mut rng, n, 3, 4);
                let nf = normal_order(&x, GeneratorOrder::Standard);
                let t = project_to_tensor(&nf);
                assert_eq!(tensor_reconstruct(&t), nf);
            }
        }
    }

    #[test]
    fn reconstruct_project_roundtrip_on_random_tensors() {
        let mut rng = rng_from_seed(29);
        for n in [1u32, 2] {
            let brackets = all_brackets(n);
            for _ in 0..8 {
                let mut t = TensorElement::zero(n);
                for b in &brackets {
                    if rng.gen_bool(0.4) {
                        // random even coefficient
                        let mut coeff = Element::zero(n);
                        let len = rng.gen_range(0..=2);
                        let word: Vec<Generator> = (0..len)
                            .map(|_| {
                                Generator::even(
                                    rng.gen_range(1..=2 * n),
                                    rng.gen_range(1..=2 * n),
                                )
                            })
                            .collect();
                        coeff.add_term(Word(word), rat(rng.gen_range(1..=5), 1));
                        let coeff = normal_order(&coeff, GeneratorOrder::Standard);
                        t.add_term(b.clone(), &coeff);
                    }
                }
                let x = tensor_reconstruct(&t);
                assert_eq!(project_to_tensor(&x), t);
            }
        }
    }

    #[test]
    fn sp_action_examples() {
        // s(1,1̄) ▷ [1] = -[1]  (n = 1)
        let got = sp_action_on_bracket(1, e(1, 2), &br(1, &[1]));
        assert_eq!(got, OmegaElement::single(1, br(1, &[1])).scale(&int(-1)));

        // s(1,1) ▷ [1̄] = 2[1]
        let got = sp_action_on_bracket(1, e(1, 1), &br(1, &[2]));
        assert_eq!(got, OmegaElement::single(1, br(1, &[1])).scale(&int(2)));

        // s(1,1) ▷ [1] = 0 (repeated index)
        let got = sp_action_on_bracket(1, e(1, 1), &br(1, &[1]));
        assert!(got.is_zero());
    }

    #[test]
    fn triangle_on_omega_examples() {
        // s(1) ▷ [1̄] = [1 1̄]
        let got = triangle_on_omega(o(1), &OmegaElement::single(1, br(1, &[2]))).unwrap();
        assert_eq!(got, OmegaElement::single(1, br(1, &[1, 2])));

        // s(1) ▷ [1] = 0
        let got = triangle_on_omega(o(1), &OmegaElement::single(1, br(1, &[1]))).unwrap();
        assert!(got.is_zero());

        // s(1) ▷ ([1 1̄] - 1/2) = 0: the n = 1 ghost.
        let mut sc = OmegaElement::single(1, br(1, &[1, 2]));
        sc.add_term(Bracket::empty(), rat(-1, 2));
        let got = triangle_on_omega(o(1), &sc).unwrap();
        assert!(got.is_zero());
    }

    #[test]
    fn weight_examples() {
        // weight([1]) = (1): this pins the global sign.
        let raw = sp_action(e(1, 2), &OmegaElement::single(1, br(1, &[1])));
        assert_eq!(raw, OmegaElement::single(1, br(1, &[1])).scale(&int(-1)));
        let w = weight_vector(&OmegaElement::single(1, br(1, &[1]))).unwrap();
        assert_eq!(w, vec![int(1)]);

        let mut sc = OmegaElement::single(1, br(1, &[1, 2]));
        sc.add_term(Bracket::empty(), rat(-1, 2));
        assert_eq!(weight_vector(&sc).unwrap(), vec![int(0)]);

        let w = weight_vector(&OmegaElement::single(2, br(2, &[1, 2]))).unwrap();
        assert_eq!(w, vec![int(1), int(1)]);

        // [1] + [1 1̄] mixes weights.
        let mut bad = OmegaElement::single(1, br(1, &[1]));
        bad.add_term(br(1, &[1, 2]), int(1));
        assert!(weight_vector(&bad).is_err());
    }

    #[test]
    fn omega_dimension_is_4_to_n() {
        for n in 1..=5u32 {
            assert_eq!(all_brackets(n).len(), 4usize.pow(n));
        }
    }

    #[test]
    fn hwv_n1() {
        let hwvs = highest_weight_vectors(1);
        assert_eq!(hwvs.len(), 2);
        // j = 0: [1 1̄] - 1/2 with weight (0).
        let mut sc = OmegaElement::single(1, br(1, &[1, 2]));
        sc.add_term(Bracket::empty(), rat(-1, 2));
        assert_eq!(hwvs[0].0, vec![int(0)]);
        assert_eq!(hwvs[0].1, sc);
        // j = 1: [1] with weight (1).
        assert_eq!(hwvs[1].0, vec![int(1)]);
        assert_eq!(hwvs[1].1, OmegaElement::single(1, br(1, &[1])));
    }

    #[test]
    fn hwv_n2_weights() {
        let hwvs = highest_weight_vectors(2);
        assert_eq!(hwvs.len(), 3);
        assert_eq!(hwvs[0].0, vec![int(0), int(0)]);
        assert_eq!(hwvs[1].0, vec![int(1), int(0)]);
        assert_eq!(hwvs[2].0, vec![int(1), int(1)]);
        // j = 2 leading term: [1 2], nothing else.
        assert_eq!(hwvs[2].1, OmegaElement::single(2, br(2, &[1, 2])));
    }

    #[test]
    fn hwv_count_n3() {
        assert_eq!(highest_weight_vectors(3).len(), 4);
    }

    #[test]
    fn submodule_dimensions_n1() {
        assert_eq!(
            submodule_dimension(&OmegaElement::single(1, br(1, &[1]))),
            3
        );
        let mut sc = OmegaElement::single(1, br(1, &[1, 2]));
        sc.add_term(Bracket::empty(), rat(-1, 2));
        assert_eq!(submodule_dimension(&sc), 1);
    }

    #[test]
    fn submodule_dimensions_n2_sum_to_16() {
        let hwvs = highest_weight_vectors(2);
        let dims: Vec<usize> = hwvs.iter().map(|(_, v)| submodule_dimension(v)).collect();
        assert_eq!(dims, vec![1, 5, 10]);
        assert_eq!(dims.iter().sum::<usize>(), 16);
    }

    #[test]
    fn filtration_dimension_identity() {
        assert!(check_osp12_filtration(0)); // 4 = 4 + 0
        assert!(check_osp12_filtration(2)); // 40 = 36 + 4
        assert!(check_osp12_filtration(3)); // 80 = 64 + 16
        assert!(verify_filtration(10).is_pass());
    }

    #[test]
    fn stability_exhaustive_small_n() {
        assert!(verify_stability(1).is_pass());
        assert!(verify_stability(2).is_pass());
    }

    #[test]
    fn sp_action_consistency_sampled_n3() {
        let mut rng = rng_from_seed(31);
        let brackets = all_brackets(3);
        for _ in 0..25 {
            let b = &brackets[rng.gen_range(0..brackets.len())];
            let a = rng.gen_range(1..=6u32);
            let bb = rng.gen_range(1..=6u32);
            let g = e(a, bb);
            let semantic =
                triangle_on_omega(g, &OmegaElement::single(3, b.clone())).unwrap();
            assert_eq!(semantic, sp_action_on_bracket(3, g, b));
        }
    }

    #[test]
    fn verify_hwv_reports_pass() {
        assert!(verify_hwv(1).is_pass());
        assert!(verify_hwv(2).is_pass());
    }
}
