//! Finite-dimensional matrix oracle: the `(2n+1)`-dimensional fundamental
//! representation, solved from the defining relations rather than copied
//! from a table, so every sign traces back to the metric used everywhere
//! else in this crate.
//!
//! The underlying space splits as one even basis vector (`e_0`) plus `2n`
//! odd ones. An odd generator must exchange the sectors; with the basis
//! normalized so that `s(a)·e_0 = e_a`, the remaining matrix entries are
//! determined by a linear system extracted from `[s(a), {s(b), s(c)}]`
//! acting on `e_0`. The solved representation is validated against all
//! three defining relations before being returned.

use crate::algebra::{metric, metric_sign, Element, Generator};
use crate::error::AlgebraError;
use crate::linalg::RatMatrix;
use crate::report::Report;
use crate::scalar::{int, Rat};
use crate::scasimir::scasimir_pbw;

use num_traits::Zero;

/// A matrix representation over exact rationals with a parity split of
/// the underlying space: the first `even_dim` basis vectors are even.
#[derive(Clone, Debug)]
pub struct Representation {
    pub n: u32,
    pub dim: usize,
    pub even_dim: usize,
    odd_images: Vec<RatMatrix>,
}

impl Representation {
    /// Image of a generator; even images are built from the defining
    /// anticommutator `{s(a), s(b)} = s(a,b)`.
    pub fn image(&self, g: Generator) -> RatMatrix {
        match g {
            Generator::Odd(a) => self.odd_images[(a - 1) as usize].clone(),
            Generator::Even(a, b) => {
                let ma = &self.odd_images[(a - 1) as usize];
                let mb = &self.odd_images[(b - 1) as usize];
                ma.mul(mb).add(&mb.mul(ma))
            }
        }
    }
}

/// The trivial representation: every generator acts as zero on a
/// one-dimensional even space.
pub fn trivial_rep(n: u32) -> Representation {
    Representation {
        n,
        dim: 1,
        even_dim: 1,
        odd_images: (0..2 * n).map(|_| RatMatrix::zero(1, 1)).collect(),
    }
}

/// Solves the `(2n+1)`-dimensional fundamental representation from the
/// relation constraints and validates it exactly.
pub fn fundamental_rep(n: u32) -> Result<Representation, AlgebraError> {
    let m = (2 * n) as usize;
    let dim = m + 1;

    // Unknowns: v[a][d] = entry (0, d) of the image of s(a), i.e. the
    // even-sector row; the odd-sector column is fixed to e_a by the basis
    // choice. Rows of the linear system come from the e_0 column of
    //   [s(a), {s(b), s(c)}] = -g_ab s(c) - g_ac s(b),
    // whose coefficient of e_d reads
    //   (v_b[c] + v_c[b]) δ_da - δ_db v_c[a] - δ_dc v_b[a]
    //   = -g_ab δ_dc - g_ac δ_db.
    let unknowns = m * m;
    let var = |a: usize, d: usize| a * m + d;
    let mut rows: Vec<Vec<Rat>> = Vec::new();
    let mut rhs: Vec<Rat> = Vec::new();
    for a in 1..=m {
        for b in 1..=m {
            for c in 1..=m {
                for d in 1..=m {
                    let mut row = vec![Rat::zero(); unknowns];
                    if d == a {
                        row[var(b - 1, c - 1)] += int(1);
                        row[var(c - 1, b - 1)] += int(1);
                    }
                    if d == b {
                        row[var(c - 1, a - 1)] += int(-1);
                    }
                    if d == c {
                        row[var(b - 1, a - 1)] += int(-1);
                    }
                    let mut r = Rat::zero();
                    if d == c {
                        r += int(-metric_sign(n, a as u32, b as u32));
                    }
                    if d == b {
                        r += int(-metric_sign(n, a as u32, c as u32));
                    }
                    if row.iter().all(|x| x.is_zero()) && r.is_zero() {
                        continue;
                    }
                    rows.push(row);
                    rhs.push(r);
                }
            }
        }
    }
    let system = RatMatrix::from_rows(rows);
    let solution = system
        .solve_unique(&rhs)
        .ok_or_else(|| AlgebraError::RepSolveFailed("constraint system is singular".into()))?;

    let mut odd_images = Vec::with_capacity(m);
    for a in 0..m {
        let mut mat = RatMatrix::zero(dim, dim);
        mat.set(a + 1, 0, int(1)); // s(a)·e_0 = e_a
        for d in 0..m {
            mat.set(0, d + 1, solution[var(a, d)].clone());
        }
        odd_images.push(mat);
    }
    let rep = Representation {
        n,
        dim,
        even_dim: 1,
        odd_images,
    };

    let check = verify_relations(&rep);
    if !check.is_pass() {
        return Err(AlgebraError::RepSolveFailed(format!(
            "solved matrices do not satisfy the relations: {check}"
        )));
    }
    Ok(rep)
}

/// Multiplicative, linear evaluation of a free element in `rep`.
pub fn evaluate(x: &Element, rep: &Representation) -> RatMatrix {
    assert_eq!(x.n(), rep.n, "mismatched n");
    let mut out = RatMatrix::zero(rep.dim, rep.dim);
    for (w, c) in x.terms() {
        let mut prod = RatMatrix::identity(rep.dim);
        for g in &w.0 {
            prod = prod.mul(&rep.image(*g));
        }
        out = out.add(&prod.scale(c));
    }
    out
}

/// All three relation lines hold exactly in `rep`, for every generator
/// combination.
pub fn verify_relations(rep: &Representation) -> Report {
    let n = rep.n;
    Report::run(&format!("representation relations n={n}"), |c| {
        let m = 2 * n;
        // {s(a), s(b)} = s(a,b) holds by construction of the even images;
        // check the odd-even and even-even lines.
        for a in 1..=m {
            let ma = rep.image(Generator::odd(a));
            for b in 1..=m {
                for d in b..=m {
                    let mbd = rep.image(Generator::even(b, d));
                    let lhs = ma.mul(&mbd).sub(&mbd.mul(&ma));
                    let mut rhs = RatMatrix::zero(rep.dim, rep.dim);
                    rhs = rhs.add(
                        &rep.image(Generator::odd(d))
                            .scale(&-metric(n, a, b).unwrap()),
                    );
                    rhs = rhs.add(
                        &rep.image(Generator::odd(b))
                            .scale(&-metric(n, a, d).unwrap()),
                    );
                    c.check(lhs == rhs, || {
                        format!("[s({a}), s({b},{d})] fails in the representation")
                    });
                }
            }
        }
        let evens: Vec<(u32, u32)> = {
            let mut v = Vec::new();
            for a in 1..=m {
                for b in a..=m {
                    v.push((a, b));
                }
            }
            v
        };
        for &(a, b) in &evens {
            for &(d, e) in &evens {
                let mab = rep.image(Generator::even(a, b));
                let mde = rep.image(Generator::even(d, e));
                let lhs = mab.mul(&mde).sub(&mde.mul(&mab));
                let mut rhs = RatMatrix::zero(rep.dim, rep.dim);
                for (p, q, r, s) in [(a, d, b, e), (a, e, b, d), (b, d, a, e), (b, e, a, d)] {
                    rhs = rhs.add(
                        &rep.image(Generator::even(r, s))
                            .scale(&-metric(n, p, q).unwrap()),
                    );
                }
                c.check(lhs == rhs, || {
                    format!("[s({a},{b}), s({d},{e})] fails in the representation")
                });
            }
        }
    })
}

/// Ghost checks inside the fundamental representation: the Scasimir image
/// anticommutes with every odd image, commutes with every even one, and
/// normalizing by its even-sector eigenvalue yields the parity involution
/// (+1 on the even sector, -1 on the odd one).
pub fn verify_rep_ghost(n: u32) -> Report {
    Report::run(&format!("representation ghost n={n}"), |c| {
        let rep = match fundamental_rep(n) {
            Ok(rep) => rep,
            Err(e) => {
                c.fail(format!("{e}"));
                return;
            }
        };
        let sc = evaluate(&scasimir_pbw(n), &rep);
        for a in 1..=2 * n {
            let ma = rep.image(Generator::odd(a));
            let anti = sc.mul(&ma).add(&ma.mul(&sc));
            c.check(anti.is_zero(), || {
                format!("Sc fails to anticommute with s({a}) in the fundamental rep")
            });
        }
        for a in 1..=2 * n {
            for b in a..=2 * n {
                let mab = rep.image(Generator::even(a, b));
                let comm = sc.mul(&mab).sub(&mab.mul(&sc));
                c.check(comm.is_zero(), || {
                    format!("Sc fails to commute with s({a},{b}) in the fundamental rep")
                });
            }
        }

        // Normalized involution realizing the parity grading.
        let lambda = sc.at(0, 0).clone();
        c.check(!lambda.is_zero(), || {
            "Sc has zero even-sector eigenvalue".into()
        });
        if lambda.is_zero() {
            return;
        }
        let normalized = sc.scale(&lambda.recip());
        let mut parity = RatMatrix::zero(rep.dim, rep.dim);
        for i in 0..rep.dim {
            parity.set(i, i, if i < rep.even_dim { int(1) } else { int(-1) });
        }
        c.check(normalized == parity, || {
            format!("normalized Sc is not the parity involution:\n{normalized}")
        });
        let square = normalized.mul(&normalized);
        c.check(
            square.as_scalar_multiple_of_identity() == Some(int(1)),
            || "normalized Sc does not square to the identity".into(),
        );
    })
}
