//! Deterministic random inputs for verification sweeps and tests.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::{Element, Generator, Word};
use crate::scalar::rat;

/// Seeded generator used by all `verify_*` sweeps.
pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_generator<R: Rng>(rng: &mut R, n: u32) -> Generator {
    if rng.gen_bool(0.5) {
        Generator::odd(rng.gen_range(1..=2 * n))
    } else {
        Generator::even(rng.gen_range(1..=2 * n), rng.gen_range(1..=2 * n))
    }
}

pub fn random_word<R: Rng>(rng: &mut R, n: u32, max_len: usize) -> Word {
    let len = rng.gen_range(0..=max_len);
    Word((0..len).map(|_| random_generator(rng, n)).collect())
}

/// A small random linear combination with nonzero rational coefficients.
pub fn random_element<R: Rng>(rng: &mut R, n: u32, max_terms: usize, max_len: usize) -> Element {
    let mut e = Element::zero(n);
    let terms = rng.gen_range(1..=max_terms);
    for _ in 0..terms {
        let w = random_word(rng, n, max_len);
        let mut p = 0;
        while p == 0 {
            p = rng.gen_range(-6i64..=6);
        }
        let q = rng.gen_range(1i64..=4);
        e.add_term(w, rat(p, q));
    }
    e
}
