//! Deterministic sampling of rational gambles for randomized-but-repeatable
//! cross-checks (coherence fixed points, sampled axiom certification).

use crate::rat::{rat, Rat};
use crate::space::{Gamble, Space};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Draws `count` gambles from a small rational grid: numerators in
/// [-6, 6], denominators in {1, 2, 3}. Deterministic in `seed`.
pub fn sample_gambles(space: &Space, count: usize, seed: u64) -> Vec<Gamble> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| sample_gamble_with(space, &mut rng))
        .collect()
}

/// Draws one grid gamble from the supplied generator.
pub fn sample_gamble_with<R: Rng>(space: &Space, rng: &mut R) -> Gamble {
    let values: Vec<Rat> = (0..space.dim())
        .map(|_| rat(rng.gen_range(-6..=6), rng.gen_range(1..=3)))
        .collect();
    Gamble::new(space, values).expect("dimension by construction")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sampling_is_deterministic() {
        let s = Space::of_size(3);
        assert_eq!(sample_gambles(&s, 10, 7), sample_gambles(&s, 10, 7));
        assert_ne!(sample_gambles(&s, 10, 7), sample_gambles(&s, 10, 8));
    }
}
