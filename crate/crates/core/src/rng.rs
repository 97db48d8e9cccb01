use std::collections::hash_map::DefaultHasher;
use std::hash::{Hash, Hasher};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Deterministic generator derived from a session seed and a tag describing the call site.
pub fn rng_for<T: Hash + ?Sized>(seed: u64, tag: &T) -> ChaCha8Rng {
    let mut h = DefaultHasher::new();
    seed.hash(&mut h);
    tag.hash(&mut h);
    ChaCha8Rng::seed_from_u64(h.finish())
}
