//! Deterministic RNG substreams.
//!
//! Every random draw in this crate comes from a stream derived from
//! `(seed, domain, index)`. Parallel generation assigns one stream per
//! hyperedge index, so outputs are identical regardless of thread count
//! and bit-identical across runs with the same seed.

use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Disjoint stream namespaces.
#[derive(Debug, Clone, Copy)]
pub(crate) enum Domain {
    Partition = 1,
    Edge = 2,
    EligibleShuffle = 3,
    Replacement = 4,
    TripleSample = 5,
}

fn mix(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Stream keyed by the full `(seed, domain, index)` triple; distinct
/// triples give distinct ChaCha keys.
pub(crate) fn substream(seed: u64, domain: Domain, index: u64) -> ChaCha8Rng {
    let domain = domain as u64;
    let mut key = [0u8; 32];
    key[0..8].copy_from_slice(&seed.to_le_bytes());
    key[8..16].copy_from_slice(&domain.to_le_bytes());
    key[16..24].copy_from_slice(&index.to_le_bytes());
    key[24..32].copy_from_slice(&mix(seed ^ domain.rotate_left(24) ^ index.rotate_left(48)).to_le_bytes());
    ChaCha8Rng::from_seed(key)
}
