//! Seeded random streams.
//!
//! Every stochastic routine in the crate draws from [`SplitMix64`], a
//! generator with a single 64-bit word of state. Standard normals come from
//! `rand_distr`'s ziggurat sampler and uniform directions on the sphere are
//! normalized standard-normal vectors, so sequences only depend on the seed,
//! the stream index and the crate version.

use rand::{Rng, SeedableRng};
use rand_distr::StandardNormal;
use rand_xoshiro::SplitMix64;

use crate::geom::{Dim, Point};

pub type StreamRng = SplitMix64;

pub fn rng_from_seed(seed: u64) -> StreamRng {
    SplitMix64::seed_from_u64(seed)
}

/// Mixes `stream` into `seed` so that sibling streams (optimizer evaluations,
/// re-measurements, per-trial point sets) do not share a prefix.
pub fn derive_seed(seed: u64, stream: u64) -> u64 {
    // splitmix64 finalizer over the combined word
    let mut z = seed ^ stream.wrapping_mul(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Uniform direction on S^1 or S^2.
pub fn unit_direction<R: Rng + ?Sized>(rng: &mut R, dim: Dim) -> Point {
    loop {
        let x: f64 = rng.sample(StandardNormal);
        let y: f64 = rng.sample(StandardNormal);
        let z: f64 = match dim {
            Dim::Two => 0.0,
            Dim::Three => rng.sample(StandardNormal),
        };
        let n = (x * x + y * y + z * z).sqrt();
        if n > 1e-300 {
            return Point::from_raw(dim, [x / n, y / n, z / n]);
        }
    }
}

/// Splits `total` work items across `shards` workers; shard `k` gets the
/// seed `seed + k`.
pub(crate) fn shard_plan(total: usize, shards: usize, seed: u64) -> Vec<(usize, u64)> {
    let shards = shards.max(1).min(total.max(1));
    let base = total / shards;
    let rem = total % shards;
    (0..shards)
        .map(|k| (base + usize::from(k < rem), seed.wrapping_add(k as u64)))
        .collect()
}

/// Runs `work` once per shard (in parallel when there is more than one) and
/// returns the per-shard results in shard order.
pub(crate) fn run_sharded<T, F>(total: usize, shards: usize, seed: u64, work: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize, u64) -> T + Sync,
{
    let plan = shard_plan(total, shards, seed);
    if plan.len() == 1 {
        let (n, s) = plan[0];
        return vec![work(n, s)];
    }
    std::thread::scope(|scope| {
        let handles: Vec<_> = plan
            .iter()
            .map(|&(n, s)| {
                let work = &work;
                scope.spawn(move || work(n, s))
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("shard worker panicked"))
            .collect()
    })
}
