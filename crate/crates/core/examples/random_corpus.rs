//! Generates a seeded corpus of random pseudo-cones and runs the copolarity
//! identity battery and the volume identity on each instance.
//!
//! Usage: `random_corpus [count] [seed]`.

use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use pseudocone::copolarity::{check_identities, copolar};
use pseudocone::corpus::{gen_instances, random_point_pseudocone};
use pseudocone::minkowski::coconvex_volume;

fn main() {
    let mut args = std::env::args().skip(1);
    let count = args.next().and_then(|s| s.parse().ok()).unwrap_or(20);
    let seed = args.next().and_then(|s| s.parse().ok()).unwrap_or(0);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for dim in [2, 3] {
        let start = Instant::now();
        let corpus = gen_instances(&mut rng, dim, count);
        let mut failures = 0;
        let mut worst_gap = 0.0f64;
        let mut infinite = 0;
        for (i, k) in corpus.iter().enumerate() {
            assert!(copolar(&copolar(k)) == *k);
            let partner = random_point_pseudocone(&mut rng, k.cone_arc());
            failures += check_identities(k, &partner, 10, seed + i as u64).iter().filter(|c| !c.passed).count();
            for v in [coconvex_volume(k), coconvex_volume(&partner)] {
                if v.is_finite() {
                    worst_gap = worst_gap.max(v.relative_gap());
                } else {
                    infinite += 1;
                }
            }
        }
        println!(
            "n = {dim}: {count} pairs, {failures} identity failures, {infinite} sets with infinite volume, \
             worst volume gap {worst_gap:.1e}, {:.2} s",
            start.elapsed().as_secs_f64()
        );
    }
}
