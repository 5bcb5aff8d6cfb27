//! Random simple connected cubic graphs from the pairing model.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Draws uniform perfect matchings on `3n` points (three per vertex) until
/// one projects to a simple connected graph. Deterministic in `seed`.
pub fn random_cubic_graph(order: usize, seed: u64, max_attempts: usize) -> Result<Graph> {
    if order < 4 || order % 2 == 1 {
        return Err(Error::Domain(format!(
            "cubic graphs need an even order of at least 4, got {order}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut points: Vec<usize> = (0..3 * order).collect();
    for _ in 0..max_attempts {
        points.shuffle(&mut rng);
        let edges = points.chunks(2).map(|pair| (pair[0] / 3, pair[1] / 3));
        if let Ok(g) = Graph::new(order, edges) {
            if g.is_connected() {
                return Ok(g);
            }
        }
    }
    Err(Error::ResourceBound(format!(
        "no simple connected sample in {max_attempts} pairings"
    )))
}
