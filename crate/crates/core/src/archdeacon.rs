//! Counting induced nonplanar `K_4`s of a rotation scheme, and a hill climb
//! that looks for schemes with few of them.

use alloc::vec::Vec;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::facts::{quadruples, K4Rotation};
use crate::ids::VertexId;
use crate::scheme::RotationScheme;

/// `floor(n/2) floor((n-1)/2) floor((n-2)/2) floor((n-3)/2) / 4`.
pub fn harary_hill(n: u64) -> u64 {
    if n < 4 {
        return 0;
    }
    (n / 2) * ((n - 1) / 2) * ((n - 2) / 2) * ((n - 3) / 2) / 4
}

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

fn nonplanar(s: &RotationScheme, q: [VertexId; 4]) -> bool {
    !K4Rotation::from_scheme(s, q).class().is_planar()
}

/// Number of 4-subsets whose induced rotation system does not embed in the
/// sphere.
pub fn count_nonplanar_k4(s: &RotationScheme) -> usize {
    quadruples(s.n()).filter(|&q| nonplanar(s, q)).count()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchemeScore {
    pub scheme: RotationScheme,
    pub count: usize,
}

/// Outcome of one climb.
#[derive(Clone, Debug)]
pub struct Climb {
    pub best: SchemeScore,
    pub start_count: usize,
    pub accepted: usize,
    /// Accepted counts in order; never increasing.
    pub trajectory: Vec<usize>,
    /// Schemes scored below `harary_hill(n)`. The conjecture says none exist.
    pub below_bound: Vec<SchemeScore>,
}

/// Random adjacent transpositions in local rotations, kept whenever the count
/// does not go up.
pub struct Climber {
    scheme: RotationScheme,
    count: usize,
    bound: usize,
    rng: ChaCha8Rng,
}

impl Climber {
    pub fn new(start: RotationScheme, seed: u64) -> Self {
        let count = count_nonplanar_k4(&start);
        let bound = harary_hill(start.n() as u64) as usize;
        Climber { scheme: start, count, bound, rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    pub fn scheme(&self) -> &RotationScheme {
        &self.scheme
    }

    pub fn count(&self) -> usize {
        self.count
    }

    /// Nonplanar subsets among `{k, a, b, x}`, the only ones a swap of `a`
    /// and `b` in the rotation at `k` can change.
    fn local(&self, k: VertexId, a: VertexId, b: VertexId) -> usize {
        (1..=self.scheme.n())
            .map(VertexId::new)
            .filter(|&x| x != k && x != a && x != b)
            .filter(|&x| nonplanar(&self.scheme, [k, a, b, x]))
            .count()
    }

    /// Proposes one swap. Returns whether it was kept.
    pub fn step(&mut self) -> bool {
        let n = self.scheme.n();
        let k = VertexId::new(self.rng.random_range(1..=n));
        let idx = self.rng.random_range(0..n - 1);
        let order = self.scheme.ccw(k);
        let (a, b) = (order[idx], order[(idx + 1) % (n - 1)]);
        let before = self.local(k, a, b);
        self.scheme.swap_adjacent(k, idx);
        let after = self.local(k, a, b);
        if after <= before {
            self.count = self.count - before + after;
            true
        } else {
            let back = self.scheme.position(k, b);
            self.scheme.swap_adjacent(k, back);
            false
        }
    }
}

/// Runs `budget` proposals from `start`.
pub fn hill_climb(start: &RotationScheme, seed: u64, budget: usize) -> Climb {
    let mut c = Climber::new(start.clone(), seed);
    let start_count = c.count;
    let mut best = SchemeScore { scheme: c.scheme.clone(), count: c.count };
    let mut trajectory = Vec::new();
    let mut below_bound = Vec::new();
    let mut accepted = 0;
    for _ in 0..budget {
        if c.step() {
            accepted += 1;
            trajectory.push(c.count);
            if c.count < best.count {
                best = SchemeScore { scheme: c.scheme.clone(), count: c.count };
            }
            if c.count < c.bound && below_bound.len() < 16 {
                below_bound.push(SchemeScore { scheme: c.scheme.clone(), count: c.count });
            }
        }
    }
    Climb { best, start_count, accepted, trajectory, below_bound }
}
