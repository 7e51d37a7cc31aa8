/// Squared radius bound for a real `r_max`, robust to `sqrt` round-off
/// (`r_max = 7f64.sqrt()` must admit `n = 7`).
pub fn max_squared_radius(r_max: f64) -> u64 {
    let sq = r_max * r_max;
    (sq * (1.0 + 1e-12) + 1e-12).floor() as u64
}

/// Smallest integer `p` with `p * p >= max_sq`: lattice points farther than
/// `p` along any axis from the surface box cannot be within range.
pub fn padding_for(max_sq: u64) -> u64 {
    let mut p = (max_sq as f64).sqrt().floor() as u64;
    while p * p < max_sq {
        p += 1;
    }
    while p > 0 && (p - 1) * (p - 1) >= max_sq {
        p -= 1;
    }
    p
}

/// Legendre: `n` is a sum of three squares iff it is not `4^a (8b + 7)`.
pub fn is_sum_of_three_squares(mut n: u64) -> bool {
    if n == 0 {
        return true;
    }
    while n.is_multiple_of(4) {
        n /= 4;
    }
    n % 8 != 7
}

/// Every distance realizable between two points of the integer lattice, up
/// to `r_max`.
#[derive(Clone, Debug, PartialEq)]
pub struct DistanceSet {
    pub squared_distances: Vec<u64>,
    pub distances: Vec<f64>,
}

pub fn representable_distances(r_max: f64) -> DistanceSet {
    let max_sq = max_squared_radius(r_max);
    let squared_distances: Vec<u64> = (0..=max_sq).filter(|&n| is_sum_of_three_squares(n)).collect();
    let distances = squared_distances.iter().map(|&n| (n as f64).sqrt()).collect();
    DistanceSet {
        squared_distances,
        distances,
    }
}
