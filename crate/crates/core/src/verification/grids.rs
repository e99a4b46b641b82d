use num_complex::Complex64;

use crate::quadrature::{Family, FamilySpec};

/// `n ∈ {0,1,2,3}`, `a ∈ {0.7, 1, 2.3}`, `s ∈ {2n+1.5, 2n+3.7, 2n+6}`: 36 points.
pub fn theorem_grid(family: Family) -> Vec<FamilySpec> {
    let mut grid = Vec::with_capacity(36);
    for n in 0..=3usize {
        let base = family.power(n) as f64;
        for a in [0.7, 1.0, 2.3] {
            for offset in [1.5, 3.7, 6.0] {
                grid.push(FamilySpec::real(family, n, a, base + offset));
            }
        }
    }
    grid
}

/// 24 points per family on which the competing candidates are told apart:
/// `n ∈ {0,1,2}`, `a ∈ {0.7, 1.3}`, `s − N ∈ {1.5, 2.7, 4.2, 5.5}` with `N`
/// the power of `t`. The fractional offsets keep every `σ = m + s − N` away
/// from 1, and the values stay well above the tolerance so that a wrong
/// constant or sign cannot hide in the noise.
pub fn resolution_grid(family: Family) -> Vec<FamilySpec> {
    let mut grid = Vec::with_capacity(24);
    for n in 0..=2usize {
        let base = family.power(n) as f64;
        for a in [0.7, 1.3] {
            for offset in [1.5, 2.7, 4.2, 5.5] {
                grid.push(FamilySpec::real(family, n, a, base + offset));
            }
        }
    }
    grid
}

/// `(s, a)` pairs used to certify the Mellin constants.
pub fn mellin_points() -> Vec<(Complex64, Complex64)> {
    [(2.0, 1.0), (3.5, 0.7), (2.5, 2.0), (2.0, 0.5), (2.0, 2.0), (3.5, 0.5), (3.5, 1.0), (3.5, 2.0)]
        .into_iter()
        .map(|(s, a)| (Complex64::new(s, 0.0), Complex64::new(a, 0.0)))
        .collect()
}
