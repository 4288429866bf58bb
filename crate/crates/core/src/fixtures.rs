//! Named example spaces.

use crate::linalg::Vector;
use crate::{OrderedSpace, RatVec};

/// `v1 = (1,0,1)`, `v2 = (0,1,1)`, `v3 = (-1,0,1)`, `v4 = (0,-1,1)`.
pub fn four_ray_vectors() -> [RatVec; 4] {
    [
        Vector::from_ints(&[1, 0, 1]),
        Vector::from_ints(&[0, 1, 1]),
        Vector::from_ints(&[-1, 0, 1]),
        Vector::from_ints(&[0, -1, 1]),
    ]
}

/// The cone in `ℚ³` over a square: four extreme rays, not a lattice.
pub fn four_ray() -> OrderedSpace {
    OrderedSpace::validate(&four_ray_vectors(), 3).expect("four-ray cone is valid")
}

/// `ℚⁿ` with the positive orthant.
pub fn standard(n: usize) -> OrderedSpace {
    let gens: Vec<RatVec> = (0..n).map(|i| Vector::unit(n, i)).collect();
    OrderedSpace::validate(&gens, n).expect("orthant is valid")
}

/// Generators of the four-ray cone times `ℚ₊` in `ℚ⁴`.
pub fn four_ray_times_r_generators() -> Vec<RatVec> {
    let mut gens: Vec<RatVec> = four_ray_vectors().iter().map(|v| v.concat(&Vector::zeros(1))).collect();
    gens.push(Vector::unit(4, 3));
    gens
}

/// The product of the four-ray space with `ℚ`.
pub fn four_ray_times_r() -> OrderedSpace {
    OrderedSpace::validate(&four_ray_times_r_generators(), 4).expect("product cone is valid")
}

/// Named lookup used by the command line.
pub fn by_name(name: &str) -> Option<OrderedSpace> {
    match name {
        "fourray" | "four-ray" => Some(four_ray()),
        "fourray_x_r" | "four-ray-x-r" => Some(four_ray_times_r()),
        _ => {
            let n: usize = name.strip_prefix("standard")?.parse().ok()?;
            (1..=8).contains(&n).then(|| standard(n))
        }
    }
}
