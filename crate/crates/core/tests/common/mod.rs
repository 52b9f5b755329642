#![allow(dead_code)]

use latfree::{FrobeniusInstance, IntVec, PointEnumerator, SimplicialData};
use num_bigint::BigInt;
use num_integer::Integer;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub use rand::SeedableRng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniform coprime `n`-tuple with entries in `2..=max`.
pub fn coprime_tuple(rng: &mut ChaCha8Rng, n: usize, max: i64) -> Vec<i64> {
    loop {
        let a: Vec<i64> = (0..n).map(|_| rng.gen_range(2..=max)).collect();
        if a.iter().fold(0i64, |g, x| g.gcd(x)) == 1 {
            return a;
        }
    }
}

pub fn instance(a: &[i64]) -> FrobeniusInstance {
    FrobeniusInstance::from_i64s(a).unwrap()
}

pub fn kernel_data(a: &[i64]) -> SimplicialData {
    SimplicialData::from_frobenius(&IntVec::from_i64s(a)).unwrap()
}

/// A random point `x0` and bounds `b` with `a_i x0 ≤ b_i` for `i = 1..d`.
pub fn feasible_program(rng: &mut ChaCha8Rng, data: &SimplicialData, spread: i64, slack: i64) -> (IntVec, IntVec) {
    let d = data.dim();
    let x0: IntVec = (0..d).map(|_| BigInt::from(rng.gen_range(-spread..=spread))).collect();
    let image = data.image(&x0);
    let b: IntVec = (1..=d).map(|i| &image[i] + rng.gen_range(0..=slack)).collect();
    (x0, b)
}

/// Optimum of the perturbed program by listing every point with
/// `a₀ z ≤ a₀ x0` and `a_i z ≤ b_i` and taking the lexicographically least
/// image.
pub fn exhaustive_optimum(data: &SimplicialData, b: &IntVec, x0: &IntVec) -> IntVec {
    let mut rhs = vec![data.image(x0)[0].clone()];
    rhs.extend(b.iter().cloned());
    let points = PointEnumerator::new(data.matrix()).points(&IntVec::new(rhs), latfree::DEFAULT_BUDGET).unwrap();
    points.into_iter().min_by_key(|z| data.image(z)).unwrap()
}
