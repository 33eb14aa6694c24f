//! Weight initialization.

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use super::tensor::Tensor;

/// He-uniform initialization: U(-limit, limit) with limit = sqrt(6 / fan_in).
///
/// Values are drawn in row-major order from the given RNG, so layer
/// construction order fully determines the initial parameters.
pub fn he_uniform(shape: &[usize], fan_in: usize, rng: &mut ChaCha8Rng) -> Tensor {
    let limit = (6.0 / fan_in as f64).sqrt();
    let len: usize = shape.iter().product();
    let data: Vec<f64> = (0..len).map(|_| rng.gen_range(-limit..limit)).collect();
    Tensor::from_vec(shape, data).expect("shape/data length match by construction")
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    #[test]
    fn bounded_and_deterministic() {
        let mut rng1 = ChaCha8Rng::seed_from_u64(7);
        let mut rng2 = ChaCha8Rng::seed_from_u64(7);
        let a = he_uniform(&[4, 9], 9, &mut rng1);
        let b = he_uniform(&[4, 9], 9, &mut rng2);
        assert_eq!(a, b);
        let limit = (6.0f64 / 9.0).sqrt();
        assert!(a.data().iter().all(|v| v.abs() < limit));
    }
}
