use msfractal::multiscale::{gaussian_derivative_kernel, scale_transform_signal, ScaleSpaceParams};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Normal};

fn variance(x: &[f64]) -> f64 {
    let m = x.iter().sum::<f64>() / x.len() as f64;
    x.iter().map(|v| (v - m) * (v - m)).sum::<f64>() / (x.len() - 1) as f64
}

#[test]
fn kernel_antisymmetric_zero_sum() {
    for a in [0.5, 0.7, 1.0, 2.0] {
        let p = ScaleSpaceParams::new(a, 51).unwrap();
        let k = gaussian_derivative_kernel(a, p.kernel_radius).unwrap();
        let r = p.kernel_radius;
        assert!(k.iter().sum::<f64>().abs() <= 1e-12);
        for i in 0..=2 * r {
            assert!((k[i] + k[2 * r - i]).abs() <= 1e-12);
        }
    }
}

#[test]
fn smoothing_reduces_noise_variance() {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    let normal = Normal::new(0.0, 1.0).unwrap();
    let scales = [0.5, 1.0, 2.0, 4.0];
    let mut mean_var = [0.0; 4];
    let trials = 60;
    for _ in 0..trials {
        let u: Vec<f64> = (0..256).map(|_| normal.sample(&mut rng)).collect();
        for (k, &a) in scales.iter().enumerate() {
            let p = ScaleSpaceParams::new(a, usize::MAX).unwrap();
            mean_var[k] += variance(&scale_transform_signal(&u, &p).unwrap()) / trials as f64;
        }
    }
    assert!(mean_var.windows(2).all(|w| w[1] <= w[0]), "{mean_var:?}");
}

proptest! {
    #[test]
    fn linearity(
        u in proptest::collection::vec(-5.0f64..5.0, 12..60),
        alpha in -3.0f64..3.0,
        beta in -3.0f64..3.0,
        seed in 0u64..1000,
        a in 0.3f64..3.0,
    ) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let normal = Normal::new(0.0, 2.0).unwrap();
        let w: Vec<f64> = u.iter().map(|_| normal.sample(&mut rng)).collect();
        let p = ScaleSpaceParams::new(a, 51).unwrap();
        let mix: Vec<f64> = u.iter().zip(&w).map(|(x, y)| alpha * x + beta * y).collect();
        let lhs = scale_transform_signal(&mix, &p).unwrap();
        let tu = scale_transform_signal(&u, &p).unwrap();
        let tw = scale_transform_signal(&w, &p).unwrap();
        for i in 0..u.len() {
            prop_assert!((lhs[i] - (alpha * tu[i] + beta * tw[i])).abs() < 1e-10);
        }
    }

    #[test]
    fn constant_signal_is_flat(c in -50.0f64..50.0, n in 2usize..100, a in 0.2f64..5.0) {
        let p = ScaleSpaceParams::new(a, 51).unwrap();
        let out = scale_transform_signal(&vec![c; n], &p).unwrap();
        prop_assert_eq!(out.len(), n);
        prop_assert!(out.iter().all(|x| x.abs() < 1e-10));
    }
}
