//! Portable Poisson variates.
//!
//! Small means use sequential inversion. Means of 30 and above use
//! Hörmann's transformed rejection with squeeze (PTRS), which needs a
//! bounded number of uniforms per variate on average regardless of the mean.
//! Both consume only [`unit_f64`] draws, so a given generator stream yields
//! the same counts on every platform.

use rand_core::RngCore;

/// Means below this use inversion.
pub const INVERSION_LIMIT: f64 = 30.0;

/// Uniform on `[0, 1)` with 53 random mantissa bits.
pub fn unit_f64<R: RngCore + ?Sized>(rng: &mut R) -> f64 {
    (rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
}

/// Draws one Poisson variate with the given mean. Non-positive or non-finite
/// means yield zero.
pub fn sample<R: RngCore + ?Sized>(mean: f64, rng: &mut R) -> u64 {
    if !(mean > 0.0) || !mean.is_finite() {
        return 0;
    }
    if mean < INVERSION_LIMIT {
        inversion(mean, rng)
    } else {
        transformed_rejection(mean, rng)
    }
}

fn inversion<R: RngCore + ?Sized>(mean: f64, rng: &mut R) -> u64 {
    let u = unit_f64(rng);
    let mut k = 0u64;
    let mut p = (-mean).exp();
    let mut cdf = p;
    // The cdf can stall just below 1 in floating point; past this bound the
    // remaining mass is far below one ulp.
    let cap = (mean + 40.0 * mean.sqrt() + 40.0) as u64;
    while u > cdf && k < cap {
        k += 1;
        p *= mean / k as f64;
        cdf += p;
    }
    k
}

fn transformed_rejection<R: RngCore + ?Sized>(mean: f64, rng: &mut R) -> u64 {
    let log_mean = mean.ln();
    let smu = mean.sqrt();
    let b = 0.931 + 2.53 * smu;
    let a = -0.059 + 0.02483 * b;
    let inv_alpha = 1.1239 + 1.1328 / (b - 3.4);
    let v_r = 0.9277 - 3.6224 / (b - 2.0);

    loop {
        let u = unit_f64(rng) - 0.5;
        let v = unit_f64(rng);
        let us = 0.5 - u.abs();
        if us <= 0.0 {
            continue;
        }
        let k = ((2.0 * a / us + b) * u + mean + 0.43).floor();
        if us >= 0.07 && v <= v_r {
            return k as u64;
        }
        if k < 0.0 || (us < 0.013 && v > us) {
            continue;
        }
        let lhs = v.ln() + inv_alpha.ln() - (a / (us * us) + b).ln();
        let rhs = -mean + k * log_mean - ln_factorial(k);
        if lhs <= rhs {
            return k as u64;
        }
    }
}

/// `ln(k!)` for integral `k ≥ 0`: a direct sum for small `k`, Stirling's
/// series beyond (truncation error below 1e-14 there).
pub fn ln_factorial(k: f64) -> f64 {
    if k < 30.0 {
        let mut acc = 0.0;
        let mut i = 2.0;
        while i <= k {
            acc += f64::ln(i);
            i += 1.0;
        }
        return acc;
    }
    let x = k + 1.0;
    let inv = 1.0 / x;
    let inv2 = inv * inv;
    (x - 0.5) * x.ln() - x
        + 0.5 * (2.0 * std::f64::consts::PI).ln()
        + inv * (1.0 / 12.0 - inv2 * (1.0 / 360.0 - inv2 / 1260.0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand_chacha::ChaCha20Rng;
    use rand_core::SeedableRng;

    #[test]
    fn ln_factorial_matches_direct_sum() {
        for k in [0u32, 1, 5, 29, 30, 31, 57, 100, 500] {
            let direct: f64 = (2..=k).map(|i| f64::from(i).ln()).sum();
            let got = ln_factorial(f64::from(k));
            assert!(
                (got - direct).abs() <= 1e-12 * direct.max(1.0),
                "k={k}: {got} vs {direct}"
            );
        }
    }

    #[test]
    fn zero_mean_is_zero() {
        let mut rng = ChaCha20Rng::seed_from_u64(1);
        for _ in 0..100 {
            assert_eq!(sample(0.0, &mut rng), 0);
            assert_eq!(sample(-3.0, &mut rng), 0);
            assert_eq!(sample(f64::NAN, &mut rng), 0);
        }
    }

    fn moments(mean: f64, n: usize) -> (f64, f64) {
        let mut rng = ChaCha20Rng::seed_from_u64(mean.to_bits());
        let xs: Vec<f64> = (0..n).map(|_| sample(mean, &mut rng) as f64).collect();
        let m = xs.iter().sum::<f64>() / n as f64;
        let var = xs.iter().map(|x| (x - m) * (x - m)).sum::<f64>() / (n as f64 - 1.0);
        (m, var)
    }

    #[test]
    fn moments_match_on_both_paths() {
        let n = 200_000;
        for mean in [0.5, 4.0, 12.0, 29.5, 30.0, 57.0, 400.0, 1e5] {
            let (m, var) = moments(mean, n);
            let se = (mean / n as f64).sqrt();
            assert!((m - mean).abs() < 5.0 * se, "mean {mean}: {m}");
            assert!((var / mean - 1.0).abs() < 0.03, "mean {mean}: var {var}");
        }
    }

    #[test]
    fn unit_f64_range() {
        let mut rng = ChaCha20Rng::seed_from_u64(9);
        for _ in 0..10_000 {
            let u = unit_f64(&mut rng);
            assert!((0.0..1.0).contains(&u));
        }
    }
}
