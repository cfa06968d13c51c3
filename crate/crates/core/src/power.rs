//! Closed-form power allocation: capped water-filling with dual bisection.
//!
//! Given per-slot gains `a[n]` and interference-plus-noise `b[n]`, the
//! rate-optimal power under an average budget and a peak cap is
//! `p[n] = clamp(w - b[n]/a[n], 0, P_peak)` with the water level `w`
//! chosen so the mean meets the average budget (or every active slot sits
//! at the cap when the budget is slack). Slots with zero gain carry no
//! power.

use crate::channel::SlotGain;
use crate::scenario::PowerProfile;

/// Diagnostics from a water-filling solve.
#[derive(Debug, Clone)]
pub struct WaterfillReport {
    /// Dual variable of the average-power constraint (`0` when slack).
    pub nu: f64,
    /// Bisection iterations used.
    pub iterations: usize,
    /// `|mean(p) - P_avg|` when the budget binds, else 0.
    pub kkt_residual: f64,
    /// Every slot had zero gain; the returned profile is all-zero.
    pub all_gains_zero: bool,
}

/// Water-fills `P_avg`/`P_peak` over slots with gains `a[n]`, `b[n]`.
pub fn waterfill(gains: &[SlotGain], p_avg: f64, p_peak: f64) -> (PowerProfile, WaterfillReport) {
    assert!(p_avg > 0.0 && p_peak > 0.0, "need positive power limits");
    let n = gains.len();
    let active: Vec<usize> = (0..n).filter(|&i| gains[i].a > 0.0).collect();
    if active.is_empty() {
        return (
            PowerProfile::uniform(0.0, n),
            WaterfillReport { nu: 0.0, iterations: 0, kkt_residual: 0.0, all_gains_zero: true },
        );
    }
    let noise_over_gain: Vec<f64> = active.iter().map(|&i| gains[i].b / gains[i].a).collect();

    let profile_at = |w: f64| -> Vec<f64> {
        let mut p = vec![0.0; n];
        for (slot, &i) in active.iter().enumerate() {
            p[i] = (w - noise_over_gain[slot]).clamp(0.0, p_peak);
        }
        p
    };
    let mean = |p: &[f64]| p.iter().sum::<f64>() / n as f64;

    // Slack budget: every active slot at the cap already fits the average.
    let w_hi = noise_over_gain.iter().cloned().fold(0.0f64, f64::max) + p_peak;
    let capped = profile_at(w_hi);
    if mean(&capped) <= p_avg {
        return (
            PowerProfile::new(capped),
            WaterfillReport { nu: 0.0, iterations: 0, kkt_residual: 0.0, all_gains_zero: false },
        );
    }

    // Bisect the water level; mean(p(w)) is continuous and nondecreasing.
    let mut lo = 0.0f64;
    let mut hi = w_hi;
    let mut iterations = 0;
    while iterations < 200 && hi - lo > 1e-12 * w_hi.max(1.0) {
        let mid = 0.5 * (lo + hi);
        if mean(&profile_at(mid)) >= p_avg {
            hi = mid;
        } else {
            lo = mid;
        }
        iterations += 1;
    }
    let w = 0.5 * (lo + hi);
    let p = profile_at(w);
    let kkt_residual = (mean(&p) - p_avg).abs();
    (
        PowerProfile::new(p),
        WaterfillReport {
            nu: 1.0 / (w * std::f64::consts::LN_2),
            iterations,
            kkt_residual,
            all_gains_zero: false,
        },
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::channel::average_rate;
    use approx::assert_relative_eq;
    use proptest::prelude::*;

    fn gains(pairs: &[(f64, f64)]) -> Vec<SlotGain> {
        pairs.iter().map(|&(a, b)| SlotGain { a, b }).collect()
    }

    #[test]
    fn identical_slots_get_uniform_power() {
        let g = gains(&[(2.0, 1.0); 5]);
        let (p, rep) = waterfill(&g, 0.2, 0.5);
        for &pi in p.values() {
            assert_relative_eq!(pi, 0.2, epsilon = 1e-9);
        }
        assert!(rep.kkt_residual <= 1e-9);
    }

    #[test]
    fn peak_below_average_caps_everywhere() {
        let g = gains(&[(1.0, 1.0), (3.0, 0.5), (0.2, 2.0)]);
        let (p, rep) = waterfill(&g, 0.5, 0.3);
        for &pi in p.values() {
            assert_relative_eq!(pi, 0.3, epsilon = 1e-12);
        }
        assert_eq!(rep.nu, 0.0);
    }

    #[test]
    fn matches_simplex_grid_oracle() {
        // N = 3, a = (1, 2, 4), b = 1, P_avg = 1, P_peak = 2.
        let g = gains(&[(1.0, 1.0), (2.0, 1.0), (4.0, 1.0)]);
        let (p, _) = waterfill(&g, 1.0, 2.0);
        let obj = average_rate(&p, &g);

        // Brute force over the budget simplex at 1e-3 resolution.
        let mut oracle = 0.0f64;
        let steps = 2000usize; // 1e-3 over [0, 2]
        for i in 0..=steps {
            let p1 = 2.0 * i as f64 / steps as f64;
            for j in 0..=steps {
                let p2 = 2.0 * j as f64 / steps as f64;
                let p3 = 3.0 - p1 - p2;
                if !(0.0..=2.0).contains(&p3) {
                    continue;
                }
                let cand = ((1.0 + p1).log2() + (1.0 + 2.0 * p2).log2() + (1.0 + 4.0 * p3).log2())
                    / 3.0;
                oracle = oracle.max(cand);
            }
        }
        assert!(
            obj >= oracle - 1e-3,
            "waterfill {obj} vs grid oracle {oracle}"
        );
    }

    #[test]
    fn zero_gain_slots_get_zero_power() {
        let g = gains(&[(0.0, 1.0), (2.0, 1.0)]);
        let (p, rep) = waterfill(&g, 0.2, 0.5);
        assert_eq!(p.values()[0], 0.0);
        assert!(p.values()[1] > 0.0);
        assert!(!rep.all_gains_zero);
    }

    #[test]
    fn all_zero_gains_flagged() {
        let g = gains(&[(0.0, 1.0); 3]);
        let (p, rep) = waterfill(&g, 0.2, 0.5);
        assert!(rep.all_gains_zero);
        assert!(p.values().iter().all(|&x| x == 0.0));
    }

    proptest! {
        /// Returned profile is feasible, better slots get no less power,
        /// and no random feasible perturbation beats it.
        #[test]
        fn feasibility_ordering_and_optimality(
            seeds in proptest::collection::vec((1e-3..1.0f64, 1e-3..1.0f64), 2..6),
            p_avg in 0.05..0.4f64,
            extra in 0.0..0.4f64,
        ) {
            let p_peak = p_avg + extra;
            let g: Vec<SlotGain> = seeds.iter().map(|&(a, b)| SlotGain { a, b }).collect();
            let n = g.len();
            let (p, rep) = waterfill(&g, p_avg, p_peak);

            // Feasibility is exact.
            prop_assert!(p.mean() <= p_avg + 1e-9);
            for &pi in p.values() {
                prop_assert!((-1e-12..=p_peak + 1e-12).contains(&pi));
            }
            prop_assert!(rep.iterations <= 200);

            // Monotone ordering in b/a.
            for i in 0..n {
                for j in 0..n {
                    if g[i].b / g[i].a < g[j].b / g[j].a {
                        prop_assert!(p.values()[i] >= p.values()[j] - 1e-9);
                    }
                }
            }

            // No feasible perturbation improves the objective.
            let obj = average_rate(&p, &g);
            let mut rng_state = 0x9E3779B97F4A7C15u64;
            let mut next = || {
                rng_state = rng_state.wrapping_mul(6364136223846793005).wrapping_add(1);
                (rng_state >> 11) as f64 / (1u64 << 53) as f64
            };
            for _ in 0..40 {
                let cand: Vec<f64> = (0..n).map(|_| next() * p_peak).collect();
                let mean = cand.iter().sum::<f64>() / n as f64;
                if mean > p_avg {
                    continue;
                }
                let cand_obj = average_rate(&PowerProfile::new(cand), &g);
                prop_assert!(obj >= cand_obj - 1e-6);
            }
        }
    }
}
