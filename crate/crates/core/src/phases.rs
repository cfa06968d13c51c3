//! Per-slot IRS phase-shift optimization.
//!
//! Each slot's SINR maximization over the unit-modulus reflection vector
//! is a fractional program; lifting `v` to `V = v v^H` and dropping the
//! rank-1 constraint turns every Dinkelbach subproblem into a
//! unit-diagonal SDP handled by [`crate::convex::sdp`]. A rank-1 solution
//! is recovered from the relaxed optimum by eigenvector projection or
//! Gaussian randomization, and a final guard keeps the incoming vector
//! whenever the recovered one does not improve the slot SINR, so the
//! outer alternating loop stays monotone.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

use crate::channel::{slot_channels, SlotChannels, StaticChannels};
use crate::convex::sdp::{self, SdpSolution};
use crate::convex::HermitianMatrix;
use crate::scenario::{PhaseSchedule, PowerProfile, Scenario, Trajectory};

/// Lifted rank-1 cascade matrices of one slot, dimension `K + 1`:
/// `R_J = w_J w_J^H` with `w_J = G_J^H g_J`, `G_J = diag([h_RU; h_JU])`
/// and `g_J = [h_JR; 1]`.
#[derive(Debug, Clone)]
pub struct CascadePair {
    /// Ground-node cascade matrix.
    pub r_g: HermitianMatrix,
    /// Jammer cascade matrix.
    pub r_m: HermitianMatrix,
    w_g: DVector<Complex64>,
    w_m: DVector<Complex64>,
}

impl CascadePair {
    /// `|h_J(v)|^2 = |w_J^H v|^2` for both links.
    pub fn link_gains(&self, v: &[Complex64]) -> (f64, f64) {
        let dot = |w: &DVector<Complex64>| -> f64 {
            w.iter()
                .zip(v)
                .map(|(wi, vi)| wi.conj() * vi)
                .sum::<Complex64>()
                .norm_sqr()
        };
        (dot(&self.w_g), dot(&self.w_m))
    }

    /// Slot SINR of a reflection vector under power `p`.
    pub fn sinr(&self, v: &[Complex64], p: f64, p_m: f64, sigma2: f64) -> f64 {
        let (g, m) = self.link_gains(v);
        p * g / (p_m * m + sigma2)
    }

    /// SINR evaluated on a lifted matrix (the relaxation bound).
    pub fn sinr_lifted(&self, v_mat: &HermitianMatrix, p: f64, p_m: f64, sigma2: f64) -> f64 {
        let num = p * self.r_g.trace_product(v_mat);
        let den = p_m * self.r_m.trace_product(v_mat) + sigma2;
        num / den
    }
}

/// Builds the lifted cascade matrices from one slot's channels.
pub fn build_cascade(sc: &SlotChannels) -> CascadePair {
    let k = sc.h_ru.len();
    let build = |h_jr: &[Complex64], h_ju: Complex64| -> DVector<Complex64> {
        let mut w = DVector::zeros(k + 1);
        for i in 0..k {
            w[i] = sc.h_ru[i].conj() * h_jr[i];
        }
        w[k] = h_ju.conj();
        w
    };
    let w_g = build(&sc.h_gr, sc.h_gu);
    let w_m = build(&sc.h_mr, sc.h_mu);
    CascadePair {
        r_g: HermitianMatrix::from_rank1(&w_g),
        r_m: HermitianMatrix::from_rank1(&w_m),
        w_g,
        w_m,
    }
}

/// Why a slot solve left the phases unchanged or ended early.
#[derive(Debug, Clone, PartialEq)]
pub enum PhaseFlag {
    /// The signal term is identically zero; nothing to optimize.
    ZeroSignal { slot: usize },
    /// Dinkelbach hit its outer-iteration cap before the threshold.
    DinkelbachCap { slot: usize },
    /// The SDP kernel exhausted its budget at least once.
    SdpCap { slot: usize },
    /// Randomized recovery did not beat the incoming vector; it was kept.
    KeptIncoming { slot: usize },
}

/// Outcome of a per-slot Dinkelbach run.
#[derive(Debug, Clone)]
pub struct DinkelbachOutcome {
    /// Relaxed optimum (unit diagonal, PSD).
    pub v_matrix: HermitianMatrix,
    /// Final ratio value (inverse SINR of the relaxation).
    pub mu: f64,
    /// Outer Dinkelbach iterations.
    pub iterations: usize,
    pub sdp_capped: bool,
    pub reached_cap: bool,
    /// The signal term vanished; `v_matrix` is the initial lift.
    pub zero_signal: bool,
}

/// Dinkelbach cap beyond which a run is flagged unconverged.
pub const MAX_DINKELBACH: usize = 50;

/// Alternates the ratio update `mu = (P_M tr(R_M V) + s2) / (p tr(R_G V))`
/// with the SDP step `V = argmin tr((P_M R_M - mu p R_G) V)` until the
/// fractional SINR improvement falls under `eps1`. Requires `p > 0`.
pub fn dinkelbach_phases(
    cp: &CascadePair,
    p: f64,
    p_m: f64,
    sigma2: f64,
    eps1: f64,
    v_init: &[Complex64],
) -> DinkelbachOutcome {
    assert!(p > 0.0, "phase optimization is defined for positive power");
    let dim = cp.r_g.dim();
    let v0 = DVector::from_column_slice(v_init);
    let mut v_mat = HermitianMatrix::from_rank1(&v0);

    let ratio = |v: &HermitianMatrix| -> (f64, f64) {
        let num = p_m * cp.r_m.trace_product(v) + sigma2;
        let den = p * cp.r_g.trace_product(v);
        (num / den, den)
    };

    let (mut mu, den0) = ratio(&v_mat);
    if !(den0 > 0.0) {
        return DinkelbachOutcome {
            v_matrix: v_mat,
            mu: f64::INFINITY,
            iterations: 0,
            sdp_capped: false,
            reached_cap: false,
            zero_signal: true,
        };
    }

    let mut sdp_capped = false;
    let mut reached_cap = true;
    let mut iterations = 0;
    let mut sinr = 1.0 / mu;
    for it in 1..=MAX_DINKELBACH {
        iterations = it;
        // Cost matrix of the parametric subproblem.
        let mut c: DMatrix<Complex64> = DMatrix::zeros(dim, dim);
        c += cp.r_m.as_matrix() * Complex64::new(p_m, 0.0);
        c -= cp.r_g.as_matrix() * Complex64::new(mu * p, 0.0);
        let sol: SdpSolution = sdp::solve_unit_diag(
            &HermitianMatrix::new(c).expect("cost matrix is Hermitian by construction"),
            crate::tol::SOLVER,
        )
        .expect("dimensions are consistent");
        sdp_capped |= sol.capped;
        v_mat = sol.v;
        let (mu_next, den) = ratio(&v_mat);
        if !(den > 0.0) {
            break;
        }
        mu = mu_next;
        let sinr_next = 1.0 / mu;
        let gain = (sinr_next - sinr) / sinr.max(1e-300);
        sinr = sinr_next.max(sinr);
        if gain < eps1 {
            reached_cap = false;
            break;
        }
    }
    DinkelbachOutcome {
        v_matrix: v_mat,
        mu,
        iterations,
        sdp_capped,
        reached_cap,
        zero_signal: false,
    }
}

/// Recovers a unit-modulus vector from a lifted solution.
///
/// Near-rank-1 matrices project their principal eigenvector entrywise to
/// the unit circle; otherwise `n_samples` Gaussian draws with covariance
/// `V` are projected and the best-SINR candidate wins. The result is
/// rotated so its last entry is exactly 1.
pub fn extract_rank1(
    v_mat: &HermitianMatrix,
    cp: &CascadePair,
    p: f64,
    p_m: f64,
    sigma2: f64,
    n_samples: usize,
    rng: &mut ChaCha8Rng,
) -> Vec<Complex64> {
    let m = v_mat.dim();
    let eig = v_mat.as_matrix().clone().symmetric_eigen();
    let mut order: Vec<usize> = (0..m).collect();
    order.sort_by(|&i, &j| eig.eigenvalues[j].partial_cmp(&eig.eigenvalues[i]).unwrap());
    let lead = eig.eigenvalues[order[0]].max(0.0);
    let second = if m > 1 { eig.eigenvalues[order[1]].max(0.0) } else { 0.0 };

    let unit_project = |w: &DVector<Complex64>| -> Vec<Complex64> {
        w.iter()
            .map(|z| {
                if z.norm() < 1e-300 {
                    Complex64::new(1.0, 0.0)
                } else {
                    z / z.norm()
                }
            })
            .collect()
    };

    let principal = unit_project(&eig.eigenvectors.column(order[0]).into_owned());
    let mut best = principal;
    let mut best_sinr = cp.sinr(&best, p, p_m, sigma2);

    if lead > 0.0 && second / lead > 1e-6 {
        // Factor V = F F^H for the sampler.
        let mut factor: DMatrix<Complex64> = DMatrix::zeros(m, m);
        for (col, &k) in order.iter().enumerate() {
            let scale = Complex64::new(eig.eigenvalues[k].max(0.0).sqrt(), 0.0);
            factor
                .column_mut(col)
                .copy_from(&(eig.eigenvectors.column(k) * scale));
        }
        for _ in 0..n_samples {
            let z = DVector::from_iterator(
                m,
                (0..m).map(|_| {
                    Complex64::new(standard_normal(rng), standard_normal(rng))
                        * std::f64::consts::FRAC_1_SQRT_2
                }),
            );
            let cand = unit_project(&(&factor * z));
            let s = cp.sinr(&cand, p, p_m, sigma2);
            if s > best_sinr {
                best_sinr = s;
                best = cand;
            }
        }
    }

    // Global rotation pinning the last entry to exactly 1.
    let last = best[m - 1];
    let rot = last.conj() / last.norm();
    let mut out: Vec<Complex64> = best
        .iter()
        .map(|z| {
            let r = z * rot;
            r / r.norm()
        })
        .collect();
    out[m - 1] = Complex64::new(1.0, 0.0);
    out
}

fn standard_normal(rng: &mut ChaCha8Rng) -> f64 {
    // Box-Muller; one draw per call keeps the stream simple.
    let u1: f64 = rng.gen_range(f64::MIN_POSITIVE..1.0);
    let u2: f64 = rng.gen();
    (-2.0 * u1.ln()).sqrt() * (std::f64::consts::TAU * u2).cos()
}

/// Options for the per-slot solves.
#[derive(Debug, Clone, Copy)]
pub struct PhaseOptions {
    /// Dinkelbach stop threshold on the fractional SINR increase.
    pub eps1: f64,
    /// Gaussian-randomization sample count.
    pub n_samples: usize,
    /// Base seed; per-slot streams are derived from it.
    pub seed: u64,
    /// Outer-loop iteration the call belongs to (separates seed streams).
    pub outer_iteration: u64,
}

impl Default for PhaseOptions {
    fn default() -> Self {
        Self { eps1: 1e-3, n_samples: 200, seed: 0, outer_iteration: 0 }
    }
}

/// Per-slot independent phase update over a whole schedule. Slots with
/// zero power keep their incoming vectors; every other slot keeps the
/// better of the recovered and incoming vectors, so the resulting average
/// rate cannot drop.
pub fn optimize_phases_all_slots(
    s: &Scenario,
    stat: &StaticChannels,
    q: &Trajectory,
    p: &PowerProfile,
    incoming: &PhaseSchedule,
    opts: &PhaseOptions,
) -> (PhaseSchedule, Vec<PhaseFlag>) {
    let k = s.k_elements();
    let mut out = incoming.clone();
    let mut flags = Vec::new();
    if k == 0 {
        return (out, flags);
    }
    for n in 1..=s.n_slots {
        let pn = p.values()[n - 1];
        if pn <= 0.0 {
            continue;
        }
        let sc = slot_channels(s, stat, &q.point(n), incoming.slot(n))
            .expect("validated scenario geometry");
        let cp = build_cascade(&sc);
        let outcome = dinkelbach_phases(&cp, pn, s.p_m, s.sigma2, opts.eps1, incoming.slot(n));
        if outcome.zero_signal {
            flags.push(PhaseFlag::ZeroSignal { slot: n });
            continue;
        }
        if outcome.sdp_capped {
            flags.push(PhaseFlag::SdpCap { slot: n });
        }
        if outcome.reached_cap {
            flags.push(PhaseFlag::DinkelbachCap { slot: n });
        }
        let mut rng = slot_rng(opts.seed, opts.outer_iteration, n as u64);
        let cand = extract_rank1(
            &outcome.v_matrix,
            &cp,
            pn,
            s.p_m,
            s.sigma2,
            opts.n_samples,
            &mut rng,
        );
        let incoming_sinr = cp.sinr(incoming.slot(n), pn, s.p_m, s.sigma2);
        let cand_sinr = cp.sinr(&cand, pn, s.p_m, s.sigma2);
        if cand_sinr > incoming_sinr {
            *out.slot_mut(n) = cand;
        } else {
            flags.push(PhaseFlag::KeptIncoming { slot: n });
        }
    }
    (out, flags)
}

/// Deterministic per-slot random stream, independent of slot scheduling.
fn slot_rng(seed: u64, outer: u64, slot: u64) -> ChaCha8Rng {
    let mixed = splitmix(
        seed ^ splitmix(outer.wrapping_add(0x9E3779B97F4A7C15))
            ^ splitmix(slot.wrapping_mul(0xBF58476D1CE4E5B9)),
    );
    ChaCha8Rng::seed_from_u64(mixed)
}

fn splitmix(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E3779B97F4A7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D049BB133111EB);
    z ^ (z >> 31)
}
