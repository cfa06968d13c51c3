//! Deterministic line-of-sight channel coefficients and the average-rate
//! objective.
//!
//! Every link is LoS with inverse-square path loss: a direct link has
//! coefficient `sqrt(rho) / d * exp(-j 2 pi d / lambda)`, and links through
//! the IRS carry a per-element planar-array phase response on top. The
//! composite ground-node and jammer channels are the sums of the direct
//! path and the phase-shifted cascade through the surface.

use num_complex::Complex64;
use thiserror::Error;

use crate::scenario::{IrsGrid, PhaseSchedule, Position3, PowerProfile, Scenario, Trajectory};

#[derive(Debug, Error)]
pub enum GeometryError {
    #[error("degenerate geometry: {0}")]
    ZeroDistance(String),
}

/// All channel quantities of one time slot.
#[derive(Debug, Clone)]
pub struct SlotChannels {
    /// Direct ground-node to UAV coefficient.
    pub h_gu: Complex64,
    /// Direct jammer to UAV coefficient.
    pub h_mu: Complex64,
    /// IRS to UAV coefficients, length `K`.
    pub h_ru: Vec<Complex64>,
    /// Ground node to IRS coefficients, length `K`.
    pub h_gr: Vec<Complex64>,
    /// Jammer to IRS coefficients, length `K`.
    pub h_mr: Vec<Complex64>,
    /// Composite ground-node channel (direct plus cascade).
    pub h_g: Complex64,
    /// Composite jammer channel (direct plus cascade).
    pub h_m: Complex64,
    /// Signal channel gain `|h_g|^2`.
    pub a: f64,
    /// Interference-plus-noise power `P_M |h_m|^2 + sigma^2`, watts.
    pub b: f64,
}

/// Ground-node/jammer to IRS responses; these do not depend on the UAV
/// position, so they are computed once per scenario.
#[derive(Debug, Clone)]
pub struct StaticChannels {
    /// Unit-modulus array response for the ground node, length `K`.
    pub g_gr: Vec<Complex64>,
    /// Unit-modulus array response for the jammer, length `K`.
    pub g_mr: Vec<Complex64>,
    /// Ground node to IRS distance, meters.
    pub d_gr: f64,
    /// Jammer to IRS distance, meters.
    pub d_mr: f64,
}

impl StaticChannels {
    pub fn new(s: &Scenario) -> Result<Self, GeometryError> {
        match &s.irs {
            None => Ok(Self {
                g_gr: Vec::new(),
                g_mr: Vec::new(),
                d_gr: f64::NAN,
                d_mr: f64::NAN,
            }),
            Some(grid) => Ok(Self {
                g_gr: upa_response(&s.q_g, grid, s.lambda)?,
                g_mr: upa_response(&s.q_m, grid, s.lambda)?,
                d_gr: s.q_g.distance(&grid.origin),
                d_mr: s.q_m.distance(&grid.origin),
            }),
        }
    }
}

/// LoS coefficient of a direct link: `sqrt(rho / d^2) exp(-j 2 pi d / lambda)`.
pub fn direct_channel(
    tx: &Position3,
    rx: &Position3,
    rho: f64,
    lambda: f64,
) -> Result<Complex64, GeometryError> {
    let d = tx.distance(rx);
    if d == 0.0 {
        return Err(GeometryError::ZeroDistance(format!(
            "transmitter and receiver coincide at {tx}"
        )));
    }
    let mag = rho.sqrt() / d;
    let phase = -std::f64::consts::TAU * d / lambda;
    Ok(Complex64::from_polar(mag, phase))
}

/// Unit-modulus planar-array response of the IRS toward `node`,
/// length `K = kx * kz`.
///
/// The per-axis phase increments follow the array geometry:
/// `alpha_x = (2 pi d / lambda) * dz / d_r` over the `kx` factor and
/// `alpha_z = (2 pi d / lambda) * dx / d_r` over the `kz` factor, where
/// `dx`, `dz` are the node offsets from the array origin and `d_r` the
/// node-array distance. The same formula serves the UAV-side and the
/// ground-side links. An overall `exp(-j 2 pi d_r / lambda)` distance
/// phase is included.
pub fn upa_response(
    node: &Position3,
    grid: &IrsGrid,
    lambda: f64,
) -> Result<Vec<Complex64>, GeometryError> {
    let d_r = node.distance(&grid.origin);
    if d_r == 0.0 {
        return Err(GeometryError::ZeroDistance(format!(
            "node coincides with the IRS at {node}"
        )));
    }
    let wave = std::f64::consts::TAU * grid.element_spacing / lambda;
    let alpha_x = wave * (node.z - grid.origin.z) / d_r;
    let alpha_z = wave * (node.x - grid.origin.x) / d_r;
    let lead = Complex64::from_polar(1.0, -std::f64::consts::TAU * d_r / lambda);
    let mx: Vec<Complex64> = (0..grid.kx)
        .map(|i| Complex64::from_polar(1.0, -(i as f64) * alpha_x))
        .collect();
    let mz: Vec<Complex64> = (0..grid.kz)
        .map(|i| Complex64::from_polar(1.0, -(i as f64) * alpha_z))
        .collect();
    let mut out = Vec::with_capacity(grid.kx * grid.kz);
    for x in &mx {
        for z in &mz {
            out.push(lead * x * z);
        }
    }
    Ok(out)
}

/// Full channel state for one slot at UAV position `q_uav` with reflection
/// vector `v` (length `K + 1`, last entry 1).
pub fn slot_channels(
    s: &Scenario,
    stat: &StaticChannels,
    q_uav: &Position3,
    v: &[Complex64],
) -> Result<SlotChannels, GeometryError> {
    let k = s.k_elements();
    debug_assert_eq!(v.len(), k + 1);
    let h_gu = direct_channel(&s.q_g, q_uav, s.rho, s.lambda)?;
    let h_mu = direct_channel(&s.q_m, q_uav, s.rho, s.lambda)?;

    let (h_ru, h_gr, h_mr) = match &s.irs {
        None => (Vec::new(), Vec::new(), Vec::new()),
        Some(grid) => {
            let d_ru = q_uav.distance(&grid.origin);
            if d_ru == 0.0 {
                return Err(GeometryError::ZeroDistance(
                    "UAV coincides with the IRS".into(),
                ));
            }
            let g_ru = upa_response(q_uav, grid, s.lambda)?;
            let lru = s.rho.sqrt() / d_ru;
            let lgr = s.rho.sqrt() / stat.d_gr;
            let lmr = s.rho.sqrt() / stat.d_mr;
            let h_ru: Vec<Complex64> = g_ru.iter().map(|g| lru * g).collect();
            let h_gr: Vec<Complex64> = stat.g_gr.iter().map(|g| lgr * g).collect();
            let h_mr: Vec<Complex64> = stat.g_mr.iter().map(|g| lmr * g).collect();
            (h_ru, h_gr, h_mr)
        }
    };

    let cascade = |h_jr: &[Complex64]| -> Complex64 {
        h_jr.iter()
            .zip(&h_ru)
            .zip(&v[..k])
            .map(|((jr, ru), vi)| jr.conj() * vi * ru)
            .sum()
    };
    let h_g = h_gu + cascade(&h_gr);
    let h_m = h_mu + cascade(&h_mr);
    let a = h_g.norm_sqr();
    let b = s.p_m * h_m.norm_sqr() + s.sigma2;
    Ok(SlotChannels {
        h_gu,
        h_mu,
        h_ru,
        h_gr,
        h_mr,
        h_g,
        h_m,
        a,
        b,
    })
}

/// Per-slot signal gain and interference-plus-noise power.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SlotGain {
    /// `|h_g|^2`.
    pub a: f64,
    /// `P_M |h_m|^2 + sigma^2`, watts.
    pub b: f64,
}

/// Gains for every slot of a trajectory under a phase schedule.
pub fn slot_gains(
    s: &Scenario,
    stat: &StaticChannels,
    q: &Trajectory,
    v: &PhaseSchedule,
) -> Result<Vec<SlotGain>, GeometryError> {
    (1..=s.n_slots)
        .map(|n| {
            let sc = slot_channels(s, stat, &q.point(n), v.slot(n))?;
            Ok(SlotGain { a: sc.a, b: sc.b })
        })
        .collect()
}

/// Achievable average rate `(1/N) sum log2(1 + p a / b)`, bits/s/Hz.
pub fn average_rate(p: &PowerProfile, gains: &[SlotGain]) -> f64 {
    assert_eq!(p.len(), gains.len());
    if gains.is_empty() {
        return 0.0;
    }
    p.values()
        .iter()
        .zip(gains)
        .map(|(&pn, g)| (1.0 + pn * g.a / g.b).log2())
        .sum::<f64>()
        / gains.len() as f64
}

/// Average rate of a full state (trajectory, phases, power).
pub fn state_rate(
    s: &Scenario,
    stat: &StaticChannels,
    p: &PowerProfile,
    v: &PhaseSchedule,
    q: &Trajectory,
) -> Result<f64, GeometryError> {
    Ok(average_rate(p, &slot_gains(s, stat, q, v)?))
}
