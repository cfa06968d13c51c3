//! Static problem instance: geometry, IRS grid, power/noise parameters and
//! the time grid, plus the feasible-set types shared by every block
//! (trajectories, power profiles, phase schedules).
//!
//! Scenarios are loaded from a flat `key = value` text file, one key per
//! line, SI units throughout. See [`load_scenario`] for the key list.

use std::fmt;
use std::path::Path;

use num_complex::Complex64;
use thiserror::Error;

use crate::tol;

/// A point in 3-D Cartesian coordinates, meters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Position3 {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl Position3 {
    pub fn new(x: f64, y: f64, z: f64) -> Self {
        Self { x, y, z }
    }

    pub fn distance(&self, other: &Position3) -> f64 {
        let dx = self.x - other.x;
        let dy = self.y - other.y;
        let dz = self.z - other.z;
        (dx * dx + dy * dy + dz * dz).sqrt()
    }

    pub fn is_finite(&self) -> bool {
        self.x.is_finite() && self.y.is_finite() && self.z.is_finite()
    }
}

impl fmt::Display for Position3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.x, self.y, self.z)
    }
}

/// Uniform planar array of reflecting elements in the x-z plane.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IrsGrid {
    /// Element count along x.
    pub kx: usize,
    /// Element count along z.
    pub kz: usize,
    /// Element separation in meters.
    pub element_spacing: f64,
    /// Position of the array, meters.
    pub origin: Position3,
}

impl IrsGrid {
    /// Total element count `K = kx * kz`.
    pub fn elements(&self) -> usize {
        self.kx * self.kz
    }
}

/// Errors produced while loading or validating a scenario.
#[derive(Debug, Error)]
pub enum ScenarioError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("missing required key `{0}`")]
    MissingKey(&'static str),
    #[error("invalid scenario: {0}")]
    Validation(String),
}

/// Full static problem description.
#[derive(Debug, Clone)]
pub struct Scenario {
    /// UAV start position (altitude `h0`).
    pub q_start: Position3,
    /// UAV end position (altitude `h0`).
    pub q_end: Position3,
    /// Ground node position (ground level).
    pub q_g: Position3,
    /// Jammer position (ground level).
    pub q_m: Position3,
    /// Reflecting surface, absent when the element count is zero.
    pub irs: Option<IrsGrid>,
    /// UAV flight altitude, meters.
    pub h0: f64,
    /// Number of time slots.
    pub n_slots: usize,
    /// Slot length, seconds.
    pub delta_t: f64,
    /// Maximum UAV speed, m/s.
    pub v_max: f64,
    /// Average transmit-power budget of the ground node, watts.
    pub p_avg: f64,
    /// Peak transmit power of the ground node, watts.
    pub p_peak: f64,
    /// Jammer transmit power, watts.
    pub p_m: f64,
    /// Path loss at 1 m reference distance, linear.
    pub rho: f64,
    /// Noise power, watts (linear).
    pub sigma2: f64,
    /// Carrier wavelength, meters.
    pub lambda: f64,
}

impl Scenario {
    /// Number of IRS elements (0 when no IRS is present).
    pub fn k_elements(&self) -> usize {
        self.irs.map(|g| g.elements()).unwrap_or(0)
    }

    /// Maximum per-slot displacement, meters.
    pub fn max_step(&self) -> f64 {
        self.v_max * self.delta_t
    }

    /// Copy of this scenario with the IRS removed.
    pub fn without_irs(&self) -> Scenario {
        Scenario { irs: None, ..self.clone() }
    }

    /// Copy of this scenario with `k` IRS elements arranged on a
    /// near-square grid (`kx` is the largest divisor of `k` not exceeding
    /// `sqrt(k)`). `k = 0` removes the IRS; the origin and spacing of the
    /// existing grid are kept, falling back to half-wavelength spacing at
    /// the current origin if there was none.
    pub fn with_irs_elements(&self, k: usize) -> Scenario {
        if k == 0 {
            return self.without_irs();
        }
        let (kx, kz) = near_square_factors(k);
        let (origin, spacing) = match self.irs {
            Some(g) => (g.origin, g.element_spacing),
            None => (Position3::new(0.0, 0.0, 0.0), self.lambda / 2.0),
        };
        Scenario {
            irs: Some(IrsGrid { kx, kz, element_spacing: spacing, origin }),
            ..self.clone()
        }
    }

    /// Checks every invariant; returns a message naming the first violation.
    pub fn validate(&self) -> Result<(), ScenarioError> {
        let err = |msg: String| Err(ScenarioError::Validation(msg));
        for (name, p) in [
            ("q_start", &self.q_start),
            ("q_end", &self.q_end),
            ("q_g", &self.q_g),
            ("q_m", &self.q_m),
        ] {
            if !p.is_finite() {
                return err(format!("{name} has a non-finite coordinate"));
            }
        }
        if let Some(g) = &self.irs {
            if !g.origin.is_finite() {
                return err("q_r has a non-finite coordinate".into());
            }
            if g.kx < 1 || g.kz < 1 {
                return err("IRS grid needs kx >= 1 and kz >= 1".into());
            }
            if !(g.element_spacing > 0.0) {
                return err("element_spacing must be positive".into());
            }
        }
        if !(self.h0 > 0.0) {
            return err("h0 must be positive".into());
        }
        for (name, q) in [("q_start", &self.q_start), ("q_end", &self.q_end)] {
            if (q.z - self.h0).abs() > 1e-9 * self.h0.max(1.0) {
                return err(format!("{name}.z must equal h0 = {}", self.h0));
            }
        }
        for (name, q) in [("q_g", &self.q_g), ("q_m", &self.q_m)] {
            if q.z.abs() > 1e-12 {
                return err(format!("{name} must lie on the ground (z = 0)"));
            }
        }
        if self.n_slots < 1 {
            return err("n_slots must be at least 1".into());
        }
        if !(self.delta_t > 0.0) {
            return err("delta_t must be positive".into());
        }
        if !(self.v_max > 0.0) {
            return err("v_max must be positive".into());
        }
        if !(self.p_avg > 0.0) {
            return err("p_avg must be positive".into());
        }
        if self.p_avg > self.p_peak {
            return err(format!(
                "P_avg exceeds P_peak ({} > {})",
                self.p_avg, self.p_peak
            ));
        }
        if self.p_m < 0.0 {
            return err("p_m must be nonnegative".into());
        }
        if !(self.sigma2 > 0.0) {
            return err("sigma2 must be positive".into());
        }
        if !(self.rho > 0.0) {
            return err("rho must be positive".into());
        }
        if !(self.lambda > 0.0) {
            return err("lambda must be positive".into());
        }
        let reach = self.n_slots as f64 * self.max_step();
        let need = self.q_start.distance(&self.q_end);
        if need > reach + tol::FEAS {
            return err(format!(
                "endpoint unreachable within N*delta_t*v_max ({need} m > {reach} m)"
            ));
        }
        Ok(())
    }
}

fn near_square_factors(k: usize) -> (usize, usize) {
    let mut kx = (k as f64).sqrt().floor() as usize;
    while kx > 1 && k % kx != 0 {
        kx -= 1;
    }
    (kx.max(1), k / kx.max(1))
}

/// UAV horizontal positions per slot at fixed altitude, including both
/// fixed endpoints: `point(0) = q_start`, `point(N) = q_end`.
#[derive(Debug, Clone, PartialEq)]
pub struct Trajectory {
    points: Vec<[f64; 2]>,
    altitude: f64,
}

impl Trajectory {
    /// Builds a trajectory from `N + 1` horizontal points. The first and
    /// last points must match the scenario endpoints; this is not checked
    /// here but by [`Trajectory::validate`].
    pub fn from_points(points: Vec<[f64; 2]>, altitude: f64) -> Self {
        assert!(points.len() >= 2, "need at least the two endpoints");
        Self { points, altitude }
    }

    /// Number of time slots `N`.
    pub fn n_slots(&self) -> usize {
        self.points.len() - 1
    }

    pub fn altitude(&self) -> f64 {
        self.altitude
    }

    /// Position at grid index `n` in `0..=N` (0 is the start point).
    pub fn point(&self, n: usize) -> Position3 {
        Position3::new(self.points[n][0], self.points[n][1], self.altitude)
    }

    /// Horizontal coordinates, length `N + 1`.
    pub fn horizontal(&self) -> &[[f64; 2]] {
        &self.points
    }

    /// Positions occupied during slots `1..=N`.
    pub fn slot_positions(&self) -> impl Iterator<Item = Position3> + '_ {
        (1..=self.n_slots()).map(move |n| self.point(n))
    }

    /// Checks endpoints and the per-slot speed limit.
    pub fn validate(&self, s: &Scenario) -> Result<(), ScenarioError> {
        if self.n_slots() != s.n_slots {
            return Err(ScenarioError::Validation(format!(
                "trajectory has {} slots, scenario expects {}",
                self.n_slots(),
                s.n_slots
            )));
        }
        let start = self.point(0);
        let end = self.point(self.n_slots());
        if start.distance(&s.q_start) > tol::FEAS || end.distance(&s.q_end) > tol::FEAS {
            return Err(ScenarioError::Validation(
                "trajectory endpoints do not match the scenario".into(),
            ));
        }
        let cap = s.max_step() + tol::FEAS;
        for n in 1..=self.n_slots() {
            let step = self.point(n).distance(&self.point(n - 1));
            if step > cap {
                return Err(ScenarioError::Validation(format!(
                    "slot {n} moves {step} m, above the {0} m speed limit",
                    s.max_step()
                )));
            }
        }
        Ok(())
    }
}

/// Straight flight from `q_start` to `q_end` at uniform speed:
/// `q[n] = q_start + (n / N) (q_end - q_start)` for `n` in `0..=N`.
pub fn line_trajectory(s: &Scenario) -> Trajectory {
    let n = s.n_slots;
    let points = (0..=n)
        .map(|i| {
            let f = i as f64 / n as f64;
            [
                s.q_start.x + f * (s.q_end.x - s.q_start.x),
                s.q_start.y + f * (s.q_end.y - s.q_start.y),
            ]
        })
        .collect();
    Trajectory::from_points(points, s.h0)
}

/// Per-slot transmit powers of the ground node, watts.
#[derive(Debug, Clone, PartialEq)]
pub struct PowerProfile {
    values: Vec<f64>,
}

impl PowerProfile {
    pub fn new(values: Vec<f64>) -> Self {
        Self { values }
    }

    /// Constant profile at `level` watts for `n` slots.
    pub fn uniform(level: f64, n: usize) -> Self {
        Self { values: vec![level; n] }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn mean(&self) -> f64 {
        if self.values.is_empty() {
            0.0
        } else {
            self.values.iter().sum::<f64>() / self.values.len() as f64
        }
    }

    pub fn validate(&self, s: &Scenario) -> Result<(), ScenarioError> {
        if self.len() != s.n_slots {
            return Err(ScenarioError::Validation(format!(
                "power profile has {} slots, scenario expects {}",
                self.len(),
                s.n_slots
            )));
        }
        for (i, &p) in self.values.iter().enumerate() {
            if !(0.0..=s.p_peak + tol::FEAS).contains(&p) {
                return Err(ScenarioError::Validation(format!(
                    "p[{}] = {p} outside [0, {}]",
                    i + 1,
                    s.p_peak
                )));
            }
        }
        if self.mean() > s.p_avg + tol::FEAS {
            return Err(ScenarioError::Validation(format!(
                "mean power {} exceeds P_avg = {}",
                self.mean(),
                s.p_avg
            )));
        }
        Ok(())
    }
}

/// Per-slot IRS reflection vectors of length `K + 1`; every entry is
/// unit-modulus and the last entry is pinned to `1`.
#[derive(Debug, Clone, PartialEq)]
pub struct PhaseSchedule {
    vectors: Vec<Vec<Complex64>>,
}

impl PhaseSchedule {
    pub fn new(vectors: Vec<Vec<Complex64>>) -> Self {
        Self { vectors }
    }

    /// All phase shifts zero: every reflection vector is all-ones.
    pub fn zero_phase(k: usize, n: usize) -> Self {
        Self { vectors: vec![vec![Complex64::new(1.0, 0.0); k + 1]; n] }
    }

    pub fn n_slots(&self) -> usize {
        self.vectors.len()
    }

    /// Reflection vector of slot `n` in `1..=N`.
    pub fn slot(&self, n: usize) -> &[Complex64] {
        &self.vectors[n - 1]
    }

    pub fn slot_mut(&mut self, n: usize) -> &mut Vec<Complex64> {
        &mut self.vectors[n - 1]
    }

    /// Per-element phase shifts of slot `n` (excludes the pinned entry),
    /// wrapped into `[0, 2*pi)`.
    pub fn thetas(&self, n: usize) -> Vec<f64> {
        let v = self.slot(n);
        v[..v.len() - 1]
            .iter()
            .map(|c| {
                let a = c.arg();
                if a < 0.0 { a + std::f64::consts::TAU } else { a }
            })
            .collect()
    }

    pub fn validate(&self, s: &Scenario) -> Result<(), ScenarioError> {
        let k = s.k_elements();
        if self.n_slots() != s.n_slots {
            return Err(ScenarioError::Validation(format!(
                "phase schedule has {} slots, scenario expects {}",
                self.n_slots(),
                s.n_slots
            )));
        }
        for (i, v) in self.vectors.iter().enumerate() {
            if v.len() != k + 1 {
                return Err(ScenarioError::Validation(format!(
                    "slot {} reflection vector has length {}, expected {}",
                    i + 1,
                    v.len(),
                    k + 1
                )));
            }
            if v[k] != Complex64::new(1.0, 0.0) {
                return Err(ScenarioError::Validation(format!(
                    "slot {} last reflection entry must be exactly 1",
                    i + 1
                )));
            }
            for (j, c) in v.iter().enumerate() {
                if (c.norm() - 1.0).abs() > 1e-12 {
                    return Err(ScenarioError::Validation(format!(
                        "slot {} entry {} is not unit-modulus",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        Ok(())
    }
}

/// Loads and validates a scenario from a flat key/value config file.
///
/// Recognized keys (SI units; positions are comma-separated x,y,z triples
/// in meters): `q_start`, `q_end`, `q_g`, `q_m`, `q_r`, `kx`, `kz`,
/// `element_spacing`, `h0`, `n_slots`, `delta_t`, `v_max`, `p_avg`,
/// `p_peak`, `p_m`, `rho`, `sigma2`, `lambda`. Lines starting with `#`
/// and blank lines are ignored. `lambda` defaults to 0.125 m and
/// `element_spacing` to `lambda / 2`; everything else is required.
/// Setting `kx` or `kz` to 0 disables the IRS.
pub fn load_scenario(path: impl AsRef<Path>) -> Result<Scenario, ScenarioError> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|source| ScenarioError::Io {
        path: path.display().to_string(),
        source,
    })?;
    scenario_from_str(&text)
}

/// Same as [`load_scenario`] but from an in-memory string.
pub fn scenario_from_str(text: &str) -> Result<Scenario, ScenarioError> {
    let kv = parse_kv(text, false)?;
    let pos = |key: &'static str| -> Result<Position3, ScenarioError> {
        let (line, raw) = lookup(&kv, key)?;
        parse_triple(raw).map(|[x, y, z]| Position3::new(x, y, z)).ok_or(
            ScenarioError::Parse {
                line,
                msg: format!("`{key}` must be a comma-separated x,y,z triple"),
            },
        )
    };
    let q_start = pos("q_start")?;
    let q_end = pos("q_end")?;
    let q_g = pos("q_g")?;
    let q_m = pos("q_m")?;
    let q_r = pos("q_r")?;

    let num = |key: &'static str| -> Result<f64, ScenarioError> {
        let (line, raw) = lookup(&kv, key)?;
        raw.parse::<f64>().map_err(|_| ScenarioError::Parse {
            line,
            msg: format!("`{key}` must be a number, got `{raw}`"),
        })
    };
    let int = |key: &'static str| -> Result<usize, ScenarioError> {
        let (line, raw) = lookup(&kv, key)?;
        raw.parse::<usize>().map_err(|_| ScenarioError::Parse {
            line,
            msg: format!("`{key}` must be a nonnegative integer, got `{raw}`"),
        })
    };

    let kx = int("kx")?;
    let kz = int("kz")?;
    let lambda = match kv.iter().find(|(k, ..)| k == "lambda") {
        Some(_) => num("lambda")?,
        None => 0.125,
    };
    let element_spacing = match kv.iter().find(|(k, ..)| k == "element_spacing") {
        Some(_) => num("element_spacing")?,
        None => lambda / 2.0,
    };
    let irs = if kx == 0 || kz == 0 {
        None
    } else {
        Some(IrsGrid { kx, kz, element_spacing, origin: q_r })
    };

    let s = Scenario {
        q_start,
        q_end,
        q_g,
        q_m,
        irs,
        h0: num("h0")?,
        n_slots: int("n_slots")?,
        delta_t: num("delta_t")?,
        v_max: num("v_max")?,
        p_avg: num("p_avg")?,
        p_peak: num("p_peak")?,
        p_m: num("p_m")?,
        rho: num("rho")?,
        sigma2: num("sigma2")?,
        lambda,
    };
    s.validate()?;
    Ok(s)
}

const SCENARIO_KEYS: &[&str] = &[
    "q_start", "q_end", "q_g", "q_m", "q_r", "kx", "kz", "element_spacing", "h0",
    "n_slots", "delta_t", "v_max", "p_avg", "p_peak", "p_m", "rho", "sigma2", "lambda",
];

/// `key = value` lines into (key, value, line number). When
/// `allow_duplicates` is false a repeated key is a parse error.
pub(crate) fn parse_kv(
    text: &str,
    allow_duplicates: bool,
) -> Result<Vec<(String, String, usize)>, ScenarioError> {
    let mut out: Vec<(String, String, usize)> = Vec::new();
    for (i, raw_line) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw_line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (key, value) = line.split_once('=').ok_or(ScenarioError::Parse {
            line: line_no,
            msg: format!("expected `key = value`, got `{line}`"),
        })?;
        let key = key.trim().to_string();
        let value = value.trim().to_string();
        if !allow_duplicates && out.iter().any(|(k, ..)| *k == key) {
            return Err(ScenarioError::Parse {
                line: line_no,
                msg: format!("duplicate key `{key}`"),
            });
        }
        out.push((key, value, line_no));
    }
    if !allow_duplicates {
        for (k, _, line) in &out {
            if !SCENARIO_KEYS.contains(&k.as_str()) {
                return Err(ScenarioError::Parse {
                    line: *line,
                    msg: format!("unknown key `{k}`"),
                });
            }
        }
    }
    Ok(out)
}

fn lookup<'a>(
    kv: &'a [(String, String, usize)],
    key: &'static str,
) -> Result<(usize, &'a str), ScenarioError> {
    kv.iter()
        .find(|(k, ..)| k == key)
        .map(|(_, v, line)| (*line, v.as_str()))
        .ok_or(ScenarioError::MissingKey(key))
}

pub(crate) fn parse_triple(raw: &str) -> Option<[f64; 3]> {
    let parts: Vec<&str> = raw.split(',').map(str::trim).collect();
    if parts.len() != 3 {
        return None;
    }
    let x = parts[0].parse().ok()?;
    let y = parts[1].parse().ok()?;
    let z = parts[2].parse().ok()?;
    Some([x, y, z])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn paper_setup_a() -> String {
        "\
# IRS near the jammer
q_start = 0, 0, 100
q_end = 500, 0, 100
q_g = 100, -100, 0
q_m = 100, 50, 0
q_r = 110, 50, 5
kx = 10
kz = 5
h0 = 100
n_slots = 50
delta_t = 0.5
v_max = 60
p_avg = 0.2
p_peak = 0.5
p_m = 0.4
rho = 1e-3
sigma2 = 1e-17
lambda = 0.125
"
        .to_string()
    }

    #[test]
    fn loads_paper_setup_a() {
        let s = scenario_from_str(&paper_setup_a()).unwrap();
        assert_eq!(s.irs.unwrap().origin, Position3::new(110.0, 50.0, 5.0));
        assert_eq!(s.q_m, Position3::new(100.0, 50.0, 0.0));
        assert_eq!(s.q_g, Position3::new(100.0, -100.0, 0.0));
        assert_eq!(s.k_elements(), 50);
        assert_eq!(s.v_max, 60.0);
        assert_eq!(s.p_m, 0.4);
        assert_eq!(s.p_avg, 0.2);
        assert_eq!(s.p_peak, 0.5);
        assert_eq!(s.rho, 1e-3);
        // Default spacing is half a wavelength.
        assert_eq!(s.irs.unwrap().element_spacing, 0.125 / 2.0);
    }

    #[test]
    fn rejects_avg_above_peak() {
        let cfg = paper_setup_a()
            .replace("p_avg = 0.2", "p_avg = 0.2")
            .replace("p_peak = 0.5", "p_peak = 0.1");
        let err = scenario_from_str(&cfg).unwrap_err();
        assert!(err.to_string().contains("P_avg exceeds P_peak"), "{err}");
    }

    #[test]
    fn rejects_unreachable_endpoint() {
        let cfg = paper_setup_a().replace("n_slots = 50", "n_slots = 10");
        // 500 m > 10 * 0.5 * 60 = 300 m.
        let err = scenario_from_str(&cfg).unwrap_err();
        assert!(err.to_string().contains("unreachable"), "{err}");
    }

    #[test]
    fn rejects_unknown_and_duplicate_keys() {
        let cfg = format!("{}\nbogus = 1\n", paper_setup_a());
        assert!(matches!(
            scenario_from_str(&cfg),
            Err(ScenarioError::Parse { .. })
        ));
        let cfg = format!("{}\nv_max = 61\n", paper_setup_a());
        let err = scenario_from_str(&cfg).unwrap_err();
        assert!(err.to_string().contains("duplicate"), "{err}");
    }

    #[test]
    fn missing_key_is_reported() {
        let cfg = paper_setup_a().replace("rho = 1e-3\n", "");
        let err = scenario_from_str(&cfg).unwrap_err();
        assert!(matches!(err, ScenarioError::MissingKey("rho")));
    }

    #[test]
    fn kx_zero_means_no_irs() {
        let cfg = paper_setup_a().replace("kx = 10", "kx = 0");
        let s = scenario_from_str(&cfg).unwrap();
        assert!(s.irs.is_none());
        assert_eq!(s.k_elements(), 0);
    }

    #[test]
    fn line_trajectory_midpoint() {
        let s = scenario_from_str(&paper_setup_a()).unwrap();
        let t = line_trajectory(&s);
        assert_eq!(t.point(25), Position3::new(250.0, 0.0, 100.0));
        assert_eq!(t.point(0), s.q_start);
        assert_eq!(t.point(50), s.q_end);
    }

    #[test]
    fn line_trajectory_step_within_speed_limit() {
        let s = scenario_from_str(&paper_setup_a()).unwrap();
        let t = line_trajectory(&s);
        // 500 m over 50 slots: 10 m per slot, below the 30 m cap.
        let step = t.point(1).distance(&t.point(0));
        assert!((step - 10.0).abs() < 1e-12);
        assert!(step <= s.max_step());
        t.validate(&s).unwrap();
    }

    #[test]
    fn loaded_scenario_admits_feasible_blocks() {
        let s = scenario_from_str(&paper_setup_a()).unwrap();
        line_trajectory(&s).validate(&s).unwrap();
        PowerProfile::uniform(s.p_avg.min(s.p_peak), s.n_slots)
            .validate(&s)
            .unwrap();
        PhaseSchedule::zero_phase(s.k_elements(), s.n_slots)
            .validate(&s)
            .unwrap();
    }

    #[test]
    fn load_is_deterministic() {
        let a = scenario_from_str(&paper_setup_a()).unwrap();
        let b = scenario_from_str(&paper_setup_a()).unwrap();
        assert_eq!(format!("{a:?}"), format!("{b:?}"));
    }

    #[test]
    fn near_square_factorization() {
        assert_eq!(near_square_factors(4), (2, 2));
        assert_eq!(near_square_factors(8), (2, 4));
        assert_eq!(near_square_factors(16), (4, 4));
        assert_eq!(near_square_factors(50), (5, 10));
        assert_eq!(near_square_factors(7), (1, 7));
    }
}
