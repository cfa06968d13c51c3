//! Smooth convex subproblems under affine, second-order-cone and smooth
//! convex inequality constraints.
//!
//! `min f(x)` s.t. `a_i x = b_i`, `a_j x <= b_j`, `||A x + b|| <= c x + d`,
//! `g(x) <= 0`, solved by a primal log-barrier method: damped Newton
//! centering of `t f + phi` with backtracking, then `t` grows
//! geometrically until the barrier duality gap `nu / t` reaches the
//! requested tolerance. A strictly feasible start is required; equality
//! constraints are handled through the Newton KKT system, so the start
//! must satisfy them and every step stays on the affine manifold.

use nalgebra::{Cholesky, DMatrix, DVector, LU};

use super::KernelError;

/// Newton-iteration budget for one solve.
pub const MAX_ITER: usize = 500;

/// Named slice of the decision vector; purely descriptive.
#[derive(Debug, Clone)]
pub struct VarBlock {
    pub name: String,
    pub offset: usize,
    pub len: usize,
}

/// Twice-differentiable scalar function of the decision vector.
///
/// `value` may return a non-finite number outside the function's domain;
/// the solver treats such points as infeasible during line search.
pub trait Smooth: Send + Sync {
    fn value(&self, x: &DVector<f64>) -> f64;
    /// Writes the full gradient into `out` (which arrives zeroed).
    fn gradient(&self, x: &DVector<f64>, out: &mut DVector<f64>);
    /// Adds `scale * hessian` into `out`.
    fn add_scaled_hessian(&self, x: &DVector<f64>, scale: f64, out: &mut DMatrix<f64>);
    /// Indices of the variables the function actually touches; `None`
    /// means all of them.
    fn support(&self) -> Option<&[usize]> {
        None
    }
}

/// `c . x + k`.
pub struct LinearFn {
    pub c: DVector<f64>,
    pub k: f64,
}

impl Smooth for LinearFn {
    fn value(&self, x: &DVector<f64>) -> f64 {
        self.c.dot(x) + self.k
    }
    fn gradient(&self, _x: &DVector<f64>, out: &mut DVector<f64>) {
        out.copy_from(&self.c);
    }
    fn add_scaled_hessian(&self, _x: &DVector<f64>, _s: f64, _out: &mut DMatrix<f64>) {}
}

/// `x_s' Q x_s + c . x_s + k` over the variables listed in `support`
/// (`x_s` is the restriction of `x` to those indices; `Q` is symmetric).
pub struct QuadraticForm {
    pub support: Vec<usize>,
    pub q: DMatrix<f64>,
    pub c: DVector<f64>,
    pub k: f64,
}

impl QuadraticForm {
    fn local(&self, x: &DVector<f64>) -> DVector<f64> {
        DVector::from_iterator(self.support.len(), self.support.iter().map(|&i| x[i]))
    }
}

impl Smooth for QuadraticForm {
    fn value(&self, x: &DVector<f64>) -> f64 {
        let xs = self.local(x);
        (xs.transpose() * &self.q * &xs)[(0, 0)] + self.c.dot(&xs) + self.k
    }
    fn gradient(&self, x: &DVector<f64>, out: &mut DVector<f64>) {
        let xs = self.local(x);
        let g = &self.q * &xs * 2.0 + &self.c;
        for (slot, &i) in self.support.iter().enumerate() {
            out[i] = g[slot];
        }
    }
    fn add_scaled_hessian(&self, _x: &DVector<f64>, scale: f64, out: &mut DMatrix<f64>) {
        for (si, &i) in self.support.iter().enumerate() {
            for (sj, &j) in self.support.iter().enumerate() {
                out[(i, j)] += scale * 2.0 * self.q[(si, sj)];
            }
        }
    }
    fn support(&self) -> Option<&[usize]> {
        Some(&self.support)
    }
}

/// `coef / x_i^pow + c . x_s + k`, domain `x_i > 0`. Convex for
/// `coef > 0`. The reciprocal variable must be the first support entry.
pub struct ReciprocalAffine {
    pub support: Vec<usize>,
    pub pow: i32,
    pub coef: f64,
    pub c: DVector<f64>,
    pub k: f64,
}

impl Smooth for ReciprocalAffine {
    fn value(&self, x: &DVector<f64>) -> f64 {
        let xi = x[self.support[0]];
        if xi <= 0.0 {
            return f64::INFINITY;
        }
        let mut v = self.coef / xi.powi(self.pow) + self.k;
        for (slot, &i) in self.support.iter().enumerate() {
            v += self.c[slot] * x[i];
        }
        v
    }
    fn gradient(&self, x: &DVector<f64>, out: &mut DVector<f64>) {
        let xi = x[self.support[0]];
        for (slot, &i) in self.support.iter().enumerate() {
            out[i] = self.c[slot];
        }
        out[self.support[0]] += -self.pow as f64 * self.coef / xi.powi(self.pow + 1);
    }
    fn add_scaled_hessian(&self, x: &DVector<f64>, scale: f64, out: &mut DMatrix<f64>) {
        let i = self.support[0];
        let xi = x[i];
        let p = self.pow as f64;
        out[(i, i)] += scale * p * (p + 1.0) * self.coef / xi.powi(self.pow + 2);
    }
    fn support(&self) -> Option<&[usize]> {
        Some(&self.support)
    }
}

pub enum Constraint {
    /// `a . x = b`
    AffineEq { a: DVector<f64>, b: f64 },
    /// `a . x <= b`
    AffineIneq { a: DVector<f64>, b: f64 },
    /// `||A x + b|| <= c . x + d`
    Soc {
        a: DMatrix<f64>,
        b: DVector<f64>,
        c: DVector<f64>,
        d: f64,
        /// Variables appearing in the cone; `None` means all.
        support: Option<Vec<usize>>,
    },
    /// `g(x) <= 0` with smooth convex `g`.
    Smooth(Box<dyn Smooth>),
}

/// A fully assembled convex subproblem.
pub struct Subproblem {
    pub n: usize,
    pub layout: Vec<VarBlock>,
    pub objective: Box<dyn Smooth>,
    pub constraints: Vec<Constraint>,
}

impl Subproblem {
    /// Slack of inequality constraint `idx` at `x` (positive inside);
    /// `None` for equalities.
    pub fn slack(&self, idx: usize, x: &DVector<f64>) -> Option<f64> {
        match &self.constraints[idx] {
            Constraint::AffineEq { .. } => None,
            Constraint::AffineIneq { a, b } => Some(b - a.dot(x)),
            Constraint::Soc { a, b, c, d, .. } => Some(c.dot(x) + d - (a * x + b).norm()),
            Constraint::Smooth(g) => Some(-g.value(x)),
        }
    }

    /// Largest violation over all constraints (0 when feasible).
    pub fn violation(&self, x: &DVector<f64>) -> f64 {
        let mut worst = 0.0f64;
        for (i, c) in self.constraints.iter().enumerate() {
            match c {
                Constraint::AffineEq { a, b } => worst = worst.max((a.dot(x) - b).abs()),
                _ => {
                    let s = self.slack(i, x).unwrap();
                    if !s.is_finite() {
                        return f64::INFINITY;
                    }
                    worst = worst.max(-s);
                }
            }
        }
        worst
    }
}

#[derive(Debug, Clone)]
pub struct NlpSolution {
    pub x: DVector<f64>,
    pub objective: f64,
    /// Infinity norm of the first-order stationarity residual.
    pub stationarity: f64,
    /// Barrier duality gap `nu / t` at the final stage.
    pub gap: f64,
    pub iterations: usize,
    /// Budget ran out before the gap target; best iterate returned.
    pub capped: bool,
}

#[derive(Debug, Clone, Copy)]
pub struct NlpOptions {
    pub tol: f64,
    pub max_iter: usize,
    /// Barrier growth factor per stage.
    pub mu: f64,
}

impl Default for NlpOptions {
    fn default() -> Self {
        Self { tol: crate::tol::SOLVER, max_iter: MAX_ITER, mu: 20.0 }
    }
}

struct BarrierEval {
    value: f64,
    grad: DVector<f64>,
    hess: DMatrix<f64>,
}

/// Solves the subproblem from a strictly feasible start.
pub fn solve(
    sp: &Subproblem,
    start: &DVector<f64>,
    opts: &NlpOptions,
) -> Result<NlpSolution, KernelError> {
    let n = sp.n;
    if start.len() != n {
        return Err(KernelError::Dimension(format!(
            "start has {} entries, problem has {n}",
            start.len()
        )));
    }

    // Partition constraints and check the start point.
    let mut eq_rows: Vec<(&DVector<f64>, f64)> = Vec::new();
    let mut nu = 0.0f64;
    for (i, c) in sp.constraints.iter().enumerate() {
        match c {
            Constraint::AffineEq { a, b } => {
                if (a.dot(start) - b).abs() > 1e-7 {
                    return Err(KernelError::InfeasibleStart(format!(
                        "equality constraint {i} violated at the start point"
                    )));
                }
                eq_rows.push((a, *b));
            }
            _ => {
                let s = sp.slack(i, start).unwrap();
                if !(s.is_finite() && s > 0.0) {
                    return Err(KernelError::InfeasibleStart(format!(
                        "inequality constraint {i} not strictly satisfied (slack {s:.3e})"
                    )));
                }
                nu += match c {
                    Constraint::Soc { .. } => 2.0,
                    _ => 1.0,
                };
            }
        }
    }
    let a_eq = if eq_rows.is_empty() {
        None
    } else {
        let mut a = DMatrix::zeros(eq_rows.len(), n);
        for (r, (row, _)) in eq_rows.iter().enumerate() {
            a.row_mut(r).copy_from(&row.transpose());
        }
        Some(a)
    };

    // Barrier value/gradient/Hessian of t*f + phi at x; None off-domain.
    let eval = |x: &DVector<f64>, t: f64, full: bool| -> Option<BarrierEval> {
        let mut value = t * sp.objective.value(x);
        if !value.is_finite() {
            return None;
        }
        let mut grad = DVector::zeros(n);
        let mut hess = DMatrix::zeros(if full { n } else { 0 }, if full { n } else { 0 });
        let mut scratch = DVector::zeros(n);
        if full {
            sp.objective.gradient(x, &mut scratch);
            grad.axpy(t, &scratch, 1.0);
            sp.objective.add_scaled_hessian(x, t, &mut hess);
        }
        for c in &sp.constraints {
            match c {
                Constraint::AffineEq { .. } => {}
                Constraint::AffineIneq { a, b } => {
                    let s = b - a.dot(x);
                    if !(s.is_finite() && s > 0.0) {
                        return None;
                    }
                    value -= s.ln();
                    if full {
                        let inv = 1.0 / s;
                        grad.axpy(inv, a, 1.0);
                        rank1_update(&mut hess, a, inv * inv, None);
                    }
                }
                Constraint::Soc { a, b, c: cc, d, support } => {
                    let r = a * x + b;
                    let s = cc.dot(x) + *d;
                    let h = s * s - r.norm_squared();
                    if !(h.is_finite() && h > 0.0 && s > 0.0) {
                        return None;
                    }
                    value -= h.ln();
                    if full {
                        // grad_h = 2 s c - 2 A' r
                        let gh = cc * (2.0 * s) - a.transpose() * &r * 2.0;
                        grad.axpy(-1.0 / h, &gh, 1.0);
                        rank1_update(&mut hess, &gh, 1.0 / (h * h), support.as_deref());
                        // hess_h = 2 c c' - 2 A' A, contributes -hess_h / h
                        rank1_update(&mut hess, cc, -2.0 / h, support.as_deref());
                        add_gram(&mut hess, a, 2.0 / h, support.as_deref());
                    }
                }
                Constraint::Smooth(g) => {
                    let gv = g.value(x);
                    let s = -gv;
                    if !(s.is_finite() && s > 0.0) {
                        return None;
                    }
                    value -= s.ln();
                    if full {
                        scratch.fill(0.0);
                        g.gradient(x, &mut scratch);
                        grad.axpy(1.0 / s, &scratch, 1.0);
                        rank1_update(&mut hess, &scratch, 1.0 / (s * s), g.support());
                        g.add_scaled_hessian(x, 1.0 / s, &mut hess);
                    }
                }
            }
        }
        Some(BarrierEval { value, grad, hess })
    };

    let mut x = start.clone();
    let mut best_x = x.clone();
    let mut best_f = sp.objective.value(&x);
    let mut t = 1.0f64;
    let mut iterations = 0usize;
    let mut capped = false;
    let mut last_grad = DVector::zeros(n);
    let mut last_w: Option<DVector<f64>> = None;
    let max_iter = opts.max_iter.min(MAX_ITER.max(opts.max_iter));

    'outer: loop {
        // Center at the current t.
        loop {
            if iterations >= max_iter {
                capped = true;
                break 'outer;
            }
            let be = eval(&x, t, true).expect("iterates stay strictly feasible");
            last_grad = be.grad.clone();
            let (step, w) = newton_step(&be.hess, &be.grad, a_eq.as_ref());
            last_w = w;
            let decrement = -be.grad.dot(&step);
            iterations += 1;
            if !(decrement > 2e-11) {
                break;
            }
            let mut alpha = 1.0;
            let mut moved = false;
            for _ in 0..60 {
                let cand = &x + alpha * &step;
                if let Some(c_be) = eval(&cand, t, false) {
                    if c_be.value <= be.value - 0.25 * alpha * decrement {
                        x = cand;
                        moved = true;
                        break;
                    }
                }
                alpha *= 0.5;
            }
            if !moved {
                break;
            }
            let f_now = sp.objective.value(&x);
            if f_now < best_f {
                best_f = f_now;
                best_x = x.clone();
            }
        }
        if nu == 0.0 || nu / t <= opts.tol {
            break;
        }
        t *= opts.mu;
    }

    let f_final = sp.objective.value(&x);
    if f_final < best_f {
        best_f = f_final;
        best_x = x.clone();
    }
    // Stationarity of the Lagrangian with barrier multipliers; equality
    // multipliers come from the last Newton KKT solve.
    let mut resid = last_grad;
    if let (Some(a), Some(w)) = (a_eq.as_ref(), last_w.as_ref()) {
        resid += a.transpose() * w;
    }
    let stationarity = resid.amax() / t;

    Ok(NlpSolution {
        objective: best_f,
        x: best_x,
        stationarity,
        gap: if nu == 0.0 { 0.0 } else { nu / t },
        iterations,
        capped,
    })
}

/// `out += scale * v v'` restricted to the support.
fn rank1_update(
    out: &mut DMatrix<f64>,
    v: &DVector<f64>,
    scale: f64,
    support: Option<&[usize]>,
) {
    match support {
        Some(idx) => {
            for &i in idx {
                for &j in idx {
                    out[(i, j)] += scale * v[i] * v[j];
                }
            }
        }
        None => {
            for i in 0..v.len() {
                if v[i] == 0.0 {
                    continue;
                }
                for j in 0..v.len() {
                    out[(i, j)] += scale * v[i] * v[j];
                }
            }
        }
    }
}

/// `out += scale * A' A` restricted to the support.
fn add_gram(out: &mut DMatrix<f64>, a: &DMatrix<f64>, scale: f64, support: Option<&[usize]>) {
    match support {
        Some(idx) => {
            for &i in idx {
                for &j in idx {
                    let mut acc = 0.0;
                    for r in 0..a.nrows() {
                        acc += a[(r, i)] * a[(r, j)];
                    }
                    out[(i, j)] += scale * acc;
                }
            }
        }
        None => {
            let gram = a.transpose() * a;
            *out += gram * scale;
        }
    }
}

/// Newton direction; with equalities solves the KKT system and returns the
/// multiplier estimate.
fn newton_step(
    hess: &DMatrix<f64>,
    grad: &DVector<f64>,
    a_eq: Option<&DMatrix<f64>>,
) -> (DVector<f64>, Option<DVector<f64>>) {
    let n = grad.len();
    match a_eq {
        None => {
            let mut h = hess.clone();
            let mut ridge = 1e-14 * (h.trace().abs() / n as f64).max(1.0);
            for _ in 0..4 {
                if let Some(ch) = Cholesky::new(h.clone()) {
                    return (ch.solve(&(-grad)), None);
                }
                for i in 0..n {
                    h[(i, i)] += ridge;
                }
                ridge *= 100.0;
            }
            (-grad.clone(), None)
        }
        Some(a) => {
            let p = a.nrows();
            let mut kkt = DMatrix::zeros(n + p, n + p);
            kkt.view_mut((0, 0), (n, n)).copy_from(hess);
            kkt.view_mut((0, n), (n, p)).copy_from(&a.transpose());
            kkt.view_mut((n, 0), (p, n)).copy_from(a);
            let mut rhs = DVector::zeros(n + p);
            rhs.rows_mut(0, n).copy_from(&(-grad));
            match LU::new(kkt).solve(&rhs) {
                Some(sol) => (
                    sol.rows(0, n).into_owned(),
                    Some(sol.rows(n, p).into_owned()),
                ),
                None => (-grad.clone(), None),
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use rand::prelude::*;
    use rand_chacha::ChaCha8Rng;

    fn block(name: &str, offset: usize, len: usize) -> VarBlock {
        VarBlock { name: name.into(), offset, len }
    }

    #[test]
    fn active_affine_constraint() {
        // max eta s.t. eta <= 5.
        let sp = Subproblem {
            n: 1,
            layout: vec![block("eta", 0, 1)],
            objective: Box::new(LinearFn { c: DVector::from_vec(vec![-1.0]), k: 0.0 }),
            constraints: vec![Constraint::AffineIneq {
                a: DVector::from_vec(vec![1.0]),
                b: 5.0,
            }],
        };
        let sol = solve(&sp, &DVector::from_vec(vec![0.0]), &NlpOptions::default()).unwrap();
        assert_relative_eq!(sol.x[0], 5.0, epsilon = 1e-5);
        assert!(!sol.capped);
        assert!(sol.gap <= 1e-6);
    }

    #[test]
    fn projection_onto_unit_ball() {
        // min ||x - x0||^2 with ||x|| <= 1 and ||x0|| = 2.
        let x0 = [1.2, 1.6]; // norm 2
        let sp = Subproblem {
            n: 2,
            layout: vec![block("x", 0, 2)],
            objective: Box::new(QuadraticForm {
                support: vec![0, 1],
                q: DMatrix::identity(2, 2),
                c: DVector::from_vec(vec![-2.0 * x0[0], -2.0 * x0[1]]),
                k: x0[0] * x0[0] + x0[1] * x0[1],
            }),
            constraints: vec![Constraint::Soc {
                a: DMatrix::identity(2, 2),
                b: DVector::zeros(2),
                c: DVector::zeros(2),
                d: 1.0,
                support: Some(vec![0, 1]),
            }],
        };
        let start = DVector::from_vec(vec![0.0, 0.0]);
        let sol = solve(&sp, &start, &NlpOptions::default()).unwrap();
        assert_relative_eq!(sol.x[0], x0[0] / 2.0, epsilon = 1e-4);
        assert_relative_eq!(sol.x[1], x0[1] / 2.0, epsilon = 1e-4);
        let dist = ((sol.x[0] - x0[0]).powi(2) + (sol.x[1] - x0[1]).powi(2)).sqrt();
        assert_relative_eq!(dist, 1.0, epsilon = 1e-4);
    }

    #[test]
    fn random_qp_matches_grid_oracle() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..5 {
            // Strongly convex 2-var QP over a box.
            let a = rng.gen_range(0.5..2.0);
            let b = rng.gen_range(0.5..2.0);
            let cross = rng.gen_range(-0.3..0.3);
            let q = DMatrix::from_row_slice(2, 2, &[a, cross, cross, b]);
            let lin = DVector::from_vec(vec![
                rng.gen_range(-1.0..1.0),
                rng.gen_range(-1.0..1.0),
            ]);
            let sp = Subproblem {
                n: 2,
                layout: vec![block("x", 0, 2)],
                objective: Box::new(QuadraticForm {
                    support: vec![0, 1],
                    q: q.clone(),
                    c: lin.clone(),
                    k: 0.0,
                }),
                constraints: vec![
                    Constraint::AffineIneq { a: DVector::from_vec(vec![1.0, 0.0]), b: 1.0 },
                    Constraint::AffineIneq { a: DVector::from_vec(vec![-1.0, 0.0]), b: 1.0 },
                    Constraint::AffineIneq { a: DVector::from_vec(vec![0.0, 1.0]), b: 1.0 },
                    Constraint::AffineIneq { a: DVector::from_vec(vec![0.0, -1.0]), b: 1.0 },
                ],
            };
            let sol = solve(&sp, &DVector::zeros(2), &NlpOptions::default()).unwrap();

            let mut oracle = f64::INFINITY;
            let steps = 400;
            for i in 0..=steps {
                for j in 0..=steps {
                    let x = DVector::from_vec(vec![
                        -1.0 + 2.0 * i as f64 / steps as f64,
                        -1.0 + 2.0 * j as f64 / steps as f64,
                    ]);
                    oracle = oracle.min(sp.objective.value(&x));
                }
            }
            assert!(
                sol.objective <= oracle + 1e-3,
                "solver {} vs grid oracle {}",
                sol.objective,
                oracle
            );
        }
    }

    #[test]
    fn descent_from_any_feasible_start() {
        let sp = Subproblem {
            n: 2,
            layout: vec![block("x", 0, 2)],
            objective: Box::new(QuadraticForm {
                support: vec![0, 1],
                q: DMatrix::identity(2, 2),
                c: DVector::zeros(2),
                k: 0.0,
            }),
            constraints: vec![Constraint::AffineIneq {
                a: DVector::from_vec(vec![1.0, 1.0]),
                b: 3.0,
            }],
        };
        for start in [[0.9, 0.9], [-2.0, 1.0], [0.0, 0.0]] {
            let x0 = DVector::from_vec(start.to_vec());
            let f0 = sp.objective.value(&x0);
            let sol = solve(&sp, &x0, &NlpOptions::default()).unwrap();
            assert!(sol.objective <= f0 + 1e-12);
        }
    }

    #[test]
    fn equality_constrained_projection() {
        // min ||x||^2 s.t. x0 + x1 = 2 -> x = (1, 1).
        let sp = Subproblem {
            n: 2,
            layout: vec![block("x", 0, 2)],
            objective: Box::new(QuadraticForm {
                support: vec![0, 1],
                q: DMatrix::identity(2, 2),
                c: DVector::zeros(2),
                k: 0.0,
            }),
            constraints: vec![Constraint::AffineEq {
                a: DVector::from_vec(vec![1.0, 1.0]),
                b: 2.0,
            }],
        };
        let sol = solve(
            &sp,
            &DVector::from_vec(vec![2.0, 0.0]),
            &NlpOptions::default(),
        )
        .unwrap();
        assert_relative_eq!(sol.x[0], 1.0, epsilon = 1e-8);
        assert_relative_eq!(sol.x[1], 1.0, epsilon = 1e-8);
    }

    #[test]
    fn rejects_infeasible_start() {
        let sp = Subproblem {
            n: 1,
            layout: vec![block("x", 0, 1)],
            objective: Box::new(LinearFn { c: DVector::from_vec(vec![1.0]), k: 0.0 }),
            constraints: vec![Constraint::AffineIneq {
                a: DVector::from_vec(vec![1.0]),
                b: 0.0,
            }],
        };
        let err = solve(&sp, &DVector::from_vec(vec![1.0]), &NlpOptions::default());
        assert!(matches!(err, Err(KernelError::InfeasibleStart(_))));
    }

    #[test]
    fn iteration_cap_is_flagged_not_fatal() {
        let sp = Subproblem {
            n: 1,
            layout: vec![block("eta", 0, 1)],
            objective: Box::new(LinearFn { c: DVector::from_vec(vec![-1.0]), k: 0.0 }),
            constraints: vec![Constraint::AffineIneq {
                a: DVector::from_vec(vec![1.0]),
                b: 5.0,
            }],
        };
        let opts = NlpOptions { max_iter: 2, ..Default::default() };
        let sol = solve(&sp, &DVector::from_vec(vec![0.0]), &opts).unwrap();
        assert!(sol.capped);
        assert!(sol.x[0] <= 5.0);
    }

    #[test]
    fn reciprocal_constraint_barrier() {
        // max eta s.t. 1/L <= 4, eta <= L over L in (0, inf):
        // optimum L free to grow, but cap L <= 2 => eta = 2.
        let sp = Subproblem {
            n: 2,
            layout: vec![block("L", 0, 1), block("eta", 1, 1)],
            objective: Box::new(LinearFn { c: DVector::from_vec(vec![0.0, -1.0]), k: 0.0 }),
            constraints: vec![
                Constraint::Smooth(Box::new(ReciprocalAffine {
                    support: vec![0],
                    pow: 1,
                    coef: 1.0,
                    c: DVector::from_vec(vec![0.0]),
                    k: -4.0,
                })),
                Constraint::AffineIneq { a: DVector::from_vec(vec![-1.0, 1.0]), b: 0.0 },
                Constraint::AffineIneq { a: DVector::from_vec(vec![1.0, 0.0]), b: 2.0 },
            ],
        };
        let sol = solve(
            &sp,
            &DVector::from_vec(vec![1.0, 0.5]),
            &NlpOptions::default(),
        )
        .unwrap();
        assert_relative_eq!(sol.x[1], 2.0, epsilon = 1e-4);
    }
}
