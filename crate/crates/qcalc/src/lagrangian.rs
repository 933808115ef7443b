//! The integrating-factor method for indefinite Jackson q-integrals, as
//! executable machinery.
//!
//! A second-order q-difference equation
//!
//! `(1/q) D_{1/q} D_q y + p(x) D y + r(x) y = g(x)`
//!
//! (with `D` either `D_{1/q}` or `D_q`, selected by [`DiffForm`]) admits an
//! integrating factor `f` solving a first-order recursion. For any test
//! function `h`, the weighted integrand `f (L h) y` then has the closed-form
//! q-antiderivative
//!
//! - inverse form:  `f(x/q) ( y(x/q) D_{1/q}h(x) - h(x/q) D_{1/q}y(x) )`,
//! - forward form:  `f(x)   ( y(x)   D_{1/q}h(x) - h(x)   D_{1/q}y(x) )`,
//!
//! plus the accumulated term `int f h g d_q x` when `g` is present. The
//! checkers in this module verify such identities through two independent
//! routes: pointwise q-differentiation of the antiderivative, and exact
//! telescoping of the Jackson sum between two grid points.

use std::sync::Arc;

use crate::qcore::{C, QContext, QError, QResult};
use crate::qgrid::{
    d_q, d_q_at_zero, d_q_inverse, improper_riemann, jackson_telescoped, limit_at_zero, GridFn,
    QuadPolicy,
};

/// Shareable, cloneable evaluator of a scalar function on the grid.
#[derive(Clone)]
pub struct Evaluator(Arc<dyn Fn(f64) -> QResult<C> + Send + Sync>);

impl Evaluator {
    pub fn new<F>(f: F) -> Self
    where
        F: Fn(f64) -> QResult<C> + Send + Sync + 'static,
    {
        Evaluator(Arc::new(f))
    }

    /// Infallible real-valued evaluator.
    pub fn from_real<F>(f: F) -> Self
    where
        F: Fn(f64) -> f64 + Send + Sync + 'static,
    {
        Evaluator(Arc::new(move |x| Ok(C::new(f(x), 0.0))))
    }

    pub fn constant(v: C) -> Self {
        Evaluator(Arc::new(move |_| Ok(v)))
    }

    pub fn eval(&self, x: f64) -> QResult<C> {
        (self.0)(x)
    }
}

impl std::fmt::Debug for Evaluator {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str("Evaluator")
    }
}

/// Which first-order derivative multiplies `p` in the equation, and hence
/// which integrating-factor recursion and antiderivative shape apply.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DiffForm {
    /// `p(x) D_{1/q} y`; factor solves `(1/q) D_{1/q} f = p f`.
    Inverse,
    /// `p(x) D_q y`; factor solves `D_q f = p f`.
    Forward,
}

/// Coefficient functions of the second-order equation. `g = None` means the
/// homogeneous case.
#[derive(Clone, Debug)]
pub struct CoeffFns {
    pub p: Evaluator,
    pub r: Evaluator,
    pub g: Option<Evaluator>,
    pub form: DiffForm,
}

impl CoeffFns {
    pub fn homogeneous(p: Evaluator, r: Evaluator, form: DiffForm) -> Self {
        CoeffFns { p, r, g: None, form }
    }
}

/// Apply the homogeneous operator
/// `L h = (1/q) D_{1/q} D_q h + p D h + r h` at `x != 0` through the exact
/// three-point stencil `[q h(x/q) - (1+q) h(x) + h(qx)] / ((1-q)^2 x^2)`.
pub fn apply_l<F>(coeffs: &CoeffFns, h: &F, x: f64, ctx: &QContext) -> QResult<C>
where
    F: Fn(f64) -> QResult<C> + ?Sized,
{
    if x == 0.0 {
        return Err(QError::Domain("apply_l needs x != 0".into()));
    }
    let q = ctx.q;
    let stencil = (q * h(x / q)? - (1.0 + q) * h(x)? + h(q * x)?) / ((1.0 - q) * (1.0 - q) * x * x);
    let dh = match coeffs.form {
        DiffForm::Inverse => d_q_inverse(h, x, ctx)?,
        DiffForm::Forward => d_q(h, x, ctx)?,
    };
    Ok(stencil + coeffs.p.eval(x)? * dh + coeffs.r.eval(x)? * h(x)?)
}

/// March the integrating factor along the grid `x0 q^k`, `k = 0..=depth`.
///
/// Inverse form: `f(x/q) = f(x) (1 + (1-q) x p(x))`, seeded by
/// `f(x0 q^depth) = 1` and marched upward. Forward form:
/// `f(qx) = f(x) (1 - (1-q) x p(x))`, seeded by `f(x0) = 1` and marched
/// downward. Solutions form a ray; the seed fixes the scale. A vanishing
/// recursion factor is a hard degeneracy error.
pub fn solve_f(coeffs: &CoeffFns, x0: f64, depth: usize, ctx: &QContext) -> QResult<GridFn> {
    if x0 <= 0.0 {
        return Err(QError::Domain("solve_f needs x0 > 0".into()));
    }
    let q = ctx.q;
    let mut values = vec![C::new(0.0, 0.0); depth + 1];
    match coeffs.form {
        DiffForm::Inverse => {
            values[depth] = C::new(1.0, 0.0);
            for k in (1..=depth).rev() {
                let x = x0 * q.powi(k as i32);
                let factor = C::new(1.0, 0.0) + coeffs.p.eval(x)? * ((1.0 - q) * x);
                if factor.norm() < 1e-14 {
                    return Err(QError::Degenerate { what: "integrating factor (inverse form)", index: k });
                }
                values[k - 1] = values[k] * factor;
            }
        }
        DiffForm::Forward => {
            values[0] = C::new(1.0, 0.0);
            for k in 0..depth {
                let x = x0 * q.powi(k as i32);
                let factor = C::new(1.0, 0.0) - coeffs.p.eval(x)? * ((1.0 - q) * x);
                if factor.norm() < 1e-14 {
                    return Err(QError::Degenerate { what: "integrating factor (forward form)", index: k });
                }
                values[k + 1] = values[k] * factor;
            }
        }
    }
    GridFn::new(x0, q, values)
}

/// March a solution of the second-order equation down the grid from seeds
/// `(y(x0), y(x0/q))`; returns `y` on `x0 q^k`, `k = 0..=depth`.
pub fn solve_y(
    coeffs: &CoeffFns,
    seeds: (C, C),
    x0: f64,
    depth: usize,
    ctx: &QContext,
) -> QResult<GridFn> {
    if x0 <= 0.0 {
        return Err(QError::Domain("solve_y needs x0 > 0".into()));
    }
    let q = ctx.q;
    let mut values = vec![C::new(0.0, 0.0); depth + 1];
    values[0] = seeds.0;
    let mut y_up = seeds.1; // y(x/q) for the current x
    for k in 0..depth {
        let x = x0 * q.powi(k as i32);
        let y_here = values[k];
        let gx = match &coeffs.g {
            Some(g) => g.eval(x)?,
            None => C::new(0.0, 0.0),
        };
        let sq = (1.0 - q) * (1.0 - q) * x * x;
        let y_next = match coeffs.form {
            DiffForm::Inverse => {
                let dinv = q * (y_up - y_here) / ((1.0 - q) * x);
                sq * (gx - coeffs.p.eval(x)? * dinv - coeffs.r.eval(x)? * y_here)
                    - q * y_up
                    + (1.0 + q) * y_here
            }
            DiffForm::Forward => {
                let px = coeffs.p.eval(x)?;
                let denom = C::new(1.0, 0.0) - px * ((1.0 - q) * x);
                if denom.norm() < 1e-14 {
                    return Err(QError::Degenerate { what: "solve_y forward recursion", index: k });
                }
                (sq * (gx - coeffs.r.eval(x)? * y_here) - q * y_up + (1.0 + q) * y_here
                    - px * ((1.0 - q) * x) * y_here)
                    / denom
            }
        };
        if !y_next.re.is_finite() || !y_next.im.is_finite() {
            return Err(QError::NonFinite { what: "solve_y value", x: x * q });
        }
        values[k + 1] = y_next;
        y_up = y_here;
    }
    GridFn::new(x0, q, values)
}

/// q-Wronskian `W(y, h)(x) = y(x) D h(x) - h(x) D y(x)` with the selected
/// derivative direction.
pub fn wronskian_q<F, G>(y: &F, h: &G, x: f64, form: DiffForm, ctx: &QContext) -> QResult<C>
where
    F: Fn(f64) -> QResult<C> + ?Sized,
    G: Fn(f64) -> QResult<C> + ?Sized,
{
    let (dy, dh) = match form {
        DiffForm::Forward => (d_q(y, x, ctx)?, d_q(h, x, ctx)?),
        DiffForm::Inverse => (d_q_inverse(y, x, ctx)?, d_q_inverse(h, x, ctx)?),
    };
    Ok(y(x)? * dh - h(x)? * dy)
}

/// Closed-form antiderivative for the inverse form:
/// `f(x/q) ( y(x/q) D_{1/q} h(x) - h(x/q) D_{1/q} y(x) )`.
pub fn boundary_term_inverse<Ff, Fy, Fh>(
    f: &Ff,
    y: &Fy,
    h: &Fh,
    x: f64,
    ctx: &QContext,
) -> QResult<C>
where
    Ff: Fn(f64) -> QResult<C> + ?Sized,
    Fy: Fn(f64) -> QResult<C> + ?Sized,
    Fh: Fn(f64) -> QResult<C> + ?Sized,
{
    if x == 0.0 {
        return Err(QError::Domain("boundary term needs x != 0".into()));
    }
    let q = ctx.q;
    Ok(f(x / q)? * (y(x / q)? * d_q_inverse(h, x, ctx)? - h(x / q)? * d_q_inverse(y, x, ctx)?))
}

/// Closed-form antiderivative for the forward form:
/// `f(x) ( y(x) D_{1/q} h(x) - h(x) D_{1/q} y(x) )`.
pub fn boundary_term_forward<Ff, Fy, Fh>(
    f: &Ff,
    y: &Fy,
    h: &Fh,
    x: f64,
    ctx: &QContext,
) -> QResult<C>
where
    Ff: Fn(f64) -> QResult<C> + ?Sized,
    Fy: Fn(f64) -> QResult<C> + ?Sized,
    Fh: Fn(f64) -> QResult<C> + ?Sized,
{
    if x == 0.0 {
        return Err(QError::Domain("boundary term needs x != 0".into()));
    }
    Ok(f(x)? * (y(x)? * d_q_inverse(h, x, ctx)? - h(x)? * d_q_inverse(y, x, ctx)?))
}

/// One fully wired q-integral identity: the integrand, its closed-form
/// antiderivative, and (for nonhomogeneous equations whose extra term is not
/// folded into `rhs` in closed form) the integrand `f h g` of the
/// accumulated term.
#[derive(Clone, Debug)]
pub struct IdentityInstance {
    pub lhs_integrand: Evaluator,
    pub rhs: Evaluator,
    pub nh_integrand: Option<Evaluator>,
}

impl IdentityInstance {
    /// Mechanical composition from the equation pieces: the integrand is
    /// `f (L h) y` evaluated through the stencil, the antiderivative is the
    /// form-matched boundary term, and `f h g` becomes the accumulated term.
    pub fn from_parts(
        coeffs: &CoeffFns,
        f: &Evaluator,
        h: &Evaluator,
        y: &Evaluator,
        ctx: &QContext,
    ) -> Self {
        let ctx = *ctx;
        let lhs = {
            let (coeffs, f, h, y) = (coeffs.clone(), f.clone(), h.clone(), y.clone());
            Evaluator::new(move |x| {
                let lh = apply_l(&coeffs, &|t| h.eval(t), x, &ctx)?;
                Ok(f.eval(x)? * lh * y.eval(x)?)
            })
        };
        let rhs = {
            let (form, f, h, y) = (coeffs.form, f.clone(), h.clone(), y.clone());
            Evaluator::new(move |x| match form {
                DiffForm::Inverse => boundary_term_inverse(
                    &|t| f.eval(t),
                    &|t| y.eval(t),
                    &|t| h.eval(t),
                    x,
                    &ctx,
                ),
                DiffForm::Forward => boundary_term_forward(
                    &|t| f.eval(t),
                    &|t| y.eval(t),
                    &|t| h.eval(t),
                    x,
                    &ctx,
                ),
            })
        };
        let nh = coeffs.g.as_ref().map(|g| {
            let (f, h, g) = (f.clone(), h.clone(), g.clone());
            Evaluator::new(move |x| Ok(f.eval(x)? * h.eval(x)? * g.eval(x)?))
        });
        IdentityInstance { lhs_integrand: lhs, rhs, nh_integrand: nh }
    }
}

/// Residuals of the two independent verification routes.
#[derive(Debug, Clone, Copy)]
pub struct CheckResult {
    /// `| D_q rhs(x) + (f h g)(x) - lhs(x) |` relative to the local scale.
    pub residual_dq: f64,
    /// Telescoped-sum route over `[x q^depth, x]`, same normalization.
    pub residual_sum: f64,
}

impl CheckResult {
    pub fn worst(&self) -> f64 {
        self.residual_dq.max(self.residual_sum)
    }
}

/// Telescoping depth that keeps the deepest grid point above about `1e-6`,
/// where the three-point stencil still has headroom against roundoff
/// amplification (its divisor is `(1-q)^2 x^2 q^{2k}`).
pub fn default_depth(x: f64, ctx: &QContext) -> usize {
    let n = ((1e-6 / x.abs().max(1e-30)).ln() / ctx.q.ln()).floor();
    (n.max(5.0) as usize).min(60)
}

/// Verify an indefinite identity at anchor `x` with telescoping depth
/// `depth`.
///
/// Residuals are relative to the largest magnitude among the participating
/// terms, floored at 1; identities here routinely mix scales across many
/// orders of magnitude.
pub fn check_indefinite(
    inst: &IdentityInstance,
    x: f64,
    depth: usize,
    ctx: &QContext,
) -> QResult<CheckResult> {
    let q = ctx.q;
    // route 1: pointwise q-derivative of the antiderivative
    let drhs = (inst.rhs.eval(x)? - inst.rhs.eval(q * x)?) / ((1.0 - q) * x);
    let nh_here = match &inst.nh_integrand {
        Some(g) => g.eval(x)?,
        None => C::new(0.0, 0.0),
    };
    let lhs = inst.lhs_integrand.eval(x)?;
    let scale1 = lhs.norm().max(drhs.norm()).max(nh_here.norm()).max(1.0);
    let residual_dq = (drhs + nh_here - lhs).norm() / scale1;

    // route 2: exact telescoping between x q^depth and x
    let sum = jackson_telescoped(&|t| inst.lhs_integrand.eval(t), x, depth, ctx)?;
    let diff = inst.rhs.eval(x)? - inst.rhs.eval(x * q.powi(depth as i32))?;
    let nh_sum = match &inst.nh_integrand {
        Some(g) => jackson_telescoped(&|t| g.eval(t), x, depth, ctx)?,
        None => C::new(0.0, 0.0),
    };
    let scale2 = sum.norm().max(diff.norm()).max(nh_sum.norm()).max(1.0);
    let residual_sum = (sum - diff - nh_sum).norm() / scale2;

    Ok(CheckResult { residual_dq, residual_sum })
}

/// Residual of the definite identity on `[0, inf)`:
///
/// `int_0^inf f (L h) y dx  =  f(0) ln(q)/(1-q) (D_q h(0) y(0) - h(0) D_q y(0))`.
///
/// The left side is an improper Riemann integral (not a Jackson sum); the
/// boundary data at 0 are grid limits.
pub fn check_definite_infinity(
    coeffs: &CoeffFns,
    f: &Evaluator,
    h: &Evaluator,
    y: &Evaluator,
    ctx: &QContext,
    policy: &QuadPolicy,
) -> QResult<f64> {
    let integrand = |x: f64| -> QResult<f64> {
        let lh = apply_l(coeffs, &|t| h.eval(t), x, ctx)?;
        Ok((f.eval(x)? * lh * y.eval(x)?).re)
    };
    let integral = improper_riemann(&integrand, policy)?;
    let f0 = limit_at_zero(&|t| f.eval(t), ctx)?;
    let y0 = limit_at_zero(&|t| y.eval(t), ctx)?;
    let h0 = limit_at_zero(&|t| h.eval(t), ctx)?;
    let dh0 = d_q_at_zero(&|t| h.eval(t), ctx)?;
    let dy0 = d_q_at_zero(&|t| y.eval(t), ctx)?;
    let boundary = f0 * ctx.q.ln() / (1.0 - ctx.q) * (dh0 * y0 - h0 * dy0);
    Ok((C::new(integral, 0.0) - boundary).norm())
}

/// Closed-form value of `int y d_q x` obtained from a particular solution
/// `h` of `L h = 1/f`. The guard verifies that `h` really solves that
/// equation at a few grid points before trusting the closed form.
pub fn integral_of_y(
    coeffs: &CoeffFns,
    f: &Evaluator,
    h_particular: &Evaluator,
    y: &Evaluator,
    x: f64,
    ctx: &QContext,
) -> QResult<C> {
    for k in 0..3 {
        let t = x * ctx.q.powi(k);
        let lh = apply_l(coeffs, &|u| h_particular.eval(u), t, ctx)?;
        let target = C::new(1.0, 0.0) / f.eval(t)?;
        let scale = lh.norm().max(target.norm()).max(1.0);
        if (lh - target).norm() > 1e-6 * scale {
            return Err(QError::Domain(format!(
                "h does not solve L h = 1/f at x = {t} (residual {:e})",
                (lh - target).norm() / scale
            )));
        }
    }
    match coeffs.form {
        DiffForm::Inverse => boundary_term_inverse(
            &|t| f.eval(t),
            &|t| y.eval(t),
            &|t| h_particular.eval(t),
            x,
            ctx,
        ),
        DiffForm::Forward => boundary_term_forward(
            &|t| f.eval(t),
            &|t| y.eval(t),
            &|t| h_particular.eval(t),
            x,
            ctx,
        ),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qcore::{PochOrder, q_pochhammer};
    use crate::qspecial::{airy_pair, AiryBranch};

    fn ctx(q: f64) -> QContext {
        QContext::new(q).unwrap()
    }

    fn zero() -> Evaluator {
        Evaluator::constant(C::new(0.0, 0.0))
    }

    #[test]
    fn solve_f_constant_when_p_zero() {
        let cx = ctx(0.5);
        let coeffs = CoeffFns::homogeneous(zero(), zero(), DiffForm::Inverse);
        let f = solve_f(&coeffs, 1.0, 20, &cx).unwrap();
        for k in 0..=20 {
            assert!((f.value(k) - C::new(1.0, 0.0)).norm() < 1e-14);
        }
    }

    #[test]
    fn solve_f_linear_for_inverse_one_over_qx() {
        // p(x) = 1/(qx) makes f proportional to x
        let cx = ctx(0.5);
        let q = cx.q;
        let p = Evaluator::from_real(move |x| 1.0 / (q * x));
        let coeffs = CoeffFns::homogeneous(p, zero(), DiffForm::Inverse);
        let f = solve_f(&coeffs, 1.0, 25, &cx).unwrap();
        let scale = f.value(0).re / f.abscissa(0);
        for k in 0..=25 {
            let expect = scale * f.abscissa(k);
            assert!(
                (f.value(k).re - expect).abs() <= 1e-12 * expect.abs(),
                "k={k}: {} vs {expect}",
                f.value(k).re
            );
        }
    }

    #[test]
    fn solve_f_forward_matches_closed_product_form() {
        // J2-type coefficient (lambda = 1): f = x / (-x^2 (1-q)^2; q^2)_inf
        let cx = ctx(0.6);
        let q = cx.q;
        let p = Evaluator::from_real(move |x| (1.0 - q * x * x * (1.0 - q)) / x);
        let coeffs = CoeffFns::homogeneous(p, zero(), DiffForm::Forward);
        let f = solve_f(&coeffs, 0.9, 25, &cx).unwrap();
        let closed = |x: f64| -> f64 {
            let w = q_pochhammer(
                C::new(-x * x * (1.0 - q) * (1.0 - q), 0.0),
                PochOrder::Infinite,
                &cx.base_sq(),
            )
            .unwrap()
            .re;
            x / w
        };
        let scale = f.value(0).re / closed(f.abscissa(0));
        for k in 0..=25 {
            let expect = scale * closed(f.abscissa(k));
            assert!((f.value(k).re - expect).abs() <= 1e-12 * expect.abs().max(1e-30));
        }
    }

    #[test]
    fn solve_f_ray_property() {
        let cx = ctx(0.4);
        let p = Evaluator::from_real(|x| 0.3 * x - 0.2);
        let coeffs = CoeffFns::homogeneous(p, zero(), DiffForm::Forward);
        let f1 = solve_f(&coeffs, 1.0, 15, &cx).unwrap();
        // doubling the seed scales the whole grid by exactly 2
        let doubled: Vec<C> = (0..=15).map(|k| f1.value(k) * 2.0).collect();
        let f2 = GridFn::new(1.0, cx.q, doubled).unwrap();
        for k in 0..=15 {
            assert_eq!(f2.value(k), f1.value(k) * 2.0);
        }
    }

    #[test]
    fn solve_y_reproduces_affine() {
        // p = r = 0: the stencil annihilates a x + b, so the march is exact
        let cx = ctx(0.45);
        let coeffs = CoeffFns::homogeneous(zero(), zero(), DiffForm::Inverse);
        let (a, b) = (1.7, -0.4);
        let x0 = 1.0;
        let seeds = (C::new(a * x0 + b, 0.0), C::new(a * x0 / cx.q + b, 0.0));
        let y = solve_y(&coeffs, seeds, x0, 30, &cx).unwrap();
        for k in 0..=30 {
            let expect = a * y.abscissa(k) + b;
            assert!((y.value(k).re - expect).abs() < 1e-12 * expect.abs().max(1.0));
        }
    }

    #[test]
    fn solve_y_matches_airy_series() {
        // r(x) = -x in inverse form is the AI/BI equation
        let cx = ctx(0.5);
        let r = Evaluator::from_real(|x| -x);
        let coeffs = CoeffFns::homogeneous(zero(), r, DiffForm::Inverse);
        let x0 = 1.0;
        let ai = |x: f64| airy_pair(AiryBranch::AI, C::new(x, 0.0), &cx).unwrap();
        let y = solve_y(&coeffs, (ai(x0), ai(x0 / cx.q)), x0, 30, &cx).unwrap();
        for k in 0..=30 {
            let expect = ai(y.abscissa(k));
            assert!(
                (y.value(k) - expect).norm() <= 1e-9 * expect.norm().max(1.0),
                "k={k}"
            );
        }
    }

    #[test]
    fn wronskian_antisymmetry() {
        let cx = ctx(0.5);
        let y = |x: f64| Ok(C::new(x * x - 0.3, 0.0));
        let h = |x: f64| Ok(C::new(1.0 / (1.0 + x), 0.0));
        for form in [DiffForm::Forward, DiffForm::Inverse] {
            let a = wronskian_q(&y, &h, 0.7, form, &cx).unwrap();
            let b = wronskian_q(&h, &y, 0.7, form, &cx).unwrap();
            assert!((a + b).norm() < 1e-13);
            let diag = wronskian_q(&y, &y, 0.7, form, &cx).unwrap();
            assert!(diag.norm() < 1e-13);
        }
    }

    #[test]
    fn boundary_term_is_weighted_wronskian() {
        // f(x/q) W_{1/q}(y, h)(x) equals the inverse-form boundary term
        let cx = ctx(0.55);
        let f = |x: f64| Ok(C::new(x, 0.0));
        let y = |x: f64| Ok(C::new(x * x + 1.0, 0.0));
        let h = |x: f64| Ok(C::new(0.4 * x * x * x - x, 0.0));
        let x = 0.8;
        let lhs = boundary_term_inverse(&f, &y, &h, x, &cx).unwrap();
        let w = wronskian_q(&y, &h, x, DiffForm::Inverse, &cx).unwrap();
        let rhs = f(x / cx.q).unwrap() * w;
        assert!((lhs - rhs).norm() < 1e-13 * rhs.norm().max(1.0));
    }

    #[test]
    fn boundary_term_trivial_cases() {
        let cx = ctx(0.5);
        let f = |x: f64| Ok(C::new(x, 0.0));
        let y = |x: f64| Ok(C::new(x + 2.0, 0.0));
        // h constant: term reduces to -c f(x/q) D_{1/q} y(x)
        let cval = 3.2;
        let h = move |_: f64| Ok(C::new(cval, 0.0));
        let x = 0.6;
        let got = boundary_term_inverse(&f, &y, &h, x, &cx).unwrap();
        let expect = -cval * f(x / cx.q).unwrap() * d_q_inverse(&y, x, &cx).unwrap();
        assert!((got - expect).norm() < 1e-14);
        // h = y: antisymmetry zero
        let same = boundary_term_inverse(&f, &y, &y, x, &cx).unwrap();
        assert!(same.norm() < 1e-13);
    }

    #[test]
    fn check_indefinite_zero_h() {
        let cx = ctx(0.5);
        let inst = IdentityInstance {
            lhs_integrand: zero(),
            rhs: zero(),
            nh_integrand: None,
        };
        let r = check_indefinite(&inst, 0.8, 20, &cx).unwrap();
        assert_eq!(r.residual_dq, 0.0);
        assert_eq!(r.residual_sum, 0.0);
    }

    #[test]
    fn generic_identity_random_polynomials() {
        // one deterministic instance of the generic property; the acceptance
        // suite runs 50 random draws per form
        let cx = ctx(0.5);
        let p = Evaluator::from_real(|x| 0.5 * x - 0.3);
        let r = Evaluator::from_real(|x| -0.7 * x * x + 0.2);
        let coeffs = CoeffFns::homogeneous(p, r, DiffForm::Inverse);
        let x0 = 1.0;
        let depth = 40;
        let y = solve_y(&coeffs, (C::new(0.8, 0.0), C::new(1.1, 0.0)), x0, depth, &cx).unwrap();
        let f = solve_f(&coeffs, x0, depth, &cx).unwrap();
        let h = Evaluator::from_real(|x| x * x * x - 0.25 * x + 0.1);
        let ye = Evaluator::new(move |x| y.value_at(x));
        let fe = Evaluator::new(move |x| f.value_at(x));
        let inst = IdentityInstance::from_parts(&coeffs, &fe, &h, &ye, &cx);
        let x = x0 * cx.q;
        let res = check_indefinite(&inst, x, default_depth(x, &cx), &cx).unwrap();
        assert!(res.residual_dq < 1e-9, "dq {}", res.residual_dq);
        assert!(res.residual_sum < 1e-9, "sum {}", res.residual_sum);
    }

    #[test]
    fn integral_of_y_trivial() {
        // f = 1, y = 1, L h = 1 with p = r = 0 solved by h = x^2 q/(1+q):
        // (1/q) D_{1/q} D_q h = 1, so int 1 d_q x recovers x
        let cx = ctx(0.5);
        let q = cx.q;
        let coeffs = CoeffFns::homogeneous(zero(), zero(), DiffForm::Inverse);
        let f = Evaluator::constant(C::new(1.0, 0.0));
        let y = Evaluator::constant(C::new(1.0, 0.0));
        let h = Evaluator::from_real(move |x| x * x * q / (1.0 + q));
        for x in [0.3, 0.8, 1.4] {
            let v = integral_of_y(&coeffs, &f, &h, &y, x, &cx).unwrap();
            assert!((v.re - x).abs() < 1e-12, "x={x}: got {}", v.re);
        }
    }

    #[test]
    fn integral_of_y_guard_rejects_wrong_h() {
        let cx = ctx(0.5);
        let coeffs = CoeffFns::homogeneous(zero(), zero(), DiffForm::Inverse);
        let f = Evaluator::constant(C::new(1.0, 0.0));
        let y = Evaluator::constant(C::new(1.0, 0.0));
        let h = Evaluator::from_real(|x| x * x); // wrong normalization
        assert!(integral_of_y(&coeffs, &f, &h, &y, 0.5, &cx).is_err());
    }
}
