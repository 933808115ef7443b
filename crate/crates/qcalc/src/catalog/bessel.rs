//! Catalog records for the three Jackson q-Bessel families, including the
//! mixed Bessel-trigonometric identities and the zero-of-J definite
//! examples.

use super::aux::{a_nv, c_hat_nv, c_tilde_nv, d_nv, d_tilde_nv, c_cap_nv, i_nv, i_tilde_nv, k_nv, p_nv, p_tilde_nv};
use super::util::*;
use super::{Check, Domain, IdentityRecord, ParamSpec, Params};
use crate::lagrangian::IdentityInstance;
use crate::qcore::{C, QContext, QError, QResult};
use crate::qgrid::{d_q_inverse, jackson_integral};
use crate::qspecial::{bessel_j_scaled, BesselKind};

const DQ_SUM: &[&str] = &["dq_check", "sum_check"];
const DEFINITE: &[&str] = &["definite_check"];
const FULL_Q: (f64, f64) = (0.05, 0.95);

const P_NU: ParamSpec = ParamSpec { name: "nu", domain: Domain::Real { lo: -0.9, hi: 1.5 } };
const P_NU_POS: ParamSpec = ParamSpec { name: "nu", domain: Domain::Real { lo: 0.1, hi: 1.5 } };
const P_M: ParamSpec = ParamSpec { name: "m", domain: Domain::Real { lo: 1.0, hi: 2.0 } };
const P_LAM: ParamSpec = ParamSpec { name: "lambda", domain: Domain::Real { lo: 0.3, hi: 1.2 } };
const P_LAM_SMALL: ParamSpec =
    ParamSpec { name: "lambda", domain: Domain::Real { lo: 0.3, hi: 0.9 } };
const P_N_TRIG: ParamSpec = ParamSpec { name: "n", domain: Domain::Real { lo: 0.0, hi: 2.5 } };

fn dqinv_of(f: impl Fn(f64) -> QResult<C> + Copy, x: f64, ctx: &QContext) -> QResult<C> {
    d_q_inverse(&f, x, ctx)
}

// -------------------------------------------------------------------------
// third q-Bessel function: power-kernel identities
// -------------------------------------------------------------------------

fn lhs_j3_power(nu: f64, m: f64, ctx: QContext) -> crate::lagrangian::Evaluator {
    ev(move |x| {
        let q = ctx.q;
        let bracket = 1.0 / ((1.0 - q) * (1.0 - q))
            - (qn(nu, &ctx).powi(2) - q.powf(nu - m) * qn(m, &ctx).powi(2)) / (x * x);
        Ok(j3(nu, x, &ctx)? * x.powf(m + 1.0) * bracket)
    })
}

fn build_dodo(p: &Params, ctx: &QContext) -> QResult<IdentityInstance> {
    let (nu, m) = (p.get("nu")?, p.get("m")?);
    if m + nu <= 0.0 {
        return Err(QError::Domain("violates Re(m + nu) > 0".into()));
    }
    let c = *ctx;
    let rhs = ev(move |x| {
        let q = c.q;
        let dj = dqinv_of(move |t| j3(nu, t, &c), x, &c)?;
        Ok((j3(nu, x / q, &c)? * (qn(m, &c) / x) - dj / q) * q.powf(nu - m) * x.powf(m + 1.0))
    });
    Ok(IdentityInstance { lhs_integrand: lhs_j3_power(nu, m, c), rhs, nh_integrand: None })
}

fn build_jo(p: &Params, ctx: &QContext) -> QResult<IdentityInstance> {
    let (nu, m) = (p.get("nu")?, p.get("m")?);
    if m + nu <= 0.0 {
        return Err(QError::Domain("violates Re(m + nu) > 0".into()));
    }
    let c = *ctx;
    let rhs = ev(move |x| {
        let q = c.q;
        Ok((j3(nu, x / q, &c)? * ((qn(m, &c) - qn(nu, &c)) / x)
            + j3(nu + 1.0, x, &c)? / (1.0 - q))
            * q.powf(nu - m)
            * x.powf(m + 1.0))
    });
    Ok(IdentityInstance { lhs_integrand: lhs_j3_power(nu, m, c), rhs, nh_integrand: None })
}

fn build_ghabg(p: &Params, ctx: &QContext) -> QResult<IdentityInstance> {
    let nu = p.get("nu")?;
    let c = *ctx;
    let lhs = ev(move |x| Ok(j3(nu, x, &c)? * x.powf(nu + 1.0)));
    let rhs = ev(move |x| Ok(j3(nu + 1.0, x, &c)? * (1.0 - c.q) * x.powf(nu + 1.0)));
    Ok(IdentityInstance { lhs_integrand: lhs, rhs, nh_integrand: None })
}

fn build_bgnmjjsjs(p: &Params, ctx: &QContext) -> QResult<IdentityInstance> {
    let nu = p.get("nu")?;
    if nu <= 0.0 {
        return Err(QError::Domain("violates Re(nu) > 0 (needs J3 of order nu - 1)".into()));
    }
    let c = *ctx;
    let lhs = ev(move |x| Ok(j3(nu, x, &c)? * x.powf(1.0 - nu)));
    let rhs = ev(move |x| {
        let q = c.q;
        Ok(j3(nu - 1.0, x / q, &c)? * -(1.0 - q) * (x / q).powf(1.0 - nu))
    });
    Ok(IdentityInstance { lhs_integrand: lhs, rhs, nh_integrand: None })
}

fn build_j3_product(p: &Params, ctx: &QContext) -> QResult<IdentityInstance> {
    let (nu, mu) = (p.get("nu")?, p.get("mu")?);
    let c = *ctx;
    let lhs = ev(move |x| {
        let q = c.q;
        let bracket = q.powf(-nu) * qn(nu - mu, &c) / (1.0 - q)
            + (q.powf(-mu) * qn(mu, &c).powi(2) - q.powf(-nu) * qn(nu, &c).powi(2)) / (x * x);
        Ok(j3(nu, x, &c)? * j3(mu, x, &c)? * x * bracket)
    });
    let rhs = ev(move |x| {
        let q = c.q;
        let ju = j3(nu, x / q, &c)?;
        let jm = j3(mu, x / q, &c)?;
        Ok(ju * jm * (qn(mu, &c) - qn(nu, &c))
            + (j3(nu + 1.0, x, &c)? * jm - ju * j3(mu + 1.0, x, &c)?) * (x / (1.0 - q)))
    });
    Ok(IdentityInstance { lhs_integrand: lhs, rhs, nh_integrand: None })
}

// -------------------------------------------------------------------------
// third q-Bessel function with sin(.;q)/cos(.;q) kernels
// -------------------------------------------------------------------------

/// `sin(q^{-(n+nu+k)/2} x/(1-q); q)` as used throughout the J3-trig family.
fn strig(sine: bool, shift: f64, n: f64, nu: f64, x: f64, ctx: &QContext) -> QResult<C> {
    let arg = ctx.q.powf(-(n + nu + shift) / 2.0) * x / (1.0 - ctx.q);
    if sine {
        sin_semi(arg, ctx)
    } else {
        cos_semi(arg, ctx)
    }
}

fn build_j3_trig(p: &Params, ctx: &QContext, sine_kernel: bool) -> QResult<IdentityInstance> {
    let (nu, n) = (p.get("nu")?, p.get("n")?);
    let c = *ctx;
    let lhs = ev(move |x| {
        let j = j3(nu, x, &c)?;
        if sine_kernel {
            let bracket = cos_sc(1.0, n, nu, x, &c)? * (qn(2.0 * n + 1.0, &c) * x.powf(n))
                + sin_sc(0.0, n, nu, x, &c)? * (x.powf(n - 1.0) * c_tilde_nv(n, nu, c.q));
            Ok(j * bracket)
        } else {
            let bracket = cos_sc(0.0, n, nu, x, &c)? * (x.powf(n - 1.0) * c_hat_nv(n, nu, c.q))
                - sin_sc(1.0, n, nu, x, &c)? * (qn(2.0 * n + 1.0, &c) * x.powf(n));
            Ok(j * bracket)
        }
    });
    let rhs = ev(move |x| {
        let q = c.q;
        if sine_kernel {
            Ok(d_nv(n, nu, x, &c)? * j3(nu, x / q, &c)?
                * (q.powf((3.0 * n + nu + 2.0) / 2.0) * (1.0 - q) * x.powf(n + 1.0))
                + sin_sc(2.0, n, nu, x, &c)? * j3(nu + 1.0, x, &c)?
                    * (q.powf((n + nu + 2.0) / 2.0) * x.powf(n + 1.0)))
        } else {
            Ok(d_tilde_nv(n, nu, x, &c)? * j3(nu, x / q, &c)?
                * (q.powf((3.0 * n + nu + 1.0) / 2.0) * (1.0 - q) * x.powf(n + 1.0))
                + cos_sc(2.0, n, nu, x, &c)? * j3(nu + 1.0, x, &c)?
                    * (q.powf((n + nu + 1.0) / 2.0) * x.powf(n + 1.0)))
        }
    });
    Ok(IdentityInstance { lhs_integrand: lhs, rhs, nh_integrand: None })
}

fn sin_sc(shift: f64, n: f64, nu: f64, x: f64, ctx: &QContext) -> QResult<C> {
    strig(true, shift, n, nu, x, ctx)
}

fn cos_sc(shift: f64, n: f64, nu: f64, x: f64, ctx: &QContext) -> QResult<C> {
    strig(false, shift, n, nu, x, ctx)
}

fn build_2458744(p: &Params, ctx: &QContext) -> QResult<IdentityInstance> {
    build_j3_trig(p, ctx, true)
}

fn build_245870(p: &Params, ctx: &QContext) -> QResult<IdentityInstance> {
    build_j3_trig(p, ctx, false)
}

fn with_n(p: &Params, n: f64) -> Params {
    p.clone().set("n", n)
}

fn build_2458744_n0(p: &Params, ctx: &QContext) -> QResult<IdentityInstance> {
    build_j3_trig(&with_n(p, 0.0), ctx, true)
}

fn build_245870_n0(p: &Params, ctx: &QContext) -> QResult<IdentityInstance> {
    build_j3_trig(&with_n(p, 0.0), ctx, false)
}

fn build_2458744_nnu(p: &Params, ctx: &QContext) -> QResult<IdentityInstance> {
    let nu = p.get("nu")?;
    build_j3_trig(&with_n(p, nu), ctx, true)
}

fn build_245870_nnu(p: &Params, ctx: &QContext) -> QResult<IdentityInstance> {
    let nu = p.get("nu")?;
    build_j3_trig(&with_n(p, nu), ctx, false)
}

/// Anchor range keeping the largest `sin(.;q)` argument of the J3-trig
/// records at or below ~3 so the `q^{n^2}` damping wins early.
fn x_range_j3_trig(p: &Params, ctx: &QContext) -> (f64, f64) {
    let nu = p.get("nu").unwrap_or(0.5);
    let n = p.get("n").unwrap_or_else(|_| nu);
    let cap = 3.0 * (1.0 - ctx.q) * ctx.q.powf((n + nu + 2.0) / 2.0);
    let hi = cap.min(0.9);
    (0.3 * hi, hi)
}

// -------------------------------------------------------------------------
// second q-Bessel function: power-kernel identities
// -------------------------------------------------------------------------

fn lhs_j2_power(nu: f64, m: f64, lam: f64, ctx: QContext) -> crate::lagrangian::Evaluator {
    ev(move |x| {
        let q = ctx.q;
        let bracket = q.powf(m) * lam * lam + a_nv(m, nu, q) / (x * x);
        Ok(j2s(nu, lam, x, &ctx)? / w_lam(lam, x, &ctx)? * x.powf(m + 1.0) * bracket)
    })
}

fn build_dodoo(p: &Params, ctx: &QContext) -> QResult<IdentityInstance> {
    let (nu, m, lam) = (p.get("nu")?, p.get("m")?, p.get("lambda")?);
    if m + nu <= 0.0 {
        return Err(QError::Domain("violates Re(m + nu) > 0".into()));
    }
    let c = *ctx;
    let rhs = ev(move |x| {
        let q = c.q;
        let dj = dqinv_of(move |t| j2s(nu, lam, t, &c), x, &c)?;
        Ok((j2s(nu, lam, x, &c)? * (q.powf(-m) * qn(m, &c) / x) - dj / q) / w_lam(lam, x, &c)?
            * x.powf(m + 1.0))
    });
    Ok(IdentityInstance { lhs_integrand: lhs_j2_power(nu, m, lam, c), rhs, nh_integrand: None })
}

fn build_joj(p: &Params, ctx: &QContext) -> QResult<IdentityInstance> {
    let (nu, m, lam) = (p.get("nu")?, p.get("m")?, p.get("lambda")?);
    if m + nu <= 0.0 {
        return Err(QError::Domain("violates Re(m + nu) > 0".into()));
    }
    let c = *ctx;
    let rhs = ev(move |x| {
        let q = c.q;
        Ok((j2s(nu, lam, x, &c)? * ((q.powf(-m) * qn(m, &c) - q.powf(-nu) * qn(nu, &c)) / x)
            + j2s(nu + 1.0, lam, x, &c)? * (q.powf(nu) * lam))
            / w_lam(lam, x, &c)?
            * x.powf(m + 1.0))
    });
    Ok(IdentityInstance { lhs_integrand: lhs_j2_power(nu, m, lam, c), rhs, nh_integrand: None })
}

fn build_smsh(p: &Params, ctx: &QContext) -> QResult<IdentityInstance> {
    let (nu, lam) = (p.get("nu")?, p.get("lambda")?);
    let c = *ctx;
    let lhs = ev(move |x| Ok(j2s(nu, lam, x, &c)? / w_lam(lam, x, &c)? * x.powf(nu + 1.0)));
    let rhs =
        ev(move |x| Ok(j2s(nu + 1.0, lam, x, &c)? / w_lam(lam, x, &c)? * (x.powf(nu + 1.0) / lam)));
    Ok(IdentityInstance { lhs_integrand: lhs, rhs, nh_integrand: None })
}

fn build_smsmn(p: &Params, ctx: &QContext) -> QResult<IdentityInstance> {
    let (nu, lam) = (p.get("nu")?, p.get("lambda")?);
    if nu <= 0.0 {
        return Err(QError::Domain("violates Re(nu) > 0 (needs J2 of order nu - 1)".into()));
    }
    let c = *ctx;
    let lhs = ev(move |x| Ok(j2s(nu, lam, x, &c)? / w_lam(lam, x, &c)? * x.powf(1.0 - nu)));
    let rhs = ev(move |x| {
        Ok(j2s(nu - 1.0, lam, x, &c)? / w_lam(lam, x, &c)? * (-x.powf(1.0 - nu) / lam))
    });
    Ok(IdentityInstance { lhs_integrand: lhs, rhs, nh_integrand: None })
}

fn build_j2_example(p: &Params, ctx: &QContext) -> QResult<IdentityInstance> {
    // pinned nu = 0, m = 1 instance in its printed shape
    let lam = p.get("lambda")?;
    let c = *ctx;
    let lhs = ev(move |x| {
        let q = c.q;
        Ok(j2s(0.0, lam, x, &c)? / w_lam(lam, x, &c)? * (lam * lam * q * q * x * x + 1.0))
    });
    let rhs = ev(move |x| {
        let q = c.q;
        Ok((j2s(0.0, lam, x, &c)? * x + j2s(1.0, lam, x, &c)? * (q * lam * x * x))
            / w_lam(lam, x, &c)?)
    });
    Ok(IdentityInstance { lhs_integrand: lhs, rhs, nh_integrand: None })
}

/// Definite `[0,1]` instance conditioned on `lambda` being a zero of
/// `J_0^{(2)}(. | q^2)`; the boundary term at 1 survives alone.
fn check_j2_zero(p: &Params, ctx: &QContext) -> QResult<f64> {
    let lam = match p.get("lambda") {
        Ok(l) => {
            let v = j2s(0.0, l, 1.0, ctx)?;
            if v.norm() >= 1e-10 {
                return Err(QError::Domain(format!(
                    "violates |J2_0(lambda|q^2)| < 1e-10 (got {:.3e})",
                    v.norm()
                )));
            }
            l
        }
        Err(_) => first_zero_j2(ctx)?,
    };
    let c = *ctx;
    let q = c.q;
    let integrand = move |x: f64| -> QResult<C> {
        Ok(j2s(0.0, lam, x, &c)? / w_lam(lam, x, &c)? * (lam * lam * q * q * x * x + 1.0))
    };
    let integral = jackson_integral(&integrand, 1.0, ctx)?;
    let boundary = j2s(1.0, lam, 1.0, ctx)? / w_lam(lam, 1.0, ctx)? * (q * lam);
    let scale = integral.norm().max(boundary.norm()).max(1.0);
    Ok((integral - boundary).norm() / scale)
}

/// First positive zero of `J_0^{(2)}(. | q^2)` by scan-and-bisect.
pub(super) fn first_zero_j2(ctx: &QContext) -> QResult<f64> {
    let f = |l: f64| -> QResult<f64> { Ok(j2s(0.0, l, 1.0, ctx)?.re) };
    let mut prev = f(0.25)?;
    let mut a = 0.25;
    let mut step = 0.25;
    loop {
        let b = a + step;
        if b > 80.0 {
            return Err(QError::Domain("no J2 zero located below 80".into()));
        }
        let cur = f(b)?;
        if prev * cur < 0.0 {
            let (mut lo, mut hi) = (a, b);
            for _ in 0..200 {
                let mid = 0.5 * (lo + hi);
                if f(lo)? * f(mid)? <= 0.0 {
                    hi = mid;
                } else {
                    lo = mid;
                }
            }
            return Ok(0.5 * (lo + hi));
        }
        prev = cur;
        a = b;
        step = 0.25;
    }
}

// -------------------------------------------------------------------------
// second q-Bessel function with S_q/C_q kernels (lambda = 1)
// -------------------------------------------------------------------------

fn build_j2_trig(p: &Params, ctx: &QContext, sine_kernel: bool) -> QResult<IdentityInstance> {
    let (nu, n) = (p.get("nu")?, p.get("n")?);
    let c = *ctx;
    let lhs = ev(move |x| {
        let q = c.q;
        let j = j2s(nu, 1.0, x, &c)? / w_lam(1.0, x, &c)?;
        let s = sin_cap(q.powf(n + 1.5) * x, &c)?;
        let co = cos_cap(q.powf(n + 1.5) * x, &c)?;
        let bracket = if sine_kernel {
            s * (x.powf(n - 1.0) * a_nv(n, nu, q)) + co * (x.powf(n) * c_cap_nv(n, nu, q))
        } else {
            co * (x.powf(n - 1.0) * a_nv(n, nu, q)) - s * (x.powf(n) * c_cap_nv(n, nu, q))
        };
        Ok(j * bracket)
    });
    let rhs = ev(move |x| {
        let q = c.q;
        let j = j2s(nu, 1.0, x, &c)?;
        let jp = j2s(nu + 1.0, 1.0, x, &c)?;
        let trig_half = if sine_kernel {
            sin_cap(q.powf(n + 0.5) * x, &c)?
        } else {
            cos_cap(q.powf(n + 0.5) * x, &c)?
        };
        let collected = if sine_kernel {
            i_nv(n, nu, x, &c)?
        } else {
            i_tilde_nv(n, nu, x, &c)?
        };
        Ok((collected * j + trig_half * jp * q.powf(nu)) / w_lam(1.0, x, &c)? * x.powf(n + 1.0))
    });
    Ok(IdentityInstance { lhs_integrand: lhs, rhs, nh_integrand: None })
}

fn build_fdscss(p: &Params, ctx: &QContext) -> QResult<IdentityInstance> {
    build_j2_trig(p, ctx, true)
}

fn build_fdscshnj(p: &Params, ctx: &QContext) -> QResult<IdentityInstance> {
    build_j2_trig(p, ctx, false)
}

fn build_fdscss_n0(p: &Params, ctx: &QContext) -> QResult<IdentityInstance> {
    build_j2_trig(&with_n(p, 0.0), ctx, true)
}

fn build_fdscshnj_n0(p: &Params, ctx: &QContext) -> QResult<IdentityInstance> {
    build_j2_trig(&with_n(p, 0.0), ctx, false)
}

fn build_fdscss_nnu(p: &Params, ctx: &QContext) -> QResult<IdentityInstance> {
    let nu = p.get("nu")?;
    build_j2_trig(&with_n(p, nu), ctx, true)
}

fn build_fdscshnj_nnu(p: &Params, ctx: &QContext) -> QResult<IdentityInstance> {
    let nu = p.get("nu")?;
    build_j2_trig(&with_n(p, nu), ctx, false)
}

// -------------------------------------------------------------------------
// first q-Bessel function: power-kernel identities
// -------------------------------------------------------------------------

/// `(-x^2 lambda^2 (1-q)^2/q^2; q^2)_inf`, the shifted weight on the
/// antiderivative side of the J1 identities.
fn w_lam_q(lam: f64, x: f64, ctx: &QContext) -> QResult<C> {
    w_lam(lam / ctx.q, x, ctx)
}

fn lhs_j1_power(
    nu: f64,
    m: f64,
    lam: f64,
    corrected: bool,
    ctx: QContext,
) -> crate::lagrangian::Evaluator {
    ev(move |x| {
        let q = ctx.q;
        let bracket = if corrected {
            // equivalent form: q^m A_{m,nu}, a fixed transcription of the
            // combined kernel (see the J1 records below)
            lam * lam / (q * q) + q.powf(m) * a_nv(m, nu, q) / (x * x)
        } else {
            q.powf(-m - 2.0) * lam * lam + a_nv(m, nu, q) / (x * x)
        };
        Ok(j1s(nu, lam, x, &ctx)? * w_lam(lam, x, &ctx)? * x.powf(m + 1.0) * bracket)
    })
}

fn build_dodooo(p: &Params, ctx: &QContext) -> QResult<IdentityInstance> {
    let (nu, m, lam) = (p.get("nu")?, p.get("m")?, p.get("lambda")?);
    if m + nu <= 0.0 {
        return Err(QError::Domain("violates Re(m + nu) > 0".into()));
    }
    let c = *ctx;
    let rhs = ev(move |x| {
        let q = c.q;
        let dj = dqinv_of(move |t| j1s(nu, lam, t, &c), x, &c)?;
        Ok((j1s(nu, lam / q, x, &c)? * (qn(m, &c) / (q.powf(m) * x)) - dj * q.powf(-m - 1.0))
            * w_lam_q(lam, x, &c)?
            * x.powf(m + 1.0))
    });
    Ok(IdentityInstance {
        lhs_integrand: lhs_j1_power(nu, m, lam, false, c),
        rhs,
        nh_integrand: None,
    })
}

fn build_jojok(p: &Params, ctx: &QContext) -> QResult<IdentityInstance> {
    let (nu, m, lam) = (p.get("nu")?, p.get("m")?, p.get("lambda")?);
    if m + nu <= 0.0 {
        return Err(QError::Domain("violates Re(m + nu) > 0".into()));
    }
    let c = *ctx;
    let rhs = ev(move |x| {
        let q = c.q;
        Ok((j1s(nu, lam / q, x, &c)? * ((qn(m, &c) - qn(nu, &c)) / x)
            + j1s(nu + 1.0, lam / q, x, &c)? * (q.powf(nu - 1.0) * lam))
            * w_lam_q(lam, x, &c)?
            * x.powf(m + 1.0))
    });
    Ok(IdentityInstance {
        lhs_integrand: lhs_j1_power(nu, m, lam, true, c),
        rhs,
        nh_integrand: None,
    })
}

fn build_j1_part_nu(p: &Params, ctx: &QContext) -> QResult<IdentityInstance> {
    let (nu, lam) = (p.get("nu")?, p.get("lambda")?);
    let c = *ctx;
    let lhs = ev(move |x| Ok(j1s(nu, lam, x, &c)? * w_lam(lam, x, &c)? * x.powf(nu + 1.0)));
    let rhs = ev(move |x| {
        let q = c.q;
        Ok(j1s(nu + 1.0, lam / q, x, &c)? * w_lam_q(lam, x, &c)? * ((q * x).powf(nu + 1.0) / lam))
    });
    Ok(IdentityInstance { lhs_integrand: lhs, rhs, nh_integrand: None })
}

fn build_j1_part_negnu(p: &Params, ctx: &QContext) -> QResult<IdentityInstance> {
    let (nu, lam) = (p.get("nu")?, p.get("lambda")?);
    if nu <= 0.0 {
        return Err(QError::Domain("violates Re(nu) > 0 (needs J1 of order nu - 1)".into()));
    }
    let c = *ctx;
    let lhs = ev(move |x| Ok(j1s(nu, lam, x, &c)? * w_lam(lam, x, &c)? * x.powf(1.0 - nu)));
    let rhs = ev(move |x| {
        let q = c.q;
        Ok(j1s(nu - 1.0, lam / q, x, &c)? * w_lam_q(lam, x, &c)? * (-(q * x).powf(1.0 - nu) / lam))
    });
    Ok(IdentityInstance { lhs_integrand: lhs, rhs, nh_integrand: None })
}

/// Keep all J1 arguments (including the `x/q` and `lambda/q` shifts) inside
/// the `|z| < 2` series disc.
fn x_range_j1(p: &Params, ctx: &QContext) -> (f64, f64) {
    let lam = p.get("lambda").unwrap_or(0.6);
    let q = ctx.q;
    let cap = 0.85 * q / (lam * (1.0 - q));
    let hi = cap.min(0.9);
    (0.25 * hi, hi)
}

/// Definite `[0,1]` instance conditioned on `lambda` being a zero of
/// `J_0^{(1)}(. | q^2)` (only reachable inside the J1 disc for larger q).
fn check_j1_zero(p: &Params, ctx: &QContext) -> QResult<f64> {
    let lam = match p.get("lambda") {
        Ok(l) => {
            let v = j1s(0.0, l, 1.0, ctx)?;
            if v.norm() >= 1e-10 {
                return Err(QError::Domain(format!(
                    "violates |J1_0(lambda|q^2)| < 1e-10 (got {:.3e})",
                    v.norm()
                )));
            }
            l
        }
        Err(_) => {
            // J1 and J2 share zeros (their ratio is a positive product);
            // accept the J2 zero when it lies inside the J1 disc.
            let z = first_zero_j2(ctx)?;
            if 2.0 * z * (1.0 - ctx.q) >= 2.0 {
                return Err(QError::Domain(format!(
                    "first zero {z} lies outside the J1 series disc at q = {}",
                    ctx.q
                )));
            }
            z
        }
    };
    let c = *ctx;
    let q = c.q;
    let integrand = move |x: f64| -> QResult<C> {
        let w = w_lam(q * lam, x, &c)?; // (-q^2 x^2 lam^2 (1-q)^2; q^2)_inf
        Ok(bessel_j_scaled(BesselKind::J1, re(0.0), re(q * lam), x, &c)?
            * w
            * (x * x + 1.0 / (lam * lam)))
    };
    let integral = jackson_integral(&integrand, 1.0, ctx)?;
    let boundary =
        j1s(1.0, lam, 1.0, ctx)? * w_lam(lam, 1.0, ctx)? / lam;
    let scale = integral.norm().max(boundary.norm()).max(1.0);
    Ok((integral - boundary).norm() / scale)
}

// -------------------------------------------------------------------------
// first q-Bessel function with sin_q/cos_q kernels (lambda = 1)
// -------------------------------------------------------------------------

fn build_j1_trig(p: &Params, ctx: &QContext, sine_kernel: bool) -> QResult<IdentityInstance> {
    let (nu, n) = (p.get("nu")?, p.get("n")?);
    let c = *ctx;
    let lhs = ev(move |x| {
        let q = c.q;
        let arg = q.powf(-n - 1.5) * x;
        let j = j1s(nu, 1.0, x, &c)? * w_lam(1.0, x, &c)?;
        let s = sin_q(arg, &c)?;
        let co = cos_q(arg, &c)?;
        let bracket = if sine_kernel {
            s * (a_nv(n, nu, q) * x.powf(n - 1.0)) + co * (k_nv(n, nu, q) * x.powf(n))
        } else {
            co * (a_nv(n, nu, q) * x.powf(n - 1.0)) - s * (k_nv(n, nu, q) * x.powf(n))
        };
        Ok(j * bracket)
    });
    let rhs = ev(move |x| {
        let q = c.q;
        let arg = q.powf(-n - 1.5) * x;
        let jq = j1s(nu, 1.0 / q, x, &c)?;
        let jqp = j1s(nu + 1.0, 1.0 / q, x, &c)?;
        let trig = if sine_kernel { sin_q(arg, &c)? } else { cos_q(arg, &c)? };
        let collected = if sine_kernel { p_nv(n, nu, x, &c)? } else { p_tilde_nv(n, nu, x, &c)? };
        Ok((collected * jq + trig * jqp * q.powf(nu - n - 1.0))
            * w_lam_q(1.0, x, &c)?
            * x.powf(n + 1.0))
    });
    Ok(IdentityInstance { lhs_integrand: lhs, rhs, nh_integrand: None })
}

fn build_fdscsshf(p: &Params, ctx: &QContext) -> QResult<IdentityInstance> {
    build_j1_trig(p, ctx, true)
}

fn build_fdscshnjsr(p: &Params, ctx: &QContext) -> QResult<IdentityInstance> {
    build_j1_trig(p, ctx, false)
}

fn build_fdscsshf_n0(p: &Params, ctx: &QContext) -> QResult<IdentityInstance> {
    build_j1_trig(&with_n(p, 0.0), ctx, true)
}

fn build_fdscshnjsr_n0(p: &Params, ctx: &QContext) -> QResult<IdentityInstance> {
    build_j1_trig(&with_n(p, 0.0), ctx, false)
}

fn build_fdscsshf_nnu(p: &Params, ctx: &QContext) -> QResult<IdentityInstance> {
    let nu = p.get("nu")?;
    build_j1_trig(&with_n(p, nu), ctx, true)
}

fn build_fdscshnjsr_nnu(p: &Params, ctx: &QContext) -> QResult<IdentityInstance> {
    let nu = p.get("nu")?;
    build_j1_trig(&with_n(p, nu), ctx, false)
}

/// The J1-trig records must respect both the sin_q radius at the deepest
/// shift `q^{-n-3/2} x` and the J1 disc for `J(lambda x/q | q^2)`.
fn x_range_j1_trig(p: &Params, ctx: &QContext) -> (f64, f64) {
    let nu = p.get("nu").unwrap_or(0.5);
    let n = p.get("n").unwrap_or_else(|_| nu.max(0.0));
    let q = ctx.q;
    let trig_cap = 0.85 * q.powf(n + 1.5) / (1.0 - q);
    let disc_cap = 0.85 * q / (1.0 - q);
    let hi = trig_cap.min(disc_cap).min(0.9);
    (0.3 * hi, hi)
}

// -------------------------------------------------------------------------
// registry
// -------------------------------------------------------------------------

pub(super) fn register(v: &mut Vec<IdentityRecord>) {
    v.push(IdentityRecord {
        id: "thm3.1-eq-dodo",
        anchor: "int x^(m+1) (1/(1-q)^2 - ([nu]^2 - q^(nu-m)[m]^2)/x^2) J3_nu(x;q2) d_q x \
                 = q^(nu-m) x^(m+1) ([m]/x J3_nu(x/q;q2) - (1/q) Dqinv J3_nu(x;q2))",
        params: &[P_NU, P_M],
        tolerance: 1e-8,
        strategies: DQ_SUM,
        q_domain: FULL_Q,
        check: Check::Indefinite { build: build_dodo, x_range: x_default },
    });
    v.push(IdentityRecord {
        id: "thm3.1-eq-jo",
        anchor: "int x^(m+1) (1/(1-q)^2 - ([nu]^2 - q^(nu-m)[m]^2)/x^2) J3_nu(x;q2) d_q x \
                 = q^(nu-m) x^(m+1) (([m]-[nu])/x J3_nu(x/q;q2) + J3_(nu+1)(x;q2)/(1-q))",
        params: &[P_NU, P_M],
        tolerance: 1e-8,
        strategies: DQ_SUM,
        q_domain: FULL_Q,
        check: Check::Indefinite { build: build_jo, x_range: x_default },
    });
    v.push(IdentityRecord {
        id: "thm3.1-eq-ghabg",
        anchor: "int x^(nu+1) J3_nu(x;q2) d_q x = (1-q) x^(nu+1) J3_(nu+1)(x;q2)",
        params: &[P_NU],
        tolerance: 1e-9,
        strategies: DQ_SUM,
        q_domain: FULL_Q,
        check: Check::Indefinite { build: build_ghabg, x_range: x_default },
    });
    v.push(IdentityRecord {
        id: "thm3.1-eq-bgnmjjsjs",
        anchor: "int x^(1-nu) J3_nu(x;q2) d_q x = -(1-q) (x/q)^(1-nu) J3_(nu-1)(x/q;q2)",
        params: &[P_NU_POS],
        tolerance: 1e-9,
        strategies: DQ_SUM,
        q_domain: FULL_Q,
        check: Check::Indefinite { build: build_bgnmjjsjs, x_range: x_default },
    });
    v.push(IdentityRecord {
        id: "prop-legendre-product",
        anchor: "int x (q^-nu [nu-mu]/(1-q) + (q^-mu [mu]^2 - q^-nu [nu]^2)/x^2) \
                 J3_nu J3_mu d_q x = ([mu]-[nu]) J3_nu(x/q) J3_mu(x/q) \
                 + x/(1-q) (J3_(nu+1) J3_mu(x/q) - J3_nu(x/q) J3_(mu+1))",
        params: &[P_NU, ParamSpec { name: "mu", domain: Domain::Real { lo: -0.9, hi: 1.5 } }],
        tolerance: 1e-8,
        strategies: DQ_SUM,
        q_domain: FULL_Q,
        check: Check::Indefinite { build: build_j3_product, x_range: x_default },
    });
    v.push(IdentityRecord {
        id: "thm3.3-eq-2458744",
        anchor: "int ([2n+1] x^n cos(snc(n+nu+1)x;q) + x^(n-1) Ctilde sin(snc(n+nu)x;q)) \
                 J3_nu d_q x = q^((3n+nu+2)/2)(1-q) x^(n+1) D_nv(x) J3_nu(x/q) \
                 + q^((n+nu+2)/2) x^(n+1) sin(snc(n+nu+2)x;q) J3_(nu+1); snc(k) = q^(-k/2)/(1-q)",
        params: &[P_NU, P_N_TRIG],
        tolerance: 1e-8,
        strategies: DQ_SUM,
        q_domain: FULL_Q,
        check: Check::Indefinite { build: build_2458744, x_range: x_range_j3_trig },
    });
    v.push(IdentityRecord {
        id: "thm3.3-eq-245870",
        anchor: "cosine-kernel companion of thm3.3-eq-2458744",
        params: &[P_NU, P_N_TRIG],
        tolerance: 1e-8,
        strategies: DQ_SUM,
        q_domain: FULL_Q,
        check: Check::Indefinite { build: build_245870, x_range: x_range_j3_trig },
    });
    v.push(IdentityRecord {
        id: "cor-thm3.3-n0-sin",
        anchor: "n = 0 instance of thm3.3-eq-2458744",
        params: &[P_NU],
        tolerance: 1e-8,
        strategies: DQ_SUM,
        q_domain: FULL_Q,
        check: Check::Indefinite { build: build_2458744_n0, x_range: x_range_j3_trig },
    });
    v.push(IdentityRecord {
        id: "cor-thm3.3-n0-cos",
        anchor: "n = 0 instance of thm3.3-eq-245870",
        params: &[P_NU],
        tolerance: 1e-8,
        strategies: DQ_SUM,
        q_domain: FULL_Q,
        check: Check::Indefinite { build: build_245870_n0, x_range: x_range_j3_trig },
    });
    v.push(IdentityRecord {
        id: "cor-thm3.3-nnu-sin",
        anchor: "n = nu instance of thm3.3-eq-2458744",
        params: &[ParamSpec { name: "nu", domain: Domain::Real { lo: 0.0, hi: 1.2 } }],
        tolerance: 1e-8,
        strategies: DQ_SUM,
        q_domain: FULL_Q,
        check: Check::Indefinite { build: build_2458744_nnu, x_range: x_range_j3_trig },
    });
    v.push(IdentityRecord {
        id: "cor-thm3.3-nnu-cos",
        anchor: "n = nu instance of thm3.3-eq-245870",
        params: &[ParamSpec { name: "nu", domain: Domain::Real { lo: 0.0, hi: 1.2 } }],
        tolerance: 1e-8,
        strategies: DQ_SUM,
        q_domain: FULL_Q,
        check: Check::Indefinite { build: build_245870_nnu, x_range: x_range_j3_trig },
    });
    v.push(IdentityRecord {
        id: "thm3.5-eq-dodoo",
        anchor: "int x^(m+1)/Wl (q^m l^2 + A_mn/x^2) J2_nu(lx|q2) d_q x \
                 = x^(m+1)/Wl (q^-m [m]/x J2_nu - (1/q) Dqinv J2_nu); \
                 Wl = (-x^2 l^2 (1-q)^2; q2)_inf",
        params: &[P_NU, P_M, P_LAM],
        tolerance: 1e-8,
        strategies: DQ_SUM,
        q_domain: FULL_Q,
        check: Check::Indefinite { build: build_dodoo, x_range: x_default },
    });
    v.push(IdentityRecord {
        id: "thm3.5-eq-joj",
        anchor: "int x^(m+1)/Wl (q^m l^2 + A_mn/x^2) J2_nu(lx|q2) d_q x \
                 = x^(m+1)/Wl ((q^-m[m] - q^-nu[nu])/x J2_nu + q^nu l J2_(nu+1))",
        params: &[P_NU, P_M, P_LAM],
        tolerance: 1e-8,
        strategies: DQ_SUM,
        q_domain: FULL_Q,
        check: Check::Indefinite { build: build_joj, x_range: x_default },
    });
    v.push(IdentityRecord {
        id: "thm3.5-eq-smsh",
        anchor: "int x^(nu+1)/Wl J2_nu(lx|q2) d_q x = x^(nu+1)/(l Wl) J2_(nu+1)(lx|q2)",
        params: &[P_NU, P_LAM],
        tolerance: 1e-9,
        strategies: DQ_SUM,
        q_domain: FULL_Q,
        check: Check::Indefinite { build: build_smsh, x_range: x_default },
    });
    v.push(IdentityRecord {
        id: "thm3.5-eq-smsmn",
        anchor: "int x^(1-nu)/Wl J2_nu(lx|q2) d_q x = -x^(1-nu)/(l Wl) J2_(nu-1)(lx|q2)",
        params: &[P_NU_POS, P_LAM],
        tolerance: 1e-9,
        strategies: DQ_SUM,
        q_domain: FULL_Q,
        check: Check::Indefinite { build: build_smsmn, x_range: x_default },
    });
    v.push(IdentityRecord {
        id: "thm3.5-example-j0",
        anchor: "int (l^2 q^2 x^2 + 1)/Wl J2_0(lx|q2) d_q x \
                 = (x J2_0 + q l x^2 J2_1)/Wl  (nu = 0, m = 1 instance)",
        params: &[P_LAM],
        tolerance: 1e-9,
        strategies: DQ_SUM,
        q_domain: FULL_Q,
        check: Check::Indefinite { build: build_j2_example, x_range: x_default },
    });
    v.push(IdentityRecord {
        id: "thm3.5-example-zero",
        anchor: "for J2_0(lambda|q2) = 0: int_0^1 (l^2 q^2 x^2 + 1)/Wl J2_0(lx|q2) d_q x \
                 = q l J2_1(l|q2)/(-l^2(1-q)^2; q2)_inf",
        params: &[],
        tolerance: 1e-7,
        strategies: DEFINITE,
        q_domain: FULL_Q,
        check: Check::Custom(check_j2_zero),
    });
    v.push(IdentityRecord {
        id: "thm3.7-eq-fdscss",
        anchor: "int (x^(n-1) A_nv Sq(q^(n+3/2)x) + x^n C_nv Cq(q^(n+3/2)x)) J2_nu(x|q2)/W d_q x \
                 = x^(n+1)/W (I_nv(x) J2_nu + q^nu Sq(q^(n+1/2)x) J2_(nu+1))",
        params: &[P_NU, P_N_TRIG],
        tolerance: 1e-8,
        strategies: DQ_SUM,
        q_domain: FULL_Q,
        check: Check::Indefinite { build: build_fdscss, x_range: x_default },
    });
    v.push(IdentityRecord {
        id: "thm3.7-eq-fdscshnj",
        anchor: "cosine-kernel companion of thm3.7-eq-fdscss",
        params: &[P_NU, P_N_TRIG],
        tolerance: 1e-8,
        strategies: DQ_SUM,
        q_domain: FULL_Q,
        check: Check::Indefinite { build: build_fdscshnj, x_range: x_default },
    });
    v.push(IdentityRecord {
        id: "cor-thm3.7-n0-sin",
        anchor: "n = 0 instance of thm3.7-eq-fdscss",
        params: &[P_NU],
        tolerance: 1e-8,
        strategies: DQ_SUM,
        q_domain: FULL_Q,
        check: Check::Indefinite { build: build_fdscss_n0, x_range: x_default },
    });
    v.push(IdentityRecord {
        id: "cor-thm3.7-n0-cos",
        anchor: "n = 0 instance of thm3.7-eq-fdscshnj",
        params: &[P_NU],
        tolerance: 1e-8,
        strategies: DQ_SUM,
        q_domain: FULL_Q,
        check: Check::Indefinite { build: build_fdscshnj_n0, x_range: x_default },
    });
    v.push(IdentityRecord {
        id: "cor-thm3.7-nnu-sin",
        anchor: "n = nu instance of thm3.7-eq-fdscss",
        params: &[ParamSpec { name: "nu", domain: Domain::Real { lo: 0.0, hi: 1.2 } }],
        tolerance: 1e-8,
        strategies: DQ_SUM,
        q_domain: FULL_Q,
        check: Check::Indefinite { build: build_fdscss_nnu, x_range: x_default },
    });
    v.push(IdentityRecord {
        id: "cor-thm3.7-nnu-cos",
        anchor: "n = nu instance of thm3.7-eq-fdscshnj",
        params: &[ParamSpec { name: "nu", domain: Domain::Real { lo: 0.0, hi: 1.2 } }],
        tolerance: 1e-8,
        strategies: DQ_SUM,
        q_domain: FULL_Q,
        check: Check::Indefinite { build: build_fdscshnj_nnu, x_range: x_default },
    });
    v.push(IdentityRecord {
        id: "thm3.8-eq-dodooo",
        anchor: "int x^(m+1) W (q^(-m-2) l^2 + A_mn/x^2) J1_nu(lx|q2) d_q x \
                 = x^(m+1) W(./q) ([m]/(q^m x) J1_nu(lx/q|q2) - q^(-m-1) Dqinv J1_nu)",
        params: &[P_NU, P_M, P_LAM_SMALL],
        tolerance: 1e-8,
        strategies: DQ_SUM,
        q_domain: FULL_Q,
        check: Check::Indefinite { build: build_dodooo, x_range: x_range_j1 },
    });
    v.push(IdentityRecord {
        id: "thm3.8-eq-jojok",
        anchor: "int x^(m+1) W (l^2/q^2 + q^m A_mn/x^2) J1_nu(lx|q2) d_q x \
                 = x^(m+1) W(./q) (([m]-[nu])/x J1_nu(lx/q|q2) + q^(nu-1) l J1_(nu+1)(lx/q|q2))",
        params: &[P_NU, P_M, P_LAM_SMALL],
        tolerance: 1e-8,
        strategies: DQ_SUM,
        q_domain: FULL_Q,
        check: Check::Indefinite { build: build_jojok, x_range: x_range_j1 },
    });
    v.push(IdentityRecord {
        id: "thm3.8-part-nu",
        anchor: "int x^(nu+1) W J1_nu(lx|q2) d_q x = (qx)^(nu+1)/l W(./q) J1_(nu+1)(lx/q|q2)",
        params: &[P_NU, P_LAM_SMALL],
        tolerance: 1e-9,
        strategies: DQ_SUM,
        q_domain: FULL_Q,
        check: Check::Indefinite { build: build_j1_part_nu, x_range: x_range_j1 },
    });
    v.push(IdentityRecord {
        id: "thm3.8-part-negnu",
        anchor: "int x^(1-nu) W J1_nu(lx|q2) d_q x = -(qx)^(1-nu)/l W(./q) J1_(nu-1)(lx/q|q2)",
        params: &[P_NU_POS, P_LAM_SMALL],
        tolerance: 1e-9,
        strategies: DQ_SUM,
        q_domain: FULL_Q,
        check: Check::Indefinite { build: build_j1_part_negnu, x_range: x_range_j1 },
    });
    v.push(IdentityRecord {
        id: "thm3.8-example-zero",
        anchor: "for J1_0(lambda|q2) = 0: int_0^1 (-q^2 x^2 l^2 (1-q)^2; q2)_inf (x^2 + 1/l^2) \
                 J1_0(q l x|q2) d_q x matches its boundary term at 1",
        params: &[],
        tolerance: 1e-7,
        strategies: DEFINITE,
        q_domain: (0.7, 0.95),
        check: Check::Custom(check_j1_zero),
    });
    v.push(IdentityRecord {
        id: "thm3.10-eq-fdscsshf",
        anchor: "int W (A_nv x^(n-1) sinq(q^(-n-3/2)x) + K_nv x^n cosq(q^(-n-3/2)x)) \
                 J1_nu(x|q2) d_q x = x^(n+1) W(./q) (P_nv(x) J1_nu(x/q|q2) \
                 + q^(nu-n-1) sinq(q^(-n-3/2)x) J1_(nu+1)(x/q|q2))",
        params: &[P_NU, ParamSpec { name: "n", domain: Domain::Real { lo: 0.0, hi: 2.0 } }],
        tolerance: 1e-8,
        strategies: DQ_SUM,
        q_domain: FULL_Q,
        check: Check::Indefinite { build: build_fdscsshf, x_range: x_range_j1_trig },
    });
    v.push(IdentityRecord {
        id: "thm3.10-eq-fdscshnjsr",
        anchor: "cosine-kernel companion of thm3.10-eq-fdscsshf",
        params: &[P_NU, ParamSpec { name: "n", domain: Domain::Real { lo: 0.0, hi: 2.0 } }],
        tolerance: 1e-8,
        strategies: DQ_SUM,
        q_domain: FULL_Q,
        check: Check::Indefinite { build: build_fdscshnjsr, x_range: x_range_j1_trig },
    });
    v.push(IdentityRecord {
        id: "cor-thm3.10-n0-sin",
        anchor: "n = 0 instance of thm3.10-eq-fdscsshf",
        params: &[P_NU],
        tolerance: 1e-8,
        strategies: DQ_SUM,
        q_domain: FULL_Q,
        check: Check::Indefinite { build: build_fdscsshf_n0, x_range: x_range_j1_trig },
    });
    v.push(IdentityRecord {
        id: "cor-thm3.10-n0-cos",
        anchor: "n = 0 instance of thm3.10-eq-fdscshnjsr",
        params: &[P_NU],
        tolerance: 1e-8,
        strategies: DQ_SUM,
        q_domain: FULL_Q,
        check: Check::Indefinite { build: build_fdscshnjsr_n0, x_range: x_range_j1_trig },
    });
    v.push(IdentityRecord {
        id: "cor-thm3.10-nnu-sin",
        anchor: "n = nu instance of thm3.10-eq-fdscsshf",
        params: &[ParamSpec { name: "nu", domain: Domain::Real { lo: 0.0, hi: 1.2 } }],
        tolerance: 1e-8,
        strategies: DQ_SUM,
        q_domain: FULL_Q,
        check: Check::Indefinite { build: build_fdscsshf_nnu, x_range: x_range_j1_trig },
    });
    v.push(IdentityRecord {
        id: "cor-thm3.10-nnu-cos",
        anchor: "n = nu instance of thm3.10-eq-fdscshnjsr",
        params: &[ParamSpec { name: "nu", domain: Domain::Real { lo: 0.0, hi: 1.2 } }],
        tolerance: 1e-8,
        strategies: DQ_SUM,
        q_domain: FULL_Q,
        check: Check::Indefinite { build: build_fdscshnjsr_nnu, x_range: x_range_j1_trig },
    });
}
