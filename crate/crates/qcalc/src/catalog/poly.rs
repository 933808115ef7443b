//! Catalog records for the q-orthogonal polynomial families, the Airy-type
//! series in base sqrt(q), and the q-Legendre integrals.

use super::aux::{alpha_n_exponent, c_log, mu_exponent};
use super::util::*;
use super::{Check, Domain, IdentityRecord, ParamSpec, Params};
use crate::lagrangian::IdentityInstance;
use crate::qcore::{C, QContext, QError, QResult};
use crate::qgrid::{d_q_inverse, improper_riemann, jackson_integral_interval, QuadPolicy};
use crate::qspecial::{phi, sw_orthogonality_weight};

const DQ_SUM: &[&str] = &["dq_check", "sum_check"];
const DEFINITE: &[&str] = &["definite_check"];
const SUMMATION: &[&str] = &["sum_check"];
const FULL_Q: (f64, f64) = (0.05, 0.95);

const P_N: ParamSpec = ParamSpec { name: "n", domain: Domain::Int { lo: 1, hi: 4 } };
const P_M_REAL: ParamSpec = ParamSpec { name: "m", domain: Domain::Real { lo: 0.5, hi: 2.0 } };

/// `e^{c ln^2 x}` with `c = 1/(2 ln q)`: the Stieltjes-Wigert log kernel.
fn elog(x: f64, ctx: &QContext) -> f64 {
    (c_log(ctx.q) * x.ln() * x.ln()).exp()
}

/// `1/((-x/q; q)_inf (-q^2/x; q)_inf)`, which is the base weight shifted one
/// grid step: `w(x/q)`.
fn wsw_shift(x: f64, ctx: &QContext) -> QResult<f64> {
    sw_orthogonality_weight(x / ctx.q, ctx)
}

// -------------------------------------------------------------------------
// big q-Laguerre
// -------------------------------------------------------------------------

fn ab(p: &Params) -> QResult<(f64, f64)> {
    Ok((p.get("a")?, p.get("b")?))
}

fn build_bigqlag_254(p: &Params, ctx: &QContext) -> QResult<IdentityInstance> {
    let n = p.get_usize("n")? as u32;
    let (a, b) = ab(p)?;
    let c = *ctx;
    let lhs = ev(move |x| {
        Ok(bigqlag(n, a, b, x, &c)? * poch_inf(re(x / b), &c)? * poch_inf(re(x / a), &c)?
            / poch_inf(re(x), &c)?)
    });
    let rhs = ev(move |x| {
        let q = c.q;
        let pref = a * b * q * q * (1.0 - q) / ((1.0 - a * q) * (1.0 - b * q));
        Ok(bigqlag(n - 1, a * q, b * q, x, &c)?
            * poch_inf(re(x / (b * q)), &c)?
            * poch_inf(re(x / (a * q)), &c)?
            / poch_inf(re(x), &c)?
            * pref)
    });
    Ok(IdentityInstance { lhs_integrand: lhs, rhs, nh_integrand: None })
}

fn build_bigqlag_desf2gd(p: &Params, ctx: &QContext) -> QResult<IdentityInstance> {
    let n = p.get_usize("n")? as u32;
    let (a, b) = ab(p)?;
    let c = *ctx;
    let lhs = ev(move |x| {
        let q = c.q;
        let bracket = qn(n as f64 - 1.0, &c) / (x * x)
            - (a + b - q * a * b) / (a * b * q * x * (1.0 - q) * (1.0 - x));
        Ok(bigqlag(n, a, b, x, &c)?
            * poch_inf(re(x / b), &c)?
            * poch_inf(re(x / a), &c)?
            / poch_inf(re(q * x), &c)?
            * (x.powi(n as i32) * bracket))
    });
    let rhs = ev(move |x| {
        let q = c.q;
        let inner = bigqlag(n, a, b, x / q, &c)? * (q.powi(n as i32) / x)
            - bigqlag(n - 1, a * q, b * q, x, &c)? / ((1.0 - a * q) * (1.0 - b * q));
        Ok(inner
            * poch_inf(re(x / (b * q)), &c)?
            * poch_inf(re(x / (a * q)), &c)?
            / poch_inf(re(x), &c)?
            * (q.powi(-(n as i32)) * x.powi(n as i32)))
    });
    Ok(IdentityInstance { lhs_integrand: lhs, rhs, nh_integrand: None })
}

fn build_bigqlag_a1(p: &Params, ctx: &QContext) -> QResult<IdentityInstance> {
    let n = p.get_usize("n")? as u32;
    let b = p.get("b")?;
    let c = *ctx;
    let lhs = ev(move |x| Ok(bigqlag(n, 1.0, b, x, &c)? * poch_inf(re(x / b), &c)?));
    let rhs = ev(move |x| {
        let q = c.q;
        Ok(bigqlag(n - 1, q, b * q, x, &c)?
            * poch_inf(re(x / (b * q)), &c)?
            * (b * q * q / (1.0 - b * q) * (1.0 - x / q)))
    });
    Ok(IdentityInstance { lhs_integrand: lhs, rhs, nh_integrand: None })
}

fn build_bigqlag_product(p: &Params, ctx: &QContext) -> QResult<IdentityInstance> {
    let n = p.get_usize("n")? as u32;
    let m = p.get_usize("m")? as u32;
    let (a, b) = ab(p)?;
    let c = *ctx;
    let lhs = ev(move |x| {
        let q = c.q;
        let pref = q.powi(-(m as i32)) * qn(m as f64, &c) - q.powi(-(n as i32)) * qn(n as f64, &c);
        Ok(bigqlag(m, a, b, x, &c)? * bigqlag(n, a, b, x, &c)?
            * poch_inf(re(x / b), &c)?
            * poch_inf(re(x / a), &c)?
            / poch_inf(re(x), &c)?
            * pref)
    });
    let rhs = ev(move |x| {
        let q = c.q;
        let pref = a * b * q * q * (1.0 - q) / ((1.0 - a * q) * (1.0 - b * q));
        let inner = bigqlag(m - 1, a * q, b * q, x, &c)? * bigqlag(n, a, b, x / q, &c)?
            * (q.powi(-(m as i32)) * qn(m as f64, &c))
            - bigqlag(m, a, b, x / q, &c)? * bigqlag(n - 1, a * q, b * q, x, &c)?
                * (q.powi(-(n as i32)) * qn(n as f64, &c));
        Ok(inner
            * poch_inf(re(x / (b * q)), &c)?
            * poch_inf(re(x / (a * q)), &c)?
            / poch_inf(re(x), &c)?
            * pref)
    });
    Ok(IdentityInstance { lhs_integrand: lhs, rhs, nh_integrand: None })
}

// -------------------------------------------------------------------------
// q-Laguerre
// -------------------------------------------------------------------------

fn build_qlag_214dsbg(p: &Params, ctx: &QContext) -> QResult<IdentityInstance> {
    let n = p.get_usize("n")? as u32;
    let alpha = p.get("alpha")?;
    let m = p.get("m")?;
    let c = *ctx;
    let lhs = ev(move |x| {
        let q = c.q;
        let bracket = (1.0 - q.powf(m + alpha)) * qn(m, &c) / x
            + q.powf(m + alpha) * (qn(n as f64, &c) - qn(m, &c));
        Ok(qlag(n, alpha, x, &c)? / poch_inf(re(-x), &c)? * (x.powf(m + alpha) * bracket))
    });
    let rhs = ev(move |x| {
        let q = c.q;
        let inner = qlag(n, alpha, x / q, &c)? * ((1.0 - q.powf(m)) / x)
            + qlag(n - 1, alpha + 1.0, x, &c)? * q.powf(alpha);
        Ok(inner / poch_inf(re(-x), &c)? * x.powf(m + alpha + 1.0))
    });
    Ok(IdentityInstance { lhs_integrand: lhs, rhs, nh_integrand: None })
}

fn build_qlag_5548(p: &Params, ctx: &QContext) -> QResult<IdentityInstance> {
    let n = p.get_usize("n")? as u32;
    let alpha = p.get("alpha")?;
    let c = *ctx;
    let lhs = ev(move |x| {
        let q = c.q;
        let factor = 1.0 - q.powi(n as i32);
        Ok(qlag(n, alpha, x, &c)?
            * poch_inf(re(q.powf(alpha + 2.0) * factor * x), &c)?
            / poch_inf(re(-q * x), &c)?
            * x.powf(alpha))
    });
    let rhs = ev(move |x| {
        let q = c.q;
        let factor = 1.0 - q.powi(n as i32);
        let inner = qlag(n - 1, alpha + 1.0, x, &c)?
            * ((1.0 - q.powf(alpha) * factor * x) / qn(n as f64, &c))
            - qlag(n, alpha, x / q, &c)? * (1.0 - q);
        Ok(inner
            * poch_inf(re(q.powf(alpha + 1.0) * factor * x), &c)?
            / poch_inf(re(-x), &c)?
            * (x.powf(alpha + 1.0) * q.powf(-alpha - 1.0)))
    });
    Ok(IdentityInstance { lhs_integrand: lhs, rhs, nh_integrand: None })
}

fn build_qlag_jnhb(p: &Params, ctx: &QContext) -> QResult<IdentityInstance> {
    let n = p.get_usize("n")? as u32;
    let alpha = p.get("alpha")?;
    let c = *ctx;
    let mu = mu_exponent(n, ctx.q);
    let lhs = ev(move |x| {
        let q = c.q;
        let bracket = q * qn(mu - 1.0, &c) + qn(alpha + 1.0, &c) / (q.powf(alpha) * (1.0 + x));
        Ok(qlag(n, alpha, x, &c)? / poch_inf(re(-q * x), &c)? * (x.powf(alpha + mu - 1.0) * bracket))
    });
    let rhs = ev(move |x| {
        let q = c.q;
        let inner = qlag(n, alpha, x / q, &c)? / (q.powf(alpha) * x)
            + qlag(n - 1, alpha + 1.0, x, &c)? / (1.0 - q.powf(mu));
        Ok(inner / poch_inf(re(-x), &c)? * x.powf(alpha + mu + 1.0))
    });
    Ok(IdentityInstance { lhs_integrand: lhs, rhs, nh_integrand: None })
}

fn build_qlag_m0(p: &Params, ctx: &QContext) -> QResult<IdentityInstance> {
    let n = p.get_usize("n")? as u32;
    let alpha = p.get("alpha")?;
    let c = *ctx;
    let lhs = ev(move |x| Ok(qlag(n, alpha, x, &c)? / poch_inf(re(-x), &c)? * x.powf(alpha)));
    let rhs = ev(move |x| {
        Ok(qlag(n - 1, alpha + 1.0, x, &c)? / poch_inf(re(-x), &c)?
            * (x.powf(alpha + 1.0) / qn(n as f64, &c)))
    });
    Ok(IdentityInstance { lhs_integrand: lhs, rhs, nh_integrand: None })
}

fn build_qlag_n1(p: &Params, ctx: &QContext) -> QResult<IdentityInstance> {
    let alpha = p.get("alpha")?;
    let c = *ctx;
    let lhs = ev(move |x| {
        let q = c.q;
        Ok(poch_inf(re(-x), &c)?.inv() * (x.powf(alpha) * (1.0 - q.powf(alpha + 1.0) * (1.0 + x))))
    });
    let rhs = ev(move |x| {
        Ok(poch_inf(re(-x), &c)?.inv() * (x.powf(alpha + 1.0) * (1.0 - c.q)))
    });
    Ok(IdentityInstance { lhs_integrand: lhs, rhs, nh_integrand: None })
}

fn build_qlag_product(p: &Params, ctx: &QContext) -> QResult<IdentityInstance> {
    let n = p.get_usize("n")? as u32;
    let m = p.get_usize("m")? as u32;
    let alpha = p.get("alpha")?;
    let c = *ctx;
    let lhs = ev(move |x| {
        Ok(qlag(n, alpha, x, &c)? * qlag(m, alpha, x, &c)? / poch_inf(re(-x), &c)?
            * (x.powf(alpha) * (qn(n as f64, &c) - qn(m as f64, &c))))
    });
    let rhs = ev(move |x| {
        let q = c.q;
        let inner = qlag(m, alpha, x / q, &c)? * qlag(n - 1, alpha + 1.0, x, &c)?
            - qlag(m - 1, alpha + 1.0, x, &c)? * qlag(n, alpha, x / q, &c)?;
        Ok(inner / poch_inf(re(-x), &c)? * x.powf(alpha + 1.0))
    });
    Ok(IdentityInstance { lhs_integrand: lhs, rhs, nh_integrand: None })
}

// -------------------------------------------------------------------------
// Stieltjes-Wigert, log-normal weight
// -------------------------------------------------------------------------

fn build_sw_sum3(p: &Params, ctx: &QContext) -> QResult<IdentityInstance> {
    let n = p.get_usize("n")? as u32;
    let c = *ctx;
    let lhs = ev(move |x| Ok(sw(n, x, &c)? * (x.powf(-0.5) * elog(x, &c))));
    let rhs = ev(move |x| {
        let q = c.q;
        Ok(sw(n - 1, q * x, &c)?
            * (x.powf(1.5) * elog(x / q, &c) / (q.sqrt() * qn(n as f64, &c))))
    });
    Ok(IdentityInstance { lhs_integrand: lhs, rhs, nh_integrand: None })
}

fn build_sw_214gg(p: &Params, ctx: &QContext) -> QResult<IdentityInstance> {
    let n = p.get_usize("n")? as u32;
    let m = p.get("m")?;
    let c = *ctx;
    let lhs = ev(move |x| {
        let q = c.q;
        let bracket = q.powf(2.0 * m) * qn(n as f64 - m, &c) + qn(m, &c) / x;
        Ok(sw(n, x, &c)? * (x.powf(m - 0.5) * elog(x, &c) * bracket))
    });
    let rhs = ev(move |x| {
        let q = c.q;
        let inner = sw(n, x / q, &c)? * ((1.0 - q.powf(m)) / x) + sw(n - 1, q * x, &c)?;
        Ok(inner * (q.powf(-0.5) * x.powf(m + 1.5) * elog(x / q, &c)))
    });
    Ok(IdentityInstance { lhs_integrand: lhs, rhs, nh_integrand: None })
}

fn build_sw_lak(p: &Params, ctx: &QContext) -> QResult<IdentityInstance> {
    let n = p.get_usize("n")? as u32;
    let c = *ctx;
    let lhs = ev(move |x| {
        let q = c.q;
        let bracket = -q.powi(n as i32 - 1) + (1.0 + q.powi(n as i32)) * x;
        Ok(sw(n, x, &c)? * poch_inf(re(q * q * x), &c)? * (x.powf(-0.5) * elog(x, &c) * bracket))
    });
    let rhs = ev(move |x| {
        let q = c.q;
        let inner = sw(n - 1, q * x, &c)? * ((1.0 - q) * (1.0 - x)) - sw(n, x / q, &c)? * (1.0 - q);
        Ok(inner * poch_inf(re(q * x), &c)? * (q.powf(-1.5) * x.powf(1.5) * elog(x / q, &c)))
    });
    Ok(IdentityInstance { lhs_integrand: lhs, rhs, nh_integrand: None })
}

fn build_sw_214fgdg(p: &Params, ctx: &QContext) -> QResult<IdentityInstance> {
    let n = p.get_usize("n")? as u32;
    let c = *ctx;
    let lhs = ev(move |x| {
        let q = c.q;
        Ok(sw(n, x, &c)?
            * poch_inf(re(-q.powi(n as i32 + 2) * x), &c)?
            * (x.powf(-0.5) * elog(x, &c)))
    });
    let rhs = ev(move |x| {
        let q = c.q;
        let inner = sw(n - 1, q * x, &c)? * (1.0 + q.powi(n as i32) * x)
            + sw(n, x / q, &c)? * q.powi(n as i32);
        Ok(inner
            * poch_inf(re(-q.powi(n as i32 + 1) * x), &c)?
            * (q.powf(-0.5) * (1.0 - q) * x.powf(1.5) * elog(x / q, &c)))
    });
    Ok(IdentityInstance { lhs_integrand: lhs, rhs, nh_integrand: None })
}

fn build_sw_sum2(p: &Params, ctx: &QContext) -> QResult<IdentityInstance> {
    let n = p.get_usize("n")? as u32;
    let c = *ctx;
    let an = alpha_n_exponent(n, ctx.q);
    let lhs = ev(move |x| {
        let q = c.q;
        let bracket = qn(an - 1.0, &c) + 1.0 / (q * x * (1.0 - q));
        Ok(sw(n, x, &c)? * (x.powf(an - 0.5) * elog(x, &c) * bracket))
    });
    let rhs = ev(move |x| {
        let q = c.q;
        let inner = sw(n, x / q, &c)? / x + sw(n - 1, q * x, &c)? / (1.0 - q.powf(an));
        Ok(inner * (q.powf(-1.5) * x.powf(an + 1.5) * elog(x / q, &c)))
    });
    Ok(IdentityInstance { lhs_integrand: lhs, rhs, nh_integrand: None })
}

fn build_sw_product(p: &Params, ctx: &QContext) -> QResult<IdentityInstance> {
    let n = p.get_usize("n")? as u32;
    let m = p.get_usize("m")? as u32;
    let c = *ctx;
    let lhs = ev(move |x| {
        Ok(sw(m, x, &c)? * sw(n, x, &c)?
            * (x.powf(-0.5) * elog(x, &c) * (qn(n as f64, &c) - qn(m as f64, &c))))
    });
    let rhs = ev(move |x| {
        let q = c.q;
        let inner = sw(m, x / q, &c)? * sw(n - 1, q * x, &c)?
            - sw(m - 1, q * x, &c)? * sw(n, x / q, &c)?;
        Ok(inner * (q.powf(-0.5) * x.powf(1.5) * elog(x / q, &c)))
    });
    Ok(IdentityInstance { lhs_integrand: lhs, rhs, nh_integrand: None })
}

fn build_sw_example_mn(p: &Params, ctx: &QContext) -> QResult<IdentityInstance> {
    let n = p.get_usize("n")? as u32;
    let c = *ctx;
    let lhs = ev(move |x| Ok(sw(n, x, &c)? * (x.powf(n as f64 - 1.5) * elog(x, &c))));
    let rhs = ev(move |x| {
        let q = c.q;
        let inner =
            sw(n, x / q, &c)? * ((1.0 - q) / x) + sw(n - 1, q * x, &c)? / qn(n as f64, &c);
        Ok(inner * (q.powf(-0.5) * x.powf(n as f64 + 1.5) * elog(x / q, &c)))
    });
    Ok(IdentityInstance { lhs_integrand: lhs, rhs, nh_integrand: None })
}

fn build_sw_example_n1(_: &Params, ctx: &QContext) -> QResult<IdentityInstance> {
    let c = *ctx;
    let lhs = ev(move |x| {
        let q = c.q;
        Ok(poch_inf(re(q * q * x), &c)?
            * (x.powf(-0.5) * elog(x, &c) * (1.0 - (1.0 + q) * x) * (1.0 - q * x)))
    });
    let rhs = ev(move |x| {
        let q = c.q;
        Ok(poch_inf(re(x), &c)? * (q.powf(-0.5) * (1.0 - q) * x.powf(1.5) * elog(x / q, &c)))
    });
    Ok(IdentityInstance { lhs_integrand: lhs, rhs, nh_integrand: None })
}

/// Summation corollary: `sum_k q^{k(k+1)/2} a^k S_n(q^k a; q)
/// = S_{n-1}(q a; q) / (1 - q^n)`.
fn check_sw_sum(p: &Params, ctx: &QContext) -> QResult<f64> {
    let n = p.get_usize("n")? as u32;
    let a = p.get("a")?;
    let q = ctx.q;
    let mut total = C::new(0.0, 0.0);
    let mut small = 0usize;
    let mut converged = false;
    for k in 0..ctx.max_terms {
        let kf = k as f64;
        let term = sw(n, q.powi(k as i32) * a, ctx)? * (q.powf(kf * (kf + 1.0) / 2.0) * a.powi(k as i32));
        total += term;
        if term.norm() <= ctx.term_tol * total.norm().max(1.0) {
            small += 1;
            if small >= ctx.consecutive_small {
                converged = true;
                break;
            }
        } else {
            small = 0;
        }
    }
    if !converged {
        return Err(QError::NoConvergence { what: "sw summation corollary", terms: ctx.max_terms });
    }
    let closed = sw(n - 1, q * a, ctx)? / (1.0 - q.powi(n as i32));
    Ok((total - closed).norm() / closed.norm().max(1.0))
}

// -------------------------------------------------------------------------
// Stieltjes-Wigert, product weight
// -------------------------------------------------------------------------

fn build_sw2_214dd(p: &Params, ctx: &QContext) -> QResult<IdentityInstance> {
    let n = p.get_usize("n")? as u32;
    let m = p.get("m")?;
    let c = *ctx;
    let lhs = ev(move |x| {
        let q = c.q;
        let bracket = q.powf(2.0 * m) * qn(n as f64 - m, &c) + qn(m, &c) / x;
        Ok(sw(n, x, &c)? * (x.powf(m) * sw_orthogonality_weight(x, &c)? * bracket))
    });
    let rhs = ev(move |x| {
        let q = c.q;
        let inner = sw(n, x / q, &c)? * ((1.0 - q.powf(m)) / x) + sw(n - 1, q * x, &c)?;
        Ok(inner * (x.powf(m + 2.0) / q * wsw_shift(x, &c)?))
    });
    Ok(IdentityInstance { lhs_integrand: lhs, rhs, nh_integrand: None })
}

fn build_sw2_lak2(p: &Params, ctx: &QContext) -> QResult<IdentityInstance> {
    let n = p.get_usize("n")? as u32;
    let c = *ctx;
    let lhs = ev(move |x| {
        let q = c.q;
        let bracket = -q.powi(n as i32 - 1) + (1.0 + q.powi(n as i32)) * x;
        Ok(sw(n, x, &c)?
            * poch_inf(re(q * q * x), &c)?
            * (sw_orthogonality_weight(x, &c)? * bracket))
    });
    let rhs = ev(move |x| {
        let q = c.q;
        let inner = sw(n - 1, q * x, &c)? * (1.0 - x) - sw(n, x / q, &c)?;
        Ok(inner
            * poch_inf(re(q * x), &c)?
            * ((1.0 - q) * x * x / (q * q) * wsw_shift(x, &c)?))
    });
    Ok(IdentityInstance { lhs_integrand: lhs, rhs, nh_integrand: None })
}

fn build_sw2_hgfsbff(p: &Params, ctx: &QContext) -> QResult<IdentityInstance> {
    let n = p.get_usize("n")? as u32;
    let c = *ctx;
    let lhs = ev(move |x| {
        let q = c.q;
        Ok(sw(n, x, &c)?
            * poch_inf(re(-q.powi(n as i32 + 2) * x), &c)?
            * sw_orthogonality_weight(x, &c)?)
    });
    let rhs = ev(move |x| {
        let q = c.q;
        let inner = sw(n - 1, q * x, &c)? * (1.0 + q.powi(n as i32) * x)
            + sw(n, x / q, &c)? * q.powi(n as i32);
        Ok(inner
            * poch_inf(re(-q.powi(n as i32 + 1) * x), &c)?
            * ((1.0 - q) * x * x / q * wsw_shift(x, &c)?))
    });
    Ok(IdentityInstance { lhs_integrand: lhs, rhs, nh_integrand: None })
}

fn build_sw2_gbdffss(p: &Params, ctx: &QContext) -> QResult<IdentityInstance> {
    let n = p.get_usize("n")? as u32;
    let c = *ctx;
    let an = alpha_n_exponent(n, ctx.q);
    let lhs = ev(move |x| {
        let q = c.q;
        let bracket = qn(an - 1.0, &c) + 1.0 / (q * x * (1.0 - q));
        Ok(sw(n, x, &c)? * (x.powf(an) * sw_orthogonality_weight(x, &c)? * bracket))
    });
    let rhs = ev(move |x| {
        let q = c.q;
        let inner = sw(n, x / q, &c)? / x + sw(n - 1, q * x, &c)? / (1.0 - q.powf(an));
        Ok(inner * (x.powf(an + 2.0) / (q * q) * wsw_shift(x, &c)?))
    });
    Ok(IdentityInstance { lhs_integrand: lhs, rhs, nh_integrand: None })
}

fn build_sw2_m0(p: &Params, ctx: &QContext) -> QResult<IdentityInstance> {
    let n = p.get_usize("n")? as u32;
    let c = *ctx;
    let lhs = ev(move |x| Ok(sw(n, x, &c)? * sw_orthogonality_weight(x, &c)?));
    let rhs = ev(move |x| {
        let q = c.q;
        Ok(sw(n - 1, q * x, &c)? * (x * x / (q * qn(n as f64, &c)) * wsw_shift(x, &c)?))
    });
    Ok(IdentityInstance { lhs_integrand: lhs, rhs, nh_integrand: None })
}

fn build_sw2_nm(p: &Params, ctx: &QContext) -> QResult<IdentityInstance> {
    let n = p.get_usize("n")? as u32;
    let c = *ctx;
    let lhs =
        ev(move |x| Ok(sw(n, x, &c)? * (x.powi(n as i32 - 1) * sw_orthogonality_weight(x, &c)?)));
    let rhs = ev(move |x| {
        let q = c.q;
        let inner =
            sw(n, x / q, &c)? * ((1.0 - q) / x) + sw(n - 1, q * x, &c)? / qn(n as f64, &c);
        Ok(inner * (x.powi(n as i32 + 2) / q * wsw_shift(x, &c)?))
    });
    Ok(IdentityInstance { lhs_integrand: lhs, rhs, nh_integrand: None })
}

fn build_sw2_n1(_: &Params, ctx: &QContext) -> QResult<IdentityInstance> {
    let c = *ctx;
    let lhs = ev(move |x| {
        let q = c.q;
        Ok(poch_inf(re(q * q * x), &c)?
            * (sw_orthogonality_weight(x, &c)? * (1.0 - x - q * x) * (1.0 - q * x)))
    });
    let rhs = ev(move |x| {
        let q = c.q;
        Ok(poch_inf(re(x), &c)? * ((1.0 - q) * x * x / q * wsw_shift(x, &c)?))
    });
    Ok(IdentityInstance { lhs_integrand: lhs, rhs, nh_integrand: None })
}

/// Improper Riemann orthogonality `int_0^inf w S_m S_n dx = 0` for `m != n`.
fn check_sw2_orthogonality(p: &Params, ctx: &QContext) -> QResult<f64> {
    let n = p.get_usize("n")? as u32;
    let m = p.get_usize("m")? as u32;
    let c = *ctx;
    let f = move |x: f64| -> QResult<f64> {
        Ok((sw(m, x, &c)? * sw(n, x, &c)?).re * sw_orthogonality_weight(x, &c)?)
    };
    let v = improper_riemann(&f, &QuadPolicy::default())?;
    Ok(v.abs())
}

// -------------------------------------------------------------------------
// discrete q-Hermite I / II
// -------------------------------------------------------------------------

fn wh1(x: f64, ctx: &QContext) -> QResult<C> {
    let q = ctx.q;
    poch_inf(re(q * q * x * x), &ctx.base_sq())
}

fn wh1_shift(x: f64, ctx: &QContext) -> QResult<C> {
    poch_inf(re(x * x), &ctx.base_sq())
}

fn build_h1_214dddfc(p: &Params, ctx: &QContext) -> QResult<IdentityInstance> {
    let n = p.get_usize("n")? as u32;
    let m = p.get("m")?;
    let c = *ctx;
    let lhs = ev(move |x| {
        let q = c.q;
        let bracket = qn(m, &c) * qn(m - 1.0, &c) / (x * x) - qn(m - n as f64, &c) / (1.0 - q);
        Ok(herm1(n, x, &c)? * wh1(x, &c)? * (x.powf(m) * bracket))
    });
    let rhs = ev(move |x| {
        let q = c.q;
        let inner = herm1(n, x / q, &c)? * (qn(m, &c) / x)
            - herm1(n - 1, x / q, &c)? * (qn(n as f64, &c) / q);
        Ok(inner * wh1_shift(x, &c)? * x.powf(m))
    });
    Ok(IdentityInstance { lhs_integrand: lhs, rhs, nh_integrand: None })
}

fn build_h1_214587(p: &Params, ctx: &QContext) -> QResult<IdentityInstance> {
    let n = p.get_usize("n")? as u32;
    if n < 2 {
        return Err(QError::Domain("violates n >= 2 (the m = n instance needs [n-1] != 0)".into()));
    }
    let c = *ctx;
    let lhs = ev(move |x| Ok(herm1(n, x, &c)? * wh1(x, &c)? * x.powi(n as i32 - 2)));
    let rhs = ev(move |x| {
        let q = c.q;
        let inner = herm1(n, x / q, &c)? / x - herm1(n - 1, x / q, &c)? / q;
        Ok(inner * wh1_shift(x, &c)? * (x.powi(n as i32) / qn(n as f64 - 1.0, &c)))
    });
    Ok(IdentityInstance { lhs_integrand: lhs, rhs, nh_integrand: None })
}

/// Definite symmetric integral `int_{-1}^{1} x^{n-2} (q^2 x^2; q^2)_inf
/// h_n(x;q) d_q x = 0` (the antiderivative's `(x^2; q^2)_inf` factor
/// vanishes at both endpoints).
fn check_h1_definite(p: &Params, ctx: &QContext) -> QResult<f64> {
    let n = p.get_usize("n")? as u32;
    if n < 2 {
        return Err(QError::Domain("violates n >= 2".into()));
    }
    let c = *ctx;
    let f = move |x: f64| -> QResult<C> {
        Ok(herm1(n, x, &c)? * wh1(x, &c)? * x.powi(n as i32 - 2))
    };
    Ok(jackson_integral_interval(&f, -1.0, 1.0, ctx)?.norm())
}

fn build_h1_product(p: &Params, ctx: &QContext) -> QResult<IdentityInstance> {
    let n = p.get_usize("n")? as u32;
    let m = p.get_usize("m")? as u32;
    let c = *ctx;
    let lhs = ev(move |x| {
        let q = c.q;
        let pref = q.powi(-(n as i32)) * qn(n as f64, &c) - q.powi(-(m as i32)) * qn(m as f64, &c);
        Ok(herm1(n, x, &c)? * herm1(m, x, &c)? * wh1(x, &c)? * pref)
    });
    let rhs = ev(move |x| {
        let q = c.q;
        let inner = herm1(m - 1, x / q, &c)? * herm1(n, x / q, &c)? * (1.0 - q.powi(m as i32))
            - herm1(n - 1, x / q, &c)? * herm1(m, x / q, &c)? * (1.0 - q.powi(n as i32));
        Ok(inner * wh1_shift(x, &c)? / q)
    });
    Ok(IdentityInstance { lhs_integrand: lhs, rhs, nh_integrand: None })
}

fn wh2(x: f64, ctx: &QContext) -> QResult<C> {
    Ok(poch_inf(re(-x * x), &ctx.base_sq())?.inv())
}

fn build_h2_2584(p: &Params, ctx: &QContext) -> QResult<IdentityInstance> {
    let n = p.get_usize("n")? as u32;
    let c = *ctx;
    let lhs = ev(move |x| Ok(herm2(n, x, &c)? * wh2(x, &c)?));
    let rhs = ev(move |x| {
        let q = c.q;
        Ok(herm2(n - 1, x, &c)? * wh2(x, &c)? * (-q.powi(1 - n as i32) * (1.0 - q)))
    });
    Ok(IdentityInstance { lhs_integrand: lhs, rhs, nh_integrand: None })
}

fn build_h2_hbgddvsfa(p: &Params, ctx: &QContext) -> QResult<IdentityInstance> {
    let n = p.get_usize("n")? as u32;
    let m = p.get("m")?;
    let c = *ctx;
    let lhs = ev(move |x| {
        let q = c.q;
        let bracket = qn(m, &c) * qn(m - 1.0, &c) / (x * x)
            + q.powf(2.0 * m - 1.0) * qn(n as f64 - m, &c) / (1.0 - q);
        Ok(herm2(n, x, &c)? * wh2(x, &c)? * (x.powf(m) * bracket))
    });
    let rhs = ev(move |x| {
        let q = c.q;
        let inner = herm2(n, x, &c)? * (qn(m, &c) / x)
            - herm2(n - 1, x, &c)? * (q.powf(m - n as f64) * qn(n as f64, &c));
        Ok(inner * wh2(x, &c)? * x.powf(m))
    });
    Ok(IdentityInstance { lhs_integrand: lhs, rhs, nh_integrand: None })
}

/// Symmetric definite integral of `h2_n(x;q)/(-x^2;q^2)_inf` over `[-c, c]`:
/// zero for odd `n`, and `-2 q^{1-n} (1-q) h2_{n-1}(c;q)/(-c^2;q^2)_inf`
/// for even `n`.
fn check_h2_definite(p: &Params, ctx: &QContext) -> QResult<f64> {
    let n = p.get_usize("n")? as u32;
    let cc = p.get("c")?;
    let c = *ctx;
    let f = move |x: f64| -> QResult<C> { Ok(herm2(n, x, &c)? * wh2(x, &c)?) };
    let integral = jackson_integral_interval(&f, -cc, cc, ctx)?;
    if n % 2 == 1 {
        Ok(integral.norm())
    } else {
        let q = ctx.q;
        let expect = herm2(n - 1, cc, ctx)? * wh2(cc, ctx)? * (-2.0 * q.powi(1 - n as i32) * (1.0 - q));
        Ok((integral - expect).norm() / expect.norm().max(1.0))
    }
}

fn build_h2_product(p: &Params, ctx: &QContext) -> QResult<IdentityInstance> {
    let n = p.get_usize("n")? as u32;
    let m = p.get_usize("m")? as u32;
    let c = *ctx;
    let lhs = ev(move |x| {
        Ok(herm2(n, x, &c)? * herm2(m, x, &c)? * wh2(x, &c)?
            * (qn(n as f64, &c) - qn(m as f64, &c)))
    });
    let rhs = ev(move |x| {
        let q = c.q;
        let inner = herm2(m - 1, x, &c)? * herm2(n, x, &c)?
            * (q.powi(-(m as i32)) * (1.0 - q.powi(m as i32)))
            - herm2(n - 1, x, &c)? * herm2(m, x, &c)?
                * (q.powi(-(n as i32)) * (1.0 - q.powi(n as i32)));
        Ok(inner * wh2(x, &c)? * q)
    });
    Ok(IdentityInstance { lhs_integrand: lhs, rhs, nh_integrand: None })
}

// -------------------------------------------------------------------------
// Airy-type series in base sqrt(q)
// -------------------------------------------------------------------------

fn wai(x: f64, ctx: &QContext) -> QResult<C> {
    let q = ctx.q;
    Ok(poch_inf(re(q.powf(-0.5) * x * x), &ctx.base_sq())?.inv())
}

fn build_sqrtq_airy_25844(_: &Params, ctx: &QContext) -> QResult<IdentityInstance> {
    let c = *ctx;
    let lhs = ev(move |x| Ok(airy_s(x, &c)? * wai(x, &c)?));
    let rhs = ev(move |x| {
        let q = c.q;
        let da = d_q_inverse(&|t| airy_s(t, &c), x, &c)?;
        Ok(da * wai(x, &c)? * (q.sqrt() * (1.0 - q) * (1.0 - q)))
    });
    Ok(IdentityInstance { lhs_integrand: lhs, rhs, nh_integrand: None })
}

fn build_sqrtq_airy_kmjnh(p: &Params, ctx: &QContext) -> QResult<IdentityInstance> {
    let m = p.get("m")?;
    let c = *ctx;
    let lhs = ev(move |x| {
        let q = c.q;
        let bracket =
            qn(m, &c) * qn(m - 1.0, &c) / (x * x) - q.powf(2.0 * m - 1.5) / ((1.0 - q) * (1.0 - q));
        Ok(airy_s(x, &c)? * wai(x, &c)? * (x.powf(m) * bracket))
    });
    let rhs = ev(move |x| {
        let q = c.q;
        let da = d_q_inverse(&|t| airy_s(t, &c), x, &c)?;
        Ok((airy_s(x, &c)? * (qn(m, &c) / x) - da * q.powf(m - 1.0)) * wai(x, &c)? * x.powf(m))
    });
    Ok(IdentityInstance { lhs_integrand: lhs, rhs, nh_integrand: None })
}

// -------------------------------------------------------------------------
// little and big q-Legendre integrals
// -------------------------------------------------------------------------

fn build_littleleg(p: &Params, ctx: &QContext) -> QResult<IdentityInstance> {
    let n = p.get_usize("n")? as u32;
    let c = *ctx;
    let lhs = ev(move |x| littleleg(n, x, &c));
    let rhs = ev(move |x| {
        let q = c.q;
        let ph = phi(
            &[re(q.powi(1 - n as i32)), re(q.powi(n as i32 + 2))],
            &[re(q * q)],
            re(x),
            &c,
        )?;
        Ok(ph * (x * (1.0 - x)))
    });
    Ok(IdentityInstance { lhs_integrand: lhs, rhs, nh_integrand: None })
}

fn build_bigleg(p: &Params, ctx: &QContext) -> QResult<IdentityInstance> {
    let n = p.get_usize("n")? as u32;
    let cc = p.get("c")?;
    let c = *ctx;
    let lhs = ev(move |x| bigleg(n, cc, x, &c));
    let rhs = ev(move |x| {
        let q = c.q;
        let dp = d_q_inverse(&|t| bigleg(n, cc, t, &c), x, &c)?;
        Ok(dp * (q.powi(n as i32 - 1) * (q - x) * (cc * q - x)
            / (qn(n as f64, &c) * qn(n as f64 + 1.0, &c))))
    });
    Ok(IdentityInstance { lhs_integrand: lhs, rhs, nh_integrand: None })
}

// -------------------------------------------------------------------------
// registry
// -------------------------------------------------------------------------

const P_A: ParamSpec = ParamSpec { name: "a", domain: Domain::Real { lo: 0.2, hi: 0.8 } };
const P_B: ParamSpec = ParamSpec { name: "b", domain: Domain::Real { lo: 0.2, hi: 0.8 } };
const P_ALPHA: ParamSpec = ParamSpec { name: "alpha", domain: Domain::Real { lo: -0.5, hi: 1.5 } };
const P_M_HI: ParamSpec = ParamSpec { name: "m", domain: Domain::Int { lo: 2, hi: 3 } };
const P_N_LO: ParamSpec = ParamSpec { name: "n", domain: Domain::Int { lo: 0, hi: 1 } };
const P_M_POLY: ParamSpec = ParamSpec { name: "m", domain: Domain::Real { lo: 1.2, hi: 2.5 } };
const P_N_HI: ParamSpec = ParamSpec { name: "n", domain: Domain::Int { lo: 2, hi: 4 } };
const P_M_ONE: ParamSpec = ParamSpec { name: "m", domain: Domain::Int { lo: 1, hi: 1 } };
const P_N_25: ParamSpec = ParamSpec { name: "n", domain: Domain::Int { lo: 2, hi: 5 } };
const P_C_LEG: ParamSpec = ParamSpec { name: "c", domain: Domain::Real { lo: 1.2, hi: 2.0 } };
const P_C_H2: ParamSpec = ParamSpec { name: "c", domain: Domain::Real { lo: 0.5, hi: 1.5 } };
const P_A_SUM: ParamSpec = ParamSpec { name: "a", domain: Domain::Real { lo: 0.3, hi: 1.2 } };

pub(super) fn register(v: &mut Vec<IdentityRecord>) {

    v.push(IdentityRecord {
        id: "thm-bigqlag-eq-254",
        anchor: "int (x/b, x/a;q)_inf/(x;q)_inf p_n(x;a,b;q) d_q x \
                 = a b q^2 (1-q)/((1-aq)(1-bq)) (x/(bq), x/(aq);q)_inf/(x;q)_inf p_(n-1)(x;aq,bq;q)",
        params: &[P_N, P_A, P_B],
        tolerance: 1e-9,
        strategies: DQ_SUM,
        q_domain: FULL_Q,
        check: Check::Indefinite { build: build_bigqlag_254, x_range: x_default },
    });
    v.push(IdentityRecord {
        id: "thm-bigqlag-eq-desf2gd",
        anchor: "power-kernel companion with h = x^n for the big q-Laguerre weight",
        params: &[P_N, P_A, P_B],
        tolerance: 1e-8,
        strategies: DQ_SUM,
        q_domain: FULL_Q,
        check: Check::Indefinite { build: build_bigqlag_desf2gd, x_range: x_default },
    });
    v.push(IdentityRecord {
        id: "example-bigqlag-a1",
        anchor: "a = 1 instance: int (x/b;q)_inf p_n(x;1,b;q) d_q x \
                 = b q^2/(1-bq) (1 - x/q)(x/(bq);q)_inf p_(n-1)(x;q,bq;q)",
        params: &[P_N, P_B],
        tolerance: 1e-9,
        strategies: DQ_SUM,
        q_domain: FULL_Q,
        check: Check::Indefinite { build: build_bigqlag_a1, x_range: x_default },
    });
    v.push(IdentityRecord {
        id: "prop-bigqlag-product",
        anchor: "(q^-m[m] - q^-n[n]) int w p_m p_n d_q x in Wronskian form",
        params: &[P_N_HI, P_M_ONE, P_A, P_B],
        tolerance: 1e-8,
        strategies: DQ_SUM,
        q_domain: FULL_Q,
        check: Check::Indefinite { build: build_bigqlag_product, x_range: x_default },
    });
    v.push(IdentityRecord {
        id: "thm-qlag-eq-214dsbg",
        anchor: "int x^(m+alpha)/(-x;q)_inf ((1-q^(m+alpha))[m]/x + q^(m+alpha)([n]-[m])) \
                 L_n^alpha d_q x = x^(m+alpha+1)/(-x;q)_inf ((1-q^m)/x L_n^alpha(x/q) \
                 + q^alpha L_(n-1)^(alpha+1)(x))",
        params: &[P_N, P_ALPHA, P_M_REAL],
        tolerance: 1e-8,
        strategies: DQ_SUM,
        q_domain: FULL_Q,
        check: Check::Indefinite { build: build_qlag_214dsbg, x_range: x_default },
    });
    v.push(IdentityRecord {
        id: "thm-qlag-eq-5548",
        anchor: "product-kernel identity with h = (q^(alpha+1)(1-q^n) x; q)_inf",
        params: &[P_N, P_ALPHA],
        tolerance: 1e-8,
        strategies: DQ_SUM,
        q_domain: FULL_Q,
        check: Check::Indefinite { build: build_qlag_5548, x_range: x_default },
    });
    v.push(IdentityRecord {
        id: "thm-qlag-eq-jnhbvfddds",
        anchor: "int x^(alpha+mu-1)/(-qx;q)_inf (q[mu-1] + [alpha+1]/(q^alpha(1+x))) \
                 L_n^alpha d_q x = x^(alpha+mu+1)/(-x;q)_inf (L_n^alpha(x/q)/(q^alpha x) \
                 + L_(n-1)^(alpha+1)(x)/(1-q^mu)); q^(1-mu) = 1 + q - q^n",
        params: &[P_N, P_ALPHA],
        tolerance: 1e-8,
        strategies: DQ_SUM,
        q_domain: FULL_Q,
        check: Check::Indefinite { build: build_qlag_jnhb, x_range: x_default },
    });
    v.push(IdentityRecord {
        id: "remark-qlag-m0",
        anchor: "int x^alpha/(-x;q)_inf L_n^alpha d_q x \
                 = x^(alpha+1) L_(n-1)^(alpha+1)/([n] (-x;q)_inf)",
        params: &[P_N, P_ALPHA],
        tolerance: 1e-9,
        strategies: DQ_SUM,
        q_domain: FULL_Q,
        check: Check::Indefinite { build: build_qlag_m0, x_range: x_default },
    });
    v.push(IdentityRecord {
        id: "remark-qlag-n1",
        anchor: "int x^alpha (1 - q^(alpha+1)(1+x))/(-x;q)_inf d_q x \
                 = (1-q) x^(alpha+1)/(-x;q)_inf",
        params: &[P_ALPHA],
        tolerance: 1e-10,
        strategies: DQ_SUM,
        q_domain: FULL_Q,
        check: Check::Indefinite { build: build_qlag_n1, x_range: x_default },
    });
    v.push(IdentityRecord {
        id: "prop-qlag-product",
        anchor: "([n]-[m]) int x^alpha/(-x;q)_inf L_n L_m d_q x in Wronskian form",
        params: &[P_N_HI, P_M_ONE, P_ALPHA],
        tolerance: 1e-8,
        strategies: DQ_SUM,
        q_domain: FULL_Q,
        check: Check::Indefinite { build: build_qlag_product, x_range: x_default },
    });
    v.push(IdentityRecord {
        id: "thm-sw-eq-sum3",
        anchor: "int x^(-1/2) e^(c ln^2 x) S_n(x;q) d_q x \
                 = x^(3/2) e^(c ln^2(x/q)) S_(n-1)(qx;q)/(sqrt(q) [n]); c = 1/(2 ln q)",
        params: &[P_N],
        tolerance: 1e-9,
        strategies: DQ_SUM,
        q_domain: FULL_Q,
        check: Check::Indefinite { build: build_sw_sum3, x_range: x_default },
    });
    v.push(IdentityRecord {
        id: "thm-sw-eq-214gg",
        anchor: "power-kernel identity for the log-normal Stieltjes-Wigert weight",
        params: &[P_N, P_M_REAL],
        tolerance: 1e-8,
        strategies: DQ_SUM,
        q_domain: FULL_Q,
        check: Check::Indefinite { build: build_sw_214gg, x_range: x_default },
    });
    v.push(IdentityRecord {
        id: "thm-sw-eq-lak",
        anchor: "product-kernel identity with h = (qx;q)_inf, log-normal weight",
        params: &[P_N],
        tolerance: 1e-8,
        strategies: DQ_SUM,
        q_domain: FULL_Q,
        check: Check::Indefinite { build: build_sw_lak, x_range: x_default },
    });
    v.push(IdentityRecord {
        id: "thm-sw-eq-214fgdg",
        anchor: "product-kernel identity with h = (-q^(n+1) x;q)_inf, log-normal weight",
        params: &[P_N],
        tolerance: 1e-8,
        strategies: DQ_SUM,
        q_domain: FULL_Q,
        check: Check::Indefinite { build: build_sw_214fgdg, x_range: x_default },
    });
    v.push(IdentityRecord {
        id: "thm-sw-eq-sum2",
        anchor: "power-kernel identity with h = x^(alpha_n), log-normal weight; \
                 q^(1-alpha_n) = 1 + q - q^n",
        params: &[P_N],
        tolerance: 1e-8,
        strategies: DQ_SUM,
        q_domain: FULL_Q,
        check: Check::Indefinite { build: build_sw_sum2, x_range: x_default },
    });
    v.push(IdentityRecord {
        id: "prop-sw-product",
        anchor: "([n]-[m]) int x^(-1/2) e^(c ln^2 x) S_m S_n d_q x in Wronskian form",
        params: &[P_N_HI, P_M_ONE],
        tolerance: 1e-8,
        strategies: DQ_SUM,
        q_domain: FULL_Q,
        check: Check::Indefinite { build: build_sw_product, x_range: x_default },
    });
    v.push(IdentityRecord {
        id: "example-sw-mn",
        anchor: "m = n instance of the log-normal power-kernel identity",
        params: &[P_N],
        tolerance: 1e-8,
        strategies: DQ_SUM,
        q_domain: FULL_Q,
        check: Check::Indefinite { build: build_sw_example_mn, x_range: x_default },
    });
    v.push(IdentityRecord {
        id: "example-sw-n1",
        anchor: "n = 1 instance: int x^(-1/2) e^(c ln^2 x) (q^2 x;q)_inf (1-(1+q)x)(1-qx) d_q x \
                 = q^(-1/2)(1-q) x^(3/2) e^(c ln^2(x/q)) (x;q)_inf",
        params: &[],
        tolerance: 1e-9,
        strategies: DQ_SUM,
        q_domain: FULL_Q,
        check: Check::Indefinite { build: build_sw_example_n1, x_range: x_default },
    });
    v.push(IdentityRecord {
        id: "cor-sw-sum",
        anchor: "sum_k q^(k(k+1)/2) a^k S_n(q^k a;q) = S_(n-1)(qa;q)/(1-q^n)",
        params: &[P_N, P_A_SUM],
        tolerance: 1e-9,
        strategies: SUMMATION,
        q_domain: FULL_Q,
        check: Check::Custom(check_sw_sum),
    });
    v.push(IdentityRecord {
        id: "thm-sw2-eq-214dd",
        anchor: "power-kernel identity for the product Stieltjes-Wigert weight \
                 1/((-x,-q/x;q)_inf)",
        params: &[P_N, P_M_REAL],
        tolerance: 1e-8,
        strategies: DQ_SUM,
        q_domain: FULL_Q,
        check: Check::Indefinite { build: build_sw2_214dd, x_range: x_default },
    });
    v.push(IdentityRecord {
        id: "thm-sw2-eq-lak2",
        anchor: "product-kernel identity with h = (qx;q)_inf, product weight",
        params: &[P_N],
        tolerance: 1e-8,
        strategies: DQ_SUM,
        q_domain: FULL_Q,
        check: Check::Indefinite { build: build_sw2_lak2, x_range: x_default },
    });
    v.push(IdentityRecord {
        id: "thm-sw2-eq-hgfsbff",
        anchor: "product-kernel identity with h = (-q^(n+1)x;q)_inf, product weight",
        params: &[P_N],
        tolerance: 1e-8,
        strategies: DQ_SUM,
        q_domain: FULL_Q,
        check: Check::Indefinite { build: build_sw2_hgfsbff, x_range: x_default },
    });
    v.push(IdentityRecord {
        id: "thm-sw2-eq-gbdffss",
        anchor: "power-kernel identity with h = x^(alpha_n), product weight",
        params: &[P_N],
        tolerance: 1e-8,
        strategies: DQ_SUM,
        q_domain: FULL_Q,
        check: Check::Indefinite { build: build_sw2_gbdffss, x_range: x_default },
    });
    v.push(IdentityRecord {
        id: "remark-sw2-m0",
        anchor: "int S_n(x;q)/((-x,-q/x;q)_inf) d_q x \
                 = x^2 S_(n-1)(qx;q)/(q [n] (-x/q,-q^2/x;q)_inf)",
        params: &[P_N],
        tolerance: 1e-9,
        strategies: DQ_SUM,
        q_domain: FULL_Q,
        check: Check::Indefinite { build: build_sw2_m0, x_range: x_default },
    });
    v.push(IdentityRecord {
        id: "example-sw2-nm",
        anchor: "n = m instance of the product-weight power-kernel identity",
        params: &[P_N],
        tolerance: 1e-8,
        strategies: DQ_SUM,
        q_domain: FULL_Q,
        check: Check::Indefinite { build: build_sw2_nm, x_range: x_default },
    });
    v.push(IdentityRecord {
        id: "example-sw2-n1",
        anchor: "n = 1 instance of the product-weight (qx;q)_inf identity",
        params: &[],
        tolerance: 1e-9,
        strategies: DQ_SUM,
        q_domain: FULL_Q,
        check: Check::Indefinite { build: build_sw2_n1, x_range: x_default },
    });
    v.push(IdentityRecord {
        id: "cor-sw2-orthogonality",
        anchor: "int_0^inf S_m(x;q) S_n(x;q)/((-x,-q/x;q)_inf) dx = 0 for m != n \
                 (improper Riemann integral)",
        params: &[P_M_HI, P_N_LO],
        tolerance: 1e-4,
        strategies: DEFINITE,
        q_domain: FULL_Q,
        check: Check::Custom(check_sw2_orthogonality),
    });
    v.push(IdentityRecord {
        id: "thm-qhermite1-eq-214dddfc",
        anchor: "int x^m (q^2x^2;q^2)_inf ([m][m-1]/x^2 - [m-n]/(1-q)) h_n(x;q) d_q x \
                 = x^m (x^2;q^2)_inf ([m]/x h_n(x/q) - [n]/q h_(n-1)(x/q))",
        params: &[P_N, P_M_POLY],
        tolerance: 1e-8,
        strategies: DQ_SUM,
        q_domain: FULL_Q,
        check: Check::Indefinite { build: build_h1_214dddfc, x_range: x_default },
    });
    v.push(IdentityRecord {
        id: "example-qhermite1-214587",
        anchor: "m = n instance (n >= 2) of the discrete q-Hermite I identity",
        params: &[P_N_25],
        tolerance: 1e-8,
        strategies: DQ_SUM,
        q_domain: FULL_Q,
        check: Check::Indefinite { build: build_h1_214587, x_range: x_default },
    });
    v.push(IdentityRecord {
        id: "example-qhermite1-definite",
        anchor: "int_{-1}^{1} x^(n-2) (q^2x^2;q^2)_inf h_n(x;q) d_q x = 0",
        params: &[P_N_25],
        tolerance: 1e-10,
        strategies: DEFINITE,
        q_domain: FULL_Q,
        check: Check::Custom(check_h1_definite),
    });
    v.push(IdentityRecord {
        id: "prop-qhermite1-product",
        anchor: "(q^-n[n] - q^-m[m]) int (q^2x^2;q^2)_inf h_n h_m d_q x in Wronskian form",
        params: &[P_N_HI, P_M_ONE],
        tolerance: 1e-8,
        strategies: DQ_SUM,
        q_domain: FULL_Q,
        check: Check::Indefinite { build: build_h1_product, x_range: x_default },
    });
    v.push(IdentityRecord {
        id: "thm-qhermite2-eq-2584",
        anchor: "int h2_n(x;q)/(-x^2;q^2)_inf d_q x \
                 = -q^(1-n)(1-q) h2_(n-1)(x;q)/(-x^2;q^2)_inf",
        params: &[P_N],
        tolerance: 1e-9,
        strategies: DQ_SUM,
        q_domain: FULL_Q,
        check: Check::Indefinite { build: build_h2_2584, x_range: x_default },
    });
    v.push(IdentityRecord {
        id: "thm-qhermite2-eq-hbgddvsfa",
        anchor: "power-kernel identity for discrete q-Hermite II",
        params: &[P_N, P_M_POLY],
        tolerance: 1e-8,
        strategies: DQ_SUM,
        q_domain: FULL_Q,
        check: Check::Indefinite { build: build_h2_hbgddvsfa, x_range: x_default },
    });
    v.push(IdentityRecord {
        id: "remark-qhermite2-definite",
        anchor: "int_{-c}^{c} h2_n(x;q)/(-x^2;q^2)_inf d_q x: 0 for odd n, \
                 -2q^(1-n)(1-q) h2_(n-1)(c;q)/(-c^2;q^2)_inf for even n",
        params: &[P_N, P_C_H2],
        tolerance: 1e-10,
        strategies: DEFINITE,
        q_domain: FULL_Q,
        check: Check::Custom(check_h2_definite),
    });
    v.push(IdentityRecord {
        id: "prop-qhermite2-product",
        anchor: "([n]-[m]) int h2_n h2_m/(-x^2;q^2)_inf d_q x in Wronskian form",
        params: &[P_N_HI, P_M_ONE],
        tolerance: 1e-8,
        strategies: DQ_SUM,
        q_domain: FULL_Q,
        check: Check::Indefinite { build: build_h2_product, x_range: x_default },
    });
    v.push(IdentityRecord {
        id: "thm-sqrtq-airy-25844",
        anchor: "int Ai(x)/(q^(-1/2)x^2;q^2)_inf d_q x \
                 = sqrt(q)(1-q)^2 Dqinv Ai(x)/(q^(-1/2)x^2;q^2)_inf",
        params: &[],
        tolerance: 1e-9,
        strategies: DQ_SUM,
        q_domain: FULL_Q,
        check: Check::Indefinite { build: build_sqrtq_airy_25844, x_range: x_default },
    });
    v.push(IdentityRecord {
        id: "thm-sqrtq-airy-kmjnhbgvfd",
        anchor: "power-kernel identity for the base-sqrt(q) Airy series",
        params: &[P_M_POLY],
        tolerance: 1e-8,
        strategies: DQ_SUM,
        q_domain: FULL_Q,
        check: Check::Indefinite { build: build_sqrtq_airy_kmjnh, x_range: x_default },
    });
    v.push(IdentityRecord {
        id: "thm-littleqlegendre-integral",
        anchor: "int p_n(x|q) d_q x = x(1-x) phi(q^(1-n), q^(n+2); q^2; q, x)",
        params: &[P_N],
        tolerance: 1e-9,
        strategies: DQ_SUM,
        q_domain: FULL_Q,
        check: Check::Indefinite { build: build_littleleg, x_range: x_default },
    });
    v.push(IdentityRecord {
        id: "thm-bigqlegendre-integral",
        anchor: "int p_n(x;c;q) d_q x \
                 = q^(n-1)(q-x)(cq-x)/([n][n+1]) Dqinv p_n(x;c;q)",
        params: &[P_N, P_C_LEG],
        tolerance: 1e-9,
        strategies: DQ_SUM,
        q_domain: FULL_Q,
        check: Check::Indefinite { build: build_bigleg, x_range: x_default },
    });
}
