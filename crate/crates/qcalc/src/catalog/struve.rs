//! Catalog records for the q-Bessel-Struve functions: nonhomogeneous
//! power-kernel identities, trigonometric-kernel combinations, and the
//! Bessel-with-Struve antiderivative pairings.

use super::aux::{a_nv, c_nu};
use super::util::*;
use super::{Check, Domain, IdentityRecord, ParamSpec, Params};
use crate::lagrangian::{CoeffFns, DiffForm, Evaluator, IdentityInstance};
use crate::qcore::{C, QContext, QResult};
use crate::qgrid::d_q_inverse;
use crate::qspecial::phi;

const DQ_SUM: &[&str] = &["dq_check", "sum_check"];
const FULL_Q: (f64, f64) = (0.05, 0.95);

const P_NU_S: ParamSpec = ParamSpec { name: "nu", domain: Domain::Real { lo: -0.4, hi: 1.2 } };
const P_NU_S1: ParamSpec = ParamSpec { name: "nu", domain: Domain::Real { lo: 0.55, hi: 1.2 } };
const P_MU_S: ParamSpec = ParamSpec { name: "mu", domain: Domain::Real { lo: 0.8, hi: 1.8 } };
const P_LAM_S: ParamSpec = ParamSpec { name: "lambda", domain: Domain::Real { lo: 0.4, hi: 1.2 } };
const P_LAM_H1: ParamSpec =
    ParamSpec { name: "lambda", domain: Domain::Real { lo: 0.3, hi: 0.8 } };
const P_N_TRIG: ParamSpec = ParamSpec { name: "n", domain: Domain::Real { lo: 0.0, hi: 2.0 } };

/// `1phi1(q^{2s}; q^{2s+4}... )` helper: the base-q^2 series
/// `1phi1(q^S; q^{S+2}; q^2, z)` with `S` given in ambient-q exponents.
fn phi1_s(s_exp: f64, z: f64, ctx: &QContext) -> QResult<C> {
    let q = ctx.q;
    phi(&[re(q.powf(s_exp))], &[re(q.powf(s_exp + 2.0))], re(z), &ctx.base_sq())
}

// -------------------------------------------------------------------------
// H3: power-kernel identities
// -------------------------------------------------------------------------

fn build_h3_222(p: &Params, ctx: &QContext) -> QResult<IdentityInstance> {
    let (nu, mu, lam) = (p.get("nu")?, p.get("mu")?, p.get("lambda")?);
    let c = *ctx;
    let cn = c_nu(nu, ctx)?;
    let lhs = ev(move |x| {
        let q = c.q;
        let bracket = a_nv(mu, nu, q) / (x * x) + q.powf(-nu - 1.0) * lam * lam;
        Ok(h3s(nu, lam, x, &c)? * x.powf(mu + 1.0) * bracket)
    });
    let rhs = ev(move |x| {
        let q = c.q;
        let dh = d_q_inverse(&|t| h3s(nu, lam, t, &c), x, &c)?;
        let nh = lam.powf(1.0 + nu) * cn * x.powf(nu + mu + 1.0)
            / (q.powf(nu + 1.0) * qn(nu + mu + 1.0, &c));
        Ok((h3s(nu, lam, x / q, &c)? * (q.powf(-mu) * qn(mu, &c) / x) - dh * q.powf(-mu - 1.0))
            * x.powf(mu + 1.0)
            + re(nh))
    });
    Ok(IdentityInstance { lhs_integrand: lhs, rhs, nh_integrand: None })
}

fn build_h3_bhnnnd(p: &Params, ctx: &QContext) -> QResult<IdentityInstance> {
    let (nu, mu, lam) = (p.get("nu")?, p.get("mu")?, p.get("lambda")?);
    let c = *ctx;
    let cn = c_nu(nu, ctx)?;
    let lhs = ev(move |x| {
        let q = c.q;
        let bracket = q.powf(mu + 1.0) * a_nv(mu, nu, q) / (x * x) + q.powf(mu - nu) * lam * lam;
        Ok(h3s(nu, lam, x, &c)? * x.powf(mu + 1.0) * bracket)
    });
    let rhs = ev(move |x| {
        let q = c.q;
        let main = (h3s(nu, lam, x / q, &c)? * ((qn(mu, &c) - qn(nu, &c)) / x)
            + h3s(nu + 1.0, lam, x, &c)? * (lam / q))
            * (q * x.powf(mu + 1.0));
        let nh = lam.powf(1.0 + nu) * cn * qn(nu - mu, &c)
            / (q.powf(nu - mu) * qn(nu + mu + 1.0, &c) * qn(2.0 * nu + 1.0, &c))
            * x.powf(nu + mu + 1.0);
        Ok(main + re(nh))
    });
    Ok(IdentityInstance { lhs_integrand: lhs, rhs, nh_integrand: None })
}

fn build_h3_2145gg(p: &Params, ctx: &QContext) -> QResult<IdentityInstance> {
    let (nu, lam) = (p.get("nu")?, p.get("lambda")?);
    let c = *ctx;
    let lhs = ev(move |x| Ok(h3s(nu, lam, x, &c)? * x.powf(nu + 1.0)));
    let rhs = ev(move |x| Ok(h3s(nu + 1.0, lam, x, &c)? * (x.powf(nu + 1.0) / lam)));
    Ok(IdentityInstance { lhs_integrand: lhs, rhs, nh_integrand: None })
}

fn build_h3_32n5(p: &Params, ctx: &QContext) -> QResult<IdentityInstance> {
    let (nu, lam) = (p.get("nu")?, p.get("lambda")?);
    let c = *ctx;
    let cn = c_nu(nu, ctx)?;
    let lhs = ev(move |x| Ok(h3s(nu, lam, x, &c)? * x.powf(1.0 - nu)));
    let rhs = ev(move |x| {
        let q = c.q;
        Ok(h3s(nu - 1.0, lam, x / q, &c)? * (-q.powf(nu) / lam * x.powf(1.0 - nu))
            + re(lam.powf(nu - 1.0) * cn * x))
    });
    Ok(IdentityInstance { lhs_integrand: lhs, rhs, nh_integrand: None })
}

// -------------------------------------------------------------------------
// H3 with sin(.;q)/cos(.;q) kernels: verified through the method itself
// (stencil integrand + Wronskian antiderivative + accumulated source term)
// -------------------------------------------------------------------------

fn h3_coeffs(nu: f64, lam: f64, ctx: &QContext) -> QResult<CoeffFns> {
    let c = *ctx;
    let cn = c_nu(nu, ctx)?;
    let p = Evaluator::new(move |x| Ok(re(1.0 / (c.q * x))));
    let r = Evaluator::new(move |x| {
        let q = c.q;
        Ok(re(q.powf(-nu - 1.0) * lam * lam
            - q.powf(-nu) * qn(nu, &c).powi(2) / (x * x)))
    });
    let g = Evaluator::new(move |x| {
        Ok(re(lam.powf(nu + 1.0) * cn * c.q.powf(-nu - 1.0) * x.powf(nu - 1.0)))
    });
    Ok(CoeffFns { p, r, g: Some(g), form: DiffForm::Inverse })
}

fn build_h3_trig(p: &Params, ctx: &QContext, sine: bool) -> QResult<IdentityInstance> {
    let (nu, n) = (p.get("nu")?, p.get("n")?);
    let c = *ctx;
    let coeffs = h3_coeffs(nu, 1.0, ctx)?;
    let f = Evaluator::new(|x| Ok(re(x)));
    let h = Evaluator::new(move |x| {
        let arg = c.q.powf(-(n + nu + 1.0) / 2.0) * x;
        let t = if sine { sin_semi(arg, &c)? } else { cos_semi(arg, &c)? };
        Ok(t * x.powf(n))
    });
    let y = Evaluator::new(move |x| h3s(nu, 1.0, x, &c));
    Ok(IdentityInstance::from_parts(&coeffs, &f, &h, &y, ctx))
}

fn build_h3_trig_sin(p: &Params, ctx: &QContext) -> QResult<IdentityInstance> {
    build_h3_trig(p, ctx, true)
}

fn build_h3_trig_cos(p: &Params, ctx: &QContext) -> QResult<IdentityInstance> {
    build_h3_trig(p, ctx, false)
}

fn x_range_h3_trig(p: &Params, ctx: &QContext) -> (f64, f64) {
    let nu = p.get("nu").unwrap_or(0.5);
    let n = p.get("n").unwrap_or(1.0);
    let hi = (4.0 * ctx.q.powf((n + nu + 3.0) / 2.0)).min(0.9);
    (0.3 * hi, hi)
}

// -------------------------------------------------------------------------
// H2: power-kernel identities
// -------------------------------------------------------------------------

fn build_h2_333(p: &Params, ctx: &QContext) -> QResult<IdentityInstance> {
    let (nu, mu, lam) = (p.get("nu")?, p.get("mu")?, p.get("lambda")?);
    let c = *ctx;
    let cn = c_nu(nu, ctx)?;
    let lhs = ev(move |x| {
        let q = c.q;
        let bracket = a_nv(mu, nu, q) / (x * x) + q.powf(mu) * lam * lam;
        Ok(h2s(nu, lam, x, &c)? / w_lam(lam, x, &c)? * x.powf(mu + 1.0) * bracket)
    });
    let rhs = ev(move |x| {
        let q = c.q;
        let dh = d_q_inverse(&|t| h2s(nu, lam, t, &c), x, &c)?;
        Ok((h2s(nu, lam, x, &c)? * (q.powf(-mu) * qn(mu, &c) / x) - dh / q)
            / w_lam(lam, x, &c)?
            * x.powf(mu + 1.0))
    });
    let nh = ev(move |x| {
        let q = c.q;
        Ok(re((lam / q).powf(nu + 1.0) * cn) * x.powf(nu + mu) / w_lam(lam, x, &c)?)
    });
    Ok(IdentityInstance { lhs_integrand: lhs, rhs, nh_integrand: Some(nh) })
}

fn build_h2_214bgd(p: &Params, ctx: &QContext) -> QResult<IdentityInstance> {
    let (nu, lam) = (p.get("nu")?, p.get("lambda")?);
    let c = *ctx;
    let cn = c_nu(nu, ctx)?;
    let lhs = ev(move |x| Ok(h2s(nu, lam, x, &c)? / w_lam(lam, x, &c)? * x.powf(nu + 1.0)));
    let rhs = ev(move |x| {
        let q = c.q;
        let main = h2s(nu + 1.0, lam, x, &c)? / w_lam(lam, x, &c)? * (q * x.powf(nu + 1.0) / lam);
        let boundary = x.powf(2.0 * nu + 1.0)
            / (qn(2.0 * nu + 1.0, &c))
            * (lam.powf(nu - 1.0) / q.powf(2.0 * nu + 1.0) * cn);
        Ok(main - re(boundary) / w_lam(lam, x, &c)?)
    });
    let nh = ev(move |x| {
        let q = c.q;
        Ok(re(lam.powf(nu - 1.0) / q.powf(2.0 * nu + 1.0) * cn) * x.powf(2.0 * nu)
            / w_lam(lam, x, &c)?)
    });
    Ok(IdentityInstance { lhs_integrand: lhs, rhs, nh_integrand: Some(nh) })
}

fn build_h2_21lmhf(p: &Params, ctx: &QContext) -> QResult<IdentityInstance> {
    let (nu, lam) = (p.get("nu")?, p.get("lambda")?);
    let c = *ctx;
    let cn = c_nu(nu, ctx)?;
    let lhs = ev(move |x| Ok(h2s(nu, lam, x, &c)? / w_lam(lam, x, &c)? * x.powf(1.0 - nu)));
    let rhs = ev(move |x| {
        let q = c.q;
        Ok(h2s(nu - 1.0, lam, x, &c)? / w_lam(lam, x, &c)? * (x.powf(1.0 - nu) / (q * lam)))
    });
    let nh = ev(move |x| {
        Ok(re(lam.powf(nu - 1.0) * cn / c.q) / w_lam(lam, x, &c)?)
    });
    Ok(IdentityInstance { lhs_integrand: lhs, rhs, nh_integrand: Some(nh) })
}

fn build_h2_phi_remark(p: &Params, ctx: &QContext) -> QResult<IdentityInstance> {
    let (nu, mu, lam) = (p.get("nu")?, p.get("mu")?, p.get("lambda")?);
    let c = *ctx;
    let cn = c_nu(nu, ctx)?;
    let lhs = ev(move |x| {
        let q = c.q;
        let bracket = a_nv(mu, nu, q) / (x * x) + q.powf(mu) * lam * lam;
        Ok(h2s(nu, lam, x, &c)? / w_lam(lam, x, &c)? * x.powf(mu + 1.0) * bracket)
    });
    let rhs = ev(move |x| {
        let q = c.q;
        let dh = d_q_inverse(&|t| h2s(nu, lam, t, &c), x, &c)?;
        let main = (h2s(nu, lam, x, &c)? * (q.powf(-mu) * qn(mu, &c) / x) - dh / q)
            / w_lam(lam, x, &c)?
            * x.powf(mu + 1.0);
        // q-binomial closed form of the accumulated source integral:
        // 2phi1(0, q^S; q^{S+2}; q^2, -x^2 l^2 (1-q)^2) / [S]_q, S = nu+mu+1
        let s_exp = nu + mu + 1.0;
        let z = -x * x * lam * lam * (1.0 - q) * (1.0 - q);
        let ph = phi(
            &[re(0.0), re(q.powf(s_exp))],
            &[re(q.powf(s_exp + 2.0))],
            re(z),
            &c.base_sq(),
        )?;
        let nh = ph * (lam.powf(nu + 1.0) * cn * x.powf(s_exp)
            / (q.powf(nu + 1.0) * qn(s_exp, &c)));
        Ok(main + nh)
    });
    Ok(IdentityInstance { lhs_integrand: lhs, rhs, nh_integrand: None })
}

fn x_range_h2_phi(p: &Params, ctx: &QContext) -> (f64, f64) {
    let lam = p.get("lambda").unwrap_or(0.8);
    let hi = (0.85 / (lam * (1.0 - ctx.q))).min(0.9);
    (0.25 * hi, hi)
}

// -------------------------------------------------------------------------
// H2 with S_q/C_q kernels (mechanical route, lambda = 1)
// -------------------------------------------------------------------------

fn h2_coeffs(nu: f64, lam: f64, ctx: &QContext) -> QResult<CoeffFns> {
    let c = *ctx;
    let cn = c_nu(nu, ctx)?;
    let p = Evaluator::new(move |x| {
        let q = c.q;
        Ok(re(1.0 / x - q * lam * lam * x * (1.0 - q)))
    });
    let r = Evaluator::new(move |x| {
        let q = c.q;
        Ok(re(q * lam * lam - q.powf(1.0 - nu) * qn(nu, &c).powi(2) / (x * x)))
    });
    let g = Evaluator::new(move |x| {
        Ok(re(lam.powf(nu + 1.0) * cn * c.q.powf(-nu) * x.powf(nu - 1.0)))
    });
    Ok(CoeffFns { p, r, g: Some(g), form: DiffForm::Forward })
}

fn build_h2_trig(p: &Params, ctx: &QContext, sine: bool) -> QResult<IdentityInstance> {
    let (nu, n) = (p.get("nu")?, p.get("n")?);
    let c = *ctx;
    let coeffs = h2_coeffs(nu, 1.0, ctx)?;
    let f = Evaluator::new(move |x| Ok(re(x) / w_lam(1.0, x, &c)?));
    let h = Evaluator::new(move |x| {
        let arg = c.q.powf(n + 0.5) * x;
        let t = if sine { sin_cap(arg, &c)? } else { cos_cap(arg, &c)? };
        Ok(t * x.powf(n))
    });
    let y = Evaluator::new(move |x| h2s(nu, 1.0, x, &c));
    Ok(IdentityInstance::from_parts(&coeffs, &f, &h, &y, ctx))
}

fn build_h2_trig_sin(p: &Params, ctx: &QContext) -> QResult<IdentityInstance> {
    build_h2_trig(p, ctx, true)
}

fn build_h2_trig_cos(p: &Params, ctx: &QContext) -> QResult<IdentityInstance> {
    build_h2_trig(p, ctx, false)
}

// -------------------------------------------------------------------------
// H1: power-kernel identities
// -------------------------------------------------------------------------

fn build_h1_main(p: &Params, ctx: &QContext) -> QResult<IdentityInstance> {
    let (nu, mu, lam) = (p.get("nu")?, p.get("mu")?, p.get("lambda")?);
    let c = *ctx;
    let cn = c_nu(nu, ctx)?;
    let lhs = ev(move |x| {
        let q = c.q;
        let bracket = a_nv(mu, nu, q) / (x * x) + q.powf(-mu - 2.0) * lam * lam;
        Ok(h1s(nu, lam, x, &c)? * w_lam(lam, x, &c)? * x.powf(mu + 1.0) * bracket)
    });
    let rhs = ev(move |x| {
        let q = c.q;
        let dh = d_q_inverse(&|t| h1s(nu, lam, t, &c), x, &c)?;
        let main = (h1s(nu, lam, x / q, &c)? * (q.powf(-mu) * qn(mu, &c) / x)
            - dh * q.powf(-mu - 1.0))
            * w_lam(lam / q, x, &c)?
            * x.powf(mu + 1.0);
        let s_exp = nu + mu + 1.0;
        let z = -x * x * lam * lam * (1.0 - q) * (1.0 - q);
        let nh = phi1_s(s_exp, z, &c)?
            * (lam.powf(nu + 1.0) * cn * x.powf(s_exp) / (q.powf(nu + 1.0) * qn(s_exp, &c)));
        Ok(main + nh)
    });
    Ok(IdentityInstance { lhs_integrand: lhs, rhs, nh_integrand: None })
}

fn build_h1_part_nu(p: &Params, ctx: &QContext) -> QResult<IdentityInstance> {
    let (nu, lam) = (p.get("nu")?, p.get("lambda")?);
    let c = *ctx;
    let cn = c_nu(nu, ctx)?;
    let lhs = ev(move |x| Ok(h1s(nu, lam, x, &c)? * w_lam(lam, x, &c)? * x.powf(nu + 1.0)));
    let rhs = ev(move |x| {
        let q = c.q;
        let main = h1s(nu + 1.0, lam, x / q, &c)?
            * w_lam(lam / q, x, &c)?
            * ((q * x).powf(nu + 1.0) / lam);
        let z = -x * x * lam * lam * (1.0 - q) * (1.0 - q);
        let tail = (phi1_s(2.0 * nu + 1.0, z, &c)? - w_lam(lam / q, x, &c)?)
            * (q * lam.powf(nu - 1.0) * cn * x.powf(2.0 * nu + 1.0) / qn(2.0 * nu + 1.0, &c));
        Ok(main + tail)
    });
    Ok(IdentityInstance { lhs_integrand: lhs, rhs, nh_integrand: None })
}

fn build_h1_part_negnu(p: &Params, ctx: &QContext) -> QResult<IdentityInstance> {
    let (nu, lam) = (p.get("nu")?, p.get("lambda")?);
    let c = *ctx;
    let cn = c_nu(nu, ctx)?;
    let lhs = ev(move |x| Ok(h1s(nu, lam, x, &c)? * w_lam(lam, x, &c)? * x.powf(1.0 - nu)));
    let rhs = ev(move |x| {
        let q = c.q;
        let main = h1s(nu - 1.0, lam, x / q, &c)?
            * w_lam(lam / q, x, &c)?
            * (-(q * x).powf(1.0 - nu) / lam);
        let z = -x * x * lam * lam * (1.0 - q) * (1.0 - q);
        let tail = phi1_s(1.0, z, &c)? * (q.powf(1.0 - 2.0 * nu) * lam.powf(nu - 1.0) * cn * x);
        Ok(main + tail)
    });
    Ok(IdentityInstance { lhs_integrand: lhs, rhs, nh_integrand: None })
}

fn x_range_h1(p: &Params, ctx: &QContext) -> (f64, f64) {
    let lam = p.get("lambda").unwrap_or(0.5);
    let q = ctx.q;
    let hi = (0.85 * q / (lam * (1.0 - q))).min(0.9);
    (0.25 * hi, hi)
}

// -------------------------------------------------------------------------
// H1 with sin_q/cos_q kernels (mechanical route, lambda = 1)
// -------------------------------------------------------------------------

fn h1_coeffs(nu: f64, lam: f64, ctx: &QContext) -> QResult<CoeffFns> {
    let c = *ctx;
    let cn = c_nu(nu, ctx)?;
    let p = Evaluator::new(move |x| {
        let q = c.q;
        Ok(re(1.0 / (q * x) + lam * lam * (1.0 - q) * x / (q * q * q)))
    });
    let r = Evaluator::new(move |x| {
        let q = c.q;
        Ok(re(lam * lam / (q * q) - q.powf(-nu) * qn(nu, &c).powi(2) / (x * x)))
    });
    let g = Evaluator::new(move |x| {
        Ok(re(lam.powf(nu + 1.0) * cn * c.q.powf(-nu - 1.0) * x.powf(nu - 1.0)))
    });
    Ok(CoeffFns { p, r, g: Some(g), form: DiffForm::Inverse })
}

fn build_h1_trig(p: &Params, ctx: &QContext, sine: bool) -> QResult<IdentityInstance> {
    let (nu, n) = (p.get("nu")?, p.get("n")?);
    let c = *ctx;
    let coeffs = h1_coeffs(nu, 1.0, ctx)?;
    let f = Evaluator::new(move |x| Ok(w_lam(1.0, x, &c)? * x));
    let h = Evaluator::new(move |x| {
        let arg = c.q.powf(-n - 1.5) * x;
        let t = if sine { sin_q(arg, &c)? } else { cos_q(arg, &c)? };
        Ok(t * x.powf(n))
    });
    let y = Evaluator::new(move |x| h1s(nu, 1.0, x, &c));
    Ok(IdentityInstance::from_parts(&coeffs, &f, &h, &y, ctx))
}

fn build_h1_trig_sin(p: &Params, ctx: &QContext) -> QResult<IdentityInstance> {
    build_h1_trig(p, ctx, true)
}

fn build_h1_trig_cos(p: &Params, ctx: &QContext) -> QResult<IdentityInstance> {
    build_h1_trig(p, ctx, false)
}

fn x_range_h1_trig(p: &Params, ctx: &QContext) -> (f64, f64) {
    let n = p.get("n").unwrap_or(1.0);
    let q = ctx.q;
    let hi = (0.85 * q.powf(n + 2.5) / (1.0 - q)).min(0.85 * q / (1.0 - q)).min(0.9);
    (0.3 * hi, hi)
}

// -------------------------------------------------------------------------
// Bessel-with-Struve antiderivative pairings
// -------------------------------------------------------------------------

fn build_j3_h3_pairing(p: &Params, ctx: &QContext) -> QResult<IdentityInstance> {
    let (nu, lam) = (p.get("nu")?, p.get("lambda")?);
    let c = *ctx;
    let cn = c_nu(nu, ctx)?;
    // the Struve companion runs at argument sqrt(q) lam x so that both
    // functions solve the same homogeneous operator
    let jb = move |t: f64, c: &QContext| j3(nu, lam * t * (1.0 - c.q), c);
    let hb = move |t: f64, c: &QContext| h3s(nu, c.q.sqrt() * lam, t, c);
    let lhs = ev(move |x| Ok(jb(x, &c)? * (cn * x.powf(nu))));
    let rhs = ev(move |x| {
        let q = c.q;
        let dh = d_q_inverse(&|t| hb(t, &c), x, &c)?;
        let dj = d_q_inverse(&|t| jb(t, &c), x, &c)?;
        Ok((jb(x / q, &c)? * dh - hb(x / q, &c)? * dj)
            * (q.powf((nu - 1.0) / 2.0) * x / lam.powf(1.0 + nu)))
    });
    Ok(IdentityInstance { lhs_integrand: lhs, rhs, nh_integrand: None })
}

fn build_j2_h2_pairing(p: &Params, ctx: &QContext) -> QResult<IdentityInstance> {
    let (nu, lam) = (p.get("nu")?, p.get("lambda")?);
    let c = *ctx;
    let cn = c_nu(nu, ctx)?;
    let lhs = ev(move |x| Ok(j2s(nu, lam, x, &c)? / w_lam(lam, x, &c)? * (cn * x.powf(nu))));
    let rhs = ev(move |x| {
        let q = c.q;
        let dh = d_q_inverse(&|t| h2s(nu, lam, t, &c), x, &c)?;
        let dj = d_q_inverse(&|t| j2s(nu, lam, t, &c), x, &c)?;
        Ok((j2s(nu, lam, x, &c)? * dh - h2s(nu, lam, x, &c)? * dj) / w_lam(lam, x, &c)?
            * (lam.powf(-1.0 - nu) * q.powf(nu) * x))
    });
    Ok(IdentityInstance { lhs_integrand: lhs, rhs, nh_integrand: None })
}

fn build_j1_h1_pairing(p: &Params, ctx: &QContext) -> QResult<IdentityInstance> {
    let (nu, lam) = (p.get("nu")?, p.get("lambda")?);
    let c = *ctx;
    let cn = c_nu(nu, ctx)?;
    let lhs = ev(move |x| Ok(j1s(nu, lam, x, &c)? * w_lam(lam, x, &c)? * (cn * x.powf(nu))));
    let rhs = ev(move |x| {
        let q = c.q;
        let dh = d_q_inverse(&|t| h1s(nu, lam, t, &c), x, &c)?;
        let dj = d_q_inverse(&|t| j1s(nu, lam, t, &c), x, &c)?;
        Ok((j1s(nu, lam / q, x, &c)? * dh - h1s(nu, lam, x / q, &c)? * dj)
            * w_lam(lam / q, x, &c)?
            * (q.powf(nu) * x / lam.powf(1.0 + nu)))
    });
    Ok(IdentityInstance { lhs_integrand: lhs, rhs, nh_integrand: None })
}

// -------------------------------------------------------------------------
// registry
// -------------------------------------------------------------------------

pub(super) fn register(v: &mut Vec<IdentityRecord>) {
    v.push(IdentityRecord {
        id: "thm4.3-eq-222",
        anchor: "int x^(mu+1) (A/x^2 + q^(-nu-1) l^2) H3_nu(lx;q2) d_q x \
                 = l^(1+nu) C_nu x^(nu+mu+1)/(q^(nu+1)[nu+mu+1]) \
                 + x^(mu+1) (q^-mu [mu]/x H3_nu(lx/q) - q^(-mu-1) Dqinv H3_nu)",
        params: &[P_NU_S, P_MU_S, P_LAM_S],
        tolerance: 1e-8,
        strategies: DQ_SUM,
        q_domain: FULL_Q,
        check: Check::Indefinite { build: build_h3_222, x_range: x_default },
    });
    v.push(IdentityRecord {
        id: "thm4.3-eq-bhnnndujdj3",
        anchor: "equivalent lowered form of thm4.3-eq-222 featuring H3_(nu+1)",
        params: &[P_NU_S, P_MU_S, P_LAM_S],
        tolerance: 1e-8,
        strategies: DQ_SUM,
        q_domain: FULL_Q,
        check: Check::Indefinite { build: build_h3_bhnnnd, x_range: x_default },
    });
    v.push(IdentityRecord {
        id: "thm4.3-eq-2145gg",
        anchor: "int x^(nu+1) H3_nu(lx;q2) d_q x = x^(nu+1)/l H3_(nu+1)(lx;q2)",
        params: &[P_NU_S, P_LAM_S],
        tolerance: 1e-8,
        strategies: DQ_SUM,
        q_domain: FULL_Q,
        check: Check::Indefinite { build: build_h3_2145gg, x_range: x_default },
    });
    v.push(IdentityRecord {
        id: "thm4.3-eq-32n5",
        anchor: "int x^(1-nu) H3_nu(lx;q2) d_q x \
                 = -q^nu/l x^(1-nu) H3_(nu-1)(lx/q;q2) + l^(nu-1) C_nu x",
        params: &[P_NU_S1, P_LAM_S],
        tolerance: 1e-8,
        strategies: DQ_SUM,
        q_domain: FULL_Q,
        check: Check::Indefinite { build: build_h3_32n5, x_range: x_default },
    });
    v.push(IdentityRecord {
        id: "thm4.4-struve3-sin",
        anchor: "h = x^n sin(q^(-(n+nu+1)/2) x; q) against H3_nu: integrand, Wronskian \
                 antiderivative, and accumulated source checked via the method",
        params: &[P_NU_S, P_N_TRIG],
        tolerance: 1e-7,
        strategies: DQ_SUM,
        q_domain: FULL_Q,
        check: Check::Indefinite { build: build_h3_trig_sin, x_range: x_range_h3_trig },
    });
    v.push(IdentityRecord {
        id: "thm4.4-struve3-cos",
        anchor: "cosine-kernel companion of thm4.4-struve3-sin",
        params: &[P_NU_S, P_N_TRIG],
        tolerance: 1e-7,
        strategies: DQ_SUM,
        q_domain: FULL_Q,
        check: Check::Indefinite { build: build_h3_trig_cos, x_range: x_range_h3_trig },
    });
    v.push(IdentityRecord {
        id: "thm4.5-eq-333",
        anchor: "int x^(mu+1)/W (A/x^2 + q^mu l^2) H2_nu(lx|q2) d_q x \
                 = x^(mu+1)/W (q^-mu [mu]/x H2_nu - Dqinv H2_nu/q) \
                 + (l/q)^(nu+1) C_nu int x^(nu+mu)/W d_q x",
        params: &[P_NU_S, P_MU_S, P_LAM_S],
        tolerance: 1e-8,
        strategies: DQ_SUM,
        q_domain: FULL_Q,
        check: Check::Indefinite { build: build_h2_333, x_range: x_default },
    });
    v.push(IdentityRecord {
        id: "thm4.5-eq-214bgd",
        anchor: "mu = nu instance with H2_(nu+1) and the accumulated \
                 int x^(2nu)/W d_q x term",
        params: &[P_NU_S, P_LAM_S],
        tolerance: 1e-8,
        strategies: DQ_SUM,
        q_domain: FULL_Q,
        check: Check::Indefinite { build: build_h2_214bgd, x_range: x_default },
    });
    v.push(IdentityRecord {
        id: "thm4.5-eq-21lmhf",
        anchor: "mu = -nu instance with H2_(nu-1) and the accumulated \
                 int 1/W d_q x term",
        params: &[P_NU_S1, P_LAM_S],
        tolerance: 1e-8,
        strategies: DQ_SUM,
        q_domain: FULL_Q,
        check: Check::Indefinite { build: build_h2_21lmhf, x_range: x_default },
    });
    v.push(IdentityRecord {
        id: "remark-thm4.5-phi",
        anchor: "thm4.5-eq-333 with the source integral in closed 2phi1 form \
                 (needs |l x (1-q)| < 1)",
        params: &[P_NU_S, P_MU_S, P_LAM_S],
        tolerance: 1e-8,
        strategies: DQ_SUM,
        q_domain: FULL_Q,
        check: Check::Indefinite { build: build_h2_phi_remark, x_range: x_range_h2_phi },
    });
    v.push(IdentityRecord {
        id: "thm4.6-struve2-sin",
        anchor: "h = x^n S_q(q^(n+1/2) x) against H2_nu: checked via the method",
        params: &[P_NU_S, P_N_TRIG],
        tolerance: 1e-7,
        strategies: DQ_SUM,
        q_domain: FULL_Q,
        check: Check::Indefinite { build: build_h2_trig_sin, x_range: x_default },
    });
    v.push(IdentityRecord {
        id: "thm4.6-struve2-cos",
        anchor: "h = x^n C_q(q^(n+1/2) x) against H2_nu: checked via the method",
        params: &[P_NU_S, P_N_TRIG],
        tolerance: 1e-7,
        strategies: DQ_SUM,
        q_domain: FULL_Q,
        check: Check::Indefinite { build: build_h2_trig_cos, x_range: x_default },
    });
    v.push(IdentityRecord {
        id: "thm4.7-eq-main",
        anchor: "int x^(mu+1) W (A/x^2 + q^(-mu-2) l^2) H1_nu(lx|q2) d_q x \
                 = x^(mu+1) W(./q) (q^-mu[mu]/x H1_nu(lx/q) - q^(-mu-1) Dqinv H1_nu) \
                 + l^(nu+1) C_nu x^S/(q^(nu+1)[S]) 1phi1(q^S;q^(S+2);q2,-x^2l^2(1-q)^2)",
        params: &[P_NU_S, P_MU_S, P_LAM_H1],
        tolerance: 1e-8,
        strategies: DQ_SUM,
        q_domain: FULL_Q,
        check: Check::Indefinite { build: build_h1_main, x_range: x_range_h1 },
    });
    v.push(IdentityRecord {
        id: "thm4.7-part-nu",
        anchor: "mu = nu instance with H1_(nu+1)(lx/q|q2) and the 1phi1 tail",
        params: &[P_NU_S, P_LAM_H1],
        tolerance: 1e-8,
        strategies: DQ_SUM,
        q_domain: FULL_Q,
        check: Check::Indefinite { build: build_h1_part_nu, x_range: x_range_h1 },
    });
    v.push(IdentityRecord {
        id: "thm4.7-part-negnu",
        anchor: "mu = -nu instance with H1_(nu-1)(lx/q|q2) and the 1phi1(q;q^3;...) tail",
        params: &[P_NU_S1, P_LAM_H1],
        tolerance: 1e-8,
        strategies: DQ_SUM,
        q_domain: FULL_Q,
        check: Check::Indefinite { build: build_h1_part_negnu, x_range: x_range_h1 },
    });
    v.push(IdentityRecord {
        id: "thm4.8-struve1-sin",
        anchor: "h = x^n sinq(q^(-n-3/2) x) against H1_nu: checked via the method",
        params: &[P_NU_S, ParamSpec { name: "n", domain: Domain::Real { lo: 0.0, hi: 1.5 } }],
        tolerance: 1e-7,
        strategies: DQ_SUM,
        q_domain: FULL_Q,
        check: Check::Indefinite { build: build_h1_trig_sin, x_range: x_range_h1_trig },
    });
    v.push(IdentityRecord {
        id: "thm4.8-struve1-cos",
        anchor: "h = x^n cosq(q^(-n-3/2) x) against H1_nu: checked via the method",
        params: &[P_NU_S, ParamSpec { name: "n", domain: Domain::Real { lo: 0.0, hi: 1.5 } }],
        tolerance: 1e-7,
        strategies: DQ_SUM,
        q_domain: FULL_Q,
        check: Check::Indefinite { build: build_h1_trig_cos, x_range: x_range_h1_trig },
    });
    v.push(IdentityRecord {
        id: "thm-j3-struve3-pairing",
        anchor: "C_nu int x^nu J3_nu(lx(1-q);q2) d_q x = q^((nu-1)/2) x/l^(1+nu) \
                 (J3_nu(lx(1-q)/q) Dqinv H3_nu(sqrt(q) l x) \
                 - H3_nu(sqrt(q) l x/q) Dqinv J3_nu(lx(1-q)))",
        params: &[P_NU_S, P_LAM_S],
        tolerance: 1e-8,
        strategies: DQ_SUM,
        q_domain: FULL_Q,
        check: Check::Indefinite { build: build_j3_h3_pairing, x_range: x_default },
    });
    v.push(IdentityRecord {
        id: "thm-j2-struve2-pairing",
        anchor: "C_nu int x^nu/W J2_nu(lx|q2) d_q x = l^(-1-nu) q^nu x/W \
                 (J2_nu Dqinv H2_nu - H2_nu Dqinv J2_nu)",
        params: &[P_NU_S, P_LAM_S],
        tolerance: 1e-8,
        strategies: DQ_SUM,
        q_domain: FULL_Q,
        check: Check::Indefinite { build: build_j2_h2_pairing, x_range: x_default },
    });
    v.push(IdentityRecord {
        id: "thm-j1-struve1-pairing",
        anchor: "C_nu int x^nu W J1_nu(lx|q2) d_q x = q^nu x/l^(1+nu) W(./q) \
                 (J1_nu(lx/q|q2) Dqinv H1_nu - H1_nu(lx/q|q2) Dqinv J1_nu)",
        params: &[P_NU_S, P_LAM_H1],
        tolerance: 1e-8,
        strategies: DQ_SUM,
        q_domain: FULL_Q,
        check: Check::Indefinite { build: build_j1_h1_pairing, x_range: x_range_h1 },
    });
}
