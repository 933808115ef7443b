//! Shared shorthands for record builders: thin wrappers around the special
//! functions with the base/argument conventions the catalog uses throughout.

use crate::lagrangian::Evaluator;
use crate::qcore::{q_pochhammer, C, PochOrder, QContext, QResult};
use crate::qspecial::{
    airy_pair, airy_sqrtq, bessel_j, bessel_j_scaled, ortho_poly, q_trig, struve_h_scaled,
    AiryBranch, BesselKind, PolyFamily, StruveKind, TrigKind,
};

pub(crate) fn re(v: f64) -> C {
    C::new(v, 0.0)
}

/// `[v]_q` for real `v`.
pub(crate) fn qn(v: f64, ctx: &QContext) -> f64 {
    (1.0 - ctx.q.powf(v)) / (1.0 - ctx.q)
}

pub(crate) fn poch_inf(a: C, ctx: &QContext) -> QResult<C> {
    q_pochhammer(a, PochOrder::Infinite, ctx)
}

/// Real-order `(a;q)_v`.
pub(crate) fn poch_real(a: C, v: f64, ctx: &QContext) -> QResult<C> {
    q_pochhammer(a, PochOrder::Real(v), ctx)
}

/// The recurring weight `(-x^2 lambda^2 (1-q)^2; q^2)_inf`.
pub(crate) fn w_lam(lam: f64, x: f64, ctx: &QContext) -> QResult<C> {
    let s = x * lam * (1.0 - ctx.q);
    poch_inf(re(-s * s), &ctx.base_sq())
}

/// `J_nu^{(3)}(x; q^2)`.
pub(crate) fn j3(nu: f64, x: f64, ctx: &QContext) -> QResult<C> {
    bessel_j(BesselKind::J3, re(nu), re(x), &ctx.base_sq())
}

/// `J_nu^{(2)}(lambda x | q^2)`.
pub(crate) fn j2s(nu: f64, lam: f64, x: f64, ctx: &QContext) -> QResult<C> {
    bessel_j_scaled(BesselKind::J2, re(nu), re(lam), x, ctx)
}

/// `J_nu^{(1)}(lambda x | q^2)`.
pub(crate) fn j1s(nu: f64, lam: f64, x: f64, ctx: &QContext) -> QResult<C> {
    bessel_j_scaled(BesselKind::J1, re(nu), re(lam), x, ctx)
}

pub(crate) fn h3s(nu: f64, lam: f64, x: f64, ctx: &QContext) -> QResult<C> {
    struve_h_scaled(StruveKind::H3, nu, lam, x, ctx)
}

pub(crate) fn h2s(nu: f64, lam: f64, x: f64, ctx: &QContext) -> QResult<C> {
    struve_h_scaled(StruveKind::H2, nu, lam, x, ctx)
}

pub(crate) fn h1s(nu: f64, lam: f64, x: f64, ctx: &QContext) -> QResult<C> {
    struve_h_scaled(StruveKind::H1, nu, lam, x, ctx)
}

pub(crate) fn sin_q(z: f64, ctx: &QContext) -> QResult<C> {
    q_trig(TrigKind::SinSmall, re(z), ctx)
}

pub(crate) fn cos_q(z: f64, ctx: &QContext) -> QResult<C> {
    q_trig(TrigKind::CosSmall, re(z), ctx)
}

pub(crate) fn sin_cap(z: f64, ctx: &QContext) -> QResult<C> {
    q_trig(TrigKind::SinCap, re(z), ctx)
}

pub(crate) fn cos_cap(z: f64, ctx: &QContext) -> QResult<C> {
    q_trig(TrigKind::CosCap, re(z), ctx)
}

pub(crate) fn sin_semi(z: f64, ctx: &QContext) -> QResult<C> {
    q_trig(TrigKind::SinSemi, re(z), ctx)
}

pub(crate) fn cos_semi(z: f64, ctx: &QContext) -> QResult<C> {
    q_trig(TrigKind::CosSemi, re(z), ctx)
}

pub(crate) fn ai(x: f64, ctx: &QContext) -> QResult<C> {
    airy_pair(AiryBranch::AI, re(x), ctx)
}

pub(crate) fn bi(x: f64, ctx: &QContext) -> QResult<C> {
    airy_pair(AiryBranch::BI, re(x), ctx)
}

pub(crate) fn airy_s(x: f64, ctx: &QContext) -> QResult<C> {
    airy_sqrtq(re(x), ctx)
}

pub(crate) fn sw(n: u32, x: f64, ctx: &QContext) -> QResult<C> {
    ortho_poly(&PolyFamily::StieltjesWigert { n }, re(x), ctx)
}

pub(crate) fn qlag(n: u32, alpha: f64, x: f64, ctx: &QContext) -> QResult<C> {
    ortho_poly(&PolyFamily::QLaguerre { n, alpha }, re(x), ctx)
}

pub(crate) fn bigqlag(n: u32, a: f64, b: f64, x: f64, ctx: &QContext) -> QResult<C> {
    ortho_poly(&PolyFamily::BigQLaguerre { n, a, b }, re(x), ctx)
}

pub(crate) fn herm1(n: u32, x: f64, ctx: &QContext) -> QResult<C> {
    ortho_poly(&PolyFamily::QHermiteI { n }, re(x), ctx)
}

pub(crate) fn herm2(n: u32, x: f64, ctx: &QContext) -> QResult<C> {
    ortho_poly(&PolyFamily::QHermiteII { n }, re(x), ctx)
}

pub(crate) fn littleleg(n: u32, x: f64, ctx: &QContext) -> QResult<C> {
    ortho_poly(&PolyFamily::LittleQLegendre { n }, re(x), ctx)
}

pub(crate) fn bigleg(n: u32, c: f64, x: f64, ctx: &QContext) -> QResult<C> {
    ortho_poly(&PolyFamily::BigQLegendre { n, c }, re(x), ctx)
}

/// Wrap a closure into an [`Evaluator`].
pub(crate) fn ev<F>(f: F) -> Evaluator
where
    F: Fn(f64) -> QResult<C> + Send + Sync + 'static,
{
    Evaluator::new(f)
}

/// Default check-anchor interval.
pub(crate) fn x_default(_: &super::Params, _: &QContext) -> (f64, f64) {
    (0.2, 0.9)
}
