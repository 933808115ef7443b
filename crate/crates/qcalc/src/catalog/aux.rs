//! Named auxiliary coefficients shared by the catalog records.
//!
//! These are the closed-form helper symbols that appear across the catalog
//! statements; keeping them in one place lets the records and the tests
//! spot-check the same definitions.

use crate::qcore::{q_gamma, C, QContext, QResult};
use crate::qspecial::{q_trig, TrigKind};

fn re(v: f64) -> C {
    C::new(v, 0.0)
}

fn qn(v: f64, q: f64) -> f64 {
    (1.0 - q.powf(v)) / (1.0 - q)
}

/// `A_{n,nu} = q^{-n} [n]_q^2 - q^{-nu} [nu]_q^2`, equal to
/// `(q^{-n} + q^n - q^{-nu} - q^nu) / (1-q)^2`.
pub fn a_nv(n: f64, nu: f64, q: f64) -> f64 {
    q.powf(-n) * qn(n, q).powi(2) - q.powf(-nu) * qn(nu, q).powi(2)
}

/// `C_nu(q) = (1+q)^{1-nu} / (Gamma_{q^2}(1/2) Gamma_{q^2}(nu + 1/2))`,
/// the source normalization of the Struve nonhomogeneity.
pub fn c_nu(nu: f64, ctx: &QContext) -> QResult<f64> {
    let ctx2 = ctx.base_sq();
    let g1 = q_gamma(re(0.5), &ctx2)?;
    let g2 = q_gamma(re(nu + 0.5), &ctx2)?;
    Ok((1.0 + ctx.q).powf(1.0 - nu) / (g1 * g2).re)
}

/// `Ctilde_{n,nu} = q^{(3n+nu+2)/2} (1-q) A_{n,nu}`.
pub fn c_tilde_nv(n: f64, nu: f64, q: f64) -> f64 {
    q.powf((3.0 * n + nu + 2.0) / 2.0) * (1.0 - q) * a_nv(n, nu, q)
}

/// `Chat_{n,nu} = q^{(3n+nu+1)/2} (1-q) A_{n,nu}`.
pub fn c_hat_nv(n: f64, nu: f64, q: f64) -> f64 {
    q.powf((3.0 * n + nu + 1.0) / 2.0) * (1.0 - q) * a_nv(n, nu, q)
}

/// `D_{n,nu}(x)`, the collected coefficient of `J3(x/q; q^2)` in the
/// sine-kernel identity for the third q-Bessel function:
/// `q^{-n}([n]_q - [nu]_q)/x sin(q^{-(n+nu+2)/2} x/(1-q); q)
///  + q^{-(n+nu+2)/2}/(1-q) cos(q^{-(n+nu+1)/2} x/(1-q); q)`.
pub fn d_nv(n: f64, nu: f64, x: f64, ctx: &QContext) -> QResult<C> {
    let q = ctx.q;
    let s = q_trig(TrigKind::SinSemi, re(q.powf(-(n + nu + 2.0) / 2.0) * x / (1.0 - q)), ctx)?;
    let c = q_trig(TrigKind::CosSemi, re(q.powf(-(n + nu + 1.0) / 2.0) * x / (1.0 - q)), ctx)?;
    Ok(s * (q.powf(-n) * (qn(n, q) - qn(nu, q)) / x) + c * (q.powf(-(n + nu + 2.0) / 2.0) / (1.0 - q)))
}

/// `Dtilde_{n,nu}(x)`, the cosine-kernel companion of [`d_nv`].
pub fn d_tilde_nv(n: f64, nu: f64, x: f64, ctx: &QContext) -> QResult<C> {
    let q = ctx.q;
    let c = q_trig(TrigKind::CosSemi, re(q.powf(-(n + nu + 2.0) / 2.0) * x / (1.0 - q)), ctx)?;
    let s = q_trig(TrigKind::SinSemi, re(q.powf(-(n + nu + 1.0) / 2.0) * x / (1.0 - q)), ctx)?;
    Ok(c * (q.powf(-n) * (qn(n, q) - qn(nu, q)) / x) - s * (q.powf(-(n + nu + 1.0) / 2.0) / (1.0 - q)))
}

/// `C_{n,nu} = q^{1/2} [n+nu]_q + q^{-1/2} [n-nu+1]_q` (second-kind
/// Bessel-with-trig identities).
pub fn c_cap_nv(n: f64, nu: f64, q: f64) -> f64 {
    q.sqrt() * qn(n + nu, q) + qn(n - nu + 1.0, q) / q.sqrt()
}

/// `I_{n,nu}(x) = q^{-n}([n]_q - q^{n-nu}[nu]_q ... )` collected coefficient
/// for the second-kind identities:
/// `(q^{-n}[n]_q - q^{-nu}[nu]_q)/x S_q(q^{n+1/2} x) + q^{-1/2} C_q(q^{n+1/2} x)`.
pub fn i_nv(n: f64, nu: f64, x: f64, ctx: &QContext) -> QResult<C> {
    let q = ctx.q;
    let s = q_trig(TrigKind::SinCap, re(q.powf(n + 0.5) * x), ctx)?;
    let c = q_trig(TrigKind::CosCap, re(q.powf(n + 0.5) * x), ctx)?;
    Ok(s * ((q.powf(-n) * qn(n, q) - q.powf(-nu) * qn(nu, q)) / x) + c * q.powf(-0.5))
}

/// Companion of [`i_nv`] with sine and cosine exchanged (and the sign of the
/// `q^{-1/2}` term flipped).
pub fn i_tilde_nv(n: f64, nu: f64, x: f64, ctx: &QContext) -> QResult<C> {
    let q = ctx.q;
    let s = q_trig(TrigKind::SinCap, re(q.powf(n + 0.5) * x), ctx)?;
    let c = q_trig(TrigKind::CosCap, re(q.powf(n + 0.5) * x), ctx)?;
    Ok(c * ((q.powf(-n) * qn(n, q) - q.powf(-nu) * qn(nu, q)) / x) - s * q.powf(-0.5))
}

/// `K_{n,nu} = q^{-nu-n-3/2} [nu+n]_q - q^{-1/2} [nu-n-1]_q` (first-kind
/// Bessel-with-trig identities).
pub fn k_nv(n: f64, nu: f64, q: f64) -> f64 {
    q.powf(-nu - n - 1.5) * qn(nu + n, q) - q.powf(-0.5) * qn(nu - n - 1.0, q)
}

/// `P_{n,nu}(x) = q^{-n}([n]_q - [nu]_q)/x sin_q(q^{-n-3/2} x)
///  + q^{-n-3/2} cos_q(q^{-n-3/2} x)`.
pub fn p_nv(n: f64, nu: f64, x: f64, ctx: &QContext) -> QResult<C> {
    let q = ctx.q;
    let arg = q.powf(-n - 1.5) * x;
    let s = q_trig(TrigKind::SinSmall, re(arg), ctx)?;
    let c = q_trig(TrigKind::CosSmall, re(arg), ctx)?;
    Ok(s * (q.powf(-n) * (qn(n, q) - qn(nu, q)) / x) + c * q.powf(-n - 1.5))
}

/// Companion of [`p_nv`] with sine and cosine exchanged and the second term
/// negated.
pub fn p_tilde_nv(n: f64, nu: f64, x: f64, ctx: &QContext) -> QResult<C> {
    let q = ctx.q;
    let arg = q.powf(-n - 1.5) * x;
    let s = q_trig(TrigKind::SinSmall, re(arg), ctx)?;
    let c = q_trig(TrigKind::CosSmall, re(arg), ctx)?;
    Ok(c * (q.powf(-n) * (qn(n, q) - qn(nu, q)) / x) - s * q.powf(-n - 1.5))
}

/// `alpha = [a]_q [b]_q / [c]_q` for the 2-phi-1 identities.
pub fn alpha_2phi1(a: f64, b: f64, c: f64, q: f64) -> f64 {
    qn(a, q) * qn(b, q) / qn(c, q)
}

/// `beta = [a+b+1]_q / [c]_q`.
pub fn beta_2phi1(a: f64, b: f64, c: f64, q: f64) -> f64 {
    qn(a + b + 1.0, q) / qn(c, q)
}

/// `gamma = beta - (1-q) alpha`: the shift parameter of the first-order
/// solution `h = (gamma x; q)_inf / (beta x; q)_inf` used by the fourth
/// 2-phi-1 identity.
pub fn gamma_2phi1(a: f64, b: f64, c: f64, q: f64) -> f64 {
    beta_2phi1(a, b, c, q) - (1.0 - q) * alpha_2phi1(a, b, c, q)
}

/// `T_alpha(x) = alpha/(1 + alpha (1-q) x) - [a+b+1]_q/(q^{c+1}(1 - q^{a+b-c} x))`.
pub fn t_alpha(a: f64, b: f64, c: f64, x: f64, q: f64) -> f64 {
    let al = alpha_2phi1(a, b, c, q);
    al / (1.0 + al * (1.0 - q) * x) - qn(a + b + 1.0, q) / (q.powf(c + 1.0) * (1.0 - q.powf(a + b - c) * x))
}

/// `S_gamma(x) = alpha (beta + q alpha) / ((1 - gamma x)(q - beta x))`, the
/// collected second-derivative coefficient of
/// `h = (gamma x; q)_inf / (beta x; q)_inf`.
pub fn s_gamma(a: f64, b: f64, c: f64, x: f64, q: f64) -> f64 {
    let al = alpha_2phi1(a, b, c, q);
    let be = beta_2phi1(a, b, c, q);
    let ga = gamma_2phi1(a, b, c, q);
    al * (be + q * al) / ((1.0 - ga * x) * (q - be * x))
}

/// Exponent `mu(n) = 1 - ln(1 + q - q^n)/ln(q)`, i.e. the real power with
/// `q^{1-mu} = 1 + q - q^n`; it makes `x^mu` solve
/// `D_{1/q} h = [n]_q h / x`. The same exponent appears in both the
/// q-Laguerre and the Stieltjes-Wigert statements.
pub fn mu_exponent(n: u32, q: f64) -> f64 {
    1.0 - (1.0 + q - q.powi(n as i32)).ln() / q.ln()
}

/// Alias of [`mu_exponent`] under its Stieltjes-Wigert name `alpha_n`.
pub fn alpha_n_exponent(n: u32, q: f64) -> f64 {
    mu_exponent(n, q)
}

/// `c = 1/(2 ln q)` of the Stieltjes-Wigert log-normal weight.
pub fn c_log(q: f64) -> f64 {
    1.0 / (2.0 * q.ln())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qcore::QContext;

    #[test]
    fn a_nv_factorized_form() {
        // A_{n,nu} (1-q)^2 = q^{-n} + q^n - q^{-nu} - q^nu
        for (n, nu, q) in [(1.3, 0.7, 0.5), (0.0, 0.4, 0.2), (2.0, -0.5, 0.8)] {
            let lhs = a_nv(n, nu, q) * (1.0 - q) * (1.0 - q);
            let rhs = q.powf(-n) + q.powf(n) - q.powf(-nu) - q.powf(nu);
            assert!((lhs - rhs).abs() < 1e-12 * rhs.abs().max(1.0));
        }
    }

    #[test]
    fn golden_spot_checks() {
        // frozen from an extended-precision evaluation
        let ctx = QContext::new(0.5).unwrap();
        assert!((c_nu(0.7, &ctx).unwrap() - 0.82777776863963542).abs() < 1e-13);
        assert!((a_nv(1.3, 0.7, 0.5) - 2.51335210193208457).abs() < 1e-12);
        assert!((c_cap_nv(1.2, 0.7, 0.6) - 2.93030399629789204).abs() < 1e-12);
        assert!((k_nv(1.0, 0.7, 0.6) - 10.4824283755199825).abs() < 1e-12);
        assert!((mu_exponent(3, 0.6) - 1.63618158932518671).abs() < 1e-12);
        assert!((c_log(0.5) + 0.7213475204444817).abs() < 1e-14);
    }

    #[test]
    fn mu_exponent_defining_property() {
        for q in [0.2, 0.5, 0.8] {
            for n in 1..=4u32 {
                let mu = mu_exponent(n, q);
                // q^{1-mu} = 1 + q - q^n
                assert!((q.powf(1.0 - mu) - (1.0 + q - q.powi(n as i32))).abs() < 1e-13);
            }
        }
    }

    #[test]
    fn gamma_solves_first_order_equation() {
        // D_{1/q} h / h = alpha / (1 - beta x / q) for h = (gx;q)inf/(bx;q)inf
        use crate::qcore::{q_pochhammer, PochOrder};
        use crate::qgrid::d_q_inverse;
        let ctx = QContext::new(0.6).unwrap();
        let (a, b, c) = (0.8, 1.3, 2.1);
        let q = ctx.q;
        let al = alpha_2phi1(a, b, c, q);
        let be = beta_2phi1(a, b, c, q);
        let ga = gamma_2phi1(a, b, c, q);
        let h = move |x: f64| -> crate::qcore::QResult<crate::qcore::C> {
            Ok(q_pochhammer(C::new(ga * x, 0.0), PochOrder::Infinite, &ctx)?
                / q_pochhammer(C::new(be * x, 0.0), PochOrder::Infinite, &ctx)?)
        };
        let x = 0.5;
        let lhs = d_q_inverse(&h, x, &ctx).unwrap() / h(x).unwrap();
        let rhs = al / (1.0 - be * x / q);
        assert!((lhs.re - rhs).abs() < 1e-11 * rhs.abs().max(1.0));
    }
}
