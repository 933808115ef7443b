//! Catalog records for the q-Airy pair `AI`/`BI` and the 2-phi-1
//! hypergeometric identities.

use super::aux::{alpha_2phi1, beta_2phi1, gamma_2phi1, s_gamma, t_alpha};
use super::util::*;
use super::{Check, Domain, IdentityRecord, ParamSpec, Params};
use crate::lagrangian::{Evaluator, IdentityInstance};
use crate::qcore::{C, QContext, QResult};
use crate::qgrid::d_q_inverse;
use crate::qspecial::phi;

const DQ_SUM: &[&str] = &["dq_check", "sum_check"];
const FULL_Q: (f64, f64) = (0.05, 0.95);

// -------------------------------------------------------------------------
// q-Airy records
// -------------------------------------------------------------------------

fn airy_branch(p: &Params, ctx: &QContext, use_bi: bool, n: f64) -> QResult<IdentityInstance> {
    let _ = p;
    let c = *ctx;
    let f = move |x: f64, c: &QContext| if use_bi { bi(x, c) } else { ai(x, c) };
    let lhs = ev(move |x| {
        let q = c.q;
        let bracket = 1.0 - q.powf(1.0 - n) * qn(n, &c) * qn(n - 1.0, &c) / (x * x * x);
        Ok(f(x, &c)? * x.powf(n + 1.0) * bracket)
    });
    let rhs = ev(move |x| {
        let q = c.q;
        let df = d_q_inverse(&|t| f(t, &c), x, &c)?;
        Ok((df * x - f(x / q, &c)? * (q * qn(n, &c))) * q.powf(-n) * x.powf(n - 1.0))
    });
    Ok(IdentityInstance { lhs_integrand: lhs, rhs, nh_integrand: None })
}

fn build_lap_ai(p: &Params, ctx: &QContext) -> QResult<IdentityInstance> {
    let n = p.get("n")?;
    airy_branch(p, ctx, false, n)
}

fn build_lap_bi(p: &Params, ctx: &QContext) -> QResult<IdentityInstance> {
    let n = p.get("n")?;
    airy_branch(p, ctx, true, n)
}

fn build_lap_ai_n0(p: &Params, ctx: &QContext) -> QResult<IdentityInstance> {
    airy_branch(p, ctx, false, 0.0)
}

fn build_lap_bi_n0(p: &Params, ctx: &QContext) -> QResult<IdentityInstance> {
    airy_branch(p, ctx, true, 0.0)
}

fn build_lap_ai_n1(p: &Params, ctx: &QContext) -> QResult<IdentityInstance> {
    airy_branch(p, ctx, false, 1.0)
}

fn build_lap_bi_n1(p: &Params, ctx: &QContext) -> QResult<IdentityInstance> {
    airy_branch(p, ctx, true, 1.0)
}

fn airy_sine(ctx: &QContext, use_bi: bool) -> IdentityInstance {
    let c = *ctx;
    let f = move |x: f64, c: &QContext| if use_bi { bi(x, c) } else { ai(x, c) };
    let lhs = ev(move |x| Ok(f(x, &c)? * sin_semi(x, &c)? * (1.0 + x)));
    let rhs = ev(move |x| {
        let q = c.q;
        let df = d_q_inverse(&|t| f(t, &c), x, &c)?;
        Ok(sin_semi(x / q, &c)? * df - cos_semi(x / q.sqrt(), &c)? * f(x / q, &c)?)
    });
    IdentityInstance { lhs_integrand: lhs, rhs, nh_integrand: None }
}

fn build_airy_sin_ai(_: &Params, ctx: &QContext) -> QResult<IdentityInstance> {
    Ok(airy_sine(ctx, false))
}

fn build_airy_sin_bi(_: &Params, ctx: &QContext) -> QResult<IdentityInstance> {
    Ok(airy_sine(ctx, true))
}

// -------------------------------------------------------------------------
// 2-phi-1 records
// -------------------------------------------------------------------------

fn phi_ab(a: f64, b: f64, cc: f64, shift: f64, z: f64, ctx: &QContext) -> QResult<C> {
    let q = ctx.q;
    phi(
        &[re(q.powf(a + shift)), re(q.powf(b + shift))],
        &[re(q.powf(cc + shift))],
        re(z),
        ctx,
    )
}

fn abc(p: &Params) -> QResult<(f64, f64, f64)> {
    Ok((p.get("a")?, p.get("b")?, p.get("c")?))
}

fn build_2145(p: &Params, ctx: &QContext) -> QResult<IdentityInstance> {
    let (a, b, cc) = abc(p)?;
    let c = *ctx;
    let lhs = ev(move |x| {
        Ok(phi_ab(a, b, cc, 0.0, x, &c)?
            * poch_real(re(x), a + b - cc, &c)?
            * x.powf(cc - 1.0))
    });
    let rhs = ev(move |x| {
        let q = c.q;
        Ok(phi_ab(a, b, cc, 1.0, x / q, &c)?
            * poch_real(re(x / q), a + b + 1.0 - cc, &c)?
            * (x.powf(cc) / qn(cc, &c)))
    });
    Ok(IdentityInstance { lhs_integrand: lhs, rhs, nh_integrand: None })
}

fn build_2146(p: &Params, ctx: &QContext) -> QResult<IdentityInstance> {
    let (a, b, cc) = abc(p)?;
    let c = *ctx;
    let lhs = ev(move |x| {
        let q = c.q;
        let bracket = qn(cc, &c) - x / q * qn(a + 1.0, &c) * qn(b + 1.0, &c);
        Ok(phi_ab(a, b, cc, 0.0, x, &c)?
            * poch_real(re(x), a + b - cc, &c)?
            * (x.powf(cc - 1.0) * bracket))
    });
    let rhs = ev(move |x| {
        let q = c.q;
        let inner = phi_ab(a, b, cc, 0.0, x, &c)?
            - phi_ab(a, b, cc, 1.0, x / q, &c)? * (qn(a, &c) * qn(b, &c) * x / qn(cc, &c));
        Ok(inner * poch_real(re(x / q), a + b + 1.0 - cc, &c)? * x.powf(cc))
    });
    Ok(IdentityInstance { lhs_integrand: lhs, rhs, nh_integrand: None })
}

fn build_2147(p: &Params, ctx: &QContext) -> QResult<IdentityInstance> {
    let (a, b, cc) = abc(p)?;
    let c = *ctx;
    let al = alpha_2phi1(a, b, cc, c.q);
    let lhs = ev(move |x| {
        Ok(phi_ab(a, b, cc, 0.0, x, &c)?
            * poch_real(re(x), a + b + 1.0 - cc, &c)?
            * poch_inf(re(-al * (1.0 - c.q) * x), &c)?
            * (x.powf(cc) * t_alpha(a, b, cc, x, c.q)))
    });
    let rhs = ev(move |x| {
        let q = c.q;
        let inner = phi_ab(a, b, cc, 0.0, x, &c)? - phi_ab(a, b, cc, 1.0, x / q, &c)?;
        Ok(inner
            * poch_real(re(x / q), a + b + 1.0 - cc, &c)?
            * poch_inf(re(-al * (1.0 - q) * x), &c)?
            * (x.powf(cc) * q.powf(-cc)))
    });
    Ok(IdentityInstance { lhs_integrand: lhs, rhs, nh_integrand: None })
}

fn build_2148(p: &Params, ctx: &QContext) -> QResult<IdentityInstance> {
    let (a, b, cc) = abc(p)?;
    let c = *ctx;
    let q = c.q;
    let al = alpha_2phi1(a, b, cc, q);
    let be = beta_2phi1(a, b, cc, q);
    let ga = gamma_2phi1(a, b, cc, q);
    let h = move |x: f64, c: &QContext| -> QResult<C> {
        Ok(poch_inf(re(ga * x), c)? / poch_inf(re(be * x), c)?)
    };
    let y = move |x: f64, c: &QContext| phi_ab(a, b, cc, 0.0, x, c);
    let f = move |x: f64, c: &QContext| -> QResult<C> {
        Ok(poch_real(re(x), a + b + 1.0 - cc, c)? * x.powf(cc))
    };
    let lhs = ev(move |x| Ok(f(x, &c)? * h(x, &c)? * y(x, &c)? * s_gamma(a, b, cc, x, q)));
    let rhs = ev(move |x| {
        let dh = d_q_inverse(&|t| h(t, &c), x, &c)?;
        let dy = d_q_inverse(&|t| y(t, &c), x, &c)?;
        let w = y(x / q, &c)? * dh - h(x / q, &c)? * dy;
        Ok(f(x / q, &c)? * w * (-(1.0 - q) * (1.0 - q) / al))
    });
    Ok(IdentityInstance { lhs_integrand: lhs, rhs, nh_integrand: None })
}

/// Keep `x` inside the non-terminating 2-phi-1 convergence disc and away
/// from the pole lattice of the `(beta x; q)_inf` divisor.
fn x_range_2phi1(p: &Params, ctx: &QContext) -> (f64, f64) {
    let a = p.get("a").unwrap_or(1.0);
    let b = p.get("b").unwrap_or(1.0);
    let cc = p.get("c").unwrap_or(0.6);
    let be = beta_2phi1(a, b, cc, ctx.q);
    let hi = (0.8 / be).min(0.85);
    (0.25 * hi, hi)
}

const P_N_INT: ParamSpec = ParamSpec { name: "n", domain: Domain::Int { lo: 1, hi: 4 } };
const P_A: ParamSpec = ParamSpec { name: "a", domain: Domain::Real { lo: 0.5, hi: 1.4 } };
const P_B: ParamSpec = ParamSpec { name: "b", domain: Domain::Real { lo: 0.5, hi: 1.4 } };
const P_C: ParamSpec = ParamSpec { name: "c", domain: Domain::Real { lo: 0.3, hi: 0.9 } };

pub(super) fn register(v: &mut Vec<IdentityRecord>) {

    v.push(IdentityRecord {
        id: "thm3.11-airy-ai",
        anchor: "int x^(n+1) (1 - q^(1-n)[n][n-1]/x^3) AI(x;q) d_q x \
                 = q^-n x^(n-1) (x Dqinv AI - q [n] AI(x/q;q))",
        params: &[P_N_INT],
        tolerance: 1e-9,
        strategies: DQ_SUM,
        q_domain: FULL_Q,
        check: Check::Indefinite { build: build_lap_ai, x_range: x_default },
    });
    v.push(IdentityRecord {
        id: "thm3.11-airy-bi",
        anchor: "int x^(n+1) (1 - q^(1-n)[n][n-1]/x^3) BI(x;q) d_q x \
                 = q^-n x^(n-1) (x Dqinv BI - q [n] BI(x/q;q))",
        params: &[P_N_INT],
        tolerance: 1e-9,
        strategies: DQ_SUM,
        q_domain: FULL_Q,
        check: Check::Indefinite { build: build_lap_bi, x_range: x_default },
    });
    v.push(IdentityRecord {
        id: "cor-airy-ai-x",
        anchor: "int x AI(x;q) d_q x = Dqinv AI(x;q)",
        params: &[],
        tolerance: 1e-9,
        strategies: DQ_SUM,
        q_domain: FULL_Q,
        check: Check::Indefinite { build: build_lap_ai_n0, x_range: x_default },
    });
    v.push(IdentityRecord {
        id: "cor-airy-bi-x",
        anchor: "int x BI(x;q) d_q x = Dqinv BI(x;q)",
        params: &[],
        tolerance: 1e-9,
        strategies: DQ_SUM,
        q_domain: FULL_Q,
        check: Check::Indefinite { build: build_lap_bi_n0, x_range: x_default },
    });
    v.push(IdentityRecord {
        id: "cor-airy-ai-x2",
        anchor: "int x^2 AI(x;q) d_q x = -AI(x/q;q) + (x/q) Dqinv AI(x;q)",
        params: &[],
        tolerance: 1e-9,
        strategies: DQ_SUM,
        q_domain: FULL_Q,
        check: Check::Indefinite { build: build_lap_ai_n1, x_range: x_default },
    });
    v.push(IdentityRecord {
        id: "cor-airy-bi-x2",
        anchor: "int x^2 BI(x;q) d_q x = -BI(x/q;q) + (x/q) Dqinv BI(x;q)",
        params: &[],
        tolerance: 1e-9,
        strategies: DQ_SUM,
        q_domain: FULL_Q,
        check: Check::Indefinite { build: build_lap_bi_n1, x_range: x_default },
    });
    v.push(IdentityRecord {
        id: "thm3.12-airy-sin-ai",
        anchor: "int (1+x) sin(x;q) AI(x;q) d_q x \
                 = sin(x/q;q) Dqinv AI - cos(q^(-1/2)x;q) AI(x/q;q)",
        params: &[],
        tolerance: 1e-9,
        strategies: DQ_SUM,
        q_domain: FULL_Q,
        check: Check::Indefinite { build: build_airy_sin_ai, x_range: x_default },
    });
    v.push(IdentityRecord {
        id: "thm3.12-airy-sin-bi",
        anchor: "int (1+x) sin(x;q) BI(x;q) d_q x \
                 = sin(x/q;q) Dqinv BI - cos(q^(-1/2)x;q) BI(x/q;q)",
        params: &[],
        tolerance: 1e-9,
        strategies: DQ_SUM,
        q_domain: FULL_Q,
        check: Check::Indefinite { build: build_airy_sin_bi, x_range: x_default },
    });
    v.push(IdentityRecord {
        id: "thm3.13-2phi1-2145",
        anchor: "int x^(c-1) (x;q)_(a+b-c) phi(q^a,q^b;q^c;q,x) d_q x \
                 = x^c/[c] (x/q;q)_(a+b+1-c) phi(q^(a+1),q^(b+1);q^(c+1);q,x/q)",
        params: &[P_A, P_B, P_C],
        tolerance: 1e-8,
        strategies: DQ_SUM,
        q_domain: FULL_Q,
        check: Check::Indefinite { build: build_2145, x_range: x_range_2phi1 },
    });
    v.push(IdentityRecord {
        id: "thm3.13-2phi1-2146",
        anchor: "int x^(c-1) (x;q)_(a+b-c) ([c] - (x/q)[a+1][b+1]) phi d_q x \
                 = x^c (x/q;q)_(a+b+1-c) (phi(x) - [a][b] x/[c] phi_+(x/q))",
        params: &[P_A, P_B, P_C],
        tolerance: 1e-8,
        strategies: DQ_SUM,
        q_domain: FULL_Q,
        check: Check::Indefinite { build: build_2146, x_range: x_range_2phi1 },
    });
    v.push(IdentityRecord {
        id: "thm3.13-2phi1-2147",
        anchor: "int x^c (x;q)_(a+b+1-c) (-alpha(1-q)x;q)_inf T_alpha(x) phi d_q x \
                 = q^-c x^c (x/q;q)_(a+b+1-c) (-alpha(1-q)x;q)_inf (phi(x) - phi_+(x/q))",
        params: &[P_A, P_B, P_C],
        tolerance: 1e-8,
        strategies: DQ_SUM,
        q_domain: FULL_Q,
        check: Check::Indefinite { build: build_2147, x_range: x_range_2phi1 },
    });
    v.push(IdentityRecord {
        id: "thm3.13-2phi1-2148",
        anchor: "int x^c (gamma x;q)_inf (x;q)_(a+b+1-c)/(beta x;q)_inf S_gamma(x) phi d_q x \
                 = -((1-q)^2/alpha) f(x/q) (phi(x/q) Dqinv h - h(x/q) Dqinv phi); \
                 h = (gamma x;q)_inf/(beta x;q)_inf, gamma = beta - (1-q) alpha",
        params: &[P_A, P_B, P_C],
        tolerance: 1e-8,
        strategies: DQ_SUM,
        q_domain: FULL_Q,
        check: Check::Indefinite { build: build_2148, x_range: x_range_2phi1 },
    });
}

// silence unused-import lint for Evaluator, which the builders return inside
// IdentityInstance
#[allow(unused)]
fn _t(_: Evaluator) {}
