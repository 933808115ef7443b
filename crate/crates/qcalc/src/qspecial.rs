//! Evaluators for the q-special functions used by the identity catalog.
//!
//! All series are reduced to term recurrences with the [`QContext`] stopping
//! policy; terminating basic hypergeometric series are summed with exact term
//! counts (the vanishing factor `1 - q^{k-n}` is formed from the integer
//! exponent, so it is an exact zero).

use crate::qcore::{
    ensure_finite, q_gamma, q_number_re, q_pochhammer, q_pow, C, PochOrder, QContext, QError,
    QResult,
};

fn c(re: f64) -> C {
    C::new(re, 0.0)
}

const ONE: C = C::new(1.0, 0.0);

// ---------------------------------------------------------------------------
// basic hypergeometric series
// ---------------------------------------------------------------------------

/// Basic hypergeometric series `r_phi_s(num; den; q, z)` with the
/// `[(-1)^k q^{C(k,2)}]^{1+s-r}` convention.
///
/// A numerator parameter within `1e-10` of `q^{-n}` (n a non-negative
/// integer) terminates the series after `n + 1` terms. A denominator
/// parameter of the form `q^{-m}` that zeroes a factor before termination is
/// a pole.
pub fn phi(num: &[C], den: &[C], z: C, ctx: &QContext) -> QResult<C> {
    ensure_finite(z, "phi argument")?;
    let q = ctx.q;
    // detect termination at the smallest n with num[i] = q^{-n}
    let mut terminate: Option<usize> = None;
    for a in num {
        if a.im == 0.0 && a.re > 1.0 {
            let n = -(a.re.ln() / q.ln());
            let nr = n.round();
            if nr >= 0.0 && (n - nr).abs() < 1e-10 * n.abs().max(1.0) {
                let nr = nr as usize;
                terminate = Some(terminate.map_or(nr, |t: usize| t.min(nr)));
            }
        }
    }
    let e = 1 + den.len() as i32 - num.len() as i32;
    let mut total = C::new(0.0, 0.0);
    let mut term = ONE;
    let mut qk = 1.0;
    let mut small = 0usize;
    for k in 0..ctx.max_terms {
        total += term;
        if let Some(n) = terminate {
            if k >= n {
                return Ok(total);
            }
        }
        let mut ratio = z;
        for a in num {
            ratio *= ONE - a * qk;
        }
        for b in den {
            let f = ONE - b * qk;
            if f.norm() < 1e-13 {
                return Err(QError::Pole(format!("phi denominator factor vanishes at k = {k}")));
            }
            ratio /= f;
        }
        ratio /= 1.0 - q * qk;
        if e != 0 {
            ratio *= c(-qk).powi(e);
        }
        term *= ratio;
        ensure_finite(term, "phi term")?;
        if term.norm() <= ctx.term_tol * total.norm().max(1.0) {
            small += 1;
            if small >= ctx.consecutive_small {
                return Ok(total + term);
            }
        } else {
            small = 0;
        }
        qk *= q;
    }
    Err(QError::NoConvergence { what: "phi", terms: ctx.max_terms })
}

// ---------------------------------------------------------------------------
// Jackson q-Bessel functions
// ---------------------------------------------------------------------------

/// The three Jackson q-Bessel functions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BesselKind {
    /// Series convergent for `|z| < 2` only.
    J1,
    /// Entire; extra factor `q^{n(n+nu)}`.
    J2,
    /// Entire; factor `q^{n(n+1)/2}` and argument `z^{2n+nu}` (no halving).
    J3,
}

/// `J_nu^{(kind)}(z; q)` with the base taken from `ctx.q`.
pub fn bessel_j(kind: BesselKind, nu: C, z: C, ctx: &QContext) -> QResult<C> {
    ensure_finite(nu, "bessel_j order")?;
    ensure_finite(z, "bessel_j argument")?;
    let q = ctx.q;
    if kind == BesselKind::J1 && z.norm() >= 2.0 {
        return Err(QError::Domain(format!(
            "J1 series requires |z| < 2, got |z| = {}",
            z.norm()
        )));
    }
    let half = match kind {
        BesselKind::J3 => z,
        _ => z / 2.0,
    };
    // z^nu factor on the principal branch; zero argument needs Re nu > 0
    if half.norm() == 0.0 {
        return if nu.re > 0.0 {
            Ok(C::new(0.0, 0.0))
        } else if nu.norm() == 0.0 {
            let pref = q_pochhammer(q_pow(q, nu + ONE), PochOrder::Infinite, ctx)?
                / q_pochhammer(c(q), PochOrder::Infinite, ctx)?;
            Ok(pref)
        } else {
            Err(QError::Domain("bessel_j at z = 0 needs Re nu >= 0".into()))
        };
    }
    let qnu1 = q_pow(q, nu + ONE);
    let pref = q_pochhammer(qnu1, PochOrder::Infinite, ctx)?
        / q_pochhammer(c(q), PochOrder::Infinite, ctx)?;
    let zsq = half * half;
    let mut term = half.powc(nu);
    let mut total = C::new(0.0, 0.0);
    let mut qk = 1.0; // q^n
    let mut small = 0usize;
    for n in 0..ctx.max_terms {
        total += term;
        let d1 = 1.0 - q * qk;
        let d2 = ONE - qnu1 * qk;
        if d2.norm() < 1e-13 {
            return Err(QError::Pole(format!("(q^{{nu+1}};q)_n vanishes at n = {n}")));
        }
        let extra = match kind {
            BesselKind::J1 => ONE,
            BesselKind::J2 => q_pow(q, nu + c(2.0 * n as f64 + 1.0)),
            BesselKind::J3 => c(q.powi(n as i32 + 1)),
        };
        term *= -zsq * extra / (d1 * d2);
        ensure_finite(term, "bessel_j term")?;
        if term.norm() <= ctx.term_tol * total.norm().max(1.0) {
            small += 1;
            if small >= ctx.consecutive_small {
                return Ok(pref * (total + term));
            }
        } else {
            small = 0;
        }
        qk *= q;
    }
    Err(QError::NoConvergence { what: "bessel_j", terms: ctx.max_terms })
}

/// Scaled-argument shorthand `J_nu^{(kind)}(lambda x | q^2)
/// = J_nu^{(kind)}(2 lambda x (1-q); q^2)`, with `ctx.q` the ambient base.
pub fn bessel_j_scaled(kind: BesselKind, nu: C, lambda: C, x: f64, ctx: &QContext) -> QResult<C> {
    let z = lambda * 2.0 * x * (1.0 - ctx.q);
    bessel_j(kind, nu, z, &ctx.base_sq())
}

// ---------------------------------------------------------------------------
// q-trigonometric functions
// ---------------------------------------------------------------------------

/// The three q-analog pairs of sine and cosine.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TrigKind {
    /// `sin_q`, radius of convergence `1/(1-q)`.
    SinSmall,
    /// `cos_q`, radius of convergence `1/(1-q)`.
    CosSmall,
    /// Entire `S_q` with `q^{2n^2+n}` damping.
    SinCap,
    /// Entire `C_q` with `q^{2n^2-n}` damping.
    CosCap,
    /// Entire `sin(z;q)` with `q^{n^2+n}` damping.
    SinSemi,
    /// Entire `cos(z;q)` with `q^{n^2}` damping.
    CosSemi,
}

impl TrigKind {
    pub fn is_sine(self) -> bool {
        matches!(self, TrigKind::SinSmall | TrigKind::SinCap | TrigKind::SinSemi)
    }
}

/// Evaluate a q-trigonometric series.
pub fn q_trig(kind: TrigKind, z: C, ctx: &QContext) -> QResult<C> {
    ensure_finite(z, "q_trig argument")?;
    let q = ctx.q;
    if matches!(kind, TrigKind::SinSmall | TrigKind::CosSmall) && z.norm() >= 1.0 / (1.0 - q) {
        return Err(QError::Domain(format!(
            "sin_q/cos_q need |z| < 1/(1-q) = {}, got |z| = {}",
            1.0 / (1.0 - q),
            z.norm()
        )));
    }
    let zsq = z * z;
    let mut term = if kind.is_sine() { z } else { ONE };
    let mut total = C::new(0.0, 0.0);
    let mut small = 0usize;
    for n in 0..ctx.max_terms {
        total += term;
        let nf = n as f64;
        // ratio of q-power damping between consecutive terms
        let damp = match kind {
            TrigKind::SinSmall | TrigKind::CosSmall => 1.0,
            TrigKind::SinCap => q.powf(4.0 * nf + 3.0),
            TrigKind::CosCap => q.powf(4.0 * nf + 1.0),
            TrigKind::SinSemi => q.powf(2.0 * nf + 2.0),
            TrigKind::CosSemi => q.powf(2.0 * nf + 1.0),
        };
        let (m1, m2) = if kind.is_sine() {
            (2.0 * nf + 2.0, 2.0 * nf + 3.0)
        } else {
            (2.0 * nf + 1.0, 2.0 * nf + 2.0)
        };
        term *= -zsq * damp / (q_number_re(m1, ctx) * q_number_re(m2, ctx));
        ensure_finite(term, "q_trig term")?;
        if term.norm() <= ctx.term_tol * total.norm().max(1.0) {
            small += 1;
            if small >= ctx.consecutive_small {
                return Ok(total + term);
            }
        } else {
            small = 0;
        }
    }
    Err(QError::NoConvergence { what: "q_trig", terms: ctx.max_terms })
}

// ---------------------------------------------------------------------------
// q-Bessel-Struve functions
// ---------------------------------------------------------------------------

/// The three q-Bessel-Struve functions, companions of the three q-Bessel
/// kinds through the trig kernel in their defining q-integral.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StruveKind {
    H1,
    H2,
    H3,
}

/// `H_nu^{(kind)}(z; q^2)` from its defining Jackson q-integral over `[0,1]`
/// with kernel `(q^2 t^2; q^2)_{nu - 1/2}` and the matching trig function
/// (`sin_q` for H1, `S_q` for H2, `sin(.;q)` for H3).
///
/// Requires `Re nu > -1/2`. For H1 the inner `sin_q` argument `z t` must stay
/// inside its radius `1/(1-q)` for all grid `t` in `(0, 1]`.
pub fn struve_h(kind: StruveKind, nu: C, z: C, ctx: &QContext) -> QResult<C> {
    ensure_finite(nu, "struve_h order")?;
    ensure_finite(z, "struve_h argument")?;
    if nu.re <= -0.5 {
        return Err(QError::Domain(format!("struve_h needs Re(nu) > -1/2, got {}", nu.re)));
    }
    let q = ctx.q;
    if kind == StruveKind::H1 && z.norm() >= 1.0 / (1.0 - q) {
        return Err(QError::Domain(format!(
            "H1 needs |z| < 1/(1-q) = {} for the inner sin_q, got |z| = {}",
            1.0 / (1.0 - q),
            z.norm()
        )));
    }
    if z.norm() == 0.0 {
        return if nu.re > 0.0 {
            Ok(C::new(0.0, 0.0))
        } else {
            Err(QError::Domain("struve_h at z = 0 needs Re nu > 0".into()))
        };
    }
    let q2 = q * q;
    let ctx2 = ctx.base_sq();
    let trig = match kind {
        StruveKind::H1 => TrigKind::SinSmall,
        StruveKind::H2 => TrigKind::SinCap,
        StruveKind::H3 => TrigKind::SinSemi,
    };

    // depth of the t-grid: far enough that q^j contributions die out
    let depth = ((ctx.term_tol.ln() / q.ln()).ceil() as usize + 16).min(ctx.max_terms);
    // kernel tables on t = q^j:
    //   a[j] = (q^{2j+2}; q^2)_inf,   b[j] = (q^{2 nu + 1 + 2j}; q^2)_inf
    let mut a = vec![0.0f64; depth + 1];
    let mut b = vec![C::new(0.0, 0.0); depth + 1];
    a[depth] = q_pochhammer(c(q2.powi(depth as i32 + 1)), PochOrder::Infinite, &ctx2)?.re;
    b[depth] = q_pochhammer(
        q_pow(q, nu * 2.0 + ONE) * q.powi(2 * depth as i32),
        PochOrder::Infinite,
        &ctx2,
    )?;
    for j in (0..depth).rev() {
        a[j] = (1.0 - q2.powi(j as i32 + 1)) * a[j + 1];
        b[j] = (ONE - q_pow(q, nu * 2.0 + ONE) * q.powi(2 * j as i32)) * b[j + 1];
    }

    // Jackson sum of the defining integral over [0, 1]
    let mut sum = C::new(0.0, 0.0);
    let mut qj = 1.0;
    let mut small = 0usize;
    let mut converged = false;
    for j in 0..=depth {
        if b[j].norm() == 0.0 {
            return Err(QError::Pole("struve kernel divisor vanishes".into()));
        }
        let w = a[j] / b[j];
        let term = w * q_trig(trig, z * qj, ctx)? * qj;
        sum += term;
        if term.norm() <= ctx.term_tol * sum.norm().max(1.0) {
            small += 1;
            if small >= ctx.consecutive_small {
                converged = true;
                break;
            }
        } else {
            small = 0;
        }
        qj *= q;
    }
    if !converged && depth + 1 >= ctx.max_terms {
        return Err(QError::NoConvergence { what: "struve_h", terms: ctx.max_terms });
    }
    let integral = sum * (1.0 - q);

    let gamma_half = q_gamma(c(0.5), &ctx2)?;
    let gamma_nu = q_gamma(nu + 0.5, &ctx2)?;
    let pref = match kind {
        StruveKind::H1 => (z / (1.0 - q2)).powc(nu) * (1.0 + q),
        StruveKind::H2 => {
            let s = q_pow(q, -(nu + 0.5));
            s * (s * z / (1.0 - q2)).powc(nu) * (1.0 + q)
        }
        StruveKind::H3 => (z / (1.0 + q)).powc(nu) * (1.0 + q),
    };
    Ok(pref / (gamma_half * gamma_nu) * integral)
}

/// Scaled-argument shorthand for the Struve functions, chosen so that
/// `H_nu(lambda x | q^2)` satisfies its stated nonhomogeneous second-order
/// q-difference equation:
///
/// - H3: plain argument `lambda x`;
/// - H2: `(1-q)^nu H2(q^{nu+1/2} lambda x; q^2)`;
/// - H1: `(1-q)^nu H1(lambda x; q^2)`.
pub fn struve_h_scaled(kind: StruveKind, nu: f64, lambda: f64, x: f64, ctx: &QContext) -> QResult<C> {
    let q = ctx.q;
    match kind {
        StruveKind::H3 => struve_h(StruveKind::H3, c(nu), c(lambda * x), ctx),
        StruveKind::H2 => {
            let arg = q.powf(nu + 0.5) * lambda * x;
            Ok(struve_h(StruveKind::H2, c(nu), c(arg), ctx)? * (1.0 - q).powf(nu))
        }
        StruveKind::H1 => {
            Ok(struve_h(StruveKind::H1, c(nu), c(lambda * x), ctx)? * (1.0 - q).powf(nu))
        }
    }
}

// ---------------------------------------------------------------------------
// q-Airy functions
// ---------------------------------------------------------------------------

/// The two entire Airy-type solutions of
/// `(1/q) D_{1/q} D_q y = x y`: `AI` (constant term 1, powers `x^{3m}`)
/// and `BI` (leading term `x`, powers `x^{3m+1}`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AiryBranch {
    AI,
    BI,
}

pub fn airy_pair(which: AiryBranch, x: C, ctx: &QContext) -> QResult<C> {
    ensure_finite(x, "airy argument")?;
    let q = ctx.q;
    let cube = x * x * x * (1.0 - q) * (1.0 - q);
    let mut term = match which {
        AiryBranch::AI => ONE,
        AiryBranch::BI => x,
    };
    let mut total = C::new(0.0, 0.0);
    let mut small = 0usize;
    for m in 0..ctx.max_terms {
        total += term;
        let mf = m as i32;
        let ratio = match which {
            AiryBranch::AI => {
                c(q.powi(3 * mf + 2)) / ((1.0 - q.powi(3 * mf + 3)) * (1.0 - q.powi(3 * mf + 2)))
            }
            AiryBranch::BI => {
                c(q.powi(3 * mf + 3)) / ((1.0 - q.powi(3 * mf + 3)) * (1.0 - q.powi(3 * mf + 4)))
            }
        };
        term *= cube * ratio;
        ensure_finite(term, "airy term")?;
        if term.norm() <= ctx.term_tol * total.norm().max(1.0) {
            small += 1;
            if small >= ctx.consecutive_small {
                return Ok(total + term);
            }
        } else {
            small = 0;
        }
    }
    Err(QError::NoConvergence { what: "airy_pair", terms: ctx.max_terms })
}

/// Airy-type entire series in the base `sqrt(q)` of the context, normalized
/// by `y(0) = 1`, `y'(0) = 1/(1-q)`, and defined as the solution of
///
/// `(1/q) D_{1/q} D_q y + x / (sqrt(q)(1-q)) D_q y - y / (sqrt(q)(1-q)^2) = 0`
///
/// via the coefficient recurrence
/// `c_{n+2} = c_n q^{2n + 1/2} / ((1 - q^{n+1})(1 - q^{n+2}))`.
pub fn airy_sqrtq(x: C, ctx: &QContext) -> QResult<C> {
    ensure_finite(x, "airy_sqrtq argument")?;
    let q = ctx.q;
    let mut c0 = ONE; // coefficient chain starting at n
    let mut c1 = c(1.0 / (1.0 - q));
    let mut p0 = ONE; // x^n
    let mut p1 = x;
    let mut total = C::new(0.0, 0.0);
    let mut small = 0usize;
    let mut n = 0usize;
    while n < ctx.max_terms {
        let t0 = c0 * p0;
        let t1 = c1 * p1;
        total += t0 + t1;
        let mag = t0.norm().max(t1.norm());
        if mag <= ctx.term_tol * total.norm().max(1.0) {
            small += 1;
            if small >= ctx.consecutive_small {
                return Ok(total);
            }
        } else {
            small = 0;
        }
        let nf = n as f64;
        c0 *= c(q.powf(2.0 * nf + 0.5)) / ((1.0 - q.powi(n as i32 + 1)) * (1.0 - q.powi(n as i32 + 2)));
        c1 *= c(q.powf(2.0 * (nf + 1.0) + 0.5))
            / ((1.0 - q.powi(n as i32 + 2)) * (1.0 - q.powi(n as i32 + 3)));
        p0 *= x * x;
        p1 *= x * x;
        ensure_finite(c0 * p0, "airy_sqrtq term")?;
        n += 2;
    }
    Err(QError::NoConvergence { what: "airy_sqrtq", terms: ctx.max_terms })
}

// ---------------------------------------------------------------------------
// q-orthogonal polynomials
// ---------------------------------------------------------------------------

/// Orthogonal polynomial families, each carrying its parameters and degree.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum PolyFamily {
    /// `p_n(x; a, b; q)`, terminating 3-phi-2.
    BigQLaguerre { n: u32, a: f64, b: f64 },
    /// `L_n^alpha(x; q)`, `alpha > -1`.
    QLaguerre { n: u32, alpha: f64 },
    /// Stieltjes-Wigert `S_n(x; q)`.
    StieltjesWigert { n: u32 },
    /// Discrete q-Hermite I `h_n(x; q)`.
    QHermiteI { n: u32 },
    /// Discrete q-Hermite II, evaluated through its expanded monomial form
    /// (the raw 2-phi-1 has a removable `1/x^2` in its argument).
    QHermiteII { n: u32 },
    /// Little q-Legendre `p_n(x | q)`.
    LittleQLegendre { n: u32 },
    /// Big q-Legendre `p_n(x; c; q)`, `c != 0`.
    BigQLegendre { n: u32, c: f64 },
}

impl PolyFamily {
    pub fn degree(&self) -> u32 {
        match *self {
            PolyFamily::BigQLaguerre { n, .. }
            | PolyFamily::QLaguerre { n, .. }
            | PolyFamily::StieltjesWigert { n }
            | PolyFamily::QHermiteI { n }
            | PolyFamily::QHermiteII { n }
            | PolyFamily::LittleQLegendre { n }
            | PolyFamily::BigQLegendre { n, .. } => n,
        }
    }

    fn validate(&self) -> QResult<()> {
        match *self {
            PolyFamily::QLaguerre { alpha, .. } if alpha <= -1.0 => {
                Err(QError::Domain(format!("q-Laguerre needs alpha > -1, got {alpha}")))
            }
            PolyFamily::BigQLaguerre { a, b, .. } if a == 0.0 || b == 0.0 => {
                Err(QError::Domain("big q-Laguerre needs a, b != 0".into()))
            }
            PolyFamily::BigQLegendre { c, .. } if c == 0.0 => {
                Err(QError::Domain("big q-Legendre needs c != 0".into()))
            }
            _ => Ok(()),
        }
    }
}

/// Evaluate an orthogonal polynomial at `x` (exact terminating sums).
pub fn ortho_poly(family: &PolyFamily, x: C, ctx: &QContext) -> QResult<C> {
    family.validate()?;
    ensure_finite(x, "ortho_poly argument")?;
    let q = ctx.q;
    match *family {
        PolyFamily::BigQLaguerre { n, a, b } => {
            // 3phi2(q^{-n}, 0, x; aq, bq; q, q) -- the 0 parameter kills the
            // (-1)^k q^{C(k,2)} exponent: 1 + 2 - 3 = 0.
            let mut total = C::new(0.0, 0.0);
            let mut term = ONE;
            for k in 0..=n {
                total += term;
                if k == n {
                    break;
                }
                let ki = k as i32;
                let fac = (1.0 - q.powi(ki - n as i32)) * q / ((1.0 - a * q.powi(ki + 1)) * (1.0 - b * q.powi(ki + 1)) * (1.0 - q.powi(ki + 1)));
                term *= (ONE - x * q.powi(ki)) * fac;
            }
            Ok(total)
        }
        PolyFamily::QLaguerre { n, alpha } => {
            // (1/(q;q)_n) 2phi1(q^{-n}, -x; 0; q, q^{n+alpha+1})
            let z = q.powf(n as f64 + alpha + 1.0);
            let mut total = C::new(0.0, 0.0);
            let mut term = ONE;
            for k in 0..=n {
                total += term;
                if k == n {
                    break;
                }
                let ki = k as i32;
                term *= (1.0 - q.powi(ki - n as i32)) * (ONE + x * q.powi(ki)) * z
                    / (1.0 - q.powi(ki + 1));
            }
            Ok(total / poch_qpos(1, n, q))
        }
        PolyFamily::StieltjesWigert { n } => {
            // (1/(q;q)_n) 1phi1(q^{-n}; 0; q, -q^{n+1} x)
            let mut total = C::new(0.0, 0.0);
            let mut term = ONE;
            for k in 0..=n {
                total += term;
                if k == n {
                    break;
                }
                let ki = k as i32;
                // ratio carries (-1) q^{k} from the 1phi1 convention and -q^{n+1}x
                term *= (1.0 - q.powi(ki - n as i32)) * q.powi(ki) * q.powi(n as i32 + 1) * x
                    / (1.0 - q.powi(ki + 1));
            }
            Ok(total / poch_qpos(1, n, q))
        }
        PolyFamily::QHermiteI { n } => {
            // q^{C(n,2)} sum_k (q^{-n};q)_k / (q;q)_k (-q)^k prod_{j<k}(x - q^j)
            let mut total = C::new(0.0, 0.0);
            let mut coeff = 1.0;
            let mut prod = ONE;
            for k in 0..=n {
                total += prod * coeff;
                if k == n {
                    break;
                }
                let ki = k as i32;
                coeff *= (1.0 - q.powi(ki - n as i32)) * (-q) / (1.0 - q.powi(ki + 1));
                prod *= x - q.powi(ki);
            }
            Ok(total * q.powi((n as i32 * (n as i32 - 1)) / 2))
        }
        PolyFamily::QHermiteII { n } => {
            // sum_{k <= n/2} (q^{-n};q^2)_k (q^{1-n};q^2)_k / (q^2;q^2)_k (-q^2)^k x^{n-2k}
            let q2 = q * q;
            let kmax = n / 2;
            let mut total = C::new(0.0, 0.0);
            let mut coeff = 1.0;
            let xp = |p: u32| -> C {
                if p == 0 {
                    ONE
                } else {
                    x.powi(p as i32)
                }
            };
            for k in 0..=kmax {
                total += xp(n - 2 * k) * coeff;
                if k == kmax {
                    break;
                }
                let e = 2 * k as i32;
                coeff *= (1.0 - q.powi(e - n as i32)) * (1.0 - q.powi(e + 1 - n as i32)) * (-q2)
                    / (1.0 - q2.powi(k as i32 + 1));
            }
            Ok(total)
        }
        PolyFamily::LittleQLegendre { n } => {
            // 2phi1(q^{-n}, q^{n+1}; q; q, qx)
            let mut total = C::new(0.0, 0.0);
            let mut term = ONE;
            for k in 0..=n {
                total += term;
                if k == n {
                    break;
                }
                let ki = k as i32;
                term *= (1.0 - q.powi(ki - n as i32)) * (1.0 - q.powi(ki + n as i32 + 1)) * q * x
                    / ((1.0 - q.powi(ki + 1)) * (1.0 - q.powi(ki + 1)));
            }
            Ok(total)
        }
        PolyFamily::BigQLegendre { n, c: cc } => {
            // 3phi2(q^{-n}, q^{n+1}, x; q, cq; q, q)
            let mut total = C::new(0.0, 0.0);
            let mut term = ONE;
            for k in 0..=n {
                total += term;
                if k == n {
                    break;
                }
                let ki = k as i32;
                term *= (1.0 - q.powi(ki - n as i32)) * (1.0 - q.powi(ki + n as i32 + 1)) * (ONE - x * q.powi(ki)) * q
                    / ((1.0 - q.powi(ki + 1)) * (1.0 - cc * q.powi(ki + 1)) * (1.0 - q.powi(ki + 1)));
            }
            Ok(total)
        }
    }
}

/// `(q^e; q)_n` for a positive integer exponent `e`.
fn poch_qpos(e: i32, n: u32, q: f64) -> f64 {
    let mut acc = 1.0;
    for j in 0..n as i32 {
        acc *= 1.0 - q.powi(e + j);
    }
    acc
}

/// Orthogonality weight of a polynomial family at `x` (closed form).
///
/// For Stieltjes-Wigert this is the log-normal weight
/// `-c/sqrt(pi) e^{c ln^2 x}` with `c = 1/(2 ln q)`; the alternative product
/// weight is [`sw_product_weight`].
pub fn weight(family: &PolyFamily, x: f64, ctx: &QContext) -> QResult<f64> {
    family.validate()?;
    let q = ctx.q;
    match *family {
        PolyFamily::QLaguerre { alpha, .. } => {
            if x <= 0.0 {
                return Err(QError::Domain("q-Laguerre weight needs x > 0".into()));
            }
            let den = q_pochhammer(c(-x), PochOrder::Infinite, ctx)?.re;
            Ok(x.powf(alpha) / den)
        }
        PolyFamily::BigQLaguerre { a, b, .. } => {
            let den = q_pochhammer(c(x), PochOrder::Infinite, ctx)?.re;
            if den == 0.0 {
                return Err(QError::Pole(format!("(x;q)_inf vanishes at x = {x}")));
            }
            let num = q_pochhammer(c(x / b), PochOrder::Infinite, ctx)?.re
                * q_pochhammer(c(x / a), PochOrder::Infinite, ctx)?.re;
            Ok(num / den)
        }
        PolyFamily::StieltjesWigert { .. } => {
            if x <= 0.0 {
                return Err(QError::Domain("Stieltjes-Wigert weight needs x > 0".into()));
            }
            let cc = 1.0 / (2.0 * q.ln());
            Ok(-cc / std::f64::consts::PI.sqrt() * (cc * x.ln() * x.ln()).exp())
        }
        PolyFamily::QHermiteI { .. } => {
            Ok(q_pochhammer(c(q * q * x * x), PochOrder::Infinite, &ctx.base_sq())?.re)
        }
        PolyFamily::QHermiteII { .. } => {
            Ok(1.0 / q_pochhammer(c(-x * x), PochOrder::Infinite, &ctx.base_sq())?.re)
        }
        PolyFamily::LittleQLegendre { .. } | PolyFamily::BigQLegendre { .. } => Err(
            QError::Domain("no closed-form weight wired for the q-Legendre families".into()),
        ),
    }
}

/// The Stieltjes-Wigert product weight `x^2 / ((-x; q)_inf (-q/x; q)_inf)`.
pub fn sw_product_weight(x: f64, ctx: &QContext) -> QResult<f64> {
    Ok(x * x * sw_orthogonality_weight(x, ctx)?)
}

/// `1 / ((-x; q)_inf (-q/x; q)_inf)`, the weight in the Stieltjes-Wigert
/// improper orthogonality relation. Decays super-polynomially at both ends of
/// `(0, inf)`; returns 0 where the divisor overflows.
pub fn sw_orthogonality_weight(x: f64, ctx: &QContext) -> QResult<f64> {
    if x <= 0.0 {
        return Err(QError::Domain("weight needs x > 0".into()));
    }
    // log-space product to survive the huge factors near 0 and infinity
    let q = ctx.q;
    let mut log_den = 0.0f64;
    let mut qj = 1.0;
    for _ in 0..ctx.max_terms {
        let f1 = 1.0 + x * qj;
        let f2 = 1.0 + q * qj / x;
        log_den += f1.ln() + f2.ln();
        if x * qj < ctx.term_tol && q * qj / x < ctx.term_tol {
            break;
        }
        qj *= q;
    }
    Ok((-log_den).exp())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qgrid::d_q;

    fn ctx(q: f64) -> QContext {
        QContext::new(q).unwrap()
    }

    fn relerr(a: C, b: C) -> f64 {
        (a - b).norm() / a.norm().max(b.norm()).max(1.0)
    }

    #[test]
    fn phi_trivial_cases() {
        let cx = ctx(0.5);
        // 2phi1(a, b; c; q, 0) = 1
        let v = phi(&[c(0.3), c(0.7)], &[c(0.2)], c(0.0), &cx).unwrap();
        assert_eq!(v, ONE);
        // terminating two-term series with numerator q^{-1}
        let (a, b, cc, z) = (2.0, 0.6, 0.25, 0.4);
        let v = phi(&[c(a), c(b)], &[c(cc)], c(z), &cx).unwrap();
        let expect = 1.0 + (1.0 - a) * (1.0 - b) / ((1.0 - cc) * (1.0 - 0.5)) * z;
        assert!((v.re - expect).abs() < 1e-14);
    }

    #[test]
    fn phi_denominator_pole_detected() {
        let cx = ctx(0.5);
        // denominator q^{-2} hits a zero factor at k = 2 in a non-terminating series
        let den = c(0.5f64.powi(-2));
        assert!(matches!(
            phi(&[c(0.3), c(0.7)], &[den], c(0.2), &cx),
            Err(QError::Pole(_))
        ));
    }

    #[test]
    fn bessel_domain_and_trivial() {
        let cx = ctx(0.5);
        assert!(bessel_j(BesselKind::J1, c(0.3), c(2.5), &cx).is_err());
        let v = bessel_j(BesselKind::J3, c(0.5), c(0.0), &cx).unwrap();
        assert_eq!(v, C::new(0.0, 0.0));
        let v = bessel_j_scaled(BesselKind::J2, c(0.5), c(0.0), 1.0, &cx).unwrap();
        assert_eq!(v, C::new(0.0, 0.0));
    }

    #[test]
    fn hahn_relation_same_base() {
        // J1(z;q) = J2(z;q) / (-z^2/4; q)_inf on a small lattice
        for q in [0.3, 0.5, 0.7] {
            let cx = ctx(q);
            for nu in [0.3, 1.2] {
                for z in [0.4, 0.8, 1.5] {
                    let j1 = bessel_j(BesselKind::J1, c(nu), c(z), &cx).unwrap();
                    let j2 = bessel_j(BesselKind::J2, c(nu), c(z), &cx).unwrap();
                    let w = q_pochhammer(c(-z * z / 4.0), PochOrder::Infinite, &cx).unwrap();
                    assert!(relerr(j1, j2 / w) < 1e-10, "q={q} nu={nu} z={z}");
                }
            }
        }
    }

    #[test]
    fn trig_parity_and_values() {
        let cx = ctx(0.5);
        for kind in [
            TrigKind::SinSmall,
            TrigKind::SinCap,
            TrigKind::SinSemi,
            TrigKind::CosSmall,
            TrigKind::CosCap,
            TrigKind::CosSemi,
        ] {
            let at0 = q_trig(kind, c(0.0), &cx).unwrap();
            if kind.is_sine() {
                assert_eq!(at0, C::new(0.0, 0.0));
            } else {
                assert_eq!(at0, ONE);
            }
            let z = 0.37;
            let plus = q_trig(kind, c(z), &cx).unwrap();
            let minus = q_trig(kind, c(-z), &cx).unwrap();
            let expect = if kind.is_sine() { -plus } else { plus };
            assert!((minus - expect).norm() < 1e-14);
        }
        assert!(q_trig(TrigKind::SinSmall, c(2.1), &cx).is_err());
    }

    #[test]
    fn trig_derivative_relations() {
        // all six relations, pointwise
        for q in [0.3, 0.6] {
            let cx = ctx(q);
            for z in [0.2, 0.45, 0.8] {
                let dq_of = |kind: TrigKind| {
                    d_q(&|t: f64| q_trig(kind, c(t), &cx), z, &cx).unwrap()
                };
                let at = |kind: TrigKind, arg: f64| q_trig(kind, c(arg), &cx).unwrap();
                assert!(relerr(dq_of(TrigKind::SinSmall), at(TrigKind::CosSmall, z)) < 1e-10);
                assert!(relerr(dq_of(TrigKind::CosSmall), -at(TrigKind::SinSmall, z)) < 1e-10);
                assert!(relerr(dq_of(TrigKind::SinCap), at(TrigKind::CosCap, q * z)) < 1e-10);
                assert!(relerr(dq_of(TrigKind::CosCap), -at(TrigKind::SinCap, q * z)) < 1e-10);
                let sq = q.sqrt();
                assert!(relerr(dq_of(TrigKind::SinSemi), at(TrigKind::CosSemi, sq * z)) < 1e-10);
                assert!(
                    relerr(dq_of(TrigKind::CosSemi), -sq * at(TrigKind::SinSemi, sq * z)) < 1e-10
                );
            }
        }
    }

    #[test]
    fn struve_trivial_and_domain() {
        let cx = ctx(0.5);
        for kind in [StruveKind::H1, StruveKind::H2, StruveKind::H3] {
            let v = struve_h(kind, c(0.7), c(0.0), &cx).unwrap();
            assert_eq!(v, C::new(0.0, 0.0));
        }
        assert!(struve_h(StruveKind::H1, c(0.7), c(2.5), &cx).is_err());
        assert!(struve_h(StruveKind::H3, c(-0.6), c(0.5), &cx).is_err());
    }

    #[test]
    fn airy_values_at_zero() {
        let cx = ctx(0.4);
        assert_eq!(airy_pair(AiryBranch::AI, c(0.0), &cx).unwrap(), ONE);
        assert_eq!(airy_pair(AiryBranch::BI, c(0.0), &cx).unwrap(), C::new(0.0, 0.0));
        assert_eq!(airy_sqrtq(c(0.0), &ctx(0.25)).unwrap(), ONE);
    }

    #[test]
    fn ortho_poly_degree_zero_is_one() {
        let cx = ctx(0.5);
        let fams = [
            PolyFamily::BigQLaguerre { n: 0, a: 0.3, b: 0.4 },
            PolyFamily::QLaguerre { n: 0, alpha: 0.5 },
            PolyFamily::StieltjesWigert { n: 0 },
            PolyFamily::QHermiteI { n: 0 },
            PolyFamily::QHermiteII { n: 0 },
            PolyFamily::LittleQLegendre { n: 0 },
            PolyFamily::BigQLegendre { n: 0, c: 1.7 },
        ];
        for f in fams {
            let v = ortho_poly(&f, c(0.37), &cx).unwrap();
            assert!((v - ONE).norm() < 1e-14, "{f:?}");
        }
    }

    #[test]
    fn hermite_parity() {
        let cx = ctx(0.45);
        for n in 0..=6u32 {
            for x in [0.3, 0.8] {
                for fam in [PolyFamily::QHermiteI { n }, PolyFamily::QHermiteII { n }] {
                    let plus = ortho_poly(&fam, c(x), &cx).unwrap();
                    let minus = ortho_poly(&fam, c(-x), &cx).unwrap();
                    let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
                    assert!((minus - plus * sign).norm() < 1e-12 * plus.norm().max(1.0));
                }
            }
        }
    }

    #[test]
    fn hermite2_at_zero_is_finite() {
        let cx = ctx(0.5);
        for n in 0..=5u32 {
            let v = ortho_poly(&PolyFamily::QHermiteII { n }, c(0.0), &cx).unwrap();
            assert!(v.re.is_finite());
            if n % 2 == 1 {
                assert_eq!(v, C::new(0.0, 0.0));
            }
        }
    }

    #[test]
    fn weight_values() {
        let cx = ctx(0.5);
        let w = weight(&PolyFamily::QHermiteI { n: 2 }, 0.0, &cx).unwrap();
        assert!((w - 1.0).abs() < 1e-14);
        let w = weight(&PolyFamily::StieltjesWigert { n: 2 }, 1.0, &cx).unwrap();
        let cc = 1.0 / (2.0 * 0.5f64.ln());
        assert!((w + cc / std::f64::consts::PI.sqrt()).abs() < 1e-14);
        assert!(weight(&PolyFamily::StieltjesWigert { n: 2 }, -1.0, &cx).is_err());
        // product weight stays finite near both ends
        assert!(sw_orthogonality_weight(1e-12, &cx).unwrap() >= 0.0);
        assert!(sw_orthogonality_weight(1e12, &cx).unwrap() >= 0.0);
    }
}
