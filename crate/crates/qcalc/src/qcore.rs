//! Scalar q-arithmetic primitives.
//!
//! Everything here is parameterized by a [`QContext`] holding the base `q`
//! and the truncation policy for infinite series and products. The base is
//! restricted to `0 < q < 1`; series in that regime converge geometrically
//! (often like `q^{n^2}`), so a relative term tolerance plus a short run of
//! negligible terms is a reliable stopping rule.

use num_complex::Complex64;
use thiserror::Error;

/// Complex scalar used throughout the crate.
pub type C = Complex64;

/// Crate-wide result type.
pub type QResult<T> = Result<T, QError>;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum QError {
    /// A constructor or operation received an argument outside its domain.
    /// The string names the violated constraint.
    #[error("domain violation: {0}")]
    Domain(String),
    /// A series or product failed to satisfy the stopping rule within
    /// `max_terms` terms.
    #[error("no convergence after {terms} terms in {what}")]
    NoConvergence { what: &'static str, terms: usize },
    /// Evaluation hit a pole (zero divisor in a Pochhammer ratio, q-gamma at
    /// a non-positive integer, ...).
    #[error("pole: {0}")]
    Pole(String),
    /// A recursion factor vanished, so the marched solution degenerates.
    #[error("degenerate recursion at grid index {index}: {what}")]
    Degenerate { what: &'static str, index: usize },
    /// Overflow or non-finite value produced at a grid location.
    #[error("non-finite value in {what} at x = {x}")]
    NonFinite { what: &'static str, x: f64 },
    /// Quadrature failure (non-decaying tail, panel cap exceeded).
    #[error("quadrature failure: {0}")]
    Quadrature(String),
    /// Lookup of an unknown identity id.
    #[error("unknown identity: {0}")]
    UnknownIdentity(String),
}

/// Global numeric policy: the base `q` plus series/product truncation control.
///
/// `term_tol` is the relative magnitude below which a term is negligible,
/// `consecutive_small` is how many negligible terms in a row stop the
/// summation, and `max_terms` is a hard cap that turns runaway loops into
/// [`QError::NoConvergence`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QContext {
    pub q: f64,
    pub term_tol: f64,
    pub consecutive_small: usize,
    pub max_terms: usize,
}

impl QContext {
    /// Context with the default policy: `term_tol = 1e-16`,
    /// `consecutive_small = 3`, `max_terms = 10_000`.
    pub fn new(q: f64) -> QResult<Self> {
        Self::with_policy(q, 1e-16, 3, 10_000)
    }

    pub fn with_policy(
        q: f64,
        term_tol: f64,
        consecutive_small: usize,
        max_terms: usize,
    ) -> QResult<Self> {
        if !(q > 0.0 && q < 1.0) || !q.is_finite() {
            return Err(QError::Domain(format!("q must satisfy 0 < q < 1, got {q}")));
        }
        if !(term_tol > 0.0) {
            return Err(QError::Domain(format!("term_tol must be > 0, got {term_tol}")));
        }
        if consecutive_small == 0 || max_terms < consecutive_small {
            return Err(QError::Domain(format!(
                "need max_terms >= consecutive_small >= 1, got {max_terms} and {consecutive_small}"
            )));
        }
        Ok(QContext { q, term_tol, consecutive_small, max_terms })
    }

    /// Same policy, different base. Used to evaluate functions whose natural
    /// base is a power of the ambient `q` (for example `q^2` or `sqrt(q)`).
    pub fn with_q(&self, q: f64) -> QResult<Self> {
        Self::with_policy(q, self.term_tol, self.consecutive_small, self.max_terms)
    }

    /// Context in base `q^2`.
    pub fn base_sq(&self) -> Self {
        // q in (0,1) implies q^2 in (0,1); unwrap cannot fail.
        self.with_q(self.q * self.q).unwrap()
    }

    /// Context in base `sqrt(q)`.
    pub fn base_sqrt(&self) -> Self {
        self.with_q(self.q.sqrt()).unwrap()
    }
}

/// Validate that a complex value is finite, naming the quantity on failure.
pub fn ensure_finite(z: C, what: &'static str) -> QResult<C> {
    if z.re.is_finite() && z.im.is_finite() {
        Ok(z)
    } else {
        Err(QError::NonFinite { what, x: f64::NAN })
    }
}

/// Principal-branch power `q^n` for complex `n` and real `0 < q < 1`.
#[inline]
pub fn q_pow(q: f64, n: C) -> C {
    (n * q.ln()).exp()
}

/// The q-number `[n]_q = (1 - q^n) / (1 - q)`, defined for any finite
/// complex `n` via the principal branch of `q^n`.
pub fn q_number(n: C, ctx: &QContext) -> QResult<C> {
    ensure_finite(n, "q_number argument")?;
    Ok((C::new(1.0, 0.0) - q_pow(ctx.q, n)) / (1.0 - ctx.q))
}

/// Real-argument convenience for [`q_number`].
pub fn q_number_re(n: f64, ctx: &QContext) -> f64 {
    (1.0 - ctx.q.powf(n)) / (1.0 - ctx.q)
}

/// The q-factorial `[n]_q! = [1]_q [2]_q ... [n]_q` (empty product = 1).
pub fn q_factorial(n: u32, ctx: &QContext) -> f64 {
    let mut acc = 1.0;
    for k in 1..=n {
        acc *= q_number_re(k as f64, ctx);
    }
    acc
}

/// Order of a q-Pochhammer symbol.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum PochOrder {
    /// `(a;q)_k`, a finite product of `k` factors.
    Finite(u32),
    /// `(a;q)_inf`, truncated once factors are negligibly close to 1.
    Infinite,
    /// `(a;q)_v = (a;q)_inf / (a q^v;q)_inf` for real `v`.
    Real(f64),
}

/// The q-shifted factorial `(a;q)_order`.
///
/// For `Infinite` the product stops after `consecutive_small` factors in a
/// row satisfy `|a q^j| < term_tol`; the tail is then bounded by a geometric
/// series well below the tolerance. For `Real(v)` the value is the ratio of
/// two infinite products; a zero factor in the divisor is reported as a pole.
pub fn q_pochhammer(a: C, order: PochOrder, ctx: &QContext) -> QResult<C> {
    ensure_finite(a, "q_pochhammer argument")?;
    match order {
        PochOrder::Finite(k) => {
            let mut acc = C::new(1.0, 0.0);
            let mut qj = 1.0;
            for _ in 0..k {
                acc *= C::new(1.0, 0.0) - a * qj;
                qj *= ctx.q;
            }
            Ok(acc)
        }
        PochOrder::Infinite => poch_infinite(a, ctx),
        PochOrder::Real(v) => {
            let num = poch_infinite(a, ctx)?;
            let shifted = a * q_pow(ctx.q, C::new(v, 0.0));
            let den = poch_infinite(shifted, ctx)?;
            if den.norm() == 0.0 {
                return Err(QError::Pole(format!(
                    "(a q^v; q)_inf vanishes for a = {a}, v = {v}"
                )));
            }
            Ok(num / den)
        }
    }
}

fn poch_infinite(a: C, ctx: &QContext) -> QResult<C> {
    let mut acc = C::new(1.0, 0.0);
    let mut term = a;
    let mut small = 0usize;
    for n in 0..ctx.max_terms {
        acc *= C::new(1.0, 0.0) - term;
        if term.norm() < ctx.term_tol {
            small += 1;
            if small >= ctx.consecutive_small {
                return Ok(acc);
            }
        } else {
            small = 0;
        }
        term *= ctx.q;
        if !acc.re.is_finite() || !acc.im.is_finite() {
            return Err(QError::NonFinite { what: "(a;q)_inf partial product", x: n as f64 });
        }
    }
    Err(QError::NoConvergence { what: "(a;q)_inf", terms: ctx.max_terms })
}

/// The q-gamma function
/// `Gamma_q(z) = (q;q)_inf / (q^z;q)_inf * (1-q)^{1-z}`.
///
/// Poles at `z = 0, -1, -2, ...` are rejected explicitly.
pub fn q_gamma(z: C, ctx: &QContext) -> QResult<C> {
    ensure_finite(z, "q_gamma argument")?;
    if z.im == 0.0 && z.re <= 0.0 && (z.re - z.re.round()).abs() < 1e-12 {
        return Err(QError::Pole(format!("Gamma_q pole at z = {}", z.re)));
    }
    let num = poch_infinite(C::new(ctx.q, 0.0), ctx)?;
    let den = poch_infinite(q_pow(ctx.q, z), ctx)?;
    if den.norm() == 0.0 {
        return Err(QError::Pole(format!("Gamma_q pole at z = {z}")));
    }
    let pw = ((C::new(1.0, 0.0) - z) * (1.0 - ctx.q).ln()).exp();
    Ok(num / den * pw)
}

/// Real power `x^s` on the principal branch for complex `s`; `x > 0`.
pub fn pow_c(x: f64, s: C) -> C {
    if x == 0.0 {
        return if s.re > 0.0 { C::new(0.0, 0.0) } else { C::new(f64::INFINITY, 0.0) };
    }
    (s * x.ln()).exp()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx(q: f64) -> QContext {
        QContext::new(q).unwrap()
    }

    #[test]
    fn context_rejects_bad_q() {
        assert!(QContext::new(0.0).is_err());
        assert!(QContext::new(1.0).is_err());
        assert!(QContext::new(-0.5).is_err());
        assert!(QContext::new(1.5).is_err());
        assert!(QContext::new(f64::NAN).is_err());
        assert!(QContext::with_policy(0.5, 0.0, 3, 100).is_err());
        assert!(QContext::with_policy(0.5, 1e-16, 0, 100).is_err());
        assert!(QContext::with_policy(0.5, 1e-16, 5, 4).is_err());
    }

    #[test]
    fn q_number_basics() {
        let c = ctx(0.5);
        assert_eq!(q_number(C::new(0.0, 0.0), &c).unwrap(), C::new(0.0, 0.0));
        let two = q_number(C::new(2.0, 0.0), &c).unwrap();
        assert!((two.re - 1.5).abs() < 1e-15 && two.im == 0.0);
        // independent high-precision value of (1 - 0.3^2.7) / 0.7
        let v = q_number(C::new(2.7, 0.0), &ctx(0.3)).unwrap();
        assert!((v.re - 1.373219934539294171189).abs() < 1e-12);
        assert!(q_number(C::new(f64::INFINITY, 0.0), &c).is_err());
    }

    #[test]
    fn q_factorial_basics() {
        let c = ctx(0.5);
        assert_eq!(q_factorial(0, &c), 1.0);
        assert_eq!(q_factorial(1, &c), 1.0);
        // direct 5-factor product in extended precision
        let v = q_factorial(5, &c);
        assert!((v - 9.5361328125).abs() < 1e-12);
    }

    #[test]
    fn pochhammer_finite() {
        let c = ctx(0.5);
        let any = C::new(-2.3, 0.4);
        assert_eq!(q_pochhammer(any, PochOrder::Finite(0), &c).unwrap(), C::new(1.0, 0.0));
        let v = q_pochhammer(C::new(0.5, 0.0), PochOrder::Finite(2), &c).unwrap();
        assert!((v.re - 0.375).abs() < 1e-15);
    }

    #[test]
    fn pochhammer_infinite_matches_oracle() {
        let c = ctx(0.5);
        let v = q_pochhammer(C::new(0.3, 0.0), PochOrder::Infinite, &c).unwrap();
        assert!((v.re - 0.5101178266339875718323).abs() < 1e-13);
    }

    #[test]
    fn pochhammer_real_order_matches_finite() {
        for q in [0.2, 0.5, 0.8] {
            let c = ctx(q);
            for k in 0..=10u32 {
                let a = C::new(0.4, 0.0);
                let fin = q_pochhammer(a, PochOrder::Finite(k), &c).unwrap();
                let real = q_pochhammer(a, PochOrder::Real(k as f64), &c).unwrap();
                assert!(
                    (fin - real).norm() <= 1e-10 * fin.norm().max(1.0),
                    "q={q} k={k}: {fin} vs {real}"
                );
            }
        }
    }

    #[test]
    fn pochhammer_splitting_identity() {
        // (a;q)_{m+n} = (a;q)_m (a q^m;q)_n
        let c = ctx(0.7);
        let a = C::new(0.35, -0.2);
        for (m, n) in [(3u32, 5u32), (0, 7), (12, 8)] {
            let lhs = q_pochhammer(a, PochOrder::Finite(m + n), &c).unwrap();
            let rhs = q_pochhammer(a, PochOrder::Finite(m), &c).unwrap()
                * q_pochhammer(a * c.q.powi(m as i32), PochOrder::Finite(n), &c).unwrap();
            assert!((lhs - rhs).norm() <= 1e-12 * lhs.norm().max(1.0));
        }
    }

    #[test]
    fn q_gamma_basics() {
        let c = ctx(0.5);
        let one = q_gamma(C::new(1.0, 0.0), &c).unwrap();
        assert!((one.re - 1.0).abs() < 1e-13);
        let two = q_gamma(C::new(2.0, 0.0), &c).unwrap();
        assert!((two.re - 1.0).abs() < 1e-13);
        assert!(q_gamma(C::new(0.0, 0.0), &c).is_err());
        assert!(q_gamma(C::new(-3.0, 0.0), &c).is_err());
    }

    #[test]
    fn q_gamma_matches_q_factorial() {
        for q in [0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9] {
            let c = ctx(q);
            for n in 0..=8u32 {
                let g = q_gamma(C::new(n as f64 + 1.0, 0.0), &c).unwrap();
                let f = q_factorial(n, &c);
                assert!(
                    (g.re - f).abs() <= 1e-12 * f.abs().max(1.0) && g.im.abs() < 1e-12,
                    "q={q} n={n}"
                );
            }
        }
    }

    #[test]
    fn q_number_addition_rule() {
        // [n+m]_q = [n]_q + q^n [m]_q
        let c = ctx(0.37);
        for (n, m) in [(0.3, 1.9), (-1.2, 2.4), (5.5, -0.7)] {
            let lhs = q_number(C::new(n + m, 0.0), &c).unwrap();
            let rhs = q_number(C::new(n, 0.0), &c).unwrap()
                + q_pow(c.q, C::new(n, 0.0)) * q_number(C::new(m, 0.0), &c).unwrap();
            assert!((lhs - rhs).norm() <= 1e-12 * lhs.norm().max(1.0));
        }
    }
}
