//! Bessel functions of real order: `J_ν` with its derivative and zeros, and
//! the modified function `K_s` for `s ∈ (0,1)`.
//!
//! `J_ν` uses three regimes: the ascending series for small argument, the
//! continued-fraction (Steed/Lentz) evaluation with Wronskian normalization in
//! the intermediate range, and the Hankel asymptotic expansion with upward
//! recurrence for large argument. `K_s` uses the `I`-series difference for
//! small argument and the Thompson–Barnett continued fraction beyond.

use super::gamma::gamma_fn;
use std::f64::consts::PI;

const EPS: f64 = 1e-16;
const FPMIN: f64 = 1e-290;
const MAXIT: usize = 20_000;
// Switchovers: series below, continued fractions between, asymptotics above.
const X_SERIES_MAX: f64 = 2.0;
const X_ASYMPTOTIC_MIN: f64 = 25.0;

/// Bessel function of the first kind `J_ν(x)` for `ν ≥ 0`, `x ≥ 0`.
pub fn bessel_j(nu: f64, x: f64) -> f64 {
    bessel_j_with_deriv(nu, x).0
}

/// Derivative `J'_ν(x)` for `ν ≥ 0`, `x > 0`.
pub fn bessel_j_deriv(nu: f64, x: f64) -> f64 {
    assert!(x > 0.0, "bessel_j_deriv requires x > 0");
    bessel_j_with_deriv(nu, x).1
}

/// `(J_ν(x), J'_ν(x))` in one evaluation.
pub fn bessel_j_with_deriv(nu: f64, x: f64) -> (f64, f64) {
    assert!(nu >= 0.0, "bessel_j requires ν ≥ 0, got {nu}");
    assert!(x >= 0.0, "bessel_j requires x ≥ 0, got {x}");
    if x == 0.0 {
        let j = if nu == 0.0 { 1.0 } else { 0.0 };
        // J'_0(0) = 0, J'_1(0) = 1/2; other orders vanish or blow up and the
        // derivative is only requested for x > 0.
        let jp = if nu == 1.0 { 0.5 } else { 0.0 };
        return (j, jp);
    }
    if x < X_SERIES_MAX {
        let j = series_j(nu, x);
        let jp = nu / x * j - series_j(nu + 1.0, x);
        (j, jp)
    } else if x < X_ASYMPTOTIC_MIN || nu > 0.6 * x {
        steed_j(nu, x)
    } else {
        hankel_j(nu, x)
    }
}

/// Ascending power series; accurate for small argument.
fn series_j(nu: f64, x: f64) -> f64 {
    let half = 0.5 * x;
    let log_lead = nu * half.ln() - super::gamma::ln_gamma(nu + 1.0);
    if log_lead < -700.0 {
        return 0.0;
    }
    let lead = log_lead.exp();
    let q = -half * half;
    let mut term = 1.0;
    let mut sum = 1.0;
    for m in 1..200 {
        let mf = m as f64;
        term *= q / (mf * (nu + mf));
        sum += term;
        if term.abs() < EPS * sum.abs() {
            break;
        }
    }
    lead * sum
}

/// Continued-fraction evaluation (CF1 + complex CF2 + Wronskian), valid for
/// x ≥ 2 and any ν ≥ 0. Returns (J_ν, J'_ν).
fn steed_j(nu: f64, x: f64) -> (f64, f64) {
    let nl = if x >= nu { 0 } else { (nu - x + 1.5) as usize };
    let xmu = nu - nl as f64;
    let xmu2 = xmu * xmu;
    let xi = 1.0 / x;
    let xi2 = 2.0 * xi;
    let wron = xi2 / PI;

    // CF1 for J'_ν/J_ν by modified Lentz; isign tracks the sign of J_ν.
    let mut isign: f64 = 1.0;
    let mut h = (nu * xi).max(FPMIN);
    let mut b = xi2 * nu;
    let mut d = 0.0;
    let mut c = h;
    let mut converged = false;
    for _ in 0..MAXIT {
        b += xi2;
        d = b - d;
        if d.abs() < FPMIN {
            d = FPMIN;
        }
        c = b - 1.0 / c;
        if c.abs() < FPMIN {
            c = FPMIN;
        }
        d = 1.0 / d;
        let del = c * d;
        h *= del;
        if d < 0.0 {
            isign = -isign;
        }
        if (del - 1.0).abs() < EPS {
            converged = true;
            break;
        }
    }
    assert!(converged, "bessel CF1 failed to converge at ν={nu}, x={x}");

    // Downward recurrence from ν to xmu on the unnormalized pair.
    let rjl_saved = isign * FPMIN;
    let rjpl_saved = h * rjl_saved;
    let mut rjl = rjl_saved;
    let mut rjpl = rjpl_saved;
    let mut fact = nu * xi;
    for _ in 0..nl {
        let rjtemp = fact * rjl + rjpl;
        fact -= xi;
        rjpl = fact * rjtemp - rjl;
        rjl = rjtemp;
    }
    if rjl == 0.0 {
        rjl = EPS;
    }
    let f = rjpl / rjl;

    // CF2 (complex Lentz) at order xmu.
    let mut a = 0.25 - xmu2;
    let mut p = -0.5 * xi;
    let mut q = 1.0;
    let br = 2.0 * x;
    let mut bi = 2.0;
    let mut fct = a * xi / (p * p + q * q);
    let mut cr = br + q * fct;
    let mut ci = bi + p * fct;
    let mut den = br * br + bi * bi;
    let mut dr = br / den;
    let mut di = -bi / den;
    let mut dlr = cr * dr - ci * di;
    let mut dli = cr * di + ci * dr;
    let temp = p * dlr - q * dli;
    q = p * dli + q * dlr;
    p = temp;
    let mut converged = false;
    for i in 2..MAXIT {
        a += 2.0 * (i as f64 - 1.0);
        bi += 2.0;
        dr = a * dr + br;
        di = a * di + bi;
        if dr.abs() + di.abs() < FPMIN {
            dr = FPMIN;
        }
        fct = a / (cr * cr + ci * ci);
        cr = br + cr * fct;
        ci = bi - ci * fct;
        if cr.abs() + ci.abs() < FPMIN {
            cr = FPMIN;
        }
        den = dr * dr + di * di;
        dr /= den;
        di /= -den;
        dlr = cr * dr - ci * di;
        dli = cr * di + ci * dr;
        let temp = p * dlr - q * dli;
        q = p * dli + q * dlr;
        p = temp;
        if (dlr - 1.0).abs() + dli.abs() < EPS {
            converged = true;
            break;
        }
    }
    assert!(converged, "bessel CF2 failed to converge at ν={nu}, x={x}");

    let gam = (p - f) / q;
    let mut rjmu = (wron / ((p - f) * gam + q)).sqrt();
    if rjl < 0.0 {
        rjmu = -rjmu;
    }
    let scale = rjmu / rjl;
    (rjl_saved * scale, rjpl_saved * scale)
}

/// Hankel asymptotic expansion at the fractional order plus upward recurrence.
/// Requires x large relative to ν; the caller guarantees ν ≤ 0.6 x.
fn hankel_j(nu: f64, x: f64) -> (f64, f64) {
    let steps = nu.floor() as usize;
    let mu = nu - steps as f64;

    let jm = hankel_fixed_order(mu, x);
    let jm1 = hankel_fixed_order(mu + 1.0, x);
    // Upward recurrence J_{k+1} = (2k/x) J_k - J_{k-1}; stable for order < x.
    let (mut prev, mut cur) = (jm, jm1);
    let mut order = mu + 1.0;
    for _ in 0..steps {
        let next = 2.0 * order / x * cur - prev;
        prev = cur;
        cur = next;
        order += 1.0;
    }
    // prev = J_ν, cur = J_{ν+1}
    let j = prev;
    let jp = nu / x * j - cur;
    (j, jp)
}

fn hankel_fixed_order(nu: f64, x: f64) -> f64 {
    let mu4 = 4.0 * nu * nu;
    let mut p = 1.0;
    let mut q = 0.0;
    let mut term = 1.0;
    let mut k = 0usize;
    loop {
        k += 1;
        let kf = k as f64;
        let next = term * (mu4 - (2.0 * kf - 1.0).powi(2)) / (kf * 8.0 * x);
        if next.abs() >= term.abs() && k > 2 {
            break; // asymptotic tail started growing
        }
        term = next;
        match k % 4 {
            1 => q += term,
            2 => p -= term,
            3 => q -= term,
            _ => p += term,
        }
        if term.abs() < 1e-17 || k > 40 {
            break;
        }
    }
    let chi = x - (0.5 * nu + 0.25) * PI;
    (2.0 / (PI * x)).sqrt() * (p * chi.cos() - q * chi.sin())
}

/// m-th positive zero of `J_ν`, ν ≥ 0, m ≥ 1.
///
/// Brackets by marching with step 0.5 (consecutive zeros of `J_ν` are more
/// than 3 apart for every ν ≥ 0, so no zero can be skipped), counting sign
/// changes from below the first zero, then refines by bisection plus secant
/// polish to full double precision.
pub fn bessel_j_zero(nu: f64, m: usize) -> f64 {
    assert!(nu >= 0.0 && m >= 1, "need ν ≥ 0 and m ≥ 1");
    let step = 0.5;
    // J_ν > 0 on (0, j_{ν,1}) and j_{ν,1} > ν, so starting below ν is safe.
    let mut a = if nu > 1.0 { nu } else { 1e-3 };
    let mut fa = bessel_j(nu, a);
    let mut count = 0usize;
    let max_steps = 20 * m + 10 * nu as usize + 2000;
    for _ in 0..max_steps {
        let b = a + step;
        let fb = bessel_j(nu, b);
        if fa * fb < 0.0 || fb == 0.0 {
            count += 1;
            if count == m {
                return refine_zero(nu, a, b);
            }
        }
        a = b;
        fa = fb;
    }
    unreachable!("bessel_j_zero: marching failed for ν={nu}, m={m}");
}

fn refine_zero(nu: f64, mut a: f64, mut b: f64) -> f64 {
    let mut fa = bessel_j(nu, a);
    let mut fb = bessel_j(nu, b);
    if fa == 0.0 {
        return a;
    }
    if fb == 0.0 {
        return b;
    }
    // Bisection to a narrow bracket.
    for _ in 0..30 {
        let mid = 0.5 * (a + b);
        let fm = bessel_j(nu, mid);
        if fm == 0.0 {
            return mid;
        }
        if fa * fm < 0.0 {
            b = mid;
            fb = fm;
        } else {
            a = mid;
            fa = fm;
        }
    }
    // Secant polish inside the bracket.
    let (mut x0, mut f0, mut x1, mut f1) = (a, fa, b, fb);
    for _ in 0..60 {
        let dx = f1 * (x1 - x0) / (f1 - f0);
        let mut x2 = x1 - dx;
        if !(a..=b).contains(&x2) {
            x2 = 0.5 * (a + b);
        }
        let f2 = bessel_j(nu, x2);
        if f2 == 0.0 || (x2 - x1).abs() <= 1e-15 * x2.abs() {
            return x2;
        }
        if fa * f2 < 0.0 {
            b = x2;
        } else {
            a = x2;
            fa = f2;
        }
        x0 = x1;
        f0 = f1;
        x1 = x2;
        f1 = f2;
    }
    0.5 * (a + b)
}

/// Modified Bessel function `K_s(x)` for `s ∈ (0,1)`, `x > 0`.
pub fn bessel_k(s: f64, x: f64) -> f64 {
    assert!(s > 0.0 && s < 1.0, "bessel_k requires s ∈ (0,1), got {s}");
    assert!(x > 0.0, "bessel_k requires x > 0");
    if x <= 2.0 {
        // K_s = π (I_{-s} - I_s) / (2 sin πs)
        let i_neg = series_i(-s, x);
        let i_pos = series_i(s, x);
        PI * (i_neg - i_pos) / (2.0 * (PI * s).sin())
    } else {
        let (mu, fold) = if s <= 0.5 { (s, false) } else { (1.0 - s, true) };
        let (kmu, kmu1) = barnett_k(mu, x);
        if fold {
            // K_s = K_{μ-1} = K_{μ+1} - (2μ/x) K_μ with μ = 1 - s.
            kmu1 - 2.0 * mu / x * kmu
        } else {
            kmu
        }
    }
}

fn series_i(p: f64, x: f64) -> f64 {
    let half = 0.5 * x;
    let lead = half.powf(p) / gamma_fn(p + 1.0).expect("non-integer order");
    let q = half * half;
    let mut term = lead;
    let mut sum = lead;
    for m in 1..200 {
        let mf = m as f64;
        term *= q / (mf * (p + mf));
        sum += term;
        if term.abs() < EPS * sum.abs() {
            break;
        }
    }
    sum
}

/// Thompson–Barnett continued fraction for `K_μ`, `K_{μ+1}` with |μ| ≤ 1/2,
/// x ≥ 2. Essentially exact in double precision.
fn barnett_k(mu: f64, x: f64) -> (f64, f64) {
    let mu2 = mu * mu;
    let mut b = 2.0 * (1.0 + x);
    let mut d = 1.0 / b;
    let mut delh = d;
    let mut h = d;
    let mut q1 = 0.0;
    let mut q2 = 1.0;
    let a1 = 0.25 - mu2;
    let mut q = a1;
    let mut c = a1;
    let mut a = -a1;
    let mut s = 1.0 + q * delh;
    let mut converged = false;
    for i in 2..MAXIT {
        a -= 2.0 * (i as f64 - 1.0);
        c = -a * c / i as f64;
        let qnew = (q1 - b * q2) / a;
        q1 = q2;
        q2 = qnew;
        q += c * qnew;
        b += 2.0;
        d = 1.0 / (b + a * d);
        delh = (b * d - 1.0) * delh;
        h += delh;
        let dels = q * delh;
        s += dels;
        if (dels / s).abs() < EPS {
            converged = true;
            break;
        }
    }
    assert!(converged, "bessel K continued fraction failed at μ={mu}, x={x}");
    let h = a1 * h;
    let kmu = (PI / (2.0 * x)).sqrt() * (-x).exp() / s;
    let kmu1 = kmu * (mu + x + 0.5 - h) / x;
    (kmu, kmu1)
}
