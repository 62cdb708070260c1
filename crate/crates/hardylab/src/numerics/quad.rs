//! Gaussian quadrature: Legendre and Jacobi rules from the three-term
//! recurrence (Golub–Welsch), plus graded composite rules for integrands with
//! an algebraic singularity `u^p`, `p > -1`, at the left endpoint.

use super::eig::golub_welsch_tridiag;
use super::gamma::gamma_fn;
use super::NumericsError;

/// Rule family descriptor kept for introspection and debugging output.
#[derive(Debug, Clone, PartialEq)]
pub enum RuleKind {
    Legendre,
    Jacobi { a: f64, b: f64 },
    CompositeGraded { p: f64, levels: usize },
}

/// A quadrature rule: `∫ f ≈ Σ wᵢ f(xᵢ)` over the rule's interval. For plain
/// Legendre rules the weight is 1; for Jacobi rules the weight
/// `(1-x)^a (1+x)^b` is part of the rule; composite graded rules integrate
/// plain `du` but resolve a known `u^p` endpoint singularity.
#[derive(Debug, Clone)]
pub struct QuadRule {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
    pub kind: RuleKind,
}

impl QuadRule {
    /// n-point Gauss–Legendre rule on (-1, 1).
    pub fn legendre(n: usize) -> Self {
        let mut rule = Self::jacobi(n, 0.0, 0.0).expect("0,0 are valid parameters");
        rule.kind = RuleKind::Legendre;
        rule
    }

    /// n-point Gauss–Jacobi rule on (-1, 1) for the weight `(1-x)^a (1+x)^b`.
    pub fn jacobi(n: usize, a: f64, b: f64) -> Result<Self, NumericsError> {
        assert!(n >= 1, "need at least one quadrature point");
        if !(a.is_finite() && b.is_finite() && a > -1.0 && b > -1.0) {
            return Err(NumericsError::InvalidJacobiParams { a, b });
        }
        // Recurrence coefficients of the monic-orthonormal Jacobi chain.
        let mut diag = vec![0.0; n];
        let mut off = vec![0.0; n.saturating_sub(1)];
        let apb = a + b;
        diag[0] = (b - a) / (apb + 2.0);
        for k in 1..n {
            let kf = k as f64;
            let denom = 2.0 * kf + apb;
            diag[k] = (b * b - a * a) / (denom * (denom + 2.0));
            let num = 4.0 * kf * (kf + a) * (kf + b) * (kf + apb);
            let den = denom * denom * (denom + 1.0) * (denom - 1.0);
            off[k - 1] = (num / den).sqrt();
        }
        // Handle k = 1 separately when a + b degenerates the generic formula.
        if n > 1 {
            let num = 4.0 * (1.0 + a) * (1.0 + b);
            let den = (apb + 2.0) * (apb + 2.0) * (apb + 3.0);
            off[0] = (num / den).sqrt();
        }
        let mu0 = (2.0f64).powf(apb + 1.0) * gamma_fn(a + 1.0).unwrap()
            * gamma_fn(b + 1.0).unwrap()
            / gamma_fn(apb + 2.0).unwrap();
        let (nodes, first_components) = golub_welsch_tridiag(&diag, &off);
        let weights = first_components.iter().map(|c| mu0 * c * c).collect();
        Ok(QuadRule {
            nodes,
            weights,
            kind: RuleKind::Jacobi { a, b },
        })
    }

    /// Affine image of the rule on (lo, hi). For a Jacobi rule the weight maps
    /// with the interval: the returned rule integrates
    /// `(hi-x)^a (x-lo)^b f(x)` up to the Jacobian scaling of the weight.
    pub fn mapped(&self, lo: f64, hi: f64) -> Self {
        let half = 0.5 * (hi - lo);
        let mid = 0.5 * (hi + lo);
        QuadRule {
            nodes: self.nodes.iter().map(|x| mid + half * x).collect(),
            weights: self.weights.iter().map(|w| w * half).collect(),
            kind: self.kind.clone(),
        }
    }

    /// Composite rule on `(0, hi)` for integrands of the form
    /// `u^p · (smooth)`, `p > -1`, singular at the left endpoint.
    ///
    /// The innermost panel is a de-weighted Gauss–Jacobi rule that absorbs
    /// `u^p` exactly; outward panels grade geometrically (ratio 0.5) with
    /// plain Gauss–Legendre, which is essentially exact away from the
    /// singularity.
    pub fn graded_toward_zero(hi: f64, p: f64, levels: usize, n_panel: usize) -> Self {
        assert!(p > -1.0, "endpoint exponent must satisfy p > -1, got {p}");
        assert!(hi > 0.0 && levels >= 1);
        let mut nodes = Vec::new();
        let mut weights = Vec::new();

        // Innermost panel (0, hi/2^levels): Gauss-Jacobi for weight u^p on
        // (0, a), de-weighted so the rule applies to the full integrand.
        let a_in = hi * (0.5f64).powi(levels as i32);
        let gj = QuadRule::jacobi(n_panel, 0.0, p).expect("p > -1");
        for (x, w) in gj.nodes.iter().zip(&gj.weights) {
            // u = a_in (1+x)/2, du-weight: ∫_0^{a} u^p f du =
            // (a/2)^{p+1} ∫ (1+x)^p f dx; de-weight by u^{-p}.
            let u = a_in * 0.5 * (1.0 + x);
            let w_full = w * (a_in * 0.5).powf(p + 1.0) * (0.5 * (1.0 + x)).powf(-p) / a_in.powf(p);
            // w_full simplifies to w (a/2)^{p+1} u^{-p}; keep the stable form:
            let w_stable = w * (a_in * 0.5).powf(p + 1.0) * u.powf(-p);
            debug_assert!((w_full - w_stable).abs() <= 1e-12 * w_stable.abs() + 1e-300);
            nodes.push(u);
            weights.push(w_stable);
        }
        // Geometric Legendre panels outward: (a, 2a), (2a, 4a), ..., (hi/2, hi).
        let gl = QuadRule::legendre(n_panel);
        let mut left = a_in;
        for _ in 0..levels {
            let right = (2.0 * left).min(hi);
            let panel = gl.mapped(left, right);
            nodes.extend_from_slice(&panel.nodes);
            weights.extend_from_slice(&panel.weights);
            left = right;
        }
        QuadRule {
            nodes,
            weights,
            kind: RuleKind::CompositeGraded { p, levels },
        }
    }

    /// `Σ wᵢ f(xᵢ)` in node order (fixed summation order for reproducibility).
    pub fn integrate<F: FnMut(f64) -> f64>(&self, mut f: F) -> f64 {
        let mut acc = 0.0;
        for (x, w) in self.nodes.iter().zip(&self.weights) {
            acc += w * f(*x);
        }
        acc
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nodes_increasing_weights_positive() {
        for rule in [
            QuadRule::legendre(12),
            QuadRule::jacobi(16, 0.5, -0.5).unwrap(),
            QuadRule::graded_toward_zero(1.0, -0.5, 12, 16),
        ] {
            for pair in rule.nodes.windows(2) {
                assert!(pair[0] < pair[1], "nodes must increase: {:?}", rule.kind);
            }
            assert!(rule.weights.iter().all(|&w| w > 0.0));
        }
    }

    #[test]
    fn legendre_two_point_integrates_x_squared() {
        let rule = QuadRule::legendre(2);
        let got = rule.integrate(|x| x * x);
        assert!((got - 2.0 / 3.0).abs() < 1e-15);
    }

    #[test]
    fn legendre_exact_to_degree_2n_minus_1() {
        let n = 7;
        let rule = QuadRule::legendre(n);
        for deg in 0..2 * n {
            let got = rule.integrate(|x| x.powi(deg as i32));
            let exact = if deg % 2 == 0 {
                2.0 / (deg as f64 + 1.0)
            } else {
                0.0
            };
            assert!(
                (got - exact).abs() <= 1e-13 * (1.0 + exact.abs()),
                "degree {deg}: {got} vs {exact}"
            );
        }
    }

    #[test]
    fn jacobi_exactness_against_beta_moments() {
        // ∫_{-1}^1 (1-x)^a (1+x)^{b}(1+x)^j dx = 2^{a+b+j+1} B(a+1, b+j+1);
        // the (1+x)^j, j = 0..2n-1, form a triangular polynomial basis.
        let n = 9;
        for &(a, b) in &[(0.0, -0.5), (1.5, 0.25), (0.0, 1.0)] {
            let rule = QuadRule::jacobi(n, a, b).unwrap();
            for j in 0..2 * n {
                let jf = j as f64;
                let exact = (2.0f64).powf(a + b + jf + 1.0) * gamma_fn(a + 1.0).unwrap()
                    * gamma_fn(b + jf + 1.0).unwrap()
                    / gamma_fn(a + b + jf + 2.0).unwrap();
                let got = rule.integrate(|x| (1.0 + x).powi(j as i32));
                assert!(
                    ((got - exact) / exact).abs() < 1e-13,
                    "(a,b)=({a},{b}), j={j}: {got} vs {exact}"
                );
            }
        }
    }

    #[test]
    fn jacobi_resolves_inverse_sqrt_weight() {
        // ∫_0^1 y^{-1/2} dy = 2 via the Jacobi rule with b = 1-2s, s = 0.75.
        let s = 0.75;
        let rule = QuadRule::jacobi(8, 0.0, 1.0 - 2.0 * s).unwrap();
        // Weight (1+x)^{-1/2} on (-1,1); map to y = (1+x)/2:
        // ∫_0^1 y^{-1/2} dy = 2^{-1/2} ∫ (1+x)^{-1/2} dx / 2^{1/2}... use the
        // rule directly: ∫ (1+x)^{-1/2} dx = 2√2, then scale.
        let got = rule.integrate(|_| 1.0);
        assert!((got - 2.0 * (2.0f64).sqrt()).abs() < 1e-13);
        let mapped = got / (2.0f64).sqrt() * 0.5f64.powf(0.0);
        assert!((mapped - 2.0).abs() < 1e-13);
    }

    #[test]
    fn invalid_jacobi_parameters_are_rejected() {
        assert!(QuadRule::jacobi(4, -1.0, 0.0).is_err());
        assert!(QuadRule::jacobi(4, 0.0, -1.5).is_err());
    }

    #[test]
    fn graded_rule_exact_for_singular_monomials() {
        // ∫_0^1 u^{p} u^j du = 1/(p+j+1) for the rule built with exponent p.
        for &p in &[-0.5, -0.9, 0.75] {
            let rule = QuadRule::graded_toward_zero(1.0, p, 12, 20);
            for j in 0..12 {
                let exact = 1.0 / (p + j as f64 + 1.0);
                let got = rule.integrate(|u| u.powf(p + j as f64));
                assert!(
                    ((got - exact) / exact).abs() < 1e-13,
                    "p={p}, j={j}: {got} vs {exact}"
                );
            }
        }
    }

    #[test]
    fn graded_rule_handles_fractional_radial_integrand() {
        // ∫_0^1 r^{-2s+ε} r² dr with s=0.75, ε=0.25: exponent 0.75 → 1/1.75.
        let rule = QuadRule::graded_toward_zero(1.0, -1.25, 12, 20);
        let got = rule.integrate(|r| r.powf(-1.25) * r.powi(2));
        assert!(((got - 1.0 / 1.75) / (1.0 / 1.75)).abs() < 1e-12);
    }

    #[test]
    fn sine_squared_on_quarter_period() {
        // ∫_0^{π/2} sin²θ dθ = π/4 via composite panels.
        let rule = QuadRule::graded_toward_zero(std::f64::consts::FRAC_PI_2, 0.0, 6, 16);
        let got = rule.integrate(|t| t.sin().powi(2));
        assert!((got - std::f64::consts::PI / 4.0).abs() < 1e-13);
    }
}
