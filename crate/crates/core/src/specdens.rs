//! Spectral densities of bosonic environments: closed-form families,
//! tabulated data, sums; reorganization energies and support truncation.
//!
//! All energies are in cm^-1. A spectral density carries a finite support
//! window; evaluation outside the window returns zero (tabulated data
//! refuses to extrapolate instead).

use crate::quadrature::{self, QuadConfig, QuadError};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum SpecDensError {
    #[error("extrapolation refused: omega = {0} outside tabulated range [{1}, {2}]")]
    ExtrapolationRefused(f64, f64, f64),
    #[error("invalid spectral density: {0}")]
    Invalid(String),
    #[error("non-integrable singularity of J(omega)/omega^{1} at omega = 0")]
    NonIntegrable(f64, u32),
    #[error("reorganization energy is zero; truncation criterion undefined")]
    ZeroReorganization,
    #[error("no point on the search grid satisfies the criterion")]
    GridExhausted,
    #[error(transparent)]
    Quad(#[from] QuadError),
}

/// 1/(9! * 2), the Adolphs-Renger normalization.
const AR_NORM: f64 = 1.0 / (362880.0 * 2.0);

#[derive(Debug, Clone, Serialize, Deserialize)]
pub enum Kind {
    /// sum_k pi c_k/(9! 2) omega^5/omega_ck^4 exp(-sqrt(omega/omega_ck))
    AdolphsRenger { weights: Vec<f64>, cutoffs: Vec<f64> },
    /// antisymmetrized Lorentzian with Huang-Rhys factor `s`, center, width;
    /// constructed so the exact reorganization energy is s * center
    Lorentzian { s: f64, center: f64, width: f64 },
    /// prefactor * sqrt((omega - min)(max - omega)) / 2 on the support window
    Semicircle { prefactor: f64 },
    /// two-column samples with monotone piecewise-cubic interpolation
    Tabulated { omega: Vec<f64>, j: Vec<f64> },
    Sum(Vec<SpectralDensity>),
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SpectralDensity {
    kind: Kind,
    support: (f64, f64),
}

impl SpectralDensity {
    pub fn adolphs_renger(
        weights: Vec<f64>,
        cutoffs: Vec<f64>,
        support_max: f64,
    ) -> Result<Self, SpecDensError> {
        if weights.len() != cutoffs.len() || weights.is_empty() {
            return Err(SpecDensError::Invalid("weights/cutoffs length mismatch".into()));
        }
        if cutoffs.iter().any(|&w| w <= 0.0) || support_max <= 0.0 {
            return Err(SpecDensError::Invalid("cutoffs and support must be positive".into()));
        }
        Ok(SpectralDensity {
            kind: Kind::AdolphsRenger { weights, cutoffs },
            support: (0.0, support_max),
        })
    }

    pub fn lorentzian(s: f64, center: f64, width: f64, support_max: f64) -> Result<Self, SpecDensError> {
        if center <= 0.0 || width <= 0.0 || s < 0.0 {
            return Err(SpecDensError::Invalid("Lorentzian needs center, width > 0 and s >= 0".into()));
        }
        Ok(SpectralDensity {
            kind: Kind::Lorentzian { s, center, width },
            support: (0.0, support_max),
        })
    }

    pub fn semicircle(omega_min: f64, omega_max: f64, prefactor: f64) -> Result<Self, SpecDensError> {
        if omega_min >= omega_max {
            return Err(SpecDensError::Invalid("semicircle needs omega_min < omega_max".into()));
        }
        if prefactor < 0.0 {
            return Err(SpecDensError::Invalid("semicircle prefactor must be nonnegative".into()));
        }
        Ok(SpectralDensity { kind: Kind::Semicircle { prefactor }, support: (omega_min, omega_max) })
    }

    pub fn tabulated(omega: Vec<f64>, j: Vec<f64>) -> Result<Self, SpecDensError> {
        if omega.len() != j.len() || omega.len() < 2 {
            return Err(SpecDensError::Invalid("tabulated data needs >= 2 matched samples".into()));
        }
        if omega.windows(2).any(|w| w[0] >= w[1]) {
            return Err(SpecDensError::Invalid("tabulated omega samples must increase".into()));
        }
        if j.iter().any(|&v| v < 0.0 || !v.is_finite()) {
            return Err(SpecDensError::Invalid("tabulated J values must be finite and >= 0".into()));
        }
        let support = (omega[0], *omega.last().unwrap());
        Ok(SpectralDensity { kind: Kind::Tabulated { omega, j }, support })
    }

    pub fn sum(parts: Vec<SpectralDensity>) -> Result<Self, SpecDensError> {
        if parts.is_empty() {
            return Err(SpecDensError::Invalid("empty sum".into()));
        }
        let lo = parts.iter().map(|p| p.support.0).fold(f64::INFINITY, f64::min);
        let hi = parts.iter().map(|p| p.support.1).fold(f64::NEG_INFINITY, f64::max);
        Ok(SpectralDensity { kind: Kind::Sum(parts), support: (lo, hi) })
    }

    /// The WSCP dimer environment: Adolphs-Renger background plus three
    /// narrow intrapigment Lorentzians.
    pub fn wscp() -> Self {
        let ar = Self::adolphs_renger(vec![35.45, 22.15], vec![0.557, 1.936], 20_000.0).unwrap();
        let l1 = Self::lorentzian(0.0173, 181.0, 20.0, 20_000.0).unwrap();
        let l2 = Self::lorentzian(0.0246, 221.0, 20.0, 20_000.0).unwrap();
        let l3 = Self::lorentzian(0.0182, 240.0, 20.0, 20_000.0).unwrap();
        Self::sum(vec![ar, l1, l2, l3]).unwrap()
    }

    pub fn support(&self) -> (f64, f64) {
        self.support
    }

    pub fn kind(&self) -> &Kind {
        &self.kind
    }

    /// Copy with the support window truncated at `omega_max`.
    pub fn truncated(&self, omega_max: f64) -> Self {
        let mut out = self.clone();
        out.support.1 = omega_max.min(self.support.1);
        if let Kind::Sum(parts) = &mut out.kind {
            for p in parts.iter_mut() {
                *p = p.truncated(omega_max);
            }
        }
        out
    }

    /// Scalar multiple; every variant is closed under scaling.
    pub fn scaled(&self, factor: f64) -> Self {
        let mut out = self.clone();
        match &mut out.kind {
            Kind::AdolphsRenger { weights, .. } => {
                weights.iter_mut().for_each(|w| *w *= factor)
            }
            Kind::Lorentzian { s, .. } => *s *= factor,
            Kind::Semicircle { prefactor } => *prefactor *= factor,
            Kind::Tabulated { j, .. } => j.iter_mut().for_each(|v| *v *= factor),
            Kind::Sum(parts) => parts.iter_mut().for_each(|p| *p = p.scaled(factor)),
        }
        out
    }

    /// J(omega); zero outside the support window.
    pub fn evaluate(&self, omega: f64) -> Result<f64, SpecDensError> {
        if !omega.is_finite() {
            return Err(SpecDensError::Invalid(format!("non-finite omega {omega}")));
        }
        if omega < self.support.0 || omega > self.support.1 {
            if let Kind::Tabulated { omega: om, .. } = &self.kind {
                if omega > 0.0 && (omega < om[0] || omega > *om.last().unwrap()) {
                    return Err(SpecDensError::ExtrapolationRefused(
                        omega,
                        om[0],
                        *om.last().unwrap(),
                    ));
                }
            }
            return Ok(0.0);
        }
        self.evaluate_unchecked(omega)
    }

    fn evaluate_unchecked(&self, omega: f64) -> Result<f64, SpecDensError> {
        Ok(match &self.kind {
            Kind::AdolphsRenger { weights, cutoffs } => {
                if omega <= 0.0 {
                    0.0
                } else {
                    weights
                        .iter()
                        .zip(cutoffs)
                        .map(|(&c, &wc)| {
                            std::f64::consts::PI * c * AR_NORM * omega.powi(5) / wc.powi(4)
                                * (-(omega / wc).sqrt()).exp()
                        })
                        .sum()
                }
            }
            Kind::Lorentzian { s, center, width } => {
                lorentzian_over_omega(*s, *center, *width, omega) * omega
            }
            Kind::Semicircle { prefactor } => {
                let (a, b) = self.support;
                0.5 * prefactor * ((omega - a) * (b - omega)).max(0.0).sqrt()
            }
            Kind::Tabulated { omega: om, j } => pchip_eval(om, j, omega),
            Kind::Sum(parts) => {
                let mut tot = 0.0;
                for p in parts {
                    tot += p.evaluate(omega)?;
                }
                tot
            }
        })
    }

    /// J(omega)/omega with the omega -> 0 limit taken analytically where the
    /// closed form allows it.
    pub fn evaluate_over_omega(&self, omega: f64) -> Result<f64, SpecDensError> {
        if omega < self.support.0 || omega > self.support.1 || omega < 0.0 {
            return Ok(0.0);
        }
        Ok(match &self.kind {
            Kind::AdolphsRenger { .. } => {
                if omega == 0.0 {
                    0.0
                } else {
                    self.evaluate_unchecked(omega)? / omega
                }
            }
            Kind::Lorentzian { s, center, width } => {
                lorentzian_over_omega(*s, *center, *width, omega)
            }
            Kind::Sum(parts) => {
                let mut tot = 0.0;
                for p in parts {
                    tot += p.evaluate_over_omega(omega)?;
                }
                tot
            }
            _ => {
                if omega == 0.0 {
                    // generic one-sided limit
                    let h = 1e-9 * self.support.1.abs().max(1.0);
                    self.evaluate(h)? / h
                } else {
                    self.evaluate_unchecked(omega)? / omega
                }
            }
        })
    }

    /// Interior points where the integrand changes character: Lorentzian
    /// centers and shoulders, tabulation knots (subsampled).
    pub fn breakpoints(&self) -> Vec<f64> {
        let mut pts = Vec::new();
        self.collect_breakpoints(&mut pts);
        pts.sort_by(|a, b| a.partial_cmp(b).unwrap());
        pts.dedup();
        pts
    }

    fn collect_breakpoints(&self, pts: &mut Vec<f64>) {
        match &self.kind {
            Kind::Lorentzian { center, width, .. } => {
                for m in [-8.0, -2.0, 0.0, 2.0, 8.0] {
                    pts.push(center + m * width);
                }
            }
            Kind::AdolphsRenger { cutoffs, .. } => {
                // peak of omega^5 exp(-sqrt(omega/wc)) sits at 100 wc
                for &wc in cutoffs {
                    pts.push(25.0 * wc);
                    pts.push(100.0 * wc);
                    pts.push(400.0 * wc);
                }
            }
            Kind::Tabulated { omega, .. } => {
                let stride = (omega.len() / 16).max(1);
                pts.extend(omega.iter().step_by(stride));
            }
            Kind::Sum(parts) => parts.iter().for_each(|p| p.collect_breakpoints(pts)),
            Kind::Semicircle { .. } => {}
        }
    }

    /// lambda^{omega_max} = int_0^{omega_max} J(w)/(pi w) dw by adaptive
    /// quadrature (relative tolerance 1e-9).
    pub fn reorganization_energy(&self, omega_max: f64) -> Result<f64, SpecDensError> {
        if omega_max <= 0.0 {
            return Err(SpecDensError::Invalid("omega_max must be positive".into()));
        }
        // non-integrable if J does not vanish at 0
        let probe = 1e-12 * self.support.1.max(1.0);
        if self.support.0 <= 0.0 && self.evaluate(probe)? / probe > 1e12 {
            return Err(SpecDensError::NonIntegrable(0.0, 1));
        }
        let hi = omega_max.min(self.support.1);
        if hi <= 0.0 {
            return Ok(0.0);
        }
        let cfg = QuadConfig { rel_tol: 1e-9, abs_tol: 1e-13, max_segments: 20_000 };
        let v = quadrature::adaptive(
            |w| self.evaluate_over_omega(w).unwrap_or(0.0),
            self.support.0.max(0.0),
            hi,
            &self.breakpoints(),
            &cfg,
        )?;
        Ok(v / std::f64::consts::PI)
    }

    /// Total coupling moment kappa_0^2 = int J/pi over the support.
    pub fn zeroth_moment(&self) -> Result<f64, SpecDensError> {
        let cfg = QuadConfig { rel_tol: 1e-10, abs_tol: 1e-13, max_segments: 20_000 };
        let v = quadrature::adaptive(
            |w| self.evaluate(w).unwrap_or(0.0),
            self.support.0,
            self.support.1,
            &self.breakpoints(),
            &cfg,
        )?;
        Ok(v / std::f64::consts::PI)
    }

    /// Default support-truncation search grid: multiples of 100 cm^-1 plus
    /// the support edge itself (so compactly supported densities resolve to
    /// their own edge).
    pub fn default_truncation_grid(&self) -> Vec<f64> {
        let mut grid: Vec<f64> = (1..=200)
            .map(|k| 100.0 * k as f64)
            .filter(|&w| w < self.support.1)
            .collect();
        grid.push(self.support.1);
        grid
    }

    /// Smallest grid point with relative reorganization-energy error below
    /// `eps` (the default criterion).
    pub fn support_truncation(&self, eps: f64, grid: Option<&[f64]>) -> Result<f64, SpecDensError> {
        assert!(eps > 0.0 && eps < 1.0, "eps must be in (0, 1)");
        let lambda = self.reorganization_energy(self.support.1)?;
        if lambda <= 0.0 {
            return Err(SpecDensError::ZeroReorganization);
        }
        let default;
        let grid = match grid {
            Some(g) => g,
            None => {
                default = self.default_truncation_grid();
                &default
            }
        };
        for &w in grid {
            if w <= 0.0 {
                continue;
            }
            let l = self.reorganization_energy(w)?;
            if (lambda - l) / lambda < eps {
                return Ok(w);
            }
        }
        Err(SpecDensError::GridExhausted)
    }

    /// Alternative criterion: smallest grid point with discarded weight
    /// W_d = int_w^inf J / int_0^inf J below `eps`.
    pub fn support_truncation_weight(
        &self,
        eps: f64,
        grid: Option<&[f64]>,
    ) -> Result<f64, SpecDensError> {
        assert!(eps > 0.0 && eps < 1.0);
        let total = self.zeroth_moment()?;
        if total <= 0.0 {
            return Err(SpecDensError::ZeroReorganization);
        }
        let cfg = QuadConfig { rel_tol: 1e-9, abs_tol: 1e-13, max_segments: 20_000 };
        let default;
        let grid = match grid {
            Some(g) => g,
            None => {
                default = self.default_truncation_grid();
                &default
            }
        };
        for &w in grid {
            if w <= self.support.0 {
                continue;
            }
            let kept = quadrature::adaptive(
                |x| self.evaluate(x).unwrap_or(0.0),
                self.support.0,
                w.min(self.support.1),
                &self.breakpoints(),
                &cfg,
            )? / std::f64::consts::PI;
            if (total - kept) / total < eps {
                return Ok(w);
            }
        }
        Err(SpecDensError::GridExhausted)
    }
}

/// J_L(omega)/omega for the antisymmetrized Lorentzian; finite everywhere.
fn lorentzian_over_omega(s: f64, center: f64, width: f64, omega: f64) -> f64 {
    let num = 8.0 * s * width * center * (4.0 * center * center + width * width);
    let d1 = 4.0 * (omega - center).powi(2) + width * width;
    let d2 = 4.0 * (omega + center).powi(2) + width * width;
    num / (d1 * d2)
}

/// Fritsch-Carlson monotone piecewise-cubic interpolation; preserves the
/// nonnegativity of the samples.
fn pchip_eval(xs: &[f64], ys: &[f64], x: f64) -> f64 {
    let n = xs.len();
    let i = match xs.binary_search_by(|v| v.partial_cmp(&x).unwrap()) {
        Ok(i) => return ys[i],
        Err(0) => 0,
        Err(i) if i >= n => n - 2,
        Err(i) => i - 1,
    };
    let h = xs[i + 1] - xs[i];
    let d = pchip_slopes(xs, ys);
    let t = (x - xs[i]) / h;
    let (y0, y1, m0, m1) = (ys[i], ys[i + 1], d[i] * h, d[i + 1] * h);
    let t2 = t * t;
    let t3 = t2 * t;
    y0 * (2.0 * t3 - 3.0 * t2 + 1.0)
        + m0 * (t3 - 2.0 * t2 + t)
        + y1 * (-2.0 * t3 + 3.0 * t2)
        + m1 * (t3 - t2)
}

fn pchip_slopes(xs: &[f64], ys: &[f64]) -> Vec<f64> {
    let n = xs.len();
    let mut delta = vec![0.0; n - 1];
    for i in 0..n - 1 {
        delta[i] = (ys[i + 1] - ys[i]) / (xs[i + 1] - xs[i]);
    }
    let mut d = vec![0.0; n];
    d[0] = delta[0];
    d[n - 1] = delta[n - 2];
    for i in 1..n - 1 {
        if delta[i - 1] * delta[i] <= 0.0 {
            d[i] = 0.0;
        } else {
            let w1 = 2.0 * (xs[i + 1] - xs[i]) + (xs[i] - xs[i - 1]);
            let w2 = (xs[i + 1] - xs[i]) + 2.0 * (xs[i] - xs[i - 1]);
            d[i] = (w1 + w2) / (w1 / delta[i - 1] + w2 / delta[i]);
        }
    }
    // clamp endpoint slopes (Fritsch-Carlson condition)
    for (i, dl) in [(0usize, delta[0]), (n - 1, delta[n - 2])] {
        if d[i] * dl <= 0.0 {
            d[i] = 0.0;
        } else if d[i].abs() > 3.0 * dl.abs() {
            d[i] = 3.0 * dl;
        }
    }
    d
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::{assert_abs_diff_eq, assert_relative_eq};

    #[test]
    fn semicircle_midpoint_value() {
        let j = SpectralDensity::semicircle(-1.0, 1.0, 1.0).unwrap();
        assert_abs_diff_eq!(j.evaluate(0.0).unwrap(), 0.5);
        assert_eq!(j.evaluate(-2.0).unwrap(), 0.0);
        // Eq.-form invariant: J((a+b)/2) = K^2 (b-a)/4
        let j = SpectralDensity::semicircle(0.0, 1000.0, 4.0).unwrap();
        assert_abs_diff_eq!(j.evaluate(500.0).unwrap(), 4.0 * 1000.0 / 4.0);
    }

    #[test]
    fn semicircle_area_matches_analytic() {
        // oracle: int sqrt((w-a)(b-w)) dw = pi (b-a)^2 / 8
        let (a, b, k2) = (2.0, 7.0, 0.9);
        let j = SpectralDensity::semicircle(a, b, k2).unwrap();
        let area = quadrature::adaptive(
            |w| j.evaluate(w).unwrap(),
            a,
            b,
            &[],
            &QuadConfig::default(),
        )
        .unwrap();
        let exact = 0.5 * k2 * std::f64::consts::PI * (b - a) * (b - a) / 8.0;
        assert_relative_eq!(area, exact, max_relative = 1e-9);
    }

    #[test]
    fn wscp_lorentzian_on_resonance() {
        // second Lorentzian on resonance, simplified by hand from the
        // defining formula at omega = center
        let (s2, o2, g) = (0.0246, 221.0, 20.0);
        let on_res = 8.0 * s2 * o2 * o2 * (4.0 * o2 * o2 + g * g) / (g * (16.0 * o2 * o2 + g * g));
        let l2 = SpectralDensity::lorentzian(s2, o2, g, 20_000.0).unwrap();
        assert_relative_eq!(l2.evaluate(221.0).unwrap(), on_res, max_relative = 1e-12);
        // full WSCP at 221 = second peak + tails of the others + AR part
        let j = SpectralDensity::wscp();
        assert_relative_eq!(j.evaluate(221.0).unwrap(), 230.658136236975, max_relative = 1e-9);
        assert!(j.evaluate(221.0).unwrap() > on_res);
        assert_eq!(j.evaluate(-5.0).unwrap(), 0.0);
    }

    #[test]
    fn reorganization_energies_match_paper() {
        let ar = SpectralDensity::adolphs_renger(vec![35.45, 22.15], vec![0.557, 1.936], 20_000.0)
            .unwrap();
        // analytic oracle: lambda_AR = sum c_k w_ck
        let exact_ar = 35.45 * 0.557 + 22.15 * 1.936;
        let lam_ar = ar.reorganization_energy(20_000.0).unwrap();
        assert_relative_eq!(lam_ar, exact_ar, max_relative = 1e-6);
        assert_relative_eq!(lam_ar, 62.63, max_relative = 1e-3);

        let al = SpectralDensity::sum(vec![
            SpectralDensity::lorentzian(0.0173, 181.0, 20.0, 20_000.0).unwrap(),
            SpectralDensity::lorentzian(0.0246, 221.0, 20.0, 20_000.0).unwrap(),
            SpectralDensity::lorentzian(0.0182, 240.0, 20.0, 20_000.0).unwrap(),
        ])
        .unwrap();
        let lam_al = al.reorganization_energy(20_000.0).unwrap();
        // analytic oracle: each Lorentzian integrates to s * center
        let exact_al = 0.0173 * 181.0 + 0.0246 * 221.0 + 0.0182 * 240.0;
        assert_relative_eq!(lam_al, exact_al, max_relative = 1e-6);
        assert_relative_eq!(lam_al, 12.94, max_relative = 1e-3);

        let zero = SpectralDensity::lorentzian(0.0, 100.0, 5.0, 1000.0).unwrap();
        assert_abs_diff_eq!(zero.reorganization_energy(1000.0).unwrap(), 0.0);
    }

    #[test]
    fn sum_linearity_of_reorganization_energy() {
        let a = SpectralDensity::lorentzian(0.1, 150.0, 10.0, 2000.0).unwrap();
        let b = SpectralDensity::semicircle(0.0, 800.0, 0.02).unwrap();
        let s = SpectralDensity::sum(vec![a.clone(), b.clone()]).unwrap();
        let la = a.reorganization_energy(2000.0).unwrap();
        let lb = b.reorganization_energy(800.0).unwrap();
        let ls = s.reorganization_energy(2000.0).unwrap();
        assert_relative_eq!(ls, la + lb, max_relative = 1e-7);
    }

    #[test]
    fn support_truncation_wscp_hits_1000() {
        let j = SpectralDensity::wscp();
        let w = j.support_truncation(1e-3, None).unwrap();
        assert_eq!(w, 1000.0);
    }

    #[test]
    fn support_truncation_compact_support() {
        let j = SpectralDensity::semicircle(0.0, 2.0, 1.0).unwrap();
        assert_eq!(j.support_truncation(0.3, None).unwrap(), 2.0);
        assert_eq!(j.support_truncation(1e-6, None).unwrap(), 2.0);
    }

    #[test]
    fn support_truncation_brackets_lorentzian_center() {
        // brute-force oracle: scan the cumulative reorganization integral
        let j = SpectralDensity::lorentzian(0.2, 181.0, 20.0, 4000.0).unwrap();
        let lambda = j.reorganization_energy(4000.0).unwrap();
        let grid: Vec<f64> = (1..=400).map(|k| k as f64 * 10.0).collect();
        let w = j.support_truncation(0.5, Some(&grid)).unwrap();
        let mut crossing = f64::NAN;
        for k in 1..=400 {
            let x = k as f64 * 10.0;
            if (lambda - j.reorganization_energy(x).unwrap()) / lambda < 0.5 {
                crossing = x;
                break;
            }
        }
        assert_eq!(w, crossing);
        assert!(w >= 160.0 && w <= 200.0, "expected bracketing the center, got {w}");
    }

    #[test]
    fn reorganization_rejects_nonintegrable() {
        // semicircle straddling zero: J(0) > 0, so J/omega is not integrable
        let j = SpectralDensity::semicircle(-1.0, 1.0, 1.0).unwrap();
        assert!(j.reorganization_energy(1.0).is_err());
    }

    #[test]
    fn tabulated_refuses_extrapolation() {
        let j = SpectralDensity::tabulated(vec![1.0, 2.0, 3.0], vec![0.5, 1.0, 0.5]).unwrap();
        assert!(matches!(
            j.evaluate(4.0),
            Err(SpecDensError::ExtrapolationRefused(..))
        ));
        assert_abs_diff_eq!(j.evaluate(2.0).unwrap(), 1.0);
    }

    #[test]
    fn tabulated_pchip_stays_nonnegative() {
        // data with a hard shoulder; plain cubic splines would undershoot
        let xs: Vec<f64> = (0..20).map(|i| i as f64).collect();
        let ys: Vec<f64> = xs.iter().map(|&x| if x < 10.0 { 0.0 } else { (x - 10.0).powi(2) }).collect();
        let j = SpectralDensity::tabulated(xs, ys).unwrap();
        let mut x = 0.0;
        while x < 19.0 {
            assert!(j.evaluate(x).unwrap() >= 0.0, "negative interpolant at {x}");
            x += 0.01;
        }
    }

    #[test]
    fn scaled_halves_everything() {
        let j = SpectralDensity::wscp();
        let h = j.scaled(0.5);
        for w in [50.0, 181.0, 221.0, 500.0] {
            assert_relative_eq!(h.evaluate(w).unwrap(), 0.5 * j.evaluate(w).unwrap(), max_relative = 1e-12);
        }
        assert_relative_eq!(
            h.reorganization_energy(20_000.0).unwrap(),
            0.5 * j.reorganization_energy(20_000.0).unwrap(),
            max_relative = 1e-7
        );
    }

    #[test]
    fn evaluate_is_continuous_on_interior() {
        let j = SpectralDensity::wscp().truncated(1000.0);
        let mut rng = 0x2545F4914F6CDD1Du64;
        let mut next = || {
            rng ^= rng << 13;
            rng ^= rng >> 7;
            rng ^= rng << 17;
            (rng >> 11) as f64 / (1u64 << 53) as f64
        };
        for _ in 0..200 {
            let w = 1.0 + 998.0 * next();
            let h = 1e-6;
            let (a, b) = (j.evaluate(w - h).unwrap(), j.evaluate(w + h).unwrap());
            let mid = j.evaluate(w).unwrap();
            // local Lipschitz bound: slope of the sharp Lorentzians is < 60 per cm^-1
            assert!((b - a).abs() < 200.0 * 2.0 * h + 1e-12, "jump at {w}");
            assert!(mid >= a.min(b) - 1e-9 && mid <= a.max(b) + 1e-9);
        }
    }
}
