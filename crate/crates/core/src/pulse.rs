//! Gaussian control waveforms and the mixing-angle geometry derived from them.
//!
//! All frequencies are angular (rad/µs), times are in µs. Use
//! [`angular_from_mhz`] to convert a "value/2π in MHz" parameter.

use alloc::vec::Vec;
use core::f64::consts::{FRAC_PI_2, PI};

use crate::error::{Error, Result};
#[allow(unused_imports)] // needed for f64 math without std
use num_traits::Float;

/// Underflow guard on η (rad/µs).
pub const ETA_EPSILON: f64 = 1e-30;

/// Most Gaussians allowed in one coupling channel.
pub const MAX_PULSES_PER_CHANNEL: usize = 2;

/// `2π·f` for a frequency given as value/2π in MHz; MHz·µs = 1.
pub fn angular_from_mhz(f_over_2pi_mhz: f64) -> f64 {
    2.0 * PI * f_over_2pi_mhz
}

pub fn mhz_from_angular(omega: f64) -> f64 {
    omega / (2.0 * PI)
}

/// `η0·exp(−[(t − t_j)/T]²)`
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GaussianPulse {
    amplitude: f64,
    delay: f64,
    width: f64,
}

impl GaussianPulse {
    pub fn new(amplitude: f64, delay: f64, width: f64) -> Result<Self> {
        if !(amplitude >= 0.0 && amplitude.is_finite()) {
            return Err(Error::InvalidParameter {
                name: "amplitude",
                reason: "must be finite and non-negative",
            });
        }
        if !delay.is_finite() {
            return Err(Error::InvalidParameter {
                name: "delay",
                reason: "must be finite",
            });
        }
        if !(width > 0.0 && width.is_finite()) {
            return Err(Error::InvalidParameter {
                name: "width",
                reason: "must be finite and positive",
            });
        }
        Ok(Self {
            amplitude,
            delay,
            width,
        })
    }

    pub fn amplitude(&self) -> f64 {
        self.amplitude
    }

    pub fn delay(&self) -> f64 {
        self.delay
    }

    pub fn width(&self) -> f64 {
        self.width
    }

    #[inline]
    fn reduced(&self, t: f64) -> f64 {
        (t - self.delay) / self.width
    }

    pub fn value(&self, t: f64) -> f64 {
        let u = self.reduced(t);
        self.amplitude * (-u * u).exp()
    }

    pub fn derivative(&self, t: f64) -> f64 {
        self.value(t) * self.log_slope(t)
    }

    pub fn second_derivative(&self, t: f64) -> f64 {
        self.value(t) * self.curvature_ratio(t)
    }

    /// `ln value(t)`, `−∞` for a zero-amplitude pulse.
    fn log_value(&self, t: f64) -> f64 {
        let u = self.reduced(t);
        self.amplitude.ln() - u * u
    }

    /// `f'/f = −2(t − t_j)/T²`
    fn log_slope(&self, t: f64) -> f64 {
        -2.0 * (t - self.delay) / (self.width * self.width)
    }

    /// `f''/f = 4(t − t_j)²/T⁴ − 2/T²`
    fn curvature_ratio(&self, t: f64) -> f64 {
        let w2 = self.width * self.width;
        let s = t - self.delay;
        4.0 * s * s / (w2 * w2) - 2.0 / w2
    }
}

/// Value of a single Gaussian pulse at `t`.
pub fn gaussian(t: f64, pulse: &GaussianPulse) -> f64 {
    pulse.value(t)
}

/// Log-domain description of a positive channel at one instant.
#[derive(Clone, Copy, Debug)]
struct LogProfile {
    /// `ln f`
    log_value: f64,
    /// `f'/f`
    slope: f64,
    /// `f''/f`
    curvature: f64,
}

/// Sum of one or two Gaussians driving one coupling channel.
#[derive(Clone, Debug, PartialEq)]
pub struct PulseTrain {
    pulses: Vec<GaussianPulse>,
}

impl PulseTrain {
    pub fn new(pulses: Vec<GaussianPulse>) -> Result<Self> {
        if pulses.is_empty() || pulses.len() > MAX_PULSES_PER_CHANNEL {
            return Err(Error::InvalidParameter {
                name: "pulses",
                reason: "a channel holds one or two Gaussians",
            });
        }
        Ok(Self { pulses })
    }

    pub fn single(pulse: GaussianPulse) -> Self {
        Self {
            pulses: alloc::vec![pulse],
        }
    }

    pub fn pulses(&self) -> &[GaussianPulse] {
        &self.pulses
    }

    pub fn value(&self, t: f64) -> f64 {
        self.pulses.iter().map(|p| p.value(t)).sum()
    }

    pub fn derivative(&self, t: f64) -> f64 {
        self.pulses.iter().map(|p| p.derivative(t)).sum()
    }

    pub fn second_derivative(&self, t: f64) -> f64 {
        self.pulses.iter().map(|p| p.second_derivative(t)).sum()
    }

    /// True when every amplitude is zero.
    pub fn is_identically_zero(&self) -> bool {
        self.pulses.iter().all(|p| p.amplitude == 0.0)
    }

    /// Log-sum-exp over the non-zero pulses; `None` if every amplitude is 0.
    fn log_profile(&self, t: f64) -> Option<LogProfile> {
        let live = || self.pulses.iter().filter(|p| p.amplitude > 0.0);
        let max_log = live().map(|p| p.log_value(t)).fold(f64::NEG_INFINITY, f64::max);
        if max_log == f64::NEG_INFINITY {
            return None;
        }
        let (mut z, mut slope, mut curvature) = (0.0, 0.0, 0.0);
        for p in live() {
            let w = (p.log_value(t) - max_log).exp();
            z += w;
            slope += w * p.log_slope(t);
            curvature += w * p.curvature_ratio(t);
        }
        Some(LogProfile {
            log_value: max_log + z.ln(),
            slope: slope / z,
            curvature: curvature / z,
        })
    }
}

/// Values and first two derivatives of both channels at one instant.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct WaveformSample {
    pub eta1: f64,
    pub eta2: f64,
    pub eta1_dot: f64,
    pub eta2_dot: f64,
    pub eta1_ddot: f64,
    pub eta2_ddot: f64,
}

/// Geometric quantities of the three-level coupling at one instant.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DerivedAngles {
    /// `η = √(η1² + η2²)`
    pub eta: f64,
    /// `θ = arctan(η1/η2)`
    pub theta: f64,
    pub eta_dot: f64,
    pub theta_dot: f64,
    pub theta_ddot: f64,
}

impl DerivedAngles {
    /// Angles for a frozen coupling `(η, θ)` with prescribed rates.
    pub fn frozen(eta: f64, theta: f64) -> Self {
        Self {
            eta,
            theta,
            eta_dot: 0.0,
            theta_dot: 0.0,
            theta_ddot: 0.0,
        }
    }

    /// `√(η² + θ̇²)`, the non-negative root.
    pub fn generalized_rabi(&self) -> f64 {
        self.eta.hypot(self.theta_dot)
    }
}

/// Pair of coupling channels `(η1(t), η2(t))`.
#[derive(Clone, Debug, PartialEq)]
pub struct ControlWaveform {
    pub eta1: PulseTrain,
    pub eta2: PulseTrain,
}

impl ControlWaveform {
    pub fn new(eta1: PulseTrain, eta2: PulseTrain) -> Self {
        Self { eta1, eta2 }
    }

    pub fn sample(&self, t: f64) -> WaveformSample {
        WaveformSample {
            eta1: self.eta1.value(t),
            eta2: self.eta2.value(t),
            eta1_dot: self.eta1.derivative(t),
            eta2_dot: self.eta2.derivative(t),
            eta1_ddot: self.eta1.second_derivative(t),
            eta2_ddot: self.eta2.second_derivative(t),
        }
    }

    /// True when neither channel is ever driven.
    pub fn is_identically_zero(&self) -> bool {
        self.eta1.is_identically_zero() && self.eta2.is_identically_zero()
    }

    pub fn derived(&self, t: f64) -> Result<DerivedAngles> {
        derived_angles(self, t)
    }
}

/// Parameters of the population-transfer pulse pair.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TransferParams {
    /// Peak coupling, rad/µs.
    pub eta0: f64,
    /// Delay of η1 (the φ2↔φ3 channel), µs.
    pub t1: f64,
    /// Delay of η2 (the φ1↔φ3 channel), µs.
    pub t2: f64,
    pub width: f64,
}

impl TransferParams {
    /// η0/2π = 1.6 MHz, t1 = 0.75 µs, t2 = 0.25 µs, T = 0.408 µs.
    pub fn standard() -> Self {
        Self {
            eta0: angular_from_mhz(1.6),
            t1: 0.75,
            t2: 0.25,
            width: 0.408,
        }
    }
}

/// Parameters of the superposition-generation pulses.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SuperpositionParams {
    pub eta0: f64,
    pub t3: f64,
    pub t4: f64,
    pub width: f64,
}

impl SuperpositionParams {
    /// η0/2π = 1.6 MHz, t3 = 1.15 µs, t4 = 0.25 µs, T = 0.408 µs.
    pub fn standard() -> Self {
        Self {
            eta0: angular_from_mhz(1.6),
            t3: 1.15,
            t4: 0.25,
            width: 0.408,
        }
    }
}

/// Single Gaussians: η1 centred at `t1`, η2 at `t2`.
pub fn transfer_waveform(p: &TransferParams) -> Result<ControlWaveform> {
    Ok(ControlWaveform::new(
        PulseTrain::single(GaussianPulse::new(p.eta0, p.t1, p.width)?),
        PulseTrain::single(GaussianPulse::new(p.eta0, p.t2, p.width)?),
    ))
}

/// η1 = G(t3); η2 = G(t4) + G(t3), so η1/η2 runs from 0 to 1.
pub fn superposition_waveform(p: &SuperpositionParams) -> Result<ControlWaveform> {
    let late = GaussianPulse::new(p.eta0, p.t3, p.width)?;
    let early = GaussianPulse::new(p.eta0, p.t4, p.width)?;
    Ok(ControlWaveform::new(
        PulseTrain::single(late),
        PulseTrain::new(alloc::vec![early, late])?,
    ))
}

/// `η, θ, η̇, θ̇, θ̈` at time `t`.
///
/// Everything is evaluated from log-derivatives of the two channels, so the
/// result stays finite deep in the pulse tails where `η1` and `η2` underflow:
///
/// * `θ = arctan(exp(ln η1 − ln η2))`
/// * `θ̇ = sinθ cosθ · (η̇1/η1 − η̇2/η2)`, identical to `(η̇1η2 − η̇2η1)/η²`
/// * `η̇ = η(sin²θ · η̇1/η1 + cos²θ · η̇2/η2)`
/// * `θ̈ = cos2θ · θ̇ · (η̇1/η1 − η̇2/η2) + sinθ cosθ · (ℓ1'' − ℓ2'')` with `ℓ = ln η`
pub fn derived_angles(w: &ControlWaveform, t: f64) -> Result<DerivedAngles> {
    let p1 = w.eta1.log_profile(t);
    let p2 = w.eta2.log_profile(t);
    match (p1, p2) {
        (None, None) => Err(Error::DegenerateControl { t }),
        (Some(only), None) | (None, Some(only)) => {
            let theta = if w.eta2.is_identically_zero() { FRAC_PI_2 } else { 0.0 };
            let eta = only.log_value.exp();
            Ok(DerivedAngles {
                eta,
                theta,
                eta_dot: eta * only.slope,
                theta_dot: 0.0,
                theta_ddot: 0.0,
            })
        }
        (Some(a), Some(b)) => {
            let x = a.log_value - b.log_value;
            let theta = if x <= 0.0 {
                x.exp().atan()
            } else {
                FRAC_PI_2 - (-x).exp().atan()
            };
            let (s, c) = theta.sin_cos();
            let log_eta = a.log_value.max(b.log_value) + 0.5 * (-2.0 * x.abs()).exp().ln_1p();
            let eta = log_eta.exp();
            let slope_gap = a.slope - b.slope;
            let theta_dot = s * c * slope_gap;
            let eta_dot = eta * (s * s * a.slope + c * c * b.slope);
            let log_curv_a = a.curvature - a.slope * a.slope;
            let log_curv_b = b.curvature - b.slope * b.slope;
            let theta_ddot = (c * c - s * s) * theta_dot * slope_gap + s * c * (log_curv_a - log_curv_b);
            Ok(DerivedAngles {
                eta,
                theta,
                eta_dot,
                theta_dot,
                theta_ddot,
            })
        }
    }
}
