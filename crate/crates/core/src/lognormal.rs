//! Lognormal stroke primitives.
//!
//! A stroke is one primitive movement between consecutive target points,
//! modeled as a single lognormal velocity pulse. Complex movements are
//! weighted sums of time-shifted pulses. This module provides the pulse
//! value, the angular evolution of the velocity direction, the traveled
//! distance in closed form, and the estimation of pulse parameters from
//! a stroke length and timing.

use crate::error::{Error, Result};

/// Floor applied to `t - t0` before taking the logarithm, to avoid the
/// singularity at stroke onset.
const ONSET_EPS: f64 = 1e-12;

/// 3 * sqrt(2), the erf argument at which the pulse is considered complete
/// (erf(3) differs from 1 by ~2e-5).
const THREE_SQRT2: f64 = 4.242640687119285;

/// Parameters of one neuromuscular stroke.
///
/// `amplitude` is the arc length covered by the pulse (meters). `log_mean`
/// and `log_spread` are the lognormal parameters on the log-time axis;
/// `angle_start`/`angle_end` describe the in-plane direction sweep of the
/// stroke velocity.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StrokeParams {
    pub amplitude: f64,
    pub onset: f64,
    pub log_mean: f64,
    pub log_spread: f64,
    pub angle_start: f64,
    pub angle_end: f64,
}

impl StrokeParams {
    pub fn new(
        amplitude: f64,
        onset: f64,
        log_mean: f64,
        log_spread: f64,
        angle_start: f64,
        angle_end: f64,
    ) -> Result<Self> {
        let s = Self {
            amplitude,
            onset,
            log_mean,
            log_spread,
            angle_start,
            angle_end,
        };
        s.validate()?;
        Ok(s)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.log_spread > 0.0) || !self.log_spread.is_finite() {
            return Err(Error::InvalidParameter(format!(
                "log_spread must be > 0, got {}",
                self.log_spread
            )));
        }
        if !(self.amplitude > 0.0) || !self.amplitude.is_finite() {
            return Err(Error::InvalidParameter(format!(
                "amplitude must be > 0, got {}",
                self.amplitude
            )));
        }
        if !self.onset.is_finite() {
            return Err(Error::InvalidParameter("onset must be finite".into()));
        }
        if !self.log_mean.is_finite() {
            return Err(Error::InvalidParameter("log_mean must be finite".into()));
        }
        Ok(())
    }

    /// Time of peak speed, `onset + exp(log_mean - log_spread^2)`.
    pub fn peak_time(&self) -> f64 {
        self.onset + (self.log_mean - self.log_spread * self.log_spread).exp()
    }
}

/// Timing of one stroke: total span and the offset of the speed maximum
/// from onset.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StrokeTiming {
    pub duration: f64,
    pub peak_offset: f64,
}

impl StrokeTiming {
    pub fn new(duration: f64, peak_offset: f64) -> Result<Self> {
        if !(duration > 0.0) || !duration.is_finite() {
            return Err(Error::InvalidParameter(format!(
                "duration must be > 0, got {duration}"
            )));
        }
        if !(peak_offset > 0.0 && peak_offset < duration) {
            return Err(Error::InvalidParameter(format!(
                "peak_offset must be in (0, duration), got {peak_offset}"
            )));
        }
        Ok(Self {
            duration,
            peak_offset,
        })
    }
}

impl Default for StrokeTiming {
    /// The canonical isolated stroke: 0.1 s span, peak at 0.05 s.
    fn default() -> Self {
        Self {
            duration: 0.1,
            peak_offset: 0.05,
        }
    }
}

/// Unit-amplitude lognormal pulse value at time `t` (1/seconds).
///
/// Zero for `t <= t0`; integrates to 1 over `(t0, inf)`.
pub fn lognormal_value(t: f64, t0: f64, mu: f64, sigma: f64) -> Result<f64> {
    if !(sigma > 0.0) || !sigma.is_finite() {
        return Err(Error::InvalidParameter(format!(
            "sigma must be > 0, got {sigma}"
        )));
    }
    Ok(lognormal_value_unchecked(t, t0, mu, sigma))
}

#[inline]
fn lognormal_value_unchecked(t: f64, t0: f64, mu: f64, sigma: f64) -> f64 {
    if t <= t0 {
        return 0.0;
    }
    let dt = (t - t0).max(ONSET_EPS);
    let z = (dt.ln() - mu) / sigma;
    (-0.5 * z * z).exp() / (sigma * (2.0 * std::f64::consts::PI).sqrt() * dt)
}

/// Scalar stroke speed (m/s): amplitude times the unit pulse.
pub fn stroke_speed(t: f64, s: &StrokeParams) -> Result<f64> {
    s.validate()?;
    Ok(s.amplitude * lognormal_value_unchecked(t, s.onset, s.log_mean, s.log_spread))
}

/// Direction angle of the stroke velocity at time `t` (radians).
///
/// Sweeps from `angle_start` to `angle_end` following the erf progression;
/// equals `angle_start` for `t <= onset` and the midpoint angle at the
/// lognormal median `onset + exp(log_mean)`.
pub fn stroke_angle(t: f64, s: &StrokeParams) -> Result<f64> {
    s.validate()?;
    if t <= s.onset {
        return Ok(s.angle_start);
    }
    let dt = (t - s.onset).max(ONSET_EPS);
    let z = (dt.ln() - s.log_mean) / (s.log_spread * std::f64::consts::SQRT_2);
    Ok(s.angle_start + 0.5 * (s.angle_end - s.angle_start) * (1.0 + libm::erf(z)))
}

/// In-plane stroke velocity vector (m/s): speed along the current direction.
pub fn stroke_velocity(t: f64, s: &StrokeParams) -> Result<[f64; 2]> {
    let speed = stroke_speed(t, s)?;
    let angle = stroke_angle(t, s)?;
    Ok([speed * angle.cos(), speed * angle.sin()])
}

/// Pointwise vector sum of stroke velocities over a stroke sequence.
pub fn sum_velocity(t: f64, strokes: &[StrokeParams]) -> Result<[f64; 2]> {
    if strokes.is_empty() {
        return Err(Error::InvalidArgument(
            "sum_velocity requires at least one stroke".into(),
        ));
    }
    let mut v = [0.0, 0.0];
    for s in strokes {
        let vs = stroke_velocity(t, s)?;
        v[0] += vs[0];
        v[1] += vs[1];
    }
    Ok(v)
}

/// Distance traveled along the stroke by time `t` (meters), in closed form:
/// `(D/2) * (1 + erf((ln(t - t0) - mu) / (sqrt(2) sigma)))`.
///
/// Monotone nondecreasing; 0 at onset; tends to `amplitude` as `t -> inf`.
pub fn distance_traveled(t: f64, s: &StrokeParams) -> Result<f64> {
    s.validate()?;
    if t <= s.onset {
        return Ok(0.0);
    }
    let dt = (t - s.onset).max(ONSET_EPS);
    let z = (dt.ln() - s.log_mean) / (s.log_spread * std::f64::consts::SQRT_2);
    Ok(0.5 * s.amplitude * (1.0 + libm::erf(z)))
}

/// Estimates `(amplitude, log_mean, log_spread)` for a stroke of arc length
/// `arc_length` with the given timing.
///
/// The spread is the positive root of `sigma^2 + 3*sqrt(2)*sigma - ln k = 0`
/// with `k = duration / peak_offset`, and the log mean is back-substituted
/// so the reconstructed speed peaks exactly `peak_offset` after onset.
pub fn estimate_stroke_params(
    arc_length: f64,
    onset: f64,
    timing: &StrokeTiming,
) -> Result<StrokeParams> {
    if !(arc_length > 0.0) || !arc_length.is_finite() {
        return Err(Error::InvalidParameter(format!(
            "arc_length must be > 0, got {arc_length}"
        )));
    }
    let k = timing.duration / timing.peak_offset;
    if k <= 1.0 {
        return Err(Error::DegenerateParameter(format!(
            "duration/peak_offset = {k} <= 1 forces a non-positive spread"
        )));
    }
    let sigma = 0.5 * (-THREE_SQRT2 + (THREE_SQRT2 * THREE_SQRT2 + 4.0 * k.ln()).sqrt());
    let mu = timing.peak_offset.ln() + sigma * sigma;
    StrokeParams::new(arc_length, onset, mu, sigma, 0.0, 0.0)
}
