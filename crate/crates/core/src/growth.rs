//! Idealized multicellular growth.
//!
//! At each discrete step `t = 1, 2, ...` the `d(t)` dividing cells each contribute one new
//! descendant, so the total cell count is the running sum `N(t) = N0 + d(1) + ... + d(t)`.
//! With `d(t) = t` the totals are exactly the triangular numbers.

use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::numeric::{units_digit, BaseSpec, Natural};
use crate::residue::EmpiricalFrequencies;

/// How the number of dividing cells evolves over time.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DividingDynamics {
    /// `d(t) = t`.
    LinearGrowth,
    /// `d(t) = level`.
    Constant { level: u64 },
    /// `d(t) = max(start - slope * t, 0)`.
    LinearDecline { start: u64, slope: u64 },
}

impl DividingDynamics {
    pub fn constant(level: u64) -> Result<Self> {
        if level == 0 {
            return Err(Error::InvalidDynamics(format!("constant:{level}")));
        }
        Ok(DividingDynamics::Constant { level })
    }

    pub fn linear_decline(start: u64, slope: u64) -> Result<Self> {
        if start == 0 || slope == 0 {
            return Err(Error::InvalidDynamics(format!("decline:{start},{slope}")));
        }
        Ok(DividingDynamics::LinearDecline { start, slope })
    }

    pub fn dividing_at(&self, t: u64) -> u64 {
        match *self {
            DividingDynamics::LinearGrowth => t,
            DividingDynamics::Constant { level } => level,
            DividingDynamics::LinearDecline { start, slope } => slope
                .checked_mul(t)
                .map_or(0, |drop| start.saturating_sub(drop)),
        }
    }
}

impl FromStr for DividingDynamics {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let invalid = || Error::InvalidDynamics(s.to_string());
        let number = |text: &str| -> Result<u64> {
            if text.is_empty() || !text.bytes().all(|b| b.is_ascii_digit()) {
                return Err(invalid());
            }
            text.parse().map_err(|_| invalid())
        };
        match s.split_once(':') {
            None if s == "linear" => Ok(DividingDynamics::LinearGrowth),
            Some(("constant", level)) => {
                DividingDynamics::constant(number(level)?).map_err(|_| invalid())
            }
            Some(("decline", params)) => {
                let (start, slope) = params.split_once(',').ok_or_else(invalid)?;
                DividingDynamics::linear_decline(number(start)?, number(slope)?)
                    .map_err(|_| invalid())
            }
            _ => Err(invalid()),
        }
    }
}

impl fmt::Display for DividingDynamics {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DividingDynamics::LinearGrowth => f.write_str("linear"),
            DividingDynamics::Constant { level } => write!(f, "constant:{level}"),
            DividingDynamics::LinearDecline { start, slope } => {
                write!(f, "decline:{start},{slope}")
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrowthTrace {
    dynamics: DividingDynamics,
    initial_total: Natural,
    dividing: Vec<Natural>,
    total: Vec<Natural>,
}

impl GrowthTrace {
    pub fn dynamics(&self) -> DividingDynamics {
        self.dynamics
    }

    pub fn horizon(&self) -> u64 {
        self.total.len() as u64
    }

    pub fn initial_total(&self) -> &Natural {
        &self.initial_total
    }

    /// `d(1) ... d(T)`.
    pub fn dividing(&self) -> &[Natural] {
        &self.dividing
    }

    /// `N(1) ... N(T)`.
    pub fn total(&self) -> &[Natural] {
        &self.total
    }

    /// `N(t)` for `1 <= t <= T`.
    pub fn total_at(&self, t: u64) -> Option<&Natural> {
        t.checked_sub(1).and_then(|i| self.total.get(i as usize))
    }
}

pub fn simulate(
    dynamics: DividingDynamics,
    horizon: u64,
    initial_total: Natural,
) -> Result<GrowthTrace> {
    if horizon == 0 {
        return Err(Error::ZeroHorizon);
    }
    let mut dividing = Vec::with_capacity(horizon as usize);
    let mut total = Vec::with_capacity(horizon as usize);
    let mut running = initial_total.clone();
    for t in 1..=horizon {
        let d = Natural::from(dynamics.dividing_at(t));
        running += &d;
        dividing.push(d);
        total.push(running.clone());
    }
    Ok(GrowthTrace {
        dynamics,
        initial_total,
        dividing,
        total,
    })
}

/// Least-squares line `ln N(t) = offset + exponent * ln t`.
#[derive(Clone, Debug, PartialEq)]
pub struct PowerLawFit {
    pub exponent: f64,
    pub offset: f64,
    pub fit_window: RangeInclusive<u64>,
    /// Root-mean-square residual in log-log space.
    pub residual: f64,
}

/// Upper half of the trace, `[max(T/2, 1), T]`.
pub fn default_window(trace: &GrowthTrace) -> RangeInclusive<u64> {
    let horizon = trace.horizon();
    (horizon / 2).max(1)..=horizon
}

pub fn fit_power_law(trace: &GrowthTrace, window: RangeInclusive<u64>) -> Result<PowerLawFit> {
    let (start, end) = (*window.start(), *window.end());
    if start > end {
        return Err(Error::EmptyWindow);
    }
    if start < 1 || end > trace.horizon() {
        return Err(Error::WindowOutOfRange {
            start,
            end,
            horizon: trace.horizon(),
        });
    }
    if start == end {
        return Err(Error::DegenerateWindow);
    }

    let mut points = Vec::with_capacity((end - start + 1) as usize);
    for t in start..=end {
        let total = trace.total_at(t).expect("window checked against horizon");
        if total.is_zero() {
            return Err(Error::NonPositiveTotal(t));
        }
        points.push(((t as f64).ln(), total.to_f64().ln()));
    }

    let count = points.len() as f64;
    let mean_x = points.iter().map(|p| p.0).sum::<f64>() / count;
    let mean_y = points.iter().map(|p| p.1).sum::<f64>() / count;
    let (sxx, sxy) = points.iter().fold((0.0, 0.0), |(sxx, sxy), &(x, y)| {
        let dx = x - mean_x;
        (sxx + dx * dx, sxy + dx * (y - mean_y))
    });
    let exponent = sxy / sxx;
    let offset = mean_y - exponent * mean_x;
    let residual = (points
        .iter()
        .map(|&(x, y)| (y - offset - exponent * x).powi(2))
        .sum::<f64>()
        / count)
        .sqrt();

    Ok(PowerLawFit {
        exponent,
        offset,
        fit_window: window,
        residual,
    })
}

/// Units digits of `N(1) ... N(T)` in the given base.
pub fn digit_histogram(trace: &GrowthTrace, base: BaseSpec) -> EmpiricalFrequencies {
    EmpiricalFrequencies::from_residues(base, trace.total.iter().map(|n| units_digit(n, base)))
        .expect("traces are never empty")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::tri_exact;
    use crate::residue::residue_profile;

    fn totals(trace: &GrowthTrace) -> Vec<u64> {
        trace.total().iter().map(|n| n.to_u64().unwrap()).collect()
    }

    fn base(l: u64) -> BaseSpec {
        BaseSpec::new(l).unwrap()
    }

    #[test]
    fn simulate_examples() {
        let lin = simulate(DividingDynamics::LinearGrowth, 4, Natural::zero()).unwrap();
        assert_eq!(totals(&lin), vec![1, 3, 6, 10]);

        let c = simulate(DividingDynamics::constant(3).unwrap(), 5, Natural::zero()).unwrap();
        assert_eq!(totals(&c), vec![3, 6, 9, 12, 15]);

        let dec = simulate(
            DividingDynamics::linear_decline(5, 1).unwrap(),
            6,
            Natural::zero(),
        )
        .unwrap();
        let dividing: Vec<u64> = dec.dividing().iter().map(|n| n.to_u64().unwrap()).collect();
        assert_eq!(dividing, vec![4, 3, 2, 1, 0, 0]);
        assert_eq!(totals(&dec), vec![4, 7, 9, 10, 10, 10]);
    }

    #[test]
    fn initial_total_offsets_everything() {
        let t = simulate(DividingDynamics::LinearGrowth, 3, Natural::from(1)).unwrap();
        assert_eq!(totals(&t), vec![2, 4, 7]);
        assert_eq!(t.initial_total(), &Natural::from(1));
    }

    #[test]
    fn zero_horizon_rejected() {
        assert_eq!(
            simulate(DividingDynamics::LinearGrowth, 0, Natural::zero()),
            Err(Error::ZeroHorizon)
        );
    }

    #[test]
    fn decline_never_negative_even_on_overflow() {
        let d = DividingDynamics::linear_decline(10, u64::MAX).unwrap();
        assert_eq!(d.dividing_at(0), 10);
        assert_eq!(d.dividing_at(1), 0);
        assert_eq!(d.dividing_at(u64::MAX), 0);
    }

    #[test]
    fn linear_growth_is_triangular() {
        let trace = simulate(DividingDynamics::LinearGrowth, 10_000, Natural::zero()).unwrap();
        for t in 1..=10_000u64 {
            assert_eq!(trace.total_at(t), Some(&tri_exact(&Natural::from(t))));
        }
    }

    #[test]
    fn trace_invariants() {
        for dynamics in [
            DividingDynamics::LinearGrowth,
            DividingDynamics::constant(7).unwrap(),
            DividingDynamics::linear_decline(40, 3).unwrap(),
        ] {
            let n0 = Natural::from(5);
            let trace = simulate(dynamics, 200, n0.clone()).unwrap();
            let mut prev = n0.clone();
            for (d, n) in trace.dividing().iter().zip(trace.total()) {
                assert!(n >= &prev);
                assert_eq!(&(&prev + d), n);
                prev = n.clone();
            }
            let sum = trace.dividing().iter().fold(n0, |acc, d| &acc + d);
            assert_eq!(trace.total().last(), Some(&sum));
        }
    }

    #[test]
    fn parse_dynamics() {
        assert_eq!("linear".parse(), Ok(DividingDynamics::LinearGrowth));
        assert_eq!(
            "constant:3".parse(),
            Ok(DividingDynamics::Constant { level: 3 })
        );
        assert_eq!(
            "decline:5,1".parse(),
            Ok(DividingDynamics::LinearDecline { start: 5, slope: 1 })
        );
        for bad in [
            "",
            "linear:1",
            "constant",
            "constant:",
            "constant:0",
            "constant:-1",
            "decline:5",
            "decline:5,0",
            "decline:0,1",
            "decline:a,b",
            "exponential",
        ] {
            assert!(bad.parse::<DividingDynamics>().is_err(), "{bad:?}");
        }
        for d in ["linear", "constant:12", "decline:9,2"] {
            assert_eq!(d.parse::<DividingDynamics>().unwrap().to_string(), d);
        }
    }

    #[test]
    fn fit_linear_growth_slope_two() {
        let trace = simulate(DividingDynamics::LinearGrowth, 1000, Natural::zero()).unwrap();
        let fit = fit_power_law(&trace, 500..=1000).unwrap();
        assert!((fit.exponent - 2.0).abs() < 0.05, "{}", fit.exponent);
        // N(t) = t(t+1)/2 = exp(offset) t^2 asymptotically, offset -> ln(1/2)
        assert!((fit.offset - 0.5f64.ln()).abs() < 0.05, "{}", fit.offset);
    }

    #[test]
    fn fit_constant_is_exactly_linear() {
        for c in [1, 3, 17] {
            let trace = simulate(
                DividingDynamics::constant(c).unwrap(),
                1000,
                Natural::zero(),
            )
            .unwrap();
            let fit = fit_power_law(&trace, 500..=1000).unwrap();
            assert!((fit.exponent - 1.0).abs() < 1e-6);
            assert!((fit.offset - (c as f64).ln()).abs() < 1e-6);
            assert!(fit.residual < 1e-9);
        }
    }

    #[test]
    fn fit_errors() {
        let dec = simulate(
            DividingDynamics::linear_decline(1, 1).unwrap(),
            10,
            Natural::zero(),
        )
        .unwrap();
        assert_eq!(fit_power_law(&dec, 2..=10), Err(Error::NonPositiveTotal(2)));

        let lin = simulate(DividingDynamics::LinearGrowth, 10, Natural::zero()).unwrap();
        #[allow(clippy::reversed_empty_ranges)]
        let empty = 5..=4;
        assert_eq!(fit_power_law(&lin, empty), Err(Error::EmptyWindow));
        assert_eq!(
            fit_power_law(&lin, 0..=4),
            Err(Error::WindowOutOfRange {
                start: 0,
                end: 4,
                horizon: 10
            })
        );
        assert!(matches!(
            fit_power_law(&lin, 1..=11),
            Err(Error::WindowOutOfRange { .. })
        ));
        assert_eq!(fit_power_law(&lin, 3..=3), Err(Error::DegenerateWindow));
    }

    #[test]
    fn default_window_is_upper_half() {
        let lin = simulate(DividingDynamics::LinearGrowth, 1000, Natural::zero()).unwrap();
        assert_eq!(default_window(&lin), 500..=1000);
        let one = simulate(DividingDynamics::LinearGrowth, 1, Natural::zero()).unwrap();
        assert_eq!(default_window(&one), 1..=1);
    }

    #[test]
    fn histograms() {
        let lin = simulate(DividingDynamics::LinearGrowth, 10_000, Natural::zero()).unwrap();
        let ten = digit_histogram(&lin, base(10));
        assert_eq!(ten.sample_size, 10_000);
        for d in [2, 4, 7, 9] {
            assert_eq!(ten.counts[d], 0);
        }
        let eight = digit_histogram(&lin, base(8));
        assert!(eight.counts.iter().all(|&c| c > 0));

        for l in [3, 4, 8, 10, 16] {
            let support = digit_histogram(&lin, base(l)).support();
            let reachable = residue_profile(base(l)).reachable;
            assert!(support.iter().all(|d| reachable.contains(d)), "L={l}");
        }

        let c10 = simulate(
            DividingDynamics::constant(10).unwrap(),
            100,
            Natural::zero(),
        )
        .unwrap();
        let h = digit_histogram(&c10, base(10));
        assert_eq!(h.counts[0], 100);
        assert_eq!(h.counts.iter().sum::<u64>(), 100);
    }
}
