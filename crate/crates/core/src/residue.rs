//! Units-digit distributions of `S_n` in a given base.
//!
//! Because `S_{n+2L} - S_n = L(2n + 2L + 1)`, the residue sequence `n -> S_n mod L` repeats
//! with period `2L`, so one pass over the window `[0, 2L)` yields the exact distribution.

use num_rational::Ratio;
use num_traits::Zero;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::numeric::{tri_mod_u64, BaseSpec};

/// Exact frequency of a digit, always in lowest terms.
pub type Frequency = Ratio<u64>;

/// Sample size used when the caller does not choose one.
pub const DEFAULT_SAMPLE_SIZE: u64 = 100_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResidueProfile {
    pub base: BaseSpec,
    /// Minimal period of `n -> S_n mod L`; always divides `2L`.
    pub period: u64,
    /// Sorted digits with non-zero frequency.
    pub reachable: Vec<u32>,
    /// Indexed by digit, one entry for every digit `0..L`.
    pub frequency: Vec<Frequency>,
}

impl ResidueProfile {
    pub fn frequency_of(&self, digit: u32) -> Frequency {
        self.frequency
            .get(digit as usize)
            .copied()
            .unwrap_or_else(Frequency::zero)
    }

    pub fn missing(&self) -> Vec<u32> {
        (0..self.base.get())
            .filter(|&d| self.frequency[d as usize].is_zero())
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GapClassification {
    pub base: BaseSpec,
    pub gappy: bool,
    pub missing_digits: Vec<u32>,
}

/// Counts of units digits of `S_1 ... S_N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EmpiricalFrequencies {
    pub base: BaseSpec,
    pub sample_size: u64,
    /// Indexed by digit.
    pub counts: Vec<u64>,
}

impl EmpiricalFrequencies {
    pub(crate) fn from_residues(
        base: BaseSpec,
        residues: impl IntoIterator<Item = u32>,
    ) -> Result<Self> {
        let mut counts = vec![0u64; base.get() as usize];
        let mut sample_size = 0u64;
        for r in residues {
            counts[r as usize] += 1;
            sample_size += 1;
        }
        if sample_size == 0 {
            return Err(Error::ZeroSampleSize);
        }
        Ok(EmpiricalFrequencies {
            base,
            sample_size,
            counts,
        })
    }

    /// Digits that were observed at least once.
    pub fn support(&self) -> Vec<u32> {
        (0..self.base.get())
            .filter(|&d| self.counts[d as usize] > 0)
            .collect()
    }

    pub fn proportion(&self, digit: u32) -> Frequency {
        Ratio::new(self.counts[digit as usize], self.sample_size)
    }

    /// `|count/N - frequency|` per digit, exactly.
    pub fn deviations(&self, profile: &ResidueProfile) -> Vec<Frequency> {
        (0..self.base.get())
            .map(|d| {
                let observed = self.proportion(d);
                let exact = profile.frequency_of(d);
                if observed >= exact {
                    observed - exact
                } else {
                    exact - observed
                }
            })
            .collect()
    }

    pub fn max_deviation(&self, profile: &ResidueProfile) -> Frequency {
        self.deviations(profile)
            .into_iter()
            .max()
            .unwrap_or_else(Frequency::zero)
    }
}

pub fn residue_profile(base: BaseSpec) -> ResidueProfile {
    let window_len = base.window();
    let window: Vec<u32> = (0..window_len).map(|n| tri_mod_u64(n, base)).collect();

    let period = (1..=window_len)
        .filter(|&p| window_len.is_multiple_of(p))
        .find(|&p| (p as usize..window.len()).all(|n| window[n] == window[n - p as usize]))
        .unwrap_or(window_len);

    let mut counts = vec![0u64; base.get() as usize];
    for &r in &window {
        counts[r as usize] += 1;
    }
    let frequency: Vec<Frequency> = counts.iter().map(|&c| Ratio::new(c, window_len)).collect();
    let reachable = (0..base.get())
        .filter(|&d| counts[d as usize] > 0)
        .collect();

    ResidueProfile {
        base,
        period,
        reachable,
        frequency,
    }
}

pub fn classify(base: BaseSpec) -> GapClassification {
    let missing_digits = residue_profile(base).missing();
    GapClassification {
        base,
        gappy: !missing_digits.is_empty(),
        missing_digits,
    }
}

/// Counts the units digits of `S_1 ... S_N` by direct evaluation.
pub fn empirical_frequencies(base: BaseSpec, sample_size: u64) -> Result<EmpiricalFrequencies> {
    if sample_size == 0 {
        return Err(Error::ZeroSampleSize);
    }
    EmpiricalFrequencies::from_residues(base, (1..=sample_size).map(|n| tri_mod_u64(n, base)))
}

/// Classifies every base in `bases`, in input order.
pub fn classify_all(bases: &[BaseSpec]) -> Vec<GapClassification> {
    bases.par_iter().map(|&b| classify(b)).collect()
}

/// `(L, gappy)` for every `L` in `2..=max_base`.
pub fn power_of_two_sweep(max_base: u64) -> Result<Vec<(BaseSpec, bool)>> {
    let top = BaseSpec::new(max_base)?;
    let bases: Vec<BaseSpec> = (BaseSpec::MIN..=top.get())
        .map(|l| BaseSpec::new(l as u64).expect("within range"))
        .collect();
    Ok(classify_all(&bases)
        .into_iter()
        .map(|c| (c.base, c.gappy))
        .collect())
}
