//! Exact arithmetic on minor totals of the natural sequence, `S_n = 1 + 2 + ... + n`.
//!
//! The crate covers four related pieces of work:
//!
//! * [`numeric`]: exact triangular numbers, their residues modulo a base, and base-`L` digits.
//! * [`residue`]: exact units-digit distributions, gap classification and empirical counts.
//! * [`prover`]: case enumeration of `S_{Lk+i} mod L` over `i` and the parity of `k`.
//! * [`pascal`]: Pascal rows and the quadratic diagonal `C(n, 2)`.
//! * [`growth`]: a cumulative-sum model of cell population growth with power-law fitting.

pub mod error;
pub mod growth;
pub mod numeric;
pub mod pascal;
pub mod prover;
pub mod residue;

pub use error::{Error, Result};
pub use growth::{
    default_window, digit_histogram, fit_power_law, simulate, DividingDynamics, GrowthTrace,
    PowerLawFit,
};
pub use numeric::{
    from_digits, to_digits, tri_exact, tri_mod, tri_mod_u64, units_digit, BaseSpec, DigitString,
    Natural,
};
pub use pascal::{pascal_row, quadratic_diagonal, PascalRow};
pub use prover::{
    enumerate_cases, render_transcript, verify_case, CongruenceCase, KParity, ProofTranscript,
};
pub use residue::{
    classify, classify_all, empirical_frequencies, power_of_two_sweep, residue_profile,
    EmpiricalFrequencies, Frequency, GapClassification, ResidueProfile, DEFAULT_SAMPLE_SIZE,
};
