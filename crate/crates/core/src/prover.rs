//! Case enumeration for `S_{Lk+i} mod L`.
//!
//! Write `n = Lk + i` with `0 <= i < L`. Since `S_n mod L` has period `2L` in `n`, the
//! residue of `S_{Lk+i}` depends only on `i` and on `k mod 2`. Evaluating the
//! representatives `k = 0` and `k = 1` therefore settles every case, and each case is
//! either the same for all `k` or splits by the parity of `k`.

use std::fmt::{self, Write as _};

use crate::numeric::{tri_mod_u64, BaseSpec};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum KParity {
    Any,
    Even,
    Odd,
}

impl KParity {
    pub fn admits(self, k: u64) -> bool {
        match self {
            KParity::Any => true,
            KParity::Even => k.is_multiple_of(2),
            KParity::Odd => k % 2 == 1,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            KParity::Any => "any",
            KParity::Even => "even",
            KParity::Odd => "odd",
        }
    }

    fn qualifier(self) -> &'static str {
        match self {
            KParity::Any => "all k",
            KParity::Even => "k even",
            KParity::Odd => "k odd",
        }
    }
}

impl fmt::Display for KParity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// The claim `S_{Lk+i} ≡ j (mod L)` for every `k` of the given parity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CongruenceCase {
    pub base: BaseSpec,
    pub input_digit: u32,
    pub k_parity: KParity,
    pub output_digit: u32,
}

impl fmt::Display for CongruenceCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let l = self.base.get();
        write!(
            f,
            "S_{{{l}k+{}}} == {} (mod {l}) [{}]",
            self.input_digit,
            self.output_digit,
            self.k_parity.qualifier()
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProofTranscript {
    pub base: BaseSpec,
    /// Ordered by input digit; an even case precedes its odd partner.
    pub cases: Vec<CongruenceCase>,
    pub derived_reachable: Vec<u32>,
    pub derived_missing: Vec<u32>,
}

impl ProofTranscript {
    pub fn cases_for(&self, input_digit: u32) -> impl Iterator<Item = &CongruenceCase> {
        self.cases
            .iter()
            .filter(move |c| c.input_digit == input_digit)
    }
}

pub fn enumerate_cases(base: BaseSpec) -> ProofTranscript {
    let l = base.get();
    let mut cases = Vec::with_capacity(l as usize);
    let mut hit = vec![false; l as usize];

    for i in 0..l {
        let j_even = tri_mod_u64(i as u64, base);
        let j_odd = tri_mod_u64(l as u64 + i as u64, base);
        let case = |k_parity, output_digit| CongruenceCase {
            base,
            input_digit: i,
            k_parity,
            output_digit,
        };
        if j_even == j_odd {
            cases.push(case(KParity::Any, j_even));
        } else {
            cases.push(case(KParity::Even, j_even));
            cases.push(case(KParity::Odd, j_odd));
        }
        hit[j_even as usize] = true;
        hit[j_odd as usize] = true;
    }

    let (derived_reachable, derived_missing) = (0..l).partition(|&d| hit[d as usize]);
    ProofTranscript {
        base,
        cases,
        derived_reachable,
        derived_missing,
    }
}

/// Checks the case directly for every admissible `k` in `0..=k_limit`.
///
/// A failure here is the counterpart of a non-integral quotient `m` in `S_n = Lm + j`.
pub fn verify_case(case: &CongruenceCase, k_limit: u64) -> bool {
    let l = case.base.get() as u64;
    (0..=k_limit)
        .filter(|&k| case.k_parity.admits(k))
        .all(|k| tri_mod_u64(l * k + case.input_digit as u64, case.base) == case.output_digit)
}

fn brace_set(digits: &[u32]) -> String {
    let inner = digits
        .iter()
        .map(u32::to_string)
        .collect::<Vec<_>>()
        .join(", ");
    format!("{{{inner}}}")
}

/// Plain ASCII listing: a `base=L` header, one line per case, and a `missing:` footer.
pub fn render_transcript(t: &ProofTranscript) -> String {
    let mut out = String::new();
    writeln!(out, "base={}", t.base).unwrap();
    for case in &t.cases {
        writeln!(out, "{case}").unwrap();
    }
    writeln!(out, "missing: {}", brace_set(&t.derived_missing)).unwrap();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::residue::residue_profile;

    fn base(l: u64) -> BaseSpec {
        BaseSpec::new(l).unwrap()
    }

    fn case(l: u64, i: u32, k_parity: KParity, j: u32) -> CongruenceCase {
        CongruenceCase {
            base: base(l),
            input_digit: i,
            k_parity,
            output_digit: j,
        }
    }

    #[test]
    fn base_three() {
        let t = enumerate_cases(base(3));
        assert_eq!(
            t.cases,
            vec![
                case(3, 0, KParity::Any, 0),
                case(3, 1, KParity::Any, 1),
                case(3, 2, KParity::Any, 0),
            ]
        );
        assert_eq!(t.derived_missing, vec![2]);
        assert!(t.cases.iter().all(|c| c.output_digit != 2));
    }

    #[test]
    fn base_four_parity_split() {
        let t = enumerate_cases(base(4));
        let zero: Vec<_> = t.cases_for(0).copied().collect();
        assert_eq!(
            zero,
            vec![case(4, 0, KParity::Even, 0), case(4, 0, KParity::Odd, 2)]
        );
        let one: Vec<_> = t.cases_for(1).copied().collect();
        assert_eq!(
            one,
            vec![case(4, 1, KParity::Even, 1), case(4, 1, KParity::Odd, 3)]
        );
        assert_eq!(t.derived_reachable, vec![0, 1, 2, 3]);
        assert!(t.derived_missing.is_empty());
    }

    #[test]
    fn base_two_splits_both_digits() {
        // S_1 = 1 and S_3 = 6 differ mod 2, as do S_0 = 0 and S_2 = 3.
        let t = enumerate_cases(base(2));
        assert_eq!(
            t.cases,
            vec![
                case(2, 0, KParity::Even, 0),
                case(2, 0, KParity::Odd, 1),
                case(2, 1, KParity::Even, 1),
                case(2, 1, KParity::Odd, 0),
            ]
        );
    }

    #[test]
    fn verify_examples() {
        assert!(verify_case(&case(3, 2, KParity::Any, 0), 100));
        assert!(verify_case(&case(3, 1, KParity::Any, 1), 100));
        assert!(!verify_case(&case(3, 0, KParity::Any, 2), 100));
        assert!(!verify_case(&case(4, 0, KParity::Any, 0), 100));
        assert!(verify_case(&case(4, 0, KParity::Even, 0), 100));
    }

    #[test]
    fn cases_are_sound_complete_and_consistent() {
        for l in 2..=64u64 {
            let t = enumerate_cases(base(l));
            for i in 0..l as u32 {
                let parities: Vec<KParity> = t.cases_for(i).map(|c| c.k_parity).collect();
                assert!(
                    parities == [KParity::Any] || parities == [KParity::Even, KParity::Odd],
                    "L={l} i={i}: {parities:?}"
                );
            }
            assert!(t.cases.iter().all(|c| verify_case(c, 1000)), "L={l}");
            assert_eq!(t.derived_reachable, residue_profile(base(l)).reachable);
        }
    }

    #[test]
    fn odd_bases_never_split() {
        for l in (3..=255u64).step_by(2) {
            let t = enumerate_cases(base(l));
            assert!(t.cases.iter().all(|c| c.k_parity == KParity::Any), "L={l}");
        }
    }

    #[test]
    fn rendering() {
        let text = render_transcript(&enumerate_cases(base(3)));
        assert_eq!(
            text,
            "base=3\n\
             S_{3k+0} == 0 (mod 3) [all k]\n\
             S_{3k+1} == 1 (mod 3) [all k]\n\
             S_{3k+2} == 0 (mod 3) [all k]\n\
             missing: {2}\n"
        );
        let four = render_transcript(&enumerate_cases(base(4)));
        assert!(four.contains("S_{4k+0} == 2 (mod 4) [k odd]\n"));
        assert!(four.ends_with("missing: {}\n"));
        assert_eq!(four, render_transcript(&enumerate_cases(base(4))));
    }
}
