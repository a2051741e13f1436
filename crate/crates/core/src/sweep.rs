//! Exhaustive agreement checks between the closed-form tables and
//! enumeration.

use std::fmt;

use rayon::prelude::*;

use crate::codegen::{build_defining_set, generate_code, CodeParams, Family, ENUMERATION_CAP};
use crate::simplicial::SubsetMask;
use crate::spectra::{lee_spectrum_bruteforce, lee_spectrum_closed_form, ClosedForm, SpectrumError};

/// Every `(A, B, C)` over `[m]` that satisfies the family's hypotheses, in
/// lexicographic mask order.
pub fn valid_params(family: Family, m: u32) -> Vec<CodeParams> {
    let top = 1u32 << m;
    let mut out = Vec::new();
    for a in 0..top {
        for b in 0..top {
            for c in 0..top {
                let mask = |bits| SubsetMask::new(bits, m).expect("bits within ground set");
                let p = CodeParams::new(family, mask(a), mask(b), mask(c)).expect("same ground set");
                if p.validate().is_ok() {
                    out.push(p);
                }
            }
        }
    }
    out
}

/// Closed-form evaluator under test; [`lee_spectrum_closed_form`] in
/// production, replaceable for fault injection.
pub type Evaluator = dyn Fn(&CodeParams) -> Result<ClosedForm, SpectrumError> + Sync;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub params: CodeParams,
    pub what: String,
}

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = &self.params;
        write!(f, "{} m={} A={} B={} C={}: {}", p.family, p.m(), p.a, p.b, p.c, self.what)
    }
}

#[derive(Debug, Clone, Default)]
pub struct VerifySummary {
    pub checked: usize,
    /// parameter sets whose nominal type is excused by a zero-weight fold
    pub flagged: Vec<CodeParams>,
    pub mismatches: Vec<Mismatch>,
}

impl VerifySummary {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Checks one parameter set; returns the mismatches and whether its
/// nominal type was excused.
pub fn check_params(params: &CodeParams, evaluator: &Evaluator) -> (Vec<Mismatch>, bool) {
    let mut out = Vec::new();
    let mut push = |what: String| out.push(Mismatch { params: *params, what });
    let set = match build_defining_set(*params) {
        Ok(s) => s,
        Err(e) => {
            push(format!("construction failed: {e}"));
            return (out, false);
        }
    };
    let expected_n = params.profile().expected_length(params.family);
    if set.len() as u64 != expected_n {
        push(format!("length {} but identity gives {expected_n}", set.len()));
    }
    let code = match generate_code(&set) {
        Ok(c) => c,
        Err(e) => {
            push(format!("enumeration failed: {e}"));
            return (out, false);
        }
    };
    let brute = lee_spectrum_bruteforce(&code);
    let cf = match evaluator(params) {
        Ok(cf) => cf,
        Err(e) => {
            push(format!("closed form failed: {e}"));
            return (out, false);
        }
    };
    if cf.distribution != brute {
        push(format!(
            "closed form {:?} differs from enumeration {:?}",
            cf.distribution.iter().collect::<Vec<_>>(),
            brute.iter().collect::<Vec<_>>()
        ));
    }
    let actual = (code.k1, code.k2);
    if cf.effective_type != actual {
        push(format!("effective type {:?} but enumerated {:?}", cf.effective_type, actual));
    }
    let excused = cf.folded > 0;
    if !excused && cf.nominal_type != actual {
        push(format!("nominal type {:?} but enumerated {:?}", cf.nominal_type, actual));
    }
    (out, excused && cf.nominal_type != actual)
}

/// Runs [`check_params`] over every valid parameter set with `m` in
/// `2..=m_max`. Results are in sweep order regardless of thread count.
pub fn verify_family(family: Family, m_max: u32, evaluator: &Evaluator) -> Result<VerifySummary, String> {
    if m_max > ENUMERATION_CAP {
        return Err(format!("m-max {m_max} exceeds the enumeration cap {ENUMERATION_CAP}"));
    }
    let params: Vec<_> = (2..=m_max).flat_map(|m| valid_params(family, m)).collect();
    let results: Vec<_> = params.par_iter().map(|p| check_params(p, evaluator)).collect();
    let mut summary = VerifySummary { checked: params.len(), ..Default::default() };
    for (p, (mismatches, flagged)) in params.iter().zip(results) {
        if flagged {
            summary.flagged.push(*p);
        }
        summary.mismatches.extend(mismatches);
    }
    Ok(summary)
}

/// Production evaluator.
pub fn closed_form_evaluator() -> &'static Evaluator {
    &lee_spectrum_closed_form
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectra::WeightDistribution;

    #[test]
    fn counts_of_valid_sets() {
        // B != C leaves 8^m - 4^m triples
        assert_eq!(valid_params(Family::F1, 2).len(), 64 - 16);
        // F3 needs B, C != [m]
        assert_eq!(valid_params(Family::F3, 2).len(), 4 * 3 * 3);
    }

    #[test]
    fn small_sweeps_pass_with_at_most_two_generators_in_a() {
        // F2 has no valid set at m = 2
        for (family, m_max) in [(Family::F1, 2), (Family::F2, 3), (Family::F3, 2)] {
            let s = verify_family(family, m_max, closed_form_evaluator()).unwrap();
            assert!(s.passed(), "{family}: {}", s.mismatches[0]);
            assert!(s.checked > 0);
        }
    }

    #[test]
    fn injected_fault_is_reported() {
        let faulty = |p: &CodeParams| {
            let mut cf = lee_spectrum_closed_form(p)?;
            if p.a.len() == 1 {
                let mut pairs: Vec<_> = cf.distribution.iter().collect();
                pairs.last_mut().unwrap().1 += 1;
                cf.distribution = WeightDistribution::from_pairs(pairs);
            }
            Ok(cf)
        };
        let s = verify_family(Family::F3, 2, &faulty).unwrap();
        assert!(!s.passed());
        assert!(s.mismatches.iter().all(|m| m.params.a.len() == 1));
        assert!(s.mismatches[0].to_string().starts_with("f3 m=2 A="));
    }

    #[test]
    fn cap_is_enforced() {
        assert!(verify_family(Family::F1, ENUMERATION_CAP + 1, closed_form_evaluator()).is_err());
    }
}
