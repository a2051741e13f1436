//! Structural properties of a code and of its binary Gray image.

use std::collections::HashSet;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::codegen::{CodeParams, DefiningSet, Family, QuaternaryCode};
use crate::gf2::Basis;
use crate::spectra::{lee_spectrum_bruteforce, WeightDistribution};
use crate::z4::{BinaryVector, Z4Vector};

/// Largest length swept by [`dual_distance_oracle`].
pub const DUAL_ORACLE_CAP: usize = 10;
/// Largest binary code checked by [`is_minimal_binary`].
pub const MINIMALITY_CAP: usize = 1 << 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AnalysisError {
    #[error("length {n} exceeds the dual-oracle cap of {cap}")]
    DualOverCap { n: usize, cap: usize },
    #[error("Plotkin bound needs at least two codewords (got {0})")]
    TooFewCodewords(u128),
    #[error("minimality is only checked for linear codes")]
    NotLinear,
    #[error("{0} codewords exceed the minimality cap")]
    TooLarge(usize),
    #[error("spectrum has no nonzero weight")]
    TrivialSpectrum,
    #[error("Griesmer bound needs k ≥ 1 and d ≥ 1 (got k = {k}, d = {d})")]
    GriesmerDomain { k: i64, d: i64 },
}

/// How projectivity was decided.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ProjectiveMethod {
    ColumnCriterion,
    DualOracle,
}

/// Column criterion: every column has a unit coordinate and no column
/// equals another or its negative.
pub fn projective_columns(columns: &[Z4Vector]) -> bool {
    // A unit coordinate makes `d ≠ -d`, so only cross pairs need checking.
    if columns.iter().any(|c| c.residue().iter().all(|&w| w == 0)) {
        return false;
    }
    let mut seen: HashSet<&Z4Vector> = HashSet::with_capacity(columns.len());
    if !columns.iter().all(|c| seen.insert(c)) {
        return false;
    }
    columns.iter().all(|c| !seen.contains(&c.neg()))
}

pub fn is_projective_columns(set: &DefiningSet) -> bool {
    projective_columns(set.columns())
}

/// Minimum Lee weight of a nonzero vector of `C^⊥`, by sweeping `Z_4^n`.
/// `None` when the dual is trivial.
pub fn dual_distance_oracle(code: &QuaternaryCode) -> Result<Option<u32>, AnalysisError> {
    let n = code.n;
    if n > DUAL_ORACLE_CAP {
        return Err(AnalysisError::DualOverCap { n, cap: DUAL_ORACLE_CAP });
    }
    let rows = &code.generator;
    let best = (1u64..1 << (2 * n))
        .into_par_iter()
        .filter_map(|x| {
            let low: u64 = (0..n).map(|i| ((x >> (2 * i)) & 1) << i).sum();
            let high: u64 = (0..n).map(|i| ((x >> (2 * i + 1)) & 1) << i).sum();
            let u = Z4Vector::from_planes(n, vec![low], vec![high]);
            rows.iter().all(|r| r.dot_unchecked(&u) == 0).then(|| u.lee_weight())
        })
        .min();
    Ok(best)
}

/// `(⌊k n / (k - 1)⌋, d_L = bound)` for a code of `size` words.
pub fn plotkin_check(n: u64, size: u128, d_l: u64) -> Result<(u128, bool), AnalysisError> {
    if size < 2 {
        return Err(AnalysisError::TooFewCodewords(size));
    }
    let bound = size * u128::from(n) / (size - 1);
    Ok((bound, u128::from(d_l) == bound))
}

/// A set of binary vectors with its Hamming spectrum.
#[derive(Debug, Clone)]
pub struct BinaryCode {
    pub n: usize,
    /// sorted, distinct
    pub codewords: Vec<BinaryVector>,
    pub linear: bool,
    /// `Some(k)` when linear
    pub dimension: Option<u32>,
    pub spectrum: WeightDistribution,
}

impl BinaryCode {
    pub fn from_words(n: usize, mut codewords: Vec<BinaryVector>) -> Self {
        codewords.sort_unstable();
        codewords.dedup();
        let basis = Basis::from_rows(codewords.iter().map(|w| w.words().to_vec()));
        let rank = basis.rank() as u32;
        let has_zero = codewords.first().is_some_and(BinaryVector::is_zero);
        let linear = has_zero && rank < 64 && (1usize << rank) == codewords.len();
        let spectrum = WeightDistribution::from_pairs(codewords.iter().map(|w| (u64::from(w.weight()), 1)));
        Self { n, codewords, linear, dimension: linear.then_some(rank), spectrum }
    }

    pub fn size(&self) -> usize {
        self.codewords.len()
    }

    pub fn min_distance(&self) -> Option<u64> {
        self.spectrum.min_distance().ok()
    }
}

/// `Φ(C)` for every codeword.
pub fn gray_image(code: &QuaternaryCode) -> BinaryCode {
    let words = code.codewords().par_iter().map(Z4Vector::gray).collect();
    BinaryCode::from_words(2 * code.n, words)
}

/// `Φ(C)` is linear iff `2(x_i ∗ x_j) ∈ C` for all generator rows.
pub fn gray_linear_pairtest(code: &QuaternaryCode) -> bool {
    let rows = &code.generator;
    (0..rows.len()).all(|i| {
        (i..rows.len()).all(|j| {
            let w = rows[i].twice_product(&rows[j]).expect("rows share a length");
            code.contains(&w)
        })
    })
}

/// The same test over every pair of codewords.
pub fn gray_linear_all_pairs(code: &QuaternaryCode) -> bool {
    let words = code.codewords();
    words
        .par_iter()
        .enumerate()
        .all(|(i, u)| words[i..].iter().all(|v| code.contains(&u.twice_product(v).expect("same length"))))
}

/// No nonzero codeword's support strictly contains another's.
pub fn is_minimal_binary(code: &BinaryCode) -> Result<bool, AnalysisError> {
    if !code.linear {
        return Err(AnalysisError::NotLinear);
    }
    if code.size() > MINIMALITY_CAP {
        return Err(AnalysisError::TooLarge(code.size()));
    }
    let mut by_weight: Vec<&BinaryVector> = code.codewords.iter().filter(|w| !w.is_zero()).collect();
    by_weight.sort_by_key(|w| w.weight());
    let covered = by_weight.par_iter().enumerate().any(|(i, big)| {
        let wb = big.weight();
        by_weight[..i].iter().any(|small| small.weight() < wb && small.covered_by(big))
    });
    Ok(!covered)
}

/// Ashikhmin–Barg: `2 wt_min > wt_max`.
pub fn ab_condition(spectrum: &WeightDistribution) -> Result<bool, AnalysisError> {
    let min = spectrum.min_distance().map_err(|_| AnalysisError::TrivialSpectrum)?;
    let max = spectrum.max_weight().ok_or(AnalysisError::TrivialSpectrum)?;
    Ok(2 * min > max)
}

/// `n - Σ_{i<k} ⌈d / 2^i⌉`; zero for a code meeting the Griesmer bound.
pub fn griesmer_defect(n: i64, k: i64, d: i64) -> Result<i64, AnalysisError> {
    if k < 1 || d < 1 {
        return Err(AnalysisError::GriesmerDomain { k, d });
    }
    let sum: i64 = (0..k.min(63)).map(|i| (d + (1 << i) - 1) >> i).sum::<i64>() + (k - k.min(63));
    Ok(n - sum)
}

/// Everything [`analyze`] reports about one code.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub projective: bool,
    pub projective_method: ProjectiveMethod,
    pub plotkin_bound: Option<u128>,
    pub plotkin_optimal: bool,
    pub gray_linear: bool,
    pub gray_dimension: Option<u32>,
    pub minimal: Option<bool>,
    pub ab: Option<bool>,
    pub griesmer_defect: Option<i64>,
}

/// Runs every check on an enumerated code.
pub fn analyze(set: &DefiningSet, code: &QuaternaryCode) -> AnalysisReport {
    let spectrum = lee_spectrum_bruteforce(code);
    let d_l = spectrum.min_distance().ok();
    let (plotkin_bound, plotkin_optimal) = match (d_l, plotkin_check(code.n as u64, code.size(), d_l.unwrap_or(0))) {
        (Some(_), Ok((b, ok))) => (Some(b), ok),
        (None, Ok((b, _))) => (Some(b), false),
        (_, Err(_)) => (None, false),
    };
    let gray = gray_image(code);
    let gray_linear = gray.linear;
    let minimal = is_minimal_binary(&gray).ok();
    let ab = if gray_linear { ab_condition(&gray.spectrum).ok() } else { None };
    let griesmer = match (gray.dimension, gray.min_distance()) {
        (Some(k), Some(d)) => griesmer_defect(gray.n as i64, i64::from(k), d as i64).ok(),
        _ => None,
    };
    AnalysisReport {
        projective: is_projective_columns(set),
        projective_method: ProjectiveMethod::ColumnCriterion,
        plotkin_bound,
        plotkin_optimal,
        gray_linear,
        gray_dimension: gray.dimension,
        minimal,
        ab,
        griesmer_defect: griesmer,
    }
}

/// Which minimality hypothesis a parameter set satisfies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum MinimalityCase {
    /// F1, `|A| = 1`, `B ⊊ C`, `A ⊆ C`, and `|B| ≤ |C| - 2`
    F1Nested,
    /// F1, `|A| = 1`, `B ⊊ C`, `A ⊆ C` with `|B| = |C| - 1`: claimed, but
    /// the weight-ratio argument does not cover it
    F1NestedGap,
    /// F1, `|A| = 1`, `B ⊄ C`, `|B| < |C|`, `B ⊆ A ∪ C`, `|A ∪ C| = |B ∪ C|`
    F1Spread,
    /// F3, `|A| = 1`, `|A ∪ B ∪ C| < m`, `B ⊆ C`, `|C| ≤ m - 2`
    F3Nested,
    /// F3, same base, `B ⊄ C`, `B ⊆ A ∪ C` or `C ⊆ A ∪ B`, weight condition
    F3Covered,
    /// F3, same base, neither covered, `2^m > 2(2^|B| + 2^|C|)`
    F3Uncovered,
}

fn either_order(p: &CodeParams, pred: impl Fn(&CodeParams) -> bool) -> bool {
    pred(p) || pred(&CodeParams { b: p.c, c: p.b, ..*p })
}

/// Classifies `params` against the minimality hypotheses. The code is
/// symmetric in `B` and `C`, so either orientation counts.
pub fn minimality_case(params: &CodeParams) -> Option<MinimalityCase> {
    let p = params;
    if p.a.len() != 1 || p.validate().is_err() {
        return None;
    }
    let pw = |e: u32| 1u64 << e;
    match p.family {
        Family::F1 => {
            let nested = |q: &CodeParams| q.b.is_proper_subset_of(q.c) && q.a.is_subset_of(q.c);
            if either_order(p, |q| nested(q) && q.b.len() + 2 <= q.c.len()) {
                return Some(MinimalityCase::F1Nested);
            }
            if either_order(p, nested) {
                return Some(MinimalityCase::F1NestedGap);
            }
            let spread = |q: &CodeParams| {
                !q.b.is_subset_of(q.c)
                    && q.b.len() < q.c.len()
                    && q.b.is_subset_of(q.a.union(q.c))
                    && q.a.union(q.c).len() == q.b.union(q.c).len()
            };
            either_order(p, spread).then_some(MinimalityCase::F1Spread)
        }
        Family::F3 => {
            let m = p.m();
            if p.a.union(p.b).union(p.c).len() >= m {
                return None;
            }
            if either_order(p, |q| q.b.is_subset_of(q.c) && q.c.len() + 2 <= m) {
                return Some(MinimalityCase::F3Nested);
            }
            let (b, c) = (p.b, p.c);
            if b.is_subset_of(c) || c.is_subset_of(b) {
                return None;
            }
            let bc = b.intersection(c).len();
            let covered = b.is_subset_of(p.a.union(c)) || c.is_subset_of(p.a.union(b));
            if covered {
                (pw(m) + pw(bc) > 2 * (pw(b.len()) + pw(c.len()))).then_some(MinimalityCase::F3Covered)
            } else {
                (pw(m) > 2 * (pw(b.len()) + pw(c.len()))).then_some(MinimalityCase::F3Uncovered)
            }
        }
        Family::F2 => None,
    }
}

/// Gray-image parameters `[n, k, d]` claimed for F1 with `B ⊊ C`, `A ⊆ C`,
/// `|A| ≤ 1`.
pub fn nested_gray_parameters(a: u32, b: u32, c: u32) -> (u64, u32, u64) {
    let d = (1u64 << a) * ((1u64 << c) - (1u64 << b));
    (2 * d, a + c, d)
}
