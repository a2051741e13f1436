//! Lee weight distributions: a brute-force count over enumerated codewords
//! and closed-form evaluators for the three families and their
//! specializations.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::codegen::{CodeParams, CodegenError, Family, QuaternaryCode, SetProfile, ENUMERATION_CAP};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpectrumError {
    #[error(transparent)]
    Params(#[from] CodegenError),
    #[error("the code has no nonzero codeword")]
    NoNonzeroCodeword,
    #[error("closed form yields a negative frequency {freq} at weight {weight2}/2")]
    NegativeFrequency { weight2: i128, freq: i128 },
    #[error("closed form yields the non-integer weight {weight2}/2 with frequency {freq}")]
    HalfWeight { weight2: i128, freq: i128 },
    #[error("zero-weight multiplicity {0} is not a power of two dividing every frequency")]
    BadFold(u128),
    #[error("{0}")]
    NotApplicable(String),
}

/// Map from Lee weight to the number of codewords of that weight.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct WeightDistribution {
    pairs: BTreeMap<u64, u128>,
}

impl WeightDistribution {
    pub fn new() -> Self {
        Self::default()
    }

    /// Zero frequencies are skipped.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (u64, u128)>) -> Self {
        let mut d = Self::new();
        for (w, f) in pairs {
            d.add(w, f);
        }
        d
    }

    pub fn add(&mut self, weight: u64, freq: u128) {
        if freq > 0 {
            *self.pairs.entry(weight).or_insert(0) += freq;
        }
    }

    pub fn get(&self, weight: u64) -> u128 {
        self.pairs.get(&weight).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (u64, u128)> + '_ {
        self.pairs.iter().map(|(&w, &f)| (w, f))
    }

    pub fn total(&self) -> u128 {
        self.pairs.values().sum()
    }

    /// Nonzero weights present.
    pub fn nonzero_weights(&self) -> impl Iterator<Item = u64> + '_ {
        self.pairs.keys().copied().filter(|&w| w > 0)
    }

    pub fn max_weight(&self) -> Option<u64> {
        self.nonzero_weights().max()
    }

    /// Minimum Lee distance of a linear code with this distribution.
    pub fn min_distance(&self) -> Result<u64, SpectrumError> {
        self.nonzero_weights().next().ok_or(SpectrumError::NoNonzeroCodeword)
    }

    /// `Σ A_w x^w y^{2n-w}` in ascending weight order.
    pub fn enumerator(&self, n: u64) -> String {
        let mut out = String::new();
        for (w, f) in self.iter() {
            if !out.is_empty() {
                out.push_str(" + ");
            }
            if f != 1 {
                write!(out, "{f}").unwrap();
            }
            let mut term = String::new();
            for (var, e) in [('x', w), ('y', 2 * n - w)] {
                match e {
                    0 => {}
                    1 => term.push(var),
                    e => write!(term, "{var}^{e}").unwrap(),
                }
            }
            if term.is_empty() && f == 1 {
                term.push('1');
            }
            out.push_str(&term);
        }
        out
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("weight,frequency\n");
        for (w, f) in self.iter() {
            writeln!(out, "{w},{f}").unwrap();
        }
        out
    }
}

/// Lee weights of every distinct codeword.
pub fn lee_spectrum_bruteforce(code: &QuaternaryCode) -> WeightDistribution {
    let counts = code
        .codewords()
        .par_iter()
        .fold(BTreeMap::new, |mut acc: BTreeMap<u64, u128>, c| {
            *acc.entry(u64::from(c.lee_weight())).or_insert(0) += 1;
            acc
        })
        .reduce(BTreeMap::new, |mut a, b| {
            for (w, f) in b {
                *a.entry(w).or_insert(0) += f;
            }
            a
        });
    WeightDistribution { pairs: counts }
}

/// One row of a closed-form table. Weights are stored doubled because
/// `2^{|A|-1}` occurs with `|A| = 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Row {
    pub weight2: i128,
    pub freq: i128,
}

fn p(e: i32) -> i128 {
    assert!((0..126).contains(&e), "exponent {e} out of range");
    1i128 << e
}

/// `2 · 2^e`, defined for `e ≥ -1`.
fn t(e: i32) -> i128 {
    p(e + 1)
}

fn row(weight2: i128, freq: i128) -> Row {
    Row { weight2, freq }
}

fn sizes(s: &SetProfile) -> [i32; 10] {
    [s.m, s.a, s.b, s.c, s.b_and_c, s.a_or_b, s.a_or_c, s.b_or_c, s.a_or_b_and_c, s.abc].map(|x| x as i32)
}

/// Family F1, all parameters.
pub fn table_f1(s: &SetProfile) -> Vec<Row> {
    let [_, a, b, c, bc, ab, ac, bcu, a_bc, abc] = sizes(s);
    let x = p(b) + p(c) - p(bc + 1);
    vec![
        row(0, 1),
        row(t(a - 1) * x, 2 * (p(abc - bcu) - 1)),
        row(t(a) * x, p(a + abc) + p(abc - a_bc) - p(abc - bc + 1)),
        row(t(a + c), p(abc - ab) - 1),
        row(t(a - 1) * (p(b) + p(c + 1) - p(bc + 1)), 2 * (p(abc - b) - p(abc - ab) - p(abc - bcu) + 1)),
        row(t(a + b), p(abc - ac) - 1),
        row(t(a - 1) * (p(b + 1) + p(c) - p(bc + 1)), 2 * (p(abc - c) - p(abc - ac) - p(abc - bcu) + 1)),
        row(t(a) * (p(b) + p(c)), p(abc - a_bc) - p(abc - ab) - p(abc - ac) + 1),
        row(
            t(a) * (p(b) + p(c) - p(bc)),
            2 * (p(abc - bc) - p(abc - a_bc) - p(abc - b) - p(abc - c) + p(abc - ab) + p(abc - ac) + p(abc - bcu) - 1),
        ),
    ]
}

/// Family F1 with `C = A`; `s` describes `(A, B, A)`.
pub fn table_f1_c_equals_a(s: &SetProfile) -> Vec<Row> {
    let (a, b, ab_i, ab_u) = (s.a as i32, s.b as i32, s.b_and_c as i32, s.a_or_b as i32);
    vec![
        row(0, 1),
        row(t(a) * (p(a) + p(b) - p(ab_i + 1)), p(ab_u + a) + p(ab_u - a) - p(ab_u - ab_i + 1)),
        row(t(a - 1) * (p(a + 1) + p(b) - p(ab_i + 1)), 2 * (p(ab_u - b) - 1)),
        row(t(a + b), p(ab_u - a) - 1),
        row(t(a) * (p(a) + p(b) - p(ab_i)), 2 * (p(ab_u - ab_i) - p(ab_u - a) - p(ab_u - b) + 1)),
    ]
}

/// Family F1 with `B ⊊ C` and `A ⊆ C`.
pub fn table_f1_nested(s: &SetProfile) -> Vec<Row> {
    let (a, b, c, ab) = (s.a as i32, s.b as i32, s.c as i32, s.a_or_b as i32);
    vec![
        row(0, 1),
        row(t(a + c), p(c - ab) - 1),
        row(t(a - 1) * (p(c + 1) - p(b)), 2 * (p(c - b) - p(c - ab))),
        row(t(a) * (p(c) - p(b)), p(a + c) + p(c - ab) - p(c - b + 1)),
    ]
}

/// Family F2, all parameters.
pub fn table_f2(s: &SetProfile) -> Vec<Row> {
    let [_, a, b, c, bc, ab, ac, bcu, a_bc, abc] = sizes(s);
    let x = p(b) + p(c) - p(bc + 1);
    vec![
        row(0, 1),
        row(t(a - 1) * x, 2 * (p(abc - bcu) - 1)),
        row(t(a) * x, p(a + abc - bcu) - p(abc - bcu + 1) + 1),
        row(2 * (p(a + c) - p(c)), p(abc - ab) - 1),
        row(t(a - 1) * (p(b) + p(c + 1) - p(bc + 1)) - 2 * p(c), 2 * (p(abc - b) - p(abc - ab) - p(abc - bcu) + 1)),
        row(
            t(a) * x - 2 * p(c),
            p(abc + a - b) - p(abc + a - bcu) - p(abc - b + 1) + p(abc - ab) + p(abc - bcu + 1) - 1,
        ),
        row(2 * (p(a + b) - p(b)), p(abc - ac) - 1),
        row(t(a - 1) * (p(b + 1) + p(c) - p(bc + 1)) - 2 * p(b), 2 * (p(abc - c) - p(abc - ac) - p(abc - bcu) + 1)),
        row(
            t(a) * x - 2 * p(b),
            p(abc + a - c) - p(abc + a - bcu) - p(abc - c + 1) + p(abc - ac) + p(abc - bcu + 1) - 1,
        ),
        row(t(a) * (p(b) + p(c)) - 2 * (p(b) + p(c)), p(abc - a_bc) - p(abc - ab) - p(abc - ac) + 1),
        row(
            t(a) * (p(b) + p(c) - p(bc)) - 2 * (p(b) + p(c)),
            2 * (p(abc - bc) - p(abc - a_bc) - p(abc - b) - p(abc - c) + p(abc - ab) + p(abc - ac) + p(abc - bcu) - 1),
        ),
        row(
            t(a) * x - 2 * (p(b) + p(c)),
            p(abc + a - bc) - p(abc + a - b) - p(abc + a - c) + p(abc + a - bcu) - p(abc - bc + 1)
                + p(abc - b + 1)
                + p(abc - a_bc)
                + p(abc - c + 1)
                - p(abc - ab)
                - p(abc - ac)
                - p(abc - bcu + 1)
                + 1,
        ),
        row(2 * (p(a) - 1) * x, p(abc + a) - p(abc + a - bc)),
    ]
}

/// Family F2 with `B ⊊ C`.
pub fn table_f2_nested(s: &SetProfile) -> Vec<Row> {
    let (a, b, c, ab, ac) = (s.a as i32, s.b as i32, s.c as i32, s.a_or_b as i32, s.a_or_c as i32);
    let y = p(c) - p(b);
    vec![
        row(0, 1),
        row(t(a - 1) * y, 2 * (p(ac - c) - 1)),
        row(t(a) * y, p(a + ac - c) - p(ac - c + 1) + 1),
        row(2 * (p(a + c) - p(c)), p(ac - ab) - 1),
        row(t(a - 1) * (p(c + 1) - p(b)) - 2 * p(c), 2 * (p(ac - b) - p(ac - ab) - p(ac - c) + 1)),
        row(t(a) * y - 2 * p(c), p(ac + a - b) - p(ac + a - c) - p(ac - b + 1) + p(ac - ab) + p(ac - c + 1) - 1),
        row(2 * (p(a) - 1) * y, p(ac + a) - p(ac + a - b)),
    ]
}

/// Family F3, all parameters.
pub fn table_f3(s: &SetProfile) -> Vec<Row> {
    let [m, a, b, c, bc, ab, ac, bcu, a_bc, abc] = sizes(s);
    vec![
        row(0, 1),
        row(t(m + a), p(m - abc) - 1),
        row(t(a - 1) * (p(m + 1) - p(b) - p(c) + p(bc)), 2 * (p(m - bcu) - p(m - abc))),
        row(t(a) * (p(m) - p(c)), p(m - ab) - p(m - abc)),
        row(t(a - 1) * (p(m + 1) - p(b) - p(c + 1) + p(bc)), 2 * (p(m - b) - p(m - ab) - p(m - bcu) + p(m - abc))),
        row(t(a) * (p(m) - p(b)), p(m - ac) - p(m - abc)),
        row(t(a - 1) * (p(m + 1) - p(b + 1) - p(c) + p(bc)), 2 * (p(m - c) - p(m - ac) - p(m - bcu) + p(m - abc))),
        row(t(a) * (p(m) - p(b) - p(c)), p(m - a_bc) - p(m - ab) - p(m - ac) + p(m - abc)),
        row(
            t(a - 1) * (p(m + 1) - p(b + 1) - p(c + 1) + p(bc)),
            2 * (p(m - bc) - p(m - a_bc) - p(m - b) - p(m - c) + p(m - ab) + p(m - ac) + p(m - bcu) - p(m - abc)),
        ),
        row(t(a) * (p(m) - p(b) - p(c) + p(bc)), p(m + a) - p(m - bc + 1) + p(m - a_bc)),
    ]
}

/// Family F3 with `C = A`; `s` describes `(A, B, A)`.
pub fn table_f3_c_equals_a(s: &SetProfile) -> Vec<Row> {
    let (m, a, b, ab_i, ab_u) = (s.m as i32, s.a as i32, s.b as i32, s.b_and_c as i32, s.a_or_b as i32);
    vec![
        row(0, 1),
        row(t(m + a), p(m - ab_u) - 1),
        row(t(a - 1) * (p(m + 1) - p(a + 1) - p(b) + p(ab_i)), 2 * (p(m - b) - p(m - ab_u))),
        row(t(a) * (p(m) - p(b)), p(m - a) - p(m - ab_u)),
        row(
            t(a - 1) * (p(m + 1) - p(a + 1) - p(b + 1) + p(ab_i)),
            2 * (p(m - ab_i) - p(m - a) - p(m - b) + p(m - ab_u)),
        ),
        row(t(a) * (p(m) - p(a) - p(b) + p(ab_i)), p(m + a) - p(m - ab_i + 1) + p(m - a)),
    ]
}

/// Result of evaluating and aggregating a closed-form table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClosedForm {
    pub distribution: WeightDistribution,
    /// type claimed for the family
    pub nominal_type: (u32, u32),
    /// type after folding zero-weight rows into `A_0`
    pub effective_type: (u32, u32),
    /// `A_0 = 2^folded` before normalisation
    pub folded: u32,
    /// `m` within the enumeration cap, so the result can be checked
    pub oracle_checkable: bool,
}

/// Aggregates rows: equal weights merge, zero-frequency rows vanish, and
/// zero-weight rows fold into `A_0`. When `A_0 = 2^j > 1` every frequency
/// is divided by `2^j`, giving counts of distinct codewords.
pub fn aggregate(rows: &[Row]) -> Result<(WeightDistribution, u32), SpectrumError> {
    let mut merged: BTreeMap<i128, i128> = BTreeMap::new();
    for r in rows {
        *merged.entry(r.weight2).or_insert(0) += r.freq;
    }
    let mut pairs = Vec::new();
    for (&weight2, &freq) in &merged {
        if freq < 0 {
            return Err(SpectrumError::NegativeFrequency { weight2, freq });
        }
        if freq == 0 {
            continue;
        }
        if weight2 % 2 != 0 || weight2 < 0 {
            return Err(SpectrumError::HalfWeight { weight2, freq });
        }
        pairs.push(((weight2 / 2) as u64, freq as u128));
    }
    let zero = pairs.iter().find(|(w, _)| *w == 0).map_or(0, |&(_, f)| f);
    if !zero.is_power_of_two() || pairs.iter().any(|&(_, f)| f % zero != 0) {
        return Err(SpectrumError::BadFold(zero));
    }
    let j = zero.trailing_zeros();
    Ok((WeightDistribution::from_pairs(pairs.into_iter().map(|(w, f)| (w, f / zero))), j))
}

/// Rows of the parent table for a family.
pub fn family_rows(params: &CodeParams) -> Vec<Row> {
    let s = params.profile();
    match params.family {
        Family::F1 => table_f1(&s),
        Family::F2 => table_f2(&s),
        Family::F3 => table_f3(&s),
    }
}

/// Closed-form Lee weight distribution of a family member.
pub fn lee_spectrum_closed_form(params: &CodeParams) -> Result<ClosedForm, SpectrumError> {
    params.validate()?;
    let (distribution, folded) = aggregate(&family_rows(params))?;
    let nominal_type = params.profile().expected_type(params.family);
    let (k1, k2) = nominal_type;
    if folded > k2 {
        return Err(SpectrumError::BadFold(1 << folded));
    }
    Ok(ClosedForm {
        distribution,
        nominal_type,
        effective_type: (k1, k2 - folded),
        folded,
        oracle_checkable: params.m() <= ENUMERATION_CAP,
    })
}

/// Special cases that have their own, shorter tables.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Specialization {
    /// F1 with `C = A`
    F1CEqualsA,
    /// F1 with `B ⊊ C`, `A ⊆ C`, `A ∪ B ≠ ∅`
    F1Nested,
    /// F2 with `B ⊊ C`
    F2Nested,
    /// F3 with `C = A`
    F3CEqualsA,
}

impl Specialization {
    pub fn label(self) -> &'static str {
        match self {
            Specialization::F1CEqualsA => "F1 (C=A)",
            Specialization::F1Nested => "F1 (B⊊C, A⊆C)",
            Specialization::F2Nested => "F2 (B⊊C)",
            Specialization::F3CEqualsA => "F3 (C=A)",
        }
    }
}

/// Detects a specialization, returning parameters with `B` and `C` swapped
/// where needed so that the special table applies literally. The code is
/// symmetric in `B` and `C`.
pub fn specialization(params: &CodeParams) -> Option<(Specialization, CodeParams)> {
    let swapped = CodeParams { b: params.c, c: params.b, ..*params };
    let pick = |pred: &dyn Fn(&CodeParams) -> bool| {
        if pred(params) {
            Some(*params)
        } else if pred(&swapped) {
            Some(swapped)
        } else {
            None
        }
    };
    match params.family {
        Family::F1 => {
            if let Some(p) = pick(&|p| p.c == p.a) {
                return Some((Specialization::F1CEqualsA, p));
            }
            pick(&|p| p.b.is_proper_subset_of(p.c) && p.a.is_subset_of(p.c) && !(p.a.is_empty() && p.b.is_empty()))
                .map(|p| (Specialization::F1Nested, p))
        }
        Family::F2 => pick(&|p| p.b.is_proper_subset_of(p.c)).map(|p| (Specialization::F2Nested, p)),
        Family::F3 => pick(&|p| p.c == p.a).map(|p| (Specialization::F3CEqualsA, p)),
    }
}

/// Evaluates the specialized table. The caller must pass parameters
/// normalised by [`specialization`].
pub fn specialized_rows(kind: Specialization, params: &CodeParams) -> Vec<Row> {
    let s = params.profile();
    match kind {
        Specialization::F1CEqualsA => {
            // The table is written in terms of A and B with C = A.
            table_f1_c_equals_a(&SetProfile::of(params.a, params.b, params.a))
        }
        Specialization::F1Nested => table_f1_nested(&s),
        Specialization::F2Nested => table_f2_nested(&s),
        Specialization::F3CEqualsA => table_f3_c_equals_a(&SetProfile::of(params.a, params.b, params.a)),
    }
}

/// Closed-form distribution from the specialized table, if one applies.
pub fn specialized_closed_form(params: &CodeParams) -> Option<Result<WeightDistribution, SpectrumError>> {
    params.validate().ok()?;
    let (kind, norm) = specialization(params)?;
    Some(aggregate(&specialized_rows(kind, &norm)).map(|(d, _)| d))
}

/// Piecewise minimum distance for F1 with `C = A`, from `|A|`, `|B|`, `|A ∩ B|`.
pub fn min_distance_f1_c_equals_a(a: u32, b: u32, a_and_b: u32) -> Option<u64> {
    let (a, b, i) = (a as i32, b as i32, a_and_b as i32);
    let w2 = if p(a + 1) - p(i + 1) <= p(b) { t(a - 1) * (p(a + 1) + p(b) - p(i + 1)) } else { t(a + b) };
    (w2 % 2 == 0 && w2 > 0).then_some((w2 / 2) as u64)
}

/// Piecewise minimum distance for F3 with `C = A`. `nested` is
/// `A ⊂ B or B ⊂ A`.
pub fn min_distance_f3_c_equals_a(m: u32, a: u32, b: u32, a_and_b: u32, nested: bool) -> Option<u64> {
    let (m, a, b, i) = (m as i32, a as i32, b as i32, a_and_b as i32);
    let w2 =
        if nested { t(a - 1) * (p(m + 1) - p(a + 1) - p(b + 1) + p(i)) } else { t(a) * (p(m) - p(a) - p(b) + p(i)) };
    (w2 % 2 == 0 && w2 > 0).then_some((w2 / 2) as u64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codegen::build_code;

    fn params(family: Family, m: u32, a: &str, b: &str, c: &str) -> CodeParams {
        CodeParams::parse(family, m, a, b, c).unwrap()
    }

    #[test]
    fn enumerator_strings() {
        let d = WeightDistribution::from_pairs([(0, 1), (16, 29), (24, 2)]);
        assert_eq!(d.enumerator(16), "y^32 + 29x^16y^16 + 2x^24y^8");
        assert_eq!(WeightDistribution::from_pairs([(0, 1)]).enumerator(5), "y^10");
        let d = WeightDistribution::from_pairs([(0, 1), (56, 15), (60, 224), (64, 15), (120, 1)]);
        assert_eq!(d.enumerator(60), "y^120 + 15x^56y^64 + 224x^60y^60 + 15x^64y^56 + x^120");
    }

    #[test]
    fn min_distance_examples() {
        let d = WeightDistribution::from_pairs([(0, 1), (16, 29), (24, 2)]);
        assert_eq!(d.min_distance(), Ok(16));
        assert_eq!(WeightDistribution::from_pairs([(0, 1)]).min_distance(), Err(SpectrumError::NoNonzeroCodeword));
        let d = WeightDistribution::from_pairs([(0, 1), (13, 14), (14, 8), (16, 7), (21, 2)]);
        assert_eq!(d.min_distance(), Ok(13));
    }

    #[test]
    fn f1_c_equals_a_table_example() {
        let p = params(Family::F1, 4, "{2,3}", "{3,4}", "{2,3}");
        let s = SetProfile::of(p.a, p.b, p.a);
        let rows = table_f1_c_equals_a(&s);
        let pairs: Vec<(i128, i128)> = rows.iter().map(|r| (r.weight2 / 2, r.freq)).collect();
        assert_eq!(pairs, [(0, 1), (16, 26), (16, 2), (16, 1), (24, 2)]);
        let (d, j) = aggregate(&rows).unwrap();
        assert_eq!(j, 0);
        assert_eq!(d, WeightDistribution::from_pairs([(0, 1), (16, 29), (24, 2)]));
    }

    #[test]
    fn closed_form_examples() {
        let cf = lee_spectrum_closed_form(&params(Family::F2, 6, "{5}", "{1,2,3,4}", "{2,3,4,6}")).unwrap();
        assert_eq!(cf.distribution, WeightDistribution::from_pairs([(0, 1), (16, 62), (32, 1)]));
        assert_eq!(cf.effective_type, (1, 4));
        let d = specialized_closed_form(&params(Family::F3, 5, "{3}", "{1,4}", "{3}")).unwrap().unwrap();
        assert_eq!(d, WeightDistribution::from_pairs([(0, 1), (53, 24), (54, 16), (56, 12), (57, 8), (64, 3)]));
        let cf = lee_spectrum_closed_form(&params(Family::F3, 4, "{4}", "{4}", "{1,2,3}")).unwrap();
        assert_eq!(cf.distribution, WeightDistribution::from_pairs([(0, 1), (13, 14), (14, 8), (16, 7), (21, 2)]));
    }

    #[test]
    fn degenerate_f3_folds_zero_weight() {
        let p = params(Family::F3, 2, "{}", "{2}", "{1}");
        let cf = lee_spectrum_closed_form(&p).unwrap();
        assert_eq!(cf.folded, 1);
        assert_eq!(cf.nominal_type, (0, 2));
        assert_eq!(cf.effective_type, (0, 1));
        let (_, code) = build_code(p).unwrap();
        assert_eq!(lee_spectrum_bruteforce(&code), cf.distribution);
    }

    #[test]
    fn bruteforce_examples() {
        let (_, code) = build_code(params(Family::F1, 3, "{1,3}", "{}", "{1,2,3}")).unwrap();
        assert_eq!(
            lee_spectrum_bruteforce(&code),
            WeightDistribution::from_pairs([(0, 1), (28, 18), (30, 12), (32, 1)])
        );
        let (_, code) = build_code(params(Family::F3, 3, "{1,3}", "{1}", "{3}")).unwrap();
        assert_eq!(
            lee_spectrum_bruteforce(&code),
            WeightDistribution::from_pairs([(0, 1), (18, 4), (20, 18), (22, 8), (32, 1)])
        );
    }

    #[test]
    fn specialization_detection() {
        let p = params(Family::F1, 4, "{2,3}", "{2,3}", "{3,4}");
        let (k, norm) = specialization(&p).unwrap();
        assert_eq!(k, Specialization::F1CEqualsA);
        assert_eq!(norm.c, norm.a);
        let p = params(Family::F1, 3, "{1}", "{}", "{2}");
        assert_eq!(specialization(&p), None);
        // B = A is caught through the B/C symmetry
        let p = params(Family::F1, 3, "{}", "{}", "{1}");
        assert_eq!(specialization(&p).unwrap().0, Specialization::F1CEqualsA);
        let p = params(Family::F2, 4, "{1}", "{2,3}", "{2}");
        assert_eq!(specialization(&p).unwrap().0, Specialization::F2Nested);
    }

    #[test]
    fn oracle_agreement_small() {
        for family in Family::ALL {
            for m in 2..=3 {
                let n = 1u32 << m;
                for x in 0..n * n * n {
                    let s = |v| crate::simplicial::SubsetMask::new(v, m).unwrap();
                    let p = CodeParams::new(family, s(x % n), s((x / n) % n), s(x / (n * n))).unwrap();
                    if p.validate().is_err() || p.a.len() > 2 {
                        continue;
                    }
                    let (_, code) = build_code(p).unwrap();
                    let brute = lee_spectrum_bruteforce(&code);
                    let cf = lee_spectrum_closed_form(&p).unwrap();
                    assert_eq!(cf.distribution, brute, "{p}");
                    assert_eq!(cf.effective_type, (code.k1, code.k2), "{p}");
                    if let Some(d) = specialized_closed_form(&p) {
                        assert_eq!(d.unwrap(), brute, "specialized {p}");
                    }
                }
            }
        }
    }

    #[test]
    fn carry_term_breaks_table_for_large_a() {
        // b·d_1 over Z_4 carries into the 2-digit once |A| ≥ 3
        let p = params(Family::F1, 3, "{1,2,3}", "{1}", "{}");
        let (_, code) = build_code(p).unwrap();
        let brute = lee_spectrum_bruteforce(&code);
        assert_eq!(brute, WeightDistribution::from_pairs([(0, 1), (4, 6), (6, 2), (8, 43), (10, 6), (12, 6)]));
        let cf = lee_spectrum_closed_form(&p).unwrap();
        assert_eq!(cf.distribution, WeightDistribution::from_pairs([(0, 1), (4, 6), (8, 49), (12, 8)]));
    }

    #[test]
    fn json_shape() {
        let d = WeightDistribution::from_pairs([(0, 1), (16, 62)]);
        assert_eq!(serde_json::to_string(&d).unwrap(), r#"{"0":1,"16":62}"#);
        let back: WeightDistribution = serde_json::from_str(r#"{"0":1,"16":62}"#).unwrap();
        assert_eq!(back, d);
    }
}
