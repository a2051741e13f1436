//! Defining sets `D = D_1 + 2 D_2` for the three simplicial families and the
//! codes `C_D = {(v·d)_{d ∈ D} : v ∈ Z_4^m}` they define.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::gf2;
use crate::simplicial::{self, BitVectorSet, SubsetError, SubsetMask};
use crate::z4::Z4Vector;

/// Largest `m` for which the full message space `Z_4^m` is swept.
pub const ENUMERATION_CAP: u32 = 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CodegenError {
    #[error(transparent)]
    Subset(#[from] SubsetError),
    #[error("hypothesis B ≠ C of family F1 violated (B = C = {0})")]
    F1EqualGenerators(String),
    #[error("hypothesis A ∩ (B ∪ C) = ∅ of family F2 violated (A = {a}, B ∪ C = {bc})")]
    F2Overlap { a: String, bc: String },
    #[error("hypothesis |D| > 1 of family F2 violated (|D| = {0})")]
    F2TooSmall(usize),
    #[error("hypothesis Δ_{{B,C}} ≠ Z_2^{0} of family F3 violated")]
    F3FullComplex(u32),
    #[error("m = {m} exceeds the enumeration cap of {cap}")]
    OverCap { m: u32, cap: u32 },
    #[error("code size {0} is not a power of two")]
    NotPowerOfTwo(u128),
    #[error("code size 2^{log} too small for residue rank {k1}")]
    InconsistentType { log: u32, k1: u32 },
    #[error("generator rows have unequal lengths")]
    RaggedGenerator,
}

/// The three defining-set families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    /// `Δ_A + 2(Δ_{B,C} ∖ Δ_{B∩C})`
    F1,
    /// `Δ_A^* + 2(Δ_{B,C} ∖ Δ_{B∩C})`
    F2,
    /// `Δ_A + 2(Δ_{B,C})^c`
    F3,
}

impl Family {
    pub const ALL: [Family; 3] = [Family::F1, Family::F2, Family::F3];
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::F1 => "f1",
            Family::F2 => "f2",
            Family::F3 => "f3",
        })
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "f1" => Ok(Family::F1),
            "f2" => Ok(Family::F2),
            "f3" => Ok(Family::F3),
            other => Err(format!("unknown family `{other}` (expected f1, f2 or f3)")),
        }
    }
}

/// A family together with its generators `A, B, C ⊆ [m]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CodeParams {
    pub family: Family,
    pub a: SubsetMask,
    pub b: SubsetMask,
    pub c: SubsetMask,
}

impl CodeParams {
    pub fn new(family: Family, a: SubsetMask, b: SubsetMask, c: SubsetMask) -> Result<Self, SubsetError> {
        let m = a.ground();
        for s in [b, c] {
            if s.ground() != m {
                return Err(SubsetError::GroundMismatch(m, s.ground()));
            }
        }
        Ok(Self { family, a, b, c })
    }

    /// Parses brace literals such as `("{2,3}", "{3,4}", "{2,3}")`.
    pub fn parse(family: Family, m: u32, a: &str, b: &str, c: &str) -> Result<Self, SubsetError> {
        Self::new(family, SubsetMask::parse(a, m)?, SubsetMask::parse(b, m)?, SubsetMask::parse(c, m)?)
    }

    pub fn m(&self) -> u32 {
        self.a.ground()
    }

    pub fn profile(&self) -> SetProfile {
        SetProfile::of(self.a, self.b, self.c)
    }

    /// Checks the family's hypotheses without building anything.
    pub fn validate(&self) -> Result<(), CodegenError> {
        let Self { family, a, b, c } = *self;
        match family {
            Family::F1 => {
                if b == c {
                    return Err(CodegenError::F1EqualGenerators(b.to_string()));
                }
            }
            Family::F2 => {
                let bc = b.union(c);
                if !a.intersection(bc).is_empty() {
                    return Err(CodegenError::F2Overlap { a: a.to_string(), bc: bc.to_string() });
                }
                let size = self.profile().expected_length(family);
                if size <= 1 {
                    return Err(CodegenError::F2TooSmall(size as usize));
                }
            }
            Family::F3 => {
                let full = SubsetMask::full(a.ground())?;
                if b == full || c == full {
                    return Err(CodegenError::F3FullComplex(a.ground()));
                }
            }
        }
        Ok(())
    }
}

impl fmt::Display for CodeParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} m={} A={} B={} C={}", self.family, self.m(), self.a, self.b, self.c)
    }
}

/// The set sizes every length, type and weight formula is written in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SetProfile {
    pub m: u32,
    pub a: u32,
    pub b: u32,
    pub c: u32,
    pub b_and_c: u32,
    pub a_or_b: u32,
    pub a_or_c: u32,
    pub b_or_c: u32,
    /// `|A ∪ (B ∩ C)|`
    pub a_or_b_and_c: u32,
    pub abc: u32,
}

impl SetProfile {
    pub fn of(a: SubsetMask, b: SubsetMask, c: SubsetMask) -> Self {
        Self {
            m: a.ground(),
            a: a.len(),
            b: b.len(),
            c: c.len(),
            b_and_c: b.intersection(c).len(),
            a_or_b: a.union(b).len(),
            a_or_c: a.union(c).len(),
            b_or_c: b.union(c).len(),
            a_or_b_and_c: a.union(b.intersection(c)).len(),
            abc: a.union(b).union(c).len(),
        }
    }

    /// Closed-form code length of each family.
    pub fn expected_length(&self, family: Family) -> u64 {
        let p = |e: u32| 1u64 << e;
        let punctured = p(self.b) + p(self.c) - p(self.b_and_c + 1);
        match family {
            Family::F1 => p(self.a) * punctured,
            Family::F2 => (p(self.a) - 1) * punctured,
            Family::F3 => p(self.a) * (p(self.m) + p(self.b_and_c) - p(self.b) - p(self.c)),
        }
    }

    /// Nominal type `(k1, k2)` of each family.
    pub fn expected_type(&self, family: Family) -> (u32, u32) {
        match family {
            Family::F1 => (self.a, self.abc - self.a),
            Family::F2 => (self.a, self.b_or_c),
            Family::F3 => (self.a, self.m - self.a),
        }
    }
}

/// `D = {d_1 + 2 d_2}` in canonical column order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DefiningSet {
    pub params: CodeParams,
    columns: Vec<Z4Vector>,
}

/// Base-4 value of `d_1 + 2 d_2` with coordinate 1 least significant.
fn base4_key(d1: u32, d2: u32) -> u64 {
    let mut key = 0u64;
    for i in 0..32 {
        key |= u64::from((d1 >> i) & 1) << (2 * i);
        key |= u64::from((d2 >> i) & 1) << (2 * i + 1);
    }
    key
}

fn column_vector(m: u32, d1: u32, d2: u32) -> Z4Vector {
    Z4Vector::from_planes(m as usize, vec![u64::from(d1)], vec![u64::from(d2)])
}

impl DefiningSet {
    /// Wraps hand-picked columns, e.g. for degenerate test codes. Columns are
    /// sorted and deduplicated.
    pub fn from_columns(params: CodeParams, mut columns: Vec<Z4Vector>) -> Self {
        columns.sort_by_key(|c| base4_key(c.residue()[0] as u32, c.twos()[0] as u32));
        columns.dedup();
        Self { params, columns }
    }

    pub fn len(&self) -> usize {
        self.columns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.columns.is_empty()
    }

    pub fn m(&self) -> u32 {
        self.params.m()
    }

    pub fn columns(&self) -> &[Z4Vector] {
        &self.columns
    }

    /// Generator rows `x_1, …, x_m`; row `i` lists coordinate `i` of every column.
    pub fn generator(&self) -> Vec<Z4Vector> {
        let n = self.columns.len();
        (0..self.m() as usize)
            .map(|i| {
                let mut row = Z4Vector::zero(n);
                for (j, col) in self.columns.iter().enumerate() {
                    row.set(j, col.get(i));
                }
                row
            })
            .collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "family": self.params.family,
            "m": self.m(),
            "A": self.params.a.to_string(),
            "B": self.params.b.to_string(),
            "C": self.params.c.to_string(),
            "columns": self.columns.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
        })
    }
}

/// The component sets `(D_1, D_2)` of a family.
pub fn components(params: &CodeParams) -> Result<(BitVectorSet, BitVectorSet), CodegenError> {
    let CodeParams { family, a, b, c } = *params;
    Ok(match family {
        Family::F1 => (simplicial::simplex(a), simplicial::punctured_two_gen(b, c)?),
        Family::F2 => (simplicial::punctured_simplex(a), simplicial::punctured_two_gen(b, c)?),
        Family::F3 => (simplicial::simplex(a), simplicial::complement_two_gen(b, c)?),
    })
}

/// Builds the defining set of a family after checking its hypotheses.
pub fn build_defining_set(params: CodeParams) -> Result<DefiningSet, CodegenError> {
    params.validate()?;
    let (d1, d2) = components(&params)?;
    let m = params.m();
    let mut keyed: Vec<(u64, u32, u32)> =
        d1.masks().iter().flat_map(|&x| d2.masks().iter().map(move |&y| (base4_key(x, y), x, y))).collect();
    keyed.sort_unstable();
    let columns: Vec<Z4Vector> = keyed.into_iter().map(|(_, x, y)| column_vector(m, x, y)).collect();
    debug_assert_eq!(columns.len() as u64, params.profile().expected_length(params.family));
    Ok(DefiningSet { params, columns })
}

/// A linear code over `Z_4` with its distinct codewords.
#[derive(Debug, Clone)]
pub struct QuaternaryCode {
    pub n: usize,
    pub generator: Vec<Z4Vector>,
    /// sorted, distinct
    codewords: Vec<Z4Vector>,
    pub k1: u32,
    pub k2: u32,
}

impl QuaternaryCode {
    /// Builds the span of the given rows. All rows must have length `n`.
    pub fn from_generator(n: usize, generator: Vec<Z4Vector>) -> Result<Self, CodegenError> {
        if generator.iter().any(|r| r.len() != n) {
            return Err(CodegenError::RaggedGenerator);
        }
        let codewords = span(n, &generator);
        let (k1, k2) = code_type(&generator, codewords.len() as u128)?;
        Ok(Self { n, generator, codewords, k1, k2 })
    }

    pub fn codewords(&self) -> &[Z4Vector] {
        &self.codewords
    }

    pub fn size(&self) -> u128 {
        self.codewords.len() as u128
    }

    pub fn contains(&self, word: &Z4Vector) -> bool {
        self.codewords.binary_search(word).is_ok()
    }

    pub fn generator_json(&self) -> serde_json::Value {
        serde_json::Value::from(self.generator.iter().map(|r| r.to_string()).collect::<Vec<_>>())
    }

    /// The generator as rows of space-separated digits.
    pub fn generator_grid(&self) -> String {
        let mut out = String::new();
        for row in &self.generator {
            let digits: Vec<String> = row.digits().iter().map(|d| d.to_string()).collect();
            out.push_str(&digits.join(" "));
            out.push('\n');
        }
        out
    }
}

/// The `Z_4`-span of `rows`, as sorted distinct vectors.
///
/// Multiples of one row are adjoined at a time, so the work is proportional
/// to the size of the span rather than to `4^rows`.
pub fn span(n: usize, rows: &[Z4Vector]) -> Vec<Z4Vector> {
    let mut seen: HashSet<Z4Vector> = HashSet::new();
    let zero = Z4Vector::zero(n);
    seen.insert(zero.clone());
    let mut words = vec![zero];
    for row in rows {
        if seen.contains(row) && row.scale(2).is_zero() {
            continue;
        }
        let base = words.len();
        let mut shifted = row.clone();
        for _ in 1..4 {
            for i in 0..base {
                let mut w = words[i].clone();
                w.add_assign(&shifted);
                if !seen.contains(&w) {
                    seen.insert(w.clone());
                    words.push(w);
                }
            }
            shifted.add_assign(row);
        }
    }
    words.sort_unstable();
    words
}

/// `{(v · d)_{d ∈ D} : v ∈ Z_4^m}` by a literal sweep of all `4^m` messages,
/// split into chunks over the worker pool. The result does not depend on the
/// number of workers.
pub fn sweep_messages(set: &DefiningSet) -> Result<Vec<Z4Vector>, CodegenError> {
    let m = set.m();
    if m > ENUMERATION_CAP {
        return Err(CodegenError::OverCap { m, cap: ENUMERATION_CAP });
    }
    let rows = set.generator();
    let n = set.len();
    let total: u64 = 1 << (2 * m);
    let chunk: u64 = 1 << 10;
    let mut words: Vec<Z4Vector> = (0..total.div_ceil(chunk))
        .into_par_iter()
        .map(|ci| {
            let lo = ci * chunk;
            let hi = (lo + chunk).min(total);
            let mut local = HashSet::new();
            for msg in lo..hi {
                let mut w = Z4Vector::zero(n);
                for (i, row) in rows.iter().enumerate() {
                    let digit = ((msg >> (2 * i)) & 3) as u8;
                    if digit != 0 {
                        w.add_assign(&row.scale(digit));
                    }
                }
                local.insert(w);
            }
            local
        })
        .reduce(HashSet::new, |mut a, b| {
            a.extend(b);
            a
        })
        .into_iter()
        .collect();
    words.sort_unstable();
    Ok(words)
}

/// Type `(k1, k2)` of a code from its generator and its size: `k1` is the
/// binary rank of the residue matrix and `k2 = log2(size) - 2 k1`.
pub fn code_type(generator: &[Z4Vector], size: u128) -> Result<(u32, u32), CodegenError> {
    if size == 0 || !size.is_power_of_two() {
        return Err(CodegenError::NotPowerOfTwo(size));
    }
    let log = size.trailing_zeros();
    let k1 = gf2::rank(generator.iter().map(|r| r.residue().to_vec())) as u32;
    if 2 * k1 > log {
        return Err(CodegenError::InconsistentType { log, k1 });
    }
    Ok((k1, log - 2 * k1))
}

/// Enumerates `C_D` for a defining set within the enumeration cap.
pub fn generate_code(set: &DefiningSet) -> Result<QuaternaryCode, CodegenError> {
    let m = set.m();
    if m > ENUMERATION_CAP {
        return Err(CodegenError::OverCap { m, cap: ENUMERATION_CAP });
    }
    QuaternaryCode::from_generator(set.len(), set.generator())
}

/// Convenience: validate, build and enumerate.
pub fn build_code(params: CodeParams) -> Result<(DefiningSet, QuaternaryCode), CodegenError> {
    let set = build_defining_set(params)?;
    let code = generate_code(&set)?;
    Ok((set, code))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(family: Family, m: u32, a: &str, b: &str, c: &str) -> CodeParams {
        CodeParams::parse(family, m, a, b, c).unwrap()
    }

    fn all_params(family: Family, m: u32) -> impl Iterator<Item = CodeParams> {
        let n = 1u32 << m;
        (0..n * n * n).filter_map(move |x| {
            let s = |v| SubsetMask::new(v, m).unwrap();
            let p = CodeParams::new(family, s(x % n), s((x / n) % n), s(x / (n * n))).unwrap();
            p.validate().ok().map(|_| p)
        })
    }

    #[test]
    fn f1_small_columns() {
        let set = build_defining_set(params(Family::F1, 3, "{1}", "{2}", "{3}")).unwrap();
        let cols: Vec<String> = set.columns().iter().map(|c| c.to_string()).collect();
        assert_eq!(cols, ["020", "120", "002", "102"]);
    }

    #[test]
    fn worked_example_lengths() {
        let s = build_defining_set(params(Family::F1, 4, "{2,3}", "{3,4}", "{2,3}")).unwrap();
        assert_eq!(s.len(), 16);
        let s = build_defining_set(params(Family::F3, 4, "{4}", "{4}", "{1,2,3}")).unwrap();
        assert_eq!(s.len(), 14);
    }

    #[test]
    fn hypotheses_are_named() {
        let e = build_defining_set(params(Family::F1, 3, "{}", "{}", "{}")).unwrap_err();
        assert!(matches!(e, CodegenError::F1EqualGenerators(_)));
        assert!(e.to_string().contains("B ≠ C"));
        let e = build_defining_set(params(Family::F2, 3, "{1}", "{1,2}", "{3}")).unwrap_err();
        assert!(matches!(e, CodegenError::F2Overlap { .. }));
        // A = ∅ empties Δ_A^*
        let e = build_defining_set(params(Family::F2, 3, "{}", "{1}", "{2}")).unwrap_err();
        assert_eq!(e, CodegenError::F2TooSmall(0));
        let e = build_defining_set(params(Family::F2, 3, "{1}", "{}", "{2}")).unwrap_err();
        assert_eq!(e, CodegenError::F2TooSmall(1));
        let e = build_defining_set(params(Family::F3, 3, "{1}", "{1,2,3}", "{2}")).unwrap_err();
        assert_eq!(e, CodegenError::F3FullComplex(3));
    }

    #[test]
    fn worked_example_types() {
        let (_, code) = build_code(params(Family::F1, 4, "{2,3}", "{3,4}", "{2,3}")).unwrap();
        assert_eq!((code.n, code.size(), code.k1, code.k2), (16, 32, 2, 1));
        let (_, code) = build_code(params(Family::F2, 6, "{5}", "{1,2,3,4}", "{2,3,4,6}")).unwrap();
        assert_eq!((code.n, code.size(), code.k1, code.k2), (16, 64, 1, 4));
    }

    #[test]
    fn degenerate_zero_columns() {
        let p = params(Family::F1, 3, "{}", "{1}", "{2}");
        let set = DefiningSet::from_columns(p, vec![Z4Vector::zero(3); 4]);
        assert_eq!(set.len(), 1);
        let code = generate_code(&set).unwrap();
        assert_eq!(code.size(), 1);
        assert_eq!((code.k1, code.k2), (0, 0));
    }

    #[test]
    fn code_type_examples() {
        // 2·(binary rank-2 matrix)
        let rows: Vec<Z4Vector> = ["2020", "0220", "2200"].iter().map(|s| s.parse().unwrap()).collect();
        assert_eq!(code_type(&rows, 4).unwrap(), (0, 2));
        let id: Vec<Z4Vector> = ["100", "010", "001"].iter().map(|s| s.parse().unwrap()).collect();
        assert_eq!(code_type(&id, 64).unwrap(), (3, 0));
        assert_eq!(code_type(&id, 48), Err(CodegenError::NotPowerOfTwo(48)));
        assert!(code_type(&id, 8).is_err());
        let code = QuaternaryCode::from_generator(3, id).unwrap();
        assert_eq!(code.size(), 64);
    }

    #[test]
    fn over_cap_refused() {
        let p = params(Family::F1, 13, "{1}", "{2}", "{3}");
        let set = build_defining_set(p).unwrap();
        assert_eq!(generate_code(&set).unwrap_err(), CodegenError::OverCap { m: 13, cap: 12 });
        assert!(sweep_messages(&set).is_err());
    }

    #[test]
    fn span_matches_message_sweep() {
        for family in Family::ALL {
            for m in 1..=3 {
                for p in all_params(family, m) {
                    let set = build_defining_set(p).unwrap();
                    let code = generate_code(&set).unwrap();
                    assert_eq!(code.codewords(), sweep_messages(&set).unwrap().as_slice(), "{p}");
                }
            }
        }
    }

    #[test]
    fn lengths_and_types_match_closed_forms() {
        for family in Family::ALL {
            for m in 1..=4 {
                for p in all_params(family, m) {
                    let set = build_defining_set(p).unwrap();
                    let prof = p.profile();
                    assert_eq!(set.len() as u64, prof.expected_length(family));
                    let code = generate_code(&set).unwrap();
                    assert_eq!(code.size(), 1u128 << (2 * code.k1 + code.k2));
                    if family == Family::F1 {
                        assert_eq!((code.k1, code.k2), prof.expected_type(family), "{p}");
                    }
                }
            }
        }
    }

    #[test]
    fn codes_are_closed_exhaustive() {
        for family in Family::ALL {
            for p in all_params(family, 3) {
                let (_, code) = build_code(p).unwrap();
                for u in code.codewords() {
                    assert!(code.contains(&u.neg()));
                    for v in code.codewords() {
                        assert!(code.contains(&u.add(v).unwrap()));
                    }
                }
            }
        }
    }

    #[test]
    fn columns_sorted_and_distinct() {
        for p in all_params(Family::F3, 4) {
            let set = build_defining_set(p).unwrap();
            let keys: Vec<u64> =
                set.columns().iter().map(|c| base4_key(c.residue()[0] as u32, c.twos()[0] as u32)).collect();
            assert!(keys.windows(2).all(|w| w[0] < w[1]));
        }
    }
}
