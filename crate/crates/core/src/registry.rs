//! Code records, the best-known comparison table, parameter search and
//! report export.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::{self, Write as _};
use std::io::Read;
use std::path::Path;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::analysis::{gray_linear_pairtest, is_projective_columns, plotkin_check};
use crate::codegen::{build_defining_set, generate_code, CodeParams, CodegenError, Family, ENUMERATION_CAP};
use crate::simplicial::{SubsetError, SubsetMask};
use crate::spectra::{
    lee_spectrum_bruteforce, lee_spectrum_closed_form, specialization, Specialization, SpectrumError,
    WeightDistribution,
};

/// Longest length the bundled table speaks for.
pub const DEFAULT_COVERAGE: u64 = 128;

const BUNDLED_CSV: &str = include_str!("../data/best_known.csv");

#[derive(Debug, Error)]
pub enum RegistryError {
    #[error(transparent)]
    Codegen(#[from] CodegenError),
    #[error(transparent)]
    Spectrum(#[from] SpectrumError),
    #[error(transparent)]
    Subset(#[from] SubsetError),
    #[error("best-known table, line {line}: {message}")]
    Parse { line: u64, message: String },
    #[error("best-known table, line {line}: duplicate entry for (n, k1, k2) = ({n}, {k1}, {k2})")]
    Duplicate { line: u64, n: u64, k1: u32, k2: u32 },
    #[error("unknown report format `{0}` (expected csv, json or markdown)")]
    UnknownFormat(String),
    #[error("record JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("I/O: {0}")]
    Io(#[from] std::io::Error),
}

/// One row of a best-known table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BestKnownEntry {
    pub n: u64,
    pub k1: u32,
    pub k2: u32,
    #[serde(rename = "dL")]
    pub d_best: u64,
    pub source: String,
}

/// Best-known minimum Lee distances keyed by `(n, k1, k2)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BestKnownTable {
    entries: BTreeMap<(u64, u32, u32), BestKnownEntry>,
    /// lengths above this are not covered
    pub coverage: u64,
}

impl Default for BestKnownTable {
    fn default() -> Self {
        Self { entries: BTreeMap::new(), coverage: DEFAULT_COVERAGE }
    }
}

impl BestKnownTable {
    /// Parses `n,k1,k2,dL,source` CSV with a header row.
    pub fn from_reader(reader: impl Read) -> Result<Self, RegistryError> {
        let mut rdr = csv::ReaderBuilder::new().trim(csv::Trim::All).from_reader(reader);
        let headers = rdr.headers().map_err(|e| csv_error(&e))?.clone();
        let expected = ["n", "k1", "k2", "dL", "source"];
        if headers.iter().collect::<Vec<_>>() != expected {
            return Err(RegistryError::Parse { line: 1, message: format!("header must be `{}`", expected.join(",")) });
        }
        let mut table = Self::default();
        for result in rdr.deserialize::<BestKnownEntry>() {
            let entry = result.map_err(|e| csv_error(&e))?;
            let line = table.entries.len() as u64 + 2;
            let key = (entry.n, entry.k1, entry.k2);
            if table.entries.contains_key(&key) {
                return Err(RegistryError::Duplicate { line, n: key.0, k1: key.1, k2: key.2 });
            }
            table.entries.insert(key, entry);
        }
        Ok(table)
    }

    pub fn load(path: &Path) -> Result<Self, RegistryError> {
        Self::from_reader(std::fs::File::open(path)?)
    }

    /// The rows shipped with the crate.
    pub fn bundled() -> Self {
        Self::from_reader(BUNDLED_CSV.as_bytes()).expect("bundled table is valid")
    }

    pub fn get(&self, n: u64, k1: u32, k2: u32) -> Option<&BestKnownEntry> {
        self.entries.get(&(n, k1, k2))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> impl Iterator<Item = &BestKnownEntry> {
        self.entries.values()
    }

    /// Verdict for a code with the given parameters.
    pub fn classify(&self, n: u64, k1: u32, k2: u32, d_l: u64) -> Verdict {
        if n > self.coverage {
            return Verdict::Unknown;
        }
        match self.get(n, k1, k2) {
            None => Verdict::New,
            Some(e) if d_l > e.d_best => Verdict::Improved { best: e.d_best },
            Some(e) if d_l == e.d_best => Verdict::BestKnown { best: e.d_best },
            Some(e) => Verdict::Dominated { best: e.d_best },
        }
    }
}

fn csv_error(e: &csv::Error) -> RegistryError {
    let line = e.position().map_or(0, |p| p.line());
    RegistryError::Parse { line, message: e.to_string() }
}

/// Comparison against a best-known table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum Verdict {
    /// no code of this length and type is listed
    New,
    /// listed code has a smaller distance
    Improved {
        best: u64,
    },
    BestKnown {
        best: u64,
    },
    Dominated {
        best: u64,
    },
    /// length beyond table coverage
    Unknown,
}

impl Verdict {
    pub fn best(&self) -> Option<u64> {
        match *self {
            Verdict::Improved { best } | Verdict::BestKnown { best } | Verdict::Dominated { best } => Some(best),
            Verdict::New | Verdict::Unknown => None,
        }
    }

    pub fn status(&self) -> &'static str {
        match self {
            Verdict::New => "new",
            Verdict::Improved { .. } => "improved",
            Verdict::BestKnown { .. } => "best-known",
            Verdict::Dominated { .. } => "dominated",
            Verdict::Unknown => "unknown",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.best() {
            Some(best) => write!(f, "{} (d_L^best={best})", self.status()),
            None => f.write_str(self.status()),
        }
    }
}

/// Which construction a record comes from; special cases are named by the
/// hypothesis that selects them.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Provenance {
    #[serde(rename = "F1")]
    F1,
    #[serde(rename = "F1 (C=A)")]
    F1CEqualsA,
    #[serde(rename = "F1 (B⊊C, A⊆C)")]
    F1Nested,
    #[serde(rename = "F2")]
    F2,
    #[serde(rename = "F2 (B⊊C)")]
    F2Nested,
    #[serde(rename = "F3")]
    F3,
    #[serde(rename = "F3 (C=A)")]
    F3CEqualsA,
}

impl Provenance {
    pub fn of(params: &CodeParams) -> Self {
        match specialization(params).map(|s| s.0) {
            Some(Specialization::F1CEqualsA) => Provenance::F1CEqualsA,
            Some(Specialization::F1Nested) => Provenance::F1Nested,
            Some(Specialization::F2Nested) => Provenance::F2Nested,
            Some(Specialization::F3CEqualsA) => Provenance::F3CEqualsA,
            None => match params.family {
                Family::F1 => Provenance::F1,
                Family::F2 => Provenance::F2,
                Family::F3 => Provenance::F3,
            },
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Provenance::F1 => "F1",
            Provenance::F1CEqualsA => "F1 (C=A)",
            Provenance::F1Nested => "F1 (B⊊C, A⊆C)",
            Provenance::F2 => "F2",
            Provenance::F2Nested => "F2 (B⊊C)",
            Provenance::F3 => "F3",
            Provenance::F3CEqualsA => "F3 (C=A)",
        }
    }
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct Flags {
    pub projective: bool,
    pub plotkin_optimal: bool,
    /// `None` when the code was not enumerated
    pub gray_linear: Option<bool>,
    pub minimal: Option<bool>,
}

/// Parameters and properties of one constructed code.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeRecord {
    pub family: Family,
    pub m: u32,
    #[serde(rename = "A")]
    pub a: String,
    #[serde(rename = "B")]
    pub b: String,
    #[serde(rename = "C")]
    pub c: String,
    pub n: u64,
    pub k1: u32,
    pub k2: u32,
    #[serde(rename = "dL")]
    pub d_l: u64,
    pub flags: Flags,
    pub provenance: Provenance,
    /// spectrum from enumeration rather than the closed form
    pub enumerated: bool,
    #[serde(default)]
    pub verdict: Option<Verdict>,
}

impl CodeRecord {
    pub fn params(&self) -> Result<CodeParams, SubsetError> {
        CodeParams::parse(self.family, self.m, &self.a, &self.b, &self.c)
    }

    pub fn type_string(&self) -> String {
        format!("4^{} 2^{}", self.k1, self.k2)
    }

    pub fn classify(&mut self, table: &BestKnownTable) {
        self.verdict = Some(table.classify(self.n, self.k1, self.k2, self.d_l));
    }

    fn sort_key(&self) -> (u64, u32, u32, std::cmp::Reverse<u64>, Provenance, u32, String, String, String) {
        (
            self.n,
            self.k1,
            self.k2,
            std::cmp::Reverse(self.d_l),
            self.provenance,
            self.m,
            self.a.clone(),
            self.b.clone(),
            self.c.clone(),
        )
    }
}

/// Where a record's spectrum comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SpectrumMode {
    /// enumerate within the cap, closed form beyond
    #[default]
    Auto,
    Enumerate,
    ClosedForm,
}

/// Builds the record of one parameter set.
pub fn build_record(params: &CodeParams, mode: SpectrumMode) -> Result<CodeRecord, RegistryError> {
    params.validate()?;
    let enumerate = match mode {
        SpectrumMode::Auto => params.m() <= ENUMERATION_CAP,
        SpectrumMode::Enumerate => true,
        SpectrumMode::ClosedForm => false,
    };
    let n = params.profile().expected_length(params.family);
    let (dist, k1, k2, projective, gray_linear): (WeightDistribution, u32, u32, bool, Option<bool>) = if enumerate {
        let set = build_defining_set(*params)?;
        let code = generate_code(&set)?;
        (
            lee_spectrum_bruteforce(&code),
            code.k1,
            code.k2,
            is_projective_columns(&set),
            Some(gray_linear_pairtest(&code)),
        )
    } else {
        let cf = lee_spectrum_closed_form(params)?;
        // Δ_A always contains the zero vector, so F1 and F3 have all-even columns.
        let projective = params.family == Family::F2;
        (cf.distribution, cf.effective_type.0, cf.effective_type.1, projective, None)
    };
    let d_l = dist.min_distance()?;
    let size = 1u128 << (2 * k1 + k2);
    let plotkin_optimal = plotkin_check(n, size, d_l).map(|(_, ok)| ok).unwrap_or(false);
    Ok(CodeRecord {
        family: params.family,
        m: params.m(),
        a: params.a.to_string(),
        b: params.b.to_string(),
        c: params.c.to_string(),
        n,
        k1,
        k2,
        d_l,
        flags: Flags { projective, plotkin_optimal, gray_linear, minimal: None },
        provenance: Provenance::of(params),
        enumerated: enumerate,
        verdict: None,
    })
}

/// Filters applied during [`search`].
#[derive(Debug, Clone, Default)]
pub struct SearchOptions {
    /// keep only records from this special case
    pub provenance: Option<Provenance>,
    pub projective_only: bool,
    pub max_length: Option<u64>,
    pub mode: SpectrumMode,
}

/// Sizes of the eight Venn regions of `(A, B, C)`, indexed by membership
/// bits `A = 1, B = 2, C = 4`.
pub type VennProfile = [u32; 8];

/// Every composition of `m` into eight regions.
pub fn venn_profiles(m: u32) -> Vec<VennProfile> {
    fn rec(i: usize, left: u32, cur: &mut VennProfile, out: &mut Vec<VennProfile>) {
        if i == 7 {
            cur[7] = left;
            out.push(*cur);
            return;
        }
        for k in 0..=left {
            cur[i] = k;
            rec(i + 1, left - k, cur, out);
        }
    }
    let mut out = Vec::new();
    rec(0, m, &mut [0; 8], &mut out);
    out
}

/// A representative `(A, B, C)` with the given Venn profile: elements are
/// handed out region by region.
pub fn profile_representative(family: Family, m: u32, profile: &VennProfile) -> Result<CodeParams, SubsetError> {
    let (mut a, mut b, mut c) = (0u32, 0u32, 0u32);
    let mut next = 0;
    for (region, &count) in profile.iter().enumerate() {
        for _ in 0..count {
            let bit = 1 << next;
            if region & 1 != 0 {
                a |= bit;
            }
            if region & 2 != 0 {
                b |= bit;
            }
            if region & 4 != 0 {
                c |= bit;
            }
            next += 1;
        }
    }
    CodeParams::new(family, SubsetMask::new(a, m)?, SubsetMask::new(b, m)?, SubsetMask::new(c, m)?)
}

fn swap_bc(p: &VennProfile) -> VennProfile {
    let mut q = [0; 8];
    for (r, &v) in p.iter().enumerate() {
        let s = (r & 1) | ((r & 2) << 1) | ((r & 4) >> 1);
        q[s] = v;
    }
    q
}

/// Sweeps one representative per Venn profile (and per `B`/`C` swap) for
/// every `m` in the range. Relabelling `[m]` permutes coordinates only, so
/// this reaches every attainable `(n, k1, k2, d_L)`.
pub fn search(
    family: Family,
    ms: impl IntoIterator<Item = u32>,
    options: &SearchOptions,
    table: Option<&BestKnownTable>,
) -> Result<Vec<CodeRecord>, RegistryError> {
    let mut jobs = Vec::new();
    for m in ms {
        for profile in venn_profiles(m) {
            if swap_bc(&profile) < profile {
                continue;
            }
            let params = profile_representative(family, m, &profile)?;
            if params.validate().is_err() {
                continue;
            }
            if let Some(max) = options.max_length {
                if params.profile().expected_length(family) > max {
                    continue;
                }
            }
            if options.provenance.is_some_and(|p| p != Provenance::of(&params)) {
                continue;
            }
            jobs.push(params);
        }
    }
    let built: Vec<Result<CodeRecord, RegistryError>> =
        jobs.par_iter().map(|p| build_record(p, options.mode)).collect();
    let mut records = Vec::new();
    let mut seen = BTreeSet::new();
    for r in built {
        let mut rec = match r {
            Ok(rec) => rec,
            Err(RegistryError::Spectrum(SpectrumError::NoNonzeroCodeword)) => continue,
            Err(e) => return Err(e),
        };
        if options.projective_only && !rec.flags.projective {
            continue;
        }
        if let Some(t) = table {
            rec.classify(t);
        }
        records.push(rec);
    }
    records.sort_by_key(CodeRecord::sort_key);
    records.retain(|r| seen.insert((r.n, r.k1, r.k2, r.d_l, r.provenance)));
    Ok(records)
}

/// Output formats of [`export_report`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Csv,
    Json,
    Markdown,
}

impl FromStr for ReportFormat {
    type Err = RegistryError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "csv" => Ok(ReportFormat::Csv),
            "json" => Ok(ReportFormat::Json),
            "markdown" | "md" => Ok(ReportFormat::Markdown),
            other => Err(RegistryError::UnknownFormat(other.to_string())),
        }
    }
}

impl ReportFormat {
    pub fn extension(self) -> &'static str {
        match self {
            ReportFormat::Csv => "csv",
            ReportFormat::Json => "json",
            ReportFormat::Markdown => "md",
        }
    }
}

fn opt_bool(b: Option<bool>) -> &'static str {
    match b {
        Some(true) => "true",
        Some(false) => "false",
        None => "",
    }
}

/// Renders records; identical input gives identical bytes.
pub fn export_report(records: &[CodeRecord], format: ReportFormat) -> Result<String, RegistryError> {
    Ok(match format {
        ReportFormat::Json => {
            let mut s = serde_json::to_string_pretty(records)?;
            s.push('\n');
            s
        }
        ReportFormat::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record([
                "family",
                "m",
                "A",
                "B",
                "C",
                "n",
                "k1",
                "k2",
                "dL",
                "projective",
                "plotkin_optimal",
                "gray_linear",
                "minimal",
                "provenance",
                "enumerated",
                "verdict",
                "best",
            ])
            .map_err(|e| csv_error(&e))?;
            for r in records {
                w.write_record([
                    r.family.to_string(),
                    r.m.to_string(),
                    r.a.clone(),
                    r.b.clone(),
                    r.c.clone(),
                    r.n.to_string(),
                    r.k1.to_string(),
                    r.k2.to_string(),
                    r.d_l.to_string(),
                    r.flags.projective.to_string(),
                    r.flags.plotkin_optimal.to_string(),
                    opt_bool(r.flags.gray_linear).to_string(),
                    opt_bool(r.flags.minimal).to_string(),
                    r.provenance.to_string(),
                    r.enumerated.to_string(),
                    r.verdict.map_or(String::new(), |v| v.status().to_string()),
                    r.verdict.and_then(|v| v.best()).map_or(String::new(), |b| b.to_string()),
                ])
                .map_err(|e| csv_error(&e))?;
            }
            String::from_utf8(w.into_inner().map_err(|e| RegistryError::Io(e.into_error()))?).expect("csv is UTF-8")
        }
        ReportFormat::Markdown => markdown_table(records, &[]),
    })
}

/// Markdown with one row per record; `notes[i]` is appended to row `i`'s
/// remark when present.
pub fn markdown_table(records: &[CodeRecord], notes: &[Option<&str>]) -> String {
    let mut s = String::from("| Ref. | m | A | B | C | Length | Type | d_L | Remark |\n");
    s.push_str("|---|---|---|---|---|---|---|---|---|\n");
    for (i, r) in records.iter().enumerate() {
        let mut remark = r.verdict.map_or(String::new(), |v| v.to_string());
        if let Some(Some(note)) = notes.get(i) {
            if !remark.is_empty() {
                remark.push_str("; ");
            }
            remark.push_str(note);
        }
        writeln!(
            s,
            "| {} | {} | {} | {} | {} | {} | {} | {} | {} |",
            r.provenance,
            r.m,
            r.a,
            r.b,
            r.c,
            r.n,
            r.type_string(),
            r.d_l,
            remark
        )
        .unwrap();
    }
    s
}

/// Reads records written by [`export_report`] in JSON form.
pub fn import_json(text: &str) -> Result<Vec<CodeRecord>, RegistryError> {
    Ok(serde_json::from_str(text)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(family: Family, m: u32, a: &str, b: &str, c: &str) -> CodeParams {
        CodeParams::parse(family, m, a, b, c).unwrap()
    }

    #[test]
    fn bundled_table_lookups() {
        let t = BestKnownTable::bundled();
        assert_eq!(t.get(16, 2, 1).unwrap().d_best, 8);
        assert_eq!(t.get(20, 2, 1).unwrap().d_best, 16);
        assert_eq!(t.classify(28, 2, 1, 28), Verdict::Improved { best: 22 });
        assert_eq!(t.classify(54, 1, 4, 53), Verdict::New);
        assert_eq!(t.classify(14, 1, 4, 12), Verdict::BestKnown { best: 12 });
        assert_eq!(t.classify(14, 1, 4, 11), Verdict::Dominated { best: 12 });
        assert_eq!(t.classify(129, 1, 4, 11), Verdict::Unknown);
    }

    #[test]
    fn header_only_table() {
        let t = BestKnownTable::from_reader("n,k1,k2,dL,source\n".as_bytes()).unwrap();
        assert!(t.is_empty());
        assert_eq!(t.classify(16, 2, 1, 16), Verdict::New);
    }

    #[test]
    fn table_errors_carry_lines() {
        let e = BestKnownTable::from_reader("n,k1,k2,dL,source\n16,2,1,8,db\n16,2,1,9,db\n".as_bytes()).unwrap_err();
        assert!(matches!(e, RegistryError::Duplicate { line: 3, .. }), "{e}");
        let e = BestKnownTable::from_reader("n,k1,k2,dL,source\n16,2,x,8,db\n".as_bytes()).unwrap_err();
        assert!(matches!(e, RegistryError::Parse { line: 2, .. }), "{e}");
        let e = BestKnownTable::from_reader("a,b\n".as_bytes()).unwrap_err();
        assert!(matches!(e, RegistryError::Parse { line: 1, .. }), "{e}");
    }

    #[test]
    fn verdict_json() {
        let v = serde_json::to_string(&Verdict::Improved { best: 22 }).unwrap();
        assert_eq!(v, r#"{"status":"improved","best":22}"#);
        assert_eq!(serde_json::to_string(&Verdict::New).unwrap(), r#"{"status":"new"}"#);
    }

    #[test]
    fn venn_profiles_count() {
        // C(m + 7, 7)
        assert_eq!(venn_profiles(0).len(), 1);
        assert_eq!(venn_profiles(1).len(), 8);
        assert_eq!(venn_profiles(4).len(), 330);
        let p = profile_representative(Family::F1, 3, &[0, 1, 0, 0, 0, 0, 0, 2]).unwrap();
        assert_eq!(
            (p.a.to_string(), p.b.to_string(), p.c.to_string()),
            ("{1,2,3}".into(), "{2,3}".into(), "{2,3}".into())
        );
    }

    #[test]
    fn record_example() {
        let r = build_record(&params(Family::F1, 3, "{1,3}", "{}", "{1,2,3}"), SpectrumMode::Auto).unwrap();
        assert_eq!((r.n, r.k1, r.k2, r.d_l), (28, 2, 1, 28));
        assert!(r.flags.plotkin_optimal);
        assert_eq!(r.provenance, Provenance::F1Nested);
        let v = serde_json::to_value(&r).unwrap();
        for key in ["family", "m", "A", "B", "C", "n", "k1", "k2", "dL", "flags", "verdict", "provenance"] {
            assert!(v.get(key).is_some(), "{key}");
        }
        assert_eq!(v["A"], "{1,3}");
    }

    #[test]
    fn closed_form_record_agrees_for_small_a() {
        let p = params(Family::F3, 4, "{4}", "{4}", "{1,2,3}");
        let e = build_record(&p, SpectrumMode::Enumerate).unwrap();
        let c = build_record(&p, SpectrumMode::ClosedForm).unwrap();
        assert_eq!((e.n, e.k1, e.k2, e.d_l, e.flags.projective), (c.n, c.k1, c.k2, c.d_l, c.flags.projective));
        assert_eq!(e.d_l, 13);
    }

    #[test]
    fn search_examples() {
        let opts = SearchOptions { provenance: Some(Provenance::F1Nested), ..Default::default() };
        let recs = search(Family::F1, 1..=4, &opts, None).unwrap();
        let keys: Vec<_> = recs.iter().map(|r| (r.n, r.k1, r.k2, r.d_l)).collect();
        assert!(keys.contains(&(12, 0, 4, 12)));
        assert!(keys.contains(&(24, 2, 1, 24)));
        assert!(recs.windows(2).all(|w| w[0].sort_key() <= w[1].sort_key()));
        assert!(search(Family::F1, std::iter::empty(), &SearchOptions::default(), None).unwrap().is_empty());
    }

    #[test]
    fn export_round_trip_and_stability() {
        let t = BestKnownTable::bundled();
        let opts = SearchOptions::default();
        let recs = search(Family::F3, 2..=3, &opts, Some(&t)).unwrap();
        let json = export_report(&recs, ReportFormat::Json).unwrap();
        assert_eq!(import_json(&json).unwrap(), recs);
        assert_eq!(json, export_report(&recs, ReportFormat::Json).unwrap());
        let md = export_report(&[], ReportFormat::Markdown).unwrap();
        assert_eq!(md.lines().count(), 2);
        let csv = export_report(&[], ReportFormat::Csv).unwrap();
        assert_eq!(csv.lines().count(), 1);
        assert!("xml".parse::<ReportFormat>().is_err());
    }

    #[test]
    fn improved_is_monotone() {
        let t = BestKnownTable::bundled();
        for d in 23..40 {
            assert_eq!(t.classify(28, 2, 1, d), Verdict::Improved { best: 22 });
        }
    }
}
