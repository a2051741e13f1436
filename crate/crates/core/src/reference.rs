//! Published parameter sets with their expected parameters and verdicts,
//! and reproduction of the four summary tables.

use std::fmt::Write as _;

use crate::codegen::{CodeParams, Family};
use crate::registry::{build_record, markdown_table, BestKnownTable, CodeRecord, RegistryError, SpectrumMode, Verdict};

/// Expected verdict as printed in a table's remark column.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Expected {
    New,
    Improved(u64),
    BestKnown,
}

impl Expected {
    pub fn matches(self, v: Verdict) -> bool {
        match (self, v) {
            (Expected::New, Verdict::New) => true,
            (Expected::Improved(b), Verdict::Improved { best }) => b == best,
            (Expected::BestKnown, Verdict::BestKnown { .. }) => true,
            _ => false,
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct ReferenceRow {
    pub family: Family,
    pub m: u32,
    pub a: &'static str,
    pub b: &'static str,
    pub c: &'static str,
    pub n: u64,
    pub k1: u32,
    pub k2: u32,
    pub d_l: u64,
    pub expected: Expected,
    pub note: Option<&'static str>,
}

const fn row(
    family: Family,
    m: u32,
    a: &'static str,
    b: &'static str,
    c: &'static str,
    (n, k1, k2, d_l): (u64, u32, u32, u64),
    expected: Expected,
) -> ReferenceRow {
    ReferenceRow { family, m, a, b, c, n, k1, k2, d_l, expected, note: None }
}

use Expected::{BestKnown, Improved, New};
use Family::{F1, F2, F3};

/// Plotkin-optimal codes from the first family.
pub const F1_ROWS: [ReferenceRow; 10] = [
    row(F1, 4, "{}", "{2,3}", "{1,2,3,4}", (12, 0, 4, 12), Improved(8)),
    row(F1, 5, "{}", "{1,2,4,5}", "{1,2,3,4,5}", (16, 0, 5, 16), New),
    ReferenceRow {
        note: Some("listed with m=3, but B contains 4; built at m=4"),
        ..row(F1, 4, "{2,3}", "{3,4}", "{2,3}", (16, 2, 1, 16), Improved(8))
    },
    row(F1, 3, "{1,3}", "{1}", "{1,2,3}", (24, 2, 1, 24), Improved(16)),
    row(F1, 3, "{1,3}", "{}", "{1,2,3}", (28, 2, 1, 28), Improved(22)),
    row(F1, 4, "{2,3}", "{2,3,4}", "{1,2,3,4}", (32, 2, 2, 32), Improved(16)),
    row(F1, 4, "{1,2}", "{1,2}", "{1,2,3,4}", (48, 2, 2, 48), New),
    row(F1, 4, "{2,3}", "{4}", "{1,2,3,4}", (56, 2, 2, 56), New),
    row(F1, 5, "{1,4}", "{1,2,3,5}", "{1,2,3,4,5}", (64, 2, 3, 64), New),
    row(F1, 4, "{1,2,3}", "{1,2}", "{1,2,3,4}", (96, 3, 1, 96), New),
];

/// Codes from the third family.
pub const F3_ROWS: [ReferenceRow; 12] = [
    row(F3, 4, "{}", "{4}", "{2,3}", (11, 0, 4, 10), New),
    row(F3, 4, "{4}", "{3,4}", "{1,2,3}", (12, 1, 3, 10), Improved(6)),
    row(F3, 4, "{}", "{4}", "{3}", (13, 0, 4, 12), New),
    row(F3, 4, "{4}", "{4}", "{1,2,3}", (14, 1, 3, 13), Improved(12)),
    row(F3, 4, "{4}", "{2,3}", "{1,4}", (18, 1, 3, 16), Improved(12)),
    row(F3, 3, "{1,3}", "{1}", "{3}", (20, 2, 1, 18), Improved(16)),
    row(F3, 4, "{4}", "{4}", "{2,3}", (22, 1, 3, 21), New),
    row(F3, 4, "{2,3}", "{3}", "{1,2,4}", (28, 2, 2, 26), New),
    row(F3, 4, "{2,3}", "{3,4}", "{2,4}", (40, 2, 2, 36), New),
    row(F3, 5, "{4}", "{2,3}", "{1,4}", (50, 1, 4, 48), Improved(20)),
    row(F3, 4, "{1,3}", "{1}", "{3}", (52, 2, 2, 50), New),
    row(F3, 5, "{3}", "{1,4}", "{3}", (54, 1, 4, 53), New),
];

/// Projective codes from the second family.
pub const PROJECTIVE_ROWS: [ReferenceRow; 16] = [
    row(F2, 4, "{2,3}", "{4}", "{1}", (6, 2, 2, 4), BestKnown),
    row(F2, 4, "{4}", "{}", "{1,2,3}", (7, 1, 3, 6), BestKnown),
    row(F2, 5, "{3}", "{1,4}", "{1,2,4,5}", (12, 1, 4, 8), New),
    row(F2, 6, "{5}", "{1,2,3}", "{2,4,6}", (12, 1, 5, 8), Improved(6)),
    row(F2, 5, "{1,4}", "{2,3}", "{2,3,5}", (12, 2, 3, 8), Improved(4)),
    row(F2, 5, "{3}", "{4}", "{1,2,4,5}", (14, 1, 4, 12), BestKnown),
    row(F2, 5, "{3}", "{}", "{1,2,4,5}", (15, 1, 4, 14), BestKnown),
    row(F2, 5, "{1,4}", "{3}", "{2,3,5}", (18, 2, 3, 12), BestKnown),
    row(F2, 7, "{3,4}", "{1,2,5}", "{1,5,7}", (24, 2, 4, 16), Improved(8)),
    row(F2, 6, "{5}", "{1,2}", "{1,2,3,4,6}", (28, 1, 5, 24), New),
    row(F2, 6, "{5}", "{}", "{1,2,3,4,6}", (31, 1, 5, 30), BestKnown),
    row(F2, 6, "{1,2}", "{3,5}", "{3,4,5,6}", (36, 2, 4, 24), Improved(18)),
    row(F2, 7, "{3,4}", "{1,2,5,6}", "{1,2,5,7}", (48, 2, 5, 32), New),
    row(F2, 7, "{3}", "{6,7}", "{1,2,4,5,6,7}", (60, 1, 6, 56), Improved(52)),
    row(F2, 7, "{3,4}", "{1,2,5}", "{1,2,5,6,7}", (72, 2, 5, 48), New),
    row(F2, 7, "{3,4}", "{6,7}", "{1,2,5,6,7}", (84, 2, 5, 56), New),
];

impl ReferenceRow {
    pub fn params(&self) -> CodeParams {
        CodeParams::parse(self.family, self.m, self.a, self.b, self.c).expect("reference subsets are well formed")
    }
}

/// A reference row next to what the library computes for it.
#[derive(Debug, Clone)]
pub struct Reproduction {
    pub row: ReferenceRow,
    pub record: CodeRecord,
}

impl Reproduction {
    pub fn mismatches(&self) -> Vec<String> {
        let (r, c) = (&self.row, &self.record);
        let mut out = Vec::new();
        if (r.n, r.k1, r.k2, r.d_l) != (c.n, c.k1, c.k2, c.d_l) {
            out.push(format!(
                "expected n={} 4^{} 2^{} d_L={}, got n={} 4^{} 2^{} d_L={}",
                r.n, r.k1, r.k2, r.d_l, c.n, c.k1, c.k2, c.d_l
            ));
        }
        match c.verdict {
            Some(v) if r.expected.matches(v) => {}
            v => out.push(format!("expected verdict {:?}, got {:?}", r.expected, v)),
        }
        if r.family == Family::F2 && !c.flags.projective {
            out.push("not projective".into());
        }
        out
    }

    pub fn ok(&self) -> bool {
        self.mismatches().is_empty()
    }
}

pub fn reproduce(rows: &[ReferenceRow], table: &BestKnownTable) -> Result<Vec<Reproduction>, RegistryError> {
    rows.iter()
        .map(|row| {
            let mut record = build_record(&row.params(), SpectrumMode::Auto)?;
            record.classify(table);
            Ok(Reproduction { row: *row, record })
        })
        .collect()
}

/// Rows listed as new or improved in any of the three tables.
pub fn consolidated(all: &[Reproduction]) -> Vec<Reproduction> {
    let mut out: Vec<_> =
        all.iter().filter(|r| matches!(r.row.expected, Expected::New | Expected::Improved(_))).cloned().collect();
    out.sort_by_key(|r| (r.record.n, r.record.d_l, r.record.k1, r.record.k2));
    out
}

/// `Length | Type | d_L | d_L^best | Remark` markdown.
pub fn consolidated_markdown(rows: &[Reproduction]) -> String {
    let mut s = String::from("| Length | Type | d_L | d_L^best | Remark |\n|---|---|---|---|---|\n");
    for r in rows {
        let c = &r.record;
        let best = c.verdict.and_then(|v| v.best()).map_or("-".to_string(), |b| b.to_string());
        let remark = if c.flags.plotkin_optimal {
            "Plotkin-optimal"
        } else if c.flags.projective {
            "projective"
        } else {
            ""
        };
        writeln!(s, "| {} | {} | {} | {} | {} |", c.n, c.type_string(), c.d_l, best, remark).unwrap();
    }
    s
}

pub fn reproduction_markdown(rows: &[Reproduction]) -> String {
    let records: Vec<_> = rows.iter().map(|r| r.record.clone()).collect();
    let notes: Vec<_> = rows.iter().map(|r| r.row.note).collect();
    markdown_table(&records, &notes)
}

/// `(file name, markdown, data rows)`.
pub type Report = (&'static str, String, Vec<Reproduction>);

/// The four tables.
pub fn reference_reports(table: &BestKnownTable) -> Result<Vec<Report>, RegistryError> {
    let f1 = reproduce(&F1_ROWS, table)?;
    let f3 = reproduce(&F3_ROWS, table)?;
    let proj = reproduce(&PROJECTIVE_ROWS, table)?;
    let all: Vec<_> = f1.iter().chain(&f3).chain(&proj).cloned().collect();
    let cons = consolidated(&all);
    Ok(vec![
        ("f1_plotkin_optimal.md", reproduction_markdown(&f1), f1),
        ("f3_codes.md", reproduction_markdown(&f3), f3),
        ("f2_projective.md", reproduction_markdown(&proj), proj),
        ("new_or_improved.md", consolidated_markdown(&cons), cons),
    ])
}
