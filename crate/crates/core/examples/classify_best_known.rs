//! Search a family and compare each code with the bundled best-known table.
//!
//! cargo run --release --example classify_best_known -- f3 4

use z4scx::codegen::Family;
use z4scx::registry::{export_report, search, BestKnownTable, ReportFormat, SearchOptions, Verdict};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let family: Family = args.first().map_or(Ok(Family::F3), |s| s.parse())?;
    let m_max: u32 = args.get(1).map_or(Ok(4), |s| s.parse())?;
    let table = BestKnownTable::bundled();
    let records = search(family, 1..=m_max, &SearchOptions::default(), Some(&table))?;
    let interesting: Vec<_> = records
        .into_iter()
        .filter(|r| matches!(r.verdict, Some(Verdict::Improved { .. } | Verdict::BestKnown { .. })))
        .collect();
    print!("{}", export_report(&interesting, ReportFormat::Markdown)?);
    Ok(())
}
