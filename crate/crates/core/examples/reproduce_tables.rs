//! Rebuild the published parameter tables and check every row.

use z4scx::reference::reference_reports;
use z4scx::registry::BestKnownTable;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let table = BestKnownTable::bundled();
    for (name, markdown, rows) in reference_reports(&table)? {
        let bad: Vec<_> = rows.iter().filter(|r| !r.ok()).collect();
        println!("## {name}: {} rows, {} mismatches\n", rows.len(), bad.len());
        println!("{markdown}");
        for r in bad {
            println!("mismatch {:?}: {:?}", r.row, r.mismatches());
        }
    }
    Ok(())
}
