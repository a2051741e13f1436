//! Exhaustive closed-form versus enumeration sweep for one family.
//!
//! cargo run --release --example verify_sweep -- f2 5

use std::collections::BTreeMap;

use z4scx::codegen::Family;
use z4scx::sweep::{closed_form_evaluator, verify_family};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let family: Family = args.first().map_or(Ok(Family::F2), |s| s.parse())?;
    let m_max: u32 = args.get(1).map_or(Ok(4), |s| s.parse())?;
    let summary = verify_family(family, m_max, closed_form_evaluator())?;
    println!("{} parameter sets checked, {} mismatches", summary.checked, summary.mismatches.len());
    let mut by_size: BTreeMap<u32, usize> = BTreeMap::new();
    for m in &summary.mismatches {
        *by_size.entry(m.params.a.len()).or_default() += 1;
    }
    println!("mismatches by |A|: {by_size:?}");
    if let Some(first) = summary.mismatches.first() {
        println!("first: {first}");
    }
    println!("nominal types excused by folding: {}", summary.flagged.len());
    Ok(())
}
