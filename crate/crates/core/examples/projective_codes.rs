//! Projectivity by the column criterion, cross-checked with the dual code.

use z4scx::analysis::{dual_distance_oracle, is_projective_columns};
use z4scx::codegen::{build_code, CodeParams, Family};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let cases = [
        (Family::F2, 4, "{2,3}", "{4}", "{1}"),
        (Family::F2, 4, "{4}", "{}", "{1,2,3}"),
        (Family::F1, 2, "{1}", "{}", "{2}"),
        (Family::F3, 3, "{}", "{1}", "{2}"),
    ];
    for (family, m, a, b, c) in cases {
        let params = CodeParams::parse(family, m, a, b, c)?;
        let (set, code) = build_code(params)?;
        let dual = dual_distance_oracle(&code)?;
        println!("{params}: n = {}, column criterion = {}, dual d_L = {:?}", code.n, is_projective_columns(&set), dual);
    }
    Ok(())
}
