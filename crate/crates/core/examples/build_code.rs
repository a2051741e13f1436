//! Build a code from `(A, B, C)` and print its generator and parameters.
//!
//! cargo run --example build_code -- f2 6 '{5}' '{1,2,3,4}' '{2,3,4,6}'

use z4scx::codegen::{build_code, CodeParams, Family};
use z4scx::spectra::lee_spectrum_bruteforce;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let (family, m, a, b, c) = match args.as_slice() {
        [f, m, a, b, c] => (f.parse::<Family>()?, m.parse()?, a.as_str(), b.as_str(), c.as_str()),
        _ => (Family::F1, 4, "{2,3}", "{3,4}", "{2,3}"),
    };
    let params = CodeParams::parse(family, m, a, b, c)?;
    let (set, code) = build_code(params)?;
    println!("{params}");
    println!("defining set: {} columns", set.len());
    print!("{}", code.generator_grid());
    let spectrum = lee_spectrum_bruteforce(&code);
    println!("|C| = {}, type 4^{} 2^{}, d_L = {}", code.size(), code.k1, code.k2, spectrum.min_distance()?);
    Ok(())
}
