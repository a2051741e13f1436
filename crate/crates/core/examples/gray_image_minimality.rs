//! Gray images: linearity, minimality and the Griesmer defect.

use z4scx::analysis::{analyze, gray_image, minimality_case};
use z4scx::codegen::{build_code, CodeParams, Family};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let cases = [
        (Family::F1, 3, "{3}", "{3}", "{1,2}"),
        (Family::F3, 4, "{1}", "{1}", "{2}"),
        (Family::F3, 4, "{1}", "{2}", "{3}"),
        (Family::F2, 4, "{1,4}", "{2}", "{3}"),
        (Family::F1, 4, "{1,2}", "{1,2}", "{1,2,3,4}"),
    ];
    for (family, m, a, b, c) in cases {
        let params = CodeParams::parse(family, m, a, b, c)?;
        let (set, code) = build_code(params)?;
        let gray = gray_image(&code);
        let report = analyze(&set, &code);
        println!("{params}");
        println!(
            "  Gray image: length {}, {} words, d = {:?}, linear = {}, dimension = {:?}",
            gray.n,
            gray.size(),
            gray.min_distance(),
            gray.linear,
            gray.dimension
        );
        println!("  Hamming spectrum: {:?}", gray.spectrum.iter().collect::<Vec<_>>());
        println!(
            "  minimal = {:?}, AB = {:?}, Griesmer defect = {:?}, hypothesis = {:?}",
            report.minimal,
            report.ab,
            report.griesmer_defect,
            minimality_case(&params)
        );
    }
    Ok(())
}
