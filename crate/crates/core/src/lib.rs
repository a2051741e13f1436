pub mod analysis;
pub mod cli;
pub mod codegen;
pub mod gf2;
pub mod reference;
pub mod registry;
pub mod simplicial;
pub mod spectra;
pub mod sweep;
pub mod z4;
