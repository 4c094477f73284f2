use std::path::PathBuf;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use hclif::besselexp::BesselKind;
use hclif::ck::CkClass;
use hclif::rational::{self, Rational};

#[derive(Debug, Parser)]
#[command(name = "hclif", version, about = "Exact special solutions of the Hermitian submonogenic system")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Hermitian Clifford–Hermite polynomial by Rodrigues formula and closed form.
    Hermite(HermiteArgs),
    /// Cauchy–Kowalevski extension table with its residual report.
    Ck(CkArgs),
    /// Axial solution of the Vekua systems from initial ν-series.
    Vekua(VekuaArgs),
    /// Hermitian generalized powers.
    Powers(PowersArgs),
    /// Bessel functions (numeric) or exponential-type solution series.
    Bessel(BesselArgs),
    /// Residuals of a serialized polynomial function.
    Verify(VerifyArgs),
}

fn parse_rational(s: &str) -> Result<Rational, String> {
    rational::parse(s).map_err(|e| e.to_string())
}

fn parse_dimension(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("n must be at least 1".into()),
        Ok(n) => Ok(n),
        Err(e) => Err(e.to_string()),
    }
}

fn parse_finite(s: &str) -> Result<f64, String> {
    match s.parse::<f64>() {
        Ok(t) if t.is_finite() => Ok(t),
        Ok(_) => Err("value must be finite".into()),
        Err(e) => Err(e.to_string()),
    }
}

#[derive(Debug, Args)]
pub struct HermiteArgs {
    /// Type 1–4.
    #[arg(long = "type", value_name = "TYPE", value_parser = clap::value_parser!(u8).range(1..=4))]
    pub type_id: u8,
    #[arg(long)]
    pub p: u32,
    #[arg(long, value_parser = parse_dimension)]
    pub n: usize,
}

#[derive(Debug, Args)]
pub struct CkArgs {
    /// I, II, III or double.
    #[arg(long, default_value = "I")]
    pub class: CkClass,
    /// Truncation order.
    #[arg(long = "K", value_name = "K", default_value_t = 4)]
    pub order: usize,
    /// Shift of classes II and III.
    #[arg(long)]
    pub s: Option<u32>,
    /// Dimension for the built-in Gaussian data (used without --input).
    #[arg(long, value_parser = parse_dimension)]
    pub n: Option<usize>,
    /// JSON file with the initial data, `-` for standard input.
    #[arg(long)]
    pub input: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct VekuaArgs {
    /// JSON file with kind, n and the initial ν-series, `-` for standard input.
    #[arg(long)]
    pub input: PathBuf,
    /// Shift of the z₀ˢ and z̄₀ˢ kinds.
    #[arg(long)]
    pub s: Option<u32>,
    #[arg(long = "K", value_name = "K", default_value_t = 4)]
    pub order: usize,
    /// ν-truncation.
    #[arg(long = "M", value_name = "M", default_value = "20", allow_hyphen_values = true, value_parser = parse_rational)]
    pub m: Rational,
    /// Also print the solution as a polynomial function.
    #[arg(long)]
    pub expand: bool,
}

#[derive(Debug, Args)]
pub struct PowersArgs {
    #[arg(long, allow_hyphen_values = true, value_parser = parse_rational)]
    pub s: Rational,
    #[arg(long, default_value = "1", value_parser = parse_dimension)]
    pub n: usize,
    #[arg(long, default_value = "0", allow_hyphen_values = true, value_parser = parse_rational)]
    pub alpha1: Rational,
    #[arg(long, default_value = "0", allow_hyphen_values = true, value_parser = parse_rational)]
    pub alpha2: Rational,
    #[arg(long, default_value = "0", allow_hyphen_values = true, value_parser = parse_rational)]
    pub delta1: Rational,
    #[arg(long, default_value = "0", allow_hyphen_values = true, value_parser = parse_rational)]
    pub delta2: Rational,
    #[arg(long = "K", value_name = "K", default_value_t = 4)]
    pub order: usize,
    #[arg(long)]
    pub expand: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("mode").required(true).args(["t", "lambda"])))]
pub struct BesselArgs {
    /// Order of J or I (numeric mode).
    #[arg(long)]
    pub alpha: Option<u32>,
    #[arg(long)]
    pub kind: Option<BesselKind>,
    /// Evaluation points, comma separated (numeric mode).
    #[arg(long, value_delimiter = ',', num_args = 1.., allow_negative_numbers = true, value_parser = parse_finite,
          requires_all = ["alpha", "kind"], conflicts_with_all = ["lambda", "mu", "n", "alpha1", "alpha2", "m"])]
    pub t: Vec<f64>,
    #[arg(long, allow_hyphen_values = true, value_parser = parse_rational, requires_all = ["mu", "n"], conflicts_with_all = ["alpha", "kind"])]
    pub lambda: Option<Rational>,
    #[arg(long, allow_hyphen_values = true, value_parser = parse_rational, requires = "lambda")]
    pub mu: Option<Rational>,
    #[arg(long, value_parser = parse_dimension, requires = "lambda")]
    pub n: Option<usize>,
    #[arg(long, allow_hyphen_values = true, value_parser = parse_rational, requires = "lambda")]
    pub alpha1: Option<Rational>,
    #[arg(long, allow_hyphen_values = true, value_parser = parse_rational, requires = "lambda")]
    pub alpha2: Option<Rational>,
    #[arg(long = "M", value_name = "M", requires = "lambda")]
    pub m: Option<u32>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// JSON polynomial function over C_{2n+2}, `-` for standard input.
    #[arg(long)]
    pub input: PathBuf,
}
