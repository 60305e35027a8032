//! spectrum, hermite, and rmt: densities against the semicircle, and exact
//! characteristic-polynomial coefficients.

use crate::args::{Format, Rational};
use crate::emit::{self, fmt_f64, Provenance};
use crate::profile_spec::ProfileSpec;
use crate::CmdResult;
use num_bigint::BigInt;
use supertree::spectral;

#[derive(Copy, Clone, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Baseline {
    Semicircle,
    None,
}

#[derive(clap::Args)]
pub struct SpectrumArgs {
    /// Root weight p0 (integer, decimal, or p/q)
    #[arg(long, default_value = "1")]
    p0: Rational,
    /// Branching slope a; negative slopes fall back to the linear degree
    /// rule when the growing convention turns non-positive
    #[arg(long, default_value = "1", allow_hyphen_values = true)]
    a: Rational,
    /// Number of levels
    #[arg(long = "K", default_value_t = 400, conflicts_with = "profile")]
    levels: usize,
    /// Histogram bins
    #[arg(long, default_value_t = 80)]
    bins: usize,
    #[arg(long, value_enum, default_value_t = Baseline::Semicircle)]
    baseline: Baseline,
    /// Read the branching profile from a JSON record instead of --p0/--a/--K
    #[arg(long, conflicts_with_all = ["p0", "a"])]
    profile: Option<String>,
}

pub fn run_spectrum(args: &SpectrumArgs, out: &str, format: Option<Format>) -> CmdResult {
    let (spec, profile) = match &args.profile {
        Some(path) => ProfileSpec::load(path)?,
        None => {
            let profile =
                supertree::auto_profile_rational(args.p0.0.clone(), args.a.0.clone(), args.levels)
                    .map_err(|e| e.to_string())?;
            (ProfileSpec::describe(&profile, &args.p0.0, &args.a.0), profile)
        }
    };
    let eigenvalues = spectral::transfer_eigenvalues(&profile).map_err(|e| e.to_string())?;
    let lo = eigenvalues.iter().cloned().fold(f64::INFINITY, f64::min);
    let hi = eigenvalues.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    let bins =
        spectral::histogram(&eigenvalues, lo, hi, args.bins).map_err(|e| e.to_string())?;
    let k = profile.levels();
    let baseline = |mid: f64| spectral::semicircle_pdf(mid, k);

    let prov = Provenance::new(None);
    let content = match format.unwrap_or(Format::Csv) {
        Format::Csv => {
            let with_baseline = args.baseline == Baseline::Semicircle;
            let header: &[&str] = if with_baseline {
                &["bin_left", "bin_right", "density", "baseline"]
            } else {
                &["bin_left", "bin_right", "density"]
            };
            emit::csv_table(
                &prov,
                header,
                bins.iter().map(|b| {
                    let mut row = format!(
                        "{},{},{}",
                        fmt_f64(b.left),
                        fmt_f64(b.right),
                        fmt_f64(b.density)
                    );
                    if with_baseline {
                        row.push(',');
                        row.push_str(&fmt_f64(baseline(0.5 * (b.left + b.right))));
                    }
                    row
                }),
            )
        }
        Format::Json => {
            let rows: Vec<serde_json::Value> = bins
                .iter()
                .map(|b| {
                    let mut v = serde_json::json!({
                        "bin_left": b.left,
                        "bin_right": b.right,
                        "density": b.density,
                    });
                    if args.baseline == Baseline::Semicircle {
                        v["baseline"] = serde_json::json!(baseline(0.5 * (b.left + b.right)));
                    }
                    v
                })
                .collect();
            emit::json_document(&serde_json::json!({
                "meta": prov.json_meta(),
                "profile": spec.to_json(),
                "bins": rows,
            }))
        }
    };
    emit::write_output(out, &content).map_err(|e| e.to_string())
}

#[derive(clap::Args)]
pub struct HermiteArgs {
    /// Degree of the monic Hermite polynomial
    #[arg(long = "K")]
    degree: usize,
}

pub fn run_hermite(args: &HermiteArgs, out: &str, format: Option<Format>) -> CmdResult {
    let poly = spectral::monic_hermite(args.degree);
    let prov = Provenance::new(None);
    let content = match format.unwrap_or(Format::Json) {
        Format::Json => {
            // coefficients as strings: they outgrow every native JSON width
            let mut map = serde_json::Map::new();
            for (e, c) in poly.coeffs().iter().enumerate() {
                if !num_traits::Zero::is_zero(c) {
                    map.insert(e.to_string(), serde_json::json!(c.to_string()));
                }
            }
            emit::json_document(&serde_json::json!({
                "meta": prov.json_meta(),
                "degree": args.degree,
                "coefficients": serde_json::Value::Object(map),
            }))
        }
        Format::Csv => emit::csv_table(
            &prov,
            &["exponent", "coefficient"],
            poly.coeffs()
                .iter()
                .enumerate()
                .filter(|(_, c)| !num_traits::Zero::is_zero(*c))
                .map(|(e, c)| format!("{e},{c}")),
        ),
    };
    emit::write_output(out, &content).map_err(|e| e.to_string())
}

#[derive(clap::Args)]
pub struct RmtArgs {
    /// Matrix size
    #[arg(long = "K", default_value_t = 200)]
    size: usize,
    /// Number of sampled matrices pooled into the density
    #[arg(long, default_value_t = 200)]
    samples: usize,
    /// RNG seed (defaults to SUPERTREE_SEED or a fixed constant)
    #[arg(long, default_value_t = crate::default_seed())]
    seed: u64,
    /// Diagonal noise scale
    #[arg(long, default_value_t = 1.0)]
    sigma: f64,
    #[arg(long, default_value_t = 80)]
    bins: usize,
}

pub fn run_rmt(args: &RmtArgs, out: &str, format: Option<Format>) -> CmdResult {
    let pooled = supertree::rmt::pooled_eigenvalues(args.size, args.sigma, args.samples, args.seed)
        .map_err(|e| e.to_string())?;
    let lo = pooled.first().copied().ok_or("empty ensemble")?;
    let hi = pooled.last().copied().ok_or("empty ensemble")?;
    let bins = spectral::histogram(&pooled, lo, hi, args.bins).map_err(|e| e.to_string())?;
    // the mean-square profile is the unit-slope growing tree, so the pooled
    // density is compared against its semicircle, stretched by sigma
    let baseline =
        |mid: f64| spectral::semicircle_pdf(mid / args.sigma, args.size) / args.sigma;

    let prov = Provenance::new(Some(args.seed));
    let content = match format.unwrap_or(Format::Csv) {
        Format::Csv => emit::csv_table(
            &prov,
            &["bin_left", "bin_right", "density", "semicircle_baseline"],
            bins.iter().map(|b| {
                format!(
                    "{},{},{},{}",
                    fmt_f64(b.left),
                    fmt_f64(b.right),
                    fmt_f64(b.density),
                    fmt_f64(baseline(0.5 * (b.left + b.right)))
                )
            }),
        ),
        Format::Json => emit::json_document(&serde_json::json!({
            "meta": prov.json_meta(),
            "K": args.size,
            "samples": args.samples,
            "sigma": args.sigma,
            "bins": bins
                .iter()
                .map(|b| serde_json::json!({
                    "bin_left": b.left,
                    "bin_right": b.right,
                    "density": b.density,
                    "semicircle_baseline": baseline(0.5 * (b.left + b.right)),
                }))
                .collect::<Vec<_>>(),
        })),
    };
    emit::write_output(out, &content).map_err(|e| e.to_string())
}

/// Exponent -> coefficient map; plain numbers while they fit, decimal
/// strings beyond.
pub fn poly_map(coeffs: &[BigInt]) -> serde_json::Value {
    let all_fit = coeffs.iter().all(|c| i64::try_from(c).is_ok());
    let mut map = serde_json::Map::new();
    for (e, c) in coeffs.iter().enumerate() {
        if num_traits::Zero::is_zero(c) {
            continue;
        }
        let value = if all_fit {
            serde_json::json!(i64::try_from(c).unwrap())
        } else {
            serde_json::json!(c.to_string())
        };
        map.insert(e.to_string(), value);
    }
    serde_json::Value::Object(map)
}
