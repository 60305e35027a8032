//! paths, genfunc, dyck, qcatalan: exact counting output.

use crate::args::{decimal_string, Format, Rational};
use crate::cmd_spectra::poly_map;
use crate::emit::{self, fmt_f64, Provenance};
use crate::profile_spec::ProfileSpec;
use crate::CmdResult;
use num_rational::BigRational;
use num_traits::Zero;
use supertree::{genfunc, numeric, pathcount, qdyck, BranchingProfile};

#[derive(clap::Args)]
pub struct PathsArgs {
    /// Root weight p0
    #[arg(long, default_value = "1")]
    p0: Rational,
    /// Branching slope a
    #[arg(long, default_value = "1", allow_hyphen_values = true)]
    a: Rational,
    /// Number of levels
    #[arg(long = "K", required_unless_present = "profile", conflicts_with = "profile")]
    levels: Option<usize>,
    /// Step count; rows are emitted for every N' <= N
    #[arg(long = "N")]
    steps: usize,
    /// Read the branching profile from a JSON record instead of --p0/--a/--K
    #[arg(long, conflicts_with_all = ["p0", "a"])]
    profile: Option<String>,
}

pub fn run_paths(args: &PathsArgs, out: &str, format: Option<Format>) -> CmdResult {
    let (spec, profile) = match &args.profile {
        Some(path) => ProfileSpec::load(path)?,
        None => {
            let levels = args.levels.expect("clap requires --K without --profile");
            let profile =
                supertree::auto_profile_rational(args.p0.0.clone(), args.a.0.clone(), levels)
                    .map_err(|e| e.to_string())?;
            (ProfileSpec::describe(&profile, &args.p0.0, &args.a.0), profile)
        }
    };
    let weights = profile.weights();
    let levels = profile.levels();

    let mut z = vec![BigRational::zero(); levels];
    z[0] = BigRational::from_integer(1.into());
    let mut rows: Vec<(usize, usize, String)> = Vec::new();
    for n in 0..=args.steps {
        if n > 0 {
            z = pathcount::step(weights, &z);
        }
        for (k, count) in z.iter().enumerate() {
            rows.push((n, k, decimal_string(count)));
        }
    }
    let total: BigRational = z.iter().sum();
    let summary = serde_json::json!({
        "N": args.steps,
        "total": decimal_string(&total),
        "entropy": if total.is_zero() { f64::NEG_INFINITY } else { numeric::ln_ratio_abs(&total) },
        "mean_displacement": pathcount::mean_displacement(&profile, args.steps)
            .map_err(|e| e.to_string())?,
    });

    let prov = Provenance::new(None);
    let content = match format.unwrap_or(Format::Csv) {
        Format::Csv => {
            let mut doc = emit::csv_table(
                &prov,
                &["N", "k", "count"],
                rows.iter().map(|(n, k, c)| format!("{n},{k},{c}")),
            );
            doc.push_str(&format!("# summary: {summary}\n"));
            doc
        }
        Format::Json => emit::json_document(&serde_json::json!({
            "meta": prov.json_meta(),
            "profile": spec.to_json(),
            "rows": rows
                .iter()
                .map(|(n, k, c)| serde_json::json!([n, k, c]))
                .collect::<Vec<_>>(),
            "summary": summary,
        })),
    };
    emit::write_output(out, &content).map_err(|e| e.to_string())
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum GfMode {
    /// Root-return series of the growing tree
    Grow,
    /// Root-return series of the descending tree on K levels
    Desc,
    /// Root-to-deepest-level series of the growing tree
    #[value(name = "to-end")]
    ToEnd,
}

#[derive(clap::Args)]
pub struct GenfuncArgs {
    #[arg(long, value_enum)]
    mode: GfMode,
    /// Number of levels (growing) or P (descending)
    #[arg(long = "K")]
    levels: usize,
    /// Evaluation point, exact ("1/10" or "0.1"); omit to skip evaluation
    #[arg(long)]
    s: Option<Rational>,
    /// Emit Maclaurin coefficients up to this order
    #[arg(long, default_value_t = 16)]
    series: usize,
    /// Root weight for the growing modes
    #[arg(long, default_value = "1")]
    p0: Rational,
    /// Branching slope for the growing modes
    #[arg(long, default_value = "1", allow_hyphen_values = true)]
    a: Rational,
}

pub fn run_genfunc(args: &GenfuncArgs, out: &str, format: Option<Format>) -> CmdResult {
    let profile = match args.mode {
        GfMode::Grow | GfMode::ToEnd => {
            supertree::auto_profile_rational(args.p0.0.clone(), args.a.0.clone(), args.levels)
                .map_err(|e| e.to_string())?
        }
        GfMode::Desc => BranchingProfile::descending(args.levels).map_err(|e| e.to_string())?,
    };
    let gf = match args.mode {
        GfMode::Grow => genfunc::root_return_gf(&profile),
        GfMode::Desc => genfunc::descending_cf_gf(args.levels),
        GfMode::ToEnd => genfunc::to_end_gf(&profile),
    };
    let series = gf.series(args.series + 1);
    let value = match &args.s {
        Some(s) => {
            let v = gf.eval(&s.0).map_err(|e| e.to_string())?;
            Some((decimal_string(&v), numeric::ratio_to_f64(&v)))
        }
        None => None,
    };
    let pole = genfunc::convergence_radius(&profile).map_err(|e| e.to_string())?;

    let mode_name = match args.mode {
        GfMode::Grow => "grow",
        GfMode::Desc => "desc",
        GfMode::ToEnd => "to-end",
    };
    let prov = Provenance::new(None);
    let content = match format.unwrap_or(Format::Json) {
        Format::Json => emit::json_document(&serde_json::json!({
            "meta": prov.json_meta(),
            "mode": mode_name,
            "K": args.levels,
            "value": value.as_ref().map(|(exact, float)| serde_json::json!({
                "exact": exact,
                "float": float,
            })),
            "series": series.iter().map(decimal_string).collect::<Vec<_>>(),
            "pole_estimate": pole,
        })),
        Format::Csv => {
            let mut prefix = prov.csv_comments();
            if let Some((exact, float)) = &value {
                prefix.push_str(&format!("# value: {exact} ({float})\n"));
            }
            prefix.push_str(&format!("# pole_estimate: {}\n", fmt_f64(pole)));
            prefix.push_str("n,coefficient\n");
            for (n, c) in series.iter().enumerate() {
                prefix.push_str(&format!("{n},{}\n", decimal_string(c)));
            }
            prefix
        }
    };
    emit::write_output(out, &content).map_err(|e| e.to_string())
}

#[derive(clap::Args)]
pub struct DyckArgs {
    /// Path length
    #[arg(long = "N")]
    steps: usize,
    /// Height confinement; defaults to unconfined (N/2 + 2 levels)
    #[arg(long = "K")]
    levels: Option<usize>,
    /// Evaluate the area polynomial at this exact fugacity
    #[arg(long)]
    q: Option<Rational>,
    /// Emit the full area polynomial (the default when --q is absent)
    #[arg(long, conflicts_with = "q")]
    symbolic: bool,
}

pub fn run_dyck(args: &DyckArgs, out: &str, format: Option<Format>) -> CmdResult {
    let levels = args.levels.unwrap_or(args.steps / 2 + 2);
    let poly = qdyck::dyck_polynomials(args.steps, levels)
        .into_iter()
        .next()
        .ok_or("confinement needs at least one level")?;
    let prov = Provenance::new(None);

    let symbolic = args.symbolic || args.q.is_none();
    let content = if !symbolic {
        let q = args.q.as_ref().expect("checked above");
        let rational = poly.map(|c| BigRational::from_integer(c.clone()));
        let v = rational.eval(&q.0);
        match format.unwrap_or(Format::Json) {
            Format::Json => emit::json_document(&serde_json::json!({
                "meta": prov.json_meta(),
                "N": args.steps,
                "K": levels,
                "q": decimal_string(&q.0),
                "value": { "exact": decimal_string(&v), "float": numeric::ratio_to_f64(&v) },
            })),
            Format::Csv => emit::csv_table(
                &prov,
                &["value_exact", "value_float"],
                std::iter::once(format!(
                    "{},{}",
                    decimal_string(&v),
                    fmt_f64(numeric::ratio_to_f64(&v))
                )),
            ),
        }
    } else {
        match format.unwrap_or(Format::Json) {
            Format::Json => emit::json_document(&serde_json::json!({
                "meta": prov.json_meta(),
                "N": args.steps,
                "K": levels,
                "polynomial": poly_map(poly.coeffs()),
            })),
            Format::Csv => emit::csv_table(
                &prov,
                &["exponent", "coefficient"],
                poly.coeffs()
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(e, c)| format!("{e},{c}")),
            ),
        }
    };
    emit::write_output(out, &content).map_err(|e| e.to_string())
}

#[derive(clap::Args)]
pub struct QcatalanArgs {
    /// Index of the q-Catalan polynomial C_n(q)
    #[arg(long)]
    n: usize,
}

pub fn run_qcatalan(args: &QcatalanArgs, out: &str, format: Option<Format>) -> CmdResult {
    let poly = qdyck::carlitz_riordan(args.n).pop().expect("n+1 polynomials");
    let prov = Provenance::new(None);
    let content = match format.unwrap_or(Format::Json) {
        Format::Json => emit::json_document(&serde_json::json!({
            "meta": prov.json_meta(),
            "n": args.n,
            "coefficients": poly_map(poly.coeffs()),
        })),
        Format::Csv => emit::csv_table(
            &prov,
            &["exponent", "coefficient"],
            poly.coeffs()
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(e, c)| format!("{e},{c}")),
        ),
    };
    emit::write_output(out, &content).map_err(|e| e.to_string())
}
