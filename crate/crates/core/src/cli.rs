//! Command-line front end.
//!
//! The JSON report has a fixed key order:
//!
//! ```text
//! {"n", "weight",
//!  "measures": [{"measure", "subset" | "t", "num", "log2_den" | "den", "float"}],
//!  "characterization"?, "geometry"?, "entropy"?, "concentration"?,
//!  "spectrum"?: [{"index", "numerator", "log2_denominator", "float"}],
//!  "provenance", "version"}
//! ```
//!
//! Exact values are reduced fractions. Set-level measures always have a
//! power-of-two denominator and carry `log2_den`; averages over `C(n,t)`
//! subsets carry `log2_den` when the reduced denominator happens to be a
//! power of two and `den` otherwise. Subsets are 1-based and listed in
//! increasing mask order. Spectrum entries keep the spectrum's common
//! denominator `2^n`.

use std::fmt::Write as _;

use clap::{ArgGroup, Parser, ValueEnum};
use num_traits::Zero;
use serde::Serialize;

use crate::characterizations::CharacterizationReport;
use crate::error::{Error, Result};
use crate::function::{parse_anf, parse_hex, parse_truth_table, BooleanFunction, VariableSubset};
use crate::geometry::{edge_boundary, path_census, CensusMethod};
use crate::influence::{t_bl_influence, Measure};
use crate::rational::{log2_den, to_f64, Rational};
use crate::spectra::{SpectralProfile, SpectrumKind};

/// Version of the JSON report layout.
pub const REPORT_VERSION: u32 = 1;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_DOMAIN: i32 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MeasureArg {
    Ac,
    Pi,
    Bl,
    Gs,
    Fb,
    Mu,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SpectrumArg {
    Walsh,
    Autocorrelation,
}

/// Influence measures and spectral characterisations of a Boolean function.
///
/// Variables are numbered 1..=n and X1 is the most significant bit of a
/// truth-table index.
#[derive(Debug, Clone, Parser)]
#[command(name = "setinf", version)]
#[command(group(ArgGroup::new("input").required(true).args(["tt", "hex", "anf"])))]
pub struct Args {
    /// Truth table over {0,1}, index 0 first.
    #[arg(long)]
    pub tt: Option<String>,
    /// Truth table as big-endian hex (requires --n, n >= 2).
    #[arg(long)]
    pub hex: Option<String>,
    /// Algebraic normal form, e.g. "x1*x2 + x3 + 1" (requires --n).
    #[arg(long)]
    pub anf: Option<String>,
    /// Number of variables.
    #[arg(long)]
    pub n: Option<usize>,
    /// Variable set, comma separated and 1-based; repeatable.
    #[arg(long = "set", value_name = "I,J,...")]
    pub sets: Vec<String>,
    /// Subset size for t-aggregates; repeatable.
    #[arg(long = "t", value_name = "T")]
    pub levels: Vec<usize>,
    /// Measures to report for --set and --t; defaults to all.
    #[arg(long = "measure", value_enum)]
    pub measures: Vec<MeasureArg>,
    /// Bent / resilient / PC(k) characterisation.
    #[arg(long)]
    pub characterize: bool,
    /// Edge boundary, path census and path-expansion t-influence.
    #[arg(long)]
    pub paths: bool,
    /// Fourier entropy and entropy/influence ratios for each --t.
    #[arg(long)]
    pub entropy: bool,
    /// Concentration threshold k_t for each --t at this epsilon (e.g. 3/4).
    #[arg(long)]
    pub epsilon: Option<String>,
    /// Dump a full spectrum.
    #[arg(long, value_enum)]
    pub spectrum: Option<SpectrumArg>,
    /// Emit JSON instead of text.
    #[arg(long)]
    pub json: bool,
    /// Upper bound on n.
    #[arg(long, default_value_t = crate::function::DEFAULT_MAX_VARS)]
    pub max_vars: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Provenance {
    pub input_form: String,
    pub input: String,
    pub tool_version: String,
}

/// Builds the function from exactly one of the input forms.
pub fn parse_function(
    tt: Option<&str>,
    hex: Option<&str>,
    anf: Option<&str>,
    n: Option<usize>,
    cap: usize,
) -> Result<(BooleanFunction, Provenance)> {
    let provenance = |form: &str, input: &str| Provenance {
        input_form: form.to_string(),
        input: input.to_string(),
        tool_version: env!("CARGO_PKG_VERSION").to_string(),
    };
    let need_n = |form: &str| {
        n.ok_or_else(|| Error::Domain(format!("--{form} requires --n")))
            .map_err(|_| Error::VariableCount { n: 0, cap })
    };
    match (tt, hex, anf) {
        (Some(s), None, None) => {
            let f = parse_truth_table(s.trim(), cap)?;
            if let Some(n) = n {
                if n != f.n() {
                    return Err(Error::TableLength {
                        expected: 1 << n.min(63),
                        actual: f.len(),
                    });
                }
            }
            Ok((f, provenance("tt", s)))
        }
        (None, Some(s), None) => Ok((parse_hex(s, need_n("hex")?, cap)?, provenance("hex", s))),
        (None, None, Some(s)) => Ok((parse_anf(s, need_n("anf")?, cap)?, provenance("anf", s))),
        _ => Err(Error::Domain(
            "exactly one of --tt, --hex, --anf is required".into(),
        )),
    }
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct ReportOptions {
    pub sets: Vec<VariableSubset>,
    pub levels: Vec<usize>,
    pub measures: Vec<Measure>,
    pub characterize: bool,
    pub paths: bool,
    pub entropy: bool,
    pub epsilon: Option<Rational>,
    pub spectrum: Option<SpectrumKind>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MeasureEntry {
    pub measure: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub subset: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub t: Option<usize>,
    pub num: i128,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub log2_den: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub den: Option<i128>,
    pub float: f64,
}

impl MeasureEntry {
    fn new(measure: &str, subset: Option<Vec<usize>>, t: Option<usize>, value: &Rational) -> Self {
        let log2 = log2_den(value);
        MeasureEntry {
            measure: measure.to_string(),
            subset,
            t,
            num: *value.numer(),
            log2_den: log2,
            den: if log2.is_none() {
                Some(*value.denom())
            } else {
                None
            },
            float: to_f64(value),
        }
    }

    pub fn exact(&self) -> Rational {
        let den = match (self.log2_den, self.den) {
            (Some(k), _) => 1i128 << k,
            (None, Some(d)) => d,
            (None, None) => 1,
        };
        Rational::new(self.num, den)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExactValue {
    pub num: i128,
    pub den: i128,
    pub float: f64,
}

impl From<&Rational> for ExactValue {
    fn from(value: &Rational) -> Self {
        ExactValue {
            num: *value.numer(),
            den: *value.denom(),
            float: to_f64(value),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CensusEntry {
    pub index: usize,
    pub pairs: u64,
    pub paths: u128,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PathLevel {
    pub t: usize,
    pub influence: ExactValue,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GeometryReport {
    pub edge_boundary: u64,
    pub path_influence: Vec<PathLevel>,
    /// Shifts with at least one crossing pair.
    pub census: Vec<CensusEntry>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FeiEntry {
    pub t: usize,
    /// `None` when the t-influence is zero.
    pub ratio: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EntropyReport {
    pub entropy: f64,
    pub fei: Vec<FeiEntry>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConcentrationEntry {
    pub t: usize,
    pub epsilon: ExactValue,
    pub k: usize,
    pub tail: ExactValue,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpectrumEntry {
    pub index: usize,
    pub numerator: i64,
    pub log2_denominator: u32,
    pub float: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AnalysisReport {
    pub n: usize,
    pub weight: u64,
    pub measures: Vec<MeasureEntry>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub characterization: Option<CharacterizationReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub geometry: Option<GeometryReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub entropy: Option<EntropyReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub concentration: Option<Vec<ConcentrationEntry>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub spectrum: Option<Vec<SpectrumEntry>>,
    pub provenance: Provenance,
    pub version: u32,
}

fn check_levels(n: usize, levels: &[usize]) -> Result<()> {
    match levels.iter().find(|&&t| t == 0 || t > n) {
        Some(&t) => Err(Error::OutOfRange {
            name: "t",
            value: t,
            min: 1,
            max: n,
        }),
        None => Ok(()),
    }
}

/// Average of a set measure over all size-`t` subsets.
fn level_average(profile: &SpectralProfile, measure: Measure, t: usize) -> Result<Rational> {
    match measure {
        Measure::Ac => profile.t_influence(t),
        Measure::Pseudo => profile.t_pseudo_influence(t),
        Measure::Bl => t_bl_influence(profile.function(), t),
        _ => {
            let subsets = VariableSubset::all_of_size(profile.function().n(), t);
            let mut total = Rational::zero();
            for s in &subsets {
                total += profile.measure(measure, s)?.value;
            }
            Ok(total / Rational::from_integer(subsets.len() as i128))
        }
    }
}

pub fn run_report(
    f: &BooleanFunction,
    options: &ReportOptions,
    provenance: Provenance,
) -> Result<AnalysisReport> {
    let n = f.n();
    check_levels(n, &options.levels)?;
    for s in &options.sets {
        s.check_nonempty(n)?;
    }
    let profile = SpectralProfile::new(f);

    let mut sets = options.sets.clone();
    sets.sort();
    sets.dedup();
    let mut levels = options.levels.clone();
    levels.sort();
    levels.dedup();
    let mut measures = options.measures.clone();
    measures.sort();
    measures.dedup();

    let mut entries = Vec::new();
    for s in &sets {
        for &m in &measures {
            let v = profile.measure(m, s)?;
            entries.push(MeasureEntry::new(m.name(), Some(s.indices()), None, &v.value));
        }
    }
    for &t in &levels {
        for &m in &measures {
            let v = level_average(&profile, m, t)?;
            entries.push(MeasureEntry::new(m.name(), None, Some(t), &v));
        }
    }

    let characterization = options.characterize.then(|| profile.characterize());

    let geometry = options.paths.then(|| {
        let census = path_census(f, CensusMethod::Autocorrelation);
        GeometryReport {
            edge_boundary: edge_boundary(f),
            path_influence: levels
                .iter()
                .map(|&t| PathLevel {
                    t,
                    influence: ExactValue::from(&census.t_influence(t)),
                })
                .collect(),
            census: (0..f.len())
                .filter(|&a| census.pairs(a) > 0)
                .map(|a| CensusEntry {
                    index: a,
                    pairs: census.pairs(a),
                    paths: census.paths(a),
                })
                .collect(),
        }
    });

    let entropy = if options.entropy {
        let h = profile.fourier_entropy();
        let mut fei = Vec::new();
        for &t in &levels {
            let t_inf = profile.t_influence(t)?;
            let ratio = (!t_inf.is_zero()).then(|| h / n as f64 / to_f64(&t_inf));
            fei.push(FeiEntry { t, ratio });
        }
        Some(EntropyReport { entropy: h, fei })
    } else {
        None
    };

    let concentration = match options.epsilon {
        Some(eps) => {
            let mut out = Vec::new();
            for &t in &levels {
                let k = crate::characterizations::concentration_threshold(f, t, eps)?;
                let tail = profile.distribution().tail(k)?;
                out.push(ConcentrationEntry {
                    t,
                    epsilon: ExactValue::from(&eps),
                    k,
                    tail: ExactValue::from(&tail),
                });
            }
            Some(out)
        }
        None => None,
    };

    let spectrum = options.spectrum.map(|kind| {
        let spec = match kind {
            SpectrumKind::Autocorrelation => profile.autocorrelation(),
            _ => profile.walsh(),
        };
        (0..spec.len())
            .map(|a| SpectrumEntry {
                index: a,
                numerator: spec.numerator(a),
                log2_denominator: spec.log2_den(),
                float: to_f64(&spec.value(a)),
            })
            .collect()
    });

    Ok(AnalysisReport {
        n,
        weight: f.weight(),
        measures: entries,
        characterization,
        geometry,
        entropy,
        concentration,
        spectrum,
        provenance,
        version: REPORT_VERSION,
    })
}

pub fn emit_json(report: &AnalysisReport) -> String {
    serde_json::to_string(report).expect("report serialises")
}

fn fmt_exact(value: &Rational) -> String {
    format!("{value} ({})", to_f64(value))
}

pub fn render_text(report: &AnalysisReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "n = {}", report.n);
    let _ = writeln!(out, "weight = {}", report.weight);
    for e in &report.measures {
        let scope = match (&e.subset, e.t) {
            (Some(s), _) => {
                let parts: Vec<String> = s.iter().map(|j| j.to_string()).collect();
                format!("{{{}}}", parts.join(","))
            }
            (None, Some(t)) => format!("t={t}"),
            _ => String::new(),
        };
        let _ = writeln!(out, "{} {} = {}", e.measure, scope, fmt_exact(&e.exact()));
    }
    if let Some(c) = &report.characterization {
        let _ = writeln!(out, "bent = {}", c.is_bent);
        let res = c
            .resiliency_order
            .map_or("none".to_string(), |m| m.to_string());
        let _ = writeln!(out, "resiliency order = {res}");
        let _ = writeln!(out, "pc order = {}", c.pc_order);
        let _ = writeln!(out, "fourier entropy = {}", c.entropy);
        let _ = writeln!(out, "notes = {}", c.notes.join(", "));
    }
    if let Some(g) = &report.geometry {
        let _ = writeln!(out, "edge boundary = {}", g.edge_boundary);
        for p in &g.path_influence {
            let v = Rational::new(p.influence.num, p.influence.den);
            let _ = writeln!(out, "path t-influence t={} = {}", p.t, fmt_exact(&v));
        }
        let _ = writeln!(out, "crossing shifts = {}", g.census.len());
    }
    if let Some(e) = &report.entropy {
        let _ = writeln!(out, "entropy = {}", e.entropy);
        for r in &e.fei {
            match r.ratio {
                Some(v) => {
                    let _ = writeln!(out, "rho t={} = {v}", r.t);
                }
                None => {
                    let _ = writeln!(out, "rho t={} = undefined", r.t);
                }
            }
        }
    }
    if let Some(cs) = &report.concentration {
        for c in cs {
            let tail = Rational::new(c.tail.num, c.tail.den);
            let _ = writeln!(out, "k_t t={} = {} (tail {})", c.t, c.k, fmt_exact(&tail));
        }
    }
    if let Some(spec) = &report.spectrum {
        for s in spec {
            let _ = writeln!(
                out,
                "[{}] {}/2^{} ({})",
                s.index, s.numerator, s.log2_denominator, s.float
            );
        }
    }
    out
}

fn parse_set(n: usize, text: &str) -> Result<VariableSubset> {
    let indices = text
        .split(',')
        .map(|p| {
            p.trim()
                .parse::<usize>()
                .map_err(|_| Error::Domain(format!("bad variable index {p:?}")))
        })
        .collect::<Result<Vec<_>>>()
        .map_err(|_| Error::VariableIndex { index: 0, n })?;
    let subset = VariableSubset::from_indices(n, &indices)?;
    if subset.is_empty() {
        return Err(Error::EmptySubset);
    }
    Ok(subset)
}

fn parse_rational(text: &str) -> Option<Rational> {
    let text = text.trim();
    match text.split_once('/') {
        Some((a, b)) => {
            let num: i128 = a.trim().parse().ok()?;
            let den: i128 = b.trim().parse().ok()?;
            (den != 0).then(|| Rational::new(num, den))
        }
        None => {
            if let Ok(v) = text.parse::<i128>() {
                return Some(Rational::from_integer(v));
            }
            // decimal such as 0.75
            let (int, frac) = text.split_once('.')?;
            let digits = frac.len() as u32;
            let scale = 10i128.checked_pow(digits)?;
            let whole: i128 = if int.is_empty() { 0 } else { int.parse().ok()? };
            let part: i128 = frac.parse().ok()?;
            Some(Rational::new(whole * scale + part, scale))
        }
    }
}

/// Usage problems map to exit code 2, mathematical domain errors to 3.
pub fn exit_code(error: &Error) -> i32 {
    match error {
        Error::Domain(_) => EXIT_DOMAIN,
        _ => EXIT_USAGE,
    }
}

/// Runs the CLI on parsed arguments, returning the report text.
pub fn execute(args: &Args) -> Result<String> {
    let (f, provenance) = parse_function(
        args.tt.as_deref(),
        args.hex.as_deref(),
        args.anf.as_deref(),
        args.n,
        args.max_vars,
    )?;
    let n = f.n();
    let sets = args
        .sets
        .iter()
        .map(|s| parse_set(n, s))
        .collect::<Result<Vec<_>>>()?;
    let measures = if args.measures.is_empty() || args.measures.contains(&MeasureArg::All) {
        Measure::ALL.to_vec()
    } else {
        args.measures
            .iter()
            .map(|m| match m {
                MeasureArg::Ac => Measure::Ac,
                MeasureArg::Pi => Measure::Pseudo,
                MeasureArg::Bl => Measure::Bl,
                MeasureArg::Gs => Measure::Gs,
                MeasureArg::Fb => Measure::Fb,
                MeasureArg::Mu => Measure::Mu,
                MeasureArg::All => unreachable!(),
            })
            .collect()
    };
    let epsilon = match &args.epsilon {
        Some(text) => Some(parse_rational(text).ok_or(Error::OutOfRange {
            name: "epsilon",
            value: 0,
            min: 0,
            max: 1,
        })?),
        None => None,
    };
    let options = ReportOptions {
        sets,
        levels: args.levels.clone(),
        measures,
        characterize: args.characterize,
        paths: args.paths,
        entropy: args.entropy,
        epsilon,
        spectrum: args.spectrum.map(|s| match s {
            SpectrumArg::Walsh => SpectrumKind::Walsh,
            SpectrumArg::Autocorrelation => SpectrumKind::Autocorrelation,
        }),
    };
    let report = run_report(&f, &options, provenance)?;
    Ok(if args.json {
        emit_json(&report) + "\n"
    } else {
        render_text(&report)
    })
}
