use std::collections::BTreeMap;

use serde::Serialize;

use super::envelope::{corners, envelopes, Envelopes};
use crate::error::{Error, Result};
use crate::evolve::GrowthSeries;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "kind")]
pub enum GrowthClass {
    Fin,
    Bnd,
    Pol { degree: f64 },
    Int,
    Exp { base: f64 },
    InvPol { exponent: f64 },
    InvInt,
    InvExp,
    InvSupExp,
    Oscillating,
    Unknown,
}

impl GrowthClass {
    pub fn name(&self) -> &'static str {
        match self {
            GrowthClass::Fin => "Fin",
            GrowthClass::Bnd => "Bnd",
            GrowthClass::Pol { .. } => "Pol",
            GrowthClass::Int => "Int",
            GrowthClass::Exp { .. } => "Exp",
            GrowthClass::InvPol { .. } => "InvPol",
            GrowthClass::InvInt => "InvInt",
            GrowthClass::InvExp => "InvExp",
            GrowthClass::InvSupExp => "InvSupExp",
            GrowthClass::Oscillating => "Oscillating",
            GrowthClass::Unknown => "Unknown",
        }
    }

    /// Same coarse class with compatible parameters.
    pub fn agrees_with(&self, other: &GrowthClass) -> bool {
        match (self, other) {
            (GrowthClass::Pol { degree: a }, GrowthClass::Pol { degree: b }) => (a - b).abs() <= 0.5,
            (GrowthClass::Exp { base: a }, GrowthClass::Exp { base: b }) => (a - b).abs() <= 0.1 * a.max(*b),
            (GrowthClass::InvPol { exponent: a }, GrowthClass::InvPol { exponent: b }) => (a - b).abs() <= 0.25,
            _ => self.name() == other.name(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Regularity {
    Regular,
    Oscillating,
    Undetermined,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClassifierConfig {
    pub min_layers: usize,
    /// Minimum coefficient of determination for a model to be accepted.
    pub threshold: f64,
    /// Fit only corners at index at least `fit_start * horizon`.
    pub fit_start: f64,
    pub min_points: usize,
}

impl Default for ClassifierConfig {
    fn default() -> Self {
        ClassifierConfig { min_layers: 8, threshold: 0.98, fit_start: 0.125, min_points: 4 }
    }
}

pub const CAVEAT: &str = "Growth classes are asymptotic and membership is undecidable in general. \
This verdict is a least-squares fit over a finite window of layers.";

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EnvelopeFit {
    pub class: GrowthClass,
    /// Model name to coefficient of determination.
    pub scores: BTreeMap<String, f64>,
    /// Indices of the envelope used as sample points.
    pub points: Vec<usize>,
    /// `corners` or `peaks`.
    pub sample: &'static str,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClassificationReport {
    #[serde(skip)]
    pub envelopes: Envelopes,
    pub horizon: usize,
    pub upper_class: GrowthClass,
    pub lower_class: GrowthClass,
    pub regular: Regularity,
    pub fits: BTreeMap<String, f64>,
    pub lower_fits: BTreeMap<String, f64>,
    pub provisional_tail: usize,
    pub caveat: &'static str,
    #[serde(skip)]
    pub upper_fit: Option<EnvelopeFit>,
    #[serde(skip)]
    pub lower_fit: Option<EnvelopeFit>,
}

impl ClassificationReport {
    /// Overall verdict: `Oscillating` for divergent envelopes, else the upper class.
    pub fn class(&self) -> GrowthClass {
        match self.regular {
            Regularity::Oscillating => GrowthClass::Oscillating,
            _ => self.upper_class,
        }
    }
}

struct LinFit {
    slope: f64,
    r2: f64,
}

fn linear_fit(xs: &[f64], ys: &[f64]) -> Option<LinFit> {
    let n = xs.len() as f64;
    if xs.len() < 2 || xs.iter().chain(ys).any(|v| !v.is_finite()) {
        return None;
    }
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let sxx: f64 = xs.iter().map(|x| (x - mx).powi(2)).sum();
    let syy: f64 = ys.iter().map(|y| (y - my).powi(2)).sum();
    let sxy: f64 = xs.iter().zip(ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    if sxx <= 0.0 || syy <= 0.0 {
        return None;
    }
    let slope = sxy / sxx;
    Some(LinFit { slope, r2: (sxy * sxy) / (sxx * syy) })
}

type Transform = fn(f64) -> f64;

/// (name, x-transform, y-transform)
const MODELS: [(&str, Transform, Transform); 6] = [
    ("power", f64::ln, f64::ln),
    ("exp", identity, f64::ln),
    ("int", f64::sqrt, f64::ln),
    ("log", f64::ln, identity),
    ("log2", ln_squared, identity),
    ("loglog", ln_ln, identity),
];

fn identity(v: f64) -> f64 {
    v
}

fn ln_squared(v: f64) -> f64 {
    v.ln().powi(2)
}

fn ln_ln(v: f64) -> f64 {
    v.ln().ln()
}

fn class_of(model: &str, slope: f64) -> Option<GrowthClass> {
    if slope <= 0.0 {
        return None;
    }
    Some(match model {
        "power" if slope > 0.8 => GrowthClass::Pol { degree: slope },
        "power" => GrowthClass::InvPol { exponent: slope },
        "exp" => GrowthClass::Exp { base: slope.exp() },
        "int" => GrowthClass::Int,
        "log" => GrowthClass::InvExp,
        "log2" => GrowthClass::InvInt,
        "loglog" => GrowthClass::InvSupExp,
        _ => unreachable!(),
    })
}

fn fit_points(env: &[u64], points: &[usize], threshold: f64) -> (GrowthClass, BTreeMap<String, f64>) {
    let xs: Vec<f64> = points.iter().map(|&d| d as f64 + 1.0).collect();
    let ys: Vec<f64> = points.iter().map(|&d| env[d] as f64).collect();
    let mut scores = BTreeMap::new();
    let mut best: Option<(f64, GrowthClass)> = None;
    for (name, fx, fy) in MODELS {
        let tx: Vec<f64> = xs.iter().map(|&v| fx(v)).collect();
        let ty: Vec<f64> = ys.iter().map(|&v| fy(v)).collect();
        let Some(fit) = linear_fit(&tx, &ty) else {
            scores.insert(name.to_string(), 0.0);
            continue;
        };
        scores.insert(name.to_string(), fit.r2);
        if let Some(class) = class_of(name, fit.slope) {
            if fit.r2 >= threshold && best.is_none_or(|(r, _)| fit.r2 > r) {
                best = Some((fit.r2, class));
            }
        }
    }
    (best.map_or(GrowthClass::Unknown, |(_, c)| c), scores)
}

fn select(candidates: Vec<usize>, start: usize, min_points: usize) -> Vec<usize> {
    let late: Vec<usize> = candidates.iter().copied().filter(|&i| i >= start).collect();
    if late.len() >= min_points {
        late
    } else {
        candidates.into_iter().filter(|&i| i > 0).collect()
    }
}

/// Fits one monotone envelope. Sample points are its corners (indices where it
/// increases). When no model passes on an upper envelope, the fit is retried on
/// the ends of increase runs, which discards the rising flanks of spikes.
fn fit_envelope(env: &[u64], cfg: &ClassifierConfig, is_upper: bool) -> EnvelopeFit {
    let h = env.len();
    let start = (cfg.fit_start * h as f64).ceil() as usize;
    let all = corners(env);
    let points = select(all.clone(), start, cfg.min_points);
    let (class, scores) = fit_points(env, &points, cfg.threshold);
    if class != GrowthClass::Unknown || !is_upper {
        return EnvelopeFit { class, scores, points, sample: "corners" };
    }
    let peaks: Vec<usize> = all.iter().copied().filter(|&i| i + 1 >= h || env[i + 1] == env[i]).collect();
    let peak_points = select(peaks, start, cfg.min_points);
    if peak_points.len() >= cfg.min_points {
        let (pclass, pscores) = fit_points(env, &peak_points, cfg.threshold);
        if pclass != GrowthClass::Unknown {
            return EnvelopeFit { class: pclass, scores: pscores, points: peak_points, sample: "peaks" };
        }
    }
    EnvelopeFit { class, scores, points, sample: "corners" }
}

pub fn classify(series: &GrowthSeries) -> Result<ClassificationReport> {
    classify_counts(&series.counts, &ClassifierConfig::default())
}

pub fn classify_counts(counts: &[u64], cfg: &ClassifierConfig) -> Result<ClassificationReport> {
    let h = counts.len();
    if h < cfg.min_layers {
        return Err(Error::HorizonTooShort { layers: h, needed: cfg.min_layers });
    }
    let env = envelopes(counts);
    let mut report = ClassificationReport {
        horizon: h,
        upper_class: GrowthClass::Unknown,
        lower_class: GrowthClass::Unknown,
        regular: Regularity::Undetermined,
        fits: BTreeMap::new(),
        lower_fits: BTreeMap::new(),
        provisional_tail: env.provisional_tail,
        caveat: CAVEAT,
        upper_fit: None,
        lower_fit: None,
        envelopes: env,
    };

    if counts.contains(&0) {
        report.upper_class = GrowthClass::Fin;
        report.lower_class = GrowthClass::Fin;
        report.regular = Regularity::Regular;
        return Ok(report);
    }
    let tail = h.div_ceil(2);
    let upper = &report.envelopes.upper;
    if upper[h - tail..].iter().all(|&v| v == upper[h - 1]) {
        report.upper_class = GrowthClass::Bnd;
        report.lower_class = GrowthClass::Bnd;
        report.regular = Regularity::Regular;
        return Ok(report);
    }

    let uf = fit_envelope(&report.envelopes.upper, cfg, true);
    let lf = fit_envelope(&report.envelopes.lower, cfg, false);
    report.upper_class = uf.class;
    report.lower_class = lf.class;
    report.fits = uf.scores.clone();
    report.lower_fits = lf.scores.clone();
    report.regular = if uf.class == GrowthClass::Unknown || lf.class == GrowthClass::Unknown {
        Regularity::Undetermined
    } else if uf.class.agrees_with(&lf.class) {
        Regularity::Regular
    } else {
        Regularity::Oscillating
    };
    report.upper_fit = Some(uf);
    report.lower_fit = Some(lf);
    Ok(report)
}
