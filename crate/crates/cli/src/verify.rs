use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use serde::Serialize;

use soliton_forge::lie::{families_matching, CatalogId, Family};
use soliton_forge::soliton::{cross_validate_with, soundness_sweep, CrossValidationReport, Reading, SampleConfig, SoundnessReport};

use crate::error::CliError;

pub struct VerifyOptions {
    pub samples: usize,
    pub seed: u64,
    pub id: Option<String>,
    pub reading: Reading,
    pub out: Option<PathBuf>,
}

/// Per grid point counts; the full reports go to `--out`.
#[derive(Debug, Serialize)]
pub struct PointSummary {
    pub algebra: String,
    pub id: String,
    pub samples: usize,
    pub agreements: usize,
    pub discrepancies: usize,
    pub soundness_violations: usize,
    pub completeness_gaps: usize,
    pub constructed_violations: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub example: Option<String>,
}

#[derive(Debug, Serialize)]
pub struct VerifySummary {
    pub seed: u64,
    pub samples: usize,
    pub reading: Reading,
    pub points: Vec<PointSummary>,
}

impl VerifySummary {
    /// Criterion-accepted operators the solver rejects, from either sweep.
    pub fn soundness_total(&self) -> usize {
        self.points
            .iter()
            .map(|p| p.soundness_violations + p.constructed_violations)
            .sum()
    }

    pub fn gaps_total(&self) -> usize {
        self.points.iter().map(|p| p.completeness_gaps).sum()
    }
}

/// File-name-safe rendering of a grid point, e.g. `g4.5_ab_a-1_b1over2`.
fn slug(id: &CatalogId) -> String {
    let mut s = id.family.id().replace('^', "_").replace('+', "_plus_");
    if let Some(a) = &id.params.alpha {
        let _ = write!(s, "_a{a}");
    }
    if let Some(b) = &id.params.beta {
        let _ = write!(s, "_b{b}");
    }
    s.replace('/', "over")
}

fn write_json(dir: &Path, name: &str, value: &impl Serialize) -> Result<(), CliError> {
    let path = dir.join(name);
    let text = serde_json::to_string_pretty(value).expect("reports serialize");
    fs::write(&path, text + "\n").map_err(|source| CliError::Write { path, source })
}

fn summarize(id: &CatalogId, cross: &CrossValidationReport, sound: &SoundnessReport) -> PointSummary {
    let example = cross
        .discrepancies
        .first()
        .map(|d| format!("{:?} sample, solver {}: {}", d.kind, d.solver, d.detail.as_deref().unwrap_or("")))
        .or_else(|| sound.violations.first().map(|v| v.reason.clone()));
    PointSummary {
        algebra: id.family.id().to_string(),
        id: id.to_string(),
        samples: cross.samples,
        agreements: cross.agreements,
        discrepancies: cross.discrepancies.len(),
        soundness_violations: cross.soundness_violations(),
        completeness_gaps: cross.completeness_gaps(),
        constructed_violations: sound.violations.len(),
        example,
    }
}

pub fn run(opts: &VerifyOptions) -> Result<VerifySummary, CliError> {
    let families = match &opts.id {
        Some(prefix) => families_matching(prefix)?,
        None => Family::ALL.to_vec(),
    };
    if let Some(dir) = &opts.out {
        fs::create_dir_all(dir).map_err(|source| CliError::Write {
            path: dir.clone(),
            source,
        })?;
    }
    let cfg = SampleConfig::default();
    let mut points = Vec::new();
    for family in families {
        for id in family.grid_ids() {
            let cross = cross_validate_with(&id, opts.samples, opts.seed, opts.reading, cfg)?;
            let sound = soundness_sweep(&id, opts.samples, opts.seed, opts.reading, cfg)?;
            if let Some(dir) = &opts.out {
                let base = slug(&id);
                write_json(dir, &format!("{base}.json"), &cross)?;
                write_json(dir, &format!("{base}.soundness.json"), &sound)?;
            }
            points.push(summarize(&id, &cross, &sound));
        }
    }
    let summary = VerifySummary {
        seed: opts.seed,
        samples: opts.samples,
        reading: opts.reading,
        points,
    };
    if let Some(dir) = &opts.out {
        write_json(dir, "summary.json", &summary)?;
    }
    Ok(summary)
}

pub fn render_text(s: &VerifySummary) -> String {
    let mut out = String::new();
    let width = s.points.iter().map(|p| p.id.chars().count()).max().unwrap_or(0);
    for p in &s.points {
        let pad = width - p.id.chars().count();
        let _ = writeln!(
            out,
            "{}{}  agree {}/{}  soundness {}  gaps {}  constructed {}",
            p.id,
            " ".repeat(pad),
            p.agreements,
            p.samples,
            p.soundness_violations,
            p.completeness_gaps,
            p.constructed_violations
        );
        if let Some(e) = &p.example {
            let _ = writeln!(out, "  e.g. {e}");
        }
    }
    let _ = writeln!(
        out,
        "verify: {} grid points, seed {}, {:?} reading, {} soundness violations, {} completeness gaps",
        s.points.len(),
        s.seed,
        s.reading,
        s.soundness_total(),
        s.gaps_total()
    );
    out
}
