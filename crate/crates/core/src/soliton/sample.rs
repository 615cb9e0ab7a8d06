//! Seeded sampling of Ricci-operator candidates and the sweeps that compare
//! the closed-form criteria against [`SolitonSolver`].
//!
//! Every sample draws from its own ChaCha stream (`seed`, stream = sample
//! index), so parallel and serial runs give identical reports.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::solve::{SolitonResult, SolitonSolver};
use super::theorem::{theorem, PredicateOutcome, Reading, TheoremPredicate};
use crate::error::Result;
use crate::lie::{catalog_get, CatalogId, Params};
use crate::matrix::Matrix;
use crate::rational::Rational;

/// Height bounds for random rationals `p/q`: `|p| ≤ max_num`, `1 ≤ q ≤ max_den`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SampleConfig {
    pub max_num: i64,
    pub max_den: i64,
}

impl Default for SampleConfig {
    fn default() -> Self {
        SampleConfig {
            max_num: 20,
            max_den: 10,
        }
    }
}

/// The generator for sample `index` of a sweep seeded with `seed`.
pub fn sample_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

pub fn random_rational<R: Rng>(rng: &mut R, cfg: &SampleConfig) -> Rational {
    Rational::new(rng.gen_range(-cfg.max_num..=cfg.max_num), rng.gen_range(1..=cfg.max_den))
}

pub fn random_nonzero_rational<R: Rng>(rng: &mut R, cfg: &SampleConfig) -> Rational {
    loop {
        let x = random_rational(rng, cfg);
        if !x.is_zero() {
            return x;
        }
    }
}

pub fn random_matrix<R: Rng>(rng: &mut R, n: usize, cfg: &SampleConfig) -> Matrix {
    let data = (0..n * n).map(|_| random_rational(rng, cfg)).collect();
    Matrix::from_vec(n, n, data).expect("n*n entries")
}

/// A random invertible matrix, by rejection on the determinant.
pub fn random_invertible<R: Rng>(rng: &mut R, n: usize, cfg: &SampleConfig) -> Matrix {
    loop {
        let m = random_matrix(rng, n, cfg);
        if m.determinant().is_ok_and(|d| !d.is_zero()) {
            return m;
        }
    }
}

/// A random symmetric nondegenerate matrix.
pub fn random_metric<R: Rng>(rng: &mut R, n: usize, cfg: &SampleConfig) -> Matrix {
    loop {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            for j in i..n {
                let x = random_rational(rng, cfg);
                m[(i, j)] = x.clone();
                m[(j, i)] = x;
            }
        }
        if m.determinant().is_ok_and(|d| !d.is_zero()) {
            return m;
        }
    }
}

/// A random element of the span of `basis`; each coefficient is dropped with
/// probability 1/4 so that sparse members of the span also appear.
pub fn random_combination<R: Rng>(rng: &mut R, basis: &[Matrix], n: usize, cfg: &SampleConfig) -> Matrix {
    let mut m = Matrix::zeros(n, n);
    for b in basis {
        if rng.gen_ratio(1, 4) {
            continue;
        }
        let c = random_nonzero_rational(rng, cfg);
        m = m.add(&b.scale(&c)).expect("same shape");
    }
    m
}

/// How a candidate operator was produced.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum SampleKind {
    /// Uniform random entries.
    Random,
    /// Built to satisfy the criterion.
    Constructed,
    /// A constructed sample with one entry moved.
    Perturbed,
    /// `η·I + D` for a random derivation `D`: always a soliton.
    FromDerivation,
}

impl SampleKind {
    pub const CYCLE: [SampleKind; 4] = [
        SampleKind::Random,
        SampleKind::Constructed,
        SampleKind::Perturbed,
        SampleKind::FromDerivation,
    ];

    pub fn for_index(index: u64) -> SampleKind {
        Self::CYCLE[(index % 4) as usize]
    }
}

/// Shared state of a sweep over one catalog algebra.
pub struct Sampler {
    pub predicate: TheoremPredicate,
    pub solver: SolitonSolver,
    criterion_basis: Vec<Matrix>,
    cfg: SampleConfig,
}

impl Sampler {
    pub fn new(id: &CatalogId, reading: Reading, cfg: SampleConfig) -> Result<Self> {
        let predicate = theorem(id, reading)?;
        let solver = SolitonSolver::new(&catalog_get(id)?);
        let criterion_basis = predicate.solution_basis();
        Ok(Sampler {
            predicate,
            solver,
            criterion_basis,
            cfg,
        })
    }

    pub fn constructed(&self, rng: &mut ChaCha8Rng) -> Matrix {
        random_combination(rng, &self.criterion_basis, 4, &self.cfg)
    }

    pub fn sample(&self, kind: SampleKind, rng: &mut ChaCha8Rng) -> Matrix {
        match kind {
            SampleKind::Random => random_matrix(rng, 4, &self.cfg),
            SampleKind::Constructed => self.constructed(rng),
            SampleKind::Perturbed => {
                let mut m = self.constructed(rng);
                let (i, j) = (rng.gen_range(0..4), rng.gen_range(0..4));
                m[(i, j)] += random_nonzero_rational(rng, &self.cfg);
                m
            }
            SampleKind::FromDerivation => {
                let d = random_combination(rng, &self.solver.derivations().basis, 4, &self.cfg);
                let eta = random_rational(rng, &self.cfg);
                Matrix::identity(4).scale(&eta).add(&d).expect("same shape")
            }
        }
    }
}

/// A sample on which criterion and solver disagree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Discrepancy {
    #[serde(rename = "R")]
    pub r: Matrix,
    pub predicate: bool,
    pub solver: &'static str,
    pub kind: SampleKind,
    /// Set when both accept but the constants differ, or to list the
    /// criterion's failed conditions on a solver-accepted sample.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl Discrepancy {
    /// The criterion accepted an operator the solver rejects or decomposes
    /// differently.
    pub fn is_soundness_violation(&self) -> bool {
        self.predicate
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CrossValidationReport {
    pub algebra: String,
    pub params: Params,
    pub reading: Reading,
    pub seed: u64,
    pub samples: usize,
    pub agreements: usize,
    pub discrepancies: Vec<Discrepancy>,
}

impl CrossValidationReport {
    pub fn soundness_violations(&self) -> usize {
        self.discrepancies.iter().filter(|d| d.is_soundness_violation()).count()
    }

    pub fn completeness_gaps(&self) -> usize {
        self.discrepancies.len() - self.soundness_violations()
    }
}

/// Compares one sample's verdicts; `None` means agreement.
fn compare(r: Matrix, kind: SampleKind, outcome: PredicateOutcome, solved: SolitonResult) -> Option<Discrepancy> {
    let detail = match (&outcome, &solved) {
        (o, s) if o.holds != s.is_soliton() => {
            (!o.holds).then(|| format!("failed: {}", o.failed_conditions.join("; ")))
        }
        (PredicateOutcome { holds: true, eta: Some(eta), .. }, s) if !s.admits_eta(eta) => Some(format!(
            "criterion gives η = {eta}, solver gives η = {}",
            s.eta().map(ToString::to_string).unwrap_or_default()
        )),
        _ => return None,
    };
    Some(Discrepancy {
        r,
        predicate: outcome.holds,
        solver: solved.verdict_name(),
        kind,
        detail,
    })
}

/// Seeded comparison of the criterion of `id` against the generic solver.
pub fn cross_validate_with(
    id: &CatalogId,
    samples: usize,
    seed: u64,
    reading: Reading,
    cfg: SampleConfig,
) -> Result<CrossValidationReport> {
    let sampler = Sampler::new(id, reading, cfg)?;
    let results: Vec<Option<Discrepancy>> = (0..samples as u64)
        .into_par_iter()
        .map(|index| {
            let mut rng = sample_rng(seed, index);
            let kind = SampleKind::for_index(index);
            let r = sampler.sample(kind, &mut rng);
            let outcome = sampler.predicate.evaluate(&r)?;
            let solved = sampler.solver.solve(&r)?;
            Ok(compare(r, kind, outcome, solved))
        })
        .collect::<Result<_>>()?;
    let discrepancies: Vec<Discrepancy> = results.into_iter().flatten().collect();
    Ok(CrossValidationReport {
        algebra: id.family.id().to_string(),
        params: id.params.clone(),
        reading,
        seed,
        samples,
        agreements: samples - discrepancies.len(),
        discrepancies,
    })
}

pub fn cross_validate(id: &CatalogId, samples: usize, seed: u64) -> Result<CrossValidationReport> {
    cross_validate_with(id, samples, seed, Reading::Corrected, SampleConfig::default())
}

/// Why a constructed sample broke the soundness contract.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SoundnessViolation {
    #[serde(rename = "R")]
    pub r: Matrix,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SoundnessReport {
    pub algebra: String,
    pub params: Params,
    pub reading: Reading,
    pub samples: usize,
    pub violations: Vec<SoundnessViolation>,
}

/// Checks the criterion's promises on constructed samples: the solver accepts,
/// `η` agrees, and the instantiated template satisfies the Leibniz rule.
pub fn soundness_sweep(
    id: &CatalogId,
    samples: usize,
    seed: u64,
    reading: Reading,
    cfg: SampleConfig,
) -> Result<SoundnessReport> {
    let sampler = Sampler::new(id, reading, cfg)?;
    let algebra = sampler.solver.algebra();
    let results: Vec<Option<SoundnessViolation>> = (0..samples as u64)
        .into_par_iter()
        .map(|index| {
            let mut rng = sample_rng(seed, index);
            let r = sampler.constructed(&mut rng);
            let outcome = sampler.predicate.evaluate(&r)?;
            let reason = if !outcome.holds {
                Some(format!("constructed sample fails {}", outcome.failed_conditions.join("; ")))
            } else {
                let eta = outcome.eta.expect("holds");
                let d = outcome.d.expect("holds");
                let solved = sampler.solver.solve(&r)?;
                let shifted = r.sub(&Matrix::identity(4).scale(&eta))?;
                if !solved.is_soliton() {
                    Some("solver rejects".to_string())
                } else if !solved.admits_eta(&eta) {
                    Some(format!(
                        "η = {eta} but solver gives {}",
                        solved.eta().map(ToString::to_string).unwrap_or_default()
                    ))
                } else if shifted != d {
                    Some("R − η·I differs from the template".to_string())
                } else if !algebra.is_derivation(&d) {
                    let defects = algebra.leibniz_defects(&d)?;
                    let pairs: Vec<String> = defects.iter().map(|((i, j), _)| format!("(e{i}, e{j})")).collect();
                    Some(format!("template fails the Leibniz rule on {}", pairs.join(", ")))
                } else {
                    None
                }
            };
            Ok(reason.map(|reason| SoundnessViolation { r, reason }))
        })
        .collect::<Result<_>>()?;
    Ok(SoundnessReport {
        algebra: id.family.id().to_string(),
        params: id.params.clone(),
        reading,
        samples,
        violations: results.into_iter().flatten().collect(),
    })
}
