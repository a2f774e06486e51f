//! Truncated oscillatory sums over L-function zeros.
//!
//! Each zero 1/2 + i gamma contributes one wave; summing the waves over a
//! zero list gives the interference pattern
//!
//! ```text
//! S_chi(x) = -sum_gamma w(gamma) cos(gamma log x),
//! T_chi(x) = -sum_gamma w(gamma) sin(gamma log x),
//! ```
//!
//! with w = 1 in the plain model and w(gamma) = 1/|1/2 + i gamma| in the
//! weighted variant. Under the `PositiveGamma` convention the sum runs over
//! the listed zeros only. Under the `Symmetric` convention it also includes
//! the reflected zeros -gamma' for gamma' in the conjugate character's list
//! (the same list when the character is real), because the two-sided zero
//! set is what the explicit formula actually sums over.
//!
//! The symmetric convention is the default everywhere in this crate for a
//! concrete reason: three cancellation identities hold exactly under it.
//! A real character's sine series vanishes, a conjugate pair's sine series
//! cancel each other, and the multi-character Dedekind combination is purely
//! real. The accumulation below keeps the own-list and reflected-list sums
//! separate so those cancellations happen bit-for-bit, not just within a
//! tolerance: equal folds produce equal floats, and x - y with x == y is
//! exactly +0.
//!
//! `psi_model` layers the explicit formula's 1/rho weight and x^{1/2}
//! envelope on top of the same machinery, giving the exact real part of
//! -sum x^rho / rho over the included zeros. No main term and no
//! trivial-zero corrections are added; peaks and jumps, not absolute
//! levels, are the object of study.

use std::collections::BTreeMap;
use std::fmt;
use std::io::{self, Write};

use thiserror::Error;

use crate::characters::{CharacterError, CharacterId, DirichletCharacter, enumerate_characters};
use crate::lfunction::ZeroList;

// ---- errors ----

#[derive(Debug, Error)]
pub enum ReconstructionError {
    #[error("invalid grid: {0}")]
    BadGrid(String),
    #[error("the symmetric convention needs the conjugate zero list for the complex character {0}")]
    ConjugateMissing(CharacterId),
    #[error("conjugate zero list belongs to {got}, expected zeros of {expected}")]
    ConjugateMismatch { expected: CharacterId, got: CharacterId },
    #[error("the positive_gamma convention sums one list; a conjugate list does not apply")]
    ConjugateUnused,
    #[error("reconstructions disagree on {0} and cannot be combined")]
    Mismatch(&'static str),
    #[error("combine needs one coefficient per part, got {parts} parts and {coefficients} coefficients")]
    LengthMismatch { parts: usize, coefficients: usize },
    #[error("combine needs at least one part")]
    Empty,
    #[error("no zero list supplied for character {0}")]
    MissingList(CharacterId),
    #[error("zero list belongs to {got}, not to the requested character {expected}")]
    WrongList { expected: CharacterId, got: CharacterId },
    #[error(transparent)]
    Character(#[from] CharacterError),
}

// ---- grid ----

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GridSpacing {
    LogUniform,
    Linear,
}

impl fmt::Display for GridSpacing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GridSpacing::LogUniform => "log_uniform",
            GridSpacing::Linear => "linear",
        })
    }
}

/// Sample points for the reconstruction, uniform in x or in log x.
#[derive(Clone, Debug, PartialEq)]
pub struct Grid {
    x_min: f64,
    x_max: f64,
    spacing: GridSpacing,
    points: Vec<f64>,
}

impl Grid {
    pub fn log_uniform(x_min: f64, x_max: f64, n_points: usize) -> Result<Self, ReconstructionError> {
        Self::build(x_min, x_max, n_points, GridSpacing::LogUniform)
    }

    pub fn linear(x_min: f64, x_max: f64, n_points: usize) -> Result<Self, ReconstructionError> {
        Self::build(x_min, x_max, n_points, GridSpacing::Linear)
    }

    fn build(
        x_min: f64,
        x_max: f64,
        n_points: usize,
        spacing: GridSpacing,
    ) -> Result<Self, ReconstructionError> {
        if !(x_min > 0.0) {
            return Err(ReconstructionError::BadGrid(format!(
                "x_min must be positive, got {x_min}"
            )));
        }
        if !(x_max > x_min) || !x_max.is_finite() {
            return Err(ReconstructionError::BadGrid(format!(
                "x_max must exceed x_min, got [{x_min}, {x_max}]"
            )));
        }
        if n_points < 2 {
            return Err(ReconstructionError::BadGrid(format!(
                "need at least 2 points, got {n_points}"
            )));
        }
        // Endpoints are pinned to the requested bounds exactly; interior
        // points come from one multiply-add each so that a refined grid
        // reproduces the coarse points bit-for-bit.
        let (lo, hi) = match spacing {
            GridSpacing::LogUniform => (x_min.ln(), x_max.ln()),
            GridSpacing::Linear => (x_min, x_max),
        };
        let step = (hi - lo) / (n_points - 1) as f64;
        let mut points = Vec::with_capacity(n_points);
        points.push(x_min);
        for i in 1..n_points - 1 {
            let u = lo + i as f64 * step;
            points.push(match spacing {
                GridSpacing::LogUniform => u.exp(),
                GridSpacing::Linear => u,
            });
        }
        points.push(x_max);
        Ok(Grid { x_min, x_max, spacing, points })
    }

    pub fn points(&self) -> &[f64] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn x_min(&self) -> f64 {
        self.x_min
    }

    pub fn x_max(&self) -> f64 {
        self.x_max
    }

    pub fn spacing(&self) -> GridSpacing {
        self.spacing
    }
}

// ---- reconstruction ----

/// Which zero set the sums run over.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Convention {
    /// Listed zeros only (gamma > 0).
    PositiveGamma,
    /// Listed zeros plus the reflections -gamma' of the conjugate list.
    Symmetric,
}

impl fmt::Display for Convention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Convention::PositiveGamma => "positive_gamma",
            Convention::Symmetric => "symmetric",
        })
    }
}

/// Sampled interference sums S and T on a grid, with provenance.
#[derive(Clone, Debug)]
pub struct Reconstruction {
    grid: Grid,
    s_values: Vec<f64>,
    t_values: Vec<f64>,
    character_ids: Vec<CharacterId>,
    zero_count: usize,
    convention: Convention,
    weighted: bool,
}

impl Reconstruction {
    pub fn grid(&self) -> &Grid {
        &self.grid
    }

    pub fn s_values(&self) -> &[f64] {
        &self.s_values
    }

    pub fn t_values(&self) -> &[f64] {
        &self.t_values
    }

    pub fn character_ids(&self) -> &[CharacterId] {
        &self.character_ids
    }

    pub fn zero_count(&self) -> usize {
        self.zero_count
    }

    pub fn convention(&self) -> Convention {
        self.convention
    }

    pub fn weighted(&self) -> bool {
        self.weighted
    }
}

fn weight(gamma: f64, weighted: bool) -> f64 {
    if weighted { 1.0 / (0.25 + gamma * gamma).sqrt() } else { 1.0 }
}

/// Resolves which list supplies the reflected zeros under the symmetric
/// convention, enforcing that it really is the conjugate character's.
fn reflected_list<'a>(
    own: &'a ZeroList,
    conjugate: Option<&'a ZeroList>,
) -> Result<&'a ZeroList, ReconstructionError> {
    let conj_id = own.character().conjugate();
    match conjugate {
        Some(list) => {
            if list.character() != conj_id {
                return Err(ReconstructionError::ConjugateMismatch {
                    expected: conj_id,
                    got: list.character(),
                });
            }
            Ok(list)
        }
        None => {
            if conj_id != own.character() {
                return Err(ReconstructionError::ConjugateMissing(own.character()));
            }
            Ok(own)
        }
    }
}

/// Builds S and T for one zero list.
///
/// Under `Symmetric` the reflected zeros come from `conjugate` (omit it for
/// a real character, whose list reflects onto itself); under `PositiveGamma`
/// no conjugate list applies and passing one is an error.
pub fn reconstruct(
    zl: &ZeroList,
    grid: &Grid,
    convention: Convention,
    weighted: bool,
    conjugate: Option<&ZeroList>,
) -> Result<Reconstruction, ReconstructionError> {
    let (reflected, zero_count) = match convention {
        Convention::PositiveGamma => {
            if conjugate.is_some() {
                return Err(ReconstructionError::ConjugateUnused);
            }
            (None, zl.len())
        }
        Convention::Symmetric => {
            let list = reflected_list(zl, conjugate)?;
            (Some(list), zl.len() + list.len())
        }
    };

    let n = grid.len();
    let mut s_values = Vec::with_capacity(n);
    let mut t_values = Vec::with_capacity(n);
    for &x in grid.points() {
        let log_x = x.ln();
        let mut own_cos = 0.0;
        let mut own_sin = 0.0;
        for &gamma in zl.gammas() {
            let w = weight(gamma, weighted);
            let (sin, cos) = (gamma * log_x).sin_cos();
            own_cos += w * cos;
            own_sin += w * sin;
        }
        match reflected {
            None => {
                s_values.push(0.0 - own_cos);
                t_values.push(0.0 - own_sin);
            }
            Some(list) => {
                // cos is even and sin odd in gamma, so the reflected zeros
                // add their cosines and subtract their sines. The reflected
                // fold stays separate: when both lists carry the same values
                // the sine parts cancel exactly, not approximately.
                let mut refl_cos = 0.0;
                let mut refl_sin = 0.0;
                for &gamma in list.gammas() {
                    let w = weight(gamma, weighted);
                    let (sin, cos) = (gamma * log_x).sin_cos();
                    refl_cos += w * cos;
                    refl_sin += w * sin;
                }
                s_values.push(0.0 - (own_cos + refl_cos));
                t_values.push(refl_sin - own_sin);
            }
        }
    }

    Ok(Reconstruction {
        grid: grid.clone(),
        s_values,
        t_values,
        character_ids: vec![zl.character()],
        zero_count,
        convention,
        weighted,
    })
}

/// Pointwise linear combination of reconstructions on a shared grid.
///
/// All parts must agree on grid, convention, and weighting; contributor
/// lists concatenate and zero counts add.
pub fn combine(
    parts: &[Reconstruction],
    coefficients: &[f64],
) -> Result<Reconstruction, ReconstructionError> {
    let first = parts.first().ok_or(ReconstructionError::Empty)?;
    if parts.len() != coefficients.len() {
        return Err(ReconstructionError::LengthMismatch {
            parts: parts.len(),
            coefficients: coefficients.len(),
        });
    }
    for part in &parts[1..] {
        if part.grid != first.grid {
            return Err(ReconstructionError::Mismatch("the grid"));
        }
        if part.convention != first.convention {
            return Err(ReconstructionError::Mismatch("the zero-set convention"));
        }
        if part.weighted != first.weighted {
            return Err(ReconstructionError::Mismatch("the weighting mode"));
        }
    }

    let n = first.grid.len();
    let mut s_values = vec![0.0; n];
    let mut t_values = vec![0.0; n];
    let mut character_ids = Vec::new();
    let mut zero_count = 0;
    for (part, &c) in parts.iter().zip(coefficients) {
        for i in 0..n {
            s_values[i] += c * part.s_values[i];
            t_values[i] += c * part.t_values[i];
        }
        character_ids.extend_from_slice(&part.character_ids);
        zero_count += part.zero_count;
    }

    Ok(Reconstruction {
        grid: first.grid.clone(),
        s_values,
        t_values,
        character_ids,
        zero_count,
        convention: first.convention,
        weighted: first.weighted,
    })
}

/// Sums the symmetric reconstructions of every primitive character inducing
/// a character mod q: the zeta list plus one list per primitive nontrivial
/// inducer, keyed by character id.
///
/// That union of zero sets belongs to the Dedekind zeta function of the
/// q-th cyclotomic field, so the combined T vanishes identically and the
/// combined S interferes constructively exactly on the split class
/// p = 1 (mod q) and on the ramified prime powers.
pub fn dedekind_reconstruction(
    q: u64,
    zero_lists: &BTreeMap<CharacterId, ZeroList>,
    grid: &Grid,
) -> Result<Reconstruction, ReconstructionError> {
    let mut inducers = std::collections::BTreeSet::new();
    for chi in enumerate_characters(q)? {
        inducers.insert(chi.primitive_inducer()?.id());
    }

    let mut parts = Vec::with_capacity(inducers.len());
    for id in inducers {
        let own = zero_lists.get(&id).ok_or(ReconstructionError::MissingList(id))?;
        if own.character() != id {
            return Err(ReconstructionError::WrongList { expected: id, got: own.character() });
        }
        let conj_id = id.conjugate();
        let conjugate = if conj_id == id {
            None
        } else {
            Some(zero_lists.get(&conj_id).ok_or(ReconstructionError::MissingList(conj_id))?)
        };
        parts.push(reconstruct(own, grid, Convention::Symmetric, false, conjugate)?);
    }
    let coefficients = vec![1.0; parts.len()];
    combine(&parts, &coefficients)
}

/// The exact real and imaginary parts of -sum x^rho / rho over the
/// symmetric zero set, including the x^{1/2} envelope: the oscillatory part
/// of the explicit formula for psi(x, chi), with no main term and no
/// trivial-zero corrections.
pub fn psi_model(
    chi: &DirichletCharacter,
    zl: &ZeroList,
    grid: &Grid,
    conjugate: Option<&ZeroList>,
) -> Result<Reconstruction, ReconstructionError> {
    if zl.character() != chi.id() {
        return Err(ReconstructionError::WrongList { expected: chi.id(), got: zl.character() });
    }
    let reflected = reflected_list(zl, conjugate)?;
    let zero_count = zl.len() + reflected.len();

    // Per zero: x^rho / rho = x^{1/2} e^{i gamma log x} (1/2 - i gamma) / (1/4 + gamma^2),
    // so Re = x^{1/2} [cos/2 + gamma sin] / (1/4 + gamma^2)
    // and Im = x^{1/2} [sin/2 - gamma cos] / (1/4 + gamma^2);
    // reflection gamma -> -gamma keeps Re and flips Im.
    let mut s_values = Vec::with_capacity(grid.len());
    let mut t_values = Vec::with_capacity(grid.len());
    for &x in grid.points() {
        let log_x = x.ln();
        let envelope = x.sqrt();
        let mut own_re = 0.0;
        let mut own_im = 0.0;
        for &gamma in zl.gammas() {
            let (sin, cos) = (gamma * log_x).sin_cos();
            let denom = 0.25 + gamma * gamma;
            own_re += (0.5 * cos + gamma * sin) / denom;
            own_im += (0.5 * sin - gamma * cos) / denom;
        }
        let mut refl_re = 0.0;
        let mut refl_im = 0.0;
        for &gamma in reflected.gammas() {
            let (sin, cos) = (gamma * log_x).sin_cos();
            let denom = 0.25 + gamma * gamma;
            refl_re += (0.5 * cos + gamma * sin) / denom;
            refl_im += (0.5 * sin - gamma * cos) / denom;
        }
        s_values.push(0.0 - envelope * (own_re + refl_re));
        t_values.push(envelope * (refl_im - own_im));
    }

    Ok(Reconstruction {
        grid: grid.clone(),
        s_values,
        t_values,
        character_ids: vec![chi.id()],
        zero_count,
        convention: Convention::Symmetric,
        weighted: true,
    })
}

// ---- CSV emission ----

/// Writes the sampled sums as CSV: comment header with provenance, then
/// columns x, S, T. Floats print in Rust's shortest round-trip form, so the
/// same reconstruction always serializes to the same bytes.
pub fn write_csv<W: Write>(r: &Reconstruction, mut out: W) -> io::Result<()> {
    let ids: Vec<String> = r.character_ids.iter().map(|id| id.to_string()).collect();
    writeln!(out, "# character_ids: {}", ids.join(","))?;
    writeln!(out, "# zero_count: {}", r.zero_count)?;
    writeln!(out, "# convention: {}", r.convention)?;
    writeln!(out, "# weighted: {}", r.weighted)?;
    writeln!(out, "x,S,T")?;
    for i in 0..r.grid.len() {
        writeln!(out, "{},{},{}", r.grid.points()[i], r.s_values[i], r.t_values[i])?;
    }
    Ok(())
}

// ---- tests ----
