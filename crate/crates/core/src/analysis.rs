//! The prime side of the picture: locating interference peaks and checking
//! that they sit where the character says they should.
//!
//! A reconstruction's cosine series spikes at prime powers p^k, and the
//! spike's sign follows Re chi(p^k): positive where the character's real
//! part is positive, negative where it is negative, while prime powers with
//! purely imaginary chi(p^k) transfer their energy to the sine series T.
//! Prime powers sharing a factor with the modulus carry no character
//! information at all (chi vanishes there), so peaks near them are tallied
//! but never counted as violations.
//!
//! `detect_peaks` finds local maxima of |S| by prominence, the height of a
//! peak above the higher of the two saddles separating it from larger
//! terrain. `separation_report` classifies matched peaks by residue class
//! and flags sign violations. `dedekind_survivor_check` verifies the
//! constructive/destructive split of the combined multi-character sum:
//! peaks survive at primes p = 1 (mod q) and at the ramified powers q^k,
//! everything else is suppressed.
//!
//! `psi_chi_oracle` computes the truncated Chebyshev sum
//! sum_{n <= x} chi(n) Lambda(n) directly from the primes, the staircase
//! the zero sums are trying to rebuild. It accumulates left to right in a
//! single complex fold, so the step it takes at each prime power is exactly
//! one floating-point addition of chi(n) Lambda(n).

use std::fmt;

use num_complex::Complex64;
use num_integer::Integer;
use thiserror::Error;

use crate::characters::{CharacterError, CharacterId, DirichletCharacter};
use crate::reconstruction::{Convention, Reconstruction};

// ---- errors ----

#[derive(Debug, Error)]
pub enum AnalysisError {
    #[error("prominence must be positive, got {0}")]
    BadProminence(f64),
    #[error("match tolerance must be positive, got {0}")]
    BadMatchTol(f64),
    #[error("the reconstruction does not include character {0}")]
    CharacterMissing(CharacterId),
    #[error("the survivor check needs a modulus of at least 2, got {0}")]
    BadModulus(u64),
    #[error("the reconstructions sample different grids")]
    GridMismatch,
    #[error(transparent)]
    Character(#[from] CharacterError),
}

// ---- arithmetic helpers ----

/// Lambda(n): log p when n = p^k, else 0. Trial division; exact for u64.
pub fn von_mangoldt(n: u64) -> f64 {
    if n < 2 {
        return 0.0;
    }
    let mut p = n;
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            p = d;
            break;
        }
        d += 1;
    }
    let mut m = n;
    while m % p == 0 {
        m /= p;
    }
    if m == 1 { (p as f64).ln() } else { 0.0 }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Prime powers p^k with x_min <= p^k <= x_max, ascending.
pub fn prime_powers_in(x_min: f64, x_max: f64) -> Vec<u64> {
    if !(x_max >= 2.0) {
        return Vec::new();
    }
    let lo = x_min.max(2.0).ceil() as u64;
    let hi = x_max.floor() as u64;
    (lo..=hi).filter(|&n| von_mangoldt(n) > 0.0).collect()
}

/// Truncated Chebyshev sum for chi: sum over n <= x of chi(n) Lambda(n),
/// accumulated in ascending order. Because the fold adds one exact product
/// per prime power, psi(n + 1/2) is bit-for-bit the previous partial sum
/// plus chi(n) Lambda(n).
pub fn psi_chi_oracle(chi: &DirichletCharacter, x: f64) -> Complex64 {
    let mut acc = Complex64::new(0.0, 0.0);
    if x < 2.0 {
        return acc;
    }
    for n in 2..=(x.floor() as u64) {
        let lambda = von_mangoldt(n);
        if lambda == 0.0 {
            continue;
        }
        let value = chi.evaluate(n as i64);
        if value.is_zero() {
            continue;
        }
        acc += value.to_complex() * lambda;
    }
    acc
}

// ---- peak detection ----

/// Which sampled series a peak was found in.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Component {
    S,
    T,
}

impl fmt::Display for Component {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Component::S => "S",
            Component::T => "T",
        })
    }
}

/// One detected local extremum, with its nearest prime power when the log
/// distance is within tolerance. `amplitude` keeps the signed series value.
#[derive(Clone, Debug)]
pub struct Peak {
    pub x: f64,
    pub amplitude: f64,
    pub nearest_pp: Option<u64>,
    pub pp_distance: f64,
    pub residue_class: Option<u64>,
    pub component: Component,
}

/// Indices of strict interior local maxima.
fn local_maxima(values: &[f64]) -> Vec<usize> {
    let mut out = Vec::new();
    for i in 1..values.len().saturating_sub(1) {
        if values[i] > values[i - 1] && values[i] > values[i + 1] {
            out.push(i);
        }
    }
    out
}

/// Height of values[i] above the higher of its two bounding saddles: walk
/// each way until terrain exceeds the peak (or the edge), tracking the
/// lowest point passed.
fn prominence_at(values: &[f64], i: usize) -> f64 {
    let h = values[i];
    let mut left = h;
    let mut j = i;
    while j > 0 {
        j -= 1;
        if values[j] > h {
            break;
        }
        if values[j] < left {
            left = values[j];
        }
    }
    let mut right = h;
    let mut k = i;
    while k + 1 < values.len() {
        k += 1;
        if values[k] > h {
            break;
        }
        if values[k] < right {
            right = values[k];
        }
    }
    h - left.max(right)
}

/// Half the smallest log gap between consecutive prime powers in range: the
/// widest window that can never claim one prime power for another. Falls
/// back to 0.05 when the range holds fewer than two prime powers.
pub fn default_match_tol(x_min: f64, x_max: f64) -> f64 {
    let pps = prime_powers_in(x_min, x_max);
    let mut min_gap = f64::INFINITY;
    for w in pps.windows(2) {
        let gap = (w[1] as f64 / w[0] as f64).ln();
        if gap < min_gap {
            min_gap = gap;
        }
    }
    if min_gap.is_finite() { 0.5 * min_gap } else { 0.05 }
}

/// One fifth of the largest |S| excursion: spikes stand well above this,
/// truncation ripple mostly below.
pub fn default_prominence(r: &Reconstruction) -> f64 {
    0.2 * r.s_values().iter().fold(0.0f64, |m, &v| m.max(v.abs()))
}

/// Peak detection on a chosen component. Local maxima of the absolute
/// series are kept when their prominence reaches the threshold, then
/// matched to the nearest prime power in log distance.
pub fn detect_peaks_in(
    r: &Reconstruction,
    component: Component,
    prominence: f64,
    match_tol: f64,
) -> Result<Vec<Peak>, AnalysisError> {
    if !(prominence > 0.0) || !prominence.is_finite() {
        return Err(AnalysisError::BadProminence(prominence));
    }
    if !(match_tol > 0.0) || !match_tol.is_finite() {
        return Err(AnalysisError::BadMatchTol(match_tol));
    }
    let values = match component {
        Component::S => r.s_values(),
        Component::T => r.t_values(),
    };
    let magnitude: Vec<f64> = values.iter().map(|v| v.abs()).collect();
    let pps = prime_powers_in(r.grid().x_min(), r.grid().x_max());
    let log_pps: Vec<f64> = pps.iter().map(|&p| (p as f64).ln()).collect();

    let mut peaks = Vec::new();
    for i in local_maxima(&magnitude) {
        if prominence_at(&magnitude, i) < prominence {
            continue;
        }
        let x = r.grid().points()[i];
        let log_x = x.ln();
        let mut best = f64::INFINITY;
        let mut best_pp = 0;
        for (k, &lp) in log_pps.iter().enumerate() {
            let d = (log_x - lp).abs();
            if d < best {
                best = d;
                best_pp = pps[k];
            }
        }
        let matched = best <= match_tol;
        peaks.push(Peak {
            x,
            amplitude: values[i],
            nearest_pp: matched.then_some(best_pp),
            pp_distance: best,
            residue_class: None,
            component,
        });
    }
    Ok(peaks)
}

/// Peak detection on the cosine series S.
pub fn detect_peaks(
    r: &Reconstruction,
    prominence: f64,
    match_tol: f64,
) -> Result<Vec<Peak>, AnalysisError> {
    detect_peaks_in(r, Component::S, prominence, match_tol)
}

// ---- separation report ----

const SIGN_EPS: f64 = 1e-9;

fn sign_of(v: f64) -> i8 {
    if v > SIGN_EPS {
        1
    } else if v < -SIGN_EPS {
        -1
    } else {
        0
    }
}

/// Matched-peak statistics for one residue class in one component.
#[derive(Clone, Debug)]
pub struct ClassStats {
    pub class: u64,
    pub expected_sign: i8,
    pub matched_peaks: usize,
    pub mean_amplitude: f64,
}

/// A matched peak whose sign or component contradicts the character value
/// at its prime power.
#[derive(Clone, Debug)]
pub struct Violation {
    pub peak: Peak,
    pub expected_sign: i8,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} peak at x = {:.3} (pp {}, class {}): amplitude {:.3}, expected sign {}",
            self.peak.component,
            self.peak.x,
            self.peak.nearest_pp.unwrap_or(0),
            self.peak.residue_class.unwrap_or(0),
            self.peak.amplitude,
            self.expected_sign
        )
    }
}

/// How the detected peaks distribute over residue classes for one
/// character, with sign violations and, for a real character under the
/// symmetric convention, the largest leftover |T| value.
#[derive(Clone, Debug)]
pub struct SeparationReport {
    modulus: u64,
    character: CharacterId,
    s_classes: Vec<ClassStats>,
    t_classes: Vec<ClassStats>,
    s_peaks: Vec<Peak>,
    t_peaks: Vec<Peak>,
    violations: Vec<Violation>,
    cancellation_residual: Option<f64>,
}

impl SeparationReport {
    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn character(&self) -> CharacterId {
        self.character
    }

    pub fn s_classes(&self) -> &[ClassStats] {
        &self.s_classes
    }

    pub fn t_classes(&self) -> &[ClassStats] {
        &self.t_classes
    }

    pub fn s_peaks(&self) -> &[Peak] {
        &self.s_peaks
    }

    pub fn t_peaks(&self) -> &[Peak] {
        &self.t_peaks
    }

    pub fn violations(&self) -> &[Violation] {
        &self.violations
    }

    pub fn cancellation_residual(&self) -> Option<f64> {
        self.cancellation_residual
    }

    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }

    /// Machine-readable key=value lines, one record per line.
    pub fn records(&self) -> String {
        let mut out = String::new();
        let residual = match self.cancellation_residual {
            Some(v) => v.to_string(),
            None => "n/a".to_string(),
        };
        out.push_str(&format!(
            "report character={} modulus={} violations={} cancellation_residual={}\n",
            self.character,
            self.modulus,
            self.violations.len(),
            residual
        ));
        for (component, classes) in [("S", &self.s_classes), ("T", &self.t_classes)] {
            for c in classes.iter() {
                out.push_str(&format!(
                    "class component={} class={} expected_sign={} matched={} mean_amplitude={}\n",
                    component, c.class, c.expected_sign, c.matched_peaks, c.mean_amplitude
                ));
            }
        }
        for p in self.s_peaks.iter().chain(self.t_peaks.iter()) {
            out.push_str(&format!(
                "peak component={} x={} amplitude={} pp={} class={} distance={}\n",
                p.component,
                p.x,
                p.amplitude,
                p.nearest_pp.map_or("none".to_string(), |v| v.to_string()),
                p.residue_class.map_or("none".to_string(), |v| v.to_string()),
                p.pp_distance
            ));
        }
        for v in &self.violations {
            out.push_str(&format!(
                "violation component={} x={} amplitude={} pp={} class={} expected_sign={}\n",
                v.peak.component,
                v.peak.x,
                v.peak.amplitude,
                v.peak.nearest_pp.map_or("none".to_string(), |p| p.to_string()),
                v.peak.residue_class.map_or("none".to_string(), |c| c.to_string()),
                v.expected_sign
            ));
        }
        out
    }
}

impl fmt::Display for SeparationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "character {} mod {}: peak separation by residue class",
            self.character, self.modulus
        )?;
        for (name, classes, peaks) in [
            ("S", &self.s_classes, &self.s_peaks),
            ("T", &self.t_classes, &self.t_peaks),
        ] {
            if classes.is_empty() && peaks.is_empty() {
                continue;
            }
            writeln!(f, "component {name} ({} peaks detected):", peaks.len())?;
            writeln!(f, "  class  expected  matched  mean amplitude")?;
            for c in classes.iter() {
                let sign = match c.expected_sign {
                    1 => "+",
                    -1 => "-",
                    _ => "0",
                };
                writeln!(
                    f,
                    "  {:<5}  {:<8}  {:<7}  {:+.3}",
                    c.class, sign, c.matched_peaks, c.mean_amplitude
                )?;
            }
        }
        if self.violations.is_empty() {
            writeln!(f, "violations: none")?;
        } else {
            writeln!(f, "violations: {}", self.violations.len())?;
            for v in &self.violations {
                writeln!(f, "  {v}")?;
            }
        }
        match self.cancellation_residual {
            Some(v) => writeln!(f, "cancellation residual: {v:.3e}"),
            None => writeln!(f, "cancellation residual: n/a"),
        }
    }
}

/// Classifies the matched peaks of one character's reconstruction.
///
/// Peaks in S should carry the sign of Re chi(p^k); for a complex character
/// peaks in T should carry the sign of Im chi(p^k). A matched peak in the
/// wrong component (its character value has zero real or imaginary part
/// there) or with the wrong sign becomes a violation. Prime powers with
/// chi(p^k) = 0 never violate.
pub fn separation_report(
    r: &Reconstruction,
    chi: &DirichletCharacter,
    prominence: f64,
    match_tol: f64,
) -> Result<SeparationReport, AnalysisError> {
    if !r.character_ids().contains(&chi.id()) {
        return Err(AnalysisError::CharacterMissing(chi.id()));
    }
    let q = chi.modulus();
    let complex = !chi.is_real();

    let mut s_peaks = detect_peaks_in(r, Component::S, prominence, match_tol)?;
    let mut t_peaks = if complex {
        detect_peaks_in(r, Component::T, prominence, match_tol)?
    } else {
        Vec::new()
    };
    for p in s_peaks.iter_mut().chain(t_peaks.iter_mut()) {
        p.residue_class = p.nearest_pp.map(|pp| pp % q);
    }

    // Residues coprime to q; for q = 1 that is the single class 0.
    let unit_classes: Vec<u64> = (0..q.max(1)).filter(|&c| c.gcd(&q) == 1).collect();

    let stats_for = |peaks: &[Peak], expected: &dyn Fn(u64) -> i8| -> Vec<ClassStats> {
        unit_classes
            .iter()
            .map(|&class| {
                let amps: Vec<f64> = peaks
                    .iter()
                    .filter(|p| p.residue_class == Some(class))
                    .map(|p| p.amplitude)
                    .collect();
                let mean = if amps.is_empty() {
                    0.0
                } else {
                    amps.iter().sum::<f64>() / amps.len() as f64
                };
                ClassStats {
                    class,
                    expected_sign: expected(class),
                    matched_peaks: amps.len(),
                    mean_amplitude: mean,
                }
            })
            .collect()
    };
    let re_sign = |class: u64| sign_of(chi.evaluate(class as i64).to_complex().re);
    let im_sign = |class: u64| sign_of(chi.evaluate(class as i64).to_complex().im);
    let s_classes = stats_for(&s_peaks, &re_sign);
    let t_classes = if complex { stats_for(&t_peaks, &im_sign) } else { Vec::new() };

    let mut violations = Vec::new();
    let mut collect = |peaks: &[Peak], expected: &dyn Fn(u64) -> i8| {
        for p in peaks {
            let Some(pp) = p.nearest_pp else { continue };
            if pp.gcd(&q) != 1 {
                continue;
            }
            let want = expected(pp % q);
            if sign_of(p.amplitude) != want {
                violations.push(Violation { peak: p.clone(), expected_sign: want });
            }
        }
    };
    collect(&s_peaks, &re_sign);
    if complex {
        collect(&t_peaks, &im_sign);
    }

    let cancellation_residual = if !complex && r.convention() == Convention::Symmetric {
        Some(r.t_values().iter().fold(0.0f64, |m, &v| m.max(v.abs())))
    } else {
        None
    };

    Ok(SeparationReport {
        modulus: q,
        character: chi.id(),
        s_classes,
        t_classes,
        s_peaks,
        t_peaks,
        violations,
        cancellation_residual,
    })
}

/// Largest pointwise |T_a + T_b| over a shared grid: how completely two
/// sine series cancel.
pub fn cancellation_residual(a: &Reconstruction, b: &Reconstruction) -> Result<f64, AnalysisError> {
    if a.grid() != b.grid() {
        return Err(AnalysisError::GridMismatch);
    }
    let mut worst = 0.0f64;
    for (x, y) in a.t_values().iter().zip(b.t_values()) {
        worst = worst.max((x + y).abs());
    }
    Ok(worst)
}

// ---- Dedekind survivor check ----

/// Ceiling on the suppressed-to-survivor amplitude ratio in a clean
/// factorization pattern.
pub const SUPPRESSION_BOUND: f64 = 0.25;

/// Ceiling on the combined sine series of a full character sum, which
/// cancels to rounding noise.
pub const RESIDUAL_BOUND: f64 = 1e-10;

/// Outcome of checking a combined reconstruction against the splitting of
/// primes in the q-th cyclotomic field.
#[derive(Clone, Debug)]
pub struct DedekindReport {
    modulus: u64,
    survivor_peaks: Vec<Peak>,
    ramified_peaks: Vec<Peak>,
    missing_survivors: Vec<u64>,
    missing_ramified: Vec<u64>,
    survivor_mean: f64,
    suppressed_mean: f64,
    max_t: f64,
}

impl DedekindReport {
    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn survivor_peaks(&self) -> &[Peak] {
        &self.survivor_peaks
    }

    pub fn ramified_peaks(&self) -> &[Peak] {
        &self.ramified_peaks
    }

    pub fn missing_survivors(&self) -> &[u64] {
        &self.missing_survivors
    }

    pub fn missing_ramified(&self) -> &[u64] {
        &self.missing_ramified
    }

    /// Mean sampled |S| over prime powers in class 1.
    pub fn survivor_mean(&self) -> f64 {
        self.survivor_mean
    }

    /// Mean sampled |S| over prime powers in the other unit classes.
    pub fn suppressed_mean(&self) -> f64 {
        self.suppressed_mean
    }

    pub fn max_t(&self) -> f64 {
        self.max_t
    }

    pub fn is_clean(&self) -> bool {
        self.missing_survivors.is_empty()
            && self.missing_ramified.is_empty()
            && self.suppressed_mean < SUPPRESSION_BOUND * self.survivor_mean
            && self.max_t < RESIDUAL_BOUND
    }

    /// Machine-readable key=value lines.
    pub fn records(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "dedekind modulus={} clean={} survivor_mean={} suppressed_mean={} max_t={}\n",
            self.modulus,
            self.is_clean(),
            self.survivor_mean,
            self.suppressed_mean,
            self.max_t
        ));
        for p in self.survivor_peaks.iter().chain(self.ramified_peaks.iter()) {
            out.push_str(&format!(
                "peak kind={} x={} amplitude={} pp={}\n",
                if p.residue_class == Some(0) { "ramified" } else { "survivor" },
                p.x,
                p.amplitude,
                p.nearest_pp.map_or("none".to_string(), |v| v.to_string())
            ));
        }
        for &m in &self.missing_survivors {
            out.push_str(&format!("missing kind=survivor pp={m}\n"));
        }
        for &m in &self.missing_ramified {
            out.push_str(&format!("missing kind=ramified pp={m}\n"));
        }
        out
    }
}

impl fmt::Display for DedekindReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Dedekind factorization check mod {}", self.modulus)?;
        writeln!(f, "  split primes with peaks:")?;
        for p in &self.survivor_peaks {
            writeln!(
                f,
                "    pp {:<4} x = {:>8.3}  amplitude {:+.3}",
                p.nearest_pp.unwrap_or(0),
                p.x,
                p.amplitude
            )?;
        }
        writeln!(f, "  ramified prime powers with peaks:")?;
        for p in &self.ramified_peaks {
            writeln!(
                f,
                "    pp {:<4} x = {:>8.3}  amplitude {:+.3}",
                p.nearest_pp.unwrap_or(0),
                p.x,
                p.amplitude
            )?;
        }
        if !self.missing_survivors.is_empty() {
            writeln!(f, "  missing split-prime peaks: {:?}", self.missing_survivors)?;
        }
        if !self.missing_ramified.is_empty() {
            writeln!(f, "  missing ramified peaks: {:?}", self.missing_ramified)?;
        }
        writeln!(
            f,
            "  suppression: mean |S| {:.3} at suppressed classes vs {:.3} at class 1 (bound {})",
            self.suppressed_mean, self.survivor_mean, SUPPRESSION_BOUND
        )?;
        writeln!(f, "  max |T|: {:.3e} (bound {RESIDUAL_BOUND:e})", self.max_t)?;
        writeln!(f, "  verdict: {}", if self.is_clean() { "clean" } else { "NOT clean" })
    }
}

/// Index of the grid point nearest x in log distance.
fn nearest_index(grid: &[f64], x: f64) -> usize {
    let mut lo = grid.partition_point(|&g| g < x);
    if lo == grid.len() {
        lo -= 1;
    }
    if lo > 0 && (x / grid[lo - 1]).ln().abs() < (x / grid[lo]).ln().abs() {
        lo - 1
    } else {
        lo
    }
}

/// Verifies that a combined reconstruction reproduces how primes factor in
/// the q-th cyclotomic field.
///
/// Three things must hold: a detected peak at every prime p = 1 (mod q) in
/// range and a positive local maximum near every ramified power q^k (which
/// carries weight 1/k and so can sit below the global prominence cut, hence
/// the windowed search); sampled |S| at the remaining unit-class prime
/// powers below SUPPRESSION_BOUND times the class-1 mean; and a combined
/// sine series below RESIDUAL_BOUND everywhere.
pub fn dedekind_survivor_check(
    r: &Reconstruction,
    q: u64,
    prominence: f64,
    match_tol: f64,
) -> Result<DedekindReport, AnalysisError> {
    if q < 2 {
        return Err(AnalysisError::BadModulus(q));
    }
    let peaks = detect_peaks_in(r, Component::S, prominence, match_tol)?;
    let points = r.grid().points();
    let pps = prime_powers_in(r.grid().x_min(), r.grid().x_max());

    // Split primes must show a matched peak at the chosen prominence.
    let mut survivor_peaks = Vec::new();
    let mut missing_survivors = Vec::new();
    for &p in pps.iter().filter(|&&n| is_prime(n) && n % q == 1) {
        match peaks.iter().find(|k| k.nearest_pp == Some(p)) {
            Some(peak) => {
                let mut peak = peak.clone();
                peak.residue_class = Some(1);
                survivor_peaks.push(peak);
            }
            None => missing_survivors.push(p),
        }
    }

    // Ramified powers: a positive local maximum of S within the matching
    // window, prominence not required.
    let maxima = local_maxima(&r.s_values().iter().map(|v| v.abs()).collect::<Vec<_>>());
    let mut ramified_peaks = Vec::new();
    let mut missing_ramified = Vec::new();
    let mut rk = q;
    while (rk as f64) <= r.grid().x_max() {
        if rk as f64 >= r.grid().x_min() {
            let log_rk = (rk as f64).ln();
            let best = maxima
                .iter()
                .filter(|&&i| (points[i].ln() - log_rk).abs() <= match_tol)
                .max_by(|&&a, &&b| {
                    r.s_values()[a].abs().total_cmp(&r.s_values()[b].abs())
                });
            match best {
                Some(&i) if r.s_values()[i] > 0.0 => ramified_peaks.push(Peak {
                    x: points[i],
                    amplitude: r.s_values()[i],
                    nearest_pp: Some(rk),
                    pp_distance: (points[i].ln() - log_rk).abs(),
                    residue_class: Some(0),
                    component: Component::S,
                }),
                _ => missing_ramified.push(rk),
            }
        }
        match rk.checked_mul(q) {
            Some(next) => rk = next,
            None => break,
        }
    }

    // Suppression is judged on sampled values, not detected peaks: class-1
    // prime powers against the other unit classes.
    let mut survivor_sum = 0.0;
    let mut survivor_n = 0usize;
    let mut suppressed_sum = 0.0;
    let mut suppressed_n = 0usize;
    for &pp in &pps {
        if pp.gcd(&q) != 1 {
            continue;
        }
        let sample = r.s_values()[nearest_index(points, pp as f64)].abs();
        if pp % q == 1 {
            survivor_sum += sample;
            survivor_n += 1;
        } else {
            suppressed_sum += sample;
            suppressed_n += 1;
        }
    }
    let survivor_mean = if survivor_n > 0 { survivor_sum / survivor_n as f64 } else { 0.0 };
    let suppressed_mean = if suppressed_n > 0 { suppressed_sum / suppressed_n as f64 } else { 0.0 };

    let max_t = r.t_values().iter().fold(0.0f64, |m, &v| m.max(v.abs()));

    Ok(DedekindReport {
        modulus: q,
        survivor_peaks,
        ramified_peaks,
        missing_survivors,
        missing_ramified,
        survivor_mean,
        suppressed_mean,
        max_t,
    })
}

// ---- tests ----
