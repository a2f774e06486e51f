//! Command-line front end.
//!
//! Subcommands: `characters` lists a modulus's character group, `zeros`
//! computes and exports critical-line zeros, `reconstruct` samples the
//! interference sums, `analyze` adds peak detection and the residue-class
//! verdict, `dedekind` combines a full character family and checks the
//! factorization pattern, and `figure <1..5>` renders the standard
//! figures, each bundled with its verification.
//!
//! Exit codes: 0 on success, 1 when a pipeline stage fails or a verified
//! claim does not hold (the message names the failing stage), 2 for
//! unusable flags. `--tmax` and `--points` also read the environment
//! variables PI_TMAX and PI_POINTS; explicit flags win over both.
//!
//! Every output path is deterministic: repeated runs with the same inputs
//! produce byte-identical CSV and SVG, regardless of machine or thread
//! count, because every stage works in fixed order over f64 values.

mod svg;

pub use svg::{SvgStyle, emit_svg};

use std::collections::{BTreeMap, BTreeSet};
use std::fs::File;
use std::io::{self, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::analysis::{
    Peak, RESIDUAL_BOUND, cancellation_residual, dedekind_survivor_check, default_match_tol,
    separation_report,
};
use crate::characters::{DirichletCharacter, enumerate_characters};
use crate::lfunction::{EvalParams, ZeroList, export_zeros, find_zeros, import_zeros};
use crate::reconstruction::{
    Convention, Grid, Reconstruction, dedekind_reconstruction, reconstruct, write_csv,
};
use svg::{CurveSpec, OVERLAY_COLOR, S_COLOR};

// ---- configuration ----

/// Default fraction of max |S| used as peak prominence.
const DEFAULT_PROMINENCE: f64 = 0.2;

/// Calibrated prominence fraction for the conjugate-pair complementarity
/// check (figure 4): high enough to reject the truncation ripple that
/// lands inside the matching window beside 49 = 7^2, where chi(49) is
/// real, while keeping every genuine imaginary-class spike.
const COMPLEX_PAIR_PROMINENCE: f64 = 0.35;

#[derive(Parser, Debug)]
#[command(
    name = "prime-interference",
    version,
    about = "Reconstructs prime-counting interference patterns from L-function zeros"
)]
pub struct RunConfig {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List the Dirichlet characters of a modulus
    Characters(CharactersArgs),
    /// Compute critical-line zeros and export them as text
    Zeros(ZerosArgs),
    /// Sample the interference sums S and T on a grid
    Reconstruct(ReconstructArgs),
    /// Reconstruct, detect peaks, and verify the residue-class separation
    Analyze(AnalyzeArgs),
    /// Combine a full character family and verify the factorization pattern
    Dedekind(DedekindArgs),
    /// Render a standard figure with its verification bundled
    Figure(FigureArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Svg,
    Report,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ConventionArg {
    /// Listed zeros only
    Positive,
    /// Listed zeros plus the reflected conjugate list
    Symmetric,
}

impl From<ConventionArg> for Convention {
    fn from(arg: ConventionArg) -> Self {
        match arg {
            ConventionArg::Positive => Convention::PositiveGamma,
            ConventionArg::Symmetric => Convention::Symmetric,
        }
    }
}

#[derive(Args, Clone, Debug)]
struct GridArgs {
    /// Left edge of the sample range
    #[arg(long, default_value_t = 2.0)]
    xmin: f64,
    /// Right edge of the sample range
    #[arg(long, default_value_t = 50.0)]
    xmax: f64,
    /// Number of log-uniform sample points
    #[arg(long, env = "PI_POINTS", default_value_t = 4000)]
    points: usize,
}

impl GridArgs {
    fn build(&self) -> Result<Grid, String> {
        Grid::log_uniform(self.xmin, self.xmax, self.points)
            .map_err(|e| format!("reconstruction: {e}"))
    }
}

#[derive(Args, Debug)]
struct CharactersArgs {
    #[arg(long)]
    modulus: u64,
    #[arg(long, value_enum, default_value_t = Format::Report)]
    format: Format,
    /// Output path; stdout when omitted
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct ZerosArgs {
    #[arg(long)]
    modulus: u64,
    #[arg(long)]
    label: u64,
    /// Scan height on the critical line
    #[arg(long, env = "PI_TMAX", default_value_t = 100.0)]
    tmax: f64,
    /// Output path; stdout when omitted
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct ReconstructArgs {
    #[arg(long)]
    modulus: u64,
    #[arg(long)]
    label: u64,
    /// Scan height when zeros are computed rather than imported
    #[arg(long, env = "PI_TMAX", default_value_t = 100.0)]
    tmax: f64,
    /// Zero list file; repeat the flag to supply the conjugate list too
    #[arg(long = "zeros-file")]
    zeros_file: Vec<PathBuf>,
    #[command(flatten)]
    grid: GridArgs,
    #[arg(long, value_enum, default_value_t = ConventionArg::Symmetric)]
    convention: ConventionArg,
    /// Divide each wave by |rho| = sqrt(1/4 + gamma^2)
    #[arg(long)]
    weighted: bool,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
    /// Output path; stdout when omitted
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct AnalyzeArgs {
    #[command(flatten)]
    base: ReconstructArgs,
    /// Peak prominence as a fraction of max |S|
    #[arg(long, default_value_t = DEFAULT_PROMINENCE)]
    prominence: f64,
}

#[derive(Args, Debug)]
struct DedekindArgs {
    #[arg(long, default_value_t = 5)]
    modulus: u64,
    /// Scan height for any zero list not supplied by file
    #[arg(long, env = "PI_TMAX", default_value_t = 100.0)]
    tmax: f64,
    /// Zero list file; repeat for each character of the family
    #[arg(long = "zeros-file")]
    zeros_file: Vec<PathBuf>,
    #[command(flatten)]
    grid: GridArgs,
    /// Peak prominence as a fraction of max |S|
    #[arg(long, default_value_t = DEFAULT_PROMINENCE)]
    prominence: f64,
    #[arg(long, value_enum, default_value_t = Format::Report)]
    format: Format,
    /// Output path; stdout when omitted
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct FigureArgs {
    /// 1: mod 3 vs zeta overlay, 2: mod 4, 3: mod 5 quadratic,
    /// 4: mod 5 conjugate pair, 5: Dedekind factorization mod 5
    #[arg(value_parser = clap::value_parser!(u8).range(1..=5))]
    id: u8,
    /// Scan height for the zero lists
    #[arg(long, env = "PI_TMAX", default_value_t = 100.0)]
    tmax: f64,
    #[command(flatten)]
    grid: GridArgs,
    #[arg(long, value_enum, default_value_t = Format::Svg)]
    format: Format,
    /// Output path; stdout when omitted
    #[arg(long)]
    out: Option<PathBuf>,
}

// ---- entry point ----

/// Parses arguments from the process environment and runs one command.
pub fn run() -> i32 {
    let config = match RunConfig::try_parse() {
        Ok(config) => config,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(config) {
        Ok(()) => 0,
        Err(message) => {
            eprintln!("{message}");
            1
        }
    }
}

fn dispatch(config: RunConfig) -> Result<(), String> {
    match config.command {
        Command::Characters(args) => cmd_characters(args),
        Command::Zeros(args) => cmd_zeros(args),
        Command::Reconstruct(args) => cmd_reconstruct(args),
        Command::Analyze(args) => cmd_analyze(args),
        Command::Dedekind(args) => cmd_dedekind(args),
        Command::Figure(args) => cmd_figure(args),
    }
}

// ---- shared plumbing ----

/// Stdout behind a guard that treats a closed pipe as a satisfied consumer:
/// `... | head` should trim the stream, not raise an error. File outputs
/// keep full error reporting.
struct PipeTolerant<W: Write> {
    inner: W,
    closed: bool,
}

impl<W: Write> Write for PipeTolerant<W> {
    fn write(&mut self, buf: &[u8]) -> io::Result<usize> {
        if self.closed {
            return Ok(buf.len());
        }
        match self.inner.write(buf) {
            Err(e) if e.kind() == io::ErrorKind::BrokenPipe => {
                self.closed = true;
                Ok(buf.len())
            }
            other => other,
        }
    }

    fn flush(&mut self) -> io::Result<()> {
        if self.closed {
            return Ok(());
        }
        match self.inner.flush() {
            Err(e) if e.kind() == io::ErrorKind::BrokenPipe => {
                self.closed = true;
                Ok(())
            }
            other => other,
        }
    }
}

fn open_out(out: &Option<PathBuf>) -> Result<Box<dyn Write>, String> {
    match out {
        Some(path) => {
            let file = File::create(path)
                .map_err(|e| format!("output: cannot create {}: {e}", path.display()))?;
            Ok(Box::new(BufWriter::new(file)))
        }
        None => Ok(Box::new(PipeTolerant { inner: io::stdout().lock(), closed: false })),
    }
}

fn finish(mut out: Box<dyn Write>) -> Result<(), String> {
    out.flush().map_err(|e| format!("output: {e}"))
}

/// Looks up the character and, when it is imprimitive, silently swaps in
/// its primitive inducer (with a note on stderr): the L-function machinery
/// and the zero set belong to the inducer, so the reconstruction for an
/// induced character is the inducer's, byte for byte.
fn resolve_character(modulus: u64, label: u64) -> Result<DirichletCharacter, String> {
    let chi = DirichletCharacter::from_label(modulus, label)
        .map_err(|e| format!("characters: {e}"))?;
    if chi.is_primitive() {
        return Ok(chi);
    }
    let inducer = chi.primitive_inducer().map_err(|e| format!("characters: {e}"))?;
    eprintln!(
        "note: character {} is induced from {}; computing with the primitive character",
        chi.id(),
        inducer.id()
    );
    Ok(inducer)
}

fn load_zero_file(path: &Path) -> Result<ZeroList, String> {
    let file =
        File::open(path).map_err(|e| format!("zeros: cannot open {}: {e}", path.display()))?;
    import_zeros(BufReader::new(file)).map_err(|e| format!("zeros: {}: {e}", path.display()))
}

/// Supplies the zero lists a reconstruction needs: imported from the given
/// files, or computed up to tmax when no files are given. With files, each
/// must belong to the requested character or (when needed) its conjugate.
fn gather_zeros(
    chi: &DirichletCharacter,
    need_conjugate: bool,
    files: &[PathBuf],
    tmax: f64,
) -> Result<(ZeroList, Option<ZeroList>), String> {
    let conj_id = chi.id().conjugate();
    let conjugate_distinct = need_conjugate && conj_id != chi.id();
    if files.is_empty() {
        let params = EvalParams::default();
        let own = find_zeros(chi, tmax, &params).map_err(|e| format!("zeros: {e}"))?;
        let conj = if conjugate_distinct {
            Some(find_zeros(&chi.conjugate(), tmax, &params).map_err(|e| format!("zeros: {e}"))?)
        } else {
            None
        };
        return Ok((own, conj));
    }
    let mut own = None;
    let mut conj = None;
    for path in files {
        let list = load_zero_file(path)?;
        if list.character() == chi.id() && own.is_none() {
            own = Some(list);
        } else if conjugate_distinct && list.character() == conj_id && conj.is_none() {
            conj = Some(list);
        } else {
            return Err(format!(
                "zeros: {} holds zeros of {}, which this command does not use",
                path.display(),
                list.character()
            ));
        }
    }
    let own = own.ok_or_else(|| format!("zeros: no supplied file holds zeros of {}", chi.id()))?;
    if conjugate_distinct && conj.is_none() {
        return Err(format!(
            "zeros: the symmetric convention for {} also needs the conjugate list {}; \
             supply it with a second --zeros-file or drop the flag to compute both",
            chi.id(),
            conj_id
        ));
    }
    Ok((own, conj))
}

fn max_abs(values: &[f64]) -> f64 {
    values.iter().fold(0.0f64, |m, &v| m.max(v.abs()))
}

fn scaled_prominence(fraction: f64, r: &Reconstruction) -> Result<f64, String> {
    if !(fraction > 0.0) || !fraction.is_finite() {
        return Err(format!("analysis: prominence fraction must be positive, got {fraction}"));
    }
    Ok(fraction * max_abs(r.s_values()))
}

// ---- characters ----

fn cmd_characters(args: CharactersArgs) -> Result<(), String> {
    let chars = enumerate_characters(args.modulus).map_err(|e| format!("characters: {e}"))?;
    let q = args.modulus;
    let mut out = open_out(&args.out)?;
    let write = |out: &mut dyn Write| -> io::Result<()> {
        match args.format {
            Format::Csv => {
                writeln!(out, "id,order,parity,real,conductor,primitive,induced_from")?;
                for chi in &chars {
                    writeln!(
                        out,
                        "{},{},{},{},{},{},{}",
                        chi.id(),
                        chi.order(),
                        if chi.parity() == 0 { "even" } else { "odd" },
                        chi.is_real(),
                        chi.conductor(),
                        chi.is_primitive(),
                        chi.primitive_inducer().map(|i| i.id().to_string()).unwrap_or_default()
                    )?;
                }
            }
            _ => {
                writeln!(out, "characters mod {q} ({} in the group)", chars.len())?;
                writeln!(out, "  id     order  parity  real  conductor  primitive  induced from")?;
                for chi in &chars {
                    let inducer = chi
                        .primitive_inducer()
                        .map(|i| i.id().to_string())
                        .unwrap_or_default();
                    writeln!(
                        out,
                        "  {:<5}  {:<5}  {:<6}  {:<4}  {:<9}  {:<9}  {}",
                        chi.id().to_string(),
                        chi.order(),
                        if chi.parity() == 0 { "even" } else { "odd" },
                        if chi.is_real() { "yes" } else { "no" },
                        chi.conductor(),
                        if chi.is_primitive() { "yes" } else { "no" },
                        inducer
                    )?;
                }
                let nontrivial: Vec<_> = chars.iter().filter(|c| c.id().label != 1).collect();
                if !nontrivial.is_empty() {
                    let primitive = nontrivial.iter().filter(|c| c.is_primitive()).count();
                    if primitive == 0 {
                        writeln!(
                            out,
                            "no nontrivial character mod {q} is primitive; \
                             reconstructions use the listed inducers"
                        )?;
                    } else {
                        writeln!(
                            out,
                            "{primitive} of {} nontrivial characters are primitive",
                            nontrivial.len()
                        )?;
                    }
                }
            }
        }
        Ok(())
    };
    if args.format == Format::Svg {
        return Err("output: the characters table has no svg rendering".to_string());
    }
    write(&mut out).map_err(|e| format!("output: {e}"))?;
    finish(out)
}

// ---- zeros ----

fn cmd_zeros(args: ZerosArgs) -> Result<(), String> {
    let chi = resolve_character(args.modulus, args.label)?;
    let list = find_zeros(&chi, args.tmax, &EvalParams::default())
        .map_err(|e| format!("zeros: {e}"))?;
    eprintln!("found {} zeros of {} up to t = {}", list.len(), list.character(), args.tmax);
    let mut out = open_out(&args.out)?;
    export_zeros(&list, &mut out).map_err(|e| format!("output: {e}"))?;
    finish(out)
}

// ---- reconstruct ----

fn build_reconstruction(args: &ReconstructArgs) -> Result<(DirichletCharacter, Reconstruction), String> {
    let chi = resolve_character(args.modulus, args.label)?;
    let convention = Convention::from(args.convention);
    let need_conjugate = convention == Convention::Symmetric && !chi.is_real();
    let (own, conj) = gather_zeros(&chi, need_conjugate, &args.zeros_file, args.tmax)?;
    let grid = args.grid.build()?;
    let r = reconstruct(&own, &grid, convention, args.weighted, conj.as_ref())
        .map_err(|e| format!("reconstruction: {e}"))?;
    Ok((chi, r))
}

fn write_summary(out: &mut dyn Write, r: &Reconstruction) -> io::Result<()> {
    let ids: Vec<String> = r.character_ids().iter().map(|id| id.to_string()).collect();
    writeln!(out, "reconstruction of {}", ids.join(", "))?;
    writeln!(out, "  convention: {}, weighted: {}", r.convention(), r.weighted())?;
    writeln!(out, "  zero terms: {}", r.zero_count())?;
    writeln!(
        out,
        "  grid: {} points, {}, x in [{}, {}]",
        r.grid().len(),
        r.grid().spacing(),
        r.grid().x_min(),
        r.grid().x_max()
    )?;
    let arg_max = |values: &[f64]| {
        let mut best = 0usize;
        for (i, v) in values.iter().enumerate() {
            if v.abs() > values[best].abs() {
                best = i;
            }
        }
        best
    };
    let i = arg_max(r.s_values());
    writeln!(out, "  max |S|: {:.6} at x = {:.4}", r.s_values()[i].abs(), r.grid().points()[i])?;
    let j = arg_max(r.t_values());
    writeln!(out, "  max |T|: {:.6e} at x = {:.4}", r.t_values()[j].abs(), r.grid().points()[j])
}

fn cmd_reconstruct(args: ReconstructArgs) -> Result<(), String> {
    let (_, r) = build_reconstruction(&args)?;
    let mut out = open_out(&args.out)?;
    match args.format {
        Format::Csv => write_csv(&r, &mut out).map_err(|e| format!("output: {e}"))?,
        Format::Svg => {
            let ids: Vec<String> = r.character_ids().iter().map(|id| id.to_string()).collect();
            let style =
                SvgStyle { title: format!("interference sums for {}", ids.join(", ")), show_t: true };
            out.write_all(emit_svg(&r, &[], &style).as_bytes())
                .map_err(|e| format!("output: {e}"))?;
        }
        Format::Report => write_summary(&mut out, &r).map_err(|e| format!("output: {e}"))?,
    }
    finish(out)
}

// ---- analyze ----

fn peaks_csv(out: &mut dyn Write, peaks: &[&Peak]) -> io::Result<()> {
    writeln!(out, "component,x,amplitude,pp,class,distance")?;
    for p in peaks {
        writeln!(
            out,
            "{},{},{},{},{},{}",
            p.component,
            p.x,
            p.amplitude,
            p.nearest_pp.map_or(String::new(), |v| v.to_string()),
            p.residue_class.map_or(String::new(), |v| v.to_string()),
            p.pp_distance
        )?;
    }
    Ok(())
}

fn cmd_analyze(args: AnalyzeArgs) -> Result<(), String> {
    let (chi, r) = build_reconstruction(&args.base)?;
    let prominence = scaled_prominence(args.prominence, &r)?;
    let tol = default_match_tol(args.base.grid.xmin, args.base.grid.xmax);
    let report =
        separation_report(&r, &chi, prominence, tol).map_err(|e| format!("analysis: {e}"))?;

    let mut out = open_out(&args.base.out)?;
    match args.base.format {
        Format::Report => {
            write!(out, "{report}\n{}", report.records()).map_err(|e| format!("output: {e}"))?;
        }
        Format::Csv => {
            let peaks: Vec<&Peak> = report.s_peaks().iter().chain(report.t_peaks()).collect();
            peaks_csv(&mut out, &peaks).map_err(|e| format!("output: {e}"))?;
        }
        Format::Svg => {
            let peaks: Vec<Peak> =
                report.s_peaks().iter().chain(report.t_peaks()).cloned().collect();
            let style = SvgStyle {
                title: format!("peak separation for {}", chi.id()),
                show_t: !chi.is_real(),
            };
            out.write_all(emit_svg(&r, &peaks, &style).as_bytes())
                .map_err(|e| format!("output: {e}"))?;
        }
    }
    finish(out)?;
    if !report.is_clean() {
        return Err(format!(
            "analysis: separation report for {} found {} violation(s)",
            chi.id(),
            report.violations().len()
        ));
    }
    Ok(())
}

// ---- dedekind ----

fn family_zero_lists(
    q: u64,
    files: &[PathBuf],
    tmax: f64,
) -> Result<BTreeMap<crate::characters::CharacterId, ZeroList>, String> {
    let chars = enumerate_characters(q).map_err(|e| format!("characters: {e}"))?;
    let mut required = BTreeSet::new();
    for chi in &chars {
        required.insert(
            chi.primitive_inducer().map_err(|e| format!("characters: {e}"))?.id(),
        );
    }
    let mut lists = BTreeMap::new();
    for path in files {
        let list = load_zero_file(path)?;
        if !required.contains(&list.character()) {
            return Err(format!(
                "zeros: {} holds zeros of {}, which the mod {q} family does not use",
                path.display(),
                list.character()
            ));
        }
        lists.insert(list.character(), list);
    }
    let params = EvalParams::default();
    for id in &required {
        if !lists.contains_key(id) {
            let chi = DirichletCharacter::from_label(id.modulus, id.label)
                .map_err(|e| format!("characters: {e}"))?;
            lists.insert(*id, find_zeros(&chi, tmax, &params).map_err(|e| format!("zeros: {e}"))?);
        }
    }
    Ok(lists)
}

fn cmd_dedekind(args: DedekindArgs) -> Result<(), String> {
    let lists = family_zero_lists(args.modulus, &args.zeros_file, args.tmax)?;
    let grid = args.grid.build()?;
    let r = dedekind_reconstruction(args.modulus, &lists, &grid)
        .map_err(|e| format!("reconstruction: {e}"))?;
    let prominence = scaled_prominence(args.prominence, &r)?;
    let tol = default_match_tol(args.grid.xmin, args.grid.xmax);
    let report = dedekind_survivor_check(&r, args.modulus, prominence, tol)
        .map_err(|e| format!("analysis: {e}"))?;

    let mut out = open_out(&args.out)?;
    match args.format {
        Format::Csv => write_csv(&r, &mut out).map_err(|e| format!("output: {e}"))?,
        Format::Report => {
            write!(out, "{report}\n{}", report.records()).map_err(|e| format!("output: {e}"))?;
        }
        Format::Svg => {
            let peaks: Vec<Peak> =
                report.survivor_peaks().iter().chain(report.ramified_peaks()).cloned().collect();
            let style = SvgStyle {
                title: format!("Dedekind factorization pattern mod {}", args.modulus),
                show_t: true,
            };
            out.write_all(emit_svg(&r, &peaks, &style).as_bytes())
                .map_err(|e| format!("output: {e}"))?;
        }
    }
    finish(out)?;
    if !report.is_clean() {
        return Err(format!(
            "analysis: the factorization pattern mod {} failed verification",
            args.modulus
        ));
    }
    Ok(())
}

// ---- figures ----

fn write_overlay_csv(
    out: &mut dyn Write,
    grid: &Grid,
    columns: &[(String, &[f64])],
    header: &[(String, String)],
) -> io::Result<()> {
    for (key, value) in header {
        writeln!(out, "# {key}: {value}")?;
    }
    let names: Vec<&str> = columns.iter().map(|(name, _)| name.as_str()).collect();
    writeln!(out, "x,{}", names.join(","))?;
    for i in 0..grid.len() {
        write!(out, "{}", grid.points()[i])?;
        for (_, values) in columns {
            write!(out, ",{}", values[i])?;
        }
        writeln!(out)?;
    }
    Ok(())
}

/// Builds a symmetric unweighted reconstruction for one primitive
/// character, computing the conjugate list when one is needed.
fn standard_reconstruction(
    modulus: u64,
    label: u64,
    tmax: f64,
    grid: &Grid,
) -> Result<(DirichletCharacter, Reconstruction), String> {
    let chi = resolve_character(modulus, label)?;
    let (own, conj) = gather_zeros(&chi, !chi.is_real(), &[], tmax)?;
    let r = reconstruct(&own, grid, Convention::Symmetric, false, conj.as_ref())
        .map_err(|e| format!("reconstruction: {e}"))?;
    Ok((chi, r))
}

fn cmd_figure(args: FigureArgs) -> Result<(), String> {
    let grid = args.grid.build()?;
    let tol = default_match_tol(args.grid.xmin, args.grid.xmax);
    match args.id {
        1 => {
            let (chi, r3) = standard_reconstruction(3, 2, args.tmax, &grid)?;
            let (_, r1) = standard_reconstruction(1, 1, args.tmax, &grid)?;
            let prominence = scaled_prominence(DEFAULT_PROMINENCE, &r3)?;
            let report = separation_report(&r3, &chi, prominence, tol)
                .map_err(|e| format!("analysis: {e}"))?;
            let mut out = open_out(&args.out)?;
            match args.format {
                Format::Svg => {
                    let curves = [
                        CurveSpec { label: "S for 3.2".to_string(), color: S_COLOR, values: r3.s_values() },
                        CurveSpec { label: "S for 1.1".to_string(), color: OVERLAY_COLOR, values: r1.s_values() },
                    ];
                    let rendered = svg::render(
                        &grid,
                        &curves,
                        report.s_peaks(),
                        "primes mod 3 against the zeta pattern",
                    );
                    out.write_all(rendered.as_bytes()).map_err(|e| format!("output: {e}"))?;
                }
                _ => {
                    let header = [
                        ("figure".to_string(), "1".to_string()),
                        ("character_ids".to_string(), "3.2,1.1".to_string()),
                        (
                            "zero_counts".to_string(),
                            format!("{},{}", r3.zero_count(), r1.zero_count()),
                        ),
                        ("convention".to_string(), "symmetric".to_string()),
                        ("weighted".to_string(), "false".to_string()),
                    ];
                    let columns = [
                        ("S[3.2]".to_string(), r3.s_values()),
                        ("S[1.1]".to_string(), r1.s_values()),
                    ];
                    write_overlay_csv(&mut out, &grid, &columns, &header)
                        .map_err(|e| format!("output: {e}"))?;
                }
            }
            finish(out)?;
            if !report.is_clean() {
                return Err(format!(
                    "analysis: figure 1 verification failed with {} violation(s)",
                    report.violations().len()
                ));
            }
            Ok(())
        }
        2 => figure_single_character(&args, &grid, tol, 4, 3, "primes mod 4 split by residue class"),
        3 => figure_single_character(&args, &grid, tol, 5, 4, "primes mod 5 under the quadratic character"),
        4 => {
            let (chi, r) = standard_reconstruction(5, 2, args.tmax, &grid)?;
            let (_, r_conj) = standard_reconstruction(5, 3, args.tmax, &grid)?;
            let prominence = scaled_prominence(COMPLEX_PAIR_PROMINENCE, &r)?;
            let report = separation_report(&r, &chi, prominence, tol)
                .map_err(|e| format!("analysis: {e}"))?;
            let residual =
                cancellation_residual(&r, &r_conj).map_err(|e| format!("analysis: {e}"))?;
            let mut out = open_out(&args.out)?;
            match args.format {
                Format::Svg => {
                    let peaks: Vec<Peak> =
                        report.s_peaks().iter().chain(report.t_peaks()).cloned().collect();
                    let style = SvgStyle {
                        title: "conjugate pair mod 5: real and imaginary traces".to_string(),
                        show_t: true,
                    };
                    out.write_all(emit_svg(&r, &peaks, &style).as_bytes())
                        .map_err(|e| format!("output: {e}"))?;
                }
                _ => write_csv(&r, &mut out).map_err(|e| format!("output: {e}"))?,
            }
            finish(out)?;
            if !report.is_clean() {
                return Err(format!(
                    "analysis: figure 4 verification failed with {} violation(s)",
                    report.violations().len()
                ));
            }
            if !(residual < RESIDUAL_BOUND) {
                return Err(format!(
                    "analysis: figure 4 pair cancellation residual {residual:e} \
                     is not below {RESIDUAL_BOUND:e}"
                ));
            }
            Ok(())
        }
        5 => {
            let lists = family_zero_lists(5, &[], args.tmax)?;
            let r = dedekind_reconstruction(5, &lists, &grid)
                .map_err(|e| format!("reconstruction: {e}"))?;
            let prominence = scaled_prominence(DEFAULT_PROMINENCE, &r)?;
            let report = dedekind_survivor_check(&r, 5, prominence, tol)
                .map_err(|e| format!("analysis: {e}"))?;
            let mut out = open_out(&args.out)?;
            match args.format {
                Format::Svg => {
                    let peaks: Vec<Peak> = report
                        .survivor_peaks()
                        .iter()
                        .chain(report.ramified_peaks())
                        .cloned()
                        .collect();
                    let style = SvgStyle {
                        title: "Dedekind factorization pattern mod 5".to_string(),
                        show_t: true,
                    };
                    out.write_all(emit_svg(&r, &peaks, &style).as_bytes())
                        .map_err(|e| format!("output: {e}"))?;
                }
                _ => write_csv(&r, &mut out).map_err(|e| format!("output: {e}"))?,
            }
            finish(out)?;
            if !report.is_clean() {
                return Err("analysis: figure 5 factorization verification failed".to_string());
            }
            Ok(())
        }
        _ => unreachable!("clap range keeps id in 1..=5"),
    }
}

fn figure_single_character(
    args: &FigureArgs,
    grid: &Grid,
    tol: f64,
    modulus: u64,
    label: u64,
    title: &str,
) -> Result<(), String> {
    let (chi, r) = standard_reconstruction(modulus, label, args.tmax, grid)?;
    let prominence = scaled_prominence(DEFAULT_PROMINENCE, &r)?;
    let report =
        separation_report(&r, &chi, prominence, tol).map_err(|e| format!("analysis: {e}"))?;
    let mut out = open_out(&args.out)?;
    match args.format {
        Format::Svg => {
            let style = SvgStyle { title: title.to_string(), show_t: false };
            out.write_all(emit_svg(&r, report.s_peaks(), &style).as_bytes())
                .map_err(|e| format!("output: {e}"))?;
        }
        _ => write_csv(&r, &mut out).map_err(|e| format!("output: {e}"))?,
    }
    finish(out)?;
    if !report.is_clean() {
        return Err(format!(
            "analysis: figure verification for {} failed with {} violation(s)",
            chi.id(),
            report.violations().len()
        ));
    }
    Ok(())
}

// ---- tests ----
