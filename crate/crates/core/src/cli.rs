//! Command-line driver: catalog verification, dimension tables, the 𝔰𝔬(7)
//! model check and raw data dumps.
//!
//! Every command writes to caller-supplied sinks and returns an exit code:
//! 0 when everything holds, 1 on a false verdict or table mismatch, 2 on
//! parse, bound or `NoDelta` errors.

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;
use serde::Serialize;

use crate::catalog::{default_catalog, SpaceKind, SpaceSpec, DEFAULT_MAX_RANK};
use crate::chevalley::{ChevalleyAlgebra, IdentityReport, StructureConstants};
use crate::error::{LieError, Result};
use crate::g2_model::{g2_report, G2Report};
use crate::root_system::{RootSystem, RootSystemType};
use crate::wolf::{full_report, SubmanifoldModel, VerificationReport, WolfDecomposition};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FALSE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

/// Triples drawn for the sampled Jacobi check.
pub const JACOBI_SAMPLES: usize = 10_000;

/// Algebras up to this rank get the exhaustive Jacobi check.
pub const EXHAUSTIVE_JACOBI_RANK: usize = 4;

#[derive(Debug, Parser)]
#[command(name = "wolfspace", version, about = "Exact verification of quaternionic Kähler symmetric space constructions")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub common: CommonArgs,
}

#[derive(Debug, Clone, Args)]
pub struct CommonArgs {
    /// Also write the JSON report to this file.
    #[arg(long, global = true, value_name = "PATH")]
    pub json: Option<PathBuf>,
    /// Print human-readable tables instead of JSON.
    #[arg(long, global = true)]
    pub pretty: bool,
    /// Seed for sampled Jacobi checks.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Largest classical rank accepted.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_RANK)]
    pub max_rank: usize,
}

impl Default for CommonArgs {
    fn default() -> Self {
        CommonArgs {
            json: None,
            pretty: false,
            seed: 0,
            max_rank: DEFAULT_MAX_RANK,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run the full pipeline on one or more spaces.
    Verify {
        /// Space names such as `SU(5)`, `Spin(9)`, `EIX` or types such as `B4`.
        spaces: Vec<String>,
        #[arg(long = "space", value_name = "NAME")]
        space: Vec<String>,
        /// Verify the default catalog.
        #[arg(long)]
        all: bool,
    },
    /// Computed dimensions against the published tables.
    Tables,
    /// Verify the 𝔤₂ ⊂ 𝔰𝔬(7) matrix model.
    #[command(name = "g2-check")]
    G2Check {
        /// Print the second fundamental form on the basis of 𝔥.
        #[arg(long)]
        emit_sff: bool,
        /// Print the bracket tables, printed value against computed.
        #[arg(long)]
        emit_brackets: bool,
    },
    /// Root system as JSON.
    #[command(name = "dump-roots")]
    DumpRoots { name: String },
    /// Structure constants as JSON `{alpha, gamma, n}` triples.
    #[command(name = "dump-constants")]
    DumpConstants { name: String },
}

/// Dispatches a parsed command line.
pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let c = &cli.common;
    match &cli.command {
        Command::Verify { spaces, space, all } => {
            let names: Vec<String> = spaces.iter().chain(space).cloned().collect();
            cmd_verify(&names, *all, c, out, err)
        }
        Command::Tables => cmd_tables(c, out, err),
        Command::G2Check {
            emit_sff,
            emit_brackets,
        } => cmd_g2(*emit_sff, *emit_brackets, c, out, err),
        Command::DumpRoots { name } => cmd_dump_roots(name, c, out, err),
        Command::DumpConstants { name } => cmd_dump_constants(name, c, out, err),
    }
}

fn exit_code_for(e: &LieError) -> i32 {
    match e {
        LieError::Internal(_) | LieError::Structural(_) => EXIT_FALSE,
        _ => EXIT_INPUT,
    }
}

fn report_error(e: &LieError, err: &mut dyn Write) -> i32 {
    let _ = writeln!(err, "error: {e}");
    exit_code_for(e)
}

/// Writes `value` as JSON to `--json` and, unless `--pretty`, to `out`.
fn emit_json<T: Serialize>(value: &T, c: &CommonArgs, out: &mut dyn Write, err: &mut dyn Write) -> bool {
    let text = serde_json::to_string_pretty(value).expect("reports serialize");
    if let Some(path) = &c.json {
        if let Err(e) = std::fs::write(path, format!("{text}\n")) {
            let _ = writeln!(err, "error: writing {}: {e}", path.display());
            return false;
        }
    }
    if !c.pretty {
        let _ = writeln!(out, "{text}");
    }
    true
}

fn wolf_decomposition(ty: RootSystemType) -> Result<WolfDecomposition> {
    WolfDecomposition::new(ChevalleyAlgebra::new(RootSystem::new(ty)?)?)
}

/// Pipeline report plus the engine identity checks for one space.
#[derive(Clone, Debug, Serialize)]
pub struct SpaceResult {
    #[serde(flatten)]
    pub report: VerificationReport,
    pub expected_dim_m: usize,
    pub expected_dim_hp: Option<usize>,
    pub engine: Vec<IdentityReport>,
}

impl SpaceResult {
    pub fn all_hold(&self) -> bool {
        self.report.all_hold()
            && self.engine.iter().all(IdentityReport::holds)
            && self.report.dims.dim_M == self.expected_dim_m
            && self.expected_dim_hp.is_none_or(|d| d == self.report.dims.dim_Hp)
    }
}

/// Full verification of one space.
pub fn verify_space(spec: &SpaceSpec, seed: u64) -> Result<SpaceResult> {
    let wd = wolf_decomposition(spec.root_type)?;
    let report = full_report(&spec.name(), &wd)?;
    let alg = wd.algebra();
    let jacobi = if spec.root_type.rank() <= EXHAUSTIVE_JACOBI_RANK {
        alg.verify_jacobi_exhaustive()?
    } else {
        alg.verify_jacobi_sampled(JACOBI_SAMPLES, seed)?
    };
    Ok(SpaceResult {
        report,
        expected_dim_m: spec.expected_dim_m(),
        expected_dim_hp: spec.expected_dim_hp(),
        engine: vec![alg.verify_antisymmetry()?, jacobi],
    })
}

pub fn cmd_verify(names: &[String], all: bool, c: &CommonArgs, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let mut specs = if all { default_catalog() } else { Vec::new() };
    for n in names {
        match SpaceSpec::parse(n, c.max_rank) {
            Ok(s) => specs.push(s),
            Err(e) => return report_error(&e, err),
        }
    }
    if specs.is_empty() {
        let _ = writeln!(err, "error: no spaces given (use --all or name a space)");
        return EXIT_INPUT;
    }
    let results: Vec<Result<SpaceResult>> = specs.par_iter().map(|s| verify_space(s, c.seed)).collect();
    let mut reports = Vec::new();
    for (spec, r) in specs.iter().zip(results) {
        match r {
            Ok(r) => reports.push(r),
            Err(e) => {
                let _ = writeln!(err, "{}: error: {e}", spec.name());
                return exit_code_for(&e);
            }
        }
    }
    if !emit_json(&reports, c, out, err) {
        return EXIT_INPUT;
    }
    if c.pretty {
        let _ = writeln!(
            out,
            "{:<10} {:<4} {:>6} {:>6} {:>9} {:>9} {:>7}  verdict",
            "space", "type", "dim M", "dim N", "dim H(p)", "dim K(p)", "deltas"
        );
        for r in &reports {
            let d = &r.report.dims;
            let _ = writeln!(
                out,
                "{:<10} {:<4} {:>6} {:>6} {:>9} {:>9} {:>7}  {}",
                r.report.space,
                r.report.root_system,
                d.dim_M,
                d.dim_N,
                d.dim_Hp,
                d.dim_Kp,
                r.report.deltas_checked,
                if r.all_hold() { "ok" } else { "FALSE" }
            );
        }
    }
    let mut code = EXIT_OK;
    for r in reports.iter().filter(|r| !r.all_hold()) {
        code = EXIT_FALSE;
        let failed: Vec<&str> = r.report.verdicts.iter().filter(|(_, &v)| !v).map(|(k, _)| k.as_str()).collect();
        let _ = writeln!(err, "{}: false verdicts {:?}", r.report.space, failed);
    }
    code
}

/// One row of the dimension tables.
#[derive(Clone, Debug, Serialize)]
pub struct TableRow {
    pub space: String,
    pub group: String,
    pub dim_m: usize,
    pub expected_dim_m: usize,
    pub dim_n: Option<usize>,
    pub dim_hp: Option<usize>,
    pub expected_dim_hp: Option<usize>,
    pub hp: String,
    pub dim_kp: Option<usize>,
    pub matches: bool,
}

/// The default catalog followed by `ℍP²`, `ℍP³`, `ℍP⁴`.
pub fn table_spaces() -> Vec<SpaceSpec> {
    let mut specs = default_catalog();
    specs.extend((3..=5).map(|n| {
        SpaceSpec::from_kind(SpaceKind::QuaternionicProjective(n), DEFAULT_MAX_RANK).expect("within bounds")
    }));
    specs
}

pub fn table_row(spec: &SpaceSpec) -> Result<TableRow> {
    let wd = wolf_decomposition(spec.root_type)?;
    let dim_m = wd.m().dim();
    let sub = match wd.choose_delta() {
        Ok(d) => Some(SubmanifoldModel::build(&wd, &d)?.dims(&wd)),
        Err(LieError::NoDelta { .. }) => None,
        Err(e) => return Err(e),
    };
    let dim_hp = sub.map(|d| d.dim_Hp);
    Ok(TableRow {
        space: spec.name(),
        group: spec.group(),
        dim_m,
        expected_dim_m: spec.expected_dim_m(),
        dim_n: sub.map(|d| d.dim_N),
        dim_hp,
        expected_dim_hp: spec.expected_dim_hp(),
        hp: spec.hp_label(),
        dim_kp: sub.map(|d| d.dim_Kp),
        matches: dim_m == spec.expected_dim_m()
            && dim_hp == spec.expected_dim_hp()
            && sub.is_none_or(|d| 2 * d.dim_N == d.dim_M),
    })
}

pub fn cmd_tables(c: &CommonArgs, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let specs = table_spaces();
    let rows: Result<Vec<TableRow>> = specs.par_iter().map(table_row).collect();
    let rows = match rows {
        Ok(r) => r,
        Err(e) => return report_error(&e, err),
    };
    if !emit_json(&rows, c, out, err) {
        return EXIT_INPUT;
    }
    let opt = |x: Option<usize>| x.map_or("-".to_string(), |v| v.to_string());
    if c.pretty {
        let _ = writeln!(
            out,
            "{:<10} {:<8} {:>6} {:>6} {:>9} {:>9}  {:<16} ok",
            "space", "group", "dim M", "dim N", "dim H(p)", "dim K(p)", "H(p)"
        );
        for r in &rows {
            let _ = writeln!(
                out,
                "{:<10} {:<8} {:>6} {:>6} {:>9} {:>9}  {:<16} {}",
                r.space,
                r.group,
                r.dim_m,
                opt(r.dim_n),
                opt(r.dim_hp),
                opt(r.dim_kp),
                r.hp,
                if r.matches { "yes" } else { "NO" }
            );
        }
    }
    let mut code = EXIT_OK;
    for r in rows.iter().filter(|r| !r.matches) {
        code = EXIT_FALSE;
        let _ = writeln!(
            err,
            "{}: dim M {} (expected {}), dim H(p) {} (expected {})",
            r.space,
            r.dim_m,
            r.expected_dim_m,
            opt(r.dim_hp),
            opt(r.expected_dim_hp)
        );
    }
    code
}

pub fn write_bracket_table(report: &G2Report, out: &mut dyn Write) {
    for (title, rows) in [
        ("[h, Z_delta]", &report.sff.tangent_brackets),
        ("[h, T_aL]", &report.sff.nine_brackets),
    ] {
        let _ = writeln!(out, "{title}");
        for g in rows.iter() {
            let mark = if g.matches {
                String::new()
            } else {
                format!("   (printed {})", g.printed)
            };
            let _ = writeln!(out, "  [{}, {}] = {}{}", g.x, g.y, g.computed, mark);
        }
    }
}

pub fn write_sff(report: &G2Report, out: &mut dyn Write) {
    let _ = writeln!(out, "h(X, Y) = pi_N([X, [Y, Z_delta]])");
    for v in &report.sff_values {
        let _ = writeln!(out, "  h({}, {}) = {}", v.x, v.y, v.value);
    }
}

pub fn cmd_g2(emit_sff: bool, emit_brackets: bool, c: &CommonArgs, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let report = match wolf_decomposition(RootSystemType::g2()).and_then(|wd| g2_report(&wd)) {
        Ok(r) => r,
        Err(e) => return report_error(&e, err),
    };
    let text_mode = c.pretty || emit_sff || emit_brackets;
    let c2 = CommonArgs {
        pretty: text_mode,
        ..c.clone()
    };
    if !emit_json(&report, &c2, out, err) {
        return EXIT_INPUT;
    }
    if emit_brackets || c.pretty {
        write_bracket_table(&report, out);
    }
    if emit_sff || c.pretty {
        write_sff(&report, out);
    }
    if c.pretty {
        let _ = writeln!(out, "closure: {}", report.closure.holds);
        let _ = writeln!(out, "printed eigen-identities: {}", report.root_data.holds);
        let _ = writeln!(out, "corrected eigen-identities: {}", report.root_data.corrected_hold);
        let _ = writeln!(out, "not totally geodesic: {}", report.not_totally_geodesic);
        let _ = writeln!(out, "cross-model: {}", report.cross_validation.holds);
    }
    if report.all_hold() {
        return EXIT_OK;
    }
    if let Some(g) = report.first_mismatch() {
        let _ = writeln!(err, "bracket mismatch: [{}, {}] printed {}, computed {}", g.x, g.y, g.printed, g.computed);
    }
    if let Some(bad) = report.root_data.printed.iter().find(|e| !e.holds) {
        let _ = writeln!(err, "eigen-identity fails: {}", bad.identity);
    }
    EXIT_FALSE
}

fn resolve_type(name: &str, max_rank: usize) -> Result<RootSystemType> {
    name.parse::<RootSystemType>()
        .or_else(|_| SpaceSpec::parse(name, max_rank).map(|s| s.root_type))
}

pub fn cmd_dump_roots(name: &str, c: &CommonArgs, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match resolve_type(name, c.max_rank).and_then(RootSystem::new) {
        Ok(rs) => {
            let doc = rs.to_document();
            if c.pretty {
                for r in rs.roots() {
                    let _ = writeln!(out, "{r}");
                }
            }
            if emit_json(&doc, c, out, err) {
                EXIT_OK
            } else {
                EXIT_INPUT
            }
        }
        Err(e) => report_error(&e, err),
    }
}

pub fn cmd_dump_constants(name: &str, c: &CommonArgs, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let built = resolve_type(name, c.max_rank)
        .and_then(RootSystem::new)
        .and_then(|rs| Ok((StructureConstants::build(&rs)?, rs)));
    match built {
        Ok((sc, rs)) => {
            let entries = sc.entries(&rs);
            if c.pretty {
                for e in &entries {
                    let _ = writeln!(out, "N[{:?}, {:?}] = {}", e.alpha, e.gamma, e.n);
                }
            }
            if emit_json(&entries, c, out, err) {
                EXIT_OK
            } else {
                EXIT_INPUT
            }
        }
        Err(e) => report_error(&e, err),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String, String) {
        let cli = Cli::try_parse_from(std::iter::once("wolfspace").chain(args.iter().copied())).unwrap();
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run(&cli, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn verify_sp_is_input_error() {
        let (code, _, err) = run_args(&["verify", "Sp(4)"]);
        assert_eq!(code, EXIT_INPUT);
        assert!(err.contains("no long root"), "{err}");
    }

    #[test]
    fn verify_small_space() {
        let (code, out, _) = run_args(&["verify", "--space", "SU(4)"]);
        assert_eq!(code, EXIT_OK);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v[0]["dims"]["dim_M"], 8);
    }

    #[test]
    fn unknown_space() {
        assert_eq!(run_args(&["verify", "XYZ"]).0, EXIT_INPUT);
        assert_eq!(run_args(&["verify"]).0, EXIT_INPUT);
        assert_eq!(run_args(&["dump-roots", "Q7"]).0, EXIT_INPUT);
    }

    #[test]
    fn dump_roots_g2() {
        let (code, out, _) = run_args(&["dump-roots", "G2"]);
        assert_eq!(code, EXIT_OK);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["roots"].as_array().unwrap().len(), 12);
    }
}
