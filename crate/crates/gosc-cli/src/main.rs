//! `gosc` - verification tables and reports for the oscillatory-group
//! treatment of the quantum harmonic oscillator.
//!
//! Subcommands: `verify` (run check suites, write a JSON report), `spectrum`
//! (energy table), `kernel` (solution-kernel grid, optionally with the
//! residual between its two evaluation routes), and `synthesize` (build a
//! solution grid from a coefficient file and report its equation residual
//! and norm identity).

mod config;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use num_complex::Complex64 as C64;
use serde::Serialize;

use gosc_core::lambda_rep::{FockCoeffs, QuadratureRule};
use gosc_core::nim::{
    hstate_kernel, schrodinger_residual, stationary_spectrum, synthesize, HStateLabel, KernelPath,
    USpaceConvention,
};
use gosc_core::oscillator::GridField;
use gosc_core::report::Report;
use gosc_core::suites::{run_suite, SUITE_NAMES};

use config::RunConfig;

#[derive(Parser)]
#[command(name = "gosc", version, about = "Oscillatory-group verification tools for the quantum harmonic oscillator")]
struct Cli {
    /// Path to the JSON run configuration (defaults are built in).
    #[arg(long, global = true, env = "GOSC_CONFIG")]
    config: Option<PathBuf>,

    /// Output directory; overrides the configured one.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Commands,
}

#[derive(Subcommand)]
enum Commands {
    /// Run verification suites and write a JSON report.
    Verify {
        /// Suite to run (repeatable); defaults to all suites.
        #[arg(long = "suite")]
        suites: Vec<String>,
    },
    /// Write the stationary energy table as CSV.
    Spectrum {
        /// Highest level to tabulate (must not exceed the truncation).
        #[arg(long, default_value_t = 32)]
        nmax: usize,
    },
    /// Write the solution kernel over the configured grid as CSV.
    Kernel {
        /// Kernel label as RE,IM.
        #[arg(long, value_parser = parse_complex, default_value = "0,0")]
        u: C64,
        /// Evaluation route; `both` also writes the path-residual file.
        #[arg(long, value_enum, default_value_t = PathChoice::Correspondence)]
        path: PathChoice,
    },
    /// Synthesize a solution grid from a coefficient file.
    Synthesize {
        /// Text file with one complex coefficient per line (RE,IM or RE).
        coeff_file: PathBuf,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum PathChoice {
    Correspondence,
    Cocycle,
    Both,
}

fn parse_complex(s: &str) -> Result<C64, String> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    match parts.as_slice() {
        [re] => re.parse().map(|r| C64::new(r, 0.0)).map_err(|e| e.to_string()),
        [re, im] => {
            let re: f64 = re.parse().map_err(|e: std::num::ParseFloatError| e.to_string())?;
            let im: f64 = im.parse().map_err(|e: std::num::ParseFloatError| e.to_string())?;
            Ok(C64::new(re, im))
        }
        _ => Err("expected RE or RE,IM".into()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli) {
        Ok(all_pass) => {
            if all_pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

fn dispatch(cli: Cli) -> Result<bool> {
    let cfg = RunConfig::load(cli.config.as_deref())?;
    let out_dir = cli.out.unwrap_or_else(|| cfg.out_dir.clone());
    fs::create_dir_all(&out_dir)
        .with_context(|| format!("creating output directory {}", out_dir.display()))?;

    match cli.command {
        Commands::Verify { suites } => cmd_verify(&cfg, &out_dir, &suites),
        Commands::Spectrum { nmax } => cmd_spectrum(&cfg, &out_dir, nmax),
        Commands::Kernel { u, path } => cmd_kernel(&cfg, &out_dir, u, path),
        Commands::Synthesize { coeff_file } => cmd_synthesize(&cfg, &out_dir, &coeff_file),
    }
}

#[derive(Serialize)]
struct VerifyReport<'a> {
    overall_pass: bool,
    suites: &'a [Report],
}

fn cmd_verify(cfg: &RunConfig, out_dir: &Path, requested: &[String]) -> Result<bool> {
    let mut names: Vec<String> = if requested.is_empty() {
        SUITE_NAMES.iter().map(|s| s.to_string()).collect()
    } else {
        requested.to_vec()
    };
    for name in &names {
        if !SUITE_NAMES.contains(&name.as_str()) {
            bail!("unknown suite {name:?}; valid suites: {}", SUITE_NAMES.join(", "));
        }
    }
    // report assembly is ordered by suite name
    names.sort();
    names.dedup();

    let mut reports = Vec::new();
    for name in &names {
        let params = cfg.suite_params(name)?;
        let report = run_suite(name, &params).map_err(|e| anyhow::anyhow!("suite {name}: {e}"))?;
        for c in &report.checks {
            println!(
                "[{}] {:<48} measured {:>12.5e} tol {:>9.1e} {}",
                name,
                c.name,
                c.measured,
                c.tolerance,
                if c.pass { "PASS" } else { "FAIL" }
            );
        }
        reports.push(report);
    }

    let overall = reports.iter().all(|r| r.pass());
    let json = serde_json::to_string_pretty(&VerifyReport { overall_pass: overall, suites: &reports })?;
    let path = out_dir.join("verify_report.json");
    fs::write(&path, json).with_context(|| format!("writing {}", path.display()))?;
    println!(
        "{} checks across {} suites -> {} ({})",
        reports.iter().map(|r| r.checks.len()).sum::<usize>(),
        reports.len(),
        if overall { "PASS" } else { "FAIL" },
        path.display()
    );
    Ok(overall)
}

fn cmd_spectrum(cfg: &RunConfig, out_dir: &Path, nmax: usize) -> Result<bool> {
    if nmax > cfg.truncation {
        bail!("nmax {} exceeds the truncation {}", nmax, cfg.truncation);
    }
    let phys = cfg.phys_params()?;
    let rule = QuadratureRule::new(cfg.quadrature_points).map_err(|e| anyhow::anyhow!("{e}"))?;
    let states = stationary_spectrum(nmax, &phys, cfg.truncation, &rule)
        .map_err(|e| anyhow::anyhow!("{e}"))?;

    let hw = phys.hbar * phys.omega;
    let mut csv = String::from("n,energy,energy_over_hbar_omega\n");
    for st in &states {
        csv.push_str(&format!("{},{},{}\n", st.n, st.energy, st.energy / hw));
    }
    let path = out_dir.join("spectrum.csv");
    fs::write(&path, csv).with_context(|| format!("writing {}", path.display()))?;
    println!("wrote {} levels to {}", states.len(), path.display());
    Ok(true)
}

fn cmd_kernel(cfg: &RunConfig, out_dir: &Path, u: C64, path_choice: PathChoice) -> Result<bool> {
    let phys = cfg.phys_params()?;
    let spec = cfg.grid_spec();
    let label = HStateLabel::oscillator(u);

    let primary = match path_choice {
        PathChoice::Cocycle => KernelPath::Cocycle,
        _ => KernelPath::Correspondence,
    };
    let field = GridField::sample(&spec, |t, x| hstate_kernel(t, x, &label, &phys, primary))
        .map_err(|e| anyhow::anyhow!("{e}"))?;

    let mut csv = String::from("t,x,re,im\n");
    for i in 0..field.nt() {
        for j in 0..field.nx() {
            let v = field.value(i, j);
            csv.push_str(&format!("{},{},{},{}\n", field.t(i), field.x(j), v.re, v.im));
        }
    }
    let csv_path = out_dir.join("kernel.csv");
    fs::write(&csv_path, csv).with_context(|| format!("writing {}", csv_path.display()))?;
    println!(
        "wrote {} kernel samples to {}",
        field.nt() * field.nx(),
        csv_path.display()
    );

    if path_choice == PathChoice::Both {
        let other = GridField::sample(&spec, |t, x| {
            hstate_kernel(t, x, &label, &phys, KernelPath::Cocycle)
        })
        .map_err(|e| anyhow::anyhow!("{e}"))?;
        let scale = field.max_abs_interior().max(f64::MIN_POSITIVE);
        let mut res_csv = String::from("t,x,abs_diff,rel_diff\n");
        let mut worst = 0.0f64;
        for i in 0..field.nt() {
            for j in 0..field.nx() {
                let d = (field.value(i, j) - other.value(i, j)).norm();
                worst = worst.max(d / scale);
                res_csv.push_str(&format!(
                    "{},{},{},{}\n",
                    field.t(i),
                    field.x(j),
                    d,
                    d / scale
                ));
            }
        }
        let res_path = out_dir.join("kernel_path_residual.csv");
        fs::write(&res_path, res_csv).with_context(|| format!("writing {}", res_path.display()))?;
        println!("path residual max {worst:.3e} -> {}", res_path.display());
    }
    Ok(true)
}

#[derive(Serialize)]
struct SynthesizeReport {
    coefficients: usize,
    schrodinger_residual: f64,
    residual_tolerance: f64,
    norm_x: f64,
    norm_phi_scaled: f64,
    norm_identity_rel_err: f64,
    norm_tolerance: f64,
    quadrature_warning: bool,
    pass: bool,
}

fn cmd_synthesize(cfg: &RunConfig, out_dir: &Path, coeff_file: &Path) -> Result<bool> {
    let text = fs::read_to_string(coeff_file)
        .with_context(|| format!("reading coefficient file {}", coeff_file.display()))?;
    let coeffs = parse_coefficients(&text)?;
    if coeffs.len() > cfg.truncation + 1 {
        bail!(
            "coefficient file has {} entries; the truncation admits at most {}",
            coeffs.len(),
            cfg.truncation + 1
        );
    }

    let phys = cfg.phys_params()?;
    let conv = USpaceConvention::from_phys(&phys);
    let rep = conv.effective_rep(phys.hbar, cfg.truncation).map_err(|e| anyhow::anyhow!("{e}"))?;
    let phi = FockCoeffs::new(coeffs, rep).map_err(|e| anyhow::anyhow!("{e}"))?;
    let rule = QuadratureRule::new(cfg.quadrature_points).map_err(|e| anyhow::anyhow!("{e}"))?;

    let spec = cfg.grid_spec();
    let warned = cfg.quadrature_points < cfg.truncation + 2;
    let field = GridField::sample(&spec, |t, x| {
        synthesize(&phi, t, x, &phys, &rule)
            .expect("rep parameters match by construction")
            .value
    })
    .map_err(|e| anyhow::anyhow!("{e}"))?;

    let mut csv = String::from("t,x,re,im\n");
    for i in 0..field.nt() {
        for j in 0..field.nx() {
            let v = field.value(i, j);
            csv.push_str(&format!("{},{},{},{}\n", field.t(i), field.x(j), v.re, v.im));
        }
    }
    let csv_path = out_dir.join("synthesize.csv");
    fs::write(&csv_path, csv).with_context(|| format!("writing {}", csv_path.display()))?;

    // equation residual on the synthesized grid
    let residual = schrodinger_residual(&field, &phys).map_err(|e| anyhow::anyhow!("{e}"))?;

    // norm identity |psi|^2_x = (omega / 2 pi) |phi|^2_Q at the grid midpoint
    let t_mid = 0.5 * (spec.t_min + spec.t_max);
    let mut norm_x = 0.0;
    for (x, w) in rule.real_line(phys.mass * phys.omega / phys.hbar) {
        norm_x += w
            * synthesize(&phi, t_mid, x, &phys, &rule)
                .map_err(|e| anyhow::anyhow!("{e}"))?
                .value
                .norm_sqr();
    }
    let norm_q = rule
        .integrate_plane(
            |uq| {
                let v = phi.eval_poly(uq);
                v.conj() * v
            },
            conv.gauss_rate(),
        )
        .re;
    let norm_phi_scaled = phys.omega / (2.0 * std::f64::consts::PI) * norm_q;
    let norm_err = (norm_x - norm_phi_scaled).abs() / norm_phi_scaled.max(f64::MIN_POSITIVE);

    let report = SynthesizeReport {
        coefficients: phi.coeffs.len(),
        schrodinger_residual: residual,
        residual_tolerance: 1e-6,
        norm_x,
        norm_phi_scaled,
        norm_identity_rel_err: norm_err,
        norm_tolerance: 1e-6,
        quadrature_warning: warned,
        pass: residual <= 1e-6 && norm_err <= 1e-6,
    };
    let report_path = out_dir.join("synthesize_report.json");
    fs::write(&report_path, serde_json::to_string_pretty(&report)?)
        .with_context(|| format!("writing {}", report_path.display()))?;
    println!(
        "residual {residual:.3e}, norm identity error {norm_err:.3e} -> {}",
        report_path.display()
    );
    Ok(report.pass)
}

fn parse_coefficients(text: &str) -> Result<Vec<C64>> {
    let mut coeffs = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let parts: Vec<&str> = line
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|s| !s.is_empty())
            .collect();
        let parsed: Result<Vec<f64>, _> = parts.iter().map(|s| s.parse::<f64>()).collect();
        let nums = parsed.with_context(|| format!("line {}: cannot parse {line:?}", lineno + 1))?;
        match nums.as_slice() {
            [re] => coeffs.push(C64::new(*re, 0.0)),
            [re, im] => coeffs.push(C64::new(*re, *im)),
            _ => bail!("line {}: expected RE or RE,IM, got {line:?}", lineno + 1),
        }
    }
    if coeffs.is_empty() {
        bail!("coefficient file contains no coefficients");
    }
    Ok(coeffs)
}
