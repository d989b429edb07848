mod render;

use anyhow::Context;
use clap::{Parser, Subcommand};
use num_complex::Complex64;
use render::{emit, join, set, tuple, OutputFormat, Table};
use serde::{Deserialize, Serialize};
use std::path::PathBuf;
use std::process::ExitCode;
use strata_core::certify::{
    certify_g_powers, certify_natural, sub_vanishing_sweep, CertificateRecord, CertifyOptions, SweepReport,
};
use strata_core::numerics::{mu_coeffs, AffinePoint, CurveInstance, ZERO_TOL};
use strata_core::partition::{all_profiles, natural_k, truncate_upper};
use strata_core::schur::{schur_in_T_with, DEFAULT_MAX_EXPAND_GENUS};
use strata_core::semigroup::{gaps, monomial_basis, young_diagram, CurveSignature};
use strata_core::Error;

#[derive(Parser)]
#[command(name = "strata", version, about = "Semigroup strata, Schur expansions and vanishing certificates for y^r = f(x)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[arg(long, value_enum, default_value = "table", global = true)]
    format: OutputFormat,
    /// Largest genus for symbolic expansion
    #[arg(long, default_value_t = DEFAULT_MAX_EXPAND_GENUS, global = true)]
    max_expand_genus: usize,
    #[arg(long, default_value_t = 3, global = true)]
    trials: usize,
    #[arg(long, default_value_t = 0, global = true)]
    seed: u64,
    /// Relative tolerance for μ_n(P_i) = 0 (mu only)
    #[arg(long, default_value_t = ZERO_TOL, global = true)]
    tol: f64,
}

#[derive(Subcommand)]
enum Command {
    /// Non-gaps N(n), monomials φ(n), and gaps
    Gaps {
        r: u32,
        s: u32,
        /// Number of non-gaps (default g+1)
        #[arg(long)]
        count: Option<usize>,
    },
    /// Stratum table: n_k, N_k, characteristics, hooks, ♮_k
    Strata { r: u32, s: u32 },
    /// ♮_k grid for a list of signatures given as r,s
    Natural {
        #[arg(required = true)]
        sigs: Vec<String>,
    },
    /// Schur polynomial of Λ (or Λ^(k)) in u-coordinates
    Schur {
        r: u32,
        s: u32,
        #[arg(long)]
        k: Option<usize>,
    },
    /// Certify vanishing and non-vanishing on the strata
    Certify {
        r: u32,
        s: u32,
        #[arg(long)]
        k: Option<usize>,
        /// Perturb S_Λ so that certification must fail
        #[arg(long)]
        inject_fault: bool,
    },
    /// Coefficients of μ_n through given points
    Mu { curve: PathBuf, points: PathBuf },
}

/// Failure with an exit code.
struct Failure {
    code: u8,
    message: String,
    detail: Vec<String>,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match &e {
            Error::Certification { .. } => 3,
            Error::SpecialDivisor { .. } | Error::Numeric(_) => 4,
            Error::Internal(_) => 1,
            _ => 2,
        };
        let detail = match &e {
            Error::Certification { witness, .. } => witness.clone(),
            _ => vec![],
        };
        Failure {
            code,
            message: e.to_string(),
            detail,
        }
    }
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        if let Some(inner) = e.downcast_ref::<Error>() {
            return inner.clone().into();
        }
        Failure {
            code: 2,
            message: format!("{e:#}"),
            detail: vec![],
        }
    }
}

type Out = Result<String, Failure>;

fn signature(r: u32, s: u32) -> Result<CurveSignature, Failure> {
    Ok(CurveSignature::new(r, s)?)
}

fn parse_signature(text: &str) -> Result<CurveSignature, Failure> {
    let t = text.trim().trim_start_matches('(').trim_end_matches(')');
    let bad = || Failure {
        code: 2,
        message: format!("cannot parse signature {text:?}; expected r,s"),
        detail: vec![],
    };
    let (r, s) = t.split_once(',').ok_or_else(bad)?;
    let r = r.trim().parse().map_err(|_| bad())?;
    let s = s.trim().parse().map_err(|_| bad())?;
    signature(r, s)
}

#[derive(Serialize)]
struct GapsJson {
    r: u32,
    s: u32,
    genus: usize,
    nongaps: Vec<u64>,
    monomials: Vec<String>,
    gaps: Vec<u64>,
}

fn cmd_gaps(cli: &Cli, r: u32, s: u32, count: Option<usize>) -> Out {
    let sig = signature(r, s)?;
    let count = count.unwrap_or(sig.genus() + 1);
    let basis = monomial_basis(sig, count);
    let mut t = Table::new(["n", "N(n)", "φ(n)"]);
    for (n, m) in basis.iter().enumerate() {
        t.push(vec![n.to_string(), m.wdeg.to_string(), m.to_string()]);
    }
    let g = gaps(sig);
    let json = GapsJson {
        r,
        s,
        genus: sig.genus(),
        nongaps: basis.iter().map(|m| m.wdeg).collect(),
        monomials: basis.iter().map(|m| m.to_string()).collect(),
        gaps: g.clone(),
    };
    let mut out = emit(cli.format, &t, &json)?;
    if cli.format == OutputFormat::Table {
        out.push_str(&format!("\ngaps: {}\n", tuple(&g)));
    }
    Ok(out)
}

fn cmd_strata(cli: &Cli, r: u32, s: u32) -> Out {
    let sig = signature(r, s)?;
    let profiles = all_profiles(sig)?;
    let mut t = Table::new(["k", "n_k", "N_k", "(a;b)", "(a+b+1)", "Σ", "♮_k"]);
    for p in &profiles {
        let hooks = p.characteristics().hooks();
        t.push(vec![
            p.k.to_string(),
            p.n_k.to_string(),
            p.big_n_k.to_string(),
            p.characteristics().to_string(),
            tuple(&hooks),
            hooks.iter().sum::<u64>().to_string(),
            tuple(&p.natural),
        ]);
    }
    Ok(emit(cli.format, &t, &profiles)?)
}

#[derive(Serialize)]
struct NaturalRow {
    r: u32,
    s: u32,
    genus: usize,
    /// ♮_1..♮_{g−1}, ascending.
    natural: Vec<Vec<usize>>,
}

fn cmd_natural(cli: &Cli, sigs: &[String]) -> Out {
    let sigs = sigs.iter().map(|s| parse_signature(s)).collect::<Result<Vec<_>, _>>()?;
    let width = sigs.iter().map(|s| s.genus().saturating_sub(1)).max().unwrap_or(0);
    let mut header = vec!["(r,s)".to_string(), "g".to_string()];
    header.extend((1..=width).map(|k| format!("♮_{k}")));
    let mut t = Table::new(header);
    let mut rows = Vec::new();
    for sig in sigs {
        let g = sig.genus();
        let natural = (1..g)
            .map(|k| {
                let mut v = natural_k(sig, k)?;
                v.sort_unstable();
                Ok(v)
            })
            .collect::<Result<Vec<_>, Error>>()?;
        let mut cells = vec![sig.to_string(), g.to_string()];
        cells.extend(natural.iter().map(|v| set(v)));
        t.push(cells);
        rows.push(NaturalRow {
            r: sig.r(),
            s: sig.s(),
            genus: g,
            natural,
        });
    }
    Ok(emit(cli.format, &t, &rows)?)
}

#[derive(Serialize)]
struct SchurJson {
    diagram: Vec<u32>,
    family: String,
    polynomial: String,
}

fn cmd_schur(cli: &Cli, r: u32, s: u32, k: Option<usize>) -> Out {
    let sig = signature(r, s)?;
    let g = sig.genus();
    let lam = young_diagram(sig);
    let diagram = match k {
        Some(k) => truncate_upper(&lam, k)?,
        None => lam,
    };
    if g > cli.max_expand_genus {
        return Err(Error::Precondition(format!(
            "genus {g} exceeds --max-expand-genus {}",
            cli.max_expand_genus
        ))
        .into());
    }
    let form = schur_in_T_with(&diagram, sig, cli.max_expand_genus)?;
    let poly = form.as_u.as_ref().unwrap_or(&form.as_T);
    let json = SchurJson {
        diagram: diagram.parts().to_vec(),
        family: poly.family().symbol().to_string(),
        polynomial: poly.to_string(),
    };
    Ok(match cli.format {
        OutputFormat::Table => format!("{}\n", json.polynomial),
        f => {
            let mut t = Table::new(["diagram", "family", "polynomial"]);
            t.push(vec![tuple(&json.diagram), json.family.clone(), json.polynomial.clone()]);
            emit(f, &t, &json)?
        }
    })
}

#[derive(Serialize, Deserialize, Debug, PartialEq)]
struct GPowerRecord {
    l: usize,
    j_l: Vec<usize>,
    power: u64,
    certificate: CertificateRecord,
}

#[derive(Serialize, Deserialize, Debug, PartialEq)]
struct StratumBundle {
    k: usize,
    natural: Vec<usize>,
    certificate: CertificateRecord,
    proper_subsets: Vec<CertificateRecord>,
    sign: i32,
    factorial_prediction: String,
    factorial_matches: bool,
    sweep: SweepReport,
    g_powers: Vec<GPowerRecord>,
}

fn cmd_certify(cli: &Cli, r: u32, s: u32, k: Option<usize>, inject_fault: bool) -> Out {
    let sig = signature(r, s)?;
    let g = sig.genus();
    let opts = CertifyOptions {
        trials: cli.trials,
        seed: cli.seed,
        max_expand_genus: cli.max_expand_genus,
        inject_fault,
    };
    let ks: Vec<usize> = match k {
        Some(k) => vec![k],
        None => (1..g).collect(),
    };
    let mut bundles = Vec::new();
    for k in ks {
        let nat = certify_natural(sig, k, &opts)?;
        let sweep = sub_vanishing_sweep(sig, k, &opts)?;
        let g_powers = certify_g_powers(sig, k, &opts)?
            .into_iter()
            .map(|c| GPowerRecord {
                l: c.l,
                j_l: c.j_l,
                power: c.power,
                certificate: c.certificate.record(),
            })
            .collect();
        bundles.push(StratumBundle {
            k,
            natural: nat.natural.clone(),
            certificate: nat.certificate.record(),
            proper_subsets: nat.proper_subsets.iter().map(|c| c.record()).collect(),
            sign: nat.sign,
            factorial_prediction: nat.factorial_prediction.to_string(),
            factorial_matches: nat.factorial_matches,
            sweep,
            g_powers,
        });
    }
    let mut t = Table::new(["k", "♮_k", "verdict", "constant", "∏w!", "mode", "sweep", "u_g-power constants"]);
    for b in &bundles {
        let c = &b.certificate;
        let constant = |c: &CertificateRecord| match (&c.constant_num, &c.constant_den) {
            (Some(n), Some(d)) => {
                let n = serde_json::to_string(n).unwrap().trim_matches('"').to_string();
                let d = serde_json::to_string(d).unwrap().trim_matches('"').to_string();
                if d == "1" {
                    n
                } else {
                    format!("{n}/{d}")
                }
            }
            _ => "-".into(),
        };
        t.push(vec![
            b.k.to_string(),
            tuple(&b.natural),
            c.verdict.clone(),
            constant(c),
            b.factorial_prediction.clone(),
            serde_json::to_string(&c.mode).unwrap().trim_matches('"').to_string(),
            format!("{}/{}", b.sweep.checked, b.sweep.total),
            join(&b.g_powers.iter().map(|p| constant(&p.certificate)).collect::<Vec<_>>()),
        ]);
    }
    Ok(emit(cli.format, &t, &bundles)?)
}

#[derive(Deserialize)]
struct CurveSpec {
    r: u32,
    s: u32,
    lambdas: Vec<[f64; 2]>,
}

#[derive(Serialize)]
struct MuJson {
    n: usize,
    coeffs: Vec<[f64; 2]>,
    fs_det: [f64; 2],
    condition: f64,
    pole_order: u64,
    extra_zeros: u64,
    residuals: Vec<f64>,
}

fn pair(c: Complex64) -> [f64; 2] {
    [c.re, c.im]
}

fn cmd_mu(cli: &Cli, curve: &PathBuf, points: &PathBuf) -> Out {
    let spec: CurveSpec = serde_json::from_str(
        &std::fs::read_to_string(curve).with_context(|| format!("reading {}", curve.display()))?,
    )
    .with_context(|| format!("parsing {}", curve.display()))?;
    let raw: Vec<[f64; 4]> = serde_json::from_str(
        &std::fs::read_to_string(points).with_context(|| format!("reading {}", points.display()))?,
    )
    .with_context(|| format!("parsing {}", points.display()))?;
    let sig = signature(spec.r, spec.s)?;
    let curve = CurveInstance::new(sig, spec.lambdas.iter().map(|&[a, b]| Complex64::new(a, b)).collect())?;
    let pts = raw
        .iter()
        .map(|&[xr, xi, yr, yi]| AffinePoint::new(&curve, Complex64::new(xr, xi), Complex64::new(yr, yi)))
        .collect::<Result<Vec<_>, _>>()?;
    let mu = mu_coeffs(&curve, &pts)?;
    let mut residuals = Vec::new();
    for p in &pts {
        let v = mu.eval(&curve, p).norm();
        let scale = mu.scale(&curve, p);
        if v > cli.tol * scale {
            return Err(Error::Numeric(format!("|μ_n(P)| = {v:e} exceeds {:e}", cli.tol * scale)).into());
        }
        residuals.push(v / scale);
    }
    let json = MuJson {
        n: mu.n,
        coeffs: mu.coeffs.iter().map(|&c| pair(c)).collect(),
        fs_det: pair(mu.fs_det),
        condition: mu.condition,
        pole_order: mu.pole_order,
        extra_zeros: mu.extra_zeros,
        residuals,
    };
    let mut t = Table::new(["k", "Re μ_{n,k}", "Im μ_{n,k}"]);
    for (k, c) in mu.coeffs.iter().enumerate() {
        t.push(vec![k.to_string(), format!("{:.12e}", c.re), format!("{:.12e}", c.im)]);
    }
    let mut out = emit(cli.format, &t, &json)?;
    if cli.format == OutputFormat::Table {
        out.push_str(&format!(
            "\nψ_n = {:.6e}{:+.6e}i, condition {:.3e}, pole order {}, max relative residual {:.3e}\n",
            mu.fs_det.re,
            mu.fs_det.im,
            mu.condition,
            mu.pole_order,
            json.residuals.iter().cloned().fold(0.0, f64::max)
        ));
    }
    Ok(out)
}

fn run(cli: &Cli) -> Out {
    match &cli.command {
        Command::Gaps { r, s, count } => cmd_gaps(cli, *r, *s, *count),
        Command::Strata { r, s } => cmd_strata(cli, *r, *s),
        Command::Natural { sigs } => cmd_natural(cli, sigs),
        Command::Schur { r, s, k } => cmd_schur(cli, *r, *s, *k),
        Command::Certify { r, s, k, inject_fault } => cmd_certify(cli, *r, *s, *k, *inject_fault),
        Command::Mu { curve, points } => cmd_mu(cli, curve, points),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            for w in &f.detail {
                eprintln!("  witness: {w}");
            }
            ExitCode::from(f.code)
        }
    }
}
