use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::Serialize;

use noisy_sep::interval::{an_bn_table, AN_BN_CSV_HEADER};
use noisy_sep::io::{read_coeffs, read_matrix, write_coeffs, write_matrix};
use noisy_sep::product_basis::{product_basis_decompose, ProductDecomposition};
use noisy_sep::scan::{scan_plane, to_csv, RangeSpec};
use noisy_sep::scenario::{run_scenario, ScenarioResult, SCENARIOS};
use noisy_sep::separability::{ppt_verdict_any, witness_terms, WitnessInput, WitnessReport};
use noisy_sep::{
    from_coefficients, mix, physicality_check, to_coefficients, Error, HermitianMatrix, MixtureSpec, PauliCoefficients,
    SeparabilityVerdict, SpectralReport, PSD_TOL,
};

const EXIT_MISMATCH: u8 = 1;
const EXIT_INPUT: u8 = 2;

#[derive(Parser)]
#[command(name = "noisy-sep", version, about = "Physicality and separability of noisy N-qubit states")]
struct Cli {
    /// Emit machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a reference scenario (or `all`) and compare with the published values.
    Scenario { id: String },
    /// Classify uniform two-qubit states over a (c, ε) grid and write CSV.
    Scan {
        #[arg(long = "n", default_value_t = 2)]
        n_qubits: usize,
        /// `start:stop:step` or a single value.
        #[arg(long, allow_hyphen_values = true)]
        c: RangeSpec,
        #[arg(long, allow_hyphen_values = true)]
        eps: RangeSpec,
        /// Output CSV; stdout if absent.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Analyze a state read from a matrix or coefficient file.
    Analyze {
        #[arg(long, conflicts_with = "coeffs", required_unless_present = "coeffs")]
        matrix: Option<PathBuf>,
        #[arg(long)]
        coeffs: Option<PathBuf>,
        /// Treat the input as ρ₁ and analyze its mixture with I/d at this ε.
        #[arg(long)]
        epsilon: Option<f64>,
    },
    /// Uniform-coefficient physicality intervals and the (A_N, B_N) table as CSV.
    Intervals {
        #[arg(long, default_value_t = 3)]
        max_n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Write the matrix of uniform coefficients `c` on N qubits to a file.
    Build {
        #[arg(long = "n", default_value_t = 2)]
        n_qubits: usize,
        #[arg(long, allow_hyphen_values = true)]
        c: f64,
        /// Write the coefficient file instead of the matrix.
        #[arg(long)]
        as_coeffs: bool,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Serialize)]
struct Analysis {
    n_qubits: usize,
    epsilon: Option<f64>,
    spectrum: SpectralReport,
    physicality: Option<SeparabilityVerdict>,
    ppt: Option<SeparabilityVerdict>,
    coefficients: Option<Vec<f64>>,
    witness: Option<WitnessReport>,
    product_basis: Option<ProductDecomposition>,
}

impl Analysis {
    fn render_text(&self) -> String {
        let mut out = format!("state on {} qubit(s)", self.n_qubits);
        if let Some(e) = self.epsilon {
            out.push_str(&format!(", mixed at ε = {e}"));
        }
        out.push('\n');
        let ev: Vec<String> = self.spectrum.eigenvalues.iter().map(|x| format!("{x:.9}")).collect();
        out.push_str(&format!(
            "  spectrum [{}] trace={} psd={}\n",
            ev.join(", "),
            self.spectrum.trace,
            self.spectrum.is_psd
        ));
        for v in self.physicality.iter().chain(&self.ppt) {
            out.push_str(&format!("  verdict {:?}: {}\n", v.kind, v.detail));
        }
        if let Some(w) = &self.witness {
            out.push_str(&format!("  witness min term {} at {:?}, satisfied={}\n", w.min_term, w.argmin, w.satisfied));
        }
        if let Some(p) = &self.product_basis {
            out.push_str(&format!(
                "  product basis residual {:e}, nonnegative weights={}\n",
                p.residual, p.is_certificate
            ));
        }
        out
    }
}

fn analyze(state: HermitianMatrix, epsilon: Option<f64>) -> noisy_sep::Result<Analysis> {
    let rho = match epsilon {
        Some(e) => mix(&MixtureSpec::new(state, e)?),
        None => state,
    };
    let phys = physicality_check(&rho, PSD_TOL)?;
    let ppt = if phys.physical { Some(ppt_verdict_any(&rho, PSD_TOL)?.verdict) } else { None };
    let (coefficients, witness, product_basis) = if rho.dim() == 4 {
        let d = to_coefficients(&rho)?;
        let w = witness_terms(&WitnessInput::with_default_weights(d.clone())?);
        (Some(d.as_slice().to_vec()), Some(w), Some(product_basis_decompose(&rho)?))
    } else {
        (None, None, None)
    };
    Ok(Analysis {
        n_qubits: rho.n_qubits(),
        epsilon,
        physicality: phys.verdict(),
        spectrum: phys.spectrum,
        ppt,
        coefficients,
        witness,
        product_basis,
    })
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("reports serialize")
}

fn emit(text: &str, out: Option<&PathBuf>) -> noisy_sep::Result<()> {
    match out {
        Some(path) => fs::write(path, text).map_err(|e| Error::Io(format!("{}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> noisy_sep::Result<bool> {
    match cli.command {
        Command::Scenario { id } => {
            let ids: Vec<&str> = if id == "all" { SCENARIOS.to_vec() } else { vec![id.as_str()] };
            let results: Vec<ScenarioResult> = ids.iter().map(|id| run_scenario(id)).collect::<Result<_, _>>()?;
            if cli.json {
                if results.len() == 1 {
                    println!("{}", to_json(&results[0]));
                } else {
                    println!("{}", to_json(&results));
                }
            } else {
                for r in &results {
                    print!("{}", r.render_text());
                }
            }
            Ok(results.iter().all(ScenarioResult::all_passed))
        }
        Command::Scan { n_qubits, c, eps, out } => {
            let points = scan_plane(n_qubits, &c.values(), &eps.values())?;
            let text = if cli.json { to_json(&points) + "\n" } else { to_csv(&points) };
            emit(&text, out.as_ref())?;
            Ok(true)
        }
        Command::Analyze { matrix, coeffs, epsilon } => {
            let state = match (matrix, coeffs) {
                (Some(path), _) => read_matrix(path)?,
                (None, Some(path)) => from_coefficients(&read_coeffs(path)?),
                (None, None) => unreachable!("clap requires one input"),
            };
            let report = analyze(state, epsilon)?;
            if cli.json {
                println!("{}", to_json(&report));
            } else {
                print!("{}", report.render_text());
            }
            Ok(true)
        }
        Command::Intervals { max_n, out } => {
            let rows = an_bn_table(max_n)?;
            let text = if cli.json {
                to_json(&rows) + "\n"
            } else {
                let mut s = format!("{AN_BN_CSV_HEADER}\n");
                for r in &rows {
                    s.push_str(&r.csv_line());
                    s.push('\n');
                }
                s
            };
            emit(&text, out.as_ref())?;
            Ok(true)
        }
        Command::Build { n_qubits, c, as_coeffs, out } => {
            let coeffs = PauliCoefficients::uniform(n_qubits, c)?;
            if as_coeffs {
                write_coeffs(&coeffs, &out)?;
            } else {
                write_matrix(&from_coefficients(&coeffs), &out)?;
            }
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(EXIT_MISMATCH),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_INPUT)
        }
    }
}
