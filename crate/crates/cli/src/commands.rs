use std::path::{Path, PathBuf};
use std::time::Instant;

use bdd_core::format::{self, Format, FormatError};
use bdd_core::generate::gnm;
use bdd_core::{
    bound_factor, kernelize as run_kernelize, lift_solution, solve_exact, validate_decomposition,
    DBoundedDecomposition, DegreeBound, ExactConfig, ExactError, Graph,
};
use thiserror::Error;

use crate::report::{ExactFigures, RunReport};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("refused: {0}")]
    Refused(String),
    #[error("decomposition check failed")]
    VerificationFailed,
}

impl From<FormatError> for CliError {
    fn from(e: FormatError) -> Self {
        CliError::Input(e.to_string())
    }
}

fn write_file(path: &Path, contents: &str) -> Result<(), CliError> {
    std::fs::write(path, contents).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn load(
    input: &Path,
    degree: usize,
    format: Option<Format>,
) -> Result<(Graph, Format, DegreeBound), CliError> {
    let (g, format) = format::read_graph(input, format)?;
    let d = DegreeBound(degree);
    bound_factor(d).map_err(|e| CliError::Input(e.to_string()))?;
    Ok((g, format, d))
}

fn exact_config(max_exact: usize) -> ExactConfig {
    ExactConfig {
        max_vertices: max_exact,
        ..ExactConfig::default()
    }
}

fn exact_error(e: ExactError) -> CliError {
    match e {
        ExactError::TooLarge { .. } => CliError::Refused(e.to_string()),
        _ => CliError::Input(e.to_string()),
    }
}

pub struct KernelizeArgs {
    pub input: PathBuf,
    pub degree: usize,
    pub format: Option<Format>,
    pub kernel_out: Option<PathBuf>,
    pub sets_out: Option<PathBuf>,
    pub stats_out: Option<PathBuf>,
    /// Vertex cap of the exact solver when `--exact` is given.
    pub exact: Option<usize>,
}

pub fn kernelize(args: KernelizeArgs) -> Result<(), CliError> {
    let (g, format, d) = load(&args.input, args.degree, args.format)?;
    let start = Instant::now();
    let result = run_kernelize(&g, d);
    let elapsed = start.elapsed();
    let factor = bound_factor(d).expect("checked on load");
    let mut report = RunReport::new(&g, d, &result, factor, elapsed);

    if let Some(path) = &args.kernel_out {
        write_file(path, &format::write_graph(&result.kernel, format))?;
    }
    if let Some(path) = &args.sets_out {
        write_file(
            path,
            &format::write_sets(&g, &result.c_total, &result.i_total, format),
        )?;
    }

    let refusal = match args.exact {
        Some(cap) => match solve_exact(&result.kernel, d, exact_config(cap)) {
            Ok(solution) => {
                report.exact = Some(ExactFigures {
                    alpha_kernel: solution.len(),
                });
                None
            }
            Err(e) => Some(exact_error(e)),
        },
        None => None,
    };

    let stats = report.to_key_value();
    match &args.stats_out {
        Some(path) => write_file(path, &stats)?,
        None => print!("{stats}"),
    }
    refusal.map_or(Ok(()), Err)
}

pub fn solve(
    input: &Path,
    degree: usize,
    format: Option<Format>,
    max_exact: usize,
) -> Result<(), CliError> {
    let (g, format, d) = load(input, degree, format)?;
    let result = run_kernelize(&g, d);
    let kernel_solution =
        solve_exact(&result.kernel, d, exact_config(max_exact)).map_err(exact_error)?;
    let lifted =
        lift_solution(&result, &kernel_solution).map_err(|e| CliError::Input(e.to_string()))?;
    let offset = usize::from(format == Format::Dimacs);
    let ids: Vec<String> = lifted
        .members()
        .iter()
        .map(|v| (g.label(v) + offset).to_string())
        .collect();
    println!("size={}", lifted.len());
    println!("kernel_n={}", result.kernel.vertex_count());
    println!("solution: {}", ids.join(" "));
    Ok(())
}

pub fn verify(
    input: &Path,
    degree: usize,
    format: Option<Format>,
    sets: &Path,
) -> Result<(), CliError> {
    let (g, format, d) = load(input, degree, format)?;
    let text = format::read_text(sets)?;
    let sets = format::parse_sets(&text, &g, format)?;
    let mut dec = DBoundedDecomposition::from_sets(&g, sets.c, sets.i);
    if let Some(t) = sets.t {
        dec.t = t;
    }
    if let Some(j) = sets.j {
        dec.j = j;
    }
    let report = validate_decomposition(&g, d, &dec);
    for (name, verdict) in report.verdicts() {
        match verdict {
            Ok(()) => println!("{name}: pass"),
            Err(v) => println!("{name}: FAIL ({})", describe(&g, format, v)),
        }
    }
    if report.passed() {
        Ok(())
    } else {
        Err(CliError::VerificationFailed)
    }
}

/// Violation text with vertex ids in the instance's numbering.
fn describe(g: &Graph, format: Format, v: &bdd_core::decomposition::Violation) -> String {
    use bdd_core::decomposition::Violation as V;
    let id = |x: usize| g.label(x) + usize::from(format == Format::Dimacs);
    match *v {
        V::DegreeExceeded { vertex, degree } => V::DegreeExceeded {
            vertex: id(vertex),
            degree,
        },
        V::EdgeBetweenIAndJ(a, b) => V::EdgeBetweenIAndJ(id(a), id(b)),
        V::EdgeInsideI(a, b) => V::EdgeInsideI(id(a), id(b)),
        V::EdgeBetweenIAndRest(a, b) => V::EdgeBetweenIAndRest(id(a), id(b)),
        V::Overlap(a) => V::Overlap(id(a)),
        V::Missing(a) => V::Missing(id(a)),
        ref other => other.clone(),
    }
    .to_string()
}

pub fn generate(
    n: usize,
    m: usize,
    seed: u64,
    model: &str,
    format: Format,
    output: Option<&Path>,
) -> Result<(), CliError> {
    if model != "gnm" {
        return Err(CliError::Input(format!(
            "unknown model {model:?}; only gnm is supported"
        )));
    }
    let g = gnm(n, m, seed).map_err(|e| CliError::Input(e.to_string()))?;
    let text = format::write_graph(&g, format);
    match output {
        Some(path) => write_file(path, &text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}
