//! Command-line front end: `analyze`, `gen`, `color`, and `dnum`.
//!
//! Exit codes: 0 on success/PASS, 1 when a construction precondition is
//! unmet or a verification fails, 2 on usage or parse errors.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use posetdist_core::colorings::{
    self, boolean_coloring, dilworth_coloring, divisibility_coloring, divisibility_new_colors,
    gen_boolean, gen_chain_sum, gen_divisibility, improved_qcoloring, leftmost_chain_coloring,
    linear_extension_coloring, rank_plus_qcoloring, twins, ColorRole, ColoringError,
    DivisibilitySpec,
};
use posetdist_core::lattice::{self, DEFAULT_SIZE_CAP};
use posetdist_core::poset::Poset;
use posetdist_core::symmetry::{
    self, chain_proper_violation, distinguishing_chromatic_number_with_witness,
    distinguishing_number_with_witness, distinguishing_violation, proper_violation, Coloring,
    SearchError,
};

use crate::io;

pub const SIZE_CAP_ENV: &str = "POSETDIST_SIZE_CAP";

#[derive(Parser)]
#[command(
    name = "posetdist",
    version,
    about = "Exact distinguishing numbers and symmetry-breaking colorings for finite posets"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print order statistics, lattice structure, and symmetry of a poset.
    Analyze {
        /// Poset file (.json for the JSON mirror, anything else as text).
        input: PathBuf,
        #[arg(long)]
        verbose: bool,
    },
    /// Generate a poset family and write it out.
    Gen {
        family: Family,
        /// chains: `TxR[,TxR...]`; boolean: `N`; divisibility: `N`;
        /// downset: input poset file.
        params: String,
        /// Output file; format chosen by extension (.json/.txt/.dot).
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Stdout format when no output file is given.
        #[arg(long, value_enum)]
        format: Option<Format>,
        /// Size cap on generated posets (overrides POSETDIST_SIZE_CAP).
        #[arg(long)]
        cap: Option<usize>,
        /// Write a run manifest here.
        #[arg(long)]
        manifest: Option<PathBuf>,
    },
    /// Construct a coloring, verify it, and report PASS or FAIL.
    Color {
        method: Method,
        /// Poset file; optional for divis/boolean when --n is given.
        input: Option<PathBuf>,
        /// Build the divisor/subset lattice of this integer instead of
        /// reading a file (divis and boolean only).
        #[arg(long)]
        n: Option<u64>,
        /// Output coloring file; format chosen by extension (.json/.txt/.dot).
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Stdout format when no output file is given.
        #[arg(long, value_enum)]
        format: Option<Format>,
        /// Index of the linear extension of the join-irreducibles (linext).
        #[arg(long, default_value_t = 0)]
        extension: usize,
        /// Embedding file certifying a standard diagram (leftmost).
        #[arg(long)]
        embedding: Option<PathBuf>,
        #[arg(long)]
        cap: Option<usize>,
        #[arg(long)]
        verbose: bool,
        /// Write a run manifest here.
        #[arg(long)]
        manifest: Option<PathBuf>,
    },
    /// Exact distinguishing number (or chromatic variant) with a witness.
    Dnum {
        input: PathBuf,
        /// Compute the distinguishing chromatic number instead.
        #[arg(long)]
        chromatic: bool,
        /// Search cap (default 8; for --chromatic the number of points).
        #[arg(long)]
        cap: Option<usize>,
        #[arg(long)]
        verbose: bool,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Family {
    Chains,
    Boolean,
    Divisibility,
    Downset,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Linext,
    Rankq,
    Improved,
    Divis,
    Boolean,
    Dilworth,
    Leftmost,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Txt,
    Dot,
}

/// Errors split by exit code: usage/parse problems exit 2, failed
/// preconditions and verifications exit 1.
enum CliError {
    Usage(String),
    Fail(String),
}

impl From<ColoringError> for CliError {
    fn from(e: ColoringError) -> Self {
        CliError::Fail(e.to_string())
    }
}

impl From<lattice::LatticeError> for CliError {
    fn from(e: lattice::LatticeError) -> Self {
        CliError::Fail(e.to_string())
    }
}

impl From<SearchError> for CliError {
    fn from(e: SearchError) -> Self {
        CliError::Fail(e.to_string())
    }
}

impl From<io::IoError> for CliError {
    fn from(e: io::IoError) -> Self {
        CliError::Usage(e.to_string())
    }
}

pub fn run(cli: Cli) -> i32 {
    let result = match cli.command {
        Command::Analyze { input, verbose } => cmd_analyze(&input, verbose),
        Command::Gen {
            family,
            params,
            output,
            format,
            cap,
            manifest,
        } => cmd_gen(family, &params, output.as_deref(), format, cap, manifest.as_deref()),
        Command::Color {
            method,
            input,
            n,
            output,
            format,
            extension,
            embedding,
            cap,
            verbose,
            manifest,
        } => cmd_color(
            method,
            input.as_deref(),
            n,
            output.as_deref(),
            format,
            extension,
            embedding.as_deref(),
            cap,
            verbose,
            manifest.as_deref(),
        ),
        Command::Dnum {
            input,
            chromatic,
            cap,
            verbose,
        } => cmd_dnum(&input, chromatic, cap, verbose),
    };
    match result {
        Ok(code) => code,
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            2
        }
        Err(CliError::Fail(msg)) => {
            eprintln!("error: {msg}");
            1
        }
    }
}

fn size_cap(flag: Option<usize>) -> usize {
    flag.or_else(|| {
        std::env::var(SIZE_CAP_ENV)
            .ok()
            .and_then(|v| v.parse().ok())
    })
    .unwrap_or(DEFAULT_SIZE_CAP)
}

fn read_file(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))
}

fn read_poset(path: &Path) -> Result<Poset, CliError> {
    let content = read_file(path)?;
    Ok(io::parse_poset_file(path, &content)?)
}

fn write_output(path: &Path, content: &str) -> Result<(), CliError> {
    std::fs::write(path, content)
        .map_err(|e| CliError::Fail(format!("cannot write {}: {e}", path.display())))
}

fn format_of(path: Option<&Path>, flag: Option<Format>) -> Format {
    if let Some(p) = path {
        match p.extension().and_then(|e| e.to_str()) {
            Some("dot") => Format::Dot,
            Some("txt") => Format::Txt,
            _ => Format::Json,
        }
    } else {
        flag.unwrap_or(Format::Json)
    }
}

fn emit_poset(
    p: &Poset,
    output: Option<&Path>,
    format: Option<Format>,
) -> Result<Vec<String>, CliError> {
    let fmt = format_of(output, format);
    let content = match fmt {
        Format::Json => io::poset_to_json(p),
        Format::Txt => io::poset_to_text(p),
        Format::Dot => io::poset_to_dot(p, None),
    };
    match output {
        Some(path) => {
            write_output(path, &content)?;
            println!("wrote {} points to {}", p.n(), path.display());
            Ok(vec![path.display().to_string()])
        }
        None => {
            println!("{content}");
            Ok(vec![])
        }
    }
}

fn command_line() -> String {
    std::env::args().collect::<Vec<_>>().join(" ")
}

fn write_manifest(
    path: Option<&Path>,
    input: &[u8],
    outputs: Vec<String>,
) -> Result<(), CliError> {
    if let Some(path) = path {
        let manifest = io::RunManifest::new(command_line(), input, outputs);
        write_output(path, &manifest.to_json())?;
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// analyze
// ---------------------------------------------------------------------------

fn cmd_analyze(input: &Path, verbose: bool) -> Result<i32, CliError> {
    let p = read_poset(input)?;
    let rd = p.rank_data();
    println!("points: {}", p.n());
    println!("height: {}", rd.height);
    println!("width: {}", rd.width);
    println!(
        "ranked: {}",
        match rd.is_ranked {
            Some(true) => "yes",
            Some(false) => "no",
            None => "undefined (no unique bottom and top)",
        }
    );
    println!("rank table:");
    for (r, level) in p.rank_levels().iter().enumerate() {
        let names: Vec<String> = level.iter().map(|&x| p.display_label(x)).collect();
        println!("  rank {r}: {}", names.join(" "));
    }

    let tables = lattice::meet_join(&p);
    println!("lattice: {}", if tables.is_lattice { "yes" } else { "no" });
    println!(
        "distributive: {}",
        if tables.is_distributive { "yes" } else { "no" }
    );
    if tables.is_lattice {
        let q = lattice::join_irreducibles(&p).expect("checked lattice");
        println!("|Q_L|: {}", q.to_parent.len());
        let names: Vec<String> = q.to_parent.iter().map(|&x| p.display_label(x)).collect();
        println!("Q_L: {}", names.join(" "));
        match lattice::downset_lattice(&q.poset, size_cap(None)) {
            Ok(d) => println!("|J(Q_L)|: {}", d.lattice.n()),
            Err(_) => println!("|J(Q_L)|: exceeds size cap"),
        }
    }

    let aut = symmetry::automorphisms(&p);
    println!("|Aut|: {}", aut.order);
    let tw = twins(&p);
    if tw.is_empty() {
        println!("twins: none");
    } else {
        let pairs: Vec<String> = tw
            .iter()
            .map(|&(x, y)| format!("({}, {})", p.display_label(x), p.display_label(y)))
            .collect();
        println!("twins: {}", pairs.join(" "));
    }
    match rd.is_ranked {
        Some(true) => println!(
            "rank-connected: {}",
            if colorings::is_rank_connected(&p).is_ok() {
                "yes"
            } else {
                "no"
            }
        ),
        _ => println!("rank-connected: n/a (not ranked)"),
    }
    if verbose {
        println!("orbits:");
        for orbit in &aut.orbits {
            let names: Vec<String> = orbit.iter().map(|&x| p.display_label(x)).collect();
            println!("  {{{}}}", names.join(" "));
        }
        for g in &aut.generators {
            println!("generator: {g}");
        }
    }
    Ok(0)
}

// ---------------------------------------------------------------------------
// gen
// ---------------------------------------------------------------------------

fn parse_chain_blocks(params: &str) -> Result<Vec<(usize, usize)>, CliError> {
    let mut blocks = Vec::new();
    for part in params.split(',') {
        let (t, r) = part
            .trim()
            .split_once('x')
            .ok_or_else(|| CliError::Usage(format!("expected TxR, got `{part}`")))?;
        let t: usize = t
            .trim()
            .parse()
            .map_err(|_| CliError::Usage(format!("bad chain count in `{part}`")))?;
        let r: usize = r
            .trim()
            .parse()
            .map_err(|_| CliError::Usage(format!("bad chain length in `{part}`")))?;
        if t == 0 || r == 0 {
            return Err(CliError::Usage("chain blocks need t >= 1 and r >= 1".into()));
        }
        blocks.push((t, r));
    }
    Ok(blocks)
}

fn cmd_gen(
    family: Family,
    params: &str,
    output: Option<&Path>,
    format: Option<Format>,
    cap: Option<usize>,
    manifest: Option<&Path>,
) -> Result<i32, CliError> {
    let cap = size_cap(cap);
    let poset = match family {
        Family::Chains => {
            let blocks = parse_chain_blocks(params)?;
            let total: usize = blocks.iter().map(|&(t, r)| t * r).sum();
            if total > cap {
                return Err(ColoringError::TooLarge { cap }.into());
            }
            gen_chain_sum(&blocks)
        }
        Family::Boolean => {
            let n: usize = params
                .trim()
                .parse()
                .map_err(|_| CliError::Usage(format!("bad subset-lattice size `{params}`")))?;
            if n == 0 {
                return Err(CliError::Usage("boolean lattice needs n >= 1".into()));
            }
            gen_boolean(n, cap)?
        }
        Family::Divisibility => {
            let n: u64 = params
                .trim()
                .parse()
                .map_err(|_| CliError::Usage(format!("bad integer `{params}`")))?;
            let spec =
                DivisibilitySpec::factorize(n).map_err(|e| CliError::Usage(e.to_string()))?;
            gen_divisibility(&spec, cap)?
        }
        Family::Downset => {
            let p = read_poset(Path::new(params))?;
            lattice::downset_lattice(&p, cap)?.lattice
        }
    };
    let outputs = emit_poset(&poset, output, format)?;
    write_manifest(manifest, params.as_bytes(), outputs)?;
    Ok(0)
}

// ---------------------------------------------------------------------------
// color
// ---------------------------------------------------------------------------

/// Matches a generated lattice against an input poset by labels, returning
/// the map generated-index -> input-index.
fn align_by_labels(generated: &Poset, input: &Poset, what: &str) -> Result<Vec<usize>, CliError> {
    if generated.n() != input.n() {
        return Err(CliError::Fail(format!(
            "input has {} points but {what} has {}",
            input.n(),
            generated.n()
        )));
    }
    let mut map = Vec::with_capacity(generated.n());
    for gi in 0..generated.n() {
        let label = generated.label(gi).expect("generated posets are labeled");
        let matches: Vec<usize> = (0..input.n())
            .filter(|&i| input.label(i) == Some(label))
            .collect();
        match matches.as_slice() {
            [unique] => map.push(*unique),
            [] => {
                return Err(CliError::Fail(format!(
                    "input is missing a point labeled {label}; not {what}"
                )))
            }
            _ => {
                return Err(CliError::Fail(format!(
                    "input has several points labeled {label}"
                )))
            }
        }
    }
    let mut expected: Vec<(usize, usize)> = generated
        .covers()
        .iter()
        .map(|&(a, b)| (map[a], map[b]))
        .collect();
    expected.sort_unstable();
    if expected != input.covers() {
        return Err(CliError::Fail(format!(
            "input cover relation does not match {what}"
        )));
    }
    Ok(map)
}

fn permute_coloring(c: &Coloring, map: &[usize], n: usize) -> Coloring {
    let mut colors = vec![0usize; n];
    for (gi, &ii) in map.iter().enumerate() {
        colors[ii] = c.color(gi);
    }
    Coloring::new(colors)
}

struct Verification {
    distinguishing: bool,
    proper: Option<bool>,
    chain_proper: Option<bool>,
    messages: Vec<String>,
}

impl Verification {
    fn passed(&self) -> bool {
        self.distinguishing && self.proper.unwrap_or(true) && self.chain_proper.unwrap_or(true)
    }
}

fn verify(p: &Poset, c: &Coloring, want_proper: bool, want_chain_proper: bool) -> Verification {
    let mut messages = Vec::new();
    let distinguishing = match distinguishing_violation(p, c) {
        None => {
            messages.push("distinguishing: PASS".into());
            true
        }
        Some(sigma) => {
            messages.push(format!(
                "distinguishing: FAIL (automorphism {sigma} preserves colors)"
            ));
            false
        }
    };
    let proper = want_proper.then(|| match proper_violation(p, c) {
        None => {
            messages.push("proper: PASS".into());
            true
        }
        Some((x, y)) => {
            messages.push(format!(
                "proper: FAIL (comparable points {} and {} share color {})",
                p.display_label(x),
                p.display_label(y),
                c.color(x)
            ));
            false
        }
    });
    let chain_proper = want_chain_proper.then(|| match chain_proper_violation(p, c) {
        None => {
            messages.push("chain-proper: PASS".into());
            true
        }
        Some((x, y)) => {
            messages.push(format!(
                "chain-proper: FAIL (incomparable points {} and {} share color {})",
                p.display_label(x),
                p.display_label(y),
                c.color(x)
            ));
            false
        }
    });
    Verification {
        distinguishing,
        proper,
        chain_proper,
        messages,
    }
}

fn emit_coloring(
    p: &Poset,
    c: &Coloring,
    output: Option<&Path>,
    format: Option<Format>,
) -> Result<Vec<String>, CliError> {
    let fmt = format_of(output, format);
    let content = match fmt {
        Format::Json => io::coloring_to_json(c),
        Format::Txt => io::coloring_to_text(p, c),
        Format::Dot => io::poset_to_dot(p, Some(c)),
    };
    match output {
        Some(path) => {
            write_output(path, &content)?;
            println!("coloring written to {}", path.display());
            Ok(vec![path.display().to_string()])
        }
        None => {
            println!("{content}");
            Ok(vec![])
        }
    }
}

/// A proper distinguishing coloring of the join-irreducibles, computed
/// exactly, together with the irreducibles themselves.
fn exact_q_coloring(l: &Poset) -> Result<(lattice::JoinIrreducibles, usize, Coloring), CliError> {
    let q = lattice::join_irreducibles(l)?;
    let cap = q.poset.n().max(1);
    let (d, qc) = distinguishing_chromatic_number_with_witness(&q.poset, cap)?;
    Ok((q, d, qc))
}

#[allow(clippy::too_many_arguments)]
fn cmd_color(
    method: Method,
    input: Option<&Path>,
    n: Option<u64>,
    output: Option<&Path>,
    format: Option<Format>,
    extension: usize,
    embedding: Option<&Path>,
    cap: Option<usize>,
    verbose: bool,
    manifest: Option<&Path>,
) -> Result<i32, CliError> {
    let cap = size_cap(cap);
    if n.is_some() && input.is_some() {
        return Err(CliError::Usage(
            "give either an input file or --n, not both".into(),
        ));
    }
    if n.is_some() && !matches!(method, Method::Divis | Method::Boolean) {
        return Err(CliError::Usage("--n only applies to divis and boolean".into()));
    }

    // resolve the poset we color and any raw input bytes for the manifest
    let mut manifest_input: Vec<u8> = Vec::new();
    let input_poset = match input {
        Some(path) => {
            let content = read_file(path)?;
            manifest_input = content.clone().into_bytes();
            Some(io::parse_poset_file(path, &content)?)
        }
        None => None,
    };
    if let Some(v) = n {
        manifest_input = v.to_string().into_bytes();
    }

    let mut roles: Option<Vec<ColorRole>> = None;
    let mut extra_lines: Vec<String> = Vec::new();

    let (poset, coloring, want_proper, want_chain_proper) = match method {
        Method::Linext => {
            let p = input_poset
                .ok_or_else(|| CliError::Usage("linext needs an input poset".into()))?;
            let q = lattice::join_irreducibles(&p)?;
            let ext = q
                .poset
                .linear_extensions()
                .nth(extension)
                .ok_or_else(|| {
                    CliError::Usage(format!(
                        "the join-irreducibles have fewer than {} linear extensions",
                        extension + 1
                    ))
                })?;
            let c = linear_extension_coloring(&p, &ext)?;
            let red = if c.num_colors() > 1 { c.classes()[1].len() } else { 0 };
            extra_lines.push(format!("red points: {red}"));
            (p, c, false, false)
        }
        Method::Rankq => {
            let p = input_poset
                .ok_or_else(|| CliError::Usage("rankq needs an input poset".into()))?;
            let (_, d, qc) = exact_q_coloring(&p)?;
            extra_lines.push(format!("irreducibles colored with {d} colors"));
            let (c, r) = rank_plus_qcoloring(&p, &qc)?;
            roles = Some(r);
            (p, c, true, false)
        }
        Method::Improved => {
            let p = input_poset
                .ok_or_else(|| CliError::Usage("improved needs an input poset".into()))?;
            let (_, d, qc) = exact_q_coloring(&p)?;
            extra_lines.push(format!("irreducibles colored with {d} colors"));
            let (c, r) = improved_qcoloring(&p, &qc)?;
            roles = Some(r);
            (p, c, true, false)
        }
        Method::Divis => {
            let (spec, p, map) = match (&input_poset, n) {
                (Some(p), None) => {
                    let values: Vec<u64> = (0..p.n())
                        .map(|i| {
                            p.label(i).and_then(|l| l.parse().ok()).ok_or_else(|| {
                                CliError::Fail(
                                    "divis needs integer divisor labels on every point".into(),
                                )
                            })
                        })
                        .collect::<Result<_, _>>()?;
                    let max = *values.iter().max().ok_or_else(|| {
                        CliError::Fail("divis needs a non-empty poset".into())
                    })?;
                    let spec = DivisibilitySpec::factorize(max)?;
                    let generated = gen_divisibility(&spec, cap)?;
                    let map =
                        align_by_labels(&generated, p, &format!("the divisor lattice of {max}"))?;
                    (spec, p.clone(), map)
                }
                (None, Some(v)) => {
                    let spec = DivisibilitySpec::factorize(v)?;
                    let p = gen_divisibility(&spec, cap)?;
                    let map = (0..p.n()).collect();
                    (spec, p, map)
                }
                _ => {
                    return Err(CliError::Usage(
                        "divis needs an input poset or --n".into(),
                    ))
                }
            };
            let m = divisibility_new_colors(&spec);
            extra_lines.push(format!("new colors: {m}"));
            let (c, r) = divisibility_coloring(&spec, cap)?;
            roles = Some(r);
            let aligned = permute_coloring(&c, &map, p.n());
            (p, aligned, true, false)
        }
        Method::Boolean => {
            let (bits, p, map) = match (&input_poset, n) {
                (Some(p), None) => {
                    if p.n() == 0 || !p.n().is_power_of_two() {
                        return Err(CliError::Fail(
                            "boolean input must have 2^n points".into(),
                        ));
                    }
                    let bits = p.n().trailing_zeros() as usize;
                    let generated = gen_boolean(bits, cap)?;
                    let map = align_by_labels(
                        &generated,
                        p,
                        &format!("the subset lattice of {{1..{bits}}}"),
                    )?;
                    (bits, p.clone(), map)
                }
                (None, Some(v)) => {
                    let bits = v as usize;
                    if bits == 0 {
                        return Err(CliError::Usage("boolean needs n >= 1".into()));
                    }
                    let p = gen_boolean(bits, cap)?;
                    let map = (0..p.n()).collect();
                    (bits, p, map)
                }
                _ => {
                    return Err(CliError::Usage(
                        "boolean needs an input poset or --n".into(),
                    ))
                }
            };
            let (c, r) = boolean_coloring(bits);
            roles = Some(r);
            let aligned = permute_coloring(&c, &map, p.n());
            (p, aligned, true, false)
        }
        Method::Dilworth => {
            let p = input_poset
                .ok_or_else(|| CliError::Usage("dilworth needs an input poset".into()))?;
            let c = dilworth_coloring(&p);
            (p, c, false, true)
        }
        Method::Leftmost => {
            let p = input_poset
                .ok_or_else(|| CliError::Usage("leftmost needs an input poset".into()))?;
            let path = embedding.ok_or_else(|| {
                CliError::Usage("leftmost needs --embedding <file>".into())
            })?;
            let emb = io::parse_embedding(&read_file(path)?)?;
            let c = leftmost_chain_coloring(&p, &emb)?;
            let red = if c.num_colors() > 1 { c.classes()[1].len() } else { 0 };
            extra_lines.push(format!("red points: {red}"));
            (p, c, false, false)
        }
    };

    println!("method: {}", method_name(method));
    println!("colors: {}", coloring.num_colors());
    let sizes: Vec<String> = coloring
        .classes()
        .iter()
        .map(|cl| cl.len().to_string())
        .collect();
    println!("class sizes: {}", sizes.join(" "));
    for line in &extra_lines {
        println!("{line}");
    }
    if verbose {
        if let Some(roles) = &roles {
            let described: Vec<String> = roles
                .iter()
                .enumerate()
                .map(|(i, r)| format!("{i}={r}"))
                .collect();
            println!("color roles: {}", described.join(" "));
        }
    }

    let verification = verify(&poset, &coloring, want_proper, want_chain_proper);
    for line in &verification.messages {
        println!("{line}");
    }
    let outputs = emit_coloring(&poset, &coloring, output, format)?;
    write_manifest(manifest, &manifest_input, outputs)?;
    if verification.passed() {
        println!("result: PASS");
        Ok(0)
    } else {
        println!("result: FAIL");
        Ok(1)
    }
}

fn method_name(m: Method) -> &'static str {
    match m {
        Method::Linext => "linext",
        Method::Rankq => "rankq",
        Method::Improved => "improved",
        Method::Divis => "divis",
        Method::Boolean => "boolean",
        Method::Dilworth => "dilworth",
        Method::Leftmost => "leftmost",
    }
}

// ---------------------------------------------------------------------------
// dnum
// ---------------------------------------------------------------------------

fn cmd_dnum(
    input: &Path,
    chromatic: bool,
    cap: Option<usize>,
    verbose: bool,
) -> Result<i32, CliError> {
    let p = read_poset(input)?;
    let cap = cap.unwrap_or(if chromatic { p.n().max(1) } else { 8 });
    let witness = if chromatic {
        let (v, w) = distinguishing_chromatic_number_with_witness(&p, cap)?;
        println!("chi_D = {v}");
        w
    } else {
        let (v, w) = distinguishing_number_with_witness(&p, cap)?;
        println!("D = {v}");
        w
    };
    println!("witness: {}", io::coloring_to_json(&witness));
    if verbose {
        let mut per_class = String::new();
        for (i, class) in witness.classes().iter().enumerate() {
            let names: Vec<String> = class.iter().map(|&x| p.display_label(x)).collect();
            let _ = writeln!(per_class, "  color {i}: {}", names.join(" "));
        }
        print!("classes:\n{per_class}");
    }
    Ok(0)
}
