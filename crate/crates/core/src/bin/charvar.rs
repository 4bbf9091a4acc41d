use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use charvar::cohomology::{
    axis_blocks, cohomology, induced_matrix, plat_space, word_monodromy, CohomologySpace,
    ProductOrder, G1_WORD, H1_WORD, PLAT_BLOCKS,
};
use charvar::exact::{rank, RationalMatrix};
use charvar::groups::{builtin, Presentation, Substitution};
use charvar::lyapunov::{
    half_split_agreement, plat_walk, spectrum, symmetry_check, uniform_expansion_probe,
    RandomWalkSpec, DEFAULT_PERIOD, DEFAULT_SYMMETRY_TOLERANCE,
};
use charvar::quaternions::{
    boct, btet, check_fixed, classify_conjugacy, enumerate_homs, filter_irreducible,
    generate_group, pushforward, quaternion_group, rho0, rho_ew, Representation,
};
use charvar::superell::{
    compatible_sets, genus, holomorphic_basis, quadratic_basis, sqrt_sections, surface_sff,
    CurveSpec,
};
use charvar::verify::{self, VerifyOptions};
use charvar::zariski::{density_certificate, Verdict};

/// Exact computations on SU(2)-character varieties of square-tiled surfaces.
#[derive(Parser)]
#[command(name = "charvar", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Homomorphisms of an orbifold group into a finite quaternion group, pushed to π₁(Plat).
    EnumerateCharacters(EnumerateArgs),
    /// Induced action of a word in T², S² on H¹(π₁(Plat), Ad ρ₀).
    Monodromy(MonodromyArgs),
    /// Characteristic polynomial of a monodromy word.
    Charpoly(WordArgs),
    /// Zariski-density certificate for a pair of symplectic matrices.
    ZariskiCertify(CertifyArgs),
    /// Monte Carlo Lyapunov spectrum of a random matrix product.
    Lyapunov(LyapunovArgs),
    /// Twisted Hodge bases and second fundamental form of a superelliptic curve.
    Sff(SffArgs),
    /// Dimensions of Z¹, B¹, H¹ for a builtin representation.
    Cohomology(CohomologyArgs),
    /// Runs every published check and prints a pass/fail table.
    VerifyPaper(VerifyArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum GroupChoice {
    /// Binary tetrahedral group (24 elements).
    Btet,
    /// Quaternion group (8 elements).
    Q,
}

#[derive(Args)]
struct EnumerateArgs {
    #[arg(long, value_enum, default_value = "btet")]
    group: GroupChoice,
    /// Builtin name or path to a presentation file (generators p1..p4).
    #[arg(long, default_value = "gamma6662")]
    presentation: String,
    /// Report counts without comparing them to 456/132/96/4.
    #[arg(long)]
    no_assert: bool,
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum BasisChoice {
    /// The printed cocycles e1..e18.
    Paper,
    /// A basis computed from the kernel of the Fox Jacobian.
    Auto,
}

#[derive(Args)]
struct WordArgs {
    /// Word in T and S with even exponents, e.g. `T2`, `T6S4T4S6` or `"T^6 S^4"`.
    /// Matrices multiply right to left. Empty gives the identity.
    #[arg(long, allow_hyphen_values = true)]
    word: String,
    #[arg(long, value_enum, default_value = "paper")]
    basis: BasisChoice,
    /// Restrict to an invariant block: U1, U2 or U3.
    #[arg(long)]
    block: Option<String>,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct MonodromyArgs {
    #[command(flatten)]
    word: WordArgs,
    /// Also print the characteristic polynomial.
    #[arg(long)]
    charpoly: bool,
    /// Print the full matrix (default with no other output selected).
    #[arg(long)]
    dump_matrix: bool,
}

#[derive(Args)]
struct CertifyArgs {
    /// Source of g and h, in that order, as `WORD:BLOCK`. Defaults to g₁ and h₁ on U1.
    #[arg(long, num_args = 1)]
    matrix_from: Vec<String>,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct LyapunovArgs {
    /// Builtin walk (`plat`: T², S² and inverses on H¹, uniform).
    #[arg(long, conflicts_with = "matrices")]
    builtin: Option<String>,
    /// JSON file with `generators` (label, matrix), optional `inverses` and `weights`.
    #[arg(long)]
    matrices: Option<String>,
    #[arg(long, default_value_t = 1_000_000)]
    steps: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 8)]
    replicas: usize,
    #[arg(long, default_value_t = DEFAULT_PERIOD)]
    period: usize,
    #[arg(long, default_value_t = DEFAULT_SYMMETRY_TOLERANCE)]
    symmetry_tolerance: f64,
    /// Also run the uniform-expansion probe with words of this length.
    #[arg(long)]
    probe: Option<usize>,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct SffArgs {
    /// Builtin surface: `plat` or `ew`.
    #[arg(long, conflicts_with = "curve")]
    surface: Option<String>,
    /// Custom curve such as `N=6; k=1,1,1,3` (bases and sections only).
    #[arg(long)]
    curve: Option<String>,
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum RepChoice {
    /// ρ₀ on π₁(Plat).
    Rho0,
    /// ρ̂ pulled back to the genus 3 surface group.
    Ew,
}

#[derive(Args)]
struct CohomologyArgs {
    #[arg(long, value_enum, default_value = "rho0")]
    rep: RepChoice,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, default_value_t = 1_000_000)]
    steps: u64,
    #[arg(long, default_value_t = 8)]
    replicas: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Run only this criterion (repeatable).
    #[arg(long)]
    only: Vec<usize>,
    #[arg(long)]
    json: bool,
}

enum Failure {
    Usage(String),
    Assertion(String),
}

type Run = Result<(), Failure>;

/// `println!` that exits quietly when the reader has gone away.
macro_rules! out {
    ($($t:tt)*) => {{
        use std::io::Write;
        if let Err(e) = writeln!(std::io::stdout(), $($t)*) {
            if e.kind() == std::io::ErrorKind::BrokenPipe {
                std::process::exit(0);
            }
            panic!("stdout: {e}");
        }
    }};
}

fn usage<E: std::fmt::Display>(e: E) -> Failure {
    Failure::Usage(e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::EnumerateCharacters(a) => enumerate(a),
        Command::Monodromy(a) => monodromy(a),
        Command::Charpoly(a) => charpoly(a),
        Command::ZariskiCertify(a) => certify(a),
        Command::Lyapunov(a) => lyapunov(a),
        Command::Sff(a) => sff(a),
        Command::Cohomology(a) => cohomology_cmd(a),
        Command::VerifyPaper(a) => verify_paper(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Assertion(m)) => {
            eprintln!("assertion failed: {m}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
    }
}

fn print_json(mut v: Value) {
    v.as_object_mut()
        .expect("reports are objects")
        .insert("schema".into(), json!(1));
    out!(
        "{}",
        serde_json::to_string_pretty(&v).expect("serializable")
    );
}

fn matrix_json(m: &RationalMatrix) -> Value {
    let rows: Vec<Vec<String>> = (0..m.rows())
        .map(|i| m.row(i).iter().map(ToString::to_string).collect())
        .collect();
    json!(rows)
}

fn rep_names(r: &Representation) -> Vec<String> {
    r.values().iter().map(ToString::to_string).collect()
}

fn load_presentation(name: &str) -> Result<Presentation, Failure> {
    match builtin::presentation(name) {
        Ok(p) => Ok(p),
        Err(_) => {
            let text = std::fs::read_to_string(name).map_err(|e| usage(format!("{name}: {e}")))?;
            Presentation::parse(&text).map_err(usage)
        }
    }
}

fn enumerate(a: EnumerateArgs) -> Run {
    let target = match a.group {
        GroupChoice::Btet => btet(),
        GroupChoice::Q => quaternion_group(),
    };
    let pres = load_presentation(&a.presentation)?;
    let phi = Substitution::parse(builtin::PHI_PLAT, &builtin::plat(), &pres).map_err(usage)?;
    let homs = enumerate_homs(&pres, &target);
    let pushed = pushforward(&homs, &phi).map_err(usage)?;
    let irr = filter_irreducible(&pushed);
    let orbits = classify_conjugacy(&irr, &boct());
    let fixed: Vec<(bool, bool)> = orbits
        .iter()
        .map(|o| {
            let t = check_fixed(&o.representative, &builtin::t2_plat(), &target).map(|f| f.fixed);
            let s = check_fixed(&o.representative, &builtin::s2_plat(), &target).map(|f| f.fixed);
            Ok((t.map_err(usage)?, s.map_err(usage)?))
        })
        .collect::<Result<_, Failure>>()?;
    let counts = [homs.len(), pushed.len(), irr.len(), orbits.len()];
    if a.json {
        print_json(json!({
            "group": target.order(),
            "counts": {"homs": counts[0], "pushforwards": counts[1], "irreducible": counts[2], "orbits": counts[3]},
            "orbits": orbits.iter().zip(&fixed).map(|(o, f)| json!({
                "representative": rep_names(&o.representative),
                "size": o.size(),
                "fixed_t2": f.0,
                "fixed_s2": f.1,
            })).collect::<Vec<_>>(),
        }));
    } else {
        out!("|Hom(Γ, G)|      {}", counts[0]);
        out!("pushforwards     {}", counts[1]);
        out!("irreducible      {}", counts[2]);
        out!("BOct orbits      {}", counts[3]);
        let names = builtin::plat().gens().join(" ");
        for (o, f) in orbits.iter().zip(&fixed) {
            out!(
                "  ({}) on {names}: size {}, T²-fixed {}, S²-fixed {}",
                rep_names(&o.representative).join(", "),
                o.size(),
                f.0,
                f.1
            );
        }
    }
    if !a.no_assert && matches!(a.group, GroupChoice::Btet) {
        if counts != [456, 132, 96, 4] {
            return Err(Failure::Assertion(format!(
                "counts {counts:?} != [456, 132, 96, 4]"
            )));
        }
        if !fixed.iter().all(|f| f.0 && f.1) {
            return Err(Failure::Assertion(
                "a class is not fixed by T² and S²".into(),
            ));
        }
    }
    Ok(())
}

fn block_index(name: &str) -> Result<usize, Failure> {
    match name.to_ascii_uppercase().as_str() {
        "U1" => Ok(0),
        "U2" => Ok(1),
        "U3" => Ok(2),
        _ => Err(usage(format!(
            "unknown block {name}; expected U1, U2 or U3"
        ))),
    }
}

fn space_for(basis: BasisChoice) -> Result<CohomologySpace, Failure> {
    match basis {
        BasisChoice::Paper => plat_space().map_err(usage),
        BasisChoice::Auto => cohomology(&rho0()).map_err(usage),
    }
}

/// Matrix of `word` in the chosen basis, optionally restricted to a block.
fn word_matrix(
    word: &str,
    basis: BasisChoice,
    block: Option<&str>,
) -> Result<RationalMatrix, Failure> {
    let space = space_for(basis)?;
    let o = boct();
    let t = induced_matrix(&space, &builtin::t2_plat(), &o)
        .map_err(usage)?
        .matrix;
    let s = induced_matrix(&space, &builtin::s2_plat(), &o)
        .map_err(usage)?
        .matrix;
    let blocks: Vec<Vec<usize>> = match basis {
        BasisChoice::Paper => PLAT_BLOCKS.iter().map(|b| b.to_vec()).collect(),
        BasisChoice::Auto => axis_blocks(&space).map_err(usage)?,
    };
    let b = block.map(block_index).transpose()?;
    word_monodromy(
        &[("T", 2, &t), ("S", 2, &s)],
        word,
        ProductOrder::RightToLeft,
        b.map(|i| blocks[i].as_slice()),
    )
    .map_err(usage)
}

fn monodromy(a: MonodromyArgs) -> Run {
    let w = &a.word;
    let m = word_matrix(&w.word, w.basis, w.block.as_deref())?;
    let cp = if a.charpoly {
        Some(m.charpoly().map_err(usage)?)
    } else {
        None
    };
    let dump = a.dump_matrix || cp.is_none();
    if w.json {
        let mut v =
            json!({"word": w.word, "block": w.block, "size": m.rows(), "matrix": matrix_json(&m)});
        if let Some(p) = &cp {
            v["charpoly"] = json!(p.to_string());
        }
        print_json(v);
    } else {
        if dump {
            out!("{m}");
        }
        if let Some(p) = cp {
            out!("charpoly: {p}");
        }
    }
    Ok(())
}

fn charpoly(a: WordArgs) -> Run {
    let m = word_matrix(&a.word, a.basis, a.block.as_deref())?;
    let p = m.charpoly().map_err(usage)?;
    if a.json {
        print_json(json!({"word": a.word, "block": a.block, "charpoly": p.to_string()}));
    } else {
        out!("{p}");
    }
    Ok(())
}

fn certify(a: CertifyArgs) -> Run {
    let sources = match a.matrix_from.len() {
        0 => vec![format!("{G1_WORD}:U1"), format!("{H1_WORD}:U1")],
        2 => a.matrix_from.clone(),
        n => {
            return Err(usage(format!(
                "need two --matrix-from values (g then h), got {n}"
            )))
        }
    };
    let mut mats = Vec::new();
    for s in &sources {
        let (word, block) = s
            .rsplit_once(':')
            .ok_or_else(|| usage(format!("{s}: expected WORD:BLOCK")))?;
        mats.push(word_matrix(word, BasisChoice::Paper, Some(block))?);
    }
    let cert = density_certificate(&mats[0], &mats[1]).map_err(usage)?;
    if a.json {
        let mut v = serde_json::to_value(&cert).expect("serializable");
        v["g"] = json!(sources[0]);
        v["h"] = json!(sources[1]);
        print_json(v);
    } else {
        let p = &cert.pinching;
        out!("g = {}, h = {}", sources[0], sources[1]);
        out!("charpoly(g)        {}", p.charpoly);
        if let Some(q) = &p.trace_polynomial {
            out!("trace polynomial   {q}");
        }
        if let Some(d) = &p.disc_trace_polynomial {
            out!("Disc               {d}");
        }
        if let Some(d) = &p.delta31 {
            out!("Δ₃,₁               {d}");
        }
        out!(
            "witness prime      {:?} {:?}",
            p.witness_prime,
            p.witness_degrees
        );
        out!("g pinching         {}", p.pinching);
        out!("h infinite order   {}", cert.h_infinite_order);
        out!("commute            {}", cert.commute);
        out!("eigenplane rank    {:?}", cert.eigenplane_rank);
        out!("verdict            {:?}", cert.verdict);
        for r in &cert.reasons {
            out!("  reason: {r}");
        }
    }
    if cert.verdict != Verdict::Sp6 {
        return Err(Failure::Assertion(format!("verdict {:?}", cert.verdict)));
    }
    Ok(())
}

fn lyapunov(a: LyapunovArgs) -> Run {
    let spec = match (&a.builtin, &a.matrices) {
        (_, Some(path)) => {
            let text = std::fs::read_to_string(path).map_err(|e| usage(format!("{path}: {e}")))?;
            RandomWalkSpec::from_json(&text).map_err(usage)?
        }
        (Some(b), None) if b == "plat" => plat_walk().map_err(usage)?,
        (Some(b), None) => return Err(usage(format!("unknown builtin walk {b}"))),
        (None, None) => plat_walk().map_err(usage)?,
    };
    let spec = spec
        .with_steps(a.steps)
        .with_seed(a.seed)
        .with_replicas(a.replicas)
        .with_period(a.period);
    let report = spectrum(&spec).map_err(usage)?;
    let sym = (report.dimension() % 2 == 0)
        .then(|| symmetry_check(&report.spectrum, a.symmetry_tolerance))
        .transpose()
        .map_err(usage)?;
    let agreement = half_split_agreement(&report, verify::AGREEMENT_SE);
    let probe = a.probe.map(|n0| uniform_expansion_probe(&spec, n0, 256));
    if a.json {
        let mut v = serde_json::to_value(&report).expect("serializable");
        v["labels"] = json!(spec.labels);
        v["symmetry"] = json!(sym);
        v["half_split_agreement"] = json!(agreement);
        v["probe"] = json!(probe);
        print_json(v);
    } else {
        out!(
            "{} generators, dim {}, {} steps × {} replicas, seed {}, period {}",
            spec.generators.len(),
            spec.dimension,
            spec.steps,
            spec.replicas,
            spec.seed,
            spec.period
        );
        for (i, l) in report.spectrum.iter().enumerate() {
            let se = report
                .std_errors
                .as_ref()
                .map_or(String::new(), |s| format!(" ± {:.1e}", s[i]));
            out!("  λ{:<3} {l:+.6}{se}", i + 1);
        }
        out!(
            "positive (> {}): {}",
            report.threshold,
            report.positive_count
        );
        if let Some(s) = &sym {
            out!(
                "symmetry defect: {:.2e} (tolerance {}, pass {})",
                s.defect,
                s.tolerance,
                s.pass
            );
        }
        if let Some(g) = &agreement {
            out!(
                "half-split agreement: max z {:.2} (pass {})",
                g.max_z,
                g.pass
            );
        }
        if let Some(p) = &probe {
            out!(
                "expansion probe n0={}: ĉ = {:.4} over {} vectors (empirical)",
                p.n0,
                p.c_hat,
                p.vectors
            );
        }
        out!("runtime {:.1} s", report.runtime_secs);
    }
    Ok(())
}

fn sff(a: SffArgs) -> Run {
    if let Some(text) = &a.curve {
        let curve = CurveSpec::parse(text).map_err(usage)?;
        let g = genus(&curve);
        let hol = holomorphic_basis(&curve).map_err(usage)?;
        let quad = if g >= 2 {
            quadratic_basis(&curve).map_err(usage)?
        } else {
            Vec::new()
        };
        let secs = sqrt_sections(&curve);
        let triples = compatible_sets(&curve, 3);
        let pairs = compatible_sets(&curve, 2);
        if a.json {
            print_json(json!({
                "curve": curve.to_string(),
                "genus": g,
                "holomorphic": hol,
                "quadratic": quad,
                "sqrt_sections": secs,
                "compatible_pairs": pairs.len(),
                "compatible_triples": triples,
            }));
        } else {
            out!("{curve}   genus {g}");
            out!("holomorphic ({}):", hol.len());
            hol.iter().for_each(|e| out!("  {e}"));
            out!("quadratic ({}):", quad.len());
            quad.iter().for_each(|e| out!("  {e}"));
            out!("square-root sections ({}):", secs.len());
            secs.iter().for_each(|e| out!("  {e}"));
            out!(
                "compatible pairs: {}, triples: {}",
                pairs.len(),
                triples.len()
            );
            for t in &triples {
                out!(
                    "  {{{}}}",
                    t.iter()
                        .map(ToString::to_string)
                        .collect::<Vec<_>>()
                        .join(", ")
                );
            }
        }
        return Ok(());
    }
    let name = a.surface.as_deref().unwrap_or("plat");
    let s = surface_sff(name).map_err(usage)?;
    if a.json {
        let mut v = serde_json::to_value(&s).expect("serializable");
        v["surface"] = json!(name);
        v["matrix"] = matrix_json(&s.matrix);
        print_json(v);
    } else {
        for (i, l) in s.labels.iter().enumerate() {
            out!("  η{:<2} {l}", i + 1);
        }
        out!("{}", s.matrix);
        out!("rank {}, kernel {}", s.rank, s.labels.len() - s.rank);
        out!("{}", s.normalization);
    }
    Ok(())
}

fn cohomology_cmd(a: CohomologyArgs) -> Run {
    let rep = match a.rep {
        RepChoice::Rho0 => rho0(),
        RepChoice::Ew => rho_ew(),
    };
    let h = cohomology(&rep).map_err(usage)?;
    let blocks = axis_blocks(&h).map_err(usage)?;
    let image = generate_group(rep.values()).ok();
    let jac_rank = rank(h.jacobian());
    if a.json {
        print_json(json!({
            "generators": h.presentation().gens(),
            "values": rep_names(&rep),
            "dim_z1": h.dim_z1(),
            "dim_b1": h.dim_b1(),
            "dim_h1": h.dim_h1(),
            "jacobian_rank": jac_rank,
            "axis_blocks": blocks,
        }));
    } else {
        out!(
            "ρ = ({}) on {}",
            rep_names(&rep).join(", "),
            h.presentation().gens().join(" ")
        );
        out!(
            "dim Z¹ = {}, dim B¹ = {}, dim H¹ = {}",
            h.dim_z1(),
            h.dim_b1(),
            h.dim_h1()
        );
        out!(
            "axis blocks: {:?}",
            blocks.iter().map(Vec::len).collect::<Vec<_>>()
        );
        if let Some(g) = image {
            out!("values form a group of order {}", g.order());
        }
    }
    Ok(())
}

fn verify_paper(a: VerifyArgs) -> Run {
    if let Some(bad) = a.only.iter().find(|i| !(1..=verify::CRITERIA).contains(*i)) {
        return Err(usage(format!(
            "no criterion {bad}; expected 1..={}",
            verify::CRITERIA
        )));
    }
    let opts = VerifyOptions {
        lyapunov_steps: a.steps,
        lyapunov_replicas: a.replicas,
        seed: a.seed,
        only: a.only,
    };
    let checks = verify::run(&opts);
    if a.json {
        print_json(json!({"checks": checks, "pass": verify::all_pass(&checks)}));
    } else {
        for c in &checks {
            out!(
                "{:>2} {:<4} {:<24} {:>6.2}s  {}",
                c.id,
                if c.pass { "PASS" } else { "FAIL" },
                c.name,
                c.seconds,
                c.detail
            );
        }
    }
    if verify::all_pass(&checks) {
        Ok(())
    } else {
        let failed: Vec<usize> = checks.iter().filter(|c| !c.pass).map(|c| c.id).collect();
        Err(Failure::Assertion(format!("criteria {failed:?} failed")))
    }
}
