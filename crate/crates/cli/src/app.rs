//! Subcommand definitions and the driver.
//!
//! Results go to stdout; progress timings go to stderr so JSON output stays
//! byte-deterministic. Exit codes: 0 when the requested analysis completed
//! (even if it reports failed checks), 1 for usage, parse, or file errors,
//! 2 when the reduction step cap was exhausted.

use std::path::PathBuf;
use std::sync::Arc;
use std::time::Instant;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};

use qgs_core::autgroup::{automorphisms, group_invariants, DEFAULT_VERTEX_CAP};
use qgs_core::gbasis::{
    compute_gb, Commutativity, DimensionVerdict, GbError, GbOptions, GroebnerBasis, Membership,
};
use qgs_core::graph::Graph;
use qgs_core::hopf::verify_hopf_descent;
use qgs_core::ncpoly::GenId;
use qgs_core::presentation::{d4_to_b0_map, graph_presentation, Presentation};
use qgs_core::reps::{edge_magic_unitary_check, pi_rep, x4_witness_rep, MatrixRep, RatMatrix};

use crate::formats::{
    kind_name, perm_line, to_json_string, BasisDto, BasisSummaryDto, CensusDto, ClassicalGroupDto,
    ClassifyDto, CommutativityDto, DeferredDto, DimensionDto, EdgeMatrixDto, GraphDto,
    HopfReportDto, HopfSummaryDto, GroupDto, MemberDto, NfDto, PresentationDto, QuantumSymmetryDto,
    RepCheckDto, WitnessPairDto, WitnessRepDto, SCHEMA_VERSION,
};
use crate::input::{load_rep_file, resolve_graph, resolve_presentation, InputError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_STEP_CAP: i32 = 2;

/// Environment variable overriding the reduction step cap.
pub const STEP_CAP_ENV: &str = "QGS_STEP_CAP";

#[derive(Parser, Debug)]
#[command(
    name = "qgs",
    version,
    about = "Exact symbolic analysis of quantum symmetries of finite directed graphs"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print the generators and relations of a presentation
    Present(PresentCmd),
    /// Compute a degree-truncated Groebner basis of the relation ideal
    Gb(GbCmd),
    /// Reduce a polynomial to its normal form
    Nf(NfCmd),
    /// Decide ideal membership, with a multiplied-back-out certificate
    Member(MemberCmd),
    /// Count irreducible words per degree (quotient dimensions when complete)
    Census(CensusCmd),
    /// Check that coproduct, counit, antipode, and involution descend
    HopfVerify(HopfVerifyCmd),
    /// Enumerate graph automorphisms and classify the group
    Aut(AutCmd),
    /// Validate a matrix representation from a JSON file
    RepCheck(RepCheckCmd),
    /// Run the full symmetry analysis of a graph
    Classify(ClassifyCmd),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutFormat {
    Text,
    Json,
}

#[derive(Args, Debug)]
pub struct GraphArgs {
    /// Graph file, text or JSON (auto-detected by a leading `{`)
    #[arg(long)]
    pub graph: Option<PathBuf>,
    /// Built-in family: empty, loops, complete, complete-noloops, cycle, d4
    #[arg(long)]
    pub family: Option<String>,
    /// Vertex count for --family, matrix size for quantum-perm
    #[arg(long)]
    pub n: Option<u16>,
}

#[derive(Args, Debug)]
pub struct PresArgs {
    #[command(flatten)]
    pub graph: GraphArgs,
    /// b0 | quantum-perm | graph | path to a presentation JSON file
    #[arg(long)]
    pub presentation: Option<String>,
}

#[derive(Args, Debug)]
pub struct CommonArgs {
    /// Truncation degree for basis completion
    #[arg(long, default_value_t = 6)]
    pub degree_bound: u32,
    /// Output format
    #[arg(long, value_enum, default_value_t = OutFormat::Text)]
    pub format: OutFormat,
    /// Suppress timing lines on stderr
    #[arg(long)]
    pub no_timings: bool,
}

#[derive(Args, Debug)]
pub struct PresentCmd {
    #[command(flatten)]
    pub pres: PresArgs,
    #[command(flatten)]
    pub common: CommonArgs,
}

#[derive(Args, Debug)]
pub struct GbCmd {
    #[command(flatten)]
    pub pres: PresArgs,
    #[command(flatten)]
    pub common: CommonArgs,
}

#[derive(Args, Debug)]
pub struct NfCmd {
    #[command(flatten)]
    pub pres: PresArgs,
    #[command(flatten)]
    pub common: CommonArgs,
    /// Polynomial to reduce
    #[arg(long)]
    pub poly: String,
}

#[derive(Args, Debug)]
pub struct MemberCmd {
    #[command(flatten)]
    pub pres: PresArgs,
    #[command(flatten)]
    pub common: CommonArgs,
    /// Polynomial to test for ideal membership
    #[arg(long)]
    pub poly: String,
}

#[derive(Args, Debug)]
pub struct CensusCmd {
    #[command(flatten)]
    pub pres: PresArgs,
    #[command(flatten)]
    pub common: CommonArgs,
    /// Top degree to count through (default: the degree bound)
    #[arg(long)]
    pub through: Option<u32>,
}

#[derive(Args, Debug)]
pub struct HopfVerifyCmd {
    #[command(flatten)]
    pub pres: PresArgs,
    #[command(flatten)]
    pub common: CommonArgs,
}

#[derive(Args, Debug)]
pub struct AutCmd {
    #[command(flatten)]
    pub graph: GraphArgs,
    /// Output format
    #[arg(long, value_enum, default_value_t = OutFormat::Text)]
    pub format: OutFormat,
    /// Vertex-count cap for the enumeration
    #[arg(long, default_value_t = DEFAULT_VERTEX_CAP)]
    pub vertex_cap: u16,
}

#[derive(Args, Debug)]
pub struct RepCheckCmd {
    #[command(flatten)]
    pub pres: PresArgs,
    /// Representation JSON file ({"dim": d, "matrices": [[["p/q", ..], ..], ..]})
    #[arg(long)]
    pub rep: PathBuf,
    /// Output format
    #[arg(long, value_enum, default_value_t = OutFormat::Text)]
    pub format: OutFormat,
}

#[derive(Args, Debug)]
pub struct ClassifyCmd {
    #[command(flatten)]
    pub graph: GraphArgs,
    #[command(flatten)]
    pub common: CommonArgs,
    /// Trailing zero-run length that counts as finite dimension
    #[arg(long, default_value_t = 2)]
    pub window: u32,
}

/// Everything that can stop a run, mapped to an exit code.
#[derive(Debug)]
pub enum RunError {
    Usage(String),
    StepCap(String),
}

impl From<InputError> for RunError {
    fn from(e: InputError) -> Self {
        RunError::Usage(e.to_string())
    }
}

impl From<GbError> for RunError {
    fn from(e: GbError) -> Self {
        match e {
            GbError::StepCapExceeded { .. } => RunError::StepCap(e.to_string()),
            other => RunError::Usage(other.to_string()),
        }
    }
}

fn gb_options(degree_bound: u32) -> Result<GbOptions, RunError> {
    let mut opts = GbOptions { degree_bound, ..GbOptions::default() };
    if let Ok(raw) = std::env::var(STEP_CAP_ENV) {
        let cap: u64 = raw.parse().map_err(|_| {
            RunError::Usage(format!("{}={}: expected an integer", STEP_CAP_ENV, raw))
        })?;
        opts.step_cap = cap;
    }
    Ok(opts)
}

struct Timer {
    enabled: bool,
}

impl Timer {
    fn new(enabled: bool) -> Self {
        Timer { enabled }
    }

    fn time<T>(&self, label: &str, f: impl FnOnce() -> T) -> T {
        let start = Instant::now();
        let out = f();
        if self.enabled {
            eprintln!("timing: {} {:.1?}", label, start.elapsed());
        }
        out
    }
}

fn basis_for(
    pres: &PresArgs,
    common: &CommonArgs,
    timer: &Timer,
) -> Result<(Arc<Presentation>, GroebnerBasis), RunError> {
    let p = Arc::new(resolve_presentation(
        pres.presentation.as_deref(),
        pres.graph.graph.as_deref(),
        pres.graph.family.as_deref(),
        pres.graph.n,
    )?);
    let opts = gb_options(common.degree_bound)?;
    let gb = timer.time("basis", || compute_gb(&p, &opts))?;
    Ok((p, gb))
}

/// Parses the CLI and runs; returns the process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
            let _ = e.print();
            return code;
        }
    };
    match run(cli) {
        Ok(stdout) => {
            print!("{}", stdout);
            EXIT_OK
        }
        Err(RunError::Usage(msg)) => {
            eprintln!("error: {}", msg);
            EXIT_USAGE
        }
        Err(RunError::StepCap(msg)) => {
            eprintln!("error: {}", msg);
            EXIT_STEP_CAP
        }
    }
}

/// Runs one parsed command and returns what should go to stdout.
pub fn run(cli: Cli) -> Result<String, RunError> {
    match cli.command {
        Command::Present(cmd) => run_present(cmd),
        Command::Gb(cmd) => run_gb(cmd),
        Command::Nf(cmd) => run_nf(cmd),
        Command::Member(cmd) => run_member(cmd),
        Command::Census(cmd) => run_census(cmd),
        Command::HopfVerify(cmd) => run_hopf_verify(cmd),
        Command::Aut(cmd) => run_aut(cmd),
        Command::RepCheck(cmd) => run_rep_check(cmd),
        Command::Classify(cmd) => run_classify(cmd),
    }
}

fn run_present(cmd: PresentCmd) -> Result<String, RunError> {
    let p = resolve_presentation(
        cmd.pres.presentation.as_deref(),
        cmd.pres.graph.graph.as_deref(),
        cmd.pres.graph.family.as_deref(),
        cmd.pres.graph.n,
    )?;
    let dto = PresentationDto::from_presentation(&p);
    Ok(match cmd.common.format {
        OutFormat::Json => to_json_string(&dto),
        OutFormat::Text => {
            let mut out = String::new();
            out.push_str(&format!("kind: {}\n", kind_name(p.kind())));
            out.push_str(&format!(
                "generators ({}): {}\n",
                dto.generators.len(),
                dto.generators.join(", ")
            ));
            out.push_str(&format!("relations ({}):\n", dto.relations.len()));
            for r in &dto.relations {
                out.push_str(&format!("  {}\n", r));
            }
            out
        }
    })
}

fn run_gb(cmd: GbCmd) -> Result<String, RunError> {
    let timer = Timer::new(!cmd.common.no_timings);
    let (_, gb) = basis_for(&cmd.pres, &cmd.common, &timer)?;
    let dto = BasisDto::from_basis(&gb);
    Ok(match cmd.common.format {
        OutFormat::Json => to_json_string(&dto),
        OutFormat::Text => {
            let mut out = String::new();
            out.push_str(&format!("degree bound: {}\n", dto.degree_bound));
            out.push_str(&format!(
                "elements: {} (complete through degree {}{})\n",
                dto.elements.len(),
                dto.complete_through,
                if dto.fully_complete { ", fully complete" } else { "" }
            ));
            out.push_str(&format!(
                "deferred obstructions: {}{}\n",
                dto.deferred.count,
                match dto.deferred.min_degree {
                    Some(d) => format!(" (lowest degree {})", d),
                    None => String::new(),
                }
            ));
            for e in &dto.elements {
                out.push_str(&format!("  {}\n", e));
            }
            out
        }
    })
}

fn run_nf(cmd: NfCmd) -> Result<String, RunError> {
    let timer = Timer::new(!cmd.common.no_timings);
    let (p, gb) = basis_for(&cmd.pres, &cmd.common, &timer)?;
    let poly = p
        .parse_poly(&cmd.poly)
        .map_err(|e| RunError::Usage(format!("--poly: {}", e)))?;
    let nf = timer.time("reduce", || gb.normal_form(&poly))?;
    let dto = NfDto {
        input: cmd.poly.clone(),
        normal_form: p.poly_string(&nf),
        is_zero: nf.is_zero(),
    };
    Ok(match cmd.common.format {
        OutFormat::Json => to_json_string(&dto),
        OutFormat::Text => format!("{}\n", dto.normal_form),
    })
}

fn run_member(cmd: MemberCmd) -> Result<String, RunError> {
    let timer = Timer::new(!cmd.common.no_timings);
    let (p, gb) = basis_for(&cmd.pres, &cmd.common, &timer)?;
    let poly = p
        .parse_poly(&cmd.poly)
        .map_err(|e| RunError::Usage(format!("--poly: {}", e)))?;
    let membership = timer.time("reduce", || gb.ideal_membership(&poly))?;
    let dto = MemberDto::from_membership(&membership, &cmd.poly, &poly, &p);
    Ok(match cmd.common.format {
        OutFormat::Json => to_json_string(&dto),
        OutFormat::Text => match &membership {
            Membership::Member { certificate } => match (certificate, &dto.certificate) {
                (Some(_), Some(c)) => format!(
                    "member of the ideal (certificate with {} terms, {})\n",
                    c.terms,
                    if c.reverified { "re-verified by expansion" } else { "EXPANSION MISMATCH" }
                ),
                _ => "member of the ideal\n".to_string(),
            },
            Membership::NotMember { residual } => {
                format!("not a member; normal form: {}\n", p.poly_string(residual))
            }
            Membership::InconclusiveAtBound { residual } => format!(
                "inconclusive at degree bound {}; normal form: {}\n",
                gb.degree_bound(),
                p.poly_string(residual)
            ),
        },
    })
}

fn run_census(cmd: CensusCmd) -> Result<String, RunError> {
    let timer = Timer::new(!cmd.common.no_timings);
    let (_, gb) = basis_for(&cmd.pres, &cmd.common, &timer)?;
    let through = cmd.through.unwrap_or(cmd.common.degree_bound);
    let census = timer.time("census", || gb.normal_word_census(through))?;
    let dto = CensusDto::from_census(&census, &gb, through);
    Ok(match cmd.common.format {
        OutFormat::Json => to_json_string(&dto),
        OutFormat::Text => {
            let mut out = String::from("degree  count\n");
            for (d, c) in dto.per_degree.iter().enumerate() {
                out.push_str(&format!("{:<7} {}\n", d, c));
            }
            out.push_str(&format!(
                "cumulative: {} ({})\n",
                dto.cumulative,
                if dto.exact { "exact" } else { "upper bounds; basis incomplete" }
            ));
            out
        }
    })
}

fn run_hopf_verify(cmd: HopfVerifyCmd) -> Result<String, RunError> {
    let timer = Timer::new(!cmd.common.no_timings);
    let (p, gb) = basis_for(&cmd.pres, &cmd.common, &timer)?;
    let report = timer
        .time("descent", || verify_hopf_descent(&gb))
        .map_err(|e| RunError::Usage(e.to_string()))?;
    let dto = HopfReportDto::from_report(&report, &p);
    Ok(match cmd.common.format {
        OutFormat::Json => to_json_string(&dto),
        OutFormat::Text => {
            let count = |f: fn(&crate::formats::RelationDescentDto) -> bool| {
                dto.relations.iter().filter(|r| f(r)).count()
            };
            let total = dto.relations.len();
            let axiom_ok = dto
                .antipode_axiom
                .iter()
                .filter(|c| c.left.is_verified() && c.right.is_verified())
                .count();
            let mut out = String::new();
            out.push_str(&format!("relations checked: {}\n", total));
            out.push_str(&format!("counit zero: {}/{}\n", count(|r| r.counit_zero), total));
            out.push_str(&format!(
                "antipode descends: {}/{}\n",
                count(|r| r.antipode.is_verified()),
                total
            ));
            out.push_str(&format!(
                "involution descends: {}/{}\n",
                count(|r| r.star.is_verified()),
                total
            ));
            out.push_str(&format!(
                "coproduct descends: {}/{}\n",
                count(|r| r.coproduct.is_verified()),
                total
            ));
            out.push_str(&format!(
                "antipode axiom: {}/{} entries verified\n",
                axiom_ok,
                dto.antipode_axiom.len()
            ));
            for r in dto.relations.iter().filter(|r| {
                !(r.counit_zero
                    && r.antipode.is_verified()
                    && r.star.is_verified()
                    && r.coproduct.is_verified())
            }) {
                out.push_str(&format!("  not verified: {}\n", r.relation));
            }
            out.push_str(&format!("all verified: {}\n", dto.all_verified));
            out
        }
    })
}

fn run_aut(cmd: AutCmd) -> Result<String, RunError> {
    let g = resolve_graph(
        cmd.graph.graph.as_deref(),
        cmd.graph.family.as_deref(),
        cmd.graph.n,
    )?;
    let group = automorphisms(&g, cmd.vertex_cap).map_err(|e| RunError::Usage(e.to_string()))?;
    let inv = group_invariants(&group);
    let dto = GroupDto::from_group(&group, &inv);
    Ok(match cmd.format {
        OutFormat::Json => to_json_string(&dto),
        OutFormat::Text => {
            let mut out = String::new();
            out.push_str(&format!("order: {}\n", dto.order));
            out.push_str(&format!("abelian: {}\n", dto.abelian));
            out.push_str(&format!("cyclic: {}\n", dto.cyclic));
            out.push_str(&format!("dihedral: {}\n", dto.dihedral));
            out.push_str("elements:\n");
            for p in group.elements() {
                out.push_str(&format!("  {}\n", perm_line(p)));
            }
            out
        }
    })
}

fn run_rep_check(cmd: RepCheckCmd) -> Result<String, RunError> {
    let p = Arc::new(resolve_presentation(
        cmd.pres.presentation.as_deref(),
        cmd.pres.graph.graph.as_deref(),
        cmd.pres.graph.family.as_deref(),
        cmd.pres.graph.n,
    )?);
    let rep = load_rep_file(&cmd.rep, p)?;
    let dto = RepCheckDto::from_rep(&rep);
    Ok(match cmd.format {
        OutFormat::Json => to_json_string(&dto),
        OutFormat::Text => {
            let mut out = String::new();
            out.push_str(&format!("dim: {}\n", dto.dim));
            out.push_str(&format!("valid: {}\n", dto.valid));
            for f in &dto.failed_relations {
                out.push_str(&format!("  fails relation {}: {}\n", f.relation_index, f.relation));
            }
            out.push_str(&format!("star compatible: {}\n", dto.star_compatible));
            if !dto.star_failures.is_empty() {
                out.push_str(&format!("  not symmetric: {}\n", dto.star_failures.join(", ")));
            }
            if !dto.skew_idempotents.is_empty() {
                out.push_str(&format!(
                    "  idempotent but not symmetric (projections realized non-orthogonally): {}\n",
                    dto.skew_idempotents.join(", ")
                ));
            }
            match &dto.commutator_witness {
                Some(w) => out.push_str(&format!(
                    "commutator witness: [{}, {}] is nonzero\n",
                    w.a, w.b
                )),
                None if dto.valid => out.push_str("all generator matrices commute\n"),
                None => {}
            }
            out
        }
    })
}

// ---- classify ----

/// Known two-dimensional witness representations, keyed by the canonical
/// graph identity. Candidates are validated against the presentation before
/// anything is concluded from them.
fn registry_matrices(g: &Graph) -> Option<Vec<RatMatrix>> {
    match g.canonical_key().as_str() {
        // Two opposite 2-cycles: transport the projection-pair representation
        // through the generator map onto the graph's own presentation.
        "n=4;1>2,2>1,3>4,4>3" => {
            let psi = d4_to_b0_map();
            let pi = pi_rep();
            let mats: Vec<RatMatrix> = psi
                .images()
                .iter()
                .map(|img| pi.evaluate(img).expect("images are single generators"))
                .collect();
            Some(mats)
        }
        // Four isolated vertices: the block representation from two
        // non-commuting projections.
        "n=4;" => {
            let rep = x4_witness_rep();
            let mats: Vec<RatMatrix> = (0..16)
                .map(|k| rep.matrix(GenId(k)).expect("in range").clone())
                .collect();
            Some(mats)
        }
        _ => None,
    }
}

fn witness_rep_for(g: &Graph, p: &Arc<Presentation>) -> Option<MatrixRep> {
    let mats = registry_matrices(g)?;
    MatrixRep::new(p.clone(), mats).ok().filter(MatrixRep::is_valid)
}

struct ProvenanceNames;

impl ProvenanceNames {
    const CERTIFIED: &'static str = "certified";
    const EVIDENCE: &'static str = "evidence-at-bound";
    const INCONCLUSIVE: &'static str = "inconclusive";
}

fn run_classify(cmd: ClassifyCmd) -> Result<String, RunError> {
    let timer = Timer::new(!cmd.common.no_timings);
    let g = resolve_graph(
        cmd.graph.graph.as_deref(),
        cmd.graph.family.as_deref(),
        cmd.graph.n,
    )?;
    let p = Arc::new(graph_presentation(&g));
    let opts = gb_options(cmd.common.degree_bound)?;
    let gb = timer.time("basis", || compute_gb(&p, &opts))?;

    let (def_count, def_min) = gb.deferred_obstructions();
    let basis = BasisSummaryDto {
        elements: gb.element_count(),
        fully_complete: gb.is_complete(),
        complete_through: gb.complete_through(),
        deferred: DeferredDto { count: def_count, min_degree: def_min },
    };

    // Candidate witness representation, validated before use.
    let witness_rep = witness_rep_for(&g, &p);
    let rep_witness_pair = witness_rep
        .as_ref()
        .and_then(|rep| rep.commutator_witness().expect("validated").map(|(a, b, _)| (a, b)));

    // Commutativity: all commutators reducing to zero certifies commutative
    // even at a truncation; a witness is certified when the basis is
    // complete, or when a valid representation separates the same quotient.
    let commutativity = match timer.time("commutators", || gb.commutativity_check())? {
        Commutativity::Commutative => CommutativityDto {
            verdict: "commutative".into(),
            provenance: ProvenanceNames::CERTIFIED.into(),
            witness: None,
        },
        Commutativity::Witness { a, b, certified, .. } => {
            if certified {
                CommutativityDto {
                    verdict: "noncommutative".into(),
                    provenance: ProvenanceNames::CERTIFIED.into(),
                    witness: Some(WitnessPairDto {
                        a: p.label(a).to_string(),
                        b: p.label(b).to_string(),
                        source: "basis".into(),
                    }),
                }
            } else if let Some((ra, rb)) = rep_witness_pair {
                CommutativityDto {
                    verdict: "noncommutative".into(),
                    provenance: ProvenanceNames::CERTIFIED.into(),
                    witness: Some(WitnessPairDto {
                        a: p.label(ra).to_string(),
                        b: p.label(rb).to_string(),
                        source: "representation".into(),
                    }),
                }
            } else {
                CommutativityDto {
                    verdict: "noncommutative".into(),
                    provenance: ProvenanceNames::EVIDENCE.into(),
                    witness: Some(WitnessPairDto {
                        a: p.label(a).to_string(),
                        b: p.label(b).to_string(),
                        source: "basis".into(),
                    }),
                }
            }
        }
    };

    let census = timer.time("census", || gb.normal_word_census(cmd.common.degree_bound))?;
    let dimension = match timer.time("dimension", || gb.dimension_verdict(cmd.window))? {
        DimensionVerdict::Finite { dim } => DimensionDto {
            verdict: "finite".into(),
            provenance: ProvenanceNames::CERTIFIED.into(),
            dim: Some(dim),
            census: census.per_degree.clone(),
            cumulative: census.cumulative,
        },
        DimensionVerdict::GrowthEvidence { certified, .. } => DimensionDto {
            verdict: "growth-evidence".into(),
            provenance: if certified {
                ProvenanceNames::CERTIFIED.into()
            } else {
                ProvenanceNames::EVIDENCE.into()
            },
            dim: None,
            census: census.per_degree.clone(),
            cumulative: census.cumulative,
        },
        DimensionVerdict::Inconclusive => DimensionDto {
            verdict: "undetermined".into(),
            provenance: ProvenanceNames::INCONCLUSIVE.into(),
            dim: None,
            census: census.per_degree.clone(),
            cumulative: census.cumulative,
        },
    };

    let group = timer
        .time("automorphisms", || automorphisms(&g, DEFAULT_VERTEX_CAP))
        .map_err(|e| RunError::Usage(e.to_string()))?;
    let inv = group_invariants(&group);
    let classical_group = ClassicalGroupDto {
        order: inv.order,
        abelian: inv.abelian,
        cyclic: inv.cyclic,
        dihedral: inv.dihedral,
    };

    let quantum_symmetry = match (commutativity.verdict.as_str(), commutativity.provenance.as_str())
    {
        ("commutative", _) => QuantumSymmetryDto {
            verdict: "absent".into(),
            provenance: ProvenanceNames::CERTIFIED.into(),
            explanation: format!(
                "the quotient is commutative, so it is the algebra of functions on the {} classical automorphisms",
                inv.order
            ),
        },
        ("noncommutative", prov) if prov == ProvenanceNames::CERTIFIED => QuantumSymmetryDto {
            verdict: "present".into(),
            provenance: ProvenanceNames::CERTIFIED.into(),
            explanation: "the quotient is noncommutative, but functions on any permutation group commute".into(),
        },
        _ => QuantumSymmetryDto {
            verdict: "undetermined".into(),
            provenance: ProvenanceNames::EVIDENCE.into(),
            explanation: format!(
                "a commutator has nonzero normal form at degree bound {} but the basis is incomplete",
                gb.degree_bound()
            ),
        },
    };

    let hopf = timer
        .time("descent", || verify_hopf_descent(&gb))
        .map_err(|e| RunError::Usage(e.to_string()))?;
    let failed_relations = hopf
        .relation_checks
        .iter()
        .enumerate()
        .filter(|(_, rc)| !rc.is_verified())
        .map(|(k, _)| p.poly_string(&p.relations()[k].poly))
        .collect();
    let hopf_descent =
        HopfSummaryDto { all_verified: hopf.all_verified(), failed_relations };

    let edge = timer
        .time("edge-matrix", || edge_magic_unitary_check(&g, &gb))
        .map_err(|e| RunError::Usage(e.to_string()))?;
    let edge_matrix = EdgeMatrixDto::from_checks(&edge);

    let witness_representation = match (&witness_rep, rep_witness_pair) {
        (Some(rep), Some((a, b))) => WitnessRepDto {
            found: true,
            dim: Some(rep.dim()),
            valid: Some(true),
            pair: Some((p.label(a).to_string(), p.label(b).to_string())),
        },
        (Some(rep), None) => WitnessRepDto {
            found: true,
            dim: Some(rep.dim()),
            valid: Some(true),
            pair: None,
        },
        (None, _) => WitnessRepDto { found: false, dim: None, valid: None, pair: None },
    };

    let dto = ClassifyDto {
        schema_version: SCHEMA_VERSION,
        graph: GraphDto::from_graph(&g),
        degree_bound: gb.degree_bound(),
        basis,
        commutativity,
        dimension,
        classical_group,
        quantum_symmetry,
        hopf_descent,
        edge_matrix,
        witness_representation,
    };

    Ok(match cmd.common.format {
        OutFormat::Json => to_json_string(&dto),
        OutFormat::Text => classify_text(&dto),
    })
}

fn classify_text(d: &ClassifyDto) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "graph: {} vertices, {} edges\n",
        d.graph.vertices,
        d.graph.edges.len()
    ));
    out.push_str(&format!("degree bound: {}\n", d.degree_bound));
    out.push_str(&format!(
        "basis: {} elements, complete through degree {}{}\n",
        d.basis.elements,
        d.basis.complete_through,
        if d.basis.fully_complete { " (fully complete)" } else { " (incomplete)" }
    ));
    out.push_str(&format!(
        "commutativity: {} ({})\n",
        d.commutativity.verdict, d.commutativity.provenance
    ));
    if let Some(w) = &d.commutativity.witness {
        out.push_str(&format!(
            "  witness: [{}, {}] nonzero (via {})\n",
            w.a, w.b, w.source
        ));
    }
    out.push_str(&format!(
        "dimension: {} ({})",
        d.dimension.verdict, d.dimension.provenance
    ));
    if let Some(dim) = d.dimension.dim {
        out.push_str(&format!(", dim = {}", dim));
    }
    out.push('\n');
    let census_line = d
        .dimension
        .census
        .iter()
        .map(|c| c.to_string())
        .collect::<Vec<_>>()
        .join(" ");
    out.push_str(&format!(
        "  census: {} (cumulative {})\n",
        census_line, d.dimension.cumulative
    ));
    out.push_str(&format!(
        "classical automorphism group: order {}, {}{}{}\n",
        d.classical_group.order,
        if d.classical_group.abelian { "abelian" } else { "nonabelian" },
        if d.classical_group.cyclic { ", cyclic" } else { "" },
        if d.classical_group.dihedral { ", dihedral" } else { "" }
    ));
    out.push_str(&format!(
        "hopf descent: {}\n",
        if d.hopf_descent.all_verified { "verified" } else { "NOT verified" }
    ));
    for r in &d.hopf_descent.failed_relations {
        out.push_str(&format!("  not verified: {}\n", r));
    }
    out.push_str(&format!(
        "edge matrix: {} ({} checks over {} edges{})\n",
        if d.edge_matrix.all_verified { "verified" } else { "NOT verified" },
        d.edge_matrix.checks,
        d.edge_matrix.edge_count,
        if d.edge_matrix.failed > 0 {
            format!(", {} failed", d.edge_matrix.failed)
        } else {
            String::new()
        }
    ));
    match (&d.witness_representation.found, &d.witness_representation.pair) {
        (true, Some((a, b))) => out.push_str(&format!(
            "witness representation: dim {}, valid; separates [{}, {}]\n",
            d.witness_representation.dim.unwrap_or(0),
            a,
            b
        )),
        (true, None) => out.push_str("witness representation: valid, all pairs commute\n"),
        (false, _) => out.push_str("witness representation: none registered\n"),
    }
    out.push_str(&format!(
        "quantum symmetry: {} ({})\n",
        d.quantum_symmetry.verdict.to_uppercase(),
        d.quantum_symmetry.provenance
    ));
    out.push_str(&format!("  {}\n", d.quantum_symmetry.explanation));
    out
}
