//! Serialized forms of the core types.
//!
//! Every JSON document this tool reads or writes round-trips through the
//! structs here. Output field order follows struct declaration order and all
//! collections are emitted in a canonical order, so serializing the same
//! mathematical object twice yields byte-identical documents. Rationals
//! travel as strings, `p` when the denominator is one and `p/q` otherwise,
//! so no precision is lost.

use serde::{Deserialize, Serialize};

use qgs_core::autgroup::{AutGroup, GroupInvariants, Perm};
use qgs_core::gbasis::{Census, GroebnerBasis, Membership, ReductionVerdict};
use qgs_core::graph::Graph;
use qgs_core::hopf::{HopfDescentReport, TensorVerdict};
use qgs_core::ncpoly::GenId;
use qgs_core::presentation::{Presentation, PresentationKind};
use qgs_core::rat::{rat_from_string, rat_to_string, Rat};
use qgs_core::reps::{EdgeMatrixChecks, MatrixRep, RatMatrix, RepError, StarCompatibility};

pub const SCHEMA_VERSION: u32 = 1;

/// Renders any serializable value as pretty JSON with a trailing newline.
pub fn to_json_string<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GraphDto {
    pub vertices: u16,
    pub edges: Vec<(u16, u16)>,
}

impl GraphDto {
    pub fn from_graph(g: &Graph) -> Self {
        GraphDto { vertices: g.n(), edges: g.edges().to_vec() }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PresentationDto {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub kind: Option<String>,
    pub generators: Vec<String>,
    pub relations: Vec<String>,
}

pub fn kind_name(kind: PresentationKind) -> String {
    match kind {
        PresentationKind::QuantumPerm { n } => format!("quantum-perm (n = {})", n),
        PresentationKind::GraphAlgebra { n } => format!("graph (n = {})", n),
        PresentationKind::B0 => "projection".to_string(),
        PresentationKind::Custom => "custom".to_string(),
    }
}

impl PresentationDto {
    pub fn from_presentation(p: &Presentation) -> Self {
        PresentationDto {
            kind: Some(kind_name(p.kind())),
            generators: (0..p.gen_count()).map(|k| p.label(GenId(k)).to_string()).collect(),
            relations: p.relations().iter().map(|r| p.poly_string(&r.poly)).collect(),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DeferredDto {
    pub count: u64,
    pub min_degree: Option<u32>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BasisDto {
    pub schema_version: u32,
    pub degree_bound: u32,
    pub complete_through: u32,
    pub fully_complete: bool,
    pub deferred: DeferredDto,
    pub generators: Vec<String>,
    pub elements: Vec<String>,
}

impl BasisDto {
    pub fn from_basis(gb: &GroebnerBasis) -> Self {
        let p = gb.presentation();
        let (count, min_degree) = gb.deferred_obstructions();
        BasisDto {
            schema_version: SCHEMA_VERSION,
            degree_bound: gb.degree_bound(),
            complete_through: gb.complete_through(),
            fully_complete: gb.is_complete(),
            deferred: DeferredDto { count, min_degree },
            generators: (0..p.gen_count()).map(|k| p.label(GenId(k)).to_string()).collect(),
            elements: gb.elements().iter().map(|e| p.poly_string(e)).collect(),
        }
    }
}

/// Shared shape for reduction and tensor verdicts.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct VerdictDto {
    pub status: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub residual: Option<String>,
}

impl VerdictDto {
    pub fn from_reduction(v: &ReductionVerdict, p: &Presentation) -> Self {
        match v {
            ReductionVerdict::Verified => {
                VerdictDto { status: "verified".into(), residual: None }
            }
            ReductionVerdict::Failed { residual } => VerdictDto {
                status: "failed".into(),
                residual: Some(p.poly_string(residual)),
            },
            ReductionVerdict::InconclusiveAtBound { residual } => VerdictDto {
                status: "inconclusive-at-bound".into(),
                residual: Some(p.poly_string(residual)),
            },
        }
    }

    pub fn from_tensor(v: &TensorVerdict) -> Self {
        // Tensor residuals stay structural; only the status travels.
        match v {
            TensorVerdict::Verified => VerdictDto { status: "verified".into(), residual: None },
            TensorVerdict::Failed { residual } => VerdictDto {
                status: "failed".into(),
                residual: Some(format!("{} tensor terms", residual.num_terms())),
            },
            TensorVerdict::InconclusiveAtBound { residual } => VerdictDto {
                status: "inconclusive-at-bound".into(),
                residual: Some(format!("{} tensor terms", residual.num_terms())),
            },
        }
    }

    pub fn is_verified(&self) -> bool {
        self.status == "verified"
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct NfDto {
    pub input: String,
    pub normal_form: String,
    pub is_zero: bool,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CertificateDto {
    pub terms: usize,
    /// The certificate multiplied back out reproduces input minus residual.
    pub reverified: bool,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MemberDto {
    pub poly: String,
    pub verdict: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub certificate: Option<CertificateDto>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub residual: Option<String>,
}

impl MemberDto {
    pub fn from_membership(
        m: &Membership,
        poly_text: &str,
        original: &qgs_core::ncpoly::NcPoly,
        p: &Presentation,
    ) -> Self {
        match m {
            Membership::Member { certificate } => {
                let certificate = certificate.as_ref().map(|c| CertificateDto {
                    terms: c.terms().len(),
                    reverified: c.expand(p) == *original,
                });
                MemberDto {
                    poly: poly_text.to_string(),
                    verdict: "member".into(),
                    certificate,
                    residual: None,
                }
            }
            Membership::NotMember { residual } => MemberDto {
                poly: poly_text.to_string(),
                verdict: "not-member".into(),
                certificate: None,
                residual: Some(p.poly_string(residual)),
            },
            Membership::InconclusiveAtBound { residual } => MemberDto {
                poly: poly_text.to_string(),
                verdict: "inconclusive-at-bound".into(),
                certificate: None,
                residual: Some(p.poly_string(residual)),
            },
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CensusDto {
    pub degree_bound: u32,
    pub through: u32,
    /// Counts are exact dimensions when the basis is fully complete,
    /// otherwise upper bounds.
    pub exact: bool,
    pub per_degree: Vec<u64>,
    pub cumulative: u64,
}

impl CensusDto {
    pub fn from_census(c: &Census, gb: &GroebnerBasis, through: u32) -> Self {
        CensusDto {
            degree_bound: gb.degree_bound(),
            through,
            exact: gb.is_complete(),
            per_degree: c.per_degree.clone(),
            cumulative: c.cumulative,
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RelationDescentDto {
    pub relation: String,
    pub counit_zero: bool,
    pub antipode: VerdictDto,
    pub star: VerdictDto,
    pub coproduct: VerdictDto,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AntipodeAxiomDto {
    pub i: u16,
    pub j: u16,
    pub left: VerdictDto,
    pub right: VerdictDto,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct HopfReportDto {
    pub all_verified: bool,
    pub relations: Vec<RelationDescentDto>,
    pub antipode_axiom: Vec<AntipodeAxiomDto>,
}

impl HopfReportDto {
    pub fn from_report(r: &HopfDescentReport, p: &Presentation) -> Self {
        let relations = r
            .relation_checks
            .iter()
            .zip(p.relations())
            .map(|(rc, rel)| RelationDescentDto {
                relation: p.poly_string(&rel.poly),
                counit_zero: rc.counit_is_zero,
                antipode: VerdictDto::from_reduction(&rc.antipode, p),
                star: VerdictDto::from_reduction(&rc.star, p),
                coproduct: VerdictDto::from_tensor(&rc.coproduct),
            })
            .collect();
        let antipode_axiom = r
            .antipode_axiom
            .iter()
            .map(|c| AntipodeAxiomDto {
                i: c.i,
                j: c.j,
                left: VerdictDto::from_reduction(&c.left, p),
                right: VerdictDto::from_reduction(&c.right, p),
            })
            .collect();
        HopfReportDto { all_verified: r.all_verified(), relations, antipode_axiom }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GroupDto {
    pub order: u64,
    pub abelian: bool,
    pub cyclic: bool,
    pub dihedral: bool,
    pub elements: Vec<Vec<u16>>,
}

impl GroupDto {
    pub fn from_group(g: &AutGroup, inv: &GroupInvariants) -> Self {
        GroupDto {
            order: inv.order,
            abelian: inv.abelian,
            cyclic: inv.cyclic,
            dihedral: inv.dihedral,
            elements: g.elements().iter().map(|p| p.images().to_vec()).collect(),
        }
    }
}

/// On-disk form of a matrix representation: entries as rational strings.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RepDto {
    pub dim: usize,
    pub matrices: Vec<Vec<Vec<String>>>,
}

pub fn matrix_to_strings(m: &RatMatrix) -> Vec<Vec<String>> {
    (0..m.dim())
        .map(|r| (0..m.dim()).map(|c| rat_to_string(m.get(r, c))).collect())
        .collect()
}

pub fn matrix_from_strings(rows: &[Vec<String>]) -> Result<RatMatrix, String> {
    let parsed: Result<Vec<Vec<Rat>>, String> = rows
        .iter()
        .enumerate()
        .map(|(i, row)| {
            row.iter()
                .map(|s| {
                    rat_from_string(s).ok_or_else(|| format!("row {}: bad rational `{}`", i, s))
                })
                .collect()
        })
        .collect();
    RatMatrix::from_rows(parsed?).map_err(|e| e.to_string())
}

impl RepDto {
    pub fn from_rep(rep: &MatrixRep) -> Self {
        let p = rep.presentation();
        RepDto {
            dim: rep.dim(),
            matrices: (0..p.gen_count())
                .map(|k| matrix_to_strings(rep.matrix(GenId(k)).expect("in range")))
                .collect(),
        }
    }

    pub fn to_rep(
        &self,
        presentation: std::sync::Arc<Presentation>,
    ) -> Result<MatrixRep, String> {
        let mats: Result<Vec<RatMatrix>, String> =
            self.matrices.iter().map(|m| matrix_from_strings(m)).collect();
        let mats = mats?;
        for (k, m) in mats.iter().enumerate() {
            if m.dim() != self.dim {
                return Err(format!(
                    "matrix {} has dimension {}, header says {}",
                    k,
                    m.dim(),
                    self.dim
                ));
            }
        }
        MatrixRep::new(presentation, mats).map_err(|e: RepError| e.to_string())
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RepFailureDto {
    pub relation_index: usize,
    pub relation: String,
    pub residual: Vec<Vec<String>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CommutatorWitnessDto {
    pub a: String,
    pub b: String,
    pub commutator: Vec<Vec<String>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RepCheckDto {
    pub dim: usize,
    pub valid: bool,
    pub failed_relations: Vec<RepFailureDto>,
    pub star_compatible: bool,
    pub star_failures: Vec<String>,
    /// Star failures that are idempotent anyway: projections realized
    /// non-orthogonally.
    pub skew_idempotents: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub commutator_witness: Option<CommutatorWitnessDto>,
}

impl RepCheckDto {
    pub fn from_rep(rep: &MatrixRep) -> Self {
        let p = rep.presentation();
        let failures = rep.verify();
        let valid = failures.is_empty();
        let failed_relations = failures
            .iter()
            .map(|f| RepFailureDto {
                relation_index: f.relation,
                relation: p.poly_string(&p.relations()[f.relation].poly),
                residual: matrix_to_strings(&f.residual),
            })
            .collect();
        let star: StarCompatibility = rep.star_compatibility();
        let label = |g: &GenId| p.label(*g).to_string();
        let commutator_witness = if valid {
            rep.commutator_witness().expect("valid").map(|(a, b, m)| CommutatorWitnessDto {
                a: p.label(a).to_string(),
                b: p.label(b).to_string(),
                commutator: matrix_to_strings(&m),
            })
        } else {
            None
        };
        RepCheckDto {
            dim: rep.dim(),
            valid,
            failed_relations,
            star_compatible: star.is_compatible(),
            star_failures: star.failures.iter().map(label).collect(),
            skew_idempotents: star.skew_idempotents.iter().map(label).collect(),
            commutator_witness,
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct EdgeMatrixDto {
    pub edge_count: usize,
    pub all_verified: bool,
    pub checks: usize,
    pub failed: usize,
}

impl EdgeMatrixDto {
    pub fn from_checks(c: &EdgeMatrixChecks) -> Self {
        let total = c.star.len() + c.orthogonality.len() + c.sums.len();
        let ok = c.star.iter().filter(|(_, v)| v.is_verified()).count()
            + c.orthogonality.iter().filter(|(_, v)| v.is_verified()).count()
            + c.sums.iter().filter(|(_, v)| v.is_verified()).count();
        EdgeMatrixDto {
            edge_count: c.edge_count,
            all_verified: c.all_verified(),
            checks: total,
            failed: total - ok,
        }
    }
}

// ---- classify report ----

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BasisSummaryDto {
    pub elements: usize,
    pub fully_complete: bool,
    pub complete_through: u32,
    pub deferred: DeferredDto,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct WitnessPairDto {
    pub a: String,
    pub b: String,
    /// "basis" when reduction found the pair, "representation" when a
    /// registered matrix representation certified it.
    pub source: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CommutativityDto {
    pub verdict: String,
    pub provenance: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<WitnessPairDto>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DimensionDto {
    pub verdict: String,
    pub provenance: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub dim: Option<u64>,
    pub census: Vec<u64>,
    pub cumulative: u64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ClassicalGroupDto {
    pub order: u64,
    pub abelian: bool,
    pub cyclic: bool,
    pub dihedral: bool,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct QuantumSymmetryDto {
    pub verdict: String,
    pub provenance: String,
    pub explanation: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct HopfSummaryDto {
    pub all_verified: bool,
    pub failed_relations: Vec<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct WitnessRepDto {
    pub found: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub dim: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub valid: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub pair: Option<(String, String)>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ClassifyDto {
    pub schema_version: u32,
    pub graph: GraphDto,
    pub degree_bound: u32,
    pub basis: BasisSummaryDto,
    pub commutativity: CommutativityDto,
    pub dimension: DimensionDto,
    pub classical_group: ClassicalGroupDto,
    pub quantum_symmetry: QuantumSymmetryDto,
    pub hopf_descent: HopfSummaryDto,
    pub edge_matrix: EdgeMatrixDto,
    pub witness_representation: WitnessRepDto,
}

pub fn perm_line(p: &Perm) -> String {
    p.images()
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}
