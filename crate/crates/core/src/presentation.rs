//! Presentations of the quotient algebras: generator labels plus a normalized
//! relation list, and algebra maps given by images of generators.
//!
//! Three built-in constructors:
//!
//! - [`quantum_perm_presentation`]: n² generators x\[i,j\] with each row and
//!   column a partition of unity into orthogonal idempotents ("magic" rows
//!   and columns),
//! - [`graph_presentation`]: the same generators X\[i,j\] plus, per edge, the
//!   vanishing of edge-to-non-edge products, the commutation of edge-pair
//!   products, and the edge-indexed partition sums,
//! - [`b0_presentation`]: eight idempotents y1..y8 with a fixed orthogonality
//!   pattern and four partition sums. This is the quotient of the 4-vertex
//!   two-2-cycles graph algebra in disguise; [`b0_to_d4_map`] and
//!   [`d4_to_b0_map`] realize the isomorphism in both directions.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use crate::graph::{builtin_graph, Graph, GraphFamily};
use crate::ncpoly::{parse_poly, GenId, GenOutOfRange, NcPoly, PolyParseError, Word};
use crate::rat::Rat;
use num_traits::One;

/// What shape of presentation this is. Matrix-shaped kinds expose the
/// (row, column) structure that the Hopf operations need.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PresentationKind {
    /// Magic-unitary relations only, n² generators.
    QuantumPerm { n: u16 },
    /// Magic-unitary plus edge relations for a graph on n vertices.
    GraphAlgebra { n: u16 },
    /// The fixed 8-generator projection presentation.
    B0,
    /// User-supplied relations; no extra structure assumed.
    Custom,
}

/// Which relation family a relation came from. Kept for reporting and for
/// family-filtered queries; ties are broken toward the smaller variant when
/// normalization merges duplicates across families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum RelationTag {
    /// Row/column orthogonality, idempotence, and row/column sums.
    Magic,
    /// Edge-source/target products against non-edges vanish (all four orders).
    NonEdgeVanish,
    /// Edge-pair products commute.
    EdgeCommute,
    /// Edge-indexed partition sums equal one.
    EdgeSum,
    /// Generator idempotence (projection presentations).
    Idempotent,
    /// A fixed orthogonality pair, both orders.
    Orthogonal,
    /// A partition-of-unity sum.
    PartitionSum,
    Custom,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relation {
    pub poly: NcPoly,
    pub tag: RelationTag,
}

/// A generator list plus normalized relations: every relation is monic, the
/// list is duplicate-free and sorted, and the ideal it generates is closed
/// under the *-involution (checkable via [`Presentation::is_star_closed`]).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    kind: PresentationKind,
    labels: Vec<String>,
    relations: Vec<Relation>,
}

impl Presentation {
    fn from_raw(
        kind: PresentationKind,
        labels: Vec<String>,
        raw: Vec<Relation>,
    ) -> Presentation {
        let gen_count = labels.len() as u16;
        let mut cleaned: Vec<Relation> = Vec::with_capacity(raw.len());
        for r in raw {
            debug_assert!(r.poly.max_gen_index().map_or(true, |i| i < gen_count));
            if r.poly.is_zero() {
                continue;
            }
            let (monic, _) = r.poly.into_monic();
            cleaned.push(Relation { poly: monic, tag: r.tag });
        }
        cleaned.sort_by(|a, b| a.poly.cmp(&b.poly).then(a.tag.cmp(&b.tag)));
        cleaned.dedup_by(|next, prev| {
            // sorted, so the kept (`prev`) entry already has the smaller tag
            next.poly == prev.poly
        });
        Presentation { kind, labels, relations: cleaned }
    }

    /// Builds a presentation from user-supplied relations.
    pub fn custom(labels: Vec<String>, relations: Vec<NcPoly>) -> Result<Presentation, PresentationError> {
        let mut seen = BTreeSet::new();
        for l in &labels {
            if l.is_empty() {
                return Err(PresentationError::EmptyLabel);
            }
            if !seen.insert(l.clone()) {
                return Err(PresentationError::DuplicateLabel(l.clone()));
            }
        }
        let count = labels.len() as u16;
        for p in &relations {
            if let Some(idx) = p.max_gen_index() {
                if idx >= count {
                    return Err(PresentationError::GenOutOfRange(GenOutOfRange { index: idx, count }));
                }
            }
        }
        Ok(Self::from_raw(
            PresentationKind::Custom,
            labels,
            relations.into_iter().map(|poly| Relation { poly, tag: RelationTag::Custom }).collect(),
        ))
    }

    /// Rebuilds with a different kind; used for constructing matrix-shaped
    /// variants of filtered relation sets in tests and negative controls.
    pub fn with_kind(mut self, kind: PresentationKind) -> Presentation {
        self.kind = kind;
        self
    }

    pub fn kind(&self) -> PresentationKind {
        self.kind
    }

    pub fn gen_count(&self) -> u16 {
        self.labels.len() as u16
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, g: GenId) -> &str {
        &self.labels[g.0 as usize]
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    pub fn relation_polys(&self) -> impl Iterator<Item = &NcPoly> {
        self.relations.iter().map(|r| &r.poly)
    }

    pub fn max_relation_degree(&self) -> u32 {
        self.relations.iter().filter_map(|r| r.poly.degree()).max().unwrap_or(0)
    }

    /// Matrix side length n for the matrix-shaped kinds.
    pub fn matrix_size(&self) -> Option<u16> {
        match self.kind {
            PresentationKind::QuantumPerm { n } | PresentationKind::GraphAlgebra { n } => Some(n),
            _ => None,
        }
    }

    /// Row-major generator index for 1-based (i, j).
    pub fn gen_index(&self, i: u16, j: u16) -> Option<GenId> {
        let n = self.matrix_size()?;
        if i < 1 || i > n || j < 1 || j > n {
            return None;
        }
        Some(GenId((i - 1) * n + (j - 1)))
    }

    /// Inverse of [`Self::gen_index`].
    pub fn gen_pair(&self, g: GenId) -> Option<(u16, u16)> {
        let n = self.matrix_size()?;
        if g.0 >= n * n {
            return None;
        }
        Some((g.0 / n + 1, g.0 % n + 1))
    }

    pub fn parse_poly(&self, text: &str) -> Result<NcPoly, PolyParseError> {
        parse_poly(text, &self.labels)
    }

    pub fn poly_string(&self, p: &NcPoly) -> String {
        p.display(&self.labels).to_string()
    }

    /// Relation-for-relation equality, ignoring labels and kind. The lists
    /// are normalized and sorted, so slice equality is exact.
    pub fn same_relations(&self, other: &Presentation) -> bool {
        self.relations.len() == other.relations.len()
            && self
                .relations
                .iter()
                .zip(&other.relations)
                .all(|(a, b)| a.poly == b.poly)
    }

    /// Checks that the involution of every relation is again a relation
    /// (after monic normalization): a syntactic sufficient condition for the
    /// ideal to be a *-ideal. It can be false while the ideal is still
    /// star-closed; the edge-sum relations of a directed graph whose edge set
    /// is not closed under arrow reversal have involutions that are
    /// consequences rather than listed relations. The semantic check is the
    /// reduction of each starred relation to zero against a Groebner basis.
    pub fn is_star_closed(&self) -> bool {
        let set: BTreeSet<&NcPoly> = self.relations.iter().map(|r| &r.poly).collect();
        self.relations.iter().all(|r| {
            let star = r.poly.involution();
            if star.is_zero() {
                return true;
            }
            let (monic, _) = star.into_monic();
            set.contains(&monic)
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PresentationError {
    EmptyLabel,
    DuplicateLabel(String),
    GenOutOfRange(GenOutOfRange),
}

impl fmt::Display for PresentationError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PresentationError::EmptyLabel => write!(f, "empty generator label"),
            PresentationError::DuplicateLabel(l) => write!(f, "duplicate generator label `{}`", l),
            PresentationError::GenOutOfRange(e) => write!(f, "{}", e),
        }
    }
}

impl core::error::Error for PresentationError {}

fn matrix_labels(sym: char, n: u16) -> Vec<String> {
    let mut v = Vec::with_capacity(n as usize * n as usize);
    for i in 1..=n {
        for j in 1..=n {
            v.push(format!("{}[{},{}]", sym, i, j));
        }
    }
    v
}

fn mat_gen(n: u16, i: u16, j: u16) -> GenId {
    GenId((i - 1) * n + (j - 1))
}

fn mono2(n: u16, a: (u16, u16), b: (u16, u16)) -> NcPoly {
    NcPoly::monomial(
        Word::from_ids([mat_gen(n, a.0, a.1), mat_gen(n, b.0, b.1)]),
        Rat::one(),
    )
}

/// The magic relations on an n×n generator matrix, pre-normalization:
/// for all i,j,k both `u[i,j]·u[i,k] − δ_jk·u[i,j]` and `u[j,i]·u[k,i] −
/// δ_jk·u[j,i]`, plus all row sums and column sums minus one. Raw count
/// 2n³ + 2n before deduplication.
fn magic_relations(n: u16) -> Vec<Relation> {
    let mut rels = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            for k in 1..=n {
                let row = {
                    let prod = mono2(n, (i, j), (i, k));
                    if j == k {
                        prod.sub(&NcPoly::gen(mat_gen(n, i, j)))
                    } else {
                        prod
                    }
                };
                rels.push(Relation { poly: row, tag: RelationTag::Magic });
                let col = {
                    let prod = mono2(n, (j, i), (k, i));
                    if j == k {
                        prod.sub(&NcPoly::gen(mat_gen(n, j, i)))
                    } else {
                        prod
                    }
                };
                rels.push(Relation { poly: col, tag: RelationTag::Magic });
            }
        }
    }
    for i in 1..=n {
        let row_sum = (1..=n).fold(NcPoly::zero(), |acc, l| acc.add(&NcPoly::gen(mat_gen(n, i, l))));
        rels.push(Relation { poly: row_sum.sub(&NcPoly::one()), tag: RelationTag::Magic });
        let col_sum = (1..=n).fold(NcPoly::zero(), |acc, l| acc.add(&NcPoly::gen(mat_gen(n, l, i))));
        rels.push(Relation { poly: col_sum.sub(&NcPoly::one()), tag: RelationTag::Magic });
    }
    rels
}

/// The quantum permutation presentation on n² generators x\[i,j\].
pub fn quantum_perm_presentation(n: u16) -> Presentation {
    Presentation::from_raw(
        PresentationKind::QuantumPerm { n },
        matrix_labels('x', n),
        magic_relations(n),
    )
}

/// The edge-derived relation families for a graph, pre-normalization.
/// `NonEdgeVanish`: for every edge (s,t) and non-edge (i,k), the four products
/// X\[s,i\]·X\[t,k\], X\[t,k\]·X\[s,i\], X\[i,s\]·X\[k,t\], X\[k,t\]·X\[i,s\].
/// `EdgeCommute`: for every ordered edge pair ((s,t),(s',t')), the commutator
/// of X\[s,s'\] and X\[t,t'\]. `EdgeSum`: for every edge j, both
/// Σ_l X\[s_l,s_j\]·X\[t_l,t_j\] − 1 and Σ_l X\[s_j,s_l\]·X\[t_j,t_l\] − 1.
pub fn graph_family_relations(g: &Graph, tag: RelationTag) -> Vec<NcPoly> {
    let n = g.n();
    let mut rels = Vec::new();
    match tag {
        RelationTag::Magic => {
            rels.extend(magic_relations(n).into_iter().map(|r| r.poly));
        }
        RelationTag::NonEdgeVanish => {
            let non_edges = g.non_edges();
            for &(s, t) in g.edges() {
                for &(i, k) in &non_edges {
                    rels.push(mono2(n, (s, i), (t, k)));
                    rels.push(mono2(n, (t, k), (s, i)));
                    rels.push(mono2(n, (i, s), (k, t)));
                    rels.push(mono2(n, (k, t), (i, s)));
                }
            }
        }
        RelationTag::EdgeCommute => {
            for &(s, t) in g.edges() {
                for &(s2, t2) in g.edges() {
                    rels.push(mono2(n, (s, s2), (t, t2)).sub(&mono2(n, (t, t2), (s, s2))));
                }
            }
        }
        RelationTag::EdgeSum => {
            for &(sj, tj) in g.edges() {
                let mut left = NcPoly::zero();
                let mut right = NcPoly::zero();
                for &(sl, tl) in g.edges() {
                    left = left.add(&mono2(n, (sl, sj), (tl, tj)));
                    right = right.add(&mono2(n, (sj, sl), (tj, tl)));
                }
                rels.push(left.sub(&NcPoly::one()));
                rels.push(right.sub(&NcPoly::one()));
            }
        }
        _ => {}
    }
    rels
}

/// The quantum symmetry presentation of a graph: magic relations plus the
/// three edge families, on n² generators X\[i,j\].
pub fn graph_presentation(g: &Graph) -> Presentation {
    let mut raw = magic_relations(g.n());
    for tag in [RelationTag::NonEdgeVanish, RelationTag::EdgeCommute, RelationTag::EdgeSum] {
        raw.extend(
            graph_family_relations(g, tag)
                .into_iter()
                .map(|poly| Relation { poly, tag }),
        );
    }
    // relabel: graph presentations use capital X
    Presentation::from_raw(
        PresentationKind::GraphAlgebra { n: g.n() },
        matrix_labels('X', g.n()),
        raw,
    )
}

/// Orthogonality pairs of the 8-generator projection presentation (1-based,
/// each taken in both product orders).
const B0_ORTHOGONAL_PAIRS: [(u16, u16); 20] = [
    (1, 2), (1, 3), (1, 4), (1, 5), (1, 6),
    (2, 3), (2, 4), (2, 5), (2, 6),
    (3, 4), (3, 7), (3, 8),
    (4, 7), (4, 8),
    (5, 6), (5, 7), (5, 8),
    (6, 7), (6, 8),
    (7, 8),
];

/// Partition-of-unity sums of the projection presentation (1-based).
const B0_SUMS: [[u16; 4]; 4] = [[1, 2, 3, 4], [1, 2, 5, 6], [3, 4, 7, 8], [5, 6, 7, 8]];

/// The fixed presentation on eight idempotent generators y1..y8: a specific
/// orthogonality pattern plus four partition sums. Isomorphic to the quotient
/// algebra of the two-2-cycles graph on four vertices via [`b0_to_d4_map`].
pub fn b0_presentation() -> Presentation {
    let labels: Vec<String> = (1..=8).map(|k| format!("y{}", k)).collect();
    let y = |k: u16| GenId(k - 1);
    let mut raw = Vec::new();
    for k in 1..=8 {
        let g = NcPoly::gen(y(k));
        raw.push(Relation { poly: g.mul(&g).sub(&g), tag: RelationTag::Idempotent });
    }
    for &(a, b) in &B0_ORTHOGONAL_PAIRS {
        let (pa, pb) = (NcPoly::gen(y(a)), NcPoly::gen(y(b)));
        raw.push(Relation { poly: pa.mul(&pb), tag: RelationTag::Orthogonal });
        raw.push(Relation { poly: pb.mul(&pa), tag: RelationTag::Orthogonal });
    }
    for sum in &B0_SUMS {
        let s = sum.iter().fold(NcPoly::zero(), |acc, &k| acc.add(&NcPoly::gen(y(k))));
        raw.push(Relation { poly: s.sub(&NcPoly::one()), tag: RelationTag::PartitionSum });
    }
    Presentation::from_raw(PresentationKind::B0, labels, raw)
}

/// An algebra map determined by images of the source generators.
#[derive(Debug, Clone)]
pub struct GeneratorMap {
    source: Arc<Presentation>,
    target: Arc<Presentation>,
    images: Vec<NcPoly>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MapError {
    ImageCountMismatch { expected: u16, got: usize },
    GenOutOfRange(GenOutOfRange),
    PresentationMismatch { what: &'static str },
    MissingSourceBasis,
}

impl fmt::Display for MapError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MapError::ImageCountMismatch { expected, got } => {
                write!(f, "expected {} generator images, got {}", expected, got)
            }
            MapError::GenOutOfRange(e) => write!(f, "{}", e),
            MapError::PresentationMismatch { what } => {
                write!(f, "presentation mismatch: {}", what)
            }
            MapError::MissingSourceBasis => {
                write!(f, "inverse checking needs a Groebner basis for the source presentation")
            }
        }
    }
}

impl core::error::Error for MapError {}

impl GeneratorMap {
    pub fn new(
        source: Arc<Presentation>,
        target: Arc<Presentation>,
        images: Vec<NcPoly>,
    ) -> Result<GeneratorMap, MapError> {
        if images.len() != source.gen_count() as usize {
            return Err(MapError::ImageCountMismatch {
                expected: source.gen_count(),
                got: images.len(),
            });
        }
        for img in &images {
            if let Some(idx) = img.max_gen_index() {
                if idx >= target.gen_count() {
                    return Err(MapError::GenOutOfRange(GenOutOfRange {
                        index: idx,
                        count: target.gen_count(),
                    }));
                }
            }
        }
        Ok(GeneratorMap { source, target, images })
    }

    pub fn source(&self) -> &Arc<Presentation> {
        &self.source
    }

    pub fn target(&self) -> &Arc<Presentation> {
        &self.target
    }

    pub fn images(&self) -> &[NcPoly] {
        &self.images
    }

    /// Substitutes generator images throughout `p` (a polynomial over the
    /// source generators); the result lives over the target generators.
    pub fn apply(&self, p: &NcPoly) -> Result<NcPoly, MapError> {
        if let Some(idx) = p.max_gen_index() {
            if idx >= self.source.gen_count() {
                return Err(MapError::GenOutOfRange(GenOutOfRange {
                    index: idx,
                    count: self.source.gen_count(),
                }));
            }
        }
        p.substitute(&self.images).map_err(MapError::GenOutOfRange)
    }
}

/// Generator images of the isomorphism from the projection presentation into
/// the two-2-cycles graph algebra: y1..y8 ↦ X11, X12, X13, X14, X31, X32,
/// X33, X34.
pub fn b0_to_d4_map() -> GeneratorMap {
    let source = Arc::new(b0_presentation());
    let target = Arc::new(graph_presentation(&builtin_graph(GraphFamily::D4, 0).unwrap()));
    let pairs = [(1, 1), (1, 2), (1, 3), (1, 4), (3, 1), (3, 2), (3, 3), (3, 4)];
    let images = pairs
        .iter()
        .map(|&(i, j)| NcPoly::gen(target.gen_index(i, j).unwrap()))
        .collect();
    GeneratorMap::new(source, target, images).unwrap()
}

/// Generator images of the inverse isomorphism: X11,X22 ↦ y1; X12,X21 ↦ y2;
/// X13,X24 ↦ y3; X14,X23 ↦ y4; X31,X42 ↦ y5; X32,X41 ↦ y6; X33,X44 ↦ y7;
/// X34,X43 ↦ y8.
pub fn d4_to_b0_map() -> GeneratorMap {
    let source = Arc::new(graph_presentation(&builtin_graph(GraphFamily::D4, 0).unwrap()));
    let target = Arc::new(b0_presentation());
    let class_of = |i: u16, j: u16| -> u16 {
        match (i, j) {
            (1, 1) | (2, 2) => 1,
            (1, 2) | (2, 1) => 2,
            (1, 3) | (2, 4) => 3,
            (1, 4) | (2, 3) => 4,
            (3, 1) | (4, 2) => 5,
            (3, 2) | (4, 1) => 6,
            (3, 3) | (4, 4) => 7,
            (3, 4) | (4, 3) => 8,
            _ => unreachable!(),
        }
    };
    let mut images = Vec::with_capacity(16);
    for i in 1..=4 {
        for j in 1..=4 {
            images.push(NcPoly::gen(GenId(class_of(i, j) - 1)));
        }
    }
    GeneratorMap::new(source, target, images).unwrap()
}
