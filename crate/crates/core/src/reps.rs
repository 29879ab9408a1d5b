//! Exact matrix representations of presented algebras.
//!
//! A representation assigns one square rational matrix per generator; it is
//! valid when every relation of the presentation evaluates to the zero
//! matrix. Valid representations turn questions about the quotient into
//! finite linear algebra:
//!
//! - a nonzero commutator `[pi(a), pi(b)]` proves the quotient noncommutative
//!   and exhibits the obstruction concretely,
//! - a generator matrix that is idempotent but not symmetric shows the
//!   particular realization is not by orthogonal projections,
//! - one-dimensional representations of a graph presentation are exactly the
//!   characters attached to automorphisms of the graph.
//!
//! [`edge_magic_unitary_check`] works on the other side of the duality: it
//! certifies inside the quotient (via normal forms, not matrices) that the
//! edge-indexed products `X[s_l,s_j] X[t_l,t_j]` again satisfy the magic
//! relations, so the generator matrix acts on edges as well as vertices.

use alloc::sync::Arc;
use alloc::vec::Vec;

use core::fmt;

use num_traits::{One, Zero};

use crate::autgroup::Perm;
use crate::gbasis::{GbError, GroebnerBasis, ReductionVerdict};
use crate::graph::Graph;
use crate::ncpoly::{GenId, GenOutOfRange, NcPoly, Word};
use crate::presentation::{
    b0_presentation, graph_presentation, quantum_perm_presentation, Presentation,
};
use crate::rat::{rat_frac, rat_int, Rat};

/// Dense square matrix over the rationals, row major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatMatrix {
    dim: usize,
    entries: Vec<Rat>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RepError {
    /// Number of matrices differs from the generator count.
    CountMismatch { expected: u16, got: usize },
    /// Matrices of unequal dimension, or an operand size clash.
    DimMismatch { left: usize, right: usize },
    ZeroDimension,
    /// A row of the wrong length in [`RatMatrix::from_rows`].
    RaggedMatrix { row: usize, expected: usize, got: usize },
    GenOutOfRange(GenOutOfRange),
    /// The operation needs a representation whose [`MatrixRep::verify`] is empty.
    InvalidRepresentation,
    PermSizeMismatch { perm: u16, graph: u16 },
    /// The basis was computed for a different presentation.
    PresentationMismatch,
    /// The basis degree bound is too small for the requested check.
    InsufficientBound { required: u32, bound: u32 },
    Gb(GbError),
}

impl fmt::Display for RepError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RepError::CountMismatch { expected, got } => {
                write!(f, "expected {} generator matrices, got {}", expected, got)
            }
            RepError::DimMismatch { left, right } => {
                write!(f, "matrix dimension mismatch: {} vs {}", left, right)
            }
            RepError::ZeroDimension => write!(f, "matrices must have dimension at least 1"),
            RepError::RaggedMatrix { row, expected, got } => {
                write!(f, "row {} has {} entries, expected {}", row, got, expected)
            }
            RepError::GenOutOfRange(e) => write!(f, "{}", e),
            RepError::InvalidRepresentation => {
                write!(f, "representation does not satisfy the relations")
            }
            RepError::PermSizeMismatch { perm, graph } => {
                write!(f, "permutation on {} points against a graph on {}", perm, graph)
            }
            RepError::PresentationMismatch => {
                write!(f, "basis belongs to a different presentation")
            }
            RepError::InsufficientBound { required, bound } => {
                write!(f, "check needs degree bound {}, basis has {}", required, bound)
            }
            RepError::Gb(e) => write!(f, "{}", e),
        }
    }
}

impl core::error::Error for RepError {}

impl From<GenOutOfRange> for RepError {
    fn from(e: GenOutOfRange) -> Self {
        RepError::GenOutOfRange(e)
    }
}

impl From<GbError> for RepError {
    fn from(e: GbError) -> Self {
        RepError::Gb(e)
    }
}

impl RatMatrix {
    pub fn zero(dim: usize) -> Self {
        RatMatrix { dim, entries: alloc::vec![Rat::zero(); dim * dim] }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = RatMatrix::zero(dim);
        for i in 0..dim {
            m.set(i, i, Rat::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Result<Self, RepError> {
        let dim = rows.len();
        if dim == 0 {
            return Err(RepError::ZeroDimension);
        }
        let mut entries = Vec::with_capacity(dim * dim);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != dim {
                return Err(RepError::RaggedMatrix { row: i, expected: dim, got: row.len() });
            }
            entries.extend(row);
        }
        Ok(RatMatrix { dim, entries })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, r: usize, c: usize) -> &Rat {
        &self.entries[r * self.dim + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rat) {
        self.entries[r * self.dim + c] = v;
    }

    fn check_dim(&self, other: &RatMatrix) -> Result<(), RepError> {
        if self.dim != other.dim {
            return Err(RepError::DimMismatch { left: self.dim, right: other.dim });
        }
        Ok(())
    }

    pub fn add(&self, other: &RatMatrix) -> Result<RatMatrix, RepError> {
        self.check_dim(other)?;
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a + b)
            .collect();
        Ok(RatMatrix { dim: self.dim, entries })
    }

    pub fn sub(&self, other: &RatMatrix) -> Result<RatMatrix, RepError> {
        self.check_dim(other)?;
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a - b)
            .collect();
        Ok(RatMatrix { dim: self.dim, entries })
    }

    pub fn mul(&self, other: &RatMatrix) -> Result<RatMatrix, RepError> {
        self.check_dim(other)?;
        let d = self.dim;
        let mut out = RatMatrix::zero(d);
        for i in 0..d {
            for k in 0..d {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..d {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let cur = out.get(i, j) + &(a * b);
                    out.set(i, j, cur);
                }
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rat) -> RatMatrix {
        RatMatrix {
            dim: self.dim,
            entries: self.entries.iter().map(|e| e * c).collect(),
        }
    }

    pub fn transpose(&self) -> RatMatrix {
        let mut out = RatMatrix::zero(self.dim);
        for r in 0..self.dim {
            for c in 0..self.dim {
                out.set(c, r, self.get(r, c).clone());
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Rat::is_zero)
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.dim).all(|r| (0..r).all(|c| self.get(r, c) == self.get(c, r)))
    }

    pub fn is_idempotent(&self) -> bool {
        self.mul(self).expect("same dim") == *self
    }
}

/// A failed relation: index into `presentation.relations()` plus the nonzero
/// matrix the relation evaluates to.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepFailure {
    pub relation: usize,
    pub residual: RatMatrix,
}

/// Star-compatibility report: which generator matrices fail to be symmetric.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StarCompatibility {
    /// Generators whose matrix is not symmetric.
    pub failures: Vec<GenId>,
    /// Subset of `failures` whose matrix is idempotent anyway: projections
    /// realized non-orthogonally.
    pub skew_idempotents: Vec<GenId>,
}

impl StarCompatibility {
    pub fn is_compatible(&self) -> bool {
        self.failures.is_empty()
    }
}

/// One square rational matrix per generator of a presentation.
#[derive(Debug, Clone)]
pub struct MatrixRep {
    presentation: Arc<Presentation>,
    dim: usize,
    mats: Vec<RatMatrix>,
}

impl MatrixRep {
    pub fn new(presentation: Arc<Presentation>, mats: Vec<RatMatrix>) -> Result<Self, RepError> {
        let expected = presentation.gen_count();
        if mats.len() != expected as usize {
            return Err(RepError::CountMismatch { expected, got: mats.len() });
        }
        let dim = match mats.first() {
            Some(m) => m.dim(),
            None => 1,
        };
        if dim == 0 {
            return Err(RepError::ZeroDimension);
        }
        for m in &mats {
            if m.dim() != dim {
                return Err(RepError::DimMismatch { left: dim, right: m.dim() });
            }
        }
        Ok(MatrixRep { presentation, dim, mats })
    }

    pub fn presentation(&self) -> &Arc<Presentation> {
        &self.presentation
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn matrix(&self, g: GenId) -> Result<&RatMatrix, RepError> {
        self.mats.get(g.0 as usize).ok_or(RepError::GenOutOfRange(GenOutOfRange {
            index: g.0,
            count: self.presentation.gen_count(),
        }))
    }

    fn word_value(&self, w: &Word) -> Result<RatMatrix, RepError> {
        let mut acc = RatMatrix::identity(self.dim);
        for g in w.gens() {
            acc = acc.mul(self.matrix(g)?)?;
        }
        Ok(acc)
    }

    /// Evaluates a polynomial; the constant term contributes a scalar
    /// multiple of the identity.
    pub fn evaluate(&self, p: &NcPoly) -> Result<RatMatrix, RepError> {
        let mut acc = RatMatrix::zero(self.dim);
        for (w, c) in p.terms() {
            acc = acc.add(&self.word_value(w)?.scale(c))?;
        }
        Ok(acc)
    }

    /// Evaluates every relation; returns the ones that are nonzero.
    pub fn verify(&self) -> Vec<RepFailure> {
        let mut failures = Vec::new();
        for (idx, rel) in self.presentation.relations().iter().enumerate() {
            let residual = self.evaluate(&rel.poly).expect("generators in range");
            if !residual.is_zero() {
                failures.push(RepFailure { relation: idx, residual });
            }
        }
        failures
    }

    pub fn is_valid(&self) -> bool {
        self.verify().is_empty()
    }

    /// Symmetry check per generator. Over the rationals the involution sends
    /// a generator to itself, so a compatible representation needs symmetric
    /// matrices.
    pub fn star_compatibility(&self) -> StarCompatibility {
        let mut failures = Vec::new();
        let mut skew_idempotents = Vec::new();
        for (k, m) in self.mats.iter().enumerate() {
            if !m.is_symmetric() {
                let g = GenId(k as u16);
                failures.push(g);
                if m.is_idempotent() {
                    skew_idempotents.push(g);
                }
            }
        }
        StarCompatibility { failures, skew_idempotents }
    }

    /// First pair of generator matrices (in generator order) that do not
    /// commute, with the commutator. `None` means all pairs commute. Requires
    /// a valid representation, otherwise the witness proves nothing about the
    /// quotient.
    pub fn commutator_witness(&self) -> Result<Option<(GenId, GenId, RatMatrix)>, RepError> {
        if !self.is_valid() {
            return Err(RepError::InvalidRepresentation);
        }
        for a in 0..self.mats.len() {
            for b in (a + 1)..self.mats.len() {
                let ab = self.mats[a].mul(&self.mats[b])?;
                let ba = self.mats[b].mul(&self.mats[a])?;
                let comm = ab.sub(&ba)?;
                if !comm.is_zero() {
                    return Ok(Some((GenId(a as u16), GenId(b as u16), comm)));
                }
            }
        }
        Ok(None)
    }
}

fn m2(rows: [[i64; 2]; 2]) -> RatMatrix {
    RatMatrix::from_rows(
        rows.iter()
            .map(|r| r.iter().map(|&v| rat_int(v)).collect())
            .collect(),
    )
    .expect("square")
}

/// Two-dimensional representation of the eight-projection presentation that
/// separates y1 from y7: their images commute to different products, and two
/// generator matrices are idempotent without being symmetric.
pub fn pi_rep() -> MatrixRep {
    let z = RatMatrix::zero(2);
    let mats = alloc::vec![
        m2([[1, 0], [0, 0]]),  // y1
        m2([[0, 0], [0, 1]]),  // y2
        z.clone(),             // y3
        z.clone(),             // y4
        z.clone(),             // y5
        z,                     // y6
        m2([[1, 0], [1, 0]]),  // y7
        m2([[0, 0], [-1, 1]]), // y8
    ];
    MatrixRep::new(Arc::new(b0_presentation()), mats).expect("shape is fixed")
}

/// Two-dimensional representation of the four-point quantum permutation
/// presentation built from two non-commuting projections: the identity block
/// uses a coordinate projection, the other block a rank-one projection at
/// angle 45 degrees. Witnesses noncommutativity at four points.
pub fn x4_witness_rep() -> MatrixRep {
    let p = m2([[1, 0], [0, 0]]);
    let q = RatMatrix::from_rows(alloc::vec![
        alloc::vec![rat_frac(1, 2), rat_frac(1, 2)],
        alloc::vec![rat_frac(1, 2), rat_frac(1, 2)],
    ])
    .expect("square");
    let i = RatMatrix::identity(2);
    let pc = i.sub(&p).expect("dim 2");
    let qc = i.sub(&q).expect("dim 2");
    let z = RatMatrix::zero(2);

    // Row-major 4x4 block pattern: [[p, p', 0, 0], [p', p, 0, 0],
    // [0, 0, q, q'], [0, 0, q', q]] where ' is the complement.
    let mats = alloc::vec![
        p.clone(), pc.clone(), z.clone(), z.clone(),
        pc, p, z.clone(), z.clone(),
        z.clone(), z.clone(), q.clone(), qc.clone(),
        z.clone(), z, qc, q,
    ];
    MatrixRep::new(Arc::new(quantum_perm_presentation(4)), mats).expect("shape is fixed")
}

/// The one-dimensional representation of a graph presentation attached to a
/// vertex permutation: X\[i,j\] maps to 1 if `i == sigma(j)` else 0. Valid
/// exactly when the permutation is an automorphism of the graph.
pub fn character_from_automorphism(g: &Graph, sigma: &Perm) -> Result<MatrixRep, RepError> {
    let n = g.n();
    if sigma.n() != n {
        return Err(RepError::PermSizeMismatch { perm: sigma.n(), graph: n });
    }
    let pres = Arc::new(graph_presentation(g));
    let mut mats = Vec::with_capacity(n as usize * n as usize);
    for i in 1..=n {
        for j in 1..=n {
            let v = if sigma.apply(j) == i { Rat::one() } else { Rat::zero() };
            mats.push(RatMatrix::from_rows(alloc::vec![alloc::vec![v]]).expect("1x1"));
        }
    }
    MatrixRep::new(pres, mats)
}

/// Outcome of [`edge_magic_unitary_check`]: normal-form verdicts for the
/// magic relations of the edge-indexed matrix with entries
/// `B[l,j] = X[s_l,s_j] X[t_l,t_j]` over edges `e_l = (s_l, t_l)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeMatrixChecks {
    pub edge_count: usize,
    /// Self-adjointness of each entry, indexed by (l, j).
    pub star: Vec<((usize, usize), ReductionVerdict)>,
    /// Row products `B[l,j] B[l,j'] - delta_jj' B[l,j]`, indexed (l, j, j').
    pub orthogonality: Vec<((usize, usize, usize), ReductionVerdict)>,
    /// Column sums then row sums, each minus 1, indexed by the fixed edge.
    pub sums: Vec<(usize, ReductionVerdict)>,
}

impl EdgeMatrixChecks {
    pub fn all_verified(&self) -> bool {
        self.star.iter().all(|(_, v)| v.is_verified())
            && self.orthogonality.iter().all(|(_, v)| v.is_verified())
            && self.sums.iter().all(|(_, v)| v.is_verified())
    }
}

/// Certifies that the generator matrix of a graph presentation also permutes
/// edges: the products `B[l,j] = X[s_l,s_j] X[t_l,t_j]` are self-adjoint,
/// row-orthogonal idempotents summing to 1 along rows and columns, all
/// verified by reduction against `gb`. Entries have degree 2 and products
/// degree 4, so the basis must have been computed to degree at least 4.
pub fn edge_magic_unitary_check(
    g: &Graph,
    gb: &GroebnerBasis,
) -> Result<EdgeMatrixChecks, RepError> {
    if gb.degree_bound() < 4 {
        return Err(RepError::InsufficientBound { required: 4, bound: gb.degree_bound() });
    }
    let pres = gb.presentation();
    if !pres.same_relations(&graph_presentation(g)) {
        return Err(RepError::PresentationMismatch);
    }
    let edges = g.edges();
    let m = edges.len();
    let entry = |l: usize, j: usize| -> NcPoly {
        let (sl, tl) = edges[l];
        let (sj, tj) = edges[j];
        let a = pres.gen_index(sl, sj).expect("vertex in range");
        let b = pres.gen_index(tl, tj).expect("vertex in range");
        NcPoly::monomial(Word::from_ids([a, b]), Rat::one())
    };

    let mut star = Vec::with_capacity(m * m);
    for l in 0..m {
        for j in 0..m {
            let b = entry(l, j);
            let diff = b.involution().sub(&b);
            star.push(((l, j), gb.reduction_verdict(&diff)?));
        }
    }

    let mut orthogonality = Vec::with_capacity(m * m * m);
    for l in 0..m {
        for j in 0..m {
            for jp in 0..m {
                let mut p = entry(l, j).mul(&entry(l, jp));
                if j == jp {
                    p = p.sub(&entry(l, j));
                }
                orthogonality.push(((l, j, jp), gb.reduction_verdict(&p)?));
            }
        }
    }

    let mut sums = Vec::with_capacity(2 * m);
    for j in 0..m {
        let col = (0..m).fold(NcPoly::zero(), |acc, l| acc.add(&entry(l, j)));
        sums.push((j, gb.reduction_verdict(&col.sub(&NcPoly::one()))?));
    }
    for j in 0..m {
        let row = (0..m).fold(NcPoly::zero(), |acc, l| acc.add(&entry(j, l)));
        sums.push((j, gb.reduction_verdict(&row.sub(&NcPoly::one()))?));
    }

    Ok(EdgeMatrixChecks { edge_count: m, star, orthogonality, sums })
}
