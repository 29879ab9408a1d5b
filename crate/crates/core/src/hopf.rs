//! Coalgebra structure on matrix presentations and quotient-descent checks.
//!
//! On the free algebra over generators X\[i,j\] the maps are
//!
//! - coproduct: X\[i,j\] -> sum_k X\[i,k\] (x) X\[k,j\], extended as a unital
//!   algebra morphism into the tensor square,
//! - counit: X\[i,j\] -> delta_ij, extended multiplicatively into the scalars,
//! - antipode: X\[i,j\] -> X\[j,i\], extended as a unital anti-morphism.
//!
//! None of these is assumed to respect the relation ideal; that is exactly
//! what [`verify_hopf_descent`] certifies, relation by relation, against a
//! Groebner basis. Tensor membership in `I(x)A + A(x)I` is decided by reducing
//! each tensor factor to normal form and recollecting: normal words span the
//! quotient, so the recollected sum vanishes precisely when the tensor lies in
//! the kernel of the doubled quotient map.
//!
//! The eight-generator projection presentation carries no coalgebra structure
//! of its own; analyses route through its verified isomorphism with a graph
//! presentation.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use core::fmt;

use num_traits::{One, Zero};

use crate::gbasis::{GbError, GroebnerBasis, ReductionVerdict};
use crate::ncpoly::{GenOutOfRange, NcPoly, Word};
use crate::presentation::{Presentation, PresentationKind};
use crate::rat::Rat;

/// An element of (free algebra) tensor (free algebra): a finite map from word
/// pairs to nonzero rationals, ordered deglex on the left word then the right.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct TensorPoly {
    terms: BTreeMap<(Word, Word), Rat>,
}

impl TensorPoly {
    pub fn zero() -> Self {
        TensorPoly::default()
    }

    pub fn one() -> Self {
        let mut t = TensorPoly::default();
        t.insert_add(Word::empty(), Word::empty(), Rat::one());
        t
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Word, &Rat)> {
        self.terms.iter().map(|((u, v), c)| (u, v, c))
    }

    pub fn insert_add(&mut self, u: Word, v: Word, c: Rat) {
        if c.is_zero() {
            return;
        }
        let key = (u, v);
        match self.terms.get_mut(&key) {
            Some(existing) => {
                *existing = &*existing + &c;
                if existing.is_zero() {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, c);
            }
        }
    }

    pub fn sub(&self, other: &TensorPoly) -> TensorPoly {
        let mut out = self.clone();
        for ((u, v), c) in &other.terms {
            out.insert_add(u.clone(), v.clone(), -c.clone());
        }
        out
    }

    /// Componentwise product: `(u1 (x) v1) * (u2 (x) v2) = u1 u2 (x) v1 v2`.
    pub fn mul(&self, other: &TensorPoly) -> TensorPoly {
        let mut out = TensorPoly::zero();
        for ((u1, v1), c1) in &self.terms {
            for ((u2, v2), c2) in &other.terms {
                out.insert_add(u1.concat(u2), v1.concat(v2), c1 * c2);
            }
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HopfError {
    /// The presentation's generators do not form a square matrix family.
    UnsupportedPresentation { kind: PresentationKind },
    GenOutOfRange(GenOutOfRange),
    Gb(GbError),
}

impl fmt::Display for HopfError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HopfError::UnsupportedPresentation { kind } => {
                write!(f, "no coalgebra structure on a {:?} presentation", kind)
            }
            HopfError::GenOutOfRange(e) => write!(f, "{}", e),
            HopfError::Gb(e) => write!(f, "{}", e),
        }
    }
}

impl core::error::Error for HopfError {}

impl From<GbError> for HopfError {
    fn from(e: GbError) -> Self {
        HopfError::Gb(e)
    }
}

fn matrix_size_of(p: &Presentation) -> Result<u16, HopfError> {
    p.matrix_size()
        .ok_or(HopfError::UnsupportedPresentation { kind: p.kind() })
}

fn validate_gens(p: &Presentation, poly: &NcPoly) -> Result<(), HopfError> {
    if let Some(mi) = poly.max_gen_index() {
        let count = p.gen_count();
        if mi >= count {
            return Err(HopfError::GenOutOfRange(GenOutOfRange {
                index: mi,
                count,
            }));
        }
    }
    Ok(())
}

/// Coproduct of a polynomial over a matrix presentation. Each word expands
/// into a sum over index paths; factor degrees equal the word degree.
pub fn coproduct(p: &Presentation, poly: &NcPoly) -> Result<TensorPoly, HopfError> {
    let n = matrix_size_of(p)?;
    validate_gens(p, poly)?;
    let mut out = TensorPoly::zero();
    for (w, c) in poly.terms() {
        let mut acc: BTreeMap<(Word, Word), Rat> = BTreeMap::new();
        acc.insert((Word::empty(), Word::empty()), c.clone());
        for g in w.gens() {
            let (i, j) = p.gen_pair(g).expect("matrix presentation");
            let mut next: BTreeMap<(Word, Word), Rat> = BTreeMap::new();
            for ((u, v), coef) in &acc {
                for k in 1..=n {
                    let gl = p.gen_index(i, k).expect("in range");
                    let gr = p.gen_index(k, j).expect("in range");
                    let key = (
                        u.concat(&Word::single(gl)),
                        v.concat(&Word::single(gr)),
                    );
                    match next.get_mut(&key) {
                        Some(e) => *e = &*e + coef,
                        None => {
                            next.insert(key, coef.clone());
                        }
                    }
                }
            }
            acc = next;
        }
        for ((u, v), coef) in acc {
            out.insert_add(u, v, coef);
        }
    }
    Ok(out)
}

/// Counit: sends X\[i,j\] to 1 if `i == j` else 0, multiplicatively.
pub fn counit(p: &Presentation, poly: &NcPoly) -> Result<Rat, HopfError> {
    matrix_size_of(p)?;
    validate_gens(p, poly)?;
    let mut total = Rat::zero();
    'words: for (w, c) in poly.terms() {
        for g in w.gens() {
            let (i, j) = p.gen_pair(g).expect("matrix presentation");
            if i != j {
                continue 'words;
            }
        }
        total = total + c.clone();
    }
    Ok(total)
}

/// Antipode: reverses each word and transposes each index pair.
pub fn antipode(p: &Presentation, poly: &NcPoly) -> Result<NcPoly, HopfError> {
    matrix_size_of(p)?;
    validate_gens(p, poly)?;
    Ok(NcPoly::from_terms(poly.terms().map(|(w, c)| {
        let flipped = Word::from_ids(w.gens().rev().map(|g| {
            let (i, j) = p.gen_pair(g).expect("matrix presentation");
            p.gen_index(j, i).expect("in range")
        }));
        (flipped, c.clone())
    })))
}

/// Reduces both factors of every term to normal form and recollects. The
/// result is zero exactly when the tensor maps to zero in
/// (quotient) tensor (quotient).
pub fn tensor_normal_form(gb: &GroebnerBasis, t: &TensorPoly) -> Result<TensorPoly, GbError> {
    let mut out = TensorPoly::zero();
    for (u, v, c) in t.terms() {
        let nu = gb.normal_form(&NcPoly::monomial(u.clone(), Rat::one()))?;
        let nv = gb.normal_form(&NcPoly::monomial(v.clone(), Rat::one()))?;
        for (wu, cu) in nu.terms() {
            for (wv, cv) in nv.terms() {
                out.insert_add(wu.clone(), wv.clone(), c * cu * cv);
            }
        }
    }
    Ok(out)
}

/// Like [`ReductionVerdict`], for tensors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TensorVerdict {
    Verified,
    Failed { residual: TensorPoly },
    InconclusiveAtBound { residual: TensorPoly },
}

impl TensorVerdict {
    pub fn is_verified(&self) -> bool {
        matches!(self, TensorVerdict::Verified)
    }
}

/// Descent outcome for one relation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationDescent {
    /// The counit evaluates to exactly zero (a scalar identity, no reduction).
    pub counit_is_zero: bool,
    /// The antipode image reduces to zero.
    pub antipode: ReductionVerdict,
    /// The involution image reduces to zero (the quotient is a *-algebra).
    pub star: ReductionVerdict,
    /// The coproduct image vanishes under factorwise normal forms.
    pub coproduct: TensorVerdict,
}

impl RelationDescent {
    pub fn is_verified(&self) -> bool {
        self.counit_is_zero
            && self.antipode.is_verified()
            && self.star.is_verified()
            && self.coproduct.is_verified()
    }
}

/// The antipode axiom instance at matrix entry (i, j): both composition
/// orders of multiplication, antipode, and coproduct must give delta_ij.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AntipodeAxiomCheck {
    pub i: u16,
    pub j: u16,
    /// `sum_k S(X[i,k]) X[k,j] - delta_ij`, reduced.
    pub left: ReductionVerdict,
    /// `sum_k X[i,k] S(X[k,j]) - delta_ij`, reduced.
    pub right: ReductionVerdict,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HopfDescentReport {
    pub relation_checks: Vec<RelationDescent>,
    pub antipode_axiom: Vec<AntipodeAxiomCheck>,
}

impl HopfDescentReport {
    pub fn all_verified(&self) -> bool {
        self.relation_checks.iter().all(RelationDescent::is_verified)
            && self
                .antipode_axiom
                .iter()
                .all(|c| c.left.is_verified() && c.right.is_verified())
    }
}

/// Checks that the coalgebra maps descend to the quotient: for every relation
/// r, counit(r) = 0 exactly, NF(S(r)) = 0, NF(r*) = 0, and the factorwise
/// normal form of coproduct(r) is 0; plus the antipode axiom on every
/// generator in both orders.
pub fn verify_hopf_descent(gb: &GroebnerBasis) -> Result<HopfDescentReport, HopfError> {
    let p = gb.presentation();
    let n = matrix_size_of(p)?;

    let mut relation_checks = Vec::with_capacity(p.relations().len());
    for rel in p.relations() {
        let counit_is_zero = counit(p, &rel.poly)?.is_zero();
        let antipode_v = gb.reduction_verdict(&antipode(p, &rel.poly)?)?;
        let star_v = gb.reduction_verdict(&rel.poly.involution())?;
        let delta = coproduct(p, &rel.poly)?;
        let residual = tensor_normal_form(gb, &delta)?;
        let coproduct_v = if residual.is_zero() {
            TensorVerdict::Verified
        } else if gb.is_complete() {
            TensorVerdict::Failed { residual }
        } else {
            TensorVerdict::InconclusiveAtBound { residual }
        };
        relation_checks.push(RelationDescent {
            counit_is_zero,
            antipode: antipode_v,
            star: star_v,
            coproduct: coproduct_v,
        });
    }

    let mut antipode_axiom = Vec::with_capacity(n as usize * n as usize);
    for i in 1..=n {
        for j in 1..=n {
            let mut left = NcPoly::zero();
            let mut right = NcPoly::zero();
            for k in 1..=n {
                // S(X[i,k]) X[k,j] = X[k,i] X[k,j]
                let ki = p.gen_index(k, i).expect("in range");
                let kj = p.gen_index(k, j).expect("in range");
                left = left.add(&NcPoly::monomial(
                    Word::from_ids([ki, kj]),
                    Rat::one(),
                ));
                // X[i,k] S(X[k,j]) = X[i,k] X[j,k]
                let ik = p.gen_index(i, k).expect("in range");
                let jk = p.gen_index(j, k).expect("in range");
                right = right.add(&NcPoly::monomial(
                    Word::from_ids([ik, jk]),
                    Rat::one(),
                ));
            }
            if i == j {
                left = left.sub(&NcPoly::one());
                right = right.sub(&NcPoly::one());
            }
            antipode_axiom.push(AntipodeAxiomCheck {
                i,
                j,
                left: gb.reduction_verdict(&left)?,
                right: gb.reduction_verdict(&right)?,
            });
        }
    }

    Ok(HopfDescentReport {
        relation_checks,
        antipode_axiom,
    })
}
