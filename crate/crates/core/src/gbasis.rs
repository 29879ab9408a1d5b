//! Degree-truncated two-sided Groebner bases over the free algebra.
//!
//! [`compute_gb`] completes a presentation's relation set under the deglex
//! order up to a degree bound: every overlap ambiguity whose overlap word fits
//! under the bound is resolved, and overlaps that would exceed the bound are
//! recorded as deferred. When nothing was deferred the result is a complete
//! two-sided Groebner basis and every verdict derived from it is exact; when
//! something was deferred the basis is still a valid rewriting system, but
//! normal forms only certify membership (reduction to zero), never
//! non-membership, and word counts are upper bounds on graded dimensions.
//!
//! Reductions can carry certificates: a [`Combination`] expresses a reduced
//! polynomial as an explicit two-sided linear combination of the original
//! relations, re-checkable by direct multiplication via [`Combination::expand`].
//!
//! The rewriting loop maintains an inter-reduced basis: when a new element's
//! leading word divides an existing leading word, the existing element is
//! evicted and re-admitted through reduction. Leading words therefore form an
//! antichain under the subword order at every moment, and since each admission
//! strictly grows the leading-word ideal inside the finite set of words under
//! the bound, termination needs no Noetherian assumption. A step cap guards
//! against configuration mistakes all the same.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use core::fmt;

use num_traits::{One, Zero};

use crate::ncpoly::{GenId, GenOutOfRange, NcPoly, Word};
use crate::presentation::{GeneratorMap, MapError, Presentation};
use crate::rat::Rat;

pub const DEFAULT_DEGREE_BOUND: u32 = 6;
pub const DEFAULT_STEP_CAP: u64 = 1_000_000;
pub const DEFAULT_CENSUS_WINDOW: u32 = 2;

/// Knobs for [`compute_gb`]. `degree_bound` is the largest overlap-word degree
/// the completion will resolve; `step_cap` bounds admissions plus processed
/// overlaps; `track_provenance` keeps per-element certificates.
#[derive(Debug, Clone)]
pub struct GbOptions {
    pub degree_bound: u32,
    pub step_cap: u64,
    pub track_provenance: bool,
}

impl Default for GbOptions {
    fn default() -> Self {
        GbOptions {
            degree_bound: DEFAULT_DEGREE_BOUND,
            step_cap: DEFAULT_STEP_CAP,
            track_provenance: true,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GbError {
    /// The degree bound is below the largest relation degree.
    BoundTooSmall { required: u32, bound: u32 },
    StepCapExceeded { cap: u64 },
    /// The queried polynomial has degree above the bound the basis was built for.
    DegreeExceedsBound { degree: u32, bound: u32 },
    GenOutOfRange(GenOutOfRange),
    /// A word count no longer fits in u64.
    CensusOverflow,
    /// An imported element list violates a basis invariant.
    InvalidImport { index: usize, reason: &'static str },
}

impl fmt::Display for GbError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GbError::BoundTooSmall { required, bound } => write!(
                f,
                "degree bound {} is below the largest relation degree {}",
                bound, required
            ),
            GbError::StepCapExceeded { cap } => {
                write!(f, "completion exceeded the step cap of {}", cap)
            }
            GbError::DegreeExceedsBound { degree, bound } => write!(
                f,
                "polynomial degree {} exceeds the basis degree bound {}",
                degree, bound
            ),
            GbError::GenOutOfRange(e) => write!(f, "{}", e),
            GbError::CensusOverflow => write!(f, "word count exceeded the u64 range"),
            GbError::InvalidImport { index, reason } => {
                write!(f, "imported element {} is invalid: {}", index, reason)
            }
        }
    }
}

impl core::error::Error for GbError {}

impl From<GenOutOfRange> for GbError {
    fn from(e: GenOutOfRange) -> Self {
        GbError::GenOutOfRange(e)
    }
}

/// A two-sided linear combination `sum_i c_i * left_i * relation[idx_i] * right_i`
/// of a presentation's relations. Produced as a reduction certificate; verify
/// it independently with [`Combination::expand`].
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Combination {
    terms: Vec<(Rat, Word, u32, Word)>,
}

impl Combination {
    /// The trivial certificate `1 * relation[idx] * 1`.
    pub fn unit(idx: u32) -> Self {
        Combination {
            terms: vec![(Rat::one(), Word::empty(), idx, Word::empty())],
        }
    }

    pub fn terms(&self) -> &[(Rat, Word, u32, Word)] {
        &self.terms
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// `self += c * left * other * right`.
    fn add_shifted(&mut self, other: &Combination, c: &Rat, left: &Word, right: &Word) {
        for (k, l, idx, r) in &other.terms {
            self.terms
                .push((k * c, left.concat(l), *idx, r.concat(right)));
        }
    }

    fn scale_all(&mut self, c: &Rat) {
        for (k, _, _, _) in &mut self.terms {
            *k = &*k * c;
        }
    }

    /// Canonical order, merged duplicates, no zero coefficients.
    fn normalize(&mut self) {
        self.terms
            .sort_by(|a, b| (a.2, &a.1, &a.3).cmp(&(b.2, &b.1, &b.3)));
        let mut out: Vec<(Rat, Word, u32, Word)> = Vec::with_capacity(self.terms.len());
        for (c, l, idx, r) in self.terms.drain(..) {
            match out.last_mut() {
                Some((oc, ol, oi, or)) if *oi == idx && *ol == l && *or == r => {
                    *oc = &*oc + &c;
                }
                _ => out.push((c, l, idx, r)),
            }
        }
        out.retain(|(c, _, _, _)| !c.is_zero());
        self.terms = out;
    }

    /// Multiplies the combination out against the presentation's relations.
    pub fn expand(&self, presentation: &Presentation) -> NcPoly {
        let rels = presentation.relations();
        let mut acc = NcPoly::zero();
        for (c, l, idx, r) in &self.terms {
            let shifted = rels[*idx as usize].poly.mul_words(l, r).scale(c);
            acc = acc.add(&shifted);
        }
        acc
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Membership {
    /// Reduction to zero proves membership whether or not the basis is complete.
    Member { certificate: Option<Combination> },
    /// Only issued when the basis is complete; the residual is the normal form.
    NotMember { residual: NcPoly },
    /// Nonzero residual against an incomplete basis: no verdict either way.
    InconclusiveAtBound { residual: NcPoly },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Commutativity {
    /// Every generator commutator reduces to zero; a certificate regardless of
    /// completeness, since commuting generators force a commutative quotient.
    Commutative,
    /// First generator pair (by index) whose commutator has a nonzero normal
    /// form. `certified` is true when the basis is complete, making the
    /// noncommutativity a theorem rather than bound-limited evidence.
    Witness {
        a: GenId,
        b: GenId,
        residual: NcPoly,
        certified: bool,
    },
}

/// Counts of irreducible words per degree. Exact graded dimensions when the
/// basis is complete; upper bounds otherwise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Census {
    pub per_degree: Vec<u64>,
    pub cumulative: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DimensionVerdict {
    /// Complete basis with no irreducible words in the top `window` degrees:
    /// the quotient has exactly `dim` as its linear dimension.
    Finite { dim: u64 },
    /// Irreducible words exist at every degree up to the bound. Evidence of
    /// infinite dimension, certified only if the basis is complete.
    GrowthEvidence { through: u32, certified: bool },
    Inconclusive,
}

/// Outcome of asking whether a polynomial reduces to zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ReductionVerdict {
    Verified,
    /// Complete basis, nonzero normal form: the polynomial is not in the ideal.
    Failed { residual: NcPoly },
    /// Nonzero residual but the basis is truncated (or the polynomial exceeds
    /// the bound), so nothing is settled.
    InconclusiveAtBound { residual: NcPoly },
}

impl ReductionVerdict {
    pub fn is_verified(&self) -> bool {
        matches!(self, ReductionVerdict::Verified)
    }
}

/// A degree-truncated two-sided Groebner basis. Elements are monic, sorted by
/// leading word, tail-reduced, and their leading words form an antichain under
/// the subword order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerBasis {
    presentation: Arc<Presentation>,
    degree_bound: u32,
    complete_through: u32,
    elements: Vec<NcPoly>,
    provenance: Option<Vec<Combination>>,
    lw_index: BTreeMap<Word, usize>,
    by_first: BTreeMap<u16, Vec<(Word, usize)>>,
    unit_elem: Option<usize>,
    deferred_count: u64,
    deferred_min_degree: Option<u32>,
}

type Step = (Rat, Word, usize, Word);

struct RedResult {
    nf: NcPoly,
    steps: Vec<Step>,
}

/// A set of monic rewriting rules indexed for leftmost-shortest reducer lookup.
trait ReducerSource {
    /// Finds the first reducible position: scans positions left to right and,
    /// at each position, candidate leading words shortest first.
    fn find(&self, w: &Word) -> Option<(usize, usize, usize)>;
    fn poly_of(&self, id: usize) -> &NcPoly;
}

fn find_in_index<F: Fn(usize) -> bool>(
    w: &Word,
    by_first: &BTreeMap<u16, Vec<(Word, usize)>>,
    alive: F,
) -> Option<(usize, usize, usize)> {
    for pos in 0..w.len() {
        let first = w.gen_at(pos).0;
        if let Some(cands) = by_first.get(&first) {
            for (pat, id) in cands {
                if pat.len() > w.len() - pos {
                    break;
                }
                if alive(*id) && w.matches_at(pos, pat) {
                    return Some((pos, *id, pat.len()));
                }
            }
        }
    }
    None
}

/// Rewrites `p` to a form with no reducible word. Every step rewrites the
/// current leading term, so the certificate is triangular: each recorded step
/// has product word equal to the leading word it cancelled.
fn reduce_full<S: ReducerSource>(src: &S, p: &NcPoly, track: bool) -> RedResult {
    let mut work = p.clone();
    let mut out: Vec<(Word, Rat)> = Vec::new();
    let mut steps: Vec<Step> = Vec::new();
    loop {
        let Some((w, c)) = work.leading().map(|(w, c)| (w.clone(), c.clone())) else {
            break;
        };
        match src.find(&w) {
            Some((pos, id, plen)) => {
                let left = w.prefix(pos);
                let right = w.suffix_from(pos + plen);
                let neg = -c.clone();
                work.axpy_word(&neg, &left, src.poly_of(id), &right);
                debug_assert!(work.leading_word().map_or(true, |lw| *lw < w));
                if track {
                    steps.push((c, left, id, right));
                }
            }
            None => {
                out.push(work.pop_leading().expect("leading term exists"));
            }
        }
    }
    RedResult {
        nf: NcPoly::from_descending(out),
        steps,
    }
}

struct EngineElem {
    poly: NcPoly,
    prov: Option<Combination>,
    alive: bool,
}

#[derive(PartialEq, Eq, PartialOrd, Ord)]
struct Obstruction {
    overlap: Word,
    left: usize,
    right: usize,
    k: usize,
}

struct Engine<'p> {
    pres: &'p Arc<Presentation>,
    bound: u32,
    track: bool,
    step_cap: u64,
    steps: u64,
    elems: Vec<EngineElem>,
    by_first: BTreeMap<u16, Vec<(Word, usize)>>,
    has_unit: Option<usize>,
    lw_set: BTreeMap<Word, usize>,
    pending: BTreeMap<NcPoly, Option<Combination>>,
    obstructions: BTreeSet<Obstruction>,
}

struct EngineView<'a> {
    elems: &'a [EngineElem],
    by_first: &'a BTreeMap<u16, Vec<(Word, usize)>>,
    has_unit: Option<usize>,
}

impl ReducerSource for EngineView<'_> {
    fn find(&self, w: &Word) -> Option<(usize, usize, usize)> {
        if let Some(u) = self.has_unit {
            return Some((0, u, 0));
        }
        find_in_index(w, self.by_first, |id| self.elems[id].alive)
    }

    fn poly_of(&self, id: usize) -> &NcPoly {
        &self.elems[id].poly
    }
}

impl<'p> Engine<'p> {
    fn bump_step(&mut self) -> Result<(), GbError> {
        self.steps += 1;
        if self.steps > self.step_cap {
            Err(GbError::StepCapExceeded { cap: self.step_cap })
        } else {
            Ok(())
        }
    }

    fn reduce_now(&self, p: &NcPoly, track: bool) -> RedResult {
        let view = EngineView {
            elems: &self.elems,
            by_first: &self.by_first,
            has_unit: self.has_unit,
        };
        reduce_full(&view, p, track)
    }

    /// prov of the reduction result: `start - sum of steps`, then normalized.
    fn settle_cert(
        &self,
        start: Option<Combination>,
        steps: &[Step],
    ) -> Option<Combination> {
        if !self.track {
            return None;
        }
        let mut cert = start.expect("tracked runs carry provenance");
        for (coef, l, id, r) in steps {
            let ep = self.elems[*id].prov.as_ref().expect("tracked elements carry provenance");
            let neg = -coef.clone();
            cert.add_shifted(ep, &neg, l, r);
        }
        cert.normalize();
        Some(cert)
    }

    fn drain_pending(&mut self) -> Result<(), GbError> {
        while let Some((poly, prov)) = self.pending.pop_first() {
            self.bump_step()?;
            self.admit(poly, prov);
        }
        Ok(())
    }

    fn admit(&mut self, poly: NcPoly, prov: Option<Combination>) {
        debug_assert!(poly.degree().map_or(true, |d| d <= self.bound));
        let red = self.reduce_now(&poly, self.track);
        if red.nf.is_zero() {
            return;
        }
        let mut cert = self.settle_cert(prov, &red.steps);
        let (monic, lc) = red.nf.into_monic();
        if let Some(c) = &mut cert {
            if !lc.is_one() {
                c.scale_all(&(Rat::one() / lc));
            }
        }
        let lw = monic.leading_word().expect("nonzero").clone();

        // Evict elements whose leading word the new leading word divides.
        let evict: Vec<(Word, usize)> = self
            .lw_set
            .iter()
            .filter(|(w, _)| w.contains(&lw))
            .map(|(w, &i)| (w.clone(), i))
            .collect();
        for (w, id) in evict {
            self.lw_set.remove(&w);
            let e = &mut self.elems[id];
            e.alive = false;
            let old_poly = core::mem::take(&mut e.poly);
            let old_prov = e.prov.take();
            self.pending.entry(old_poly).or_insert(old_prov);
        }

        let id = self.elems.len();
        self.elems.push(EngineElem {
            poly: monic,
            prov: cert,
            alive: true,
        });
        self.lw_set.insert(lw.clone(), id);
        if lw.is_empty() {
            self.has_unit = Some(id);
        } else {
            let row = self.by_first.entry(lw.gen_at(0).0).or_default();
            let key = (lw.clone(), id);
            let pos = row.binary_search(&key).unwrap_or_else(|p| p);
            row.insert(pos, key);
        }

        let mut fresh: Vec<Obstruction> = Vec::new();
        for (olw, &oid) in &self.lw_set {
            collect_overlaps(id, &lw, oid, olw, self.bound, &mut fresh);
            if oid != id {
                collect_overlaps(oid, olw, id, &lw, self.bound, &mut fresh);
            }
        }
        self.obstructions.extend(fresh);
    }

    /// S-polynomial of an overlap: `f * t - s * g` where the overlap word is
    /// `lw(f) * t = s * lw(g)`.
    fn s_poly(&self, ob: &Obstruction) -> (NcPoly, Option<Combination>) {
        let f = &self.elems[ob.left];
        let g = &self.elems[ob.right];
        let u = f.poly.leading_word().expect("nonzero").clone();
        let v = g.poly.leading_word().expect("nonzero").clone();
        let t = v.suffix_from(ob.k);
        let s = u.prefix(u.len() - ob.k);
        let empty = Word::empty();
        let sp = f.poly.mul_words(&empty, &t).sub(&g.poly.mul_words(&s, &empty));
        let prov = if self.track {
            let mut c = Combination::default();
            c.add_shifted(f.prov.as_ref().expect("tracked"), &Rat::one(), &empty, &t);
            c.add_shifted(g.prov.as_ref().expect("tracked"), &-Rat::one(), &s, &empty);
            c.normalize();
            Some(c)
        } else {
            None
        };
        (sp, prov)
    }

    fn finalize(mut self) -> GroebnerBasis {
        let order: Vec<(Word, usize)> = self
            .lw_set
            .iter()
            .map(|(w, &i)| (w.clone(), i))
            .collect();

        // Tail inter-reduction. A tail word is deglex-below the element's own
        // leading word, so it can never contain it; reducing tails against the
        // full basis is safe and leaves every element in normal position.
        for (_, id) in &order {
            let mut poly = self.elems[*id].poly.clone();
            let (lead_w, lead_c) = poly.pop_leading().expect("nonzero");
            debug_assert!(lead_c.is_one());
            let red = self.reduce_now(&poly, self.track);
            let prov = self.elems[*id].prov.take();
            let new_prov = self.settle_cert(prov, &red.steps);
            let mut terms = vec![(lead_w, lead_c)];
            terms.extend(red.nf.terms().map(|(w, c)| (w.clone(), c.clone())));
            self.elems[*id].poly = NcPoly::from_descending(terms);
            self.elems[*id].prov = new_prov;
        }

        let mut elements = Vec::with_capacity(order.len());
        let mut provs = if self.track { Some(Vec::with_capacity(order.len())) } else { None };
        let mut lw_index = BTreeMap::new();
        let mut by_first: BTreeMap<u16, Vec<(Word, usize)>> = BTreeMap::new();
        let mut unit_elem = None;
        for (new_idx, (lw, id)) in order.iter().enumerate() {
            elements.push(core::mem::take(&mut self.elems[*id].poly));
            if let Some(pv) = &mut provs {
                pv.push(self.elems[*id].prov.take().expect("tracked"));
            }
            lw_index.insert(lw.clone(), new_idx);
            if lw.is_empty() {
                unit_elem = Some(new_idx);
            } else {
                by_first
                    .entry(lw.gen_at(0).0)
                    .or_default()
                    .push((lw.clone(), new_idx));
            }
        }
        for row in by_first.values_mut() {
            row.sort();
        }

        let lws: Vec<&Word> = order.iter().map(|(w, _)| w).collect();
        let (deferred_count, deferred_min_degree) = overlap_stats(&lws, self.bound);

        GroebnerBasis {
            presentation: self.pres.clone(),
            degree_bound: self.bound,
            complete_through: self.bound,
            elements,
            provenance: provs,
            lw_index,
            by_first,
            unit_elem,
            deferred_count,
            deferred_min_degree,
        }
    }
}

fn collect_overlaps(
    f_id: usize,
    u: &Word,
    g_id: usize,
    v: &Word,
    bound: u32,
    out: &mut Vec<Obstruction>,
) {
    let max_k = u.len().min(v.len());
    for k in 1..max_k {
        if u.suffix_matches_prefix(v, k) {
            let w = u.concat(&v.suffix_from(k));
            if w.degree() <= bound {
                out.push(Obstruction {
                    overlap: w,
                    left: f_id,
                    right: g_id,
                    k,
                });
            }
        }
    }
}

/// Counts overlaps among `lws` whose overlap word exceeds `bound`, with the
/// smallest such degree. Ordered pairs, self-overlaps included once.
fn overlap_stats(lws: &[&Word], bound: u32) -> (u64, Option<u32>) {
    let mut count = 0u64;
    let mut min_deg: Option<u32> = None;
    for u in lws {
        for v in lws {
            let max_k = u.len().min(v.len());
            for k in 1..max_k {
                if u.suffix_matches_prefix(v, k) {
                    let deg = (u.len() + v.len() - k) as u32;
                    if deg > bound {
                        count += 1;
                        min_deg = Some(min_deg.map_or(deg, |m| m.min(deg)));
                    }
                }
            }
        }
    }
    (count, min_deg)
}

/// Completes the presentation's relations into a degree-truncated Groebner
/// basis. Deterministic: identical inputs give identical bases.
pub fn compute_gb(
    presentation: &Arc<Presentation>,
    opts: &GbOptions,
) -> Result<GroebnerBasis, GbError> {
    let required = presentation.max_relation_degree();
    if opts.degree_bound < required {
        return Err(GbError::BoundTooSmall {
            required,
            bound: opts.degree_bound,
        });
    }
    let mut eng = Engine {
        pres: presentation,
        bound: opts.degree_bound,
        track: opts.track_provenance,
        step_cap: opts.step_cap,
        steps: 0,
        elems: Vec::new(),
        by_first: BTreeMap::new(),
        has_unit: None,
        lw_set: BTreeMap::new(),
        pending: BTreeMap::new(),
        obstructions: BTreeSet::new(),
    };
    for (i, rel) in presentation.relations().iter().enumerate() {
        let prov = if opts.track_provenance {
            Some(Combination::unit(i as u32))
        } else {
            None
        };
        eng.pending.entry(rel.poly.clone()).or_insert(prov);
    }
    loop {
        eng.drain_pending()?;
        let Some(ob) = eng.obstructions.pop_first() else {
            break;
        };
        eng.bump_step()?;
        if !eng.elems[ob.left].alive || !eng.elems[ob.right].alive {
            continue;
        }
        let (sp, prov) = eng.s_poly(&ob);
        if !sp.is_zero() {
            eng.pending.entry(sp).or_insert(prov);
        }
    }
    Ok(eng.finalize())
}

impl ReducerSource for GroebnerBasis {
    fn find(&self, w: &Word) -> Option<(usize, usize, usize)> {
        if let Some(u) = self.unit_elem {
            return Some((0, u, 0));
        }
        find_in_index(w, &self.by_first, |_| true)
    }

    fn poly_of(&self, id: usize) -> &NcPoly {
        &self.elements[id]
    }
}

impl GroebnerBasis {
    pub fn presentation(&self) -> &Arc<Presentation> {
        &self.presentation
    }

    pub fn degree_bound(&self) -> u32 {
        self.degree_bound
    }

    /// Largest degree through which every overlap is known resolved. Equals
    /// the degree bound for freshly computed bases; can be smaller for
    /// imported element lists.
    pub fn complete_through(&self) -> u32 {
        self.complete_through
    }

    /// True when no overlap was deferred: the basis is a complete Groebner
    /// basis outright, not just through the bound.
    pub fn is_complete(&self) -> bool {
        self.deferred_count == 0 && self.complete_through == self.degree_bound
    }

    /// Number of overlaps above the bound, with the smallest overlap degree.
    pub fn deferred_obstructions(&self) -> (u64, Option<u32>) {
        (self.deferred_count, self.deferred_min_degree)
    }

    pub fn elements(&self) -> &[NcPoly] {
        &self.elements
    }

    pub fn element_count(&self) -> usize {
        self.elements.len()
    }

    /// Certificate writing element `idx` as a combination of the original
    /// relations, when provenance tracking was on.
    pub fn provenance(&self, idx: usize) -> Option<&Combination> {
        self.provenance.as_ref().map(|p| &p[idx])
    }

    fn validate_query(&self, p: &NcPoly) -> Result<(), GbError> {
        let count = self.presentation.gen_count();
        if let Some(mi) = p.max_gen_index() {
            if mi >= count {
                return Err(GbError::GenOutOfRange(GenOutOfRange {
                    index: mi,
                    count,
                }));
            }
        }
        if let Some(d) = p.degree() {
            if d > self.degree_bound {
                return Err(GbError::DegreeExceedsBound {
                    degree: d,
                    bound: self.degree_bound,
                });
            }
        }
        Ok(())
    }

    pub fn normal_form(&self, p: &NcPoly) -> Result<NcPoly, GbError> {
        self.validate_query(p)?;
        Ok(reduce_full(self, p, false).nf)
    }

    /// Normal form plus, when provenance is tracked, a certificate with
    /// `certificate.expand(presentation) == p - nf`.
    pub fn normal_form_with_certificate(
        &self,
        p: &NcPoly,
    ) -> Result<(NcPoly, Option<Combination>), GbError> {
        self.validate_query(p)?;
        let red = reduce_full(self, p, true);
        let cert = self.provenance.as_ref().map(|provs| {
            let mut c = Combination::default();
            for (coef, l, id, r) in &red.steps {
                c.add_shifted(&provs[*id], coef, l, r);
            }
            c.normalize();
            c
        });
        Ok((red.nf, cert))
    }

    pub fn ideal_membership(&self, p: &NcPoly) -> Result<Membership, GbError> {
        let (nf, cert) = self.normal_form_with_certificate(p)?;
        if nf.is_zero() {
            Ok(Membership::Member { certificate: cert })
        } else if self.is_complete() {
            Ok(Membership::NotMember { residual: nf })
        } else {
            Ok(Membership::InconclusiveAtBound { residual: nf })
        }
    }

    /// Folds a polynomial-level question into a verdict, downgrading nonzero
    /// residuals to inconclusive when the basis is truncated and treating
    /// over-bound queries as inconclusive rather than errors.
    pub fn reduction_verdict(&self, p: &NcPoly) -> Result<ReductionVerdict, GbError> {
        match self.normal_form(p) {
            Ok(nf) if nf.is_zero() => Ok(ReductionVerdict::Verified),
            Ok(nf) => {
                if self.is_complete() {
                    Ok(ReductionVerdict::Failed { residual: nf })
                } else {
                    Ok(ReductionVerdict::InconclusiveAtBound { residual: nf })
                }
            }
            Err(GbError::DegreeExceedsBound { .. }) => {
                Ok(ReductionVerdict::InconclusiveAtBound { residual: p.clone() })
            }
            Err(e) => Err(e),
        }
    }

    /// Scans generator pairs in index order for the first noncommuting pair.
    pub fn commutativity_check(&self) -> Result<Commutativity, GbError> {
        let count = self.presentation.gen_count();
        if count >= 2 && self.degree_bound < 2 {
            return Err(GbError::DegreeExceedsBound {
                degree: 2,
                bound: self.degree_bound,
            });
        }
        for a in 0..count {
            for b in (a + 1)..count {
                let pa = NcPoly::gen(GenId(a));
                let pb = NcPoly::gen(GenId(b));
                let nf = self.normal_form(&NcPoly::commutator(&pa, &pb))?;
                if !nf.is_zero() {
                    return Ok(Commutativity::Witness {
                        a: GenId(a),
                        b: GenId(b),
                        residual: nf,
                        certified: self.is_complete(),
                    });
                }
            }
        }
        Ok(Commutativity::Commutative)
    }

    /// True when no leading word occurs in `w` as a subword.
    pub fn is_normal_word(&self, w: &Word) -> bool {
        self.find(w).is_none()
    }

    /// Counts irreducible words per degree, 0 through `through`, by dynamic
    /// programming over the leading-word occurrence automaton.
    pub fn normal_word_census(&self, through: u32) -> Result<Census, GbError> {
        if self.unit_elem.is_some() {
            return Ok(Census {
                per_degree: vec![0; through as usize + 1],
                cumulative: 0,
            });
        }
        census_impl(
            self.presentation.gen_count(),
            self.lw_index.keys(),
            through,
        )
    }

    /// `Finite` needs a complete basis and no irreducible words in the top
    /// `window` degrees; `GrowthEvidence` needs irreducible words at every
    /// degree up to the bound.
    pub fn dimension_verdict(&self, window: u32) -> Result<DimensionVerdict, GbError> {
        let census = self.normal_word_census(self.degree_bound)?;
        let b = self.degree_bound as usize;
        let w = window as usize;
        let top_zero =
            w >= 1 && w <= b && census.per_degree[b + 1 - w..=b].iter().all(|&c| c == 0);
        if top_zero && self.is_complete() {
            return Ok(DimensionVerdict::Finite {
                dim: census.cumulative,
            });
        }
        if census.per_degree.iter().all(|&c| c > 0) {
            return Ok(DimensionVerdict::GrowthEvidence {
                through: self.degree_bound,
                certified: self.is_complete(),
            });
        }
        Ok(DimensionVerdict::Inconclusive)
    }

    /// Rebuilds a basis from exported elements. Validates shape (monic,
    /// leading words an antichain, degrees under the bound), checks that every
    /// presentation relation reduces to zero, and recomputes completeness
    /// metadata honestly. Elements are trusted to lie in the ideal, as they do
    /// when they came from an export; no provenance is available.
    pub fn from_elements(
        presentation: &Arc<Presentation>,
        degree_bound: u32,
        elements: Vec<NcPoly>,
    ) -> Result<GroebnerBasis, GbError> {
        let required = presentation.max_relation_degree();
        if degree_bound < required {
            return Err(GbError::BoundTooSmall {
                required,
                bound: degree_bound,
            });
        }
        let count = presentation.gen_count();
        for (i, e) in elements.iter().enumerate() {
            if e.is_zero() {
                return Err(GbError::InvalidImport {
                    index: i,
                    reason: "zero element",
                });
            }
            if !e.leading().expect("nonzero").1.is_one() {
                return Err(GbError::InvalidImport {
                    index: i,
                    reason: "element is not monic",
                });
            }
            if e.max_gen_index().is_some_and(|m| m >= count) {
                return Err(GbError::InvalidImport {
                    index: i,
                    reason: "generator index outside the presentation",
                });
            }
            if e.degree().expect("nonzero") > degree_bound {
                return Err(GbError::InvalidImport {
                    index: i,
                    reason: "degree above the bound",
                });
            }
        }
        let mut sorted: Vec<NcPoly> = elements;
        sorted.sort();
        for (i, e) in sorted.iter().enumerate() {
            let lw = e.leading_word().expect("nonzero");
            for (j, f) in sorted.iter().enumerate() {
                if i != j && f.leading_word().expect("nonzero").contains(lw) {
                    return Err(GbError::InvalidImport {
                        index: j,
                        reason: "leading word reducible by another element",
                    });
                }
            }
        }

        let mut lw_index = BTreeMap::new();
        let mut by_first: BTreeMap<u16, Vec<(Word, usize)>> = BTreeMap::new();
        let mut unit_elem = None;
        for (idx, e) in sorted.iter().enumerate() {
            let lw = e.leading_word().expect("nonzero").clone();
            if lw.is_empty() {
                unit_elem = Some(idx);
            } else {
                by_first
                    .entry(lw.gen_at(0).0)
                    .or_default()
                    .push((lw.clone(), idx));
            }
            lw_index.insert(lw, idx);
        }
        for row in by_first.values_mut() {
            row.sort();
        }
        let lws: Vec<&Word> = lw_index.keys().collect();
        let (deferred_count, deferred_min_degree) = overlap_stats(&lws, degree_bound);

        let mut gb = GroebnerBasis {
            presentation: presentation.clone(),
            degree_bound,
            complete_through: degree_bound,
            elements: sorted,
            provenance: None,
            lw_index,
            by_first,
            unit_elem,
            deferred_count,
            deferred_min_degree,
        };

        // Canonicalize tails against the imported rule set.
        for idx in 0..gb.elements.len() {
            let mut poly = gb.elements[idx].clone();
            let (lead_w, lead_c) = poly.pop_leading().expect("nonzero");
            let red = reduce_full(&gb, &poly, false);
            let mut terms = vec![(lead_w, lead_c)];
            terms.extend(red.nf.terms().map(|(w, c)| (w.clone(), c.clone())));
            gb.elements[idx] = NcPoly::from_descending(terms);
        }

        for (i, rel) in presentation.relations().iter().enumerate() {
            if !reduce_full(&gb, &rel.poly, false).nf.is_zero() {
                return Err(GbError::InvalidImport {
                    index: i,
                    reason: "a presentation relation does not reduce to zero",
                });
            }
        }

        // Honest completeness: find the smallest under-bound overlap whose
        // S-polynomial fails to reduce to zero, if any.
        let mut complete_through = degree_bound;
        let words: Vec<Word> = gb.lw_index.keys().cloned().collect();
        let ids: Vec<usize> = gb.lw_index.values().copied().collect();
        for (ui, u) in words.iter().enumerate() {
            for (vi, v) in words.iter().enumerate() {
                let max_k = u.len().min(v.len());
                for k in 1..max_k {
                    if !u.suffix_matches_prefix(v, k) {
                        continue;
                    }
                    let deg = (u.len() + v.len() - k) as u32;
                    if deg > degree_bound || deg > complete_through {
                        continue;
                    }
                    let t = v.suffix_from(k);
                    let s = u.prefix(u.len() - k);
                    let empty = Word::empty();
                    let sp = gb.elements[ids[ui]]
                        .mul_words(&empty, &t)
                        .sub(&gb.elements[ids[vi]].mul_words(&s, &empty));
                    if !reduce_full(&gb, &sp, false).nf.is_zero() {
                        complete_through = deg - 1;
                    }
                }
            }
        }
        gb.complete_through = complete_through;
        Ok(gb)
    }
}

fn census_impl<'a, I: Iterator<Item = &'a Word>>(
    gen_count: u16,
    patterns: I,
    through: u32,
) -> Result<Census, GbError> {
    struct Node {
        children: BTreeMap<u16, usize>,
        fail: usize,
        dead: bool,
    }
    let mut nodes = vec![Node {
        children: BTreeMap::new(),
        fail: 0,
        dead: false,
    }];
    for pat in patterns {
        let mut s = 0usize;
        for g in pat.gens() {
            let next = nodes[s].children.get(&g.0).copied();
            s = match next {
                Some(t) => t,
                None => {
                    let id = nodes.len();
                    nodes.push(Node {
                        children: BTreeMap::new(),
                        fail: 0,
                        dead: false,
                    });
                    nodes[s].children.insert(g.0, id);
                    id
                }
            };
        }
        nodes[s].dead = true;
    }

    let g = gen_count as usize;
    let mut delta: Vec<Vec<usize>> = vec![vec![0; g]; nodes.len()];
    let mut queue: VecDeque<usize> = VecDeque::new();
    for a in 0..g {
        if let Some(&c) = nodes[0].children.get(&(a as u16)) {
            nodes[c].fail = 0;
            delta[0][a] = c;
            queue.push_back(c);
        }
    }
    while let Some(s) = queue.pop_front() {
        let f = nodes[s].fail;
        if nodes[f].dead {
            nodes[s].dead = true;
        }
        for a in 0..g {
            let child = nodes[s].children.get(&(a as u16)).copied();
            match child {
                Some(c) => {
                    nodes[c].fail = delta[f][a];
                    delta[s][a] = c;
                    queue.push_back(c);
                }
                None => {
                    delta[s][a] = delta[f][a];
                }
            }
        }
    }

    let mut per_degree: Vec<u64> = Vec::with_capacity(through as usize + 1);
    let mut cur = vec![0u64; nodes.len()];
    cur[0] = 1;
    per_degree.push(1);
    for _ in 1..=through {
        let mut next = vec![0u64; nodes.len()];
        for s in 0..nodes.len() {
            if cur[s] == 0 || nodes[s].dead {
                continue;
            }
            for a in 0..g {
                let t = delta[s][a];
                if nodes[t].dead {
                    continue;
                }
                next[t] = next[t]
                    .checked_add(cur[s])
                    .ok_or(GbError::CensusOverflow)?;
            }
        }
        let mut total = 0u64;
        for (s, &c) in next.iter().enumerate() {
            if !nodes[s].dead {
                total = total.checked_add(c).ok_or(GbError::CensusOverflow)?;
            }
        }
        per_degree.push(total);
        cur = next;
    }
    let mut cumulative = 0u64;
    for &c in &per_degree {
        cumulative = cumulative.checked_add(c).ok_or(GbError::CensusOverflow)?;
    }
    Ok(Census {
        per_degree,
        cumulative,
    })
}

/// Per-relation verdicts for a generator map, plus two-sided inverse checks
/// when an inverse candidate is supplied.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MapVerification {
    pub relation_checks: Vec<ReductionVerdict>,
    pub inverse_on_source: Option<Vec<ReductionVerdict>>,
    pub inverse_on_target: Option<Vec<ReductionVerdict>>,
}

impl MapVerification {
    pub fn all_verified(&self) -> bool {
        let ok = |v: &[ReductionVerdict]| v.iter().all(ReductionVerdict::is_verified);
        ok(&self.relation_checks)
            && self.inverse_on_source.as_deref().map_or(true, ok)
            && self.inverse_on_target.as_deref().map_or(true, ok)
    }
}

/// Checks that `map` is a well-defined algebra morphism: the image of every
/// source relation must reduce to zero in the target. With `inverse` given,
/// also checks `inverse(map(g)) - g` on every source generator (against
/// `source_gb`, which is then required) and `map(inverse(h)) - h` on every
/// target generator.
pub fn verify_generator_map(
    map: &GeneratorMap,
    target_gb: &GroebnerBasis,
    source_gb: Option<&GroebnerBasis>,
    inverse: Option<&GeneratorMap>,
) -> Result<MapVerification, MapError> {
    if target_gb.presentation().as_ref() != map.target().as_ref() {
        return Err(MapError::PresentationMismatch {
            what: "target basis does not match the map's target presentation",
        });
    }
    if let Some(sgb) = source_gb {
        if sgb.presentation().as_ref() != map.source().as_ref() {
            return Err(MapError::PresentationMismatch {
                what: "source basis does not match the map's source presentation",
            });
        }
    }
    if let Some(inv) = inverse {
        if inv.source().as_ref() != map.target().as_ref()
            || inv.target().as_ref() != map.source().as_ref()
        {
            return Err(MapError::PresentationMismatch {
                what: "inverse map does not swap source and target",
            });
        }
        if source_gb.is_none() {
            return Err(MapError::MissingSourceBasis);
        }
    }

    let verdict = |gb: &GroebnerBasis, p: &NcPoly| -> Result<ReductionVerdict, MapError> {
        gb.reduction_verdict(p).map_err(|e| match e {
            GbError::GenOutOfRange(g) => MapError::GenOutOfRange(g),
            _ => MapError::PresentationMismatch {
                what: "reduction failed against the supplied basis",
            },
        })
    };

    let mut relation_checks = Vec::new();
    for rel in map.source().relations() {
        let image = map.apply(&rel.poly)?;
        relation_checks.push(verdict(target_gb, &image)?);
    }

    let mut inverse_on_source = None;
    let mut inverse_on_target = None;
    if let Some(inv) = inverse {
        let sgb = source_gb.expect("checked above");
        let mut on_source = Vec::new();
        for gidx in 0..map.source().gen_count() {
            let gpoly = NcPoly::gen(GenId(gidx));
            let round = inv.apply(&map.apply(&gpoly)?)?;
            on_source.push(verdict(sgb, &round.sub(&gpoly))?);
        }
        let mut on_target = Vec::new();
        for hidx in 0..map.target().gen_count() {
            let hpoly = NcPoly::gen(GenId(hidx));
            let round = map.apply(&inv.apply(&hpoly)?)?;
            on_target.push(verdict(target_gb, &round.sub(&hpoly))?);
        }
        inverse_on_source = Some(on_source);
        inverse_on_target = Some(on_target);
    }

    Ok(MapVerification {
        relation_checks,
        inverse_on_source,
        inverse_on_target,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::{
        b0_presentation, quantum_perm_presentation, Presentation,
    };

    fn gb_of(p: Presentation, bound: u32) -> (Arc<Presentation>, GroebnerBasis) {
        let p = Arc::new(p);
        let gb = compute_gb(&p, &GbOptions { degree_bound: bound, ..GbOptions::default() })
            .expect("completion succeeds");
        (p, gb)
    }

    #[test]
    fn one_generator_quantum_perm_collapses_to_scalars() {
        let (p, gb) = gb_of(quantum_perm_presentation(1), 6);
        let expected = p.parse_poly("x[1,1] - 1").unwrap();
        assert_eq!(gb.elements(), &[expected]);
        assert!(gb.is_complete());
        let census = gb.normal_word_census(6).unwrap();
        assert_eq!(census.per_degree, vec![1, 0, 0, 0, 0, 0, 0]);
        assert_eq!(census.cumulative, 1);
        assert_eq!(
            gb.dimension_verdict(2).unwrap(),
            DimensionVerdict::Finite { dim: 1 }
        );
    }

    #[test]
    fn two_point_quantum_perm_is_the_two_dimensional_commutative_algebra() {
        let (p, gb) = gb_of(quantum_perm_presentation(2), 6);
        assert!(gb.is_complete());
        assert_eq!(gb.normal_word_census(6).unwrap().cumulative, 2);
        assert_eq!(gb.commutativity_check().unwrap(), Commutativity::Commutative);
        assert_eq!(
            gb.dimension_verdict(2).unwrap(),
            DimensionVerdict::Finite { dim: 2 }
        );

        // Idempotence in the quotient.
        let x11 = p.parse_poly("x[1,1]").unwrap();
        let sq = p.parse_poly("x[1,1]*x[1,1]").unwrap();
        assert_eq!(gb.normal_form(&sq).unwrap(), gb.normal_form(&x11).unwrap());

        // Orthogonality with a certificate that multiplies back out exactly.
        let prod = p.parse_poly("x[1,1]*x[1,2]").unwrap();
        match gb.ideal_membership(&prod).unwrap() {
            Membership::Member { certificate: Some(cert) } => {
                assert_eq!(cert.expand(&p), prod);
            }
            other => panic!("expected membership with certificate, got {:?}", other),
        }

        // A generator is not in the ideal, and the basis is complete enough to say so.
        match gb.ideal_membership(&x11).unwrap() {
            Membership::NotMember { residual } => assert_eq!(residual, x11),
            other => panic!("expected certified non-membership, got {:?}", other),
        }
    }

    #[test]
    fn three_point_quantum_perm_collapses_to_the_permutation_group() {
        // Three points are too few for genuine noncommutativity: the quotient
        // is the six-dimensional algebra of functions on the permutations.
        let (_, gb) = gb_of(quantum_perm_presentation(3), 6);
        assert!(gb.is_complete());
        assert_eq!(gb.commutativity_check().unwrap(), Commutativity::Commutative);
        assert_eq!(
            gb.dimension_verdict(2).unwrap(),
            DimensionVerdict::Finite { dim: 6 }
        );
        assert_eq!(
            gb.normal_word_census(6).unwrap().per_degree,
            alloc::vec![1, 4, 1, 0, 0, 0, 0]
        );
    }

    #[test]
    fn basis_elements_carry_certificates_that_expand_back() {
        let (p, gb) = gb_of(quantum_perm_presentation(2), 6);
        for idx in 0..gb.element_count() {
            let cert = gb.provenance(idx).expect("tracked by default");
            assert_eq!(cert.expand(&p), gb.elements()[idx]);
        }
    }

    #[test]
    fn tails_are_reduced_and_leading_words_form_an_antichain() {
        let (_, gb) = gb_of(quantum_perm_presentation(3), 6);
        for e in gb.elements() {
            let mut terms = e.terms();
            let (lw, lc) = terms.next().unwrap();
            assert!(lc.is_one());
            for (w, _) in terms {
                assert!(gb.is_normal_word(w), "tail word should be irreducible");
                assert!(w < lw);
            }
        }
        let lws: Vec<&Word> = gb.elements().iter().map(|e| e.leading_word().unwrap()).collect();
        for (i, u) in lws.iter().enumerate() {
            for (j, v) in lws.iter().enumerate() {
                if i != j {
                    assert!(!u.contains(v));
                }
            }
        }
    }

    #[test]
    fn census_agrees_with_direct_enumeration() {
        let (_, gb) = gb_of(quantum_perm_presentation(2), 6);
        let census = gb.normal_word_census(4).unwrap();
        let n = 4u16;
        for d in 0..=4u32 {
            let mut count = 0u64;
            let mut stack: Vec<Vec<u16>> = vec![Vec::new()];
            while let Some(w) = stack.pop() {
                let word = Word::from_ids(w.iter().map(|&i| GenId(i)));
                if !gb.is_normal_word(&word) {
                    continue;
                }
                if w.len() == d as usize {
                    count += 1;
                    continue;
                }
                for g in 0..n {
                    let mut next = w.clone();
                    next.push(g);
                    stack.push(next);
                }
            }
            assert_eq!(census.per_degree[d as usize], count, "degree {}", d);
        }
    }

    #[test]
    fn eight_projection_presentation_has_a_free_noncommuting_pair() {
        let (_, gb) = gb_of(b0_presentation(), 6);
        let w = Word::from_ids([GenId(0), GenId(6), GenId(0)]);
        assert!(gb.is_normal_word(&w));
        let census = gb.normal_word_census(6).unwrap();
        assert!(census.per_degree.iter().all(|&c| c > 0));
        match gb.commutativity_check().unwrap() {
            Commutativity::Witness { a, b, residual, .. } => {
                assert_eq!((a, b), (GenId(0), GenId(6)));
                assert!(!residual.is_zero());
            }
            other => panic!("expected a noncommutativity witness, got {:?}", other),
        }
    }

    #[test]
    fn inconsistent_relations_collapse_to_the_unit_ideal() {
        let p = Presentation::custom(
            vec!["a".into()],
            vec![
                crate::ncpoly::NcPoly::gen(GenId(0)),
                crate::ncpoly::NcPoly::gen(GenId(0)).sub(&NcPoly::one()),
            ],
        )
        .unwrap();
        let (p, gb) = gb_of(p, 6);
        assert_eq!(gb.element_count(), 1);
        assert_eq!(gb.elements()[0], NcPoly::one());
        let census = gb.normal_word_census(3).unwrap();
        assert_eq!(census.per_degree, vec![0, 0, 0, 0]);
        assert_eq!(gb.normal_form(&p.parse_poly("a").unwrap()).unwrap(), NcPoly::zero());
        match gb.ideal_membership(&NcPoly::one()).unwrap() {
            Membership::Member { certificate: Some(cert) } => {
                assert_eq!(cert.expand(&p), NcPoly::one());
            }
            other => panic!("expected unit membership, got {:?}", other),
        }
    }

    #[test]
    fn step_cap_and_bound_errors_are_reported() {
        let p = Arc::new(quantum_perm_presentation(3));
        let err = compute_gb(
            &p,
            &GbOptions { degree_bound: 6, step_cap: 3, track_provenance: false },
        )
        .unwrap_err();
        assert_eq!(err, GbError::StepCapExceeded { cap: 3 });

        let err = compute_gb(&p, &GbOptions { degree_bound: 1, ..GbOptions::default() })
            .unwrap_err();
        assert_eq!(err, GbError::BoundTooSmall { required: 2, bound: 1 });
    }

    #[test]
    fn queries_validate_generators_and_degree() {
        let (_, gb) = gb_of(quantum_perm_presentation(1), 2);
        let stray = NcPoly::gen(GenId(5));
        assert!(matches!(
            gb.normal_form(&stray),
            Err(GbError::GenOutOfRange(_))
        ));
        let deep = NcPoly::monomial(
            Word::from_ids([GenId(0), GenId(0), GenId(0)]),
            Rat::one(),
        );
        assert_eq!(
            gb.normal_form(&deep),
            Err(GbError::DegreeExceedsBound { degree: 3, bound: 2 })
        );
    }

    #[test]
    fn recomputation_is_byte_identical_and_import_round_trips() {
        let p = Arc::new(quantum_perm_presentation(2));
        let opts = GbOptions::default();
        let a = compute_gb(&p, &opts).unwrap();
        let b = compute_gb(&p, &opts).unwrap();
        assert_eq!(a, b);

        let imported =
            GroebnerBasis::from_elements(&p, a.degree_bound(), a.elements().to_vec()).unwrap();
        assert_eq!(imported.elements(), a.elements());
        assert_eq!(imported.is_complete(), a.is_complete());
        assert_eq!(
            imported.normal_word_census(6).unwrap(),
            a.normal_word_census(6).unwrap()
        );
    }

    #[test]
    fn import_rejects_malformed_element_lists() {
        let p = Arc::new(quantum_perm_presentation(2));
        let gb = compute_gb(&p, &GbOptions::default()).unwrap();

        let doubled: Vec<NcPoly> = gb.elements().iter().map(|e| e.scale(&crate::rat::rat_int(2))).collect();
        assert!(matches!(
            GroebnerBasis::from_elements(&p, 6, doubled),
            Err(GbError::InvalidImport { reason: "element is not monic", .. })
        ));

        // Dropping elements leaves relations that no longer reduce to zero.
        let partial = vec![gb.elements()[0].clone()];
        assert!(matches!(
            GroebnerBasis::from_elements(&p, 6, partial),
            Err(GbError::InvalidImport { reason: "a presentation relation does not reduce to zero", .. })
        ));
    }
}
