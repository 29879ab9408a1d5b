//! Polynomials in the free associative algebra over the rationals.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Signed, Zero};

use super::word::{GenId, Word};
use crate::rat::{is_one, rat_to_string, Rat};

/// An element of the free algebra Q<g_0, ..., g_{k-1}>.
///
/// Invariant: `terms` is strictly descending in the deglex order with no zero
/// coefficients, so the leading term is `terms[0]` and equal polynomials are
/// structurally equal.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct NcPoly {
    terms: Vec<(Word, Rat)>,
}

impl NcPoly {
    pub fn zero() -> Self {
        NcPoly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            NcPoly { terms: alloc::vec![(Word::empty(), c)] }
        }
    }

    pub fn gen(g: GenId) -> Self {
        NcPoly { terms: alloc::vec![(Word::single(g), Rat::one())] }
    }

    pub fn monomial(w: Word, c: Rat) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            NcPoly { terms: alloc::vec![(w, c)] }
        }
    }

    /// Builds from arbitrary (word, coefficient) pairs, combining duplicates
    /// and dropping zeros.
    pub fn from_terms<I: IntoIterator<Item = (Word, Rat)>>(pairs: I) -> Self {
        let mut acc: BTreeMap<Word, Rat> = BTreeMap::new();
        for (w, c) in pairs {
            if c.is_zero() {
                continue;
            }
            match acc.entry(w) {
                alloc::collections::btree_map::Entry::Vacant(e) => {
                    e.insert(c);
                }
                alloc::collections::btree_map::Entry::Occupied(mut e) => {
                    let sum = e.get() + &c;
                    if sum.is_zero() {
                        e.remove();
                    } else {
                        *e.get_mut() = sum;
                    }
                }
            }
        }
        NcPoly { terms: acc.into_iter().rev().collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Total degree: the leading word's length. `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.first().map(|(w, _)| w.degree())
    }

    pub fn leading(&self) -> Option<(&Word, &Rat)> {
        self.terms.first().map(|(w, c)| (w, c))
    }

    /// Removes and returns the leading term.
    pub fn pop_leading(&mut self) -> Option<(Word, Rat)> {
        if self.terms.is_empty() {
            None
        } else {
            Some(self.terms.remove(0))
        }
    }

    /// Builds a polynomial from terms already in strictly descending order.
    pub(crate) fn from_descending(terms: Vec<(Word, Rat)>) -> Self {
        debug_assert!(terms.windows(2).all(|p| p[0].0 > p[1].0));
        debug_assert!(terms.iter().all(|(_, c)| !c.is_zero()));
        NcPoly { terms }
    }

    pub fn leading_word(&self) -> Option<&Word> {
        self.terms.first().map(|(w, _)| w)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Rat)> {
        self.terms.iter().map(|(w, c)| (w, c))
    }

    pub fn constant_term(&self) -> Rat {
        match self.terms.last() {
            Some((w, c)) if w.is_empty() => c.clone(),
            _ => Rat::zero(),
        }
    }

    pub fn max_gen_index(&self) -> Option<u16> {
        self.terms.iter().filter_map(|(w, _)| w.max_gen_index()).max()
    }

    pub fn add(&self, other: &NcPoly) -> NcPoly {
        NcPoly { terms: merge_scaled(&self.terms, &other.terms, None) }
    }

    pub fn sub(&self, other: &NcPoly) -> NcPoly {
        let minus_one = -Rat::one();
        NcPoly { terms: merge_scaled(&self.terms, &other.terms, Some(&minus_one)) }
    }

    pub fn neg(&self) -> NcPoly {
        NcPoly {
            terms: self.terms.iter().map(|(w, c)| (w.clone(), -c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &Rat) -> NcPoly {
        if c.is_zero() {
            return NcPoly::zero();
        }
        NcPoly {
            terms: self.terms.iter().map(|(w, k)| (w.clone(), k * c)).collect(),
        }
    }

    pub fn mul(&self, other: &NcPoly) -> NcPoly {
        let mut acc: BTreeMap<Word, Rat> = BTreeMap::new();
        for (wa, ca) in &self.terms {
            for (wb, cb) in &other.terms {
                let w = wa.concat(wb);
                let c = ca * cb;
                match acc.entry(w) {
                    alloc::collections::btree_map::Entry::Vacant(e) => {
                        e.insert(c);
                    }
                    alloc::collections::btree_map::Entry::Occupied(mut e) => {
                        let sum = e.get() + &c;
                        if sum.is_zero() {
                            e.remove();
                        } else {
                            *e.get_mut() = sum;
                        }
                    }
                }
            }
        }
        NcPoly { terms: acc.into_iter().rev().collect() }
    }

    /// `left · self · right`. Order-preserving, so no re-sort is needed.
    pub fn mul_words(&self, left: &Word, right: &Word) -> NcPoly {
        NcPoly {
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (left.concat(w).concat(right), c.clone()))
                .collect(),
        }
    }

    /// `self += c · left · g · right`, the Groebner reduction step.
    pub fn axpy_word(&mut self, c: &Rat, left: &Word, g: &NcPoly, right: &Word) {
        if c.is_zero() || g.is_zero() {
            return;
        }
        let shifted: Vec<(Word, Rat)> = g
            .terms
            .iter()
            .map(|(w, k)| (left.concat(w).concat(right), k * c))
            .collect();
        self.terms = merge_scaled(&self.terms, &shifted, None);
    }

    /// Scales so the leading coefficient is 1; returns the former leading
    /// coefficient. Panics on the zero polynomial.
    pub fn into_monic(self) -> (NcPoly, Rat) {
        let lc = self.terms[0].1.clone();
        if lc.is_one() {
            return (self, lc);
        }
        let inv = Rat::one() / lc.clone();
        (
            NcPoly {
                terms: self.terms.into_iter().map(|(w, c)| (w, c * &inv)).collect(),
            },
            lc,
        )
    }

    /// The *-operation: reverses every word; rational coefficients are fixed.
    pub fn involution(&self) -> NcPoly {
        NcPoly::from_terms(self.terms.iter().map(|(w, c)| (w.reversed(), c.clone())))
    }

    pub fn commutator(a: &NcPoly, b: &NcPoly) -> NcPoly {
        a.mul(b).sub(&b.mul(a))
    }

    /// Substitutes `images[g]` for each generator g. Fails if a generator
    /// index has no image.
    pub fn substitute(&self, images: &[NcPoly]) -> Result<NcPoly, GenOutOfRange> {
        let mut out = NcPoly::zero();
        for (w, c) in &self.terms {
            let mut prod = NcPoly::one();
            for g in w.gens() {
                let img = images
                    .get(g.0 as usize)
                    .ok_or(GenOutOfRange { index: g.0, count: images.len() as u16 })?;
                prod = prod.mul(img);
            }
            out = out.add(&prod.scale(c));
        }
        Ok(out)
    }

    pub fn display<'a>(&'a self, labels: &'a [String]) -> PolyDisplay<'a> {
        PolyDisplay { poly: self, labels }
    }
}

/// A generator index outside the declared generator set.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GenOutOfRange {
    pub index: u16,
    pub count: u16,
}

impl fmt::Display for GenOutOfRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "generator index {} outside generator set of size {}",
            self.index, self.count
        )
    }
}

impl core::error::Error for GenOutOfRange {}

/// Merges two descending term lists, scaling the second by `factor` when given.
fn merge_scaled(a: &[(Word, Rat)], b: &[(Word, Rat)], factor: Option<&Rat>) -> Vec<(Word, Rat)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].0.cmp(&b[j].0) {
            core::cmp::Ordering::Greater => {
                out.push(a[i].clone());
                i += 1;
            }
            core::cmp::Ordering::Less => {
                out.push(scaled(&b[j], factor));
                j += 1;
            }
            core::cmp::Ordering::Equal => {
                let (w, cb) = scaled(&b[j], factor);
                let sum = &a[i].1 + cb;
                if !sum.is_zero() {
                    out.push((w, sum));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend(a[i..].iter().cloned());
    out.extend(b[j..].iter().map(|t| scaled(t, factor)));
    out
}

fn scaled(t: &(Word, Rat), factor: Option<&Rat>) -> (Word, Rat) {
    match factor {
        None => t.clone(),
        Some(f) => (t.0.clone(), &t.1 * f),
    }
}

/// Canonical text form: terms in descending deglex order, `*` between factors,
/// coefficient prefixes only when not ±1, constants bare. Round-trips through
/// [`super::parse_poly`].
pub struct PolyDisplay<'a> {
    poly: &'a NcPoly,
    labels: &'a [String],
}

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return f.write_str("0");
        }
        for (idx, (w, c)) in self.poly.terms().enumerate() {
            let neg = c.is_negative();
            if idx == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else if neg {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            let mag = c.abs();
            if w.is_empty() {
                f.write_str(&rat_to_string(&mag))?;
            } else {
                if !is_one(&mag) {
                    f.write_str(&rat_to_string(&mag))?;
                    f.write_str("*")?;
                }
                for (k, g) in w.gens().enumerate() {
                    if k > 0 {
                        f.write_str("*")?;
                    }
                    match self.labels.get(g.0 as usize) {
                        Some(l) => f.write_str(l)?,
                        None => write!(f, "g{}", g.0)?,
                    }
                }
            }
        }
        Ok(())
    }
}
