//! Classical automorphism group of a graph, by exhaustive backtracking.
//!
//! An automorphism is a vertex permutation with `(i,k)` an edge exactly when
//! `(sigma(i),sigma(k))` is. The search assigns images in vertex order,
//! pruning candidates whose (out-degree, in-degree, loop) profile differs and
//! partial assignments that already break an adjacency. No partition
//! refinement: the intended inputs are small, and a vertex cap keeps
//! accidental large inputs honest.

use alloc::vec;
use alloc::vec::Vec;

use core::fmt;

use crate::graph::Graph;

pub const DEFAULT_VERTEX_CAP: u16 = 12;

/// A permutation of `1..=n`, stored as 1-based images: `images[i-1] = sigma(i)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Perm {
    images: Vec<u16>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PermError {
    OutOfRange { value: u16, n: u16 },
    Duplicate { value: u16 },
}

impl fmt::Display for PermError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PermError::OutOfRange { value, n } => {
                write!(f, "image {} outside 1..={}", value, n)
            }
            PermError::Duplicate { value } => write!(f, "image {} repeated", value),
        }
    }
}

impl core::error::Error for PermError {}

impl Perm {
    pub fn identity(n: u16) -> Perm {
        Perm {
            images: (1..=n).collect(),
        }
    }

    /// Validates that `images` is a bijection of `1..=images.len()`.
    pub fn from_images(images: Vec<u16>) -> Result<Perm, PermError> {
        let n = images.len() as u16;
        let mut seen = vec![false; images.len()];
        for &v in &images {
            if v < 1 || v > n {
                return Err(PermError::OutOfRange { value: v, n });
            }
            if seen[(v - 1) as usize] {
                return Err(PermError::Duplicate { value: v });
            }
            seen[(v - 1) as usize] = true;
        }
        Ok(Perm { images })
    }

    pub fn n(&self) -> u16 {
        self.images.len() as u16
    }

    /// 1-based application.
    pub fn apply(&self, v: u16) -> u16 {
        self.images[(v - 1) as usize]
    }

    pub fn images(&self) -> &[u16] {
        &self.images
    }

    /// `(self . other)(v) = self(other(v))`. Panics on size mismatch.
    pub fn compose(&self, other: &Perm) -> Perm {
        assert_eq!(self.n(), other.n());
        Perm {
            images: other.images.iter().map(|&v| self.apply(v)).collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut images = vec![0u16; self.images.len()];
        for (i, &v) in self.images.iter().enumerate() {
            images[(v - 1) as usize] = (i + 1) as u16;
        }
        Perm { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| v == (i + 1) as u16)
    }

    /// Multiplicative order.
    pub fn order(&self) -> u64 {
        let mut acc = self.clone();
        let mut ord = 1u64;
        while !acc.is_identity() {
            acc = self.compose(&acc);
            ord += 1;
        }
        ord
    }
}

/// True when `sigma` preserves adjacency in both directions on all pairs.
pub fn is_automorphism(g: &Graph, sigma: &Perm) -> bool {
    if sigma.n() != g.n() {
        return false;
    }
    let n = g.n();
    for i in 1..=n {
        for k in 1..=n {
            if g.has_edge(i, k) != g.has_edge(sigma.apply(i), sigma.apply(k)) {
                return false;
            }
        }
    }
    true
}

/// The full automorphism group as an explicit element list, sorted by image
/// tuple. Closed under composition and inverse by construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AutGroup {
    elements: Vec<Perm>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AutError {
    TooManyVertices { n: u16, cap: u16 },
    /// `from_elements` got a list that is not a group on `1..=n`.
    NotAGroup { reason: &'static str },
}

impl fmt::Display for AutError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AutError::TooManyVertices { n, cap } => {
                write!(f, "{} vertices exceeds the search cap of {}", n, cap)
            }
            AutError::NotAGroup { reason } => write!(f, "not a permutation group: {}", reason),
        }
    }
}

impl core::error::Error for AutError {}

impl AutGroup {
    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn order(&self) -> u64 {
        self.elements.len() as u64
    }

    /// Wraps an explicit element list, checking identity membership and
    /// closure under composition and inverse.
    pub fn from_elements(elements: Vec<Perm>) -> Result<AutGroup, AutError> {
        let Some(first) = elements.first() else {
            return Err(AutError::NotAGroup { reason: "empty element list" });
        };
        let n = first.n();
        if elements.iter().any(|p| p.n() != n) {
            return Err(AutError::NotAGroup { reason: "mixed degrees" });
        }
        let mut sorted = elements;
        sorted.sort();
        sorted.dedup();
        if !sorted.iter().any(Perm::is_identity) {
            return Err(AutError::NotAGroup { reason: "missing identity" });
        }
        for a in &sorted {
            if sorted.binary_search(&a.inverse()).is_err() {
                return Err(AutError::NotAGroup { reason: "not inverse-closed" });
            }
            for b in &sorted {
                if sorted.binary_search(&a.compose(b)).is_err() {
                    return Err(AutError::NotAGroup { reason: "not composition-closed" });
                }
            }
        }
        Ok(AutGroup { elements: sorted })
    }
}

/// Exhaustive automorphism search. `cap` bounds the vertex count; use
/// [`DEFAULT_VERTEX_CAP`] unless there is a reason not to.
pub fn automorphisms(g: &Graph, cap: u16) -> Result<AutGroup, AutError> {
    let n = g.n();
    if n > cap {
        return Err(AutError::TooManyVertices { n, cap });
    }
    let profile = |v: u16| (g.out_degree(v), g.in_degree(v), g.has_loop(v));
    let profiles: Vec<_> = (1..=n).map(profile).collect();

    let mut found: Vec<Perm> = Vec::new();
    let mut images: Vec<u16> = Vec::with_capacity(n as usize);
    let mut used = vec![false; n as usize + 1];

    fn dfs(
        g: &Graph,
        n: u16,
        profiles: &[(usize, usize, bool)],
        images: &mut Vec<u16>,
        used: &mut [bool],
        found: &mut Vec<Perm>,
    ) {
        let v = images.len() as u16 + 1;
        if v > n {
            found.push(Perm { images: images.clone() });
            return;
        }
        for w in 1..=n {
            if used[w as usize] || profiles[(v - 1) as usize] != profiles[(w - 1) as usize] {
                continue;
            }
            let consistent = (1..v).all(|u| {
                let iu = images[(u - 1) as usize];
                g.has_edge(u, v) == g.has_edge(iu, w) && g.has_edge(v, u) == g.has_edge(w, iu)
            });
            if !consistent {
                continue;
            }
            images.push(w);
            used[w as usize] = true;
            dfs(g, n, profiles, images, used, found);
            images.pop();
            used[w as usize] = false;
        }
    }
    dfs(g, n, &profiles, &mut images, &mut used, &mut found);
    found.sort();
    Ok(AutGroup { elements: found })
}

/// Structural classification flags for a small group.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GroupInvariants {
    pub order: u64,
    pub abelian: bool,
    pub cyclic: bool,
    /// Order `2k` (k >= 2) with an order-k element inverted under conjugation
    /// by an order-2 element outside its span. The Klein four-group qualifies
    /// (k = 2) and is reported as both abelian and dihedral.
    pub dihedral: bool,
}

pub fn group_invariants(group: &AutGroup) -> GroupInvariants {
    let els = group.elements();
    let order = group.order();
    let abelian = els
        .iter()
        .all(|a| els.iter().all(|b| a.compose(b) == b.compose(a)));
    let cyclic = els.iter().any(|a| a.order() == order);
    let dihedral = if order % 2 == 0 && order >= 4 {
        let k = order / 2;
        els.iter().any(|r| {
            if r.order() != k {
                return false;
            }
            let mut span = Vec::with_capacity(k as usize);
            let mut acc = Perm::identity(r.n());
            for _ in 0..k {
                span.push(acc.clone());
                acc = r.compose(&acc);
            }
            let r_inv = r.inverse();
            els.iter().any(|s| {
                s.order() == 2
                    && !span.contains(s)
                    && s.compose(&r.compose(s)) == r_inv
            })
        })
    } else {
        false
    };
    GroupInvariants {
        order,
        abelian,
        cyclic,
        dihedral,
    }
}
