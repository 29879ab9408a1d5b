//! Free-algebra arithmetic: words, polynomials, the deglex term order, the
//! *-involution, and the text syntax used by the CLI.

mod parse;
mod poly;
mod word;

pub use parse::{parse_poly, PolyParseError};
pub use poly::{GenOutOfRange, NcPoly, PolyDisplay};
pub use word::{deglex_compare, GenId, Word};

/// Binary operation selector for [`poly_arith`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PolyOp {
    Add,
    Sub,
    Mul,
}

/// Arithmetic with an explicit generator-set check: both operands must only
/// use generator indices below `gen_count`.
pub fn poly_arith(
    a: &NcPoly,
    b: &NcPoly,
    op: PolyOp,
    gen_count: u16,
) -> Result<NcPoly, GenOutOfRange> {
    for p in [a, b] {
        if let Some(idx) = p.max_gen_index() {
            if idx >= gen_count {
                return Err(GenOutOfRange { index: idx, count: gen_count });
            }
        }
    }
    Ok(match op {
        PolyOp::Add => a.add(b),
        PolyOp::Sub => a.sub(b),
        PolyOp::Mul => a.mul(b),
    })
}

/// The *-operation on the free algebra: antimultiplicative, identity on the
/// rational scalars.
pub fn involution(p: &NcPoly) -> NcPoly {
    p.involution()
}
