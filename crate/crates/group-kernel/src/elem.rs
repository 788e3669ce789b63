//! Concrete element data. Arithmetic lives on `Realization`, which carries the
//! context (degree, modulus, complement tables) the raw data lacks.

/// One group element. Ord gives the canonical element ordering used everywhere
/// (element tables, coset representatives, class representatives).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum ElemData {
    /// Image table: point i maps to perm[i].
    Perm(Vec<u16>),
    /// Torus part (entries mod p^e) and complement element id.
    Tame { v: Vec<u32>, w: u32 },
    /// Row-major square matrix mod p^k.
    Mat(Vec<u32>),
    /// Direct product tuple.
    Prod(Vec<ElemData>),
}

impl ElemData {
    pub fn perm_of(images: &[usize]) -> ElemData {
        ElemData::Perm(images.iter().map(|&i| i as u16).collect())
    }
}
