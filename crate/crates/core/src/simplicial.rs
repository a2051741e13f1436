//! Subsets of the ground set `[m]` as bit masks, and the one- and two-generator
//! simplicial complexes built from them.
//!
//! A vector `v` of `Z_2^m` and its support `Supp(v)` are the same object here:
//! bit `i - 1` of a [`SubsetMask`] is set exactly when `i` belongs to the set,
//! equivalently when the `i`-th coordinate of `v` is one.
//!
//! Every complex is returned as a [`BitVectorSet`] whose members are sorted by
//! the integer value of their mask, so downstream column orders are stable.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// Largest ground set supported for explicit set construction.
pub const MAX_GROUND: u32 = 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SubsetError {
    #[error("ground set size {0} outside 1..={MAX_GROUND}")]
    GroundSize(u32),
    #[error("element {element} not in [{m}]")]
    OutOfRange { element: u32, m: u32 },
    #[error("mask {bits:#b} has bits beyond position {m}")]
    MaskTooWide { bits: u32, m: u32 },
    #[error("subsets over different ground sets ({0} vs {1})")]
    GroundMismatch(u32, u32),
    #[error("malformed subset literal `{0}` (expected e.g. {{1,2}} or {{}})")]
    Syntax(String),
    #[error("B and C must differ for a punctured two-generator complex")]
    EqualGenerators,
    #[error("the two-generator complex is all of Z_2^{0}; its complement is empty")]
    FullComplex(u32),
}

/// A subset of `[m]`, stored as an `m`-bit mask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SubsetMask {
    bits: u32,
    m: u32,
}

fn check_ground(m: u32) -> Result<(), SubsetError> {
    if m == 0 || m > MAX_GROUND {
        Err(SubsetError::GroundSize(m))
    } else {
        Ok(())
    }
}

#[inline]
fn full_mask(m: u32) -> u32 {
    if m >= 32 {
        u32::MAX
    } else {
        (1u32 << m) - 1
    }
}

impl SubsetMask {
    pub fn new(bits: u32, m: u32) -> Result<Self, SubsetError> {
        check_ground(m)?;
        if bits & !full_mask(m) != 0 {
            return Err(SubsetError::MaskTooWide { bits, m });
        }
        Ok(Self { bits, m })
    }

    pub fn empty(m: u32) -> Result<Self, SubsetError> {
        Self::new(0, m)
    }

    pub fn full(m: u32) -> Result<Self, SubsetError> {
        Self::new(full_mask(m), m)
    }

    /// Builds a subset from 1-based elements.
    pub fn from_elements<I>(elements: I, m: u32) -> Result<Self, SubsetError>
    where
        I: IntoIterator<Item = u32>,
    {
        check_ground(m)?;
        let mut bits = 0u32;
        for e in elements {
            if e == 0 || e > m {
                return Err(SubsetError::OutOfRange { element: e, m });
            }
            bits |= 1 << (e - 1);
        }
        Ok(Self { bits, m })
    }

    /// Parses the brace form `{2,3}` / `{}` over the ground set `[m]`.
    pub fn parse(text: &str, m: u32) -> Result<Self, SubsetError> {
        let elements = parse_elements(text)?;
        Self::from_elements(elements, m)
    }

    #[inline]
    pub fn bits(self) -> u32 {
        self.bits
    }

    #[inline]
    pub fn ground(self) -> u32 {
        self.m
    }

    #[inline]
    pub fn len(self) -> u32 {
        self.bits.count_ones()
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.bits == 0
    }

    #[inline]
    pub fn contains(self, element: u32) -> bool {
        element >= 1 && element <= self.m && self.bits & (1 << (element - 1)) != 0
    }

    pub fn elements(self) -> impl Iterator<Item = u32> {
        let bits = self.bits;
        (1..=self.m).filter(move |&i| bits & (1 << (i - 1)) != 0)
    }

    fn same_ground(self, other: Self) -> Result<(), SubsetError> {
        if self.m == other.m {
            Ok(())
        } else {
            Err(SubsetError::GroundMismatch(self.m, other.m))
        }
    }

    pub fn union(self, other: Self) -> Self {
        debug_assert_eq!(self.m, other.m);
        Self { bits: self.bits | other.bits, m: self.m }
    }

    pub fn intersection(self, other: Self) -> Self {
        debug_assert_eq!(self.m, other.m);
        Self { bits: self.bits & other.bits, m: self.m }
    }

    pub fn difference(self, other: Self) -> Self {
        debug_assert_eq!(self.m, other.m);
        Self { bits: self.bits & !other.bits, m: self.m }
    }

    pub fn complement(self) -> Self {
        Self { bits: !self.bits & full_mask(self.m), m: self.m }
    }

    pub fn is_subset_of(self, other: Self) -> bool {
        self.bits & !other.bits == 0
    }

    pub fn is_proper_subset_of(self, other: Self) -> bool {
        self.is_subset_of(other) && self.bits != other.bits
    }

    /// Inner product over `Z_2`.
    #[inline]
    pub fn dot(self, other: Self) -> u32 {
        (self.bits & other.bits).count_ones() & 1
    }
}

impl fmt::Display for SubsetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        let mut first = true;
        for e in self.elements() {
            if !first {
                f.write_str(",")?;
            }
            first = false;
            write!(f, "{e}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for SubsetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}/{}", self.m)
    }
}

/// Parses `{a,b,...}` into its 1-based elements, without range checks.
pub fn parse_elements(text: &str) -> Result<Vec<u32>, SubsetError> {
    let t = text.trim();
    let inner = t
        .strip_prefix('{')
        .and_then(|s| s.strip_suffix('}'))
        .ok_or_else(|| SubsetError::Syntax(text.to_string()))?
        .trim();
    if inner.is_empty() {
        return Ok(Vec::new());
    }
    inner.split(',').map(|p| p.trim().parse::<u32>().map_err(|_| SubsetError::Syntax(text.to_string()))).collect()
}

/// A subset with an unspecified ground set, as written on the command line.
/// It is bound to a concrete `m` later with [`SubsetLiteral::bind`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubsetLiteral(pub Vec<u32>);

impl SubsetLiteral {
    pub fn bind(&self, m: u32) -> Result<SubsetMask, SubsetError> {
        SubsetMask::from_elements(self.0.iter().copied(), m)
    }
}

impl FromStr for SubsetLiteral {
    type Err = SubsetError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_elements(s).map(SubsetLiteral)
    }
}

/// A set of vectors of `Z_2^m`, kept sorted and duplicate free.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BitVectorSet {
    members: Vec<u32>,
    m: u32,
}

impl BitVectorSet {
    /// Builds a set from arbitrary masks; sorts and removes duplicates.
    pub fn from_masks(mut masks: Vec<u32>, m: u32) -> Result<Self, SubsetError> {
        check_ground(m)?;
        if let Some(&bad) = masks.iter().find(|&&b| b & !full_mask(m) != 0) {
            return Err(SubsetError::MaskTooWide { bits: bad, m });
        }
        masks.sort_unstable();
        masks.dedup();
        Ok(Self { members: masks, m })
    }

    pub fn ground(&self) -> u32 {
        self.m
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn masks(&self) -> &[u32] {
        &self.members
    }

    pub fn iter(&self) -> impl Iterator<Item = SubsetMask> + '_ {
        self.members.iter().map(move |&bits| SubsetMask { bits, m: self.m })
    }

    pub fn contains(&self, bits: u32) -> bool {
        self.members.binary_search(&bits).is_ok()
    }
}

/// Submasks of `bits` in ascending order, zero included.
fn submasks_ascending(bits: u32) -> Vec<u32> {
    // Enumerating s = (s - bits) & bits from 0 walks the submasks upward.
    let mut out = Vec::with_capacity(1usize << bits.count_ones());
    let mut s = 0u32;
    loop {
        out.push(s);
        if s == bits {
            break;
        }
        s = s.wrapping_sub(bits) & bits;
    }
    out
}

/// `Δ_A`: every vector whose support lies inside `A`.
pub fn simplex(a: SubsetMask) -> BitVectorSet {
    BitVectorSet { members: submasks_ascending(a.bits), m: a.m }
}

/// `Δ_{B,C} = Δ_B ∪ Δ_C`.
pub fn two_gen_complex(b: SubsetMask, c: SubsetMask) -> Result<BitVectorSet, SubsetError> {
    b.same_ground(c)?;
    let mut masks = submasks_ascending(b.bits);
    masks.extend(submasks_ascending(c.bits));
    BitVectorSet::from_masks(masks, b.m)
}

/// `Δ_{B,C} ∖ Δ_{B∩C}`. Rejects `B = C`, where the result would be empty.
pub fn punctured_two_gen(b: SubsetMask, c: SubsetMask) -> Result<BitVectorSet, SubsetError> {
    b.same_ground(c)?;
    if b == c {
        return Err(SubsetError::EqualGenerators);
    }
    let common = b.bits & c.bits;
    let union = two_gen_complex(b, c)?;
    let members = union.members.into_iter().filter(|&v| v & !common != 0).collect();
    Ok(BitVectorSet { members, m: b.m })
}

/// `Z_2^m ∖ Δ_{B,C}`. Rejects the case where the complex is the whole space.
pub fn complement_two_gen(b: SubsetMask, c: SubsetMask) -> Result<BitVectorSet, SubsetError> {
    b.same_ground(c)?;
    let m = b.m;
    let full = full_mask(m);
    if b.bits == full || c.bits == full {
        return Err(SubsetError::FullComplex(m));
    }
    let members = (0..=full).filter(|&v| v & !b.bits != 0 && v & !c.bits != 0).collect();
    Ok(BitVectorSet { members, m })
}

/// `Δ_A^* = Δ_A ∖ {0}`.
pub fn punctured_simplex(a: SubsetMask) -> BitVectorSet {
    let mut s = simplex(a);
    s.members.remove(0);
    s
}

/// `ψ(v | A)`: one when the support of `v` misses `A`.
#[inline]
pub fn psi(v: SubsetMask, a: SubsetMask) -> u32 {
    u32::from(v.bits & a.bits == 0)
}

/// Cardinality of a complex with the given maximal faces, by inclusion–exclusion
/// over nonempty families of faces.
pub fn complex_size_from_faces(faces: &[SubsetMask]) -> u64 {
    let k = faces.len();
    let mut total: i64 = 0;
    for family in 1u32..(1 << k) {
        let mut meet = u32::MAX;
        for (i, f) in faces.iter().enumerate() {
            if family & (1 << i) != 0 {
                meet &= f.bits;
            }
        }
        let term = 1i64 << meet.count_ones();
        if family.count_ones() % 2 == 1 {
            total += term;
        } else {
            total -= term;
        }
    }
    total as u64
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(text: &str, m: u32) -> SubsetMask {
        SubsetMask::parse(text, m).unwrap()
    }

    /// Brute-force membership over all of Z_2^m.
    fn brute(m: u32, pred: impl Fn(u32) -> bool) -> Vec<u32> {
        (0..1u32 << m).filter(|&v| pred(v)).collect()
    }

    #[test]
    fn parse_and_print() {
        assert_eq!(s("{2,3}", 4).to_string(), "{2,3}");
        assert_eq!(s("{}", 4).to_string(), "{}");
        assert_eq!(s(" { 3 , 1 } ", 3).bits(), 0b101);
        assert!(matches!(SubsetMask::parse("{5}", 4), Err(SubsetError::OutOfRange { .. })));
        assert!(matches!(SubsetMask::parse("2,3", 4), Err(SubsetError::Syntax(_))));
        assert!(matches!(SubsetMask::parse("{a}", 4), Err(SubsetError::Syntax(_))));
        assert!(SubsetMask::new(0b1000, 3).is_err());
        assert!(SubsetMask::new(0, 21).is_err());
    }

    #[test]
    fn simplex_examples() {
        assert_eq!(simplex(s("{}", 3)).masks(), &[0]);
        assert_eq!(simplex(s("{1,2}", 2)).masks(), &[0b00, 0b01, 0b10, 0b11]);
        // {1,3} in Z_2^3: 000, 100, 001, 101 as coordinate strings.
        assert_eq!(simplex(s("{1,3}", 3)).masks(), &[0b000, 0b001, 0b100, 0b101]);
    }

    #[test]
    fn two_gen_examples() {
        let u = two_gen_complex(s("{1}", 2), s("{2}", 2)).unwrap();
        assert_eq!(u.masks(), &[0, 1, 2]);
        let same = two_gen_complex(s("{1,2}", 2), s("{1,2}", 2)).unwrap();
        assert_eq!(same, simplex(s("{1,2}", 2)));
        assert_eq!(two_gen_complex(s("{3,4}", 4), s("{2,3}", 4)).unwrap().len(), 6);
        assert!(two_gen_complex(s("{1}", 2), s("{1}", 3)).is_err());
    }

    #[test]
    fn punctured_examples() {
        let p = punctured_two_gen(s("{2}", 3), s("{3}", 3)).unwrap();
        assert_eq!(p.masks(), &[0b010, 0b100]);
        assert_eq!(punctured_two_gen(s("{}", 3), s("{1,2,3}", 3)).unwrap().len(), 7);
        assert_eq!(punctured_two_gen(s("{3,4}", 4), s("{2,3}", 4)).unwrap().len(), 4);
        assert_eq!(punctured_two_gen(s("{1}", 3), s("{1}", 3)), Err(SubsetError::EqualGenerators));
    }

    #[test]
    fn complement_examples() {
        assert_eq!(complement_two_gen(s("{4}", 4), s("{1,2,3}", 4)).unwrap().len(), 7);
        assert_eq!(complement_two_gen(s("{}", 2), s("{}", 2)).unwrap().masks(), &[1, 2, 3]);
        assert_eq!(complement_two_gen(s("{1}", 3), s("{3}", 3)).unwrap().len(), 5);
        assert_eq!(complement_two_gen(s("{1,2}", 2), s("{}", 2)), Err(SubsetError::FullComplex(2)));
    }

    #[test]
    fn punctured_simplex_examples() {
        assert_eq!(punctured_simplex(s("{5}", 6)).masks(), &[0b10000]);
        assert!(punctured_simplex(s("{}", 3)).is_empty());
        assert_eq!(punctured_simplex(s("{1,2}", 2)).masks(), &[1, 2, 3]);
    }

    #[test]
    fn psi_examples() {
        assert_eq!(psi(s("{}", 3), s("{1,2}", 3)), 1);
        assert_eq!(psi(s("{1}", 3), s("{1}", 3)), 0);
    }

    #[test]
    fn character_sum_identity_exhaustive() {
        // sum over t in Δ_A of (-1)^{v.t} = 2^{|A|} ψ(v|A)
        for m in 1..=4 {
            for a in 0..1u32 << m {
                let a = SubsetMask::new(a, m).unwrap();
                for v in 0..1u32 << m {
                    let v = SubsetMask::new(v, m).unwrap();
                    let sum: i64 = simplex(a).iter().map(|t| if v.dot(t) == 0 { 1 } else { -1 }).sum();
                    assert_eq!(sum, (1i64 << a.len()) * i64::from(psi(v, a)));
                }
            }
        }
    }

    #[test]
    fn psi_is_dual_membership() {
        // ψ(v|A) = 1 iff v is orthogonal to all of Δ_A, iff v ∈ Δ_{A^c}.
        for m in 1..=4 {
            for a in 0..1u32 << m {
                let a = SubsetMask::new(a, m).unwrap();
                let dual = simplex(a.complement());
                for v in 0..1u32 << m {
                    let vm = SubsetMask::new(v, m).unwrap();
                    let orth = simplex(a).iter().all(|t| vm.dot(t) == 0);
                    assert_eq!(psi(vm, a) == 1, orth);
                    assert_eq!(psi(vm, a) == 1, dual.contains(v));
                }
            }
        }
    }

    #[test]
    fn cardinalities_match_brute_force() {
        for m in 1..=5u32 {
            for a in 0..1u32 << m {
                let am = SubsetMask::new(a, m).unwrap();
                let sx = simplex(am);
                assert_eq!(sx.masks(), brute(m, |v| v & !a == 0).as_slice());
                assert_eq!(sx.len(), 1 << am.len());
                assert_eq!(punctured_simplex(am).len(), (1 << am.len()) - 1);
                for b in 0..1u32 << m {
                    let bm = SubsetMask::new(b, m).unwrap();
                    let (nb, nc, ni) = (am.len(), bm.len(), am.intersection(bm).len());
                    let u = two_gen_complex(am, bm).unwrap();
                    assert_eq!(u.masks(), brute(m, |v| v & !a == 0 || v & !b == 0).as_slice());
                    assert_eq!(u.len(), (1 << nb) + (1 << nc) - (1 << ni));
                    assert_eq!(u.len() as u64, complex_size_from_faces(&[am, bm]));
                    if a != b {
                        let p = punctured_two_gen(am, bm).unwrap();
                        let want = brute(m, |v| (v & !a == 0 || v & !b == 0) && v & !(a & b) != 0);
                        assert_eq!(p.masks(), want.as_slice());
                        assert_eq!(p.len(), (1 << nb) + (1 << nc) - (1 << (ni + 1)));
                    }
                    let full = (1u32 << m) - 1;
                    if a != full && b != full {
                        let c = complement_two_gen(am, bm).unwrap();
                        let want = brute(m, |v| v & !a != 0 && v & !b != 0);
                        assert_eq!(c.masks(), want.as_slice());
                        assert_eq!(c.len(), (1 << m) - (1 << nb) - (1 << nc) + (1 << ni));
                    }
                }
            }
        }
    }

    #[test]
    fn complexes_are_downward_closed() {
        let m = 5;
        for b in 0..1u32 << m {
            for c in 0..1u32 << m {
                let u = two_gen_complex(SubsetMask::new(b, m).unwrap(), SubsetMask::new(c, m).unwrap()).unwrap();
                for &v in u.masks() {
                    for sub in submasks_ascending(v) {
                        assert!(u.contains(sub));
                    }
                }
            }
        }
    }

    #[test]
    fn inclusion_exclusion_three_faces() {
        let f = [s("{1,2}", 4), s("{2,3}", 4), s("{3,4}", 4)];
        let mut all: Vec<u32> = f.iter().flat_map(|x| submasks_ascending(x.bits())).collect();
        all.sort_unstable();
        all.dedup();
        assert_eq!(complex_size_from_faces(&f), all.len() as u64);
    }
}
