//! Vectors over `Z_4` in bitplane form, the Gray map and Lee weights.
//!
//! Every `x ∈ Z_4` is written uniquely as `b + 2c` with `b, c ∈ {0, 1}`. A
//! [`Z4Vector`] keeps the `b` digits and the `c` digits of all coordinates in
//! two packed bitplanes, so that
//!
//! * addition is `(b1 ^ b2, c1 ^ c2 ^ (b1 & b2))`,
//! * the Gray image is `(c, b ^ c)`,
//! * the Lee weight is `popcount(c) + popcount(b ^ c)`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// Longest supported vector.
pub const MAX_LEN: usize = 1 << 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Z4Error {
    #[error("length mismatch: {0} vs {1}")]
    LengthMismatch(usize, usize),
    #[error("length {0} exceeds the supported maximum {MAX_LEN}")]
    TooLong(usize),
    #[error("invalid Z4 digit `{0}`")]
    BadDigit(char),
}

#[inline]
fn words_for(len: usize) -> usize {
    len.div_ceil(64)
}

#[inline]
fn tail_mask(len: usize) -> u64 {
    match len % 64 {
        0 => u64::MAX,
        r => (1u64 << r) - 1,
    }
}

/// A length-`n` vector over `Z_4`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Z4Vector {
    len: usize,
    /// residue mod 2 of every coordinate
    low: Vec<u64>,
    /// the "2" digit of every coordinate
    high: Vec<u64>,
}

impl Z4Vector {
    pub fn zero(len: usize) -> Self {
        assert!(len <= MAX_LEN, "Z4 vector length {len} over cap");
        let w = words_for(len);
        Self { len, low: vec![0; w], high: vec![0; w] }
    }

    pub fn from_digits(digits: &[u8]) -> Result<Self, Z4Error> {
        if digits.len() > MAX_LEN {
            return Err(Z4Error::TooLong(digits.len()));
        }
        let mut v = Self::zero(digits.len());
        for (i, &d) in digits.iter().enumerate() {
            if d > 3 {
                return Err(Z4Error::BadDigit(char::from(b'0' + d.min(9))));
            }
            v.set(i, d);
        }
        Ok(v)
    }

    /// Assembles `b + 2c` from two binary vectors given as packed words.
    pub fn from_planes(len: usize, low: Vec<u64>, high: Vec<u64>) -> Self {
        let w = words_for(len);
        assert!(low.len() == w && high.len() == w, "plane width does not match length");
        let mut v = Self { len, low, high };
        v.clear_tail();
        v
    }

    fn clear_tail(&mut self) {
        if let (Some(l), Some(h)) = (self.low.last_mut(), self.high.last_mut()) {
            let m = tail_mask(self.len);
            *l &= m;
            *h &= m;
        }
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn get(&self, i: usize) -> u8 {
        debug_assert!(i < self.len);
        let (w, b) = (i / 64, i % 64);
        (((self.low[w] >> b) & 1) | (((self.high[w] >> b) & 1) << 1)) as u8
    }

    #[inline]
    pub fn set(&mut self, i: usize, value: u8) {
        debug_assert!(i < self.len && value < 4);
        let (w, b) = (i / 64, i % 64);
        let bit = 1u64 << b;
        self.low[w] = (self.low[w] & !bit) | (u64::from(value & 1) << b);
        self.high[w] = (self.high[w] & !bit) | (u64::from((value >> 1) & 1) << b);
    }

    pub fn digits(&self) -> Vec<u8> {
        (0..self.len).map(|i| self.get(i)).collect()
    }

    /// The `b` plane of `b + 2c` (the reduction mod 2).
    pub fn residue(&self) -> &[u64] {
        &self.low
    }

    /// The `c` plane of `b + 2c`.
    pub fn twos(&self) -> &[u64] {
        &self.high
    }

    pub fn is_zero(&self) -> bool {
        self.low.iter().chain(&self.high).all(|&w| w == 0)
    }

    fn check_len(&self, other: &Self) -> Result<(), Z4Error> {
        if self.len == other.len {
            Ok(())
        } else {
            Err(Z4Error::LengthMismatch(self.len, other.len))
        }
    }

    /// In-place `self += other`; lengths must agree.
    #[inline]
    pub fn add_assign(&mut self, other: &Self) {
        debug_assert_eq!(self.len, other.len);
        for ((l, h), (ol, oh)) in self.low.iter_mut().zip(self.high.iter_mut()).zip(other.low.iter().zip(&other.high)) {
            *h ^= oh ^ (*l & ol);
            *l ^= ol;
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, Z4Error> {
        self.check_len(other)?;
        let mut out = self.clone();
        out.add_assign(other);
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        // -(b + 2c) = b + 2(c + b) mod 4
        let high = self.high.iter().zip(&self.low).map(|(h, l)| h ^ l).collect();
        Self { len: self.len, low: self.low.clone(), high }
    }

    pub fn sub(&self, other: &Self) -> Result<Self, Z4Error> {
        self.add(&other.neg())
    }

    pub fn scale(&self, k: u8) -> Self {
        match k % 4 {
            0 => Self::zero(self.len),
            1 => self.clone(),
            2 => Self { len: self.len, low: vec![0; self.low.len()], high: self.low.clone() },
            _ => self.neg(),
        }
    }

    /// `2 (self ∗ other)`: twice the coordinatewise product. Only residues
    /// mod 2 matter, so this is `2` on the common odd positions.
    pub fn twice_product(&self, other: &Self) -> Result<Self, Z4Error> {
        self.check_len(other)?;
        let high = self.low.iter().zip(&other.low).map(|(a, b)| a & b).collect();
        Ok(Self { len: self.len, low: vec![0; self.low.len()], high })
    }

    /// Euclidean inner product in `Z_4`.
    pub fn dot(&self, other: &Self) -> Result<u8, Z4Error> {
        self.check_len(other)?;
        Ok(self.dot_unchecked(other))
    }

    pub(crate) fn dot_unchecked(&self, other: &Self) -> u8 {
        // (b+2c)(b'+2c') = bb' + 2(bc' + cb') mod 4
        let mut odd = 0u32;
        let mut twos = 0u32;
        for i in 0..self.low.len() {
            let (b, c) = (self.low[i], self.high[i]);
            let (ob, oc) = (other.low[i], other.high[i]);
            let bb = b & ob;
            odd += bb.count_ones();
            twos += ((b & oc) ^ (c & ob)).count_ones();
        }
        ((odd + 2 * twos) % 4) as u8
    }

    pub fn lee_weight(&self) -> u32 {
        self.low.iter().zip(&self.high).map(|(l, h)| h.count_ones() + (l ^ h).count_ones()).sum()
    }

    pub fn hamming_weight(&self) -> u32 {
        self.low.iter().zip(&self.high).map(|(l, h)| (l | h).count_ones()).sum()
    }

    pub fn gray(&self) -> BinaryVector {
        let bc: Vec<u64> = self.low.iter().zip(&self.high).map(|(l, h)| l ^ h).collect();
        BinaryVector::concat(
            &BinaryVector::from_words(self.len, self.high.clone()),
            &BinaryVector::from_words(self.len, bc),
        )
    }
}

impl Ord for Z4Vector {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len.cmp(&other.len).then_with(|| self.high.cmp(&other.high)).then_with(|| self.low.cmp(&other.low))
    }
}

impl PartialOrd for Z4Vector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Lee weight of `u - v`.
pub fn lee_distance(u: &Z4Vector, v: &Z4Vector) -> Result<u32, Z4Error> {
    Ok(u.sub(v)?.lee_weight())
}

/// Lee weight of a single element of `Z_4`.
#[inline]
pub fn lee_of(x: u8) -> u32 {
    match x % 4 {
        0 => 0,
        2 => 2,
        _ => 1,
    }
}

impl fmt::Display for Z4Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len {
            write!(f, "{}", self.get(i))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Z4Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Z4[{self}]")
    }
}

impl FromStr for Z4Vector {
    type Err = Z4Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let digits = s
            .chars()
            .map(|ch| match ch {
                '0'..='3' => Ok(ch as u8 - b'0'),
                other => Err(Z4Error::BadDigit(other)),
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::from_digits(&digits)
    }
}

/// A packed binary vector.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BinaryVector {
    len: usize,
    words: Vec<u64>,
}

impl BinaryVector {
    pub fn zero(len: usize) -> Self {
        Self { len, words: vec![0; words_for(len)] }
    }

    pub fn from_words(len: usize, mut words: Vec<u64>) -> Self {
        words.resize(words_for(len), 0);
        if let Some(last) = words.last_mut() {
            *last &= tail_mask(len);
        }
        Self { len, words }
    }

    pub fn from_bits(bits: &[u8]) -> Self {
        let mut v = Self::zero(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            if b & 1 == 1 {
                v.words[i / 64] |= 1 << (i % 64);
            }
        }
        v
    }

    /// `(left ‖ right)`.
    pub fn concat(left: &Self, right: &Self) -> Self {
        let mut out = Self::zero(left.len + right.len);
        out.words[..left.words.len()].copy_from_slice(&left.words);
        let shift = left.len % 64;
        let base = left.len / 64;
        for (i, &w) in right.words.iter().enumerate() {
            out.words[base + i] |= w << shift;
            if shift != 0 && base + i + 1 < out.words.len() {
                out.words[base + i + 1] |= w >> (64 - shift);
            }
        }
        out
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    #[inline]
    pub fn get(&self, i: usize) -> u8 {
        ((self.words[i / 64] >> (i % 64)) & 1) as u8
    }

    pub fn bits(&self) -> Vec<u8> {
        (0..self.len).map(|i| self.get(i)).collect()
    }

    pub fn weight(&self) -> u32 {
        self.words.iter().map(|w| w.count_ones()).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn xor(&self, other: &Self) -> Self {
        debug_assert_eq!(self.len, other.len);
        let words = self.words.iter().zip(&other.words).map(|(a, b)| a ^ b).collect();
        Self { len: self.len, words }
    }

    /// Support containment: every one of `self` is a one of `other`.
    pub fn covered_by(&self, other: &Self) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }
}

impl fmt::Display for BinaryVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len {
            write!(f, "{}", self.get(i))?;
        }
        Ok(())
    }
}

impl fmt::Debug for BinaryVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Bin[{self}]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn v(s: &str) -> Z4Vector {
        s.parse().unwrap()
    }

    fn all_vectors(n: usize) -> Vec<Z4Vector> {
        (0..4usize.pow(n as u32))
            .map(|mut x| {
                let mut d = vec![0u8; n];
                for slot in d.iter_mut() {
                    *slot = (x % 4) as u8;
                    x /= 4;
                }
                Z4Vector::from_digits(&d).unwrap()
            })
            .collect()
    }

    fn arb_pair() -> impl Strategy<Value = (Vec<u8>, Vec<u8>)> {
        (1usize..150).prop_flat_map(|n| (prop::collection::vec(0u8..4, n), prop::collection::vec(0u8..4, n)))
    }

    #[test]
    fn gray_table() {
        assert_eq!(v("0123").gray().bits(), vec![0, 0, 1, 1, 0, 1, 1, 0]);
        assert_eq!(v("0").gray().bits(), vec![0, 0]);
        assert_eq!(v("1").gray().bits(), vec![0, 1]);
        assert_eq!(v("2").gray().bits(), vec![1, 1]);
        assert_eq!(v("3").gray().bits(), vec![1, 0]);
        assert!(Z4Vector::zero(70).gray().is_zero());
        assert_eq!(Z4Vector::zero(70).gray().len(), 140);
    }

    #[test]
    fn lee_examples() {
        assert_eq!(v("123").lee_weight(), 4);
        assert_eq!(Z4Vector::zero(9).lee_weight(), 0);
        assert_eq!(lee_distance(&v("1"), &v("3")).unwrap(), 2);
        assert_eq!(lee_distance(&v("0213"), &v("0213")).unwrap(), 0);
        assert_eq!(lee_distance(&v("01"), &v("0")), Err(Z4Error::LengthMismatch(2, 1)));
    }

    #[test]
    fn lee_equals_gray_hamming_exhaustive() {
        for x in all_vectors(3) {
            let per_coord: u32 = x.digits().iter().map(|&d| lee_of(d)).sum();
            assert_eq!(x.lee_weight(), per_coord);
            assert_eq!(x.lee_weight(), x.gray().weight());
        }
    }

    #[test]
    fn isometry_exhaustive_small() {
        for n in 1..=3 {
            let all = all_vectors(n);
            for a in &all {
                for b in &all {
                    let d = lee_distance(a, b).unwrap();
                    assert_eq!(d, a.gray().xor(&b.gray()).weight());
                }
            }
        }
    }

    #[test]
    fn triangle_inequality_exhaustive() {
        let all = all_vectors(2);
        for a in &all {
            for b in &all {
                for c in &all {
                    let ab = lee_distance(a, b).unwrap();
                    let bc = lee_distance(b, c).unwrap();
                    let ac = lee_distance(a, c).unwrap();
                    assert!(ac <= ab + bc);
                }
            }
        }
    }

    #[test]
    fn text_round_trip_and_errors() {
        assert_eq!(v("0213").to_string(), "0213");
        assert_eq!("0214".parse::<Z4Vector>(), Err(Z4Error::BadDigit('4')));
        assert!(Z4Vector::from_digits(&[5]).is_err());
    }

    #[test]
    fn arithmetic_matches_digits() {
        let all = all_vectors(2);
        for a in &all {
            for b in &all {
                let sum = a.add(b).unwrap();
                let want: Vec<u8> = a.digits().iter().zip(b.digits()).map(|(x, y)| (x + y) % 4).collect();
                assert_eq!(sum.digits(), want);
                let dot: u32 = a.digits().iter().zip(b.digits()).map(|(&x, y)| u32::from(x) * u32::from(y)).sum();
                assert_eq!(u32::from(a.dot(b).unwrap()), dot % 4);
                let tp: Vec<u8> = a.digits().iter().zip(b.digits()).map(|(x, y)| (2 * x * y) % 4).collect();
                assert_eq!(a.twice_product(b).unwrap().digits(), tp);
            }
            for k in 0..4u8 {
                let want: Vec<u8> = a.digits().iter().map(|x| (x * k) % 4).collect();
                assert_eq!(a.scale(k).digits(), want);
            }
        }
    }

    #[test]
    fn concat_crosses_word_boundaries() {
        let left = BinaryVector::from_bits(&[1; 70]);
        let right = BinaryVector::from_bits(&[1, 0, 1]);
        let c = BinaryVector::concat(&left, &right);
        assert_eq!(c.len(), 73);
        assert_eq!(c.weight(), 72);
        assert_eq!(c.get(70), 1);
        assert_eq!(c.get(71), 0);
        assert_eq!(c.get(72), 1);
    }

    proptest! {
        #[test]
        fn gray_is_injective_isometry((a, b) in arb_pair()) {
            let u = Z4Vector::from_digits(&a).unwrap();
            let w = Z4Vector::from_digits(&b).unwrap();
            let d = lee_distance(&u, &w).unwrap();
            prop_assert_eq!(d, u.gray().xor(&w.gray()).weight());
            prop_assert_eq!(u == w, u.gray() == w.gray());
            prop_assert_eq!(d, lee_distance(&w, &u).unwrap());
        }

        #[test]
        fn decomposition_round_trip(a in prop::collection::vec(0u8..4, 0..200)) {
            let u = Z4Vector::from_digits(&a).unwrap();
            prop_assert_eq!(u.digits(), a.clone());
            let rebuilt = Z4Vector::from_planes(u.len(), u.residue().to_vec(), u.twos().to_vec());
            prop_assert_eq!(rebuilt, u.clone());
            for (i, &d) in a.iter().enumerate() {
                let b = (u.residue()[i / 64] >> (i % 64)) & 1;
                let c = (u.twos()[i / 64] >> (i % 64)) & 1;
                prop_assert_eq!(u64::from(d), b + 2 * c);
            }
        }
    }
}
