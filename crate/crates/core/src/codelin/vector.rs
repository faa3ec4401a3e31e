use std::fmt;

use crate::error::{Error, Result};
use crate::gf2e::FieldSpec;

/// A vector in F_q^n stored as `s` packed bit-planes.
///
/// Plane `p` holds bit `p` of every coordinate, 64 coordinates per word, so
/// addition is a word-wise XOR and the Hamming weight is the popcount of the
/// OR of all planes.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Codeword {
    spec: FieldSpec,
    n: usize,
    words: Vec<u64>,
}

#[inline]
pub(crate) fn words_per_plane(n: usize) -> usize {
    n.div_ceil(64).max(1)
}

impl Codeword {
    pub fn zeros(spec: FieldSpec, n: usize) -> Self {
        Codeword { spec, n, words: vec![0; spec.s() as usize * words_per_plane(n)] }
    }

    pub fn from_values(spec: FieldSpec, values: &[u32]) -> Result<Self> {
        let mut v = Codeword::zeros(spec, values.len());
        for (i, &x) in values.iter().enumerate() {
            if !spec.contains(x) {
                return Err(Error::ElementOutOfRange { value: x, s: spec.s() });
            }
            v.set(i, x);
        }
        Ok(v)
    }

    /// Binary vector from 0/1 values; anything nonzero counts as 1.
    pub fn from_bits(bits: &[u8]) -> Self {
        let mut v = Codeword::zeros(FieldSpec::binary(), bits.len());
        for (i, &b) in bits.iter().enumerate() {
            if b != 0 {
                v.set(i, 1);
            }
        }
        v
    }

    pub fn ones(spec: FieldSpec, n: usize) -> Self {
        let mut v = Codeword::zeros(spec, n);
        for i in 0..n {
            v.set(i, 1);
        }
        v
    }

    pub fn spec(&self) -> FieldSpec {
        self.spec
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    #[inline]
    fn wpp(&self) -> usize {
        words_per_plane(self.n)
    }

    #[inline]
    pub(crate) fn plane(&self, p: usize) -> &[u64] {
        let w = self.wpp();
        &self.words[p * w..(p + 1) * w]
    }

    #[inline]
    fn plane_mut(&mut self, p: usize) -> &mut [u64] {
        let w = self.wpp();
        &mut self.words[p * w..(p + 1) * w]
    }

    #[inline]
    pub fn get(&self, i: usize) -> u32 {
        debug_assert!(i < self.n);
        let w = self.wpp();
        let (word, bit) = (i / 64, i % 64);
        let mut v = 0;
        for p in 0..self.spec.s() as usize {
            v |= ((self.words[p * w + word] >> bit & 1) as u32) << p;
        }
        v
    }

    pub fn set(&mut self, i: usize, value: u32) {
        debug_assert!(i < self.n && self.spec.contains(value));
        let w = self.wpp();
        let (word, bit) = (i / 64, i % 64);
        for p in 0..self.spec.s() as usize {
            let slot = &mut self.words[p * w + word];
            *slot = (*slot & !(1 << bit)) | (((value >> p) & 1) as u64) << bit;
        }
    }

    pub fn values(&self) -> Vec<u32> {
        (0..self.n).map(|i| self.get(i)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Support as a packed bit mask.
    pub fn support_mask(&self) -> Vec<u64> {
        let w = self.wpp();
        let mut mask = vec![0u64; w];
        for p in 0..self.spec.s() as usize {
            for (m, x) in mask.iter_mut().zip(self.plane(p)) {
                *m |= x;
            }
        }
        mask
    }

    pub fn support(&self) -> Vec<usize> {
        (0..self.n).filter(|&i| self.get(i) != 0).collect()
    }

    #[inline]
    pub fn weight(&self) -> usize {
        let w = self.wpp();
        let s = self.spec.s() as usize;
        (0..w)
            .map(|j| (0..s).fold(0u64, |acc, p| acc | self.words[p * w + j]).count_ones() as usize)
            .sum()
    }

    fn check(&self, other: &Codeword) -> Result<()> {
        if self.spec != other.spec {
            return Err(Error::FieldMismatch(self.spec.s(), other.spec.s()));
        }
        if self.n != other.n {
            return Err(Error::LengthMismatch { expected: self.n, found: other.n });
        }
        Ok(())
    }

    #[inline]
    pub(crate) fn xor_assign(&mut self, other: &Codeword) {
        debug_assert!(self.spec == other.spec && self.n == other.n);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn add(&self, other: &Codeword) -> Result<Codeword> {
        self.check(other)?;
        let mut out = self.clone();
        out.xor_assign(other);
        Ok(out)
    }

    /// Applies the F_2-linear map whose image of basis element `a^j` is `images[j]`.
    fn map_planes(&self, images: &[u32]) -> Codeword {
        let s = self.spec.s() as usize;
        let mut out = Codeword::zeros(self.spec, self.n);
        for (j, &img) in images.iter().enumerate() {
            for i in 0..s {
                if img >> i & 1 == 1 {
                    for (d, x) in out.plane_mut(i).iter_mut().zip(self.plane(j)) {
                        *d ^= x;
                    }
                }
            }
        }
        out
    }

    /// `c * self`.
    pub fn scale(&self, c: u32) -> Codeword {
        match c {
            0 => Codeword::zeros(self.spec, self.n),
            1 => self.clone(),
            _ => {
                let images: Vec<u32> =
                    (0..self.spec.s()).map(|j| self.spec.mul(c, 1 << j)).collect();
                self.map_planes(&images)
            }
        }
    }

    /// Componentwise Frobenius `x -> x^2`.
    pub fn frobenius(&self) -> Codeword {
        let images: Vec<u32> = (0..self.spec.s()).map(|j| self.spec.alpha_pow(2 * j)).collect();
        self.map_planes(&images)
    }

    /// Componentwise (star / Schur) product.
    pub fn star(&self, other: &Codeword) -> Result<Codeword> {
        self.check(other)?;
        Ok(self.star_unchecked(other))
    }

    pub(crate) fn star_unchecked(&self, other: &Codeword) -> Codeword {
        let s = self.spec.s() as usize;
        let w = self.wpp();
        let mut out = Codeword::zeros(self.spec, self.n);
        if s == 1 {
            for (d, (a, b)) in out.words.iter_mut().zip(self.words.iter().zip(&other.words)) {
                *d = a & b;
            }
            return out;
        }
        let reductions: Vec<u32> = (0..(2 * s - 1) as u32).map(|t| self.spec.alpha_pow(t)).collect();
        let mut prod = vec![0u64; w];
        for i in 0..s {
            for j in 0..s {
                let red = reductions[i + j];
                for (k, x) in prod.iter_mut().enumerate() {
                    *x = self.words[i * w + k] & other.words[j * w + k];
                }
                if prod.iter().all(|&x| x == 0) {
                    continue;
                }
                for l in 0..s {
                    if red >> l & 1 == 1 {
                        for (k, x) in prod.iter().enumerate() {
                            out.words[l * w + k] ^= x;
                        }
                    }
                }
            }
        }
        out
    }

    /// Standard bilinear form `sum_i a_i b_i`.
    pub fn inner(&self, other: &Codeword) -> Result<u32> {
        self.check(other)?;
        Ok(self.inner_unchecked(other))
    }

    pub(crate) fn inner_unchecked(&self, other: &Codeword) -> u32 {
        let prod = self.star_unchecked(other);
        let mut v = 0;
        for p in 0..self.spec.s() as usize {
            let parity = prod.plane(p).iter().map(|x| x.count_ones()).sum::<u32>() & 1;
            v |= parity << p;
        }
        v
    }

    /// Sum of all coordinates.
    pub fn coordinate_sum(&self) -> u32 {
        let mut v = 0;
        for p in 0..self.spec.s() as usize {
            let parity = self.plane(p).iter().map(|x| x.count_ones()).sum::<u32>() & 1;
            v |= parity << p;
        }
        v
    }

    /// Componentwise absolute trace, as a binary vector.
    pub fn trace(&self) -> Codeword {
        let mut out = Codeword::zeros(FieldSpec::binary(), self.n);
        for j in 0..self.spec.s() {
            if self.spec.trace(self.spec.alpha_pow(j)) == 1 {
                let src = self.plane(j as usize);
                for (d, x) in out.words.iter_mut().zip(src) {
                    *d ^= x;
                }
            }
        }
        out
    }

    pub fn is_binary(&self) -> bool {
        let w = self.wpp();
        self.words[w..].iter().all(|&x| x == 0)
    }

    /// The vector as an element of F_2^n, if all coordinates lie in F_2.
    pub fn to_binary(&self) -> Option<Codeword> {
        if !self.is_binary() {
            return None;
        }
        let w = self.wpp();
        Some(Codeword { spec: FieldSpec::binary(), n: self.n, words: self.words[..w].to_vec() })
    }

    /// Embeds a binary vector into F_q^n.
    pub fn embed(&self, spec: FieldSpec) -> Result<Codeword> {
        if !self.spec.is_binary() {
            return Err(Error::NotBinary(self.spec.s()));
        }
        let mut out = Codeword::zeros(spec, self.n);
        let w = self.wpp();
        out.words[..w].copy_from_slice(&self.words);
        Ok(out)
    }

    /// Restriction to the given coordinates, in the given order.
    pub fn project(&self, cols: &[usize]) -> Codeword {
        let mut out = Codeword::zeros(self.spec, cols.len());
        for (dst, &src) in cols.iter().enumerate() {
            out.set(dst, self.get(src));
        }
        out
    }

    /// Concatenation `(self | other)`.
    pub fn concat(&self, other: &Codeword) -> Result<Codeword> {
        if self.spec != other.spec {
            return Err(Error::FieldMismatch(self.spec.s(), other.spec.s()));
        }
        let mut out = Codeword::zeros(self.spec, self.n + other.n);
        for i in 0..self.n {
            out.set(i, self.get(i));
        }
        for i in 0..other.n {
            out.set(self.n + i, other.get(i));
        }
        Ok(out)
    }

    /// Lexicographic order on coordinate values, first coordinate most significant.
    pub fn lex_cmp(&self, other: &Codeword) -> std::cmp::Ordering {
        (0..self.n).map(|i| self.get(i)).cmp((0..other.n).map(|i| other.get(i)))
    }
}

impl fmt::Debug for Codeword {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{:?}", self.spec, self.values())
    }
}

impl fmt::Display for Codeword {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.values().iter().map(|&v| self.spec.render(v)).collect();
        write!(f, "({})", parts.join(", "))
    }
}
