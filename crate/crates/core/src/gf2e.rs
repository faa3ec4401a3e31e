//! Arithmetic in the binary extension fields F_(2^s), 1 <= s <= 16.
//!
//! Elements are encoded as integers in `[0, 2^s)`: bit `i` is the coefficient
//! of `a^i` in the polynomial basis over the defining polynomial. Addition is
//! XOR, multiplication is a carry-less product reduced by the defining
//! polynomial.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const MAX_DEGREE: u32 = 16;

/// Irreducible polynomials used when the caller does not pick one.
/// Degrees 2..=4 are the ones used for the worked F_4, F_8 and F_16 examples.
const DEFAULT_POLYS: [u32; 17] = [
    0, 0b11, 0b111, 0b1011, 0b10011, 0x25, 0x43, 0x83, 0x11d, 0x211, 0x409, 0x805, 0x1053,
    0x201b, 0x4443, 0x8003, 0x1100b,
];

/// The field F_(2^s) given by an irreducible polynomial over F_2.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "FieldJson", into = "FieldJson")]
pub struct FieldSpec {
    s: u32,
    poly: u32,
}

#[derive(Serialize, Deserialize)]
struct FieldJson {
    s: u32,
    primitive_poly: u32,
}

impl TryFrom<FieldJson> for FieldSpec {
    type Error = Error;
    fn try_from(j: FieldJson) -> Result<Self> {
        FieldSpec::new(j.s, j.primitive_poly)
    }
}

impl From<FieldSpec> for FieldJson {
    fn from(f: FieldSpec) -> Self {
        FieldJson { s: f.s, primitive_poly: f.poly }
    }
}

impl FieldSpec {
    /// Builds F_(2^s) from `poly` (bit `i` = coefficient of `x^i`), checking
    /// degree and irreducibility.
    pub fn new(s: u32, poly: u32) -> Result<Self> {
        if s == 0 || s > MAX_DEGREE {
            return Err(Error::UnsupportedDegree(s));
        }
        if poly_degree(poly as u64) != Some(s) {
            return Err(Error::WrongDegree { s, poly });
        }
        if !is_irreducible(poly as u64) {
            return Err(Error::Reducible(poly));
        }
        Ok(FieldSpec { s, poly })
    }

    /// F_(2^s) with the crate's default defining polynomial.
    pub fn with_degree(s: u32) -> Result<Self> {
        if s == 0 || s > MAX_DEGREE {
            return Err(Error::UnsupportedDegree(s));
        }
        FieldSpec::new(s, DEFAULT_POLYS[s as usize])
    }

    /// F_2, defined by `x + 1` so that `a = 1`.
    pub const fn binary() -> Self {
        FieldSpec { s: 1, poly: 0b11 }
    }

    pub fn s(&self) -> u32 {
        self.s
    }

    pub fn poly(&self) -> u32 {
        self.poly
    }

    /// Field size `2^s`.
    pub fn q(&self) -> u32 {
        1 << self.s
    }

    pub fn is_binary(&self) -> bool {
        self.s == 1
    }

    pub fn contains(&self, value: u32) -> bool {
        value < self.q()
    }

    pub fn element(&self, value: u32) -> Result<FieldElement> {
        if !self.contains(value) {
            return Err(Error::ElementOutOfRange { value, s: self.s });
        }
        Ok(FieldElement { value, spec: *self })
    }

    /// All `2^s` elements in increasing encoding order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.q()).map(move |value| FieldElement { value, spec: *self })
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        a ^ b
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        reduce(clmul(a as u64, b as u64), self.poly as u64, self.s)
    }

    pub fn pow(&self, mut base: u32, mut exp: u64) -> u32 {
        let mut acc = 1;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Multiplicative inverse as `a^(q-2)`.
    pub fn inv(&self, a: u32) -> Result<u32> {
        if a == 0 {
            return Err(Error::ZeroInverse);
        }
        Ok(self.pow(a, self.q() as u64 - 2))
    }

    /// Absolute trace `a + a^2 + ... + a^(2^(s-1))`, always 0 or 1.
    pub fn trace(&self, a: u32) -> u32 {
        let mut acc = 0;
        let mut x = a;
        for _ in 0..self.s {
            acc ^= x;
            x = self.mul(x, x);
        }
        debug_assert!(acc <= 1);
        acc
    }

    /// `a^t` reduced into the polynomial basis.
    pub fn alpha_pow(&self, t: u32) -> u32 {
        let mut x: u64 = 1;
        for _ in 0..t {
            x <<= 1;
            if x >> self.s & 1 == 1 {
                x ^= self.poly as u64;
            }
        }
        x as u32
    }

    /// Renders `value` as a polynomial in `a`, e.g. `a^2+a+1`.
    pub fn render(&self, value: u32) -> String {
        if value == 0 {
            return "0".to_string();
        }
        let mut terms = Vec::new();
        for i in (0..self.s).rev() {
            if value >> i & 1 == 1 {
                terms.push(match i {
                    0 => "1".to_string(),
                    1 => "a".to_string(),
                    _ => format!("a^{i}"),
                });
            }
        }
        terms.join("+")
    }
}

impl Default for FieldSpec {
    fn default() -> Self {
        FieldSpec::binary()
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}", self.q())
    }
}

/// All elements of `spec`, in increasing encoding order.
pub fn enumerate_field(spec: &FieldSpec) -> Vec<FieldElement> {
    spec.elements().collect()
}

/// An element of a specific field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FieldElement {
    value: u32,
    spec: FieldSpec,
}

impl FieldElement {
    pub fn value(&self) -> u32 {
        self.value
    }

    pub fn spec(&self) -> FieldSpec {
        self.spec
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    fn same_field(&self, other: &FieldElement) -> Result<()> {
        if self.spec != other.spec {
            return Err(Error::FieldMismatch(self.spec.s, other.spec.s));
        }
        Ok(())
    }

    pub fn add(&self, other: &FieldElement) -> Result<FieldElement> {
        self.same_field(other)?;
        Ok(FieldElement { value: self.value ^ other.value, spec: self.spec })
    }

    pub fn mul(&self, other: &FieldElement) -> Result<FieldElement> {
        self.same_field(other)?;
        Ok(FieldElement { value: self.spec.mul(self.value, other.value), spec: self.spec })
    }

    pub fn inv(&self) -> Result<FieldElement> {
        Ok(FieldElement { value: self.spec.inv(self.value)?, spec: self.spec })
    }

    pub fn pow(&self, exp: u64) -> FieldElement {
        FieldElement { value: self.spec.pow(self.value, exp), spec: self.spec }
    }

    pub fn trace(&self) -> u32 {
        self.spec.trace(self.value)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.spec.render(self.value))
    }
}

/// Carry-less product of two binary polynomials.
#[inline]
pub(crate) fn clmul(a: u64, b: u64) -> u64 {
    let mut acc = 0;
    let mut b = b;
    let mut i = 0;
    while b != 0 {
        if b & 1 == 1 {
            acc ^= a << i;
        }
        b >>= 1;
        i += 1;
    }
    acc
}

#[inline]
fn reduce(mut x: u64, poly: u64, s: u32) -> u32 {
    while x >> s != 0 {
        let top = 63 - x.leading_zeros();
        x ^= poly << (top - s);
    }
    x as u32
}

pub(crate) fn poly_degree(p: u64) -> Option<u32> {
    if p == 0 {
        None
    } else {
        Some(63 - p.leading_zeros())
    }
}

/// Remainder of binary polynomial division.
pub(crate) fn poly_rem(mut a: u64, m: u64) -> u64 {
    let dm = poly_degree(m).expect("division by zero polynomial");
    while let Some(da) = poly_degree(a) {
        if da < dm {
            break;
        }
        a ^= m << (da - dm);
    }
    a
}

/// Trial division by every binary polynomial of degree `1..=deg/2`.
pub(crate) fn is_irreducible(p: u64) -> bool {
    let Some(d) = poly_degree(p) else { return false };
    if d == 0 {
        return false;
    }
    for deg in 1..=d / 2 {
        for low in 0..(1u64 << deg) {
            let divisor = (1u64 << deg) | low;
            if poly_rem(p, divisor) == 0 {
                return false;
            }
        }
    }
    true
}
