//! Arithmetic in the binary fields F_{2^k} for 1 ≤ k ≤ 8.
//!
//! Elements are stored bit-packed in the power basis 1, t, …, t^{k-1} of a
//! fixed irreducible modulus per degree, so that coordinates of points quoted
//! elsewhere (for instance over F_16 = F_2(t) with t^4 + t + 1 = 0) always
//! mean the same bit patterns.

use alloc::format;
use alloc::string::String;
use core::fmt;

/// Fixed modulus table, index k = 1..8. Bit i is the coefficient of t^i.
///
/// k=2: t²+t+1, k=3: t³+t+1, k=4: t⁴+t+1, k=5: t⁵+t²+1, k=6: t⁶+t+1,
/// k=7: t⁷+t+1, k=8: t⁸+t⁴+t³+t+1. Each is checked irreducible at
/// construction time.
const MODULI: [u16; 9] = [
    0, 0b10, 0b111, 0b1011, 0b1_0011, 0b10_0101, 0b100_0011, 0b1000_0011, 0b1_0001_1011,
];

/// Errors from field construction and arithmetic.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldError {
    /// Extension degree outside 1..=8.
    BadDegree(u8),
    /// Operands belong to different fields.
    FieldMismatch,
    /// Inversion of zero.
    ZeroInversion,
    /// Bit pattern not reduced modulo the field size.
    BitsOutOfRange,
}

impl fmt::Display for FieldError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldError::BadDegree(k) => write!(f, "extension degree {} not in 1..=8", k),
            FieldError::FieldMismatch => write!(f, "operands lie in different fields"),
            FieldError::ZeroInversion => write!(f, "inversion of zero"),
            FieldError::BitsOutOfRange => write!(f, "bit pattern exceeds field size"),
        }
    }
}

/// A field F_{2^k} with its fixed irreducible modulus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FieldDesc {
    k: u8,
    modulus: u16,
}

impl FieldDesc {
    /// The field F_{2^k} with the fixed modulus for that degree.
    pub fn new(k: u8) -> Result<FieldDesc, FieldError> {
        if !(1..=8).contains(&k) {
            return Err(FieldError::BadDegree(k));
        }
        let modulus = MODULI[k as usize];
        debug_assert!(is_irreducible(modulus, k));
        Ok(FieldDesc { k, modulus })
    }

    pub fn degree(&self) -> u8 {
        self.k
    }

    /// Number of field elements, 2^k.
    pub fn order(&self) -> u16 {
        1 << self.k
    }

    pub fn modulus(&self) -> u16 {
        self.modulus
    }

    pub fn zero(&self) -> FieldElem {
        FieldElem { bits: 0, field: *self }
    }

    pub fn one(&self) -> FieldElem {
        FieldElem { bits: 1, field: *self }
    }

    /// The generator t of the power basis (equals 1 when k = 1).
    pub fn gen(&self) -> FieldElem {
        let bits = if self.k == 1 { 1 } else { 0b10 };
        FieldElem { bits, field: *self }
    }

    pub fn elem(&self, bits: u8) -> Result<FieldElem, FieldError> {
        if (bits as u16) >= self.order() {
            return Err(FieldError::BitsOutOfRange);
        }
        Ok(FieldElem { bits, field: *self })
    }

    /// All elements of the field in bit order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElem> + '_ {
        (0..self.order()).map(move |b| FieldElem { bits: b as u8, field: *self })
    }

    /// Carry-less product of bit patterns reduced by the modulus.
    ///
    /// Raw-bits entry point for inner loops that have already checked the
    /// operands live in this field.
    #[inline]
    pub fn mul_bits(&self, a: u8, b: u8) -> u8 {
        let mut acc: u16 = 0;
        let mut a = a as u16;
        let mut b = b as u16;
        while b != 0 {
            if b & 1 != 0 {
                acc ^= a;
            }
            a <<= 1;
            if a & self.order() != 0 {
                a ^= self.modulus;
            }
            b >>= 1;
        }
        acc as u8
    }

    #[inline]
    pub fn pow_bits(&self, a: u8, mut e: u32) -> u8 {
        let mut base = a;
        let mut acc = 1u8;
        while e != 0 {
            if e & 1 != 0 {
                acc = self.mul_bits(acc, base);
            }
            base = self.mul_bits(base, base);
            e >>= 1;
        }
        acc
    }
}

/// An element of F_{2^k}, bits in the power basis 1, t, …, t^{k-1}.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FieldElem {
    bits: u8,
    field: FieldDesc,
}

impl FieldElem {
    pub fn bits(&self) -> u8 {
        self.bits
    }

    pub fn field(&self) -> FieldDesc {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.bits == 0
    }

    /// Sum; XOR of representations.
    pub fn add(&self, rhs: &FieldElem) -> Result<FieldElem, FieldError> {
        if self.field != rhs.field {
            return Err(FieldError::FieldMismatch);
        }
        Ok(FieldElem { bits: self.bits ^ rhs.bits, field: self.field })
    }

    /// Carry-less polynomial product reduced mod the modulus.
    pub fn mul(&self, rhs: &FieldElem) -> Result<FieldElem, FieldError> {
        if self.field != rhs.field {
            return Err(FieldError::FieldMismatch);
        }
        Ok(FieldElem { bits: self.field.mul_bits(self.bits, rhs.bits), field: self.field })
    }

    /// Multiplicative inverse by exponentiation to 2^k - 2.
    pub fn inv(&self) -> Result<FieldElem, FieldError> {
        if self.bits == 0 {
            return Err(FieldError::ZeroInversion);
        }
        let e = (self.field.order() as u32) - 2;
        Ok(FieldElem { bits: self.field.pow_bits(self.bits, e), field: self.field })
    }

    /// The squaring map a ↦ a²; applying it k times is the identity.
    pub fn frobenius(&self) -> FieldElem {
        FieldElem { bits: self.field.mul_bits(self.bits, self.bits), field: self.field }
    }

    /// Serialized form, lowercase hex with a field tag: t³+t+1 in F_16 is `F16:0b`.
    pub fn render(&self) -> String {
        format!("F{}:{:02x}", self.field.order(), self.bits)
    }

    /// Parse the `F{q}:{hex}` serialization.
    pub fn parse(s: &str) -> Result<FieldElem, FieldError> {
        let rest = s.strip_prefix('F').ok_or(FieldError::BitsOutOfRange)?;
        let (q, hx) = rest.split_once(':').ok_or(FieldError::BitsOutOfRange)?;
        let q: u16 = q.parse().map_err(|_| FieldError::BitsOutOfRange)?;
        if !q.is_power_of_two() || q < 2 {
            return Err(FieldError::BadDegree(0));
        }
        let field = FieldDesc::new(q.trailing_zeros() as u8)?;
        let bits = u8::from_str_radix(hx, 16).map_err(|_| FieldError::BitsOutOfRange)?;
        field.elem(bits)
    }
}

/// Trial division by every polynomial of degree 1..=k/2.
fn is_irreducible(p: u16, k: u8) -> bool {
    for d in 1..=(k / 2).max(if k == 1 { 0 } else { 1 }) {
        for q in (1u16 << d)..(1u16 << (d + 1)) {
            if poly_rem(p, q) == 0 {
                return false;
            }
        }
    }
    k >= 1
}

/// Remainder of carry-less division of a by b over F_2.
fn poly_rem(mut a: u16, b: u16) -> u16 {
    let db = 15 - b.leading_zeros();
    while a != 0 {
        let da = 15 - a.leading_zeros();
        if da < db {
            break;
        }
        a ^= b << (da - db);
    }
    a
}
