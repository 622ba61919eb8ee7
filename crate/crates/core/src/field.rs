//! Arithmetic in GF(2) and GF(4).
//!
//! GF(4) = {0, 1, ω, ω̄} with ω² = ω̄ and 1 + ω + ω̄ = 0. Elements are stored
//! as two bits `b1 b0`:
//!
//! | element | bits | symbol |
//! |---------|------|--------|
//! | 0       | 00   | `0`    |
//! | 1       | 01   | `1`    |
//! | ω       | 10   | `w`    |
//! | ω̄       | 11   | `W`    |
//!
//! so addition is XOR of the bit patterns. The same layout is used by the
//! packed vectors in [`crate::codes`], where bit `b0` of every coordinate
//! lives in one machine word and bit `b1` in another.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign};

use crate::error::Error;

/// Element of GF(2).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct F2(bool);

impl F2 {
    pub const ZERO: F2 = F2(false);
    pub const ONE: F2 = F2(true);

    pub const fn new(bit: bool) -> Self {
        F2(bit)
    }

    pub const fn bit(self) -> bool {
        self.0
    }

    pub const fn as_u8(self) -> u8 {
        self.0 as u8
    }
}

impl From<bool> for F2 {
    fn from(b: bool) -> Self {
        F2(b)
    }
}

#[allow(clippy::suspicious_arithmetic_impl)]
impl Add for F2 {
    type Output = F2;
    fn add(self, rhs: F2) -> F2 {
        F2(self.0 ^ rhs.0)
    }
}

#[allow(clippy::suspicious_op_assign_impl)]
impl AddAssign for F2 {
    fn add_assign(&mut self, rhs: F2) {
        self.0 ^= rhs.0;
    }
}

#[allow(clippy::suspicious_arithmetic_impl)]
impl Mul for F2 {
    type Output = F2;
    fn mul(self, rhs: F2) -> F2 {
        F2(self.0 & rhs.0)
    }
}

impl fmt::Display for F2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_u8())
    }
}

/// Element of GF(4).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct F4(u8);

// log table over the cyclic group <ω>: 1 = ω⁰, ω = ω¹, ω̄ = ω².
const LOG: [u8; 4] = [0, 0, 1, 2];
const EXP: [u8; 3] = [1, 2, 3];

impl F4 {
    pub const ZERO: F4 = F4(0);
    pub const ONE: F4 = F4(1);
    pub const OMEGA: F4 = F4(2);
    pub const OMEGA_BAR: F4 = F4(3);

    /// All four elements in bit order.
    pub const ALL: [F4; 4] = [F4::ZERO, F4::ONE, F4::OMEGA, F4::OMEGA_BAR];
    /// The three nonzero elements, in class order 1, ω, ω̄.
    pub const NONZERO: [F4; 3] = [F4::ONE, F4::OMEGA, F4::OMEGA_BAR];

    /// Builds an element from its 2-bit encoding (higher bits are ignored).
    pub const fn from_bits(bits: u8) -> Self {
        F4(bits & 0b11)
    }

    pub const fn bits(self) -> u8 {
        self.0
    }

    /// Low bit `b0` (the coefficient of 1 in the basis {1, ω}).
    pub const fn lo(self) -> bool {
        self.0 & 1 != 0
    }

    /// High bit `b1` (the coefficient of ω in the basis {1, ω}).
    pub const fn hi(self) -> bool {
        self.0 & 2 != 0
    }

    pub const fn is_zero(self) -> bool {
        self.0 == 0
    }

    /// True for 0 and 1, the image of GF(2).
    pub const fn is_binary(self) -> bool {
        self.0 < 2
    }

    pub fn inv(self) -> Option<F4> {
        if self.is_zero() {
            None
        } else {
            Some(F4(EXP[((3 - LOG[self.0 as usize]) % 3) as usize]))
        }
    }

    /// Frobenius conjugate, equal to the square.
    pub const fn conj(self) -> F4 {
        // 1 and 0 are fixed, ω and ω̄ swap: flip b0 whenever b1 is set
        F4(self.0 ^ (self.0 >> 1))
    }

    /// Trace to GF(2): `Tr(x) = x + x²`. It is the high bit of the encoding.
    pub const fn trace(self) -> F2 {
        F2(self.hi())
    }

    pub const fn symbol(self) -> char {
        match self.0 {
            0 => '0',
            1 => '1',
            2 => 'w',
            _ => 'W',
        }
    }

    pub fn from_symbol(c: char) -> Result<F4, Error> {
        match c {
            '0' => Ok(F4::ZERO),
            '1' => Ok(F4::ONE),
            'w' => Ok(F4::OMEGA),
            'W' => Ok(F4::OMEGA_BAR),
            other => Err(Error::Parse(format!("unknown GF(4) symbol {other:?}"))),
        }
    }
}

impl From<F2> for F4 {
    fn from(b: F2) -> Self {
        F4(b.as_u8())
    }
}

#[allow(clippy::suspicious_arithmetic_impl)]
impl Add for F4 {
    type Output = F4;
    fn add(self, rhs: F4) -> F4 {
        F4(self.0 ^ rhs.0)
    }
}

#[allow(clippy::suspicious_op_assign_impl)]
impl AddAssign for F4 {
    fn add_assign(&mut self, rhs: F4) {
        self.0 ^= rhs.0;
    }
}

impl Mul for F4 {
    type Output = F4;
    fn mul(self, rhs: F4) -> F4 {
        if self.0 == 0 || rhs.0 == 0 {
            return F4::ZERO;
        }
        let e = (LOG[self.0 as usize] + LOG[rhs.0 as usize]) % 3;
        F4(EXP[e as usize])
    }
}

impl MulAssign for F4 {
    fn mul_assign(&mut self, rhs: F4) {
        *self = *self * rhs;
    }
}

impl fmt::Display for F4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

pub fn f4_add(a: F4, b: F4) -> F4 {
    a + b
}

pub fn f4_mul(a: F4, b: F4) -> F4 {
    a * b
}

pub fn f4_conj(a: F4) -> F4 {
    a.conj()
}

pub fn f4_trace(a: F4) -> F2 {
    a.trace()
}
