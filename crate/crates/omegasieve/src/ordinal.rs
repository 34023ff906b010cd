//! Exact ordinal arithmetic below epsilon-zero, in Cantor normal form.
//!
//! An [`Ordinal`] is a strictly decreasing sum of omega-power terms with
//! positive integer coefficients. Every stage index used by the engine is
//! one of these values; the representation is closed under the operations
//! provided here, so no approximation ever enters a stage computation.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

/// One term of a Cantor normal form: `w^exponent * coefficient`.
#[derive(Debug, Clone, PartialEq, Eq)]
struct Term {
    exponent: Ordinal,
    coefficient: BigUint,
}

/// An ordinal below epsilon-zero in Cantor normal form.
///
/// Invariants: exponents strictly decrease along the term list, every
/// coefficient is at least 1, and each exponent is itself canonical.
/// The empty term list denotes 0. All constructors preserve canonicity,
/// so structural equality coincides with ordinal equality.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Ordinal {
    terms: Vec<Term>,
}

/// Classification of an ordinal by how its stage is reached.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OrdinalClass {
    Zero,
    /// Carries the unique immediate predecessor.
    Successor(Ordinal),
    Limit,
}

/// Syntax error produced by [`Ordinal::parse`], with a byte position.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("syntax error at byte {position}: {message}")]
pub struct OrdinalParseError {
    pub position: usize,
    pub message: String,
}

impl Ordinal {
    /// The ordinal 0.
    pub fn zero() -> Ordinal {
        Ordinal { terms: Vec::new() }
    }

    /// The ordinal 1.
    pub fn one() -> Ordinal {
        Ordinal::from_nat(1)
    }

    /// The least infinite ordinal.
    pub fn omega() -> Ordinal {
        Ordinal::omega_power(&Ordinal::one())
    }

    /// The finite ordinal `n`.
    pub fn from_nat(n: u64) -> Ordinal {
        Ordinal::from_biguint(BigUint::from(n))
    }

    fn from_biguint(n: BigUint) -> Ordinal {
        if n.is_zero() {
            Ordinal::zero()
        } else {
            Ordinal {
                terms: vec![Term {
                    exponent: Ordinal::zero(),
                    coefficient: n,
                }],
            }
        }
    }

    /// `w^exponent` as a single-term value.
    pub fn omega_power(exponent: &Ordinal) -> Ordinal {
        Ordinal {
            terms: vec![Term {
                exponent: exponent.clone(),
                coefficient: BigUint::one(),
            }],
        }
    }

    fn power_term(exponent: Ordinal, coefficient: BigUint) -> Ordinal {
        if coefficient.is_zero() {
            Ordinal::zero()
        } else {
            Ordinal {
                terms: vec![Term {
                    exponent,
                    coefficient,
                }],
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// True iff the value is below omega.
    pub fn is_finite(&self) -> bool {
        match self.terms.as_slice() {
            [] => true,
            [t] => t.exponent.is_zero(),
            _ => false,
        }
    }

    /// The value as a natural, when finite and small enough to fit.
    pub fn to_u64(&self) -> Option<u64> {
        match self.terms.as_slice() {
            [] => Some(0),
            [t] if t.exponent.is_zero() => t.coefficient.to_u64(),
            _ => None,
        }
    }

    /// The successor `self + 1`.
    pub fn succ(&self) -> Ordinal {
        self.add(&Ordinal::one())
    }

    /// Ordinal addition. Not commutative: terms of `self` below the leading
    /// exponent of `rhs` are absorbed (`1 + w == w`).
    pub fn add(&self, rhs: &Ordinal) -> Ordinal {
        let Some(lead) = rhs.terms.first() else {
            return self.clone();
        };
        let mut terms: Vec<Term> = Vec::with_capacity(self.terms.len() + rhs.terms.len());
        let mut it = self.terms.iter();
        let mut merged_lead = lead.coefficient.clone();
        for t in it.by_ref() {
            match t.exponent.cmp(&lead.exponent) {
                Ordering::Greater => terms.push(t.clone()),
                Ordering::Equal => {
                    merged_lead += &t.coefficient;
                    break;
                }
                Ordering::Less => break,
            }
        }
        terms.push(Term {
            exponent: lead.exponent.clone(),
            coefficient: merged_lead,
        });
        terms.extend(rhs.terms[1..].iter().cloned());
        Ordinal { terms }
    }

    /// Ordinal multiplication. Left-distributes over addition in the second
    /// argument; a finite left factor is absorbed by an infinite right one
    /// (`2 * w == w`).
    pub fn mul(&self, rhs: &Ordinal) -> Ordinal {
        if self.is_zero() || rhs.is_zero() {
            return Ordinal::zero();
        }
        let mut acc = Ordinal::zero();
        for t in &rhs.terms {
            let part = if t.exponent.is_zero() {
                // Finite factor: scale the leading coefficient, keep the tail.
                let mut terms = self.terms.clone();
                terms[0].coefficient = &terms[0].coefficient * &t.coefficient;
                Ordinal { terms }
            } else {
                Ordinal::power_term(
                    self.terms[0].exponent.add(&t.exponent),
                    t.coefficient.clone(),
                )
            };
            acc = acc.add(&part);
        }
        acc
    }

    /// Zero, successor (with predecessor), or limit.
    pub fn classify(&self) -> OrdinalClass {
        let Some(last) = self.terms.last() else {
            return OrdinalClass::Zero;
        };
        if !last.exponent.is_zero() {
            return OrdinalClass::Limit;
        }
        let mut terms = self.terms.clone();
        let constant = terms.last_mut().expect("nonempty");
        constant.coefficient -= BigUint::one();
        if constant.coefficient.is_zero() {
            terms.pop();
        }
        OrdinalClass::Successor(Ordinal { terms })
    }

    /// Parses the ordinal grammar; non-canonical spellings are normalized
    /// (`"1+w"` denotes `w`). See the module docs of [`crate`] for the
    /// grammar accepted everywhere an ordinal flag appears.
    pub fn parse(text: &str) -> Result<Ordinal, OrdinalParseError> {
        let mut parser = Parser {
            bytes: text.as_bytes(),
            pos: 0,
        };
        let value = parser.expr()?;
        parser.skip_ws();
        if parser.pos != parser.bytes.len() {
            return Err(parser.error("unexpected trailing input"));
        }
        Ok(value)
    }
}

impl Ord for Ordinal {
    fn cmp(&self, other: &Self) -> Ordering {
        for (a, b) in self.terms.iter().zip(&other.terms) {
            match a.exponent.cmp(&b.exponent) {
                Ordering::Equal => {}
                ord => return ord,
            }
            match a.coefficient.cmp(&b.coefficient) {
                Ordering::Equal => {}
                ord => return ord,
            }
        }
        // Equal prefix: the longer form carries extra positive terms.
        self.terms.len().cmp(&other.terms.len())
    }
}

impl PartialOrd for Ordinal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl From<u64> for Ordinal {
    fn from(n: u64) -> Ordinal {
        Ordinal::from_nat(n)
    }
}

impl FromStr for Ordinal {
    type Err = OrdinalParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ordinal::parse(s)
    }
}

impl fmt::Display for Ordinal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, t) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, "+")?;
            }
            if t.exponent.is_zero() {
                write!(f, "{}", t.coefficient)?;
                continue;
            }
            if t.exponent == Ordinal::one() {
                write!(f, "w")?;
            } else if t.exponent.is_finite() || t.exponent == Ordinal::omega() {
                // Bare exponents reparse unambiguously; anything else needs parens.
                write!(f, "w^{}", t.exponent)?;
            } else {
                write!(f, "w^({})", t.exponent)?;
            }
            if !t.coefficient.is_one() {
                write!(f, "*{}", t.coefficient)?;
            }
        }
        Ok(())
    }
}

impl Serialize for Ordinal {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Ordinal {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        Ordinal::parse(&text).map_err(D::Error::custom)
    }
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, message: &str) -> OrdinalParseError {
        OrdinalParseError {
            position: self.pos,
            message: message.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self
            .bytes
            .get(self.pos)
            .is_some_and(u8::is_ascii_whitespace)
        {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn eat(&mut self, byte: u8) -> bool {
        if self.peek() == Some(byte) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn nat(&mut self) -> Result<BigUint, OrdinalParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.bytes.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.error("expected a number"));
        }
        let digits = std::str::from_utf8(&self.bytes[start..self.pos]).expect("ascii digits");
        Ok(digits.parse().expect("digit run parses"))
    }

    // atom := nat | 'w' | '(' expr ')'
    fn atom(&mut self) -> Result<Ordinal, OrdinalParseError> {
        match self.peek() {
            Some(b'w') => {
                self.pos += 1;
                Ok(Ordinal::omega())
            }
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(b')') {
                    return Err(self.error("expected ')'"));
                }
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => Ok(Ordinal::from_biguint(self.nat()?)),
            _ => Err(self.error("expected a number, 'w', or '('")),
        }
    }

    // term := 'w' ('^' atom)? ('*' nat)? | nat
    fn term(&mut self) -> Result<Ordinal, OrdinalParseError> {
        match self.peek() {
            Some(b'w') => {
                self.pos += 1;
                let exponent = if self.eat(b'^') {
                    self.atom()?
                } else {
                    Ordinal::one()
                };
                let coefficient = if self.eat(b'*') {
                    self.nat()?
                } else {
                    BigUint::one()
                };
                Ok(Ordinal::power_term(exponent, coefficient))
            }
            Some(c) if c.is_ascii_digit() => Ok(Ordinal::from_biguint(self.nat()?)),
            _ => Err(self.error("expected a term ('w...' or a number)")),
        }
    }

    // expr := term ('+' term)*
    fn expr(&mut self) -> Result<Ordinal, OrdinalParseError> {
        let mut acc = self.term()?;
        while self.eat(b'+') {
            acc = acc.add(&self.term()?);
        }
        Ok(acc)
    }
}
