//! Addition and multiplication tables for the small fields GF(q).
//!
//! Elements of GF(p^m) are coded as integers `Σ c_i p^i` for the coefficient
//! vector of a polynomial modulo a fixed irreducible polynomial. `0` and `1`
//! are the field's zero and one, so alphabet symbols map directly to field
//! elements.

use std::sync::OnceLock;

use crate::error::{Error, Result};

pub const SUPPORTED_ORDERS: [usize; 12] = [2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27];

/// (q, p, modulus coefficients low to high, leading 1 included)
const EXTENSIONS: [(usize, usize, &[usize]); 6] = [
    (4, 2, &[1, 1, 1]),
    (8, 2, &[1, 1, 0, 1]),
    (9, 3, &[1, 0, 1]),
    (16, 2, &[1, 1, 0, 0, 1]),
    (25, 5, &[2, 1, 1]),
    (27, 3, &[1, 2, 0, 1]),
];

#[derive(Clone, Debug)]
pub struct FieldTable {
    q: usize,
    characteristic: usize,
    add: Vec<u8>,
    mul: Vec<u8>,
    neg: Vec<u8>,
    inv: Vec<u8>,
}

impl FieldTable {
    /// Shared, verified table for `q`.
    pub fn get(q: usize) -> Result<&'static FieldTable> {
        static CACHE: [OnceLock<std::result::Result<FieldTable, Error>>; 12] =
            [const { OnceLock::new() }; 12];
        let slot = SUPPORTED_ORDERS
            .iter()
            .position(|&s| s == q)
            .ok_or(Error::UnsupportedField(q))?;
        CACHE[slot]
            .get_or_init(|| FieldTable::new(q))
            .as_ref()
            .map_err(Clone::clone)
    }

    /// Builds and verifies the table for `q`.
    pub fn new(q: usize) -> Result<FieldTable> {
        let (p, modulus): (usize, &[usize]) = if is_prime(q) {
            (q, &[0, 1])
        } else {
            EXTENSIONS
                .iter()
                .find(|e| e.0 == q)
                .map(|e| (e.1, e.2))
                .ok_or(Error::UnsupportedField(q))?
        };
        let m = modulus.len() - 1;
        let digits = |mut x: usize| {
            let mut d = vec![0; m];
            for slot in d.iter_mut() {
                *slot = x % p;
                x /= p;
            }
            d
        };
        let undigits = |d: &[usize]| d.iter().rev().fold(0, |acc, &c| acc * p + c);

        let mut add = vec![0u8; q * q];
        let mut mul = vec![0u8; q * q];
        for a in 0..q {
            let da = digits(a);
            for b in 0..q {
                let db = digits(b);
                let sum: Vec<usize> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
                add[a * q + b] = undigits(&sum) as u8;
                let prod = if m == 1 {
                    vec![(a * b) % p]
                } else {
                    poly_mul_mod(&da, &db, modulus, p)
                };
                mul[a * q + b] = undigits(&prod) as u8;
            }
        }
        let mut field = FieldTable {
            q,
            characteristic: p,
            add,
            mul,
            neg: vec![0; q],
            inv: vec![0; q],
        };
        field.verify()?;
        Ok(field)
    }

    fn verify(&mut self) -> Result<()> {
        let q = self.q;
        for a in 0..q {
            if self.add(0, a) != a || self.mul(1, a) != a {
                return Err(Error::FieldAxiom(q, "identity"));
            }
            let neg = (0..q).find(|&b| self.add(a, b) == 0);
            self.neg[a] = neg.ok_or(Error::FieldAxiom(q, "additive inverse"))? as u8;
            if a != 0 {
                let inv = (0..q).find(|&b| self.mul(a, b) == 1);
                self.inv[a] = inv.ok_or(Error::FieldAxiom(q, "multiplicative inverse"))? as u8;
            }
            for b in 0..q {
                if self.add(a, b) != self.add(b, a) || self.mul(a, b) != self.mul(b, a) {
                    return Err(Error::FieldAxiom(q, "commutativity"));
                }
                for c in 0..q {
                    if self.add(self.add(a, b), c) != self.add(a, self.add(b, c))
                        || self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c))
                    {
                        return Err(Error::FieldAxiom(q, "associativity"));
                    }
                    if self.mul(a, self.add(b, c)) != self.add(self.mul(a, b), self.mul(a, c)) {
                        return Err(Error::FieldAxiom(q, "distributivity"));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.q
    }

    pub fn characteristic(&self) -> usize {
        self.characteristic
    }

    pub fn is_prime_field(&self) -> bool {
        self.q == self.characteristic
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.q + b] as usize
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.q + b] as usize
    }

    #[inline]
    pub fn neg(&self, a: usize) -> usize {
        self.neg[a] as usize
    }

    #[inline]
    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg(b))
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: usize) -> Option<usize> {
        (a != 0).then(|| self.inv[a] as usize)
    }

    /// A generator of the multiplicative group.
    pub fn primitive_element(&self) -> usize {
        (1..self.q)
            .find(|&g| {
                let mut x = g;
                let mut ord = 1;
                while x != 1 {
                    x = self.mul(x, g);
                    ord += 1;
                }
                ord == self.q - 1
            })
            .expect("finite fields have primitive elements")
    }
}

fn is_prime(n: usize) -> bool {
    n >= 2 && (2..n).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

/// Product of two residues (coefficients low to high) modulo a monic modulus.
fn poly_mul_mod(a: &[usize], b: &[usize], modulus: &[usize], p: usize) -> Vec<usize> {
    let m = modulus.len() - 1;
    let mut prod = vec![0; 2 * m - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % p;
        }
    }
    // x^m = -(modulus without its leading term)
    for deg in (m..prod.len()).rev() {
        let c = prod[deg];
        if c == 0 {
            continue;
        }
        prod[deg] = 0;
        for (i, &mc) in modulus[..m].iter().enumerate() {
            let idx = deg - m + i;
            prod[idx] = (prod[idx] + c * (p - mc)) % p;
        }
    }
    prod.truncate(m);
    prod
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_supported_orders_build() {
        for q in SUPPORTED_ORDERS {
            let f = FieldTable::get(q).unwrap();
            assert_eq!(f.order(), q);
            let g = f.primitive_element();
            assert_ne!(g, 0);
        }
    }

    #[test]
    fn unsupported_orders() {
        for q in [1, 6, 10, 12, 32] {
            assert_eq!(FieldTable::get(q).unwrap_err(), Error::UnsupportedField(q));
        }
    }

    #[test]
    fn gf4_table() {
        let f = FieldTable::new(4).unwrap();
        // with x^2 = x + 1: 2 = x, 3 = x + 1
        assert_eq!(f.mul(2, 2), 3);
        assert_eq!(f.mul(2, 3), 1);
        assert_eq!(f.add(2, 3), 1);
        assert_eq!(f.characteristic(), 2);
        assert!(!f.is_prime_field());
    }

    #[test]
    fn prime_field_is_modular_arithmetic() {
        let f = FieldTable::new(7).unwrap();
        for a in 0..7 {
            for b in 0..7 {
                assert_eq!(f.add(a, b), (a + b) % 7);
                assert_eq!(f.mul(a, b), (a * b) % 7);
            }
        }
        assert_eq!(f.inv(3), Some(5));
        assert_eq!(f.inv(0), None);
        assert_eq!(f.sub(2, 5), 4);
    }

    #[test]
    fn reducible_modulus_fails_verification() {
        // x^2 + 1 = (x + 1)^2 over GF(2)
        let mut bad = FieldTable {
            q: 4,
            characteristic: 2,
            add: vec![0; 16],
            mul: vec![0; 16],
            neg: vec![0; 4],
            inv: vec![0; 4],
        };
        for a in 0..4 {
            for b in 0..4 {
                bad.add[a * 4 + b] = (a ^ b) as u8;
                let da = [a & 1, a >> 1];
                let db = [b & 1, b >> 1];
                let r = poly_mul_mod(&da, &db, &[1, 0, 1], 2);
                bad.mul[a * 4 + b] = (r[0] + 2 * r[1]) as u8;
            }
        }
        assert!(matches!(bad.verify(), Err(Error::FieldAxiom(4, _))));
    }
}
