//! Exact arithmetic in GF(p^m) with log/antilog tables.
//!
//! Elements are encoded as integers in `[0, q)`: the base-p digits of the
//! value are the polynomial-basis coefficients, little-endian (digit j is
//! the coefficient of the degree-j basis element). For p = 2 this is the
//! usual bit-packed representation. Multiplication and inversion go through
//! the log/antilog tables of a verified primitive element, so the table
//! guard `q <= 2^24` keeps memory bounded.

use crate::error::{Error, Result};

pub const TABLE_GUARD: u64 = 1 << 24;

/// A finite field GF(p^m) with a fixed irreducible modulus and a verified
/// primitive element. Immutable after construction; all operations are pure.
#[derive(Debug, Clone)]
pub struct FieldSpec {
    p: u64,
    m: u32,
    q: u64,
    /// Monic irreducible modulus, little-endian coefficients over GF(p),
    /// length m + 1.
    modulus: Vec<u64>,
    beta: u32,
    /// log_table[x] for nonzero x is the exponent e with beta^e = x.
    log_table: Vec<u32>,
    /// exp_table[e] = beta^e for e in 0..q-1.
    exp_table: Vec<u32>,
}

impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.modulus == other.modulus
    }
}
impl Eq for FieldSpec {}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Factor q as p^m with p prime, or fail.
pub fn prime_power(q: u64) -> Result<(u64, u32)> {
    if q < 2 {
        return Err(Error::NotPrimePower(q));
    }
    let mut p = 2;
    while p * p <= q {
        if q % p == 0 {
            let mut m = 0;
            let mut r = q;
            while r % p == 0 {
                r /= p;
                m += 1;
            }
            if r == 1 {
                return Ok((p, m));
            }
            return Err(Error::NotPrimePower(q));
        }
        p += 1;
    }
    Ok((q, 1))
}

// Dense little-endian polynomials over GF(p). Leading zeros allowed; degree
// is computed on the fly.

fn poly_deg(a: &[u64]) -> Option<usize> {
    a.iter().rposition(|&c| c != 0)
}

fn poly_rem(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let db = poly_deg(b).expect("divisor must be nonzero");
    let mut r = a.to_vec();
    let lead_inv = mod_inv(b[db], p);
    while let Some(dr) = poly_deg(&r) {
        if dr < db {
            break;
        }
        let c = (r[dr] * lead_inv) % p;
        let shift = dr - db;
        for j in 0..=db {
            let sub = (c * b[j]) % p;
            r[shift + j] = (r[shift + j] + p - sub) % p;
        }
    }
    r
}

fn mod_inv(a: u64, p: u64) -> u64 {
    // Fermat; p is prime and a nonzero.
    mod_pow(a % p, p - 2, p)
}

fn mod_pow(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

/// Irreducibility over GF(p) by trial division against all monic polynomials
/// of degree 1..=deg/2.
fn poly_irreducible(f: &[u64], p: u64) -> bool {
    let d = match poly_deg(f) {
        Some(d) if d >= 1 => d,
        _ => return false,
    };
    if d == 1 {
        return true;
    }
    for dd in 1..=d / 2 {
        // monic divisors of degree dd, enumerated by the value of the low part
        let count = p.pow(dd as u32);
        for v in 0..count {
            let mut g = value_to_digits(v, p, dd as u32 + 1);
            g[dd] = 1;
            let r = poly_rem(f, &g, p);
            if poly_deg(&r).is_none() {
                return false;
            }
        }
    }
    true
}

fn value_to_digits(mut v: u64, p: u64, len: u32) -> Vec<u64> {
    let mut out = vec![0u64; len as usize];
    for d in out.iter_mut() {
        *d = v % p;
        v /= p;
        if v == 0 {
            break;
        }
    }
    out
}

fn digits_to_value(d: &[u64], p: u64) -> u64 {
    let mut v = 0u64;
    for &c in d.iter().rev() {
        v = v * p + c;
    }
    v
}

impl FieldSpec {
    /// Build GF(p^m) with the lowest-value irreducible modulus and the
    /// lowest-value primitive element, so results are deterministic.
    pub fn build(p: u64, m: u32) -> Result<FieldSpec> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        assert!(m >= 1, "extension degree must be positive");
        let q = p.checked_pow(m).filter(|&q| q <= TABLE_GUARD).ok_or(
            Error::FieldTooLarge(p.saturating_pow(m)),
        )?;

        // lowest-value monic irreducible of degree m: x^m + (low part)
        let mut modulus = None;
        for low in 0..p.pow(m.min(24)) {
            let mut f = value_to_digits(low, p, m + 1);
            f[m as usize] = 1;
            if poly_irreducible(&f, p) {
                modulus = Some(f);
                break;
            }
        }
        let modulus = modulus.expect("an irreducible polynomial of every degree exists");

        let mut fs = FieldSpec {
            p,
            m,
            q,
            modulus,
            beta: 0,
            log_table: Vec::new(),
            exp_table: Vec::new(),
        };

        // lowest-value primitive element
        let factors = prime_factors(q - 1);
        let beta = (1..q as u32)
            .find(|&b| {
                factors
                    .iter()
                    .all(|&r| fs.pow_slow(b, (q - 1) / r) != 1)
            })
            .expect("the multiplicative group is cyclic");
        fs.beta = beta;

        let mut exp_table = Vec::with_capacity((q - 1) as usize);
        let mut acc = 1u32;
        for _ in 0..q - 1 {
            exp_table.push(acc);
            acc = fs.mul_slow(acc, beta);
        }
        debug_assert_eq!(acc, 1, "beta must have order exactly q - 1");
        let mut log_table = vec![u32::MAX; q as usize];
        for (e, &x) in exp_table.iter().enumerate() {
            debug_assert_eq!(log_table[x as usize], u32::MAX);
            log_table[x as usize] = e as u32;
        }
        fs.exp_table = exp_table;
        fs.log_table = log_table;
        Ok(fs)
    }

    pub fn build_from_order(q: u64) -> Result<FieldSpec> {
        let (p, m) = prime_power(q)?;
        FieldSpec::build(p, m)
    }

    pub fn p(&self) -> u64 {
        self.p
    }
    pub fn m(&self) -> u32 {
        self.m
    }
    pub fn q(&self) -> u64 {
        self.q
    }
    pub fn beta(&self) -> u32 {
        self.beta
    }
    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    /// Polynomial-basis multiplication, used only to bootstrap the tables
    /// and to cross-check them in tests.
    pub fn mul_slow(&self, a: u32, b: u32) -> u32 {
        if self.m == 1 {
            return ((a as u64 * b as u64) % self.p) as u32;
        }
        if self.p == 2 {
            // carry-less shift-xor with on-the-fly reduction
            let mask = self.q - 1;
            let red = digits_to_value(&self.modulus, 2) & mask; // low part of modulus
            let mut acc = 0u64;
            let mut a = a as u64;
            let mut b = b as u64;
            while b != 0 {
                if b & 1 == 1 {
                    acc ^= a;
                }
                b >>= 1;
                a <<= 1;
                if a & self.q != 0 {
                    a = (a & mask) ^ red;
                }
            }
            return acc as u32;
        }
        let da = value_to_digits(a as u64, self.p, self.m);
        let db = value_to_digits(b as u64, self.p, self.m);
        let mut prod = vec![0u64; 2 * self.m as usize];
        for (i, &ca) in da.iter().enumerate() {
            if ca == 0 {
                continue;
            }
            for (j, &cb) in db.iter().enumerate() {
                prod[i + j] = (prod[i + j] + ca * cb) % self.p;
            }
        }
        let r = poly_rem(&prod, &self.modulus, self.p);
        digits_to_value(&r[..self.m as usize], self.p) as u32
    }

    fn pow_slow(&self, b: u32, mut e: u64) -> u32 {
        let mut acc = 1u32;
        let mut b = b;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul_slow(acc, b);
            }
            b = self.mul_slow(b, b);
            e >>= 1;
        }
        acc
    }

    pub fn add(&self, a: u32, b: u32) -> u32 {
        debug_assert!((a as u64) < self.q && (b as u64) < self.q);
        if self.p == 2 {
            return a ^ b;
        }
        if self.m == 1 {
            return ((a as u64 + b as u64) % self.p) as u32;
        }
        let da = value_to_digits(a as u64, self.p, self.m);
        let db = value_to_digits(b as u64, self.p, self.m);
        let sum: Vec<u64> = da
            .iter()
            .zip(&db)
            .map(|(&x, &y)| (x + y) % self.p)
            .collect();
        digits_to_value(&sum, self.p) as u32
    }

    pub fn neg(&self, a: u32) -> u32 {
        if self.p == 2 {
            return a;
        }
        if self.m == 1 {
            return if a == 0 { 0 } else { (self.p - a as u64) as u32 };
        }
        let da = value_to_digits(a as u64, self.p, self.m);
        let neg: Vec<u64> = da.iter().map(|&x| (self.p - x) % self.p).collect();
        digits_to_value(&neg, self.p) as u32
    }

    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        let e = self.log_table[a as usize] as u64 + self.log_table[b as usize] as u64;
        self.exp_table[(e % (self.q - 1)) as usize]
    }

    /// Multiplicative inverse of a nonzero element.
    pub fn inv(&self, a: u32) -> u32 {
        assert!(a != 0, "zero has no inverse");
        let e = self.log_table[a as usize] as u64;
        self.exp_table[((self.q - 1 - e) % (self.q - 1)) as usize]
    }

    pub fn div(&self, a: u32, b: u32) -> u32 {
        self.mul(a, self.inv(b))
    }

    /// beta^(e mod (q-1)); never zero.
    pub fn beta_pow(&self, e: i64) -> u32 {
        let ord = (self.q - 1) as i64;
        self.exp_table[e.rem_euclid(ord) as usize]
    }

    /// Exponent e in 0..q-1 with beta^e = a, for nonzero a.
    pub fn discrete_log(&self, a: u32) -> u64 {
        assert!(a != 0, "zero has no discrete log");
        self.log_table[a as usize] as u64
    }
}
