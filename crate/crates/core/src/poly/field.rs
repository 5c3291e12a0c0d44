//! Coefficient fields: the rationals, prime fields and small extensions of them.
//!
//! A [`Coeff`] carries its field with it, so mixing elements of different
//! fields is caught at the point of the operation instead of producing
//! garbage. Extension fields are represented as `F_p[z]/(m(z))` for a monic
//! irreducible `m` of degree at most 4.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;

use super::PolyError;

/// Largest supported extension degree.
pub const MAX_EXTENSION_DEGREE: usize = 4;

#[inline]
pub(crate) fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

#[inline]
pub(crate) fn addmod(a: u64, b: u64, p: u64) -> u64 {
    let s = a as u128 + b as u128;
    (s % p as u128) as u64
}

#[inline]
pub(crate) fn submod(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        p - (b - a)
    }
}

pub(crate) fn powmod(mut base: u64, mut exp: u128, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mulmod(acc, base, p);
        }
        base = mulmod(base, base, p);
        exp >>= 1;
    }
    acc
}

pub(crate) fn invmod(a: u64, p: u64) -> Option<u64> {
    if a.is_multiple_of(p) {
        return None;
    }
    // Extended Euclid on signed 128-bit values.
    let (mut r0, mut r1) = (p as i128, (a % p) as i128);
    let (mut s0, mut s1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
    }
    if r0 != 1 {
        return None;
    }
    Some(s0.rem_euclid(p as i128) as u64)
}

/// Deterministic primality test, exact for all `u64`.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for q in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n.is_multiple_of(q) {
            return n == q;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a, d as u128, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

// Dense univariate helpers over F_p, coefficients low degree first.

fn trim(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn fp_rem(a: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    let mut r = a.to_vec();
    trim(&mut r);
    let dm = m.len() - 1;
    let lead_inv = invmod(m[dm], p).expect("nonzero leading coefficient");
    while r.len() > dm {
        let top = r.len() - 1;
        let c = mulmod(r[top], lead_inv, p);
        let shift = top - dm;
        for (i, &mi) in m.iter().enumerate() {
            r[shift + i] = submod(r[shift + i], mulmod(c, mi, p), p);
        }
        trim(&mut r);
    }
    r
}

fn fp_mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = addmod(out[i + j], mulmod(x, y, p), p);
        }
    }
    trim(&mut out);
    out
}

fn fp_mulmod(a: &[u64], b: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    fp_rem(&fp_mul(a, b, p), m, p)
}

fn fp_powmod(base: &[u64], mut e: u128, m: &[u64], p: u64) -> Vec<u64> {
    let mut acc = vec![1u64];
    let mut b = fp_rem(base, m, p);
    while e > 0 {
        if e & 1 == 1 {
            acc = fp_mulmod(&acc, &b, m, p);
        }
        b = fp_mulmod(&b, &b, m, p);
        e >>= 1;
    }
    acc
}

fn fp_gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    trim(&mut x);
    trim(&mut y);
    while !y.is_empty() {
        let r = fp_rem(&x, &y, p);
        x = y;
        y = r;
    }
    x
}

fn is_irreducible(m: &[u64], p: u64) -> bool {
    let k = m.len() - 1;
    let x = vec![0u64, 1];
    // x^{p^j} mod m for j = 1..=k
    let mut frob = Vec::with_capacity(k);
    let mut h = x.clone();
    for _ in 0..k {
        h = fp_powmod(&h, p as u128, m, p);
        frob.push(h.clone());
    }
    if fp_rem(&frob[k - 1], m, p) != fp_rem(&x, m, p) {
        return false;
    }
    for q in 2..=k {
        if !k.is_multiple_of(q) || !(2..q).all(|r| q % r != 0) {
            continue;
        }
        let mut d = frob[k / q - 1].clone();
        d.resize(d.len().max(2), 0);
        d[1] = submod(d[1], 1, p);
        trim(&mut d);
        let g = fp_gcd(m, &d, p);
        if g.len() != 1 {
            return false;
        }
    }
    true
}

/// `F_p[z]/(m(z))` with `m` monic irreducible.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExtensionField {
    p: u64,
    /// Monic modulus, low degree first, length `degree + 1`.
    modulus: Vec<u64>,
}

impl ExtensionField {
    /// Builds `F_{p^k}` from a deterministically chosen irreducible modulus.
    pub fn new(p: u64, k: usize) -> Result<Self, PolyError> {
        if !is_prime(p) {
            return Err(PolyError::Field(format!("{p} is not prime")));
        }
        if !(2..=MAX_EXTENSION_DEGREE).contains(&k) {
            return Err(PolyError::Field(format!(
                "extension degree {k} outside 2..={MAX_EXTENSION_DEGREE}"
            )));
        }
        // x^k + c1 x + c0 covers every case we need; irreducibles are dense.
        let bound = p.min(200);
        for c1 in 0..bound {
            for c0 in 1..bound {
                let mut m = vec![0u64; k + 1];
                m[0] = c0;
                m[1] = c1;
                m[k] = 1;
                if is_irreducible(&m, p) {
                    return Ok(ExtensionField { p, modulus: m });
                }
            }
        }
        // Tiny primes may need the full coefficient range.
        let total = (p as u128).pow(k as u32);
        for idx in 0..total {
            let mut m = vec![0u64; k + 1];
            let mut rest = idx;
            for slot in m.iter_mut().take(k) {
                *slot = (rest % p as u128) as u64;
                rest /= p as u128;
            }
            m[k] = 1;
            if m[0] != 0 && is_irreducible(&m, p) {
                return Ok(ExtensionField { p, modulus: m });
            }
        }
        Err(PolyError::Field(format!("no irreducible of degree {k} over F_{p}")))
    }

    /// Uses a caller-supplied monic modulus, checking irreducibility.
    pub fn with_modulus(p: u64, modulus: Vec<u64>) -> Result<Self, PolyError> {
        let k = modulus.len().saturating_sub(1);
        if !is_prime(p) || !(2..=MAX_EXTENSION_DEGREE).contains(&k) || modulus[k] != 1 {
            return Err(PolyError::Field("bad extension modulus".into()));
        }
        if !is_irreducible(&modulus, p) {
            return Err(PolyError::Field("modulus is reducible".into()));
        }
        Ok(ExtensionField { p, modulus })
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    pub fn order(&self) -> u128 {
        (self.p as u128).pow(self.degree() as u32)
    }

    fn reduce(&self, v: Vec<u64>) -> Vec<u64> {
        let mut r = fp_rem(&v, &self.modulus, self.p);
        r.resize(self.degree(), 0);
        r
    }

    fn mul(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        self.reduce(fp_mul(a, b, self.p))
    }
}

impl fmt::Debug for ExtensionField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}^{}{:?}", self.p, self.degree(), self.modulus)
    }
}

/// A coefficient field.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Field {
    Rational,
    Prime(u64),
    Extension(Arc<ExtensionField>),
}

impl Field {
    /// `F_p`, validating that `p` is prime.
    pub fn prime(p: u64) -> Result<Field, PolyError> {
        if is_prime(p) {
            Ok(Field::Prime(p))
        } else {
            Err(PolyError::Field(format!("{p} is not prime")))
        }
    }

    /// `F_{p^k}`; `k = 1` gives the prime field.
    pub fn finite(p: u64, k: usize) -> Result<Field, PolyError> {
        if k == 1 {
            Field::prime(p)
        } else {
            Ok(Field::Extension(Arc::new(ExtensionField::new(p, k)?)))
        }
    }

    /// Characteristic, 0 for the rationals.
    pub fn characteristic(&self) -> u64 {
        match self {
            Field::Rational => 0,
            Field::Prime(p) => *p,
            Field::Extension(e) => e.p,
        }
    }

    /// Degree over the prime field (1 for `Q` and `F_p`).
    pub fn degree(&self) -> usize {
        match self {
            Field::Extension(e) => e.degree(),
            _ => 1,
        }
    }

    /// Number of elements, `None` for the rationals.
    pub fn order(&self) -> Option<u128> {
        match self {
            Field::Rational => None,
            Field::Prime(p) => Some(*p as u128),
            Field::Extension(e) => Some(e.order()),
        }
    }

    pub fn is_finite(&self) -> bool {
        !matches!(self, Field::Rational)
    }

    /// Uniformly random element (finite fields) or a small random integer (Q).
    pub fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> Coeff {
        match self {
            Field::Rational => Coeff::from_i64(self, rng.gen_range(-1000..=1000)),
            Field::Prime(p) => Coeff::Prime { value: rng.gen_range(0..*p), p: *p },
            Field::Extension(e) => Coeff::Extension {
                value: (0..e.degree()).map(|_| rng.gen_range(0..e.p)).collect(),
                field: e.clone(),
            },
        }
    }

    /// Random nonzero element.
    pub fn random_nonzero<R: Rng + ?Sized>(&self, rng: &mut R) -> Coeff {
        loop {
            let c = self.random(rng);
            if !c.is_zero() {
                return c;
            }
        }
    }

    /// All elements of a finite field, in a fixed order.
    pub fn elements(&self) -> Option<Vec<Coeff>> {
        let order = self.order()?;
        if order > 1 << 20 {
            return None;
        }
        let k = self.degree();
        let p = self.characteristic();
        let mut out = Vec::with_capacity(order as usize);
        for idx in 0..order {
            let mut digits = vec![0u64; k];
            let mut rest = idx;
            for d in digits.iter_mut() {
                *d = (rest % p as u128) as u64;
                rest /= p as u128;
            }
            out.push(match self {
                Field::Prime(p) => Coeff::Prime { value: digits[0], p: *p },
                Field::Extension(e) => Coeff::Extension { value: digits, field: e.clone() },
                Field::Rational => unreachable!(),
            });
        }
        Some(out)
    }

    /// The generator `z` of an extension field.
    pub fn generator(&self) -> Option<Coeff> {
        match self {
            Field::Extension(e) => {
                let mut v = vec![0u64; e.degree()];
                v[1] = 1;
                Some(Coeff::Extension { value: v, field: e.clone() })
            }
            _ => None,
        }
    }
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "Q"),
            Field::Prime(p) => write!(f, "F_{p}"),
            Field::Extension(e) => write!(f, "F_{}^{}", e.p, e.degree()),
        }
    }
}

/// A field element tagged with its field.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Coeff {
    Rational(BigRational),
    Prime { value: u64, p: u64 },
    Extension { value: Vec<u64>, field: Arc<ExtensionField> },
}

impl Coeff {
    pub fn zero(field: &Field) -> Coeff {
        Coeff::from_i64(field, 0)
    }

    pub fn one(field: &Field) -> Coeff {
        Coeff::from_i64(field, 1)
    }

    pub fn from_i64(field: &Field, n: i64) -> Coeff {
        match field {
            Field::Rational => Coeff::Rational(BigRational::from_integer(BigInt::from(n))),
            Field::Prime(p) => Coeff::Prime { value: (n as i128).rem_euclid(*p as i128) as u64, p: *p },
            Field::Extension(e) => {
                let mut v = vec![0u64; e.degree()];
                v[0] = (n as i128).rem_euclid(e.p as i128) as u64;
                Coeff::Extension { value: v, field: e.clone() }
            }
        }
    }

    /// Maps a rational into `field`; fails when the denominator vanishes mod p.
    pub fn from_rational(field: &Field, q: &BigRational) -> Result<Coeff, PolyError> {
        match field {
            Field::Rational => Ok(Coeff::Rational(q.clone())),
            _ => {
                let p = field.characteristic();
                let red = |n: &BigInt| -> u64 {
                    let m = BigInt::from(p);
                    let r = ((n % &m) + &m) % &m;
                    r.to_u64().expect("reduced residue fits")
                };
                let num = red(q.numer());
                let den = red(q.denom());
                let inv = invmod(den, p).ok_or_else(|| {
                    PolyError::Field(format!("denominator of {q} vanishes in {field}"))
                })?;
                Ok(Coeff::from_i64(field, 0).with_base(mulmod(num, inv, p)))
            }
        }
    }

    fn with_base(self, v: u64) -> Coeff {
        match self {
            Coeff::Prime { p, .. } => Coeff::Prime { value: v, p },
            Coeff::Extension { field, .. } => {
                let mut val = vec![0u64; field.degree()];
                val[0] = v;
                Coeff::Extension { value: val, field }
            }
            c => c,
        }
    }

    pub fn field(&self) -> Field {
        match self {
            Coeff::Rational(_) => Field::Rational,
            Coeff::Prime { p, .. } => Field::Prime(*p),
            Coeff::Extension { field, .. } => Field::Extension(field.clone()),
        }
    }

    pub fn in_field(&self, field: &Field) -> bool {
        match (self, field) {
            (Coeff::Rational(_), Field::Rational) => true,
            (Coeff::Prime { p, .. }, Field::Prime(q)) => p == q,
            (Coeff::Extension { field: a, .. }, Field::Extension(b)) => Arc::ptr_eq(a, b) || a == b,
            _ => false,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Coeff::Rational(q) => q.is_zero(),
            Coeff::Prime { value, .. } => *value == 0,
            Coeff::Extension { value, .. } => value.iter().all(|&v| v == 0),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Coeff::Rational(q) => q.is_one(),
            Coeff::Prime { value, .. } => *value == 1,
            Coeff::Extension { value, .. } => value[0] == 1 && value[1..].iter().all(|&v| v == 0),
        }
    }

    /// Lies in the prime field (or is any rational).
    pub fn is_base(&self) -> bool {
        match self {
            Coeff::Extension { value, .. } => value[1..].iter().all(|&v| v == 0),
            _ => true,
        }
    }

    fn mismatch(&self, other: &Coeff) -> PolyError {
        PolyError::FieldMismatch(self.field().to_string(), other.field().to_string())
    }

    pub fn try_add(&self, other: &Coeff) -> Result<Coeff, PolyError> {
        match (self, other) {
            (Coeff::Rational(a), Coeff::Rational(b)) => Ok(Coeff::Rational(a + b)),
            (Coeff::Prime { value: a, p }, Coeff::Prime { value: b, p: q }) if p == q => {
                Ok(Coeff::Prime { value: addmod(*a, *b, *p), p: *p })
            }
            (Coeff::Extension { value: a, field }, Coeff::Extension { value: b, field: g })
                if field == g =>
            {
                let v = a.iter().zip(b).map(|(x, y)| addmod(*x, *y, field.p)).collect();
                Ok(Coeff::Extension { value: v, field: field.clone() })
            }
            _ => Err(self.mismatch(other)),
        }
    }

    pub fn try_mul(&self, other: &Coeff) -> Result<Coeff, PolyError> {
        match (self, other) {
            (Coeff::Rational(a), Coeff::Rational(b)) => Ok(Coeff::Rational(a * b)),
            (Coeff::Prime { value: a, p }, Coeff::Prime { value: b, p: q }) if p == q => {
                Ok(Coeff::Prime { value: mulmod(*a, *b, *p), p: *p })
            }
            (Coeff::Extension { value: a, field }, Coeff::Extension { value: b, field: g })
                if field == g =>
            {
                Ok(Coeff::Extension { value: field.mul(a, b), field: field.clone() })
            }
            _ => Err(self.mismatch(other)),
        }
    }

    pub fn neg(&self) -> Coeff {
        match self {
            Coeff::Rational(a) => Coeff::Rational(-a),
            Coeff::Prime { value, p } => Coeff::Prime { value: submod(0, *value, *p), p: *p },
            Coeff::Extension { value, field } => Coeff::Extension {
                value: value.iter().map(|&v| submod(0, v, field.p)).collect(),
                field: field.clone(),
            },
        }
    }

    pub fn try_sub(&self, other: &Coeff) -> Result<Coeff, PolyError> {
        self.try_add(&other.neg())
    }

    pub fn add(&self, other: &Coeff) -> Coeff {
        self.try_add(other).unwrap_or_else(|e| panic!("{e}"))
    }

    pub fn sub(&self, other: &Coeff) -> Coeff {
        self.try_sub(other).unwrap_or_else(|e| panic!("{e}"))
    }

    pub fn mul(&self, other: &Coeff) -> Coeff {
        self.try_mul(other).unwrap_or_else(|e| panic!("{e}"))
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inv(&self) -> Option<Coeff> {
        if self.is_zero() {
            return None;
        }
        match self {
            Coeff::Rational(a) => Some(Coeff::Rational(a.recip())),
            Coeff::Prime { value, p } => Some(Coeff::Prime { value: invmod(*value, *p)?, p: *p }),
            Coeff::Extension { field, .. } => Some(self.pow(field.order() - 2)),
        }
    }

    pub fn div(&self, other: &Coeff) -> Option<Coeff> {
        Some(self.mul(&other.inv()?))
    }

    pub fn pow(&self, mut e: u128) -> Coeff {
        let mut acc = Coeff::one(&self.field());
        let mut b = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&b);
            }
            b = b.mul(&b);
            e >>= 1;
        }
        acc
    }

    /// The Frobenius image `c^p`; identity on Q and `F_p`.
    pub fn frobenius(&self) -> Coeff {
        match self {
            Coeff::Extension { field, .. } => self.pow(field.p as u128),
            c => c.clone(),
        }
    }

    /// Embeds a prime-field element into an extension with the same characteristic.
    pub fn embed(&self, target: &Field) -> Result<Coeff, PolyError> {
        if self.in_field(target) {
            return Ok(self.clone());
        }
        match (self, target) {
            (Coeff::Prime { value, p }, Field::Extension(e)) if e.p == *p => {
                Ok(Coeff::from_i64(target, 0).with_base(*value))
            }
            (Coeff::Rational(q), Field::Prime(_)) | (Coeff::Rational(q), Field::Extension(_)) => {
                Coeff::from_rational(target, q)
            }
            _ => Err(PolyError::FieldMismatch(self.field().to_string(), target.to_string())),
        }
    }

    /// For prime-field elements, the canonical residue in `0..p`.
    pub fn as_u64(&self) -> Option<u64> {
        match self {
            Coeff::Prime { value, .. } => Some(*value),
            Coeff::Extension { value, .. } if self.is_base() => Some(value[0]),
            _ => None,
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Coeff::Rational(q) => Some(q),
            _ => None,
        }
    }

    /// Sign-adjusted form for pretty printing over F_p: residues above p/2
    /// print as negatives so `x - y` round-trips in readable form.
    pub(crate) fn signed_repr(&self) -> (bool, String) {
        match self {
            Coeff::Rational(q) => {
                if q.is_negative() {
                    (true, fmt_rational(&-q))
                } else {
                    (false, fmt_rational(q))
                }
            }
            Coeff::Prime { value, p } => {
                if *value > *p / 2 {
                    (true, (p - value).to_string())
                } else {
                    (false, value.to_string())
                }
            }
            Coeff::Extension { .. } => (false, format!("({self})")),
        }
    }
}

fn fmt_rational(q: &BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

impl fmt::Display for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coeff::Rational(q) => write!(f, "{}", fmt_rational(q)),
            Coeff::Prime { value, .. } => write!(f, "{value}"),
            Coeff::Extension { value, .. } => {
                let mut first = true;
                for (i, v) in value.iter().enumerate() {
                    if *v == 0 {
                        continue;
                    }
                    if !first {
                        write!(f, "+")?;
                    }
                    first = false;
                    match i {
                        0 => write!(f, "{v}")?,
                        1 => write!(f, "{v}*z")?,
                        _ => write!(f, "{v}*z^{i}")?,
                    }
                }
                if first {
                    write!(f, "0")?;
                }
                Ok(())
            }
        }
    }
}

impl fmt::Debug for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} in {}", self.field())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality() {
        assert!(is_prime(2147483647));
        assert!(!is_prime(2147483649));
        assert!(is_prime(7) && is_prime(11) && !is_prime(1) && !is_prime(91));
    }

    #[test]
    fn extension_inverse_and_frobenius() {
        for k in 2..=4 {
            let f = Field::finite(7, k).unwrap();
            let z = f.generator().unwrap();
            let inv = z.inv().unwrap();
            assert!(z.mul(&inv).is_one());
            // z^{p^k} = z
            let mut w = z.clone();
            for _ in 0..k {
                w = w.frobenius();
            }
            assert_eq!(w, z);
            assert_ne!(z.frobenius(), z);
        }
    }

    #[test]
    fn rational_reduction() {
        let f = Field::Prime(7);
        let half = BigRational::new(1.into(), 2.into());
        assert_eq!(Coeff::from_rational(&f, &half).unwrap().as_u64(), Some(4));
        let seventh = BigRational::new(1.into(), 7.into());
        assert!(Coeff::from_rational(&f, &seventh).is_err());
    }

    #[test]
    fn mixed_fields_rejected() {
        let a = Coeff::one(&Field::Prime(7));
        let b = Coeff::one(&Field::Prime(11));
        assert!(a.try_add(&b).is_err());
    }

    #[test]
    fn large_prime_extension() {
        let f = Field::finite(2147483647, 4).unwrap();
        let z = f.generator().unwrap();
        assert!(z.mul(&z.inv().unwrap()).is_one());
    }
}
