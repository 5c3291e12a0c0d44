//! Dense univariate polynomials over finite fields, with root finding.
//!
//! Roots are found by taking `gcd(g, x^q - x)` and splitting the result
//! with Cantor–Zassenhaus. Small fields fall back to exhaustive evaluation.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::field::{Coeff, Field};
use super::PolyError;

/// Univariate polynomial, coefficients low degree first, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniPoly {
    field: Field,
    coeffs: Vec<Coeff>,
}

impl UniPoly {
    pub fn new(field: &Field, coeffs: Vec<Coeff>) -> UniPoly {
        let mut p = UniPoly { field: field.clone(), coeffs };
        p.trim();
        p
    }

    pub fn zero(field: &Field) -> UniPoly {
        UniPoly { field: field.clone(), coeffs: Vec::new() }
    }

    pub fn x(field: &Field) -> UniPoly {
        UniPoly::new(field, vec![Coeff::zero(field), Coeff::one(field)])
    }

    pub fn constant(field: &Field, c: Coeff) -> UniPoly {
        UniPoly::new(field, vec![c])
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Coeff::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn coeffs(&self) -> &[Coeff] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn add(&self, o: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        let z = Coeff::zero(&self.field);
        let v = (0..n)
            .map(|i| self.coeffs.get(i).unwrap_or(&z).add(o.coeffs.get(i).unwrap_or(&z)))
            .collect();
        UniPoly::new(&self.field, v)
    }

    pub fn sub(&self, o: &UniPoly) -> UniPoly {
        self.add(&o.scale(&Coeff::from_i64(&self.field, -1)))
    }

    pub fn scale(&self, c: &Coeff) -> UniPoly {
        UniPoly::new(&self.field, self.coeffs.iter().map(|a| a.mul(c)).collect())
    }

    pub fn mul(&self, o: &UniPoly) -> UniPoly {
        if self.is_zero() || o.is_zero() {
            return UniPoly::zero(&self.field);
        }
        let mut v = vec![Coeff::zero(&self.field); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                v[i + j] = v[i + j].add(&a.mul(b));
            }
        }
        UniPoly::new(&self.field, v)
    }

    /// Quotient and remainder; panics on division by zero.
    pub fn divrem(&self, d: &UniPoly) -> (UniPoly, UniPoly) {
        let dd = d.degree().expect("division by zero polynomial");
        let lead_inv = d.coeffs[dd].inv().expect("nonzero");
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return (UniPoly::zero(&self.field), self.clone());
        }
        let mut q = vec![Coeff::zero(&self.field); r.len() - dd];
        for top in (dd..r.len()).rev() {
            let c = r[top].mul(&lead_inv);
            if c.is_zero() {
                continue;
            }
            let shift = top - dd;
            for (i, di) in d.coeffs.iter().enumerate() {
                r[shift + i] = r[shift + i].sub(&c.mul(di));
            }
            q[shift] = c;
        }
        r.truncate(dd);
        (UniPoly::new(&self.field, q), UniPoly::new(&self.field, r))
    }

    pub fn rem(&self, d: &UniPoly) -> UniPoly {
        self.divrem(d).1
    }

    pub fn monic(&self) -> UniPoly {
        match self.coeffs.last() {
            Some(c) => self.scale(&c.inv().expect("nonzero")),
            None => self.clone(),
        }
    }

    pub fn gcd(&self, o: &UniPoly) -> UniPoly {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn derivative(&self) -> UniPoly {
        let coeffs = self.coeffs.iter().enumerate().skip(1).map(|(i, c)| c.mul(&Coeff::from_i64(&self.field, i as i64))).collect();
        UniPoly::new(&self.field, coeffs)
    }

    /// Product of the distinct monic irreducible factors. Needs a finite field.
    pub fn squarefree(&self) -> UniPoly {
        let one = UniPoly::constant(&self.field, Coeff::one(&self.field));
        if self.degree().unwrap_or(0) == 0 {
            return one;
        }
        let d = self.derivative();
        if d.is_zero() {
            // f = g(x^p) = h^p with h the p-th root taken coefficientwise.
            let p = self.field.characteristic() as usize;
            let root = (p as u128).pow(self.field.degree().saturating_sub(1) as u32);
            let h: Vec<Coeff> = self.coeffs.iter().step_by(p).map(|c| c.pow(root)).collect();
            return UniPoly::new(&self.field, h).squarefree();
        }
        let g = self.gcd(&d);
        // Factors of multiplicity prime to p, once each; the rest stay in g.
        let a = self.divrem(&g).0.monic();
        let b = g.squarefree();
        let common = a.gcd(&b);
        a.mul(&b).divrem(&common).0.monic()
    }

    pub fn powmod(&self, mut e: u128, m: &UniPoly) -> UniPoly {
        let mut acc = UniPoly::constant(&self.field, Coeff::one(&self.field)).rem(m);
        let mut b = self.rem(m);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&b).rem(m);
            }
            b = b.mul(&b).rem(m);
            e >>= 1;
        }
        acc
    }

    pub fn eval(&self, x: &Coeff) -> Coeff {
        let mut acc = Coeff::zero(&self.field);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(c);
        }
        acc
    }

    /// Distinct roots lying in the coefficient field, sorted by display form.
    pub fn roots(&self) -> Result<Vec<Coeff>, PolyError> {
        let field = &self.field;
        let q = field
            .order()
            .ok_or_else(|| PolyError::Field("root finding needs a finite field".into()))?;
        if self.is_zero() {
            return Err(PolyError::Field("roots of the zero polynomial".into()));
        }
        let mut roots = if q <= 4096 {
            let elems = field.elements().expect("small field");
            elems.into_iter().filter(|e| self.eval(e).is_zero()).collect()
        } else {
            if field.characteristic() == 2 {
                return Err(PolyError::Field("large fields of characteristic 2 unsupported".into()));
            }
            let g = self.monic();
            let x = UniPoly::x(field);
            let h = x.powmod(q, &g).sub(&x);
            let split = g.gcd(&h);
            let mut out = Vec::new();
            let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0f00);
            split_linear(&split, q, &mut rng, &mut out);
            out
        };
        roots.sort_by_key(|c| c.to_string());
        Ok(roots)
    }
}

/// Splits a squarefree product of distinct linear factors.
fn split_linear(f: &UniPoly, q: u128, rng: &mut ChaCha8Rng, out: &mut Vec<Coeff>) {
    match f.degree() {
        None | Some(0) => {}
        Some(1) => {
            let c = &f.coeffs;
            out.push(c[0].neg().mul(&c[1].inv().expect("nonzero")));
        }
        Some(_) => loop {
            let field = f.field.clone();
            let a = field.random(rng);
            let shifted = UniPoly::new(&field, vec![a, Coeff::one(&field)]);
            let t = shifted.powmod((q - 1) / 2, f).sub(&UniPoly::constant(&field, Coeff::one(&field)));
            let g = f.gcd(&t);
            let dg = g.degree().unwrap_or(0);
            if dg > 0 && dg < f.degree().unwrap() {
                let (co, _) = f.divrem(&g);
                split_linear(&g, q, rng, out);
                split_linear(&co.monic(), q, rng, out);
                return;
            }
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(field: &Field, c: &[i64]) -> UniPoly {
        UniPoly::new(field, c.iter().map(|&n| Coeff::from_i64(field, n)).collect())
    }

    #[test]
    fn roots_small_field() {
        let f = Field::Prime(7);
        // x^2 - 1
        let r = poly(&f, &[-1, 0, 1]).roots().unwrap();
        assert_eq!(r.len(), 2);
        // x^2 + 1 has no roots mod 7
        assert!(poly(&f, &[1, 0, 1]).roots().unwrap().is_empty());
    }

    #[test]
    fn roots_large_field() {
        let p = 2147483647;
        let f = Field::Prime(p);
        // (x-3)(x-5)(x+11)(x^2+1) has the three listed roots (p = 3 mod 4).
        let g = poly(&f, &[-3, 1]).mul(&poly(&f, &[-5, 1])).mul(&poly(&f, &[11, 1])).mul(&poly(&f, &[1, 0, 1]));
        let r = g.roots().unwrap();
        let vals: Vec<u64> = r.iter().map(|c| c.as_u64().unwrap()).collect();
        assert_eq!(r.len(), 3);
        assert!(vals.contains(&3) && vals.contains(&5) && vals.contains(&(p - 11)));
        // x^2 + 1 splits in F_{p^2}
        let f2 = Field::finite(p, 2).unwrap();
        assert_eq!(poly(&f2, &[1, 0, 1]).roots().unwrap().len(), 2);
    }

    #[test]
    fn squarefree_parts() {
        let f = Field::Prime(7);
        let a = poly(&f, &[-1, 1]);
        let b = poly(&f, &[1, 0, 1]);
        // (x-1)^3 (x^2+1)^2
        let g = a.mul(&a).mul(&a).mul(&b).mul(&b);
        assert_eq!(g.squarefree(), a.mul(&b));
        // (x-1)^7 (x^2+1)^8: multiplicities divisible by p need the p-th root.
        let mut h = b.clone();
        for _ in 0..7 {
            h = h.mul(&a).mul(&b);
        }
        assert_eq!(h.squarefree(), a.mul(&b));
        assert_eq!(poly(&f, &[3]).squarefree(), poly(&f, &[1]));
    }
}
