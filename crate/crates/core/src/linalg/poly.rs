use std::fmt;

use rand::Rng;

use super::field::PrimeField;
use super::matrix::Matrix;

/// Univariate polynomial over GF(p), coefficients stored from the constant term up.
/// Trailing zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    field: PrimeField,
    coeffs: Vec<u32>,
}

/// `unit * prod(factor^mult)`, factors monic and irreducible.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub unit: u32,
    pub factors: Vec<(Poly, usize)>,
}

impl Factorization {
    pub fn expand(&self, field: PrimeField) -> Poly {
        let mut acc = Poly::constant(field, self.unit);
        for (f, m) in &self.factors {
            for _ in 0..*m {
                acc = acc.mul(f);
            }
        }
        acc
    }
}

impl Poly {
    pub fn new(field: PrimeField, mut coeffs: Vec<u32>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Poly { field, coeffs }
    }

    pub fn from_i64(field: PrimeField, coeffs: &[i64]) -> Self {
        Self::new(field, coeffs.iter().map(|&c| field.from_i64(c)).collect())
    }

    pub fn zero(field: PrimeField) -> Self {
        Poly { field, coeffs: Vec::new() }
    }

    pub fn one(field: PrimeField) -> Self {
        Self::constant(field, 1)
    }

    pub fn constant(field: PrimeField, c: u32) -> Self {
        Self::new(field, vec![c])
    }

    pub fn x(field: PrimeField) -> Self {
        Self::new(field, vec![0, 1])
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    pub fn leading(&self) -> u32 {
        *self.coeffs.last().unwrap_or(&0)
    }

    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(self.field.inv(self.leading()))
    }

    pub fn scale(&self, c: u32) -> Poly {
        let f = self.field;
        Poly::new(f, self.coeffs.iter().map(|&a| f.mul(a, c)).collect())
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let f = self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        let c = (0..n).map(|i| f.add(*self.coeffs.get(i).unwrap_or(&0), *other.coeffs.get(i).unwrap_or(&0))).collect();
        Poly::new(f, c)
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.scale(self.field.neg(1 % self.field.modulus())))
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero(self.field);
        }
        let f = self.field;
        let mut c = vec![0u32; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                c[i + j] = f.mul_add(c[i + j], a, b);
            }
        }
        Poly::new(f, c)
    }

    pub fn divrem(&self, d: &Poly) -> (Poly, Poly) {
        assert!(!d.is_zero(), "division by zero polynomial");
        let f = self.field;
        let dd = d.coeffs.len() - 1;
        if self.coeffs.len() <= dd {
            return (Poly::zero(f), self.clone());
        }
        let inv = f.inv(d.leading());
        let mut r = self.coeffs.clone();
        let mut q = vec![0u32; r.len() - dd];
        for k in (0..q.len()).rev() {
            let c = f.mul(r[k + dd], inv);
            q[k] = c;
            if c == 0 {
                continue;
            }
            for (j, &b) in d.coeffs.iter().enumerate() {
                r[k + j] = f.sub(r[k + j], f.mul(c, b));
            }
        }
        r.truncate(dd);
        (Poly::new(f, q), Poly::new(f, r))
    }

    pub fn rem(&self, d: &Poly) -> Poly {
        self.divrem(d).1
    }

    pub fn div_exact(&self, d: &Poly) -> Poly {
        let (q, r) = self.divrem(d);
        debug_assert!(r.is_zero());
        q
    }

    /// Monic gcd.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Returns `(g, s, t)` with `s*self + t*other = g`, `g` monic.
    pub fn ext_gcd(&self, other: &Poly) -> (Poly, Poly, Poly) {
        let f = self.field;
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Poly::one(f), Poly::zero(f));
        let (mut t0, mut t1) = (Poly::zero(f), Poly::one(f));
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1);
            r0 = std::mem::replace(&mut r1, r);
            let s = s0.sub(&q.mul(&s1));
            s0 = std::mem::replace(&mut s1, s);
            let t = t0.sub(&q.mul(&t1));
            t0 = std::mem::replace(&mut t1, t);
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let inv = f.inv(r0.leading());
        (r0.scale(inv), s0.scale(inv), t0.scale(inv))
    }

    pub fn derivative(&self) -> Poly {
        let f = self.field;
        let c = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &a)| f.mul(a, (i as u64 % f.modulus() as u64) as u32))
            .collect();
        Poly::new(f, c)
    }

    pub fn mulmod(&self, other: &Poly, m: &Poly) -> Poly {
        self.mul(other).rem(m)
    }

    pub fn powmod(&self, mut e: u64, m: &Poly) -> Poly {
        let mut base = self.rem(m);
        let mut acc = Poly::one(self.field).rem(m);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mulmod(&base, m);
            }
            base = base.mulmod(&base, m);
            e >>= 1;
        }
        acc
    }

    pub fn eval(&self, x: u32) -> u32 {
        let f = self.field;
        self.coeffs.iter().rev().fold(0, |acc, &c| f.add(f.mul(acc, x), c))
    }

    pub fn eval_matrix(&self, m: &Matrix) -> Matrix {
        let f = self.field;
        let n = m.rows();
        let mut acc = Matrix::zeros(f, n, n);
        for &c in self.coeffs.iter().rev() {
            acc = acc.mul(m).add(&Matrix::identity(f, n).scale(c));
        }
        acc
    }

    /// `self^(1/p)` for a polynomial in `x^p` (Frobenius is the identity on GF(p)).
    fn pth_root(&self) -> Poly {
        let p = self.field.modulus() as usize;
        let c = self.coeffs.iter().step_by(p).copied().collect();
        Poly::new(self.field, c)
    }

    /// Square-free decomposition of a monic polynomial: pairs `(g_i, i)`, `g_i` square-free
    /// and pairwise coprime with `f = prod g_i^i`.
    pub fn square_free_decomposition(&self) -> Vec<(Poly, usize)> {
        let f = self.monic();
        let mut out = Vec::new();
        if f.degree().unwrap_or(0) == 0 {
            return out;
        }
        let p = self.field.modulus() as usize;
        let g = f.derivative();
        if g.is_zero() {
            for (h, m) in f.pth_root().square_free_decomposition() {
                out.push((h, m * p));
            }
            return out;
        }
        let mut c = f.gcd(&g);
        let mut w = f.div_exact(&c);
        let mut i = 1;
        while !w.is_one() {
            let y = w.gcd(&c);
            let z = w.div_exact(&y);
            if !z.is_one() {
                out.push((z, i));
            }
            i += 1;
            w = y;
            c = c.div_exact(&w);
        }
        if !c.is_one() {
            for (h, m) in c.pth_root().square_free_decomposition() {
                out.push((h, m * p));
            }
        }
        out
    }

    /// Distinct-degree factorization of a monic square-free polynomial.
    fn distinct_degree(&self) -> Vec<(Poly, usize)> {
        let f = self.field;
        let p = f.modulus() as u64;
        let mut a = self.clone();
        let mut out = Vec::new();
        let x = Poly::x(f);
        let mut h = x.rem(&a);
        let mut i = 1;
        while a.degree().unwrap_or(0) >= 2 * i {
            h = h.powmod(p, &a);
            let g = a.gcd(&h.sub(&x));
            if !g.is_one() {
                a = a.div_exact(&g);
                h = h.rem(&a);
                out.push((g, i));
            }
            i += 1;
        }
        if a.degree().unwrap_or(0) > 0 {
            let d = a.degree().unwrap();
            out.push((a, d));
        }
        out
    }

    /// Equal-degree splitting (Cantor–Zassenhaus); `self` is a product of distinct
    /// monic irreducibles of degree `d`.
    fn equal_degree<R: Rng>(&self, d: usize, rng: &mut R) -> Vec<Poly> {
        let n = self.degree().unwrap();
        if n == d {
            return vec![self.clone()];
        }
        let f = self.field;
        let p = f.modulus();
        loop {
            let u = Poly::new(f, (0..n).map(|_| rng.gen_range(0..p)).collect());
            if u.degree().unwrap_or(0) == 0 {
                continue;
            }
            let v = if p == 2 {
                let mut t = u.rem(self);
                let mut acc = t.clone();
                for _ in 1..d {
                    t = t.mulmod(&t, self);
                    acc = acc.add(&t);
                }
                acc
            } else {
                // u^((p^d - 1)/2) = (prod_k u^(p^k))^((p-1)/2)
                let mut frob = u.rem(self);
                let mut norm = frob.clone();
                for _ in 1..d {
                    frob = frob.powmod(p as u64, self);
                    norm = norm.mulmod(&frob, self);
                }
                norm.powmod((p as u64 - 1) / 2, self).sub(&Poly::one(f))
            };
            let g = self.gcd(&v);
            let dg = g.degree().unwrap_or(0);
            if dg > 0 && dg < n {
                let mut parts = g.equal_degree(d, rng);
                parts.extend(self.div_exact(&g).equal_degree(d, rng));
                return parts;
            }
        }
    }

    /// Complete factorization into monic irreducibles with multiplicities.
    pub fn factor<R: Rng>(&self, rng: &mut R) -> Factorization {
        assert!(!self.is_zero(), "cannot factor the zero polynomial");
        let unit = self.leading();
        let mut factors: Vec<(Poly, usize)> = Vec::new();
        for (sf, mult) in self.square_free_decomposition() {
            for (block, d) in sf.distinct_degree() {
                for irr in block.equal_degree(d, rng) {
                    factors.push((irr, mult));
                }
            }
        }
        factors.sort_by(|a, b| (a.0.coeffs.len(), &a.0.coeffs, a.1).cmp(&(b.0.coeffs.len(), &b.0.coeffs, b.1)));
        Factorization { unit, factors }
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}x")?,
                _ => write!(f, "{c}x^{i}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn gf(p: u32) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    fn rng() -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(7)
    }

    /// Oracle: all roots by exhaustive search.
    fn roots(p: &Poly) -> Vec<u32> {
        (0..p.field().modulus()).filter(|&x| p.eval(x) == 0).collect()
    }

    #[test]
    fn x_squared_is_a_double_root() {
        for p in [2, 3, 101] {
            let f = Poly::from_i64(gf(p), &[0, 0, 1]);
            let fac = f.factor(&mut rng());
            assert_eq!(fac.factors, vec![(Poly::x(gf(p)), 2)]);
        }
    }

    #[test]
    fn x2_plus_1_mod_5_splits() {
        let f = Poly::from_i64(gf(5), &[1, 0, 1]);
        assert_eq!(roots(&f), vec![2, 3]);
        let fac = f.factor(&mut rng());
        let lin: Vec<_> = fac.factors.iter().map(|(g, m)| (g.coeffs().to_vec(), *m)).collect();
        // x + 2 and x + 3
        assert_eq!(lin, vec![(vec![2, 1], 1), (vec![3, 1], 1)]);
    }

    #[test]
    fn x2_plus_1_mod_3_is_irreducible() {
        let f = Poly::from_i64(gf(3), &[1, 0, 1]);
        assert!(roots(&f).is_empty());
        let fac = f.factor(&mut rng());
        assert_eq!(fac.factors.len(), 1);
        assert_eq!(fac.factors[0].0, f);
    }

    #[test]
    fn pth_powers_in_small_characteristic() {
        // (x+1)^4 (x^2+x+1)^2 over GF(2)
        let f2 = gf(2);
        let a = Poly::from_i64(f2, &[1, 1]);
        let b = Poly::from_i64(f2, &[1, 1, 1]);
        let g = a.mul(&a).mul(&a).mul(&a).mul(&b).mul(&b);
        let fac = g.factor(&mut rng());
        assert_eq!(fac.factors, vec![(a, 4), (b, 2)]);
    }

    #[test]
    fn ext_gcd_bezout() {
        let f = gf(101);
        let a = Poly::from_i64(f, &[1, 0, 1]);
        let b = Poly::from_i64(f, &[3, 1]);
        let (g, s, t) = a.ext_gcd(&b);
        assert!(g.is_one());
        assert_eq!(s.mul(&a).add(&t.mul(&b)), g);
    }

    proptest! {
        #[test]
        fn factorization_expands_back(
            coeffs in prop::collection::vec(0i64..7, 1..9),
            p in prop::sample::select(vec![2u32, 3, 7, 101]),
        ) {
            let f = Poly::from_i64(gf(p), &coeffs);
            prop_assume!(!f.is_zero());
            let fac = f.factor(&mut rng());
            prop_assert_eq!(fac.expand(gf(p)), f);
            for (g, _) in &fac.factors {
                // irreducible: no proper factor of degree <= deg/2 via gcd with x^(p^i) - x
                let d = g.degree().unwrap();
                let x = Poly::x(gf(p));
                let mut h = x.clone();
                for _ in 1..=d / 2 {
                    h = h.powmod(p as u64, g);
                    prop_assert!(g.gcd(&h.sub(&x)).is_one());
                }
            }
        }
    }
}
