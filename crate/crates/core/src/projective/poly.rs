use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::point::V3;

/// A polynomial in x0, x1, x2 with integer coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Poly {
    terms: BTreeMap<[u32; 3], BigInt>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn constant(c: BigInt) -> Self {
        let mut p = Poly::zero();
        p.add_term([0, 0, 0], c);
        p
    }

    pub fn var(i: usize) -> Self {
        let mut e = [0; 3];
        e[i] = 1;
        let mut p = Poly::zero();
        p.add_term(e, BigInt::one());
        p
    }

    /// a0 x0 + a1 x1 + a2 x2.
    pub fn linear(a: &V3) -> Self {
        let mut p = Poly::zero();
        for (i, c) in a.iter().enumerate() {
            let mut e = [0; 3];
            e[i] = 1;
            p.add_term(e, c.clone());
        }
        p
    }

    pub fn add_term(&mut self, e: [u32; 3], c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32; 3], &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, e: [u32; 3]) -> BigInt {
        self.terms.get(&e).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|e| e.iter().sum::<u32>());
        match degs.next() {
            Some(d) => degs.all(|x| x == d),
            None => true,
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let mut p = self.clone();
        for (e, c) in &other.terms {
            p.add_term(*e, c.clone());
        }
        p
    }

    pub fn scale(&self, k: &BigInt) -> Poly {
        let mut p = Poly::zero();
        for (e, c) in &self.terms {
            p.add_term(*e, c * k);
        }
        p
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let mut p = Poly::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                p.add_term([ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]], ca * cb);
            }
        }
        p
    }

    pub fn pow(&self, n: u32) -> Poly {
        let mut acc = Poly::constant(BigInt::one());
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn eval(&self, x: &V3) -> BigInt {
        self.terms
            .iter()
            .map(|(e, c)| c * x[0].pow(e[0]) * x[1].pow(e[1]) * x[2].pow(e[2]))
            .sum()
    }

    /// Substitutes `subs[i]` for x_i.
    pub fn substitute(&self, subs: &[Poly; 3]) -> Poly {
        let mut out = Poly::zero();
        let mut cache: BTreeMap<(usize, u32), Poly> = BTreeMap::new();
        for (e, c) in &self.terms {
            let mut term = Poly::constant(c.clone());
            for i in 0..3 {
                if e[i] > 0 {
                    let f = cache.entry((i, e[i])).or_insert_with(|| subs[i].pow(e[i]));
                    term = term.mul(f);
                }
            }
            out = out.add(&term);
        }
        out
    }

    /// Substitutes the linear forms given by the rows of `m`: x_i -> m[i] . x.
    pub fn linear_substitute(&self, m: &[V3; 3]) -> Poly {
        self.substitute(&[Poly::linear(&m[0]), Poly::linear(&m[1]), Poly::linear(&m[2])])
    }

    /// Divides out the largest monomial factor; returns it with the quotient.
    pub fn strip_monomial(&self) -> (Poly, [u32; 3]) {
        if self.is_zero() {
            return (Poly::zero(), [0; 3]);
        }
        let mut m = [u32::MAX; 3];
        for e in self.terms.keys() {
            for i in 0..3 {
                m[i] = m[i].min(e[i]);
            }
        }
        let mut p = Poly::zero();
        for (e, c) in &self.terms {
            p.add_term([e[0] - m[0], e[1] - m[1], e[2] - m[2]], c.clone());
        }
        (p, m)
    }

    /// Content removed, leading coefficient positive.
    pub fn primitive(&self) -> Poly {
        let g = self.terms.values().fold(BigInt::zero(), |g, c| g.gcd(c));
        if g.is_zero() {
            return Poly::zero();
        }
        let lead_negative = self.terms.values().next_back().is_some_and(|c| c.is_negative());
        let g = if lead_negative { -g } else { g };
        let mut p = Poly::zero();
        for (e, c) in &self.terms {
            p.add_term(*e, c / &g);
        }
        p
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            let mono: Vec<String> = (0..3)
                .filter(|&i| e[i] > 0)
                .map(|i| if e[i] == 1 { format!("x{i}") } else { format!("x{i}^{}", e[i]) })
                .collect();
            let mag = c.abs();
            let sep = match (first, c.is_negative()) {
                (true, true) => "-",
                (true, false) => "",
                (false, true) => " - ",
                (false, false) => " + ",
            };
            write!(f, "{sep}")?;
            if mono.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{}", mono.join("*"))?;
            } else {
                write!(f, "{mag}*{}", mono.join("*"))?;
            }
            first = false;
        }
        Ok(())
    }
}
