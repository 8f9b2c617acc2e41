//! Multivariate polynomials with exact rational coefficients.
//!
//! Terms are kept in a map keyed by [`Monomial`] whose ordering is graded
//! lexicographic, so iteration order (and therefore printing and
//! serialization) is canonical. Only nonzero coefficients are stored.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::scalar::{binomial, rat_int, sign, Rat};

/// Exponent vector of a monomial. Ordered by (total degree, then lex).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn degree(&self) -> i64 {
        self.0.iter().map(|&e| e as i64).sum()
    }

    pub fn unit(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A polynomial in `nvars` variables over [`Rat`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiPoly {
    nvars: usize,
    terms: BTreeMap<Monomial, Rat>,
}

impl MultiPoly {
    pub fn zero(nvars: usize) -> Self {
        MultiPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Rat::one())
    }

    pub fn constant(nvars: usize, c: Rat) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(Monomial::unit(nvars), c);
        p
    }

    /// The variable `z_i` (0-indexed).
    pub fn var(nvars: usize, i: usize) -> Self {
        assert!(i < nvars);
        let mut exp = vec![0; nvars];
        exp[i] = 1;
        let mut p = Self::zero(nvars);
        p.add_term(Monomial(exp), Rat::one());
        p
    }

    pub fn monomial(nvars: usize, mono: Monomial, coeff: Rat) -> Self {
        assert_eq!(mono.0.len(), nvars);
        let mut p = Self::zero(nvars);
        p.add_term(mono, coeff);
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Total degree; `-1` for the zero polynomial.
    pub fn degree(&self) -> i64 {
        self.terms.keys().map(|m| m.degree()).max().unwrap_or(-1)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in graded-lex ascending order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rat)> {
        self.terms.iter()
    }

    pub fn coeff(&self, mono: &Monomial) -> Rat {
        self.terms.get(mono).cloned().unwrap_or_else(Rat::zero)
    }

    /// Add `coeff * mono`, dropping the entry if the total cancels.
    pub fn add_term(&mut self, mono: Monomial, coeff: Rat) {
        assert_eq!(mono.0.len(), self.nvars);
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(mono) {
            alloc::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            alloc::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        let terms = self
            .terms
            .iter()
            .map(|(m, a)| (m.clone(), a * c))
            .collect();
        MultiPoly {
            nvars: self.nvars,
            terms,
        }
    }

    /// Exact evaluation at a rational point.
    pub fn eval(&self, point: &[Rat]) -> Rat {
        assert_eq!(point.len(), self.nvars);
        let mut acc = Rat::zero();
        for (mono, c) in &self.terms {
            let mut t = c.clone();
            for (v, &e) in point.iter().zip(&mono.0) {
                for _ in 0..e {
                    t *= v;
                }
            }
            acc += t;
        }
        acc
    }

    /// Substitute `z_i -> z_i + offset_i`.
    pub fn shift(&self, offset: &[Rat]) -> Self {
        assert_eq!(offset.len(), self.nvars);
        let mut out = Self::zero(self.nvars);
        for (mono, c) in &self.terms {
            let mut expanded = Self::constant(self.nvars, c.clone());
            for (i, &e) in mono.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                // (z_i + t)^e by binomial expansion
                let mut factor = Self::zero(self.nvars);
                for k in 0..=e {
                    let mut exp = vec![0; self.nvars];
                    exp[i] = k;
                    let mut pw = Rat::one();
                    for _ in 0..(e - k) {
                        pw *= &offset[i];
                    }
                    factor.add_term(Monomial(exp), binomial(&rat_int(e as i64), k as i64) * pw);
                }
                expanded = &expanded * &factor;
            }
            out = &out + &expanded;
        }
        out
    }

    /// Substitute `z -> -z`; flips the sign of every odd-degree term.
    pub fn substitute_neg(&self) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (m.clone(), c * sign(m.degree())))
            .collect();
        MultiPoly {
            nvars: self.nvars,
            terms,
        }
    }

    /// The homogeneous part of maximal total degree. Zero stays zero.
    pub fn top_component(&self) -> Self {
        let d = self.degree();
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.degree() == d)
            .map(|(m, c)| (m.clone(), c.clone()))
            .collect();
        MultiPoly {
            nvars: self.nvars,
            terms,
        }
    }

    /// Relabel variables: `z_i -> z_{perm[i]}`.
    pub fn permute_vars(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.nvars);
        let mut out = Self::zero(self.nvars);
        for (mono, c) in &self.terms {
            let mut exp = vec![0; self.nvars];
            for (i, &e) in mono.0.iter().enumerate() {
                exp[perm[i]] = e;
            }
            out.add_term(Monomial(exp), c.clone());
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.nvars);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        self.scale(&-Rat::one())
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = MultiPoly::zero(self.nvars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                let exp: Vec<u32> = ma.0.iter().zip(&mb.0).map(|(a, b)| a + b).collect();
                out.add_term(Monomial(exp), ca * cb);
            }
        }
        out
    }
}

/// `p (p - 1) ... (p - k + 1) / k!` with a polynomial argument; one for `k <= 0`.
pub fn binomial_poly(p: &MultiPoly, k: i64) -> MultiPoly {
    let n = p.nvars();
    let mut acc = MultiPoly::one(n);
    for j in 0..k.max(0) {
        acc = &acc * &(p - &MultiPoly::constant(n, rat_int(j)));
    }
    acc.scale(&(Rat::one() / crate::scalar::factorial(k.max(0))))
}

/// `p (p + 1) ... (p + k - 1)` with a polynomial argument.
pub fn pochhammer_poly(p: &MultiPoly, k: i64) -> MultiPoly {
    assert!(k >= 0);
    let n = p.nvars();
    let mut acc = MultiPoly::one(n);
    for j in 0..k {
        acc = &acc * &(p + &MultiPoly::constant(n, rat_int(j)));
    }
    acc
}

/// Render one monomial, e.g. `z1^2*z3`; the unit monomial renders empty.
/// A single variable is called plain `z`.
pub fn monomial_string(nvars: usize, mono: &Monomial) -> String {
    let mut parts: Vec<String> = Vec::new();
    for (i, &e) in mono.0.iter().enumerate() {
        if e == 0 {
            continue;
        }
        let name = if nvars == 1 {
            String::from("z")
        } else {
            alloc::format!("z{}", i + 1)
        };
        if e == 1 {
            parts.push(name);
        } else {
            parts.push(alloc::format!("{name}^{e}"));
        }
    }
    parts.join("*")
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        // Leading (graded-lex greatest) term first.
        for (i, (mono, c)) in self.terms.iter().rev().enumerate() {
            let neg = c < &Rat::zero();
            let mag = if neg { -c.clone() } else { c.clone() };
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let ms = monomial_string(self.nvars, mono);
            if ms.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{ms}")?;
            } else {
                write!(f, "{mag}*{ms}")?;
            }
        }
        Ok(())
    }
}
