//! Combinatorial weight data for the three supported cases.
//!
//! A [`RootDatum`] packages the space `V = Q^n`, the reflection group `W`
//! (given by permutation generators), the dominant-weight monoid and its
//! generators, the pseudoroot set `Phi` with its positive part, the root
//! system `Delta` of `W`, and the degree form `ell`. The three cases:
//!
//! - `rank-one`: n = 1, trivial group, `ell(v) = v`.
//! - `classical`: full symmetric group, partitions, `ell(v) = sum v_i`.
//! - `semiclassical`: parity-preserving permutations, partitions,
//!   `ell(v) = sum of v_i over odd positions` (1-indexed).
//!
//! The derived sets are built from the closed forms of the respective
//! case; small instances are frozen in tests.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::poly::{Monomial, MultiPoly};
use crate::scalar::{rat_int, Rat};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Case {
    RankOne,
    Classical,
    Semiclassical,
}

impl Case {
    pub fn name(&self) -> &'static str {
        match self {
            Case::RankOne => "rank-one",
            Case::Classical => "classical",
            Case::Semiclassical => "semiclassical",
        }
    }

    pub fn parse(text: &str) -> Result<Case> {
        match text {
            "rank-one" => Ok(Case::RankOne),
            "classical" => Ok(Case::Classical),
            "semiclassical" => Ok(Case::Semiclassical),
            other => Err(Error::UnsupportedCase(other.to_string())),
        }
    }
}

/// Integer weight vector (an element of the weight lattice).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn add(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn as_points(&self) -> Vec<Rat> {
        self.0.iter().map(|&c| rat_int(c)).collect()
    }
}

/// Element of the dual space: a linear form with exact coefficients.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct LinearForm(pub Vec<Rat>);

impl LinearForm {
    pub fn from_ints(coeffs: &[i64]) -> Self {
        LinearForm(coeffs.iter().map(|&c| rat_int(c)).collect())
    }

    /// `z_i - z_j` (0-indexed) in `n` variables.
    pub fn difference(n: usize, i: usize, j: usize) -> Self {
        let mut c = vec![0i64; n];
        c[i] = 1;
        c[j] = -1;
        Self::from_ints(&c)
    }

    /// `z_i` (0-indexed) in `n` variables.
    pub fn coordinate(n: usize, i: usize) -> Self {
        let mut c = vec![0i64; n];
        c[i] = 1;
        Self::from_ints(&c)
    }

    pub fn eval(&self, v: &[Rat]) -> Rat {
        self.0
            .iter()
            .zip(v)
            .fold(Rat::zero(), |acc, (c, x)| acc + c * x)
    }

    pub fn eval_weight(&self, w: &Weight) -> Rat {
        self.0
            .iter()
            .zip(&w.0)
            .fold(Rat::zero(), |acc, (c, &x)| acc + c * rat_int(x))
    }

    /// Integer value on an integer vector; all stored forms have integer
    /// coefficients so this cannot fail for lattice arguments.
    pub fn depth(&self, w: &Weight) -> i64 {
        let v = self.eval_weight(w);
        debug_assert!(v.is_integer());
        v.to_integer().to_i64().expect("depth fits in i64")
    }

    pub fn neg(&self) -> Self {
        LinearForm(self.0.iter().map(|c| -c.clone()).collect())
    }

    /// Pullback along the coordinate permutation `w`: returns the form
    /// `v -> self(w v)` where `(w v)_{w(i)} = v_i`.
    pub fn compose_perm(&self, perm: &[usize]) -> Self {
        LinearForm((0..self.0.len()).map(|j| self.0[perm[j]].clone()).collect())
    }

    pub fn to_poly(&self, n: usize) -> MultiPoly {
        let mut p = MultiPoly::zero(n);
        for (i, c) in self.0.iter().enumerate() {
            if !c.is_zero() {
                let mut exp = vec![0u32; n];
                exp[i] = 1;
                p.add_term(Monomial(exp), c.clone());
            }
        }
        p
    }
}

/// The full combinatorial quadruple with its derived sets.
#[derive(Clone, Debug)]
pub struct RootDatum {
    case: Case,
    n: usize,
    ell: LinearForm,
    /// Minimal generators of the dominant monoid: `e_1 + ... + e_i`.
    sigma_check: Vec<Weight>,
    /// Dual basis of `sigma_check`.
    sigma: Vec<LinearForm>,
    /// Degree-one generators of the full shift monoid.
    lambda1: Vec<Weight>,
    /// Pseudoroots, positive part first.
    phi: Vec<LinearForm>,
    phi_plus_len: usize,
    /// Roots of `W`, positive part first.
    delta: Vec<LinearForm>,
    delta_plus_len: usize,
    /// Permutation generators of `W` (as images: `i -> perm[i]`).
    w_gens: Vec<Vec<usize>>,
    /// For each pseudoroot, the index in `sigma` of its `+-W`-orbit
    /// representative; this is where multiplicities are read off.
    k_source: Vec<usize>,
}

impl RootDatum {
    pub fn new(case: Case, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::UnsupportedCase("n must be at least 1".to_string()));
        }
        if case == Case::RankOne && n != 1 {
            return Err(Error::UnsupportedCase(
                "rank-one data is one-dimensional".to_string(),
            ));
        }

        let ell = match case {
            Case::RankOne => LinearForm::from_ints(&[1]),
            Case::Classical => LinearForm::from_ints(&vec![1; n]),
            Case::Semiclassical => {
                LinearForm((0..n).map(|i| rat_int(if i % 2 == 0 { 1 } else { 0 })).collect())
            }
        };

        let sigma_check: Vec<Weight> = (0..n)
            .map(|i| {
                let mut c = vec![0i64; n];
                for slot in c.iter_mut().take(i + 1) {
                    *slot = 1;
                }
                Weight(c)
            })
            .collect();
        let mut sigma: Vec<LinearForm> = (0..n.saturating_sub(1))
            .map(|i| LinearForm::difference(n, i, i + 1))
            .collect();
        sigma.push(LinearForm::coordinate(n, n - 1));

        let w_gens: Vec<Vec<usize>> = match case {
            Case::RankOne => vec![],
            Case::Classical => (0..n.saturating_sub(1)).map(|i| transposition(n, i, i + 1)).collect(),
            Case::Semiclassical => (0..n.saturating_sub(2)).map(|i| transposition(n, i, i + 2)).collect(),
        };

        // Pseudoroots from the per-case closed form; positive part first,
        // deterministic order within each part.
        let mut phi_plus: Vec<LinearForm> = Vec::new();
        let mut phi_rest: Vec<LinearForm> = Vec::new();
        match case {
            Case::RankOne => phi_plus.push(LinearForm::coordinate(1, 0)),
            Case::Classical => {
                for i in 0..n {
                    for j in (i + 1)..n {
                        phi_plus.push(LinearForm::difference(n, i, j));
                        phi_rest.push(LinearForm::difference(n, j, i));
                    }
                }
                for i in 0..n {
                    phi_plus.push(LinearForm::coordinate(n, i));
                }
            }
            Case::Semiclassical => {
                for i in 0..n {
                    for j in (i + 1)..n {
                        if (j - i) % 2 == 1 {
                            phi_plus.push(LinearForm::difference(n, i, j));
                            phi_rest.push(LinearForm::difference(n, j, i));
                        }
                    }
                }
                for i in 0..n {
                    // 1-indexed condition: n - i even.
                    if (n - (i + 1)).is_multiple_of(2) {
                        phi_plus.push(LinearForm::coordinate(n, i));
                    }
                }
            }
        }
        let phi_plus_len = phi_plus.len();
        let mut phi = phi_plus;
        phi.extend(phi_rest);

        // Roots of W: all coordinate differences moved by some reflection.
        let mut delta_plus: Vec<LinearForm> = Vec::new();
        let mut delta_rest: Vec<LinearForm> = Vec::new();
        match case {
            Case::RankOne => {}
            Case::Classical => {
                for i in 0..n {
                    for j in (i + 1)..n {
                        delta_plus.push(LinearForm::difference(n, i, j));
                        delta_rest.push(LinearForm::difference(n, j, i));
                    }
                }
            }
            Case::Semiclassical => {
                for i in 0..n {
                    for j in (i + 1)..n {
                        if (j - i) % 2 == 0 {
                            delta_plus.push(LinearForm::difference(n, i, j));
                            delta_rest.push(LinearForm::difference(n, j, i));
                        }
                    }
                }
            }
        }
        let delta_plus_len = delta_plus.len();
        let mut delta = delta_plus;
        delta.extend(delta_rest);

        let mut datum = RootDatum {
            case,
            n,
            ell,
            sigma_check,
            sigma,
            lambda1: Vec::new(),
            phi,
            phi_plus_len,
            delta,
            delta_plus_len,
            w_gens,
            k_source: Vec::new(),
        };

        // Degree-one monoid generators: the W-orbits of the degree-one
        // elements of sigma_check.
        let mut lambda1: BTreeSet<Weight> = BTreeSet::new();
        for gen in &datum.sigma_check {
            if datum.ell.depth(gen) == 1 {
                for w in datum.weight_orbit(gen) {
                    lambda1.insert(w);
                }
            }
        }
        datum.lambda1 = lambda1.into_iter().collect();

        // Multiplicity sources: each pseudoroot is matched with the element
        // of sigma lying in its +-W-orbit.
        let mut k_source = Vec::with_capacity(datum.phi.len());
        for omega in &datum.phi {
            let orbit = datum.signed_form_orbit(omega);
            let idx = datum
                .sigma
                .iter()
                .position(|s| orbit.contains(s))
                .expect("every pseudoroot meets sigma up to sign and W");
            k_source.push(idx);
        }
        datum.k_source = k_source;

        Ok(datum)
    }

    pub fn case(&self) -> Case {
        self.case
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn ell_form(&self) -> &LinearForm {
        &self.ell
    }

    pub fn ell_poly(&self) -> MultiPoly {
        self.ell.to_poly(self.n)
    }

    pub fn ell(&self, w: &Weight) -> i64 {
        self.ell.depth(w)
    }

    pub fn sigma_check(&self) -> &[Weight] {
        &self.sigma_check
    }

    pub fn sigma(&self) -> &[LinearForm] {
        &self.sigma
    }

    pub fn lambda1(&self) -> &[Weight] {
        &self.lambda1
    }

    pub fn phi(&self) -> &[LinearForm] {
        &self.phi
    }

    pub fn phi_plus(&self) -> &[LinearForm] {
        &self.phi[..self.phi_plus_len]
    }

    pub fn delta(&self) -> &[LinearForm] {
        &self.delta
    }

    pub fn delta_plus(&self) -> &[LinearForm] {
        &self.delta[..self.delta_plus_len]
    }

    pub fn w_gens(&self) -> &[Vec<usize>] {
        &self.w_gens
    }

    pub fn k_source(&self, phi_index: usize) -> usize {
        self.k_source[phi_index]
    }

    /// Index of a form inside `phi`, if present.
    pub fn phi_index(&self, form: &LinearForm) -> Option<usize> {
        self.phi.iter().position(|f| f == form)
    }

    // ---- Monoid membership ----

    /// Membership in the dominant monoid.
    pub fn in_lambda_plus(&self, v: &[i64]) -> bool {
        if v.len() != self.n {
            return false;
        }
        match self.case {
            Case::RankOne => v[0] >= 0,
            Case::Classical | Case::Semiclassical => {
                v.windows(2).all(|w| w[0] >= w[1]) && *v.last().unwrap() >= 0
            }
        }
    }

    /// Membership in the full shift monoid (closed forms per case).
    pub fn in_lambda(&self, v: &[i64]) -> bool {
        if v.len() != self.n {
            return false;
        }
        match self.case {
            Case::RankOne => v[0] >= 0,
            Case::Classical => v.iter().all(|&c| c >= 0),
            Case::Semiclassical => {
                v.iter().all(|&c| c >= 0)
                    && v.iter().step_by(2).sum::<i64>() >= v.iter().skip(1).step_by(2).sum::<i64>()
            }
        }
    }

    // ---- Enumeration ----

    /// All dominant weights with `ell <= max_ell`, ordered by `(ell, lex)`.
    pub fn weights_up_to(&self, max_ell: i64) -> Vec<Weight> {
        let mut out: Vec<Weight> = enumerate_boxed(self.n, max_ell.max(0))
            .into_iter()
            .filter(|w| self.in_lambda_plus(&w.0) && self.ell(w) <= max_ell)
            .collect();
        out.sort_by(|a, b| self.ell(a).cmp(&self.ell(b)).then_with(|| a.cmp(b)));
        out
    }

    /// All shift-monoid elements with `ell <= max_ell`, ordered by `(ell, lex)`.
    pub fn lambda_monoid_up_to(&self, max_ell: i64) -> Vec<Weight> {
        let mut out: Vec<Weight> = enumerate_boxed(self.n, max_ell.max(0))
            .into_iter()
            .filter(|w| self.in_lambda(&w.0) && self.ell(w) <= max_ell)
            .collect();
        out.sort_by(|a, b| self.ell(a).cmp(&self.ell(b)).then_with(|| a.cmp(b)));
        out
    }

    // ---- Group action ----

    /// Orbit of a lattice vector under `W`.
    pub fn weight_orbit(&self, w: &Weight) -> Vec<Weight> {
        let mut seen: BTreeSet<Weight> = BTreeSet::new();
        let mut queue = vec![w.clone()];
        seen.insert(w.clone());
        while let Some(cur) = queue.pop() {
            for g in &self.w_gens {
                let mut img = vec![0i64; self.n];
                for (i, &c) in cur.0.iter().enumerate() {
                    img[g[i]] = c;
                }
                let img = Weight(img);
                if seen.insert(img.clone()) {
                    queue.push(img);
                }
            }
        }
        seen.into_iter().collect()
    }

    /// Orbit of a linear form under `W` and negation.
    fn signed_form_orbit(&self, form: &LinearForm) -> BTreeSet<LinearForm> {
        let mut seen: BTreeSet<LinearForm> = BTreeSet::new();
        let mut queue = vec![form.clone(), form.neg()];
        for f in &queue {
            seen.insert(f.clone());
        }
        while let Some(cur) = queue.pop() {
            for g in &self.w_gens {
                let img = cur.compose_perm(g);
                if seen.insert(img.clone()) {
                    queue.push(img);
                }
            }
        }
        seen
    }

    /// Orbit of a linear form under `W` only.
    pub fn form_orbit(&self, form: &LinearForm) -> Vec<LinearForm> {
        let mut seen: BTreeSet<LinearForm> = BTreeSet::new();
        let mut queue = vec![form.clone()];
        seen.insert(form.clone());
        while let Some(cur) = queue.pop() {
            for g in &self.w_gens {
                let img = cur.compose_perm(g);
                if seen.insert(img.clone()) {
                    queue.push(img);
                }
            }
        }
        seen.into_iter().collect()
    }

    // ---- Invariants ----

    /// Sum of the monomials in the `W`-orbit of `mono`, each with coefficient 1.
    pub fn orbit_sum(&self, mono: &Monomial) -> MultiPoly {
        let mut seen: BTreeSet<Vec<u32>> = BTreeSet::new();
        let mut queue = vec![mono.0.clone()];
        seen.insert(mono.0.clone());
        while let Some(cur) = queue.pop() {
            for g in &self.w_gens {
                let mut img = vec![0u32; self.n];
                for (i, &e) in cur.iter().enumerate() {
                    img[g[i]] = e;
                }
                if seen.insert(img.clone()) {
                    queue.push(img);
                }
            }
        }
        let mut p = MultiPoly::zero(self.n);
        for exp in seen {
            p.add_term(Monomial(exp), rat_int(1));
        }
        p
    }

    /// One orbit sum per `W`-orbit of monomials of total degree at most
    /// `degree_bound`, ordered by (degree, then lex-descending dominant
    /// exponent). The dominant exponent of an orbit is its lex-greatest member.
    pub fn orbit_monomial_basis(&self, degree_bound: i64) -> Vec<MultiPoly> {
        let mut reps: BTreeMap<(i64, Vec<i64>), Monomial> = BTreeMap::new();
        for exp in enumerate_exponents(self.n, degree_bound.max(0)) {
            let mono = Monomial(exp);
            let rep = self.dominant_exponent(&mono);
            // Key sorts ascending; negate the exponent for lex-descending.
            let key = (
                rep.degree(),
                rep.0.iter().map(|&e| -(e as i64)).collect::<Vec<i64>>(),
            );
            reps.entry(key).or_insert(rep);
        }
        reps.into_values().map(|rep| self.orbit_sum(&rep)).collect()
    }

    /// Lex-greatest member of the `W`-orbit of a monomial.
    pub fn dominant_exponent(&self, mono: &Monomial) -> Monomial {
        let mut seen: BTreeSet<Vec<u32>> = BTreeSet::new();
        let mut queue = vec![mono.0.clone()];
        seen.insert(mono.0.clone());
        while let Some(cur) = queue.pop() {
            for g in &self.w_gens {
                let mut img = vec![0u32; self.n];
                for (i, &e) in cur.iter().enumerate() {
                    img[g[i]] = e;
                }
                if seen.insert(img.clone()) {
                    queue.push(img);
                }
            }
        }
        Monomial(seen.into_iter().next_back().unwrap())
    }

    /// Is `p` fixed by every generator of `W`?
    pub fn is_invariant(&self, p: &MultiPoly) -> bool {
        self.w_gens.iter().all(|g| &p.permute_vars(g) == p)
    }

    /// The preferred `W`-fixed generator of the dominant monoid, when one
    /// exists; ties resolve to the all-ones vector.
    pub fn fixed_generator(&self) -> Option<Weight> {
        self.sigma_check
            .iter()
            .rev()
            .find(|s| {
                self.w_gens.iter().all(|g| {
                    let mut img = vec![0i64; self.n];
                    for (i, &c) in s.0.iter().enumerate() {
                        img[g[i]] = c;
                    }
                    img == s.0
                })
            })
            .cloned()
    }
}

fn transposition(n: usize, i: usize, j: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    p.swap(i, j);
    p
}

/// All nonnegative integer vectors with every coordinate at most `bound`.
fn enumerate_boxed(n: usize, bound: i64) -> Vec<Weight> {
    let mut out = Vec::new();
    let mut cur = vec![0i64; n];
    loop {
        out.push(Weight(cur.clone()));
        let mut i = 0;
        loop {
            if i == n {
                return out;
            }
            if cur[i] < bound {
                cur[i] += 1;
                for slot in cur.iter_mut().take(i) {
                    *slot = 0;
                }
                break;
            }
            i += 1;
        }
    }
}

/// All exponent vectors with total degree at most `bound`.
fn enumerate_exponents(n: usize, bound: i64) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur = vec![0u32; n];
    fn rec(out: &mut Vec<Vec<u32>>, cur: &mut Vec<u32>, pos: usize, left: i64) {
        if pos == cur.len() {
            out.push(cur.clone());
            return;
        }
        for e in 0..=left {
            cur[pos] = e as u32;
            rec(out, cur, pos + 1, left - e);
        }
        cur[pos] = 0;
    }
    rec(&mut out, &mut cur, 0, bound);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn forms(set: &[LinearForm]) -> BTreeSet<Vec<i64>> {
        set.iter()
            .map(|f| {
                f.0.iter()
                    .map(|c| {
                        assert!(c.is_integer());
                        c.to_integer().to_i64().unwrap()
                    })
                    .collect()
            })
            .collect()
    }

    fn weight_set(set: &[Weight]) -> BTreeSet<Vec<i64>> {
        set.iter().map(|w| w.0.clone()).collect()
    }

    #[test]
    fn classical_two_matches_printed_table() {
        let d = RootDatum::new(Case::Classical, 2).unwrap();
        assert_eq!(weight_set(d.lambda1()), BTreeSet::from([vec![1, 0], vec![0, 1]]));
        assert_eq!(
            forms(d.phi()),
            BTreeSet::from([vec![1, -1], vec![-1, 1], vec![1, 0], vec![0, 1]])
        );
        assert_eq!(forms(d.delta()), BTreeSet::from([vec![1, -1], vec![-1, 1]]));
        assert_eq!(forms(d.delta_plus()), BTreeSet::from([vec![1, -1]]));
        assert_eq!(
            forms(d.phi_plus()),
            BTreeSet::from([vec![1, -1], vec![1, 0], vec![0, 1]])
        );
        assert_eq!(
            weight_set(d.sigma_check()),
            BTreeSet::from([vec![1, 0], vec![1, 1]])
        );
    }

    #[test]
    fn semiclassical_two_matches_printed_table() {
        let d = RootDatum::new(Case::Semiclassical, 2).unwrap();
        assert_eq!(
            weight_set(d.lambda1()),
            BTreeSet::from([vec![1, 0], vec![1, 1]])
        );
        assert_eq!(
            forms(d.phi()),
            BTreeSet::from([vec![1, -1], vec![-1, 1], vec![0, 1]])
        );
        assert!(d.delta().is_empty());
        assert_eq!(forms(d.phi_plus()), BTreeSet::from([vec![1, -1], vec![0, 1]]));
        // W is trivial: the only parity-preserving permutation of two slots.
        assert!(d.w_gens().is_empty());
    }

    #[test]
    fn semiclassical_three_matches_printed_table() {
        let d = RootDatum::new(Case::Semiclassical, 3).unwrap();
        assert_eq!(
            weight_set(d.lambda1()),
            BTreeSet::from([vec![1, 0, 0], vec![0, 0, 1], vec![1, 1, 0], vec![0, 1, 1]])
        );
        assert_eq!(
            forms(d.phi()),
            BTreeSet::from([
                vec![1, -1, 0],
                vec![-1, 1, 0],
                vec![0, 1, -1],
                vec![0, -1, 1],
                vec![1, 0, 0],
                vec![0, 0, 1],
            ])
        );
        assert_eq!(
            forms(d.delta()),
            BTreeSet::from([vec![1, 0, -1], vec![-1, 0, 1]])
        );
        // ell is the sum over odd (1-indexed) positions.
        assert_eq!(d.ell(&Weight(vec![2, 1, 1])), 3);
    }

    #[test]
    fn rank_one_matches_closed_form() {
        let d = RootDatum::new(Case::RankOne, 1).unwrap();
        assert_eq!(forms(d.phi()), BTreeSet::from([vec![1]]));
        assert_eq!(forms(d.phi_plus()), BTreeSet::from([vec![1]]));
        assert!(d.delta().is_empty());
        assert_eq!(weight_set(d.lambda1()), BTreeSet::from([vec![1]]));
        assert!(RootDatum::new(Case::RankOne, 2).is_err());
    }

    #[test]
    fn phi_is_stable_under_w() {
        for (case, n) in [
            (Case::Classical, 2),
            (Case::Classical, 3),
            (Case::Semiclassical, 2),
            (Case::Semiclassical, 3),
            (Case::Semiclassical, 4),
        ] {
            let d = RootDatum::new(case, n).unwrap();
            let phi = forms(d.phi());
            for g in d.w_gens() {
                for f in d.phi() {
                    let img = f.compose_perm(g);
                    let key = forms(core::slice::from_ref(&img))
                        .into_iter()
                        .next()
                        .unwrap();
                    assert!(phi.contains(&key));
                }
            }
        }
    }

    #[test]
    fn lambda1_has_degree_one_and_lies_in_lambda() {
        for (case, n) in [
            (Case::RankOne, 1),
            (Case::Classical, 2),
            (Case::Classical, 3),
            (Case::Semiclassical, 2),
            (Case::Semiclassical, 3),
            (Case::Semiclassical, 4),
        ] {
            let d = RootDatum::new(case, n).unwrap();
            for eta in d.lambda1() {
                assert_eq!(d.ell(eta), 1);
                assert!(d.in_lambda(&eta.0));
            }
        }
    }

    #[test]
    fn lambda_membership_closed_forms() {
        let c = RootDatum::new(Case::Classical, 2).unwrap();
        assert!(!c.in_lambda(&[1, -1]));
        assert!(c.in_lambda(&[0, 2]));
        assert!(c.in_lambda(&[0, 0]));
        let s = RootDatum::new(Case::Semiclassical, 2).unwrap();
        assert!(s.in_lambda(&[1, 1]));
        assert!(!s.in_lambda(&[0, 1]));
        assert!(s.in_lambda(&[0, 0]));
    }

    #[test]
    fn weight_enumeration_examples() {
        let r = RootDatum::new(Case::RankOne, 1).unwrap();
        assert_eq!(
            r.weights_up_to(3),
            vec![
                Weight(vec![0]),
                Weight(vec![1]),
                Weight(vec![2]),
                Weight(vec![3])
            ]
        );
        let c = RootDatum::new(Case::Classical, 2).unwrap();
        assert_eq!(
            c.weights_up_to(2),
            vec![
                Weight(vec![0, 0]),
                Weight(vec![1, 0]),
                Weight(vec![1, 1]),
                Weight(vec![2, 0])
            ]
        );
        let s = RootDatum::new(Case::Semiclassical, 2).unwrap();
        assert_eq!(
            s.weights_up_to(1),
            vec![Weight(vec![0, 0]), Weight(vec![1, 0]), Weight(vec![1, 1])]
        );
    }

    #[test]
    fn semiclassical_weights_match_brute_force() {
        // Independent enumeration: filter decreasing vectors by the degree form.
        let d = RootDatum::new(Case::Semiclassical, 3).unwrap();
        let mut brute: Vec<Weight> = Vec::new();
        for a in 0..=4i64 {
            for b in 0..=a {
                for c in 0..=b {
                    if a + c <= 4 {
                        brute.push(Weight(vec![a, b, c]));
                    }
                }
            }
        }
        brute.sort_by(|x, y| d.ell(x).cmp(&d.ell(y)).then_with(|| x.cmp(y)));
        assert_eq!(d.weights_up_to(4), brute);
    }

    #[test]
    fn orbit_basis_examples() {
        let c = RootDatum::new(Case::Classical, 2).unwrap();
        let basis = c.orbit_monomial_basis(1);
        assert_eq!(basis.len(), 2);
        assert_eq!(alloc::format!("{}", basis[0]), "1");
        assert_eq!(alloc::format!("{}", basis[1]), "z1 + z2");

        let r = RootDatum::new(Case::RankOne, 1).unwrap();
        let basis = r.orbit_monomial_basis(2);
        let printed: Vec<_> = basis.iter().map(|p| alloc::format!("{p}")).collect();
        assert_eq!(printed, vec!["1", "z", "z^2"]);

        // W is trivial for two semiclassical slots, so orbits are single monomials.
        let s = RootDatum::new(Case::Semiclassical, 2).unwrap();
        let printed: Vec<_> = s
            .orbit_monomial_basis(1)
            .iter()
            .map(|p| alloc::format!("{p}"))
            .collect();
        assert_eq!(printed, vec!["1", "z1", "z2"]);
    }

    #[test]
    fn orbit_basis_is_invariant_and_counts_weights() {
        for (case, n) in [
            (Case::Classical, 2),
            (Case::Classical, 3),
            (Case::Semiclassical, 2),
            (Case::Semiclassical, 3),
        ] {
            let d = RootDatum::new(case, n).unwrap();
            for bound in 0..=4i64 {
                let basis = d.orbit_monomial_basis(bound);
                for p in &basis {
                    assert!(d.is_invariant(p));
                }
                assert_eq!(
                    basis.len(),
                    d.weights_up_to(bound).len(),
                    "{} n={} degree {}",
                    case.name(),
                    n,
                    bound
                );
            }
        }
    }

    #[test]
    fn fixed_generator_is_all_ones() {
        for (case, n) in [
            (Case::RankOne, 1),
            (Case::Classical, 3),
            (Case::Semiclassical, 2),
            (Case::Semiclassical, 4),
        ] {
            let d = RootDatum::new(case, n).unwrap();
            assert_eq!(d.fixed_generator(), Some(Weight(vec![1; n])));
        }
    }
}
