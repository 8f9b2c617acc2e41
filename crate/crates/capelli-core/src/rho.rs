//! The two-parameter shift vector and its nondegeneracy predicates.

use alloc::vec::Vec;


use crate::datum::{LinearForm, RootDatum, Weight};
use crate::scalar::{in_z, in_z_neg, in_z_nonpos, rat_int, Rat};

/// The point with coordinates `(n - i) r + s` (1-indexed `i`). For the
/// one-dimensional case this is just `s`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rho {
    r: Rat,
    s: Rat,
    coords: Vec<Rat>,
}

impl Rho {
    pub fn new(datum: &RootDatum, r: Rat, s: Rat) -> Self {
        let n = datum.n();
        let coords = (0..n)
            .map(|i| rat_int((n - 1 - i) as i64) * &r + &s)
            .collect();
        Rho { r, s, coords }
    }

    pub fn r(&self) -> &Rat {
        &self.r
    }

    pub fn s(&self) -> &Rat {
        &self.s
    }

    pub fn coords(&self) -> &[Rat] {
        &self.coords
    }

    pub fn minus_coords(&self) -> Vec<Rat> {
        self.coords.iter().map(|c| -c.clone()).collect()
    }

    /// The point `rho + lambda`.
    pub fn plus(&self, lambda: &Weight) -> Vec<Rat> {
        self.coords
            .iter()
            .zip(&lambda.0)
            .map(|(c, &x)| c + rat_int(x))
            .collect()
    }

    /// The point `-rho - lambda`.
    pub fn minus(&self, lambda: &Weight) -> Vec<Rat> {
        self.coords
            .iter()
            .zip(&lambda.0)
            .map(|(c, &x)| -(c + rat_int(x)))
            .collect()
    }

    /// Multiplicity attached to the pseudoroot with index `phi_index`: the
    /// value at `rho` of the orbit representative inside the dual basis.
    pub fn k_at(&self, datum: &RootDatum, phi_index: usize) -> Rat {
        datum.sigma()[datum.k_source(phi_index)].eval(&self.coords)
    }

    /// Multiplicity for an arbitrary form of the pseudoroot set.
    pub fn k_of(&self, datum: &RootDatum, form: &LinearForm) -> Option<Rat> {
        datum.phi_index(form).map(|i| self.k_at(datum, i))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Dominance {
    pub dominant: bool,
    pub non_integral: bool,
    pub strongly_dominant: bool,
}

/// Exact nondegeneracy flags, computed over the positive roots and
/// positive pseudoroots.
pub fn dominance_class(datum: &RootDatum, rho: &Rho) -> Dominance {
    let mut dominant = true;
    let mut non_integral = true;
    let mut strongly_dominant = true;
    for alpha in datum.delta_plus() {
        let v = alpha.eval(rho.coords());
        if in_z_neg(&v) {
            dominant = false;
        }
        if in_z(&v) {
            non_integral = false;
        }
        if in_z_nonpos(&v) {
            strongly_dominant = false;
        }
    }
    for (i, omega) in datum.phi_plus().iter().enumerate() {
        let v = omega.eval(rho.coords());
        let k = rho.k_at(datum, i);
        if in_z_neg(&(&v - &k)) {
            strongly_dominant = false;
        }
        if in_z_nonpos(&(&v + &k)) {
            strongly_dominant = false;
        }
    }
    Dominance {
        dominant,
        non_integral,
        strongly_dominant,
    }
}

/// Parameter pairs used throughout the test batteries: generic, strongly
/// dominant, and non-integral for every supported dimension up to three.
pub fn default_parameter_samples() -> [(Rat, Rat); 3] {
    use crate::scalar::rat;
    [
        (rat(1, 5), rat(3, 7)),
        (rat(2, 3), rat(5, 11)),
        (rat(17, 13), rat(1, 2)),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::datum::Case;
    use crate::scalar::rat;
    use num_traits::Zero;

    #[test]
    fn coords_formula() {
        let d = RootDatum::new(Case::Classical, 3).unwrap();
        let rho = Rho::new(&d, rat_int(1), rat(1, 2));
        assert_eq!(rho.coords(), &[rat(5, 2), rat(3, 2), rat(1, 2)]);
    }

    #[test]
    fn multiplicities_classical() {
        let d = RootDatum::new(Case::Classical, 3).unwrap();
        let rho = Rho::new(&d, rat(1, 5), rat(3, 7));
        for (i, omega) in d.phi().iter().enumerate() {
            let k = rho.k_at(&d, i);
            let is_difference = omega.0.iter().filter(|c| !c.is_zero()).count() == 2;
            if is_difference {
                assert_eq!(k, rat(1, 5));
            } else {
                assert_eq!(k, rat(3, 7));
            }
        }
    }

    #[test]
    fn multiplicities_rank_one() {
        let d = RootDatum::new(Case::RankOne, 1).unwrap();
        let rho = Rho::new(&d, rat_int(0), rat(5, 7));
        assert_eq!(rho.k_at(&d, 0), rat(5, 7));
    }

    #[test]
    fn multiplicity_is_symmetric_under_negation() {
        let d = RootDatum::new(Case::Semiclassical, 3).unwrap();
        let rho = Rho::new(&d, rat(2, 3), rat(5, 11));
        for (i, omega) in d.phi().iter().enumerate() {
            if let Some(j) = d.phi_index(&omega.neg()) {
                assert_eq!(rho.k_at(&d, i), rho.k_at(&d, j));
            }
        }
    }

    #[test]
    fn dominance_rank_one() {
        let d = RootDatum::new(Case::RankOne, 1).unwrap();
        let good = dominance_class(&d, &Rho::new(&d, rat_int(0), rat(1, 3)));
        assert!(good.dominant && good.non_integral && good.strongly_dominant);
        let bad = dominance_class(&d, &Rho::new(&d, rat_int(0), rat_int(-1)));
        assert!(!bad.strongly_dominant);
        // Half-integers at or below zero fail too.
        let edge = dominance_class(&d, &Rho::new(&d, rat_int(0), rat(-1, 2)));
        assert!(!edge.strongly_dominant);
    }

    #[test]
    fn dominance_classical_negative_r() {
        let d = RootDatum::new(Case::Classical, 2).unwrap();
        let fl = dominance_class(&d, &Rho::new(&d, rat_int(-1), rat(1, 2)));
        assert!(!fl.dominant);
        assert!(!fl.non_integral);
    }

    #[test]
    fn default_samples_are_generic() {
        for (case, n) in [
            (Case::RankOne, 1),
            (Case::Classical, 2),
            (Case::Classical, 3),
            (Case::Semiclassical, 2),
            (Case::Semiclassical, 3),
        ] {
            let d = RootDatum::new(case, n).unwrap();
            for (r, s) in default_parameter_samples() {
                let fl = dominance_class(&d, &Rho::new(&d, r, s));
                assert!(fl.dominant && fl.non_integral && fl.strongly_dominant);
            }
        }
    }
}
