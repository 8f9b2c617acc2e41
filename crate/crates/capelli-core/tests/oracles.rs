//! Frozen expected values computed by independent oracles: brute-force
//! enumeration, explicit Newton differences, and hand-expanded products.

use capelli_core::datum::Weight;
use capelli_core::ftau::virtual_dimension;
use capelli_core::ops::apply_l;
use capelli_core::poly::Monomial;
use capelli_core::scalar::{rat, rat_int};
use capelli_core::{
    capelli_polynomial, default_parameter_samples, Case, MultiPoly, Rat, RootDatum, Rho, Tables,
    DEFAULT_SEED,
};

/// Brute-force orbit enumeration for the two-slot semiclassical group:
/// the group is trivial, so every monomial is its own orbit.
#[test]
fn semiclassical_two_basis_matches_exhaustive_enumeration() {
    let d = RootDatum::new(Case::Semiclassical, 2).unwrap();
    let basis = d.orbit_monomial_basis(2);
    let mut expected: Vec<Vec<u32>> = Vec::new();
    for total in 0..=2u32 {
        // lex-descending within a degree
        let mut shell: Vec<Vec<u32>> = Vec::new();
        for a in 0..=total {
            shell.push(vec![a, total - a]);
        }
        shell.sort();
        shell.reverse();
        expected.extend(shell);
    }
    assert_eq!(basis.len(), expected.len());
    for (p, exp) in basis.iter().zip(expected) {
        assert_eq!(p.num_terms(), 1);
        let (mono, coeff) = p.terms().next().unwrap();
        assert_eq!(mono.0, exp);
        assert_eq!(coeff, &rat_int(1));
    }
}

/// The two-slot classical orbit sums, written out by hand.
#[test]
fn classical_two_basis_matches_hand_list() {
    let d = RootDatum::new(Case::Classical, 2).unwrap();
    let printed: Vec<String> = d
        .orbit_monomial_basis(2)
        .iter()
        .map(|p| format!("{p}"))
        .collect();
    assert_eq!(printed, vec!["1", "z1 + z2", "z1^2 + z2^2", "z1*z2"]);
}

/// Newton forward-difference oracle for the degree-one interpolation
/// polynomial of the classical case: the defining conditions force the
/// centered degree form, independently re-derived here from a two-point
/// solve done by hand.
#[test]
fn classical_degree_one_from_first_principles() {
    for n in [2usize, 3] {
        let d = RootDatum::new(Case::Classical, n).unwrap();
        for (r, s) in default_parameter_samples() {
            let rho = Rho::new(&d, r.clone(), s.clone());
            let mut lam = vec![0i64; n];
            lam[0] = 1;
            let p = capelli_polynomial(&d, &rho, &Weight(lam)).unwrap();
            // ell(rho) = r n(n-1)/2 + n s
            let ell_rho = rat_int((n * (n - 1) / 2) as i64) * &r + rat_int(n as i64) * &s;
            let expect = &d.ell_poly() - &MultiPoly::constant(n, ell_rho);
            assert_eq!(p, expect);
        }
    }
}

/// Hand-expanded virtual dimension for one box in two classical slots:
/// the product has three nontrivial factors and collapses to 2(r + 2s).
#[test]
fn classical_two_one_box_dimension() {
    let d = RootDatum::new(Case::Classical, 2).unwrap();
    let (r, s) = (rat(1, 1), rat(1, 2));
    let rho = Rho::new(&d, r, s);
    let dim = virtual_dimension(&d, &rho, &Weight(vec![1, 0])).unwrap();
    assert_eq!(dim, rat_int(4)); // 2 (r + 2s) = 2 (1 + 1) = 4
}

/// Evaluation of the same data at the negated shift vector, by direct
/// polynomial arithmetic.
#[test]
fn classical_two_one_box_evaluation() {
    let d = RootDatum::new(Case::Classical, 2).unwrap();
    let rho = Rho::new(&d, rat(1, 1), rat(1, 2));
    let p = capelli_polynomial(&d, &rho, &Weight(vec![1, 0])).unwrap();
    // p = z1 + z2 - (r + 2s); at -rho this is -2(r + 2s) = -4.
    assert_eq!(p.eval(&rho.minus_coords()), rat_int(-4));
}

/// One-dimensional raising action on the interpolation basis: multiply
/// by (z - s) after a unit shift, which steps up with factor lambda + 1.
#[test]
fn rank_one_raising_oracle() {
    let d = RootDatum::new(Case::RankOne, 1).unwrap();
    let rho = Rho::new(&d, rat_int(0), rat(1, 3));
    let t = Tables::build(&d, &rho, 4).unwrap();
    for lam in 0..3usize {
        let img = apply_l(&d, &rho, t.p(lam), DEFAULT_SEED).unwrap();
        assert_eq!(img, t.p(lam + 1).scale(&rat_int(lam as i64 + 1)));
    }
}

/// Newton interpolation with brute-force divided differences:
/// the expansion of z^2 over binomial(z - 1/2, k).
#[test]
fn newton_expansion_brute_force() {
    let d = RootDatum::new(Case::RankOne, 1).unwrap();
    let rho = Rho::new(&d, rat_int(0), rat(1, 2));
    let t = Tables::build(&d, &rho, 2).unwrap();
    let h = MultiPoly::var(1, 0).pow(2);
    // Values at 1/2, 3/2, 5/2 and their forward differences.
    let f = |x: Rat| h.eval(&[x]);
    let (f0, f1, f2) = (f(rat(1, 2)), f(rat(3, 2)), f(rat(5, 2)));
    let expect = vec![
        f0.clone(),
        &f1 - &f0,
        &f2 - rat_int(2) * &f1 + &f0,
    ];
    assert_eq!(t.expand(&h).unwrap(), expect);
    assert_eq!(expect, vec![rat(1, 4), rat_int(2), rat_int(2)]);
}

/// The table entry that the step-cone condition forces to vanish.
#[test]
fn extra_vanishing_pinned_entry() {
    let d = RootDatum::new(Case::Classical, 2).unwrap();
    let rho = Rho::new(&d, rat(1, 5), rat(3, 7));
    let t = Tables::build(&d, &rho, 4).unwrap();
    let mu = t.index_of(&Weight(vec![1, 1])).unwrap();
    let lam = t.index_of(&Weight(vec![3, 0])).unwrap();
    assert_eq!(t.value(mu, lam), &rat_int(0));
}

/// Orbit sums of squares for three semiclassical slots: the group swaps
/// the outer variables only.
#[test]
fn semiclassical_three_orbit_of_square() {
    let d = RootDatum::new(Case::Semiclassical, 3).unwrap();
    let orbit = d.orbit_sum(&Monomial(vec![2, 0, 0]));
    assert_eq!(format!("{orbit}"), "z1^2 + z3^2");
    let middle = d.orbit_sum(&Monomial(vec![0, 2, 0]));
    assert_eq!(format!("{middle}"), "z2^2");
}
