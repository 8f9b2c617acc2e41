//! Named verification suites.
//!
//! Each suite rebuilds everything it needs from its parameters, checks
//! one family of identities exactly, and reports every violation with an
//! exact rational (or polynomial) residual. A passing report has zero
//! failures; there are no tolerances anywhere.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::datum::{Case, RootDatum, Weight};
use crate::error::{Error, Result};
use crate::ftau::{virtual_dimension, virtual_dimension_ratio, FTau};
use crate::interp::Tables;
use crate::linalg::RatMat;
use crate::ops::{
    self, conjugate_minus, exp_ad_l_with, exp_lowering_adjoint_with, hat_matrix, involution_matrix,
    value_matrix_eigen, value_matrix_mult, value_matrix_raising, BinomialData,
    OpMatrix,
};
use crate::poly::{binomial_poly, pochhammer_poly, Monomial, MultiPoly};
use crate::rho::{dominance_class, Rho};
use crate::sample::PointSource;
use crate::scalar::{binomial, factorial, rat_int, sign, Rat};

/// All suite names, in canonical execution order.
pub const SUITE_NAMES: &[&str] = &[
    "interpolation",
    "dimension",
    "transposition",
    "evaluation",
    "symmetry",
    "pieri-ell",
    "hat",
    "eigen",
    "scalar-product",
    "sl2",
    "binomial",
    "rank-one",
];

/// Suites that make sense for a given case. The closed-form suite only
/// exists in one dimension.
pub fn applicable_suites(case: Case) -> Vec<&'static str> {
    SUITE_NAMES
        .iter()
        .copied()
        .filter(|&name| name != "rank-one" || case == Case::RankOne)
        .collect()
}

#[derive(Clone, Debug)]
pub struct SuiteParams {
    pub case: Case,
    pub n: usize,
    pub r: Rat,
    pub s: Rat,
    pub max_ell: i64,
    pub seed: u64,
}

#[derive(Clone, Debug)]
pub struct Failure {
    pub check: String,
    pub lambda: Option<Vec<i64>>,
    pub mu: Option<Vec<i64>>,
    pub residual: String,
}

#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub suite: String,
    pub case_name: String,
    pub n: usize,
    pub r: Rat,
    pub s: Rat,
    pub max_ell: i64,
    pub checks: u64,
    pub failures: Vec<Failure>,
}

impl SuiteReport {
    pub fn pass(&self) -> bool {
        self.failures.is_empty()
    }
}

struct Recorder {
    checks: u64,
    failures: Vec<Failure>,
}

impl Recorder {
    fn new() -> Self {
        Recorder {
            checks: 0,
            failures: Vec::new(),
        }
    }

    fn rat(&mut self, check: &str, lambda: Option<&Weight>, mu: Option<&Weight>, lhs: &Rat, rhs: &Rat) {
        self.checks += 1;
        let diff = lhs - rhs;
        if !diff.is_zero() {
            self.failures.push(Failure {
                check: check.to_string(),
                lambda: lambda.map(|w| w.0.clone()),
                mu: mu.map(|w| w.0.clone()),
                residual: format!("{diff}"),
            });
        }
    }

    fn poly(
        &mut self,
        check: &str,
        lambda: Option<&Weight>,
        mu: Option<&Weight>,
        lhs: &MultiPoly,
        rhs: &MultiPoly,
    ) {
        self.checks += 1;
        let diff = lhs - rhs;
        if !diff.is_zero() {
            self.failures.push(Failure {
                check: check.to_string(),
                lambda: lambda.map(|w| w.0.clone()),
                mu: mu.map(|w| w.0.clone()),
                residual: format!("{diff}"),
            });
        }
    }

    fn coords(
        &mut self,
        check: &str,
        tables: &Tables,
        lambda: Option<&Weight>,
        lhs: &[Rat],
        rhs: &[Rat],
    ) {
        self.checks += 1;
        for mu in 0..lhs.len() {
            let diff = &lhs[mu] - &rhs[mu];
            if !diff.is_zero() {
                self.failures.push(Failure {
                    check: check.to_string(),
                    lambda: lambda.map(|w| w.0.clone()),
                    mu: Some(tables.weight(mu).0.clone()),
                    residual: format!("{diff}"),
                });
            }
        }
    }

    fn matrix(&mut self, check: &str, lhs: &RatMat, rhs: &RatMat) {
        self.checks += 1;
        for i in 0..lhs.rows() {
            for j in 0..lhs.cols() {
                let diff = lhs.get(i, j) - rhs.get(i, j);
                if !diff.is_zero() {
                    self.failures.push(Failure {
                        check: check.to_string(),
                        lambda: Some(vec![i as i64]),
                        mu: Some(vec![j as i64]),
                        residual: format!("{diff}"),
                    });
                }
            }
        }
    }

    fn op(&mut self, check: &str, tables: &Tables, lhs: &OpMatrix, rhs: &OpMatrix, upto: Option<i64>) {
        self.checks += 1;
        for (mu, lam, diff) in lhs.mismatches(rhs, tables, upto) {
            self.failures.push(Failure {
                check: check.to_string(),
                lambda: Some(tables.weight(lam).0.clone()),
                mu: Some(tables.weight(mu).0.clone()),
                residual: format!("{diff}"),
            });
        }
    }

    fn finish(self, name: &str, p: &SuiteParams) -> SuiteReport {
        SuiteReport {
            suite: name.to_string(),
            case_name: p.case.name().to_string(),
            n: p.n,
            r: p.r.clone(),
            s: p.s.clone(),
            max_ell: p.max_ell,
            checks: self.checks,
            failures: self.failures,
        }
    }
}

fn setup(p: &SuiteParams) -> Result<(RootDatum, Rho)> {
    let datum = RootDatum::new(p.case, p.n)?;
    let rho = Rho::new(&datum, p.r.clone(), p.s.clone());
    Ok((datum, rho))
}

fn require_strongly_dominant(datum: &RootDatum, rho: &Rho) -> Result<()> {
    if !dominance_class(datum, rho).strongly_dominant {
        return Err(Error::NotStronglyDominant);
    }
    Ok(())
}

fn require_non_integral(datum: &RootDatum, rho: &Rho) -> Result<()> {
    if !dominance_class(datum, rho).non_integral {
        return Err(Error::NotNonIntegral);
    }
    Ok(())
}

fn random_invariant(datum: &RootDatum, degree: i64, src: &mut PointSource) -> MultiPoly {
    let mut h = MultiPoly::zero(datum.n());
    for b in datum.orbit_monomial_basis(degree) {
        h = &h + &b.scale(&src.rat());
    }
    h
}

/// Run one named suite.
pub fn run_suite(name: &str, p: &SuiteParams) -> Result<SuiteReport> {
    match name {
        "interpolation" => suite_interpolation(p),
        "dimension" => suite_dimension(p),
        "transposition" => suite_transposition(p),
        "evaluation" => suite_evaluation(p),
        "symmetry" => suite_symmetry(p),
        "pieri-ell" => suite_pieri_ell(p),
        "hat" => suite_hat(p),
        "eigen" => suite_eigen(p),
        "scalar-product" => suite_scalar_product(p),
        "sl2" => suite_sl2(p),
        "binomial" => suite_binomial(p),
        "rank-one" => suite_rank_one(p),
        other => Err(Error::UnknownSuite(other.to_string())),
    }
}

// ---- Individual suites ----

/// Delta conditions, degree bounds, invariance, extra vanishing, and the
/// dimension match between weights and the invariant monomial basis.
fn suite_interpolation(p: &SuiteParams) -> Result<SuiteReport> {
    let (datum, rho) = setup(p)?;
    let mut rec = Recorder::new();

    for d in 0..=p.max_ell {
        let nw = datum.weights_up_to(d).len();
        let nb = datum.orbit_monomial_basis(d).len();
        rec.rat(
            "dimension-match",
            None,
            None,
            &rat_int(nw as i64),
            &rat_int(nb as i64),
        );
    }

    match Tables::build(&datum, &rho, p.max_ell) {
        Ok(t) => {
            for mu in 0..t.len() {
                rec.checks += 1;
                if t.p(mu).degree() > t.ell_at(mu) {
                    rec.failures.push(Failure {
                        check: "degree-bound".to_string(),
                        lambda: Some(t.weight(mu).0.clone()),
                        mu: None,
                        residual: format!("degree {}", t.p(mu).degree()),
                    });
                }
                rec.checks += 1;
                if !datum.is_invariant(t.p(mu)) {
                    rec.failures.push(Failure {
                        check: "invariance".to_string(),
                        lambda: Some(t.weight(mu).0.clone()),
                        mu: None,
                        residual: "not W-invariant".to_string(),
                    });
                }
                for lam in 0..t.len() {
                    if t.ell_at(lam) <= t.ell_at(mu) {
                        let expect = if mu == lam { Rat::one() } else { Rat::zero() };
                        rec.rat(
                            "delta-conditions",
                            Some(t.weight(lam)),
                            Some(t.weight(mu)),
                            t.value(mu, lam),
                            &expect,
                        );
                    }
                    let diff = t.weight(lam).sub(t.weight(mu));
                    if !datum.in_lambda(&diff.0) {
                        rec.rat(
                            "extra-vanishing",
                            Some(t.weight(lam)),
                            Some(t.weight(mu)),
                            t.value(mu, lam),
                            &Rat::zero(),
                        );
                    }
                }
            }
        }
        Err(e) => {
            rec.checks += 1;
            rec.failures.push(Failure {
                check: "construction".to_string(),
                lambda: None,
                mu: None,
                residual: format!("{e}"),
            });
        }
    }
    Ok(rec.finish("interpolation", p))
}

/// The two routes to the virtual dimension agree, and the coefficient
/// functions vanish outside the dominant set in both directions.
fn suite_dimension(p: &SuiteParams) -> Result<SuiteReport> {
    let (datum, rho) = setup(p)?;
    require_strongly_dominant(&datum, &rho)?;
    require_non_integral(&datum, &rho)?;
    let mut rec = Recorder::new();

    let weights = datum.weights_up_to(p.max_ell);
    for lam in &weights {
        let a = virtual_dimension(&datum, &rho, lam)?;
        let b = virtual_dimension_ratio(&datum, &rho, lam)?;
        rec.rat("dual-route", Some(lam), None, &a, &b);
    }
    rec.rat(
        "zero-weight",
        None,
        None,
        &virtual_dimension(&datum, &rho, &weights[0])?,
        &Rat::one(),
    );

    let tau_bound = p.max_ell.min(3);
    let taus = datum.lambda_monoid_up_to(tau_bound);
    for lam in &datum.weights_up_to(tau_bound) {
        for tau in &taus {
            let f = FTau::new(&datum, &rho, tau);
            if !datum.in_lambda_plus(&lam.sub(tau).0) {
                rec.rat(
                    "cutoff-upper",
                    Some(lam),
                    Some(tau),
                    &f.eval(&rho.plus(lam))?,
                    &Rat::zero(),
                );
            }
            if !datum.in_lambda_plus(&lam.add(tau).0) {
                rec.rat(
                    "cutoff-lower",
                    Some(lam),
                    Some(tau),
                    &f.eval(&rho.minus(lam))?,
                    &Rat::zero(),
                );
            }
        }
    }
    Ok(rec.finish("dimension", p))
}

/// Reflection of the normalized basis expands over signed table entries.
fn suite_transposition(p: &SuiteParams) -> Result<SuiteReport> {
    let (datum, rho) = setup(p)?;
    require_strongly_dominant(&datum, &rho)?;
    let t = Tables::build(&datum, &rho, p.max_ell)?;
    let mut rec = Recorder::new();
    let qs: Vec<MultiPoly> = (0..t.len()).map(|i| t.q(i)).collect::<Result<_>>()?;
    for lam in 0..t.len() {
        let lhs = qs[lam].substitute_neg();
        let mut rhs = MultiPoly::zero(datum.n());
        for mu in 0..t.len() {
            let c = sign(t.ell_at(mu)) * t.value(mu, lam);
            if !c.is_zero() {
                rhs = &rhs + &qs[mu].scale(&c);
            }
        }
        rec.poly("transposition", Some(t.weight(lam)), None, &lhs, &rhs);
    }
    Ok(rec.finish("transposition", p))
}

/// Value at the negated shift vector is the signed virtual dimension.
fn suite_evaluation(p: &SuiteParams) -> Result<SuiteReport> {
    let (datum, rho) = setup(p)?;
    require_strongly_dominant(&datum, &rho)?;
    let t = Tables::build(&datum, &rho, p.max_ell)?;
    let mut rec = Recorder::new();
    for mu in 0..t.len() {
        let expect = sign(t.ell_at(mu)) * t.dim(mu)?;
        rec.rat(
            "evaluation-at-minus-rho",
            Some(t.weight(mu)),
            None,
            t.p_at_minus_rho(mu),
            &expect,
        );
    }
    Ok(rec.finish("evaluation", p))
}

/// The normalized values at reflected nodes are symmetric in both weights.
fn suite_symmetry(p: &SuiteParams) -> Result<SuiteReport> {
    let (datum, rho) = setup(p)?;
    require_strongly_dominant(&datum, &rho)?;
    let t = Tables::build(&datum, &rho, p.max_ell)?;
    let mut rec = Recorder::new();
    for lam in 0..t.len() {
        for nu in 0..lam {
            let a = t.q_at_minus_node(lam, nu)?;
            let b = t.q_at_minus_node(nu, lam)?;
            rec.rat("symmetry", Some(t.weight(lam)), Some(t.weight(nu)), &a, &b);
        }
    }
    Ok(rec.finish("symmetry", p))
}

/// Pieri-type recurrences for the degree form, the iterated-step identity
/// with binomial left side, and the top-component analogue.
fn suite_pieri_ell(p: &SuiteParams) -> Result<SuiteReport> {
    let (datum, rho) = setup(p)?;
    require_strongly_dominant(&datum, &rho)?;
    require_non_integral(&datum, &rho)?;
    let t = Tables::build(&datum, &rho, p.max_ell)?;
    let mut rec = Recorder::new();
    let ell = datum.ell_poly();
    let ell_rho = ell.eval(rho.coords());
    let n = datum.n();

    // Steps by one degree: multiplication by the degree form moves one
    // shell up, with coefficients read off the coefficient functions at
    // reflected nodes.
    for mu in 0..t.count_up_to(p.max_ell - 1) {
        let d_mu = t.dim(mu)?.clone();
        let ell_at_node = &ell_rho + rat_int(t.ell_at(mu));

        let mut rhs_p = t.p(mu).scale(&ell_at_node);
        let mut rhs_q = t.q(mu)?.scale(&(-ell_at_node.clone()));
        for eta in datum.lambda1() {
            let up = t.weight(mu).add(eta);
            let Some(up_idx) = t.index_of(&up) else {
                continue;
            };
            let f_at = FTau::new(&datum, &rho, eta).eval(&rho.minus(t.weight(mu)))?;
            if f_at.is_zero() {
                continue;
            }
            let c = &d_mu / t.dim(up_idx)? * &f_at;
            rhs_p = &rhs_p - &t.p(up_idx).scale(&c);
            rhs_q = &rhs_q - &t.q(up_idx)?.scale(&f_at);
        }
        let lhs_p = &ell * t.p(mu);
        rec.poly("pieri-step", Some(t.weight(mu)), None, &lhs_p, &rhs_p);
        let lhs_q = (&ell * &t.q(mu)?).scale(&-Rat::one());
        rec.poly("pieri-step-normalized", Some(t.weight(mu)), None, &lhs_q, &rhs_q);
    }

    // Steps by several degrees against table entries, plain and on top
    // components.
    for lam in 0..t.len() {
        let l_lam = t.ell_at(lam);
        for k in 0..=(p.max_ell - l_lam) {
            let centered = &ell - &MultiPoly::constant(n, &ell_rho + rat_int(l_lam));
            let lhs = &binomial_poly(&centered, k) * t.p(lam);
            let mut rhs = MultiPoly::zero(n);
            let mut rhs_top = MultiPoly::zero(n);
            for mu in 0..t.len() {
                if t.ell_at(mu) == l_lam + k {
                    let c = t.value(lam, mu);
                    if !c.is_zero() {
                        rhs = &rhs + &t.p(mu).scale(c);
                        rhs_top = &rhs_top + &t.p(mu).top_component().scale(c);
                    }
                }
            }
            rec.poly("pieri-iterated", Some(t.weight(lam)), None, &lhs, &rhs);

            let lhs_top = (&ell.pow(k as u32) * &t.p(lam).top_component())
                .scale(&(Rat::one() / factorial(k)));
            rec.poly("top-component-step", Some(t.weight(lam)), None, &lhs_top, &rhs_top);
        }
    }
    Ok(rec.finish("pieri-ell", p))
}

/// The signed value table is involutive on every downward-closed window,
/// the hat transform inverts itself and reconstructs polynomials, and it
/// conjugates multiplication to the diagonalized operator and the raising
/// operator to its negative.
fn suite_hat(p: &SuiteParams) -> Result<SuiteReport> {
    let (datum, rho) = setup(p)?;
    require_strongly_dominant(&datum, &rho)?;
    require_non_integral(&datum, &rho)?;
    let t = Tables::build(&datum, &rho, p.max_ell)?;
    let mut rec = Recorder::new();

    // Every prefix of the (ell, lex) weight order is downward closed.
    for size in 1..=t.len() {
        let m = involution_matrix(&t, size);
        rec.matrix("involution-square", &m.mul(&m), &RatMat::identity(size));
    }

    let mut src = PointSource::fork(p.seed, 0x4a7);
    for _ in 0..20 {
        let values = src.vector(t.len());
        let back = t.hat(&t.hat(&values));
        rec.checks += 1;
        for (mu, (a, b)) in back.iter().zip(&values).enumerate() {
            let diff = a - b;
            if !diff.is_zero() {
                rec.failures.push(Failure {
                    check: "hat-roundtrip".to_string(),
                    lambda: None,
                    mu: Some(t.weight(mu).0.clone()),
                    residual: format!("{diff}"),
                });
            }
        }
    }

    // Reconstruction: a polynomial equals the signed sum of its hat values
    // against the interpolation basis.
    for _ in 0..4 {
        let h = random_invariant(&datum, p.max_ell, &mut src);
        let hat = t.hat(&t.values_of(&h));
        let mut recon = MultiPoly::zero(datum.n());
        for mu in 0..t.len() {
            let c = sign(t.ell_at(mu)) * &hat[mu];
            if !c.is_zero() {
                recon = &recon + &t.p(mu).scale(&c);
            }
        }
        rec.poly("interpolation-formula", None, None, &recon, &h);
    }

    // Conjugation on value vectors over the full window.
    let size = t.len();
    let hat_m = hat_matrix(&t, size);
    for h in [datum.ell_poly(), datum.ell_poly().pow(2)] {
        let conj = hat_m.mul(&value_matrix_mult(&t, &h, size)).mul(&hat_m);
        rec.matrix("mult-conjugation", &conj, &value_matrix_eigen(&t, &h, size)?);
    }
    let vl = value_matrix_raising(&t, size)?;
    let conj = hat_m.mul(&vl).mul(&hat_m);
    rec.matrix("raising-conjugation", &conj, &vl.scale(&-Rat::one()));

    Ok(rec.finish("hat", p))
}

/// The exponential-adjoint construction lands on the diagonalized
/// operator, and the Euler operator is the degree form minus the raising
/// operator.
fn suite_eigen(p: &SuiteParams) -> Result<SuiteReport> {
    let (datum, rho) = setup(p)?;
    require_strongly_dominant(&datum, &rho)?;
    require_non_integral(&datum, &rho)?;
    let mut rec = Recorder::new();

    let mut hs = vec![datum.ell_poly(), datum.ell_poly().pow(2)];
    let mut e0 = vec![0u32; datum.n()];
    e0[0] = 2;
    let orbit_sq = datum.orbit_sum(&Monomial(e0));
    if !hs.contains(&orbit_sq) {
        hs.push(orbit_sq);
    }

    // One truncation deep enough for every series term.
    let max_deg = hs.iter().map(|h| h.degree()).max().unwrap();
    let t = Tables::build(&datum, &rho, p.max_ell + 2 * max_deg)?;
    let l = OpMatrix::raising(&t)?;
    for (hi, h) in hs.iter().enumerate() {
        let built = exp_ad_l_with(&t, h, &l)?;
        let diag = OpMatrix::eigen_of(&t, h);
        rec.checks += 1;
        for (mu, lam, diff) in built.mismatches(&diag, &t, Some(p.max_ell)) {
            rec.failures.push(Failure {
                check: format!("exp-ad-diagonal-h{hi}"),
                lambda: Some(t.weight(lam).0.clone()),
                mu: Some(t.weight(mu).0.clone()),
                residual: format!("{diff}"),
            });
        }
    }

    let e = OpMatrix::euler(&t);
    let split = OpMatrix::ell_mult(&t)?.sub(&l);
    rec.op("euler-split", &t, &e, &split, Some(p.max_ell));

    Ok(rec.finish("eigen", p))
}

/// The diagonal pairing: orthogonality, evaluation pairings, the
/// Parseval-type expansion, and the adjoint relations between
/// multiplication and diagonalized operators.
fn suite_scalar_product(p: &SuiteParams) -> Result<SuiteReport> {
    let (datum, rho) = setup(p)?;
    require_strongly_dominant(&datum, &rho)?;
    // The raising self-adjointness check needs pole-free coefficients.
    require_non_integral(&datum, &rho)?;
    let depth = p.max_ell + 2;
    let t = Tables::build(&datum, &rho, depth)?;
    let mut rec = Recorder::new();
    let window = t.count_up_to(p.max_ell);
    let mut src = PointSource::fork(p.seed, 0x6_0a1);

    // Orthogonality of the two bases.
    for lam in 0..window {
        for mu in 0..window {
            let q_mu: Vec<Rat> = {
                let mut v = t.unit(mu);
                let norm = t.p_at_minus_rho(mu);
                if norm.is_zero() {
                    return Err(Error::ZeroAtMinusRho);
                }
                v[mu] = Rat::one() / norm;
                v
            };
            let got = t.scalar_product(&t.unit(lam), &q_mu)?;
            let expect = if lam == mu { sign(t.ell_at(lam)) } else { Rat::zero() };
            rec.rat(
                "basis-pairing",
                Some(t.weight(lam)),
                Some(t.weight(mu)),
                &got,
                &expect,
            );
        }
    }

    // Evaluation pairings against random invariants.
    for _ in 0..3 {
        let h = random_invariant(&datum, p.max_ell, &mut src);
        let h_coords = t.expand(&h)?;
        let h_values = t.values_of(&h);
        let h_hat = t.hat(&h_values);
        for lam in 0..window {
            let mut q_lam = t.unit(lam);
            q_lam[lam] = Rat::one() / t.p_at_minus_rho(lam);
            let men = t.minus_coords(&q_lam)?;
            rec.rat(
                "reflected-evaluation-pairing",
                Some(t.weight(lam)),
                None,
                &t.scalar_product(&men, &h_coords)?,
                &h_values[lam],
            );
            rec.rat(
                "hat-pairing",
                Some(t.weight(lam)),
                None,
                &t.scalar_product(&q_lam, &h_coords)?,
                &h_hat[lam],
            );
        }
    }

    // Parseval-type expansion of the pairing through hat values.
    for _ in 0..3 {
        let g = random_invariant(&datum, p.max_ell, &mut src);
        let h = random_invariant(&datum, p.max_ell, &mut src);
        let lhs = t.scalar_product(&t.expand(&g)?, &t.expand(&h)?)?;
        let g_hat = t.hat(&t.values_of(&g));
        let h_hat = t.hat(&t.values_of(&h));
        let mut rhs = Rat::zero();
        for mu in 0..t.len() {
            rhs += t.dim(mu)? * &g_hat[mu] * &h_hat[mu];
        }
        rec.rat("pairing-through-hat", None, None, &lhs, &rhs);
    }

    // Adjointness of multiplication against the reflected diagonalized
    // operator, for the twisted pairing.
    for _ in 0..2 {
        let f = random_invariant(&datum, p.max_ell, &mut src);
        let g = random_invariant(&datum, p.max_ell, &mut src);
        let h = random_invariant(&datum, 2.min(p.max_ell), &mut src);
        let f_coords = t.expand(&f)?;
        let g_coords = t.expand(&g)?;
        // Diagonalized operator of the reflected h acts by h(-rho-lambda).
        let df: Vec<Rat> = f_coords
            .iter()
            .enumerate()
            .map(|(i, c)| c * h.eval(&rho.minus(t.weight(i))))
            .collect();
        let lhs = t.scalar_product_minus(&df, &g_coords)?;
        let rhs = t.scalar_product_minus(&f_coords, &t.expand(&(&h * &g))?)?;
        rec.rat("twisted-adjoint-mult", None, None, &lhs, &rhs);
    }

    // Raising operator is self-adjoint for the twisted pairing.
    {
        let l = OpMatrix::raising(&t)?;
        for _ in 0..2 {
            let f = random_invariant(&datum, p.max_ell, &mut src);
            let g = random_invariant(&datum, p.max_ell, &mut src);
            let f_coords = t.expand(&f)?;
            let g_coords = t.expand(&g)?;
            let lf = l.apply(&t, &f_coords)?;
            let lg = l.apply(&t, &g_coords)?;
            let lhs = t.scalar_product_minus(&lf, &g_coords)?;
            let rhs = t.scalar_product_minus(&f_coords, &lg)?;
            rec.rat("twisted-self-adjoint-raising", None, None, &lhs, &rhs);
        }
    }

    // Gram-matrix adjoint of multiplication is the reflected diagonalized
    // operator: d_mu M[mu][lam] = d_lam Dm[lam][mu].
    {
        let h = datum.ell_poly();
        let m_h = OpMatrix::mult(&t, &h)?;
        let d_h = OpMatrix::eigen_of(&t, &h);
        let d_h_minus = conjugate_minus(&t, &d_h)?;
        let bound = t.count_up_to(p.max_ell.min(m_h.window()).min(d_h_minus.window()));
        for lam in 0..bound {
            for mu in 0..bound {
                let lhs = t.dim(mu)?.clone() * m_h.mat().get(mu, lam);
                let rhs = t.dim(lam)?.clone() * d_h_minus.mat().get(lam, mu);
                rec.rat(
                    "gram-adjoint-mult",
                    Some(t.weight(lam)),
                    Some(t.weight(mu)),
                    &lhs,
                    &rhs,
                );
            }
        }
    }

    Ok(rec.finish("scalar-product", p))
}

/// Commutator relations of the raising/lowering pair, the power formulas,
/// the exponential of the lowering adjoint, and self-adjointness.
fn suite_sl2(p: &SuiteParams) -> Result<SuiteReport> {
    let (datum, rho) = setup(p)?;
    require_strongly_dominant(&datum, &rho)?;
    require_non_integral(&datum, &rho)?;
    let depth = p.max_ell + 2;
    let t = Tables::build(&datum, &rho, depth)?;
    let mut rec = Recorder::new();
    let w = Some(p.max_ell);

    let l = OpMatrix::raising(&t)?;
    let nm = ops::minus_matrix(&t)?;
    let lm = nm.compose(&l).compose(&nm);
    let lstar = OpMatrix::lowering_adjoint_from(&t, &l, &lm)?;
    let e = OpMatrix::euler(&t);
    let two_ell = OpMatrix::ell_mult(&t)?.scale(&rat_int(2));
    let two_e = e.scale(&rat_int(2));

    rec.op("commutator-weight-raising", &t, &two_ell.commutator(&l), &l.scale(&rat_int(2)), w);
    rec.op("commutator-raising-conjugate", &t, &l.commutator(&lm), &two_ell, w);
    rec.op("commutator-euler-raising", &t, &two_e.commutator(&l), &l.scale(&rat_int(2)), w);
    rec.op(
        "commutator-raising-adjoint",
        &t,
        &l.scale(&-Rat::one()).commutator(&lstar),
        &two_e,
        w,
    );
    rec.op(
        "commutator-euler-adjoint",
        &t,
        &two_e.commutator(&lstar),
        &lstar.scale(&rat_int(-2)),
        w,
    );

    // Lowering adjoint through the reflected Euler operator.
    let e_minus = conjugate_minus(&t, &e)?;
    rec.op("adjoint-from-reflection", &t, &lstar, &e_minus.sub(&e), w);

    // Power formulas: iterated raising spreads table values over one
    // shell, iterated lowering gathers them back.
    for d in 1..=p.max_ell {
        let mut power = OpMatrix::identity(&t);
        for _ in 0..d {
            power = l.compose(&power);
        }
        let power = power.scale(&(Rat::one() / factorial(d)));
        for lam in 0..t.count_up_to(p.max_ell - d) {
            let col = power.mat().column(lam);
            let expect: Vec<Rat> = (0..t.len())
                .map(|mu| {
                    if t.ell_at(mu) == t.ell_at(lam) + d {
                        t.value(lam, mu).clone()
                    } else {
                        Rat::zero()
                    }
                })
                .collect();
            rec.coords("power-raising", &t, Some(t.weight(lam)), &col, &expect);
        }

        for lam in 0..t.count_up_to(p.max_ell) {
            let mut q_lam = t.unit(lam);
            q_lam[lam] = Rat::one() / t.p_at_minus_rho(lam);
            let mut cur = q_lam;
            for _ in 0..d {
                cur = lstar.apply(&t, &cur)?;
            }
            let got: Vec<Rat> = cur
                .iter()
                .map(|c| c * sign(d) / factorial(d))
                .collect();
            let expect: Vec<Rat> = (0..t.len())
                .map(|mu| {
                    if t.ell_at(mu) == t.ell_at(lam) - d {
                        t.value(mu, lam) / t.p_at_minus_rho(mu)
                    } else {
                        Rat::zero()
                    }
                })
                .collect();
            rec.coords("power-lowering", &t, Some(t.weight(lam)), &got, &expect);
        }
    }

    // Exponential of the lowering adjoint realizes the reflection.
    for lam in 0..t.count_up_to(p.max_ell) {
        let got = exp_lowering_adjoint_with(&t, &lstar, &t.unit(lam))?;
        let expect: Vec<Rat> = t
            .minus_coords(&t.unit(lam))?
            .iter()
            .map(|c| c * sign(t.ell_at(lam)))
            .collect();
        rec.coords("exp-adjoint-reflection", &t, Some(t.weight(lam)), &got, &expect);
    }

    // Self-adjointness in the diagonal pairing.
    for (name, x) in [("gram-self-adjoint-conjugate", &lm), ("gram-self-adjoint-euler", &e)] {
        let bound = t.count_up_to(p.max_ell.min(x.window()));
        for lam in 0..bound {
            for mu in 0..bound {
                let lhs = t.dim(mu)?.clone() * x.mat().get(mu, lam);
                let rhs = t.dim(lam)?.clone() * x.mat().get(lam, mu);
                rec.rat(name, Some(t.weight(lam)), Some(t.weight(mu)), &lhs, &rhs);
            }
        }
    }

    Ok(rec.finish("sl2", p))
}

/// The binomial limit at the fixed generator: the shifted normalized top
/// components expand over table entries within one fiber of the
/// complementary degree form, and evaluate to an indicator at the
/// generator itself.
fn suite_binomial(p: &SuiteParams) -> Result<SuiteReport> {
    let (datum, rho) = setup(p)?;
    require_strongly_dominant(&datum, &rho)?;
    let data = BinomialData::new(&datum)?;
    let t = Tables::build(&datum, &rho, p.max_ell)?;
    let mut rec = Recorder::new();

    for omega in datum.phi() {
        let v = omega.depth(&data.delta);
        rec.rat(
            "generator-pairing",
            None,
            None,
            &rat_int(i64::from(v == 0 || v == 1)),
            &Rat::one(),
        );
    }
    rec.poly(
        "degree-form-splitting",
        None,
        None,
        &(&data.ell_delta.to_poly(datum.n()) + &data.ell_complement.to_poly(datum.n())),
        &datum.ell_poly(),
    );

    let delta_pt = data.delta.as_points();
    let normalized: Vec<MultiPoly> = (0..t.len())
        .map(|i| {
            let c = data.c_of(&datum, &rho, t.weight(i));
            Ok(t.p(i).top_component().scale(&(c / t.dim(i)?)))
        })
        .collect::<Result<_>>()?;

    for lam in 0..t.len() {
        let lhs = normalized[lam].shift(&delta_pt);
        let fiber = data.ell_complement.eval_weight(t.weight(lam));
        let mut rhs = MultiPoly::zero(datum.n());
        for mu in 0..t.len() {
            if data.ell_complement.eval_weight(t.weight(mu)) == fiber {
                let c = t.value(mu, lam);
                if !c.is_zero() {
                    rhs = &rhs + &normalized[mu].scale(c);
                }
            }
        }
        rec.poly("binomial-shift", Some(t.weight(lam)), None, &lhs, &rhs);

        let at_delta = normalized[lam].eval(&delta_pt);
        let expect = if fiber.is_zero() { Rat::one() } else { Rat::zero() };
        rec.rat("binomial-evaluation", Some(t.weight(lam)), None, &at_delta, &expect);
    }
    Ok(rec.finish("binomial", p))
}

/// The exponential-adjoint, table, and transform identities in closed
/// form for the one-dimensional case.
fn suite_rank_one(p: &SuiteParams) -> Result<SuiteReport> {
    if p.case != Case::RankOne {
        return Err(Error::UnsupportedCase(
            "closed-form suite is one-dimensional".to_string(),
        ));
    }
    let (datum, rho) = setup(p)?;
    require_strongly_dominant(&datum, &rho)?;
    let t = Tables::build(&datum, &rho, p.max_ell)?;
    let mut rec = Recorder::new();
    let s = rho.s().clone();
    let two_s = rat_int(2) * &s;
    let z = MultiPoly::var(1, 0);
    let z_minus_s = &z - &MultiPoly::constant(1, s.clone());

    // nabla h = h(z) - h(z - 1); delta h = h(z + 1) - h(z).
    let nabla = |h: &MultiPoly| h - &h.shift(&[rat_int(-1)]);
    let fwd = |h: &MultiPoly| &h.shift(&[rat_int(1)]) - h;

    for lam in 0..t.len() {
        let k = lam as i64;
        let w = t.weight(lam).clone();

        rec.poly("basis-closed-form", Some(&w), None, t.p(lam), &binomial_poly(&z_minus_s, k));

        let minus_z = z.scale(&-Rat::one());
        let q_expect = pochhammer_poly(&(&minus_z + &MultiPoly::constant(1, s.clone())), k)
            .scale(&(Rat::one() / crate::scalar::pochhammer(&two_s, k)));
        rec.poly("normalized-closed-form", Some(&w), None, &t.q(lam)?, &q_expect);

        rec.rat(
            "dimension-closed-form",
            Some(&w),
            None,
            t.dim(lam)?,
            &binomial(&(&two_s - Rat::one() + rat_int(k)), k),
        );

        // Raising action: multiply by (z - s) after a unit shift.
        let img = ops::apply_l(&datum, &rho, t.p(lam), p.seed)?;
        let expect = &z_minus_s * &t.p(lam).shift(&[rat_int(-1)]);
        rec.poly("raising-shift-form", Some(&w), None, &img, &expect);
        if lam + 1 < t.len() {
            rec.poly(
                "raising-steps-up",
                Some(&w),
                None,
                &img,
                &t.p(lam + 1).scale(&rat_int(k + 1)),
            );
        }

        // Both closed forms of the diagonalized operator, applied to the
        // basis, give back the eigenvalue.
        let h = z.pow(3);
        let eig = h.eval(&[&s + rat_int(k)]);
        let mut alternating = MultiPoly::zero(1);
        let mut forward = MultiPoly::zero(1);
        let mut nabla_h = h.clone();
        for d in 0..=h.degree() {
            // alternating form: (-1)^d binom(z - s, d) (nabla^d h)(z) p(z - d)
            let term = &(&binomial_poly(&z_minus_s, d) * &nabla_h)
                .scale(&sign(d))
                * &t.p(lam).shift(&[rat_int(-d)]);
            alternating = &alternating + &term;
            // forward form: (nabla^d h)(s + d) binom(z - s, d) (nabla^d p)(z)
            let mut nabla_p = t.p(lam).clone();
            for _ in 0..d {
                nabla_p = nabla(&nabla_p);
            }
            let c = nabla_h.eval(&[&s + rat_int(d)]);
            forward = &forward + &(&binomial_poly(&z_minus_s, d).scale(&c) * &nabla_p);
            nabla_h = nabla(&nabla_h);
        }
        rec.poly(
            "diagonal-alternating-form",
            Some(&w),
            None,
            &alternating,
            &t.p(lam).scale(&eig),
        );
        rec.poly("diagonal-forward-form", Some(&w), None, &forward, &t.p(lam).scale(&eig));

        // Involution entries are signed binomial coefficients.
        for mu in 0..t.len() {
            rec.rat(
                "table-binomials",
                Some(&w),
                Some(t.weight(mu)),
                t.value(mu, lam),
                &binomial(&rat_int(k), mu as i64),
            );
        }
    }

    // Hat transform is the alternating forward difference at the base point.
    let h4 = z.pow(4);
    let hat = t.hat(&t.values_of(&h4));
    for lam in 0..t.len() {
        let mut diff = h4.clone();
        for _ in 0..lam {
            diff = fwd(&diff);
        }
        rec.rat(
            "hat-forward-difference",
            Some(t.weight(lam)),
            None,
            &hat[lam],
            &(sign(lam as i64) * diff.eval(core::slice::from_ref(&s))),
        );
    }

    // Newton interpolation in the forward-difference form, as a
    // polynomial identity in a fresh variable.
    let h3 = z.pow(3);
    let shifted = h3.shift(core::slice::from_ref(&s));
    let mut newton = MultiPoly::zero(1);
    let mut diff = h3.clone();
    for mu in 0..=h3.degree() {
        let c = diff.eval(core::slice::from_ref(&s));
        newton = &newton + &binomial_poly(&z, mu).scale(&c);
        diff = fwd(&diff);
    }
    rec.poly("newton-interpolation", None, None, &shifted, &newton);

    // The transposition identity in closed form.
    for lam in 0..=p.max_ell {
        let lhs = pochhammer_poly(&(&z + &MultiPoly::constant(1, s.clone())), lam)
            .scale(&(Rat::one() / crate::scalar::pochhammer(&two_s, lam)));
        let mut rhs = MultiPoly::zero(1);
        for mu in 0..=lam {
            let c = sign(mu) * binomial(&rat_int(lam), mu) / crate::scalar::pochhammer(&two_s, mu);
            let term = pochhammer_poly(
                &(&z.scale(&-Rat::one()) + &MultiPoly::constant(1, s.clone())),
                mu,
            )
            .scale(&c);
            rhs = &rhs + &term;
        }
        rec.poly(
            "transposition-closed-form",
            Some(&Weight(vec![lam])),
            None,
            &lhs,
            &rhs,
        );
    }

    Ok(rec.finish("rank-one", p))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sample::DEFAULT_SEED;
    use crate::scalar::rat;

    fn params(case: Case, n: usize, r: (i64, i64), s: (i64, i64), max_ell: i64) -> SuiteParams {
        SuiteParams {
            case,
            n,
            r: rat(r.0, r.1),
            s: rat(s.0, s.1),
            max_ell,
            seed: DEFAULT_SEED,
        }
    }

    #[test]
    fn all_suites_pass_rank_one() {
        let p = params(Case::RankOne, 1, (0, 1), (5, 7), 3);
        for name in applicable_suites(Case::RankOne) {
            let report = run_suite(name, &p).unwrap();
            assert!(
                report.pass(),
                "suite {name} failed: {:?}",
                report.failures.first()
            );
            assert!(report.checks > 0);
        }
    }

    #[test]
    fn all_suites_pass_classical_two() {
        let p = params(Case::Classical, 2, (1, 5), (3, 7), 3);
        for name in applicable_suites(Case::Classical) {
            let report = run_suite(name, &p).unwrap();
            assert!(
                report.pass(),
                "suite {name} failed: {:?}",
                report.failures.first()
            );
        }
    }

    #[test]
    fn all_suites_pass_semiclassical_two() {
        let p = params(Case::Semiclassical, 2, (2, 3), (5, 11), 3);
        for name in applicable_suites(Case::Semiclassical) {
            let report = run_suite(name, &p).unwrap();
            assert!(
                report.pass(),
                "suite {name} failed: {:?}",
                report.failures.first()
            );
        }
    }

    #[test]
    fn unknown_suite_is_rejected() {
        let p = params(Case::RankOne, 1, (0, 1), (5, 7), 2);
        assert!(matches!(
            run_suite("nonsense", &p),
            Err(Error::UnknownSuite(_))
        ));
    }

    #[test]
    fn degenerate_shift_vector_is_refused() {
        let p = params(Case::RankOne, 1, (0, 1), (-1, 2), 2);
        assert!(matches!(
            run_suite("evaluation", &p),
            Err(Error::NotStronglyDominant)
        ));
    }
}
