//! Difference operators as exact matrices on truncated invariant spaces.
//!
//! An [`OpMatrix`] stores, column by column, the expansion of an operator
//! applied to each basis polynomial `p_lambda` of a [`Tables`] truncation.
//! Two pieces of metadata keep truncation honest:
//!
//! - `shift`: an upper bound on `ell(mu) - ell(lambda)` over the support
//!   of any valid column, so compositions know how far output can climb;
//! - `window`: columns with `ell(lambda) <= window` are meaningful, the
//!   rest are identically zero and must not be read.
//!
//! Operator equality is only ever asserted on common windows.
//!
//! The raising operator is applied by evaluate-and-reconstruct: its
//! coefficients are rational functions, so the image polynomial is pinned
//! down by exact values at deterministic pseudo-random rational points and
//! one exact linear solve against the invariant monomial basis.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::datum::{LinearForm, RootDatum, Weight};
use crate::error::{Error, Result};
use crate::ftau::FTau;
use crate::interp::Tables;
use crate::linalg::{inverse, solve, RatMat};
use crate::poly::MultiPoly;
use crate::rho::{dominance_class, Rho};
use crate::sample::PointSource;
use crate::scalar::{factorial, pochhammer, sign, Rat};

// ---- Direct application of the raising operator ----

/// Apply the raising operator to one invariant polynomial.
pub fn apply_l(datum: &RootDatum, rho: &Rho, h: &MultiPoly, seed: u64) -> Result<MultiPoly> {
    let mut out = apply_l_many(datum, rho, core::slice::from_ref(h), seed)?;
    Ok(out.pop().unwrap())
}

/// Apply the raising operator to a batch of invariant polynomials,
/// sharing sample points and the collocation solve.
///
/// The image values `sum_eta f_eta(v) h(v - eta)` are computed exactly at
/// pseudo-random rational points, then matched against the invariant
/// monomial basis of one degree higher. Points that hit a pole of a
/// coefficient function, a singular collocation matrix, or a failed
/// verification at held-out points trigger a resample (at most ten).
pub fn apply_l_many(
    datum: &RootDatum,
    rho: &Rho,
    hs: &[MultiPoly],
    seed: u64,
) -> Result<Vec<MultiPoly>> {
    let n = datum.n();
    let dmax = hs.iter().map(|h| h.degree()).max().unwrap_or(-1);
    if dmax < 0 {
        return Ok(hs.iter().map(|_| MultiPoly::zero(n)).collect());
    }
    let basis = datum.orbit_monomial_basis(dmax + 1);
    let coeffs = apply_l_coeffs(datum, rho, hs, seed)?;
    let mut out = Vec::with_capacity(hs.len());
    for hi in 0..hs.len() {
        let mut p = MultiPoly::zero(n);
        for (bi, b) in basis.iter().enumerate() {
            let c = coeffs.get(bi, hi);
            if !c.is_zero() {
                p = &p + &b.scale(c);
            }
        }
        out.push(p);
    }
    Ok(out)
}

/// Like [`apply_l_many`], but returns the stacked coefficient columns of
/// the images over the invariant monomial basis one degree above the
/// largest input.
pub fn apply_l_coeffs(
    datum: &RootDatum,
    rho: &Rho,
    hs: &[MultiPoly],
    seed: u64,
) -> Result<RatMat> {
    if !dominance_class(datum, rho).non_integral {
        return Err(Error::NotNonIntegral);
    }
    let n = datum.n();
    let dmax = hs.iter().map(|h| h.degree()).max().unwrap_or(-1);
    if dmax < 0 {
        return Ok(RatMat::zero(1, hs.len()));
    }
    let basis = datum.orbit_monomial_basis(dmax + 1);
    let nb = basis.len();
    let shifts: Vec<(Weight, FTau)> = datum
        .lambda1()
        .iter()
        .map(|eta| (eta.clone(), FTau::new(datum, rho, eta)))
        .collect();

    let mut src = PointSource::new(seed);
    'attempt: for _ in 0..10 {
        let points: Vec<Vec<Rat>> = (0..nb + 2).map(|_| src.point(n)).collect();
        let mut values = vec![vec![Rat::zero(); points.len()]; hs.len()];
        for (pi, pt) in points.iter().enumerate() {
            for (eta, f) in &shifts {
                let coeff = match f.eval(pt) {
                    Ok(c) => c,
                    Err(_) => continue 'attempt,
                };
                if coeff.is_zero() {
                    continue;
                }
                let shifted: Vec<Rat> = pt
                    .iter()
                    .zip(&eta.0)
                    .map(|(x, &e)| x - crate::scalar::rat_int(e))
                    .collect();
                for (hi, h) in hs.iter().enumerate() {
                    values[hi][pi] += &coeff * h.eval(&shifted);
                }
            }
        }
        let a = RatMat::from_fn(nb, nb, |i, j| basis[j].eval(&points[i]));
        let rhs = RatMat::from_fn(nb, hs.len(), |i, j| values[j][i].clone());
        let coeffs = match solve(&a, &rhs) {
            Ok(c) => c,
            Err(Error::SingularSystem) => continue 'attempt,
            Err(e) => return Err(e),
        };
        // Validate against the held-out points.
        for hi in 0..hs.len() {
            for pi in nb..points.len() {
                let mut acc = Rat::zero();
                for (bi, b) in basis.iter().enumerate() {
                    acc += coeffs.get(bi, hi) * b.eval(&points[pi]);
                }
                if acc != values[hi][pi] {
                    continue 'attempt;
                }
            }
        }
        return Ok(coeffs);
    }
    Err(Error::ReconstructionFailed)
}

// ---- Truncated operator matrices ----

#[derive(Clone, Debug)]
pub struct OpMatrix {
    mat: RatMat,
    shift: i64,
    window: i64,
    /// Degree of each index; kept so algebra can maintain the invariant
    /// that columns outside the window are identically zero.
    ells: Vec<i64>,
}

impl OpMatrix {
    fn new(tables: &Tables, mat: RatMat, shift: i64, window: i64) -> Self {
        let ells: Vec<i64> = (0..tables.len()).map(|i| tables.ell_at(i)).collect();
        Self::from_parts(mat, shift, window, ells)
    }

    fn from_parts(mut mat: RatMat, shift: i64, window: i64, ells: Vec<i64>) -> Self {
        for (lam, &e) in ells.iter().enumerate() {
            if e > window {
                for mu in 0..mat.rows() {
                    mat.set(mu, lam, Rat::zero());
                }
            }
        }
        OpMatrix {
            mat,
            shift,
            window,
            ells,
        }
    }

    pub fn mat(&self) -> &RatMat {
        &self.mat
    }

    pub fn shift(&self) -> i64 {
        self.shift
    }

    pub fn window(&self) -> i64 {
        self.window
    }

    pub fn identity(tables: &Tables) -> Self {
        Self::new(tables, RatMat::identity(tables.len()), 0, tables.max_ell())
    }

    /// Diagonal operator with prescribed eigenvalues per weight.
    pub fn diagonal(tables: &Tables, eigenvalues: &[Rat]) -> Self {
        assert_eq!(eigenvalues.len(), tables.len());
        Self::new(tables, RatMat::diagonal(eigenvalues), 0, tables.max_ell())
    }

    /// The operator with eigenvalue `h(rho + lambda)` on `p_lambda`.
    pub fn eigen_of(tables: &Tables, h: &MultiPoly) -> Self {
        let eig: Vec<Rat> = (0..tables.len())
            .map(|i| h.eval(tables.node(i)))
            .collect();
        Self::diagonal(tables, &eig)
    }

    /// The difference Euler operator: eigenvalue `ell(rho + lambda)`.
    pub fn euler(tables: &Tables) -> Self {
        Self::eigen_of(tables, &tables.datum().ell_poly())
    }

    /// Multiplication by an invariant polynomial. The node values of
    /// `h p_lambda` factor through the value table, so the whole matrix
    /// is two products.
    pub fn mult(tables: &Tables, h: &MultiPoly) -> Result<Self> {
        let e = h.degree();
        if e < 0 {
            return Ok(Self::new(
                tables,
                RatMat::zero(tables.len(), tables.len()),
                0,
                tables.max_ell(),
            ));
        }
        let window = tables.max_ell() - e;
        if window < 0 {
            return Err(Error::WindowExceeded);
        }
        let n = tables.len();
        let cols = tables.count_up_to(window);
        let h_at: Vec<Rat> = (0..n).map(|i| h.eval(tables.node(i))).collect();
        let values = RatMat::from_fn(n, cols, |i, lam| &h_at[i] * tables.value(lam, i));
        let coords = tables.expand_value_columns(&values);
        let mut mat = RatMat::zero(n, n);
        for lam in 0..cols {
            let col = coords.column(lam);
            debug_assert!(support_bounded(tables, lam, &col, e));
            mat.set_column(lam, &col);
        }
        Ok(Self::new(tables, mat, e, window))
    }

    /// Multiplication by the degree form.
    pub fn ell_mult(tables: &Tables) -> Result<Self> {
        Self::mult(tables, &tables.datum().ell_poly())
    }

    /// The raising operator. Its node values factor through the value
    /// table, because the coefficient functions vanish whenever a step
    /// leaves the dominant set; the columns are then expanded like any
    /// other value data. The evaluate-and-reconstruct route lives in
    /// [`apply_l`]; tests pin the two against each other.
    pub fn raising(tables: &Tables) -> Result<Self> {
        let n = tables.len();
        let window = tables.max_ell() - 1;
        let count = tables.count_up_to(window);
        let v = value_matrix_raising(tables, n)?;
        // values of p_lambda at the nodes, columns indexed by lambda
        let p_values = RatMat::from_fn(n, count, |i, lam| tables.value(lam, i).clone());
        let coords = tables.expand_value_columns(&v.mul(&p_values));
        let mut mat = RatMat::zero(n, n);
        for lam in 0..count {
            let col = coords.column(lam);
            debug_assert!(support_bounded(tables, lam, &col, 1));
            mat.set_column(lam, &col);
        }
        Ok(Self::new(tables, mat, 1, window))
    }

    /// The conjugate of the raising operator by `z -> -z`.
    pub fn lowering_conjugate(tables: &Tables) -> Result<Self> {
        let l = Self::raising(tables)?;
        let nm = minus_matrix(tables)?;
        let conj = nm.compose(&l).compose(&nm);
        debug_assert!((0..tables.count_up_to(conj.window))
            .all(|lam| support_bounded(tables, lam, &conj.mat.column(lam), 1)));
        Ok(conj)
    }

    /// The adjoint partner of the raising operator: strictly lowering on
    /// the interpolation basis. Built from its expression through the
    /// raising operator, the degree form, and the conjugate, then checked
    /// to be strictly lowering before re-tagging its support bound.
    pub fn lowering_adjoint(tables: &Tables) -> Result<Self> {
        let l = Self::raising(tables)?;
        let lm = Self::lowering_conjugate(tables)?;
        Self::lowering_adjoint_from(tables, &l, &lm)
    }

    /// [`Self::lowering_adjoint`] from prebuilt raising and conjugate
    /// operators.
    pub fn lowering_adjoint_from(tables: &Tables, l: &Self, lm: &Self) -> Result<Self> {
        if !tables.flags().strongly_dominant {
            return Err(Error::NotStronglyDominant);
        }
        let two_ell = Self::ell_mult(tables)?.scale(&crate::scalar::rat_int(2));
        let star = l.sub(&two_ell).sub(lm);
        for lam in 0..tables.count_up_to(star.window) {
            let col = star.mat.column(lam);
            assert!(
                support_bounded(tables, lam, &col, -1),
                "adjoint lowering operator must be strictly lowering"
            );
        }
        Ok(Self::from_parts(star.mat, -1, star.window, star.ells))
    }

    // ---- Algebra ----

    pub fn add(&self, rhs: &Self) -> Self {
        Self::from_parts(
            self.mat.add(&rhs.mat),
            self.shift.max(rhs.shift),
            self.window.min(rhs.window),
            self.ells.clone(),
        )
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        Self::from_parts(
            self.mat.sub(&rhs.mat),
            self.shift.max(rhs.shift),
            self.window.min(rhs.window),
            self.ells.clone(),
        )
    }

    pub fn scale(&self, c: &Rat) -> Self {
        Self::from_parts(self.mat.scale(c), self.shift, self.window, self.ells.clone())
    }

    /// `self` after `rhs`: the window shrinks by the climb of `rhs`.
    pub fn compose(&self, rhs: &Self) -> Self {
        Self::from_parts(
            self.mat.mul(&rhs.mat),
            self.shift + rhs.shift,
            rhs.window.min(self.window - rhs.shift),
            self.ells.clone(),
        )
    }

    pub fn commutator(&self, rhs: &Self) -> Self {
        self.compose(rhs).sub(&rhs.compose(self))
    }

    /// Apply to a coordinate vector, refusing input outside the window.
    pub fn apply(&self, tables: &Tables, coords: &[Rat]) -> Result<Vec<Rat>> {
        for (i, c) in coords.iter().enumerate() {
            if !c.is_zero() && tables.ell_at(i) > self.window {
                return Err(Error::WindowExceeded);
            }
        }
        Ok(self.mat.mul_vec(coords))
    }

    /// Entry-wise differences on the common window (optionally further
    /// restricted); empty means the operators agree there.
    pub fn mismatches(&self, rhs: &Self, tables: &Tables, upto: Option<i64>) -> Vec<(usize, usize, Rat)> {
        let mut window = self.window.min(rhs.window);
        if let Some(b) = upto {
            window = window.min(b);
        }
        let cols = tables.count_up_to(window);
        let mut out = Vec::new();
        for lam in 0..cols {
            for mu in 0..tables.len() {
                let d = self.mat.get(mu, lam) - rhs.mat.get(mu, lam);
                if !d.is_zero() {
                    out.push((mu, lam, d));
                }
            }
        }
        out
    }
}

fn support_bounded(tables: &Tables, lam: usize, col: &[Rat], bound: i64) -> bool {
    col.iter()
        .enumerate()
        .all(|(mu, c)| c.is_zero() || tables.ell_at(mu) <= tables.ell_at(lam) + bound)
}

/// The finite exponential-adjoint series applied to a multiplication
/// operator; nilpotency truncates it at the degree of `h`.
pub fn exp_ad_l(tables: &Tables, h: &MultiPoly) -> Result<OpMatrix> {
    let l = OpMatrix::raising(tables)?;
    exp_ad_l_with(tables, h, &l)
}

/// [`exp_ad_l`] with a prebuilt raising operator, so several series can
/// share one truncation.
pub fn exp_ad_l_with(tables: &Tables, h: &MultiPoly, l: &OpMatrix) -> Result<OpMatrix> {
    let e = h.degree();
    let m_h = OpMatrix::mult(tables, h)?;
    if e <= 0 {
        return Ok(m_h);
    }
    let mut term = m_h.clone();
    let mut acc = m_h;
    for i in 1..=e {
        term = l.commutator(&term);
        acc = acc.add(&term.scale(&(Rat::one() / factorial(i))));
    }
    Ok(acc)
}

/// Matrix of the substitution `z -> -z` on the interpolation basis; an
/// exact involution that preserves degree.
pub fn minus_matrix(tables: &Tables) -> Result<OpMatrix> {
    let values = tables.values_from_basis_coeffs(tables.coeff_mat(), true);
    let mat = tables.expand_value_columns(&values);
    Ok(OpMatrix::new(tables, mat, 0, tables.max_ell()))
}

/// Conjugate an operator by the substitution `z -> -z`.
pub fn conjugate_minus(tables: &Tables, x: &OpMatrix) -> Result<OpMatrix> {
    let nm = minus_matrix(tables)?;
    Ok(nm.compose(x).compose(&nm))
}

/// `exp` of the lowering adjoint applied to a coordinate vector; the sum
/// terminates because each application strictly lowers the degree.
pub fn exp_lowering_adjoint(tables: &Tables, coords: &[Rat]) -> Result<Vec<Rat>> {
    let star = OpMatrix::lowering_adjoint(tables)?;
    exp_lowering_adjoint_with(tables, &star, coords)
}

/// [`exp_lowering_adjoint`] with a prebuilt operator.
pub fn exp_lowering_adjoint_with(
    tables: &Tables,
    star: &OpMatrix,
    coords: &[Rat],
) -> Result<Vec<Rat>> {
    let mut acc = coords.to_vec();
    let mut term = coords.to_vec();
    let mut d = 1i64;
    loop {
        term = star.apply(tables, &term)?;
        if term.iter().all(|c| c.is_zero()) {
            return Ok(acc);
        }
        for (a, t) in acc.iter_mut().zip(&term) {
            *a += t / factorial(d);
        }
        d += 1;
    }
}

// ---- Value-space matrices ----
//
// Operators also act on vectors of values on the shifted dominant
// weights. On a downward-closed window this action is exactly
// representable: multiplication is diagonal there, the diagonalized
// operators conjugate by the (block-triangular) value table, and the
// raising operator reads values at strictly lower weights only.

/// Signed value table `(-1)^{ell(mu)} p_mu(rho + lambda)` on the leading
/// `size` by `size` block.
pub fn involution_matrix(tables: &Tables, size: usize) -> RatMat {
    RatMat::from_fn(size, size, |mu, lam| {
        sign(tables.ell_at(mu)) * tables.value(mu, lam)
    })
}

/// Hat transform as a matrix on value vectors.
pub fn hat_matrix(tables: &Tables, size: usize) -> RatMat {
    involution_matrix(tables, size).transpose()
}

/// Value-space matrix of multiplication by `h`: diagonal in the values.
pub fn value_matrix_mult(tables: &Tables, h: &MultiPoly, size: usize) -> RatMat {
    RatMat::from_fn(size, size, |i, j| {
        if i == j {
            h.eval(tables.node(i))
        } else {
            Rat::zero()
        }
    })
}

/// Value-space matrix of the operator with eigenvalues `h(rho + lambda)`.
pub fn value_matrix_eigen(tables: &Tables, h: &MultiPoly, size: usize) -> Result<RatMat> {
    let p = RatMat::from_fn(size, size, |mu, lam| tables.value(lam, mu).clone());
    let diag = RatMat::from_fn(size, size, |i, j| {
        if i == j {
            h.eval(tables.node(i))
        } else {
            Rat::zero()
        }
    });
    Ok(p.mul(&diag).mul(&inverse(&p)?))
}

/// Value-space matrix of the raising operator; reads values one step
/// down, with coefficients that vanish whenever the step leaves the
/// dominant set.
pub fn value_matrix_raising(tables: &Tables, size: usize) -> Result<RatMat> {
    if !tables.flags().non_integral {
        return Err(Error::NotNonIntegral);
    }
    let datum = tables.datum();
    let rho = tables.rho();
    let mut mat = RatMat::zero(size, size);
    for lam in 0..size {
        let node = tables.node(lam).to_vec();
        for eta in datum.lambda1() {
            let down = tables.weight(lam).sub(eta);
            let coeff = FTau::new(datum, rho, eta).eval(&node)?;
            match tables.index_of(&down) {
                Some(j) if j < size => {
                    let v = mat.get(lam, j) + &coeff;
                    mat.set(lam, j, v);
                }
                _ => {
                    // Outside the dominant set the coefficient vanishes.
                    debug_assert!(coeff.is_zero());
                }
            }
        }
    }
    Ok(mat)
}

// ---- Binomial limit data ----

/// Data attached to the preferred `W`-fixed generator: its dual
/// pseudoroot, that pseudoroot's orbit, and the induced splitting of the
/// degree form.
#[derive(Clone, Debug)]
pub struct BinomialData {
    pub delta: Weight,
    pub omega_delta: LinearForm,
    pub orbit: Vec<LinearForm>,
    pub ell_delta: LinearForm,
    pub ell_complement: LinearForm,
}

impl BinomialData {
    pub fn new(datum: &RootDatum) -> Result<Self> {
        let delta = datum.fixed_generator().ok_or(Error::NoFixedGenerator)?;
        let pos = datum
            .sigma_check()
            .iter()
            .position(|s| s == &delta)
            .expect("fixed generator sits inside the generator list");
        let omega_delta = datum.sigma()[pos].clone();
        let orbit = datum.form_orbit(&omega_delta);
        let n = datum.n();
        let mut ell_delta = vec![Rat::zero(); n];
        for omega in &orbit {
            for (i, c) in omega.0.iter().enumerate() {
                ell_delta[i] += c;
            }
        }
        let ell_delta = LinearForm(ell_delta);
        let ell_complement = LinearForm(
            datum
                .ell_form()
                .0
                .iter()
                .zip(&ell_delta.0)
                .map(|(a, b)| a - b)
                .collect(),
        );
        Ok(BinomialData {
            delta,
            omega_delta,
            orbit,
            ell_delta,
            ell_complement,
        })
    }

    /// Rising-factorial normalization constant for one weight.
    pub fn c_of(&self, datum: &RootDatum, rho: &Rho, lambda: &Weight) -> Rat {
        let mut acc = Rat::one();
        for omega in &self.orbit {
            let idx = datum
                .phi_index(omega)
                .expect("orbit of the dual pseudoroot lies in the pseudoroot set");
            let k = rho.k_at(datum, idx);
            let base = omega.eval(rho.coords()) + k;
            acc *= pochhammer(&base, omega.depth(lambda));
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::datum::Case;
    use crate::poly::Monomial;
    use crate::rho::default_parameter_samples;
    use crate::sample::DEFAULT_SEED;
    use crate::scalar::{rat, rat_int};

    fn tables(case: Case, n: usize, r: (i64, i64), s: (i64, i64), depth: i64) -> Tables {
        let d = RootDatum::new(case, n).unwrap();
        let rho = Rho::new(&d, rat(r.0, r.1), rat(s.0, s.1));
        Tables::build(&d, &rho, depth).unwrap()
    }

    #[test]
    fn rank_one_raising_shifts_by_one() {
        // The raising operator multiplies by (z - s) after a unit shift,
        // which sends p_k to (k + 1) p_{k + 1}.
        let t = tables(Case::RankOne, 1, (0, 1), (5, 7), 4);
        let l = OpMatrix::raising(&t).unwrap();
        for lam in 0..t.count_up_to(3) {
            let col = l.mat().column(lam);
            for mu in 0..t.len() {
                let expect = if mu == lam + 1 {
                    rat_int(lam as i64 + 1)
                } else {
                    rat_int(0)
                };
                assert_eq!(col[mu], expect);
            }
        }
    }

    #[test]
    fn rank_one_raising_matches_shift_formula() {
        let t = tables(Case::RankOne, 1, (0, 1), (5, 7), 4);
        let z = MultiPoly::var(1, 0);
        let h = (&z.pow(3) - &z).scale(&rat(2, 3));
        let img = apply_l(t.datum(), t.rho(), &h, DEFAULT_SEED).unwrap();
        let expect = &(&z - &MultiPoly::constant(1, t.rho().s().clone()))
            * &h.shift(&[rat_int(-1)]);
        assert_eq!(img, expect);
    }

    #[test]
    fn raising_constant_gives_centered_degree_form() {
        for (case, n) in [(Case::Classical, 2), (Case::Classical, 3), (Case::Semiclassical, 2)] {
            let d = RootDatum::new(case, n).unwrap();
            let (r, s) = (rat(1, 5), rat(3, 7));
            let rho = Rho::new(&d, r, s);
            let img = apply_l(&d, &rho, &MultiPoly::one(n), DEFAULT_SEED).unwrap();
            let ell = d.ell_poly();
            let expect = &ell - &MultiPoly::constant(n, ell.eval(rho.coords()));
            assert_eq!(img, expect);
        }
    }

    #[test]
    fn raising_matrix_agrees_with_reconstruction_route() {
        // The matrix is assembled from table values; the polynomial
        // operation samples and solves. They must agree column by column.
        for (case, n) in [(Case::Classical, 2), (Case::Semiclassical, 3)] {
            let d = RootDatum::new(case, n).unwrap();
            let rho = Rho::new(&d, rat(1, 5), rat(3, 7));
            let t = Tables::build(&d, &rho, 3).unwrap();
            let l = OpMatrix::raising(&t).unwrap();
            for lam in 0..t.count_up_to(l.window()) {
                let img = apply_l(&d, &rho, t.p(lam), DEFAULT_SEED).unwrap();
                assert_eq!(t.expand(&img).unwrap(), l.mat().column(lam));
            }
        }
    }

    #[test]
    fn euler_is_degree_form_minus_raising() {
        let t = tables(Case::Classical, 2, (1, 5), (3, 7), 3);
        let e = OpMatrix::euler(&t);
        let ell = OpMatrix::ell_mult(&t).unwrap();
        let l = OpMatrix::raising(&t).unwrap();
        assert!(e.mismatches(&ell.sub(&l), &t, None).is_empty());
    }

    #[test]
    fn lowering_conjugate_rank_one_closed_form() {
        // Conjugating the raising operator gives -(z + s) after a shift up.
        let t = tables(Case::RankOne, 1, (0, 1), (5, 7), 4);
        let lm = OpMatrix::lowering_conjugate(&t).unwrap();
        let z = MultiPoly::var(1, 0);
        let s_plus = MultiPoly::constant(1, t.rho().s().clone());
        for lam in 0..t.count_up_to(lm.window()) {
            let img = t.assemble(&lm.mat().column(lam));
            let expect = (&(&z + &s_plus) * &t.p(lam).shift(&[rat_int(1)])).scale(&rat_int(-1));
            assert_eq!(img, expect);
        }
    }

    #[test]
    fn minus_matrix_is_involutive() {
        let t = tables(Case::Semiclassical, 2, (2, 3), (5, 11), 3);
        let nm = minus_matrix(&t).unwrap();
        assert!(nm.mat().mul(nm.mat()).is_identity());
    }

    #[test]
    fn exp_ad_of_degree_form_is_euler() {
        let t = tables(Case::Classical, 2, (1, 5), (3, 7), 4);
        let built = exp_ad_l(&t, &t.datum().ell_poly()).unwrap();
        let euler = OpMatrix::euler(&t);
        assert!(built.mismatches(&euler, &t, None).is_empty());
    }

    #[test]
    fn exp_ad_constant_is_scalar() {
        let t = tables(Case::Classical, 2, (1, 5), (3, 7), 2);
        let built = exp_ad_l(&t, &MultiPoly::constant(2, rat(7, 3))).unwrap();
        let expect = OpMatrix::identity(&t).scale(&rat(7, 3));
        assert!(built.mismatches(&expect, &t, None).is_empty());
    }

    #[test]
    fn binomial_data_classical() {
        let d = RootDatum::new(Case::Classical, 3).unwrap();
        let b = BinomialData::new(&d).unwrap();
        assert_eq!(b.delta, Weight(vec![1, 1, 1]));
        // The orbit of the dual pseudoroot is all coordinates, so the
        // delta part of the degree form is the full degree form.
        assert_eq!(b.orbit.len(), 3);
        assert_eq!(&b.ell_delta, d.ell_form());
        assert!(b.ell_complement.0.iter().all(|c| c.is_zero()));
        // Every pseudoroot takes value 0 or 1 on the fixed generator.
        for omega in d.phi() {
            let v = omega.depth(&b.delta);
            assert!(v == 0 || v == 1);
        }
    }

    #[test]
    fn binomial_data_semiclassical_even() {
        let d = RootDatum::new(Case::Semiclassical, 2).unwrap();
        let b = BinomialData::new(&d).unwrap();
        assert_eq!(b.delta, Weight(vec![1, 1]));
        // Alternating complement for an even number of slots.
        assert_eq!(b.ell_complement, LinearForm::from_ints(&[1, -1]));
        let rho = Rho::new(&d, rat(1, 5), rat(3, 7));
        // Single-orbit constant: rising factorial of 2s.
        let c = b.c_of(&d, &rho, &Weight(vec![2, 2]));
        assert_eq!(c, pochhammer(&(rat_int(2) * rat(3, 7)), 2));
    }

    #[test]
    fn binomial_data_semiclassical_odd_complement_vanishes() {
        let d = RootDatum::new(Case::Semiclassical, 3).unwrap();
        let b = BinomialData::new(&d).unwrap();
        assert!(b.ell_complement.0.iter().all(|c| c.is_zero()));
    }

    #[test]
    fn binomial_data_semiclassical_four_alternates() {
        let d = RootDatum::new(Case::Semiclassical, 4).unwrap();
        let b = BinomialData::new(&d).unwrap();
        assert_eq!(b.ell_complement, LinearForm::from_ints(&[1, -1, 1, -1]));
        assert_eq!(b.orbit.len(), 2);
    }

    #[test]
    fn rank_one_binomial_constant() {
        let d = RootDatum::new(Case::RankOne, 1).unwrap();
        let b = BinomialData::new(&d).unwrap();
        let rho = Rho::new(&d, rat_int(0), rat(5, 7));
        for lam in 0..5i64 {
            assert_eq!(
                b.c_of(&d, &rho, &Weight(vec![lam])),
                pochhammer(&(rat_int(2) * rat(5, 7)), lam)
            );
        }
    }

    #[test]
    fn exp_lowering_adjoint_fixes_constants() {
        let t = tables(Case::Classical, 2, (1, 5), (3, 7), 3);
        let one = t.unit(0);
        assert_eq!(exp_lowering_adjoint(&t, &one).unwrap(), one);
    }

    #[test]
    fn window_violations_are_refused() {
        let t = tables(Case::Classical, 2, (1, 5), (3, 7), 2);
        let l = OpMatrix::raising(&t).unwrap();
        let top = t.unit(t.len() - 1);
        assert_eq!(l.apply(&t, &top), Err(Error::WindowExceeded));
    }

    #[test]
    fn mult_operators_commute() {
        let t = tables(Case::Semiclassical, 3, (1, 5), (3, 7), 4);
        let d = t.datum().clone();
        let h1 = d.ell_poly();
        let h2 = d.orbit_sum(&Monomial(vec![2, 0, 0]));
        let a = OpMatrix::mult(&t, &h1).unwrap();
        let b = OpMatrix::mult(&t, &h2).unwrap();
        let zero = OpMatrix::mult(&t, &MultiPoly::zero(3)).unwrap();
        assert!(a.commutator(&b).mismatches(&zero, &t, None).is_empty());
    }

    #[test]
    fn default_samples_support_all_operators() {
        for (r, s) in default_parameter_samples() {
            let d = RootDatum::new(Case::Classical, 2).unwrap();
            let rho = Rho::new(&d, r, s);
            let t = Tables::build(&d, &rho, 3).unwrap();
            OpMatrix::lowering_adjoint(&t).unwrap();
        }
    }
}
