//! Interpolation polynomials, their value table, and the hat transform.
//!
//! `Tables::build` solves, degree by degree, the square linear systems
//! that pin each basis polynomial down by its values on the shifted
//! dominant weights, then tabulates all values `p_mu(rho + lambda)`. The
//! weight list is ordered by `(ell, lex)` and the invariant monomial basis
//! by degree, so every depth-`d` subproblem is a leading block of the full
//! collocation matrix.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::datum::{RootDatum, Weight};
use crate::error::{Error, Result};
use crate::linalg::{solve, RatMat};
use crate::poly::MultiPoly;
use crate::rho::{dominance_class, Dominance, Rho};
use crate::scalar::{sign, Rat};

#[derive(Clone, Debug)]
pub struct Tables {
    datum: RootDatum,
    rho: Rho,
    max_ell: i64,
    flags: Dominance,
    weights: Vec<Weight>,
    index: BTreeMap<Weight, usize>,
    ells: Vec<i64>,
    nodes: Vec<Vec<Rat>>,
    basis: Vec<MultiPoly>,
    /// `[i][j] = basis_j(node_i)`.
    collocation: RatMat,
    /// `[j][lambda]`: coefficient of `basis_j` in `p_lambda`.
    coeff_mat: RatMat,
    p_polys: Vec<MultiPoly>,
    /// Value table: entry `[mu][lambda] = p_mu(rho + lambda)`.
    ptable: RatMat,
    p_at_minus_rho: Vec<Rat>,
    /// Virtual dimensions, present when the shift vector is strongly dominant.
    dims: Option<Vec<Rat>>,
}

impl Tables {
    pub fn build(datum: &RootDatum, rho: &Rho, max_ell: i64) -> Result<Self> {
        let max_ell = max_ell.max(0);
        let flags = dominance_class(datum, rho);
        let weights = datum.weights_up_to(max_ell);
        let basis = datum.orbit_monomial_basis(max_ell);
        let n_total = weights.len();

        // The space of invariants of degree <= d must be indexed by the
        // weights of ell at most d, one degree at a time.
        let ells: Vec<i64> = weights.iter().map(|w| datum.ell(w)).collect();
        for d in 0..=max_ell {
            let nw = ells.iter().filter(|&&e| e <= d).count();
            let nb = basis.iter().filter(|p| p.degree() <= d).count();
            if nw != nb {
                return Err(Error::BasisDimensionMismatch {
                    degree: d,
                    basis: nb,
                    weights: nw,
                });
            }
        }

        let nodes: Vec<Vec<Rat>> = weights.iter().map(|w| rho.plus(w)).collect();
        let collocation = RatMat::from_fn(n_total, n_total, |i, j| basis[j].eval(&nodes[i]));

        // Solve one block per degree; all weights on a shell share the
        // block. Coefficient columns are collected padded to full size so
        // the value table comes out as one matrix product.
        let mut p_polys: Vec<MultiPoly> = Vec::with_capacity(n_total);
        let mut coeff_mat = RatMat::zero(n_total, n_total);
        let mut start = 0;
        for d in 0..=max_ell {
            let block_len = ells.iter().filter(|&&e| e <= d).count();
            let shell: Vec<usize> = (0..n_total).filter(|&i| ells[i] == d).collect();
            if shell.is_empty() {
                continue;
            }
            debug_assert_eq!(start + shell.len(), block_len);
            let a = collocation.leading_block(block_len);
            let mut rhs = RatMat::zero(block_len, shell.len());
            for (col, &wi) in shell.iter().enumerate() {
                rhs.set(wi, col, Rat::one());
            }
            let coeffs = solve(&a, &rhs).map_err(|e| match e {
                Error::SingularSystem => Error::NonUniqueInterpolation,
                other => other,
            })?;
            for (col, &wi) in shell.iter().enumerate() {
                let mut p = MultiPoly::zero(datum.n());
                for row in 0..block_len {
                    let c = coeffs.get(row, col);
                    if !c.is_zero() {
                        p = &p + &basis[row].scale(c);
                        coeff_mat.set(row, wi, c.clone());
                    }
                }
                p_polys.push(p);
            }
            start = block_len;
        }

        // ptable[mu][lambda] = p_mu(node_lambda) = (collocation * coeffs)^T
        let ptable = collocation.mul(&coeff_mat).transpose();
        let minus_rho = rho.minus_coords();
        let p_at_minus_rho: Vec<Rat> = p_polys.iter().map(|p| p.eval(&minus_rho)).collect();

        let dims = if flags.strongly_dominant {
            let mut dims = Vec::with_capacity(n_total);
            for w in &weights {
                dims.push(crate::ftau::virtual_dimension(datum, rho, w)?);
            }
            Some(dims)
        } else {
            None
        };

        let index = weights
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, w)| (w, i))
            .collect();

        Ok(Tables {
            datum: datum.clone(),
            rho: rho.clone(),
            max_ell,
            flags,
            weights,
            index,
            ells,
            nodes,
            basis,
            collocation,
            coeff_mat,
            p_polys,
            ptable,
            p_at_minus_rho,
            dims,
        })
    }

    // ---- Accessors ----

    pub fn datum(&self) -> &RootDatum {
        &self.datum
    }

    pub fn rho(&self) -> &Rho {
        &self.rho
    }

    pub fn max_ell(&self) -> i64 {
        self.max_ell
    }

    pub fn flags(&self) -> Dominance {
        self.flags
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn weights(&self) -> &[Weight] {
        &self.weights
    }

    pub fn weight(&self, idx: usize) -> &Weight {
        &self.weights[idx]
    }

    pub fn index_of(&self, w: &Weight) -> Option<usize> {
        self.index.get(w).copied()
    }

    pub fn ell_at(&self, idx: usize) -> i64 {
        self.ells[idx]
    }

    /// Number of weights with `ell <= bound`; they form a prefix.
    pub fn count_up_to(&self, bound: i64) -> usize {
        self.ells.iter().filter(|&&e| e <= bound).count()
    }

    pub fn node(&self, idx: usize) -> &[Rat] {
        &self.nodes[idx]
    }

    pub fn basis(&self) -> &[MultiPoly] {
        &self.basis
    }

    pub fn collocation(&self) -> &RatMat {
        &self.collocation
    }

    pub fn coeff_mat(&self) -> &RatMat {
        &self.coeff_mat
    }

    pub fn p(&self, idx: usize) -> &MultiPoly {
        &self.p_polys[idx]
    }

    pub fn ptable(&self) -> &RatMat {
        &self.ptable
    }

    /// `p_mu(rho + lambda)` by table index.
    pub fn value(&self, mu: usize, lambda: usize) -> &Rat {
        self.ptable.get(mu, lambda)
    }

    pub fn p_at_minus_rho(&self, idx: usize) -> &Rat {
        &self.p_at_minus_rho[idx]
    }

    /// Virtual dimension of the `idx`-th weight.
    pub fn dim(&self, idx: usize) -> Result<&Rat> {
        self.dims
            .as_ref()
            .map(|d| &d[idx])
            .ok_or(Error::NotStronglyDominant)
    }

    /// Normalized polynomial with value one at the negated shift vector.
    pub fn q(&self, idx: usize) -> Result<MultiPoly> {
        let v = &self.p_at_minus_rho[idx];
        if v.is_zero() {
            return Err(Error::ZeroAtMinusRho);
        }
        Ok(self.p_polys[idx].scale(&(Rat::one() / v)))
    }

    pub fn q_at_minus_node(&self, q_idx: usize, nu: usize) -> Result<Rat> {
        let v = &self.p_at_minus_rho[q_idx];
        if v.is_zero() {
            return Err(Error::ZeroAtMinusRho);
        }
        Ok(self.p_polys[q_idx].eval(&self.rho.minus(&self.weights[nu])) / v)
    }

    // ---- Basis conversions ----

    /// Linear combination of the interpolation basis with the given coordinates.
    pub fn assemble(&self, coords: &[Rat]) -> MultiPoly {
        assert_eq!(coords.len(), self.len());
        let mut p = MultiPoly::zero(self.datum.n());
        for (c, q) in coords.iter().zip(&self.p_polys) {
            if !c.is_zero() {
                p = &p + &q.scale(c);
            }
        }
        p
    }

    /// Values of a polynomial at every tabulated node.
    pub fn values_of(&self, h: &MultiPoly) -> Vec<Rat> {
        self.nodes.iter().map(|v| h.eval(v)).collect()
    }

    /// Hat transform of a value vector: the signed, table-weighted sums
    /// that invert interpolation.
    pub fn hat(&self, values: &[Rat]) -> Vec<Rat> {
        assert_eq!(values.len(), self.len());
        (0..self.len())
            .map(|mu| {
                let mut acc = Rat::zero();
                for tau in 0..self.len() {
                    if self.ells[tau] > self.ells[mu] {
                        continue;
                    }
                    let entry = self.ptable.get(tau, mu);
                    if !entry.is_zero() {
                        acc += sign(self.ells[tau]) * entry * &values[tau];
                    }
                }
                acc
            })
            .collect()
    }

    /// Hat transform of a coordinate vector in the interpolation basis.
    pub fn hat_coords(&self, coords: &[Rat]) -> Vec<Rat> {
        let values = self.ptable.transpose().mul_vec(coords);
        self.hat(&values)
    }

    /// Expand a polynomial of degree at most the table depth in the
    /// interpolation basis.
    pub fn expand(&self, h: &MultiPoly) -> Result<Vec<Rat>> {
        if h.degree() > self.max_ell {
            return Err(Error::WindowExceeded);
        }
        let hat = self.hat(&self.values_of(h));
        Ok((0..self.len())
            .map(|mu| sign(self.ells[mu]) * &hat[mu])
            .collect())
    }

    /// Expand many value columns at once: column `j` of the input holds
    /// the node values of some degree-bounded polynomial, column `j` of
    /// the output its coordinates in the interpolation basis.
    pub fn expand_value_columns(&self, values: &RatMat) -> RatMat {
        assert_eq!(values.rows(), self.len());
        // coords = S . (S . ptable)^T . values with S the sign diagonal.
        let n = self.len();
        let signed = RatMat::from_fn(n, n, |mu, tau| sign(self.ells[tau]) * self.ptable.get(tau, mu));
        let mut out = signed.mul(values);
        for mu in 0..n {
            if self.ells[mu] % 2 != 0 {
                for j in 0..out.cols() {
                    let v = -out.get(mu, j).clone();
                    out.set(mu, j, v);
                }
            }
        }
        out
    }

    /// Node values of the polynomials whose coefficients over the
    /// invariant monomial basis form the columns of `coeffs`; rows may be
    /// a prefix of the basis. With `negate_nodes` the values are taken at
    /// the reflected nodes, using that the basis elements are homogeneous.
    pub fn values_from_basis_coeffs(&self, coeffs: &RatMat, negate_nodes: bool) -> RatMat {
        let mut padded = RatMat::zero(self.len(), coeffs.cols());
        for j in 0..coeffs.rows() {
            let flip = negate_nodes && self.basis[j].degree() % 2 != 0;
            for c in 0..coeffs.cols() {
                let v = coeffs.get(j, c);
                padded.set(j, c, if flip { -v.clone() } else { v.clone() });
            }
        }
        self.collocation.mul(&padded)
    }

    /// Coordinates of `h(-z)` given the coordinates of `h`.
    pub fn minus_coords(&self, coords: &[Rat]) -> Result<Vec<Rat>> {
        self.expand(&self.assemble(coords).substitute_neg())
    }

    // ---- Bilinear forms ----

    /// Diagonal pairing weighted by the virtual dimensions.
    pub fn scalar_product(&self, f: &[Rat], g: &[Rat]) -> Result<Rat> {
        assert_eq!(f.len(), self.len());
        assert_eq!(g.len(), self.len());
        let dims = self.dims.as_ref().ok_or(Error::NotStronglyDominant)?;
        let mut acc = Rat::zero();
        for i in 0..self.len() {
            acc += &f[i] * &g[i] * &dims[i];
        }
        Ok(acc)
    }

    /// The pairing twisted by the substitution `z -> -z` on both sides.
    pub fn scalar_product_minus(&self, f: &[Rat], g: &[Rat]) -> Result<Rat> {
        let fm = self.minus_coords(f)?;
        let gm = self.minus_coords(g)?;
        self.scalar_product(&fm, &gm)
    }

    /// Unit coordinate vector.
    pub fn unit(&self, idx: usize) -> Vec<Rat> {
        let mut v = alloc::vec![Rat::zero(); self.len()];
        v[idx] = Rat::one();
        v
    }
}

/// The interpolation polynomial of a single dominant weight.
pub fn capelli_polynomial(datum: &RootDatum, rho: &Rho, lambda: &Weight) -> Result<MultiPoly> {
    if !datum.in_lambda_plus(&lambda.0) {
        return Err(Error::UnsupportedCase(alloc::string::String::from(
            "weight is not dominant",
        )));
    }
    let tables = Tables::build(datum, rho, datum.ell(lambda))?;
    let idx = tables
        .index_of(lambda)
        .expect("dominant weight inside its own ell-ball");
    Ok(tables.p(idx).clone())
}

/// The normalization of [`capelli_polynomial`] taking value one at the
/// negated shift vector.
pub fn q_polynomial(datum: &RootDatum, rho: &Rho, lambda: &Weight) -> Result<MultiPoly> {
    let p = capelli_polynomial(datum, rho, lambda)?;
    let v = p.eval(&rho.minus_coords());
    if v.is_zero() {
        return Err(Error::ZeroAtMinusRho);
    }
    Ok(p.scale(&(Rat::one() / v)))
}
