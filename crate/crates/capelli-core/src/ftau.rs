//! The rational coefficient functions of the shift operators, kept in
//! factored form, and the virtual dimension.
//!
//! For a lattice vector `tau` the function is a quotient of falling
//! factorials: one factor `[omega(z) - k_omega (falling) omega(tau)]` per
//! pseudoroot `omega` and one factor `[alpha(z) (falling) alpha(tau)]` per
//! root `alpha`, with the convention that nonpositive depths contribute 1.

use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::datum::{LinearForm, RootDatum, Weight};
use crate::error::{Error, Result};
use crate::rho::{dominance_class, Rho};
use crate::scalar::{falling_factorial, pochhammer, sign, Rat};

/// One factor `[form(z) - shift (falling) depth]`.
#[derive(Clone, Debug)]
pub struct Factor {
    pub form: LinearForm,
    pub shift: Rat,
    pub depth: i64,
}

impl Factor {
    fn eval(&self, v: &[Rat]) -> Rat {
        falling_factorial(&(self.form.eval(v) - &self.shift), self.depth)
    }
}

/// Factored coefficient function attached to a lattice vector.
#[derive(Clone, Debug)]
pub struct FTau {
    pub numerator: Vec<Factor>,
    pub denominator: Vec<Factor>,
}

impl FTau {
    pub fn new(datum: &RootDatum, rho: &Rho, tau: &Weight) -> Self {
        let numerator = datum
            .phi()
            .iter()
            .enumerate()
            .map(|(i, omega)| Factor {
                form: omega.clone(),
                shift: rho.k_at(datum, i),
                depth: omega.depth(tau),
            })
            .collect();
        let denominator = datum
            .delta()
            .iter()
            .map(|alpha| Factor {
                form: alpha.clone(),
                shift: Rat::zero(),
                depth: alpha.depth(tau),
            })
            .collect();
        FTau {
            numerator,
            denominator,
        }
    }

    /// Exact evaluation; an evaluation point on a pole is an error.
    pub fn eval(&self, v: &[Rat]) -> Result<Rat> {
        let mut den = Rat::one();
        for f in &self.denominator {
            den *= f.eval(v);
        }
        if den.is_zero() {
            return Err(Error::Pole);
        }
        let mut num = Rat::one();
        for f in &self.numerator {
            num *= f.eval(v);
        }
        Ok(num / den)
    }
}

/// Convenience constructor-and-evaluate.
pub fn f_tau_at(datum: &RootDatum, rho: &Rho, tau: &Weight, v: &[Rat]) -> Result<Rat> {
    FTau::new(datum, rho, tau).eval(v)
}

/// Virtual dimension as the positive product over positive roots and
/// positive pseudoroots. Requires a strongly dominant shift vector, which
/// makes every factor finite and the result nonzero.
pub fn virtual_dimension(datum: &RootDatum, rho: &Rho, lambda: &Weight) -> Result<Rat> {
    if !dominance_class(datum, rho).strongly_dominant {
        return Err(Error::NotStronglyDominant);
    }
    let node = rho.plus(lambda);
    let mut out = Rat::one();
    for alpha in datum.delta_plus() {
        out *= alpha.eval(&node) / alpha.eval(rho.coords());
    }
    for (i, omega) in datum.phi_plus().iter().enumerate() {
        let k = rho.k_at(datum, i);
        let depth = omega.depth(lambda);
        debug_assert!(depth >= 0, "positive pseudoroots are nonnegative on dominant weights");
        let value = omega.eval(rho.coords());
        out *= pochhammer(&(&value + &k), depth) / pochhammer(&(&value - &k + Rat::one()), depth);
    }
    Ok(out)
}

/// The same quantity as a signed ratio of coefficient-function values;
/// needs a non-integral shift vector to avoid poles.
pub fn virtual_dimension_ratio(datum: &RootDatum, rho: &Rho, lambda: &Weight) -> Result<Rat> {
    if !dominance_class(datum, rho).non_integral {
        return Err(Error::NotNonIntegral);
    }
    let f = FTau::new(datum, rho, lambda);
    let at_minus_rho = f.eval(&rho.minus_coords())?;
    let at_node = f.eval(&rho.plus(lambda))?;
    if at_node.is_zero() {
        return Err(Error::Pole);
    }
    Ok(sign(datum.ell(lambda)) * at_minus_rho / at_node)
}
