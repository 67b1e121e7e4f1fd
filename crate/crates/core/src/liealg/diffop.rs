//! First-order differential operators with exact polynomial coefficients.
//!
//! An operator has the form `D = Σ_v a_v(x) ∂_v + a_0(x)` with [`MultiPoly`]
//! coefficients. The commutator of two such operators is again first order;
//! it is computed exactly, which is what makes symbolic verification of
//! algebra closure possible.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_complex::Complex64;
use num_rational::BigRational;

use super::poly::{CRat, MultiPoly, NumericPoint, Var, ALL_VARS};
use super::LieError;

/// A first-order linear differential operator `Σ_v a_v ∂_v + a_0`.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct DiffOp {
    coeffs: BTreeMap<Var, MultiPoly>,
    zeroth: MultiPoly,
}

impl DiffOp {
    /// The zero operator.
    pub fn zero() -> Self {
        DiffOp::default()
    }

    /// True when every coefficient (including the zeroth-order part) vanishes.
    pub fn is_zero(&self) -> bool {
        self.zeroth.is_zero() && self.coeffs.values().all(MultiPoly::is_zero)
    }

    /// Coefficient of `∂_v` (zero polynomial if absent).
    pub fn coeff(&self, v: Var) -> MultiPoly {
        self.coeffs.get(&v).cloned().unwrap_or_default()
    }

    /// Zeroth-order (multiplication) part.
    pub fn zeroth(&self) -> &MultiPoly {
        &self.zeroth
    }

    /// Add `poly · ∂_v` to the operator.
    pub fn add_coeff(&mut self, v: Var, poly: MultiPoly) {
        let entry = self.coeffs.entry(v).or_default();
        *entry = entry.add(&poly);
        if entry.is_zero() {
            self.coeffs.remove(&v);
        }
    }

    /// Add a zeroth-order term.
    pub fn add_zeroth(&mut self, poly: MultiPoly) {
        self.zeroth = self.zeroth.add(&poly);
    }

    /// Builder: `self + poly · ∂_v`.
    pub fn with_coeff(mut self, v: Var, poly: MultiPoly) -> Self {
        self.add_coeff(v, poly);
        self
    }

    /// Builder: `self + poly`.
    pub fn with_zeroth(mut self, poly: MultiPoly) -> Self {
        self.add_zeroth(poly);
        self
    }

    /// Operator sum.
    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (v, p) in &other.coeffs {
            out.add_coeff(*v, p.clone());
        }
        out.add_zeroth(other.zeroth.clone());
        out
    }

    /// Operator difference.
    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&CRat::from_int(-1)))
    }

    /// Scalar multiple.
    pub fn scale(&self, c: &CRat) -> Self {
        let mut out = DiffOp::zero();
        for (v, p) in &self.coeffs {
            out.add_coeff(*v, p.scale(c));
        }
        out.add_zeroth(self.zeroth.scale(c));
        out
    }

    /// Multiply the operator by a polynomial from the left.
    pub fn scale_poly(&self, poly: &MultiPoly) -> Self {
        let mut out = DiffOp::zero();
        for (v, p) in &self.coeffs {
            out.add_coeff(*v, p.mul(poly));
        }
        out.add_zeroth(self.zeroth.mul(poly));
        out
    }

    /// Apply the operator to a polynomial: `D f = Σ_v a_v ∂_v f + a_0 f`.
    pub fn apply(&self, f: &MultiPoly) -> MultiPoly {
        let mut out = self.zeroth.mul(f);
        for (v, a) in &self.coeffs {
            out = out.add(&a.mul(&f.diff(*v)));
        }
        out
    }

    /// Exact commutator `[self, other]`.
    ///
    /// For first-order operators `A = Σ a_v ∂_v + a_0`, `B = Σ b_v ∂_v + b_0`
    /// the bracket is again first order, with
    /// `[A,B]_w = Σ_v (a_v ∂_v b_w − b_v ∂_v a_w)` and the same formula with
    /// `w → 0` for the zeroth part.
    pub fn commutator(&self, other: &Self) -> Self {
        let mut out = DiffOp::zero();
        let mut active: BTreeSet<Var> = self.coeffs.keys().copied().collect();
        active.extend(other.coeffs.keys().copied());
        for w in &active {
            let mut cw = MultiPoly::zero();
            let bw = other.coeff(*w);
            let aw = self.coeff(*w);
            for v in &active {
                cw = cw.add(&self.coeff(*v).mul(&bw.diff(*v)));
                cw = cw.sub(&other.coeff(*v).mul(&aw.diff(*v)));
            }
            out.add_coeff(*w, cw);
        }
        let mut c0 = MultiPoly::zero();
        for v in &active {
            c0 = c0.add(&self.coeff(*v).mul(&other.zeroth.diff(*v)));
            c0 = c0.sub(&other.coeff(*v).mul(&self.zeroth.diff(*v)));
        }
        out.add_zeroth(c0);
        out
    }

    /// Variables whose `∂` appears with nonzero coefficient.
    pub fn active_vars(&self) -> Vec<Var> {
        self.coeffs
            .iter()
            .filter(|(_, p)| !p.is_zero())
            .map(|(v, _)| *v)
            .collect()
    }

    /// All variables appearing anywhere (as derivative directions or inside
    /// coefficient polynomials).
    pub fn all_vars(&self) -> Vec<Var> {
        let mut set = BTreeSet::new();
        for (v, p) in &self.coeffs {
            set.insert(*v);
            set.extend(p.vars());
        }
        set.extend(self.zeroth.vars());
        ALL_VARS.into_iter().filter(|v| set.contains(v)).collect()
    }

    /// Rename variables (coefficients and derivative directions alike).
    pub fn rename(&self, map: impl Fn(Var) -> Var + Copy) -> Self {
        let mut out = DiffOp::zero();
        for (v, p) in &self.coeffs {
            out.add_coeff(map(*v), p.rename(map));
        }
        out.add_zeroth(self.zeroth.rename(map));
        out
    }

    /// Substitute a nonzero rational value for symbolic `μ`. Fails when the
    /// operator differentiates with respect to `μ`.
    pub fn subst_mu(&self, mu: &BigRational) -> Result<Self, LieError> {
        if !self.coeff(Var::Mu).is_zero() {
            return Err(LieError::InvalidParameter(
                "cannot substitute mu into an operator containing d/dmu".into(),
            ));
        }
        let mut out = DiffOp::zero();
        for (v, p) in &self.coeffs {
            out.add_coeff(*v, p.subst_mu(mu)?);
        }
        out.add_zeroth(self.zeroth.subst_mu(mu)?);
        Ok(out)
    }

    /// Coefficient-wise `μ → 0` limit (see
    /// [`MultiPoly::limit_mu_to_zero`]). Fails when the operator
    /// differentiates with respect to `μ` or a coefficient diverges.
    pub fn limit_mu_to_zero(&self) -> Result<Self, LieError> {
        if !self.coeff(Var::Mu).is_zero() {
            return Err(LieError::DivergentMuLimit(
                "operator contains d/dmu; contract before taking the limit".into(),
            ));
        }
        let mut out = DiffOp::zero();
        for (v, p) in &self.coeffs {
            out.add_coeff(*v, p.limit_mu_to_zero()?);
        }
        out.add_zeroth(self.zeroth.limit_mu_to_zero()?);
        Ok(out)
    }

    /// Exact scalar `α` with `self = α · other`, if one exists.
    pub fn proportionality(&self, other: &Self) -> Option<CRat> {
        // Candidate ratio from the first structurally nonzero component.
        let mut candidate: Option<CRat> = None;
        let mut pairs: Vec<(MultiPoly, MultiPoly)> = Vec::new();
        let mut vars: BTreeSet<Var> = self.coeffs.keys().copied().collect();
        vars.extend(other.coeffs.keys().copied());
        for v in vars {
            pairs.push((self.coeff(v), other.coeff(v)));
        }
        pairs.push((self.zeroth.clone(), other.zeroth.clone()));
        for (a, b) in &pairs {
            if b.is_zero() {
                if a.is_zero() {
                    continue;
                }
                return None;
            }
            let alpha = a.proportionality(b)?;
            match &candidate {
                None if !alpha.is_zero() => candidate = Some(alpha),
                None => {
                    // a is zero while b is not: scalar must be 0; keep
                    // looking for a contradiction.
                    candidate = Some(CRat::zero());
                }
                Some(c) => {
                    if *c != alpha {
                        return None;
                    }
                }
            }
        }
        candidate.or(Some(CRat::zero()))
    }

    /// Numeric coefficients at a point: `(per-direction values, zeroth value)`.
    pub fn eval_coeffs(&self, p: &NumericPoint) -> (Vec<(Var, Complex64)>, Complex64) {
        let per_var = self
            .coeffs
            .iter()
            .map(|(v, poly)| (*v, poly.eval(p)))
            .collect();
        (per_var, self.zeroth.eval(p))
    }
}

impl fmt::Display for DiffOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (v, p) in &self.coeffs {
            if p.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            write!(f, "({}) d/d{}", p, v)?;
        }
        if !self.zeroth.is_zero() || first {
            if !first {
                f.write_str(" + ")?;
            }
            write!(f, "({})", self.zeroth)?;
        }
        Ok(())
    }
}
