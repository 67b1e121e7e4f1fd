//! Exact multivariate Laurent polynomials over the complex rationals.
//!
//! This is the arithmetic substrate for the generator algebras: commutators
//! are computed symbolically, so algebra closure is verified exactly rather
//! than to floating-point tolerance.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::LieError;

/// Variables of the polynomial ring.
///
/// The alphabet is fixed: coordinates of a first field (time, space, dual
/// rapidity coordinates, holomorphic pair), their second-field copies used
/// by two-body lifts, the kinematic mass `μ` (symbolic only when a family is
/// built with [`MuSpec::Symbolic`](super::MuSpec)), and numbered spatial /
/// dual components for the vector-valued conformal-galilean family.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
#[repr(usize)]
pub enum Var {
    /// Time coordinate `t`.
    T = 0,
    /// 1D space coordinate `r`.
    R,
    /// 2D parallel space coordinate `r∥`.
    RPar,
    /// 2D transverse space coordinate `r⊥`.
    RPerp,
    /// Dual (rapidity-conjugate) coordinate `ζ`.
    Zeta,
    /// Conjugate dual coordinate `ζ̄`.
    ZetaBar,
    /// Holomorphic coordinate `z`.
    Z,
    /// Antiholomorphic coordinate `z̄`.
    ZBar,
    /// Kinematic mass `μ` (Laurent: negative powers allowed).
    Mu,
    /// Second-field copy of `t`.
    T2,
    /// Second-field copy of `r`.
    R2,
    /// Second-field copy of `r∥`.
    RPar2,
    /// Second-field copy of `r⊥`.
    RPerp2,
    /// Second-field copy of `ζ`.
    Zeta2,
    /// Second-field copy of `ζ̄`.
    ZetaBar2,
    /// Second-field copy of `z`.
    Z2,
    /// Second-field copy of `z̄`.
    ZBar2,
    /// Second-field copy of `μ`.
    Mu2,
    /// Spatial component `r_1` of the vector-valued family.
    RC1,
    /// Spatial component `r_2`.
    RC2,
    /// Spatial component `r_3`.
    RC3,
    /// Dual component `ζ_1` of the vector-valued family.
    ZC1,
    /// Dual component `ζ_2`.
    ZC2,
    /// Dual component `ζ_3`.
    ZC3,
}

/// Number of variables in the fixed alphabet.
pub const NVARS: usize = 24;

/// All variables, in index order.
pub const ALL_VARS: [Var; NVARS] = [
    Var::T,
    Var::R,
    Var::RPar,
    Var::RPerp,
    Var::Zeta,
    Var::ZetaBar,
    Var::Z,
    Var::ZBar,
    Var::Mu,
    Var::T2,
    Var::R2,
    Var::RPar2,
    Var::RPerp2,
    Var::Zeta2,
    Var::ZetaBar2,
    Var::Z2,
    Var::ZBar2,
    Var::Mu2,
    Var::RC1,
    Var::RC2,
    Var::RC3,
    Var::ZC1,
    Var::ZC2,
    Var::ZC3,
];

impl Var {
    /// Position of the variable in exponent vectors.
    #[inline]
    pub fn index(self) -> usize {
        self as usize
    }

    /// Human-readable name used by `Display` implementations.
    pub fn name(self) -> &'static str {
        match self {
            Var::T => "t",
            Var::R => "r",
            Var::RPar => "rpar",
            Var::RPerp => "rperp",
            Var::Zeta => "zeta",
            Var::ZetaBar => "zetabar",
            Var::Z => "z",
            Var::ZBar => "zbar",
            Var::Mu => "mu",
            Var::T2 => "t'",
            Var::R2 => "r'",
            Var::RPar2 => "rpar'",
            Var::RPerp2 => "rperp'",
            Var::Zeta2 => "zeta'",
            Var::ZetaBar2 => "zetabar'",
            Var::Z2 => "z'",
            Var::ZBar2 => "zbar'",
            Var::Mu2 => "mu'",
            Var::RC1 => "r1",
            Var::RC2 => "r2",
            Var::RC3 => "r3",
            Var::ZC1 => "zeta1",
            Var::ZC2 => "zeta2",
            Var::ZC3 => "zeta3",
        }
    }

    /// The second-field copy of a first-field coordinate (`μ` included).
    pub fn second_copy(self) -> Option<Var> {
        match self {
            Var::T => Some(Var::T2),
            Var::R => Some(Var::R2),
            Var::RPar => Some(Var::RPar2),
            Var::RPerp => Some(Var::RPerp2),
            Var::Zeta => Some(Var::Zeta2),
            Var::ZetaBar => Some(Var::ZetaBar2),
            Var::Z => Some(Var::Z2),
            Var::ZBar => Some(Var::ZBar2),
            Var::Mu => Some(Var::Mu2),
            _ => None,
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A complex number with exact rational real and imaginary parts.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CRat {
    /// Real part.
    pub re: BigRational,
    /// Imaginary part.
    pub im: BigRational,
}

impl CRat {
    /// `0`.
    pub fn zero() -> Self {
        CRat {
            re: BigRational::zero(),
            im: BigRational::zero(),
        }
    }

    /// `1`.
    pub fn one() -> Self {
        CRat {
            re: BigRational::one(),
            im: BigRational::zero(),
        }
    }

    /// The imaginary unit `i`.
    pub fn i() -> Self {
        CRat {
            re: BigRational::zero(),
            im: BigRational::one(),
        }
    }

    /// Real integer constant.
    pub fn from_int(n: i64) -> Self {
        CRat {
            re: BigRational::from_integer(BigInt::from(n)),
            im: BigRational::zero(),
        }
    }

    /// Real rational constant `p/q`; panics if `q == 0`.
    pub fn from_ratio(p: i64, q: i64) -> Self {
        CRat {
            re: BigRational::new(BigInt::from(p), BigInt::from(q)),
            im: BigRational::zero(),
        }
    }

    /// Purely real constant from a `BigRational`.
    pub fn from_real(re: BigRational) -> Self {
        CRat {
            re,
            im: BigRational::zero(),
        }
    }

    /// Purely imaginary constant `i·im`.
    pub fn from_imag(im: BigRational) -> Self {
        CRat {
            re: BigRational::zero(),
            im,
        }
    }

    /// True when both parts vanish.
    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    /// Complex conjugate.
    pub fn conj(&self) -> Self {
        CRat {
            re: self.re.clone(),
            im: -self.im.clone(),
        }
    }

    /// Sum.
    pub fn add(&self, other: &Self) -> Self {
        CRat {
            re: &self.re + &other.re,
            im: &self.im + &other.im,
        }
    }

    /// Difference.
    pub fn sub(&self, other: &Self) -> Self {
        CRat {
            re: &self.re - &other.re,
            im: &self.im - &other.im,
        }
    }

    /// Negation.
    pub fn neg(&self) -> Self {
        CRat {
            re: -self.re.clone(),
            im: -self.im.clone(),
        }
    }

    /// Product.
    pub fn mul(&self, other: &Self) -> Self {
        CRat {
            re: &self.re * &other.re - &self.im * &other.im,
            im: &self.re * &other.im + &self.im * &other.re,
        }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let norm = &self.re * &self.re + &self.im * &self.im;
        Some(CRat {
            re: &self.re / &norm,
            im: -(&self.im / &norm),
        })
    }

    /// Quotient `self / other`; `None` when `other` is zero.
    pub fn div(&self, other: &Self) -> Option<Self> {
        other.inv().map(|inv| self.mul(&inv))
    }

    /// Integer power (negative exponents invert; `None` for `0^-k`).
    pub fn powi(&self, exp: i32) -> Option<Self> {
        let base = if exp < 0 { self.inv()? } else { self.clone() };
        let mut acc = CRat::one();
        for _ in 0..exp.unsigned_abs() {
            acc = acc.mul(&base);
        }
        Some(acc)
    }

    /// Nearest floating-point value.
    pub fn to_c64(&self) -> Complex64 {
        Complex64::new(
            self.re.to_f64().unwrap_or(f64::NAN),
            self.im.to_f64().unwrap_or(f64::NAN),
        )
    }
}

impl fmt::Display for CRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            write!(f, "{}", self.re)
        } else if self.re.is_zero() {
            write!(f, "{}i", self.im)
        } else if self.im.is_negative() {
            write!(f, "({}{}i)", self.re, self.im)
        } else {
            write!(f, "({}+{}i)", self.re, self.im)
        }
    }
}

/// Exponent vector of a Laurent monomial.
///
/// Exponents may be negative (needed for `1/μ` coefficients of symbolic-mass
/// generators); the derived lexicographic order is the canonical term order.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Mono {
    exps: [i16; NVARS],
}

impl Mono {
    /// The empty monomial (all exponents zero).
    pub fn unit() -> Self {
        Mono { exps: [0; NVARS] }
    }

    /// Monomial `v^k`.
    pub fn of(v: Var, k: i32) -> Self {
        let mut exps = [0i16; NVARS];
        exps[v.index()] = k as i16;
        Mono { exps }
    }

    /// Exponent of `v`.
    #[inline]
    pub fn exp(&self, v: Var) -> i32 {
        self.exps[v.index()] as i32
    }

    /// Product of monomials (exponent sum).
    pub fn mul(&self, other: &Self) -> Self {
        let mut exps = [0i16; NVARS];
        for (i, e) in exps.iter_mut().enumerate() {
            *e = self.exps[i] + other.exps[i];
        }
        Mono { exps }
    }

    /// Monomial with the exponent of `v` shifted by `dk`.
    pub fn shift(&self, v: Var, dk: i32) -> Self {
        let mut m = *self;
        m.exps[v.index()] += dk as i16;
        m
    }

    /// Monomial with the exponent of `v` set to zero.
    pub fn without(&self, v: Var) -> Self {
        let mut m = *self;
        m.exps[v.index()] = 0;
        m
    }

    fn is_unit(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }
}

impl fmt::Display for Mono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_unit() {
            return f.write_str("1");
        }
        let mut first = true;
        for v in ALL_VARS {
            let e = self.exp(v);
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{}", v)?;
            } else {
                write!(f, "{}^{}", v, e)?;
            }
        }
        Ok(())
    }
}

/// Numeric assignment of the variable alphabet, used to evaluate polynomials
/// and differential-operator coefficients at a point.
#[derive(Clone, Copy, Debug)]
pub struct NumericPoint {
    vals: [Complex64; NVARS],
}

impl NumericPoint {
    /// All-zero assignment.
    pub fn new() -> Self {
        NumericPoint {
            vals: [Complex64::new(0.0, 0.0); NVARS],
        }
    }

    /// Set a real value.
    pub fn set(&mut self, v: Var, x: f64) -> &mut Self {
        self.vals[v.index()] = Complex64::new(x, 0.0);
        self
    }

    /// Set a complex value.
    pub fn set_complex(&mut self, v: Var, x: Complex64) -> &mut Self {
        self.vals[v.index()] = x;
        self
    }

    /// Current value of a variable.
    pub fn get(&self, v: Var) -> Complex64 {
        self.vals[v.index()]
    }

    /// Real part of the value of a variable.
    pub fn get_re(&self, v: Var) -> f64 {
        self.vals[v.index()].re
    }

    /// Copy with `v` shifted by a real step (for finite differences).
    pub fn shifted(&self, v: Var, h: f64) -> Self {
        let mut p = *self;
        p.vals[v.index()] += Complex64::new(h, 0.0);
        p
    }
}

impl Default for NumericPoint {
    fn default() -> Self {
        Self::new()
    }
}

impl From<&[(Var, f64)]> for NumericPoint {
    fn from(pairs: &[(Var, f64)]) -> Self {
        let mut p = NumericPoint::new();
        for &(v, x) in pairs {
            p.set(v, x);
        }
        p
    }
}

/// Multivariate Laurent polynomial with [`CRat`] coefficients.
///
/// Terms are kept in a canonical `BTreeMap` with no explicit zero
/// coefficients, so structural equality is mathematical equality.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct MultiPoly {
    terms: BTreeMap<Mono, CRat>,
}

impl MultiPoly {
    /// The zero polynomial.
    pub fn zero() -> Self {
        MultiPoly {
            terms: BTreeMap::new(),
        }
    }

    /// The constant polynomial `1`.
    pub fn one() -> Self {
        MultiPoly::constant(CRat::one())
    }

    /// A constant polynomial.
    pub fn constant(c: CRat) -> Self {
        let mut p = MultiPoly::zero();
        p.add_term(Mono::unit(), c);
        p
    }

    /// The polynomial `v`.
    pub fn var(v: Var) -> Self {
        MultiPoly::var_pow(v, 1)
    }

    /// The Laurent monomial `v^k`.
    pub fn var_pow(v: Var, k: i32) -> Self {
        let mut p = MultiPoly::zero();
        p.add_term(Mono::of(v, k), CRat::one());
        p
    }

    /// Number of (nonzero) terms.
    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// True for the zero polynomial.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Iterator over `(monomial, coefficient)` pairs in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &CRat)> {
        self.terms.iter()
    }

    /// Leading term in the canonical order, if any.
    pub fn leading(&self) -> Option<(&Mono, &CRat)> {
        self.terms.iter().next_back()
    }

    /// Add `c·m` to the polynomial, dropping the term if it cancels.
    pub fn add_term(&mut self, m: Mono, c: CRat) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().add(&c);
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    /// Sum of two polynomials.
    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in other.terms() {
            out.add_term(*m, c.clone());
        }
        out
    }

    /// Difference of two polynomials.
    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in other.terms() {
            out.add_term(*m, c.neg());
        }
        out
    }

    /// Negation.
    pub fn neg(&self) -> Self {
        let mut out = MultiPoly::zero();
        for (m, c) in self.terms() {
            out.add_term(*m, c.neg());
        }
        out
    }

    /// Product of two polynomials.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = MultiPoly::zero();
        for (ma, ca) in self.terms() {
            for (mb, cb) in other.terms() {
                out.add_term(ma.mul(mb), ca.mul(cb));
            }
        }
        out
    }

    /// Scalar multiple.
    pub fn scale(&self, c: &CRat) -> Self {
        let mut out = MultiPoly::zero();
        for (m, coeff) in self.terms() {
            out.add_term(*m, coeff.mul(c));
        }
        out
    }

    /// Non-negative integer power.
    pub fn pow(&self, n: u32) -> Self {
        let mut acc = MultiPoly::one();
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// Formal partial derivative `∂/∂v` (Laurent-aware: `∂ v^k = k v^(k-1)`
    /// for any integer `k`).
    pub fn diff(&self, v: Var) -> Self {
        let mut out = MultiPoly::zero();
        for (m, c) in self.terms() {
            let k = m.exp(v);
            if k == 0 {
                continue;
            }
            out.add_term(m.shift(v, -1), c.mul(&CRat::from_int(k as i64)));
        }
        out
    }

    /// Evaluate at a numeric point.
    pub fn eval(&self, p: &NumericPoint) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for (m, c) in self.terms() {
            let mut term = c.to_c64();
            for v in ALL_VARS {
                let e = m.exp(v);
                if e != 0 {
                    term *= p.get(v).powi(e);
                }
            }
            acc += term;
        }
        acc
    }

    /// Rename variables through `map` (must be injective on the variables
    /// actually present, otherwise exponents merge).
    pub fn rename(&self, map: impl Fn(Var) -> Var) -> Self {
        let mut out = MultiPoly::zero();
        for (m, c) in self.terms() {
            let mut nm = Mono::unit();
            for v in ALL_VARS {
                let e = m.exp(v);
                if e != 0 {
                    nm = nm.mul(&Mono::of(map(v), e));
                }
            }
            out.add_term(nm, c.clone());
        }
        out
    }

    /// Substitute an exact nonzero rational value for `μ`.
    pub fn subst_mu(&self, mu: &BigRational) -> Result<Self, LieError> {
        if mu.is_zero() {
            return Err(LieError::InvalidParameter(
                "mu substitution requires a nonzero value".into(),
            ));
        }
        let mut out = MultiPoly::zero();
        for (m, c) in self.terms() {
            let k = m.exp(Var::Mu);
            let factor = CRat::from_real(mu.pow(k));
            out.add_term(m.without(Var::Mu), c.mul(&factor));
        }
        Ok(out)
    }

    /// Coefficient-wise limit `μ → 0`: terms with positive powers of `μ`
    /// vanish, `μ`-free terms survive, and any negative power makes the
    /// limit divergent (an error).
    pub fn limit_mu_to_zero(&self) -> Result<Self, LieError> {
        let mut out = MultiPoly::zero();
        for (m, c) in self.terms() {
            let k = m.exp(Var::Mu);
            if k < 0 {
                return Err(LieError::DivergentMuLimit(format!(
                    "term {}*{} diverges as mu -> 0",
                    c, m
                )));
            }
            if k == 0 {
                out.add_term(*m, c.clone());
            }
        }
        Ok(out)
    }

    /// Set of variables with nonzero exponent somewhere in the polynomial.
    pub fn vars(&self) -> Vec<Var> {
        ALL_VARS
            .into_iter()
            .filter(|&v| self.terms.keys().any(|m| m.exp(v) != 0))
            .collect()
    }

    /// `self / other` when the quotient is an exact scalar; `None`
    /// otherwise. The zero polynomial is proportional to anything with
    /// scalar `0`.
    pub fn proportionality(&self, other: &Self) -> Option<CRat> {
        if self.is_zero() {
            return Some(CRat::zero());
        }
        if other.is_zero() {
            return None;
        }
        let (m0, c0) = other.leading()?;
        let cs = self.terms.get(m0)?;
        let alpha = cs.div(c0)?;
        if self.sub(&other.scale(&alpha)).is_zero() {
            Some(alpha)
        } else {
            None
        }
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (m, c) in self.terms() {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            if m.is_unit() {
                write!(f, "{}", c)?;
            } else if *c == CRat::one() {
                write!(f, "{}", m)?;
            } else {
                write!(f, "{}*{}", c, m)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t() -> MultiPoly {
        MultiPoly::var(Var::T)
    }

    fn r() -> MultiPoly {
        MultiPoly::var(Var::R)
    }

    #[test]
    fn crat_field_ops() {
        let a = CRat::from_ratio(3, 4);
        let b = CRat::i().mul(&CRat::from_ratio(1, 2));
        let prod = a.mul(&b);
        assert_eq!(prod, CRat::from_imag(BigRational::new(3.into(), 8.into())));
        let quot = prod.div(&b).unwrap();
        assert_eq!(quot, a);
        assert!(CRat::zero().inv().is_none());
        // i^2 = -1
        assert_eq!(CRat::i().mul(&CRat::i()), CRat::from_int(-1));
    }

    #[test]
    fn ring_identities() {
        let p = t().add(&r().scale(&CRat::from_int(2)));
        let q = t().mul(&r()).sub(&MultiPoly::one());
        let s = MultiPoly::var_pow(Var::Mu, -1);
        // distributivity and commutativity
        assert_eq!(p.mul(&q.add(&s)), p.mul(&q).add(&p.mul(&s)));
        assert_eq!(p.mul(&q), q.mul(&p));
        // cancellation yields canonical zero
        assert!(p.sub(&p).is_zero());
        assert_eq!(p.add(&p.neg()), MultiPoly::zero());
    }

    #[test]
    fn laurent_derivative() {
        // d/dmu (mu^-2) = -2 mu^-3
        let p = MultiPoly::var_pow(Var::Mu, -2);
        let d = p.diff(Var::Mu);
        let expected = MultiPoly::var_pow(Var::Mu, -3).scale(&CRat::from_int(-2));
        assert_eq!(d, expected);
        // d/dt (t^3 r) = 3 t^2 r
        let p = MultiPoly::var_pow(Var::T, 3).mul(&r());
        let expected = MultiPoly::var_pow(Var::T, 2)
            .mul(&r())
            .scale(&CRat::from_int(3));
        assert_eq!(p.diff(Var::T), expected);
    }

    #[test]
    fn eval_matches_hand_value() {
        // p = (t + mu r)^2 at t=2, r=3, mu=1/2 -> (2 + 1.5)^2 = 12.25
        let p = t()
            .add(&MultiPoly::var(Var::Mu).mul(&r()))
            .pow(2);
        let mut pt = NumericPoint::new();
        pt.set(Var::T, 2.0).set(Var::R, 3.0).set(Var::Mu, 0.5);
        let v = p.eval(&pt);
        assert!((v.re - 12.25).abs() < 1e-14 && v.im.abs() < 1e-14);
    }

    #[test]
    fn mu_substitution_and_limit() {
        // p = t/mu + r + mu^2
        let p = t()
            .mul(&MultiPoly::var_pow(Var::Mu, -1))
            .add(&r())
            .add(&MultiPoly::var_pow(Var::Mu, 2));
        let half = BigRational::new(1.into(), 2.into());
        let sub = p.subst_mu(&half).unwrap();
        // -> 2t + r + 1/4
        let expected = t()
            .scale(&CRat::from_int(2))
            .add(&r())
            .add(&MultiPoly::constant(CRat::from_ratio(1, 4)));
        assert_eq!(sub, expected);
        // limit mu->0 diverges because of t/mu
        assert!(p.limit_mu_to_zero().is_err());
        // without the 1/mu term the limit keeps only mu-free terms
        let q = r().add(&MultiPoly::var_pow(Var::Mu, 2));
        assert_eq!(q.limit_mu_to_zero().unwrap(), r());
    }

    #[test]
    fn rename_to_second_field() {
        let p = t().mul(&r()).add(&MultiPoly::var_pow(Var::T, 2));
        let q = p.rename(|v| v.second_copy().unwrap_or(v));
        let expected = MultiPoly::var(Var::T2)
            .mul(&MultiPoly::var(Var::R2))
            .add(&MultiPoly::var_pow(Var::T2, 2));
        assert_eq!(q, expected);
    }

    #[test]
    fn proportionality_detection() {
        let p = t().mul(&r()).scale(&CRat::from_ratio(3, 2));
        let q = t().mul(&r());
        assert_eq!(p.proportionality(&q), Some(CRat::from_ratio(3, 2)));
        assert_eq!(MultiPoly::zero().proportionality(&q), Some(CRat::zero()));
        let not_prop = p.add(&MultiPoly::one());
        assert_eq!(not_prop.proportionality(&q), None);
    }
}
