//! Exact coefficient arithmetic for the deformation parameters.
//!
//! A [`ScalarElement`] is a Laurent polynomial over the rationals in the
//! deformation parameters `p`, `q` and the formal unimodular phase
//! `λ = e^{2πiθ}`.  Because `θ` is irrational no power of `λ` collapses to a
//! rational, so `λ` is a free invertible generator; the *-involution fixes
//! `p` and `q` and inverts `λ`.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{Float, One, Signed, ToPrimitive, Zero};

/// Exponents of one Laurent term, as `(e_p, e_q, e_λ)`.
pub type Exponents = (i64, i64, i64);

/// Exact Laurent polynomial in `p`, `q`, `λ` over the rationals.
///
/// The zero scalar is the empty term map; stored coefficients are never
/// zero, so equality is structural.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct ScalarElement {
    terms: BTreeMap<Exponents, BigRational>,
}

impl ScalarElement {
    pub fn zero() -> Self {
        ScalarElement::default()
    }

    pub fn one() -> Self {
        ScalarElement::from_integer(1)
    }

    pub fn from_integer(n: i64) -> Self {
        ScalarElement::from_rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_rational(r: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !r.is_zero() {
            terms.insert((0, 0, 0), r);
        }
        ScalarElement { terms }
    }

    /// The monomial `c · p^a q^b λ^c`.
    pub fn term(coeff: BigRational, e_p: i64, e_q: i64, e_lambda: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert((e_p, e_q, e_lambda), coeff);
        }
        ScalarElement { terms }
    }

    pub fn p_pow(e: i64) -> Self {
        ScalarElement::term(BigRational::one(), e, 0, 0)
    }

    pub fn q_pow(e: i64) -> Self {
        ScalarElement::term(BigRational::one(), 0, e, 0)
    }

    pub fn lambda_pow(e: i64) -> Self {
        ScalarElement::term(BigRational::one(), 0, 0, e)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&(0, 0, 0))
                .map_or(false, |c| c.is_one())
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &BigRational)> {
        self.terms.iter()
    }

    /// The inverse of a single-term scalar, if the scalar is one.
    pub fn invert_monomial(&self) -> Option<Self> {
        if self.terms.len() != 1 {
            return None;
        }
        let ((ep, eq, el), c) = self.terms.iter().next().unwrap();
        Some(ScalarElement::term(c.recip(), -ep, -eq, -el))
    }

    /// True when no term involves `q` or `λ` (a Laurent polynomial in `p`).
    pub fn is_p_only(&self) -> bool {
        self.terms.keys().all(|&(_, eq, el)| eq == 0 && el == 0)
    }

    /// True when no term involves `p` or `λ`.
    pub fn is_q_only(&self) -> bool {
        self.terms.keys().all(|&(ep, _, el)| ep == 0 && el == 0)
    }

    /// *-involution: fixes `p`, `q` and the rational coefficients, inverts `λ`.
    pub fn star(&self) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(&(ep, eq, el), c)| ((ep, eq, -el), c.clone()))
            .collect();
        ScalarElement { terms }
    }

    fn insert_term(terms: &mut BTreeMap<Exponents, BigRational>, e: Exponents, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match terms.entry(e) {
            alloc::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get() + c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return ScalarElement::zero();
        }
        let terms = self
            .terms
            .iter()
            .map(|(&e, k)| (e, k * c))
            .collect();
        ScalarElement { terms }
    }

    /// Multiply every term by `p^dp q^dq λ^dl`.
    pub fn shift_exponents(&self, dp: i64, dq: i64, dl: i64) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(&(ep, eq, el), c)| ((ep + dp, eq + dq, el + dl), c.clone()))
            .collect();
        ScalarElement { terms }
    }

    /// Numeric evaluation with `λ = exp(2πi·theta)`.
    ///
    /// `p_val` and `q_val` must lie in the open interval `(0, 1)`.
    pub fn eval(&self, p_val: f64, q_val: f64, theta: f64) -> Result<Complex64, EvalError> {
        if !(p_val > 0.0 && p_val < 1.0) {
            return Err(EvalError::ParameterOutOfRange("p"));
        }
        if !(q_val > 0.0 && q_val < 1.0) {
            return Err(EvalError::ParameterOutOfRange("q"));
        }
        let mut acc = Complex64::new(0.0, 0.0);
        for (&(ep, eq, el), c) in &self.terms {
            let coeff = c.to_f64().ok_or(EvalError::CoefficientOverflow)?;
            let modulus = p_val.powi(ep as i32) * q_val.powi(eq as i32);
            let angle = 2.0 * core::f64::consts::PI * theta * el as f64;
            let (sin, cos) = angle.sin_cos();
            acc += Complex64::new(cos, sin) * (coeff * modulus);
        }
        Ok(acc)
    }

    /// Canonical sorted-term rendering, e.g. `1 - 1·p^1`.
    pub fn to_canonical_string(&self) -> String {
        if self.terms.is_empty() {
            return String::from("0");
        }
        let mut out = String::new();
        for (i, (&(ep, eq, el), c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mag = c.abs();
            let mut parts: Vec<String> = Vec::new();
            parts.push(alloc::format!("{mag}"));
            if ep != 0 {
                parts.push(alloc::format!("p^{ep}"));
            }
            if eq != 0 {
                parts.push(alloc::format!("q^{eq}"));
            }
            if el != 0 {
                parts.push(alloc::format!("λ^{el}"));
            }
            out.push_str(&parts.join("·"));
        }
        out
    }

    /// Compact rendering used inside algebra elements: unit rational factors
    /// and `^1` are dropped, so `-1·p^1` renders as `p` (the sign is the
    /// caller's job). Multi-term scalars are parenthesised.
    pub(crate) fn to_compact_magnitude_string(&self) -> (bool, String) {
        if self.terms.len() != 1 {
            let mut shown = self.clone();
            let negative = self
                .terms
                .values()
                .all(|c| c.is_negative());
            if negative {
                shown = -&shown;
            }
            return (negative, alloc::format!("({})", shown.to_canonical_string()));
        }
        let (&(ep, eq, el), c) = self.terms.iter().next().unwrap();
        let neg = c.is_negative();
        let mag = c.abs();
        let mut parts: Vec<String> = Vec::new();
        if !mag.is_one() || (ep == 0 && eq == 0 && el == 0) {
            parts.push(alloc::format!("{mag}"));
        }
        for (sym, e) in [("p", ep), ("q", eq), ("λ", el)] {
            if e == 1 {
                parts.push(String::from(sym));
            } else if e != 0 {
                parts.push(alloc::format!("{sym}^{e}"));
            }
        }
        (neg, parts.join("·"))
    }
}

/// Numeric evaluation failure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EvalError {
    /// `p` or `q` outside the open interval `(0, 1)`.
    ParameterOutOfRange(&'static str),
    /// A rational coefficient does not fit in an `f64`.
    CoefficientOverflow,
}

impl fmt::Display for EvalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EvalError::ParameterOutOfRange(name) => {
                write!(f, "parameter {name} must lie in the open interval (0, 1)")
            }
            EvalError::CoefficientOverflow => write!(f, "coefficient too large for f64"),
        }
    }
}

impl fmt::Display for ScalarElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_canonical_string())
    }
}

impl fmt::Debug for ScalarElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_canonical_string())
    }
}

impl Add for &ScalarElement {
    type Output = ScalarElement;

    fn add(self, rhs: &ScalarElement) -> ScalarElement {
        let mut terms = self.terms.clone();
        for (&e, c) in &rhs.terms {
            ScalarElement::insert_term(&mut terms, e, c.clone());
        }
        ScalarElement { terms }
    }
}

impl Sub for &ScalarElement {
    type Output = ScalarElement;

    fn sub(self, rhs: &ScalarElement) -> ScalarElement {
        let mut terms = self.terms.clone();
        for (&e, c) in &rhs.terms {
            ScalarElement::insert_term(&mut terms, e, -c.clone());
        }
        ScalarElement { terms }
    }
}

impl Neg for &ScalarElement {
    type Output = ScalarElement;

    fn neg(self) -> ScalarElement {
        let terms = self
            .terms
            .iter()
            .map(|(&e, c)| (e, -c.clone()))
            .collect();
        ScalarElement { terms }
    }
}

impl Mul for &ScalarElement {
    type Output = ScalarElement;

    fn mul(self, rhs: &ScalarElement) -> ScalarElement {
        let mut terms = BTreeMap::new();
        for (&(ap, aq, al), ac) in &self.terms {
            for (&(bp, bq, bl), bc) in &rhs.terms {
                ScalarElement::insert_term(&mut terms, (ap + bp, aq + bq, al + bl), ac * bc);
            }
        }
        ScalarElement { terms }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p() -> ScalarElement {
        ScalarElement::p_pow(1)
    }

    fn q() -> ScalarElement {
        ScalarElement::q_pow(1)
    }

    #[test]
    fn addition_cancels() {
        let one_minus_p = &ScalarElement::one() - &p();
        assert_eq!(&one_minus_p + &p(), ScalarElement::one());
        assert_eq!(&ScalarElement::zero() + &(&q() * &q()), &q() * &q());
        assert_eq!(&p() + &p(), p().scale(&BigRational::from_integer(2.into())));
    }

    #[test]
    fn multiplication_distributes_exponents() {
        let one = ScalarElement::one();
        let lhs = &(&one - &p()) * &(&one + &p());
        assert_eq!(lhs, &one - &(&p() * &p()));
        assert_eq!(&ScalarElement::p_pow(-1) * &p(), one);
        assert_eq!(
            &ScalarElement::lambda_pow(1) * &ScalarElement::lambda_pow(-1),
            ScalarElement::one()
        );
    }

    #[test]
    fn star_inverts_lambda_only() {
        let x = &(&ScalarElement::lambda_pow(2) * &p()) * &ScalarElement::q_pow(-1);
        let expected = &(&ScalarElement::lambda_pow(-2) * &p()) * &ScalarElement::q_pow(-1);
        assert_eq!(x.star(), expected);
        let half3 = ScalarElement::from_rational(BigRational::new(3.into(), 2.into()));
        assert_eq!(half3.star(), half3);
    }

    #[test]
    fn eval_basics() {
        let v = ScalarElement::p_pow(-1).eval(0.5, 0.3, 0.0).unwrap();
        assert!((v.re - 2.0).abs() < 1e-12 && v.im.abs() < 1e-15);
        let v = (&ScalarElement::one() - &q()).eval(0.5, 0.3, 0.0).unwrap();
        assert!((v.re - 0.7).abs() < 1e-12);
        let v = ScalarElement::lambda_pow(1).eval(0.5, 0.3, 0.25).unwrap();
        assert!(v.re.abs() < 1e-12 && (v.im - 1.0).abs() < 1e-12);
        assert!(ScalarElement::one().eval(1.5, 0.3, 0.0).is_err());
        assert!(ScalarElement::one().eval(0.5, -0.1, 0.0).is_err());
    }

    #[test]
    fn canonical_rendering() {
        let x = &ScalarElement::one() - &p();
        assert_eq!(x.to_canonical_string(), "1 - 1·p^1");
        assert_eq!(ScalarElement::zero().to_canonical_string(), "0");
        let y = ScalarElement::term(BigRational::new(3.into(), 2.into()), 2, 0, -1);
        assert_eq!(y.to_canonical_string(), "3/2·p^2·λ^-1");
    }
}
