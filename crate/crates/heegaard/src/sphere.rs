//! Quantum weighted Heegaard spheres.
//!
//! For coprime weights `(k, l)` the circle coaction `a ↦ a⊗u^k`,
//! `b ↦ b⊗u^l` fixes the subalgebra generated by `A`, `B` and
//! `C = a^l b^{*k}` (for `l > 0`) or `C = a^{*|l|} b^{*k}` (for `l < 0`).
//! This module constructs the generators inside the ambient algebra,
//! verifies their defining relations by normalization, exhibits the
//! generalised Weyl algebra structure and decomposes coinvariant elements
//! in the basis `A^r C^{#s}`, `B^r C^{#s}`.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_integer::Integer;

use crate::algebra::{AlgebraElement, CapitalKind, Head, Monomial};
use crate::check::{Check, CheckList};
use crate::scalar::ScalarElement;

/// Coprime weights `(k, l)` with `k > 0`, `l ≠ 0`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct WeightPair {
    k: i64,
    l: i64,
}

/// Rejected weight input.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum WeightError {
    NonPositiveK,
    ZeroL,
    NotCoprime,
}

impl fmt::Display for WeightError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WeightError::NonPositiveK => write!(f, "weight k must be positive"),
            WeightError::ZeroL => write!(f, "weight l must be nonzero"),
            WeightError::NotCoprime => write!(f, "weights k and |l| must be coprime"),
        }
    }
}

impl WeightPair {
    pub fn new(k: i64, l: i64) -> Result<Self, WeightError> {
        if k <= 0 {
            return Err(WeightError::NonPositiveK);
        }
        if l == 0 {
            return Err(WeightError::ZeroL);
        }
        if k.gcd(&l) != 1 {
            return Err(WeightError::NotCoprime);
        }
        Ok(WeightPair { k, l })
    }

    pub fn k(&self) -> i64 {
        self.k
    }

    pub fn l(&self) -> i64 {
        self.l
    }

    pub fn abs_l(&self) -> i64 {
        self.l.abs()
    }

    pub fn sign(&self) -> i64 {
        self.l.signum()
    }

    pub fn is_positive(&self) -> bool {
        self.l > 0
    }
}

impl fmt::Display for WeightPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.k, self.l)
    }
}

/// The three sphere generators as elements of the ambient algebra.
#[derive(Clone, Debug)]
pub struct SphereGenerators {
    pub cap_a: AlgebraElement,
    pub cap_b: AlgebraElement,
    pub c: AlgebraElement,
}

/// `∏ (1 − p^e · A)` over the given exponents (or the `q`/`B` analogue).
pub fn capital_product(
    kind: CapitalKind,
    exponents: impl IntoIterator<Item = i64>,
) -> AlgebraElement {
    let mut acc = AlgebraElement::one();
    for e in exponents {
        let (head, coeff) = match kind {
            CapitalKind::A => (Head::CapA(1), ScalarElement::p_pow(e)),
            CapitalKind::B => (Head::CapB(1), ScalarElement::q_pow(e)),
        };
        let factor = AlgebraElement::one()
            .sub(&AlgebraElement::scaled_monomial(Monomial::new(head, 0, 0), coeff));
        acc = acc.mul(&factor);
    }
    acc
}

/// Construct `A`, `B` and `C` for the given weights.
///
/// In both sign cases `C` is the single basis monomial with `a`-exponent `l`
/// and `b`-exponent `−k`.
pub fn make_generators(w: &WeightPair) -> SphereGenerators {
    SphereGenerators {
        cap_a: AlgebraElement::monomial(Monomial::new(Head::CapA(1), 0, 0)),
        cap_b: AlgebraElement::monomial(Monomial::new(Head::CapB(1), 0, 0)),
        c: AlgebraElement::monomial(Monomial::new(Head::Unit, w.l(), -w.k())),
    }
}

/// The `A`-side and `B`-side product exponents of `C*C` and `CC*`.
///
/// For `l > 0`:  `C*C = ∏_{i=1}^{l}(1−p^iA) · ∏_{j=1}^{k}(1−q^{j−k}B)` and
/// `CC* = ∏_{i=1}^{l}(1−p^{i−l}A) · ∏_{j=1}^{k}(1−q^{j}B)`.
/// For `l < 0`:  `C*C = ∏_{i=1}^{|l|}(1−p^{i+l}A) · ∏_{j=1}^{k}(1−q^{j−k}B)`
/// and `CC* = ∏_{i=1}^{|l|}(1−p^{i}A) · ∏_{j=1}^{k}(1−q^{j}B)`.
fn product_exponents(w: &WeightPair, star_first: bool) -> (Vec<i64>, Vec<i64>) {
    let k = w.k();
    let al = w.abs_l();
    let a_exps: Vec<i64> = if star_first {
        if w.is_positive() {
            (1..=al).collect()
        } else {
            (1..=al).map(|i| i - al).collect()
        }
    } else if w.is_positive() {
        (1..=al).map(|i| i - al).collect()
    } else {
        (1..=al).collect()
    };
    let b_exps: Vec<i64> = if star_first {
        (1..=k).map(|j| j - k).collect()
    } else {
        (1..=k).collect()
    };
    (a_exps, b_exps)
}

fn closed_form_product(w: &WeightPair, star_first: bool) -> AlgebraElement {
    let (a_exps, b_exps) = product_exponents(w, star_first);
    capital_product(CapitalKind::A, a_exps).mul(&capital_product(CapitalKind::B, b_exps))
}

fn closed_form_sum(w: &WeightPair, star_first: bool) -> AlgebraElement {
    let (a_exps, b_exps) = product_exponents(w, star_first);
    capital_product(CapitalKind::A, a_exps)
        .add(&capital_product(CapitalKind::B, b_exps))
        .sub(&AlgebraElement::one())
}

/// Verify the defining relations of the sphere algebra by normalization.
pub fn verify_sphere_relations(w: &WeightPair) -> CheckList {
    let gens = make_generators(w);
    let SphereGenerators { cap_a, cap_b, c } = &gens;
    let c_star = c.star();
    let mut report = CheckList::default();

    for (name, x) in [("A", cap_a), ("B", cap_b)] {
        report.push(Check::equality(alloc::format!("{name}* = {name}"), &x.star(), x));
        let ok = x.is_coinvariant(w.k(), w.l());
        report.push(if ok {
            Check::passed(alloc::format!("{name} coinvariant"))
        } else {
            Check::failed(alloc::format!("{name} coinvariant"), String::from("inhomogeneous"))
        });
    }
    report.push(if c.is_coinvariant(w.k(), w.l()) {
        Check::passed("C coinvariant")
    } else {
        Check::failed("C coinvariant", String::from("inhomogeneous"))
    });

    report.push(Check::vanishes("AB = 0", &cap_a.mul(cap_b)));
    report.push(Check::vanishes("BA = 0", &cap_b.mul(cap_a)));

    // AC = p^l CA and BC = q^{−k} CB, with the literal signed exponents.
    let ac = cap_a.mul(c);
    let ca = c.mul(cap_a).scale(&ScalarElement::p_pow(w.l()));
    report.push(Check::equality("AC = p^l·CA", &ac, &ca));
    let bc = cap_b.mul(c);
    let cb = c.mul(cap_b).scale(&ScalarElement::q_pow(-w.k()));
    report.push(Check::equality("BC = q^-k·CB", &bc, &cb));

    let cstar_c = c_star.mul(c);
    let c_cstar = c.mul(&c_star);
    report.push(Check::equality(
        "C*C product form",
        &cstar_c,
        &closed_form_product(w, true),
    ));
    report.push(Check::equality(
        "CC* product form",
        &c_cstar,
        &closed_form_product(w, false),
    ));
    report.push(Check::equality(
        "C*C sum form",
        &cstar_c,
        &closed_form_sum(w, true),
    ));
    report.push(Check::equality(
        "CC* sum form",
        &c_cstar,
        &closed_form_sum(w, false),
    ));
    report
}

/// Generalised Weyl algebra data for the sphere: base ring
/// `D = C[A,B]/⟨AB⟩`, automorphism `σ` acting diagonally on `A` and `B`,
/// defining element `ã`, and the generator assignment `X^±`.
#[derive(Clone, Debug)]
pub struct GWAData {
    /// scale factor of `σ(A)`
    pub sigma_a: ScalarElement,
    /// scale factor of `σ(B)`
    pub sigma_b: ScalarElement,
    pub a_tilde: AlgebraElement,
    pub x_plus: AlgebraElement,
    pub x_minus: AlgebraElement,
}

/// An element lay outside the base ring `D = C[A,B]/⟨AB⟩`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct NotInBaseRing(pub Monomial);

impl GWAData {
    /// For `l > 0`: `X⁺ = C*`, `X⁻ = C`, `σ(A) = p^l A`, `σ(B) = q^{−k} B`,
    /// `ã = ∏(1−p^{i−l}A)·∏(1−q^jB)`.  For `l < 0`: `X⁺ = C`, `X⁻ = C*`,
    /// `σ(A) = p^{−l} A`, `σ(B) = q^{k} B`, `ã = ∏(1−p^{i+l}A)·∏(1−q^{j−k}B)`.
    pub fn for_weight(w: &WeightPair) -> GWAData {
        let gens = make_generators(w);
        let k = w.k();
        let al = w.abs_l();
        if w.is_positive() {
            GWAData {
                sigma_a: ScalarElement::p_pow(w.l()),
                sigma_b: ScalarElement::q_pow(-k),
                a_tilde: capital_product(CapitalKind::A, (1..=al).map(|i| i - al))
                    .mul(&capital_product(CapitalKind::B, 1..=k)),
                x_plus: gens.c.star(),
                x_minus: gens.c.clone(),
            }
        } else {
            GWAData {
                sigma_a: ScalarElement::p_pow(-w.l()),
                sigma_b: ScalarElement::q_pow(k),
                a_tilde: capital_product(CapitalKind::A, (1..=al).map(|i| i + w.l()))
                    .mul(&capital_product(CapitalKind::B, (1..=k).map(|j| j - k))),
                x_plus: gens.c.clone(),
                x_minus: gens.c.star(),
            }
        }
    }

    /// Apply `σ^power` to an element of the base ring.
    pub fn sigma(&self, x: &AlgebraElement, power: i64) -> Result<AlgebraElement, NotInBaseRing> {
        let mut acc = AlgebraElement::zero();
        for (m, c) in x.terms() {
            if m.a_exp != 0 || m.b_exp != 0 {
                return Err(NotInBaseRing(*m));
            }
            let factor = match m.head {
                Head::Unit => ScalarElement::one(),
                Head::CapA(t) => scalar_int_pow(&self.sigma_a, power * t as i64),
                Head::CapB(t) => scalar_int_pow(&self.sigma_b, power * t as i64),
            };
            acc = acc.add(&AlgebraElement::scaled_monomial(*m, &factor * c));
        }
        Ok(acc)
    }
}

/// `x^n` for a single-term scalar, any integer `n`.
fn scalar_int_pow(x: &ScalarElement, n: i64) -> ScalarElement {
    let base = if n >= 0 {
        x.clone()
    } else {
        x.invert_monomial().expect("single-term scalar")
    };
    let mut acc = ScalarElement::one();
    for _ in 0..n.unsigned_abs() {
        acc = &acc * &base;
    }
    acc
}

/// Verify the degree-one generalised Weyl algebra axioms for the sphere.
pub fn gwa_verify(w: &WeightPair) -> CheckList {
    let data = GWAData::for_weight(w);
    let gens = make_generators(w);
    let mut report = CheckList::default();

    report.push(Check::equality(
        "X-X+ = a~",
        &data.x_minus.mul(&data.x_plus),
        &data.a_tilde,
    ));
    report.push(Check::equality(
        "X+X- = sigma(a~)",
        &data.x_plus.mul(&data.x_minus),
        &data.sigma(&data.a_tilde, 1).expect("ã lies in D"),
    ));
    for (name, alpha) in [("A", &gens.cap_a), ("B", &gens.cap_b)] {
        report.push(Check::equality(
            alloc::format!("X+{name} = sigma({name})X+"),
            &data.x_plus.mul(alpha),
            &data.sigma(alpha, 1).expect("generator lies in D").mul(&data.x_plus),
        ));
        report.push(Check::equality(
            alloc::format!("X-{name} = sigma^-1({name})X-"),
            &data.x_minus.mul(alpha),
            &data.sigma(alpha, -1).expect("generator lies in D").mul(&data.x_minus),
        ));
    }
    report
}

/// One term of a coinvariant decomposition: `coeff · H^r C^{#c_exp}` where
/// `H` is `A`, `B` or absent (the shared `r = 0` column).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompositionTerm {
    pub cap: Option<(CapitalKind, u32)>,
    pub c_exp: i64,
    pub coeff: ScalarElement,
}

/// A coinvariant element expressed in the basis `A^r C^{#s}`, `B^r C^{#s}`.
#[derive(Clone, Debug, Default)]
pub struct Decomposition {
    pub terms: Vec<DecompositionTerm>,
}

impl Decomposition {
    /// Reassemble the ambient-algebra element.
    pub fn to_element(&self, w: &WeightPair) -> AlgebraElement {
        let mut acc = AlgebraElement::zero();
        for t in &self.terms {
            acc = acc.add(&basis_element(w, t.cap, t.c_exp).scale(&t.coeff));
        }
        acc
    }
}

/// Decomposition failure.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum MembershipError {
    /// A monomial of nonzero weighted degree was present.
    NotCoinvariant(Monomial),
    /// A degree-zero monomial outside the expected lattice (engine bug).
    NotMember(Monomial),
}

impl fmt::Display for MembershipError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MembershipError::NotCoinvariant(m) => write!(f, "monomial {m} is not coinvariant"),
            MembershipError::NotMember(m) => write!(f, "monomial {m} is not in the sphere basis"),
        }
    }
}

/// The basis element `H^r C^{#s}` of the sphere algebra, normalized in the
/// ambient algebra (a single monomial with an invertible coefficient).
pub fn basis_element(w: &WeightPair, cap: Option<(CapitalKind, u32)>, s: i64) -> AlgebraElement {
    let c = make_generators(w).c;
    let c_pow = if s >= 0 {
        c.pow(s as u32)
    } else {
        c.star().pow((-s) as u32)
    };
    let head = match cap {
        None => return c_pow,
        Some((CapitalKind::A, r)) => Monomial::new(Head::CapA(r), 0, 0),
        Some((CapitalKind::B, r)) => Monomial::new(Head::CapB(r), 0, 0),
    };
    AlgebraElement::monomial(head).mul(&c_pow)
}

/// Express a coinvariant element in the sphere basis.
pub fn coinvariant_membership(
    x: &AlgebraElement,
    w: &WeightPair,
) -> Result<Decomposition, MembershipError> {
    let k = w.k();
    let l = w.l();
    let mut terms = Vec::new();
    for (m, c) in x.terms() {
        if m.degree(k, l) != 0 {
            return Err(MembershipError::NotCoinvariant(*m));
        }
        // kμ = −lν with gcd(k, |l|) = 1 forces μ = l·s, ν = −k·s.
        if m.b_exp % k != 0 {
            return Err(MembershipError::NotMember(*m));
        }
        let s = -m.b_exp / k;
        if m.a_exp != l * s {
            return Err(MembershipError::NotMember(*m));
        }
        let cap = match m.head {
            Head::Unit => None,
            Head::CapA(t) => Some((CapitalKind::A, t)),
            Head::CapB(t) => Some((CapitalKind::B, t)),
        };
        let basis = basis_element(w, cap, s);
        debug_assert_eq!(basis.num_terms(), 1);
        let (bm, bc) = basis.terms().next().expect("basis element is one monomial");
        debug_assert_eq!(bm, m);
        let inv = bc
            .invert_monomial()
            .expect("basis coefficient is a single invertible term");
        terms.push(DecompositionTerm {
            cap,
            c_exp: s,
            coeff: c * &inv,
        });
    }
    Ok(Decomposition { terms })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Letter;

    fn weight(k: i64, l: i64) -> WeightPair {
        WeightPair::new(k, l).unwrap()
    }

    #[test]
    fn weight_validation() {
        assert!(WeightPair::new(2, 4).is_err());
        assert!(WeightPair::new(0, 1).is_err());
        assert!(WeightPair::new(1, 0).is_err());
        assert!(WeightPair::new(2, -3).is_ok());
    }

    #[test]
    fn generator_shapes() {
        let g = make_generators(&weight(1, 1));
        assert_eq!(g.c, AlgebraElement::monomial(Monomial::new(Head::Unit, 1, -1)));
        let g = make_generators(&weight(1, -1));
        assert_eq!(g.c, AlgebraElement::monomial(Monomial::new(Head::Unit, -1, -1)));
        let g = make_generators(&weight(2, 3));
        assert_eq!(g.c, AlgebraElement::monomial(Monomial::new(Head::Unit, 3, -2)));
    }

    #[test]
    fn sphere_relations_pass_both_signs() {
        for (k, l) in [(1, 1), (2, 3), (1, -1), (2, -3)] {
            let report = verify_sphere_relations(&weight(k, l));
            assert!(
                report.all_pass(),
                "({k},{l}): {:?}",
                report.failures().collect::<alloc::vec::Vec<_>>()
            );
        }
    }

    #[test]
    fn c_star_c_closed_form_1_1() {
        // C*C = 1 − pA − B for (1,1): frozen from expanding b a* a b*.
        let w = weight(1, 1);
        let g = make_generators(&w);
        let expected = AlgebraElement::one()
            .sub(&g.cap_a.scale(&ScalarElement::p_pow(1)))
            .sub(&g.cap_b);
        assert_eq!(g.c.star().mul(&g.c), expected);
    }

    #[test]
    fn gwa_axioms_pass() {
        for (k, l) in [(1, 1), (1, 2), (2, 3), (1, -2), (2, -3)] {
            let report = gwa_verify(&weight(k, l));
            assert!(
                report.all_pass(),
                "({k},{l}): {:?}",
                report.failures().collect::<alloc::vec::Vec<_>>()
            );
        }
    }

    #[test]
    fn sigma_iterates() {
        let w = weight(1, 2);
        let data = GWAData::for_weight(&w);
        let a = AlgebraElement::letter(Letter::CapA);
        let twice = data.sigma(&a, 2).unwrap();
        assert_eq!(twice, a.scale(&ScalarElement::p_pow(4)));
        let back = data.sigma(&twice, -2).unwrap();
        assert_eq!(back, a);
        let sb = data.sigma(&AlgebraElement::letter(Letter::CapB), 1).unwrap();
        assert_eq!(
            sb,
            AlgebraElement::letter(Letter::CapB).scale(&ScalarElement::q_pow(-1))
        );
    }

    #[test]
    fn sigma_rejects_off_base_elements() {
        let w = weight(1, 1);
        let data = GWAData::for_weight(&w);
        assert!(data.sigma(&AlgebraElement::letter(Letter::A), 1).is_err());
    }

    #[test]
    fn membership_examples() {
        let w = weight(1, 1);
        let g = make_generators(&w);
        let d = coinvariant_membership(&g.c.star().mul(&g.c), &w).unwrap();
        assert_eq!(d.terms.len(), 3);
        assert_eq!(d.to_element(&w), g.c.star().mul(&g.c));

        let one = coinvariant_membership(&AlgebraElement::one(), &w).unwrap();
        assert_eq!(one.terms.len(), 1);
        assert_eq!(one.terms[0].cap, None);
        assert_eq!(one.terms[0].c_exp, 0);

        let w23 = weight(2, 3);
        let g = make_generators(&w23);
        let x = g.cap_a.mul(&g.c).mul(&g.c);
        let d = coinvariant_membership(&x, &w23).unwrap();
        assert_eq!(d.terms.len(), 1);
        assert_eq!(d.terms[0].cap, Some((CapitalKind::A, 1)));
        assert_eq!(d.terms[0].c_exp, 2);
        assert_eq!(d.to_element(&w23), x);
    }

    #[test]
    fn membership_rejects_noninvariant() {
        let w = weight(1, 1);
        let a = AlgebraElement::letter(Letter::A);
        assert!(matches!(
            coinvariant_membership(&a, &w),
            Err(MembershipError::NotCoinvariant(_))
        ));
    }

    #[test]
    fn basis_closure_under_products() {
        let w = weight(2, 3);
        let caps = [None, Some((CapitalKind::A, 1)), Some((CapitalKind::B, 2))];
        for cap1 in caps {
            for cap2 in caps {
                for s1 in -2..=2i64 {
                    for s2 in -2..=2i64 {
                        let x = basis_element(&w, cap1, s1);
                        let y = basis_element(&w, cap2, s2);
                        let product = x.mul(&y);
                        let d = coinvariant_membership(&product, &w).unwrap();
                        assert_eq!(d.to_element(&w), product);
                    }
                }
            }
        }
    }
}
