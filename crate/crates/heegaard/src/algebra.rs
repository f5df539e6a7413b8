//! Normal-form engine for the coordinate algebra of the Heegaard quantum
//! 3-sphere.
//!
//! The algebra is generated by `a`, `b` with
//!
//! ```text
//! ab = λ ba,   ab* = λ⁻¹ b*a,   a*a − p aa* = 1 − p,   b*b − q bb* = 1 − q,
//! AB = BA = 0,   Aa = paA,   Ba = aB,   Ab = bA,   Bb = qbB,
//! ```
//!
//! where `A = 1 − aa*`, `B = 1 − bb*` and `λ = e^{2πiθ}`.  A linear basis is
//! given by the words `H a^{#μ} b^{#ν}` with head `H ∈ {1, A^t, B^t}` and
//! `a^{#μ} = a^μ` for `μ ≥ 0`, `a^{*|μ|}` for `μ < 0` (same for `b`).  Every
//! product is rewritten into this basis: capitals travel to the left picking
//! up `p`/`q` powers, `b`-letters pass `a`-letters at the cost of a `λ`
//! phase, and `aa*`-type pairs contract to `1 − A` variants.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_rational::BigRational;

use crate::scalar::ScalarElement;

/// Generator letters of the free input alphabet.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Letter {
    /// `a`
    A,
    /// `a*`
    AStar,
    /// `b`
    B,
    /// `b*`
    BStar,
    /// `A = 1 − aa*`
    CapA,
    /// `B = 1 − bb*`
    CapB,
}

impl Letter {
    pub fn star(self) -> Letter {
        match self {
            Letter::A => Letter::AStar,
            Letter::AStar => Letter::A,
            Letter::B => Letter::BStar,
            Letter::BStar => Letter::B,
            Letter::CapA => Letter::CapA,
            Letter::CapB => Letter::CapB,
        }
    }

    pub fn token(self) -> &'static str {
        match self {
            Letter::A => "a",
            Letter::AStar => "a*",
            Letter::B => "b",
            Letter::BStar => "b*",
            Letter::CapA => "A",
            Letter::CapB => "B",
        }
    }
}

/// A free word in the generator letters; input format for normalization.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Word(pub Vec<Letter>);

impl Word {
    pub fn new(letters: impl Into<Vec<Letter>>) -> Self {
        Word(letters.into())
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.0.clone();
        letters.extend_from_slice(&other.0);
        Word(letters)
    }

    /// Parse whitespace-separated tokens `a`, `a*`, `b`, `b*`, `A`, `B`,
    /// each with an optional `^n` power suffix (`n ≥ 1`).
    pub fn parse(text: &str) -> Result<Word, WordParseError> {
        let mut letters = Vec::new();
        let mut offset = 0usize;
        for raw in text.split_whitespace() {
            // split_whitespace loses positions; recover the byte offset.
            offset = text[offset..]
                .find(raw)
                .map(|i| i + offset)
                .unwrap_or(offset);
            let (base, power) = match raw.find('^') {
                Some(caret) => {
                    let n: u32 = raw[caret + 1..].parse().map_err(|_| WordParseError {
                        position: offset + caret + 1,
                        token: String::from(raw),
                    })?;
                    if n == 0 {
                        return Err(WordParseError {
                            position: offset + caret + 1,
                            token: String::from(raw),
                        });
                    }
                    (&raw[..caret], n)
                }
                None => (raw, 1),
            };
            let letter = match base {
                "a" => Letter::A,
                "a*" => Letter::AStar,
                "b" => Letter::B,
                "b*" => Letter::BStar,
                "A" => Letter::CapA,
                "B" => Letter::CapB,
                _ => {
                    return Err(WordParseError {
                        position: offset,
                        token: String::from(raw),
                    })
                }
            };
            letters.extend(core::iter::repeat(letter).take(power as usize));
            offset += raw.len();
        }
        Ok(Word(letters))
    }
}

/// Invalid word syntax, with the byte position of the offending token.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WordParseError {
    pub position: usize,
    pub token: String,
}

impl fmt::Display for WordParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "unrecognised token `{}` at byte {}",
            self.token, self.position
        )
    }
}

/// Head of a basis monomial: the capital part.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum Head {
    Unit,
    /// `A^t`, `t ≥ 1`
    CapA(u32),
    /// `B^t`, `t ≥ 1`
    CapB(u32),
}

impl Head {
    /// Absorb one more `A` on the right; `None` when killed by `BA = 0`.
    fn join_cap_a(self) -> Option<Head> {
        match self {
            Head::Unit => Some(Head::CapA(1)),
            Head::CapA(t) => Some(Head::CapA(t + 1)),
            Head::CapB(_) => None,
        }
    }

    fn join_cap_b(self) -> Option<Head> {
        match self {
            Head::Unit => Some(Head::CapB(1)),
            Head::CapB(t) => Some(Head::CapB(t + 1)),
            Head::CapA(_) => None,
        }
    }
}

/// A basis monomial `H a^{#μ} b^{#ν}`.
///
/// `a_exp = μ ≥ 0` encodes `a^μ`; `μ < 0` encodes `a^{*|μ|}` (same for
/// `b_exp`).  The capital head carries power `t ≥ 1` when present.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct Monomial {
    pub head: Head,
    pub a_exp: i64,
    pub b_exp: i64,
}

impl Monomial {
    pub fn unit() -> Self {
        Monomial {
            head: Head::Unit,
            a_exp: 0,
            b_exp: 0,
        }
    }

    pub fn new(head: Head, a_exp: i64, b_exp: i64) -> Self {
        Monomial { head, a_exp, b_exp }
    }

    /// Degree under the grading `deg(a) = k`, `deg(b) = l` (capitals are
    /// degree zero).
    pub fn degree(&self, k: i64, l: i64) -> i64 {
        k * self.a_exp + l * self.b_exp
    }

    /// The letters of the monomial in basis order.
    pub fn letters(&self) -> Vec<Letter> {
        let mut out = Vec::new();
        match self.head {
            Head::Unit => {}
            Head::CapA(t) => out.extend(core::iter::repeat(Letter::CapA).take(t as usize)),
            Head::CapB(t) => out.extend(core::iter::repeat(Letter::CapB).take(t as usize)),
        }
        let a = if self.a_exp >= 0 { Letter::A } else { Letter::AStar };
        out.extend(core::iter::repeat(a).take(self.a_exp.unsigned_abs() as usize));
        let b = if self.b_exp >= 0 { Letter::B } else { Letter::BStar };
        out.extend(core::iter::repeat(b).take(self.b_exp.unsigned_abs() as usize));
        out
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        match self.head {
            Head::Unit => {}
            Head::CapA(1) => parts.push(String::from("A")),
            Head::CapA(t) => parts.push(alloc::format!("A^{t}")),
            Head::CapB(1) => parts.push(String::from("B")),
            Head::CapB(t) => parts.push(alloc::format!("B^{t}")),
        }
        for (sym, star, e) in [("a", "a*", self.a_exp), ("b", "b*", self.b_exp)] {
            let s = if e >= 0 { sym } else { star };
            match e.abs() {
                0 => {}
                1 => parts.push(String::from(s)),
                n => parts.push(alloc::format!("{s}^{n}")),
            }
        }
        if parts.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&parts.join("·"))
        }
    }
}

/// Homogeneity outcome of [`AlgebraElement::degree`].
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Grading {
    Homogeneous(i64),
    Inhomogeneous,
}

impl Grading {
    pub fn homogeneous(self) -> Option<i64> {
        match self {
            Grading::Homogeneous(d) => Some(d),
            Grading::Inhomogeneous => None,
        }
    }
}

/// An element of the algebra: a finite linear combination of basis
/// monomials with nonzero exact coefficients.  Equal elements have
/// identical term maps.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct AlgebraElement {
    terms: BTreeMap<Monomial, ScalarElement>,
}

impl AlgebraElement {
    pub fn zero() -> Self {
        AlgebraElement::default()
    }

    pub fn one() -> Self {
        AlgebraElement::monomial(Monomial::unit())
    }

    pub fn monomial(m: Monomial) -> Self {
        AlgebraElement::scaled_monomial(m, ScalarElement::one())
    }

    pub fn scaled_monomial(m: Monomial, c: ScalarElement) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        AlgebraElement { terms }
    }

    /// The single generator letter as an element.
    pub fn letter(g: Letter) -> Self {
        let m = match g {
            Letter::A => Monomial::new(Head::Unit, 1, 0),
            Letter::AStar => Monomial::new(Head::Unit, -1, 0),
            Letter::B => Monomial::new(Head::Unit, 0, 1),
            Letter::BStar => Monomial::new(Head::Unit, 0, -1),
            Letter::CapA => Monomial::new(Head::CapA(1), 0, 0),
            Letter::CapB => Monomial::new(Head::CapB(1), 0, 0),
        };
        AlgebraElement::monomial(m)
    }

    pub fn from_integer(n: i64) -> Self {
        AlgebraElement::scaled_monomial(Monomial::unit(), ScalarElement::from_integer(n))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &ScalarElement)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> ScalarElement {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    fn insert(terms: &mut BTreeMap<Monomial, ScalarElement>, m: Monomial, c: ScalarElement) {
        if c.is_zero() {
            return;
        }
        match terms.entry(m) {
            alloc::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = &*o.get() + &c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, rhs: &AlgebraElement) -> AlgebraElement {
        let mut terms = self.terms.clone();
        for (m, c) in &rhs.terms {
            AlgebraElement::insert(&mut terms, *m, c.clone());
        }
        AlgebraElement { terms }
    }

    pub fn sub(&self, rhs: &AlgebraElement) -> AlgebraElement {
        let mut terms = self.terms.clone();
        for (m, c) in &rhs.terms {
            AlgebraElement::insert(&mut terms, *m, -c);
        }
        AlgebraElement { terms }
    }

    pub fn neg(&self) -> AlgebraElement {
        let terms = self.terms.iter().map(|(m, c)| (*m, -c)).collect();
        AlgebraElement { terms }
    }

    pub fn scale(&self, c: &ScalarElement) -> AlgebraElement {
        let mut terms = BTreeMap::new();
        for (m, k) in &self.terms {
            AlgebraElement::insert(&mut terms, *m, k * c);
        }
        AlgebraElement { terms }
    }

    pub fn scale_rational(&self, c: &BigRational) -> AlgebraElement {
        self.scale(&ScalarElement::from_rational(c.clone()))
    }

    /// Right-multiply a single basis monomial by one letter, in basis form.
    ///
    /// This is the complete rewrite step: a letter entering from the right
    /// passes the `b`-part (λ phase for `a`-letters, `q` powers for `B`),
    /// the `a`-part (`p` powers for `A`), contracts against the matching
    /// part (`aa*`-type pairs producing `1 − A` variants whose capital then
    /// travels to the head) and finally joins the head, where `AB = BA = 0`
    /// may kill the term.
    fn monomial_times_letter(m: &Monomial, g: Letter) -> AlgebraElement {
        let mut out = BTreeMap::new();
        let mu = m.a_exp;
        let nu = m.b_exp;
        match g {
            Letter::CapA => {
                if let Some(head) = m.head.join_cap_a() {
                    AlgebraElement::insert(
                        &mut out,
                        Monomial::new(head, mu, nu),
                        ScalarElement::p_pow(-mu),
                    );
                }
            }
            Letter::CapB => {
                if let Some(head) = m.head.join_cap_b() {
                    AlgebraElement::insert(
                        &mut out,
                        Monomial::new(head, mu, nu),
                        ScalarElement::q_pow(-nu),
                    );
                }
            }
            Letter::A => {
                let phase = ScalarElement::lambda_pow(-nu);
                AlgebraElement::insert(&mut out, Monomial::new(m.head, mu + 1, nu), phase.clone());
                if mu < 0 {
                    // a^{*m} a = a^{*(m−1)} − p^m A a^{*(m−1)}
                    if let Some(head) = m.head.join_cap_a() {
                        let c = &phase * &(-&ScalarElement::p_pow(-mu));
                        AlgebraElement::insert(&mut out, Monomial::new(head, mu + 1, nu), c);
                    }
                }
            }
            Letter::AStar => {
                let phase = ScalarElement::lambda_pow(nu);
                AlgebraElement::insert(&mut out, Monomial::new(m.head, mu - 1, nu), phase.clone());
                if mu > 0 {
                    // a^μ a* = a^{μ−1} − p^{1−μ} A a^{μ−1}
                    if let Some(head) = m.head.join_cap_a() {
                        let c = &phase * &(-&ScalarElement::p_pow(1 - mu));
                        AlgebraElement::insert(&mut out, Monomial::new(head, mu - 1, nu), c);
                    }
                }
            }
            Letter::B => {
                AlgebraElement::insert(
                    &mut out,
                    Monomial::new(m.head, mu, nu + 1),
                    ScalarElement::one(),
                );
                if nu < 0 {
                    // b^{*m} b = b^{*(m−1)} − q^m B b^{*(m−1)}
                    if let Some(head) = m.head.join_cap_b() {
                        AlgebraElement::insert(
                            &mut out,
                            Monomial::new(head, mu, nu + 1),
                            -&ScalarElement::q_pow(-nu),
                        );
                    }
                }
            }
            Letter::BStar => {
                AlgebraElement::insert(
                    &mut out,
                    Monomial::new(m.head, mu, nu - 1),
                    ScalarElement::one(),
                );
                if nu > 0 {
                    // b^ν b* = b^{ν−1} − q^{1−ν} B b^{ν−1}
                    if let Some(head) = m.head.join_cap_b() {
                        AlgebraElement::insert(
                            &mut out,
                            Monomial::new(head, mu, nu - 1),
                            -&ScalarElement::q_pow(1 - nu),
                        );
                    }
                }
            }
        }
        AlgebraElement { terms: out }
    }

    pub fn mul_letter(&self, g: Letter) -> AlgebraElement {
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            for (m2, c2) in &AlgebraElement::monomial_times_letter(m, g).terms {
                AlgebraElement::insert(&mut terms, *m2, c * c2);
            }
        }
        AlgebraElement { terms }
    }

    /// Bilinear product, in basis form.
    pub fn mul(&self, rhs: &AlgebraElement) -> AlgebraElement {
        let mut acc = AlgebraElement::zero();
        for (m, c) in &rhs.terms {
            let mut partial = self.scale(c);
            for g in m.letters() {
                partial = partial.mul_letter(g);
            }
            acc = acc.add(&partial);
        }
        acc
    }

    /// *-involution: reverses and stars each monomial, stars the
    /// coefficients and renormalizes.
    pub fn star(&self) -> AlgebraElement {
        let mut acc = AlgebraElement::zero();
        for (m, c) in &self.terms {
            let mut partial = AlgebraElement::scaled_monomial(Monomial::unit(), c.star());
            for g in m.letters().into_iter().rev() {
                partial = partial.mul_letter(g.star());
            }
            acc = acc.add(&partial);
        }
        acc
    }

    /// Integer power (`n ≥ 0`).
    pub fn pow(&self, n: u32) -> AlgebraElement {
        let mut acc = AlgebraElement::one();
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// Degree under `deg(a) = k`, `deg(b) = l`, common to all monomials.
    ///
    /// The zero element is homogeneous of degree 0 by convention.
    pub fn degree(&self, k: i64, l: i64) -> Grading {
        let mut iter = self.terms.keys();
        let first = match iter.next() {
            None => return Grading::Homogeneous(0),
            Some(m) => m.degree(k, l),
        };
        for m in iter {
            if m.degree(k, l) != first {
                return Grading::Inhomogeneous;
            }
        }
        Grading::Homogeneous(first)
    }

    /// True iff every monomial has degree zero under `deg(a) = k`,
    /// `deg(b) = l`.
    pub fn is_coinvariant(&self, k: i64, l: i64) -> bool {
        self.terms.keys().all(|m| m.degree(k, l) == 0)
    }

    /// Substitute 0 for every monomial whose head matches `head_kind`
    /// (quotient by the ideal generated by that capital).
    pub fn drop_head(&self, head_kind: CapitalKind) -> AlgebraElement {
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| match (head_kind, m.head) {
                (CapitalKind::A, Head::CapA(_)) => false,
                (CapitalKind::B, Head::CapB(_)) => false,
                _ => true,
            })
            .map(|(m, c)| (*m, c.clone()))
            .collect();
        AlgebraElement { terms }
    }
}

/// Which capital generator a quotient or filter refers to.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CapitalKind {
    A,
    B,
}

/// Normalize a free word into the basis expansion.
pub fn normalize(w: &Word) -> AlgebraElement {
    let mut acc = AlgebraElement::one();
    for &g in &w.0 {
        acc = acc.mul_letter(g);
    }
    acc
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let (neg, mag) = c.to_compact_magnitude_string();
            if i == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            let is_unit_monomial = *m == Monomial::unit();
            if is_unit_monomial {
                f.write_str(&mag)?;
            } else if mag == "1" {
                write!(f, "{m}")?;
            } else {
                write!(f, "{mag}·{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(letters: &[Letter]) -> Word {
        Word::new(letters.to_vec())
    }

    fn elem(parts: &[(Monomial, ScalarElement)]) -> AlgebraElement {
        let mut acc = AlgebraElement::zero();
        for (m, c) in parts {
            acc = acc.add(&AlgebraElement::scaled_monomial(*m, c.clone()));
        }
        acc
    }

    #[test]
    fn a_star_a_contracts() {
        // a*a = 1 − pA, by substituting A = 1 − aa* into a*a − p aa* = 1 − p.
        let got = normalize(&w(&[Letter::AStar, Letter::A]));
        let expected = elem(&[
            (Monomial::unit(), ScalarElement::one()),
            (
                Monomial::new(Head::CapA(1), 0, 0),
                -&ScalarElement::p_pow(1),
            ),
        ]);
        assert_eq!(got, expected);
    }

    #[test]
    fn capitals_annihilate() {
        assert!(normalize(&w(&[Letter::CapA, Letter::CapB])).is_zero());
        assert!(normalize(&w(&[Letter::CapB, Letter::CapA])).is_zero());
        let mixed = normalize(&w(&[
            Letter::B,
            Letter::CapA,
            Letter::A,
            Letter::CapB,
            Letter::BStar,
        ]));
        assert!(mixed.is_zero());
    }

    #[test]
    fn b_passes_a_with_phase() {
        let got = normalize(&w(&[Letter::B, Letter::A]));
        let expected = AlgebraElement::scaled_monomial(
            Monomial::new(Head::Unit, 1, 1),
            ScalarElement::lambda_pow(-1),
        );
        assert_eq!(got, expected);
    }

    #[test]
    fn head_words_are_already_normal() {
        // A·a is a basis word; the capital is already at the head.
        let got = normalize(&w(&[Letter::CapA, Letter::A]));
        assert_eq!(got, AlgebraElement::monomial(Monomial::new(Head::CapA(1), 1, 0)));
        // a·A picks up p⁻¹ moving the capital left.
        let got = normalize(&w(&[Letter::A, Letter::CapA]));
        let expected = AlgebraElement::scaled_monomial(
            Monomial::new(Head::CapA(1), 1, 0),
            ScalarElement::p_pow(-1),
        );
        assert_eq!(got, expected);
    }

    #[test]
    fn power_contraction_two_stars_three_as() {
        // a*²a³ = (1 − pA)(1 − p²A)·a
        let got = normalize(&w(&[
            Letter::AStar,
            Letter::AStar,
            Letter::A,
            Letter::A,
            Letter::A,
        ]));
        let one = ScalarElement::one();
        let p1 = ScalarElement::p_pow(1);
        let p2 = ScalarElement::p_pow(2);
        let p3 = ScalarElement::p_pow(3);
        let expected = elem(&[
            (Monomial::new(Head::Unit, 1, 0), one),
            (Monomial::new(Head::CapA(1), 1, 0), -&(&p1 + &p2)),
            (Monomial::new(Head::CapA(2), 1, 0), p3),
        ]);
        assert_eq!(got, expected);
    }

    #[test]
    fn star_examples() {
        let cap_a = AlgebraElement::letter(Letter::CapA);
        assert_eq!(cap_a.star(), cap_a);
        // (a b*)* = b a* = λ·a* b
        let ab_star = normalize(&w(&[Letter::A, Letter::BStar]));
        let expected = AlgebraElement::scaled_monomial(
            Monomial::new(Head::Unit, -1, 1),
            ScalarElement::lambda_pow(1),
        );
        assert_eq!(ab_star.star(), expected);
    }

    #[test]
    fn degree_and_coinvariance() {
        let a = AlgebraElement::letter(Letter::A);
        assert_eq!(a.degree(2, 3), Grading::Homogeneous(2));
        // a³ b*² has degree 2·3 + 3·(−2) = 0.
        let x = normalize(&w(&[
            Letter::A,
            Letter::A,
            Letter::A,
            Letter::BStar,
            Letter::BStar,
        ]));
        assert_eq!(x.degree(2, 3), Grading::Homogeneous(0));
        assert!(x.is_coinvariant(2, 3));
        let b = AlgebraElement::letter(Letter::B);
        assert_eq!(a.add(&b).degree(2, 3), Grading::Inhomogeneous);
        assert!(AlgebraElement::letter(Letter::CapA).is_coinvariant(7, -4));
        assert!(!a.is_coinvariant(1, 1));
    }

    #[test]
    fn word_parsing() {
        let parsed = Word::parse("a*^2 a^3").unwrap();
        assert_eq!(
            parsed,
            w(&[
                Letter::AStar,
                Letter::AStar,
                Letter::A,
                Letter::A,
                Letter::A
            ])
        );
        assert_eq!(Word::parse("  ").unwrap(), Word::default());
        let err = Word::parse("a c").unwrap_err();
        assert_eq!(err.token, "c");
        assert_eq!(err.position, 2);
        assert!(Word::parse("a^0").is_err());
        assert!(Word::parse("b*^x").is_err());
    }

    #[test]
    fn display_forms() {
        let x = normalize(&w(&[Letter::AStar, Letter::A]));
        assert_eq!(alloc::format!("{x}"), "1 - p·A");
        let y = normalize(&w(&[Letter::B, Letter::A]));
        assert_eq!(alloc::format!("{y}"), "λ^-1·a·b");
        assert_eq!(alloc::format!("{}", AlgebraElement::zero()), "0");
    }

    #[test]
    fn rational_coefficients_survive() {
        let half = BigRational::new(1.into(), 2.into());
        let x = AlgebraElement::one().scale_rational(&half);
        let y = x.add(&x);
        assert_eq!(y, AlgebraElement::one());
    }
}
