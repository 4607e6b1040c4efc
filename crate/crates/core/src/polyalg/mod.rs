//! Sparse polynomials in `x`, `y`, `z` with exact rational coefficients.
//!
//! A [`Polynomial`] is a map from [`Monomial`] to a nonzero [`BigRational`].
//! The zero polynomial is the empty map and has degree
//! [`Degree::NegInfinity`]. Terms are kept in graded lexicographic order with
//! `x > y > z`; rendering walks them from the largest monomial down, so the
//! text form is canonical.

mod parse;

pub use parse::{ParseError, ParseErrorKind};

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// The three coordinate variables.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    X,
    Y,
    Z,
}

impl Var {
    pub const ALL: [Var; 3] = [Var::X, Var::Y, Var::Z];

    pub fn index(self) -> usize {
        match self {
            Var::X => 0,
            Var::Y => 1,
            Var::Z => 2,
        }
    }

    pub fn name(self) -> char {
        match self {
            Var::X => 'x',
            Var::Y => 'y',
            Var::Z => 'z',
        }
    }

    pub fn from_name(c: char) -> Option<Var> {
        match c {
            'x' => Some(Var::X),
            'y' => Some(Var::Y),
            'z' => Some(Var::Z),
            _ => None,
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

/// `x^a * y^b * z^c`, ordered graded-lexicographically with `x > y > z`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Monomial([u32; 3]);

impl Monomial {
    pub const ONE: Monomial = Monomial([0, 0, 0]);

    pub fn new(x: u32, y: u32, z: u32) -> Self {
        Monomial([x, y, z])
    }

    pub fn var(v: Var) -> Self {
        let mut e = [0; 3];
        e[v.index()] = 1;
        Monomial(e)
    }

    pub fn exponents(&self) -> [u32; 3] {
        self.0
    }

    pub fn exponent(&self, v: Var) -> u32 {
        self.0[v.index()]
    }

    pub fn total_degree(&self) -> u32 {
        self.0
            .iter()
            .try_fold(0u32, |acc, &e| acc.checked_add(e))
            .expect("monomial degree overflows u32")
    }

    pub fn is_one(&self) -> bool {
        self.0 == [0, 0, 0]
    }

    /// Panics if an exponent overflows `u32`.
    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut e = [0; 3];
        for (i, slot) in e.iter_mut().enumerate() {
            *slot = self.0[i]
                .checked_add(other.0[i])
                .expect("monomial exponent overflows u32");
        }
        Monomial(e)
    }

    fn pow(&self, n: u32) -> Monomial {
        let mut e = [0; 3];
        for (i, slot) in e.iter_mut().enumerate() {
            *slot = self.0[i]
                .checked_mul(n)
                .expect("monomial exponent overflows u32");
        }
        Monomial(e)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        let da = self.0.iter().map(|&e| e as u64).sum::<u64>();
        let db = other.0.iter().map(|&e| e as u64).sum::<u64>();
        da.cmp(&db).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for v in Var::ALL {
            let e = self.exponent(v);
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Total degree of a polynomial. The zero polynomial has degree
/// `NegInfinity`, which sorts below every finite degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    NegInfinity,
    Finite(u32),
}

impl Degree {
    pub fn finite(self) -> Option<u32> {
        match self {
            Degree::NegInfinity => None,
            Degree::Finite(d) => Some(d),
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, Degree::Finite(_))
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::NegInfinity => write!(f, "-inf"),
            Degree::Finite(d) => write!(f, "{d}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("operation is undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("polynomial is not homogeneous: {0}")]
    NotHomogeneous(String),
}

/// A polynomial in `x`, `y`, `z` over the rationals.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, BigRational>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial::default()
    }

    pub fn one() -> Self {
        Polynomial::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Polynomial::term(c, Monomial::ONE)
    }

    pub fn integer(c: i64) -> Self {
        Polynomial::constant(BigRational::from_integer(BigInt::from(c)))
    }

    pub fn var(v: Var) -> Self {
        Polynomial::term(BigRational::one(), Monomial::var(v))
    }

    pub fn x() -> Self {
        Polynomial::var(Var::X)
    }

    pub fn y() -> Self {
        Polynomial::var(Var::Y)
    }

    pub fn z() -> Self {
        Polynomial::var(Var::Z)
    }

    pub fn term(c: BigRational, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { terms }
    }

    /// Builds a polynomial from possibly repeated terms, summing duplicates
    /// and dropping zeros.
    pub fn from_terms<I>(iter: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, BigRational)>,
    {
        let mut terms: BTreeMap<Monomial, BigRational> = BTreeMap::new();
        for (m, c) in iter {
            *terms.entry(m).or_insert_with(BigRational::zero) += c;
        }
        terms.retain(|_, c| !c.is_zero());
        Polynomial { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Option<&BigRational> {
        self.terms.get(m)
    }

    /// Largest term in graded-lex order.
    pub fn leading_term(&self) -> Option<(&Monomial, &BigRational)> {
        self.terms.iter().next_back()
    }

    pub fn total_degree(&self) -> Degree {
        match self.terms.keys().next_back() {
            None => Degree::NegInfinity,
            // graded order: the last key has maximal total degree
            Some(m) => Degree::Finite(m.total_degree()),
        }
    }

    pub fn degree_in(&self, v: Var) -> Degree {
        self.terms
            .keys()
            .map(|m| m.exponent(v))
            .max()
            .map_or(Degree::NegInfinity, Degree::Finite)
    }

    pub fn uses_var(&self, v: Var) -> bool {
        self.terms.keys().any(|m| m.exponent(v) > 0)
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degrees = self.terms.keys().map(Monomial::total_degree);
        match degrees.next() {
            None => true,
            Some(d) => degrees.all(|e| e == d),
        }
    }

    pub fn has_integer_coefficients(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    /// Highest homogeneous part.
    pub fn top_form(&self) -> Result<Polynomial, PolyError> {
        let d = self
            .total_degree()
            .finite()
            .ok_or(PolyError::ZeroPolynomial)?;
        Ok(Polynomial {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.total_degree() == d)
                .map(|(m, c)| (*m, c.clone()))
                .collect(),
        })
    }

    pub fn partial_derivative(&self, v: Var) -> Polynomial {
        let i = v.index();
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            let e = m.0[i];
            if e == 0 {
                continue;
            }
            let mut lowered = m.0;
            lowered[i] -= 1;
            let factor = BigRational::from_integer(BigInt::from(e));
            terms.insert(Monomial(lowered), c * factor);
        }
        Polynomial { terms }
    }

    pub fn scale(&self, c: &BigRational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self.terms.iter().map(|(m, a)| (*m, a * c)).collect(),
        }
    }

    fn mul_term(&self, c: &BigRational, m: &Monomial) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self.terms.iter().map(|(n, a)| (n.mul(m), a * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        if e == 0 {
            return Polynomial::one();
        }
        if self.terms.len() == 1 {
            let (m, c) = self.terms.iter().next().expect("one term");
            return Polynomial::term(num_traits::pow(c.clone(), e as usize), m.pow(e));
        }
        let mut acc = self.clone();
        for _ in 1..e {
            acc = &acc * self;
        }
        acc
    }

    /// Substitutes `images[i]` for the i-th variable.
    pub fn substitute(&self, images: [&Polynomial; 3]) -> Polynomial {
        let mut max_exp = [0u32; 3];
        for m in self.terms.keys() {
            for (i, slot) in max_exp.iter_mut().enumerate() {
                *slot = (*slot).max(m.0[i]);
            }
        }
        let powers: Vec<Vec<Polynomial>> = (0..3)
            .map(|i| {
                let mut p = Vec::with_capacity(max_exp[i] as usize + 1);
                p.push(Polynomial::one());
                for e in 1..=max_exp[i] as usize {
                    let next = &p[e - 1] * images[i];
                    p.push(next);
                }
                p
            })
            .collect();

        let mut acc: BTreeMap<Monomial, BigRational> = BTreeMap::new();
        for (m, c) in &self.terms {
            let mut factors = (0..3)
                .filter(|&i| m.0[i] > 0)
                .map(|i| &powers[i][m.0[i] as usize]);
            let product = match factors.next() {
                None => Polynomial::constant(c.clone()),
                Some(first) => {
                    let mut p = first.scale(c);
                    for f in factors {
                        p = &p * f;
                    }
                    p
                }
            };
            for (n, a) in product.terms {
                *acc.entry(n).or_insert_with(BigRational::zero) += a;
            }
        }
        acc.retain(|_, c| !c.is_zero());
        Polynomial { terms: acc }
    }

    /// For homogeneous nonzero `f` and `g`, returns `(c, t)` with
    /// `f = c * g^t` when such a pair exists. This is the membership test
    /// `f ∈ C[g]` specialised to homogeneous elements.
    pub fn is_scaled_power(
        f: &Polynomial,
        g: &Polynomial,
    ) -> Result<Option<(BigRational, u32)>, PolyError> {
        for p in [f, g] {
            if p.is_zero() {
                return Err(PolyError::ZeroPolynomial);
            }
            if !p.is_homogeneous() {
                return Err(PolyError::NotHomogeneous(p.to_string()));
            }
        }
        let df = f.total_degree().finite().expect("nonzero");
        let dg = g.total_degree().finite().expect("nonzero");
        if df == 0 {
            let (_, c) = f.leading_term().expect("nonzero");
            return Ok(Some((c.clone(), 0)));
        }
        if dg == 0 || !df.is_multiple_of(dg) {
            return Ok(None);
        }
        let t = df / dg;
        let gt = g.pow(t);
        if gt.num_terms() != f.num_terms() {
            return Ok(None);
        }
        let (_, lf) = f.leading_term().expect("nonzero");
        let (_, lg) = gt.leading_term().expect("nonzero");
        let c = lf / lg;
        if gt.scale(&c) == *f {
            Ok(Some((c, t)))
        } else {
            Ok(None)
        }
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            match (i, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let abs = c.abs();
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

impl std::str::FromStr for Polynomial {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse::parse(s)
    }
}

impl AddAssign<&Polynomial> for Polynomial {
    fn add_assign(&mut self, rhs: &Polynomial) {
        for (m, c) in &rhs.terms {
            let slot = self.terms.entry(*m).or_insert_with(BigRational::zero);
            *slot += c;
            if slot.is_zero() {
                self.terms.remove(m);
            }
        }
    }
}

impl SubAssign<&Polynomial> for Polynomial {
    fn sub_assign(&mut self, rhs: &Polynomial) {
        for (m, c) in &rhs.terms {
            let slot = self.terms.entry(*m).or_insert_with(BigRational::zero);
            *slot -= c;
            if slot.is_zero() {
                self.terms.remove(m);
            }
        }
    }
}

impl Add<&Polynomial> for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub<&Polynomial> for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul<&Polynomial> for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        if rhs.terms.len() == 1 {
            let (m, c) = rhs.terms.iter().next().expect("one term");
            return self.mul_term(c, m);
        }
        if self.terms.len() == 1 {
            let (m, c) = self.terms.iter().next().expect("one term");
            return rhs.mul_term(c, m);
        }
        if self.has_integer_coefficients() && rhs.has_integer_coefficients() {
            return integer_product(self, rhs);
        }
        let mut acc: HashMap<Monomial, BigRational> = HashMap::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                *acc.entry(m1.mul(m2)).or_insert_with(BigRational::zero) += c1 * c2;
            }
        }
        Polynomial {
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }
}

// Accumulates numerators only; skips the gcd normalisation that rational
// arithmetic performs on every operation.
fn integer_product(a: &Polynomial, b: &Polynomial) -> Polynomial {
    let mut acc: HashMap<Monomial, BigInt> = HashMap::new();
    for (m1, c1) in &a.terms {
        for (m2, c2) in &b.terms {
            *acc.entry(m1.mul(m2)).or_default() += c1.numer() * c2.numer();
        }
    }
    Polynomial {
        terms: acc
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(m, c)| (m, BigRational::from_integer(c)))
            .collect(),
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        Polynomial {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        -&self
    }
}

macro_rules! forward_owned_binop {
    ($imp:ident, $method:ident) => {
        impl $imp<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
        impl $imp<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                (&self).$method(rhs)
            }
        }
        impl $imp<Polynomial> for &Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                self.$method(&rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

/// `y^2 + x*z`, the invariant of the Nagata family.
pub fn sigma() -> Polynomial {
    &Polynomial::y().pow(2) + &(&Polynomial::x() * &Polynomial::z())
}
