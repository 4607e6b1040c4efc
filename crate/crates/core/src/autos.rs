//! Polynomial maps of C³, the generators they are built from, and the
//! automorphism constructors for the wild families.
//!
//! Every constructor here records the generator word it was built from.
//! That word gives a closed-form inverse, so `F ∘ F⁻¹ = id` can be checked
//! symbolically without any elimination.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize, Serializer};
use thiserror::Error;

use crate::lnd;
use crate::polyalg::{sigma, Degree, ParseError, Polynomial, Var};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AutoError {
    #[error("map has no recorded factorization")]
    UnknownFactorization,
    #[error("coordinate {0} is the zero polynomial")]
    ZeroCoordinate(usize),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("multidegree entries must be positive, got {0:?}")]
    NonPositive([u32; 3]),
    #[error("invalid generator token '{0}'")]
    InvalidToken(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("coordinates do not match the recorded factorization")]
    InconsistentDocument,
}

fn precondition(msg: impl Into<String>) -> AutoError {
    AutoError::Precondition(msg.into())
}

/// Multidegree `(deg f1, deg f2, deg f3)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Multidegree {
    pub d1: u32,
    pub d2: u32,
    pub d3: u32,
}

impl Multidegree {
    pub fn new(d1: u32, d2: u32, d3: u32) -> Result<Self, AutoError> {
        if d1 == 0 || d2 == 0 || d3 == 0 {
            return Err(AutoError::NonPositive([d1, d2, d3]));
        }
        Ok(Multidegree { d1, d2, d3 })
    }

    /// Builds a triple from 64-bit values, rejecting anything that does not
    /// fit a `u32` degree.
    pub fn from_u64(d1: u64, d2: u64, d3: u64) -> Result<Self, AutoError> {
        let fit = |v: u64| {
            u32::try_from(v).map_err(|_| precondition(format!("degree {v} exceeds u32 range")))
        };
        Multidegree::new(fit(d1)?, fit(d2)?, fit(d3)?)
    }

    pub fn as_array(&self) -> [u32; 3] {
        [self.d1, self.d2, self.d3]
    }

    pub fn sorted(&self) -> Multidegree {
        let mut a = self.as_array();
        a.sort_unstable();
        Multidegree {
            d1: a[0],
            d2: a[1],
            d3: a[2],
        }
    }

    pub fn is_sorted(&self) -> bool {
        self.d1 <= self.d2 && self.d2 <= self.d3
    }
}

impl fmt::Display for Multidegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.d1, self.d2, self.d3)
    }
}

impl Serialize for Multidegree {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.as_array().serialize(s)
    }
}

/// One factor of a generator word.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Generator {
    /// `T(x,y,z) = (z,y,x)`.
    Transposition,
    /// `H_d(x,y,z) = (x,y,z+x^d)`, or its inverse.
    Triangular { d: u32, inverse: bool },
    /// `N_k = exp(σ^k D)` from the Nagata family, or its inverse.
    NagataPower { k: u32, inverse: bool },
    /// Adds `shift` to the `target` coordinate; `shift` must not involve
    /// `target`.
    Elementary { target: Var, shift: Polynomial },
}

impl Generator {
    pub fn elementary(target: Var, shift: Polynomial) -> Result<Generator, AutoError> {
        if shift.uses_var(target) {
            return Err(precondition(format!(
                "elementary shift of {target} must not involve {target}: {shift}"
            )));
        }
        Ok(Generator::Elementary { target, shift })
    }

    pub fn inverse(&self) -> Generator {
        match self {
            Generator::Transposition => Generator::Transposition,
            Generator::Triangular { d, inverse } => Generator::Triangular {
                d: *d,
                inverse: !inverse,
            },
            Generator::NagataPower { k, inverse } => Generator::NagataPower {
                k: *k,
                inverse: !inverse,
            },
            Generator::Elementary { target, shift } => Generator::Elementary {
                target: *target,
                shift: -shift,
            },
        }
    }

    /// The composite `self ∘ p`, where `p` is a coordinate triple.
    pub fn apply(&self, p: &[Polynomial; 3]) -> [Polynomial; 3] {
        let [a, b, c] = p;
        match self {
            Generator::Transposition => [c.clone(), b.clone(), a.clone()],
            Generator::Triangular { d, inverse } => {
                let t = a.pow(*d);
                let third = if *inverse { c - &t } else { c + &t };
                [a.clone(), b.clone(), third]
            }
            Generator::NagataPower { k, inverse } => {
                let s = &(b * b) + &(a * c);
                lnd::nagata_on(a, b, c, &s, *k, *inverse)
            }
            Generator::Elementary { target, shift } => {
                let mut out = p.clone();
                out[target.index()] = &p[target.index()] + &shift.substitute([a, b, c]);
                out
            }
        }
    }

    pub fn coords(&self) -> [Polynomial; 3] {
        self.apply(&identity_coords())
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let inv = |i: bool| if i { "^-1" } else { "" };
        match self {
            Generator::Transposition => write!(f, "T"),
            Generator::Triangular { d, inverse } => write!(f, "H{d}{}", inv(*inverse)),
            Generator::NagataPower { k, inverse } => write!(f, "N{k}{}", inv(*inverse)),
            Generator::Elementary { target, shift } => write!(f, "E[{target} += {shift}]"),
        }
    }
}

impl FromStr for Generator {
    type Err = AutoError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || AutoError::InvalidToken(s.to_string());
        let s = s.trim();
        if s == "T" {
            return Ok(Generator::Transposition);
        }
        if let Some(body) = s.strip_prefix("E[").and_then(|r| r.strip_suffix(']')) {
            let (lhs, rhs) = body.split_once("+=").ok_or_else(bad)?;
            let mut name = lhs.trim().chars();
            let target = match (name.next(), name.next()) {
                (Some(c), None) => Var::from_name(c).ok_or_else(bad)?,
                _ => return Err(bad()),
            };
            return Generator::elementary(target, rhs.parse()?);
        }
        let (body, inverse) = match s.strip_suffix("^-1") {
            Some(b) => (b, true),
            None => (s, false),
        };
        let (kind, num) = body.split_at_checked(1).ok_or_else(bad)?;
        let n: u32 = num.parse().map_err(|_| bad())?;
        match kind {
            "H" => Ok(Generator::Triangular { d: n, inverse }),
            "N" => Ok(Generator::NagataPower { k: n, inverse }),
            _ => Err(bad()),
        }
    }
}

fn identity_coords() -> [Polynomial; 3] {
    [Polynomial::x(), Polynomial::y(), Polynomial::z()]
}

/// A polynomial map C³ → C³ given by the images of `x`, `y`, `z`.
///
/// Equality compares coordinates only; two different words for the same
/// map are equal.
#[derive(Debug, Clone)]
pub struct PolyMap {
    coords: [Polynomial; 3],
    factors: Option<Vec<Generator>>,
}

impl PartialEq for PolyMap {
    fn eq(&self, other: &Self) -> bool {
        self.coords == other.coords
    }
}

impl Eq for PolyMap {}

impl PolyMap {
    pub fn identity() -> Self {
        PolyMap {
            coords: identity_coords(),
            factors: Some(Vec::new()),
        }
    }

    /// A map with no recorded factorization.
    pub fn from_coords(coords: [Polynomial; 3]) -> Self {
        PolyMap {
            coords,
            factors: None,
        }
    }

    pub fn from_generator(g: Generator) -> Self {
        PolyMap {
            coords: g.coords(),
            factors: Some(vec![g]),
        }
    }

    /// The composite `g1 ∘ g2 ∘ … ∘ gn` of the given word.
    pub fn from_factors(factors: Vec<Generator>) -> Self {
        let coords = factors
            .iter()
            .rev()
            .fold(identity_coords(), |acc, g| g.apply(&acc));
        PolyMap {
            coords,
            factors: Some(factors),
        }
    }

    pub fn coords(&self) -> &[Polynomial; 3] {
        &self.coords
    }

    pub fn factorization(&self) -> Option<&[Generator]> {
        self.factors.as_deref()
    }

    /// `self ∘ inner`.
    ///
    /// When `self` carries a factorization its generators are applied one at
    /// a time to the coordinates of `inner`; otherwise the coordinates of
    /// `inner` are substituted directly. Both routes give the same
    /// polynomials, the first keeps intermediate degrees small.
    pub fn compose(&self, inner: &PolyMap) -> PolyMap {
        let coords = match &self.factors {
            Some(fs) => fs
                .iter()
                .rev()
                .fold(inner.coords.clone(), |acc, g| g.apply(&acc)),
            None => self.compose_by_substitution(inner).coords,
        };
        let factors = match (&self.factors, &inner.factors) {
            (Some(a), Some(b)) => Some(a.iter().chain(b).cloned().collect()),
            _ => None,
        };
        PolyMap { coords, factors }
    }

    /// `self ∘ inner` by plain substitution, ignoring any factorization.
    pub fn compose_by_substitution(&self, inner: &PolyMap) -> PolyMap {
        let [a, b, c] = &inner.coords;
        PolyMap::from_coords(self.coords.clone().map(|p| p.substitute([a, b, c])))
    }

    /// Degrees of the coordinates, in coordinate order.
    pub fn multidegree(&self) -> Result<Multidegree, AutoError> {
        let mut d = [0u32; 3];
        for (i, p) in self.coords.iter().enumerate() {
            d[i] = match p.total_degree() {
                Degree::Finite(n) => n,
                Degree::NegInfinity => return Err(AutoError::ZeroCoordinate(i)),
            };
        }
        Ok(Multidegree {
            d1: d[0],
            d2: d[1],
            d3: d[2],
        })
    }

    pub fn inverse(&self) -> Result<PolyMap, AutoError> {
        let factors = self
            .factors
            .as_ref()
            .ok_or(AutoError::UnknownFactorization)?;
        Ok(PolyMap::from_factors(
            factors.iter().rev().map(Generator::inverse).collect(),
        ))
    }

    pub fn is_identity(&self) -> bool {
        self.coords == identity_coords()
    }

    /// Checks `self ∘ self⁻¹ = id` symbolically.
    pub fn verify_inverse(&self) -> Result<bool, AutoError> {
        Ok(self.compose(&self.inverse()?).is_identity())
    }

    pub fn to_document(&self) -> MapDocument {
        MapDocument {
            coords: self.coords.clone().map(|p| p.to_string()),
            factorization: self
                .factors
                .as_ref()
                .map(|fs| fs.iter().map(Generator::to_string).collect()),
        }
    }

    /// Reads a serialized map. A recorded factorization is re-expanded and
    /// must reproduce the coordinates exactly.
    pub fn from_document(doc: &MapDocument) -> Result<PolyMap, AutoError> {
        let mut coords = identity_coords();
        for (slot, text) in coords.iter_mut().zip(&doc.coords) {
            *slot = text.parse()?;
        }
        match &doc.factorization {
            None => Ok(PolyMap::from_coords(coords)),
            Some(tokens) => {
                let factors = tokens
                    .iter()
                    .map(|t| t.parse())
                    .collect::<Result<Vec<Generator>, _>>()?;
                let map = PolyMap::from_factors(factors);
                if map.coords != coords {
                    return Err(AutoError::InconsistentDocument);
                }
                Ok(map)
            }
        }
    }
}

impl fmt::Display for PolyMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = &self.coords;
        write!(f, "({a}, {b}, {c})")
    }
}

/// Serialized form of a [`PolyMap`]: three polynomial strings in canonical
/// rendering plus the optional generator word.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MapDocument {
    pub coords: [String; 3],
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub factorization: Option<Vec<String>>,
}

pub fn transposition_t() -> PolyMap {
    PolyMap::from_generator(Generator::Transposition)
}

pub fn h_d(d: u32) -> Result<PolyMap, AutoError> {
    if d == 0 {
        return Err(precondition("H_d requires d >= 1"));
    }
    Ok(PolyMap::from_generator(Generator::Triangular {
        d,
        inverse: false,
    }))
}

/// `F_{d,k} = T ∘ N_k ∘ H_d`, of multidegree `(d, d+k(d+1), d+2k(d+1))`.
pub fn f_dk(d: u32, k: u32) -> Result<PolyMap, AutoError> {
    if d == 0 || k == 0 {
        return Err(precondition("F_{d,k} requires d >= 1 and k >= 1"));
    }
    Ok(PolyMap::from_factors(vec![
        Generator::Transposition,
        Generator::NagataPower { k, inverse: false },
        Generator::Triangular { d, inverse: false },
    ]))
}

/// `g² + f·h` for a map `(f, g, h)`.
pub fn sigma_form(map: &PolyMap) -> Polynomial {
    let [f, g, h] = map.coords();
    &(g * g) + &(f * h)
}

/// `(T∘N_k) ∘ (T∘N_l)`, of multidegree `(r, r+2k, r+4k)` with `r = 4l+1`.
pub fn composed_nagata_family(l: u32, k: u32) -> Result<PolyMap, AutoError> {
    if l == 0 || k == 0 {
        return Err(precondition(
            "composed Nagata family requires l >= 1 and k >= 1",
        ));
    }
    let inner = PolyMap::from_factors(vec![
        Generator::Transposition,
        Generator::NagataPower {
            k: l,
            inverse: false,
        },
    ]);
    // The degree count relies on the inner map preserving y^2 + xz.
    assert_eq!(
        sigma_form(&inner),
        sigma(),
        "T∘N_{l} does not preserve sigma"
    );
    let outer = PolyMap::from_factors(vec![
        Generator::Transposition,
        Generator::NagataPower { k, inverse: false },
    ]);
    Ok(outer.compose(&inner))
}

/// `(T∘N_k) ∘ H_r` for `r > 1`, and `T∘N_k` for `r = 1`; multidegree
/// `(r, r+k(r+1), r+2k(r+1))`.
pub fn nagata_triangular_family(r: u32, k: u32) -> Result<PolyMap, AutoError> {
    if r == 0 || k == 0 {
        return Err(precondition(
            "Nagata-triangular family requires r >= 1 and k >= 1",
        ));
    }
    let mut word = vec![
        Generator::Transposition,
        Generator::NagataPower { k, inverse: false },
    ];
    if r > 1 {
        word.push(Generator::Triangular {
            d: r,
            inverse: false,
        });
    }
    Ok(PolyMap::from_factors(word))
}

/// The tame map `(x + z^d1, y + z^d2, z + (x + z^d1)^a (y + z^d2)^b)` of
/// multidegree `(d1, d2, d3)` where `a·d1 + b·d2 = d3`.
pub fn tame_witness(d1: u32, d2: u32, d3: u32, a: u32, b: u32) -> Result<PolyMap, AutoError> {
    if d1 == 0 || !(d1 <= d2 && d2 <= d3) {
        return Err(precondition(format!(
            "tame witness needs 1 <= d1 <= d2 <= d3, got ({d1},{d2},{d3})"
        )));
    }
    if a == 0 && b == 0 {
        return Err(precondition("tame witness needs (a,b) != (0,0)"));
    }
    if a as u64 * d1 as u64 + b as u64 * d2 as u64 != d3 as u64 {
        return Err(precondition(format!("{a}*{d1} + {b}*{d2} != {d3}")));
    }
    let (x, y, z) = (Polynomial::x(), Polynomial::y(), Polynomial::z());
    Ok(PolyMap::from_factors(vec![
        Generator::elementary(Var::Z, &x.pow(a) * &y.pow(b))?,
        Generator::elementary(Var::X, z.pow(d1))?,
        Generator::elementary(Var::Y, z.pow(d2))?,
    ]))
}

/// `(x, y + x^d2, z + x^d3)`, a tame map of multidegree `(1, d2, d3)`.
pub fn triangular_tower(d2: u32, d3: u32) -> Result<PolyMap, AutoError> {
    if d2 == 0 || d3 == 0 {
        return Err(precondition("triangular tower needs positive degrees"));
    }
    let x = Polynomial::x();
    Ok(PolyMap::from_factors(vec![
        Generator::elementary(Var::Y, x.pow(d2))?,
        Generator::elementary(Var::Z, x.pow(d3))?,
    ]))
}

/// Predicted multidegree of [`f_dk`] and [`nagata_triangular_family`].
pub fn f_dk_multidegree(d: u32, k: u32) -> Result<Multidegree, AutoError> {
    let (d, k) = (d as u64, k as u64);
    Multidegree::from_u64(d, d + k * (d + 1), d + 2 * k * (d + 1))
}

/// Predicted multidegree of [`composed_nagata_family`].
pub fn composed_nagata_multidegree(l: u32, k: u32) -> Result<Multidegree, AutoError> {
    let (r, k) = (4 * l as u64 + 1, k as u64);
    Multidegree::from_u64(r, r + 2 * k, r + 4 * k)
}
