//! Degree arithmetic that rules out reductions of automorphisms with the
//! multidegree of `F_{d,k}`.
//!
//! Nothing here searches for reducing polynomials. The module evaluates the
//! Shestakov–Umirbaev lower bound for `deg G(f, g)` and every inequality and
//! gcd fact the case analysis for the three coordinates needs, so the
//! arithmetic skeleton of the argument can be re-checked for any `(d, k)`.

use serde::Serialize;
use thiserror::Error;

use crate::autos::{f_dk_multidegree, Multidegree};
use crate::check::{gcd, Check, Relation};
use crate::polyalg::{Degree, Polynomial, Var};

/// Lower bound on `deg [f, g]` for algebraically independent `f`, `g`.
pub const DEFAULT_BRACKET_LB: u64 = 2;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReductionError {
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("invalid reduction query: {0}")]
    InvalidQuery(String),
    #[error("bracket degree is undefined for the zero polynomial")]
    ZeroPolynomial,
}

/// Parameters of the bound `deg G(f,g) >= q(p·deg g − deg g − deg f +
/// deg[f,g]) + r·deg g`, where `deg_y G = pq + r`, `0 <= r < p` and
/// `p = deg f / gcd(deg f, deg g)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ReductionQuery {
    deg_f: u64,
    deg_g: u64,
    bracket_deg_lb: u64,
    q: u64,
    r: u64,
}

impl ReductionQuery {
    pub fn new(
        deg_f: u64,
        deg_g: u64,
        bracket_deg_lb: u64,
        q: u64,
        r: u64,
    ) -> Result<Self, ReductionError> {
        if deg_f == 0 || deg_f >= deg_g {
            return Err(ReductionError::InvalidQuery(format!(
                "need 0 < deg f < deg g, got {deg_f}, {deg_g}"
            )));
        }
        if bracket_deg_lb < 2 {
            return Err(ReductionError::InvalidQuery(format!(
                "bracket degree bound must be at least 2, got {bracket_deg_lb}"
            )));
        }
        let query = ReductionQuery {
            deg_f,
            deg_g,
            bracket_deg_lb,
            q,
            r,
        };
        if r >= query.p() {
            return Err(ReductionError::InvalidQuery(format!(
                "need r < p = {}, got r = {r}",
                query.p()
            )));
        }
        Ok(query)
    }

    pub fn p(&self) -> u64 {
        self.deg_f / gcd(self.deg_f as i128, self.deg_g as i128) as u64
    }
}

pub fn su_lower_bound(query: &ReductionQuery) -> i128 {
    let (f, g) = (query.deg_f as i128, query.deg_g as i128);
    let p = query.p() as i128;
    let per_q = p * g - g - f + query.bracket_deg_lb as i128;
    query.q as i128 * per_q + query.r as i128 * g
}

fn jacobian_minor(f: &Polynomial, g: &Polynomial, v: Var, w: Var) -> Polynomial {
    &(&f.partial_derivative(v) * &g.partial_derivative(w))
        - &(&f.partial_derivative(w) * &g.partial_derivative(v))
}

/// `2 + max deg` of the 2×2 Jacobian minors of `(f, g)`. All minors vanish
/// exactly when `f` and `g` are algebraically dependent; that case returns
/// `NegInfinity`.
pub fn bracket_degree(f: &Polynomial, g: &Polynomial) -> Result<Degree, ReductionError> {
    if f.is_zero() || g.is_zero() {
        return Err(ReductionError::ZeroPolynomial);
    }
    let top = [(Var::X, Var::Y), (Var::X, Var::Z), (Var::Y, Var::Z)]
        .into_iter()
        .map(|(v, w)| jacobian_minor(f, g, v, w).total_degree())
        .max()
        .expect("three minors");
    Ok(match top {
        Degree::NegInfinity => Degree::NegInfinity,
        Degree::Finite(d) => Degree::Finite(d + 2),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Coordinate {
    First,
    Second,
    Third,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Conclusion {
    ReductionImpossible,
    Inconclusive,
}

/// The facts that rule out an elementary reduction of one coordinate.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CaseReport {
    pub coordinate: Coordinate,
    pub inequalities: Vec<Check>,
    pub conclusion: Conclusion,
}

impl CaseReport {
    fn new(coordinate: Coordinate, inequalities: Vec<Check>) -> Self {
        let conclusion = if inequalities.iter().all(|c| c.holds) {
            Conclusion::ReductionImpossible
        } else {
            Conclusion::Inconclusive
        };
        CaseReport {
            coordinate,
            inequalities,
            conclusion,
        }
    }

    pub fn passed(&self) -> bool {
        self.conclusion == Conclusion::ReductionImpossible
    }
}

fn bound_q1(deg_f: i128, deg_g: i128) -> Result<i128, ReductionError> {
    let q = ReductionQuery::new(deg_f as u64, deg_g as u64, DEFAULT_BRACKET_LB, 1, 0)?;
    Ok(su_lower_bound(&q))
}

/// Evaluates the elementary-reduction case analysis for the multidegree
/// `(d, d+k(d+1), d+2k(d+1))`. Requires `d` even, `d >= 4` and
/// `gcd(d, k) = 1` (for `d = 4` that is `k` odd).
pub fn no_elementary_reduction_check(d: u32, k: u32) -> Result<Vec<CaseReport>, ReductionError> {
    if d < 4 || !d.is_multiple_of(2) || k == 0 || gcd(d as i128, k as i128) != 1 {
        return Err(ReductionError::Precondition(format!(
            "need even d >= 4, k >= 1 and gcd(d,k) = 1; got d = {d}, k = {k} (gcd {})",
            gcd(d as i128, k as i128)
        )));
    }
    let t = f_dk_multidegree(d, k).map_err(|e| ReductionError::Precondition(e.to_string()))?;
    let (d1, d2, d3) = (t.d1 as i128, t.d2 as i128, t.d3 as i128);
    let (dd, kk) = (d as i128, k as i128);

    // F1 - G(F2, F3): p = d2, and any y-dependence of G overshoots d1.
    let first = vec![
        Check::new("gcd(d2,d3)", gcd(d2, d3), Relation::Eq, 1),
        Check::new("p = d2/gcd(d2,d3)", d2 / gcd(d2, d3), Relation::Eq, d2),
        Check::new(
            "bound(q=1,r=0) vs (d2-1)(d3-1)",
            bound_q1(d2, d3)?,
            Relation::Ge,
            (d2 - 1) * (d3 - 1),
        ),
        Check::new(
            "d1 vs (d2-1)(d3-1), forces q=0",
            d1,
            Relation::Lt,
            (d2 - 1) * (d3 - 1),
        ),
        Check::new("d1 vs d3, forces r=0", d1, Relation::Lt, d3),
        Check::new("d2 divides d1 (G = u(x))", d2, Relation::NotDivides, d1),
    ];

    // F2 - G(F1, F3): p = d/2.
    let chain = (dd - 2) * kk * (dd + 1) + 2;
    let second = vec![
        Check::new("gcd(d1,d3)", gcd(d1, d3), Relation::Eq, 2),
        Check::new("p = d1/gcd(d1,d3)", d1 / gcd(d1, d3), Relation::Ge, 2),
        Check::new(
            "bound(q=1,r=0) vs (d-2)k(d+1)+2",
            bound_q1(d1, d3)?,
            Relation::Ge,
            chain,
        ),
        Check::new(
            "(d-2)k(d+1)+2 vs k(d+1)+d+2",
            chain,
            Relation::Ge,
            kk * (dd + 1) + dd + 2,
        ),
        Check::new(
            "d2 vs k(d+1)+d+2, forces q=0",
            d2,
            Relation::Lt,
            kk * (dd + 1) + dd + 2,
        ),
        Check::new("d2 vs d3, forces r=0", d2, Relation::Lt, d3),
        Check::new("gcd(d2,d1) vs d1 (G = u(x))", gcd(d2, d1), Relation::Lt, d1),
    ];

    // F3 - G(F1, F2): p = d, and r is at most 1.
    let third = vec![
        Check::new("gcd(d1,d2)", gcd(d1, d2), Relation::Eq, 1),
        Check::new("p = d1/gcd(d1,d2)", d1 / gcd(d1, d2), Relation::Ge, 3),
        Check::new(
            "bound(q=1,r=0) vs 2k(d+1)+d+2",
            bound_q1(d1, d2)?,
            Relation::Ge,
            2 * kk * (dd + 1) + dd + 2,
        ),
        Check::new(
            "d3 vs 2k(d+1)+d+2, forces q=0",
            d3,
            Relation::Lt,
            2 * kk * (dd + 1) + dd + 2,
        ),
        Check::new("d3 vs 2*d2, forces r<=1", d3, Relation::Lt, 2 * d2),
        Check::new(
            "gcd(d3,d1) vs d1 (r=0, G = u(x))",
            gcd(d3, d1),
            Relation::Lt,
            d1,
        ),
        Check::new(
            "gcd(d3-d2,d1) vs d1 (r=1, G = u(x)+y*v(x))",
            gcd(d3 - d2, d1),
            Relation::Lt,
            d1,
        ),
    ];

    Ok(vec![
        CaseReport::new(Coordinate::First, first),
        CaseReport::new(Coordinate::Second, second),
        CaseReport::new(Coordinate::Third, third),
    ])
}

/// Necessary conditions for a type III reduction of an automorphism with
/// sorted multidegree `(d1, d2, d3)`: `2 | d2`, and `3 | d1` or
/// `d3/d2 = 3/2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TypeIiiCheck {
    pub condition1: bool,
    pub condition2: bool,
    pub excluded: bool,
}

pub fn type_iii_check(t: &Multidegree) -> TypeIiiCheck {
    let (d1, d2, d3) = (t.d1 as u64, t.d2 as u64, t.d3 as u64);
    let condition1 = d2 % 2 == 0;
    let condition2 = d1 % 3 == 0 || 2 * d3 == 3 * d2;
    TypeIiiCheck {
        condition1,
        condition2,
        excluded: !(condition1 && condition2),
    }
}

/// Elementary-reduction reports plus the type III exclusion. When both pass,
/// no tame automorphism has the multidegree of `F_{d,k}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReductionCertificate {
    pub triple: Multidegree,
    pub reports: Vec<CaseReport>,
    pub type_iii: TypeIiiCheck,
    pub excludes_tame: bool,
}

pub fn even_family_certificate(d: u32, k: u32) -> Result<ReductionCertificate, ReductionError> {
    let reports = no_elementary_reduction_check(d, k)?;
    let triple = f_dk_multidegree(d, k).map_err(|e| ReductionError::Precondition(e.to_string()))?;
    let type_iii = type_iii_check(&triple);
    let excludes_tame = reports.iter().all(CaseReport::passed) && type_iii.excluded;
    Ok(ReductionCertificate {
        triple,
        reports,
        type_iii,
        excludes_tame,
    })
}
