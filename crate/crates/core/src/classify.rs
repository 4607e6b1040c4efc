//! Semigroup membership, replayable non-membership arguments, and the
//! rule-based tameness classifier for sorted multidegree triples.
//!
//! Rules are tried in a fixed order and the first one that applies decides:
//!
//! | id | applies to | verdict |
//! |----|------------|---------|
//! | R1 | `d1 = 1` | tame, triangular witness `(x, y+x^d2, z+x^d3)` |
//! | R2 | `d1 = 2` | tame, by citation |
//! | R8 | `d3 ∈ d1N + d2N` | tame, constructed witness |
//! | R3 | `d1 = 3` | tame iff `3 \| d2` or `d3 ∈ 3N + d2N` |
//! | R4 | `d1 < d2` odd, coprime, `d1 >= 3` | tame iff `d3 ∈ d1N + d2N` |
//! | R5 | `(d, d+k(d+1), d+2k(d+1))`, `d > 4` even, `gcd(d,k) = 1` | not tame, reduction certificate |
//! | R6 | `d1 = 4`, `d2 >= 5` odd, `d3` even, `d3 - d2 != 1` | tame iff `d3 ∈ 4N + d2N` |
//!
//! Anything else is `Unknown`.

use std::fmt;

use num_integer::Integer;
use serde::Serialize;
use thiserror::Error;

use crate::autos::{
    composed_nagata_family, f_dk, nagata_triangular_family, tame_witness, triangular_tower,
    AutoError, MapDocument, Multidegree, PolyMap,
};
use crate::check::{gcd, Check, Relation};
use crate::reduction::{even_family_certificate, CaseReport, ReductionCertificate, TypeIiiCheck};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassifyError {
    #[error("triple {0} is not sorted (need d1 <= d2 <= d3)")]
    Unsorted(Multidegree),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("no wild multidegrees start with d = {0}: every (d,d2,d3) with d <= 2 is the multidegree of a tame automorphism")]
    NoWildDegrees(u32),
    #[error(transparent)]
    Auto(#[from] AutoError),
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

/// `(a, b)` with `a·d1 + b·d2 = d3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SemigroupWitness {
    pub a: u64,
    pub b: u64,
}

/// Finds `(a, b)` with `a·d1 + b·d2 = d3`, minimising `b` first and then `a`.
pub fn semigroup_member(d1: u64, d2: u64, d3: u64) -> Option<SemigroupWitness> {
    let b_max = d3.checked_div(d2).unwrap_or(0);
    (0..=b_max).find_map(|b| {
        let rest = d3 - b * d2;
        match d1 {
            0 => (rest == 0).then_some(SemigroupWitness { a: 0, b }),
            _ => rest
                .is_multiple_of(d1)
                .then_some(SemigroupWitness { a: rest / d1, b }),
        }
    })
}

/// A replayed non-membership argument.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ProofTrace {
    pub triple: Multidegree,
    pub steps: Vec<Check>,
    pub non_member: bool,
    /// Whether a direct scan of `d1N + d2N` reaches the same answer.
    pub brute_force_agrees: bool,
}

impl ProofTrace {
    fn new(triple: Multidegree, steps: Vec<Check>) -> Self {
        let non_member = steps.iter().all(|c| c.holds);
        let scanned =
            semigroup_member(triple.d1 as u64, triple.d2 as u64, triple.d3 as u64).is_none();
        ProofTrace {
            triple,
            steps,
            non_member,
            brute_force_agrees: non_member == scanned,
        }
    }
}

fn odd_coprime_precondition(r: u32, k: u32) -> Result<(), ClassifyError> {
    if r <= 1 || r.is_multiple_of(2) || k == 0 || (r as u64).gcd(&(k as u64)) != 1 {
        return Err(ClassifyError::Precondition(format!(
            "need odd r > 1, k >= 1 and gcd(r,k) = 1; got r = {r}, k = {k} (gcd {})",
            (r as u64).gcd(&(k as u64))
        )));
    }
    Ok(())
}

/// Replays why `r + 4k ∉ rN + (r+2k)N` for odd `r > 1` with `gcd(r,k) = 1`.
pub fn nonmember_trace_2k(r: u32, k: u32) -> Result<ProofTrace, ClassifyError> {
    odd_coprime_precondition(r, k)?;
    let triple = Multidegree::from_u64(r as u64, r as u64 + 2 * k as u64, r as u64 + 4 * k as u64)?;
    let (r, k) = (r as i128, k as i128);
    let (d2, d3) = (r + 2 * k, r + 4 * k);
    let steps = vec![
        Check::new(
            "gcd(r,r+2k) = gcd(r,2k)",
            gcd(r, d2),
            Relation::Eq,
            gcd(r, 2 * k),
        ),
        Check::new(
            "gcd(r,2k) = gcd(r,k)",
            gcd(r, 2 * k),
            Relation::Eq,
            gcd(r, k),
        ),
        Check::new("gcd(r,k)", gcd(r, k), Relation::Eq, 1),
        Check::new("2(r+2k) vs r+4k", 2 * d2, Relation::Gt, d3),
        Check::new("r divides r+4k", r, Relation::NotDivides, d3),
        // the only remaining shape is r+4k = (r+2k) + m*r, i.e. 2k = m*r
        Check::new("r divides 2k (2k = m*r)", r, Relation::NotDivides, 2 * k),
    ];
    Ok(ProofTrace::new(triple, steps))
}

/// Replays why `r + 2k(r+1) ∉ rN + (r+k(r+1))N` for odd `r > 1` with
/// `gcd(r,k) = 1`.
pub fn nonmember_trace_kr1(r: u32, k: u32) -> Result<ProofTrace, ClassifyError> {
    odd_coprime_precondition(r, k)?;
    let step = k as u64 * (r as u64 + 1);
    let triple = Multidegree::from_u64(r as u64, r as u64 + step, r as u64 + 2 * step)?;
    let (r, k) = (r as i128, k as i128);
    let step = k * (r + 1);
    let (d2, d3) = (r + step, r + 2 * step);
    let steps = vec![
        Check::new(
            "gcd(r,r+k(r+1)) = gcd(r,k(r+1))",
            gcd(r, d2),
            Relation::Eq,
            gcd(r, step),
        ),
        Check::new(
            "gcd(r,k(r+1)) = gcd(r,r+1)",
            gcd(r, step),
            Relation::Eq,
            gcd(r, r + 1),
        ),
        Check::new("gcd(r,r+1)", gcd(r, r + 1), Relation::Eq, 1),
        Check::new(
            "gcd(r,r+2k(r+1)) = gcd(r,2k(r+1))",
            gcd(r, d3),
            Relation::Eq,
            gcd(r, 2 * step),
        ),
        Check::new("gcd(r,2k(r+1))", gcd(r, 2 * step), Relation::Eq, 1),
        Check::new("r divides r+2k(r+1)", r, Relation::NotDivides, d3),
        Check::new("2(r+k(r+1)) vs r+2k(r+1)", 2 * d2, Relation::Gt, d3),
        // remaining shape r+2k(r+1) = r+k(r+1) + m*r, i.e. k(r+1) = m*r
        Check::new(
            "r divides k(r+1) (k(r+1) = m*r)",
            r,
            Relation::NotDivides,
            step,
        ),
    ];
    Ok(ProofTrace::new(triple, steps))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum TameStatus {
    Tame,
    NotTame,
    Unknown,
}

impl fmt::Display for TameStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            TameStatus::Tame => "Tame",
            TameStatus::NotTame => "NotTame",
            TameStatus::Unknown => "Unknown",
        };
        write!(f, "{s}")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum RuleId {
    R1,
    R2,
    R8,
    R3,
    R4,
    R5,
    R6,
    /// No rule applies.
    None,
}

impl RuleId {
    /// Priority order used by [`classify_tame`].
    pub const PRIORITY: [RuleId; 7] = [
        RuleId::R1,
        RuleId::R2,
        RuleId::R8,
        RuleId::R3,
        RuleId::R4,
        RuleId::R5,
        RuleId::R6,
    ];

    pub fn statement(self) -> &'static str {
        match self {
            RuleId::R1 => "d1 = 1: (x, y + x^d2, z + x^d3) is tame with multidegree (1,d2,d3)",
            RuleId::R2 => "every (2,d2,d3) with 2 <= d2 <= d3 is the multidegree of a tame automorphism",
            RuleId::R8 => "d3 = a*d1 + b*d2: (x + z^d1, y + z^d2, z + (x + z^d1)^a (y + z^d2)^b) is tame",
            RuleId::R3 => "(3,d2,d3) with 3 <= d2 <= d3 is a tame multidegree iff 3 | d2 or d3 in 3N + d2N",
            RuleId::R4 => "for odd coprime 3 <= d1 < d2 <= d3, (d1,d2,d3) is a tame multidegree iff d3 in d1N + d2N",
            RuleId::R5 => "(d, d+k(d+1), d+2k(d+1)) with even d > 4 and gcd(d,k) = 1 admits neither an elementary nor a type III reduction, hence is not a tame multidegree",
            RuleId::R6 => "for odd d2 >= 5 and even d3 >= d2 with d3 - d2 != 1, (4,d2,d3) is a tame multidegree iff d3 in 4N + d2N",
            RuleId::None => "no rule applies",
        }
    }
}

impl fmt::Display for RuleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RuleId::None => write!(f, "none"),
            other => write!(f, "{other:?}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum FamilyKind {
    /// `(d, d+2k, d+4k)`, `d ≡ 1 (mod 4)`.
    Odd1Mod4,
    /// `(d, d+k(d+1), d+2k(d+1))`, `d` odd.
    OddGeneral,
    /// `(d, d+k(d+1), d+2k(d+1))`, `d > 4` even.
    EvenGt4,
    /// `(4, 4+5k, 4+10k)`, `k` odd.
    DEquals4,
}

/// Parameters of a wild family member; side conditions are checked on
/// construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct FamilyParams {
    pub family: FamilyKind,
    pub d: u32,
    pub k: u32,
}

impl FamilyParams {
    pub fn new(family: FamilyKind, d: u32, k: u32) -> Result<Self, ClassifyError> {
        let coprime = k >= 1 && (d as u64).gcd(&(k as u64)) == 1;
        let ok = match family {
            FamilyKind::Odd1Mod4 => d > 1 && d % 4 == 1 && coprime,
            FamilyKind::OddGeneral => d > 1 && d % 2 == 1 && coprime,
            FamilyKind::EvenGt4 => d > 4 && d.is_multiple_of(2) && coprime,
            FamilyKind::DEquals4 => d == 4 && k % 2 == 1,
        };
        if !ok {
            return Err(ClassifyError::Precondition(format!(
                "{family:?} needs {}; got d = {d}, k = {k}",
                match family {
                    FamilyKind::Odd1Mod4 => "d ≡ 1 (mod 4), d > 1, gcd(d,k) = 1",
                    FamilyKind::OddGeneral => "odd d > 1, gcd(d,k) = 1",
                    FamilyKind::EvenGt4 => "even d > 4, gcd(d,k) = 1",
                    FamilyKind::DEquals4 => "d = 4 and odd k",
                }
            )));
        }
        Ok(FamilyParams { family, d, k })
    }

    /// The family used for degree `d >= 3`: `d ≡ 1 (mod 4)` takes
    /// `Odd1Mod4`, `d ≡ 3 (mod 4)` takes `OddGeneral`.
    pub fn family_for(d: u32) -> Result<FamilyKind, ClassifyError> {
        match d {
            0..=2 => Err(ClassifyError::NoWildDegrees(d)),
            4 => Ok(FamilyKind::DEquals4),
            _ if d % 4 == 1 => Ok(FamilyKind::Odd1Mod4),
            _ if d % 2 == 1 => Ok(FamilyKind::OddGeneral),
            _ => Ok(FamilyKind::EvenGt4),
        }
    }

    pub fn triple(&self) -> Result<Multidegree, ClassifyError> {
        let (d, k) = (self.d as u64, self.k as u64);
        let t = match self.family {
            FamilyKind::Odd1Mod4 => Multidegree::from_u64(d, d + 2 * k, d + 4 * k),
            _ => Multidegree::from_u64(d, d + k * (d + 1), d + 2 * k * (d + 1)),
        };
        Ok(t?)
    }

    /// The automorphism realising [`FamilyParams::triple`].
    pub fn build_map(&self) -> Result<PolyMap, ClassifyError> {
        let map = match self.family {
            FamilyKind::Odd1Mod4 => composed_nagata_family((self.d - 1) / 4, self.k)?,
            FamilyKind::OddGeneral => nagata_triangular_family(self.d, self.k)?,
            FamilyKind::EvenGt4 | FamilyKind::DEquals4 => f_dk(self.d, self.k)?,
        };
        Ok(map)
    }

    /// Recognises a sorted triple as a family member, preferring the family
    /// [`FamilyParams::family_for`] picks for `d1`.
    pub fn recognize(t: &Multidegree) -> Option<FamilyParams> {
        let (d, d2, d3) = (t.d1 as u64, t.d2 as u64, t.d3 as u64);
        if d < 3 || d2 <= d {
            return None;
        }
        let odd_step = || {
            let gap = d2 - d;
            (gap % 2 == 0 && d3 == d + 2 * gap).then_some(gap / 2)
        };
        let triangular_step = || {
            let gap = d2 - d;
            (gap % (d + 1) == 0 && d3 == d + 2 * gap).then(|| gap / (d + 1))
        };
        let preferred = FamilyParams::family_for(t.d1).ok()?;
        let candidates: [(FamilyKind, Option<u64>); 2] = match preferred {
            FamilyKind::Odd1Mod4 => [
                (FamilyKind::Odd1Mod4, odd_step()),
                (FamilyKind::OddGeneral, triangular_step()),
            ],
            other => [(other, triangular_step()), (other, None)],
        };
        candidates.into_iter().find_map(|(family, k)| {
            let k = u32::try_from(k?).ok()?;
            FamilyParams::new(family, t.d1, k).ok()
        })
    }
}

impl fmt::Display for FamilyParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}(d={}, k={})", self.family, self.d, self.k)
    }
}

/// How membership in `mdeg(Aut(C³))` is known.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Construction {
    TameWitness,
    TameByCitation,
    Family(FamilyParams),
    /// `(T∘N_k)∘(T∘N_l)` without the gcd side condition.
    ComposedNagata {
        l: u32,
        k: u32,
    },
    /// `(T∘N_k)∘H_r` without the gcd side condition.
    NagataTriangular {
        r: u32,
        k: u32,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Realizability {
    Yes(Construction),
    Unknown,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Certificate {
    WitnessMap(PolyMap),
    Citation(&'static str),
    SemigroupWitness {
        witness: SemigroupWitness,
        map: PolyMap,
    },
    ReductionArgument(ReductionCertificate),
    WildFamily {
        params: FamilyParams,
        map: PolyMap,
        basis: Box<Certificate>,
    },
    None,
}

impl Certificate {
    pub fn kind(&self) -> &'static str {
        match self {
            Certificate::WitnessMap(_) => "witness-map",
            Certificate::Citation(_) => "citation",
            Certificate::SemigroupWitness { .. } => "semigroup-witness",
            Certificate::ReductionArgument(_) => "reduction-argument",
            Certificate::WildFamily { .. } => "wild-family",
            Certificate::None => "none",
        }
    }

    pub fn map(&self) -> Option<&PolyMap> {
        match self {
            Certificate::WitnessMap(m)
            | Certificate::SemigroupWitness { map: m, .. }
            | Certificate::WildFamily { map: m, .. } => Some(m),
            _ => None,
        }
    }

    pub fn reports(&self) -> Option<&[CaseReport]> {
        match self {
            Certificate::ReductionArgument(c) => Some(&c.reports),
            Certificate::WildFamily { basis, .. } => basis.reports(),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    pub triple: Multidegree,
    pub status: TameStatus,
    pub rule: RuleId,
    pub certificate: Certificate,
    pub aut_realizable: Realizability,
}

impl Classification {
    /// Not tame, yet realised by an automorphism.
    pub fn is_wild(&self) -> bool {
        self.status == TameStatus::NotTame && matches!(self.aut_realizable, Realizability::Yes(_))
    }
}

fn member(t: &Multidegree) -> Option<SemigroupWitness> {
    semigroup_member(t.d1 as u64, t.d2 as u64, t.d3 as u64)
}

fn tame_iff(tame: bool) -> TameStatus {
    if tame {
        TameStatus::Tame
    } else {
        TameStatus::NotTame
    }
}

fn r5_certificate(t: &Multidegree) -> Option<ReductionCertificate> {
    let params = FamilyParams::recognize(t)?;
    if params.family != FamilyKind::EvenGt4 {
        return None;
    }
    even_family_certificate(params.d, params.k)
        .ok()
        .filter(|c| c.excludes_tame)
}

/// Verdict of a single rule, or `None` when the rule does not apply.
pub fn rule_verdict(rule: RuleId, t: &Multidegree) -> Option<TameStatus> {
    let (d1, d2, d3) = (t.d1, t.d2, t.d3);
    match rule {
        RuleId::R1 => (d1 == 1).then_some(TameStatus::Tame),
        RuleId::R2 => (d1 == 2).then_some(TameStatus::Tame),
        RuleId::R8 => member(t).map(|_| TameStatus::Tame),
        RuleId::R3 => (d1 == 3).then(|| tame_iff(d2 % 3 == 0 || member(t).is_some())),
        RuleId::R4 => {
            (d1 >= 3 && d1 < d2 && d1 % 2 == 1 && d2 % 2 == 1 && gcd(d1 as i128, d2 as i128) == 1)
                .then(|| tame_iff(member(t).is_some()))
        }
        RuleId::R5 => r5_certificate(t).map(|_| TameStatus::NotTame),
        RuleId::R6 => (d1 == 4 && d2 >= 5 && d2 % 2 == 1 && d3 % 2 == 0 && d3 - d2 != 1)
            .then(|| tame_iff(member(t).is_some())),
        RuleId::None => None,
    }
}

/// Every rule that applies to `t`, in priority order.
pub fn applicable_rules(t: &Multidegree) -> Vec<(RuleId, TameStatus)> {
    RuleId::PRIORITY
        .into_iter()
        .filter_map(|r| rule_verdict(r, t).map(|v| (r, v)))
        .collect()
}

fn known_construction(t: &Multidegree) -> Realizability {
    if let Some(params) = FamilyParams::recognize(t) {
        return Realizability::Yes(Construction::Family(params));
    }
    let (d, d2, d3) = (t.d1 as u64, t.d2 as u64, t.d3 as u64);
    if d2 <= d {
        return Realizability::Unknown;
    }
    let gap = d2 - d;
    if d3 != d + 2 * gap {
        return Realizability::Unknown;
    }
    if d % 4 == 1 && d > 1 && gap % 2 == 0 {
        if let (Ok(l), Ok(k)) = (u32::try_from((d - 1) / 4), u32::try_from(gap / 2)) {
            return Realizability::Yes(Construction::ComposedNagata { l, k });
        }
    }
    if gap % (d + 1) == 0 {
        if let Ok(k) = u32::try_from(gap / (d + 1)) {
            return Realizability::Yes(Construction::NagataTriangular { r: t.d1, k });
        }
    }
    Realizability::Unknown
}

/// Classifies a sorted triple by the first applicable rule.
pub fn classify_tame(t: &Multidegree) -> Result<Classification, ClassifyError> {
    if !t.is_sorted() {
        return Err(ClassifyError::Unsorted(*t));
    }
    let Some((rule, status)) = RuleId::PRIORITY
        .into_iter()
        .find_map(|r| rule_verdict(r, t).map(|v| (r, v)))
    else {
        return Ok(Classification {
            triple: *t,
            status: TameStatus::Unknown,
            rule: RuleId::None,
            certificate: Certificate::None,
            aut_realizable: known_construction(t),
        });
    };

    let certificate = match rule {
        RuleId::R1 => Certificate::WitnessMap(triangular_tower(t.d2, t.d3)?),
        RuleId::R8 => {
            let w = member(t).expect("R8 applies only to members");
            let (a, b) = (to_u32(w.a)?, to_u32(w.b)?);
            Certificate::SemigroupWitness {
                witness: w,
                map: tame_witness(t.d1, t.d2, t.d3, a, b)?,
            }
        }
        RuleId::R5 => Certificate::ReductionArgument(
            r5_certificate(t).expect("R5 applies only with a passing certificate"),
        ),
        other => Certificate::Citation(other.statement()),
    };
    let aut_realizable = match (&status, &certificate) {
        (TameStatus::Tame, Certificate::Citation(_)) => {
            Realizability::Yes(Construction::TameByCitation)
        }
        (TameStatus::Tame, _) => Realizability::Yes(Construction::TameWitness),
        _ => known_construction(t),
    };
    Ok(Classification {
        triple: *t,
        status,
        rule,
        certificate,
        aut_realizable,
    })
}

fn to_u32(v: u64) -> Result<u32, ClassifyError> {
    u32::try_from(v).map_err(|_| ClassifyError::Precondition(format!("{v} exceeds u32 range")))
}

/// Builds the family member, checks its multidegree symbolically, and
/// classifies the triple independently of the construction.
pub fn wild_family(params: FamilyParams) -> Result<(Multidegree, Classification), ClassifyError> {
    let params = FamilyParams::new(params.family, params.d, params.k)?;
    let triple = params.triple()?;
    let map = params.build_map()?;
    let computed = map.multidegree()?.sorted();
    if computed != triple {
        return Err(ClassifyError::Internal(format!(
            "{params} has multidegree {computed}, expected {triple}"
        )));
    }
    let verdict = classify_tame(&triple)?;
    if verdict.status != TameStatus::NotTame {
        return Err(ClassifyError::Internal(format!(
            "{params} gives {triple}, classified {} by {}",
            verdict.status, verdict.rule
        )));
    }
    let classification = Classification {
        triple,
        status: TameStatus::NotTame,
        rule: verdict.rule,
        certificate: Certificate::WildFamily {
            params,
            map,
            basis: Box::new(verdict.certificate),
        },
        aut_realizable: Realizability::Yes(Construction::Family(params)),
    };
    Ok((triple, classification))
}

/// The first `count` members of the wild family for `d`, in increasing `k`.
/// Each triple is checked to classify as not tame.
pub fn enumerate_wild(
    d: u32,
    count: usize,
) -> Result<Vec<(Multidegree, FamilyParams)>, ClassifyError> {
    let family = FamilyParams::family_for(d)?;
    let mut out = Vec::with_capacity(count);
    let mut k: u32 = 0;
    while out.len() < count {
        k = k
            .checked_add(1)
            .ok_or_else(|| ClassifyError::Precondition("ran out of k values".into()))?;
        let Ok(params) = FamilyParams::new(family, d, k) else {
            continue;
        };
        let triple = params.triple()?;
        let verdict = classify_tame(&triple)?;
        if verdict.status != TameStatus::NotTame {
            return Err(ClassifyError::Internal(format!(
                "{params} gives {triple}, classified {}",
                verdict.status
            )));
        }
        out.push((triple, params));
    }
    Ok(out)
}

/// Stable serialized form of a [`Classification`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassificationDocument {
    pub triple: Multidegree,
    pub status: TameStatus,
    pub rule_id: String,
    pub rule: &'static str,
    pub certificate: CertificateDocument,
    pub aut_realizable: RealizabilityDocument,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub maps: Option<[String; 3]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reports: Option<Vec<CaseReport>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "data", rename_all = "kebab-case")]
pub enum CertificateDocument {
    WitnessMap {
        factorization: Vec<String>,
    },
    Citation {
        statement: &'static str,
    },
    SemigroupWitness {
        a: u64,
        b: u64,
        factorization: Vec<String>,
    },
    ReductionArgument {
        type_iii: TypeIiiCheck,
        excludes_tame: bool,
    },
    WildFamily {
        family: FamilyKind,
        d: u32,
        k: u32,
        factorization: Vec<String>,
        basis: Box<CertificateDocument>,
    },
    None,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RealizabilityDocument {
    pub known: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub construction: Option<Construction>,
}

fn factorization_of(map: &PolyMap) -> Vec<String> {
    map.to_document().factorization.unwrap_or_default()
}

impl Certificate {
    pub fn to_document(&self) -> CertificateDocument {
        match self {
            Certificate::WitnessMap(m) => CertificateDocument::WitnessMap {
                factorization: factorization_of(m),
            },
            Certificate::Citation(s) => CertificateDocument::Citation { statement: s },
            Certificate::SemigroupWitness { witness, map } => {
                CertificateDocument::SemigroupWitness {
                    a: witness.a,
                    b: witness.b,
                    factorization: factorization_of(map),
                }
            }
            Certificate::ReductionArgument(c) => CertificateDocument::ReductionArgument {
                type_iii: c.type_iii,
                excludes_tame: c.excludes_tame,
            },
            Certificate::WildFamily { params, map, basis } => CertificateDocument::WildFamily {
                family: params.family,
                d: params.d,
                k: params.k,
                factorization: factorization_of(map),
                basis: Box::new(basis.to_document()),
            },
            Certificate::None => CertificateDocument::None,
        }
    }
}

impl Classification {
    pub fn to_document(&self) -> ClassificationDocument {
        ClassificationDocument {
            triple: self.triple,
            status: self.status,
            rule_id: self.rule.to_string(),
            rule: self.rule.statement(),
            certificate: self.certificate.to_document(),
            aut_realizable: match self.aut_realizable {
                Realizability::Yes(c) => RealizabilityDocument {
                    known: true,
                    construction: Some(c),
                },
                Realizability::Unknown => RealizabilityDocument {
                    known: false,
                    construction: None,
                },
            },
            maps: self.certificate.map().map(|m| MapDocument::from(m).coords),
            reports: self.certificate.reports().map(<[CaseReport]>::to_vec),
        }
    }
}

impl From<&PolyMap> for MapDocument {
    fn from(m: &PolyMap) -> Self {
        m.to_document()
    }
}
