//! Named integer facts used in proof traces and reduction reports.

use std::fmt;

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Relation {
    Eq,
    Ne,
    Lt,
    Le,
    Gt,
    Ge,
    /// `lhs | rhs`
    Divides,
    /// `lhs ∤ rhs`
    NotDivides,
}

impl Relation {
    pub fn holds(self, lhs: i128, rhs: i128) -> bool {
        match self {
            Relation::Eq => lhs == rhs,
            Relation::Ne => lhs != rhs,
            Relation::Lt => lhs < rhs,
            Relation::Le => lhs <= rhs,
            Relation::Gt => lhs > rhs,
            Relation::Ge => lhs >= rhs,
            Relation::Divides => divides(lhs, rhs),
            Relation::NotDivides => !divides(lhs, rhs),
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Relation::Eq => "=",
            Relation::Ne => "!=",
            Relation::Lt => "<",
            Relation::Le => "<=",
            Relation::Gt => ">",
            Relation::Ge => ">=",
            Relation::Divides => "|",
            Relation::NotDivides => "!|",
        }
    }
}

fn divides(a: i128, b: i128) -> bool {
    if a == 0 {
        b == 0
    } else {
        b % a == 0
    }
}

/// One evaluated fact `lhs <relation> rhs`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub lhs: i128,
    pub relation: Relation,
    pub rhs: i128,
    pub holds: bool,
}

impl Check {
    pub fn new(name: impl Into<String>, lhs: i128, relation: Relation, rhs: i128) -> Self {
        Check {
            name: name.into(),
            lhs,
            relation,
            rhs,
            holds: relation.holds(lhs, rhs),
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}] {}: {} {} {}",
            if self.holds { "ok" } else { "FAIL" },
            self.name,
            self.lhs,
            self.relation.symbol(),
            self.rhs
        )
    }
}

pub(crate) fn gcd(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}
