//! Verification results: one named identity, its parameters and both sides.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::cyclotomic::{fmt_rational, Cyc12, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub params: String,
    pub lhs: String,
    pub rhs: String,
    pub pass: bool,
}

impl Check {
    pub fn new(name: impl Into<String>, params: impl Into<String>, lhs: String, rhs: String, pass: bool) -> Self {
        Check { name: name.into(), params: params.into(), lhs, rhs, pass }
    }

    pub fn rational(name: impl Into<String>, params: impl Into<String>, lhs: &Rational, rhs: &Rational) -> Self {
        Check::new(name, params, fmt_rational(lhs), fmt_rational(rhs), lhs == rhs)
    }

    pub fn cyc(name: impl Into<String>, params: impl Into<String>, lhs: &Cyc12, rhs: &Cyc12) -> Self {
        Check::new(name, params, lhs.to_string(), rhs.to_string(), lhs == rhs)
    }

    pub fn integer<T: PartialEq + fmt::Display>(name: impl Into<String>, params: impl Into<String>, lhs: T, rhs: T) -> Self {
        let pass = lhs == rhs;
        Check::new(name, params, lhs.to_string(), rhs.to_string(), pass)
    }

    /// A boolean assertion; both sides render as the predicate outcome.
    pub fn holds(name: impl Into<String>, params: impl Into<String>, ok: bool) -> Self {
        Check::new(name, params, ok.to_string(), "true".to_string(), ok)
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mark = if self.pass { "PASS" } else { "FAIL" };
        write!(f, "{mark} {} [{}] lhs={} rhs={}", self.name, self.params, self.lhs, self.rhs)
    }
}

pub fn all_pass(checks: &[Check]) -> bool {
    checks.iter().all(|c| c.pass)
}

pub fn ser_rational<S: Serializer>(x: &Rational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&fmt_rational(x))
}

pub fn ser_opt_rational<S: Serializer>(x: &Option<Rational>, s: S) -> Result<S::Ok, S::Error> {
    match x {
        Some(v) => s.serialize_str(&fmt_rational(v)),
        None => s.serialize_none(),
    }
}
