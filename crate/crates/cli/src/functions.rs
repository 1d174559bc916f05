//! Builtin test functions for `deriv`.

use std::fmt;
use std::str::FromStr;

use crate::error::CliError;

/// `poly:c0,c1,…` (ascending powers), `sin`, `cos`, `exp` or `power:p`.
#[derive(Debug, Clone, PartialEq)]
pub enum Builtin {
    Poly(Vec<f64>),
    Sin,
    Cos,
    Exp,
    Power(f64),
}

impl Builtin {
    pub fn eval(&self, t: f64) -> f64 {
        match self {
            // Horner
            Builtin::Poly(c) => c.iter().rev().fold(0.0, |acc, &ci| acc * t + ci),
            Builtin::Sin => t.sin(),
            Builtin::Cos => t.cos(),
            Builtin::Exp => t.exp(),
            Builtin::Power(p) => t.powf(*p),
        }
    }
}

fn number(s: &str) -> Result<f64, CliError> {
    let v: f64 = s.trim().parse().map_err(|_| CliError::usage(format!("not a number: {s:?}")))?;
    if v.is_finite() {
        Ok(v)
    } else {
        Err(CliError::usage(format!("not a finite number: {s:?}")))
    }
}

impl FromStr for Builtin {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        let (name, arg) = match s.split_once(':') {
            Some((n, a)) => (n, Some(a)),
            None => (s, None),
        };
        match (name, arg) {
            ("sin", None) => Ok(Builtin::Sin),
            ("cos", None) => Ok(Builtin::Cos),
            ("exp", None) => Ok(Builtin::Exp),
            ("power", Some(p)) => Ok(Builtin::Power(number(p)?)),
            ("poly", Some(c)) => Ok(Builtin::Poly(c.split(',').map(number).collect::<Result<_, _>>()?)),
            _ => Err(CliError::usage(format!(
                "unknown function {s:?}; expected poly:<c0,c1,..>, sin, cos, exp or power:<p>"
            ))),
        }
    }
}

impl fmt::Display for Builtin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Builtin::Poly(c) => {
                let parts: Vec<String> = c.iter().map(|v| v.to_string()).collect();
                write!(f, "poly:{}", parts.join(","))
            }
            Builtin::Sin => f.write_str("sin"),
            Builtin::Cos => f.write_str("cos"),
            Builtin::Exp => f.write_str("exp"),
            Builtin::Power(p) => write!(f, "power:{p}"),
        }
    }
}
