use std::fmt::{self, Display};
use std::str::FromStr;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::field::{is_prime, Field, Fp, Rational};

/// A coefficient field chosen at run time.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    Rationals,
    Prime(u32),
}

impl FieldSpec {
    pub fn prime(p: u64) -> Result<Self> {
        if !is_prime(p) || p > u32::MAX as u64 {
            return Err(Error::NotPrime(p));
        }
        Ok(FieldSpec::Prime(p as u32))
    }

    pub fn label(&self) -> String {
        self.to_string()
    }

    /// `Q` followed by the given primes.
    pub fn rationals_and(primes: &[u32]) -> Vec<FieldSpec> {
        std::iter::once(FieldSpec::Rationals).chain(primes.iter().map(|&p| FieldSpec::Prime(p))).collect()
    }
}

impl Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "Q"),
            FieldSpec::Prime(p) => write!(f, "F{p}"),
        }
    }
}

impl FromStr for FieldSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "Q" || s == "QQ" {
            return Ok(FieldSpec::Rationals);
        }
        let digits = s.strip_prefix('F').or_else(|| s.strip_prefix("ZZ/")).unwrap_or(s);
        let p: u64 = digits
            .parse()
            .map_err(|_| Error::Format(format!("unknown coefficient field `{s}`; use Q or F<p>")))?;
        FieldSpec::prime(p)
    }
}

/// A computation that can run over any coefficient field.
pub trait FieldTask: Sync {
    type Output: Send;

    fn run<K: Field>(&self, ctx: K::Ctx, label: &str) -> Self::Output;
}

pub fn run_on<T: FieldTask>(task: &T, field: FieldSpec) -> T::Output {
    let label = field.label();
    match field {
        FieldSpec::Rationals => task.run::<Rational>((), &label),
        FieldSpec::Prime(p) => task.run::<Fp>(p, &label),
    }
}

/// Runs the task over every field concurrently; results keep the input order.
pub fn over_fields<T: FieldTask>(task: &T, fields: &[FieldSpec]) -> Vec<T::Output> {
    fields.par_iter().map(|&f| run_on(task, f)).collect()
}

pub fn parse_primes(list: &str) -> Result<Vec<u32>> {
    list.split(',')
        .filter(|s| !s.trim().is_empty())
        .map(|s| {
            let p: u64 = s.trim().parse().map_err(|_| Error::Format(format!("`{s}` is not an integer")))?;
            match FieldSpec::prime(p)? {
                FieldSpec::Prime(p) => Ok(p),
                FieldSpec::Rationals => unreachable!(),
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parsing() {
        assert_eq!("Q".parse::<FieldSpec>().unwrap(), FieldSpec::Rationals);
        assert_eq!("F101".parse::<FieldSpec>().unwrap(), FieldSpec::Prime(101));
        assert_eq!("F4".parse::<FieldSpec>(), Err(Error::NotPrime(4)));
        assert_eq!(parse_primes("2, 3,5").unwrap(), vec![2, 3, 5]);
        assert!(parse_primes("2,x").is_err());
    }
}
