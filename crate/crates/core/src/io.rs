//! Plain-text ideal files and JSON complex files.
//!
//! An ideal file starts with a ring header and lists one polynomial per line:
//!
//! ```text
//! # twisted cubic
//! ring: x, y, z, w over Q
//! x*z - y^2
//! y*w - z^2
//! x*w - y*z
//! ```
//!
//! The field is `Q` or `F<p>`; `#` starts a comment and commas may separate
//! several polynomials on one line.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::complexes::{FreeComplex, FreeModule, PolyMatrix};
use crate::error::{Error, Result};
use crate::field::{Field, Fp, Rational};
use crate::ideal::Ideal;
use crate::parse::parse_poly;
use crate::poly::{PolyRing, Ring};
use crate::verify::fields::FieldSpec;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealFile {
    pub vars: Vec<String>,
    pub field: FieldSpec,
    pub polys: Vec<String>,
}

/// Work to run on an ideal once its coefficient field is known.
pub trait IdealTask {
    type Output;

    fn run<K: Field>(&self, ideal: Ideal<K>) -> Result<Self::Output>;
}

fn parse_header(line: &str) -> Result<(Vec<String>, FieldSpec)> {
    let rest = line
        .strip_prefix("ring:")
        .ok_or_else(|| Error::Format(format!("expected `ring: VARS over FIELD`, found `{line}`")))?;
    let (vars, field) = rest
        .rsplit_once(" over ")
        .ok_or_else(|| Error::Format("ring header lacks `over FIELD`".into()))?;
    let vars: Vec<String> = vars
        .split([',', ' '])
        .map(str::trim)
        .filter(|v| !v.is_empty())
        .map(str::to_string)
        .collect();
    if vars.is_empty() {
        return Err(Error::Format("ring header lists no variables".into()));
    }
    Ok((vars, field.trim().parse()?))
}

impl IdealFile {
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .map(|l| l.split('#').next().unwrap_or("").trim())
            .filter(|l| !l.is_empty());
        let header = lines.next().ok_or_else(|| Error::Format("empty ideal file".into()))?;
        let (vars, field) = parse_header(header)?;
        let polys = lines
            .flat_map(|l| l.split(','))
            .map(str::trim)
            .filter(|p| !p.is_empty())
            .map(str::to_string)
            .collect();
        Ok(IdealFile { vars, field, polys })
    }

    pub fn read(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path).map_err(|e| Error::Format(format!("{}: {e}", path.display())))?;
        Self::parse(&text)
    }

    pub fn ring<K: Field>(&self, ctx: K::Ctx) -> Result<Ring<K>> {
        PolyRing::new(&self.vars, ctx)
    }

    pub fn ideal<K: Field>(&self, ring: &Ring<K>) -> Result<Ideal<K>> {
        let gens = self.polys.iter().map(|p| parse_poly(p, ring)).collect::<Result<Vec<_>>>()?;
        Ok(Ideal::new(ring, gens))
    }

    /// Builds the ideal over the declared field and hands it to `task`.
    pub fn dispatch<T: IdealTask>(&self, task: &T) -> Result<T::Output> {
        match self.field {
            FieldSpec::Rationals => task.run(self.ideal(&self.ring::<Rational>(())?)?),
            FieldSpec::Prime(p) => task.run(self.ideal(&self.ring::<Fp>(p)?)?),
        }
    }

    pub fn from_ideal<K: Field>(ideal: &Ideal<K>) -> Self {
        let ring = ideal.ring();
        IdealFile {
            vars: ring.var_names().to_vec(),
            field: field_of(ring),
            polys: ideal.gens().iter().map(|g| g.to_string()).collect(),
        }
    }
}

pub fn field_of<K: Field>(ring: &Ring<K>) -> FieldSpec {
    match ring.characteristic() {
        0 => FieldSpec::Rationals,
        p => FieldSpec::Prime(p as u32),
    }
}

impl std::fmt::Display for IdealFile {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "ring: {} over {}", self.vars.join(", "), self.field)?;
        for p in &self.polys {
            writeln!(f, "{p}")?;
        }
        Ok(())
    }
}

/// JSON form of a graded free complex; `modules[k]` lists the twists at
/// position `low + k` and `differentials[k]` maps position `low + k + 1` to
/// `low + k`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexFile {
    pub vars: Vec<String>,
    pub field: String,
    #[serde(default)]
    pub low: i64,
    pub modules: Vec<Vec<i64>>,
    pub differentials: Vec<Vec<Vec<String>>>,
}

/// Work to run on a complex once its coefficient field is known.
pub trait ComplexTask {
    type Output;

    fn run<K: Field>(&self, complex: FreeComplex<K>) -> Result<Self::Output>;
}

impl ComplexFile {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Format(e.to_string()))
    }

    pub fn read(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path).map_err(|e| Error::Format(format!("{}: {e}", path.display())))?;
        Self::from_json(&text)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }

    pub fn complex<K: Field>(&self, ctx: K::Ctx) -> Result<FreeComplex<K>> {
        let ring = PolyRing::new(&self.vars, ctx)?;
        let modules = self.modules.iter().map(|t| FreeModule::new(t.clone())).collect();
        let differentials = self
            .differentials
            .iter()
            .map(|m| {
                m.iter()
                    .map(|row| row.iter().map(|e| parse_poly(e, &ring)).collect::<Result<Vec<_>>>())
                    .collect::<Result<PolyMatrix<K>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        FreeComplex::new(&ring, self.low, modules, differentials)
    }

    pub fn dispatch<T: ComplexTask>(&self, task: &T) -> Result<T::Output> {
        match self.field.parse::<FieldSpec>()? {
            FieldSpec::Rationals => task.run(self.complex::<Rational>(())?),
            FieldSpec::Prime(p) => task.run(self.complex::<Fp>(p)?),
        }
    }

    pub fn from_complex<K: Field>(c: &FreeComplex<K>) -> Self {
        ComplexFile {
            vars: c.ring().var_names().to_vec(),
            field: field_of(c.ring()).to_string(),
            low: c.low(),
            modules: c.modules().iter().map(|m| m.twists.clone()).collect(),
            differentials: c
                .differentials()
                .iter()
                .map(|m| m.iter().map(|row| row.iter().map(|e| e.to_string()).collect()).collect())
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complexes::koszul_complex;
    use crate::poly::RingExt;

    const CUBIC: &str = "# twisted cubic\nring: x, y, z, w over F7\nx*z - y^2\ny*w - z^2  # second\nx*w - y*z\n";

    struct Degree;

    impl IdealTask for Degree {
        type Output = (u64, i64);

        fn run<K: Field>(&self, ideal: Ideal<K>) -> Result<(u64, i64)> {
            Ok((ideal.ring().characteristic(), ideal.hilbert_data()?.degree))
        }
    }

    #[test]
    fn ideal_files() {
        let f = IdealFile::parse(CUBIC).unwrap();
        assert_eq!(f.vars, ["x", "y", "z", "w"]);
        assert_eq!(f.field, FieldSpec::Prime(7));
        assert_eq!(f.polys.len(), 3);
        assert_eq!(f.dispatch(&Degree).unwrap(), (7, 3));
        let again = IdealFile::parse(&f.to_string()).unwrap();
        assert_eq!(again, f);
        let packed = IdealFile::parse("ring: x, y over Q\nx^2, y^2,\nx*y").unwrap();
        assert_eq!(packed.polys, ["x^2", "y^2", "x*y"]);
    }

    #[test]
    fn malformed_ideal_files() {
        assert!(matches!(IdealFile::parse("x + y"), Err(Error::Format(_))));
        assert!(matches!(IdealFile::parse("ring: x over F4"), Err(Error::NotPrime(4))));
        let f = IdealFile::parse("ring: x over Q\nx + q").unwrap();
        assert!(matches!(f.dispatch(&Degree), Err(Error::UnknownVariable(_))));
    }

    #[test]
    fn complex_round_trip() {
        let r = PolyRing::<Rational>::new(&["x1", "x2", "x3"], ()).unwrap();
        let gens: Vec<_> = (0..3).map(|i| r.var(i)).collect();
        let k = koszul_complex(&r, &gens).unwrap();
        let file = ComplexFile::from_complex(&k);
        let back = ComplexFile::from_json(&file.to_json()).unwrap();
        assert_eq!(back, file);
        let rebuilt = back.complex::<Rational>(()).unwrap();
        assert!(rebuilt.is_complex());
        assert_eq!(rebuilt.rank(2), 3);
    }
}
