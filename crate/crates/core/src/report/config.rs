//! Job configuration files.
//!
//! A job is a TOML document. All sections are optional; a fixture supplies
//! its own objects, and anything declared in the file is added on top.
//!
//! ```toml
//! command = "act"
//! genus = 3
//! fixture = "paper-figure-1"
//! seed = 7
//!
//! [params]
//! kappa1 = "0"
//! kappa2 = "-1"
//!
//! [vectors]
//! c = "b1"                     # canonical text
//! d = [1, 0, 0, 0, 0, 0]       # coefficients over a1..ag, b1..bg
//!
//! [multivectors]
//! top = "a2^b1^a3"
//! w = { degree = 3, coeffs = ["1/2", 0, ...] }   # C(2g, degree) coefficients
//!
//! [subsurfaces.left]
//! boundary = "d"               # a vector name or an expression
//! pairs = [["a2", "b2"]]
//!
//! [bounding_pairs.bp]
//! side1 = "left"
//! side2 = "right"
//!
//! [args]
//! bounding_pair = "bp"
//! top = "top"
//! ```
//!
//! Coefficients are integers or strings `"p/q"`. Argument values name an
//! object of the right kind or give an expression directly.

use std::collections::BTreeMap;

use serde::Deserialize;

use crate::exterior::{Multivector, SymplecticSpace, Vector};
use crate::fixtures;
use crate::h3::TorelliParams;
use crate::johnson::{BoundingPairSpec, SubsurfaceSpec};
use crate::text::{parse_multivector, parse_rational, parse_vector};
use crate::{Error, Rational, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Command {
    Decompose,
    Forms,
    Johnson,
    Act,
    Audit,
    Invariants,
}

impl Command {
    pub const ALL: [Command; 6] = [
        Command::Decompose,
        Command::Forms,
        Command::Johnson,
        Command::Act,
        Command::Audit,
        Command::Invariants,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Command::Decompose => "decompose",
            Command::Forms => "forms",
            Command::Johnson => "johnson",
            Command::Act => "act",
            Command::Audit => "audit",
            Command::Invariants => "invariants",
        }
    }
}

impl std::str::FromStr for Command {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Command::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::UnknownCommand(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
#[serde(untagged)]
pub enum Coef {
    Int(i64),
    Text(String),
}

impl Coef {
    fn to_rational(&self, location: &str) -> Result<Rational> {
        match self {
            Coef::Int(n) => Ok(crate::int(*n)),
            Coef::Text(s) => parse_rational(s).map_err(|e| config_err(location, e)),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
#[serde(untagged)]
pub enum VectorValue {
    Text(String),
    Coeffs(Vec<Coef>),
}

#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
#[serde(untagged)]
pub enum MultivectorValue {
    Text(String),
    Coeffs { degree: usize, coeffs: Vec<Coef> },
}

#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SubsurfaceConfig {
    pub boundary: VectorValue,
    #[serde(default)]
    pub pairs: Vec<[VectorValue; 2]>,
}

#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BoundingPairConfig {
    pub side1: String,
    pub side2: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ParamsConfig {
    pub kappa1: Option<Coef>,
    pub kappa2: Option<Coef>,
}

/// A parsed but unresolved job.
#[derive(Debug, Clone, Default, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JobConfig {
    pub command: Option<String>,
    pub genus: Option<usize>,
    pub fixture: Option<String>,
    pub seed: Option<u64>,
    #[serde(default)]
    pub params: ParamsConfig,
    #[serde(default)]
    pub vectors: BTreeMap<String, VectorValue>,
    #[serde(default)]
    pub multivectors: BTreeMap<String, MultivectorValue>,
    #[serde(default)]
    pub subsurfaces: BTreeMap<String, SubsurfaceConfig>,
    #[serde(default)]
    pub bounding_pairs: BTreeMap<String, BoundingPairConfig>,
    #[serde(default)]
    pub args: BTreeMap<String, Coef>,
}

fn config_err(location: &str, e: impl std::fmt::Display) -> Error {
    Error::Config {
        location: location.to_string(),
        message: e.to_string(),
    }
}

impl JobConfig {
    pub fn from_toml_str(text: &str) -> Result<Self> {
        toml::from_str(text).map_err(|e| {
            let location = match e.span() {
                Some(span) => {
                    let line = text[..span.start].matches('\n').count() + 1;
                    let col = span.start - text[..span.start].rfind('\n').map_or(0, |p| p + 1) + 1;
                    format!("line {line}, column {col}")
                }
                None => "document".to_string(),
            };
            Error::Config {
                location,
                message: e.message().to_string(),
            }
        })
    }

    pub fn for_fixture(name: &str) -> Self {
        JobConfig {
            fixture: Some(name.to_string()),
            ..Default::default()
        }
    }

    pub fn set_arg(&mut self, key: &str, value: &str) {
        self.args.insert(key.to_string(), Coef::Text(value.to_string()));
    }

    /// Resolves names, parses expressions and validates every object.
    pub fn resolve(&self) -> Result<Job> {
        let command: Command = self
            .command
            .as_deref()
            .ok_or_else(|| config_err("command", "no command given"))?
            .parse()?;
        let fixture = self.fixture.as_deref().map(fixtures::lookup).transpose()?;
        let genus = match (self.genus, &fixture) {
            (Some(g), Some(f)) if g != f.space.genus() => {
                return Err(config_err(
                    "genus",
                    format!(
                        "genus {g} conflicts with fixture {} of genus {}",
                        f.name,
                        f.space.genus()
                    ),
                ))
            }
            (Some(g), _) => g,
            (None, Some(f)) => f.space.genus(),
            (None, None) => return Err(config_err("genus", "no genus or fixture given")),
        };
        let space = SymplecticSpace::new(genus).map_err(|e| config_err("genus", e))?;

        let mut job = Job {
            command,
            space,
            fixture: self.fixture.clone(),
            seed: self.seed,
            params: TorelliParams::default(),
            vectors: BTreeMap::new(),
            multivectors: BTreeMap::new(),
            subsurfaces: BTreeMap::new(),
            bounding_pairs: BTreeMap::new(),
            args: BTreeMap::new(),
        };

        if let Some(f) = &fixture {
            for (name, v) in [
                ("a", &f.a),
                ("a_prime", &f.a_prime),
                ("b", &f.b),
                ("c", &f.c),
                ("d", f.d()),
                ("d_prime", f.d_prime()),
            ] {
                job.vectors.insert(name.to_string(), v.clone());
            }
            job.multivectors.insert("top".into(), f.top.clone());
            job.subsurfaces.insert("side1".into(), f.bounding_pair.side1().clone());
            job.subsurfaces.insert("side2".into(), f.bounding_pair.side2().clone());
            job.bounding_pairs.insert("bp".into(), f.bounding_pair.clone());
        }

        let kappa1 = match &self.params.kappa1 {
            Some(c) => c.to_rational("params.kappa1")?,
            None => job.params.kappa1().clone(),
        };
        let kappa2 = match &self.params.kappa2 {
            Some(c) => c.to_rational("params.kappa2")?,
            None => job.params.kappa2().clone(),
        };
        job.params = TorelliParams::new(kappa1, kappa2).map_err(|e| config_err("params.kappa2", e))?;

        for (name, value) in &self.vectors {
            let v = job.vector_value(value, &format!("vectors.{name}"))?;
            job.vectors.insert(name.clone(), v);
        }
        for (name, value) in &self.multivectors {
            let location = format!("multivectors.{name}");
            let m = match value {
                MultivectorValue::Text(s) => parse_multivector(genus, s, None).map_err(|e| config_err(&location, e))?,
                MultivectorValue::Coeffs { degree, coeffs } => {
                    let coeffs = coeffs
                        .iter()
                        .enumerate()
                        .map(|(i, c)| c.to_rational(&format!("{location}.coeffs[{i}]")))
                        .collect::<Result<Vec<_>>>()?;
                    if !(1..=3).contains(degree) {
                        return Err(config_err(&location, format!("degree {degree} is not supported")));
                    }
                    Multivector::from_coordinates(genus, *degree, &coeffs).map_err(|e| config_err(&location, e))?
                }
            };
            job.multivectors.insert(name.clone(), m);
        }
        for (name, sub) in &self.subsurfaces {
            let location = format!("subsurfaces.{name}");
            let boundary = job.vector_value(&sub.boundary, &format!("{location}.boundary"))?;
            let pairs = sub
                .pairs
                .iter()
                .enumerate()
                .map(|(i, [e, f])| {
                    Ok((
                        job.vector_value(e, &format!("{location}.pairs[{i}][0]"))?,
                        job.vector_value(f, &format!("{location}.pairs[{i}][1]"))?,
                    ))
                })
                .collect::<Result<Vec<_>>>()?;
            let spec = SubsurfaceSpec::new(boundary, pairs).map_err(|e| config_err(&location, e))?;
            job.subsurfaces.insert(name.clone(), spec);
        }
        for (name, bp) in &self.bounding_pairs {
            let location = format!("bounding_pairs.{name}");
            let side = |key: &str, side: &str| -> Result<SubsurfaceSpec> {
                job.subsurfaces
                    .get(side)
                    .cloned()
                    .ok_or_else(|| config_err(&format!("{location}.{key}"), format!("unknown subsurface {side:?}")))
            };
            let spec = BoundingPairSpec::new(side("side1", &bp.side1)?, side("side2", &bp.side2)?)
                .map_err(|e| config_err(&location, e))?;
            job.bounding_pairs.insert(name.clone(), spec);
        }
        for (key, value) in &self.args {
            let text = match value {
                Coef::Int(n) => n.to_string(),
                Coef::Text(s) => s.clone(),
            };
            job.args.insert(key.clone(), text);
        }
        Ok(job)
    }
}

/// A resolved job: every object parsed and validated.
#[derive(Debug, Clone)]
pub struct Job {
    pub command: Command,
    pub space: SymplecticSpace,
    pub fixture: Option<String>,
    pub seed: Option<u64>,
    pub params: TorelliParams,
    pub vectors: BTreeMap<String, Vector>,
    pub multivectors: BTreeMap<String, Multivector>,
    pub subsurfaces: BTreeMap<String, SubsurfaceSpec>,
    pub bounding_pairs: BTreeMap<String, BoundingPairSpec>,
    pub args: BTreeMap<String, String>,
}

impl Job {
    pub fn genus(&self) -> usize {
        self.space.genus()
    }

    fn vector_value(&self, value: &VectorValue, location: &str) -> Result<Vector> {
        match value {
            VectorValue::Text(s) => self.vector_ref(s, location),
            VectorValue::Coeffs(cs) => {
                if cs.len() != self.space.dim() {
                    return Err(config_err(
                        location,
                        format!("expected {} coefficients, found {}", self.space.dim(), cs.len()),
                    ));
                }
                let coords = cs
                    .iter()
                    .enumerate()
                    .map(|(i, c)| c.to_rational(&format!("{location}[{i}]")))
                    .collect::<Result<Vec<_>>>()?;
                Vector::new(coords).map_err(|e| config_err(location, e))
            }
        }
    }

    /// A named vector, or an expression.
    pub fn vector_ref(&self, text: &str, location: &str) -> Result<Vector> {
        if let Some(v) = self.vectors.get(text.trim()) {
            return Ok(v.clone());
        }
        parse_vector(self.genus(), text).map_err(|e| config_err(location, e))
    }

    /// A named multivector of the given degree, or an expression.
    pub fn multivector_ref(&self, text: &str, degree: usize, location: &str) -> Result<Multivector> {
        let m = match self.multivectors.get(text.trim()) {
            Some(m) => m.clone(),
            None => parse_multivector(self.genus(), text, Some(degree)).map_err(|e| config_err(location, e))?,
        };
        if m.degree() != degree {
            return Err(config_err(
                location,
                Error::WrongDegree {
                    expected: degree,
                    found: m.degree(),
                },
            ));
        }
        Ok(m)
    }

    pub fn arg(&self, key: &str) -> Option<&str> {
        self.args.get(key).map(String::as_str)
    }

    /// The bounding pair named by `args.bounding_pair`, or the only one declared.
    pub fn bounding_pair(&self) -> Result<(String, BoundingPairSpec)> {
        let location = "args.bounding_pair";
        match self.arg("bounding_pair") {
            Some(name) => self
                .bounding_pairs
                .get(name)
                .map(|b| (name.to_string(), b.clone()))
                .ok_or_else(|| config_err(location, format!("unknown bounding pair {name:?}"))),
            None if self.bounding_pairs.len() == 1 => {
                let (n, b) = self.bounding_pairs.iter().next().expect("one entry");
                Ok((n.clone(), b.clone()))
            }
            None => Err(config_err(location, "no bounding pair selected")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixture_job_resolves() {
        let mut c = JobConfig::for_fixture(fixtures::FIGURE_ONE);
        c.command = Some("act".into());
        let job = c.resolve().unwrap();
        assert_eq!(job.genus(), 3);
        assert_eq!(job.bounding_pair().unwrap().0, "bp");
        assert_eq!(job.vectors["c"].to_string(), "b1");
    }

    #[test]
    fn full_config_resolves() {
        let text = r#"
command = "johnson"
genus = 3

[params]
kappa2 = "1/2"

[vectors]
d = [1, 0, 0, 0, 0, 0]

[multivectors]
w = { degree = 2, coeffs = [0, 0, "1/2", 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0] }

[subsurfaces.left]
boundary = "d"
pairs = [["a2", "b2"]]

[subsurfaces.right]
boundary = "-a1"
pairs = [["a3", "b3"]]

[bounding_pairs.bp]
side1 = "left"
side2 = "right"
"#;
        let job = JobConfig::from_toml_str(text).unwrap().resolve().unwrap();
        assert_eq!(job.command, Command::Johnson);
        assert_eq!(job.params.kappa2(), &crate::rat(1, 2));
        assert_eq!(job.multivectors["w"].to_string(), "1/2 a1^b1");
        assert_eq!(job.bounding_pair().unwrap().1.d().to_string(), "a1");
    }

    #[test]
    fn errors_carry_locations() {
        let e = JobConfig::from_toml_str("genus = 3\ncommand = \n").unwrap_err();
        assert!(matches!(e, Error::Config { ref location, .. } if location.starts_with("line 2")));

        let e = JobConfig::from_toml_str("command = \"act\"\ngenus = 3\n[vectors]\nx = [1, 2]\n")
            .unwrap()
            .resolve()
            .unwrap_err();
        assert!(matches!(e, Error::Config { ref location, .. } if location == "vectors.x"));

        let text = "command = \"act\"\ngenus = 3\n[subsurfaces.s]\nboundary = \"a1\"\npairs = [[\"a2\", \"a3\"]]\n";
        let e = JobConfig::from_toml_str(text).unwrap().resolve().unwrap_err();
        assert!(
            matches!(e, Error::Config { ref location, ref message } if location == "subsurfaces.s" && message.contains("e1·f1"))
        );

        let e = JobConfig::from_toml_str("command = \"frobnicate\"\ngenus = 3\n")
            .unwrap()
            .resolve()
            .unwrap_err();
        assert_eq!(e, Error::UnknownCommand("frobnicate".into()));
    }
}
