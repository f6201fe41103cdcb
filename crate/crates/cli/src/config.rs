//! Sweep configuration read from TOML; command-line flags take precedence.
//!
//! ```toml
//! datum = ["A2", "G2"]      # or a single string
//! grid = "default"          # or: values = ["0", "1/2", 2] / [["0", "1"], ["1/2"]]
//! alpha = [1]               # 1-based, default all
//! parallel = 4
//! ```

use std::path::Path;

use anyhow::{bail, Context};
use serde::Deserialize;

use fpp_core::lemma::GridSpec;
use fpp_core::rational::parse_rational;
use fpp_core::Rational;

use crate::SweepArgs;

#[derive(Deserialize)]
#[serde(untagged)]
enum OneOrMany {
    One(String),
    Many(Vec<String>),
}

#[derive(Clone, Deserialize)]
#[serde(untagged)]
enum RawRational {
    Int(i64),
    Text(String),
}

impl RawRational {
    fn value(&self) -> anyhow::Result<Rational> {
        match self {
            RawRational::Int(n) => Ok(Rational::from_integer(*n)),
            RawRational::Text(s) => Ok(parse_rational(s)?),
        }
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum RawValues {
    Uniform(Vec<RawRational>),
    PerCoordinate(Vec<Vec<RawRational>>),
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawConfig {
    datum: Option<OneOrMany>,
    grid: Option<String>,
    values: Option<RawValues>,
    alpha: Option<Vec<usize>>,
    parallel: Option<usize>,
}

/// Grid choice before the rank is known.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GridArg {
    Default,
    Uniform(Vec<Rational>),
    PerCoordinate(Vec<Vec<Rational>>),
}

impl GridArg {
    pub fn parse(s: &str) -> anyhow::Result<Self> {
        if s.trim() == "default" {
            return Ok(GridArg::Default);
        }
        let values = s.split(',').map(parse_rational).collect::<Result<Vec<_>, _>>()?;
        Ok(GridArg::Uniform(values))
    }

    pub fn to_spec(&self, rank: usize) -> anyhow::Result<GridSpec> {
        match self {
            GridArg::Default => Ok(GridSpec::default_for(rank)),
            GridArg::Uniform(v) => {
                if v.is_empty() {
                    bail!("empty grid value list");
                }
                Ok(GridSpec::uniform(rank, v.clone()))
            }
            GridArg::PerCoordinate(v) => {
                if v.len() != rank {
                    bail!("grid has {} coordinate lists, rank is {rank}", v.len());
                }
                if v.iter().any(Vec::is_empty) {
                    bail!("empty grid value list");
                }
                Ok(GridSpec { values: v.clone(), alphas: Default::default() })
            }
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SweepConfig {
    pub datum: Option<Vec<String>>,
    pub grid: Option<GridArg>,
    /// 1-based simple root indices.
    pub alpha: Option<Vec<usize>>,
    pub parallel: Option<usize>,
}

impl SweepConfig {
    pub fn parse(text: &str) -> anyhow::Result<Self> {
        let raw: RawConfig = toml::from_str(text)?;
        let grid = match (raw.grid, raw.values) {
            (Some(_), Some(_)) => bail!("give either `grid` or `values`, not both"),
            (Some(g), None) => Some(GridArg::parse(&g)?),
            (None, Some(RawValues::Uniform(v))) => {
                Some(GridArg::Uniform(v.iter().map(RawRational::value).collect::<Result<_, _>>()?))
            }
            (None, Some(RawValues::PerCoordinate(v))) => Some(GridArg::PerCoordinate(
                v.iter()
                    .map(|c| c.iter().map(RawRational::value).collect::<Result<_, _>>())
                    .collect::<Result<_, _>>()?,
            )),
            (None, None) => None,
        };
        Ok(Self {
            datum: raw.datum.map(|d| match d {
                OneOrMany::One(s) => split_labels(&s),
                OneOrMany::Many(v) => v,
            }),
            grid,
            alpha: raw.alpha,
            parallel: raw.parallel,
        })
    }

    pub fn load(path: &Path) -> anyhow::Result<Self> {
        let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        Self::parse(&text).with_context(|| format!("config {}", path.display()))
    }

    pub fn apply_flags(&mut self, args: &SweepArgs) -> anyhow::Result<()> {
        if let Some(d) = &args.datum {
            self.datum = Some(split_labels(d));
        }
        if let Some(g) = &args.grid {
            self.grid = Some(GridArg::parse(g)?);
        }
        if let Some(a) = &args.alpha {
            let alphas = a
                .split(',')
                .map(|t| t.trim().parse::<usize>().with_context(|| format!("alpha index `{t}`")))
                .collect::<anyhow::Result<Vec<_>>>()?;
            self.alpha = Some(alphas);
        }
        if args.parallel.is_some() {
            self.parallel = args.parallel;
        }
        Ok(())
    }
}

fn split_labels(s: &str) -> Vec<String> {
    s.split(',').map(|t| t.trim().to_string()).filter(|t| !t.is_empty()).collect()
}
