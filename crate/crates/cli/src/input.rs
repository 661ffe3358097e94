//! Graph sources (`star:4`, `file:g.json`, a bare path, or `-` for stdin)
//! and operation tokens (`lc:V`, `elc:A,B`).

use crate::error::{usage, CliError, Result};
use crate::names::NameTable;
use gselc::Graph;
use std::io::Read;
use std::path::{Path, PathBuf};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphSource {
    Star(usize),
    Cycle(usize),
    Path(usize),
    Empty(usize),
    File(PathBuf),
    Stdin,
}

impl GraphSource {
    pub fn parse(spec: &str) -> Result<Self> {
        if spec == "-" {
            return Ok(Self::Stdin);
        }
        let Some((kind, arg)) = spec.split_once(':') else {
            return Ok(Self::File(spec.into()));
        };
        let count = || {
            arg.parse::<usize>()
                .map_err(|_| usage(format!("expected a vertex count in {spec:?}")))
        };
        match kind {
            "star" => Ok(Self::Star(count()?)),
            "cycle" => Ok(Self::Cycle(count()?)),
            "path" => Ok(Self::Path(count()?)),
            "empty" => Ok(Self::Empty(count()?)),
            "file" => Ok(Self::File(arg.into())),
            _ => Ok(Self::File(spec.into())),
        }
    }

    pub fn load(&self) -> Result<Graph> {
        Ok(match self {
            Self::Star(n) => Graph::star(*n),
            Self::Cycle(n) => Graph::cycle(*n)?,
            Self::Path(n) => Graph::path(*n),
            Self::Empty(n) => Graph::new_empty(*n),
            Self::File(path) => Graph::from_json(&read_file(path)?)?,
            Self::Stdin => {
                let mut text = String::new();
                std::io::stdin()
                    .read_to_string(&mut text)
                    .map_err(|source| CliError::Read {
                        path: "<stdin>".into(),
                        source,
                    })?;
                Graph::from_json(&text)?
            }
        })
    }
}

fn read_file(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|source| CliError::Read {
        path: path.into(),
        source,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Op {
    Lc(usize),
    Elc(usize, usize),
}

impl Op {
    pub fn parse(token: &str, names: &NameTable) -> Result<Self> {
        let bad = || usage(format!("bad operation {token:?}; expected lc:V or elc:A,B"));
        let (kind, args) = token.split_once(':').ok_or_else(bad)?;
        match kind {
            "lc" => Ok(Self::Lc(names.resolve(args)?)),
            "elc" => {
                let (a, b) = args.split_once(',').ok_or_else(bad)?;
                Ok(Self::Elc(names.resolve(a)?, names.resolve(b)?))
            }
            _ => Err(bad()),
        }
    }

    pub fn label(&self, names: &NameTable) -> String {
        match *self {
            Self::Lc(v) => format!("lc:{}", names.label(v)),
            Self::Elc(a, b) => format!("elc:{},{}", names.label(a), names.label(b)),
        }
    }
}
