//! Loading instances from files or `--gen` specs, and enforcing `--cap-n`.

use std::path::Path;

use locex_core::generate::{gen_construction, gen_random, Instance, RandomModel};
use locex_core::io::{read_family, read_graph, read_poset, read_sequence};
use locex_core::{LocexError, RankedPoset, RealSequence, Result, SetFamily, SmallGraph};

/// Reads an instance file, turning a missing file into a configuration error
/// that names the path.
fn read<T>(path: &Path, f: impl Fn(&Path) -> Result<T>) -> Result<T> {
    if !path.exists() {
        return Err(LocexError::Config(format!("{} does not exist", path.display())));
    }
    f(path)
}

/// `kind:p1,p2,..`. Random models take their seed from `--seed`.
pub fn generate(spec: &str, seed: u64) -> Result<Instance> {
    let (kind, params) = spec.split_once(':').unwrap_or((spec, ""));
    let raw: Vec<&str> = params.split(',').map(str::trim).filter(|s| !s.is_empty()).collect();
    let float = |i: usize| -> Result<f64> {
        raw.get(i)
            .and_then(|t| t.parse::<f64>().ok())
            .ok_or_else(|| LocexError::Parameter(format!("{kind}: parameter {} must be a number", i + 1)))
    };
    let int = |i: usize| -> Result<usize> {
        raw.get(i)
            .and_then(|t| t.parse::<usize>().ok())
            .ok_or_else(|| LocexError::Parameter(format!("{kind}: parameter {} must be a nonnegative integer", i + 1)))
    };
    let arity = |k: usize| -> Result<()> {
        if raw.len() == k {
            Ok(())
        } else {
            Err(LocexError::Parameter(format!("{kind} takes {k} parameter(s), got {}", raw.len())))
        }
    };
    let model = match kind {
        "gnp" => {
            arity(2)?;
            RandomModel::Gnp { n: int(0)?, p: float(1)? }
        }
        "uniform-family" => {
            arity(2)?;
            RandomModel::UniformFamily {
                n: int(0)?,
                density: float(1)?,
            }
        }
        "uniform-r-family" => {
            arity(3)?;
            RandomModel::UniformRFamily {
                n: int(0)?,
                r: int(1)?,
                density: float(2)?,
            }
        }
        "permutation" => {
            arity(1)?;
            RandomModel::RandomPermutationSequence { len: int(0)? }
        }
        _ => {
            let ints = (0..raw.len()).map(int).collect::<Result<Vec<_>>>()?;
            return gen_construction(kind, &ints);
        }
    };
    gen_random(&model, seed)
}

pub struct Source<'a> {
    pub graph: Option<&'a Path>,
    pub family: Option<&'a Path>,
    pub poset: Option<&'a Path>,
    pub sequence: Option<&'a Path>,
    pub gen: Option<&'a str>,
    pub seed: u64,
    pub cap_n: Option<usize>,
}

impl Source<'_> {
    /// Human-readable origin for the config echo.
    pub fn describe(&self) -> String {
        if let Some(g) = self.gen {
            return format!("gen:{g}");
        }
        [self.graph, self.family, self.poset, self.sequence]
            .into_iter()
            .flatten()
            .next()
            .map(|p| p.display().to_string())
            .unwrap_or_default()
    }

    fn cap(&self, what: &str, n: usize) -> Result<()> {
        match self.cap_n {
            Some(limit) if n > limit => Err(LocexError::capacity(what, limit, n)),
            _ => Ok(()),
        }
    }

    fn missing(what: &str) -> LocexError {
        LocexError::Config(format!("this command needs --{what} or --gen"))
    }

    pub fn graph(&self) -> Result<SmallGraph> {
        let g = match (self.graph, self.gen) {
            (Some(p), _) => read(p, read_graph)?,
            (None, Some(spec)) => generate(spec, self.seed)?.into_graph()?,
            (None, None) => return Err(Self::missing("graph")),
        };
        self.cap("vertices", g.n())?;
        Ok(g)
    }

    pub fn family(&self) -> Result<SetFamily> {
        let f = match (self.family, self.gen) {
            (Some(p), _) => read(p, read_family)?,
            (None, Some(spec)) => generate(spec, self.seed)?.into_family()?,
            (None, None) => return Err(Self::missing("family")),
        };
        self.cap("ground set", f.n())?;
        Ok(f)
    }

    pub fn poset(&self) -> Result<RankedPoset> {
        let p = match self.poset {
            Some(p) => read(p, read_poset)?,
            None => return Err(LocexError::Config("this command needs --poset".into())),
        };
        self.cap("poset elements", p.m())?;
        Ok(p)
    }

    pub fn sequence(&self) -> Result<RealSequence> {
        let s = match (self.sequence, self.gen) {
            (Some(p), _) => read(p, read_sequence)?,
            (None, Some(spec)) => generate(spec, self.seed)?.into_sequence()?,
            (None, None) => return Err(Self::missing("sequence")),
        };
        self.cap("sequence length", s.len())?;
        Ok(s)
    }
}

pub fn read_file(path: &Path) -> Result<String> {
    if !path.exists() {
        return Err(LocexError::Config(format!("{} does not exist", path.display())));
    }
    Ok(std::fs::read_to_string(path)?)
}
