use std::path::PathBuf;

use clap::Args;
use invrig::finite::format::{parse_structure, Loaded};
use invrig::finite::{builtins, FiniteInverseMonoid, FiniteInverseSemiring, FiniteModule, Side};

use crate::report::{usage, Failure};

/// Built-in structures that are only checked on samples.
pub const SAMPLED_BUILTINS: [&str; 5] = ["Z0", "Zinf", "Tropical", "Bounded", "Free2"];

#[derive(Args, Debug)]
pub struct Input {
    /// Structure file (TOML)
    pub path: Option<PathBuf>,
    /// Use a built-in structure instead of a file
    #[arg(long, conflicts_with = "path")]
    pub builtin: Option<String>,
}

pub enum Source {
    Finite(Box<Loaded>),
    /// One of [`SAMPLED_BUILTINS`], canonical spelling.
    Sampled(&'static str),
}

pub struct Structure {
    pub label: String,
    pub source: Source,
}

impl Input {
    pub fn label(&self) -> String {
        match (&self.builtin, &self.path) {
            (Some(b), _) => format!("builtin:{b}"),
            (None, Some(p)) => p.display().to_string(),
            (None, None) => String::new(),
        }
    }

    pub fn load(&self) -> Result<Structure, Failure> {
        let label = self.label();
        let source = match (&self.builtin, &self.path) {
            (Some(name), _) => builtin_source(name)?,
            (None, Some(path)) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?;
                Source::Finite(Box::new(parse_structure(&text)?))
            }
            (None, None) => return Err(usage("give a structure file or --builtin NAME")),
        };
        Ok(Structure { label, source })
    }
}

fn builtin_source(name: &str) -> Result<Source, Failure> {
    if let Some(r) = builtins::builtin(name) {
        return Ok(Source::Finite(Box::new(Loaded::Semiring(r))));
    }
    if name.eq_ignore_ascii_case("End_Z2_0_module") {
        return Ok(Source::Finite(Box::new(Loaded::Module(
            builtins::end_z2_0_natural_module(),
        ))));
    }
    if let Some(s) = SAMPLED_BUILTINS
        .iter()
        .find(|s| s.eq_ignore_ascii_case(name))
    {
        return Ok(Source::Sampled(s));
    }
    Err(usage(format!(
        "unknown builtin {name:?}; known: {}, End_Z2_0_module, {}",
        builtins::BUILTIN_NAMES.join(", "),
        SAMPLED_BUILTINS.join(", ")
    )))
}

impl Structure {
    fn finite(&self) -> Option<&Loaded> {
        match &self.source {
            Source::Finite(l) => Some(l),
            Source::Sampled(_) => None,
        }
    }

    pub fn semiring(&self) -> Result<&FiniteInverseSemiring, Failure> {
        match self.finite() {
            Some(Loaded::Semiring(r)) => Ok(r),
            _ => Err(usage(format!(
                "{} is not a finite inverse semiring",
                self.label
            ))),
        }
    }

    /// A module file as given, or the regular module of a semiring.
    pub fn module(&self, side: Side) -> Result<FiniteModule, Failure> {
        match self.finite() {
            Some(Loaded::Semiring(r)) => Ok(FiniteModule::regular(r, side)),
            Some(Loaded::Module(m)) => Ok(m.clone()),
            _ => Err(usage(format!(
                "{} is neither a finite semiring nor a module",
                self.label
            ))),
        }
    }

    /// The additive monoid of whatever was loaded.
    pub fn monoid(&self) -> Result<FiniteInverseMonoid, Failure> {
        match self.finite() {
            Some(Loaded::Monoid(x)) => Ok(x.clone()),
            Some(Loaded::Semiring(r)) => Ok(FiniteInverseMonoid::from_semiring(r)),
            Some(Loaded::Module(m)) => Ok(FiniteInverseMonoid::validate(
                m.names().to_vec(),
                m.add_table().clone(),
                m.zero(),
            )?),
            None => Err(usage(format!("{} is not finite", self.label))),
        }
    }
}
