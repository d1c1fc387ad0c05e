//! TOML file format for finite structures. Tables are written with element
//! names, row index first:
//!
//! ```toml
//! elements = ["0", "1"]
//! zero = "0"
//! one = "1"
//! add = [["0", "1"], ["1", "0"]]
//! mul = [["0", "0"], ["0", "1"]]
//!
//! # optional module over the semiring above
//! module_elements = ["0", "1"]
//! mzero = "0"
//! madd = [["0", "1"], ["1", "0"]]
//! action = [["0", "0"], ["0", "1"]]   # action[r][x] = r·x
//! ```
//!
//! `right_action[x][r] = x·r` gives a right (or, with `action`, a two-sided)
//! module.
//!
//! Without `mul` and `one` the file describes a commutative inverse monoid.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::finite::endo::FiniteInverseMonoid;
use crate::finite::{FiniteInverseSemiring, FiniteModule, Table};

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct StructureFile {
    pub elements: Vec<String>,
    pub zero: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub one: Option<String>,
    pub add: Vec<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mul: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub module_elements: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mzero: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub madd: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub action: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub right_action: Option<Vec<Vec<String>>>,
}

#[derive(Clone, Debug)]
pub enum Loaded {
    Semiring(FiniteInverseSemiring),
    Monoid(FiniteInverseMonoid),
    Module(FiniteModule),
}

fn lookup(names: &[String], s: &str) -> Result<usize> {
    names
        .iter()
        .position(|n| n == s)
        .ok_or_else(|| Error::Parse(format!("unknown element {s:?}")))
}

fn decode(names: &[String], t: &[Vec<String>]) -> Result<Table> {
    t.iter()
        .map(|row| row.iter().map(|s| lookup(names, s)).collect())
        .collect()
}

fn encode(names: &[String], t: &Table) -> Vec<Vec<String>> {
    t.iter()
        .map(|row| row.iter().map(|&v| names[v].clone()).collect())
        .collect()
}

impl StructureFile {
    pub fn parse(src: &str) -> Result<Self> {
        toml::from_str(src).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn load(&self) -> Result<Loaded> {
        let names = &self.elements;
        let add = decode(names, &self.add)?;
        let zero = lookup(names, &self.zero)?;
        let (mul, one) = match (&self.mul, &self.one) {
            (None, None) => {
                if self.has_module() {
                    return Err(Error::Parse(
                        "a module needs a semiring with mul and one".into(),
                    ));
                }
                return Ok(Loaded::Monoid(FiniteInverseMonoid::validate(
                    names.clone(),
                    add,
                    zero,
                )?));
            }
            (Some(m), Some(o)) => (decode(names, m)?, lookup(names, o)?),
            _ => return Err(Error::Parse("mul and one must be given together".into())),
        };
        let r = FiniteInverseSemiring::validate(names.clone(), add, mul, zero, one)?;
        if !self.has_module() {
            return Ok(Loaded::Semiring(r));
        }
        let (Some(mnames), Some(mzero), Some(madd)) =
            (&self.module_elements, &self.mzero, &self.madd)
        else {
            return Err(Error::Parse(
                "a module needs module_elements, mzero and madd".into(),
            ));
        };
        let decode_action = |t: &[Vec<String>]| -> Result<Table> {
            t.iter()
                .map(|row| row.iter().map(|s| lookup(mnames, s)).collect())
                .collect()
        };
        let left = self.action.as_deref().map(decode_action).transpose()?;
        let right = self
            .right_action
            .as_deref()
            .map(decode_action)
            .transpose()?;
        Ok(Loaded::Module(FiniteModule::validate(
            r,
            mnames.clone(),
            decode(mnames, madd)?,
            lookup(mnames, mzero)?,
            left,
            right,
        )?))
    }

    fn has_module(&self) -> bool {
        self.module_elements.is_some()
            || self.mzero.is_some()
            || self.madd.is_some()
            || self.action.is_some()
            || self.right_action.is_some()
    }

    pub fn from_semiring(r: &FiniteInverseSemiring) -> Self {
        let names = r.names();
        StructureFile {
            elements: names.to_vec(),
            zero: names[r.zero_index()].clone(),
            one: Some(names[r.one_index()].clone()),
            add: encode(names, r.add_table()),
            mul: Some(encode(names, r.mul_table())),
            module_elements: None,
            mzero: None,
            madd: None,
            action: None,
            right_action: None,
        }
    }

    pub fn from_module(m: &FiniteModule) -> Self {
        let mut file = Self::from_semiring(m.base());
        let names = m.names();
        file.module_elements = Some(names.to_vec());
        file.mzero = Some(names[m.zero()].clone());
        file.madd = Some(encode(names, m.add_table()));
        file.action = m.left_table().map(|t| encode(names, t));
        file.right_action = m.right_table().map(|t| encode(names, t));
        file
    }

    pub fn to_toml(&self) -> String {
        toml::to_string(self).expect("structure files always serialise")
    }
}

pub fn parse_structure(src: &str) -> Result<Loaded> {
    StructureFile::parse(src)?.load()
}
