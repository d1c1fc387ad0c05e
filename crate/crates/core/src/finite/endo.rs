use crate::error::{Error, Result};
use crate::finite::hom::additive_maps;
use crate::finite::semiring::{check_names, check_table, derive_negation, single_failure};
use crate::finite::{FiniteInverseSemiring, FiniteModule, Table};

/// A finite commutative inverse monoid, written additively.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteInverseMonoid {
    names: Vec<String>,
    add: Table,
    zero: usize,
    neg: Vec<usize>,
}

impl FiniteInverseMonoid {
    pub fn validate(names: Vec<String>, add: Table, zero: usize) -> Result<Self> {
        check_names(&names)?;
        let n = names.len();
        check_table("add", &add, n, n, n)?;
        if zero >= n {
            return Err(Error::MalformedTable("zero out of range".into()));
        }
        let w = |xs: &[usize]| xs.iter().map(|&x| names[x].clone()).collect::<Vec<_>>();
        for x in 0..n {
            if add[zero][x] != x {
                return Err(single_failure("add-identity", w(&[x])));
            }
            for y in 0..n {
                if add[x][y] != add[y][x] {
                    return Err(single_failure("add-commutative", w(&[x, y])));
                }
                for z in 0..n {
                    if add[add[x][y]][z] != add[x][add[y][z]] {
                        return Err(single_failure("add-associative", w(&[x, y, z])));
                    }
                }
            }
        }
        let neg = derive_negation(&names, &add)?;
        Ok(FiniteInverseMonoid {
            names,
            add,
            zero,
            neg,
        })
    }

    /// The additive reduct of a semiring.
    pub fn from_semiring(r: &FiniteInverseSemiring) -> Self {
        FiniteInverseMonoid {
            names: r.names().to_vec(),
            add: r.add_table().clone(),
            zero: r.zero_index(),
            neg: r.neg_table().to_vec(),
        }
    }

    pub fn size(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn add_table(&self) -> &Table {
        &self.add
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    pub fn neg_table(&self) -> &[usize] {
        &self.neg
    }
}

/// `End(X)` with pointwise addition and `(f·g)(x) = f(g(x))`. Elements are
/// listed in lexicographic order of their value tuples and named like
/// `[0,0^,1]`. Also returns the maps themselves.
pub fn endomorphism_semiring(
    x: &FiniteInverseMonoid,
    budget: u64,
) -> Result<(FiniteInverseSemiring, Vec<Vec<usize>>)> {
    let maps = additive_maps(&x.add, x.zero, &x.add, x.zero, budget)?;
    let pos = |f: &Vec<usize>| {
        maps.binary_search(f)
            .map_err(|_| Error::Invariant("endomorphisms not closed".into()))
    };
    let mut add = Vec::with_capacity(maps.len());
    let mut mul = Vec::with_capacity(maps.len());
    for f in &maps {
        let mut arow = Vec::with_capacity(maps.len());
        let mut mrow = Vec::with_capacity(maps.len());
        for g in &maps {
            let sum: Vec<usize> = (0..x.size()).map(|i| x.add[f[i]][g[i]]).collect();
            let comp: Vec<usize> = (0..x.size()).map(|i| f[g[i]]).collect();
            arow.push(pos(&sum)?);
            mrow.push(pos(&comp)?);
        }
        add.push(arow);
        mul.push(mrow);
    }
    let zero_map = vec![x.zero; x.size()];
    let id: Vec<usize> = (0..x.size()).collect();
    let names = maps
        .iter()
        .map(|f| {
            let parts: Vec<&str> = f.iter().map(|&v| x.names[v].as_str()).collect();
            format!("[{}]", parts.join(","))
        })
        .collect();
    let r = FiniteInverseSemiring::validate(names, add, mul, pos(&zero_map)?, pos(&id)?)?;
    Ok((r, maps))
}

/// `X` as a left module over `End(X)`.
pub fn natural_module(
    x: &FiniteInverseMonoid,
    end: &FiniteInverseSemiring,
    maps: &[Vec<usize>],
) -> Result<FiniteModule> {
    FiniteModule::validate(
        end.clone(),
        x.names.clone(),
        x.add.clone(),
        x.zero,
        Some(maps.to_vec()),
        None,
    )
}
