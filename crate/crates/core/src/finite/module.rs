use crate::error::{Error, Result};
use crate::finite::semiring::{check_names, check_table, single_failure};
use crate::finite::{FiniteInverseSemiring, Table};

/// Which scalar actions a module carries.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
    Two,
}

impl Side {
    pub fn has_left(self) -> bool {
        matches!(self, Side::Left | Side::Two)
    }

    pub fn has_right(self) -> bool {
        matches!(self, Side::Right | Side::Two)
    }
}

impl std::str::FromStr for Side {
    type Err = Error;

    fn from_str(s: &str) -> Result<Side> {
        match s {
            "left" => Ok(Side::Left),
            "right" => Ok(Side::Right),
            "two" | "two-sided" | "both" => Ok(Side::Two),
            _ => Err(Error::Parse(format!("unknown side {s:?}"))),
        }
    }
}

/// A finite (left, right or bi-) module over a finite inverse semiring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteModule {
    base: FiniteInverseSemiring,
    names: Vec<String>,
    madd: Table,
    mzero: usize,
    /// `left[r][x] = r·x`
    left: Option<Table>,
    /// `right[x][r] = x·r`
    right: Option<Table>,
    neg: Vec<usize>,
    side: Side,
    regular: bool,
}

impl FiniteModule {
    pub fn validate(
        base: FiniteInverseSemiring,
        names: Vec<String>,
        madd: Table,
        mzero: usize,
        left: Option<Table>,
        right: Option<Table>,
    ) -> Result<Self> {
        check_names(&names)?;
        let n = base.size();
        let m = names.len();
        check_table("module add", &madd, m, m, m)?;
        if mzero >= m {
            return Err(Error::MalformedTable("module zero out of range".into()));
        }
        if let Some(t) = &left {
            check_table("left action", t, n, m, m)?;
        }
        if let Some(t) = &right {
            check_table("right action", t, m, n, m)?;
        }
        let side = match (&left, &right) {
            (Some(_), Some(_)) => Side::Two,
            (Some(_), None) => Side::Left,
            (None, Some(_)) => Side::Right,
            (None, None) => return Err(Error::MalformedTable("module needs an action".into())),
        };
        let fail = |law: &'static str, w: &[usize], scalars: &[usize]| {
            let mut wit: Vec<String> = scalars.iter().map(|&r| base.name(r).to_string()).collect();
            wit.extend(w.iter().map(|&x| names[x].clone()));
            Err(single_failure(law, wit))
        };
        for x in 0..m {
            if madd[mzero][x] != x {
                return fail("module-add-identity", &[x], &[]);
            }
            for y in 0..m {
                if madd[x][y] != madd[y][x] {
                    return fail("module-add-commutative", &[x, y], &[]);
                }
                for z in 0..m {
                    if madd[madd[x][y]][z] != madd[x][madd[y][z]] {
                        return fail("module-add-associative", &[x, y, z], &[]);
                    }
                }
            }
        }
        let one = base.one_index();
        let zero = base.zero_index();
        let radd = base.add_table();
        let rmul = base.mul_table();
        if let Some(l) = &left {
            #[allow(clippy::needless_range_loop)]
            for x in 0..m {
                if l[one][x] != x {
                    return fail("action-unit", &[x], &[]);
                }
                if l[zero][x] != mzero {
                    return fail("action-zero-scalar", &[x], &[]);
                }
            }
            for r in 0..n {
                if l[r][mzero] != mzero {
                    return fail("action-zero-vector", &[], &[r]);
                }
                for x in 0..m {
                    for y in 0..m {
                        if l[r][madd[x][y]] != madd[l[r][x]][l[r][y]] {
                            return fail("action-distributes-vectors", &[x, y], &[r]);
                        }
                    }
                    for s in 0..n {
                        if l[radd[r][s]][x] != madd[l[r][x]][l[s][x]] {
                            return fail("action-distributes-scalars", &[x], &[r, s]);
                        }
                        if l[rmul[r][s]][x] != l[r][l[s][x]] {
                            return fail("action-associative", &[x], &[r, s]);
                        }
                    }
                }
            }
        }
        if let Some(t) = &right {
            #[allow(clippy::needless_range_loop)]
            for x in 0..m {
                if t[x][one] != x {
                    return fail("raction-unit", &[x], &[]);
                }
                if t[x][zero] != mzero {
                    return fail("raction-zero-scalar", &[x], &[]);
                }
            }
            for r in 0..n {
                if t[mzero][r] != mzero {
                    return fail("raction-zero-vector", &[], &[r]);
                }
                for x in 0..m {
                    for y in 0..m {
                        if t[madd[x][y]][r] != madd[t[x][r]][t[y][r]] {
                            return fail("raction-distributes-vectors", &[x, y], &[r]);
                        }
                    }
                    for s in 0..n {
                        if t[x][radd[r][s]] != madd[t[x][r]][t[x][s]] {
                            return fail("raction-distributes-scalars", &[x], &[r, s]);
                        }
                        if t[x][rmul[r][s]] != t[t[x][r]][s] {
                            return fail("raction-associative", &[x], &[r, s]);
                        }
                    }
                }
            }
        }
        if let (Some(l), Some(t)) = (&left, &right) {
            for r in 0..n {
                for s in 0..n {
                    for x in 0..m {
                        if t[l[r][x]][s] != l[r][t[x][s]] {
                            return fail("bimodule-compatible", &[x], &[r, s]);
                        }
                    }
                }
            }
        }
        // The inverse is forced to be the action of -1; check that it is one.
        let minus_one = base.neg_table()[one];
        let neg: Vec<usize> = match (&left, &right) {
            (Some(l), _) => (0..m).map(|x| l[minus_one][x]).collect(),
            (None, Some(t)) => (0..m).map(|x| t[x][minus_one]).collect(),
            (None, None) => unreachable!(),
        };
        if let (Some(l), Some(t)) = (&left, &right) {
            for x in 0..m {
                if t[x][minus_one] != l[minus_one][x] {
                    return fail("action-minus-one", &[x], &[]);
                }
            }
        }
        for x in 0..m {
            let y = neg[x];
            if madd[madd[x][y]][x] != x || madd[madd[y][x]][y] != y {
                return fail("module-inverse", &[x], &[]);
            }
        }
        Ok(FiniteModule {
            base,
            names,
            madd,
            mzero,
            left,
            right,
            neg,
            side,
            regular: false,
        })
    }

    /// `R` as a module over itself; two-sided ideals are the submodules of
    /// `regular(R, Side::Two)`.
    pub fn regular(r: &FiniteInverseSemiring, side: Side) -> Self {
        let mul = r.mul_table().clone();
        FiniteModule {
            base: r.clone(),
            names: r.names().to_vec(),
            madd: r.add_table().clone(),
            mzero: r.zero_index(),
            left: side.has_left().then(|| mul.clone()),
            right: side.has_right().then_some(mul),
            neg: r.neg_table().to_vec(),
            side,
            regular: true,
        }
    }

    pub fn base(&self) -> &FiniteInverseSemiring {
        &self.base
    }

    pub fn side(&self) -> Side {
        self.side
    }

    /// Whether this is the semiring acting on itself by multiplication.
    pub fn is_regular(&self) -> bool {
        self.regular
    }

    pub fn size(&self) -> usize {
        self.names.len()
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn zero(&self) -> usize {
        self.mzero
    }

    pub fn add(&self, x: usize, y: usize) -> usize {
        self.madd[x][y]
    }

    pub fn neg(&self, x: usize) -> usize {
        self.neg[x]
    }

    pub fn add_table(&self) -> &Table {
        &self.madd
    }

    pub fn left_table(&self) -> Option<&Table> {
        self.left.as_ref()
    }

    pub fn right_table(&self) -> Option<&Table> {
        self.right.as_ref()
    }

    /// `r·x`, if a left action exists.
    pub fn act_left(&self, r: usize, x: usize) -> Option<usize> {
        self.left.as_ref().map(|t| t[r][x])
    }

    /// `x·r`, if a right action exists.
    pub fn act_right(&self, x: usize, r: usize) -> Option<usize> {
        self.right.as_ref().map(|t| t[x][r])
    }

    /// Every image of `x` under a single scalar action.
    pub fn actions(&self, x: usize) -> impl Iterator<Item = usize> + '_ {
        let l = self
            .left
            .iter()
            .flat_map(move |t| t.iter().map(move |row| row[x]));
        let r = self.right.iter().flat_map(move |t| t[x].iter().copied());
        l.chain(r)
    }

    /// `x + (-x)`
    pub fn idem(&self, x: usize) -> usize {
        self.madd[x][self.neg[x]]
    }

    pub fn is_idempotent(&self, x: usize) -> bool {
        self.madd[x][x] == x
    }

    /// `x ≤ y` iff `x + 0_y = y`.
    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.madd[x][self.idem(y)] == y
    }
}
