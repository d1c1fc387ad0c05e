use crate::algebra::classify;
use crate::error::{Error, Result};
use crate::finite::congruence::{quotient, semiring_quotient_by_congruence};
use crate::finite::{FiniteModule, Subset};

/// The equivalent characterisations of an upward-closed subtractive
/// submodule, each evaluated independently.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UpwardReport {
    pub upward_closed: bool,
    pub contains_idempotents: bool,
    pub quotient_is_group: bool,
    /// Only for two-sided ideals of the semiring itself.
    pub contains_zero_one: Option<bool>,
    pub quotient_is_ring: Option<bool>,
}

impl UpwardReport {
    fn values(&self) -> Vec<bool> {
        let mut v = vec![
            self.upward_closed,
            self.contains_idempotents,
            self.quotient_is_group,
        ];
        v.extend(self.contains_zero_one);
        v.extend(self.quotient_is_ring);
        v
    }

    pub fn verdict(&self) -> bool {
        self.upward_closed
    }

    pub fn consistent(&self) -> bool {
        self.values().windows(2).all(|w| w[0] == w[1])
    }
}

pub fn upward_equivalences(m: &FiniteModule, s: &Subset) -> Result<UpwardReport> {
    if !m.is_submodule(s) {
        return Err(Error::NotSubmodule);
    }
    if !m.is_subtractive(s) {
        return Err(Error::NotSubtractive);
    }
    let (c, q) = quotient(m, s)?;
    let quotient_is_group = q.elements().all(|x| q.idem(x) == q.zero());
    let (contains_zero_one, quotient_is_ring) =
        if m.is_regular() && m.side().has_left() && m.side().has_right() {
            let r = m.base();
            let qr = semiring_quotient_by_congruence(r, &c)?;
            (Some(s.contains(r.zero_one())), Some(classify(&qr).is_ring))
        } else {
            (None, None)
        };
    let report = UpwardReport {
        upward_closed: m.is_upward_closed(s),
        contains_idempotents: m.idempotents().is_subset(s),
        quotient_is_group,
        contains_zero_one,
        quotient_is_ring,
    };
    if !report.consistent() {
        return Err(Error::Invariant(format!(
            "upward-closure characterisations disagree: {report:?}"
        )));
    }
    Ok(report)
}
