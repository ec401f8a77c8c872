use serde::Serialize;

use super::iso::{isomorphic, IsoResult};
use super::{one, product, sum, zero};
use crate::error::Result;
use crate::evolve::{evolve, EvolveOptions};
use crate::system::MultiwaySystem;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Identity {
    SumComm,
    SumAssoc,
    SumNeutral,
    ProdComm,
    ProdAssoc,
    ProdNeutral,
    /// `m1 ⊙ (m2 ⊕ m3) ≅ (m1 ⊕ m2) ⊙ (m1 ⊕ m3)`
    Distributivity,
    /// `0 ⊙ m1 ≅ 0`, which does not hold in general.
    Annihilation,
}

impl Identity {
    pub const ALL: [Identity; 8] = [
        Identity::SumComm,
        Identity::SumAssoc,
        Identity::SumNeutral,
        Identity::ProdComm,
        Identity::ProdAssoc,
        Identity::ProdNeutral,
        Identity::Distributivity,
        Identity::Annihilation,
    ];

    /// Left and right sides of the identity for the given operands.
    pub fn sides(
        self,
        m1: &MultiwaySystem,
        m2: &MultiwaySystem,
        m3: &MultiwaySystem,
    ) -> Result<(MultiwaySystem, MultiwaySystem)> {
        let s = |a: &MultiwaySystem, b: &MultiwaySystem| sum(a, b).map(|c| c.system);
        let p = |a: &MultiwaySystem, b: &MultiwaySystem| product(a, b).map(|c| c.system);
        Ok(match self {
            Identity::SumComm => (s(m1, m2)?, s(m2, m1)?),
            Identity::SumAssoc => (s(&s(m1, m2)?, m3)?, s(m1, &s(m2, m3)?)?),
            Identity::SumNeutral => (s(&zero(), m1)?, m1.clone()),
            Identity::ProdComm => (p(m1, m2)?, p(m2, m1)?),
            Identity::ProdAssoc => (p(&p(m1, m2)?, m3)?, p(m1, &p(m2, m3)?)?),
            Identity::ProdNeutral => (p(&one(), m1)?, m1.clone()),
            Identity::Distributivity => (p(m1, &s(m2, m3)?)?, p(&s(m1, m2)?, &s(m1, m3)?)?),
            Identity::Annihilation => (p(&zero(), m1)?, zero()),
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum IdentityVerdict {
    HoldsUpToHorizon,
    /// Layer counts first differ at `layer`, or the graphs are not isomorphic
    /// despite equal counts (`layer` absent).
    Counterexample { layer: Option<usize> },
    Undecided,
}

/// Builds both sides, evolves them to `horizon` layers and compares their
/// states graphs up to layered isomorphism.
pub fn verify_semiring_identity(
    identity: Identity,
    m1: &MultiwaySystem,
    m2: &MultiwaySystem,
    m3: &MultiwaySystem,
    horizon: usize,
) -> Result<IdentityVerdict> {
    let (l, r) = identity.sides(m1, m2, m3)?;
    let gl = evolve(&l, EvolveOptions::new(horizon));
    let gr = evolve(&r, EvolveOptions::new(horizon));
    let (cl, cr) = (gl.growth_series().counts, gr.growth_series().counts);
    if let Some(d) = (0..cl.len().max(cr.len())).find(|&d| cl.get(d) != cr.get(d)) {
        return Ok(IdentityVerdict::Counterexample { layer: Some(d) });
    }
    Ok(match isomorphic(&gl, &gr) {
        IsoResult::Isomorphic(_) => IdentityVerdict::HoldsUpToHorizon,
        IsoResult::NotIsomorphic => IdentityVerdict::Counterexample { layer: None },
        IsoResult::Undecided => IdentityVerdict::Undecided,
    })
}
