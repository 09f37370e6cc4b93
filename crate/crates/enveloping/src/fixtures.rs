//! In-repo JSON transcriptions of the known rank-two commutant data: generator
//! sets, commutator ledgers, dependence relations and the G2 decomposition
//! constraint data. Every entry carries a status maintained by the oracle runs:
//! `verbatim` (verified as printed), `corrected` (the stored expression is the
//! oracle-resolved reading; the printed variant is kept alongside) or
//! `unparseable` (kept as raw text only).

use crate::commutant::GeneratorSet;
use crate::decomp::ConstraintSet;
use crate::parse::parse_element;
use crate::rootsys::builtin_algebra;
use crate::uea::AlgebraCtx;
use crate::{Error, Result};
use serde::{Deserialize, Serialize};
use std::sync::Arc;

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Verbatim,
    Corrected,
    Unparseable,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GeneratorFixture {
    pub name: String,
    pub degree: usize,
    pub weight: Vec<i64>,
    pub status: Status,
    /// parseable expression (the oracle-resolved reading when corrected)
    pub expr: Option<String>,
    /// the printed variant, when it differs or fails
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub printed: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GeneratorSetFixture {
    pub algebra: String,
    pub subalgebra: Vec<String>,
    pub generators: Vec<GeneratorFixture>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LedgerEntry {
    pub id: String,
    /// "commutator" (lhs is a bracket pair) or "dependence" (expr == 0)
    pub kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lhs: Option<(String, String)>,
    /// right-hand side (commutator) or the whole relation (dependence)
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expr: Option<String>,
    pub status: Status,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub raw: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LedgerFixture {
    pub algebra: String,
    pub entries: Vec<LedgerEntry>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct G2DecompFixture {
    /// chosen interpretation of the excluded-pattern rule
    pub exclusion_rule: String,
    pub constraints: ConstraintSet,
    pub expected_totals: Vec<usize>,
    pub expected_distinct: Vec<usize>,
    /// printed explicit lines with corrections applied, p = 2..6
    pub expected_multisets: Vec<(usize, Vec<(i64, i64, usize)>)>,
    pub notes: Vec<String>,
}

pub const A2_FIXTURE: &str = include_str!("../fixtures/a2.json");
pub const B2_FIXTURE: &str = include_str!("../fixtures/b2.json");
pub const SL2SL3_FIXTURE: &str = include_str!("../fixtures/sl2sl3.json");
pub const G2_GENERATORS_FIXTURE: &str = include_str!("../fixtures/g2_generators.json");
pub const A2_LEDGER: &str = include_str!("../fixtures/a2_ledger.json");
pub const B2_LEDGER: &str = include_str!("../fixtures/b2_ledger.json");
pub const SL2SL3_LEDGER: &str = include_str!("../fixtures/sl2sl3_ledger.json");
pub const G2_LEDGER: &str = include_str!("../fixtures/g2_ledger.json");
pub const G2_CONSTRAINTS: &str = include_str!("../fixtures/g2_constraints.json");
pub const G2_DECOMP: &str = include_str!("../fixtures/g2_decomp.json");

pub fn load_generator_fixture(json: &str) -> Result<GeneratorSetFixture> {
    Ok(serde_json::from_str(json)?)
}

pub fn load_ledger(json: &str) -> Result<LedgerFixture> {
    Ok(serde_json::from_str(json)?)
}

pub fn load_g2_decomp() -> Result<G2DecompFixture> {
    Ok(serde_json::from_str(G2_DECOMP)?)
}

/// Build the algebra context and parse the fixture generators into a set.
/// Unparseable entries are skipped (they carry no expression).
pub fn build_generator_set(fx: &GeneratorSetFixture) -> Result<(Arc<AlgebraCtx>, GeneratorSet)> {
    let alg = AlgebraCtx::new(builtin_algebra(&fx.algebra)?);
    let mut gs = GeneratorSet::default();
    for g in &fx.generators {
        if let Some(expr) = &g.expr {
            let el = parse_element(&alg, expr)?;
            gs.insert(&g.name, el)?;
        }
    }
    Ok((alg, gs))
}

/// Subalgebra generator indices named in the fixture.
pub fn subalgebra_indices(alg: &Arc<AlgebraCtx>, fx: &GeneratorSetFixture) -> Result<Vec<usize>> {
    fx.subalgebra
        .iter()
        .map(|l| {
            alg.sc
                .index_of(l)
                .ok_or_else(|| Error::UnresolvedName(l.clone()))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures_parse() {
        for (name, json) in [
            ("a2", A2_FIXTURE),
            ("b2", B2_FIXTURE),
            ("sl2sl3", SL2SL3_FIXTURE),
            ("g2", G2_GENERATORS_FIXTURE),
        ] {
            let fx = load_generator_fixture(json).unwrap_or_else(|e| panic!("{name}: {e}"));
            let (_, gs) = build_generator_set(&fx).unwrap_or_else(|e| panic!("{name}: {e}"));
            assert!(!gs.generators.is_empty(), "{name}");
        }
        for json in [A2_LEDGER, B2_LEDGER, SL2SL3_LEDGER, G2_LEDGER, G2_CONSTRAINTS] {
            let lf = load_ledger(json).unwrap();
            assert!(!lf.entries.is_empty());
        }
        let d = load_g2_decomp().unwrap();
        assert_eq!(d.expected_totals.len(), 16);
    }

    #[test]
    fn fixture_degrees_and_weights_match_elements() {
        for json in [A2_FIXTURE, B2_FIXTURE, SL2SL3_FIXTURE, G2_GENERATORS_FIXTURE] {
            let fx = load_generator_fixture(json).unwrap();
            let (_, gs) = build_generator_set(&fx).unwrap();
            for g in &fx.generators {
                if g.expr.is_none() {
                    continue;
                }
                let got = gs.get(&g.name).unwrap();
                assert_eq!(got.degree, g.degree, "{}/{}", fx.algebra, g.name);
                assert_eq!(got.weight.0, g.weight, "{}/{}", fx.algebra, g.name);
            }
        }
    }
}
