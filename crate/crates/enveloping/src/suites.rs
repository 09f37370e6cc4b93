//! Verification suites over the paper fixtures: one function per suite, shared
//! by the CLI (`verify paper --suite ...`) and the acceptance tests. Each suite
//! produces a line-per-check report; a suite passes when all its checks do.

use crate::cache::memo_element;
use crate::commutant::{
    casimir_search, chain_commutant, eval_generator_monomial, generator_monomials, left_divide,
    quotient_representative, solve_block, GeneratorSet, RelationReport, RelationVerdict,
};
use crate::decomp::{self, weyl_dim_g2, weyl_dim_general};
use crate::exterior::{invariant_count, proposition_table};
use crate::fixtures::{
    self, build_generator_set, load_generator_fixture, load_ledger, subalgebra_indices,
    LedgerEntry, LedgerFixture, Status,
};
use crate::linalg::{nullspace, SparseVec};
use crate::parse::parse_with_names;
use crate::rootsys::{builtin_algebra, CartanMatrix, SeriesTag, Weight};
use crate::scalar::{rat, ratio, Rat};
use crate::symalg::{build_system, d0_formula, generic_rank};
use crate::uea::{AlgebraCtx, Element, Monomial, SymElement};
use crate::{Error, Result};
use num::bigint::BigInt;
use num::Zero;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

#[derive(Debug, Clone, Serialize)]
pub struct CheckLine {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub checks: Vec<CheckLine>,
}

impl SuiteReport {
    fn new(suite: &str) -> Self {
        SuiteReport { suite: suite.to_string(), checks: Vec::new() }
    }

    fn push(&mut self, name: &str, passed: bool, detail: impl Into<String>) {
        self.checks.push(CheckLine { name: name.to_string(), passed, detail: detail.into() });
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let mark = if c.passed { "PASS" } else { "FAIL" };
            out.push_str(&format!("[{mark}] {}::{}", self.suite, c.name));
            if !c.detail.is_empty() {
                out.push_str(&format!("  ({})", c.detail));
            }
            out.push('\n');
        }
        out
    }
}

// ---------------------------------------------------------------------------
// structure suite
// ---------------------------------------------------------------------------

pub fn structure_suite() -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("structure");
    for tag in ["d2", "a2", "b2", "g2"] {
        let sc = builtin_algebra(tag)?;
        let jr = sc.verify_jacobi();
        rep.push(
            &format!("jacobi_{tag}"),
            jr.passed(),
            format!("{} violations over dim {}", jr.violations.len(), jr.dim),
        );
    }
    for (series, rank) in [
        (SeriesTag::A, 1),
        (SeriesTag::A, 2),
        (SeriesTag::A, 3),
        (SeriesTag::B, 2),
        (SeriesTag::G2, 2),
    ] {
        let cm = CartanMatrix::standard(series, rank)?;
        let (rs, sc) = crate::rootsys::from_cartan(&cm)?;
        let bad = sc.verify_serre(&cm);
        rep.push(
            &format!("serre_{series:?}{rank}"),
            bad.is_empty() && sc.verify_jacobi().passed(),
            format!("|R+| = {}", rs.positive.len()),
        );
    }
    // A2 from the Cartan matrix is isomorphic to the Table-1 fixture
    rep.push("a2_isomorphic_to_table", a2_isomorphism_check()?, "signed-permutation search");
    Ok(rep)
}

/// Search for an explicit isomorphism from the generated A2 onto the Table-1
/// algebra among signed permutations compatible with the weight structure.
fn a2_isomorphism_check() -> Result<bool> {
    let cm = CartanMatrix::standard(SeriesTag::A, 2)?;
    let (_, gen) = crate::rootsys::from_cartan(&cm)?;
    let tab = builtin_algebra("a2")?;
    // map Cartan to Cartan by weight matching: candidate images of each
    // generated basis vector are the table vectors of equal weight (signed)
    let gw: Vec<_> = (0..gen.dim()).map(|i| gen.generator_weight(i).ok()).collect();
    let tw: Vec<_> = (0..tab.dim()).map(|i| tab.generator_weight(i).ok()).collect();
    // try both Cartan identifications (H1,H2) -> (H1,H2) or swapped with sign maps
    let root_imgs: Vec<Vec<usize>> = (0..gen.dim())
        .map(|i| {
            (0..tab.dim())
                .filter(|&j| gw[i].is_some() && gw[i] == tw[j])
                .collect()
        })
        .collect();
    // non-Cartan generated indices: 2..8 (Cartans are 0,1)
    let non_cartan: Vec<usize> = (2..gen.dim()).collect();
    // backtracking over images and signs
    fn ok_map(
        gen: &crate::rootsys::StructureConstants,
        tab: &crate::rootsys::StructureConstants,
        img: &HashMap<usize, (usize, Rat)>,
    ) -> bool {
        for (&i, &(ii, ref si)) in img.iter() {
            for (&j, &(jj, ref sj)) in img.iter() {
                if i >= j {
                    continue;
                }
                // [phi(i), phi(j)] must equal phi([i,j])
                let lhs: BTreeMap<usize, Rat> = tab
                    .bracket(ii, jj)
                    .into_iter()
                    .map(|(k, c)| (k as usize, c * si.clone() * sj.clone()))
                    .collect();
                let mut rhs: BTreeMap<usize, Rat> = BTreeMap::new();
                for (k, c) in gen.bracket(i, j) {
                    match img.get(&(k as usize)) {
                        Some(&(kk, ref sk)) => {
                            let e = rhs.entry(kk).or_insert_with(Rat::zero);
                            *e += c * sk.clone();
                        }
                        None => return true, // undetermined yet; defer
                    }
                }
                let lhs: BTreeMap<usize, Rat> =
                    lhs.into_iter().filter(|(_, v)| !v.is_zero()).collect();
                let rhs: BTreeMap<usize, Rat> =
                    rhs.into_iter().filter(|(_, v)| !v.is_zero()).collect();
                if lhs != rhs {
                    return false;
                }
            }
        }
        true
    }
    fn search(
        gen: &crate::rootsys::StructureConstants,
        tab: &crate::rootsys::StructureConstants,
        order: &[usize],
        root_imgs: &Vec<Vec<usize>>,
        img: &mut HashMap<usize, (usize, Rat)>,
    ) -> bool {
        if img.len() == gen.dim() {
            return ok_map(gen, tab, img);
        }
        let i = order[img.len()];
        for &j in &root_imgs[i] {
            if img.values().any(|&(jj, _)| jj == j) {
                continue;
            }
            for sign in [rat(1), rat(-1)] {
                img.insert(i, (j, sign));
                if ok_map(gen, tab, img) && search(gen, tab, order, root_imgs, img) {
                    return true;
                }
                img.remove(&i);
            }
        }
        false
    }
    // fix Cartans first (identity on H's), then roots
    let mut img: HashMap<usize, (usize, Rat)> = HashMap::new();
    let mut order = vec![0usize, 1];
    order.extend(non_cartan);
    Ok(search(&gen, &tab, &order, &root_imgs, &mut img))
}

// ---------------------------------------------------------------------------
// ledger evaluation with correction search
// ---------------------------------------------------------------------------

pub struct LedgerRunner<'a> {
    pub gs: &'a GeneratorSet,
    pub alg: Arc<AlgebraCtx>,
    pub budget: u64,
    /// generator names kept out of the correction families (duplicates such as
    /// the printed O5_31, which differs from Q10 only by lower products)
    pub exclude_from_family: Vec<String>,
    eval_cache: HashMap<Vec<(String, u32)>, Element>,
    family_gs: GeneratorSet,
}

impl<'a> LedgerRunner<'a> {
    pub fn new(gs: &'a GeneratorSet, alg: &Arc<AlgebraCtx>, budget: u64) -> Self {
        Self::with_exclusions(gs, alg, budget, Vec::new())
    }

    pub fn with_exclusions(
        gs: &'a GeneratorSet,
        alg: &Arc<AlgebraCtx>,
        budget: u64,
        exclude: Vec<String>,
    ) -> Self {
        let family_gs = GeneratorSet {
            generators: gs
                .generators
                .iter()
                .filter(|g| !exclude.contains(&g.name))
                .cloned()
                .collect(),
        };
        LedgerRunner {
            gs,
            alg: alg.clone(),
            budget,
            exclude_from_family: exclude,
            eval_cache: HashMap::new(),
            family_gs,
        }
    }

    fn residual(&self, entry: &LedgerEntry) -> Result<Element> {
        let names = self.gs.name_map();
        let rhs = match &entry.expr {
            Some(e) => parse_with_names(&self.alg, &names, e)?,
            None => return Err(Error::Parse(format!("{} has no expression", entry.id))),
        };
        match &entry.lhs {
            Some((a, b)) => {
                let ea = &self.gs.get(a).ok_or_else(|| Error::UnresolvedName(a.clone()))?.element;
                let eb = &self.gs.get(b).ok_or_else(|| Error::UnresolvedName(b.clone()))?.element;
                ea.commutator(eb)?.sub(&rhs)
            }
            None => Ok(rhs),
        }
    }

    /// Null-space correction: all relations among generator monomials with the
    /// residual's weight, up to the entry's top degree.
    fn correction(&mut self, weight: &Weight, max_degree: usize) -> Result<Option<String>> {
        let tuples = generator_monomials(&self.family_gs, weight, max_degree);
        if tuples.is_empty() || tuples.len() > 400 {
            return Ok(None);
        }
        let mut cols: Vec<Element> = Vec::with_capacity(tuples.len());
        for t in &tuples {
            if let Some(e) = self.eval_cache.get(t) {
                cols.push(e.clone());
                continue;
            }
            let e = eval_generator_monomial(self.gs, &self.alg, t)?;
            self.eval_cache.insert(t.clone(), e.clone());
            cols.push(e);
        }
        let mut mono_index: BTreeMap<Monomial, u32> = BTreeMap::new();
        for c in &cols {
            for m in c.terms.keys() {
                let next = mono_index.len() as u32;
                mono_index.entry(m.clone()).or_insert(next);
            }
        }
        let mut rows: BTreeMap<u32, BTreeMap<u32, Rat>> = BTreeMap::new();
        for (ci, c) in cols.iter().enumerate() {
            for (m, v) in &c.terms {
                rows.entry(mono_index[m]).or_default().insert(ci as u32, v.clone());
            }
        }
        let ns = nullspace(
            rows.into_values().map(|m| SparseVec(m.into_iter().collect())),
            tuples.len() as u32,
        );
        if ns.is_empty() {
            return Ok(None);
        }
        let fmt = |v: &SparseVec| -> String {
            let mut parts = Vec::new();
            for (c, val) in &v.0 {
                let t = &tuples[*c as usize];
                let mono = t
                    .iter()
                    .map(|(n, e)| if *e == 1 { n.clone() } else { format!("{n}^{e}") })
                    .collect::<Vec<_>>()
                    .join(" ");
                parts.push(format!("({}) {}", crate::scalar::rat_to_string(val), mono));
            }
            parts.join(" + ") + " = 0"
        };
        Ok(Some(ns.iter().map(fmt).collect::<Vec<_>>().join(" ; ")))
    }

    pub fn run_entry(&mut self, entry: &LedgerEntry) -> RelationReport {
        if entry.status == Status::Unparseable || entry.expr.is_none() {
            return RelationReport { id: entry.id.clone(), verdict: RelationVerdict::Unparseable };
        }
        // weight consistency pre-check on the plain product terms
        if let Some(expr) = &entry.expr {
            if let Ok(false) = crate::commutant::weight_consistent(self.gs, expr) {
                return RelationReport {
                    id: entry.id.clone(),
                    verdict: RelationVerdict::Unparseable,
                };
            }
        }
        self.alg.set_budget(Some(self.budget));
        let res = self.residual(entry);
        let verdict = match res {
            Ok(r) if r.is_zero() => RelationVerdict::Verified,
            Ok(r) => {
                // residual is weight homogeneous by construction of the entries
                let w = r.weight();
                let d = match &entry.lhs {
                    Some((a, b)) => {
                        let da = self.gs.get(a).map(|g| g.degree).unwrap_or(0);
                        let db = self.gs.get(b).map(|g| g.degree).unwrap_or(0);
                        (da + db).saturating_sub(1)
                    }
                    None => r.degree().max(entry_degree_bound(self.gs, entry)),
                };
                match w {
                    Ok(w) => match self.correction(&w, d) {
                        Ok(Some(c)) => RelationVerdict::Corrected {
                            residual_terms: r.len(),
                            corrected: Some(c),
                        },
                        Ok(None) => RelationVerdict::Corrected {
                            residual_terms: r.len(),
                            corrected: None,
                        },
                        Err(Error::BudgetExceeded(b)) => RelationVerdict::Capped { at: b },
                        Err(_) => RelationVerdict::Corrected {
                            residual_terms: r.len(),
                            corrected: None,
                        },
                    },
                    Err(_) => RelationVerdict::Corrected { residual_terms: r.len(), corrected: None },
                }
            }
            Err(Error::BudgetExceeded(b)) => RelationVerdict::Capped { at: b },
            Err(_) => RelationVerdict::Unparseable,
        };
        self.alg.set_budget(None);
        RelationReport { id: entry.id.clone(), verdict }
    }
}

fn entry_degree_bound(gs: &GeneratorSet, entry: &LedgerEntry) -> usize {
    // graded degree of the largest product named in the expression; parentheses
    // are treated as spaces, so the estimate can dip slightly low for split
    // groups, and the residual degree is taken as a second lower bound
    let mut best = 0usize;
    if let Some(expr) = &entry.expr {
        let flat: String = expr.replace(['(', ')'], " ");
        for term in flat.split(['+', '-']) {
            let mut d = 0usize;
            for tok in term.split_whitespace() {
                let (name, e) = match tok.split_once('^') {
                    Some((n, e)) => (n, e.parse::<usize>().unwrap_or(1)),
                    None => (tok, 1),
                };
                if let Some(g) = gs.get(name) {
                    d += g.degree * e;
                }
            }
            best = best.max(d);
        }
    }
    best
}

pub fn run_ledger_suite(
    gs: &GeneratorSet,
    alg: &Arc<AlgebraCtx>,
    fixture: &LedgerFixture,
    budget: u64,
    suite_name: &str,
) -> (SuiteReport, Vec<RelationReport>) {
    run_ledger_suite_excluding(gs, alg, fixture, budget, suite_name, Vec::new())
}

pub fn run_ledger_suite_excluding(
    gs: &GeneratorSet,
    alg: &Arc<AlgebraCtx>,
    fixture: &LedgerFixture,
    budget: u64,
    suite_name: &str,
    exclude: Vec<String>,
) -> (SuiteReport, Vec<RelationReport>) {
    let mut rep = SuiteReport::new(suite_name);
    let mut runner = LedgerRunner::with_exclusions(gs, alg, budget, exclude);
    let mut reports = Vec::new();
    for entry in &fixture.entries {
        let r = runner.run_entry(entry);
        let (ok, detail) = match (&r.verdict, &entry.status) {
            (RelationVerdict::Verified, _) => (true, "residual 0".to_string()),
            (RelationVerdict::Corrected { residual_terms, corrected }, _) => (
                corrected.is_some(),
                format!(
                    "residual {} terms; corrected relation {}",
                    residual_terms,
                    if corrected.is_some() { "found" } else { "not found" }
                ),
            ),
            (RelationVerdict::Capped { at }, _) => (false, format!("capped at {at} steps")),
            (RelationVerdict::Unparseable, Status::Unparseable) => {
                (true, "recorded as unparseable".to_string())
            }
            (RelationVerdict::Unparseable, _) => (false, "unexpectedly unparseable".to_string()),
        };
        rep.push(&entry.id, ok, detail);
        reports.push(r);
    }
    (rep, reports)
}

// ---------------------------------------------------------------------------
// rank-two suites
// ---------------------------------------------------------------------------

fn commutes_with_all(gs: &GeneratorSet, alg: &Arc<AlgebraCtx>, subs: &[usize]) -> Result<Vec<(String, bool)>> {
    let mut out = Vec::new();
    for g in &gs.generators {
        let mut ok = true;
        for &s in subs {
            if !Element::generator(alg, s).commutator(&g.element)?.is_zero() {
                ok = false;
            }
        }
        out.push((g.name.clone(), ok));
    }
    Ok(out)
}

pub fn a2_suite() -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("a2");
    let fx = load_generator_fixture(fixtures::A2_FIXTURE)?;
    let (alg, gs) = build_generator_set(&fx)?;
    let subs = subalgebra_indices(&alg, &fx)?;
    for (name, ok) in commutes_with_all(&gs, &alg, &subs)? {
        rep.push(&format!("commutes_{name}"), ok, "");
    }
    // I2, I3 are central
    for name in ["I2", "I3"] {
        let el = &gs.get(name).unwrap().element;
        let ok = (0..alg.dim())
            .all(|i| Element::generator(&alg, i).commutator(el).map(|r| r.is_zero()).unwrap_or(false));
        rep.push(&format!("central_{name}"), ok, "");
    }
    // stated weights
    for (name, w) in [("B1", vec![1, 1]), ("B2", vec![1, 1]), ("C1", vec![3, 0]), ("C2", vec![0, 3])] {
        let got = gs.get(name).unwrap().weight.clone();
        rep.push(&format!("weight_{name}"), got.0 == w, format!("{got}"));
    }
    // ledger
    let lf = load_ledger(fixtures::A2_LEDGER)?;
    let (lrep, _) = run_ledger_suite(&gs, &alg, &lf, 200_000_000, "a2_ledger");
    for c in lrep.checks {
        rep.checks.push(c);
    }
    // block solving reproduces the spans
    for (name, d, w) in [
        ("B1", 1usize, vec![1i64, 1]),
        ("B2", 2, vec![1, 1]),
        ("C1", 3, vec![3, 0]),
        ("C2", 3, vec![0, 3]),
        ("I2", 2, vec![0, 0]),
        ("I3", 3, vec![0, 0]),
    ] {
        let block = solve_block(&alg, &subs, d, &Weight(w))?;
        let el = &gs.get(name).unwrap().element;
        rep.push(
            &format!("span_{name}"),
            block.contains(el),
            format!("block dim {}", block.dim()),
        );
    }
    // abelian subset {B1, B2, I2, I3} and the bound xi = 4
    let xi = crate::symalg::abelian_bound(&alg.sc, &alg.sc.nilradical_indices, 1)?;
    let set = ["B1", "B2", "I2", "I3"];
    let mut pairwise = true;
    for i in 0..set.len() {
        for j in (i + 1)..set.len() {
            let a = &gs.get(set[i]).unwrap().element;
            let b = &gs.get(set[j]).unwrap().element;
            if !a.commutator(b)?.is_zero() {
                pairwise = false;
            }
        }
    }
    rep.push("abelian_bound", xi == 4 && pairwise, format!("xi = {xi}, subset {{B1,B2,I2,I3}}"));
    Ok(rep)
}

pub fn b2_suite() -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("b2");
    let fx = load_generator_fixture(fixtures::B2_FIXTURE)?;
    let (alg, gs) = build_generator_set(&fx)?;
    let nil = alg.sc.nilradical_indices.clone();
    for (name, ok) in commutes_with_all(&gs, &alg, &nil)? {
        rep.push(&format!("commutes_{name}"), ok, "");
    }
    // the P2 exponent oracle: the printed E3^3 variant must fail
    let p2_fx = fx.generators.iter().find(|g| g.name == "P2").unwrap();
    let printed = crate::parse::parse_element(&alg, p2_fx.printed.as_ref().unwrap())?;
    let e1 = alg.sc.index_of("E1").unwrap();
    let printed_fails = !Element::generator(&alg, e1).commutator(&printed)?.is_zero();
    rep.push("p2_exponent_oracle", printed_fails, "printed E3^3 fails, stored E3^2 commutes");
    let lf = load_ledger(fixtures::B2_LEDGER)?;
    let (lrep, _) = run_ledger_suite(&gs, &alg, &lf, 400_000_000, "b2_ledger");
    for c in lrep.checks {
        rep.checks.push(c);
    }
    // abelian bound xi = 5 certified by {P1, P2, P3, C2, C4}
    let xi = crate::symalg::abelian_bound(&alg.sc, &nil, 2)?;
    let set = ["P1", "P2", "P3", "C2", "C4"];
    let mut pairwise = true;
    for i in 0..set.len() {
        for j in (i + 1)..set.len() {
            let a = &gs.get(set[i]).unwrap().element;
            let b = &gs.get(set[j]).unwrap().element;
            if !a.commutator(b)?.is_zero() {
                pairwise = false;
            }
        }
    }
    rep.push("abelian_bound", xi == 5 && pairwise, format!("xi = {xi}, subset {{P1,P2,P3,C2,C4}}"));
    Ok(rep)
}

pub fn sl2sl3_suite() -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("sl2sl3");
    let fx = load_generator_fixture(fixtures::SL2SL3_FIXTURE)?;
    let (alg, gs) = build_generator_set(&fx)?;
    let subs = subalgebra_indices(&alg, &fx)?;
    for (name, ok) in commutes_with_all(&gs, &alg, &subs)? {
        rep.push(&format!("commutes_{name}"), ok, "");
    }
    // printed P5/P6 variants fail the oracle
    for name in ["P5", "P6"] {
        let g = fx.generators.iter().find(|g| g.name == name).unwrap();
        let printed = crate::parse::parse_element(&alg, g.printed.as_ref().unwrap())?;
        let mut fails = false;
        for &s in &subs {
            if !Element::generator(&alg, s).commutator(&printed)?.is_zero() {
                fails = true;
            }
        }
        rep.push(&format!("printed_{name}_fails_oracle"), fails, "");
    }
    let lf = load_ledger(fixtures::SL2SL3_LEDGER)?;
    let (lrep, _) = run_ledger_suite(&gs, &alg, &lf, 400_000_000, "sl2sl3_ledger");
    for c in lrep.checks {
        rep.checks.push(c);
    }
    // chain_commutant recovers the span at degree <= 3: 11 = 6 products + 5 new
    let mut dim_total = 0;
    let mut all_in = true;
    let mut weights: Vec<Weight> = gs.generators.iter().map(|g| g.weight.clone()).collect();
    weights.push(Weight(vec![0, 0]));
    weights.sort();
    weights.dedup();
    for w in &weights {
        let block = chain_commutant(&alg, &subs, 3, w)?;
        dim_total += block.dim();
        for g in &gs.generators {
            if g.weight == *w && !block.contains(&g.element) {
                all_in = false;
            }
        }
    }
    rep.push(
        "chain_span_deg3",
        dim_total == 11 && all_in,
        format!("kernel dimension {} over the generator weights (expected 11)", dim_total),
    );
    Ok(rep)
}

// ---------------------------------------------------------------------------
// G2 derived generator set
// ---------------------------------------------------------------------------

fn scaled(e: Element, num: i64, den: i64) -> Element {
    e.scale(&ratio(num, den))
}

/// Evaluate a commutative polynomial at an integer point.
fn sym_eval(p: &SymElement, point: &[Rat]) -> Rat {
    let mut acc = Rat::zero();
    for (m, c) in &p.terms {
        let mut t = c.clone();
        for (i, &e) in m.0.iter().enumerate() {
            for _ in 0..e {
                t *= point[i].clone();
            }
        }
        acc += t;
    }
    acc
}

/// A rational point on the quadric {sym(q) = 0}: shoot a line from a known
/// zero (a coordinate axis annihilating every term) in a random direction and
/// take the second intersection, which is rational.
fn quadric_point(q_sym: &SymElement, dim: usize, axis: usize, rng: &mut ChaCha8Rng) -> Option<Vec<Rat>> {
    let mut base = vec![Rat::zero(); dim];
    base[axis] = rat(1);
    if !sym_eval(q_sym, &base).is_zero() {
        return None;
    }
    let dir: Vec<Rat> = (0..dim).map(|_| rat(rng.gen_range(-9..=9i64))).collect();
    // q(base + t dir) = a t^2 + b t (no constant term since q(base) = 0)
    let at = |t: &Rat| -> Vec<Rat> {
        base.iter().zip(&dir).map(|(b, d)| b.clone() + t.clone() * d).collect()
    };
    let q1v = sym_eval(q_sym, &at(&rat(1)));
    let qm1 = sym_eval(q_sym, &at(&rat(-1)));
    let a = (q1v.clone() + qm1.clone()) / rat(2);
    let b = (q1v - qm1) / rat(2);
    if a.is_zero() {
        return None;
    }
    let t_star = -b / a;
    if t_star.is_zero() {
        return None;
    }
    Some(at(&t_star))
}

/// Solve target_sym = sum_i c_i specials_sym_i modulo the principal ideal of
/// the quadratic symbol, by exact evaluation at rational points of its zero
/// quadric. The symbols must all be homogeneous of one degree. Returns None
/// when the evaluations stay degenerate.
fn layer_cofactors_on_quadric(
    dim: usize,
    target_sym: &SymElement,
    specials_sym: &[SymElement],
    q_sym: &SymElement,
) -> Option<Vec<Rat>> {
    let n = specials_sym.len();
    if n == 0 {
        return Some(Vec::new());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(1234);
    let axis = (0..dim).find(|&i| {
        let mut base = vec![Rat::zero(); dim];
        base[i] = rat(1);
        sym_eval(q_sym, &base).is_zero()
    })?;
    let mut ech = crate::linalg::Echelon::new();
    let mut rows = 0;
    while rows < 4 * (n + 4) {
        rows += 1;
        if let Some(p) = quadric_point(q_sym, dim, axis, &mut rng) {
            let mut v: Vec<(u32, Rat)> = specials_sym
                .iter()
                .enumerate()
                .filter_map(|(i, s)| {
                    let x = sym_eval(s, &p);
                    if x.is_zero() {
                        None
                    } else {
                        Some((i as u32, x))
                    }
                })
                .collect();
            let b = sym_eval(target_sym, &p);
            if !b.is_zero() {
                v.push((n as u32, b));
            }
            ech.insert(SparseVec(v));
            if ech.rank() == n && !ech.pivot_cols().contains(&(n as u32)) {
                break;
            }
        }
    }
    if ech.rank() != n || ech.pivot_cols().contains(&(n as u32)) {
        return None;
    }
    let rref = ech.into_rref();
    let mut out = vec![Rat::zero(); n];
    for (pc, row) in rref {
        if let Some(v) = row.get(n as u32) {
            out[pc as usize] = v.clone();
        }
    }
    Some(out)
}

/// Decompose target = sum_i c_i specials_i + divisor * T where the divisor has
/// a quadratic weight-homogeneous symbol (Q2 or Q3 here). Works layer by
/// layer: at each degree the special coefficients are pinned by evaluation on
/// the divisor quadric, the remainder layer divides exactly. Returns (c, T).
fn layered_split(
    target: &Element,
    specials: &[Element],
    divisor: &Element,
) -> Result<Option<(Vec<Rat>, Element)>> {
    let alg = &target.alg;
    let dim = alg.dim();
    let q_sym = divisor.symbol();
    let mut rem = target.clone();
    let mut coeffs = vec![Rat::zero(); specials.len()];
    let mut quot = Element::zero(alg);
    let mut guard = 0;
    while !rem.is_zero() {
        guard += 1;
        if guard > 64 {
            return Ok(None);
        }
        let d = rem.degree();
        let layer = |e: &Element| -> SymElement {
            SymElement {
                terms: e
                    .terms
                    .iter()
                    .filter(|(m, _)| m.degree() == d)
                    .map(|(m, c)| (m.clone(), c.clone()))
                    .collect(),
            }
        };
        let idx: Vec<usize> = specials
            .iter()
            .enumerate()
            .filter(|(_, s)| s.degree() == d)
            .map(|(i, _)| i)
            .collect();
        let tops: Vec<SymElement> = idx.iter().map(|&i| layer(&specials[i])).collect();
        let c = match layer_cofactors_on_quadric(dim, &layer(&rem), &tops, &q_sym) {
            Some(c) => c,
            None => return Ok(None),
        };
        for (&i, ci) in idx.iter().zip(&c) {
            rem = rem.sub(&specials[i].scale(ci))?;
            coeffs[i] = ci.clone();
        }
        // the layer is now divisible by the divisor symbol
        let t_layer = match layer(&rem).divide_exact(&q_sym) {
            Some(t) => t,
            None => return Ok(None),
        };
        let t_lift = t_layer.lift(alg);
        quot = quot.add(&t_lift)?;
        rem = rem.sub(&divisor.mul(&t_lift)?)?;
    }
    Ok(Some((coeffs, quot)))
}

/// Build the full G2 generator set Q1..Q17 (plus the printed O5_31), deriving
/// Q8..Q17 through the commutator/division chain. Heavy steps are cached.
pub fn g2_generator_set() -> Result<(Arc<AlgebraCtx>, GeneratorSet)> {
    let fx = load_generator_fixture(fixtures::G2_GENERATORS_FIXTURE)?;
    let (alg, mut gs) = build_generator_set(&fx)?;
    let x13 = alg.sc.index_of("X13").unwrap();
    let q = |gs: &GeneratorSet, n: &str| gs.get(n).unwrap().element.clone();

    let q1 = q(&gs, "Q1");
    let q2 = q(&gs, "Q2");
    let q3 = q(&gs, "Q3");
    let q4 = q(&gs, "Q4");
    let q5 = q(&gs, "Q5");
    let q6 = q(&gs, "Q6");
    let q7 = q(&gs, "Q7");

    // Q9 = [Q5,Q7] / (27 Q1)
    let q9 = memo_element(&alg, "g2/Q9 = [Q5,Q7]/(27 X13)", || {
        Ok(scaled(left_divide(&q5.commutator(&q7)?, x13, &alg)?, 1, 27))
    })?;
    // Q10 = [Q4,Q7] / (-54 Q1)
    let q10 = memo_element(&alg, "g2/Q10 = [Q4,Q7]/(-54 X13)", || {
        Ok(scaled(left_divide(&q4.commutator(&q7)?, x13, &alg)?, -1, 54))
    })?;
    // Q11 = [Q5,Q6] / 27
    let q11 = memo_element(&alg, "g2/Q11 = [Q5,Q6]/27", || {
        Ok(scaled(q5.commutator(&q6)?, 1, 27))
    })?;
    // Q12 = [Q6,Q7] / (12 Q1)
    let q12 = memo_element(&alg, "g2/Q12 = [Q6,Q7]/(12 X13)", || {
        Ok(scaled(left_divide(&q6.commutator(&q7)?, x13, &alg)?, 1, 12))
    })?;
    // Q8 from [Q5,Q9] = Q1 Q2 Q3^2 + beta Q1 Q5^2 - 6 Q2 Q8
    let q8 = memo_element(&alg, "g2/Q8 from kla2b, Q1Q2Q3^2 coefficient fixed to 1", || {
        let t = q5
            .commutator(&q9)?
            .sub(&q1.mul(&q2)?.mul(&q3)?.mul(&q3)?)?;
        let q1q5sq = q1.mul(&q5)?.mul(&q5)?;
        let (_beta, quot) = layered_split(&t, &[q1q5sq], &q2)?
            .ok_or_else(|| Error::NotDivisible("kla2b split failed".into()))?;
        Ok(scaled(quot, -1, 6))
    })?;
    // Q13 = C6: the degree-6 central element beyond the powers of Q3
    let q13 = memo_element(&alg, "g2/Q13 = C6 from the degree-6 centralizer", || {
        let block = casimir_search(&alg, 6)?;
        let one = Element::one(&alg);
        let q3sq = q3.mul(&q3)?;
        let q3cu = q3sq.mul(&q3)?;
        quotient_representative(&block, &[one, q3.clone(), q3sq, q3cu])
            .ok_or_else(|| Error::Parse("no new degree-6 central element".into()))
    })?;
    // Q14 = [Q5,Q8] / 6
    let q14 = memo_element(&alg, "g2/Q14 = [Q5,Q8]/6", || {
        Ok(scaled(q5.commutator(&q8)?, 1, 6))
    })?;
    // Q15: canonical new element of the degree-8 weight-(0,2) block
    let q15 = memo_element(&alg, "g2/Q15 = block(8,(0,2)) mod lower products", || {
        let block = solve_block(&alg, &alg.sc.simple_root_indices.clone(), 8, &Weight(vec![0, 2]))?;
        let q1sq = q1.mul(&q1)?;
        let mut known = vec![
            q1sq.clone(),
            q1sq.mul(&q3)?,
            q1sq.mul(&q3)?.mul(&q3)?,
            q1sq.mul(&q3)?.mul(&q3)?.mul(&q3)?,
            q1.mul(&q8)?,
            q1.mul(&q3)?.mul(&q8)?,
            q7.clone(),
            q3.mul(&q7)?,
            q3.mul(&q3)?.mul(&q7)?,
        ];
        known.retain(|e| e.degree() <= 8);
        quotient_representative(&block, &known)
            .ok_or_else(|| Error::Parse("no new element in block(8,(0,2))".into()))
    })?;
    // Q16 from [Q8,Q14] = sum of Q3-free weight-(1,2) products + Q3 T,
    // Q16 = -9/2 T. The special coefficients are pinned layer by layer through
    // evaluation on the quadric of sym(Q3); the remainder divides exactly.
    let q16 = memo_element(&alg, "g2/Q16 from kla4 remainder divided by Q3", || {
        let r = q8.commutator(&q14)?;
        let specials = vec![
            q1.mul(&q1)?.mul(&q5)?,             // deg 5
            q1.mul(&q9)?,                       // deg 6
            q5.mul(&q7)?,                       // deg 7
            q1.mul(&q14)?,                      // deg 8
            q1.mul(&q5)?.mul(&q8)?,             // deg 9
            q8.mul(&q9)?,                       // deg 10
            q1.mul(&q1)?.mul(&q5)?.mul(&q13)?,  // deg 11
            q5.mul(&q15)?,                      // deg 11
        ];
        let (_c, t) = layered_split(&r, &specials, &q3)?
            .ok_or_else(|| Error::NotDivisible("kla4 split failed".into()))?;
        Ok(scaled(t, -9, 2))
    })?;
    // Q17 = [Q8,Q15] / 4
    let q17 = memo_element(&alg, "g2/Q17 = [Q8,Q15]/4", || {
        Ok(scaled(q8.commutator(&q15)?, 1, 4))
    })?;

    gs.insert("Q8", q8)?;
    gs.insert("Q9", q9)?;
    gs.insert("Q10", q10)?;
    gs.insert("Q11", q11)?;
    gs.insert("Q12", q12)?;
    gs.insert("Q13", q13)?;
    gs.insert("Q14", q14)?;
    gs.insert("Q15", q15)?;
    gs.insert("Q16", q16)?;
    gs.insert("Q17", q17)?;
    Ok((alg, gs))
}

pub fn g2_generator_suite() -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("g2");
    let (alg, gs) = g2_generator_set()?;
    let simple = alg.sc.simple_root_indices.clone();
    for (name, ok) in commutes_with_all(&gs, &alg, &simple)? {
        rep.push(&format!("commutes_{name}"), ok, "");
    }
    // degrees and weights of the derived generators
    let stated = [
        ("Q8", 5usize, vec![0i64, 1]),
        ("Q9", 5, vec![1, 1]),
        ("Q10", 5, vec![3, 1]),
        ("Q11", 6, vec![3, 0]),
        ("Q12", 6, vec![2, 1]),
        ("Q13", 6, vec![0, 0]),
        ("Q14", 7, vec![1, 1]),
        ("Q15", 8, vec![0, 2]),
        ("Q16", 9, vec![1, 2]),
        ("Q17", 12, vec![0, 3]),
    ];
    for (name, d, w) in stated {
        let g = gs.get(name).unwrap();
        rep.push(
            &format!("profile_{name}"),
            g.degree == d && g.weight.0 == w,
            format!("degree {} weight {}", g.degree, g.weight),
        );
    }
    // kla1 with the printed O5_31: residual is exactly -9 Q1^2 Q4
    {
        let q4 = &gs.get("Q4").unwrap().element;
        let q7 = &gs.get("Q7").unwrap().element;
        let q1 = &gs.get("Q1").unwrap().element;
        let o531 = &gs.get("O5_31").unwrap().element;
        let lhs = q4.commutator(q7)?;
        let rhs = q1.mul(o531)?.scale(&rat(-54));
        let resid = lhs.sub(&rhs)?;
        let expected = q1.mul(q1)?.mul(&gs.get("Q4").unwrap().element)?.scale(&rat(-9));
        rep.push(
            "kla1_corrected",
            resid.sub(&expected)?.is_zero(),
            "[Q4,Q7] + 54 Q1 O5_31 = -9 Q1^2 Q4 exactly",
        );
    }
    // Q1..Q5 pairwise commute; adding Q13 = C6 gives the abelian bound xi = 6
    {
        let set = ["Q1", "Q2", "Q3", "Q4", "Q5", "Q13"];
        let mut pairwise = true;
        for i in 0..set.len() {
            for j in (i + 1)..set.len() {
                let a = &gs.get(set[i]).unwrap().element;
                let b = &gs.get(set[j]).unwrap().element;
                if !a.commutator(b)?.is_zero() {
                    pairwise = false;
                }
            }
        }
        let xi = crate::symalg::abelian_bound(&alg.sc, &alg.sc.nilradical_indices, 2)?;
        rep.push(
            "abelian_bound",
            pairwise && xi == 6,
            format!("xi = {xi}, subset {{Q1..Q5, C6}} pairwise commutes"),
        );
    }
    // C6 really is central
    {
        let q13 = &gs.get("Q13").unwrap().element;
        let ok = (0..alg.dim())
            .all(|i| Element::generator(&alg, i).commutator(q13).map(|r| r.is_zero()).unwrap_or(false));
        rep.push("c6_central", ok, "");
    }
    Ok(rep)
}

pub fn g2_ledger_reports(budget: u64) -> Result<(SuiteReport, Vec<RelationReport>)> {
    let (alg, gs) = g2_generator_set()?;
    let lf = load_ledger(fixtures::G2_LEDGER)?;
    Ok(run_ledger_suite_excluding(&gs, &alg, &lf, budget, "g2_ledger", vec!["O5_31".into()]))
}

pub fn g2_constraint_reports(budget: u64) -> Result<(SuiteReport, Vec<RelationReport>)> {
    let (alg, gs) = g2_generator_set()?;
    let lf = load_ledger(fixtures::G2_CONSTRAINTS)?;
    Ok(run_ledger_suite_excluding(&gs, &alg, &lf, budget, "g2_constraints", vec!["O5_31".into()]))
}

// ---------------------------------------------------------------------------
// decomposition suite
// ---------------------------------------------------------------------------

pub fn decomp_suite(p_max: usize) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("decomp");
    let fx = fixtures::load_g2_decomp()?;
    let report = decomp::verify_dek1(&fx.constraints, p_max);
    for layer in &report.layers {
        let mut ok = layer.holds;
        let mut detail = format!(
            "terms {} distinct {} dim {}",
            layer.total_terms, layer.distinct, layer.dimension_sum
        );
        if layer.p <= fx.expected_totals.len() {
            ok &= layer.total_terms == fx.expected_totals[layer.p - 1]
                && layer.distinct == fx.expected_distinct[layer.p - 1];
        }
        if let Some((_, ms)) = fx.expected_multisets.iter().find(|(p, _)| *p == layer.p) {
            let got: Vec<(i64, i64, usize)> = layer.labels.clone();
            let mut want = ms.clone();
            want.sort();
            let mut g = got.clone();
            g.sort();
            if g != want {
                ok = false;
                detail.push_str("; multiset mismatch");
            }
        }
        rep.push(&format!("p{}", layer.p), ok, detail);
    }
    // the two dimension formulas agree
    let cm = CartanMatrix::standard(SeriesTag::G2, 2)?;
    let (rs, _) = crate::rootsys::from_cartan(&cm)?;
    let mut agree = true;
    for l in 0..=10i64 {
        for m in 0..=10i64 {
            if weyl_dim_general(&rs, &[l, m])? != weyl_dim_g2(l, m) {
                agree = false;
            }
        }
    }
    rep.push("weyl_dim_agreement", agree, "0 <= lambda, mu <= 10");
    // the character oracle reproduces the same counts independently
    let weights: Vec<Vec<i64>> = (0..14)
        .map(|i| {
            let sc = builtin_algebra("g2").unwrap();
            sc.generator_weight(i).map(|w| w.0).unwrap_or_else(|_| vec![0, 0])
        })
        .collect();
    let mut oracle_ok = true;
    for p in 1..=p_max.min(16) {
        let dec = decomp::symp_adjoint_decomposition(&rs, &weights, p);
        let total: BigInt = dec.values().sum();
        let distinct = dec.len();
        if total != BigInt::from(fx.expected_totals[p - 1] as i64)
            || distinct != fx.expected_distinct[p - 1]
        {
            oracle_ok = false;
        }
    }
    rep.push("character_oracle", oracle_ok, "Sym^p(adjoint) multiplicities match the sequences");
    Ok(rep)
}

// ---------------------------------------------------------------------------
// analytic bounds suite
// ---------------------------------------------------------------------------

pub fn d0_suite(seed: u64) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("d0");
    for (tag, want) in [("a2", 5usize), ("b2", 6), ("g2", 8), ("d2", 4)] {
        let sc = builtin_algebra(tag)?;
        let vfs = build_system(&sc, &sc.nilradical_indices)?;
        let r = generic_rank(&vfs, seed);
        rep.push(
            &format!("rank_{tag}"),
            r.independent_solutions == want,
            format!("n - r' = {}", r.independent_solutions),
        );
    }
    // the closed form against the printed table, A-D up to rank 8 + exceptionals
    let mut ok = true;
    for l in 1..=8usize {
        ok &= d0_formula(SeriesTag::A, l)? == l * (l + 3) / 2;
        if l >= 2 {
            ok &= d0_formula(SeriesTag::B, l)? == l * l + l;
            ok &= d0_formula(SeriesTag::C, l)? == l * l + l;
            ok &= d0_formula(SeriesTag::D, l)? == l * l;
        }
    }
    ok &= d0_formula(SeriesTag::G2, 2)? == 8
        && d0_formula(SeriesTag::F4, 4)? == 28
        && d0_formula(SeriesTag::E6, 6)? == 42
        && d0_formula(SeriesTag::E7, 7)? == 70
        && d0_formula(SeriesTag::E8, 8)? == 128;
    rep.push("d0_formula_table", ok, "");
    Ok(rep)
}

pub fn proposition_suite(seed: u64) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("proposition");
    let mut cases: Vec<(SeriesTag, usize)> = Vec::new();
    for l in 2..=6 {
        cases.push((SeriesTag::A, l));
        cases.push((SeriesTag::B, l));
    }
    for l in 3..=6 {
        cases.push((SeriesTag::C, l));
    }
    for l in 4..=6 {
        cases.push((SeriesTag::D, l));
    }
    cases.push((SeriesTag::G2, 2));
    for (series, l) in cases {
        let cm = CartanMatrix::standard(series, l)?;
        let (_, sc) = crate::rootsys::from_cartan(&cm)?;
        let got = invariant_count(&sc, &sc.nilradical_indices, 5, seed)?;
        let want = proposition_table(series, l)?;
        rep.push(
            &format!("{series:?}{l}"),
            got.invariants == want,
            format!("N = {} (expected {})", got.invariants, want),
        );
    }
    Ok(rep)
}

// ---------------------------------------------------------------------------
// randomized property suite
// ---------------------------------------------------------------------------

fn random_element(alg: &Arc<AlgebraCtx>, rng: &mut ChaCha8Rng, max_deg: usize, terms: usize) -> Element {
    let dim = alg.dim();
    let mut e = Element::zero(alg);
    for _ in 0..terms {
        let d = rng.gen_range(0..=max_deg);
        let mut m = Monomial::unit(dim);
        for _ in 0..d {
            let g = rng.gen_range(0..dim);
            m.0[g] += 1;
        }
        let c = rat(rng.gen_range(-5..=5i64));
        if !c.is_zero() {
            e = e.add(&Element::from_monomial(alg, m, c)).unwrap();
        }
    }
    e
}

pub fn property_suite(instances: usize, seed: u64) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("properties");
    for tag in ["d2", "a2", "b2", "g2"] {
        let alg = AlgebraCtx::new(builtin_algebra(tag)?);
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ tag.len() as u64);
        let mut assoc = true;
        let mut leibniz = true;
        let mut filtration = true;
        let mut weight_add = true;
        let mut symbol = true;
        for _ in 0..instances {
            let p = random_element(&alg, &mut rng, 2, 2);
            let q = random_element(&alg, &mut rng, 2, 2);
            let r = random_element(&alg, &mut rng, 2, 2);
            // associativity
            let ab_c = p.mul(&q)?.mul(&r)?;
            let a_bc = p.mul(&q.mul(&r)?)?;
            if ab_c.sub(&a_bc)?.is_zero() == false {
                assoc = false;
            }
            // filtration degrees
            if p.mul(&q)?.degree() > p.degree() + q.degree() {
                filtration = false;
            }
            let comm = p.commutator(&q)?;
            if !comm.is_zero()
                && p.degree() + q.degree() > 0
                && comm.degree() > p.degree() + q.degree() - 1
            {
                filtration = false;
            }
            // Leibniz for a random generator
            let g = rng.gen_range(0..alg.dim());
            let x = Element::generator(&alg, g);
            let lhs = x.commutator(&p.mul(&q)?)?;
            let rhs = x.commutator(&p)?.mul(&q)?.add(&p.mul(&x.commutator(&q)?)?)?;
            if !lhs.sub(&rhs)?.is_zero() {
                leibniz = false;
            }
            // weight additivity on weight-homogeneous monomials
            let m1 = random_element(&alg, &mut rng, 2, 1);
            let m2 = random_element(&alg, &mut rng, 2, 1);
            if let (Ok(w1), Ok(w2)) = (m1.weight(), m2.weight()) {
                let prod = m1.mul(&m2)?;
                if !prod.is_zero() {
                    match prod.weight() {
                        Ok(w) if w == w1.add(&w2) => {}
                        _ => weight_add = false,
                    }
                }
            }
            // symmetrization symbol: the top part of the symmetrization is the input
            let mono = random_element(&alg, &mut rng, 3, 1);
            if let Some((m, _)) = mono.terms.iter().next() {
                let s = SymElement::from_monomial(m.clone(), rat(1));
                let lam = crate::uea::symmetrize(&alg, &s)?;
                if lam.symbol().terms != s.terms {
                    symbol = false;
                }
            }
        }
        rep.push(&format!("assoc_{tag}"), assoc, format!("{instances} instances"));
        rep.push(&format!("leibniz_{tag}"), leibniz, "");
        rep.push(&format!("filtration_{tag}"), filtration, "");
        rep.push(&format!("weight_additivity_{tag}"), weight_add, "");
        rep.push(&format!("symmetrize_symbol_{tag}"), symbol, "");
    }
    Ok(rep)
}
