//! Exhaustive verification runs with structured, deterministic reports.
//!
//! Each `verify_*` function returns a [`VerificationReport`]. Reports hold no
//! timings, so equal configurations produce byte-identical JSON; wall-clock
//! data goes to the run manifest instead. Caps are refusals: work beyond a
//! cap is skipped and the report says `partial`.

use std::collections::{BTreeMap, BTreeSet};
use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::connectivity::is_3connected;
use crate::constructions::{
    all_parallel_connection_trees, catalog, principal_extension, uniform, whirl_like,
    whirl_like_plus, CatalogId,
};
use crate::corpus::{
    all_matroids, linear_spaces, simple_rank3, ALL_MATROIDS_CAP, LINEAR_SPACE_CAP,
};
use crate::error::{Error, Result};
use crate::flats::flat_lattice;
use crate::io::to_text;
use crate::iso::{are_isomorphic, canonical_form, CanonicalForm};
use crate::matroid::Matroid;
use crate::minors::{
    find_catalog_minor, find_minor_among, has_minor, has_uniform_line_minor, prop31_hypothesis,
    prop32_hypothesis,
};
use crate::oriented::{
    chirotope_from_matrix, oriented_contract, oriented_delete, ramsey_scan, Chirotope, IntMatrix,
};
use crate::positroid::{
    enumerate_positroids_with_stats, is_positroid, PositroidFilter, ENUMERATION_CAP,
};
use crate::subset::Subset;

pub const SCHEMA_VERSION: u32 = 1;

/// Environment variable read for the default worker count.
pub const THREADS_ENV: &str = "POSITROID_LAB_THREADS";

/// Name of the seeded generator used for sampled checks.
pub const GENERATOR: &str = "ChaCha8Rng::seed_from_u64 (rand_chacha 0.3)";

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum ClaimId {
    ThmMain,
    ExcludedMinimality,
    #[serde(rename = "PROP_3_1")]
    Prop31,
    #[serde(rename = "PROP_3_2")]
    Prop32,
    #[serde(rename = "LEMMA_4_3")]
    Lemma43,
    #[serde(rename = "CONJ_6_1_R3")]
    Conj61R3,
    OracleAgreement,
    MinorTestEquivalence,
    WhirlFamily,
    #[serde(rename = "RAMSEY_L1")]
    RamseyL1,
}

impl ClaimId {
    pub fn as_str(self) -> &'static str {
        match self {
            ClaimId::ThmMain => "THM_MAIN",
            ClaimId::ExcludedMinimality => "EXCLUDED_MINIMALITY",
            ClaimId::Prop31 => "PROP_3_1",
            ClaimId::Prop32 => "PROP_3_2",
            ClaimId::Lemma43 => "LEMMA_4_3",
            ClaimId::Conj61R3 => "CONJ_6_1_R3",
            ClaimId::OracleAgreement => "ORACLE_AGREEMENT",
            ClaimId::MinorTestEquivalence => "MINOR_TEST_EQUIVALENCE",
            ClaimId::WhirlFamily => "WHIRL_FAMILY",
            ClaimId::RamseyL1 => "RAMSEY_L1",
        }
    }
}

impl std::fmt::Display for ClaimId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Outcome {
    Verified,
    Counterexample,
    Partial,
}

/// A matroid attached to a report, in the plain-text format.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub label: String,
    pub matroid: String,
}

impl Witness {
    fn new(label: impl Into<String>, m: &Matroid) -> Self {
        Witness {
            label: label.into(),
            matroid: to_text(m),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerificationReport {
    pub claim_id: ClaimId,
    pub params: BTreeMap<String, Value>,
    pub outcome: Outcome,
    pub counts: BTreeMap<String, u64>,
    pub witnesses: Vec<Witness>,
    pub counterexamples: Vec<Witness>,
    pub notes: Vec<String>,
    #[serde(skip)]
    mark_partial: bool,
}

impl VerificationReport {
    fn new(claim_id: ClaimId) -> Self {
        VerificationReport {
            claim_id,
            params: BTreeMap::new(),
            outcome: Outcome::Verified,
            counts: BTreeMap::new(),
            witnesses: Vec::new(),
            counterexamples: Vec::new(),
            notes: Vec::new(),
            mark_partial: false,
        }
    }

    fn param(&mut self, key: &str, value: Value) {
        self.params.insert(key.into(), value);
    }

    fn count(&mut self, key: impl Into<String>, value: u64) {
        *self.counts.entry(key.into()).or_insert(0) += value;
    }

    fn fail(&mut self, label: impl Into<String>, m: &Matroid) {
        self.counterexamples.push(Witness::new(label, m));
    }

    fn partial(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
        self.mark_partial = true;
    }

    /// Settle the outcome: any counterexample wins, then any skipped scope.
    fn finish(mut self) -> Self {
        self.outcome = if !self.counterexamples.is_empty() {
            Outcome::Counterexample
        } else if self.mark_partial {
            Outcome::Partial
        } else {
            Outcome::Verified
        };
        self
    }
}

/// Positroids on exactly `n` elements passing `filter`, or `None` beyond the cap.
fn positroids(n: usize, filter: &PositroidFilter) -> Result<Option<(Vec<Matroid>, u64)>> {
    if n > ENUMERATION_CAP {
        return Ok(None);
    }
    let (found, stats) = enumerate_positroids_with_stats(n, filter)?;
    Ok(Some((found, stats.decorated_permutations)))
}

fn line_free_filter(r: usize, l: usize) -> PositroidFilter {
    PositroidFilter {
        rank: Some(r),
        simple: true,
        no_uniform_line_minor: Some(l + 2),
        ..Default::default()
    }
}

/// Size bound and equality case for simple rank-`r` positroids without a
/// `U_{2,l+2}` minor.
pub fn verify_theorem_main(r: usize, l: usize) -> Result<VerificationReport> {
    if r < 2 || l < 1 {
        return Err(Error::InvalidParameters(format!(
            "need r >= 2 and l >= 1, got r={r}, l={l}"
        )));
    }
    let mut rep = VerificationReport::new(ClaimId::ThmMain);
    rep.param("r", json!(r));
    rep.param("l", json!(l));
    let bound = l * (r - 1) + 1;
    rep.param("bound", json!(bound));
    let filter = line_free_filter(r, l);

    match positroids(bound + 1, &filter)? {
        Some((over, visited)) => {
            rep.count("decorated_permutations_above_bound", visited);
            rep.count("qualifying_above_bound", over.len() as u64);
            for m in &over {
                rep.fail(
                    format!(
                        "simple rank-{r} positroid on {} elements without U(2,{})",
                        m.n(),
                        l + 2
                    ),
                    m,
                );
            }
        }
        None => rep.partial(format!(
            "enumeration at n={} exceeds the cap of {ENUMERATION_CAP}; size bound not checked",
            bound + 1
        )),
    }

    match positroids(bound, &filter)? {
        Some((extremal, visited)) => {
            let trees = all_parallel_connection_trees(r, l)?;
            let tree_forms: BTreeSet<CanonicalForm> = trees.iter().map(canonical_form).collect();
            let found_forms: BTreeSet<CanonicalForm> = extremal.iter().map(canonical_form).collect();
            rep.count("decorated_permutations_at_bound", visited);
            rep.count("extremal_classes", extremal.len() as u64);
            rep.count("tree_classes", trees.len() as u64);
            for m in &extremal {
                if !tree_forms.contains(&canonical_form(m)) {
                    rep.fail("extremal positroid that is not a parallel-connection tree", m);
                }
            }
            for t in &trees {
                if !found_forms.contains(&canonical_form(t)) {
                    rep.fail("parallel-connection tree missing from the extremal positroids", t);
                }
            }
            if let Some(first) = extremal.first() {
                rep.witnesses.push(Witness::new("extremal example", first));
            }
        }
        None => rep.partial(format!(
            "enumeration at n={bound} exceeds the cap of {ENUMERATION_CAP}; equality case not checked"
        )),
    }
    Ok(rep.finish())
}

fn single_element_minors(m: &Matroid) -> Vec<(String, Matroid)> {
    let mut out = Vec::new();
    for e in 0..m.n() {
        let single = Subset::singleton(e);
        if let Ok(d) = m.delete(single) {
            out.push((format!("deletion of {e}"), d));
        }
        out.push((
            format!("contraction of {e}"),
            m.contract(single).expect("in range"),
        ));
    }
    out
}

/// Failure description if `m` is not an excluded minor for positroids.
pub fn excluded_minor_failure(m: &Matroid) -> Option<String> {
    if is_positroid(m) {
        return Some("is a positroid".into());
    }
    single_element_minors(m)
        .into_iter()
        .find(|(_, minor)| !is_positroid(minor))
        .map(|(label, _)| format!("{label} is not a positroid"))
}

/// Each catalog matroid fails the positroid test, and each single-element
/// deletion and contraction passes it.
pub fn verify_excluded_catalog() -> Result<VerificationReport> {
    let mut rep = VerificationReport::new(ClaimId::ExcludedMinimality);
    rep.param(
        "entries",
        json!(CatalogId::ALL
            .iter()
            .map(|id| id.name())
            .collect::<Vec<_>>()),
    );
    let results: Vec<(CatalogId, Option<String>, usize)> = CatalogId::ALL
        .par_iter()
        .map(|&id| {
            let m = catalog(id);
            (
                id,
                excluded_minor_failure(&m),
                single_element_minors(&m).len(),
            )
        })
        .collect();
    for (id, failure, minors) in results {
        rep.count("entries_checked", 1);
        rep.count("single_element_minors_checked", minors as u64);
        match failure {
            None => rep.count(format!("{}_excluded_minor", id.name()), 1),
            Some(why) => rep.fail(format!("{}: {why}", id.name()), &catalog(id)),
        }
    }
    rep.notes.push(
        "single-element contractions are tested without simplifying; positroids are minor-closed, so this is at least as strong"
            .into(),
    );
    Ok(rep.finish())
}

const RANK3_CATALOG: [CatalogId; 8] = [
    CatalogId::M4,
    CatalogId::M6,
    CatalogId::M7,
    CatalogId::M8,
    CatalogId::M5,
    CatalogId::M1,
    CatalogId::M2,
    CatalogId::M3,
];

/// Failure description if a simple rank-3 matroid meets the rank-3
/// configuration hypothesis without the asserted consequences.
pub fn rank3_configuration_failure(m: &Matroid) -> Result<Option<String>> {
    if prop31_hypothesis(m)?.is_none() {
        return Ok(None);
    }
    if find_minor_among(m, &RANK3_CATALOG).is_none() {
        return Ok(Some("no rank-3 catalog minor".into()));
    }
    if is_positroid(m) {
        return Ok(Some("is a positroid".into()));
    }
    Ok(None)
}

/// Every simple rank-3 matroid on at most `max_n` elements that satisfies the
/// hypothesis has a rank-3 catalog minor and is not a positroid.
pub fn verify_prop31(max_n: usize, allow_long_run: bool) -> Result<VerificationReport> {
    let mut rep = VerificationReport::new(ClaimId::Prop31);
    rep.param("max_n", json!(max_n));
    let cap = if allow_long_run {
        LINEAR_SPACE_CAP + 1
    } else {
        LINEAR_SPACE_CAP
    };
    let top = if max_n > cap {
        rep.partial(format!(
            "sizes above {cap} skipped; n = 9 needs the long-run flag"
        ));
        cap
    } else {
        max_n
    };
    for n in 3..=top {
        let corpus = simple_rank3(n, allow_long_run)?;
        let checked: Vec<(bool, Option<String>)> = corpus
            .par_iter()
            .map(|m| {
                let hyp = prop31_hypothesis(m)
                    .expect("corpus is simple rank 3")
                    .is_some();
                (
                    hyp,
                    rank3_configuration_failure(m).expect("corpus is simple rank 3"),
                )
            })
            .collect();
        rep.count(format!("n{n}_scanned"), corpus.len() as u64);
        for (m, (hyp, failure)) in corpus.iter().zip(checked) {
            if hyp {
                rep.count(format!("n{n}_hypothesis"), 1);
            }
            if let Some(why) = failure {
                rep.fail(format!("n={n}: {why}"), m);
            }
        }
    }
    Ok(rep.finish())
}

/// Failure description for a simple rank-4 matroid meeting the rank-4 hypothesis.
pub fn rank4_configuration_failure(m: &Matroid) -> Result<Option<String>> {
    if prop32_hypothesis(m)?.is_none() {
        return Ok(None);
    }
    if find_catalog_minor(m).is_none() {
        return Ok(Some("no catalog minor".into()));
    }
    if is_positroid(m) {
        return Ok(Some("is a positroid".into()));
    }
    Ok(None)
}

/// A random simple rank-4 matroid meeting the rank-4 hypothesis.
///
/// A line `L = {a0, a1, a2}`; three further points `x0, x1, x2` spanning
/// rank 4 with `L`; a point `y_i` placed freely on each line `a_i x_i`; then up
/// to `extra` points placed freely on random flats of rank at least 2; finally
/// a random relabeling.
pub fn rank4_configuration_sample(rng: &mut ChaCha8Rng, extra: usize) -> Matroid {
    let line = principal_extension(&uniform(2, 2).unwrap(), Subset::full(2)).unwrap();
    let mut m = line;
    for _ in 0..2 {
        m = m.direct_sum(&uniform(1, 1).unwrap()).unwrap();
    }
    // x2 in general position within rank 4
    m = principal_extension(&m, m.ground()).unwrap();
    for i in 0..3 {
        let pair = Subset::singleton(i).with(3 + i);
        m = principal_extension(&m, m.cl(pair)).unwrap();
    }
    let added = rng.gen_range(0..=extra);
    for _ in 0..added {
        let lattice = flat_lattice(&m);
        let flats: Vec<Subset> = lattice
            .iter()
            .filter(|(k, _)| *k >= 2)
            .map(|(_, f)| f)
            .collect();
        let f = *flats
            .choose(rng)
            .expect("rank-4 matroids have flats of rank 2");
        m = principal_extension(&m, f).unwrap();
    }
    let mut perm: Vec<usize> = (0..m.n()).collect();
    perm.shuffle(rng);
    m.relabel(&perm).unwrap()
}

/// Seeded samples meeting the rank-4 hypothesis all have a catalog minor and
/// fail the positroid test. The fixed rank-4 catalog entry is always included.
pub fn verify_prop32(samples: usize, seed: u64) -> Result<VerificationReport> {
    let mut rep = VerificationReport::new(ClaimId::Prop32);
    rep.param("samples", json!(samples));
    rep.param("seed", json!(seed));
    rep.param("generator", json!(GENERATOR));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut instances = vec![catalog(CatalogId::Fig2)];
    instances.extend((0..samples).map(|_| rank4_configuration_sample(&mut rng, 3)));
    let results: Vec<Result<(bool, Option<String>)>> = instances
        .par_iter()
        .map(|m| {
            if !m.is_simple() {
                return Ok((false, None));
            }
            let hyp = prop32_hypothesis(m)?.is_some();
            Ok((hyp, rank4_configuration_failure(m)?))
        })
        .collect();
    for (i, (m, res)) in instances.iter().zip(results).enumerate() {
        let (hyp, failure) = res?;
        rep.count("instances", 1);
        if hyp {
            rep.count("hypothesis", 1);
        }
        if let Some(why) = failure {
            rep.fail(format!("sample {i}: {why}"), m);
        }
    }
    Ok(rep.finish())
}

/// Failure description for a tree-shaped member with lines of `l + 1` points.
pub fn tree_failure(m: &Matroid, r: usize, l: usize) -> Option<String> {
    if m.rank() != r {
        Some(format!("rank {} instead of {r}", m.rank()))
    } else if m.n() != l * (r - 1) + 1 {
        Some(format!("size {} instead of {}", m.n(), l * (r - 1) + 1))
    } else if !m.is_simple() {
        Some("not simple".into())
    } else if !is_positroid(m) {
        Some("not a positroid".into())
    } else if has_uniform_line_minor(m, l + 2) {
        Some(format!("has a U(2,{}) minor", l + 2))
    } else {
        None
    }
}

/// Every parallel-connection tree of `U_{2,l+1}` copies, for `r <= r_max`
/// and `l <= l_max`, is a simple rank-`r` positroid of size `l(r-1)+1`
/// without a `U_{2,l+2}` minor.
pub fn verify_lemma43(r_max: usize, l_max: usize) -> Result<VerificationReport> {
    let mut rep = VerificationReport::new(ClaimId::Lemma43);
    rep.param("r_max", json!(r_max));
    rep.param("l_max", json!(l_max));
    for r in 2..=r_max {
        for l in 1..=l_max {
            if l * (r - 1) + 1 > crate::subset::MAX_GROUND {
                rep.partial(format!("(r, l) = ({r}, {l}) exceeds the ground-set cap"));
                continue;
            }
            let trees = all_parallel_connection_trees(r, l)?;
            let failures: Vec<Option<String>> =
                trees.par_iter().map(|t| tree_failure(t, r, l)).collect();
            rep.count(format!("r{r}_l{l}_trees"), trees.len() as u64);
            for (t, failure) in trees.iter().zip(failures) {
                if let Some(why) = failure {
                    rep.fail(format!("r={r}, l={l}: {why}"), t);
                }
            }
        }
    }
    Ok(rep.finish())
}

/// Conjectured size bound for 3-connected rank-`r` positroids without a
/// `U_{2,l+2}` minor.
pub fn three_connected_bound(r: usize, l: usize) -> usize {
    r + r * ((l - 1) / 2) + usize::from(l.is_multiple_of(2))
}

/// Rank-3 evidence: no qualifying positroid one element above the bound, and
/// the whirl-like construction reaches it.
pub fn verify_conjecture61_rank3(l: usize) -> Result<VerificationReport> {
    if l < 3 {
        return Err(Error::InvalidParameters(format!("need l >= 3, got {l}")));
    }
    let mut rep = VerificationReport::new(ClaimId::Conj61R3);
    let bound = three_connected_bound(3, l);
    rep.param("r", json!(3));
    rep.param("l", json!(l));
    rep.param("bound", json!(bound));
    let filter = PositroidFilter {
        rank: Some(3),
        simple: true,
        three_connected: true,
        no_uniform_line_minor: Some(l + 2),
        ..Default::default()
    };
    match positroids(bound + 1, &filter)? {
        Some((over, visited)) => {
            rep.count("decorated_permutations_above_bound", visited);
            rep.count("qualifying_above_bound", over.len() as u64);
            for m in &over {
                rep.fail("3-connected positroid above the conjectured bound", m);
            }
        }
        None => rep.partial(format!(
            "enumeration at n={} exceeds the cap of {ENUMERATION_CAP}",
            bound + 1
        )),
    }
    let attaining = if l.is_multiple_of(2) {
        whirl_like_plus(3, l)?
    } else {
        whirl_like(3, l)?
    };
    let label = if l.is_multiple_of(2) {
        "whirl-like plus"
    } else {
        "whirl-like"
    };
    if let Some(why) = whirl_failure(&attaining, l) {
        rep.fail(format!("{label}: {why}"), &attaining);
    } else if attaining.n() != bound {
        rep.fail(
            format!("{label} has {} elements, bound is {bound}", attaining.n()),
            &attaining,
        );
    } else {
        rep.witnesses.push(Witness::new(
            format!("{label} attaining the bound"),
            &attaining,
        ));
    }
    Ok(rep.finish())
}

fn whirl_failure(m: &Matroid, l: usize) -> Option<String> {
    if !is_3connected(m) {
        Some("not 3-connected".into())
    } else if !is_positroid(m) {
        Some("not a positroid".into())
    } else if has_uniform_line_minor(m, l + 2) {
        Some(format!("has a U(2,{}) minor", l + 2))
    } else {
        None
    }
}

/// Sizes, the `l = 3, 4` coincidence (for `r` up to at least 5), and the 3-connected positroid property
/// of the whirl-like families.
pub fn verify_whirl_family(r_max: usize, l_max: usize) -> Result<VerificationReport> {
    let mut rep = VerificationReport::new(ClaimId::WhirlFamily);
    rep.param("r_max", json!(r_max));
    rep.param("l_max", json!(l_max));
    let coincidence_r = r_max.max(5);
    rep.param("coincidence_r_max", json!(coincidence_r));
    for r in 3..=coincidence_r {
        let a = whirl_like(r, 3)?;
        let b = whirl_like(r, 4)?;
        rep.count("coincidence_checks", 1);
        if are_isomorphic(&a, &b).is_none() {
            rep.fail(format!("whirl-like r={r}: l=3 and l=4 differ"), &b);
        }
    }
    for r in 2..=r_max {
        for l in 3..=l_max {
            let w = whirl_like(r, l)?;
            rep.count("whirl_checked", 1);
            let expected = r + r * ((l - 1) / 2);
            if w.n() != expected {
                rep.fail(
                    format!(
                        "whirl-like r={r}, l={l}: size {} instead of {expected}",
                        w.n()
                    ),
                    &w,
                );
            }
            if let Some(why) = whirl_failure(&w, l) {
                rep.fail(format!("whirl-like r={r}, l={l}: {why}"), &w);
            }
            if l % 2 == 0 {
                let p = whirl_like_plus(r, l)?;
                rep.count("whirl_plus_checked", 1);
                if let Some(why) = whirl_failure(&p, l) {
                    rep.fail(format!("whirl-like plus r={r}, l={l}: {why}"), &p);
                }
            }
        }
    }
    Ok(rep.finish())
}

/// The two positroid oracles agree on every matroid with at most `max_n`
/// elements, and enumerated positroids are closed under single-element minors.
pub fn verify_oracle_agreement(max_n: usize) -> Result<VerificationReport> {
    let mut rep = VerificationReport::new(ClaimId::OracleAgreement);
    rep.param("max_n", json!(max_n));
    let top = if max_n > ALL_MATROIDS_CAP {
        rep.partial(format!(
            "complete corpus only reaches n = {ALL_MATROIDS_CAP}"
        ));
        ALL_MATROIDS_CAP
    } else {
        max_n
    };
    for n in 1..=top {
        let (generated, stats) = enumerate_positroids_with_stats(n, &PositroidFilter::default())?;
        let corpus = all_matroids(n)?;
        let flags: Vec<bool> = corpus.par_iter().map(is_positroid).collect();
        let by_check: BTreeSet<CanonicalForm> = corpus
            .iter()
            .zip(&flags)
            .filter(|(_, &ok)| ok)
            .map(|(m, _)| canonical_form(m))
            .collect();
        let by_generation: BTreeSet<CanonicalForm> = generated.iter().map(canonical_form).collect();
        rep.count(format!("n{n}_matroids"), corpus.len() as u64);
        rep.count(format!("n{n}_positroids"), by_generation.len() as u64);
        rep.count(
            format!("n{n}_decorated_permutations"),
            stats.decorated_permutations,
        );
        for m in &generated {
            if !by_check.contains(&canonical_form(m)) {
                rep.fail(format!("n={n}: generated but fails the interval check"), m);
            }
            for (label, minor) in single_element_minors(m) {
                if !is_positroid(&minor) {
                    rep.fail(
                        format!("n={n}: {label} of a positroid fails the interval check"),
                        m,
                    );
                }
            }
        }
        for (m, _) in corpus.iter().zip(&flags).filter(|(_, &ok)| ok) {
            if !by_generation.contains(&canonical_form(m)) {
                rep.fail(
                    format!("n={n}: passes the interval check but is never generated"),
                    m,
                );
            }
        }
    }
    Ok(rep.finish())
}

/// The flat-scan line-minor test agrees with generic minor search.
pub fn verify_minor_test_equivalence(max_n: usize) -> Result<VerificationReport> {
    let mut rep = VerificationReport::new(ClaimId::MinorTestEquivalence);
    rep.param("max_n", json!(max_n));
    rep.param("k", json!([3, 4, 5]));
    let mut corpus = Vec::new();
    for n in 1..=max_n.min(ALL_MATROIDS_CAP) {
        corpus.extend(all_matroids(n)?);
    }
    if max_n > ALL_MATROIDS_CAP {
        for n in ALL_MATROIDS_CAP + 1..=max_n.min(LINEAR_SPACE_CAP) {
            corpus.extend(linear_spaces(n)?);
        }
        rep.notes.push(format!(
            "above n = {ALL_MATROIDS_CAP} the corpus holds simple matroids of rank at most 3"
        ));
        if max_n > LINEAR_SPACE_CAP {
            rep.partial(format!("sizes above {LINEAR_SPACE_CAP} skipped"));
        }
    }
    let mismatches: Vec<Option<usize>> = corpus
        .par_iter()
        .map(|m| {
            (3..=5).find(|&k| {
                has_uniform_line_minor(m, k) != has_minor(m, &uniform(2, k).unwrap()).is_some()
            })
        })
        .collect();
    rep.count("matroids", corpus.len() as u64);
    rep.count("comparisons", 3 * corpus.len() as u64);
    for (m, k) in corpus.iter().zip(mismatches) {
        if let Some(k) = k {
            rep.fail(format!("tests disagree for U(2,{k})"), m);
        }
    }
    Ok(rep.finish())
}

/// A rank-2 chirotope on six elements with a simple underlying matroid.
fn simple_rank2(rows: &[Vec<i64>]) -> Option<Chirotope> {
    let chi = chirotope_from_matrix(&IntMatrix::from_i64(rows).ok()?).ok()?;
    chi.underlying_matroid().ok()?.is_simple().then_some(chi)
}

/// Random and structured realizable simple rank-2 chirotopes on six elements.
pub fn ramsey_instances(samples: usize, seed: u64) -> Vec<Chirotope> {
    let mut out = Vec::new();
    let moment: Vec<Vec<i64>> = vec![vec![1; 6], (0..6).collect()];
    // winds once around the origin with no two columns parallel
    let winding: Vec<Vec<i64>> = vec![vec![3, 2, 0, -2, -3, 1], vec![0, 2, 3, 2, -1, -3]];
    let alternating: Vec<Vec<i64>> = vec![vec![1, -1, 1, -1, 1, -1], vec![0, 1, 2, 3, 4, 5]];
    for rows in [moment, winding, alternating] {
        let chi = simple_rank2(&rows).expect("structured configurations are simple");
        out.push(chi.negated());
        out.push(chi);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut made = 0;
    while made < samples {
        let rows: Vec<Vec<i64>> = (0..2)
            .map(|_| (0..6).map(|_| rng.gen_range(-9..=9)).collect())
            .collect();
        if let Some(chi) = simple_rank2(&rows) {
            out.push(chi);
            made += 1;
        }
    }
    out
}

fn commutation_failure(chi: &Chirotope) -> Result<Option<String>> {
    let m = chi.underlying_matroid()?;
    for e in 0..chi.n() {
        let single = Subset::singleton(e);
        if oriented_delete(chi, e)?.underlying_matroid()? != m.delete(single)? {
            return Ok(Some(format!("deletion of {e} does not commute")));
        }
        if !m.loops().contains(e)
            && oriented_contract(chi, e)?.underlying_matroid()? != m.contract(single)?
        {
            return Ok(Some(format!("contraction of {e} does not commute")));
        }
    }
    Ok(None)
}

/// Monochromatic triples in simple rank-2 chirotopes on six elements, and
/// commutation of oriented and unoriented minors.
pub fn verify_ramsey_l1(samples: usize, seed: u64) -> Result<VerificationReport> {
    let mut rep = VerificationReport::new(ClaimId::RamseyL1);
    rep.param("samples", json!(samples));
    rep.param("seed", json!(seed));
    rep.param("generator", json!(GENERATOR));
    let instances = ramsey_instances(samples, seed);
    let mut notes = BTreeSet::new();
    for (i, chi) in instances.iter().enumerate() {
        rep.count("chirotopes", 1);
        let report = ramsey_scan(chi, 1)?;
        notes.extend(report.notes.iter().cloned());
        let m = chi.underlying_matroid()?;
        if report.dichotomy_holds {
            rep.count("monochromatic_triple", 1);
        } else {
            rep.fail(
                format!("chirotope {i} ({chi}) has no monochromatic triple"),
                &m,
            );
        }
        if let Some(why) = commutation_failure(chi)? {
            rep.fail(format!("chirotope {i}: {why}"), &m);
        }
    }
    rep.notes.extend(notes);
    Ok(rep.finish())
}

/// What a run covers and how.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RunConfig {
    /// `(r, l)` pairs for the size bound and equality case.
    pub size_bound_cases: Vec<(usize, usize)>,
    pub rank3_max_n: usize,
    pub rank4_samples: usize,
    pub tree_r_max: usize,
    pub tree_l_max: usize,
    pub three_connected_l: Vec<usize>,
    pub whirl_r_max: usize,
    pub whirl_l_max: usize,
    pub oracle_max_n: usize,
    pub minor_equivalence_max_n: usize,
    pub ramsey_samples: usize,
    pub seed: u64,
    pub allow_long_run: bool,
    /// Worker threads; `None` uses the rayon default.
    pub threads: Option<usize>,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            size_bound_cases: vec![(2, 3), (3, 1), (3, 2), (4, 2), (3, 3)],
            rank3_max_n: 8,
            rank4_samples: 200,
            tree_r_max: 5,
            tree_l_max: 3,
            three_connected_l: vec![3, 4],
            whirl_r_max: 4,
            whirl_l_max: 5,
            oracle_max_n: 7,
            minor_equivalence_max_n: 8,
            ramsey_samples: 200,
            seed: 0,
            allow_long_run: false,
            threads: None,
        }
    }
}

/// Timings and environment for one run; kept apart from the reports.
#[derive(Clone, Debug, Serialize)]
pub struct RunManifest {
    pub schema_version: u32,
    pub tool: String,
    pub version: String,
    pub generator: String,
    pub config: RunConfig,
    pub threads_used: usize,
    pub started_unix_secs: u64,
    pub elapsed_ms: BTreeMap<String, u128>,
    pub total_ms: u128,
    pub caps: BTreeMap<String, usize>,
}

/// Every claim, in run order.
pub const ALL_CLAIMS: [ClaimId; 10] = [
    ClaimId::ThmMain,
    ClaimId::ExcludedMinimality,
    ClaimId::Prop31,
    ClaimId::Prop32,
    ClaimId::Lemma43,
    ClaimId::Conj61R3,
    ClaimId::WhirlFamily,
    ClaimId::OracleAgreement,
    ClaimId::MinorTestEquivalence,
    ClaimId::RamseyL1,
];

/// Run every check in `config` on a pool of the configured size.
pub fn run_all(config: &RunConfig) -> Result<(Vec<VerificationReport>, RunManifest)> {
    run_selected(config, &ALL_CLAIMS)
}

/// Run the checks for `claims` only, in the fixed order of [`ALL_CLAIMS`].
pub fn run_selected(
    config: &RunConfig,
    claims: &[ClaimId],
) -> Result<(Vec<VerificationReport>, RunManifest)> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(t) = config.threads {
        builder = builder.num_threads(t);
    }
    let pool = builder
        .build()
        .map_err(|e| Error::InvalidParameters(format!("thread pool: {e}")))?;
    pool.install(|| run_inner(config, claims, pool.current_num_threads()))
}

fn run_inner(
    config: &RunConfig,
    claims: &[ClaimId],
    threads: usize,
) -> Result<(Vec<VerificationReport>, RunManifest)> {
    let started = std::time::SystemTime::now()
        .duration_since(std::time::UNIX_EPOCH)
        .map(|d| d.as_secs())
        .unwrap_or(0);
    let total = Instant::now();
    let mut reports = Vec::new();
    let mut elapsed = BTreeMap::new();
    let mut timed =
        |key: String, f: &mut dyn FnMut() -> Result<VerificationReport>| -> Result<()> {
            let t = Instant::now();
            reports.push(f()?);
            elapsed.insert(key, t.elapsed().as_millis());
            Ok(())
        };
    let on = |c: ClaimId| claims.contains(&c);
    if on(ClaimId::ThmMain) {
        for &(r, l) in &config.size_bound_cases {
            timed(format!("THM_MAIN r={r} l={l}"), &mut || {
                verify_theorem_main(r, l)
            })?;
        }
    }
    if on(ClaimId::ExcludedMinimality) {
        timed("EXCLUDED_MINIMALITY".into(), &mut verify_excluded_catalog)?;
    }
    if on(ClaimId::Prop31) {
        timed("PROP_3_1".into(), &mut || {
            verify_prop31(config.rank3_max_n, config.allow_long_run)
        })?;
    }
    if on(ClaimId::Prop32) {
        timed("PROP_3_2".into(), &mut || {
            verify_prop32(config.rank4_samples, config.seed)
        })?;
    }
    if on(ClaimId::Lemma43) {
        timed("LEMMA_4_3".into(), &mut || {
            verify_lemma43(config.tree_r_max, config.tree_l_max)
        })?;
    }
    if on(ClaimId::Conj61R3) {
        for &l in &config.three_connected_l {
            timed(format!("CONJ_6_1_R3 l={l}"), &mut || {
                verify_conjecture61_rank3(l)
            })?;
        }
    }
    if on(ClaimId::WhirlFamily) {
        timed("WHIRL_FAMILY".into(), &mut || {
            verify_whirl_family(config.whirl_r_max, config.whirl_l_max)
        })?;
    }
    if on(ClaimId::OracleAgreement) {
        timed("ORACLE_AGREEMENT".into(), &mut || {
            verify_oracle_agreement(config.oracle_max_n)
        })?;
    }
    if on(ClaimId::MinorTestEquivalence) {
        timed("MINOR_TEST_EQUIVALENCE".into(), &mut || {
            verify_minor_test_equivalence(config.minor_equivalence_max_n)
        })?;
    }
    if on(ClaimId::RamseyL1) {
        timed("RAMSEY_L1".into(), &mut || {
            verify_ramsey_l1(config.ramsey_samples, config.seed)
        })?;
    }
    let caps = BTreeMap::from([
        ("positroid_enumeration_n".to_string(), ENUMERATION_CAP),
        ("linear_space_n".to_string(), LINEAR_SPACE_CAP),
        ("complete_corpus_n".to_string(), ALL_MATROIDS_CAP),
        ("ground_set".to_string(), crate::subset::MAX_GROUND),
    ]);
    let manifest = RunManifest {
        schema_version: SCHEMA_VERSION,
        tool: env!("CARGO_PKG_NAME").into(),
        version: env!("CARGO_PKG_VERSION").into(),
        generator: GENERATOR.into(),
        config: config.clone(),
        threads_used: threads,
        started_unix_secs: started,
        elapsed_ms: elapsed,
        total_ms: total.elapsed().as_millis(),
        caps,
    };
    Ok((reports, manifest))
}

#[derive(Serialize)]
struct ReportFile<'a> {
    schema_version: u32,
    reports: &'a [VerificationReport],
}

/// Deterministic JSON for a list of reports.
pub fn reports_to_json(reports: &[VerificationReport]) -> Result<String> {
    Ok(serde_json::to_string_pretty(&ReportFile {
        schema_version: SCHEMA_VERSION,
        reports,
    })?)
}

pub fn any_counterexample(reports: &[VerificationReport]) -> bool {
    reports.iter().any(|r| r.outcome == Outcome::Counterexample)
}

/// Files written by [`write_outputs`].
#[derive(Clone, Debug, Default)]
pub struct WrittenFiles {
    pub report: PathBuf,
    pub manifest: Option<PathBuf>,
    pub reproducers: Vec<PathBuf>,
}

/// Write the report to `path`, the manifest next to it as
/// `<stem>.manifest.json`, and one `.matroid` reproducer per counterexample
/// into `<stem>.reproducers/`.
pub fn write_outputs(
    reports: &[VerificationReport],
    manifest: Option<&RunManifest>,
    path: &Path,
) -> Result<WrittenFiles> {
    let mut written = WrittenFiles {
        report: path.to_path_buf(),
        ..Default::default()
    };
    if let Some(parent) = path.parent().filter(|p| !p.as_os_str().is_empty()) {
        fs::create_dir_all(parent)?;
    }
    fs::write(path, reports_to_json(reports)? + "\n")?;
    let stem = path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "report".into());
    let dir = path.parent().unwrap_or_else(|| Path::new("."));
    if let Some(man) = manifest {
        let p = dir.join(format!("{stem}.manifest.json"));
        fs::write(&p, serde_json::to_string_pretty(man)? + "\n")?;
        written.manifest = Some(p);
    }
    if any_counterexample(reports) {
        let repro = dir.join(format!("{stem}.reproducers"));
        fs::create_dir_all(&repro)?;
        for rep in reports {
            for (i, cx) in rep.counterexamples.iter().enumerate() {
                let p = repro.join(format!("{}_{i}.matroid", rep.claim_id));
                let params = serde_json::to_string(&rep.params)?;
                let body = format!(
                    "# claim: {}\n# params: {params}\n# {}\n{}",
                    rep.claim_id, cx.label, cx.matroid
                );
                fs::write(&p, body)?;
                written.reproducers.push(p);
            }
        }
    }
    Ok(written)
}

/// Re-run the per-matroid check behind a claim. `Ok(Some(reason))` means the
/// matroid is still a counterexample. `l` is needed for `LEMMA_4_3` and
/// `THM_MAIN`, and `r` is read from the matroid.
pub fn recheck(claim: ClaimId, m: &Matroid, l: Option<usize>) -> Result<Option<String>> {
    let need_l = || l.ok_or_else(|| Error::InvalidParameters(format!("{claim} needs l")));
    match claim {
        ClaimId::ExcludedMinimality => Ok(excluded_minor_failure(m)),
        ClaimId::Prop31 => rank3_configuration_failure(m),
        ClaimId::Prop32 => rank4_configuration_failure(m),
        ClaimId::Lemma43 => Ok(tree_failure(m, m.rank(), need_l()?)),
        ClaimId::ThmMain => {
            let l = need_l()?;
            let r = m.rank();
            let qualifies = r >= 2 && line_free_filter(r, l).accepts(m) && is_positroid(m);
            Ok((qualifies && m.n() > l * (r - 1) + 1).then(|| {
                format!(
                    "simple rank-{r} positroid on {} elements without U(2,{})",
                    m.n(),
                    l + 2
                )
            }))
        }
        other => Err(Error::InvalidParameters(format!(
            "{other} has no single-matroid check"
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::extremal_family;

    #[test]
    fn size_bound_small_cases() {
        for (r, l) in [(2, 2), (2, 3), (3, 1), (3, 2)] {
            let rep = verify_theorem_main(r, l).unwrap();
            assert_eq!(
                rep.outcome,
                Outcome::Verified,
                "{r} {l}: {:?}",
                rep.counterexamples
            );
        }
        let rep = verify_theorem_main(3, 2).unwrap();
        assert_eq!(rep.counts["extremal_classes"], 1);
        assert_eq!(rep.counts["qualifying_above_bound"], 0);
    }

    #[test]
    fn size_bound_beyond_cap_is_partial() {
        let rep = verify_theorem_main(5, 2).unwrap();
        assert_eq!(rep.outcome, Outcome::Partial);
        assert!(!rep.notes.is_empty());
    }

    #[test]
    fn three_connected_bound_beyond_cap_is_partial() {
        let rep = verify_conjecture61_rank3(5).unwrap();
        assert_eq!(rep.outcome, Outcome::Partial);
        assert_eq!(rep.params["bound"], json!(9));
    }

    #[test]
    fn ramsey_instances_include_structured_ones() {
        let all = ramsey_instances(5, 3);
        assert_eq!(all.len(), 11);
        assert!(all.iter().all(|c| c.rank() == 2 && c.n() == 6));
    }

    #[test]
    fn bounds() {
        assert_eq!(three_connected_bound(3, 3), 6);
        assert_eq!(three_connected_bound(3, 4), 7);
        assert_eq!(three_connected_bound(3, 5), 9);
    }

    #[test]
    fn rank4_samples_meet_hypothesis() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..10 {
            let m = rank4_configuration_sample(&mut rng, 2);
            assert_eq!(m.rank(), 4);
            assert!(m.is_simple());
            assert!(prop32_hypothesis(&m).unwrap().is_some());
        }
    }

    #[test]
    fn recheck_reproduces_failures_and_passes() {
        assert!(
            recheck(ClaimId::ExcludedMinimality, &catalog(CatalogId::M4), None)
                .unwrap()
                .is_none()
        );
        assert!(
            recheck(ClaimId::ExcludedMinimality, &uniform(2, 4).unwrap(), None)
                .unwrap()
                .is_some()
        );
        let e = extremal_family(3, 2).unwrap();
        assert!(recheck(ClaimId::Lemma43, &e, Some(2)).unwrap().is_none());
        assert!(recheck(ClaimId::Lemma43, &e, Some(1)).unwrap().is_some());
        // six points, rank 3, no U(2,4): would break the size bound for l = 1
        assert!(recheck(ClaimId::ThmMain, &e, Some(1)).unwrap().is_none());
        assert!(recheck(ClaimId::ThmMain, &uniform(3, 5).unwrap(), Some(3))
            .unwrap()
            .is_none());
        assert!(recheck(ClaimId::RamseyL1, &e, None).is_err());
    }

    #[test]
    fn outputs_and_reproducers() {
        let dir = tempfile::tempdir().unwrap();
        let mut bad = VerificationReport::new(ClaimId::ExcludedMinimality);
        bad.fail("U(2,4): is a positroid", &uniform(2, 4).unwrap());
        let bad = bad.finish();
        assert_eq!(bad.outcome, Outcome::Counterexample);
        let path = dir.path().join("report.json");
        let written = write_outputs(std::slice::from_ref(&bad), None, &path).unwrap();
        assert_eq!(written.reproducers.len(), 1);
        let m = crate::io::read_file(&written.reproducers[0]).unwrap();
        assert!(recheck(ClaimId::ExcludedMinimality, &m, None)
            .unwrap()
            .is_some());
        let json: Value = serde_json::from_str(&fs::read_to_string(&path).unwrap()).unwrap();
        assert_eq!(json["schema_version"], json!(SCHEMA_VERSION));
        assert_eq!(json["reports"][0]["claim_id"], json!("EXCLUDED_MINIMALITY"));
        assert_eq!(json["reports"][0]["outcome"], json!("counterexample"));
    }

    #[test]
    fn reports_are_deterministic_across_thread_counts() {
        let run = |threads| {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(threads)
                .build()
                .unwrap();
            pool.install(|| {
                let reps = vec![
                    verify_theorem_main(3, 2).unwrap(),
                    verify_prop32(5, 9).unwrap(),
                    verify_oracle_agreement(5).unwrap(),
                ];
                reports_to_json(&reps).unwrap()
            })
        };
        assert_eq!(run(1), run(4));
    }
}
