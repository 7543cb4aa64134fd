//! Builders for the named matroids: uniform matroids, parallel connections,
//! the extremal line-free family and its tree-shaped variants, principal
//! extensions, the whirl-like families, and the excluded-minor catalog.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::iso::{canonical_form, CanonicalForm};
use crate::matroid::Matroid;
use crate::subset::{k_subsets, k_subsets_of, Subset, MAX_GROUND};

/// `U_{r,n}`: every `r`-subset is a basis.
pub fn uniform(r: usize, n: usize) -> Result<Matroid> {
    if n == 0 || r > n {
        return Err(Error::InvalidParameters(format!(
            "uniform matroid needs 0 <= r <= n and n >= 1, got r={r}, n={n}"
        )));
    }
    if n > MAX_GROUND {
        return Err(Error::TooLarge {
            n,
            cap: MAX_GROUND,
            what: "uniform matroid".into(),
        });
    }
    Ok(Matroid::from_bases_unchecked(n, k_subsets(n, r).collect()))
}

/// Parallel connection of `m` and `n` along `em` (in `m`) and `en` (in `n`).
///
/// The output ground set lists `m`'s elements first with their own labels,
/// then the elements of `n` other than `en` in increasing order; `en` is
/// identified with `em`. The flats are computed literally: a set is a flat iff
/// its trace on each side is a flat of that side.
pub fn parallel_connection(m: &Matroid, n: &Matroid, em: usize, en: usize) -> Result<Matroid> {
    if em >= m.n() || en >= n.n() {
        return Err(Error::InvalidParameters(format!(
            "basepoints {em}/{en} out of range for ground sets of size {}/{}",
            m.n(),
            n.n()
        )));
    }
    if m.loops().contains(em) {
        return Err(Error::InvalidBasepoint(em));
    }
    if n.loops().contains(en) {
        return Err(Error::InvalidBasepoint(en));
    }
    let total = m.n() + n.n() - 1;
    if total > MAX_GROUND {
        return Err(Error::TooLarge {
            n: total,
            cap: MAX_GROUND,
            what: "parallel connection".into(),
        });
    }
    // label of each element of n in the output
    let mut n_label = vec![0usize; n.n()];
    let mut next = m.n();
    for (f, label) in n_label.iter_mut().enumerate() {
        if f == en {
            *label = em;
        } else {
            *label = next;
            next += 1;
        }
    }
    let flat_m: Vec<bool> = (0..1u32 << m.n())
        .map(|s| m.is_flat(Subset::from_bits(s)))
        .collect();
    let flat_n: Vec<bool> = (0..1u32 << n.n())
        .map(|s| n.is_flat(Subset::from_bits(s)))
        .collect();
    let m_part = Subset::full(m.n());
    let flats = (0..1u32 << total).map(Subset::from_bits).filter(|s| {
        let trace_m = s.intersection(m_part);
        let trace_n: Subset = (0..n.n()).filter(|&f| s.contains(n_label[f])).collect();
        flat_m[trace_m.bits() as usize] && flat_n[trace_n.bits() as usize]
    });
    Matroid::from_flats(total, flats)
}

/// The path-shaped member of the extremal family: `r - 1` copies of
/// `U_{2,l+1}` glued in a chain, each new copy attached at a previously
/// unused element of the last one. Rank `r`, `l(r-1)+1` elements.
pub fn extremal_family(r: usize, l: usize) -> Result<Matroid> {
    if r < 2 || l < 1 {
        return Err(Error::InvalidParameters(format!(
            "extremal family needs r >= 2 and l >= 1, got r={r}, l={l}"
        )));
    }
    let block = uniform(2, l + 1)?;
    let mut m = block.clone();
    let mut attach = l;
    for _ in 2..r {
        m = parallel_connection(&m, &block, attach, 0)?;
        attach = m.n() - 1;
    }
    Ok(m)
}

/// A tree of `U_{2,l+1}` blocks. Block `j >= 1` is glued to block
/// `attachments[j-1].0 < j` at that block's local element `attachments[j-1].1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParallelConnectionTree {
    pub l: usize,
    pub attachments: Vec<(usize, usize)>,
}

impl ParallelConnectionTree {
    pub fn copies(&self) -> usize {
        self.attachments.len() + 1
    }

    pub fn build(&self) -> Result<Matroid> {
        let l = self.l;
        if l < 1 {
            return Err(Error::InvalidParameters("blocks need l >= 1".into()));
        }
        let block = uniform(2, l + 1)?;
        let mut labels: Vec<Vec<usize>> = vec![(0..=l).collect()];
        let mut m = block.clone();
        for (j, &(parent, local)) in self.attachments.iter().enumerate() {
            if parent > j || local > l {
                return Err(Error::InvalidParameters(format!(
                    "attachment ({parent}, {local}) of block {} is invalid",
                    j + 1
                )));
            }
            let base = labels[parent][local];
            let start = m.n();
            m = parallel_connection(&m, &block, base, 0)?;
            let mut own = vec![base];
            own.extend(start..start + l);
            labels.push(own);
        }
        Ok(m)
    }

    /// Every tree on `copies` blocks.
    pub fn all(copies: usize, l: usize) -> Vec<ParallelConnectionTree> {
        let mut out = vec![ParallelConnectionTree {
            l,
            attachments: Vec::new(),
        }];
        for j in 1..copies {
            out = out
                .into_iter()
                .flat_map(|t| {
                    (0..j).flat_map(move |parent| {
                        let t = t.clone();
                        (0..=l).map(move |local| {
                            let mut next = t.clone();
                            next.attachments.push((parent, local));
                            next
                        })
                    })
                })
                .collect();
        }
        out
    }
}

/// One representative per isomorphism class of matroids obtained by gluing
/// `r - 1` copies of `U_{2,l+1}` with parallel connections, sorted by
/// canonical form.
///
/// Classes are grown one block at a time: every such matroid is a smaller one
/// with a new block glued at some element, and isomorphic smaller ones give
/// isomorphic sets of extensions.
pub fn all_parallel_connection_trees(r: usize, l: usize) -> Result<Vec<Matroid>> {
    if r < 2 || l < 1 {
        return Err(Error::InvalidParameters(format!(
            "parallel-connection trees need r >= 2 and l >= 1, got r={r}, l={l}"
        )));
    }
    let block = uniform(2, l + 1)?;
    let mut level: BTreeMap<CanonicalForm, Matroid> = BTreeMap::new();
    level.insert(canonical_form(&block), block.clone());
    for _ in 2..r {
        let mut next = BTreeMap::new();
        for m in level.values() {
            for e in 0..m.n() {
                let p = parallel_connection(m, &block, e, 0)?;
                next.entry(canonical_form(&p)).or_insert(p);
            }
        }
        level = next;
    }
    Ok(level.into_values().collect())
}

/// Add one element freely to the flat `f`: for `S` containing the new element
/// `e`, `r(S) = min(r(S - e) + 1, r((S - e) ∪ F))`.
pub fn principal_extension(m: &Matroid, f: Subset) -> Result<Matroid> {
    if !f.fits(m.n()) || !m.is_flat(f) {
        return Err(Error::InvalidFlat(f.to_string()));
    }
    if m.r(f) == 0 {
        return Err(Error::InvalidParameters(
            "principal extension needs a flat of rank at least 1".into(),
        ));
    }
    let n = m.n();
    if n + 1 > MAX_GROUND {
        return Err(Error::TooLarge {
            n: n + 1,
            cap: MAX_GROUND,
            what: "principal extension".into(),
        });
    }
    Matroid::from_rank_fn(n + 1, |s| {
        if s.contains(n) {
            let rest = s.without(n);
            (m.r(rest) + 1).min(m.r(rest | f))
        } else {
            m.r(s)
        }
    })
}

fn check_whirl_params(r: usize, l: usize) -> Result<()> {
    if r < 2 || l < 3 {
        return Err(Error::InvalidParameters(format!(
            "whirl-like family needs r >= 2 and l >= 3, got r={r}, l={l}"
        )));
    }
    Ok(())
}

/// Basis `b_0..b_{r-1}` (elements `0..r`) with `floor((l-1)/2)` points freely
/// placed on each line `cl{b_i, b_{i+1 mod r}}`, lines taken in order of `i`.
pub fn whirl_like(r: usize, l: usize) -> Result<Matroid> {
    check_whirl_params(r, l)?;
    let per_line = (l - 1) / 2;
    let mut m = uniform(r, r)?;
    for i in 0..r {
        let pair = Subset::singleton(i).with((i + 1) % r);
        for _ in 0..per_line {
            let line = m.cl(pair);
            m = principal_extension(&m, line)?;
        }
    }
    Ok(m)
}

/// [`whirl_like`] with one more point freely placed on `cl{b_0, b_1}`.
pub fn whirl_like_plus(r: usize, l: usize) -> Result<Matroid> {
    let m = whirl_like(r, l)?;
    let line = m.cl(Subset::from_elements([0, 1]));
    principal_extension(&m, line)
}

/// The nine excluded minors: eight of rank 3 and one of rank 4.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CatalogId {
    M1,
    M2,
    M3,
    M4,
    M5,
    M6,
    M7,
    M8,
    Fig2,
}

impl CatalogId {
    /// Listing order.
    pub const ALL: [CatalogId; 9] = [
        CatalogId::M1,
        CatalogId::M2,
        CatalogId::M3,
        CatalogId::M4,
        CatalogId::M5,
        CatalogId::M6,
        CatalogId::M7,
        CatalogId::M8,
        CatalogId::Fig2,
    ];

    /// Minor-search order: small targets first.
    pub const SEARCH_ORDER: [CatalogId; 9] = [
        CatalogId::M4,
        CatalogId::M6,
        CatalogId::M7,
        CatalogId::M8,
        CatalogId::M5,
        CatalogId::M1,
        CatalogId::M2,
        CatalogId::M3,
        CatalogId::Fig2,
    ];

    pub fn is_rank3(self) -> bool {
        self != CatalogId::Fig2
    }

    pub fn name(self) -> &'static str {
        match self {
            CatalogId::M1 => "M1",
            CatalogId::M2 => "M2",
            CatalogId::M3 => "M3",
            CatalogId::M4 => "M4",
            CatalogId::M5 => "M5",
            CatalogId::M6 => "M6",
            CatalogId::M7 => "M7",
            CatalogId::M8 => "M8",
            CatalogId::Fig2 => "FIG2",
        }
    }
}

impl fmt::Display for CatalogId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CatalogId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        CatalogId::ALL
            .into_iter()
            .find(|id| id.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::InvalidParameters(format!("unknown catalog id `{s}`")))
    }
}

fn lines(spec: &[[usize; 3]]) -> Vec<Subset> {
    spec.iter().map(|l| Subset::from_elements(*l)).collect()
}

/// Long lines of each rank-3 catalog entry, transcribed from the drawings.
pub fn catalog_lines(id: CatalogId) -> Option<(usize, Vec<Subset>)> {
    const GRID: [[usize; 3]; 4] = [[0, 1, 2], [0, 3, 6], [1, 4, 7], [2, 5, 8]];
    let spec: Vec<[usize; 3]> = match id {
        CatalogId::M1 => GRID.to_vec(),
        CatalogId::M2 => [GRID.as_slice(), &[[3, 4, 5]]].concat(),
        CatalogId::M3 => [GRID.as_slice(), &[[3, 4, 5], [6, 7, 8]]].concat(),
        CatalogId::M4 => vec![[0, 1, 2], [0, 3, 5], [1, 4, 5], [2, 3, 4]],
        CatalogId::M5 => vec![[0, 1, 2], [0, 3, 6], [1, 4, 6], [2, 5, 6]],
        CatalogId::M6 => vec![[0, 1, 2], [0, 3, 6], [1, 4, 6], [2, 5, 6], [3, 4, 5]],
        CatalogId::M7 => vec![[0, 1, 2], [0, 3, 6], [1, 4, 6], [2, 4, 5]],
        CatalogId::M8 => vec![[0, 1, 2], [0, 3, 6], [1, 4, 6]],
        CatalogId::Fig2 => return None,
    };
    let n = match id {
        CatalogId::M1 | CatalogId::M2 | CatalogId::M3 => 9,
        CatalogId::M4 => 6,
        _ => 7,
    };
    Some((n, lines(&spec)))
}

/// Circuits of the rank-4 entry: the four 3-point lines `L, L1, L2, L3` and
/// every 4-subset of a plane `L ∪ Li` containing neither `L` nor `Li`.
pub fn fig2_circuits() -> Vec<Subset> {
    let big = Subset::from_elements([0, 1, 2]);
    let arms = lines(&[[0, 3, 4], [1, 5, 6], [2, 7, 8]]);
    let mut circuits = vec![big];
    circuits.extend(arms.iter().copied());
    for &arm in &arms {
        let plane = big | arm;
        circuits
            .extend(k_subsets_of(plane, 4).filter(|c| !big.is_subset(*c) && !arm.is_subset(*c)));
    }
    circuits
}

/// The labeled catalog matroid.
pub fn catalog(id: CatalogId) -> Matroid {
    match catalog_lines(id) {
        Some((n, ls)) => Matroid::from_long_lines(n, &ls),
        None => Matroid::from_circuits(9, 4, &fig2_circuits()),
    }
    .expect("catalog entries are valid matroids")
}
