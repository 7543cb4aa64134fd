//! Exhaustive positroid enumeration up to isomorphism.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::connectivity::{is_3connected, is_connected};
use crate::error::{Error, Result};
use crate::iso::{canonical_form, CanonicalForm};
use crate::matroid::Matroid;
use crate::minors::has_uniform_line_minor;
use crate::subset::Subset;

use super::necklace::{positroid_from_decorated_permutation, DecoratedPermutation};

/// Largest ground set the exhaustive enumeration accepts.
pub const ENUMERATION_CAP: usize = 9;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PositroidFilter {
    pub rank: Option<usize>,
    pub simple: bool,
    pub connected: bool,
    pub three_connected: bool,
    /// Keep only positroids without a `U_{2,k}` minor.
    pub no_uniform_line_minor: Option<usize>,
}

impl PositroidFilter {
    pub fn accepts(&self, m: &Matroid) -> bool {
        self.rank.is_none_or(|r| m.rank() == r)
            && (!self.simple || m.is_simple())
            && (!self.connected || is_connected(m))
            && (!self.three_connected || is_3connected(m))
            && self
                .no_uniform_line_minor
                .is_none_or(|k| !has_uniform_line_minor(m, k))
    }

    /// Cheap test on the permutation alone.
    fn accepts_permutation(&self, perm: &[usize], coloops: Subset) -> bool {
        let fixed = (0..perm.len()).filter(|&i| perm[i] == i).count();
        if let Some(r) = self.rank {
            let anti = (0..perm.len()).filter(|&a| perm[a] < a).count();
            if anti + coloops.len() != r {
                return false;
            }
        }
        // loop-decorated fixed points are loops; any fixed point disconnects when n > 1
        if self.simple && fixed > coloops.len() {
            return false;
        }
        if (self.connected || self.three_connected) && perm.len() > 1 && fixed > 0 {
            return false;
        }
        true
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct EnumerationStats {
    /// Decorated permutations visited.
    pub decorated_permutations: u64,
    /// Labeled positroids passing the filter.
    pub labeled_matches: u64,
    /// Isomorphism classes among them.
    pub classes: usize,
}

fn next_permutation(v: &mut [usize]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).unwrap();
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

type Bucket = (BTreeMap<CanonicalForm, Matroid>, u64, u64);

fn scan_partition(n: usize, first: usize, filter: &PositroidFilter) -> Bucket {
    let mut found = BTreeMap::new();
    let (mut visited, mut matched) = (0u64, 0u64);
    let mut tail: Vec<usize> = (0..n).filter(|&x| x != first).collect();
    loop {
        let perm: Vec<usize> = std::iter::once(first).chain(tail.iter().copied()).collect();
        let fixed: Vec<usize> = (0..n).filter(|&i| perm[i] == i).collect();
        for mask in 0..1u32 << fixed.len() {
            visited += 1;
            let coloops: Subset = fixed
                .iter()
                .enumerate()
                .filter(|(k, _)| mask >> k & 1 == 1)
                .map(|(_, &i)| i)
                .collect();
            if !filter.accepts_permutation(&perm, coloops) {
                continue;
            }
            let dp = DecoratedPermutation::from_parts_unchecked(perm.clone(), coloops);
            let m = positroid_from_decorated_permutation(&dp);
            if !filter.accepts(&m) {
                continue;
            }
            matched += 1;
            found.entry(canonical_form(&m)).or_insert(m);
        }
        if !next_permutation(&mut tail) {
            break;
        }
    }
    (found, visited, matched)
}

/// Every positroid on `n` elements passing `filter`, one per isomorphism
/// class, sorted by canonical form, together with scan counts.
pub fn enumerate_positroids_with_stats(
    n: usize,
    filter: &PositroidFilter,
) -> Result<(Vec<Matroid>, EnumerationStats)> {
    if n > ENUMERATION_CAP {
        return Err(Error::TooLarge {
            n,
            cap: ENUMERATION_CAP,
            what: "exhaustive positroid enumeration".into(),
        });
    }
    if n == 0 {
        return Err(Error::InvalidParameters("enumeration needs n >= 1".into()));
    }
    let (found, visited, matched) = (0..n)
        .into_par_iter()
        .map(|first| scan_partition(n, first, filter))
        .reduce(
            || (BTreeMap::new(), 0, 0),
            |(mut a, va, ma), (b, vb, mb)| {
                for (k, v) in b {
                    a.entry(k).or_insert(v);
                }
                (a, va + vb, ma + mb)
            },
        );
    let classes: Vec<Matroid> = found.into_values().collect();
    let stats = EnumerationStats {
        decorated_permutations: visited,
        labeled_matches: matched,
        classes: classes.len(),
    };
    Ok((classes, stats))
}

pub fn enumerate_positroids(n: usize, filter: &PositroidFilter) -> Result<Vec<Matroid>> {
    Ok(enumerate_positroids_with_stats(n, filter)?.0)
}
