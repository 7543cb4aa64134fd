//! Exhaustive test corpora.
//!
//! Simple matroids of rank at most 3 are linear spaces: a point set with a
//! family of lines, any two points on exactly one line. They are grown one
//! point at a time. The new point joins a set of pairwise disjoint existing
//! lines and forms a two-point line with every point those lines miss. Every
//! linear space on `n + 1` points arises this way from its deletion of the last
//! point, so deduplicating each level by canonical form is exhaustive.
//!
//! Non-simple rank-at-most-3 matroids come from blowing points up into
//! parallel classes and adding loops; duals then cover every matroid on at
//! most seven elements.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::constructions::uniform;
use crate::error::{Error, Result};
use crate::iso::{canonical_form, CanonicalForm};
use crate::matroid::Matroid;
use crate::subset::Subset;

/// Largest point count for which [`linear_spaces`] runs without the explicit
/// long-run opt-in.
pub const LINEAR_SPACE_CAP: usize = 8;

/// Largest ground set for which [`all_matroids`] is complete.
pub const ALL_MATROIDS_CAP: usize = 7;

#[derive(Clone, Debug)]
struct LinearSpace {
    n: usize,
    /// every line, two-point lines included
    lines: Vec<Subset>,
}

impl LinearSpace {
    fn matroid(&self) -> Matroid {
        if self.lines.len() <= 1 {
            // at most two points, or all points collinear
            let rank = self.n.min(2);
            return uniform(rank, self.n).expect("small uniform matroid");
        }
        let long: Vec<Subset> = self
            .lines
            .iter()
            .copied()
            .filter(|l| l.len() >= 3)
            .collect();
        Matroid::from_long_lines(self.n, &long).expect("linear spaces give simple rank-3 matroids")
    }

    fn extensions(&self) -> Vec<LinearSpace> {
        let mut out = Vec::new();
        let mut chosen = Vec::new();
        self.choose(0, Subset::EMPTY, &mut chosen, &mut out);
        out
    }

    fn choose(
        &self,
        from: usize,
        covered: Subset,
        chosen: &mut Vec<usize>,
        out: &mut Vec<LinearSpace>,
    ) {
        if from == self.lines.len() {
            out.push(self.extend_with(chosen, covered));
            return;
        }
        self.choose(from + 1, covered, chosen, out);
        let line = self.lines[from];
        if line.is_disjoint(covered) {
            chosen.push(from);
            self.choose(from + 1, covered | line, chosen, out);
            chosen.pop();
        }
    }

    fn extend_with(&self, chosen: &[usize], covered: Subset) -> LinearSpace {
        let p = self.n;
        let mut lines: Vec<Subset> = self
            .lines
            .iter()
            .enumerate()
            .map(|(i, &l)| if chosen.contains(&i) { l.with(p) } else { l })
            .collect();
        for q in Subset::full(self.n).difference(covered) {
            lines.push(Subset::singleton(q).with(p));
        }
        lines.sort_unstable();
        LinearSpace { n: p + 1, lines }
    }
}

/// One representative per isomorphism class of simple matroids of rank at
/// most 3 on exactly `k` elements, for every `k` in `1..=max_n`. Entry `k - 1`
/// of the result holds size `k`, sorted by canonical form.
pub fn linear_spaces_up_to(max_n: usize, allow_long_run: bool) -> Result<Vec<Vec<Matroid>>> {
    let cap = if allow_long_run {
        LINEAR_SPACE_CAP + 1
    } else {
        LINEAR_SPACE_CAP
    };
    if max_n > cap {
        return Err(Error::TooLarge {
            n: max_n,
            cap,
            what: "linear-space enumeration".into(),
        });
    }
    let mut levels = Vec::new();
    if max_n == 0 {
        return Ok(levels);
    }
    let mut current: Vec<LinearSpace> = vec![LinearSpace {
        n: 1,
        lines: Vec::new(),
    }];
    levels.push(vec![current[0].matroid()]);
    for _ in 2..=max_n {
        let candidates: Vec<(CanonicalForm, LinearSpace, Matroid)> = current
            .par_iter()
            .flat_map_iter(|ls| ls.extensions())
            .map(|ls| {
                let m = ls.matroid();
                (canonical_form(&m), ls, m)
            })
            .collect();
        let mut seen: BTreeMap<CanonicalForm, (LinearSpace, Matroid)> = BTreeMap::new();
        for (form, ls, m) in candidates {
            seen.entry(form).or_insert((ls, m));
        }
        current = seen.values().map(|(ls, _)| ls.clone()).collect();
        levels.push(seen.into_values().map(|(_, m)| m).collect());
    }
    Ok(levels)
}

/// Simple matroids of rank at most 3 on exactly `n` elements.
pub fn linear_spaces(n: usize) -> Result<Vec<Matroid>> {
    if n == 0 {
        return Ok(Vec::new());
    }
    Ok(linear_spaces_up_to(n, false)?.pop().unwrap_or_default())
}

/// Simple rank-3 matroids on exactly `n` elements.
pub fn simple_rank3(n: usize, allow_long_run: bool) -> Result<Vec<Matroid>> {
    if n < 3 {
        return Ok(Vec::new());
    }
    let mut levels = linear_spaces_up_to(n, allow_long_run)?;
    Ok(levels
        .pop()
        .unwrap_or_default()
        .into_iter()
        .filter(|m| m.rank() == 3)
        .collect())
}

/// Matroid on `sizes.iter().sum() + loops` elements in which element group
/// `i` is a parallel class standing for element `i` of `simple`, followed by
/// `loops` loops.
fn blow_up(simple: &Matroid, sizes: &[usize], loops: usize) -> Matroid {
    let mut owner = Vec::new();
    for (i, &k) in sizes.iter().enumerate() {
        owner.extend(std::iter::repeat_n(Some(i), k));
    }
    owner.extend(std::iter::repeat_n(None, loops));
    let n = owner.len();
    let ranks: Vec<u8> = (0..1u32 << n)
        .map(|s| {
            let image: Subset = Subset::from_bits(s)
                .iter()
                .filter_map(|e| owner[e])
                .collect();
            simple.r(image) as u8
        })
        .collect();
    Matroid::from_rank_table_unchecked(n, ranks)
}

fn compositions(total: usize, parts: usize, out: &mut Vec<Vec<usize>>, prefix: &mut Vec<usize>) {
    if parts == 0 {
        if total == 0 {
            out.push(prefix.clone());
        }
        return;
    }
    for first in 1..=total.saturating_sub(parts - 1) {
        prefix.push(first);
        compositions(total - first, parts - 1, out, prefix);
        prefix.pop();
    }
}

fn dedup_sorted(ms: impl IntoIterator<Item = Matroid>) -> Vec<Matroid> {
    let mut seen: BTreeMap<CanonicalForm, Matroid> = BTreeMap::new();
    for m in ms {
        seen.entry(canonical_form(&m)).or_insert(m);
    }
    seen.into_values().collect()
}

/// Every matroid of rank at most 3 on exactly `n` elements, one per
/// isomorphism class, sorted by canonical form.
pub fn rank_at_most_3(n: usize) -> Result<Vec<Matroid>> {
    if n == 0 {
        return Err(Error::InvalidParameters(
            "the corpus starts at one element".into(),
        ));
    }
    let simple = linear_spaces_up_to(n, false)?;
    let mut out = vec![uniform(0, n)?];
    for (idx, level) in simple.iter().enumerate() {
        let points = idx + 1;
        for s in level {
            for loops in 0..=n - points {
                let mut parts = Vec::new();
                compositions(n - loops, points, &mut parts, &mut Vec::new());
                out.extend(parts.iter().map(|sizes| blow_up(s, sizes, loops)));
            }
        }
    }
    Ok(dedup_sorted(out))
}

/// Every matroid on exactly `n <= 7` elements, one per isomorphism class,
/// sorted by canonical form.
pub fn all_matroids(n: usize) -> Result<Vec<Matroid>> {
    if n > ALL_MATROIDS_CAP {
        return Err(Error::TooLarge {
            n,
            cap: ALL_MATROIDS_CAP,
            what: "complete matroid corpus".into(),
        });
    }
    let low = rank_at_most_3(n)?;
    let duals: Vec<Matroid> = low.iter().map(Matroid::dual).collect();
    Ok(dedup_sorted(low.into_iter().chain(duals)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::flats::long_lines;

    #[test]
    fn linear_space_counts() {
        // simple matroids of rank <= 3 by size
        let counts: Vec<usize> = linear_spaces_up_to(8, false)
            .unwrap()
            .iter()
            .map(Vec::len)
            .collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 10, 24, 69]);
    }

    #[test]
    fn simple_rank3_counts() {
        let counts: Vec<usize> = (3..=7)
            .map(|n| simple_rank3(n, false).unwrap().len())
            .collect();
        assert_eq!(counts, vec![1, 2, 4, 9, 23]);
    }

    #[test]
    fn fano_plane_present() {
        let fano = simple_rank3(7, false)
            .unwrap()
            .into_iter()
            .filter(|m| long_lines(m).len() == 7)
            .count();
        assert_eq!(fano, 1);
    }

    #[test]
    fn cap_is_enforced() {
        assert!(matches!(
            linear_spaces_up_to(9, false),
            Err(Error::TooLarge { .. })
        ));
    }

    #[test]
    fn all_matroid_counts() {
        let counts: Vec<usize> = (1..=6).map(|n| all_matroids(n).unwrap().len()).collect();
        assert_eq!(counts, vec![2, 4, 8, 17, 38, 98]);
    }

    #[test]
    fn corpora_are_valid_and_distinct() {
        for m in rank_at_most_3(5).unwrap() {
            assert!(m.check_basis_exchange());
            assert!(m.rank() <= 3);
        }
    }
}
