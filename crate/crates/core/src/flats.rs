//! Lattice of flats, points, lines, and hyperplanes.

use std::collections::HashSet;

use crate::matroid::Matroid;
use crate::subset::Subset;

/// All flats of a matroid grouped by rank.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlatLattice {
    n: usize,
    flats_by_rank: Vec<Vec<Subset>>,
}

impl FlatLattice {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rank(&self) -> usize {
        self.flats_by_rank.len() - 1
    }

    /// Flats of rank `k`, sorted by bit mask.
    pub fn of_rank(&self, k: usize) -> &[Subset] {
        self.flats_by_rank.get(k).map_or(&[], Vec::as_slice)
    }

    pub fn by_rank(&self) -> &[Vec<Subset>] {
        &self.flats_by_rank
    }

    /// Every flat, lowest rank first.
    pub fn iter(&self) -> impl Iterator<Item = (usize, Subset)> + '_ {
        self.flats_by_rank
            .iter()
            .enumerate()
            .flat_map(|(k, fs)| fs.iter().map(move |&f| (k, f)))
    }

    pub fn len(&self) -> usize {
        self.flats_by_rank.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn contains(&self, s: Subset) -> bool {
        self.flats_by_rank
            .iter()
            .any(|fs| fs.binary_search(&s).is_ok())
    }

    /// Check the three flat axioms: the ground set is a flat, flats are closed
    /// under intersection, and every flat has a unique minimal cover through
    /// each outside element.
    pub fn satisfies_flat_axioms(&self) -> bool {
        let full = Subset::full(self.n);
        if !self.contains(full) {
            return false;
        }
        let all: Vec<Subset> = self.iter().map(|(_, f)| f).collect();
        for &a in &all {
            for &b in &all {
                if !self.contains(a & b) {
                    return false;
                }
            }
        }
        for &f in &all {
            for e in f.complement(self.n) {
                let target = f.with(e);
                let containing: Vec<Subset> = all
                    .iter()
                    .copied()
                    .filter(|g| target.is_subset(*g))
                    .collect();
                let minimal = containing
                    .iter()
                    .filter(|g| !containing.iter().any(|h| h != *g && h.is_subset(**g)))
                    .count();
                if minimal != 1 {
                    return false;
                }
            }
        }
        true
    }
}

/// Compute the lattice of flats by closing upward from the closure of the empty set.
pub fn flat_lattice(m: &Matroid) -> FlatLattice {
    let n = m.n();
    let mut levels: Vec<Vec<Subset>> = vec![vec![m.cl(Subset::EMPTY)]];
    for _ in 0..m.rank() {
        let mut next: HashSet<Subset> = HashSet::new();
        for &f in levels.last().unwrap() {
            let mut outside = f.complement(n);
            while let Some(e) = outside.first() {
                let g = m.cl(f.with(e));
                outside = outside.difference(g);
                next.insert(g);
            }
        }
        let mut next: Vec<Subset> = next.into_iter().collect();
        next.sort_unstable();
        levels.push(next);
    }
    FlatLattice {
        n,
        flats_by_rank: levels,
    }
}

/// Rank-1 flats.
pub fn points(m: &Matroid) -> Vec<Subset> {
    let loops = m.loops();
    let mut pts: Vec<Subset> = m
        .parallel_classes()
        .into_iter()
        .map(|c| c | loops)
        .collect();
    pts.sort_unstable();
    pts
}

/// Number of points of `m` contained in `s`.
pub fn points_in(m: &Matroid, s: Subset) -> usize {
    m.parallel_classes()
        .iter()
        .filter(|c| c.is_subset(s))
        .count()
}

/// Lines (rank-2 flats) containing at least three points.
pub fn long_lines(m: &Matroid) -> Vec<Subset> {
    if m.rank() < 2 {
        return Vec::new();
    }
    let classes = m.parallel_classes();
    flat_lattice(m)
        .of_rank(2)
        .iter()
        .copied()
        .filter(|l| classes.iter().filter(|c| c.is_subset(*l)).count() >= 3)
        .collect()
}

/// Long lines of `m` contained in `s`.
pub fn long_lines_in(m: &Matroid, s: Subset) -> Vec<Subset> {
    long_lines(m)
        .into_iter()
        .filter(|l| l.is_subset(s))
        .collect()
}

/// Rank-(r-1) flats.
pub fn hyperplanes(m: &Matroid) -> Vec<Subset> {
    if m.rank() == 0 {
        return Vec::new();
    }
    flat_lattice(m).of_rank(m.rank() - 1).to_vec()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{catalog, uniform, CatalogId};

    fn brute_flats(m: &Matroid) -> Vec<Vec<Subset>> {
        let mut out = vec![Vec::new(); m.rank() + 1];
        for s in m.ground().subsets() {
            if m.is_flat(s) {
                out[m.r(s)].push(s);
            }
        }
        out
    }

    #[test]
    fn uniform_line_lattice() {
        for l in 2..=6 {
            let u = uniform(2, l).unwrap();
            let lat = flat_lattice(&u);
            assert_eq!(lat.of_rank(0), &[Subset::EMPTY]);
            assert_eq!(lat.of_rank(1).len(), l);
            assert!(lat.of_rank(1).iter().all(|f| f.len() == 1));
            assert_eq!(lat.of_rank(2), &[u.ground()]);
        }
    }

    #[test]
    fn single_coloop_lattice() {
        let u = uniform(1, 1).unwrap();
        let lat = flat_lattice(&u);
        assert_eq!(lat.len(), 2);
        assert_eq!(lat.of_rank(0), &[Subset::EMPTY]);
        assert_eq!(lat.of_rank(1), &[u.ground()]);
    }

    #[test]
    fn k4_lines_match_brute_force() {
        let m = catalog(CatalogId::M4);
        let lat = flat_lattice(&m);
        assert_eq!(lat.by_rank(), brute_flats(&m).as_slice());
        let lines = lat.of_rank(2);
        assert_eq!(lines.iter().filter(|l| l.len() == 3).count(), 4);
        assert_eq!(lines.iter().filter(|l| l.len() == 2).count(), 3);
        assert_eq!(lines.len(), 7);
        assert!(lat.satisfies_flat_axioms());
    }

    #[test]
    fn long_line_counts() {
        assert_eq!(long_lines(&catalog(CatalogId::M1)).len(), 4);
        assert_eq!(long_lines(&catalog(CatalogId::M6)).len(), 5);
        assert!(long_lines(&uniform(3, 3).unwrap()).is_empty());
    }

    #[test]
    fn long_lines_count_points_not_elements() {
        // U_{2,3} with a parallel copy of element 0 added: 4 elements, 3 points
        let u = uniform(2, 3).unwrap();
        let m = Matroid::from_rank_fn(4, |s| {
            let t = if s.contains(3) {
                s.without(3).with(0)
            } else {
                s
            };
            u.r(t)
        })
        .unwrap();
        assert_eq!(long_lines(&m).len(), 1);
        let two_points = m.restrict(Subset::from_elements([0, 1, 3]));
        assert!(long_lines(&two_points).is_empty());
    }
}
