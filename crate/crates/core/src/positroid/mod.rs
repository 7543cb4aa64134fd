//! Positroid recognition and generation.
//!
//! Two independent routes: the flat-interval criterion ([`bonin_check`]),
//! which searches for a cyclic order making every relevant flat an interval,
//! and generation from decorated permutations through Grassmann necklaces
//! ([`necklace`], [`enumerate`]).

pub mod enumerate;
pub mod necklace;

pub use enumerate::{
    enumerate_positroids, enumerate_positroids_with_stats, EnumerationStats, PositroidFilter,
    ENUMERATION_CAP,
};
pub use necklace::{
    decorated_permutation_from_necklace, necklace_from_decorated_permutation, necklace_of,
    positroid_from_decorated_permutation, positroid_from_necklace, DecoratedPermutation,
    FixedPointKind, GrassmannNecklace,
};

use std::fmt;

use crate::connectivity::{components, contraction_connected, is_connected, restriction_connected};
use crate::error::{Error, Result};
use crate::flats::flat_lattice;
use crate::matroid::Matroid;
use crate::subset::Subset;

/// A cyclic arrangement of the ground set, stored as one linear reading.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclicOrdering {
    order: Vec<usize>,
}

impl CyclicOrdering {
    pub fn new(order: Vec<usize>) -> Result<Self> {
        let n = order.len();
        let seen: Subset = order.iter().copied().filter(|&e| e < n).collect();
        if seen.len() != n {
            return Err(Error::InvalidPermutation(format!(
                "{order:?} does not list 0..{n} exactly once"
            )));
        }
        Ok(CyclicOrdering { order })
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    /// `s` is an arc: walking once around the cycle, membership changes at
    /// most twice.
    pub fn is_cyclic_interval(&self, s: Subset) -> bool {
        let n = self.order.len();
        let changes = (0..n)
            .filter(|&i| s.contains(self.order[i]) != s.contains(self.order[(i + 1) % n]))
            .count();
        changes <= 2
    }

    /// Does every relevant flat of `m` form an arc?
    pub fn validates(&self, m: &Matroid) -> Result<bool> {
        if self.order.len() != m.n() {
            return Ok(false);
        }
        Ok(relevant_flats(m)?
            .into_iter()
            .all(|f| self.is_cyclic_interval(f)))
    }
}

impl fmt::Display for CyclicOrdering {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.order.iter().map(|e| e.to_string()).collect();
        f.write_str(&parts.join(" "))
    }
}

fn require_connected(m: &Matroid) -> Result<()> {
    if !is_connected(m) {
        return Err(Error::InvalidInput("matroid is not connected".into()));
    }
    Ok(())
}

/// Proper nonempty flats `F` with both `M|F` and `M/F` connected.
pub fn relevant_flats(m: &Matroid) -> Result<Vec<Subset>> {
    require_connected(m)?;
    let full = m.ground();
    Ok(flat_lattice(m)
        .iter()
        .map(|(_, f)| f)
        .filter(|&f| !f.is_empty() && f != full)
        .filter(|&f| restriction_connected(m, f) && contraction_connected(m, f))
        .collect())
}

struct Search {
    n: usize,
    groups: Vec<Subset>,
    order: Vec<usize>,
}

impl Search {
    /// `placed` holds the elements already in `order`; every group that has
    /// started must be finished before any outside element appears.
    fn extend(&mut self, placed: Subset) -> bool {
        if self.order.len() == self.n {
            // a reading and its reverse describe the same cycle
            return self.n < 3 || self.order[1] < self.order[self.n - 1];
        }
        let open: Subset = self
            .groups
            .iter()
            .filter(|g| !g.is_disjoint(placed) && !g.is_subset(placed))
            .fold(Subset::full(self.n), |acc, g| acc & *g);
        let candidates = Subset::full(self.n).difference(placed) & open;
        for x in candidates {
            self.order.push(x);
            if self.extend(placed.with(x)) {
                return true;
            }
            self.order.pop();
        }
        false
    }
}

/// Search for a cyclic order in which every relevant flat is an arc.
///
/// Element 0 is placed first. Then each relevant flat `F`, or its complement
/// when `F` holds 0, must occupy consecutive positions of the remaining
/// linear reading.
pub fn bonin_check(m: &Matroid) -> Result<Option<CyclicOrdering>> {
    require_connected(m)?;
    let n = m.n();
    if n <= 3 {
        // every subset of a cycle of length at most three is an arc
        return Ok(Some(CyclicOrdering {
            order: (0..n).collect(),
        }));
    }
    let rest = m.ground().without(0);
    let mut groups: Vec<Subset> = relevant_flats(m)?
        .into_iter()
        .map(|f| {
            if f.contains(0) {
                m.ground().difference(f)
            } else {
                f
            }
        })
        .filter(|g| g.len() >= 2 && *g != rest)
        .collect();
    groups.sort_unstable();
    groups.dedup();
    let mut search = Search {
        n,
        groups,
        order: vec![0],
    };
    if search.extend(Subset::singleton(0)) {
        let witness = CyclicOrdering {
            order: search.order,
        };
        debug_assert!(witness.validates(m).unwrap_or(false));
        Ok(Some(witness))
    } else {
        Ok(None)
    }
}

/// Componentwise positroid test; loops and coloops pass.
pub fn is_positroid(m: &Matroid) -> bool {
    positroid_ordering(m).is_some()
}

/// A cyclic order of the whole ground set placing each component on its own
/// arc, ordered by that component's witness; `None` if some component fails.
pub fn positroid_ordering(m: &Matroid) -> Option<CyclicOrdering> {
    let mut order = Vec::with_capacity(m.n());
    for part in components(m) {
        let elems = part.to_vec();
        if elems.len() == 1 {
            order.push(elems[0]);
            continue;
        }
        let witness = bonin_check(&m.restrict(part)).expect("components are connected")?;
        order.extend(witness.order().iter().map(|&i| elems[i]));
    }
    Some(CyclicOrdering { order })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{catalog, extremal_family, uniform, whirl_like, CatalogId};

    fn s(xs: &[usize]) -> Subset {
        Subset::from_elements(xs.iter().copied())
    }

    /// Brute force over all linear orders.
    fn brute_positroid(m: &Matroid) -> bool {
        let flats = relevant_flats(m).unwrap();
        let mut perm: Vec<usize> = (0..m.n()).collect();
        loop {
            let c = CyclicOrdering::new(perm.clone()).unwrap();
            if flats.iter().all(|f| c.is_cyclic_interval(*f)) {
                return true;
            }
            if !next_permutation(&mut perm) {
                return false;
            }
        }
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

    #[test]
    fn uniform_line_relevant_flats_are_points() {
        for l in 3..=6 {
            let u = uniform(2, l).unwrap();
            let flats = relevant_flats(&u).unwrap();
            assert_eq!(flats.len(), l);
            assert!(flats.iter().all(|f| f.len() == 1));
            assert!(bonin_check(&u).unwrap().is_some());
        }
    }

    #[test]
    fn disconnected_input_rejected() {
        let m = uniform(2, 2).unwrap();
        assert!(matches!(relevant_flats(&m), Err(Error::InvalidInput(_))));
        assert!(matches!(bonin_check(&m), Err(Error::InvalidInput(_))));
        assert!(is_positroid(&m));
    }

    #[test]
    fn extremal_three_two() {
        let m = extremal_family(3, 2).unwrap();
        let flats = relevant_flats(&m).unwrap();
        assert!(flats.contains(&s(&[0, 1, 2])));
        assert!(flats.contains(&s(&[2, 3, 4])));
        let w = bonin_check(&m).unwrap().unwrap();
        assert!(w.validates(&m).unwrap());
        let natural = CyclicOrdering::new(vec![0, 1, 2, 3, 4]).unwrap();
        assert!(natural.validates(&m).unwrap());
    }

    #[test]
    fn k4_flats_and_failure() {
        let m = catalog(CatalogId::M4);
        let flats = relevant_flats(&m).unwrap();
        assert_eq!(flats.iter().filter(|f| f.len() == 1).count(), 6);
        assert_eq!(flats.iter().filter(|f| f.len() == 3).count(), 4);
        assert_eq!(flats.len(), 10);
        assert!(bonin_check(&m).unwrap().is_none());
        assert!(!brute_positroid(&m));
    }

    #[test]
    fn catalog_entries_are_not_positroids() {
        for id in CatalogId::ALL {
            assert!(!is_positroid(&catalog(id)), "{id}");
        }
    }

    #[test]
    fn whirl_is_positroid() {
        assert!(is_positroid(&whirl_like(3, 5).unwrap()));
    }

    #[test]
    fn search_agrees_with_brute_force_on_small_matroids() {
        for m in crate::corpus::all_matroids(6).unwrap() {
            if !is_connected(&m) {
                continue;
            }
            let fast = bonin_check(&m).unwrap();
            assert_eq!(fast.is_some(), brute_positroid(&m));
            if let Some(w) = fast {
                assert!(w.validates(&m).unwrap());
            }
        }
    }

    #[test]
    fn ordering_validation_rejects_bad_orders() {
        let m = extremal_family(3, 2).unwrap();
        let bad = CyclicOrdering::new(vec![0, 3, 1, 4, 2]).unwrap();
        assert!(!bad.validates(&m).unwrap());
        assert!(CyclicOrdering::new(vec![0, 0, 1]).is_err());
    }

    #[test]
    fn componentwise_ordering_covers_ground_set() {
        let m = uniform(2, 4)
            .unwrap()
            .direct_sum(&catalog(CatalogId::M4))
            .unwrap();
        assert!(!is_positroid(&m));
        let p = uniform(2, 4)
            .unwrap()
            .direct_sum(&uniform(0, 1).unwrap())
            .unwrap();
        let w = positroid_ordering(&p).unwrap();
        assert_eq!(w.len(), 5);
    }
}
