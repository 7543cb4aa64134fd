//! Minor search: general minor-isomorphism, the `U_{2,k}` line-minor test,
//! the rank-3 and rank-4 configuration detectors, and catalog-minor search.

use std::fmt;

use crate::constructions::{catalog, CatalogId};
use crate::error::{Error, Result};
use crate::flats::{flat_lattice, long_lines};
use crate::iso::{are_isomorphic, IsoCertificate};
use crate::matroid::Matroid;
use crate::subset::{k_subsets_of, Subset};

/// `host / contracted \ deleted`, relabeled compactly, maps onto the target by `iso`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinorWitness {
    pub contracted: Subset,
    pub deleted: Subset,
    pub iso: IsoCertificate,
}

impl MinorWitness {
    /// Elements of the host that survive, in the order the certificate indexes them.
    pub fn kept(&self, host: &Matroid) -> Subset {
        host.ground().difference(self.contracted | self.deleted)
    }

    pub fn verify(&self, host: &Matroid, target: &Matroid) -> bool {
        if !self.contracted.is_disjoint(self.deleted)
            || !(self.contracted | self.deleted).fits(host.n())
        {
            return false;
        }
        let minor = host.minor(self.contracted, self.kept(host));
        minor.n() == target.n() && self.iso.verify(&minor, target)
    }
}

impl fmt::Display for MinorWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "contract {} delete {} mapping {:?}",
            self.contracted,
            self.deleted,
            self.iso.mapping()
        )
    }
}

fn line_count(m: &Matroid) -> usize {
    if m.rank() < 2 {
        0
    } else {
        long_lines(m).len()
    }
}

/// Search for disjoint `C, D` with `M / C \ D ≅ N`.
///
/// Only independent `C` with `|C| = r(M) - r(N)` are tried: any minor can be
/// reached that way.
pub fn has_minor(m: &Matroid, target: &Matroid) -> Option<MinorWitness> {
    if target.n() > m.n() || target.rank() > m.rank() {
        return None;
    }
    let corank = m.rank() - target.rank();
    if m.n() - target.n() < corank {
        return None;
    }
    let full = m.ground();
    let target_simple = target.is_simple();
    let target_points = target.num_points();
    let target_lines = line_count(target);
    let target_loops = target.loops().len();
    for c in k_subsets_of(full, corank) {
        if !m.is_independent(c) {
            continue;
        }
        let rest = full.difference(c);
        let rc = m.r(c);
        // inside M/C: loops are cl(C) - C
        let loops_here = m.cl(c).difference(c);
        for keep in k_subsets_of(rest, target.n()) {
            if m.r(keep | c) - rc != target.rank() {
                continue;
            }
            if (keep & loops_here).len() != target_loops {
                continue;
            }
            let minor = m.minor(c, keep);
            if minor.bases().len() != target.bases().len() {
                continue;
            }
            if target_simple && !minor.is_simple() {
                continue;
            }
            if minor.num_points() != target_points || line_count(&minor) != target_lines {
                continue;
            }
            if let Some(iso) = are_isomorphic(&minor, target) {
                return Some(MinorWitness {
                    contracted: c,
                    deleted: rest.difference(keep),
                    iso,
                });
            }
        }
    }
    None
}

/// Minor search over every pair of disjoint sets, with no restriction on the
/// contracted set. Exponential in `3^n`; meant as a reference for small hosts.
pub fn has_minor_unrestricted(m: &Matroid, target: &Matroid) -> Option<MinorWitness> {
    let full = m.ground();
    for removed in full.subsets() {
        if full.difference(removed).len() != target.n() {
            continue;
        }
        for c in removed.subsets() {
            let keep = full.difference(removed);
            let minor = m.minor(c, keep);
            if let Some(iso) = are_isomorphic(&minor, target) {
                return Some(MinorWitness {
                    contracted: c,
                    deleted: removed.difference(c),
                    iso,
                });
            }
        }
    }
    None
}

/// Does `m` have a `U_{2,k}` minor?
///
/// Such a minor exists iff some flat `F` of rank `r - 2` lies in at least `k`
/// hyperplanes, since the points of `M / F` are the hyperplanes through `F`.
pub fn has_uniform_line_minor(m: &Matroid, k: usize) -> bool {
    let r = m.rank();
    if r < 2 {
        return false;
    }
    let lattice = flat_lattice(m);
    let hyper = lattice.of_rank(r - 1);
    lattice
        .of_rank(r - 2)
        .iter()
        .any(|f| hyper.iter().filter(|h| f.is_subset(**h)).count() >= k)
}

/// A long line with three of its points each on some other long line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LineConfiguration {
    pub line: Subset,
    pub points: [usize; 3],
}

/// A long line `L`, three of its points `e_i`, and three planes `P_i` through
/// `L` such that `e_i` lies on a long line inside `P_i` other than `L`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlaneConfiguration {
    pub line: Subset,
    pub points: [usize; 3],
    pub planes: [Subset; 3],
}

fn require_simple_rank(m: &Matroid, rank: usize) -> Result<()> {
    if m.rank() != rank {
        return Err(Error::InvalidInput(format!(
            "expected a rank-{rank} matroid, got rank {}",
            m.rank()
        )));
    }
    if !m.is_simple() {
        return Err(Error::InvalidInput("expected a simple matroid".into()));
    }
    Ok(())
}

/// Rank-3 detector: a long line `L` carrying three points that each lie on
/// at least two long lines.
pub fn prop31_hypothesis(m: &Matroid) -> Result<Option<LineConfiguration>> {
    require_simple_rank(m, 3)?;
    let lines = long_lines(m);
    for &line in &lines {
        let busy: Vec<usize> = line
            .iter()
            .filter(|&e| lines.iter().filter(|l| l.contains(e)).count() >= 2)
            .collect();
        if busy.len() >= 3 {
            return Ok(Some(LineConfiguration {
                line,
                points: [busy[0], busy[1], busy[2]],
            }));
        }
    }
    Ok(None)
}

/// Rank-4 detector.
pub fn prop32_hypothesis(m: &Matroid) -> Result<Option<PlaneConfiguration>> {
    require_simple_rank(m, 4)?;
    let lines = long_lines(m);
    let planes = flat_lattice(m).of_rank(3).to_vec();
    for &line in &lines {
        // for each plane through L, the points of L that lie on another long line in it
        let candidates: Vec<(Subset, Subset)> = planes
            .iter()
            .copied()
            .filter(|p| line.is_subset(*p))
            .map(|p| {
                let good: Subset = lines
                    .iter()
                    .filter(|l| **l != line && l.is_subset(p))
                    .fold(Subset::EMPTY, |acc, l| acc | (*l & line));
                (p, good)
            })
            .filter(|(_, good)| !good.is_empty())
            .collect();
        if let Some(w) = match_three(line, &candidates) {
            return Ok(Some(w));
        }
    }
    Ok(None)
}

fn match_three(line: Subset, candidates: &[(Subset, Subset)]) -> Option<PlaneConfiguration> {
    let k = candidates.len();
    for a in 0..k {
        for b in a + 1..k {
            for c in b + 1..k {
                let trio = [candidates[a], candidates[b], candidates[c]];
                for e0 in trio[0].1 {
                    for e1 in trio[1].1.without(e0) {
                        if let Some(e2) = trio[2].1.without(e0).without(e1).first() {
                            return Some(PlaneConfiguration {
                                line,
                                points: [e0, e1, e2],
                                planes: [trio[0].0, trio[1].0, trio[2].0],
                            });
                        }
                    }
                }
            }
        }
    }
    None
}

/// First catalog entry, in search order, that is a minor of `m`.
pub fn find_catalog_minor(m: &Matroid) -> Option<(CatalogId, MinorWitness)> {
    find_minor_among(m, &CatalogId::SEARCH_ORDER)
}

/// First entry of `ids` (in the given order) that is a minor of `m`.
pub fn find_minor_among(m: &Matroid, ids: &[CatalogId]) -> Option<(CatalogId, MinorWitness)> {
    // every catalog entry has a U_{2,3} minor
    if !has_uniform_line_minor(m, 3) {
        return None;
    }
    ids.iter().find_map(|&id| {
        let target = catalog(id);
        has_minor(m, &target).map(|w| (id, w))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{extremal_family, uniform};

    fn s(xs: &[usize]) -> Subset {
        Subset::from_elements(xs.iter().copied())
    }

    #[test]
    fn self_minor_is_identity_shaped() {
        let m = catalog(CatalogId::M7);
        let w = has_minor(&m, &m).unwrap();
        assert!(w.contracted.is_empty() && w.deleted.is_empty());
        assert!(w.verify(&m, &m));
    }

    #[test]
    fn size_obstruction() {
        assert!(has_minor(&uniform(2, 4).unwrap(), &catalog(CatalogId::M4)).is_none());
    }

    #[test]
    fn nested_grid_configurations_are_not_minors_of_each_other() {
        // both have nine elements and rank three, so only isomorphism could work
        let m2 = catalog(CatalogId::M2);
        let m3 = catalog(CatalogId::M3);
        assert!(has_minor(&m3, &m2).is_none());
        assert!(has_minor(&m2, &m3).is_none());
        let top_removed = m3.delete(s(&[6, 7, 8])).unwrap();
        assert_eq!(top_removed.n(), 6);
        assert_eq!(long_lines(&top_removed), vec![s(&[0, 1, 2]), s(&[3, 4, 5])]);
    }

    #[test]
    fn deletion_witness_verifies() {
        let m6 = catalog(CatalogId::M6);
        let m5 = catalog(CatalogId::M5);
        let u = uniform(2, 4).unwrap();
        let w = has_minor(&m6, &u).unwrap();
        assert!(w.verify(&m6, &u));
        assert!(has_minor(&m5, &uniform(2, 4).unwrap()).is_some());
    }

    #[test]
    fn line_minor_examples() {
        assert!(has_uniform_line_minor(&uniform(2, 4).unwrap(), 4));
        assert!(!has_uniform_line_minor(&extremal_family(3, 2).unwrap(), 4));
        assert!(!has_uniform_line_minor(&catalog(CatalogId::M4), 4));
        assert!(has_uniform_line_minor(&uniform(3, 4).unwrap(), 3));
        assert!(!has_uniform_line_minor(&uniform(1, 5).unwrap(), 2));
    }

    #[test]
    fn k4_corank_two_flats_brute_force() {
        let m = catalog(CatalogId::M4);
        let max = m
            .ground()
            .subsets()
            .filter(|f| m.is_flat(*f) && m.r(*f) == 1)
            .map(|f| m.contract(f).unwrap().num_points())
            .max()
            .unwrap();
        assert_eq!(max, 3);
    }

    #[test]
    fn rank3_detector_examples() {
        let w = prop31_hypothesis(&catalog(CatalogId::M1)).unwrap().unwrap();
        assert_eq!(w.line, s(&[0, 1, 2]));
        assert_eq!(w.points, [0, 1, 2]);
        assert!(prop31_hypothesis(&extremal_family(3, 4).unwrap())
            .unwrap()
            .is_none());
        assert!(prop31_hypothesis(&uniform(3, 6).unwrap())
            .unwrap()
            .is_none());
        assert!(matches!(
            prop31_hypothesis(&uniform(2, 4).unwrap()),
            Err(Error::InvalidInput(_))
        ));
    }

    #[test]
    fn rank4_detector_examples() {
        let w = prop32_hypothesis(&catalog(CatalogId::Fig2))
            .unwrap()
            .unwrap();
        assert_eq!(w.line, s(&[0, 1, 2]));
        let mut planes = w.planes.to_vec();
        planes.sort_unstable();
        assert_eq!(
            planes,
            vec![
                s(&[0, 1, 2, 3, 4]),
                s(&[0, 1, 2, 5, 6]),
                s(&[0, 1, 2, 7, 8])
            ]
        );
        assert!(prop32_hypothesis(&uniform(4, 6).unwrap())
            .unwrap()
            .is_none());
        assert!(prop32_hypothesis(&extremal_family(4, 2).unwrap())
            .unwrap()
            .is_none());
        assert!(prop32_hypothesis(&catalog(CatalogId::M1)).is_err());
    }

    #[test]
    fn catalog_entries_find_themselves() {
        for id in CatalogId::ALL {
            let (found, w) = find_catalog_minor(&catalog(id)).unwrap();
            assert_eq!(found, id, "{id}");
            assert!(w.verify(&catalog(id), &catalog(found)));
        }
    }

    #[test]
    fn extremal_family_has_no_catalog_minor() {
        assert!(find_catalog_minor(&extremal_family(5, 2).unwrap()).is_none());
    }

    #[test]
    fn restricted_search_matches_unrestricted_on_small_cases() {
        let hosts = [
            uniform(3, 6).unwrap(),
            catalog(CatalogId::M4),
            extremal_family(3, 2).unwrap(),
            uniform(2, 3)
                .unwrap()
                .direct_sum(&uniform(1, 2).unwrap())
                .unwrap(),
        ];
        let targets = [
            uniform(2, 4).unwrap(),
            uniform(2, 3).unwrap(),
            uniform(1, 2).unwrap(),
            uniform(0, 2).unwrap(),
            uniform(2, 2)
                .unwrap()
                .direct_sum(&uniform(0, 1).unwrap())
                .unwrap(),
        ];
        for h in &hosts {
            for t in &targets {
                let fast = has_minor(h, t);
                let slow = has_minor_unrestricted(h, t);
                assert_eq!(fast.is_some(), slow.is_some());
                if let Some(w) = fast {
                    assert!(w.verify(h, t));
                }
            }
        }
    }
}
