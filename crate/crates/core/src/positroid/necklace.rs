//! Decorated permutations, Grassmann necklaces, and the positroids they define.
//!
//! Conventions: write `d(i, x) = (x - i) mod n` for the position of `x` in the
//! order starting at `i`. For a decorated permutation `π`, a non-fixed `j`
//! belongs to `I_i` iff `d(i, j) < d(i, π⁻¹(j))`; a fixed point belongs to
//! every `I_i` if it is marked as a coloop and to none if marked as a loop.
//! Consecutive terms then satisfy `I_{i+1} = I_i - {i} ∪ {π(i)}` whenever
//! `i ∈ I_i`, so `π(i)` is read off as the element that enters.

use std::fmt;

use crate::error::{Error, Result};
use crate::matroid::Matroid;
use crate::subset::{k_subsets, Subset, MAX_GROUND};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FixedPointKind {
    Loop,
    Coloop,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DecoratedPermutation {
    perm: Vec<usize>,
    /// Elements whose fixed-point decoration is `Coloop`.
    coloops: Subset,
}

impl DecoratedPermutation {
    /// `decoration[i]` is read only when `perm[i] == i`.
    pub fn new(perm: Vec<usize>, decoration: &[FixedPointKind]) -> Result<Self> {
        let n = perm.len();
        if n > MAX_GROUND {
            return Err(Error::TooLarge {
                n,
                cap: MAX_GROUND,
                what: "decorated permutation".into(),
            });
        }
        let image: Subset = perm.iter().copied().filter(|&x| x < n).collect();
        if image.len() != n {
            return Err(Error::InvalidPermutation(format!(
                "{perm:?} is not a bijection"
            )));
        }
        let fixed: Vec<usize> = (0..n).filter(|&i| perm[i] == i).collect();
        if decoration.len() != n && decoration.len() != fixed.len() {
            return Err(Error::InvalidPermutation(format!(
                "expected a decoration per element or per fixed point, got {}",
                decoration.len()
            )));
        }
        let coloops = if decoration.len() == n {
            fixed
                .iter()
                .copied()
                .filter(|&i| decoration[i] == FixedPointKind::Coloop)
                .collect()
        } else {
            fixed
                .iter()
                .zip(decoration)
                .filter(|(_, &k)| k == FixedPointKind::Coloop)
                .map(|(&i, _)| i)
                .collect()
        };
        Ok(DecoratedPermutation { perm, coloops })
    }

    pub(crate) fn from_parts_unchecked(perm: Vec<usize>, coloops: Subset) -> Self {
        DecoratedPermutation { perm, coloops }
    }

    pub fn n(&self) -> usize {
        self.perm.len()
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn fixed_points(&self) -> Subset {
        (0..self.n()).filter(|&i| self.perm[i] == i).collect()
    }

    pub fn decoration(&self, i: usize) -> Option<FixedPointKind> {
        if self.perm.get(i) != Some(&i) {
            return None;
        }
        Some(if self.coloops.contains(i) {
            FixedPointKind::Coloop
        } else {
            FixedPointKind::Loop
        })
    }

    /// Rank of the associated positroid: anti-exceedances `π(a) < a` plus coloops.
    pub fn rank(&self) -> usize {
        (0..self.n()).filter(|&a| self.perm[a] < a).count() + self.coloops.len()
    }
}

impl fmt::Display for DecoratedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = (0..self.n())
            .map(|i| match self.decoration(i) {
                Some(FixedPointKind::Loop) => format!("{i}(loop)"),
                Some(FixedPointKind::Coloop) => format!("{i}(coloop)"),
                None => self.perm[i].to_string(),
            })
            .collect();
        write!(f, "[{}]", parts.join(" "))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GrassmannNecklace {
    terms: Vec<Subset>,
}

impl GrassmannNecklace {
    /// Validates: equal sizes and `I_{i+1} ⊇ I_i - {i}` cyclically.
    pub fn new(terms: Vec<Subset>) -> Result<Self> {
        let n = terms.len();
        if n == 0 || n > MAX_GROUND {
            return Err(Error::InvalidNecklace(format!("necklace of length {n}")));
        }
        let r = terms[0].len();
        for (i, t) in terms.iter().enumerate() {
            if !t.fits(n) {
                return Err(Error::InvalidNecklace(format!(
                    "I_{i} = {t} leaves the ground set"
                )));
            }
            if t.len() != r {
                return Err(Error::InvalidNecklace(format!(
                    "I_{i} = {t} has size {}, expected {r}",
                    t.len()
                )));
            }
            let next = terms[(i + 1) % n];
            if !t.without(i).is_subset(next) {
                return Err(Error::InvalidNecklace(format!(
                    "I_{} = {next} does not contain I_{i} - {{{i}}}",
                    (i + 1) % n
                )));
            }
        }
        Ok(GrassmannNecklace { terms })
    }

    pub fn n(&self) -> usize {
        self.terms.len()
    }

    pub fn rank(&self) -> usize {
        self.terms[0].len()
    }

    pub fn terms(&self) -> &[Subset] {
        &self.terms
    }
}

#[inline]
fn dist(i: usize, x: usize, n: usize) -> usize {
    (x + n - i) % n
}

pub fn necklace_from_decorated_permutation(dp: &DecoratedPermutation) -> GrassmannNecklace {
    let n = dp.n();
    let mut inv = vec![0; n];
    for (a, &b) in dp.perm.iter().enumerate() {
        inv[b] = a;
    }
    let terms = (0..n)
        .map(|i| {
            (0..n)
                .filter(|&j| {
                    if inv[j] == j {
                        dp.coloops.contains(j)
                    } else {
                        dist(i, j, n) < dist(i, inv[j], n)
                    }
                })
                .collect()
        })
        .collect();
    GrassmannNecklace { terms }
}

pub fn decorated_permutation_from_necklace(nk: &GrassmannNecklace) -> DecoratedPermutation {
    let n = nk.n();
    let mut perm = vec![0; n];
    let mut coloops = Subset::EMPTY;
    for (i, slot) in perm.iter_mut().enumerate() {
        let cur = nk.terms[i];
        if !cur.contains(i) {
            *slot = i;
            continue;
        }
        let entering = nk.terms[(i + 1) % n].difference(cur.without(i));
        let j = entering.first().unwrap_or(i);
        if j == i {
            coloops = coloops.with(i);
        }
        *slot = j;
    }
    DecoratedPermutation { perm, coloops }
}

/// Is `b` above `lower` in the Gale order that starts at `i`? Checked as: no
/// initial segment of that order holds more of `b` than of `lower`.
fn gale_above(b: Subset, lower: Subset, i: usize, n: usize) -> bool {
    let (mut nb, mut nl) = (0usize, 0usize);
    for step in 0..n {
        let x = (i + step) % n;
        nb += usize::from(b.contains(x));
        nl += usize::from(lower.contains(x));
        if nb > nl {
            return false;
        }
    }
    true
}

/// Bases: the `r`-subsets lying above every `I_i` in the `i`-th Gale order.
pub fn positroid_from_necklace(nk: &GrassmannNecklace) -> Matroid {
    let n = nk.n();
    let bases: Vec<Subset> = k_subsets(n, nk.rank())
        .filter(|&b| {
            nk.terms
                .iter()
                .enumerate()
                .all(|(i, &t)| gale_above(b, t, i, n))
        })
        .collect();
    Matroid::from_bases_unchecked(n, bases)
}

pub fn positroid_from_decorated_permutation(dp: &DecoratedPermutation) -> Matroid {
    positroid_from_necklace(&necklace_from_decorated_permutation(dp))
}

/// The necklace of an arbitrary matroid: `I_i` is the lexicographically
/// first basis in the order starting at `i`. Positroids are recovered from it
/// exactly; any other matroid maps to a strictly larger positroid.
pub fn necklace_of(m: &Matroid) -> Result<GrassmannNecklace> {
    let n = m.n();
    if n == 0 {
        return Err(Error::EmptyMatroid);
    }
    let terms = (0..n)
        .map(|i| {
            let mut b = Subset::EMPTY;
            for step in 0..n {
                let x = (i + step) % n;
                if m.r(b.with(x)) > b.len() {
                    b = b.with(x);
                }
            }
            b
        })
        .collect();
    GrassmannNecklace::new(terms)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::uniform;
    use crate::positroid::is_positroid;
    use std::collections::HashSet;

    fn s(xs: &[usize]) -> Subset {
        Subset::from_elements(xs.iter().copied())
    }

    fn all_decorated(n: usize) -> Vec<DecoratedPermutation> {
        let mut out = Vec::new();
        let mut perm: Vec<usize> = (0..n).collect();
        loop {
            let fixed: Vec<usize> = (0..n).filter(|&i| perm[i] == i).collect();
            for mask in 0..1u32 << fixed.len() {
                let coloops = fixed
                    .iter()
                    .enumerate()
                    .filter(|(k, _)| mask >> k & 1 == 1)
                    .map(|(_, &i)| i)
                    .collect();
                out.push(DecoratedPermutation::from_parts_unchecked(
                    perm.clone(),
                    coloops,
                ));
            }
            let Some(i) = (1..n).rev().find(|&i| perm[i - 1] < perm[i]) else {
                break;
            };
            let j = (i..n).rev().find(|&j| perm[j] > perm[i - 1]).unwrap();
            perm.swap(i - 1, j);
            perm[i..].reverse();
        }
        out
    }

    #[test]
    fn shift_by_two_gives_u24() {
        let dp = DecoratedPermutation::new(vec![2, 3, 0, 1], &[]).unwrap();
        let nk = necklace_from_decorated_permutation(&dp);
        assert_eq!(
            nk.terms(),
            &[s(&[0, 1]), s(&[1, 2]), s(&[2, 3]), s(&[0, 3])]
        );
        assert_eq!(positroid_from_necklace(&nk), uniform(2, 4).unwrap());
        assert_eq!(dp.rank(), 2);
    }

    #[test]
    fn gale_check_matches_hand_count_for_u24() {
        let nk =
            GrassmannNecklace::new(vec![s(&[0, 1]), s(&[1, 2]), s(&[2, 3]), s(&[0, 3])]).unwrap();
        for b in k_subsets(4, 2) {
            assert!((0..4).all(|i| gale_above(b, nk.terms()[i], i, 4)));
        }
    }

    #[test]
    fn all_coloops_and_all_loops() {
        for n in 1..=5 {
            let id: Vec<usize> = (0..n).collect();
            let free =
                DecoratedPermutation::new(id.clone(), &vec![FixedPointKind::Coloop; n]).unwrap();
            let nk = necklace_from_decorated_permutation(&free);
            assert!(nk.terms().iter().all(|t| *t == Subset::full(n)));
            assert_eq!(positroid_from_necklace(&nk), uniform(n, n).unwrap());

            let empty = DecoratedPermutation::new(id, &vec![FixedPointKind::Loop; n]).unwrap();
            let nk = necklace_from_decorated_permutation(&empty);
            assert!(nk.terms().iter().all(|t| t.is_empty()));
            assert_eq!(positroid_from_necklace(&nk), uniform(0, n).unwrap());
        }
    }

    #[test]
    fn invalid_inputs() {
        assert!(DecoratedPermutation::new(vec![0, 0], &[]).is_err());
        assert!(GrassmannNecklace::new(vec![s(&[0]), s(&[0, 1])]).is_err());
        // I_1 must contain I_0 - {0} = {1}
        assert!(GrassmannNecklace::new(vec![s(&[0, 1]), s(&[0, 2]), s(&[0, 1])]).is_err());
    }

    #[test]
    fn necklace_round_trip_and_bijection() {
        // labeled positroids on n elements: sum over k of n!/k!
        let expected = [2usize, 5, 16, 65, 326];
        for n in 1..=5 {
            let dps = all_decorated(n);
            assert_eq!(dps.len(), expected[n - 1]);
            let mut labeled = HashSet::new();
            for dp in &dps {
                let nk = necklace_from_decorated_permutation(dp);
                GrassmannNecklace::new(nk.terms().to_vec()).unwrap();
                assert_eq!(&decorated_permutation_from_necklace(&nk), dp);
                assert_eq!(nk.rank(), dp.rank());
                let m = positroid_from_necklace(&nk);
                assert!(m.check_basis_exchange());
                assert!(m.is_basis(nk.terms()[0]));
                assert_eq!(necklace_of(&m).unwrap(), nk);
                labeled.insert(m);
            }
            assert_eq!(labeled.len(), dps.len());
        }
    }

    #[test]
    fn generated_positroids_pass_interval_check() {
        for dp in all_decorated(5) {
            assert!(
                is_positroid(&positroid_from_decorated_permutation(&dp)),
                "{dp}"
            );
        }
    }

    #[test]
    fn constant_necklace() {
        // I_i = {0} for all i: element 0 is a coloop, the rest loops
        let nk = GrassmannNecklace::new(vec![s(&[0]); 3]).unwrap();
        let m = positroid_from_necklace(&nk);
        assert_eq!(m.bases(), &[s(&[0])]);
        assert!(is_positroid(&m));
    }

    #[test]
    fn fixed_point_decorations() {
        let dp = DecoratedPermutation::new(vec![0, 2, 1], &[FixedPointKind::Coloop]).unwrap();
        assert_eq!(dp.decoration(0), Some(FixedPointKind::Coloop));
        assert_eq!(dp.decoration(1), None);
        let m = positroid_from_decorated_permutation(&dp);
        assert_eq!(m.coloops(), s(&[0]));
        assert_eq!(m.rank(), 2);
        assert_eq!(dp.to_string(), "[0(coloop) 2 1]");
    }
}
