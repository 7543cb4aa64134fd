//! The basis-family matroid carrier and its rank/closure/minor toolkit.

use std::fmt;
use std::hash::{Hash, Hasher};

use crate::error::{Error, Result};
use crate::subset::{k_subsets, Subset, MAX_GROUND};

/// A matroid on `{0, .., n-1}` given by its bases.
///
/// The full rank table (one byte per subset of the ground set) is computed at
/// construction, so rank and closure queries are table lookups. Values are
/// immutable once built.
#[derive(Clone)]
pub struct Matroid {
    n: usize,
    rank: usize,
    bases: Vec<Subset>,
    ranks: Vec<u8>,
}

impl PartialEq for Matroid {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.bases == other.bases
    }
}

impl Eq for Matroid {}

impl Hash for Matroid {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.n.hash(state);
        self.bases.hash(state);
    }
}

impl fmt::Debug for Matroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Matroid")
            .field("n", &self.n)
            .field("rank", &self.rank)
            .field("bases", &self.bases)
            .finish()
    }
}

/// Fill a rank table from an independence bitmap over all `2^n` subsets.
fn rank_table_from_independent(n: usize, indep: &[bool]) -> Vec<u8> {
    let size = 1usize << n;
    let mut ranks = vec![0u8; size];
    for m in 1..size {
        if indep[m] {
            ranks[m] = m.count_ones() as u8;
        } else {
            let mut best = 0u8;
            let mut rest = m;
            while rest != 0 {
                let bit = rest & rest.wrapping_neg();
                rest ^= bit;
                best = best.max(ranks[m ^ bit]);
            }
            ranks[m] = best;
        }
    }
    ranks
}

/// Check the local rank axioms: normalization, unit increase and local submodularity.
/// Together these are equivalent to the usual rank axioms.
fn check_rank_axioms(n: usize, ranks: &[u8]) -> std::result::Result<(), String> {
    if ranks[0] != 0 {
        return Err("rank of the empty set is not 0".into());
    }
    let size = 1usize << n;
    for s in 0..size {
        let rs = ranks[s];
        for e in 0..n {
            let be = 1usize << e;
            if s & be != 0 {
                continue;
            }
            let re = ranks[s | be];
            if re < rs || re > rs + 1 {
                return Err(format!(
                    "rank jumps from {rs} to {re} adding {e} to {}",
                    Subset::from_bits(s as u32)
                ));
            }
            if re != rs {
                continue;
            }
            for f in e + 1..n {
                let bf = 1usize << f;
                if s & bf != 0 {
                    continue;
                }
                if ranks[s | bf] == rs && ranks[s | be | bf] != rs {
                    return Err(format!(
                        "submodularity fails at {} with {e} and {f}",
                        Subset::from_bits(s as u32)
                    ));
                }
            }
        }
    }
    Ok(())
}

fn check_ground(n: usize) -> Result<()> {
    if n > MAX_GROUND {
        return Err(Error::TooLarge {
            n,
            cap: MAX_GROUND,
            what: "matroid ground set".into(),
        });
    }
    Ok(())
}

impl Matroid {
    /// Build from a family of bases, validating the matroid axioms.
    pub fn from_bases<I: IntoIterator<Item = Subset>>(n: usize, bases: I) -> Result<Self> {
        check_ground(n)?;
        let mut bases: Vec<Subset> = bases.into_iter().collect();
        bases.sort_unstable();
        bases.dedup();
        let Some(first) = bases.first() else {
            return Err(Error::NotAMatroid("the basis family is empty".into()));
        };
        let rank = first.len();
        for b in &bases {
            if !b.fits(n) {
                return Err(Error::InvalidSubset {
                    subset: b.to_string(),
                    n,
                });
            }
            if b.len() != rank {
                return Err(Error::NotAMatroid(format!(
                    "bases {first} and {b} have different sizes"
                )));
            }
        }
        let mut indep = vec![false; 1 << n];
        for b in &bases {
            indep[b.bits() as usize] = true;
        }
        for m in (1..1usize << n).rev() {
            if indep[m] {
                let mut rest = m;
                while rest != 0 {
                    let bit = rest & rest.wrapping_neg();
                    rest ^= bit;
                    indep[m ^ bit] = true;
                }
            }
        }
        let ranks = rank_table_from_independent(n, &indep);
        check_rank_axioms(n, &ranks).map_err(Error::NotAMatroid)?;
        Ok(Matroid {
            n,
            rank,
            bases,
            ranks,
        })
    }

    /// Build from an independence predicate evaluated on every subset.
    pub fn from_independence(n: usize, independent: impl Fn(Subset) -> bool) -> Result<Self> {
        check_ground(n)?;
        let indep: Vec<bool> = (0..1u32 << n)
            .map(|m| independent(Subset::from_bits(m)))
            .collect();
        if !indep[0] {
            return Err(Error::NotAMatroid("the empty set is dependent".into()));
        }
        let ranks = rank_table_from_independent(n, &indep);
        check_rank_axioms(n, &ranks).map_err(Error::NotAMatroid)?;
        let m = Self::from_rank_table_unchecked(n, ranks);
        // the predicate must itself be down-closed and agree with the derived rank
        for s in 0..1u32 << n {
            let s = Subset::from_bits(s);
            if indep[s.bits() as usize] != m.is_independent(s) {
                return Err(Error::NotAMatroid(format!(
                    "independence predicate is inconsistent at {s}"
                )));
            }
        }
        Ok(m)
    }

    /// Build from a rank function, validating the rank axioms.
    pub fn from_rank_fn(n: usize, rank: impl Fn(Subset) -> usize) -> Result<Self> {
        check_ground(n)?;
        let ranks: Vec<u8> = (0..1u32 << n)
            .map(|m| rank(Subset::from_bits(m)) as u8)
            .collect();
        check_rank_axioms(n, &ranks).map_err(Error::NotAMatroid)?;
        Ok(Self::from_rank_table_unchecked(n, ranks))
    }

    /// Build from a family of flats. The family must satisfy the flat axioms;
    /// this is checked by rebuilding the flats of the result.
    pub fn from_flats<I: IntoIterator<Item = Subset>>(n: usize, flats: I) -> Result<Self> {
        check_ground(n)?;
        let size = 1usize << n;
        let full = Subset::full(n).bits();
        let mut is_flat = vec![false; size];
        for f in flats {
            if !f.fits(n) {
                return Err(Error::InvalidSubset {
                    subset: f.to_string(),
                    n,
                });
            }
            is_flat[f.bits() as usize] = true;
        }
        if !is_flat[full as usize] {
            return Err(Error::NotAMatroid(
                "the ground set is not in the flat family".into(),
            ));
        }
        // closure = intersection of all flats containing the set
        let mut cl = vec![full; size];
        for s in (0..size).rev() {
            if is_flat[s] {
                cl[s] = s as u32;
                continue;
            }
            let mut acc = full;
            for e in 0..n {
                if s & (1 << e) == 0 {
                    acc &= cl[s | (1 << e)];
                }
            }
            cl[s] = acc;
        }
        let mut ranks = vec![0u8; size];
        for s in 1..size {
            let low = s & s.wrapping_neg();
            let prev = s ^ low;
            ranks[s] = ranks[prev] + u8::from(cl[prev] & low as u32 == 0);
        }
        check_rank_axioms(n, &ranks).map_err(Error::NotAMatroid)?;
        let m = Self::from_rank_table_unchecked(n, ranks);
        for (s, &flat) in is_flat.iter().enumerate() {
            if flat != m.is_flat(Subset::from_bits(s as u32)) {
                return Err(Error::NotAMatroid(format!(
                    "flat family is not closed: {} disagrees",
                    Subset::from_bits(s as u32)
                )));
            }
        }
        Ok(m)
    }

    /// Rank-`rank` matroid whose circuits are exactly `circuits` together with
    /// every `(rank+1)`-subset containing none of them.
    pub fn from_circuits(n: usize, rank: usize, circuits: &[Subset]) -> Result<Self> {
        let m = Self::from_independence(n, |s| {
            s.len() <= rank && !circuits.iter().any(|c| c.is_subset(s))
        })?;
        if m.rank != rank {
            return Err(Error::NotAMatroid(format!(
                "circuit description has rank {} instead of {rank}",
                m.rank
            )));
        }
        Ok(m)
    }

    /// Simple rank-3 matroid whose long lines are `lines`: the bases are all
    /// 3-subsets not contained in a listed line.
    pub fn from_long_lines(n: usize, lines: &[Subset]) -> Result<Self> {
        check_ground(n)?;
        let bases = k_subsets(n, 3).filter(|t| !lines.iter().any(|l| t.is_subset(*l)));
        let m = Self::from_bases(n, bases)?;
        for l in lines {
            if l.len() < 3 || m.r(*l) != 2 || m.cl(*l) != *l {
                return Err(Error::NotAMatroid(format!("{l} is not a long line")));
            }
        }
        Ok(m)
    }

    /// Trusted constructor from a table already known to satisfy the rank axioms.
    pub(crate) fn from_rank_table_unchecked(n: usize, ranks: Vec<u8>) -> Self {
        debug_assert_eq!(ranks.len(), 1 << n);
        let rank = ranks[(1usize << n) - 1] as usize;
        let bases = k_subsets(n, rank)
            .filter(|b| ranks[b.bits() as usize] as usize == rank)
            .collect();
        Matroid {
            n,
            rank,
            bases,
            ranks,
        }
    }

    /// Trusted constructor from bases already known to form a matroid.
    pub(crate) fn from_bases_unchecked(n: usize, mut bases: Vec<Subset>) -> Self {
        bases.sort_unstable();
        let rank = bases[0].len();
        let mut indep = vec![false; 1 << n];
        for b in &bases {
            indep[b.bits() as usize] = true;
        }
        for m in (1..1usize << n).rev() {
            if indep[m] {
                let mut rest = m;
                while rest != 0 {
                    let bit = rest & rest.wrapping_neg();
                    rest ^= bit;
                    indep[m ^ bit] = true;
                }
            }
        }
        let ranks = rank_table_from_independent(n, &indep);
        Matroid {
            n,
            rank,
            bases,
            ranks,
        }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn rank(&self) -> usize {
        self.rank
    }

    #[inline]
    pub fn ground(&self) -> Subset {
        Subset::full(self.n)
    }

    /// Bases in increasing bit-mask order.
    #[inline]
    pub fn bases(&self) -> &[Subset] {
        &self.bases
    }

    fn check(&self, s: Subset) -> Result<()> {
        if s.fits(self.n) {
            Ok(())
        } else {
            Err(Error::InvalidSubset {
                subset: s.to_string(),
                n: self.n,
            })
        }
    }

    /// Rank of `s`; `s` must lie in the ground set.
    #[inline]
    pub fn r(&self, s: Subset) -> usize {
        debug_assert!(s.fits(self.n));
        self.ranks[s.bits() as usize] as usize
    }

    pub fn rank_of(&self, s: Subset) -> Result<usize> {
        self.check(s)?;
        Ok(self.r(s))
    }

    /// Closure of `s`; `s` must lie in the ground set.
    pub fn cl(&self, s: Subset) -> Subset {
        let rs = self.r(s);
        let mut out = s;
        for e in s.complement(self.n) {
            if self.r(s.with(e)) == rs {
                out = out.with(e);
            }
        }
        out
    }

    pub fn closure(&self, s: Subset) -> Result<Subset> {
        self.check(s)?;
        Ok(self.cl(s))
    }

    #[inline]
    pub fn is_independent(&self, s: Subset) -> bool {
        self.r(s) == s.len()
    }

    #[inline]
    pub fn is_basis(&self, s: Subset) -> bool {
        s.len() == self.rank && self.is_independent(s)
    }

    pub fn is_circuit(&self, s: Subset) -> bool {
        !s.is_empty()
            && self.r(s) + 1 == s.len()
            && s.iter().all(|e| self.is_independent(s.without(e)))
    }

    pub fn is_flat(&self, s: Subset) -> bool {
        let rs = self.r(s);
        s.complement(self.n).iter().all(|e| self.r(s.with(e)) > rs)
    }

    pub fn loops(&self) -> Subset {
        (0..self.n)
            .filter(|&e| self.r(Subset::singleton(e)) == 0)
            .collect()
    }

    pub fn coloops(&self) -> Subset {
        let full = self.ground();
        (0..self.n)
            .filter(|&e| self.r(full.without(e)) < self.rank)
            .collect()
    }

    /// Parallel classes of the non-loop elements, ordered by smallest member.
    pub fn parallel_classes(&self) -> Vec<Subset> {
        let loops = self.loops();
        let mut seen = loops;
        let mut classes = Vec::new();
        for e in 0..self.n {
            if seen.contains(e) {
                continue;
            }
            let class = self.cl(Subset::singleton(e)).difference(loops);
            seen = seen | class;
            classes.push(class);
        }
        classes
    }

    /// Number of points (rank-1 flats).
    pub fn num_points(&self) -> usize {
        self.parallel_classes().len()
    }

    pub fn is_simple(&self) -> bool {
        if !self.loops().is_empty() {
            return false;
        }
        (0..self.n).all(|e| (e + 1..self.n).all(|f| self.r(Subset::singleton(e).with(f)) == 2))
    }

    /// The matroid on `a` (relabeled `0..|a|` in increasing order) with the induced rank.
    pub fn restrict(&self, a: Subset) -> Matroid {
        self.minor(Subset::EMPTY, a)
    }

    /// Delete `d`.
    pub fn delete(&self, d: Subset) -> Result<Matroid> {
        self.check(d)?;
        if self.n > 0 && d == self.ground() {
            return Err(Error::EmptyMatroid);
        }
        Ok(self.restrict(self.ground().difference(d)))
    }

    /// Contract `c`; the result lives on the complement of `c`, relabeled in increasing order.
    pub fn contract(&self, c: Subset) -> Result<Matroid> {
        self.check(c)?;
        Ok(self.minor(c, self.ground().difference(c)))
    }

    /// `M / contract | keep`, relabeled onto `0..|keep|` in increasing order.
    pub fn minor(&self, contract: Subset, keep: Subset) -> Matroid {
        debug_assert!(contract.is_disjoint(keep));
        debug_assert!(contract.union(keep).fits(self.n));
        let elems = keep.to_vec();
        let k = elems.len();
        let rc = self.r(contract);
        let size = 1usize << k;
        let mut masks = vec![0u32; size];
        let mut ranks = vec![0u8; size];
        masks[0] = contract.bits();
        ranks[0] = 0;
        for c in 1..size {
            let low = c.trailing_zeros() as usize;
            masks[c] = masks[c & (c - 1)] | (1 << elems[low]);
            ranks[c] = (self.ranks[masks[c] as usize] as usize - rc) as u8;
        }
        Self::from_rank_table_unchecked(k, ranks)
    }

    pub fn dual(&self) -> Matroid {
        let full = self.ground();
        let bases = self.bases.iter().map(|b| full.difference(*b)).collect();
        Self::from_bases_unchecked(self.n, bases)
    }

    /// Relabel element `e` as `perm[e]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Matroid> {
        if perm.len() != self.n {
            return Err(Error::InvalidParameters(format!(
                "relabeling has length {} for a ground set of size {}",
                perm.len(),
                self.n
            )));
        }
        let image: Subset = perm.iter().copied().filter(|&x| x < self.n).collect();
        if image != self.ground() {
            return Err(Error::InvalidParameters(
                "relabeling is not a bijection".into(),
            ));
        }
        Ok(self.relabel_unchecked(perm))
    }

    pub(crate) fn relabel_unchecked(&self, perm: &[usize]) -> Matroid {
        let bases = self
            .bases
            .iter()
            .map(|b| b.iter().map(|e| perm[e]).collect())
            .collect();
        let mut ranks = vec![0u8; self.ranks.len()];
        for (s, &r) in self.ranks.iter().enumerate() {
            let t: Subset = Subset::from_bits(s as u32)
                .iter()
                .map(|e| perm[e])
                .collect();
            ranks[t.bits() as usize] = r;
        }
        let mut bases: Vec<Subset> = bases;
        bases.sort_unstable();
        Matroid {
            n: self.n,
            rank: self.rank,
            bases,
            ranks,
        }
    }

    /// Direct sum; `other`'s elements are shifted up by `self.n()`.
    pub fn direct_sum(&self, other: &Matroid) -> Result<Matroid> {
        let n = self.n + other.n;
        check_ground(n)?;
        let mut bases = Vec::with_capacity(self.bases.len() * other.bases.len());
        for a in &self.bases {
            for b in &other.bases {
                bases.push(Subset::from_bits(a.bits() | (b.bits() << self.n)));
            }
        }
        Ok(Self::from_bases_unchecked(n, bases))
    }

    /// Simplification together with the parallel class behind each new element.
    ///
    /// New element `i` stands for `classes[i]`; loops are dropped.
    pub fn simplify(&self) -> (Matroid, Vec<Subset>) {
        let classes = self.parallel_classes();
        let reps: Subset = classes.iter().filter_map(|c| c.first()).collect();
        (self.restrict(reps), classes)
    }

    /// Basis-exchange axiom checked directly on the basis family.
    pub fn check_basis_exchange(&self) -> bool {
        for b1 in &self.bases {
            for b2 in &self.bases {
                for x in b1.difference(*b2) {
                    let ok = b2
                        .difference(*b1)
                        .iter()
                        .any(|y| self.is_basis(b1.without(x).with(y)));
                    if !ok {
                        return false;
                    }
                }
            }
        }
        true
    }
}
