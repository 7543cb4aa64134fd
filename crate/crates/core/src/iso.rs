//! Matroid isomorphism: a direct certificate search and a canonical form.
//!
//! The two routes are independent. [`are_isomorphic`] maps elements one at a
//! time and checks ranks of every subset of the mapped part. [`canonical_form`]
//! runs individualization-refinement over the lattice of flats, pruning
//! branches that differ by a transposition automorphism, and keeps the
//! lexicographically least relabeled basis list.

use std::cmp::Ordering;

use crate::flats::flat_lattice;
use crate::matroid::Matroid;
use crate::subset::Subset;

/// A bijection from the source ground set onto the target ground set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsoCertificate {
    mapping: Vec<usize>,
}

impl IsoCertificate {
    pub fn identity(n: usize) -> Self {
        IsoCertificate {
            mapping: (0..n).collect(),
        }
    }

    pub fn from_mapping(mapping: Vec<usize>) -> Self {
        IsoCertificate { mapping }
    }

    /// `mapping()[e]` is the image of source element `e`.
    pub fn mapping(&self) -> &[usize] {
        &self.mapping
    }

    pub fn apply(&self, s: Subset) -> Subset {
        s.iter().map(|e| self.mapping[e]).collect()
    }

    /// Does the mapping carry the bases of `source` exactly onto those of `target`?
    pub fn verify(&self, source: &Matroid, target: &Matroid) -> bool {
        if source.n() != target.n() || self.mapping.len() != source.n() {
            return false;
        }
        let image: Subset = self
            .mapping
            .iter()
            .copied()
            .filter(|&x| x < target.n())
            .collect();
        if image != target.ground() {
            return false;
        }
        source.bases().len() == target.bases().len()
            && source
                .bases()
                .iter()
                .all(|b| target.is_basis(self.apply(*b)))
    }

    pub fn inverse(&self) -> IsoCertificate {
        let mut inv = vec![0; self.mapping.len()];
        for (e, &f) in self.mapping.iter().enumerate() {
            inv[f] = e;
        }
        IsoCertificate { mapping: inv }
    }
}

/// Byte string that is equal for two matroids iff they are isomorphic.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm(Vec<u8>);

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }
}

#[inline]
fn mix(h: u64, x: u64) -> u64 {
    let mut z = h ^ x
        .wrapping_add(0x9E37_79B9_7F4A_7C15)
        .wrapping_mul(0xD6E8_FEB8_6659_FD93);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

fn fold_sorted(seed: u64, mut values: Vec<u64>) -> u64 {
    values.sort_unstable();
    values.into_iter().fold(seed, mix)
}

/// Per-element invariant: basis degree plus the (rank, size) profile of the
/// flats through the element.
fn element_signatures(m: &Matroid) -> Vec<u64> {
    let lattice = flat_lattice(m);
    (0..m.n())
        .map(|e| {
            let degree = m.bases().iter().filter(|b| b.contains(e)).count() as u64;
            let profile: Vec<u64> = lattice
                .iter()
                .filter(|(_, f)| f.contains(e))
                .map(|(k, f)| ((k as u64) << 8) | f.len() as u64)
                .collect();
            fold_sorted(mix(0, degree), profile)
        })
        .collect()
}

/// Search for an isomorphism `m -> target` directly, pruning with element
/// invariants and partial rank agreement.
pub fn are_isomorphic(m: &Matroid, target: &Matroid) -> Option<IsoCertificate> {
    let n = m.n();
    if n != target.n() || m.rank() != target.rank() || m.bases().len() != target.bases().len() {
        return None;
    }
    let sig_m = element_signatures(m);
    let sig_t = element_signatures(target);
    let mut sorted_m = sig_m.clone();
    let mut sorted_t = sig_t.clone();
    sorted_m.sort_unstable();
    sorted_t.sort_unstable();
    if sorted_m != sorted_t {
        return None;
    }
    // map rare signatures first
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&e| (sorted_m.iter().filter(|&&s| s == sig_m[e]).count(), e));

    struct Search<'a> {
        m: &'a Matroid,
        t: &'a Matroid,
        order: Vec<usize>,
        sig_m: Vec<u64>,
        sig_t: Vec<u64>,
        map: Vec<usize>,
        used: Subset,
        sub_m: Vec<u32>,
        sub_t: Vec<u32>,
    }

    impl Search<'_> {
        fn extend(&mut self, k: usize) -> bool {
            if k == self.order.len() {
                return true;
            }
            let e = self.order[k];
            for f in 0..self.t.n() {
                if self.used.contains(f) || self.sig_t[f] != self.sig_m[e] {
                    continue;
                }
                let len = self.sub_m.len();
                let mut ok = true;
                for i in 0..len {
                    let a = self.sub_m[i] | (1 << e);
                    let b = self.sub_t[i] | (1 << f);
                    if self.m.r(Subset::from_bits(a)) != self.t.r(Subset::from_bits(b)) {
                        ok = false;
                        break;
                    }
                    self.sub_m.push(a);
                    self.sub_t.push(b);
                }
                if ok {
                    self.map[e] = f;
                    self.used = self.used.with(f);
                    if self.extend(k + 1) {
                        return true;
                    }
                    self.used = self.used.without(f);
                }
                self.sub_m.truncate(len);
                self.sub_t.truncate(len);
            }
            false
        }
    }

    let mut search = Search {
        m,
        t: target,
        order,
        sig_m,
        sig_t,
        map: vec![0; n],
        used: Subset::EMPTY,
        sub_m: vec![0],
        sub_t: vec![0],
    };
    search.extend(0).then_some(IsoCertificate {
        mapping: search.map,
    })
}

struct Canonizer<'a> {
    m: &'a Matroid,
    flats: Vec<(u8, Subset)>,
    incidence: Vec<Vec<usize>>,
    twin_rep: Vec<usize>,
    best: Option<(Vec<u32>, Vec<usize>)>,
}

impl<'a> Canonizer<'a> {
    fn new(m: &'a Matroid) -> Self {
        let n = m.n();
        let flats: Vec<(u8, Subset)> = flat_lattice(m)
            .iter()
            .filter(|(_, f)| !f.is_empty() && f.len() < n)
            .map(|(k, f)| (k as u8, f))
            .collect();
        let mut incidence = vec![Vec::new(); n];
        for (i, (_, f)) in flats.iter().enumerate() {
            for e in *f {
                incidence[e].push(i);
            }
        }
        let mut twin_rep: Vec<usize> = (0..n).collect();
        for e in 0..n {
            for f in 0..e {
                if twin_rep[f] == f && Self::is_twin(m, e, f) {
                    twin_rep[e] = f;
                    break;
                }
            }
        }
        Canonizer {
            m,
            flats,
            incidence,
            twin_rep,
            best: None,
        }
    }

    /// Is the transposition `(e f)` an automorphism?
    fn is_twin(m: &Matroid, e: usize, f: usize) -> bool {
        let rest = m.ground().without(e).without(f);
        rest.subsets().all(|s| m.r(s.with(e)) == m.r(s.with(f)))
    }

    fn refine(&self, cells: &mut Vec<Vec<usize>>) {
        let n = self.m.n();
        let mut cell_of = vec![0u64; n];
        loop {
            if cells.len() == n {
                return;
            }
            for (i, c) in cells.iter().enumerate() {
                for &e in c {
                    cell_of[e] = i as u64;
                }
            }
            let flat_sig: Vec<u64> = self
                .flats
                .iter()
                .map(|(k, f)| {
                    fold_sorted(mix(1, *k as u64), f.iter().map(|e| cell_of[e]).collect())
                })
                .collect();
            let elem_sig: Vec<u64> = (0..n)
                .map(|e| {
                    fold_sorted(
                        mix(2, cell_of[e]),
                        self.incidence[e].iter().map(|&i| flat_sig[i]).collect(),
                    )
                })
                .collect();
            let mut next: Vec<Vec<usize>> = Vec::with_capacity(n);
            for c in cells.iter() {
                if c.len() == 1 {
                    next.push(c.clone());
                    continue;
                }
                let mut keyed: Vec<(u64, usize)> = c.iter().map(|&e| (elem_sig[e], e)).collect();
                keyed.sort_unstable();
                let mut start = 0;
                for i in 1..=keyed.len() {
                    if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                        next.push(keyed[start..i].iter().map(|&(_, e)| e).collect());
                        start = i;
                    }
                }
            }
            let stable = next.len() == cells.len();
            *cells = next;
            if stable {
                return;
            }
        }
    }

    fn search(&mut self, mut cells: Vec<Vec<usize>>) {
        self.refine(&mut cells);
        let n = self.m.n();
        if cells.len() == n {
            let mut labeling = vec![0usize; n];
            for (i, c) in cells.iter().enumerate() {
                labeling[c[0]] = i;
            }
            let mut code: Vec<u32> = self
                .m
                .bases()
                .iter()
                .map(|b| b.iter().map(|e| labeling[e]).collect::<Subset>().bits())
                .collect();
            code.sort_unstable();
            let better = match &self.best {
                None => true,
                Some((best, _)) => code.cmp(best) == Ordering::Less,
            };
            if better {
                self.best = Some((code, labeling));
            }
            return;
        }
        let idx = (0..cells.len())
            .filter(|&i| cells[i].len() > 1)
            .min_by_key(|&i| (cells[i].len(), i))
            .unwrap();
        let cell = cells[idx].clone();
        let mut tried: Vec<usize> = Vec::new();
        for &v in &cell {
            let rep = self.twin_rep[v];
            if tried.contains(&rep) {
                continue;
            }
            tried.push(rep);
            let mut next = cells.clone();
            next[idx] = vec![v];
            next.insert(idx + 1, cell.iter().copied().filter(|&x| x != v).collect());
            self.search(next);
        }
    }
}

/// Canonical form and the labeling that produces it (`labeling[e]` is the
/// canonical position of element `e`).
pub fn canonical_labeling(m: &Matroid) -> (CanonicalForm, Vec<usize>) {
    let n = m.n();
    let mut canon = Canonizer::new(m);
    if n == 0 {
        return (CanonicalForm(vec![0, m.rank() as u8]), Vec::new());
    }
    canon.search(vec![(0..n).collect()]);
    let (code, labeling) = canon.best.expect("search reaches at least one leaf");
    let mut bytes = Vec::with_capacity(2 + 2 * code.len());
    bytes.push(n as u8);
    bytes.push(m.rank() as u8);
    for b in code {
        bytes.extend_from_slice(&(b as u16).to_be_bytes());
    }
    (CanonicalForm(bytes), labeling)
}

pub fn canonical_form(m: &Matroid) -> CanonicalForm {
    canonical_labeling(m).0
}

/// The canonically relabeled copy of `m`.
pub fn canonical_representative(m: &Matroid) -> Matroid {
    let (_, labeling) = canonical_labeling(m);
    m.relabel_unchecked(&labeling)
}

/// Isomorphism obtained by composing canonical labelings.
pub fn isomorphism_via_canonical(m: &Matroid, target: &Matroid) -> Option<IsoCertificate> {
    let (cm, lm) = canonical_labeling(m);
    let (ct, lt) = canonical_labeling(target);
    if cm != ct {
        return None;
    }
    let inv_t = IsoCertificate::from_mapping(lt).inverse();
    Some(IsoCertificate {
        mapping: lm.iter().map(|&p| inv_t.mapping[p]).collect(),
    })
}
