//! Chirotopes of exact matrices, oriented minors, and monochromatic line minors.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::flats::flat_lattice;
use crate::matroid::Matroid;
use crate::subset::{k_subsets, Subset, MAX_GROUND};

/// An `r x n` integer matrix. Rational input is scaled row by row to clear
/// denominators, which leaves every maximal minor's sign unchanged.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Result<Self> {
        let r = rows.len();
        if r == 0 {
            return Err(Error::InvalidMatrix("matrix has no rows".into()));
        }
        let c = rows[0].len();
        if c == 0 {
            return Err(Error::InvalidMatrix("matrix has no columns".into()));
        }
        if let Some(bad) = rows.iter().position(|row| row.len() != c) {
            return Err(Error::InvalidMatrix(format!(
                "row {} has {} entries, expected {c}",
                bad + 1,
                rows[bad].len()
            )));
        }
        if c > MAX_GROUND {
            return Err(Error::TooLarge {
                n: c,
                cap: MAX_GROUND,
                what: "matrix columns".into(),
            });
        }
        if r > c {
            return Err(Error::InvalidMatrix(format!("{r} rows exceed {c} columns")));
        }
        Ok(IntMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_i64(rows: &[Vec<i64>]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        )
    }

    /// Comma-separated rows of integers or exact fractions `p/q`. Blank lines
    /// and `#` comments are skipped.
    pub fn parse(text: &str) -> Result<Self> {
        let mut rows = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let entries: Vec<BigRational> = line
                .split(',')
                .map(|tok| parse_entry(tok.trim(), idx + 1))
                .collect::<Result<_>>()?;
            let lcm = entries
                .iter()
                .fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
            rows.push(
                entries
                    .iter()
                    .map(|q| q.numer() * (&lcm / q.denom()))
                    .collect(),
            );
        }
        Self::from_rows(rows)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    /// Determinant of the square submatrix on `cols` (ascending), by
    /// fraction-free elimination.
    pub fn minor(&self, cols: &[usize]) -> BigInt {
        let k = self.rows;
        debug_assert_eq!(cols.len(), k);
        let mut a: Vec<Vec<BigInt>> = (0..k)
            .map(|i| cols.iter().map(|&j| self.get(i, j).clone()).collect())
            .collect();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for p in 0..k {
            if a[p][p].is_zero() {
                let Some(swap) = (p + 1..k).find(|&i| !a[i][p].is_zero()) else {
                    return BigInt::zero();
                };
                a.swap(p, swap);
                sign = -sign;
            }
            for i in p + 1..k {
                for j in p + 1..k {
                    let v = (&a[i][j] * &a[p][p] - &a[i][p] * &a[p][j]) / &prev;
                    a[i][j] = v;
                }
            }
            prev = a[p][p].clone();
        }
        sign * &a[k - 1][k - 1]
    }

    /// Rank of the columns in `cols`, by Gaussian elimination over the rationals.
    pub fn column_rank(&self, cols: Subset) -> usize {
        let idx = cols.to_vec();
        let mut a: Vec<Vec<BigRational>> = (0..self.rows)
            .map(|i| {
                idx.iter()
                    .map(|&j| BigRational::from_integer(self.get(i, j).clone()))
                    .collect()
            })
            .collect();
        let mut rank = 0;
        for c in 0..idx.len() {
            let Some(p) = (rank..self.rows).find(|&i| !a[i][c].is_zero()) else {
                continue;
            };
            a.swap(rank, p);
            for i in rank + 1..self.rows {
                if a[i][c].is_zero() {
                    continue;
                }
                let f = &a[i][c] / &a[rank][c];
                let (top, bottom) = a.split_at_mut(i);
                for (x, p) in bottom[0][c..].iter_mut().zip(&top[rank][c..]) {
                    *x -= p * &f;
                }
            }
            rank += 1;
        }
        rank
    }
}

fn parse_entry(tok: &str, line: usize) -> Result<BigRational> {
    let bad = |msg: String| Error::Parse { line, message: msg };
    if tok.contains(['.', 'e', 'E']) {
        return Err(bad(format!("`{tok}` is not exact; use integers or p/q")));
    }
    let (p, q) = match tok.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (tok, "1"),
    };
    let p: BigInt = p.parse().map_err(|_| bad(format!("bad entry `{tok}`")))?;
    let q: BigInt = q.parse().map_err(|_| bad(format!("bad entry `{tok}`")))?;
    if q.is_zero() {
        return Err(bad(format!("zero denominator in `{tok}`")));
    }
    Ok(BigRational::new(p, q))
}

/// Signs of the increasing `r`-tuples, stored densely by bit mask.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Chirotope {
    n: usize,
    r: usize,
    signs: Vec<i8>,
}

impl Chirotope {
    /// Build from a sign for each increasing `r`-tuple. The support must be
    /// the basis family of a matroid.
    pub fn from_signs(n: usize, r: usize, sign: impl Fn(Subset) -> i8) -> Result<Self> {
        if n > MAX_GROUND || r > n {
            return Err(Error::InvalidParameters(format!(
                "chirotope with n={n}, r={r}"
            )));
        }
        let mut signs = vec![0i8; 1 << n];
        for b in k_subsets(n, r) {
            signs[b.bits() as usize] = sign(b).signum();
        }
        let chi = Chirotope { n, r, signs };
        chi.underlying_matroid()?;
        Ok(chi)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rank(&self) -> usize {
        self.r
    }

    /// Sign of the increasing tuple listing `b`.
    pub fn sign_of_set(&self, b: Subset) -> i8 {
        if b.len() != self.r || !b.fits(self.n) {
            return 0;
        }
        self.signs[b.bits() as usize]
    }

    /// Alternating sign of an arbitrary tuple.
    pub fn sign(&self, tuple: &[usize]) -> i8 {
        if tuple.len() != self.r {
            return 0;
        }
        let mut inversions = 0;
        let mut set = Subset::EMPTY;
        for (i, &x) in tuple.iter().enumerate() {
            if x >= self.n || set.contains(x) {
                return 0;
            }
            set = set.with(x);
            inversions += tuple[i + 1..].iter().filter(|&&y| y < x).count();
        }
        let s = self.signs[set.bits() as usize];
        if inversions % 2 == 0 {
            s
        } else {
            -s
        }
    }

    pub fn negated(&self) -> Chirotope {
        Chirotope {
            n: self.n,
            r: self.r,
            signs: self.signs.iter().map(|s| -s).collect(),
        }
    }

    /// All nonzero signs positive.
    pub fn is_positively_oriented(&self) -> bool {
        self.signs.iter().all(|&s| s >= 0)
    }

    pub fn underlying_matroid(&self) -> Result<Matroid> {
        let support: Vec<Subset> = k_subsets(self.n, self.r)
            .filter(|b| self.signs[b.bits() as usize] != 0)
            .collect();
        if support.is_empty() {
            return Err(Error::NotAChirotope("all signs are zero".into()));
        }
        Matroid::from_bases(self.n, support).map_err(|e| Error::NotAChirotope(e.to_string()))
    }
}

impl fmt::Display for Chirotope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let signs: String = k_subsets(self.n, self.r)
            .map(|b| match self.signs[b.bits() as usize] {
                1 => '+',
                -1 => '-',
                _ => '0',
            })
            .collect();
        write!(f, "chirotope n={} r={} {}", self.n, self.r, signs)
    }
}

/// Signs of the maximal minors, computed exactly.
pub fn chirotope_from_matrix(a: &IntMatrix) -> Result<Chirotope> {
    let (r, n) = (a.rows(), a.cols());
    let mut signs = vec![0i8; 1 << n];
    let mut any = false;
    for b in k_subsets(n, r) {
        let d = a.minor(&b.to_vec());
        let s = if d.is_positive() {
            1
        } else if d.is_negative() {
            -1
        } else {
            0
        };
        any |= s != 0;
        signs[b.bits() as usize] = s;
    }
    if !any {
        return Err(Error::InvalidMatrix(format!(
            "matrix does not have full row rank {r}"
        )));
    }
    Ok(Chirotope { n, r, signs })
}

pub fn underlying_matroid(chi: &Chirotope) -> Result<Matroid> {
    chi.underlying_matroid()
}

fn compact_labels(n: usize, removed: Subset) -> Vec<usize> {
    Subset::full(n).difference(removed).to_vec()
}

/// Contract the elements of `f` through `basis`, an independent set spanning
/// `f`, listed in ascending order; the new chirotope lives on the complement
/// of `f`, relabeled in increasing order.
fn contract_through(chi: &Chirotope, f: Subset, basis: Subset) -> Chirotope {
    let keep = compact_labels(chi.n, f);
    let k = keep.len();
    let r = chi.r - basis.len();
    let prefix = basis.to_vec();
    let mut signs = vec![0i8; 1 << k];
    for b in k_subsets(k, r) {
        let tuple: Vec<usize> = prefix
            .iter()
            .copied()
            .chain(b.iter().map(|i| keep[i]))
            .collect();
        signs[b.bits() as usize] = chi.sign(&tuple);
    }
    Chirotope { n: k, r, signs }
}

pub fn oriented_contract(chi: &Chirotope, e: usize) -> Result<Chirotope> {
    if e >= chi.n {
        return Err(Error::InvalidParameters(format!(
            "element {e} out of range"
        )));
    }
    let m = chi.underlying_matroid()?;
    if m.loops().contains(e) {
        return Err(Error::InvalidContraction(e));
    }
    let single = Subset::singleton(e);
    Ok(contract_through(chi, single, single))
}

/// Delete `e`. A coloop is contracted instead, which gives the same underlying
/// matroid and keeps the result nonzero.
pub fn oriented_delete(chi: &Chirotope, e: usize) -> Result<Chirotope> {
    if e >= chi.n {
        return Err(Error::InvalidParameters(format!(
            "element {e} out of range"
        )));
    }
    if chi.n == 1 {
        return Err(Error::EmptyMatroid);
    }
    let m = chi.underlying_matroid()?;
    if m.coloops().contains(e) {
        return oriented_contract(chi, e);
    }
    let keep = compact_labels(chi.n, Subset::singleton(e));
    let k = keep.len();
    let mut signs = vec![0i8; 1 << k];
    for b in k_subsets(k, chi.r) {
        let orig: Subset = b.iter().map(|i| keep[i]).collect();
        signs[b.bits() as usize] = chi.signs[orig.bits() as usize];
    }
    Ok(Chirotope {
        n: k,
        r: chi.r,
        signs,
    })
}

/// Contract a flat through its lexicographically first basis. Returns the
/// contraction and the original label of each new element.
pub fn contract_flat(chi: &Chirotope, m: &Matroid, f: Subset) -> (Chirotope, Vec<usize>) {
    let mut basis = Subset::EMPTY;
    for x in f {
        if m.r(basis.with(x)) > basis.len() {
            basis = basis.with(x);
        }
    }
    (contract_through(chi, f, basis), compact_labels(chi.n, f))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Polarity {
    Plus,
    Minus,
}

impl Polarity {
    pub fn sign(self) -> i8 {
        match self {
            Polarity::Plus => 1,
            Polarity::Minus => -1,
        }
    }
}

impl std::str::FromStr for Polarity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "plus" | "+" => Ok(Polarity::Plus),
            "minus" | "-" => Ok(Polarity::Minus),
            other => Err(Error::InvalidParameters(format!(
                "unknown polarity `{other}`"
            ))),
        }
    }
}

/// A flat `F` of corank two and elements of `M / F`, in increasing order,
/// all of whose pairs have the requested sign after contracting `F`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MonochromaticWitness {
    pub flat: Vec<usize>,
    pub elements: Vec<usize>,
}

/// Largest clique in the graph on `0..k` whose edges `a < b` satisfy `edge(a, b)`.
fn max_clique(k: usize, edge: &dyn Fn(usize, usize) -> bool, stop_at: usize) -> Vec<usize> {
    fn grow(
        cands: &[usize],
        current: &mut Vec<usize>,
        best: &mut Vec<usize>,
        edge: &dyn Fn(usize, usize) -> bool,
        stop_at: usize,
    ) {
        if current.len() > best.len() {
            *best = current.clone();
        }
        if best.len() >= stop_at || current.len() + cands.len() <= best.len() {
            return;
        }
        for (i, &v) in cands.iter().enumerate() {
            let next: Vec<usize> = cands[i + 1..]
                .iter()
                .copied()
                .filter(|&w| edge(v, w))
                .collect();
            current.push(v);
            grow(&next, current, best, edge, stop_at);
            current.pop();
            if best.len() >= stop_at {
                return;
            }
        }
    }
    let all: Vec<usize> = (0..k).collect();
    let mut best = Vec::new();
    grow(&all, &mut Vec::new(), &mut best, edge, stop_at);
    best
}

/// Rank-2 contractions `M / F` over all flats `F` of rank `r - 2`, with
/// original labels.
fn rank2_minors(chi: &Chirotope) -> Result<Vec<(Subset, Chirotope, Vec<usize>)>> {
    if chi.r < 2 {
        return Ok(Vec::new());
    }
    let m = chi.underlying_matroid()?;
    Ok(flat_lattice(&m)
        .of_rank(chi.r - 2)
        .iter()
        .map(|&f| {
            let (c, labels) = contract_flat(chi, &m, f);
            (f, c, labels)
        })
        .collect())
}

fn largest_in(c: &Chirotope, polarity: Polarity, stop_at: usize) -> Vec<usize> {
    let want = polarity.sign();
    max_clique(c.n, &|a, b| c.sign(&[a, b]) == want, stop_at)
}

/// Search for `k` elements whose pairs, in ground-set order, all carry the
/// sign `polarity` in some rank-2 contraction by a flat.
pub fn monochromatic_line_minor(
    chi: &Chirotope,
    k: usize,
    polarity: Polarity,
) -> Result<Option<MonochromaticWitness>> {
    if k < 2 {
        return Err(Error::InvalidParameters(
            "line size must be at least 2".into(),
        ));
    }
    for (f, c, labels) in rank2_minors(chi)? {
        let clique = largest_in(&c, polarity, k);
        if clique.len() >= k {
            return Ok(Some(MonochromaticWitness {
                flat: f.to_vec(),
                elements: clique.iter().map(|&i| labels[i]).collect(),
            }));
        }
    }
    Ok(None)
}

/// Known diagonal Ramsey numbers `R(s, s)`.
pub fn diagonal_ramsey(s: usize) -> Option<u64> {
    match s {
        1 => Some(1),
        2 => Some(2),
        3 => Some(6),
        4 => Some(18),
        _ => None,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RamseyReport {
    pub ell: usize,
    /// Size of the monochromatic set sought, `ell + 2`.
    pub target: usize,
    pub n: usize,
    pub rank: usize,
    pub flats_scanned: usize,
    pub largest_positive: Option<MonochromaticWitness>,
    pub largest_negative: Option<MonochromaticWitness>,
    /// Some polarity reached `target`.
    pub dichotomy_holds: bool,
    /// `R(target, target)` when known.
    pub ramsey_number: Option<u64>,
    /// `(R^r - 1) / (r - 1)`, as an exact fraction.
    pub threshold_rank_denominator: Option<String>,
    /// `(R^r - 1) / (R - 1)`, the size of a projective geometry of order `R - 1`.
    pub threshold_projective: Option<String>,
    pub notes: Vec<String>,
}

/// Scan every rank-2 contraction by a flat for the largest monochromatic set
/// of each sign.
pub fn ramsey_scan(chi: &Chirotope, ell: usize) -> Result<RamseyReport> {
    let m = chi.underlying_matroid()?;
    if !m.is_simple() {
        return Err(Error::InvalidInput(
            "the underlying matroid must be simple".into(),
        ));
    }
    let target = ell + 2;
    let minors = rank2_minors(chi)?;
    let mut best_pos: Option<MonochromaticWitness> = None;
    let mut best_neg: Option<MonochromaticWitness> = None;
    for (f, c, labels) in &minors {
        for (polarity, slot) in [
            (Polarity::Plus, &mut best_pos),
            (Polarity::Minus, &mut best_neg),
        ] {
            let clique = largest_in(c, polarity, usize::MAX);
            if clique.len() >= 2
                && slot
                    .as_ref()
                    .is_none_or(|w| w.elements.len() < clique.len())
            {
                *slot = Some(MonochromaticWitness {
                    flat: f.to_vec(),
                    elements: clique.iter().map(|&i| labels[i]).collect(),
                });
            }
        }
    }
    let size = |w: &Option<MonochromaticWitness>| w.as_ref().map_or(0, |w| w.elements.len());
    let dichotomy_holds = size(&best_pos).max(size(&best_neg)) >= target;
    let ramsey_number = diagonal_ramsey(target);
    let r = chi.r;
    let (mut t1, mut t2) = (None, None);
    let mut notes = Vec::new();
    if let Some(n0) = ramsey_number {
        let power = BigInt::from(n0).pow(r as u32) - BigInt::one();
        if r > 1 {
            t1 = Some(BigRational::new(power.clone(), BigInt::from(r - 1)).to_string());
        }
        if n0 > 1 {
            t2 = Some(BigRational::new(power, BigInt::from(n0 - 1)).to_string());
        }
        if t1 != t2 {
            notes.push(
                "the two threshold formulas disagree; both are reported and neither is assumed"
                    .into(),
            );
        }
    } else {
        notes.push(format!(
            "R({target},{target}) is not known exactly; thresholds omitted"
        ));
    }
    Ok(RamseyReport {
        ell,
        target,
        n: chi.n,
        rank: r,
        flats_scanned: minors.len(),
        largest_positive: best_pos,
        largest_negative: best_neg,
        dichotomy_holds,
        ramsey_number,
        threshold_rank_denominator: t1,
        threshold_projective: t2,
        notes,
    })
}
