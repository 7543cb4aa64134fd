//! Separators, connected components, and Tutte 3-connectivity.

use crate::matroid::Matroid;
use crate::subset::Subset;

fn find(parent: &mut [usize], x: usize) -> usize {
    let mut root = x;
    while parent[root] != root {
        root = parent[root];
    }
    let mut cur = x;
    while parent[cur] != root {
        let next = parent[cur];
        parent[cur] = root;
        cur = next;
    }
    root
}

/// Components of the matroid on `ground` whose rank function is `rank`.
///
/// Two elements share a component iff they are joined by a chain of
/// fundamental circuits with respect to one fixed basis. Loops and coloops
/// come out as singleton parts. Parts are ordered by smallest member.
pub fn components_with(ground: Subset, rank: impl Fn(Subset) -> usize) -> Vec<Subset> {
    let elems = ground.to_vec();
    if elems.is_empty() {
        return Vec::new();
    }
    let max = *elems.last().unwrap();
    let mut parent: Vec<usize> = (0..=max).collect();
    let mut basis = Subset::EMPTY;
    let mut rb = 0;
    for &e in &elems {
        if rank(basis.with(e)) > rb {
            basis = basis.with(e);
            rb += 1;
        }
    }
    for e in ground.difference(basis) {
        for b in basis {
            if rank(basis.without(b).with(e)) == rb {
                let (x, y) = (find(&mut parent, e), find(&mut parent, b));
                if x != y {
                    parent[x] = y;
                }
            }
        }
    }
    let mut parts: Vec<Subset> = Vec::new();
    let mut roots: Vec<usize> = Vec::new();
    for &e in &elems {
        let root = find(&mut parent, e);
        match roots.iter().position(|&r| r == root) {
            Some(i) => parts[i] = parts[i].with(e),
            None => {
                roots.push(root);
                parts.push(Subset::singleton(e));
            }
        }
    }
    parts
}

/// Partition of the ground set into connected components.
pub fn components(m: &Matroid) -> Vec<Subset> {
    components_with(m.ground(), |s| m.r(s))
}

pub fn is_connected(m: &Matroid) -> bool {
    components(m).len() <= 1
}

/// Is `x` a separator, i.e. `r(X) + r(E - X) = r(M)`?
pub fn is_separator(m: &Matroid, x: Subset) -> bool {
    m.r(x) + m.r(m.ground().difference(x)) == m.rank()
}

/// Is the restriction `M|f` connected?
pub fn restriction_connected(m: &Matroid, f: Subset) -> bool {
    components_with(f, |s| m.r(s)).len() <= 1
}

/// Is the contraction `M/c` connected?
pub fn contraction_connected(m: &Matroid, c: Subset) -> bool {
    let rc = m.r(c);
    components_with(m.ground().difference(c), |s| m.r(s | c) - rc).len() <= 1
}

/// Tutte 3-connectivity: connected, at least four elements, and no
/// 2-separation `(X, E - X)` with both sides of size at least two.
pub fn is_3connected(m: &Matroid) -> bool {
    let n = m.n();
    if n < 4 || !is_connected(m) {
        return false;
    }
    let full = m.ground();
    let r = m.rank();
    // X and E - X give the same test, so fix element 0 inside X
    for x in full.without(0).subsets() {
        let x = x.with(0);
        let size = x.len();
        if size < 2 || n - size < 2 {
            continue;
        }
        if m.r(x) + m.r(full.difference(x)) <= r + 1 {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{extremal_family, uniform, whirl_like};

    #[test]
    fn uniform_is_connected() {
        assert_eq!(components(&uniform(2, 3).unwrap()).len(), 1);
    }

    #[test]
    fn two_coloops_are_two_components() {
        let m = uniform(1, 1)
            .unwrap()
            .direct_sum(&uniform(1, 1).unwrap())
            .unwrap();
        let parts = components(&m);
        assert_eq!(parts, vec![Subset::singleton(0), Subset::singleton(1)]);
    }

    #[test]
    fn loops_are_singletons() {
        let m = uniform(2, 3)
            .unwrap()
            .direct_sum(&uniform(0, 1).unwrap())
            .unwrap();
        let parts = components(&m);
        assert_eq!(parts.len(), 2);
        assert!(parts.contains(&Subset::singleton(3)));
    }

    #[test]
    fn three_connectivity_examples() {
        assert!(is_3connected(&uniform(2, 4).unwrap()));
        assert!(is_3connected(&whirl_like(3, 3).unwrap()));
        assert!(!is_3connected(&extremal_family(3, 2).unwrap()));
        assert!(!is_3connected(&uniform(2, 3).unwrap()));
    }

    #[test]
    fn u24_has_no_two_separation_by_brute_force() {
        let m = uniform(2, 4).unwrap();
        let full = m.ground();
        for x in full.subsets() {
            if x.len() == 2 {
                assert!(m.r(x) + m.r(full - x) - m.rank() >= 2);
            }
        }
    }
}
