//! Test-only oracles, independent of the library's relabel, canonical form
//! and vertex closure code.

#![allow(dead_code)]

use std::collections::HashMap;

use quadglue::{Exponent, Scheme, Side, Symmetry, SymmetryGroup};
use rand::seq::SliceRandom;
use rand::Rng;

/// Random scheme of length `len` with raw (unnormalized) letter identities
/// and exponents.
pub fn random_scheme<R: Rng>(rng: &mut R, len: usize) -> Scheme {
    let mut positions: Vec<usize> = (0..len).collect();
    positions.shuffle(rng);
    let pairs = rng.random_range(0..=len / 2);
    let mut letters: Vec<u32> = (0..len as u32).collect();
    letters.shuffle(rng);
    let mut sides = vec![None; len];
    let mut next = 0;
    for k in 0..pairs {
        for &p in &positions[2 * k..2 * k + 2] {
            sides[p] = Some(letters[next]);
        }
        next += 1;
    }
    for &p in &positions[2 * pairs..] {
        sides[p] = Some(letters[next]);
        next += 1;
    }
    let sides = sides
        .into_iter()
        .map(|letter| {
            let exponent = if rng.random_bool(0.5) { Exponent::Plus } else { Exponent::Minus };
            Side::new(letter.unwrap(), exponent)
        })
        .collect();
    Scheme::new(sides).unwrap()
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    fn find(&mut self, x: usize) -> usize {
        if self.parent[x] != x {
            let root = self.find(self.parent[x]);
            self.parent[x] = root;
        }
        self.parent[x]
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        self.parent[ra] = rb;
    }
}

/// Corner partition by union-find over the explicit identifications of each
/// glued pair: `g(x) ~ h(1 - x)` for opposite exponents, `g(x) ~ h(x)` for
/// equal ones. Returns the root of every corner.
pub fn union_find_corners(scheme: &Scheme) -> Vec<usize> {
    let sides = scheme.sides();
    let m = sides.len();
    let mut uf = UnionFind::new(m);
    for p in 0..m {
        for q in p + 1..m {
            if sides[p].letter != sides[q].letter {
                continue;
            }
            let (p_tail, p_head) = (p, (p + 1) % m);
            let (q_tail, q_head) = (q, (q + 1) % m);
            if sides[p].exponent == sides[q].exponent {
                uf.union(p_tail, q_tail);
                uf.union(p_head, q_head);
            } else {
                uf.union(p_tail, q_head);
                uf.union(p_head, q_tail);
            }
        }
    }
    (0..m).map(|c| uf.find(c)).collect()
}

/// Whether `labels` induces the same partition as the union-find oracle and
/// numbers classes by first corner.
pub fn agrees_with_oracle(scheme: &Scheme, labels: &[usize], class_count: usize) -> bool {
    let roots = union_find_corners(scheme);
    let m = roots.len();
    for i in 0..m {
        for j in 0..m {
            if (labels[i] == labels[j]) != (roots[i] == roots[j]) {
                return false;
            }
        }
    }
    let mut distinct = roots.clone();
    distinct.sort();
    distinct.dedup();
    let mut seen = 0;
    for &l in labels {
        if l > seen {
            return false;
        }
        if l == seen {
            seen += 1;
        }
    }
    distinct.len() == class_count && seen == class_count
}

/// Whether `b` is `a` under some letter bijection, each letter optionally
/// inverted. Positional comparison only.
pub fn is_relabeling(a: &[Side], b: &[Side]) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let mut forward: HashMap<u32, (u32, bool)> = HashMap::new();
    let mut backward: HashMap<u32, u32> = HashMap::new();
    for (x, y) in a.iter().zip(b) {
        let flipped = x.exponent != y.exponent;
        match forward.get(&x.letter.0) {
            Some(&(target, f)) => {
                if target != y.letter.0 || f != flipped {
                    return false;
                }
            }
            None => {
                if backward.contains_key(&y.letter.0) {
                    return false;
                }
                forward.insert(x.letter.0, (y.letter.0, flipped));
                backward.insert(y.letter.0, x.letter.0);
            }
        }
    }
    true
}

/// Image of `scheme` under `g`, built from permute and flip.
pub fn act(scheme: &Scheme, g: Symmetry) -> Scheme {
    let base = if g.reflected { scheme.flip() } else { scheme.clone() };
    base.permute(g.rotation).unwrap()
}

/// Brute-force equivalence: some group element maps `a` to a relabeling of `b`.
pub fn equivalent_by_search(a: &Scheme, b: &Scheme, group: &SymmetryGroup) -> bool {
    group
        .elements()
        .iter()
        .any(|&g| is_relabeling(act(a, g).sides(), b.sides()))
}

/// Greedy grouping of `schemes` into classes by pairwise brute-force
/// equivalence. Returns the class index of every scheme.
pub fn group_by_search(schemes: &[Scheme], group: &SymmetryGroup) -> (usize, Vec<usize>) {
    let mut representatives: Vec<&Scheme> = Vec::new();
    let mut class_of = Vec::with_capacity(schemes.len());
    for s in schemes {
        match representatives
            .iter()
            .position(|r| equivalent_by_search(r, s, group))
        {
            Some(i) => class_of.push(i),
            None => {
                class_of.push(representatives.len());
                representatives.push(s);
            }
        }
    }
    (representatives.len(), class_of)
}

/// Closed-form count of gluings of an `m`-gon with at least one pair:
/// `sum_{k >= 1} m! / (k! (m - 2k)!)`.
pub fn raw_stream_size(m: usize) -> u128 {
    let fact = |n: usize| (1..=n as u128).product::<u128>();
    (1..=m / 2).map(|k| fact(m) / (fact(k) * fact(m - 2 * k))).sum()
}
