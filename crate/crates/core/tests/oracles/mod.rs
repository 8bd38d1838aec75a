//! Brute-force reference implementations, independent of the library code paths.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

/// The 16 cubic generators of the face ring of `C(8,4)`, as listed in the literature.
pub const C84_GENERATORS: [[usize; 3]; 16] = [
    [1, 3, 5],
    [1, 3, 6],
    [1, 3, 7],
    [1, 4, 6],
    [1, 4, 7],
    [1, 5, 7],
    [2, 4, 6],
    [2, 4, 7],
    [2, 4, 8],
    [2, 5, 7],
    [2, 5, 8],
    [2, 6, 8],
    [3, 5, 7],
    [3, 5, 8],
    [3, 6, 8],
    [4, 6, 8],
];

/// Hall basic commutators on `k` generators, counted by weight `1..=max_weight`.
///
/// Elements are kept in generation order, which is a valid Hall order because
/// all elements of a weight are created after every element of lower weight.
/// `[u, v]` is basic iff `u`, `v` are basic, `u > v`, and when `u = [x, y]`, `y <= v`.
pub fn hall_basis_counts(k: usize, max_weight: usize) -> Vec<u64> {
    // (weight, right factor of a bracket, if any)
    let mut elems: Vec<(usize, Option<usize>)> = (0..k).map(|_| (1, None)).collect();
    let mut counts = vec![0u64; max_weight + 1];
    counts[1] = k as u64;
    for n in 2..=max_weight {
        let mut fresh = Vec::new();
        for u in 0..elems.len() {
            for v in 0..u {
                if elems[u].0 + elems[v].0 != n {
                    continue;
                }
                if let Some(y) = elems[u].1 {
                    if y > v {
                        continue;
                    }
                }
                fresh.push((n, Some(v)));
            }
        }
        counts[n] = fresh.len() as u64;
        elems.extend(fresh);
    }
    counts
}

fn is_lyndon(w: &[usize]) -> bool {
    (1..w.len()).all(|i| {
        let rot: Vec<usize> = w[i..].iter().chain(&w[..i]).copied().collect();
        w < rot.as_slice()
    })
}

fn words(k: usize, len: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|w| {
                (0..k).map(move |c| {
                    let mut w = w.clone();
                    w.push(c);
                    w
                })
            })
            .collect();
    }
    out
}

/// Sphere spectrum of a wedge of spheres of the given dimensions, by counting
/// Lyndon words letter by letter. A word `w` gives a sphere of dimension
/// `sum (dim(letter) - 1) + 1`.
pub fn lyndon_spectrum(dims: &[u64], ceiling: u64) -> BTreeMap<u64, u64> {
    let step_min = dims.iter().map(|d| d - 1).min().unwrap();
    let max_len = ((ceiling.saturating_sub(1)) / step_min) as usize;
    let mut out = BTreeMap::new();
    for len in 1..=max_len {
        for w in words(dims.len(), len) {
            let dim: u64 = w.iter().map(|&c| dims[c] - 1).sum::<u64>() + 1;
            if dim <= ceiling && is_lyndon(&w) {
                *out.entry(dim).or_insert(0) += 1;
            }
        }
    }
    out
}

/// Smallest degree of `g_i * A = g_j * B` with `A != B` squarefree, `i != j`,
/// scanning every multiplier `A` outright rather than going through the lcm.
pub fn brute_min_relation_degree(m: usize, gens: &[BTreeSet<usize>]) -> Option<usize> {
    let mut best: Option<usize> = None;
    for i in 0..gens.len() {
        for j in 0..gens.len() {
            if i == j {
                continue;
            }
            for mask in 0u32..(1 << m) {
                let a: BTreeSet<usize> = (1..=m).filter(|v| mask & (1 << (v - 1)) != 0).collect();
                if !a.is_disjoint(&gens[i]) {
                    continue;
                }
                let total: BTreeSet<usize> = a.union(&gens[i]).copied().collect();
                if !gens[j].is_subset(&total) {
                    continue;
                }
                let b: BTreeSet<usize> = total.difference(&gens[j]).copied().collect();
                if a == b {
                    continue;
                }
                let deg = 2 * total.len();
                best = Some(best.map_or(deg, |x| x.min(deg)));
            }
        }
    }
    best
}

/// Facets of `C(n, d)` by the evenness condition: a `d`-set `X` is a facet iff
/// every pair of non-members is separated by an even number of members.
pub fn gale_evenness_facets(n: usize, d: usize) -> Vec<BTreeSet<usize>> {
    let mut out = Vec::new();
    for mask in 0u32..(1 << n) {
        if mask.count_ones() as usize != d {
            continue;
        }
        let inside = |v: usize| mask & (1 << (v - 1)) != 0;
        let outside: Vec<usize> = (1..=n).filter(|&v| !inside(v)).collect();
        let even = outside
            .windows(2)
            .all(|w| (w[0] + 1..w[1]).filter(|&v| inside(v)).count() % 2 == 0);
        if even {
            out.push((1..=n).filter(|&v| inside(v)).collect());
        }
    }
    out
}

/// Minimal non-faces of the complex generated by `facets`, over all subsets of `[1, n]`.
pub fn minimal_nonfaces_from_facets(n: usize, facets: &[BTreeSet<usize>]) -> Vec<Vec<usize>> {
    let is_face = |s: &BTreeSet<usize>| facets.iter().any(|f| s.is_subset(f));
    let mut out = Vec::new();
    for mask in 1u32..(1 << n) {
        let s: BTreeSet<usize> = (1..=n).filter(|v| mask & (1 << (v - 1)) != 0).collect();
        if is_face(&s) {
            continue;
        }
        let minimal = s.iter().all(|v| {
            let mut t = s.clone();
            t.remove(v);
            is_face(&t)
        });
        if minimal {
            out.push(s.into_iter().collect());
        }
    }
    out.sort();
    out
}

/// Reduced homology ranks indexed by degree `0..=top`.
pub type Ranks = Vec<i64>;

fn reduced_product(m: usize, n: usize, punctured: bool) -> Ranks {
    let top = m + n;
    let mut r = vec![0; top + 1];
    r[m] += 1;
    r[n] += 1;
    if !punctured {
        r[top] += 1;
    }
    r
}

/// Reduced homology of a connected sum of sphere products, built one copy at a
/// time from the cofibration `(T - U) -> X_i -> X_i / (T - U) ~ X_{i-1}`.
///
/// Each step solves the long exact sequence
/// `H_k(A) -> H_k(X) -> H_k(X/A) -> H_{k-1}(A)` for every admissible choice of
/// connecting-map ranks and keeps the solutions satisfying Poincaré duality
/// (with a one-dimensional top class). The solution must be unique.
pub fn les_connected_sum(copies: &[(usize, usize)]) -> Ranks {
    let (m0, n0) = copies[0];
    let top = m0 + n0;
    let mut current = reduced_product(m0, n0, false);
    for &(m, n) in &copies[1..] {
        assert_eq!(m + n, top);
        let a = reduced_product(m, n, true);
        let quotient = current.clone();
        // delta_k : H_k(X/A) -> H_{k-1}(A), for k in 1..=top.
        let slots: Vec<usize> = (1..=top).filter(|&k| quotient[k] > 0 && a[k - 1] > 0).collect();
        let bounds: Vec<i64> = slots.iter().map(|&k| quotient[k].min(a[k - 1])).collect();
        let mut solutions = BTreeSet::new();
        let mut choice = vec![0i64; slots.len()];
        loop {
            let mut delta = vec![0i64; top + 2];
            for (s, &k) in slots.iter().enumerate() {
                delta[k] = choice[s];
            }
            // rank H_k(X) = (dim H_k(A) - rank delta_{k+1}) + (dim H_k(X/A) - rank delta_k)
            let x: Ranks = (0..=top).map(|k| a[k] - delta[k + 1] + quotient[k] - delta[k]).collect();
            let dual = (1..top).all(|k| x[k] == x[top - k]) && x[top] == 1;
            if dual {
                solutions.insert(x);
            }
            let mut idx = 0;
            loop {
                if idx == choice.len() {
                    break;
                }
                if choice[idx] < bounds[idx] {
                    choice[idx] += 1;
                    break;
                }
                choice[idx] = 0;
                idx += 1;
            }
            if idx == choice.len() {
                break;
            }
        }
        assert_eq!(solutions.len(), 1, "exact sequence must have a unique dual solution");
        current = solutions.into_iter().next().unwrap();
    }
    current
}
