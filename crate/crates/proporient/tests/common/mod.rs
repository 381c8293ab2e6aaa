#![allow(dead_code)] // shared by several test binaries, none uses all of it

//! Shared test support: exhaustive small-graph corpora and seeded random
//! graph generators.

use proporient::graph::Graph;
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;
use std::sync::OnceLock;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Bit index of the pair (i, j), i < j, in an n-vertex edge mask.
fn pair_bit(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < n);
    i * n - i * (i + 1) / 2 + (j - i - 1)
}

fn mask_to_edges(n: usize, mask: u32) -> Vec<(usize, usize)> {
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if mask >> pair_bit(n, i, j) & 1 == 1 {
                edges.push((i, j));
            }
        }
    }
    edges
}

/// Canonical form: minimum edge mask over all relabelings. Only
/// degree-preserving relabelings can attain the minimum of a degree-sorted
/// layout, so vertices are first ordered by descending degree and only
/// permutations within equal-degree blocks are tried.
fn canonical_mask(n: usize, mask: u32) -> u32 {
    let mut degree = vec![0usize; n];
    for i in 0..n {
        for j in i + 1..n {
            if mask >> pair_bit(n, i, j) & 1 == 1 {
                degree[i] += 1;
                degree[j] += 1;
            }
        }
    }
    let mut base: Vec<usize> = (0..n).collect();
    base.sort_by_key(|&v| std::cmp::Reverse(degree[v]));
    let blocks: Vec<std::ops::Range<usize>> = {
        let mut blocks = Vec::new();
        let mut start = 0;
        for pos in 1..=n {
            if pos == n || degree[base[pos]] != degree[base[start]] {
                blocks.push(start..pos);
                start = pos;
            }
        }
        blocks
    };

    let mut best = u32::MAX;
    // layout: position -> original vertex
    let mut layout = base.clone();
    permute_blocks(&blocks, 0, &mut layout, &mut |layout| {
        let mut relabel = vec![0usize; n];
        for (position, &vertex) in layout.iter().enumerate() {
            relabel[vertex] = position;
        }
        let mut image = 0u32;
        for i in 0..n {
            for j in i + 1..n {
                if mask >> pair_bit(n, i, j) & 1 == 1 {
                    let (a, b) = (relabel[i].min(relabel[j]), relabel[i].max(relabel[j]));
                    image |= 1 << pair_bit(n, a, b);
                }
            }
        }
        best = best.min(image);
    });
    best
}

fn permute_blocks(
    blocks: &[std::ops::Range<usize>],
    which: usize,
    layout: &mut Vec<usize>,
    visit: &mut dyn FnMut(&[usize]),
) {
    let Some(block) = blocks.get(which) else {
        visit(layout);
        return;
    };
    let (start, len) = (block.start, block.len());
    permute_range(layout, start, len, &mut |layout| {
        permute_blocks(blocks, which + 1, layout, visit);
    });
}

/// Heap's algorithm over layout[lo..lo+len].
fn permute_range(
    layout: &mut Vec<usize>,
    lo: usize,
    len: usize,
    visit: &mut dyn FnMut(&mut Vec<usize>),
) {
    if len <= 1 {
        visit(layout);
        return;
    }
    for i in 0..len {
        permute_range(layout, lo, len - 1, visit);
        if len.is_multiple_of(2) {
            layout.swap(lo + i, lo + len - 1);
        } else {
            layout.swap(lo, lo + len - 1);
        }
    }
}

/// All graphs on exactly `n` vertices up to isomorphism, as canonical edge
/// masks, built by augmenting the (n-1)-vertex corpus with every possible
/// neighborhood of a new vertex.
fn nonisomorphic_masks(n: usize) -> Vec<u32> {
    if n == 0 {
        return vec![0];
    }
    let smaller = nonisomorphic_masks(n - 1);
    let mut seen = std::collections::HashSet::new();
    let mut out = Vec::new();
    for &small in &smaller {
        let mut lifted = 0u32;
        for i in 0..n - 1 {
            for j in i + 1..n - 1 {
                if small >> pair_bit(n - 1, i, j) & 1 == 1 {
                    lifted |= 1 << pair_bit(n, i, j);
                }
            }
        }
        for neighborhood in 0u32..1 << (n - 1) {
            let mut mask = lifted;
            for v in 0..n - 1 {
                if neighborhood >> v & 1 == 1 {
                    mask |= 1 << pair_bit(n, v, n - 1);
                }
            }
            let canon = canonical_mask(n, mask);
            if seen.insert(canon) {
                out.push(canon);
            }
        }
    }
    out
}

fn is_connected(g: &Graph) -> bool {
    g.connected_components().len() == 1
}

/// Connected graphs on exactly `n` vertices up to isomorphism.
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    static CACHE: OnceLock<Vec<Vec<Graph>>> = OnceLock::new();
    let all = CACHE.get_or_init(|| {
        (0..=7)
            .map(|n| {
                nonisomorphic_masks(n)
                    .into_iter()
                    .map(|mask| Graph::new(n, &mask_to_edges(n, mask)).unwrap())
                    .collect()
            })
            .collect()
    });
    all[n].iter().filter(|g| is_connected(g)).cloned().collect()
}

/// All graphs on exactly `n` vertices up to isomorphism (connected or not).
pub fn all_graphs(n: usize) -> Vec<Graph> {
    nonisomorphic_masks(n)
        .into_iter()
        .map(|mask| Graph::new(n, &mask_to_edges(n, mask)).unwrap())
        .collect()
}

/// Uniformly random graph with `n` vertices and `m` distinct edges.
pub fn random_graph(rng: &mut ChaCha8Rng, n: usize, m: usize) -> Graph {
    let mut all: Vec<(usize, usize)> =
        (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    all.shuffle(rng);
    all.truncate(m);
    Graph::new(n, &all).unwrap()
}

/// Random r-regular graph on n vertices via the configuration model with
/// rejection; panics if nr is odd or no simple pairing shows up.
pub fn random_regular(rng: &mut ChaCha8Rng, n: usize, r: usize) -> Graph {
    assert!((n * r).is_multiple_of(2) && r < n);
    'attempt: for _ in 0..10_000 {
        let mut stubs: Vec<usize> = (0..n).flat_map(|v| std::iter::repeat_n(v, r)).collect();
        stubs.shuffle(rng);
        let mut edges = Vec::with_capacity(n * r / 2);
        let mut seen = std::collections::HashSet::new();
        for pair in stubs.chunks(2) {
            let (u, v) = (pair[0], pair[1]);
            if u == v || !seen.insert((u.min(v), u.max(v))) {
                continue 'attempt;
            }
            edges.push((u, v));
        }
        return Graph::new(n, &edges).unwrap();
    }
    panic!("no simple {r}-regular pairing found for n={n}");
}
