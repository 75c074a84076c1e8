//! The link family `L(k1, ..., kn)`: its hub-and-cycle decomposition graph,
//! the raw edge/region presentation of the double branched cover, the
//! simplified two-relators-per-index presentation, and the substitution
//! between them.
//!
//! Indices are 1-based in names (`a1`, `b2`, ...) and wrap modulo `n`.

use crate::error::{Error, Result};
use crate::presentation::Presentation;
use crate::tietze::Substitution;
use crate::word::Word;

pub const RAW_LABEL: &str = "raw-brunner";
pub const STANDARD_LABEL: &str = "standard";

/// `n = k.len() >= 1` and the twist parameters `k1, ..., kn`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FamilyParams {
    k: Vec<i64>,
}

impl FamilyParams {
    pub fn new(k: Vec<i64>) -> Result<Self> {
        if k.is_empty() {
            return Err(Error::EmptyFamily);
        }
        Ok(FamilyParams { k })
    }

    /// Checks an explicit `n` against the list length.
    pub fn with_n(n: usize, k: Vec<i64>) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyFamily);
        }
        if n != k.len() {
            return Err(Error::FamilySizeMismatch { n, len: k.len() });
        }
        FamilyParams::new(k)
    }

    /// All parameter vectors of length `n` with entries in `lo..=hi`.
    pub fn sweep(n: usize, lo: i64, hi: i64) -> Vec<FamilyParams> {
        let mut out = vec![Vec::new()];
        for _ in 0..n {
            out = out
                .into_iter()
                .flat_map(|prefix: Vec<i64>| {
                    (lo..=hi).map(move |v| {
                        let mut next = prefix.clone();
                        next.push(v);
                        next
                    })
                })
                .collect();
        }
        out.into_iter().map(|k| FamilyParams { k }).collect()
    }

    pub fn n(&self) -> usize {
        self.k.len()
    }

    pub fn k(&self) -> &[i64] {
        &self.k
    }

    /// `k_i` for a 1-based, wrapping index.
    pub fn k_at(&self, i: i64) -> i64 {
        self.k[self.wrap(i) - 1]
    }

    /// Maps any integer index to `1..=n`.
    pub fn wrap(&self, i: i64) -> usize {
        let n = self.n() as i64;
        ((i - 1).rem_euclid(n) + 1) as usize
    }

    /// `k` rotated left by one position: `(k2, ..., kn, k1)`.
    pub fn rotated(&self) -> FamilyParams {
        let mut k = self.k.clone();
        k.rotate_left(1);
        FamilyParams { k }
    }

    /// When every `k_i = -k`, the double branched cover is the `n`-fold
    /// cyclic branched cover of the pretzel knot `P(3, -3, -2k-1)`.
    pub fn pretzel_tag(&self) -> Option<PretzelCoverTag> {
        let first = self.k[0];
        self.k.iter().all(|&v| v == first).then(|| PretzelCoverTag {
            n: self.n(),
            k: -first,
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PretzelCoverTag {
    pub n: usize,
    pub k: i64,
}

impl PretzelCoverTag {
    pub fn describe(&self) -> String {
        format!(
            "{}-fold cyclic branched cover of the pretzel knot P(3,-3,{})",
            self.n,
            -2 * self.k - 1
        )
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WeightedEdge {
    pub from: usize,
    pub to: usize,
    pub weight: i64,
}

/// Decomposition graph: a `2n`-cycle on vertices `1..=2n` whose edges carry
/// `k1, +1, k2, +1, ...`, and a hub vertex `0` joined to every cycle vertex
/// with weight `-2` (odd vertices) or `+1` (even vertices).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompositionGraphSpec {
    pub cycle_vertices: Vec<usize>,
    pub cycle_edges: Vec<WeightedEdge>,
    pub hub_edges: Vec<WeightedEdge>,
}

pub fn build_graph_spec(params: &FamilyParams) -> DecompositionGraphSpec {
    let m = 2 * params.n();
    let cycle_vertices: Vec<usize> = (1..=m).collect();
    let cycle_edges = (1..=m)
        .map(|v| WeightedEdge {
            from: v,
            to: v % m + 1,
            weight: if v % 2 == 1 { params.k[(v - 1) / 2] } else { 1 },
        })
        .collect();
    let hub_edges = (1..=m)
        .map(|v| WeightedEdge {
            from: 0,
            to: v,
            weight: if v % 2 == 1 { -2 } else { 1 },
        })
        .collect();
    DecompositionGraphSpec {
        cycle_vertices,
        cycle_edges,
        hub_edges,
    }
}

/// Generator layout of the raw presentation: six blocks of `n`.
const RAW_BLOCKS: [&str; 6] = ["e", "f", "g", "b", "a", "c"];

fn raw_id(params: &FamilyParams, block: usize, i: i64) -> u32 {
    (block * params.n() + params.wrap(i) - 1) as u32
}

/// Edge generators `e, f, g, b` and region generators `a, c`, with the local
/// edge relations
///   `e_i = a_i^{k_i}`, `b_i = c_i^-1`, `f_i = (a_i^-1 c_i)^-2`, `g_i = c_{i-1}^-1 a_i`
/// and the global cycle relations
///   `f_i^-1 e_i g_i = 1`, `f_i^-1 b_i g_{i+1} = 1`.
pub fn build_raw_presentation(params: &FamilyParams) -> Presentation {
    let n = params.n();
    let names = RAW_BLOCKS
        .iter()
        .flat_map(|b| (1..=n).map(move |i| format!("{b}{i}")))
        .collect();
    let [e, f, g, b, a, c] = [0, 1, 2, 3, 4, 5];
    let gen = |block: usize, i: i64| raw_id(params, block, i);
    let mut relators = Vec::with_capacity(6 * n);
    let indices: Vec<i64> = (1..=n as i64).collect();
    for &i in &indices {
        relators.push(Word::free_reduce([(gen(e, i), 1), (gen(a, i), -params.k_at(i))]));
    }
    for &i in &indices {
        relators.push(Word::free_reduce([(gen(b, i), 1), (gen(c, i), 1)]));
    }
    for &i in &indices {
        let inner = Word::free_reduce([(gen(a, i), -1), (gen(c, i), 1)]);
        relators.push(Word::generator(gen(f, i)).concat(&inner.pow(2)));
    }
    for &i in &indices {
        relators.push(Word::free_reduce([
            (gen(g, i), 1),
            (gen(a, i), -1),
            (gen(c, i - 1), 1),
        ]));
    }
    for &i in &indices {
        relators.push(Word::free_reduce([(gen(f, i), -1), (gen(e, i), 1), (gen(g, i), 1)]));
    }
    for &i in &indices {
        relators.push(Word::free_reduce([
            (gen(f, i), -1),
            (gen(b, i), 1),
            (gen(g, i + 1), 1),
        ]));
    }
    Presentation::new(names, relators, RAW_LABEL).expect("family generators are well formed")
}

/// Index of `a_i` (1-based, wrapping) in the standard presentation.
pub fn std_a(params: &FamilyParams, i: i64) -> u32 {
    (params.wrap(i) - 1) as u32
}

/// Index of `b_i` (1-based, wrapping) in the standard presentation.
pub fn std_b(params: &FamilyParams, i: i64) -> u32 {
    (params.n() + params.wrap(i) - 1) as u32
}

/// Generators `a1..an, b1..bn`; relators
///   `a_{i+1}^-1 b_i^-1 a_i b_i a_i` for every `i`, then
///   `a_i^{-k_i} b_i a_i b_i b_{i-1}^-1` for every `i`.
pub fn build_standard_presentation(params: &FamilyParams) -> Presentation {
    let n = params.n();
    let names = (1..=n)
        .map(|i| format!("a{i}"))
        .chain((1..=n).map(|i| format!("b{i}")))
        .collect();
    let a = |i: i64| std_a(params, i);
    let b = |i: i64| std_b(params, i);
    let mut relators = Vec::with_capacity(2 * n);
    for i in 1..=n as i64 {
        relators.push(Word::free_reduce([
            (a(i + 1), -1),
            (b(i), -1),
            (a(i), 1),
            (b(i), 1),
            (a(i), 1),
        ]));
    }
    for i in 1..=n as i64 {
        relators.push(Word::free_reduce([
            (a(i), -params.k_at(i)),
            (b(i), 1),
            (a(i), 1),
            (b(i), 1),
            (b(i - 1), -1),
        ]));
    }
    Presentation::new(names, relators, STANDARD_LABEL).expect("family generators are well formed")
}

/// `e_i -> a_i^{k_i}`, `c_i -> b_i^-1`, `f_i -> (a_i^-1 b_i^-1)^-2`,
/// `g_i -> b_{i-1} a_i`; `a_i` and `b_i` map to themselves.
pub fn elimination_substitution(params: &FamilyParams) -> Substitution {
    let n = params.n();
    let a = |i: i64| Word::generator(std_a(params, i));
    let b = |i: i64| Word::generator(std_b(params, i));
    let mut images = vec![Word::identity(); 6 * n];
    for i in 1..=n as i64 {
        let slot = |block: usize| raw_id(params, block, i) as usize;
        images[slot(0)] = Word::power(std_a(params, i), params.k_at(i));
        images[slot(1)] = a(i).invert().concat(&b(i).invert()).pow(-2);
        images[slot(2)] = b(i - 1).concat(&a(i));
        images[slot(3)] = b(i);
        images[slot(4)] = a(i);
        images[slot(5)] = b(i).invert();
    }
    Substitution::new(images)
}
