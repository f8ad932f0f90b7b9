//! Shared helpers for the integration suites: independent oracles
//! (minor-gcd, GF(2) rank) and seeded random generators for matrices,
//! unimodular conjugators, and permutation modules.

#![allow(dead_code)]

use noether_core::{IntegerMatrix, LatticeAction, DEFAULT_MAX_GROUP_ORDER};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::Rng;

pub fn bi(x: i64) -> BigInt {
    BigInt::from(x)
}

pub fn row(xs: &[i64]) -> Vec<BigInt> {
    xs.iter().map(|&x| BigInt::from(x)).collect()
}

/// All k-element subsets of `0..n` in lexicographic order.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn rec(start: usize, n: usize, k: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == k {
            out.push(current.clone());
            return;
        }
        for i in start..n {
            current.push(i);
            rec(i + 1, n, k, current, out);
            current.pop();
        }
    }
    rec(0, n, k, &mut current, &mut out);
    out
}

/// The gcd of all `k×k` minors of `a` (zero when every minor vanishes),
/// computed by direct enumeration — an oracle independent of the Smith
/// normal form elimination.
pub fn minor_gcd(a: &IntegerMatrix, k: usize) -> BigInt {
    let mut g = BigInt::zero();
    for rows in combinations(a.rows(), k) {
        for cols in combinations(a.cols(), k) {
            let sub = IntegerMatrix::from_fn(k, k, |i, j| a.get(rows[i], cols[j]).clone());
            g = g.gcd(&sub.det());
            if g.is_one() {
                return g;
            }
        }
    }
    g.abs()
}

/// Rank of `a` over GF(2) by Gaussian elimination on bitmask rows.
pub fn f2_rank(a: &IntegerMatrix) -> usize {
    let mut rows: Vec<u128> = (0..a.rows())
        .map(|i| {
            (0..a.cols()).fold(0u128, |acc, j| {
                if a.get(i, j).is_odd() {
                    acc | (1 << j)
                } else {
                    acc
                }
            })
        })
        .collect();
    let mut rank = 0;
    for col in 0..a.cols() {
        let bit = 1u128 << col;
        let Some(pivot) = (rank..rows.len()).find(|&i| rows[i] & bit != 0) else {
            continue;
        };
        rows.swap(rank, pivot);
        for i in 0..rows.len() {
            if i != rank && rows[i] & bit != 0 {
                rows[i] ^= rows[rank];
            }
        }
        rank += 1;
    }
    rank
}

/// Random matrix with entries uniform in `[-bound, bound]`.
pub fn random_matrix(rng: &mut impl Rng, rows: usize, cols: usize, bound: i64) -> IntegerMatrix {
    IntegerMatrix::from_fn(rows, cols, |_, _| BigInt::from(rng.gen_range(-bound..=bound)))
}

/// Random unimodular matrix: the identity stirred by `ops` elementary row
/// operations (transvections, swaps, and sign flips).
pub fn random_unimodular(rng: &mut impl Rng, n: usize, ops: usize) -> IntegerMatrix {
    let mut m = IntegerMatrix::identity(n);
    if n < 2 {
        return m;
    }
    for _ in 0..ops {
        let i = rng.gen_range(0..n);
        let mut j = rng.gen_range(0..n);
        while j == i {
            j = rng.gen_range(0..n);
        }
        match rng.gen_range(0..4) {
            0 | 1 => {
                // row_j += ±row_i
                let sign = if rng.gen_bool(0.5) { 1 } else { -1 };
                for c in 0..n {
                    let v = m.get(j, c) + m.get(i, c) * BigInt::from(sign);
                    m.set(j, c, v);
                }
            }
            2 => {
                for c in 0..n {
                    let a = m.get(i, c).clone();
                    let b = m.get(j, c).clone();
                    m.set(i, c, b);
                    m.set(j, c, a);
                }
            }
            _ => {
                for c in 0..n {
                    let v = -m.get(i, c);
                    m.set(i, c, v);
                }
            }
        }
    }
    m
}

/// Block-diagonal assembly of square blocks.
pub fn block_diag(blocks: &[IntegerMatrix]) -> IntegerMatrix {
    let n: usize = blocks.iter().map(IntegerMatrix::rows).sum();
    let mut m = IntegerMatrix::zeros(n, n);
    let mut offset = 0;
    for b in blocks {
        assert!(b.is_square(), "block_diag expects square blocks");
        for i in 0..b.rows() {
            for j in 0..b.cols() {
                m.set(offset + i, offset + j, b.get(i, j).clone());
            }
        }
        offset += b.rows();
    }
    m
}

/// Closes a seed set of bitmasks under XOR (a subgroup of `C₂^k`).
fn xor_closure(seed: &[u32]) -> Vec<u32> {
    let mut set = vec![0u32];
    let mut frontier = vec![0u32];
    while let Some(x) = frontier.pop() {
        for &g in seed {
            let y = x ^ g;
            if !set.contains(&y) {
                set.push(y);
                frontier.push(y);
            }
        }
    }
    set.sort_unstable();
    set
}

/// A random direct sum of coset permutation modules for `C₂^k`
/// (`k = 2` or `3`), optionally conjugated by a random unimodular matrix.
/// Generators are named `t1..tk`.  These are exactly the module classes on
/// which every irrationality test must stay silent.
pub fn random_permutation_action(rng: &mut impl Rng, k: usize, conjugate: bool) -> LatticeAction {
    let masks: Vec<u32> = (0..1u32 << k).collect();
    let summands = rng.gen_range(1..=3);
    // Per summand: the subgroup we quotient by, as an XOR-closed mask set.
    let mut cosets: Vec<Vec<Vec<u32>>> = Vec::new();
    let mut total_rank = 0;
    for _ in 0..summands {
        let seed: Vec<u32> = masks[1..]
            .iter()
            .copied()
            .filter(|_| rng.gen_bool(0.5))
            .collect();
        let subgroup = xor_closure(&seed);
        let classes: Vec<Vec<u32>> = {
            let mut seen: Vec<Vec<u32>> = Vec::new();
            for &m in &masks {
                let mut class: Vec<u32> = subgroup.iter().map(|&s| s ^ m).collect();
                class.sort_unstable();
                if !seen.contains(&class) {
                    seen.push(class);
                }
            }
            seen.sort();
            seen
        };
        if total_rank + classes.len() > 10 {
            break;
        }
        total_rank += classes.len();
        cosets.push(classes);
    }
    if cosets.is_empty() {
        cosets.push(vec![masks.clone()]);
        total_rank = 1;
    }
    let rank = total_rank;
    let permutation_matrix = |gen_mask: u32| -> IntegerMatrix {
        let mut m = IntegerMatrix::zeros(rank, rank);
        let mut offset = 0;
        for classes in &cosets {
            for (i, class) in classes.iter().enumerate() {
                let image_member = class[0] ^ gen_mask;
                let j = classes
                    .iter()
                    .position(|c| c.contains(&image_member))
                    .expect("cosets partition the group");
                m.set(offset + i, offset + j, BigInt::one());
            }
            offset += classes.len();
        }
        m
    };
    let conjugator = if conjugate {
        let ops = rng.gen_range(2..=4);
        Some(random_unimodular(rng, rank, ops))
    } else {
        None
    };
    let generators: Vec<(String, IntegerMatrix)> = (0..k)
        .map(|i| {
            let name = format!("t{}", i + 1);
            let a = permutation_matrix(1 << i);
            let a = match &conjugator {
                Some(p) => {
                    let pinv = noether_core::matrix::unimodular_inverse(p)
                        .expect("elementary products are unimodular");
                    p.mul(&a).mul(&pinv)
                }
                None => a,
            };
            (name, a)
        })
        .collect();
    LatticeAction::from_generators(&generators, None, DEFAULT_MAX_GROUP_ORDER)
        .expect("commuting involutions close to an elementary abelian 2-group")
}

/// A faithful action of `C₂^k` built from rank-1 character summands and
/// rank-2 signed-swap summands, optionally conjugated by a random unimodular
/// matrix.  The `k` "delta" characters (`t_i` acts by `−1` exactly on the
/// `i`-th one) are always present, which forces faithfulness — and each
/// contributes a `ℤ/2` to `H¹` of the full group, so these actions always
/// carry non-trivial cohomology.
pub fn random_mixed_action(rng: &mut impl Rng, k: usize, conjugate: bool) -> LatticeAction {
    let mut blocks_per_gen: Vec<Vec<IntegerMatrix>> = vec![Vec::new(); k];
    for d in 0..k {
        for (i, blocks) in blocks_per_gen.iter_mut().enumerate() {
            blocks.push(IntegerMatrix::from_i64(&[&[if i == d { -1 } else { 1 }]]));
        }
    }
    let extras = rng.gen_range(1..=2);
    for _ in 0..extras {
        if rng.gen_bool(0.5) {
            // Another character: each generator acts by an independent sign.
            for blocks in blocks_per_gen.iter_mut() {
                let sign: i64 = if rng.gen_bool(0.5) { -1 } else { 1 };
                blocks.push(IntegerMatrix::from_i64(&[&[sign]]));
            }
        } else {
            // Rank-2 summand: each generator acts by one of the four
            // commuting involutions ±I, ±swap.
            for blocks in blocks_per_gen.iter_mut() {
                let b = match rng.gen_range(0..4) {
                    0 => IntegerMatrix::identity(2),
                    1 => IntegerMatrix::from_i64(&[&[0, 1], &[1, 0]]),
                    2 => IntegerMatrix::from_i64(&[&[-1, 0], &[0, -1]]),
                    _ => IntegerMatrix::from_i64(&[&[0, -1], &[-1, 0]]),
                };
                blocks.push(b);
            }
        }
    }
    let rank: usize = blocks_per_gen[0].iter().map(IntegerMatrix::rows).sum();
    let conjugator = if conjugate {
        let ops = rng.gen_range(2..=4);
        Some(random_unimodular(rng, rank, ops))
    } else {
        None
    };
    let generators: Vec<(String, IntegerMatrix)> = blocks_per_gen
        .iter()
        .enumerate()
        .map(|(i, blocks)| {
            let a = block_diag(blocks);
            let a = match &conjugator {
                Some(p) => {
                    let pinv = noether_core::matrix::unimodular_inverse(p)
                        .expect("elementary products are unimodular");
                    p.mul(&a).mul(&pinv)
                }
                None => a,
            };
            (format!("t{}", i + 1), a)
        })
        .collect();
    LatticeAction::from_generators(&generators, None, DEFAULT_MAX_GROUP_ORDER)
        .expect("commuting involutions close to an elementary abelian 2-group")
}
