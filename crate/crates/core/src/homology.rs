//! Abelianization and Smith normal form over the integers.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use crate::presentation::Presentation;

/// Dense row-major integer matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            entries: vec![0; rows * cols],
        }
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged matrix");
        IntMatrix {
            rows: rows.len(),
            cols,
            entries: rows.concat(),
        }
    }

    pub fn get(&self, r: usize, c: usize) -> i64 {
        self.entries[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[i64] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }
}

/// Exponent-sum matrix: one row per relator, one column per generator.
pub fn abelianize(p: &Presentation) -> IntMatrix {
    let cols = p.generator_count();
    let mut m = IntMatrix::zeros(p.relators().len(), cols);
    for (r, rel) in p.relators().iter().enumerate() {
        for s in rel.syllables() {
            m.entries[r * cols + s.gen as usize] += s.exp;
        }
    }
    m
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SnfResult {
    /// Nonzero diagonal entries `d1 | d2 | ...`, units included.
    pub invariant_factors: Vec<BigUint>,
    pub free_rank: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum H1Order {
    Finite(BigUint),
    Infinite,
}

impl SnfResult {
    pub fn order(&self) -> H1Order {
        if self.free_rank > 0 {
            H1Order::Infinite
        } else {
            H1Order::Finite(self.invariant_factors.iter().product())
        }
    }

    pub fn to_json(&self) -> Value {
        let order = match self.order() {
            H1Order::Finite(n) => big_to_json(&n),
            H1Order::Infinite => json!("infinite"),
        };
        json!({
            "invariant_factors": self.invariant_factors.iter().map(big_to_json).collect::<Vec<_>>(),
            "free_rank": self.free_rank,
            "order": order,
        })
    }
}

fn big_to_json(n: &BigUint) -> Value {
    match u64::try_from(n) {
        Ok(v) => json!(v),
        Err(_) => json!(n.to_string()),
    }
}

/// Smith normal form of the relation matrix, read as the cokernel
/// `Z^cols / rowspace`.
///
/// Pivots are the smallest nonzero absolute value in the remaining block,
/// ties broken by lowest `(row, col)`.
pub fn smith_normal_form(m: &IntMatrix) -> SnfResult {
    let rows = m.rows;
    let cols = m.cols;
    let mut a: Vec<Vec<BigInt>> = (0..rows)
        .map(|r| m.row(r).iter().map(|&v| BigInt::from(v)).collect())
        .collect();

    let mut t = 0;
    while t < rows.min(cols) {
        let Some((pr, pc)) = smallest_in_block(&a, t) else {
            break;
        };
        a.swap(t, pr);
        swap_cols(&mut a, t, pc);

        loop {
            // clear column t and row t by Euclidean division
            let mut clean = true;
            for r in t + 1..rows {
                if a[r][t].is_zero() {
                    continue;
                }
                let q = a[r][t].div_floor(&a[t][t]);
                row_sub(&mut a, r, t, &q);
                if !a[r][t].is_zero() {
                    clean = false;
                }
            }
            for c in t + 1..cols {
                if a[t][c].is_zero() {
                    continue;
                }
                let q = a[t][c].div_floor(&a[t][t]);
                col_sub(&mut a, c, t, &q);
                if !a[t][c].is_zero() {
                    clean = false;
                }
            }
            if !clean {
                // smaller remainder somewhere in row t / column t becomes the pivot
                let (mut br, mut bc) = (t, t);
                for r in t..rows {
                    if !a[r][t].is_zero() && a[r][t].abs() < a[br][bc].abs() {
                        (br, bc) = (r, t);
                    }
                }
                for c in t..cols {
                    if !a[t][c].is_zero() && a[t][c].abs() < a[br][bc].abs() {
                        (br, bc) = (t, c);
                    }
                }
                a.swap(t, br);
                swap_cols(&mut a, t, bc);
                continue;
            }
            // the pivot must divide the whole remaining block
            let pivot = a[t][t].clone();
            let offender = (t + 1..rows).find(|&r| (t + 1..cols).any(|c| !a[r][c].is_multiple_of(&pivot)));
            match offender {
                Some(r) => {
                    let one = -BigInt::one();
                    row_sub(&mut a, t, r, &one);
                }
                None => break,
            }
        }
        t += 1;
    }

    let invariant_factors: Vec<BigUint> = (0..rows.min(cols))
        .map(|i| a[i][i].abs())
        .filter(|d| !d.is_zero())
        .map(|d| d.to_biguint().expect("absolute value"))
        .collect();
    SnfResult {
        free_rank: cols - invariant_factors.len(),
        invariant_factors,
    }
}

fn smallest_in_block(a: &[Vec<BigInt>], t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for (r, row) in a.iter().enumerate().skip(t) {
        for (c, v) in row.iter().enumerate().skip(t) {
            if v.is_zero() {
                continue;
            }
            match best {
                Some((br, bc)) if a[br][bc].abs() <= v.abs() => {}
                _ => best = Some((r, c)),
            }
        }
    }
    best
}

fn swap_cols(a: &mut [Vec<BigInt>], i: usize, j: usize) {
    if i != j {
        for row in a.iter_mut() {
            row.swap(i, j);
        }
    }
}

/// row[dst] -= q * row[src]
fn row_sub(a: &mut [Vec<BigInt>], dst: usize, src: usize, q: &BigInt) {
    let src_row = a[src].clone();
    for (d, s) in a[dst].iter_mut().zip(&src_row) {
        *d -= q * s;
    }
}

/// col[dst] -= q * col[src]
fn col_sub(a: &mut [Vec<BigInt>], dst: usize, src: usize, q: &BigInt) {
    for row in a.iter_mut() {
        let s = row[src].clone();
        row[dst] -= q * s;
    }
}

pub fn h1(p: &Presentation) -> SnfResult {
    smith_normal_form(&abelianize(p))
}

pub fn h1_order(p: &Presentation) -> H1Order {
    h1(p).order()
}
