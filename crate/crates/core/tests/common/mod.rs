#![allow(dead_code)]

use branchorder_core::{Presentation, Word};

pub fn pres(names: &[&str], relators: Vec<Word>) -> Presentation {
    Presentation::new(names.iter().map(|s| s.to_string()).collect(), relators, "test").unwrap()
}

pub fn w(raw: &[(u32, i64)]) -> Word {
    Word::free_reduce(raw.iter().copied())
}

pub fn free(rank: usize) -> Presentation {
    let names: Vec<String> = (0..rank).map(|i| format!("x{i}")).collect();
    Presentation::new(names, vec![], "free").unwrap()
}

pub fn cyclic(order: i64) -> Presentation {
    pres(&["a"], vec![Word::power(0, order)])
}

/// Symmetric group on three letters.
pub fn s3() -> Presentation {
    pres(
        &["x", "y"],
        vec![Word::power(0, 2), Word::power(1, 3), w(&[(0, 1), (1, 1)]).pow(2)],
    )
}

pub fn dihedral(n: i64) -> Presentation {
    pres(
        &["r", "s"],
        vec![Word::power(0, n), Word::power(1, 2), w(&[(1, 1), (0, 1)]).pow(2)],
    )
}

pub fn free_abelian() -> Presentation {
    pres(&["a", "b"], vec![w(&[(0, 1), (1, 1), (0, -1), (1, -1)])])
}

pub fn trefoil() -> Presentation {
    pres(&["x", "y"], vec![w(&[(0, 2), (1, -3)])])
}
