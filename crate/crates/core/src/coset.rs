//! Todd-Coxeter enumeration of the cosets of the trivial subgroup, HLT style:
//! every relator is scanned from every live coset, gaps are filled with new
//! cosets, and coincidences are merged through a union-find forwarding array.

use num_integer::Integer;
use serde_json::{json, Value};

use crate::budget::SearchBudget;
use crate::error::{Error, Result};
use crate::presentation::Presentation;
use crate::word::{Letter, Word};

const UNDEF: u32 = u32::MAX;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TableStatus {
    Complete,
    Exceeded,
}

/// Coset table over the trivial subgroup. Columns come in pairs: `2g` is the
/// action of generator `g`, `2g + 1` the action of its inverse. Coset 0 is
/// the subgroup itself.
#[derive(Clone, Debug)]
pub struct CosetTable {
    columns: usize,
    rows: Vec<u32>,
    cosets: usize,
    pub status: TableStatus,
    pub cosets_defined: usize,
}

impl CosetTable {
    pub fn cosets(&self) -> usize {
        self.cosets
    }

    pub fn generator_count(&self) -> usize {
        self.columns / 2
    }

    /// `coset · letter`, if defined.
    pub fn act(&self, coset: usize, letter: Letter) -> Option<usize> {
        let v = self.rows[coset * self.columns + column(letter)];
        (v != UNDEF).then_some(v as usize)
    }

    /// Traces `w` from `coset`; `None` if a gap is hit.
    pub fn trace(&self, coset: usize, w: &Word) -> Option<usize> {
        w.letters().try_fold(coset, |c, l| self.act(c, l))
    }

    /// Image of every coset under generator `gen`.
    pub fn generator_permutation(&self, gen: u32) -> Vec<usize> {
        (0..self.cosets)
            .map(|c| self.act(c, Letter::new(gen, false)).expect("complete table"))
            .collect()
    }

    pub fn to_json(&self) -> Value {
        match self.status {
            TableStatus::Complete => json!({
                "status": "finite",
                "order": self.cosets,
                "cosets_defined": self.cosets_defined,
            }),
            TableStatus::Exceeded => json!({
                "status": "exceeded",
                "cosets_defined": self.cosets_defined,
            }),
        }
    }
}

fn column(l: Letter) -> usize {
    2 * l.gen as usize + usize::from(l.inverse)
}

#[derive(Clone, Debug)]
pub enum Enumeration {
    FiniteOrder { order: usize, table: CosetTable },
    Exceeded { cosets_defined: usize },
}

impl Enumeration {
    pub fn order(&self) -> Option<usize> {
        match self {
            Enumeration::FiniteOrder { order, .. } => Some(*order),
            Enumeration::Exceeded { .. } => None,
        }
    }

    pub fn table(&self) -> Option<&CosetTable> {
        match self {
            Enumeration::FiniteOrder { table, .. } => Some(table),
            Enumeration::Exceeded { .. } => None,
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            Enumeration::FiniteOrder { table, .. } => table.to_json(),
            Enumeration::Exceeded { cosets_defined } => json!({
                "status": "exceeded",
                "cosets_defined": cosets_defined,
            }),
        }
    }
}

struct Exceeded;

struct Enumerator {
    columns: usize,
    table: Vec<u32>,
    forward: Vec<u32>,
    max_cosets: usize,
    queue: Vec<u32>,
}

impl Enumerator {
    fn new(columns: usize, max_cosets: usize) -> Self {
        Enumerator {
            columns,
            table: vec![UNDEF; columns],
            forward: vec![0],
            max_cosets,
            queue: Vec::new(),
        }
    }

    fn allocated(&self) -> usize {
        self.forward.len()
    }

    fn get(&self, c: u32, x: usize) -> u32 {
        self.table[c as usize * self.columns + x]
    }

    fn set(&mut self, c: u32, x: usize, v: u32) {
        self.table[c as usize * self.columns + x] = v;
    }

    fn is_live(&self, c: u32) -> bool {
        self.forward[c as usize] == c
    }

    fn define(&mut self, c: u32, x: usize) -> std::result::Result<(), Exceeded> {
        if self.allocated() >= self.max_cosets {
            return Err(Exceeded);
        }
        let d = self.allocated() as u32;
        self.forward.push(d);
        self.table.extend(std::iter::repeat_n(UNDEF, self.columns));
        self.set(c, x, d);
        self.set(d, x ^ 1, c);
        Ok(())
    }

    fn rep(&mut self, c: u32) -> u32 {
        let mut root = c;
        while self.forward[root as usize] != root {
            root = self.forward[root as usize];
        }
        let mut cur = c;
        while self.forward[cur as usize] != root {
            let next = self.forward[cur as usize];
            self.forward[cur as usize] = root;
            cur = next;
        }
        root
    }

    fn merge(&mut self, k: u32, l: u32) {
        let k = self.rep(k);
        let l = self.rep(l);
        if k == l {
            return;
        }
        let (lo, hi) = if k < l { (k, l) } else { (l, k) };
        self.forward[hi as usize] = lo;
        self.queue.push(hi);
    }

    fn coincidence(&mut self, a: u32, b: u32) {
        self.queue.clear();
        self.merge(a, b);
        let mut i = 0;
        while i < self.queue.len() {
            let dead = self.queue[i];
            i += 1;
            for x in 0..self.columns {
                let target = self.get(dead, x);
                if target == UNDEF {
                    continue;
                }
                self.set(target, x ^ 1, UNDEF);
                let mu = self.rep(dead);
                let nu = self.rep(target);
                let mu_x = self.get(mu, x);
                if mu_x != UNDEF {
                    self.merge(nu, mu_x);
                    continue;
                }
                let nu_inv = self.get(nu, x ^ 1);
                if nu_inv != UNDEF {
                    self.merge(mu, nu_inv);
                } else {
                    self.set(mu, x, nu);
                    self.set(nu, x ^ 1, mu);
                }
            }
        }
    }

    fn scan_and_fill(&mut self, start: u32, rel: &[usize]) -> std::result::Result<(), Exceeded> {
        let mut f = start;
        let mut b = start;
        let mut i = 0;
        let mut j = rel.len();
        loop {
            while i < j && self.get(f, rel[i]) != UNDEF {
                f = self.get(f, rel[i]);
                i += 1;
            }
            if i == j {
                if f != b {
                    self.coincidence(f, b);
                }
                return Ok(());
            }
            while j > i && self.get(b, rel[j - 1] ^ 1) != UNDEF {
                b = self.get(b, rel[j - 1] ^ 1);
                j -= 1;
            }
            if j == i {
                self.coincidence(f, b);
                return Ok(());
            }
            if j == i + 1 {
                // deduction
                self.set(f, rel[i], b);
                self.set(b, rel[i] ^ 1, f);
                return Ok(());
            }
            self.define(f, rel[i])?;
        }
    }

    fn run(&mut self, relators: &[Vec<usize>]) -> std::result::Result<(), Exceeded> {
        let mut c = 0u32;
        while (c as usize) < self.allocated() {
            if self.is_live(c) {
                for rel in relators {
                    self.scan_and_fill(c, rel)?;
                    if !self.is_live(c) {
                        break;
                    }
                }
                if self.is_live(c) {
                    for x in 0..self.columns {
                        if self.get(c, x) == UNDEF {
                            self.define(c, x)?;
                        }
                    }
                }
            }
            c += 1;
        }
        Ok(())
    }

    /// Renumbers live cosets consecutively.
    fn compress(mut self) -> CosetTable {
        let defined = self.allocated();
        let mut new_index = vec![UNDEF; defined];
        let mut live = 0u32;
        for c in 0..defined as u32 {
            if self.is_live(c) {
                new_index[c as usize] = live;
                live += 1;
            }
        }
        let mut rows = Vec::with_capacity(live as usize * self.columns);
        for c in 0..defined as u32 {
            if !self.is_live(c) {
                continue;
            }
            for x in 0..self.columns {
                let v = self.get(c, x);
                rows.push(if v == UNDEF {
                    UNDEF
                } else {
                    new_index[self.rep(v) as usize]
                });
            }
        }
        let complete = rows.iter().all(|&v| v != UNDEF);
        CosetTable {
            columns: self.columns,
            rows,
            cosets: live as usize,
            status: if complete {
                TableStatus::Complete
            } else {
                TableStatus::Exceeded
            },
            cosets_defined: defined,
        }
    }
}

/// Enumerates the group presented by `p` with at most `budget.max_cosets`
/// coset definitions. `Exceeded` says nothing about infiniteness.
pub fn todd_coxeter(p: &Presentation, budget: &SearchBudget) -> Enumeration {
    let columns = 2 * p.generator_count();
    let relators: Vec<Vec<usize>> = p
        .relators()
        .iter()
        .filter(|r| !r.is_identity())
        .map(|r| r.letters().map(column).collect())
        .collect();
    let mut e = Enumerator::new(columns, budget.max_cosets);
    match e.run(&relators) {
        Ok(()) => {
            let table = e.compress();
            if table.status == TableStatus::Complete {
                Enumeration::FiniteOrder {
                    order: table.cosets,
                    table,
                }
            } else {
                Enumeration::Exceeded {
                    cosets_defined: table.cosets_defined,
                }
            }
        }
        Err(Exceeded) => Enumeration::Exceeded {
            cosets_defined: e.allocated(),
        },
    }
}

/// Order of the permutation `w` induces on the cosets; for the regular action
/// this is the order of `w` in the group.
pub fn order_of_element(table: &CosetTable, w: &Word) -> Result<u64> {
    if table.status != TableStatus::Complete {
        return Err(Error::IncompleteTable);
    }
    let n = table.cosets;
    let perm: Vec<usize> = (0..n)
        .map(|c| table.trace(c, w).expect("complete table"))
        .collect();
    let mut seen = vec![false; n];
    let mut order = 1u64;
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut len = 0u64;
        let mut c = start;
        while !seen[c] {
            seen[c] = true;
            c = perm[c];
            len += 1;
        }
        order = order.lcm(&len);
    }
    Ok(order)
}

/// Every relator traced from every coset returns to that coset.
pub fn relators_close(p: &Presentation, table: &CosetTable) -> bool {
    (0..table.cosets).all(|c| p.relators().iter().all(|r| table.trace(c, r) == Some(c)))
}
