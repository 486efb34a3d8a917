//! Semi-standard Young tableaux and Kostka numbers.
//!
//! A tableau is a filling that weakly increases along rows and strictly
//! increases up columns; `K(lambda, mu)` counts the tableaux of shape
//! `lambda` and weight `mu`. Kostka matrices are cached per degree behind a
//! read-mostly lock since the Schur conversions hit them repeatedly.

use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use crate::shapes::{partitions_of, Filling, Partition};
use crate::Error;

/// All semi-standard tableaux of shape `lambda` and weight `mu`.
pub fn ssyt(lambda: &Partition, mu: &[usize]) -> Result<Vec<Filling>, Error> {
    if lambda.size() != mu.iter().sum::<usize>() {
        return Err(Error::SizeMismatch);
    }
    let mut remaining: Vec<usize> = mu.to_vec();
    let mut rows: Vec<Vec<u32>> = lambda.parts().iter().map(|&len| vec![0; len]).collect();
    let mut out = Vec::new();
    fill_box(lambda, &mut rows, &mut remaining, 0, 0, &mut out);
    Ok(out)
}

fn fill_box(
    lambda: &Partition,
    rows: &mut Vec<Vec<u32>>,
    remaining: &mut Vec<usize>,
    mut row: usize,
    mut col: usize,
    out: &mut Vec<Filling>,
) {
    // advance to the next box, bottom row first, left to right
    loop {
        if row >= lambda.len() {
            out.push(Filling::new(lambda.clone(), rows.clone()).unwrap());
            return;
        }
        if col < lambda.parts()[row] {
            break;
        }
        row += 1;
        col = 0;
    }
    let min_left = if col > 0 { rows[row][col - 1] } else { 1 };
    let min_below = if row > 0 { rows[row - 1][col] + 1 } else { 1 };
    let lo = min_left.max(min_below);
    for value in lo..=(remaining.len() as u32) {
        let v = value as usize - 1;
        if remaining[v] == 0 {
            continue;
        }
        remaining[v] -= 1;
        rows[row][col] = value;
        fill_box(lambda, rows, remaining, row, col + 1, out);
        rows[row][col] = 0;
        remaining[v] += 1;
    }
}

/// The number of tableaux of shape `lambda` and weight `mu`.
pub fn kostka_number(lambda: &Partition, mu: &[usize]) -> Result<u64, Error> {
    Ok(ssyt(lambda, mu)?.len() as u64)
}

/// Standard tableaux of a shape: weight `(1, 1, ..., 1)`.
pub fn standard_tableaux(lambda: &Partition) -> Vec<Filling> {
    ssyt(lambda, &vec![1; lambda.size()]).unwrap()
}

/// The Kostka matrix of one degree: partitions in descending lexicographic
/// order and `K(lambda, mu)` for every pair.
#[derive(Debug)]
pub struct KostkaTable {
    pub partitions: Vec<Partition>,
    index: HashMap<Partition, usize>,
    /// `entries[l][m] = K(partitions[l], partitions[m])`
    pub entries: Vec<Vec<u64>>,
}

impl KostkaTable {
    fn compute(n: usize) -> Self {
        let partitions = partitions_of(n);
        let index: HashMap<Partition, usize> = partitions
            .iter()
            .enumerate()
            .map(|(k, p)| (p.clone(), k))
            .collect();
        let entries = partitions
            .iter()
            .map(|l| {
                partitions
                    .iter()
                    .map(|m| kostka_number(l, m.parts()).unwrap())
                    .collect()
            })
            .collect();
        KostkaTable {
            partitions,
            index,
            entries,
        }
    }

    pub fn value(&self, lambda: &Partition, mu: &Partition) -> u64 {
        match (self.index.get(lambda), self.index.get(mu)) {
            (Some(&l), Some(&m)) => self.entries[l][m],
            _ => 0,
        }
    }

    pub fn index_of(&self, p: &Partition) -> Option<usize> {
        self.index.get(p).copied()
    }
}

static KOSTKA_CACHE: RwLock<Option<HashMap<usize, Arc<KostkaTable>>>> = RwLock::new(None);

/// Shared Kostka matrix for degree `n`.
pub fn kostka_table(n: usize) -> Arc<KostkaTable> {
    if let Some(map) = KOSTKA_CACHE.read().unwrap().as_ref() {
        if let Some(t) = map.get(&n) {
            return Arc::clone(t);
        }
    }
    let table = Arc::new(KostkaTable::compute(n));
    let mut guard = KOSTKA_CACHE.write().unwrap();
    let map = guard.get_or_insert_with(HashMap::new);
    Arc::clone(map.entry(n).or_insert(table))
}
