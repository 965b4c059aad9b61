//! Dense row echelon forms over GF(2).

/// A bit vector packed into 64-bit words.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BitRow {
    words: Vec<u64>,
}

impl BitRow {
    pub fn zeros(len: usize) -> Self {
        Self {
            words: vec![0; len.div_ceil(64)],
        }
    }

    pub fn get(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn flip(&mut self, i: usize) {
        self.words[i / 64] ^= 1 << (i % 64);
    }

    pub fn xor_with(&mut self, other: &Self) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Index of the lowest set bit.
    pub fn first_one(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
    }
}

/// Incrementally built row space with one pivot per stored row.
#[derive(Clone, Debug)]
pub struct Echelon {
    width: usize,
    rows: Vec<BitRow>,
    pivot_of_row: Vec<usize>,
    row_of_pivot: Vec<Option<usize>>,
}

impl Echelon {
    pub fn new(width: usize) -> Self {
        Self {
            width,
            rows: Vec::new(),
            pivot_of_row: Vec::new(),
            row_of_pivot: vec![None; width],
        }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the stored rows (pivot positions are cleared).
    pub fn reduce(&self, v: &mut BitRow) {
        // each stored row has its pivot as lowest bit, so a single ascending sweep suffices
        let mut start = 0;
        while let Some(p) = first_one_from(v, start) {
            if let Some(r) = self.row_of_pivot[p] {
                v.xor_with(&self.rows[r]);
            }
            start = p + 1;
        }
    }

    /// Adds `v` to the row space; returns false if it was already in the span.
    pub fn insert(&mut self, mut v: BitRow) -> bool {
        self.reduce(&mut v);
        match v.first_one() {
            None => false,
            Some(p) => {
                self.row_of_pivot[p] = Some(self.rows.len());
                self.pivot_of_row.push(p);
                self.rows.push(v);
                true
            }
        }
    }

    pub fn contains(&self, v: &BitRow) -> bool {
        let mut v = v.clone();
        self.reduce(&mut v);
        v.is_zero()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivot_of_row
    }

    pub fn rows(&self) -> &[BitRow] {
        &self.rows
    }
}

fn first_one_from(v: &BitRow, start: usize) -> Option<usize> {
    let mut word = start / 64;
    if word >= v.words.len() {
        return None;
    }
    let mut w = v.words[word] & (!0u64 << (start % 64));
    loop {
        if w != 0 {
            return Some(word * 64 + w.trailing_zeros() as usize);
        }
        word += 1;
        if word >= v.words.len() {
            return None;
        }
        w = v.words[word];
    }
}
