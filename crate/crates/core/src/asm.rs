//! Alternating sign matrices, permutations, corner-sum rank matrices and the
//! diagrams read off them.
//!
//! All public indices are 1-based. A [`RankMatrix`] carries the zero row and
//! column at index 0, so `rank(i, j)` is defined on `[0, n]^2`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A cell `(row, col)` of an `n x n` matrix, 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// A permutation of `[n]` in one-line notation.
///
/// Products follow function composition: `(v * w)(i) = v(w(i))`, so the
/// permutation matrices satisfy `M_{vw} = M_w M_v`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    oneline: Vec<usize>,
}

impl Permutation {
    pub fn new(oneline: Vec<usize>) -> Result<Self> {
        let n = oneline.len();
        if n == 0 {
            return Err(Error::EmptySet);
        }
        let mut seen = vec![false; n + 1];
        for &v in &oneline {
            if v == 0 || v > n || seen[v] {
                return Err(Error::InvalidPermutation { n, oneline });
            }
            seen[v] = true;
        }
        Ok(Permutation { oneline })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            oneline: (1..=n).collect(),
        }
    }

    /// The longest element `n n-1 ... 1`.
    pub fn longest(n: usize) -> Self {
        Permutation {
            oneline: (1..=n).rev().collect(),
        }
    }

    /// The simple transposition `s_i` exchanging `i` and `i+1`.
    pub fn simple(n: usize, i: usize) -> Result<Self> {
        check_index(i, n)?;
        let mut w = Self::identity(n);
        w.oneline.swap(i - 1, i);
        Ok(w)
    }

    /// The product `s_{a_1} s_{a_2} ... s_{a_k}`.
    pub fn from_word(n: usize, word: &[usize]) -> Result<Self> {
        let mut w = Self::identity(n);
        for &a in word {
            check_index(a, n)?;
            w.oneline.swap(a - 1, a);
        }
        Ok(w)
    }

    pub fn n(&self) -> usize {
        self.oneline.len()
    }

    pub fn oneline(&self) -> &[usize] {
        &self.oneline
    }

    /// `w(i)` for `i` in `1..=n`.
    pub fn apply(&self, i: usize) -> usize {
        self.oneline[i - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.oneline.iter().enumerate().all(|(k, &v)| v == k + 1)
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.n()];
        for (k, &v) in self.oneline.iter().enumerate() {
            inv[v - 1] = k + 1;
        }
        Permutation { oneline: inv }
    }

    /// `self * other`, i.e. `i -> self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Result<Self> {
        if self.n() != other.n() {
            return Err(Error::SizeMismatch {
                left: self.n(),
                right: other.n(),
            });
        }
        Ok(Permutation {
            oneline: other.oneline.iter().map(|&k| self.apply(k)).collect(),
        })
    }

    /// `w s_i`: swaps the entries in positions `i` and `i+1`.
    pub fn times_simple(&self, i: usize) -> Self {
        let mut w = self.clone();
        w.oneline.swap(i - 1, i);
        w
    }

    /// `s_i w`: swaps the values `i` and `i+1`.
    pub fn simple_times(&self, i: usize) -> Self {
        let oneline = self
            .oneline
            .iter()
            .map(|&v| {
                if v == i {
                    i + 1
                } else if v == i + 1 {
                    i
                } else {
                    v
                }
            })
            .collect();
        Permutation { oneline }
    }

    pub fn coxeter_length(&self) -> usize {
        let w = &self.oneline;
        let mut count = 0;
        for a in 0..w.len() {
            for b in a + 1..w.len() {
                if w[a] > w[b] {
                    count += 1;
                }
            }
        }
        count
    }

    pub fn has_descent(&self, i: usize) -> bool {
        i >= 1 && i < self.n() && self.oneline[i - 1] > self.oneline[i]
    }

    /// Classical descent set `{i : w(i) > w(i+1)}`.
    pub fn descents(&self) -> Vec<usize> {
        (1..self.n()).filter(|&i| self.has_descent(i)).collect()
    }

    /// `#{a <= i : w(a) <= j}`.
    pub fn rank(&self, i: usize, j: usize) -> usize {
        self.oneline[..i].iter().filter(|&&v| v <= j).count()
    }

    /// Strong Bruhat order `self <= other`, by rank dominance.
    pub fn bruhat_leq(&self, other: &Permutation) -> bool {
        let n = self.n();
        if n != other.n() {
            return false;
        }
        for i in 1..n {
            for j in 1..n {
                if self.rank(i, j) < other.rank(i, j) {
                    return false;
                }
            }
        }
        true
    }

    pub fn to_asm(&self) -> Asm {
        Asm::from_permutation(self)
    }

    /// All of `S_n` in lexicographic order of one-line notation.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut cur: Vec<usize> = (1..=n).collect();
        loop {
            out.push(Permutation {
                oneline: cur.clone(),
            });
            if !next_permutation(&mut cur) {
                break;
            }
        }
        out
    }
}

fn next_permutation(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

pub(crate) fn check_index(i: usize, n: usize) -> Result<()> {
    if i == 0 || i >= n {
        Err(Error::IndexOutOfRange {
            index: i,
            max: n.saturating_sub(1),
        })
    } else {
        Ok(())
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.n() <= 9 {
            for v in &self.oneline {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.oneline.iter().map(|v| v.to_string()).collect();
            write!(f, "{}", parts.join(","))
        }
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Accepts `31524` (one digit per value) or `3,1,5,2,4`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let values: Result<Vec<usize>> = if s.contains(',') {
            s.split(',')
                .map(|t| {
                    t.trim()
                        .parse::<usize>()
                        .map_err(|_| Error::Parse(format!("bad permutation entry {t:?}")))
                })
                .collect()
        } else {
            s.chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as usize)
                        .ok_or_else(|| Error::Parse(format!("bad permutation digit {c:?}")))
                })
                .collect()
        };
        Permutation::new(values?)
    }
}

/// Corner-sum function on `[0, n]^2`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RankMatrix {
    n: usize,
    values: Vec<u8>,
}

impl RankMatrix {
    /// Builds and validates a rank function from `f(i, j)` on `[0, n]^2`.
    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> i64) -> Result<Self> {
        let mut raw = vec![0i64; (n + 1) * (n + 1)];
        for i in 0..=n {
            for j in 0..=n {
                raw[i * (n + 1) + j] = f(i, j);
            }
        }
        Self::validate(n, &raw)?;
        Ok(RankMatrix {
            n,
            values: raw.into_iter().map(|v| v as u8).collect(),
        })
    }

    /// Builds from an `(n+1) x (n+1)` array indexed over `[0, n]^2`.
    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self> {
        if rows.is_empty() {
            return Err(Error::EmptySet);
        }
        let n = rows.len() - 1;
        for (r, row) in rows.iter().enumerate() {
            if row.len() != n + 1 {
                return Err(Error::Shape {
                    n: n + 1,
                    row: r,
                    found: row.len(),
                });
            }
        }
        Self::from_fn(n, |i, j| rows[i][j])
    }

    fn validate(n: usize, raw: &[i64]) -> Result<()> {
        let at = |i: usize, j: usize| raw[i * (n + 1) + j];
        if n == 0 {
            return Err(Error::EmptySet);
        }
        for i in 0..=n {
            for (r, c, expected) in [(i, 0, 0), (0, i, 0), (i, n, i as i64), (n, i, i as i64)] {
                if at(r, c) != expected {
                    return Err(Error::RankBoundary {
                        row: r,
                        col: c,
                        expected,
                        found: at(r, c),
                    });
                }
            }
        }
        for i in 1..=n {
            for j in 1..=n {
                for step in [at(i, j) - at(i - 1, j), at(i, j) - at(i, j - 1)] {
                    if !(0..=1).contains(&step) {
                        return Err(Error::RankStep { row: i, col: j, step });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `rk(i, j)` for `i, j` in `0..=n`.
    pub fn get(&self, i: usize, j: usize) -> usize {
        self.values[i * (self.n + 1) + j] as usize
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        (0..=self.n)
            .map(|i| (0..=self.n).map(|j| self.get(i, j)).collect())
            .collect()
    }

    /// Recovers the ASM by second differences.
    pub fn to_asm(&self) -> Asm {
        let n = self.n;
        let mut entries = vec![0i8; n * n];
        for i in 1..=n {
            for j in 1..=n {
                let v = self.get(i, j) as i64 - self.get(i - 1, j) as i64
                    - self.get(i, j - 1) as i64
                    + self.get(i - 1, j - 1) as i64;
                entries[(i - 1) * n + (j - 1)] = v as i8;
            }
        }
        Asm {
            n,
            entries,
            rank: self.clone(),
        }
    }

    pub(crate) fn pointwise(
        items: &[&RankMatrix],
        pick: impl Fn(u8, u8) -> u8,
    ) -> Result<RankMatrix> {
        let first = items.first().ok_or(Error::EmptySet)?;
        let mut values = first.values.clone();
        for m in &items[1..] {
            if m.n != first.n {
                return Err(Error::SizeMismatch {
                    left: first.n,
                    right: m.n,
                });
            }
            for (v, &w) in values.iter_mut().zip(&m.values) {
                *v = pick(*v, w);
            }
        }
        Ok(RankMatrix { n: first.n, values })
    }
}

/// An `n x n` alternating sign matrix.
///
/// The corner-sum function is computed once at construction; equality,
/// hashing and ordering are determined by the entries (row-major,
/// lexicographic).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Asm {
    n: usize,
    entries: Vec<i8>,
    rank: RankMatrix,
}

impl Asm {
    /// Validates a raw integer matrix.
    ///
    /// Conditions are checked in order: shape, entry range, row prefix sums,
    /// column prefix sums, total sum. The first violation is reported.
    pub fn new(rows: &[Vec<i64>]) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::EmptySet);
        }
        for (r, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::Shape {
                    n,
                    row: r + 1,
                    found: row.len(),
                });
            }
        }
        for (r, row) in rows.iter().enumerate() {
            for (c, &v) in row.iter().enumerate() {
                if !(-1..=1).contains(&v) {
                    return Err(Error::EntryOutOfRange {
                        row: r + 1,
                        col: c + 1,
                        value: v,
                    });
                }
            }
        }
        for (r, row) in rows.iter().enumerate() {
            let mut sum = 0;
            for (c, &v) in row.iter().enumerate() {
                sum += v;
                if !(0..=1).contains(&sum) {
                    return Err(Error::RowPrefixSum {
                        row: r + 1,
                        col: c + 1,
                        sum,
                    });
                }
            }
        }
        for c in 0..n {
            let mut sum = 0;
            for (r, row) in rows.iter().enumerate() {
                sum += row[c];
                if !(0..=1).contains(&sum) {
                    return Err(Error::ColumnPrefixSum {
                        row: r + 1,
                        col: c + 1,
                        sum,
                    });
                }
            }
        }
        let total: i64 = rows.iter().flatten().sum();
        if total != n as i64 {
            return Err(Error::TotalSum { n, sum: total });
        }
        let entries = rows.iter().flatten().map(|&v| v as i8).collect();
        Ok(Self::from_entries(n, entries))
    }

    /// Same as [`Asm::new`] with an explicit size check.
    pub fn validate(n: usize, rows: &[Vec<i64>]) -> Result<Self> {
        if rows.len() != n {
            return Err(Error::RowCount {
                n,
                found: rows.len(),
            });
        }
        Self::new(rows)
    }

    /// Assumes `entries` already form an ASM.
    pub(crate) fn from_entries(n: usize, entries: Vec<i8>) -> Self {
        let mut values = vec![0u8; (n + 1) * (n + 1)];
        for i in 1..=n {
            for j in 1..=n {
                let v = entries[(i - 1) * n + (j - 1)] as i64
                    + values[(i - 1) * (n + 1) + j] as i64
                    + values[i * (n + 1) + j - 1] as i64
                    - values[(i - 1) * (n + 1) + j - 1] as i64;
                values[i * (n + 1) + j] = v as u8;
            }
        }
        Asm {
            n,
            entries,
            rank: RankMatrix { n, values },
        }
    }

    pub fn identity(n: usize) -> Self {
        Permutation::identity(n).to_asm()
    }

    pub fn from_permutation(w: &Permutation) -> Self {
        let n = w.n();
        let mut entries = vec![0i8; n * n];
        for i in 1..=n {
            entries[(i - 1) * n + w.apply(i) - 1] = 1;
        }
        Self::from_entries(n, entries)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Entry `A_{i,j}`, 1-based.
    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.entries[(i - 1) * self.n + (j - 1)] as i64
    }

    pub fn entries(&self) -> &[i8] {
        &self.entries
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.entries
            .chunks(self.n)
            .map(|r| r.iter().map(|&v| v as i64).collect())
            .collect()
    }

    pub fn rank_matrix(&self) -> &RankMatrix {
        &self.rank
    }

    /// `rk_A(i, j)` on `[0, n]^2`.
    pub fn rank(&self, i: usize, j: usize) -> usize {
        self.rank.get(i, j)
    }

    pub fn transpose(&self) -> Self {
        let n = self.n;
        let mut entries = vec![0i8; n * n];
        for i in 0..n {
            for j in 0..n {
                entries[j * n + i] = self.entries[i * n + j];
            }
        }
        Self::from_entries(n, entries)
    }

    pub fn is_permutation(&self) -> bool {
        self.entries.iter().all(|&v| v >= 0)
    }

    /// The permutation with this matrix, or `None` when some entry is `-1`.
    pub fn to_permutation(&self) -> Option<Permutation> {
        if !self.is_permutation() {
            return None;
        }
        let oneline = self
            .entries
            .chunks(self.n)
            .map(|row| row.iter().position(|&v| v == 1).unwrap() + 1)
            .collect();
        Some(Permutation { oneline })
    }

    fn is_inversion(&self, i: usize, j: usize) -> bool {
        if i == 0 || j == 0 || i > self.n || j > self.n {
            return false;
        }
        let row: i64 = (1..=j).map(|k| self.entry(i, k)).sum();
        let col: i64 = (1..=i).map(|l| self.entry(l, j)).sum();
        row == 0 && col == 0
    }

    /// `inv(A)`: cells whose row prefix and column prefix both vanish.
    pub fn inversions(&self) -> BTreeSet<Cell> {
        self.cells().filter(|c| self.is_inversion(c.row, c.col)).collect()
    }

    /// `N(A)`: positions of `-1` entries.
    pub fn negatives(&self) -> BTreeSet<Cell> {
        self.cells()
            .filter(|c| self.entry(c.row, c.col) == -1)
            .collect()
    }

    /// `D(A)`: inversions holding a zero entry.
    pub fn rothe_diagram(&self) -> BTreeSet<Cell> {
        self.cells()
            .filter(|c| self.entry(c.row, c.col) == 0 && self.is_inversion(c.row, c.col))
            .collect()
    }

    /// `inv(A)` read from the rank function: `rk(i,j) = rk(i,j-1) = rk(i-1,j)`.
    pub fn inversions_from_ranks(&self) -> BTreeSet<Cell> {
        self.cells()
            .filter(|c| {
                let r = self.rank(c.row, c.col);
                r == self.rank(c.row, c.col - 1) && r == self.rank(c.row - 1, c.col)
            })
            .collect()
    }

    /// Inversions with no inversion directly below or directly to the right.
    pub fn essential_set(&self) -> BTreeSet<Cell> {
        self.cells()
            .filter(|c| {
                self.is_inversion(c.row, c.col)
                    && !self.is_inversion(c.row + 1, c.col)
                    && !self.is_inversion(c.row, c.col + 1)
            })
            .collect()
    }

    /// Essential cells characterized purely by rank values.
    pub fn essential_set_from_ranks(&self) -> BTreeSet<Cell> {
        let n = self.n;
        let mut out = BTreeSet::new();
        for i in 1..n {
            for j in 1..n {
                let r = self.rank(i, j);
                if r == self.rank(i, j - 1)
                    && r == self.rank(i - 1, j)
                    && r + 1 == self.rank(i, j + 1)
                    && r + 1 == self.rank(i + 1, j)
                {
                    out.insert(Cell::new(i, j));
                }
            }
        }
        out
    }

    /// Rows containing an essential cell.
    pub fn essential_rows(&self) -> BTreeSet<usize> {
        self.essential_set().into_iter().map(|c| c.row).collect()
    }

    fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        let n = self.n;
        (1..=n).flat_map(move |i| (1..=n).map(move |j| Cell::new(i, j)))
    }

    /// Canonical single-line encoding, e.g. `0,1,0;1,-1,1;0,1,0`.
    pub fn canonical(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for Asm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .entries
            .chunks(self.n)
            .map(|r| {
                r.iter()
                    .map(|v| v.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            })
            .collect();
        write!(f, "{}", rows.join(";"))
    }
}

impl FromStr for Asm {
    type Err = Error;

    /// Parses semicolon-separated rows: `0,1,0;1,-1,1;0,1,0`.
    fn from_str(s: &str) -> Result<Self> {
        let rows: Result<Vec<Vec<i64>>> = s
            .trim()
            .split(';')
            .map(|row| {
                row.split(',')
                    .map(|t| {
                        t.trim()
                            .parse::<i64>()
                            .map_err(|_| Error::Parse(format!("bad matrix entry {t:?}")))
                    })
                    .collect()
            })
            .collect();
        Asm::new(&rows?)
    }
}

/// Parameters `[(i,j), r]_b` of a bigrassmannian permutation in `S_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BigrassTriple {
    pub row: usize,
    pub col: usize,
    pub rank: usize,
    pub n: usize,
}

impl BigrassTriple {
    pub fn new(row: usize, col: usize, rank: usize, n: usize) -> Result<Self> {
        let valid = row >= 1 && col >= 1 && rank < row.min(col) && row + col - rank <= n;
        if !valid {
            return Err(Error::InvalidBigrass { row, col, rank, n });
        }
        Ok(BigrassTriple { row, col, rank, n })
    }

    /// Every valid triple for a given `n`.
    pub fn all(n: usize) -> Vec<BigrassTriple> {
        let mut out = Vec::new();
        for row in 1..n {
            for col in 1..n {
                for rank in 0..row.min(col) {
                    if let Ok(t) = Self::new(row, col, rank, n) {
                        out.push(t);
                    }
                }
            }
        }
        out
    }

    /// The block permutation
    /// `diag(1_r, [0 1_{i-r}; 1_{j-r} 0], 1_{n-i-j+r})`.
    pub fn permutation(&self) -> Permutation {
        let BigrassTriple { row: i, col: j, rank: r, n } = *self;
        let mut oneline = Vec::with_capacity(n);
        oneline.extend(1..=r);
        oneline.extend(j + 1..=j + i - r);
        oneline.extend(r + 1..=j);
        oneline.extend(i + j - r + 1..=n);
        Permutation { oneline }
    }
}

impl fmt::Display for BigrassTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[({},{}),{}]_b", self.row, self.col, self.rank)
    }
}
