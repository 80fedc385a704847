//! Dyck paths and their statistics.
//!
//! A path of semilength `n` is stored as its step word over `{N, E}`. Every
//! other view (area sequence, depth labelling, bounce path) is derived from
//! the word on demand.
//!
//! Geometry: rows and columns are numbered from 1. The `r`-th North step
//! rises through row `r`; the cell directly to its right sits in column
//! `1 + #E steps before it`. Travelling "Southwest" from a cell means moving
//! to `(column - 1, row - 1)`, "Northeast" to `(column + 1, row + 1)`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Step {
    N,
    E,
}

impl Step {
    pub fn as_char(self) -> char {
        match self {
            Step::N => 'N',
            Step::E => 'E',
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DyckPath {
    steps: Vec<Step>,
}

/// Formats a sequence as `(a,b,c)`; the empty sequence is `()`.
pub fn format_sequence<T: fmt::Display>(entries: &[T]) -> String {
    let body: Vec<String> = entries.iter().map(ToString::to_string).collect();
    format!("({})", body.join(","))
}

/// Counts pairs `i < j` with `s_i = s_j` or `s_i = s_j + 1`.
///
/// This is `dinv` when applied to an area sequence and `ddinv` when applied
/// to a depth sequence.
pub fn pair_statistic(seq: &[u32]) -> u32 {
    let max = seq.iter().copied().max().unwrap_or(0) as usize;
    // seen[v] = number of earlier entries equal to v
    let mut seen = vec![0u32; max + 2];
    let mut total = 0;
    for &v in seq {
        let v = v as usize;
        total += seen[v] + seen[v + 1];
        seen[v] += 1;
    }
    total
}

macro_rules! sequence_newtype {
    ($(#[$meta:meta])* $name:ident) => {
        $(#[$meta])*
        #[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
        pub struct $name(Vec<u32>);

        impl $name {
            pub fn as_slice(&self) -> &[u32] {
                &self.0
            }

            pub fn into_vec(self) -> Vec<u32> {
                self.0
            }

            pub fn len(&self) -> usize {
                self.0.len()
            }

            pub fn is_empty(&self) -> bool {
                self.0.is_empty()
            }

            pub fn sum(&self) -> u32 {
                self.0.iter().sum()
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(&format_sequence(&self.0))
            }
        }

        impl std::ops::Deref for $name {
            type Target = [u32];

            fn deref(&self) -> &[u32] {
                &self.0
            }
        }
    };
}

sequence_newtype!(
    /// Per-row count of full cells between the path and the diagonal.
    AreaSequence
);
sequence_newtype!(
    /// The depth labelling read in Northeast-traversal order.
    DepthSequence
);

impl AreaSequence {
    /// Validates `a_1 = 0` and `0 <= a_i <= a_{i-1} + 1`.
    pub fn new(entries: Vec<u32>) -> Result<Self> {
        let mut prev: Option<u32> = None;
        for (index, &a) in entries.iter().enumerate() {
            let ok = match prev {
                None => a == 0,
                Some(p) => a <= p + 1,
            };
            if !ok {
                return Err(Error::InvalidAreaSequence { index });
            }
            prev = Some(a);
        }
        Ok(AreaSequence(entries))
    }
}

/// Touch points of the bounce path together with the bounce statistic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bounce {
    /// `b_0 = 0 < b_1 < ... < b_k = n`.
    pub touch_points: Vec<usize>,
    pub value: u32,
}

/// The depth labelling: one label per North step, i.e. per row.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DepthLabelling {
    /// Column of the labelled cell in each row (1-based).
    columns: Vec<usize>,
    labels: Vec<u32>,
}

impl DepthLabelling {
    /// Label of the cell at `(column, row)`, if that cell is labelled.
    pub fn label_at(&self, column: usize, row: usize) -> Option<u32> {
        let r = row.checked_sub(1)?;
        (self.columns.get(r) == Some(&column)).then(|| self.labels[r])
    }

    /// `(column, row, label)` for every labelled cell, bottom to top.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize, u32)> + '_ {
        self.columns
            .iter()
            .zip(&self.labels)
            .enumerate()
            .map(|(r, (&c, &l))| (c, r + 1, l))
    }

    /// Labels indexed by row (row 1 first).
    pub fn row_labels(&self) -> &[u32] {
        &self.labels
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }
}

impl DyckPath {
    pub fn empty() -> Self {
        DyckPath { steps: Vec::new() }
    }

    /// Builds a path from steps, checking balance and the diagonal condition.
    pub fn from_steps(steps: Vec<Step>) -> Result<Self> {
        let mut height: i64 = 0;
        for (position, step) in steps.iter().enumerate() {
            height += match step {
                Step::N => 1,
                Step::E => -1,
            };
            if height < 0 {
                return Err(Error::BelowDiagonal { position });
            }
        }
        if height != 0 {
            let north = steps.iter().filter(|&&s| s == Step::N).count();
            return Err(Error::UnbalancedSteps {
                north,
                east: steps.len() - north,
            });
        }
        Ok(DyckPath { steps })
    }

    pub(crate) fn from_steps_unchecked(steps: Vec<Step>) -> Self {
        debug_assert!(DyckPath::from_steps(steps.clone()).is_ok());
        DyckPath { steps }
    }

    /// Reconstructs the unique path with the given area sequence.
    pub fn from_area_sequence(area: &[u32]) -> Result<Self> {
        let area = AreaSequence::new(area.to_vec())?;
        let n = area.len();
        let mut steps = Vec::with_capacity(2 * n);
        // the N step of row r starts at x = (r - 1) - a_r; East steps fill
        // the horizontal gaps, and the path ends at x = n
        let mut x = 0usize;
        for (r, &a) in area.iter().enumerate() {
            let start = r - a as usize;
            steps.extend(std::iter::repeat_n(Step::E, start - x));
            x = start;
            steps.push(Step::N);
        }
        steps.extend(std::iter::repeat_n(Step::E, n - x));
        Ok(DyckPath::from_steps_unchecked(steps))
    }

    /// `N α E β`.
    pub fn wrap_concat(alpha: &DyckPath, beta: &DyckPath) -> DyckPath {
        let mut steps = Vec::with_capacity(alpha.steps.len() + beta.steps.len() + 2);
        steps.push(Step::N);
        steps.extend_from_slice(&alpha.steps);
        steps.push(Step::E);
        steps.extend_from_slice(&beta.steps);
        DyckPath { steps }
    }

    pub fn concat(&self, other: &DyckPath) -> DyckPath {
        let mut steps = self.steps.clone();
        steps.extend_from_slice(&other.steps);
        DyckPath { steps }
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn semilength(&self) -> usize {
        self.steps.len() / 2
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Column (1-based) of the cell right of each North step, by row.
    pub fn row_columns(&self) -> Vec<usize> {
        let mut cols = Vec::with_capacity(self.semilength());
        let mut east = 0;
        for &s in &self.steps {
            match s {
                Step::N => cols.push(east + 1),
                Step::E => east += 1,
            }
        }
        cols
    }

    pub fn area_sequence(&self) -> AreaSequence {
        let entries = self
            .row_columns()
            .iter()
            .enumerate()
            .map(|(r, &c)| (r + 1 - c) as u32)
            .collect();
        AreaSequence(entries)
    }

    pub fn area(&self) -> u32 {
        self.area_sequence().sum()
    }

    pub fn area_stats(&self) -> (AreaSequence, u32) {
        let seq = self.area_sequence();
        let total = seq.sum();
        (seq, total)
    }

    pub fn dinv(&self) -> u32 {
        pair_statistic(&self.area_sequence())
    }

    pub fn bounce(&self) -> Bounce {
        let n = self.semilength();
        // heights[x] = y-coordinate of the East step leaving x
        let mut heights = Vec::with_capacity(n);
        let mut y = 0;
        for &s in &self.steps {
            match s {
                Step::N => y += 1,
                Step::E => heights.push(y),
            }
        }
        let mut touch_points = vec![0];
        let mut b = 0;
        while b < n {
            b = heights[b];
            touch_points.push(b);
        }
        let k = touch_points.len() - 1;
        let value = touch_points[1..k.max(1)]
            .iter()
            .map(|&bi| (n - bi) as u32)
            .sum();
        Bounce {
            touch_points,
            value,
        }
    }

    /// Column-by-column depth labelling.
    ///
    /// Column 1 is labelled 0. Every later column copies `ℓ + 1`, where `ℓ`
    /// is the label reached by walking Southwest from the column's
    /// bottommost labelled cell.
    pub fn depth_labelling(&self) -> Result<DepthLabelling> {
        let columns = self.row_columns();
        let n = columns.len();
        let mut labels = vec![0u32; n];
        let mut start = 0;
        while start < n {
            let col = columns[start];
            let mut end = start;
            while end < n && columns[end] == col {
                end += 1;
            }
            let label = if col == 1 {
                0
            } else {
                let mut k = 1;
                loop {
                    if k >= col || k > start {
                        return Err(Error::InternalInvariantViolation(format!(
                            "southwest walk from column {col}, row {} left the grid",
                            start + 1
                        )));
                    }
                    let row = start - k;
                    if columns[row] == col - k {
                        break labels[row] + 1;
                    }
                    k += 1;
                }
            };
            labels[start..end].fill(label);
            start = end;
        }
        Ok(DepthLabelling { columns, labels })
    }

    /// Reads the depth labelling by Northeast traversal with backtracking.
    ///
    /// From the current cell, walk Northeast to the first labelled cell; move
    /// there if it is unvisited. Otherwise jump above the visited cell with
    /// the largest label that still has an unvisited labelled cell directly
    /// above it. That maximiser must be unique.
    pub fn depth_stats(&self) -> Result<(DepthSequence, u32)> {
        let labelling = self.depth_labelling()?;
        let columns = &labelling.columns;
        let labels = &labelling.labels;
        let n = labels.len();
        if n == 0 {
            return Ok((DepthSequence(Vec::new()), 0));
        }

        let mut visited = vec![false; n];
        let mut seq = Vec::with_capacity(n);
        let mut current = 0;
        loop {
            visited[current] = true;
            seq.push(labels[current]);
            if seq.len() == n {
                break;
            }

            let northeast =
                (current + 1..n).find(|&r| columns[r] - columns[current] == r - current);
            if let Some(r) = northeast.filter(|&r| !visited[r]) {
                current = r;
                continue;
            }

            let mut best: Option<usize> = None;
            let mut tied = false;
            for r in 0..n - 1 {
                if visited[r] && !visited[r + 1] && columns[r + 1] == columns[r] {
                    match best {
                        Some(b) if labels[r] < labels[b] => {}
                        Some(b) if labels[r] == labels[b] => tied = true,
                        _ => {
                            best = Some(r);
                            tied = false;
                        }
                    }
                }
            }
            match best {
                Some(b) if tied => {
                    return Err(Error::AmbiguousBacktrack { label: labels[b] })
                }
                Some(b) => current = b + 1,
                None => {
                    return Err(Error::InternalInvariantViolation(
                        "depth reading stalled before visiting every cell".into(),
                    ))
                }
            }
        }
        let total = seq.iter().sum();
        Ok((DepthSequence(seq), total))
    }

    pub fn depth_sequence(&self) -> Result<DepthSequence> {
        Ok(self.depth_stats()?.0)
    }

    pub fn depth(&self) -> Result<u32> {
        Ok(self.depth_stats()?.1)
    }

    pub fn ddinv(&self) -> Result<u32> {
        Ok(pair_statistic(&self.depth_sequence()?))
    }

    /// Initial rise and number of returns to the diagonal.
    pub fn rise_return(&self) -> Result<(u32, u32)> {
        if self.is_empty() {
            return Err(Error::EmptyPath);
        }
        let rise = self.steps.iter().take_while(|&&s| s == Step::N).count() as u32;
        let mut height = 0i64;
        let mut returns = 0;
        for &s in &self.steps {
            height += if s == Step::N { 1 } else { -1 };
            if height == 0 {
                returns += 1;
            }
        }
        Ok((rise, returns))
    }

    /// Index of the East step that first brings the path back to the diagonal.
    pub(crate) fn first_return_index(&self) -> Option<usize> {
        let mut height = 0i64;
        for (i, &s) in self.steps.iter().enumerate() {
            height += if s == Step::N { 1 } else { -1 };
            if height == 0 {
                return Some(i);
            }
        }
        None
    }

    /// Splits `π = N α E β` at the first return to the diagonal.
    pub fn first_return_decompose(&self) -> Result<(DyckPath, DyckPath)> {
        let i = self.first_return_index().ok_or(Error::EmptyPath)?;
        let alpha = DyckPath {
            steps: self.steps[1..i].to_vec(),
        };
        let beta = DyckPath {
            steps: self.steps[i + 1..].to_vec(),
        };
        Ok((alpha, beta))
    }

    /// Splits the path into its return blocks `N α_1 E, N α_2 E, ...`.
    pub fn return_blocks(&self) -> Vec<DyckPath> {
        let mut blocks = Vec::new();
        let mut height = 0i64;
        let mut start = 0;
        for (i, &s) in self.steps.iter().enumerate() {
            height += if s == Step::N { 1 } else { -1 };
            if height == 0 {
                blocks.push(DyckPath {
                    steps: self.steps[start..=i].to_vec(),
                });
                start = i + 1;
            }
        }
        blocks
    }
}

impl fmt::Display for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.steps.is_empty() {
            return f.write_str("ε");
        }
        for s in &self.steps {
            write!(f, "{}", s.as_char())?;
        }
        Ok(())
    }
}

impl FromStr for DyckPath {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_path(s)
    }
}

/// Parses an uppercase `N`/`E` word. The empty string is the empty path.
pub fn parse_path(text: &str) -> Result<DyckPath> {
    let steps = text
        .chars()
        .enumerate()
        .map(|(position, c)| match c {
            'N' => Ok(Step::N),
            'E' => Ok(Step::E),
            found => Err(Error::BadCharacter { position, found }),
        })
        .collect::<Result<Vec<_>>>()?;
    DyckPath::from_steps(steps)
}

/// Lexicographic (`N < E`) stream of Dyck paths sharing a fixed prefix.
#[derive(Clone, Debug)]
pub struct PathIter {
    n: usize,
    fixed: usize,
    current: Option<Vec<Step>>,
}

impl PathIter {
    /// All paths of semilength `n`.
    pub fn new(n: usize) -> Self {
        Self::with_prefix(&[], n)
    }

    /// All paths of semilength `n` starting with `prefix`; empty if the
    /// prefix cannot be completed.
    pub fn with_prefix(prefix: &[Step], n: usize) -> Self {
        let north = prefix.iter().filter(|&&s| s == Step::N).count();
        let east = prefix.len() - north;
        let feasible = north <= n && east <= north && prefix_is_ballot(prefix);
        let current = feasible.then(|| {
            let mut word = prefix.to_vec();
            word.extend(std::iter::repeat_n(Step::N, n - north));
            word.extend(std::iter::repeat_n(Step::E, n - east));
            word
        });
        PathIter {
            n,
            fixed: prefix.len(),
            current,
        }
    }

    fn advance(word: &mut [Step], n: usize, fixed: usize) -> bool {
        let mut north = n;
        let mut east = n;
        for i in (0..word.len()).rev() {
            match word[i] {
                Step::N => north -= 1,
                Step::E => east -= 1,
            }
            if i < fixed {
                return false;
            }
            // (north, east) now count the steps strictly before i
            if word[i] == Step::N && north > east {
                word[i] = Step::E;
                let rest_n = n - north;
                let rest_e = n - east - 1;
                word[i + 1..i + 1 + rest_n].fill(Step::N);
                word[i + 1 + rest_n..i + 1 + rest_n + rest_e].fill(Step::E);
                return true;
            }
        }
        false
    }
}

fn prefix_is_ballot(prefix: &[Step]) -> bool {
    let mut h = 0i64;
    prefix.iter().all(|&s| {
        h += if s == Step::N { 1 } else { -1 };
        h >= 0
    })
}

impl Iterator for PathIter {
    type Item = DyckPath;

    fn next(&mut self) -> Option<DyckPath> {
        let word = self.current.as_mut()?;
        let out = DyckPath {
            steps: word.clone(),
        };
        if !Self::advance(word, self.n, self.fixed) {
            self.current = None;
        }
        Some(out)
    }
}

/// Every Dyck path of semilength `n`, lexicographically with `N < E`.
pub fn enumerate_paths(n: usize) -> PathIter {
    PathIter::new(n)
}

/// The completable prefixes of length `min(len, 2n)`, in lexicographic order.
///
/// Streaming the completions of each prefix in turn reproduces
/// [`enumerate_paths`] exactly; the prefixes are the unit of parallel work.
pub fn prefix_classes(n: usize, len: usize) -> Vec<Vec<Step>> {
    fn rec(n: usize, len: usize, word: &mut Vec<Step>, north: usize, east: usize, out: &mut Vec<Vec<Step>>) {
        if word.len() == len {
            out.push(word.clone());
            return;
        }
        if north < n {
            word.push(Step::N);
            rec(n, len, word, north + 1, east, out);
            word.pop();
        }
        if east < north {
            word.push(Step::E);
            rec(n, len, word, north, east + 1, out);
            word.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, len.min(2 * n), &mut Vec::new(), 0, 0, &mut out);
    out
}

/// `C_n = binom(2n, n) / (n + 1)`.
pub fn catalan(n: usize) -> u128 {
    let mut c: u128 = 1;
    for k in 0..n as u128 {
        c = c * 2 * (2 * k + 1) / (k + 2);
    }
    c
}
