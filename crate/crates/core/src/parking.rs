//! Parking functions and the Haglund–Loehr map to labelled trees.
//!
//! Cars sit in the cells directly right of the North steps. Within a column
//! the cars increase from bottom to top, i.e. they are strictly decreasing
//! when the column is read downward. With this orientation the `k`-th
//! smallest child in `λ(P)` lies `k − 1` rows above the bottom of its
//! column, so `d̃` of a car is the area value of its row.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::labelled::LabelledTree;
use crate::path::{enumerate_paths, DyckPath};
use crate::tree::a_reading_order;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ParkingFunction {
    path: DyckPath,
    /// `cars[r]` is the car in row `r + 1`.
    cars: Vec<u32>,
}

impl ParkingFunction {
    pub fn new(path: DyckPath, cars: Vec<u32>) -> Result<Self> {
        let n = path.semilength();
        let bad = |reason: String| Error::Malformed { what: "parking function", reason };
        if cars.len() != n {
            return Err(bad(format!("{} cars for semilength {n}", cars.len())));
        }
        let mut used = vec![false; n + 1];
        for &c in &cars {
            let c = c as usize;
            if c == 0 || c > n || used[c] {
                return Err(bad(format!("cars must be a permutation of 1..={n}")));
            }
            used[c] = true;
        }
        let columns = path.row_columns();
        for r in 1..n {
            if columns[r] == columns[r - 1] && cars[r] < cars[r - 1] {
                return Err(bad(format!("cars must increase up column {}", columns[r])));
            }
        }
        Ok(ParkingFunction { path, cars })
    }

    pub fn path(&self) -> &DyckPath {
        &self.path
    }

    pub fn cars(&self) -> &[u32] {
        &self.cars
    }

    pub fn len(&self) -> usize {
        self.cars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cars.is_empty()
    }

    pub fn area(&self) -> u32 {
        self.path.area()
    }

    /// The parking function with car `i` in row `i`.
    pub fn identity_labelling(path: DyckPath) -> Self {
        let cars = (1..=path.semilength() as u32).collect();
        ParkingFunction { path, cars }
    }
}

/// `NNEE;1,2`
impl fmt::Display for ParkingFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cars: Vec<String> = self.cars.iter().map(ToString::to_string).collect();
        write!(f, "{};{}", self.path, cars.join(","))
    }
}

impl FromStr for ParkingFunction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |reason: String| Error::Malformed { what: "parking function", reason };
        let (path, cars) = s.split_once(';').ok_or_else(|| bad("expected `PATH;c1,...,cn`".into()))?;
        let path: DyckPath = path.trim().parse()?;
        let cars = cars
            .split(',')
            .map(str::trim)
            .filter(|x| !x.is_empty())
            .map(|x| x.parse::<u32>().map_err(|e| bad(format!("car {x:?}: {e}"))))
            .collect::<Result<Vec<_>>>()?;
        ParkingFunction::new(path, cars)
    }
}

/// Every parking function on `n` cars: for each path (lexicographic), every
/// way to distribute the cars over its columns, each column sorted upward.
pub fn enumerate_parking_functions(n: usize) -> Vec<ParkingFunction> {
    let mut out = Vec::new();
    for path in enumerate_paths(n) {
        let columns = path.row_columns();
        // sizes of the column blocks, bottom to top
        let mut blocks: Vec<usize> = Vec::new();
        for r in 0..n {
            if r == 0 || columns[r] != columns[r - 1] {
                blocks.push(0);
            }
            *blocks.last_mut().expect("pushed above") += 1;
        }
        let mut cars = Vec::with_capacity(n);
        distribute(&blocks, (1..=n as u32).collect(), &mut cars, &mut |cars| {
            out.push(ParkingFunction {
                path: path.clone(),
                cars: cars.to_vec(),
            })
        });
    }
    out
}

/// Chooses an increasing subset of `pool` for the first block, recursively
/// for the rest.
fn distribute(blocks: &[usize], pool: Vec<u32>, prefix: &mut Vec<u32>, emit: &mut dyn FnMut(&[u32])) {
    let Some((&size, rest)) = blocks.split_first() else {
        emit(prefix);
        return;
    };
    let mut chosen = Vec::with_capacity(size);
    choose(&pool, 0, size, &mut chosen, &mut |subset| {
        let remaining: Vec<u32> = pool.iter().copied().filter(|c| !subset.contains(c)).collect();
        let mark = prefix.len();
        prefix.extend_from_slice(subset);
        distribute(rest, remaining, prefix, emit);
        prefix.truncate(mark);
    });
}

fn choose(pool: &[u32], start: usize, k: usize, chosen: &mut Vec<u32>, emit: &mut dyn FnMut(&[u32])) {
    if chosen.len() == k {
        emit(chosen);
        return;
    }
    for i in start..pool.len() {
        if pool.len() - i < k - chosen.len() {
            break;
        }
        chosen.push(pool[i]);
        choose(pool, i + 1, k, chosen, emit);
        chosen.pop();
    }
}

/// The Haglund–Loehr map `λ: 𝒫_n → ℒ_{n+1}`.
///
/// First-column cars hang off the root. The car of any other vertex looks
/// Northeast for the next car; when that car is the bottom of its column,
/// the whole column becomes its children.
pub fn lambda(p: &ParkingFunction) -> LabelledTree {
    let columns = p.path.row_columns();
    let n = columns.len();
    let mut parents = vec![0usize; n];
    let columns = &columns;
    let column_rows = |start: usize| (start..n).take_while(move |&r| columns[r] == columns[start]);
    for r in 0..n {
        let hit = (r + 1..n).find(|&s| columns[s] - columns[r] == s - r);
        if let Some(s) = hit {
            if columns[s - 1] != columns[s] {
                for c in column_rows(s) {
                    parents[p.cars[c] as usize - 1] = p.cars[r] as usize;
                }
            }
        }
    }
    LabelledTree::from_parents(parents).expect("λ produces a tree")
}

/// Inverse of [`lambda`]: reads the tree with the A-style reading (children
/// in increasing label order, labelled by `d̃`); the reading order lists the
/// cars row by row and their `d̃` values form the area sequence.
pub fn lambda_inv(tree: &LabelledTree) -> Result<ParkingFunction> {
    let children = tree.children();
    let d: Vec<i32> = tree.d_tilde().into_iter().map(|x| x as i32).collect();
    let order = a_reading_order(&children, &d, 0)?;
    let area: Vec<u32> = order.iter().map(|&v| d[v] as u32).collect();
    let path = DyckPath::from_area_sequence(&area).map_err(|e| {
        Error::InternalInvariantViolation(format!("tree reading is not an area sequence: {e}"))
    })?;
    let cars = order.iter().map(|&v| v as u32).collect();
    ParkingFunction::new(path, cars)
        .map_err(|e| Error::InternalInvariantViolation(format!("tree reading is not a parking function: {e}")))
}
