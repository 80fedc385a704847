//! Maps between Dyck paths and plane trees, and the path involutions built
//! from them.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::path::{DyckPath, Step};
use crate::tree::PlaneTree;

/// Stanley's map: `N` adds a rightmost child and descends, `E` ascends.
pub fn sigma(path: &DyckPath) -> PlaneTree {
    let mut lists: Vec<Vec<usize>> = vec![Vec::new()];
    let mut stack = vec![0usize];
    for &s in path.steps() {
        match s {
            Step::N => {
                let id = lists.len();
                lists.push(Vec::new());
                let v = *stack.last().expect("stack holds the root");
                lists[v].push(id);
                stack.push(id);
            }
            Step::E => {
                stack.pop();
            }
        }
    }
    PlaneTree::from_child_lists(0, &lists)
}

/// Preorder walk: `N` on the way down each edge, `E` on the way back up.
pub fn sigma_inv(tree: &PlaneTree) -> DyckPath {
    let mut steps = Vec::with_capacity(2 * tree.edge_count());
    let mut stack: Vec<(usize, usize)> = vec![(0, 0)];
    while let Some((v, next)) = stack.last_mut() {
        let v = *v;
        if let Some(&c) = tree.children(v).get(*next) {
            *next += 1;
            steps.push(Step::N);
            stack.push((c, 0));
        } else {
            stack.pop();
            if !stack.is_empty() {
                steps.push(Step::E);
            }
        }
    }
    DyckPath::from_steps(steps).expect("preorder walk of a tree is a Dyck word")
}

/// Haglund–Loehr map.
///
/// Every row of the path becomes a vertex. The cells of column 1 become the
/// root's children, bottommost cell leftmost. A vertex gets children when the
/// first labelled cell on the Northeast diagonal of its cell is the bottommost
/// cell of its column; it then receives that whole column, again bottommost
/// cell leftmost.
pub fn eta(path: &DyckPath) -> PlaneTree {
    let columns = path.row_columns();
    let n = columns.len();
    let root = n;
    let mut lists: Vec<Vec<usize>> = vec![Vec::new(); n + 1];
    let column_rows = |start: usize| -> Vec<usize> {
        (start..n).take_while(|&r| columns[r] == columns[start]).collect()
    };
    if n > 0 {
        lists[root] = column_rows(0);
    }
    for r in 0..n {
        let hit = (r + 1..n).find(|&s| columns[s] - columns[r] == s - r);
        if let Some(s) = hit {
            if columns[s - 1] != columns[s] {
                lists[r] = column_rows(s);
            }
        }
    }
    let tree = PlaneTree::from_child_lists(root, &lists);
    debug_assert_eq!(tree.vertex_count(), n + 1);
    tree
}

/// Inverse of [`eta`]: the rows of `π` appear in `read_A` order, and their
/// area values are the A-labels.
pub fn eta_inv(tree: &PlaneTree) -> Result<DyckPath> {
    let word = tree.read_a()?;
    DyckPath::from_area_sequence(&word).map_err(|e| {
        Error::InternalInvariantViolation(format!("read_A is not an area sequence: {e}"))
    })
}

/// Benchekroun–Moszkowski map.
///
/// Scans `E π`; each `E` checks the unchecked vertex closest to the root
/// (leftmost among ties) and gives it one child per `N` that follows.
pub fn beta(path: &DyckPath) -> PlaneTree {
    let steps = path.steps();
    let mut lists: Vec<Vec<usize>> = vec![Vec::new()];
    let mut unchecked: VecDeque<usize> = VecDeque::from([0]);
    let mut i = 0;
    // position -1 holds the prepended E
    let mut at_e = true;
    loop {
        if at_e {
            let v = unchecked
                .pop_front()
                .expect("every E of a Dyck word finds an unchecked vertex");
            let run = steps[i..].iter().take_while(|&&s| s == Step::N).count();
            for _ in 0..run {
                let id = lists.len();
                lists.push(Vec::new());
                lists[v].push(id);
                unchecked.push_back(id);
            }
            i += run;
        }
        if i >= steps.len() {
            break;
        }
        at_e = steps[i] == Step::E;
        i += 1;
    }
    PlaneTree::from_child_lists(0, &lists)
}

/// Replays the checking order of [`beta`] (breadth first, left to right),
/// emitting `E N^{children}` per vertex, then drops the leading `E`.
pub fn beta_inv(tree: &PlaneTree) -> DyckPath {
    let mut steps = Vec::with_capacity(2 * tree.vertex_count());
    let mut queue = VecDeque::from([0usize]);
    while let Some(v) = queue.pop_front() {
        steps.push(Step::E);
        for &c in tree.children(v) {
            steps.push(Step::N);
            queue.push_back(c);
        }
    }
    steps.remove(0);
    DyckPath::from_steps(steps).expect("breadth-first code of a tree is a Dyck word")
}

/// The zeta map `β⁻¹ ∘ σ`.
pub fn zeta(path: &DyckPath) -> DyckPath {
    beta_inv(&sigma(path))
}

pub fn zeta_inv(path: &DyckPath) -> DyckPath {
    sigma_inv(&beta(path))
}

/// `σ⁻¹ ∘ η`, which swaps the area and depth sequences.
pub fn omega(path: &DyckPath) -> DyckPath {
    sigma_inv(&eta(path))
}

/// Deutsch's involution: `ε' = ε`, `(N α E β)' = N β' E α'`.
pub fn deutsch(path: &DyckPath) -> DyckPath {
    match path.first_return_decompose() {
        Err(_) => DyckPath::empty(),
        Ok((alpha, beta)) => DyckPath::wrap_concat(&deutsch(&beta), &deutsch(&alpha)),
    }
}

/// Speyer's map: fixes paths with one return, otherwise merges the first two
/// return blocks, `Nα₁E Nα₂E ...` ↦ `NNα₁Eα₂E ...`.
pub fn tau(path: &DyckPath) -> Result<DyckPath> {
    if path.is_empty() {
        return Err(Error::EmptyPath);
    }
    let blocks = path.return_blocks();
    if blocks.len() == 1 {
        return Ok(path.clone());
    }
    let (alpha2, _) = blocks[1].first_return_decompose()?;
    let merged = DyckPath::wrap_concat(&blocks[0].concat(&alpha2), &DyckPath::empty());
    Ok(blocks[2..].iter().fold(merged, |acc, b| acc.concat(b)))
}

/// Splits the first return block: `N (Nα₁Eα₂) E ...` ↦ `Nα₁E Nα₂E ...`.
fn split_first_block(path: &DyckPath) -> Result<DyckPath> {
    let (inner, rest) = path.first_return_decompose()?;
    let (alpha1, alpha2) = inner.first_return_decompose()?;
    let front = DyckPath::wrap_concat(&alpha1, &DyckPath::empty())
        .concat(&DyckPath::wrap_concat(&alpha2, &DyckPath::empty()));
    Ok(front.concat(&rest))
}

/// Right inverse of [`tau`] on its image.
///
/// Paths with initial rise at least 2 are split back into two return blocks.
/// A path with initial rise 1 is only in the image when it is a fixed point
/// (a single return, i.e. `NE`); anything else is [`Error::NotInImage`].
pub fn tau_inv(path: &DyckPath) -> Result<DyckPath> {
    let (rise, returns) = path.rise_return()?;
    match (rise, returns) {
        (1, 1) => Ok(path.clone()),
        (1, _) => Err(Error::NotInImage),
        _ => split_first_block(path),
    }
}

/// [`tau_inv`] extended by the identity on paths with initial rise 1.
///
/// This is the reading under which `τ⁻¹ ∘ ω = ω ∘ τ` holds for every path:
/// `ω` sends the one-return fixed points of `τ` to paths of initial rise 1.
pub fn tau_inv_fixing_unit_rise(path: &DyckPath) -> Result<DyckPath> {
    let (rise, _) = path.rise_return()?;
    if rise == 1 {
        Ok(path.clone())
    } else {
        split_first_block(path)
    }
}

/// Named maps exposed on the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MapName {
    Sigma,
    SigmaInv,
    Eta,
    EtaInv,
    Beta,
    BetaInv,
    Zeta,
    ZetaInv,
    Omega,
    OmegaInv,
    Deutsch,
    DeutschInv,
    Tau,
    TauInv,
    Dual,
}

/// Input or output of a [`MapName`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Object {
    Path(DyckPath),
    Tree(PlaneTree),
}

impl fmt::Display for Object {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Object::Path(p) => write!(f, "{p}"),
            Object::Tree(t) => write!(f, "{t}"),
        }
    }
}

impl MapName {
    pub const ALL: [MapName; 15] = [
        MapName::Sigma,
        MapName::SigmaInv,
        MapName::Eta,
        MapName::EtaInv,
        MapName::Beta,
        MapName::BetaInv,
        MapName::Zeta,
        MapName::ZetaInv,
        MapName::Omega,
        MapName::OmegaInv,
        MapName::Deutsch,
        MapName::DeutschInv,
        MapName::Tau,
        MapName::TauInv,
        MapName::Dual,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            MapName::Sigma => "sigma",
            MapName::SigmaInv => "sigma-inv",
            MapName::Eta => "eta",
            MapName::EtaInv => "eta-inv",
            MapName::Beta => "beta",
            MapName::BetaInv => "beta-inv",
            MapName::Zeta => "zeta",
            MapName::ZetaInv => "zeta-inv",
            MapName::Omega => "omega",
            MapName::OmegaInv => "omega-inv",
            MapName::Deutsch => "deutsch",
            MapName::DeutschInv => "deutsch-inv",
            MapName::Tau => "tau",
            MapName::TauInv => "tau-inv",
            MapName::Dual => "dual",
        }
    }

    /// Whether the map consumes a plane tree rather than a path.
    pub fn takes_tree(self) -> bool {
        matches!(
            self,
            MapName::SigmaInv | MapName::EtaInv | MapName::BetaInv | MapName::Dual
        )
    }

    /// Parses the input in the format the map expects.
    pub fn parse_input(self, text: &str) -> Result<Object> {
        if self.takes_tree() {
            Ok(Object::Tree(text.parse()?))
        } else {
            Ok(Object::Path(text.parse()?))
        }
    }

    pub fn apply(self, input: &Object) -> Result<Object> {
        let wrong = || Error::Malformed {
            what: "map input",
            reason: format!(
                "{} expects a {}",
                self.as_str(),
                if self.takes_tree() { "plane tree" } else { "Dyck path" }
            ),
        };
        match (self, input) {
            (MapName::SigmaInv, Object::Tree(t)) => Ok(Object::Path(sigma_inv(t))),
            (MapName::EtaInv, Object::Tree(t)) => Ok(Object::Path(eta_inv(t)?)),
            (MapName::BetaInv, Object::Tree(t)) => Ok(Object::Path(beta_inv(t))),
            (MapName::Dual, Object::Tree(t)) => Ok(Object::Tree(t.dual())),
            (MapName::Sigma, Object::Path(p)) => Ok(Object::Tree(sigma(p))),
            (MapName::Eta, Object::Path(p)) => Ok(Object::Tree(eta(p))),
            (MapName::Beta, Object::Path(p)) => Ok(Object::Tree(beta(p))),
            (MapName::Zeta, Object::Path(p)) => Ok(Object::Path(zeta(p))),
            (MapName::ZetaInv, Object::Path(p)) => Ok(Object::Path(zeta_inv(p))),
            (MapName::Omega | MapName::OmegaInv, Object::Path(p)) => Ok(Object::Path(omega(p))),
            (MapName::Deutsch | MapName::DeutschInv, Object::Path(p)) => {
                Ok(Object::Path(deutsch(p)))
            }
            (MapName::Tau, Object::Path(p)) => Ok(Object::Path(tau(p)?)),
            (MapName::TauInv, Object::Path(p)) => Ok(Object::Path(tau_inv(p)?)),
            _ => Err(wrong()),
        }
    }
}

impl FromStr for MapName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.to_ascii_lowercase().replace('_', "-");
        MapName::ALL
            .into_iter()
            .find(|m| m.as_str() == key)
            .ok_or_else(|| Error::Malformed {
                what: "map name",
                reason: format!("unknown map {s:?}"),
            })
    }
}

impl fmt::Display for MapName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::path::enumerate_paths;
    use crate::tree::enumerate_trees;

    const EXAMPLE: &str = "NNNEENENNEEENNENEE";
    const EXAMPLE_OMEGA: &str = "NNENNEEENNNENEEENE";

    fn p(s: &str) -> DyckPath {
        s.parse().unwrap()
    }

    fn t(s: &str) -> PlaneTree {
        s.parse().unwrap()
    }

    #[test]
    fn sigma_examples() {
        assert_eq!(sigma(&p("NE")), t("(())"));
        assert_eq!(sigma(&p("NNEE")), t("((()))"));
        // the running example
        assert_eq!(sigma(&p(EXAMPLE)), t("(((())()(()))(()()))"));
        assert_eq!(sigma(&DyckPath::empty()), PlaneTree::root_only());
    }

    #[test]
    fn eta_examples() {
        assert_eq!(eta(&p("NE")), t("(())"));
        assert_eq!(eta(&p("NNEE")), t("(()())"));
        // root(a(b, c(d)), e(f(g, h)), i)
        assert_eq!(eta(&p(EXAMPLE)), t("((()(()))((()()))())"));
    }

    #[test]
    fn beta_examples() {
        assert_eq!(beta(&p("NE")), t("(())"));
        assert_eq!(beta(&p("NENE")), t("((()))"));
        // root(a, b(c), d(e, f(g(h), i)))
        assert_eq!(beta(&p(EXAMPLE)), t("(()(())(()((())())))"));
    }

    #[test]
    fn inverses_on_small_sizes() {
        for n in 0..=7 {
            for path in enumerate_paths(n) {
                assert_eq!(sigma_inv(&sigma(&path)), path);
                assert_eq!(eta_inv(&eta(&path)).unwrap(), path);
                assert_eq!(beta_inv(&beta(&path)), path);
                assert_eq!(zeta_inv(&zeta(&path)), path);
            }
            for tree in enumerate_trees(n + 1) {
                assert_eq!(sigma(&sigma_inv(&tree)), tree);
                assert_eq!(eta(&eta_inv(&tree).unwrap()), tree);
                assert_eq!(beta(&beta_inv(&tree)), tree);
            }
        }
    }

    #[test]
    fn zeta_examples() {
        assert_eq!(zeta(&p("NE")), p("NE"));
        assert_eq!(zeta(&p("NNEE")), p("NENE"));
        let z = zeta(&p(EXAMPLE));
        assert_eq!(z.area(), 21);
        assert_eq!(z.bounce().value, 9);
    }

    #[test]
    fn omega_and_deutsch_examples() {
        assert_eq!(omega(&p("NE")), p("NE"));
        assert_eq!(omega(&p(EXAMPLE)), p(EXAMPLE_OMEGA));
        assert_eq!(omega(&p("NENE")), p("NNEE"));
        assert_eq!(deutsch(&DyckPath::empty()), DyckPath::empty());
        assert_eq!(deutsch(&p("NNEE")), p("NENE"));
        assert_eq!(deutsch(&p(EXAMPLE)), p(EXAMPLE_OMEGA));
    }

    #[test]
    fn tau_examples() {
        assert_eq!(tau(&p("NNEE")).unwrap(), p("NNEE"));
        assert_eq!(tau(&p("NENE")).unwrap(), p("NNEE"));
        assert_eq!(tau(&p("NENENE")).unwrap(), p("NNEENE"));
        assert_eq!(tau(&DyckPath::empty()), Err(Error::EmptyPath));

        assert_eq!(tau_inv(&p("NNEENE")).unwrap(), p("NENENE"));
        assert_eq!(tau_inv(&p("NE")).unwrap(), p("NE"));
        assert_eq!(tau_inv(&p("NENE")), Err(Error::NotInImage));
        assert_eq!(tau_inv_fixing_unit_rise(&p("NENE")).unwrap(), p("NENE"));
    }

    #[test]
    fn tau_inv_is_a_right_inverse_where_defined() {
        for n in 1..=8 {
            for path in enumerate_paths(n) {
                if let Ok(pre) = tau_inv(&path) {
                    assert_eq!(tau(&pre).unwrap(), path, "{path}");
                }
            }
        }
    }

    #[test]
    fn map_names_parse_and_apply() {
        for m in MapName::ALL {
            assert_eq!(m.as_str().parse::<MapName>().unwrap(), m);
        }
        let out = MapName::Omega.apply(&MapName::Omega.parse_input(EXAMPLE).unwrap()).unwrap();
        assert_eq!(out.to_string(), EXAMPLE_OMEGA);
        let out = MapName::Dual.apply(&Object::Tree(t("(()()())"))).unwrap();
        assert_eq!(out.to_string(), "(((())))");
        assert!(MapName::Dual.apply(&Object::Path(p("NE"))).is_err());
        assert!("bogus".parse::<MapName>().is_err());
    }
}
