//! Plane trees, their A/D labellings, reading words and the dual tree.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A rooted tree with linearly ordered children.
///
/// Vertices are numbered in preorder with the root at 0, so two trees are
/// equal exactly when they have the same shape.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PlaneTree {
    children: Vec<Vec<usize>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LabelKind {
    /// Root 0; the k-th child of a vertex labelled m gets m + k - 1.
    A,
    /// Distance to the root minus one; the root gets -1.
    D,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexLabelling {
    pub kind: LabelKind,
    /// Indexed by preorder vertex id.
    pub labels: Vec<i32>,
}

impl PlaneTree {
    /// The single-vertex tree.
    pub fn root_only() -> Self {
        PlaneTree {
            children: vec![Vec::new()],
        }
    }

    /// Builds a tree from arbitrary child lists, renumbering into preorder.
    /// Vertices unreachable from `root` are dropped.
    pub fn from_child_lists(root: usize, lists: &[Vec<usize>]) -> Self {
        let mut order = Vec::with_capacity(lists.len());
        let mut stack = vec![root];
        while let Some(v) = stack.pop() {
            order.push(v);
            stack.extend(lists[v].iter().rev());
        }
        let mut new_id = vec![usize::MAX; lists.len()];
        for (i, &v) in order.iter().enumerate() {
            new_id[v] = i;
        }
        let children = order
            .iter()
            .map(|&v| lists[v].iter().map(|&c| new_id[c]).collect())
            .collect();
        PlaneTree { children }
    }

    /// Root with the given principal subtrees, left to right.
    pub fn from_subtrees(subtrees: &[PlaneTree]) -> Self {
        let mut children = vec![Vec::new()];
        for sub in subtrees {
            let offset = children.len();
            children[0].push(offset);
            children.extend(
                sub.children
                    .iter()
                    .map(|cs| cs.iter().map(|c| c + offset).collect()),
            );
        }
        PlaneTree { children }
    }

    pub fn vertex_count(&self) -> usize {
        self.children.len()
    }

    /// Number of edges, i.e. the semilength of the matching Dyck path.
    pub fn edge_count(&self) -> usize {
        self.children.len() - 1
    }

    pub fn children(&self, v: usize) -> &[usize] {
        &self.children[v]
    }

    pub fn child_lists(&self) -> &[Vec<usize>] {
        &self.children
    }

    pub fn parents(&self) -> Vec<Option<usize>> {
        let mut parents = vec![None; self.children.len()];
        for (v, cs) in self.children.iter().enumerate() {
            for &c in cs {
                parents[c] = Some(v);
            }
        }
        parents
    }

    pub fn label(&self, kind: LabelKind) -> VertexLabelling {
        let mut labels = vec![0i32; self.vertex_count()];
        if kind == LabelKind::D {
            labels[0] = -1;
        }
        // preorder: parents precede children
        for v in 0..self.vertex_count() {
            for (k, &c) in self.children[v].iter().enumerate() {
                labels[c] = match kind {
                    LabelKind::A => labels[v] + k as i32,
                    LabelKind::D => labels[v] + 1,
                };
            }
        }
        VertexLabelling { kind, labels }
    }

    /// Non-root vertices in the order `read_A` visits them.
    pub fn read_a_order(&self) -> Result<Vec<usize>> {
        let labels = self.label(LabelKind::A).labels;
        a_reading_order(&self.children, &labels, 0)
    }

    /// Reading word of the A-labelling.
    pub fn read_a(&self) -> Result<Vec<u32>> {
        let labels = self.label(LabelKind::A).labels;
        Ok(a_reading_order(&self.children, &labels, 0)?
            .into_iter()
            .map(|v| labels[v] as u32)
            .collect())
    }

    /// Reading word of the D-labelling, root entry removed.
    ///
    /// Repeatedly takes the vertex of largest label that still has an unread
    /// child and reads its leftmost unread child.
    pub fn read_d(&self) -> Result<Vec<u32>> {
        let labels = self.label(LabelKind::D).labels;
        let total = self.vertex_count();
        let mut next_child = vec![0usize; total];
        let mut added = vec![0usize];
        while added.len() < total {
            let mut best: Option<usize> = None;
            let mut tied = false;
            for &v in &added {
                if next_child[v] >= self.children[v].len() {
                    continue;
                }
                match best {
                    Some(b) if labels[v] < labels[b] => {}
                    Some(b) if labels[v] == labels[b] => tied = true,
                    _ => {
                        best = Some(v);
                        tied = false;
                    }
                }
            }
            let v = best.ok_or_else(|| {
                Error::InternalInvariantViolation("read_D frontier emptied early".into())
            })?;
            if tied {
                return Err(Error::AmbiguousSelection { label: labels[v] });
            }
            added.push(self.children[v][next_child[v]]);
            next_child[v] += 1;
        }
        Ok(added[1..].iter().map(|&v| labels[v] as u32).collect())
    }

    /// The dual plane tree.
    ///
    /// Each dual vertex is associated with a vertex of `self`. The dual root
    /// takes the first child of the root and then successive first children;
    /// any other dual vertex starts from the right sibling of its associate
    /// and continues with successive first children.
    pub fn dual(&self) -> PlaneTree {
        let total = self.vertex_count();
        let mut right_sibling = vec![None; total];
        for cs in &self.children {
            for w in cs.windows(2) {
                right_sibling[w[0]] = Some(w[1]);
            }
        }
        let first_child = |v: usize| self.children[v].first().copied();

        let mut lists: Vec<Vec<usize>> = vec![Vec::new()];
        let mut associate: Vec<usize> = vec![0];
        let chain = |lists: &mut Vec<Vec<usize>>, associate: &mut Vec<usize>, parent: usize, start: Option<usize>| {
            let mut next = start;
            while let Some(x) = next {
                let id = lists.len();
                lists.push(Vec::new());
                associate.push(x);
                lists[parent].push(id);
                next = first_child(x);
            }
        };

        chain(&mut lists, &mut associate, 0, first_child(0));
        let mut cursor = 1;
        while cursor < lists.len() {
            let start = right_sibling[associate[cursor]];
            chain(&mut lists, &mut associate, cursor, start);
            cursor += 1;
        }
        PlaneTree::from_child_lists(0, &lists)
    }

    /// Balanced-parentheses code: each vertex is `(` children `)`.
    pub fn to_parens(&self) -> String {
        let mut out = String::with_capacity(2 * self.vertex_count());
        enum Token {
            Open(usize),
            Close,
        }
        let mut stack = vec![Token::Open(0)];
        while let Some(tok) = stack.pop() {
            match tok {
                Token::Open(v) => {
                    out.push('(');
                    stack.push(Token::Close);
                    stack.extend(self.children[v].iter().rev().map(|&c| Token::Open(c)));
                }
                Token::Close => out.push(')'),
            }
        }
        out
    }

    pub fn from_parens(text: &str) -> Result<Self> {
        let bad = |reason: &str| Error::Malformed {
            what: "plane tree",
            reason: reason.to_string(),
        };
        let mut children: Vec<Vec<usize>> = Vec::new();
        let mut stack: Vec<usize> = Vec::new();
        let mut closed_root = false;
        for c in text.chars() {
            if closed_root {
                return Err(bad("text continues after the root closes"));
            }
            match c {
                '(' => {
                    let id = children.len();
                    children.push(Vec::new());
                    if let Some(&parent) = stack.last() {
                        children[parent].push(id);
                    } else if id != 0 {
                        return Err(bad("more than one root"));
                    }
                    stack.push(id);
                }
                ')' => {
                    stack.pop().ok_or_else(|| bad("unmatched ')'"))?;
                    closed_root = stack.is_empty();
                }
                other => return Err(bad(&format!("unexpected character {other:?}"))),
            }
        }
        if !closed_root {
            return Err(bad("unbalanced parentheses"));
        }
        Ok(PlaneTree { children })
    }
}

/// Reading order for an A-style labelling on arbitrary child lists.
///
/// Starts with the root's children; then repeatedly expands the read vertex
/// with the largest label among those that have children not yet read.
pub(crate) fn a_reading_order(children: &[Vec<usize>], labels: &[i32], root: usize) -> Result<Vec<usize>> {
    let total = children.len();
    let mut order: Vec<usize> = children[root].clone();
    let mut frontier: Vec<usize> = order.clone();
    while order.len() < total - 1 {
        let mut best: Option<usize> = None;
        let mut tied = false;
        for (i, &v) in frontier.iter().enumerate() {
            if children[v].is_empty() {
                continue;
            }
            match best {
                Some(b) if labels[v] < labels[frontier[b]] => {}
                Some(b) if labels[v] == labels[frontier[b]] => tied = true,
                _ => {
                    best = Some(i);
                    tied = false;
                }
            }
        }
        let i = best.ok_or_else(|| {
            Error::InternalInvariantViolation("read_A frontier emptied early".into())
        })?;
        let v = frontier.swap_remove(i);
        if tied {
            return Err(Error::AmbiguousSelection { label: labels[v] });
        }
        order.extend_from_slice(&children[v]);
        frontier.extend_from_slice(&children[v]);
    }
    Ok(order)
}

impl fmt::Display for PlaneTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_parens())
    }
}

impl FromStr for PlaneTree {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        PlaneTree::from_parens(s)
    }
}

/// Every plane tree on `m` vertices; empty for `m = 0`.
///
/// Built by splitting off the first principal subtree, independently of the
/// path bijections.
pub fn enumerate_trees(m: usize) -> impl Iterator<Item = PlaneTree> {
    let codes = if m == 0 {
        Vec::new()
    } else {
        let forests = forest_codes(m - 1);
        forests
            .into_iter()
            .last()
            .unwrap_or_default()
            .into_iter()
            .map(|f| format!("({f})"))
            .collect()
    };
    codes
        .into_iter()
        .map(|code| PlaneTree::from_parens(&code).expect("generated codes are balanced"))
}

/// `forests[k]` = parenthesis codes of all ordered forests with `k` vertices.
fn forest_codes(max: usize) -> Vec<Vec<String>> {
    let mut forests: Vec<Vec<String>> = vec![vec![String::new()]];
    for k in 1..=max {
        let mut out = Vec::new();
        for first in 1..=k {
            // a tree on `first` vertices wraps a forest on `first - 1`
            for inner in &forests[first - 1] {
                for rest in &forests[k - first] {
                    out.push(format!("({inner}){rest}"));
                }
            }
        }
        forests.push(out);
    }
    forests
}
