//! Simply-laced Dynkin quivers, ice quivers and their exchange matrices.
//!
//! Vertex labels are 1-based everywhere in the public surface (`1..=n`);
//! matrices are stored as plain row vectors indexed from 0.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use serde_json::Value;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum QuiverError {
    #[error("not simply laced: {0}")]
    NotSimplyLaced(String),
    #[error("not a Dynkin diagram: {0}")]
    NotDynkin(String),
    #[error("underlying graph is disconnected: {0}")]
    Disconnected(String),
    #[error("vertex labels must be exactly 1..n: {0}")]
    BadLabels(String),
    #[error("cannot parse quiver: {0}")]
    Syntax(String),
    #[error("invalid ice quiver: {0}")]
    BadIce(String),
}

/// An ADE Dynkin type. `E(r)` is only valid for `r` in 6..=8.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DynkinType {
    A(usize),
    D(usize),
    E(usize),
}

impl DynkinType {
    pub fn rank(&self) -> usize {
        match *self {
            DynkinType::A(n) | DynkinType::D(n) | DynkinType::E(n) => n,
        }
    }

    pub fn is_valid(&self) -> bool {
        match *self {
            DynkinType::A(n) => n >= 1,
            DynkinType::D(n) => n >= 4,
            DynkinType::E(n) => (6..=8).contains(&n),
        }
    }

    pub fn coxeter_number(&self) -> usize {
        match *self {
            DynkinType::A(n) => n + 1,
            DynkinType::D(n) => 2 * n - 2,
            DynkinType::E(6) => 12,
            DynkinType::E(7) => 18,
            DynkinType::E(8) => 30,
            DynkinType::E(n) => panic!("E{n} is not a Dynkin type"),
        }
    }

    pub fn exponents(&self) -> Vec<usize> {
        match *self {
            DynkinType::A(n) => (1..=n).collect(),
            DynkinType::D(n) => {
                let mut e: Vec<usize> = (0..n - 1).map(|k| 2 * k + 1).collect();
                e.push(n - 1);
                e.sort_unstable();
                e
            }
            DynkinType::E(6) => vec![1, 4, 5, 7, 8, 11],
            DynkinType::E(7) => vec![1, 5, 7, 9, 11, 13, 17],
            DynkinType::E(8) => vec![1, 7, 11, 13, 17, 19, 23, 29],
            DynkinType::E(n) => panic!("E{n} is not a Dynkin type"),
        }
    }

    pub fn positive_root_count(&self) -> usize {
        self.rank() * self.coxeter_number() / 2
    }

    /// Number of clusters: the product over exponents of `(h + e + 1) / (e + 1)`.
    pub fn catalan_number(&self) -> u128 {
        let h = self.coxeter_number() as u128;
        let mut num: u128 = 1;
        let mut den: u128 = 1;
        for e in self.exponents() {
            num *= h + e as u128 + 1;
            den *= e as u128 + 1;
        }
        debug_assert_eq!(num % den, 0);
        num / den
    }

    /// A fixed bipartite orientation: vertices at even distance from 1 are sources.
    ///
    /// Labelling: `A_n` is the path `1 - 2 - ... - n`; `D_n` is the path
    /// `1 - ... - (n-1)` with `n` attached to `n-2`; `E_n` is the path
    /// `1 - ... - (n-1)` with `n` attached to `3`.
    pub fn standard_quiver(&self) -> DynkinQuiver {
        let n = self.rank();
        let edges = self.edges();
        // bipartite colouring by BFS from vertex 1
        let mut adj = vec![Vec::new(); n];
        for &(a, b) in &edges {
            adj[a - 1].push(b - 1);
            adj[b - 1].push(a - 1);
        }
        let mut colour = vec![usize::MAX; n];
        colour[0] = 0;
        let mut queue = VecDeque::from([0usize]);
        while let Some(u) = queue.pop_front() {
            for &v in &adj[u] {
                if colour[v] == usize::MAX {
                    colour[v] = 1 - colour[u];
                    queue.push_back(v);
                }
            }
        }
        let arrows = edges
            .into_iter()
            .map(|(a, b)| if colour[a - 1] == 0 { (a, b) } else { (b, a) })
            .collect();
        DynkinQuiver::new(n, arrows).expect("standard Dynkin quiver is valid")
    }

    /// Edges of the standard labelling (see [`DynkinType::standard_quiver`]).
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let n = self.rank();
        match *self {
            DynkinType::A(_) => (1..n).map(|k| (k, k + 1)).collect(),
            DynkinType::D(_) => {
                let mut e: Vec<_> = (1..n - 1).map(|k| (k, k + 1)).collect();
                e.push((n - 2, n));
                e
            }
            DynkinType::E(_) => {
                let mut e: Vec<_> = (1..n - 1).map(|k| (k, k + 1)).collect();
                e.push((3, n));
                e
            }
        }
    }
}

impl fmt::Display for DynkinType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            DynkinType::A(n) => write!(f, "A{n}"),
            DynkinType::D(n) => write!(f, "D{n}"),
            DynkinType::E(n) => write!(f, "E{n}"),
        }
    }
}

impl FromStr for DynkinType {
    type Err = QuiverError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let bad = || QuiverError::Syntax(format!("unknown Dynkin type {s:?}"));
        let mut chars = s.chars();
        let letter = chars.next().ok_or_else(bad)?.to_ascii_uppercase();
        let rank: usize = chars.as_str().trim_start_matches('_').parse().map_err(|_| bad())?;
        let t = match letter {
            'A' => DynkinType::A(rank),
            'D' => DynkinType::D(rank),
            'E' => DynkinType::E(rank),
            _ => return Err(bad()),
        };
        if t.is_valid() {
            Ok(t)
        } else {
            Err(bad())
        }
    }
}

/// An orientation of a simply-laced Dynkin diagram with vertices `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DynkinQuiver {
    n: usize,
    arrows: Vec<(usize, usize)>,
    dynkin_type: DynkinType,
}

#[derive(Serialize, Deserialize)]
struct QuiverJson {
    n: usize,
    arrows: Vec<[usize; 2]>,
}

impl DynkinQuiver {
    /// Validates the arrows and detects the Dynkin type.
    pub fn new(n: usize, mut arrows: Vec<(usize, usize)>) -> Result<Self, QuiverError> {
        if n == 0 {
            return Err(QuiverError::BadLabels("the quiver has no vertices".into()));
        }
        let mut seen_edges = HashSet::new();
        for &(s, t) in &arrows {
            if s == 0 || t == 0 || s > n || t > n {
                return Err(QuiverError::BadLabels(format!(
                    "arrow {s}->{t} uses a label outside 1..{n}"
                )));
            }
            if s == t {
                return Err(QuiverError::NotSimplyLaced(format!("loop at vertex {s}")));
            }
            if !seen_edges.insert((s.min(t), s.max(t))) {
                return Err(QuiverError::NotSimplyLaced(format!(
                    "more than one arrow between {} and {}",
                    s.min(t),
                    s.max(t)
                )));
            }
        }
        arrows.sort_unstable();
        let dynkin_type = detect_type(n, &arrows)?;
        Ok(DynkinQuiver {
            n,
            arrows,
            dynkin_type,
        })
    }

    /// Parses either the JSON form `{"n": .., "arrows": [[s,t],..]}` or the
    /// text form `"1->2; 3->2"` (semicolon- or newline-separated; a bare
    /// label such as `"1"` declares an isolated vertex).
    pub fn parse(text: &str) -> Result<Self, QuiverError> {
        let trimmed = text.trim();
        if trimmed.starts_with('{') {
            let value: Value = serde_json::from_str(trimmed)
                .map_err(|e| QuiverError::Syntax(e.to_string()))?;
            return Self::from_json(&value);
        }
        let mut arrows = Vec::new();
        let mut labels = BTreeSet::new();
        for token in trimmed.split([';', '\n']) {
            let token = token.trim();
            if token.is_empty() {
                continue;
            }
            if let Some((s, t)) = token.split_once("->") {
                let s = parse_label(s)?;
                let t = parse_label(t)?;
                labels.insert(s);
                labels.insert(t);
                arrows.push((s, t));
            } else {
                labels.insert(parse_label(token)?);
            }
        }
        let n = labels.iter().next_back().copied().unwrap_or(0);
        if labels.len() != n || labels.contains(&0) {
            return Err(QuiverError::BadLabels(format!(
                "labels {:?} are not exactly 1..{n}",
                labels
            )));
        }
        Self::new(n, arrows)
    }

    pub fn from_json(value: &Value) -> Result<Self, QuiverError> {
        if let Some(text) = value.as_str() {
            return Self::parse(text);
        }
        let q: QuiverJson = serde_json::from_value(value.clone())
            .map_err(|e| QuiverError::Syntax(e.to_string()))?;
        Self::new(q.n, q.arrows.into_iter().map(|[s, t]| (s, t)).collect())
    }

    pub fn to_json(&self) -> Value {
        serde_json::to_value(QuiverJson {
            n: self.n,
            arrows: self.arrows.iter().map(|&(s, t)| [s, t]).collect(),
        })
        .expect("quiver serializes")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Arrows `(source, target)`, sorted.
    pub fn arrows(&self) -> &[(usize, usize)] {
        &self.arrows
    }

    pub fn dynkin_type(&self) -> DynkinType {
        self.dynkin_type
    }

    pub fn has_arrow(&self, s: usize, t: usize) -> bool {
        self.arrows.binary_search(&(s, t)).is_ok()
    }

    /// Targets of arrows leaving `j`.
    pub fn successors(&self, j: usize) -> impl Iterator<Item = usize> + '_ {
        self.arrows.iter().filter(move |a| a.0 == j).map(|a| a.1)
    }

    /// Sources of arrows entering `j`.
    pub fn predecessors(&self, j: usize) -> impl Iterator<Item = usize> + '_ {
        self.arrows.iter().filter(move |a| a.1 == j).map(|a| a.0)
    }

    pub fn neighbours(&self, j: usize) -> impl Iterator<Item = usize> + '_ {
        self.successors(j).chain(self.predecessors(j))
    }

    /// Vertices ordered so that every arrow goes from an earlier to a later vertex.
    pub fn topological_order(&self) -> Vec<usize> {
        let mut indegree = vec![0usize; self.n + 1];
        for &(_, t) in &self.arrows {
            indegree[t] += 1;
        }
        let mut ready: BTreeSet<usize> = (1..=self.n).filter(|&v| indegree[v] == 0).collect();
        let mut order = Vec::with_capacity(self.n);
        while let Some(v) = ready.pop_first() {
            order.push(v);
            for t in self.successors(v) {
                indegree[t] -= 1;
                if indegree[t] == 0 {
                    ready.insert(t);
                }
            }
        }
        debug_assert_eq!(order.len(), self.n, "a tree orientation is acyclic");
        order
    }

    pub fn opposite(&self) -> DynkinQuiver {
        let mut arrows: Vec<_> = self.arrows.iter().map(|&(s, t)| (t, s)).collect();
        arrows.sort_unstable();
        DynkinQuiver {
            n: self.n,
            arrows,
            dynkin_type: self.dynkin_type,
        }
    }

    pub fn exchange_matrix(&self) -> ExchangeMatrix {
        let mut b = vec![vec![0i64; self.n]; self.n];
        for &(s, t) in &self.arrows {
            b[s - 1][t - 1] += 1;
            b[t - 1][s - 1] -= 1;
        }
        ExchangeMatrix { b }
    }

    /// The framed quiver: one frozen vertex `i'` with an arrow `i' -> i` per vertex.
    pub fn framed(&self) -> IceQuiver {
        let rows = (0..self.n)
            .map(|i| (0..self.n).map(|j| i64::from(i == j)).collect())
            .collect();
        let names = (1..=self.n).map(|i| format!("y{i}")).collect();
        IceQuiver::new(self.clone(), rows, names).expect("framed quiver is valid")
    }
}

impl fmt::Display for DynkinQuiver {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.arrows.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.arrows.iter().map(|(s, t)| format!("{s}->{t}")).collect();
        write!(f, "{}", parts.join("; "))
    }
}

impl FromStr for DynkinQuiver {
    type Err = QuiverError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::parse(s)
    }
}

fn parse_label(s: &str) -> Result<usize, QuiverError> {
    s.trim()
        .parse()
        .map_err(|_| QuiverError::Syntax(format!("bad vertex label {:?}", s.trim())))
}

fn detect_type(n: usize, arrows: &[(usize, usize)]) -> Result<DynkinType, QuiverError> {
    let mut adj = vec![Vec::new(); n + 1];
    for &(s, t) in arrows {
        adj[s].push(t);
        adj[t].push(s);
    }
    // connectivity
    let mut seen = vec![false; n + 1];
    seen[1] = true;
    let mut queue = VecDeque::from([1usize]);
    let mut reached = 1;
    while let Some(u) = queue.pop_front() {
        for &v in &adj[u] {
            if !seen[v] {
                seen[v] = true;
                reached += 1;
                queue.push_back(v);
            }
        }
    }
    if reached != n {
        let missing: Vec<usize> = (1..=n).filter(|&v| !seen[v]).collect();
        return Err(QuiverError::Disconnected(format!(
            "vertices {missing:?} are not connected to vertex 1"
        )));
    }
    if arrows.len() != n - 1 {
        return Err(QuiverError::NotDynkin("the underlying graph has a cycle".into()));
    }
    let branch: Vec<usize> = (1..=n).filter(|&v| adj[v].len() >= 3).collect();
    if branch.is_empty() {
        return Ok(DynkinType::A(n));
    }
    if branch.len() > 1 || adj[branch[0]].len() > 3 {
        return Err(QuiverError::NotDynkin(format!(
            "branch structure at {branch:?} is not of type D or E"
        )));
    }
    let centre = branch[0];
    let mut arms: Vec<usize> = adj[centre]
        .iter()
        .map(|&start| {
            let (mut prev, mut cur, mut len) = (centre, start, 1);
            loop {
                let next = adj[cur].iter().copied().find(|&w| w != prev);
                match next {
                    Some(w) => {
                        prev = cur;
                        cur = w;
                        len += 1;
                    }
                    None => break len,
                }
            }
        })
        .collect();
    arms.sort_unstable();
    match arms.as_slice() {
        [1, 1, r] => Ok(DynkinType::D(r + 3)),
        [1, 2, 2] => Ok(DynkinType::E(6)),
        [1, 2, 3] => Ok(DynkinType::E(7)),
        [1, 2, 4] => Ok(DynkinType::E(8)),
        _ => Err(QuiverError::NotDynkin(format!(
            "arms of lengths {arms:?} at vertex {centre}"
        ))),
    }
}

/// `b[i][j]` = #arrows `i+1 -> j+1` minus #arrows `j+1 -> i+1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExchangeMatrix {
    b: Vec<Vec<i64>>,
}

impl ExchangeMatrix {
    pub fn n(&self) -> usize {
        self.b.len()
    }

    /// Entry for 1-based vertices.
    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.b[i - 1][j - 1]
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.b
    }

    pub fn is_skew_symmetric(&self) -> bool {
        let n = self.n();
        (0..n).all(|i| (0..n).all(|j| self.b[i][j] == -self.b[j][i]))
    }
}

/// A Dynkin quiver with `m` frozen vertices, given by the bottom `m` rows of
/// the extended exchange matrix.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IceQuiver {
    base: DynkinQuiver,
    frozen_rows: Vec<Vec<i64>>,
    names: Vec<String>,
}

#[derive(Deserialize)]
struct IceJson {
    base: Value,
    rows: Vec<Vec<i64>>,
    names: Vec<String>,
}

impl IceQuiver {
    pub fn new(
        base: DynkinQuiver,
        frozen_rows: Vec<Vec<i64>>,
        names: Vec<String>,
    ) -> Result<Self, QuiverError> {
        let n = base.n();
        if frozen_rows.len() != names.len() {
            return Err(QuiverError::BadIce(format!(
                "{} frozen rows but {} names",
                frozen_rows.len(),
                names.len()
            )));
        }
        if let Some(row) = frozen_rows.iter().find(|r| r.len() != n) {
            return Err(QuiverError::BadIce(format!(
                "frozen row {row:?} does not have {n} columns"
            )));
        }
        let mut unique = HashSet::new();
        for name in &names {
            let valid = !name.is_empty()
                && name.chars().next().is_some_and(|c| c.is_ascii_alphabetic())
                && name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
            if !valid {
                return Err(QuiverError::BadIce(format!("bad coefficient name {name:?}")));
            }
            let clashes_with_x = name
                .strip_prefix('x')
                .and_then(|rest| rest.parse::<usize>().ok())
                .is_some_and(|k| (1..=n).contains(&k));
            if clashes_with_x || !unique.insert(name.clone()) {
                return Err(QuiverError::BadIce(format!("duplicate variable name {name:?}")));
            }
        }
        Ok(IceQuiver {
            base,
            frozen_rows,
            names,
        })
    }

    /// The ice quiver with no frozen vertices.
    pub fn trivial(base: DynkinQuiver) -> Self {
        IceQuiver {
            base,
            frozen_rows: Vec::new(),
            names: Vec::new(),
        }
    }

    /// Parses `{"base": <quiver>, "rows": [[..],..], "names": [..]}`. Any
    /// additional `"frozen_arrows"` between frozen vertices are ignored.
    pub fn parse(text: &str) -> Result<Self, QuiverError> {
        let ice: IceJson =
            serde_json::from_str(text).map_err(|e| QuiverError::Syntax(e.to_string()))?;
        let base = DynkinQuiver::from_json(&ice.base)?;
        Self::new(base, ice.rows, ice.names)
    }

    pub fn to_json(&self) -> Value {
        serde_json::json!({
            "base": self.base.to_json(),
            "rows": self.frozen_rows,
            "names": self.names,
        })
    }

    pub fn base(&self) -> &DynkinQuiver {
        &self.base
    }

    pub fn n(&self) -> usize {
        self.base.n()
    }

    pub fn m(&self) -> usize {
        self.frozen_rows.len()
    }

    pub fn frozen_rows(&self) -> &[Vec<i64>] {
        &self.frozen_rows
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    /// The `(n+m) x n` extended exchange matrix.
    pub fn extended_matrix(&self) -> Vec<Vec<i64>> {
        let mut rows = self.base.exchange_matrix().rows().to_vec();
        rows.extend(self.frozen_rows.iter().cloned());
        rows
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_running_example() {
        let q = DynkinQuiver::parse("1->2; 3->2").unwrap();
        assert_eq!(q.n(), 3);
        assert_eq!(q.arrows(), &[(1, 2), (3, 2)]);
        assert_eq!(q.dynkin_type(), DynkinType::A(3));
    }

    #[test]
    fn parses_json_and_newlines() {
        let q = DynkinQuiver::parse(r#"{"n": 3, "arrows": [[1,2],[3,2]]}"#).unwrap();
        assert_eq!(q, DynkinQuiver::parse("1->2\n3->2\n").unwrap());
        assert_eq!(DynkinQuiver::parse("1->2").unwrap().dynkin_type(), DynkinType::A(2));
        assert_eq!(DynkinQuiver::parse("1").unwrap().dynkin_type(), DynkinType::A(1));
    }

    #[test]
    fn rejects_invalid_quivers() {
        assert!(matches!(
            DynkinQuiver::parse("1->2; 2->1"),
            Err(QuiverError::NotSimplyLaced(_))
        ));
        assert!(matches!(
            DynkinQuiver::parse("1->1"),
            Err(QuiverError::NotSimplyLaced(_))
        ));
        assert!(matches!(DynkinQuiver::parse("1->3"), Err(QuiverError::BadLabels(_))));
        assert!(matches!(
            DynkinQuiver::parse(r#"{"n": 3, "arrows": [[1,2]]}"#),
            Err(QuiverError::Disconnected(_))
        ));
        assert!(matches!(
            DynkinQuiver::parse("1->2; 2->3; 3->1"),
            Err(QuiverError::NotDynkin(_))
        ));
        // affine D4-tilde: star with four arms
        assert!(matches!(
            DynkinQuiver::parse("1->5; 2->5; 3->5; 4->5"),
            Err(QuiverError::NotDynkin(_))
        ));
        // E9 is not Dynkin
        assert!(matches!(
            DynkinQuiver::parse("1->2; 2->3; 3->4; 4->5; 5->6; 6->7; 7->8; 3->9"),
            Err(QuiverError::NotDynkin(_))
        ));
        assert!(matches!(DynkinQuiver::parse("1=>2"), Err(QuiverError::Syntax(_))));
    }

    #[test]
    fn detects_d_and_e() {
        for t in [
            DynkinType::D(4),
            DynkinType::D(5),
            DynkinType::D(8),
            DynkinType::E(6),
            DynkinType::E(7),
            DynkinType::E(8),
        ] {
            assert_eq!(t.standard_quiver().dynkin_type(), t);
        }
        // a D5 labelled differently
        let q = DynkinQuiver::parse("5->4; 4->3; 3->2; 1->3").unwrap();
        assert_eq!(q.dynkin_type(), DynkinType::D(5));
    }

    #[test]
    fn opposite_reverses_arrows() {
        let q = DynkinQuiver::parse("1->2; 3->2").unwrap();
        assert_eq!(q.opposite().arrows(), &[(2, 1), (2, 3)]);
        assert_eq!(q.opposite().opposite(), q);
        let a1 = DynkinQuiver::parse("1").unwrap();
        assert_eq!(a1.opposite(), a1);
    }

    #[test]
    fn exchange_matrix_of_running_example() {
        let q = DynkinQuiver::parse("1->2; 3->2").unwrap();
        let b = q.exchange_matrix();
        assert_eq!(b.rows(), &[vec![0, 1, 0], vec![-1, 0, -1], vec![0, 1, 0]]);
        assert!(b.is_skew_symmetric());
        assert_eq!(DynkinQuiver::parse("1").unwrap().exchange_matrix().rows(), &[vec![0]]);
    }

    #[test]
    fn framed_stacks_identity() {
        let q = DynkinQuiver::parse("1->2; 3->2").unwrap();
        let ice = q.framed();
        assert_eq!(ice.m(), 3);
        assert_eq!(
            ice.extended_matrix(),
            vec![
                vec![0, 1, 0],
                vec![-1, 0, -1],
                vec![0, 1, 0],
                vec![1, 0, 0],
                vec![0, 1, 0],
                vec![0, 0, 1],
            ]
        );
        let a1 = DynkinQuiver::parse("1").unwrap().framed();
        assert_eq!(a1.extended_matrix(), vec![vec![0], vec![1]]);
    }

    #[test]
    fn ice_json_round_trip() {
        let text = r#"{"base": "1->2; 3->2", "rows": [[1,0,-1]], "names": ["z"]}"#;
        let ice = IceQuiver::parse(text).unwrap();
        assert_eq!(ice.m(), 1);
        assert_eq!(IceQuiver::parse(&ice.to_json().to_string()).unwrap(), ice);
        let bad = r#"{"base": "1->2", "rows": [[1,0,-1]], "names": ["z"]}"#;
        assert!(matches!(IceQuiver::parse(bad), Err(QuiverError::BadIce(_))));
        let clash = r#"{"base": "1->2", "rows": [[1,0]], "names": ["x1"]}"#;
        assert!(matches!(IceQuiver::parse(clash), Err(QuiverError::BadIce(_))));
    }

    #[test]
    fn catalan_numbers() {
        assert_eq!(DynkinType::A(3).catalan_number(), 14);
        assert_eq!(DynkinType::A(2).catalan_number(), 5);
        assert_eq!(DynkinType::D(4).catalan_number(), 50);
        assert_eq!(DynkinType::E(6).catalan_number(), 833);
        assert_eq!(DynkinType::E(7).catalan_number(), 4160);
        assert_eq!(DynkinType::E(8).catalan_number(), 25080);
        assert_eq!(DynkinType::E(6).positive_root_count(), 36);
    }

    #[test]
    fn parses_type_names() {
        assert_eq!("A3".parse::<DynkinType>().unwrap(), DynkinType::A(3));
        assert_eq!("e6".parse::<DynkinType>().unwrap(), DynkinType::E(6));
        assert!("E9".parse::<DynkinType>().is_err());
        assert!("D3".parse::<DynkinType>().is_err());
    }
}
