//! Hub-and-spoke world network: construction, queries, and export.

use rand::Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Primary currency label of a country.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CurrencyLabel {
    #[serde(rename = "USD")]
    Usd,
    #[serde(rename = "CNY")]
    Cny,
    #[serde(rename = "RUB")]
    Rub,
}

impl CurrencyLabel {
    pub fn as_str(self) -> &'static str {
        match self {
            CurrencyLabel::Usd => "USD",
            CurrencyLabel::Cny => "CNY",
            CurrencyLabel::Rub => "RUB",
        }
    }

    /// Fill color used in DOT and SVG renderings.
    pub fn color(self) -> &'static str {
        match self {
            CurrencyLabel::Usd => "gray70",
            CurrencyLabel::Cny => "firebrick",
            CurrencyLabel::Rub => "steelblue",
        }
    }
}

impl std::fmt::Display for CurrencyLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Error)]
pub enum NetworkError {
    #[error("need at least 3 countries (US, China, Russia), got {0}")]
    TooFewNodes(usize),
    #[error("gdp vector length {got} does not match n_countries {expected}")]
    GdpLength { got: usize, expected: usize },
    #[error("non-positive GDP {value} for node {node}")]
    NonPositiveGdp { node: usize, value: f64 },
    #[error("edge ({0}, {1}) is invalid (self-loop or out of range)")]
    InvalidEdge(usize, usize),
}

/// Undirected simple graph stored as adjacency lists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
}

impl Graph {
    pub fn with_nodes(n: usize) -> Self {
        Graph {
            adjacency: vec![Vec::new(); n],
        }
    }

    pub fn node_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn degree(&self, node: usize) -> usize {
        self.adjacency[node].len()
    }

    pub fn neighbors(&self, node: usize) -> &[usize] {
        &self.adjacency[node]
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adjacency[a].contains(&b)
    }

    /// Insert an undirected edge; rejects self-loops and duplicates.
    pub fn add_edge(&mut self, a: usize, b: usize) -> Result<(), NetworkError> {
        if a == b || a >= self.node_count() || b >= self.node_count() {
            return Err(NetworkError::InvalidEdge(a, b));
        }
        if self.has_edge(a, b) {
            return Err(NetworkError::InvalidEdge(a, b));
        }
        self.adjacency[a].push(b);
        self.adjacency[b].push(a);
        Ok(())
    }

    /// Edges as sorted (min, max) pairs; canonical across identical graphs.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut edges = Vec::new();
        for (a, neighbors) in self.adjacency.iter().enumerate() {
            for &b in neighbors {
                if a < b {
                    edges.push((a, b));
                }
            }
        }
        edges.sort_unstable();
        edges
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn is_connected(&self) -> bool {
        let n = self.node_count();
        if n == 0 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut visited = 1;
        while let Some(v) = stack.pop() {
            for &w in &self.adjacency[v] {
                if !seen[w] {
                    seen[w] = true;
                    visited += 1;
                    stack.push(w);
                }
            }
        }
        visited == n
    }

    /// Number of triangles, counting each once.
    pub fn triangle_count(&self) -> usize {
        let mut sorted = self.adjacency.clone();
        for list in &mut sorted {
            list.sort_unstable();
        }
        let mut triangles = 0;
        for a in 0..self.node_count() {
            for &b in &sorted[a] {
                if b <= a {
                    continue;
                }
                // common neighbors c > b close a triangle exactly once
                triangles += intersection_above(&sorted[a], &sorted[b], b);
            }
        }
        triangles
    }

    /// Connected triples: paths of length two, centred on each node.
    pub fn connected_triples(&self) -> usize {
        self.adjacency
            .iter()
            .map(|list| list.len() * list.len().saturating_sub(1) / 2)
            .sum()
    }

    /// Induced subgraph on the selected nodes, with node ids remapped to
    /// 0..k in ascending original order.
    pub fn induced(&self, keep: &[bool]) -> Graph {
        assert_eq!(keep.len(), self.node_count());
        let mut remap = vec![usize::MAX; self.node_count()];
        let mut count = 0;
        for (i, &k) in keep.iter().enumerate() {
            if k {
                remap[i] = count;
                count += 1;
            }
        }
        let mut sub = Graph::with_nodes(count);
        for (a, b) in self.edges() {
            if keep[a] && keep[b] {
                sub.adjacency[remap[a]].push(remap[b]);
                sub.adjacency[remap[b]].push(remap[a]);
            }
        }
        sub
    }
}

fn intersection_above(a: &[usize], b: &[usize], floor: usize) -> usize {
    let mut i = a.partition_point(|&x| x <= floor);
    let mut j = b.partition_point(|&x| x <= floor);
    let mut count = 0;
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                count += 1;
                i += 1;
                j += 1;
            }
        }
    }
    count
}

/// Draw one index from `candidates` with probability proportional to its
/// weight. Caller guarantees a non-empty slice and positive weights.
pub(crate) fn weighted_pick<R: Rng>(
    rng: &mut R,
    candidates: &[usize],
    weight_of: impl Fn(usize) -> f64,
) -> usize {
    let total: f64 = candidates.iter().map(|&c| weight_of(c)).sum();
    let mut x = rng.random::<f64>() * total;
    for &c in candidates {
        x -= weight_of(c);
        if x <= 0.0 {
            return c;
        }
    }
    *candidates.last().expect("non-empty candidate set")
}

/// Build the hub-and-spoke network: the US hub (node 0) connects to all
/// other nodes, then peer edges are attached until every node meets the
/// degree floor, sampling partners with probability proportional to GDP
/// among non-adjacent non-US nodes.
pub fn build_network<R: Rng>(
    config: &crate::config::SimConfig,
    gdps: &[f64],
    rng: &mut R,
) -> Result<Graph, NetworkError> {
    let n = config.n_countries;
    if n < 3 {
        return Err(NetworkError::TooFewNodes(n));
    }
    if gdps.len() != n {
        return Err(NetworkError::GdpLength {
            got: gdps.len(),
            expected: n,
        });
    }
    if let Some((node, &value)) = gdps.iter().enumerate().find(|(_, &g)| g <= 0.0) {
        return Err(NetworkError::NonPositiveGdp { node, value });
    }

    let mut graph = Graph::with_nodes(n);
    for i in 1..n {
        graph.add_edge(0, i).expect("star edges are unique");
    }

    let floor = config.degree_floor();
    let mut candidates = Vec::with_capacity(n);
    for i in 1..n {
        while graph.degree(i) < floor {
            candidates.clear();
            candidates.extend((1..n).filter(|&j| j != i && !graph.has_edge(i, j)));
            // i is adjacent to every non-US node once candidates run out,
            // so its degree is n-1 >= floor and the loop has exited.
            let j = weighted_pick(rng, &candidates, |c| gdps[c]);
            graph.add_edge(i, j).expect("candidate is non-adjacent");
        }
    }

    for list in &mut graph.adjacency {
        list.sort_unstable();
    }
    Ok(graph)
}

/// Node-link JSON document: nodes with currency and dedollarization
/// attributes plus an edge list.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct NodeLinkGraph {
    pub nodes: Vec<NodeRecord>,
    pub edges: Vec<(usize, usize)>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct NodeRecord {
    pub id: usize,
    pub currency: CurrencyLabel,
    pub d: f64,
}

impl NodeLinkGraph {
    pub fn new(graph: &Graph, labels: &[CurrencyLabel], dedollarization: &[f64]) -> Self {
        let nodes = (0..graph.node_count())
            .map(|id| NodeRecord {
                id,
                currency: labels[id],
                d: dedollarization[id],
            })
            .collect();
        NodeLinkGraph {
            nodes,
            edges: graph.edges(),
        }
    }

    pub fn to_graph(&self) -> Result<(Graph, Vec<CurrencyLabel>, Vec<f64>), NetworkError> {
        let mut graph = Graph::with_nodes(self.nodes.len());
        for &(a, b) in &self.edges {
            graph.add_edge(a, b)?;
        }
        for list in &mut graph.adjacency {
            list.sort_unstable();
        }
        let labels = self.nodes.iter().map(|n| n.currency).collect();
        let d = self.nodes.iter().map(|n| n.d).collect();
        Ok((graph, labels, d))
    }
}

/// Render the graph as DOT, nodes filled with their currency color.
pub fn to_dot(graph: &Graph, labels: &[CurrencyLabel]) -> String {
    let mut out = String::from("graph world {\n  node [style=filled];\n");
    for id in 0..graph.node_count() {
        out.push_str(&format!(
            "  {} [fillcolor=\"{}\", label=\"{}\"];\n",
            id,
            labels[id].color(),
            id
        ));
    }
    for (a, b) in graph.edges() {
        out.push_str(&format!("  {} -- {};\n", a, b));
    }
    out.push_str("}\n");
    out
}
