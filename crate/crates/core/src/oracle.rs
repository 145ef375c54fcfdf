//! Brute-force ground truth over the full state graph.
//!
//! Vertices are the boards reachable from the initial state under the full
//! move rules; edges are single moves. Every move can be undone, so the graph
//! is undirected. Nothing here relies on the constructive algorithms or the
//! counting formulas; they are checked against it.

use std::collections::{HashMap, VecDeque};
use std::fmt::Write as _;

use num_bigint::BigUint;

use crate::board::{BoardState, GameSpec};
use crate::error::{Error, Result};

pub const DEFAULT_CAP: usize = 2_000_000;

const UNREACHED: u32 = u32::MAX;

#[derive(Clone, Debug)]
pub struct StateGraph {
    spec: GameSpec,
    states: Vec<String>,
    index: HashMap<String, u32>,
    adjacency: Vec<Vec<u32>>,
    initial: u32,
    goal: Option<u32>,
}

fn neighbours(state: &[u8]) -> impl Iterator<Item = Vec<u8>> + '_ {
    let v = state
        .iter()
        .position(|&c| c == b'.')
        .expect("one vacant cell");
    [v.wrapping_sub(2), v.wrapping_sub(1), v + 1, v + 2]
        .into_iter()
        .filter(move |&p| p < state.len())
        .map(move |p| {
            let mut next = state.to_vec();
            next.swap(p, v);
            next
        })
}

/// Breadth-first closure of the initial state; fails once more than `cap`
/// states have been discovered.
pub fn build_graph(spec: GameSpec, cap: usize) -> Result<StateGraph> {
    let start = BoardState::initial(spec).to_string();
    let goal = BoardState::goal(spec).to_string();
    let mut states = vec![start.clone()];
    let mut index = HashMap::from([(start, 0u32)]);
    let mut adjacency: Vec<Vec<u32>> = vec![Vec::new()];
    if cap == 0 {
        return Err(Error::CapExceeded { cap });
    }
    let mut queue = VecDeque::from([0u32]);
    while let Some(u) = queue.pop_front() {
        let here = states[u as usize].clone().into_bytes();
        for next in neighbours(&here) {
            let key = String::from_utf8(next).expect("ascii board");
            let v = match index.get(&key) {
                Some(&v) => v,
                None => {
                    if states.len() >= cap {
                        return Err(Error::CapExceeded { cap });
                    }
                    let v = states.len() as u32;
                    index.insert(key.clone(), v);
                    states.push(key);
                    adjacency.push(Vec::new());
                    queue.push_back(v);
                    v
                }
            };
            adjacency[u as usize].push(v);
        }
    }
    let goal = index.get(&goal).copied();
    Ok(StateGraph {
        spec,
        states,
        index,
        adjacency,
        initial: 0,
        goal,
    })
}

impl StateGraph {
    pub fn spec(&self) -> GameSpec {
        self.spec
    }

    pub fn len(&self) -> usize {
        self.states.len()
    }

    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn state(&self, v: u32) -> &str {
        &self.states[v as usize]
    }

    pub fn vertex(&self, state: &str) -> Option<u32> {
        self.index.get(state).copied()
    }

    pub fn neighbours(&self, v: u32) -> &[u32] {
        &self.adjacency[v as usize]
    }

    pub fn initial(&self) -> u32 {
        self.initial
    }

    pub fn goal(&self) -> Option<u32> {
        self.goal
    }

    pub fn vertices(&self) -> impl Iterator<Item = u32> {
        0..self.states.len() as u32
    }

    /// BFS distance from `source` to every vertex (`None` if unreachable).
    pub fn distances_from(&self, source: u32) -> Vec<Option<u32>> {
        let mut dist = vec![UNREACHED; self.len()];
        dist[source as usize] = 0;
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            for &v in self.neighbours(u) {
                if dist[v as usize] == UNREACHED {
                    dist[v as usize] = dist[u as usize] + 1;
                    queue.push_back(v);
                }
            }
        }
        dist.into_iter()
            .map(|d| (d != UNREACHED).then_some(d))
            .collect()
    }

    fn goal_or_err(&self) -> Result<u32> {
        self.goal.ok_or(Error::OutOfRange {
            what: "goal reachability",
            value: 0,
        })
    }

    pub fn shortest_distance(&self) -> Result<usize> {
        let goal = self.goal_or_err()?;
        let dist = self.distances_from(self.initial);
        Ok(dist[goal as usize].expect("goal was discovered from the initial state") as usize)
    }

    /// Number of distinct shortest initial-to-goal paths, by summing path
    /// counts over predecessors one BFS layer closer to the start.
    pub fn count_shortest_paths(&self) -> Result<BigUint> {
        let goal = self.goal_or_err()?;
        let dist = self.distances_from(self.initial);
        let mut order: Vec<u32> = self.vertices().collect();
        order.sort_by_key(|&v| dist[v as usize]);
        let zero = BigUint::from(0u32);
        let mut paths = vec![zero; self.len()];
        paths[self.initial as usize] = BigUint::from(1u32);
        for &v in &order {
            let Some(dv) = dist[v as usize] else { continue };
            if dv == 0 {
                continue;
            }
            let mut total = BigUint::from(0u32);
            for &u in self.neighbours(v) {
                if dist[u as usize] == Some(dv - 1) {
                    total += &paths[u as usize];
                }
            }
            paths[v as usize] = total;
        }
        Ok(paths[goal as usize].clone())
    }

    /// Edges lying on at least one shortest path, oriented away from the start.
    pub fn shortest_path_edges(&self) -> Result<Vec<(u32, u32)>> {
        let goal = self.goal_or_err()?;
        let from_start = self.distances_from(self.initial);
        let from_goal = self.distances_from(goal);
        let total = from_start[goal as usize].expect("goal reachable");
        let mut edges = Vec::new();
        for u in self.vertices() {
            let Some(du) = from_start[u as usize] else {
                continue;
            };
            for &v in self.neighbours(u) {
                if let Some(gv) = from_goal[v as usize] {
                    if du + 1 + gv == total {
                        edges.push((u, v));
                    }
                }
            }
        }
        Ok(edges)
    }

    /// Undirected DOT rendering. Nodes appear in lexicographic order of their
    /// board strings; the start is a box, the goal a double circle, and edges
    /// on some shortest path are bold.
    pub fn to_dot(&self) -> Result<String> {
        let bold: std::collections::HashSet<(u32, u32)> = self
            .shortest_path_edges()?
            .into_iter()
            .flat_map(|(u, v)| [(u, v), (v, u)])
            .collect();
        let mut nodes: Vec<u32> = self.vertices().collect();
        nodes.sort_by(|&a, &b| self.state(a).cmp(self.state(b)));

        let mut out = String::new();
        writeln!(out, "graph checkers_{}_{} {{", self.spec.n(), self.spec.m()).unwrap();
        writeln!(out, "  node [shape=ellipse];").unwrap();
        for &v in &nodes {
            let s = self.state(v);
            let shape = if v == self.initial {
                "shape=box, "
            } else if Some(v) == self.goal {
                "shape=doublecircle, "
            } else {
                ""
            };
            writeln!(out, "  \"{s}\" [{shape}label=\"{s}\"];").unwrap();
        }
        let mut edges: Vec<(&str, &str, u32, u32)> = Vec::with_capacity(self.edge_count());
        for u in self.vertices() {
            for &v in self.neighbours(u) {
                let (a, b) = (self.state(u), self.state(v));
                if a < b {
                    edges.push((a, b, u, v));
                }
            }
        }
        edges.sort_unstable();
        for (a, b, u, v) in edges {
            if bold.contains(&(u, v)) {
                writeln!(out, "  \"{a}\" -- \"{b}\" [style=bold];").unwrap();
            } else {
                writeln!(out, "  \"{a}\" -- \"{b}\";").unwrap();
            }
        }
        out.push_str("}\n");
        Ok(out)
    }
}

pub fn shortest_distance(spec: GameSpec) -> Result<usize> {
    build_graph(spec, DEFAULT_CAP)?.shortest_distance()
}

pub fn count_shortest_paths(spec: GameSpec) -> Result<BigUint> {
    build_graph(spec, DEFAULT_CAP)?.count_shortest_paths()
}

pub fn export_dot(spec: GameSpec) -> Result<String> {
    build_graph(spec, DEFAULT_CAP)?.to_dot()
}
