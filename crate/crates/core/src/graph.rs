//! Iteration graphs and the strong-connectivity chaos criterion.
//!
//! The graph of `f` has one vertex per state and, for every state `x` and
//! coordinate `i`, an arc labelled `i` to the state obtained by replacing
//! coordinate `i` of `x` with `f(x)_i`. That target is exactly cell `(i, x)`
//! of the mapping matrix, so the matrix is the adjacency structure.

use std::collections::VecDeque;
use std::fmt::Write as _;

use crate::error::Result;
use crate::func::{mapping_matrix, Limits, MappingMatrix, VectorOfImages};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IterationGraph {
    matrix: MappingMatrix,
}

impl IterationGraph {
    pub fn n_bits(&self) -> u32 {
        self.matrix.n_bits()
    }

    pub fn vertex_count(&self) -> usize {
        self.matrix.state_count()
    }

    pub fn arc_count(&self) -> usize {
        self.vertex_count() * self.n_bits() as usize
    }

    /// Target of the arc labelled `label` (1-based) leaving `x`.
    #[inline]
    pub fn target(&self, x: u32, label: u32) -> u32 {
        self.matrix.cell(label, x)
    }

    /// `(label, target)` pairs leaving `x`, labels ascending.
    pub fn arcs(&self, x: u32) -> impl Iterator<Item = (u32, u32)> + '_ {
        (1..=self.n_bits()).map(move |label| (label, self.target(x, label)))
    }

    pub fn matrix(&self) -> &MappingMatrix {
        &self.matrix
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ChaosVerdict {
    pub strongly_connected: bool,
    pub scc_count: usize,
    /// `(from, to)` with no directed path from `from` to `to`.
    pub witness: Option<(u32, u32)>,
}

pub fn build_graph(f: &VectorOfImages) -> Result<IterationGraph> {
    build_graph_with_limits(f, &Limits::default())
}

pub fn build_graph_with_limits(f: &VectorOfImages, limits: &Limits) -> Result<IterationGraph> {
    limits.check_graph(f.n_bits())?;
    Ok(IterationGraph {
        matrix: mapping_matrix(f),
    })
}

/// SCC labelling of every vertex (Tarjan, iterative). Returns
/// `(component_of_vertex, component_count)`.
pub fn strongly_connected_components(g: &IterationGraph) -> (Vec<u32>, usize) {
    const UNVISITED: u32 = u32::MAX;
    let n = g.vertex_count();
    let labels = g.n_bits();
    let mut index = vec![UNVISITED; n];
    let mut lowlink = vec![0u32; n];
    let mut on_stack = vec![false; n];
    let mut component = vec![UNVISITED; n];
    let mut stack: Vec<u32> = Vec::new();
    // (vertex, next label to explore)
    let mut call: Vec<(u32, u32)> = Vec::new();
    let mut next_index = 0u32;
    let mut count = 0usize;

    for root in 0..n as u32 {
        if index[root as usize] != UNVISITED {
            continue;
        }
        call.push((root, 1));
        index[root as usize] = next_index;
        lowlink[root as usize] = next_index;
        next_index += 1;
        stack.push(root);
        on_stack[root as usize] = true;

        while let Some(&mut (v, ref mut label)) = call.last_mut() {
            if *label <= labels {
                let w = g.target(v, *label);
                *label += 1;
                let wi = w as usize;
                if index[wi] == UNVISITED {
                    index[wi] = next_index;
                    lowlink[wi] = next_index;
                    next_index += 1;
                    stack.push(w);
                    on_stack[wi] = true;
                    call.push((w, 1));
                } else if on_stack[wi] {
                    lowlink[v as usize] = lowlink[v as usize].min(index[wi]);
                }
                continue;
            }
            call.pop();
            let vi = v as usize;
            if lowlink[vi] == index[vi] {
                loop {
                    let w = stack.pop().expect("tarjan stack underflow");
                    on_stack[w as usize] = false;
                    component[w as usize] = count as u32;
                    if w == v {
                        break;
                    }
                }
                count += 1;
            }
            if let Some(&(parent, _)) = call.last() {
                let pi = parent as usize;
                lowlink[pi] = lowlink[pi].min(lowlink[vi]);
            }
        }
    }
    (component, count)
}

pub fn is_strongly_connected(g: &IterationGraph) -> ChaosVerdict {
    let (_, scc_count) = strongly_connected_components(g);
    if scc_count == 1 {
        return ChaosVerdict {
            strongly_connected: true,
            scc_count,
            witness: None,
        };
    }
    ChaosVerdict {
        strongly_connected: false,
        scc_count,
        witness: Some(unreachable_pair(g)),
    }
}

/// Builds the graph of `f` and runs the SCC check.
pub fn chaos_verdict(f: &VectorOfImages) -> Result<ChaosVerdict> {
    Ok(is_strongly_connected(&build_graph(f)?))
}

// Only called when the graph is known not to be strongly connected.
fn unreachable_pair(g: &IterationGraph) -> (u32, u32) {
    let n = g.vertex_count();
    let forward = reach_from(n, 0, |x, out| out.extend(g.arcs(x).map(|(_, t)| t)));
    if let Some(v) = forward.iter().position(|&seen| !seen) {
        return (0, v as u32);
    }
    let mut reverse = vec![Vec::new(); n];
    for x in 0..n as u32 {
        for (_, t) in g.arcs(x) {
            reverse[t as usize].push(x);
        }
    }
    let backward = reach_from(n, 0, |x, out| out.extend_from_slice(&reverse[x as usize]));
    let v = backward
        .iter()
        .position(|&seen| !seen)
        .expect("graph with several SCCs has an unreachable pair");
    (v as u32, 0)
}

fn reach_from(n: usize, start: u32, mut successors: impl FnMut(u32, &mut Vec<u32>)) -> Vec<bool> {
    let mut seen = vec![false; n];
    let mut queue = VecDeque::from([start]);
    let mut scratch = Vec::new();
    seen[start as usize] = true;
    while let Some(x) = queue.pop_front() {
        scratch.clear();
        successors(x, &mut scratch);
        for &t in &scratch {
            if !seen[t as usize] {
                seen[t as usize] = true;
                queue.push_back(t);
            }
        }
    }
    seen
}

/// DOT rendering: vertices as `N`-wide binary strings (`x_1` first), arcs
/// labelled with the updated coordinate, vertices then labels ascending.
pub fn export_dot(g: &IterationGraph) -> String {
    let width = g.n_bits() as usize;
    let name = |x: u32| format!("{x:0width$b}");
    let mut out = String::from("digraph iteration_graph {\n");
    for x in 0..g.vertex_count() as u32 {
        let _ = writeln!(out, "  \"{}\";", name(x));
    }
    for x in 0..g.vertex_count() as u32 {
        for (label, target) in g.arcs(x) {
            let _ = writeln!(
                out,
                "  \"{}\" -> \"{}\" [label=\"{label}\"];",
                name(x),
                name(target)
            );
        }
    }
    out.push_str("}\n");
    out
}
