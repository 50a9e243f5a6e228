//! Graphviz output. Poset edges point upwards along cover relations.

use std::fmt::Write;

use mtp_core::Bipartite;
use mtp_posets::Poset;

fn quote(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for c in s.chars() {
        if c == '"' || c == '\\' {
            out.push('\\');
        }
        out.push(c);
    }
    out.push('"');
    out
}

pub fn poset_dot(p: &Poset, name: &str) -> String {
    let mut s = String::new();
    writeln!(s, "digraph {} {{", quote(name)).unwrap();
    writeln!(s, "  rankdir=BT;").unwrap();
    for a in 0..p.len() {
        let e = &p.elements[a];
        let label = match (&e.vertices, &e.point) {
            (Some(_), Some(pt)) => format!("{} {pt}", p.name(a)),
            _ => p.name(a),
        };
        let style = if e.formal { ", style=dashed" } else { "" };
        writeln!(s, "  n{a} [label={}{style}];", quote(&label)).unwrap();
    }
    for &(a, b) in p.hasse() {
        writeln!(s, "  n{a} -> n{b};").unwrap();
    }
    s.push_str("}\n");
    s
}

/// Undirected bipartite drawing of an incidence graph.
pub fn bipartite_dot(g: &Bipartite, name: &str) -> String {
    let mut s = String::new();
    writeln!(s, "graph {} {{", quote(name)).unwrap();
    for (k, l) in g.left.iter().enumerate() {
        writeln!(s, "  l{k} [label={}, shape=box];", quote(l)).unwrap();
    }
    for (k, r) in g.right.iter().enumerate() {
        writeln!(s, "  r{k} [label={}];", quote(r)).unwrap();
    }
    for (l, r) in g.edges() {
        writeln!(s, "  l{l} -- r{r};").unwrap();
    }
    s.push_str("}\n");
    s
}

/// Edge list of a digraph written by [`poset_dot`].
pub fn parse_dot_edges(dot: &str) -> Vec<(usize, usize)> {
    dot.lines()
        .filter_map(|l| {
            let (a, b) = l.trim().trim_end_matches(';').split_once(" -> ")?;
            Some((a.strip_prefix('n')?.parse().ok()?, b.strip_prefix('n')?.parse().ok()?))
        })
        .collect()
}
