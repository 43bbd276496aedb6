//! Directed graphs and edge-weighted (coloured) digraphs: Cayley graph
//! construction, strong connectivity, directed-cycle gcd, automorphism
//! enumeration and DOT / JSON export.

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::group::FiniteGroup;
use std::collections::{BTreeMap, BTreeSet};

/// Default cap on vertex count for the automorphism search.
pub const DEFAULT_GRAPH_CAP: usize = 24;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Digraph {
    pub n: usize,
    edges: BTreeSet<(usize, usize)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedDigraph {
    pub graph: Digraph,
    pub field: FieldSpec,
    weights: BTreeMap<(usize, usize), Scalar>,
}

impl Digraph {
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let edges: BTreeSet<(usize, usize)> = edges.into_iter().collect();
        for &(i, j) in &edges {
            if i >= n || j >= n {
                return Err(Error::DimensionMismatch(format!(
                    "edge ({i},{j}) out of range for {n} vertices"
                )));
            }
        }
        Ok(Digraph { n, edges })
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.edges.contains(&(i, j))
    }

    fn successors(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(i, j) in &self.edges {
            adj[i].push(j);
        }
        adj
    }

    /// Strongly connected components (Tarjan), each sorted, listed in
    /// reverse topological order of the condensation.
    pub fn scc(&self) -> Vec<Vec<usize>> {
        let adj = self.successors();
        let n = self.n;
        let mut index = vec![usize::MAX; n];
        let mut lowlink = vec![0usize; n];
        let mut on_stack = vec![false; n];
        let mut stack: Vec<usize> = Vec::new();
        let mut counter = 0usize;
        let mut comps: Vec<Vec<usize>> = Vec::new();

        // iterative Tarjan: (vertex, next-successor position)
        let mut call: Vec<(usize, usize)> = Vec::new();
        for root in 0..n {
            if index[root] != usize::MAX {
                continue;
            }
            call.push((root, 0));
            index[root] = counter;
            lowlink[root] = counter;
            counter += 1;
            stack.push(root);
            on_stack[root] = true;
            while let Some(&mut (v, ref mut pos)) = call.last_mut() {
                if *pos < adj[v].len() {
                    let w = adj[v][*pos];
                    *pos += 1;
                    if index[w] == usize::MAX {
                        index[w] = counter;
                        lowlink[w] = counter;
                        counter += 1;
                        stack.push(w);
                        on_stack[w] = true;
                        call.push((w, 0));
                    } else if on_stack[w] {
                        lowlink[v] = lowlink[v].min(index[w]);
                    }
                } else {
                    call.pop();
                    if let Some(&(parent, _)) = call.last() {
                        lowlink[parent] = lowlink[parent].min(lowlink[v]);
                    }
                    if lowlink[v] == index[v] {
                        let mut comp = Vec::new();
                        loop {
                            let w = stack.pop().unwrap();
                            on_stack[w] = false;
                            comp.push(w);
                            if w == v {
                                break;
                            }
                        }
                        comp.sort_unstable();
                        comps.push(comp);
                    }
                }
            }
        }
        comps
    }

    pub fn is_strongly_connected(&self) -> bool {
        self.n >= 1 && self.scc().len() == 1
    }

    /// gcd of the lengths of all directed cycles, or `None` when acyclic.
    /// Computed per SCC from BFS level differences (the period of the
    /// component), then combined across components.
    pub fn cycle_length_gcd(&self) -> Option<u64> {
        let adj = self.successors();
        let mut comp_of = vec![usize::MAX; self.n];
        let comps = self.scc();
        for (ci, comp) in comps.iter().enumerate() {
            for &v in comp {
                comp_of[v] = ci;
            }
        }
        let mut total: u64 = 0;
        for comp in &comps {
            // single vertex without a loop has no internal cycle
            if comp.len() == 1 && !self.has_edge(comp[0], comp[0]) {
                continue;
            }
            let root = comp[0];
            let mut level: BTreeMap<usize, i64> = BTreeMap::new();
            level.insert(root, 0);
            let mut queue = std::collections::VecDeque::from([root]);
            while let Some(v) = queue.pop_front() {
                for &w in &adj[v] {
                    if comp_of[w] != comp_of[root] {
                        continue;
                    }
                    if !level.contains_key(&w) {
                        level.insert(w, level[&v] + 1);
                        queue.push_back(w);
                    }
                }
            }
            let mut g: u64 = 0;
            for &v in comp {
                for &w in &adj[v] {
                    if comp_of[w] != comp_of[root] {
                        continue;
                    }
                    let diff = (level[&v] + 1 - level[&w]).unsigned_abs();
                    g = gcd64(g, diff);
                }
            }
            total = gcd64(total, g);
        }
        if total == 0 {
            None
        } else {
            Some(total)
        }
    }

    /// Deterministic DOT rendering; vertex names come from `labels` or
    /// default to `v{i}`.
    pub fn to_dot(&self, labels: Option<&[String]>) -> String {
        dot_text(self, None, labels)
    }

    pub fn to_json(&self) -> String {
        let edges: Vec<serde_json::Value> = self
            .edges
            .iter()
            .map(|&(i, j)| serde_json::json!([i, j]))
            .collect();
        serde_json::to_string_pretty(&serde_json::json!({"n": self.n, "edges": edges}))
            .expect("graph serializes")
    }
}

impl WeightedDigraph {
    pub fn new(
        n: usize,
        field: FieldSpec,
        weighted_edges: impl IntoIterator<Item = (usize, usize, Scalar)>,
    ) -> Result<Self> {
        let mut edges = BTreeSet::new();
        let mut weights = BTreeMap::new();
        for (i, j, w) in weighted_edges {
            if field.is_zero(&w) {
                return Err(Error::DimensionMismatch(format!(
                    "zero weight on edge ({i},{j})"
                )));
            }
            if !field.contains(&w) {
                return Err(Error::FieldMismatch(field.to_string()));
            }
            edges.insert((i, j));
            weights.insert((i, j), w);
        }
        let graph = Digraph::new(n, edges)?;
        Ok(WeightedDigraph {
            graph,
            field,
            weights,
        })
    }

    pub fn weight(&self, i: usize, j: usize) -> Option<&Scalar> {
        self.weights.get(&(i, j))
    }

    pub fn weights(&self) -> &BTreeMap<(usize, usize), Scalar> {
        &self.weights
    }

    pub fn to_dot(&self, labels: Option<&[String]>) -> String {
        dot_text(&self.graph, Some(&self.weights), labels)
    }

    pub fn to_json(&self) -> String {
        let edges: Vec<serde_json::Value> = self
            .graph
            .edges
            .iter()
            .map(|&(i, j)| serde_json::json!([i, j, self.weights[&(i, j)].to_string()]))
            .collect();
        serde_json::to_string_pretty(&serde_json::json!({"n": self.graph.n, "edges": edges}))
            .expect("graph serializes")
    }
}

fn gcd64(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd64(b, a % b)
    }
}

fn dot_text(
    d: &Digraph,
    weights: Option<&BTreeMap<(usize, usize), Scalar>>,
    labels: Option<&[String]>,
) -> String {
    let name = |i: usize| match labels {
        Some(ls) => ls[i].clone(),
        None => format!("v{i}"),
    };
    let mut out = String::from("digraph cayvol {\n");
    for i in 0..d.n {
        out.push_str(&format!("  \"{}\";\n", name(i)));
    }
    for &(i, j) in &d.edges {
        match weights.and_then(|w| w.get(&(i, j))) {
            Some(w) => out.push_str(&format!(
                "  \"{}\" -> \"{}\" [label=\"{}\"];\n",
                name(i),
                name(j),
                w
            )),
            None => out.push_str(&format!("  \"{}\" -> \"{}\";\n", name(i), name(j))),
        }
    }
    out.push_str("}\n");
    out
}

/// Cayley graph of `g` with respect to `s`: edges (x, x*s) for every x and
/// every s in the set.
pub fn cayley_graph(g: &FiniteGroup, s: &[usize]) -> Result<Digraph> {
    if s.is_empty() {
        return Err(Error::EmptySupport);
    }
    let mut edges = BTreeSet::new();
    for x in 0..g.order() {
        for &gen in s {
            edges.insert((x, g.mul(x, gen)));
        }
    }
    Digraph::new(g.order(), edges)
}

/// Coloured Cayley graph: edge (x, x*s) carries the colour of s. The second
/// return value reports whether the colouring is faithful (injective on s).
pub fn coloured_cayley_graph(
    g: &FiniteGroup,
    s: &[usize],
    colour_of: &dyn Fn(usize) -> Scalar,
    field: &FieldSpec,
) -> Result<(WeightedDigraph, bool)> {
    if s.is_empty() {
        return Err(Error::EmptySupport);
    }
    let mut weighted = Vec::new();
    for &gen in s {
        let c = colour_of(gen);
        if field.is_zero(&c) {
            return Err(Error::DimensionMismatch(format!(
                "colour of generator {gen} is zero"
            )));
        }
        for x in 0..g.order() {
            weighted.push((x, g.mul(x, gen), c.clone()));
        }
    }
    let mut distinct = BTreeSet::new();
    for &gen in s {
        distinct.insert(colour_of(gen).to_string());
    }
    let faithful = distinct.len() == s.len();
    Ok((WeightedDigraph::new(g.order(), field.clone(), weighted)?, faithful))
}

// ---------------------------------------------------------------------------
// Automorphism / isomorphism enumeration.
// ---------------------------------------------------------------------------

struct IsoSearch<'a> {
    n: usize,
    d1: &'a Digraph,
    d2: &'a Digraph,
    c1: Option<ColourMap>,
    c2: Option<ColourMap>,
    order: Vec<usize>,
    candidates: Vec<Vec<usize>>,
    stop_after: Option<usize>,
    found: Vec<Vec<usize>>,
}

/// Per-vertex invariant used to cut the candidate sets: degrees, loop
/// colour, sorted colour profiles of outgoing and incoming edges, and the
/// optional vertex colour.
fn vertex_profile(
    d: &Digraph,
    colours: Option<&ColourMap>,
    vcolours: Option<&[usize]>,
    v: usize,
) -> (Vec<usize>, Vec<usize>, Option<usize>, usize) {
    let mut outs = Vec::new();
    let mut ins = Vec::new();
    let mut loop_colour = None;
    for (i, j) in d.edges() {
        let c = colours.map(|m| m[&(i, j)]).unwrap_or(0);
        if i == v && j == v {
            loop_colour = Some(c);
        } else if i == v {
            outs.push(c);
        } else if j == v {
            ins.push(c);
        }
    }
    outs.sort_unstable();
    ins.sort_unstable();
    let vc = vcolours.map(|vc| vc[v]).unwrap_or(0);
    (outs, ins, loop_colour, vc)
}

impl<'a> IsoSearch<'a> {
    fn consistent(&self, sigma: &[Option<usize>], v: usize, w: usize) -> bool {
        for (u, su) in sigma.iter().enumerate() {
            let Some(&su) = su.as_ref() else { continue };
            for (a, b, sa, sb) in [(v, u, w, su), (u, v, su, w)] {
                let e1 = self.d1.has_edge(a, b);
                let e2 = self.d2.has_edge(sa, sb);
                if e1 != e2 {
                    return false;
                }
                if e1 {
                    if let (Some(c1), Some(c2)) = (&self.c1, &self.c2) {
                        if c1[&(a, b)] != c2[&(sa, sb)] {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    fn dfs(&mut self, sigma: &mut Vec<Option<usize>>, used: &mut Vec<bool>, depth: usize) {
        if let Some(limit) = self.stop_after {
            if self.found.len() >= limit {
                return;
            }
        }
        if depth == self.n {
            self.found
                .push(sigma.iter().map(|s| s.unwrap()).collect());
            return;
        }
        let v = self.order[depth];
        let cands = self.candidates[v].clone();
        for w in cands {
            if used[w] || !self.consistent(sigma, v, w) {
                continue;
            }
            sigma[v] = Some(w);
            used[w] = true;
            self.dfs(sigma, used, depth + 1);
            sigma[v] = None;
            used[w] = false;
        }
    }
}

type ColourMap = BTreeMap<(usize, usize), usize>;

fn colour_ids(
    field: &FieldSpec,
    w1: Option<&BTreeMap<(usize, usize), Scalar>>,
    w2: Option<&BTreeMap<(usize, usize), Scalar>>,
) -> (Option<ColourMap>, Option<ColourMap>) {
    let _ = field;
    let (Some(w1), Some(w2)) = (w1, w2) else {
        return (None, None);
    };
    let mut palette: BTreeSet<String> = BTreeSet::new();
    for w in w1.values().chain(w2.values()) {
        palette.insert(w.to_string());
    }
    let ids: BTreeMap<String, usize> = palette
        .into_iter()
        .enumerate()
        .map(|(i, s)| (s, i))
        .collect();
    let map = |w: &BTreeMap<(usize, usize), Scalar>| {
        w.iter()
            .map(|(&e, s)| (e, ids[&s.to_string()]))
            .collect::<BTreeMap<_, _>>()
    };
    (Some(map(w1)), Some(map(w2)))
}

/// All vertex bijections d1 -> d2 preserving edges (and colours, when
/// given). `stop_after` truncates the enumeration once that many maps have
/// been found.
#[allow(clippy::too_many_arguments)]
pub fn isomorphisms(
    d1: &Digraph,
    d2: &Digraph,
    field: Option<&FieldSpec>,
    w1: Option<&BTreeMap<(usize, usize), Scalar>>,
    w2: Option<&BTreeMap<(usize, usize), Scalar>>,
    vcolours1: Option<&[usize]>,
    vcolours2: Option<&[usize]>,
    cap: usize,
    stop_after: Option<usize>,
) -> Result<Vec<Vec<usize>>> {
    if d1.n != d2.n || d1.edge_count() != d2.edge_count() {
        return Ok(Vec::new());
    }
    if d1.n > cap {
        return Err(Error::SizeCap { n: d1.n, cap });
    }
    let rational = FieldSpec::Rational;
    let (c1, c2) = colour_ids(field.unwrap_or(&rational), w1, w2);
    let n = d1.n;
    let prof1: Vec<_> = (0..n)
        .map(|v| vertex_profile(d1, c1.as_ref(), vcolours1, v))
        .collect();
    let prof2: Vec<_> = (0..n)
        .map(|v| vertex_profile(d2, c2.as_ref(), vcolours2, v))
        .collect();
    let mut candidates = vec![Vec::new(); n];
    for v in 0..n {
        for w in 0..n {
            if prof1[v] == prof2[w] {
                candidates[v].push(w);
            }
        }
        if candidates[v].is_empty() {
            return Ok(Vec::new());
        }
    }
    // assign the most constrained vertices first
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (candidates[v].len(), v));
    let mut search = IsoSearch {
        n,
        d1,
        d2,
        c1,
        c2,
        order,
        candidates,
        stop_after,
        found: Vec::new(),
    };
    let mut sigma = vec![None; n];
    let mut used = vec![false; n];
    search.dfs(&mut sigma, &mut used, 0);
    let mut found = search.found;
    found.sort();
    Ok(found)
}

/// All automorphisms of `d`, respecting edge weights and vertex colours
/// exactly when given.
pub fn automorphisms(
    d: &Digraph,
    weights: Option<&WeightedDigraph>,
    vertex_colours: Option<&[usize]>,
    cap: usize,
) -> Result<Vec<Vec<usize>>> {
    let (field, w) = match weights {
        Some(wd) => (Some(&wd.field), Some(wd.weights())),
        None => (None, None),
    };
    isomorphisms(d, d, field, w, w, vertex_colours, vertex_colours, cap, None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::FiniteGroup;

    fn cycle(n: usize) -> Digraph {
        Digraph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    #[test]
    fn cayley_graph_examples() {
        let c4 = FiniteGroup::cyclic(4).unwrap();
        let d = cayley_graph(&c4, &[1]).unwrap();
        assert_eq!(d, cycle(4));

        let s3 = FiniteGroup::symmetric(3).unwrap();
        // "120" is a 3-cycle in one-line notation
        let rot = s3.index_of_label("120").unwrap();
        assert_eq!(s3.element_order(rot), 3);
        let d = cayley_graph(&s3, &[rot]).unwrap();
        let comps = d.scc();
        assert_eq!(comps.len(), 2);
        assert!(comps.iter().all(|c| c.len() == 3));

        let all: Vec<usize> = (0..6).collect();
        let d = cayley_graph(&s3, &all).unwrap();
        assert_eq!(d.edge_count(), 36); // complete with loops
        assert!((0..6).all(|v| d.has_edge(v, v)));

        assert!(cayley_graph(&s3, &[]).is_err());
    }

    #[test]
    fn strong_connectivity() {
        assert!(cycle(5).is_strongly_connected());
        let two_triangles = Digraph::new(
            6,
            [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)],
        )
        .unwrap();
        assert!(!two_triangles.is_strongly_connected());
    }

    #[test]
    fn connectivity_matches_generation_exhaustively() {
        // for |G| <= 8: Cay(G,S) strongly connected iff S generates
        for g in [
            FiniteGroup::cyclic(8).unwrap(),
            FiniteGroup::dihedral(4).unwrap(),
            FiniteGroup::quaternion8().unwrap(),
            FiniteGroup::symmetric(3).unwrap(),
        ] {
            let n = g.order();
            for mask in 1u32..(1 << n) {
                let s: Vec<usize> = (0..n).filter(|&i| mask & (1 << i) != 0).collect();
                let d = cayley_graph(&g, &s).unwrap();
                assert_eq!(d.is_strongly_connected(), g.generates(&s));
            }
        }
    }

    #[test]
    fn cycle_gcds() {
        assert_eq!(cycle(4).cycle_length_gcd(), Some(4));
        let loopy = Digraph::new(3, [(0, 1), (1, 2), (2, 0), (1, 1)]).unwrap();
        assert_eq!(loopy.cycle_length_gcd(), Some(1));
        let acyclic = Digraph::new(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(acyclic.cycle_length_gcd(), None);

        // a 2-cycle and a 3-cycle: Cay(S3, {transposition, rotation})
        let s3 = FiniteGroup::symmetric(3).unwrap();
        let t = s3.index_of_label("021").unwrap();
        let rot = s3.index_of_label("120").unwrap();
        let d = cayley_graph(&s3, &[t, rot]).unwrap();
        assert_eq!(d.cycle_length_gcd(), Some(1));
    }

    #[test]
    fn cycle_gcd_of_singleton_cayley_is_element_order() {
        for g in [
            FiniteGroup::cyclic(6).unwrap(),
            FiniteGroup::dihedral(4).unwrap(),
            FiniteGroup::quaternion8().unwrap(),
            FiniteGroup::alternating(4).unwrap(),
        ] {
            for s in 0..g.order() {
                let d = cayley_graph(&g, &[s]).unwrap();
                assert_eq!(d.cycle_length_gcd(), Some(g.element_order(s) as u64));
            }
        }
    }

    #[test]
    fn automorphisms_of_cycle() {
        let auts = automorphisms(&cycle(6), None, None, 24).unwrap();
        assert_eq!(auts.len(), 6); // rotations only, directed
        // group closure: composition stays inside
        for a in &auts {
            for b in &auts {
                let comp: Vec<usize> = (0..6).map(|i| a[b[i]]).collect();
                assert!(auts.contains(&comp));
            }
        }
        assert!(auts.contains(&(0..6).collect::<Vec<_>>()));
    }

    #[test]
    fn automorphism_of_single_loop() {
        let d = Digraph::new(1, [(0, 0)]).unwrap();
        let auts = automorphisms(&d, None, None, 24).unwrap();
        assert_eq!(auts, vec![vec![0]]);
    }

    #[test]
    fn coloured_cayley_automorphisms_are_left_translations() {
        let field = FieldSpec::prime(13).unwrap();
        for g in [
            FiniteGroup::symmetric(3).unwrap(),
            FiniteGroup::dihedral(4).unwrap(),
        ] {
            let s = g.coprime_generating_set();
            let units = field.enumerate_units(s.len()).unwrap();
            let colour = |gen: usize| {
                let pos = s.iter().position(|&x| x == gen).unwrap();
                units[pos].clone()
            };
            let (wd, faithful) = coloured_cayley_graph(&g, &s, &colour, &field).unwrap();
            assert!(faithful);
            let auts = automorphisms(&wd.graph, Some(&wd), None, 24).unwrap();
            let mut translations: Vec<Vec<usize>> = (0..g.order())
                .map(|h| (0..g.order()).map(|x| g.mul(h, x)).collect())
                .collect();
            translations.sort();
            assert_eq!(auts, translations);
        }
    }

    #[test]
    fn unfaithful_colouring_is_flagged() {
        let c2 = FiniteGroup::cyclic(2).unwrap();
        let field = FieldSpec::prime(5).unwrap();
        let one = field.one();
        let (wd, faithful) =
            coloured_cayley_graph(&c2, &[0, 1], &|_| one.clone(), &field).unwrap();
        assert!(!faithful);
        assert_eq!(wd.graph.edge_count(), 4);

        // injective colours: loops coloured 1, cross edges coloured 2
        let colour = |g: usize| field.from_integer(if g == 0 { 1 } else { 2 });
        let (wd, faithful) = coloured_cayley_graph(&c2, &[0, 1], &colour, &field).unwrap();
        assert!(faithful);
        assert_eq!(wd.weight(0, 0), Some(&field.from_integer(1)));
        assert_eq!(wd.weight(0, 1), Some(&field.from_integer(2)));
        assert_eq!(wd.weight(1, 1), Some(&field.from_integer(1)));
    }

    #[test]
    fn vertex_colours_restrict_automorphisms() {
        // a directed 4-cycle has 4 rotations, but colouring one vertex
        // differently pins it
        let d = cycle(4);
        let auts = automorphisms(&d, None, Some(&[1, 0, 0, 0]), 24).unwrap();
        assert_eq!(auts, vec![vec![0, 1, 2, 3]]);
        // a 2-colouring respected by rotation by two
        let auts = automorphisms(&d, None, Some(&[1, 0, 1, 0]), 24).unwrap();
        assert_eq!(auts.len(), 2);
    }

    #[test]
    fn dot_output() {
        let d = Digraph::new(2, [(0, 1)]).unwrap();
        let text = d.to_dot(None);
        assert!(text.contains("\"v0\" -> \"v1\""));
        assert_eq!(text, d.to_dot(None)); // deterministic

        let f = FieldSpec::prime(5).unwrap();
        let wd = WeightedDigraph::new(2, f.clone(), [(0, 1, f.from_integer(2))]).unwrap();
        assert!(wd.to_dot(None).contains("label=\"2\""));
        let json = wd.to_json();
        assert!(json.contains("\"2\""));
    }
}
