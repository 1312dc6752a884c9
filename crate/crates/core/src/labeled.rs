//! Branching solver for the labeled problem variant.
//!
//! A labeled instance restricts solutions to edges between red vertices that
//! span every red component they touch. The solver applies three reduction
//! rules, then picks a vertex `v` of maximum degree (which exceeds `d`) and
//! branches:
//!
//! * `v` red: over every valid `(d + 1)`-colouring of the red component of
//!   `v`;
//! * `v` blue: over every nonempty union `R_I` of red components meeting
//!   `N(v)` with `|R_I| <= 2k`, and every valid colouring of `R_I`.
//!
//! Each branch contracts the monochromatic components of the coloured region
//! along BFS spanning trees, relabels the merged vertices blue and recurses
//! with the budget reduced by the number of contracted edges. A colouring is
//! valid when no monochromatic component is a single vertex, so every branch
//! spends at least `|R| / 2` of the budget.

use std::collections::HashSet;

use itertools::Itertools;

use crate::contraction::{bfs_spanning_tree, contract_edge_set, ContractionResult};
use crate::graph::{Edge, Graph, Vertex};
use crate::instance::{check_labeled_solution, Certificate, LabeledInstance};

/// Exponent `c` of the polynomial factor in [`node_count_bound`].
///
/// Every node strictly lowers the budget and contracts at least one edge, so
/// a root-to-leaf path has at most `min(k, n - 1) + 2 <= n + 1` nodes; the
/// leaf count is bounded by `2^((d+2)k) (d+1)^(2k)`.
pub const NODE_BOUND_EXPONENT: u32 = 1;

/// `2^((d+2)k) * (d+1)^(2k) * (n+1)^c`, as a float since it overflows quickly.
pub fn node_count_bound(n: usize, k: usize, d: usize, c: u32) -> f64 {
    let (n, k, d) = (n as f64, k as f64, d as f64);
    2f64.powf((d + 2.0) * k) * (d + 1.0).powf(2.0 * k) * (n + 1.0).powi(c as i32)
}

/// A colouring of `domain` (sorted) with colours `0..=d`, `colors[i]` being
/// the colour of `domain[i]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ValidColoring {
    pub domain: Vec<Vertex>,
    pub colors: Vec<usize>,
}

impl ValidColoring {
    pub fn color_of(&self, v: Vertex) -> Option<usize> {
        self.domain.binary_search(&v).ok().map(|i| self.colors[i])
    }

    /// Monochromatic connected components of `g[domain]`, ordered by minimum
    /// vertex.
    pub fn monochromatic_components(&self, g: &Graph) -> Vec<Vec<Vertex>> {
        let mut color = vec![usize::MAX; g.vertex_count()];
        for (&v, &c) in self.domain.iter().zip(&self.colors) {
            color[v] = c;
        }
        let mut seen = vec![false; g.vertex_count()];
        let mut out = Vec::new();
        for &start in &self.domain {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = vec![start];
            let mut i = 0;
            while i < comp.len() {
                let u = comp[i];
                i += 1;
                for &w in g.neighbors(u) {
                    if !seen[w] && color[w] == color[u] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Monochromatic partition with colours renamed by first occurrence.
    fn canonical_partition(&self) -> Vec<usize> {
        let mut rename = Vec::new();
        self.colors
            .iter()
            .map(|&c| match rename.iter().position(|&x| x == c) {
                Some(i) => i,
                None => {
                    rename.push(c);
                    rename.len() - 1
                }
            })
            .collect()
    }
}

/// Lexicographic enumeration of the valid colourings of `g[domain]`.
///
/// A colouring is valid iff every vertex has a neighbour of its own colour
/// inside `domain`. The enumeration assigns colours in domain order and
/// prunes as soon as a vertex whose neighbours are all coloured is left
/// without a same-coloured neighbour.
pub struct ValidColorings {
    domain: Vec<Vertex>,
    /// Local neighbour lists inside the domain.
    local: Vec<Vec<usize>>,
    /// `closes_at[i]`: vertices whose whole closed neighbourhood is coloured
    /// once position `i` is.
    closes_at: Vec<Vec<usize>>,
    colors: Vec<usize>,
    palette: usize,
    pos: usize,
    exhausted: bool,
    dedup: Option<HashSet<Vec<usize>>>,
}

impl ValidColorings {
    fn new(g: &Graph, domain: &[Vertex], d: usize, dedup: bool) -> Self {
        let mut domain = domain.to_vec();
        domain.sort_unstable();
        domain.dedup();
        let local: Vec<Vec<usize>> = domain
            .iter()
            .map(|&v| {
                g.neighbors(v)
                    .iter()
                    .filter_map(|w| domain.binary_search(w).ok())
                    .collect()
            })
            .collect();
        let mut closes_at = vec![Vec::new(); domain.len()];
        for (j, nbrs) in local.iter().enumerate() {
            let last = nbrs.iter().copied().max().unwrap_or(j).max(j);
            closes_at[last].push(j);
        }
        let m = domain.len();
        ValidColorings {
            domain,
            local,
            closes_at,
            colors: vec![0; m],
            palette: d + 1,
            pos: 0,
            exhausted: false,
            dedup: dedup.then(HashSet::new),
        }
    }

    fn consistent(&self, i: usize) -> bool {
        self.closes_at[i].iter().all(|&j| {
            self.local[j]
                .iter()
                .any(|&t| self.colors[t] == self.colors[j])
        })
    }

    fn advance(&mut self) -> Option<ValidColoring> {
        let m = self.domain.len();
        if self.exhausted {
            return None;
        }
        if m == 0 {
            self.exhausted = true;
            return Some(ValidColoring {
                domain: Vec::new(),
                colors: Vec::new(),
            });
        }
        loop {
            let i = self.pos;
            if self.colors[i] >= self.palette {
                if i == 0 {
                    self.exhausted = true;
                    return None;
                }
                self.pos -= 1;
                self.colors[i - 1] += 1;
                continue;
            }
            if !self.consistent(i) {
                self.colors[i] += 1;
                continue;
            }
            if i + 1 == m {
                let out = ValidColoring {
                    domain: self.domain.clone(),
                    colors: self.colors.clone(),
                };
                self.colors[i] += 1;
                return Some(out);
            }
            self.pos += 1;
            self.colors[i + 1] = 0;
        }
    }
}

impl Iterator for ValidColorings {
    type Item = ValidColoring;

    fn next(&mut self) -> Option<ValidColoring> {
        loop {
            let coloring = self.advance()?;
            match &mut self.dedup {
                Some(seen) => {
                    if seen.insert(coloring.canonical_partition()) {
                        return Some(coloring);
                    }
                }
                None => return Some(coloring),
            }
        }
    }
}

/// All valid `(d + 1)`-colourings of `g[domain]` in lexicographic order.
pub fn valid_colorings(g: &Graph, domain: &[Vertex], d: usize) -> ValidColorings {
    ValidColorings::new(g, domain, d, false)
}

/// Like [`valid_colorings`], skipping colourings whose monochromatic
/// partition has already been produced under another colour naming.
pub fn distinct_valid_colorings(g: &Graph, domain: &[Vertex], d: usize) -> ValidColorings {
    ValidColorings::new(g, domain, d, true)
}

/// Result of contracting the monochromatic components of a coloured region.
#[derive(Debug, Clone)]
pub struct ColorwiseContraction {
    pub graph: Graph,
    pub red: Vec<bool>,
    /// Remaining budget; negative when the region needed more than `k` edges.
    pub k: i64,
    pub d: usize,
    /// Spanning-tree edges that were contracted, in the input's vertex ids.
    pub contracted_edges: Vec<Edge>,
    pub map: ContractionResult,
}

impl ColorwiseContraction {
    pub fn instance(&self) -> Option<LabeledInstance> {
        let k = usize::try_from(self.k).ok()?;
        LabeledInstance::from_mask(self.graph.clone(), self.red.clone(), k, self.d).ok()
    }
}

fn colorwise(
    g: &Graph,
    red: &[bool],
    k: i64,
    d: usize,
    coloring: &ValidColoring,
) -> ColorwiseContraction {
    let edges: Vec<Edge> = coloring
        .monochromatic_components(g)
        .iter()
        .flat_map(|comp| bfs_spanning_tree(g, comp))
        .sorted()
        .collect();
    let map = contract_edge_set(g, &edges).expect("spanning tree edges belong to the graph");
    let in_region: HashSet<Vertex> = coloring.domain.iter().copied().collect();
    let new_red = map
        .witness_sets
        .iter()
        .map(|ws| ws.len() == 1 && red[ws[0]] && !in_region.contains(&ws[0]))
        .collect();
    ColorwiseContraction {
        graph: map.contracted.clone(),
        red: new_red,
        k: k - edges.len() as i64,
        d,
        contracted_edges: edges,
        map,
    }
}

/// Contracts every monochromatic component of `coloring` (a valid colouring
/// of a red region) along its BFS spanning tree and relabels the merged
/// vertices blue.
pub fn colorwise_contraction(li: &LabeledInstance, coloring: &ValidColoring) -> ColorwiseContraction {
    assert!(
        coloring.domain.iter().all(|&v| li.is_red(v)),
        "coloured region must be red"
    );
    colorwise(&li.graph, li.red_mask(), li.k as i64, li.d, coloring)
}

/// Trivial-yes rule: maximum degree already at most `d`.
pub fn apply_rr1(li: &LabeledInstance) -> Option<Certificate> {
    (li.graph.max_degree() <= li.d).then(Certificate::empty)
}

/// Relabels every red component of size 1 or at least `2k + 1` blue.
/// Returns the number of components moved.
fn rr2_in_place(g: &Graph, red: &mut [bool], k: i64) -> usize {
    let mut moved = 0;
    loop {
        let oversized: Vec<Vec<Vertex>> = g
            .components_where(|v| red[v])
            .into_iter()
            .filter(|c| c.len() == 1 || c.len() as i64 > 2 * k)
            .collect();
        if oversized.is_empty() {
            return moved;
        }
        moved += oversized.len();
        for v in oversized.into_iter().flatten() {
            red[v] = false;
        }
    }
}

pub fn apply_rr2(li: &LabeledInstance) -> LabeledInstance {
    let mut red = li.red_mask().to_vec();
    rr2_in_place(&li.graph, &mut red, li.k as i64);
    LabeledInstance::from_mask(li.graph.clone(), red, li.k, li.d).expect("same vertex count")
}

fn component_index(g: &Graph, red: &[bool]) -> (Vec<Vec<Vertex>>, Vec<usize>) {
    let comps = g.components_where(|v| red[v]);
    let mut index = vec![usize::MAX; g.vertex_count()];
    for (i, comp) in comps.iter().enumerate() {
        for &v in comp {
            index[v] = i;
        }
    }
    (comps, index)
}

/// Indices of the red components meeting `N(v)`, ascending.
fn components_meeting(g: &Graph, index: &[usize], v: Vertex) -> Vec<usize> {
    g.neighbors(v)
        .iter()
        .map(|&w| index[w])
        .filter(|&i| i != usize::MAX)
        .sorted()
        .dedup()
        .collect()
}

fn rr3_witness(g: &Graph, red: &[bool], d: usize) -> Option<Vertex> {
    let (_, index) = component_index(g, red);
    g.vertices()
        .filter(|&v| !red[v])
        .find(|&v| components_meeting(g, &index, v).len() > d)
}

/// Returns a blue vertex whose neighbourhood meets at least `d + 1` red
/// components, which makes the instance a No instance.
pub fn apply_rr3(li: &LabeledInstance) -> Option<Vertex> {
    rr3_witness(&li.graph, li.red_mask(), li.d)
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct LabeledOptions {
    /// Skip colourings that repeat an earlier monochromatic partition.
    pub dedup_colorings: bool,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SolverStats {
    pub nodes_expanded: u64,
    pub rr1_fired: u64,
    /// Red components moved to blue.
    pub rr2_fired: u64,
    pub rr3_fired: u64,
    pub colorings_tried: u64,
}

impl SolverStats {
    pub fn rules_fired(&self) -> u64 {
        self.rr1_fired + self.rr2_fired + self.rr3_fired
    }

    pub fn absorb(&mut self, other: &SolverStats) {
        self.nodes_expanded += other.nodes_expanded;
        self.rr1_fired += other.rr1_fired;
        self.rr2_fired += other.rr2_fired;
        self.rr3_fired += other.rr3_fired;
        self.colorings_tried += other.colorings_tried;
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledOutcome {
    pub certificate: Option<Certificate>,
    pub stats: SolverStats,
}

struct Search {
    d: usize,
    opts: LabeledOptions,
    stats: SolverStats,
}

impl Search {
    /// `acc` maps the root graph onto `g`. Returns solution edges in root ids.
    fn solve(&mut self, g: &Graph, red: &[bool], k: i64, acc: &ContractionResult) -> Option<Vec<Edge>> {
        self.stats.nodes_expanded += 1;
        let d = self.d;
        if k < 0 {
            return None;
        }
        let max_degree = g.max_degree();
        if k == 0 {
            return (max_degree <= d).then(Vec::new);
        }
        if max_degree <= d {
            self.stats.rr1_fired += 1;
            return Some(Vec::new());
        }
        let mut red = red.to_vec();
        self.stats.rr2_fired += rr2_in_place(g, &mut red, k) as u64;
        if rr3_witness(g, &red, d).is_some() {
            self.stats.rr3_fired += 1;
            return None;
        }

        let v = g
            .vertices()
            .find(|&u| g.degree(u) == max_degree)
            .expect("nonempty graph");
        let (comps, index) = component_index(g, &red);
        let regions: Vec<Vec<Vertex>> = if red[v] {
            vec![comps[index[v]].clone()]
        } else {
            let meeting = components_meeting(g, &index, v);
            (1..=meeting.len())
                .flat_map(|size| meeting.iter().copied().combinations(size))
                .map(|pick| pick.iter().flat_map(|&i| comps[i].iter().copied()).sorted().collect())
                .filter(|region: &Vec<Vertex>| (region.len() as i64) < 2 * k + 1)
                .collect()
        };

        for region in regions {
            let colorings = ValidColorings::new(g, &region, d, self.opts.dedup_colorings);
            for coloring in colorings {
                self.stats.colorings_tried += 1;
                let step = colorwise(g, &red, k, d, &coloring);
                let next_acc = acc.compose(&step.map);
                if let Some(mut rest) = self.solve(&step.graph, &step.red, step.k, &next_acc) {
                    // Region vertices are unmerged red vertices, hence singletons of `acc`.
                    rest.extend(step.contracted_edges.iter().map(|e| {
                        let lift = |x: Vertex| {
                            let ws = &acc.witness_sets[x];
                            debug_assert_eq!(ws.len(), 1);
                            ws[0]
                        };
                        Edge::new(lift(e.lo()), lift(e.hi()))
                    }));
                    return Some(rest);
                }
            }
        }
        None
    }
}

/// Decides the labeled instance, returning a verified certificate on Yes.
pub fn solve_labeled(li: &LabeledInstance, opts: &LabeledOptions) -> LabeledOutcome {
    let mut search = Search {
        d: li.d,
        opts: *opts,
        stats: SolverStats::default(),
    };
    let acc = ContractionResult::identity(&li.graph);
    let found = search.solve(&li.graph, li.red_mask(), li.k as i64, &acc);
    let certificate = found.map(Certificate::new);
    if let Some(cert) = &certificate {
        if let Err(violation) = check_labeled_solution(li, cert) {
            panic!("labeled solver produced an invalid certificate {cert}: {violation}");
        }
    }
    LabeledOutcome {
        certificate,
        stats: search.stats,
    }
}
