//! Snake graphs, band graphs and their perfect matchings.
//!
//! Tiles are unit squares placed on the integer grid. The first tile sits at the
//! origin and each step of the shape moves right or up. Edges are numbered tile by
//! tile in the order S, E, N, W; an edge shared by two tiles keeps its lower index.
//!
//! The minimal matching of a snake graph is the boundary matching containing the
//! south edge of the first tile. Heights are measured against it.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::laurent::{ExpVec, Poly, Var, VarTable};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("a snake graph needs at least one tile")]
    Empty,
    #[error("shape has length {found}, expected {expected}")]
    ShapeLength { expected: usize, found: usize },
    #[error("bad shape character `{0}`")]
    ShapeChar(char),
    #[error("tile {tile} edge {side:?} is labeled `{found}` but the shared edge is labeled `{expected}`")]
    LabelMismatch { tile: usize, side: Side, expected: String, found: String },
    #[error("glue must join the S or W edge of the first tile to the N or E edge of the last tile")]
    GlueSide,
    #[error("glued edges carry different labels `{0}` and `{1}`")]
    GlueLabel(String, String),
    #[error("label `{0}` is missing from the variable table")]
    UnknownLabel(String),
    #[error("edge set is not a perfect matching of the graph")]
    NotAMatching,
    #[error("{0}")]
    Unsupported(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Side {
    S,
    E,
    N,
    W,
}

impl Side {
    pub const ALL: [Side; 4] = [Side::S, Side::E, Side::N, Side::W];

    pub fn index(self) -> usize {
        self as usize
    }

    /// Image under reflection in the diagonal through the tile's SW corner.
    pub fn reflect(self) -> Side {
        match self {
            Side::S => Side::W,
            Side::W => Side::S,
            Side::E => Side::N,
            Side::N => Side::E,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Step {
    Right,
    Up,
}

impl Step {
    pub fn flip(self) -> Step {
        match self {
            Step::Right => Step::Up,
            Step::Up => Step::Right,
        }
    }
}

pub fn parse_shape(s: &str) -> Result<Vec<Step>, GraphError> {
    s.chars()
        .map(|c| match c {
            'R' => Ok(Step::Right),
            'U' => Ok(Step::Up),
            c => Err(GraphError::ShapeChar(c)),
        })
        .collect()
}

pub fn shape_string(shape: &[Step]) -> String {
    shape.iter().map(|s| if *s == Step::Right { 'R' } else { 'U' }).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Tile {
    pub label: String,
    /// Edge labels indexed by [`Side::index`].
    pub edges: [String; 4],
}

impl Tile {
    pub fn new(label: &str, s: &str, e: &str, n: &str, w: &str) -> Self {
        Tile { label: label.into(), edges: [s.into(), e.into(), n.into(), w.into()] }
    }

    pub fn edge(&self, side: Side) -> &str {
        &self.edges[side.index()]
    }

    fn reflected(&self) -> Tile {
        let mut edges = self.edges.clone();
        for s in Side::ALL {
            edges[s.reflect().index()] = self.edges[s.index()].clone();
        }
        Tile { label: self.label.clone(), edges }
    }
}

type Point = (i32, i32);

#[derive(Debug, Clone)]
struct EdgeInfo {
    label: String,
    ends: (usize, usize),
    vertical: bool,
    boundary: bool,
    row: i32,
    x: i32,
}

#[derive(Debug, Clone)]
struct Layout {
    coords: Vec<Point>,
    edges: Vec<EdgeInfo>,
    tile_edges: Vec<[usize; 4]>,
    nverts: usize,
    adjacency: Vec<Vec<usize>>,
}

/// Fixed-width bitset over edge indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub(crate) struct EdgeSet(Vec<u64>);

impl EdgeSet {
    fn new(n: usize) -> Self {
        EdgeSet(vec![0; n.div_ceil(64).max(1)])
    }
    fn insert(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }
    fn remove(&mut self, i: usize) {
        self.0[i / 64] &= !(1 << (i % 64));
    }
    fn contains(&self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }
    fn odd_overlap(&self, other: &EdgeSet, mask: &EdgeSet) -> bool {
        let mut c = 0;
        for ((a, b), m) in self.0.iter().zip(&other.0).zip(&mask.0) {
            c += ((a ^ b) & m).count_ones();
        }
        c % 2 == 1
    }
    fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(w, &bits)| (0..64).filter(move |b| bits >> b & 1 == 1).map(move |b| w * 64 + b))
    }
}

/// A perfect matching, stored as a sorted list of edge indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Matching {
    pub edges: Vec<usize>,
}

#[derive(Debug, Clone)]
pub struct SnakeGraph {
    tiles: Vec<Tile>,
    shape: Vec<Step>,
    layout: Layout,
}

impl PartialEq for SnakeGraph {
    fn eq(&self, o: &Self) -> bool {
        self.tiles == o.tiles && self.shape == o.shape
    }
}

impl Eq for SnakeGraph {}

impl SnakeGraph {
    pub fn new(tiles: Vec<Tile>, shape: Vec<Step>) -> Result<Self, GraphError> {
        if tiles.is_empty() {
            return Err(GraphError::Empty);
        }
        if shape.len() + 1 != tiles.len() {
            return Err(GraphError::ShapeLength { expected: tiles.len() - 1, found: shape.len() });
        }
        let layout = build_layout(&tiles, &shape)?;
        Ok(SnakeGraph { tiles, shape, layout })
    }

    pub fn from_shape_str(tiles: Vec<Tile>, shape: &str) -> Result<Self, GraphError> {
        Self::new(tiles, parse_shape(shape)?)
    }

    pub fn tiles(&self) -> &[Tile] {
        &self.tiles
    }

    pub fn shape(&self) -> &[Step] {
        &self.shape
    }

    pub fn len(&self) -> usize {
        self.tiles.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn tile_labels(&self) -> Vec<&str> {
        self.tiles.iter().map(|t| t.label.as_str()).collect()
    }

    pub fn edge_count(&self) -> usize {
        self.layout.edges.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.layout.nverts
    }

    pub fn edge_label(&self, e: usize) -> &str {
        &self.layout.edges[e].label
    }

    pub fn is_boundary(&self, e: usize) -> bool {
        self.layout.edges[e].boundary
    }

    /// Vertex indices of edge `e`.
    pub fn edge_ends(&self, e: usize) -> (usize, usize) {
        self.layout.edges[e].ends
    }

    pub fn tile_edge(&self, tile: usize, side: Side) -> usize {
        self.layout.tile_edges[tile][side.index()]
    }

    pub fn tile_origin(&self, tile: usize) -> (i32, i32) {
        self.layout.coords[tile]
    }

    /// Reflection in the diagonal through the first tile's SW corner.
    pub fn reflect(&self) -> SnakeGraph {
        let tiles = self.tiles.iter().map(Tile::reflected).collect();
        let shape = self.shape.iter().map(|s| s.flip()).collect();
        SnakeGraph::new(tiles, shape).expect("reflection preserves validity")
    }

    /// The subgraph on tiles `start..end`, reoriented so that its first tile is positive.
    pub fn slice(&self, start: usize, end: usize) -> Result<SnakeGraph, GraphError> {
        if start >= end || end > self.len() {
            return Err(GraphError::Unsupported(format!("bad tile range {start}..{end}")));
        }
        let g = SnakeGraph::new(self.tiles[start..end].to_vec(), self.shape[start..end - 1].to_vec())?;
        Ok(if start % 2 == 1 { g.reflect() } else { g })
    }

    fn matchings_where(&self, allowed: &dyn Fn(usize) -> bool, f: &mut dyn FnMut(&EdgeSet)) {
        let l = &self.layout;
        let mut covered = vec![false; l.nverts];
        let mut chosen = EdgeSet::new(l.edges.len());
        fn rec(
            l: &Layout,
            allowed: &dyn Fn(usize) -> bool,
            covered: &mut [bool],
            chosen: &mut EdgeSet,
            from: usize,
            f: &mut dyn FnMut(&EdgeSet),
        ) {
            let v = match (from..covered.len()).find(|&v| !covered[v]) {
                Some(v) => v,
                None => return f(chosen),
            };
            for &e in &l.adjacency[v] {
                if !allowed(e) {
                    continue;
                }
                let (a, b) = l.edges[e].ends;
                let w = if a == v { b } else { a };
                if covered[w] {
                    continue;
                }
                covered[v] = true;
                covered[w] = true;
                chosen.insert(e);
                rec(l, allowed, covered, chosen, v + 1, f);
                chosen.remove(e);
                covered[w] = false;
                covered[v] = false;
            }
        }
        rec(l, allowed, &mut covered, &mut chosen, 0, f);
    }

    pub(crate) fn for_each_matching(&self, f: &mut dyn FnMut(&EdgeSet)) {
        self.matchings_where(&|_| true, f)
    }

    /// All perfect matchings, sorted lexicographically by edge index lists.
    pub fn enumerate_matchings(&self) -> Vec<Matching> {
        let mut out = Vec::new();
        self.for_each_matching(&mut |s| out.push(Matching { edges: s.iter().collect() }));
        out.sort();
        out
    }

    pub fn matching_count(&self) -> usize {
        let mut n = 0;
        self.for_each_matching(&mut |_| n += 1);
        n
    }

    pub(crate) fn minimal_set(&self) -> EdgeSet {
        let south = self.tile_edge(0, Side::S);
        let mut found = None;
        self.matchings_where(&|e| self.layout.edges[e].boundary, &mut |s| {
            if s.contains(south) {
                found = Some(s.clone());
            }
        });
        found.expect("the boundary cycle has a matching through every boundary edge")
    }

    pub fn minimal_matching(&self) -> Matching {
        Matching { edges: self.minimal_set().iter().collect() }
    }

    fn to_set(&self, m: &Matching) -> Result<EdgeSet, GraphError> {
        let mut s = EdgeSet::new(self.edge_count());
        let mut seen = vec![false; self.layout.nverts];
        for &e in &m.edges {
            if e >= self.edge_count() || s.contains(e) {
                return Err(GraphError::NotAMatching);
            }
            s.insert(e);
            let (a, b) = self.layout.edges[e].ends;
            if seen[a] || seen[b] {
                return Err(GraphError::NotAMatching);
            }
            seen[a] = true;
            seen[b] = true;
        }
        if seen.iter().all(|&c| c) {
            Ok(s)
        } else {
            Err(GraphError::NotAMatching)
        }
    }

    /// Tiles enclosed by the symmetric difference of two matchings.
    fn enclosed(&self, m: &EdgeSet, base: &EdgeSet, masks: &[EdgeSet]) -> Vec<usize> {
        (0..self.len()).filter(|&t| m.odd_overlap(base, &masks[t])).collect()
    }

    /// For every tile, the vertical edges in its row lying strictly to its left.
    fn left_masks(&self) -> Vec<EdgeSet> {
        let l = &self.layout;
        l.coords
            .iter()
            .map(|&(x, y)| {
                let mut m = EdgeSet::new(l.edges.len());
                for (i, e) in l.edges.iter().enumerate() {
                    if e.vertical && e.row == y && e.x <= x {
                        m.insert(i);
                    }
                }
                m
            })
            .collect()
    }

    /// Labels of the tiles enclosed by `m ⊖ minimal_matching`, with multiplicity.
    pub fn height_labels(&self, m: &Matching) -> Result<Vec<&str>, GraphError> {
        let s = self.to_set(m)?;
        let masks = self.left_masks();
        let base = self.minimal_set();
        Ok(self.enclosed(&s, &base, &masks).into_iter().map(|t| self.tiles[t].label.as_str()).collect())
    }

    pub fn height_monomial(&self, table: &Arc<VarTable>, m: &Matching) -> Result<Poly, GraphError> {
        let mut e = ExpVec::zero(table);
        for l in self.height_labels(m)? {
            e.bump(Var::Y(y_index(table, l)?), 1);
        }
        Ok(Poly::monomial(table, e, BigInt::one()))
    }

    pub fn weight_monomial(&self, table: &Arc<VarTable>, m: &Matching) -> Result<Poly, GraphError> {
        self.to_set(m)?;
        let mut e = ExpVec::zero(table);
        for &i in &m.edges {
            e.bump(Var::X(x_index(table, self.edge_label(i))?), 1);
        }
        Ok(Poly::monomial(table, e, BigInt::one()))
    }

    /// Sum over `matchings` of weight times height, divided by the crossing
    /// monomial and by `x_extra` when given.
    fn expand_filtered(
        &self,
        table: &Arc<VarTable>,
        keep: &dyn Fn(&EdgeSet) -> bool,
        extra: Option<&str>,
    ) -> Result<Poly, GraphError> {
        let edge_x: Vec<usize> =
            self.layout.edges.iter().map(|e| x_index(table, &e.label)).collect::<Result<_, _>>()?;
        let tile_y: Vec<usize> = self.tiles.iter().map(|t| y_index(table, &t.label)).collect::<Result<_, _>>()?;
        let mut shift = ExpVec::zero(table);
        for t in &self.tiles {
            shift.bump(Var::X(x_index(table, &t.label)?), -1);
        }
        if let Some(l) = extra {
            shift.bump(Var::X(x_index(table, l)?), -1);
        }
        let masks = self.left_masks();
        let base = self.minimal_set();
        let mut acc: HashMap<ExpVec, BigInt> = HashMap::new();
        self.for_each_matching(&mut |s| {
            if !keep(s) {
                return;
            }
            let mut e = shift.clone();
            for i in s.iter() {
                e.bump(Var::X(edge_x[i]), 1);
            }
            for t in 0..self.len() {
                if s.odd_overlap(&base, &masks[t]) {
                    e.bump(Var::Y(tile_y[t]), 1);
                }
            }
            *acc.entry(e).or_insert_with(|| BigInt::from(0)) += 1;
        });
        Ok(Poly::from_terms(table, acc))
    }

    pub fn expansion(&self, table: &Arc<VarTable>) -> Result<Poly, GraphError> {
        self.expand_filtered(table, &|_| true, None)
    }

    /// Glues `other` after `self` across the boundary edge labeled `at`.
    ///
    /// `other` is reflected when its position in the result has negative orientation.
    pub fn concat(&self, other: &SnakeGraph, at: &str) -> Result<SnakeGraph, GraphError> {
        let last = self.tiles.last().expect("nonempty");
        let other = if self.len() % 2 == 1 { other.reflect() } else { other.clone() };
        let first = &other.tiles[0];
        let step = if last.edge(Side::N) == at && first.edge(Side::S) == at {
            Step::Up
        } else if last.edge(Side::E) == at && first.edge(Side::W) == at {
            Step::Right
        } else {
            return Err(GraphError::Unsupported(format!("no grafting edge `{at}` between the end tiles")));
        };
        let mut tiles = self.tiles.clone();
        tiles.extend(other.tiles.iter().cloned());
        let mut shape = self.shape.clone();
        shape.push(step);
        shape.extend(other.shape.iter().copied());
        SnakeGraph::new(tiles, shape)
    }

    /// All band graphs obtained by gluing a first-tile edge labeled `at` to a
    /// last-tile edge labeled `at`.
    pub fn closures(&self, at: &str) -> Vec<BandGraph> {
        let first = &self.tiles[0];
        let last = self.tiles.last().expect("nonempty");
        let mut out = Vec::new();
        for f in [Side::W, Side::S] {
            for l in [Side::E, Side::N] {
                if first.edge(f) == at && last.edge(l) == at {
                    if let Ok(b) = BandGraph::new(self.clone(), f, l) {
                        out.push(b);
                    }
                }
            }
        }
        out
    }
}

fn x_index(table: &VarTable, l: &str) -> Result<usize, GraphError> {
    table.x(l).ok_or_else(|| GraphError::UnknownLabel(l.to_string()))
}

fn y_index(table: &VarTable, l: &str) -> Result<usize, GraphError> {
    table.y(l).ok_or_else(|| GraphError::UnknownLabel(l.to_string()))
}

fn build_layout(tiles: &[Tile], shape: &[Step]) -> Result<Layout, GraphError> {
    let mut coords = vec![(0, 0)];
    for s in shape {
        let (x, y) = *coords.last().expect("nonempty");
        coords.push(match s {
            Step::Right => (x + 1, y),
            Step::Up => (x, y + 1),
        });
    }
    let mut verts: Vec<Point> =
        coords.iter().flat_map(|&(x, y)| [(x, y), (x + 1, y), (x + 1, y + 1), (x, y + 1)]).collect();
    verts.sort();
    verts.dedup();
    let vid: HashMap<Point, usize> = verts.iter().enumerate().map(|(i, &p)| (p, i)).collect();
    let mut seg_index: HashMap<(Point, Point), usize> = HashMap::new();
    let mut edges: Vec<EdgeInfo> = Vec::new();
    let mut tile_edges = Vec::with_capacity(tiles.len());
    for (t, (&(x, y), tile)) in coords.iter().zip(tiles).enumerate() {
        let segs =
            [((x, y), (x + 1, y)), ((x + 1, y), (x + 1, y + 1)), ((x, y + 1), (x + 1, y + 1)), ((x, y), (x, y + 1))];
        let mut ids = [0; 4];
        for side in Side::ALL {
            let seg = segs[side.index()];
            let label = tile.edge(side);
            let id = match seg_index.get(&seg) {
                Some(&id) => {
                    if edges[id].label != label {
                        return Err(GraphError::LabelMismatch {
                            tile: t,
                            side,
                            expected: edges[id].label.clone(),
                            found: label.to_string(),
                        });
                    }
                    edges[id].boundary = false;
                    id
                }
                None => {
                    let id = edges.len();
                    let vertical = matches!(side, Side::E | Side::W);
                    edges.push(EdgeInfo {
                        label: label.to_string(),
                        ends: (vid[&seg.0], vid[&seg.1]),
                        vertical,
                        boundary: true,
                        row: seg.0 .1,
                        x: seg.0 .0,
                    });
                    seg_index.insert(seg, id);
                    id
                }
            };
            ids[side.index()] = id;
        }
        tile_edges.push(ids);
    }
    let mut adjacency = vec![Vec::new(); verts.len()];
    for (i, e) in edges.iter().enumerate() {
        adjacency[e.ends.0].push(i);
        adjacency[e.ends.1].push(i);
    }
    Ok(Layout { coords, edges, tile_edges, nverts: verts.len(), adjacency })
}

/// A snake graph whose first and last tiles are glued along an edge.
///
/// Its good matchings are the perfect matchings of the underlying snake graph that
/// contain at least one of the two glued edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BandGraph {
    base: SnakeGraph,
    first: Side,
    last: Side,
}

impl BandGraph {
    pub fn new(base: SnakeGraph, first: Side, last: Side) -> Result<Self, GraphError> {
        if !matches!(first, Side::S | Side::W) || !matches!(last, Side::N | Side::E) {
            return Err(GraphError::GlueSide);
        }
        let a = base.tiles[0].edge(first);
        let b = base.tiles.last().expect("nonempty").edge(last);
        if a != b {
            return Err(GraphError::GlueLabel(a.to_string(), b.to_string()));
        }
        Ok(BandGraph { base, first, last })
    }

    pub fn base(&self) -> &SnakeGraph {
        &self.base
    }

    pub fn glue(&self) -> (Side, Side) {
        (self.first, self.last)
    }

    pub fn glue_label(&self) -> &str {
        self.base.tiles[0].edge(self.first)
    }

    /// Indices of the two glued edges in the underlying snake graph.
    pub fn glued_edges(&self) -> (usize, usize) {
        (self.base.tile_edge(0, self.first), self.base.tile_edge(self.base.len() - 1, self.last))
    }

    pub fn len(&self) -> usize {
        self.base.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn enumerate_good_matchings(&self) -> Vec<Matching> {
        let (e1, e2) = self.glued_edges();
        let mut out = Vec::new();
        self.base.for_each_matching(&mut |s| {
            if s.contains(e1) || s.contains(e2) {
                out.push(Matching { edges: s.iter().collect() });
            }
        });
        out.sort();
        out
    }

    pub fn minimal_matching(&self) -> Matching {
        self.base.minimal_matching()
    }

    pub fn expansion(&self, table: &Arc<VarTable>) -> Result<Poly, GraphError> {
        let (e1, e2) = self.glued_edges();
        self.base.expand_filtered(table, &|s| s.contains(e1) || s.contains(e2), Some(self.glue_label()))
    }

    /// Product of the tiles' y-variables.
    pub fn tile_monomial(&self, table: &Arc<VarTable>) -> Result<Poly, GraphError> {
        let mut e = ExpVec::zero(table);
        for t in &self.base.tiles {
            e.bump(Var::Y(y_index(table, &t.label)?), 1);
        }
        Ok(Poly::monomial(table, e, BigInt::one()))
    }
}

/// Any graph that carries an expansion.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "GraphJson", into = "GraphJson")]
pub enum Graph {
    /// A single edge, standing for the variable of its label.
    Edge(String),
    Snake(SnakeGraph),
    Band(BandGraph),
}

impl Graph {
    pub fn validate(&self) -> Result<(), GraphError> {
        match self {
            Graph::Edge(_) => Ok(()),
            Graph::Snake(g) => SnakeGraph::new(g.tiles.clone(), g.shape.clone()).map(|_| ()),
            Graph::Band(b) => {
                let base = SnakeGraph::new(b.base.tiles.clone(), b.base.shape.clone())?;
                BandGraph::new(base, b.first, b.last).map(|_| ())
            }
        }
    }

    pub fn expansion(&self, table: &Arc<VarTable>) -> Result<Poly, GraphError> {
        match self {
            Graph::Edge(l) => Ok(Poly::var(table, Var::X(x_index(table, l)?))),
            Graph::Snake(g) => g.expansion(table),
            Graph::Band(b) => b.expansion(table),
        }
    }

    /// Perfect matchings, or good matchings for band graphs.
    pub fn matchings(&self) -> Vec<Matching> {
        match self {
            Graph::Edge(_) => vec![Matching { edges: vec![0] }],
            Graph::Snake(g) => g.enumerate_matchings(),
            Graph::Band(b) => b.enumerate_good_matchings(),
        }
    }

    /// Every label carried by a tile or an edge.
    pub fn labels(&self) -> Vec<String> {
        let tiles = match self {
            Graph::Edge(l) => return vec![l.clone()],
            Graph::Snake(g) => &g.tiles,
            Graph::Band(b) => &b.base.tiles,
        };
        let mut out: Vec<String> =
            tiles.iter().flat_map(|t| std::iter::once(&t.label).chain(t.edges.iter())).cloned().collect();
        out.sort();
        out.dedup();
        out
    }

    pub fn tile_labels(&self) -> Vec<String> {
        match self {
            Graph::Edge(_) => vec![],
            Graph::Snake(g) => g.tiles.iter().map(|t| t.label.clone()).collect(),
            Graph::Band(b) => b.base.tiles.iter().map(|t| t.label.clone()).collect(),
        }
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Graph::Edge(l) => write!(f, "edge {l}"),
            Graph::Snake(g) => write!(f, "snake [{}] {}", g.tile_labels().join(","), shape_string(&g.shape)),
            Graph::Band(b) => {
                write!(
                    f,
                    "band [{}] {} glued at {}",
                    b.base.tile_labels().join(","),
                    shape_string(&b.base.shape),
                    b.glue_label()
                )
            }
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
enum GraphJson {
    Edge { label: String },
    Snake { tiles: Vec<TileJson>, shape: String },
    Band { tiles: Vec<TileJson>, shape: String, glue: GlueJson },
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct TileJson {
    label: String,
    edges: EdgesJson,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[allow(non_snake_case)]
struct EdgesJson {
    S: String,
    E: String,
    N: String,
    W: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct GlueJson {
    first: Side,
    last: Side,
}

fn tiles_from_json(tiles: Vec<TileJson>) -> Vec<Tile> {
    tiles.into_iter().map(|t| Tile { label: t.label, edges: [t.edges.S, t.edges.E, t.edges.N, t.edges.W] }).collect()
}

fn tiles_to_json(tiles: &[Tile]) -> Vec<TileJson> {
    tiles
        .iter()
        .map(|t| TileJson {
            label: t.label.clone(),
            edges: EdgesJson {
                S: t.edges[0].clone(),
                E: t.edges[1].clone(),
                N: t.edges[2].clone(),
                W: t.edges[3].clone(),
            },
        })
        .collect()
}

impl TryFrom<GraphJson> for Graph {
    type Error = GraphError;
    fn try_from(j: GraphJson) -> Result<Self, GraphError> {
        Ok(match j {
            GraphJson::Edge { label } => Graph::Edge(label),
            GraphJson::Snake { tiles, shape } => {
                Graph::Snake(SnakeGraph::from_shape_str(tiles_from_json(tiles), &shape)?)
            }
            GraphJson::Band { tiles, shape, glue } => {
                let base = SnakeGraph::from_shape_str(tiles_from_json(tiles), &shape)?;
                Graph::Band(BandGraph::new(base, glue.first, glue.last)?)
            }
        })
    }
}

impl From<Graph> for GraphJson {
    fn from(g: Graph) -> Self {
        match g {
            Graph::Edge(label) => GraphJson::Edge { label },
            Graph::Snake(s) => GraphJson::Snake { tiles: tiles_to_json(&s.tiles), shape: shape_string(&s.shape) },
            Graph::Band(b) => GraphJson::Band {
                tiles: tiles_to_json(&b.base.tiles),
                shape: shape_string(&b.base.shape),
                glue: GlueJson { first: b.first, last: b.last },
            },
        }
    }
}
