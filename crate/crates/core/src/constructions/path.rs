//! Path algebras of quivers modulo relations, truncated by path length.
//!
//! Paths compose like functions: a path `p: i -> j` lives in `e_j A e_i`, and
//! the product `q p` is "first `p`, then `q`". Paths are stored as arrow lists
//! in traversal order.

use serde::{Deserialize, Serialize};

use crate::algebra::{Algebra, Element};
use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::subspace::Subspace;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Arrow {
    pub name: String,
    pub from: usize,
    pub to: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuiverSpec {
    pub vertices: Vec<String>,
    pub arrows: Vec<Arrow>,
}

impl QuiverSpec {
    pub fn new(vertices: &[&str], arrows: &[(&str, usize, usize)]) -> Self {
        QuiverSpec {
            vertices: vertices.iter().map(|v| v.to_string()).collect(),
            arrows: arrows.iter().map(|&(name, from, to)| Arrow { name: name.to_string(), from, to }).collect(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.vertices.len();
        for a in &self.arrows {
            if a.from >= n || a.to >= n {
                return Err(Error::InvalidInput(format!("arrow {} has an endpoint outside 0..{n}", a.name)));
            }
        }
        Ok(())
    }

    pub fn is_acyclic(&self) -> bool {
        // Kahn's algorithm
        let n = self.vertices.len();
        let mut indeg = vec![0usize; n];
        for a in &self.arrows {
            indeg[a.to] += 1;
        }
        let mut stack: Vec<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
        let mut seen = 0;
        while let Some(v) = stack.pop() {
            seen += 1;
            for a in self.arrows.iter().filter(|a| a.from == v) {
                indeg[a.to] -= 1;
                if indeg[a.to] == 0 {
                    stack.push(a.to);
                }
            }
        }
        seen == n
    }

    pub fn arrow_index(&self, name: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.name == name)
    }

    /// Arrow counts `(from, to)`.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let n = self.vertices.len();
        let mut m = vec![vec![0; n]; n];
        for a in &self.arrows {
            m[a.from][a.to] += 1;
        }
        m
    }
}

/// A linear combination of paths with common endpoints; each path is a list of
/// arrow indices in traversal order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relation {
    pub terms: Vec<(Scalar, Vec<usize>)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct Path {
    source: usize,
    target: usize,
    arrows: Vec<usize>,
}

/// A path algebra modulo relations together with its path bookkeeping.
#[derive(Debug, Clone)]
pub struct PathAlgebra {
    pub algebra: Algebra,
    pub quiver: QuiverSpec,
    /// Every path of length at most the cap, longest first.
    paths: Vec<Path>,
    ideal: Subspace,
    /// Path index of each basis element.
    survivors: Vec<usize>,
    max_len: usize,
}

impl PathAlgebra {
    /// Image in the algebra of the path with the given arrows (traversal
    /// order); an empty list means the idempotent at `vertex`.
    pub fn path_element(&self, vertex: usize, arrows: &[usize]) -> Option<Element> {
        let f = self.algebra.field();
        if arrows.len() > self.max_len {
            return Some(self.algebra.zero());
        }
        let idx = self.paths.iter().position(|p| p.arrows == arrows && (!arrows.is_empty() || p.source == vertex))?;
        Some(self.coordinates(&f.unit_vec(self.paths.len(), idx)))
    }

    pub fn vertex_idempotent(&self, v: usize) -> Element {
        self.path_element(v, &[]).unwrap()
    }

    pub fn arrow_element(&self, a: usize) -> Element {
        self.path_element(self.quiver.arrows[a].from, &[a]).unwrap()
    }

    /// Basis element index of each vertex idempotent.
    pub fn vertex_basis_index(&self, v: usize) -> usize {
        let idx = self.paths.iter().position(|p| p.arrows.is_empty() && p.source == v).unwrap();
        self.survivors.iter().position(|&s| s == idx).unwrap()
    }

    /// Arrows (traversal order) of the path underlying basis element `i`.
    pub fn basis_arrows(&self, i: usize) -> Vec<usize> {
        self.paths[self.survivors[i]].arrows.clone()
    }

    /// Length of the path underlying each basis element.
    pub fn basis_lengths(&self) -> Vec<usize> {
        self.survivors.iter().map(|&s| self.paths[s].arrows.len()).collect()
    }

    /// `(source, target)` of each basis path.
    pub fn basis_endpoints(&self) -> Vec<(usize, usize)> {
        self.survivors.iter().map(|&s| (self.paths[s].source, self.paths[s].target)).collect()
    }

    fn coordinates(&self, v: &[Scalar]) -> Element {
        let r = self.ideal.reduce(v.to_vec());
        self.survivors.iter().map(|&s| r[s].clone()).collect()
    }
}

fn enumerate_paths(q: &QuiverSpec, max_len: usize) -> Vec<Path> {
    let mut all: Vec<Path> = (0..q.vertices.len()).map(|v| Path { source: v, target: v, arrows: vec![] }).collect();
    let mut frontier: Vec<Path> =
        q.arrows.iter().enumerate().map(|(i, a)| Path { source: a.from, target: a.to, arrows: vec![i] }).collect();
    let mut len = 1;
    while !frontier.is_empty() && len <= max_len {
        all.extend(frontier.iter().cloned());
        let mut next = Vec::new();
        for p in &frontier {
            for (i, a) in q.arrows.iter().enumerate() {
                if a.from == p.target {
                    let mut arrows = p.arrows.clone();
                    arrows.push(i);
                    next.push(Path { source: p.source, target: a.to, arrows });
                }
            }
        }
        frontier = next;
        len += 1;
    }
    all
}

/// Product `x y` of two paths ("first y, then x"), if composable.
fn compose(x: &Path, y: &Path) -> Option<Path> {
    if y.target != x.source {
        return None;
    }
    let mut arrows = y.arrows.clone();
    arrows.extend(&x.arrows);
    Some(Path { source: y.source, target: x.target, arrows })
}

/// The path algebra `kQ / (relations + paths longer than max_len)`.
///
/// Without `max_len` the quiver must be acyclic and the cap is the length of
/// the longest path.
pub fn path_algebra(
    field: Field,
    q: &QuiverSpec,
    relations: &[Relation],
    max_len: Option<usize>,
) -> Result<PathAlgebra> {
    q.validate()?;
    let max_len = match max_len {
        Some(l) => l,
        None if q.is_acyclic() => q.vertices.len().saturating_sub(1),
        None => return Err(Error::InfiniteDimension),
    };
    let mut paths = enumerate_paths(q, max_len);
    // longest first, so the ideal's pivots fall on long paths and short ones survive
    paths.sort_by(|a, b| b.arrows.len().cmp(&a.arrows.len()));
    let n = paths.len();
    let position =
        |p: &Path| paths.iter().position(|x| x.arrows == p.arrows && (!p.arrows.is_empty() || x.source == p.source));

    let mut ideal = Subspace::zero(field, n);
    for rel in relations {
        let mut ends = None;
        let mut terms = Vec::new();
        for (c, arrows) in &rel.terms {
            if arrows.is_empty() {
                return Err(Error::InvalidInput("relations must be combinations of nontrivial paths".into()));
            }
            let mut path = Path { source: q.arrows[arrows[0]].from, target: q.arrows[arrows[0]].from, arrows: vec![] };
            for &a in arrows {
                let arrow = q.arrows.get(a).ok_or_else(|| Error::InvalidInput(format!("no arrow {a}")))?;
                if arrow.from != path.target {
                    return Err(Error::InvalidInput(format!("path {arrows:?} is not composable")));
                }
                path.target = arrow.to;
                path.arrows.push(a);
            }
            match ends {
                None => ends = Some((path.source, path.target)),
                Some(e) if e != (path.source, path.target) => {
                    return Err(Error::InvalidInput("relation is not uniform".into()))
                }
                _ => {}
            }
            terms.push((c.clone(), path));
        }
        // u rho w for all paths u, w
        for w in &paths {
            for u in &paths {
                let mut v = field.zero_vec(n);
                for (c, p) in &terms {
                    let Some(pw) = compose(p, w) else { continue };
                    let Some(upw) = compose(u, &pw) else { continue };
                    if let Some(k) = position(&upw) {
                        v[k] = field.add(&v[k], c);
                    }
                }
                ideal.insert(v);
            }
        }
    }

    let mut survivors: Vec<usize> = (0..n).filter(|k| !ideal.pivots().contains(k)).collect();
    survivors.sort_by_key(|&k| (paths[k].arrows.len(), paths[k].source, paths[k].arrows.clone()));

    let label = |p: &Path| {
        if p.arrows.is_empty() {
            format!("e{}", q.vertices[p.source])
        } else {
            p.arrows.iter().rev().map(|&a| q.arrows[a].name.as_str()).collect::<Vec<_>>().join("*")
        }
    };
    let labels = survivors.iter().map(|&k| label(&paths[k])).collect();
    let d = survivors.len();
    let mut unit = field.zero_vec(d);
    for (i, &k) in survivors.iter().enumerate() {
        if paths[k].arrows.is_empty() {
            unit[i] = field.one();
        }
    }
    let mut algebra = Algebra::zero_products(field, labels, unit)?;
    let coordinates = |k: usize| {
        let r = ideal.reduce(field.unit_vec(n, k));
        survivors.iter().map(|&s| r[s].clone()).collect::<Element>()
    };
    for i in 0..d {
        for j in 0..d {
            let x = &paths[survivors[i]];
            let y = &paths[survivors[j]];
            let v = match compose(x, y).and_then(|z| position(&z)) {
                Some(k) => coordinates(k),
                None => field.zero_vec(d),
            };
            algebra.set_product(i, j, v)?;
        }
    }
    let pa = PathAlgebra { algebra, quiver: q.clone(), paths, ideal, survivors, max_len };
    Ok(pa)
}
