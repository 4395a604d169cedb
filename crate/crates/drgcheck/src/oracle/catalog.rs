//! Built-in graphs whose intersection arrays are known, used to exercise
//! the oracle and to pin expected outputs in tests.

use super::Graph;
use crate::array::IntersectionArray;

pub struct CatalogEntry {
    pub name: &'static str,
    pub array: IntersectionArray,
    build: fn() -> Graph,
}

impl CatalogEntry {
    pub fn graph(&self) -> Graph {
        (self.build)()
    }
}

/// Complete graph on n vertices.
pub fn complete(n: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

/// Cycle on n vertices.
pub fn cycle(n: usize) -> Graph {
    let edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::from_edges(n, &edges).unwrap()
}

/// Complete bipartite graph with m vertices on each side.
pub fn complete_bipartite(m: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..m {
        for v in m..2 * m {
            edges.push((u, v));
        }
    }
    Graph::from_edges(2 * m, &edges).unwrap()
}

/// Petersen graph: 2-subsets of a 5-set, adjacent when disjoint.
pub fn petersen() -> Graph {
    let subsets = two_subsets(5);
    let n = subsets.len();
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if intersection_size(subsets[u], subsets[v]) == 0 {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

/// 3-dimensional hypercube.
pub fn cube() -> Graph {
    let mut edges = Vec::new();
    for u in 0..8usize {
        for v in u + 1..8 {
            if (u ^ v).count_ones() == 1 {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(8, &edges).unwrap()
}

/// Rook's graph on a 3x3 board: cells adjacent when they share a row or
/// a column.
pub fn rook_3x3() -> Graph {
    let mut edges = Vec::new();
    for u in 0..9usize {
        for v in u + 1..9 {
            let (r1, c1) = (u / 3, u % 3);
            let (r2, c2) = (v / 3, v % 3);
            if (r1 == r2) != (c1 == c2) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(9, &edges).unwrap()
}

/// Johnson graph J(5,2): 2-subsets of a 5-set, adjacent when they share
/// exactly one element.
pub fn johnson_5_2() -> Graph {
    let subsets = two_subsets(5);
    let n = subsets.len();
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if intersection_size(subsets[u], subsets[v]) == 1 {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

/// Icosahedron: two apexes, an upper and a lower pentagonal ring.
pub fn icosahedron() -> Graph {
    let top = 0usize;
    let upper = |i: usize| 1 + i % 5;
    let lower = |i: usize| 6 + i % 5;
    let bottom = 11usize;
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((top, upper(i)));
        edges.push((bottom, lower(i)));
        edges.push((upper(i), upper(i + 1)));
        edges.push((lower(i), lower(i + 1)));
        edges.push((upper(i), lower(i)));
        edges.push((upper(i), lower(i + 4)));
    }
    Graph::from_edges(12, &edges).unwrap()
}

/// Heawood graph: 14-cycle plus the chords i to i+5 for even i.
pub fn heawood() -> Graph {
    let mut edges: Vec<(usize, usize)> = (0..14).map(|i| (i, (i + 1) % 14)).collect();
    for i in (0..14).step_by(2) {
        edges.push((i, (i + 5) % 14));
    }
    Graph::from_edges(14, &edges).unwrap()
}

fn two_subsets(n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            out.push((a, b));
        }
    }
    out
}

fn intersection_size(s: (usize, usize), t: (usize, usize)) -> usize {
    [s.0, s.1]
        .iter()
        .filter(|&&x| x == t.0 || x == t.1)
        .count()
}

fn array(b: &[u32], c: &[u32]) -> IntersectionArray {
    IntersectionArray::new(b.to_vec(), c.to_vec()).unwrap()
}

fn cycle_array(n: usize) -> IntersectionArray {
    let d = n / 2;
    let mut b = vec![1u32; d];
    b[0] = 2;
    let mut c = vec![1u32; d];
    if n % 2 == 0 {
        c[d - 1] = 2;
    }
    IntersectionArray::new(b, c).unwrap()
}

/// Every built-in graph together with its intersection array.
pub fn entries() -> Vec<CatalogEntry> {
    let mut out = Vec::new();
    for n in 2..=7usize {
        let name: &'static str = match n {
            2 => "k2",
            3 => "k3",
            4 => "k4",
            5 => "k5",
            6 => "k6",
            _ => "k7",
        };
        let build: fn() -> Graph = match n {
            2 => || complete(2),
            3 => || complete(3),
            4 => || complete(4),
            5 => || complete(5),
            6 => || complete(6),
            _ => || complete(7),
        };
        out.push(CatalogEntry {
            name,
            array: array(&[n as u32 - 1], &[1]),
            build,
        });
    }
    for n in 4..=7usize {
        let name: &'static str = match n {
            4 => "c4",
            5 => "c5",
            6 => "c6",
            _ => "c7",
        };
        let build: fn() -> Graph = match n {
            4 => || cycle(4),
            5 => || cycle(5),
            6 => || cycle(6),
            _ => || cycle(7),
        };
        out.push(CatalogEntry {
            name,
            array: cycle_array(n),
            build,
        });
    }
    out.push(CatalogEntry {
        name: "k33",
        array: array(&[3, 2], &[1, 3]),
        build: || complete_bipartite(3),
    });
    out.push(CatalogEntry {
        name: "petersen",
        array: array(&[3, 2], &[1, 1]),
        build: petersen,
    });
    out.push(CatalogEntry {
        name: "cube",
        array: array(&[3, 2, 1], &[1, 2, 3]),
        build: cube,
    });
    out.push(CatalogEntry {
        name: "rook",
        array: array(&[4, 2], &[1, 2]),
        build: rook_3x3,
    });
    out.push(CatalogEntry {
        name: "johnson-5-2",
        array: array(&[6, 2], &[1, 4]),
        build: johnson_5_2,
    });
    out.push(CatalogEntry {
        name: "icosahedron",
        array: array(&[5, 2, 1], &[1, 2, 5]),
        build: icosahedron,
    });
    out.push(CatalogEntry {
        name: "heawood",
        array: array(&[3, 2, 2], &[1, 1, 3]),
        build: heawood,
    });
    out
}

pub fn by_name(name: &str) -> Option<CatalogEntry> {
    entries().into_iter().find(|e| e.name == name)
}

pub fn names() -> Vec<&'static str> {
    entries().iter().map(|e| e.name).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_has_enough_graphs() {
        assert!(entries().len() >= 10);
    }

    #[test]
    fn catalog_graphs_are_regular_with_matching_valency() {
        for entry in entries() {
            let g = entry.graph();
            assert_eq!(
                g.regular_degree(),
                Some(entry.array.b0() as usize),
                "{}",
                entry.name
            );
            assert!(g.is_connected(), "{}", entry.name);
        }
    }

    #[test]
    fn lookup_by_name() {
        assert!(by_name("petersen").is_some());
        assert!(by_name("heawood").is_some());
        assert!(by_name("nonesuch").is_none());
    }

    #[test]
    fn icosahedron_shape() {
        let g = icosahedron();
        assert_eq!(g.vertex_count(), 12);
        assert_eq!(g.edge_count(), 30);
        assert_eq!(g.regular_degree(), Some(5));
    }

    #[test]
    fn heawood_shape() {
        let g = heawood();
        assert_eq!(g.vertex_count(), 14);
        assert_eq!(g.edge_count(), 21);
        assert_eq!(g.regular_degree(), Some(3));
    }
}
