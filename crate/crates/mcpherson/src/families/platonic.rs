//! Skeleta of the five platonic solids as frozen adjacency tables.
//!
//! The numberings are arbitrary but fixed for reproducibility:
//! - tetrahedron: `K_4`.
//! - octahedron: antipodal pairs `(1,2) (3,4) (5,6)`, all other pairs edges.
//! - cube: vertex `i + 1` is the 3-bit string of `i`; edges flip one bit.
//! - icosahedron, dodecahedron: literal edge tables below.

use crate::graph::SimpleGraph;

use std::fmt;
use std::str::FromStr;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PlatonicSolid {
    Tetrahedron,
    Octahedron,
    Cube,
    Icosahedron,
    Dodecahedron,
}

impl PlatonicSolid {
    pub const ALL: [PlatonicSolid; 5] = [
        PlatonicSolid::Tetrahedron,
        PlatonicSolid::Octahedron,
        PlatonicSolid::Cube,
        PlatonicSolid::Icosahedron,
        PlatonicSolid::Dodecahedron,
    ];

    pub fn name(self) -> &'static str {
        match self {
            PlatonicSolid::Tetrahedron => "tetrahedron",
            PlatonicSolid::Octahedron => "octahedron",
            PlatonicSolid::Cube => "cube",
            PlatonicSolid::Icosahedron => "icosahedron",
            PlatonicSolid::Dodecahedron => "dodecahedron",
        }
    }
}

impl fmt::Display for PlatonicSolid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for PlatonicSolid {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        PlatonicSolid::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| format!("unknown platonic solid `{s}`"))
    }
}

const CUBE_EDGES: [(u32, u32); 12] = [
    (1, 2),
    (1, 3),
    (1, 5),
    (2, 4),
    (2, 6),
    (3, 4),
    (3, 7),
    (4, 8),
    (5, 6),
    (5, 7),
    (6, 8),
    (7, 8),
];

const ICOSAHEDRON_EDGES: [(u32, u32); 30] = [
    (1, 2),
    (1, 3),
    (1, 4),
    (1, 5),
    (1, 6),
    (2, 3),
    (2, 6),
    (2, 7),
    (2, 8),
    (3, 4),
    (3, 8),
    (3, 9),
    (4, 5),
    (4, 9),
    (4, 10),
    (5, 6),
    (5, 10),
    (5, 11),
    (6, 7),
    (6, 11),
    (7, 8),
    (7, 11),
    (7, 12),
    (8, 9),
    (8, 12),
    (9, 10),
    (9, 12),
    (10, 11),
    (10, 12),
    (11, 12),
];

const DODECAHEDRON_EDGES: [(u32, u32); 30] = [
    (1, 3),
    (1, 4),
    (1, 5),
    (2, 6),
    (2, 7),
    (2, 8),
    (3, 9),
    (3, 10),
    (4, 11),
    (4, 13),
    (5, 12),
    (5, 14),
    (6, 15),
    (6, 16),
    (7, 17),
    (7, 19),
    (8, 18),
    (8, 20),
    (9, 11),
    (9, 18),
    (10, 12),
    (10, 17),
    (11, 20),
    (12, 19),
    (13, 14),
    (13, 15),
    (14, 16),
    (15, 20),
    (16, 19),
    (17, 18),
];

/// The skeleton graph of `solid` under the frozen numbering.
pub fn platonic_graph(solid: PlatonicSolid) -> SimpleGraph {
    match solid {
        PlatonicSolid::Tetrahedron => SimpleGraph::complete(4),
        PlatonicSolid::Octahedron => {
            let missing = [(1, 2), (3, 4), (5, 6)];
            let complete = SimpleGraph::complete(6);
            let edges = complete
                .edges()
                .map(|(u, v)| (u.index(), v.index()))
                .filter(|p| !missing.contains(p));
            SimpleGraph::build(6, edges).expect("valid octahedron")
        }
        PlatonicSolid::Cube => SimpleGraph::build(8, CUBE_EDGES).expect("valid cube"),
        PlatonicSolid::Icosahedron => {
            SimpleGraph::build(12, ICOSAHEDRON_EDGES).expect("valid icosahedron")
        }
        PlatonicSolid::Dodecahedron => {
            SimpleGraph::build(20, DODECAHEDRON_EDGES).expect("valid dodecahedron")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::VertexId;

    fn is_regular(g: &SimpleGraph, degree: u32) -> bool {
        g.degree_profile().iter().all(|(_, d)| d == degree)
    }

    fn is_connected(g: &SimpleGraph) -> bool {
        let n = g.vertex_count();
        let mut seen = vec![false; n as usize];
        let mut stack = vec![1u32];
        seen[0] = true;
        while let Some(u) = stack.pop() {
            for w in 1..=n {
                if !seen[(w - 1) as usize] && g.has_edge(VertexId::new(u), VertexId::new(w)) {
                    seen[(w - 1) as usize] = true;
                    stack.push(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    fn triangle_count(g: &SimpleGraph) -> usize {
        let n = g.vertex_count();
        let v = VertexId::new;
        let mut count = 0;
        for a in 1..=n {
            for b in a + 1..=n {
                for c in b + 1..=n {
                    if g.has_edge(v(a), v(b)) && g.has_edge(v(b), v(c)) && g.has_edge(v(a), v(c)) {
                        count += 1;
                    }
                }
            }
        }
        count
    }

    #[test]
    fn tetrahedron_is_k4() {
        assert_eq!(
            platonic_graph(PlatonicSolid::Tetrahedron),
            SimpleGraph::complete(4)
        );
    }

    #[test]
    fn octahedron_shape() {
        let g = platonic_graph(PlatonicSolid::Octahedron);
        assert_eq!((g.vertex_count(), g.edge_count()), (6, 12));
        assert!(is_regular(&g, 4));
        assert!(is_connected(&g));
    }

    #[test]
    fn cube_shape() {
        let g = platonic_graph(PlatonicSolid::Cube);
        assert_eq!((g.vertex_count(), g.edge_count()), (8, 12));
        assert!(is_regular(&g, 3));
        assert!(is_connected(&g));
        assert_eq!(triangle_count(&g), 0); // bipartite
    }

    #[test]
    fn icosahedron_shape() {
        let g = platonic_graph(PlatonicSolid::Icosahedron);
        assert_eq!((g.vertex_count(), g.edge_count()), (12, 30));
        assert!(is_regular(&g, 5));
        assert!(is_connected(&g));
        assert_eq!(triangle_count(&g), 20); // one per face
    }

    #[test]
    fn dodecahedron_shape() {
        let g = platonic_graph(PlatonicSolid::Dodecahedron);
        assert_eq!((g.vertex_count(), g.edge_count()), (20, 30));
        assert!(is_regular(&g, 3));
        assert!(is_connected(&g));
        assert_eq!(triangle_count(&g), 0); // girth five
    }

    #[test]
    fn names_round_trip() {
        for solid in PlatonicSolid::ALL {
            assert_eq!(solid.name().parse::<PlatonicSolid>().unwrap(), solid);
        }
        assert!("pyramid".parse::<PlatonicSolid>().is_err());
    }
}
