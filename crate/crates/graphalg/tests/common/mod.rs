//! Shared graph corpus for the integration suites: small named graphs
//! covering paths, cycles, stars, parallel edges, complete graphs, and a
//! couple of disconnected examples. Vertices are 0-based here.

use graphalg::Graph;

pub mod checks;

pub struct CorpusGraph {
    pub name: &'static str,
    pub graph: Graph,
    pub connected: bool,
}

fn entry(name: &'static str, n: usize, pairs: &[(usize, usize)], connected: bool) -> CorpusGraph {
    let graph = Graph::new(n, pairs.to_vec());
    assert_eq!(graph.is_connected(), connected, "{name}: connectivity flag");
    CorpusGraph {
        name,
        graph,
        connected,
    }
}

/// Every corpus graph, mixed connectivity, edge counts 1..=10.
pub fn corpus() -> Vec<CorpusGraph> {
    vec![
        entry("single_edge", 2, &[(0, 1)], true),
        entry("double_edge", 2, &[(0, 1), (0, 1)], true),
        entry("triple_edge", 2, &[(0, 1), (0, 1), (0, 1)], true),
        entry("path_3", 3, &[(0, 1), (1, 2)], true),
        entry("path_4", 4, &[(0, 1), (1, 2), (2, 3)], true),
        entry("path_5", 5, &[(0, 1), (1, 2), (2, 3), (3, 4)], true),
        entry("star_4", 4, &[(0, 1), (0, 2), (0, 3)], true),
        entry("star_5", 5, &[(0, 1), (0, 2), (0, 3), (0, 4)], true),
        entry("triangle", 3, &[(0, 1), (0, 2), (1, 2)], true),
        entry("cycle_4", 4, &[(0, 1), (1, 2), (2, 3), (0, 3)], true),
        entry("cycle_5", 5, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)], true),
        entry(
            "cycle_6",
            6,
            &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (0, 5)],
            true,
        ),
        entry(
            "doubled_path_3",
            3,
            &[(0, 1), (0, 1), (1, 2), (1, 2)],
            true,
        ),
        entry(
            "multi_mixed",
            3,
            &[(0, 1), (0, 1), (1, 2), (0, 2)],
            true,
        ),
        entry(
            "star_4_doubled_ray",
            4,
            &[(0, 1), (0, 1), (0, 2), (0, 3)],
            true,
        ),
        entry(
            "doubled_triangle",
            3,
            &[(0, 1), (0, 1), (0, 2), (0, 2), (1, 2), (1, 2)],
            true,
        ),
        entry(
            "theta",
            4,
            &[(0, 1), (0, 2), (2, 1), (0, 3), (3, 1)],
            true,
        ),
        entry(
            "k4_minus_edge",
            4,
            &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)],
            true,
        ),
        entry(
            "k4",
            4,
            &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)],
            true,
        ),
        entry(
            "bowtie",
            5,
            &[(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)],
            true,
        ),
        entry(
            "diamond_pendant",
            5,
            &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 4)],
            true,
        ),
        entry(
            "k23",
            5,
            &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)],
            true,
        ),
        entry(
            "wheel_5",
            5,
            &[
                (0, 1),
                (1, 2),
                (2, 3),
                (0, 3),
                (0, 4),
                (1, 4),
                (2, 4),
                (3, 4),
            ],
            true,
        ),
        entry(
            "random_8",
            5,
            &[
                (0, 1),
                (0, 2),
                (0, 4),
                (1, 3),
                (1, 4),
                (2, 3),
                (2, 4),
                (3, 4),
            ],
            true,
        ),
        entry(
            "random_9",
            6,
            &[
                (0, 1),
                (0, 3),
                (0, 5),
                (1, 2),
                (1, 4),
                (2, 3),
                (2, 5),
                (3, 4),
                (4, 5),
            ],
            true,
        ),
        entry(
            "k5_minus_edge",
            5,
            &[
                (0, 1),
                (0, 2),
                (0, 3),
                (0, 4),
                (1, 2),
                (1, 3),
                (1, 4),
                (2, 3),
                (2, 4),
            ],
            true,
        ),
        entry(
            "prism",
            6,
            &[
                (0, 1),
                (1, 2),
                (0, 2),
                (3, 4),
                (4, 5),
                (3, 5),
                (0, 3),
                (1, 4),
                (2, 5),
            ],
            true,
        ),
        entry(
            "k5",
            5,
            &[
                (0, 1),
                (0, 2),
                (0, 3),
                (0, 4),
                (1, 2),
                (1, 3),
                (1, 4),
                (2, 3),
                (2, 4),
                (3, 4),
            ],
            true,
        ),
        entry("two_disjoint_edges", 4, &[(0, 1), (2, 3)], false),
        entry(
            "triangle_plus_edge",
            5,
            &[(0, 1), (0, 2), (1, 2), (3, 4)],
            false,
        ),
    ]
}

/// Connected corpus graphs only (quotient modes require connectivity).
#[allow(dead_code)]
pub fn connected_corpus() -> Vec<CorpusGraph> {
    corpus().into_iter().filter(|c| c.connected).collect()
}

/// Corpus graphs with at most `max_edges` edges.
#[allow(dead_code)]
pub fn corpus_up_to(max_edges: usize) -> Vec<CorpusGraph> {
    corpus()
        .into_iter()
        .filter(|c| c.graph.edge_count() <= max_edges)
        .collect()
}
