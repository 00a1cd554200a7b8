#![allow(dead_code)]

use cubic2ec::Graph;

/// Every 3-edge-connected cubic graph with n <= 14, one per isomorphism
/// class, generated independently of this crate.
pub const CORPUS: &str = include_str!("../data/cubic3ec_upto14.g6");

pub fn corpus() -> Vec<(String, Graph)> {
    CORPUS
        .lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| (l.to_string(), Graph::parse_graph6(l).expect("corpus line parses")))
        .collect()
}

pub fn corpus_up_to(max_n: usize) -> Vec<(String, Graph)> {
    corpus().into_iter().filter(|(_, g)| g.n() <= max_n).collect()
}
