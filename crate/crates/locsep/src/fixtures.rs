use crate::error::{Error, Result};
use crate::graph::Graph;

/// Built-in test graphs, addressable as `fixture:NAME` (case-insensitive,
/// `-` and `_` interchangeable).
pub const FIXTURE_NAMES: &[&str] =
    &["p3", "bowtie", "c4", "c6", "k4", "k23", "q3", "ring6", "triangle_ring"];

pub fn fixture(name: &str) -> Result<Graph> {
    let key = name.trim().to_ascii_lowercase().replace('-', "_");
    match key.as_str() {
        "p3" => Graph::from_named_edges(&[("a", "b"), ("b", "c")]),
        "bowtie" => Graph::from_named_edges(&[
            ("v", "a1"),
            ("v", "a2"),
            ("a1", "a2"),
            ("v", "b1"),
            ("v", "b2"),
            ("b1", "b2"),
        ]),
        "c4" => cycle_graph(4),
        "c6" => cycle_graph(6),
        "k4" => {
            let vs = ["u", "v", "w", "x"];
            let mut pairs = Vec::new();
            for i in 0..4 {
                for j in i + 1..4 {
                    pairs.push((vs[i], vs[j]));
                }
            }
            Graph::from_named_edges(&pairs)
        }
        "k23" => Graph::from_named_edges(&[
            ("u", "x"),
            ("u", "y"),
            ("u", "z"),
            ("w", "x"),
            ("w", "y"),
            ("w", "z"),
        ]),
        "q3" => {
            let mut pairs = Vec::new();
            for v in 0u8..8 {
                for bit in 0..3 {
                    let w = v ^ (1 << bit);
                    if v < w {
                        pairs.push((format!("{v:03b}"), format!("{w:03b}")));
                    }
                }
            }
            Graph::from_named_edges(&pairs)
        }
        // Six copies of K4 glued in a ring: copy i lives on
        // {a_i, a_{i+1 mod 6}, c_i, d_i}; consecutive copies share one vertex.
        "ring6" => {
            let mut pairs = Vec::new();
            for i in 0..6 {
                let vs =
                    [format!("a{i}"), format!("a{}", (i + 1) % 6), format!("c{i}"), format!("d{i}")];
                for p in 0..4 {
                    for q in p + 1..4 {
                        pairs.push((vs[p].clone(), vs[q].clone()));
                    }
                }
            }
            Graph::from_named_edges(&pairs)
        }
        // Six triangles glued in a ring at the a-vertices.
        "triangle_ring" => {
            let mut pairs = Vec::new();
            for i in 0..6 {
                let a = format!("a{i}");
                let b = format!("a{}", (i + 1) % 6);
                let c = format!("c{i}");
                pairs.push((a.clone(), b.clone()));
                pairs.push((a, c.clone()));
                pairs.push((b, c));
            }
            Graph::from_named_edges(&pairs)
        }
        _ => Err(Error::UnknownFixture(name.to_string())),
    }
}

fn cycle_graph(n: usize) -> Result<Graph> {
    let pairs: Vec<(String, String)> =
        (0..n).map(|i| (i.to_string(), ((i + 1) % n).to_string())).collect();
    Graph::from_named_edges(&pairs)
}

/// Resolves `fixture:NAME` to a fixture, anything else to a file path.
pub fn load_graph_arg(arg: &str) -> Result<Graph> {
    if let Some(name) = arg.strip_prefix("fixture:") {
        fixture(name)
    } else {
        let text = std::fs::read_to_string(arg)?;
        Graph::parse(&text)
    }
}
