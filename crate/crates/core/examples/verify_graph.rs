//! Run the counterexample battery on a graph file, or on K4 and C5 when no
//! file is given, and print the JSON report.
//!
//!     cargo run --example verify_graph [-- path/to/graph.g6]

use steinberg::formats::{decode, Format};
use steinberg::verify::{verify_steinberg, VerifyOptions};
use steinberg::Graph;

fn main() {
    let graphs: Vec<(String, Graph)> = match std::env::args().nth(1) {
        Some(path) => {
            let p = std::path::Path::new(&path);
            let format = Format::from_path(p).unwrap_or(Format::Graph6);
            let bytes = std::fs::read(p).expect("readable file");
            vec![(path.clone(), decode(&bytes, format).expect("parseable graph"))]
        }
        None => vec![("K4".into(), Graph::complete(4)), ("C5".into(), Graph::cycle(5))],
    };
    for (name, g) in graphs {
        // The oracle cross-check is only allowed on small graphs.
        let opts = VerifyOptions {
            oracle: g.n() <= 25,
            jobs: 1,
        };
        let report = verify_steinberg(&g, opts).expect("size guard respected");
        println!("== {name}");
        print!("{}", report.to_json());
    }
}
