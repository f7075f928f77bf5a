//! Encode one graph in every supported format and decode it back.
//!
//!     cargo run --example formats

use steinberg::formats::{decode, encode, Format};
use steinberg::Graph;

fn main() {
    let g = Graph::cycle(5).with_labels([(0, "a"), (1, "b")]).unwrap();
    for format in [Format::Graph6, Format::Dimacs, Format::Json] {
        let bytes = encode(&g, format);
        let back = decode(&bytes, format).unwrap();
        println!("--- {format} ({} bytes, same edges: {})", bytes.len(), back.same_structure(&g));
        println!("{}", String::from_utf8_lossy(&bytes).trim_end());
        println!("labels kept: {}", back.labels() == g.labels());
    }
    // Errors point at the offending byte.
    println!("{}", decode(b"Bw?", Format::Graph6).unwrap_err());
    println!("{}", decode(b"p edge 3 1\ne 1 4\n", Format::Dimacs).unwrap_err());
}
