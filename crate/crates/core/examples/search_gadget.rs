//! Search the layered template for the first gadget and print what survives.
//!
//!     cargo run --release --example search_gadget [-- --freeze DIR]
//!
//! With `--freeze`, the first result is certified and written to DIR.

use std::path::PathBuf;

use steinberg::search::{certify_and_freeze, search_gadget, SearchSpec};

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let freeze = args
        .iter()
        .position(|a| a == "--freeze")
        .and_then(|i| args.get(i + 1))
        .map(PathBuf::from);

    let spec = SearchSpec::first_gadget();
    let out = search_gadget(&spec, 10, 4, &mut |line| eprintln!("{line}")).expect("spec is valid");
    println!("{:?}", out.stats);
    for g in &out.gadgets {
        let graph = g.graph();
        let edges: Vec<String> = graph
            .edges()
            .iter()
            .map(|&(u, v)| format!("{}{}", graph.display_name(u), graph.display_name(v)))
            .collect();
        println!("n={} m={}: {}", graph.n(), graph.m(), edges.join(" "));
    }
    if let (Some(dir), Some(g)) = (freeze, out.gadgets.first()) {
        let path = certify_and_freeze(g, &dir, "g1").expect("certification");
        println!("frozen to {}", path.display());
    }
}
