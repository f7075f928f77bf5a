//! Planarity verdicts come with certificates that are checked by separate
//! code: a rotation system for planar graphs, a Kuratowski subdivision
//! otherwise.
//!
//!     cargo run --example planarity_certificates

use steinberg::structure::{check_embedding, check_obstruction, is_planar, PlanarityCertificate};
use steinberg::Graph;

fn main() {
    let petersen = Graph::new(
        10,
        &[
            (0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
            (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),
            (5, 7), (7, 9), (9, 6), (6, 8), (8, 5),
        ],
    )
    .unwrap();
    let cube = Graph::new(
        8,
        &[(0, 1), (1, 2), (2, 3), (3, 0), (4, 5), (5, 6), (6, 7), (7, 4), (0, 4), (1, 5), (2, 6), (3, 7)],
    )
    .unwrap();
    for (name, g) in [("K5", Graph::complete(5)), ("cube", cube), ("Petersen", petersen)] {
        match is_planar(&g) {
            PlanarityCertificate::Planar { rotation } => {
                println!("{name}: planar, embedding check {:?}", check_embedding(&g, &rotation));
                println!("  rotation at 0: {:?}", rotation[0]);
            }
            PlanarityCertificate::Nonplanar { obstruction } => {
                println!(
                    "{name}: nonplanar, {:?} on branch vertices {:?}, check {:?}",
                    obstruction.kind,
                    obstruction.branch,
                    check_obstruction(&g, &obstruction)
                );
            }
        }
    }
}
