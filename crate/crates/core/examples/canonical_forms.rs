//! Canonical forms identify graphs up to isomorphism; the colored variant
//! also respects a vertex coloring, which is how gadgets with ordered
//! terminals are deduplicated.
//!
//!     cargo run --example canonical_forms

use steinberg::{canonical_form, canonical_form_colored, Graph};

fn main() {
    let c6 = Graph::cycle(6);
    let shuffled = c6.permuted(&[3, 5, 1, 0, 4, 2]);
    let (a, b) = (canonical_form(&c6), canonical_form(&shuffled));
    println!("C6:          {a}");
    println!("relabeled:   {b}  (equal: {})", a == b);

    let two_triangles = Graph::new(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
    println!("2 x C3:      {}  (equal to C6: {})", canonical_form(&two_triangles), canonical_form(&two_triangles) == a);

    // Path with a marked endpoint vs a marked middle vertex.
    let p = Graph::path(3);
    println!("P3, end marked:    {}", canonical_form_colored(&p, &[1, 0, 0]));
    println!("P3, middle marked: {}", canonical_form_colored(&p, &[0, 1, 0]));
    println!("digest of C6: {}", a.digest());
}
