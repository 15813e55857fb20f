//! Writes the 51 groups of order 32 as a catalog directory.
//!
//! Usage: `cargo run --release -p socle-cli --example order32_catalog [DIR]`
//! (default `catalogs/order32`).

use std::path::PathBuf;

use socle_core::constructors::{two_groups_of_order, write_catalog};
use socle_core::verifier::ORDER32_COMPLETE;

fn main() {
    let dir = std::env::args().nth(1).map(PathBuf::from).unwrap_or_else(|| PathBuf::from("catalogs/order32"));
    let groups = two_groups_of_order(32).expect("central extensions of the order-16 groups");
    if groups.len() != 51 {
        eprintln!("expected 51 groups of order 32, found {}", groups.len());
        std::process::exit(1);
    }
    write_catalog(&dir, "order32", &[ORDER32_COMPLETE.to_string()], &groups).expect("catalog written");
    println!("wrote {} groups to {}", groups.len(), dir.display());
}
