//! Dimensions of the pieces of the invariant `H³` of the configuration
//! space of three unordered points, genus 2 to 5.
//!
//! ```text
//! cargo run -p torelli --example dimension_audit
//! ```

use torelli::h3::{WEIGHT_PURE, WEIGHT_QUOTIENT};
use torelli::{dimension_audit, SymplecticSpace};

fn main() -> torelli::Result<()> {
    println!("weights: sub {WEIGHT_PURE}, quotient {WEIGHT_QUOTIENT}");
    println!(
        "{:>5} {:>6} {:>6} {:>6} {:>9} {:>6}  consistent",
        "genus", "Q", "Sym2", "sub", "quotient", "total"
    );
    for g in 2..=5 {
        let a = dimension_audit(&SymplecticSpace::new(g)?);
        println!(
            "{:>5} {:>6} {:>6} {:>6} {:>9} {:>6}  {}",
            a.genus,
            a.sub_scalar,
            a.sub_sym2,
            a.sub,
            a.quotient,
            a.total,
            a.consistent()
        );
    }
    Ok(())
}
