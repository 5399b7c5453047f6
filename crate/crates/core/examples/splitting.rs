//! Splits 3-vectors of `H_1` of a genus-3 surface into a primitive part and
//! a `δ∧V` part, and counts the primitive subspace two ways.
//!
//! ```text
//! cargo run -p torelli --example splitting
//! ```

use torelli::text::parse_multivector;
use torelli::{Multivector, SymplecticSpace};

fn main() -> torelli::Result<()> {
    let space = SymplecticSpace::new(3)?;
    println!("delta = {}", space.delta());

    for input in ["a1^a2^b2", "a2^b1^a3", "a1^a2^b2 + a1^a3^b3", "b1^b2^b3 - 2 a1^b1^a2"] {
        let x = parse_multivector(3, input, Some(3))?;
        let p = space.project_primitive(&x)?;
        let w = space.delta_component(&x)?;
        let back = &p + &space.delta().wedge(&Multivector::from_vector(&w))?;
        println!("\nx              = {x}");
        println!("contraction(x) = {}", space.contraction3(&x)?);
        println!("primitive part = {p}");
        println!("delta part     = delta ^ ({w})");
        assert_eq!(back, x);
    }

    for g in 2..=4 {
        let r = SymplecticSpace::new(g)?.primitive_rank();
        println!(
            "\ng={g}: rank via projector {}, via isotropic triples {}, expected {}",
            r.projector_image, r.isotropic_span, r.expected
        );
    }
    Ok(())
}
