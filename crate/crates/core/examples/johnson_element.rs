//! Johnson elements of subsurfaces and of a genus-4 bounding pair built by
//! hand: `j(X') - j(X'') = d∧δ`, and both sides project to the same
//! primitive class `j(d,d')`.
//!
//! ```text
//! cargo run -p torelli --example johnson_element
//! ```

use torelli::johnson::JohnsonData;
use torelli::{bounding_pair_action_on_v, johnson_bp, BoundingPairSpec, SubsurfaceSpec, SymplecticSpace};

fn main() -> torelli::Result<()> {
    let s = SymplecticSpace::new(4)?;
    let d = s.a(1);
    // X' carries a sheared basis of two handles; X'' carries the last one
    let left = SubsurfaceSpec::new(
        d.clone(),
        vec![(&s.a(2) + &s.a(1), s.b(2)), (s.a(3), &s.b(3) + &s.a(1))],
    )?;
    let right = SubsurfaceSpec::new(-d.clone(), vec![(s.a(4), s.b(4))])?;
    let pair = BoundingPairSpec::new(left, right)?;

    let data = JohnsonData::compute(&pair)?;
    println!("d            = {}", pair.d());
    println!("j(X')        = {}", data.side1);
    println!("j(X'')       = {}", data.side2);
    println!("j(X')-j(X'') = {}", data.difference);
    println!("d ^ delta    = {}", data.d_wedge_delta);
    println!("identity holds: {}", data.identity_holds());
    println!("j(d,d')      = {}", johnson_bp(&pair)?);
    println!("same from the other side: {}", data.projections_agree());
    println!("contraction(j(X')) = {}", s.contraction3(&data.side1)?);
    println!(
        "acts on H_1 as identity: {}",
        bounding_pair_action_on_v(&pair).is_identity()
    );

    // a pair whose sides share a handle is not a bounding pair
    let bad = BoundingPairSpec::new(
        SubsurfaceSpec::new(d.clone(), vec![(s.a(2), s.b(2)), (s.a(3), s.b(3))])?,
        SubsurfaceSpec::new(-d, vec![(s.a(2), s.b(2))])?,
    )?;
    println!("\noverlapping sides: {}", johnson_bp(&bad).unwrap_err());
    Ok(())
}
