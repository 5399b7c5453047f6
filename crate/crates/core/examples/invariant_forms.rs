//! Evaluates the invariant pairings `ω₃`, `q` and `Φ`, and checks their
//! behaviour under a Dehn twist.
//!
//! ```text
//! cargo run -p torelli --example invariant_forms
//! ```

use torelli::text::parse_multivector;
use torelli::{omega3, phi, q2, SymplecticSpace, Transvection};

fn main() -> torelli::Result<()> {
    let space = SymplecticSpace::new(3)?;
    let p = |s: &str| parse_multivector(3, s, None);

    let s = p("a1^a2^a3")?;
    let t = p("b1^b2^b3")?;
    println!("omega3({s}, {t}) = {}", omega3(&s, &t)?);
    println!("omega3({t}, {s}) = {}", omega3(&t, &s)?);

    let x = p("a1^a2")?;
    let y = p("b1^b2")?;
    println!("q({x}, {y}) = {}", q2(&x, &y)?);

    let u = p("a1^a2^b2")?;
    let v = p("a2^b1^a3")?;
    println!("phi({u}, {v}) = {}", phi(&u, &v)?);
    println!("phi({v}, {u}) = {}", phi(&v, &u)?);

    // a Dehn twist about a curve of class a1 + b2
    let twist = Transvection::new(&space.a(1) + &space.b(2));
    let (tu, tv) = (twist.apply(&u), twist.apply(&v));
    println!("\nT = twist about {}", twist.direction());
    println!("T u = {tu}");
    println!("T v = {tv}");
    println!("phi(Tu, Tv)   = {}", phi(&tu, &tv)?);
    println!("T phi(u, v)   = {}", twist.apply_sym2(&phi(&u, &v)?));
    println!(
        "omega3(Tu, Tv) = {}, omega3(u, v) = {}",
        omega3(&tu, &tv)?,
        omega3(&u, &v)?
    );
    println!("T delta = delta: {}", twist.apply(&space.delta()) == space.delta());
    Ok(())
}
