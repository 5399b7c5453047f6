//! The nontriviality certificate: a genus-3 bounding pair map moves the
//! lift of `a∧c∧b` in the invariant `H³` by a nonzero element of `Sym²V`,
//! although it acts trivially on `H_1`.
//!
//! ```text
//! cargo run -p torelli --example torelli_action
//! ```

use torelli::fixtures;
use torelli::{
    act, bounding_pair_action_on_v, johnson_bp, omega3, phi, rat, variation, GradedH3Element, TorelliParams,
};

fn main() -> torelli::Result<()> {
    for fig in [fixtures::figure_one(), fixtures::genus_four()] {
        let pair = &fig.bounding_pair;
        let j = johnson_bp(pair)?;
        println!("== {} (genus {})", fig.name, fig.space.genus());
        println!(
            "a = {}, a' = {}, b = {}, c = {}, d = {}",
            fig.a,
            fig.a_prime,
            fig.b,
            fig.c,
            fig.d()
        );
        println!("j(d,d')            = {j}");
        println!("top = a^c^b        = {}", fig.top);
        println!("phi(j(d,d'), top)  = {}", phi(&j, &fig.top)?);
        println!("omega3(j(d,d'), top) = {}", omega3(&j, &fig.top)?);
        println!("trivial on H_1: {}", bounding_pair_action_on_v(pair).is_identity());

        let var = variation(pair, &fig.top, &TorelliParams::default())?;
        println!("variation = ({}, {}, {})", var.scalar(), var.sym2(), var.top());
        println!("nontrivial: {}\n", !var.sym2().is_zero());
    }

    // the action is unipotent: powers of the map add the variation linearly
    let fig = fixtures::figure_one();
    let params = TorelliParams::new(rat(1, 2), rat(-1, 1))?;
    let j = johnson_bp(&fig.bounding_pair)?;
    let mut m = GradedH3Element::from_top(fig.top.clone())?;
    for n in 1..=3 {
        m = act(&j, &m, &params)?;
        println!("after {n} application(s): ({}, {})", m.scalar(), m.sym2());
    }
    Ok(())
}
