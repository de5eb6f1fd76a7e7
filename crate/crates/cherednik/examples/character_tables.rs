// Graded character tables: traces of conjugacy class representatives on the
// graded pieces of a computed quotient, next to the closed-form standard
// module characters they assemble from.
//
// Run with `cargo run --example character_tables`.

use cherednik::characters::{quotient_character, standard_character, StandardWeight};
use cherednik::dunkl::DunklContext;
use cherednik::group::{Group, Params};
use cherednik::modules::submodule_closure;
use cherednik::scalar::Scalar;
use cherednik::singular::{wreath_singular, WreathParams};

fn main() -> cherednik::Result<()> {
    let wp = WreathParams::solving_er(3, 2, 2, Scalar::ratio(1, 5), vec![Scalar::ratio(1, 3)])?;
    let group = Group::build(3, 2)?;
    let ctx = DunklContext::new(&group, Params::wreath(wp.k.clone(), wp.c.clone()))?;
    println!(
        "G(3,1,2), r = 2 on the locus: k = {}, c = ({}, {})",
        wp.k, wp.c[0], wp.c[1]
    );

    let fis = wreath_singular(&wp)?;
    let q = submodule_closure(&ctx, &fis, 8)?;
    println!("quotient dims: {:?}", q.hilbert_series());
    println!("shift: t^({})", q.h_shift);
    println!("{} conjugacy classes:", group.conjugacy_class_reps().len());
    for g in group.conjugacy_class_reps() {
        let ch = quotient_character(&q, &g);
        let coeffs: Vec<String> = ch.coeffs.iter().take(5).map(Scalar::to_string).collect();
        println!("  {g}: [{}]", coeffs.join(", "));
    }

    // the standard module character of the trivial lowest weight at the
    // identity is the full Hilbert series of the polynomial ring
    let ch = standard_character(&ctx, StandardWeight::Trivial, &group.identity(), 6)?;
    let coeffs: Vec<String> = ch.coeffs.iter().map(Scalar::to_string).collect();
    println!("standard module at the identity: [{}]", coeffs.join(", "));
    Ok(())
}
