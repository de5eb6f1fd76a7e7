// For real reflection groups a finite dimensional quotient of the
// polynomial module is irreducible exactly when it is Gorenstein. For
// complex groups this fails already in rank one: a double resonance makes
// `C[x]/(x^{b2})` Gorenstein while the Gram radical already starts at `b1`.
//
// Run with `cargo run --example gorenstein_counterexample`.

use cherednik::dunkl::DunklContext;
use cherednik::group::{Group, Params};
use cherednik::modules::{radical_vanishes_on, submodule_closure};
use cherednik::poly::{Monomial, Poly};
use cherednik::rank1::find_gorenstein_reducible;
use cherednik::scalar::Scalar;
use cherednik::singular::{type_a_singular, TypeAParams};

fn main() -> cherednik::Result<()> {
    // real case: S(2) at k = 3/2 gives a 3-dimensional quotient which is
    // both Gorenstein and irreducible
    let group = Group::build(1, 2)?;
    let ctx = DunklContext::new(&group, Params::type_a(Scalar::ratio(3, 2)))?;
    let mut gens = type_a_singular(&TypeAParams::new(2, 3)?);
    gens.push(Poly::linear_form(&vec![Scalar::one(); 2]));
    let q = submodule_closure(&ctx, &gens, 8)?;
    println!("S(2), k = 3/2: dims {:?}", q.hilbert_series());
    println!("  gorenstein: {}", q.gorenstein_check()?);
    println!("  gram radical vanishes: {}", radical_vanishes_on(&ctx, &q)?);

    // complex rank one: search for a double resonance
    let (r1, b1, b2) = find_gorenstein_reducible(3, 12).expect("double resonance");
    println!(
        "Z(3) with c = [{}]: twisted Gram scalars vanish at degrees {b1} and {b2}",
        r1.c
            .iter()
            .map(Scalar::to_string)
            .collect::<Vec<_>>()
            .join(", ")
    );
    let group = Group::build(3, 1)?;
    let ctx = DunklContext::new(&group, Params::rank1(r1.c.clone()))?;
    let mut gen = Poly::zero(1);
    gen.add_term(Monomial(vec![b2 as u32]), Scalar::one());
    let q = submodule_closure(&ctx, &[gen], b2 as u32 + 2)?;
    println!("  quotient by x^{b2}: dims {:?}", q.hilbert_series());
    println!("  gorenstein: {}", q.gorenstein_check()?);
    println!(
        "  gram radical vanishes: {} (the radical already starts at degree {b1})",
        radical_vanishes_on(&ctx, &q)?
    );
    Ok(())
}
