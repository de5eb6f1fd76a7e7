// The Euler characteristic of the resolution of a finite dimensional
// quotient by standard modules over exterior powers of the singular
// representation: the alternating character sum collapses to a closed
// form, verified class by class as truncated series.
//
// Run with `cargo run --example euler_identity`.

use cherednik::characters::{euler_character_identity, SingularRep};
use cherednik::dunkl::DunklContext;
use cherednik::group::{Group, Params};
use cherednik::modules::submodule_closure;
use cherednik::poly::Poly;
use cherednik::scalar::Scalar;
use cherednik::singular::{type_a_singular, wreath_singular, TypeAParams, WreathParams};

fn main() -> cherednik::Result<()> {
    // type A: S(3) at r = 2
    let group = Group::build(1, 3)?;
    let ctx = DunklContext::new(&group, Params::type_a(Scalar::ratio(2, 3)))?;
    let mut gens = type_a_singular(&TypeAParams::new(3, 2)?);
    gens.push(Poly::linear_form(&vec![Scalar::one(); 3]));
    let q = submodule_closure(&ctx, &gens, 12)?;
    println!("S(3), r = 2: quotient dims {:?}", q.hilbert_series());
    for g in group.conjugacy_class_reps() {
        let check = euler_character_identity(&ctx, SingularRep::TypeAReflection, 2, &q, &g, 12)?;
        println!(
            "  class {}: quotient = alternating sum = closed form: {}",
            check.element, check.ok
        );
        assert!(check.ok);
    }

    // wreath: G(2,1,2) at r = 3 with k outside Sigma_3
    let wp = WreathParams::solving_er(2, 2, 3, Scalar::ratio(1, 3), Vec::new())?;
    let group = Group::build(2, 2)?;
    let ctx = DunklContext::new(&group, Params::wreath(wp.k.clone(), wp.c.clone()))?;
    let fis = wreath_singular(&wp)?;
    let q = submodule_closure(&ctx, &fis, 12)?;
    println!("G(2,1,2), r = 3, k = 1/3: quotient dims {:?}", q.hilbert_series());
    for g in group.conjugacy_class_reps() {
        let check =
            euler_character_identity(&ctx, SingularRep::WreathHq { q: wp.q }, 3, &q, &g, 12)?;
        println!(
            "  class {}: quotient = alternating sum = closed form: {}",
            check.element, check.ok
        );
        assert!(check.ok);
    }
    Ok(())
}
