// Type A finite quotients: the degree-r singular copy of the reflection
// representation at k = r/n, the quotient of dimension r^(n-1), and its
// character table against the closed form.
//
// Run with `cargo run --example type_a_quotients`.

use cherednik::characters::{
    closed_form_quotient_character, quotient_character, SingularRep,
};
use cherednik::dunkl::DunklContext;
use cherednik::group::{Group, Params};
use cherednik::modules::submodule_closure;
use cherednik::poly::Poly;
use cherednik::scalar::Scalar;
use cherednik::singular::{type_a_singular, TypeAParams};

fn main() -> cherednik::Result<()> {
    let (n, r) = (3usize, 2u32);
    let params = TypeAParams::new(n, r)?;
    let fis = type_a_singular(&params);
    println!("S({n}) at k = {}/{}: singular vectors of degree {r}", r, n);
    for (i, f) in fis.iter().enumerate() {
        println!("  f_{} = {}", i + 1, f);
    }

    let group = Group::build(1, n)?;
    let ctx = DunklContext::new(&group, Params::type_a(Scalar::from_rat(params.k.clone())))?;
    for f in &fis {
        for dir in 0..n {
            assert!(ctx.apply_dir(dir, f)?.is_zero());
        }
    }
    println!("  every f_i is killed by every Dunkl operator");

    // quotient by the generated submodule, cut down to the reflection
    // representation by the sum of coordinates
    let mut gens = fis;
    gens.push(Poly::linear_form(&vec![Scalar::one(); n]));
    let q = submodule_closure(&ctx, &gens, n as u32 * r + 2)?;
    println!("  hilbert series: {:?}", q.hilbert_series());
    println!("  total dimension: {:?} (= r^(n-1))", q.finite_dim_decide());

    println!("  characters per conjugacy class (closed form in parentheses):");
    for g in group.conjugacy_class_reps() {
        let ch = quotient_character(&q, &g);
        let closed = closed_form_quotient_character(&ctx, SingularRep::TypeAReflection, r, &g, 6)?;
        let lhs: Vec<String> = ch.coeffs.iter().take(7).map(Scalar::to_string).collect();
        let rhs: Vec<String> = closed.coeffs.iter().map(Scalar::to_string).collect();
        println!("    {g}: [{}] ([{}])", lhs.join(", "), rhs.join(", "));
    }
    Ok(())
}
