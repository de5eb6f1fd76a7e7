// Apply Dunkl operators and watch their defining properties: they deform
// directional derivatives, lower degree by one, and pairwise commute.
//
// Run with `cargo run --example dunkl_operators`.

use cherednik::dunkl::DunklContext;
use cherednik::group::{Group, Params};
use cherednik::poly::Poly;
use cherednik::scalar::Scalar;

fn main() -> cherednik::Result<()> {
    // S_2 with coupling k: T_1 x_1 = 1 - k
    let group = Group::build(1, 2)?;
    let k = Scalar::ratio(2, 5);
    let ctx = DunklContext::new(&group, Params::type_a(k))?;
    let x1 = Poly::var(2, 0);
    println!("S(2), k = 2/5:");
    println!("  T_1 x1       = {}", ctx.apply_dir(0, &x1)?);
    let f = Poly::parse("x1^2*x2", 2, 1)?;
    println!("  T_1 x1^2*x2  = {}", ctx.apply_dir(0, &f)?);

    // at c = 0 the operator is the plain derivative
    let free = DunklContext::new(&group, Params::type_a(Scalar::zero()))?;
    println!("  c = 0:  T_1 x1^2*x2 = {}", free.apply_dir(0, &f)?);

    // a cyclotomic example: G(3,1,2) with parameters in Q(e_3)
    let g3 = Group::build(3, 2)?;
    let params = Params::wreath(
        Scalar::ratio(1, 3),
        vec![
            &Scalar::ratio(1, 2) + &Scalar::root_of_unity(3, 1),
            Scalar::ratio(2, 7),
        ],
    );
    let ctx3 = DunklContext::new(&g3, params)?;
    let g = Poly::parse("x1^2", 2, 3)?;
    println!("G(3,1,2), cyclotomic parameters:");
    println!("  T_1 x1^2 = {}", ctx3.apply_dir(0, &g)?);

    // the operators commute; the check sweeps all monomials up to degree 6
    ctx3.check_commutativity(6)?;
    println!("  [T_1, T_2] = 0 on all monomials of degree <= 6");
    Ok(())
}
