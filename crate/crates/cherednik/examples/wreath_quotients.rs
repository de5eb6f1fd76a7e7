// Wreath product quotients: on the parameter hyperplane E_r the polynomial
// module acquires a degree-r copy of the twisted permutation representation
// h_q; off the finiteness set Sigma_r the quotient has dimension r^n and
// the graded shape of a tensor power of a truncated polynomial ring.
//
// Run with `cargo run --example wreath_quotients`.

use cherednik::dunkl::DunklContext;
use cherednik::group::{Group, Params};
use cherednik::modules::submodule_closure;
use cherednik::scalar::Scalar;
use cherednik::singular::{wreath_singular, WreathParams};

fn main() -> cherednik::Result<()> {
    let (l, n, r) = (2u32, 2usize, 3u32);
    // choose k = 1/3 and solve the hyperplane equation for c_1
    let wp = WreathParams::solving_er(l, n, r, Scalar::ratio(1, 3), Vec::new())?;
    println!(
        "G({l},1,{n}), r = {r}: locus E_{r} at k = {}, c_1 = {}",
        wp.k, wp.c[0]
    );
    println!("  decomposition r = (p-1)l + q: p = {}, q = {}, s = {}", wp.p, wp.q, wp.s);

    let fis = wreath_singular(&wp)?;
    for (i, f) in fis.iter().enumerate() {
        println!("  f_{} = {}", i + 1, f);
    }

    let group = Group::build(l, n)?;
    let ctx = DunklContext::new(&group, Params::wreath(wp.k.clone(), wp.c.clone()))?;
    for f in &fis {
        for dir in 0..n {
            assert!(ctx.apply_dir(dir, f)?.is_zero());
        }
    }
    println!("  the span is singular and carries h_{} (weight e^-{})", wp.q, wp.q);

    let q = submodule_closure(&ctx, &fis, n as u32 * r + 2)?;
    println!("  hilbert series: {:?}", q.hilbert_series());
    println!("  total dimension: {:?} (= r^n)", q.finite_dim_decide());

    // at k = 0 the vectors collapse to scaled coordinate powers
    let wp0 = WreathParams::solving_er(l, n, r, Scalar::zero(), Vec::new())?;
    let fis0 = wreath_singular(&wp0)?;
    println!("  at k = 0: f_1 = {}, f_2 = {}", fis0[0], fis0[1]);
    Ok(())
}
