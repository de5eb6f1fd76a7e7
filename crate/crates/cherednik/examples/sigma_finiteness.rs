// The finiteness criterion for wreath quotients: the quotient by the
// degree-r singular ideal is finite dimensional exactly when k avoids the
// finite set Sigma_r of small positive rationals.
//
// Run with `cargo run --example sigma_finiteness`.

use cherednik::dunkl::DunklContext;
use cherednik::group::{Group, Params};
use cherednik::modules::{submodule_closure, FiniteDim};
use cherednik::scalar::{rat, Scalar};
use cherednik::singular::{wreath_singular, WreathParams};

fn main() -> cherednik::Result<()> {
    let (l, n, r) = (2u32, 2usize, 3u32);
    let probe = WreathParams::new(l, n, r, Scalar::zero(), vec![Scalar::zero()])?;
    let sigma: Vec<String> = probe.sigma_r().iter().map(|q| q.to_string()).collect();
    println!("G({l},1,{n}), r = {r}: Sigma_{r} = {{{}}}", sigma.join(", "));

    let group = Group::build(l, n)?;
    for (num, den) in [(1i64, 3i64), (1, 2), (1, 1), (2, 1)] {
        let k = Scalar::from_rat(rat(num, den));
        let wp = WreathParams::solving_er(l, n, r, k.clone(), Vec::new())?;
        let in_sigma = wp.sigma_r_contains(&rat(num, den));
        let fis = wreath_singular(&wp)?;
        let ctx = DunklContext::new(&group, Params::wreath(wp.k.clone(), wp.c.clone()))?;
        let q = submodule_closure(&ctx, &fis, 20)?;
        let outcome = match q.finite_dim_decide() {
            FiniteDim::Finite(d) => format!("finite, dimension {d}"),
            FiniteDim::UnknownAtCutoff => {
                assert!(q.hilbert_series().iter().all(|&d| d > 0));
                "every graded piece positive through degree 20".to_string()
            }
        };
        println!("  k = {num}/{den}: in Sigma_r = {in_sigma}; quotient: {outcome}");
    }
    Ok(())
}
