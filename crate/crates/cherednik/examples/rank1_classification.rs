// The rank one case `W = Z/lZ`: closed-form multiplicities of `L(eta^m)`
// inside `M(eta^p)` against the brute-force radical of the twisted module.
//
// Run with `cargo run --example rank1_classification`.

use cherednik::rank1::Rank1;
use cherednik::scalar::Scalar;

fn main() -> cherednik::Result<()> {
    // a resonant parameter point for l = 3
    let r1 = Rank1::new(3, vec![Scalar::ratio(5, 3), Scalar::ratio(1, 3)])?;
    println!("l = 3, c = (5/3, 1/3)");
    for p in 0..3 {
        println!(
            "  M(eta^{p}): lowest h-eigenvalue {}",
            r1.lowest_eigenvalue(p)
        );
        for m in 0..3 {
            if m == p {
                continue;
            }
            let closed = r1.multiplicity(p, m);
            let brute = r1.brute_multiplicity(p, m, 24);
            println!(
                "    [M(eta^{p}) : L(eta^{m})] = {closed} (brute force {brute}), b = {:?}",
                r1.b_value(p, m)
            );
            assert_eq!(closed, brute);
        }
        if let Some(b) = r1.smallest_b(p) {
            let dims = r1.brute_dims(p, 2 * b as u32);
            println!("    L(eta^{p}) graded dimensions: {dims:?}");
            for j in 0..3 {
                let closed = r1.closed_character(p, j, 2 * b as usize)?;
                let brute = r1.brute_character(p, j, 2 * b as usize);
                assert_eq!(closed.coeffs, brute.coeffs, "character at s^{j}");
            }
            println!("    characters agree with the closed form at every s^j");
        }
    }
    Ok(())
}
