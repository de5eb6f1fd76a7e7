// The support of the type A quotient: vanishing of the singular vectors at
// a point is equivalent to every coincidence multiplicity being divisible
// by n/d, with d = gcd(r, n).
//
// Run with `cargo run --example support_patterns`.

use cherednik::report::sample_support_points;
use cherednik::scalar::Scalar;
use cherednik::singular::TypeAParams;
use cherednik::support::SupportTester;
use rand::rngs::StdRng;
use rand::SeedableRng;

fn main() -> cherednik::Result<()> {
    let tester = SupportTester::new(TypeAParams::new(4, 2)?);
    println!(
        "S(4) at k = 2/4: d = {}, blocks of size n/d = {}",
        tester.params.d,
        4 / tester.params.d
    );
    let probes: [&[i64; 4]; 4] = [&[1, 1, 5, 5], &[1, 2, 3, 4], &[7, 7, 7, 7], &[1, 1, 1, 5]];
    for point in probes {
        let coords: Vec<Scalar> = point.iter().map(|&v| Scalar::from_int(v)).collect();
        println!(
            "  point {point:?}: in support = {}, pattern member = {}",
            tester.support_member(&coords),
            tester.pattern_member(&coords)
        );
    }

    // randomized agreement sweep
    let mut rng = StdRng::seed_from_u64(1);
    let points = sample_support_points(4, &mut rng, 200);
    let agree = points
        .iter()
        .all(|p| tester.support_member(p) == tester.pattern_member(p));
    println!("  200 random points with controlled coincidences: predicates agree = {agree}");
    Ok(())
}
