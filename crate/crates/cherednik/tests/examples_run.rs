//! Every example program doubles as an integration check: each one asserts
//! its own claims internally, so running them here keeps the examples honest.

macro_rules! example_runs {
    ($name:ident, $file:literal) => {
        mod $name {
            include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/", $file));

            #[test]
            fn runs() {
                main().expect(concat!($file, " should run"));
            }
        }
    };
}

example_runs!(dunkl_operators, "dunkl_operators.rs");
example_runs!(rank1_classification, "rank1_classification.rs");
example_runs!(type_a_quotients, "type_a_quotients.rs");
example_runs!(support_patterns, "support_patterns.rs");
example_runs!(wreath_quotients, "wreath_quotients.rs");
example_runs!(sigma_finiteness, "sigma_finiteness.rs");
example_runs!(euler_identity, "euler_identity.rs");
example_runs!(gorenstein_counterexample, "gorenstein_counterexample.rs");
example_runs!(character_tables, "character_tables.rs");
