use meanconvex::function;
use meanconvex::popoviciu::{hlawka_check, popoviciu_sides, two_point_reduction, TheoremId};
use meanconvex::report::{decode_report, to_json, ReportFile, ReportVerdict, RunConfig, Witness};
use meanconvex::WeightFunction;
use proptest::prelude::*;

fn rel_eq(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol * a.abs().max(b.abs()).max(1.0)
}

proptest! {
    #[test]
    fn sides_are_symmetric(x in 0.1f64..10.0, y in 0.1f64..10.0, z in 0.1f64..10.0, k in 0usize..9) {
        let id = TheoremId::ALL[k];
        let h = WeightFunction::identity();
        let f = function::cosh();
        let (l, r) = popoviciu_sides(id, &h, &f, x, y, z).unwrap();
        for (a, b, c) in [(y, x, z), (z, y, x), (x, z, y), (y, z, x)] {
            let (l2, r2) = popoviciu_sides(id, &h, &f, a, b, c).unwrap();
            prop_assert!(rel_eq(l, l2, 1e-12) && rel_eq(r, r2, 1e-12));
        }
    }

    #[test]
    fn two_point_reduction_is_z_equals_y(x in 0.1f64..10.0, y in 0.1f64..10.0, k in 0usize..9) {
        let id = TheoremId::ALL[k];
        let h = WeightFunction::power(2.0);
        let f = function::arctan();
        let a = two_point_reduction(id, &h, &f, x, y).unwrap();
        let b = popoviciu_sides(id, &h, &f, x, y, y).unwrap();
        prop_assert_eq!(a.0.to_bits(), b.0.to_bits());
        prop_assert_eq!(a.1.to_bits(), b.1.to_bits());
    }

    #[test]
    fn hlawka_margin_is_nonnegative(x in -100f64..100.0, y in -100f64..100.0, z in -100f64..100.0) {
        let (l, r, m) = hlawka_check(x, y, z);
        prop_assert!(m >= -1e-12 * l.max(r).max(1.0));
    }

    #[test]
    fn report_round_trips(x in any::<f64>(), y in -1e300f64..1e300, lhs in any::<f64>(), seed in any::<u64>()) {
        let mut cfg = RunConfig::new("verify");
        cfg.seed = seed;
        let mut r = ReportFile::new(cfg, ReportVerdict::Refuted);
        r.witnesses.push(Witness { x, y, z: None, t: Some(0.5), lhs, rhs: 1.0 });
        let a = to_json(&r).unwrap();
        let back = decode_report(&a).unwrap();
        prop_assert_eq!(to_json(&back).unwrap(), a);
        if x.is_finite() {
            prop_assert_eq!(back.witnesses[0].x.to_bits(), x.to_bits());
        }
    }
}
