use hydrent_core::logspace::{combine, log_gamma, log_pochhammer, product, sum, Combine};
use hydrent_core::SignedLogReal;
use proptest::prelude::*;

fn magnitude() -> impl Strategy<Value = f64> {
    (-300.0f64..300.0).prop_map(|e| 10f64.powf(e))
}

proptest! {
    #[test]
    fn product_matches_native(a in magnitude(), b in magnitude()) {
        let native = a * b;
        prop_assume!(native.is_finite() && native > 0.0 && native.is_normal());
        let p = combine(&[SignedLogReal::from_f64(a), SignedLogReal::from_f64(b)], Combine::Product).to_f64();
        prop_assert!((p - native).abs() <= 1e-13 * native);
    }

    #[test]
    fn round_trip_is_close(x in magnitude(), neg in any::<bool>()) {
        let x = if neg { -x } else { x };
        let y = SignedLogReal::from_f64(x).to_f64();
        prop_assert!((y - x).abs() <= 4.0 * f64::EPSILON * x.abs());
    }

    #[test]
    fn sum_of_opposites_cancels(a in magnitude(), b in magnitude()) {
        let (sa, sb) = (SignedLogReal::from_f64(a), SignedLogReal::from_f64(b));
        let s = sum([sa, sb, -sa]);
        prop_assert!((s.to_f64() - b).abs() <= 1e-12 * a.max(b));
    }

    #[test]
    fn gamma_recurrence(x in 0.5f64..1e6) {
        // both terms are rounded to f64, so the difference carries their ulp
        let hi = log_gamma(x + 1.0).unwrap();
        let d = hi - log_gamma(x).unwrap();
        prop_assert!((d - x.ln()).abs() <= 1e-13 * x.ln().abs().max(1.0) + 4.0 * f64::EPSILON * hi.abs());
    }

    #[test]
    fn pochhammer_is_a_product(x in 1e-3f64..1e4, m in 0u32..40) {
        let explicit: f64 = (0..m).map(|k| (x + k as f64).ln()).sum();
        let p = log_pochhammer(x, m as f64).unwrap();
        prop_assert!((p - explicit).abs() <= 1e-12 * explicit.abs().max(1.0));
    }

    #[test]
    fn product_of_many_is_order_free(xs in proptest::collection::vec(-50.0f64..50.0, 1..20)) {
        let terms: Vec<SignedLogReal> = xs.iter().map(|&x| SignedLogReal::from_f64(x)).collect();
        let fwd = product(terms.iter().copied());
        let rev = product(terms.iter().rev().copied());
        prop_assert_eq!(fwd.sign(), rev.sign());
        prop_assert!((fwd.logmag() - rev.logmag()).abs() <= 1e-13 * fwd.logmag().abs().max(1.0));
    }
}
