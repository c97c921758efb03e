use genuslab_core::closedform::{self, *};
use genuslab_core::distributions;
use genuslab_core::powerseries;
use genuslab_core::rational::{int, to_f64, Rational};
use genuslab_core::Family;
use num_integer::Integer;
use num_traits::{One, Signed};
use proptest::prelude::*;

const LADDER: [u64; 4] = [10, 100, 1_000, 10_000];

fn decreasing(values: &[f64]) -> bool {
    values.windows(2).all(|w| w[1].abs() < w[0].abs())
}

#[test]
fn closed_forms_match_recurrences_to_500() {
    let b = bouquet_avg_table(500).unwrap();
    let d = dipole_avg_table(500).unwrap();
    for n in 1..=500u64 {
        let i = n as usize - 1;
        assert_eq!(avg_genus_bouquet_closed(n).unwrap(), b[i], "B_{n}");
        if n >= 3 {
            assert_eq!(avg_genus_dipole_closed(n).unwrap(), d[i], "D_{n}");
        }
    }
}

#[test]
fn closed_forms_match_distributions() {
    let b = distributions::bouquet_table(60).unwrap();
    let d = distributions::dipole_table(60).unwrap();
    for (bd, dd) in b.iter().zip(&d) {
        assert_eq!(bd.average_genus(), avg_genus_closed(Family::Bouquet, bd.n()).unwrap());
        assert_eq!(dd.average_genus(), avg_genus_closed(Family::Dipole, dd.n()).unwrap());
    }
}

#[test]
fn rationals_are_reduced() {
    for r in bouquet_avg_table(200).unwrap().iter().chain(&dipole_avg_table(200).unwrap()) {
        assert!(r.denom().is_positive());
        assert!(r.numer().gcd(r.denom()).is_one());
    }
}

#[test]
fn stahl_estimate_converges() {
    let gaps: Vec<f64> = LADDER
        .iter()
        .map(|&n| to_f64(&(avg_genus_bouquet_closed(n).unwrap() - stahl_estimate_bouquet(n).unwrap())))
        .collect();
    assert!(decreasing(&gaps), "{gaps:?}");
    assert!(gaps[3].abs() < 1e-3);
}

#[test]
fn asymptotic_residuals_shrink() {
    for family in Family::ALL {
        let residuals: Vec<f64> = LADDER
            .iter()
            .map(|&n| AvgGenusReport::closed(family, n).unwrap().residual)
            .collect();
        assert!(decreasing(&residuals), "{family}: {residuals:?}");
        assert!(residuals[3].abs() < 1e-3);
    }
}

#[test]
fn partial_sum_behaves_like_one_minus_reciprocal() {
    let scaled: Vec<f64> = [100u64, 1_000, 10_000]
        .iter()
        .map(|&n| {
            let s = partial_sum_d2(n).unwrap();
            let gap = s - int(1) + Rational::new(1.into(), (n as i64).into());
            n as f64 * to_f64(&gap).abs()
        })
        .collect();
    assert!(decreasing(&scaled), "{scaled:?}");
}

#[test]
fn generating_function_identities_at_order_100() {
    powerseries::bouquet_ode_residual(100).ensure_zero().unwrap();
    powerseries::dipole_ode_residual(100).ensure_zero().unwrap();
    powerseries::bouquet_u_closed(100).unwrap();
    let u = powerseries::dipole_u_closed(100).unwrap();
    assert_eq!(u.lowest(), -4);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn distribution_invariants(n in 1u64..40, bouquet in any::<bool>()) {
        let family = if bouquet { Family::Bouquet } else { Family::Dipole };
        let d = distributions::distribution(family, n).unwrap();
        prop_assert_eq!(d.eval(&int(1)), Rational::from_integer(d.total().into()));
        prop_assert_eq!(d.top_genus(), family.max_genus(n));
        let avg = d.average_genus();
        prop_assert!(avg >= int(0));
        prop_assert!(avg <= int(family.max_genus(n) as i64));
        prop_assert_eq!(avg, closedform::avg_genus_closed(family, n).unwrap());
    }
}
