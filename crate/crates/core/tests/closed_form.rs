use brylinski_core::{log_gamma, sphere_beta, sphere_beta_residue, SphereSpec, Variant};
use num_complex::Complex64;
use proptest::prelude::*;
use std::f64::consts::PI;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn away_from_poles(s: Complex64) -> bool {
    // Γ((s + d - 3)/2) has poles at s = 1, -1, -3, … (d = 2) and the d = 3 form at s = -2
    [1.0, -1.0, -3.0, -5.0, -2.0, -7.0].iter().all(|p| (s - p).norm() > 1e-3)
}

proptest! {
    #[test]
    fn corrected_is_twice_printed(d in 2u32..=3, r in 0.2f64..5.0, re in -6.0f64..6.0, im in -10.0f64..10.0) {
        let s = c(re, im);
        prop_assume!(away_from_poles(s));
        let a = sphere_beta(&SphereSpec::new(d, r, Variant::Corrected).unwrap(), s).unwrap();
        let b = sphere_beta(&SphereSpec::new(d, r, Variant::Printed).unwrap(), s).unwrap();
        prop_assert_eq!(a, b * 2.0);
    }

    #[test]
    fn radius_scaling(d in 2u32..=3, r in 0.2f64..5.0, re in -6.0f64..6.0, im in -10.0f64..10.0) {
        let s = c(re, im);
        prop_assume!(away_from_poles(s));
        let a = sphere_beta(&SphereSpec::corrected(d, r).unwrap(), s).unwrap();
        let unit = sphere_beta(&SphereSpec::corrected(d, 1.0).unwrap(), s).unwrap();
        let want = unit * c(r, 0.0).powc(s + 2.0 * d as f64 - 4.0);
        prop_assert!((a - want).norm() <= 1e-12 * want.norm() + 1e-300);
    }

    #[test]
    fn circle_equals_length_times_point_value(r in 0.2f64..5.0, re in -6.0f64..6.0, im in -10.0f64..10.0) {
        let s = c(re, im);
        prop_assume!(away_from_poles(s) && (s - 2.0).norm() > 1e-3 && s.norm() > 1e-3);
        // √π 2^{s-2} R^{s-1} s²(s-2) Γ((s-1)/2)/Γ(s/2+1) at every point of the circle
        let point = c(PI.sqrt(), 0.0)
            * (log_gamma((s - 1.0) * 0.5).unwrap() - log_gamma(s * 0.5 + 1.0).unwrap()
                + (s - 2.0) * 2f64.ln()
                + (s - 1.0) * r.ln())
            .exp()
            * s
            * s
            * (s - 2.0);
        let want = point * (2.0 * PI * r);
        let got = sphere_beta(&SphereSpec::corrected(2, r).unwrap(), s).unwrap();
        prop_assert!((got - want).norm() <= 1e-12 * want.norm());
    }
}

#[test]
fn exact_zeros() {
    for d in [2, 3] {
        for r in [0.5, 1.0, 4.0] {
            let spec = SphereSpec::corrected(d, r).unwrap();
            assert_eq!(sphere_beta(&spec, c(2.0, 0.0)).unwrap(), c(0.0, 0.0));
        }
    }
    // s = 0 vanishes only for circles; the 2-sphere gives -2π·Area
    assert_eq!(sphere_beta(&SphereSpec::corrected(2, 2.0).unwrap(), c(0.0, 0.0)).unwrap(), c(0.0, 0.0));
    let v = sphere_beta(&SphereSpec::corrected(3, 2.0).unwrap(), c(0.0, 0.0)).unwrap();
    assert!((v.re + 2.0 * PI * 16.0 * PI).abs() < 1e-11);
}

#[test]
fn residue_targets() {
    for r in [0.5, 1.0, 2.0] {
        let circle = SphereSpec::corrected(2, r).unwrap();
        assert!((sphere_beta_residue(&circle, 1.0).unwrap() + 4.0 * PI * r).abs() < 1e-8 * r);
        assert!((sphere_beta_residue(&circle, -1.0).unwrap() - 1.5 * PI / r).abs() < 1e-8 / r);
        let printed = SphereSpec::new(2, r, Variant::Printed).unwrap();
        assert!((sphere_beta_residue(&printed, 1.0).unwrap() + 2.0 * PI * r).abs() < 1e-8 * r);
    }
}

#[test]
fn large_imaginary_parts_do_not_overflow() {
    let spec = SphereSpec::corrected(3, 1.0).unwrap();
    let v = sphere_beta(&SphereSpec::corrected(2, 1.0).unwrap(), c(0.5, 400.0)).unwrap();
    assert!(v.re.is_finite() && v.im.is_finite());
    assert!(sphere_beta(&spec, c(0.5, 1e4)).unwrap().norm().is_finite());
}
