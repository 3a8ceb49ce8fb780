use cevian_core::affine::{fixed_points, FixedPointKind};
use cevian_core::projective::{common_point, join, meet, HLine, HPoint};
use cevian_core::scalar::int;
use cevian_core::triangle::trilinear_polar;
use cevian_core::{
    circle_through_three, run_suite, sample_configurations, Bary, Status, Stratum, SuiteSummary,
    TheoremId, Triangle,
};
use num_traits::Zero;

fn closed_form_q(p: &Bary) -> Bary {
    let [u, v, w] = p.coords();
    Bary::new(&u * (&v + &w), &v * (&w + &u), &w * (&u + &v)).unwrap()
}

#[test]
fn no_failures_in_any_stratum() {
    for stratum in Stratum::ALL {
        let reports = run_suite(11, 25, stratum, None).unwrap();
        let s = SuiteSummary::of(&reports);
        let first_fail = reports.iter().find(|r| r.status == Status::Fail);
        assert_eq!(s.fail, 0, "{stratum}: {first_fail:?}");
        assert_eq!(s.total(), 25 * TheoremId::ALL.len());
    }
}

#[test]
fn infinite_point_keeps_core_results() {
    let ids = [TheoremId::T2_1, TheoremId::T2_4, TheoremId::T3_2];
    for r in run_suite(5, 30, Stratum::PInfinite, Some(&ids)).unwrap() {
        assert_eq!(r.status, Status::Pass, "{r}");
    }
}

#[test]
fn q_agrees_along_three_paths() {
    for c in sample_configurations(21, 40, Stratum::Generic).unwrap() {
        let formula = c.triangle().bary_to_point(&closed_form_q(&c.p_bary()));
        let m0 = c.ctx.medial().vertices();
        let lines: Vec<HLine> = (0..3)
            .map(|i| join(&m0[i], &c.cevian_midpoints[i]).unwrap())
            .collect();
        let synthetic = common_point(&lines).unwrap();
        let fp = fixed_points(&c.t_p);
        assert_eq!(fp.kind, FixedPointKind::UniquePoint);
        assert_eq!(formula, c.q);
        assert_eq!(synthetic, c.q);
        assert_eq!(fp.point.unwrap(), c.q);
    }
}

#[test]
fn steiner_points_have_invariant_line_through_centroid() {
    for c in sample_configurations(21, 30, Stratum::OnSteiner).unwrap() {
        let fp = fixed_points(&c.t_p);
        assert_eq!(fp.kind, FixedPointKind::NoOrdinaryFixedPoint);
        let line = join(&c.g, &c.t_p.apply(&c.g)).unwrap();
        assert_eq!(c.t_p.apply_line(&line), line);
    }
}

// With P at infinity T_P fixes every point of the trilinear polar of P.
#[test]
fn infinite_point_fixes_its_trilinear_polar() {
    for c in sample_configurations(8, 30, Stratum::PInfinite).unwrap() {
        let fp = fixed_points(&c.t_p);
        assert_eq!(fp.kind, FixedPointKind::LineOfFixedPoints);
        let polar = trilinear_polar(c.triangle(), &c.p).unwrap();
        assert_eq!(fp.line.unwrap(), polar);
        assert!(polar.contains(&c.q));
        assert_eq!(check_status(TheoremId::T3_11, &c), Status::Skipped);
    }
}

fn check_status(id: TheoremId, c: &cevian_core::Configuration) -> Status {
    cevian_core::check(id, c).status
}

fn altitude(from: &HPoint, p: &HPoint, q: &HPoint) -> HLine {
    let (px, py) = p.cartesian().unwrap();
    let (qx, qy) = q.cartesian().unwrap();
    let (fx, fy) = from.cartesian().unwrap();
    let (dx, dy) = (qx - px, qy - py);
    let k = &dx * fx + &dy * fy;
    HLine::new(dx, dy, -k).unwrap()
}

#[test]
fn cyclocevian_of_centroid_is_orthocenter() {
    let t = Triangle::from_int_vertices([(0, 0), (4, 0), (1, 3)]).unwrap();
    let [a, b, c] = t.vertices().clone();
    let h = meet(&altitude(&a, &b, &c), &altitude(&b, &c, &a)).unwrap();
    assert!(altitude(&c, &a, &b).contains(&h));
    assert_eq!(h, HPoint::ordinary(int(1), int(1)));
    let ctx = cevian_core::ConjugacyContext::new(t);
    let phi = ctx.cyclocevian(&Bary::centroid()).unwrap();
    assert_eq!(ctx.point(&phi), h);
}

#[test]
fn conjugate_traces_share_a_circle() {
    for c in sample_configurations(4, 30, Stratum::Generic).unwrap() {
        let ctx = &c.ctx;
        let phi = ctx.cyclocevian(&c.p_bary()).unwrap();
        assert_eq!(ctx.cyclocevian(&phi).unwrap(), c.p_bary());
        let def = c.def();
        let circle = circle_through_three(&def[0], &def[1], &def[2]).unwrap();
        let other = cevian_core::cevian_triangle(c.triangle(), &ctx.point(&phi)).unwrap();
        for p in def.iter().chain(&other) {
            assert!(circle.residue(p).is_zero());
        }
    }
}
