//! One exact predicate per registry entry.

use num_traits::{Signed, Zero};

use crate::affine::{
    classify_homothety, fixed_points, half_turn, AffineMap, FixedPointKind, HomothetyClass,
};
use crate::error::{GeometryError, Result};
use crate::projective::{
    collinear, common_point, join, meet, orientation, parallel, parallel_through, signed_ratio,
    squared_distance, HLine, HPoint,
};
use crate::scalar::{det3, int, to_scalars, Scalar};
use crate::triangle::{anticevian_triangle, cevian_triangle, trilinear_polar, Triangle};
use crate::ConjugacyContext;

use super::config::{family, Configuration};
use super::TheoremId;

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum Verdict {
    Pass,
    Fail(String),
    Skip(String),
}

type Outcome = Result<Verdict>;

macro_rules! require {
    ($cond:expr, $($arg:tt)+) => {
        if !$cond {
            return Ok(Verdict::Fail(format!($($arg)+)));
        }
    };
}

macro_rules! skip {
    ($($arg:tt)+) => {
        return Ok(Verdict::Skip(format!($($arg)+)))
    };
}

const VERTEX: [char; 3] = ['A', 'B', 'C'];

fn others(i: usize) -> (usize, usize) {
    ((i + 1) % 3, (i + 2) % 3)
}

/// Determinant of three homogeneous triples; zero iff collinear/concurrent.
fn residue3(
    a: &[num_bigint::BigInt; 3],
    b: &[num_bigint::BigInt; 3],
    c: &[num_bigint::BigInt; 3],
) -> Scalar {
    det3(&[to_scalars(a), to_scalars(b), to_scalars(c)])
}

fn collinear_witness(label: &str, pts: &[&HPoint]) -> Option<String> {
    let owned: Vec<HPoint> = pts.iter().map(|p| (*p).clone()).collect();
    if collinear(&owned) {
        return None;
    }
    let distinct: Vec<&HPoint> = {
        let mut v: Vec<&HPoint> = Vec::new();
        for p in pts {
            if !v.contains(p) {
                v.push(p);
            }
        }
        v
    };
    for i in 0..distinct.len() {
        for j in i + 1..distinct.len() {
            for k in j + 1..distinct.len() {
                let r = residue3(distinct[i].ints(), distinct[j].ints(), distinct[k].ints());
                if !r.is_zero() {
                    return Some(format!(
                        "{label}: {} {} {} residue {r}",
                        distinct[i], distinct[j], distinct[k]
                    ));
                }
            }
        }
    }
    Some(format!("{label}: not collinear"))
}

fn concurrency_witness(lines: &[HLine]) -> String {
    if lines.len() >= 3 {
        let r = residue3(lines[0].ints(), lines[1].ints(), lines[2].ints());
        format!("lines {} {} {} residue {r}", lines[0], lines[1], lines[2])
    } else {
        "fewer than three lines".into()
    }
}

fn same(label: &str, got: &HPoint, want: &HPoint) -> Option<String> {
    (got != want).then(|| format!("{label}: got {got} expected {want}"))
}

macro_rules! check_same {
    ($label:expr, $got:expr, $want:expr) => {
        if let Some(w) = same(&$label, $got, $want) {
            return Ok(Verdict::Fail(w));
        }
    };
}

macro_rules! check_collinear {
    ($label:expr, $pts:expr) => {
        if let Some(w) = collinear_witness(&$label, $pts) {
            return Ok(Verdict::Fail(w));
        }
    };
}

pub(crate) fn evaluate(id: TheoremId, cfg: &Configuration) -> Outcome {
    match id {
        TheoremId::T2_1 => t2_1(cfg),
        TheoremId::C2_2 => c2_2(cfg),
        TheoremId::T2_3 => t2_3(cfg),
        TheoremId::T2_4 => t2_4(cfg),
        TheoremId::T2_5 => t2_5(cfg),
        TheoremId::C2_6 => c2_6(cfg),
        TheoremId::T2_7 => t2_7(cfg),
        TheoremId::L3_1 => l3_1(cfg),
        TheoremId::T3_2 => t3_2(cfg),
        TheoremId::C3_3 => c3_3(cfg),
        TheoremId::L3_4 => l3_4(cfg),
        TheoremId::PI_INV => pi_inv(cfg),
        TheoremId::T3_5 => t3_5(cfg),
        TheoremId::T3_6 => t3_6(cfg),
        TheoremId::T3_7 => t3_7(cfg),
        TheoremId::T3_8 => t3_8(cfg),
        TheoremId::T3_9 => t3_9(cfg),
        TheoremId::C3_10 => c3_10(cfg),
        TheoremId::T3_11 => t3_11(cfg),
        TheoremId::R3_11 => r3_11(cfg),
        TheoremId::T3_12 => t3_12(cfg),
        TheoremId::T3_13 => t3_13(cfg),
        TheoremId::C3_14 => c3_14(cfg),
        TheoremId::F1_F2 => f1_f2(cfg),
    }
}

fn medial(cfg: &Configuration) -> &[HPoint; 3] {
    cfg.ctx.medial().vertices()
}

fn t2_1(cfg: &Configuration) -> Outcome {
    let m0 = medial(cfg);
    let lines = (0..3)
        .map(|i| join(&m0[i], &cfg.cevian_midpoints[i]))
        .collect::<Result<Vec<_>>>()?;
    match common_point(&lines) {
        Some(pt) => {
            check_same!("common point of D0Md, E0Me, F0Mf", &pt, &cfg.q);
            Ok(Verdict::Pass)
        }
        None => Ok(Verdict::Fail(concurrency_witness(&lines))),
    }
}

fn c2_2(cfg: &Configuration) -> Outcome {
    let v = cfg.triangle().vertices();
    let m0 = medial(cfg);
    let def_prime = cfg.def_prime();
    for i in 0..3 {
        let l = join(&m0[i], &cfg.q)?;
        let k = join(&v[i], &cfg.p_prime)?;
        require!(
            parallel(&l, &k),
            "vertex {}: {l} not parallel to {k}",
            VERTEX[i]
        );
        check_same!(
            format!("vertex {}: complement of trace of P'", VERTEX[i]),
            &cfg.complement_point(&def_prime[i]),
            &cfg.cevian_midpoints[i]
        );
    }
    Ok(Verdict::Pass)
}

fn t2_3(cfg: &Configuration) -> Outcome {
    let v = cfg.triangle().vertices();
    let m0 = medial(cfg);
    let def = cfg.def();
    let md = &cfg.cevian_midpoints;
    for i in 0..3 {
        let (j, k) = others(i);
        let ab = crate::projective::midpoint(&v[i], &def[j])?;
        let ac = crate::projective::midpoint(&v[i], &def[k])?;
        let lines = [
            join(&ab, &ac)?,
            join(&m0[j], &m0[k])?,
            join(&md[j], &md[k])?,
        ];
        require!(
            crate::projective::concurrent(&lines),
            "vertex {}: {}",
            VERTEX[i],
            concurrency_witness(&lines)
        );
    }
    // remark: O_a, O_b, O_c on the trilinear polar of Q in the medial triangle
    if cfg.o.iter().any(Option::is_none) {
        return Ok(Verdict::Pass);
    }
    let o: Vec<&HPoint> = cfg.o.iter().flatten().collect();
    check_collinear!("O_a O_b O_c", &o);
    let polar = trilinear_polar(cfg.ctx.medial(), &cfg.q)?;
    for (i, p) in o.iter().enumerate() {
        require!(
            polar.contains(p),
            "O_{} = {p} off trilinear polar {polar}",
            VERTEX[i].to_ascii_lowercase()
        );
    }
    Ok(Verdict::Pass)
}

fn t2_4(cfg: &Configuration) -> Outcome {
    let v = cfg.triangle().vertices();
    let lines = (0..3)
        .map(|i| join(&v[i], &cfg.side_midpoints[i]))
        .collect::<Result<Vec<_>>>()?;
    match common_point(&lines) {
        Some(pt) => {
            check_same!("common point of AA0, BB0, CC0", &pt, &cfg.q);
            Ok(Verdict::Pass)
        }
        None => Ok(Verdict::Fail(concurrency_witness(&lines))),
    }
}

/// The paired vertex lists of the half-turn about the midpoint of `V D_0`,
/// with the infinite-point substitutions applied.
fn half_turn_pairs(cfg: &Configuration, i: usize) -> Vec<(&'static str, HPoint, HPoint)> {
    let v = &cfg.triangle().vertices()[i];
    let d0 = &medial(cfg)[i];
    // R -> Q' when P is infinite, R' -> Q when P' is infinite
    let r = cfg.r.as_ref().map_or(cfg.q_prime.clone(), |r| r[i].clone());
    let r_prime = cfg.r_prime.as_ref().map_or(cfg.q.clone(), |r| r[i].clone());
    vec![
        ("vertex", v.clone(), d0.clone()),
        ("R", r, cfg.q_prime.clone()),
        (
            "Md",
            cfg.cevian_midpoints[i].clone(),
            cfg.cevian_midpoints_prime[i].clone(),
        ),
        ("Q", cfg.q.clone(), r_prime),
        (
            "A0",
            cfg.side_midpoints[i].clone(),
            cfg.side_midpoints_prime[i].clone(),
        ),
        ("D0", d0.clone(), v.clone()),
    ]
}

fn t2_5(cfg: &Configuration) -> Outcome {
    for i in 0..3 {
        let h = half_turn(&cfg.half_turn_centers[i])?;
        for (name, from, to) in half_turn_pairs(cfg, i) {
            check_same!(
                format!("vertex {}: half-turn of {name}", VERTEX[i]),
                &h.apply(&from),
                &to
            );
        }
    }
    Ok(Verdict::Pass)
}

fn c2_6(cfg: &Configuration) -> Outcome {
    let m0 = medial(cfg);
    let mut parts = 0;
    // (a) congruent quadrilaterals R A0 Q Md and Q' A0' R' Md'
    if let (Some(r), Some(rp)) = (&cfg.r, &cfg.r_prime) {
        for i in 0..3 {
            let first = [
                &r[i],
                &cfg.side_midpoints[i],
                &cfg.q,
                &cfg.cevian_midpoints[i],
            ];
            let second = [
                &cfg.q_prime,
                &cfg.side_midpoints_prime[i],
                &rp[i],
                &cfg.cevian_midpoints_prime[i],
            ];
            for s in 0..4 {
                let t = (s + 1) % 4;
                let a = squared_distance(first[s], first[t])?;
                let b = squared_distance(second[s], second[t])?;
                require!(
                    a == b,
                    "vertex {}: side {s} squared lengths {a} vs {b}",
                    VERTEX[i]
                );
            }
            let da = squared_distance(first[0], first[2])?;
            let db = squared_distance(second[0], second[2])?;
            require!(
                da == db,
                "vertex {}: diagonal squared lengths {da} vs {db}",
                VERTEX[i]
            );
        }
        parts += 1;
    }
    // (b) D0, R, A0, M collinear with M the midpoint of D0 R
    if let (Some(r), Some(m)) = (&cfg.r, &cfg.m) {
        check_same!("complement of Q'", &cfg.complement_point(&cfg.q_prime), m);
        for i in 0..3 {
            check_collinear!(
                format!("vertex {}: D0 R A0 M", VERTEX[i]),
                &[&m0[i], &r[i], &cfg.side_midpoints[i], m]
            );
        }
        check_same!(
            "midpoint of D0 R",
            &crate::projective::midpoint(&m0[0], &r[0])?,
            m
        );
        parts += 1;
    }
    // (c) Q, Md, D0, A0', K(A0) collinear when P' is infinite
    if cfg.p_prime.is_infinite() {
        for i in 0..3 {
            let ka0 = cfg.complement_point(&cfg.side_midpoints[i]);
            check_collinear!(
                format!("vertex {}: Q Md D0 A0' K(A0)", VERTEX[i]),
                &[
                    &cfg.q,
                    &cfg.cevian_midpoints[i],
                    &m0[i],
                    &cfg.side_midpoints_prime[i],
                    &ka0
                ]
            );
        }
        parts += 1;
    }
    if parts == 0 {
        skip!("no part applies");
    }
    Ok(Verdict::Pass)
}

fn t2_7(cfg: &Configuration) -> Outcome {
    let ctx = &cfg.ctx;
    let p = cfg.p_bary();
    let phi = match ctx.cyclocevian(&p) {
        Ok(phi) => phi,
        Err(e @ GeometryError::NonConcurrent) => return Err(e),
        Err(e) => skip!("cyclocevian conjugate undefined: {e}"),
    };
    let q2 = match ctx.isotomcomplement(&phi) {
        Ok(q2) => q2,
        Err(e) => skip!("cyclocevian conjugate {phi} has no isotomcomplement: {e}"),
    };
    let q1 = ctx.bary(&cfg.q);
    let gq = ctx.isogonal(&q1)?;
    require!(
        gq == q2,
        "isogonal of Q = {gq}, isotomcomplement of conjugate = {q2}"
    );
    match ctx.formula_two(&p) {
        Ok(f) => require!(
            f == phi,
            "composite map gives {f}, construction gives {phi}"
        ),
        Err(e) => skip!("composite map undefined: {e}"),
    }
    Ok(Verdict::Pass)
}

/// The point `X` on line `ab` with `AX/XB = r`.
fn dividing_point(a: &HPoint, b: &HPoint, r: &Scalar) -> Result<HPoint> {
    let (ax, ay) = a.require_ordinary()?;
    let (bx, by) = b.require_ordinary()?;
    let s = Scalar::from_integer(1.into()) + r;
    if s.is_zero() {
        return Err(GeometryError::BadParameter("ratio -1"));
    }
    Ok(HPoint::ordinary((ax + r * bx) / &s, (ay + r * by) / &s))
}

fn l3_1(cfg: &Configuration) -> Outcome {
    let v = cfg.triangle().vertices();
    let def = cfg.def();
    for i in 0..3 {
        let (j, k) = others(i);
        let r = signed_ratio(&v[j], &v[k], &def[i])?;
        let x = dividing_point(&def[k], &def[j], &r)?;
        require!(x != def[i], "vertex {}: X coincides with trace", VERTEX[i]);
        let l = join(&def[i], &x)?;
        let m = join(&v[i], &cfg.side_midpoints[i])?;
        require!(
            parallel(&l, &m),
            "vertex {}: {l} not parallel to {m}",
            VERTEX[i]
        );
    }
    Ok(Verdict::Pass)
}

fn t3_2(cfg: &Configuration) -> Outcome {
    check_same!("T_P(Q)", &cfg.t_p.apply(&cfg.q), &cfg.q);
    Ok(Verdict::Pass)
}

fn c3_3(cfg: &Configuration) -> Outcome {
    let complement_in_def = AffineMap::from_correspondence(cfg.def(), &cfg.side_midpoints)?;
    let image = cfg.t_p.apply(&cfg.p_prime);
    check_same!(
        "complement in DEF of T_P(P')",
        &complement_in_def.apply(&image),
        &cfg.q
    );
    Ok(Verdict::Pass)
}

fn sign(x: &Scalar) -> i8 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}

fn l3_4(cfg: &Configuration) -> Outcome {
    let v = cfg.triangle().vertices();
    let def = cfg.def();
    let mut checked = 0;
    for i in 0..3 {
        let (j, k) = others(i);
        // U on side V v_k, Z on side V v_j
        let (vi, u, z) = (&v[i], &def[j], &def[k]);
        let star = match meet(&join(vi, &cfg.g)?, &join(u, z)?) {
            Ok(s) if !s.is_infinite() => s,
            _ => continue,
        };
        let lhs = signed_ratio(u, z, &star)?;
        let rhs_sq = squared_distance(vi, u)? / squared_distance(vi, z)?
            * squared_distance(vi, &v[j])?
            / squared_distance(vi, &v[k])?;
        require!(
            &lhs * &lhs == rhs_sq,
            "vertex {}: ratio {lhs} squared vs {rhs_sq}",
            VERTEX[i]
        );
        let side_sign = sign(&orientation(vi, &v[j], u)?) * sign(&orientation(vi, z, &v[k])?);
        require!(
            sign(&lhs) == side_sign,
            "vertex {}: ratio {lhs} has sign opposite to {side_sign}",
            VERTEX[i]
        );
        checked += 1;
    }
    if checked == 0 {
        skip!("every median is parallel to the opposite side of DEF");
    }
    Ok(Verdict::Pass)
}

fn pi_inv(cfg: &Configuration) -> Outcome {
    let v = cfg.triangle().vertices();
    let samples = [(-2, 1), (-1, 2), (1, 3), (1, 2), (2, 3), (3, 1)];
    for i in 0..3 {
        let (j, k) = others(i);
        check_same!(
            format!("side {i}: image of {}", VERTEX[j]),
            &cfg.side_involution(i, &v[j])?,
            &v[k]
        );
        check_same!(
            format!("side {i}: image of {}", VERTEX[k]),
            &cfg.side_involution(i, &v[k])?,
            &v[j]
        );
        for (n, d) in samples {
            let y = dividing_point(&v[j], &v[k], &(crate::scalar::ratio(n, d - n)))?;
            let back = cfg.side_involution(i, &cfg.side_involution(i, &y)?)?;
            check_same!(format!("side {i}: involution at {y}"), &back, &y);
        }
    }
    Ok(Verdict::Pass)
}

fn t3_5(cfg: &Configuration) -> Outcome {
    let v = cfg.triangle().vertices();
    let centers: [(&str, Option<&HPoint>, usize, usize); 6] = [
        ("Q", Some(&cfg.q), 0, family::Q),
        ("Q'", Some(&cfg.q_prime), 1, family::Q_PRIME),
        ("G", Some(&cfg.g), 2, family::CENTROID),
        ("X", cfg.x.as_ref(), 3, family::X),
        ("P", Some(&cfg.p), 4, family::P),
        ("P'", Some(&cfg.p_prime), 5, family::P_PRIME),
    ];
    for (name, center, image, trace) in centers {
        let (Some(center), Some(images), Some(traces)) = (
            center,
            cfg.images[image].as_ref(),
            cfg.traces[trace].as_ref(),
        ) else {
            continue;
        };
        for i in 0..3 {
            check_collinear!(
                format!("vertex {} with {name}", VERTEX[i]),
                &[&v[i], &images[i], center, &traces[i]]
            );
        }
    }
    Ok(Verdict::Pass)
}

fn t3_6(cfg: &Configuration) -> Outcome {
    check_same!("T_P(Q')", &cfg.t_p.apply(&cfg.q_prime), &cfg.p);
    Ok(Verdict::Pass)
}

fn t3_7(cfg: &Configuration) -> Outcome {
    let Some(x) = &cfg.x else {
        return Ok(Verdict::Fail("ceva conjugate X undefined".into()));
    };
    let line = join(&cfg.p, &cfg.q_prime).ok();
    match classify_homothety(&cfg.s) {
        HomothetyClass::Homothety { center, .. } => {
            check_same!("center of T_P T_P'", &center, x);
            if let Some(l) = &line {
                require!(l.contains(&center), "center {center} off line PQ' {l}");
            }
        }
        HomothetyClass::Translation { direction } => {
            check_same!("direction of T_P T_P'", &direction, x);
            if let Some(l) = &line {
                require!(
                    l.contains(&direction),
                    "direction {direction} not along PQ' {l}"
                );
            }
        }
        HomothetyClass::Other => {
            return Ok(Verdict::Fail(format!(
                "T_P T_P' is not a dilation: {:?}",
                cfg.s
            )));
        }
    }
    Ok(Verdict::Pass)
}

fn t3_8(cfg: &Configuration) -> Outcome {
    let v = cfg.triangle().vertices();
    let def = cfg.def();
    let anti = match anticevian_triangle(cfg.triangle(), &cfg.q) {
        Ok(a) => a,
        Err(_) => skip!("anticevian triangle of Q has a vertex at infinity"),
    };
    let lines = (0..3)
        .map(|i| {
            let (j, k) = others(i);
            parallel_through(&v[i], &join(&def[j], &def[k])?)
        })
        .collect::<Result<Vec<_>>>()?;
    for i in 0..3 {
        let (j, k) = others(i);
        let corner = meet(&lines[j], &lines[k])?;
        check_same!(format!("corner opposite {}", VERTEX[i]), &corner, &anti[i]);
    }
    Ok(Verdict::Pass)
}

fn t3_9(cfg: &Configuration) -> Outcome {
    let Some(x) = &cfg.x else {
        return Ok(Verdict::Fail("ceva conjugate X undefined".into()));
    };
    let fixed = match classify_homothety(&cfg.s) {
        HomothetyClass::Homothety { center, .. } => center,
        HomothetyClass::Translation { direction } => direction,
        HomothetyClass::Other => return Ok(Verdict::Fail("T_P T_P' is not a dilation".into())),
    };
    check_same!("fixed point of T_P T_P'", &fixed, x);
    let anti = match anticevian_triangle(cfg.triangle(), &cfg.q) {
        Ok(a) => a,
        Err(_) => skip!("anticevian triangle of Q has a vertex at infinity"),
    };
    let map = AffineMap::from_correspondence(&anti, cfg.def())?;
    require!(
        map == cfg.s,
        "map from anticevian triangle of Q to DEF differs from T_P T_P'"
    );
    for i in 0..3 {
        check_collinear!(
            format!("perspectivity at {}", VERTEX[i]),
            &[&anti[i], &cfg.def()[i], x]
        );
    }
    Ok(Verdict::Pass)
}

fn c3_10(cfg: &Configuration) -> Outcome {
    let (Some(x), Some(xp)) = (&cfg.x, &cfg.x_prime) else {
        return Ok(Verdict::Fail("ceva conjugates X, X' undefined".into()));
    };
    require!(
        x.is_infinite() == xp.is_infinite(),
        "X = {x} and X' = {xp} differ in finiteness"
    );
    check_same!("T_P(X')", &cfg.t_p.apply(xp), x);
    check_same!("T_P'(X)", &cfg.t_p_prime.apply(x), xp);
    let anti = match anticevian_triangle(cfg.triangle(), &cfg.q) {
        Ok(a) => a,
        Err(_) => skip!("anticevian triangle of Q has a vertex at infinity"),
    };
    let pulled = cfg.t_p_prime.invert().apply_all(cfg.triangle().vertices());
    for i in 0..3 {
        check_same!(
            format!("inverse image of {}", VERTEX[i]),
            &pulled[i],
            &anti[i]
        );
    }
    Ok(Verdict::Pass)
}

fn t3_11(cfg: &Configuration) -> Outcome {
    if cfg.on_steiner() {
        skip!("P lies on the Steiner circumellipse");
    }
    if cfg.p_infinite() {
        // T_P then fixes the whole trilinear polar of P, which passes through Q
        skip!("P is infinite, so Q' = P and T_P fixes a line");
    }
    let fp = fixed_points(&cfg.t_p);
    require!(
        fp.kind == FixedPointKind::UniquePoint,
        "fixed point kind {:?}",
        fp.kind
    );
    check_same!(
        "fixed point of T_P",
        fp.point.as_ref().expect("unique point"),
        &cfg.q
    );
    Ok(Verdict::Pass)
}

fn r3_11(cfg: &Configuration) -> Outcome {
    if !cfg.on_steiner() {
        skip!("P is off the Steiner circumellipse");
    }
    let fp = fixed_points(&cfg.t_p);
    require!(
        fp.kind == FixedPointKind::NoOrdinaryFixedPoint,
        "fixed point kind {:?}",
        fp.kind
    );
    let g_image = cfg.t_p.apply(&cfg.g);
    let line = join(&cfg.g, &g_image)?;
    let moved = cfg.t_p.apply_line(&line);
    require!(moved == line, "line {line} maps to {moved}");
    if let Some(inv) = &fp.invariant_line {
        require!(
            *inv == line,
            "reported invariant line {inv} differs from {line}"
        );
    }
    Ok(Verdict::Pass)
}

fn t3_12(cfg: &Configuration) -> Outcome {
    let anti = match anticevian_triangle(cfg.triangle(), &cfg.q) {
        Ok(a) => a,
        Err(_) => skip!("anticevian triangle of Q has a vertex at infinity"),
    };
    let [a, b, c] = anti;
    let t = Triangle::new(a, b, c)?;
    let ctx = ConjugacyContext::new(t.clone());
    let q_in = t.point_to_bary(&cfg.q);
    let ic = match ctx.isotomcomplement(&q_in) {
        Ok(b) => b,
        Err(e) => skip!("Q has no isotomcomplement in its anticevian triangle: {e}"),
    };
    check_same!(
        "isotomcomplement of Q in anticevian triangle",
        &t.bary_to_point(&ic),
        &cfg.q_prime
    );
    Ok(Verdict::Pass)
}

fn t3_13(cfg: &Configuration) -> Outcome {
    let anticomplement = AffineMap::homothety(&cfg.g, &int(-2))?;
    let equal = cfg.s == anticomplement;
    if cfg.on_steiner() {
        require!(
            equal,
            "P on the Steiner circumellipse but T_P T_P' = {:?}",
            cfg.s
        );
    } else {
        require!(
            !equal,
            "P off the Steiner circumellipse but T_P T_P' is the anticomplement map"
        );
    }
    Ok(Verdict::Pass)
}

fn c3_14(cfg: &Configuration) -> Outcome {
    if !cfg.on_steiner() {
        skip!("P is off the Steiner circumellipse");
    }
    let anticomplementary = cfg.ctx.anticomplementary().vertices();
    for (label, fam) in [("Q", 2), ("P'", 3)] {
        let Some(images) = &cfg.images[fam] else {
            return Ok(Verdict::Fail(format!(
                "images of traces of {label} undefined"
            )));
        };
        for i in 0..3 {
            check_same!(
                format!("image of trace of {label} at {}", VERTEX[i]),
                &images[i],
                &anticomplementary[i]
            );
        }
    }
    let anti_q = anticevian_triangle(cfg.triangle(), &cfg.q)?;
    for i in 0..3 {
        check_same!(
            format!("anticevian vertex {} of Q", VERTEX[i]),
            &anti_q[i],
            &cfg.complement_point(&cfg.def()[i])
        );
    }
    let anti_qp = anticevian_triangle(cfg.triangle(), &cfg.q_prime)?;
    for i in 0..3 {
        check_same!(
            format!("anticevian vertex {} of Q'", VERTEX[i]),
            &anti_qp[i],
            &cfg.side_midpoints_prime[i]
        );
    }
    Ok(Verdict::Pass)
}

fn f1_f2(cfg: &Configuration) -> Outcome {
    let ctx = &cfg.ctx;
    let p = cfg.p_bary();
    let phi = match ctx.cyclocevian(&p) {
        Ok(phi) => phi,
        Err(e @ GeometryError::NonConcurrent) => return Err(e),
        Err(e) => skip!("cyclocevian conjugate undefined: {e}"),
    };
    let one = match ctx.formula_one(&p) {
        Ok(b) => b,
        Err(e) => skip!("first formula undefined: {e}"),
    };
    let two = match ctx.formula_two(&p) {
        Ok(b) => b,
        Err(e) => skip!("second formula undefined: {e}"),
    };
    require!(one == phi, "first formula {one}, construction {phi}");
    require!(two == phi, "second formula {two}, construction {phi}");
    // the six traces lie on one circle
    if let Ok(traces) = cevian_triangle(cfg.triangle(), &ctx.point(&phi)) {
        let circle =
            crate::conic::circle_through_three(&cfg.def()[0], &cfg.def()[1], &cfg.def()[2])?;
        for t in &traces {
            require!(
                circle.contains(t),
                "trace {t} of conjugate off the circle, residue {}",
                circle.residue(t)
            );
        }
    }
    Ok(Verdict::Pass)
}
