//! Structured output of every named point of a configuration.

use cevian_core::scalar::format_scalar;
use cevian_core::{AffineMap, Configuration, HPoint, Scalar};
use serde_json::{json, Map, Value};

fn num(x: &Scalar) -> Value {
    Value::String(format_scalar(x))
}

/// `{"bary": [...], "cart": [x, y]}`, or `"direction"` for infinite points.
pub fn point_value(cfg: &Configuration, p: &HPoint) -> Value {
    let bary: Vec<Value> = cfg.ctx.bary(p).coords().iter().map(num).collect();
    match p.cartesian() {
        Some((x, y)) => json!({ "bary": bary, "cart": [num(&x), num(&y)] }),
        None => {
            let [dx, dy, _] = p.coords();
            json!({ "bary": bary, "direction": [num(&dx), num(&dy)] })
        }
    }
}

fn map_value(m: &AffineMap) -> Value {
    let linear: Vec<Vec<Value>> = m
        .linear()
        .iter()
        .map(|row| row.iter().map(num).collect())
        .collect();
    let translation: Vec<Value> = m.translation().iter().map(num).collect();
    json!({ "linear": linear, "translation": translation })
}

/// Named points in output order. Undefined points map to `None`.
pub fn named_points(cfg: &Configuration) -> Vec<(String, Option<HPoint>)> {
    let mut out: Vec<(String, Option<HPoint>)> = vec![
        ("P".into(), Some(cfg.p.clone())),
        ("P'".into(), Some(cfg.p_prime.clone())),
        ("Q".into(), Some(cfg.q.clone())),
        ("Q'".into(), Some(cfg.q_prime.clone())),
        ("G".into(), Some(cfg.g.clone())),
        ("X".into(), cfg.x.clone()),
        ("X'".into(), cfg.x_prime.clone()),
    ];
    for (i, fam) in cfg.traces.iter().enumerate() {
        for (k, name) in ["D", "E", "F"].iter().enumerate() {
            out.push((format!("{name}{i}"), fam.as_ref().map(|t| t[k].clone())));
        }
    }
    for (i, fam) in cfg.images.iter().enumerate() {
        for (k, name) in ["A", "B", "C"].iter().enumerate() {
            out.push((format!("{name}{i}"), fam.as_ref().map(|t| t[k].clone())));
        }
    }
    for (k, name) in ["A0'", "B0'", "C0'"].iter().enumerate() {
        out.push((name.to_string(), Some(cfg.side_midpoints_prime[k].clone())));
    }
    for (k, name) in ["Md", "Me", "Mf"].iter().enumerate() {
        out.push((name.to_string(), Some(cfg.cevian_midpoints[k].clone())));
        out.push((
            format!("{name}'"),
            Some(cfg.cevian_midpoints_prime[k].clone()),
        ));
    }
    out.push(("N1".into(), Some(cfg.half_turn_centers[0].clone())));
    out.push(("R".into(), cfg.r.as_ref().map(|r| r[0].clone())));
    out.push(("R'".into(), cfg.r_prime.as_ref().map(|r| r[0].clone())));
    out.push(("M".into(), cfg.m.clone()));
    for (k, name) in ["Oa", "Ob", "Oc"].iter().enumerate() {
        out.push((name.to_string(), cfg.o[k].clone()));
    }
    out
}

pub fn derive_document(cfg: &Configuration) -> Value {
    let mut points = Map::new();
    for (name, p) in named_points(cfg) {
        points.insert(name, p.map_or(Value::Null, |p| point_value(cfg, &p)));
    }
    let triangle: Vec<Value> = cfg
        .triangle()
        .vertices()
        .iter()
        .map(|v| {
            let (x, y) = v.cartesian().expect("ordinary vertex");
            json!([num(&x), num(&y)])
        })
        .collect();
    let flags: Vec<&str> = cfg.flags.iter_names().map(|(n, _)| n).collect();
    json!({
        "triangle": triangle,
        "flags": flags,
        "points": points,
        "maps": {
            "T_P": map_value(&cfg.t_p),
            "T_P'": map_value(&cfg.t_p_prime),
            "S": map_value(&cfg.s),
        },
    })
}
