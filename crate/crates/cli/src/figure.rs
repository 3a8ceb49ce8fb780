//! SVG renderings of the named configurations. Coordinates are converted to
//! floating point here and nowhere else.

use std::fmt::Write as _;

use cevian_core::projective::{join, midpoint, HLine};
use cevian_core::{cevian_triangle, circle_through_three, Configuration, HPoint, Scalar};
use num_traits::ToPrimitive;

pub const FIGURES: &[&str] = &[
    "midpoint_lines",
    "midpoint_perspectivity",
    "half_turn",
    "lemma_parallel",
    "fixed_point",
    "collinearity",
    "cyclocevian",
];

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FigureError {
    UnknownFigure(String),
    /// A point the figure needs is undefined or at infinity.
    Missing(String),
}

impl std::fmt::Display for FigureError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            FigureError::UnknownFigure(id) => {
                write!(
                    f,
                    "unknown figure {id:?} (expected one of {})",
                    FIGURES.join(", ")
                )
            }
            FigureError::Missing(name) => write!(f, "point {name} is undefined or at infinity"),
        }
    }
}

type Fig<T> = Result<T, FigureError>;

const SIZE: f64 = 800.0;
const MARGIN: f64 = 40.0;
const PALETTE: [&str; 6] = [
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b",
];

fn f(x: &Scalar) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

fn xy(p: &HPoint) -> Option<(f64, f64)> {
    p.cartesian().map(|(x, y)| (f(&x), f(&y)))
}

enum Item {
    Line(HLine, &'static str, bool),
    Segment((f64, f64), (f64, f64), &'static str),
    Polygon(Vec<(f64, f64)>, &'static str),
    Circle((f64, f64), f64, &'static str),
    Dot((f64, f64), String, &'static str),
}

/// Collects drawable items; the view box is fitted to all labeled points.
struct Canvas {
    title: String,
    items: Vec<Item>,
    anchors: Vec<(f64, f64)>,
}

impl Canvas {
    fn new(title: &str) -> Self {
        Self {
            title: title.into(),
            items: Vec::new(),
            anchors: Vec::new(),
        }
    }

    fn point(&mut self, name: &str, p: &HPoint, color: &'static str) -> Fig<(f64, f64)> {
        let at = xy(p).ok_or_else(|| FigureError::Missing(name.into()))?;
        self.anchors.push(at);
        self.items.push(Item::Dot(at, name.into(), color));
        Ok(at)
    }

    fn opt_point(
        &mut self,
        name: &str,
        p: Option<&HPoint>,
        color: &'static str,
    ) -> Fig<(f64, f64)> {
        self.point(
            name,
            p.ok_or_else(|| FigureError::Missing(name.into()))?,
            color,
        )
    }

    fn line(&mut self, a: &HPoint, b: &HPoint, color: &'static str) {
        if let Ok(l) = join(a, b) {
            self.items.push(Item::Line(l, color, false));
        }
    }

    fn dashed(&mut self, a: &HPoint, b: &HPoint, color: &'static str) {
        if let Ok(l) = join(a, b) {
            self.items.push(Item::Line(l, color, true));
        }
    }

    fn segment(&mut self, a: &HPoint, b: &HPoint, color: &'static str) {
        if let (Some(a), Some(b)) = (xy(a), xy(b)) {
            self.items.push(Item::Segment(a, b, color));
        }
    }

    fn triangle(&mut self, v: &[HPoint; 3], color: &'static str) {
        let pts: Option<Vec<(f64, f64)>> = v.iter().map(xy).collect();
        if let Some(pts) = pts {
            self.anchors.extend(&pts);
            self.items.push(Item::Polygon(pts, color));
        }
    }

    fn circle(&mut self, center: (f64, f64), r: f64, color: &'static str) {
        self.items.push(Item::Circle(center, r, color));
    }

    fn render(&self) -> String {
        let (mut x0, mut y0, mut x1, mut y1) = (f64::MAX, f64::MAX, f64::MIN, f64::MIN);
        for &(x, y) in &self.anchors {
            x0 = x0.min(x);
            y0 = y0.min(y);
            x1 = x1.max(x);
            y1 = y1.max(y);
        }
        if self.anchors.is_empty() {
            (x0, y0, x1, y1) = (-1.0, -1.0, 1.0, 1.0);
        }
        let span = (x1 - x0).max(y1 - y0).max(1e-9);
        let scale = (SIZE - 2.0 * MARGIN) / span;
        let cx = (x0 + x1) / 2.0;
        let cy = (y0 + y1) / 2.0;
        let to_screen =
            |(x, y): (f64, f64)| ((x - cx) * scale + SIZE / 2.0, SIZE / 2.0 - (y - cy) * scale);
        // world-space extent of the view, used to clip full lines
        let half = SIZE / 2.0 / scale;
        let view = (cx - half, cy - half, cx + half, cy + half);

        let mut s = String::new();
        let _ = writeln!(s, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
        let _ = writeln!(
            s,
            r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#
        );
        let _ = writeln!(s, "<title>{}</title>", self.title);
        let _ = writeln!(s, r##"<rect width="100%" height="100%" fill="#ffffff"/>"##);
        for item in &self.items {
            match item {
                Item::Line(l, color, dashed) => {
                    if let Some((a, b)) = clip(l, view) {
                        let (a, b) = (to_screen(a), to_screen(b));
                        let dash = if *dashed {
                            r#" stroke-dasharray="6 4""#
                        } else {
                            ""
                        };
                        let _ = writeln!(
                            s,
                            r#"<line x1="{:.3}" y1="{:.3}" x2="{:.3}" y2="{:.3}" stroke="{color}" stroke-width="1"{dash}/>"#,
                            a.0, a.1, b.0, b.1
                        );
                    }
                }
                Item::Segment(a, b, color) => {
                    let (a, b) = (to_screen(*a), to_screen(*b));
                    let _ = writeln!(
                        s,
                        r#"<line x1="{:.3}" y1="{:.3}" x2="{:.3}" y2="{:.3}" stroke="{color}" stroke-width="2"/>"#,
                        a.0, a.1, b.0, b.1
                    );
                }
                Item::Polygon(pts, color) => {
                    let coords: Vec<String> = pts
                        .iter()
                        .map(|&p| {
                            let (x, y) = to_screen(p);
                            format!("{x:.3},{y:.3}")
                        })
                        .collect();
                    let _ = writeln!(
                        s,
                        r#"<polygon points="{}" fill="none" stroke="{color}" stroke-width="2"/>"#,
                        coords.join(" ")
                    );
                }
                Item::Circle(c, r, color) => {
                    let (x, y) = to_screen(*c);
                    let _ = writeln!(
                        s,
                        r#"<circle cx="{x:.3}" cy="{y:.3}" r="{:.3}" fill="none" stroke="{color}" stroke-width="1.5"/>"#,
                        r * scale
                    );
                }
                Item::Dot(p, name, color) => {
                    let (x, y) = to_screen(*p);
                    let _ = writeln!(
                        s,
                        r#"<circle cx="{x:.3}" cy="{y:.3}" r="3" fill="{color}"/>"#
                    );
                    let _ = writeln!(
                        s,
                        r#"<text x="{:.3}" y="{:.3}" font-family="serif" font-size="14" fill="{color}">{}</text>"#,
                        x + 5.0,
                        y - 5.0,
                        label(name)
                    );
                }
            }
        }
        s.push_str("</svg>\n");
        s
    }
}

/// `A0'` becomes `A₀′`; a trailing lowercase letter becomes a subscript span.
fn label(name: &str) -> String {
    let mut out = String::new();
    let mut chars = name.chars().peekable();
    if let Some(first) = chars.next() {
        out.push(first);
    }
    for c in chars {
        match c {
            '0'..='9' => out.push(char::from_u32('₀' as u32 + c.to_digit(10).unwrap()).unwrap()),
            '\'' => out.push('′'),
            'a'..='z' => {
                let _ = write!(
                    out,
                    r#"<tspan baseline-shift="sub" font-size="10">{c}</tspan>"#
                );
            }
            _ => out.push(c),
        }
    }
    out
}

/// Portion of `l` inside the axis-aligned box.
fn clip(l: &HLine, (x0, y0, x1, y1): (f64, f64, f64, f64)) -> Option<((f64, f64), (f64, f64))> {
    let [a, b, c] = l.coords().map(|v| f(&v));
    if l.is_infinity() {
        return None;
    }
    let mut hits: Vec<(f64, f64)> = Vec::new();
    if b.abs() > 1e-12 {
        for x in [x0, x1] {
            let y = -(a * x + c) / b;
            if (y0..=y1).contains(&y) {
                hits.push((x, y));
            }
        }
    }
    if a.abs() > 1e-12 {
        for y in [y0, y1] {
            let x = -(b * y + c) / a;
            if (x0..=x1).contains(&x) {
                hits.push((x, y));
            }
        }
    }
    hits.sort_by(|p, q| p.partial_cmp(q).expect("finite"));
    hits.dedup();
    (hits.len() >= 2).then(|| (hits[0], hits[hits.len() - 1]))
}

fn base_triangle(cv: &mut Canvas, cfg: &Configuration) -> Fig<()> {
    let v = cfg.triangle().vertices();
    cv.triangle(v, "#000000");
    for (name, p) in ["A", "B", "C"].iter().zip(v) {
        cv.point(name, p, "#000000")?;
    }
    Ok(())
}

fn cevian_triangle_of_p(cv: &mut Canvas, cfg: &Configuration, color: &'static str) -> Fig<()> {
    let def = cfg.def();
    cv.triangle(def, color);
    for (name, p) in ["D", "E", "F"].iter().zip(def) {
        cv.point(name, p, color)?;
    }
    Ok(())
}

fn medial_triangle(cv: &mut Canvas, cfg: &Configuration, color: &'static str) -> Fig<()> {
    let m0 = cfg.ctx.medial().vertices();
    cv.triangle(m0, color);
    for (name, p) in ["D0", "E0", "F0"].iter().zip(m0) {
        cv.point(name, p, color)?;
    }
    Ok(())
}

fn midpoint_lines(cfg: &Configuration) -> Fig<Canvas> {
    let mut cv = Canvas::new("Midpoints of cevians and the medial triangle");
    base_triangle(&mut cv, cfg)?;
    cevian_triangle_of_p(&mut cv, cfg, PALETTE[0])?;
    medial_triangle(&mut cv, cfg, PALETTE[2])?;
    cv.point("P", &cfg.p, PALETTE[1])?;
    cv.point("Q", &cfg.q, PALETTE[3])?;
    let m0 = cfg.ctx.medial().vertices();
    let v = cfg.triangle().vertices();
    for (i, name) in ["Md", "Me", "Mf"].iter().enumerate() {
        cv.point(name, &cfg.cevian_midpoints[i], PALETTE[4])?;
        cv.segment(&v[i], &cfg.def()[i], PALETTE[0]);
        cv.line(&m0[i], &cfg.q, PALETTE[3]);
    }
    Ok(cv)
}

fn midpoint_perspectivity(cfg: &Configuration) -> Fig<Canvas> {
    let mut cv = Canvas::new("Midpoint perspectivity");
    base_triangle(&mut cv, cfg)?;
    cevian_triangle_of_p(&mut cv, cfg, PALETTE[0])?;
    medial_triangle(&mut cv, cfg, PALETTE[2])?;
    let v = cfg.triangle().vertices();
    let def = cfg.def();
    let md = &cfg.cevian_midpoints;
    let m0 = cfg.ctx.medial().vertices();
    let missing = |n: &str| FigureError::Missing(n.into());
    let ab = midpoint(&v[0], &def[1]).map_err(|_| missing("Ab"))?;
    let ac = midpoint(&v[0], &def[2]).map_err(|_| missing("Ac"))?;
    cv.point("Ab", &ab, PALETTE[1])?;
    cv.point("Ac", &ac, PALETTE[1])?;
    cv.point("Me", &md[1], PALETTE[4])?;
    cv.point("Mf", &md[2], PALETTE[4])?;
    cv.triangle(&[ab.clone(), m0[1].clone(), md[1].clone()], PALETTE[3]);
    cv.triangle(&[ac.clone(), m0[2].clone(), md[2].clone()], PALETTE[5]);
    cv.dashed(&ab, &ac, PALETTE[1]);
    cv.dashed(&m0[1], &m0[2], PALETTE[1]);
    cv.dashed(&md[1], &md[2], PALETTE[1]);
    for (name, o) in ["Oa", "Ob", "Oc"].iter().zip(&cfg.o) {
        cv.opt_point(name, o.as_ref(), PALETTE[1])?;
    }
    if let (Some(a), Some(b)) = (&cfg.o[0], &cfg.o[1]) {
        cv.line(a, b, PALETTE[3]);
    }
    Ok(cv)
}

fn half_turn(cfg: &Configuration) -> Fig<Canvas> {
    let mut cv = Canvas::new("Quadrilateral half-turn");
    base_triangle(&mut cv, cfg)?;
    let v = cfg.triangle().vertices();
    let d0 = &cfg.ctx.medial().vertices()[0];
    cv.point("P", &cfg.p, PALETTE[0])?;
    cv.point("P'", &cfg.p_prime, PALETTE[1])?;
    cv.point("Q", &cfg.q, PALETTE[0])?;
    cv.point("Q'", &cfg.q_prime, PALETTE[1])?;
    cv.point("D0", d0, "#000000")?;
    cv.point("N1", &cfg.half_turn_centers[0], PALETTE[3])?;
    cv.point("A0", &cfg.side_midpoints[0], PALETTE[0])?;
    cv.point("A0'", &cfg.side_midpoints_prime[0], PALETTE[1])?;
    cv.point("Md", &cfg.cevian_midpoints[0], PALETTE[0])?;
    cv.point("Md'", &cfg.cevian_midpoints_prime[0], PALETTE[1])?;
    cv.opt_point("R", cfg.r.as_ref().map(|r| &r[0]), PALETTE[0])?;
    cv.opt_point("R'", cfg.r_prime.as_ref().map(|r| &r[0]), PALETTE[1])?;
    for (a, b) in [
        (&v[0], &cfg.p),
        (&v[0], &cfg.q),
        (d0, &cfg.q),
        (d0, &cfg.side_midpoints[0]),
    ] {
        cv.line(a, b, PALETTE[0]);
    }
    for (a, b) in [
        (d0, &cfg.q_prime),
        (d0, &cfg.side_midpoints_prime[0]),
        (&v[0], &cfg.p_prime),
        (&v[0], &cfg.q_prime),
    ] {
        cv.dashed(a, b, PALETTE[1]);
    }
    cv.segment(&v[0], d0, PALETTE[3]);
    cv.segment(
        &cfg.side_midpoints[0],
        &cfg.side_midpoints_prime[0],
        PALETTE[3],
    );
    Ok(cv)
}

fn lemma_parallel(cfg: &Configuration) -> Fig<Canvas> {
    let mut cv = Canvas::new("Parallel through the trace");
    base_triangle(&mut cv, cfg)?;
    cevian_triangle_of_p(&mut cv, cfg, PALETTE[0])?;
    let v = cfg.triangle().vertices();
    let def = cfg.def();
    // X on EF with FX/XE = BD/DC
    let bd = cevian_core::signed_ratio(&v[1], &v[2], &def[0])
        .map_err(|_| FigureError::Missing("D".into()))?;
    let (fx, fy) = def[2]
        .cartesian()
        .ok_or_else(|| FigureError::Missing("F".into()))?;
    let (ex, ey) = def[1]
        .cartesian()
        .ok_or_else(|| FigureError::Missing("E".into()))?;
    let s = Scalar::from_integer(1.into()) + &bd;
    let x = HPoint::ordinary((fx + &bd * ex) / &s, (fy + &bd * ey) / &s);
    cv.point("X", &x, PALETTE[1])?;
    cv.point("A0", &cfg.side_midpoints[0], PALETTE[2])?;
    cv.line(&v[0], &cfg.side_midpoints[0], PALETTE[2]);
    cv.line(&def[0], &x, PALETTE[1]);
    Ok(cv)
}

fn fixed_point(cfg: &Configuration) -> Fig<Canvas> {
    let mut cv = Canvas::new("Fixed point of the cevian map");
    base_triangle(&mut cv, cfg)?;
    cevian_triangle_of_p(&mut cv, cfg, PALETTE[0])?;
    let v = cfg.triangle().vertices();
    cv.point("P", &cfg.p, PALETTE[0])?;
    cv.point("Q", &cfg.q, PALETTE[3])?;
    for (i, name) in ["A0", "B0", "C0"].iter().enumerate() {
        cv.point(name, &cfg.side_midpoints[i], PALETTE[2])?;
        cv.line(&v[i], &cfg.side_midpoints[i], PALETTE[2]);
    }
    let image = cfg.t_p.apply(&cfg.p_prime);
    cv.point("P'", &cfg.p_prime, PALETTE[1])?;
    cv.point("T(P')", &image, PALETTE[1])?;
    if let Some(a3) = &cfg.images[3] {
        cv.point("A3", &a3[0], PALETTE[1])?;
        cv.dashed(&cfg.def()[0], &a3[0], PALETTE[1]);
    }
    Ok(cv)
}

fn collinearity(cfg: &Configuration) -> Fig<Canvas> {
    let mut cv = Canvas::new("The points A_i and D_i");
    base_triangle(&mut cv, cfg)?;
    cevian_triangle_of_p(&mut cv, cfg, "#7f7f7f")?;
    let a = &cfg.triangle().vertices()[0];
    for i in 0..6 {
        let color = PALETTE[i];
        let (Some(d), Some(img)) = (&cfg.traces[i], &cfg.images[i]) else {
            return Err(FigureError::Missing(format!("D{i}")));
        };
        cv.point(&format!("D{i}"), &d[0], color)?;
        cv.point(&format!("A{i}"), &img[0], color)?;
        cv.line(a, &d[0], color);
    }
    Ok(cv)
}

fn cyclocevian(cfg: &Configuration) -> Fig<Canvas> {
    let mut cv = Canvas::new("Cyclocevian conjugate");
    base_triangle(&mut cv, cfg)?;
    cevian_triangle_of_p(&mut cv, cfg, PALETTE[0])?;
    cv.point("P", &cfg.p, PALETTE[0])?;
    let phi = cfg
        .ctx
        .cyclocevian(&cfg.p_bary())
        .map_err(|_| FigureError::Missing("φ(P)".into()))?;
    let phi = cfg.ctx.point(&phi);
    cv.point("φ(P)", &phi, PALETTE[1])?;
    let other =
        cevian_triangle(cfg.triangle(), &phi).map_err(|_| FigureError::Missing("φ(P)".into()))?;
    for (name, p) in ["D'", "E'", "F'"].iter().zip(&other) {
        cv.point(name, p, PALETTE[1])?;
    }
    let def = cfg.def();
    let circle = circle_through_three(&def[0], &def[1], &def[2])
        .map_err(|_| FigureError::Missing("circle".into()))?;
    let center = circle
        .center()
        .map_err(|_| FigureError::Missing("center".into()))?;
    let c = xy(&center).ok_or_else(|| FigureError::Missing("center".into()))?;
    let d = xy(&def[0]).expect("ordinary trace");
    cv.circle(
        c,
        ((d.0 - c.0).powi(2) + (d.1 - c.1).powi(2)).sqrt(),
        PALETTE[2],
    );
    let v = cfg.triangle().vertices();
    for i in 0..3 {
        cv.segment(&v[i], &other[i], PALETTE[1]);
        cv.segment(&v[i], &def[i], PALETTE[0]);
    }
    Ok(cv)
}

pub fn render(cfg: &Configuration, id: &str) -> Fig<String> {
    let canvas = match id {
        "midpoint_lines" => midpoint_lines(cfg)?,
        "midpoint_perspectivity" => midpoint_perspectivity(cfg)?,
        "half_turn" => half_turn(cfg)?,
        "lemma_parallel" => lemma_parallel(cfg)?,
        "fixed_point" => fixed_point(cfg)?,
        "collinearity" => collinearity(cfg)?,
        "cyclocevian" => cyclocevian(cfg)?,
        other => return Err(FigureError::UnknownFigure(other.into())),
    };
    Ok(canvas.render())
}

#[cfg(test)]
mod tests {
    use super::*;
    use cevian_core::{build_configuration, Bary, Triangle};

    fn cfg(u: i64, v: i64, w: i64) -> Configuration {
        let t = Triangle::from_int_vertices([(0, 0), (6, 0), (1, 5)]).unwrap();
        build_configuration(&t, &t.bary_to_point(&Bary::from_ints(u, v, w))).unwrap()
    }

    #[test]
    fn labels() {
        assert_eq!(label("A0'"), "A₀′");
        assert_eq!(label("N1"), "N₁");
        assert!(label("Md").starts_with("M<tspan"));
    }

    #[test]
    fn half_turn_labels() {
        let svg = render(&cfg(1, 2, 3), "half_turn").unwrap();
        for l in ["N₁", "A₀", "A₀′"] {
            assert!(svg.contains(&format!(">{l}<")), "{l}");
        }
        assert!(svg.ends_with("</svg>\n"));
    }

    #[test]
    fn every_figure_renders_deterministically() {
        let c = cfg(1, 2, 3);
        for id in FIGURES {
            let a = render(&c, id).unwrap();
            assert_eq!(a, render(&c, id).unwrap());
            assert!(a.starts_with("<?xml"));
        }
    }

    #[test]
    fn infinite_point_is_reported() {
        let err = render(&cfg(1, 2, -3), "half_turn").unwrap_err();
        assert_eq!(err, FigureError::Missing("P".into()));
        assert!(matches!(
            render(&cfg(1, 2, 3), "nope"),
            Err(FigureError::UnknownFigure(_))
        ));
    }

    #[test]
    fn clip_horizontal_line() {
        let l = HLine::from_ints(0, 1, -2);
        let (a, b) = clip(&l, (0.0, 0.0, 10.0, 10.0)).unwrap();
        assert_eq!((a, b), ((0.0, 2.0), (10.0, 2.0)));
    }
}
