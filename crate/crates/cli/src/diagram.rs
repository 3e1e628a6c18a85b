//! SVG rendering of a realized scene.

use golden_secant::geometry::{measure_angles, Point2, Realization};
use xmlwriter::{Options, XmlWriter};

/// Drawn radius of the circle, in SVG user units.
pub const CIRCLE_RADIUS: f64 = 100.0;
pub const MARGIN: f64 = 20.0;

/// Maps scene coordinates into the viewport: uniform scale, `y` flipped so
/// that up in the scene is up on screen.
struct Viewport {
    scale: f64,
    min_x: f64,
    max_y: f64,
    width: f64,
    height: f64,
}

impl Viewport {
    fn fit(real: &Realization) -> Self {
        let r = real.config.radius();
        let pts = [real.p, real.t, real.x, real.y];
        let xs = pts.iter().map(|p| p.x).chain([real.w.x - r, real.w.x + r]);
        let ys = pts.iter().map(|p| p.y).chain([real.w.y - r, real.w.y + r]);
        let (min_x, max_x) = xs.fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), v| {
            (lo.min(v), hi.max(v))
        });
        let (min_y, max_y) = ys.fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), v| {
            (lo.min(v), hi.max(v))
        });
        let scale = CIRCLE_RADIUS / r;
        Viewport {
            scale,
            min_x,
            max_y,
            width: (max_x - min_x) * scale + 2.0 * MARGIN,
            height: (max_y - min_y) * scale + 2.0 * MARGIN,
        }
    }

    fn map(&self, p: Point2) -> (f64, f64) {
        (
            (p.x - self.min_x) * self.scale + MARGIN,
            (self.max_y - p.y) * self.scale + MARGIN,
        )
    }
}

fn num(v: f64) -> String {
    let s = format!("{v:.3}");
    if s == "-0.000" {
        "0.000".to_string()
    } else {
        s
    }
}

fn segment(w: &mut XmlWriter, vp: &Viewport, id: &str, from: Point2, to: Point2) {
    let (x1, y1) = vp.map(from);
    let (x2, y2) = vp.map(to);
    w.start_element("line");
    w.write_attribute("id", id);
    w.write_attribute("x1", &num(x1));
    w.write_attribute("y1", &num(y1));
    w.write_attribute("x2", &num(x2));
    w.write_attribute("y2", &num(y2));
    w.end_element();
}

fn label(w: &mut XmlWriter, vp: &Viewport, name: &str, at: Point2) {
    let (cx, cy) = vp.map(at);
    w.start_element("circle");
    w.write_attribute("id", &format!("point-{name}"));
    w.write_attribute("cx", &num(cx));
    w.write_attribute("cy", &num(cy));
    w.write_attribute("r", "2.5");
    w.write_attribute("fill", "black");
    w.end_element();

    w.start_element("text");
    w.write_attribute("id", &format!("label-{name}"));
    w.write_attribute("x", &num(cx + 5.0));
    w.write_attribute("y", &num(cy - 5.0));
    w.write_text(name);
    w.end_element();
}

/// The circle, the segments `pt`, `py`, `tx`, `ty`, the labelled points and
/// an annotation with the angles and `a/b`.
pub fn render_svg(real: &Realization) -> String {
    let vp = Viewport::fit(real);
    let (alpha, beta, gamma) = measure_angles(real).degrees();
    let ratio = real.config.tangent() / real.config.outside_secant();

    let mut w = XmlWriter::new(Options::default());
    w.write_declaration();
    w.start_element("svg");
    w.write_attribute("xmlns", "http://www.w3.org/2000/svg");
    w.write_attribute("version", "1.1");
    w.write_attribute("width", &num(vp.width));
    w.write_attribute("height", &num(vp.height + 30.0));
    w.write_attribute(
        "viewBox",
        &format!("0 0 {} {}", num(vp.width), num(vp.height + 30.0)),
    );

    let (cx, cy) = vp.map(real.w);
    w.start_element("circle");
    w.write_attribute("id", "circle");
    w.write_attribute("cx", &num(cx));
    w.write_attribute("cy", &num(cy));
    w.write_attribute("r", &num(CIRCLE_RADIUS));
    w.write_attribute("fill", "none");
    w.write_attribute("stroke", "black");
    w.end_element();

    w.start_element("g");
    w.write_attribute("stroke", "black");
    w.write_attribute("stroke-width", "1.5");
    segment(&mut w, &vp, "pt", real.p, real.t);
    segment(&mut w, &vp, "py", real.p, real.y);
    segment(&mut w, &vp, "tx", real.t, real.x);
    segment(&mut w, &vp, "ty", real.t, real.y);
    w.end_element();

    w.start_element("g");
    w.write_attribute("font-family", "sans-serif");
    w.write_attribute("font-size", "12");
    for (name, at) in [
        ("p", real.p),
        ("t", real.t),
        ("x", real.x),
        ("y", real.y),
        ("w", real.w),
    ] {
        label(&mut w, &vp, name, at);
    }
    w.end_element();

    w.start_element("text");
    w.write_attribute("id", "annotation");
    w.write_attribute("x", &num(MARGIN));
    w.write_attribute("y", &num(vp.height + 20.0));
    w.write_attribute("font-family", "sans-serif");
    w.write_attribute("font-size", "12");
    w.write_text(&format!(
        "α={alpha:.3}° β={beta:.3}° γ={gamma:.3}° a/b={ratio:.3}"
    ));
    w.end_element();

    w.end_document()
}
