//! SVG pictures of slit domains and developed grids.
//!
//! Coordinates are computed exactly and only converted to decimals when the
//! markup is written, so the output is byte-identical for identical input.

use std::fmt::Write as _;
use std::str::FromStr;

use num_traits::ToPrimitive;
use parslit_core::rational::{format_rational, int, parse_rational};
use parslit_core::uniformizer::Uniformization;
use parslit_core::{ExtRational, ParallelSlitDomain, Rational};

const WIDTH: i64 = 640;
const HEIGHT: i64 = 480;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RenderError {
    #[error("view {0} has an empty interior")]
    EmptyView(String),
    #[error("cannot parse view {0:?}, expected XMIN:XMAX:YMIN:YMAX")]
    BadView(String),
}

/// The window `[xmin, xmax] × [ymin, ymax]` in surface coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct View {
    pub xmin: Rational,
    pub xmax: Rational,
    pub ymin: Rational,
    pub ymax: Rational,
}

impl View {
    pub fn new(xmin: Rational, xmax: Rational, ymin: Rational, ymax: Rational) -> Result<Self, RenderError> {
        let v = Self { xmin, xmax, ymin, ymax };
        if v.xmin >= v.xmax || v.ymin >= v.ymax {
            return Err(RenderError::EmptyView(v.to_string()));
        }
        Ok(v)
    }

    /// Bounding box of the given coordinates, padded by one unit.
    fn around(xs: &[Rational], ys: &[Rational]) -> Self {
        let span = |v: &[Rational]| {
            let lo = v.iter().min().cloned().unwrap_or_else(|| int(0));
            let hi = v.iter().max().cloned().unwrap_or_else(|| int(0));
            (lo - int(1), hi + int(1))
        };
        let ((xmin, xmax), (ymin, ymax)) = (span(xs), span(ys));
        Self { xmin, xmax, ymin, ymax }
    }

    fn px(&self, x: &Rational) -> f64 {
        ((x - &self.xmin) * int(WIDTH) / (&self.xmax - &self.xmin)).to_f64().unwrap_or(f64::NAN)
    }

    fn py(&self, y: &Rational) -> f64 {
        (int(HEIGHT) - (y - &self.ymin) * int(HEIGHT) / (&self.ymax - &self.ymin))
            .to_f64()
            .unwrap_or(f64::NAN)
    }

    fn contains_y(&self, y: &Rational) -> bool {
        &self.ymin <= y && y <= &self.ymax
    }

    /// `[lo, hi] ∩ [min, max]` if it has interior.
    fn clip(lo: &ExtRational, hi: &ExtRational, min: &Rational, max: &Rational) -> Option<(Rational, Rational)> {
        let l = match lo {
            ExtRational::Finite(v) if v > min => v.clone(),
            ExtRational::PosInf => return None,
            _ => min.clone(),
        };
        let r = match hi {
            ExtRational::Finite(v) if v < max => v.clone(),
            ExtRational::NegInf => return None,
            _ => max.clone(),
        };
        (l < r).then_some((l, r))
    }
}

impl std::fmt::Display for View {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}:{}:{}:{}", self.xmin, self.xmax, self.ymin, self.ymax)
    }
}

impl FromStr for View {
    type Err = RenderError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parts: Vec<Rational> = s
            .split(':')
            .map(parse_rational)
            .collect::<Result<_, _>>()
            .map_err(|_| RenderError::BadView(s.to_string()))?;
        let [xmin, xmax, ymin, ymax] = <[Rational; 4]>::try_from(parts).map_err(|_| RenderError::BadView(s.to_string()))?;
        View::new(xmin, xmax, ymin, ymax)
    }
}

/// A leftward slit ending at `tip`; `pair` is the 1-based index of its tip value.
struct Slit {
    level: Rational,
    tip: Rational,
    pair: usize,
}

#[derive(Default)]
struct Scene {
    rects: Vec<(ExtRational, ExtRational, ExtRational, ExtRational)>,
    slits: Vec<Slit>,
    rays: Vec<(ExtRational, ExtRational, Rational)>,
}

/// Numbers tip values `1..` from right to left.
fn pair_index(tips: &[Rational], x: &Rational) -> usize {
    let mut distinct: Vec<&Rational> = tips.iter().collect();
    distinct.sort_by(|p, q| q.cmp(p));
    distinct.dedup();
    distinct.iter().position(|t| *t == x).expect("tip is listed") + 1
}

/// Slit picture of a domain. The slit at level `b_j` ends at the first wall,
/// counted from the right, where the gluing across that level changes.
pub fn render_domain(x: &ParallelSlitDomain, view: Option<&View>) -> Result<String, RenderError> {
    let label = x.label();
    let (a, b) = (x.coords().a(), x.coords().b());
    let h = label.h();
    let mut slits = Vec::with_capacity(2 * h);
    for (j, level) in b.iter().enumerate() {
        // level b_{j+1} is the top of strip j
        if let Some(i) = (1..=h).find(|&i| label.sigma(i).apply(j) != j + 1) {
            slits.push(Slit {
                level: level.clone(),
                tip: a[i - 1].clone(),
                pair: i,
            });
        }
    }
    let view = match view {
        Some(v) => v.clone(),
        None => View::around(a, b),
    };
    Ok(draw(&view, &Scene { slits, ..Scene::default() }))
}

/// The developed cut surface: rectangles, slits and the critical graph.
pub fn render_development(u: &Uniformization, view: Option<&View>) -> Result<String, RenderError> {
    let grid = &u.grid;
    let dev = &u.development;
    let k = dev.graph();
    let tips: Vec<Rational> = k.zeros.iter().map(|z| z.x.clone()).collect();
    let mut scene = Scene::default();
    for c in 0..grid.num_columns() {
        for s in 0..grid.num_strips() {
            let (lo, hi) = dev.y_extent(grid, c, s);
            scene.rects.push((grid.column_left(c), grid.column_right(c), lo, hi));
        }
    }
    for (ray, bank) in k.rays.iter().zip(&dev.banks) {
        let x = &k.zeros[ray.zero].x;
        scene.slits.push(Slit {
            level: bank.lower.clone(),
            tip: x.clone(),
            pair: pair_index(&tips, x),
        });
        for &(c, _) in &ray.segments {
            scene.rays.push((grid.column_left(c), grid.column_right(c), bank.lower.clone()));
        }
    }
    let view = match view {
        Some(v) => v.clone(),
        None => {
            let levels: Vec<Rational> = dev.banks.iter().map(|b| b.lower.clone()).collect();
            View::around(&tips, &levels)
        }
    };
    Ok(draw(&view, &scene))
}

fn draw(view: &View, scene: &Scene) -> String {
    let mut out = String::new();
    let w = &mut out;
    let _ = writeln!(w, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        w,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}">"#
    );
    let _ = writeln!(w, "<desc>view {view}</desc>");
    let _ = writeln!(
        w,
        r#"<rect class="frame" x="0" y="0" width="{WIDTH}" height="{HEIGHT}" fill="white" stroke="black"/>"#
    );

    let _ = writeln!(w, r##"<g class="rectangles" fill="none" stroke="#bbbbbb" stroke-width="0.5">"##);
    for (x0, x1, y0, y1) in &scene.rects {
        let (Some((l, r)), Some((b, t))) = (
            View::clip(x0, x1, &view.xmin, &view.xmax),
            View::clip(y0, y1, &view.ymin, &view.ymax),
        ) else {
            continue;
        };
        let _ = writeln!(
            w,
            r#"<rect class="cell" x="{:.2}" y="{:.2}" width="{:.2}" height="{:.2}"/>"#,
            view.px(&l),
            view.py(&t),
            view.px(&r) - view.px(&l),
            view.py(&b) - view.py(&t)
        );
    }
    let _ = writeln!(w, "</g>");

    let _ = writeln!(w, r#"<g class="slits" stroke="black" stroke-width="2">"#);
    for s in &scene.slits {
        if !view.contains_y(&s.level) {
            continue;
        }
        let Some((l, r)) = View::clip(&ExtRational::NegInf, &ExtRational::Finite(s.tip.clone()), &view.xmin, &view.xmax) else {
            continue;
        };
        let _ = writeln!(
            w,
            r#"<line class="slit" data-level="{}" data-tip="{}" x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}"/>"#,
            format_rational(&s.level),
            format_rational(&s.tip),
            view.px(&l),
            view.py(&s.level),
            view.px(&r),
            view.py(&s.level)
        );
    }
    let _ = writeln!(w, "</g>");

    // the two slits ending at one tip value belong to the same zero
    let mut pairs: Vec<usize> = scene.slits.iter().map(|s| s.pair).collect();
    pairs.sort_unstable();
    pairs.dedup();
    let _ = writeln!(w, r##"<g class="pairs" stroke="#1f5fbf" fill="#1f5fbf" font-family="sans-serif" font-size="12">"##);
    for k in pairs {
        let members: Vec<&Slit> = scene.slits.iter().filter(|s| s.pair == k).collect();
        let tip = &members[0].tip;
        if tip < &view.xmin || tip > &view.xmax {
            continue;
        }
        let (lo, hi) = (
            members.iter().map(|s| &s.level).min().expect("non-empty"),
            members.iter().map(|s| &s.level).max().expect("non-empty"),
        );
        let x = view.px(tip);
        if members.len() > 1 {
            let (b, t) = (lo.max(&view.ymin), hi.min(&view.ymax));
            if b < t {
                let _ = writeln!(
                    w,
                    r#"<line class="link" data-pair="{k}" x1="{x:.2}" y1="{:.2}" x2="{x:.2}" y2="{:.2}" stroke-dasharray="4 3"/>"#,
                    view.py(b),
                    view.py(t)
                );
            }
        }
        for s in members.iter().filter(|s| view.contains_y(&s.level)) {
            let _ = writeln!(
                w,
                r#"<circle class="tip" data-pair="{k}" cx="{x:.2}" cy="{:.2}" r="3"/>"#,
                view.py(&s.level)
            );
        }
        if view.contains_y(hi) {
            let _ = writeln!(
                w,
                r#"<text class="tip-label" x="{:.2}" y="{:.2}">a{k} = {}</text>"#,
                x + 4.0,
                view.py(hi) - 6.0,
                format_rational(tip)
            );
        }
    }
    let _ = writeln!(w, "</g>");

    if !scene.rays.is_empty() {
        let _ = writeln!(w, r##"<g class="critical-graph" stroke="#c0392b" stroke-width="1">"##);
        for (x0, x1, y) in &scene.rays {
            if !view.contains_y(y) {
                continue;
            }
            let Some((l, r)) = View::clip(x0, x1, &view.xmin, &view.xmax) else {
                continue;
            };
            let _ = writeln!(
                w,
                r#"<line class="ray" x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}"/>"#,
                view.px(&l),
                view.py(y),
                view.px(&r),
                view.py(y)
            );
        }
        let _ = writeln!(w, "</g>");
    }
    let _ = writeln!(w, "</svg>");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use parslit_core::fixtures::h1_domain;

    #[test]
    fn view_parsing() {
        let v: View = "-2:1:-1:2".parse().unwrap();
        assert_eq!(v.xmin, int(-2));
        assert!(matches!("1:1:0:2".parse::<View>(), Err(RenderError::EmptyView(_))));
        assert!(matches!("1:2:3".parse::<View>(), Err(RenderError::BadView(_))));
    }

    #[test]
    fn h1_picture() {
        let v: View = "-2:1:-1:2".parse().unwrap();
        let svg = render_domain(&h1_domain(), Some(&v)).unwrap();
        assert_eq!(svg.matches(r#"class="slit""#).count(), 2);
        assert!(svg.contains(r#"data-level="0" data-tip="0""#));
        assert!(svg.contains(r#"data-level="1" data-tip="0""#));
        assert!(svg.contains("a1 = 0"));
        assert_eq!(svg, render_domain(&h1_domain(), Some(&v)).unwrap());
    }
}
