//! Bloch-disk figures: a unit circle with arrows, rendered to SVG.
//!
//! The disk is a parallel projection of the Bloch sphere onto a plane
//! given by two orthonormal axes, X-Z by default since every construction
//! of interest lives in a single plane. SVG pixel y grows downward, so
//! the second plane axis is negated: an arrow `v` ends at
//! `center + radius * (v.e1, -(v.e2))`.

use std::fmt::Write as _;

use bloch_povm::tolerance::EPS_NORM;
use bloch_povm::Vec3;

/// Visual role of an arrow.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArrowStyle {
    /// A quantum state (black, heavy).
    State,
    /// A measurement element (gray).
    Povm,
    /// The inconclusive element of a discrimination design (light, dashed).
    Inconclusive,
}

impl ArrowStyle {
    fn class(self) -> &'static str {
        match self {
            ArrowStyle::State => "state",
            ArrowStyle::Povm => "povm",
            ArrowStyle::Inconclusive => "inconclusive",
        }
    }

    fn stroke(self) -> &'static str {
        match self {
            ArrowStyle::State => "#111111",
            ArrowStyle::Povm => "#808080",
            ArrowStyle::Inconclusive => "#b0b0b0",
        }
    }
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum FigureError {
    #[error("projection plane axes must be orthonormal")]
    PlaneNotOrthonormal,
    #[error("canvas and radius must be positive")]
    BadGeometry,
    #[error("arrow {index} endpoint falls outside the canvas")]
    ArrowOutsideCanvas { index: usize },
}

/// A fully specified figure: projection plane, arrows, and pixel geometry.
#[derive(Debug, Clone, PartialEq)]
pub struct FigureSpec {
    plane: (Vec3, Vec3),
    arrows: Vec<(Vec3, ArrowStyle)>,
    canvas_px: f64,
    radius_px: f64,
}

impl FigureSpec {
    /// Default square canvas edge, in pixels.
    pub const DEFAULT_CANVAS_PX: f64 = 480.0;

    /// The X-Z projection used throughout.
    pub fn default_plane() -> (Vec3, Vec3) {
        (Vec3::X, Vec3::Z)
    }

    pub fn new(
        arrows: Vec<(Vec3, ArrowStyle)>,
        plane: (Vec3, Vec3),
        canvas_px: f64,
        radius_px: f64,
    ) -> Result<Self, FigureError> {
        if !(canvas_px > 0.0 && radius_px > 0.0) {
            return Err(FigureError::BadGeometry);
        }
        if (plane.0.norm() - 1.0).abs() > EPS_NORM
            || (plane.1.norm() - 1.0).abs() > EPS_NORM
            || plane.0.dot(plane.1).abs() > EPS_NORM
        {
            return Err(FigureError::PlaneNotOrthonormal);
        }
        let spec = FigureSpec {
            plane,
            arrows,
            canvas_px,
            radius_px,
        };
        let half = canvas_px / 2.0;
        for (index, (v, _)) in spec.arrows.iter().enumerate() {
            let (u, w) = spec.project(*v);
            if u.abs() * radius_px > half || w.abs() * radius_px > half {
                return Err(FigureError::ArrowOutsideCanvas { index });
            }
        }
        Ok(spec)
    }

    /// Pick the largest unit-circle radius that keeps every arrow (and
    /// the circle itself) inside the canvas with a small margin.
    pub fn fit(
        arrows: Vec<(Vec3, ArrowStyle)>,
        plane: (Vec3, Vec3),
        canvas_px: f64,
    ) -> Result<Self, FigureError> {
        let probe = FigureSpec {
            plane,
            arrows,
            canvas_px,
            radius_px: 1.0,
        };
        let reach = probe
            .arrows
            .iter()
            .map(|(v, _)| {
                let (u, w) = probe.project(*v);
                (u * u + w * w).sqrt()
            })
            .fold(1.0, f64::max);
        let radius = (canvas_px / 2.0 - canvas_px / 20.0) / reach;
        Self::new(probe.arrows, plane, canvas_px, radius)
    }

    pub fn arrows(&self) -> &[(Vec3, ArrowStyle)] {
        &self.arrows
    }

    pub fn canvas_px(&self) -> f64 {
        self.canvas_px
    }

    pub fn radius_px(&self) -> f64 {
        self.radius_px
    }

    /// Plane coordinates of a vector: components along the two axes.
    fn project(&self, v: Vec3) -> (f64, f64) {
        (v.dot(self.plane.0), v.dot(self.plane.1))
    }

    /// Pixel coordinates of an arrow tip.
    pub fn tip_px(&self, v: Vec3) -> (f64, f64) {
        let center = self.canvas_px / 2.0;
        let (u, w) = self.project(v);
        (center + self.radius_px * u, center - self.radius_px * w)
    }
}

/// Render the figure as a standalone SVG string. Output is a pure
/// function of the spec: same input, same bytes.
pub fn render_svg(fig: &FigureSpec) -> String {
    let size = fig.canvas_px();
    let center = size / 2.0;
    let r = fig.radius_px();

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{size:.0}" height="{size:.0}" viewBox="0 0 {size:.0} {size:.0}">"#,
    );
    out.push_str("<defs>\n");
    for style in [
        ArrowStyle::State,
        ArrowStyle::Povm,
        ArrowStyle::Inconclusive,
    ] {
        let _ = writeln!(
            out,
            r#"<marker id="tip-{cls}" markerWidth="10" markerHeight="8" refX="8" refY="4" orient="auto" markerUnits="userSpaceOnUse"><path d="M0,0 L8,4 L0,8 z" fill="{color}"/></marker>"#,
            cls = style.class(),
            color = style.stroke(),
        );
    }
    out.push_str("</defs>\n");

    // Faint axes of the projection plane, then the unit circle.
    let _ = writeln!(
        out,
        r##"<line class="axis" x1="{a:.2}" y1="{c:.2}" x2="{b:.2}" y2="{c:.2}" stroke="#dddddd" stroke-width="1"/>"##,
        a = center - r,
        b = center + r,
        c = center,
    );
    let _ = writeln!(
        out,
        r##"<line class="axis" x1="{c:.2}" y1="{a:.2}" x2="{c:.2}" y2="{b:.2}" stroke="#dddddd" stroke-width="1"/>"##,
        a = center - r,
        b = center + r,
        c = center,
    );
    let _ = writeln!(
        out,
        r##"<circle class="bloch-circle" cx="{center:.2}" cy="{center:.2}" r="{r:.2}" fill="none" stroke="#999999" stroke-width="1.5"/>"##,
    );

    for (v, style) in fig.arrows() {
        let (x2, y2) = fig.tip_px(*v);
        let dash = if *style == ArrowStyle::Inconclusive {
            r#" stroke-dasharray="6 4""#
        } else {
            ""
        };
        let _ = writeln!(
            out,
            r#"<line class="arrow {cls}" x1="{cx:.2}" y1="{cy:.2}" x2="{x2:.2}" y2="{y2:.2}" stroke="{color}" stroke-width="2.5"{dash} marker-end="url(#tip-{cls})"/>"#,
            cls = style.class(),
            color = style.stroke(),
            cx = center,
            cy = center,
        );
    }

    out.push_str("</svg>\n");
    out
}
