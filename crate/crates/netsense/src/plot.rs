//! Minimal SVG emitter for Bode panels: magnitude (dB) and phase (degrees)
//! stacked over a shared log-frequency axis. No timestamps or other
//! run-dependent metadata, so identical inputs give identical bytes.

use std::fmt::Write;

/// One curve; `y` pairs with the shared frequency axis.
pub struct Series<'a> {
    pub label: &'a str,
    pub color: &'a str,
    pub y: &'a [f64],
}

const WIDTH: f64 = 860.0;
const PANEL_HEIGHT: f64 = 300.0;
const MARGIN_LEFT: f64 = 70.0;
const MARGIN_RIGHT: f64 = 25.0;
const MARGIN_TOP: f64 = 40.0;
const GAP: f64 = 55.0;
const MARGIN_BOTTOM: f64 = 55.0;

struct Panel {
    x0: f64,
    y0: f64,
    w: f64,
    h: f64,
    lx_min: f64,
    lx_max: f64,
    y_min: f64,
    y_max: f64,
}

impl Panel {
    fn sx(&self, lx: f64) -> f64 {
        self.x0 + (lx - self.lx_min) / (self.lx_max - self.lx_min) * self.w
    }

    fn sy(&self, y: f64) -> f64 {
        self.y0 + self.h - (y - self.y_min) / (self.y_max - self.y_min) * self.h
    }
}

fn finite_range(series: &[Series], fallback: (f64, f64)) -> (f64, f64) {
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for s in series {
        for &v in s.y {
            if v.is_finite() {
                lo = lo.min(v);
                hi = hi.max(v);
            }
        }
    }
    if !(lo.is_finite() && hi.is_finite()) {
        return fallback;
    }
    if lo == hi {
        lo -= 1.0;
        hi += 1.0;
    }
    let pad = 0.05 * (hi - lo);
    (lo - pad, hi + pad)
}

fn polyline(out: &mut String, panel: &Panel, lxs: &[f64], ys: &[f64], color: &str) {
    let mut d = String::new();
    let mut pen_down = false;
    for (lx, y) in lxs.iter().zip(ys) {
        if !y.is_finite() {
            pen_down = false;
            continue;
        }
        let cmd = if pen_down { 'L' } else { 'M' };
        let _ = write!(d, "{}{:.2} {:.2} ", cmd, panel.sx(*lx), panel.sy(*y));
        pen_down = true;
    }
    let _ = writeln!(
        out,
        r#"<path d="{}" fill="none" stroke="{}" stroke-width="1.6"/>"#,
        d.trim_end(),
        color
    );
}

fn axes(out: &mut String, panel: &Panel, y_label: &str, y_ticks: usize) {
    let _ = writeln!(
        out,
        r##"<rect x="{:.2}" y="{:.2}" width="{:.2}" height="{:.2}" fill="none" stroke="#333" stroke-width="1"/>"##,
        panel.x0, panel.y0, panel.w, panel.h
    );
    // Decade ticks and gridlines on the log-frequency axis.
    let first = panel.lx_min.ceil() as i64;
    let last = panel.lx_max.floor() as i64;
    for d in first..=last {
        let x = panel.sx(d as f64);
        let _ = writeln!(
            out,
            r##"<line x1="{x:.2}" y1="{:.2}" x2="{x:.2}" y2="{:.2}" stroke="#ddd" stroke-width="0.8"/>"##,
            panel.y0,
            panel.y0 + panel.h
        );
        let _ = writeln!(
            out,
            r##"<text x="{x:.2}" y="{:.2}" font-size="12" text-anchor="middle" fill="#333">1e{d}</text>"##,
            panel.y0 + panel.h + 18.0
        );
    }
    for t in 0..=y_ticks {
        let v = panel.y_min + (panel.y_max - panel.y_min) * t as f64 / y_ticks as f64;
        let y = panel.sy(v);
        let _ = writeln!(
            out,
            r##"<line x1="{:.2}" y1="{y:.2}" x2="{:.2}" y2="{y:.2}" stroke="#eee" stroke-width="0.8"/>"##,
            panel.x0,
            panel.x0 + panel.w
        );
        let _ = writeln!(
            out,
            r##"<text x="{:.2}" y="{:.2}" font-size="11" text-anchor="end" fill="#333">{v:.1}</text>"##,
            panel.x0 - 6.0,
            y + 4.0
        );
    }
    let _ = writeln!(
        out,
        r##"<text x="{:.2}" y="{:.2}" font-size="12" text-anchor="middle" fill="#333" transform="rotate(-90 {:.2} {:.2})">{y_label}</text>"##,
        panel.x0 - 48.0,
        panel.y0 + panel.h / 2.0,
        panel.x0 - 48.0,
        panel.y0 + panel.h / 2.0
    );
}

/// Renders stacked magnitude/phase panels over log frequency.
///
/// `mag_series` are in dB, `phase_series` in degrees; every series must
/// match `omegas` in length.
pub fn bode_svg(
    title: &str,
    omegas: &[f64],
    mag_series: &[Series],
    phase_series: &[Series],
) -> String {
    let total_h = MARGIN_TOP + PANEL_HEIGHT * 2.0 + GAP + MARGIN_BOTTOM;
    let lxs: Vec<f64> = omegas.iter().map(|w| w.log10()).collect();
    let (lx_min, lx_max) = (
        lxs.first().copied().unwrap_or(0.0),
        lxs.last().copied().unwrap_or(1.0),
    );

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{total_h}" viewBox="0 0 {WIDTH} {total_h}">"#
    );
    let _ = writeln!(
        out,
        r##"<rect width="100%" height="100%" fill="white"/>
<text x="{:.2}" y="24" font-size="16" text-anchor="middle" fill="#111">{title}</text>"##,
        WIDTH / 2.0
    );

    let plot_w = WIDTH - MARGIN_LEFT - MARGIN_RIGHT;
    let (mag_min, mag_max) = finite_range(mag_series, (-60.0, 20.0));
    let mag_panel = Panel {
        x0: MARGIN_LEFT,
        y0: MARGIN_TOP,
        w: plot_w,
        h: PANEL_HEIGHT,
        lx_min,
        lx_max,
        y_min: mag_min,
        y_max: mag_max,
    };
    axes(&mut out, &mag_panel, "magnitude (dB)", 6);
    for s in mag_series {
        polyline(&mut out, &mag_panel, &lxs, s.y, s.color);
    }

    let (ph_min, ph_max) = finite_range(phase_series, (-180.0, 0.0));
    let phase_panel = Panel {
        x0: MARGIN_LEFT,
        y0: MARGIN_TOP + PANEL_HEIGHT + GAP,
        w: plot_w,
        h: PANEL_HEIGHT,
        lx_min,
        lx_max,
        y_min: ph_min,
        y_max: ph_max,
    };
    axes(&mut out, &phase_panel, "phase (deg)", 6);
    for s in phase_series {
        polyline(&mut out, &phase_panel, &lxs, s.y, s.color);
    }
    let _ = writeln!(
        out,
        r##"<text x="{:.2}" y="{:.2}" font-size="12" text-anchor="middle" fill="#333">omega (rad/s)</text>"##,
        MARGIN_LEFT + plot_w / 2.0,
        total_h - 18.0
    );

    // Legend along the top of the magnitude panel.
    let mut lx = MARGIN_LEFT + 10.0;
    for s in mag_series {
        let _ = writeln!(
            out,
            r##"<line x1="{lx:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}" stroke="{}" stroke-width="2"/>
<text x="{:.2}" y="{:.2}" font-size="12" fill="#333">{}</text>"##,
            MARGIN_TOP + 14.0,
            lx + 22.0,
            MARGIN_TOP + 14.0,
            s.color,
            lx + 27.0,
            MARGIN_TOP + 18.0,
            s.label
        );
        lx += 27.0 + 9.0 * s.label.len() as f64 + 20.0;
    }

    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn svg_is_deterministic_and_well_formed() {
        let omegas: Vec<f64> = (0..50).map(|i| 10f64.powf(-1.0 + i as f64 * 0.05)).collect();
        let mag: Vec<f64> = omegas.iter().map(|w| -20.0 * w.log10()).collect();
        let phase: Vec<f64> = omegas.iter().map(|w| -90.0 * w / (1.0 + w)).collect();
        let series = [Series {
            label: "mean",
            color: "#000000",
            y: &mag,
        }];
        let pseries = [Series {
            label: "mean",
            color: "#000000",
            y: &phase,
        }];
        let a = bode_svg("test", &omegas, &series, &pseries);
        let b = bode_svg("test", &omegas, &series, &pseries);
        assert_eq!(a, b);
        assert!(a.starts_with("<svg"));
        assert!(a.trim_end().ends_with("</svg>"));
        assert!(a.contains("magnitude (dB)"));
    }

    #[test]
    fn non_finite_values_break_the_path_instead_of_corrupting_it() {
        let omegas = [0.1, 1.0, 10.0];
        let mag = [0.0, f64::NEG_INFINITY, -10.0];
        let series = [Series {
            label: "m",
            color: "#123456",
            y: &mag,
        }];
        let svg = bode_svg("t", &omegas, &series, &[]);
        assert!(!svg.contains("inf"));
        assert!(!svg.contains("NaN"));
    }
}
