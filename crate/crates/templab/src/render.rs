//! Link-stream pictures of cycle labellings (one column per edge, time going
//! up) and a plain labelled-graph view for other footprints.

use std::fmt::Write as _;

use crate::cycle::CycleView;
use crate::error::{Error, Result};
use crate::temporal::{Journey, Label, TemporalGraph};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Ascii,
    Svg,
}

impl std::str::FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "ascii" => Ok(Format::Ascii),
            "svg" => Ok(Format::Svg),
            _ => Err(Error::Param(format!("unknown format {s:?}"))),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Highlight {
    pub journey: Journey,
    pub color: String,
}

#[derive(Clone, Debug)]
pub struct RenderSpec<'a> {
    pub graph: &'a TemporalGraph,
    pub highlights: Vec<Highlight>,
    pub format: Format,
    pub column_width: usize,
    pub row_height: usize,
}

impl<'a> RenderSpec<'a> {
    pub fn new(graph: &'a TemporalGraph, format: Format) -> Self {
        RenderSpec {
            graph,
            highlights: Vec::new(),
            format,
            column_width: 40,
            row_height: 24,
        }
    }
}

pub const PALETTE: [&str; 6] = [
    "#d62728", "#1f77b4", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b",
];

/// Column order: the walk starting just after the edge opposite `{0, 1}`, so
/// that `{0, 1}` sits in the middle.
fn columns(n: usize) -> Vec<usize> {
    (0..n).map(|k| (n / 2 + 1 + k) % n).collect()
}

pub fn render_link_stream(spec: &RenderSpec) -> Result<String> {
    let view = CycleView::new(spec.graph)?;
    for h in &spec.highlights {
        if !h.journey.is_valid_in(spec.graph) {
            return Err(Error::Param(
                "highlighted journey is not a journey of the graph".into(),
            ));
        }
    }
    let n = view.n();
    let cols = columns(n);
    let mut col_of = vec![0; n];
    for (c, &i) in cols.iter().enumerate() {
        col_of[i] = c;
    }
    let top = spec.graph.max_label().unwrap_or(0) as usize;
    // (column, time) of each highlighted contact, per journey
    let marks: Vec<Vec<(usize, Label)>> = spec
        .highlights
        .iter()
        .map(|h| {
            h.journey
                .contacts
                .iter()
                .map(|c| {
                    let (pu, pv) = (view.position(c.u), view.position(c.v));
                    let i = if (pu + 1) % n == pv { pu } else { pv };
                    (col_of[i], c.label)
                })
                .collect()
        })
        .collect();
    Ok(match spec.format {
        Format::Ascii => ascii(&view, &cols, top, &marks),
        Format::Svg => svg(spec, &view, &cols, top, &marks),
    })
}

fn ascii(view: &CycleView, cols: &[usize], top: usize, marks: &[Vec<(usize, Label)>]) -> String {
    let width = top.to_string().len().max(2);
    let mut out = String::new();
    for t in (1..=top as Label).rev() {
        write!(out, "{t:>width$} |").unwrap();
        for (c, &i) in cols.iter().enumerate() {
            let hit = marks.iter().position(|m| m.contains(&(c, t)));
            let cell = match hit {
                Some(j) => char::from(b'a' + (j % 26) as u8),
                None if view.edge_labels(i).contains(&t) => 'o',
                None => '.',
            };
            write!(out, " {cell:^3}").unwrap();
        }
        out.push('\n');
    }
    write!(out, "{:>width$} +", "").unwrap();
    out.push_str(&"----".repeat(cols.len()));
    out.push('\n');
    write!(out, "{:>width$}  ", "").unwrap();
    for &i in cols {
        write!(out, " {:^3}", i).unwrap();
    }
    out.push('\n');
    out
}

fn svg(
    spec: &RenderSpec,
    view: &CycleView,
    cols: &[usize],
    top: usize,
    marks: &[Vec<(usize, Label)>],
) -> String {
    let (cw, rh) = (spec.column_width as f64, spec.row_height as f64);
    let margin = 40.0;
    let w = margin * 2.0 + cw * cols.len() as f64;
    let h = margin * 2.0 + rh * top.max(1) as f64;
    let x = |c: usize| margin + cw * (c as f64 + 0.5);
    let y = |t: Label| h - margin - rh * (t as f64 - 0.5);
    let mut s = String::new();
    writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#
    )
    .unwrap();
    writeln!(s, r#"<rect width="{w}" height="{h}" fill="white"/>"#).unwrap();
    let base = h - margin;
    writeln!(
        s,
        r#"<line class="axis" x1="{margin}" y1="{base}" x2="{}" y2="{base}" stroke="black"/>"#,
        w - margin
    )
    .unwrap();
    writeln!(s, r#"<line class="axis" x1="{margin}" y1="{base}" x2="{margin}" y2="{margin}" stroke="black"/>"#).unwrap();
    let n = view.n();
    for (c, &i) in cols.iter().enumerate() {
        let (a, b) = (view.order()[i], view.order()[(i + 1) % n]);
        writeln!(
            s,
            r#"<text x="{}" y="{}" font-size="10" text-anchor="middle">{a}-{b}</text>"#,
            x(c),
            base + 14.0
        )
        .unwrap();
    }
    for t in 1..=top as Label {
        writeln!(
            s,
            r#"<text x="{}" y="{}" font-size="10" text-anchor="end">{t}</text>"#,
            margin - 4.0,
            y(t) + 3.0
        )
        .unwrap();
    }
    for (m, h) in marks.iter().zip(&spec.highlights) {
        let mut pts = String::new();
        for (k, &(c, t)) in m.iter().enumerate() {
            if k > 0 {
                // staircase: wait at the shared vertex, then step to the next column
                let (pc, _) = m[k - 1];
                let xv = (x(pc) + x(c)) / 2.0;
                write!(pts, "{},{} {},{} ", xv, y(m[k - 1].1), xv, y(t)).unwrap();
            }
            write!(pts, "{},{} ", x(c), y(t)).unwrap();
        }
        writeln!(
            s,
            r#"<polyline class="journey" points="{}" fill="none" stroke="{}" stroke-width="2"/>"#,
            pts.trim_end(),
            h.color
        )
        .unwrap();
    }
    for (c, &i) in cols.iter().enumerate() {
        for &t in view.edge_labels(i) {
            writeln!(
                s,
                r#"<circle class="contact" cx="{}" cy="{}" r="4" fill="black"/>"#,
                x(c),
                y(t)
            )
            .unwrap();
        }
    }
    s.push_str("</svg>\n");
    s
}

/// Labelled footprint on a circular embedding (SVG) or as an edge list (ASCII).
pub fn render_labelled_graph(g: &TemporalGraph, format: Format) -> String {
    match format {
        Format::Ascii => {
            let mut s = String::new();
            for ((u, v), ls) in g.edges() {
                let ls: Vec<String> = ls.iter().map(|l| l.to_string()).collect();
                writeln!(s, "{u} - {v} : {}", ls.join(" ")).unwrap();
            }
            s
        }
        Format::Svg => {
            let n = g.n().max(1);
            let (size, r) = (400.0, 160.0);
            let at = |v: usize| {
                let a = std::f64::consts::TAU * v as f64 / n as f64;
                (size / 2.0 + r * a.cos(), size / 2.0 + r * a.sin())
            };
            let mut s = String::new();
            writeln!(s, r#"<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" viewBox="0 0 {size} {size}">"#).unwrap();
            for ((u, v), ls) in g.edges() {
                let ((x1, y1), (x2, y2)) = (at(u), at(v));
                writeln!(
                    s,
                    r#"<line x1="{x1:.1}" y1="{y1:.1}" x2="{x2:.1}" y2="{y2:.1}" stroke="gray"/>"#
                )
                .unwrap();
                let ls: Vec<String> = ls.iter().map(|l| l.to_string()).collect();
                writeln!(
                    s,
                    r#"<text x="{:.1}" y="{:.1}" font-size="10">{}</text>"#,
                    (x1 + x2) / 2.0,
                    (y1 + y2) / 2.0,
                    ls.join(",")
                )
                .unwrap();
            }
            for v in 0..g.n() {
                let (x, y) = at(v);
                writeln!(
                    s,
                    r#"<circle cx="{x:.1}" cy="{y:.1}" r="8" fill="white" stroke="black"/>"#
                )
                .unwrap();
                writeln!(
                    s,
                    r#"<text x="{x:.1}" y="{:.1}" font-size="9" text-anchor="middle">{v}</text>"#,
                    y + 3.0
                )
                .unwrap();
            }
            s.push_str("</svg>\n");
            s
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{generator_even, parity};
    use crate::cycle::{prefix_foremost, Orientation};

    #[test]
    fn one_mark_per_contact() {
        let g = generator_even(16).unwrap().graph;
        let svg = render_link_stream(&RenderSpec::new(&g, Format::Svg)).unwrap();
        assert_eq!(svg.matches(r#"class="contact""#).count(), 65);
        let ascii = render_link_stream(&RenderSpec::new(&g, Format::Ascii)).unwrap();
        assert_eq!(ascii.matches('o').count(), 65);
    }

    #[test]
    fn start_edge_column_is_central() {
        assert_eq!(columns(16)[7], 0);
        assert_eq!(columns(16)[15], 8);
    }

    #[test]
    fn empty_labelling_draws_axes() {
        let mut g = TemporalGraph::new(4);
        for i in 0..4 {
            g.add_edge(i, (i + 1) % 4).unwrap();
        }
        let svg = render_link_stream(&RenderSpec::new(&g, Format::Svg)).unwrap();
        assert_eq!(svg.matches(r#"class="axis""#).count(), 2);
        assert_eq!(svg.matches("<circle").count(), 0);
    }

    #[test]
    fn highlighted_journeys() {
        let g = parity(8).unwrap().graph;
        let mut spec = RenderSpec::new(&g, Format::Svg);
        for (k, o) in Orientation::BOTH.into_iter().enumerate() {
            let j = prefix_foremost(&g, (k + 1) % 2, o).unwrap().journey;
            spec.highlights.push(Highlight {
                journey: j,
                color: PALETTE[k].into(),
            });
        }
        let svg = render_link_stream(&spec).unwrap();
        assert_eq!(svg.matches("<polyline").count(), 2);
        assert_eq!(svg.matches(r#"class="contact""#).count(), g.total_labels());
    }

    #[test]
    fn non_cycle_is_rejected() {
        let g = TemporalGraph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(render_link_stream(&RenderSpec::new(&g, Format::Ascii)).is_err());
        assert!(render_labelled_graph(&g, Format::Ascii).contains("0 - 1"));
    }
}
