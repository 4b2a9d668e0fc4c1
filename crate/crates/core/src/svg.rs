//! Static SVG rendering of time series and network snapshots, with no
//! plotting dependency. Charts embed their numeric data as a comment
//! block so exports can be parsed back and checked against the CSV.

use crate::network::{CurrencyLabel, Graph};

const WIDTH: f64 = 860.0;
const HEIGHT: f64 = 420.0;
const MARGIN_LEFT: f64 = 64.0;
const MARGIN_RIGHT: f64 = 24.0;
const MARGIN_TOP: f64 = 36.0;
const MARGIN_BOTTOM: f64 = 44.0;

const PALETTE: [&str; 6] = [
    "#4477aa", "#ee6677", "#228833", "#ccbb44", "#66ccee", "#aa3377",
];

/// One named series sampled at integer months 0..len.
pub struct ChartSeries<'a> {
    pub name: &'a str,
    pub values: &'a [f64],
}

/// Render a line chart of the given series. The raw values are embedded
/// in a `data:` comment block, one CSV row per month.
pub fn line_chart(title: &str, y_label: &str, series: &[ChartSeries<'_>]) -> String {
    let months = series.iter().map(|s| s.values.len()).max().unwrap_or(0);
    let mut min_y = f64::INFINITY;
    let mut max_y = f64::NEG_INFINITY;
    for s in series {
        for &v in s.values {
            min_y = min_y.min(v);
            max_y = max_y.max(v);
        }
    }
    if !min_y.is_finite() {
        min_y = 0.0;
        max_y = 1.0;
    }
    if (max_y - min_y).abs() < 1e-12 {
        max_y = min_y + 1.0;
    }
    // pad the top so lines do not touch the frame
    let pad = 0.05 * (max_y - min_y);
    let (lo, hi) = (min_y - pad, max_y + pad);

    let plot_w = WIDTH - MARGIN_LEFT - MARGIN_RIGHT;
    let plot_h = HEIGHT - MARGIN_TOP - MARGIN_BOTTOM;
    let x_of = |t: f64| MARGIN_LEFT + plot_w * t / (months.max(2) - 1) as f64;
    let y_of = |v: f64| MARGIN_TOP + plot_h * (1.0 - (v - lo) / (hi - lo));

    let mut svg = String::new();
    svg.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{WIDTH}\" height=\"{HEIGHT}\" \
         viewBox=\"0 0 {WIDTH} {HEIGHT}\" font-family=\"sans-serif\">\n"
    ));
    svg.push_str("<!-- data:\n");
    svg.push_str("month");
    for s in series {
        svg.push(',');
        svg.push_str(s.name);
    }
    svg.push('\n');
    for t in 0..months {
        svg.push_str(&format!("{t}"));
        for s in series {
            svg.push(',');
            if let Some(v) = s.values.get(t) {
                svg.push_str(&format!("{v}"));
            }
        }
        svg.push('\n');
    }
    svg.push_str("-->\n");

    svg.push_str(&format!(
        "<rect x=\"0\" y=\"0\" width=\"{WIDTH}\" height=\"{HEIGHT}\" fill=\"white\"/>\n"
    ));
    svg.push_str(&format!(
        "<text x=\"{}\" y=\"22\" font-size=\"15\" text-anchor=\"middle\">{}</text>\n",
        WIDTH / 2.0,
        escape(title)
    ));

    // frame and axis ticks
    svg.push_str(&format!(
        "<rect x=\"{MARGIN_LEFT}\" y=\"{MARGIN_TOP}\" width=\"{plot_w}\" height=\"{plot_h}\" \
         fill=\"none\" stroke=\"#444\"/>\n"
    ));
    for i in 0..=4 {
        let v = lo + (hi - lo) * i as f64 / 4.0;
        let y = y_of(v);
        svg.push_str(&format!(
            "<line x1=\"{MARGIN_LEFT}\" y1=\"{y}\" x2=\"{}\" y2=\"{y}\" stroke=\"#ddd\"/>\n",
            MARGIN_LEFT + plot_w
        ));
        svg.push_str(&format!(
            "<text x=\"{}\" y=\"{}\" font-size=\"11\" text-anchor=\"end\">{:.3}</text>\n",
            MARGIN_LEFT - 6.0,
            y + 4.0,
            v
        ));
    }
    if months > 1 {
        for i in 0..=5 {
            let t = (months - 1) as f64 * i as f64 / 5.0;
            let x = x_of(t);
            svg.push_str(&format!(
                "<text x=\"{x}\" y=\"{}\" font-size=\"11\" text-anchor=\"middle\">{}</text>\n",
                MARGIN_TOP + plot_h + 16.0,
                t.round() as usize
            ));
        }
    }
    svg.push_str(&format!(
        "<text x=\"{}\" y=\"{}\" font-size=\"12\" text-anchor=\"middle\" \
         transform=\"rotate(-90 14 {mid})\">{}</text>\n",
        14.0,
        (MARGIN_TOP + plot_h / 2.0),
        escape(y_label),
        mid = MARGIN_TOP + plot_h / 2.0,
    ));
    svg.push_str(&format!(
        "<text x=\"{}\" y=\"{}\" font-size=\"12\" text-anchor=\"middle\">month</text>\n",
        MARGIN_LEFT + plot_w / 2.0,
        HEIGHT - 10.0
    ));

    for (index, s) in series.iter().enumerate() {
        if s.values.is_empty() {
            continue;
        }
        let color = PALETTE[index % PALETTE.len()];
        let points: Vec<String> = s
            .values
            .iter()
            .enumerate()
            .map(|(t, &v)| format!("{:.2},{:.2}", x_of(t as f64), y_of(v)))
            .collect();
        svg.push_str(&format!(
            "<polyline fill=\"none\" stroke=\"{color}\" stroke-width=\"1.6\" points=\"{}\"/>\n",
            points.join(" ")
        ));
        let legend_y = MARGIN_TOP + 16.0 * index as f64 + 12.0;
        svg.push_str(&format!(
            "<rect x=\"{}\" y=\"{}\" width=\"12\" height=\"4\" fill=\"{color}\"/>\n",
            MARGIN_LEFT + 10.0,
            legend_y - 4.0
        ));
        svg.push_str(&format!(
            "<text x=\"{}\" y=\"{legend_y}\" font-size=\"11\">{}</text>\n",
            MARGIN_LEFT + 28.0,
            escape(s.name)
        ));
    }
    svg.push_str("</svg>\n");
    svg
}

/// Recover the embedded data table of a chart produced by [`line_chart`].
pub fn embedded_data(svg: &str) -> Option<String> {
    let start = svg.find("<!-- data:\n")? + "<!-- data:\n".len();
    let end = svg[start..].find("\n-->")? + start;
    Some(svg[start..=end].to_string())
}

/// Deterministic radial rendering of a world snapshot: the three issuer
/// nodes sit in the middle, peripheral nodes on a circle grouped by
/// currency, edges drawn faintly underneath.
pub fn network_svg(graph: &Graph, labels: &[CurrencyLabel], dedollarization: &[f64]) -> String {
    let n = graph.node_count();
    let size = 640.0;
    let center = size / 2.0;
    let radius = size * 0.42;

    let mut order: Vec<usize> = (3..n).collect();
    order.sort_by_key(|&i| {
        let group = match labels[i] {
            CurrencyLabel::Usd => 0,
            CurrencyLabel::Cny => 1,
            CurrencyLabel::Rub => 2,
        };
        (group, i)
    });
    let mut position = vec![(center, center); n];
    position[0] = (center, center);
    if n > 1 {
        position[1] = (center + radius * 0.35, center - radius * 0.2);
    }
    if n > 2 {
        position[2] = (center - radius * 0.35, center - radius * 0.2);
    }
    for (slot, &node) in order.iter().enumerate() {
        let angle = std::f64::consts::TAU * slot as f64 / order.len().max(1) as f64
            - std::f64::consts::FRAC_PI_2;
        position[node] = (
            center + radius * angle.cos(),
            center + radius * angle.sin(),
        );
    }

    let mut svg = String::new();
    svg.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{size}\" height=\"{size}\" \
         viewBox=\"0 0 {size} {size}\">\n<rect width=\"{size}\" height=\"{size}\" fill=\"white\"/>\n"
    ));
    for (a, b) in graph.edges() {
        let (x1, y1) = position[a];
        let (x2, y2) = position[b];
        svg.push_str(&format!(
            "<line x1=\"{x1:.1}\" y1=\"{y1:.1}\" x2=\"{x2:.1}\" y2=\"{y2:.1}\" \
             stroke=\"#000\" stroke-opacity=\"0.08\" stroke-width=\"0.6\"/>\n"
        ));
    }
    for node in 0..n {
        let (x, y) = position[node];
        let fill = match labels[node] {
            CurrencyLabel::Usd => "#9a9a9a",
            CurrencyLabel::Cny => "#c43b3b",
            CurrencyLabel::Rub => "#3b6ec4",
        };
        let r = if node < 3 { 11.0 } else { 4.0 + 3.0 * dedollarization[node] };
        svg.push_str(&format!(
            "<circle cx=\"{x:.1}\" cy=\"{y:.1}\" r=\"{r:.1}\" fill=\"{fill}\" \
             stroke=\"#333\" stroke-width=\"0.5\"/>\n"
        ));
        if node < 3 {
            svg.push_str(&format!(
                "<text x=\"{x:.1}\" y=\"{:.1}\" font-size=\"10\" text-anchor=\"middle\" \
                 font-family=\"sans-serif\">{}</text>\n",
                y + 3.5,
                labels[node].as_str()
            ));
        }
    }
    svg.push_str("</svg>\n");
    svg
}

fn escape(text: &str) -> String {
    text.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn embedded_data_parses_back() {
        let a = [0.0, 0.1, 0.2, 0.35];
        let b = [0.02, 0.021, 0.025, 0.031];
        let svg = line_chart(
            "dedollarization and inflation",
            "level",
            &[
                ChartSeries { name: "mean_d", values: &a },
                ChartSeries { name: "inflation", values: &b },
            ],
        );
        let data = embedded_data(&svg).unwrap();
        let mut lines = data.lines();
        assert_eq!(lines.next(), Some("month,mean_d,inflation"));
        assert_eq!(lines.next(), Some("0,0,0.02"));
        assert_eq!(lines.next(), Some("1,0.1,0.021"));
    }

    #[test]
    fn chart_handles_empty_and_constant_series() {
        let svg = line_chart("empty", "y", &[]);
        assert!(svg.contains("</svg>"));
        let constant = [1.0; 10];
        let svg = line_chart(
            "flat",
            "y",
            &[ChartSeries { name: "c", values: &constant }],
        );
        assert!(svg.contains("polyline"));
    }

    #[test]
    fn network_svg_colors_by_label() {
        let mut graph = Graph::with_nodes(5);
        for i in 1..5 {
            graph.add_edge(0, i).unwrap();
        }
        let labels = vec![
            CurrencyLabel::Usd,
            CurrencyLabel::Cny,
            CurrencyLabel::Rub,
            CurrencyLabel::Cny,
            CurrencyLabel::Usd,
        ];
        let d = vec![0.0, 0.0, 0.0, 0.7, 0.1];
        let svg = network_svg(&graph, &labels, &d);
        assert!(svg.contains("#c43b3b"));
        assert!(svg.contains("#3b6ec4"));
        assert_eq!(svg.matches("<circle").count(), 5);
    }
}
