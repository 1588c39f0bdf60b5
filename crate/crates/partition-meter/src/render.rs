//! Adjacency-box diagrams of a lexicographic listing.
//!
//! Compositions are rows (lexicographically greatest at the top), part
//! positions are columns, and a box is a maximal unbroken vertical run of
//! equal parts in one column across adjacent rows. The number of boxes is
//! the suffix length of the set: one box per part write.

use crate::composition::{iterate, Part, SacParams};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BoxSpan {
    pub col: usize,
    /// Topmost row of the run, counting from the top of the diagram.
    pub row: usize,
    pub len: usize,
    pub value: Part,
}

#[derive(Debug, Clone)]
pub struct BoxDiagram {
    rows: Vec<Vec<Part>>,
    boxes: Vec<BoxSpan>,
}

pub fn box_diagram(params: SacParams) -> BoxDiagram {
    let mut rows: Vec<Vec<Part>> = iterate(params).map(|c| c.into_parts()).collect();
    rows.reverse(); // greatest first
    let max_cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let mut boxes = Vec::new();
    for col in 0..max_cols {
        let mut r = 0;
        while r < rows.len() {
            if rows[r].len() <= col {
                r += 1;
                continue;
            }
            let value = rows[r][col];
            let start = r;
            r += 1;
            while r < rows.len() && rows[r].len() > col && rows[r][col] == value {
                r += 1;
            }
            boxes.push(BoxSpan {
                col,
                row: start,
                len: r - start,
                value,
            });
        }
    }
    BoxDiagram { rows, boxes }
}

impl BoxDiagram {
    /// Listing rows, greatest first.
    pub fn rows(&self) -> &[Vec<Part>] {
        &self.rows
    }

    pub fn boxes(&self) -> &[BoxSpan] {
        &self.boxes
    }

    pub fn box_count(&self) -> u64 {
        self.boxes.len() as u64
    }

    pub fn to_ascii(&self) -> String {
        let digits = self
            .rows
            .iter()
            .flatten()
            .map(|p| p.to_string().len())
            .max()
            .unwrap_or(1);
        let inner = digits + 2;
        let stride = inner + 1;
        let height = 2 * self.rows.len() + 1;
        let max_cols = self.rows.iter().map(Vec::len).max().unwrap_or(0);
        let width = max_cols * stride + 1;
        let mut canvas = vec![vec![' '; width]; height];

        // Verticals first; horizontals then claim the '+' corners.
        for b in &self.boxes {
            let x0 = b.col * stride;
            let x1 = x0 + inner + 1;
            let y_top = 2 * b.row;
            let y_bot = 2 * (b.row + b.len);
            for line in &mut canvas[y_top + 1..y_bot] {
                line[x0] = '|';
                line[x1] = '|';
            }
        }
        for b in &self.boxes {
            let x0 = b.col * stride;
            let x1 = x0 + inner + 1;
            for y in [2 * b.row, 2 * (b.row + b.len)] {
                canvas[y][x0] = '+';
                canvas[y][x1] = '+';
                for cell in &mut canvas[y][x0 + 1..x1] {
                    *cell = '-';
                }
            }
        }
        for (r, row) in self.rows.iter().enumerate() {
            let y = 2 * r + 1;
            for (c, p) in row.iter().enumerate() {
                let s = p.to_string();
                let pad = inner - s.len();
                let left = pad / 2;
                for (i, ch) in s.chars().enumerate() {
                    canvas[y][c * stride + 1 + left + i] = ch;
                }
            }
        }
        canvas
            .into_iter()
            .map(|line| line.into_iter().collect::<String>().trim_end().to_string())
            .collect::<Vec<_>>()
            .join("\n")
    }

    pub fn to_svg(&self) -> String {
        const CELL: usize = 28;
        const MARGIN: usize = 4;
        let max_cols = self.rows.iter().map(Vec::len).max().unwrap_or(0);
        let width = max_cols * CELL + 2 * MARGIN;
        let height = self.rows.len() * CELL + 2 * MARGIN;
        let mut svg = String::new();
        svg.push_str(&format!(
            "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{width}\" height=\"{height}\" \
             viewBox=\"0 0 {width} {height}\">\n"
        ));
        svg.push_str("  <g font-family=\"monospace\" font-size=\"14\" text-anchor=\"middle\">\n");
        for (r, row) in self.rows.iter().enumerate() {
            for (c, p) in row.iter().enumerate() {
                let x = MARGIN + c * CELL + CELL / 2;
                let y = MARGIN + r * CELL + CELL * 2 / 3;
                svg.push_str(&format!("    <text x=\"{x}\" y=\"{y}\">{p}</text>\n"));
            }
        }
        svg.push_str("  </g>\n");
        for b in &self.boxes {
            let x = MARGIN + b.col * CELL;
            let y = MARGIN + b.row * CELL;
            let h = b.len * CELL;
            svg.push_str(&format!(
                "  <rect x=\"{x}\" y=\"{y}\" width=\"{CELL}\" height=\"{h}\" \
                 fill=\"none\" stroke=\"black\"/>\n"
            ));
        }
        svg.push_str("</svg>\n");
        svg
    }
}
