//! Text renderings: DOT diagrams and delimited or aligned tables.

use std::fmt::Write as _;

use crate::algebra::EffectAlgebra;
use crate::implication::ImplicationTable;
use crate::poset::Poset;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum TableFormat {
    /// Space-padded columns.
    #[default]
    Aligned,
    /// Comma-separated, with set cells quoted.
    Csv,
}

/// A labelled grid ready to print.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Grid {
    pub corner: String,
    pub columns: Vec<String>,
    pub rows: Vec<(String, Vec<String>)>,
}

impl Grid {
    pub fn render(&self, format: TableFormat) -> String {
        match format {
            TableFormat::Aligned => self.aligned(),
            TableFormat::Csv => self.csv(),
        }
    }

    fn records(&self) -> impl Iterator<Item = Vec<&str>> {
        let header = std::iter::once(self.corner.as_str())
            .chain(self.columns.iter().map(String::as_str))
            .collect::<Vec<_>>();
        std::iter::once(header).chain(self.rows.iter().map(|(label, cells)| {
            std::iter::once(label.as_str())
                .chain(cells.iter().map(String::as_str))
                .collect()
        }))
    }

    fn aligned(&self) -> String {
        let records: Vec<_> = self.records().collect();
        let cols = records.iter().map(Vec::len).max().unwrap_or(0);
        let widths: Vec<usize> = (0..cols)
            .map(|c| {
                records
                    .iter()
                    .filter_map(|r| r.get(c))
                    .map(|s| s.chars().count())
                    .max()
                    .unwrap_or(0)
            })
            .collect();
        let mut out = String::new();
        for r in &records {
            let mut line = String::new();
            for (c, cell) in r.iter().enumerate() {
                if c > 0 {
                    line.push_str(if c == 1 { " | " } else { "  " });
                }
                write!(line, "{cell:<w$}", w = widths[c]).unwrap();
            }
            out.push_str(line.trim_end());
            out.push('\n');
        }
        out
    }

    fn csv(&self) -> String {
        let mut w = csv::WriterBuilder::new()
            .flexible(true)
            .from_writer(Vec::new());
        for r in self.records() {
            w.write_record(r).expect("writing to memory");
        }
        String::from_utf8(w.into_inner().expect("flush to memory")).expect("utf-8 input")
    }
}

pub fn implication_grid(t: &ImplicationTable) -> Grid {
    let n = t.len();
    Grid {
        corner: "->".into(),
        columns: t.labels().to_vec(),
        rows: (0..n)
            .map(|x| {
                (
                    t.labels()[x].clone(),
                    (0..n).map(|y| t.cell_text(x, y)).collect(),
                )
            })
            .collect(),
    }
}

/// The partial sum, with `-` for undefined entries.
pub fn sum_grid(e: &EffectAlgebra) -> Grid {
    let l = e.labels();
    Grid {
        corner: "+".into(),
        columns: l.to_vec(),
        rows: (0..e.len())
            .map(|x| {
                let cells = (0..e.len())
                    .map(|y| e.sum(x, y).map_or("-".to_string(), |z| l[z].clone()))
                    .collect();
                (l[x].clone(), cells)
            })
            .collect(),
    }
}

/// The order relation as a 0/1 matrix, row `x` column `y` meaning `x <= y`.
pub fn order_grid(p: &Poset) -> Grid {
    let n = p.len();
    Grid {
        corner: "<=".into(),
        columns: p.labels().to_vec(),
        rows: (0..n)
            .map(|x| {
                let cells = (0..n)
                    .map(|y| if p.leq(x, y) { "1" } else { "0" }.to_string())
                    .collect();
                (p.label(x).to_string(), cells)
            })
            .collect(),
    }
}

pub fn emit_table(grid: &Grid, format: TableFormat) -> String {
    grid.render(format)
}

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Hasse diagram as a DOT digraph, edges pointing upward.
pub fn emit_dot(name: &str, p: &Poset) -> String {
    let mut out = String::new();
    writeln!(out, "digraph {} {{", quote(name)).unwrap();
    writeln!(out, "  rankdir=BT;").unwrap();
    writeln!(out, "  node [shape=circle];").unwrap();
    for l in p.labels() {
        writeln!(out, "  {};", quote(l)).unwrap();
    }
    for (x, y) in p.hasse_edges() {
        writeln!(out, "  {} -> {};", quote(p.label(x)), quote(p.label(y))).unwrap();
    }
    out.push_str("}\n");
    out
}

pub fn emit_algebra_dot(e: &EffectAlgebra) -> String {
    emit_dot(e.name(), e.order())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn two_chain_dot() {
        let e = fixtures::load("CHAIN-2").unwrap();
        let dot = emit_algebra_dot(&e);
        assert_eq!(dot.matches("->").count(), 1);
        assert!(dot.contains("\"0\" -> \"1\";"));
        assert!(dot.contains("rankdir=BT"));
    }

    #[test]
    fn csv_quotes_set_cells() {
        let e = fixtures::load("CHAIN-2").unwrap();
        let t = crate::implication::implication_table(&e);
        let text = emit_table(&implication_grid(&t), TableFormat::Csv);
        assert_eq!(text, "->,0,1\n0,{1},{1}\n1,{0},\"{0,1}\"\n");
    }

    #[test]
    fn aligned_sum_table() {
        let e = fixtures::load("BOOL-1").unwrap();
        let text = emit_table(&sum_grid(&e), TableFormat::Aligned);
        assert_eq!(text, "+ | 0  1\n0 | 0  1\n1 | 1  -\n");
    }

    #[test]
    fn order_matrix() {
        let e = fixtures::load("CHAIN-3").unwrap();
        let text = emit_table(&order_grid(e.order()), TableFormat::Csv);
        assert_eq!(text.lines().nth(1), Some("0,1,1,1"));
        assert_eq!(text.lines().nth(3), Some("1,0,0,1"));
    }
}
