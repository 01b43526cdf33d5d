//! Addition and multiplication tables over a finite list of maps.

use std::collections::{HashMap, HashSet};
use std::fmt::Write as _;

use crate::chain::{Endo, EndoError};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CayleyTables {
    pub members: Vec<Endo>,
    /// `sum[i][j] = members[i] + members[j]`
    pub sum: Vec<Vec<Endo>>,
    /// `product[i][j] = members[i] · members[j]`
    pub product: Vec<Vec<Endo>>,
}

pub fn cayley_tables(members: &[Endo]) -> Result<CayleyTables> {
    let mut seen = HashSet::new();
    for m in members {
        if m.n() != members[0].n() {
            return Err(EndoError::SizeMismatch {
                left: members[0].n(),
                right: m.n(),
            }
            .into());
        }
        if !seen.insert(*m) {
            return Err(Error::DuplicateMember(*m));
        }
    }
    let table = |op: fn(&Endo, &Endo) -> Endo| -> Vec<Vec<Endo>> {
        members
            .iter()
            .map(|a| members.iter().map(|b| op(a, b)).collect())
            .collect()
    };
    Ok(CayleyTables {
        members: members.to_vec(),
        sum: table(|a, b| a.join_unchecked(b)),
        product: table(|a, b| a.compose_unchecked(b)),
    })
}

impl CayleyTables {
    pub fn index_of(&self, e: &Endo) -> Option<usize> {
        self.members.iter().position(|m| m == e)
    }

    pub fn sum_closed(&self) -> bool {
        self.sum
            .iter()
            .flatten()
            .all(|e| self.index_of(e).is_some())
    }

    pub fn product_closed(&self) -> bool {
        self.product
            .iter()
            .flatten()
            .all(|e| self.index_of(e).is_some())
    }

    /// Entries falling outside the member list, as `(op, i, j, result)`.
    pub fn outside_entries(&self) -> Vec<(char, usize, usize, Endo)> {
        let mut out = Vec::new();
        for (op, table) in [('+', &self.sum), ('·', &self.product)] {
            for (i, row) in table.iter().enumerate() {
                for (j, e) in row.iter().enumerate() {
                    if self.index_of(e).is_none() {
                        out.push((op, i, j, *e));
                    }
                }
            }
        }
        out
    }

    /// `φ1, φ2, ...` in member order.
    pub fn default_names(&self) -> Vec<String> {
        (1..=self.members.len()).map(|i| format!("φ{i}")).collect()
    }

    fn cell_names(&self, names: &[String]) -> HashMap<Endo, String> {
        self.members
            .iter()
            .copied()
            .zip(names.iter().cloned())
            .collect()
    }

    /// Aligned text: the member legend, the `+` table, the `·` table and a
    /// closure summary. Results outside the members print as `[literal]`.
    pub fn render_text(&self) -> String {
        let names = self.default_names();
        let lookup = self.cell_names(&names);
        let cell = |e: &Endo| lookup.get(e).cloned().unwrap_or_else(|| format!("[{e}]"));
        let mut out = String::new();
        for (name, m) in names.iter().zip(&self.members) {
            let _ = writeln!(out, "{name} = {m}");
        }
        for (op, table) in [("+", &self.sum), ("·", &self.product)] {
            out.push('\n');
            let rows: Vec<Vec<String>> = table
                .iter()
                .map(|row| row.iter().map(cell).collect())
                .collect();
            render_grid(&mut out, op, &names, &rows);
        }
        let yes_no = |b: bool| if b { "yes" } else { "no" };
        let _ = writeln!(out, "\nclosed under +: {}", yes_no(self.sum_closed()));
        let _ = writeln!(out, "closed under ·: {}", yes_no(self.product_closed()));
        out
    }

    /// Both tables as CSV, headers in canonical literal form, separated by a
    /// blank line. The top-left cell names the operation.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for (i, (op, table)) in [("+", &self.sum), ("·", &self.product)]
            .into_iter()
            .enumerate()
        {
            if i > 0 {
                out.push('\n');
            }
            let mut w = csv::Writer::from_writer(Vec::new());
            let mut header = vec![op.to_string()];
            header.extend(self.members.iter().map(Endo::to_string));
            w.write_record(&header).expect("in-memory write");
            for (m, row) in self.members.iter().zip(table) {
                let mut rec = vec![m.to_string()];
                rec.extend(row.iter().map(Endo::to_string));
                w.write_record(&rec).expect("in-memory write");
            }
            let bytes = w.into_inner().expect("in-memory flush");
            out.push_str(&String::from_utf8(bytes).expect("utf-8 literals"));
        }
        out
    }
}

fn width(s: &str) -> usize {
    s.chars().count()
}

fn pad(s: &str, w: usize) -> String {
    let mut out = s.to_string();
    out.extend(std::iter::repeat_n(' ', w.saturating_sub(width(s))));
    out
}

fn render_grid(out: &mut String, op: &str, names: &[String], rows: &[Vec<String>]) {
    let label_w = names
        .iter()
        .map(|s| width(s))
        .chain([width(op)])
        .max()
        .unwrap_or(1);
    let col_w: Vec<usize> = (0..names.len())
        .map(|j| {
            rows.iter()
                .map(|r| width(&r[j]))
                .chain([width(&names[j])])
                .max()
                .unwrap_or(1)
        })
        .collect();
    let line = |label: &str, cells: &[String]| {
        let body: Vec<String> = cells.iter().zip(&col_w).map(|(c, &w)| pad(c, w)).collect();
        format!("{} | {}", pad(label, label_w), body.join(" "))
            .trim_end()
            .to_string()
    };
    let header = line(op, names);
    let _ = writeln!(out, "{header}");
    let body_w = col_w.iter().sum::<usize>() + col_w.len().saturating_sub(1);
    let _ = writeln!(out, "{}-+-{}", "-".repeat(label_w), "-".repeat(body_w));
    for (name, row) in names.iter().zip(rows) {
        let _ = writeln!(out, "{}", line(name, row));
    }
}
