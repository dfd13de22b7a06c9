//! Regeneration of the class operation tables and cell-by-cell audits against
//! the published transcriptions in [`crate::fixtures`].

use std::fmt::{self, Write as _};

use serde::Serialize;
use serde_json::json;

use crate::algebra::{class_add, class_div, class_mul, class_pow, class_sub, ClassOpOutcome, OpKind};
use crate::error::{Error, Result};
use crate::fixtures;
use crate::residue::SignedResidue;

/// Exponent columns of the power table.
pub const POWER_COLUMNS: std::ops::RangeInclusive<u64> = 2..=15;

/// How a subtraction table is laid out.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Orientation {
    /// Positive rows and columns, cell = row ⊙ column (cell = column ÷ row for division).
    Standard,
    /// Negative rows, positive columns, cell = column + row, positive labels.
    PositiveResults,
    /// Positive rows, negative columns, cell = row + column, negative labels.
    NegativeResults,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Header {
    Class(SignedResidue),
    Exponent(u64),
}

impl fmt::Display for Header {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Header::Class(l) => write!(f, "φ^{}", l.value()),
            Header::Exponent(n) => write!(f, "()^{n}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OpTable {
    pub op: OpKind,
    pub orientation: Orientation,
    pub row_labels: Vec<SignedResidue>,
    pub col_headers: Vec<Header>,
    pub cells: Vec<Vec<ClassOpOutcome>>,
}

impl OpTable {
    pub fn cell(&self, row: usize, col: usize) -> &ClassOpOutcome {
        &self.cells[row][col]
    }

    pub fn cell_count(&self) -> usize {
        self.row_labels.len() * self.col_headers.len()
    }

    fn corner(&self) -> &'static str {
        match (self.op, self.orientation) {
            (OpKind::Pow, _) => "()^n",
            (OpKind::Sub, Orientation::NegativeResults) => "+",
            (op, _) => op.symbol(),
        }
    }
}

fn grid(
    op: OpKind,
    orientation: Orientation,
    rows: Vec<SignedResidue>,
    cols: Vec<SignedResidue>,
    cell: impl Fn(SignedResidue, SignedResidue) -> ClassOpOutcome,
) -> OpTable {
    let cells = rows
        .iter()
        .map(|&r| cols.iter().map(|&c| cell(r, c)).collect())
        .collect();
    OpTable {
        op,
        orientation,
        row_labels: rows,
        col_headers: cols.into_iter().map(Header::Class).collect(),
        cells,
    }
}

/// Builds a 9×9 table (9×14 for powers) from the class operations.
///
/// Only subtraction accepts the non-standard orientations.
pub fn generate_table(op: OpKind, orientation: Orientation) -> Result<OpTable> {
    let pos: Vec<_> = SignedResidue::positive_labels().collect();
    let neg: Vec<_> = SignedResidue::negative_labels().collect();
    if op != OpKind::Sub && orientation != Orientation::Standard {
        return Err(Error::UnsupportedOp("non-standard orientation outside subtraction"));
    }
    let table = match (op, orientation) {
        (OpKind::Add, _) => grid(op, orientation, pos.clone(), pos, class_add),
        (OpKind::Mul, _) => grid(op, orientation, pos.clone(), pos, class_mul),
        (OpKind::Div, _) => grid(op, orientation, pos.clone(), pos, |r, c| class_div(c, r)),
        (OpKind::Sub, Orientation::Standard) => grid(op, orientation, pos.clone(), pos, class_sub),
        (OpKind::Sub, Orientation::PositiveResults) => {
            grid(op, orientation, neg, pos, |r, c| class_add(c, r))
        }
        (OpKind::Sub, Orientation::NegativeResults) => grid(op, orientation, pos, neg, |r, c| {
            class_add(r, c).mirrored().expect("class results are never null")
        }),
        (OpKind::Pow, _) => {
            let cells = pos
                .iter()
                .map(|&r| {
                    POWER_COLUMNS
                        .map(|n| class_pow(r, n).expect("power columns start at the square"))
                        .collect()
                })
                .collect();
            OpTable {
                op,
                orientation,
                row_labels: pos,
                col_headers: POWER_COLUMNS.map(Header::Exponent).collect(),
                cells,
            }
        }
    };
    Ok(table)
}

/// Operation and layout of each published table, by its number.
pub fn table_layout(table_id: u32) -> Result<(OpKind, Orientation)> {
    Ok(match table_id {
        4 => (OpKind::Add, Orientation::Standard),
        5 => (OpKind::Sub, Orientation::PositiveResults),
        6 => (OpKind::Sub, Orientation::NegativeResults),
        7 => (OpKind::Div, Orientation::Standard),
        8 => (OpKind::Mul, Orientation::Standard),
        9 => (OpKind::Pow, Orientation::Standard),
        other => return Err(Error::UnknownTable(other)),
    })
}

pub fn generate_by_id(table_id: u32) -> Result<OpTable> {
    let (op, orientation) = table_layout(table_id)?;
    generate_table(op, orientation)
}

/// Parses one transcribed cell: `k_φ`, `∅`, `Z_φ` (every class) or a
/// `;`-separated list of those.
pub fn parse_cell(text: &str) -> Result<ClassOpOutcome> {
    let mut out = Vec::new();
    for part in text.split(';').map(str::trim).filter(|p| !p.is_empty()) {
        match part {
            "∅" => {}
            "Z_φ" => out.extend(SignedResidue::positive_labels()),
            label => out.push(label.parse::<SignedResidue>()?),
        }
    }
    Ok(out.into_iter().collect())
}

/// The transcribed table as parsed cells, rows in published order.
pub fn fixture_cells(table_id: u32) -> Result<Vec<Vec<ClassOpOutcome>>> {
    let rows = match table_id {
        4 => &fixtures::TABLE_4,
        5 => &fixtures::TABLE_5,
        6 => &fixtures::TABLE_6,
        7 => &fixtures::TABLE_7,
        8 => &fixtures::TABLE_8,
        9 => &fixtures::TABLE_9,
        other => return Err(Error::UnknownTable(other)),
    };
    rows.iter()
        .map(|row| row.split_whitespace().map(parse_cell).collect())
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CellMismatch {
    pub row: SignedResidue,
    pub col: Header,
    pub published: ClassOpOutcome,
    pub computed: ClassOpOutcome,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableAudit {
    pub table_id: u32,
    pub mismatches: Vec<CellMismatch>,
    pub match_count: usize,
    pub mismatch_count: usize,
}

impl TableAudit {
    pub fn total(&self) -> usize {
        self.match_count + self.mismatch_count
    }
}

/// Compares a regenerated table with its transcription, cell by cell, as
/// sets (so `4_φ;1_φ;7_φ` equals `1_φ;4_φ;7_φ`).
pub fn audit_table(table_id: u32) -> Result<TableAudit> {
    let computed = generate_by_id(table_id)?;
    let published = fixture_cells(table_id)?;
    let mut mismatches = Vec::new();
    let mut match_count = 0;
    for (r, row) in published.iter().enumerate() {
        for (c, published) in row.iter().enumerate() {
            let got = computed.cell(r, c);
            if got == published {
                match_count += 1;
            } else {
                mismatches.push(CellMismatch {
                    row: computed.row_labels[r],
                    col: computed.col_headers[c],
                    published: published.clone(),
                    computed: got.clone(),
                });
            }
        }
    }
    Ok(TableAudit {
        table_id,
        mismatch_count: mismatches.len(),
        mismatches,
        match_count,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RenderFormat {
    Text,
    Csv,
    Records,
}

impl std::str::FromStr for RenderFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "text" => Ok(RenderFormat::Text),
            "csv" => Ok(RenderFormat::Csv),
            "records" => Ok(RenderFormat::Records),
            _ => Err(Error::InvalidConfig(format!("unknown format {s:?}"))),
        }
    }
}

/// Renders a table. Output is byte-stable for a given table and format.
///
/// * `Text`: aligned grid with a header row.
/// * `Csv`: header row plus one line per row; multi-valued cells joined by `;`.
/// * `Records`: one JSON object per line per cell; empty cells are `[]`.
pub fn render_table(t: &OpTable, format: RenderFormat) -> String {
    match format {
        RenderFormat::Text => render_text(t),
        RenderFormat::Csv => render_csv(t),
        RenderFormat::Records => render_records(t),
    }
}

fn render_text(t: &OpTable) -> String {
    let mut lines: Vec<Vec<String>> = Vec::with_capacity(t.row_labels.len() + 1);
    let mut header = vec![t.corner().to_string()];
    header.extend(t.col_headers.iter().map(Header::to_string));
    lines.push(header);
    for (r, label) in t.row_labels.iter().enumerate() {
        let mut line = vec![Header::Class(*label).to_string()];
        line.extend(t.cells[r].iter().map(ClassOpOutcome::to_string));
        lines.push(line);
    }
    let columns = lines[0].len();
    let widths: Vec<usize> = (0..columns)
        .map(|c| lines.iter().map(|l| l[c].chars().count()).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    for line in &lines {
        let mut text = String::new();
        for (c, cell) in line.iter().enumerate() {
            if c > 0 {
                text.push_str(" | ");
            }
            let pad = widths[c] - cell.chars().count();
            text.push_str(cell);
            text.extend(std::iter::repeat_n(' ', pad));
        }
        out.push_str(text.trim_end());
        out.push('\n');
    }
    out
}

fn render_csv(t: &OpTable) -> String {
    let mut out = String::new();
    out.push_str(t.corner());
    for h in &t.col_headers {
        let _ = write!(out, ",{h}");
    }
    out.push('\n');
    for (r, label) in t.row_labels.iter().enumerate() {
        let _ = write!(out, "{}", Header::Class(*label));
        for cell in &t.cells[r] {
            let _ = write!(out, ",{cell}");
        }
        out.push('\n');
    }
    out
}

fn render_records(t: &OpTable) -> String {
    let mut out = String::new();
    for (r, label) in t.row_labels.iter().enumerate() {
        for (c, header) in t.col_headers.iter().enumerate() {
            let values = &t.cells[r][c];
            let record = match header {
                Header::Class(col) => json!({
                    "op": t.op,
                    "row": label,
                    "col": col,
                    "values": values,
                }),
                Header::Exponent(n) => json!({
                    "op": t.op,
                    "row": label,
                    "exponent": n,
                    "values": values,
                }),
            };
            out.push_str(&record.to_string());
            out.push('\n');
        }
    }
    out
}
