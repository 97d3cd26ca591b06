//! Tabular output in CSV, TSV or JSON.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;

use clap::ValueEnum;
use serde_json::{Map, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
    Tsv,
}

impl Format {
    pub fn name(self) -> &'static str {
        match self {
            Format::Csv => "csv",
            Format::Json => "json",
            Format::Tsv => "tsv",
        }
    }
}

#[derive(Debug, Clone)]
pub struct OutputSpec {
    pub format: Format,
    /// Fractional digits for decimal renderings, `0..=30`.
    pub decimals: u32,
    /// `None` means standard output.
    pub destination: Option<PathBuf>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Cell {
    /// Decimal integer of any size.
    Int(String),
    Text(String),
    Bool(bool),
}

impl Cell {
    pub fn int(v: impl ToString) -> Cell {
        Cell::Int(v.to_string())
    }

    pub fn text(v: impl Into<String>) -> Cell {
        Cell::Text(v.into())
    }

    fn render(&self) -> String {
        match self {
            Cell::Int(s) | Cell::Text(s) => s.clone(),
            Cell::Bool(b) => b.to_string(),
        }
    }

    fn to_json(&self) -> Value {
        match self {
            Cell::Int(s) => match s.parse::<i64>() {
                Ok(v) => Value::from(v),
                Err(_) => match s.parse::<u64>() {
                    Ok(v) => Value::from(v),
                    // too large for a JSON number that round-trips through f64
                    Err(_) => Value::String(s.clone()),
                },
            },
            Cell::Text(s) => Value::String(s.clone()),
            Cell::Bool(b) => Value::Bool(*b),
        }
    }
}

#[derive(Debug, Clone, Default)]
pub struct Table {
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(columns: &[&str]) -> Self {
        Table { columns: columns.iter().map(|c| c.to_string()).collect(), rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    fn write_delimited<W: Write>(&self, out: W, delimiter: u8) -> io::Result<()> {
        let mut w = csv::WriterBuilder::new()
            .delimiter(delimiter)
            .terminator(csv::Terminator::Any(b'\n'))
            .from_writer(out);
        w.write_record(&self.columns)?;
        for row in &self.rows {
            w.write_record(row.iter().map(Cell::render))?;
        }
        w.flush()
    }

    pub fn to_json(&self, meta: Value) -> Value {
        let rows = self
            .rows
            .iter()
            .map(|row| {
                let obj: Map<String, Value> =
                    self.columns.iter().cloned().zip(row.iter().map(Cell::to_json)).collect();
                Value::Object(obj)
            })
            .collect();
        let mut top = Map::new();
        top.insert("meta".into(), meta);
        top.insert("rows".into(), Value::Array(rows));
        Value::Object(top)
    }

    pub fn write_to<W: Write>(&self, mut out: W, format: Format, meta: Value) -> io::Result<()> {
        match format {
            Format::Csv => self.write_delimited(out, b','),
            Format::Tsv => self.write_delimited(out, b'\t'),
            Format::Json => {
                serde_json::to_writer_pretty(&mut out, &self.to_json(meta))?;
                out.write_all(b"\n")?;
                out.flush()
            }
        }
    }
}

/// Opens the destination of `spec`, buffered.
pub fn open(spec: &OutputSpec) -> io::Result<Box<dyn Write>> {
    Ok(match &spec.destination {
        Some(path) => Box::new(BufWriter::new(File::create(path)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}
