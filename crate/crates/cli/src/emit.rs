use std::io::{self, Write};

use clap::ValueEnum;
use serde::Serialize;
use serde_json::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    /// One JSON object per line.
    Json,
    /// Header row plus one row per record; arrays are space-joined.
    Csv,
    /// Free-form text, not meant for parsing.
    Human,
}

/// Writes homogeneous records to stdout in the selected format.
pub struct Emitter {
    format: Format,
    out: io::BufWriter<io::Stdout>,
    header: Option<Vec<String>>,
}

impl Emitter {
    pub fn new(format: Format) -> Self {
        Self {
            format,
            out: io::BufWriter::new(io::stdout()),
            header: None,
        }
    }

    pub fn format(&self) -> Format {
        self.format
    }

    pub fn emit<T: Serialize>(&mut self, record: &T, human: impl FnOnce() -> String) -> io::Result<()> {
        match self.format {
            Format::Json => {
                serde_json::to_writer(&mut self.out, record)?;
                writeln!(self.out)
            }
            Format::Human => writeln!(self.out, "{}", human()),
            Format::Csv => {
                let value = serde_json::to_value(record)?;
                let Value::Object(map) = value else {
                    return Err(io::Error::new(io::ErrorKind::InvalidData, "record is not an object"));
                };
                let mut wtr = csv::WriterBuilder::new().has_headers(false).from_writer(&mut self.out);
                if self.header.is_none() {
                    let keys: Vec<String> = map.keys().cloned().collect();
                    wtr.write_record(&keys)?;
                    self.header = Some(keys);
                }
                wtr.write_record(map.values().map(cell))?;
                wtr.flush()
            }
        }
    }

    /// Text shown only in human format.
    pub fn note(&mut self, text: &str) -> io::Result<()> {
        if self.format == Format::Human {
            writeln!(self.out, "{text}")?;
        }
        Ok(())
    }

    pub fn raw(&mut self) -> &mut impl Write {
        &mut self.out
    }

    pub fn finish(mut self) -> io::Result<()> {
        self.out.flush()
    }
}

fn cell(v: &Value) -> String {
    match v {
        Value::Null => String::new(),
        Value::String(s) => s.clone(),
        Value::Array(items) => items.iter().map(cell).collect::<Vec<_>>().join(" "),
        other => other.to_string(),
    }
}
