// Copyright 2026 The lgkit Authors
// SPDX-License-Identifier: Apache-2.0

//! Ordered tables written as CSV or JSON with 17 significant digits.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::Path;

use serde::ser::{Serialize, SerializeMap, SerializeSeq, Serializer};
use serde_json::value::RawValue;

use crate::args::Format;
use crate::error::{CliError, CliResult};

/// `{:.16e}`, which round-trips every finite double.
pub fn fmt_num(v: f64) -> String {
    format!("{v:.16e}")
}

/// A float that serializes as a [`fmt_num`] literal, or `null` when not finite.
#[derive(Debug, Clone, Copy)]
pub struct Num(pub f64);

impl Serialize for Num {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        if !self.0.is_finite() {
            return s.serialize_none();
        }
        let raw = RawValue::from_string(fmt_num(self.0)).map_err(serde::ser::Error::custom)?;
        raw.serialize(s)
    }
}

#[derive(Debug, Clone)]
pub struct Table {
    columns: Vec<&'static str>,
    rows: Vec<Vec<f64>>,
}

struct Row<'a> {
    columns: &'a [&'static str],
    values: &'a [f64],
}

impl Serialize for Row<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.columns.len()))?;
        for (c, v) in self.columns.iter().zip(self.values) {
            map.serialize_entry(c, &Num(*v))?;
        }
        map.end()
    }
}

impl Serialize for Table {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.rows.len()))?;
        for r in &self.rows {
            seq.serialize_element(&Row { columns: &self.columns, values: r })?;
        }
        seq.end()
    }
}

impl Table {
    pub fn new(columns: &[&'static str]) -> Self {
        Table { columns: columns.to_vec(), rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<f64>) {
        assert_eq!(row.len(), self.columns.len(), "row width");
        self.rows.push(row);
    }

    pub fn write_to<W: Write>(&self, format: Format, w: W) -> io::Result<()> {
        match format {
            Format::Csv => {
                let mut wr = csv::Writer::from_writer(w);
                wr.write_record(&self.columns)?;
                for r in &self.rows {
                    wr.write_record(r.iter().map(|&v| fmt_num(v)))?;
                }
                wr.flush()
            }
            Format::Json => write_json(self, w),
        }
    }

    pub fn write(&self, format: Format, out: Option<&Path>) -> CliResult<()> {
        emit(out, |w| self.write_to(format, w))
    }
}

/// Pretty JSON plus a trailing newline.
pub fn write_json<T: Serialize, W: Write>(value: &T, mut w: W) -> io::Result<()> {
    serde_json::to_writer_pretty(&mut w, value)?;
    w.write_all(b"\n")?;
    w.flush()
}

/// Runs `body` against `out`, or stdout when `out` is `None`.
pub fn emit<F>(out: Option<&Path>, body: F) -> CliResult<()>
where
    F: FnOnce(&mut dyn Write) -> io::Result<()>,
{
    let io_err = |source| CliError::Io { path: out.map(Path::to_path_buf), source };
    match out {
        Some(p) => {
            let mut w = BufWriter::new(File::create(p).map_err(io_err)?);
            body(&mut w).map_err(io_err)?;
            w.flush().map_err(io_err)
        }
        None => {
            let stdout = io::stdout();
            let mut w = BufWriter::new(stdout.lock());
            body(&mut w).map_err(io_err)?;
            w.flush().map_err(io_err)
        }
    }
}
