use std::fmt::Display;
use std::fmt::Write;

use serde::Serialize;

/// A CSV table: header plus rows, each field already rendered.
pub struct Table {
    out: String,
}

impl Table {
    pub fn new(header: &[&str]) -> Self {
        Table { out: format!("{}\n", header.join(",")) }
    }

    pub fn row(&mut self, fields: &[&dyn Display]) {
        let line: Vec<String> = fields.iter().map(|f| f.to_string()).collect();
        writeln!(self.out, "{}", line.join(",")).unwrap();
    }

    pub fn finish(self) -> String {
        self.out
    }
}

pub fn json<T: Serialize + ?Sized>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable output");
    s.push('\n');
    s
}

/// Renders an optional value as an empty CSV field when absent.
pub fn opt<T: Display>(v: Option<T>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}
