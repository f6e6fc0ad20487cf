//! Output assembly: every command fills a [`Report`] with ordered key/value
//! pairs for the machine-readable format and free text for humans.

use std::fmt::Display;

use clap::ValueEnum;

/// First line of every machine-readable report.
pub const SCHEMA: &str = "schema=algshift-report/1";

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    /// One `key=value` per line after a schema header.
    Kv,
}

#[derive(Debug, Default)]
pub struct Report {
    pairs: Vec<(String, String)>,
    text: Vec<String>,
}

impl Report {
    pub fn new(command: &str) -> Self {
        let mut r = Report::default();
        r.kv("command", command);
        r
    }

    pub fn kv(&mut self, key: impl Into<String>, value: impl Display) -> &mut Self {
        self.pairs.push((key.into(), value.to_string()));
        self
    }

    pub fn line(&mut self, text: impl Into<String>) -> &mut Self {
        self.text.push(text.into());
        self
    }

    /// Adds the pair and echoes it as a `key: value` text line.
    pub fn both(&mut self, key: &str, value: impl Display) -> &mut Self {
        let value = value.to_string();
        self.line(format!("{key}: {value}"));
        self.kv(key, value)
    }

    pub fn render(&self, format: Format) -> String {
        let mut out = String::new();
        match format {
            Format::Text => {
                for l in &self.text {
                    out.push_str(l);
                    out.push('\n');
                }
            }
            Format::Kv => {
                out.push_str(SCHEMA);
                out.push('\n');
                for (k, v) in &self.pairs {
                    out.push_str(k);
                    out.push('=');
                    out.push_str(v);
                    out.push('\n');
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn renders_both_formats() {
        let mut r = Report::new("check");
        r.both("shifted", true).line("done");
        assert_eq!(r.render(Format::Text), "shifted: true\ndone\n");
        assert_eq!(r.render(Format::Kv), format!("{SCHEMA}\ncommand=check\nshifted=true\n"));
    }
}
