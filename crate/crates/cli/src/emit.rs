//! Output plumbing: provenance headers, CSV assembly, atomic writes.

use std::io::Write;
use std::path::Path;

/// What every run records about itself: version, argument list, and the
/// seed when randomness is involved.
pub struct Provenance {
    pub version: &'static str,
    pub argv: String,
    pub seed: Option<u64>,
}

impl Provenance {
    pub fn new(seed: Option<u64>) -> Self {
        let argv = std::env::args().skip(1).collect::<Vec<_>>().join(" ");
        Provenance { version: env!("CARGO_PKG_VERSION"), argv, seed }
    }

    pub fn csv_comments(&self) -> String {
        let mut s = format!("# supertree {}\n# args: {}\n", self.version, self.argv);
        if let Some(seed) = self.seed {
            s.push_str(&format!("# seed: {seed}\n"));
        }
        s
    }

    pub fn json_meta(&self) -> serde_json::Value {
        let mut meta = serde_json::json!({
            "version": self.version,
            "args": self.argv,
        });
        if let Some(seed) = self.seed {
            meta["seed"] = serde_json::json!(seed);
        }
        meta
    }
}

/// CSV document: provenance comments, one header row, then the data rows.
pub fn csv_table<I>(prov: &Provenance, header: &[&str], rows: I) -> String
where
    I: IntoIterator<Item = String>,
{
    let mut out = prov.csv_comments();
    out.push_str(&header.join(","));
    out.push('\n');
    for row in rows {
        out.push_str(&row);
        out.push('\n');
    }
    out
}

pub fn json_document(value: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable value");
    s.push('\n');
    s
}

/// Writes to stdout for "-", otherwise to a temp file renamed into place so
/// a reader never observes a half-written artifact.
pub fn write_output(out: &str, content: &str) -> std::io::Result<()> {
    if out == "-" {
        let stdout = std::io::stdout();
        let mut lock = stdout.lock();
        lock.write_all(content.as_bytes())?;
        return lock.flush();
    }
    let path = Path::new(out);
    let tmp = path.with_extension(format!("tmp{}", std::process::id()));
    std::fs::write(&tmp, content)?;
    std::fs::rename(&tmp, path)
}

/// Shortest-roundtrip float rendering with a locale-independent point.
pub fn fmt_f64(x: f64) -> String {
    format!("{x}")
}
