//! Per-trial records and their CSV form.

use std::fmt;
use std::io::{Read, Write};
use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::graph::Seed;

pub const CSV_HEADER: &str = "point_index,trial_index,r,n,N,p,t,seed,strategy,outcome,witness,elapsed_ms";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    /// The exact search produced a certified avoiding colouring.
    ArrowFailsCertified,
    /// An adversary strategy produced an avoiding colouring.
    AvoidingFound,
    /// Every strategy failed.
    NoAvoidingFound,
    /// The exact search proved the arrow relation.
    ArrowHoldsCertified,
    /// Some check was inconclusive and nothing was decided.
    Unknown,
}

impl Outcome {
    pub fn as_str(self) -> &'static str {
        match self {
            Outcome::ArrowFailsCertified => "arrow_fails_certified",
            Outcome::AvoidingFound => "avoiding_found",
            Outcome::NoAvoidingFound => "no_avoiding_found",
            Outcome::ArrowHoldsCertified => "arrow_holds_certified",
            Outcome::Unknown => "unknown",
        }
    }

    /// An avoiding colouring was exhibited.
    pub fn is_success(self) -> bool {
        matches!(self, Outcome::ArrowFailsCertified | Outcome::AvoidingFound)
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Outcome {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        [
            Outcome::ArrowFailsCertified,
            Outcome::AvoidingFound,
            Outcome::NoAvoidingFound,
            Outcome::ArrowHoldsCertified,
            Outcome::Unknown,
        ]
        .into_iter()
        .find(|o| o.as_str() == s)
        .ok_or_else(|| format!("unknown outcome {s:?}"))
    }
}

mod seed_text {
    use serde::{Deserialize, Deserializer, Serializer};

    use crate::graph::Seed;

    pub fn serialize<S: Serializer>(seed: &Seed, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(seed)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Seed, D::Error> {
        let text = String::deserialize(d)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TrialRecord {
    pub point_index: usize,
    pub trial_index: usize,
    pub r: usize,
    pub n: usize,
    #[serde(rename = "N")]
    pub vertices: usize,
    pub p: f64,
    pub t: usize,
    #[serde(with = "seed_text")]
    pub seed: Seed,
    /// The deciding strategy, or `-` when nothing decided.
    pub strategy: String,
    pub outcome: Outcome,
    /// `key=value;...` summary of the deciding check.
    pub witness: String,
    pub elapsed_ms: u64,
}

pub fn write_csv<W: Write>(records: &[TrialRecord], out: W) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    if records.is_empty() {
        w.write_record(CSV_HEADER.split(','))?;
    }
    for r in records {
        w.serialize(r)?;
    }
    w.flush()?;
    Ok(())
}

pub fn csv_string(records: &[TrialRecord]) -> String {
    let mut buf = Vec::new();
    write_csv(records, &mut buf).expect("writing to memory");
    String::from_utf8(buf).expect("csv output is utf-8")
}

pub fn parse_csv<R: Read>(input: R) -> csv::Result<Vec<TrialRecord>> {
    let mut rd = csv::Reader::from_reader(input);
    let header: Vec<String> = rd.headers()?.iter().map(str::to_string).collect();
    if header.join(",") != CSV_HEADER {
        return Err(csv::Error::from(std::io::Error::new(
            std::io::ErrorKind::InvalidData,
            format!("unexpected CSV header {:?}", header.join(",")),
        )));
    }
    rd.deserialize().collect()
}

/// Writes `records` to `path`, with the path in any error.
pub fn emit_csv(records: &[TrialRecord], path: &Path) -> Result<(), String> {
    let file = std::fs::File::create(path).map_err(|e| format!("{}: {e}", path.display()))?;
    write_csv(records, std::io::BufWriter::new(file)).map_err(|e| format!("{}: {e}", path.display()))
}

pub fn read_csv(path: &Path) -> Result<Vec<TrialRecord>, String> {
    let file = std::fs::File::open(path).map_err(|e| format!("{}: {e}", path.display()))?;
    parse_csv(std::io::BufReader::new(file)).map_err(|e| format!("{}: {e}", path.display()))
}
