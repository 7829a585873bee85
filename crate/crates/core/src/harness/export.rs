use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Read, Write};
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

use super::experiment::{ExperimentReport, SweepReport};
use super::run::{IterationRecord, RunTrace};

pub const TRACE_HEADER: &str = "iteration,gbest,pop_best,pop_mean,mutations,elapsed_ms";

/// Writes one header line and one row per iteration. Floats use the
/// shortest representation that parses back to the same value.
pub fn write_trace_csv(trace: &RunTrace, mut out: impl Write) -> Result<()> {
    writeln!(out, "{TRACE_HEADER}")?;
    for r in &trace.records {
        writeln!(
            out,
            "{},{:?},{:?},{:?},{},{:?}",
            r.iteration, r.gbest, r.pop_best, r.pop_mean, r.mutations, r.elapsed_ms
        )?;
    }
    out.flush()?;
    Ok(())
}

pub fn save_trace_csv(trace: &RunTrace, path: &Path) -> Result<()> {
    write_trace_csv(trace, BufWriter::new(File::create(path)?))
}

pub fn read_trace_csv(input: impl Read) -> Result<Vec<IterationRecord>> {
    let mut lines = BufReader::new(input).lines();
    match lines.next().transpose()? {
        Some(h) if h.trim() == TRACE_HEADER => {}
        _ => return Err(Error::InvalidArgument("trace CSV is missing its header".into())),
    }
    let bad = |line: &str| Error::InvalidArgument(format!("malformed trace row `{line}`"));
    let mut records = Vec::new();
    for line in lines {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let f: Vec<&str> = line.split(',').collect();
        if f.len() != 6 {
            return Err(bad(&line));
        }
        let num = |s: &str| s.parse::<f64>().map_err(|_| bad(&line));
        records.push(IterationRecord {
            iteration: f[0].parse().map_err(|_| bad(&line))?,
            gbest: num(f[1])?,
            pop_best: num(f[2])?,
            pop_mean: num(f[3])?,
            mutations: f[4].parse().map_err(|_| bad(&line))?,
            elapsed_ms: num(f[5])?,
        });
    }
    Ok(records)
}

/// Top-level JSON document written by `experiment` and `sweep`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Summary {
    Experiment(ExperimentReport),
    Sweep(SweepReport),
}

pub fn write_summary_json(summary: &Summary, out: impl Write) -> Result<()> {
    let mut out = BufWriter::new(out);
    serde_json::to_writer_pretty(&mut out, summary)?;
    writeln!(out)?;
    out.flush()?;
    Ok(())
}

pub fn save_summary_json(summary: &Summary, path: &Path) -> Result<()> {
    write_summary_json(summary, File::create(path)?)
}

pub fn read_summary_json(input: impl Read) -> Result<Summary> {
    Ok(serde_json::from_reader(BufReader::new(input))?)
}

pub fn load_summary_json(path: &Path) -> Result<Summary> {
    read_summary_json(File::open(path)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::{parse_problem_list, run_experiment, run_single, AlgorithmId, ExperimentSpec, RunConfig};

    #[test]
    fn csv_round_trip() {
        let t = run_single(AlgorithmId::Mgps, "F9".parse().unwrap(), &RunConfig::new(6, 25), 9).unwrap();
        let mut buf = Vec::new();
        write_trace_csv(&t, &mut buf).unwrap();
        let text = String::from_utf8(buf.clone()).unwrap();
        assert_eq!(text.lines().count(), 26);
        assert_eq!(text.lines().next().unwrap(), TRACE_HEADER);
        assert_eq!(read_trace_csv(buf.as_slice()).unwrap(), t.records);
    }

    #[test]
    fn csv_rejects_garbage() {
        assert!(read_trace_csv("a,b\n".as_bytes()).is_err());
        let bad = format!("{TRACE_HEADER}\n1,2,3\n");
        assert!(read_trace_csv(bad.as_bytes()).is_err());
    }

    #[test]
    fn json_round_trip() {
        let mut spec = ExperimentSpec::new(vec![AlgorithmId::Gps, AlgorithmId::Mgps], parse_problem_list("F1,F15").unwrap());
        spec.pop_size = Some(6);
        spec.max_iter = Some(10);
        spec.runs = Some(3);
        let s = Summary::Experiment(run_experiment(&spec).unwrap());
        let mut buf = Vec::new();
        write_summary_json(&s, &mut buf).unwrap();
        assert_eq!(read_summary_json(buf.as_slice()).unwrap(), s);
        let text = String::from_utf8(buf).unwrap();
        assert!(text.find("\"rows\"").unwrap() < text.find("\"tallies\"").unwrap());
    }

    #[test]
    fn unwritable_path_is_io_error() {
        let t = run_single(AlgorithmId::Pso, "F1".parse().unwrap(), &RunConfig::new(4, 2), 1).unwrap();
        let err = save_trace_csv(&t, Path::new("/nonexistent-dir/x.csv")).unwrap_err();
        assert!(matches!(err, Error::Io(_)));
    }
}
