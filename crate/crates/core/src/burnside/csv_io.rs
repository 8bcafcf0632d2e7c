//! One-row CSV layout shared by orbit-coefficient and mark vectors: a header
//! of class labels and a single row of integers.

use crate::error::{Error, Result};

pub fn write_labelled_row<S: AsRef<str>>(labels: &[S], values: &[i64]) -> Result<String> {
    if labels.len() != values.len() {
        return Err(Error::Input("label and value counts differ".into()));
    }
    let mut w = csv::Writer::from_writer(Vec::new());
    let io = |e: csv::Error| Error::Input(e.to_string());
    w.write_record(labels.iter().map(|l| l.as_ref()))
        .map_err(io)?;
    w.write_record(values.iter().map(|v| v.to_string()))
        .map_err(io)?;
    let bytes = w.into_inner().map_err(|e| Error::Input(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| Error::Input(e.to_string()))
}

/// Reads a labelled row and returns the values in the order of `labels`.
/// Columns may appear in any order but every label must occur exactly once.
pub fn read_labelled_row<S: AsRef<str>>(text: &str, labels: &[S]) -> Result<Vec<i64>> {
    let mut r = csv::ReaderBuilder::new()
        .has_headers(true)
        .trim(csv::Trim::All)
        .from_reader(text.as_bytes());
    let parse = |line: usize, message: String| Error::Parse { line, message };
    let header = r.headers().map_err(|e| parse(1, e.to_string()))?.clone();
    let mut records = r.records();
    let row = records
        .next()
        .ok_or_else(|| parse(2, "missing data row".into()))?
        .map_err(|e| parse(2, e.to_string()))?;
    if records.next().is_some() {
        return Err(parse(3, "expected exactly one data row".into()));
    }
    if header.len() != labels.len() {
        return Err(parse(
            1,
            format!("expected {} columns, found {}", labels.len(), header.len()),
        ));
    }
    let mut out = vec![None; labels.len()];
    for (h, v) in header.iter().zip(row.iter()) {
        let k = labels
            .iter()
            .position(|l| l.as_ref() == h)
            .ok_or_else(|| parse(1, format!("unknown class label {:?}", h)))?;
        if out[k].is_some() {
            return Err(parse(1, format!("duplicate class label {:?}", h)));
        }
        let value: i64 = v
            .parse()
            .map_err(|_| parse(2, format!("bad integer {:?} in column {:?}", v, h)))?;
        out[k] = Some(value);
    }
    Ok(out.into_iter().map(|v| v.unwrap_or_default()).collect())
}
