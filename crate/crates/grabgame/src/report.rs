//! CSV rendering of classification records.

use std::io::Write;

use grabgame_core::ClassificationRecord;

use crate::graph6::emit_graph6;

pub const CSV_HEADER: [&str; 8] = [
    "graph6",
    "n",
    "in_a2",
    "in_h2",
    "odd_cstar_free",
    "consistent",
    "counterexample_subset",
    "counterexample_weights",
];

pub fn csv_row(rec: &ClassificationRecord) -> [String; 8] {
    let (subset, weights) = match &rec.h2_counterexample {
        Some(cx) => (
            cx.subset.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" "),
            cx.weights.to_bitstring().unwrap_or_default(),
        ),
        None => (String::new(), String::new()),
    };
    [
        emit_graph6(&rec.graph),
        rec.n().to_string(),
        rec.in_a2.to_string(),
        rec.in_h2.to_string(),
        rec.odd_cstar_free.to_string(),
        rec.conjecture_consistent().to_string(),
        subset,
        weights,
    ]
}

pub fn write_csv<'a, W, I>(out: W, records: I) -> csv::Result<()>
where
    W: Write,
    I: IntoIterator<Item = &'a ClassificationRecord>,
{
    let mut w = csv::Writer::from_writer(out);
    w.write_record(CSV_HEADER)?;
    for rec in records {
        w.write_record(csv_row(rec))?;
    }
    w.flush()?;
    Ok(())
}

/// One record as a single CSV line without the header.
pub fn csv_line(rec: &ClassificationRecord) -> String {
    let mut w = csv::WriterBuilder::new().has_headers(false).from_writer(Vec::new());
    w.write_record(csv_row(rec)).expect("in-memory write");
    let bytes = w.into_inner().expect("in-memory flush");
    String::from_utf8(bytes).expect("utf-8").trim_end().to_string()
}
