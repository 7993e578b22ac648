//! CSV rendering of estimate records.

use std::io::{self, Write};

use super::EstimateRecord;

/// Write records as CSV with the fixed header
/// `target,x,estimate,std_error,ci_low,ci_high,exceed_count`.
/// Optional fields render as empty cells. Formatting is the shortest
/// round-trip representation, so identical runs produce identical bytes.
pub fn write_records_csv<W: Write>(mut w: W, records: &[EstimateRecord]) -> io::Result<()> {
    writeln!(w, "target,x,estimate,std_error,ci_low,ci_high,exceed_count")?;
    for r in records {
        let x = r.x.map(|v| v.to_string()).unwrap_or_default();
        let exceed = r.exceed_count.map(|v| v.to_string()).unwrap_or_default();
        writeln!(
            w,
            "{},{},{},{},{},{},{}",
            r.target, x, r.estimate, r.std_error, r.ci_low, r.ci_high, exceed
        )?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn renders_header_and_optional_fields() {
        let records = vec![
            EstimateRecord {
                target: "E[M]".into(),
                x: None,
                estimate: 1.25,
                std_error: 0.003,
                ci_low: 1.24,
                ci_high: 1.26,
                exceed_count: None,
            },
            EstimateRecord {
                target: "P(M>x)".into(),
                x: Some(2.0),
                estimate: 0.05,
                std_error: 0.001,
                ci_low: 0.048,
                ci_high: 0.052,
                exceed_count: Some(500),
            },
        ];
        let mut buf = Vec::new();
        write_records_csv(&mut buf, &records).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(
            lines[0],
            "target,x,estimate,std_error,ci_low,ci_high,exceed_count"
        );
        assert_eq!(lines[1], "E[M],,1.25,0.003,1.24,1.26,");
        assert_eq!(lines[2], "P(M>x),2,0.05,0.001,0.048,0.052,500");
    }
}
