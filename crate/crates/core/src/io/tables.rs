use std::fmt::Write as _;

use crate::complex::{facet_membership_table, MembershipRow, STEP2_ROW8_AS_PRINTED};
use crate::linkage::{Linkage, LinkageError};
use crate::rational::Rational;
use crate::representatives::{default_epsilon, representatives};

/// Both admissibility tables for the six representatives at `ε = 1/100`.
pub fn render_tables() -> String {
    render_tables_with(&default_epsilon()).expect("default ε yields generic representatives")
}

/// Both admissibility tables with a caller-chosen `ε`.
pub fn render_tables_with(epsilon: &Rational) -> Result<String, LinkageError> {
    let reps = representatives();
    let linkages: Vec<Linkage> = reps
        .iter()
        .map(|r| r.template.instantiate(epsilon))
        .collect::<Result<_, _>>()?;
    let table = facet_membership_table(&linkages).expect("representatives are pentagons");
    let columns: Vec<String> = reps.iter().map(|r| r.template.to_string()).collect();

    let mut out = String::new();
    let _ = writeln!(out, "ε = {epsilon}");
    let _ = writeln!(out);
    let _ = writeln!(out, "Step 2: permutohedron facets kept (label with {{5}} appended is admissible)");
    write_table(&mut out, &columns, &table.step2, 16, |row| {
        let mut s = row.label.to_string();
        if row.number == 8 {
            s.push('*');
        }
        s
    });
    let _ = writeln!(
        out,
        "* row 8 is often printed as {STEP2_ROW8_AS_PRINTED}, which is not a partition; \
         the facet in that position is {}",
        table.step2[7].label
    );
    let _ = writeln!(out);
    let _ = writeln!(out, "Step 3: diagonal faces added (admissible, part containing 5 not a singleton)");
    write_table(&mut out, &columns, &table.step3, 30, |row| {
        let mirror = row.mirror.as_ref().expect("step-3 rows carry a mirror");
        format!("{}, {}", row.label, mirror)
    });
    Ok(out)
}

fn write_table(
    out: &mut String,
    columns: &[String],
    rows: &[MembershipRow],
    label_width: usize,
    label: impl Fn(&MembershipRow) -> String,
) {
    let widths: Vec<usize> = columns.iter().map(|c| c.chars().count()).collect();
    let _ = write!(out, "{:>3}  {:<label_width$}", "#", "partition");
    for c in columns {
        let _ = write!(out, "  {c}");
    }
    let _ = writeln!(out);
    for row in rows {
        let _ = write!(out, "{:>3}  {:<label_width$}", row.number, label(row));
        for (&v, &w) in row.values.iter().zip(&widths) {
            let mark = if v { "v" } else { "-" };
            let _ = write!(out, "  {mark:^w$}");
        }
        let trimmed = out.trim_end_matches(' ').len();
        out.truncate(trimmed);
        let _ = writeln!(out);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn marks(text: &str, label: &str) -> String {
        let line = text
            .lines()
            .find(|l| l.contains(label))
            .unwrap_or_else(|| panic!("no row {label}"));
        line.split_whitespace().rev().take(6).collect::<Vec<_>>().into_iter().rev().collect()
    }

    #[test]
    fn selected_rows() {
        let text = render_tables();
        assert_eq!(marks(&text, "{4}{1,2,3}{5}"), "v-----");
        assert_eq!(marks(&text, "{2,3}{1}{4,5},"), "-vvvvv");
        for label in ["{3}{4}{1,2,5},", "{1}{3}{2,4,5},"] {
            assert_eq!(marks(&text, label), "------");
        }
        assert!(text.contains("{2,3,4}{1}{5}*"));
        assert!(text.contains(STEP2_ROW8_AS_PRINTED));
    }

    #[test]
    fn bad_epsilon() {
        assert!(matches!(
            render_tables_with(&Rational::new(1, 2)),
            Err(LinkageError::NonGeneric { .. })
        ));
    }
}
