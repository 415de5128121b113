//! Appendix value tables and derivative sequences transcribed from the
//! printed source, compiled into the binary.

use rdp_core::classify::AppendixSequence;
use rdp_core::Residue;

pub const TABLE1_D_Z5: &str = include_str!("../testdata/table1_d_z5.csv");
pub const TABLE2_D_Z7: &str = include_str!("../testdata/table2_d_z7.csv");

pub fn sequence_csv(which: AppendixSequence) -> &'static str {
    match which {
        AppendixSequence::B0 => include_str!("../testdata/b0.csv"),
        AppendixSequence::B5 => include_str!("../testdata/b5.csv"),
        AppendixSequence::B6 => include_str!("../testdata/b6.csv"),
        AppendixSequence::B7 => include_str!("../testdata/b7.csv"),
    }
}

/// The `value` row of a two-line sequence file.
pub fn parse_sequence(csv: &str) -> Vec<Residue> {
    csv.lines()
        .find_map(|l| l.strip_prefix("value,"))
        .map(|row| {
            row.split(',')
                .map(|c| c.trim().parse().expect("numeric cell"))
                .collect()
        })
        .unwrap_or_default()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn golden_shapes() {
        assert_eq!(TABLE1_D_Z5.lines().count(), 6);
        assert_eq!(TABLE2_D_Z7.lines().count(), 8);
        for s in AppendixSequence::ALL {
            assert_eq!(
                parse_sequence(sequence_csv(s)).len() as u64,
                s.shape().1 + 1
            );
        }
    }
}
