//! The `enumerate` command: tableau and diagram families of one shape.

use std::fmt::Write as _;
use std::str::FromStr;

use anyhow::{bail, Result};
use hooklab::diagrams::{excited_peaks, generalized_excited_diagrams, pleasant_diagrams};
use hooklab::tableaux::{
    enum_bsyt, enum_sit, enum_ssvt, enum_ssyt_maxentry, enum_syt, enum_weight_bounded, WeightFamily,
};
use hooklab::{Cell, Partition, SkewShape};
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Sit,
    Syt,
    Ssyt,
    Rpp,
    It,
    Bsyt,
    Ssvt,
    Excited,
    Gexcited,
    Pleasant,
}

impl Family {
    const NAMES: [(&'static str, Family); 10] = [
        ("sit", Family::Sit),
        ("syt", Family::Syt),
        ("ssyt", Family::Ssyt),
        ("rpp", Family::Rpp),
        ("it", Family::It),
        ("bsyt", Family::Bsyt),
        ("ssvt", Family::Ssvt),
        ("excited", Family::Excited),
        ("gexcited", Family::Gexcited),
        ("pleasant", Family::Pleasant),
    ];

    pub fn as_str(self) -> &'static str {
        Self::NAMES.iter().find(|(_, f)| *f == self).map(|(n, _)| *n).unwrap_or("?")
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Self::NAMES.iter().find(|(n, _)| *n == s).map(|(_, f)| *f).ok_or_else(|| {
            let names: Vec<&str> = Self::NAMES.iter().map(|(n, _)| *n).collect();
            format!("unknown family '{s}' (expected one of {})", names.join(", "))
        })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CellJson {
    pub r: usize,
    pub c: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub entry: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub entries: Option<Vec<u32>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct TableauJson {
    pub cells: Vec<CellJson>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Position {
    pub r: usize,
    pub c: usize,
}

impl From<Cell> for Position {
    fn from(c: Cell) -> Self {
        Position { r: c.row, c: c.col }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct DiagramJson {
    pub ambient: String,
    pub cells: Vec<Position>,
    /// Excited peaks; empty for families without a peak structure.
    pub peaks: Vec<Position>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Listing {
    pub shape: String,
    pub family: &'static str,
    pub count: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tableaux: Option<Vec<TableauJson>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub diagrams: Option<Vec<DiagramJson>>,
}

/// Bounds some families need: largest entry for `ssyt`/`ssvt`, largest total for `rpp`/`it`.
#[derive(Clone, Copy, Debug, Default)]
pub struct Bounds {
    pub d: Option<usize>,
    pub max_weight: Option<u64>,
}

fn single(c: Cell, v: u32) -> CellJson {
    CellJson { r: c.row, c: c.col, entry: Some(v), entries: None }
}

fn diagram(ambient: &Partition, cells: Vec<Cell>, peaks: Vec<Cell>) -> DiagramJson {
    DiagramJson {
        ambient: ambient.to_string(),
        cells: cells.into_iter().map(Position::from).collect(),
        peaks: peaks.into_iter().map(Position::from).collect(),
    }
}

pub fn enumerate(family: Family, sh: &SkewShape, bounds: Bounds) -> Result<Listing> {
    let plain = |mut ts: Vec<hooklab::tableaux::Tableau>| {
        ts.sort();
        ts.iter()
            .map(|t| TableauJson { cells: t.cells().into_iter().map(|(c, v)| single(c, v)).collect() })
            .collect::<Vec<_>>()
    };
    let d = || bounds.d.unwrap_or(sh.outer().length().max(1)) as u32;
    let weight = || match bounds.max_weight {
        Some(w) => Ok(w),
        None => bail!("family '{}' needs --max-weight", family.as_str()),
    };
    let lam = sh.outer();
    let (tableaux, diagrams) = match family {
        Family::Sit => (Some(plain(enum_sit(sh))), None),
        Family::Syt => (Some(plain(enum_syt(sh))), None),
        Family::Bsyt => (Some(plain(enum_bsyt(sh))), None),
        Family::Ssyt => (Some(plain(enum_ssyt_maxentry(sh, d()))), None),
        Family::Rpp => (Some(plain(enum_weight_bounded(WeightFamily::Rpp, sh, weight()?))), None),
        Family::It => (Some(plain(enum_weight_bounded(WeightFamily::It, sh, weight()?))), None),
        Family::Ssvt => {
            let mut ts = enum_ssvt(sh, d());
            ts.sort();
            let list = ts
                .iter()
                .map(|t| TableauJson {
                    cells: t
                        .cells()
                        .into_iter()
                        .map(|(c, vs)| CellJson { r: c.row, c: c.col, entry: None, entries: Some(vs.to_vec()) })
                        .collect(),
                })
                .collect();
            (Some(list), None)
        }
        Family::Excited => {
            let list =
                excited_peaks(sh)?.into_iter().map(|(dg, peaks)| diagram(lam, dg.cells().to_vec(), peaks)).collect();
            (None, Some(list))
        }
        Family::Gexcited => {
            let mut ds = generalized_excited_diagrams(sh)?;
            ds.sort();
            (None, Some(ds.into_iter().map(|dg| diagram(lam, dg.cells().to_vec(), Vec::new())).collect()))
        }
        Family::Pleasant => {
            let mut ps = pleasant_diagrams(sh)?;
            for p in &mut ps {
                p.sort();
            }
            ps.sort();
            (None, Some(ps.into_iter().map(|p| diagram(lam, p, Vec::new())).collect()))
        }
    };
    let count = tableaux.as_ref().map(Vec::len).or(diagrams.as_ref().map(Vec::len)).unwrap_or(0);
    Ok(Listing { shape: sh.to_string(), family: family.as_str(), count, tableaux, diagrams })
}

/// Rows of a tableau, blank outside the skew shape, entries right-aligned.
fn render_tableau(t: &TableauJson) -> String {
    let text = |c: &CellJson| match (&c.entry, &c.entries) {
        (Some(v), _) => v.to_string(),
        (None, Some(vs)) => format!("{{{}}}", vs.iter().map(u32::to_string).collect::<Vec<_>>().join(",")),
        _ => String::new(),
    };
    let width = t.cells.iter().map(|c| text(c).len()).max().unwrap_or(1);
    let rows = t.cells.iter().map(|c| c.r).max().unwrap_or(0);
    let mut out = String::new();
    for r in 1..=rows {
        let row: Vec<&CellJson> = t.cells.iter().filter(|c| c.r == r).collect();
        let last = row.iter().map(|c| c.c).max().unwrap_or(0);
        let line: Vec<String> = (1..=last)
            .map(|col| match row.iter().find(|c| c.c == col) {
                Some(c) => format!("{:>width$}", text(c)),
                None => format!("{:>width$}", "."),
            })
            .collect();
        let _ = writeln!(out, "{}", line.join(" "));
    }
    out
}

/// `#` for diagram cells, `o` for peaks, `.` for the rest of the ambient shape.
fn render_diagram(d: &DiagramJson) -> Result<String> {
    let lam: Partition = d.ambient.parse()?;
    let mut out = String::new();
    for r in 1..=lam.length() {
        let line: String = (1..=lam.part(r))
            .map(|c| {
                if d.cells.iter().any(|p| p.r == r && p.c == c) {
                    '#'
                } else if d.peaks.iter().any(|p| p.r == r && p.c == c) {
                    'o'
                } else {
                    '.'
                }
            })
            .collect();
        let _ = writeln!(out, "{line}");
    }
    Ok(out)
}

pub fn table(l: &Listing) -> Result<String> {
    let mut out = format!("{} of {}: {}\n", l.family, l.shape, l.count);
    for t in l.tableaux.iter().flatten() {
        out.push('\n');
        out.push_str(&render_tableau(t));
    }
    for d in l.diagrams.iter().flatten() {
        out.push('\n');
        out.push_str(&render_diagram(d)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sh(s: &str) -> SkewShape {
        s.parse().unwrap()
    }

    #[test]
    fn pinned_counts() {
        let s = sh("3,3,2/2,1");
        let count = |f| enumerate(f, &s, Bounds::default()).unwrap().count;
        assert_eq!(count(Family::Excited), 5);
        assert_eq!(count(Family::Gexcited), 11);
        assert_eq!(count(Family::Pleasant), 88);
        assert_eq!(enumerate(Family::Sit, &sh("2,2"), Bounds::default()).unwrap().count, 3);
    }

    #[test]
    fn weight_bounded_families_need_a_bound() {
        assert!(enumerate(Family::Rpp, &sh("2,1"), Bounds::default()).is_err());
        let b = Bounds { max_weight: Some(2), ..Bounds::default() };
        // A single cell holds 0, 1 or 2.
        assert!(enumerate(Family::Rpp, &sh("1"), b).unwrap().count == 3);
    }

    #[test]
    fn family_names_round_trip() {
        for (name, f) in Family::NAMES {
            assert_eq!(name.parse::<Family>().unwrap(), f);
            assert_eq!(f.as_str(), name);
        }
    }

    #[test]
    fn renders_ssvt_entries() {
        let l = enumerate(Family::Ssvt, &sh("1"), Bounds { d: Some(2), ..Bounds::default() }).unwrap();
        assert_eq!(l.count, 3);
        assert!(table(&l).unwrap().contains("{1,2}"));
    }
}
