//! Published closed-form values for the named families, transcribed as
//! printed, and a harness that checks each one against the engine.
//!
//! The engine is treated as ground truth and a printed formula as a
//! hypothesis: disagreements are reported as `mismatch` rows, never
//! corrected. Each cell carries its own parameter convention. In particular
//! the wheel appears in two conventions: `thm21` cells use `W_{n+1} = C_n ∨ K_1`
//! (rim n) while `t1`/`t2` cells use `W_n` with n vertices in total (rim n-1).

use std::collections::{BTreeMap, HashMap};
use std::f64::consts::{PI, SQRT_2};
use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::VerifyError;
use crate::families::{generate, Family, FamilySpec};
use crate::graph::DegreePairProfile;
use crate::index::{all_indices, index_from_profile, IndexId};
use crate::report::ser_g17;

/// Default verification tolerance: relative, or absolute when either side is 0.
pub const DEFAULT_TOLERANCE: f64 = 1e-9;

/// Which table of closed forms a cell belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Source {
    /// SO1 of the eight specific families.
    #[serde(rename = "thm21")]
    Specific,
    /// SO2–SO4 of the eight specific families.
    #[serde(rename = "t1")]
    Table1,
    /// SO5–SO6 of the eight specific families.
    #[serde(rename = "t2")]
    Table2,
    /// SO1–SO6 of the m × n grid.
    #[serde(rename = "grid")]
    Grid,
    /// SO1 of the six chain cacti.
    #[serde(rename = "cactus-so1")]
    CactusSo1,
    /// SO2–SO6 of the six chain cacti.
    #[serde(rename = "t3")]
    Table3,
}

impl Source {
    pub const ALL: [Source; 6] = [
        Source::Specific,
        Source::Table1,
        Source::Table2,
        Source::Grid,
        Source::CactusSo1,
        Source::Table3,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Source::Specific => "thm21",
            Source::Table1 => "t1",
            Source::Table2 => "t2",
            Source::Grid => "grid",
            Source::CactusSo1 => "cactus-so1",
            Source::Table3 => "t3",
        }
    }

    /// Indices covered by this source, in column order.
    pub fn indices(self) -> &'static [IndexId] {
        use IndexId::*;
        match self {
            Source::Specific | Source::CactusSo1 => &[So1],
            Source::Table1 => &[So2, So3, So4],
            Source::Table2 => &[So5, So6],
            Source::Grid => &[So1, So2, So3, So4, So5, So6],
            Source::Table3 => &[So2, So3, So4, So5, So6],
        }
    }

    /// Families covered by this source, in row order.
    pub fn families(self) -> &'static [Family] {
        match self {
            Source::Specific | Source::Table1 | Source::Table2 => &SPECIFIC_FAMILIES,
            Source::Grid => &[Family::Grid],
            Source::CactusSo1 | Source::Table3 => &Family::CACTUS_CHAINS,
        }
    }
}

impl fmt::Display for Source {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Source {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Source::ALL
            .into_iter()
            .find(|src| src.name() == s)
            .ok_or_else(|| format!("unknown table {s:?}"))
    }
}

const SPECIFIC_FAMILIES: [Family; 8] = [
    Family::Path,
    Family::Star,
    Family::CompleteBipartite,
    Family::Wheel,
    Family::Ladder,
    Family::Friendship,
    Family::Book,
    Family::DutchWindmill,
];

type Evaluator = fn(f64, f64) -> f64;

/// One printed closed form: `evaluate(n, m)` transcribes the formula and is
/// only meaningful where `admits(n, m)` holds. `m` is ignored by
/// one-parameter families.
#[derive(Clone, Copy)]
pub struct FormulaCell {
    pub source: Source,
    pub family: Family,
    pub index: IndexId,
    /// The formula as printed, in plain text.
    pub printed: &'static str,
    /// The stated parameter range.
    pub validity: &'static str,
    admits: fn(usize, usize) -> bool,
    evaluate: Evaluator,
}

impl fmt::Debug for FormulaCell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}/{}", self.source, self.family, self.index)
    }
}

impl FormulaCell {
    pub fn key(&self) -> CellKey {
        CellKey {
            source: self.source,
            family: self.family,
            index: self.index,
        }
    }

    pub fn admits(&self, n: usize, m: Option<usize>) -> bool {
        if self.family.takes_m() && m.is_none() {
            return false;
        }
        (self.admits)(n, m.unwrap_or(0))
    }

    pub fn evaluate(&self, n: usize, m: Option<usize>) -> f64 {
        (self.evaluate)(n as f64, m.unwrap_or(0) as f64)
    }

    /// The generator call that realizes this cell's graph at `(n, m)`.
    pub fn family_spec(&self, n: usize, m: Option<usize>) -> FamilySpec {
        match (self.family, self.source) {
            (Family::Wheel, Source::Table1 | Source::Table2) => FamilySpec::new(Family::Wheel, n - 1),
            (f, _) if f.takes_m() => FamilySpec::with_m(f, n, m.unwrap_or(0)),
            (f, _) => FamilySpec::new(f, n),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CellKey {
    pub source: Source,
    pub family: Family,
    pub index: IndexId,
}

impl fmt::Display for CellKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}/{}", self.source, self.family, self.index)
    }
}

type Rule = (&'static str, fn(usize, usize) -> bool);

fn rule(text: &'static str, admits: fn(usize, usize) -> bool) -> Rule {
    (text, admits)
}

fn validity(source: Source, family: Family) -> Rule {
    use Family::*;
    match source {
        Source::Specific => match family {
            Path | Ladder | Book => rule("n >= 3", |n, _| n >= 3),
            Star | Friendship => rule("n >= 1", |n, _| n >= 1),
            CompleteBipartite => rule("m >= n >= 1", |n, m| n >= 1 && m >= n),
            Wheel => rule("n >= 3 (W_{n+1}, rim n)", |n, _| n >= 3),
            DutchWindmill => rule("n >= 3, m >= 2", |n, m| n >= 3 && m >= 2),
            _ => unreachable!("no specific-family cell for {family}"),
        },
        Source::Table1 | Source::Table2 => match family {
            CompleteBipartite | DutchWindmill => rule("m >= n >= 3", |n, m| n >= 3 && m >= n),
            Wheel => rule("n >= 4 (W_n, n vertices)", |n, _| n >= 4),
            _ => rule("n >= 3", |n, _| n >= 3),
        },
        Source::Grid => rule("m >= 6, n >= 6", |n, m| n >= 6 && m >= 6),
        Source::CactusSo1 | Source::Table3 => rule("n >= 2", |n, _| n >= 2),
    }
}

fn cell(source: Source, family: Family, index: IndexId, printed: &'static str, evaluate: Evaluator) -> FormulaCell {
    let (validity, admits) = validity(source, family);
    FormulaCell {
        source,
        family,
        index,
        printed,
        validity,
        admits,
        evaluate,
    }
}

/// `√2 + 2√x`, the radical denominator of SO5 and SO6.
fn rad(x: f64) -> f64 {
    SQRT_2 + 2.0 * x.sqrt()
}

/// Every printed closed form, once each, in source/row/column order.
pub fn catalogue() -> Vec<FormulaCell> {
    use Family::*;
    use IndexId::*;
    use Source::*;
    vec![
        cell(Specific, Path, So1, "3", |_, _| 3.0),
        cell(Specific, Star, So1, "n(n-1)(n+1)/2", |n, _| {
            n * (n - 1.0) * (n + 1.0) / 2.0
        }),
        cell(Specific, CompleteBipartite, So1, "mn(m-n)(m+n)/2", |n, m| {
            m * n * (m - n) * (m + n) / 2.0
        }),
        cell(Specific, Wheel, So1, "n(n-3)(n+3)/2", |n, _| {
            n * (n - 3.0) * (n + 3.0) / 2.0
        }),
        cell(Specific, Ladder, So1, "10", |_, _| 10.0),
        cell(Specific, Friendship, So1, "4n(n-1)(n+1)", |n, _| {
            4.0 * n * (n - 1.0) * (n + 1.0)
        }),
        cell(Specific, Book, So1, "n(n+3)(n-1)", |n, _| n * (n + 3.0) * (n - 1.0)),
        cell(Specific, DutchWindmill, So1, "4m(m-1)(m+1)", |_, m| {
            4.0 * m * (m - 1.0) * (m + 1.0)
        }),
        // SO2..SO4 of the specific families
        cell(Table1, Path, So2, "6/5", |_, _| 6.0 / 5.0),
        cell(Table1, Path, So3, "10√2π/3 + (n-3)√2(2π)", |n, _| {
            10.0 * SQRT_2 * PI / 3.0 + (n - 3.0) * SQRT_2 * (2.0 * PI)
        }),
        cell(Table1, Path, So4, "25π/9 + (n-3)(2π)", |n, _| {
            25.0 * PI / 9.0 + (n - 3.0) * (2.0 * PI)
        }),
        cell(Table1, Star, So2, "n(n²-1)/(n²+1)", |n, _| {
            n * (n * n - 1.0) / (n * n + 1.0)
        }),
        cell(Table1, Star, So3, "√2nπ(n²+1)/(n+1)", |n, _| {
            SQRT_2 * n * PI * (n * n + 1.0) / (n + 1.0)
        }),
        cell(Table1, Star, So4, "(nπ/2)((n²+1)/(n+1))²", |n, _| {
            n * PI / 2.0 * ((n * n + 1.0) / (n + 1.0)).powi(2)
        }),
        cell(Table1, CompleteBipartite, So2, "mn(m²-n²)/(m²+n²)", |n, m| {
            m * n * (m * m - n * n) / (m * m + n * n)
        }),
        cell(Table1, CompleteBipartite, So3, "√2nmπ(m²+n²)/(m+n)", |n, m| {
            SQRT_2 * n * m * PI * (m * m + n * n) / (m + n)
        }),
        cell(Table1, CompleteBipartite, So4, "(nmπ/2)((n²+m²)/(n+m))²", |n, m| {
            n * m * PI / 2.0 * ((n * n + m * m) / (n + m)).powi(2)
        }),
        cell(Table1, Wheel, So2, "(n-1)(n²-2n-8)/(n²-2n+10)", |n, _| {
            (n - 1.0) * (n * n - 2.0 * n - 8.0) / (n * n - 2.0 * n + 10.0)
        }),
        cell(Table1, Wheel, So3, "√2π((n-1)(n²-2n+10)/(n+2) + 3n-3)", |n, _| {
            SQRT_2 * PI * ((n - 1.0) * (n * n - 2.0 * n + 10.0) / (n + 2.0) + 3.0 * n - 3.0)
        }),
        cell(
            Table1,
            Wheel,
            So4,
            "(π/2)((n-1)((n²-2n+10)/(n+2))² + 9n-9)",
            |n, _| PI / 2.0 * ((n - 1.0) * ((n * n - 2.0 * n + 10.0) / (n + 2.0)).powi(2) + 9.0 * n - 9.0),
        ),
        cell(Table1, Ladder, So2, "20/13", |_, _| 20.0 / 13.0),
        cell(Table1, Ladder, So3, "(√2π/5)(45n-48)", |n, _| {
            SQRT_2 * PI / 5.0 * (45.0 * n - 48.0)
        }),
        cell(Table1, Ladder, So4, "(π/50)(675n-924)", |n, _| {
            PI / 50.0 * (675.0 * n - 924.0)
        }),
        cell(Table1, Friendship, So2, "(2n³-2n)/(n²+1)", |n, _| {
            (2.0 * n.powi(3) - 2.0 * n) / (n * n + 1.0)
        }),
        cell(Table1, Friendship, So3, "√2π(4n³+2n²+6n)/(n+1)", |n, _| {
            SQRT_2 * PI * (4.0 * n.powi(3) + 2.0 * n * n + 6.0 * n) / (n + 1.0)
        }),
        cell(Table1, Friendship, So4, "2nπ(2n⁴+5n²+2n+3)/(n²+2n+1)", |n, _| {
            2.0 * n * PI * (2.0 * n.powi(4) + 5.0 * n * n + 2.0 * n + 3.0) / (n * n + 2.0 * n + 1.0)
        }),
        cell(Table1, Book, So2, "(2n³+4n²-6n)/(n²+2n+5)", |n, _| {
            (2.0 * n.powi(3) + 4.0 * n * n - 6.0 * n) / (n * n + 2.0 * n + 5.0)
        }),
        cell(Table1, Book, So3, "√2π(3n+1 + 2n(n²+2n+5)/(n+3))", |n, _| {
            SQRT_2 * PI * (3.0 * n + 1.0 + 2.0 * n * (n * n + 2.0 * n + 5.0) / (n + 3.0))
        }),
        cell(
            Table1,
            Book,
            So4,
            "(π/2)(4n + (n+1)² + 2n((n²+2n+5)/(n+3))²)",
            |n, _| PI / 2.0 * (4.0 * n + (n + 1.0).powi(2) + 2.0 * n * ((n * n + 2.0 * n + 5.0) / (n + 3.0)).powi(2)),
        ),
        cell(Table1, DutchWindmill, So2, "2m(m²-1)/(m²+1)", |_, m| {
            2.0 * m * (m * m - 1.0) / (m * m + 1.0)
        }),
        cell(
            Table1,
            DutchWindmill,
            So3,
            "√2π(2m(n-2) + 4m(m²+1)/(m+1))",
            |n, m| SQRT_2 * PI * (2.0 * m * (n - 2.0) + 4.0 * m * (m * m + 1.0) / (m + 1.0)),
        ),
        cell(
            Table1,
            DutchWindmill,
            So4,
            "(π/2)(4m(n-2) + 8m((m²+1)/(m+1))²)",
            |n, m| PI / 2.0 * (4.0 * m * (n - 2.0) + 8.0 * m * ((m * m + 1.0) / (m + 1.0)).powi(2)),
        ),
        // SO5, SO6 of the specific families
        cell(Table2, Path, So5, "12π/(√2+2√5)", |_, _| 12.0 * PI / rad(5.0)),
        cell(Table2, Path, So6, "18π/(√2+2√5)²", |_, _| {
            18.0 * PI / rad(5.0).powi(2)
        }),
        cell(Table2, Star, So5, "2nπ(n²-1)/(√2+2√(n²+1))", |n, _| {
            2.0 * n * PI * (n * n - 1.0) / rad(n * n + 1.0)
        }),
        cell(Table2, Star, So6, "nπ((n²-1)/(√2+2√(n²+1)))²", |n, _| {
            n * PI * ((n * n - 1.0) / rad(n * n + 1.0)).powi(2)
        }),
        cell(
            Table2,
            CompleteBipartite,
            So5,
            "2nmπ(m²-n²)/(√2+2√(n²+m²))",
            |n, m| 2.0 * n * m * PI * (m * m - n * n) / rad(n * n + m * m),
        ),
        cell(
            Table2,
            CompleteBipartite,
            So6,
            "nmπ((m²-n²)/(√2+2√(n²+m²)))²",
            |n, m| n * m * PI * ((m * m - n * n) / rad(n * n + m * m)).powi(2),
        ),
        cell(
            Table2,
            Wheel,
            So5,
            "2(n-1)π((n²-2n-8)/(√2+2√(n²-2n+10)))",
            |n, _| 2.0 * (n - 1.0) * PI * ((n * n - 2.0 * n - 8.0) / rad(n * n - 2.0 * n + 10.0)),
        ),
        cell(
            Table2,
            Wheel,
            So6,
            "π(n-1)((n²-2n-8)/(√2+2√(n²-2n+10)))²",
            |n, _| PI * (n - 1.0) * ((n * n - 2.0 * n - 8.0) / rad(n * n - 2.0 * n + 10.0)).powi(2),
        ),
        cell(Table2, Ladder, So5, "40π/(√2+2√13)", |_, _| 40.0 * PI / rad(13.0)),
        cell(Table2, Ladder, So6, "100π/(√2+2√13)²", |_, _| {
            100.0 * PI / rad(13.0).powi(2)
        }),
        cell(Table2, Friendship, So5, "4nπ((4n²-4)/(√2+2√(4n²+4)))", |n, _| {
            4.0 * n * PI * ((4.0 * n * n - 4.0) / rad(4.0 * n * n + 4.0))
        }),
        cell(
            Table2,
            Friendship,
            So6,
            "2nπ((4n²-4)/(√2+2√(4n²+4)))²",
            |n, _| 2.0 * n * PI * ((4.0 * n * n - 4.0) / rad(4.0 * n * n + 4.0)).powi(2),
        ),
        cell(Table2, Book, So5, "4nπ((n²+2n-3)/(√2+2√(n²+2n+5)))", |n, _| {
            4.0 * n * PI * ((n * n + 2.0 * n - 3.0) / rad(n * n + 2.0 * n + 5.0))
        }),
        cell(Table2, Book, So6, "2nπ((n²+2n-3)/(√2+2√(n²+2n+5)))²", |n, _| {
            2.0 * n * PI * ((n * n + 2.0 * n - 3.0) / rad(n * n + 2.0 * n + 5.0)).powi(2)
        }),
        cell(
            Table2,
            DutchWindmill,
            So5,
            "16mπ((m²-1)/(√2+2√(4m²+4)))",
            |_, m| 16.0 * m * PI * ((m * m - 1.0) / rad(4.0 * m * m + 4.0)),
        ),
        cell(
            Table2,
            DutchWindmill,
            So6,
            "32mπ((m²-1)/(√2+2√(4m²+4)))²",
            |_, m| 32.0 * m * PI * ((m * m - 1.0) / rad(4.0 * m * m + 4.0)).powi(2),
        ),
        // grid P_m □ P_n
        cell(Source::Grid, Family::Grid, So1, "14m+14n-16", |n, m| {
            14.0 * m + 14.0 * n - 16.0
        }),
        cell(Source::Grid, Family::Grid, So2, "40/13 + (14m+14n-56)/25", |n, m| {
            40.0 / 13.0 + (14.0 * m + 14.0 * n - 56.0) / 25.0
        }),
        cell(
            Source::Grid,
            Family::Grid,
            So3,
            "√2π(104/5 + (50n+50m-200)/7)",
            |n, m| SQRT_2 * PI * (104.0 / 5.0 + (50.0 * n + 50.0 * m - 200.0) / 7.0),
        ),
        cell(
            Source::Grid,
            Family::Grid,
            So4,
            "(π/2)(1352/25 + (1250m+1250n-5000)/49)",
            |n, m| PI / 2.0 * (1352.0 / 25.0 + (1250.0 * m + 1250.0 * n - 5000.0) / 49.0),
        ),
        cell(
            Source::Grid,
            Family::Grid,
            So5,
            "2π(40/(√2+2√13) + (14m+14n-56)/(√2+10))",
            |n, m| 2.0 * PI * (40.0 / rad(13.0) + (14.0 * m + 14.0 * n - 56.0) / (SQRT_2 + 10.0)),
        ),
        cell(
            Source::Grid,
            Family::Grid,
            So6,
            "π(200/(√2+2√13)² + (98m+98n-392)/(√2+10)²)",
            |n, m| PI * (200.0 / rad(13.0).powi(2) + (98.0 * m + 98.0 * n - 392.0) / (SQRT_2 + 10.0).powi(2)),
        ),
        // SO1 of the chain cacti
        cell(CactusSo1, TriChain, So1, "12n", |n, _| 12.0 * n),
        cell(CactusSo1, SquareParaChain, So1, "24n-24", |n, _| 24.0 * n - 24.0),
        cell(CactusSo1, SquareOrthoChain, So1, "12n", |n, _| 12.0 * n),
        cell(CactusSo1, HexOrthoChain, So1, "12n", |n, _| 12.0 * n),
        cell(CactusSo1, HexParaChain, So1, "24n-24", |n, _| 24.0 * n - 24.0),
        cell(CactusSo1, HexMetaChain, So1, "24n-24", |n, _| 24.0 * n - 24.0),
        // SO2..SO6 of the chain cacti
        cell(Table3, TriChain, So2, "6n/5", |n, _| 6.0 * n / 5.0),
        cell(Table3, TriChain, So3, "3√2π(44n-36)/3", |n, _| {
            3.0 * SQRT_2 * PI * (44.0 * n - 36.0) / 3.0
        }),
        cell(Table3, TriChain, So4, "(π/2)(776n-1080)/9", |n, _| {
            PI / 2.0 * (776.0 * n - 1080.0) / 9.0
        }),
        cell(Table3, TriChain, So5, "48nπ/(√2+2√20)", |n, _| {
            48.0 * n * PI / rad(20.0)
        }),
        cell(Table3, TriChain, So6, "288nπ/(√2+2√20)²", |n, _| {
            288.0 * n * PI / rad(20.0).powi(2)
        }),
        cell(Table3, SquareParaChain, So2, "(12n-12)/5", |n, _| {
            (12.0 * n - 12.0) / 5.0
        }),
        cell(Table3, SquareParaChain, So3, "√2π(40n-16)/3", |n, _| {
            SQRT_2 * PI * (40.0 * n - 16.0) / 3.0
        }),
        cell(Table3, SquareParaChain, So4, "(π/2)(400n-256)/9", |n, _| {
            PI / 2.0 * (400.0 * n - 256.0) / 9.0
        }),
        cell(Table3, SquareParaChain, So5, "24π(4n-4)/(√2+2√20)", |n, _| {
            24.0 * PI * (4.0 * n - 4.0) / rad(20.0)
        }),
        cell(Table3, SquareParaChain, So6, "144π(4n-4)/(√2+2√20)²", |n, _| {
            144.0 * PI * (4.0 * n - 4.0) / rad(20.0).powi(2)
        }),
        cell(Table3, SquareOrthoChain, So2, "6n/5", |n, _| 6.0 * n / 5.0),
        cell(Table3, SquareOrthoChain, So3, "√2π(38n-12)/3", |n, _| {
            SQRT_2 * PI * (38.0 * n - 12.0) / 3.0
        }),
        cell(Table3, SquareOrthoChain, So4, "(π/2)(380n-216)/9", |n, _| {
            PI / 2.0 * (380.0 * n - 216.0) / 9.0
        }),
        cell(Table3, SquareOrthoChain, So5, "48nπ/(√2+2√20)", |n, _| {
            48.0 * n * PI / rad(20.0)
        }),
        cell(Table3, SquareOrthoChain, So6, "288nπ/(√2+2√20)²", |n, _| {
            288.0 * n * PI / rad(20.0).powi(2)
        }),
        cell(Table3, HexOrthoChain, So2, "6n/5", |n, _| 6.0 * n / 5.0),
        cell(Table3, HexOrthoChain, So3, "√2π(50n-12)/3", |n, _| {
            SQRT_2 * PI * (50.0 * n - 12.0) / 3.0
        }),
        cell(Table3, HexOrthoChain, So4, "(π/2)(452n-216)/9", |n, _| {
            PI / 2.0 * (452.0 * n - 216.0) / 9.0
        }),
        cell(Table3, HexOrthoChain, So5, "48nπ/(√2+2√20)", |n, _| {
            48.0 * n * PI / rad(20.0)
        }),
        cell(Table3, HexOrthoChain, So6, "288nπ/(√2+2√20)²", |n, _| {
            288.0 * n * PI / rad(20.0).powi(2)
        }),
        cell(Table3, HexParaChain, So2, "(12n-12)/5", |n, _| (12.0 * n - 12.0) / 5.0),
        cell(Table3, HexParaChain, So3, "√2π(52n-26)/3", |n, _| {
            SQRT_2 * PI * (52.0 * n - 26.0) / 3.0
        }),
        cell(Table3, HexParaChain, So4, "(π/2)(472n-256)/9", |n, _| {
            PI / 2.0 * (472.0 * n - 256.0) / 9.0
        }),
        cell(Table3, HexParaChain, So5, "24π(4n-4)/(√2+2√20)", |n, _| {
            24.0 * PI * (4.0 * n - 4.0) / rad(20.0)
        }),
        cell(Table3, HexParaChain, So6, "144π(4n-4)/(√2+2√20)²", |n, _| {
            144.0 * PI * (4.0 * n - 4.0) / rad(20.0).powi(2)
        }),
        cell(Table3, HexMetaChain, So2, "(12n-12)/5", |n, _| (12.0 * n - 12.0) / 5.0),
        cell(Table3, HexMetaChain, So3, "√2π(52n-26)/3", |n, _| {
            SQRT_2 * PI * (52.0 * n - 26.0) / 3.0
        }),
        cell(Table3, HexMetaChain, So4, "(π/2)(472n-256)/9", |n, _| {
            PI / 2.0 * (472.0 * n - 256.0) / 9.0
        }),
        cell(Table3, HexMetaChain, So5, "24π(4n-4)/(√2+2√20)", |n, _| {
            24.0 * PI * (4.0 * n - 4.0) / rad(20.0)
        }),
        cell(Table3, HexMetaChain, So6, "144π(4n-4)/(√2+2√20)²", |n, _| {
            144.0 * PI * (4.0 * n - 4.0) / rad(20.0).powi(2)
        }),
    ]
}

/// Looks up a cell by its key.
pub fn lookup(source: Source, family: Family, index: IndexId) -> Option<FormulaCell> {
    catalogue()
        .into_iter()
        .find(|c| c.source == source && c.family == family && c.index == index)
}

/// Cells whose printed formula disagrees with direct computation. Each was
/// checked by hand from the edge-class counts and is re-checked by an
/// independent brute-force oracle in the tests. All disagree at every
/// admissible point except `t3/tri-chain/so4`, which agrees at n = 2 only
/// (printed `(776n-1080)/9` against `(344n-216)/9`).
pub const CONFIRMED_MISMATCHES: [CellKey; 7] = [
    CellKey {
        source: Source::Grid,
        family: Family::Grid,
        index: IndexId::So1,
    },
    CellKey {
        source: Source::Grid,
        family: Family::Grid,
        index: IndexId::So3,
    },
    CellKey {
        source: Source::Grid,
        family: Family::Grid,
        index: IndexId::So4,
    },
    CellKey {
        source: Source::Table3,
        family: Family::TriChain,
        index: IndexId::So3,
    },
    CellKey {
        source: Source::Table3,
        family: Family::TriChain,
        index: IndexId::So4,
    },
    CellKey {
        source: Source::Table3,
        family: Family::HexParaChain,
        index: IndexId::So3,
    },
    CellKey {
        source: Source::Table3,
        family: Family::HexMetaChain,
        index: IndexId::So3,
    },
];

/// Cells confirmed to match direct computation: everything not listed in
/// [`CONFIRMED_MISMATCHES`].
pub fn verified_subset() -> Vec<FormulaCell> {
    catalogue()
        .into_iter()
        .filter(|c| !CONFIRMED_MISMATCHES.contains(&c.key()))
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Match,
    Mismatch,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Match => "match",
            Verdict::Mismatch => "mismatch",
        })
    }
}

/// Relative difference, or absolute difference when either value is zero.
pub fn rel_diff(engine: f64, formula: f64) -> f64 {
    let diff = (engine - formula).abs();
    if engine == 0.0 || formula == 0.0 {
        diff
    } else {
        diff / engine.abs().max(formula.abs())
    }
}

/// One engine-versus-formula comparison.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerifyCell {
    pub source: Source,
    pub family: Family,
    pub index: IndexId,
    pub n: usize,
    pub m: Option<usize>,
    #[serde(serialize_with = "ser_g17")]
    pub engine: f64,
    #[serde(serialize_with = "ser_g17")]
    pub formula: f64,
    #[serde(serialize_with = "ser_g17")]
    pub rel_diff: f64,
    pub verdict: Verdict,
}

impl VerifyCell {
    pub fn key(&self) -> CellKey {
        CellKey {
            source: self.source,
            family: self.family,
            index: self.index,
        }
    }

    fn build(cell: &FormulaCell, n: usize, m: Option<usize>, engine: f64, tol: f64) -> Self {
        let formula = cell.evaluate(n, m);
        let rd = rel_diff(engine, formula);
        VerifyCell {
            source: cell.source,
            family: cell.family,
            index: cell.index,
            n,
            m: if cell.family.takes_m() { m } else { None },
            engine,
            formula,
            rel_diff: rd,
            verdict: if rd <= tol { Verdict::Match } else { Verdict::Mismatch },
        }
    }
}

fn params_text(n: usize, m: Option<usize>) -> String {
    match m {
        Some(m) => format!("n={n}, m={m}"),
        None => format!("n={n}"),
    }
}

/// Compares one cell at one parameter point.
pub fn verify_cell(cell: &FormulaCell, n: usize, m: Option<usize>, tol: f64) -> Result<VerifyCell, VerifyError> {
    if !cell.admits(n, m) {
        return Err(VerifyError::OutOfValidity {
            cell: cell.key().to_string(),
            params: params_text(n, m),
            validity: cell.validity,
        });
    }
    let g = generate(&cell.family_spec(n, m))?;
    let engine = all_indices(&g)?[&cell.index].value;
    Ok(VerifyCell::build(cell, n, m, engine, tol))
}

/// Parameter ranges for a sweep. Points outside a cell's stated validity are
/// skipped for that cell.
#[derive(Debug, Clone)]
pub struct SweepRanges {
    pub n: RangeInclusive<usize>,
    pub m: RangeInclusive<usize>,
}

impl Default for SweepRanges {
    fn default() -> Self {
        SweepRanges { n: 1..=30, m: 1..=30 }
    }
}

fn sweep_points(cell: &FormulaCell, ranges: &SweepRanges) -> Vec<(usize, Option<usize>)> {
    let mut points = Vec::new();
    for n in ranges.n.clone() {
        if cell.family.takes_m() {
            for m in ranges.m.clone() {
                if cell.admits(n, Some(m)) {
                    points.push((n, Some(m)));
                }
            }
        } else if cell.admits(n, None) {
            points.push((n, None));
        }
    }
    points
}

/// Verifies every `(cell, params)` pair. Output is ordered by the order of
/// `cells`, then by `n`, then by `m`. Graphs are generated once per distinct
/// family spec and evaluated in parallel.
pub fn sweep_verify(cells: &[FormulaCell], ranges: &SweepRanges, tol: f64) -> Result<Vec<VerifyCell>, VerifyError> {
    let work: Vec<(usize, usize, Option<usize>)> = cells
        .iter()
        .enumerate()
        .flat_map(|(i, c)| sweep_points(c, ranges).into_iter().map(move |(n, m)| (i, n, m)))
        .collect();
    let mut specs: Vec<FamilySpec> = work.iter().map(|&(i, n, m)| cells[i].family_spec(n, m)).collect();
    specs.sort();
    specs.dedup();
    let values: HashMap<FamilySpec, BTreeMap<IndexId, f64>> = specs
        .into_par_iter()
        .map(|spec| -> Result<_, VerifyError> {
            let g = generate(&spec)?;
            let all = all_indices(&g)?;
            Ok((spec, all.into_iter().map(|(id, v)| (id, v.value)).collect()))
        })
        .collect::<Result<_, _>>()?;
    Ok(work
        .into_iter()
        .map(|(i, n, m)| {
            let cell = &cells[i];
            let engine = values[&cell.family_spec(n, m)][&cell.index];
            VerifyCell::build(cell, n, m, engine, tol)
        })
        .collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Outcome {
    Match,
    Mismatch,
    /// The verdict changed with the parameters.
    Unstable,
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Outcome::Match => "match",
            Outcome::Mismatch => "mismatch",
            Outcome::Unstable => "unstable",
        })
    }
}

/// Per-cell aggregate of a sweep.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CellSummary {
    pub key: CellKey,
    pub points: usize,
    pub matches: usize,
    pub mismatches: usize,
    pub outcome: Outcome,
    #[serde(serialize_with = "ser_g17")]
    pub max_rel_diff: f64,
}

/// Groups rows by cell, in first-appearance order.
pub fn summarize(rows: &[VerifyCell]) -> Vec<CellSummary> {
    let mut order: Vec<CellKey> = Vec::new();
    let mut stats: HashMap<CellKey, CellSummary> = HashMap::new();
    for row in rows {
        let key = row.key();
        let s = stats.entry(key).or_insert_with(|| {
            order.push(key);
            CellSummary {
                key,
                points: 0,
                matches: 0,
                mismatches: 0,
                outcome: Outcome::Match,
                max_rel_diff: 0.0,
            }
        });
        s.points += 1;
        match row.verdict {
            Verdict::Match => s.matches += 1,
            Verdict::Mismatch => s.mismatches += 1,
        }
        s.max_rel_diff = s.max_rel_diff.max(row.rel_diff);
    }
    order
        .into_iter()
        .map(|k| {
            let mut s = stats.remove(&k).expect("key recorded");
            s.outcome = match (s.matches, s.mismatches) {
                (_, 0) => Outcome::Match,
                (0, _) => Outcome::Mismatch,
                _ => Outcome::Unstable,
            };
            s
        })
        .collect()
}

/// Reference edge-class counts behind the closed forms, for the path
/// and the six chain cacti. Used to check the generators.
pub fn stated_profile(family: Family, n: usize) -> Option<DegreePairProfile> {
    use Family::*;
    let classes: Vec<((usize, usize), usize)> = match family {
        Path if n >= 3 => vec![((1, 2), 2), ((2, 2), n - 3)],
        TriChain if n >= 2 => vec![((2, 2), 2), ((2, 4), 2 * n), ((4, 4), n - 2)],
        SquareParaChain if n >= 2 => vec![((2, 2), 4), ((2, 4), 4 * n - 4)],
        SquareOrthoChain if n >= 2 => vec![((2, 2), n + 2), ((2, 4), 2 * n), ((4, 4), n - 2)],
        HexOrthoChain if n >= 2 => vec![((2, 2), 3 * n + 2), ((2, 4), 2 * n), ((4, 4), n - 2)],
        HexParaChain | HexMetaChain if n >= 2 => vec![((2, 2), 2 * n + 4), ((2, 4), 4 * n - 4)],
        _ => return None,
    };
    Some(DegreePairProfile::from_counts(classes))
}

/// Grid edge classes behind the printed grid formulas: `m+n-4` edges of type
/// (3,3) and `2nm-5n-5m-12` of type (4,4). Direct counting gives
/// `2m+2n-12` and `2mn-5m-5n+12`; see [`grid_profile`].
pub fn grid_stated_profile(m: usize, n: usize) -> DegreePairProfile {
    let (m, n) = (m as i64, n as i64);
    let c44 = (2 * m * n - 5 * n - 5 * m - 12).max(0) as usize;
    DegreePairProfile::from_counts([
        ((2, 3), 8),
        ((3, 3), (m + n - 4) as usize),
        ((3, 4), (2 * m + 2 * n - 8) as usize),
        ((4, 4), c44),
    ])
}

/// The degree-pair profile of the m × n grid for `m, n >= 3`, by counting.
pub fn grid_profile(m: usize, n: usize) -> DegreePairProfile {
    DegreePairProfile::from_counts([
        ((2, 3), 8),
        ((3, 3), 2 * m + 2 * n - 12),
        ((3, 4), 2 * m + 2 * n - 8),
        ((4, 4), 2 * m * n - 5 * m - 5 * n + 12),
    ])
}

/// A grid cell evaluated under both readings of the edge-class counts.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GridReading {
    pub index: IndexId,
    pub m: usize,
    pub n: usize,
    #[serde(serialize_with = "ser_g17")]
    pub formula: f64,
    #[serde(serialize_with = "ser_g17")]
    pub engine: f64,
    #[serde(serialize_with = "ser_g17")]
    pub stated_counts: f64,
    pub engine_verdict: Verdict,
    pub stated_counts_verdict: Verdict,
}

/// Compares each printed grid formula with the generated grid and with the
/// profile built from the stated edge counts.
pub fn grid_readings(m: usize, n: usize, tol: f64) -> Result<Vec<GridReading>, VerifyError> {
    let stated = grid_stated_profile(m, n);
    Source::Grid
        .indices()
        .iter()
        .map(|&index| {
            let cell = lookup(Source::Grid, Family::Grid, index).expect("grid cells exist");
            let row = verify_cell(&cell, n, Some(m), tol)?;
            let stated_counts = index_from_profile(&stated, index)?.value;
            let verdict = |v: f64| {
                if rel_diff(v, row.formula) <= tol {
                    Verdict::Match
                } else {
                    Verdict::Mismatch
                }
            };
            Ok(GridReading {
                index,
                m,
                n,
                formula: row.formula,
                engine: row.engine,
                stated_counts,
                engine_verdict: row.verdict,
                stated_counts_verdict: verdict(stated_counts),
            })
        })
        .collect()
}

/// One index column of a table row.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TableColumn {
    pub index: IndexId,
    #[serde(serialize_with = "ser_g17")]
    pub engine: f64,
    #[serde(serialize_with = "ser_g17")]
    pub formula: f64,
    pub verdict: Verdict,
}

/// All indices of one source for one family at one parameter point.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TableRow {
    pub source: Source,
    pub family: Family,
    pub n: usize,
    pub m: Option<usize>,
    pub columns: Vec<TableColumn>,
}

/// Regenerates a printed table: one row per family and parameter point at
/// which every cell of that family is valid.
pub fn table_rows(source: Source, ranges: &SweepRanges, tol: f64) -> Result<Vec<TableRow>, VerifyError> {
    let cells: Vec<FormulaCell> = catalogue().into_iter().filter(|c| c.source == source).collect();
    let rows = sweep_verify(&cells, ranges, tol)?;
    let mut grouped: BTreeMap<(usize, usize, Option<usize>), Vec<&VerifyCell>> = BTreeMap::new();
    for row in &rows {
        let family_pos = source
            .families()
            .iter()
            .position(|&f| f == row.family)
            .expect("family of source");
        grouped.entry((family_pos, row.n, row.m)).or_default().push(row);
    }
    let width = source.indices().len();
    Ok(grouped
        .into_iter()
        .filter(|(_, cols)| cols.len() == width)
        .map(|((f, n, m), mut cols)| {
            cols.sort_by_key(|c| c.index);
            TableRow {
                source,
                family: source.families()[f],
                n,
                m,
                columns: cols
                    .into_iter()
                    .map(|c| TableColumn {
                        index: c.index,
                        engine: c.engine,
                        formula: c.formula,
                        verdict: c.verdict,
                    })
                    .collect(),
            }
        })
        .collect())
}
