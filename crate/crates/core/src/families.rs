//! Generators for the named graph families.
//!
//! Canonical labelings:
//!
//! | family | vertices |
//! |---|---|
//! | path(n) | `0..n` in order |
//! | cycle(n) | `0..n` around the cycle |
//! | star(n) = K_{1,n} | centre `0`, leaves `1..=n` |
//! | complete_bipartite(m, n) | side of size m is `0..m`, side of size n is `m..m+n` |
//! | wheel(k) = C_k ∨ K_1 | rim `0..k`, hub `k` |
//! | ladder(n) = P_n □ K_2 | `(a, x)` at `2a + x` |
//! | friendship(n) = nK_2 ∨ K_1 | blades `2i, 2i+1`, hub `2n` |
//! | book(n) = K_{1,n} □ K_2 | `(a, x)` at `2a + x`, spine `0, 1` |
//! | dutch_windmill(n, m) | shared vertex `0`, then the `n-1` private vertices of each cycle |
//! | grid(m, n) = P_m □ P_n | `(row, col)` at `row * n + col` |
//! | chain cacti | polygons in chain order, shared cut vertex numbered once |
//!
//! The chain cacti are built by point-attaching polygons: polygon `i + 1`
//! is glued by its vertex `0` to vertex `offset` of polygon `i`, where the
//! offset is the distance between the two cut vertices of an inner polygon
//! (ortho = 1, meta = 2, para = opposite).

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::FamilyError;
use crate::graph::Graph;
use crate::ops::{cartesian_product, copies, join, point_attach, Identification};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    Path,
    Cycle,
    Star,
    CompleteBipartite,
    Wheel,
    Ladder,
    Friendship,
    Book,
    DutchWindmill,
    Grid,
    TriChain,
    SquareParaChain,
    SquareOrthoChain,
    HexOrthoChain,
    HexParaChain,
    HexMetaChain,
}

impl Family {
    pub const ALL: [Family; 16] = [
        Family::Path,
        Family::Cycle,
        Family::Star,
        Family::CompleteBipartite,
        Family::Wheel,
        Family::Ladder,
        Family::Friendship,
        Family::Book,
        Family::DutchWindmill,
        Family::Grid,
        Family::TriChain,
        Family::SquareParaChain,
        Family::SquareOrthoChain,
        Family::HexOrthoChain,
        Family::HexParaChain,
        Family::HexMetaChain,
    ];

    pub const CACTUS_CHAINS: [Family; 6] = [
        Family::TriChain,
        Family::SquareParaChain,
        Family::SquareOrthoChain,
        Family::HexOrthoChain,
        Family::HexParaChain,
        Family::HexMetaChain,
    ];

    /// Name used on the command line.
    pub fn cli_name(self) -> &'static str {
        match self {
            Family::Path => "path",
            Family::Cycle => "cycle",
            Family::Star => "star",
            Family::CompleteBipartite => "kmn",
            Family::Wheel => "wheel",
            Family::Ladder => "ladder",
            Family::Friendship => "friendship",
            Family::Book => "book",
            Family::DutchWindmill => "windmill",
            Family::Grid => "grid",
            Family::TriChain => "tri-chain",
            Family::SquareParaChain => "sq-para",
            Family::SquareOrthoChain => "sq-ortho",
            Family::HexOrthoChain => "hex-ortho",
            Family::HexParaChain => "hex-para",
            Family::HexMetaChain => "hex-meta",
        }
    }

    /// Conventional symbol, e.g. `K_{1,n}` or `O_n^h`.
    pub fn symbol(self) -> &'static str {
        match self {
            Family::Path => "P_n",
            Family::Cycle => "C_n",
            Family::Star => "K_{1,n}",
            Family::CompleteBipartite => "K_{m,n}",
            Family::Wheel => "W",
            Family::Ladder => "L_n",
            Family::Friendship => "F_n",
            Family::Book => "B_n",
            Family::DutchWindmill => "D_n^(m)",
            Family::Grid => "P_m x P_n",
            Family::TriChain => "T_n",
            Family::SquareParaChain => "Q_n",
            Family::SquareOrthoChain => "O_n",
            Family::HexOrthoChain => "O_n^h",
            Family::HexParaChain => "L_n (hex)",
            Family::HexMetaChain => "M_n",
        }
    }

    pub fn takes_m(self) -> bool {
        matches!(self, Family::CompleteBipartite | Family::DutchWindmill | Family::Grid)
    }

    fn constraint(self) -> &'static str {
        match self {
            Family::Path | Family::Star | Family::Friendship | Family::Book => "n >= 1",
            Family::Cycle => "n >= 3",
            Family::CompleteBipartite => "m >= n >= 1",
            Family::Wheel => "n >= 3 (rim length)",
            Family::Ladder => "n >= 2",
            Family::DutchWindmill => "n >= 3 and m >= 2",
            Family::Grid => "m >= 2 and n >= 2",
            _ => "n >= 2",
        }
    }

    fn admits(self, n: usize, m: usize) -> bool {
        match self {
            Family::Path | Family::Star | Family::Friendship | Family::Book => n >= 1,
            Family::Cycle | Family::Wheel => n >= 3,
            Family::CompleteBipartite => n >= 1 && m >= n,
            Family::Ladder => n >= 2,
            Family::DutchWindmill => n >= 3 && m >= 2,
            Family::Grid => n >= 2 && m >= 2,
            _ => n >= 2,
        }
    }

    /// For chain cacti: polygon size and the offset of the outgoing cut vertex.
    fn chain_shape(self) -> Option<(usize, usize)> {
        match self {
            Family::TriChain => Some((3, 1)),
            Family::SquareParaChain => Some((4, 2)),
            Family::SquareOrthoChain => Some((4, 1)),
            Family::HexOrthoChain => Some((6, 1)),
            Family::HexParaChain => Some((6, 3)),
            Family::HexMetaChain => Some((6, 2)),
            _ => None,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.cli_name())
    }
}

impl FromStr for Family {
    type Err = FamilyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Family::ALL
            .into_iter()
            .find(|f| f.cli_name() == s)
            .ok_or_else(|| FamilyError::UnknownFamily(s.to_string()))
    }
}

/// A family plus its integer parameters. `m` is only meaningful for
/// `kmn`, `windmill` and `grid`; D_n^(m) is m cycles of length n and the grid
/// is m rows by n columns.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FamilySpec {
    pub family: Family,
    pub n: usize,
    pub m: Option<usize>,
}

impl FamilySpec {
    pub fn new(family: Family, n: usize) -> Self {
        FamilySpec { family, n, m: None }
    }

    pub fn with_m(family: Family, n: usize, m: usize) -> Self {
        FamilySpec { family, n, m: Some(m) }
    }

    pub fn validate(&self) -> Result<(), FamilyError> {
        let m = if self.family.takes_m() {
            self.m.ok_or(FamilyError::MissingParam {
                family: self.family.cli_name(),
                param: "m",
            })?
        } else {
            0
        };
        if self.family.admits(self.n, m) {
            Ok(())
        } else {
            Err(FamilyError::OutOfRange {
                family: self.family.cli_name(),
                constraint: self.family.constraint(),
            })
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.m {
            Some(m) if self.family.takes_m() => write!(f, "{}(n={}, m={})", self.family, self.n, m),
            _ => write!(f, "{}(n={})", self.family, self.n),
        }
    }
}

pub fn path(n: usize) -> Graph {
    Graph::new(n, (1..n).map(|i| (i - 1, i))).expect("path is simple")
}

pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "cycle needs n >= 3");
    Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).expect("cycle is simple")
}

pub fn complete(n: usize) -> Graph {
    Graph::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).expect("complete graph is simple")
}

pub fn complete_bipartite(m: usize, n: usize) -> Graph {
    Graph::new(m + n, (0..m).flat_map(|u| (m..m + n).map(move |v| (u, v)))).expect("complete bipartite graph is simple")
}

pub fn star(n: usize) -> Graph {
    complete_bipartite(1, n)
}

/// Polygon chain glued at cut vertices; see the module docs.
fn chain_cactus(polygon: usize, offset: usize, count: usize) -> Graph {
    let monomers = vec![cycle(polygon); count];
    let ids: Vec<_> = (0..count.saturating_sub(1))
        .map(|i| Identification::new(i, offset, i + 1, 0))
        .collect();
    point_attach(&monomers, &ids).expect("chain identifications form a path")
}

/// Builds the family member described by `spec`.
pub fn generate(spec: &FamilySpec) -> Result<Graph, FamilyError> {
    spec.validate()?;
    let n = spec.n;
    let m = spec.m.unwrap_or(0);
    let k1 = Graph::empty(1);
    let k2 = path(2);
    let g = match spec.family {
        Family::Path => path(n),
        Family::Cycle => cycle(n),
        Family::Star => star(n),
        Family::CompleteBipartite => complete_bipartite(m, n),
        Family::Wheel => join(&cycle(n), &k1)?,
        Family::Ladder => cartesian_product(&path(n), &k2)?,
        Family::Friendship => join(&copies(&k2, n), &k1)?,
        Family::Book => cartesian_product(&star(n), &k2)?,
        Family::DutchWindmill => {
            let monomers = vec![cycle(n); m];
            let ids: Vec<_> = (1..m).map(|i| Identification::new(0, 0, i, 0)).collect();
            point_attach(&monomers, &ids)?
        }
        Family::Grid => cartesian_product(&path(m), &path(n))?,
        family => {
            let (polygon, offset) = family.chain_shape().expect("remaining families are chains");
            chain_cactus(polygon, offset, n)
        }
    };
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::DegreePairProfile;

    fn profile(pairs: &[((usize, usize), usize)]) -> DegreePairProfile {
        DegreePairProfile::from_counts(pairs.iter().copied())
    }

    fn gen(family: Family, n: usize) -> Graph {
        generate(&FamilySpec::new(family, n)).unwrap()
    }

    #[test]
    fn path_six_profile() {
        assert_eq!(
            gen(Family::Path, 6).degree_pair_profile().unwrap(),
            profile(&[((1, 2), 2), ((2, 2), 3)])
        );
    }

    #[test]
    fn chain_examples() {
        assert_eq!(
            gen(Family::TriChain, 4).degree_pair_profile().unwrap(),
            profile(&[((2, 2), 2), ((2, 4), 8), ((4, 4), 2)])
        );
        assert_eq!(
            gen(Family::SquareParaChain, 3).degree_pair_profile().unwrap(),
            profile(&[((2, 2), 4), ((2, 4), 8)])
        );
        assert_eq!(
            gen(Family::HexParaChain, 2).degree_pair_profile().unwrap(),
            profile(&[((2, 2), 8), ((2, 4), 4)])
        );
    }

    #[test]
    fn grid_edge_count() {
        let g = generate(&FamilySpec::with_m(Family::Grid, 7, 6)).unwrap();
        assert_eq!(g.vertex_count(), 42);
        assert_eq!(g.edge_count(), 2 * 6 * 7 - 6 - 7);
    }

    #[test]
    fn wheel_and_friends() {
        let w = gen(Family::Wheel, 5);
        assert_eq!(w.degree(5), 5);
        let f = gen(Family::Friendship, 3);
        assert_eq!((f.vertex_count(), f.edge_count(), f.degree(6)), (7, 9, 6));
        let b = gen(Family::Book, 3);
        assert_eq!((b.vertex_count(), b.edge_count()), (8, 10));
        assert_eq!((b.degree(0), b.degree(1)), (4, 4));
        let d = generate(&FamilySpec::with_m(Family::DutchWindmill, 4, 3)).unwrap();
        assert_eq!((d.vertex_count(), d.edge_count(), d.degree(0)), (10, 12, 6));
        let l = gen(Family::Ladder, 5);
        assert_eq!(l.degree_extremes().unwrap().min, 2);
        assert_eq!(l.degree_extremes().unwrap().max, 3);
    }

    #[test]
    fn parameter_validation() {
        assert!(generate(&FamilySpec::new(Family::Cycle, 2)).is_err());
        assert!(generate(&FamilySpec::new(Family::Path, 0)).is_err());
        let err = generate(&FamilySpec::with_m(Family::DutchWindmill, 2, 3)).unwrap_err();
        assert!(err.to_string().contains("n >= 3"));
        assert!(generate(&FamilySpec::with_m(Family::CompleteBipartite, 3, 2)).is_err());
        assert!(matches!(
            generate(&FamilySpec::new(Family::Grid, 3)),
            Err(FamilyError::MissingParam { .. })
        ));
        assert!(generate(&FamilySpec::new(Family::TriChain, 1)).is_err());
        let p1 = gen(Family::Path, 1);
        assert_eq!((p1.vertex_count(), p1.edge_count()), (1, 0));
    }

    #[test]
    fn names_round_trip() {
        for f in Family::ALL {
            assert_eq!(f.cli_name().parse::<Family>().unwrap(), f);
        }
        assert!("hexagon".parse::<Family>().is_err());
    }
}
