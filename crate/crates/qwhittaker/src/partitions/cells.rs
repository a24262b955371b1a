use super::{Partition, PartitionError};
use crate::qt_ring::ExtNat;
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

/// A lattice coordinate, possibly infinite. `Fin(-1)` is only meaningful as
/// the row index of the infinite part `mu_0` in leg queries.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Coord {
    Fin(i64),
    Inf,
}

impl fmt::Display for Coord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coord::Fin(n) => write!(f, "{n}"),
            Coord::Inf => write!(f, "inf"),
        }
    }
}

/// Cell `(i,j)`: column `i`, row `j`, with `(0,0)` the southwest-most cell.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cell {
    pub i: Coord,
    pub j: Coord,
}

impl Cell {
    pub fn new(i: i64, j: i64) -> Self {
        Cell { i: Coord::Fin(i), j: Coord::Fin(j) }
    }

    pub fn inf_inf() -> Self {
        Cell { i: Coord::Inf, j: Coord::Inf }
    }

    /// `(inf, j)`.
    pub fn inf_row(j: i64) -> Self {
        Cell { i: Coord::Inf, j: Coord::Fin(j) }
    }

    pub fn finite(&self) -> Option<(i64, i64)> {
        match (self.i, self.j) {
            (Coord::Fin(i), Coord::Fin(j)) => Some((i, j)),
            _ => None,
        }
    }

    /// Weakly north-east of `other`.
    pub fn is_ne_of(&self, other: &Cell) -> bool {
        self.i >= other.i && self.j >= other.j
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.i, self.j)
    }
}

impl FromStr for Cell {
    type Err = PartitionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || PartitionError::Invalid(format!("bad cell {s}"));
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
        let mut it = inner.split(',').map(|x| x.trim());
        let coord = |x: Option<&str>| -> Result<Coord, PartitionError> {
            match x {
                Some("inf") | Some("∞") => Ok(Coord::Inf),
                Some(v) => v.parse::<i64>().map(Coord::Fin).map_err(|_| bad()),
                None => Err(bad()),
            }
        };
        let i = coord(it.next())?;
        let j = coord(it.next())?;
        if it.next().is_some() {
            return Err(bad());
        }
        Ok(Cell { i, j })
    }
}

/// `c in mu`.
pub fn contains(mu: &Partition, c: &Cell) -> bool {
    match c.finite() {
        Some((i, j)) => i >= 0 && j >= 0 && (i as u64) < mu.part(j as usize + 1) as u64,
        None => false,
    }
}

fn row_len(lambda: &Partition, j: i64) -> ExtNat {
    if j < 0 {
        ExtNat::Inf
    } else {
        ExtNat::Fin(lambda.part(j as usize + 1) as u64)
    }
}

/// Extended arm length.
pub fn arm(lambda: &Partition, c: &Cell) -> ExtNat {
    match (c.i, c.j) {
        (Coord::Inf, _) => ExtNat::Inf,
        (Coord::Fin(i), Coord::Inf) => ExtNat::Fin(i as u64),
        (Coord::Fin(i), Coord::Fin(j)) => match row_len(lambda, j) {
            ExtNat::Inf => ExtNat::Inf,
            ExtNat::Fin(r) => {
                let i = i as u64;
                if i < r {
                    ExtNat::Fin(r - i - 1)
                } else {
                    ExtNat::Fin(i - r)
                }
            }
        },
    }
}

/// Extended leg length, including the row `-1` convention and `l(inf,0) = 0`.
pub fn leg(lambda: &Partition, c: &Cell) -> ExtNat {
    match (c.i, c.j) {
        (Coord::Inf, Coord::Fin(j)) => ExtNat::Fin(j.max(0) as u64),
        (_, Coord::Inf) => ExtNat::Inf,
        (Coord::Fin(i), Coord::Fin(-1)) => {
            if contains(lambda, &Cell::new(i, 0)) {
                ExtNat::Fin(lambda.conjugate().part(i as usize + 1) as u64)
            } else {
                ExtNat::Fin(0)
            }
        }
        (Coord::Fin(i), Coord::Fin(j)) => arm(&lambda.conjugate(), &Cell::new(j, i)),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CornerKind {
    Inner,
    Outer,
    Internal,
    External,
}

/// Cells `c'` with `c ⇝ c'`: inside, leg 0, weakly north-east of `c`, leftmost on their row.
pub fn leftmost_rel(lambda: &Partition, c: &Cell) -> Vec<Cell> {
    let Some((i, j)) = c.finite() else { return Vec::new() };
    if !contains(lambda, c) {
        return Vec::new();
    }
    let mut out = Vec::new();
    for r in j as usize..lambda.len() {
        let lo = (i as u32).max(lambda.part(r + 2));
        if lo < lambda.part(r + 1) {
            out.push(Cell::new(lo as i64, r as i64));
        }
    }
    out
}

/// Cells `c'` with `c' ⇝ c`: outside, leg 0, weakly south-west of `c`, rightmost
/// on their row; `(inf,0)` is included when `c` has infinite column.
pub fn rightmost_rel(lambda: &Partition, c: &Cell) -> Vec<Cell> {
    if contains(lambda, c) {
        return Vec::new();
    }
    let rows = match c.j {
        Coord::Fin(j) if j < 0 => return Vec::new(),
        Coord::Fin(j) => (j as usize).min(lambda.len()),
        Coord::Inf => lambda.len(),
    };
    let mut out = Vec::new();
    for r in 0..=rows {
        let lo = lambda.part(r + 1) as i64;
        let cell = if r == 0 {
            match c.i {
                Coord::Inf => Some(Cell::inf_row(0)),
                Coord::Fin(i) if i >= lo => Some(Cell::new(i, 0)),
                _ => None,
            }
        } else {
            let top = lambda.part(r) as i64 - 1;
            let hi = match c.i {
                Coord::Inf => top,
                Coord::Fin(i) => i.min(top),
            };
            (hi >= lo).then(|| Cell::new(hi, r as i64))
        };
        out.extend(cell);
    }
    out
}

/// Corners of the requested kind.
pub fn corners(mu: &Partition, kind: CornerKind) -> Vec<Cell> {
    match kind {
        CornerKind::Inner => (0..mu.len())
            .filter(|&j| mu.part(j + 1) > mu.part(j + 2))
            .map(|j| Cell::new(mu.part(j + 1) as i64 - 1, j as i64))
            .collect(),
        CornerKind::Outer => (0..=mu.len())
            .filter(|&j| j == 0 || mu.part(j) > mu.part(j + 1))
            .map(|j| Cell::new(mu.part(j + 1) as i64, j as i64))
            .collect(),
        CornerKind::Internal => leftmost_rel(mu, &Cell::new(0, 0)),
        CornerKind::External => rightmost_rel(mu, &Cell::inf_inf()),
    }
}

/// A finite set of cells, not necessarily a partition shape.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Diagram {
    cells: BTreeSet<(u32, u32)>,
}

impl Diagram {
    pub fn new<I: IntoIterator<Item = (u32, u32)>>(cells: I) -> Self {
        Diagram { cells: cells.into_iter().collect() }
    }

    pub fn from_partition(mu: &Partition) -> Self {
        Diagram::new(mu.cells())
    }

    /// `mu` with one cell removed.
    pub fn punctured(mu: &Partition, c: (u32, u32)) -> Self {
        let mut d = Diagram::from_partition(mu);
        d.cells.remove(&c);
        d
    }

    pub fn cells(&self) -> impl Iterator<Item = &(u32, u32)> {
        self.cells.iter()
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn contains(&self, c: (u32, u32)) -> bool {
        self.cells.contains(&c)
    }

    pub fn insert(&mut self, c: (u32, u32)) -> bool {
        self.cells.insert(c)
    }

    pub fn remove(&mut self, c: (u32, u32)) -> bool {
        self.cells.remove(&c)
    }

    /// The partition with these cells, if the set is a French diagram.
    pub fn as_partition(&self) -> Option<Partition> {
        let rows = self.cells.iter().map(|c| c.1 + 1).max().unwrap_or(0);
        let parts: Vec<u32> = (0..rows).map(|j| self.cells.iter().filter(|c| c.1 == j).count() as u32).collect();
        let mu = Partition::new(parts).ok()?;
        (Diagram::from_partition(&mu) == *self).then_some(mu)
    }
}

impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v: Vec<String> = self.cells.iter().map(|(i, j)| format!("({i},{j})")).collect();
        write!(f, "{{{}}}", v.join(","))
    }
}

impl FromStr for Diagram {
    type Err = PartitionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || PartitionError::Invalid(format!("bad diagram {s}"));
        let inner = s.trim().strip_prefix('{').and_then(|x| x.strip_suffix('}')).ok_or_else(bad)?;
        let mut cells = BTreeSet::new();
        for chunk in inner.split(')') {
            let chunk = chunk.trim().trim_start_matches(',').trim();
            if chunk.is_empty() {
                continue;
            }
            let c: Cell = format!("{chunk})").parse()?;
            match c.finite() {
                Some((i, j)) if i >= 0 && j >= 0 => {
                    cells.insert((i as u32, j as u32));
                }
                _ => return Err(bad()),
            }
        }
        Ok(Diagram { cells })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::{p, partitions_of};

    fn cells(v: &[(i64, i64)]) -> Vec<Cell> {
        v.iter().map(|&(i, j)| Cell::new(i, j)).collect()
    }

    #[test]
    fn membership_arm_leg() {
        let mu = p(&[5, 2]);
        assert!(contains(&mu, &Cell::new(4, 0)));
        assert!(!contains(&mu, &Cell::new(0, 2)));
        assert!(!contains(&Partition::empty(), &Cell::new(0, 0)));
        assert_eq!(arm(&p(&[9, 4]), &Cell::new(4, 1)), ExtNat::Fin(0));
        assert_eq!(leg(&mu, &Cell::new(0, -1)), ExtNat::Fin(2));
        assert_eq!(leg(&mu, &Cell::new(7, -1)), ExtNat::Fin(0));
        assert_eq!(arm(&mu, &Cell::inf_row(0)), ExtNat::Inf);
        assert_eq!(leg(&mu, &Cell::inf_row(0)), ExtNat::Fin(0));
        // Arm picture for (5,5,4) in an 8-wide window.
        let lam = p(&[5, 5, 4]);
        let f = ExtNat::Fin;
        let row = |j: i64, r: std::ops::Range<i64>| -> Vec<ExtNat> { r.map(|i| arm(&lam, &Cell::new(i, j))).collect() };
        assert_eq!(row(0, 1..8), vec![f(3), f(2), f(1), f(0), f(0), f(1), f(2)]);
        assert_eq!(row(2, 0..8), vec![f(3), f(2), f(1), f(0), f(0), f(1), f(2), f(3)]);
        assert_eq!(row(3, 0..7), (0..7).map(f).collect::<Vec<_>>());
    }

    #[test]
    fn corners_of_9_4() {
        let mu = p(&[9, 4]);
        assert_eq!(corners(&mu, CornerKind::Internal), cells(&[(4, 0), (0, 1)]));
        assert_eq!(corners(&mu, CornerKind::Inner), cells(&[(8, 0), (3, 1)]));
        assert_eq!(corners(&mu, CornerKind::Outer), cells(&[(9, 0), (4, 1), (0, 2)]));
        assert_eq!(corners(&mu, CornerKind::External), vec![Cell::inf_row(0), Cell::new(8, 1), Cell::new(3, 2)]);
        assert_eq!(corners(&p(&[6]), CornerKind::Inner), cells(&[(5, 0)]));
        assert!(leftmost_rel(&mu, &Cell::new(9, 0)).is_empty());
        assert!(rightmost_rel(&mu, &Cell::new(1, 0)).is_empty());
    }

    #[test]
    fn corner_pairings_and_step_arm() {
        for n in 0..=8 {
            for lam in partitions_of(n) {
                let internal = corners(&lam, CornerKind::Internal);
                let inner = corners(&lam, CornerKind::Inner);
                assert_eq!(internal.len(), inner.len());
                for (c, d) in internal.iter().zip(&inner) {
                    let (i, j) = c.finite().unwrap();
                    let a = arm(&lam, c).fin().unwrap();
                    assert_eq!(*d, Cell::new(i + a as i64, j));
                    assert_eq!(lam.step(j as usize + 1), ExtNat::Fin(a + 1));
                    assert_eq!(leg(&lam, c), ExtNat::Fin(0));
                }
                let external = corners(&lam, CornerKind::External);
                let outer = corners(&lam, CornerKind::Outer);
                assert_eq!(external.len(), outer.len());
                for (c, d) in external.iter().zip(&outer) {
                    let j = match c.j {
                        Coord::Fin(j) => j,
                        Coord::Inf => unreachable!(),
                    };
                    assert_eq!(c.j, d.j);
                    assert_eq!(lam.step(j as usize), arm(&lam, c).plus(1));
                    if let (Coord::Fin(i), Coord::Fin(i2)) = (c.i, d.i) {
                        assert_eq!(i, i2 + arm(&lam, c).fin().unwrap() as i64);
                    }
                }
            }
        }
    }

    #[test]
    fn diagram_text_form() {
        let d = Diagram::punctured(&p(&[2, 1]), (1, 0));
        assert_eq!(d.to_string(), "{(0,0),(0,1)}");
        assert_eq!(d.to_string().parse::<Diagram>().unwrap(), d);
        assert_eq!(d.as_partition(), Some(p(&[1, 1])));
        assert_eq!(Diagram::punctured(&p(&[2, 1]), (0, 0)).as_partition(), None);
    }
}
