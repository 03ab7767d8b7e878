//! Recognition of Gram matrices against direct sums of standard lattices.

use std::fmt;

use num_traits::One;

use super::congruence::{find_congruence_with_budget, CongruenceWitness};
use super::disc::disc_forms_isomorphic;
use super::{invariants, GramMatrix, LatticeInvariants};
use crate::arith::{int, Int};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Summand {
    /// The hyperbolic plane.
    U,
    /// Rank one, `<k>`.
    Angle(i64),
    /// Negative definite root lattice `A_n`.
    A(usize),
    E6,
    E8,
}

impl Summand {
    pub fn gram(&self) -> GramMatrix {
        match *self {
            Summand::U => GramMatrix::hyperbolic(),
            Summand::Angle(k) => GramMatrix::diagonal(&[k]),
            Summand::A(n) => {
                let rows: Vec<Vec<i64>> = (0..n)
                    .map(|i| {
                        (0..n)
                            .map(|j| match i.abs_diff(j) {
                                0 => -2,
                                1 => 1,
                                _ => 0,
                            })
                            .collect()
                    })
                    .collect();
                GramMatrix::from_i64(&rows).expect("symmetric")
            }
            Summand::E6 => e_lattice(6),
            Summand::E8 => e_lattice(8),
        }
    }

    pub fn rank(&self) -> usize {
        match *self {
            Summand::U => 2,
            Summand::Angle(_) => 1,
            Summand::A(n) => n,
            Summand::E6 => 6,
            Summand::E8 => 8,
        }
    }

    pub fn det(&self) -> Int {
        match *self {
            Summand::U => int(-1),
            Summand::Angle(k) => int(k),
            Summand::A(n) => {
                let s = if n % 2 == 0 { 1 } else { -1 };
                int(s * (n as i64 + 1))
            }
            Summand::E6 => int(3),
            Summand::E8 => int(1),
        }
    }

    pub fn signature(&self) -> (usize, usize) {
        match *self {
            Summand::U => (1, 1),
            Summand::Angle(k) if k > 0 => (1, 0),
            Summand::Angle(_) => (0, 1),
            other => (0, other.rank()),
        }
    }

    fn sort_key(&self) -> (u8, i64, bool) {
        match *self {
            Summand::U => (0, 0, false),
            Summand::Angle(k) => (1, k.abs(), k > 0),
            Summand::A(n) => (2, n as i64, false),
            Summand::E6 => (3, 6, false),
            Summand::E8 => (3, 8, false),
        }
    }
}

impl PartialOrd for Summand {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Summand {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.sort_key().cmp(&other.sort_key())
    }
}

impl fmt::Display for Summand {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Summand::U => write!(f, "U"),
            Summand::Angle(k) => write!(f, "<{k}>"),
            Summand::A(n) => write!(f, "A{n}"),
            Summand::E6 => write!(f, "E6"),
            Summand::E8 => write!(f, "E8"),
        }
    }
}

/// Negative definite `E_n` from its Dynkin diagram: a chain of `n - 1`
/// nodes with one extra node attached to the third.
fn e_lattice(n: usize) -> GramMatrix {
    let mut rows = vec![vec![0i64; n]; n];
    for i in 0..n {
        rows[i][i] = -2;
    }
    let mut link = |a: usize, b: usize| {
        rows[a][b] = 1;
        rows[b][a] = 1;
    };
    for i in 0..n - 2 {
        link(i, i + 1);
    }
    link(2, n - 1);
    GramMatrix::from_i64(&rows).expect("symmetric")
}

/// A direct sum of catalog summands, kept in canonical order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticeName(pub Vec<Summand>);

impl LatticeName {
    pub fn new(mut parts: Vec<Summand>) -> Self {
        parts.sort();
        LatticeName(parts)
    }

    pub fn gram(&self) -> GramMatrix {
        let parts: Vec<GramMatrix> = self.0.iter().map(Summand::gram).collect();
        GramMatrix::direct_sum_all(&parts)
    }

    pub fn rank(&self) -> usize {
        self.0.iter().map(Summand::rank).sum()
    }

    pub fn det(&self) -> Int {
        self.0.iter().fold(Int::one(), |acc, s| acc * s.det())
    }

    pub fn signature(&self) -> (usize, usize) {
        self.0.iter().fold((0, 0), |(p, m), s| {
            let (a, b) = s.signature();
            (p + a, m + b)
        })
    }

    pub fn contains_u(&self) -> bool {
        self.0.contains(&Summand::U)
    }
}

impl fmt::Display for LatticeName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "{}", parts.join("+"))
    }
}

#[derive(Clone, Debug)]
pub struct Catalog {
    pub summands: Vec<Summand>,
    pub max_summands: usize,
}

impl Catalog {
    /// `U`, `<k>` for even `0 < |k| <= 8`, `A_2..A_8`, `E6`, `E8`; up to four summands.
    /// `A_1` is left out because it coincides with `<-2>`.
    pub fn standard() -> Self {
        let mut summands = vec![Summand::U];
        for k in [2, 4, 6, 8] {
            summands.push(Summand::Angle(-k));
            summands.push(Summand::Angle(k));
        }
        summands.extend((2..=8).map(Summand::A));
        summands.push(Summand::E6);
        summands.push(Summand::E8);
        Catalog { summands, max_summands: 4 }
    }

    /// Every sum of at most `max_summands` catalog entries with the given
    /// rank, signature and determinant.
    fn coarse_matches(&self, rank: usize, sig: (usize, usize), det: &Int) -> Vec<LatticeName> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        self.enumerate(0, rank, &mut cur, &mut |parts| {
            let name = LatticeName::new(parts.to_vec());
            if name.signature() == sig && &name.det() == det {
                out.push(name);
            }
        });
        out
    }

    fn enumerate(&self, start: usize, rank_left: usize, cur: &mut Vec<Summand>, f: &mut dyn FnMut(&[Summand])) {
        if rank_left == 0 {
            if !cur.is_empty() {
                f(cur);
            }
            return;
        }
        if cur.len() == self.max_summands {
            return;
        }
        for i in start..self.summands.len() {
            let s = self.summands[i];
            if s.rank() <= rank_left {
                cur.push(s);
                self.enumerate(i, rank_left - s.rank(), cur, f);
                cur.pop();
            }
        }
    }

    /// Catalog names sharing all invariants with `inv`, most preferred first:
    /// sums containing `U` come first, then sums with fewer summands.
    pub fn candidates(&self, inv: &LatticeInvariants) -> Vec<LatticeName> {
        let mut names: Vec<LatticeName> = self
            .coarse_matches(inv.rank, inv.signature, &inv.determinant)
            .into_iter()
            .filter(|name| {
                let Ok(ci) = invariants(&name.gram()) else { return false };
                ci.disc_group == inv.disc_group && disc_forms_isomorphic(&inv.disc_form, &ci.disc_form, 1).is_some()
            })
            .collect();
        names.sort_by_key(|n| (!n.contains_u(), n.0.len(), n.clone()));
        names.dedup();
        names
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MatchLevel {
    VerifiedIsometric,
    SameInvariants,
    Unknown,
}

impl fmt::Display for MatchLevel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MatchLevel::VerifiedIsometric => "verified-isometric",
            MatchLevel::SameInvariants => "same-invariants",
            MatchLevel::Unknown => "unknown",
        })
    }
}

#[derive(Clone, Debug)]
pub struct Recognition {
    pub level: MatchLevel,
    pub name: Option<LatticeName>,
    /// `P g P^T = gram(name)` when the match is verified.
    pub witness: Option<CongruenceWitness>,
    pub candidates: Vec<LatticeName>,
}

pub fn recognize(g: &GramMatrix) -> Recognition {
    recognize_with(g, &Catalog::standard(), 2)
}

pub fn recognize_with(g: &GramMatrix, catalog: &Catalog, bound: u32) -> Recognition {
    let unknown = Recognition { level: MatchLevel::Unknown, name: None, witness: None, candidates: vec![] };
    if !g.is_even() {
        return unknown;
    }
    let Ok(inv) = invariants(g) else { return unknown };
    let candidates = catalog.candidates(&inv);
    for name in &candidates {
        let out = find_congruence_with_budget(g, &name.gram(), bound, 5_000_000);
        if let Some(w) = out.witness() {
            return Recognition {
                level: MatchLevel::VerifiedIsometric,
                name: Some(name.clone()),
                witness: Some(w.clone()),
                candidates,
            };
        }
    }
    match candidates.first() {
        Some(name) => {
            Recognition { level: MatchLevel::SameInvariants, name: Some(name.clone()), witness: None, candidates }
        }
        None => unknown,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::invariants;

    #[test]
    fn root_lattice_determinants() {
        for s in [Summand::A(2), Summand::A(5), Summand::A(8), Summand::E6, Summand::E8] {
            let g = s.gram();
            assert_eq!(g.det(), s.det(), "{s}");
            assert_eq!(g.signature(), s.signature(), "{s}");
        }
    }

    #[test]
    fn e8_recognizes_itself() {
        let r = recognize(&Summand::E8.gram());
        assert_eq!(r.level, MatchLevel::VerifiedIsometric);
        assert_eq!(r.name.unwrap().to_string(), "E8");
    }

    #[test]
    fn naming_order() {
        let n = LatticeName::new(vec![Summand::Angle(-4), Summand::U, Summand::Angle(-2)]);
        assert_eq!(n.to_string(), "U+<-2>+<-4>");
        let m = LatticeName::new(vec![Summand::Angle(2), Summand::Angle(-2)]);
        assert_eq!(m.to_string(), "<-2>+<2>");
    }

    #[test]
    fn u_plus_a5_prefers_u() {
        let g = LatticeName::new(vec![Summand::U, Summand::A(5)]).gram();
        let inv = invariants(&g).unwrap();
        let c = Catalog::standard().candidates(&inv);
        assert_eq!(c[0].to_string(), "U+A5");
    }
}
