//! The extended affine symmetric group acting on charges, and the crystal
//! isomorphisms `Ψ` between Uglov sets of charges in one orbit.
//!
//! `Ψ` is computed by peeling to the empty bipartition at the source charge
//! and rebuilding with the same residues at the target charge. Both sides are
//! the connected component of the empty bipartition, so this is the unique
//! crystal isomorphism between them.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::crystal::{is_uglov, peel, rebuild, CrystalParams};
use crate::diagrams::{nature_at, sufficient_window, Bipartition, Charge, Modulus, NatureKind};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ChargeMove {
    Sigma1,
    Tau,
    Y1,
    Y2,
    Y1Inv,
    Y2Inv,
}

impl ChargeMove {
    pub fn name(&self) -> &'static str {
        match self {
            ChargeMove::Sigma1 => "sigma1",
            ChargeMove::Tau => "tau",
            ChargeMove::Y1 => "y1",
            ChargeMove::Y2 => "y2",
            ChargeMove::Y1Inv => "y1inv",
            ChargeMove::Y2Inv => "y2inv",
        }
    }

    /// Moves that undo `self`, in application order.
    pub fn inverse(&self) -> Vec<ChargeMove> {
        match self {
            ChargeMove::Sigma1 => vec![ChargeMove::Sigma1],
            ChargeMove::Tau => vec![ChargeMove::Sigma1, ChargeMove::Y1Inv],
            ChargeMove::Y1 => vec![ChargeMove::Y1Inv],
            ChargeMove::Y2 => vec![ChargeMove::Y2Inv],
            ChargeMove::Y1Inv => vec![ChargeMove::Y1],
            ChargeMove::Y2Inv => vec![ChargeMove::Y2],
        }
    }
}

impl fmt::Display for ChargeMove {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// `σ₁·(s1,s2) = (s2,s1)`, `y1` and `y2` shift by `e`, `τ = σ₁y₁` so `τ·(s1,s2) = (s2, s1+e)`.
pub fn apply_move(charge: Charge, m: ChargeMove, e: i64) -> Charge {
    let Charge { s1, s2 } = charge;
    match m {
        ChargeMove::Sigma1 => Charge::new(s2, s1),
        ChargeMove::Tau => Charge::new(s2, s1 + e),
        ChargeMove::Y1 => Charge::new(s1 + e, s2),
        ChargeMove::Y2 => Charge::new(s1, s2 + e),
        ChargeMove::Y1Inv => Charge::new(s1 - e, s2),
        ChargeMove::Y2Inv => Charge::new(s1, s2 - e),
    }
}

/// A start charge and a sequence of moves for a fixed finite `e`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MovePath {
    pub start: Charge,
    pub e: i64,
    pub moves: Vec<ChargeMove>,
}

impl MovePath {
    pub fn new(start: Charge, e: i64, moves: Vec<ChargeMove>) -> Self {
        MovePath { start, e, moves }
    }

    pub fn end(&self) -> Charge {
        self.moves.iter().fold(self.start, |c, &m| apply_move(c, m, self.e))
    }

    /// Charges visited, start and end included.
    pub fn charges(&self) -> Vec<Charge> {
        let mut out = vec![self.start];
        for &m in &self.moves {
            out.push(apply_move(*out.last().unwrap(), m, self.e));
        }
        out
    }

    pub fn inverse(&self) -> MovePath {
        let moves = self.moves.iter().rev().flat_map(|m| m.inverse()).collect();
        MovePath::new(self.end(), self.e, moves)
    }

    pub fn then(&self, other: &MovePath) -> Result<MovePath> {
        if other.start != self.end() || other.e != self.e {
            return Err(Error::Precondition(format!(
                "path ending at {} cannot continue with a path starting at {}",
                self.end(),
                other.start
            )));
        }
        let mut moves = self.moves.clone();
        moves.extend_from_slice(&other.moves);
        Ok(MovePath::new(self.start, self.e, moves))
    }
}

impl Serialize for MovePath {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.moves.iter().map(|m| m.name()))
    }
}

/// Shifts both entries into `[0, e)` and then swaps if needed.
pub fn reduce_to_fundamental(charge: Charge, e: i64) -> MovePath {
    let mut moves = Vec::new();
    let (mut s1, mut s2) = (charge.s1, charge.s2);
    while s1 >= e {
        moves.push(ChargeMove::Y1Inv);
        s1 -= e;
    }
    while s1 < 0 {
        moves.push(ChargeMove::Y1);
        s1 += e;
    }
    while s2 >= e {
        moves.push(ChargeMove::Y2Inv);
        s2 -= e;
    }
    while s2 < 0 {
        moves.push(ChargeMove::Y2);
        s2 += e;
    }
    if s1 > s2 {
        moves.push(ChargeMove::Sigma1);
    }
    MovePath::new(charge, e, moves)
}

/// The representative of the orbit of `charge` in the fundamental domain.
pub fn fundamental_charge(charge: Charge, e: i64) -> Charge {
    reduce_to_fundamental(charge, e).end()
}

/// A path from `from` to `to`, through the fundamental domain.
pub fn path_between(from: Charge, to: Charge, e: i64) -> Result<MovePath> {
    let a = reduce_to_fundamental(from, e);
    let b = reduce_to_fundamental(to, e);
    if a.end() != b.end() {
        return Err(Error::DifferentOrbit(from, to));
    }
    a.then(&b.inverse())
}

/// `Ψ_{from→to}(bp)`. For `e = ∞` the orbit of a charge is `{s, σ₁·s}`.
pub fn psi_between(bp: &Bipartition, from: Charge, to: Charge, e: Modulus) -> Result<Bipartition> {
    let same_orbit = match e {
        Modulus::Finite(e) => fundamental_charge(from, e) == fundamental_charge(to, e),
        Modulus::Infinite => to == from || to == from.swapped(),
    };
    if !same_orbit {
        return Err(Error::DifferentOrbit(from, to));
    }
    let src = CrystalParams::new(e, from);
    let mut seq = peel(bp, &src).ok_or_else(|| Error::NotUglov {
        bp: bp.clone(),
        charge: from,
    })?;
    seq.reverse();
    rebuild(&seq, &CrystalParams::new(e, to))
        .ok_or_else(|| Error::Internal(format!("rebuilding {bp} at {to} failed")))
}

/// `Ψ` along a path, computed in one peel/rebuild.
pub fn psi(bp: &Bipartition, path: &MovePath) -> Result<Bipartition> {
    psi_between(bp, path.start, path.end(), Modulus::Finite(path.e))
}

/// `Ψ` along a path, one move at a time.
pub fn psi_stepwise(bp: &Bipartition, path: &MovePath) -> Result<Bipartition> {
    let charges = path.charges();
    let mut cur = bp.clone();
    for w in charges.windows(2) {
        cur = psi_between(&cur, w[0], w[1], Modulus::Finite(path.e))?;
    }
    Ok(cur)
}

/// Allowed `(component 2, component 1)` natures in the image of a `σ₁` move,
/// given the pair at the same content before it.
pub fn sigma1_allowed(c2: NatureKind, c1: NatureKind) -> &'static [(NatureKind, NatureKind)] {
    use NatureKind::*;
    match (c2, c1) {
        (R, R) => &[(R, R)],
        (A, R) => &[(A, R)],
        (Bv, R) => &[(R, Bv), (Bv, R)],
        (Bh, R) => &[(Bh, R)],
        (R, A) => &[(R, A), (Bh, Bv)],
        (A, A) => &[(A, A)],
        (Bv, A) => &[(Bv, A), (A, Bv)],
        (Bh, A) => &[(Bh, A)],
        (R, Bh) => &[(R, Bh), (Bh, R)],
        (A, Bh) => &[(A, Bh), (Bh, A)],
        (Bv, Bh) => &[(R, A), (Bv, Bh), (Bh, Bv)],
        (Bh, Bh) => &[(Bh, Bh)],
        (R, Bv) => &[(R, Bv)],
        (A, Bv) => &[(A, Bv)],
        (Bv, Bv) => &[(Bv, Bv)],
        (Bh, Bv) => &[(Bh, Bv)],
    }
}

/// Checks every content slot of `image = Ψ_{from→σ₁·from}(bp)` against [`sigma1_allowed`].
///
/// The table describes the passage from `s₁ ≤ s₂` to the swapped charge. When
/// `from.s1 > from.s2` it is read backwards, from `image` to `bp`.
pub fn psi_nature_check(bp: &Bipartition, image: &Bipartition, from: Charge, to: Charge) -> Result<bool> {
    if to != from.swapped() {
        return Err(Error::Precondition(format!("{to} is not sigma1 applied to {from}")));
    }
    let (bp, image, from, to) = if from.s1 > from.s2 {
        (image, bp, to, from)
    } else {
        (bp, image, from, to)
    };
    let (l1, h1) = sufficient_window(bp, from);
    let (l2, h2) = sufficient_window(image, to);
    for j in l1.min(l2) - 1..=h1.max(h2) + 1 {
        let before = (nature_at(bp, from, j, 2).0.kind, nature_at(bp, from, j, 1).0.kind);
        let after = (nature_at(image, to, j, 2).0.kind, nature_at(image, to, j, 1).0.kind);
        if !sigma1_allowed(before.0, before.1).contains(&after) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Compares `Ψ_{s→σ₁·s}` at `e` and at `e = ∞`. `None` when `bp` is not Uglov for both.
pub fn psi_e_independence_check(bp: &Bipartition, from: Charge, e: i64) -> Result<Option<bool>> {
    if from.s1 > from.s2 {
        return Err(Error::Precondition(format!("need s1 <= s2, got {from}")));
    }
    let fin = CrystalParams::new(Modulus::Finite(e), from);
    let inf = CrystalParams::new(Modulus::Infinite, from);
    if !is_uglov(bp, &fin) || !is_uglov(bp, &inf) {
        return Ok(None);
    }
    let to = from.swapped();
    let a = psi_between(bp, from, to, Modulus::Finite(e))?;
    let b = psi_between(bp, from, to, Modulus::Infinite)?;
    Ok(Some(a == b))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bp(s: &str) -> Bipartition {
        s.parse().unwrap()
    }

    #[test]
    fn moves() {
        let s = Charge::new(0, 1);
        assert_eq!(apply_move(s, ChargeMove::Sigma1, 3), Charge::new(1, 0));
        assert_eq!(apply_move(s, ChargeMove::Tau, 3), Charge::new(1, 3));
        let t = apply_move(apply_move(Charge::new(2, 5), ChargeMove::Y1, 4), ChargeMove::Y2, 4);
        assert_eq!(t, Charge::new(6, 9));
        for m in [ChargeMove::Sigma1, ChargeMove::Tau, ChargeMove::Y1, ChargeMove::Y2Inv] {
            let back = m.inverse().into_iter().fold(apply_move(s, m, 3), |c, m| apply_move(c, m, 3));
            assert_eq!(back, s, "{m}");
        }
    }

    #[test]
    fn fundamental() {
        assert!(reduce_to_fundamental(Charge::new(0, 1), 3).moves.is_empty());
        assert_eq!(reduce_to_fundamental(Charge::new(1, 0), 3).end(), Charge::new(0, 1));
        assert_eq!(reduce_to_fundamental(Charge::new(7, -2), 3).end(), Charge::new(1, 1));
    }

    #[test]
    fn paths() {
        let p = path_between(Charge::new(0, 1), Charge::new(-5, 3), 3).unwrap();
        assert_eq!(p.end(), Charge::new(-5, 3));
        assert!(path_between(Charge::new(0, 1), Charge::new(0, 0), 3).is_err());
        let json = serde_json::to_string(&MovePath::new(Charge::new(0, 1), 3, vec![ChargeMove::Sigma1, ChargeMove::Y2])).unwrap();
        assert_eq!(json, r#"["sigma1","y2"]"#);
    }

    #[test]
    fn psi_examples() {
        let lam = bp("6.1,2.2");
        let e = Modulus::Finite(3);
        let s = Charge::new(0, 1);
        assert_eq!(psi_between(&lam, s, Charge::new(1, 0), e).unwrap(), bp("5.2.1,3"));
        assert_eq!(psi_between(&lam, s, Charge::new(-2, 0), e).unwrap(), bp("2.2,6.1"));
        assert_eq!(
            psi_between(&bp("3.2.2.1.1,3.3.1"), s, Charge::new(1, 0), e).unwrap(),
            bp("3.3.2.2.1.1,3.1")
        );
        assert!(psi_between(&bp("1.1.1,-"), Charge::new(0, 0), Charge::new(0, 0), e).is_err());
    }

    #[test]
    fn tau_swaps_components() {
        let lam = bp("6.1,2.2");
        let s = Charge::new(0, 1);
        let t = apply_move(s, ChargeMove::Tau, 3);
        assert_eq!(psi_between(&lam, s, t, Modulus::Finite(3)).unwrap(), lam.swapped());
    }

    #[test]
    fn nature_check_example() {
        let s = Charge::new(0, 1);
        assert!(psi_nature_check(&bp("6.1,2.2"), &bp("5.2.1,3"), s, s.swapped()).unwrap());
        assert!(psi_nature_check(&Bipartition::empty(), &Bipartition::empty(), s, s.swapped()).unwrap());
        assert!(psi_nature_check(&bp("6.1,2.2"), &bp("5.2.1,3"), s, s).is_err());
    }

    #[test]
    fn e_independence_example() {
        let r = psi_e_independence_check(&bp("6.1,2.2"), Charge::new(0, 1), 3).unwrap();
        assert_ne!(r, Some(false));
        assert_eq!(psi_e_independence_check(&Bipartition::empty(), Charge::new(0, 1), 3).unwrap(), Some(true));
    }
}
