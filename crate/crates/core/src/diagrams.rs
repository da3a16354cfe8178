//! Partitions, bipartitions and their extended Young diagrams.
//!
//! Nodes are triples `(a, b, c)` (row, column, component). The extended
//! diagram of a component adds the virtual nodes `(0, b)` for `b > λ_1` and
//! `(a, 0)` for `a > ℓ(λ)`. Every `(content, component)` slot holds exactly
//! one node that is addable or on the boundary; its [`Nature`] is computed by
//! [`nature_at`].

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::{Error, Residue, Result};

/// A partition, stored without trailing zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition from weakly decreasing parts. Trailing zeros are dropped.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Parse(format!("parts {parts:?} are not weakly decreasing")));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn rank(&self) -> usize {
        self.parts.iter().sum()
    }

    /// `λ_i` with 1-based indexing; zero past the length (and for `i = 0`).
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    /// `λ'_b`, the length of column `b`.
    pub fn conj_part(&self, b: usize) -> usize {
        if b == 0 {
            return 0;
        }
        self.parts.iter().take_while(|&&p| p >= b).count()
    }

    pub fn conjugate(&self) -> Partition {
        Partition {
            parts: (1..=self.part(1)).map(|b| self.conj_part(b)).collect(),
        }
    }

    /// Row `a ≥ 1` with `λ_a − a = d`. Rows past the length count with `λ_a = 0`.
    pub(crate) fn vertical_row(&self, d: i64) -> Option<usize> {
        let l = self.len() as i64;
        if d <= -(l + 1) {
            return Some((-d) as usize);
        }
        self.parts
            .iter()
            .enumerate()
            .find(|&(i, &p)| p as i64 - (i as i64 + 1) == d)
            .map(|(i, _)| i + 1)
    }

    /// Column `b ≥ 1` with `b − λ'_b = d`.
    pub(crate) fn horizontal_col(&self, d: i64) -> Option<usize> {
        let width = self.part(1);
        if d > width as i64 {
            return Some(d as usize);
        }
        (1..=width).find(|&b| b as i64 - self.conj_part(b) as i64 == d)
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Vec<usize> {
        p.parts
    }
}

impl fmt::Display for Partition {
    /// Dotted notation `6.1`; the empty partition prints as `-`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "-");
        }
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", s.join("."))
    }
}

impl FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "-" || s == "∅" {
            return Ok(Partition::empty());
        }
        let parts = s
            .split('.')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad part {t:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// All partitions of `n`, in decreasing lexicographic order.
pub fn partitions(n: usize) -> Vec<Partition> {
    fn rec(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        for k in (1..=rem.min(max)).rev() {
            cur.push(k);
            rec(rem - k, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// The charge `s = (s1, s2)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "[i64; 2]", into = "[i64; 2]")]
pub struct Charge {
    pub s1: i64,
    pub s2: i64,
}

impl Charge {
    pub const fn new(s1: i64, s2: i64) -> Self {
        Charge { s1, s2 }
    }

    /// `s_c` for `c ∈ {1, 2}`.
    pub fn get(&self, c: u8) -> i64 {
        match c {
            1 => self.s1,
            2 => self.s2,
            _ => panic!("component must be 1 or 2, got {c}"),
        }
    }

    pub fn swapped(&self) -> Charge {
        Charge::new(self.s2, self.s1)
    }
}

impl From<[i64; 2]> for Charge {
    fn from(a: [i64; 2]) -> Self {
        Charge::new(a[0], a[1])
    }
}

impl From<Charge> for [i64; 2] {
    fn from(c: Charge) -> Self {
        [c.s1, c.s2]
    }
}

impl fmt::Display for Charge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.s1, self.s2)
    }
}

impl FromStr for Charge {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().trim_start_matches('(').trim_end_matches(')');
        let v: Vec<&str> = t.split(',').collect();
        if v.len() != 2 {
            return Err(Error::Parse(format!("charge {s:?} must be s1,s2")));
        }
        let p = |x: &str| {
            x.trim()
                .parse::<i64>()
                .map_err(|_| Error::Parse(format!("bad charge entry {x:?}")))
        };
        Ok(Charge::new(p(v[0])?, p(v[1])?))
    }
}

/// The parameter `e`: an integer `≥ 2` or infinity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Modulus {
    Finite(i64),
    Infinite,
}

impl Modulus {
    /// Content modulo `e`, or the content itself when `e = ∞`.
    pub fn residue(&self, content: i64) -> Residue {
        match *self {
            Modulus::Finite(e) => content.rem_euclid(e),
            Modulus::Infinite => content,
        }
    }

    pub fn finite(&self) -> Option<i64> {
        match *self {
            Modulus::Finite(e) => Some(e),
            Modulus::Infinite => None,
        }
    }
}

impl fmt::Display for Modulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Modulus::Finite(e) => write!(f, "{e}"),
            Modulus::Infinite => write!(f, "inf"),
        }
    }
}

impl FromStr for Modulus {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if matches!(s, "inf" | "infinity" | "∞") {
            return Ok(Modulus::Infinite);
        }
        match s.parse::<i64>() {
            Ok(e) if e >= 2 => Ok(Modulus::Finite(e)),
            _ => Err(Error::Parse(format!("e must be an integer >= 2 or inf, got {s:?}"))),
        }
    }
}

/// An extended node `(a, b, c)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "(usize, usize, u8)", into = "(usize, usize, u8)")]
pub struct ExtNode {
    pub a: usize,
    pub b: usize,
    pub c: u8,
}

impl ExtNode {
    pub const fn new(a: usize, b: usize, c: u8) -> Self {
        ExtNode { a, b, c }
    }

    /// `b − a + s_c`.
    pub fn content(&self, charge: Charge) -> i64 {
        self.b as i64 - self.a as i64 + charge.get(self.c)
    }

    pub fn residue(&self, charge: Charge, e: Modulus) -> Residue {
        e.residue(self.content(charge))
    }

    /// Outside the ordinary Young diagram (row 0 or column 0).
    pub fn is_virtual(&self) -> bool {
        self.a == 0 || self.b == 0
    }
}

impl From<(usize, usize, u8)> for ExtNode {
    fn from(t: (usize, usize, u8)) -> Self {
        ExtNode::new(t.0, t.1, t.2)
    }
}

impl From<ExtNode> for (usize, usize, u8) {
    fn from(n: ExtNode) -> Self {
        (n.a, n.b, n.c)
    }
}

impl fmt::Display for ExtNode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.a, self.b, self.c)
    }
}

/// Sort key for the node order `<_s`: content first, and at equal content
/// component 2 is the smaller node.
pub fn node_key(node: &ExtNode, charge: Charge) -> (i64, u8) {
    (node.content(charge), u8::from(node.c == 1))
}

/// Compares two nodes for `<_s`. Distinct nodes with the same content and
/// component are not comparable.
pub fn node_cmp(g1: &ExtNode, g2: &ExtNode, charge: Charge) -> Result<Ordering> {
    let (k1, k2) = (node_key(g1, charge), node_key(g2, charge));
    if k1 == k2 && g1 != g2 {
        return Err(Error::Incomparable(*g1, *g2));
    }
    Ok(k1.cmp(&k2))
}

pub fn node_less(g1: &ExtNode, g2: &ExtNode, charge: Charge) -> Result<bool> {
    Ok(node_cmp(g1, g2, charge)? == Ordering::Less)
}

/// A pair of partitions `(λ¹, λ²)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Bipartition {
    pub c1: Partition,
    pub c2: Partition,
}

impl Bipartition {
    pub fn new(c1: Partition, c2: Partition) -> Self {
        Bipartition { c1, c2 }
    }

    pub fn empty() -> Self {
        Bipartition::default()
    }

    /// Convenience constructor from raw parts.
    pub fn from_parts(c1: &[usize], c2: &[usize]) -> Result<Self> {
        Ok(Bipartition::new(Partition::new(c1.to_vec())?, Partition::new(c2.to_vec())?))
    }

    pub fn comp(&self, c: u8) -> &Partition {
        match c {
            1 => &self.c1,
            2 => &self.c2,
            _ => panic!("component must be 1 or 2, got {c}"),
        }
    }

    fn comp_mut(&mut self, c: u8) -> &mut Partition {
        match c {
            1 => &mut self.c1,
            2 => &mut self.c2,
            _ => panic!("component must be 1 or 2, got {c}"),
        }
    }

    pub fn rank(&self) -> usize {
        self.c1.rank() + self.c2.rank()
    }

    pub fn is_empty(&self) -> bool {
        self.c1.is_empty() && self.c2.is_empty()
    }

    /// Components swapped.
    pub fn swapped(&self) -> Bipartition {
        Bipartition::new(self.c2.clone(), self.c1.clone())
    }

    /// Membership in the extended Young diagram.
    pub fn is_extended_node(&self, node: &ExtNode) -> bool {
        if node.c != 1 && node.c != 2 {
            return false;
        }
        let l = self.comp(node.c);
        match (node.a, node.b) {
            (0, 0) => false,
            (0, b) => b > l.part(1),
            (a, 0) => a > l.len(),
            (a, b) => b <= l.part(a),
        }
    }

    /// Removable nodes, ordered by component then row.
    pub fn removable_nodes(&self) -> Vec<ExtNode> {
        let mut out = Vec::new();
        for c in [1u8, 2] {
            let l = self.comp(c);
            for a in 1..=l.len() {
                if l.part(a) > l.part(a + 1) {
                    out.push(ExtNode::new(a, l.part(a), c));
                }
            }
        }
        out
    }

    /// Addable nodes, ordered by component then row.
    pub fn addable_nodes(&self) -> Vec<ExtNode> {
        let mut out = Vec::new();
        for c in [1u8, 2] {
            let l = self.comp(c);
            for a in 1..=l.len() + 1 {
                if a == 1 || l.part(a - 1) > l.part(a) {
                    out.push(ExtNode::new(a, l.part(a) + 1, c));
                }
            }
        }
        out
    }

    pub fn is_removable(&self, node: &ExtNode) -> bool {
        (node.c == 1 || node.c == 2)
            && node.a >= 1
            && node.b >= 1
            && self.comp(node.c).part(node.a) == node.b
            && self.comp(node.c).part(node.a + 1) < node.b
    }

    pub fn is_addable(&self, node: &ExtNode) -> bool {
        (node.c == 1 || node.c == 2)
            && node.a >= 1
            && node.b >= 1
            && self.comp(node.c).part(node.a) + 1 == node.b
            && (node.a == 1 || self.comp(node.c).part(node.a - 1) >= node.b)
    }

    /// Removes a removable node.
    pub fn remove_node(&self, node: &ExtNode) -> Result<Bipartition> {
        if !self.is_removable(node) {
            return Err(Error::Precondition(format!("{node} is not removable from {self}")));
        }
        Ok(self.without(node))
    }

    /// Adds an addable node.
    pub fn add_node(&self, node: &ExtNode) -> Result<Bipartition> {
        if !self.is_addable(node) {
            return Err(Error::Precondition(format!("{node} is not addable to {self}")));
        }
        Ok(self.with(node))
    }

    pub(crate) fn without(&self, node: &ExtNode) -> Bipartition {
        let mut out = self.clone();
        let l = out.comp_mut(node.c);
        l.parts[node.a - 1] -= 1;
        if l.parts[node.a - 1] == 0 {
            l.parts.pop();
        }
        out
    }

    pub(crate) fn with(&self, node: &ExtNode) -> Bipartition {
        let mut out = self.clone();
        let l = out.comp_mut(node.c);
        if node.a > l.parts.len() {
            l.parts.push(1);
        } else {
            l.parts[node.a - 1] += 1;
        }
        out
    }

    /// Every bipartition of rank `n`.
    pub fn all_of_rank(n: usize) -> Vec<Bipartition> {
        let mut out = Vec::new();
        for k in (0..=n).rev() {
            let left = partitions(k);
            let right = partitions(n - k);
            for p in &left {
                for q in &right {
                    out.push(Bipartition::new(p.clone(), q.clone()));
                }
            }
        }
        out
    }
}

impl fmt::Display for Bipartition {
    /// `6.1,2.2`, with `-` for an empty component.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.c1, self.c2)
    }
}

impl FromStr for Bipartition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().trim_start_matches('(').trim_end_matches(')');
        let v: Vec<&str> = t.split(',').collect();
        if v.len() != 2 {
            return Err(Error::Parse(format!(
                "bipartition {s:?} must have two comma-separated components"
            )));
        }
        Ok(Bipartition::new(v[0].parse()?, v[1].parse()?))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum NatureKind {
    A,
    R,
    Bv,
    Bh,
}

impl fmt::Display for NatureKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            NatureKind::A => "A",
            NatureKind::R => "R",
            NatureKind::Bv => "Bv",
            NatureKind::Bh => "Bh",
        };
        f.pad(s)
    }
}

impl FromStr for NatureKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "A" => Ok(NatureKind::A),
            "R" => Ok(NatureKind::R),
            "Bv" | "B_v" => Ok(NatureKind::Bv),
            "Bh" | "B_h" => Ok(NatureKind::Bh),
            other => Err(Error::Parse(format!("unknown nature {other:?}"))),
        }
    }
}

/// Nature of the addable-or-boundary node at a slot.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Nature {
    pub kind: NatureKind,
    #[serde(rename = "virtual")]
    pub is_virtual: bool,
}

impl fmt::Display for Nature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.kind.fmt(f)
    }
}

/// The unique addable or boundary node of content `j` in component `c`, with its nature.
pub fn nature_at(bp: &Bipartition, charge: Charge, j: i64, c: u8) -> (Nature, ExtNode) {
    let l = bp.comp(c);
    let d = j - charge.get(c);
    let (kind, node) = match (l.vertical_row(d), l.vertical_row(d - 1)) {
        (Some(a), None) => (NatureKind::R, ExtNode::new(a, l.part(a), c)),
        (Some(a), Some(_)) => (NatureKind::Bv, ExtNode::new(a, l.part(a), c)),
        (None, Some(a)) => (NatureKind::A, ExtNode::new(a, l.part(a) + 1, c)),
        (None, None) => {
            let b = l
                .horizontal_col(d)
                .expect("a slot off the vertical boundary lies on the horizontal boundary");
            (NatureKind::Bh, ExtNode::new(l.conj_part(b), b, c))
        }
    };
    let is_virtual = kind != NatureKind::A && node.is_virtual();
    (Nature { kind, is_virtual }, node)
}

/// Smallest content window outside of which every slot is virtual `Bv` (below) or `Bh` (above).
pub fn sufficient_window(bp: &Bipartition, charge: Charge) -> (i64, i64) {
    let lo = [1u8, 2]
        .iter()
        .map(|&c| charge.get(c) - bp.comp(c).len() as i64)
        .min()
        .unwrap();
    let hi = [1u8, 2]
        .iter()
        .map(|&c| charge.get(c) + bp.comp(c).part(1) as i64)
        .max()
        .unwrap();
    (lo, hi)
}

/// `[min(s) − n − 1, max(s) + n + 1]`, large enough for every bipartition of rank at most `n`.
pub fn default_window(n: usize, charge: Charge) -> (i64, i64) {
    let n = n as i64;
    (charge.s1.min(charge.s2) - n - 1, charge.s1.max(charge.s2) + n + 1)
}

fn check_window(bp: &Bipartition, charge: Charge, window: (i64, i64)) -> Result<()> {
    let (need_lo, need_hi) = sufficient_window(bp, charge);
    if window.0 > need_lo || window.1 < need_hi {
        return Err(Error::WindowTooSmall {
            lo: window.0,
            hi: window.1,
            need_lo,
            need_hi,
        });
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NatureCell {
    pub content: i64,
    pub comp: u8,
    pub nature: Nature,
    pub node: ExtNode,
}

/// Natures over a content window, listed by increasing content with component 2 first.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NatureTable {
    pub charge: Charge,
    pub lo: i64,
    pub hi: i64,
    pub cells: Vec<NatureCell>,
}

impl NatureTable {
    pub fn kinds(&self) -> Vec<NatureKind> {
        self.cells.iter().map(|c| c.nature.kind).collect()
    }

    pub fn cell(&self, content: i64, comp: u8) -> Option<&NatureCell> {
        self.cells.iter().find(|c| c.content == content && c.comp == comp)
    }
}

pub fn nature_table(bp: &Bipartition, charge: Charge, window: (i64, i64)) -> Result<NatureTable> {
    check_window(bp, charge, window)?;
    let mut cells = Vec::new();
    for j in window.0..=window.1 {
        for c in [2u8, 1] {
            let (nature, node) = nature_at(bp, charge, j, c);
            cells.push(NatureCell {
                content: j,
                comp: c,
                nature,
                node,
            });
        }
    }
    Ok(NatureTable {
        charge,
        lo: window.0,
        hi: window.1,
        cells,
    })
}

/// The addable and boundary `j`-nodes with content in `window`, increasing for `<_s`.
pub fn j_nodes(bp: &Bipartition, charge: Charge, e: Modulus, j: Residue, window: (i64, i64)) -> Vec<NatureCell> {
    let mut out = Vec::new();
    for content in window.0..=window.1 {
        if e.residue(content) != j {
            continue;
        }
        for c in [2u8, 1] {
            let (nature, node) = nature_at(bp, charge, content, c);
            out.push(NatureCell {
                content,
                comp: c,
                nature,
                node,
            });
        }
    }
    out
}

/// Renders one or more tables over the same window as aligned rows:
/// `Component`, `Content`, then one nature row per table.
pub fn render_tables(rows: &[(&str, &NatureTable)]) -> String {
    let Some((_, first)) = rows.first() else {
        return String::new();
    };
    let mut lines: Vec<Vec<String>> = vec![
        std::iter::once("Component".to_string())
            .chain(first.cells.iter().map(|c| c.comp.to_string()))
            .collect(),
        std::iter::once("Content".to_string())
            .chain(first.cells.iter().map(|c| c.content.to_string()))
            .collect(),
    ];
    for (label, t) in rows {
        lines.push(
            std::iter::once(label.to_string())
                .chain(t.cells.iter().map(|c| c.nature.kind.to_string()))
                .collect(),
        );
    }
    let cols = lines[0].len();
    let widths: Vec<usize> = (0..cols)
        .map(|i| lines.iter().map(|l| l.get(i).map_or(0, |s| s.chars().count())).max().unwrap())
        .collect();
    let mut out = String::new();
    for l in &lines {
        let cells: Vec<String> = l
            .iter()
            .enumerate()
            .map(|(i, s)| format!("{:>w$}", s, w = widths[i]))
            .collect();
        out.push_str(&cells.join(" | "));
        out.push('\n');
    }
    out
}

/// Vertical-boundary nodes in decreasing `<_s` order, truncated below at `lo`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundarySeq {
    pub charge: Charge,
    pub lo: i64,
    pub hi: i64,
    pub nodes: Vec<ExtNode>,
}

impl BoundarySeq {
    pub fn keys(&self) -> Vec<(i64, u8)> {
        self.nodes.iter().map(|n| node_key(n, self.charge)).collect()
    }
}

pub fn boundary_sequence(bp: &Bipartition, charge: Charge, window: (i64, i64)) -> Result<BoundarySeq> {
    check_window(bp, charge, window)?;
    Ok(boundary_unchecked(bp, charge, window))
}

fn boundary_unchecked(bp: &Bipartition, charge: Charge, window: (i64, i64)) -> BoundarySeq {
    let mut nodes = Vec::new();
    for c in [1u8, 2] {
        let l = bp.comp(c);
        let mut a = 1;
        loop {
            let n = ExtNode::new(a, l.part(a), c);
            let k = n.content(charge);
            if k < window.0 {
                break;
            }
            if k <= window.1 {
                nodes.push(n);
            }
            a += 1;
        }
    }
    nodes.sort_by_key(|x| std::cmp::Reverse(node_key(x, charge)));
    BoundarySeq {
        charge,
        lo: window.0,
        hi: window.1,
        nodes,
    }
}

/// The order `⪯_s` on bipartitions: boundary sequences compared position by position.
pub fn order_uglov(bp1: &Bipartition, bp2: &Bipartition, charge: Charge) -> Ordering {
    if bp1 == bp2 {
        return Ordering::Equal;
    }
    let (l1, h1) = sufficient_window(bp1, charge);
    let (l2, h2) = sufficient_window(bp2, charge);
    let w = (l1.min(l2), h1.max(h2));
    let k1 = boundary_unchecked(bp1, charge, w).keys();
    let k2 = boundary_unchecked(bp2, charge, w).keys();
    k1.cmp(&k2)
}

/// Lexicographic order on `λ¹` then `λ²`, parts compared with zero padding.
pub fn order_lex(bp1: &Bipartition, bp2: &Bipartition) -> Ordering {
    fn lex(p: &Partition, q: &Partition) -> Ordering {
        let n = p.len().max(q.len());
        (1..=n)
            .map(|i| p.part(i).cmp(&q.part(i)))
            .find(|o| *o != Ordering::Equal)
            .unwrap_or(Ordering::Equal)
    }
    lex(&bp1.c1, &bp2.c1).then_with(|| lex(&bp1.c2, &bp2.c2))
}

/// Checks that `⪯_s` and the lexicographic order agree on all pairs of rank `n`.
/// Requires `s1 − s2 > n − 1`.
pub fn orders_agree_asymptotic(n: usize, charge: Charge) -> Result<bool> {
    if charge.s1 - charge.s2 < n as i64 {
        return Err(Error::Precondition(format!(
            "need s1 - s2 > n - 1, got charge {charge} and n = {n}"
        )));
    }
    let all = Bipartition::all_of_rank(n);
    for x in &all {
        for y in &all {
            if order_uglov(x, y, charge) != order_lex(x, y) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
