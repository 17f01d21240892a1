//! Virtual knot and link diagrams as signed Gauss codes.
//!
//! Only classical crossings are stored. Each component is a cyclic list of
//! passages; arc `k` is the gap after the `k`-th passage in component-major
//! order, so every passage has an incoming and an outgoing arc.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

pub type CrossingId = u32;
pub type ArcId = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DiagramError {
    #[error("Gauss code parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("crossing {0} is not visited exactly once over and once under")]
    Pairing(CrossingId),
    #[error("crossing {0} has inconsistent signs")]
    SignMismatch(CrossingId),
    #[error("diagram has a component without classical crossings")]
    EmptyComponent,
    #[error("unknown crossing {0}")]
    UnknownCrossing(CrossingId),
    #[error("unknown arc {0}")]
    UnknownArc(ArcId),
    #[error("expected a knot, found {0} components")]
    NotAKnot(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Strand {
    Over,
    Under,
}

impl Strand {
    pub fn flip(self) -> Strand {
        match self {
            Strand::Over => Strand::Under,
            Strand::Under => Strand::Over,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn of(x: i64) -> Sign {
        if x < 0 {
            Sign::Negative
        } else {
            Sign::Positive
        }
    }

    pub fn value(self) -> i64 {
        match self {
            Sign::Positive => 1,
            Sign::Negative => -1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }

    fn symbol(self) -> char {
        match self {
            Sign::Positive => '+',
            Sign::Negative => '-',
        }
    }
}

/// One visit of a strand through a classical crossing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Passage {
    pub crossing: CrossingId,
    pub strand: Strand,
}

impl Passage {
    pub fn over(crossing: CrossingId) -> Self {
        Passage { crossing, strand: Strand::Over }
    }

    pub fn under(crossing: CrossingId) -> Self {
        Passage { crossing, strand: Strand::Under }
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Diagram {
    components: Vec<Vec<Passage>>,
    signs: BTreeMap<CrossingId, Sign>,
}

/// Arc roles at one crossing.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CrossingIncidence {
    pub crossing: CrossingId,
    pub sign: Sign,
    pub in_over: ArcId,
    pub out_over: ArcId,
    pub in_under: ArcId,
    pub out_under: ArcId,
}

/// Arc numbering of a diagram.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArcTable {
    /// `(component, position)` of the passage each arc leaves from, indexed by `arc - 1`.
    tails: Vec<(usize, usize)>,
    /// First arc id of each component.
    offsets: Vec<usize>,
    lens: Vec<usize>,
}

impl ArcTable {
    pub fn len(&self) -> usize {
        self.tails.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tails.is_empty()
    }

    /// Arc leaving the passage at `(component, position)`.
    pub fn out_arc(&self, comp: usize, pos: usize) -> ArcId {
        self.offsets[comp] + pos + 1
    }

    /// Arc entering the passage at `(component, position)`.
    pub fn in_arc(&self, comp: usize, pos: usize) -> ArcId {
        let len = self.lens[comp];
        self.out_arc(comp, (pos + len - 1) % len)
    }

    /// `(component, position)` of the passage the arc leaves from.
    pub fn tail(&self, arc: ArcId) -> (usize, usize) {
        self.tails[arc - 1]
    }

    /// `(component, position)` of the passage the arc runs into.
    pub fn head(&self, arc: ArcId) -> (usize, usize) {
        let (c, p) = self.tail(arc);
        (c, (p + 1) % self.lens[c])
    }
}

/// Column order of the Alexander matrix: `order[k]` is the arc in column `k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArcLabeling {
    order: Vec<ArcId>,
}

impl ArcLabeling {
    /// Columns in arc-id order.
    pub fn traversal(arcs: usize) -> Self {
        ArcLabeling { order: (1..=arcs).collect() }
    }

    /// Panics unless `order` is a permutation of `1..=order.len()`.
    pub fn from_order(order: Vec<ArcId>) -> Self {
        let mut seen = vec![false; order.len()];
        for &a in &order {
            assert!(a >= 1 && a <= order.len() && !seen[a - 1], "not a permutation of arcs: {order:?}");
            seen[a - 1] = true;
        }
        ArcLabeling { order }
    }

    pub fn order(&self) -> &[ArcId] {
        &self.order
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    /// Column index of each arc, indexed by `arc - 1`.
    pub fn columns(&self) -> Vec<usize> {
        let mut col = vec![0; self.order.len()];
        for (k, &a) in self.order.iter().enumerate() {
            col[a - 1] = k;
        }
        col
    }
}

/// Reidemeister I kinks, named by the factor they contribute to Δ₀ under
/// traversal labeling: Ia and Ib multiply by `uv`, Ic and Id by `-1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum KinkKind {
    /// positive, over on the first passage
    Ia,
    /// negative, over on the second passage
    Ib,
    /// negative, over on the first passage
    Ic,
    /// positive, over on the second passage
    Id,
}

impl KinkKind {
    pub const ALL: [KinkKind; 4] = [KinkKind::Ia, KinkKind::Ib, KinkKind::Ic, KinkKind::Id];

    pub fn sign(self) -> Sign {
        match self {
            KinkKind::Ia | KinkKind::Id => Sign::Positive,
            KinkKind::Ib | KinkKind::Ic => Sign::Negative,
        }
    }

    pub fn over_first(self) -> bool {
        matches!(self, KinkKind::Ia | KinkKind::Ic)
    }
}

/// Reidemeister II bigon shapes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BigonKind {
    /// both strands run the same way through the bigon
    pub parallel: bool,
    /// sign of the first crossing met by the over strand
    pub first: Sign,
}

impl BigonKind {
    pub const ALL: [BigonKind; 4] = [
        BigonKind { parallel: true, first: Sign::Positive },
        BigonKind { parallel: true, first: Sign::Negative },
        BigonKind { parallel: false, first: Sign::Positive },
        BigonKind { parallel: false, first: Sign::Negative },
    ];
}

/// The diagrams of a skein triple with the shared arc labeling.
#[derive(Debug, Clone)]
pub struct SkeinTriple {
    pub plus: Diagram,
    pub minus: Diagram,
    pub zero: Diagram,
    pub plus_labeling: ArcLabeling,
    pub zero_labeling: ArcLabeling,
}

/// A Reidemeister II insertion with labelings for both sides.
#[derive(Debug, Clone)]
pub struct BigonMove {
    pub before_labeling: ArcLabeling,
    pub after: Diagram,
    pub after_labeling: ArcLabeling,
    pub crossings: (CrossingId, CrossingId),
}

impl Diagram {
    /// Validates pairing, signs and nonempty components.
    pub fn new(components: Vec<Vec<Passage>>, signs: BTreeMap<CrossingId, Sign>) -> Result<Self, DiagramError> {
        if components.is_empty() || components.iter().any(|c| c.is_empty()) {
            return Err(DiagramError::EmptyComponent);
        }
        let mut seen: BTreeMap<CrossingId, (u8, u8)> = BTreeMap::new();
        for p in components.iter().flatten() {
            let e = seen.entry(p.crossing).or_default();
            match p.strand {
                Strand::Over => e.0 += 1,
                Strand::Under => e.1 += 1,
            }
        }
        for (&id, &(o, u)) in &seen {
            if o != 1 || u != 1 {
                return Err(DiagramError::Pairing(id));
            }
            if !signs.contains_key(&id) {
                return Err(DiagramError::SignMismatch(id));
            }
        }
        if let Some(&id) = signs.keys().find(|id| !seen.contains_key(id)) {
            return Err(DiagramError::UnknownCrossing(id));
        }
        Ok(Diagram { components, signs })
    }

    pub fn components(&self) -> &[Vec<Passage>] {
        &self.components
    }

    pub fn component_count(&self) -> usize {
        self.components.len()
    }

    pub fn is_knot(&self) -> bool {
        self.components.len() == 1
    }

    pub fn crossing_count(&self) -> usize {
        self.signs.len()
    }

    pub fn crossings(&self) -> impl Iterator<Item = CrossingId> + '_ {
        self.signs.keys().copied()
    }

    pub fn signs(&self) -> &BTreeMap<CrossingId, Sign> {
        &self.signs
    }

    pub fn sign(&self, id: CrossingId) -> Option<Sign> {
        self.signs.get(&id).copied()
    }

    pub fn arc_count(&self) -> usize {
        2 * self.signs.len()
    }

    fn require(&self, id: CrossingId) -> Result<(), DiagramError> {
        if self.signs.contains_key(&id) {
            Ok(())
        } else {
            Err(DiagramError::UnknownCrossing(id))
        }
    }

    /// `(component, position)` of a passage.
    pub fn locate(&self, p: Passage) -> Option<(usize, usize)> {
        self.components.iter().enumerate().find_map(|(c, comp)| comp.iter().position(|q| *q == p).map(|i| (c, i)))
    }

    pub fn passage_at(&self, at: (usize, usize)) -> Passage {
        self.components[at.0][at.1]
    }

    pub fn arc_table(&self) -> ArcTable {
        let mut tails = Vec::new();
        let mut offsets = Vec::new();
        let mut lens = Vec::new();
        for (c, comp) in self.components.iter().enumerate() {
            offsets.push(tails.len());
            lens.push(comp.len());
            tails.extend((0..comp.len()).map(|i| (c, i)));
        }
        ArcTable { tails, offsets, lens }
    }

    /// Arc table plus per-crossing roles, ordered by crossing id.
    pub fn derive_incidence(&self) -> (ArcTable, Vec<CrossingIncidence>) {
        let table = self.arc_table();
        let mut roles: BTreeMap<CrossingId, [ArcId; 4]> = BTreeMap::new();
        for (c, comp) in self.components.iter().enumerate() {
            for (i, p) in comp.iter().enumerate() {
                let r = roles.entry(p.crossing).or_default();
                let (inn, out) = (table.in_arc(c, i), table.out_arc(c, i));
                match p.strand {
                    Strand::Over => {
                        r[0] = inn;
                        r[1] = out;
                    }
                    Strand::Under => {
                        r[2] = inn;
                        r[3] = out;
                    }
                }
            }
        }
        let inc = roles
            .into_iter()
            .map(|(id, r)| CrossingIncidence {
                crossing: id,
                sign: self.signs[&id],
                in_over: r[0],
                out_over: r[1],
                in_under: r[2],
                out_under: r[3],
            })
            .collect();
        (table, inc)
    }

    pub fn switch_crossing(&self, id: CrossingId) -> Result<Diagram, DiagramError> {
        self.require(id)?;
        let mut d = self.clone();
        for p in d.components.iter_mut().flatten() {
            if p.crossing == id {
                p.strand = p.strand.flip();
            }
        }
        let s = d.signs.get_mut(&id).unwrap();
        *s = s.flip();
        Ok(d)
    }

    /// Switches every crossing.
    pub fn mirror_all(&self) -> Diagram {
        let mut d = self.clone();
        for p in d.components.iter_mut().flatten() {
            p.strand = p.strand.flip();
        }
        for s in d.signs.values_mut() {
            *s = s.flip();
        }
        d
    }

    /// Reverses every component. Over/under flags and signs are unchanged.
    pub fn reverse_orientation(&self) -> Diagram {
        let mut d = self.clone();
        for comp in &mut d.components {
            comp.reverse();
        }
        d
    }

    /// Oriented smoothing of one crossing.
    ///
    /// The strand entering the first visit continues after the second visit.
    /// A self-crossing splits its component in two; a crossing between two
    /// components merges them into the lower-indexed slot.
    pub fn smooth_crossing(&self, id: CrossingId) -> Result<Diagram, DiagramError> {
        self.require(id)?;
        let a = self.locate(Passage::over(id)).unwrap();
        let b = self.locate(Passage::under(id)).unwrap();
        let mut comps = self.components.clone();
        if a.0 == b.0 {
            let c = a.0;
            let (p, q) = (a.1.min(b.1), a.1.max(b.1));
            let s = &self.components[c];
            let mut rest: Vec<Passage> = s[..p].to_vec();
            rest.extend_from_slice(&s[q + 1..]);
            let inner = s[p + 1..q].to_vec();
            if rest.is_empty() || inner.is_empty() {
                return Err(DiagramError::EmptyComponent);
            }
            comps[c] = rest;
            comps.insert(c + 1, inner);
        } else {
            let ((i, p), (j, q)) = if a.0 < b.0 { (a, b) } else { (b, a) };
            let (ci, cj) = (&self.components[i], &self.components[j]);
            let mut merged: Vec<Passage> = ci[..p].to_vec();
            merged.extend_from_slice(&cj[q + 1..]);
            merged.extend_from_slice(&cj[..q]);
            merged.extend_from_slice(&ci[p + 1..]);
            if merged.is_empty() {
                return Err(DiagramError::EmptyComponent);
            }
            comps[i] = merged;
            comps.remove(j);
        }
        let mut signs = self.signs.clone();
        signs.remove(&id);
        Diagram::new(comps, signs)
    }

    fn next_id(&self) -> CrossingId {
        self.signs.keys().next_back().map_or(1, |k| k + 1)
    }

    /// Inserts a one-crossing kink on `arc`. The new crossing gets the next free id.
    pub fn add_kink(&self, arc: ArcId, kind: KinkKind) -> Result<Diagram, DiagramError> {
        if arc == 0 || arc > self.arc_count() {
            return Err(DiagramError::UnknownArc(arc));
        }
        let (c, pos) = self.arc_table().tail(arc);
        let id = self.next_id();
        let (first, second) = if kind.over_first() {
            (Passage::over(id), Passage::under(id))
        } else {
            (Passage::under(id), Passage::over(id))
        };
        let mut d = self.clone();
        d.components[c].splice(pos + 1..pos + 1, [first, second]);
        d.signs.insert(id, kind.sign());
        Ok(d)
    }

    /// Inserts a Reidemeister II bigon: `over_arc` passes over `under_arc` twice.
    ///
    /// Returns the new diagram and the ids `(x, y)` of the two crossings, `x`
    /// being the first one met along the over strand.
    pub fn insert_bigon(
        &self,
        over_arc: ArcId,
        under_arc: ArcId,
        kind: BigonKind,
    ) -> Result<(Diagram, CrossingId, CrossingId), DiagramError> {
        for a in [over_arc, under_arc] {
            if a == 0 || a > self.arc_count() {
                return Err(DiagramError::UnknownArc(a));
            }
        }
        let table = self.arc_table();
        let x = self.next_id();
        let y = x + 1;
        let under =
            if kind.parallel { [Passage::under(x), Passage::under(y)] } else { [Passage::under(y), Passage::under(x)] };
        let mut d = self.clone();
        let (oc, op) = table.tail(over_arc);
        let (uc, up) = table.tail(under_arc);
        // insert at the later position first so the earlier index stays valid
        if (uc, up) > (oc, op) {
            d.components[uc].splice(up + 1..up + 1, under);
            d.components[oc].splice(op + 1..op + 1, [Passage::over(x), Passage::over(y)]);
        } else {
            d.components[oc].splice(op + 1..op + 1, [Passage::over(x), Passage::over(y)]);
            d.components[uc].splice(up + 1..up + 1, under);
        }
        d.signs.insert(x, kind.first);
        d.signs.insert(y, kind.first.flip());
        Ok((d, x, y))
    }

    /// Bigon insertion with matching labelings of both diagrams.
    ///
    /// Before: the over arc, the under arc, then the rest in traversal order.
    /// After: the three pieces of the over arc in traversal order as columns
    /// 1, 3, 5; the pieces of the under arc as 2, 4, 6, running backwards
    /// along the under strand when the strands are antiparallel; then the rest.
    pub fn bigon_move(&self, over_arc: ArcId, under_arc: ArcId, kind: BigonKind) -> Result<BigonMove, DiagramError> {
        if over_arc == under_arc {
            return Err(DiagramError::UnknownArc(under_arc));
        }
        let (after, x, y) = self.insert_bigon(over_arc, under_arc, kind)?;
        let table = self.arc_table();
        let new_table = after.arc_table();
        let head_of = |p: Passage| (1..=after.arc_count()).find(|&a| after.passage_at(new_table.head(a)) == p).unwrap();
        let tail_of = |p: Passage| (1..=after.arc_count()).find(|&a| after.passage_at(new_table.tail(a)) == p).unwrap();
        let (u1, u2) = if kind.parallel { (x, y) } else { (y, x) };
        let over = [head_of(Passage::over(x)), head_of(Passage::over(y)), tail_of(Passage::over(y))];
        let mut under = [head_of(Passage::under(u1)), head_of(Passage::under(u2)), tail_of(Passage::under(u2))];
        if !kind.parallel {
            under.reverse();
        }
        let rest: Vec<ArcId> = (1..=self.arc_count()).filter(|&a| a != over_arc && a != under_arc).collect();
        let mut before = vec![over_arc, under_arc];
        before.extend(&rest);
        let mut order = vec![over[0], under[0], over[1], under[1], over[2], under[2]];
        order.extend(rest.iter().map(|&a| head_of(self.passage_at(table.head(a)))));
        Ok(BigonMove {
            before_labeling: ArcLabeling::from_order(before),
            after,
            after_labeling: ArcLabeling::from_order(order),
            crossings: (x, y),
        })
    }

    /// Skein triple at `id` with the labeling under which
    /// `Δ₀(L₊) − Δ₀(L₋) = (uv − 1)·Δ₀(L₀)` holds exactly.
    ///
    /// L₊ and L₋ put the arcs (in-under, out-over, out-under, in-over) of the
    /// positive crossing first, then the rest in traversal order. L₀ inherits
    /// that order through the arcs it merges.
    pub fn skein_triple(&self, id: CrossingId) -> Result<SkeinTriple, DiagramError> {
        self.require(id)?;
        let plus = match self.signs[&id] {
            Sign::Positive => self.clone(),
            Sign::Negative => self.switch_crossing(id)?,
        };
        let minus = plus.switch_crossing(id)?;
        let zero = plus.smooth_crossing(id)?;
        let (_, inc) = plus.derive_incidence();
        let ci = inc.iter().find(|c| c.crossing == id).unwrap();
        let mut order = vec![ci.in_under, ci.out_over, ci.out_under, ci.in_over];
        order.extend(1..=plus.arc_count());
        let order = dedup(order);
        let zero_labeling = induced_labeling(&plus, &order, &zero, id);
        Ok(SkeinTriple { plus, minus, zero, plus_labeling: ArcLabeling::from_order(order), zero_labeling })
    }

    /// Sum of the signs of odd crossings.
    pub fn odd_writhe(&self) -> Result<i64, DiagramError> {
        if !self.is_knot() {
            return Err(DiagramError::NotAKnot(self.components.len()));
        }
        let comp = &self.components[0];
        let mut first: HashMap<CrossingId, usize> = HashMap::new();
        let mut ow = 0;
        for (i, p) in comp.iter().enumerate() {
            if let Some(j) = first.insert(p.crossing, i) {
                if (i - j - 1) % 2 == 1 {
                    ow += self.signs[&p.crossing].value();
                }
            }
        }
        Ok(ow)
    }

    /// Renumbers crossings 1..n in order of first appearance.
    pub fn canonical_ids(&self) -> Diagram {
        let mut map: BTreeMap<CrossingId, CrossingId> = BTreeMap::new();
        for p in self.components.iter().flatten() {
            let next = map.len() as CrossingId + 1;
            map.entry(p.crossing).or_insert(next);
        }
        let components = self
            .components
            .iter()
            .map(|c| c.iter().map(|p| Passage { crossing: map[&p.crossing], strand: p.strand }).collect())
            .collect();
        let signs = self.signs.iter().map(|(k, s)| (map[k], *s)).collect();
        Diagram { components, signs }
    }
}

fn dedup(order: Vec<ArcId>) -> Vec<ArcId> {
    let mut seen = BTreeSet::new();
    order.into_iter().filter(|a| seen.insert(*a)).collect()
}

/// Carries an arc order of `orig` over to `smoothed = orig.smooth_crossing(id)`.
///
/// Arcs are matched through the passage they run into. The two arcs running
/// into the deleted passages continue to the passage after the other visit;
/// merged arcs keep the slot of their first occurrence.
pub fn induced_labeling(orig: &Diagram, order: &[ArcId], smoothed: &Diagram, id: CrossingId) -> ArcLabeling {
    let table = orig.arc_table();
    let after = |p: Passage| {
        let (c, i) = orig.locate(p).unwrap();
        orig.components[c][(i + 1) % orig.components[c].len()]
    };
    let after_over = after(Passage::over(id));
    let after_under = after(Passage::under(id));
    let new_table = smoothed.arc_table();
    let mut arc_into: HashMap<Passage, ArcId> = HashMap::new();
    for a in 1..=smoothed.arc_count() {
        arc_into.insert(smoothed.passage_at(new_table.head(a)), a);
    }
    let mapped: Vec<ArcId> = order
        .iter()
        .map(|&a| {
            let mut head = orig.passage_at(table.head(a));
            if head == Passage::under(id) {
                head = after_over;
            } else if head == Passage::over(id) {
                head = after_under;
            }
            arc_into[&head]
        })
        .collect();
    ArcLabeling::from_order(dedup(mapped))
}

impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, comp) in self.components.iter().enumerate() {
            if k > 0 {
                f.write_str(";")?;
            }
            for p in comp {
                let s = match p.strand {
                    Strand::Over => 'O',
                    Strand::Under => 'U',
                };
                write!(f, "{s}{}{}", p.crossing, self.signs[&p.crossing].symbol())?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Diagram({self})")
    }
}

impl FromStr for Diagram {
    type Err = DiagramError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_gauss(s)
    }
}

/// Parses a signed Gauss code such as `O1+U2+U1+O2+`; components are separated by `;`.
pub fn parse_gauss(text: &str) -> Result<Diagram, DiagramError> {
    let err = |pos: usize, msg: &str| DiagramError::Parse { pos, msg: msg.to_string() };
    let bytes = text.as_bytes();
    let mut components: Vec<Vec<Passage>> = vec![Vec::new()];
    let mut signs: BTreeMap<CrossingId, Sign> = BTreeMap::new();
    let mut i = 0;
    while i < bytes.len() {
        let b = bytes[i];
        if b.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        if b == b';' {
            components.push(Vec::new());
            i += 1;
            continue;
        }
        let strand = match b {
            b'O' | b'o' => Strand::Over,
            b'U' | b'u' => Strand::Under,
            _ => return Err(err(i, "expected 'O' or 'U'")),
        };
        i += 1;
        let digits = i;
        while i < bytes.len() && bytes[i].is_ascii_digit() {
            i += 1;
        }
        if i == digits {
            return Err(err(i, "expected crossing number"));
        }
        let id: CrossingId = text[digits..i].parse().map_err(|_| err(digits, "crossing number out of range"))?;
        if id == 0 {
            return Err(err(digits, "crossing numbers start at 1"));
        }
        let sign = match bytes.get(i) {
            Some(b'+') => Sign::Positive,
            Some(b'-') => Sign::Negative,
            _ => return Err(err(i, "expected '+' or '-'")),
        };
        i += 1;
        if let Some(prev) = signs.insert(id, sign) {
            if prev != sign {
                return Err(DiagramError::SignMismatch(id));
            }
        }
        components.last_mut().unwrap().push(Passage { crossing: id, strand });
    }
    if components.len() == 1 && components[0].is_empty() {
        return Err(err(0, "empty Gauss code"));
    }
    Diagram::new(components, signs)
}

pub fn format_gauss(d: &Diagram) -> String {
    d.to_string()
}
