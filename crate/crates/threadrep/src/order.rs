//! Order models for threads: the empty order, finite chains, and
//! rational-dense intervals standing in for real intervals or the real
//! line. Positions, intervals with open/closed endpoint flags, and the
//! common-refinement machinery live here.
//!
//! A dense model `Dense(lo, hi)` is the set of rationals strictly between
//! `lo` and `hi` (either may be infinite). Every representable datum in
//! this crate — breakpoints, interval endpoints, ideal thresholds — is
//! rational, and order-isomorphic dense linear orders give equivalent
//! categories of such representations, so rationals are a faithful proxy
//! for the reals here. Dedekind-cut intervals are not representable.

use crate::Error;
use num::bigint::BigInt;
use num::BigRational;
use std::cmp::Ordering;

pub type Rat = BigRational;

pub fn rat_int(n: i64) -> Rat {
    BigRational::from(BigInt::from(n))
}

pub fn rat(n: i64, d: i64) -> Rat {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// The totally ordered set attached to one arrow.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OrderModel {
    Empty,
    /// Points indexed 1..=n.
    Finite(usize),
    /// Rationals strictly between lo and hi; None = unbounded.
    Dense { lo: Option<Rat>, hi: Option<Rat> },
}

impl OrderModel {
    pub fn is_empty(&self) -> bool {
        matches!(self, OrderModel::Empty) || matches!(self, OrderModel::Finite(0))
    }

    /// Whether a coordinate is an inner point of this model.
    pub fn contains_coord(&self, c: &Rat) -> bool {
        match self {
            OrderModel::Empty => false,
            OrderModel::Finite(n) => {
                c.is_integer() && *c >= rat_int(1) && *c <= rat_int(*n as i64)
            }
            OrderModel::Dense { lo, hi } => {
                lo.as_ref().map_or(true, |l| c > l) && hi.as_ref().map_or(true, |h| c < h)
            }
        }
    }
}

/// A position in the closure of a thread: source, an inner coordinate, or
/// target. Totally ordered with Src < inner < Tgt.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ThreadPos {
    Src,
    In(Rat),
    Tgt,
}

impl ThreadPos {
    pub fn cmp_pos(&self, other: &ThreadPos) -> Ordering {
        use ThreadPos::*;
        match (self, other) {
            (Src, Src) | (Tgt, Tgt) => Ordering::Equal,
            (Src, _) => Ordering::Less,
            (_, Src) => Ordering::Greater,
            (Tgt, _) => Ordering::Greater,
            (_, Tgt) => Ordering::Less,
            (In(a), In(b)) => a.cmp(b),
        }
    }

    pub fn coord(&self) -> Option<&Rat> {
        match self {
            ThreadPos::In(c) => Some(c),
            _ => None,
        }
    }
}

/// Lower bound of an interval in a thread closure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LoBound {
    /// Interval contains the source vertex.
    Source,
    /// Unbounded below within an unbounded dense model.
    MinusInf,
    /// At a coordinate; `closed` tells whether the coordinate belongs.
    At(Rat, bool),
}

/// Upper bound of an interval in a thread closure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HiBound {
    Target,
    PlusInf,
    At(Rat, bool),
}

/// An interval in `P̄_α` with explicit endpoint flags. Nonemptiness is
/// relative to the model and is checked by [`Interval::is_nonempty`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Interval {
    pub lo: LoBound,
    pub hi: HiBound,
}

impl Interval {
    pub fn new(lo: LoBound, hi: HiBound) -> Interval {
        Interval { lo, hi }
    }

    pub fn full_closure() -> Interval {
        Interval { lo: LoBound::Source, hi: HiBound::Target }
    }

    pub fn point(c: Rat) -> Interval {
        Interval { lo: LoBound::At(c.clone(), true), hi: HiBound::At(c, true) }
    }

    pub fn touches_source(&self) -> bool {
        matches!(self.lo, LoBound::Source)
    }

    pub fn touches_target(&self) -> bool {
        matches!(self.hi, HiBound::Target)
    }

    /// Whether the interval contains a given position of the closure.
    pub fn contains(&self, pos: &ThreadPos, model: &OrderModel) -> bool {
        let lo_ok = match (&self.lo, pos) {
            (LoBound::Source, _) => true,
            (_, ThreadPos::Src) => false,
            (LoBound::MinusInf, _) => true,
            (LoBound::At(c, closed), ThreadPos::In(x)) => {
                if *closed {
                    x >= c
                } else {
                    x > c
                }
            }
            (LoBound::At(_, _), ThreadPos::Tgt) => true,
        };
        if !lo_ok {
            return false;
        }
        let hi_ok = match (&self.hi, pos) {
            (HiBound::Target, _) => true,
            (_, ThreadPos::Tgt) => false,
            (HiBound::PlusInf, _) => true,
            (HiBound::At(c, closed), ThreadPos::In(x)) => {
                if *closed {
                    x <= c
                } else {
                    x < c
                }
            }
            (HiBound::At(_, _), ThreadPos::Src) => true,
        };
        if !hi_ok {
            return false;
        }
        match pos {
            ThreadPos::In(x) => model.contains_coord(x),
            ThreadPos::Src | ThreadPos::Tgt => true,
        }
    }

    /// Nonemptiness relative to the model.
    pub fn is_nonempty(&self, model: &OrderModel) -> bool {
        match (&self.lo, &self.hi) {
            (LoBound::Source, _) => true, // contains the source vertex
            (_, HiBound::Target) => {
                // contains the target vertex unless lower bound exceeds it,
                // which cannot happen
                true
            }
            (LoBound::MinusInf, HiBound::PlusInf) => {
                matches!(model, OrderModel::Dense { lo: None, hi: None })
            }
            (LoBound::MinusInf, HiBound::At(c, closed)) => {
                (*closed && model.contains_coord(c)) || has_point_below(model, c)
            }
            (LoBound::At(c, closed), HiBound::PlusInf) => {
                (*closed && model.contains_coord(c)) || has_point_above(model, c)
            }
            (LoBound::At(a, ac), HiBound::At(b, bc)) => match a.cmp(b) {
                Ordering::Greater => false,
                Ordering::Equal => *ac && *bc && model.contains_coord(a),
                Ordering::Less => match model {
                    OrderModel::Empty => false,
                    OrderModel::Dense { .. } => {
                        // a < b dense: a point exists strictly between any
                        // two rationals inside the model range
                        let lo_att = *ac && model.contains_coord(a);
                        let hi_att = *bc && model.contains_coord(b);
                        lo_att || hi_att || dense_between_nonempty(model, a, b)
                    }
                    OrderModel::Finite(_) => {
                        // normalize flags to integers
                        let lo_i = int_ceil(a, *ac);
                        let hi_i = int_floor(b, *bc);
                        lo_i <= hi_i && model.contains_coord(&lo_i) || {
                            let lo_i = lo_i.max(rat_int(1));
                            lo_i <= hi_i && model.contains_coord(&lo_i)
                        }
                    }
                },
            },
        }
    }
}

fn has_point_below(model: &OrderModel, c: &Rat) -> bool {
    match model {
        OrderModel::Dense { lo, .. } => lo.as_ref().map_or(true, |l| l < c),
        OrderModel::Finite(n) => *n >= 1 && c > &rat_int(1),
        OrderModel::Empty => false,
    }
}

fn has_point_above(model: &OrderModel, c: &Rat) -> bool {
    match model {
        OrderModel::Dense { hi, .. } => hi.as_ref().map_or(true, |h| h > c),
        OrderModel::Finite(n) => *n >= 1 && c < &rat_int(*n as i64),
        OrderModel::Empty => false,
    }
}

fn dense_between_nonempty(model: &OrderModel, a: &Rat, b: &Rat) -> bool {
    // open interval (a, b) meets the model range?
    if let OrderModel::Dense { lo, hi } = model {
        let l = match lo {
            Some(l) => l.max(a).clone(),
            None => a.clone(),
        };
        let h = match hi {
            Some(h) => h.min(b).clone(),
            None => b.clone(),
        };
        l < h
    } else {
        false
    }
}

fn int_ceil(a: &Rat, closed: bool) -> Rat {
    if a.is_integer() {
        if closed {
            a.clone()
        } else {
            a + rat_int(1)
        }
    } else {
        a.ceil()
    }
}

fn int_floor(b: &Rat, closed: bool) -> Rat {
    if b.is_integer() {
        if closed {
            b.clone()
        } else {
            b - rat_int(1)
        }
    } else {
        b.floor()
    }
}

/// Two intervals have the same start when their lower bounds coincide as
/// (coordinate, flag) pairs; for rational-endpoint intervals this is the
/// germ condition.
pub fn same_start(a: &Interval, b: &Interval) -> bool {
    a.lo == b.lo
}

pub fn same_end(a: &Interval, b: &Interval) -> bool {
    a.hi == b.hi
}

/// Boundary between two consecutive cells, used to order and compare cell
/// endpoints during refinement. Represents the cut just after the cell.
#[derive(Debug, Clone, PartialEq, Eq)]
enum Cut {
    /// Cut at coordinate c; `below` = true means the cell ends just
    /// before c (c excluded), false means it ends at c (c included).
    At(Rat, bool),
    End,
}

fn upper_cut(iv: &Interval, model: &OrderModel) -> Cut {
    if iv.hi == hi_before_cut(&Cut::End, model) {
        return Cut::End;
    }
    match &iv.hi {
        HiBound::Target | HiBound::PlusInf => Cut::End,
        HiBound::At(c, closed) => Cut::At(c.clone(), !*closed),
    }
}

fn cut_cmp(a: &Cut, b: &Cut) -> Ordering {
    match (a, b) {
        (Cut::End, Cut::End) => Ordering::Equal,
        (Cut::End, _) => Ordering::Greater,
        (_, Cut::End) => Ordering::Less,
        (Cut::At(x, bx), Cut::At(y, by)) => x.cmp(y).then_with(|| {
            // cut-before-c precedes cut-at-c
            match (bx, by) {
                (true, false) => Ordering::Less,
                (false, true) => Ordering::Greater,
                _ => Ordering::Equal,
            }
        }),
    }
}

/// Lower bound immediately following a cut.
fn lo_after_cut(cut: &Cut) -> Option<LoBound> {
    match cut {
        Cut::End => None,
        Cut::At(c, true) => Some(LoBound::At(c.clone(), true)), // cell ended before c: next starts at c closed
        Cut::At(c, false) => Some(LoBound::At(c.clone(), false)), // cell ended at c: next starts after c
    }
}

fn hi_before_cut(cut: &Cut, model: &OrderModel) -> HiBound {
    match cut {
        Cut::End => match model {
            OrderModel::Dense { hi: Some(h), .. } => HiBound::At(h.clone(), false),
            OrderModel::Dense { hi: None, .. } => HiBound::PlusInf,
            OrderModel::Finite(n) => HiBound::At(rat_int(*n as i64), true),
            OrderModel::Empty => HiBound::PlusInf,
        },
        Cut::At(c, true) => HiBound::At(c.clone(), false),
        Cut::At(c, false) => HiBound::At(c.clone(), true),
    }
}

fn model_first_lo(model: &OrderModel) -> LoBound {
    match model {
        OrderModel::Dense { lo: Some(l), .. } => LoBound::At(l.clone(), false),
        OrderModel::Dense { lo: None, .. } => LoBound::MinusInf,
        OrderModel::Finite(_) => LoBound::At(rat_int(1), true),
        OrderModel::Empty => LoBound::MinusInf,
    }
}

/// Checks that `cells` is an ordered partition of the model into nonempty
/// intervals: consecutive bounds must match exactly, covering everything.
pub fn check_cell_partition(cells: &[Interval], model: &OrderModel) -> Result<(), Error> {
    if model.is_empty() {
        if cells.is_empty() {
            return Ok(());
        }
        return Err(Error::MalformedPartition);
    }
    if cells.is_empty() {
        return Err(Error::MalformedPartition);
    }
    if cells[0].lo != model_first_lo(model) {
        return Err(Error::MalformedPartition);
    }
    for c in cells {
        if c.touches_source() || c.touches_target() {
            return Err(Error::MalformedPartition);
        }
        if !c.is_nonempty(model) {
            return Err(Error::MalformedPartition);
        }
    }
    for w in cells.windows(2) {
        let cut = upper_cut(&w[0], model);
        match lo_after_cut(&cut) {
            Some(expected) => {
                if w[1].lo != expected {
                    return Err(Error::MalformedPartition);
                }
            }
            None => return Err(Error::MalformedPartition),
        }
    }
    if upper_cut(cells.last().unwrap(), model) != Cut::End {
        return Err(Error::MalformedPartition);
    }
    Ok(())
}

/// Common refinement of two cell partitions of the same model: ordered,
/// pairwise disjoint, covering.
pub fn refine_cells(
    cells1: &[Interval],
    cells2: &[Interval],
    model: &OrderModel,
) -> Result<Vec<Interval>, Error> {
    check_cell_partition(cells1, model)?;
    check_cell_partition(cells2, model)?;
    let mut cuts: Vec<Cut> = cells1
        .iter()
        .chain(cells2.iter())
        .map(|iv| upper_cut(iv, model))
        .filter(|c| *c != Cut::End)
        .collect();
    cuts.sort_by(cut_cmp);
    cuts.dedup();
    cuts.push(Cut::End);
    let mut out = Vec::with_capacity(cuts.len());
    let mut lo = model_first_lo(model);
    for cut in &cuts {
        let hi = hi_before_cut(cut, model);
        let iv = Interval::new(lo.clone(), hi);
        if iv.is_nonempty(model) {
            out.push(iv);
        }
        match lo_after_cut(cut) {
            Some(next) => lo = next,
            None => break,
        }
    }
    Ok(out)
}

/// Splits the cell containing coordinate `c` at `c`, producing a singleton
/// cell at `c` when `c` is interior. Cells not containing `c` are kept.
pub fn cut_at(cells: &[Interval], c: &Rat, model: &OrderModel) -> Vec<Interval> {
    if !model.contains_coord(c) {
        return cells.to_vec();
    }
    let mut out = Vec::with_capacity(cells.len() + 2);
    for cell in cells {
        if !cell.contains(&ThreadPos::In(c.clone()), model) {
            out.push(cell.clone());
            continue;
        }
        let before = Interval::new(cell.lo.clone(), HiBound::At(c.clone(), false));
        let point = Interval::point(c.clone());
        let after = Interval::new(LoBound::At(c.clone(), false), cell.hi.clone());
        if before.is_nonempty(model) {
            out.push(before);
        }
        out.push(point);
        if after.is_nonempty(model) {
            out.push(after);
        }
    }
    out
}

/// Deterministic sample point of a cell: midpoint for bounded dense cells,
/// endpoint±1 for unbounded ones, the point for singletons, the median
/// index for finite chains.
pub fn sample_point(cell: &Interval, model: &OrderModel) -> Rat {
    match model {
        OrderModel::Finite(_) => {
            let lo = match &cell.lo {
                LoBound::At(c, closed) => int_ceil(c, *closed),
                _ => rat_int(1),
            };
            let hi = match &cell.hi {
                HiBound::At(c, closed) => int_floor(c, *closed),
                _ => unreachable!("finite cells are bounded"),
            };
            // median index
            let two = rat_int(2);
            ((lo + hi) / two).floor()
        }
        OrderModel::Dense { lo: mlo, hi: mhi } => {
            let lo = match &cell.lo {
                LoBound::At(c, closed) => Some((c.clone(), *closed)),
                LoBound::MinusInf => None,
                LoBound::Source => mlo.clone().map(|c| (c, false)),
            };
            let hi = match &cell.hi {
                HiBound::At(c, closed) => Some((c.clone(), *closed)),
                HiBound::PlusInf => None,
                HiBound::Target => mhi.clone().map(|c| (c, false)),
            };
            match (lo, hi) {
                (Some((a, ac)), Some((b, _bc))) => {
                    if a == b {
                        debug_assert!(ac);
                        a
                    } else {
                        (a + b) / rat_int(2)
                    }
                }
                (Some((a, _)), None) => a + rat_int(1),
                (None, Some((b, _))) => b - rat_int(1),
                (None, None) => rat_int(0),
            }
        }
        OrderModel::Empty => unreachable!("no cells in an empty model"),
    }
}

/// One full-thread cell covering the whole model.
pub fn whole_model_cell(model: &OrderModel) -> Option<Interval> {
    if model.is_empty() {
        return None;
    }
    let lo = model_first_lo(model);
    let hi = hi_before_cut(&Cut::End, model);
    Some(Interval::new(lo, hi))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dense01() -> OrderModel {
        OrderModel::Dense { lo: Some(rat_int(0)), hi: Some(rat_int(1)) }
    }

    #[test]
    fn position_order() {
        assert_eq!(ThreadPos::Src.cmp_pos(&ThreadPos::In(rat(1, 2))), Ordering::Less);
        assert_eq!(ThreadPos::In(rat(1, 3)).cmp_pos(&ThreadPos::In(rat(1, 3))), Ordering::Equal);
        assert_eq!(ThreadPos::Tgt.cmp_pos(&ThreadPos::In(rat(99, 1))), Ordering::Greater);
    }

    #[test]
    fn contains_honors_flags() {
        let m = dense01();
        // (1/4, 3/4]
        let iv = Interval::new(LoBound::At(rat(1, 4), false), HiBound::At(rat(3, 4), true));
        assert!(iv.contains(&ThreadPos::In(rat(3, 4)), &m));
        assert!(!iv.contains(&ThreadPos::In(rat(1, 4)), &m));
        assert!(iv.contains(&ThreadPos::In(rat(1, 2)), &m));
        // lower bound at source includes the source vertex
        let iv2 = Interval::new(LoBound::Source, HiBound::At(rat(1, 2), false));
        assert!(iv2.contains(&ThreadPos::Src, &m));
        assert!(!iv2.contains(&ThreadPos::In(rat(1, 2)), &m));
    }

    #[test]
    fn same_start_examples() {
        let a = Interval::new(LoBound::At(rat(1, 2), true), HiBound::At(rat_int(1), false));
        let b = Interval::new(LoBound::At(rat(1, 2), true), HiBound::At(rat(3, 4), false));
        assert!(same_start(&a, &b));
        let c = Interval::new(LoBound::At(rat(1, 2), false), HiBound::At(rat_int(1), true));
        let d = Interval::new(LoBound::At(rat(1, 2), true), HiBound::At(rat_int(1), true));
        assert!(!same_start(&c, &d));
        let e = Interval::new(LoBound::At(rat_int(0), false), HiBound::At(rat(1, 2), true));
        let f = Interval::new(LoBound::At(rat_int(0), false), HiBound::At(rat(3, 4), false));
        assert!(same_start(&e, &f));
    }

    #[test]
    fn refine_examples() {
        let m = dense01();
        let whole = vec![whole_model_cell(&m).unwrap()];
        assert_eq!(refine_cells(&whole, &whole, &m).unwrap(), whole);

        // {(0,1/2], (1/2,1)} with {(0,1/4], (1/4,1)} -> three cells
        let p1 = vec![
            Interval::new(LoBound::At(rat_int(0), false), HiBound::At(rat(1, 2), true)),
            Interval::new(LoBound::At(rat(1, 2), false), HiBound::At(rat_int(1), false)),
        ];
        let p2 = vec![
            Interval::new(LoBound::At(rat_int(0), false), HiBound::At(rat(1, 4), true)),
            Interval::new(LoBound::At(rat(1, 4), false), HiBound::At(rat_int(1), false)),
        ];
        let r = refine_cells(&p1, &p2, &m).unwrap();
        assert_eq!(
            r,
            vec![
                Interval::new(LoBound::At(rat_int(0), false), HiBound::At(rat(1, 4), true)),
                Interval::new(LoBound::At(rat(1, 4), false), HiBound::At(rat(1, 2), true)),
                Interval::new(LoBound::At(rat(1, 2), false), HiBound::At(rat_int(1), false)),
            ]
        );

        // refinement of coarse by fine returns the fine partition
        let fine = vec![
            Interval::new(LoBound::At(rat_int(0), false), HiBound::At(rat(1, 3), false)),
            Interval::new(LoBound::At(rat(1, 3), true), HiBound::At(rat_int(1), false)),
        ];
        assert_eq!(refine_cells(&whole, &fine, &m).unwrap(), fine);
    }

    #[test]
    fn refine_rejects_malformed() {
        let m = dense01();
        // gap between cells
        let bad = vec![
            Interval::new(LoBound::At(rat_int(0), false), HiBound::At(rat(1, 4), false)),
            Interval::new(LoBound::At(rat(1, 2), false), HiBound::At(rat_int(1), false)),
        ];
        let whole = vec![whole_model_cell(&m).unwrap()];
        assert!(matches!(refine_cells(&bad, &whole, &m), Err(Error::MalformedPartition)));
        // overlap
        let bad2 = vec![
            Interval::new(LoBound::At(rat_int(0), false), HiBound::At(rat(1, 2), true)),
            Interval::new(LoBound::At(rat(1, 4), false), HiBound::At(rat_int(1), false)),
        ];
        assert!(matches!(refine_cells(&bad2, &whole, &m), Err(Error::MalformedPartition)));
    }

    #[test]
    fn sampling_rules() {
        let m = OrderModel::Dense { lo: None, hi: None };
        let c1 = Interval::new(LoBound::At(rat_int(0), false), HiBound::At(rat_int(2), true));
        assert_eq!(sample_point(&c1, &m), rat_int(1));
        let c2 = Interval::new(LoBound::MinusInf, HiBound::At(rat_int(0), true));
        assert_eq!(sample_point(&c2, &m), rat_int(-1));
        let c3 = Interval::new(LoBound::At(rat_int(0), false), HiBound::PlusInf);
        assert_eq!(sample_point(&c3, &m), rat_int(1));
        let c4 = Interval::point(rat(1, 2));
        assert_eq!(sample_point(&c4, &dense01()), rat(1, 2));
        let fin = OrderModel::Finite(5);
        let c5 = Interval::new(LoBound::At(rat_int(1), true), HiBound::At(rat_int(5), true));
        assert_eq!(sample_point(&c5, &fin), rat_int(3));
    }

    #[test]
    fn cut_produces_singleton() {
        let m = dense01();
        let whole = vec![whole_model_cell(&m).unwrap()];
        let cells = cut_at(&whole, &rat(1, 2), &m);
        assert_eq!(cells.len(), 3);
        assert_eq!(cells[1], Interval::point(rat(1, 2)));
        check_cell_partition(&cells, &m).unwrap();
        // cutting at a boundary coordinate that is not inner is a no-op
        let cells2 = cut_at(&whole, &rat_int(0), &m);
        assert_eq!(cells2, whole);
    }
}
