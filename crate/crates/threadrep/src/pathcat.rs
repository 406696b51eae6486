//! The path category of a thread quiver: objects are vertices and inner
//! thread points, morphisms are spanned by path-like elements
//! η_{y,s(β)} · p · η_{t(α),x}. Composition concatenates routes and merges
//! within-thread segments; threaded loops are rewritten into two-cycles at
//! load time, so surviving loops carry empty threads.

use crate::order::{rat_int, sample_point, whole_model_cell, OrderModel, Rat, ThreadPos};
use crate::scalar::{FieldCtx, Scalar};
use crate::Error;
use std::collections::BTreeMap;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(pub usize);

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ArrowId(pub usize);

#[derive(Debug, Clone)]
pub struct Arrow {
    pub name: String,
    pub src: VertexId,
    pub tgt: VertexId,
    pub thread: OrderModel,
}

/// A finite quiver with a totally ordered thread on each arrow.
#[derive(Debug, Clone)]
pub struct ThreadQuiver {
    pub vertices: Vec<String>,
    pub arrows: Vec<Arrow>,
}

impl ThreadQuiver {
    /// Builds a quiver, rewriting every nonempty-threaded loop into a
    /// two-cycle through a fresh vertex at the thread's sample point.
    pub fn new(vertices: Vec<String>, arrows: Vec<Arrow>) -> ThreadQuiver {
        let mut q = ThreadQuiver { vertices, arrows: Vec::new() };
        for a in arrows {
            if a.src == a.tgt && !a.thread.is_empty() {
                q.rewrite_loop(a);
            } else {
                q.arrows.push(a);
            }
        }
        q
    }

    fn rewrite_loop(&mut self, a: Arrow) {
        let cell = whole_model_cell(&a.thread).expect("nonempty thread");
        let x = sample_point(&cell, &a.thread);
        let new_v = VertexId(self.vertices.len());
        self.vertices.push(format!("{}@{}", a.name, x));
        let (lower, upper) = split_model_at(&a.thread, &x);
        self.arrows.push(Arrow {
            name: format!("{}#1", a.name),
            src: a.src,
            tgt: new_v,
            thread: lower,
        });
        self.arrows.push(Arrow {
            name: format!("{}#2", a.name),
            src: new_v,
            tgt: a.tgt,
            thread: upper,
        });
    }

    pub fn arrow(&self, a: ArrowId) -> &Arrow {
        &self.arrows[a.0]
    }

    pub fn vertex_name(&self, v: VertexId) -> &str {
        &self.vertices[v.0]
    }

    pub fn vertex_by_name(&self, name: &str) -> Option<VertexId> {
        self.vertices.iter().position(|n| n == name).map(VertexId)
    }

    pub fn arrow_by_name(&self, name: &str) -> Option<ArrowId> {
        self.arrows.iter().position(|a| a.name == name).map(ArrowId)
    }

    pub fn arrow_ids(&self) -> impl Iterator<Item = ArrowId> {
        (0..self.arrows.len()).map(ArrowId)
    }

    pub fn vertex_ids(&self) -> impl Iterator<Item = VertexId> {
        (0..self.vertices.len()).map(VertexId)
    }

    pub fn arrows_from(&self, v: VertexId) -> Vec<ArrowId> {
        self.arrow_ids().filter(|a| self.arrow(*a).src == v).collect()
    }

    pub fn arrows_into(&self, v: VertexId) -> Vec<ArrowId> {
        self.arrow_ids().filter(|a| self.arrow(*a).tgt == v).collect()
    }

    /// Interval finiteness of the underlying quiver: finitely many paths
    /// between any vertex pair, i.e. no directed cycle.
    pub fn is_interval_finite(&self) -> bool {
        fn dfs(q: &ThreadQuiver, v: usize, state: &mut Vec<u8>) -> bool {
            state[v] = 1;
            for a in &q.arrows {
                if a.src.0 == v {
                    match state[a.tgt.0] {
                        1 => return false,
                        0 => {
                            if !dfs(q, a.tgt.0, state) {
                                return false;
                            }
                        }
                        _ => {}
                    }
                }
            }
            state[v] = 2;
            true
        }
        let n = self.vertices.len();
        let mut state = vec![0u8; n]; // 0 unvisited, 1 on stack, 2 done
        for v in 0..n {
            if state[v] == 0 && !dfs(self, v, &mut state) {
                return false;
            }
        }
        true
    }

    /// Formally reversed quiver: arrows flipped, dense threads negated.
    pub fn reversed(&self) -> ThreadQuiver {
        let arrows = self
            .arrows
            .iter()
            .map(|a| Arrow {
                name: a.name.clone(),
                src: a.tgt,
                tgt: a.src,
                thread: reverse_model(&a.thread),
            })
            .collect();
        ThreadQuiver { vertices: self.vertices.clone(), arrows }
    }
}

pub fn reverse_model(m: &OrderModel) -> OrderModel {
    match m {
        OrderModel::Empty => OrderModel::Empty,
        OrderModel::Finite(n) => OrderModel::Finite(*n),
        OrderModel::Dense { lo, hi } => OrderModel::Dense {
            lo: hi.clone().map(|h| -h),
            hi: lo.clone().map(|l| -l),
        },
    }
}

/// Coordinate of a point after reversing its thread.
pub fn reverse_coord(m: &OrderModel, c: &Rat) -> Rat {
    match m {
        OrderModel::Finite(n) => rat_int(*n as i64 + 1) - c,
        _ => -c.clone(),
    }
}

fn split_model_at(m: &OrderModel, x: &Rat) -> (OrderModel, OrderModel) {
    match m {
        OrderModel::Empty => (OrderModel::Empty, OrderModel::Empty),
        OrderModel::Finite(n) => {
            let k: usize = x.to_integer().try_into().unwrap_or(1);
            let k = k.max(1);
            (
                if k <= 1 { OrderModel::Empty } else { OrderModel::Finite(k - 1) },
                if k >= *n { OrderModel::Empty } else { OrderModel::Finite(n - k) },
            )
        }
        OrderModel::Dense { lo, hi } => (
            OrderModel::Dense { lo: lo.clone(), hi: Some(x.clone()) },
            OrderModel::Dense { lo: Some(x.clone()), hi: hi.clone() },
        ),
    }
}

/// An object of the path category: a quiver vertex or an inner point of a
/// thread.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum ThreadPoint {
    Vertex(VertexId),
    Inner(ArrowId, Rat),
}

impl ThreadPoint {
    /// Resolves the point to a position of the closure of `arrow` when it
    /// lies there (vertices resolve through the gluing map).
    pub fn resolve_on(&self, arrow: ArrowId, q: &ThreadQuiver) -> Option<ThreadPos> {
        match self {
            ThreadPoint::Inner(a, c) if *a == arrow => Some(ThreadPos::In(c.clone())),
            ThreadPoint::Inner(_, _) => None,
            ThreadPoint::Vertex(v) => {
                let a = q.arrow(arrow);
                if a.src == *v {
                    Some(ThreadPos::Src)
                } else if a.tgt == *v {
                    Some(ThreadPos::Tgt)
                } else {
                    None
                }
            }
        }
    }

    pub fn display(&self, q: &ThreadQuiver) -> String {
        match self {
            ThreadPoint::Vertex(v) => q.vertex_name(*v).to_string(),
            ThreadPoint::Inner(a, c) => format!("{}:{}", q.arrow(*a).name, c),
        }
    }
}

/// Comparison of two objects: total within one thread closure, equality on
/// vertices, incomparable across distinct threads.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PointOrder {
    Less,
    Equal,
    Greater,
    Incomparable,
}

pub fn compare(p: &ThreadPoint, r: &ThreadPoint, q: &ThreadQuiver) -> PointOrder {
    use std::cmp::Ordering;
    match (p, r) {
        (ThreadPoint::Vertex(a), ThreadPoint::Vertex(b)) => {
            if a == b {
                PointOrder::Equal
            } else {
                for arr in q.arrow_ids() {
                    let ar = q.arrow(arr);
                    if ar.src == *a && ar.tgt == *b {
                        return PointOrder::Less;
                    }
                    if ar.src == *b && ar.tgt == *a {
                        return PointOrder::Greater;
                    }
                }
                PointOrder::Incomparable
            }
        }
        (ThreadPoint::Inner(a, _), _) | (_, ThreadPoint::Inner(a, _)) => {
            let (pa, ra) = match (p.resolve_on(*a, q), r.resolve_on(*a, q)) {
                (Some(x), Some(y)) => (x, y),
                _ => return PointOrder::Incomparable,
            };
            match pa.cmp_pos(&ra) {
                Ordering::Less => PointOrder::Less,
                Ordering::Equal => PointOrder::Equal,
                Ordering::Greater => PointOrder::Greater,
            }
        }
    }
}

/// A basis morphism of the path category.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PathLike {
    /// η_{hi,lo} within one thread, both endpoints inner, lo <= hi.
    Inner { arrow: ArrowId, lo: Rat, hi: Rat },
    /// Exit segment η_{t(a),x}, a path in Q, and an entry segment
    /// η_{y,s(b)}. `vertex` is set only for the trivial path e_v.
    Route {
        tail: Option<(ArrowId, Rat)>,
        path: Vec<ArrowId>,
        head: Option<(ArrowId, Rat)>,
        vertex: Option<VertexId>,
    },
}

impl PathLike {
    pub fn identity(x: &ThreadPoint) -> PathLike {
        match x {
            ThreadPoint::Vertex(v) => {
                PathLike::Route { tail: None, path: vec![], head: None, vertex: Some(*v) }
            }
            ThreadPoint::Inner(a, c) => {
                PathLike::Inner { arrow: *a, lo: c.clone(), hi: c.clone() }
            }
        }
    }

    pub fn whole_arrow(a: ArrowId) -> PathLike {
        PathLike::Route { tail: None, path: vec![a], head: None, vertex: None }
    }

    pub fn is_identity(&self) -> bool {
        match self {
            PathLike::Inner { lo, hi, .. } => lo == hi,
            PathLike::Route { tail, path, head, vertex } => {
                tail.is_none() && path.is_empty() && head.is_none() && vertex.is_some()
            }
        }
    }

    pub fn source(&self, q: &ThreadQuiver) -> ThreadPoint {
        match self {
            PathLike::Inner { arrow, lo, .. } => ThreadPoint::Inner(*arrow, lo.clone()),
            PathLike::Route { tail: Some((a, x)), .. } => ThreadPoint::Inner(*a, x.clone()),
            PathLike::Route { tail: None, path, head, vertex } => {
                if let Some(first) = path.first() {
                    ThreadPoint::Vertex(q.arrow(*first).src)
                } else if let Some((b, _)) = head {
                    ThreadPoint::Vertex(q.arrow(*b).src)
                } else {
                    ThreadPoint::Vertex(vertex.expect("trivial path has a vertex"))
                }
            }
        }
    }

    pub fn target(&self, q: &ThreadQuiver) -> ThreadPoint {
        match self {
            PathLike::Inner { arrow, hi, .. } => ThreadPoint::Inner(*arrow, hi.clone()),
            PathLike::Route { head: Some((b, y)), .. } => ThreadPoint::Inner(*b, y.clone()),
            PathLike::Route { head: None, path, tail, vertex } => {
                if let Some(last) = path.last() {
                    ThreadPoint::Vertex(q.arrow(*last).tgt)
                } else if let Some((a, _)) = tail {
                    ThreadPoint::Vertex(q.arrow(*a).tgt)
                } else {
                    ThreadPoint::Vertex(vertex.expect("trivial path has a vertex"))
                }
            }
        }
    }

    /// Composition g∘f of basis elements (self = g, applied after f).
    /// None on endpoint mismatch; never zero in the path category.
    pub fn compose_after(&self, f: &PathLike, q: &ThreadQuiver) -> Option<PathLike> {
        let g = self;
        if f.target(q) != g.source(q) {
            return None;
        }
        if f.is_identity() {
            return Some(g.clone());
        }
        if g.is_identity() {
            return Some(f.clone());
        }
        match (f, g) {
            (PathLike::Inner { arrow: a1, lo, .. }, PathLike::Inner { arrow: a2, hi, .. }) => {
                debug_assert_eq!(a1, a2);
                Some(PathLike::Inner { arrow: *a1, lo: lo.clone(), hi: hi.clone() })
            }
            (PathLike::Inner { arrow: a1, lo, .. }, PathLike::Route { tail, path, head, .. }) => {
                let (ta, _) = tail.as_ref()?;
                debug_assert_eq!(ta, a1);
                Some(PathLike::Route {
                    tail: Some((*a1, lo.clone())),
                    path: path.clone(),
                    head: head.clone(),
                    vertex: None,
                })
            }
            (PathLike::Route { tail, path, head, .. }, PathLike::Inner { arrow: a2, hi, .. }) => {
                let (hb, _) = head.as_ref()?;
                debug_assert_eq!(hb, a2);
                Some(PathLike::Route {
                    tail: tail.clone(),
                    path: path.clone(),
                    head: Some((*a2, hi.clone())),
                    vertex: None,
                })
            }
            (
                PathLike::Route { tail: t1, path: p1, head: h1, .. },
                PathLike::Route { tail: t2, path: p2, head: h2, .. },
            ) => {
                let mut path = p1.clone();
                match (h1, t2) {
                    (Some((b, _)), Some((b2, _))) => {
                        // η_{t(b),y}∘η_{y,s(b)} = b: pass through the whole arrow
                        debug_assert_eq!(b, b2);
                        path.push(*b);
                    }
                    (None, None) => {}
                    _ => return None,
                }
                path.extend(p2.iter().copied());
                let tail = t1.clone();
                let head = h2.clone();
                if tail.is_none() && head.is_none() && path.is_empty() {
                    let v = match f.target(q) {
                        ThreadPoint::Vertex(v) => v,
                        _ => unreachable!(),
                    };
                    return Some(PathLike::Route { tail: None, path, head: None, vertex: Some(v) });
                }
                Some(PathLike::Route { tail, path, head, vertex: None })
            }
        }
    }

    pub fn display(&self, q: &ThreadQuiver) -> String {
        match self {
            PathLike::Inner { arrow, lo, hi } => {
                if lo == hi {
                    format!("e[{}:{}]", q.arrow(*arrow).name, lo)
                } else {
                    format!("η[{}:{}←{}]", q.arrow(*arrow).name, hi, lo)
                }
            }
            PathLike::Route { tail, path, head, vertex } => {
                if let Some(v) = vertex {
                    return format!("e[{}]", q.vertex_name(*v));
                }
                let mut parts = Vec::new();
                if let Some((b, y)) = head {
                    parts.push(format!("η[{}:{}←src]", q.arrow(*b).name, y));
                }
                if !path.is_empty() {
                    let names: Vec<&str> =
                        path.iter().rev().map(|a| q.arrow(*a).name.as_str()).collect();
                    parts.push(format!("p({})", names.join("∘")));
                }
                if let Some((a, x)) = tail {
                    parts.push(format!("η[{}:tgt←{}]", q.arrow(*a).name, x));
                }
                parts.join("·")
            }
        }
    }
}

/// A finite field-linear combination of path-like elements sharing source
/// and target.
#[derive(Debug, Clone, PartialEq)]
pub struct MorphismCombination {
    pub src: ThreadPoint,
    pub dst: ThreadPoint,
    pub terms: Vec<(PathLike, Scalar)>,
}

impl MorphismCombination {
    pub fn zero(src: ThreadPoint, dst: ThreadPoint) -> MorphismCombination {
        MorphismCombination { src, dst, terms: vec![] }
    }

    pub fn single(pl: PathLike, c: Scalar, q: &ThreadQuiver) -> MorphismCombination {
        let src = pl.source(q);
        let dst = pl.target(q);
        let mut m = MorphismCombination { src, dst, terms: vec![(pl, c)] };
        m.canonicalize();
        m
    }

    pub fn identity(x: &ThreadPoint, ctx: &FieldCtx, q: &ThreadQuiver) -> MorphismCombination {
        MorphismCombination::single(PathLike::identity(x), ctx.one(), q)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn canonicalize(&mut self) {
        let mut map: BTreeMap<PathLike, Scalar> = BTreeMap::new();
        for (pl, c) in self.terms.drain(..) {
            match map.get_mut(&pl) {
                Some(acc) => *acc = acc.add(&c),
                None => {
                    map.insert(pl, c);
                }
            }
        }
        self.terms = map.into_iter().filter(|(_, c)| !c.is_zero()).collect();
    }

    pub fn add(&self, other: &MorphismCombination) -> MorphismCombination {
        debug_assert_eq!(self.src, other.src);
        debug_assert_eq!(self.dst, other.dst);
        let mut out = self.clone();
        out.terms.extend(other.terms.iter().cloned());
        out.canonicalize();
        out
    }

    pub fn scale(&self, c: &Scalar) -> MorphismCombination {
        let mut out = self.clone();
        for (_, k) in out.terms.iter_mut() {
            *k = k.mul(c);
        }
        out.canonicalize();
        out
    }

    pub fn sub(&self, other: &MorphismCombination) -> MorphismCombination {
        let mut out = self.clone();
        for (pl, c) in &other.terms {
            out.terms.push((pl.clone(), c.neg()));
        }
        out.canonicalize();
        out
    }

    pub fn display(&self, q: &ThreadQuiver) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        self.terms
            .iter()
            .map(|(pl, c)| {
                if c.is_one() {
                    pl.display(q)
                } else {
                    format!("{}·{}", c, pl.display(q))
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

/// Bilinear composition g∘f. Errors when endpoints do not match.
pub fn compose(
    g: &MorphismCombination,
    f: &MorphismCombination,
    q: &ThreadQuiver,
) -> Result<MorphismCombination, Error> {
    if f.dst != g.src {
        return Err(Error::EndpointMismatch);
    }
    let mut out = MorphismCombination::zero(f.src.clone(), g.dst.clone());
    for (pf, cf) in &f.terms {
        for (pg, cg) in &g.terms {
            let pl = pg.compose_after(pf, q).ok_or(Error::EndpointMismatch)?;
            out.terms.push((pl, cf.mul(cg)));
        }
    }
    out.canonicalize();
    Ok(out)
}

/// DFS path enumeration with prefix pruning, shared by Hom computations.
pub(crate) struct PathEnum<'a> {
    pub quiver: &'a ThreadQuiver,
    pub cap: usize,
}

impl<'a> PathEnum<'a> {
    /// All Q-paths u -> w of length <= cap. `keep_prefix` prunes dead
    /// branches; an unpruned prefix of length >= cap that revisits a
    /// vertex witnesses a surviving cycle and raises NotHomFinite.
    pub fn paths(
        &self,
        u: VertexId,
        w: VertexId,
        mut keep_prefix: impl FnMut(&[ArrowId]) -> bool,
    ) -> Result<Vec<Vec<ArrowId>>, Error> {
        let mut out = Vec::new();
        let mut stack: Vec<ArrowId> = Vec::new();
        self.dfs(u, w, &mut stack, &mut out, &mut keep_prefix)?;
        Ok(out)
    }

    fn dfs(
        &self,
        at: VertexId,
        goal: VertexId,
        stack: &mut Vec<ArrowId>,
        out: &mut Vec<Vec<ArrowId>>,
        keep_prefix: &mut impl FnMut(&[ArrowId]) -> bool,
    ) -> Result<(), Error> {
        if at == goal {
            out.push(stack.clone());
        }
        if stack.len() >= self.cap {
            let mut seen = vec![false; self.quiver.vertices.len()];
            if let Some(a0) = stack.first() {
                seen[self.quiver.arrow(*a0).src.0] = true;
            }
            for a in stack.iter() {
                let t = self.quiver.arrow(*a).tgt;
                if seen[t.0] {
                    return Err(Error::NotHomFinite);
                }
                seen[t.0] = true;
            }
            return Ok(());
        }
        for a in self.quiver.arrows_from(at) {
            stack.push(a);
            if keep_prefix(stack) {
                self.dfs(self.quiver.arrow(a).tgt, goal, stack, out, keep_prefix)?;
            }
            stack.pop();
        }
        Ok(())
    }
}

#[cfg(test)]
pub(crate) mod test_fixtures {
    use super::*;
    use crate::order::rat_int;

    pub fn a2_threaded() -> ThreadQuiver {
        ThreadQuiver::new(
            vec!["a".into(), "b".into()],
            vec![Arrow {
                name: "alpha".into(),
                src: VertexId(0),
                tgt: VertexId(1),
                thread: OrderModel::Dense { lo: Some(rat_int(0)), hi: Some(rat_int(1)) },
            }],
        )
    }

    /// The running example: D4 with threads (0,4), R, and an unthreaded
    /// arrow. Vertices a, b, c, d; arrows alpha: a->b, beta: b->c,
    /// gamma: b->d.
    pub fn d4_running() -> ThreadQuiver {
        ThreadQuiver::new(
            vec!["a".into(), "b".into(), "c".into(), "d".into()],
            vec![
                Arrow {
                    name: "alpha".into(),
                    src: VertexId(0),
                    tgt: VertexId(1),
                    thread: OrderModel::Dense { lo: Some(rat_int(0)), hi: Some(rat_int(4)) },
                },
                Arrow {
                    name: "beta".into(),
                    src: VertexId(1),
                    tgt: VertexId(2),
                    thread: OrderModel::Dense { lo: None, hi: None },
                },
                Arrow {
                    name: "gamma".into(),
                    src: VertexId(1),
                    tgt: VertexId(3),
                    thread: OrderModel::Empty,
                },
            ],
        )
    }

    pub fn two_cycle_threaded() -> ThreadQuiver {
        ThreadQuiver::new(
            vec!["a".into(), "b".into()],
            vec![
                Arrow {
                    name: "alpha".into(),
                    src: VertexId(0),
                    tgt: VertexId(1),
                    thread: OrderModel::Dense { lo: Some(rat_int(0)), hi: Some(rat_int(4)) },
                },
                Arrow {
                    name: "beta".into(),
                    src: VertexId(1),
                    tgt: VertexId(0),
                    thread: OrderModel::Dense { lo: None, hi: None },
                },
            ],
        )
    }
}

#[cfg(test)]
mod tests {
    use super::test_fixtures::*;
    use super::*;
    use crate::order::rat;

    #[test]
    fn compare_points() {
        let q = a2_threaded();
        let src = ThreadPoint::Vertex(VertexId(0));
        let mid = ThreadPoint::Inner(ArrowId(0), rat(1, 2));
        assert_eq!(compare(&src, &mid, &q), PointOrder::Less);
        let third = ThreadPoint::Inner(ArrowId(0), rat(1, 3));
        assert_eq!(compare(&third, &third, &q), PointOrder::Equal);
        let d4 = d4_running();
        let p1 = ThreadPoint::Inner(ArrowId(0), rat(1, 1));
        let p2 = ThreadPoint::Inner(ArrowId(1), rat(1, 1));
        assert_eq!(compare(&p1, &p2, &d4), PointOrder::Incomparable);
    }

    #[test]
    fn eta_composition_merges() {
        let q = a2_threaded();
        let f = PathLike::Inner { arrow: ArrowId(0), lo: rat(1, 4), hi: rat(1, 2) };
        let g = PathLike::Inner { arrow: ArrowId(0), lo: rat(1, 2), hi: rat(3, 4) };
        let gf = g.compose_after(&f, &q).unwrap();
        assert_eq!(gf, PathLike::Inner { arrow: ArrowId(0), lo: rat(1, 4), hi: rat(3, 4) });
    }

    #[test]
    fn identity_composition() {
        let q = a2_threaded();
        let x = ThreadPoint::Inner(ArrowId(0), rat(1, 3));
        let e = PathLike::identity(&x);
        let f = PathLike::Route {
            tail: Some((ArrowId(0), rat(1, 3))),
            path: vec![],
            head: None,
            vertex: None,
        };
        assert_eq!(f.compose_after(&e, &q).unwrap(), f);
    }

    #[test]
    fn loop_rule_via_rewrite() {
        // a threaded loop is rewritten to a two-cycle; going around the
        // rewritten cycle is the arrow composite, not the identity
        let q = ThreadQuiver::new(
            vec!["v".into()],
            vec![Arrow {
                name: "alpha".into(),
                src: VertexId(0),
                tgt: VertexId(0),
                thread: OrderModel::Dense { lo: Some(rat_int(0)), hi: Some(rat_int(1)) },
            }],
        );
        assert_eq!(q.vertices.len(), 2);
        assert_eq!(q.arrows.len(), 2);
        assert!(q.arrows.iter().all(|a| a.src != a.tgt));
        let half1 = PathLike::whole_arrow(ArrowId(0));
        let half2 = PathLike::whole_arrow(ArrowId(1));
        let around = half2.compose_after(&half1, &q).unwrap();
        assert!(!around.is_identity());
        assert_eq!(
            around,
            PathLike::Route { tail: None, path: vec![ArrowId(0), ArrowId(1)], head: None, vertex: None }
        );
    }

    #[test]
    fn unthreaded_loop_stays() {
        let q = ThreadQuiver::new(
            vec!["v".into()],
            vec![Arrow {
                name: "alpha".into(),
                src: VertexId(0),
                tgt: VertexId(0),
                thread: OrderModel::Empty,
            }],
        );
        assert_eq!(q.arrows.len(), 1);
        // the loop composed with the trivial path is the loop, not e_v
        let e = PathLike::identity(&ThreadPoint::Vertex(VertexId(0)));
        let alpha = PathLike::whole_arrow(ArrowId(0));
        let c = alpha.compose_after(&e, &q).unwrap();
        assert_eq!(c, alpha);
        assert!(!c.is_identity());
        assert!(!q.is_interval_finite());
    }

    #[test]
    fn interval_finiteness() {
        assert!(a2_threaded().is_interval_finite());
        assert!(d4_running().is_interval_finite());
        assert!(!two_cycle_threaded().is_interval_finite());
    }

    #[test]
    fn route_through_vertex() {
        let q = d4_running();
        // x in alpha-thread to y in beta-thread: tail then head
        let f = PathLike::Route {
            tail: Some((ArrowId(0), rat(1, 1))),
            path: vec![],
            head: None,
            vertex: None,
        };
        let g = PathLike::Route {
            tail: None,
            path: vec![],
            head: Some((ArrowId(1), rat(7, 1))),
            vertex: None,
        };
        let gf = g.compose_after(&f, &q).unwrap();
        assert_eq!(
            gf,
            PathLike::Route {
                tail: Some((ArrowId(0), rat(1, 1))),
                path: vec![],
                head: Some((ArrowId(1), rat(7, 1))),
                vertex: None
            }
        );
        assert_eq!(gf.source(&q), ThreadPoint::Inner(ArrowId(0), rat(1, 1)));
        assert_eq!(gf.target(&q), ThreadPoint::Inner(ArrowId(1), rat(7, 1)));
    }
}
