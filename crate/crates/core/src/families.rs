//! Constructors for the named extremal graph families.
//!
//! Labeling is fixed per family so outputs are bit-for-bit reproducible:
//! cycle or clique vertices come first, then path and pendant vertices in
//! attachment order.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::graph::{Graph, GraphBuilder, Vertex};

pub fn path(n: usize) -> Result<Graph> {
    if n == 0 {
        return invalid("path needs n >= 1");
    }
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return invalid("cycle needs n >= 3");
    }
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
}

pub fn complete(n: usize) -> Result<Graph> {
    if n == 0 {
        return invalid("complete graph needs n >= 1");
    }
    Graph::from_edges(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))))
}

/// `K_{1,n-1}` with the hub at vertex 0.
pub fn star(n: usize) -> Result<Graph> {
    if n == 0 {
        return invalid("star needs n >= 1");
    }
    Graph::from_edges(n, (1..n).map(|i| (0, i)))
}

/// Appends a path of `len` new vertices hanging from `from`.
fn hang_path(b: &mut GraphBuilder, next: &mut Vertex, from: Vertex, len: usize) -> Result<()> {
    let mut prev = from;
    for _ in 0..len {
        b.add_edge(prev, *next)?;
        prev = *next;
        *next += 1;
    }
    Ok(())
}

/// `T(l, m, d)`: path `0..d` with `l` pendants on vertex 0 and `m` pendants
/// on vertex `d - 1`. With `d = 1` both groups hang from the single path
/// vertex, giving the star `K_{1, l+m}`.
pub fn double_broom(l: usize, m: usize, d: usize) -> Result<Graph> {
    if l == 0 || m == 0 || d == 0 {
        return invalid("double broom needs l, m, d >= 1");
    }
    let n = l + m + d;
    let mut b = GraphBuilder::new(n)?;
    for i in 1..d {
        b.add_edge(i - 1, i)?;
    }
    let mut next = d;
    for _ in 0..l {
        b.add_edge(0, next)?;
        next += 1;
    }
    for _ in 0..m {
        b.add_edge(d - 1, next)?;
        next += 1;
    }
    Ok(b.build())
}

/// `T_{n,k}`: hub 0 with `k` legs, the first `r` of `q + 1` vertices and the
/// rest of `q`, where `q = (n-1) / k` and `r = n - 1 - kq`.
pub fn spider_balanced(n: usize, k: usize) -> Result<Graph> {
    if k < 2 || k + 1 > n {
        return invalid(format!("balanced spider needs 2 <= k <= n-1, got n={n}, k={k}"));
    }
    let q = (n - 1) / k;
    let r = n - 1 - k * q;
    let mut b = GraphBuilder::new(n)?;
    let mut next = 1;
    for leg in 0..k {
        hang_path(&mut b, &mut next, 0, if leg < r { q + 1 } else { q })?;
    }
    Ok(b.build())
}

/// `T^t_{n,k}`: adjacent hubs 0 (degree `t+1`) and 1 (degree `k-t+1`), each
/// leg a path on `(n-2)/k` vertices; the `t` legs of hub 0 come first.
pub fn double_spider(n: usize, k: usize, t: usize) -> Result<Graph> {
    if k < 2 || n < 2 + k || !(n - 2).is_multiple_of(k) {
        return invalid(format!("double spider needs k >= 2 and k | n-2 with n-2 >= k, got n={n}, k={k}"));
    }
    if t == 0 || t >= k {
        return invalid(format!("double spider needs 1 <= t <= k-1, got t={t}"));
    }
    let len = (n - 2) / k;
    let mut b = GraphBuilder::new(n)?;
    b.add_edge(0, 1)?;
    let mut next = 2;
    for leg in 0..k {
        hang_path(&mut b, &mut next, if leg < t { 0 } else { 1 }, len)?;
    }
    Ok(b.build())
}

/// `U^l_{n,g}`: cycle `0..g`, then the path `g..n` with `g` adjacent to 0.
pub fn tadpole_l(n: usize, g: usize) -> Result<Graph> {
    if g < 3 || g >= n {
        return invalid(format!("tadpole U^l needs 3 <= g <= n-1, got n={n}, g={g}"));
    }
    let mut b = cycle(g)?.to_builder_with_order(n)?;
    let mut next = g;
    hang_path(&mut b, &mut next, 0, n - g)?;
    Ok(b.build())
}

/// `U^p_{n,g}`: cycle `0..g` with `n - g` pendants on vertex 0.
pub fn tadpole_p(n: usize, g: usize) -> Result<Graph> {
    if g < 3 || g >= n {
        return invalid(format!("tadpole U^p needs 3 <= g <= n-1, got n={n}, g={g}"));
    }
    let mut b = cycle(g)?.to_builder_with_order(n)?;
    for v in g..n {
        b.add_edge(0, v)?;
    }
    Ok(b.build())
}

/// `C^n_{m1,m2}`: cycle `0..m1` and cycle `m1..m1+m2`, joined by a path
/// from vertex 0 to vertex `m1` whose interior vertices are numbered last.
/// When `n = m1 + m2 - 1` the second cycle shares vertex 0 instead and
/// occupies `0, m1, .., n-1`.
pub fn dumbbell(m1: usize, m2: usize, n: usize) -> Result<Graph> {
    if m1 < 3 || m2 < 3 || n + 1 < m1 + m2 {
        return invalid(format!("dumbbell needs m1, m2 >= 3 and n >= m1+m2-1, got ({m1}, {m2}, {n})"));
    }
    let mut b = cycle(m1)?.to_builder_with_order(n)?;
    if n + 1 == m1 + m2 {
        let ring: Vec<Vertex> = std::iter::once(0).chain(m1..n).collect();
        for i in 0..ring.len() {
            b.add_edge(ring[i], ring[(i + 1) % ring.len()])?;
        }
        return Ok(b.build());
    }
    for i in 0..m2 {
        b.add_edge(m1 + i, m1 + (i + 1) % m2)?;
    }
    let mut prev = 0;
    for v in m1 + m2..n {
        b.add_edge(prev, v)?;
        prev = v;
    }
    b.add_edge(prev, m1)?;
    Ok(b.build())
}

/// `K^n_m(l_1, .., l_m)`: clique on `0..m`; clique vertex `i` is the end of
/// a path on `l_i` vertices, the extra vertices numbered outward, path by path.
pub fn complete_with_paths(lengths: &[usize]) -> Result<Graph> {
    let m = lengths.len();
    if m < 2 || lengths.contains(&0) {
        return invalid("K_m^n(l_1..l_m) needs m >= 2 and every l_i >= 1");
    }
    let n: usize = lengths.iter().sum();
    let mut b = complete(m)?.to_builder_with_order(n)?;
    let mut next = m;
    for (i, &l) in lengths.iter().enumerate() {
        hang_path(&mut b, &mut next, i, l - 1)?;
    }
    Ok(b.build())
}

/// `P^k_n`: clique on `0..n-k` with `k` pendants on vertex 0.
pub fn complete_with_pendants(n: usize, k: usize) -> Result<Graph> {
    if n < 3 || k + 3 > n {
        return invalid(format!("P_n^k needs 0 <= k <= n-3, got n={n}, k={k}"));
    }
    let mut b = complete(n - k)?.to_builder_with_order(n)?;
    for v in n - k..n {
        b.add_edge(0, v)?;
    }
    Ok(b.build())
}

/// Balanced path lengths for `K^n_{n-s}`: `r` paths of `q+1` vertices
/// followed by paths of `q`, with `q = n / (n-s)`.
pub fn balanced_lengths(n: usize, s: usize) -> Result<Vec<usize>> {
    if n < 2 || s + 2 > n {
        return invalid(format!("balanced profile needs 0 <= s <= n-2, got n={n}, s={s}"));
    }
    let m = n - s;
    let q = n / m;
    let r = n - m * q;
    Ok((0..m).map(|i| if i < r { q + 1 } else { q }).collect())
}

impl Graph {
    /// Builder with this graph's edges on `n >= self.order()` vertices.
    pub(crate) fn to_builder_with_order(&self, n: usize) -> Result<GraphBuilder> {
        let mut b = GraphBuilder::new(n)?;
        for (u, v) in self.edges() {
            b.add_edge(u, v)?;
        }
        Ok(b)
    }
}

/// A named family member with its parameters.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "tag", content = "params", rename_all = "kebab-case")]
pub enum FamilySpec {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    Star(usize),
    DoubleBroom { l: usize, m: usize, d: usize },
    #[serde(rename = "spider")]
    SpiderBalanced { n: usize, k: usize },
    DoubleSpider { n: usize, k: usize, t: usize },
    TadpoleL { n: usize, g: usize },
    TadpoleP { n: usize, g: usize },
    Dumbbell { m1: usize, m2: usize, n: usize },
    CompleteWithPaths(Vec<usize>),
    CompleteWithPendants { n: usize, k: usize },
}

impl FamilySpec {
    pub fn build(&self) -> Result<Graph> {
        match *self {
            FamilySpec::Path(n) => path(n),
            FamilySpec::Cycle(n) => cycle(n),
            FamilySpec::Complete(n) => complete(n),
            FamilySpec::Star(n) => star(n),
            FamilySpec::DoubleBroom { l, m, d } => double_broom(l, m, d),
            FamilySpec::SpiderBalanced { n, k } => spider_balanced(n, k),
            FamilySpec::DoubleSpider { n, k, t } => double_spider(n, k, t),
            FamilySpec::TadpoleL { n, g } => tadpole_l(n, g),
            FamilySpec::TadpoleP { n, g } => tadpole_p(n, g),
            FamilySpec::Dumbbell { m1, m2, n } => dumbbell(m1, m2, n),
            FamilySpec::CompleteWithPaths(ref ls) => complete_with_paths(ls),
            FamilySpec::CompleteWithPendants { n, k } => complete_with_pendants(n, k),
        }
    }

    pub fn tag(&self) -> &'static str {
        match self {
            FamilySpec::Path(_) => "path",
            FamilySpec::Cycle(_) => "cycle",
            FamilySpec::Complete(_) => "complete",
            FamilySpec::Star(_) => "star",
            FamilySpec::DoubleBroom { .. } => "double-broom",
            FamilySpec::SpiderBalanced { .. } => "spider",
            FamilySpec::DoubleSpider { .. } => "double-spider",
            FamilySpec::TadpoleL { .. } => "tadpole-l",
            FamilySpec::TadpoleP { .. } => "tadpole-p",
            FamilySpec::Dumbbell { .. } => "dumbbell",
            FamilySpec::CompleteWithPaths(_) => "complete-with-paths",
            FamilySpec::CompleteWithPendants { .. } => "complete-with-pendants",
        }
    }

    pub fn params(&self) -> Vec<usize> {
        match *self {
            FamilySpec::Path(n) | FamilySpec::Cycle(n) | FamilySpec::Complete(n) | FamilySpec::Star(n) => vec![n],
            FamilySpec::DoubleBroom { l, m, d } => vec![l, m, d],
            FamilySpec::SpiderBalanced { n, k } => vec![n, k],
            FamilySpec::DoubleSpider { n, k, t } => vec![n, k, t],
            FamilySpec::TadpoleL { n, g } | FamilySpec::TadpoleP { n, g } => vec![n, g],
            FamilySpec::Dumbbell { m1, m2, n } => vec![m1, m2, n],
            FamilySpec::CompleteWithPaths(ref ls) => ls.clone(),
            FamilySpec::CompleteWithPendants { n, k } => vec![n, k],
        }
    }

    /// Parses a tag and its integer parameters.
    pub fn from_parts(tag: &str, p: &[usize]) -> Result<Self> {
        let want = |k: usize| -> Result<()> {
            if p.len() == k {
                Ok(())
            } else {
                invalid(format!("family `{tag}` takes {k} parameter(s), got {}", p.len()))
            }
        };
        let spec = match tag {
            "path" => want(1).map(|_| FamilySpec::Path(p[0]))?,
            "cycle" => want(1).map(|_| FamilySpec::Cycle(p[0]))?,
            "complete" => want(1).map(|_| FamilySpec::Complete(p[0]))?,
            "star" => want(1).map(|_| FamilySpec::Star(p[0]))?,
            "double-broom" => want(3).map(|_| FamilySpec::DoubleBroom { l: p[0], m: p[1], d: p[2] })?,
            "spider" => want(2).map(|_| FamilySpec::SpiderBalanced { n: p[0], k: p[1] })?,
            "double-spider" => want(3).map(|_| FamilySpec::DoubleSpider { n: p[0], k: p[1], t: p[2] })?,
            "tadpole-l" => want(2).map(|_| FamilySpec::TadpoleL { n: p[0], g: p[1] })?,
            "tadpole-p" => want(2).map(|_| FamilySpec::TadpoleP { n: p[0], g: p[1] })?,
            "dumbbell" => want(3).map(|_| FamilySpec::Dumbbell { m1: p[0], m2: p[1], n: p[2] })?,
            "complete-with-paths" => FamilySpec::CompleteWithPaths(p.to_vec()),
            "complete-with-pendants" => want(2).map(|_| FamilySpec::CompleteWithPendants { n: p[0], k: p[1] })?,
            other => return invalid(format!("unknown family `{other}`")),
        };
        Ok(spec)
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())?;
        for p in self.params() {
            write!(f, " {p}")?;
        }
        Ok(())
    }
}

/// Accepts `tag p1 p2 ..` with spaces, commas or colons as separators.
impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut parts = s.split(|c: char| c.is_whitespace() || c == ',' || c == ':').filter(|t| !t.is_empty());
        let tag = parts.next().ok_or_else(|| Error::InvalidParameters("empty family spec".into()))?;
        let params = parts
            .map(|t| t.parse::<usize>().map_err(|_| Error::InvalidParameters(format!("bad parameter `{t}`"))))
            .collect::<Result<Vec<_>>>()?;
        FamilySpec::from_parts(tag, &params)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::is_isomorphic;
    use crate::invariants::{cut_vertices, pendant_vertices, total_eccentricity};

    #[test]
    fn small_standard_graphs() {
        assert_eq!(path(1).unwrap(), complete(1).unwrap());
        assert_eq!(cycle(3).unwrap(), complete(3).unwrap());
        assert!(cycle(2).is_err());
        assert!(path(0).is_err());
    }

    #[test]
    fn double_broom_shapes() {
        let t = double_broom(2, 1, 3).unwrap();
        assert_eq!(t.order(), 6);
        assert_eq!(t.edge_count(), 5);
        assert_eq!(pendant_vertices(&t).len(), 3);
        for d in 1..8 {
            assert!(is_isomorphic(&double_broom(1, 1, d).unwrap(), &path(d + 2).unwrap()));
        }
        assert!(is_isomorphic(&double_broom(2, 3, 1).unwrap(), &star(6).unwrap()));
        assert!(double_broom(0, 1, 3).is_err());
    }

    #[test]
    fn spider_legs() {
        let t = spider_balanced(7, 3).unwrap();
        assert_eq!(t.degree(0), 3);
        assert_eq!(pendant_vertices(&t).len(), 3);
        // q = 2, r = 1: legs of 3, 2, 2 vertices
        let t = spider_balanced(8, 3).unwrap();
        assert_eq!(t.neighbors(0).collect::<Vec<_>>(), vec![1, 4, 6]);
        assert_eq!(pendant_vertices(&t), vec![3, 5, 7]);
        for n in 3..12 {
            assert!(is_isomorphic(&spider_balanced(n, n - 1).unwrap(), &star(n).unwrap()));
        }
        assert!(spider_balanced(5, 5).is_err());
        assert!(spider_balanced(5, 1).is_err());
    }

    #[test]
    fn double_spider_shapes() {
        let t = double_spider(8, 3, 1).unwrap();
        assert_eq!((t.degree(0), t.degree(1)), (2, 3));
        assert_eq!(t.edge_count(), 7);
        assert_eq!(pendant_vertices(&double_spider(14, 4, 2).unwrap()).len(), 4);
        for (n, k) in [(8, 3), (14, 4), (12, 5), (10, 2)] {
            for t in 1..k {
                assert!(is_isomorphic(
                    &double_spider(n, k, t).unwrap(),
                    &double_spider(n, k, k - t).unwrap()
                ));
            }
        }
        assert!(double_spider(9, 3, 1).is_err());
        assert!(double_spider(8, 3, 3).is_err());
    }

    #[test]
    fn tadpoles() {
        let u = tadpole_l(5, 3).unwrap();
        assert_eq!(total_eccentricity(&u).unwrap(), 13);
        for n in 4..15 {
            assert!(is_isomorphic(&tadpole_l(n, n - 1).unwrap(), &tadpole_p(n, n - 1).unwrap()));
            for g in 3..n {
                let l = tadpole_l(n, g).unwrap();
                assert_eq!(pendant_vertices(&l).len(), 1);
                assert_eq!(cut_vertices(&l).unwrap().len(), n - g);
                let p = tadpole_p(n, g).unwrap();
                assert_eq!(pendant_vertices(&p).len(), n - g);
                assert_eq!(cut_vertices(&p).unwrap(), vec![0]);
            }
        }
        assert_eq!(total_eccentricity(&tadpole_p(6, 3).unwrap()).unwrap(), 11);
        assert!(tadpole_l(5, 5).is_err());
        assert!(tadpole_p(5, 2).is_err());
    }

    #[test]
    fn dumbbells() {
        assert_eq!(total_eccentricity(&dumbbell(3, 3, 7).unwrap()).unwrap(), 24);
        assert_eq!(total_eccentricity(&dumbbell(4, 4, 7).unwrap()).unwrap(), 22);
        let d = dumbbell(4, 3, 6).unwrap();
        assert_eq!(d.edge_count(), 7);
        assert_eq!(cut_vertices(&d).unwrap(), vec![0]);
        assert!(pendant_vertices(&dumbbell(5, 3, 11).unwrap()).is_empty());
        assert!(is_isomorphic(&dumbbell(5, 3, 11).unwrap(), &dumbbell(3, 5, 11).unwrap()));
        assert!(is_isomorphic(&dumbbell(5, 4, 8).unwrap(), &dumbbell(4, 5, 8).unwrap()));
        assert!(dumbbell(3, 3, 4).is_err());
    }

    #[test]
    fn complete_with_paths_shapes() {
        let g = complete_with_paths(&[2, 2, 1, 1]).unwrap();
        assert_eq!(total_eccentricity(&g).unwrap(), 14);
        assert_eq!(complete_with_paths(&[1; 5]).unwrap(), complete(5).unwrap());
        assert!(is_isomorphic(&complete_with_paths(&[3, 4]).unwrap(), &path(7).unwrap()));
        let g = complete_with_paths(&[3, 1, 2]).unwrap();
        assert_eq!(cut_vertices(&g).unwrap().len(), 3);
        assert!(complete_with_paths(&[2]).is_err());
        assert!(complete_with_paths(&[2, 0, 1]).is_err());
    }

    #[test]
    fn complete_with_pendants_shapes() {
        assert_eq!(total_eccentricity(&complete_with_pendants(7, 2).unwrap()).unwrap(), 13);
        assert_eq!(complete_with_pendants(6, 0).unwrap(), complete(6).unwrap());
        assert_eq!(pendant_vertices(&complete_with_pendants(9, 4).unwrap()).len(), 4);
        assert!(complete_with_pendants(5, 3).is_err());
    }

    #[test]
    fn star_matches_degenerate_broom() {
        for n in 3..10 {
            for l in 1..n - 1 {
                assert!(is_isomorphic(&star(n).unwrap(), &double_broom(l, n - 1 - l, 1).unwrap()));
            }
        }
    }

    #[test]
    fn constructors_are_deterministic() {
        let a = FamilySpec::Dumbbell { m1: 5, m2: 4, n: 13 };
        assert_eq!(a.build().unwrap(), a.build().unwrap());
        assert_eq!(
            crate::graph6::encode(&FamilySpec::TadpoleL { n: 6, g: 4 }.build().unwrap()),
            crate::graph6::encode(&tadpole_l(6, 4).unwrap())
        );
    }

    #[test]
    fn spec_parsing() {
        let s: FamilySpec = "dumbbell 3 3 7".parse().unwrap();
        assert_eq!(s, FamilySpec::Dumbbell { m1: 3, m2: 3, n: 7 });
        assert_eq!(s.to_string(), "dumbbell 3 3 7");
        let s: FamilySpec = "complete-with-paths:2,2,1,1".parse().unwrap();
        assert_eq!(s.build().unwrap().order(), 6);
        assert!("cycle".parse::<FamilySpec>().is_err());
        assert!("blob 3".parse::<FamilySpec>().is_err());
        assert_eq!(s.tag(), "complete-with-paths");
    }

    #[test]
    fn balanced_profiles() {
        assert_eq!(balanced_lengths(6, 2).unwrap(), vec![2, 2, 1, 1]);
        assert_eq!(balanced_lengths(6, 0).unwrap(), vec![1; 6]);
        assert_eq!(balanced_lengths(7, 5).unwrap(), vec![4, 3]);
        assert!(balanced_lengths(5, 4).is_err());
    }
}
