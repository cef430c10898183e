use std::fmt;

use num_traits::{One, Signed};

use super::poly::{Coeff, Polynomial};
use super::TermOrder;
use crate::combinat::Graph;
use crate::error::{input, Result};
use crate::monomial::{Monomial, MonomialIdeal};
use crate::poset::{build_poset, Poset};
use crate::symbolic::edge_ideal;

/// A matrix with polynomial entries, row-major.
pub type PolyMatrix = Vec<Vec<Polynomial>>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FamilyKind {
    Generic { m: usize, n: usize },
    Symmetric { m: usize },
    Skew { m: usize },
    Hankel { d: usize, r: usize },
    BlockHankel { d: usize },
    Scroll { d: usize, k: usize },
    Segre111,
}

/// One of the determinantal families together with its variables and the
/// lex order selecting main diagonals (antidiagonals for `skew`).
#[derive(Clone, Debug)]
pub struct MatrixFamily {
    kind: FamilyKind,
    names: Vec<String>,
    /// Index pairs naming each variable, in variable order.
    labels: Vec<Vec<usize>>,
}

fn label_name(prefix: &str, idx: &[usize]) -> String {
    if idx.iter().all(|&i| i < 10) {
        format!("{prefix}{}", idx.iter().map(|i| i.to_string()).collect::<String>())
    } else {
        format!("{prefix}{}", idx.iter().map(|i| i.to_string()).collect::<Vec<_>>().join("_"))
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FamilyKind::Generic { m, n } => write!(f, "generic({m},{n})"),
            FamilyKind::Symmetric { m } => write!(f, "symmetric({m})"),
            FamilyKind::Skew { m } => write!(f, "skew({m})"),
            FamilyKind::Hankel { d, r } => write!(f, "hankel({d},{r})"),
            FamilyKind::BlockHankel { d } => write!(f, "block_hankel({d})"),
            FamilyKind::Scroll { d, k } => write!(f, "scroll({d},{k})"),
            FamilyKind::Segre111 => f.write_str("segre111"),
        }
    }
}

impl FamilyKind {
    /// Parses `generic(3,3)`, `hankel(4,1)`, `segre111` and so on.
    pub fn parse(text: &str) -> Result<FamilyKind> {
        let text = text.trim();
        let (name, args) = match text.find('(') {
            Some(p) => {
                if !text.ends_with(')') {
                    return input(format!("malformed family {text:?}"));
                }
                (&text[..p], &text[p + 1..text.len() - 1])
            }
            None => (text, ""),
        };
        let nums: Vec<usize> = if args.trim().is_empty() {
            Vec::new()
        } else {
            args.split(',')
                .map(|a| a.trim().parse::<usize>())
                .collect::<std::result::Result<_, _>>()
                .map_err(|_| crate::error::Error::Input(format!("bad family parameters in {text:?}")))?
        };
        let kind = match (name, nums.as_slice()) {
            ("generic", &[m, n]) => FamilyKind::Generic { m, n },
            ("symmetric", &[m]) => FamilyKind::Symmetric { m },
            ("skew", &[m]) => FamilyKind::Skew { m },
            ("hankel", &[d]) => FamilyKind::Hankel { d, r: 1 },
            ("hankel", &[d, r]) => FamilyKind::Hankel { d, r },
            ("block_hankel", &[d]) => FamilyKind::BlockHankel { d },
            ("scroll", &[d, k]) => FamilyKind::Scroll { d, k },
            ("segre111", &[]) => FamilyKind::Segre111,
            _ => return input(format!("unknown matrix family {text:?}")),
        };
        MatrixFamily::new(kind)?;
        Ok(kind)
    }
}

impl MatrixFamily {
    pub fn new(kind: FamilyKind) -> Result<MatrixFamily> {
        let mut labels: Vec<Vec<usize>> = Vec::new();
        let prefix = if matches!(kind, FamilyKind::Skew { .. }) { "y" } else { "x" };
        match kind {
            FamilyKind::Generic { m, n } => {
                if m == 0 || n == 0 {
                    return input("generic matrix needs positive dimensions");
                }
                for i in 1..=m {
                    for j in 1..=n {
                        labels.push(vec![i, j]);
                    }
                }
            }
            FamilyKind::Symmetric { m } => {
                if m == 0 {
                    return input("symmetric matrix needs m ≥ 1");
                }
                for i in 1..=m {
                    for j in i..=m {
                        labels.push(vec![i, j]);
                    }
                }
            }
            FamilyKind::Skew { m } => {
                if m < 2 {
                    return input("skew matrix needs m ≥ 2");
                }
                // antidiagonal order: rows ascending, columns descending
                for i in 1..=m {
                    for j in (i + 1..=m).rev() {
                        labels.push(vec![i, j]);
                    }
                }
            }
            FamilyKind::Hankel { d, r } => {
                if d < 1 || r < 1 || r > d {
                    return input(format!("hankel({d},{r}) needs 1 ≤ r ≤ d"));
                }
                for i in 0..=d {
                    labels.push(vec![i]);
                }
            }
            FamilyKind::BlockHankel { d } => {
                if d < 1 {
                    return input("block_hankel needs d ≥ 1");
                }
                for i in 0..=d {
                    for j in 0..3 {
                        labels.push(vec![i, j]);
                    }
                }
            }
            FamilyKind::Scroll { d, k } => {
                if d < 1 || k < 1 {
                    return input("scroll needs d ≥ 1 and k ≥ 1");
                }
                for i in 0..=d {
                    for j in 0..=k {
                        labels.push(vec![i, j]);
                    }
                }
            }
            FamilyKind::Segre111 => {
                for code in [0b000, 0b111, 0b001, 0b010, 0b100, 0b011, 0b101, 0b110] {
                    labels.push(vec![code >> 2 & 1, code >> 1 & 1, code & 1]);
                }
            }
        }
        if labels.len() > super::MAX_VARS {
            return input(format!("{kind} has {} variables, more than {}", labels.len(), super::MAX_VARS));
        }
        let names = labels.iter().map(|l| label_name(prefix, l)).collect();
        Ok(MatrixFamily { kind, names, labels })
    }

    pub fn kind(&self) -> FamilyKind {
        self.kind
    }

    pub fn n_vars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn labels(&self) -> &[Vec<usize>] {
        &self.labels
    }

    /// Lex with the variables in the order they are listed.
    pub fn order(&self) -> TermOrder {
        TermOrder::lex(self.n_vars())
    }

    fn var(&self, label: &[usize]) -> Polynomial {
        let i = self.labels.iter().position(|l| l == label).expect("label in range");
        Polynomial::var(self.n_vars(), i)
    }

    /// The matrix whose `(k+1)`-minors (or `2(k+1)`-Pfaffians) generate
    /// the `k`-th secant ideal.
    pub fn matrix_at(&self, k: usize) -> PolyMatrix {
        let nv = self.n_vars();
        match self.kind {
            FamilyKind::Generic { m, n } => {
                (1..=m).map(|i| (1..=n).map(|j| self.var(&[i, j])).collect()).collect()
            }
            FamilyKind::Symmetric { m } => {
                (1..=m).map(|i| (1..=m).map(|j| self.var(&[i.min(j), i.max(j)])).collect()).collect()
            }
            FamilyKind::Skew { m } => (1..=m)
                .map(|i| {
                    (1..=m)
                        .map(|j| match i.cmp(&j) {
                            std::cmp::Ordering::Less => self.var(&[i, j]),
                            std::cmp::Ordering::Equal => Polynomial::zero(nv),
                            std::cmp::Ordering::Greater => self.var(&[j, i]).neg(),
                        })
                        .collect()
                })
                .collect(),
            FamilyKind::Hankel { d, .. } => {
                if k > d {
                    return Vec::new();
                }
                (0..=k).map(|i| (0..=d - k).map(|j| self.var(&[i + j])).collect()).collect()
            }
            FamilyKind::BlockHankel { d } => {
                let h = d / 2;
                let mut rows = Vec::new();
                for bi in 0..=h {
                    for a in 0..2 {
                        let mut row = Vec::new();
                        for bj in 0..=d - h {
                            for b in 0..2 {
                                row.push(self.var(&[bi + bj, a + b]));
                            }
                        }
                        rows.push(row);
                    }
                }
                rows
            }
            FamilyKind::Scroll { d, k: width } => {
                if k > d {
                    return Vec::new();
                }
                (0..=k)
                    .map(|i| {
                        (0..=d - k).flat_map(|q| (0..=width).map(move |j| (q + i, j))).map(|(a, b)| self.var(&[a, b])).collect()
                    })
                    .collect()
            }
            FamilyKind::Segre111 => Vec::new(),
        }
    }

    /// The matrix named by the family itself: `X_r` for `hankel(d,r)`,
    /// `X_1` for scrolls, the only matrix otherwise.
    pub fn default_matrix(&self) -> PolyMatrix {
        match self.kind {
            FamilyKind::Hankel { r, .. } => self.matrix_at(r),
            _ => self.matrix_at(1),
        }
    }

    pub fn is_skew(&self) -> bool {
        matches!(self.kind, FamilyKind::Skew { .. })
    }

    /// Generators of the `k`-th secant ideal as the family describes them.
    pub fn level_generators(&self, k: usize) -> Vec<Polynomial> {
        if k == 0 {
            return Vec::new();
        }
        match self.kind {
            FamilyKind::Segre111 => {
                if k == 1 {
                    self.segre_quadrics()
                } else {
                    Vec::new()
                }
            }
            FamilyKind::Skew { .. } => pfaffians_of_size(&self.matrix_at(k), 2 * (k + 1)),
            _ => minors_of_size(&self.matrix_at(k), k + 1),
        }
    }

    /// The ideal itself: 2-minors, 4-Pfaffians or the nine quadrics.
    pub fn ideal(&self) -> Vec<Polynomial> {
        self.level_generators(1)
    }

    fn segre_quadrics(&self) -> Vec<Polynomial> {
        let n = self.n_vars();
        let text = [
            "x001*x110 - x100*x011",
            "x010*x101 - x100*x011",
            "x111*x100 - x101*x110",
            "x111*x010 - x011*x110",
            "x111*x001 - x011*x101",
            "x000*x110 - x010*x100",
            "x000*x101 - x001*x100",
            "x000*x011 - x001*x010",
            "x000*x111 - x100*x011",
        ];
        let mut out: Vec<Polynomial> =
            text.iter().map(|t| Polynomial::parse(t, n, Some(&self.names)).expect("fixed quadrics parse")).collect();
        out.sort_by(|a, b| {
            let o = self.order();
            o.cmp(b.leading_monomial(&o).unwrap().exps(), a.leading_monomial(&o).unwrap().exps())
        });
        out
    }

    /// The poset whose antichain ideal is the predicted initial ideal.
    pub fn predicted_poset(&self) -> Option<Poset> {
        let n = self.n_vars();
        let l = &self.labels;
        let mut rel = Vec::new();
        match self.kind {
            FamilyKind::Generic { .. } | FamilyKind::Symmetric { .. } => {
                for a in 0..n {
                    for b in 0..n {
                        // (i,j) < (k,l) iff i ≥ k and j ≤ l
                        if a != b && l[a][0] >= l[b][0] && l[a][1] <= l[b][1] {
                            rel.push((a, b));
                        }
                    }
                }
            }
            FamilyKind::Skew { .. } => {
                for a in 0..n {
                    for b in 0..n {
                        if a != b && l[a][0] >= l[b][0] && l[a][1] >= l[b][1] {
                            rel.push((a, b));
                        }
                    }
                }
            }
            FamilyKind::Hankel { d, .. } => return Some(Poset::zigzag(d)),
            FamilyKind::BlockHankel { d } => {
                let idx = |i: usize, j: usize| 3 * i + j;
                for i in 0..=d {
                    if i % 2 == 0 {
                        rel.push((idx(i, 0), idx(i, 1)));
                        rel.push((idx(i, 2), idx(i, 1)));
                        if i >= 1 {
                            rel.push((idx(i, 1), idx(i - 1, 2)));
                            rel.push((idx(i, 0), idx(i - 1, 1)));
                        }
                        if i < d {
                            rel.push((idx(i, 1), idx(i + 1, 0)));
                            rel.push((idx(i, 2), idx(i + 1, 1)));
                        }
                    } else {
                        rel.push((idx(i, 1), idx(i, 0)));
                        rel.push((idx(i, 1), idx(i, 2)));
                    }
                }
            }
            FamilyKind::Scroll { .. } | FamilyKind::Segre111 => return None,
        }
        Some(build_poset(n, &rel).expect("acyclic by construction"))
    }

    /// The graph whose edge ideal is the predicted initial ideal of the
    /// 2-minors (4-Pfaffians, nine quadrics).
    pub fn predicted_graph(&self) -> Graph {
        let n = self.n_vars();
        match self.kind {
            FamilyKind::Scroll { .. } => {
                let mut edges = Vec::new();
                for a in 0..n {
                    for b in 0..n {
                        let (p, q) = (&self.labels[a], &self.labels[b]);
                        if q[0] > p[0] + 1 || (q[0] == p[0] + 1 && q[1] > p[1]) {
                            edges.push((a, b));
                        }
                    }
                }
                Graph::from_edges(n, &edges).expect("valid edges")
            }
            FamilyKind::Segre111 => {
                let o = self.order();
                let edges: Vec<(usize, usize)> = self
                    .segre_quadrics()
                    .iter()
                    .map(|q| {
                        let m = q.leading_monomial(&o).unwrap();
                        let s: Vec<usize> = (0..n).filter(|&i| m.exp(i) > 0).collect();
                        (s[0], s[1])
                    })
                    .collect();
                Graph::from_edges(n, &edges).expect("valid edges")
            }
            _ => self.predicted_poset().expect("poset family").incomparability_graph(),
        }
    }

    pub fn predicted_initial(&self) -> MonomialIdeal {
        edge_ideal(&self.predicted_graph().to_hypergraph())
    }

    /// The scroll poset on pairs: `(i1,j1) < (i2,j2)` iff `i2 > i1 + 1`, or
    /// `i2 = i1 + 1` and `j2 > j1`.
    pub fn scroll_poset(&self) -> Option<Poset> {
        if !matches!(self.kind, FamilyKind::Scroll { .. }) {
            return None;
        }
        let g = self.predicted_graph();
        let n = self.n_vars();
        let mut rel = Vec::new();
        for a in 0..n {
            for b in 0..n {
                let (p, q) = (&self.labels[a], &self.labels[b]);
                if g.has_edge(a, b) && (q[0] > p[0] + 1 || (q[0] == p[0] + 1 && q[1] > p[1])) {
                    rel.push((a, b));
                }
            }
        }
        build_poset(n, &rel).ok()
    }
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// Determinant of the submatrix on `rows` × `cols` by Laplace expansion
/// along the first row.
pub fn determinant(x: &PolyMatrix, rows: &[usize], cols: &[usize]) -> Polynomial {
    let nv = x[0][0].n();
    if rows.is_empty() {
        return Polynomial::constant(nv, Coeff::one());
    }
    let mut acc = Polynomial::zero(nv);
    let rest_rows = &rows[1..];
    for (k, &c) in cols.iter().enumerate() {
        let e = &x[rows[0]][c];
        if e.is_zero() {
            continue;
        }
        let rest_cols: Vec<usize> = cols.iter().copied().filter(|&cc| cc != c).collect();
        let term = e.mul(&determinant(x, rest_rows, &rest_cols)).expect("same ambient");
        acc = if k % 2 == 0 { acc.add(&term) } else { acc.sub(&term) }.expect("same ambient");
    }
    acc
}

/// Pfaffian of the principal submatrix on `idx` (even length).
pub fn pfaffian(y: &PolyMatrix, idx: &[usize]) -> Polynomial {
    let nv = y[0][0].n();
    if idx.is_empty() {
        return Polynomial::constant(nv, Coeff::one());
    }
    let mut acc = Polynomial::zero(nv);
    for j in 1..idx.len() {
        let e = &y[idx[0]][idx[j]];
        if e.is_zero() {
            continue;
        }
        let rest: Vec<usize> = idx[1..].iter().copied().filter(|&t| t != idx[j]).collect();
        let term = e.mul(&pfaffian(y, &rest)).expect("same ambient");
        acc = if j % 2 == 1 { acc.add(&term) } else { acc.sub(&term) }.expect("same ambient");
    }
    acc
}

fn normalize(p: Polynomial) -> Polynomial {
    match p.terms().first() {
        Some((_, c)) if c.is_negative() => p.neg(),
        _ => p,
    }
}

fn push_unique(out: &mut Vec<Polynomial>, p: Polynomial) {
    if p.is_zero() {
        return;
    }
    let p = normalize(p);
    if !out.contains(&p) {
        out.push(p);
    }
}

/// All nonzero `t × t` minors, up to sign, without repeats.
pub fn minors_of_size(x: &PolyMatrix, t: usize) -> Vec<Polynomial> {
    let mut out = Vec::new();
    if x.is_empty() || t == 0 || t > x.len() || t > x[0].len() {
        return out;
    }
    for rows in subsets(x.len(), t) {
        for cols in subsets(x[0].len(), t) {
            push_unique(&mut out, determinant(x, &rows, &cols));
        }
    }
    out
}

/// All minors of size at least `t`.
pub fn minors_at_least(x: &PolyMatrix, t: usize) -> Result<Vec<Polynomial>> {
    if t == 0 {
        return input("minor size must be positive");
    }
    let max = x.len().min(x.first().map_or(0, Vec::len));
    if t > max {
        return input(format!("no {t}×{t} minors in a {}×{} matrix", x.len(), x.first().map_or(0, Vec::len)));
    }
    let mut out = Vec::new();
    for s in t..=max {
        for p in minors_of_size(x, s) {
            push_unique(&mut out, p);
        }
    }
    Ok(out)
}

fn is_skew(y: &PolyMatrix) -> bool {
    let m = y.len();
    y.iter().all(|row| row.len() == m)
        && (0..m).all(|i| (0..m).all(|j| y[i][j] == y[j][i].neg()))
}

/// All `size × size` sub-Pfaffians (`size` even).
pub fn pfaffians_of_size(y: &PolyMatrix, size: usize) -> Vec<Polynomial> {
    let mut out = Vec::new();
    if size == 0 || size % 2 == 1 || size > y.len() {
        return out;
    }
    for idx in subsets(y.len(), size) {
        push_unique(&mut out, pfaffian(y, &idx));
    }
    out
}

/// All sub-Pfaffians of even size at least `size`.
pub fn pfaffians_at_least(y: &PolyMatrix, size: usize) -> Result<Vec<Polynomial>> {
    if !is_skew(y) {
        return input("Pfaffians need a skew-symmetric matrix");
    }
    if size == 0 || size % 2 == 1 {
        return input(format!("Pfaffian size {size} must be even and positive"));
    }
    if size > y.len() {
        return input(format!("no {size}×{size} Pfaffians in a {0}×{0} matrix", y.len()));
    }
    let mut out = Vec::new();
    for s in (size..=y.len()).step_by(2) {
        for p in pfaffians_of_size(y, s) {
            push_unique(&mut out, p);
        }
    }
    Ok(out)
}

/// Leading monomials of all maximal minors (all maximal Pfaffians for a
/// skew matrix) that are not the expected diagonal product.
pub fn off_diagonal_leads(x: &PolyMatrix, order: &TermOrder, antidiagonal: bool) -> Vec<Monomial> {
    let mut bad = Vec::new();
    if x.is_empty() {
        return bad;
    }
    let nv = x[0][0].n();
    let monomial_of = |cells: &[(usize, usize)]| -> Option<Monomial> {
        let mut m = Monomial::one(nv);
        for &(i, j) in cells {
            let e = &x[i][j];
            if e.len() != 1 {
                return None;
            }
            m = m.mul(&e.terms()[0].0);
        }
        Some(m)
    };
    if antidiagonal {
        let m = x.len();
        for size in (4..=m).step_by(2) {
            for idx in subsets(m, size) {
                let p = pfaffian(x, &idx);
                let cells: Vec<(usize, usize)> = (0..size / 2).map(|t| (idx[t], idx[size - 1 - t])).collect();
                let lead = p.leading_monomial(order).cloned();
                if lead != monomial_of(&cells) {
                    bad.extend(lead);
                }
            }
        }
        return bad;
    }
    let t = x.len().min(x[0].len());
    for rows in subsets(x.len(), t) {
        for cols in subsets(x[0].len(), t) {
            let p = determinant(x, &rows, &cols);
            if p.is_zero() {
                continue;
            }
            let cells: Vec<(usize, usize)> = rows.iter().copied().zip(cols.iter().copied()).collect();
            let lead = p.leading_monomial(order).cloned();
            if lead != monomial_of(&cells) {
                bad.extend(lead);
            }
        }
    }
    bad
}


#[cfg(test)]
mod tests {
    use super::*;

    fn fam(s: &str) -> MatrixFamily {
        MatrixFamily::new(FamilyKind::parse(s).unwrap()).unwrap()
    }

    #[test]
    fn generic_two_by_two() {
        let f = fam("generic(2,2)");
        let ms = minors_at_least(&f.matrix_at(1), 2).unwrap();
        assert_eq!(ms.len(), 1);
        assert_eq!(ms[0].display_with(f.names(), None).to_string(), "x11*x22 - x12*x21");
    }

    #[test]
    fn skew_four_pfaffian() {
        let f = fam("skew(4)");
        let ps = pfaffians_at_least(&f.matrix_at(1), 4).unwrap();
        assert_eq!(ps.len(), 1);
        let expected = Polynomial::parse("y12*y34 - y13*y24 + y14*y23", 6, Some(f.names())).unwrap();
        assert_eq!(normalize(expected), ps[0]);
        assert!(pfaffians_at_least(&fam("generic(3,3)").matrix_at(1), 2).is_err());
    }

    #[test]
    fn pfaffian_squares_to_determinant() {
        for m in [4, 6] {
            let f = fam(&format!("skew({m})"));
            let y = f.matrix_at(1);
            let all: Vec<usize> = (0..m).collect();
            let pf = pfaffian(&y, &all);
            assert_eq!(pf.pow(2), determinant(&y, &all, &all), "skew({m})");
        }
    }

    #[test]
    fn hankel_three_by_three() {
        let f = fam("hankel(4,2)");
        let x = f.matrix_at(2);
        assert_eq!((x.len(), x[0].len()), (3, 3));
        let ms = minors_at_least(&x, 3).unwrap();
        assert_eq!(ms.len(), 1);
        // cofactor expansion along the first column, computed independently
        let v = |i| Polynomial::var(5, i);
        let m2 = |a: usize, b: usize, c: usize, d: usize| v(a).mul(&v(d)).unwrap().sub(&v(b).mul(&v(c)).unwrap()).unwrap();
        let det = v(0)
            .mul(&m2(2, 3, 3, 4))
            .unwrap()
            .sub(&v(1).mul(&m2(1, 2, 3, 4)).unwrap())
            .unwrap()
            .add(&v(2).mul(&m2(1, 2, 2, 3)).unwrap())
            .unwrap();
        assert_eq!(ms[0], normalize(det));
    }

    #[test]
    fn diagonal_orders() {
        for s in ["generic(3,3)", "generic(2,4)", "symmetric(3)", "hankel(5,2)", "block_hankel(3)", "scroll(3,2)"] {
            let f = fam(s);
            for k in 1..3 {
                let x = f.matrix_at(k);
                if x.is_empty() || x.len() > x[0].len() && k > 1 {
                    continue;
                }
                assert!(off_diagonal_leads(&x, &f.order(), false).is_empty(), "{s} at level {k}");
            }
        }
        let f = fam("skew(6)");
        assert!(off_diagonal_leads(&f.matrix_at(1), &f.order(), true).is_empty());
    }

    #[test]
    fn block_hankel_shape() {
        let f = fam("block_hankel(3)");
        let x = f.matrix_at(1);
        assert_eq!((x.len(), x[0].len()), (4, 6));
        assert_eq!(f.n_vars(), 12);
        let p = f.predicted_poset().unwrap();
        assert_eq!(p.covers().len(), 14);
    }

    #[test]
    fn parse_rejects_unknown() {
        assert!(FamilyKind::parse("hilbert(3)").is_err());
        assert!(FamilyKind::parse("generic(3)").is_err());
        assert!(FamilyKind::parse("hankel(2,3)").is_err());
        assert_eq!(FamilyKind::parse("hankel(4)").unwrap().to_string(), "hankel(4,1)");
    }
}
