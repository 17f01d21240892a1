//! Alexander matrices of diagrams and their determinants.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Signed;
use thiserror::Error;

use crate::diagram::{ArcLabeling, CrossingIncidence, Diagram, DiagramError, Sign};
use crate::laurent::{LaurentError, LaurentPoly};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlexanderError {
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error(transparent)]
    Laurent(#[from] LaurentError),
}

/// Square matrix over `Z[u±, v±]`. Rows come in pairs per crossing (ordered by
/// crossing id), columns follow an [`ArcLabeling`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlexMatrix {
    rows: Vec<Vec<LaurentPoly>>,
}

impl AlexMatrix {
    pub fn from_rows(rows: Vec<Vec<LaurentPoly>>) -> Self {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "matrix must be square");
        AlexMatrix { rows }
    }

    pub fn order(&self) -> usize {
        self.rows.len()
    }

    pub fn get(&self, r: usize, c: usize) -> &LaurentPoly {
        &self.rows[r][c]
    }

    pub fn rows(&self) -> &[Vec<LaurentPoly>] {
        &self.rows
    }

    pub fn swap_columns(&mut self, a: usize, b: usize) {
        for r in &mut self.rows {
            r.swap(a, b);
        }
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        self.rows.swap(a, b);
    }
}

/// Two relation rows per crossing.
///
/// Positive: `in_under + u·in_over − u·out_under − out_over` and `−in_over + v·out_over`.
/// Negative: `in_over + u·in_under − u·out_over − out_under` and `v·in_over − out_over`.
/// Coinciding arcs add up in their shared column.
pub fn build_matrix(incidence: &[CrossingIncidence], labeling: &ArcLabeling) -> AlexMatrix {
    let n = labeling.len();
    assert_eq!(n, 2 * incidence.len(), "labeling must cover 2n arcs");
    let col = labeling.columns();
    let one = LaurentPoly::one;
    let u = LaurentPoly::u;
    let v = LaurentPoly::v;
    let mut rows = Vec::with_capacity(n);
    for c in incidence {
        let mut a = vec![LaurentPoly::zero(); n];
        let mut b = vec![LaurentPoly::zero(); n];
        let (a_terms, b_terms) = match c.sign {
            Sign::Positive => (
                [(c.in_under, one()), (c.in_over, u()), (c.out_under, -u()), (c.out_over, -one())],
                [(c.in_over, -one()), (c.out_over, v())],
            ),
            Sign::Negative => (
                [(c.in_over, one()), (c.in_under, u()), (c.out_over, -u()), (c.out_under, -one())],
                [(c.in_over, v()), (c.out_over, -one())],
            ),
        };
        for (arc, e) in a_terms {
            a[col[arc - 1]] += e;
        }
        for (arc, e) in b_terms {
            b[col[arc - 1]] += e;
        }
        rows.push(a);
        rows.push(b);
    }
    AlexMatrix { rows }
}

/// Exact determinant.
///
/// Unit entries (`±u^i v^j`) are eliminated first, choosing pivots of least
/// Markowitz cost so the sparse rows stay sparse. The dense remainder goes
/// through fraction-free Bareiss elimination with exact division.
pub fn determinant(m: &AlexMatrix) -> LaurentPoly {
    let n = m.order();
    if n == 0 {
        return LaurentPoly::one();
    }
    let mut rows: Vec<BTreeMap<usize, LaurentPoly>> = m
        .rows
        .iter()
        .map(|r| r.iter().enumerate().filter(|(_, e)| !e.is_zero()).map(|(c, e)| (c, e.clone())).collect())
        .collect();
    let mut live_rows: Vec<usize> = (0..n).collect();
    let mut live_cols: Vec<usize> = (0..n).collect();
    let mut acc = LaurentPoly::one();

    loop {
        let mut col_count = vec![0usize; n];
        for &r in &live_rows {
            if rows[r].is_empty() {
                return LaurentPoly::zero();
            }
            for &c in rows[r].keys() {
                col_count[c] += 1;
            }
        }
        if live_cols.iter().any(|&c| col_count[c] == 0) {
            return LaurentPoly::zero();
        }
        let mut best: Option<(usize, usize, usize)> = None;
        for &r in &live_rows {
            let rc = rows[r].len() - 1;
            for (&c, e) in &rows[r] {
                if e.is_unit() {
                    let cost = rc * (col_count[c] - 1);
                    if best.is_none_or(|b| cost < b.0) {
                        best = Some((cost, r, c));
                    }
                }
            }
        }
        let Some((_, pr, pc)) = best else { break };
        let pivot_row = rows[pr].clone();
        let pivot = &pivot_row[&pc];
        let ri = live_rows.iter().position(|&r| r == pr).unwrap();
        let ci = live_cols.iter().position(|&c| c == pc).unwrap();
        acc = &acc * pivot;
        if (ri + ci) % 2 == 1 {
            acc = -acc;
        }
        live_rows.remove(ri);
        live_cols.remove(ci);
        for &r in &live_rows {
            let Some(e) = rows[r].remove(&pc) else { continue };
            let f = e.exact_div(pivot).expect("unit pivot");
            for (&c, x) in &pivot_row {
                if c == pc {
                    continue;
                }
                let prod = &f * x;
                let slot = rows[r].entry(c).or_insert_with(LaurentPoly::zero);
                *slot -= &prod;
                if slot.is_zero() {
                    rows[r].remove(&c);
                }
            }
        }
        if live_rows.is_empty() {
            return acc;
        }
    }

    let dense: Vec<Vec<LaurentPoly>> = live_rows
        .iter()
        .map(|&r| live_cols.iter().map(|c| rows[r].get(c).cloned().unwrap_or_default()).collect())
        .collect();
    &acc * &bareiss(dense)
}

/// Fraction-free Gaussian elimination. Columns are first shifted by monomials
/// so every entry is a polynomial; the shifts are undone at the end.
fn bareiss(mut m: Vec<Vec<LaurentPoly>>) -> LaurentPoly {
    let n = m.len();
    let (mut su, mut sv) = (0i64, 0i64);
    for c in 0..n {
        let lo_u = m.iter().filter_map(|r| r[c].min_u()).min().unwrap_or(0);
        let lo_v = m.iter().filter_map(|r| r[c].min_v()).min().unwrap_or(0);
        let (du, dv) = ((-lo_u).max(0), (-lo_v).max(0));
        if du != 0 || dv != 0 {
            for r in m.iter_mut() {
                r[c] = r[c].shift(du, dv);
            }
            su += du;
            sv += dv;
        }
    }
    let mut negate = false;
    let mut prev = LaurentPoly::one();
    for k in 0..n {
        if m[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return LaurentPoly::zero();
            };
            m.swap(k, swap);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &(&m[i][j] * &m[k][k]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = t.exact_div(&prev).expect("Bareiss division is exact");
            }
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].shift(-su, -sv);
    if negate {
        -det
    } else {
        det
    }
}

/// Cofactor expansion along the sparsest row. Exponential; meant for small
/// matrices and cross-checks.
pub fn laplace(m: &AlexMatrix) -> LaurentPoly {
    let rows: Vec<usize> = (0..m.order()).collect();
    let cols: Vec<usize> = (0..m.order()).collect();
    laplace_rec(m, &rows, &cols)
}

fn laplace_rec(m: &AlexMatrix, rows: &[usize], cols: &[usize]) -> LaurentPoly {
    if rows.is_empty() {
        return LaurentPoly::one();
    }
    let (ri, _) = rows
        .iter()
        .enumerate()
        .min_by_key(|(_, &r)| cols.iter().filter(|&&c| !m.rows[r][c].is_zero()).count())
        .unwrap();
    let r = rows[ri];
    let sub_rows: Vec<usize> = rows.iter().copied().filter(|&x| x != r).collect();
    let mut acc = LaurentPoly::zero();
    for (ci, &c) in cols.iter().enumerate() {
        let e = &m.rows[r][c];
        if e.is_zero() {
            continue;
        }
        let sub_cols: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
        let term = e * &laplace_rec(m, &sub_rows, &sub_cols);
        if (ri + ci) % 2 == 0 {
            acc += term;
        } else {
            acc -= &term;
        }
    }
    acc
}

/// Δ₀ under the traversal labeling.
pub fn delta0_diagram(d: &Diagram) -> LaurentPoly {
    delta0_labeled(d, &ArcLabeling::traversal(d.arc_count()))
}

pub fn delta0_labeled(d: &Diagram, labeling: &ArcLabeling) -> LaurentPoly {
    let (_, inc) = d.derive_incidence();
    determinant(&build_matrix(&inc, labeling))
}

/// `(u−1)(v−1)(uv−1)` for knots, `(u−1)(v−1)` for links.
pub fn trivial_factor(is_knot: bool) -> LaurentPoly {
    let one = LaurentPoly::one();
    let f = &(LaurentPoly::u() - one.clone()) * &(LaurentPoly::v() - one.clone());
    if is_knot {
        &f * &(LaurentPoly::uv_pow(1) - one)
    } else {
        f
    }
}

/// Δ̄₀: Δ₀ divided by its guaranteed factor.
pub fn delta_bar(p: &LaurentPoly, is_knot: bool) -> Result<LaurentPoly, LaurentError> {
    p.exact_div(&trivial_factor(is_knot))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantReport {
    pub components: usize,
    pub crossings: usize,
    /// determinant under the traversal labeling
    pub delta0: LaurentPoly,
    /// trivial factor times the normalized Δ̄₀
    pub delta0_normalized: LaurentPoly,
    pub delta_bar: LaurentPoly,
    pub delta_bar_normalized: LaurentPoly,
    pub delta_bar_at_minus_one: BigInt,
    /// knots only
    pub odd_writhe: Option<i64>,
    /// knots only: `2·|Δ̄₀(−1,−1)| = |OW|`
    pub conjecture_holds: Option<bool>,
}

pub fn invariant_report(d: &Diagram) -> Result<InvariantReport, AlexanderError> {
    report_from_delta0(d, delta0_diagram(d))
}

/// Builds a report around a Δ₀ value obtained elsewhere (for instance from a
/// closed form) for the diagram `d`.
pub fn report_from_delta0(d: &Diagram, delta0: LaurentPoly) -> Result<InvariantReport, AlexanderError> {
    let knot = d.is_knot();
    let delta_bar = delta_bar(&delta0, knot)?;
    let dbar_norm = delta_bar.normalized();
    let at = dbar_norm.eval_minus_one();
    let ow = if knot { Some(d.odd_writhe()?) } else { None };
    let holds = ow.map(|w| BigInt::from(2) * at.abs() == BigInt::from(w).abs());
    Ok(InvariantReport {
        components: d.component_count(),
        crossings: d.crossing_count(),
        delta0_normalized: &trivial_factor(knot) * &dbar_norm,
        delta0,
        delta_bar,
        delta_bar_normalized: dbar_norm,
        delta_bar_at_minus_one: at,
        odd_writhe: ow,
        conjecture_holds: holds,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::parse_poly;
    use proptest::prelude::*;

    fn p(s: &str) -> LaurentPoly {
        parse_poly(s).unwrap()
    }

    fn d(s: &str) -> Diagram {
        s.parse().unwrap()
    }

    fn mat(rows: &[&[&str]]) -> AlexMatrix {
        AlexMatrix::from_rows(rows.iter().map(|r| r.iter().map(|e| p(e)).collect()).collect())
    }

    /// Sum over permutations, independent of both elimination routines.
    fn leibniz(m: &AlexMatrix) -> LaurentPoly {
        fn go(m: &AlexMatrix, row: usize, used: &mut Vec<bool>, perm: &mut Vec<usize>, acc: &mut LaurentPoly) {
            let n = m.order();
            if row == n {
                let mut inversions = 0;
                for i in 0..n {
                    for j in i + 1..n {
                        if perm[i] > perm[j] {
                            inversions += 1;
                        }
                    }
                }
                let mut t = LaurentPoly::one();
                for (r, &c) in perm.iter().enumerate() {
                    t = &t * m.get(r, c);
                }
                if inversions % 2 == 0 {
                    *acc += t;
                } else {
                    *acc -= &t;
                }
                return;
            }
            for c in 0..n {
                if !used[c] && !m.get(row, c).is_zero() {
                    used[c] = true;
                    perm.push(c);
                    go(m, row + 1, used, perm, acc);
                    perm.pop();
                    used[c] = false;
                }
            }
        }
        let mut acc = LaurentPoly::zero();
        go(m, 0, &mut vec![false; m.order()], &mut Vec::new(), &mut acc);
        acc
    }

    #[test]
    fn small_determinants() {
        assert_eq!(determinant(&mat(&[&["u", "0"], &["0", "v"]])), p("u*v"));
        assert_eq!(determinant(&mat(&[&["2", "3"], &["4", "5"]])), p("-2"));
        assert_eq!(determinant(&mat(&[&["u", "u"], &["v", "v"]])), p("0"));
        assert_eq!(determinant(&mat(&[&["0", "1"], &["1", "0"]])), p("-1"));
        assert_eq!(determinant(&mat(&[&["2*u", "3"], &["4", "5*v"]])), p("10*u*v - 12"));
    }

    #[test]
    fn virtual_trefoil_matrix() {
        let m =
            mat(&[&["-1", "u", "1", "-u"], &["v", "-1", "0", "0"], &["1", "-1", "-u", "u"], &["0", "v", "0", "-1"]]);
        let expected = p("-1 + u + v - u^2*v - u*v^2 + u^2*v^2");
        assert_eq!(determinant(&m), expected);
        assert_eq!(laplace(&m), expected);
        assert_eq!(leibniz(&m), expected);
    }

    #[test]
    fn kink_rows() {
        // positive kink, over first, arcs a1 -> a2 -> a3 in a longer strand
        let inc = [CrossingIncidence {
            crossing: 1,
            sign: Sign::Positive,
            in_over: 1,
            out_over: 2,
            in_under: 2,
            out_under: 3,
        }];
        let cols = vec![1, 2, 3, 4];
        let lab = ArcLabeling::from_order(cols);
        let padded = [
            inc[0],
            CrossingIncidence { crossing: 2, sign: Sign::Positive, in_over: 4, out_over: 4, in_under: 4, out_under: 4 },
        ];
        let m = build_matrix(&padded, &lab);
        assert_eq!(m.rows()[0][..3], [p("u"), p("0"), p("-u")]);
        assert_eq!(m.rows()[1][..3], [p("-1"), p("v"), p("0")]);
    }

    #[test]
    fn twist_type_one_rows() {
        // over strand x_{2i+2} -> x_{2i}, under strand x_{2i-1} -> x_{2i+1}
        let inc = [
            CrossingIncidence { crossing: 1, sign: Sign::Positive, in_over: 4, out_over: 2, in_under: 1, out_under: 3 },
            CrossingIncidence { crossing: 2, sign: Sign::Positive, in_over: 1, out_over: 1, in_under: 1, out_under: 1 },
        ];
        let m = build_matrix(&inc, &ArcLabeling::traversal(4));
        assert_eq!(m.rows()[0], vec![p("1"), p("-1"), p("-u"), p("u")]);
        assert_eq!(m.rows()[1], vec![p("0"), p("v"), p("0"), p("-1")]);
    }

    #[test]
    fn virtual_hopf_links() {
        let plus = d("O1+;U1+");
        assert_eq!(delta0_diagram(&plus), p("(u*v) - u - v + 1"));
        assert_eq!(delta_bar(&delta0_diagram(&plus), false).unwrap(), p("1"));
        let minus = d("O1-;U1-");
        assert_eq!(delta0_diagram(&minus), -p("u*v - u - v + 1"));
        // switching keeps the under strand first, which swaps the two columns
        let switched = plus.switch_crossing(1).unwrap();
        assert_eq!(delta0_diagram(&switched), -delta0_diagram(&minus));
    }

    #[test]
    fn delta0_examples() {
        let vt1 = d("O1+U2+U1+O2+");
        let dv = delta0_diagram(&vt1);
        assert!(dv.equal_up_to_unit(&p("-1 + u + v - u^2*v - u*v^2 + u^2*v^2")));
        assert!(delta_bar(&dv, true).unwrap().is_unit());
        assert!(delta0_diagram(&d("O1+U2+O3+U1+O2+U3+")).is_zero());
        assert!(delta0_diagram(&d("O1-U2+O4+U1-O3-U4+O2+U3-")).is_zero());
        assert!(delta_bar(&LaurentPoly::zero(), true).unwrap().is_zero());
    }

    #[test]
    fn report_for_virtual_trefoil() {
        let r = invariant_report(&d("O1+U2+U1+O2+")).unwrap();
        assert_eq!(r.delta_bar_normalized, p("1"));
        assert_eq!(r.odd_writhe, Some(2));
        assert_eq!(r.conjecture_holds, Some(true));
        assert_eq!(r.delta0_normalized, trivial_factor(true));
        let link = invariant_report(&d("O1+;U1+")).unwrap();
        assert_eq!(link.odd_writhe, None);
        assert_eq!(link.conjecture_holds, None);
    }

    #[test]
    fn column_swap_negates_and_row_pair_swap_preserves() {
        let g = d("O1+U2-O3+U1+O2-U3+");
        let (_, inc) = g.derive_incidence();
        let m = build_matrix(&inc, &ArcLabeling::traversal(6));
        let det = determinant(&m);
        let mut swapped = m.clone();
        swapped.swap_columns(0, 4);
        assert_eq!(determinant(&swapped), -det.clone());
        let mut pairs = m.clone();
        pairs.swap_rows(0, 2);
        pairs.swap_rows(1, 3);
        assert_eq!(determinant(&pairs), det);
    }

    fn arb_entry() -> impl Strategy<Value = LaurentPoly> {
        prop_oneof![
            3 => Just(LaurentPoly::zero()),
            2 => (-1i64..=1, -1i64..=1, prop_oneof![Just(-1i64), Just(1)]).prop_map(|(i, j, c)| LaurentPoly::term(c, i, j)),
            2 => prop::collection::vec((-3i64..=3, -1i64..=2, -1i64..=2), 1..3).prop_map(LaurentPoly::from_terms),
        ]
    }

    fn arb_matrix() -> impl Strategy<Value = AlexMatrix> {
        (1usize..=6).prop_flat_map(|n| {
            prop::collection::vec(prop::collection::vec(arb_entry(), n), n).prop_map(AlexMatrix::from_rows)
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(96))]
        #[test]
        fn determinant_matches_leibniz(m in arb_matrix()) {
            let expected = leibniz(&m);
            prop_assert_eq!(determinant(&m), expected.clone());
            prop_assert_eq!(laplace(&m), expected);
        }
    }
}
