use broadcast_core::pattern::is_dominating_tower_exhaustive;
use broadcast_core::{
    ball_bijection, is_dominating_tower, parse_graph_expr, reception_map, tuple_decode, tuple_encode, BroadcastSet,
    LatticePoint, Params, SublatticePattern, TowerPattern,
};
use proptest::prelude::*;

fn point() -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-6i64..=6, 0..8)
}

fn nonsingular(n: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    prop::collection::vec(prop::collection::vec(-7i64..=7, n), n).prop_filter("singular", |cols| det(cols) != 0)
}

fn det(m: &[Vec<i64>]) -> i64 {
    match m.len() {
        1 => m[0][0],
        2 => m[0][0] * m[1][1] - m[0][1] * m[1][0],
        _ => (0..m.len())
            .map(|j| {
                let minor: Vec<Vec<i64>> = m[1..]
                    .iter()
                    .map(|row| row.iter().enumerate().filter(|&(k, _)| k != j).map(|(_, &v)| v).collect())
                    .collect();
                let sign = if j % 2 == 0 { 1 } else { -1 };
                sign * m[0][j] * det(&minor)
            })
            .sum(),
    }
}

// Column operations that keep the generated lattice fixed.
fn shuffle(cols: &[Vec<i64>], ops: &[(usize, usize, i64)]) -> Vec<Vec<i64>> {
    let mut c = cols.to_vec();
    let n = c.len();
    for &(a, b, k) in ops {
        let (a, b) = (a % n, b % n);
        if a == b {
            c[a].iter_mut().for_each(|x| *x = -*x);
        } else {
            let src = c[b].clone();
            c[a].iter_mut().zip(&src).for_each(|(x, y)| *x += k * y);
        }
    }
    c
}

proptest! {
    #[test]
    fn tuple_round_trip(p in point()) {
        let lp = LatticePoint(p.clone());
        let seq = tuple_encode(&lp);
        prop_assert_eq!(seq.distance_sum(), lp.l1_norm());
        prop_assert!(seq.dimension_sum() as usize <= p.len());
        prop_assert_eq!(tuple_decode(&seq, p.len()).unwrap(), lp);
    }

    #[test]
    fn bijection_is_an_involution(p in point(), slack in 0usize..4) {
        let lp = LatticePoint(p.clone());
        let (n, d) = (p.len(), lp.l1_norm() as usize + slack);
        let image = ball_bijection(&lp, n, d).unwrap();
        prop_assert_eq!(image.dim(), d);
        prop_assert!(image.l1_norm() as usize <= n);
        prop_assert_eq!(ball_bijection(&image, d, n).unwrap(), lp);
    }

    #[test]
    fn hnf_is_canonical(cols in (1usize..=3).prop_flat_map(nonsingular),
                        ops in prop::collection::vec((0usize..3, 0usize..3, -3i64..=3), 0..8)) {
        let a = SublatticePattern::from_columns(&cols).unwrap();
        let b = SublatticePattern::from_columns(&shuffle(&cols, &ops)).unwrap();
        prop_assert_eq!(&a, &b);
        prop_assert_eq!(a.index(), det(&cols).unsigned_abs());
        let h = a.basis();
        for (i, row) in h.iter().enumerate() {
            prop_assert!(row[i] > 0);
            for (j, &x) in row.iter().enumerate() {
                if j < i {
                    prop_assert_eq!(x, 0);
                } else if j > i {
                    prop_assert!(0 <= x && x < row[i]);
                }
            }
        }
        for c in &cols {
            prop_assert!(a.contains(c));
        }
    }

    #[test]
    fn reduction_lands_in_the_box(cols in (1usize..=3).prop_flat_map(nonsingular),
                                  v in prop::collection::vec(-40i64..=40, 3)) {
        let sp = SublatticePattern::from_columns(&cols).unwrap();
        let v = &v[..sp.n()];
        let mut w = v.to_vec();
        sp.reduce(&mut w);
        for (i, &x) in w.iter().enumerate() {
            prop_assert!(0 <= x && x < sp.basis()[i][i]);
        }
        let diff: Vec<i64> = v.iter().zip(&w).map(|(a, b)| a - b).collect();
        prop_assert!(sp.contains(&diff));
    }

    #[test]
    fn optimized_tower_check_agrees(t in 1u32..=7, rr in 0u32..7, d in 1u64..=40, e in 0u64..40) {
        let p = Params::new(t, 1 + rr % t).unwrap();
        let tp = TowerPattern { d, e: e % d };
        prop_assert_eq!(is_dominating_tower(p, tp), is_dominating_tower_exhaustive(p, tp));
    }

    #[test]
    fn reception_is_linear(a in prop::collection::btree_set(0usize..20, 0..6),
                           b in prop::collection::btree_set(0usize..20, 0..6), t in 1u32..5) {
        let g = parse_graph_expr("P4*C5").unwrap();
        let only_b: Vec<usize> = b.difference(&a).copied().collect();
        let sa = BroadcastSet::new(a.iter().copied().collect());
        let sb = BroadcastSet::new(only_b);
        let ra = reception_map(&g, &sa, t).unwrap();
        let rb = reception_map(&g, &sb, t).unwrap();
        let ru = reception_map(&g, &sa.union(&sb), t).unwrap();
        for v in 0..g.order() {
            prop_assert_eq!(ru[v], ra[v] + rb[v]);
        }
    }
}
