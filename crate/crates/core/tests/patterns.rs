use broadcast_core::pattern::{is_dominating_tower_exhaustive, lattice_reception_profile};
use broadcast_core::{
    is_dominating_lattice, is_dominating_tower, lattice_search_3d, max_potential_d, min_density_search,
    reception_table, tower_reception, Params, SublatticePattern, TowerPattern,
};
use num_traits::ToPrimitive;

fn p(t: u32, r: u32) -> Params {
    Params::new(t, r).unwrap()
}

// Reception at (i, 0) found by scanning every lattice point of the window
// |x - i| + |y| < t and testing tower membership directly.
fn window_reception(p: Params, d: i64, e: i64, i: i64) -> u64 {
    let t = i64::from(p.t());
    let mut total = 0;
    for y in -(t - 1)..t {
        for x in (i - t)..=(i + t) {
            let dist = (x - i).abs() + y.abs();
            if dist < t && (x - y * e).rem_euclid(d) == 0 {
                total += (t - dist) as u64;
            }
        }
    }
    total
}

fn window_dominates(p: Params, d: i64, e: i64) -> bool {
    (0..d).all(|i| window_reception(p, d, e, i) >= u64::from(p.r()))
}

// Fifty fixed (t, r, d, e) tuples spread over small and mid-sized parameters.
fn fixed_tuples() -> Vec<(u32, u32, u64, u64)> {
    let mut out = Vec::new();
    let mut state = 12345u64;
    while out.len() < 50 {
        state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        let t = 1 + (state >> 33) % 9;
        let r = 1 + (state >> 17) % t;
        let d = 1 + (state >> 40) % 60;
        let e = (state >> 7) % d;
        out.push((t as u32, r as u32, d, e));
    }
    out.push((4, 2, 18, 5));
    out.push((4, 2, 19, 7));
    out
}

#[test]
fn tower_verifier_matches_window_simulation() {
    for (t, r, d, e) in fixed_tuples() {
        let pp = p(t, r);
        let tp = TowerPattern::new(d, e).unwrap();
        for i in 0..d {
            assert_eq!(tower_reception(pp, tp, i).unwrap(), window_reception(pp, d as i64, e as i64, i as i64));
        }
        let expect = window_dominates(pp, d as i64, e as i64);
        assert_eq!(is_dominating_tower(pp, tp), expect, "({t},{r}) T({d},{e})");
        assert_eq!(is_dominating_tower_exhaustive(pp, tp), expect);
    }
}

#[test]
fn tower_verifier_matches_window_exhaustively_small() {
    for t in 1..=5 {
        for r in 1..=t {
            for d in 1..=30 {
                for e in 0..d {
                    let tp = TowerPattern { d, e };
                    assert_eq!(
                        is_dominating_tower(p(t, r), tp),
                        window_dominates(p(t, r), d as i64, e as i64),
                        "({t},{r}) {tp}"
                    );
                }
            }
        }
    }
}

#[test]
fn table_two_sums() {
    let prof = reception_table(p(4, 2), TowerPattern::new(18, 5).unwrap());
    assert_eq!(prof.receptions, vec![4, 3, 2, 3, 2, 3, 2, 2, 2, 2, 2, 2, 2, 3, 2, 3, 2, 3]);
    let rows = prof.rows.as_ref().unwrap();
    assert_eq!(rows.len(), 7);
    assert_eq!(rows[0].y, 3);
    assert_eq!(rows[6].y, -3);
    for (i, &x) in prof.receptions.iter().enumerate() {
        assert_eq!(rows.iter().map(|row| row.contributions[i]).sum::<u64>(), x);
    }
}

#[test]
fn tower_and_lattice_profiles_agree() {
    for (t, r, d, e) in fixed_tuples().into_iter().take(20) {
        let tower = reception_table(p(t, r), TowerPattern { d, e });
        let lat = lattice_reception_profile(p(t, r), &SublatticePattern::tower(d, e).unwrap()).unwrap();
        assert_eq!(tower.receptions, lat.receptions, "({t},{r}) T({d},{e})");
    }
}

#[test]
fn domination_is_monotone_in_t_and_r() {
    for (t, r, d, e) in fixed_tuples() {
        let tp = TowerPattern { d, e };
        if is_dominating_tower(p(t, r), tp) {
            assert!(is_dominating_tower(p(t + 1, r), tp));
            if r > 1 {
                assert!(is_dominating_tower(p(t, r - 1), tp));
            }
        }
    }
}

const TABLE3: [[u64; 9]; 9] = [
    [1, 0, 0, 0, 0, 0, 0, 0, 0],
    [5, 3, 0, 0, 0, 0, 0, 0, 0],
    [13, 8, 5, 0, 0, 0, 0, 0, 0],
    [25, 18, 13, 10, 0, 0, 0, 0, 0],
    [41, 32, 25, 18, 14, 0, 0, 0, 0],
    [61, 50, 41, 34, 26, 22, 0, 0, 0],
    [85, 72, 61, 50, 42, 36, 29, 0, 0],
    [113, 98, 85, 74, 62, 54, 43, 39, 0],
    [145, 128, 113, 98, 86, 76, 65, 58, 49],
];

#[test]
fn reciprocal_densities() {
    for t in 1..=9u32 {
        for r in 1..=t {
            let tp = min_density_search(p(t, r)).unwrap();
            assert_eq!(tp.d, TABLE3[t as usize - 1][r as usize - 1], "({t},{r})");
            assert!(window_dominates(p(t, r), tp.d as i64, tp.e as i64));
        }
    }
}

#[test]
fn search_is_optimal_for_small_t() {
    for t in 1..=5u32 {
        for r in 1..=t {
            let tp = min_density_search(p(t, r)).unwrap();
            let ceiling = max_potential_d(2, p(t, r)).to_u64().unwrap();
            for d in tp.d + 1..=ceiling {
                assert!((0..d).all(|e| !window_dominates(p(t, r), d as i64, e as i64)), "({t},{r}) d={d}");
            }
            assert!((0..tp.e).all(|e| !window_dominates(p(t, r), tp.d as i64, e as i64)));
        }
    }
}

#[test]
fn unit_reception_is_tight() {
    for t in 1..=9u32 {
        let d = min_density_search(p(t, 1)).unwrap().d;
        assert_eq!(Some(d), max_potential_d(2, p(t, 1)).to_u64());
    }
}

// 3D tower lattice generated by (d,0,0), (e1,1,0), (e2,0,1): membership is
// x - y e1 - z e2 = 0 mod d.
fn dominates_3d(p: Params, d: i64, e1: i64, e2: i64) -> bool {
    let t = i64::from(p.t());
    (0..d).all(|i| {
        let mut total = 0;
        for x in i - t..=i + t {
            for y in -t..=t {
                for z in -t..=t {
                    let dist = (x - i).abs() + y.abs() + z.abs();
                    if dist < t && (x - y * e1 - z * e2).rem_euclid(d) == 0 {
                        total += t - dist;
                    }
                }
            }
        }
        total >= i64::from(p.r())
    })
}

fn oracle_search_3d(p: Params, cap: i64) -> Option<i64> {
    (1..=cap).rev().find(|&d| (0..d).any(|e1| (0..d).any(|e2| dominates_3d(p, d, e1, e2))))
}

#[test]
fn three_dimensional_search() {
    for (t, r, cap) in [(1, 1, 10), (2, 1, 10), (2, 2, 10), (3, 2, 20), (3, 3, 12)] {
        let pp = p(t, r);
        let ceiling = max_potential_d(3, pp).to_i64().unwrap().min(cap);
        let found = lattice_search_3d(pp, cap as u64).unwrap().unwrap();
        assert_eq!(Some(found.index() as i64), oracle_search_3d(pp, ceiling), "({t},{r})");
        assert!(is_dominating_lattice(pp, &found).unwrap());
    }
    assert_eq!(lattice_search_3d(p(2, 1), 10).unwrap().unwrap().index(), 7);
    assert_eq!(lattice_search_3d(p(2, 2), 10).unwrap().unwrap().index(), 4);
}
