use std::collections::BTreeSet;

use broadcast_core::lattice::ball_enumerate;
use broadcast_core::{
    ball_bijection, ball_size, delannoy, genfunc_coefficients, shell_enumerate, shell_size, tuple_decode, tuple_encode,
    Count, GenFuncKind, LatticePoint,
};
use num_bigint::BigInt;
use num_rational::BigRational;

// Every point of [-d, d]^n, filtered by norm. Slow but obviously right.
fn brute_ball(n: usize, d: usize) -> Vec<Vec<i64>> {
    let d = d as i64;
    let mut out = Vec::new();
    let mut cur = vec![-d; n];
    loop {
        if cur.iter().map(|c| c.abs()).sum::<i64>() <= d {
            out.push(cur.clone());
        }
        let mut k = 0;
        loop {
            if k == n {
                return out;
            }
            if cur[k] < d {
                cur[k] += 1;
                break;
            }
            cur[k] = -d;
            k += 1;
        }
    }
}

fn norm(p: &[i64]) -> usize {
    p.iter().map(|c| c.unsigned_abs() as usize).sum()
}

fn count(x: usize) -> Count {
    Count::from(x)
}

#[test]
fn counts_match_brute_force() {
    for n in 0..=4 {
        for d in 0..=6 {
            let ball = brute_ball(n, d);
            let shell: Vec<_> = ball.iter().filter(|p| norm(p) == d).cloned().collect();
            assert_eq!(ball_size(n, d), count(ball.len()), "ball n={n} d={d}");
            assert_eq!(shell_size(n, d), count(shell.len()), "shell n={n} d={d}");

            let listed: Vec<Vec<i64>> = shell_enumerate(n, d).unwrap().into_iter().map(|p| p.0).collect();
            let mut expect = shell.clone();
            expect.sort();
            assert_eq!(listed, expect, "shell listing n={n} d={d}");
            let balls: BTreeSet<_> = ball_enumerate(n, d, 1_000_000).unwrap().into_iter().map(|p| p.0).collect();
            assert_eq!(balls, ball.into_iter().collect::<BTreeSet<_>>());
        }
    }
}

#[test]
fn ball_recursion() {
    for n in 1..=8 {
        for d in 1..=8 {
            assert_eq!(ball_size(n, d), ball_size(n - 1, d) + ball_size(n, d - 1) + ball_size(n - 1, d - 1));
        }
    }
}

// D(m,k) = sum_j C(m,j) C(k,j) 2^j
fn delannoy_sum(m: u128, k: u128) -> u128 {
    let c = |n: u128, r: u128| (0..r).fold(1u128, |acc, i| acc * (n - i) / (i + 1));
    (0..=m.min(k)).map(|j| (c(m, j) * c(k, j)) << j).sum()
}

#[test]
fn delannoy_identity() {
    for n in 0..=10 {
        for d in 0..=10 {
            let b = ball_size(n, d);
            assert_eq!(b, delannoy(n, d));
            assert_eq!(b, ball_size(d, n));
            assert_eq!(b.to_string(), delannoy_sum(n as u128, d as u128).to_string());
        }
    }
}

#[test]
fn generating_functions_match_counts() {
    let m = 10;
    let bb = genfunc_coefficients(GenFuncKind::BallBivariate, None, m).unwrap();
    let sb = genfunc_coefficients(GenFuncKind::ShellBivariate, None, m).unwrap();
    for n in 0..=m {
        for d in 0..=m {
            assert_eq!(bb.bivariate().unwrap()[n][d], ball_size(n, d));
            assert_eq!(sb.bivariate().unwrap()[n][d], shell_size(n, d));
        }
    }
    for k in 0..=m {
        let uni = |kind| genfunc_coefficients(kind, Some(k), m).unwrap().univariate().unwrap().to_vec();
        let ball_d = uni(GenFuncKind::BallFixedRadius);
        let ball_n = uni(GenFuncKind::BallFixedDim);
        let shell_d = uni(GenFuncKind::ShellFixedRadius);
        let shell_n = uni(GenFuncKind::ShellFixedDim);
        for i in 0..=m {
            assert_eq!(ball_d[i], ball_size(i, k), "B_d, d={k} i={i}");
            assert_eq!(ball_n[i], ball_size(k, i), "B_n, n={k} i={i}");
            assert_eq!(shell_d[i], shell_size(i, k), "S_d, d={k} i={i}");
            assert_eq!(shell_n[i], shell_size(k, i), "S_n, n={k} i={i}");
        }
    }
}

#[test]
fn shell_polynomials_by_dimension() {
    let q = |num: i64, den: i64| BigRational::new(BigInt::from(num), BigInt::from(den));
    // coefficients of d^0, d^1, ... for n = 1..=7
    let table: Vec<Vec<BigRational>> = vec![
        vec![q(2, 1)],
        vec![q(0, 1), q(4, 1)],
        vec![q(2, 1), q(0, 1), q(4, 1)],
        vec![q(0, 1), q(16, 3), q(0, 1), q(8, 3)],
        vec![q(2, 1), q(0, 1), q(20, 3), q(0, 1), q(4, 3)],
        vec![q(0, 1), q(92, 15), q(0, 1), q(16, 3), q(0, 1), q(8, 15)],
        vec![q(2, 1), q(0, 1), q(392, 45), q(0, 1), q(28, 9), q(0, 1), q(8, 45)],
    ];
    for (idx, coeffs) in table.iter().enumerate() {
        let n = idx + 1;
        for d in 1..=8i64 {
            let x = BigRational::from_integer(BigInt::from(d));
            let mut value = BigRational::from_integer(BigInt::from(0));
            let mut pw = BigRational::from_integer(BigInt::from(1));
            for c in coeffs {
                value += c * &pw;
                pw *= &x;
            }
            assert!(value.is_integer());
            assert_eq!(value.to_integer().to_string(), shell_size(n, d as usize).to_string(), "n={n} d={d}");
        }
    }
}

#[test]
fn bijection_worked_examples() {
    let f = |p: &[i64], n, d| ball_bijection(&LatticePoint(p.to_vec()), n, d).unwrap().0;
    assert_eq!(f(&[2, 0, -1, 0], 4, 3), vec![0, 1, -2]);
    assert_eq!(f(&[-1, 0, 1, -1], 4, 3), vec![-1, 2, -1]);
    assert_eq!(f(&[0, 0, 0, 0], 4, 3), vec![0, 0, 0]);
    assert_eq!(tuple_encode(&LatticePoint(vec![2, 0, -1, 0])).to_string(), "[+(1,2), -(2,1)]");
}

#[test]
fn bijection_is_exhaustively_bijective() {
    for n in 0..=5 {
        for d in 0..=5 {
            let domain = brute_ball(n, d);
            let image: BTreeSet<Vec<i64>> =
                domain.iter().map(|p| ball_bijection(&LatticePoint(p.clone()), n, d).unwrap().0).collect();
            assert_eq!(image.len(), domain.len(), "not injective n={n} d={d}");
            let target: BTreeSet<Vec<i64>> = brute_ball(d, n).into_iter().collect();
            assert_eq!(image, target, "not onto n={n} d={d}");
            for p in &domain {
                let lp = LatticePoint(p.clone());
                let back = ball_bijection(&ball_bijection(&lp, n, d).unwrap(), d, n).unwrap();
                assert_eq!(back, lp);
                assert_eq!(tuple_decode(&tuple_encode(&lp), n).unwrap(), lp);
            }
        }
    }
}

#[test]
fn bijection_rejects_out_of_range() {
    assert!(ball_bijection(&LatticePoint(vec![3, 0]), 2, 2).is_err());
    assert!(ball_bijection(&LatticePoint(vec![1, 0, 0]), 2, 2).is_err());
}
