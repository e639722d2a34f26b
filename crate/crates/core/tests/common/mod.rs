#![allow(dead_code)]

use linkbound::braid::BraidWord;
use linkbound::matrix::Matrix;
use linkbound::seifert::{seifert_matrix_from_braid, SeifertData};
use linkbound::signature::{CirclePoint, SignatureFunction};
use linkbound::IntMatrix;
use num_bigint::BigInt;
use rand::Rng;

/// Square matrix of size `1..=max_size` with entries in `[-bound, bound]`.
pub fn random_matrix(rng: &mut impl Rng, max_size: usize, bound: i64) -> IntMatrix {
    let n = rng.gen_range(1..=max_size);
    Matrix::from_fn(n, n, |_, _| BigInt::from(rng.gen_range(-bound..=bound)))
}

/// A braid in which every generator occurs, so the closure has a
/// connected braid Seifert surface.
pub fn random_braid(rng: &mut impl Rng, max_strands: usize, max_len: usize) -> BraidWord {
    let n = rng.gen_range(2..=max_strands);
    let len = rng.gen_range(n - 1..=max_len.max(n - 1));
    let mut letters: Vec<i64> = (1..n as i64).collect();
    while letters.len() < len {
        letters.push(rng.gen_range(1..n as i64));
    }
    for i in (1..letters.len()).rev() {
        letters.swap(i, rng.gen_range(0..=i));
    }
    for l in letters.iter_mut() {
        if rng.gen_bool(0.5) {
            *l = -*l;
        }
    }
    BraidWord::new(n, letters).unwrap()
}

pub fn random_link(rng: &mut impl Rng, max_strands: usize, max_len: usize) -> SeifertData {
    seifert_matrix_from_braid(&random_braid(rng, max_strands, max_len)).unwrap()
}

pub fn random_knot(rng: &mut impl Rng, max_strands: usize, max_len: usize) -> SeifertData {
    loop {
        let b = random_braid(rng, max_strands, max_len);
        if b.closure_components() == 1 {
            return seifert_matrix_from_braid(&b).unwrap();
        }
    }
}

/// Points at which two signature functions should be compared: every
/// interval sample and every breakpoint of each, plus the endpoints.
pub fn probe_points(fs: &[&SignatureFunction]) -> Vec<CirclePoint> {
    let mut pts = vec![CirclePoint::from_int(-2), CirclePoint::from_int(2)];
    for f in fs {
        pts.extend(f.intervals.iter().map(|iv| CirclePoint::rational(iv.sample.clone())));
        pts.extend(f.breakpoints.iter().map(|bp| bp.point.clone()));
    }
    pts
}
