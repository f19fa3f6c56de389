//! Four-dimensional structures built from a diagonalizable frame: the only
//! joint kernel of the `X_i − δ_i` is spanned by `D`, which sits in degree 4.

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use quadpoisson::frame::same_span;
use quadpoisson::koszul::OperatorTuple;
use quadpoisson::{LinFrame, MonomialBasis, QMatrix, Rational, Scalar, SrmiStructure};

const N: usize = 4;

fn q(v: i64) -> Rational {
    Rational::from_i64(v)
}

fn random_structure(seed: u64) -> SrmiStructure<Rational> {
    let mut rng = StdRng::seed_from_u64(seed);
    loop {
        // a product of elementary integer matrices keeps the frame integral,
        // which keeps exact elimination fast
        let mut c = QMatrix::identity(N);
        for _ in 0..4 {
            let i = rng.gen_range(0..N);
            let j = (i + rng.gen_range(1..N)) % N;
            let mut e = QMatrix::identity(N);
            e[(i, j)] = q(rng.gen_range(-2..=2));
            c = c.mul(&e);
        }
        let ci = c.inverse().expect("unimodular");
        let v: Vec<Vec<i64>> = (0..N).map(|_| (0..N).map(|_| rng.gen_range(-3..=3)).collect()).collect();
        let mats: Vec<QMatrix> = v
            .iter()
            .map(|row| c.mul(&QMatrix::from_fn(N, N, |i, j| if i == j { q(row[i]) } else { q(0) })).mul(&ci))
            .collect();
        let mut alpha = QMatrix::zeros(N, N);
        for i in 0..N {
            for j in i + 1..N {
                let a = q(rng.gen_range(-3..=3));
                alpha[(i, j)] = a.clone();
                alpha[(j, i)] = -a;
            }
        }
        if alpha.rank() < N {
            continue;
        }
        let Ok(frame) = LinFrame::new(mats) else { continue };
        if frame.d().is_zero() {
            continue;
        }
        return SrmiStructure::new(alpha, frame).expect("constant alpha on a commuting frame is Poisson");
    }
}

#[test]
fn koszul_cohomology_lives_only_in_degree_n() {
    for seed in [3, 17, 2024] {
        let s = random_structure(seed);
        for r in 0..=6 {
            let h = OperatorTuple::new(s.shifted_ops(r)).unwrap().cohomology();
            if r == N {
                assert_eq!(h.dims, vec![1, 4, 6, 4, 1], "seed {seed}");
                let d = s.frame().d().coords(&MonomialBasis::new(N, N));
                let len = d.len();
                assert!(same_span(len, &h.reps[0], &[d]), "seed {seed}: KH^0 is not spanned by D");
            } else {
                assert!(h.is_acyclic(), "seed {seed}, r = {r}: {:?}", h.dims);
            }
        }
    }
}
