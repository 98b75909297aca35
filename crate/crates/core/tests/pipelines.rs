use torq_core::amitsur::Amitsur;
use torq_core::equiv::{effectivize, relation_new, EffectivizeOptions, RawTerm};
use torq_core::gb::GbConfig;
use torq_core::monoid::{presentation, AffineMonoid, MonoidHom, ToricPresentation};
use torq_core::quotient::{finiteness, invariant_monoid};
use torq_core::tensor::TensorPower;
use torq_core::zlin::Lattice;
use torq_core::Field;

fn monoid(d: usize, gens: &[&[i64]]) -> AffineMonoid {
    let g: Vec<Vec<i64>> = gens.iter().map(|v| v.to_vec()).collect();
    AffineMonoid::new(d, &g).unwrap()
}

fn pres(s: &AffineMonoid) -> ToricPresentation {
    presentation(s, Field::Rational, &GbConfig::default()).unwrap()
}

fn diff(w: &[i64]) -> Vec<RawTerm> {
    let q = Field::Rational;
    let z = vec![0; w.len()];
    vec![(q.one(), w.to_vec(), z.clone()), (q.from_i64(-1), z, w.to_vec())]
}

#[test]
fn tensor_moves_on_the_line() {
    let n = monoid(1, &[&[1]]);
    let t2 = TensorPower::new(&n, &[vec![2], vec![3]], 2).unwrap();
    assert!(t2.tensor_equals(&vec![vec![2], vec![0]], &vec![vec![0], vec![2]]).unwrap());
    // Neither slot of (1,1) can give up a 2 or a 3.
    assert!(!t2.tensor_equals(&vec![vec![1], vec![1]], &vec![vec![2], vec![0]]).unwrap());
    let t3 = t2.with_power(3).unwrap();
    assert_eq!(t3.normalize(&vec![vec![2], vec![3], vec![0]]).unwrap(), vec![vec![5], vec![0], vec![0]]);
    let t = TensorPower::new(&n, &[vec![2]], 2).unwrap();
    assert_eq!(t.normalize(&vec![vec![0], vec![2]]).unwrap(), vec![vec![2], vec![0]]);
}

#[test]
fn twist_coset_on_the_integers() {
    let z = monoid(1, &[&[1], &[-1]]);
    let t = TensorPower::new(&z, &[vec![2], vec![-2]], 2).unwrap();
    let c = t.unit_twist_solve(&vec![vec![3], vec![0]], &vec![vec![0], vec![3]]).unwrap().unwrap();
    // (3,0) ~ (s, 3 − s) exactly for odd s, since transfers move slot 1 by even amounts.
    for s in -5..=5 {
        assert_eq!(c.contains(&[s]).unwrap(), s % 2 != 0, "s = {s}");
    }
    assert_eq!(c.lattice, Lattice::from_generators(1, &[vec![2]]).unwrap());
}

#[test]
fn effectivize_is_idempotent() {
    let plane = monoid(2, &[&[1, 0], &[0, 1]]);
    let p = pres(&plane);
    let opts = EffectivizeOptions::default();
    for tau in [vec![vec![2, 0], vec![1, 1], vec![0, 3]], vec![vec![1, 2], vec![2, 4]], vec![vec![3, 1], vec![1, 3], vec![2, 2]]] {
        let raw: Vec<Vec<RawTerm>> = tau.iter().map(|w| diff(w)).collect();
        let first = effectivize(&relation_new(&p, &raw, &GbConfig::default()).unwrap(), &opts).unwrap();
        assert!(first.verified);
        let raw2: Vec<Vec<RawTerm>> = first.w.iter().map(|w| diff(w)).collect();
        let second = effectivize(&relation_new(&p, &raw2, &GbConfig::default()).unwrap(), &opts).unwrap();
        assert!(second.verified);
        assert_eq!(first.tau, second.tau, "τ = {tau:?}");
    }
}

#[test]
fn effectivize_collapses_redundant_generators() {
    // x⁴ − y⁴ and x⁶ − y⁶ lie in (x² − y²).
    let p = pres(&monoid(1, &[&[1]]));
    let rel = relation_new(&p, &[diff(&[2]), diff(&[4]), diff(&[6])], &GbConfig::default()).unwrap();
    let m = effectivize(&rel, &EffectivizeOptions::default()).unwrap();
    assert_eq!(m.w, vec![vec![2]]);
}

/// Whether (d, 0) reaches (0, d) by moving 3s and 5s between two slots of ℕ².
fn swaps(d: i64) -> bool {
    let mut seen = vec![false; d as usize + 1];
    let mut stack = vec![d];
    seen[d as usize] = true;
    while let Some(a) = stack.pop() {
        for t in [3, 5, -3, -5] {
            let b = a - t;
            if (0..=d).contains(&b) && !seen[b as usize] {
                seen[b as usize] = true;
                stack.push(b);
            }
        }
    }
    seen[0]
}

#[test]
fn zeroth_cohomology_is_the_equalizer() {
    let tau = monoid(1, &[&[3], &[5]]);
    let sigma = monoid(1, &[&[1]]);
    let hom = MonoidHom::inclusion(&tau, &sigma).unwrap();
    let a = Amitsur::new(&hom, Field::Rational).unwrap();
    let degrees: Vec<Vec<i64>> = (0..=12).map(|d| vec![d]).collect();
    let t = a.cohomology_table(2, &degrees).unwrap();
    for row in &t.rows {
        let expected = usize::from(swaps(row.degree[0]));
        assert_eq!(row.h, vec![expected, 0], "degree {:?}", row.degree);
        assert!(row.d_squared_zero);
    }
    // 7 is not in ⟨3,5⟩ yet 0⊗t⁷ = t⁷⊗1 via (0,7) → (5,2) → (2,5) → (7,0).
    assert_eq!(t.rows[7].h[0], 1);
    assert_eq!(t.rows[4].h[0], 0);
}

#[test]
fn invariants_and_finiteness() {
    let line = monoid(1, &[&[1]]);
    let p = pres(&line);
    let rel = relation_new(&p, &[diff(&[2]), diff(&[3])], &GbConfig::default()).unwrap();
    let inv = invariant_monoid(&rel, 8).unwrap();
    assert_eq!(inv.generators, vec![vec![2], vec![3]]);
    assert!(inv.stabilized);
    let f = finiteness(&inv.generators, &line).unwrap();
    assert!(f.is_finite());

    let plane = monoid(2, &[&[1, 0], &[0, 1]]);
    let f = finiteness(&[vec![1, 0], vec![1, 1]], &plane).unwrap();
    assert!(!f.is_finite());
    assert_eq!(f.missing_rays, vec![vec![0, 1]]);
    assert!(finiteness(&[vec![-1, 0]], &plane).is_err());
}
