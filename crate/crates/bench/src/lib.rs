//! Seeded random inputs for the engine benchmarks.

use defeasor_core::abmodels::{Clause, Theory};
use defeasor_core::{ArgId, Framework, Literal};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

/// A framework over `a0..a{n-1}` where each ordered pair defeats with
/// probability `density`.
pub fn random_framework(n: usize, density: f64, seed: u64) -> Framework {
    let mut rng = StdRng::seed_from_u64(seed);
    let ids: Vec<ArgId> = (0..n).map(|i| ArgId::new(format!("a{i}"))).collect();
    let mut defeats = Vec::new();
    for a in &ids {
        for b in &ids {
            if rng.gen_bool(density) {
                defeats.push((a.clone(), b.clone()));
            }
        }
    }
    Framework::new(ids, defeats, [], []).expect("generated framework is valid")
}

fn literal(rng: &mut StdRng, atoms: &[String]) -> Literal {
    let atom = atoms[rng.gen_range(0..atoms.len())].clone();
    if rng.gen_bool(0.5) {
        Literal::positive(atom)
    } else {
        Literal::negative(atom)
    }
}

/// A theory with `n` atoms, `clauses` random clauses and every third atom
/// minimized.
pub fn random_theory(n: usize, clauses: usize, seed: u64) -> Theory {
    let mut rng = StdRng::seed_from_u64(seed);
    let atoms: Vec<String> = (0..n).map(|i| format!("q{i:02}")).collect();
    let clauses: Vec<Clause> = (0..clauses)
        .map(|_| {
            if rng.gen_bool(0.6) {
                let body = (0..rng.gen_range(1..=3)).map(|_| literal(&mut rng, &atoms)).collect();
                let head = literal(&mut rng, &atoms);
                Clause::Implication { body, head }
            } else {
                Clause::Disjunction((0..rng.gen_range(2..=3)).map(|_| literal(&mut rng, &atoms)).collect())
            }
        })
        .collect();
    let minimized: Vec<String> = atoms.iter().step_by(3).cloned().collect();
    Theory::new(atoms, clauses, minimized, []).expect("generated theory is valid")
}
