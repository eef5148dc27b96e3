use proptest::prelude::*;
use strongdiv::numerical::NumericalSemigroup;

/// Members up to `limit` by closing `{0}` under adding generators.
fn members(gens: &[u64], limit: u64) -> Vec<bool> {
    let mut t = vec![false; limit as usize + 1];
    t[0] = true;
    let mut queue = vec![0u64];
    while let Some(x) = queue.pop() {
        for &g in gens {
            let y = x + g;
            if y <= limit && !t[y as usize] {
                t[y as usize] = true;
                queue.push(y);
            }
        }
    }
    t
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

proptest! {
    #[test]
    fn agrees_with_closure(gens in prop::collection::vec(1u64..=20, 1..5)) {
        prop_assume!(gens.iter().fold(0, |g, &x| gcd(g, x)) == 1);
        let s = NumericalSemigroup::new(&gens).unwrap();
        let limit = 400;
        let t = members(&gens, limit);
        for x in 0..=limit {
            prop_assert_eq!(s.contains(x as i64), t[x as usize]);
        }
        let frob = (0..=limit as i64).rev().find(|&x| !t[x as usize]).unwrap_or(-1);
        prop_assert_eq!(s.frobenius(), frob);
        prop_assert_eq!(s.conductor() as i64, frob + 1);
        prop_assert_eq!(s.gaps().len(), t.iter().filter(|b| !**b).count());
        prop_assert_eq!(s.multiplicity(), (1..).find(|&x| t[x as usize]).unwrap());
        for &g in s.generators() {
            // Minimal generators are not sums of two nonzero members.
            prop_assert!(!(1..g).any(|a| t[a as usize] && t[(g - a) as usize]));
        }
    }

    #[test]
    fn representations_are_valid(gens in prop::collection::vec(2u64..=12, 2..4), x in 0i64..=80) {
        prop_assume!(gens.iter().fold(0, |g, &x| gcd(g, x)) == 1);
        let s = NumericalSemigroup::new(&gens).unwrap();
        match s.representation(x) {
            Some(counts) => {
                let total: u64 = counts.iter().zip(s.generators()).map(|(c, g)| c * g).sum();
                prop_assert_eq!(total as i64, x);
            }
            None => prop_assert!(!s.contains(x)),
        }
    }
}

#[test]
fn bad_generators_are_rejected() {
    assert!(NumericalSemigroup::new(&[]).is_err());
    assert!(NumericalSemigroup::new(&[0, 1]).is_err());
    assert!(NumericalSemigroup::new(&[4, 6]).is_err());
}
