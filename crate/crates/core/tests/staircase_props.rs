use horace::oracle::enumerate_staircases;
use horace::Staircase;
use proptest::prelude::*;

fn decreasing_sequences(max: u32) -> Vec<Vec<u32>> {
    (0u32..1 << max)
        .map(|mask| {
            (1..=max)
                .rev()
                .filter(|k| mask & (1 << (k - 1)) != 0)
                .collect()
        })
        .collect()
}

fn small_staircases() -> Vec<Staircase> {
    (1..=3).flat_map(|n| enumerate_staircases(n, 8)).collect()
}

#[test]
fn slice_degree_identity_exhaustive() {
    for e in small_staircases() {
        for ns in decreasing_sequences(e.max_height() + 1) {
            let removed = e.remove_slices(&ns).unwrap();
            let taken: usize = ns.iter().map(|&k| e.slice(k).degree()).sum();
            assert_eq!(removed.degree() + taken, e.degree(), "E = {e}, ns = {ns:?}");
        }
    }
}

#[test]
fn slice_invariance_exhaustive() {
    for e in small_staircases() {
        let top = e.max_height() + 1;
        for n1 in 2..=top {
            for n2 in 1..n1 {
                assert_eq!(
                    e.remove_slice(n1).slice(n2).degree(),
                    e.slice(n2).degree(),
                    "E = {e}, n1 = {n1}, n2 = {n2}"
                );
            }
        }
    }
}

#[test]
fn removal_and_slices_stay_staircases() {
    for e in small_staircases() {
        for k in 1..=e.max_height() + 1 {
            let s = e.remove_slice(k);
            assert!(s.is_monotone());
            assert!(Staircase::from_points(e.dim(), s.points()).is_ok());
            let t = e.slice(k);
            assert!(t.points().iter().all(|a| a[0] == 0));
            assert!(Staircase::from_points(e.dim(), t.points()).is_ok());
        }
    }
}

#[test]
fn enumeration_counts_partitions() {
    let per_degree = |n: usize, max: usize| {
        let mut counts = vec![0usize; max + 1];
        for e in enumerate_staircases(n, max) {
            counts[e.degree()] += 1;
        }
        counts
    };
    assert_eq!(per_degree(1, 5), vec![1; 6]);
    assert_eq!(per_degree(2, 8), vec![1, 1, 2, 3, 5, 7, 11, 15, 22]);
    assert_eq!(per_degree(3, 6), vec![1, 1, 3, 6, 13, 24, 48]);
}

#[test]
fn documented_examples() {
    let e3 = Staircase::big_point(2, 3);
    assert_eq!(e3.degree(), 6);
    assert_eq!(
        e3.slice(1).points(),
        vec![vec![0, 0], vec![0, 1], vec![0, 2]]
    );
    assert_eq!(e3.slice(3).points(), vec![vec![0, 0]]);
    assert!(e3.slice(4).is_empty());
    let s3 = e3.remove_slice(3);
    assert_eq!(s3.degree(), 5);
    assert_eq!(
        (s3.height(&[0]), s3.height(&[1]), s3.height(&[2])),
        (2, 2, 1)
    );
    let z = e3.remove_slices(&[3, 1]).unwrap();
    assert_eq!(z.points(), vec![vec![0, 0], vec![0, 1]]);
    assert_eq!(e3.remove_slices(&[]).unwrap(), e3);
    assert!(Staircase::big_point(2, 2)
        .remove_slices(&[2, 1])
        .unwrap()
        .is_empty());
    assert!(e3.remove_slices(&[1, 3]).is_err());
    assert!(e3.remove_slices(&[2, 0]).is_err());
    assert_eq!(Staircase::empty(2).degree(), 0);
}

#[test]
fn below_degree_truncates() {
    for e in enumerate_staircases(2, 6) {
        for bound in 0..5 {
            let t = e.below_degree(bound);
            let expect: Vec<Vec<u32>> = e
                .points()
                .into_iter()
                .filter(|a| a.iter().sum::<u32>() < bound)
                .collect();
            assert_eq!(t.points(), expect);
        }
    }
}

fn arb_staircase() -> impl Strategy<Value = Staircase> {
    (
        1usize..=3,
        prop::collection::vec(prop::collection::vec(0u32..5, 3), 0..12),
    )
        .prop_map(|(n, seeds)| {
            // close a random box set downward
            let mut pts = std::collections::BTreeSet::new();
            for s in seeds {
                let top: Vec<u32> = s[..n].to_vec();
                let mut stack = vec![top];
                while let Some(p) = stack.pop() {
                    if pts.insert(p.clone()) {
                        for j in 0..n {
                            if p[j] > 0 {
                                let mut q = p.clone();
                                q[j] -= 1;
                                stack.push(q);
                            }
                        }
                    }
                }
            }
            Staircase::from_points(n, pts).unwrap()
        })
}

proptest! {
    #[test]
    fn slice_degree_identity_random(e in arb_staircase(), mask in 0u32..1024) {
        let ns: Vec<u32> = (1..=10).rev().filter(|k| mask & (1 << (k - 1)) != 0).collect();
        let removed = e.remove_slices(&ns).unwrap();
        let taken: usize = ns.iter().map(|&k| e.slice(k).degree()).sum();
        prop_assert_eq!(removed.degree() + taken, e.degree());
        prop_assert!(removed.is_monotone());
    }

    #[test]
    fn heights_follow_the_two_case_formula(e in arb_staircase(), k in 1u32..8) {
        let s = e.remove_slice(k);
        for (tail, &h) in e.heights() {
            let expect = if k > h { h } else { h - 1 };
            prop_assert_eq!(s.height(tail), expect);
        }
        prop_assert_eq!(e.slice(k).degree(), e.heights().values().filter(|&&h| h >= k).count());
    }

    #[test]
    fn serialization_lists_sorted_points(e in arb_staircase()) {
        let json = serde_json::to_value(&e).unwrap();
        let pts: Vec<Vec<u32>> = serde_json::from_value(json).unwrap();
        prop_assert_eq!(pts, e.points());
    }
}
