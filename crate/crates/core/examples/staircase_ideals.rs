//! The translated ideal of a staircase and its colon/restriction recursion.

use horace::trunc_algebra::{
    colon_x1, graded_decomposition, is_staircase_ideal, monomial_ideal, restrict, translated_ideal,
};
use horace::{PrimeField, Staircase};

fn main() {
    let field = PrimeField::default();
    let e =
        Staircase::from_points(2, [[0, 0], [1, 0], [2, 0], [0, 1], [1, 1]].map(Vec::from)).unwrap();
    let (q, s) = (3, 4);

    let j = translated_ideal(&e, q, s, field);
    println!(
        "J(E, {q}, {s}) has dimension {} in a ring of dimension {}",
        j.dim(),
        j.ring().dim()
    );
    println!("staircase ideal of E: {}", is_staircase_ideal(&j, &e));

    let other = Staircase::big_point(2, 2);
    println!(
        "staircase ideal of {other}: {}",
        is_staircase_ideal(&j, &other)
    );

    // t = 0 recovers the monomial ideal
    let at_zero = restrict(&j, 1, s).unwrap();
    println!(
        "J restricted to t = 0 is I^E: {}",
        at_zero == monomial_ideal(&e, 1, s, field)
    );

    let colon = colon_x1(&j);
    println!("(J : x_1) has dimension {}", colon.dim());

    for (tail, part) in graded_decomposition(&e, q, s, field) {
        println!("  tail {tail:?}: graded part of dimension {}", part.dim());
    }
}
