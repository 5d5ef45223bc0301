//! Slices of a staircase and what is left after removing them.

use horace::Staircase;

fn main() {
    let e = Staircase::from_heights(2, [(vec![0], 4), (vec![1], 3), (vec![2], 1), (vec![3], 1)])
        .expect("heights decrease along the tail");
    println!("E, degree {}:\n{}", e.degree(), e.render());

    for k in 1..=e.max_height() {
        let t = e.slice(k);
        println!("T(E, {k}): {t}, degree {}", t.degree());
    }

    let ns = [4, 2, 1];
    let s = e.remove_slices(&ns).unwrap();
    let taken: usize = ns.iter().map(|&k| e.slice(k).degree()).sum();
    println!(
        "\nafter removing slices {ns:?} ({taken} boxes):\n{}",
        s.render()
    );
    assert_eq!(s.degree() + taken, e.degree());

    match e.remove_slices(&[1, 2]) {
        Ok(_) => unreachable!(),
        Err(err) => println!("increasing sequence rejected: {err}"),
    }
}
