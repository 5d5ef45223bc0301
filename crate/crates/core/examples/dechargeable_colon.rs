//! Closed-form colons of dechargeable ideals against the linear-algebra colon.

use horace::oracle::{brute_colon, same_span};
use horace::trunc_algebra::{
    colon_x1, dechargeable_colon, dechargeable_restrict_colon, restrict, DechargeableIdeal,
    TruncIdeal, TruncRing,
};
use horace::PrimeField;

fn main() {
    let field = PrimeField::default();
    for (h, q, s) in [(3, 2, 4), (1, 2, 3), (2, 3, 5)] {
        let ring = TruncRing::new(1, q, s, field);
        let ideal = DechargeableIdeal::principal(&ring, h).unwrap();
        let branch = if q <= ideal.height() {
            "q ≤ H"
        } else {
            "q > H"
        };
        let gens = dechargeable_colon(&ideal).unwrap();
        let shown: Vec<String> = gens.iter().map(|g| g.to_string()).collect();
        let closed = TruncIdeal::generated(&ring, gens);
        let generic = colon_x1(&ideal.ideal().unwrap());
        let brute = brute_colon(&ring, ideal.ideal().unwrap().span().basis());
        println!(
            "((x-t)^{h}) in A({q},{s}), {branch}: closed form ({}), matches colon {}, matches oracle {}",
            shown.join(", "),
            closed == generic,
            same_span(&field, closed.span().basis(), &brute, ring.dim())
        );

        let (p, u) = (q - 1, s - 1);
        let next = dechargeable_restrict_colon(&ideal, p, u).unwrap();
        let direct = restrict(&generic, p, u).unwrap();
        println!(
            "  restricted to A({p},{u}): height {} -> {}, agrees {}",
            ideal.height(),
            next.height(),
            next.ideal().unwrap() == direct
        );
    }
}
