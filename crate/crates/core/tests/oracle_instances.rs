mod common;

use common::random;
use common::xyz;
use polysmith::criteria::{check_equivalence, verify_witness, Orientation, Verdict};
use polysmith::reduce::{reduce_to_smith, DEFAULT_DEGREE_BOUND};
use polysmith::PolyMatrix;

#[test]
fn constructed_instances_reduce_to_their_smith_form() {
    let vars = xyz();
    let mut rng = random::rng(0x5eed_0001);
    for instance in 0..25 {
        let s0 = PolyMatrix::diag(&vars, &random::chain_smith(&mut rng, &vars));
        let u0 = random::unimodular(&mut rng, &vars, 3, 8, 1);
        let v0 = random::unimodular(&mut rng, &vars, 3, 8, 1);
        let f = &(&u0 * &s0) * &v0;
        let report = check_equivalence(&f, None).unwrap();
        assert_eq!(report.verdict, Verdict::Equivalent, "instance {instance}: {}", report.shape);
        let trace = reduce_to_smith(&f, &report.shape, DEFAULT_DEGREE_BOUND).unwrap();
        let (u, v, s) = trace
            .witnesses()
            .unwrap_or_else(|| panic!("instance {instance} failed: {:?}\nS0 = {s0}", trace.failure()));
        assert_eq!(s, &s0, "instance {instance}");
        assert!(verify_witness(&f, u, v, s, Orientation::Reduced).unwrap());
        assert!(trace.replays());
    }
}
