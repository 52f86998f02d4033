use asms::langford::{search_sequence, validate_sequence};
use std::time::Instant;

#[test]
fn probe_pipeline_searches() {
    for (m, k) in [(17i64, 2usize), (25, 2), (45, 2), (45, 4), (45, 46), (45, 90)] {
        let t0 = Instant::now();
        let res = search_sequence(4, m, Some(k), 2_000_000_000);
        let dt = t0.elapsed();
        match res {
            Ok(s) => {
                assert!(validate_sequence(&s).is_ok());
                println!("m={m} k={k}: found in {dt:?}");
            }
            Err(e) => println!("m={m} k={k}: FAILED in {dt:?}: {e}"),
        }
    }
}
