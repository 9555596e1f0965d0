//! The optional on-disk memo cache: computed generator coactions persist
//! across instances when `COACT_CACHE_DIR` is set. Runs in its own process
//! so the environment variable cannot leak into other tests.

use coact::f2poly::{GeneratorId, Poly};
use coact::presets;

#[test]
fn coactions_round_trip_through_the_cache_directory() {
    let dir = std::env::temp_dir().join(format!("coact-cache-{}", std::process::id()));
    std::env::set_var("COACT_CACHE_DIR", &dir);

    let q43 = Poly::generator(GeneratorId::qgen(vec![4], 3));
    let first = presets::build("Mj1").unwrap().rcoact(&q43).unwrap();
    // entries were written
    let entries = std::fs::read_dir(&dir).unwrap().count();
    assert!(entries > 0, "cache directory is populated");
    // a fresh instance reads the persisted values and agrees
    let second = presets::build("Mj1").unwrap().rcoact(&q43).unwrap();
    assert_eq!(first, second);

    std::env::remove_var("COACT_CACHE_DIR");
    let _ = std::fs::remove_dir_all(&dir);
}
