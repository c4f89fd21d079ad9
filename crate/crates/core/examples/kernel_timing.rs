use std::time::Instant;

use bandinv::field::PrimeField;
use bandinv::invertibility_sequence;
use bandinv::verify::random_full_band_stencil;
use rand::SeedableRng;

fn main() {
    let k: usize = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(3);
    let n: usize = std::env::args()
        .nth(2)
        .and_then(|s| s.parse().ok())
        .unwrap_or(1_000_000);
    let f = PrimeField::new(2_147_483_647).unwrap();
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
    let s = random_full_band_stencil(&f, k, &mut rng);
    let t = Instant::now();
    let seq = invertibility_sequence(&s, n).unwrap();
    println!(
        "k={k} n={n}: {:?}, {} singular",
        t.elapsed(),
        seq.singular_orders().len()
    );
}
