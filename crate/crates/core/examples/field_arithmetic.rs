//! Prime-field arithmetic: primality, inverses, and vectors over F_p.

use expander_nmc::field::{is_prime, random_prime, FieldVector, PrimeModulus};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> expander_nmc::Result<()> {
    let p = PrimeModulus::new(7)?;
    let three = p.element(3);
    let inv = three.inv()?;
    println!("in F_7: 3^-1 = {inv}, 3 * 3^-1 = {}", three.mul(inv)?);
    println!("3^6 = {} (Fermat)", three.pow(6));

    let big = PrimeModulus::new(2_147_483_647)?;
    let x = big.element(123_456_789);
    println!("in F_(2^31-1): x * x^-1 = {}", x.mul(x.inv()?)?);

    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let q = random_prime(61, &mut rng)?;
    println!("random 61-bit prime: {q} (is_prime: {})", is_prime(q.get()));
    println!("2^64 - 59 is prime: {}", is_prime(u64::MAX - 58));

    let u = FieldVector::new(p, vec![1, 2, 3])?;
    let v = FieldVector::new(p, vec![6, 6, 6])?;
    println!("({u}) + ({v}) = ({})", u.add(&v)?);
    println!("-({u}) = ({})", u.neg());

    match PrimeModulus::new(91) {
        Err(e) => println!("91: {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
