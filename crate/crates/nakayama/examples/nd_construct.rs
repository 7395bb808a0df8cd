//! Certified constructions of n-cluster tilting Nakayama algebras of a
//! prescribed global dimension.

use nakayama::ndgen;

pub fn main() -> nakayama::Result<()> {
    for (n, d) in [(2, 4), (3, 5), (4, 9), (6, 13), (9, 28)] {
        if !ndgen::supported(n, d) {
            println!("n = {n}, d = {d}: not supported");
            continue;
        }
        let cert = ndgen::construct(n, d)?;
        println!(
            "n = {n}, d = {d}: {} (gl.dim {}, {:?} base {} plus {} extensions)",
            cert.kupisch, cert.gldim, cert.trace.family, cert.trace.base, cert.trace.extensions
        );
        assert!(cert.verdict.ok && cert.gldim == d);
    }
    println!("n = 4, d = 5 supported: {}", ndgen::supported(4, 5));
    Ok(())
}
