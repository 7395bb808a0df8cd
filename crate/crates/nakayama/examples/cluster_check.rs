//! Checking whether an algebra admits an n-cluster tilting subcategory.

use nakayama::{cluster, Kupisch};

pub fn main() -> nakayama::Result<()> {
    let k = Kupisch::lambda(7, 2)?;
    for n in 2..=4 {
        let v = cluster::check_nct(&k, n)?;
        if v.ok {
            let members: Vec<String> = v.candidate.iter().map(ToString::to_string).collect();
            println!("{k} is {n}-cluster tilting with {}", members.join(" "));
        } else {
            let first = &v.failures[0];
            println!("{k} fails for n = {n}: condition {} at {}", first.condition(), first.coord());
        }
    }
    Ok(())
}
