//! Rebuilds groups from their regular 1-, 2- and 3-characters alone.

use groupchar::group::acceptance_suite;
use groupchar::recon::roundtrip;

fn main() -> groupchar::Result<()> {
    for named in acceptance_suite() {
        let g = named.build();
        let r = roundtrip(&g)?;
        let witness = r.witness.expect("roundtrip attaches a witness");
        println!("{:10} order {:2}  nodes {:3}  witness {:?}", named.label, g.order(), r.search_nodes, witness.kind);
    }
    Ok(())
}
