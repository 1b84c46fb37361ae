//! Reading, checking and writing diagrams in the `t3d` text format.

use t3links::diagram::{builtin_example, connected_sum, parse_diagram, serialize_diagram, BUILTIN_NAMES};

fn main() -> t3links::Result<()> {
    let text = "t3d 1
# one crossing between two strands that both cross the x wall
crossing 1 sign +
component a : x+@1 o1
component b : x+@2 u1
";
    let d = parse_diagram(text)?;
    for c in 0..d.components.len() {
        println!("{}: class {:?}", d.components[c].name, d.homology_class(c)?);
    }
    print!("{}", serialize_diagram(&d));

    match parse_diagram("t3d 1\ncomponent k : o7\n") {
        Ok(_) => unreachable!(),
        Err(e) => println!("rejected: {e}"),
    }

    println!("built-in fixtures: {}", BUILTIN_NAMES.join(", "));
    let sum = connected_sum(&builtin_example("U1")?, 0, 1, &builtin_example("local_trefoil")?, 0)?;
    print!("U1 # trefoil:\n{}", serialize_diagram(&sum));
    Ok(())
}
