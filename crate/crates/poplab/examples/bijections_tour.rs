//! The constructive bijections: cycle forms onto pattern avoiders, and
//! hypercube faces onto "good" permutations.
//!
//! Run with: `cargo run --example bijections_tour`

use poplab::bijections::{
    avoider_to_cycles, cycles_to_avoider, enumerate_faces, face_to_good_perm, good_perm_to_face,
    verify_faces, CycleForm, HypercubeFace,
};
use poplab::perms::Permutation;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // Permutations whose cycles all have length <= k map bijectively onto
    // the avoiders of the dashed flat pattern a-a1..ak.
    let cycles: CycleForm = "(1 2)(3 4)".parse()?;
    let p = cycles.to_permutation();
    println!("cycle form {cycles} is the permutation {p}");
    let image = cycles_to_avoider(&p, 2)?;
    println!("its avoider image for k = 2 is {image}");
    let back = avoider_to_cycles(&image, 2)?;
    println!("mapped back: {}", CycleForm::from_permutation(&back));
    assert_eq!(back, p);

    // A 3-cycle is out of domain for k = 2...
    let three: Permutation = "231".parse()?;
    match cycles_to_avoider(&three, 2) {
        Err(e) => println!("(1 2 3) with k = 2 -> {e}"),
        Ok(_) => unreachable!(),
    }
    // ...but fine for k = 3.
    println!("(1 2 3) with k = 3 -> {}", cycles_to_avoider(&three, 3)?);

    // Faces of the n-dimensional 0-1 hypercube: a word over {0, 1, x, y}
    // with one x and one y (x first). Each face corresponds to a unique
    // "good" permutation: one avoiding 2-1-3 with exactly one consecutive
    // occurrence of 312.
    let face: HypercubeFace = "110x0y01".parse()?;
    let good = face_to_good_perm(&face);
    println!("\nface {face} -> good permutation {good}");
    let recovered = good_perm_to_face(&good).expect("good permutations map back");
    println!("{good} -> face {recovered}");
    assert_eq!(recovered.to_string(), face.to_string());

    // Enumerate every face of a small cube and audit the bijection.
    let faces = enumerate_faces(3);
    println!("\nthe 3-cube has {} two-dimensional faces:", faces.len());
    for f in &faces {
        println!("  {f} -> {}", face_to_good_perm(f));
    }
    let report = verify_faces(3)?;
    println!("\n{report}");
    Ok(())
}
