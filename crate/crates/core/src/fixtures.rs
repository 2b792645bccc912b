//! Named example matrices used by golden tests and the CLI.

use crate::asm::Asm;

fn asm(rows: &[&[i64]]) -> Asm {
    Asm::new(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).expect("fixture is an ASM")
}

/// 4x4 ASM with `Perm = {4123, 3412}`.
pub fn rothe_example() -> Asm {
    asm(&[&[0, 0, 1, 0], &[1, 0, -1, 1], &[0, 1, 0, 0], &[0, 0, 1, 0]])
}

/// The bump of `31524` at `(3,4)`.
pub fn example_a5() -> Asm {
    asm(&[
        &[0, 0, 1, 0, 0],
        &[1, 0, 0, 0, 0],
        &[0, 0, 0, 1, 0],
        &[0, 1, 0, -1, 1],
        &[0, 0, 0, 1, 0],
    ])
}

/// Sits strictly between `31254` and [`example_a5`].
pub fn example_b5() -> Asm {
    asm(&[
        &[0, 0, 1, 0, 0],
        &[1, 0, 0, 0, 0],
        &[0, 1, -1, 1, 0],
        &[0, 0, 1, -1, 1],
        &[0, 0, 0, 1, 0],
    ])
}

/// `2341 ∧ 3124`.
pub fn meet_counterexample() -> Asm {
    asm(&[&[0, 1, 0, 0], &[1, -1, 1, 0], &[0, 1, 0, 0], &[0, 0, 0, 1]])
}

/// Top of the 10-element weak interval.
pub fn interval_top() -> Asm {
    asm(&[&[0, 0, 1, 0], &[0, 1, -1, 1], &[1, 0, 0, 0], &[0, 0, 1, 0]])
}

/// Transpose of [`interval_top`]; also an equidimensional complete intersection.
pub fn interval_top_transpose() -> Asm {
    asm(&[&[0, 0, 1, 0], &[0, 1, 0, 0], &[1, -1, 0, 1], &[0, 1, 0, 0]])
}

/// `pi_1` of [`interval_top_transpose`]: `Perm = {2341, 3412}`.
pub fn mixed_codim_example() -> Asm {
    asm(&[&[0, 1, 0, 0], &[0, 0, 1, 0], &[1, -1, 0, 1], &[0, 1, 0, 0]])
}

/// `pi_2` of [`mixed_codim_example`].
pub fn mixed_codim_pi2() -> Asm {
    asm(&[&[0, 1, 0, 0], &[1, -1, 1, 0], &[0, 0, 0, 1], &[0, 1, 0, 0]])
}

/// 8x8 ASM whose codimension is one less than its diagram size.
pub fn codim_gap_8x8() -> Asm {
    asm(&[
        &[0, 0, 0, 0, 1, 0, 0, 0],
        &[0, 0, 0, 1, 0, 0, 0, 0],
        &[0, 0, 1, 0, 0, 0, 0, 0],
        &[0, 1, 0, 0, -1, 0, 0, 1],
        &[1, 0, 0, -1, 0, 0, 1, 0],
        &[0, 0, 0, 0, 0, 1, 0, 0],
        &[0, 0, 0, 0, 1, 0, 0, 0],
        &[0, 0, 0, 1, 0, 0, 0, 0],
    ])
}

/// The nine weak-order maximal elements of `ASM(4)` from the reference list.
///
/// The second entry is `pi_1` of the third, so it is not maximal; see
/// [`maximal_asm4`] for the computed set.
pub fn maximal_asm4_reference() -> Vec<Asm> {
    vec![
        asm(&[&[0, 1, 0, 0], &[1, -1, 1, 0], &[0, 1, -1, 1], &[0, 0, 1, 0]]),
        asm(&[&[0, 1, 0, 0], &[0, 0, 1, 0], &[1, 0, -1, 1], &[0, 0, 1, 0]]),
        asm(&[&[0, 0, 1, 0], &[0, 1, 0, 0], &[1, 0, -1, 1], &[0, 0, 1, 0]]),
        asm(&[&[0, 0, 1, 0], &[0, 1, 0, 0], &[1, -1, 0, 1], &[0, 1, 0, 0]]),
        asm(&[&[0, 1, 0, 0], &[1, -1, 0, 1], &[0, 0, 1, 0], &[0, 1, 0, 0]]),
        asm(&[&[0, 0, 1, 0], &[0, 1, -1, 1], &[1, -1, 1, 0], &[0, 1, 0, 0]]),
        asm(&[&[0, 0, 0, 1], &[0, 1, 0, 0], &[1, -1, 1, 0], &[0, 1, 0, 0]]),
        asm(&[&[0, 0, 1, 0], &[0, 1, -1, 1], &[0, 0, 1, 0], &[1, 0, 0, 0]]),
        asm(&[&[0, 0, 0, 1], &[0, 0, 1, 0], &[0, 1, 0, 0], &[1, 0, 0, 0]]),
    ]
}

/// The reference list with its second entry replaced by the missing maximal
/// element, which has an essential cell in every row.
pub fn maximal_asm4() -> Vec<Asm> {
    let mut v = maximal_asm4_reference();
    v[1] = asm(&[&[0, 0, 1, 0], &[1, 0, -1, 1], &[0, 0, 1, 0], &[0, 1, 0, 0]]);
    v
}

/// Every named fixture with its CLI name.
pub fn named() -> Vec<(&'static str, Asm)> {
    vec![
        ("rothe-example", rothe_example()),
        ("example-a5", example_a5()),
        ("example-b5", example_b5()),
        ("meet-counterexample", meet_counterexample()),
        ("interval-top", interval_top()),
        ("interval-top-transpose", interval_top_transpose()),
        ("mixed-codim", mixed_codim_example()),
        ("mixed-codim-pi2", mixed_codim_pi2()),
        ("codim-gap-8x8", codim_gap_8x8()),
    ]
}
