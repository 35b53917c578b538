//! Small worked instances: the leaf-pruning graph whose lattice of closed
//! sets bottoms out at its 2-core, and the two-clause formula with its
//! closed and feasible sets below the all-ones assignment.

use crate::pruning::Graph;
use crate::sat::CnfFormula;
use crate::sets::{GroundSet, SetFamily};

/// Vertices `a..g`, edges a–d, a–c, b–c, c–e, e–f, e–g, f–g.
///
/// Leaves are `b` and `d`; `c` needs two of `a`, `b`, `e` gone; the 2-core is
/// the triangle `e, f, g`.
pub fn figure_one_graph() -> Graph {
    Graph::new(
        GroundSet::letters(7),
        &[(0, 3), (0, 2), (1, 2), (2, 4), (4, 5), (4, 6), (5, 6)],
    )
    .expect("fixture edges are valid")
}

/// `(¬x1 ∨ ¬x2 ∨ x3) ∧ (x2 ∨ ¬x3 ∨ ¬x4)`.
pub fn sat_example_formula() -> CnfFormula {
    CnfFormula::new(4, vec![vec![-1, -2, 3], vec![2, -3, -4]]).expect("fixture clauses are valid")
}

fn family(lists: &[&[&str]]) -> SetFamily {
    let ground = GroundSet::numbered(4);
    let members: Vec<_> = lists
        .iter()
        .map(|l| ground.set_from_labels(l.iter()).expect("fixture labels exist"))
        .collect();
    SetFamily::new(ground, members)
}

/// Numeric supports of the valid partial assignments below `(1,1,1,1)`.
pub fn sat_example_closed_sets() -> SetFamily {
    family(&[
        &["1", "2", "3", "4"],
        &["2", "3", "4"],
        &["1", "2", "3"],
        &["2", "4"],
        &["2", "3"],
        &["1", "3"],
        &["4"],
        &["2"],
        &["3"],
        &["1"],
        &[],
    ])
}

/// Complements of [`sat_example_closed_sets`].
pub fn sat_example_feasible_sets() -> SetFamily {
    family(&[
        &[],
        &["1"],
        &["4"],
        &["1", "3"],
        &["1", "4"],
        &["2", "4"],
        &["1", "2", "3"],
        &["1", "3", "4"],
        &["1", "2", "4"],
        &["2", "3", "4"],
        &["1", "2", "3", "4"],
    ])
}
