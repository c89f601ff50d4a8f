//! Isomorphism decisions: permutational equivalence, PET matrices, exhaustive
//! graph isomorphism, and the partite-set characterizations for constructed
//! pairs.

mod graph;
mod pair;
mod perm;

use serde::{Deserialize, Serialize};

use crate::matrix::ZMatrix;

pub use graph::is_isomorphism;
pub use pair::{
    decide_pair_isomorphism, decide_pair_isomorphism_with, has_interchanging_automorphism,
    partite_respecting_iso, property_eta_certificate, property_pi, respects_partite, EtaCertificate,
    PartiteIso, PartiteShape, Strategy,
};
pub use perm::{
    invert, is_permutation, is_pet, non_pet_by_sums, perm_equivalent, pet_witness, PermWitness,
};

/// Which procedure settled an isomorphism question.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum DecidedBy {
    #[serde(rename = "exhaustive")]
    Exhaustive,
    /// Property η certified; isomorphic iff one factor has an interchanging
    /// automorphism.
    #[serde(rename = "theorem-4.1")]
    PartiteCharacterization,
    /// One factor biregular with distinct degrees, the other balanced;
    /// isomorphic iff the balanced factor is PET.
    #[serde(rename = "theorem-4.5")]
    BiregularCriterion,
    #[serde(rename = "degree-filter")]
    DegreeFilter,
    #[serde(rename = "charpoly-filter")]
    CharpolyFilter,
    /// The two biadjacency matrices are equal.
    #[serde(rename = "identity")]
    Identity,
}

impl DecidedBy {
    pub fn is_theorem(self) -> bool {
        matches!(
            self,
            DecidedBy::PartiteCharacterization | DecidedBy::BiregularCriterion
        )
    }

    pub fn tag(self) -> &'static str {
        match self {
            DecidedBy::Exhaustive => "exhaustive",
            DecidedBy::PartiteCharacterization => "theorem-4.1",
            DecidedBy::BiregularCriterion => "theorem-4.5",
            DecidedBy::DegreeFilter => "degree-filter",
            DecidedBy::CharpolyFilter => "charpoly-filter",
            DecidedBy::Identity => "identity",
        }
    }
}

impl std::fmt::Display for DecidedBy {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.tag())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IsoVerdict {
    pub isomorphic: bool,
    /// Vertex bijection from the first graph to the second (full adjacency
    /// numbering).
    pub witness: Option<Vec<usize>>,
    pub respects_partite: Option<bool>,
    pub decided_by: DecidedBy,
}

impl IsoVerdict {
    pub(crate) fn negative(decided_by: DecidedBy) -> Self {
        IsoVerdict {
            isomorphic: false,
            witness: None,
            respects_partite: None,
            decided_by,
        }
    }
}

/// Exhaustive isomorphism test on two adjacency matrices (symmetric, 0/1,
/// zero diagonal). The verdict carries a checkable witness when positive.
pub fn graph_isomorphic(a: &ZMatrix, b: &ZMatrix) -> IsoVerdict {
    let witness = graph::IsoSearch::new(a, b).and_then(|s| s.find());
    IsoVerdict {
        isomorphic: witness.is_some(),
        witness,
        respects_partite: None,
        decided_by: DecidedBy::Exhaustive,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::BipartiteGraph;

    fn z(rows: &[&[i64]]) -> ZMatrix {
        ZMatrix::from_rows(rows).unwrap()
    }

    fn relabel(a: &ZMatrix, perm: &[usize]) -> ZMatrix {
        // b[perm[u]][perm[w]] = a[u][w]
        let inv = invert(perm);
        ZMatrix::from_fn(a.rows(), a.cols(), |i, j| a[(inv[i], inv[j])].clone())
    }

    #[test]
    fn path_vs_star() {
        let p4 = z(&[&[0, 1, 0, 0], &[1, 0, 1, 0], &[0, 1, 0, 1], &[0, 0, 1, 0]]);
        let star = BipartiteGraph::complete(1, 3).full_adjacency();
        let v = graph_isomorphic(&p4, &star);
        assert!(!v.isomorphic);
        assert_eq!(v.witness, None);
        assert_eq!(v.decided_by, DecidedBy::Exhaustive);
    }

    #[test]
    fn relabelled_graph_is_isomorphic() {
        let g = BipartiteGraph::from_rows(&[[1, 1, 0], [1, 0, 1], [1, 0, 0]]).unwrap();
        let a = g.full_adjacency();
        let perm = [4, 0, 5, 2, 1, 3];
        let b = relabel(&a, &perm);
        let v = graph_isomorphic(&a, &b);
        assert!(v.isomorphic);
        assert!(is_isomorphism(&a, &b, v.witness.as_ref().unwrap()));
    }

    #[test]
    fn regular_graphs_with_same_refinement() {
        // C6 vs two triangles: both 2-regular, refinement cannot split them
        let c6 = ZMatrix::from_fn(6, 6, |i, j| i64::from((i + 1) % 6 == j || (j + 1) % 6 == i).into());
        let tri = ZMatrix::from_fn(6, 6, |i, j| i64::from(i != j && i / 3 == j / 3).into());
        assert!(!graph_isomorphic(&c6, &tri).isomorphic);
        let shifted = relabel(&c6, &[3, 5, 1, 0, 2, 4]);
        assert!(graph_isomorphic(&c6, &shifted).isomorphic);
    }

    #[test]
    fn size_mismatch() {
        assert!(!graph_isomorphic(&ZMatrix::zeros(2, 2), &ZMatrix::zeros(3, 3)).isomorphic);
        assert!(graph_isomorphic(&ZMatrix::zeros(0, 0), &ZMatrix::zeros(0, 0)).isomorphic);
    }

    #[test]
    fn tags_on_the_wire() {
        assert_eq!(
            serde_json::to_string(&DecidedBy::BiregularCriterion).unwrap(),
            "\"theorem-4.5\""
        );
        assert_eq!(DecidedBy::CharpolyFilter.to_string(), "charpoly-filter");
    }
}
