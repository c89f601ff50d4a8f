//! Exact spectral certificates for bipartite graphs.
//!
//! The normalized Laplacian `I - D^{-1/2} A D^{-1/2}` has irrational entries in
//! general, but `D^{-1/2} A D^{-1/2}` is similar to `D⁻¹A`, whose characteristic
//! polynomial is rational. We store that polynomial; an eigenvalue `μ` of
//! `D⁻¹A` corresponds to the normalized Laplacian eigenvalue `1 - μ`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::block::BlockMatrix2x2;
use crate::charpoly::{charpoly, gen_charpoly};
use crate::construction::ConstructedPair;
use crate::error::Result;
use crate::graph::BipartiteGraph;
use crate::matrix::{QMatrix, ZMatrix};
use crate::poly::QPoly;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpectralCertificate {
    /// `det(xI - A)`.
    pub adjacency: QPoly,
    /// `det(xI - D⁻¹A)`.
    pub normalized: QPoly,
}

impl SpectralCertificate {
    /// Normalized Laplacian eigenvalues (`1 - μ` over roots `μ` of the
    /// `D⁻¹A` polynomial), ascending, with multiplicity.
    pub fn normalized_laplacian_eigenvalues(&self) -> Vec<f64> {
        let mut out: Vec<f64> = self
            .normalized
            .real_roots_f64()
            .into_iter()
            .map(|mu| 1.0 - mu)
            .collect();
        out.sort_by(f64::total_cmp);
        out
    }

    pub fn adjacency_eigenvalues(&self) -> Vec<f64> {
        self.adjacency.real_roots_f64()
    }
}

/// Both polynomials for `g`; fails on an isolated vertex.
pub fn certify(g: &BipartiteGraph) -> Result<SpectralCertificate> {
    g.check_no_isolated()?;
    let a = g.full_adjacency();
    let d = degree_matrix(g);
    Ok(SpectralCertificate {
        adjacency: charpoly(&a)?,
        normalized: gen_charpoly(&a, &d)?,
    })
}

fn degree_matrix(g: &BipartiteGraph) -> ZMatrix {
    let degs: Vec<BigInt> = g.degrees().concat().into_iter().map(BigInt::from).collect();
    ZMatrix::diagonal(&degs)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairSpectra {
    pub g1: SpectralCertificate,
    pub g2: SpectralCertificate,
}

impl PairSpectra {
    pub fn cospectral_adjacency(&self) -> bool {
        self.g1.adjacency == self.g2.adjacency
    }

    pub fn cospectral_normalized(&self) -> bool {
        self.g1.normalized == self.g2.normalized
    }
}

pub fn certify_pair(p: &ConstructedPair) -> Result<PairSpectra> {
    Ok(PairSpectra {
        g1: certify(p.g1())?,
        g2: certify(p.g2())?,
    })
}

/// Equal adjacency characteristic polynomials.
pub fn cospectral_adjacency(p: &ConstructedPair) -> bool {
    if p.g1().order() != p.g2().order() {
        return false;
    }
    let a1 = charpoly(&p.g1().full_adjacency()).expect("adjacency is square");
    let a2 = charpoly(&p.g2().full_adjacency()).expect("adjacency is square");
    a1 == a2
}

/// Equal `D⁻¹A` characteristic polynomials.
pub fn cospectral_normalized(p: &ConstructedPair) -> Result<bool> {
    let c1 = certify(p.g1())?;
    if p.g1().order() != p.g2().order() {
        p.g2().check_no_isolated()?;
        return Ok(false);
    }
    let c2 = certify(p.g2())?;
    Ok(c1.normalized == c2.normalized)
}

/// `I - D⁻¹A` with blocks conformal to the bipartition.
fn rational_laplacian(g: &BipartiteGraph) -> BlockMatrix2x2<BigRational> {
    let d = g.degrees();
    let scaled = |biadj: &ZMatrix, degs: &[usize]| -> QMatrix {
        QMatrix::from_fn(biadj.rows(), biadj.cols(), |i, j| {
            -BigRational::new(biadj[(i, j)].clone(), BigInt::from(degs[i]))
        })
    };
    let lap = BlockMatrix2x2::anti_diagonal(
        scaled(g.biadj(), &d.left),
        scaled(&g.biadj().transpose(), &d.right),
    );
    let id = BlockMatrix2x2::diagonal(QMatrix::identity(g.left()), QMatrix::identity(g.right()));
    BlockMatrix2x2::new(
        id.blocks()[0].clone(),
        lap.blocks()[1].clone(),
        lap.blocks()[2].clone(),
        id.blocks()[3].clone(),
    )
    .expect("conformal by construction")
}

/// Checks `𝓛(G_{A(G1) ⊻⊗ A(G2)}) = 2I - 𝓛(G1) ⊻⊗ 𝓛(G2)` exactly, with every
/// normalized Laplacian replaced by its rational similar form `I - D⁻¹A`.
/// Also checks that the product graph's adjacency is the bipartition-conformal
/// `A(G1) ⊻⊗ A(G2)`.
pub fn laplacian_product_check(g1: &BipartiteGraph, g2: &BipartiteGraph) -> Result<bool> {
    g1.check_no_isolated()?;
    g2.check_no_isolated()?;
    let a1 = BlockMatrix2x2::anti_diagonal(g1.biadj().clone(), g1.biadj().transpose());
    let a2 = BlockMatrix2x2::anti_diagonal(g2.biadj().clone(), g2.biadj().transpose());
    let prod = a1.partitioned_tensor(&a2);
    let product_graph = BipartiteGraph::new(prod.blocks()[1].clone())?;
    // the assembled product must be exactly the product graph's adjacency
    if !prod.is_anti_diagonal()
        || prod.assemble() != product_graph.full_adjacency()
        || prod.blocks()[2] != &prod.blocks()[1].transpose()
    {
        return Ok(false);
    }
    product_graph.check_no_isolated()?;

    let lhs = rational_laplacian(&product_graph).assemble();
    let tensor = rational_laplacian(g1).partitioned_tensor(&rational_laplacian(g2));
    let two = BigRational::from_integer(2.into());
    let n = lhs.rows();
    if tensor.assemble().shape() != (n, n) {
        return Ok(false);
    }
    let rhs = QMatrix::identity(n).scale(&two).sub(&tensor.assemble())?;
    Ok(lhs == rhs)
}

/// Bipartite adjacency spectra are symmetric: `p(-x) = (-1)^n p(x)`.
pub fn has_symmetric_spectrum(p: &QPoly) -> bool {
    let n = p.degree().unwrap_or(0);
    let sign = if n.is_multiple_of(2) {
        BigRational::one()
    } else {
        -BigRational::one()
    };
    let reflected = p.reflect();
    let scaled = QPoly::new(p.coeffs().iter().map(|c| c * &sign).collect());
    reflected == scaled && !p.is_zero()
}

/// `1` is a root of the `D⁻¹A` polynomial (Laplacian eigenvalue 0).
pub fn has_unit_root(p: &QPoly) -> bool {
    p.eval(&BigRational::one()).is_zero()
}
