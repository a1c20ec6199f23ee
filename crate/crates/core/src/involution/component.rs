//! Simple ideals of a standard Levi factor `m`, as diagonal blocks of matrix ideals.

use crate::lie::{Element, LieAlgebra};
use crate::linalg::{ComplexMatrix, RealSubspace};
use crate::roots::SimpleSet;

/// The copy of `sl_size` sitting in rows and columns `start..start + size` of ideal `ideal`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Component {
    pub ideal: usize,
    pub start: usize,
    pub size: usize,
}

impl Component {
    /// The whole `q`-th simple ideal.
    pub fn whole_ideal(g: &LieAlgebra, q: usize) -> Self {
        Component { ideal: q, start: 0, size: g.ideals()[q].kind.matrix_size() }
    }

    pub fn rank(&self) -> usize {
        self.size - 1
    }

    /// Global indices of the simple roots of this component.
    pub fn simple_roots(&self, g: &LieAlgebra) -> std::ops::Range<usize> {
        let off = g.ideals()[self.ideal].simple_root_offset + self.start;
        off..off + self.rank()
    }

    /// Complex basis indices spanning the component.
    pub fn indices(&self, g: &LieAlgebra) -> Vec<usize> {
        let mut ks: Vec<usize> = (0..self.rank()).map(|i| g.h_index(self.ideal, self.start + i)).collect();
        let r = self.start..self.start + self.size;
        for a in r.clone() {
            for b in r.clone() {
                if a != b {
                    ks.push(g.unit_index(self.ideal, a, b));
                }
            }
        }
        ks.sort_unstable();
        ks
    }

    pub fn subspace(&self, g: &LieAlgebra) -> RealSubspace {
        g.span_of_basis(&self.indices(g))
    }

    /// The `size × size` block of `x` (assumed to lie in the component).
    pub fn extract(&self, g: &LieAlgebra, x: &[crate::linalg::Rational]) -> ComplexMatrix {
        let full = g.to_matrix(self.ideal, x);
        let mut out = ComplexMatrix::zeros(self.size);
        for a in 0..self.size {
            for b in 0..self.size {
                out[(a, b)] = full[(self.start + a, self.start + b)].clone();
            }
        }
        out
    }

    pub fn embed(&self, g: &LieAlgebra, block: &ComplexMatrix) -> Element {
        let n = g.ideals()[self.ideal].kind.matrix_size();
        let mut full = ComplexMatrix::zeros(n);
        for a in 0..self.size {
            for b in 0..self.size {
                full[(self.start + a, self.start + b)] = block[(a, b)].clone();
            }
        }
        g.from_matrix(self.ideal, &full)
    }
}

/// Components of the Levi factor with simple roots `subset`: one per connected
/// run of simple roots inside a simple ideal, in index order.
pub fn components(g: &LieAlgebra, subset: &SimpleSet) -> Vec<Component> {
    let mut out = Vec::new();
    for (q, ideal) in g.ideals().iter().enumerate() {
        let off = ideal.simple_root_offset;
        let mut i = 0;
        while i < ideal.kind.rank {
            if subset.contains(&(off + i)) {
                let start = i;
                while i < ideal.kind.rank && subset.contains(&(off + i)) {
                    i += 1;
                }
                out.push(Component { ideal: q, start, size: i - start + 1 });
            } else {
                i += 1;
            }
        }
    }
    out
}

pub fn span_components(g: &LieAlgebra, comps: &[Component]) -> RealSubspace {
    RealSubspace::sum_all(g.real_dim(), comps.iter().map(|c| c.subspace(g)).collect::<Vec<_>>().iter())
}
