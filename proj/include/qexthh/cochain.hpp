#pragma once

#include "qexthh/algebra.hpp"
#include "qexthh/matrix.hpp"
#include "qexthh/report.hpp"

namespace qexthh {

/// Ordered k-basis of the degree-n cochain space (the n-fold direct sum of
/// the twisted bimodule): blocks i = 0..n-1, each ordered
/// (e_i, x e_i, y e_i, yx e_i); dimension exactly 4n.
struct CochainBasisLayout {
    int degree = 0;
    int dimension() const { return 4 * degree; }
    int index(int block, int b) const { return 4 * block + b; }
};

/// The 4(n+1) x 4n matrix of d_n realized from the four per-block formulas:
///   e_i   -> [1 + (-1)^n q^i a] x e_i + [q^{n-i-1} + (-1)^n b] y e_{i+1}
///   x e_i -> [q^{n-i-1} + (-1)^{n+1} q b] yx e_{i+1}
///   y e_i -> [-q + (-1)^n q^i a] yx e_i
///   yx e_i -> 0
/// where (a, b) is psi realized over f. Requires n >= 1.
ExactMatrix d_matrix(const DiagonalAutomorphism& psi, int n, const Field& f);

/// The same map built from the general form
///   lambda e_i -> [x lambda + (-1)^n q^i lambda psi(x)] e_i
///               + [q^{n-i-1} y lambda + (-1)^n lambda psi(y)] e_{i+1}
/// via algebra multiplication; agrees with d_matrix entrywise.
ExactMatrix d_matrix_general(const DiagonalAutomorphism& psi, int n, const Field& f);

/// Cohomology dimensions of the twisted bimodule for 0 <= n <= max_degree
/// by exact ranks: hh(0) = dim Ker d_1 = 4 - rank d_1 and
/// hh(n) = (4(n+1) - rank d_{n+1}) - rank d_n for n >= 1. The report also
/// carries dim Ker d_{n+1}, dim Im d_n and the transferred homology value
/// per degree.
DimensionReport cohomology_dims(const DiagonalAutomorphism& psi, int max_degree, const Field& f);

/// theta = (nu psi)^{-1} = (-q a^{-1}, -q^{-1} b^{-1}); computing cohomology
/// twisted by psi simultaneously computes homology twisted by theta.
/// Symbolic parameters stay symbolic: (eps q^s, eps' q^t) maps to
/// (-eps q^{1-s}, -eps' q^{-(t+1)}).
DiagonalAutomorphism homology_transfer(const DiagonalAutomorphism& psi);

/// Homology dimensions dim HH_n for coefficients twisted by theta,
/// 0 <= n <= max_degree, obtained by solving psi = nu^{-1} theta^{-1} and
/// computing cohomology twisted by psi.
DimensionReport homology_dims(const DiagonalAutomorphism& theta, int max_degree, const Field& f);

} // namespace qexthh
