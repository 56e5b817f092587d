#pragma once

#include <map>
#include <string>
#include <vector>

#include "qexthh/algebra.hpp"
#include "qexthh/matrix.hpp"

namespace qexthh {

/// Sparse element of the n-fold tensor power of the algebra supported on
/// words in the degree-1 generators: a map from length-n words over the
/// alphabet {x, y} to scalars. Zero coefficients are never stored.
class TensorElement {
public:
    using Word = std::string; // letters 'x' and 'y'

    TensorElement(Field f, int arity) : field_(std::move(f)), arity_(arity) {}

    int arity() const { return arity_; }
    const Field& field() const { return field_; }
    const std::map<Word, Scalar>& terms() const { return terms_; }

    void add(const Word& w, const Scalar& c);
    Scalar coefficient(const Word& w) const;
    bool operator==(const TensorElement& other) const {
        return arity_ == other.arity_ && terms_ == other.terms_;
    }

private:
    Field field_;
    int arity_;
    std::map<Word, Scalar> terms_;
};

/// The resolution generator f^n_i, built from f^0_0 = 1, f^1_0 = x,
/// f^1_1 = y by f^n_i = f^{n-1}_{i-1} (x) y + q^i f^{n-1}_i (x) x, with
/// f^n_{-1} = 0 = f^n_{n+1}. Its support consists of the words with exactly
/// i letters y. Throws IndexError unless 0 <= i <= n.
TensorElement build_generator(const Field& f, int n, int i);

/// Element of the free bimodule P^n = (+)_{i=0..n} Lambda (x) f^n_i (x)
/// Lambda, stored per generator index as a 4x4 coefficient matrix: entry
/// (u, v) is the coefficient of basis_u . ~f^n_i . basis_v. The k-basis is
/// ordered generator-major, then (left basis, right basis):
/// index(i, u, v) = 16 i + 4 u + v, so dim_k P^n = 16 (n + 1).
class BimoduleElement {
public:
    BimoduleElement(Field f, int layer) : field_(std::move(f)), layer_(layer) {}

    int layer() const { return layer_; }
    int k_dimension() const { return 16 * (layer_ + 1); }
    const Field& field() const { return field_; }

    void add(int i, int u, int v, const Scalar& c);
    Scalar coefficient(int i, int u, int v) const;

    /// Nonzero coordinates as (flat index, scalar) in the layout above.
    std::vector<std::pair<int, Scalar>> coordinates() const;

    bool operator==(const BimoduleElement& other) const {
        return layer_ == other.layer_ && terms_ == other.terms_;
    }

private:
    Field field_;
    int layer_;
    std::map<std::array<int, 3>, Scalar> terms_;
};

/// delta_n(~f^n_i) in P^{n-1}:
///   [x ~f^{n-1}_i + (-1)^n q^i ~f^{n-1}_i x]
///   + [q^{n-i} y ~f^{n-1}_{i-1} + (-1)^n ~f^{n-1}_{i-1} y],
/// where terms addressing the nonexistent indices -1 and n are dropped.
/// Requires n >= 1 and 0 <= i <= n.
BimoduleElement delta_generator_image(const Field& f, int n, int i);

/// The 16n x 16(n+1) matrix of delta_n as a k-linear map P^n -> P^{n-1};
/// column index(i, u, v) holds the coordinates of
/// basis_u . delta_n(~f^n_i) . basis_v.
ExactMatrix delta_k_matrix(const Field& f, int n);

/// The 4 x 16 matrix of the augmentation P^0 = Lambda (x) Lambda -> Lambda,
/// a (x) b -> a b.
ExactMatrix augmentation_matrix(const Field& f);

struct ResolutionReport {
    // complex_ok[n] for 1 <= n <= complex_max: delta_n . delta_{n+1} = 0
    std::map<int, bool> complex_ok;
    // exact_ok[n] for 0 <= n <= exact_max; at n = 0 the check is against the
    // augmentation: rank(mu) = 4, mu . delta_1 = 0, rank(delta_1) = ker mu = 12
    std::map<int, bool> exact_ok;

    bool all_ok() const;
};

/// Verifies the complex property for 1 <= n <= complex_max and exactness
/// for 0 <= n <= exact_max by exact rank bookkeeping.
ResolutionReport verify_resolution(const Field& f, int complex_max, int exact_max);

} // namespace qexthh
