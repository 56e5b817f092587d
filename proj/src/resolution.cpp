#include "qexthh/resolution.hpp"

namespace qexthh {

void TensorElement::add(const Word& w, const Scalar& c) {
    if (static_cast<int>(w.size()) != arity_)
        throw IndexError("word length " + std::to_string(w.size()) + " in arity-" +
                         std::to_string(arity_) + " tensor");
    if (c.is_zero()) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_.emplace(w, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Scalar TensorElement::coefficient(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? field_.zero() : it->second;
}

TensorElement build_generator(const Field& f, int n, int i) {
    if (n < 0 || i < 0 || i > n)
        throw IndexError("generator index (" + std::to_string(n) + ", " + std::to_string(i) +
                         ") out of range");
    // level-by-level evaluation of the recursion; level[j] = f^m_j
    std::vector<TensorElement> level;
    level.emplace_back(f, 0);
    level[0].add("", f.one());
    for (int m = 1; m <= n; ++m) {
        std::vector<TensorElement> next;
        for (int j = 0; j <= m; ++j) {
            TensorElement t(f, m);
            if (j >= 1)
                for (const auto& [w, c] : level[static_cast<std::size_t>(j - 1)].terms())
                    t.add(w + "y", c);
            if (j <= m - 1) {
                Scalar qi = f.q_power(j);
                for (const auto& [w, c] : level[static_cast<std::size_t>(j)].terms())
                    t.add(w + "x", c * qi);
            }
            next.push_back(std::move(t));
        }
        level = std::move(next);
    }
    return level[static_cast<std::size_t>(i)];
}

void BimoduleElement::add(int i, int u, int v, const Scalar& c) {
    if (i < 0 || i > layer_ || u < 0 || u > 3 || v < 0 || v > 3)
        throw IndexError("bimodule coordinate out of range in layer " + std::to_string(layer_));
    if (c.is_zero()) return;
    std::array<int, 3> key{i, u, v};
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Scalar BimoduleElement::coefficient(int i, int u, int v) const {
    auto it = terms_.find({i, u, v});
    return it == terms_.end() ? field_.zero() : it->second;
}

std::vector<std::pair<int, Scalar>> BimoduleElement::coordinates() const {
    std::vector<std::pair<int, Scalar>> out;
    out.reserve(terms_.size());
    for (const auto& [key, c] : terms_) out.emplace_back(16 * key[0] + 4 * key[1] + key[2], c);
    return out;
}

BimoduleElement delta_generator_image(const Field& f, int n, int i) {
    if (n < 1 || i < 0 || i > n)
        throw IndexError("delta index (" + std::to_string(n) + ", " + std::to_string(i) +
                         ") out of range");
    BimoduleElement out(f, n - 1);
    Scalar sign = n % 2 == 0 ? f.one() : -f.one();
    if (i <= n - 1) { // the f^{n-1}_i bracket
        out.add(i, kX, kOne, f.one());
        out.add(i, kOne, kX, sign * f.q_power(i));
    }
    if (i >= 1) { // the f^{n-1}_{i-1} bracket
        out.add(i - 1, kY, kOne, f.q_power(n - i));
        out.add(i - 1, kOne, kY, sign);
    }
    return out;
}

ExactMatrix delta_k_matrix(const Field& f, int n) {
    if (n < 1) throw IndexError("delta_k_matrix requires n >= 1");
    ExactMatrix m(f, 16 * n, 16 * (n + 1));
    for (int i = 0; i <= n; ++i) {
        BimoduleElement image = delta_generator_image(f, n, i);
        for (int u = 0; u < 4; ++u)
            for (int v = 0; v < 4; ++v) {
                int col = 16 * i + 4 * u + v;
                // basis_u . (a ~f^{n-1}_j b) . basis_v = (basis_u a) ~f (b basis_v)
                for (int j = 0; j < n; ++j)
                    for (int a = 0; a < 4; ++a)
                        for (int b = 0; b < 4; ++b) {
                            Scalar c = image.coefficient(j, a, b);
                            if (c.is_zero()) continue;
                            AlgebraElement left =
                                AlgebraElement::basis(f, u) * AlgebraElement::basis(f, a);
                            AlgebraElement right =
                                AlgebraElement::basis(f, b) * AlgebraElement::basis(f, v);
                            for (int uu = 0; uu < 4; ++uu) {
                                if (left.coeff(uu).is_zero()) continue;
                                for (int vv = 0; vv < 4; ++vv) {
                                    if (right.coeff(vv).is_zero()) continue;
                                    m.add(16 * j + 4 * uu + vv, col,
                                          c * left.coeff(uu) * right.coeff(vv));
                                }
                            }
                        }
            }
    }
    return m;
}

ExactMatrix augmentation_matrix(const Field& f) {
    ExactMatrix m(f, 4, 16);
    for (int u = 0; u < 4; ++u)
        for (int v = 0; v < 4; ++v) {
            AlgebraElement prod = AlgebraElement::basis(f, u) * AlgebraElement::basis(f, v);
            for (int b = 0; b < 4; ++b) m.add(b, 4 * u + v, prod.coeff(b));
        }
    return m;
}

bool ResolutionReport::all_ok() const {
    for (const auto& [n, ok] : complex_ok)
        if (!ok) return false;
    for (const auto& [n, ok] : exact_ok)
        if (!ok) return false;
    return true;
}

ResolutionReport verify_resolution(const Field& f, int complex_max, int exact_max) {
    if (complex_max < 1 && exact_max < 0) throw IndexError("nothing to verify");
    int top = std::max(complex_max + 1, exact_max + 1);
    std::vector<ExactMatrix> delta;
    delta.reserve(static_cast<std::size_t>(top));
    for (int n = 1; n <= top; ++n) delta.push_back(delta_k_matrix(f, n));
    auto delta_at = [&](int n) -> const ExactMatrix& {
        return delta[static_cast<std::size_t>(n - 1)];
    };

    ResolutionReport report;
    for (int n = 1; n <= complex_max; ++n)
        report.complex_ok[n] = multiply(delta_at(n), delta_at(n + 1)).is_zero();
    if (exact_max >= 0) {
        ExactMatrix mu = augmentation_matrix(f);
        report.exact_ok[0] = rank(mu) == 4 && multiply(mu, delta_at(1)).is_zero() &&
                             rank(delta_at(1)) == 12;
    }
    for (int n = 1; n <= exact_max; ++n)
        report.exact_ok[n] = kernel_dim(delta_at(n)) == rank(delta_at(n + 1));
    return report;
}

} // namespace qexthh
