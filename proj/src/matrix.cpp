#include "qexthh/matrix.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace qexthh {

void ExactMatrix::check_range(int r, int c) const {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
        throw IndexError("matrix index (" + std::to_string(r) + ", " + std::to_string(c) +
                         ") out of range for " + std::to_string(rows_) + "x" +
                         std::to_string(cols_));
}

void ExactMatrix::add(int r, int c, const Scalar& value) {
    check_range(r, c);
    if (value.is_zero()) return;
    Row& row = data_[r];
    auto it = std::lower_bound(row.begin(), row.end(), c,
                               [](const Entry& e, int col) { return e.first < col; });
    if (it != row.end() && it->first == c) {
        it->second += value;
        if (it->second.is_zero()) row.erase(it);
    } else {
        row.insert(it, {c, value});
    }
}

void ExactMatrix::set(int r, int c, const Scalar& value) {
    check_range(r, c);
    Row& row = data_[r];
    auto it = std::lower_bound(row.begin(), row.end(), c,
                               [](const Entry& e, int col) { return e.first < col; });
    if (it != row.end() && it->first == c) {
        if (value.is_zero())
            row.erase(it);
        else
            it->second = value;
    } else if (!value.is_zero()) {
        row.insert(it, {c, value});
    }
}

Scalar ExactMatrix::at(int r, int c) const {
    check_range(r, c);
    const Row& row = data_[r];
    auto it = std::lower_bound(row.begin(), row.end(), c,
                               [](const Entry& e, int col) { return e.first < col; });
    if (it != row.end() && it->first == c) return it->second;
    return field_.zero();
}

bool ExactMatrix::is_zero() const {
    for (const Row& row : data_)
        if (!row.empty()) return false;
    return true;
}

std::size_t ExactMatrix::nonzero_count() const {
    std::size_t n = 0;
    for (const Row& row : data_) n += row.size();
    return n;
}

ExactMatrix ExactMatrix::transpose() const {
    ExactMatrix out(field_, cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (const Entry& e : data_[r]) out.data_[e.first].push_back({r, e.second});
    return out; // per-row column order is the source row order, already ascending
}

ExactMatrix ExactMatrix::identity(const Field& f, int n) {
    ExactMatrix out(f, n, n);
    for (int i = 0; i < n; ++i) out.data_[i].push_back({i, f.one()});
    return out;
}

namespace {

using Row = ExactMatrix::Row;

// row_a -= factor * row_b (sorted merge)
Row axpy(const Row& a, const Scalar& factor, const Row& b) {
    Row out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            out.push_back({b[j].first, -(factor * b[j].second)});
            ++j;
        } else {
            Scalar v = a[i].second - factor * b[j].second;
            if (!v.is_zero()) out.push_back({a[i].first, std::move(v)});
            ++i;
            ++j;
        }
    }
    return out;
}

std::vector<Row> live_rows(const ExactMatrix& m) {
    std::vector<Row> rows;
    for (int r = 0; r < m.rows(); ++r)
        if (!m.row(r).empty()) rows.push_back(m.row(r));
    return rows;
}

// index of the pivot row among rows whose leading column equals pivot_col
std::size_t choose_pivot(const std::vector<Row>& rows, int pivot_col) {
    std::size_t best = rows.size();
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].front().first != pivot_col) continue;
        if (best == rows.size()) {
            best = i;
            continue;
        }
        auto size_of = [](const Row& r) { return r.front().second.representation_size(); };
        std::size_t si = size_of(rows[i]), sb = size_of(rows[best]);
        if (si < sb || (si == sb && rows[i].size() < rows[best].size())) best = i;
    }
    return best;
}

} // namespace

int rank(const ExactMatrix& m) {
    std::vector<Row> rows = live_rows(m);
    int rk = 0;
    while (!rows.empty()) {
        int pivot_col = rows.front().front().first;
        for (const Row& r : rows) pivot_col = std::min(pivot_col, r.front().first);
        std::size_t p = choose_pivot(rows, pivot_col);
        Row pivot_row = std::move(rows[p]);
        rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(p));
        const Scalar& pivot = pivot_row.front().second;
        ++rk;
        std::vector<Row> next;
        next.reserve(rows.size());
        for (Row& r : rows) {
            if (r.front().first == pivot_col) {
                Row reduced = axpy(r, r.front().second / pivot, pivot_row);
                if (!reduced.empty()) next.push_back(std::move(reduced));
            } else {
                next.push_back(std::move(r));
            }
        }
        rows = std::move(next);
    }
    return rk;
}

int rank_fraction_free(const ExactMatrix& m) {
    const Field& f = m.field();
    std::vector<Row> rows = live_rows(m);
    // clear denominators row by row (rank-preserving row scaling)
    for (Row& r : rows) {
        Scalar common = f.one();
        for (const auto& e : r)
            if (!e.second.has_trivial_denominator()) common = common * e.second.denominator();
        if (common.is_one()) continue;
        for (auto& e : r) e.second = e.second * common;
    }
    Scalar prev = f.one();
    int rk = 0;
    while (!rows.empty()) {
        int pivot_col = rows.front().front().first;
        for (const Row& r : rows) pivot_col = std::min(pivot_col, r.front().first);
        std::size_t p = choose_pivot(rows, pivot_col);
        Row pivot_row = std::move(rows[p]);
        rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(p));
        Scalar pivot = pivot_row.front().second;
        ++rk;
        std::vector<Row> next;
        next.reserve(rows.size());
        for (Row& r : rows) {
            // one-step Bareiss: every remaining row is transformed, and the
            // division by the previous pivot is exact
            Scalar coeff = r.front().first == pivot_col ? r.front().second : f.zero();
            Row combined;
            combined.reserve(r.size() + pivot_row.size());
            std::size_t i = 0, j = 0;
            while (i < r.size() || j < pivot_row.size()) {
                if (j == pivot_row.size() ||
                    (i < r.size() && r[i].first < pivot_row[j].first)) {
                    combined.push_back({r[i].first, (pivot * r[i].second) / prev});
                    ++i;
                } else if (i == r.size() || pivot_row[j].first < r[i].first) {
                    Scalar v = -(coeff * pivot_row[j].second) / prev;
                    if (!v.is_zero()) combined.push_back({pivot_row[j].first, std::move(v)});
                    ++j;
                } else {
                    Scalar v = (pivot * r[i].second - coeff * pivot_row[j].second) / prev;
                    if (!v.is_zero()) combined.push_back({r[i].first, std::move(v)});
                    ++i;
                    ++j;
                }
            }
            if (!combined.empty()) next.push_back(std::move(combined));
        }
        rows = std::move(next);
        prev = std::move(pivot);
    }
    return rk;
}

int kernel_dim(const ExactMatrix& m) { return m.cols() - rank(m); }

ExactMatrix multiply(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.cols() != b.rows())
        throw DimensionMismatchError("matrix product " + std::to_string(a.rows()) + "x" +
                                     std::to_string(a.cols()) + " * " + std::to_string(b.rows()) +
                                     "x" + std::to_string(b.cols()));
    if (a.field() != b.field()) throw FieldError("matrix product over different fields");
    ExactMatrix out(a.field(), a.rows(), b.cols());
    for (int r = 0; r < a.rows(); ++r) {
        std::map<int, Scalar> acc;
        for (const auto& [k, av] : a.row(r)) {
            for (const auto& [c, bv] : b.row(k)) {
                Scalar term = av * bv;
                auto it = acc.find(c);
                if (it == acc.end())
                    acc.emplace(c, std::move(term));
                else
                    it->second += term;
            }
        }
        for (const auto& [c, v] : acc)
            if (!v.is_zero()) out.set(r, c, v);
    }
    return out;
}

} // namespace qexthh
