#pragma once

#include <utility>
#include <vector>

#include "qexthh/field.hpp"

namespace qexthh {

/// Sparse exact matrix over one coefficient field. Each row is a vector of
/// (column, scalar) pairs sorted by column; zero entries are never stored.
class ExactMatrix {
public:
    using Entry = std::pair<int, Scalar>;
    using Row = std::vector<Entry>;

    ExactMatrix(Field field, int rows, int cols)
        : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const Field& field() const { return field_; }

    /// Adds `value` into entry (r, c), erasing the entry if the sum is zero.
    void add(int r, int c, const Scalar& value);
    void set(int r, int c, const Scalar& value);
    Scalar at(int r, int c) const;

    const Row& row(int r) const { return data_[r]; }
    bool is_zero() const;
    std::size_t nonzero_count() const;

    ExactMatrix transpose() const;

    static ExactMatrix identity(const Field& f, int n);

private:
    void check_range(int r, int c) const;

    Field field_;
    int rows_, cols_;
    std::vector<Row> data_;
};

/// Exact rank via sparse Gaussian elimination. Deterministic: the pivot
/// column is always the leftmost column with a remaining nonzero; among the
/// candidate rows the pivot is the one whose leading scalar has the smallest
/// representation (ties: fewest entries, then lowest row index), which keeps
/// function-field coefficients short.
int rank(const ExactMatrix& m);

/// Exact rank by one-step fraction-free (Bareiss) elimination after clearing
/// row denominators. Independent of rank(); the two must agree on every
/// matrix.
int rank_fraction_free(const ExactMatrix& m);

/// cols - rank.
int kernel_dim(const ExactMatrix& m);

/// Exact product; throws DimensionMismatchError if inner dimensions differ.
ExactMatrix multiply(const ExactMatrix& a, const ExactMatrix& b);

} // namespace qexthh
