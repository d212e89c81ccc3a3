#pragma once

#include <cstdint>
#include <map>
#include <unordered_map>
#include <vector>

#include "scalar.hpp"

namespace mba {

// Sparse row: (column id, coefficient), sorted by column id, no zeros.
using SparseRow = std::vector<std::pair<int64_t, Scalar>>;

// Incremental exact Gaussian elimination over Q.
//
// Columns are eliminated in the order given by a position permutation
// (smaller position = eliminated first); with the identity permutation this
// is plain column order.  Pivot rows are leading-normalized but not
// back-substituted; reduce() still yields the unique representative of a
// vector modulo the row space supported on non-pivot positions, because a
// row's non-leading entries always sit at later positions.
class Echelon {
public:
    // identity column order over ncols columns
    explicit Echelon(int64_t ncols);
    // explicit order: colpos[col] = elimination position (a permutation)
    Echelon(int64_t ncols, std::vector<int64_t> colpos);

    // returns true if the row increased the rank
    bool add_row(const SparseRow& row);

    // fully reduce a vector against the current pivots (column-id space)
    SparseRow reduce(const SparseRow& row) const;

    bool has_pivot_at_position(int64_t pos) const { return pivots_.count(pos) > 0; }
    int64_t rank() const { return static_cast<int64_t>(pivots_.size()); }
    int64_t cols() const { return ncols_; }
    int64_t position_of(int64_t col) const { return colpos_.empty() ? col : colpos_[col]; }
    int64_t col_of(int64_t pos) const { return colpos_.empty() ? pos : posinv_[pos]; }

    // pivot row at a position, in (position, coeff) space; empty if none
    const std::map<int64_t, Scalar>* pivot_row(int64_t pos) const;

private:
    void to_positions(const SparseRow& row, std::map<int64_t, Scalar>& out) const;

    int64_t ncols_;
    std::vector<int64_t> colpos_, posinv_;
    std::unordered_map<int64_t, std::map<int64_t, Scalar>> pivots_;
};

}  // namespace mba
