#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "term.hpp"

namespace mba {

// All distinct colored-binary-tree monomials whose leaf multiset equals
// `labels` (not required to be sorted; repeats allowed).  Result is sorted by
// the Term total order and cached per multiset.
std::shared_ptr<const std::vector<Term>> all_monomials(std::vector<int> labels);

uint64_t catalan(int n);
uint64_t factorial(int n);

// Dense ids for the ambient multilinear span at arity n:
//   id = (shape * 2^(n-1) + coloring) * n! + perm
// with tree shapes ordered by (left subtree size, left shape, right shape)
// recursively, colorings read as bitstrings over internal nodes in pre-order
// (lie = 1), and leaf words ranked lexicographically.
//
// Graded mode falls back to a sorted vector of the distinct monomials.
class MonomialIndex {
public:
    static MonomialIndex multilinear(int n);
    static MonomialIndex graded(std::vector<int> labels);

    int64_t cols() const { return cols_; }
    int64_t id(const Term& t) const;
    Term term(int64_t id) const;
    int arity() const { return n_; }
    bool is_multilinear() const { return multilinear_; }
    const std::vector<int>& labels() const { return labels_; }

private:
    MonomialIndex() = default;
    bool multilinear_ = true;
    int n_ = 0;
    int64_t cols_ = 0;
    std::vector<int> labels_;
    std::shared_ptr<const std::vector<Term>> graded_monos_;
};

}  // namespace mba
