#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "lincomb.hpp"

namespace mba {

// Right-comb monomial of the metabelian F-manifold operad:
//   x_{g1} *1 (x_{g2} *2 ( ... (x_{gm} *m x_last) ... ))
// where *k is com when colors[k] is white (1) and lie when black (0).
struct FSeq {
    std::vector<uint8_t> colors;  // one entry per star; 0 = black, 1 = white
    std::vector<int> gens;        // generator at each star
    int last = 0;                 // generator at the final leaf

    int degree() const { return static_cast<int>(gens.size()) + 1; }
    bool operator==(const FSeq&) const = default;
    std::strong_ordering operator<=>(const FSeq& o) const {
        if (auto c = degree() <=> o.degree(); c != 0) return c;
        if (auto c = colors <=> o.colors; c != 0) return c;
        if (auto c = gens <=> o.gens; c != 0) return c;
        return last <=> o.last;
    }
    std::string str() const;
};

using FmanComb = std::map<FSeq, Scalar>;

Term seq_to_term(const FSeq& s);
FSeq term_to_seq(const Term& t);  // throws std::invalid_argument if not a right comb

struct ConditionReport {
    bool c1 = true, c2 = true, c3 = true, c4 = true, c5 = true, c6 = true, c7 = true;
    bool all() const { return c1 && c2 && c3 && c4 && c5 && c6 && c7; }
};

// Per-condition flags; sensible for any degree >= 2 (degree <= 1 passes all).
// c7 is evaluated on the sorted trailing pair, with the graded tie-breaking
// rule that specializes to the stated strict inequalities on distinct indices.
ConditionReport check_conditions(const FSeq& s);
bool fman_is_basis(const FSeq& s);

// All basis sequences with the given leaf multiset (sorted ascending), in FSeq
// order.
std::vector<FSeq> enumerate_fman_basis(const std::vector<int>& labels);
// Multilinear slice over x1..xn.
std::vector<FSeq> enumerate_fman_basis_multilinear(int n);

// Multilinear dimensions for n = 1..max_n.
std::vector<long> fman_dims(int max_n, int threads);

// Multilinear counts per coloring pattern (pattern bit k = star k's color,
// listed in increasing binary value with star 1 as the least significant
// bit): sequences passing conditions (1)-(6), and how many of those
// condition (7) then removes.
struct CensusRow {
    std::vector<uint8_t> pattern;
    long count = 0;
    long c7_removed = 0;
};
std::vector<CensusRow> per_tree_census(int n, int threads);

FmanComb normalize_fman(const Term& t);
FmanComb normalize_fman(const LinComb& lc);
LinComb normalize_fman_terms(const Term& t);
LinComb normalize_fman_terms(const LinComb& lc);
LinComb fman_comb_to_lincomb(const FmanComb& c);

}  // namespace mba
