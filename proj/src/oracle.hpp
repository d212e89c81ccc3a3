#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "elimination.hpp"
#include "identities.hpp"
#include "monomials.hpp"

namespace mba {

struct OracleResult {
    int64_t cols = 0;
    int64_t rank = 0;
    int64_t dim = 0;
    int64_t rows = 0;  // deduplicated relation rows consumed
};

// Multilinear dimension of the variety's operad component at arity n.
// Arities 2..5 by default; 6 only with allow_huge.
OracleResult oracle_dim(Variety v, int n, int threads, bool allow_huge = false);

// Graded analog on a multidegree {gen -> multiplicity}; capped at total
// degree 5 over at most 3 distinct generators.
OracleResult graded_dimension(Variety v, const std::map<int, int>& multidegree,
                              int threads);

struct CertifyResult {
    bool certified = false;
    int64_t dim = 0;
    int64_t candidate_count = 0;
    // nonzero iff a dependence was found: a rational combination of candidate
    // monomials lying in the relation span
    LinComb witness;
    std::string reason;
};

// Wraps an echelon whose column order puts the candidate monomials last, so
// reduction expresses any ambient monomial in candidate coordinates.
class Projector {
public:
    Projector(Variety v, MonomialIndex index, std::vector<Term> candidates, int threads);

    const CertifyResult& result() const { return result_; }
    // coordinates of an ambient monomial in the candidate basis
    LinComb project(const Term& t) const;
    LinComb project(const LinComb& t) const;
    const MonomialIndex& index() const { return index_; }

private:
    MonomialIndex index_;
    std::vector<Term> candidates_;
    std::unique_ptr<Echelon> ech_;
    CertifyResult result_;
};

CertifyResult certify_basis(Variety v, int n, const std::vector<Term>& candidates,
                            int threads);

// Membership of a concrete relation in the consequence span at its own
// multidegree (used for derived-identity verification).
bool in_consequence_span(Variety v, const LinComb& relation, int threads);

// Derived identity check: placeholders mapped to x1..xk, then span membership.
bool verify_derived_identity(Variety v, const Identity& derived, int threads);

}  // namespace mba
