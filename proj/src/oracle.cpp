#include "oracle.hpp"

#include <algorithm>
#include <stdexcept>

#include "consequences.hpp"

namespace mba {

namespace {

SparseRow to_row(const LinComb& lc, const MonomialIndex& idx) {
    SparseRow row;
    row.reserve(lc.size());
    for (const auto& [t, c] : lc.entries()) row.emplace_back(idx.id(t), c);
    std::sort(row.begin(), row.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return row;
}

std::vector<int> degree_labels(const std::map<int, int>& multidegree) {
    std::vector<int> labels;
    for (const auto& [g, m] : multidegree) {
        if (g < 1 || m < 1) throw std::invalid_argument("bad multidegree");
        for (int i = 0; i < m; ++i) labels.push_back(g);
    }
    return labels;
}

}  // namespace

OracleResult oracle_dim(Variety v, int n, int threads, bool allow_huge) {
    if (n < 2 || n > 6 || (n == 6 && !allow_huge))
        throw std::out_of_range("oracle arity out of range (2..5, 6 with --huge)");
    MonomialIndex idx = MonomialIndex::multilinear(n);
    Echelon ech(idx.cols());
    OracleResult res;
    res.cols = idx.cols();
    for_each_consequence(v, idx.labels(), threads, [&](const LinComb& lc) {
        ++res.rows;
        ech.add_row(to_row(lc, idx));
    });
    res.rank = ech.rank();
    res.dim = res.cols - res.rank;
    return res;
}

OracleResult graded_dimension(Variety v, const std::map<int, int>& multidegree,
                              int threads) {
    auto labels = degree_labels(multidegree);
    if (labels.size() > 5 || multidegree.size() > 3)
        throw std::out_of_range(
            "graded oracle capped at total degree 5 over at most 3 generators");
    MonomialIndex idx = MonomialIndex::graded(labels);
    Echelon ech(idx.cols());
    OracleResult res;
    res.cols = idx.cols();
    for_each_consequence(v, labels, threads, [&](const LinComb& lc) {
        ++res.rows;
        ech.add_row(to_row(lc, idx));
    });
    res.rank = ech.rank();
    res.dim = res.cols - res.rank;
    return res;
}

Projector::Projector(Variety v, MonomialIndex index, std::vector<Term> candidates,
                     int threads)
    : index_(std::move(index)), candidates_(std::move(candidates)) {
    int64_t ncols = index_.cols();
    int64_t ncand = static_cast<int64_t>(candidates_.size());
    result_.candidate_count = ncand;

    // candidate columns take the final positions, in candidate-list order
    std::vector<int64_t> colpos(ncols, -1);
    std::vector<char> is_cand(ncols, 0);
    for (int64_t i = 0; i < ncand; ++i) {
        int64_t col = index_.id(candidates_[i]);
        if (is_cand[col]) throw std::invalid_argument("duplicate candidate monomial");
        is_cand[col] = 1;
        colpos[col] = ncols - ncand + i;
    }
    int64_t next = 0;
    for (int64_t c = 0; c < ncols; ++c)
        if (!is_cand[c]) colpos[c] = next++;

    ech_ = std::make_unique<Echelon>(ncols, std::move(colpos));
    for_each_consequence(v, index_.labels(), threads,
                         [&](const LinComb& lc) { ech_->add_row(to_row(lc, index_)); });

    result_.dim = ncols - ech_->rank();
    int64_t cand_base = ncols - ncand;
    for (int64_t p = cand_base; p < ncols; ++p) {
        if (ech_->has_pivot_at_position(p)) {
            const auto* prow = ech_->pivot_row(p);
            for (const auto& [pos, c] : *prow)
                result_.witness.add(candidates_[pos - cand_base], c);
            result_.reason = "candidate monomials are linearly dependent modulo the relations";
            return;
        }
    }
    if (result_.dim != ncand) {
        result_.reason = "candidate count " + std::to_string(ncand) +
                         " does not equal quotient dimension " + std::to_string(result_.dim);
        return;
    }
    result_.certified = true;
}

LinComb Projector::project(const Term& t) const {
    SparseRow unit{{index_.id(t), Scalar(1)}};
    SparseRow red = ech_->reduce(unit);
    int64_t cand_base = index_.cols() - static_cast<int64_t>(candidates_.size());
    LinComb out;
    for (const auto& [col, c] : red) {
        int64_t pos = ech_->position_of(col);
        if (pos < cand_base)
            throw std::runtime_error("projection left the candidate span (basis not certified?)");
        out.add(candidates_[pos - cand_base], c);
    }
    return out;
}

LinComb Projector::project(const LinComb& lc) const {
    LinComb out;
    for (const auto& [t, c] : lc.entries()) out.add(project(t), c);
    return out;
}

CertifyResult certify_basis(Variety v, int n, const std::vector<Term>& candidates,
                            int threads) {
    MonomialIndex idx = n >= 2 ? MonomialIndex::multilinear(n)
                               : MonomialIndex::graded({1});
    if (n < 2) throw std::invalid_argument("certify needs arity >= 2");
    Projector pr(v, std::move(idx), candidates, threads);
    return pr.result();
}

bool in_consequence_span(Variety v, const LinComb& relation, int threads) {
    if (relation.is_zero()) return true;
    std::map<int, int> md = multidegree(relation.entries().begin()->first);
    auto labels = degree_labels(md);
    MonomialIndex idx = MonomialIndex::graded(labels);
    Echelon ech(idx.cols());
    for_each_consequence(v, labels, threads,
                         [&](const LinComb& lc) { ech.add_row(to_row(lc, idx)); });
    return ech.reduce(to_row(relation, idx)).empty();
}

bool verify_derived_identity(Variety v, const Identity& derived, int threads) {
    auto phs = identity_placeholders(derived);
    std::map<int, Term> asg;
    int next = 1;
    for (int p : phs) asg.emplace(p, Term::leaf(next++));
    return in_consequence_span(v, substitute(derived, asg), threads);
}

}  // namespace mba
