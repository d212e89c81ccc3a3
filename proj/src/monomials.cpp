#include "monomials.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>

namespace mba {

uint64_t catalan(int n) {
    static const uint64_t table[] = {1, 1, 2, 5, 14, 42, 132, 429, 1430};
    if (n < 0 || n > 8) throw std::out_of_range("catalan");
    return table[n];
}

uint64_t factorial(int n) {
    uint64_t r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

std::shared_ptr<const std::vector<Term>> all_monomials(std::vector<int> labels) {
    std::sort(labels.begin(), labels.end());
    static std::mutex mu;
    static std::map<std::vector<int>, std::shared_ptr<const std::vector<Term>>> cache;
    {
        std::lock_guard<std::mutex> lk(mu);
        auto it = cache.find(labels);
        if (it != cache.end()) return it->second;
    }
    auto out = std::make_shared<std::vector<Term>>();
    size_t n = labels.size();
    if (n == 1) {
        out->push_back(Term::leaf(labels[0]));
    } else {
        std::set<std::pair<std::vector<int>, std::vector<int>>> seen;
        for (unsigned mask = 1; mask + 1 < (1u << n); ++mask) {
            std::vector<int> L, R;
            for (size_t i = 0; i < n; ++i)
                ((mask >> i) & 1 ? L : R).push_back(labels[i]);
            if (!seen.insert({L, R}).second) continue;
            auto ls = all_monomials(L);
            auto rs = all_monomials(R);
            for (const Term& lt : *ls)
                for (const Term& rt : *rs) {
                    out->push_back(Term::node(Op::Com, lt, rt));
                    out->push_back(Term::node(Op::Lie, lt, rt));
                }
        }
        std::sort(out->begin(), out->end());
    }
    std::lock_guard<std::mutex> lk(mu);
    auto [it, ins] = cache.emplace(std::move(labels), out);
    return it->second;
}

namespace {

uint64_t shape_rank(const Term& t) {
    if (t.is_leaf()) return 0;
    int n = t.degree();
    int l = t.left().degree();
    uint64_t r = 0;
    for (int k = 1; k < l; ++k) r += catalan(k - 1) * catalan(n - k - 1);
    r += shape_rank(t.left()) * catalan(n - l - 1) + shape_rank(t.right());
    return r;
}

void coloring_bits(const Term& t, uint64_t& bits, int& pos) {
    if (t.is_leaf()) return;
    if (t.op() == Op::Lie) bits |= (uint64_t(1) << pos);
    ++pos;
    coloring_bits(t.left(), bits, pos);
    coloring_bits(t.right(), bits, pos);
}

void leaf_word(const Term& t, std::vector<int>& out) {
    if (t.is_leaf()) {
        out.push_back(t.gen());
        return;
    }
    leaf_word(t.left(), out);
    leaf_word(t.right(), out);
}

uint64_t perm_rank(const std::vector<int>& word) {
    int n = static_cast<int>(word.size());
    uint64_t rank = 0;
    for (int i = 0; i < n; ++i) {
        int smaller = 0;
        for (int j = i + 1; j < n; ++j)
            if (word[j] < word[i]) ++smaller;
        rank += smaller * factorial(n - 1 - i);
    }
    return rank;
}

std::vector<int> perm_unrank(int n, uint64_t rank) {
    std::vector<int> avail(n), out;
    for (int i = 0; i < n; ++i) avail[i] = i + 1;
    for (int i = n; i >= 1; --i) {
        uint64_t f = factorial(i - 1);
        size_t idx = rank / f;
        rank %= f;
        out.push_back(avail[idx]);
        avail.erase(avail.begin() + idx);
    }
    return out;
}

Term build_tree(int n, uint64_t shape, uint64_t bits, int& cpos,
                const std::vector<int>& word, size_t& lpos) {
    if (n == 1) return Term::leaf(word[lpos++]);
    Op op = ((bits >> cpos) & 1) ? Op::Lie : Op::Com;
    ++cpos;
    // recover left size and sub-ranks
    int l = 1;
    for (;; ++l) {
        uint64_t block = catalan(l - 1) * catalan(n - l - 1);
        if (shape < block) break;
        shape -= block;
    }
    uint64_t rshapes = catalan(n - l - 1);
    uint64_t ls = shape / rshapes, rs = shape % rshapes;
    Term lt = build_tree(l, ls, bits, cpos, word, lpos);
    Term rt = build_tree(n - l, rs, bits, cpos, word, lpos);
    return Term::node(op, lt, rt);
}

}  // namespace

MonomialIndex MonomialIndex::multilinear(int n) {
    MonomialIndex m;
    m.multilinear_ = true;
    m.n_ = n;
    m.cols_ = static_cast<int64_t>(catalan(n - 1) * (uint64_t(1) << (n - 1)) * factorial(n));
    for (int i = 1; i <= n; ++i) m.labels_.push_back(i);
    return m;
}

MonomialIndex MonomialIndex::graded(std::vector<int> labels) {
    MonomialIndex m;
    m.multilinear_ = false;
    std::sort(labels.begin(), labels.end());
    m.n_ = static_cast<int>(labels.size());
    m.labels_ = labels;
    m.graded_monos_ = all_monomials(labels);
    m.cols_ = static_cast<int64_t>(m.graded_monos_->size());
    return m;
}

int64_t MonomialIndex::id(const Term& t) const {
    if (!multilinear_) {
        auto it = std::lower_bound(graded_monos_->begin(), graded_monos_->end(), t);
        if (it == graded_monos_->end() || !(*it == t))
            throw std::invalid_argument("monomial not in graded index");
        return it - graded_monos_->begin();
    }
    if (t.degree() != n_) throw std::invalid_argument("arity mismatch");
    uint64_t bits = 0;
    int cpos = 0;
    coloring_bits(t, bits, cpos);
    std::vector<int> word;
    leaf_word(t, word);
    uint64_t sr = shape_rank(t);
    return static_cast<int64_t>((sr * (uint64_t(1) << (n_ - 1)) + bits) * factorial(n_) +
                                perm_rank(word));
}

Term MonomialIndex::term(int64_t id) const {
    if (!multilinear_) return (*graded_monos_)[id];
    uint64_t f = factorial(n_);
    uint64_t perm = id % f;
    uint64_t rest = id / f;
    uint64_t ncolor = uint64_t(1) << (n_ - 1);
    uint64_t bits = rest % ncolor;
    uint64_t shape = rest / ncolor;
    std::vector<int> word = perm_unrank(n_, perm);
    int cpos = 0;
    size_t lpos = 0;
    return build_tree(n_, shape, bits, cpos, word, lpos);
}

}  // namespace mba
