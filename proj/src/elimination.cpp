#include "elimination.hpp"

#include <algorithm>
#include <stdexcept>

namespace mba {

Echelon::Echelon(int64_t ncols) : ncols_(ncols) {}

Echelon::Echelon(int64_t ncols, std::vector<int64_t> colpos)
    : ncols_(ncols), colpos_(std::move(colpos)) {
    posinv_.assign(ncols_, -1);
    for (int64_t c = 0; c < ncols_; ++c) {
        int64_t p = colpos_[c];
        if (p < 0 || p >= ncols_ || posinv_[p] != -1)
            throw std::invalid_argument("colpos is not a permutation");
        posinv_[p] = c;
    }
}

void Echelon::to_positions(const SparseRow& row, std::map<int64_t, Scalar>& out) const {
    for (const auto& [col, v] : row) out.emplace(position_of(col), v);
}

const std::map<int64_t, Scalar>* Echelon::pivot_row(int64_t pos) const {
    auto it = pivots_.find(pos);
    return it == pivots_.end() ? nullptr : &it->second;
}

bool Echelon::add_row(const SparseRow& row) {
    std::map<int64_t, Scalar> work;
    to_positions(row, work);
    while (!work.empty()) {
        auto lead = work.begin();
        int64_t p = lead->first;
        auto it = pivots_.find(p);
        if (it == pivots_.end()) {
            Scalar inv = lead->second;
            std::map<int64_t, Scalar> stored;
            for (auto& [pos, v] : work) stored.emplace(pos, v / inv);
            pivots_.emplace(p, std::move(stored));
            return true;
        }
        Scalar c = lead->second;
        work.erase(lead);
        const auto& prow = it->second;
        auto hint = work.begin();
        for (auto pit = std::next(prow.begin()); pit != prow.end(); ++pit) {
            auto [wit, inserted] = work.try_emplace(pit->first, Scalar(0));
            wit->second -= c * pit->second;
            if (wit->second == 0) work.erase(wit);
        }
        (void)hint;
    }
    return false;
}

SparseRow Echelon::reduce(const SparseRow& row) const {
    std::map<int64_t, Scalar> work;
    to_positions(row, work);
    // forward sweep: eliminating position p only introduces positions > p
    auto it = work.begin();
    while (it != work.end()) {
        auto pit = pivots_.find(it->first);
        if (pit == pivots_.end()) {
            ++it;
            continue;
        }
        Scalar c = it->second;
        int64_t p = it->first;
        work.erase(it);
        const auto& prow = pit->second;
        for (auto e = std::next(prow.begin()); e != prow.end(); ++e) {
            auto [wit, inserted] = work.try_emplace(e->first, Scalar(0));
            wit->second -= c * e->second;
            if (wit->second == 0) work.erase(wit);
        }
        it = work.upper_bound(p);
    }
    SparseRow out;
    out.reserve(work.size());
    for (auto& [pos, v] : work) out.emplace_back(col_of(pos), v);
    if (!colpos_.empty())
        std::sort(out.begin(), out.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

}  // namespace mba
