#include "consequences.hpp"

#include <algorithm>
#include <future>
#include <set>
#include <unordered_set>

#include "monomials.hpp"

namespace mba {

namespace {

using Split = std::pair<std::vector<int>, std::vector<int>>;

// all distinct (sub-multiset, complement) pairs with nonempty first part
std::vector<Split> sub_multisets(const std::vector<int>& labels, bool allow_full) {
    std::set<Split> seen;
    size_t n = labels.size();
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        if (!allow_full && mask == (1u << n) - 1) continue;
        std::vector<int> S, R;
        for (size_t i = 0; i < n; ++i) ((mask >> i) & 1 ? S : R).push_back(labels[i]);
        seen.insert({S, R});
    }
    return {seen.begin(), seen.end()};
}

std::vector<std::vector<std::vector<int>>> ordered_partitions(const std::vector<int>& S,
                                                              int k) {
    std::set<std::vector<std::vector<int>>> seen;
    size_t n = S.size();
    std::vector<int> assign(n, 0);
    while (true) {
        bool ok = true;
        for (int b = 0; b < k; ++b)
            if (std::find(assign.begin(), assign.end(), b) == assign.end()) ok = false;
        if (ok) {
            std::vector<std::vector<int>> blocks(k);
            for (size_t i = 0; i < n; ++i) blocks[assign[i]].push_back(S[i]);
            seen.insert(blocks);
        }
        // odometer
        size_t i = 0;
        for (; i < n; ++i) {
            if (++assign[i] < k) break;
            assign[i] = 0;
        }
        if (i == n) break;
    }
    return {seen.begin(), seen.end()};
}

void wrap_all(const LinComb& row, const std::vector<int>& rest,
              std::vector<LinComb>& out) {
    if (rest.empty()) {
        out.push_back(row);
        return;
    }
    for (const auto& [T, R] : sub_multisets(rest, true)) {
        auto monos = all_monomials(T);
        for (const Term& m : *monos) {
            for (Op op : {Op::Com, Op::Lie}) {
                for (int side = 0; side < 2; ++side) {
                    LinComb wrapped;
                    for (const auto& [t, c] : row.entries()) {
                        Term w = side == 0 ? Term::node(op, m, t) : Term::node(op, t, m);
                        wrapped.add(w, c);
                    }
                    wrap_all(wrapped, R, out);
                }
            }
        }
    }
}

std::vector<LinComb> rows_for_item(const Identity& id, const std::vector<int>& S,
                                   const std::vector<int>& R) {
    std::vector<LinComb> out;
    auto phs = identity_placeholders(id);
    int k = static_cast<int>(phs.size());
    if (static_cast<int>(S.size()) < k) return out;
    for (const auto& blocks : ordered_partitions(S, k)) {
        std::vector<std::shared_ptr<const std::vector<Term>>> choices;
        choices.reserve(k);
        for (const auto& b : blocks) choices.push_back(all_monomials(b));
        std::vector<size_t> idx(k, 0);
        while (true) {
            std::map<int, Term> asg;
            for (int i = 0; i < k; ++i) asg.emplace(phs[i], (*choices[i])[idx[i]]);
            LinComb inst = substitute(id, asg);
            if (!inst.is_zero()) wrap_all(inst, R, out);
            int i = 0;
            for (; i < k; ++i) {
                if (++idx[i] < choices[i]->size()) break;
                idx[i] = 0;
            }
            if (i == k) break;
        }
    }
    return out;
}

std::string row_key(const LinComb& row) {
    // normalize by the coefficient of the least term so scalar multiples collide
    const Scalar& lead = row.entries().begin()->second;
    std::string key;
    for (const auto& [t, c] : row.entries()) {
        key += scalar_str(c / lead);
        key += '*';
        key += format_term(t);
        key += '+';
    }
    return key;
}

}  // namespace

void for_each_consequence(Variety v, const std::vector<int>& labels, int threads,
                          const std::function<void(const LinComb&)>& sink) {
    const VarietyPreset& ps = preset(v);
    struct Item {
        const Identity* id;
        std::vector<int> S, R;
    };
    std::vector<Item> items;
    auto splits = sub_multisets(labels, true);
    for (const auto& name : ps.identity_names) {
        const Identity* id = find_identity(name);
        for (const auto& [S, R] : splits)
            if (static_cast<int>(S.size()) >= id->arity) items.push_back({id, S, R});
    }

    if (threads < 1) threads = 1;
    std::unordered_set<std::string> seen;
    for (size_t base = 0; base < items.size(); base += threads) {
        size_t chunk = std::min<size_t>(threads, items.size() - base);
        std::vector<std::future<std::vector<LinComb>>> futs;
        for (size_t j = 0; j < chunk; ++j) {
            const Item& it = items[base + j];
            futs.push_back(std::async(chunk > 1 ? std::launch::async : std::launch::deferred,
                                      [&it] { return rows_for_item(*it.id, it.S, it.R); }));
        }
        for (auto& f : futs) {
            for (const LinComb& row : f.get()) {
                if (seen.insert(row_key(row)).second) sink(row);
            }
        }
    }
}

}  // namespace mba
