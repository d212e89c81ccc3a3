#include "lie_normal.hpp"

#include <algorithm>

namespace mba {

namespace {

template <typename K>
void acc(std::map<K, Scalar>& out, const K& k, const Scalar& c) {
    auto [it, ins] = out.try_emplace(k, c);
    if (!ins) {
        it->second += c;
        if (it->second == 0) out.erase(it);
    }
}

template <typename K>
void acc(std::map<K, Scalar>& out, const std::map<K, Scalar>& in, const Scalar& c) {
    for (const auto& [k, v] : in) acc(out, k, v * c);
}

}  // namespace

std::map<LeftLieWord, Scalar> left_lie_normal(int a, int b, std::vector<int> tail) {
    std::map<LeftLieWord, Scalar> out;
    if (a == b) return out;
    if (a < b) {
        acc(out, left_lie_normal(b, a, std::move(tail)), Scalar(-1));
        return out;
    }
    std::sort(tail.begin(), tail.end());
    if (tail.empty() || b <= tail.front()) {
        acc(out, LeftLieWord{{a, b}, std::move(tail)}, Scalar(1));
        return out;
    }
    // [[a,b],m,rest] = [[a,m],b,rest] - [[b,m],a,rest] (Jacobi at the head;
    // the tail is freely sortable by (11))
    int m = tail.front();
    std::vector<int> rest(tail.begin() + 1, tail.end());
    std::vector<int> t1 = rest, t2 = rest;
    t1.push_back(b);
    t2.push_back(a);
    acc(out, left_lie_normal(a, m, std::move(t1)), Scalar(1));
    acc(out, left_lie_normal(b, m, std::move(t2)), Scalar(-1));
    return out;
}

std::map<RightLieWord, Scalar> right_lie_normal(std::vector<int> gens, int leaf) {
    std::map<RightLieWord, Scalar> out;
    size_t m = gens.size();
    if (m == 1) {
        int g = gens[0];
        if (g == leaf) return out;
        if (g < leaf)
            acc(out, RightLieWord{{g}, leaf}, Scalar(1));
        else
            acc(out, RightLieWord{{leaf}, g}, Scalar(-1));
        return out;
    }
    // positions 0..m-2 are followed by a bracket, so they sort freely
    std::sort(gens.begin(), gens.end() - 1, std::greater<int>());
    int z = gens[m - 1];
    if (z == leaf) return out;
    if (z > leaf) {
        std::vector<int> g2 = gens;
        g2[m - 1] = leaf;
        acc(out, right_lie_normal(std::move(g2), z), Scalar(-1));
        return out;
    }
    int y = gens[m - 2];
    if (y >= z) {
        acc(out, RightLieWord{std::move(gens), leaf}, Scalar(1));
        return out;
    }
    // [..,y,[z,t]] = [..,z,[y,t]] - [..,t,[y,z]]
    std::vector<int> swapped = gens;
    std::swap(swapped[m - 2], swapped[m - 1]);
    acc(out, right_lie_normal(std::move(swapped), leaf), Scalar(1));
    std::vector<int> other(gens.begin(), gens.end() - 2);
    other.push_back(leaf);
    other.push_back(y);
    acc(out, right_lie_normal(std::move(other), z), Scalar(-1));
    return out;
}

}  // namespace mba
