#include "fman.hpp"

#include <algorithm>
#include <future>
#include <mutex>
#include <set>
#include <stdexcept>

#include "lie_normal.hpp"

namespace mba {

namespace {

constexpr uint8_t BLACK = 0, WHITE = 1;

void acc(FmanComb& out, const FSeq& s, const Scalar& c) {
    if (c == 0) return;
    auto [it, ins] = out.try_emplace(s, c);
    if (!ins) {
        it->second += c;
        if (it->second == 0) out.erase(it);
    }
}

// maximal black runs as [start, end] inclusive
std::vector<std::pair<int, int>> black_runs(const std::vector<uint8_t>& colors) {
    std::vector<std::pair<int, int>> runs;
    int m = static_cast<int>(colors.size());
    int i = 0;
    while (i < m) {
        if (colors[i] == BLACK) {
            int j = i;
            while (j + 1 < m && colors[j + 1] == BLACK) ++j;
            runs.push_back({i, j});
            i = j + 1;
        } else {
            ++i;
        }
    }
    return runs;
}

// Trailing-pattern (o,*,o,x) elimination rule, graded form.  With
// (gamma, delta) the sorted pair of the last star's generator and the leaf,
// the monomial is outside the basis iff
//   alpha >= beta  and  (beta > gamma  or  (beta == gamma and alpha > delta)).
bool c7_violates(int alpha, int beta, int gamma, int delta) {
    if (gamma > delta) std::swap(gamma, delta);
    return alpha >= beta && (beta > gamma || (beta == gamma && alpha > delta));
}

}  // namespace

std::string FSeq::str() const { return format_term(seq_to_term(*this)); }

Term seq_to_term(const FSeq& s) {
    Term t = Term::leaf(s.last);
    for (int k = static_cast<int>(s.gens.size()) - 1; k >= 0; --k)
        t = Term::node(s.colors[k] == WHITE ? Op::Com : Op::Lie, Term::leaf(s.gens[k]), t);
    return t;
}

FSeq term_to_seq(const Term& t) {
    FSeq s;
    Term cur = t;
    while (!cur.is_leaf()) {
        if (!cur.left().is_leaf())
            throw std::invalid_argument("term is not a right comb");
        s.colors.push_back(cur.op() == Op::Com ? WHITE : BLACK);
        s.gens.push_back(cur.left().gen());
        cur = cur.right();
    }
    s.last = cur.gen();
    return s;
}

ConditionReport check_conditions(const FSeq& s) {
    ConditionReport r;
    int m = static_cast<int>(s.gens.size());
    if (m == 0) return r;
    const auto& cl = s.colors;
    const auto& g = s.gens;
    // (1) consecutive whites, unless the second one is the final star
    for (int k = 0; k + 1 < m; ++k)
        if (cl[k] == WHITE && cl[k + 1] == WHITE && k + 1 < m - 1) r.c1 = false;
    // (2) interior black runs descending (ties allowed)
    // (4) trailing black run descending
    // (5) trailing black run ends strictly below the leaf
    for (auto [a, b] : black_runs(cl)) {
        bool desc = true;
        for (int i = a; i < b; ++i)
            if (g[i] < g[i + 1]) desc = false;
        if (b < m - 1) {
            if (!desc) r.c2 = false;
        } else {
            if (!desc) r.c4 = false;
            if (!(g[b] < s.last)) r.c5 = false;
        }
    }
    // (3) white final star: leaf bounds the star; trailing double white is a
    // fully sorted triple
    if (cl[m - 1] == WHITE) {
        if (!(g[m - 1] <= s.last)) r.c3 = false;
        if (m >= 2 && cl[m - 2] == WHITE && !(g[m - 2] <= g[m - 1])) r.c3 = false;
    }
    // (6) interior (white, black, white) needs the white star's generator
    // strictly above the black one: the sign swap obtained from (21)/(22)
    // kills the equal-generator case outright
    for (int k = 1; k + 1 < m - 1; ++k)
        if (cl[k] == BLACK && cl[k - 1] == WHITE && cl[k + 1] == WHITE && g[k - 1] <= g[k])
            r.c6 = false;
    // (7) trailing (white, black, white, leaf)
    if (m >= 3 && cl[m - 3] == WHITE && cl[m - 2] == BLACK && cl[m - 1] == WHITE)
        if (c7_violates(g[m - 3], g[m - 2], g[m - 1], s.last)) r.c7 = false;
    return r;
}

bool fman_is_basis(const FSeq& s) { return check_conditions(s).all(); }

std::vector<FSeq> enumerate_fman_basis(const std::vector<int>& labels) {
    int n = static_cast<int>(labels.size());
    std::vector<FSeq> out;
    if (n == 0) return out;
    if (n == 1) {
        out.push_back(FSeq{{}, {}, labels[0]});
        return out;
    }
    int m = n - 1;
    std::set<FSeq> seen;
    std::vector<int> perm = labels;
    std::sort(perm.begin(), perm.end());
    for (uint32_t bits = 0; bits < (1u << m); ++bits) {
        std::vector<uint8_t> colors(m);
        for (int k = 0; k < m; ++k) colors[k] = (bits >> k) & 1 ? WHITE : BLACK;
        std::vector<int> p = perm;
        do {
            FSeq s;
            s.colors = colors;
            s.gens.assign(p.begin(), p.begin() + m);
            s.last = p[m];
            if (fman_is_basis(s)) seen.insert(s);
        } while (std::next_permutation(p.begin(), p.end()));
    }
    out.assign(seen.begin(), seen.end());
    return out;
}

std::vector<FSeq> enumerate_fman_basis_multilinear(int n) {
    std::vector<int> labels(n);
    for (int i = 0; i < n; ++i) labels[i] = i + 1;
    return enumerate_fman_basis(labels);
}

std::vector<long> fman_dims(int max_n, int threads) {
    std::vector<long> out(max_n);
    auto one = [](int n) { return static_cast<long>(enumerate_fman_basis_multilinear(n).size()); };
    if (threads < 1) threads = 1;
    std::vector<std::future<long>> futs;
    for (int n = 1; n <= max_n; ++n)
        futs.push_back(std::async(threads > 1 ? std::launch::async : std::launch::deferred,
                                  one, n));
    for (int n = 1; n <= max_n; ++n) out[n - 1] = futs[n - 1].get();
    return out;
}

std::vector<CensusRow> per_tree_census(int n, int threads) {
    int m = n - 1;
    auto row_for = [n, m](uint32_t bits) {
        CensusRow row;
        row.pattern.resize(m);
        for (int k = 0; k < m; ++k) row.pattern[k] = (bits >> k) & 1 ? WHITE : BLACK;
        std::vector<int> p(n);
        for (int i = 0; i < n; ++i) p[i] = i + 1;
        do {
            FSeq s;
            s.colors = row.pattern;
            s.gens.assign(p.begin(), p.begin() + m);
            s.last = p[m];
            ConditionReport r = check_conditions(s);
            if (r.c1 && r.c2 && r.c3 && r.c4 && r.c5 && r.c6) {
                ++row.count;
                if (!r.c7) ++row.c7_removed;
            }
        } while (std::next_permutation(p.begin(), p.end()));
        return row;
    };
    if (threads < 1) threads = 1;
    std::vector<std::future<CensusRow>> futs;
    for (uint32_t bits = 0; bits < (1u << m); ++bits)
        futs.push_back(std::async(threads > 1 ? std::launch::async : std::launch::deferred,
                                  row_for, bits));
    std::vector<CensusRow> out;
    for (auto& f : futs) out.push_back(f.get());
    return out;
}

namespace {

// Rewrite an arbitrary right-comb sequence into the basis.  Rule priority
// follows the spanning argument: metabelian/associativity kills, then the
// com sorts, then the interior black-run sorts, then the (white,black,white)
// swap, then the trailing-pattern elimination, then the metabelian-Lie
// normal form of the trailing black run.
void fix_seq(FSeq s, Scalar coeff, FmanComb& out, long& steps, long cap) {
    std::vector<std::pair<FSeq, Scalar>> work{{std::move(s), std::move(coeff)}};
    while (!work.empty()) {
        auto [q, c] = std::move(work.back());
        work.pop_back();
        if (c == 0) continue;
        int m = static_cast<int>(q.gens.size());
        if (m == 0) {
            acc(out, q, c);
            continue;
        }
        if (++steps > cap) throw std::runtime_error("fman rewriting step cap exceeded");
        auto& cl = q.colors;
        auto& g = q.gens;

        // (1) interior double white: x(y(compound)) = (xy)(compound) = 0
        bool killed = false;
        for (int k = 0; k + 1 < m - 1 && !killed; ++k)
            if (cl[k] == WHITE && cl[k + 1] == WHITE) killed = true;
        if (killed) continue;

        // (3) white final star: commute the leaf into place
        if (cl[m - 1] == WHITE && g[m - 1] > q.last) {
            std::swap(g[m - 1], q.last);
            work.push_back({std::move(q), std::move(c)});
            continue;
        }
        // (3) trailing double white: fully symmetric triple
        if (m >= 2 && cl[m - 1] == WHITE && cl[m - 2] == WHITE && g[m - 2] > g[m - 1]) {
            int t[3] = {g[m - 2], g[m - 1], q.last};
            std::sort(t, t + 3);
            g[m - 2] = t[0];
            g[m - 1] = t[1];
            q.last = t[2];
            work.push_back({std::move(q), std::move(c)});
            continue;
        }

        // (2) interior black runs sort freely (the correction bracket hits a
        // compound argument and dies)
        {
            bool changed = false;
            for (auto [a, b] : black_runs(cl)) {
                if (b >= m - 1) continue;
                if (!std::is_sorted(g.begin() + a, g.begin() + b + 1, std::greater<int>())) {
                    std::sort(g.begin() + a, g.begin() + b + 1, std::greater<int>());
                    changed = true;
                }
            }
            if (changed) {
                work.push_back({std::move(q), std::move(c)});
                continue;
            }
        }

        // (6) interior (white, black, white): swap with a sign; equal
        // generators make the monomial its own negative
        {
            bool swapped = false, dead = false;
            for (int k = 1; k + 1 < m - 1 && !swapped && !dead; ++k)
                if (cl[k] == BLACK && cl[k - 1] == WHITE && cl[k + 1] == WHITE &&
                    g[k - 1] <= g[k]) {
                    if (g[k - 1] == g[k])
                        dead = true;
                    else {
                        std::swap(g[k - 1], g[k]);
                        swapped = true;
                    }
                }
            if (dead) continue;
            if (swapped) {
                work.push_back({std::move(q), -c});
                continue;
            }
        }

        // (7) trailing (white, black, white, leaf)
        if (m >= 3 && cl[m - 3] == WHITE && cl[m - 2] == BLACK && cl[m - 1] == WHITE &&
            c7_violates(g[m - 3], g[m - 2], g[m - 1], q.last)) {
            int alpha = g[m - 3], beta = g[m - 2], gamma = g[m - 1], delta = q.last;
            auto suffix = [&](int a, int b, int gg, int dd, const Scalar& cc) {
                FSeq t = q;
                t.gens[m - 3] = a;
                t.gens[m - 2] = b;
                t.gens[m - 1] = gg;
                t.last = dd;
                work.push_back({std::move(t), cc});
            };
            if (alpha == beta) {
                suffix(gamma, delta, alpha, alpha, c * frac(1, 2));
                suffix(delta, gamma, alpha, alpha, c * frac(1, 2));
            } else {
                int s1 = std::min(alpha, beta), s2 = std::max(alpha, beta);
                suffix(beta, alpha, gamma, delta, -c);
                suffix(gamma, delta, s1, s2, c);
                suffix(delta, gamma, s1, s2, c);
            }
            continue;
        }

        // (4)/(5) trailing black run: free metabelian Lie normal form
        {
            auto runs = black_runs(cl);
            if (!runs.empty() && runs.back().second == m - 1) {
                auto [a, b] = runs.back();
                bool ok = true;
                for (int i = a; i < b; ++i)
                    if (g[i] < g[i + 1]) ok = false;
                if (!ok || !(g[b] < q.last)) {
                    std::vector<int> run(g.begin() + a, g.end());
                    auto words = right_lie_normal(std::move(run), q.last);
                    for (const auto& [w, wc] : words) {
                        FSeq t;
                        t.colors = cl;
                        t.gens.assign(g.begin(), g.begin() + a);
                        t.gens.insert(t.gens.end(), w.first.begin(), w.first.end());
                        t.last = w.second;
                        work.push_back({std::move(t), c * wc});
                    }
                    continue;
                }
            }
        }

        acc(out, q, c);
    }
}

FmanComb mul_seq(const FSeq& u, const FSeq& v, Op op, long& steps, long cap) {
    FmanComb out;
    int du = u.degree(), dv = v.degree();
    if (du > 1 && dv > 1) return out;  // metabelian: compound * compound = 0
    if (du == 1) {
        FSeq s = v;
        s.colors.insert(s.colors.begin(), op == Op::Com ? WHITE : BLACK);
        s.gens.insert(s.gens.begin(), u.last);
        fix_seq(std::move(s), Scalar(1), out, steps, cap);
        return out;
    }
    // dv == 1: com commutes; lie antisymmetrizes
    FSeq s = u;
    s.colors.insert(s.colors.begin(), op == Op::Com ? WHITE : BLACK);
    s.gens.insert(s.gens.begin(), v.last);
    fix_seq(std::move(s), op == Op::Com ? Scalar(1) : Scalar(-1), out, steps, cap);
    return out;
}

}  // namespace

FmanComb normalize_fman(const Term& t) {
    static std::mutex mu;
    static std::map<Term, FmanComb> memo;
    {
        std::lock_guard<std::mutex> lk(mu);
        auto it = memo.find(t);
        if (it != memo.end()) return it->second;
    }
    FmanComb out;
    int n = t.degree();
    long cap = 10L * n * n * n + 100;
    long steps = 0;
    if (t.is_leaf()) {
        out.emplace(FSeq{{}, {}, t.gen()}, Scalar(1));
    } else {
        FmanComb nl = normalize_fman(t.left());
        FmanComb nr = normalize_fman(t.right());
        for (const auto& [u, cu] : nl)
            for (const auto& [v, cv] : nr) {
                FmanComb p = mul_seq(u, v, t.op(), steps, cap);
                for (const auto& [s, c] : p) acc(out, s, c * cu * cv);
            }
    }
    std::lock_guard<std::mutex> lk(mu);
    memo.emplace(t, out);
    return out;
}

FmanComb normalize_fman(const LinComb& lc) {
    FmanComb out;
    for (const auto& [t, c] : lc.entries()) {
        FmanComb p = normalize_fman(t);
        for (const auto& [s, v] : p) acc(out, s, v * c);
    }
    return out;
}

LinComb fman_comb_to_lincomb(const FmanComb& c) {
    LinComb out;
    for (const auto& [s, v] : c) out.add(seq_to_term(s), v);
    return out;
}

LinComb normalize_fman_terms(const Term& t) { return fman_comb_to_lincomb(normalize_fman(t)); }
LinComb normalize_fman_terms(const LinComb& lc) {
    return fman_comb_to_lincomb(normalize_fman(lc));
}

}  // namespace mba
