#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fman.hpp"
#include "identities.hpp"
#include "monomials.hpp"
#include "oracle.hpp"

using namespace mba;

namespace {

Term random_term(std::mt19937& rng, int deg, int maxgen) {
    if (deg == 1) return Term::leaf(1 + static_cast<int>(rng() % maxgen));
    int l = 1 + static_cast<int>(rng() % (deg - 1));
    Op op = rng() % 2 ? Op::Com : Op::Lie;
    return Term::node(op, random_term(rng, l, maxgen), random_term(rng, deg - l, maxgen));
}

FSeq seq(std::vector<uint8_t> colors, std::vector<int> gens, int last) {
    FSeq s;
    s.colors = std::move(colors);
    s.gens = std::move(gens);
    s.last = last;
    return s;
}

std::string pat_str(const std::vector<uint8_t>& p) {
    std::string out;
    for (auto c : p) out += c ? 'w' : 'b';
    return out;
}

}  // namespace

TEST_CASE("sequence <-> term encoding") {
    CHECK(format_term(seq_to_term(seq({0, 1}, {1, 2}, 3))) == "(lie x1 (com x2 x3))");
    CHECK(format_term(seq_to_term(seq({1, 0}, {2, 1}, 3))) == "(com x2 (lie x1 x3))");
    CHECK(format_term(seq_to_term(seq({}, {}, 5))) == "x5");

    Term t = seq_to_term(seq({1, 0, 1}, {3, 2, 4}, 1));
    CHECK(term_to_seq(t) == seq({1, 0, 1}, {3, 2, 4}, 1));
    CHECK_THROWS_AS(term_to_seq(parse_term("(lie (lie x1 x2) x3)")),
                    std::invalid_argument);
}

TEST_CASE("condition flags") {
    // interior double white
    ConditionReport r1 = check_conditions(seq({1, 1, 0}, {1, 2, 3}, 4));
    CHECK(!r1.c1);

    // descending black chain is a basis monomial
    ConditionReport r2 = check_conditions(seq({0, 0, 0}, {3, 2, 1}, 4));
    CHECK(r2.all());
    CHECK(fman_is_basis(seq({0, 0, 0}, {3, 2, 1}, 4)));

    // trailing (white, black, white) removed by the elimination rule
    ConditionReport r3 = check_conditions(seq({1, 0, 1}, {3, 2, 4}, 1));
    CHECK(r3.c1);
    CHECK(r3.c6);
    CHECK(!r3.c7);

    // the mirrored pair with small generators in front survives
    CHECK(fman_is_basis(seq({1, 0, 1}, {1, 2, 3}, 4)));
}

TEST_CASE("multilinear dimensions 1..6") {
    CHECK(fman_dims(6, 1) == std::vector<long>{1, 2, 9, 42, 224, 1444});
    for (int n = 1; n <= 5; ++n)
        CHECK((long)enumerate_fman_basis_multilinear(n).size() == fman_dims(n, 1).back());
}

TEST_CASE("per-tree census, degrees 4-6") {
    for (int n : {4, 5, 6}) {
        auto rows = per_tree_census(n, 1);
        CHECK((int)rows.size() == 1 << (n - 1));
        long total = 0;
        std::map<std::string, long> removed;
        for (const auto& row : rows) {
            total += row.count - row.c7_removed;
            if (row.c7_removed) removed[pat_str(row.pattern)] = row.c7_removed;
        }
        CHECK(total == (long)enumerate_fman_basis_multilinear(n).size());
        if (n == 4) CHECK(removed == std::map<std::string, long>{{"wbw", 3}});
        if (n == 5) CHECK(removed == std::map<std::string, long>{{"bwbw", 15}});
        if (n == 6)
            CHECK(removed ==
                  std::map<std::string, long>{{"bbwbw", 45}, {"wbwbw", 45}});
    }
}

TEST_CASE("graded enumeration matches the oracle") {
    std::vector<std::vector<int>> multisets = {{1, 1},       {1, 1, 1},    {1, 1, 2},
                                               {1, 1, 1, 1}, {1, 1, 2, 2}, {1, 2, 2, 3},
                                               {1, 1, 2, 2, 3}};
    for (const auto& ms : multisets) {
        std::map<int, int> md;
        for (int g : ms) ++md[g];
        CHECK((long)enumerate_fman_basis(ms).size() ==
              graded_dimension(Variety::MFM, md, 1).dim);
    }
}

TEST_CASE("normalize: metabelian kills and fixed points") {
    CHECK(normalize_fman_terms(parse_term("(com (com x1 x2) (com x3 x4))")).is_zero());
    CHECK(normalize_fman_terms(parse_term("(com (lie x1 x2) (lie x3 x4))")).is_zero());
    for (const FSeq& s : enumerate_fman_basis_multilinear(4)) {
        Term t = seq_to_term(s);
        CHECK(normalize_fman_terms(t) == LinComb(t));
    }
}

TEST_CASE("normalize annihilates the defining identities") {
    std::mt19937 rng(17);
    for (int i = 0; i < 150; ++i) {
        for (const auto& name : preset(Variety::MFM).identity_names) {
            const Identity& id = *find_identity(name);
            std::map<int, Term> sub;
            for (int p : identity_placeholders(id))
                sub[p] = random_term(rng, 1 + (int)(rng() % 2), 3);
            CHECK(normalize_fman_terms(substitute(id, sub)).is_zero());
        }
    }
}

TEST_CASE("normalize is idempotent and basis-supported") {
    std::mt19937 rng(31);
    for (int i = 0; i < 200; ++i) {
        Term t = random_term(rng, 1 + (int)(rng() % 6), 4);
        FmanComb nf = normalize_fman(t);
        for (const auto& [s, c] : nf) {
            CHECK(fman_is_basis(s));
            CHECK(c != 0);
        }
        LinComb lc = fman_comb_to_lincomb(nf);
        CHECK(normalize_fman_terms(lc) == lc);
    }
}

TEST_CASE("normalize agrees with the oracle projection, arity 4 exhaustive") {
    std::vector<Term> basis;
    for (const auto& s : enumerate_fman_basis_multilinear(4))
        basis.push_back(seq_to_term(s));
    Projector pr(Variety::MFM, MonomialIndex::multilinear(4), basis, 1);
    REQUIRE(pr.result().certified);
    MonomialIndex idx = MonomialIndex::multilinear(4);
    for (int64_t id = 0; id < idx.cols(); ++id) {
        Term t = idx.term(id);
        CHECK(pr.project(t) == normalize_fman_terms(t));
    }
}

TEST_CASE("census is deterministic across thread counts") {
    auto a = per_tree_census(5, 1);
    auto b = per_tree_census(5, 3);
    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].pattern == b[i].pattern);
        CHECK(a[i].count == b[i].count);
        CHECK(a[i].c7_removed == b[i].c7_removed);
    }
}
