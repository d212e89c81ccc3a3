#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "consequences.hpp"
#include "fman.hpp"
#include "monomials.hpp"
#include "mtp.hpp"
#include "oracle.hpp"

using namespace mba;

TEST_CASE("ambient column counts") {
    for (int n = 2; n <= 5; ++n) {
        MonomialIndex idx = MonomialIndex::multilinear(n);
        int64_t expect = static_cast<int64_t>(catalan(n - 1)) * (1LL << (n - 1)) *
                         static_cast<int64_t>(factorial(n));
        CHECK(idx.cols() == expect);
    }
    CHECK(MonomialIndex::multilinear(2).cols() == 4);
    CHECK(MonomialIndex::multilinear(5).cols() == 26880);
}

TEST_CASE("monomial index is a bijection (arity 3, 4)") {
    for (int n : {3, 4}) {
        MonomialIndex idx = MonomialIndex::multilinear(n);
        std::vector<int> labels(n);
        for (int i = 0; i < n; ++i) labels[i] = i + 1;
        auto monos = all_monomials(labels);
        CHECK((int64_t)monos->size() == idx.cols());
        std::set<int64_t> seen;
        for (const Term& t : *monos) {
            int64_t id = idx.id(t);
            CHECK(id >= 0);
            CHECK(id < idx.cols());
            CHECK(seen.insert(id).second);
            CHECK(idx.term(id) == t);
        }
    }
}

TEST_CASE("multilinear dimensions, small arities") {
    CHECK(oracle_dim(Variety::MTP, 2, 1).dim == 2);
    CHECK(oracle_dim(Variety::MFM, 2, 1).dim == 2);
    CHECK(oracle_dim(Variety::MTP, 3, 1).dim == 6);
    CHECK(oracle_dim(Variety::MFM, 3, 1).dim == 9);
    auto r4 = oracle_dim(Variety::MTP, 4, 1);
    CHECK(r4.cols == 960);
    CHECK(r4.dim == 8);
    CHECK(oracle_dim(Variety::MFM, 4, 1).dim == 42);
    CHECK_THROWS(oracle_dim(Variety::MTP, 6, 1));  // needs allow_huge
    CHECK_THROWS(oracle_dim(Variety::MTP, 7, 1, true));
}

TEST_CASE("graded dimensions") {
    CHECK(graded_dimension(Variety::MTP, {{1, 2}}, 1).dim == 1);
    CHECK(graded_dimension(Variety::MTP, {{1, 1}, {2, 1}}, 1).dim == 2);
    CHECK(graded_dimension(Variety::MTP, {{1, 2}, {2, 1}}, 1).dim == 4);
    CHECK(graded_dimension(Variety::MFM, {{1, 2}, {2, 1}}, 1).dim == 5);
    CHECK_THROWS(graded_dimension(Variety::MTP, {{1, 2}, {2, 2}, {3, 1}, {4, 1}}, 1));
}

TEST_CASE("rank invariant under row shuffling") {
    MonomialIndex idx = MonomialIndex::multilinear(3);
    std::vector<SparseRow> rows;
    for_each_consequence(Variety::MTP, {1, 2, 3}, 1, [&](const LinComb& rel) {
        SparseRow r;
        for (const auto& [t, c] : rel.entries()) r.emplace_back(idx.id(t), c);
        std::sort(r.begin(), r.end());
        rows.push_back(std::move(r));
    });
    Echelon e1(idx.cols());
    for (const auto& r : rows) e1.add_row(r);
    std::mt19937 rng(99);
    std::shuffle(rows.begin(), rows.end(), rng);
    Echelon e2(idx.cols());
    for (const auto& r : rows) e2.add_row(r);
    CHECK(e1.rank() == e2.rank());
    CHECK(e1.rank() == idx.cols() - 6);
}

TEST_CASE("certification of the enumerated bases") {
    for (int n = 2; n <= 4; ++n) {
        std::vector<Term> mtp_basis;
        for (const auto& m : enumerate_mtp_basis_multilinear(n))
            mtp_basis.push_back(to_term(m));
        auto r = certify_basis(Variety::MTP, n, mtp_basis, 1);
        CHECK(r.certified);
        CHECK(r.dim == (int64_t)mtp_basis.size());

        std::vector<Term> mfm_basis;
        for (const auto& s : enumerate_fman_basis_multilinear(n))
            mfm_basis.push_back(seq_to_term(s));
        auto f = certify_basis(Variety::MFM, n, mfm_basis, 1);
        CHECK(f.certified);
        CHECK(f.dim == (int64_t)mfm_basis.size());
    }
}

TEST_CASE("tampering yields a dependence witness") {
    std::vector<Term> basis;
    for (const auto& s : enumerate_fman_basis_multilinear(4))
        basis.push_back(seq_to_term(s));
    REQUIRE(basis.size() == 42);
    // a condition-(7)-violating sequence: (w x3, b x2, w x1, x4)
    FSeq bad;
    bad.colors = {1, 0, 1};
    bad.gens = {3, 2, 1};
    bad.last = 4;
    REQUIRE(!fman_is_basis(bad));
    Term bad_term = seq_to_term(bad);
    // replace a monomial that is not already equal to the tampered one
    basis[0] = bad_term;
    auto r = certify_basis(Variety::MFM, 4, basis, 1);
    CHECK(!r.certified);
    CHECK(!r.witness.is_zero());
    // the witness is a combination of candidates that vanishes in the algebra
    CHECK(normalize_fman_terms(r.witness).is_zero());

    // dropping below the dimension is also rejected
    basis.erase(basis.begin());
    auto r2 = certify_basis(Variety::MFM, 4, basis, 1);
    CHECK(!r2.certified);
}

TEST_CASE("canonical projection agrees with the rewriters (arity 3)") {
    for (Variety v : {Variety::MTP, Variety::MFM}) {
        std::vector<Term> basis;
        if (v == Variety::MTP)
            for (const auto& m : enumerate_mtp_basis_multilinear(3))
                basis.push_back(to_term(m));
        else
            for (const auto& s : enumerate_fman_basis_multilinear(3))
                basis.push_back(seq_to_term(s));
        Projector pr(v, MonomialIndex::multilinear(3), basis, 1);
        REQUIRE(pr.result().certified);
        MonomialIndex idx = MonomialIndex::multilinear(3);
        for (int64_t id = 0; id < idx.cols(); ++id) {
            Term t = idx.term(id);
            LinComb want =
                v == Variety::MTP ? normalize_mtp_terms(t) : normalize_fman_terms(t);
            CHECK(pr.project(t) == want);
        }
    }
}

TEST_CASE("derived identities are consequences") {
    CHECK(verify_derived_identity(Variety::MTP, *find_identity("eq-11"), 1));
    CHECK(verify_derived_identity(Variety::MTP, *find_identity("eq-12"), 1));
    CHECK(verify_derived_identity(Variety::MTP, *find_identity("eq-13"), 1));
    CHECK(verify_derived_identity(Variety::MTP, *find_identity("eq-14"), 1));
    CHECK(verify_derived_identity(Variety::MFM, *find_identity("FMAN-MET"), 1));
    CHECK(verify_derived_identity(Variety::MTP, *find_identity("lie-antisym"), 1));
}

TEST_CASE("variety containment: MFM consequences lie in the MTP span") {
    for (int n = 2; n <= 4; ++n) {
        MonomialIndex idx = MonomialIndex::multilinear(n);
        std::vector<int> labels(n);
        for (int i = 0; i < n; ++i) labels[i] = i + 1;
        Echelon mtp_span(idx.cols());
        for_each_consequence(Variety::MTP, labels, 1, [&](const LinComb& rel) {
            SparseRow r;
            for (const auto& [t, c] : rel.entries()) r.emplace_back(idx.id(t), c);
            std::sort(r.begin(), r.end());
            mtp_span.add_row(r);
        });
        bool contained = true;
        for_each_consequence(Variety::MFM, labels, 1, [&](const LinComb& rel) {
            SparseRow r;
            for (const auto& [t, c] : rel.entries()) r.emplace_back(idx.id(t), c);
            std::sort(r.begin(), r.end());
            if (!mtp_span.reduce(r).empty()) contained = false;
        });
        CHECK(contained);
    }
}

TEST_CASE("determinism across thread counts") {
    auto a = oracle_dim(Variety::MFM, 4, 1);
    auto b = oracle_dim(Variety::MFM, 4, 3);
    CHECK(a.dim == b.dim);
    CHECK(a.rank == b.rank);
    CHECK(a.rows == b.rows);
}
