// End-to-end acceptance run.  Prints one PASS/FAIL line per criterion and
// exits nonzero if any criterion fails.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "fman.hpp"
#include "identities.hpp"
#include "monomials.hpp"
#include "mtp.hpp"
#include "oracle.hpp"

using namespace mba;

namespace {

int g_threads = 3;
int g_failures = 0;

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double secs() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    }
};

void report(int criterion, bool ok, const std::string& what, double secs) {
    std::printf("criterion %d: %s - %s (%.1fs)\n", criterion, ok ? "PASS" : "FAIL",
                what.c_str(), secs);
    std::fflush(stdout);
    if (!ok) ++g_failures;
}

Term random_term(std::mt19937& rng, int deg, int maxgen) {
    if (deg == 1) return Term::leaf(1 + static_cast<int>(rng() % maxgen));
    int l = 1 + static_cast<int>(rng() % (deg - 1));
    Op op = rng() % 2 ? Op::Com : Op::Lie;
    return Term::node(op, random_term(rng, l, maxgen), random_term(rng, deg - l, maxgen));
}

// ---- criterion 1: multilinear dimension table ----

void criterion1() {
    Timer t;
    std::vector<long> want{1, 2, 9, 42, 224, 1444, 10870};
    bool ok = fman_dims(7, g_threads) == want;
    report(1, ok, "multilinear dimensions 1..7 = 1,2,9,42,224,1444,10870", t.secs());
}

// ---- criterion 2: per-tree census ----

std::string pat_str(const std::vector<uint8_t>& p) {
    std::string s;
    for (auto c : p) s += c ? 'w' : 'b';
    return s;
}

void criterion2() {
    Timer t;
    bool ok = true;

    auto rows4 = per_tree_census(4, g_threads);
    std::vector<long> want4{3, 8, 12, 0, 6, 12, 4, 0};
    ok = ok && rows4.size() == 8;
    for (size_t i = 0; ok && i < 8; ++i) {
        ok = rows4[i].count == want4[i];
        ok = ok && rows4[i].c7_removed == (pat_str(rows4[i].pattern) == "wbw" ? 3 : 0);
    }

    auto rows5 = per_tree_census(5, g_threads);
    std::vector<long> want5{4,  15, 40, 0, 30, 30, 0, 0,
                            10, 30, 60, 0, 10, 10, 0, 0};
    ok = ok && rows5.size() == 16;
    for (size_t i = 0; ok && i < 16; ++i) {
        ok = rows5[i].count == want5[i];
        ok = ok && rows5[i].c7_removed == (pat_str(rows5[i].pattern) == "bwbw" ? 15 : 0);
    }

    auto rows6 = per_tree_census(6, g_threads);
    long net6 = 0;
    std::map<std::string, long> removed6;
    for (const auto& r : rows6) {
        net6 += r.count - r.c7_removed;
        if (r.c7_removed) removed6[pat_str(r.pattern)] = r.c7_removed;
    }
    ok = ok && net6 == 1444 &&
         removed6 == std::map<std::string, long>{{"bbwbw", 45}, {"wbwbw", 45}};

    report(2, ok, "census degrees 4-6 with condition-7 reductions 3 / 15 / 45+45",
           t.secs());
}

// ---- criterion 3: oracle dimension vs. enumeration ----

void criterion3() {
    Timer t;
    bool ok = true;
    for (int n = 2; n <= 5 && ok; ++n) {
        ok = oracle_dim(Variety::MFM, n, g_threads).dim ==
             (int64_t)enumerate_fman_basis_multilinear(n).size();
        ok = ok && oracle_dim(Variety::MTP, n, g_threads).dim ==
                       (int64_t)enumerate_mtp_basis_multilinear(n).size();
    }
    report(3, ok, "oracle dimensions equal enumeration counts, n = 2..5, both varieties",
           t.secs());
}

// ---- criterion 4: basis certification and tamper detection ----

void criterion4() {
    Timer t;
    bool ok = true;
    for (int n = 2; n <= 5 && ok; ++n) {
        std::vector<Term> mtp;
        for (const auto& m : enumerate_mtp_basis_multilinear(n)) mtp.push_back(to_term(m));
        ok = certify_basis(Variety::MTP, n, mtp, g_threads).certified;

        std::vector<Term> mfm;
        for (const auto& s : enumerate_fman_basis_multilinear(n))
            mfm.push_back(seq_to_term(s));
        ok = ok && certify_basis(Variety::MFM, n, mfm, g_threads).certified;
    }

    // tamper one monomial in each variety's arity-4 basis
    {
        std::vector<Term> mtp;
        for (const auto& m : enumerate_mtp_basis_multilinear(4)) mtp.push_back(to_term(m));
        // equal, modulo the relations, to another candidate in the list
        mtp[0] = parse_term("(lie (lie (com x1 x2) x4) x3)");
        auto r = certify_basis(Variety::MTP, 4, mtp, g_threads);
        ok = ok && !r.certified && !r.witness.is_zero() &&
             normalize_mtp_terms(r.witness).is_zero();
    }
    {
        std::vector<Term> mfm;
        for (const auto& s : enumerate_fman_basis_multilinear(4))
            mfm.push_back(seq_to_term(s));
        mfm[0] = parse_term("(com x3 (lie x2 (com x4 x1)))");
        auto r = certify_basis(Variety::MFM, 4, mfm, g_threads);
        ok = ok && !r.certified && !r.witness.is_zero() &&
             normalize_fman_terms(r.witness).is_zero();
    }
    report(4, ok, "bases certified at n = 2..5; tampering yields a verified witness",
           t.secs());
}

// ---- criterion 5: identity annihilation on random substitutions ----

void criterion5() {
    Timer t;
    std::mt19937 rng(20240817);
    long failures = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        for (Variety v : {Variety::MTP, Variety::MFM}) {
            for (const auto& name : preset(v).identity_names) {
                const Identity& id = *find_identity(name);
                auto ps = identity_placeholders(id);
                std::vector<int> degs(ps.size(), 1);
                int extra = 6 - (int)ps.size();
                for (int i = 0; i < extra; ++i) ++degs[rng() % degs.size()];
                std::map<int, Term> sub;
                for (size_t i = 0; i < ps.size(); ++i)
                    sub[ps[i]] = random_term(rng, degs[i], 4);
                LinComb inst = substitute(id, sub);
                LinComb nf = v == Variety::MTP ? normalize_mtp_terms(inst)
                                               : normalize_fman_terms(inst);
                if (!nf.is_zero()) ++failures;
            }
        }
    }
    report(5, failures == 0,
           "1000 random substitutions of total degree <= 6 annihilate every preset "
           "identity",
           t.secs());
}

// ---- criterion 6: derived identities as span members ----

void criterion6() {
    Timer t;
    bool ok = true;
    for (const char* name : {"eq-11", "eq-12", "eq-13", "eq-14"})
        ok = ok && verify_derived_identity(Variety::MTP, *find_identity(name), g_threads);
    for (const char* name : {"FMAN-MET", "eq-21", "eq-22"})
        ok = ok && verify_derived_identity(Variety::MFM, *find_identity(name), g_threads);
    report(6, ok, "derived identities verified as consequences (4 for mtp, 3 for mfm)",
           t.secs());
}

// ---- criterion 7: multiplication-table soundness ----

MtpComb eval_term(const Term& t, const std::map<int, MtpComb>& sub) {
    if (t.is_leaf()) {
        if (is_placeholder(t.gen())) return sub.at(t.gen());
        MtpMono g;
        g.shape = MtpMono::Shape::GEN;
        g.head = {t.gen()};
        return MtpComb{{g, Scalar(1)}};
    }
    return mtp_product(eval_term(t.left(), sub), eval_term(t.right(), sub), t.op());
}

MtpMono shifted(MtpMono m, int off) {
    for (int& g : m.head) g += off;
    for (int& g : m.tail) g += off;
    return m;
}

void criterion7() {
    Timer t;

    auto issues = mtp_table_check(6, 4, 6, g_threads);
    bool typo_seen = false, clean = true;
    for (const auto& i : issues) {
        if (i.note.rfind("suspected typo", 0) == 0)
            typo_seen = true;
        else
            clean = false;
    }

    // the algebra defined by the table satisfies every defining identity on
    // multilinear basis substitutions of total degree <= 6
    bool annihilated = true;
    for (const auto& name : preset(Variety::MTP).identity_names) {
        const Identity& id = *find_identity(name);
        auto ps = identity_placeholders(id);
        int k = (int)ps.size();
        std::vector<int> degs(k, 1);
        while (true) {
            int total = 0;
            for (int d : degs) total += d;
            if (total <= 6) {
                // cartesian product of shifted multilinear bases per slot
                std::vector<std::vector<MtpMono>> slots(k);
                int off = 0;
                for (int i = 0; i < k; ++i) {
                    for (const auto& m : enumerate_mtp_basis_multilinear(degs[i]))
                        slots[i].push_back(shifted(m, off));
                    off += degs[i];
                }
                std::vector<size_t> pick(k, 0);
                while (true) {
                    std::map<int, MtpComb> sub;
                    for (int i = 0; i < k; ++i)
                        sub[ps[i]] = MtpComb{{slots[i][pick[i]], Scalar(1)}};
                    MtpComb total_val;
                    for (const auto& [body_t, c] : id.body.entries()) {
                        for (const auto& [m, cm] : eval_term(body_t, sub)) {
                            Scalar& slot = total_val[m];
                            slot += c * cm;
                            if (slot == 0) total_val.erase(m);
                        }
                    }
                    if (!total_val.empty()) annihilated = false;
                    int i = k - 1;
                    while (i >= 0 && ++pick[i] == slots[i].size()) pick[i--] = 0;
                    if (i < 0) break;
                }
            }
            int i = k - 1;
            while (i >= 0 && ++degs[i] == 6) degs[i--] = 1;
            if (i < 0) break;
        }
    }

    report(7, clean && typo_seen && annihilated,
           "table matches rewriting on degrees 4-6 over x1..x6 (typo case reported); "
           "table algebra satisfies the defining identities",
           t.secs());
}

// ---- criterion 8: determinism across thread counts ----

std::string snapshot(int threads) {
    std::string s;
    for (int n = 1; n <= 5; ++n)
        for (const auto& m : enumerate_mtp_basis_multilinear(n)) s += m.str() + "\n";
    for (long d : fman_dims(6, threads)) s += std::to_string(d) + ";";
    for (const auto& r : per_tree_census(5, threads))
        s += pat_str(r.pattern) + ":" + std::to_string(r.count) + ":" +
             std::to_string(r.c7_removed) + "\n";
    for (Variety v : {Variety::MTP, Variety::MFM}) {
        auto r = oracle_dim(v, 4, threads);
        s += std::to_string(r.cols) + "," + std::to_string(r.rank) + "," +
             std::to_string(r.dim) + "," + std::to_string(r.rows) + "\n";
    }
    for (const auto& i : mtp_table_check(4, 4, 5, threads)) {
        s += i.m.str() + "|" + std::to_string(i.t) + "|" + i.note + "|" +
             i.table_value.str() + "|" + i.normalize_value.str() + "\n";
    }
    std::mt19937 rng(4);
    for (int i = 0; i < 50; ++i) {
        Term t = random_term(rng, 1 + (int)(rng() % 6), 4);
        s += normalize_mtp_terms(t).str() + "\n";
        s += normalize_fman_terms(t).str() + "\n";
    }
    return s;
}

void criterion8() {
    Timer t;
    bool ok = snapshot(1) == snapshot(4);
    report(8, ok, "enumeration, normalization and oracle outputs byte-identical across "
                  "thread counts",
           t.secs());
}

}  // namespace

int main(int argc, char** argv) {
    if (argc > 1) g_threads = std::atoi(argv[1]);
    if (const char* env = std::getenv("MBA_THREADS"); env && argc <= 1)
        g_threads = std::atoi(env);
    if (g_threads < 1) g_threads = 1;

    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();

    if (g_failures) {
        std::printf("%d criterion(s) failed\n", g_failures);
        return 1;
    }
    std::printf("all criteria passed\n");
    return 0;
}
