#include "mba/mba.h"

#include <cstdlib>
#include <cstring>
#include <random>
#include <string>

#include <json.hpp>

#include "fman.hpp"
#include "identities.hpp"
#include "mtp.hpp"
#include "consequences.hpp"
#include "monomials.hpp"
#include "oracle.hpp"
#include "term.hpp"

using nlohmann::json;
using namespace mba;

namespace {

thread_local std::string g_error;

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

mba_status fail(mba_status st, const std::string& msg) {
    g_error = msg;
    return st;
}

template <typename F>
mba_status guarded(F&& f) {
    try {
        g_error.clear();
        return f();
    } catch (const ParseError& e) {
        return fail(MBA_EPARSE, e.what());
    } catch (const std::invalid_argument& e) {
        return fail(MBA_EINVAL, e.what());
    } catch (const std::out_of_range& e) {
        return fail(MBA_ELIMIT, e.what());
    } catch (const nlohmann::json::exception& e) {
        return fail(MBA_EINVAL, e.what());
    } catch (const std::exception& e) {
        return fail(MBA_EINTERNAL, e.what());
    }
}

json lincomb_json(const LinComb& lc) {
    json arr = json::array();
    for (const auto& [t, c] : lc.entries())
        arr.push_back({{"monomial", format_term(t)}, {"coefficient", scalar_str(c)}});
    return arr;
}

mba_status emit(const json& j, char** out) {
    if (!out) return fail(MBA_EINVAL, "null output pointer");
    *out = dup_string(j.dump(2));
    return MBA_OK;
}

Variety variety_of(const char* s) {
    if (!s) throw std::invalid_argument("null variety");
    return parse_variety(s);
}

}  // namespace

extern "C" {

struct mba_term {
    Term t;
};

const char* mba_version(void) { return "1.0.0"; }

const char* mba_last_error(void) { return g_error.c_str(); }

void mba_string_free(char* s) { std::free(s); }

mba_status mba_term_parse(const char* text, mba_term** out, size_t* error_offset) {
    if (error_offset) *error_offset = 0;
    return guarded([&]() -> mba_status {
        if (!text || !out) return fail(MBA_EINVAL, "null argument");
        try {
            Term t = parse_term(text);
            *out = new mba_term{std::move(t)};
            return MBA_OK;
        } catch (const ParseError& e) {
            if (error_offset) *error_offset = e.offset;
            throw;
        }
    });
}

mba_status mba_term_format(const mba_term* t, char** out) {
    return guarded([&]() -> mba_status {
        if (!t || !out) return fail(MBA_EINVAL, "null argument");
        *out = dup_string(format_term(t->t));
        return MBA_OK;
    });
}

int mba_term_degree(const mba_term* t) { return t ? t->t.degree() : 0; }

void mba_term_free(mba_term* t) { delete t; }

mba_status mba_mtp_normalize(const mba_term* t, char** json_out) {
    return guarded([&]() -> mba_status {
        if (!t) return fail(MBA_EINVAL, "null term");
        return emit(lincomb_json(normalize_mtp_terms(t->t)), json_out);
    });
}

mba_status mba_fman_normalize(const mba_term* t, char** json_out) {
    return guarded([&]() -> mba_status {
        if (!t) return fail(MBA_EINVAL, "null term");
        return emit(lincomb_json(normalize_fman_terms(t->t)), json_out);
    });
}

mba_status mba_mtp_basis(int max_index, int degree, int multilinear, char** json_out) {
    return guarded([&]() -> mba_status {
        if (degree < 1) return fail(MBA_EINVAL, "degree must be >= 1");
        json arr = json::array();
        if (multilinear) {
            for (const auto& m : enumerate_mtp_basis_multilinear(degree))
                arr.push_back(m.str());
        } else {
            if (max_index < 1) return fail(MBA_EINVAL, "max_index must be >= 1");
            for (const auto& m : enumerate_mtp_basis(max_index, degree))
                arr.push_back(m.str());
        }
        return emit(arr, json_out);
    });
}

mba_status mba_fman_basis(int max_index, int degree, int multilinear, char** json_out) {
    return guarded([&]() -> mba_status {
        if (degree < 1) return fail(MBA_EINVAL, "degree must be >= 1");
        json arr = json::array();
        if (multilinear) {
            for (const auto& s : enumerate_fman_basis_multilinear(degree))
                arr.push_back(s.str());
        } else {
            if (max_index < 1) return fail(MBA_EINVAL, "max_index must be >= 1");
            // all multisets of the degree over x1..max_index
            std::vector<int> ms(degree, 1);
            while (true) {
                for (const auto& s : enumerate_fman_basis(ms)) arr.push_back(s.str());
                int i = degree - 1;
                while (i >= 0 && ms[i] == max_index) --i;
                if (i < 0) break;
                int v = ms[i] + 1;
                for (int j = i; j < degree; ++j) ms[j] = v;
            }
        }
        return emit(arr, json_out);
    });
}

mba_status mba_fman_dims(int max_n, int threads, char** json_out) {
    return guarded([&]() -> mba_status {
        if (max_n < 1 || max_n > 8) return fail(MBA_ELIMIT, "max_n must be in 1..8");
        json arr = json::array();
        for (long d : fman_dims(max_n, threads)) arr.push_back(d);
        return emit(arr, json_out);
    });
}

mba_status mba_fman_census(int n, int threads, char** json_out) {
    return guarded([&]() -> mba_status {
        if (n < 4 || n > 6) return fail(MBA_ELIMIT, "census degree must be in 4..6");
        json arr = json::array();
        for (const auto& row : per_tree_census(n, threads)) {
            std::string pat;
            for (auto c : row.pattern) pat += c ? 'w' : 'b';
            arr.push_back(
                {{"pattern", pat}, {"count", row.count}, {"c7_removed", row.c7_removed}});
        }
        return emit(arr, json_out);
    });
}

mba_status mba_identities_list(char** json_out) {
    return guarded([&]() -> mba_status {
        json arr = json::array();
        for (const auto& id : identity_catalog())
            arr.push_back({{"name", id.name}, {"arity", id.arity}, {"kind", "defining"}});
        for (const auto& id : derived_catalog())
            arr.push_back({{"name", id.name}, {"arity", id.arity}, {"kind", "derived"}});
        return emit(arr, json_out);
    });
}

mba_status mba_identity_show(const char* name, char** json_out) {
    return guarded([&]() -> mba_status {
        if (!name) return fail(MBA_EINVAL, "null name");
        const Identity* id = find_identity(name);
        if (!id) return fail(MBA_EINVAL, std::string("unknown identity: ") + name);
        return emit(json{{"name", id->name},
                         {"arity", id->arity},
                         {"body", lincomb_json(id->body)}},
                    json_out);
    });
}

namespace {

Term random_term(std::mt19937& rng, int deg, int maxgen) {
    if (deg == 1) return Term::leaf(1 + static_cast<int>(rng() % maxgen));
    int l = 1 + static_cast<int>(rng() % (deg - 1));
    Op op = rng() % 2 ? Op::Com : Op::Lie;
    return Term::node(op, random_term(rng, l, maxgen), random_term(rng, deg - l, maxgen));
}

}  // namespace

mba_status mba_verify_identities(const char* variety, int max_degree, int trials,
                                 unsigned seed, char** json_out) {
    return guarded([&]() -> mba_status {
        Variety v = variety_of(variety);
        if (max_degree < 2 || max_degree > 8)
            return fail(MBA_ELIMIT, "max_degree must be in 2..8");
        if (trials < 1) return fail(MBA_EINVAL, "trials must be >= 1");
        std::mt19937 rng(seed);
        int failures = 0;
        json failed = json::array();
        for (int trial = 0; trial < trials; ++trial) {
            for (const auto& idname : preset(v).identity_names) {
                const Identity& id = *find_identity(idname);
                std::map<int, Term> sub;
                int budget = max_degree;
                auto ps = identity_placeholders(id);
                for (size_t i = 0; i < ps.size(); ++i) {
                    int slots = static_cast<int>(ps.size() - i);
                    int maxd = std::max(1, budget - (slots - 1));
                    int d = 1 + static_cast<int>(rng() % maxd);
                    budget -= d;
                    sub[ps[i]] = random_term(rng, d, max_degree);
                }
                LinComb body = substitute(id, sub);
                LinComb nf = v == Variety::MTP ? normalize_mtp_terms(body)
                                               : normalize_fman_terms(body);
                if (!nf.is_zero()) {
                    ++failures;
                    if (failed.size() < 10) failed.push_back(id.name);
                }
            }
        }
        return emit(json{{"trials", trials},
                         {"max_degree", max_degree},
                         {"failures", failures},
                         {"failed_identities", failed}},
                    json_out);
    });
}

mba_status mba_mtp_table_check(int max_index, int min_degree, int max_degree, int threads,
                               char** json_out) {
    return guarded([&]() -> mba_status {
        if (max_index < 1 || max_index > 6) return fail(MBA_ELIMIT, "max_index must be in 1..6");
        if (min_degree < 2 || max_degree > 6 || min_degree > max_degree)
            return fail(MBA_ELIMIT, "degrees must satisfy 2 <= min <= max <= 6");
        auto issues = mtp_table_check(max_index, min_degree, max_degree, threads);
        json arr = json::array();
        for (const auto& i : issues)
            arr.push_back({{"monomial", i.m.str()},
                           {"t", i.t},
                           {"op", i.op == Op::Com ? "com" : "lie"},
                           {"note", i.note},
                           {"displayed_value", lincomb_json(i.table_value)},
                           {"normalized_value", lincomb_json(i.normalize_value)}});
        return emit(json{{"max_index", max_index},
                         {"min_degree", min_degree},
                         {"max_degree", max_degree},
                         {"issues", arr}},
                    json_out);
    });
}

namespace {

json oracle_json(const char* variety, int n, const OracleResult& r) {
    return json{{"variety", variety}, {"arity", n},     {"columns", r.cols},
                {"rank", r.rank},     {"dimension", r.dim}, {"rows", r.rows}};
}

}  // namespace

mba_status mba_oracle_dim(const char* variety, int n, int threads, int allow_huge,
                          char** json_out) {
    return guarded([&]() -> mba_status {
        Variety v = variety_of(variety);
        OracleResult r = oracle_dim(v, n, threads, allow_huge != 0);
        return emit(oracle_json(variety, n, r), json_out);
    });
}

mba_status mba_oracle_graded(const char* variety, const int* labels, size_t nlabels,
                             int threads, char** json_out) {
    return guarded([&]() -> mba_status {
        Variety v = variety_of(variety);
        if (!labels || nlabels == 0) return fail(MBA_EINVAL, "empty multidegree");
        std::map<int, int> md;
        for (size_t i = 0; i < nlabels; ++i) ++md[labels[i]];
        OracleResult r = graded_dimension(v, md, threads);
        json jmd = json::object();
        for (auto& [g, k] : md) jmd[std::string("x") + std::to_string(g)] = k;
        return emit(json{{"variety", variety},
                         {"multidegree", jmd},
                         {"columns", r.cols},
                         {"rank", r.rank},
                         {"dimension", r.dim},
                         {"rows", r.rows}},
                    json_out);
    });
}

mba_status mba_oracle_certify(const char* variety, int n, const char* basis_json,
                              int threads, char** json_out) {
    return guarded([&]() -> mba_status {
        Variety v = variety_of(variety);
        std::vector<Term> candidates;
        if (basis_json) {
            json arr = json::parse(basis_json);
            if (!arr.is_array()) return fail(MBA_EINVAL, "basis must be a JSON array");
            for (const auto& e : arr) candidates.push_back(parse_term(e.get<std::string>()));
        } else if (v == Variety::MTP) {
            for (const auto& m : enumerate_mtp_basis_multilinear(n))
                candidates.push_back(to_term(m));
        } else {
            for (const auto& s : enumerate_fman_basis_multilinear(n))
                candidates.push_back(seq_to_term(s));
        }
        CertifyResult r = certify_basis(v, n, candidates, threads);
        return emit(json{{"variety", variety},
                         {"arity", n},
                         {"certified", r.certified},
                         {"dimension", r.dim},
                         {"candidates", r.candidate_count},
                         {"witness", lincomb_json(r.witness)},
                         {"reason", r.reason}},
                    json_out);
    });
}

mba_status mba_oracle_matrix(const char* variety, int n, int threads, char** text_out) {
    return guarded([&]() -> mba_status {
        Variety v = variety_of(variety);
        if (n < 2 || n > 5) return fail(MBA_ELIMIT, "matrix export supports arity 2..5");
        if (!text_out) return fail(MBA_EINVAL, "null output pointer");
        MonomialIndex index = MonomialIndex::multilinear(n);
        std::vector<int> labels(n);
        for (int i = 0; i < n; ++i) labels[i] = i + 1;
        std::string body;
        int64_t rows = 0, entries = 0;
        for_each_consequence(v, labels, threads, [&](const LinComb& rel) {
            ++rows;
            for (const auto& [t, c] : rel.entries()) {
                body += std::to_string(rows) + " " + std::to_string(index.id(t) + 1) +
                        " " + scalar_str(c) + "\n";
                ++entries;
            }
        });
        std::string head = "%%MatrixMarket matrix coordinate rational general\n" +
                           std::to_string(rows) + " " + std::to_string(index.cols()) +
                           " " + std::to_string(entries) + "\n";
        *text_out = dup_string(head + body);
        return MBA_OK;
    });
}

mba_status mba_oracle_verify_derived(const char* variety, const char* name, int threads,
                                     char** json_out) {
    return guarded([&]() -> mba_status {
        Variety v = variety_of(variety);
        if (!name) return fail(MBA_EINVAL, "null name");
        const Identity* id = find_identity(name);
        if (!id) return fail(MBA_EINVAL, std::string("unknown identity: ") + name);
        bool holds = verify_derived_identity(v, *id, threads);
        return emit(json{{"variety", variety}, {"name", id->name}, {"holds", holds}},
                    json_out);
    });
}

}  // extern "C"
