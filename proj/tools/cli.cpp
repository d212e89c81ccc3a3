// Command-line front end; everything goes through the shared-library C API.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mba/mba.h"

using nlohmann::json;

namespace {

struct GlobalOpts {
    int threads = 1;
    std::string format = "text";
    std::string out;
};

int default_threads() {
    if (const char* env = std::getenv("MBA_THREADS")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    return 1;
}

std::string take(char* s) {
    std::string out = s ? s : "";
    mba_string_free(s);
    return out;
}

[[noreturn]] void die_api(mba_status st) {
    std::cerr << "error: " << mba_last_error() << "\n";
    std::exit(st == MBA_EINVAL || st == MBA_EPARSE || st == MBA_ELIMIT ? 2 : 1);
}

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) {
        std::cerr << "error: cannot open " << path << "\n";
        std::exit(2);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void render_tsv(const json& j, std::ostream& os) {
    if (j.is_array()) {
        if (!j.empty() && j.front().is_object()) {
            std::vector<std::string> keys;
            for (auto it = j.front().begin(); it != j.front().end(); ++it)
                keys.push_back(it.key());
            for (size_t i = 0; i < keys.size(); ++i)
                os << (i ? "\t" : "") << keys[i];
            os << "\n";
            for (const auto& row : j) {
                for (size_t i = 0; i < keys.size(); ++i) {
                    const json& v = row.contains(keys[i]) ? row[keys[i]] : json();
                    os << (i ? "\t" : "")
                       << (v.is_string() ? v.get<std::string>() : v.dump());
                }
                os << "\n";
            }
        } else {
            for (const auto& v : j)
                os << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
        }
    } else if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it)
            os << it.key() << "\t"
               << (it->is_string() ? it->get<std::string>() : it->dump()) << "\n";
    } else {
        os << j.dump() << "\n";
    }
}

void render_text(const json& j, std::ostream& os) {
    if (j.is_array() && !j.empty() && j.front().is_object()) {
        for (const auto& row : j) {
            bool first = true;
            for (auto it = row.begin(); it != row.end(); ++it) {
                os << (first ? "" : "  ") << it.key() << "="
                   << (it->is_string() ? it->get<std::string>() : it->dump());
                first = false;
            }
            os << "\n";
        }
    } else {
        render_tsv(j, os);
    }
}

int write_report(const GlobalOpts& g, const json& j) {
    std::ostringstream ss;
    if (g.format == "json")
        ss << j.dump(2) << "\n";
    else if (g.format == "tsv")
        render_tsv(j, ss);
    else
        render_text(j, ss);
    if (g.out.empty()) {
        std::cout << ss.str();
    } else {
        std::ofstream f(g.out, std::ios::binary);
        if (!f) {
            std::cerr << "error: cannot write " << g.out << "\n";
            return 2;
        }
        f << ss.str();
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"metabelian transposed-Poisson / F-manifold algebra toolkit"};
    app.require_subcommand(1);
    // let global options (--format, --threads, --out) appear after subcommands
    app.fallthrough();

    GlobalOpts g;
    g.threads = default_threads();
    app.add_option("--threads", g.threads, "worker threads (env MBA_THREADS)")
        ->check(CLI::Range(1, 64));
    app.add_option("--format", g.format, "output format")
        ->check(CLI::IsMember({"json", "tsv", "text"}));
    app.add_option("--out", g.out, "write the report to a file instead of stdout");

    int exit_code = 0;
    json report;

    // ---- mtp ----
    auto* mtp = app.add_subcommand("mtp", "free metabelian transposed Poisson algebra");
    mtp->require_subcommand(1);
    {
        auto* c = mtp->add_subcommand("normalize", "rewrite a term into the basis");
        static std::string file;
        c->add_option("term-file", file, "file containing one term ('-' for stdin)")
            ->required();
        c->callback([&]() {
            std::string text = read_input(file);
            mba_term* t = nullptr;
            size_t off = 0;
            mba_status st = mba_term_parse(text.c_str(), &t, &off);
            if (st != MBA_OK) die_api(st);
            char* s = nullptr;
            st = mba_mtp_normalize(t, &s);
            mba_term_free(t);
            if (st != MBA_OK) die_api(st);
            report = json::parse(take(s));
        });
    }
    {
        auto* c = mtp->add_subcommand("basis", "enumerate basis monomials");
        static int gens = 0, deg = 0;
        static bool multilinear = false;
        c->add_option("--gens", gens, "generator bound x1..xk");
        c->add_option("--deg", deg, "degree")->required();
        c->add_flag("--multilinear", multilinear, "x1..xn each exactly once");
        c->callback([&]() {
            char* s = nullptr;
            mba_status st = mba_mtp_basis(gens, deg, multilinear ? 1 : 0, &s);
            if (st != MBA_OK) die_api(st);
            report = json::parse(take(s));
        });
    }
    {
        auto* c = mtp->add_subcommand("verify-identities",
                                      "random annihilation check of the defining identities");
        static int maxdeg = 6, trials = 1000;
        static unsigned seed = 20240901;
        c->add_option("--max-deg", maxdeg, "total degree bound");
        c->add_option("--trials", trials, "number of random assignments");
        c->add_option("--seed", seed, "PRNG seed");
        c->callback([&]() {
            char* s = nullptr;
            mba_status st = mba_verify_identities("mtp", maxdeg, trials, seed, &s);
            if (st != MBA_OK) die_api(st);
            report = json::parse(take(s));
            if (report["failures"].get<int>() != 0) exit_code = 1;
        });
    }
    {
        auto* c = mtp->add_subcommand("table",
                                      "multiplication-table vs rewriting cross-check");
        static bool check = false;
        static int gens = 5, mindeg = 4, maxdeg = 5;
        c->add_flag("--check", check, "run the cross-check");
        c->add_option("--gens", gens, "generator bound");
        c->add_option("--min-deg", mindeg, "lowest degree");
        c->add_option("--max-deg", maxdeg, "highest degree");
        c->callback([&]() {
            char* s = nullptr;
            mba_status st = mba_mtp_table_check(gens, mindeg, maxdeg, g.threads, &s);
            if (st != MBA_OK) die_api(st);
            report = json::parse(take(s));
            for (const auto& issue : report["issues"])
                if (issue["note"].get<std::string>().rfind("suspected typo", 0) != 0)
                    exit_code = 1;
        });
    }

    // ---- fman ----
    auto* fman = app.add_subcommand("fman", "metabelian F-manifold operad");
    fman->require_subcommand(1);
    {
        auto* c = fman->add_subcommand("basis", "enumerate basis sequences");
        static int deg = 0, gens = 0;
        static bool multilinear = false;
        c->add_option("--deg", deg, "degree")->required();
        c->add_option("--gens", gens, "generator bound x1..xk");
        c->add_flag("--multilinear", multilinear, "x1..xn each exactly once");
        c->callback([&]() {
            char* s = nullptr;
            mba_status st = mba_fman_basis(gens, deg, multilinear ? 1 : 0, &s);
            if (st != MBA_OK) die_api(st);
            report = json::parse(take(s));
        });
    }
    {
        auto* c = fman->add_subcommand("census", "multilinear per-coloring-pattern counts");
        static int deg = 4;
        c->add_option("--deg", deg, "degree (4..6)")->required();
        c->callback([&]() {
            char* s = nullptr;
            mba_status st = mba_fman_census(deg, g.threads, &s);
            if (st != MBA_OK) die_api(st);
            report = json::parse(take(s));
        });
    }
    {
        auto* c = fman->add_subcommand("dims", "multilinear dimension table");
        static int maxn = 7;
        c->add_option("--max", maxn, "largest degree");
        c->callback([&]() {
            char* s = nullptr;
            mba_status st = mba_fman_dims(maxn, g.threads, &s);
            if (st != MBA_OK) die_api(st);
            report = json::parse(take(s));
            static const long published[] = {1, 2, 9, 42, 224, 1444, 10870};
            for (size_t i = 0; i < report.size() && i < 7; ++i)
                if (report[i].get<long>() != published[i]) exit_code = 1;
        });
    }
    {
        auto* c = fman->add_subcommand("normalize", "rewrite a term into the basis");
        static std::string file;
        c->add_option("term-file", file, "file containing one term ('-' for stdin)")
            ->required();
        c->callback([&]() {
            std::string text = read_input(file);
            mba_term* t = nullptr;
            size_t off = 0;
            mba_status st = mba_term_parse(text.c_str(), &t, &off);
            if (st != MBA_OK) die_api(st);
            char* s = nullptr;
            st = mba_fman_normalize(t, &s);
            mba_term_free(t);
            if (st != MBA_OK) die_api(st);
            report = json::parse(take(s));
        });
    }

    // ---- identities ----
    auto* ids = app.add_subcommand("identities", "defining and derived identities");
    ids->require_subcommand(1);
    {
        auto* c = ids->add_subcommand("list", "catalog");
        c->callback([&]() {
            char* s = nullptr;
            mba_status st = mba_identities_list(&s);
            if (st != MBA_OK) die_api(st);
            report = json::parse(take(s));
        });
    }
    {
        auto* c = ids->add_subcommand("show", "one identity in full");
        static std::string name;
        c->add_option("name", name, "identity name")->required();
        c->callback([&]() {
            char* s = nullptr;
            mba_status st = mba_identity_show(name.c_str(), &s);
            if (st != MBA_OK) die_api(st);
            report = json::parse(take(s));
        });
    }

    // ---- oracle ----
    auto* oracle = app.add_subcommand("oracle", "consequence-span ground truth");
    oracle->require_subcommand(1);
    {
        auto* c = oracle->add_subcommand("dim", "multilinear dimension at an arity");
        static std::string variety;
        static int arity = 0;
        static bool huge = false;
        c->add_option("--variety", variety, "mtp or mfm")->required();
        c->add_option("--arity", arity, "arity")->required();
        c->add_flag("--huge", huge, "allow arity 6");
        c->callback([&]() {
            char* s = nullptr;
            mba_status st =
                mba_oracle_dim(variety.c_str(), arity, g.threads, huge ? 1 : 0, &s);
            if (st != MBA_OK) die_api(st);
            report = json::parse(take(s));
            // the verification contract: oracle vs enumeration
            char* b = nullptr;
            st = variety == "mtp" ? mba_mtp_basis(0, arity, 1, &b)
                                  : mba_fman_basis(0, arity, 1, &b);
            if (st != MBA_OK) die_api(st);
            json basis = json::parse(take(b));
            report["enumerated"] = basis.size();
            if (report["dimension"].get<long>() != (long)basis.size()) exit_code = 1;
        });
    }
    {
        auto* c = oracle->add_subcommand("certify", "certify a candidate basis");
        static std::string variety, basis_file;
        static int arity = 0;
        c->add_option("--variety", variety, "mtp or mfm")->required();
        c->add_option("--arity", arity, "arity")->required();
        c->add_option("--basis", basis_file, "JSON array of term strings (default: enumerated)");
        c->callback([&]() {
            std::string basis_json;
            if (!basis_file.empty()) basis_json = read_input(basis_file);
            char* s = nullptr;
            mba_status st = mba_oracle_certify(variety.c_str(), arity,
                                               basis_file.empty() ? nullptr
                                                                  : basis_json.c_str(),
                                               g.threads, &s);
            if (st != MBA_OK) die_api(st);
            report = json::parse(take(s));
            if (!report["certified"].get<bool>()) exit_code = 1;
        });
    }
    {
        auto* c = oracle->add_subcommand("graded", "graded dimension at a multidegree");
        static std::string variety, md;
        c->add_option("--variety", variety, "mtp or mfm")->required();
        c->add_option("--multidegree", md, "e.g. 1:2,2:1")->required();
        c->callback([&]() {
            std::vector<int> labels;
            std::stringstream ss(md);
            std::string part;
            while (std::getline(ss, part, ',')) {
                auto colon = part.find(':');
                if (colon == std::string::npos) {
                    std::cerr << "error: bad multidegree component '" << part << "'\n";
                    std::exit(2);
                }
                int gen = std::atoi(part.substr(0, colon).c_str());
                int mult = std::atoi(part.substr(colon + 1).c_str());
                if (gen < 1 || mult < 1) {
                    std::cerr << "error: bad multidegree component '" << part << "'\n";
                    std::exit(2);
                }
                for (int i = 0; i < mult; ++i) labels.push_back(gen);
            }
            char* s = nullptr;
            mba_status st = mba_oracle_graded(variety.c_str(), labels.data(),
                                              labels.size(), g.threads, &s);
            if (st != MBA_OK) die_api(st);
            report = json::parse(take(s));
        });
    }
    {
        auto* c = oracle->add_subcommand("matrix", "export the relation matrix");
        static std::string variety;
        static int arity = 0;
        c->add_option("--variety", variety, "mtp or mfm")->required();
        c->add_option("--arity", arity, "arity (2..5)")->required();
        c->callback([&]() {
            char* s = nullptr;
            mba_status st = mba_oracle_matrix(variety.c_str(), arity, g.threads, &s);
            if (st != MBA_OK) die_api(st);
            // raw text artifact; bypass the json renderers
            std::string text = take(s);
            if (g.out.empty()) {
                std::cout << text;
            } else {
                std::ofstream f(g.out, std::ios::binary);
                f << text;
            }
            std::exit(0);
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    int rc = write_report(g, report);
    return rc != 0 ? rc : exit_code;
}
