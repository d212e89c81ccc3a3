#include "identities.hpp"

#include <set>
#include <stdexcept>

namespace mba {

namespace {

Term P(char c) { return Term::leaf(-(c - 'a' + 1)); }
Term com(const Term& l, const Term& r) { return Term::node(Op::Com, l, r); }
Term lie(const Term& l, const Term& r) { return Term::node(Op::Lie, l, r); }

int count_placeholders(const LinComb& body) {
    std::set<int> phs;
    for (const auto& [t, c] : body.entries()) {
        for (const auto& [g, m] : multidegree(t))
            if (is_placeholder(g)) phs.insert(g);
    }
    return static_cast<int>(phs.size());
}

Identity make(std::string name, LinComb body) {
    Identity id;
    id.name = std::move(name);
    id.arity = count_placeholders(body);
    id.body = std::move(body);
    return id;
}

std::vector<Identity> build_catalog() {
    Term a = P('a'), b = P('b'), c = P('c'), d = P('d');
    Scalar one(1), neg(-1), half = frac(1, 2);
    std::vector<Identity> out;

    {
        LinComb v(com(com(a, b), c));
        v.add(com(a, com(b, c)), neg);
        out.push_back(make("com-assoc", v));
    }
    {
        LinComb v(com(a, b));
        v.add(com(b, a), neg);
        out.push_back(make("com-comm", v));
    }
    {
        LinComb v(lie(a, b));
        v.add(lie(b, a), one);
        out.push_back(make("lie-antisym", v));
    }
    {
        LinComb v(lie(lie(a, b), c));
        v.add(lie(lie(b, c), a), one);
        v.add(lie(lie(c, a), b), one);
        out.push_back(make("lie-jacobi", v));
    }
    {
        // a[b,c] = 1/2([ab,c] + [b,ac])
        LinComb v(com(a, lie(b, c)));
        v.add(lie(com(a, b), c), -half);
        v.add(lie(b, com(a, c)), -half);
        out.push_back(make("TP", v));
    }
    // the six statements of the metabelian chain (10)
    out.push_back(make("MET-1", LinComb(lie(lie(a, b), lie(c, d)))));
    out.push_back(make("MET-2", LinComb(lie(lie(a, b), com(c, d)))));
    out.push_back(make("MET-3", LinComb(lie(com(a, b), com(c, d)))));
    out.push_back(make("MET-4", LinComb(com(com(com(a, b), c), d))));
    out.push_back(make("MET-5", LinComb(com(com(a, b), lie(c, d)))));
    out.push_back(make("MET-6", LinComb(com(lie(a, b), lie(c, d)))));
    {
        // Hertling-Manin compatibility (7)
        LinComb v(lie(com(a, b), com(c, d)));
        v.add(com(lie(com(a, b), c), d), neg);
        v.add(com(lie(com(a, b), d), c), neg);
        v.add(com(a, lie(b, com(c, d))), neg);
        v.add(com(b, lie(a, com(c, d))), neg);
        v.add(com(com(a, c), lie(b, d)), one);
        v.add(com(com(b, c), lie(a, d)), one);
        v.add(com(com(b, d), lie(a, c)), one);
        v.add(com(com(a, d), lie(b, c)), one);
        out.push_back(make("FMAN", v));
    }
    {
        // (7) reduced modulo metabelian, eq. (8)
        LinComb v(com(lie(com(a, b), c), d));
        v.add(com(lie(com(a, b), d), c), one);
        v.add(com(a, lie(b, com(c, d))), one);
        v.add(com(b, lie(a, com(c, d))), one);
        out.push_back(make("FMAN-MET", v));
    }
    return out;
}

std::vector<Identity> build_derived() {
    Term a = P('a'), b = P('b'), c = P('c'), d = P('d'), e = P('e');
    Scalar one(1), neg(-1);
    std::vector<Identity> out;
    {
        LinComb v(lie(lie(lie(a, b), c), d));
        v.add(lie(lie(lie(a, b), d), c), neg);
        out.push_back(make("eq-11", v));
    }
    {
        LinComb v(lie(lie(com(a, b), c), d));
        v.add(lie(lie(com(a, b), d), c), neg);
        out.push_back(make("eq-12", v));
    }
    {
        LinComb v(lie(lie(com(a, b), c), d));
        v.add(lie(lie(com(b, c), a), d), neg);
        v.add(lie(lie(com(c, d), a), b), one);
        v.add(lie(lie(com(a, d), c), b), neg);
        out.push_back(make("eq-13", v));
    }
    {
        LinComb v(lie(com(a, com(b, c)), d));
        v.add(lie(com(a, com(b, d)), c), neg);
        out.push_back(make("eq-14", v));
    }
    {
        LinComb v(com(lie(com(lie(a, b), c), d), e));
        v.add(com(lie(com(lie(a, b), c), e), d), one);
        out.push_back(make("eq-21", v));
    }
    {
        LinComb v(com(lie(com(a, com(b, c)), d), e));
        v.add(com(lie(com(a, com(b, c)), e), d), one);
        out.push_back(make("eq-22", v));
    }
    return out;
}

}  // namespace

const std::vector<Identity>& identity_catalog() {
    static const std::vector<Identity> cat = build_catalog();
    return cat;
}

const std::vector<Identity>& derived_catalog() {
    static const std::vector<Identity> cat = build_derived();
    return cat;
}

const Identity* find_identity(const std::string& name) {
    for (const auto& id : identity_catalog())
        if (id.name == name) return &id;
    for (const auto& id : derived_catalog())
        if (id.name == name) return &id;
    return nullptr;
}

const VarietyPreset& preset(Variety v) {
    static const VarietyPreset mtp{
        "MTP",
        {"com-assoc", "com-comm", "lie-antisym", "lie-jacobi", "TP", "MET-1", "MET-2",
         "MET-3", "MET-4", "MET-5", "MET-6"}};
    static const VarietyPreset mfm{
        "MFM",
        {"com-assoc", "com-comm", "lie-antisym", "lie-jacobi", "FMAN", "MET-1", "MET-2",
         "MET-3", "MET-4", "MET-5", "MET-6"}};
    return v == Variety::MTP ? mtp : mfm;
}

Variety parse_variety(const std::string& s) {
    if (s == "mtp" || s == "MTP") return Variety::MTP;
    if (s == "mfm" || s == "MFM") return Variety::MFM;
    throw std::invalid_argument("unknown variety: " + s);
}

static Term subst_rec(const Term& t, const std::map<int, Term>& asg) {
    if (t.is_leaf()) {
        int g = t.gen();
        if (is_placeholder(g)) {
            auto it = asg.find(g);
            if (it == asg.end())
                throw std::invalid_argument("missing placeholder in assignment");
            return it->second;
        }
        return t;
    }
    return Term::node(t.op(), subst_rec(t.left(), asg), subst_rec(t.right(), asg));
}

LinComb substitute(const Identity& id, const std::map<int, Term>& assignment) {
    LinComb out;
    for (const auto& [t, c] : id.body.entries()) out.add(subst_rec(t, assignment), c);
    return out;
}

std::vector<int> identity_placeholders(const Identity& id) {
    std::set<int> phs;
    for (const auto& [t, c] : id.body.entries())
        for (const auto& [g, m] : multidegree(t))
            if (is_placeholder(g)) phs.insert(g);
    return {phs.begin(), phs.end()};
}

}  // namespace mba
