#include "term.hpp"

#include <cctype>
#include <vector>

namespace mba {

static size_t mix(size_t a, size_t b) {
    // boost-style hash combine
    return a ^ (b + 0x9e3779b97f4a7c15ULL + (a << 6) + (a >> 2));
}

Term Term::leaf(int gen) {
    auto n = std::make_shared<detail::TermNode>();
    n->gen = gen;
    n->degree = 1;
    n->hash = mix(0x1eaf, static_cast<size_t>(gen + (1 << 20)));
    return Term(std::move(n));
}

Term Term::node(Op op, const Term& l, const Term& r) {
    auto n = std::make_shared<detail::TermNode>();
    n->gen = 0;
    n->op = op;
    n->left = l.p_;
    n->right = r.p_;
    n->degree = l.degree() + r.degree();
    n->hash = mix(mix(static_cast<size_t>(op) + 2, l.hash()), r.hash());
    return Term(std::move(n));
}

bool Term::operator==(const Term& o) const {
    if (p_ == o.p_) return true;
    if (p_->hash != o.p_->hash || p_->degree != o.p_->degree) return false;
    if (p_->gen != o.p_->gen) return false;
    if (p_->gen != 0) return true;
    if (p_->op != o.p_->op) return false;
    return left() == o.left() && right() == o.right();
}

std::strong_ordering Term::operator<=>(const Term& o) const {
    if (p_ == o.p_) return std::strong_ordering::equal;
    if (auto c = p_->degree <=> o.p_->degree; c != 0) return c;
    bool la = is_leaf(), lb = o.is_leaf();
    if (la != lb) return la ? std::strong_ordering::less : std::strong_ordering::greater;
    if (la) return p_->gen <=> o.p_->gen;
    if (auto c = p_->op <=> o.p_->op; c != 0) return c;
    if (auto c = left() <=> o.left(); c != 0) return c;
    return right() <=> o.right();
}

std::map<int, int> multidegree(const Term& t) {
    std::map<int, int> out;
    // explicit stack to avoid recursion limits on deep combs
    std::vector<Term> stack{t};
    while (!stack.empty()) {
        Term cur = stack.back();
        stack.pop_back();
        if (cur.is_leaf()) {
            out[cur.gen()]++;
        } else {
            stack.push_back(cur.left());
            stack.push_back(cur.right());
        }
    }
    return out;
}

static void format_rec(const Term& t, std::string& out) {
    if (t.is_leaf()) {
        int g = t.gen();
        if (is_placeholder(g)) {
            out += static_cast<char>('a' + (-g - 1));
        } else {
            out += 'x';
            out += std::to_string(g);
        }
        return;
    }
    out += '(';
    out += (t.op() == Op::Com) ? "com" : "lie";
    out += ' ';
    format_rec(t.left(), out);
    out += ' ';
    format_rec(t.right(), out);
    out += ')';
}

std::string format_term(const Term& t) {
    std::string out;
    format_rec(t, out);
    return out;
}

namespace {

struct Parser {
    const std::string& s;
    size_t pos = 0;

    explicit Parser(const std::string& text) : s(text) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    Term parse() {
        skip_ws();
        Term t = term();
        skip_ws();
        if (pos != s.size()) throw ParseError("trailing input", pos + 1);
        return t;
    }

    Term term() {
        skip_ws();
        if (pos >= s.size()) throw ParseError("unexpected end of input", pos + 1);
        char c = s[pos];
        if (c == '(') {
            size_t open = pos;
            ++pos;
            skip_ws();
            Op op;
            if (s.compare(pos, 3, "com") == 0) {
                op = Op::Com;
            } else if (s.compare(pos, 3, "lie") == 0) {
                op = Op::Lie;
            } else {
                throw ParseError("expected 'com' or 'lie'", pos + 1);
            }
            pos += 3;
            Term l = term();
            Term r = term();
            skip_ws();
            if (pos >= s.size()) throw ParseError("unbalanced '('", open + 1);
            if (s[pos] != ')') throw ParseError("expected ')'", pos + 1);
            ++pos;
            return Term::node(op, l, r);
        }
        if (c == 'x') {
            size_t start = pos;
            ++pos;
            size_t d0 = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            if (pos == d0 || s[d0] == '0') throw ParseError("bad generator", start + 1);
            return Term::leaf(std::stoi(s.substr(d0, pos - d0)));
        }
        if (c >= 'a' && c <= 'e') {
            ++pos;
            return Term::leaf(-(c - 'a' + 1));
        }
        throw ParseError("unknown symbol", pos + 1);
    }
};

}  // namespace

Term parse_term(const std::string& text) {
    return Parser(text).parse();
}

}  // namespace mba
