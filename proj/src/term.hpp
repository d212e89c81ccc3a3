#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <string>

namespace mba {

enum class Op : uint8_t { Com = 0, Lie = 1 };

// Generator indices are positive integers (x1, x2, ...).  Placeholders used
// in identities occupy -1..-5 and print as a..e; they sort before every
// concrete generator.
constexpr int kPlaceholderA = -1;
constexpr int kPlaceholderE = -5;

inline bool is_placeholder(int gen) { return gen < 0; }

class Term;

namespace detail {
struct TermNode {
    int gen = 0;  // nonzero for leaves
    Op op = Op::Com;
    std::shared_ptr<const TermNode> left, right;
    int degree = 1;
    size_t hash = 0;
};
}  // namespace detail

class Term {
public:
    Term() = default;  // empty handle; only produced by default construction

    static Term leaf(int gen);
    static Term node(Op op, const Term& l, const Term& r);

    bool valid() const { return p_ != nullptr; }
    bool is_leaf() const { return p_->gen != 0; }
    int gen() const { return p_->gen; }
    Op op() const { return p_->op; }
    Term left() const { return Term(p_->left); }
    Term right() const { return Term(p_->right); }
    int degree() const { return p_->degree; }
    size_t hash() const { return p_->hash; }

    bool operator==(const Term& o) const;
    // Deterministic total order: by degree, then structure.
    std::strong_ordering operator<=>(const Term& o) const;

private:
    explicit Term(std::shared_ptr<const detail::TermNode> p) : p_(std::move(p)) {}
    std::shared_ptr<const detail::TermNode> p_;
};

struct TermHash {
    size_t operator()(const Term& t) const { return t.hash(); }
};

// multiplicity of each generator index
std::map<int, int> multidegree(const Term& t);

std::string format_term(const Term& t);

// Throws ParseError with a 1-based byte offset (column) on malformed input.
struct ParseError : std::runtime_error {
    size_t offset;
    ParseError(const std::string& msg, size_t off)
        : std::runtime_error(msg + " at offset " + std::to_string(off)), offset(off) {}
};

Term parse_term(const std::string& text);

}  // namespace mba
