#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "lincomb.hpp"

namespace mba {

// Basis monomial of the free metabelian transposed Poisson algebra: a
// left-nested lie-comb over a commutative head of degree 1..3.
//
//   GEN   x_i                       head = {i},        tail empty
//   LIE   [[x_a,x_b],t1,...]        head = (a,b) as bracketed; a<b when the
//                                   tail is empty (degree 2), a>b otherwise
//   COM2  [[x_a x_b,t1],t2,...]     head = (a,b), a<=b
//   COM3  [[x_a x_b x_c,t1],...]    head = (a,b,c), a<=b<=c
//
// tail is sorted ascending.
struct MtpMono {
    enum class Shape : uint8_t { GEN = 0, LIE = 1, COM2 = 2, COM3 = 3 };
    Shape shape = Shape::GEN;
    std::vector<int> head;
    std::vector<int> tail;

    int degree() const { return static_cast<int>(head.size() + tail.size()); }
    bool operator==(const MtpMono&) const = default;
    // degree, then shape (LIE < COM2 < COM3), then head, then tail
    std::strong_ordering operator<=>(const MtpMono& o) const {
        if (auto c = degree() <=> o.degree(); c != 0) return c;
        if (auto c = shape <=> o.shape; c != 0) return c;
        if (auto c = head <=> o.head; c != 0) return c;
        return tail <=> o.tail;
    }
    std::string str() const;
};

using MtpComb = std::map<MtpMono, Scalar>;

Term to_term(const MtpMono& m);

// whether the monomial satisfies the basis index conditions
bool mtp_is_basis(const MtpMono& m);

// All basis monomials of the given degree over x1..xk (repeats allowed), in
// the MtpMono total order.
std::vector<MtpMono> enumerate_mtp_basis(int max_index, int degree);
// Multilinear slice: each of x1..xn exactly once.
std::vector<MtpMono> enumerate_mtp_basis_multilinear(int n);

MtpComb normalize_mtp(const Term& t);
MtpComb normalize_mtp(const LinComb& lc);
// same result expressed over to_term images
LinComb normalize_mtp_terms(const Term& t);
LinComb normalize_mtp_terms(const LinComb& lc);

LinComb mtp_comb_to_lincomb(const MtpComb& c);

// Closed-form multiplication table: basis monomial times a generator.  Degrees
// <= 3 delegate to normalize_mtp; the pure-Lie com-case with t not minimal is
// the suspected-typo case and also delegates (see table_check).
MtpComb multiply_basis(const MtpMono& m, int t, Op op);

// bilinear product on the span of the basis; both-degrees>1 products vanish
MtpComb mtp_product(const MtpComb& a, const MtpComb& b, Op op);

struct TableIssue {
    MtpMono m;
    int t = 0;
    Op op = Op::Com;
    std::string note;
    LinComb table_value, normalize_value;
};

// Cross-check multiply_basis against normalize_mtp(to_term(m) op x_t) for all
// basis monomials of degree min_degree..max_degree over x1..xk.  The
// suspected-typo case is evaluated from the published closed form and
// reported (never silently used).
std::vector<TableIssue> mtp_table_check(int max_index, int min_degree, int max_degree,
                                        int threads);

}  // namespace mba
