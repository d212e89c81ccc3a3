#pragma once

#include <map>
#include <string>

#include "scalar.hpp"
#include "term.hpp"

namespace mba {

// Formal rational combination of terms.  Ordered map keeps printing and
// iteration deterministic; zero coefficients are never stored.
class LinComb {
public:
    LinComb() = default;
    explicit LinComb(const Term& t, const Scalar& c = Scalar(1)) { add(t, c); }

    void add(const Term& t, const Scalar& c) {
        if (c == 0) return;
        auto [it, inserted] = entries_.try_emplace(t, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) entries_.erase(it);
        }
    }

    void add(const LinComb& o, const Scalar& c = Scalar(1)) {
        if (c == 0) return;
        for (const auto& [t, v] : o.entries_) add(t, v * c);
    }

    LinComb scaled(const Scalar& c) const {
        LinComb out;
        if (c == 0) return out;
        for (const auto& [t, v] : entries_) out.entries_.emplace(t, v * c);
        return out;
    }

    bool is_zero() const { return entries_.empty(); }
    size_t size() const { return entries_.size(); }
    const std::map<Term, Scalar>& entries() const { return entries_; }

    bool operator==(const LinComb& o) const { return entries_ == o.entries_; }

    std::string str() const;

private:
    std::map<Term, Scalar> entries_;
};

inline LinComb lincomb_add(const LinComb& a, const LinComb& b) {
    LinComb out = a;
    out.add(b);
    return out;
}

inline LinComb lincomb_scale(const LinComb& a, const Scalar& s) { return a.scaled(s); }

}  // namespace mba
