#pragma once

#include <map>
#include <vector>

#include "precy/rational.hpp"

namespace precy {

// Finite formal linear combination of basis elements B over Scalar.
// B needs a strict weak order. Zero coefficients are erased eagerly so that
// equality of combinations is equality of maps.
template <class B>
class LinComb {
public:
    using Map = std::map<B, Scalar>;

    LinComb() = default;
    explicit LinComb(const B& b, Scalar c = Scalar(1)) {
        if (c != 0) terms_[b] = std::move(c);
    }

    static LinComb zero() { return LinComb(); }

    void add(const B& b, const Scalar& c) {
        if (c == 0) return;
        auto it = terms_.find(b);
        if (it == terms_.end()) {
            terms_.emplace(b, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    LinComb& operator+=(const LinComb& o) {
        for (const auto& [b, c] : o.terms_) add(b, c);
        return *this;
    }
    LinComb& operator-=(const LinComb& o) {
        for (const auto& [b, c] : o.terms_) add(b, -c);
        return *this;
    }
    LinComb& operator*=(const Scalar& s) {
        if (s == 0) { terms_.clear(); return *this; }
        for (auto& [b, c] : terms_) c *= s;
        return *this;
    }

    friend LinComb operator+(LinComb a, const LinComb& b) { a += b; return a; }
    friend LinComb operator-(LinComb a, const LinComb& b) { a -= b; return a; }
    friend LinComb operator*(const Scalar& s, LinComb a) { a *= s; return a; }
    friend LinComb operator-(LinComb a) { a *= Scalar(-1); return a; }

    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }
    const Map& terms() const { return terms_; }

    Scalar coeff(const B& b) const {
        auto it = terms_.find(b);
        return it == terms_.end() ? Scalar(0) : it->second;
    }

    bool operator==(const LinComb& o) const { return terms_ == o.terms_; }
    bool operator!=(const LinComb& o) const { return terms_ != o.terms_; }

    // Applies f : B -> LinComb<C> linearly.
    template <class F>
    auto map(F&& f) const {
        using Out = decltype(f(std::declval<const B&>()));
        Out out;
        for (const auto& [b, c] : terms_) {
            Out piece = f(b);
            piece *= c;
            out += piece;
        }
        return out;
    }

private:
    Map terms_;
};

} // namespace precy
