#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "ei/bigint.hpp"

namespace ei {

// Laurent polynomial over Z; zero coefficients are never stored.
class LaurentPoly {
  public:
    LaurentPoly() = default;

    static LaurentPoly monomial(std::int64_t exponent, const Int& coefficient) {
        LaurentPoly p;
        p.set(exponent, coefficient);
        return p;
    }
    static LaurentPoly constant(const Int& c) { return monomial(0, c); }

    Int coeff(std::int64_t k) const {
        auto it = coeffs_.find(k);
        return it == coeffs_.end() ? Int(0) : it->second;
    }

    void set(std::int64_t k, const Int& c) {
        if (c == 0)
            coeffs_.erase(k);
        else
            coeffs_[k] = c;
    }

    void add_term(std::int64_t k, const Int& c) { set(k, coeff(k) + c); }

    LaurentPoly operator+(const LaurentPoly& o) const {
        LaurentPoly out = *this;
        for (const auto& [k, c] : o.coeffs_) out.add_term(k, c);
        return out;
    }
    LaurentPoly operator-(const LaurentPoly& o) const {
        LaurentPoly out = *this;
        for (const auto& [k, c] : o.coeffs_) out.add_term(k, -c);
        return out;
    }
    LaurentPoly scaled(const Int& s) const {
        LaurentPoly out;
        if (s == 0) return out;
        for (const auto& [k, c] : coeffs_) out.coeffs_[k] = c * s;
        return out;
    }

    bool operator==(const LaurentPoly& o) const { return coeffs_ == o.coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    Int coefficient_sum() const {
        Int s = 0;
        for (const auto& [k, c] : coeffs_) s += c;
        return s;
    }
    bool all_coeffs_nonnegative() const {
        for (const auto& [k, c] : coeffs_)
            if (c < 0) return false;
        return true;
    }

    const std::map<std::int64_t, Int>& terms() const { return coeffs_; }

    // e.g. "t^-1 + 3 + t" for exponents ascending
    std::string str() const;

  private:
    std::map<std::int64_t, Int> coeffs_;
};

// Hodge polynomial of a genus-g curve with all classes present: g*t^-1 + 2 + g*t.
inline LaurentPoly curve_hodge_poly(std::int64_t genus) {
    LaurentPoly p;
    p.set(-1, genus);
    p.set(0, 2);
    p.set(1, genus);
    return p;
}

inline Int laurent_coeff(const LaurentPoly& p, std::int64_t k) { return p.coeff(k); }

}  // namespace ei
