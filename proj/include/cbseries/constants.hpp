#pragma once

#include <array>
#include <initializer_list>
#include <map>
#include <sstream>
#include <string>
#include <utility>

#include "cbseries/rational.hpp"

namespace cbseries {

/// The fixed nine-constant basis every closed form in the catalog lives on.
/// Declaration order is the canonical display order.
enum class ConstName {
    ONE,
    SQRT2,
    PI,
    PI_SQ,
    LN2,
    LN_1P_SQRT2,  // ln(1 + sqrt(2)) = arcsinh(1)
    PI_SQRT2,
    PI_LN2,
    PI_LN_1P_SQRT2,
};

inline constexpr std::array<ConstName, 9> kConstBasis = {
    ConstName::ONE,      ConstName::SQRT2,  ConstName::PI,
    ConstName::PI_SQ,    ConstName::LN2,    ConstName::LN_1P_SQRT2,
    ConstName::PI_SQRT2, ConstName::PI_LN2, ConstName::PI_LN_1P_SQRT2,
};

inline const char* const_name_str(ConstName c) {
    switch (c) {
        case ConstName::ONE: return "1";
        case ConstName::SQRT2: return "sqrt2";
        case ConstName::PI: return "pi";
        case ConstName::PI_SQ: return "pi^2";
        case ConstName::LN2: return "ln2";
        case ConstName::LN_1P_SQRT2: return "ln(1+sqrt2)";
        case ConstName::PI_SQRT2: return "pi*sqrt2";
        case ConstName::PI_LN2: return "pi*ln2";
        case ConstName::PI_LN_1P_SQRT2: return "pi*ln(1+sqrt2)";
    }
    return "?";
}

/// Exact Q-linear combination over the constant basis, kept in canonical
/// sparse form: zero coefficients are never stored. A vector space, not a
/// ring: there is no general product. The few structural multiplications
/// the catalog needs (by sqrt2, by 1/pi) are provided as explicit maps.
class ConstVec {
public:
    ConstVec() = default;
    ConstVec(std::initializer_list<std::pair<ConstName, Rational>> init) {
        for (const auto& [name, coeff] : init) add_coeff(name, coeff);
    }

    static ConstVec from(const Rational& q) { return ConstVec{{ConstName::ONE, q}}; }
    static ConstVec from(ConstName c, const Rational& q) { return ConstVec{{c, q}}; }

    bool is_zero() const { return coeffs_.empty(); }

    /// True when the value lies in Q (span of ONE alone).
    bool is_rational() const {
        return coeffs_.empty() || (coeffs_.size() == 1 && coeffs_.begin()->first == ConstName::ONE);
    }

    Rational coeff(ConstName c) const {
        auto it = coeffs_.find(c);
        return it == coeffs_.end() ? Rational(0) : it->second;
    }

    const std::map<ConstName, Rational>& coeffs() const { return coeffs_; }

    ConstVec& operator+=(const ConstVec& o) {
        for (const auto& [name, coeff] : o.coeffs_) add_coeff(name, coeff);
        return *this;
    }
    ConstVec& operator-=(const ConstVec& o) {
        for (const auto& [name, coeff] : o.coeffs_) add_coeff(name, -coeff);
        return *this;
    }

    friend ConstVec operator+(ConstVec a, const ConstVec& b) { return a += b; }
    friend ConstVec operator-(ConstVec a, const ConstVec& b) { return a -= b; }
    friend ConstVec operator-(const ConstVec& a) { return Rational(-1) * a; }

    friend ConstVec operator*(const Rational& q, const ConstVec& v) {
        ConstVec r;
        if (q.is_zero()) return r;
        for (const auto& [name, coeff] : v.coeffs_) r.coeffs_.emplace(name, q * coeff);
        return r;
    }

    friend bool operator==(const ConstVec& a, const ConstVec& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const ConstVec& a, const ConstVec& b) { return !(a == b); }

    /// Multiplication by sqrt2, defined on span{1, sqrt2} only
    /// (1 -> sqrt2, sqrt2 -> 2).
    ConstVec times_sqrt2() const {
        ConstVec r;
        for (const auto& [name, coeff] : coeffs_) {
            switch (name) {
                case ConstName::ONE: r.add_coeff(ConstName::SQRT2, coeff); break;
                case ConstName::SQRT2: r.add_coeff(ConstName::ONE, Rational(2) * coeff); break;
                default:
                    throw DomainError("times_sqrt2 leaves the basis (component " +
                                      std::string(const_name_str(name)) + ")");
            }
        }
        return r;
    }

    /// Division by pi, defined on the pi-multiple subspace
    /// (pi -> 1, pi^2 -> pi, pi*sqrt2 -> sqrt2, pi*ln2 -> ln2,
    /// pi*ln(1+sqrt2) -> ln(1+sqrt2)).
    ConstVec divided_by_pi() const {
        ConstVec r;
        for (const auto& [name, coeff] : coeffs_) {
            ConstName mapped;
            switch (name) {
                case ConstName::PI: mapped = ConstName::ONE; break;
                case ConstName::PI_SQ: mapped = ConstName::PI; break;
                case ConstName::PI_SQRT2: mapped = ConstName::SQRT2; break;
                case ConstName::PI_LN2: mapped = ConstName::LN2; break;
                case ConstName::PI_LN_1P_SQRT2: mapped = ConstName::LN_1P_SQRT2; break;
                default:
                    throw DomainError("divided_by_pi leaves the basis (component " +
                                      std::string(const_name_str(name)) + ")");
            }
            r.add_coeff(mapped, coeff);
        }
        return r;
    }

    /// Canonical text form: integer coefficients over a common denominator,
    /// basis order, e.g. "(64 - 43*sqrt2)/60" or "2 - sqrt2" or "0".
    std::string str() const {
        if (coeffs_.empty()) return "0";
        Integer lcm_den(1);
        for (const auto& [name, coeff] : coeffs_) {
            Integer l;
            mpz_lcm(l.get_mpz_t(), lcm_den.get_mpz_t(), coeff.den().get_mpz_t());
            lcm_den = l;
        }
        std::ostringstream body;
        bool first = true;
        for (ConstName c : kConstBasis) {
            auto it = coeffs_.find(c);
            if (it == coeffs_.end()) continue;
            Integer scaled = it->second.num() * (lcm_den / it->second.den());
            bool neg = scaled < 0;
            Integer mag = ::abs(scaled);
            if (first) {
                if (neg) body << "-";
                first = false;
            } else {
                body << (neg ? " - " : " + ");
            }
            if (c == ConstName::ONE) {
                body << mag.get_str();
            } else if (mag == 1) {
                body << const_name_str(c);
            } else {
                body << mag.get_str() << "*" << const_name_str(c);
            }
        }
        if (lcm_den == 1) return body.str();
        if (coeffs_.size() == 1) return body.str() + "/" + lcm_den.get_str();
        return "(" + body.str() + ")/" + lcm_den.get_str();
    }

private:
    void add_coeff(ConstName c, const Rational& q) {
        if (q.is_zero()) return;
        auto [it, inserted] = coeffs_.emplace(c, q);
        if (!inserted) {
            it->second += q;
            if (it->second.is_zero()) coeffs_.erase(it);
        }
    }

    std::map<ConstName, Rational> coeffs_;
};

}  // namespace cbseries
