#pragma once

#include "heisenrig/rational.hpp"

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace heisenrig {

/// The m-th cyclotomic polynomial, integer coefficients low degree first,
/// computed by exact division of X^m - 1 by the product of the proper-divisor
/// cyclotomics. 1 <= m <= 4096.
std::vector<BigInt> cyclotomic_poly(std::uint64_t m);

namespace detail {
struct FieldData;
}

class CycloNum;

/// Q(zeta_m): residues mod Phi_m with exact rational coefficients.
/// Instances with the same conductor share state and interoperate.
class CycloField {
public:
    static CycloField make(std::uint64_t conductor);

    std::uint64_t conductor() const;
    std::size_t degree() const;  // phi(m) = deg Phi_m
    const std::vector<BigInt>& minimal_poly() const;

    CycloNum zero() const;
    CycloNum one() const;
    /// zeta_m^k in canonical form (k taken mod m).
    CycloNum root_of_unity(std::int64_t k) const;
    CycloNum from_rational(const Rational& q) const;

    bool operator==(const CycloField& other) const { return conductor() == other.conductor(); }

private:
    explicit CycloField(std::shared_ptr<const detail::FieldData> data) : data_(std::move(data)) {}
    std::shared_ptr<const detail::FieldData> data_;
    friend class CycloNum;
};

/// One element of Q(zeta_m): coefficient vector of length phi(m), fully
/// reduced mod Phi_m, rationals in lowest terms. Equality is coefficient-wise.
class CycloNum {
public:
    CycloNum(CycloField field, std::vector<Rational> coeffs);

    const CycloField& field() const { return field_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;

    friend CycloNum operator+(const CycloNum& a, const CycloNum& b);
    friend CycloNum operator-(const CycloNum& a, const CycloNum& b);
    friend CycloNum operator-(const CycloNum& a);
    friend CycloNum operator*(const CycloNum& a, const CycloNum& b);
    friend bool operator==(const CycloNum& a, const CycloNum& b);
    friend bool operator!=(const CycloNum& a, const CycloNum& b) { return !(a == b); }

    /// Multiplicative inverse via extended gcd with Phi_m. Throws on zero.
    CycloNum inv() const;
    /// Complex conjugation: zeta_m -> zeta_m^(m-1).
    CycloNum conj() const;

    /// Canonical display: coefficients "c0/d0,c1/d1,..." low degree first.
    std::string to_string() const;

private:
    CycloField field_;
    std::vector<Rational> coeffs_;
};

}  // namespace heisenrig
