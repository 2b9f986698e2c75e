#ifndef TPQ_NEWMAN_HPP
#define TPQ_NEWMAN_HPP

#include <optional>
#include <set>
#include <vector>

#include "intpoly.hpp"
#include "ternary.hpp"

namespace tpq {

/// 0,1-polynomial with constant term 1, stored sparsely as its strictly
/// increasing exponent list (which therefore starts with 0).
class NewmanPoly {
public:
    static NewmanPoly one() { return NewmanPoly({0}); }
    static NewmanPoly from_exponents(std::vector<int> exponents);
    static NewmanPoly from_ternary(const TernaryString& t);

    const std::vector<int>& exponents() const { return exponents_; }
    int degree() const { return exponents_.back(); }
    std::size_t term_count() const { return exponents_.size(); }

    TernaryString to_ternary() const;
    IntPoly to_intpoly() const;
    Nat value_at3() const;

    bool operator==(const NewmanPoly& o) const { return exponents_ == o.exponents_; }
    bool operator!=(const NewmanPoly& o) const { return exponents_ != o.exponents_; }

private:
    explicit NewmanPoly(std::vector<int> exponents) : exponents_(std::move(exponents)) {}
    std::vector<int> exponents_;
};

NewmanPoly newman_from_ternary(const TernaryString& t);
TernaryString ternary_from_newman(const NewmanPoly& p);

/// All positive pairwise differences of the exponents of p.
using GapSet = std::set<int>;
GapSet gap_set(const NewmanPoly& p);

/// True iff s*t is again a 0,1-polynomial, decided by gap-set disjointness.
bool product_is_newman(const NewmanPoly& s, const NewmanPoly& t);

/// The product when it stays a 0,1-polynomial; empty otherwise.
std::optional<NewmanPoly> multiply_newman(const NewmanPoly& s, const NewmanPoly& t);

/// Universal iff q divides p exactly over the integers; then quotient() holds
/// the polynomial quotient. Local otherwise.
class Classification {
public:
    static Classification universal(IntPoly quotient) { return Classification(std::move(quotient)); }
    static Classification local() { return Classification(); }
    bool is_universal() const { return quotient_.has_value(); }
    const IntPoly& quotient() const { return *quotient_; }
    bool operator==(const Classification& o) const { return quotient_ == o.quotient_; }

private:
    Classification() = default;
    explicit Classification(IntPoly q) : quotient_(std::move(q)) {}
    std::optional<IntPoly> quotient_;
};

Classification classify_pair(const NewmanPoly& p, const NewmanPoly& q);

}  // namespace tpq

#endif
