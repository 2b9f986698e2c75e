#ifndef TPQ_REPRESENTATION_HPP
#define TPQ_REPRESENTATION_HPP

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "digraph.hpp"
#include "newman.hpp"
#include "ternary.hpp"

namespace tpq {

/// Closed walk of the carry digraph for m, starting and ending at carry 0.
/// The first edge is kStepUp; an indecomposable walk touches 0 only at its
/// endpoints.
struct Walk {
    std::uint64_t m;
    std::vector<EdgeKind> edges;
};

/// A verified pair p/q of sums of distinct powers of 3 with p(3) = m * q(3).
/// Classification (universal/local) is computed on first use and cached.
class Representation {
public:
    Representation(Nat m, TernaryString p, TernaryString q);

    const Nat& m() const { return m_; }
    const TernaryString& p() const { return p_; }
    const TernaryString& q() const { return q_; }
    Nat p_value() const { return p_.value(); }
    Nat q_value() const { return q_.value(); }
    // Walk length of the underlying closed walk = digit positions of p.
    std::size_t length() const { return p_.length(); }

    const Classification& classification() const;
    bool is_universal() const { return classification().is_universal(); }

    nlohmann::ordered_json to_json() const;
    std::string json_line() const { return to_json().dump(); }

    bool operator==(const Representation& o) const {
        return m_ == o.m_ && p_ == o.p_ && q_ == o.q_;
    }

private:
    Nat m_;
    TernaryString p_;
    TernaryString q_;
    mutable std::shared_ptr<const Classification> cached_;
};

Representation rep_from_walk(const Walk& w);

/// Enumeration stops with an error beyond this many results; walk counts
/// grow exponentially in the length bound.
inline constexpr std::size_t kEnumerationGuard = std::size_t(1) << 21;

/// All indecomposable walks of at most max_len edges, ordered by length and
/// then by taking StepDown before StepUp at each choice point.
std::vector<Representation> enumerate_indecomposable(const Nat& m, int max_len);

/// Streaming form of the above, in the same order; return false to stop.
void for_each_indecomposable(const Nat& m, int max_len,
                             const std::function<bool(const Representation&)>& visit);

/// Digit-level concatenation of representations of the same m, inserting
/// zero_loops[i] self-loops at carry 0 after part i. parts[0] occupies the
/// low-order digits.
Representation compose_decomposable(const std::vector<Representation>& parts,
                                    const std::vector<int>& zero_loops);

/// All representations (indecomposable and compositions, with interior zero
/// padding) whose p occupies at most max_total_len digits. Deduplicated and
/// sorted by (length, p, q).
std::vector<Representation> all_reps_up_to_len(const Nat& m, int max_total_len);

/// m = (fp)(3)/(fq)(3): a new (decomposable when f has >= 2 terms)
/// representation of the same integer. Both products must stay Newman.
Representation extend_same_integer(const Representation& rep, const NewmanPoly& f);

/// f(3)*m = (fp)(3)/q(3): a representation of the scaled integer. Requires
/// disjoint gap sets of f and p.
Representation scale_to_new_integer(const Representation& rep, const NewmanPoly& f);

}  // namespace tpq

#endif
