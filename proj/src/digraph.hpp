#ifndef TPQ_DIGRAPH_HPP
#define TPQ_DIGRAPH_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "nat.hpp"

namespace tpq {

/// The four edge kinds of the carry digraph D_m (m = 3t+1). A carry value
/// 3k offers a choice; other residues force the move.
///   kStepDown : 3k   -> k       records p=0, q=0
///   kStepUp   : 3k   -> k+t     records p=1, q=1
///   kForced1  : 3k+1 -> k       records p=1, q=0
///   kForced2  : 3k+2 -> k+t+1   records p=0, q=1
enum class EdgeKind : std::uint8_t { kStepDown, kStepUp, kForced1, kForced2 };

int p_digit_of(EdgeKind kind);
int q_digit_of(EdgeKind kind);

enum class Choice : std::uint8_t { kStepDown, kStepUp };

struct StepResult {
    std::uint64_t carry;
    int p_digit;
    int q_digit;
    EdgeKind kind;
};

/// One step of the digit-recording algorithm. `choice` is required exactly
/// when carry == 0 (mod 3). Requires m == 1 (mod 3).
StepResult step(std::uint64_t m, std::uint64_t carry, std::optional<Choice> choice = {});

/// Thrown when a carry value escapes {0,...,floor(m/2)}; the bound is
/// asserted rather than assumed, so a violation surfaces loudly.
struct VertexBoundViolation : std::logic_error {
    VertexBoundViolation(std::uint64_t m, std::uint64_t carry)
        : std::logic_error("carry " + std::to_string(carry) + " exceeds floor(m/2) for m = " +
                           std::to_string(m)) {}
};

/// The carry digraph D_m: forward closure of the step function from carry 0,
/// with the subset of vertices from which 0 is reachable marked. Immutable
/// after build.
class CarryDigraph {
public:
    struct Edge {
        EdgeKind kind;
        std::uint64_t to;
    };

    static CarryDigraph build(std::uint64_t m);  // requires m == 1 (mod 3)

    std::uint64_t m() const { return m_; }
    std::uint64_t t() const { return t_; }

    const std::vector<std::uint64_t>& vertices() const { return vertices_; }  // ascending
    // Out-edges in canonical order (StepDown before StepUp at choice vertices).
    const std::vector<Edge>& edges_from(std::uint64_t v) const;
    bool contains(std::uint64_t v) const { return index_.count(v) != 0; }
    bool coreachable(std::uint64_t v) const;
    // Fewest edges from v to carry 0; SIZE_MAX when unreachable.
    std::size_t dist_to_zero(std::uint64_t v) const;
    std::size_t coreachable_count() const { return coreachable_count_; }

    bool zero_reachable_from_t() const { return zero_reachable_from_t_; }
    // Edge count of the shortest closed walk 0 -> ... -> 0 (first edge kStepUp).
    std::optional<std::size_t> shortest_walk_length() const;

    std::string to_dot(bool pruned) const;

private:
    CarryDigraph() = default;
    std::uint64_t m_ = 0;
    std::uint64_t t_ = 0;
    std::vector<std::uint64_t> vertices_;
    std::unordered_map<std::uint64_t, std::size_t> index_;
    std::vector<std::vector<Edge>> edges_;
    std::vector<std::size_t> dist_to_zero_;
    std::size_t coreachable_count_ = 0;
    bool zero_reachable_from_t_ = false;
    std::optional<std::size_t> shortest_walk_length_;
};

CarryDigraph build_digraph(const Nat& m);

/// True iff m (>= 1) is a quotient of sums of distinct powers of 3. Strips
/// factors of 3, rejects residue 2, then decides reachability of carry 0
/// from t in the carry digraph.
bool is_representable(const Nat& m);

/// Scanner-grade reachability check for m == 1 (mod 3): is carry 0 reachable
/// from t? Scratch state is reused across calls.
class ReachScratch {
public:
    bool zero_reachable_from_t(std::uint64_t m);

private:
    std::vector<std::uint32_t> stamp_;
    std::vector<std::uint64_t> queue_;
    std::uint32_t current_ = 0;
};

}  // namespace tpq

#endif
