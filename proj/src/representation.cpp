#include "representation.hpp"

#include <algorithm>
#include <set>

namespace tpq {

Representation::Representation(Nat m, TernaryString p, TernaryString q)
    : m_(std::move(m)), p_(std::move(p)), q_(std::move(q)) {
    if (p_.value() != m_ * q_.value())
        throw std::logic_error("representation fails p(3) == m * q(3) for m = " + to_decimal(m_) +
                               ", p = " + p_.msb_string() + ", q = " + q_.msb_string());
}

const Classification& Representation::classification() const {
    auto cached = std::atomic_load(&cached_);
    if (!cached) {
        auto computed = std::make_shared<const Classification>(
            classify_pair(NewmanPoly::from_ternary(p_), NewmanPoly::from_ternary(q_)));
        // Idempotent under races: every thread computes the same value.
        std::atomic_store(&cached_, std::shared_ptr<const Classification>(computed));
        cached = computed;
    }
    return *cached;
}

nlohmann::ordered_json Representation::to_json() const {
    nlohmann::ordered_json j;
    j["m"] = to_decimal(m_);
    j["p_ternary"] = p_.msb_string();
    j["q_ternary"] = q_.msb_string();
    j["p"] = to_decimal(p_value());
    j["q"] = to_decimal(q_value());
    const Classification& cls = classification();
    j["class"] = cls.is_universal() ? "universal" : "local";
    if (cls.is_universal())
        j["quotient"] = cls.quotient().text();
    else
        j["quotient"] = nullptr;
    return j;
}

Representation rep_from_walk(const Walk& w) {
    if (w.edges.empty()) throw std::invalid_argument("empty walk");
    if (w.edges.front() != EdgeKind::kStepUp)
        throw std::invalid_argument("walk must begin with a step up from carry 0");

    std::vector<std::uint8_t> p_digits, q_digits;
    p_digits.reserve(w.edges.size());
    q_digits.reserve(w.edges.size());
    std::uint64_t carry = 0;
    for (EdgeKind kind : w.edges) {
        StepResult r;
        if (carry % 3 == 0) {
            if (kind != EdgeKind::kStepUp && kind != EdgeKind::kStepDown)
                throw std::invalid_argument("walk edge kind inconsistent with carry residue");
            r = step(w.m, carry,
                     kind == EdgeKind::kStepUp ? Choice::kStepUp : Choice::kStepDown);
        } else {
            r = step(w.m, carry);
            if (r.kind != kind)
                throw std::invalid_argument("walk edge kind inconsistent with carry residue");
        }
        p_digits.push_back(static_cast<std::uint8_t>(r.p_digit));
        q_digits.push_back(static_cast<std::uint8_t>(r.q_digit));
        carry = r.carry;
    }
    if (carry != 0) throw std::invalid_argument("walk does not return to carry 0");
    return Representation(Nat(w.m), TernaryString::from_digits_lsb_trimmed(std::move(p_digits)),
                          TernaryString::from_digits_lsb_trimmed(std::move(q_digits)));
}

namespace {

// DFS over the coreachable part of the digraph. Emits every indecomposable
// walk of at most max_len edges; the `dist_to_zero` bound prunes all branches
// that cannot return in time, and exploring StepDown before StepUp makes the
// discovery order lexicographic at choice points within a given length.
class WalkEnumerator {
public:
    WalkEnumerator(const CarryDigraph& g, int max_len,
                   const std::function<bool(const Walk&)>& emit)
        : g_(g), max_len_(max_len), emit_(emit) {}

    bool run() {
        if (max_len_ < 1 || !g_.zero_reachable_from_t()) return true;
        walk_.m = g_.m();
        walk_.edges.push_back(EdgeKind::kStepUp);
        if (g_.t() == 0) return emit_(walk_);  // m = 1: the one-edge walk 0 -> 0
        return descend(g_.t());
    }

private:
    bool descend(std::uint64_t v) {
        for (const CarryDigraph::Edge& e : g_.edges_from(v)) {
            std::uint64_t w = e.to;
            std::size_t len = walk_.edges.size();
            if (w == 0) {
                if (len + 1 <= static_cast<std::size_t>(max_len_)) {
                    walk_.edges.push_back(e.kind);
                    bool keep_going = emit_(walk_);
                    walk_.edges.pop_back();
                    if (!keep_going) return false;
                }
                continue;
            }
            std::size_t best_return = g_.dist_to_zero(w);
            if (best_return == SIZE_MAX) continue;
            if (len + 1 + best_return > static_cast<std::size_t>(max_len_)) continue;
            walk_.edges.push_back(e.kind);
            bool keep_going = descend(w);
            walk_.edges.pop_back();
            if (!keep_going) return false;
        }
        return true;
    }

    const CarryDigraph& g_;
    int max_len_;
    const std::function<bool(const Walk&)>& emit_;
    Walk walk_;
};

}  // namespace

void for_each_indecomposable(const Nat& m, int max_len,
                             const std::function<bool(const Representation&)>& visit) {
    if (m % 3 != 1) throw std::domain_error("enumeration requires m == 1 (mod 3)");
    CarryDigraph g = build_digraph(m);

    // Collect in DFS discovery order, then a stable sort by length yields the
    // (length, StepDown-before-StepUp) order.
    std::vector<Walk> walks;
    WalkEnumerator(g, max_len, [&](const Walk& w) {
        if (walks.size() >= kEnumerationGuard)
            throw std::domain_error("walk count exceeds the resource guard of " +
                                    std::to_string(kEnumerationGuard));
        walks.push_back(w);
        return true;
    }).run();
    std::stable_sort(walks.begin(), walks.end(),
                     [](const Walk& a, const Walk& b) { return a.edges.size() < b.edges.size(); });

    std::set<std::pair<std::string, std::string>> seen;
    for (const Walk& w : walks) {
        Representation rep = rep_from_walk(w);
        if (!seen.emplace(rep.p().msb_string(), rep.q().msb_string()).second) continue;
        if (!visit(rep)) return;
    }
}

std::vector<Representation> enumerate_indecomposable(const Nat& m, int max_len) {
    std::vector<Representation> out;
    for_each_indecomposable(m, max_len, [&](const Representation& r) {
        out.push_back(r);
        return true;
    });
    return out;
}

Representation compose_decomposable(const std::vector<Representation>& parts,
                                    const std::vector<int>& zero_loops) {
    if (parts.empty()) throw std::invalid_argument("composition needs at least one part");
    if (zero_loops.size() > parts.size())
        throw std::invalid_argument("more zero-loop entries than parts");
    for (int z : zero_loops)
        if (z < 0) throw std::invalid_argument("zero-loop counts must be >= 0");
    const Nat& m = parts.front().m();
    for (const Representation& r : parts)
        if (r.m() != m) throw std::invalid_argument("composition parts must share the same m");

    std::size_t total = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        total += parts[i].length();
        if (i < zero_loops.size()) total += static_cast<std::size_t>(zero_loops[i]);
    }
    std::vector<std::uint8_t> p_digits(total, 0), q_digits(total, 0);
    std::size_t offset = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        const auto& pd = parts[i].p().digits();
        const auto& qd = parts[i].q().digits();
        std::copy(pd.begin(), pd.end(), p_digits.begin() + static_cast<std::ptrdiff_t>(offset));
        std::copy(qd.begin(), qd.end(), q_digits.begin() + static_cast<std::ptrdiff_t>(offset));
        offset += parts[i].length();
        if (i < zero_loops.size()) offset += static_cast<std::size_t>(zero_loops[i]);
    }
    return Representation(m, TernaryString::from_digits_lsb_trimmed(std::move(p_digits)),
                          TernaryString::from_digits_lsb_trimmed(std::move(q_digits)));
}

std::vector<Representation> all_reps_up_to_len(const Nat& m, int max_total_len) {
    std::vector<Representation> parts = enumerate_indecomposable(m, max_total_len);
    std::vector<Representation> out;
    std::set<std::pair<std::string, std::string>> seen;
    auto add = [&](const Representation& r) {
        if (out.size() >= kEnumerationGuard)
            throw std::domain_error("representation count exceeds the resource guard of " +
                                    std::to_string(kEnumerationGuard));
        if (seen.emplace(r.p().msb_string(), r.q().msb_string()).second) out.push_back(r);
    };
    for (const Representation& r : parts) add(r);

    // Grow compositions left to right. `used` counts the digits consumed so
    // far (parts plus interior padding); gaps[i] is the padding after part i.
    std::vector<Representation> sequence;
    std::vector<int> gaps;
    std::function<void(std::size_t)> grow = [&](std::size_t used) {
        if (sequence.size() >= 2) add(compose_decomposable(sequence, gaps));
        for (const Representation& next : parts) {
            for (int gap = 0; used + static_cast<std::size_t>(gap) + next.length() <=
                              static_cast<std::size_t>(max_total_len);
                 ++gap) {
                gaps.push_back(gap);
                sequence.push_back(next);
                grow(used + static_cast<std::size_t>(gap) + next.length());
                sequence.pop_back();
                gaps.pop_back();
            }
        }
    };
    for (const Representation& first : parts) {
        if (first.length() > static_cast<std::size_t>(max_total_len)) continue;
        sequence.push_back(first);
        grow(first.length());
        sequence.pop_back();
    }

    std::sort(out.begin(), out.end(), [](const Representation& a, const Representation& b) {
        if (a.length() != b.length()) return a.length() < b.length();
        if (a.p() != b.p()) return a.p() < b.p();
        return a.q() < b.q();
    });
    return out;
}

Representation extend_same_integer(const Representation& rep, const NewmanPoly& f) {
    NewmanPoly p = NewmanPoly::from_ternary(rep.p());
    NewmanPoly q = NewmanPoly::from_ternary(rep.q());
    auto fp = multiply_newman(f, p);
    if (!fp) throw std::domain_error("f*p leaves the 0,1-polynomials (shared exponent gap)");
    auto fq = multiply_newman(f, q);
    if (!fq) throw std::domain_error("f*q leaves the 0,1-polynomials (shared exponent gap)");
    return Representation(rep.m(), fp->to_ternary(), fq->to_ternary());
}

Representation scale_to_new_integer(const Representation& rep, const NewmanPoly& f) {
    NewmanPoly p = NewmanPoly::from_ternary(rep.p());
    auto fp = multiply_newman(f, p);
    if (!fp) throw std::domain_error("f*p leaves the 0,1-polynomials (shared exponent gap)");
    return Representation(f.value_at3() * rep.m(), fp->to_ternary(), rep.q());
}

}  // namespace tpq
