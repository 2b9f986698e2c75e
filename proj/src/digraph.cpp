#include "digraph.hpp"

#include <algorithm>
#include <deque>

#include "ternary.hpp"

namespace tpq {

int p_digit_of(EdgeKind kind) {
    return (kind == EdgeKind::kStepUp || kind == EdgeKind::kForced1) ? 1 : 0;
}

int q_digit_of(EdgeKind kind) {
    return (kind == EdgeKind::kStepUp || kind == EdgeKind::kForced2) ? 1 : 0;
}

StepResult step(std::uint64_t m, std::uint64_t carry, std::optional<Choice> choice) {
    if (m % 3 != 1) throw std::domain_error("step requires m == 1 (mod 3)");
    switch (carry % 3) {
        case 1:
            if (choice) throw std::invalid_argument("no choice at carry == 1 (mod 3)");
            return {(carry - 1) / 3, 1, 0, EdgeKind::kForced1};
        case 2:
            if (choice) throw std::invalid_argument("no choice at carry == 2 (mod 3)");
            return {(carry + m) / 3, 0, 1, EdgeKind::kForced2};
        default:
            if (!choice) throw std::invalid_argument("a choice is required at carry == 0 (mod 3)");
            if (*choice == Choice::kStepUp) return {(carry + m - 1) / 3, 1, 1, EdgeKind::kStepUp};
            return {carry / 3, 0, 0, EdgeKind::kStepDown};
    }
}

CarryDigraph CarryDigraph::build(std::uint64_t m) {
    if (m % 3 != 1) throw std::domain_error("carry digraph requires m == 1 (mod 3)");
    CarryDigraph g;
    g.m_ = m;
    g.t_ = (m - 1) / 3;
    const std::uint64_t bound = m / 2;

    auto intern = [&](std::uint64_t v) -> std::size_t {
        auto [it, inserted] = g.index_.try_emplace(v, g.vertices_.size());
        if (inserted) {
            if (v > bound) throw VertexBoundViolation(m, v);
            g.vertices_.push_back(v);
            g.edges_.emplace_back();
        }
        return it->second;
    };

    // Forward closure from carry 0.
    intern(0);
    for (std::size_t head = 0; head < g.vertices_.size(); ++head) {
        std::uint64_t v = g.vertices_[head];
        std::vector<Edge> out;
        if (v % 3 == 0) {
            StepResult down = step(m, v, Choice::kStepDown);
            StepResult up = step(m, v, Choice::kStepUp);
            out.push_back({down.kind, down.carry});
            out.push_back({up.kind, up.carry});
            intern(down.carry);
            intern(up.carry);
        } else {
            StepResult forced = step(m, v);
            out.push_back({forced.kind, forced.carry});
            intern(forced.carry);
        }
        g.edges_[head] = std::move(out);
    }

    // vertices_/edges_ were built in discovery order; re-sort ascending.
    std::vector<std::size_t> order(g.vertices_.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return g.vertices_[a] < g.vertices_[b]; });
    std::vector<std::uint64_t> vs(order.size());
    std::vector<std::vector<Edge>> es(order.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        vs[i] = g.vertices_[order[i]];
        es[i] = std::move(g.edges_[order[i]]);
    }
    g.vertices_ = std::move(vs);
    g.edges_ = std::move(es);
    g.index_.clear();
    for (std::size_t i = 0; i < g.vertices_.size(); ++i) g.index_[g.vertices_[i]] = i;

    // Reverse BFS from 0: dist_to_zero_[i] = fewest edges from vertex i to
    // carry 0 (SIZE_MAX when 0 is unreachable). The coreachable set is
    // exactly where this is finite.
    std::vector<std::vector<std::size_t>> reverse(g.vertices_.size());
    for (std::size_t from = 0; from < g.vertices_.size(); ++from)
        for (const Edge& e : g.edges_[from]) reverse[g.index_.at(e.to)].push_back(from);
    g.dist_to_zero_.assign(g.vertices_.size(), SIZE_MAX);
    std::deque<std::size_t> queue;
    std::size_t zero_index = g.index_.at(0);
    g.dist_to_zero_[zero_index] = 0;
    queue.push_back(zero_index);
    while (!queue.empty()) {
        std::size_t i = queue.front();
        queue.pop_front();
        for (std::size_t from : reverse[i]) {
            if (g.dist_to_zero_[from] == SIZE_MAX) {
                g.dist_to_zero_[from] = g.dist_to_zero_[i] + 1;
                queue.push_back(from);
            }
        }
    }
    g.coreachable_count_ = static_cast<std::size_t>(
        std::count_if(g.dist_to_zero_.begin(), g.dist_to_zero_.end(),
                      [](std::size_t d) { return d != SIZE_MAX; }));

    // Shortest closed walk: forced first step 0 -> t, then best path back.
    std::size_t t_index = g.index_.at(g.t_);
    g.zero_reachable_from_t_ = g.dist_to_zero_[t_index] != SIZE_MAX;
    if (g.zero_reachable_from_t_) g.shortest_walk_length_ = g.dist_to_zero_[t_index] + 1;
    return g;
}

const std::vector<CarryDigraph::Edge>& CarryDigraph::edges_from(std::uint64_t v) const {
    auto it = index_.find(v);
    if (it == index_.end()) throw std::invalid_argument("vertex not in digraph");
    return edges_[it->second];
}

bool CarryDigraph::coreachable(std::uint64_t v) const {
    return dist_to_zero(v) != SIZE_MAX;
}

std::size_t CarryDigraph::dist_to_zero(std::uint64_t v) const {
    auto it = index_.find(v);
    if (it == index_.end()) throw std::invalid_argument("vertex not in digraph");
    return dist_to_zero_[it->second];
}

std::optional<std::size_t> CarryDigraph::shortest_walk_length() const {
    return shortest_walk_length_;
}

std::string CarryDigraph::to_dot(bool pruned) const {
    std::string out;
    out += "digraph Dm_" + std::to_string(m_) + " {\n";
    out += "  rankdir=LR;\n";
    out += "  node [shape=circle];\n";
    auto keep = [&](std::uint64_t v) { return !pruned || coreachable(v); };
    for (std::uint64_t v : vertices_)
        if (keep(v)) out += "  " + std::to_string(v) + ";\n";
    for (std::uint64_t v : vertices_) {
        if (!keep(v)) continue;
        for (const Edge& e : edges_from(v)) {
            if (!keep(e.to)) continue;
            out += "  " + std::to_string(v) + " -> " + std::to_string(e.to) + " [label=\"" +
                   std::to_string(p_digit_of(e.kind)) + "/" + std::to_string(q_digit_of(e.kind)) +
                   "\"];\n";
        }
    }
    out += "}\n";
    return out;
}

CarryDigraph build_digraph(const Nat& m) {
    return CarryDigraph::build(to_u64_checked(m, "m"));
}

bool is_representable(const Nat& m) {
    Normalized n = normalize(m);
    if (n.core % 3 == 2) return false;
    return CarryDigraph::build(to_u64_checked(n.core, "m")).zero_reachable_from_t();
}

bool ReachScratch::zero_reachable_from_t(std::uint64_t m) {
    if (m % 3 != 1) throw std::domain_error("reachability requires m == 1 (mod 3)");
    const std::uint64_t t = (m - 1) / 3;
    if (t == 0) return true;
    const std::uint64_t bound = m / 2;
    if (stamp_.size() < bound + 2) stamp_.resize(bound + 2, 0);
    if (++current_ == 0) {  // stamp wrapped; start over
        std::fill(stamp_.begin(), stamp_.end(), 0);
        current_ = 1;
    }

    queue_.clear();
    queue_.push_back(t);
    stamp_[t] = current_;
    std::size_t head = 0;
    while (head < queue_.size()) {
        std::uint64_t v = queue_[head++];
        std::uint64_t next[2];
        std::size_t n = 0;
        switch (v % 3) {
            case 0:
                next[n++] = v / 3;
                next[n++] = v / 3 + t;
                break;
            case 1:
                next[n++] = (v - 1) / 3;
                break;
            default:
                next[n++] = (v + m) / 3;
                break;
        }
        for (std::size_t i = 0; i < n; ++i) {
            std::uint64_t w = next[i];
            if (w == 0) return true;
            if (w > bound) throw VertexBoundViolation(m, w);
            if (stamp_[w] != current_) {
                stamp_[w] = current_;
                queue_.push_back(w);
            }
        }
    }
    return false;
}

}  // namespace tpq
