#include "pst/oracle.hpp"

#include "pst/disjoint_set.hpp"

#include <stdexcept>
#include <vector>

namespace pst {

const char* to_string(OracleStatus status) {
    switch (status) {
    case OracleStatus::exists:
        return "exists";
    case OracleStatus::not_exists:
        return "not-exists";
    case OracleStatus::budget_exceeded:
        return "budget-exceeded";
    }
    return "unknown";
}

namespace {

class Search {
public:
    Search(const GeometricGraph& g, std::uint64_t budget)
        : g_(g), edges_(g.edges().begin(), g.edges().end()), budget_(budget), dsu_(g.size()),
          blocked_(edges_.size(), 0), crossers_(edges_.size()) {
        for (std::size_t a = 0; a < edges_.size(); ++a) {
            for (std::size_t b = a + 1; b < edges_.size(); ++b) {
                const Edge& x = edges_[a];
                const Edge& y = edges_[b];
                if (segments_properly_cross(g.point(x.u), g.point(x.v), g.point(y.u), g.point(y.v))) {
                    crossers_[a].push_back(b);
                    crossers_[b].push_back(a);
                }
            }
        }
    }

    OracleStatus run() {
        const std::size_t target = g_.size() <= 1 ? 0 : g_.size() - 1;
        try {
            return descend(0, target) ? OracleStatus::exists : OracleStatus::not_exists;
        } catch (const BudgetExhausted&) {
            return OracleStatus::budget_exceeded;
        }
    }

    [[nodiscard]] const std::vector<Edge>& chosen() const { return chosen_; }
    [[nodiscard]] std::uint64_t nodes() const { return nodes_; }

private:
    struct BudgetExhausted {};

    [[nodiscard]] bool usable(std::size_t e) const {
        return blocked_[e] == 0 && dsu_.find(edges_[e].u) != dsu_.find(edges_[e].v);
    }

    // Can the taken edges plus all usable edges from `pos` on still span?
    [[nodiscard]] bool can_still_span(std::size_t pos, std::size_t missing) const {
        std::size_t usable_count = 0;
        for (std::size_t e = pos; e < edges_.size(); ++e) {
            usable_count += usable(e) ? 1 : 0;
        }
        if (usable_count < missing) {
            return false;
        }
        DisjointSet reach = dsu_;
        for (std::size_t e = pos; e < edges_.size() && reach.components() > 1; ++e) {
            if (blocked_[e] == 0) {
                reach.unite(edges_[e].u, edges_[e].v);
            }
        }
        return reach.components() == 1;
    }

    bool descend(std::size_t pos, std::size_t target) {
        if (++nodes_ > budget_) {
            throw BudgetExhausted{};
        }
        if (chosen_.size() == target) {
            return true;
        }
        while (pos < edges_.size() && !usable(pos)) {
            ++pos;
        }
        if (pos == edges_.size() || !can_still_span(pos, target - chosen_.size())) {
            return false;
        }

        const Edge e = edges_[pos];
        dsu_.unite(e.u, e.v);
        for (std::size_t c : crossers_[pos]) {
            ++blocked_[c];
        }
        chosen_.push_back(e);
        if (descend(pos + 1, target)) {
            return true;
        }
        chosen_.pop_back();
        for (std::size_t c : crossers_[pos]) {
            --blocked_[c];
        }
        dsu_.rollback();

        return descend(pos + 1, target);
    }

    const GeometricGraph& g_;
    std::vector<Edge> edges_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    DisjointSet dsu_;
    std::vector<int> blocked_;
    std::vector<std::vector<std::size_t>> crossers_;
    std::vector<Edge> chosen_;
};

}  // namespace

OracleResult has_plane_spanning_tree(const GeometricGraph& g, std::uint64_t budget) {
    Search search(g, budget);
    OracleResult result;
    result.status = search.run();
    result.nodes = search.nodes();
    if (result.status == OracleStatus::exists) {
        auto cert = certify_plane_spanning_tree(g, search.chosen());
        if (!cert) {
            throw std::logic_error("oracle produced an uncertifiable tree: " + cert.rejection().message);
        }
        result.witness = cert.tree();
    }
    return result;
}

}  // namespace pst
