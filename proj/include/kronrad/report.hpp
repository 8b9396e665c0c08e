#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace kronrad {

struct BoundEntry {
    std::string name;
    double value = 0.0;
    std::string anchor; ///< stable identifier of the inequality family
};

/// A verified "lhs <= rhs" link with its measured slack (rhs - lhs).
struct BoundRelation {
    std::string lhs;
    std::string rhs;
    double slack = 0.0;
};

/// Named-bound ledger for one problem instance: each entry is a computed
/// quantity, each relation an inequality that was checked numerically.
class BoundReport {
public:
    explicit BoundReport(std::string instance = {}) : instance_(std::move(instance)) {}

    void add(std::string name, double value, std::string anchor = {}) {
        entries_.push_back({std::move(name), value, std::move(anchor)});
    }

    double value(const std::string& name) const {
        for (const auto& e : entries_)
            if (e.name == name) return e.value;
        throw std::invalid_argument("BoundReport: unknown entry '" + name + "'");
    }

    /// Record lhs <= rhs with measured slack.
    void link(const std::string& lhs, const std::string& rhs) {
        relations_.push_back({lhs, rhs, value(rhs) - value(lhs)});
    }

    double min_slack() const {
        double m = 0.0;
        bool first = true;
        for (const auto& r : relations_) {
            if (first || r.slack < m) m = r.slack;
            first = false;
        }
        return m;
    }

    bool ok(double tol = 1e-8) const {
        return std::all_of(relations_.begin(), relations_.end(),
                           [tol](const BoundRelation& r) { return r.slack >= -tol; });
    }

    const std::string& instance() const { return instance_; }
    const std::vector<BoundEntry>& entries() const { return entries_; }
    const std::vector<BoundRelation>& relations() const { return relations_; }

private:
    std::string instance_;
    std::vector<BoundEntry> entries_;
    std::vector<BoundRelation> relations_;
};

} // namespace kronrad
