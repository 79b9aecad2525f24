#ifndef LEIBRACK_REPORT_HPP
#define LEIBRACK_REPORT_HPP

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

namespace leibrack {

struct Violation {
    std::string location;
    double residual = 0.0;
};

// Outcome of checking one identity over a set of cases. Exact checks record
// a violation for any nonzero residual; floating checks compare against a
// tolerance. Only the first few violations are kept verbatim.
struct ViolationReport {
    static constexpr std::size_t kMaxStored = 16;

    ViolationReport() = default;
    explicit ViolationReport(std::string name) : check(std::move(name)) {}

    std::string check;
    std::size_t cases = 0;
    std::size_t violation_count = 0;
    double max_residual = 0.0;
    std::vector<Violation> violations;

    bool ok() const { return violation_count == 0; }

    void record(std::string location, double residual, bool violated) {
        ++cases;
        max_residual = std::max(max_residual, residual);
        if (!violated) return;
        ++violation_count;
        if (violations.size() < kMaxStored) violations.push_back({std::move(location), residual});
    }

    void merge(const ViolationReport& other) {
        cases += other.cases;
        violation_count += other.violation_count;
        max_residual = std::max(max_residual, other.max_residual);
        for (const auto& v : other.violations)
            if (violations.size() < kMaxStored) violations.push_back(v);
    }
};

}  // namespace leibrack

#endif
