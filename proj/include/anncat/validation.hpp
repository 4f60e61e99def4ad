#pragma once

#include <cstddef>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace anncat {

using Index = std::uint32_t;

/// Input is structurally malformed (wrong dimensions, out-of-range entries,
/// unparsable text). Distinct from a well-formed object failing an axiom.
class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// One violated law, with the first witnessing tuple and the total count.
struct Violation {
    std::string law;
    std::string message;
    std::vector<Index> witness;
    std::size_t count = 1;
};

struct ValidationReport {
    std::vector<Violation> violations;

    [[nodiscard]] bool ok() const { return violations.empty(); }
    [[nodiscard]] bool empty() const { return violations.empty(); }

    [[nodiscard]] const Violation* find(const std::string& law) const {
        for (const auto& v : violations)
            if (v.law == law) return &v;
        return nullptr;
    }

    // Record a failure; repeated failures of one law only bump the count.
    void record(const std::string& law, std::string message, std::vector<Index> witness) {
        for (auto& v : violations)
            if (v.law == law) {
                ++v.count;
                return;
            }
        violations.push_back(Violation{law, std::move(message), std::move(witness), 1});
    }

    [[nodiscard]] std::string to_string() const {
        std::ostringstream os;
        for (const auto& v : violations) {
            os << v.law << ": " << v.message << " (witness";
            for (auto w : v.witness) os << ' ' << w;
            os << "; " << v.count << " violation" << (v.count == 1 ? "" : "s") << ")\n";
        }
        return os.str();
    }
};

/// Thrown when constructing a validated object from data that fails its axioms.
class AxiomError : public std::runtime_error {
public:
    AxiomError(const std::string& what, ValidationReport report)
        : std::runtime_error(what + "\n" + report.to_string()), report_(std::move(report)) {}
    [[nodiscard]] const ValidationReport& report() const { return report_; }

private:
    ValidationReport report_;
};

}  // namespace anncat
