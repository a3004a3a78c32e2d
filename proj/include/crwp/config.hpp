#pragma once

#include <string>
#include <string_view>

#include "crwp/clifford.hpp"
#include "crwp/error.hpp"

namespace crwp {

/// Structure maps violate a gluing condition; `report` lists the failures.
class ValidationFailed : public InvalidInput {
public:
    explicit ValidationFailed(ValidationReport report)
        : InvalidInput("structure validation failed:\n" + report.to_string()), report_(std::move(report)) {}
    const ValidationReport& report() const noexcept { return report_; }

private:
    ValidationReport report_;
};

struct LoadOptions {
    bool validate = true;
    std::size_t bound = 5;
};

/// Line-oriented format:
///
///   [semilattice]
///   names A B
///   meet A : A B          one row per name, columns in `names` order
///   meet B : B B
///
///   [component A]
///   group free x y        or: group finite e a / identity e /
///                             table e : e a / table a : a e / generators a
///   size 2 3              |I| |Lambda|
///   row w ; w             one per lambda, |I| group words (default: all 1)
///   gen NAME i word l     optional explicit generators
///
///   [map A B]             A above B
///   image GEN | chi_i | h(1) ; ... ; h(n) | chi_lambda
///
/// `#` starts a comment, indices are 1-based and `1` is the group identity.
/// Components are normalized on load; explicit generators and map images
/// are read in the coordinates of the matrix as written.
CRSemigroup parse_config(std::string_view text, const LoadOptions& options = {});
CRSemigroup load_config(const std::string& path, const LoadOptions& options = {});

/// Normalized form accepted by parse_config; parsing it back gives an equal
/// semigroup.
std::string write_config(const CRSemigroup& s);

}  // namespace crwp
