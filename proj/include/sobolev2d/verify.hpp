#ifndef SOBOLEV2D_VERIFY_HPP
#define SOBOLEV2D_VERIFY_HPP

#include <string>
#include <vector>

#include "sobolev2d/document.hpp"
#include "sobolev2d/rational.hpp"

namespace sobolev2d {

struct CheckResult {
    std::string name;
    bool passed = true;
    bool applicable = true;
    /// First failing witness, or a short note.
    std::string detail;
};

struct VerifyOptions {
    /// Degree cap for the checks that call the oracle.
    int oracle_max_degree = 6;
    /// Second lambda for the invariance checks.
    Rational lambda_alt{7};
};

struct VerifyReport {
    std::vector<CheckResult> checks;

    bool all_passed() const;
    const CheckResult* find(const std::string& name) const;
    /// One line per check: name, PASS/FAIL/SKIP and the detail.
    std::string table() const;
};

/// Re-derives the basis from the document metadata and checks the stored
/// polynomials and matrices against it and against the oracle.
VerifyReport verify_document(const BasisDocument& doc, const VerifyOptions& options = {});

}  // namespace sobolev2d

#endif  // SOBOLEV2D_VERIFY_HPP
