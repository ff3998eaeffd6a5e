#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dunkl/opalg.hpp"

namespace dunkl {

struct IdentityId {
    int number;          // 1-based catalog position
    std::string name;    // e.g. "com_nn"
    std::string anchor;  // quoted phrase locating the statement
    std::string statement;
};

/// The 22 identities, in catalog order.
const std::vector<IdentityId>& identity_catalog();
/// Lookup by name or by number ("7"); BadSpec if unknown.
const IdentityId& find_identity(const std::string& key);

struct Report {
    std::string identity;
    std::string system;
    std::string g_mode;      // "symbolic" or the rendered couplings
    std::string gamma_mode;  // "symbolic" or the rendered value
    bool pass = false;
    std::size_t checks = 0;  // operator residuals evaluated
    std::optional<std::string> residual;  // first nonzero residual, with its location
    double millis = 0;
};

/// Builds every residual of one identity over all free indices and reduces
/// it to normal form.  Stops at the first nonzero residual.
Report check_identity(const IdentityId& id, const Catalog& cat);

struct SuiteReport {
    std::vector<Report> reports;
    std::size_t passed = 0;
    std::size_t failed = 0;
};

/// Runs the selected identities (all if empty) with up to `jobs` threads;
/// results are in catalog order regardless of scheduling.
SuiteReport check_all(const Catalog& cat, const std::vector<std::string>& selection = {}, int jobs = 1);

/// Rendering of the parameter mode of a catalog.
std::string g_mode_of(const CoxeterSystem& sys);
std::string gamma_mode_of(const Poly& gamma);

}  // namespace dunkl
