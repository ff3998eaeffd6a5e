#pragma once

#include <string>

#include "dunkl/identities.hpp"
#include "dunkl/rgw.hpp"
#include "dunkl/superint.hpp"

namespace dunkl {

/// JSON renderings shared by the CLI and the acceptance run.  Key order is
/// fixed and "millis" is null unless timings are requested, so equal inputs
/// give byte-identical documents.
std::string suite_json(const SuiteReport& suite, bool timings);
std::string certificate_json(const superint::IntegralCertificate& cert);
std::string rewrite_json(const Algebra& alg, const std::string& input, const Element& normal, const RewriteStats& stats);

}  // namespace dunkl
