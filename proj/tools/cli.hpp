#pragma once

#include <ostream>
#include <string>

#include <json.hpp>

#include "orderpoly/localized.hpp"
#include "orderpoly/poset.hpp"
#include "orderpoly/qsym.hpp"
#include "orderpoly/unipoly.hpp"

namespace orderpoly::cli {

enum ExitCode : int {
    kOk = 0,
    kUsage = 1,
    kParse = 2,
    kInvariantViolation = 3,
};

/// Runs the orderpoly command line. Never throws; returns an ExitCode.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

// JSON encodings shared by every command. Rationals are "num/den" strings
// and polynomial coefficients are listed by increasing power.
nlohmann::json to_json(const UniPoly& p);
nlohmann::json to_json(const LocalizedRatio& r);
nlohmann::json to_json(const QSym& f);
nlohmann::json poset_json(const LabeledPoset& lp);

UniPoly polynomial_from_json(const nlohmann::json& j);

} // namespace orderpoly::cli
