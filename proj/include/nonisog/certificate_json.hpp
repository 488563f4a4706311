#pragma once

#include <string>

#include "json.hpp"
#include "nonisog/certifier.hpp"

namespace nonisog {

/// Canonical document: inputs {f, h, n}, verdict {tag, parameters},
/// char_p_constraints [{p, f_p, allowed}], trace [{name, citation, status,
/// detail}], version. Exact numbers are strings; rationals are "num/den".
nlohmann::ordered_json to_json(const Certificate& cert);

/// Coefficients from the constant term up, as exact strings.
nlohmann::ordered_json coefficients_json(const Polynomial& p);

std::string library_version();

}  // namespace nonisog
