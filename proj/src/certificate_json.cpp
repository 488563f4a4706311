#include "nonisog/certificate_json.hpp"

#include "nonisog/rational.hpp"

#ifndef NONISOG_VERSION
#define NONISOG_VERSION "0.0.0"
#endif

namespace nonisog {

std::string library_version() { return NONISOG_VERSION; }

nlohmann::ordered_json coefficients_json(const Polynomial& p) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const Rational& c : p.coefficients()) arr.push_back(to_string(c));
  return arr;
}

nlohmann::ordered_json to_json(const Certificate& cert) {
  using nlohmann::ordered_json;
  ordered_json doc;
  doc["inputs"] = {{"f", coefficients_json(cert.f)}, {"h", coefficients_json(cert.h)}, {"n", std::to_string(cert.n)}};

  ordered_json params = ordered_json::object();
  if (cert.verdict.tag == VerdictTag::IsogenyImpliesCM) {
    params["cyclotomic_degree"] = std::to_string(cert.verdict.cyclotomic_degree);
  } else if (cert.verdict.tag == VerdictTag::Inconclusive) {
    params["reason"] = cert.verdict.reason;
  }
  doc["verdict"] = {{"tag", std::string(to_string(cert.verdict.tag))}, {"parameters", params}};

  ordered_json table = ordered_json::array();
  for (const CharPConstraint& c : cert.char_p_constraints) {
    ordered_json row;
    row["p"] = to_string(c.p);
    row["f_p"] = c.f_p ? ordered_json(to_string(*c.f_p)) : ordered_json(nullptr);
    row["allowed"] = c.allowed;
    table.push_back(std::move(row));
  }
  doc["char_p_constraints"] = std::move(table);

  ordered_json trace = ordered_json::array();
  for (const Hypothesis& h : cert.trace) {
    ordered_json row;
    row["name"] = h.name;
    row["citation"] = h.citation;
    row["status"] = std::string(to_string(h.status));
    row["detail"] = h.detail;
    trace.push_back(std::move(row));
  }
  doc["trace"] = std::move(trace);
  doc["version"] = library_version();
  return doc;
}

}  // namespace nonisog
