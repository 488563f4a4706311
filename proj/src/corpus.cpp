#include "nonisog/corpus.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "nonisog/parser.hpp"

namespace nonisog {

namespace {

std::string required_string(const nlohmann::json& obj, const char* key, std::size_t index) {
  auto it = obj.find(key);
  if (it == obj.end() || !it->is_string()) {
    throw CorpusError("case " + std::to_string(index) + ": missing string field '" + key + "'");
  }
  return it->get<std::string>();
}

std::optional<std::string> optional_string(const nlohmann::json& obj, const char* key, std::size_t index) {
  auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) return std::nullopt;
  if (!it->is_string()) throw CorpusError("case " + std::to_string(index) + ": field '" + key + "' must be a string");
  return it->get<std::string>();
}

}  // namespace

std::vector<CorpusCase> parse_corpus(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw CorpusError(std::string("corpus is not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("cases") || !doc["cases"].is_array()) {
    throw CorpusError("corpus must be an object with a 'cases' array");
  }
  std::vector<CorpusCase> out;
  std::size_t index = 0;
  for (const auto& item : doc["cases"]) {
    if (!item.is_object()) throw CorpusError("case " + std::to_string(index) + " is not an object");
    CorpusCase c;
    c.name = required_string(item, "name", index);
    c.f = required_string(item, "f", index);
    c.h = optional_string(item, "h", index);
    const std::string tag = required_string(item, "expected", index);
    const auto parsed = parse_verdict_tag(tag);
    if (!parsed) throw CorpusError("case '" + c.name + "': unknown verdict tag '" + tag + "'");
    c.expected = *parsed;
    c.expected_reason = optional_string(item, "expected_reason", index);
    c.citation = required_string(item, "citation", index);
    try {
      parse_polynomial(c.f);
      if (c.h) parse_polynomial(*c.h);
    } catch (const ParseError& e) {
      throw CorpusError("case '" + c.name + "': " + e.what());
    }
    out.push_back(std::move(c));
    ++index;
  }
  return out;
}

std::vector<CorpusCase> load_corpus(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw CorpusError("cannot open corpus file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_corpus(buf.str());
}

std::vector<CorpusOutcome> run_corpus(const std::vector<CorpusCase>& cases) {
  std::vector<CorpusOutcome> out(cases.size());
  const long count = static_cast<long>(cases.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (long i = 0; i < count; ++i) {
    const CorpusCase& c = cases[static_cast<std::size_t>(i)];
    CorpusOutcome& o = out[static_cast<std::size_t>(i)];
    o.source = &c;
    try {
      const Polynomial f = parse_polynomial(c.f);
      const Polynomial h = c.h ? parse_polynomial(*c.h) : f;
      o.certificate = certify(f, h);
    } catch (const std::exception& e) {
      o.passed = false;
      o.message = e.what();
      continue;
    }
    const Verdict& v = o.certificate.verdict;
    o.passed = v.tag == c.expected;
    if (o.passed && c.expected_reason && v.reason.find(*c.expected_reason) == std::string::npos) {
      o.passed = false;
      o.message = "reason '" + v.reason + "' lacks '" + *c.expected_reason + "'";
    }
    if (!o.passed && o.message.empty()) {
      o.message = "expected " + std::string(to_string(c.expected)) + ", got " + std::string(to_string(v.tag));
      if (v.tag == VerdictTag::Inconclusive) o.message += " (" + v.reason + ")";
    }
  }
  return out;
}

}  // namespace nonisog
