#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nonisog/certifier.hpp"
#include "nonisog/errors.hpp"

namespace nonisog {

class CorpusError : public InvalidInput {
 public:
  explicit CorpusError(const std::string& what) : InvalidInput(what) {}
};

/// One regression pair. Without h the case certifies (f, f), which must
/// never produce a non-isogeny claim.
struct CorpusCase {
  std::string name;
  std::string f;
  std::optional<std::string> h;
  VerdictTag expected = VerdictTag::Inconclusive;
  std::optional<std::string> expected_reason;  // substring of the Inconclusive reason
  std::string citation;
};

/// Document shape: {"cases": [ {name, f, h?, expected, expected_reason?, citation}, ... ]}.
/// Throws CorpusError on malformed documents or unparsable polynomials.
std::vector<CorpusCase> parse_corpus(std::string_view json_text);
std::vector<CorpusCase> load_corpus(const std::filesystem::path& path);

struct CorpusOutcome {
  const CorpusCase* source = nullptr;
  Certificate certificate;
  bool passed = false;
  std::string message;
};

/// Cases run independently (in parallel); results follow input order.
std::vector<CorpusOutcome> run_corpus(const std::vector<CorpusCase>& cases);

}  // namespace nonisog
