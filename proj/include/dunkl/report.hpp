#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace dunkl {

struct CheckEntry {
  std::string name;
  bool pass = false;
  std::string residual = "0";  // polynomial text; "0" when clean
};

// Structured outcome of one verification case. Rendering is byte-stable for
// identical inputs.
struct VerificationReport {
  std::string case_id;
  std::vector<CheckEntry> checks;
  std::uint64_t rand_seed = 0;

  void add(std::string name, bool pass, std::string residual = "0");
  std::size_t pass_count() const;
  std::size_t fail_count() const;
  bool all_pass() const { return fail_count() == 0; }
  void append(const VerificationReport& other);  // absorbs entries, keeps id
};

std::string render_text(const std::vector<VerificationReport>& reports);
std::string render_json(const std::vector<VerificationReport>& reports);

}  // namespace dunkl
