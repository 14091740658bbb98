#pragma once

#include <string>
#include <utility>

namespace char2paley {

// Outcome of a certification routine. A failing verdict always carries the
// first counterexample found, rendered as text.
struct Verdict {
  bool pass = true;
  std::string witness;

  static Verdict ok() { return {}; }
  static Verdict fail(std::string why) { return {false, std::move(why)}; }

  explicit operator bool() const { return pass; }
};

}  // namespace char2paley
