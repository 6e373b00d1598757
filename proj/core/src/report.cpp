#include "onecob/report.hpp"

namespace onecob {

void VerifyReport::merge(const VerifyReport& other) {
  checked += other.checked;
  passed += other.passed;
  failed += other.failed;
  for (const auto& cex : other.counterexamples) {
    if (!want_counterexample()) break;
    counterexamples.push_back(cex);
  }
}

}  // namespace onecob
