#pragma once

#include <string>
#include <vector>

#include "positroid/dimer.hpp"
#include "positroid/perm.hpp"
#include "positroid/presentation.hpp"

namespace positroid {

enum class AnalysisFormat { Text, Json, Dot };

/// Output of `analyze`. Throws NotConnected.
std::string render_analysis(const DecoratedPermutation& p, AnalysisFormat format);

/// "arrow-defining, X=2 Y=1" or "not arrow-defining".
std::string verdict_text(bool arrow_defining, const RelationCounts& c);

struct OracleQuery {
  bool all = false;
  int v1 = 0;
  int v2 = 0;
  bool relations = false;
};

struct OracleReport {
  std::string text;
  bool relations_ok = true;
};

/// Model must already be valid and consistent.
OracleReport render_oracle(const IndexedModel& m, const OracleQuery& q);

/// One line per violation or bad configuration; empty when the model is fine.
std::vector<std::string> model_problems(const DimerModel& m, bool* structural);

}  // namespace positroid
