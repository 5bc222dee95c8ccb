#pragma once

#include <string>
#include <vector>

#include "ofc/pattern.hpp"

namespace ofc {

// One rewriting step. args are positions in the word the step was applied to.
struct MoveRecord {
  enum class Op { surgery, simplify, sum, split };
  Op op;
  std::vector<int> args;
  Word before;
  Word after;
};

inline const char* move_op_name(MoveRecord::Op op) noexcept {
  switch (op) {
    case MoveRecord::Op::surgery: return "surgery";
    case MoveRecord::Op::simplify: return "simplify";
    case MoveRecord::Op::sum: return "sum";
    case MoveRecord::Op::split: return "split";
  }
  return "unknown";
}

// Full record of a reduction run. Stage markers are indices into steps: the
// pattern held the property after that many steps (-1 = never reached).
struct ReductionTrace {
  std::vector<MoveRecord> steps;
  int idx_non_simplifiable = -1;
  int idx_almost_toral = -1;
  int idx_toral = -1;

  int surgery_count() const {
    int n = 0;
    for (const auto& s : steps)
      if (s.op == MoveRecord::Op::surgery || s.op == MoveRecord::Op::simplify) ++n;
    return n;
  }

  void append(const ReductionTrace& other) {
    steps.insert(steps.end(), other.steps.begin(), other.steps.end());
  }
};

}  // namespace ofc
