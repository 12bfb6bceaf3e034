#pragma once

// Built-in reference arrangements with their documented incidence data.
// Where the computed geometry disagrees with the documented description,
// the discrepancy is recorded in notes and the computed values win.

#include <optional>
#include <string>
#include <vector>

#include "lineadm/arrangement.hpp"

namespace lineadm {

struct CorpusEntry {
  struct DocumentedPoint {
    std::string label;  // "O", "q_1", "p_2'", ...
    ProjPoint point;
    std::vector<std::size_t> incident;
  };

  std::string name;
  std::vector<ProjLine> lines;
  std::optional<std::size_t> infinity_line;
  std::vector<DocumentedPoint> documented_multiple_points;
  std::size_t documented_k = 0;
  std::vector<std::string> notes;

  Arrangement build() const;
};

const std::vector<std::string>& corpus_names();

// Throws std::invalid_argument on an unknown name.
const CorpusEntry& corpus_get(const std::string& name);

}  // namespace lineadm
