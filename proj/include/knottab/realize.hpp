#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "knottab/code.hpp"

namespace knottab {

class NotRealizable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnknownCrossing : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// Segment l runs from label l to label l+1 (label 2n wraps to 1).
struct LoopStep {
  Label segment = 0;
  bool forward = true;
  // Whether the walk changes strand at the crossing reached by this step.
  bool turn = false;
};

// A closed walk in the projection. Segments may be walked against the
// orientation of the knot; each segment is used at most once; a crossing is
// either passed straight through or is a single vertex where the walk turns.
struct Loop {
  std::vector<LoopStep> steps;  // empty for the 0-crossing circle
  std::uint64_t segments = 0;   // bit l-1 for segment l
  std::uint64_t straight_first = 0;   // bit c: straight along the strand of the smaller label of crossing c
  std::uint64_t straight_second = 0;  // bit c: straight along the strand of the larger label
};

struct Arc {
  Label start = 0;  // under-label where the arc begins
  Label end = 0;    // under-label where the arc ends
};

struct Incidence {
  int in_arc = 0;
  int out_arc = 0;
  int over_arc = 0;
};

struct FaceEdge {
  Label segment = 0;
  bool forward = true;  // traversal agrees with the knot orientation
};

using Face = std::vector<FaceEdge>;

// A realized projection. Crossing c is code.pairs()[c].
struct Diagram {
  PairCode code;
  std::vector<int> signs;
  // +1 when, at crossing c, the later pass crosses the earlier one from right
  // to left (counter-clockwise order: first-out, second-out, first-in, second-in).
  std::vector<int> turning;
  std::vector<Arc> arcs;
  std::vector<Incidence> incidence;
  std::vector<Face> faces;
  std::vector<int> crossing_of;  // label -> crossing index, index 0 unused

  int crossing_count() const { return code.crossing_count(); }
};

bool parity_check(const PairCode& code);

std::vector<Loop> enumerate_loops(const PairCode& code);

// Every two loops share a segment or cross transversally an even number of
// times; crossings where either loop turns are not counted.
bool jordan_test(const PairCode& code);

// Builds the planar embedding. The reflection ambiguity is fixed by making the
// lowest-labelled crossing of every interlacement component positive.
Diagram realize(const PairCode& code);
std::optional<Diagram> try_realize(const PairCode& code);
bool is_realizable(const PairCode& code);

// All planar embeddings up to a global reflection: one per choice of
// reflection for each interlacement component beyond the first.
std::vector<Diagram> all_embeddings(const PairCode& code);

Incidence arcs_at(const Diagram& diagram, int crossing);

}  // namespace knottab
