// Constructions of arcs and blocking sets in PHG(2,R), each verified before it is returned.
#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "phg/arcs.hpp"
#include "phg/plane.hpp"

namespace phg {

enum class ConstructionId {
  LargeN,
  Q2Minus1,
  Q2Range,
  TwoqRange,
  Q3N7Blocking,
  Q4N8,
  Q4N9,
  Q4N10,
  Q4N11,
  Q4N12,
  Q4N13,
  Q5N15,
  Q5N16,
  Q5N17,
  Q5N18,
  Q5N19,
  HyperovalGalois,
  OvalTruncated,
  DualPassant,
  TriangleSinger,
};

class ConstructionError : public std::runtime_error {
 public:
  enum class Kind { InapplicableRing, ParameterOutOfRange, SubObjectNotFound, VerificationFailed };
  ConstructionError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

// Claimed parameters. For blocking constructions n is the minimum line multiplicity s.
struct ClaimedParams {
  int k = 0;
  int n = 0;
  bool blocking = false;
};

struct Construction {
  ConstructionId id;
  int param = 0;
  Multiset points;
  ClaimedParams claimed;
  ArcReport report;
};

const std::vector<ConstructionId>& all_constructions();
std::string construction_name(ConstructionId id);
std::optional<ConstructionId> construction_from_name(const std::string& name);
bool construction_has_param(ConstructionId id);

// Throws ConstructionError for inapplicable rings or out-of-range parameters.
ClaimedParams claimed_params(const Ring& ring, ConstructionId id, int param = 0);
// Valid parameter values of id for this ring (a single 0 if the id has no parameter).
std::vector<int> parameter_range(const Ring& ring, ConstructionId id);

Construction construct(const Plane& plane, ConstructionId id, int param = 0, uint64_t seed = 0);

// Multiplication by a generator of the Teichmueller units of the cubic extension.
Collineation singer_collineation(const Plane& plane);
Multiset hyperoval_galois(const Plane& plane);

// Segment skeleton: count parallel segments of the given direction (a line
// class through the point class) in each point class, plus fixed points.
struct SegmentPlan {
  int count = 0;
  int direction = -1;
};
struct Skeleton {
  std::vector<SegmentPlan> plan;  // indexed by point class
  Multiset fixed;                 // empty or indexed by point
};
// Chooses the segments so that the result is an (., bound)-arc, or a blocking
// set with every line multiplicity >= bound. Returns nothing if a direction
// admits no arrangement within the budget.
std::optional<Multiset> realize_skeleton(const Plane& plane, const Skeleton& sk, int bound, bool blocking,
                                         uint64_t seed = 0);

}  // namespace phg
