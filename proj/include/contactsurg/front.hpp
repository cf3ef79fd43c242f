#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace contactsurg {

enum class EventKind { LeftCusp, RightCusp, Cross };

/// One x-ordered event of a generic front. Positions count strands from 1 at
/// the top. LeftCusp(i) creates strands i and i+1, RightCusp(i) joins
/// strands i and i+1, Cross(i) swaps them.
struct FrontEvent {
  EventKind kind;
  int position;

  friend bool operator==(const FrontEvent&, const FrontEvent&) = default;
};

inline FrontEvent left_cusp(int i) { return {EventKind::LeftCusp, i}; }
inline FrontEvent right_cusp(int i) { return {EventKind::RightCusp, i}; }
inline FrontEvent cross(int i) { return {EventKind::Cross, i}; }

using FrontWord = std::vector<FrontEvent>;

/// Checks every event index against the running strand count. Returns the
/// number of closed components. Throws EmptyWord, IndexOutOfRange or
/// UnbalancedCusps.
std::size_t validate(const FrontWord& word);

/// A validated front with one traversal direction per component.
///
/// Components are numbered by their first left cusp in event order. The
/// canonical orientation of a component leaves that first left cusp along
/// its upper strand; `reversed(c)` flips it.
class OrientedFront {
 public:
  explicit OrientedFront(FrontWord word);
  OrientedFront(FrontWord word, std::vector<bool> reversed);

  const FrontWord& word() const { return word_; }
  std::size_t components() const { return reversed_.size(); }
  bool reversed(std::size_t component) const;
  const std::vector<bool>& orientation() const { return reversed_; }

  OrientedFront with_reversed(std::size_t component) const;

  friend bool operator==(const OrientedFront&, const OrientedFront&) = default;

 private:
  FrontWord word_;
  std::vector<bool> reversed_;
};

/// Classical data of one component. Cusp direction is read off the
/// traversal: entering a cusp on its upper strand and leaving on the lower
/// one means the cusp is oriented downwards.
struct ComponentInvariants {
  std::int64_t tb = 0;
  std::int64_t rot = 0;
  std::int64_t writhe = 0;
  std::int64_t left_cusps = 0;
  std::int64_t right_cusps = 0;
  std::int64_t left_down = 0;   // lambda_-
  std::int64_t left_up = 0;
  std::int64_t right_down = 0;
  std::int64_t right_up = 0;    // rho_+
  std::int64_t crossings = 0;   // self-crossings

  std::int64_t cusps() const { return left_cusps + right_cusps; }
};

ComponentInvariants component_invariants(const OrientedFront& front, std::size_t component);

/// writhe - cusps/2. The front strand at a crossing is the one descending
/// from position i to i+1.
std::int64_t thurston_bennequin(const OrientedFront& front, std::size_t component);

/// lambda_- - rho_+.
std::int64_t rotation(const OrientedFront& front, std::size_t component);

/// Half the signed count of crossings between two distinct components.
std::int64_t linking_number(const OrientedFront& front, std::size_t a, std::size_t b);

enum class StabilizationSign { Positive, Negative };

/// Adds one zigzag to `component`: tb drops by 1 and rot moves by +1
/// (Positive) or -1 (Negative). The zigzag is inserted on the strand that
/// runs into the component's first right cusp.
OrientedFront stabilize(const OrientedFront& front, std::size_t component, StabilizationSign sign);

/// Two-cusp unknot, tb = -1, rot = 0.
OrientedFront standard_unknot();

/// Standard unknot with (-tb-1) zigzags, all placed before its right cusp,
/// positive ones first. Throws UnrealizablePair on Bennequin or parity failure.
OrientedFront realize_unknot(std::int64_t tb, std::int64_t rot);

/// Abstract Legendrian knot data used when no front is supplied.
struct LegendrianKnotData {
  std::int64_t tb = -1;
  std::int64_t rot = 0;
  std::string type = "unknot";

  friend bool operator==(const LegendrianKnotData&, const LegendrianKnotData&) = default;
};

/// For type "unknot": tb + |rot| <= -1 and rot = tb + 1 mod 2, else
/// UnrealizablePair. Other types are accepted as-is.
void check_knot_data(const LegendrianKnotData& data);

std::string to_string(const FrontWord& word);

}  // namespace contactsurg
