#include "contactsurg/front.hpp"

#include <cstdlib>
#include <numeric>
#include <sstream>

#include "contactsurg/error.hpp"

namespace contactsurg {

namespace {

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

// Strand-level decomposition of a front word. An arc runs from the left cusp
// that creates it to the right cusp that ends it; crossings do not split arcs.
struct Analysis {
  struct Cusp {
    bool left;
    std::size_t upper;
    std::size_t lower;
  };
  struct Crossing {
    std::size_t over;
    std::size_t under;
  };

  std::vector<Cusp> cusps;
  std::vector<Crossing> crossings;
  std::vector<std::size_t> component;        // per arc
  std::vector<bool> canonical_rightward;     // per arc
  std::vector<std::size_t> first_right_cusp;  // per component, index into `cusps`
  std::vector<std::size_t> right_cusp_event;  // per cusp, event index (right cusps only)
  std::size_t components = 0;
};

std::string describe(const FrontEvent& e, std::size_t index) {
  const char* tag = e.kind == EventKind::LeftCusp ? "L" : e.kind == EventKind::RightCusp ? "R" : "X";
  return std::string(tag) + "(" + std::to_string(e.position) + ") at event " + std::to_string(index);
}

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t a) {
  while (parent[a] != a) {
    parent[a] = parent[parent[a]];
    a = parent[a];
  }
  return a;
}

Analysis analyze(const FrontWord& word) {
  if (word.empty()) throw Error(ErrorKind::EmptyWord, "front word has no events");

  Analysis out;
  std::vector<std::size_t> strands;  // arc id at each position, top first
  std::vector<std::size_t> left_partner;
  std::vector<std::size_t> right_partner;
  std::vector<std::size_t> parent;

  for (std::size_t idx = 0; idx < word.size(); ++idx) {
    const FrontEvent& e = word[idx];
    const auto count = static_cast<long>(strands.size());
    const long i = e.position;
    const bool ok = e.kind == EventKind::LeftCusp ? (i >= 1 && i <= count + 1) : (i >= 1 && i <= count - 1);
    if (!ok) {
      throw Error(ErrorKind::IndexOutOfRange,
                  describe(e, idx) + " with " + std::to_string(count) + " strands");
    }
    const auto at = static_cast<std::size_t>(i - 1);
    switch (e.kind) {
      case EventKind::LeftCusp: {
        const std::size_t upper = parent.size();
        const std::size_t lower = upper + 1;
        parent.push_back(upper);
        parent.push_back(upper);
        left_partner.push_back(lower);
        left_partner.push_back(upper);
        right_partner.push_back(kNone);
        right_partner.push_back(kNone);
        out.cusps.push_back({true, upper, lower});
        out.right_cusp_event.push_back(kNone);
        strands.insert(strands.begin() + static_cast<long>(at), {upper, lower});
        break;
      }
      case EventKind::RightCusp: {
        const std::size_t upper = strands[at];
        const std::size_t lower = strands[at + 1];
        right_partner[upper] = lower;
        right_partner[lower] = upper;
        parent[find_root(parent, upper)] = find_root(parent, lower);
        out.cusps.push_back({false, upper, lower});
        out.right_cusp_event.push_back(idx);
        strands.erase(strands.begin() + static_cast<long>(at), strands.begin() + static_cast<long>(at) + 2);
        break;
      }
      case EventKind::Cross: {
        out.crossings.push_back({strands[at], strands[at + 1]});
        std::swap(strands[at], strands[at + 1]);
        break;
      }
    }
  }
  if (!strands.empty()) {
    throw Error(ErrorKind::UnbalancedCusps, std::to_string(strands.size()) + " strands left open at the end");
  }

  const std::size_t arcs = parent.size();
  std::vector<std::size_t> root_to_component(arcs, kNone);
  std::vector<std::size_t> start_arc;
  out.component.assign(arcs, kNone);
  for (const auto& cusp : out.cusps) {
    if (!cusp.left) continue;
    const std::size_t root = find_root(parent, cusp.upper);
    if (root_to_component[root] == kNone) {
      root_to_component[root] = start_arc.size();
      start_arc.push_back(cusp.upper);
    }
  }
  for (std::size_t a = 0; a < arcs; ++a) out.component[a] = root_to_component[find_root(parent, a)];
  out.components = start_arc.size();

  out.canonical_rightward.assign(arcs, false);
  for (std::size_t start : start_arc) {
    std::size_t cur = start;
    bool rightward = true;
    do {
      out.canonical_rightward[cur] = rightward;
      cur = rightward ? right_partner[cur] : left_partner[cur];
      rightward = !rightward;
    } while (cur != start);
  }

  out.first_right_cusp.assign(out.components, kNone);
  for (std::size_t c = 0; c < out.cusps.size(); ++c) {
    const auto& cusp = out.cusps[c];
    if (cusp.left) continue;
    auto& slot = out.first_right_cusp[out.component[cusp.upper]];
    if (slot == kNone) slot = c;
  }
  return out;
}

struct Directions {
  const Analysis& analysis;
  const OrientedFront& front;

  bool rightward(std::size_t arc) const {
    return analysis.canonical_rightward[arc] != front.reversed(analysis.component[arc]);
  }
  int sign(std::size_t arc) const { return rightward(arc) ? 1 : -1; }
};

void require_component(const OrientedFront& front, std::size_t component) {
  if (component >= front.components()) {
    throw Error(ErrorKind::ComponentOutOfRange,
                "component " + std::to_string(component) + " of " + std::to_string(front.components()));
  }
}

}  // namespace

std::size_t validate(const FrontWord& word) { return analyze(word).components; }

OrientedFront::OrientedFront(FrontWord word) : word_(std::move(word)) {
  reversed_.assign(validate(word_), false);
}

OrientedFront::OrientedFront(FrontWord word, std::vector<bool> reversed)
    : word_(std::move(word)), reversed_(std::move(reversed)) {
  const std::size_t n = validate(word_);
  if (reversed_.size() != n) {
    throw Error(ErrorKind::ComponentOutOfRange, "orientation given for " + std::to_string(reversed_.size()) +
                                                    " components, front has " + std::to_string(n));
  }
}

bool OrientedFront::reversed(std::size_t component) const {
  require_component(*this, component);
  return reversed_[component];
}

OrientedFront OrientedFront::with_reversed(std::size_t component) const {
  require_component(*this, component);
  auto flipped = reversed_;
  flipped[component] = !flipped[component];
  return OrientedFront(word_, std::move(flipped));
}

ComponentInvariants component_invariants(const OrientedFront& front, std::size_t component) {
  require_component(front, component);
  const Analysis analysis = analyze(front.word());
  const Directions dir{analysis, front};

  ComponentInvariants inv;
  for (const auto& cusp : analysis.cusps) {
    if (analysis.component[cusp.upper] != component) continue;
    // Leaving a left cusp (or entering a right cusp) on the lower strand
    // means the lower strand is traversed rightwards.
    const bool lower_rightward = dir.rightward(cusp.lower);
    if (cusp.left) {
      ++inv.left_cusps;
      ++(lower_rightward ? inv.left_down : inv.left_up);
    } else {
      ++inv.right_cusps;
      ++(lower_rightward ? inv.right_up : inv.right_down);
    }
  }
  for (const auto& x : analysis.crossings) {
    if (analysis.component[x.over] != component || analysis.component[x.under] != component) continue;
    ++inv.crossings;
    inv.writhe += dir.sign(x.over) * dir.sign(x.under);
  }
  inv.tb = inv.writhe - inv.cusps() / 2;
  inv.rot = inv.left_down - inv.right_up;
  return inv;
}

std::int64_t thurston_bennequin(const OrientedFront& front, std::size_t component) {
  return component_invariants(front, component).tb;
}

std::int64_t rotation(const OrientedFront& front, std::size_t component) {
  return component_invariants(front, component).rot;
}

std::int64_t linking_number(const OrientedFront& front, std::size_t a, std::size_t b) {
  require_component(front, a);
  require_component(front, b);
  if (a == b) throw Error(ErrorKind::SameComponent, "linking number of component " + std::to_string(a) + " with itself");
  const Analysis analysis = analyze(front.word());
  const Directions dir{analysis, front};
  std::int64_t total = 0;
  for (const auto& x : analysis.crossings) {
    const std::size_t co = analysis.component[x.over];
    const std::size_t cu = analysis.component[x.under];
    if ((co == a && cu == b) || (co == b && cu == a)) total += dir.sign(x.over) * dir.sign(x.under);
  }
  return total / 2;
}

OrientedFront stabilize(const OrientedFront& front, std::size_t component, StabilizationSign sign) {
  require_component(front, component);
  const Analysis analysis = analyze(front.word());
  const Directions dir{analysis, front};
  const std::size_t cusp_index = analysis.first_right_cusp[component];
  const auto& cusp = analysis.cusps[cusp_index];
  const std::size_t event = analysis.right_cusp_event[cusp_index];
  const int upper_position = front.word()[event].position;
  const int j = dir.rightward(cusp.upper) ? upper_position : upper_position + 1;

  // A rightward strand stepping down through a zigzag gains a downward left
  // cusp (rot + 1); stepping up gains an upward right cusp (rot - 1).
  FrontWord word = front.word();
  const auto pos = word.begin() + static_cast<long>(event);
  if (sign == StabilizationSign::Positive) {
    word.insert(pos, {left_cusp(j + 1), right_cusp(j)});
  } else {
    word.insert(pos, {left_cusp(j), right_cusp(j + 1)});
  }
  return OrientedFront(std::move(word), front.orientation());
}

OrientedFront standard_unknot() { return OrientedFront(FrontWord{left_cusp(1), right_cusp(1)}); }

namespace {

bool parity_ok(std::int64_t tb, std::int64_t rot) { return ((rot - tb - 1) % 2) == 0; }

}  // namespace

OrientedFront realize_unknot(std::int64_t tb, std::int64_t rot) {
  if (tb > -1 || tb + std::llabs(rot) > -1) {
    throw Error(ErrorKind::UnrealizablePair, "(tb, rot) = (" + std::to_string(tb) + ", " + std::to_string(rot) +
                                                 ") violates tb + |rot| <= -1");
  }
  if (!parity_ok(tb, rot)) {
    throw Error(ErrorKind::UnrealizablePair, "(tb, rot) = (" + std::to_string(tb) + ", " + std::to_string(rot) +
                                                 ") violates rot = tb + 1 mod 2");
  }
  const std::int64_t n = -tb - 1;
  const std::int64_t positive = (n + rot) / 2;
  OrientedFront front = standard_unknot();
  for (std::int64_t s = 0; s < n; ++s) {
    front = stabilize(front, 0, s < positive ? StabilizationSign::Positive : StabilizationSign::Negative);
  }
  return front;
}

void check_knot_data(const LegendrianKnotData& data) {
  if (data.type != "unknot") return;
  if (data.tb + std::llabs(data.rot) > -1 || !parity_ok(data.tb, data.rot)) {
    throw Error(ErrorKind::UnrealizablePair, "unknot with (tb, rot) = (" + std::to_string(data.tb) + ", " +
                                                 std::to_string(data.rot) + ") is not Legendrian-realizable");
  }
}

std::string to_string(const FrontWord& word) {
  std::ostringstream os;
  for (std::size_t i = 0; i < word.size(); ++i) {
    const auto& e = word[i];
    if (i) os << ' ';
    os << (e.kind == EventKind::LeftCusp ? 'L' : e.kind == EventKind::RightCusp ? 'R' : 'X') << e.position;
  }
  return os.str();
}

}  // namespace contactsurg
